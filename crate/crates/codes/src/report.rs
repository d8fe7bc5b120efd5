//! Tabular output shared by every command.

use serde::Serialize;

/// Bumped whenever columns or field meanings change.
pub const SCHEMA: &str = "cubic-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub notes: Vec<String>,
    /// Every check the command performed passed.
    pub ok: bool,
}

impl Report {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        Self {
            schema: SCHEMA,
            command: command.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
            ok: true,
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Records a check; a failure clears `ok`.
    pub fn check(&mut self, pass: bool) -> bool {
        self.ok &= pass;
        pass
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = String::new();
                for n in &self.notes {
                    s.push_str("# ");
                    s.push_str(n);
                    s.push('\n');
                }
                s.push_str(&self.columns.join("\t"));
                s.push('\n');
                for r in &self.rows {
                    s.push_str(&r.join("\t"));
                    s.push('\n');
                }
                s.push_str(if self.ok { "# status\tok\n" } else { "# status\tFAIL\n" });
                s
            }
        }
    }
}

pub fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}
