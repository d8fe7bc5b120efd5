//! Plain-text code definitions.
//!
//! ```text
//! kind css
//! m 2
//! id 1
//! A  ZI
//! B  ZZ
//! ...
//! D' IZ
//! ```
//!
//! The header gives the kind (`css` or `noncss`), the qubits per site and,
//! optionally, the catalog id the file claims to describe. Then one line per
//! corner in the order `A B C D A' B' C' D'`, each a label and a site
//! operator. For CSS codes the operator is the Z-type generator; the X-type
//! generator is derived from it. Blank lines and `#` comments are ignored.

use cubic_core::cube::LABELS;
use cubic_core::{CubicCode, GeneratorSpec, SiteOp};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CodeFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header field `{0}`")]
    MissingHeader(&'static str),
    #[error("expected 8 corner lines, found {0}")]
    CornerCount(usize),
    #[error("CSS generator must be Z-type on two qubits per site")]
    NotCss,
    #[error("corners act on {found} qubits, header says {declared}")]
    QubitMismatch { declared: usize, found: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> CodeFileError {
    CodeFileError::Syntax { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<CubicCode, CodeFileError> {
    let mut css = None;
    let mut m = None;
    let mut id = None;
    let mut corners: Vec<SiteOp> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let key = words.next().expect("nonempty line");
        let value = words.next().ok_or_else(|| syntax(line_no, format!("`{key}` needs a value")))?;
        if words.next().is_some() {
            return Err(syntax(line_no, "trailing text"));
        }
        match key {
            "kind" => {
                css = Some(match value {
                    "css" => true,
                    "noncss" => false,
                    other => return Err(syntax(line_no, format!("unknown kind `{other}`"))),
                })
            }
            "m" => m = Some(value.parse::<usize>().map_err(|_| syntax(line_no, "m must be a positive integer"))?),
            "id" => id = Some(value.parse::<u8>().map_err(|_| syntax(line_no, "id must be an integer"))?),
            label => {
                let expected = LABELS.get(corners.len()).ok_or(CodeFileError::CornerCount(corners.len() + 1))?;
                if label != *expected {
                    return Err(syntax(line_no, format!("expected corner {expected}, found `{label}`")));
                }
                let op = SiteOp::parse(value).map_err(|e| syntax(line_no, e.to_string()))?;
                corners.push(op);
            }
        }
    }
    let css = css.ok_or(CodeFileError::MissingHeader("kind"))?;
    let m = m.ok_or(CodeFileError::MissingHeader("m"))?;
    let corners: [SiteOp; 8] = corners.try_into().map_err(|v: Vec<SiteOp>| CodeFileError::CornerCount(v.len()))?;
    if let Some(bad) = corners.iter().find(|c| c.m() != m) {
        return Err(CodeFileError::QubitMismatch { declared: m, found: bad.m() });
    }
    let g = GeneratorSpec::new(corners);
    let name = id.map_or_else(|| "custom".to_string(), |i| format!("Code {i}"));
    let mut code = if css {
        if m != 2 || !g.is_z_type() {
            return Err(CodeFileError::NotCss);
        }
        CubicCode::css(name, g)
    } else {
        CubicCode::non_css(name, g)
    };
    code.id = id;
    Ok(code)
}

pub fn emit(code: &CubicCode) -> String {
    let mut out = format!("kind {}\nm {}\n", if code.css { "css" } else { "noncss" }, code.m());
    if let Some(id) = code.id {
        out.push_str(&format!("id {id}\n"));
    }
    for (label, op) in LABELS.iter().zip(&code.primary().corners) {
        out.push_str(&format!("{label:<3}{op}\n"));
    }
    out
}

/// The generator as one catalog row: eight operators separated by spaces.
pub fn table_row(code: &CubicCode) -> String {
    code.primary().to_string()
}
