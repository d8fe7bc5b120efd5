//! Batch front end for `cubic-core`: code-definition files, reports in TSV
//! or JSON, and one function per command.

pub mod codefile;
pub mod commands;
pub mod config;
pub mod report;

use cubic_core::error::{LatticeError, PauliError, StringsError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("no catalog code with id {0}")]
    UnknownCode(u8),
    #[error("{0}: {1}")]
    Io(String, String),
    #[error("{0}: {1}")]
    CodeFile(String, codefile::CodeFileError),
    #[error("operator: {0}")]
    Operator(#[from] PauliError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Strings(#[from] StringsError),
}

/// Applies `f` to every item on up to `threads` scoped workers and returns
/// the results in input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let f = &f;
    let mut indexed: Vec<(usize, R)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || items.iter().enumerate().skip(t).step_by(threads).map(|(i, x)| (i, f(x))).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    indexed.sort_by_key(|(i, _)| *i);
    indexed.into_iter().map(|(_, r)| r).collect()
}
