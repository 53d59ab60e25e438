//! Combinatorics engine for crystals of decreasing reduced factorizations.
//!
//! The library builds `gl(n)`, `q(n)`, and extended `q(n)+` crystal structures on
//! (primed) decreasing factorizations of reduced words, fpf-involution words, and
//! primed involution words; computes key, P-key, Q-key, Schubert, and involution
//! Schubert polynomials; decomposes bounded factorization crystals into Demazure
//! pieces; and drives exhaustive verification campaigns over involution families.
//!
//! Entry points:
//! - [`words`], [`shapes`]: letters, primed words, weak compositions, partitions, flags.
//! - [`perm`], [`inv`]: permutations of `Z`, involutions, word enumeration, atoms.
//! - [`poly`]: exact sparse polynomials and divided-difference calculus.
//! - [`ck`]: Coxeter-Knuth relation families and class enumeration.
//! - [`tableau`]: straight and shifted tableaux, reduced-tableau extraction.
//! - [`crystal`]: crystal operators, graphs, canonical forms, DOT/JSON export.
//! - [`demazure`]: Demazure operators, bounded subsets, decomposition matching.
//! - [`verify`]: conjecture verification campaigns and the worked-example selftest.
//!
//! The `workbench` binary exposes the same functionality as a small CLI; the
//! `examples/` directory has one runnable example per major capability.

pub mod cache;
pub mod ck;
pub mod cli;
pub mod crystal;
pub mod demazure;
pub mod figures;
pub mod inv;
pub mod perm;
pub mod poly;
pub mod shapes;
pub mod tableau;
pub mod tensor;
pub mod verify;
pub mod words;

use thiserror::Error;

/// Default cap on word length for exhaustive enumerations.
pub const DEFAULT_LENGTH_CAP: usize = 16;

/// Default cap on the number of elements produced by a single enumeration.
pub const DEFAULT_SIZE_CAP: usize = 50_000_000;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("input set not closed under the relation family: {0}")]
    NotClosed(String),
    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),
    #[error("braid violation (implementation bug): {0}")]
    BraidViolation(String),
    #[error("crystal context error: {0}")]
    Context(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
