//! Graded noncommutative polynomial arithmetic over truncated ħ-series,
//! normal-ordered in a PBW basis by a table of rewrite rules.
//!
//! A rule `b·a → (−1)^{|a||b|} e^{αħ} a·b + tail` is stored for every
//! out-of-order pair of generators. Products are built letter by letter:
//! appending `g` to a normal monomial `p·x` with `x > g` uses
//! `p·x·g = lead·(p·g)·x + p·tail`, memoised per `(monomial, letter)`.
//! Termination holds because each application either lowers the word in
//! degree-lexicographic order or raises the power of ħ.

mod algebra;
mod confluence;
mod element;
mod format;
mod funcs;
mod monomial;
mod table;
mod tensor;
mod words;

pub use algebra::{Algebra, RewriteRule};
pub use confluence::{check_local_confluence, ConfluenceReport, OverlapFailure};
pub use element::Element;
pub use format::{load_definition, save_definition, Definition};
pub use funcs::{compose, exp_element, qexp_element, AlgebraValued};
pub use monomial::Monomial;
pub use table::{Generator, GeneratorTable, Parity};
pub use tensor::{koszul_sign, Slots, TensorElement};
pub use words::{reduce_word, reduce_word_by};

pub use scalar_series;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("no rewrite rule for {b}·{a}")]
    MissingRule { b: String, a: String },
    #[error("tensor ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("argument has terms of hbar-order zero")]
    NonNilpotentOrderZero,
    #[error("rewriting did not terminate within the step bound")]
    NonTermination,
    #[error("generator name `{0}` used twice")]
    NameCollision(String),
    #[error("invalid definition: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] scalar_series::SeriesError),
}
