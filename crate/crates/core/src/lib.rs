//! Twisted link diagrams and their invariants.
//!
//! A diagram is read from the line-based TLD format into a
//! [`PlanarDiagram`](diagram::PlanarDiagram), checked with
//! [`validate`](diagram::validate), and projected to an
//! [`AbstractLink`](diagram::AbstractLink), which is the input to every
//! invariant: the twisted bracket and Jones polynomials ([`bracket`]), face
//! structure and carrier surface ([`faces`]) and the twisted link group
//! ([`group`]). The [`moves`] module rewrites planar diagrams by the ten
//! extended Reidemeister moves.

pub mod bracket;
pub mod cli;
pub mod diagram;
pub mod faces;
pub mod gen;
pub mod group;
pub mod moves;
pub mod poly;
pub mod report;
mod ribbon;

pub use diagram::{AbstractLink, PlanarDiagram};
pub use poly::LaurentBipoly;

/// Errors raised by library operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] diagram::ParseError),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("state space too large: {crossings} crossings exceeds cap {cap}")]
    StateSpaceTooLarge { crossings: usize, cap: usize },
    #[error("state index {state} out of range for {crossings} crossings")]
    StateOutOfRange { state: u64, crossings: usize },
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("stale move site: {0}")]
    StaleSite(String),
    #[error("search exhausted: frontier exceeded {0} diagrams")]
    SearchExhausted(usize),
    #[error("too many generators: {generators} exceeds cap {cap}")]
    TooManyGenerators { generators: usize, cap: usize },
    #[error("degree {0} not supported (1..=5)")]
    UnsupportedDegree(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
