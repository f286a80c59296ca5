//! Exact engine for discovering sharp ranges of one parameter in
//! semialgebraic systems, built from discriminant varieties (via Groebner
//! bases), one-dimensional cell decomposition, and per-cell zero-dimensional
//! real satisfiability.

pub mod dv;
pub mod error;
pub mod explore;
pub mod geometry;
pub mod groebner;
pub mod monomial;
pub mod multipoly;
pub mod parser;
pub mod problem;
pub mod rat;
pub mod realalg;
pub mod sturm;
pub mod unipoly;
pub mod var;
pub mod zdsat;

pub use error::{Error, Result};
pub use multipoly::MultiPoly;
pub use rat::Rat;
pub use realalg::RealAlgebraicNumber;
pub use unipoly::UniPoly;
pub use var::VarSet;
