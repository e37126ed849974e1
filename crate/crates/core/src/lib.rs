//! Finite abstract simplicial complexes with exact homology over fields,
//! nerve theorems for covers, and Sperner/Meshulam type checkers on coloured
//! complexes.

pub mod chain;
pub mod coloured;
pub mod complex;
pub mod constructive;
pub mod document;
pub mod error;
pub mod field;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod nerve;
pub mod pseudomanifold;
pub mod report;
pub mod search;
pub mod sperner;
pub mod witnesses;

pub use chain::Chain;
pub use coloured::ColouredComplex;
pub use complex::{Simplex, SimplicialComplex, Subdivision};
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use homology::{reduced_betti, BettiVector};
pub use nerve::Cover;
pub use report::Verdict;
