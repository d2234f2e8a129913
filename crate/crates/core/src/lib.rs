//! Vexillary double β-Edelman–Greene coefficients as Graham-positive sums of
//! tableau-indexed monomials, with the enumeration and evaluation machinery
//! needed to check them.

pub mod combinatorics;
pub mod edelman_greene;
pub mod error;
pub mod grothendieck;
pub mod permutations;
pub mod ring;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{Flag, Partition, SkewShape};
pub use edelman_greene::{j_coefficient, j_of_permutation, j_report, PipelineContext};
pub use error::{EgcError, Result};
pub use permutations::Permutation;
pub use ring::{EvaluationPoint, Fp, GrahamSum};
pub use tableaux::{EnumSpec, RowStrictDecreasingTableau, SetValuedTableau, Sign};
pub use verify::{Report, Suite, VerifyConfig};
