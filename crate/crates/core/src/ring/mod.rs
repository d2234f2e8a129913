//! Prime-field arithmetic, the ⊖ operation, Graham-positive sums and sparse polynomials.

pub mod field;
pub mod graham;
pub mod point;
pub mod poly;

pub use field::{is_prime, Fp, DEFAULT_PRIME};
pub use graham::{
    eval_graham, eval_graham_normalized, omega1_factor, prec, GrahamFactor, GrahamMonomial, GrahamSum,
};
pub use point::{ominus, ominus_unary, EvaluationPoint};
pub use poly::{divided_difference, isobaric, isobaric_next, SparsePoly, MAX_VARS};
