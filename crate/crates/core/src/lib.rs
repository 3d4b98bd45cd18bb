//! Exact-arithmetic building blocks for verifying congruences between
//! modular forms modulo powers of 2.
//!
//! Everything here is computed over unbounded integers or exact rationals;
//! there is no floating point anywhere in the crate. The modules are:
//!
//! - [`qseries`]: truncated q-expansions with big-integer coefficients and
//!   the classical forms E4, E6, Delta built from scratch.
//! - [`hecke`]: level-1 Hecke operators, weak-eigenform verdicts, and
//!   coefficient-wise congruence checks modulo 2^m.
//! - [`squares`]: Jacobi symbols, sums of three squares (closed form and
//!   brute force), and the mod-8 rule for prime coefficients.
//! - [`field`]: a minimal exact-field abstraction with prime fields and
//!   their quadratic extensions.
//! - [`tower`]: degree-8 towers of quadratic extensions of Q and their
//!   automorphism groups.
//! - [`elliptic`]: short Weierstrass group law over any exact field, point
//!   counting, traces of Frobenius, newform coefficients, and quadratic
//!   twists.
//! - [`galois`]: the dihedral group D4, its embeddings into GL2(Z/4), and
//!   Frobenius classes computed from residue symbols.

pub mod elliptic;
pub mod field;
pub mod galois;
pub mod hecke;
pub mod qseries;
pub mod squares;
pub mod tower;

pub use elliptic::{CurveOverQ, CurvePoint, NewformCoefficients, WeierstrassCurve};
pub use galois::{D4Element, FrobeniusClass, GaloisRepresentation, Mat2Z4};
pub use hecke::{CoefficientSource, CongruenceReport, WeakEigenformReport};
pub use qseries::{QExpansion, ResidueSeries};
pub use tower::{FieldAutomorphism, Tower, TowerElement};
