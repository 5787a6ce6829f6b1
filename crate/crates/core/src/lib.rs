//! Exact arithmetic for polynomial power sequences `f^n - g^n`, `f^n - 1`
//! and polynomial Lucas sequences over quadratic extensions, together with
//! primitive-divisor analysis and a harness that checks the divisibility
//! and primitive-divisor theorems for these sequences on concrete inputs.

pub mod cyclotomic;
pub mod error;
pub mod factor;
pub mod fields;
pub mod poly;
pub mod primitive;
pub mod sequences;
pub mod verification;

pub use error::{Error, Result};
pub use factor::{factor, is_irreducible, Factorization, RngState};
pub use fields::{Field, FieldDescriptor, PrimeField, QuadExt, Rationals, Scalar};
pub use poly::{parse_poly, Poly};
pub use sequences::{LucasTerms, SequenceKind, SequenceSpec};
