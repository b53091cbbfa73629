//! Exact-arithmetic toolkit for data-local and local maximally recoverable
//! codes (MRC): finite-field linear algebra, brute-force enumeration
//! oracles, matroid rank/size statistics, the Tutte / Greene / Britz /
//! MacWilliams transforms, closed-form weight and support-weight
//! enumerators, and seeded construction of verified MRC instances.
//!
//! Everything is exact: field arithmetic is table-driven, counts and
//! polynomial coefficients are arbitrary-precision integers, and every
//! closed form has at least one independent route (transform or brute
//! force) it is tested against.

pub mod code;
pub mod combinat;
pub mod error;
pub mod formulas;
pub mod gf;
pub mod matroid;
pub mod mrc;
pub mod tutte;

mod par;

pub use code::{LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf::{FieldElement, FieldSpec};
pub use matroid::{Matroid, MrcParams, MrcVariant, RankSizeDistribution};
pub use mrc::{construct_mrc, verify_data_local_mrc, verify_local_mrc, verify_mrc, MrcInstance};
pub use tutte::BivariatePolynomial;
