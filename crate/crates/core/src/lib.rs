//! Exact construction, testing and classification of 2-dimensional
//! endo-commutative algebras over prime fields and the rationals.
//!
//! An algebra on the basis `{e, f}` is a [`StructureMatrix`]; it is
//! endo-commutative when `x²y² = (xy)²` for all `x, y` ([`ec`]). The straight
//! family `S(p, q, a, b, c, d)` ([`StraightParams`]) is split into types I–III
//! by which of `p, a, c` vanish, and type I is classified up to isomorphism
//! by the cube classes of `K*` ([`cubes`], [`classify`]).
//!
//! ```
//! use ecalg::classify::type1_classification;
//! use ecalg::Gf;
//!
//! let report = type1_classification(&Gf::new(7)?)?;
//! assert_eq!(report.representatives(), vec![1, 2]);
//! # Ok::<(), ecalg::Error>(())
//! ```

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod cubes;
pub mod ec;
pub mod error;
pub mod field;
pub mod input;
pub mod iso;
pub mod linalg;
pub mod report;
pub mod suite;

pub use algebra::{Element, StraightParams, StructureMatrix, TildeMatrix, TransformMatrix};
pub use error::{Error, Result};
pub use field::{Field, FieldDescriptor, Gf, Rationals};
