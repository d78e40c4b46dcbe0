//! Kazhdan–Lusztig combinatorics of finite Coxeter groups and a homological
//! oracle for the principal block of category O built on top of it.
//!
//! The layers are, bottom up: [`laurent`] (coefficients in `ℤ[v,v⁻¹]`),
//! [`coxeter`] (the group), [`hecke`] (standard and KL bases, structure
//! constants), [`cells`] (KL preorders, `a` and `b` functions) and
//! [`homcat`] (projective dimensions, coresolution tables, certificates).
//! [`fixtures`] holds the reference tables for `A2` and the diff harness.

mod bits;
pub mod cells;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod hecke;
pub mod homcat;
pub mod laurent;

pub use bits::BitMatrix;
pub use cells::{CellData, KlSide};
pub use coxeter::{CoxeterSystem, Element, Extreme, GeneratorSubset, Quotient, Side, DEFAULT_CAP};
pub use error::{Error, Result};
pub use hecke::{Basis, HeckeElt, KlTable};
pub use homcat::Engine;
pub use laurent::{Degree, LaurentPoly};
