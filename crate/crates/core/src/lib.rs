//! Exact computations with the defining ideals of space monomial curves.
//!
//! A space monomial curve `t -> (t^n1, t^n2, t^n3)` has a defining prime `P`
//! generated by the 2x2 minors `F, G, H` of a matrix of variable powers. This
//! crate builds that matrix from the weights, constructs generating sets of the
//! symbolic powers `P^(l)`, and decides containments such as
//! `P^(2n-1) ⊆ m P^n` by exact linear algebra on weighted-degree components,
//! returning cofactor certificates or refutation witnesses.

pub mod colength;
pub mod curve;
pub mod error;
pub mod field;
pub mod harbourne;
pub mod idealexpr;
mod linalg;
pub mod membership;
pub mod poly;
pub mod report;
pub mod sympow;

pub use error::{Error, Result};
pub use field::FieldSpec;
pub use poly::{Monomial, Poly, Var, Weights};
