//! Knot-group computations over small finite fields.
//!
//! The crate revolves around three pieces of machinery:
//!
//! * exact linear algebra over `F_p` and Laurent polynomial arithmetic
//!   ([`algebra`]),
//! * finitely presented groups, Fox free differential calculus and the
//!   twisted Alexander polynomial of a knot group presentation twisted by an
//!   `SL(n, F_p)` representation ([`presentation`], [`fox`], [`tap`]),
//! * a complete enumeration of `SL(2, F_p)` representations of a presentation
//!   up to conjugacy ([`reps`]), which feeds the divisibility obstruction to
//!   the existence of a meridional epimorphism between two knot groups.
//!
//! Two further modules cover the supporting cast: [`twistknot`] builds the
//! twist-knot family `J(2,2q)`, its pseudo-meridian and the associated Riley
//! and trace-gap polynomials, and [`wordprob`] hosts word-problem oracles
//! (an exact decider for the trefoil group and Todd-Coxeter coset
//! enumeration).

pub mod algebra;
pub mod fixtures;
pub mod fox;
pub mod presentation;
pub mod reps;
pub mod tap;
pub mod twistknot;
pub mod wordprob;

mod error;

pub use error::Error;

/// Version tag stamped into every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

pub type Result<T> = std::result::Result<T, Error>;
