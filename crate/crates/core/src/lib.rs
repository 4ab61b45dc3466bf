//! Exact computation of Grothendieck, Schubert, Lascoux and
//! Castelnuovo-Mumford polynomials together with the diagram, bubbling and
//! pipe-dream models that produce them.

pub mod bpd;
pub mod bubbling;
pub mod convexity;
pub mod diagram;
pub mod error;
pub mod orthodontia;
pub mod permutation;
pub mod polynomial;
pub mod weyl;

pub use diagram::{Cell, Diagram, WeakComposition};
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use polynomial::MultiPolynomial;
