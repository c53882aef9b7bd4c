//! Exact computer algebra for fat point schemes in projective space:
//! Gröbner bases, Hilbert functions, and the modules of Kähler differential forms.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod kaehler;
pub mod linalg;
pub mod polyring;
pub mod scheme;
pub mod verify;

pub use error::{Error, Result};
pub use groebner::{normal_form, FreeModule, FreeModuleElement, GroebnerBasis, Ideal, Submodule};
pub use hilbert::{hilbert_function, regularity_index, HilbertFunction};
pub use polyring::{Monomial, MonomialOrder, Polynomial, Rational};
pub use scheme::{FatPointScheme, ProjectivePoint};
