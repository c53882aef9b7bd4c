//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;

/// Exact rational coefficients, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
pub(crate) mod strategies {
    use super::*;
    use proptest::prelude::*;

    /// Random sparse polynomial, homogeneous of the given degree.
    pub fn homogeneous(nvars: usize, degree: u32) -> impl Strategy<Value = Polynomial> {
        let monos = Monomial::all_of_degree(nvars, degree);
        let n = monos.len();
        proptest::collection::vec((0..n, -5i64..=5, 1i64..=3), 0..6).prop_map(move |ts| {
            let terms = ts.into_iter().map(|(i, a, b)| (monos[i].clone(), Rational::new(a.into(), b.into()))).collect();
            Polynomial::from_terms(nvars, terms)
        })
    }

    /// Random sparse polynomial of mixed degree.
    pub fn any_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u16..3, nvars), -4i64..=4), 0..5).prop_map(move |ts| {
            let terms = ts.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), rational(c))).collect();
            Polynomial::from_terms(nvars, terms)
        })
    }
}
