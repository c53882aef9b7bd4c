use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial over the rationals in `X_0..X_{nvars-1}`.
///
/// Terms are kept sorted by decreasing degrevlex order, coefficients nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Polynomial::from_terms(nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Polynomial { nvars, terms: vec![(Monomial::var(nvars, index), Rational::one())] }
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        Polynomial::from_terms(nvars, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.compare(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn from_integer_terms(nvars: usize, terms: Vec<(Monomial, BigInt)>) -> Self {
        Polynomial::from_terms(nvars, terms.into_iter().map(|(m, c)| (m, Rational::from_integer(c))).collect())
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.nvars));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Polynomial::from_terms(self.nvars, acc.into_iter().collect()))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = MonomialOrder::DegRevLex;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other.terms.len() {
                std::cmp::Ordering::Greater
            } else {
                order.compare(&self.terms[i].0, &other.terms[j].0)
            };
            match ord {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Smallest positive rational multiple with coprime integer coefficients.
    pub fn primitive_integer_terms(&self) -> Vec<(Monomial, BigInt)> {
        use num_integer::Integer;
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<(Monomial, BigInt)> =
            self.terms.iter().map(|(m, c)| (m.clone(), c.numer() * (&lcm / c.denom()))).collect();
        let mut g = BigInt::zero();
        for (_, c) in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            if ints[0].1.is_negative() {
                g = -g;
            }
            for (_, c) in ints.iter_mut() {
                *c = &*c / &g;
            }
        }
        ints
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        assert!(var < self.nvars, "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let mut exps: Vec<u16> = m.exponents().to_vec();
                exps[var] -= 1;
                (Monomial::from_exponents(&exps), c * Rational::from_integer(BigInt::from(e)))
            })
            .collect();
        Polynomial::from_terms(self.nvars, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "point length must match the ambient variable count");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow::pow(point[i].clone(), e as usize);
                }
            }
            acc += v;
        }
        acc
    }

    /// Exact quotient `self / divisor` when the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.terms.first()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first() {
            let q = m.div(lm)?;
            let qc = c / lc;
            let step = divisor.mul_monomial(&q).scale(&qc);
            quotient.push((q, qc));
            rest = rest.merge(&step, true);
        }
        Some(Polynomial::from_terms(self.nvars, quotient))
    }

    /// Adds a trailing variable with exponent 0 in every term.
    pub(crate) fn extend_vars(&self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.extend(0), c.clone())).collect();
        Polynomial { nvars: self.nvars + 1, terms }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ambient mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ambient mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ambient mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, 3).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn add_cancels() {
        assert_eq!(&p("X0*X2 - X2^2") + &p("X2^2"), p("X0*X2"));
        assert_eq!(&p("X1") + &Polynomial::zero(3), p("X1"));
        assert_eq!(&p("X1") + &p("X1"), p("2X1"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("X1") * &p("X2"), p("X1*X2"));
        assert_eq!(&p("X1 - X0") * &p("X1 + X0"), p("X1^2 - X0^2"));
        assert!((&p("X0 + 3X1") * &Polynomial::zero(3)).is_zero());
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Polynomial::var(3, 0);
        let b = Polynomial::var(4, 0);
        assert_eq!(a.checked_add(&b), Err(Error::AmbientMismatch { left: 3, right: 4 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("X0*X2 - X2^2").partial_derivative(2), p("X0 - 2X2"));
        assert!(p("X1").partial_derivative(2).is_zero());
        let f = p("X0*X2 - X2^2");
        let mut euler = Polynomial::zero(3);
        for i in 0..3 {
            euler = &euler + &(&Polynomial::var(3, i) * &f.partial_derivative(i));
        }
        assert_eq!(euler, f.scale(&q(2)));
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("X0*X2 - X2^2").evaluate(&[q(1), q(0), q(1)]), q(0));
        assert_eq!(p("X1").evaluate(&[q(1), q(0), q(0)]), q(0));
        assert_eq!(p("X0").evaluate(&[q(1), q(2), q(3)]), q(1));
    }

    #[test]
    fn exact_division() {
        let f = &p("X1 - X0") * &p("X2^2 + 3X0*X1");
        assert_eq!(f.div_exact(&p("X1 - X0")), Some(p("X2^2 + 3X0*X1")));
        assert_eq!(p("X1^2 + X0").div_exact(&p("X1")), None);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p("X0X2 - X2^2").to_string(), "X0*X2 - X2^2");
        assert_eq!(p("-1/2 X1 + 3").to_string(), "-1/2*X1 + 3");
        assert_eq!(Polynomial::zero(3).to_string(), "0");
    }
}
