use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u16; 6]>;

/// A power product `X_0^e_0 * ... * X_n^e_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps: SmallVec::from_slice(exps), degree }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    /// Total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        Monomial::from_exponents(&exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect();
        Monomial::from_exponents(&exps)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    /// Same monomial with one extra variable appended at exponent `e`.
    pub(crate) fn extend(&self, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(e);
        Monomial { exps, degree: self.degree + e as u32 }
    }

    /// Drops the last variable.
    pub(crate) fn truncate_last(&self) -> Monomial {
        let exps: Exponents = self.exps[..self.exps.len() - 1].iter().copied().collect();
        Monomial::from_exponents(&exps)
    }

    /// All monomials of total degree `d` in `nvars` variables, largest first under degrevlex.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps: Exponents = SmallVec::from_elem(0, nvars);
        fn rec(i: usize, left: u32, exps: &mut Exponents, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left as u16;
                out.push(Monomial::from_exponents(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e as u16;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| MonomialOrder::DegRevLex.compare(b, a));
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "X{}", i)?;
            } else {
                write!(f, "X{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}

/// Monomial orders used by the library.
///
/// `DegRevLex` is the default with `X_0 > X_1 > ... > X_n`. `Elimination`
/// treats the variable `aux` as having weight zero: monomials are compared by
/// their degree in the remaining variables, then by the exponent of `aux`,
/// then by degrevlex on the remaining variables. For inputs homogeneous in the
/// remaining variables this eliminates `aux`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Elimination {
        aux: usize,
    },
}

impl MonomialOrder {
    /// Degree used for grading under this order.
    #[inline]
    pub fn degree(&self, m: &Monomial) -> u32 {
        match *self {
            MonomialOrder::DegRevLex => m.degree,
            MonomialOrder::Elimination { aux } => m.degree - m.exps[aux] as u32,
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => revlex(&a.exps, &b.exps, None),
                o => o,
            },
            MonomialOrder::Elimination { aux } => {
                let da = a.degree - a.exps[aux] as u32;
                let db = b.degree - b.exps[aux] as u32;
                da.cmp(&db).then(a.exps[aux].cmp(&b.exps[aux])).then_with(|| revlex(&a.exps, &b.exps, Some(aux)))
            }
        }
    }
}

#[inline]
fn revlex(a: &[u16], b: &[u16], skip: Option<usize>) -> Ordering {
    for i in (0..a.len()).rev() {
        if Some(i) == skip {
            continue;
        }
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
