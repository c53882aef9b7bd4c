//! Projective rational points and fat point schemes `W = m_1 P_1 + ... + m_s P_s`.

mod format;
mod interpolation;
mod separators;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Polynomial, Rational};

pub use format::{parse_scheme, print_scheme};
pub use interpolation::{fat_scheme_ideal_by_intersection, hilbert_function_by_interpolation};
pub use separators::separators;

/// A point of `P^n` with rational coordinates, first nonzero coordinate equal to one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let pivot = coords
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::InvalidPoint("all coordinates are zero".into()))?;
        let inv = coords[pivot].recip();
        Ok(ProjectivePoint { coords: coords.iter().map(|c| c * &inv).collect() })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        ProjectivePoint::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.coords
    }

    /// Number of coordinates, `n + 1`.
    pub fn nvars(&self) -> usize {
        self.coords.len()
    }

    /// Index of the first nonzero coordinate.
    pub fn pivot(&self) -> usize {
        self.coords.iter().position(|c| !c.is_zero()).expect("normalized point")
    }

    pub fn vanishing_ideal(&self) -> Ideal {
        point_vanishing_ideal(self)
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// `{a_p X_j - a_j X_p : j != p}` with `p` the pivot coordinate.
pub fn point_vanishing_ideal(point: &ProjectivePoint) -> Ideal {
    let n = point.nvars();
    let p = point.pivot();
    let a = point.coordinates();
    let gens = (0..n)
        .filter(|&j| j != p)
        .map(|j| &Polynomial::var(n, j).scale(&a[p]) - &Polynomial::var(n, p).scale(&a[j]))
        .collect();
    Ideal::new(n, gens).expect("linear forms")
}

/// A fat point scheme in `P^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FatPointScheme {
    n: usize,
    points: Vec<ProjectivePoint>,
    multiplicities: Vec<u32>,
}

impl FatPointScheme {
    /// Scheme in `P^n`; points must be distinct and multiplicities positive.
    pub fn new(n: usize, points: Vec<ProjectivePoint>, multiplicities: Vec<u32>) -> Result<Self> {
        if points.len() != multiplicities.len() {
            return Err(Error::InvalidScheme(format!(
                "{} points but {} multiplicities",
                points.len(),
                multiplicities.len()
            )));
        }
        for (i, p) in points.iter().enumerate() {
            if p.nvars() != n + 1 {
                return Err(Error::InvalidScheme(format!("point {} has {} coordinates in P^{}", p, p.nvars(), n)));
            }
            if points[..i].contains(p) {
                return Err(Error::InvalidScheme(format!("point {} repeated", p)));
            }
        }
        if let Some(i) = multiplicities.iter().position(|&m| m == 0) {
            return Err(Error::InvalidScheme(format!("point {} has multiplicity 0", points[i])));
        }
        Ok(FatPointScheme { n, points, multiplicities })
    }

    /// Scheme from integer coordinates.
    pub fn from_integers(n: usize, points: &[&[i64]], multiplicities: &[u32]) -> Result<Self> {
        let pts = points.iter().map(|c| ProjectivePoint::from_integers(c)).collect::<Result<Vec<_>>>()?;
        FatPointScheme::new(n, pts, multiplicities.to_vec())
    }

    /// Reduced scheme on the given points.
    pub fn reduced(n: usize, points: Vec<ProjectivePoint>) -> Result<Self> {
        let m = vec![1; points.len()];
        FatPointScheme::new(n, points, m)
    }

    pub fn empty(n: usize) -> Self {
        FatPointScheme { n, points: Vec::new(), multiplicities: Vec::new() }
    }

    /// Dimension `n` of the ambient projective space.
    pub fn ambient_dimension(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 1)
    }

    /// `deg W = sum C(m_i + n - 1, n)`.
    pub fn degree(&self) -> u64 {
        self.multiplicities.iter().map(|&m| binomial(m as u64 + self.n as u64 - 1, self.n as u64)).sum()
    }

    /// Every multiplicity shifted by `delta`; points reaching zero are dropped.
    pub fn shifted(&self, delta: i64) -> FatPointScheme {
        let mut points = Vec::new();
        let mut mults = Vec::new();
        for (p, &m) in self.points.iter().zip(&self.multiplicities) {
            let k = m as i64 + delta;
            if k > 0 {
                points.push(p.clone());
                mults.push(k as u32);
            }
        }
        FatPointScheme { n: self.n, points, multiplicities: mults }
    }

    /// `(m_1 - 1) P_1 + ... + (m_s - 1) P_s`.
    pub fn slimming(&self) -> FatPointScheme {
        self.shifted(-1)
    }

    /// `(m_1 + j) P_1 + ... + (m_s + j) P_s`.
    pub fn fattening(&self, j: u32) -> FatPointScheme {
        self.shifted(j as i64)
    }

    /// The reduced support `P_1 + ... + P_s`.
    pub fn support(&self) -> FatPointScheme {
        FatPointScheme { n: self.n, points: self.points.clone(), multiplicities: vec![1; self.points.len()] }
    }

    /// `W_j`: the multiplicity of point `j` (1-based) lowered by one.
    pub fn reduce_at(&self, j: usize) -> Result<FatPointScheme> {
        self.check_index(j)?;
        let mut points = Vec::new();
        let mut mults = Vec::new();
        for (i, (p, &m)) in self.points.iter().zip(&self.multiplicities).enumerate() {
            let k = if i + 1 == j { m - 1 } else { m };
            if k > 0 {
                points.push(p.clone());
                mults.push(k);
            }
        }
        Ok(FatPointScheme { n: self.n, points, multiplicities: mults })
    }

    pub(crate) fn check_index(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.points.len() {
            return Err(Error::PointIndexOutOfRange { index: j, len: self.points.len() });
        }
        Ok(())
    }

    /// Same points with the given multiplicities; zero drops a point.
    pub fn with_multiplicities(&self, mults: &[u32]) -> Result<FatPointScheme> {
        if mults.len() != self.points.len() {
            return Err(Error::InvalidScheme("multiplicity vector length".into()));
        }
        let (points, mults): (Vec<_>, Vec<_>) =
            self.points.iter().cloned().zip(mults.iter().copied()).filter(|(_, m)| *m > 0).unzip();
        Ok(FatPointScheme { n: self.n, points, multiplicities: mults })
    }

    /// The saturated ideal `I_W = I_{P_1}^{m_1} ∩ ... ∩ I_{P_s}^{m_s}`; the unit ideal when empty.
    pub fn ideal(&self) -> Ideal {
        interpolation::fat_scheme_ideal(self)
    }
}

impl fmt::Debug for FatPointScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FatPointScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.points.iter().zip(&self.multiplicities).enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{}", m)?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// Alias for [`FatPointScheme::ideal`].
pub fn fat_scheme_ideal(w: &FatPointScheme) -> Ideal {
    w.ideal()
}

/// Alias for [`FatPointScheme::degree`].
pub fn scheme_degree(w: &FatPointScheme) -> u64 {
    w.degree()
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests;
