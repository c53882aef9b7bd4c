//! Fat point ideals from derivative conditions.
//!
//! A form `F` lies in `I_P^m` iff every partial derivative of order `< m` in the
//! non-pivot variables vanishes at `P`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{FatPointScheme, ProjectivePoint};
use crate::groebner::Ideal;
use crate::hilbert::HilbertFunction;
use crate::linalg::{self, Echelon, SparseRow};
use crate::polyring::{Monomial, Polynomial, Rational};

struct Condition<'a> {
    point: &'a ProjectivePoint,
    gamma: Vec<u16>,
}

fn conditions(w: &FatPointScheme) -> Vec<Condition<'_>> {
    let nv = w.nvars();
    let mut out = Vec::new();
    for (p, &m) in w.points().iter().zip(w.multiplicities()) {
        let pivot = p.pivot();
        for k in 0..m {
            for g in Monomial::all_of_degree(nv - 1, k) {
                let mut gamma = g.exponents().to_vec();
                gamma.insert(pivot, 0);
                out.push(Condition { point: p, gamma });
            }
        }
    }
    out
}

/// `∂^γ X^e` evaluated at the point.
fn entry(c: &Condition<'_>, e: &[u16]) -> Rational {
    let a = c.point.coordinates();
    let mut v = Rational::one();
    for (j, (&ej, &gj)) in e.iter().zip(&c.gamma).enumerate() {
        if ej < gj {
            return Rational::zero();
        }
        for t in 0..gj {
            v *= Rational::from_integer((ej - t).into());
        }
        let rest = ej - gj;
        if rest > 0 {
            if a[j].is_zero() {
                return Rational::zero();
            }
            v *= num_traits::pow(a[j].clone(), rest as usize);
        }
    }
    v
}

fn condition_matrix(conds: &[Condition<'_>], monos: &[Monomial]) -> Vec<Vec<Rational>> {
    conds.iter().map(|c| monos.iter().map(|u| entry(c, u.exponents())).collect()).collect()
}

/// Degree-by-degree data: `(HF_W(d), basis of (I_W)_d)` until `HF_W` reaches `deg W`, plus one more degree.
struct Interpolation {
    values: Vec<u64>,
    pieces: Vec<Vec<Polynomial>>,
    regularity: usize,
}

fn interpolate(w: &FatPointScheme, extra: usize) -> Interpolation {
    let nv = w.nvars();
    let conds = conditions(w);
    let target = w.degree();
    let mut values = Vec::new();
    let mut pieces = Vec::new();
    let mut regularity = None;
    let mut d = 0usize;
    loop {
        let monos = Monomial::all_of_degree(nv, d as u32);
        let matrix = condition_matrix(&conds, &monos);
        let kernel = linalg::kernel(&matrix, monos.len());
        let hf = (monos.len() - kernel.len()) as u64;
        values.push(hf);
        pieces.push(
            kernel
                .into_iter()
                .map(|v| {
                    Polynomial::from_terms(nv, monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect())
                })
                .collect(),
        );
        if regularity.is_none() && hf == target {
            regularity = Some(d);
        }
        if let Some(r) = regularity {
            if d >= r + extra {
                return Interpolation { values, pieces, regularity: r };
            }
        }
        d += 1;
    }
}

/// Minimal homogeneous generators of the ideal with the given graded pieces `0..=top`.
pub(crate) fn generators_from_pieces(nv: usize, pieces: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let mut gens = Vec::new();
    for d in 0..pieces.len() {
        if pieces[d].is_empty() {
            continue;
        }
        let monos = Monomial::all_of_degree(nv, d as u32);
        let col: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_row = |p: &Polynomial| -> SparseRow { p.terms().iter().map(|(m, c)| (col[m], c.clone())).collect() };
        let mut span = Echelon::new(monos.len());
        if d > 0 {
            for b in &pieces[d - 1] {
                for i in 0..nv {
                    span.insert(to_row(&b.mul_monomial(&Monomial::var(nv, i))));
                }
            }
        }
        for p in &pieces[d] {
            if span.insert(to_row(p)) {
                gens.push(p.clone());
            }
        }
    }
    gens
}

pub(crate) fn fat_scheme_ideal(w: &FatPointScheme) -> Ideal {
    let data = interpolate(w, 1);
    // saturated ideals of points are generated in degrees <= r_W + 1
    let gens = generators_from_pieces(w.nvars(), &data.pieces);
    Ideal::new(w.nvars(), gens).expect("homogeneous kernel vectors")
}

/// Basis of `(I_W)_d`, by interpolation.
pub(crate) fn graded_piece(w: &FatPointScheme, d: usize) -> Vec<Polynomial> {
    let nv = w.nvars();
    let monos = Monomial::all_of_degree(nv, d as u32);
    let matrix = condition_matrix(&conditions(w), &monos);
    linalg::kernel(&matrix, monos.len())
        .into_iter()
        .map(|v| Polynomial::from_terms(nv, monos.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect()))
        .collect()
}

/// `HF_W` from the ranks of the condition matrices; exact and certified by reaching `deg W`.
pub fn hilbert_function_by_interpolation(w: &FatPointScheme) -> HilbertFunction {
    let data = interpolate(w, 0);
    HilbertFunction::from_certified_values(data.values, data.regularity, w.degree())
}

/// `I_{P_1}^{m_1} ∩ ... ∩ I_{P_s}^{m_s}` by repeated elimination.
pub fn fat_scheme_ideal_by_intersection(w: &FatPointScheme) -> Ideal {
    let mut acc = Ideal::unit(w.nvars());
    for (p, &m) in w.points().iter().zip(w.multiplicities()) {
        let q = p.vanishing_ideal().power(m);
        acc = if acc.is_unit() { q } else { acc.intersection(&q).expect("same ambient") };
    }
    acc
}
