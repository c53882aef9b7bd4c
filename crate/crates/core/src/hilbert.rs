//! Hilbert functions, Hilbert series numerators and regularity indices of
//! graded quotients `S/I` and `F/M`, read from leading-term data.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElement, Ideal, Submodule};
use crate::linalg::{Echelon, SparseRow};
use crate::polyring::Monomial;

/// Hilbert function with an eventual constant value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    values: Vec<u64>,
    stable_from: usize,
    stable_value: u64,
    certified: bool,
}

impl HilbertFunction {
    /// Certified function from its values through at least `stable_from`.
    pub(crate) fn from_certified_values(mut values: Vec<u64>, stable_from: usize, stable_value: u64) -> Self {
        values.resize(stable_from + 3, stable_value);
        HilbertFunction { values, stable_from, stable_value, certified: true }
    }

    /// Uncertified function from a finite scan; the last value is taken as the eventual one.
    pub fn from_scan(values: Vec<u64>) -> Self {
        let stable_value = values.last().copied().unwrap_or(0);
        let stable_from = values.iter().rposition(|&v| v != stable_value).map_or(0, |i| i + 1);
        let mut values = values;
        values.resize(values.len().max(stable_from + 3), stable_value);
        HilbertFunction { values, stable_from, stable_value, certified: false }
    }

    pub fn value(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        self.values.get(d as usize).copied().unwrap_or(self.stable_value)
    }

    /// Stored values, degrees `0..=stable_from + 2`.
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn stable_from(&self) -> usize {
        self.stable_from
    }

    /// The constant Hilbert polynomial.
    pub fn stable_value(&self) -> u64 {
        self.stable_value
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// `i -> HF(i - s)`.
    pub fn shifted(&self, s: usize) -> HilbertFunction {
        let mut values = vec![0; s];
        values.extend_from_slice(&self.values);
        let stable_from = values.iter().rposition(|&v| v != self.stable_value).map_or(0, |i| i + 1);
        let mut hf =
            HilbertFunction { values, stable_from, stable_value: self.stable_value, certified: self.certified };
        hf.values.resize(stable_from + 3, self.stable_value);
        hf
    }

    /// Values for degrees `0..=stable_from + 1`.
    pub fn printed_values(&self) -> Vec<u64> {
        (0..=self.stable_from + 1).map(|d| self.value(d as i64)).collect()
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.printed_values() {
            write!(f, "{} ", v)?;
        }
        write!(f, "...")
    }
}

/// Least degree from which the function equals its Hilbert polynomial.
pub fn regularity_index(hf: &HilbertFunction) -> Result<usize> {
    if !hf.certified {
        return Err(Error::Uncertified);
    }
    Ok(hf.stable_from)
}

type Univariate = Vec<i64>;

fn trim(p: &mut Univariate) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn mul(a: &[i64], b: &[i64]) -> Univariate {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn add_shifted(acc: &mut Univariate, p: &[i64], shift: usize) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (i, c) in p.iter().enumerate() {
        acc[i + shift] += c;
    }
    trim(acc);
}

fn one_minus_power(d: u32) -> Univariate {
    if d == 0 {
        return Vec::new();
    }
    let mut p = vec![0i64; d as usize + 1];
    p[0] = 1;
    p[d as usize] = -1;
    p
}

/// Exact division by `1 - z`, if possible.
fn divide_one_minus_z(p: &[i64]) -> Option<Univariate> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    // q_i = sum_{j <= i} p_j; remainder is the full sum
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut acc = 0i64;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    if acc + p[p.len() - 1] != 0 {
        return None;
    }
    trim(&mut q);
    Some(q)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator of the Hilbert series of `S/<gens>` over `(1-z)^nvars`, lowest degree first.
///
/// Pivot recursion `N(I) = N(I + <p>) + z^deg(p) N(I : p)`.
pub fn hilbert_series_numerator(gens: &[Monomial], nvars: usize) -> Vec<i64> {
    numerator(minimalize(gens.to_vec()), nvars)
}

fn numerator(gens: Vec<Monomial>, nvars: usize) -> Univariate {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for (i, &e) in g.exponents().iter().enumerate() {
            if e > 0 {
                count[i] += 1;
            }
        }
    }
    let pivot_var = (0..nvars).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    if count[pivot_var] <= 1 {
        // pairwise coprime
        return gens.iter().fold(vec![1], |acc, g| mul(&acc, &one_minus_power(g.degree())));
    }
    let e = gens.iter().map(|g| g.exponent(pivot_var)).filter(|&e| e > 0).min().unwrap();
    let mut exps = vec![0u16; nvars];
    exps[pivot_var] = e;
    let p = Monomial::from_exponents(&exps);

    let mut sum = gens.clone();
    sum.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&g.gcd(&p)).unwrap()).collect();

    let mut out = numerator(minimalize(sum), nvars);
    let q = numerator(minimalize(colon), nvars);
    add_shifted(&mut out, &q, p.degree() as usize);
    out
}

/// Hilbert function from a series numerator, when it is eventually constant.
///
/// `count(d)` gives the exact value in degree `d`.
fn from_numerator(num: &[i64], nvars: usize, count: impl Fn(usize) -> u64) -> Result<HilbertFunction> {
    let mut q = num.to_vec();
    for k in 0..nvars.saturating_sub(1) {
        q = match divide_one_minus_z(&q) {
            Some(q) => q,
            None => return Err(Error::NotEventuallyConstant(nvars - k)),
        };
    }
    let stable_value: i64 = q.iter().sum();
    debug_assert!(stable_value >= 0);
    let top = q.len();
    let values: Vec<u64> = (0..=top).map(count).collect();
    let stable_from = values.iter().rposition(|&v| v as i64 != stable_value).map_or(0, |i| i + 1);
    Ok(HilbertFunction::from_certified_values(values, stable_from, stable_value as u64))
}

fn standard_monomial_count(leads: &[Monomial], nvars: usize, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    Monomial::all_of_degree(nvars, d as u32).iter().filter(|u| !leads.iter().any(|l| l.divides(u))).count() as u64
}

/// Hilbert function of `S/I`, certified from the leading-term ideal.
pub fn hilbert_function(ideal: &Ideal) -> Result<HilbertFunction> {
    let leads = minimalize(ideal.groebner_basis().leading_monomials());
    let n = ideal.nvars();
    let num = numerator(leads.clone(), n);
    from_numerator(&num, n, |d| standard_monomial_count(&leads, n, d as i64))
}

/// Hilbert function of `F/M` for a graded free module `F` with the given shifts.
pub fn module_hilbert_function(rank: usize, shifts: &[i64], relations: &Submodule) -> Result<HilbertFunction> {
    check_shape(rank, shifts, relations)?;
    let n = relations.ambient().nvars;
    let leads: Vec<Vec<Monomial>> = (0..rank).map(|c| minimalize(relations.component_leading_monomials(c))).collect();
    let mut num = Vec::new();
    for (c, l) in leads.iter().enumerate() {
        add_shifted(&mut num, &numerator(l.clone(), n), shifts[c] as usize);
    }
    from_numerator(&num, n, |d| {
        leads.iter().zip(shifts).map(|(l, &s)| standard_monomial_count(l, n, d as i64 - s)).sum()
    })
}

fn check_shape(rank: usize, shifts: &[i64], relations: &Submodule) -> Result<()> {
    if shifts.len() != rank || relations.ambient().shifts != shifts {
        return Err(Error::ShapeMismatch(format!(
            "rank {} with shifts {:?} against a free module with shifts {:?}",
            rank,
            shifts,
            relations.ambient().shifts
        )));
    }
    if shifts.iter().any(|&s| s < 0) {
        return Err(Error::Unsupported("negative generator shifts".into()));
    }
    Ok(())
}

/// Per-degree dimensions of `F/M` for degrees `0..=max_degree`, by row reduction of
/// the span of all monomial multiples of the generators. Uncertified.
pub fn module_hilbert_function_by_rank(
    rank: usize,
    shifts: &[i64],
    relations: &Submodule,
    max_degree: usize,
) -> Result<HilbertFunction> {
    check_shape(rank, shifts, relations)?;
    let n = relations.ambient().nvars;
    let gens: Vec<(&FreeModuleElement, i64)> =
        relations.nonzero_generators().map(|g| (g, g.degree(shifts).expect("homogeneous"))).collect();
    let values = (0..=max_degree)
        .map(|d| {
            let d = d as i64;
            // column index of (component, monomial) in degree d
            let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
            for (c, &s) in shifts.iter().enumerate() {
                if d >= s {
                    for m in Monomial::all_of_degree(n, (d - s) as u32) {
                        let next = index.len();
                        index.insert((c, m), next);
                    }
                }
            }
            let total = index.len();
            let mut ech = Echelon::new(total);
            for (g, gd) in &gens {
                if *gd > d || ech.is_full() {
                    continue;
                }
                for m in Monomial::all_of_degree(n, (d - gd) as u32) {
                    let mut row: SparseRow = Vec::new();
                    for (c, comp) in g.components.iter().enumerate() {
                        for (u, a) in comp.terms() {
                            row.push((index[&(c, u.mul(&m))], a.clone()));
                        }
                    }
                    ech.insert(row);
                    if ech.is_full() {
                        break;
                    }
                }
            }
            (total - ech.rank()) as u64
        })
        .collect();
    Ok(HilbertFunction::from_scan(values))
}

/// Per-degree `dim (S/I)_d` for `d in 0..=max_degree` by row reduction of generator multiples. Uncertified.
pub fn hilbert_function_by_rank(ideal: &Ideal, max_degree: usize) -> HilbertFunction {
    let n = ideal.nvars();
    let elems: Vec<FreeModuleElement> =
        ideal.generators().iter().map(|g| FreeModuleElement::new(vec![g.clone()])).collect();
    let module = Submodule::new(crate::groebner::FreeModule::new(n, vec![0]), elems).expect("rank one");
    module_hilbert_function_by_rank(1, &[0], &module, max_degree).expect("shape checked")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::FreeModule;
    use crate::polyring::Polynomial;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn series_numerators() {
        assert_eq!(hilbert_series_numerator(&[mono(&[0, 1, 0]), mono(&[0, 0, 1])], 3), vec![1, -2, 1]);
        assert_eq!(hilbert_series_numerator(&[], 3), vec![1]);
        // <x^2, xy>: 1 - 2z^2 + z^3
        assert_eq!(hilbert_series_numerator(&[mono(&[2, 0, 0]), mono(&[1, 1, 0])], 3), vec![1, 0, -2, 1]);
    }

    #[test]
    fn numerator_matches_brute_force_counts() {
        let gens = vec![mono(&[2, 1, 0]), mono(&[1, 2, 1]), mono(&[0, 1, 3]), mono(&[3, 0, 1]), mono(&[0, 4, 0])];
        let num = hilbert_series_numerator(&gens, 3);
        // coefficients of num / (1-z)^3
        let mut series = num.clone();
        series.resize(20, 0);
        for _ in 0..3 {
            for i in 1..series.len() {
                series[i] += series[i - 1];
            }
        }
        for d in 0..20 {
            assert_eq!(series[d] as u64, standard_monomial_count(&gens, 3, d as i64));
        }
    }

    #[test]
    fn single_point() {
        let i = Ideal::parse(3, &["X1", "X2"]).unwrap();
        let hf = hilbert_function(&i).unwrap();
        assert_eq!(hf.to_string(), "1 1 ...");
        assert_eq!(hf.stable_from(), 0);
        assert_eq!(hf.stable_value(), 1);
        assert_eq!(regularity_index(&hf).unwrap(), 0);
    }

    #[test]
    fn full_ring_is_not_eventually_constant() {
        assert_eq!(hilbert_function(&Ideal::zero(3)).unwrap_err(), Error::NotEventuallyConstant(3));
        let num = hilbert_series_numerator(&[], 3);
        assert_eq!(num, vec![1]);
        let hf = hilbert_function_by_rank(&Ideal::zero(3), 5);
        for d in 0..=5 {
            assert_eq!(hf.value(d), binom(d as u64 + 2, 2));
        }
    }

    #[test]
    fn unit_ideal_is_zero() {
        let hf = hilbert_function(&Ideal::unit(3)).unwrap();
        assert_eq!(hf.to_string(), "0 0 ...");
    }

    #[test]
    fn uncertified_rejected() {
        let hf = HilbertFunction::from_scan(vec![1, 3, 4, 4]);
        assert_eq!(hf.stable_from(), 2);
        assert_eq!(regularity_index(&hf).unwrap_err(), Error::Uncertified);
    }

    #[test]
    fn free_module_quotient() {
        let f = FreeModule::new(3, vec![2, 2, 2]);
        let m = Submodule::new(f, vec![]).unwrap();
        assert_eq!(module_hilbert_function(3, &[2, 2, 2], &m).unwrap_err(), Error::NotEventuallyConstant(3));
        let scan = module_hilbert_function_by_rank(3, &[2, 2, 2], &m, 5).unwrap();
        assert_eq!(scan.values()[..6], [0, 0, 3, 9, 18, 30]);
        assert!(matches!(module_hilbert_function(2, &[2, 2], &m), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn two_paths_agree_on_a_module() {
        let p = |s: &str| Polynomial::parse(s, 3).unwrap();
        let f = FreeModule::new(3, vec![1, 1]);
        let m = Submodule::new(
            f,
            vec![
                FreeModuleElement::new(vec![p("X1"), p("-X0")]),
                FreeModuleElement::new(vec![p("X2"), p("0")]),
                FreeModuleElement::new(vec![p("0"), p("X2")]),
                FreeModuleElement::new(vec![p("X1^2"), p("X0*X2")]),
                FreeModuleElement::new(vec![p("0"), p("X1^3")]),
            ],
        )
        .unwrap();
        let hf = module_hilbert_function(2, &[1, 1], &m).unwrap();
        let scan = module_hilbert_function_by_rank(2, &[1, 1], &m, hf.stable_from() + 3).unwrap();
        for d in 0..=(hf.stable_from() as i64 + 3) {
            assert_eq!(hf.value(d), scan.value(d), "degree {}", d);
        }
    }
}
