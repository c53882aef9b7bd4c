//! Jacobian ideals and the modules of Kähler differential `k`-forms `Ω^k_{R_W/K}`,
//! presented as `Ω^k_S / (I_W Ω^k_S + dI_W ∧ Ω^{k-1}_S)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{FreeModule, FreeModuleElement, Ideal, Submodule};
use crate::hilbert::{hilbert_function, module_hilbert_function, module_hilbert_function_by_rank, HilbertFunction};
use crate::polyring::Polynomial;
use crate::scheme::{binomial, FatPointScheme};

/// `∂I = <∂F/∂X_j>` over the given generators; a constant generator is kept as is.
pub fn jacobian_ideal(ideal: &Ideal) -> Result<Ideal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = ideal.nvars();
    let mut gens = Vec::new();
    for f in ideal.generators() {
        if f.degree() == Some(0) {
            gens.push(f.clone());
        }
        for j in 0..n {
            gens.push(f.partial_derivative(j));
        }
    }
    Ideal::new(n, gens)
}

/// Strictly increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `dX_i ∧ dX_U` as `(sign, sorted tuple)`, or `None` when `i ∈ U`.
pub fn wedge_with(i: usize, u: &[usize]) -> Option<(i64, Vec<usize>)> {
    if u.contains(&i) {
        return None;
    }
    let before = u.iter().filter(|&&x| x < i).count();
    let mut t = u.to_vec();
    t.insert(before, i);
    Some((if before % 2 == 0 { 1 } else { -1 }, t))
}

/// Presentation of `Ω^k_{R_W/K}` as a quotient of the free module `Ω^k_S`.
#[derive(Clone)]
pub struct KaehlerPresentation {
    k: usize,
    basis: Vec<Vec<usize>>,
    relations: Submodule,
}

impl KaehlerPresentation {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Generator degrees of `Ω^k_S`, all equal to `k`.
    pub fn shifts(&self) -> Vec<i64> {
        vec![self.k as i64; self.basis.len()]
    }

    /// Index tuples of the basis `dX_{i_1} ∧ ... ∧ dX_{i_k}`.
    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn relations(&self) -> &Submodule {
        &self.relations
    }

    /// Certified Hilbert function from the module Gröbner basis.
    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        module_hilbert_function(self.rank(), &self.shifts(), &self.relations)
    }

    /// Per-degree dimensions by row reduction, degrees `0..=max_degree`. Uncertified.
    pub fn hilbert_function_by_rank(&self, max_degree: usize) -> Result<HilbertFunction> {
        module_hilbert_function_by_rank(self.rank(), &self.shifts(), &self.relations, max_degree)
    }
}

impl fmt::Debug for KaehlerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for KaehlerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank())?;
        writeln!(f, "shifts {:?}", self.shifts())?;
        write!(f, "basis")?;
        for t in &self.basis {
            write!(f, " d{}", t.iter().map(|i| format!("X{}", i)).collect::<Vec<_>>().join("^d"))?;
        }
        writeln!(f)?;
        writeln!(f, "relations {}", self.relations.generators().len())?;
        for g in self.relations.generators() {
            writeln!(f, "  {}", g)?;
        }
        Ok(())
    }
}

/// Presentation of `Ω^k` for the quotient by `ideal`.
pub fn presentation_of_ideal(ideal: &Ideal, k: usize) -> Result<KaehlerPresentation> {
    let nv = ideal.nvars();
    if k == 0 || k > nv {
        return Err(Error::FormDegreeOutOfRange { k, max: nv });
    }
    let basis = wedge_basis(nv, k);
    let lower = wedge_basis(nv, k - 1);
    let rank = basis.len();
    let index = |t: &[usize]| basis.iter().position(|b| b == t).expect("sorted tuple");
    let zero = Polynomial::zero(nv);
    let mut rels = Vec::with_capacity(ideal.generators().len() * (rank + lower.len()));
    for f in ideal.generators() {
        for c in 0..rank {
            let mut comps = vec![zero.clone(); rank];
            comps[c] = f.clone();
            rels.push(FreeModuleElement::new(comps));
        }
        let partials: Vec<Polynomial> = (0..nv).map(|i| f.partial_derivative(i)).collect();
        for u in &lower {
            let mut comps = vec![zero.clone(); rank];
            for (i, df) in partials.iter().enumerate() {
                if let Some((sign, t)) = wedge_with(i, u) {
                    let c = index(&t);
                    comps[c] = if sign > 0 { &comps[c] + df } else { &comps[c] - df };
                }
            }
            rels.push(FreeModuleElement::new(comps));
        }
    }
    let relations = Submodule::new(FreeModule::new(nv, vec![k as i64; rank]), rels)?;
    Ok(KaehlerPresentation { k, basis, relations })
}

/// Presentation of `Ω^k_{R_W/K}`, `1 <= k <= n + 1`.
pub fn kaehler_presentation(w: &FatPointScheme, k: usize) -> Result<KaehlerPresentation> {
    presentation_of_ideal(&w.ideal(), k)
}

/// Certified `HF_{Ω^k_{R_W/K}}` from the presentation.
pub fn kaehler_hilbert_function(w: &FatPointScheme, k: usize) -> Result<HilbertFunction> {
    kaehler_presentation(w, k)?.hilbert_function()
}

/// `HF_{Ω^{n+1}}(i) = HF_{S/∂I_W}(i - n - 1)`.
pub fn top_form_hilbert_function(w: &FatPointScheme) -> Result<HilbertFunction> {
    top_form_hilbert_function_of_ideal(&w.ideal())
}

pub fn top_form_hilbert_function_of_ideal(ideal: &Ideal) -> Result<HilbertFunction> {
    let hf = hilbert_function(&jacobian_ideal(ideal)?)?;
    Ok(hf.shifted(ideal.nvars()))
}

/// Constant Hilbert polynomial of `Ω^k_{R_W/K}`.
pub fn kaehler_hp(w: &FatPointScheme, k: usize) -> Result<u64> {
    Ok(kaehler_hilbert_function(w, k)?.stable_value())
}

/// Regularity index of `Ω^k_{R_W/K}`.
pub fn kaehler_ri(w: &FatPointScheme, k: usize) -> Result<usize> {
    crate::hilbert::regularity_index(&kaehler_hilbert_function(w, k)?)
}

/// `(lower, upper)` bounds for `HP_{Ω^k}`: `C(n+1,k)` times the degrees of the slimming and of `W`.
pub fn hp_bounds(w: &FatPointScheme, k: usize) -> (u64, u64) {
    let c = binomial(w.nvars() as u64, k as u64);
    (c * w.slimming().degree(), c * w.degree())
}

/// `min{max{r_W + k, r_V + k - 1}, max{r_W + n, r_V + n - 1}}` with `V` the first fattening.
pub fn ri_bound(w: &FatPointScheme, k: usize, r_w: usize, r_v: usize) -> usize {
    let n = w.ambient_dimension();
    let a = (r_w + k).max(r_v + k - 1);
    let b = (r_w + n).max(r_v + n - 1);
    a.min(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::regularity_index;

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(3, gens).unwrap()
    }

    fn double_point() -> FatPointScheme {
        FatPointScheme::from_integers(2, &[&[1, 0, 0]], &[2]).unwrap()
    }

    #[test]
    fn jacobian_examples() {
        let sq = ideal(&["X1^2", "X1*X2", "X2^2"]);
        assert!(jacobian_ideal(&sq).unwrap().same_ideal(&ideal(&["X1", "X2"])));
        assert!(jacobian_ideal(&Ideal::unit(3)).unwrap().is_unit());
        assert_eq!(jacobian_ideal(&Ideal::zero(3)).unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(wedge_with(1, &[0]), Some((-1, vec![0, 1])));
        assert_eq!(wedge_with(0, &[1]), Some((1, vec![0, 1])));
        assert_eq!(wedge_with(1, &[1]), None);
        assert_eq!(wedge_with(1, &[0, 2]), Some((-1, vec![0, 1, 2])));
    }

    #[test]
    fn transposed_pairs_are_negatives() {
        // dF ∧ dX_j and dF ∧ dX_i carry the X_i and X_j partials with opposite signs in the (i,j) slot
        let i = ideal(&["X0*X1 - X2^2"]);
        let pres = presentation_of_ideal(&i, 2).unwrap();
        let rels = pres.relations().generators();
        // order: F*e_01, F*e_02, F*e_12, dF^dX0, dF^dX1, dF^dX2
        let d0 = &rels[3];
        let d1 = &rels[4];
        let f0 = i.generators()[0].partial_derivative(0);
        let f1 = i.generators()[0].partial_derivative(1);
        assert_eq!(d0.components[0], -&f1);
        assert_eq!(d1.components[0], f0);
    }

    #[test]
    fn generator_count() {
        let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[1, 1, 1], &[0, 1, 2]], &[2, 1, 1]).unwrap();
        let g = w.ideal().generators().len();
        for k in 1..=3 {
            let pres = kaehler_presentation(&w, k).unwrap();
            assert_eq!(
                pres.relations().generators().len(),
                g * (binomial(3, k as u64) + binomial(3, k as u64 - 1)) as usize
            );
        }
        assert_eq!(kaehler_presentation(&w, 0).unwrap_err(), Error::FormDegreeOutOfRange { k: 0, max: 3 });
        assert_eq!(kaehler_presentation(&w, 4).unwrap_err(), Error::FormDegreeOutOfRange { k: 4, max: 3 });
    }

    #[test]
    fn top_forms_of_a_double_point() {
        let w = double_point();
        let pres = kaehler_presentation(&w, 3).unwrap();
        let leads = pres.relations().component_leading_monomials(0);
        let lt = Ideal::new(
            3,
            leads
                .into_iter()
                .map(|m| Polynomial::monomial(m, crate::polyring::Rational::from_integer(1.into())))
                .collect(),
        )
        .unwrap();
        assert!(lt.same_ideal(&ideal(&["X1", "X2"])));
        let hf = kaehler_hilbert_function(&w, 3).unwrap();
        assert_eq!(hf.to_string(), "0 0 0 1 1 ...");
        assert_eq!(top_form_hilbert_function(&w).unwrap(), hf);
        assert_eq!(hf.value(2), 0);
    }

    #[test]
    fn one_forms_of_a_point() {
        let w = FatPointScheme::from_integers(2, &[&[1, 0, 0]], &[1]).unwrap();
        let hf = kaehler_hilbert_function(&w, 1).unwrap();
        assert_eq!(hf.to_string(), "0 1 1 ...");
        let scan = kaehler_presentation(&w, 1).unwrap().hilbert_function_by_rank(5).unwrap();
        for d in 0..=5 {
            assert_eq!(scan.value(d), hf.value(d));
        }
    }

    #[test]
    fn double_point_hilbert_polynomials() {
        let w = double_point();
        let hps: Vec<u64> = (1..=3).map(|k| kaehler_hp(&w, k).unwrap()).collect();
        assert_eq!(hps, vec![6, 4, 1]);
    }

    #[test]
    fn three_general_points() {
        let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[1, 1, 1]).unwrap();
        let ri: Vec<usize> = (1..=3).map(|k| kaehler_ri(&w, k).unwrap()).collect();
        assert_eq!(ri, vec![3, 4, 4]);
        let hp: Vec<u64> = (1..=3).map(|k| kaehler_hp(&w, k).unwrap()).collect();
        assert_eq!(hp, vec![3, 0, 0]);
        let r_w = regularity_index(&hilbert_function(&w.ideal()).unwrap()).unwrap();
        let r_v = regularity_index(&hilbert_function(&w.fattening(1).ideal()).unwrap()).unwrap();
        for k in 1..=3 {
            assert!(ri[k - 1] <= ri_bound(&w, k, r_w, r_v));
        }
    }

    #[test]
    fn euler_containment() {
        let w = FatPointScheme::from_integers(2, &[&[1, 0, 0], &[1, 1, 1], &[0, 1, 2]], &[2, 3, 1]).unwrap();
        let i = w.ideal();
        assert!(i.is_subset_of(&jacobian_ideal(&i).unwrap()));
    }
}
