//! Gröbner bases and the ideal calculus: sums, products, powers,
//! intersections, colons and saturations of homogeneous ideals.

pub(crate) mod engine;
mod module;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational};
use engine::{BuchbergerOptions, Reducer, Term, TermOrder, Vector};

pub use module::{FreeModule, FreeModuleElement, Submodule};

pub(crate) fn poly_to_vector(p: &Polynomial, order: &TermOrder, comp: usize) -> Vector {
    let mut v: Vector = p.primitive_integer_terms().into_iter().map(|(mono, c)| (Term { comp, mono }, c)).collect();
    engine::sort_vector(order, &mut v);
    v
}

/// Monic rational polynomial from the terms of a single-component vector.
pub(crate) fn vector_to_poly(v: &[(Term, BigInt)], nvars: usize) -> Polynomial {
    if v.is_empty() {
        return Polynomial::zero(nvars);
    }
    let lc = Rational::from_integer(v[0].1.clone());
    let terms = v.iter().map(|(t, c)| (t.mono.clone(), Rational::from_integer(c.clone()) / &lc)).collect();
    Polynomial::from_terms(nvars, terms)
}

/// Remainder of `p` under multivariate division by `basis` (degrevlex).
///
/// Leading terms are tried in list order. The remainder has no term divisible
/// by any leading term of `basis`.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let order = TermOrder::ideal(MonomialOrder::DegRevLex);
    let vecs: Vec<Vector> = basis.iter().filter(|b| !b.is_zero()).map(|b| poly_to_vector(b, &order, 0)).collect();
    reduce_with_scale(p, &order, &vecs)
}

fn reduce_with_scale(p: &Polynomial, order: &TermOrder, basis: &[Vector]) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let ints = p.primitive_integer_terms();
    // p = lc_ratio * (primitive integer form)
    let ratio = p.leading_coefficient().unwrap() / Rational::from_integer(ints[0].1.clone());
    let mut v: Vector = ints.into_iter().map(|(mono, c)| (Term { comp: 0, mono }, c)).collect();
    engine::sort_vector(order, &mut v);
    let mut scale = Rational::one();
    let r = Reducer { order, basis }.reduce(v, None, false, Some(&mut scale));
    let factor = ratio / scale;
    let terms = r.into_iter().map(|(t, c)| (t.mono, Rational::from_integer(c) * &factor)).collect();
    Polynomial::from_terms(p.nvars(), terms)
}

/// Reduced Gröbner basis of an ideal under degrevlex.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
    vectors: Vec<Vector>,
}

impl GroebnerBasis {
    fn from_vectors(vectors: Vec<Vector>, nvars: usize) -> Self {
        let polys = vectors.iter().map(|v| vector_to_poly(v, nvars)).collect();
        GroebnerBasis { polys, vectors }
    }

    /// Monic basis elements, sorted by increasing leading monomial.
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.vectors.iter().map(|v| v[0].0.mono.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.vectors.iter().map(|v| v[0].0.mono.degree()).max()
    }

    fn reducer(&self) -> Reducer<'_> {
        // TermOrder is not stored; the degrevlex ideal order is a constant
        Reducer { order: &DEGREVLEX, basis: &self.vectors }
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        let v = poly_to_vector(p, &DEGREVLEX, 0);
        self.reducer().reduce(v, None, false, None).is_empty()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        reduce_with_scale(p, &DEGREVLEX, &self.vectors)
    }
}

static DEGREVLEX: TermOrder = TermOrder { mono: MonomialOrder::DegRevLex, shifts: Vec::new() };

#[derive(Debug, Default)]
struct IdealCache {
    gb: OnceLock<GroebnerBasis>,
    minimal: OnceLock<Vec<Polynomial>>,
}

/// Homogeneous ideal of `K[X_0..X_n]`, with a lazily computed reduced Gröbner basis.
///
/// Clones share the cache.
#[derive(Clone)]
pub struct Ideal {
    nvars: usize,
    generators: Vec<Polynomial>,
    cache: Arc<IdealCache>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ">")
    }
}

impl Ideal {
    /// Ideal generated by homogeneous polynomials; zero generators are dropped.
    pub fn new(nvars: usize, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::AmbientMismatch { left: nvars, right: g.nvars() });
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Ideal::from_generators_unchecked(nvars, generators))
    }

    pub fn parse(nvars: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators.iter().map(|s| Polynomial::parse(s, nvars)).collect::<Result<Vec<_>>>()?;
        Ideal::new(nvars, gens)
    }

    pub(crate) fn from_generators_unchecked(nvars: usize, generators: Vec<Polynomial>) -> Self {
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in generators {
            if !g.is_zero() {
                let g = g.monic();
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
        }
        Ideal { nvars, generators: gens, cache: Arc::new(IdealCache::default()) }
    }

    /// Ideal whose generators are known to be a reduced Gröbner basis.
    fn from_reduced_basis(nvars: usize, vectors: Vec<Vector>) -> Self {
        let gb = GroebnerBasis::from_vectors(vectors, nvars);
        let ideal = Ideal::from_generators_unchecked(nvars, gb.polys.clone());
        let _ = ideal.cache.gb.set(gb);
        ideal
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal::from_generators_unchecked(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        Ideal::from_generators_unchecked(nvars, vec![Polynomial::one(nvars)])
    }

    /// The homogeneous maximal ideal `<X_0, ..., X_n>`.
    pub fn maximal(nvars: usize) -> Self {
        Ideal::from_generators_unchecked(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn run_buchberger(&self) -> (GroebnerBasis, Vec<Polynomial>) {
        let order = TermOrder::ideal(MonomialOrder::DegRevLex);
        let vecs: Vec<Vector> = self.generators.iter().map(|g| poly_to_vector(g, &order, 0)).collect();
        let out = engine::buchberger(&order, &vecs, &BuchbergerOptions { product_criterion: true, degree_cap: None });
        let gb = GroebnerBasis::from_vectors(out.basis, self.nvars);
        let mut minimal: Vec<Polynomial> = out.minimal_generators.iter().map(|&i| self.generators[i].clone()).collect();
        minimal.sort_by_key(|p| p.degree());
        (gb, minimal)
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.cache.gb.get_or_init(|| {
            let (gb, minimal) = self.run_buchberger();
            let _ = self.cache.minimal.set(minimal);
            gb
        })
    }

    /// A minimal homogeneous generating set drawn from the given generators.
    pub fn minimal_generators(&self) -> &[Polynomial] {
        if self.cache.minimal.get().is_none() {
            if self.cache.gb.get().is_none() {
                self.groebner_basis();
            } else {
                let (_, minimal) = self.run_buchberger();
                let _ = self.cache.minimal.set(minimal);
            }
        }
        self.cache.minimal.get().expect("initialized above")
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().polys.iter().any(|p| p.degree() == Some(0))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.groebner_basis().reduces_to_zero(p)
    }

    /// `I ⊆ other`, tested generator by generator.
    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        let gb = other.groebner_basis();
        self.generators.iter().all(|g| gb.reduces_to_zero(g))
    }

    /// Equality of reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> bool {
        self.nvars == other.nvars && self.groebner_basis().polys == other.groebner_basis().polys
    }

    fn check_ambient(&self, other: &Ideal) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ambient(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal::from_generators_unchecked(self.nvars, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ambient(other)?;
        let a = self.generators_for_products();
        let b = other.generators_for_products();
        let mut gens = Vec::with_capacity(a.len() * b.len());
        for f in a {
            for g in b {
                gens.push(f * g);
            }
        }
        Ok(Ideal::from_generators_unchecked(self.nvars, gens))
    }

    fn generators_for_products(&self) -> &[Polynomial] {
        match self.cache.minimal.get() {
            Some(m) => m,
            None => &self.generators,
        }
    }

    pub fn power(&self, k: u32) -> Ideal {
        let mut acc = Ideal::unit(self.nvars);
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient");
            // minimal generators keep the next product small
            acc.minimal_generators();
        }
        acc
    }

    /// `I ∩ J` via `t*I + (1-t)*J` and elimination of the auxiliary variable `t`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.nvars));
        }
        let n = self.nvars;
        let order = TermOrder::ideal(MonomialOrder::Elimination { aux: n });
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut vecs = Vec::new();
        for f in self.generators_for_products() {
            vecs.push(poly_to_vector(&(&t * &f.extend_vars()), &order, 0));
        }
        for g in other.generators_for_products() {
            vecs.push(poly_to_vector(&(&one_minus_t * &g.extend_vars()), &order, 0));
        }
        let out = engine::buchberger(&order, &vecs, &BuchbergerOptions { product_criterion: true, degree_cap: None });
        let mut basis: Vec<Vector> = out
            .basis
            .into_iter()
            .filter(|v| v.iter().all(|(t, _)| t.mono.exponent(n) == 0))
            .map(|v| v.into_iter().map(|(t, c)| (Term { comp: 0, mono: t.mono.truncate_last() }, c)).collect())
            .collect();
        basis.sort_by(|a: &Vector, b: &Vector| DEGREVLEX.compare(&a[0].0, &b[0].0));
        Ok(Ideal::from_reduced_basis(n, basis))
    }

    /// `I : <g>`, computed as `(I ∩ <g>) / g`.
    pub fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if g.nvars() != self.nvars {
            return Err(Error::AmbientMismatch { left: self.nvars, right: g.nvars() });
        }
        if g.is_zero() || self.contains(g) {
            return Ok(Ideal::unit(self.nvars));
        }
        if g.degree() == Some(0) {
            return Ok(self.clone());
        }
        let principal = Ideal::from_generators_unchecked(self.nvars, vec![g.clone()]);
        let meet = self.intersection(&principal)?;
        let gens = meet
            .generators
            .iter()
            .map(|h| h.div_exact(g).expect("every element of I ∩ <g> is divisible by g"))
            .collect();
        Ok(Ideal::from_generators_unchecked(self.nvars, gens))
    }

    /// `I : J = ∩_{g ∈ gens(J)} (I : g)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ambient(other)?;
        let mut acc: Option<Ideal> = None;
        for g in other.generators_for_products() {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) if a.is_unit() => q,
                Some(a) if q.is_unit() => a,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.nvars)))
    }

    /// `I : J^∞`, iterating colons until the chain stabilizes.
    pub fn saturation(&self, other: &Ideal) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(other)?;
            if next.same_ideal(&current) {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_saturated(&self) -> Result<bool> {
        Ok(self.colon(&Ideal::maximal(self.nvars))?.same_ideal(self))
    }

    /// Vector-space basis of the degree-`d` piece, one element per leading monomial.
    pub fn graded_piece(&self, d: u32) -> Vec<Polynomial> {
        let gb = self.groebner_basis();
        let leads = gb.leading_monomials();
        Monomial::all_of_degree(self.nvars, d)
            .into_iter()
            .filter(|u| leads.iter().any(|l| l.divides(u)))
            .map(|u| {
                let up = Polynomial::monomial(u, Rational::one());
                let nf = gb.normal_form(&up);
                &up - &nf
            })
            .collect()
    }

    /// `dim_K I_d`, read from the leading monomials.
    pub fn graded_dimension(&self, d: u32) -> usize {
        let leads = self.groebner_basis().leading_monomials();
        Monomial::all_of_degree(self.nvars, d).iter().filter(|u| leads.iter().any(|l| l.divides(u))).count()
    }

    /// `I_d ⊆ other_d`.
    pub fn piece_contained_in(&self, other: &Ideal, d: u32) -> bool {
        let gb = other.groebner_basis();
        self.graded_piece(d).iter().all(|p| gb.reduces_to_zero(p))
    }
}

#[cfg(test)]
mod tests;
