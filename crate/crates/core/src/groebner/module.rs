use std::fmt;
use std::sync::{Arc, OnceLock};

use super::engine::{self, BuchbergerOptions, Term, TermOrder, Vector};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Rational};

/// Graded free module `⊕ S(-shift_j)` of rank `shifts.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    pub nvars: usize,
    pub shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(nvars: usize, shifts: Vec<i64>) -> Self {
        FreeModule { nvars, shifts }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    fn order(&self) -> TermOrder {
        TermOrder { mono: MonomialOrder::DegRevLex, shifts: self.shifts.clone() }
    }
}

/// Element of a graded free module, one polynomial per basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeModuleElement {
    pub components: Vec<Polynomial>,
}

impl FreeModuleElement {
    pub fn new(components: Vec<Polynomial>) -> Self {
        FreeModuleElement { components }
    }

    pub fn zero(nvars: usize, rank: usize) -> Self {
        FreeModuleElement { components: vec![Polynomial::zero(nvars); rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    /// Shifted degree if the element is homogeneous and nonzero.
    pub fn degree(&self, shifts: &[i64]) -> Option<i64> {
        let mut deg = None;
        for (c, s) in self.components.iter().zip(shifts) {
            if c.is_zero() {
                continue;
            }
            if !c.is_homogeneous() {
                return None;
            }
            let d = c.degree().unwrap() as i64 + s;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous(&self, shifts: &[i64]) -> bool {
        self.is_zero() || self.degree(shifts).is_some()
    }

    fn to_vector(&self, order: &TermOrder) -> Vector {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::One;
        let mut den = BigInt::one();
        for c in &self.components {
            for (_, a) in c.terms() {
                den = den.lcm(a.denom());
            }
        }
        let mut v: Vector = Vec::new();
        for (comp, c) in self.components.iter().enumerate() {
            for (m, a) in c.terms() {
                v.push((Term { comp, mono: m.clone() }, a.numer() * (&den / a.denom())));
            }
        }
        engine::sort_vector(order, &mut v);
        engine::make_primitive(&mut v);
        v
    }

    fn from_vector(v: &Vector, nvars: usize, rank: usize) -> Self {
        let mut comps: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); rank];
        let lc = Rational::from_integer(v[0].1.clone());
        for (t, c) in v {
            comps[t.comp].push((t.mono.clone(), Rational::from_integer(c.clone()) / &lc));
        }
        FreeModuleElement { components: comps.into_iter().map(|ts| Polynomial::from_terms(nvars, ts)).collect() }
    }
}

impl fmt::Debug for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug)]
struct ModuleBasis {
    elements: Vec<FreeModuleElement>,
    leading: Vec<(usize, Monomial)>,
    vectors: Vec<Vector>,
}

/// Homogeneous submodule of a graded free module.
#[derive(Clone)]
pub struct Submodule {
    ambient: FreeModule,
    generators: Vec<FreeModuleElement>,
    cache: Arc<OnceLock<ModuleBasis>>,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Submodule")
            .field("rank", &self.ambient.rank())
            .field("shifts", &self.ambient.shifts)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Submodule {
    pub fn new(ambient: FreeModule, generators: Vec<FreeModuleElement>) -> Result<Self> {
        for g in &generators {
            if g.components.len() != ambient.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "element of rank {} in a free module of rank {}",
                    g.components.len(),
                    ambient.rank()
                )));
            }
            if g.components.iter().any(|c| c.nvars() != ambient.nvars) {
                return Err(Error::ShapeMismatch("component ambient mismatch".into()));
            }
            if !g.is_homogeneous(&ambient.shifts) {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(Submodule { ambient, generators, cache: Arc::new(OnceLock::new()) })
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    /// Generators as given, including zero ones.
    pub fn generators(&self) -> &[FreeModuleElement] {
        &self.generators
    }

    fn basis(&self) -> &ModuleBasis {
        self.cache.get_or_init(|| {
            let order = self.ambient.order();
            let vecs: Vec<Vector> =
                self.generators.iter().filter(|g| !g.is_zero()).map(|g| g.to_vector(&order)).collect();
            let opts = BuchbergerOptions { product_criterion: self.ambient.rank() == 1, degree_cap: None };
            let out = engine::buchberger(&order, &vecs, &opts);
            let elements = out
                .basis
                .iter()
                .map(|v| FreeModuleElement::from_vector(v, self.ambient.nvars, self.ambient.rank()))
                .collect();
            let leading = out.basis.iter().map(|v| (v[0].0.comp, v[0].0.mono.clone())).collect();
            ModuleBasis { elements, leading, vectors: out.basis }
        })
    }

    /// Reduced Gröbner basis under position-over-term degrevlex.
    pub fn groebner_basis(&self) -> &[FreeModuleElement] {
        &self.basis().elements
    }

    /// Leading terms `(component, monomial)` of the reduced basis.
    pub fn leading_terms(&self) -> &[(usize, Monomial)] {
        &self.basis().leading
    }

    pub fn contains(&self, e: &FreeModuleElement) -> bool {
        if e.is_zero() {
            return true;
        }
        let order = self.ambient.order();
        let v = e.to_vector(&order);
        engine::Reducer { order: &order, basis: &self.basis().vectors }.reduce(v, None, false, None).is_empty()
    }

    /// Leading monomials in component `comp`.
    pub fn component_leading_monomials(&self, comp: usize) -> Vec<Monomial> {
        self.leading_terms().iter().filter(|(c, _)| *c == comp).map(|(_, m)| m.clone()).collect()
    }

    /// Nonzero generators.
    pub fn nonzero_generators(&self) -> impl Iterator<Item = &FreeModuleElement> {
        self.generators.iter().filter(|g| !g.is_zero())
    }
}
