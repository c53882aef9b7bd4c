//! Homogeneous Buchberger kernel shared by ideals and free-module submodules.
//!
//! Vectors carry integer coefficients and are kept primitive; reductions are
//! fraction-free. Every input must be homogeneous with respect to the grading
//! of the [`TermOrder`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polyring::{Monomial, MonomialOrder, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct Term {
    pub comp: usize,
    pub mono: Monomial,
}

impl Term {
    fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }
}

/// Position-over-term order on `comp * mono`, lower component index first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct TermOrder {
    pub mono: MonomialOrder,
    pub shifts: Vec<i64>,
}

impl TermOrder {
    pub fn ideal(mono: MonomialOrder) -> Self {
        TermOrder { mono, shifts: vec![0] }
    }

    #[inline]
    pub fn compare(&self, a: &Term, b: &Term) -> Ordering {
        b.comp.cmp(&a.comp).then_with(|| self.mono.compare(&a.mono, &b.mono))
    }

    #[inline]
    pub fn degree(&self, t: &Term) -> i64 {
        self.mono.degree(&t.mono) as i64 + self.shifts.get(t.comp).copied().unwrap_or(0)
    }
}

pub(crate) type Vector = Vec<(Term, BigInt)>;

pub(crate) fn sort_vector(order: &TermOrder, v: &mut Vector) {
    v.sort_by(|a, b| order.compare(&b.0, &a.0));
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn make_primitive(v: &mut Vector) {
    if v.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in v.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a * v[k..] - b * (m * g)`, prefix `v[..k]` scaled by `a`.
fn combine(
    order: &TermOrder,
    v: Vector,
    k: usize,
    a: &BigInt,
    b: &BigInt,
    m: &Monomial,
    g: &[(Term, BigInt)],
) -> Vector {
    let mut out = Vec::with_capacity(v.len() + g.len());
    let scale_a = !a.is_one();
    let mut it = v.into_iter();
    for _ in 0..k {
        let (t, c) = it.next().unwrap();
        out.push((t, if scale_a { c * a } else { c }));
    }
    let mut left = it.peekable();
    let mut right = g.iter().map(|(t, c)| (Term { comp: t.comp, mono: t.mono.mul(m) }, c)).peekable();
    loop {
        let ord = match (left.peek(), right.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(x), Some(y)) => order.compare(&x.0, &y.0),
        };
        match ord {
            Ordering::Greater => {
                let (t, c) = left.next().unwrap();
                out.push((t, if scale_a { c * a } else { c }));
            }
            Ordering::Less => {
                let (t, c) = right.next().unwrap();
                out.push((t, -(b * c)));
            }
            Ordering::Equal => {
                let (t, c) = left.next().unwrap();
                let (_, d) = right.next().unwrap();
                let w = if scale_a { c * a } else { c } - b * d;
                if !w.is_zero() {
                    out.push((t, w));
                }
            }
        }
    }
    out
}

/// Reduction against a fixed list of basis vectors.
pub(crate) struct Reducer<'a> {
    pub order: &'a TermOrder,
    pub basis: &'a [Vector],
}

impl Reducer<'_> {
    fn find_divisor(&self, t: &Term, skip: Option<usize>) -> Option<usize> {
        let deg = t.mono.degree();
        self.basis
            .iter()
            .enumerate()
            .position(|(i, g)| Some(i) != skip && g[0].0.mono.degree() <= deg && g[0].0.divides(t))
    }

    /// Full reduction; result is a nonzero rational multiple of the true remainder.
    /// When `scale` is given it is multiplied by the factor applied to `v`.
    pub fn reduce(
        &self,
        mut v: Vector,
        skip: Option<usize>,
        top_only: bool,
        mut scale: Option<&mut Rational>,
    ) -> Vector {
        let mut k = 0;
        let mut steps = 0usize;
        while k < v.len() {
            match self.find_divisor(&v[k].0, skip) {
                Some(i) => {
                    let g = &self.basis[i];
                    let m = v[k].0.mono.div(&g[0].0.mono).unwrap();
                    let lc = &g[0].1;
                    let c = &v[k].1;
                    let d = lc.gcd(c);
                    let a = lc / &d;
                    let b = c / &d;
                    if let Some(s) = scale.as_deref_mut() {
                        *s *= Rational::from_integer(a.clone());
                    }
                    v = combine(self.order, v, k, &a, &b, &m, g);
                    steps += 1;
                    if steps % 16 == 0 && !v.is_empty() {
                        let before = v[0].1.clone();
                        make_primitive(&mut v);
                        if let Some(s) = scale.as_deref_mut() {
                            *s *= Rational::new(v[0].1.clone(), before);
                        }
                    }
                }
                None => {
                    if top_only {
                        break;
                    }
                    k += 1;
                }
            }
        }
        if let Some(s) = scale {
            if let Some((_, before)) = v.first().cloned() {
                make_primitive(&mut v);
                *s *= Rational::new(v[0].1.clone(), before);
            }
        } else {
            make_primitive(&mut v);
        }
        v
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    degree: i64,
}

/// Options for a Buchberger run.
#[derive(Clone, Debug, Default)]
pub(crate) struct BuchbergerOptions {
    /// Product criterion; only valid for ideals (rank one).
    pub product_criterion: bool,
    /// Stop after all pairs and generators up to this degree are processed.
    pub degree_cap: Option<i64>,
}

pub(crate) struct BuchbergerOutput {
    /// Reduced Gröbner basis, primitive integer vectors sorted by increasing leading term.
    pub basis: Vec<Vector>,
    /// Input generators that were not redundant when processed (a minimal generating set).
    pub minimal_generators: Vec<usize>,
}

/// Buchberger's algorithm with the normal selection strategy and Gebauer–Möller criteria.
pub(crate) fn buchberger(order: &TermOrder, gens: &[Vector], opts: &BuchbergerOptions) -> BuchbergerOutput {
    let mut pending: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (idx, g) in gens.iter().enumerate() {
        if let Some((t, _)) = g.first() {
            pending.entry(order.degree(t)).or_default().push(idx);
        }
    }
    let mut basis: Vec<Vector> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut minimal = Vec::new();

    loop {
        let pair_deg = pairs.iter().map(|p| p.degree).min();
        let gen_deg = pending.keys().next().copied();
        let d = match (pair_deg, gen_deg) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.degree_cap.is_some_and(|cap| d > cap) {
            break;
        }
        let (mut current, rest): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| p.degree == d);
        pairs = rest;
        current.sort_by(|a, b| order.compare(&a.lcm, &b.lcm));
        for p in current {
            let s = spoly(order, &basis[p.i], &basis[p.j], &p.lcm);
            let r = Reducer { order, basis: &basis }.reduce(s, None, false, None);
            if !r.is_empty() {
                insert(order, &mut basis, &mut pairs, r, opts.product_criterion);
            }
        }
        if pair_deg.is_some_and(|pd| pd == d) {
            // pairs in degree d first so generators are tested against a d-truncated basis
            continue;
        }
        if let Some(idxs) = pending.remove(&d) {
            for idx in idxs {
                let mut g = gens[idx].clone();
                make_primitive(&mut g);
                let r = Reducer { order, basis: &basis }.reduce(g, None, false, None);
                if !r.is_empty() {
                    minimal.push(idx);
                    insert(order, &mut basis, &mut pairs, r, opts.product_criterion);
                }
            }
        }
    }
    BuchbergerOutput { basis: interreduce(order, basis), minimal_generators: minimal }
}

fn spoly(order: &TermOrder, f: &Vector, g: &Vector, lcm: &Term) -> Vector {
    let mf = lcm.mono.div(&f[0].0.mono).unwrap();
    let mg = lcm.mono.div(&g[0].0.mono).unwrap();
    let d = f[0].1.gcd(&g[0].1);
    let a = &g[0].1 / &d;
    let b = &f[0].1 / &d;
    let scaled: Vector = f.iter().map(|(t, c)| (Term { comp: t.comp, mono: t.mono.mul(&mf) }, c.clone())).collect();
    let mut s = combine(order, scaled, 0, &a, &b, &mg, g);
    make_primitive(&mut s);
    s
}

fn insert(order: &TermOrder, basis: &mut Vec<Vector>, pairs: &mut Vec<Pair>, h: Vector, product_criterion: bool) {
    let hn = basis.len();
    let th = h[0].0.clone();
    let coprime = |a: &Term, b: &Term| product_criterion && a.mono.is_coprime(&b.mono);

    let mut candidates: Vec<(Pair, bool)> = basis
        .iter()
        .enumerate()
        .filter(|(_, g)| g[0].0.comp == th.comp)
        .map(|(i, g)| {
            let lcm = Term { comp: th.comp, mono: g[0].0.mono.lcm(&th.mono) };
            let degree = order.degree(&lcm);
            let cp = coprime(&g[0].0, &th);
            (Pair { i, j: hn, lcm, degree }, cp)
        })
        .collect();

    // chain criterion among the new pairs
    let mut kept: Vec<(Pair, bool)> = Vec::new();
    while let Some((p, cp)) = candidates.pop() {
        let dominated = !cp && candidates.iter().chain(kept.iter()).any(|(q, _)| q.lcm.mono.divides(&p.lcm.mono));
        if !dominated {
            kept.push((p, cp));
        }
    }
    // old pairs made redundant by h
    pairs.retain(|p| {
        if !th.mono.divides(&p.lcm.mono) || th.comp != p.lcm.comp {
            return true;
        }
        let li = basis[p.i][0].0.mono.lcm(&th.mono);
        let lj = basis[p.j][0].0.mono.lcm(&th.mono);
        li == p.lcm.mono || lj == p.lcm.mono
    });
    pairs.extend(kept.into_iter().filter(|(_, cp)| !cp).map(|(p, _)| p));
    basis.push(h);
}

/// Minimal, fully tail-reduced basis sorted by increasing leading term.
fn interreduce(order: &TermOrder, mut basis: Vec<Vector>) -> Vec<Vector> {
    basis.sort_by(|a, b| order.compare(&a[0].0, &b[0].0));
    let mut minimal: Vec<Vector> = Vec::with_capacity(basis.len());
    for g in basis {
        if !minimal.iter().any(|m| m[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    (0..minimal.len())
        .map(|i| {
            let mut v = exact_tail_reduce(order, &minimal, i);
            make_primitive(&mut v);
            v
        })
        .collect()
}

/// Tail-reduces `basis[i]` exactly (no rescaling of the leading term relative to the tail).
fn exact_tail_reduce(order: &TermOrder, basis: &[Vector], i: usize) -> Vector {
    let reducer = Reducer { order, basis };
    let v = basis[i].clone();
    let lead = v[0].clone();
    let mut k = 1;
    let mut v = v;
    while k < v.len() {
        match reducer.find_divisor(&v[k].0, Some(i)) {
            Some(j) => {
                let g = &basis[j];
                let m = v[k].0.mono.div(&g[0].0.mono).unwrap();
                let lc = &g[0].1;
                let c = &v[k].1;
                let d = lc.gcd(c);
                let a = lc / &d;
                let b = c / &d;
                v = combine(order, v, k, &a, &b, &m, g);
            }
            None => k += 1,
        }
    }
    debug_assert_eq!(v[0].0, lead.0);
    v
}
