//! Machine checks of the structural results on fat point schemes, a seeded
//! random scheme generator, and a registry of worked examples.

mod examples;
mod random;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hilbert::{hilbert_function, regularity_index, HilbertFunction};
use crate::kaehler::{hp_bounds, jacobian_ideal, kaehler_hilbert_function, ri_bound, top_form_hilbert_function};
use crate::scheme::{binomial, hilbert_function_by_interpolation, FatPointScheme};

pub use examples::{builtin_example, example_names, ExampleOutput, ExampleRow};
pub use random::{random_scheme, random_schemes};

/// Identifiers accepted by [`verify_claim`].
pub const CLAIM_IDS: [&str; 7] = ["prop-2.6a", "prop-2.6b", "prop-3.1", "prop-3.5", "prop-4.1", "prop-4.3", "thm-3.7"];

/// Default number of degrees scanned past the computed start of a windowed check: `n + 3`.
pub fn default_window(w: &FatPointScheme) -> usize {
    w.ambient_dimension() + 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    HoldsFromDegree(usize),
}

impl Status {
    pub fn is_failure(&self) -> bool {
        matches!(self, Status::Fails)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Holds => write!(f, "holds"),
            Status::Fails => write!(f, "fails"),
            Status::HoldsFromDegree(d) => write!(f, "holds-from-degree({})", d),
        }
    }
}

/// A degree with the two compared values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub degree: i64,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub schemes: Vec<String>,
    pub status: Status,
    pub witness: Option<Witness>,
    /// False when the verdict rests on a finite degree window only.
    pub certified: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(claim_id: &str, schemes: &[&FatPointScheme]) -> Self {
        VerificationReport {
            claim_id: claim_id.into(),
            schemes: schemes.iter().map(|w| w.to_string()).collect(),
            status: Status::Holds,
            witness: None,
            certified: true,
            notes: Vec::new(),
        }
    }

    fn fail(&mut self, degree: i64, lhs: i64, rhs: i64) {
        self.status = Status::Fails;
        if self.witness.is_none() {
            self.witness = Some(Witness { degree, lhs, rhs });
        }
    }

    pub fn holds(&self) -> bool {
        !self.status.is_failure()
    }

    /// `claim <id> status <status> [witness d=<d> lhs=<v> rhs=<v>]`
    pub fn to_line(&self) -> String {
        let mut s = format!("claim {} status {}", self.claim_id, self.status);
        if let Some(w) = &self.witness {
            s.push_str(&format!(" witness d={} lhs={} rhs={}", w.degree, w.lhs, w.rhs));
        }
        s
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_line())
    }
}

fn require_plane(w: &FatPointScheme) -> Result<()> {
    if w.ambient_dimension() != 2 {
        return Err(Error::Unsupported(format!("claim needs a scheme in P^2, got P^{}", w.ambient_dimension())));
    }
    Ok(())
}

fn regularity(w: &FatPointScheme) -> usize {
    regularity_index(&hilbert_function_by_interpolation(w)).expect("certified")
}

/// `HP(Ω^{n+1}) = deg(slimming) = Σ C(m_j + n - 2, n)`.
pub fn verify_main_theorem(w: &FatPointScheme) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("thm-3.7", &[w]);
    let n = w.ambient_dimension() as u64;
    let hf = kaehler_hilbert_function(w, w.nvars())?;
    let fast = top_form_hilbert_function(w)?;
    let hp = hf.stable_value() as i64;
    let slim = w.slimming().degree() as i64;
    let closed: u64 = w.multiplicities().iter().map(|&m| binomial(m as u64 + n - 2, n)).sum();
    let d = hf.stable_from() as i64;
    if hp != slim {
        r.fail(d, hp, slim);
    }
    if hp != closed as i64 {
        r.fail(d, hp, closed as i64);
    }
    if fast != hf {
        let e =
            (0..=hf.stable_from().max(fast.stable_from()) as i64).find(|&i| hf.value(i) != fast.value(i)).unwrap_or(d);
        r.fail(e, hf.value(e) as i64, fast.value(e) as i64);
        r.notes.push("presentation and Jacobian paths disagree".into());
    }
    r.notes.push(format!("HP={} deg(slimming)={} closed form={}", hp, slim, closed));
    Ok(r)
}

/// Closed interval for `HP(Ω^k)` and the regularity index bound, for each requested `k`.
pub fn verify_hp_bounds(w: &FatPointScheme, ks: &[usize]) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("prop-3.1", &[w]);
    let r_w = regularity(w);
    let r_v = regularity(&w.fattening(1));
    for &k in ks {
        let hf = kaehler_hilbert_function(w, k)?;
        let hp = hf.stable_value();
        let ri = regularity_index(&hf)?;
        let (lo, hi) = hp_bounds(w, k);
        let bound = ri_bound(w, k, r_w, r_v);
        let d = hf.stable_from() as i64;
        if hp < lo {
            r.fail(d, hp as i64, lo as i64);
        }
        if hp > hi {
            r.fail(d, hp as i64, hi as i64);
        }
        if ri > bound {
            r.fail(ri as i64, ri as i64, bound as i64);
        }
        let equimultiple = w.multiplicities().windows(2).all(|p| p[0] == p[1]);
        if k == w.nvars() && equimultiple && hp != lo {
            r.fail(d, hp as i64, lo as i64);
        }
        r.notes.push(format!("k={} {} <= HP={} <= {} ri={} <= {}", k, lo, hp, hi, ri, bound));
    }
    Ok(r)
}

/// Least `i_0` with `(I_W)_i = (I_X * I_Y)_i` for all `i >= i_0`, `X` the support and `Y` the slimming.
pub fn verify_product_intersection(w: &FatPointScheme) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("prop-2.6b", &[w]);
    let iw = w.ideal();
    let prod = w.support().ideal().product(&w.slimming().ideal())?;
    let contained = prod.is_subset_of(&iw);
    if !contained {
        r.notes.push("product not contained in I_W".into());
    }
    let hw = hilbert_function_by_interpolation(w);
    let hp = hilbert_function(&prod)?;
    let top = hw.stable_from().max(hp.stable_from()) as i64 + 1;
    if hw.stable_value() != hp.stable_value() || !contained {
        r.fail(top, hw.value(top) as i64, hp.value(top) as i64);
        return Ok(r);
    }
    // equal Hilbert functions plus containment give equal graded pieces
    let last = (0..=top).rev().find(|&i| hw.value(i) != hp.value(i));
    r.status = Status::HoldsFromDegree(last.map_or(0, |d| d as usize + 1));
    if let Some(d) = last {
        r.witness = Some(Witness { degree: d, lhs: hw.value(d) as i64, rhs: hp.value(d) as i64 });
    }
    Ok(r)
}

/// `I_W : I_Y = I_X`.
pub fn verify_colon_identity(w: &FatPointScheme) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("prop-2.6a", &[w]);
    let colon = w.ideal().colon(&w.slimming().ideal())?;
    let ix = w.support().ideal();
    if !colon.same_ideal(&ix) {
        let a = hilbert_function(&colon)?;
        let b = hilbert_function(&ix)?;
        let top = a.stable_from().max(b.stable_from()) as i64 + 1;
        let d = (0..=top).find(|&i| a.value(i) != b.value(i)).unwrap_or(0);
        r.fail(d, a.value(d) as i64, b.value(d) as i64);
    }
    Ok(r)
}

fn inclusion_ideals(factors: &[(FatPointScheme, u32)]) -> Result<(Ideal, Ideal)> {
    let first = factors.first().ok_or_else(|| Error::InvalidScheme("no factors".into()))?;
    let nv = first.0.nvars();
    let mut left = Ideal::unit(nv);
    let mut right = first.0.ideal().power(first.1 + 1);
    for (j, (y, e)) in factors.iter().enumerate() {
        let p = y.ideal().power(*e);
        left = left.product(&p)?;
        if j > 0 {
            right = right.product(&p)?;
        }
    }
    Ok((left, jacobian_ideal(&right)?))
}

/// The inclusion of [`verify_derivative_inclusion`] in the single degree `d`.
pub fn verify_inclusion_at(claim_id: &str, factors: &[(FatPointScheme, u32)], d: usize) -> Result<VerificationReport> {
    let schemes: Vec<&FatPointScheme> = factors.iter().map(|(y, _)| y).collect();
    let mut r = VerificationReport::new(claim_id, &schemes);
    let (left, right) = inclusion_ideals(factors)?;
    if !left.piece_contained_in(&right, d as u32) {
        let hl = hilbert_function(&left)?;
        let hr = hilbert_function(&right)?;
        r.fail(d as i64, hl.value(d as i64) as i64, hr.value(d as i64) as i64);
    }
    r.notes.push(format!("degree {} only", d));
    Ok(r)
}

/// `(Π I_j^{e_j})_i ⊆ (∂(I_1^{e_1 + 1} Π_{j>1} I_j^{e_j}))_i`, scanned up to `window` degrees past the
/// point where both quotients have stabilized. The witness compares the two quotient dimensions.
pub fn verify_derivative_inclusion(
    claim_id: &str,
    factors: &[(FatPointScheme, u32)],
    window: usize,
) -> Result<VerificationReport> {
    let schemes: Vec<&FatPointScheme> = factors.iter().map(|(y, _)| y).collect();
    let mut r = VerificationReport::new(claim_id, &schemes);
    let (left, right) = inclusion_ideals(factors)?;
    let hl = hilbert_function(&left)?;
    let hr = hilbert_function(&right)?;
    let start = hl.stable_from().max(hr.stable_from());
    let top = start + window;
    let failing: Vec<usize> = (0..=top).filter(|&d| !left.piece_contained_in(&right, d as u32)).collect();
    r.certified = false;
    r.notes.push(format!("scanned degrees 0..={}", top));
    match failing.last() {
        Some(&d) if d == top => r.fail(d as i64, hl.value(d as i64) as i64, hr.value(d as i64) as i64),
        Some(&d) => {
            r.status = Status::HoldsFromDegree(d + 1);
            r.witness =
                Some(Witness { degree: d as i64, lhs: hl.value(d as i64) as i64, rhs: hr.value(d as i64) as i64 });
        }
        None => r.status = Status::HoldsFromDegree(0),
    }
    if !failing.is_empty() {
        r.notes.push(format!(
            "containment fails in degrees {}",
            failing.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        ));
    }
    Ok(r)
}

/// Chain `Y_1 ⊋ ... ⊋ Y_t` of the distinct multiplicities `ν_1 < ... < ν_t` of `W` with exponents
/// `ν_1 - 1, ν_2 - ν_1, ..., ν_t - ν_{t-1}`.
pub fn multiplicity_chain(w: &FatPointScheme) -> Vec<(FatPointScheme, u32)> {
    let mut levels: Vec<u32> = w.multiplicities().to_vec();
    levels.sort_unstable();
    levels.dedup();
    let mut out = Vec::new();
    let mut prev = 1;
    for &nu in &levels {
        let mults: Vec<u32> = w.multiplicities().iter().map(|&m| u32::from(m >= nu)).collect();
        let y = w.with_multiplicities(&mults).expect("same length");
        out.push((y, nu - prev));
        prev = nu;
    }
    out
}

/// Derivative inclusion along the multiplicity chain of `W`.
pub fn verify_chain_inclusion(w: &FatPointScheme, window: usize) -> Result<VerificationReport> {
    verify_derivative_inclusion("prop-3.5", &multiplicity_chain(w), window)
}

/// `HP(Ω^k)` for `k = 1, 2, 3` against the closed forms in `P^2`, and the four-term relation.
pub fn verify_plane_formulas(w: &FatPointScheme) -> Result<VerificationReport> {
    require_plane(w)?;
    let mut r = VerificationReport::new("prop-4.1", &[w]);
    let expected = plane_hp_formulas(w);
    let mut hps = [0i64; 3];
    for k in 1..=3 {
        let hf = kaehler_hilbert_function(w, k)?;
        hps[k - 1] = hf.stable_value() as i64;
        if hps[k - 1] != expected[k - 1] {
            r.fail(hf.stable_from() as i64, hps[k - 1], expected[k - 1]);
        }
    }
    if hps[1] != hps[2] + hps[0] - w.degree() as i64 {
        r.fail(-1, hps[1], hps[2] + hps[0] - w.degree() as i64);
    }
    r.notes.push(format!(
        "HP=({}, {}, {}) expected ({}, {}, {})",
        hps[0], hps[1], hps[2], expected[0], expected[1], expected[2]
    ));
    Ok(r)
}

/// `(Σ (3m-2)(m+1)/2, Σ (3m+2)(m-1)/2, Σ m(m-1)/2)`.
pub fn plane_hp_formulas(w: &FatPointScheme) -> [i64; 3] {
    let mut out = [0i64; 3];
    for &m in w.multiplicities() {
        let m = m as i64;
        out[0] += (3 * m - 2) * (m + 1) / 2;
        out[1] += (3 * m + 2) * (m - 1) / 2;
        out[2] += m * (m - 1) / 2;
    }
    out
}

/// The four graded dimensions of the complex
/// `I_{W(1)}/I_{W(2)} -> I_W Ω¹/I_{W(1)} Ω¹ -> Ω²_S/I_W Ω²_S -> Ω²_{R_W}` in `P^2`.
#[derive(Clone, Debug, Serialize)]
pub struct ExactnessTable {
    pub t: usize,
    pub a: HilbertFunction,
    pub b: HilbertFunction,
    pub c: HilbertFunction,
    pub d: HilbertFunction,
    /// `A - B + C - D` for degrees `0..=top`.
    pub sums: Vec<i64>,
    pub exact_degrees: Vec<usize>,
}

fn certified_from(values: Vec<u64>) -> HilbertFunction {
    let stable_value = *values.last().expect("nonempty");
    let stable_from = values.iter().rposition(|&v| v != stable_value).map_or(0, |i| i + 1);
    HilbertFunction::from_certified_values(values, stable_from, stable_value)
}

/// Builds a certified row from a rule valid past the stabilization of its inputs.
fn row(top: usize, f: impl Fn(i64) -> i64) -> HilbertFunction {
    certified_from((0..=top as i64).map(|i| f(i) as u64).collect())
}

pub fn exactness_table(w: &FatPointScheme) -> Result<ExactnessTable> {
    require_plane(w)?;
    let hw = hilbert_function_by_interpolation(w);
    let h1 = hilbert_function_by_interpolation(&w.fattening(1));
    let h2 = hilbert_function_by_interpolation(&w.fattening(2));
    let d = kaehler_hilbert_function(w, 2)?;
    let t = (h2.stable_from()).max(h1.stable_from() + 1).max(hw.stable_from() + 2);
    let top = t.max(d.stable_from()) + 3;
    let v = |h: &HilbertFunction, i: i64| h.value(i) as i64;
    let a = row(top, |i| v(&h2, i) - v(&h1, i));
    let b = row(top, |i| 3 * (v(&h1, i - 1) - v(&hw, i - 1)));
    let c = row(top, |i| 3 * v(&hw, i - 2));
    let d = row(top, |i| v(&d, i));
    let sums: Vec<i64> = (0..=top as i64).map(|i| v(&a, i) - v(&b, i) + v(&c, i) - v(&d, i)).collect();
    let exact_degrees = (0..=top).filter(|&i| sums[i] == 0).collect();
    Ok(ExactnessTable { t, a, b, c, d, sums, exact_degrees })
}

impl ExactnessTable {
    /// Row `B` divided by the rank 3 of `Ω¹_S`.
    pub fn b_per_basis_element(&self) -> HilbertFunction {
        certified_from(self.b.values().iter().map(|&x| x / 3).collect())
    }

    /// Row `C` divided by the rank 3 of `Ω²_S`.
    pub fn c_per_basis_element(&self) -> HilbertFunction {
        certified_from(self.c.values().iter().map(|&x| x / 3).collect())
    }
}

/// Alternating-sum exactness of the four-term complex in every degree `i >= t`.
pub fn verify_complex_exactness(w: &FatPointScheme) -> Result<VerificationReport> {
    let table = exactness_table(w)?;
    let mut r = VerificationReport::new("prop-4.3", &[w]);
    let v = |h: &HilbertFunction, i: usize| h.value(i as i64) as i64;
    for i in table.t..table.sums.len() {
        if table.sums[i] != 0 {
            r.fail(i as i64, v(&table.a, i) + v(&table.c, i), v(&table.b, i) + v(&table.d, i));
        }
    }
    if !r.status.is_failure() {
        let last = (0..table.sums.len()).rev().find(|&i| table.sums[i] != 0);
        r.status = Status::HoldsFromDegree(last.map_or(0, |i| i + 1));
        if let Some(i) = last {
            r.witness = Some(Witness {
                degree: i as i64,
                lhs: v(&table.a, i) + v(&table.c, i),
                rhs: v(&table.b, i) + v(&table.d, i),
            });
        }
    }
    r.notes.push(format!("t={}", table.t));
    r.notes.push(format!(
        "exact in degrees {} and beyond",
        table.exact_degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
    ));
    Ok(r)
}

/// Runs a claim by identifier; `ks` restricts the form degrees where applicable.
pub fn verify_claim(id: &str, w: &FatPointScheme, ks: Option<&[usize]>, window: usize) -> Result<VerificationReport> {
    let all: Vec<usize> = (1..=w.nvars()).collect();
    match id {
        "thm-3.7" | "theorem" => verify_main_theorem(w),
        "prop-3.1" => verify_hp_bounds(w, ks.unwrap_or(&all)),
        "prop-2.6a" => verify_colon_identity(w),
        "prop-2.6b" => verify_product_intersection(w),
        "prop-3.5" => verify_chain_inclusion(w, window),
        "prop-4.1" => verify_plane_formulas(w),
        "prop-4.3" => verify_complex_exactness(w),
        other => Err(Error::Unsupported(format!("unknown claim '{}'", other))),
    }
}

/// Main theorem, colon identity and bounds on `count` seeded random schemes.
pub fn random_sweep(seed: u64, count: usize) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for w in random_schemes(seed, count) {
        out.push(verify_main_theorem(&w)?);
        out.push(verify_colon_identity(&w)?);
        out.push(verify_hp_bounds(&w, &(1..=w.nvars()).collect::<Vec<_>>())?);
    }
    Ok(out)
}
