use std::fmt;

use serde::Serialize;

use super::{
    exactness_table, verify_colon_identity, verify_complex_exactness, verify_derivative_inclusion, verify_hp_bounds,
    verify_inclusion_at, verify_main_theorem, verify_plane_formulas, verify_product_intersection, Status,
    VerificationReport,
};
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_function, regularity_index, HilbertFunction};
use crate::kaehler::{jacobian_ideal, kaehler_hilbert_function};
use crate::scheme::{hilbert_function_by_interpolation, FatPointScheme};

const NAMES: [&str; 5] = ["ex-2.7", "ex-2.8", "ex-3.4", "ex-4.4", "rem-4.2"];

/// Built-in example names, sorted.
pub fn example_names() -> &'static [&'static str] {
    &NAMES
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleRow {
    pub label: String,
    pub hilbert_function: HilbertFunction,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleOutput {
    pub name: String,
    pub rows: Vec<ExampleRow>,
    pub reports: Vec<VerificationReport>,
}

impl ExampleOutput {
    fn new(name: &str) -> Self {
        ExampleOutput { name: name.into(), rows: Vec::new(), reports: Vec::new() }
    }

    fn row(&mut self, label: &str, hf: HilbertFunction) {
        self.rows.push(ExampleRow { label: label.into(), hilbert_function: hf });
    }

    pub fn row_named(&self, label: &str) -> Option<&HilbertFunction> {
        self.rows.iter().find(|r| r.label == label).map(|r| &r.hilbert_function)
    }

    pub fn report(&self, claim_id: &str) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.claim_id == claim_id)
    }
}

impl fmt::Display for ExampleOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.rows {
            writeln!(f, "{:width$}  {}", r.label, r.hilbert_function, width = width)?;
        }
        for r in &self.reports {
            writeln!(f, "{}", r)?;
        }
        Ok(())
    }
}

const GRID: [[i64; 3]; 8] = [[1, 0, 0], [1, 0, 1], [1, 1, 0], [1, 1, 1], [1, 2, 0], [1, 2, 1], [1, 3, 0], [1, 3, 1]];

fn grid_scheme(mults: &[u32]) -> FatPointScheme {
    let pts: Vec<&[i64]> = GRID.iter().map(|p| &p[..]).collect();
    let w = FatPointScheme::from_integers(2, &pts, &[1; 8]).expect("grid points");
    w.with_multiplicities(mults).expect("eight multiplicities")
}

/// `W = P1 + 2P2 + P3 + 2P4 + 2P5 + P6 + 5P7 + P8` on the 2 x 4 grid.
pub fn grid_example() -> FatPointScheme {
    grid_scheme(&[1, 2, 1, 2, 2, 1, 5, 1])
}

/// Double points on the grid with `(1:1:1)` removed.
pub fn grid_double_points() -> FatPointScheme {
    grid_scheme(&[2, 2, 2, 0, 2, 2, 2, 2])
}

fn ideal_row(ideal: &crate::groebner::Ideal) -> Result<HilbertFunction> {
    hilbert_function(ideal)
}

fn ex27() -> Result<ExampleOutput> {
    let mut out = ExampleOutput::new("ex-2.7");
    let w = grid_example();
    let x = w.support();
    let y = w.slimming();
    out.row("HF_X", hilbert_function_by_interpolation(&x));
    out.row("HF_Y", hilbert_function_by_interpolation(&y));
    out.row("HF_W", hilbert_function_by_interpolation(&w));
    out.row("HF_S/(I_X*I_Y)", ideal_row(&x.ideal().product(&y.ideal())?)?);
    out.reports.push(verify_product_intersection(&w)?);
    out.reports.push(verify_colon_identity(&w)?);
    out.reports.push(verify_main_theorem(&w)?);
    Ok(out)
}

fn ex28() -> Result<ExampleOutput> {
    let mut out = ExampleOutput::new("ex-2.8");
    let w = grid_double_points();
    let x = w.support();
    out.row("HF_W'", hilbert_function_by_interpolation(&w));
    out.row("HF_S/I_X'^2", ideal_row(&x.ideal().power(2))?);
    out.reports.push(verify_product_intersection(&w)?);
    out.reports.push(verify_main_theorem(&w)?);
    Ok(out)
}

fn ex34() -> Result<ExampleOutput> {
    let mut out = ExampleOutput::new("ex-3.4");
    let x = grid_scheme(&[1, 1, 1, 1, 0, 0, 0, 0]);
    let y = grid_scheme(&[1, 1, 0, 0, 1, 1, 0, 0]);
    let (ix, iy) = (x.ideal(), y.ideal());
    out.row("HF_S/(I_X*I_Y)", ideal_row(&ix.product(&iy)?)?);
    out.row("HF_S/d(I_X^2*I_Y)", ideal_row(&jacobian_ideal(&ix.power(2).product(&iy)?)?)?);
    let factors = [(x, 1), (y, 1)];
    let mut at = verify_inclusion_at("lem-3.3-at-4", &factors, 4)?;
    at.notes.push("Y is not a subset of X".into());
    out.reports.push(at);
    out.reports.push(verify_derivative_inclusion("lem-3.3", &factors, 5)?);
    Ok(out)
}

fn ex44() -> Result<ExampleOutput> {
    let mut out = ExampleOutput::new("ex-4.4");
    let w = grid_example();
    let table = exactness_table(&w)?;
    out.row("I_W1/I_W2", table.a.clone());
    out.row("I_W.O1/I_W1.O1 printed", table.b_per_basis_element());
    out.row("I_W.O1/I_W1.O1 rank 3", table.b.clone());
    out.row("O2_S/I_W.O2_S printed", table.c_per_basis_element());
    out.row("O2_S/I_W.O2_S rank 3", table.c.clone());
    out.row("O2_R", table.d.clone());
    out.reports.push(verify_complex_exactness(&w)?);
    out.reports.push(verify_plane_formulas(&w)?);
    out.reports.push(verify_hp_bounds(&w, &[2])?);
    Ok(out)
}

/// Three non-collinear points in `P^2`.
pub fn three_points() -> FatPointScheme {
    FatPointScheme::from_integers(2, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], &[1, 1, 1]).expect("three points")
}

fn rem42() -> Result<ExampleOutput> {
    let mut out = ExampleOutput::new("rem-4.2");
    let w = three_points();
    let r_w = regularity_index(&hilbert_function_by_interpolation(&w))?;
    let r_v = regularity_index(&hilbert_function_by_interpolation(&w.fattening(1)))?;
    let t = (r_w + 1).max(r_v);
    let mut r = VerificationReport::new("rem-4.2", &[&w]);
    for k in 1..=3 {
        let hf = kaehler_hilbert_function(&w, k)?;
        let ri = regularity_index(&hf)?;
        let bound = if k == 1 { t } else { t + 1 };
        if ri > bound {
            r.fail(ri as i64, ri as i64, bound as i64);
        }
        r.notes.push(format!("k={} ri={} bound={}", k, ri, bound));
        out.row(&format!("O{}_R", k), hf);
    }
    if !r.status.is_failure() {
        r.status = Status::Holds;
    }
    out.reports.push(r);
    out.reports.push(verify_plane_formulas(&w)?);
    Ok(out)
}

/// Recomputes every row and check of a named example.
pub fn builtin_example(name: &str) -> Result<ExampleOutput> {
    match name {
        "ex-2.7" => ex27(),
        "ex-2.8" => ex28(),
        "ex-3.4" => ex34(),
        "ex-4.4" => ex44(),
        "rem-4.2" => rem42(),
        other => Err(Error::Unsupported(format!("unknown example '{}'", other))),
    }
}
