use std::collections::HashMap;

use super::interpolation::graded_piece;
use super::FatPointScheme;
use crate::error::Result;
use crate::linalg::{Echelon, SparseRow};
use crate::polyring::{Monomial, Polynomial};

/// A minimal set of separators of `W_j` in `W` (`j` is 1-based), by nondecreasing degree.
///
/// Chosen greedily degree by degree from a basis of `(I_{W_j})_d` outside the
/// span of `(I_W + <F_1, ..., F_k>)_d`; the result has `deg W - deg W_j` elements.
pub fn separators(w: &FatPointScheme, j: usize) -> Result<Vec<Polynomial>> {
    w.check_index(j)?;
    let wj = w.reduce_at(j)?;
    let nu = (w.degree() - wj.degree()) as usize;
    let nv = w.nvars();
    let mut chosen: Vec<Polynomial> = Vec::new();
    let mut d = 0usize;
    while chosen.len() < nu {
        assert!(d as u64 <= w.degree() + 1, "separator search exceeded the regularity bound");
        let monos = Monomial::all_of_degree(nv, d as u32);
        let col: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let to_row = |p: &Polynomial| -> SparseRow { p.terms().iter().map(|(m, c)| (col[m], c.clone())).collect() };
        let mut span = Echelon::new(monos.len());
        for p in graded_piece(w, d) {
            span.insert(to_row(&p));
        }
        for f in &chosen {
            let e = f.degree().unwrap_or(0) as usize;
            for m in Monomial::all_of_degree(nv, (d - e) as u32) {
                span.insert(to_row(&f.mul_monomial(&m)));
            }
        }
        for p in graded_piece(&wj, d) {
            if chosen.len() == nu {
                break;
            }
            if span.insert(to_row(&p)) {
                chosen.push(p);
            }
        }
        d += 1;
    }
    Ok(chosen)
}
