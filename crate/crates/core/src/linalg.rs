//! Exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::polyring::Rational;

pub type SparseRow = Vec<(usize, Rational)>;

/// Incrementally built row-echelon basis of sparse rational row vectors.
///
/// Every stored row has a leading coefficient of one at its pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.pivot_row.len()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.pivot_row.len()
    }

    /// Remainder of `row` after eliminating every pivot column.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.sort_by_key(|e| e.0);
        let mut k = 0;
        while k < row.len() {
            let col = row[k].0;
            match self.pivot_row[col] {
                Some(p) => {
                    let c = row[k].1.clone();
                    row = sub_scaled(row, k, &self.rows[p], &c);
                }
                None => k += 1,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = r[0].1.recip();
        if !inv.is_one() {
            for e in r.iter_mut() {
                e.1 *= &inv;
            }
        }
        self.pivot_row[r[0].0] = Some(self.rows.len());
        self.rows.push(r);
        true
    }
}

/// `row[..k]` followed by `row[k..] - c * pivot`, where `pivot` starts at `row[k].0` with a one.
fn sub_scaled(row: SparseRow, k: usize, pivot: &SparseRow, c: &Rational) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut it = row.into_iter();
    for _ in 0..k {
        out.push(it.next().unwrap());
    }
    let mut a = it.peekable();
    let mut b = pivot.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().unwrap()),
            (None, Some(_)) => {
                let (col, v) = b.next().unwrap();
                out.push((*col, -(c * v)));
            }
            (Some(x), Some(y)) => {
                if x.0 < y.0 {
                    out.push(a.next().unwrap());
                } else if x.0 > y.0 {
                    let (col, v) = b.next().unwrap();
                    out.push((*col, -(c * v)));
                } else {
                    let (col, u) = a.next().unwrap();
                    let (_, v) = b.next().unwrap();
                    let w = u - c * v;
                    if !w.is_zero() {
                        out.push((col, w));
                    }
                }
            }
        }
    }
    out
}

/// Rank of a dense matrix.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(dense_to_sparse(r));
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}

pub fn dense_to_sparse(row: &[Rational]) -> SparseRow {
    row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect()
}

/// Basis of the right kernel `{ v : A v = 0 }` of a dense matrix with `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(dense_to_sparse(r));
        if ech.is_full() {
            return Vec::new();
        }
    }
    // back-substitute to reduced row echelon form
    let mut rref: Vec<SparseRow> = ech.rows.clone();
    rref.sort_by_key(|r| r[0].0);
    for i in (0..rref.len()).rev() {
        let pivot = rref[i].clone();
        let pcol = pivot[0].0;
        for row in rref.iter_mut().take(i) {
            if let Some(pos) = row.iter().position(|e| e.0 == pcol) {
                let c = row[pos].1.clone();
                let taken = std::mem::take(row);
                *row = sub_scaled(taken, pos, &pivot, &c);
            }
        }
    }
    let mut is_pivot = vec![false; ncols];
    for r in &rref {
        is_pivot[r[0].0] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for r in &rref {
            if let Some((_, val)) = r.iter().find(|e| e.0 == free) {
                v[r[0].0] = -val.clone();
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::rational as q;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let dot: Rational = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let a = mat(&[&[1, 0], &[0, 1]]);
        assert!(kernel(&a, 2).is_empty());
        assert_eq!(kernel(&[], 3).len(), 3);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(4);
        assert!(e.insert(vec![(0, q(2)), (3, q(1))]));
        assert!(e.insert(vec![(1, q(1)), (3, q(-1))]));
        assert!(!e.insert(vec![(0, q(4)), (1, q(3)), (3, q(-1))]));
        assert!(e.contains(vec![(1, q(5)), (3, q(-5))]));
        assert!(!e.contains(vec![(2, q(1))]));
        assert_eq!(e.rank(), 2);
    }
}
