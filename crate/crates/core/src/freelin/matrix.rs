//! Exact rational matrices, reduced row-echelon form, kernels and ranks.
//!
//! Rows are stored sparsely (sorted column/value pairs, zeros omitted)
//! because the linear systems produced by coproduct and pairing questions
//! are large but thin. All arithmetic is exact; the reduced row-echelon
//! form is therefore canonical for the row space, which makes every answer
//! below deterministic regardless of row order.

use num_traits::{One, Zero};

use crate::freelin::scalar::Rational;

type Row = Vec<(usize, Rational)>;

fn row_get(row: &Row, col: usize) -> Option<&Rational> {
    row.binary_search_by_key(&col, |&(c, _)| c).ok().map(|i| &row[i].1)
}

/// `a - f * b` for sorted sparse rows, dropping cancellations.
fn row_sub_mul(a: &Row, b: &Row, f: &Rational) -> Row {
    let mut out = Row::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next_a = a.get(i).map(|&(c, _)| c);
        let next_b = b.get(j).map(|&(c, _)| c);
        match (next_a, next_b) {
            (Some(ca), Some(cb)) if ca == cb => {
                let v = &a[i].1 - f * &b[j].1;
                if !v.is_zero() {
                    out.push((ca, v));
                }
                i += 1;
                j += 1;
            }
            (Some(ca), Some(cb)) if ca < cb => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), Some(_)) | (None, Some(_)) => {
                out.push((b[j].0, -(f * &b[j].1)));
                j += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

fn sparsify(dense: &[Rational]) -> Row {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (c, v.clone()))
        .collect()
}

/// A rows-by-cols matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Row::new(); rows] }
    }

    /// Builds from dense rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| sparsify(r)).collect(),
        }
    }

    /// Builds from (row, col, value) triplets; later triplets add to
    /// earlier ones at the same position.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Matrix
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut dense: Vec<std::collections::BTreeMap<usize, Rational>> =
            vec![std::collections::BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r}, {c}) out of shape");
            let slot = dense[r].entry(c).or_insert_with(Rational::zero);
            *slot += v;
        }
        Matrix {
            rows,
            cols,
            data: dense
                .into_iter()
                .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> Rational {
        assert!(r < self.rows && c < self.cols, "index out of shape");
        row_get(&self.data[r], c).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.at(r, c)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut triplets = Vec::new();
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                triplets.push((*c, r, v.clone()));
            }
        }
        Matrix::from_triplets(self.cols, self.rows, triplets)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (c, coeff) in row {
                    acc += coeff * &v[*c];
                }
                acc
            })
            .collect()
    }

    /// Reduced row-echelon form: the nonzero reduced rows (in pivot order)
    /// and their pivot columns. Leftmost-column pivoting; the result is the
    /// canonical normal form of the row space.
    fn rref(&self) -> (Vec<Row>, Vec<usize>) {
        let mut work: Vec<Row> = self.data.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut pivots = Vec::new();
        let mut fixed = 0;
        for col in 0..self.cols {
            let Some(found) =
                (fixed..work.len()).find(|&i| row_get(&work[i], col).is_some())
            else {
                continue;
            };
            work.swap(fixed, found);
            // Normalize the pivot row to a leading 1.
            let lead = row_get(&work[fixed], col).unwrap().clone();
            if !lead.is_one() {
                for (_, v) in work[fixed].iter_mut() {
                    *v /= &lead;
                }
            }
            // Eliminate the pivot column everywhere else.
            let pivot_row = work[fixed].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i != fixed {
                    if let Some(f) = row_get(row, col).cloned() {
                        *row = row_sub_mul(row, &pivot_row, &f);
                    }
                }
            }
            work.retain(|r| !r.is_empty());
            pivots.push(col);
            fixed += 1;
            if fixed == work.len() {
                break; // every remaining row is a pivot row already
            }
        }
        debug_assert_eq!(work.len(), pivots.len());
        (work, pivots)
    }

    /// The rank of the matrix.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// A basis of the right kernel `{v : M v = 0}`, one vector per free column
/// of the reduced row-echelon form, in ascending free-column order, with
/// the free coordinate normalized to 1. Empty exactly when the kernel is
/// trivial. The convention makes `kernel_basis([[1, 2]]) == [[-2, 1]]`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Rational>> {
    let (rows, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols()];
        v[free] = Rational::one();
        for (row, &pcol) in rows.iter().zip(&pivots) {
            if let Some(entry) = row_get(row, free) {
                v[pcol] = -entry.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// An incrementally built row space in reduced echelon form; used to grow
/// spans vector by vector and read off dimensions exactly.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Row>, // reduced, sorted by leading column
}

impl RowSpace {
    pub fn new(cols: usize) -> RowSpace {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, dense: &[Rational]) -> Row {
        let mut r = sparsify(dense);
        for row in &self.rows {
            if r.is_empty() {
                break;
            }
            let lead = row[0].0;
            if let Some(f) = row_get(&r, lead).cloned() {
                r = row_sub_mul(&r, row, &f);
            }
        }
        r
    }

    /// True when the vector already lies in the span.
    pub fn contains(&self, dense: &[Rational]) -> bool {
        assert_eq!(dense.len(), self.cols, "vector length mismatch");
        self.reduce(dense).is_empty()
    }

    /// Inserts a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, dense: &[Rational]) -> bool {
        assert_eq!(dense.len(), self.cols, "vector length mismatch");
        let mut r = self.reduce(dense);
        if r.is_empty() {
            return false;
        }
        let lead_val = r[0].1.clone();
        if !lead_val.is_one() {
            for (_, v) in r.iter_mut() {
                *v /= &lead_val;
            }
        }
        let lead = r[0].0;
        // Keep the stored rows fully reduced against the newcomer.
        for row in self.rows.iter_mut() {
            if let Some(f) = row_get(row, lead).cloned() {
                *row = row_sub_mul(row, &r, &f);
            }
        }
        let pos = self.rows.partition_point(|row| row[0].0 < lead);
        self.rows.insert(pos, r);
        true
    }
}
