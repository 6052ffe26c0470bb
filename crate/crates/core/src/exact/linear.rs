//! Gaussian elimination over the rationals: rank, null spaces, and linear
//! systems with several right-hand sides.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense rational matrix as a list of rows, all of equal length.
pub type Rows = Vec<Vec<BigRational>>;

/// Reduces `rows` to reduced row-echelon form in place, choosing pivots only
/// among the first `ncols` columns (row operations span the whole row).
/// Returns the pivot columns; rows past `pivots.len()` are zero in the
/// first `ncols` columns.
pub fn rref_prefix(rows: &mut Rows, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Reduced row-echelon form over all columns; zero rows are dropped.
pub fn rref(rows: &mut Rows, ncols: usize) -> Vec<usize> {
    let pivots = rref_prefix(rows, ncols);
    rows.truncate(pivots.len());
    pivots
}

pub fn rank(rows: &Rows, ncols: usize) -> usize {
    let mut work = rows.clone();
    rref(&mut work, ncols).len()
}

/// Basis of `{x : M x = 0}`, one vector per free column, with the free
/// coordinate set to 1 (the basis read off the reduced echelon form).
pub fn null_space(rows: &Rows, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut work = rows.clone();
    let pivots = rref(&mut work, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in work.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `M x = b` for each right-hand side `b` in `rhs`. Free variables
/// are set to zero; `None` marks an inconsistent system.
pub fn solve_many(rows: &Rows, ncols: usize, rhs: &[Vec<BigRational>]) -> Vec<Option<Vec<BigRational>>> {
    let width = ncols + rhs.len();
    let mut aug: Rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    debug_assert!(aug.iter().all(|r| r.len() == width));
    let pivots = rref_prefix(&mut aug, ncols);
    (0..rhs.len())
        .map(|k| {
            let col = ncols + k;
            // Rows without a pivot read 0 = b.
            if aug[pivots.len()..].iter().any(|row| !row[col].is_zero()) {
                return None;
            }
            let mut x = vec![BigRational::zero(); ncols];
            for (row, &p) in aug.iter().zip(&pivots) {
                x[p] = row[col].clone();
            }
            Some(x)
        })
        .collect()
}

/// `M x` for a row-list matrix.
pub fn apply(rows: &Rows, x: &[BigRational]) -> Vec<BigRational> {
    rows.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
