//! Exact rational linear algebra for the restriction-equation systems.

use num::rational::BigRational;
use num::Zero;

pub enum LinOutcome {
    Unique(Vec<BigRational>),
    /// Solution space has positive dimension.
    Underdetermined { nullity: usize },
    /// No solution.
    Inconsistent,
}

/// Solves `A x = b` exactly over the rationals by Gauss-Jordan elimination.
/// Uniqueness is decided by the rank of the coefficient matrix, never by a
/// numerical tolerance.
pub fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> LinOutcome {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    debug_assert_eq!(b.len(), rows);

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].recip();
        for entry in a[row].iter_mut() {
            *entry *= &inv;
        }
        b[row] *= &inv;
        for i in 0..rows {
            if i == row || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in 0..cols {
                let delta = &factor * &a[row][j];
                a[i][j] -= delta;
            }
            let delta = &factor * &b[row];
            b[i] -= delta;
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    // any remaining nonzero right-hand side is a contradiction
    if b[row..].iter().any(|v| !v.is_zero()) {
        return LinOutcome::Inconsistent;
    }
    if pivot_cols.len() < cols {
        return LinOutcome::Underdetermined { nullity: cols - pivot_cols.len() };
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = b[r].clone();
    }
    LinOutcome::Unique(x)
}
