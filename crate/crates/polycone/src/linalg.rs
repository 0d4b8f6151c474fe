//! Exact Gaussian elimination over the rationals, sized for desk-scale
//! systems (dimensions below ten, a few hundred rows).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::functional::clear_denominators;

fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(a: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x /= &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..ncols {
                    let s = a[row][j].clone() * &f;
                    a[i][j] -= s;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    pivots
}

pub(crate) fn rank_int(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    let mut a = to_rational_rows(rows);
    rref(&mut a, ncols).len()
}

/// Basis of the common kernel of the rows, as primitive integer vectors in
/// echelon order.
pub(crate) fn nullspace_int(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut a = to_rational_rows(rows);
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[ri][fc].clone();
            }
            clear_denominators(&v)
        })
        .collect()
}

/// Indices of a maximal linearly independent subset, greedy in input order.
pub(crate) fn independent_subset(rows: &[Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let mut picked: Vec<Vec<BigRational>> = Vec::new();
    let mut idx = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut trial = picked.clone();
        trial.push(
            row.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        );
        if rref(&mut trial, ncols).len() == picked.len() + 1 {
            picked.push(
                row.iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect(),
            );
            idx.push(i);
            if idx.len() == ncols {
                break;
            }
        }
    }
    idx
}

/// Inverse of a square integer matrix; `None` when singular.
pub(crate) fn invert_int(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<BigRational> = r
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend(vec![BigRational::zero(); n]);
            row
        })
        .collect();
    for i in 0..n {
        a[i][n + i] = BigRational::one();
    }
    let pivots = rref(&mut a, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
