//! Double description for pointed cones: incremental halfspace insertion
//! with the combinatorial adjacency test, over exact integer arithmetic.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::functional::{clear_denominators, int_dot, normalize_primitive};
use crate::linalg;

/// Set of constraint indices, packed.
#[derive(Clone, Debug)]
pub(crate) struct IndexSet {
    words: Vec<u64>,
}

impl IndexSet {
    fn new(nbits: usize) -> Self {
        IndexSet {
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &IndexSet) -> IndexSet {
        IndexSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: IndexSet,
}

/// Extreme rays of `{z : h(z) >= 0 for all h}` under the precondition that
/// the constraints jointly have trivial kernel, so the cone is pointed.
/// Returns primitive integer generators in unspecified order.
pub(crate) fn pointed_dual_rays(constraints: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    if dim == 0 {
        return Vec::new();
    }
    let m = constraints.len();
    let basis = linalg::independent_subset(constraints, dim);
    assert_eq!(basis.len(), dim, "constraints must span the dual space");

    let chosen: Vec<Vec<BigInt>> = basis.iter().map(|&i| constraints[i].clone()).collect();
    let inv = linalg::invert_int(&chosen).expect("independent rows invert");
    let mut rays: Vec<Ray> = (0..dim)
        .map(|col| {
            let column: Vec<_> = (0..dim).map(|row| inv[row][col].clone()).collect();
            let mut zeros = IndexSet::new(m);
            for (k, &ci) in basis.iter().enumerate() {
                if k != col {
                    zeros.insert(ci);
                }
            }
            Ray {
                coords: clear_denominators(&column),
                zeros,
            }
        })
        .collect();

    for t in 0..m {
        if basis.contains(&t) {
            continue;
        }
        let h = &constraints[t];
        let values: Vec<BigInt> = rays.iter().map(|r| int_dot(h, &r.coords)).collect();
        let has_neg = values.iter().any(|v| v.is_negative());
        if !has_neg {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(t);
                }
            }
            continue;
        }
        let has_pos = values.iter().any(|v| v.is_positive());
        if !has_pos {
            let mut kept = Vec::new();
            for (r, v) in rays.drain(..).zip(&values) {
                if v.is_zero() {
                    let mut r = r;
                    r.zeros.insert(t);
                    kept.push(r);
                }
            }
            rays = kept;
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut new_rays = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(s, r)| s == p || s == q || !common.is_subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let mut coords: Vec<BigInt> = rays[p]
                    .coords
                    .iter()
                    .zip(&rays[q].coords)
                    .map(|(cp, cq)| &values[p] * cq - &values[q] * cp)
                    .collect();
                normalize_primitive(&mut coords);
                let mut zeros = common;
                zeros.insert(t);
                new_rays.push(Ray { coords, zeros });
            }
        }
        let mut kept = Vec::new();
        for (i, r) in rays.drain(..).enumerate() {
            if values[i].is_positive() {
                kept.push(r);
            } else if values[i].is_zero() {
                let mut r = r;
                r.zeros.insert(t);
                kept.push(r);
            }
        }
        kept.extend(new_rays);
        rays = kept;
    }

    rays.into_iter().map(|r| r.coords).collect()
}
