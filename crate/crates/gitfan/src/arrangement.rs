//! The stability hyperplane arrangement for a root system and multiplicity.
//!
//! Stability parameters live in coordinates `(theta_0, ..., theta_r)` on the
//! nodes of the affine diagram; the coordinate at the framing vertex is
//! eliminated through the relation `theta(rho_inf) = -n * theta(delta)`.
//! The arrangement consists of the degeneracy hyperplane `delta = 0`
//! together with `(m*delta + alpha) = 0` and `(m*delta - alpha) = 0` for
//! every positive root `alpha` and every `0 <= m < n`, deduplicated as
//! unoriented hyperplanes.

use num_bigint::BigInt;
use polycone::{cone_from_h, Cone, Functional};
use rootsys::{Root, RootSystem};

use crate::error::GitFanError;

#[derive(Debug, Clone)]
pub struct Arrangement {
    rs: RootSystem,
    n: i64,
    hyperplanes: Vec<Functional>,
    interior_cutting: Vec<bool>,
    fundamental: Cone,
}

impl Arrangement {
    pub fn build(rs: RootSystem, n: i64) -> Result<Self, GitFanError> {
        if n < 1 {
            return Err(GitFanError::BadMultiplicity(n));
        }
        let d = rs.rank() + 1;

        let delta = Functional::from_i64(rs.delta())?;
        let mut ineqs = vec![delta.clone()];
        for i in 1..=rs.rank() {
            ineqs.push(node_functional(d, i)?);
        }
        let fundamental = cone_from_h(&[], &ineqs, d)?;
        debug_assert_eq!(fundamental.dim(), d);
        debug_assert_eq!(fundamental.rays().len(), d);

        let mut hyperplanes: Vec<Functional> = vec![delta];
        for m in 0..n {
            for alpha in rs.positive_roots() {
                for sign in [1i64, -1] {
                    let mut v = vec![0i64; d];
                    for i in 0..d {
                        v[i] = m * rs.delta()[i];
                    }
                    for (i, a) in alpha.coeffs().iter().enumerate() {
                        v[i + 1] += sign * a;
                    }
                    let h = Functional::from_i64(&v)?.hyperplane_canonical();
                    if !hyperplanes.contains(&h) {
                        hyperplanes.push(h);
                    }
                }
            }
        }

        let interior_cutting = hyperplanes
            .iter()
            .map(|h| fundamental.is_cut_by(h))
            .collect();

        Ok(Arrangement {
            rs,
            n,
            hyperplanes,
            interior_cutting,
            fundamental,
        })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Ambient dimension r+1 of the stability space.
    pub fn dim(&self) -> usize {
        self.rs.rank() + 1
    }

    /// Canonical unoriented hyperplane functionals, deterministic order:
    /// delta first, then by multiple m and root order.
    pub fn hyperplanes(&self) -> &[Functional] {
        &self.hyperplanes
    }

    /// True when the hyperplane separates the interior of the fundamental
    /// cone, decided by exact two-sided feasibility on its rays.
    pub fn is_interior_cutting(&self, index: usize) -> bool {
        self.interior_cutting[index]
    }

    pub fn interior_cutting_count(&self) -> usize {
        self.interior_cutting.iter().filter(|b| **b).count()
    }

    /// The closed simplicial cone cut out by `theta(delta) >= 0` and
    /// `theta(rho_i) >= 0` for every finite node i.
    pub fn fundamental_cone(&self) -> &Cone {
        &self.fundamental
    }

    pub fn delta_functional(&self) -> Functional {
        Functional::from_i64(self.rs.delta()).expect("delta is nonzero")
    }

    /// The coordinate functional of a node, 0-based through r.
    pub fn node_functional(&self, node: usize) -> Result<Functional, GitFanError> {
        node_functional(self.dim(), node)
    }

    /// A positive root as a functional on the stability space (zero at the
    /// affine node).
    pub fn root_functional(&self, alpha: &Root) -> Functional {
        let mut v = vec![0i64; self.dim()];
        for (i, a) in alpha.coeffs().iter().enumerate() {
            v[i + 1] = *a;
        }
        Functional::from_i64(&v).expect("roots are nonzero")
    }

    /// Reduce a functional on the framed vertex set to stability
    /// coordinates: the framing coefficient folds in as
    /// `gamma_i - n * gamma_inf * delta_i`.
    pub fn reduce_functional(
        &self,
        gamma_inf: i64,
        gamma: &[i64],
    ) -> Result<Functional, GitFanError> {
        let v: Vec<BigInt> = (0..self.dim())
            .map(|i| BigInt::from(gamma[i] - self.n * gamma_inf * self.rs.delta()[i]))
            .collect();
        Ok(Functional::new(v)?)
    }
}

fn node_functional(dim: usize, node: usize) -> Result<Functional, GitFanError> {
    let mut v = vec![0i64; dim];
    v[node] = 1;
    Ok(Functional::from_i64(&v)?)
}
