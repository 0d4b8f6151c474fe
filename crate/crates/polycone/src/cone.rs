use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::ConeError;
use crate::functional::{clear_denominators, int_dot, Functional, RationalVector};
use crate::{dd, linalg};

/// A rational polyhedral cone `{x : e(x) = 0, g(x) >= 0}`, carrying both the
/// constraint description it was built from and the generator description
/// computed by double description.
///
/// Inequalities that turn out to vanish on the whole cone are promoted to
/// the equality list at construction, so the stored inequality list holds
/// only constraints with a strictly positive value somewhere on the cone.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    equalities: Vec<Functional>,
    inequalities: Vec<Functional>,
    rays: Vec<Vec<BigInt>>,
    lineality: Vec<Vec<BigInt>>,
    dim: usize,
}

fn dedup_by_key<F: Fn(&Functional) -> Functional>(
    list: &[Functional],
    key: F,
) -> Vec<Functional> {
    let mut seen: Vec<Functional> = Vec::new();
    let mut out = Vec::new();
    for f in list {
        let k = key(f);
        if !seen.contains(&k) {
            seen.push(k);
            out.push(f.clone());
        }
    }
    out
}

fn identity_basis(d: usize) -> Vec<Vec<BigInt>> {
    (0..d)
        .map(|i| {
            let mut v = vec![BigInt::zero(); d];
            v[i] = BigInt::from(1);
            v
        })
        .collect()
}

/// Canonical basis of a lattice-spanned subspace: reduced row echelon form
/// of the given generators, rows cleared to primitive integers.
fn canonical_subspace_basis(gens: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vec<BigRational>> = gens
        .iter()
        .map(|g| {
            g.iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let pivots = linalg::rref(&mut rows, d);
    rows.truncate(pivots.len());
    rows.iter().map(|r| clear_denominators(r)).collect()
}

/// Build a cone from halfspaces and hyperplanes in the given ambient
/// dimension. The empty constraint system yields the full space; an
/// infeasible-looking system yields the zero cone (never an error).
pub fn cone_from_h(
    equalities: &[Functional],
    inequalities: &[Functional],
    ambient_dim: usize,
) -> Result<Cone, ConeError> {
    for f in equalities.iter().chain(inequalities) {
        if f.dim() != ambient_dim {
            return Err(ConeError::DimMismatch {
                expected: ambient_dim,
                got: f.dim(),
            });
        }
    }
    let eqs = dedup_by_key(equalities, Functional::hyperplane_canonical);
    let ineqs = dedup_by_key(inequalities, Clone::clone);

    // Coordinates on the solution space of the equalities.
    let subspace: Vec<Vec<BigInt>> = if eqs.is_empty() {
        identity_basis(ambient_dim)
    } else {
        let rows: Vec<Vec<BigInt>> = eqs.iter().map(|f| f.coeffs().to_vec()).collect();
        linalg::nullspace_int(&rows, ambient_dim)
    };
    let k = subspace.len();

    if k == 0 {
        let mut all_eqs = eqs;
        all_eqs.extend(ineqs);
        return Ok(Cone {
            ambient_dim,
            equalities: dedup_by_key(&all_eqs, Functional::hyperplane_canonical),
            inequalities: Vec::new(),
            rays: Vec::new(),
            lineality: Vec::new(),
            dim: 0,
        });
    }

    // Restrict each inequality to the subspace; ones that vanish there are
    // equalities in disguise.
    let mut restricted: Vec<Vec<BigInt>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut promoted: Vec<usize> = Vec::new();
    for (j, f) in ineqs.iter().enumerate() {
        let g: Vec<BigInt> = subspace
            .iter()
            .map(|b| int_dot(f.coeffs(), b))
            .collect();
        if g.iter().all(|x| x.is_zero()) {
            promoted.push(j);
        } else {
            let mut g = g;
            crate::functional::normalize_primitive(&mut g);
            restricted.push(g);
            active.push(j);
        }
    }

    let (rays, lineality, dim) = if restricted.is_empty() {
        (Vec::new(), subspace.clone(), k)
    } else {
        let lin_sub = linalg::nullspace_int(&restricted, k);
        let w_idx = linalg::independent_subset(&restricted, k);
        let w = w_idx.len();
        debug_assert_eq!(w + lin_sub.len(), k);
        let w_basis: Vec<Vec<BigInt>> = w_idx.iter().map(|&i| restricted[i].clone()).collect();

        // Constraints in coordinates of the pointed complement.
        let pointed: Vec<Vec<BigInt>> = restricted
            .iter()
            .map(|g| {
                let mut h: Vec<BigInt> = w_basis.iter().map(|b| int_dot(g, b)).collect();
                crate::functional::normalize_primitive(&mut h);
                h
            })
            .collect();
        let p_rays = dd::pointed_dual_rays(&pointed, w);

        for (slot, &j) in active.iter().enumerate() {
            if p_rays.iter().all(|r| int_dot(&pointed[slot], r).is_zero()) {
                promoted.push(j);
            }
        }

        // Lift z -> W^T z -> subspace coordinates -> ambient.
        let lift = |z: &[BigInt]| -> Vec<BigInt> {
            let in_sub: Vec<BigInt> = (0..k)
                .map(|c| (0..z.len()).map(|b| &w_basis[b][c] * &z[b]).sum())
                .collect();
            let mut amb: Vec<BigInt> = (0..ambient_dim)
                .map(|c| (0..k).map(|b| &subspace[b][c] * &in_sub[b]).sum())
                .collect();
            crate::functional::normalize_primitive(&mut amb);
            amb
        };
        let ray_dim = linalg::rank_int(&p_rays, w);
        let rays: Vec<Vec<BigInt>> = p_rays.iter().map(|z| lift(z)).collect();
        let lineality: Vec<Vec<BigInt>> = lin_sub
            .iter()
            .map(|l| {
                let mut amb: Vec<BigInt> = (0..ambient_dim)
                    .map(|c| (0..k).map(|b| &subspace[b][c] * &l[b]).sum())
                    .collect();
                crate::functional::normalize_primitive(&mut amb);
                amb
            })
            .collect();
        (rays, lineality, lin_sub.len() + ray_dim)
    };

    promoted.sort_unstable();
    let mut final_eqs = eqs;
    for &j in &promoted {
        final_eqs.push(ineqs[j].clone());
    }
    let final_eqs = dedup_by_key(&final_eqs, Functional::hyperplane_canonical);
    let final_ineqs: Vec<Functional> = ineqs
        .iter()
        .enumerate()
        .filter(|(j, _)| !promoted.contains(j))
        .map(|(_, f)| f.clone())
        .collect();

    let mut rays = rays;
    rays.sort();
    let lineality = canonical_subspace_basis(&lineality, ambient_dim);

    Ok(Cone {
        ambient_dim,
        equalities: final_eqs,
        inequalities: final_ineqs,
        rays,
        lineality,
        dim,
    })
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn equalities(&self) -> &[Functional] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[Functional] {
        &self.inequalities
    }

    /// Primitive generators of the extreme rays, sorted lexicographically.
    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Canonical primitive basis of the lineality space (echelon rows).
    pub fn lineality(&self) -> &[Vec<BigInt>] {
        &self.lineality
    }

    fn check_dim(&self, other_dim: usize) -> Result<(), ConeError> {
        if self.ambient_dim != other_dim {
            return Err(ConeError::DimMismatch {
                expected: self.ambient_dim,
                got: other_dim,
            });
        }
        Ok(())
    }

    pub fn contains_point(&self, p: &RationalVector) -> Result<bool, ConeError> {
        self.check_dim(p.dim())?;
        Ok(self.equalities.iter().all(|f| f.eval(p).is_zero())
            && self.inequalities.iter().all(|f| !f.eval(p).is_negative()))
    }

    /// Containment of the other cone's generators in this cone's constraints.
    pub fn contains_cone(&self, other: &Cone) -> Result<bool, ConeError> {
        self.check_dim(other.ambient_dim)?;
        for r in &other.rays {
            if self.equalities.iter().any(|f| !f.eval_int(r).is_zero()) {
                return Ok(false);
            }
            if self.inequalities.iter().any(|f| f.eval_int(r).is_negative()) {
                return Ok(false);
            }
        }
        for l in &other.lineality {
            if self
                .equalities
                .iter()
                .chain(&self.inequalities)
                .any(|f| !f.eval_int(l).is_zero())
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as sets of points: mutual containment of generators.
    pub fn cone_eq(&self, other: &Cone) -> Result<bool, ConeError> {
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    /// Intersection, by pooling both constraint systems.
    pub fn intersection(&self, other: &Cone) -> Result<Cone, ConeError> {
        self.check_dim(other.ambient_dim)?;
        let eqs: Vec<Functional> = self
            .equalities
            .iter()
            .chain(&other.equalities)
            .cloned()
            .collect();
        let ineqs: Vec<Functional> = self
            .inequalities
            .iter()
            .chain(&other.inequalities)
            .cloned()
            .collect();
        cone_from_h(&eqs, &ineqs, self.ambient_dim)
    }

    /// True when the functional is nonnegative on the whole cone.
    pub fn supports(&self, f: &Functional) -> bool {
        self.rays.iter().all(|r| !f.eval_int(r).is_negative())
            && self.lineality.iter().all(|l| f.eval_int(l).is_zero())
    }

    /// Both strict signs of `f` are attained on the cone.
    pub fn is_cut_by(&self, f: &Functional) -> bool {
        let mut pos = false;
        let mut neg = false;
        for l in &self.lineality {
            if !f.eval_int(l).is_zero() {
                return true;
            }
        }
        for r in &self.rays {
            let v = f.eval_int(r);
            pos |= v.is_positive();
            neg |= v.is_negative();
            if pos && neg {
                return true;
            }
        }
        false
    }

    /// Intersect with the vanishing loci of supporting functionals.
    /// Errors when some functional takes a negative value on the cone.
    pub fn face(&self, tight: &[Functional]) -> Result<Cone, ConeError> {
        for f in tight {
            self.check_dim(f.dim())?;
            if !self.supports(f) {
                return Err(ConeError::NotSupporting);
            }
        }
        let mut eqs = self.equalities.clone();
        eqs.extend(tight.iter().cloned());
        cone_from_h(&eqs, &self.inequalities, self.ambient_dim)
    }

    /// A face is the intersection with the vanishing loci of exactly the
    /// inequalities that are tight on it.
    pub fn is_face_of(&self, other: &Cone) -> Result<bool, ConeError> {
        self.check_dim(other.ambient_dim)?;
        if !other.contains_cone(self)? {
            return Ok(false);
        }
        let tight: Vec<Functional> = other
            .inequalities
            .iter()
            .filter(|f| {
                self.rays.iter().all(|r| f.eval_int(r).is_zero())
                    && self.lineality.iter().all(|l| f.eval_int(l).is_zero())
            })
            .cloned()
            .collect();
        let candidate = other.face(&tight)?;
        self.cone_eq(&candidate)
    }

    /// Sum of the primitive ray generators, shifted along the first
    /// lineality basis vector when the cone has one. Satisfies every
    /// stored equality exactly and every stored inequality strictly.
    pub fn relint_point(&self) -> Result<RationalVector, ConeError> {
        if self.dim == 0 {
            return Err(ConeError::NoRelativeInterior);
        }
        let mut p = vec![BigInt::zero(); self.ambient_dim];
        for r in &self.rays {
            for (x, c) in p.iter_mut().zip(r) {
                *x += c;
            }
        }
        if let Some(l) = self.lineality.first() {
            for (x, c) in p.iter_mut().zip(l) {
                *x += c;
            }
        }
        Ok(RationalVector::from_int_vec(&p))
    }

    /// JSON view: integer constraint and generator matrices plus the
    /// dimension. Coefficients are desk-scale by construction; anything
    /// that does not fit a 64-bit integer would indicate a bug upstream.
    pub fn to_json(&self) -> Value {
        let row = |v: &[BigInt]| -> Value {
            Value::from(
                v.iter()
                    .map(|x| i64::try_from(x).expect("coefficient fits in i64"))
                    .collect::<Vec<i64>>(),
            )
        };
        json!({
            "ambient_dim": self.ambient_dim,
            "equalities": self.equalities.iter().map(|f| row(f.coeffs())).collect::<Vec<_>>(),
            "inequalities": self.inequalities.iter().map(|f| row(f.coeffs())).collect::<Vec<_>>(),
            "rays": self.rays.iter().map(|r| row(r)).collect::<Vec<_>>(),
            "lineality": self.lineality.iter().map(|l| row(l)).collect::<Vec<_>>(),
            "dim": self.dim,
        })
    }
}
