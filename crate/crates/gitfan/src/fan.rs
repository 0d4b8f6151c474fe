//! Localization of stability parameters to fan cones, the chamber test,
//! and cell enumeration inside the fundamental cone.
//!
//! Everything here is certified only inside the fundamental cone, so every
//! entry point rejects input that leaves it.

use std::collections::BTreeSet;

use num_traits::Zero;
use polycone::{cone_from_h, Cone, Functional, RationalVector};

use crate::arrangement::Arrangement;
use crate::cones::{cone_from_sign_vector, signs_at, ConeLabel, GitCone, Sign};
use crate::error::GitFanError;

/// Counter limiting the candidate regions an enumeration may touch.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub const DEFAULT_LIMIT: u64 = 1 << 20;

    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn standard() -> Self {
        Self::new(Self::DEFAULT_LIMIT)
    }

    pub fn charge(&mut self, amount: u64) -> Result<(), GitFanError> {
        self.used = self.used.saturating_add(amount);
        if self.used > self.limit {
            Err(GitFanError::BudgetExceeded {
                used: self.used,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::standard()
    }
}

/// True when the functional is identically zero on the cone.
pub fn vanishes_on(cone: &Cone, f: &Functional) -> bool {
    cone.rays().iter().all(|r| f.eval_int(r).is_zero())
        && cone.lineality().iter().all(|l| f.eval_int(l).is_zero())
}

/// The fan cone whose relative interior contains the given point: equality
/// on the hyperplanes through the point, the matching closed halfspace on
/// the rest. The facets of the fundamental cone all lie in the
/// arrangement, so the result automatically stays inside it.
pub fn cell_at(arr: &Arrangement, theta: &RationalVector) -> Result<GitCone, GitFanError> {
    if !arr.fundamental_cone().contains_point(theta)? {
        return Err(GitFanError::PointOutsideFundamental);
    }
    let signs = signs_at(arr, theta)?;
    let cone = cone_from_sign_vector(arr, &signs)?;
    Ok(GitCone::from_parts(cone, signs, ConeLabel::Cell))
}

/// Chamber test: full-dimensional and on one closed side of every
/// hyperplane. Errors on cones leaving the fundamental cone, where the fan
/// structure is not certified.
pub fn is_chamber(arr: &Arrangement, c: &Cone) -> Result<bool, GitFanError> {
    if !arr.fundamental_cone().contains_cone(c)? {
        return Err(GitFanError::ConeOutsideFundamental);
    }
    Ok(c.dim() == arr.dim() && arr.hyperplanes().iter().all(|h| !c.is_cut_by(h)))
}

/// The smallest face of the fundamental cone containing the given cone:
/// cut by the facet functionals that vanish identically on it.
pub fn minimal_face_containing(arr: &Arrangement, c: &Cone) -> Result<Cone, GitFanError> {
    let f = arr.fundamental_cone();
    if !f.contains_cone(c)? {
        return Err(GitFanError::ConeOutsideFundamental);
    }
    let tight: Vec<Functional> = f
        .inequalities()
        .iter()
        .filter(|h| vanishes_on(c, h))
        .cloned()
        .collect();
    Ok(f.face(&tight)?)
}

/// Dimension of the fan cone at the point. For n >= 2 this is the Picard
/// rank of the corresponding quotient; for n = 1 it is only the dimension.
pub fn picard_rank(arr: &Arrangement, theta: &RationalVector) -> Result<usize, GitFanError> {
    Ok(cell_at(arr, theta)?.dim())
}

/// Whether the fan cone at the point fills the smallest face of the
/// fundamental cone containing it. For n >= 2 this detects Q-factoriality
/// of the corresponding quotient.
pub fn is_q_factorial(arr: &Arrangement, theta: &RationalVector) -> Result<bool, GitFanError> {
    let cell = cell_at(arr, theta)?;
    let face = minimal_face_containing(arr, cell.cone())?;
    Ok(cell.dim() == face.dim())
}

/// All chamber closures containing the given cone: the signs a chamber
/// must carry are forced wherever the cone leaves a hyperplane, and free
/// exactly on the interior-cutting hyperplanes through it. Every free
/// assignment is one budget candidate; full-dimensional resolutions are
/// the answers, in mask order.
pub fn chambers_containing(
    arr: &Arrangement,
    c: &Cone,
    budget: &mut Budget,
) -> Result<Vec<GitCone>, GitFanError> {
    let f = arr.fundamental_cone();
    if !f.contains_cone(c)? {
        return Err(GitFanError::ConeOutsideFundamental);
    }
    let interior = f
        .relint_point()
        .expect("fundamental cone is full-dimensional");

    let mut base: Vec<Sign> = Vec::with_capacity(arr.hyperplanes().len());
    let mut free: Vec<usize> = Vec::new();
    for (j, h) in arr.hyperplanes().iter().enumerate() {
        let mut pos = false;
        let mut neg = false;
        for l in c.lineality() {
            if !h.eval_int(l).is_zero() {
                pos = true;
                neg = true;
            }
        }
        for r in c.rays() {
            match Sign::of_int(&h.eval_int(r)) {
                Sign::Pos => pos = true,
                Sign::Neg => neg = true,
                Sign::Zero => {}
            }
        }
        base.push(match (pos, neg) {
            (true, true) => return Ok(Vec::new()),
            (true, false) => Sign::Pos,
            (false, true) => Sign::Neg,
            (false, false) => {
                if arr.is_interior_cutting(j) {
                    free.push(j);
                    Sign::Zero
                } else {
                    // One-sided on the fundamental cone, so any chamber
                    // sits on the interior side.
                    Sign::of(&h.eval(&interior))
                }
            }
        });
    }

    let count = 1u64.checked_shl(free.len() as u32).unwrap_or(u64::MAX);
    budget.charge(count)?;
    let mut out = Vec::new();
    for mask in 0..count {
        let mut signs = base.clone();
        for (bit, &j) in free.iter().enumerate() {
            signs[j] = if mask >> bit & 1 == 1 {
                Sign::Pos
            } else {
                Sign::Neg
            };
        }
        let cone = cone_from_sign_vector(arr, &signs)?;
        if cone.dim() == arr.dim() {
            out.push(GitCone::from_parts(cone, signs, ConeLabel::Cell));
        }
    }
    Ok(out)
}

/// All fan cones of dimension d inside a face of the fundamental cone.
/// Cones of top dimension in the face come from halfspace splitting; lower
/// dimensions recurse into hyperplane slices of the face.
pub fn cells_in_face(
    arr: &Arrangement,
    face: &Cone,
    d: usize,
    budget: &mut Budget,
) -> Result<Vec<GitCone>, GitFanError> {
    let f = arr.fundamental_cone();
    if !f.contains_cone(face)? {
        return Err(GitFanError::ConeOutsideFundamental);
    }
    if !face.is_face_of(f)? {
        return Err(GitFanError::NotAFace);
    }
    let mut out = Vec::new();
    let mut seen_cells: BTreeSet<Vec<Sign>> = BTreeSet::new();
    let mut seen_slices: BTreeSet<Vec<usize>> = BTreeSet::new();
    collect_cells(
        arr,
        face,
        d,
        budget,
        &mut seen_slices,
        &mut seen_cells,
        &mut out,
    )?;
    Ok(out)
}

/// The chamber closures: top-dimensional cells of the whole fundamental
/// cone.
pub fn chambers(arr: &Arrangement, budget: &mut Budget) -> Result<Vec<GitCone>, GitFanError> {
    cells_in_face(arr, &arr.fundamental_cone().clone(), arr.dim(), budget)
}

/// Equal-dimensional cones meeting in a common facet.
pub fn adjacent(a: &Cone, b: &Cone) -> Result<bool, GitFanError> {
    let meet = a.intersection(b)?;
    Ok(a.dim() == b.dim() && a.dim() >= 1 && meet.dim() + 1 == a.dim())
}

fn collect_cells(
    arr: &Arrangement,
    g: &Cone,
    d: usize,
    budget: &mut Budget,
    seen_slices: &mut BTreeSet<Vec<usize>>,
    seen_cells: &mut BTreeSet<Vec<Sign>>,
    out: &mut Vec<GitCone>,
) -> Result<(), GitFanError> {
    if d > g.dim() {
        return Ok(());
    }
    if d == g.dim() {
        for cell in split_to_top_cells(arr, g, budget)? {
            let gc = GitCone::from_cone(arr, cell, ConeLabel::Cell)?;
            if seen_cells.insert(gc.signs().to_vec()) {
                out.push(gc);
            }
        }
        return Ok(());
    }
    // Lower-dimensional cells lie in a slice along some hyperplane not
    // already zero on g; slices are determined by their vanishing set, so
    // revisits are skipped.
    for h in arr.hyperplanes() {
        if vanishes_on(g, h) {
            continue;
        }
        let mut eqs = g.equalities().to_vec();
        eqs.push(h.clone());
        let slice = cone_from_h(&eqs, g.inequalities(), arr.dim())?;
        if slice.dim() < d {
            continue;
        }
        let key: Vec<usize> = arr
            .hyperplanes()
            .iter()
            .enumerate()
            .filter(|(_, hh)| vanishes_on(&slice, hh))
            .map(|(j, _)| j)
            .collect();
        if seen_slices.insert(key) {
            budget.charge(1)?;
            collect_cells(arr, &slice, d, budget, seen_slices, seen_cells, out)?;
        }
    }
    Ok(())
}

/// Halfspace splitting: refine the face by every hyperplane that cuts a
/// current region. The leaves are exactly the top-dimensional cells.
fn split_to_top_cells(
    arr: &Arrangement,
    g: &Cone,
    budget: &mut Budget,
) -> Result<Vec<Cone>, GitFanError> {
    budget.charge(1)?;
    let mut regions = vec![g.clone()];
    for h in arr.hyperplanes() {
        let mut next = Vec::with_capacity(regions.len());
        for reg in regions {
            if reg.is_cut_by(h) {
                budget.charge(1)?;
                for side in [h.clone(), h.negated()] {
                    let mut ineqs = reg.inequalities().to_vec();
                    ineqs.push(side);
                    let half = cone_from_h(reg.equalities(), &ineqs, arr.dim())?;
                    debug_assert_eq!(half.dim(), g.dim());
                    next.push(half);
                }
            } else {
                next.push(reg);
            }
        }
        regions = next;
    }
    Ok(regions)
}
