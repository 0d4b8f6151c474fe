//! The distinguished cones attached to a subset K of contracted nodes, and
//! the sign-vector view of cones against the arrangement.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polycone::{cone_from_h, Cone, ConeError, Functional, RationalVector};
use rootsys::RootSysError;

use crate::arrangement::Arrangement;
use crate::error::GitFanError;

/// Strict sign of a functional value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(x: &BigRational) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn of_int(x: &BigInt) -> Sign {
        if x.is_zero() {
            Sign::Zero
        } else if x.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// Provenance tag for a cone handed out by this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeLabel {
    Sigma(BTreeSet<usize>),
    SigmaPrime(BTreeSet<usize>),
    ChamberClosure(BTreeSet<usize>),
    Cell,
}

impl ConeLabel {
    pub fn name(&self) -> &'static str {
        match self {
            ConeLabel::Sigma(_) => "sigma",
            ConeLabel::SigmaPrime(_) => "sigma_prime",
            ConeLabel::ChamberClosure(_) => "chamber_closure",
            ConeLabel::Cell => "cell",
        }
    }

    pub fn nodes(&self) -> Option<&BTreeSet<usize>> {
        match self {
            ConeLabel::Sigma(k) | ConeLabel::SigmaPrime(k) | ConeLabel::ChamberClosure(k) => {
                Some(k)
            }
            ConeLabel::Cell => None,
        }
    }
}

/// A cone of the stability fan together with its sign vector against the
/// arrangement, one sign per hyperplane in arrangement order. The defining
/// property of a fan cone is that the sign vector determines it: imposing
/// equality on the zeros and the matching closed halfspace elsewhere
/// recovers the cone.
#[derive(Debug, Clone)]
pub struct GitCone {
    cone: Cone,
    signs: Vec<Sign>,
    label: ConeLabel,
}

impl GitCone {
    /// Tag a cone and record the signs at a relative interior point. The
    /// zero cone gets the all-zero sign vector.
    pub fn from_cone(
        arr: &Arrangement,
        cone: Cone,
        label: ConeLabel,
    ) -> Result<Self, GitFanError> {
        let signs = if cone.is_zero() {
            vec![Sign::Zero; arr.hyperplanes().len()]
        } else {
            signs_at(arr, &cone.relint_point()?)?
        };
        Ok(GitCone { cone, signs, label })
    }

    pub(crate) fn from_parts(cone: Cone, signs: Vec<Sign>, label: ConeLabel) -> Self {
        GitCone { cone, signs, label }
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn label(&self) -> &ConeLabel {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::Map::new();
        v.insert("label".into(), self.label.name().into());
        if let Some(k) = self.label.nodes() {
            v.insert(
                "K".into(),
                serde_json::Value::from(k.iter().map(|&x| x as u64).collect::<Vec<u64>>()),
            );
        }
        v.insert("signs".into(), self.sign_string().into());
        v.insert("cone".into(), self.cone.to_json());
        serde_json::Value::Object(v)
    }
}

/// Signs of every arrangement hyperplane at a rational point.
pub fn signs_at(arr: &Arrangement, theta: &RationalVector) -> Result<Vec<Sign>, GitFanError> {
    if theta.dim() != arr.dim() {
        return Err(ConeError::DimMismatch {
            expected: arr.dim(),
            got: theta.dim(),
        }
        .into());
    }
    Ok(arr
        .hyperplanes()
        .iter()
        .map(|h| Sign::of(&h.eval(theta)))
        .collect())
}

/// The cone a sign vector describes: equality at the zeros, the matching
/// closed halfspace elsewhere.
pub fn cone_from_sign_vector(arr: &Arrangement, signs: &[Sign]) -> Result<Cone, GitFanError> {
    assert_eq!(signs.len(), arr.hyperplanes().len());
    let mut eqs = Vec::new();
    let mut ineqs = Vec::new();
    for (h, s) in arr.hyperplanes().iter().zip(signs) {
        match s {
            Sign::Zero => eqs.push(h.clone()),
            Sign::Pos => ineqs.push(h.clone()),
            Sign::Neg => ineqs.push(h.negated()),
        }
    }
    Ok(cone_from_h(&eqs, &ineqs, arr.dim())?)
}

fn check_nodes(arr: &Arrangement, k: &BTreeSet<usize>) -> Result<(), GitFanError> {
    let rank = arr.rs().rank();
    for &node in k {
        if node < 1 || node > rank {
            return Err(RootSysError::NodeIndex { node, rank }.into());
        }
    }
    Ok(())
}

/// The cone of stability parameters whose quotients contract exactly the
/// curves indexed by K: coordinates in K vanish, the multiple-of-delta
/// bound holds at the remaining nodes.
pub fn sigma(arr: &Arrangement, k: &BTreeSet<usize>) -> Result<GitCone, GitFanError> {
    check_nodes(arr, k)?;
    let n = arr.n();
    let mut eqs = Vec::new();
    for &node in k {
        eqs.push(arr.node_functional(node)?);
    }
    let mut ineqs = vec![arr.delta_functional()];
    for i in 1..=arr.rs().rank() {
        if !k.contains(&i) {
            ineqs.push(node_minus_multiple_of_delta(arr, i, n - 1)?);
        }
    }
    let cone = cone_from_h(&eqs, &ineqs, arr.dim())?;
    GitCone::from_cone(arr, cone, ConeLabel::Sigma(k.clone()))
}

/// The face of sigma in the degenerate slice: delta vanishes too, the
/// remaining coordinates stay nonnegative.
pub fn sigma_prime(arr: &Arrangement, k: &BTreeSet<usize>) -> Result<GitCone, GitFanError> {
    check_nodes(arr, k)?;
    let mut eqs = vec![arr.delta_functional()];
    for &node in k {
        eqs.push(arr.node_functional(node)?);
    }
    let mut ineqs = Vec::new();
    for i in 1..=arr.rs().rank() {
        if !k.contains(&i) {
            ineqs.push(arr.node_functional(i)?);
        }
    }
    let cone = cone_from_h(&eqs, &ineqs, arr.dim())?;
    GitCone::from_cone(arr, cone, ConeLabel::SigmaPrime(k.clone()))
}

/// Closure of the top-dimensional region that has sigma among its faces:
/// the K-coordinates relax to nonnegative, and delta dominates every root
/// supported on K. Summing those roots coordinate-wise would tempt one to
/// collapse the last family into the single inequality
/// "delta minus the marked sum of the K-coordinates", but the sum of the
/// marked simple roots over K need not be a root (disconnected K, or a
/// node of mark above one), and in that case the single inequality carves
/// off a slice whose boundary lies on no wall of the arrangement. The
/// per-root family is what the wall structure actually bounds.
pub fn chamber_closure(arr: &Arrangement, k: &BTreeSet<usize>) -> Result<GitCone, GitFanError> {
    check_nodes(arr, k)?;
    let n = arr.n();
    let delta = arr.rs().delta();
    let mut ineqs = vec![arr.delta_functional()];
    for &node in k {
        ineqs.push(arr.node_functional(node)?);
    }
    for i in 1..=arr.rs().rank() {
        if !k.contains(&i) {
            ineqs.push(node_minus_multiple_of_delta(arr, i, n - 1)?);
        }
    }
    for alpha in arr.rs().roots_supported_on(k)? {
        let mut v: Vec<i64> = delta.to_vec();
        for (i, a) in alpha.coeffs().iter().enumerate() {
            v[i + 1] -= *a;
        }
        ineqs.push(Functional::from_i64(&v)?);
    }
    let cone = cone_from_h(&[], &ineqs, arr.dim())?;
    GitCone::from_cone(arr, cone, ConeLabel::ChamberClosure(k.clone()))
}

/// An explicit point strictly inside the chamber for K: value 1 on the
/// K-coordinates, the Coxeter number on delta, and (n-1)h+1 elsewhere.
pub fn chamber_witness(
    arr: &Arrangement,
    k: &BTreeSet<usize>,
) -> Result<RationalVector, GitFanError> {
    check_nodes(arr, k)?;
    let r = arr.rs().rank();
    let h = arr.rs().coxeter_number();
    let delta = arr.rs().delta();
    let outside: BigInt = BigInt::from(arr.n() - 1) * BigInt::from(h) + 1;
    let mut t = vec![BigInt::zero(); r + 1];
    for i in 1..=r {
        t[i] = if k.contains(&i) {
            BigInt::one()
        } else {
            outside.clone()
        };
    }
    let mut t0 = BigInt::from(h);
    for i in 1..=r {
        t0 -= BigInt::from(delta[i]) * &t[i];
    }
    t[0] = t0;
    Ok(RationalVector::from_int_vec(&t))
}

/// theta_i - m * theta(delta) as a functional.
fn node_minus_multiple_of_delta(
    arr: &Arrangement,
    node: usize,
    m: i64,
) -> Result<Functional, GitFanError> {
    let mut v: Vec<i64> = arr.rs().delta().iter().map(|&x| -m * x).collect();
    v[node] += 1;
    Ok(Functional::from_i64(&v)?)
}
