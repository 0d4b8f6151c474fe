use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ConeError;

pub(crate) fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divide by the gcd of the entries, preserving orientation.
pub(crate) fn normalize_primitive(v: &mut [BigInt]) {
    let g = gcd_of(v);
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Primitive integer vector pointing the same way as a rational vector.
pub(crate) fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    normalize_primitive(&mut out);
    out
}

/// An integer linear functional, kept primitive. The orientation is part of
/// the data: as a halfspace it means `f >= 0`. For use as an unoriented
/// hyperplane, compare through [`Functional::hyperplane_canonical`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Functional {
    coeffs: Vec<BigInt>,
}

impl Functional {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self, ConeError> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(ConeError::ZeroFunctional);
        }
        normalize_primitive(&mut coeffs);
        Ok(Functional { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self, ConeError> {
        Functional::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn negated(&self) -> Functional {
        Functional {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Representative with the first nonzero coefficient positive; two
    /// functionals cut the same hyperplane iff their canonical forms agree.
    pub fn hyperplane_canonical(&self) -> Functional {
        let first = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .expect("functional is nonzero");
        if first.is_negative() {
            self.negated()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, p: &RationalVector) -> BigRational {
        debug_assert_eq!(self.dim(), p.dim());
        self.coeffs
            .iter()
            .zip(p.entries())
            .map(|(c, x)| BigRational::from_integer(c.clone()) * x)
            .sum()
    }

    /// Evaluation on an integer vector (a ray or lineality generator).
    pub fn eval_int(&self, v: &[BigInt]) -> BigInt {
        int_dot(&self.coeffs, v)
    }
}

/// A point of the ambient rational vector space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalVector {
    entries: Vec<BigRational>,
}

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        RationalVector { entries }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RationalVector {
            entries: v
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    pub fn from_int_vec(v: &[BigInt]) -> Self {
        RationalVector {
            entries: v
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }
}
