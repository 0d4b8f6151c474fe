//! Simply-laced root systems with Bourbaki node labels.
//!
//! Supports the finite types `A_r` (r >= 1), `D_r` (r >= 4) and `E_6`, `E_7`,
//! `E_8`. Simple roots are labelled 1..=r following Bourbaki: `A_r` is the
//! path 1-2-...-r, `D_r` forks at node r-2, and in `E_r` node 2 hangs off
//! node 4 of the path 1-3-4-5-...-r. Node 0 is the affine vertex of the
//! extended diagram.
//!
//! The minimal imaginary root `delta` of the affine diagram is computed as
//! the primitive integer kernel generator of the affine Cartan matrix, never
//! read from a table; closed-form tables exist only in the test suite.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RootSysError {
    #[error("rank {rank} is not valid for family {family}: requires {constraint}")]
    InvalidRank {
        family: Family,
        rank: usize,
        constraint: &'static str,
    },
    #[error("cannot parse `{0}` as a Dynkin type (expected e.g. A2, D4, E8)")]
    ParseType(String),
    #[error("node index {node} is outside 1..={rank}")]
    NodeIndex { node: usize, rank: usize },
}

/// Simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// A validated Dynkin type, e.g. `A2` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    /// Rank bounds: `A_r` needs r >= 1, `D_r` needs r >= 4, `E_r` needs 6 <= r <= 8.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            let constraint = match family {
                Family::A => "r >= 1",
                Family::D => "r >= 4",
                Family::E => "6 <= r <= 8",
            };
            return Err(RootSysError::InvalidRank {
                family,
                rank,
                constraint,
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Edges of the finite diagram on nodes 1..=r, each pair listed once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank;
        match self.family {
            Family::A => (1..r).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<(usize, usize)> = (1..r - 2).map(|i| (i, i + 1)).collect();
                e.push((r - 2, r - 1));
                e.push((r - 2, r));
                e
            }
            Family::E => {
                let mut e = vec![(1, 3), (3, 4), (2, 4)];
                for i in 4..r {
                    e.push((i, i + 1));
                }
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = RootSysError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let err = || RootSysError::ParseType(s.to_string());
        let mut chars = t.chars();
        let fam = match chars.next() {
            Some('A') | Some('a') => Family::A,
            Some('D') | Some('d') => Family::D,
            Some('E') | Some('e') => Family::E,
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        DynkinType::new(fam, rank).map_err(|_| err())
    }
}

/// A positive root, stored by its coefficients on the simple roots.
/// `coeffs[i]` is the coefficient of the simple root at node i+1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient at a 1-based node label.
    pub fn coeff(&self, node: usize) -> i64 {
        self.coeffs[node - 1]
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// 1-based node labels with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// A root system together with its affine data.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin: DynkinType,
    cartan: Vec<Vec<i64>>,
    affine_cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    delta: Vec<i64>,
    coxeter_number: i64,
}

impl RootSystem {
    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank()
    }

    /// The r x r Cartan matrix, rows/columns ordered by node label 1..=r.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The (r+1) x (r+1) affine Cartan matrix; row/column 0 is the affine node.
    pub fn affine_cartan(&self) -> &[Vec<i64>] {
        &self.affine_cartan
    }

    /// Positive roots sorted by (height, lexicographic coefficients).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    /// Coefficients of the minimal imaginary root on nodes 0..=r; `delta[0] == 1`.
    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    /// Sum of the delta coefficients over all r+1 nodes.
    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// Edges of the affine diagram on nodes 0..=r, with multiplicity.
    /// The only repeated edge in the simply-laced affine family is the
    /// double bond of extended `A_1`.
    pub fn affine_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.rank() {
            for j in (i + 1)..=self.rank() {
                for _ in 0..(-self.affine_cartan[i][j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Positive roots supported on `nodes`: every coefficient outside the set
    /// vanishes. Node labels are 1-based.
    pub fn roots_supported_on(&self, nodes: &BTreeSet<usize>) -> Result<Vec<Root>, RootSysError> {
        let r = self.rank();
        for &k in nodes {
            if k == 0 || k > r {
                return Err(RootSysError::NodeIndex { node: k, rank: r });
            }
        }
        let out: Vec<Root> = self
            .positive_roots
            .iter()
            .filter(|a| a.support().is_subset(nodes))
            .cloned()
            .collect();
        for a in &out {
            for k in a.support() {
                debug_assert!(a.coeff(k) <= self.delta[k]);
            }
        }
        Ok(out)
    }
}

fn cartan_from_edges(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        c[i][i] = 2;
    }
    for &(a, b) in edges {
        c[a - 1][b - 1] = -1;
        c[b - 1][a - 1] = -1;
    }
    c
}

/// Level-by-level closure: roots of height h+1 arise as alpha + simple root,
/// admitted exactly when the alpha-string through the simple root ascends.
fn positive_roots_closure(cartan: &[Vec<i64>]) -> Vec<Root> {
    let r = cartan.len();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut v = vec![0i64; r];
        v[i] = 1;
        known.insert(v.clone());
        level.push(v);
    }
    let mut all: Vec<Vec<i64>> = level.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for a in &level {
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * a[j]).sum();
                let mut p = 0i64;
                let mut down = a.clone();
                loop {
                    down[i] -= 1;
                    if down[i] < 0 || !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing >= 1 {
                    let mut up = a.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    let mut roots: Vec<Root> = all.into_iter().map(|coeffs| Root { coeffs }).collect();
    roots.sort_by(|a, b| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
    roots
}

/// One-dimensional kernel of a square integer matrix, as exact rationals.
fn kernel_vector(m: &[Vec<i64>]) -> Option<Vec<Rational64>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let mut pivot_col: Vec<Option<usize>> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !a[i][col].is_zero()) else {
            pivot_col.push(None);
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col];
        for x in a[row].iter_mut() {
            *x /= inv;
        }
        for i in 0..n {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col];
                for j in 0..n {
                    let s = a[row][j];
                    a[i][j] -= f * s;
                }
            }
        }
        pivot_col.push(Some(row));
        row += 1;
    }
    if row != n - 1 {
        return None;
    }
    let free = pivot_col.iter().position(|p| p.is_none())?;
    let mut v = vec![Rational64::zero(); n];
    v[free] = Rational64::from_integer(1);
    for (col, p) in pivot_col.iter().enumerate() {
        if let Some(r) = p {
            v[col] = -a[*r][free];
        }
    }
    Some(v)
}

fn primitive_integers(v: &[Rational64]) -> Vec<i64> {
    let lcm = v.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<i64> = v.iter().map(|x| x.numer() * (lcm / x.denom())).collect();
    let g = ints.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g > 1 {
        for x in ints.iter_mut() {
            *x /= g;
        }
    }
    ints
}

/// Build the full root-system package for a validated type.
///
/// The affine row of the Cartan matrix is derived from the highest root:
/// the pairing of the affine simple root with node i is minus the pairing of
/// the highest root, which reproduces the extended diagram (including the
/// double bond of extended `A_1`) without a table of attachment rules.
pub fn build_root_system(dynkin: DynkinType) -> RootSystem {
    let r = dynkin.rank();
    let cartan = cartan_from_edges(r, &dynkin.edges());
    let positive_roots = positive_roots_closure(&cartan);

    let highest_root = positive_roots
        .last()
        .expect("nonempty root system")
        .clone();
    for a in &positive_roots {
        for i in 0..r {
            debug_assert!(a.coeffs[i] <= highest_root.coeffs[i]);
        }
    }

    let mut affine = vec![vec![0i64; r + 1]; r + 1];
    affine[0][0] = 2;
    for i in 0..r {
        let pairing: i64 = (0..r).map(|j| cartan[i][j] * highest_root.coeffs[j]).sum();
        affine[0][i + 1] = -pairing;
        affine[i + 1][0] = -pairing;
        for j in 0..r {
            affine[i + 1][j + 1] = cartan[i][j];
        }
    }

    let kernel = kernel_vector(&affine).expect("affine Cartan matrix has corank 1");
    let mut delta = primitive_integers(&kernel);
    if delta[0] < 0 {
        for x in delta.iter_mut() {
            *x = -*x;
        }
    }
    assert_eq!(delta[0], 1, "primitive kernel generator is normalized at node 0");
    assert!(delta.iter().all(|&x| x > 0));
    for row in &affine {
        let dot: i64 = row.iter().zip(&delta).map(|(a, d)| a * d).sum();
        assert_eq!(dot, 0);
    }

    let coxeter_number = delta.iter().sum();

    RootSystem {
        dynkin,
        cartan,
        affine_cartan: affine,
        positive_roots,
        highest_root,
        delta,
        coxeter_number,
    }
}
