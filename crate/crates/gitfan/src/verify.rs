//! The clause-by-clause check that sigma is what the fan says it is: a
//! face of its chamber closure of the right dimension, transverse to the
//! degenerate slice, Q-factorial, and unique with those properties.

use std::collections::BTreeSet;

use polycone::Functional;
use serde_json::Value;

use crate::arrangement::Arrangement;
use crate::cones::{chamber_closure, sigma, sigma_prime};
use crate::error::GitFanError;
use crate::fan::{
    cells_in_face, chambers_containing, is_q_factorial, minimal_face_containing, vanishes_on,
    Budget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone)]
pub struct Clause {
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: ClauseStatus,
}

impl Clause {
    fn checked(name: &'static str, expected: &str, computed: String, ok: bool) -> Self {
        Clause {
            name,
            expected: expected.to_string(),
            computed,
            status: if ok {
                ClauseStatus::Pass
            } else {
                ClauseStatus::Fail
            },
        }
    }

    fn skipped(name: &'static str, expected: &str, reason: String) -> Self {
        Clause {
            name,
            expected: expected.to_string(),
            computed: reason,
            status: ClauseStatus::Skipped,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    dynkin: String,
    n: i64,
    k: BTreeSet<usize>,
    pub clauses: Vec<Clause>,
    pub overall: Overall,
}

impl VerificationReport {
    pub fn dynkin(&self) -> &str {
        &self.dynkin
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn nodes(&self) -> &BTreeSet<usize> {
        &self.k
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }

    pub fn to_json(&self) -> Value {
        let clauses: Vec<Value> = self
            .clauses
            .iter()
            .map(|c| {
                let pass = match c.status {
                    ClauseStatus::Pass => Value::from(true),
                    ClauseStatus::Fail => Value::from(false),
                    ClauseStatus::Skipped => Value::from("skipped"),
                };
                serde_json::json!({
                    "name": c.name,
                    "expected": c.expected,
                    "computed": c.computed,
                    "pass": pass,
                })
            })
            .collect();
        let overall = match self.overall {
            Overall::Pass => Value::from(true),
            Overall::Fail => Value::from(false),
            Overall::Indeterminate => Value::from("indeterminate"),
        };
        serde_json::json!({
            "type": self.dynkin,
            "n": self.n,
            "K": self.k.iter().map(|&x| x as u64).collect::<Vec<u64>>(),
            "clauses": clauses,
            "overall": overall,
        })
    }
}

/// Run the whole characterization for one K. The two enumeration clauses
/// each get a fresh budget of `budget_limit` candidates and are marked
/// skipped when they exceed it; everything else is exact and always runs.
pub fn verify(
    arr: &Arrangement,
    k: &BTreeSet<usize>,
    budget_limit: u64,
) -> Result<VerificationReport, GitFanError> {
    if arr.n() < 2 {
        return Err(GitFanError::VerifyNeedsN2(arr.n()));
    }
    let r = arr.rs().rank();
    let s = sigma(arr, k)?;
    let sp = sigma_prime(arr, k)?;
    let cc = chamber_closure(arr, k)?;
    let delta = arr.delta_functional();
    let mut clauses = Vec::new();

    let rho: Vec<Functional> = k
        .iter()
        .map(|&i| arr.node_functional(i))
        .collect::<Result<_, _>>()?;
    let cut = cc.cone().face(&rho)?;
    let eq = cut.cone_eq(s.cone())?;
    clauses.push(Clause::checked(
        "equals_face_of_chamber_closure",
        "equal",
        if eq { "equal" } else { "not equal" }.to_string(),
        eq,
    ));

    let want_dim = r - k.len() + 1;
    clauses.push(Clause::checked(
        "has_expected_dimension",
        &want_dim.to_string(),
        s.dim().to_string(),
        s.dim() == want_dim,
    ));

    let contained = s.cone().contains_cone(sp.cone())?;
    let degenerate = vanishes_on(s.cone(), &delta);
    clauses.push(Clause::checked(
        "contains_delta_slice_strictly",
        "contained=true, inside_delta_perp=false",
        format!("contained={contained}, inside_delta_perp={degenerate}"),
        contained && !degenerate,
    ));

    let qf = is_q_factorial(arr, &s.cone().relint_point()?)?;
    clauses.push(Clause::checked(
        "q_factorial_on_relative_interior",
        "true",
        qf.to_string(),
        qf,
    ));

    let face = sp.cone().is_face_of(s.cone())?;
    let codim = s.dim() as i64 - sp.dim() as i64;
    clauses.push(Clause::checked(
        "delta_slice_is_codim_one_face",
        "face=true, codim=1",
        format!("face={face}, codim={codim}"),
        face && codim == 1,
    ));

    let fprime = minimal_face_containing(arr, s.cone())?;
    let expected_f = "one candidate, equal";
    match cells_in_face(arr, &fprime, want_dim, &mut Budget::new(budget_limit)) {
        Ok(cells) => {
            let mut survivors = Vec::new();
            for cell in &cells {
                if !cell.cone().contains_cone(sp.cone())? {
                    continue;
                }
                if vanishes_on(cell.cone(), &delta) {
                    continue;
                }
                if !is_q_factorial(arr, &cell.cone().relint_point()?)? {
                    continue;
                }
                survivors.push(cell);
            }
            let ok = survivors.len() == 1 && survivors[0].cone().cone_eq(s.cone())?;
            let computed = if survivors.len() == 1 {
                format!(
                    "one candidate, {}",
                    if ok { "equal" } else { "not equal" }
                )
            } else {
                format!("{} candidates", survivors.len())
            };
            clauses.push(Clause::checked(
                "unique_in_minimal_face",
                expected_f,
                computed,
                ok,
            ));
        }
        Err(GitFanError::BudgetExceeded { used, limit }) => {
            clauses.push(Clause::skipped(
                "unique_in_minimal_face",
                expected_f,
                format!("budget exceeded: {used} candidates over limit {limit}"),
            ));
        }
        Err(e) => return Err(e),
    }

    let expected_g = "one chamber, equal to the closure";
    match chambers_containing(arr, s.cone(), &mut Budget::new(budget_limit)) {
        Ok(chs) => {
            let ok = chs.len() == 1 && chs[0].cone().cone_eq(cc.cone())?;
            let computed = if chs.len() == 1 {
                format!("one chamber, {}", if ok { "equal" } else { "not equal" })
            } else {
                format!("{} chambers", chs.len())
            };
            clauses.push(Clause::checked(
                "unique_chamber_above",
                expected_g,
                computed,
                ok,
            ));
        }
        Err(GitFanError::BudgetExceeded { used, limit }) => {
            clauses.push(Clause::skipped(
                "unique_chamber_above",
                expected_g,
                format!("budget exceeded: {used} candidates over limit {limit}"),
            ));
        }
        Err(e) => return Err(e),
    }

    let overall = if clauses.iter().any(|c| c.status == ClauseStatus::Fail) {
        Overall::Fail
    } else if clauses.iter().any(|c| c.status == ClauseStatus::Skipped) {
        Overall::Indeterminate
    } else {
        Overall::Pass
    };

    Ok(VerificationReport {
        dynkin: arr.rs().dynkin().to_string(),
        n: arr.n(),
        k: k.clone(),
        clauses,
        overall,
    })
}
