use std::collections::{BTreeSet, VecDeque};

use polycone::{cone_from_h, Cone, Functional, RationalVector};

use gitfan::{
    adjacent, cell_at, chamber_closure, chamber_witness, chambers, chambers_containing,
    cells_in_face, is_q_factorial, picard_rank, sigma, sigma_prime, signs_at, verify, Arrangement,
    Budget, ClauseStatus, GitFanError, Overall, Sign,
};

fn arr(ty: &str, n: i64) -> Arrangement {
    let rs = rootsys::build_root_system(ty.parse().unwrap());
    Arrangement::build(rs, n).unwrap()
}

fn subsets(r: usize) -> Vec<BTreeSet<usize>> {
    (0..1u32 << r)
        .map(|mask| (1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn every_sigma_sits_under_exactly_one_chamber() {
    for (ty, n) in [("A2", 3), ("A3", 2)] {
        let a = arr(ty, n);
        for k in subsets(a.rs().rank()) {
            let s = sigma(&a, &k).unwrap();
            let cc = chamber_closure(&a, &k).unwrap();
            let mut budget = Budget::standard();
            let above = chambers_containing(&a, s.cone(), &mut budget).unwrap();
            assert_eq!(above.len(), 1, "{ty} n={n} K={k:?}");
            assert!(
                above[0].cone().cone_eq(cc.cone()).unwrap(),
                "{ty} n={n} K={k:?}: enumerated chamber disagrees with the closure"
            );
        }
    }
}

#[test]
fn degenerate_slice_of_f_lifts_to_a_unique_chamber() {
    let a = arr("A2", 3);
    let empty = BTreeSet::new();
    let sp = sigma_prime(&a, &empty).unwrap();
    let s = sigma(&a, &empty).unwrap();
    let mut budget = Budget::standard();
    let above = chambers_containing(&a, sp.cone(), &mut budget).unwrap();
    assert_eq!(above.len(), 1);
    assert!(above[0].cone().cone_eq(s.cone()).unwrap());
}

/// Region of the fundamental cone picked out by one strict sign per
/// cutting hyperplane; the non-cutting ones need no constraint.
fn signed_region(a: &Arrangement, cutting: &[usize], sv: &[Sign]) -> Cone {
    let mut ineqs = vec![a.delta_functional()];
    for i in 1..=a.rs().rank() {
        ineqs.push(a.node_functional(i).unwrap());
    }
    for (&j, s) in cutting.iter().zip(sv) {
        let h = &a.hyperplanes()[j];
        ineqs.push(match s {
            Sign::Pos => h.clone(),
            Sign::Neg => h.negated(),
            Sign::Zero => unreachable!("chamber signs are strict"),
        });
    }
    cone_from_h(&[], &ineqs, a.dim()).unwrap()
}

/// Flood fill over the chamber graph: flip one cutting sign at a time and
/// keep the full-dimensional regions. Crossing a wall in general position
/// changes exactly that wall's sign, so the walk visits every chamber.
fn chambers_by_wall_walk(a: &Arrangement, cutting: &[usize]) -> BTreeSet<Vec<Sign>> {
    let start_point = chamber_witness(a, &BTreeSet::new()).unwrap();
    let full = signs_at(a, &start_point).unwrap();
    let start: Vec<Sign> = cutting.iter().map(|&j| full[j]).collect();
    assert!(start.iter().all(|s| *s != Sign::Zero));

    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(sv) = queue.pop_front() {
        for j in 0..sv.len() {
            let mut flipped = sv.clone();
            flipped[j] = match flipped[j] {
                Sign::Pos => Sign::Neg,
                Sign::Neg => Sign::Pos,
                Sign::Zero => unreachable!(),
            };
            if seen.contains(&flipped) {
                continue;
            }
            if signed_region(a, cutting, &flipped).dim() == a.dim() {
                seen.insert(flipped.clone());
                queue.push_back(flipped);
            }
        }
    }
    seen
}

#[test]
fn chamber_census_agrees_across_three_methods() {
    for (ty, n, expected) in [("A1", 3, 3), ("A2", 2, 5), ("A2", 3, 12)] {
        let a = arr(ty, n);
        let cutting: Vec<usize> = (0..a.hyperplanes().len())
            .filter(|&j| a.is_interior_cutting(j))
            .collect();
        let restrict = |g: &gitfan::GitCone| -> Vec<Sign> {
            cutting.iter().map(|&j| g.signs()[j]).collect()
        };

        let mut budget = Budget::standard();
        let by_split: Vec<_> = chambers(&a, &mut budget).unwrap();
        let split_set: BTreeSet<Vec<Sign>> = by_split.iter().map(&restrict).collect();

        let origin_eqs: Vec<Functional> = (0..a.dim())
            .map(|i| a.node_functional(i).unwrap())
            .collect();
        let origin = cone_from_h(&origin_eqs, &[], a.dim()).unwrap();
        let mut budget2 = Budget::standard();
        let by_resolution = chambers_containing(&a, &origin, &mut budget2).unwrap();
        let resolution_set: BTreeSet<Vec<Sign>> = by_resolution.iter().map(&restrict).collect();

        let by_walk = chambers_by_wall_walk(&a, &cutting);

        assert_eq!(split_set.len(), by_split.len(), "{ty} n={n}: duplicate cells");
        assert_eq!(split_set, resolution_set, "{ty} n={n}");
        assert_eq!(split_set, by_walk, "{ty} n={n}");
        assert_eq!(split_set.len(), expected, "{ty} n={n}");

        let mut budget3 = Budget::standard();
        let again: Vec<_> = chambers(&a, &mut budget3).unwrap();
        let order: Vec<String> = by_split.iter().map(|g| g.sign_string()).collect();
        let order_again: Vec<String> = again.iter().map(|g| g.sign_string()).collect();
        assert_eq!(order, order_again, "{ty} n={n}: enumeration order is unstable");
    }
}

#[test]
fn hexagon_slice_has_fifteen_interior_walls() {
    let a = arr("A2", 3);
    let mut budget = Budget::standard();
    let cs = chambers(&a, &mut budget).unwrap();
    assert_eq!(cs.len(), 12);
    let mut pairs = 0;
    for i in 0..cs.len() {
        assert!(!adjacent(cs[i].cone(), cs[i].cone()).unwrap());
        for j in i + 1..cs.len() {
            let ij = adjacent(cs[i].cone(), cs[j].cone()).unwrap();
            let ji = adjacent(cs[j].cone(), cs[i].cone()).unwrap();
            assert_eq!(ij, ji);
            if ij {
                pairs += 1;
            }
        }
    }
    assert_eq!(pairs, 15);
}

#[test]
fn degenerate_facet_cells_are_exactly_the_sigma_primes() {
    let a = arr("A2", 3);
    let empty = BTreeSet::new();
    let facet = sigma_prime(&a, &empty).unwrap();
    for d in 0..=2usize {
        let mut budget = Budget::standard();
        let cells = cells_in_face(&a, facet.cone(), d, &mut budget).unwrap();
        let want: Vec<BTreeSet<usize>> = subsets(2)
            .into_iter()
            .filter(|k| k.len() == 2 - d)
            .collect();
        assert_eq!(cells.len(), want.len(), "d={d}");
        for k in want {
            let sp = sigma_prime(&a, &k).unwrap();
            let hits = cells
                .iter()
                .filter(|c| c.cone().cone_eq(sp.cone()).unwrap())
                .count();
            assert_eq!(hits, 1, "d={d} K={k:?}");
        }
    }
}

fn clause_status(report: &gitfan::VerificationReport, name: &str) -> ClauseStatus {
    report
        .clauses
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("missing clause {name}"))
        .status
}

#[test]
fn verification_passes_for_the_reference_cases() {
    let a2 = arr("A2", 3);
    let empty_report = verify(&a2, &BTreeSet::new(), 1 << 20).unwrap();
    assert_eq!(empty_report.overall, Overall::Pass);
    assert!(empty_report.passed());
    assert!(empty_report.clauses.iter().all(|c| c.status == ClauseStatus::Pass));
    let s = sigma(&a2, &BTreeSet::new()).unwrap();
    let cc = chamber_closure(&a2, &BTreeSet::new()).unwrap();
    assert!(s.cone().cone_eq(cc.cone()).unwrap());

    let full: BTreeSet<usize> = [1, 2].into();
    let full_report = verify(&a2, &full, 1 << 20).unwrap();
    assert_eq!(full_report.overall, Overall::Pass);
    let dim_clause = full_report
        .clauses
        .iter()
        .find(|c| c.name == "has_expected_dimension")
        .unwrap();
    assert_eq!(dim_clause.computed, "1");

    let a3 = arr("A3", 2);
    let split: BTreeSet<usize> = [1, 3].into();
    let split_report = verify(&a3, &split, 1 << 20).unwrap();
    assert_eq!(split_report.overall, Overall::Pass, "{:?}", split_report.clauses);
}

#[test]
fn verification_requires_multiplicity_at_least_two() {
    let a = arr("A2", 1);
    match verify(&a, &BTreeSet::new(), 1 << 20) {
        Err(GitFanError::VerifyNeedsN2(1)) => {}
        other => panic!("expected the multiplicity guard, got {other:?}"),
    }
}

#[test]
fn exhausted_budget_marks_enumeration_clauses_skipped() {
    let a = arr("A2", 3);
    let k: BTreeSet<usize> = [1].into();
    let report = verify(&a, &k, 0).unwrap();
    for name in [
        "equals_face_of_chamber_closure",
        "has_expected_dimension",
        "contains_delta_slice_strictly",
        "q_factorial_on_relative_interior",
        "delta_slice_is_codim_one_face",
    ] {
        assert_eq!(clause_status(&report, name), ClauseStatus::Pass, "{name}");
    }
    assert_eq!(
        clause_status(&report, "unique_in_minimal_face"),
        ClauseStatus::Skipped
    );
    assert_eq!(
        clause_status(&report, "unique_chamber_above"),
        ClauseStatus::Skipped
    );
    assert_eq!(report.overall, Overall::Indeterminate);
    assert!(!report.passed());
}

#[test]
fn picard_rank_ladder_and_q_factoriality() {
    let a = arr("A3", 2);
    let r = a.rs().rank();
    for k in subsets(r) {
        let s = sigma(&a, &k).unwrap();
        let p = s.cone().relint_point().unwrap();
        assert_eq!(picard_rank(&a, &p).unwrap(), r - k.len() + 1, "K={k:?}");
        assert!(is_q_factorial(&a, &p).unwrap(), "K={k:?}");

        let sp = sigma_prime(&a, &k).unwrap();
        let q = if sp.cone().dim() == 0 {
            RationalVector::from_i64(&[0, 0, 0, 0])
        } else {
            sp.cone().relint_point().unwrap()
        };
        assert_eq!(picard_rank(&a, &q).unwrap(), r - k.len(), "K={k:?}");
        assert!(is_q_factorial(&a, &q).unwrap(), "K={k:?}");
        assert!(picard_rank(&a, &q).unwrap() <= picard_rank(&a, &p).unwrap());
    }
}

#[test]
fn witness_cell_is_the_chamber_closure() {
    for (ty, n) in [("A2", 3), ("A3", 2), ("D4", 2)] {
        let a = arr(ty, n);
        for k in subsets(a.rs().rank()) {
            let w = chamber_witness(&a, &k).unwrap();
            let cell = cell_at(&a, &w).unwrap();
            let cc = chamber_closure(&a, &k).unwrap();
            assert!(
                cell.cone().cone_eq(cc.cone()).unwrap(),
                "{ty} n={n} K={k:?}"
            );
            assert_eq!(cell.signs(), cc.signs(), "{ty} n={n} K={k:?}");
        }
    }
}

#[test]
fn zero_point_localizes_to_the_zero_cone() {
    let a = arr("A2", 3);
    let cell = cell_at(&a, &RationalVector::from_i64(&[0, 0, 0])).unwrap();
    assert_eq!(cell.cone().dim(), 0);
    assert!(cell.signs().iter().all(|s| *s == Sign::Zero));
}
