use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use polycone::{cone_from_h, Cone, ConeError, Functional, RationalVector};

fn f(v: &[i64]) -> Functional {
    Functional::from_i64(v).unwrap()
}

fn build(eqs: &[&[i64]], ineqs: &[&[i64]], d: usize) -> Cone {
    let e: Vec<Functional> = eqs.iter().map(|v| f(v)).collect();
    let g: Vec<Functional> = ineqs.iter().map(|v| f(v)).collect();
    cone_from_h(&e, &g, d).unwrap()
}

fn ray(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[test]
fn full_space_has_full_dim() {
    let c = build(&[], &[], 3);
    assert_eq!(c.dim(), 3);
    assert!(c.rays().is_empty());
    assert_eq!(c.lineality().len(), 3);
    let p = c.relint_point().unwrap();
    assert!(c.contains_point(&p).unwrap());
}

#[test]
fn simplicial_cone_rays() {
    // Three independent halfspaces in dimension three: simplicial, pointed.
    let c = build(&[], &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]], 3);
    assert_eq!(c.dim(), 3);
    assert!(c.lineality().is_empty());
    assert_eq!(
        c.rays(),
        &[ray(&[-1, 0, 1]), ray(&[-1, 1, 0]), ray(&[1, 0, 0])]
    );
}

#[test]
fn opposed_halfspaces_promote_to_equality() {
    let c = build(&[], &[&[1, 0], &[-1, 0], &[0, 1]], 2);
    assert_eq!(c.dim(), 1);
    assert_eq!(c.equalities().len(), 1);
    assert_eq!(c.inequalities().len(), 1);
    assert_eq!(c.rays(), &[ray(&[0, 1])]);
}

#[test]
fn intersection_pools_constraints() {
    let upper = build(&[], &[&[0, 1]], 2);
    let right = build(&[], &[&[1, 0]], 2);
    let quadrant = upper.intersection(&right).unwrap();
    assert_eq!(quadrant.dim(), 2);
    assert_eq!(quadrant.rays(), &[ray(&[0, 1]), ray(&[1, 0])]);
    assert!(upper.contains_cone(&quadrant).unwrap());
    assert!(right.contains_cone(&quadrant).unwrap());

    let line = build(&[&[1, 1]], &[], 2);
    let meet = quadrant.intersection(&line).unwrap();
    assert!(meet.is_zero());
}

#[test]
fn zero_cone_is_not_an_error() {
    let c = build(&[&[1, 0], &[0, 1]], &[], 2);
    assert!(c.is_zero());
    assert!(matches!(
        c.relint_point(),
        Err(ConeError::NoRelativeInterior)
    ));
    let full = build(&[], &[], 2);
    assert!(full.contains_cone(&c).unwrap());
    assert!(!c.contains_cone(&full).unwrap());
}

#[test]
fn subspace_cone_has_no_rays() {
    let c = build(&[&[0, 0, 1]], &[], 3);
    assert_eq!(c.dim(), 2);
    assert!(c.rays().is_empty());
    assert_eq!(c.lineality().len(), 2);
    let p = c.relint_point().unwrap();
    assert!(c.contains_point(&p).unwrap());
}

#[test]
fn round_trip_is_stable() {
    let cones = [
        build(&[], &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]], 3),
        build(&[], &[&[1, 0], &[-1, 0], &[0, 1]], 2),
        build(&[&[1, -1, 0]], &[&[0, 0, 1]], 3),
        build(&[], &[], 4),
    ];
    for c in &cones {
        let rebuilt = cone_from_h(c.equalities(), c.inequalities(), c.ambient_dim()).unwrap();
        assert!(rebuilt.cone_eq(c).unwrap());
        assert_eq!(rebuilt.dim(), c.dim());
    }
}

#[test]
fn face_of_simplicial_cone() {
    let c = build(&[], &[&[1, 1, 1], &[0, 1, 0], &[0, 0, 1]], 3);
    let face = c.face(&[f(&[1, 1, 1])]).unwrap();
    assert_eq!(face.dim(), 2);
    assert_eq!(face.rays(), &[ray(&[-1, 0, 1]), ray(&[-1, 1, 0])]);
    assert!(face.is_face_of(&c).unwrap());
    assert!(c.contains_cone(&face).unwrap());

    let edge = face.face(&[f(&[0, 1, 0])]).unwrap();
    assert_eq!(edge.dim(), 1);
    assert!(edge.is_face_of(&face).unwrap());
    assert!(edge.is_face_of(&c).unwrap());
}

#[test]
fn face_requires_supporting_functional() {
    let c = build(&[], &[&[1, 0], &[0, 1]], 2);
    assert!(matches!(
        c.face(&[f(&[-1, 1])]),
        Err(ConeError::NotSupporting)
    ));
}

#[test]
fn subcone_need_not_be_face() {
    // A ray through the interior is contained but is not a face.
    let c = build(&[], &[&[1, 0], &[0, 1]], 2);
    let diag = build(&[&[1, -1]], &[&[1, 0]], 2);
    assert_eq!(diag.dim(), 1);
    assert!(c.contains_cone(&diag).unwrap());
    assert!(!diag.is_face_of(&c).unwrap());
}

#[test]
fn origin_is_a_face_of_pointed_cones_only() {
    let pointed = build(&[], &[&[1, 0], &[0, 1]], 2);
    let origin = build(&[&[1, 0], &[0, 1]], &[], 2);
    assert!(origin.is_face_of(&pointed).unwrap());
    let halfplane = build(&[], &[&[1, 0]], 2);
    assert!(!origin.is_face_of(&halfplane).unwrap());
}

#[test]
fn relint_point_is_strict_on_inequalities() {
    let c = build(&[&[1, 1, 1, 1]], &[&[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]], 4);
    let p = c.relint_point().unwrap();
    assert!(c.contains_point(&p).unwrap());
    for e in c.equalities() {
        assert!(e.eval(&p).is_zero());
    }
    for g in c.inequalities() {
        assert!(g.eval(&p).is_positive());
    }
}

#[test]
fn cone_eq_ignores_presentation() {
    let a = build(&[], &[&[1, 0], &[0, 1], &[1, 1]], 2);
    let b = build(&[], &[&[0, 1], &[1, 0]], 2);
    assert!(a.cone_eq(&b).unwrap());
    let c = build(&[], &[&[1, 0], &[1, 1]], 2);
    assert!(!a.cone_eq(&c).unwrap());
}

#[test]
fn dimension_mismatch_is_an_error() {
    let c = build(&[], &[&[1, 0]], 2);
    assert!(matches!(
        c.contains_point(&RationalVector::from_i64(&[1, 2, 3])),
        Err(ConeError::DimMismatch { .. })
    ));
    assert!(cone_from_h(&[f(&[1, 0, 0])], &[], 2).is_err());
}

#[test]
fn json_shape_is_deterministic() {
    let c = build(&[], &[&[1, 1], &[0, 1]], 2);
    let j = c.to_json();
    assert_eq!(j["dim"], 2);
    assert_eq!(j["rays"].as_array().unwrap().len(), 2);
    let again = build(&[], &[&[1, 1], &[0, 1]], 2);
    assert_eq!(serde_json::to_string(&j).unwrap(), serde_json::to_string(&again.to_json()).unwrap());
}

#[test]
fn supports_and_cut_predicates() {
    let quadrant = build(&[], &[&[1, 0], &[0, 1]], 2);
    assert!(quadrant.supports(&f(&[1, 0])));
    assert!(quadrant.supports(&f(&[1, 1])));
    assert!(!quadrant.supports(&f(&[-1, 1])));
    assert!(quadrant.is_cut_by(&f(&[-1, 1])));
    assert!(!quadrant.is_cut_by(&f(&[1, 1])));
}
