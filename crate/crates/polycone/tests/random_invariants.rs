//! Randomized exercise of the cone kernel: small ambient dimensions, short
//! constraint lists, coefficients in a narrow band. Every check is exact.

use polycone::{cone_from_h, Cone, Functional};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_functional(rng: &mut ChaCha8Rng, d: usize) -> Option<Functional> {
    let v: Vec<i64> = (0..d).map(|_| rng.random_range(-10..=10)).collect();
    Functional::from_i64(&v).ok()
}

fn random_cone(rng: &mut ChaCha8Rng) -> Cone {
    let d = rng.random_range(1..=5);
    let n_eq = rng.random_range(0..=2);
    let n_in = rng.random_range(0..=12usize.saturating_sub(n_eq));
    let eqs: Vec<Functional> = (0..n_eq)
        .filter_map(|_| random_functional(rng, d))
        .collect();
    let ineqs: Vec<Functional> = (0..n_in)
        .filter_map(|_| random_functional(rng, d))
        .collect();
    cone_from_h(&eqs, &ineqs, d).unwrap()
}

fn check_invariants(c: &Cone) {
    use num_traits::{Signed, Zero};

    // Rebuilding from the stored constraint system is stable.
    let rebuilt = cone_from_h(c.equalities(), c.inequalities(), c.ambient_dim()).unwrap();
    assert!(rebuilt.cone_eq(c).unwrap());
    assert_eq!(rebuilt.dim(), c.dim());

    // Generators satisfy the constraints; stored inequalities are exact
    // (none vanishes on the whole cone).
    for r in c.rays() {
        for e in c.equalities() {
            assert!(e.eval_int(r).is_zero());
        }
        for g in c.inequalities() {
            assert!(!g.eval_int(r).is_negative());
        }
    }
    for g in c.inequalities() {
        let somewhere_positive = c.rays().iter().any(|r| g.eval_int(r).is_positive())
            || c.lineality().iter().any(|l| !g.eval_int(l).is_zero());
        assert!(somewhere_positive, "stored inequality vanishes on the cone");
    }

    if c.dim() > 0 {
        let p = c.relint_point().unwrap();
        assert!(c.contains_point(&p).unwrap());
        for e in c.equalities() {
            assert!(e.eval(&p).is_zero());
        }
        for g in c.inequalities() {
            assert!(g.eval(&p).is_positive());
        }
    } else {
        assert!(c.relint_point().is_err());
    }

    // Faces cut by tight subsets of the stored inequalities.
    let take = c.inequalities().len().min(2);
    let tight: Vec<Functional> = c.inequalities()[..take].to_vec();
    let face = c.face(&tight).unwrap();
    assert!(c.contains_cone(&face).unwrap());
    assert!(face.dim() <= c.dim());
    assert!(face.is_face_of(c).unwrap());
    if !tight.is_empty() {
        let sub = face.face(&tight[..1]).unwrap();
        assert!(sub.cone_eq(&face).unwrap(), "re-tightening is idempotent");
    }
}

#[test]
fn three_hundred_random_cones() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for _ in 0..300 {
        let c = random_cone(&mut rng);
        check_invariants(&c);
    }
}

#[test]
fn face_transitivity_on_random_simplicial_cones() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut tested = 0;
    while tested < 40 {
        let c = random_cone(&mut rng);
        if c.dim() < 2 || c.inequalities().len() < 2 {
            continue;
        }
        let g = c.face(&c.inequalities()[..1].to_vec()).unwrap();
        let h = g.face(&[c.inequalities()[1].clone()]).unwrap();
        assert!(h.is_face_of(&g).unwrap());
        assert!(g.is_face_of(&c).unwrap());
        assert!(h.is_face_of(&c).unwrap(), "face relation is transitive");
        tested += 1;
    }
}
