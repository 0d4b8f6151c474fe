//! Rank-2 slice rendering. Every cone is intersected with the affine
//! slice {l = 1} in exact arithmetic; rounding happens only when the
//! final coordinates are printed, so the picture is byte-deterministic.
//!
//! The slice functional is l = theta(delta) + sum of the node
//! coordinates. It is a sum of F's defining functionals and vanishes
//! nowhere on F but the origin, so every ray of F meets the slice; the
//! all-ones covector would miss the two delta=0 rays entirely.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polycone::{cone_from_h, Functional};

use gitfan::{chambers, sigma, Arrangement, Budget, GitFanError};

type Pt = (BigRational, BigRational);

fn slice_functional(arr: &Arrangement) -> Functional {
    let delta = arr.rs().delta();
    let mut v = vec![1i64; arr.dim()];
    for i in 1..arr.dim() {
        v[i] += delta[i];
    }
    Functional::from_i64(&v).expect("nonzero")
}

/// Barycentric reading of a ray against the slice triangle, then the
/// fixed affine chart (a,b,c) -> (2a+4b, 4b+4c) that puts the pure-delta
/// ray at the bottom apex and the delta=0 edge along the top.
fn slice_point(arr: &Arrangement, l: &Functional, ray: &[BigInt]) -> Pt {
    let denom = l.eval_int(ray);
    debug_assert!(denom.is_positive(), "slice functional must be positive on F");
    let a = arr.delta_functional().eval_int(ray);
    let b = &ray[1];
    let c = &ray[2];
    let x = BigRational::new(&a * 2 + b * 4, denom.clone());
    let y = BigRational::new(b * 4 + c * 4, denom);
    (x, y)
}

fn svg_xy(p: &Pt) -> (BigRational, BigRational) {
    let scale = BigRational::from_integer(BigInt::from(100));
    let margin = BigRational::from_integer(BigInt::from(20));
    let top = BigRational::from_integer(BigInt::from(420));
    (&margin + &scale * &p.0, top - scale * &p.1)
}

/// Fixed three-decimal formatting, rounding half away from zero.
fn fmt3(q: &BigRational) -> String {
    let scaled: BigInt = q.numer() * 1000;
    let neg = scaled.is_negative();
    let abs = scaled.magnitude().clone();
    let denom = q.denom().magnitude();
    let r = (&abs * 2u32 + denom) / (denom * 2u32);
    let whole = &r / 1000u32;
    let frac = u32::try_from(&r % 1000u32).expect("below 1000");
    let sign = if neg && !r.is_zero() { "-" } else { "" };
    format!("{sign}{whole}.{frac:03}")
}

fn coords(p: &Pt) -> (String, String) {
    let (x, y) = svg_xy(p);
    (fmt3(&x), fmt3(&y))
}

fn points_attr(pts: &[Pt]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = coords(p);
            format!("{x},{y}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Counterclockwise order around the exact centroid. Extremal slice
/// points of a convex region never share a direction from the centroid,
/// so the comparison is total on the inputs we feed it.
fn cyclic_sort(pts: &mut [Pt]) {
    let n = BigRational::from_integer(BigInt::from(pts.len() as u64));
    let mut ox = BigRational::zero();
    let mut oy = BigRational::zero();
    for (x, y) in pts.iter() {
        ox += x;
        oy += y;
    }
    ox /= &n;
    oy /= &n;
    let half = |dx: &BigRational, dy: &BigRational| -> u8 {
        if dy.is_positive() || (dy.is_zero() && dx.is_positive()) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|p, q| {
        let (pdx, pdy) = (&p.0 - &ox, &p.1 - &oy);
        let (qdx, qdy) = (&q.0 - &ox, &q.1 - &oy);
        match half(&pdx, &pdy).cmp(&half(&qdx, &qdy)) {
            Ordering::Equal => {
                let cross = &pdx * &qdy - &pdy * &qdx;
                if cross.is_positive() {
                    Ordering::Less
                } else if cross.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                }
            }
            other => other,
        }
    });
}

fn region_points(arr: &Arrangement, l: &Functional, rays: &[Vec<BigInt>]) -> Vec<Pt> {
    let mut pts: Vec<Pt> = rays.iter().map(|r| slice_point(arr, l, r)).collect();
    cyclic_sort(&mut pts);
    pts
}

fn subset_id(k: &BTreeSet<usize>) -> String {
    if k.is_empty() {
        "sigma-empty".to_string()
    } else {
        let parts: Vec<String> = k.iter().map(usize::to_string).collect();
        format!("sigma-{}", parts.join("-"))
    }
}

pub fn render(arr: &Arrangement, budget_limit: u64) -> Result<String, GitFanError> {
    assert_eq!(arr.rs().rank(), 2, "slice rendering is two-dimensional");
    let l = slice_functional(arr);
    let f = arr.fundamental_cone();
    let mut svg = String::new();
    svg.push_str(concat!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ",
        "viewBox=\"0 0 440 440\" width=\"440\" height=\"440\">\n"
    ));
    svg.push_str(&format!(
        "<desc>Affine slice of the fundamental cone, type {} with n = {}</desc>\n",
        arr.rs().dynkin(),
        arr.n()
    ));

    let mut budget = Budget::new(budget_limit);
    let regions = chambers(arr, &mut budget)?;
    svg.push_str("<g class=\"regions\">\n");
    for (i, g) in regions.iter().enumerate() {
        let pts = region_points(arr, &l, g.cone().rays());
        svg.push_str(&format!(
            "<polygon class=\"region\" id=\"region-{i}\" data-signs=\"{}\" points=\"{}\" fill=\"#f5f1e8\" stroke=\"none\"/>\n",
            g.sign_string(),
            points_attr(&pts)
        ));
    }
    svg.push_str("</g>\n");

    svg.push_str("<g class=\"walls\">\n");
    let f_ineqs: Vec<Functional> = {
        let mut v = vec![arr.delta_functional()];
        for i in 1..=arr.rs().rank() {
            v.push(arr.node_functional(i)?);
        }
        v
    };
    for (j, h) in arr.hyperplanes().iter().enumerate() {
        if !arr.is_interior_cutting(j) {
            continue;
        }
        let wall = cone_from_h(std::slice::from_ref(h), &f_ineqs, arr.dim())?;
        debug_assert_eq!(wall.dim(), 2);
        let ends: Vec<Pt> = wall
            .rays()
            .iter()
            .map(|r| slice_point(arr, &l, r))
            .collect();
        let (x1, y1) = coords(&ends[0]);
        let (x2, y2) = coords(&ends[1]);
        svg.push_str(&format!(
            "<line class=\"wall\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#3a3a3a\" stroke-width=\"2\"/>\n"
        ));
    }
    svg.push_str("</g>\n");

    let frame = region_points(arr, &l, f.rays());
    svg.push_str(&format!(
        "<polygon class=\"triangle\" points=\"{}\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"2.5\"/>\n",
        points_attr(&frame)
    ));

    svg.push_str("<g class=\"highlights\">\n");
    let r = arr.rs().rank();
    for mask in 0..1u32 << r {
        let k: BTreeSet<usize> = (1..=r).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let g = sigma(arr, &k)?;
        let id = subset_id(&k);
        match g.cone().dim() {
            3 => {
                let pts = region_points(arr, &l, g.cone().rays());
                svg.push_str(&format!(
                    "<polygon class=\"highlight highlight-region\" id=\"{id}\" points=\"{}\" fill=\"#c0392b\" fill-opacity=\"0.45\" stroke=\"none\"/>\n",
                    points_attr(&pts)
                ));
            }
            2 => {
                let ends: Vec<Pt> = g
                    .cone()
                    .rays()
                    .iter()
                    .map(|v| slice_point(arr, &l, v))
                    .collect();
                let (x1, y1) = coords(&ends[0]);
                let (x2, y2) = coords(&ends[1]);
                svg.push_str(&format!(
                    "<line class=\"highlight highlight-edge\" id=\"{id}\" x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y2}\" stroke=\"#c0392b\" stroke-width=\"5\" stroke-linecap=\"round\"/>\n"
                ));
            }
            1 => {
                let p = slice_point(arr, &l, &g.cone().rays()[0]);
                let (cx, cy) = coords(&p);
                svg.push_str(&format!(
                    "<circle class=\"highlight highlight-point\" id=\"{id}\" cx=\"{cx}\" cy=\"{cy}\" r=\"6\" fill=\"#c0392b\"/>\n"
                ));
            }
            _ => {}
        }
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
