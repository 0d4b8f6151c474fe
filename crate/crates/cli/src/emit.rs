//! JSON and text emission. Every JSON document opens with the labeled
//! diagram so a reader can check the node numbering against their own
//! conventions before trusting any K-subset.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use gitfan::{Arrangement, GitCone, VerificationReport};
use polycone::RationalVector;
use rootsys::RootSystem;

pub fn header(rs: &RootSystem) -> Map<String, Value> {
    let pairs = |edges: Vec<(usize, usize)>| -> Value {
        Value::from(
            edges
                .iter()
                .map(|&(a, b)| Value::from(vec![a as u64, b as u64]))
                .collect::<Vec<Value>>(),
        )
    };
    let mut m = Map::new();
    m.insert("type".into(), rs.dynkin().to_string().into());
    m.insert("rank".into(), (rs.rank() as u64).into());
    m.insert("edges".into(), pairs(rs.dynkin().edges()));
    m.insert("affine_edges".into(), pairs(rs.affine_edges()));
    m
}

fn finish(mut m: Map<String, Value>, extra: Vec<(&str, Value)>) -> String {
    for (k, v) in extra {
        m.insert(k.into(), v);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
    s.push('\n');
    s
}

pub fn rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn int_rows(rows: &[Vec<i64>]) -> Value {
    Value::from(
        rows.iter()
            .map(|r| Value::from(r.clone()))
            .collect::<Vec<Value>>(),
    )
}

pub fn roots_json(rs: &RootSystem) -> String {
    let roots: Vec<Value> = rs
        .positive_roots()
        .iter()
        .map(|a| {
            json!({
                "coeffs": a.coeffs(),
                "height": a.height(),
            })
        })
        .collect();
    finish(
        header(rs),
        vec![
            ("cartan", int_rows(rs.cartan())),
            ("affine_cartan", int_rows(rs.affine_cartan())),
            ("delta", Value::from(rs.delta().to_vec())),
            ("coxeter_number", Value::from(rs.coxeter_number())),
            ("positive_root_count", Value::from(roots.len() as u64)),
            ("positive_roots", Value::from(roots)),
            ("highest_root", Value::from(rs.highest_root().coeffs().to_vec())),
        ],
    )
}

pub fn roots_text(rs: &RootSystem) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}: rank {}, {} positive roots, Coxeter number {}\n",
        rs.dynkin(),
        rs.rank(),
        rs.positive_roots().len(),
        rs.coxeter_number()
    ));
    out.push_str(&format!("delta = {:?}\n", rs.delta()));
    out.push_str(&format!(
        "highest root = {:?}\n",
        rs.highest_root().coeffs()
    ));
    out
}

pub fn arrangement_json(arr: &Arrangement) -> String {
    let hyperplanes: Vec<Value> = arr
        .hyperplanes()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let coeffs: Vec<String> = h.coeffs().iter().map(BigInt::to_string).collect();
            json!({
                "index": i,
                "coeffs": coeffs,
                "interior_cutting": arr.is_interior_cutting(i),
            })
        })
        .collect();
    finish(
        header(arr.rs()),
        vec![
            ("n", Value::from(arr.n())),
            ("hyperplane_count", Value::from(hyperplanes.len() as u64)),
            (
                "interior_cutting_count",
                Value::from(arr.interior_cutting_count() as u64),
            ),
            ("hyperplanes", Value::from(hyperplanes)),
        ],
    )
}

pub fn arrangement_text(arr: &Arrangement) -> String {
    format!(
        "{} with n = {}: {} hyperplanes, {} cutting the interior of F\n",
        arr.rs().dynkin(),
        arr.n(),
        arr.hyperplanes().len(),
        arr.interior_cutting_count()
    )
}

pub fn cone_json(arr: &Arrangement, body: Value) -> String {
    finish(
        header(arr.rs()),
        vec![("n", Value::from(arr.n())), ("result", body)],
    )
}

pub fn cone_text(arr: &Arrangement, label: &str, g: Option<&GitCone>) -> String {
    match g {
        Some(g) => format!(
            "{} n={} {}: dim {}, {} rays, signs {}\n",
            arr.rs().dynkin(),
            arr.n(),
            label,
            g.cone().dim(),
            g.cone().rays().len(),
            g.sign_string()
        ),
        None => format!(
            "{} n={} {}: dim {}, {} rays\n",
            arr.rs().dynkin(),
            arr.n(),
            label,
            arr.fundamental_cone().dim(),
            arr.fundamental_cone().rays().len()
        ),
    }
}

const N1_CAVEAT: &str =
    "picard_rank and q_factorial read off cone dimensions; the moduli interpretation needs n >= 2";

pub fn locate_json(
    arr: &Arrangement,
    point: &RationalVector,
    cell: &GitCone,
    picard: usize,
    qfac: bool,
) -> String {
    let coords: Vec<String> = point.entries().iter().map(rational).collect();
    let mut extra = vec![
        ("n", Value::from(arr.n())),
        ("point", Value::from(coords)),
        ("cell", cell.to_json()),
        ("picard_rank", Value::from(picard as u64)),
        ("q_factorial", Value::from(qfac)),
    ];
    if arr.n() == 1 {
        extra.push(("caveat", Value::from(N1_CAVEAT)));
    }
    finish(header(arr.rs()), extra)
}

pub fn locate_text(arr: &Arrangement, cell: &GitCone, picard: usize, qfac: bool) -> String {
    let mut out = format!(
        "cell: dim {}, signs {}\npicard_rank = {}\nq_factorial = {}\n",
        cell.cone().dim(),
        cell.sign_string(),
        picard,
        qfac
    );
    if arr.n() == 1 {
        out.push_str(N1_CAVEAT);
        out.push('\n');
    }
    out
}

pub fn verify_json(arr: &Arrangement, report: &VerificationReport) -> String {
    let mut m = header(arr.rs());
    if let Value::Object(body) = report.to_json() {
        for (k, v) in body {
            m.insert(k, v);
        }
    }
    finish(m, vec![])
}

pub fn verify_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.clauses {
        let tag = match c.status {
            gitfan::ClauseStatus::Pass => "pass",
            gitfan::ClauseStatus::Fail => "FAIL",
            gitfan::ClauseStatus::Skipped => "skipped",
        };
        out.push_str(&format!(
            "{:<34} {:<8} expected: {}; computed: {}\n",
            c.name, tag, c.expected, c.computed
        ));
    }
    let overall = match report.overall {
        gitfan::Overall::Pass => "pass",
        gitfan::Overall::Fail => "fail",
        gitfan::Overall::Indeterminate => "indeterminate",
    };
    out.push_str(&format!("overall: {overall}\n"));
    out
}

pub fn chambers_json(arr: &Arrangement, chambers: &[GitCone], adjacency: &[(usize, usize)]) -> String {
    let items: Vec<Value> = chambers
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut m = Map::new();
            m.insert("index".into(), Value::from(i as u64));
            if let Value::Object(body) = g.to_json() {
                for (k, v) in body {
                    m.insert(k, v);
                }
            }
            Value::Object(m)
        })
        .collect();
    let pairs: Vec<Value> = adjacency
        .iter()
        .map(|&(i, j)| Value::from(vec![i as u64, j as u64]))
        .collect();
    finish(
        header(arr.rs()),
        vec![
            ("n", Value::from(arr.n())),
            ("chamber_count", Value::from(chambers.len() as u64)),
            ("adjacent_pair_count", Value::from(pairs.len() as u64)),
            ("chambers", Value::from(items)),
            ("adjacency", Value::from(pairs)),
        ],
    )
}

pub fn chambers_text(arr: &Arrangement, chambers: &[GitCone], adjacency: &[(usize, usize)]) -> String {
    format!(
        "{} with n = {}: {} chambers, {} adjacent pairs\n",
        arr.rs().dynkin(),
        arr.n(),
        chambers.len(),
        adjacency.len()
    )
}
