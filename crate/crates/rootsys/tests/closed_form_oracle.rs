//! Closed-form data for the supported types, frozen independently of the
//! closure algorithm: positive-root counts, Coxeter numbers, and the marks
//! of the affine diagrams. The library must reproduce all of it.

use rootsys::{build_root_system, DynkinType};

fn rs(s: &str) -> rootsys::RootSystem {
    build_root_system(s.parse::<DynkinType>().unwrap())
}

#[test]
fn root_counts_match_closed_forms() {
    for r in 1..=8usize {
        let sys = rs(&format!("A{r}"));
        assert_eq!(sys.positive_roots().len(), r * (r + 1) / 2, "A{r}");
    }
    for r in 4..=8usize {
        let sys = rs(&format!("D{r}"));
        assert_eq!(sys.positive_roots().len(), r * (r - 1), "D{r}");
    }
    for (r, count) in [(6usize, 36usize), (7, 63), (8, 120)] {
        let sys = rs(&format!("E{r}"));
        assert_eq!(sys.positive_roots().len(), count, "E{r}");
    }
}

#[test]
fn coxeter_numbers_match_closed_forms() {
    for r in 1..=8usize {
        assert_eq!(rs(&format!("A{r}")).coxeter_number(), (r + 1) as i64, "A{r}");
    }
    for r in 4..=8usize {
        assert_eq!(rs(&format!("D{r}")).coxeter_number(), (2 * r - 2) as i64, "D{r}");
    }
    for (r, h) in [(6usize, 12i64), (7, 18), (8, 30)] {
        assert_eq!(rs(&format!("E{r}")).coxeter_number(), h, "E{r}");
    }
}

#[test]
fn delta_matches_mark_tables() {
    for r in 1..=8usize {
        assert_eq!(rs(&format!("A{r}")).delta(), vec![1i64; r + 1], "A{r}");
    }
    for r in 4..=8usize {
        // marks = [1, 1, 2, ..., 2, 1, 1] over nodes 0..=r
        let mut marks = vec![1i64, 1];
        marks.extend(std::iter::repeat(2).take(r - 3));
        marks.push(1);
        marks.push(1);
        assert_eq!(rs(&format!("D{r}")).delta(), marks, "D{r}");
    }
    assert_eq!(rs("E6").delta(), &[1, 1, 2, 2, 3, 2, 1]);
    assert_eq!(rs("E7").delta(), &[1, 2, 2, 3, 4, 3, 2, 1]);
    assert_eq!(rs("E8").delta(), &[1, 2, 3, 4, 6, 5, 4, 3, 2]);
}

#[test]
fn coxeter_equals_sum_of_marks() {
    for s in ["A1", "A4", "D5", "E6", "E7", "E8"] {
        let sys = rs(s);
        assert_eq!(
            sys.coxeter_number(),
            sys.delta().iter().sum::<i64>(),
            "{s}"
        );
    }
}

#[test]
fn affine_matrix_annihilates_delta() {
    for s in ["A1", "A2", "A7", "D4", "D8", "E6", "E7", "E8"] {
        let sys = rs(s);
        for row in sys.affine_cartan() {
            let dot: i64 = row.iter().zip(sys.delta()).map(|(a, d)| a * d).sum();
            assert_eq!(dot, 0, "{s}");
        }
    }
}

#[test]
fn heights_partition_by_dual_coxeter_bound() {
    // Root heights run 1..=h-1 and the number of roots of height 1 is r.
    for s in ["A3", "D4", "E6"] {
        let sys = rs(s);
        let h = sys.coxeter_number();
        assert!(sys.positive_roots().iter().all(|a| a.height() < h), "{s}");
        assert_eq!(
            sys.positive_roots().iter().filter(|a| a.height() == 1).count(),
            sys.rank(),
            "{s}"
        );
    }
}
