use jaco_core::jaco::{JacoGraph, LinearFunction};
use jaco_core::recursion::{self, recursion_delta_report};

const X: LinearFunction = LinearFunction::IDENTITY;

#[test]
fn exact_recursion_equals_direct_up_to_500() {
    let rows = recursion_delta_report(500).unwrap();
    assert_eq!(rows.len(), 499);
    for (row, n) in rows.iter().zip(2..) {
        assert_eq!(row.n, n);
        assert!(
            row.exact_matches_direct(),
            "n = {n}: {} vs {}",
            row.exact_rhs,
            row.direct
        );
        assert!(row.bookkeeping_closes().unwrap(), "n = {n}");
        let sum: i128 = row.term_deltas().unwrap().iter().sum();
        assert_eq!(sum, row.delta_stated, "n = {n}");
    }
}

#[test]
fn structural_preconditions_hold() {
    for n in 2..=500 {
        let j = JacoGraph::build(X, n).unwrap();
        recursion::recursion_terms(&j).unwrap_or_else(|e| panic!("n = {n}: {e}"));
    }
}

#[test]
fn prime_index_definitions_agree() {
    for row in recursion_delta_report(300).unwrap() {
        assert!(row.prime_index_agrees, "n = {}", row.n);
    }
}

#[test]
fn distances_stable_under_extension() {
    let mut current = JacoGraph::build(X, 2).unwrap();
    for n in 2..=200 {
        let next = JacoGraph::build(X, n + 1).unwrap();
        let a = current.underlying().all_pairs_distances();
        let b = next.underlying().all_pairs_distances();
        for x in 1..=n {
            for y in 1..=n {
                assert_eq!(a.get(x, y), b.get(x, y), "n = {n}, ({x}, {y})");
            }
        }
        current = next;
    }
}

#[test]
fn stated_deltas_small_orders() {
    let rows = recursion_delta_report(4).unwrap();
    let got: Vec<(usize, i128)> = rows.iter().map(|r| (r.n, r.delta_stated)).collect();
    assert_eq!(got, vec![(2, -1), (3, -2), (4, 0)]);
}
