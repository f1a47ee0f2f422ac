//! Hand-derived values, each reproduced first by the brute-force oracle and
//! then checked against the library.

mod common;

use jaco_core::graph::SimpleGraph;
use jaco_core::jaco::{JacoGraph, LinearFunction};
use jaco_core::joint::{self, JointSpec};
use jaco_core::recursion;

const X: LinearFunction = LinearFunction::IDENTITY;

fn jx(n: usize) -> JacoGraph {
    JacoGraph::build(X, n).unwrap()
}

#[test]
fn oracle_reproduces_hand_traced_constructions() {
    assert_eq!(
        common::jaco_arcs(1, 0, 5),
        vec![(1, 2), (2, 3), (3, 4), (3, 5), (4, 5)]
    );
    let j7 = common::jaco_arcs(1, 0, 7);
    assert_eq!(j7.len(), 10);
    assert_eq!(&common::degrees(7, &j7)[1..], &[1, 2, 3, 4, 4, 3, 3]);
    assert!(common::jaco_arcs(0, 0, 4).is_empty());
    let edges: Vec<usize> = (1..=7).map(|n| common::jaco_arcs(1, 0, n).len()).collect();
    assert_eq!(edges, vec![0, 1, 2, 3, 5, 7, 10]);
}

#[test]
fn oracle_reproduces_hand_values() {
    let p4 = [(1, 2), (2, 3), (3, 4)];
    assert_eq!(common::gutman(4, &p4), Some(19));
    assert_eq!(common::wiener(4, &p4), Some(10));
    let c4 = [(1, 2), (2, 3), (3, 4), (1, 4)];
    assert_eq!(common::gutman(4, &c4), Some(32));
    assert_eq!(common::wiener(4, &c4), Some(8));
    assert_eq!(common::gutman(2, &[(1, 2)]), Some(1));

    let gut: Vec<u128> = (2..=5)
        .map(|n| common::gutman(n, &common::jaco_arcs(1, 0, n)).unwrap())
        .collect();
    assert_eq!(gut, vec![1, 6, 19, 58]);

    let j7 = common::jaco_arcs(1, 0, 7);
    assert_eq!(common::distance(&common::adjacency(7, &j7), 1, 7), Some(4));
    let j5 = common::jaco_arcs(1, 0, 5);
    assert_eq!(common::distance(&common::adjacency(5, &j5), 1, 5), Some(3));

    assert_eq!([2, 3, 4].map(common::printed_recursion), [5, 17, 58]);
    assert_eq!(common::printed_joint(2, 2), 15);
    assert_eq!(common::printed_joint(3, 2), 30);

    let (order, edges) = common::compose(2, &[(1, 2)], 1, 2, &[(1, 2)], 1);
    assert_eq!(common::gutman(order, &edges), Some(19));
    let (order, edges) = common::compose(3, &common::jaco_arcs(1, 0, 3), 1, 2, &[(1, 2)], 1);
    assert_eq!(common::gutman(order, &edges), Some(44));
}

#[test]
fn builder_matches_column_wise_construction() {
    for m in 0..=3 {
        for c in 0..=3 {
            for n in 1..=60 {
                let j = JacoGraph::build(LinearFunction::new(m, c), n).unwrap();
                assert_eq!(
                    j.arcs(),
                    common::jaco_arcs(m, c, n).as_slice(),
                    "m={m} c={c} n={n}"
                );
            }
        }
    }
}

#[test]
fn library_values_match_frozen_oracle_values() {
    assert_eq!(jx(5).underlying().degree(3), Ok(3));
    assert_eq!(jx(7).underlying().all_pairs_distances().get(1, 7), Some(4));
    for (n, want) in [(2, 1), (3, 6), (4, 19), (5, 58)] {
        assert_eq!(jx(n).underlying().gutman_index().unwrap().get(), want);
    }
    assert_eq!(
        SimpleGraph::cycle(4).unwrap().gutman_index().unwrap().get(),
        32
    );
}

#[test]
fn gutman_and_wiener_match_oracle_on_jaco_families() {
    for (m, c) in [(1, 0), (1, 1), (2, 0), (2, 3), (3, 1)] {
        for n in 1..=25 {
            let arcs = common::jaco_arcs(m, c, n);
            let g = JacoGraph::build(LinearFunction::new(m, c), n).unwrap();
            let g = g.underlying();
            assert_eq!(
                g.gutman_index().ok().map(|v| v.get()),
                common::gutman(n, &arcs)
            );
            assert_eq!(
                g.wiener_index().ok().map(|v| v.get()),
                common::wiener(n, &arcs)
            );
        }
    }
}

#[test]
fn stated_recursion_is_the_printed_formula() {
    for n in 2..=40 {
        let stated = recursion::stated_rhs(&jx(n)).unwrap().get() as i128;
        assert_eq!(stated, common::printed_recursion(n), "n = {n}");
    }
}

#[test]
fn exact_recursion_matches_oracle() {
    for n in 2..=30 {
        let want = common::gutman(n + 1, &common::jaco_arcs(1, 0, n + 1)).unwrap();
        assert_eq!(recursion::exact_rhs(&jx(n)).unwrap().get(), want, "n = {n}");
    }
}

#[test]
fn stated_joint_is_the_printed_formula() {
    for n in 2..=15 {
        for m in 2..=n {
            let stated = joint::stated_rhs(&jx(n), &jx(m)).unwrap().get() as i128;
            assert_eq!(stated, common::printed_joint(n, m), "n = {n}, m = {m}");
        }
    }
}

#[test]
fn closed_form_matches_oracle_for_all_anchors() {
    for n in 2..=8 {
        for m in 2..=6 {
            let (g, h) = (common::jaco_arcs(1, 0, n), common::jaco_arcs(1, 0, m));
            for v in 1..=n {
                for u in 1..=m {
                    let (order, edges) = common::compose(n, &g, v, m, &h, u);
                    let want = common::gutman(order, &edges).unwrap();
                    let spec = JointSpec::new(
                        jx(n).underlying().clone(),
                        v,
                        jx(m).underlying().clone(),
                        u,
                    )
                    .unwrap();
                    assert_eq!(joint::closed_form_joint_gutman(&spec).unwrap().get(), want);
                    assert_eq!(
                        joint::edge_joint_graph(&spec).edges(),
                        edges
                            .iter()
                            .map(|&(a, b)| (a.min(b), a.max(b)))
                            .collect::<std::collections::BTreeSet<_>>()
                            .into_iter()
                            .collect::<Vec<_>>()
                    );
                }
            }
        }
    }
}

#[test]
fn star_with_tail() {
    // P_3 bridged at its centre to K_2
    let (order, edges) = common::compose(3, &[(1, 2), (2, 3)], 2, 2, &[(1, 2)], 1);
    let want = common::gutman(order, &edges).unwrap();
    let spec = JointSpec::new(SimpleGraph::path(3), 2, SimpleGraph::complete(2), 1).unwrap();
    let composed = joint::edge_joint_graph(&spec);
    assert_eq!((composed.order(), composed.size()), (5, 4));
    assert_eq!(composed.gutman_index().unwrap().get(), want);
    assert_eq!(joint::closed_form_joint_gutman(&spec).unwrap().get(), want);
}
