//! Reference implementations used as oracles by the integration tests.
//!
//! Nothing here calls into the library's graph, distance or index code;
//! graphs are plain `(order, edge list)` pairs.

#![allow(dead_code)]

use std::collections::VecDeque;

use proptest::prelude::*;

/// Arcs of `J_n(mx + c)`, built column by column: for each head `j`, test
/// every tail `i < j` against `m·i + c + i - d⁻(v_i) >= j`.
pub fn jaco_arcs(m: u64, c: u64, n: usize) -> Vec<(usize, usize)> {
    let mut indeg = vec![0i128; n + 1];
    let mut arcs = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            let reach = m as i128 * i as i128 + c as i128 + i as i128 - indeg[i];
            if reach >= j as i128 {
                arcs.push((i, j));
                indeg[j] += 1;
            }
        }
    }
    arcs.sort_unstable();
    arcs
}

pub fn adjacency(order: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; order + 1]; order + 1];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    adj
}

pub fn degrees(order: usize, edges: &[(usize, usize)]) -> Vec<u128> {
    let adj = adjacency(order, edges);
    (0..=order)
        .map(|v| {
            if v == 0 {
                0
            } else {
                adj[v].iter().filter(|&&b| b).count() as u128
            }
        })
        .collect()
}

/// BFS from `a`, returning the distance to `b`.
pub fn distance(adj: &[Vec<bool>], a: usize, b: usize) -> Option<u128> {
    let n = adj.len() - 1;
    let mut dist = vec![None; n + 1];
    dist[a] = Some(0u128);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for y in 1..=n {
            if adj[x][y] && dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    dist[b]
}

/// Full distance table (1-based) by one BFS per ordered pair.
pub fn distance_table(order: usize, edges: &[(usize, usize)]) -> Vec<Vec<Option<u128>>> {
    let adj = adjacency(order, edges);
    (0..=order)
        .map(|a| {
            (0..=order)
                .map(|b| {
                    if a == 0 || b == 0 {
                        None
                    } else {
                        distance(&adj, a, b)
                    }
                })
                .collect()
        })
        .collect()
}

/// Gutman index by explicit pair enumeration, a fresh BFS per pair.
/// `None` if the graph is disconnected.
pub fn gutman(order: usize, edges: &[(usize, usize)]) -> Option<u128> {
    let adj = adjacency(order, edges);
    let deg = degrees(order, edges);
    let mut total = 0u128;
    for a in 1..=order {
        for b in a + 1..=order {
            total += deg[a] * deg[b] * distance(&adj, a, b)?;
        }
    }
    Some(total)
}

pub fn wiener(order: usize, edges: &[(usize, usize)]) -> Option<u128> {
    let adj = adjacency(order, edges);
    let mut total = 0u128;
    for a in 1..=order {
        for b in a + 1..=order {
            total += distance(&adj, a, b)?;
        }
    }
    Some(total)
}

/// `G ∪ H + vu` with `H` shifted by `order_g`.
pub fn compose(
    order_g: usize,
    g: &[(usize, usize)],
    v: usize,
    order_h: usize,
    h: &[(usize, usize)],
    u: usize,
) -> (usize, Vec<(usize, usize)>) {
    let mut edges: Vec<_> = g.to_vec();
    edges.extend(h.iter().map(|&(a, b)| (a + order_g, b + order_g)));
    edges.push((v, u + order_g));
    (order_g + order_h, edges)
}

/// The published one-step recursion for `J_n(x)`, summed literally as
/// printed. `i` is the number of vertices not adjacent to `v_{n+1}` in
/// `J_{n+1}(x)`.
pub fn printed_recursion(n: usize) -> i128 {
    let edges = jaco_arcs(1, 0, n);
    let next = jaco_arcs(1, 0, n + 1);
    let i = n - next.iter().filter(|&&(_, h)| h == n + 1).count();
    let d = degrees(n, &edges);
    let dist = distance_table(n, &edges);
    let dd = |a: usize, b: usize| dist[a][b].unwrap() as i128;
    let d = |v: usize| d[v] as i128;
    let (n_, i_) = (n as i128, i as i128);

    let mut s = gutman(n, &edges).unwrap() as i128;
    for k in 1..=i {
        for t in i + 1..=n {
            s += d(k) * dd(k, t);
        }
    }
    for t in i + 1..n {
        for q in t + 1..=n {
            s += d(t) + d(q);
        }
    }
    let mut inner = 0;
    for k in 1..=i {
        inner += d(k) * dd(k, n);
    }
    for t in i + 1..=n {
        inner += d(t);
    }
    s += (n_ - i_) * inner;
    s += n_ - i_ - 1;
    s += i_ * (n_ - i_);
    s
}

/// The published trivial edge-joint formula for `J*_n(x)`, `J*_m(x)`,
/// summed literally as printed.
pub fn printed_joint(n: usize, m: usize) -> i128 {
    let g = jaco_arcs(1, 0, n);
    let h = jaco_arcs(1, 0, m);
    let (dg, dh) = (degrees(n, &g), degrees(m, &h));
    let (tg, th) = (distance_table(n, &g), distance_table(m, &h));
    let dg = |v: usize| dg[v] as i128;
    let dh = |v: usize| dh[v] as i128;
    let distg = |a: usize, b: usize| tg[a][b].unwrap() as i128;
    let disth = |a: usize, b: usize| th[a][b].unwrap() as i128;

    let mut s = gutman(n, &g).unwrap() as i128 + gutman(m, &h).unwrap() as i128;
    for l in 2..=n {
        s += dg(l) * distg(1, l);
    }
    for t in 2..=m {
        s += dh(t) * disth(1, t);
    }
    for t in 2..=m {
        s += (dg(1) + 1) * dh(t) * (disth(1, t) + 1);
    }
    for k in 2..=n {
        for t in 2..=m {
            s += dg(k) * dh(t) * (distg(1, k) + disth(1, t) + 1);
        }
    }
    s + 4
}

/// Connected graph on `1..=order`: a random spanning tree plus extra edges.
pub fn connected_graph(max_order: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1..=max_order).prop_flat_map(|order| {
        let parents: Vec<_> = (2..=order).map(|v| 1..v).collect();
        let extra = prop::collection::vec((1..=order, 1..=order), 0..=order * 2);
        (Just(order), parents, extra).prop_map(|(order, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .into_iter()
                .enumerate()
                .map(|(k, p)| (p, k + 2))
                .collect();
            edges.extend(extra.into_iter().filter(|(a, b)| a != b));
            let mut edges: Vec<_> = edges
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            edges.sort_unstable();
            edges.dedup();
            (order, edges)
        })
    })
}
