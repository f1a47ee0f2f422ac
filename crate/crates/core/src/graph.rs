//! Undirected simple graphs with BFS distances and exact distance-based indices.
//!
//! Vertices are the 1-based indices `1..=order`, matching the usual
//! `v_1, ..., v_n` labelling. Index values are returned as [`BigCount`].

use std::collections::BTreeSet;

use crate::count::BigCount;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `1..=order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    order: usize,
    /// Sorted `(a, b)` pairs with `a < b`.
    edges: Vec<(usize, usize)>,
    /// `adjacency[v - 1]` holds the sorted neighbours of `v`.
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicates (in either orientation)
    /// collapse to a single edge; edges are stored in sorted canonical order.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self::from_canonical_edges(order, set.into_iter().collect()))
    }

    /// Trusted constructor for edge lists already sorted, deduplicated and
    /// in range with `a < b`.
    pub(crate) fn from_canonical_edges(order: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&(a, b)| a >= 1 && a < b && b <= order));
        let mut adjacency = vec![Vec::new(); order];
        for &(a, b) in &edges {
            adjacency[a - 1].push(b);
            adjacency[b - 1].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        SimpleGraph {
            order,
            edges,
            adjacency,
        }
    }

    /// Graph with `order` vertices and no edges.
    pub fn edgeless(order: usize) -> Self {
        SimpleGraph {
            order,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); order],
        }
    }

    pub fn path(order: usize) -> Self {
        Self::from_edges(order, (1..order).map(|v| (v, v + 1))).expect("valid path")
    }

    pub fn cycle(order: usize) -> Result<Self> {
        if order < 3 {
            return Err(Error::OrderTooSmall { n: order, min: 3 });
        }
        Self::from_edges(order, (1..=order).map(|v| (v, v % order + 1)))
    }

    pub fn complete(order: usize) -> Self {
        let edges = (1..=order).flat_map(|a| (a + 1..=order).map(move |b| (a, b)));
        Self::from_edges(order, edges).expect("valid complete graph")
    }

    /// Number of vertices, ν(G).
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges, ε(G).
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v - 1].len())
    }

    /// Degrees of all vertices; position `k - 1` holds the degree of `v_k`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adjacency[v - 1])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.order && self.adjacency[a - 1].binary_search(&b).is_ok()
    }

    /// All-pairs unweighted distances, one breadth-first search per source.
    ///
    /// Each search expands its frontier against a bitset of still-unvisited
    /// vertices, so a row costs `O(order² / 64)` word operations regardless
    /// of density.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order;
        let words = n.div_ceil(64);
        let mut adj_bits = vec![0u64; n * words];
        for &(a, b) in &self.edges {
            let (a, b) = (a - 1, b - 1);
            adj_bits[a * words + b / 64] |= 1 << (b % 64);
            adj_bits[b * words + a / 64] |= 1 << (a % 64);
        }

        let mut dist = vec![UNREACHABLE; n * n];
        let mut unvisited = vec![0u64; words];
        let mut frontier = Vec::with_capacity(n);
        let mut next = Vec::with_capacity(n);
        for source in 0..n {
            unvisited.fill(u64::MAX);
            if !n.is_multiple_of(64) {
                unvisited[words - 1] = (1u64 << (n % 64)) - 1;
            }
            unvisited[source / 64] &= !(1 << (source % 64));
            let row = &mut dist[source * n..(source + 1) * n];
            row[source] = 0;
            frontier.clear();
            frontier.push(source);
            let mut level = 0u32;
            while !frontier.is_empty() {
                level += 1;
                next.clear();
                for &v in &frontier {
                    let adj = &adj_bits[v * words..(v + 1) * words];
                    for (w, (bits, free)) in adj.iter().zip(unvisited.iter_mut()).enumerate() {
                        let mut hit = bits & *free;
                        if hit == 0 {
                            continue;
                        }
                        *free &= !hit;
                        while hit != 0 {
                            let x = w * 64 + hit.trailing_zeros() as usize;
                            hit &= hit - 1;
                            row[x] = level;
                            next.push(x);
                        }
                    }
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        DistanceMatrix { order: n, dist }
    }

    /// Vertex sets of the connected components, each sorted, in order of
    /// their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 1..=self.order {
            if seen[start - 1] {
                continue;
            }
            seen[start - 1] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v - 1] {
                    if !seen[w - 1] {
                        seen[w - 1] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff a search from vertex 1 reaches every vertex. The order-0
    /// graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.components().len() == 1
    }

    /// Gut(G): sum over unordered pairs of `d(v)·d(u)·dist(v, u)`.
    pub fn gutman_index(&self) -> Result<BigCount> {
        self.gutman_index_with(&self.all_pairs_distances())
    }

    /// Gutman index using a precomputed distance matrix of this graph.
    pub fn gutman_index_with(&self, dist: &DistanceMatrix) -> Result<BigCount> {
        let deg = self.degree_sequence();
        pair_sum(self.order, dist, |a, b, d| {
            BigCount::product([deg[a] as u128, deg[b] as u128, d as u128])
        })
    }

    /// W(G): sum over unordered pairs of `dist(v, u)`.
    pub fn wiener_index(&self) -> Result<BigCount> {
        pair_sum(self.order, &self.all_pairs_distances(), |_, _, d| {
            Ok(BigCount::from(d))
        })
    }

    /// Subgraph induced by `vertices`, relabelled `1..=k` in increasing
    /// original order. The returned mapping sends new label `j` to
    /// `mapping[j - 1]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(SimpleGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut new_label = vec![0usize; self.order + 1];
        for (j, &v) in keep.iter().enumerate() {
            new_label[v] = j + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_label[a] != 0 && new_label[b] != 0)
            .map(|&(a, b)| (new_label[a], new_label[b]))
            .collect();
        // relabelling is monotone, so the filtered list stays sorted
        let sub = SimpleGraph::from_canonical_edges(keep.len(), edges);
        Ok((sub, keep))
    }

    /// True iff every pair of distinct vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.order;
        self.size() == n * n.saturating_sub(1) / 2
    }
}

/// Sums `term(a, b, dist)` over unordered pairs (0-based `a < b`).
fn pair_sum<F>(order: usize, dist: &DistanceMatrix, term: F) -> Result<BigCount>
where
    F: Fn(usize, usize, u32) -> Result<BigCount>,
{
    let mut total = BigCount::ZERO;
    for a in 0..order {
        for b in a + 1..order {
            let d = dist.raw(a, b);
            if d == UNREACHABLE {
                return Err(Error::DisconnectedGraph);
            }
            total = total.checked_add(term(a, b, d)?)?;
        }
    }
    Ok(total)
}

const UNREACHABLE: u32 = u32::MAX;

/// Symmetric table of shortest-path lengths.
///
/// Unreachable pairs are reported as `None`; there is no numeric stand-in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Distance between 1-based vertices `a` and `b`, `None` when no path
    /// exists.
    ///
    /// Panics if either index is outside `1..=order`.
    pub fn get(&self, a: usize, b: usize) -> Option<u32> {
        assert!(
            (1..=self.order).contains(&a) && (1..=self.order).contains(&b),
            "vertex pair ({a}, {b}) out of range 1..={}",
            self.order
        );
        let d = self.raw(a - 1, b - 1);
        (d != UNREACHABLE).then_some(d)
    }

    /// Like [`get`](Self::get) but treats an unreachable pair as an error.
    pub fn finite(&self, a: usize, b: usize) -> Result<u32> {
        self.get(a, b).ok_or(Error::DisconnectedGraph)
    }

    fn raw(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.order + b]
    }

    /// Largest finite distance, if any pair is reachable.
    pub fn max_finite(&self) -> Option<u32> {
        self.dist
            .iter()
            .copied()
            .filter(|&d| d != UNREACHABLE)
            .max()
    }
}
