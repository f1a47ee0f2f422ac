//! Linear Jaco graphs `J_n(f(x))` for `f(x) = mx + c`.
//!
//! The arc `(v_i, v_j)`, `i < j`, is present iff `f(i) + i - d⁻(v_i) >= j`.
//! Because `d⁻(v_i)` only depends on tails below `i`, the arc set is built
//! in one ascending pass over the tails.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// The growth rule `f(x) = m·x + c` with `m, c >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearFunction {
    pub m: u64,
    pub c: u64,
}

impl LinearFunction {
    /// `f(x) = x`, the case both recursion formulas are stated for.
    pub const IDENTITY: LinearFunction = LinearFunction { m: 1, c: 0 };

    pub const fn new(m: u64, c: u64) -> Self {
        LinearFunction { m, c }
    }

    pub fn eval(&self, x: usize) -> u128 {
        self.m as u128 * x as u128 + self.c as u128
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub(crate) fn require_identity(&self) -> Result<()> {
        if self.is_identity() {
            Ok(())
        } else {
            Err(Error::WrongFunction {
                m: self.m,
                c: self.c,
            })
        }
    }
}

impl Default for LinearFunction {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for LinearFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}", self.m, self.c)
    }
}

/// A finite directed Jaco graph together with its underlying simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoGraph {
    f: LinearFunction,
    n: usize,
    /// Lexicographically sorted arcs `(tail, head)`, `tail < head`.
    arcs: Vec<(usize, usize)>,
    in_degree: Vec<usize>,
    out_degree: Vec<usize>,
    underlying: SimpleGraph,
}

impl JacoGraph {
    /// Builds `J_n(f)` by the sequential arc rule.
    pub fn build(f: LinearFunction, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut in_degree = vec![0usize; n + 1];
        let mut arcs = Vec::new();
        for i in 1..=n {
            // in_degree[i] is final here: all tails of arcs into v_i are < i.
            let reach = f.eval(i) + i as u128 - in_degree[i] as u128;
            let last = reach.min(n as u128) as usize;
            if last > i {
                arcs.extend((i + 1..=last).map(|j| (i, j)));
                for d in &mut in_degree[i + 1..=last] {
                    *d += 1;
                }
            }
        }
        Ok(Self::assemble(f, n, arcs))
    }

    /// Wraps an arbitrary arc list without enforcing the construction rule.
    /// Use [`verify_definition_fixed_point`](Self::verify_definition_fixed_point)
    /// to test whether the arcs actually form `J_n(f)`.
    pub fn from_arcs<I>(f: LinearFunction, n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut list = Vec::new();
        for (tail, head) in arcs {
            for v in [tail, head] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: n,
                    });
                }
            }
            if tail == head {
                return Err(Error::SelfLoop(tail));
            }
            if tail > head {
                return Err(Error::ArcOrientation { tail, head });
            }
            list.push((tail, head));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::assemble(f, n, list))
    }

    fn assemble(f: LinearFunction, n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut in_degree = vec![0usize; n];
        let mut out_degree = vec![0usize; n];
        for &(i, j) in &arcs {
            out_degree[i - 1] += 1;
            in_degree[j - 1] += 1;
        }
        let underlying = SimpleGraph::from_canonical_edges(n, arcs.clone());
        JacoGraph {
            f,
            n,
            arcs,
            in_degree,
            out_degree,
            underlying,
        }
    }

    pub fn function(&self) -> LinearFunction {
        self.f
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// The underlying undirected graph `J*_n`.
    pub fn underlying(&self) -> &SimpleGraph {
        &self.underlying
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_degree[v - 1]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_degree[v - 1]
    }

    /// `d(v) = d⁺(v) + d⁻(v)`.
    pub fn degree(&self, v: usize) -> usize {
        self.in_degree(v) + self.out_degree(v)
    }

    /// `f(v) + v - d⁻(v)`: the largest head index `v` may point to.
    pub fn reach(&self, v: usize) -> i128 {
        self.f.eval(v) as i128 + v as i128 - self.in_degree(v) as i128
    }

    /// Tails `v_t` that would point at `v_{n+1}` if the graph were extended
    /// by one vertex. In-degrees of `v_1..v_n` are unaffected by the
    /// extension, so this is read off the current graph.
    pub fn extension_in_neighbors(&self) -> Vec<usize> {
        let next = self.n as i128 + 1;
        (1..=self.n).filter(|&t| self.reach(t) >= next).collect()
    }

    /// Direct check of the arc rule over every pair `i < j <= n`, using the
    /// in-degrees of this arc set.
    pub fn verify_definition_fixed_point(&self) -> bool {
        let n = self.n;
        let mut present = vec![false; n * n];
        for &(i, j) in &self.arcs {
            present[(i - 1) * n + (j - 1)] = true;
        }
        (1..=n).all(|i| {
            let reach = self.reach(i);
            (i + 1..=n).all(|j| present[(i - 1) * n + (j - 1)] == (reach >= j as i128))
        })
    }

    /// Checks the four structural properties of Jaco graphs.
    ///
    /// The degree property `d(v_k) = f(k)` is only checked for vertices whose
    /// out-neighbourhood is fully realised inside the finite graph, i.e.
    /// `f(k) + k - d⁻(v_k) <= n`.
    pub fn verify_fundamental_properties(&self) -> PropertyReport {
        let n = self.n;
        let vertex_labels = {
            let bad = self
                .arcs
                .iter()
                .flat_map(|&(i, j)| [i, j])
                .find(|&v| v == 0 || v > n);
            PropertyCheck::from_violation(bad.map(|v| format!("vertex index {v} outside 1..={n}")))
        };

        let tail_before_head = PropertyCheck::from_violation(
            self.arcs
                .iter()
                .find(|&&(i, j)| i >= j)
                .map(|&(i, j)| format!("arc ({i}, {j}) has tail >= head")),
        );

        let mut tails: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(i, j) in &self.arcs {
            tails[j - 1].push(i);
        }
        let contiguous_in_neighbors = PropertyCheck::from_violation((1..=n).find_map(|j| {
            let list = &tails[j - 1];
            let smallest = *list.iter().min()?;
            let expected = j - smallest;
            (list.len() != expected).then(|| {
                let missing = (smallest + 1..j)
                    .find(|t| !list.contains(t))
                    .unwrap_or(smallest);
                format!("v_{j} has tail v_{smallest} but not v_{missing}")
            })
        }));

        let realized_degree = PropertyCheck::from_violation((1..=n).find_map(|k| {
            let realized = self.reach(k) <= n as i128;
            let fk = self.f.eval(k);
            (realized && self.degree(k) as u128 != fk)
                .then(|| format!("d(v_{k}) = {} but f({k}) = {fk}", self.degree(k)))
        }));

        PropertyReport {
            vertex_labels,
            tail_before_head,
            contiguous_in_neighbors,
            realized_degree,
        }
    }

    /// Maximum degree, the Jaconian set attaining it, and the prime
    /// (lowest-indexed) Jaconian vertex.
    pub fn jaconian_info(&self) -> JaconianInfo {
        let degrees = self.underlying.degree_sequence();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let jaconian_set: Vec<usize> = (1..=self.n)
            .filter(|&v| degrees[v - 1] == max_degree)
            .collect();
        let prime_index = jaconian_set[0];
        JaconianInfo {
            max_degree,
            jaconian_set,
            prime_index,
            hope_range: prime_index + 1..=self.n,
        }
    }

    /// Subgraph of `J*_n` induced by the vertices above the prime Jaconian
    /// vertex. Order 0 when the prime Jaconian vertex is `v_n`.
    pub fn hope_graph(&self) -> SimpleGraph {
        let range: Vec<usize> = self.jaconian_info().hope_range.collect();
        self.underlying
            .induced_subgraph(&range)
            .expect("hope range lies within 1..=n")
            .0
    }

    /// Orders of the connected components of `J*_n`, largest first.
    pub fn component_structure(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.underlying.components().iter().map(Vec::len).collect();
        orders.sort_unstable_by(|a, b| b.cmp(a));
        orders
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub holds: bool,
    pub counterexample: Option<String>,
}

impl PropertyCheck {
    fn from_violation(violation: Option<String>) -> Self {
        PropertyCheck {
            holds: violation.is_none(),
            counterexample: violation,
        }
    }
}

/// Outcome of [`JacoGraph::verify_fundamental_properties`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// (i) vertices are exactly `v_1..v_n`.
    pub vertex_labels: PropertyCheck,
    /// (ii) every arc runs from a lower to a higher index.
    pub tail_before_head: PropertyCheck,
    /// (iii) in-neighbours of each head form an interval ending just below it.
    pub contiguous_in_neighbors: PropertyCheck,
    /// (iv) `d(v_k) = f(k)` for every fully realised vertex.
    pub realized_degree: PropertyCheck,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        self.vertex_labels.holds
            && self.tail_before_head.holds
            && self.contiguous_in_neighbors.holds
            && self.realized_degree.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JaconianInfo {
    pub max_degree: usize,
    pub jaconian_set: Vec<usize>,
    pub prime_index: usize,
    /// `prime_index + 1 ..= n`; empty when the prime vertex is `v_n`.
    pub hope_range: RangeInclusive<usize>,
}
