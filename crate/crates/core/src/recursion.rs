//! One-step recursion for the Gutman index of `J*_{n+1}(x)` from `J*_n(x)`.
//!
//! Going from `J_n(x)` to `J_{n+1}(x)` adds `v_{n+1}` joined to the Hope
//! vertices `v_{i+1}, ..., v_n`. Two right-hand sides are evaluated from
//! data of `J*_n` alone:
//!
//! * the *stated* form, reproduced term for term as published (it is known
//!   to miss the true value for some `n`, and is kept only for auditing);
//! * the *exact* form, a pair-by-pair decomposition that equals
//!   `Gut(J*_{n+1})`.
//!
//! Both are split into the same named terms so a [`DeltaTrace`] can say
//! which term is responsible for a discrepancy.

use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::jaco::{JacoGraph, LinearFunction};
use crate::term::Term;

/// Term-level breakdown of both right-hand sides for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecursionTerms {
    pub n: usize,
    /// Prime Jaconian index, taken as `n - d⁻(v_{n+1})`.
    pub i: usize,
    /// Lowest-indexed maximum-degree vertex of `J_n(x)`; reported for
    /// comparison with `i`.
    pub max_degree_index: usize,
    pub terms: Vec<Term>,
}

impl RecursionTerms {
    pub fn stated_total(&self) -> Result<BigCount> {
        BigCount::try_sum(self.terms.iter().map(|t| Ok(t.stated)))
    }

    pub fn exact_total(&self) -> Result<BigCount> {
        BigCount::try_sum(self.terms.iter().map(|t| Ok(t.exact)))
    }

    pub fn prime_index_agrees(&self) -> bool {
        self.i == self.max_degree_index
    }

    pub fn term(&self, name: &str) -> Option<&Term> {
        self.terms.iter().find(|t| t.name == name)
    }
}

/// Names of the terms in [`RecursionTerms::terms`], in order.
pub const TERM_NAMES: [&str; 8] = [
    "base",
    "cross",
    "hope_degree_sum",
    "hope_constant",
    "new_low_distance",
    "new_low_constant",
    "new_hope_degree",
    "new_hope_constant",
];

struct Inputs {
    n: usize,
    i: usize,
    max_degree_index: usize,
    /// `deg[k]` is the degree of `v_k`; index 0 unused.
    deg: Vec<usize>,
    dist: DistanceMatrix,
    base: BigCount,
}

impl Inputs {
    fn prepare(jn: &JacoGraph) -> Result<Self> {
        jn.function().require_identity()?;
        let n = jn.order();
        if n < 2 {
            return Err(Error::OrderTooSmall { n, min: 2 });
        }
        let g = jn.underlying();
        if !g.is_connected() {
            return Err(Error::DisconnectedGraph);
        }
        let hope = jn.extension_in_neighbors();
        if hope.is_empty() {
            return Err(Error::StructureAssumptionViolated(format!(
                "v_{} would have no neighbours in J_{}",
                n + 1,
                n + 1
            )));
        }
        let i = n - hope.len();
        let dist = g.all_pairs_distances();
        let base = g.gutman_index_with(&dist)?;
        let mut deg = vec![0];
        deg.extend(g.degree_sequence());
        Ok(Inputs {
            n,
            i,
            max_degree_index: jn.jaconian_info().prime_index,
            deg,
            dist,
            base,
        })
    }

    fn d(&self, a: usize, b: usize) -> Result<u128> {
        self.dist.finite(a, b).map(u128::from)
    }

    fn deg(&self, v: usize) -> u128 {
        self.deg[v] as u128
    }

    fn low(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.i
    }

    fn hope(&self) -> std::ops::RangeInclusive<usize> {
        self.i + 1..=self.n
    }

    fn hope_size(&self) -> u128 {
        (self.n - self.i) as u128
    }

    /// Σ_{k<=i} Σ_{t>i} d(v_k)·dist(v_k, v_t)
    fn cross(&self) -> Result<BigCount> {
        BigCount::try_sum(self.low().flat_map(|k| {
            self.hope()
                .map(move |t| BigCount::product([self.deg(k), self.d(k, t)?]))
        }))
    }

    /// Σ_{i<t<q<=n} (d(v_t) + d(v_q))
    fn hope_degree_sum(&self) -> Result<BigCount> {
        BigCount::try_sum(self.hope().flat_map(|t| {
            (t + 1..=self.n).map(move |q| Ok(BigCount::from(self.deg(t) + self.deg(q))))
        }))
    }

    /// Σ_{t>i} d(v_t)
    fn hope_degrees(&self) -> Result<BigCount> {
        BigCount::try_sum(self.hope().map(|t| Ok(BigCount::from(self.deg(t)))))
    }

    /// Σ_{k<=i} d(v_k)
    fn low_degrees(&self) -> Result<BigCount> {
        BigCount::try_sum(self.low().map(|k| Ok(BigCount::from(self.deg(k)))))
    }

    /// Σ_{k<=i} d(v_k)·dist(v_k, v_n)
    fn low_to_last(&self) -> Result<BigCount> {
        BigCount::try_sum(
            self.low()
                .map(|k| BigCount::product([self.deg(k), self.d(k, self.n)?])),
        )
    }

    /// Σ_{k<=i} d(v_k)·min_{t>i} dist(v_k, v_t)
    fn low_to_hope(&self) -> Result<BigCount> {
        BigCount::try_sum(self.low().map(|k| {
            let mut nearest = u128::MAX;
            for t in self.hope() {
                nearest = nearest.min(self.d(k, t)?);
            }
            BigCount::product([self.deg(k), nearest])
        }))
    }

    fn check_structure(&self, jn: &JacoGraph) -> Result<()> {
        let g = jn.underlying();
        for t in self.hope() {
            for q in t + 1..=self.n {
                if !g.has_edge(t, q) {
                    return Err(Error::StructureAssumptionViolated(format!(
                        "Hope vertices v_{t} and v_{q} are not adjacent in J*_{}",
                        self.n
                    )));
                }
            }
        }
        let expected: Vec<usize> = self.hope().collect();
        if jn.extension_in_neighbors() != expected {
            return Err(Error::StructureAssumptionViolated(format!(
                "in-neighbours of v_{} are not v_{}..v_{}",
                self.n + 1,
                self.i + 1,
                self.n
            )));
        }
        Ok(())
    }

    fn terms(&self) -> Result<RecursionTerms> {
        let h = self.hope_size();
        let i = self.i as u128;
        let hope_degrees = self.hope_degrees()?;
        let terms = vec![
            Term::shared("base", self.base),
            Term::shared("cross", self.cross()?),
            Term::shared("hope_degree_sum", self.hope_degree_sum()?),
            Term {
                name: "hope_constant",
                stated: BigCount::from(h - 1),
                exact: BigCount::from(h * (h - 1) / 2),
            },
            Term {
                name: "new_low_distance",
                stated: self.low_to_last()?.checked_mul(h)?,
                exact: self.low_to_hope()?.checked_mul(h)?,
            },
            Term {
                name: "new_low_constant",
                stated: BigCount::product([i, h])?,
                exact: self.low_degrees()?.checked_mul(h)?,
            },
            Term::shared("new_hope_degree", hope_degrees.checked_mul(h)?),
            Term {
                name: "new_hope_constant",
                stated: BigCount::ZERO,
                exact: BigCount::product([h, h])?,
            },
        ];
        Ok(RecursionTerms {
            n: self.n,
            i: self.i,
            max_degree_index: self.max_degree_index,
            terms,
        })
    }
}

/// Both right-hand sides for `J_n(x)`, split into named terms.
///
/// The exact side's structural hypotheses (Hope set is a clique, `v_{n+1}`
/// attaches to exactly the Hope set) are checked first; a failure is
/// reported as [`Error::StructureAssumptionViolated`].
pub fn recursion_terms(jn: &JacoGraph) -> Result<RecursionTerms> {
    let inputs = Inputs::prepare(jn)?;
    inputs.check_structure(jn)?;
    inputs.terms()
}

/// Right-hand side of the published recursion, evaluated exactly as printed.
pub fn stated_rhs(jn: &JacoGraph) -> Result<BigCount> {
    Inputs::prepare(jn)?.terms()?.stated_total()
}

/// Exact `Gut(J*_{n+1}(x))` computed from `J*_n(x)` data.
pub fn exact_rhs(jn: &JacoGraph) -> Result<BigCount> {
    recursion_terms(jn)?.exact_total()
}

/// Comparison of stated, exact and direct values for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaTrace {
    pub n: usize,
    pub i: usize,
    #[serde(rename = "paper_rhs")]
    pub stated_rhs: BigCount,
    pub exact_rhs: BigCount,
    pub direct: BigCount,
    /// `stated_rhs - direct`.
    #[serde(rename = "delta_paper")]
    pub delta_stated: i128,
    pub prime_index_agrees: bool,
    pub terms: Vec<Term>,
}

impl DeltaTrace {
    pub fn exact_matches_direct(&self) -> bool {
        self.exact_rhs == self.direct
    }

    /// Per-term `stated - exact` deltas, in [`TERM_NAMES`] order.
    pub fn term_deltas(&self) -> Result<Vec<i128>> {
        self.terms.iter().map(Term::delta).collect()
    }

    /// The per-term deltas plus the residual `exact - direct` add up to
    /// the total stated delta.
    pub fn bookkeeping_closes(&self) -> Result<bool> {
        let residual = self.exact_rhs.delta(self.direct)?;
        let sum = self
            .term_deltas()?
            .into_iter()
            .try_fold(residual, |acc, d| acc.checked_add(d))
            .ok_or(Error::Overflow)?;
        Ok(sum == self.delta_stated)
    }
}

/// Trace for a single `n >= 2`, with the direct value computed on a freshly
/// built `J*_{n+1}(x)`.
pub fn delta_trace(n: usize) -> Result<DeltaTrace> {
    let jn = JacoGraph::build(LinearFunction::IDENTITY, n)?;
    let next = JacoGraph::build(LinearFunction::IDENTITY, n + 1)?;
    trace_pair(&jn, &next)
}

fn trace_pair(jn: &JacoGraph, next: &JacoGraph) -> Result<DeltaTrace> {
    let terms = recursion_terms(jn)?;
    let direct = next.underlying().gutman_index()?;
    let stated_rhs = terms.stated_total()?;
    Ok(DeltaTrace {
        n: terms.n,
        i: terms.i,
        stated_rhs,
        exact_rhs: terms.exact_total()?,
        direct,
        delta_stated: stated_rhs.delta(direct)?,
        prime_index_agrees: terms.prime_index_agrees(),
        terms: terms.terms,
    })
}

/// Traces for every `n` in `2..=n_max`, ordered by `n`.
pub fn recursion_delta_report(n_max: usize) -> Result<Vec<DeltaTrace>> {
    if n_max < 2 {
        return Err(Error::OrderTooSmall { n: n_max, min: 2 });
    }
    let mut rows = Vec::with_capacity(n_max - 1);
    let mut current = JacoGraph::build(LinearFunction::IDENTITY, 2)?;
    for n in 2..=n_max {
        let next = JacoGraph::build(LinearFunction::IDENTITY, n + 1)?;
        rows.push(trace_pair(&current, &next)?);
        current = next;
    }
    Ok(rows)
}
