//! Edge-joints `G ⤳_{vu} H`: the disjoint union of `G` and `H` plus the
//! single bridge edge `vu`.
//!
//! Vertices of `H` are shifted by `ν(G)` in the composed graph, so `u`
//! becomes `u + ν(G)`.
//!
//! Every shortest path between a vertex `x` of `G` and a vertex `y` of `H`
//! crosses the bridge, hence `dist(x, y) = d_G(x, v) + 1 + d_H(u, y)`. The
//! closed form below builds on that and holds for any choice of anchors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::count::BigCount;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, SimpleGraph};
use crate::jaco::{JacoGraph, LinearFunction};
use crate::term::Term;

/// Two graphs and the anchor vertices of the bridge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointSpec {
    pub g: SimpleGraph,
    pub h: SimpleGraph,
    pub v: usize,
    pub u: usize,
}

impl JointSpec {
    pub fn new(g: SimpleGraph, v: usize, h: SimpleGraph, u: usize) -> Result<Self> {
        g.degree(v)?;
        h.degree(u)?;
        Ok(JointSpec { g, h, v, u })
    }

    /// Trivial joints bridge the first vertices of both graphs.
    pub fn is_trivial(&self) -> bool {
        self.v == 1 && self.u == 1
    }

    /// The same joint seen from the other side.
    pub fn swapped(&self) -> JointSpec {
        JointSpec {
            g: self.h.clone(),
            h: self.g.clone(),
            v: self.u,
            u: self.v,
        }
    }
}

/// `G ∪ H + vu` with `H` relabelled `y ↦ y + ν(G)`.
pub fn edge_joint_graph(spec: &JointSpec) -> SimpleGraph {
    let shift = spec.g.order();
    let edges = spec
        .g
        .edges()
        .iter()
        .copied()
        .chain(spec.h.edges().iter().map(|&(a, b)| (a + shift, b + shift)))
        .chain([(spec.v, spec.u + shift)]);
    SimpleGraph::from_edges(shift + spec.h.order(), edges).expect("anchors validated by JointSpec")
}

/// Degree and distance data of one side, seen from its anchor.
struct Side {
    deg: Vec<u128>,
    /// `to_anchor[x]` is the distance from `x` to the anchor.
    to_anchor: Vec<u128>,
    anchor: usize,
    gutman: BigCount,
}

impl Side {
    fn new(g: &SimpleGraph, anchor: usize, label: &'static str) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::DisconnectedInput(label));
        }
        let dist: DistanceMatrix = g.all_pairs_distances();
        let gutman = g.gutman_index_with(&dist)?;
        let mut deg = vec![0];
        deg.extend(g.degree_sequence().into_iter().map(|d| d as u128));
        let mut to_anchor = vec![0];
        for x in 1..=g.order() {
            to_anchor.push(dist.finite(x, anchor)? as u128);
        }
        Ok(Side {
            deg,
            to_anchor,
            anchor,
            gutman,
        })
    }

    fn others(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.deg.len()).filter(move |&x| x != self.anchor)
    }

    fn anchor_degree(&self) -> u128 {
        self.deg[self.anchor]
    }

    /// Σ_{x≠anchor} d(x)·dist(x, anchor)
    fn weighted_distance(&self) -> Result<BigCount> {
        BigCount::try_sum(
            self.others()
                .map(|x| BigCount::product([self.deg[x], self.to_anchor[x]])),
        )
    }

    /// Σ_{x≠anchor} d(x)·(dist(x, anchor) + 1)
    fn weighted_distance_plus_one(&self) -> Result<BigCount> {
        BigCount::try_sum(
            self.others()
                .map(|x| BigCount::product([self.deg[x], self.to_anchor[x] + 1])),
        )
    }
}

/// Σ_{x≠v} Σ_{y≠u} d_G(x)·d_H(y)·(d_G(x, v) + d_H(u, y) + 1)
fn bulk(g: &Side, h: &Side) -> Result<BigCount> {
    BigCount::try_sum(g.others().flat_map(|x| {
        h.others().map(move |y| {
            BigCount::product([g.deg[x], h.deg[y], g.to_anchor[x] + h.to_anchor[y] + 1])
        })
    }))
}

/// Names of the terms in a joint breakdown, in order.
pub const TERM_NAMES: [&str; 8] = [
    "base_g", "base_h", "anchor_g", "anchor_h", "bridge", "v_to_h", "u_to_g", "bulk",
];

/// Exact term breakdown of `Gut(G ⤳_{vu} H)`. The `stated` side of each
/// term is what the published trivial-joint formula contributes for it;
/// it is only meaningful for trivial joints of `J*_n(x)`, `J*_m(x)`.
fn joint_terms(spec: &JointSpec) -> Result<Vec<Term>> {
    let g = Side::new(&spec.g, spec.v, "G")?;
    let h = Side::new(&spec.h, spec.u, "H")?;
    let dv1 = g.anchor_degree() + 1;
    let du1 = h.anchor_degree() + 1;
    Ok(vec![
        Term::shared("base_g", g.gutman),
        Term::shared("base_h", h.gutman),
        Term::shared("anchor_g", g.weighted_distance()?),
        Term::shared("anchor_h", h.weighted_distance()?),
        Term {
            name: "bridge",
            stated: BigCount::new(4),
            exact: BigCount::product([dv1, du1])?,
        },
        Term::shared("v_to_h", h.weighted_distance_plus_one()?.checked_mul(dv1)?),
        Term {
            name: "u_to_g",
            stated: BigCount::ZERO,
            exact: g.weighted_distance_plus_one()?.checked_mul(du1)?,
        },
        Term::shared("bulk", bulk(&g, &h)?),
    ])
}

/// `Gut(G ⤳_{vu} H)` from the indices, degrees and anchor distances of the
/// two parts. Valid for arbitrary anchors.
pub fn closed_form_joint_gutman(spec: &JointSpec) -> Result<BigCount> {
    BigCount::try_sum(joint_terms(spec)?.into_iter().map(|t| Ok(t.exact)))
}

fn check_stated_preconditions(jn: &JacoGraph, jm: &JacoGraph) -> Result<()> {
    jn.function().require_identity()?;
    jm.function().require_identity()?;
    let (n, m) = (jn.order(), jm.order());
    if !(n >= m && m >= 2) {
        return Err(Error::OrderConstraint { n, m });
    }
    Ok(())
}

fn trivial_spec(jn: &JacoGraph, jm: &JacoGraph) -> JointSpec {
    JointSpec {
        g: jn.underlying().clone(),
        h: jm.underlying().clone(),
        v: 1,
        u: 1,
    }
}

/// Published right-hand side for the trivial joint `J*_n(x) ⤳_{v_1u_1} J*_m(x)`,
/// evaluated as printed. Requires `n >= m >= 2`.
pub fn stated_rhs(jn: &JacoGraph, jm: &JacoGraph) -> Result<BigCount> {
    check_stated_preconditions(jn, jm)?;
    let terms = joint_terms(&trivial_spec(jn, jm))?;
    BigCount::try_sum(terms.into_iter().map(|t| Ok(t.stated)))
}

/// Audit record for one joint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointTrace {
    pub n: usize,
    pub m: usize,
    pub vi: usize,
    pub uj: usize,
    pub direct: BigCount,
    pub closed_form: BigCount,
    /// Present only for trivial joints with `n >= m >= 2`.
    #[serde(rename = "paper_rhs", skip_serializing_if = "Option::is_none")]
    pub stated_rhs: Option<BigCount>,
    #[serde(rename = "delta_paper", skip_serializing_if = "Option::is_none")]
    pub delta_stated: Option<i128>,
    /// `(d_H(u)+1)·Σ_{x≠v} d_G(x)(d_G(v,x)+1)`: the pair block between `u`
    /// and `G - v` that the published formula leaves out.
    pub predicted_block: BigCount,
    pub terms: Vec<Term>,
}

impl JointTrace {
    pub fn closed_matches_direct(&self) -> bool {
        self.closed_form == self.direct
    }

    /// Whether `stated + predicted_block == direct`; `None` when the stated
    /// formula does not apply.
    pub fn stated_plus_block_matches(&self) -> Option<bool> {
        let stated = self.stated_rhs?;
        Some(
            stated
                .checked_add(self.predicted_block)
                .is_ok_and(|s| s == self.direct),
        )
    }
}

/// Audit of `J*_n(f) ⤳_{v_vi u_uj} J*_m(f)` for `f(x) = x`.
pub fn joint_trace(n: usize, m: usize, vi: usize, uj: usize) -> Result<JointTrace> {
    let jn = JacoGraph::build(LinearFunction::IDENTITY, n)?;
    let jm = JacoGraph::build(LinearFunction::IDENTITY, m)?;
    let spec = JointSpec::new(jn.underlying().clone(), vi, jm.underlying().clone(), uj)?;
    let terms = joint_terms(&spec)?;
    let closed_form = BigCount::try_sum(terms.iter().map(|t| Ok(t.exact)))?;
    let direct = edge_joint_graph(&spec).gutman_index()?;
    let stated_applies = spec.is_trivial() && check_stated_preconditions(&jn, &jm).is_ok();
    let stated_rhs = if stated_applies {
        Some(BigCount::try_sum(terms.iter().map(|t| Ok(t.stated)))?)
    } else {
        None
    };
    let delta_stated = stated_rhs.map(|s| s.delta(direct)).transpose()?;
    let predicted_block = terms
        .iter()
        .find(|t| t.name == "u_to_g")
        .map(|t| t.exact)
        .unwrap_or_default();
    Ok(JointTrace {
        n,
        m,
        vi,
        uj,
        direct,
        closed_form,
        stated_rhs,
        delta_stated,
        predicted_block,
        terms,
    })
}

/// Trivial-joint audit over `2 <= m <= min(n, m_max)`, `2 <= n <= n_max`,
/// ordered by `(n, m)`.
pub fn joint_delta_report(n_max: usize, m_max: usize) -> Result<Vec<JointTrace>> {
    if n_max < 2 || m_max < 2 {
        return Err(Error::OrderTooSmall {
            n: n_max.min(m_max),
            min: 2,
        });
    }
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for m in 2..=n.min(m_max) {
            rows.push(joint_trace(n, m, 1, 1)?);
        }
    }
    Ok(rows)
}

/// For each grid point of [`joint_delta_report`], `per_pair` joints with
/// anchors drawn uniformly from the non-trivial choices. Deterministic in
/// `seed`.
pub fn nontrivial_anchor_report(
    n_max: usize,
    m_max: usize,
    per_pair: usize,
    seed: u64,
) -> Result<Vec<JointTrace>> {
    if n_max < 2 || m_max < 2 {
        return Err(Error::OrderTooSmall {
            n: n_max.min(m_max),
            min: 2,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for n in 2..=n_max {
        for m in 2..=n.min(m_max) {
            for _ in 0..per_pair {
                let (vi, uj) = loop {
                    let pick = (rng.gen_range(1..=n), rng.gen_range(1..=m));
                    if pick != (1, 1) {
                        break pick;
                    }
                };
                rows.push(joint_trace(n, m, vi, uj)?);
            }
        }
    }
    Ok(rows)
}
