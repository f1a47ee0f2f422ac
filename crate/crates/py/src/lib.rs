//! Python bindings: `import jaco`.

use jaco_core::graph::SimpleGraph;
use jaco_core::joint::{self, JointSpec, JointTrace};
use jaco_core::recursion::{self, DeltaTrace};
use jaco_core::sequences::{self, SequenceKind};
use jaco_core::{Error, JacoGraph, LinearFunction, Term};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(jaco, JacoError, PyValueError);

fn py_err(e: Error) -> PyErr {
    JacoError::new_err(e.to_string())
}

/// Simple undirected graph on vertices 1..=order.
#[pyclass(name = "Graph", module = "jaco", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(SimpleGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        SimpleGraph::from_edges(order, edges)
            .map(PyGraph)
            .map_err(py_err)
    }

    #[staticmethod]
    fn path(order: usize) -> Self {
        PyGraph(SimpleGraph::path(order))
    }

    #[staticmethod]
    fn cycle(order: usize) -> PyResult<Self> {
        SimpleGraph::cycle(order).map(PyGraph).map_err(py_err)
    }

    #[staticmethod]
    fn complete(order: usize) -> Self {
        PyGraph(SimpleGraph::complete(order))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.degree(v).map_err(py_err)
    }

    fn degrees(&self) -> Vec<usize> {
        self.0.degree_sequence()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.0.neighbors(v).map(<[usize]>::to_vec).map_err(py_err)
    }

    /// Distance matrix indexed from 0; `None` marks unreachable pairs.
    fn distances(&self) -> Vec<Vec<Option<u32>>> {
        let d = self.0.all_pairs_distances();
        let n = self.0.order();
        (1..=n)
            .map(|a| (1..=n).map(|b| d.get(a, b)).collect())
            .collect()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_complete(&self) -> bool {
        self.0.is_complete()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        self.0.components()
    }

    fn gutman_index(&self) -> PyResult<u128> {
        self.0.gutman_index().map(|v| v.get()).map_err(py_err)
    }

    fn wiener_index(&self) -> PyResult<u128> {
        self.0.wiener_index().map(|v| v.get()).map_err(py_err)
    }

    /// Returns the induced subgraph and the original label of each new vertex.
    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<(PyGraph, Vec<usize>)> {
        let (g, labels) = self.0.induced_subgraph(&vertices).map_err(py_err)?;
        Ok((PyGraph(g), labels))
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.0.order(), self.0.size())
    }
}

/// Directed Jaco graph J_n(mx + c).
#[pyclass(name = "JacoGraph", module = "jaco")]
struct PyJaco(JacoGraph);

#[pymethods]
impl PyJaco {
    #[new]
    #[pyo3(signature = (n, m = 1, c = 0))]
    fn new(n: usize, m: u64, c: u64) -> PyResult<Self> {
        JacoGraph::build(LinearFunction::new(m, c), n)
            .map(PyJaco)
            .map_err(py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn m(&self) -> u64 {
        self.0.function().m
    }

    #[getter]
    fn c(&self) -> u64 {
        self.0.function().c
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.0.arcs().to_vec()
    }

    fn in_degree(&self, v: usize) -> usize {
        self.0.in_degree(v)
    }

    fn out_degree(&self, v: usize) -> usize {
        self.0.out_degree(v)
    }

    fn underlying(&self) -> PyGraph {
        PyGraph(self.0.underlying().clone())
    }

    fn gutman_index(&self) -> PyResult<u128> {
        self.0
            .underlying()
            .gutman_index()
            .map(|v| v.get())
            .map_err(py_err)
    }

    fn verify_definition_fixed_point(&self) -> bool {
        self.0.verify_definition_fixed_point()
    }

    /// Dict of property name to `(holds, counterexample)`.
    fn verify_fundamental_properties<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = self.0.verify_fundamental_properties();
        let d = PyDict::new(py);
        for (name, check) in [
            ("vertex_labels", &r.vertex_labels),
            ("tail_before_head", &r.tail_before_head),
            ("contiguous_in_neighbors", &r.contiguous_in_neighbors),
            ("realized_degree", &r.realized_degree),
        ] {
            d.set_item(name, (check.holds, check.counterexample.clone()))?;
        }
        Ok(d)
    }

    fn jaconian_info<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let info = self.0.jaconian_info();
        let d = PyDict::new(py);
        d.set_item("max_degree", info.max_degree)?;
        d.set_item("jaconian_set", info.jaconian_set)?;
        d.set_item("prime_index", info.prime_index)?;
        d.set_item(
            "hope_range",
            (*info.hope_range.start(), *info.hope_range.end()),
        )?;
        Ok(d)
    }

    fn hope_graph(&self) -> PyGraph {
        PyGraph(self.0.hope_graph())
    }

    fn component_structure(&self) -> Vec<usize> {
        self.0.component_structure()
    }

    fn __repr__(&self) -> String {
        format!(
            "JacoGraph(n={}, m={}, c={})",
            self.0.order(),
            self.m(),
            self.c()
        )
    }
}

fn terms_list<'py>(py: Python<'py>, terms: &[Term]) -> PyResult<Vec<Bound<'py, PyDict>>> {
    terms
        .iter()
        .map(|t| {
            let d = PyDict::new(py);
            d.set_item("name", t.name)?;
            d.set_item("stated", t.stated.get())?;
            d.set_item("exact", t.exact.get())?;
            Ok(d)
        })
        .collect()
}

fn delta_dict<'py>(py: Python<'py>, t: &DeltaTrace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", t.n)?;
    d.set_item("i", t.i)?;
    d.set_item("paper_rhs", t.stated_rhs.get())?;
    d.set_item("exact_rhs", t.exact_rhs.get())?;
    d.set_item("direct", t.direct.get())?;
    d.set_item("delta_paper", t.delta_stated)?;
    d.set_item("prime_index_agrees", t.prime_index_agrees)?;
    d.set_item("terms", terms_list(py, &t.terms)?)?;
    Ok(d)
}

fn joint_dict<'py>(py: Python<'py>, t: &JointTrace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", t.n)?;
    d.set_item("m", t.m)?;
    d.set_item("vi", t.vi)?;
    d.set_item("uj", t.uj)?;
    d.set_item("direct", t.direct.get())?;
    d.set_item("closed_form", t.closed_form.get())?;
    d.set_item("paper_rhs", t.stated_rhs.map(|v| v.get()))?;
    d.set_item("delta_paper", t.delta_stated)?;
    d.set_item("predicted_block", t.predicted_block.get())?;
    d.set_item("terms", terms_list(py, &t.terms)?)?;
    Ok(d)
}

/// Right-hand side of the recursion as printed, evaluated on J_n(x).
#[pyfunction]
fn recursion_stated_rhs(jn: &PyJaco) -> PyResult<u128> {
    recursion::stated_rhs(&jn.0)
        .map(|v| v.get())
        .map_err(py_err)
}

/// Exact value of Gut(J*_{n+1}(x)) computed from J_n(x).
#[pyfunction]
fn recursion_exact_rhs(jn: &PyJaco) -> PyResult<u128> {
    recursion::exact_rhs(&jn.0).map(|v| v.get()).map_err(py_err)
}

#[pyfunction]
fn recursion_delta_trace(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyDict>> {
    let t = recursion::delta_trace(n).map_err(py_err)?;
    delta_dict(py, &t)
}

#[pyfunction]
fn recursion_delta_report(py: Python<'_>, n_max: usize) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rows = recursion::recursion_delta_report(n_max).map_err(py_err)?;
    rows.iter().map(|t| delta_dict(py, t)).collect()
}

/// Disjoint union of `g` and `h` plus the bridge edge `v`-`u`; `h` is relabelled
/// to follow `g`.
#[pyfunction]
fn edge_joint(g: &PyGraph, v: usize, h: &PyGraph, u: usize) -> PyResult<PyGraph> {
    let spec = JointSpec::new(g.0.clone(), v, h.0.clone(), u).map_err(py_err)?;
    Ok(PyGraph(joint::edge_joint_graph(&spec)))
}

#[pyfunction]
fn closed_form_joint_gutman(g: &PyGraph, v: usize, h: &PyGraph, u: usize) -> PyResult<u128> {
    let spec = JointSpec::new(g.0.clone(), v, h.0.clone(), u).map_err(py_err)?;
    joint::closed_form_joint_gutman(&spec)
        .map(|v| v.get())
        .map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (n, m, vi = 1, uj = 1))]
fn joint_trace(
    py: Python<'_>,
    n: usize,
    m: usize,
    vi: usize,
    uj: usize,
) -> PyResult<Bound<'_, PyDict>> {
    let t = joint::joint_trace(n, m, vi, uj).map_err(py_err)?;
    joint_dict(py, &t)
}

#[pyfunction]
fn joint_delta_report(
    py: Python<'_>,
    n_max: usize,
    m_max: usize,
) -> PyResult<Vec<Bound<'_, PyDict>>> {
    let rows = joint::joint_delta_report(n_max, m_max).map_err(py_err)?;
    rows.iter().map(|t| joint_dict(py, t)).collect()
}

/// Rows `(n, value)` for n = 1..=n_max of J_n(mx + c).
#[pyfunction]
#[pyo3(signature = (which, n_max, m = 1, c = 0))]
fn sequence(which: &str, n_max: usize, m: u64, c: u64) -> PyResult<Vec<(usize, u128)>> {
    let kind: SequenceKind = which.parse().map_err(py_err)?;
    let table = sequences::tabulate(kind, LinearFunction::new(m, c), n_max).map_err(py_err)?;
    Ok(table.rows.into_iter().map(|(n, v)| (n, v.get())).collect())
}

#[pymodule]
fn jaco(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("JacoError", m.py().get_type::<JacoError>())?;
    m.add_class::<PyGraph>()?;
    m.add_class::<PyJaco>()?;
    m.add_function(wrap_pyfunction!(recursion_stated_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(recursion_exact_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(recursion_delta_trace, m)?)?;
    m.add_function(wrap_pyfunction!(recursion_delta_report, m)?)?;
    m.add_function(wrap_pyfunction!(edge_joint, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_joint_gutman, m)?)?;
    m.add_function(wrap_pyfunction!(joint_trace, m)?)?;
    m.add_function(wrap_pyfunction!(joint_delta_report, m)?)?;
    m.add_function(wrap_pyfunction!(sequence, m)?)?;
    Ok(())
}
