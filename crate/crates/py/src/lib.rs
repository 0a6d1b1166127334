use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toughtree::generators as gen;
use toughtree::twdp::{PathWitness, Toughness};
use toughtree::{hamilton, io, oracles, shortness, squares, twdp, Vertex};

create_exception!(toughtree, ToughtreeError, PyException);

fn err(e: toughtree::Error) -> PyErr {
    ToughtreeError::new_err(e.to_string())
}

/// Simple undirected graph with optional vertex labels.
#[pyclass(name = "Graph", module = "toughtree", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: toughtree::Graph,
}

fn wrap(g: toughtree::Graph) -> PyGraph {
    PyGraph { inner: g }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        toughtree::Graph::from_edges(n, &edges).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        wrap(toughtree::Graph::complete(n))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::from_json(text).map(|(g, _)| wrap(g)).map_err(err)
    }

    fn to_json(&self) -> String {
        io::to_json(&self.inner, None)
    }

    fn to_dot(&self) -> String {
        io::to_dot(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.edges()
    }

    fn add_vertex(&mut self) -> Vertex {
        self.inner.add_vertex()
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> PyResult<bool> {
        self.inner.try_add_edge(u, v).map_err(err)
    }

    fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.inner.has_edge(u, v)
    }

    fn neighbors(&self, v: Vertex) -> PyResult<Vec<Vertex>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn label(&self, v: Vertex) -> Option<String> {
        self.inner.label(v).map(str::to_owned)
    }

    fn set_label(&mut self, v: Vertex, tag: String) -> PyResult<()> {
        self.check(v)?;
        self.inner.set_label(v, tag);
        Ok(())
    }

    fn vertices_labeled(&self, tag: &str) -> Vec<Vertex> {
        self.inner.vertices_labeled(tag)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

impl PyGraph {
    fn check(&self, v: Vertex) -> PyResult<()> {
        if v < self.inner.n() {
            Ok(())
        } else {
            Err(err(toughtree::Error::VertexOutOfRange(v)))
        }
    }
}

type TwigTuple = (Vertex, Vec<Vertex>, Vec<Vertex>);
type RowTuple = (usize, u128, u128, f64, String);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[pyfunction]
fn build_h0() -> PyGraph {
    wrap(gen::build_h0())
}

#[pyfunction]
fn h_family(level: usize) -> PyResult<PyGraph> {
    gen::h_family(level).map(wrap).map_err(err)
}

#[pyfunction]
fn hnk(level: usize, k: usize) -> PyResult<PyGraph> {
    gen::hnk(level, k).map(wrap).map_err(err)
}

#[pyfunction]
fn balanced_cubic_tree(r: usize) -> PyResult<PyGraph> {
    gen::balanced_cubic_tree(r).map(wrap).map_err(err)
}

#[pyfunction]
fn square(g: &PyGraph) -> PyGraph {
    wrap(gen::square(&g.inner))
}

#[pyfunction]
#[pyo3(signature = (k = 3))]
fn basic_3twig(k: usize) -> PyResult<PyGraph> {
    gen::basic_3twig(k).map(wrap).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (k, n, seed = 0))]
fn random_ktree(k: usize, n: usize, seed: u64) -> PyGraph {
    wrap(gen::random_ktree(k, n, &mut rng(seed)).0)
}

/// Random k-tree grown while its toughness stays above `num/den`.
#[pyfunction]
#[pyo3(signature = (k, n, num = 1, den = 1, seed = 0))]
fn random_tough_ktree(k: usize, n: usize, num: u64, den: u64, seed: u64) -> PyResult<PyGraph> {
    gen::random_tough_ktree(k, n, num, den, &mut rng(seed)).map(|(g, _)| wrap(g)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, max_degree = 3, seed = 0))]
fn random_tree(n: usize, max_degree: usize, seed: u64) -> PyGraph {
    wrap(gen::random_tree(n, max_degree, &mut rng(seed)))
}

#[pyfunction]
fn is_ktree(g: &PyGraph, k: usize) -> bool {
    toughtree::ktree::recognize_ktree(&g.inner, k).is_some()
}

/// `(length, vertices)`; with weights the length is the weight sum.
#[pyfunction]
#[pyo3(signature = (g, weights = None))]
fn longest_path(g: &PyGraph, weights: Option<Vec<i64>>) -> PyResult<(i64, Vec<Vertex>)> {
    twdp::longest_path(&g.inner, weights.as_deref()).map(|(l, w)| (l, w.vertices)).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, weights = None))]
fn longest_cycle(g: &PyGraph, weights: Option<Vec<i64>>) -> PyResult<(i64, Vec<Vertex>)> {
    twdp::longest_cycle(&g.inner, weights.as_deref()).map(|(l, w)| (l, w.vertices)).map_err(err)
}

fn to_python<'py>(py: Python<'py>, t: Toughness) -> PyResult<Bound<'py, PyAny>> {
    match t {
        Toughness::Infinite => Ok(py.import("math")?.getattr("inf")?),
        Toughness::Finite(r) => py.import("fractions")?.getattr("Fraction")?.call1((*r.numer(), *r.denom())),
    }
}

/// Exact toughness as a `Fraction` (`math.inf` for complete graphs) and a
/// separator attaining it.
#[pyfunction]
#[pyo3(signature = (g, brute_force = false))]
fn toughness<'py>(py: Python<'py>, g: &PyGraph, brute_force: bool) -> PyResult<(Bound<'py, PyAny>, Vec<Vertex>)> {
    let r = if brute_force { oracles::bf_toughness(&g.inner) } else { twdp::toughness_exact(&g.inner) }.map_err(err)?;
    Ok((to_python(py, r.value)?, r.witness))
}

#[pyfunction]
fn has_hamilton_path_between(g: &PyGraph, a: Vertex, b: Vertex) -> PyResult<bool> {
    twdp::has_hamilton_path_between(&g.inner, a, b).map_err(err)
}

/// Hamilton path from `a` to `b` in a k-tree of toughness above k/3, built
/// by peeling twigs.
#[pyfunction]
fn hamilton_path(g: &PyGraph, k: usize, a: Vertex, b: Vertex) -> PyResult<Vec<Vertex>> {
    hamilton::hamilton_path_between(&g.inner, k, a, b).map(|w: PathWitness| w.vertices).map_err(err)
}

#[pyfunction]
fn hamilton_cycle(g: &PyGraph, k: usize) -> PyResult<Vec<Vertex>> {
    hamilton::hamilton_cycle(&g.inner, k).map(|w| w.vertices).map_err(err)
}

/// Three internally disjoint paths from `a` to `b` covering every vertex.
#[pyfunction]
fn theta_spanner(g: &PyGraph, k: usize, a: Vertex, b: Vertex) -> PyResult<Vec<Vec<Vertex>>> {
    hamilton::theta_spanner(&g.inner, k, a, b).map(|s| s.paths.to_vec()).map_err(err)
}

/// `(twig, bud, rest)` triples.
#[pyfunction]
fn find_twigs(g: &PyGraph, k: usize) -> PyResult<Vec<TwigTuple>> {
    Ok(hamilton::find_twigs(&g.inner, k).map_err(err)?.into_iter().map(|t| (t.v, t.bud, t.rest)).collect())
}

fn pattern_kind(name: &str) -> PyResult<squares::PatternKind> {
    use squares::PatternKind::*;
    match name {
        "SK13" => Ok(SK13),
        "SK15" => Ok(SK15),
        "F" => Ok(FamilyF),
        "X" => Ok(FamilyX),
        _ => Err(ToughtreeError::new_err(format!("unknown pattern {name:?}; expected SK13, SK15, F or X"))),
    }
}

/// Witness of a forbidden subtree (`"SK13"`, `"SK15"`, `"F"`, `"X"`) as a
/// dict of vertex lists, or `None`.
#[pyfunction]
fn find_pattern<'py>(py: Python<'py>, t: &PyGraph, kind: &str) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(w) = squares::find_pattern(&t.inner, pattern_kind(kind)?).map_err(err)? else {
        return Ok(None);
    };
    let d = PyDict::new(py);
    d.set_item("kind", kind)?;
    d.set_item("centres", &w.centres)?;
    d.set_item("paths", &w.paths)?;
    d.set_item("legs", w.legs.iter().map(|l| l.to_vec()).collect::<Vec<_>>())?;
    d.set_item("pendants", w.pendants.iter().map(|p| p.to_vec()).collect::<Vec<_>>())?;
    d.set_item("vertices", w.vertices())?;
    Ok(Some(d))
}

#[pyfunction]
fn square_is_hamiltonian(t: &PyGraph) -> PyResult<bool> {
    squares::square_is_hamiltonian(&t.inner).map_err(err)
}

#[pyfunction]
fn square_has_hamilton_path(t: &PyGraph) -> PyResult<bool> {
    squares::square_has_hamilton_path(&t.inner).map_err(err)
}

/// `(name, passed, observed, expected)` for every defining check of H_0.
#[pyfunction]
#[pyo3(signature = (g = None))]
fn validate_h0(g: Option<&PyGraph>) -> Vec<(String, bool, String, String)> {
    let g = g.map_or_else(gen::build_h0, |g| g.inner.clone());
    gen::validate_h0(&g).checks.into_iter().map(|c| (c.name, c.passed, c.observed, c.expected)).collect()
}

/// `(level, n, cycle, ratio, source)` rows.
#[pyfunction]
#[pyo3(signature = (family, max_level, closed_form = false))]
fn shortness_table(family: &str, max_level: usize, closed_form: bool) -> PyResult<Vec<RowTuple>> {
    let family: shortness::Family = family.parse().map_err(err)?;
    let table = shortness::shortness_table(family, max_level, closed_form).map_err(err)?;
    Ok(table
        .rows
        .into_iter()
        .map(|r| {
            let src = match r.source {
                shortness::Source::Dp => "dp",
                shortness::Source::ClosedForm => "closed-form",
            };
            (r.level, r.n, r.cycle, r.ratio, src.to_owned())
        })
        .collect())
}

#[pymodule]
#[pyo3(name = "toughtree")]
pub fn toughtree_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ToughtreeError", m.py().get_type::<ToughtreeError>())?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(build_h0, m)?)?;
    m.add_function(wrap_pyfunction!(h_family, m)?)?;
    m.add_function(wrap_pyfunction!(hnk, m)?)?;
    m.add_function(wrap_pyfunction!(balanced_cubic_tree, m)?)?;
    m.add_function(wrap_pyfunction!(square, m)?)?;
    m.add_function(wrap_pyfunction!(basic_3twig, m)?)?;
    m.add_function(wrap_pyfunction!(random_ktree, m)?)?;
    m.add_function(wrap_pyfunction!(random_tough_ktree, m)?)?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(is_ktree, m)?)?;
    m.add_function(wrap_pyfunction!(longest_path, m)?)?;
    m.add_function(wrap_pyfunction!(longest_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(toughness, m)?)?;
    m.add_function(wrap_pyfunction!(has_hamilton_path_between, m)?)?;
    m.add_function(wrap_pyfunction!(hamilton_path, m)?)?;
    m.add_function(wrap_pyfunction!(hamilton_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(theta_spanner, m)?)?;
    m.add_function(wrap_pyfunction!(find_twigs, m)?)?;
    m.add_function(wrap_pyfunction!(find_pattern, m)?)?;
    m.add_function(wrap_pyfunction!(square_is_hamiltonian, m)?)?;
    m.add_function(wrap_pyfunction!(square_has_hamilton_path, m)?)?;
    m.add_function(wrap_pyfunction!(validate_h0, m)?)?;
    m.add_function(wrap_pyfunction!(shortness_table, m)?)?;
    Ok(())
}
