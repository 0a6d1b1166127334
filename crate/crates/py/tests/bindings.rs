use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) -> PyResult<()> {
    Python::attach(|py| {
        let m = PyModule::new(py, "toughtree")?;
        toughtree_py::toughtree_py(&m)?;
        let globals = PyDict::new(py);
        globals.set_item("tt", m)?;
        py.run(&std::ffi::CString::new(code).unwrap(), Some(&globals), None)
    })
}

#[test]
fn module_exposes_the_main_operations() {
    Python::initialize();
    run(r#"
from fractions import Fraction
h0 = tt.build_h0()
assert (h0.n, len(h0)) == (71, 71)
assert tt.toughness(h0)[0] == Fraction(1)
assert tt.longest_cycle(h0)[0] == 63
assert tt.longest_path(h0)[0] == 65
g = tt.random_tough_ktree(3, 12, seed=1)
p = tt.hamilton_path(g, 3, 1, 7)
assert len(p) == 12 and (p[0], p[-1]) == (1, 7)
assert [len(x) for x in tt.theta_spanner(tt.basic_3twig(), 3, 4, 5)] != []
assert tt.find_pattern(tt.balanced_cubic_tree(2), "X") is None
"#)
    .unwrap();
}

#[test]
fn errors_become_python_exceptions() {
    Python::initialize();
    run(r#"
for bad in (lambda: tt.Graph(3, [(0, 5)]), lambda: tt.find_pattern(tt.Graph(3), "Q"), lambda: tt.hamilton_cycle(tt.build_h0(), 3)):
    try:
        bad()
    except tt.ToughtreeError:
        pass
    else:
        raise AssertionError("no error")
"#)
    .unwrap();
}
