//! Drives the module through an embedded interpreter.

use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyDict;

fn run(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let module = pyo3::wrap_pymodule!(pyhomjordan::pyhomjordan)(py);
        let globals = PyDict::new(py);
        globals.set_item("hj", module).unwrap();
        globals
            .set_item(
                "FIXTURES",
                concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures"),
            )
            .unwrap();
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python code failed: {e}");
        }
    });
}

#[test]
fn suite_reports_are_dicts() {
    run(r#"
a = hj.Algebra.load(FIXTURES + "/hom_jordan3_broken.json")
r = a.check("hom-jordan")
assert not r["passed"]
assert r["identities"][0]["witness"]["tuple"] == [1, 0]
assert hj.Algebra.load(FIXTURES + "/hom_jordan3_1_1_1_1.json").check("HOM_JORDAN")["passed"]
"#);
}

#[test]
fn parse_errors_raise() {
    run(r#"
try:
    hj.Algebra.parse('{"field": "Q"}')
except hj.HomJordanError:
    pass
else:
    raise AssertionError("expected HomJordanError")
"#);
}

#[test]
fn derive_and_round_trip() {
    run(r#"
a = hj.Algebra.load(FIXTURES + "/dual_numbers_jdendriform.json")
t = a.derive("transpose")
assert t.derive("transpose") == a
assert hj.Algebra.parse(t.to_json()) == t
v = a.derive("vertical")
assert v.products == ["dot"] and v.check("HOM_PRE_JORDAN")["passed"]
p, q = a.structure_constants("prec"), t.structure_constants("prec")
assert all(q[i][j] == p[j][i] for i in range(a.dim) for j in range(a.dim))
assert t.structure_constants("succ") == a.structure_constants("succ")
"#);
}

#[test]
fn operator_search_over_f5() {
    run(r#"
a = hj.Algebra.load(FIXTURES + "/dual_numbers_f5.json")
found = a.search_rota_baxter(policy="lax")
assert [["0", "0"], ["1", "0"]] in found
"#);
}
