//! Python bindings: load algebra files, run identity suites, verify and
//! search for Rota-Baxter operators, apply constructions.

use std::path::PathBuf;

use homjordan::cli::{derive, ConstructionArg, DeriveArgs};
use homjordan::constructions::Options;
use homjordan::io::{parse_algebra_file, read_algebra_file, serialize_algebra_file, AlgebraFile};
use homjordan::operators::{self, Pattern, DEFAULT_BUDGET};
use homjordan::{
    check_bimodule, check_representation, check_suite, CheckReport, Label, Matrix, Module, Policy,
    Suite,
};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use serde::Serialize;

create_exception!(pyhomjordan, HomJordanError, PyException);

fn err(e: homjordan::Error) -> PyErr {
    HomJordanError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = homjordan::Error>>(text: &str) -> PyResult<T> {
    text.parse().map_err(err)
}

/// Reports cross the boundary as plain dicts through the JSON module.
fn to_python<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| HomJordanError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// A suite report with its overall verdict at the top level.
#[derive(Serialize)]
struct Checked<'a> {
    passed: bool,
    #[serde(flatten)]
    report: &'a CheckReport,
}

fn checked(py: Python<'_>, report: homjordan::Result<CheckReport>) -> PyResult<Py<PyAny>> {
    let report = report.map_err(err)?;
    to_python(
        py,
        &Checked {
            passed: report.passed(),
            report: &report,
        },
    )
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_canonical()).collect())
        .collect()
}

/// An algebra file: a Hom-algebra with its named maps and modules.
#[pyclass(name = "Algebra", module = "pyhomjordan")]
pub struct PyAlgebra {
    file: AlgebraFile,
}

#[pymethods]
impl PyAlgebra {
    /// Parses the JSON text of an algebra file.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            file: parse_algebra_file(text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            file: read_algebra_file(&path).map_err(err)?,
        })
    }

    /// Canonical JSON text; parsing it gives back the same algebra.
    fn to_json(&self) -> String {
        serialize_algebra_file(&self.file)
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        homjordan::io::write_algebra_file(&path, &self.file).map_err(err)
    }

    #[getter]
    fn field(&self) -> String {
        self.file.algebra.field().to_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.file.algebra.dim()
    }

    /// Declared product labels, such as `["circ"]` or `["prec", "succ"]`.
    #[getter]
    fn products(&self) -> Vec<&'static str> {
        self.file
            .algebra
            .products()
            .keys()
            .map(|l| l.name())
            .collect()
    }

    /// Names of the maps stored with the algebra.
    #[getter]
    fn maps(&self) -> Vec<String> {
        self.file.maps.keys().cloned().collect()
    }

    /// The twist matrix as rows of canonical scalar strings.
    #[getter]
    fn twist(&self) -> Vec<Vec<String>> {
        matrix_rows(self.file.algebra.twist())
    }

    fn map(&self, name: &str) -> PyResult<Vec<Vec<String>>> {
        Ok(matrix_rows(self.file.map(name).map_err(err)?))
    }

    /// `c[i][j][k]`, the coefficient of `e_k` in `e_i * e_j`.
    fn structure_constants(&self, label: &str) -> PyResult<Vec<Vec<Vec<String>>>> {
        let tensor = self.file.algebra.product(parse(label)?).map_err(err)?;
        let n = self.dim();
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| tensor.get(i, j, k).to_canonical()).collect())
                    .collect()
            })
            .collect())
    }

    /// Runs one identity suite (`"HOM_JORDAN"`, `"HOM_PRE_JORDAN"`, ...) and
    /// returns the report as a dict.
    fn check(&self, py: Python<'_>, suite: &str) -> PyResult<Py<PyAny>> {
        let suite: Suite = parse(suite)?;
        checked(py, check_suite(&self.file.algebra, suite))
    }

    /// Checks the representation or bimodule stored at `module`.
    fn check_module(&self, py: Python<'_>, module: usize) -> PyResult<Py<PyAny>> {
        let alg = &self.file.algebra;
        let report = match self.file.module(module).map_err(err)? {
            Module::Representation(rep) => check_representation(alg, rep),
            Module::Bimodule(bim) => check_bimodule(alg, bim),
        };
        checked(py, report)
    }

    /// Verifies the map `op` as a Rota-Baxter operator of weight zero.
    #[pyo3(signature = (op, label = None, policy = "strict"))]
    fn verify_rota_baxter(
        &self,
        py: Python<'_>,
        op: &str,
        label: Option<&str>,
        policy: &str,
    ) -> PyResult<Py<PyAny>> {
        let alg = &self.file.algebra;
        let label = self.label(label)?;
        let report = operators::verify_rota_baxter(
            alg,
            label,
            self.file.map(op).map_err(err)?,
            parse::<Policy>(policy)?,
        )
        .map_err(err)?;
        to_python(py, &report)
    }

    /// Enumerates every Rota-Baxter operator over a prime field. `pattern`
    /// fixes entries row by row, for example `"000/000/**0"`.
    #[pyo3(signature = (label = None, pattern = None, policy = "strict", budget = DEFAULT_BUDGET))]
    fn search_rota_baxter(
        &self,
        label: Option<&str>,
        pattern: Option<&str>,
        policy: &str,
        budget: u128,
    ) -> PyResult<Vec<Vec<Vec<String>>>> {
        let alg = &self.file.algebra;
        let label = self.label(label)?;
        let pattern = pattern
            .map(|p| Pattern::parse(alg.field(), p))
            .transpose()
            .map_err(err)?;
        let found =
            operators::search_rota_baxter_fp(alg, label, pattern.as_ref(), parse(policy)?, budget)
                .map_err(err)?;
        Ok(found.iter().map(matrix_rows).collect())
    }

    /// Applies a construction by its command-line name (`"anticommutator"`,
    /// `"rb-prejordan"`, `"transpose"`, ...). Maps and modules are looked up
    /// by name as in the `derive` command.
    #[pyo3(signature = (construction, op = None, op2 = None, module = 0, suite = None, policy = "strict", unchecked = false))]
    #[allow(clippy::too_many_arguments)]
    fn derive(
        &self,
        construction: &str,
        op: Option<String>,
        op2: Option<String>,
        module: usize,
        suite: Option<&str>,
        policy: &str,
        unchecked: bool,
    ) -> PyResult<PyAlgebra> {
        let construction: ConstructionArg = parse(construction)?;
        let args = DeriveArgs {
            op,
            op2,
            module,
            suite: suite.map(parse).transpose()?,
        };
        let opts = Options {
            policy: parse(policy)?,
            checked: !unchecked,
        };
        let derived = derive(&self.file, construction, &args, opts).map_err(err)?;
        Ok(PyAlgebra { file: derived.file })
    }

    fn __eq__(&self, other: &PyAlgebra) -> bool {
        self.file == other.file
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(field={}, dim={}, products={:?})",
            self.field(),
            self.dim(),
            self.products()
        )
    }
}

impl PyAlgebra {
    fn label(&self, label: Option<&str>) -> PyResult<Label> {
        match label {
            Some(l) => parse(l),
            None => self
                .file
                .algebra
                .sole_product()
                .map(|(l, _)| l)
                .map_err(err),
        }
    }
}

#[pymodule]
pub fn pyhomjordan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add("HomJordanError", m.py().get_type::<HomJordanError>())?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
