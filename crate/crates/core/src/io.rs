//! JSON algebra files and machine-readable reports.
//!
//! Scalars are strings in canonical form (`"2/3"`, `"-5"`, residues in
//! `[0, p)` for prime fields). Output is canonical: fixed key order, one
//! layout, so identical models serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::algebra::{Bimodule, HomAlgebra, Label, Module, Representation, Tensor};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Field, Scalar};

/// An algebra together with the named maps and modules stored beside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub algebra: HomAlgebra,
    pub maps: BTreeMap<String, Matrix>,
    pub modules: Vec<Module>,
}

impl AlgebraFile {
    pub fn new(algebra: HomAlgebra) -> AlgebraFile {
        AlgebraFile {
            algebra,
            maps: BTreeMap::new(),
            modules: Vec::new(),
        }
    }

    pub fn with_map(mut self, name: &str, map: Matrix) -> AlgebraFile {
        self.maps.insert(name.into(), map);
        self
    }

    pub fn with_module(mut self, module: Module) -> AlgebraFile {
        self.modules.push(module);
        self
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        self.maps
            .get(name)
            .ok_or_else(|| Error::Invalid(format!("no map named {name:?}")))
    }

    pub fn module(&self, index: usize) -> Result<&Module> {
        self.modules
            .get(index)
            .ok_or_else(|| Error::Invalid(format!("no module at index {index}")))
    }
}

fn shape(path: &str, message: impl Into<String>) -> Error {
    Error::Shape {
        path: path.into(),
        message: message.into(),
    }
}

fn object<'a>(v: &'a Value, path: &str) -> Result<&'a serde_json::Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| shape(path, "expected an object"))
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a [Value]> {
    let items = v
        .as_array()
        .ok_or_else(|| shape(path, "expected an array"))?;
    if let Some(n) = len {
        if items.len() != n {
            return Err(shape(
                path,
                format!("expected length {n}, got {}", items.len()),
            ));
        }
    }
    Ok(items)
}

fn scalar(field: Field, v: &Value, path: &str) -> Result<Scalar> {
    let text = v
        .as_str()
        .ok_or_else(|| shape(path, "expected a scalar string"))?;
    let s = field.parse(text).map_err(|e| shape(path, e.to_string()))?;
    if s.to_canonical() != text {
        return Err(shape(
            path,
            format!(
                "scalar {text:?} is not reduced (write {:?})",
                s.to_canonical()
            ),
        ));
    }
    Ok(s)
}

fn matrix(field: Field, v: &Value, path: &str, rows: usize, cols: usize) -> Result<Matrix> {
    let items = array(v, path, Some(rows))?;
    let mut out = Vec::with_capacity(rows);
    for (i, row) in items.iter().enumerate() {
        let rp = format!("{path}[{i}]");
        let cells = array(row, &rp, Some(cols))?;
        out.push(
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| scalar(field, c, &format!("{rp}[{j}]")))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    if rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Matrix::from_rows(field, out)
}

/// A matrix whose shape is read from the data: rows of equal length.
fn free_matrix(field: Field, v: &Value, path: &str) -> Result<Matrix> {
    let items = array(v, path, None)?;
    let first = items
        .first()
        .ok_or_else(|| shape(path, "matrix has no rows"))?;
    let cols = array(first, &format!("{path}[0]"), None)?.len();
    matrix(field, v, path, items.len(), cols)
}

fn tensor(field: Field, v: &Value, path: &str, dim: usize) -> Result<Tensor> {
    let mut t = Tensor::zeros(field, dim);
    for (i, a) in array(v, path, Some(dim))?.iter().enumerate() {
        let pa = format!("{path}[{i}]");
        for (j, b) in array(a, &pa, Some(dim))?.iter().enumerate() {
            let pb = format!("{pa}[{j}]");
            for (k, c) in array(b, &pb, Some(dim))?.iter().enumerate() {
                t.set(i, j, k, scalar(field, c, &format!("{pb}[{k}]"))?);
            }
        }
    }
    Ok(t)
}

fn parse_field(v: &Value) -> Result<Field> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::Object(m) if m.len() == 1 && m.contains_key("Fp") => {
            let p = m["Fp"]
                .as_u64()
                .ok_or_else(|| shape("field.Fp", "expected a positive integer"))?;
            Field::prime(p).map_err(|e| shape("field.Fp", e.to_string()))
        }
        _ => Err(shape("field", "expected \"Q\" or {\"Fp\": p}")),
    }
}

fn check_keys(map: &serde_json::Map<String, Value>, path: &str, allowed: &[&str]) -> Result<()> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            let at = if path.is_empty() {
                key.clone()
            } else {
                format!("{path}.{key}")
            };
            return Err(shape(&at, "unknown key"));
        }
    }
    Ok(())
}

fn required<'a>(
    map: &'a serde_json::Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<&'a Value> {
    map.get(key).ok_or_else(|| {
        let at = if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        };
        shape(&at, "missing")
    })
}

/// Parses and validates an algebra file.
pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile> {
    let root: Value = serde_json::from_str(text).map_err(|e| Error::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let top = object(&root, "$")?;
    check_keys(
        top,
        "",
        &[
            "field", "dim", "basis", "products", "twist", "maps", "modules",
        ],
    )?;
    let field = parse_field(required(top, "field", "")?)?;
    let dim = required(top, "dim", "")?
        .as_u64()
        .filter(|&d| d >= 1)
        .ok_or_else(|| shape("dim", "expected a positive integer"))? as usize;

    let products_obj = object(required(top, "products", "")?, "products")?;
    let mut products = BTreeMap::new();
    for (key, value) in products_obj {
        let label: Label = key.parse()?;
        if !label.is_declarable() {
            return Err(Error::UnknownLabel(key.clone()));
        }
        products.insert(
            label,
            tensor(field, value, &format!("products.{key}"), dim)?,
        );
    }
    let twist = matrix(field, required(top, "twist", "")?, "twist", dim, dim)?;
    let mut algebra = HomAlgebra::new(field, products, twist)?;
    if let Some(basis) = top.get("basis") {
        let names = array(basis, "basis", Some(dim))?
            .iter()
            .enumerate()
            .map(|(i, n)| {
                n.as_str()
                    .map(String::from)
                    .ok_or_else(|| shape(&format!("basis[{i}]"), "expected a string"))
            })
            .collect::<Result<Vec<_>>>()?;
        algebra = algebra.with_basis(names)?;
    }

    let mut file = AlgebraFile::new(algebra);
    if let Some(maps) = top.get("maps") {
        for (name, value) in object(maps, "maps")? {
            let m = free_matrix(field, value, &format!("maps.{name}"))?;
            file.maps.insert(name.clone(), m);
        }
    }
    if let Some(modules) = top.get("modules") {
        for (idx, value) in array(modules, "modules", None)?.iter().enumerate() {
            let path = format!("modules[{idx}]");
            let module = parse_module(&file.algebra, value, &path)?;
            file.modules.push(module);
        }
    }
    Ok(file)
}

fn parse_module(algebra: &HomAlgebra, v: &Value, path: &str) -> Result<Module> {
    let field = algebra.field();
    let dim = algebra.dim();
    let m = object(v, path)?;
    check_keys(m, path, &["moduleDim", "phi", "rho", "l", "r"])?;
    let module_dim = required(m, "moduleDim", path)?
        .as_u64()
        .filter(|&d| d >= 1)
        .ok_or_else(|| shape(&format!("{path}.moduleDim"), "expected a positive integer"))?
        as usize;
    let phi = matrix(
        field,
        required(m, "phi", path)?,
        &format!("{path}.phi"),
        module_dim,
        module_dim,
    )?;
    let maps = |key: &str| -> Result<Vec<Matrix>> {
        let p = format!("{path}.{key}");
        array(required(m, key, path)?, &p, Some(dim))?
            .iter()
            .enumerate()
            .map(|(i, x)| matrix(field, x, &format!("{p}[{i}]"), module_dim, module_dim))
            .collect()
    };
    match (
        m.contains_key("rho"),
        m.contains_key("l") || m.contains_key("r"),
    ) {
        (true, false) => Ok(Module::Representation(Representation::new(
            algebra,
            maps("rho")?,
            phi,
        )?)),
        (false, true) => Ok(Module::Bimodule(Bimodule::new(
            algebra,
            maps("l")?,
            maps("r")?,
            phi,
        )?)),
        _ => Err(shape(path, "a module needs either rho, or both l and r")),
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn scalar_row(row: &[Scalar]) -> String {
    let cells: Vec<String> = row.iter().map(|s| quote(&s.to_canonical())).collect();
    format!("[{}]", cells.join(", "))
}

fn write_matrix(out: &mut String, m: &Matrix, indent: &str) {
    if m.rows() == 0 {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for i in 0..m.rows() {
        let sep = if i + 1 < m.rows() { "," } else { "" };
        let _ = writeln!(out, "{indent}  {}{sep}", scalar_row(m.row(i)));
    }
    out.push_str(indent);
    out.push(']');
}

fn write_tensor(out: &mut String, t: &Tensor, indent: &str) {
    let nested = t.to_nested();
    if nested.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (i, plane) in nested.iter().enumerate() {
        let rows: Vec<String> = plane.iter().map(|r| scalar_row(r)).collect();
        let sep = if i + 1 < nested.len() { "," } else { "" };
        let _ = writeln!(out, "{indent}  [{}]{sep}", rows.join(", "));
    }
    out.push_str(indent);
    out.push(']');
}

fn write_matrix_list(out: &mut String, maps: &[Matrix], indent: &str) {
    out.push_str("[\n");
    let inner = format!("{indent}  ");
    for (i, m) in maps.iter().enumerate() {
        out.push_str(&inner);
        write_matrix(out, m, &inner);
        out.push_str(if i + 1 < maps.len() { ",\n" } else { "\n" });
    }
    out.push_str(indent);
    out.push(']');
}

fn field_json(field: Field) -> String {
    match field {
        Field::Rational => "\"Q\"".into(),
        Field::Prime(p) => format!("{{\"Fp\": {p}}}"),
    }
}

/// Canonical serialization: fixed key order, innermost arrays inline.
pub fn serialize_algebra_file(file: &AlgebraFile) -> String {
    let a = &file.algebra;
    let mut entries: Vec<String> = Vec::new();
    entries.push(format!("  \"field\": {}", field_json(a.field())));
    entries.push(format!("  \"dim\": {}", a.dim()));
    if let Some(names) = a.basis_names() {
        let names: Vec<String> = names.iter().map(|n| quote(n)).collect();
        entries.push(format!("  \"basis\": [{}]", names.join(", ")));
    }
    let mut products = String::from("  \"products\": {\n");
    let labels: Vec<_> = a.products().iter().collect();
    for (i, (label, t)) in labels.iter().enumerate() {
        let _ = write!(products, "    {}: ", quote(label.name()));
        write_tensor(&mut products, t, "    ");
        products.push_str(if i + 1 < labels.len() { ",\n" } else { "\n" });
    }
    products.push_str("  }");
    entries.push(products);
    let mut twist = String::from("  \"twist\": ");
    write_matrix(&mut twist, a.twist(), "  ");
    entries.push(twist);
    if !file.maps.is_empty() {
        let mut maps = String::from("  \"maps\": {\n");
        for (i, (name, m)) in file.maps.iter().enumerate() {
            let _ = write!(maps, "    {}: ", quote(name));
            write_matrix(&mut maps, m, "    ");
            maps.push_str(if i + 1 < file.maps.len() { ",\n" } else { "\n" });
        }
        maps.push_str("  }");
        entries.push(maps);
    }
    if !file.modules.is_empty() {
        let mut mods = String::from("  \"modules\": [\n");
        for (i, m) in file.modules.iter().enumerate() {
            let ind = "      ";
            let _ = writeln!(mods, "    {{\n{ind}\"moduleDim\": {},", m.module_dim());
            let _ = write!(mods, "{ind}\"phi\": ");
            write_matrix(&mut mods, m.phi(), ind);
            match m {
                Module::Representation(r) => {
                    let _ = write!(mods, ",\n{ind}\"rho\": ");
                    write_matrix_list(&mut mods, &r.rho, ind);
                }
                Module::Bimodule(b) => {
                    let _ = write!(mods, ",\n{ind}\"l\": ");
                    write_matrix_list(&mut mods, &b.left, ind);
                    let _ = write!(mods, ",\n{ind}\"r\": ");
                    write_matrix_list(&mut mods, &b.right, ind);
                }
            }
            mods.push_str("\n    }");
            mods.push_str(if i + 1 < file.modules.len() {
                ",\n"
            } else {
                "\n"
            });
        }
        mods.push_str("  ]");
        entries.push(mods);
    }
    format!("{{\n{}\n}}\n", entries.join(",\n"))
}

pub fn read_algebra_file(path: &std::path::Path) -> Result<AlgebraFile> {
    parse_algebra_file(&std::fs::read_to_string(path)?)
}

pub fn write_algebra_file(path: &std::path::Path, file: &AlgebraFile) -> Result<()> {
    std::fs::write(path, serialize_algebra_file(file))?;
    Ok(())
}

/// Hex SHA-256 of the input bytes.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// One entry of a report document.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ReportEntry {
    Suite(crate::report::CheckReport),
    Operator {
        map: String,
        #[serde(flatten)]
        report: crate::operators::OperatorReport,
    },
    Search {
        label: String,
        policy: crate::operators::Policy,
        pattern: Option<String>,
        found: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionRecord {
    pub construction: String,
    pub inputs: Vec<String>,
    pub output: Option<String>,
    pub expected_suite: String,
    pub verified: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assertions: Vec<crate::constructions::Assertion>,
}

/// Machine-readable result of one CLI invocation.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub input: String,
    pub input_sha256: String,
    pub reports: Vec<ReportEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub constructions: Vec<ConstructionRecord>,
    pub status: String,
    pub exit_code: i32,
}

impl ReportDocument {
    pub fn new(input: &str, bytes: &[u8]) -> ReportDocument {
        ReportDocument {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            input: input.into(),
            input_sha256: digest(bytes),
            reports: Vec::new(),
            constructions: Vec::new(),
            status: "pass".into(),
            exit_code: 0,
        }
    }

    pub fn finish(&mut self, exit_code: i32) {
        self.exit_code = exit_code;
        self.status = match exit_code {
            0 => "pass",
            1 => "fail",
            _ => "error",
        }
        .into();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const MINIMAL: &str =
        r#"{"field": "Q", "dim": 1, "products": {"circ": [[["0"]]]}, "twist": [["1"]]}"#;

    #[test]
    fn minimal_file() {
        let f = parse_algebra_file(MINIMAL).unwrap();
        assert_eq!(f.algebra.dim(), 1);
        assert!(f.algebra.product(Label::Circ).unwrap().is_zero());
    }

    #[test]
    fn syntax_error_position() {
        let err = parse_algebra_file("{\n  \"field\": \"Q\",\n  \"dim\" 1\n}").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (3, 9)),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn shape_error_names_path() {
        let text = r#"{"field": "Q", "dim": 2, "products": {"circ": [[["0"], ["0", "0"]], [["0", "0"], ["0", "0"]]]}, "twist": [["1", "0"], ["0", "1"]]}"#;
        match parse_algebra_file(text).unwrap_err() {
            Error::Shape { path, .. } => assert_eq!(path, "products.circ[0][0]"),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn rejects_bad_scalars_and_labels() {
        let unreduced = MINIMAL.replace("[[[\"0\"]]]", "[[[\"2/4\"]]]");
        assert!(matches!(
            parse_algebra_file(&unreduced),
            Err(Error::Shape { .. })
        ));
        let garbage = MINIMAL.replace("[[[\"0\"]]]", "[[[\"x\"]]]");
        assert!(matches!(
            parse_algebra_file(&garbage),
            Err(Error::Shape { .. })
        ));
        let label = MINIMAL.replace("circ", "star");
        assert!(matches!(
            parse_algebra_file(&label),
            Err(Error::UnknownLabel(_))
        ));
        let label = MINIMAL.replace("circ", "bogus");
        assert!(matches!(
            parse_algebra_file(&label),
            Err(Error::UnknownLabel(_))
        ));
        let residue = MINIMAL
            .replace("\"Q\"", "{\"Fp\": 5}")
            .replace("[[[\"0\"]]]", "[[[\"7\"]]]");
        assert!(parse_algebra_file(&residue).is_err());
        assert!(parse_algebra_file(&MINIMAL.replace("\"dim\": 1", "\"dim\": 0")).is_err());
    }

    #[test]
    fn round_trip() {
        let alg = fixtures::hom_jordan3(Field::Rational, 2, 3);
        let rep = alg.adjoint_representation().unwrap();
        let bim = alg
            .relabeled(Label::Dot)
            .unwrap()
            .regular_bimodule(Label::Dot)
            .unwrap();
        let file = AlgebraFile::new(alg)
            .with_map("R", fixtures::hom_jordan3_rb(Field::Rational, 1, 2))
            .with_module(Module::Representation(rep))
            .with_module(Module::Bimodule(bim));
        let text = serialize_algebra_file(&file);
        let back = parse_algebra_file(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(serialize_algebra_file(&back), text);
    }

    #[test]
    fn digest_is_hex() {
        assert_eq!(
            digest(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
