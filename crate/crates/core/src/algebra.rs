//! Hom-algebras given by structure constants, their modules, and the
//! structural predicates that do not depend on any identity suite.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{Verdict, Witness};
use crate::scalar::{Field, Scalar};

/// Product labels. The first four can be declared on an algebra; `Diamond`
/// and `Star` only ever appear as derived products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Circ,
    Dot,
    Prec,
    Succ,
    Diamond,
    Star,
}

impl Label {
    pub const DECLARABLE: [Label; 4] = [Label::Circ, Label::Dot, Label::Prec, Label::Succ];

    pub fn name(self) -> &'static str {
        match self {
            Label::Circ => "circ",
            Label::Dot => "dot",
            Label::Prec => "prec",
            Label::Succ => "succ",
            Label::Diamond => "diamond",
            Label::Star => "star",
        }
    }

    pub fn is_declarable(self) -> bool {
        Label::DECLARABLE.contains(&self)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        match s {
            "circ" => Ok(Label::Circ),
            "dot" => Ok(Label::Dot),
            "prec" => Ok(Label::Prec),
            "succ" => Ok(Label::Succ),
            "diamond" => Ok(Label::Diamond),
            "star" => Ok(Label::Star),
            other => Err(Error::UnknownLabel(other.to_string())),
        }
    }
}

/// Structure constants `c[i][j][k]` with `e_i * e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    field: Field,
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: Field, dim: usize) -> Tensor {
        Tensor {
            field,
            dim,
            data: vec![field.zero(); dim * dim * dim],
        }
    }

    /// Builds a tensor from the products of basis pairs.
    pub fn from_fn(field: Field, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Tensor {
        let mut t = Tensor::zeros(field, dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "basis product has wrong length");
                for k in 0..dim {
                    t.set(i, j, k, v.get(k).clone());
                }
            }
        }
        t
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        let idx = self.idx(i, j, k);
        self.data[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = self.idx(i, j, 0);
        Vector::from_scalars(self.field, self.data[start..start + self.dim].to_vec())
            .expect("tensor scalars share the field")
    }

    /// Bilinear evaluation `sum_{i,j} x_i y_j c[i][j][.]`.
    pub fn product(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::Dimension(format!(
                    "vector of length {} in a {}-dimensional algebra",
                    v.len(),
                    self.dim
                )));
            }
            if v.field() != self.field {
                return Err(Error::FieldMismatch(self.field, v.field()));
            }
        }
        Ok(self.product_unchecked(x, y))
    }

    pub(crate) fn product_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.dim);
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let c = xi * yj;
                let start = self.idx(i, j, 0);
                for k in 0..self.dim {
                    let t = &self.data[start + k];
                    if !t.is_zero() {
                        out.set(k, out.get(k) + &(&c * t));
                    }
                }
            }
        }
        out
    }

    /// Swaps the two input slots: `t'[i][j][k] = t[j][i][k]`.
    pub fn transpose(&self) -> Tensor {
        let mut t = Tensor::zeros(self.field, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    t.set(i, j, k, self.get(j, i, k).clone());
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dim, other.dim);
        Tensor {
            field: self.field,
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            field: self.field,
            dim: self.dim,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    /// Left multiplication `L(e_i)`: column `j` is `e_i * e_j`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(i, j)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Right multiplication `R(e_i)`: column `j` is `e_j * e_i`.
    pub fn right_mult(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.basis_product(j, i)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Nested `[i][j][k]` rows for serialization.
    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.get(i, j, k).clone()).collect())
                    .collect()
            })
            .collect()
    }
}

/// Which identity-suite family an algebra's declared products fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Single(Label),
    Split,
}

/// A Hom-algebra `(A, products, alpha)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    field: Field,
    dim: usize,
    basis: Option<Vec<String>>,
    products: BTreeMap<Label, Tensor>,
    twist: Matrix,
}

impl HomAlgebra {
    /// Validates shapes, the field, and the product-label combination: one
    /// product, or exactly `prec` and `succ`.
    pub fn new(
        field: Field,
        products: BTreeMap<Label, Tensor>,
        twist: Matrix,
    ) -> Result<HomAlgebra> {
        let dim = twist.rows();
        if !twist.is_square() {
            return Err(Error::Invalid(format!(
                "twist must be square, got {}x{}",
                twist.rows(),
                twist.cols()
            )));
        }
        if twist.field() != field {
            return Err(Error::FieldMismatch(field, twist.field()));
        }
        for (label, t) in &products {
            if !label.is_declarable() {
                return Err(Error::UnknownLabel(label.name().into()));
            }
            if t.dim() != dim {
                return Err(Error::Invalid(format!(
                    "product {label} has dimension {}, twist has {dim}",
                    t.dim()
                )));
            }
            if t.field() != field {
                return Err(Error::FieldMismatch(field, t.field()));
            }
        }
        let labels: Vec<Label> = products.keys().copied().collect();
        let ok = matches!(
            labels.as_slice(),
            [Label::Circ] | [Label::Dot] | [Label::Prec, Label::Succ]
        );
        if !ok {
            let names: Vec<&str> = labels.iter().map(|l| l.name()).collect();
            return Err(Error::Invalid(format!(
                "products must be a single product or exactly prec and succ, got {names:?}"
            )));
        }
        Ok(HomAlgebra {
            field,
            dim,
            basis: None,
            products,
            twist,
        })
    }

    pub fn single(label: Label, product: Tensor, twist: Matrix) -> Result<HomAlgebra> {
        HomAlgebra::new(product.field(), BTreeMap::from([(label, product)]), twist)
    }

    pub fn split(prec: Tensor, succ: Tensor, twist: Matrix) -> Result<HomAlgebra> {
        HomAlgebra::new(
            prec.field(),
            BTreeMap::from([(Label::Prec, prec), (Label::Succ, succ)]),
            twist,
        )
    }

    pub fn with_basis(mut self, names: Vec<String>) -> Result<HomAlgebra> {
        if names.len() != self.dim {
            return Err(Error::Invalid(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.basis = Some(names);
        Ok(self)
    }

    pub(crate) fn set_basis(&mut self, names: Option<Vec<String>>) {
        self.basis = names.filter(|n| n.len() == self.dim);
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis.as_deref()
    }

    /// Display name of basis vector `i` (`e1`, `e2`, ... when unnamed).
    pub fn basis_name(&self, i: usize) -> String {
        match &self.basis {
            Some(names) => names[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn twist(&self) -> &Matrix {
        &self.twist
    }

    pub fn products(&self) -> &BTreeMap<Label, Tensor> {
        &self.products
    }

    pub fn shape(&self) -> Shape {
        if self.products.contains_key(&Label::Prec) {
            Shape::Split
        } else {
            Shape::Single(*self.products.keys().next().expect("at least one product"))
        }
    }

    pub fn has(&self, label: Label) -> bool {
        self.products.contains_key(&label)
    }

    pub fn product(&self, label: Label) -> Result<&Tensor> {
        self.products
            .get(&label)
            .ok_or_else(|| Error::MissingProduct(label.name().into()))
    }

    /// The single declared product, whatever its label.
    pub fn sole_product(&self) -> Result<(Label, &Tensor)> {
        match self.shape() {
            Shape::Single(l) => Ok((l, &self.products[&l])),
            Shape::Split => Err(Error::Invalid("algebra has two products".into())),
        }
    }

    /// Same data with the single product carried under another label.
    pub fn relabeled(&self, label: Label) -> Result<HomAlgebra> {
        let (_, t) = self.sole_product()?;
        let mut out = HomAlgebra::single(label, t.clone(), self.twist.clone())?;
        out.basis = self.basis.clone();
        Ok(out)
    }

    pub fn with_twist(&self, twist: Matrix) -> Result<HomAlgebra> {
        let mut out = HomAlgebra::new(self.field, self.products.clone(), twist)?;
        out.basis = self.basis.clone();
        Ok(out)
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.field, self.dim, i)
    }

    pub fn eval_product(&self, label: Label, x: &Vector, y: &Vector) -> Result<Vector> {
        self.product(label)?.product(x, y)
    }

    pub fn apply_twist(&self, x: &Vector) -> Result<Vector> {
        self.twist.apply(x)
    }

    /// `c[i][j][k] = c[j][i][k]` for all indices. The witness is the first
    /// pair `(i, j)` with `i > j` in lexicographic order.
    pub fn is_commutative(&self, label: Label) -> Result<Verdict> {
        let t = self.product(label)?;
        for i in 0..self.dim {
            for j in 0..i {
                let lhs = t.basis_product(i, j);
                let rhs = t.basis_product(j, i);
                if lhs != rhs {
                    return Ok(Verdict::fail(Witness::new(vec![i, j], lhs, rhs)));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// Every basis pair `(i, j)` with `M(e_i * e_j) != M(e_i) * M(e_j)`,
    /// in lexicographic order.
    pub fn morphism_defects(&self, label: Label, map: &Matrix) -> Result<Vec<Witness>> {
        let t = self.product(label)?;
        if map.rows() != self.dim || map.cols() != self.dim {
            return Err(Error::Dimension(format!(
                "map is {}x{}, algebra has dimension {}",
                map.rows(),
                map.cols(),
                self.dim
            )));
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| map.column(i)).collect();
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = map.apply(&t.basis_product(i, j))?;
                let rhs = t.product_unchecked(&images[i], &images[j]);
                if lhs != rhs {
                    out.push(Witness::new(vec![i, j], lhs, rhs));
                }
            }
        }
        Ok(out)
    }

    pub fn is_algebra_morphism(&self, label: Label, map: &Matrix) -> Result<Verdict> {
        Ok(
            match self.morphism_defects(label, map)?.into_iter().next() {
                Some(w) => Verdict::fail(w),
                None => Verdict::pass(),
            },
        )
    }

    /// Morphism check against every declared product, first failure wins.
    pub fn is_morphism_of_all(&self, map: &Matrix) -> Result<Verdict> {
        for label in self.products.keys() {
            let v = self.is_algebra_morphism(*label, map)?;
            if !v.passed {
                return Ok(v);
            }
        }
        Ok(Verdict::pass())
    }

    /// Whether the twist is multiplicative for every declared product.
    pub fn twist_is_multiplicative(&self) -> Verdict {
        self.is_morphism_of_all(&self.twist)
            .expect("twist has the algebra's shape")
    }

    pub fn derive_products(&self) -> Result<DerivedProducts> {
        DerivedProducts::new(self.product(Label::Prec)?, self.product(Label::Succ)?)
    }

    /// `ad(e_i)` = left multiplication by `e_i` under `circ`, with `phi = alpha`.
    pub fn adjoint_representation(&self) -> Result<Representation> {
        let t = self.product(Label::Circ)?;
        Representation::new(
            self,
            (0..self.dim).map(|i| t.left_mult(i)).collect(),
            self.twist.clone(),
        )
    }

    /// `(A, L, R, alpha)` for the given product.
    pub fn regular_bimodule(&self, label: Label) -> Result<Bimodule> {
        let t = self.product(label)?;
        Bimodule::new(
            self,
            (0..self.dim).map(|i| t.left_mult(i)).collect(),
            (0..self.dim).map(|i| t.right_mult(i)).collect(),
            self.twist.clone(),
        )
    }
}

/// Products derived from `(prec, succ)`:
/// vertical `x . y = x > y + y < x`, horizontal `x <> y = x > y + x < y`,
/// their common anticommutator `circ`, and `star = prec + succ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedProducts {
    pub dot: Tensor,
    pub diamond: Tensor,
    pub circ: Tensor,
    pub star: Tensor,
}

impl DerivedProducts {
    pub fn new(prec: &Tensor, succ: &Tensor) -> Result<DerivedProducts> {
        if prec.dim() != succ.dim() {
            return Err(Error::Dimension("prec and succ differ in dimension".into()));
        }
        let dot = succ.add(&prec.transpose());
        let diamond = succ.add(prec);
        let circ = dot.add(&dot.transpose());
        let star = prec.add(succ);
        debug_assert_eq!(circ, circ.transpose());
        Ok(DerivedProducts {
            dot,
            diamond,
            circ,
            star,
        })
    }

    pub fn get(&self, label: Label) -> Option<&Tensor> {
        match label {
            Label::Dot => Some(&self.dot),
            Label::Diamond => Some(&self.diamond),
            Label::Circ => Some(&self.circ),
            Label::Star => Some(&self.star),
            Label::Prec | Label::Succ => None,
        }
    }
}

/// `sum_i x_i M_i` for a per-basis matrix list.
pub fn linear_action(maps: &[Matrix], x: &Vector, module_dim: usize) -> Matrix {
    let field = x.field();
    let mut out = Matrix::zeros(field, module_dim, module_dim);
    for (i, c) in x.support() {
        out = out.add(&maps[i].scale(c)).expect("same shape");
    }
    out
}

fn check_module_maps(
    algebra: &HomAlgebra,
    name: &str,
    maps: &[Matrix],
    module_dim: usize,
) -> Result<()> {
    if maps.len() != algebra.dim() {
        return Err(Error::Invalid(format!(
            "{name} has {} matrices, expected one per basis vector ({})",
            maps.len(),
            algebra.dim()
        )));
    }
    for (i, m) in maps.iter().enumerate() {
        if m.rows() != module_dim || m.cols() != module_dim {
            return Err(Error::Invalid(format!(
                "{name}[{i}] is {}x{}, expected {module_dim}x{module_dim}",
                m.rows(),
                m.cols()
            )));
        }
        if m.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), m.field()));
        }
    }
    Ok(())
}

/// `(V, rho, phi)` over a Hom-Jordan algebra; `rho[i]` is `rho(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub module_dim: usize,
    pub rho: Vec<Matrix>,
    pub phi: Matrix,
}

impl Representation {
    pub fn new(algebra: &HomAlgebra, rho: Vec<Matrix>, phi: Matrix) -> Result<Representation> {
        let module_dim = phi.rows();
        if !phi.is_square() {
            return Err(Error::Invalid("phi must be square".into()));
        }
        check_module_maps(algebra, "rho", &rho, module_dim)?;
        Ok(Representation {
            module_dim,
            rho,
            phi,
        })
    }

    /// The zero representation on a `module_dim`-dimensional space.
    pub fn zero(algebra: &HomAlgebra, module_dim: usize, phi: Matrix) -> Result<Representation> {
        let rho = vec![Matrix::zeros(algebra.field(), module_dim, module_dim); algebra.dim()];
        Representation::new(algebra, rho, phi)
    }

    pub fn act(&self, x: &Vector) -> Matrix {
        linear_action(&self.rho, x, self.module_dim)
    }
}

/// `(V, l, r, phi)` over a Hom-pre-Jordan algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    pub module_dim: usize,
    pub left: Vec<Matrix>,
    pub right: Vec<Matrix>,
    pub phi: Matrix,
}

impl Bimodule {
    pub fn new(
        algebra: &HomAlgebra,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
        phi: Matrix,
    ) -> Result<Bimodule> {
        let module_dim = phi.rows();
        if !phi.is_square() {
            return Err(Error::Invalid("phi must be square".into()));
        }
        check_module_maps(algebra, "l", &left, module_dim)?;
        check_module_maps(algebra, "r", &right, module_dim)?;
        Ok(Bimodule {
            module_dim,
            left,
            right,
            phi,
        })
    }

    pub fn zero(algebra: &HomAlgebra, module_dim: usize, phi: Matrix) -> Result<Bimodule> {
        let z = vec![Matrix::zeros(algebra.field(), module_dim, module_dim); algebra.dim()];
        Bimodule::new(algebra, z.clone(), z, phi)
    }

    pub fn act_left(&self, x: &Vector) -> Matrix {
        linear_action(&self.left, x, self.module_dim)
    }

    pub fn act_right(&self, x: &Vector) -> Matrix {
        linear_action(&self.right, x, self.module_dim)
    }

    /// `(V, l + r, phi)`, a representation of the associated Hom-Jordan algebra.
    pub fn symmetrized(&self) -> Representation {
        Representation {
            module_dim: self.module_dim,
            rho: self
                .left
                .iter()
                .zip(&self.right)
                .map(|(l, r)| l.add(r).expect("same shape"))
                .collect(),
            phi: self.phi.clone(),
        }
    }
}

/// Module data attached to an algebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Module {
    Representation(Representation),
    Bimodule(Bimodule),
}

impl Module {
    pub fn module_dim(&self) -> usize {
        match self {
            Module::Representation(r) => r.module_dim,
            Module::Bimodule(b) => b.module_dim,
        }
    }

    pub fn phi(&self) -> &Matrix {
        match self {
            Module::Representation(r) => &r.phi,
            Module::Bimodule(b) => &b.phi,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorKind {
    /// `R: A -> A`, weight zero.
    RotaBaxter,
    /// `T: V -> A` relative to an attached module.
    OOperator,
}

/// A Rota-Baxter operator or an O-operator with its attached module index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operator {
    pub kind: OperatorKind,
    pub map: Matrix,
    pub module: Option<usize>,
}

impl Operator {
    pub fn rota_baxter(algebra: &HomAlgebra, map: Matrix) -> Result<Operator> {
        if map.rows() != algebra.dim() || map.cols() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "Rota-Baxter operator must be {0}x{0}, got {1}x{2}",
                algebra.dim(),
                map.rows(),
                map.cols()
            )));
        }
        Ok(Operator {
            kind: OperatorKind::RotaBaxter,
            map,
            module: None,
        })
    }

    pub fn o_operator(
        algebra: &HomAlgebra,
        module_index: usize,
        module: &Module,
        map: Matrix,
    ) -> Result<Operator> {
        if map.rows() != algebra.dim() || map.cols() != module.module_dim() {
            return Err(Error::Dimension(format!(
                "O-operator must be {}x{}, got {}x{}",
                algebra.dim(),
                module.module_dim(),
                map.rows(),
                map.cols()
            )));
        }
        Ok(Operator {
            kind: OperatorKind::OOperator,
            map,
            module: Some(module_index),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    #[test]
    fn example_product_entry() {
        let a = fixtures::hom_jordan3(Q, 1, 1);
        let e2 = a.basis_vector(1);
        let e3 = a.basis_vector(2);
        let v = a.eval_product(Label::Circ, &e2, &e3).unwrap();
        assert_eq!(v, e3.scale(&Q.ratio(1, 2).unwrap()));
        let a = fixtures::hom_jordan3(Q, 2, 3);
        let v = a
            .eval_product(Label::Circ, &a.basis_vector(1), &a.basis_vector(2))
            .unwrap();
        assert_eq!(v, a.basis_vector(2).scale(&Q.ratio(3, 2).unwrap()));
    }

    #[test]
    fn zero_algebra_products_vanish() {
        let z = fixtures::zero_algebra(Q, 3, Label::Circ);
        let x = Vector::from_i64(Q, &[1, 2, 3]);
        let y = Vector::from_i64(Q, &[-4, 0, 5]);
        assert!(z.eval_product(Label::Circ, &x, &y).unwrap().is_zero());
    }

    #[test]
    fn dual_numbers_t_squared() {
        let d2 = fixtures::dual_numbers(Q);
        let t = d2.basis_vector(1);
        assert!(d2.eval_product(Label::Circ, &t, &t).unwrap().is_zero());
    }

    #[test]
    fn product_errors() {
        let d2 = fixtures::dual_numbers(Q);
        let x = Vector::from_i64(Q, &[1, 2, 3]);
        assert!(matches!(
            d2.eval_product(Label::Circ, &x, &x),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            d2.eval_product(Label::Dot, &d2.basis_vector(0), &d2.basis_vector(0)),
            Err(Error::MissingProduct(_))
        ));
        assert!("bracket".parse::<Label>().is_err());
    }

    #[test]
    fn commutativity() {
        assert!(
            fixtures::hom_jordan3(Q, 2, 3)
                .is_commutative(Label::Circ)
                .unwrap()
                .passed
        );
        let d2 = fixtures::dual_numbers(Q);
        assert!(d2.is_commutative(Label::Circ).unwrap().passed);
        // t.u := 0
        let mut t = d2.product(Label::Circ).unwrap().clone();
        t.set(1, 0, 1, Q.zero());
        let broken = HomAlgebra::single(Label::Circ, t, d2.twist().clone()).unwrap();
        let v = broken.is_commutative(Label::Circ).unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.unwrap().tuple, vec![1, 0]);
    }

    #[test]
    fn morphism_predicate() {
        for (a, b) in [(1, 1), (2, 3)] {
            let alg = fixtures::hom_jordan3(Q, a, b);
            let id = Matrix::identity(Q, 3);
            assert!(alg.is_algebra_morphism(Label::Circ, &id).unwrap().passed);
        }
        let alg = fixtures::hom_jordan3(Q, 1, 1);
        assert!(alg.twist_is_multiplicative().passed);

        let alg = fixtures::hom_jordan3(Q, 2, 3);
        let defects = alg.morphism_defects(Label::Circ, alg.twist()).unwrap();
        let e1e3 = defects
            .iter()
            .find(|w| w.tuple == vec![0, 2])
            .expect("(e1, e3) fails");
        assert_eq!(e1e3.lhs, Vector::from_i64(Q, &[0, 0, 9]));
        assert_eq!(e1e3.rhs, Vector::from_i64(Q, &[0, 0, 18]));
        // the reported witness is the lexicographically first failing pair
        let v = alg.is_algebra_morphism(Label::Circ, alg.twist()).unwrap();
        assert_eq!(v.witness.unwrap().tuple, vec![0, 0]);
    }

    #[test]
    fn derived_products_examples() {
        let z = Tensor::zeros(Q, 2);
        let d = DerivedProducts::new(&z, &z).unwrap();
        assert!(d.dot.is_zero() && d.diamond.is_zero() && d.circ.is_zero() && d.star.is_zero());

        let s = fixtures::dual_numbers(Q)
            .product(Label::Circ)
            .unwrap()
            .clone();
        let mut s = s;
        s.set(0, 1, 0, Q.from_i64(5));
        let d = DerivedProducts::new(&z, &s).unwrap();
        assert_eq!(d.dot, s);
        assert_eq!(d.diamond, s);
        assert_eq!(d.circ, s.add(&s.transpose()));
        assert_eq!(d.star, d.diamond);
    }

    #[test]
    fn adjoint_examples() {
        let z = fixtures::zero_algebra(Q, 2, Label::Circ);
        assert!(z
            .adjoint_representation()
            .unwrap()
            .rho
            .iter()
            .all(Matrix::is_zero));

        let (a, b) = (2, 3);
        let alg = fixtures::hom_jordan3(Q, a, b);
        let ad = alg.adjoint_representation().unwrap();
        let expected = Matrix::diagonal(Q, &[Q.from_i64(a), Q.from_i64(a), Q.from_i64(b)]);
        assert_eq!(ad.rho[0], expected);
        assert_eq!(&ad.phi, alg.twist());

        let d2 = fixtures::dual_numbers(Q);
        assert_eq!(
            d2.adjoint_representation().unwrap().rho[0],
            Matrix::identity(Q, 2)
        );
    }

    #[test]
    fn label_combination_enforced() {
        let t = Tensor::zeros(Q, 2);
        let tw = Matrix::identity(Q, 2);
        let both = BTreeMap::from([(Label::Circ, t.clone()), (Label::Dot, t.clone())]);
        assert!(HomAlgebra::new(Q, both, tw.clone()).is_err());
        let only_prec = BTreeMap::from([(Label::Prec, t.clone())]);
        assert!(HomAlgebra::new(Q, only_prec, tw.clone()).is_err());
        let derived = BTreeMap::from([(Label::Diamond, t)]);
        assert!(HomAlgebra::new(Q, derived, tw).is_err());
    }
}
