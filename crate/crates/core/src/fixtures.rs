//! Reference algebras used by the test suites, the fixture generator and
//! the Python bindings.

use std::collections::BTreeMap;

use crate::algebra::{HomAlgebra, Label, Module, Tensor};
use crate::io::AlgebraFile;
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Scalar};

/// The three-dimensional Hom-Jordan family with parameters `(a, b)`:
///
/// ```text
///  o  | e1    e2     e3
/// ----+------------------
///  e1 | a e1  a e2   b e3
///  e2 | a e2  a e2   b/2 e3
///  e3 | b e3  b/2 e3 0
/// ```
/// and `alpha = diag(a, a, b)`.
pub fn hom_jordan3_with(field: Field, a: &Scalar, b: &Scalar) -> HomAlgebra {
    let half_b = b * &field.ratio(1, 2).expect("p >= 5");
    let mut t = Tensor::zeros(field, 3);
    t.set(0, 0, 0, a.clone());
    t.set(0, 1, 1, a.clone());
    t.set(1, 0, 1, a.clone());
    t.set(1, 1, 1, a.clone());
    t.set(0, 2, 2, b.clone());
    t.set(2, 0, 2, b.clone());
    t.set(1, 2, 2, half_b.clone());
    t.set(2, 1, 2, half_b);
    let twist = Matrix::diagonal(field, &[a.clone(), a.clone(), b.clone()]);
    HomAlgebra::single(Label::Circ, t, twist).expect("well-formed fixture")
}

pub fn hom_jordan3(field: Field, a: i64, b: i64) -> HomAlgebra {
    hom_jordan3_with(field, &field.from_i64(a), &field.from_i64(b))
}

/// `R(e1) = l1 e3, R(e2) = l2 e3, R(e3) = 0`.
pub fn hom_jordan3_rb_with(field: Field, l1: &Scalar, l2: &Scalar) -> Matrix {
    let mut r = Matrix::zeros(field, 3, 3);
    r.set(2, 0, l1.clone());
    r.set(2, 1, l2.clone());
    r
}

pub fn hom_jordan3_rb(field: Field, l1: i64, l2: i64) -> Matrix {
    hom_jordan3_rb_with(field, &field.from_i64(l1), &field.from_i64(l2))
}

/// Dual numbers `D2` on `{u, t}`: `u.u = u`, `u.t = t.u = t`, `t.t = 0`,
/// identity twist, carried as `circ`.
pub fn dual_numbers(field: Field) -> HomAlgebra {
    let mut t = Tensor::zeros(field, 2);
    t.set(0, 0, 0, field.one());
    t.set(0, 1, 1, field.one());
    t.set(1, 0, 1, field.one());
    HomAlgebra::single(Label::Circ, t, Matrix::identity(field, 2))
        .expect("well-formed fixture")
        .with_basis(vec!["u".into(), "t".into()])
        .expect("two names")
}

/// The nilpotent operator `R(u) = t, R(t) = 0` on `D2`.
pub fn dual_numbers_rb(field: Field) -> Matrix {
    Matrix::from_i64(field, &[&[0, 0], &[1, 0]])
}

pub fn zero_algebra(field: Field, dim: usize, label: Label) -> HomAlgebra {
    HomAlgebra::single(
        label,
        Tensor::zeros(field, dim),
        Matrix::identity(field, dim),
    )
    .expect("well-formed fixture")
}

/// The non-unital truncated polynomial algebra `t K[t] / (t^(n+1))` on
/// `{t, t^2, ..., t^n}`, Yau-twisted by the graded morphism
/// `beta(t^k) = c^k t^k`: product `t^i * t^j = c^(i+j) t^(i+j)`, twist `beta`.
/// Hom-associative and commutative, with multiplicative twist.
pub fn twisted_truncated_polynomials(field: Field, n: usize, c: &Scalar) -> HomAlgebra {
    let powers = powers_of(field, c, 2 * n + 1);
    let mut t = Tensor::zeros(field, n);
    for i in 0..n {
        for j in 0..n {
            let deg = (i + 1) + (j + 1);
            if deg <= n {
                t.set(i, j, deg - 1, powers[deg].clone());
            }
        }
    }
    let twist = Matrix::diagonal(field, &powers[1..=n]);
    let names = (1..=n)
        .map(|k| if k == 1 { "t".into() } else { format!("t{k}") })
        .collect();
    HomAlgebra::single(Label::Circ, t, twist)
        .expect("well-formed fixture")
        .with_basis(names)
        .expect("n names")
}

/// `R(t^k) = t^k / k`, a weight-zero Rota-Baxter operator on the truncated
/// polynomial algebra that commutes with every graded twist.
pub fn inverse_euler_operator(field: Field, n: usize) -> Matrix {
    let diag: Vec<Scalar> = (1..=n as i64)
        .map(|k| field.ratio(1, k).expect("k invertible for k < p"))
        .collect();
    Matrix::diagonal(field, &diag)
}

fn powers_of(field: Field, c: &Scalar, count: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(count);
    let mut acc = field.one();
    for _ in 0..count {
        out.push(acc.clone());
        acc = &acc * c;
    }
    out
}

/// Convenience for building vectors in tests.
pub fn vector(field: Field, coords: &[i64]) -> Vector {
    Vector::from_i64(field, coords)
}

/// Products keyed by label, for building algebras by hand.
pub fn products(entries: Vec<(Label, Tensor)>) -> BTreeMap<Label, Tensor> {
    entries.into_iter().collect()
}

/// The worked example with its `circ` entry for `(e2, e1)` removed.
pub fn hom_jordan3_broken(field: Field, a: i64, b: i64) -> HomAlgebra {
    let alg = hom_jordan3(field, a, b);
    let mut t = alg.product(Label::Circ).expect("circ").clone();
    t.set(1, 0, 1, field.zero());
    HomAlgebra::single(Label::Circ, t, alg.twist().clone()).expect("well-formed fixture")
}

/// The dendriform algebra `x > y = R(x) y`, `x < y = x R(y)` of the
/// associative algebra `D2` and its Rota-Baxter operator.
pub fn dual_numbers_dendriform(field: Field) -> HomAlgebra {
    let d2 = dual_numbers(field);
    let t = d2.product(Label::Circ).expect("circ");
    let r = dual_numbers_rb(field);
    let prec = Tensor::from_fn(field, 2, |i, j| {
        t.product_unchecked(&d2.basis_vector(i), &r.column(j))
    });
    let succ = Tensor::from_fn(field, 2, |i, j| {
        t.product_unchecked(&r.column(i), &d2.basis_vector(j))
    });
    HomAlgebra::split(prec, succ, Matrix::identity(field, 2))
        .expect("well-formed fixture")
        .with_basis(vec!["u".into(), "t".into()])
        .expect("two names")
}

/// Every shipped fixture file, keyed by file stem.
pub fn catalog() -> Vec<(String, AlgebraFile)> {
    use crate::constructions::{self as cons, Options};
    let q = Field::Rational;
    let f5 = Field::prime(5).expect("5 is prime");
    let mut out = Vec::new();
    for (a, b, l1, l2) in EXAMPLE_POINTS {
        let name = format!("hom_jordan3_{}", point_name(&[a, b, l1, l2]));
        let file = AlgebraFile::new(hom_jordan3(q, a, b)).with_map("R", hom_jordan3_rb(q, l1, l2));
        out.push((name, file));
    }
    out.push((
        "hom_jordan3_f5".into(),
        AlgebraFile::new(hom_jordan3(f5, 1, 1)).with_map("R", hom_jordan3_rb(f5, 1, 1)),
    ));
    out.push((
        "hom_jordan3_broken".into(),
        AlgebraFile::new(hom_jordan3_broken(q, 2, 3)),
    ));

    let d2 = dual_numbers(q);
    let adjoint = Module::Representation(d2.adjoint_representation().expect("circ"));
    out.push((
        "dual_numbers".into(),
        AlgebraFile::new(d2)
            .with_map("R", dual_numbers_rb(q))
            .with_module(adjoint),
    ));
    out.push((
        "dual_numbers_f5".into(),
        AlgebraFile::new(dual_numbers(f5)).with_map("R", dual_numbers_rb(f5)),
    ));
    let pj = dual_numbers(q).relabeled(Label::Dot).expect("relabel");
    let regular = Module::Bimodule(pj.regular_bimodule(Label::Dot).expect("dot"));
    out.push((
        "dual_numbers_prejordan".into(),
        AlgebraFile::new(pj.clone())
            .with_map("R", dual_numbers_rb(q))
            .with_map("T", dual_numbers_rb(q))
            .with_module(regular),
    ));
    out.push((
        "dual_numbers_dendriform".into(),
        AlgebraFile::new(dual_numbers_dendriform(q))
            .with_map("beta", Matrix::from_i64(q, &[&[2, 0], &[0, 4]])),
    ));
    let bim = pj.regular_bimodule(Label::Dot).expect("dot");
    let jd = cons::jdend_from_o_op(&pj, &bim, &dual_numbers_rb(q), Options::default())
        .expect("R is an O-operator")
        .output;
    out.push(("dual_numbers_jdendriform".into(), AlgebraFile::new(jd)));

    let c = q.from_i64(2);
    let poly = twisted_truncated_polynomials(q, 3, &c);
    let euler = inverse_euler_operator(q, 3);
    let poly_adjoint = Module::Representation(poly.adjoint_representation().expect("circ"));
    out.push((
        "twisted_polynomials".into(),
        AlgebraFile::new(poly.clone())
            .with_map("R", euler.clone())
            .with_map("R1", euler.clone())
            .with_map("R2", euler.scale(&q.from_i64(3)))
            .with_module(poly_adjoint),
    ));
    let jd_poly = cons::commuting_rb_jdendriform(
        &poly,
        &euler,
        &euler.scale(&q.from_i64(3)),
        Options::default(),
    )
    .expect("commuting Rota-Baxter pair")
    .output;
    out.push((
        "twisted_polynomials_jdendriform".into(),
        AlgebraFile::new(jd_poly),
    ));
    out.push((
        "zero_algebra".into(),
        AlgebraFile::new(zero_algebra(q, 1, Label::Circ)),
    ));
    out
}

/// Parameter points `(a, b, l1, l2)` of the shipped worked-example fixtures.
pub const EXAMPLE_POINTS: [(i64, i64, i64, i64); 3] = [(1, 1, 1, 1), (2, 3, 1, 2), (1, -1, 0, 3)];

/// `[2, -1]` becomes `"2_m1"`.
pub fn point_name(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| {
            if *v < 0 {
                format!("m{}", -v)
            } else {
                v.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("_")
}
