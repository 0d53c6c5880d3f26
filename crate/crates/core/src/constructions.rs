//! Constructions that turn verified inputs into new Hom-algebras.
//!
//! Each construction checks its hypotheses unless `Options::checked` is
//! off, and records the suite its output is expected to pass.

use serde::Serialize;

use crate::algebra::{Bimodule, HomAlgebra, Label, Representation, Tensor};
use crate::error::{Error, Result};
use crate::identity::{check_suite, Suite};
use crate::linalg::{Matrix, Vector};
use crate::operators::{
    commute_check, verify_o_operator_jordan, verify_o_operator_prejordan, verify_rota_baxter,
    OperatorReport, Policy,
};
use crate::report::{Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub policy: Policy,
    /// Verify hypotheses before constructing.
    pub checked: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options {
            policy: Policy::Strict,
            checked: true,
        }
    }
}

impl Options {
    pub fn unchecked() -> Options {
        Options {
            checked: false,
            ..Options::default()
        }
    }

    pub fn with_policy(policy: Policy) -> Options {
        Options {
            policy,
            ..Options::default()
        }
    }
}

/// A named equality checked on the output, such as the morphism property
/// of an O-operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub output: HomAlgebra,
    pub construction: &'static str,
    pub expected_suite: Suite,
    /// False when the output is only expected to pass conditionally (the
    /// semidirect sums, Yau twists outside the J-dendriform case).
    pub guaranteed: bool,
    pub assertions: Vec<Assertion>,
}

impl ConstructionResult {
    fn new(output: HomAlgebra, construction: &'static str, expected_suite: Suite) -> Self {
        ConstructionResult {
            output,
            construction,
            expected_suite,
            guaranteed: true,
            assertions: Vec::new(),
        }
    }

    fn assert(mut self, name: &str, verdict: Verdict) -> Self {
        self.assertions.push(Assertion {
            name: name.into(),
            verdict,
        });
        self
    }

    pub fn assertions_hold(&self) -> bool {
        self.assertions.iter().all(|a| a.verdict.passed)
    }
}

fn require_suite(algebra: &HomAlgebra, suite: Suite, what: &str) -> Result<()> {
    let report = check_suite(algebra, suite)?;
    match report.first_failure() {
        None => Ok(()),
        Some(f) => Err(Error::Precondition(format!(
            "{what} fails {suite} ({})",
            f.identity
        ))),
    }
}

fn require_operator(report: OperatorReport, what: &str) -> Result<()> {
    if report.overall {
        return Ok(());
    }
    let failed = if !report.quadratic_identity.passed {
        "quadratic identity"
    } else {
        "twist commutation"
    };
    Err(Error::Precondition(format!(
        "{what} is not an operator under the {} policy ({failed} fails)",
        report.policy
    )))
}

/// `x o y = x . y + y . x`.
pub fn anticommutator(algebra: &HomAlgebra, opts: Options) -> Result<ConstructionResult> {
    let dot = algebra.product(Label::Dot)?;
    if opts.checked {
        require_suite(algebra, Suite::HomPreJordan, "input")?;
    }
    let circ = dot.add(&dot.transpose());
    let out = rebuild(algebra, Label::Circ, circ, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "anticommutator",
        Suite::HomJordan,
    ))
}

/// `x . y = R(x) o y` for a Rota-Baxter operator `R` on `(A, o, alpha)`.
pub fn rb_prejordan(algebra: &HomAlgebra, r: &Matrix, opts: Options) -> Result<ConstructionResult> {
    let circ = algebra.product(Label::Circ)?;
    if opts.checked {
        require_suite(algebra, Suite::HomJordan, "input")?;
        require_operator(
            verify_rota_baxter(algebra, Label::Circ, r, opts.policy)?,
            "R",
        )?;
    } else if r.rows() != algebra.dim() || r.cols() != algebra.dim() {
        return Err(Error::Dimension(
            "R must be square of the algebra's dimension".into(),
        ));
    }
    let images: Vec<Vector> = (0..algebra.dim()).map(|i| r.column(i)).collect();
    let dot = Tensor::from_fn(algebra.field(), algebra.dim(), |i, j| {
        circ.product_unchecked(&images[i], &algebra.basis_vector(j))
    });
    let out = rebuild(algebra, Label::Dot, dot, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "rb-prejordan",
        Suite::HomPreJordan,
    ))
}

/// `x . y = x > y + y < x` from a Hom-pre-alternative algebra.
pub fn prealt_to_prejordan(algebra: &HomAlgebra, opts: Options) -> Result<ConstructionResult> {
    let derived = algebra.derive_products()?;
    if opts.checked {
        require_suite(algebra, Suite::HomPreAlt, "input")?;
    }
    let out = rebuild(algebra, Label::Dot, derived.dot, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "prealt-to-prejordan",
        Suite::HomPreJordan,
    ))
}

/// The vertical Hom-pre-Jordan algebra `x . y = x > y + y < x` of a
/// two-product algebra.
pub fn vertical(algebra: &HomAlgebra, opts: Options) -> Result<ConstructionResult> {
    let derived = algebra.derive_products()?;
    if opts.checked {
        require_suite(algebra, Suite::HomJDendriform, "input")?;
    }
    let out = rebuild(algebra, Label::Dot, derived.dot, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "vertical",
        Suite::HomPreJordan,
    ))
}

/// The horizontal Hom-pre-Jordan algebra `x <> y = x > y + x < y`, carried
/// under the `dot` label.
pub fn horizontal(algebra: &HomAlgebra, opts: Options) -> Result<ConstructionResult> {
    let derived = algebra.derive_products()?;
    if opts.checked {
        require_suite(algebra, Suite::HomJDendriform, "input")?;
    }
    let out = rebuild(
        algebra,
        Label::Dot,
        derived.diamond,
        algebra.twist().clone(),
    )?;
    Ok(ConstructionResult::new(
        out,
        "horizontal",
        Suite::HomPreJordan,
    ))
}

/// Block tensor on `A + V`: `a` on `A x A`, `left(e_i) f_j` on `A x V` and
/// `right(e_j) f_i` on `V x A`.
fn semidirect_tensor(a: &Tensor, left: &[Matrix], right: &[Matrix], module_dim: usize) -> Tensor {
    let field = a.field();
    let n = a.dim();
    let mut t = Tensor::zeros(field, n + module_dim);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                t.set(i, j, k, a.get(i, j, k).clone());
            }
        }
        for v in 0..module_dim {
            for w in 0..module_dim {
                t.set(i, n + v, n + w, left[i].get(w, v).clone());
                t.set(n + v, i, n + w, right[i].get(w, v).clone());
            }
        }
    }
    t
}

/// `(x + u) * (y + v) = x o y + rho(x) v + rho(y) u` with twist
/// `alpha + phi`. Passes HOM_JORDAN iff the data is a representation.
pub fn semidirect_jordan(algebra: &HomAlgebra, rep: &Representation) -> Result<ConstructionResult> {
    let circ = algebra.product(Label::Circ)?;
    let t = semidirect_tensor(circ, &rep.rho, &rep.rho, rep.module_dim);
    let twist = algebra.twist().direct_sum(&rep.phi);
    let out = HomAlgebra::single(Label::Circ, t, twist)?;
    let mut res = ConstructionResult::new(out, "semidirect-jordan", Suite::HomJordan);
    res.guaranteed = false;
    Ok(res)
}

/// `(x + u) * (y + v) = x . y + l(x) v + r(y) u` with twist `alpha + phi`.
/// Passes HOM_PRE_JORDAN iff the data is a bimodule.
pub fn semidirect_prejordan(algebra: &HomAlgebra, bim: &Bimodule) -> Result<HomAlgebra> {
    let dot = algebra.product(Label::Dot)?;
    let t = semidirect_tensor(dot, &bim.left, &bim.right, bim.module_dim);
    HomAlgebra::single(Label::Dot, t, algebra.twist().direct_sum(&bim.phi))
}

/// `u * v = rho(T u) v` on the module, twisted by `phi`. Asserts that `T`
/// maps the anticommutator of `*` to `o`.
pub fn o_op_prejordan_on_module(
    algebra: &HomAlgebra,
    rep: &Representation,
    t: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    let circ = algebra.product(Label::Circ)?;
    if opts.checked {
        require_suite(algebra, Suite::HomJordan, "input")?;
        require_operator(verify_o_operator_jordan(algebra, rep, t, opts.policy)?, "T")?;
    } else if t.rows() != algebra.dim() || t.cols() != rep.module_dim {
        return Err(Error::Dimension(
            "T must map the module into the algebra".into(),
        ));
    }
    let field = algebra.field();
    let m = rep.module_dim;
    let acts: Vec<Matrix> = (0..m).map(|u| rep.act(&t.column(u))).collect();
    let dot = Tensor::from_fn(field, m, |u, v| acts[u].column(v));
    let out = HomAlgebra::single(Label::Dot, dot.clone(), rep.phi.clone())?;
    let morphism = transfer_morphism(&dot.add(&dot.transpose()), circ, t);
    Ok(
        ConstructionResult::new(out, "o-op-prejordan", Suite::HomPreJordan)
            .assert("T(u*v + v*u) = T(u) o T(v)", morphism),
    )
}

/// `T(u * v) = T(u) # T(v)` on all module basis pairs.
fn transfer_morphism(on_module: &Tensor, on_algebra: &Tensor, t: &Matrix) -> Verdict {
    let m = on_module.dim();
    for u in 0..m {
        for v in 0..m {
            let lhs = t.apply(&on_module.basis_product(u, v)).expect("shape");
            let rhs = on_algebra.product_unchecked(&t.column(u), &t.column(v));
            if lhs != rhs {
                return Verdict::fail(Witness::new(vec![u, v], lhs, rhs));
            }
        }
    }
    Verdict::pass()
}

/// `x . y = T(rho(x) T^-1(y))` on `A` for an invertible O-operator `T`.
/// Whether the anticommutator of `.` equals `o` is reported as an
/// assertion.
pub fn compatible_prejordan_from_invertible(
    algebra: &HomAlgebra,
    rep: &Representation,
    t: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    let circ = algebra.product(Label::Circ)?;
    let inv = t.invert()?;
    if opts.checked {
        require_suite(algebra, Suite::HomJordan, "input")?;
        require_operator(verify_o_operator_jordan(algebra, rep, t, opts.policy)?, "T")?;
    }
    let n = algebra.dim();
    let dot = Tensor::from_fn(algebra.field(), n, |i, j| {
        let y = inv.column(j);
        t.apply(&rep.rho[i].apply(&y).expect("shape"))
            .expect("shape")
    });
    let compatible = tensor_equality(&dot.add(&dot.transpose()), circ);
    let out = rebuild(algebra, Label::Dot, dot, algebra.twist().clone())?;
    Ok(
        ConstructionResult::new(out, "compatible-prejordan", Suite::HomPreJordan)
            .assert("x.y + y.x = x o y", compatible),
    )
}

fn tensor_equality(lhs: &Tensor, rhs: &Tensor) -> Verdict {
    let n = lhs.dim();
    for i in 0..n {
        for j in 0..n {
            let (l, r) = (lhs.basis_product(i, j), rhs.basis_product(i, j));
            if l != r {
                return Verdict::fail(Witness::new(vec![i, j], l, r));
            }
        }
    }
    Verdict::pass()
}

/// `u < v = r(T u) v`, `u > v = l(T u) v` on the module, twisted by `phi`.
/// Asserts that `T` maps the vertical product to `.`.
pub fn jdend_from_o_op(
    algebra: &HomAlgebra,
    bim: &Bimodule,
    t: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    let dot = algebra.product(Label::Dot)?;
    if opts.checked {
        require_suite(algebra, Suite::HomPreJordan, "input")?;
        require_operator(
            verify_o_operator_prejordan(algebra, bim, t, opts.policy)?,
            "T",
        )?;
    } else if t.rows() != algebra.dim() || t.cols() != bim.module_dim {
        return Err(Error::Dimension(
            "T must map the module into the algebra".into(),
        ));
    }
    let field = algebra.field();
    let m = bim.module_dim;
    let lefts: Vec<Matrix> = (0..m).map(|u| bim.act_left(&t.column(u))).collect();
    let rights: Vec<Matrix> = (0..m).map(|u| bim.act_right(&t.column(u))).collect();
    let prec = Tensor::from_fn(field, m, |u, v| rights[u].column(v));
    let succ = Tensor::from_fn(field, m, |u, v| lefts[u].column(v));
    let out = HomAlgebra::split(prec, succ, bim.phi.clone())?;
    let vertical = out.derive_products()?.dot;
    let morphism = transfer_morphism(&vertical, dot, t);
    Ok(
        ConstructionResult::new(out, "jdend-from-o-op", Suite::HomJDendriform)
            .assert("T(u > v + v < u) = T(u) . T(v)", morphism),
    )
}

/// `x < y = y . R(x)`, `x > y = R(x) . y` for a Rota-Baxter operator on
/// `(A, ., alpha)`.
pub fn rb_jdendriform_on_prejordan(
    algebra: &HomAlgebra,
    r: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    let dot = algebra.product(Label::Dot)?;
    if opts.checked {
        require_suite(algebra, Suite::HomPreJordan, "input")?;
        require_operator(
            verify_rota_baxter(algebra, Label::Dot, r, opts.policy)?,
            "R",
        )?;
    }
    let field = algebra.field();
    let n = algebra.dim();
    let images: Vec<Vector> = (0..n).map(|i| r.column(i)).collect();
    let prec = Tensor::from_fn(field, n, |i, j| {
        dot.product_unchecked(&algebra.basis_vector(j), &images[i])
    });
    let succ = Tensor::from_fn(field, n, |i, j| {
        dot.product_unchecked(&images[i], &algebra.basis_vector(j))
    });
    let out = HomAlgebra::split(prec, succ, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "rb-jdendriform",
        Suite::HomJDendriform,
    ))
}

/// `x < y = R1(y) o R2(x)`, `x > y = R1 R2(x) o y` for commuting
/// Rota-Baxter operators on a Hom-Jordan algebra.
pub fn commuting_rb_jdendriform(
    algebra: &HomAlgebra,
    r1: &Matrix,
    r2: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    let circ = algebra.product(Label::Circ)?;
    if opts.checked {
        require_suite(algebra, Suite::HomJordan, "input")?;
        require_operator(
            verify_rota_baxter(algebra, Label::Circ, r1, opts.policy)?,
            "R1",
        )?;
        require_operator(
            verify_rota_baxter(algebra, Label::Circ, r2, opts.policy)?,
            "R2",
        )?;
        if !commute_check(r1, r2)?.passed {
            return Err(Error::Precondition("R1 and R2 do not commute".into()));
        }
    }
    let field = algebra.field();
    let n = algebra.dim();
    let r12 = r1.mul(r2)?;
    let prec = Tensor::from_fn(field, n, |i, j| {
        circ.product_unchecked(&r1.column(j), &r2.column(i))
    });
    let succ = Tensor::from_fn(field, n, |i, j| {
        circ.product_unchecked(&r12.column(i), &algebra.basis_vector(j))
    });
    let out = HomAlgebra::split(prec, succ, algebra.twist().clone())?;
    Ok(ConstructionResult::new(
        out,
        "commuting-rb-jdendriform",
        Suite::HomJDendriform,
    ))
}

/// `x <^t y = y < x`, `x >^t y = x > y`. The vertical and horizontal
/// products trade places; transposing `>` as well would leave the class.
pub fn transpose_jdendriform(algebra: &HomAlgebra, opts: Options) -> Result<ConstructionResult> {
    let prec = algebra.product(Label::Prec)?;
    let succ = algebra.product(Label::Succ)?;
    if opts.checked {
        require_suite(algebra, Suite::HomJDendriform, "input")?;
    }
    let out = HomAlgebra::split(prec.transpose(), succ.clone(), algebra.twist().clone())?;
    let out = keep_basis(algebra, out);
    Ok(ConstructionResult::new(
        out,
        "transpose",
        Suite::HomJDendriform,
    ))
}

/// Yau twist by an algebra morphism `beta`: every product becomes
/// `x *' y = beta(x) * beta(y)` and the twist becomes `beta alpha`. The
/// output is guaranteed to stay in `suite` for J-dendriform inputs with
/// identity twist; otherwise the expectation is only recorded.
pub fn yau_twist(
    algebra: &HomAlgebra,
    beta: &Matrix,
    suite: Suite,
    opts: Options,
) -> Result<ConstructionResult> {
    if beta.rows() != algebra.dim() || beta.cols() != algebra.dim() {
        return Err(Error::Dimension(
            "beta must be square of the algebra's dimension".into(),
        ));
    }
    if opts.checked {
        let v = algebra.is_morphism_of_all(beta)?;
        if !v.passed {
            return Err(Error::Precondition(
                "beta is not an algebra morphism".into(),
            ));
        }
        require_suite(algebra, suite, "input")?;
    }
    let field = algebra.field();
    let n = algebra.dim();
    let images: Vec<Vector> = (0..n).map(|i| beta.column(i)).collect();
    let products = algebra
        .products()
        .iter()
        .map(|(label, t)| {
            let twisted =
                Tensor::from_fn(field, n, |i, j| t.product_unchecked(&images[i], &images[j]));
            (*label, twisted)
        })
        .collect();
    let twist = beta.mul(algebra.twist())?;
    let out = keep_basis(algebra, HomAlgebra::new(field, products, twist)?);
    let mut res = ConstructionResult::new(out, "yau-twist", suite);
    res.guaranteed =
        suite == Suite::HomJDendriform && *algebra.twist() == Matrix::identity(field, n);
    Ok(res)
}

/// The Hom-pre-Jordan structure induced on the image `T(V)` of an
/// O-operator: `T(u) . T(v) = T(rho(T u) v)`, in the basis of pivot
/// columns of `T`. Errors when the product is not well defined on the
/// image or leaves it.
pub fn image_prejordan(
    algebra: &HomAlgebra,
    rep: &Representation,
    t: &Matrix,
    opts: Options,
) -> Result<ConstructionResult> {
    if opts.checked {
        require_suite(algebra, Suite::HomJordan, "input")?;
        require_operator(verify_o_operator_jordan(algebra, rep, t, opts.policy)?, "T")?;
    }
    let field = algebra.field();
    let pivots = t.pivot_columns();
    let basis: Vec<Vector> = pivots.iter().map(|&j| t.column(j)).collect();
    let k = basis.len();
    let frame = Matrix::from_columns(field, algebra.dim(), &basis);
    let coords = |v: &Vector, what: &str| {
        frame
            .solve(v)
            .ok_or_else(|| Error::Invalid(format!("{what} leaves the image of T")))
    };
    for w in t.kernel() {
        for x in &basis {
            let image = t.apply(&rep.act(x).apply(&w)?)?;
            if !image.is_zero() {
                return Err(Error::Invalid(
                    "product on T(V) is not well defined: T(rho(x) w) != 0 for w in ker T".into(),
                ));
            }
        }
    }
    let mut dot = Tensor::zeros(field, k);
    for (a, v) in basis.iter().enumerate().take(k) {
        let act = rep.act(v);
        for (b, &pb) in pivots.iter().enumerate() {
            let value = t.apply(&act.column(pb))?;
            let c = coords(&value, "product")?;
            for (idx, s) in c.coords().iter().enumerate() {
                dot.set(a, b, idx, s.clone());
            }
        }
    }
    let mut twist_cols = Vec::with_capacity(k);
    for b in &basis {
        twist_cols.push(coords(&algebra.apply_twist(b)?, "twist")?);
    }
    let twist = Matrix::from_columns(field, k, &twist_cols);
    let out = HomAlgebra::single(Label::Dot, dot, twist)?;
    Ok(ConstructionResult::new(
        out,
        "image-prejordan",
        Suite::HomPreJordan,
    ))
}

fn rebuild(source: &HomAlgebra, label: Label, t: Tensor, twist: Matrix) -> Result<HomAlgebra> {
    Ok(keep_basis(source, HomAlgebra::single(label, t, twist)?))
}

fn keep_basis(source: &HomAlgebra, mut out: HomAlgebra) -> HomAlgebra {
    if let Some(names) = source.basis_names() {
        out.set_basis(Some(names.to_vec()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn lax() -> Options {
        Options::with_policy(Policy::Lax)
    }

    #[test]
    fn rb_prejordan_reproduces_the_example_table() {
        let (a, b, l1, l2) = (2, 3, 1, 2);
        let alg = fixtures::hom_jordan3(Q, a, b);
        let r = fixtures::hom_jordan3_rb(Q, l1, l2);
        assert!(matches!(
            rb_prejordan(&alg, &r, Options::default()),
            Err(Error::Precondition(_))
        ));
        let res = rb_prejordan(&alg, &r, lax()).unwrap();
        let dot = res.output.product(Label::Dot).unwrap();
        let e3 = |c: Scalar| {
            let mut v = Vector::zeros(Q, 3);
            v.set(2, c);
            v
        };
        use crate::scalar::Scalar;
        let half = Q.ratio(1, 2).unwrap();
        let bq = Q.from_i64(b);
        assert_eq!(dot.basis_product(0, 0), e3(Q.from_i64(l1) * bq.clone()));
        assert_eq!(
            dot.basis_product(0, 1),
            e3(Q.from_i64(l1) * bq.clone() * half.clone())
        );
        assert_eq!(dot.basis_product(1, 0), e3(Q.from_i64(l2) * bq.clone()));
        assert_eq!(dot.basis_product(1, 1), e3(Q.from_i64(l2) * bq * half));
        for k in 0..3 {
            assert!(dot.basis_product(2, k).is_zero());
            assert!(dot.basis_product(k, 2).is_zero());
        }
        assert!(check_suite(&res.output, Suite::HomPreJordan)
            .unwrap()
            .passed());
    }

    #[test]
    fn rb_prejordan_on_dual_numbers() {
        let d2 = fixtures::dual_numbers(Q);
        let res = rb_prejordan(&d2, &fixtures::dual_numbers_rb(Q), Options::default()).unwrap();
        let dot = res.output.product(Label::Dot).unwrap();
        assert_eq!(dot.basis_product(0, 0), fixtures::vector(Q, &[0, 1]));
        assert!(dot.basis_product(0, 1).is_zero());
        assert!(dot.basis_product(1, 0).is_zero());
        assert!(dot.basis_product(1, 1).is_zero());
        let zero = rb_prejordan(&d2, &Matrix::zeros(Q, 2, 2), Options::default()).unwrap();
        assert!(zero.output.product(Label::Dot).unwrap().is_zero());
    }

    #[test]
    fn anticommutator_examples() {
        let alg = fixtures::hom_jordan3(Q, 1, 1);
        let dot = rb_prejordan(&alg, &fixtures::hom_jordan3_rb(Q, 1, 0), Options::default())
            .unwrap()
            .output;
        let circ = anticommutator(&dot, Options::default()).unwrap();
        let t = circ.output.product(Label::Circ).unwrap();
        assert_eq!(t.basis_product(0, 0), fixtures::vector(Q, &[0, 0, 2]));
        let half =
            Vector::from_scalars(Q, vec![Q.zero(), Q.zero(), Q.ratio(1, 2).unwrap()]).unwrap();
        assert_eq!(t.basis_product(0, 1), half);
        assert!(check_suite(&circ.output, Suite::HomJordan)
            .unwrap()
            .passed());

        let d2 = fixtures::dual_numbers(Q).relabeled(Label::Dot).unwrap();
        let c = anticommutator(&d2, Options::default()).unwrap();
        let two = Q.from_i64(2);
        assert_eq!(
            c.output.product(Label::Circ).unwrap(),
            &d2.product(Label::Dot).unwrap().scale(&two)
        );
    }

    #[test]
    fn o_operator_on_adjoint_matches_rb() {
        for alg in [fixtures::hom_jordan3(Q, 1, 1), fixtures::dual_numbers(Q)] {
            let r = if alg.dim() == 3 {
                fixtures::hom_jordan3_rb(Q, 1, 2)
            } else {
                fixtures::dual_numbers_rb(Q)
            };
            let rep = alg.adjoint_representation().unwrap();
            let a = o_op_prejordan_on_module(&alg, &rep, &r, Options::default()).unwrap();
            let b = rb_prejordan(&alg, &r, Options::default()).unwrap();
            assert_eq!(
                a.output.product(Label::Dot).unwrap(),
                b.output.product(Label::Dot).unwrap()
            );
            assert!(a.assertions_hold());
        }
    }

    #[test]
    fn compatible_prejordan_identity_map() {
        let d2 = fixtures::dual_numbers(Q);
        let rep = d2.adjoint_representation().unwrap();
        let id = Matrix::identity(Q, 2);
        assert!(matches!(
            compatible_prejordan_from_invertible(&d2, &rep, &id, Options::default()),
            Err(Error::Precondition(_))
        ));
        let res =
            compatible_prejordan_from_invertible(&d2, &rep, &id, Options::unchecked()).unwrap();
        assert_eq!(
            res.output.product(Label::Dot).unwrap(),
            d2.product(Label::Circ).unwrap()
        );
        assert!(!res.assertions_hold());
        assert!(matches!(
            compatible_prejordan_from_invertible(
                &d2,
                &rep,
                &Matrix::zeros(Q, 2, 2),
                Options::unchecked()
            ),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn jdend_from_regular_bimodule() {
        let pj = fixtures::dual_numbers(Q).relabeled(Label::Dot).unwrap();
        let bim = pj.regular_bimodule(Label::Dot).unwrap();
        let res =
            jdend_from_o_op(&pj, &bim, &fixtures::dual_numbers_rb(Q), Options::default()).unwrap();
        let out = &res.output;
        let t = fixtures::vector(Q, &[0, 1]);
        assert_eq!(out.product(Label::Succ).unwrap().basis_product(0, 0), t);
        assert_eq!(out.product(Label::Prec).unwrap().basis_product(0, 0), t);
        assert!(res.assertions_hold());
        assert!(check_suite(out, Suite::HomJDendriform).unwrap().passed());
        let tr = transpose_jdendriform(out, Options::default())
            .unwrap()
            .output;
        let (a, b) = (
            out.derive_products().unwrap(),
            tr.derive_products().unwrap(),
        );
        assert_eq!(b.dot, a.diamond);
        assert_eq!(b.diamond, a.dot);
        assert_eq!(b.circ, a.circ);
        let back = transpose_jdendriform(&tr, Options::default())
            .unwrap()
            .output;
        assert_eq!(&back, out);
    }

    #[test]
    fn commuting_rb_on_example_is_zero() {
        let alg = fixtures::hom_jordan3(Q, 1, 1);
        let r = fixtures::hom_jordan3_rb(Q, 1, 2);
        let res = commuting_rb_jdendriform(&alg, &r, &r, Options::default()).unwrap();
        assert!(res.output.products().values().all(Tensor::is_zero));
        assert!(res.output.derive_products().unwrap().circ.is_zero());
        let a = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let d2 = fixtures::dual_numbers(Q);
        assert!(commuting_rb_jdendriform(
            &d2,
            &fixtures::dual_numbers_rb(Q),
            &a,
            Options::unchecked()
        )
        .is_ok());
    }

    #[test]
    fn yau_twist_examples() {
        let d2 = fixtures::dual_numbers(Q);
        let same = yau_twist(
            &d2,
            &Matrix::identity(Q, 2),
            Suite::HomJordan,
            Options::default(),
        )
        .unwrap();
        assert_eq!(same.output, d2);
        let zero = yau_twist(
            &d2,
            &Matrix::zeros(Q, 2, 2),
            Suite::HomJordan,
            Options::unchecked(),
        )
        .unwrap();
        assert!(zero.output.twist().is_zero());
        assert!(check_suite(&zero.output, Suite::HomJordan)
            .unwrap()
            .passed());
        let beta = Matrix::from_i64(Q, &[&[1, 0], &[0, 5]]);
        let tw = yau_twist(&d2, &beta, Suite::HomJordan, Options::default()).unwrap();
        assert_eq!(
            tw.output.product(Label::Circ).unwrap().basis_product(0, 1),
            fixtures::vector(Q, &[0, 5])
        );
        assert!(check_suite(&tw.output, Suite::HomJordan).unwrap().passed());
        let not_morphism = Matrix::from_i64(Q, &[&[2, 0], &[0, 1]]);
        assert!(yau_twist(&d2, &not_morphism, Suite::HomJordan, Options::default()).is_err());
    }

    #[test]
    fn semidirect_examples() {
        let d2 = fixtures::dual_numbers(Q);
        let rep = d2.adjoint_representation().unwrap();
        let sd = semidirect_jordan(&d2, &rep).unwrap();
        assert_eq!(sd.output.dim(), 4);
        assert!(check_suite(&sd.output, Suite::HomJordan).unwrap().passed());
        let pj = d2.relabeled(Label::Dot).unwrap();
        let bim = pj.regular_bimodule(Label::Dot).unwrap();
        let sp = semidirect_prejordan(&pj, &bim).unwrap();
        assert!(check_suite(&sp, Suite::HomPreJordan).unwrap().passed());
    }

    #[test]
    fn image_of_rota_baxter_operator() {
        let d2 = fixtures::dual_numbers(Q);
        let rep = d2.adjoint_representation().unwrap();
        let res =
            image_prejordan(&d2, &rep, &fixtures::dual_numbers_rb(Q), Options::default()).unwrap();
        assert_eq!(res.output.dim(), 1);
        assert!(check_suite(&res.output, Suite::HomPreJordan)
            .unwrap()
            .passed());
    }
}
