//! Seeded instance generators for the property and acceptance suites.
//!
//! Every generator follows a construction whose hypotheses hold by design
//! (Hom-associative commutative algebras with multiplicative twists, Yau
//! twists, square-zero extensions, Rota-Baxter operators commuting with the
//! twist), so the generated premises are guaranteed rather than assumed.
#![allow(dead_code)]

use homjordan::algebra::{HomAlgebra, Label, Tensor};
use homjordan::fixtures;
use homjordan::linalg::{Matrix, Vector};
use homjordan::operators::{commute_check, search_rota_baxter_fp, verify_rota_baxter, Policy};
use homjordan::scalar::{Field, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn f5() -> Field {
    Field::prime(5).unwrap()
}

pub fn fields() -> [Field; 2] {
    [Field::Rational, f5()]
}

pub fn scalar(field: Field, rng: &mut Rng8) -> Scalar {
    field.from_i64(rng.gen_range(-3..=3))
}

pub fn nonzero(field: Field, rng: &mut Rng8) -> Scalar {
    loop {
        let s = scalar(field, rng);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_vector(field: Field, len: usize, rng: &mut Rng8) -> Vector {
    Vector::from_scalars(field, (0..len).map(|_| scalar(field, rng)).collect()).unwrap()
}

pub fn random_matrix(field: Field, rows: usize, cols: usize, rng: &mut Rng8) -> Matrix {
    let mut m = Matrix::zeros(field, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, scalar(field, rng));
        }
    }
    m
}

/// A Hom-Jordan algebra with a family of Rota-Baxter operators (weight
/// zero, commuting with the twist, pairwise commuting).
#[derive(Clone, Debug)]
pub struct JordanInstance {
    pub recipe: &'static str,
    pub algebra: HomAlgebra,
    pub operators: Vec<Matrix>,
    /// True when the product is associative up to the twist.
    pub hom_associative: bool,
}

/// `x *' y = beta(x) * beta(y)` with twist `beta alpha`.
pub fn yau(alg: &HomAlgebra, beta: &Matrix) -> HomAlgebra {
    homjordan::constructions::yau_twist(alg, beta, homjordan::Suite::HomJordan, Default::default())
        .map(|r| r.output)
        .unwrap_or_else(|_| {
            homjordan::constructions::yau_twist(
                alg,
                beta,
                homjordan::Suite::HomJordan,
                homjordan::constructions::Options::unchecked(),
            )
            .unwrap()
            .output
        })
}

/// Twisted truncated polynomials with scalar multiples of the inverse
/// Euler operator.
fn truncated(field: Field, rng: &mut Rng8) -> JordanInstance {
    let n = rng.gen_range(1..=4);
    let c = nonzero(field, rng);
    let alg = fixtures::twisted_truncated_polynomials(field, n, &c);
    let e = fixtures::inverse_euler_operator(field, n);
    let operators = (0..3).map(|_| e.scale(&scalar(field, rng))).collect();
    JordanInstance {
        recipe: "truncated-polynomials",
        algebra: alg,
        operators,
        hom_associative: true,
    }
}

/// Unital `K[t]/(t^n)` with scalar multiples of integration, untwisted.
fn integration(field: Field, rng: &mut Rng8) -> JordanInstance {
    let n = rng.gen_range(2..=4);
    let mut t = Tensor::zeros(field, n);
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                t.set(i, j, i + j, field.one());
            }
        }
    }
    let alg = HomAlgebra::single(Label::Circ, t, Matrix::identity(field, n)).unwrap();
    let mut int = Matrix::zeros(field, n, n);
    for k in 0..n - 1 {
        int.set(k + 1, k, field.ratio(1, k as i64 + 1).unwrap());
    }
    let operators = (0..3).map(|_| int.scale(&scalar(field, rng))).collect();
    JordanInstance {
        recipe: "integration",
        algebra: alg,
        operators,
        hom_associative: true,
    }
}

/// The three-dimensional family with `a = b`, where every operator
/// `e1 -> l1 e3, e2 -> l2 e3` commutes with the twist; or `a != b` with the
/// zero operator only.
fn three_dim(field: Field, rng: &mut Rng8) -> JordanInstance {
    let a = nonzero(field, rng);
    let equal = rng.gen_bool(0.8);
    let b = if equal {
        a.clone()
    } else {
        nonzero(field, rng)
    };
    let alg = fixtures::hom_jordan3_with(field, &a, &b);
    let operators = if equal || a == b {
        (0..3)
            .map(|_| fixtures::hom_jordan3_rb_with(field, &scalar(field, rng), &scalar(field, rng)))
            .collect()
    } else {
        vec![Matrix::zeros(field, 3, 3)]
    };
    JordanInstance {
        recipe: "three-dim",
        algebra: alg,
        operators,
        hom_associative: false,
    }
}

/// `A + A` with `A` acting on itself and the second copy squaring to zero,
/// for a one- or two-dimensional Hom-associative commutative `A`.
/// Operators `(x, u) -> (0, S x)` with `S` a polynomial in the twist.
fn square_zero(field: Field, rng: &mut Rng8) -> JordanInstance {
    let n = rng.gen_range(1..=2);
    let c = nonzero(field, rng);
    let base = fixtures::twisted_truncated_polynomials(field, n, &c);
    let base = if n == 2 && rng.gen_bool(0.5) {
        let d2 = fixtures::dual_numbers(field);
        let beta = Matrix::diagonal(field, &[field.one(), c.clone()]);
        yau(&d2, &beta)
    } else {
        base
    };
    let rep = base.adjoint_representation().unwrap();
    let alg = homjordan::constructions::semidirect_jordan(&base, &rep)
        .unwrap()
        .output;
    let alpha = base.twist();
    let operators = (0..3)
        .map(|_| {
            let s = Matrix::identity(field, n)
                .scale(&scalar(field, rng))
                .add(&alpha.scale(&scalar(field, rng)))
                .unwrap();
            let mut r = Matrix::zeros(field, 2 * n, 2 * n);
            for i in 0..n {
                for j in 0..n {
                    r.set(n + i, j, s.get(i, j).clone());
                }
            }
            r
        })
        .collect();
    JordanInstance {
        recipe: "square-zero",
        algebra: alg,
        operators,
        hom_associative: true,
    }
}

/// Dual numbers Yau-twisted by `u -> u, t -> c t` over F_5, with every
/// strict Rota-Baxter operator found by exhaustive search. Operators are
/// kept only if they commute with the first one.
fn searched(field: Field, rng: &mut Rng8) -> JordanInstance {
    let c = nonzero(field, rng);
    let beta = Matrix::diagonal(field, &[field.one(), c]);
    let alg = yau(&fixtures::dual_numbers(field), &beta);
    let found = search_rota_baxter_fp(&alg, Label::Circ, None, Policy::Strict, 1_000).unwrap();
    let first = found[rng.gen_range(0..found.len())].clone();
    let mut operators = vec![first.clone()];
    for r in found {
        if operators.len() < 3 && commute_check(&first, &r).unwrap().passed && r != first {
            operators.push(r);
        }
    }
    JordanInstance {
        recipe: "searched",
        algebra: alg,
        operators,
        hom_associative: true,
    }
}

/// Round-robin over all recipes; `searched` only over prime fields.
pub fn jordan_instances(field: Field, count: usize, seed: u64) -> Vec<JordanInstance> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    let mut k = 0usize;
    while out.len() < count {
        let inst = match k % 5 {
            0 => truncated(field, &mut rng),
            1 => integration(field, &mut rng),
            2 => three_dim(field, &mut rng),
            3 => square_zero(field, &mut rng),
            _ => match field {
                Field::Prime(_) => searched(field, &mut rng),
                Field::Rational => truncated(field, &mut rng),
            },
        };
        k += 1;
        debug_assert!(inst.operators.iter().all(|r| verify_rota_baxter(
            &inst.algebra,
            Label::Circ,
            r,
            Policy::Strict
        )
        .unwrap()
        .overall));
        out.push(inst);
    }
    out
}

/// The Hom-dendriform algebra `x > y = R(x) y`, `x < y = x R(y)` of a
/// Hom-associative algebra and a Rota-Baxter operator commuting with the
/// twist.
pub fn rb_dendriform(alg: &HomAlgebra, r: &Matrix) -> HomAlgebra {
    let field = alg.field();
    let n = alg.dim();
    let (_, t) = alg.sole_product().unwrap();
    let prec = Tensor::from_fn(field, n, |i, j| {
        t.product(&alg.basis_vector(i), &r.column(j)).unwrap()
    });
    let succ = Tensor::from_fn(field, n, |i, j| {
        t.product(&r.column(i), &alg.basis_vector(j)).unwrap()
    });
    HomAlgebra::split(prec, succ, alg.twist().clone()).unwrap()
}

/// Upper triangular 2x2 matrices on `{E11, E12, E22}` (associative, not
/// commutative, identity twist) with `R(E22) = l E12`.
pub fn triangular(field: Field, rng: &mut Rng8) -> (HomAlgebra, Matrix) {
    let mut t = Tensor::zeros(field, 3);
    let one = field.one();
    // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
    t.set(0, 0, 0, one.clone());
    t.set(0, 1, 1, one.clone());
    t.set(1, 2, 1, one.clone());
    t.set(2, 2, 2, one);
    let alg = HomAlgebra::single(Label::Circ, t, Matrix::identity(field, 3)).unwrap();
    let mut r = Matrix::zeros(field, 3, 3);
    r.set(1, 2, scalar(field, rng));
    (alg, r)
}
