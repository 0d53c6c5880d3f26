//! Rota-Baxter and O-operator verification, commutation checks, and
//! exhaustive search over prime fields.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Bimodule, HomAlgebra, Label, Representation, Tensor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::report::{write_witness, Verdict, Witness};
use crate::scalar::{Field, Scalar};

/// Default cap on the number of candidates `search_rota_baxter_fp` enumerates.
pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Whether operator verification requires commutation with the twist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Policy {
    /// Quadratic identity and twist commutation.
    #[default]
    Strict,
    /// Quadratic identity only.
    Lax,
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Policy::Strict => "strict",
            Policy::Lax => "lax",
        })
    }
}

impl FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Policy> {
        match s {
            "strict" => Ok(Policy::Strict),
            "lax" => Ok(Policy::Lax),
            _ => Err(Error::Invalid(format!("unknown policy {s:?}"))),
        }
    }
}

/// Both sub-verdicts of an operator check and the policy-dependent overall
/// verdict. Witness tuples index the operator's domain basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorReport {
    pub quadratic_identity: Verdict,
    pub twist_commutation: Verdict,
    pub policy: Policy,
    pub overall: bool,
}

impl OperatorReport {
    fn new(quadratic_identity: Verdict, twist_commutation: Verdict, policy: Policy) -> Self {
        let overall =
            quadratic_identity.passed && (policy == Policy::Lax || twist_commutation.passed);
        OperatorReport {
            quadratic_identity,
            twist_commutation,
            policy,
            overall,
        }
    }
}

impl fmt::Display for OperatorReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "operator ({} policy): {}",
            self.policy,
            if self.overall { "PASS" } else { "FAIL" }
        )?;
        for (name, v) in [
            ("quadratic identity", &self.quadratic_identity),
            ("twist commutation", &self.twist_commutation),
        ] {
            write!(f, "  {:<28} {}", name, v.label())?;
            if let Some(w) = &v.witness {
                write_witness(f, w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Checks `T(u) * T(v) = T(act(T u) v + act'(T v) u)` on all domain basis
/// pairs, where `act_left(x)` and `act_right(x)` give module matrices.
fn quadratic<L, R>(product: &Tensor, t: &Matrix, act_left: L, act_right: R) -> Verdict
where
    L: Fn(&Vector) -> Matrix,
    R: Fn(&Vector) -> Matrix,
{
    let field = t.field();
    let n = t.cols();
    let images: Vec<Vector> = (0..n).map(|j| t.column(j)).collect();
    for i in 0..n {
        let left = act_left(&images[i]);
        for j in 0..n {
            let lhs = product.product_unchecked(&images[i], &images[j]);
            let right = act_right(&images[j]);
            let mut inner = left
                .apply(&Vector::basis(field, n, j))
                .expect("square action");
            inner.add_assign(
                &right
                    .apply(&Vector::basis(field, n, i))
                    .expect("square action"),
            );
            let rhs = t.apply(&inner).expect("operator shape");
            if lhs != rhs {
                return Verdict::fail(Witness::new(vec![i, j], lhs, rhs));
            }
        }
    }
    Verdict::pass()
}

/// Checks `T phi = alpha T` column by column.
fn commutation(t: &Matrix, phi: &Matrix, alpha: &Matrix) -> Verdict {
    for j in 0..t.cols() {
        let e = Vector::basis(t.field(), t.cols(), j);
        let lhs = t.apply(&phi.apply(&e).expect("square")).expect("shape");
        let rhs = alpha.apply(&t.apply(&e).expect("shape")).expect("square");
        if lhs != rhs {
            return Verdict::fail(Witness::new(vec![j], lhs, rhs));
        }
    }
    Verdict::pass()
}

fn check_shape(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::Dimension(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Weight-zero Rota-Baxter check `R(x) * R(y) = R(R(x) * y + x * R(y))`
/// together with `R alpha = alpha R`.
pub fn verify_rota_baxter(
    algebra: &HomAlgebra,
    label: Label,
    r: &Matrix,
    policy: Policy,
) -> Result<OperatorReport> {
    let t = algebra.product(label)?;
    check_shape(r, algebra.dim(), algebra.dim(), "Rota-Baxter operator")?;
    if r.field() != algebra.field() {
        return Err(Error::FieldMismatch(algebra.field(), r.field()));
    }
    let quad = quadratic(t, r, |x| left_mult_by(t, x), |y| right_mult_by(t, y));
    let comm = commutation(r, algebra.twist(), algebra.twist());
    Ok(OperatorReport::new(quad, comm, policy))
}

fn left_mult_by(t: &Tensor, x: &Vector) -> Matrix {
    let n = t.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|j| t.product_unchecked(x, &Vector::basis(t.field(), n, j)))
        .collect();
    Matrix::from_columns(t.field(), n, &cols)
}

fn right_mult_by(t: &Tensor, y: &Vector) -> Matrix {
    let n = t.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|i| t.product_unchecked(&Vector::basis(t.field(), n, i), y))
        .collect();
    Matrix::from_columns(t.field(), n, &cols)
}

/// O-operator check for a representation of a Hom-Jordan algebra:
/// `T(u) o T(v) = T(rho(T u) v + rho(T v) u)` and `T phi = alpha T`.
pub fn verify_o_operator_jordan(
    algebra: &HomAlgebra,
    rep: &Representation,
    t: &Matrix,
    policy: Policy,
) -> Result<OperatorReport> {
    let circ = algebra.product(Label::Circ)?;
    check_shape(t, algebra.dim(), rep.module_dim, "O-operator")?;
    let quad = quadratic(circ, t, |x| rep.act(x), |y| rep.act(y));
    let comm = commutation(t, &rep.phi, algebra.twist());
    Ok(OperatorReport::new(quad, comm, policy))
}

/// O-operator check for a bimodule of a Hom-pre-Jordan algebra:
/// `T(u) . T(v) = T(l(T u) v + r(T v) u)` and `T phi = alpha T`.
pub fn verify_o_operator_prejordan(
    algebra: &HomAlgebra,
    bim: &Bimodule,
    t: &Matrix,
    policy: Policy,
) -> Result<OperatorReport> {
    let dot = algebra.product(Label::Dot)?;
    check_shape(t, algebra.dim(), bim.module_dim, "O-operator")?;
    let quad = quadratic(dot, t, |x| bim.act_left(x), |y| bim.act_right(y));
    let comm = commutation(t, &bim.phi, algebra.twist());
    Ok(OperatorReport::new(quad, comm, policy))
}

/// `R1 R2 = R2 R1`; a failure names the first basis vector where the two
/// composites differ.
pub fn commute_check(r1: &Matrix, r2: &Matrix) -> Result<Verdict> {
    if !r1.is_square() || r1.rows() != r2.rows() || r1.cols() != r2.cols() {
        return Err(Error::Dimension(
            "commute_check needs two square maps of one size".into(),
        ));
    }
    let ab = r1.mul(r2)?;
    let ba = r2.mul(r1)?;
    for j in 0..r1.cols() {
        let (lhs, rhs) = (ab.column(j), ba.column(j));
        if lhs != rhs {
            return Ok(Verdict::fail(Witness::new(vec![j], lhs, rhs)));
        }
    }
    Ok(Verdict::pass())
}

/// Per-entry constraint of a search pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Entry {
    Free,
    Fixed(Scalar),
}

/// Sparsity pattern for operator search, written row by row with rows
/// separated by `/`: `*` marks a free entry, a digit fixes the entry.
/// `"000/000/**0"` restricts a 3x3 map to image in `span(e3)` with
/// `R(e3) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Entry>,
}

impl Pattern {
    pub fn free(rows: usize, cols: usize) -> Pattern {
        Pattern {
            rows,
            cols,
            entries: vec![Entry::Free; rows * cols],
        }
    }

    pub fn parse(field: Field, text: &str) -> Result<Pattern> {
        let rows: Vec<&str> = text.split('/').map(str::trim).collect();
        let cols = rows[0].chars().count();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.chars().count() != cols {
                return Err(Error::Invalid(format!(
                    "pattern rows differ in length: {text:?}"
                )));
            }
            for c in row.chars() {
                entries.push(match c {
                    '*' => Entry::Free,
                    d if d.is_ascii_digit() => Entry::Fixed(field.from_i64(d as i64 - '0' as i64)),
                    _ => return Err(Error::Invalid(format!("bad pattern character {c:?}"))),
                });
            }
        }
        Ok(Pattern {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn free_count(&self) -> usize {
        self.entries.iter().filter(|e| **e == Entry::Free).count()
    }
}

/// Enumerates every map matching `pattern` (all maps when `None`) and keeps
/// those passing `verify_rota_baxter` under `policy`. Results are ordered
/// row-major lexicographically by entry residues.
pub fn search_rota_baxter_fp(
    algebra: &HomAlgebra,
    label: Label,
    pattern: Option<&Pattern>,
    policy: Policy,
    budget: u128,
) -> Result<Vec<Matrix>> {
    let field = algebra.field();
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => return Err(Error::Field("operator search needs a prime field".into())),
    };
    algebra.product(label)?;
    let n = algebra.dim();
    let owned;
    let pattern = match pattern {
        Some(pat) => {
            if pat.rows != n || pat.cols != n {
                return Err(Error::Dimension(format!(
                    "pattern is {}x{}, algebra has dimension {n}",
                    pat.rows, pat.cols
                )));
            }
            pat
        }
        None => {
            owned = Pattern::free(n, n);
            &owned
        }
    };
    let free = pattern.free_count();
    let candidates = (p as u128).checked_pow(free as u32).unwrap_or(u128::MAX);
    if candidates > budget {
        return Err(Error::Budget { candidates, budget });
    }
    let build = |mut index: u128| {
        let mut digits = vec![0u64; free];
        for d in digits.iter_mut().rev() {
            *d = (index % p as u128) as u64;
            index /= p as u128;
        }
        let mut next = digits.into_iter();
        let rows: Vec<Vec<Scalar>> = pattern
            .entries
            .chunks(n.max(1))
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Entry::Free => field.from_i64(next.next().expect("digit") as i64),
                        Entry::Fixed(s) => s.clone(),
                    })
                    .collect()
            })
            .collect();
        if n == 0 {
            Matrix::zeros(field, 0, 0)
        } else {
            Matrix::from_rows(field, rows).expect("rectangular")
        }
    };
    // indexed parallel iterators collect in index order
    let found: Vec<Matrix> = (0..candidates as u64)
        .into_par_iter()
        .filter_map(|i| {
            let r = build(i as u128);
            let report = verify_rota_baxter(algebra, label, &r, policy).expect("shapes checked");
            report.overall.then_some(r)
        })
        .collect();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    #[test]
    fn zero_operator_passes() {
        let alg = fixtures::hom_jordan3(Q, 2, 3);
        let r =
            verify_rota_baxter(&alg, Label::Circ, &Matrix::zeros(Q, 3, 3), Policy::Strict).unwrap();
        assert!(r.overall);
    }

    #[test]
    fn example_operator_policy() {
        for (a, b, l1, l2, comm) in [
            (1, 1, 1, 1, true),
            (2, 3, 1, 2, false),
            (1, -1, 0, 3, false),
            (2, 3, 0, 0, true),
        ] {
            let alg = fixtures::hom_jordan3(Q, a, b);
            let r = fixtures::hom_jordan3_rb(Q, l1, l2);
            let strict = verify_rota_baxter(&alg, Label::Circ, &r, Policy::Strict).unwrap();
            assert!(strict.quadratic_identity.passed);
            assert_eq!(strict.twist_commutation.passed, comm);
            assert_eq!(strict.overall, comm);
            let lax = verify_rota_baxter(&alg, Label::Circ, &r, Policy::Lax).unwrap();
            assert!(lax.overall);
        }
    }

    #[test]
    fn commutation_witness_is_e1() {
        let alg = fixtures::hom_jordan3(Q, 2, 3);
        let rep = alg.adjoint_representation().unwrap();
        let r = fixtures::hom_jordan3_rb(Q, 1, 2);
        let rep_report = verify_o_operator_jordan(&alg, &rep, &r, Policy::Strict).unwrap();
        assert!(rep_report.quadratic_identity.passed);
        let w = rep_report.twist_commutation.witness.unwrap();
        assert_eq!(w.tuple, vec![0]);
    }

    #[test]
    fn dual_numbers_operator() {
        let d2 = fixtures::dual_numbers(Q);
        let r = fixtures::dual_numbers_rb(Q);
        let a = verify_rota_baxter(&d2, Label::Circ, &r, Policy::Strict).unwrap();
        assert!(a.overall);
        let rep = d2.adjoint_representation().unwrap();
        let b = verify_o_operator_jordan(&d2, &rep, &r, Policy::Strict).unwrap();
        assert_eq!(a, b);
        let pj = d2.relabeled(Label::Dot).unwrap();
        let bim = pj.regular_bimodule(Label::Dot).unwrap();
        assert!(
            verify_o_operator_prejordan(&pj, &bim, &r, Policy::Strict)
                .unwrap()
                .overall
        );
        let zero = Matrix::zeros(Q, 2, 2);
        assert!(
            verify_o_operator_prejordan(&pj, &bim, &zero, Policy::Strict)
                .unwrap()
                .overall
        );
    }

    #[test]
    fn identity_is_not_rota_baxter_on_d2() {
        let d2 = fixtures::dual_numbers(Q);
        let r = verify_rota_baxter(&d2, Label::Circ, &Matrix::identity(Q, 2), Policy::Lax).unwrap();
        assert!(!r.overall);
        assert_eq!(r.quadratic_identity.witness.unwrap().tuple, vec![0, 0]);
    }

    #[test]
    fn commute_examples() {
        let r = fixtures::dual_numbers_rb(Q);
        assert!(commute_check(&r, &r).unwrap().passed);
        assert!(commute_check(&r, &Matrix::zeros(Q, 2, 2)).unwrap().passed);
        let a = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(Q, &[&[0, 0], &[1, 0]]);
        assert!(!commute_check(&a, &b).unwrap().passed);
        assert!(commute_check(&a, &Matrix::zeros(Q, 3, 3)).is_err());
    }

    #[test]
    fn pattern_parsing() {
        let f5 = Field::prime(5).unwrap();
        let p = Pattern::parse(f5, "000/000/**0").unwrap();
        assert_eq!((p.rows, p.cols, p.free_count()), (3, 3, 2));
        assert!(Pattern::parse(f5, "00/0").is_err());
        assert!(Pattern::parse(f5, "0x").is_err());
    }

    #[test]
    fn search_examples() {
        let f5 = Field::prime(5).unwrap();
        let z = fixtures::zero_algebra(f5, 1, Label::Circ);
        let all =
            search_rota_baxter_fp(&z, Label::Circ, None, Policy::Strict, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 5);
        assert_eq!(all[4].get(0, 0), &f5.from_i64(4));

        let d2 = fixtures::dual_numbers(f5);
        let found =
            search_rota_baxter_fp(&d2, Label::Circ, None, Policy::Lax, DEFAULT_BUDGET).unwrap();
        assert!(found.contains(&fixtures::dual_numbers_rb(f5)));

        let ex = fixtures::hom_jordan3(f5, 1, 1);
        let pat = Pattern::parse(f5, "000/000/**0").unwrap();
        let found =
            search_rota_baxter_fp(&ex, Label::Circ, Some(&pat), Policy::Strict, DEFAULT_BUDGET)
                .unwrap();
        assert_eq!(found.len(), 25);

        assert!(matches!(
            search_rota_baxter_fp(&ex, Label::Circ, None, Policy::Lax, 1000),
            Err(Error::Budget { .. })
        ));
        assert!(search_rota_baxter_fp(
            &fixtures::dual_numbers(Q),
            Label::Circ,
            None,
            Policy::Lax,
            10
        )
        .is_err());
    }
}
