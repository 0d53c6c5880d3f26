//! The axiom systems, written as term data.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Label;
use crate::error::{Error, Result};
use crate::identity::term::{Action, Identity, Sort, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    HomJordan,
    HomPreJordan,
    HomPreAlt,
    HomDendriform,
    HomJDendriform,
    JordanRep,
}

impl Suite {
    pub const ALGEBRA_SUITES: [Suite; 5] = [
        Suite::HomJordan,
        Suite::HomPreJordan,
        Suite::HomPreAlt,
        Suite::HomDendriform,
        Suite::HomJDendriform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HomJordan => "HOM_JORDAN",
            Suite::HomPreJordan => "HOM_PRE_JORDAN",
            Suite::HomPreAlt => "HOM_PRE_ALT",
            Suite::HomDendriform => "HOM_DENDRIFORM",
            Suite::HomJDendriform => "HOM_J_DENDRIFORM",
            Suite::JordanRep => "JORDAN_REP",
        }
    }

    /// Products an algebra must declare for this suite.
    pub fn declared(self) -> &'static [Label] {
        match self {
            Suite::HomJordan | Suite::JordanRep => &[Label::Circ],
            Suite::HomPreJordan => &[Label::Dot],
            Suite::HomPreAlt | Suite::HomDendriform | Suite::HomJDendriform => {
                &[Label::Prec, Label::Succ]
            }
        }
    }

    pub fn items(self) -> Vec<SuiteItem> {
        match self {
            Suite::HomJordan => vec![
                SuiteItem::Commutative(Label::Circ),
                SuiteItem::Identity(jordan_cyclic()),
            ],
            Suite::HomPreJordan => pre_jordan().into_iter().map(SuiteItem::Identity).collect(),
            Suite::HomPreAlt => pre_alternative()
                .into_iter()
                .map(SuiteItem::Identity)
                .collect(),
            Suite::HomDendriform => dendriform().into_iter().map(SuiteItem::Identity).collect(),
            Suite::HomJDendriform => j_dendriform()
                .into_iter()
                .map(SuiteItem::Identity)
                .collect(),
            Suite::JordanRep => jordan_representation()
                .into_iter()
                .map(SuiteItem::Identity)
                .collect(),
        }
    }

    pub fn identities(self) -> Vec<Identity> {
        self.items()
            .into_iter()
            .filter_map(|i| match i {
                SuiteItem::Identity(id) => Some(id),
                SuiteItem::Commutative(_) => None,
            })
            .collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        match norm.as_str() {
            "hom-jordan" => Ok(Suite::HomJordan),
            "hom-pre-jordan" => Ok(Suite::HomPreJordan),
            "hom-pre-alt" => Ok(Suite::HomPreAlt),
            "hom-dendriform" => Ok(Suite::HomDendriform),
            "hom-j-dendriform" => Ok(Suite::HomJDendriform),
            "jordan-rep" | "representation" => Ok(Suite::JordanRep),
            _ => Err(Error::Invalid(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum SuiteItem {
    /// Symmetry of a product, witnessed by the first pair `(i, j)`, `i > j`.
    Commutative(Label),
    Identity(Identity),
}

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const U: usize = 3;

fn v(slot: usize) -> Term {
    Term::var(slot)
}

fn a(slot: usize) -> Term {
    Term::var(slot).twist()
}

fn a2(slot: usize) -> Term {
    Term::var(slot).twist2()
}

fn alg(n: usize) -> Vec<Sort> {
    vec![Sort::Algebra; n]
}

fn mul(label: Label) -> impl Fn(Term, Term) -> Term {
    move |p, q| Term::mul(label, p, q)
}

/// Cyclic sum over `(x, y, z) -> (y, z, x) -> (z, x, y)` of a term builder.
fn cyclic(f: impl Fn(usize, usize, usize) -> Term) -> Vec<Term> {
    vec![f(X, Y, Z), f(Y, Z, X), f(Z, X, Y)]
}

/// Fully linearized Hom-Jordan identity:
/// `sum_cyc ((x o y) o a(u)) o a^2(z) = sum_cyc a(x o y) o (a(u) o a(z))`.
pub fn jordan_cyclic() -> Identity {
    let o = mul(Label::Circ);
    Identity::new(
        "jordan_cyclic",
        alg(4),
        cyclic(|x, y, z| o(o(o(v(x), v(y)), a(U)), a2(z))),
        cyclic(|x, y, z| o(o(v(x), v(y)).twist(), o(a(U), a(z)))),
    )
}

/// `as_alpha(x o x, a(y), a(x))`, quadratic in `x`; only meaningful at
/// arbitrary vectors, never on basis tuples.
pub fn jordan_quadratic() -> Identity {
    let o = mul(Label::Circ);
    let xx = || o(v(X), v(X));
    Identity::new(
        "jordan_quadratic",
        alg(2),
        vec![o(o(xx(), a(Y)), a2(X))],
        vec![o(xx().twist(), o(a(Y), a(X)))],
    )
}

/// The two Hom-pre-Jordan identities in `dot`, with `circ = dot + dot^T`.
pub fn pre_jordan() -> Vec<Identity> {
    pre_jordan_in(Label::Dot, Label::Circ)
}

/// Hom-pre-Jordan identities for an arbitrary product label and its
/// anticommutator label.
pub fn pre_jordan_in(dot: Label, circ: Label) -> Vec<Identity> {
    let d = mul(dot);
    let o = mul(circ);
    let rhs = || cyclic(|x, y, z| d(a2(x), d(o(v(y), v(z)), a(U))));
    vec![
        Identity::new(
            "pre_jordan_1",
            alg(4),
            cyclic(|x, y, z| d(o(a(x), a(y)), d(a(z), a(U)))),
            rhs(),
        ),
        Identity::new(
            "pre_jordan_2",
            alg(4),
            vec![
                d(o(o(v(X), v(Z)), a(Y)), a2(U)),
                d(a2(X), d(a(Y), d(v(Z), v(U)))),
                d(a2(Z), d(a(Y), d(v(X), v(U)))),
            ],
            rhs(),
        ),
    ]
}

pub fn pre_alternative() -> Vec<Identity> {
    let p = mul(Label::Prec);
    let s = mul(Label::Succ);
    let st = mul(Label::Star);
    vec![
        Identity::new(
            "pre_alt_1",
            alg(3),
            vec![p(s(v(X), v(Y)), a(Z)), p(p(v(Y), v(X)), a(Z))],
            vec![s(a(X), p(v(Y), v(Z))), p(a(Y), st(v(X), v(Z)))],
        ),
        Identity::new(
            "pre_alt_2",
            alg(3),
            vec![p(s(v(X), v(Y)), a(Z)), s(st(v(X), v(Z)), a(Y))],
            vec![s(a(X), p(v(Y), v(Z))), s(a(X), s(v(Z), v(Y)))],
        ),
        Identity::new(
            "pre_alt_3",
            alg(3),
            vec![p(p(v(X), v(Y)), a(Z)), p(p(v(X), v(Z)), a(Y))],
            vec![p(a(X), st(v(Y), v(Z))), p(a(X), st(v(Z), v(Y)))],
        ),
        Identity::new(
            "pre_alt_4",
            alg(3),
            vec![s(st(v(X), v(Y)), a(Z)), s(st(v(Y), v(X)), a(Z))],
            vec![s(a(X), s(v(Y), v(Z))), s(a(Y), s(v(X), v(Z)))],
        ),
    ]
}

pub fn dendriform() -> Vec<Identity> {
    let p = mul(Label::Prec);
    let s = mul(Label::Succ);
    let st = mul(Label::Star);
    vec![
        Identity::new(
            "dendriform_1",
            alg(3),
            vec![p(s(v(X), v(Y)), a(Z))],
            vec![s(a(X), p(v(Y), v(Z)))],
        ),
        Identity::new(
            "dendriform_2",
            alg(3),
            vec![p(p(v(X), v(Y)), a(Z))],
            vec![p(a(X), st(v(Y), v(Z)))],
        ),
        Identity::new(
            "dendriform_3",
            alg(3),
            vec![s(st(v(X), v(Y)), a(Z))],
            vec![s(a(X), s(v(Y), v(Z)))],
        ),
    ]
}

/// The five Hom-J-dendriform identities in `prec`, `succ` and the derived
/// `dot` (vertical), `diamond` (horizontal) and `circ`.
pub fn j_dendriform() -> Vec<Identity> {
    let p = mul(Label::Prec);
    let s = mul(Label::Succ);
    let d = mul(Label::Dot);
    let di = mul(Label::Diamond);
    let o = mul(Label::Circ);
    let first_lhs = || cyclic(|x, y, z| s(o(v(x), v(y)).twist(), s(v(z), v(U)).twist()));
    vec![
        Identity::new(
            "j_dendriform_1",
            alg(4),
            first_lhs(),
            cyclic(|x, y, z| s(a2(x), s(o(v(y), v(z)), a(U)))),
        ),
        Identity::new(
            "j_dendriform_2",
            alg(4),
            first_lhs(),
            vec![
                s(a2(X), s(a(Y), s(v(Z), v(U)))),
                s(a2(Z), s(a(Y), s(v(X), v(U)))),
                s(o(a(Y), o(v(Z), v(X))), a2(U)),
            ],
        ),
        Identity::new(
            "j_dendriform_3",
            alg(4),
            vec![
                s(o(v(X), v(Y)).twist(), p(v(Z), v(U)).twist()),
                p(d(v(X), v(Z)).twist(), di(v(Y), v(U)).twist()),
                p(d(v(Y), v(Z)).twist(), di(v(X), v(U)).twist()),
            ],
            vec![
                s(a2(X), p(a(Z), di(v(Y), v(U)))),
                s(a2(Y), p(a(Z), di(v(X), v(U)))),
                p(d(o(v(X), v(Y)), a(Z)), a2(U)),
            ],
        ),
        Identity::new(
            "j_dendriform_4",
            alg(4),
            vec![
                p(d(v(Z), v(Y)).twist(), di(v(X), v(U)).twist()),
                p(d(v(X), v(Y)).twist(), di(v(Z), v(U)).twist()),
                s(o(v(X), v(Z)).twist(), p(v(Y), v(U)).twist()),
            ],
            vec![
                s(a2(X), p(d(v(Z), v(Y)), a(U))),
                s(a2(Z), p(d(v(X), v(Y)), a(U))),
                p(a2(Y), di(o(v(X), v(Z)), a(U))),
            ],
        ),
        Identity::new(
            "j_dendriform_5",
            alg(4),
            vec![
                s(o(v(X), v(Y)).twist(), p(v(Z), v(U)).twist()),
                s(d(v(X), v(Z)).twist(), di(v(Y), v(U)).twist()),
                p(d(v(Y), v(Z)).twist(), di(v(X), v(U)).twist()),
            ],
            vec![
                s(a2(X), s(a(Y), p(v(Z), v(U)))),
                p(a2(Z), di(a(Y), di(v(X), v(U)))),
                p(d(a(Y), d(v(X), v(Z))), a2(U)),
            ],
        ),
    ]
}

fn module_slots(n: usize) -> Vec<Sort> {
    let mut s = alg(n);
    s.push(Sort::Module);
    s
}

fn operator_cyclic(act: Action, circ: Label, w: usize) -> Vec<Term> {
    let o = mul(circ);
    cyclic(|x, y, z| Term::act(act, o(a(x), a(y)), Term::act(act, a(z), v(w).twist())))
}

/// Representation conditions for `(V, rho, phi)` over `(A, circ, alpha)`;
/// the module argument is the last slot.
pub fn jordan_representation() -> Vec<Identity> {
    let mut ids = module_conditions(Action::Rho, Label::Circ, "");
    for (id, name) in ids
        .iter_mut()
        .zip(["twist_compat", "rep_cyclic", "rep_mixed"])
    {
        id.name = name.to_string();
    }
    ids
}

/// The same three conditions for the left action `l` of a bimodule over a
/// Hom-pre-Jordan algebra, with `circ` the anticommutator of `dot`.
fn module_conditions(act: Action, circ: Label, prefix: &str) -> Vec<Identity> {
    let o = mul(circ);
    let r = |t: Term, m: Term| Term::act(act, t, m);
    let w = 3;
    vec![
        Identity::new(
            &format!("{prefix}twist_compat"),
            module_slots(1),
            vec![r(v(X), v(1)).twist()],
            vec![r(a(X), v(1).twist())],
        ),
        Identity::new(
            &format!("{prefix}cyclic"),
            module_slots(3),
            cyclic(|x, y, z| r(a2(x), r(o(v(y), v(z)), v(w).twist()))),
            operator_cyclic(act, circ, w),
        ),
        Identity::new(
            &format!("{prefix}mixed"),
            module_slots(3),
            vec![
                r(o(o(v(X), v(Y)), a(Z)), v(w).twist2()),
                r(a2(X), r(a(Z), r(v(Y), v(w)))),
                r(a2(Y), r(a(Z), r(v(X), v(w)))),
            ],
            operator_cyclic(act, circ, w),
        ),
    ]
}

/// Directly asserted bimodule equations: twist compatibility of `l` and
/// `r`, and the representation conditions for `l`.
pub fn bimodule_equations() -> Vec<Identity> {
    let mut ids = module_conditions(Action::Left, Label::Circ, "left_");
    ids.insert(
        1,
        Identity::new(
            "right_twist_compat",
            module_slots(1),
            vec![Term::act(Action::Right, v(X), v(1)).twist()],
            vec![Term::act(Action::Right, a(X), v(1).twist())],
        ),
    );
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALGEBRA_SUITES {
            let cli = s.name().to_ascii_lowercase().replace('_', "-");
            assert_eq!(cli.parse::<Suite>().unwrap(), s);
        }
        assert!("hom-lie".parse::<Suite>().is_err());
    }

    #[test]
    fn arities() {
        assert_eq!(jordan_cyclic().arity(), 4);
        for id in pre_jordan().iter().chain(&j_dendriform()) {
            assert_eq!(id.arity(), 4, "{}", id.name);
        }
        for id in pre_alternative().iter().chain(&dendriform()) {
            assert_eq!(id.arity(), 3, "{}", id.name);
        }
        let rep = jordan_representation();
        assert_eq!(
            rep.iter().map(Identity::arity).collect::<Vec<_>>(),
            vec![1, 3, 3]
        );
        let names: Vec<_> = bimodule_equations().into_iter().map(|i| i.name).collect();
        assert_eq!(
            names,
            [
                "left_twist_compat",
                "right_twist_compat",
                "left_cyclic",
                "left_mixed"
            ]
        );
    }

    #[test]
    fn every_identity_is_multilinear() {
        // each side term uses every slot exactly once
        fn count(t: &Term, c: &mut Vec<usize>) {
            match t {
                Term::Var(s) => c[*s] += 1,
                Term::Twist(t) => count(t, c),
                Term::Mul(_, a, b) | Term::Act(_, a, b) => {
                    count(a, c);
                    count(b, c);
                }
            }
        }
        let mut all: Vec<Identity> = Suite::ALGEBRA_SUITES
            .iter()
            .flat_map(|s| s.identities())
            .collect();
        all.extend(jordan_representation());
        all.extend(bimodule_equations());
        for id in all {
            for t in id.lhs.iter().chain(&id.rhs) {
                let mut c = vec![0; id.slots.len()];
                count(t, &mut c);
                assert!(c.iter().all(|&n| n == 1), "{} is not multilinear", id.name);
            }
        }
        let mut c = vec![0; 2];
        count(&jordan_quadratic().lhs[0], &mut c);
        assert_eq!(c, vec![3, 1]);
    }
}
