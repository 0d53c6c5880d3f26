//! Basis-tuple evaluation of identity suites.
//!
//! Every suite identity is multilinear, so it holds for all arguments iff it
//! holds on every tuple of basis vectors. Tuples are scanned in
//! lexicographic order (algebra slots first, then the module slot) and the
//! first failing tuple is reported. Subterm values are memoized per
//! projection of the tuple onto the slots they depend on.

use std::collections::BTreeMap;
use std::rc::Rc;

use crate::algebra::{Bimodule, HomAlgebra, Label, Representation, Tensor};
use crate::constructions;
use crate::error::{Error, Result};
use crate::identity::suites::{self, Suite, SuiteItem};
use crate::identity::term::{Action, CompiledIdentity, Dag, Identity, NodeKind, Sort};
use crate::linalg::{Matrix, Vector};
use crate::report::{CheckReport, IdentityVerdict, Structural, Verdict, Witness};
use crate::scalar::Field;

/// Module data visible to module-sorted terms.
#[derive(Clone, Debug)]
pub struct ModuleContext {
    pub dim: usize,
    pub phi: Matrix,
    pub actions: BTreeMap<Action, Vec<Matrix>>,
}

/// Everything an identity may reference: products by label, the twist,
/// and optionally a module.
#[derive(Clone, Debug)]
pub struct Context {
    pub field: Field,
    pub dim: usize,
    pub products: BTreeMap<Label, Tensor>,
    pub twist: Matrix,
    pub module: Option<ModuleContext>,
}

impl Context {
    /// Declared products of `algebra` plus the products derivable from them:
    /// `circ` from `dot`, and `dot`, `diamond`, `circ`, `star` from
    /// `prec`/`succ`.
    pub fn for_algebra(algebra: &HomAlgebra) -> Context {
        let mut products: BTreeMap<Label, Tensor> = algebra.products().clone();
        if let Some(dot) = products.get(&Label::Dot) {
            let circ = dot.add(&dot.transpose());
            products.entry(Label::Circ).or_insert(circ);
        }
        if let Ok(derived) = algebra.derive_products() {
            products.insert(Label::Dot, derived.dot);
            products.insert(Label::Diamond, derived.diamond);
            products.insert(Label::Circ, derived.circ);
            products.insert(Label::Star, derived.star);
        }
        Context {
            field: algebra.field(),
            dim: algebra.dim(),
            products,
            twist: algebra.twist().clone(),
            module: None,
        }
    }

    pub fn with_representation(mut self, rep: &Representation) -> Context {
        self.module = Some(ModuleContext {
            dim: rep.module_dim,
            phi: rep.phi.clone(),
            actions: BTreeMap::from([(Action::Rho, rep.rho.clone())]),
        });
        self
    }

    pub fn with_bimodule(mut self, bim: &Bimodule) -> Context {
        self.module = Some(ModuleContext {
            dim: bim.module_dim,
            phi: bim.phi.clone(),
            actions: BTreeMap::from([
                (Action::Left, bim.left.clone()),
                (Action::Right, bim.right.clone()),
            ]),
        });
        self
    }

    fn require(&self, identity: &Identity) -> Result<()> {
        for l in identity.labels() {
            if !self.products.contains_key(&l) {
                return Err(Error::MissingProduct(l.name().into()));
            }
        }
        let actions = identity.actions();
        let needs_module = identity.slots.contains(&Sort::Module) || !actions.is_empty();
        if needs_module {
            let m = self.module.as_ref().ok_or_else(|| {
                Error::Invalid(format!("identity {} needs a module", identity.name))
            })?;
            for a in actions {
                if !m.actions.contains_key(&a) {
                    return Err(Error::Invalid(format!("module lacks the {a:?} action")));
                }
            }
        }
        Ok(())
    }

    fn sort_dim(&self, sort: Sort) -> usize {
        match sort {
            Sort::Algebra => self.dim,
            Sort::Module => self.module.as_ref().map_or(0, |m| m.dim),
        }
    }
}

enum Leaves<'a> {
    Basis(&'a [usize]),
    Given(&'a [Vector]),
}

struct Evaluator<'a> {
    ctx: &'a Context,
    dag: &'a Dag,
    slot_dims: Vec<usize>,
    memo: Vec<Vec<Option<Rc<Vector>>>>,
}

impl<'a> Evaluator<'a> {
    fn new(ctx: &'a Context, dag: &'a Dag, slots: &[Sort], tables: bool) -> Evaluator<'a> {
        let slot_dims: Vec<usize> = slots.iter().map(|s| ctx.sort_dim(*s)).collect();
        let memo = dag
            .nodes
            .iter()
            .map(|n| {
                let size = if tables {
                    n.vars.iter().map(|&s| slot_dims[s]).product()
                } else {
                    1
                };
                vec![None; size]
            })
            .collect();
        Evaluator {
            ctx,
            dag,
            slot_dims,
            memo,
        }
    }

    fn reset(&mut self) {
        for t in &mut self.memo {
            t.iter_mut().for_each(|v| *v = None);
        }
    }

    fn key(&self, node: usize, leaves: &Leaves) -> usize {
        match leaves {
            Leaves::Given(_) => 0,
            Leaves::Basis(tuple) => self.dag.nodes[node]
                .vars
                .iter()
                .fold(0, |acc, &s| acc * self.slot_dims[s] + tuple[s]),
        }
    }

    fn eval(&mut self, node: usize, leaves: &Leaves) -> Rc<Vector> {
        let key = self.key(node, leaves);
        if let Some(v) = &self.memo[node][key] {
            return Rc::clone(v);
        }
        let n = &self.dag.nodes[node];
        let value = match n.kind {
            NodeKind::Var(s) => match leaves {
                Leaves::Basis(tuple) => Vector::basis(self.ctx.field, self.slot_dims[s], tuple[s]),
                Leaves::Given(args) => args[s].clone(),
            },
            NodeKind::Twist(c) => {
                let inner = self.eval(c, leaves);
                let map = match n.sort {
                    Sort::Algebra => &self.ctx.twist,
                    Sort::Module => &self.ctx.module.as_ref().expect("checked").phi,
                };
                map.apply(&inner).expect("validated shapes")
            }
            NodeKind::Mul(label, a, b) => {
                let x = self.eval(a, leaves);
                let y = self.eval(b, leaves);
                self.ctx.products[&label].product_unchecked(&x, &y)
            }
            NodeKind::Act(action, a, m) => {
                let x = self.eval(a, leaves);
                let w = self.eval(m, leaves);
                let module = self.ctx.module.as_ref().expect("checked");
                let maps = &module.actions[&action];
                let mut out = Vector::zeros(self.ctx.field, module.dim);
                for (i, c) in x.support() {
                    let image = maps[i].apply(&w).expect("validated shapes");
                    out.add_scaled(c, &image);
                }
                out
            }
        };
        let value = Rc::new(value);
        self.memo[node][key] = Some(Rc::clone(&value));
        value
    }

    fn side(&mut self, nodes: &[usize], len: usize, leaves: &Leaves) -> Vector {
        let mut acc = Vector::zeros(self.ctx.field, len);
        for &n in nodes {
            acc.add_assign(&self.eval(n, leaves));
        }
        acc
    }
}

fn output_len(ctx: &Context, dag: &Dag, c: &CompiledIdentity) -> usize {
    match c.lhs.iter().chain(&c.rhs).next() {
        Some(&n) => ctx.sort_dim(dag.nodes[n].sort),
        None => 0,
    }
}

/// Checks identities sharing one slot layout on every basis tuple.
fn check_identities(ctx: &Context, identities: &[Identity]) -> Result<Vec<IdentityVerdict>> {
    // group by slot layout so each group shares one memo
    let mut out = Vec::with_capacity(identities.len());
    let mut groups: Vec<(Vec<Sort>, Vec<usize>)> = Vec::new();
    for (i, id) in identities.iter().enumerate() {
        ctx.require(id)?;
        match groups.iter_mut().find(|(s, _)| *s == id.slots) {
            Some((_, members)) => members.push(i),
            None => groups.push((id.slots.clone(), vec![i])),
        }
    }
    let mut verdicts: Vec<Option<IdentityVerdict>> = vec![None; identities.len()];
    for (slots, members) in groups {
        let mut dag = Dag::default();
        let compiled: Vec<CompiledIdentity> = members
            .iter()
            .map(|&i| dag.compile(&identities[i]))
            .collect::<Result<_>>()?;
        let mut ev = Evaluator::new(ctx, &dag, &slots, true);
        let dims = ev.slot_dims.clone();
        for (&i, c) in members.iter().zip(&compiled) {
            let len = output_len(ctx, &dag, c);
            let mut verdict = Verdict::pass();
            for tuple in Tuples::new(&dims) {
                let leaves = Leaves::Basis(&tuple);
                let lhs = ev.side(&c.lhs, len, &leaves);
                let rhs = ev.side(&c.rhs, len, &leaves);
                if lhs != rhs {
                    verdict = Verdict::fail(witness_for(&slots, &tuple, lhs, rhs));
                    break;
                }
            }
            verdicts[i] = Some(IdentityVerdict {
                identity: identities[i].name.clone(),
                verdict,
            });
        }
    }
    out.extend(
        verdicts
            .into_iter()
            .map(|v| v.expect("every identity grouped")),
    );
    Ok(out)
}

fn witness_for(slots: &[Sort], tuple: &[usize], lhs: Vector, rhs: Vector) -> Witness {
    let mut algebra = Vec::new();
    let mut module_index = None;
    for (s, &i) in slots.iter().zip(tuple) {
        match s {
            Sort::Algebra => algebra.push(i),
            Sort::Module => module_index = Some(i),
        }
    }
    Witness {
        tuple: algebra,
        module_index,
        lhs,
        rhs,
    }
}

/// Lexicographic enumeration of `prod_s 0..dims[s]`.
struct Tuples {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Tuples {
    fn new(dims: &[usize]) -> Tuples {
        let next = if dims.contains(&0) {
            None
        } else {
            Some(vec![0; dims.len()])
        };
        Tuples {
            dims: dims.to_vec(),
            next,
        }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.dims[pos] {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

/// Evaluates both sides of `identity` at arbitrary arguments.
pub fn evaluate(ctx: &Context, identity: &Identity, args: &[Vector]) -> Result<(Vector, Vector)> {
    ctx.require(identity)?;
    if args.len() != identity.slots.len() {
        return Err(Error::Dimension(format!(
            "identity {} takes {} arguments, got {}",
            identity.name,
            identity.slots.len(),
            args.len()
        )));
    }
    for (arg, sort) in args.iter().zip(&identity.slots) {
        if arg.len() != ctx.sort_dim(*sort) {
            return Err(Error::Dimension(format!(
                "argument of length {} for a {}-dimensional slot",
                arg.len(),
                ctx.sort_dim(*sort)
            )));
        }
    }
    let mut dag = Dag::default();
    let c = dag.compile(identity)?;
    let mut ev = Evaluator::new(ctx, &dag, &identity.slots, false);
    ev.reset();
    let len = output_len(ctx, &dag, &c);
    let leaves = Leaves::Given(args);
    let lhs = ev.side(&c.lhs, len, &leaves);
    let rhs = ev.side(&c.rhs, len, &leaves);
    Ok((lhs, rhs))
}

/// Hom-associator `as(x, y, z) = (x y) a(z) - a(x) (y z)` for `label`.
pub fn hom_associator(
    algebra: &HomAlgebra,
    label: Label,
    x: &Vector,
    y: &Vector,
    z: &Vector,
) -> Result<Vector> {
    let t = algebra.product(label)?;
    let xy = t.product(x, y)?;
    let left = t.product(&xy, &algebra.apply_twist(z)?)?;
    let yz = t.product(y, z)?;
    let right = t.product(&algebra.apply_twist(x)?, &yz)?;
    left.sub(&right)
}

/// Runs `suite` on `algebra`. Products the suite needs beyond the declared
/// ones are derived (`circ` from `dot`; `dot`, `diamond`, `circ`, `star`
/// from `prec`/`succ`).
pub fn check_suite(algebra: &HomAlgebra, suite: Suite) -> Result<CheckReport> {
    if suite == Suite::JordanRep {
        return Err(Error::Invalid(
            "JORDAN_REP needs a representation; use check_representation".into(),
        ));
    }
    for l in suite.declared() {
        if !algebra.has(*l) {
            return Err(Error::MissingProduct(l.name().into()));
        }
    }
    let ctx = Context::for_algebra(algebra);
    let mut report = CheckReport {
        suite: suite.name().into(),
        identities: Vec::new(),
        supplementary: Vec::new(),
        structural: Structural {
            commutative: None,
            twist_multiplicative: Some(algebra.twist_is_multiplicative()),
        },
    };
    let mut identities = Vec::new();
    let mut order = Vec::new();
    for item in suite.items() {
        match item {
            SuiteItem::Commutative(label) => {
                let v = algebra.is_commutative(label)?;
                report.structural.commutative = Some(v.clone());
                order.push(Some(IdentityVerdict {
                    identity: "commutativity".into(),
                    verdict: v,
                }));
            }
            SuiteItem::Identity(id) => {
                identities.push(id);
                order.push(None);
            }
        }
    }
    let mut checked = check_identities(&ctx, &identities)?.into_iter();
    report.identities = order
        .into_iter()
        .map(|slot| slot.unwrap_or_else(|| checked.next().expect("one verdict per identity")))
        .collect();
    Ok(report)
}

/// Checks `(V, rho, phi)` against the representation conditions over
/// `(A, circ, alpha)`.
pub fn check_representation(algebra: &HomAlgebra, rep: &Representation) -> Result<CheckReport> {
    algebra.product(Label::Circ)?;
    if rep.rho.len() != algebra.dim() {
        return Err(Error::Dimension(
            "rho must have one matrix per basis vector".into(),
        ));
    }
    let ctx = Context::for_algebra(algebra).with_representation(rep);
    Ok(CheckReport {
        suite: Suite::JordanRep.name().into(),
        identities: check_identities(&ctx, &suites::jordan_representation())?,
        supplementary: Vec::new(),
        structural: Structural::default(),
    })
}

/// Checks `(V, l, r, phi)` over a Hom-pre-Jordan algebra. The verdict is the
/// HOM_PRE_JORDAN verdict of the semidirect sum `A + V`; the directly
/// stated bimodule equations are reported as supplementary entries.
pub fn check_bimodule(algebra: &HomAlgebra, bim: &Bimodule) -> Result<CheckReport> {
    let base = check_suite(algebra, Suite::HomPreJordan)?;
    if let Some(f) = base.first_failure() {
        return Err(Error::Precondition(format!(
            "base algebra is not Hom-pre-Jordan ({} fails)",
            f.identity
        )));
    }
    let semidirect = constructions::semidirect_prejordan(algebra, bim)?;
    let mut report = check_suite(&semidirect, Suite::HomPreJordan)?;
    report.suite = "BIMODULE".into();
    report.structural = Structural::default();
    let ctx = Context::for_algebra(algebra).with_bimodule(bim);
    report.supplementary = check_identities(&ctx, &suites::bimodule_equations())?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    #[test]
    fn tuples_are_lexicographic() {
        let all: Vec<_> = Tuples::new(&[2, 3]).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 0]);
        assert_eq!(all[1], vec![0, 1]);
        assert_eq!(all[5], vec![1, 2]);
        assert_eq!(Tuples::new(&[2, 0]).count(), 0);
        assert_eq!(Tuples::new(&[]).count(), 1);
    }

    #[test]
    fn associator_examples() {
        let d2 = fixtures::dual_numbers(Q);
        let (u, t) = (d2.basis_vector(0), d2.basis_vector(1));
        assert!(hom_associator(&d2, Label::Circ, &u, &u, &t)
            .unwrap()
            .is_zero());
        let z = fixtures::zero_algebra(Q, 2, Label::Circ);
        let x = fixtures::vector(Q, &[1, 2]);
        assert!(hom_associator(&z, Label::Circ, &x, &x, &x)
            .unwrap()
            .is_zero());
        assert!(hom_associator(&d2, Label::Circ, &u, &u, &fixtures::vector(Q, &[1])).is_err());
    }

    #[test]
    fn example_is_hom_jordan() {
        for (a, b) in [(1, 1), (2, 3), (1, -1)] {
            let r = check_suite(&fixtures::hom_jordan3(Q, a, b), Suite::HomJordan).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn broken_symmetry_witness() {
        let alg = fixtures::hom_jordan3(Q, 2, 3);
        let mut t = alg.product(Label::Circ).unwrap().clone();
        t.set(1, 0, 1, Q.zero());
        let broken = HomAlgebra::single(Label::Circ, t, alg.twist().clone()).unwrap();
        let r = check_suite(&broken, Suite::HomJordan).unwrap();
        assert!(!r.passed());
        let f = r.first_failure().unwrap();
        assert_eq!(f.identity, "commutativity");
        assert_eq!(f.verdict.witness.as_ref().unwrap().tuple, vec![1, 0]);
    }

    #[test]
    fn missing_label() {
        let d2 = fixtures::dual_numbers(Q);
        assert!(matches!(
            check_suite(&d2, Suite::HomPreJordan),
            Err(Error::MissingProduct(_))
        ));
        assert!(matches!(
            check_suite(&d2, Suite::HomJDendriform),
            Err(Error::MissingProduct(_))
        ));
    }

    #[test]
    fn dual_numbers_jordan_and_pre_jordan() {
        let d2 = fixtures::dual_numbers(Q);
        assert!(check_suite(&d2, Suite::HomJordan).unwrap().passed());
        let as_dot = d2.relabeled(Label::Dot).unwrap();
        assert!(check_suite(&as_dot, Suite::HomPreJordan).unwrap().passed());
    }

    #[test]
    fn dimension_zero_is_vacuous() {
        for label in [Label::Circ, Label::Dot] {
            let z = fixtures::zero_algebra(Q, 0, label);
            let suite = if label == Label::Circ {
                Suite::HomJordan
            } else {
                Suite::HomPreJordan
            };
            assert!(check_suite(&z, suite).unwrap().passed());
        }
    }

    #[test]
    fn evaluate_matches_basis_scan() {
        let alg = fixtures::hom_jordan3(Q, 2, 3);
        let ctx = Context::for_algebra(&alg);
        let id = suites::jordan_cyclic();
        let args: Vec<Vector> = (0..4).map(|i| alg.basis_vector(i % 3)).collect();
        let (l, r) = evaluate(&ctx, &id, &args).unwrap();
        assert_eq!(l, r);
        assert!(evaluate(&ctx, &id, &args[..2]).is_err());
    }
}
