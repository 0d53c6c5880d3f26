//! Term trees for multilinear identities.

use std::collections::HashMap;

use crate::algebra::Label;
use crate::error::{Error, Result};

/// How an algebra element acts on a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Action {
    /// `rho` of a representation.
    Rho,
    /// `l` of a bimodule.
    Left,
    /// `r` of a bimodule.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sort {
    Algebra,
    Module,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// Argument slot.
    Var(usize),
    /// The twist: `alpha` on algebra terms, `phi` on module terms.
    Twist(Box<Term>),
    Mul(Label, Box<Term>, Box<Term>),
    /// `action(a)` applied to a module term.
    Act(Action, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(slot: usize) -> Term {
        Term::Var(slot)
    }

    pub fn twist(self) -> Term {
        Term::Twist(Box::new(self))
    }

    pub fn twist2(self) -> Term {
        self.twist().twist()
    }

    pub fn mul(label: Label, a: Term, b: Term) -> Term {
        Term::Mul(label, Box::new(a), Box::new(b))
    }

    pub fn act(action: Action, a: Term, m: Term) -> Term {
        Term::Act(action, Box::new(a), Box::new(m))
    }

    fn collect_labels(&self, out: &mut Vec<Label>) {
        match self {
            Term::Var(_) => {}
            Term::Twist(t) => t.collect_labels(out),
            Term::Mul(l, a, b) => {
                out.push(*l);
                a.collect_labels(out);
                b.collect_labels(out);
            }
            Term::Act(_, a, m) => {
                a.collect_labels(out);
                m.collect_labels(out);
            }
        }
    }

    fn collect_actions(&self, out: &mut Vec<Action>) {
        match self {
            Term::Var(_) => {}
            Term::Twist(t) => t.collect_actions(out),
            Term::Mul(_, a, b) => {
                a.collect_actions(out);
                b.collect_actions(out);
            }
            Term::Act(act, a, m) => {
                out.push(*act);
                a.collect_actions(out);
                m.collect_actions(out);
            }
        }
    }
}

/// `sum(lhs) = sum(rhs)`, multilinear in its slots unless stated otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub slots: Vec<Sort>,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl Identity {
    pub fn new(name: &str, slots: Vec<Sort>, lhs: Vec<Term>, rhs: Vec<Term>) -> Identity {
        Identity {
            name: name.to_string(),
            slots,
            lhs,
            rhs,
        }
    }

    /// Number of algebra slots.
    pub fn arity(&self) -> usize {
        self.slots.iter().filter(|s| **s == Sort::Algebra).count()
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::new();
        for t in self.lhs.iter().chain(&self.rhs) {
            t.collect_labels(&mut out);
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn actions(&self) -> Vec<Action> {
        let mut out = Vec::new();
        for t in self.lhs.iter().chain(&self.rhs) {
            t.collect_actions(&mut out);
        }
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum NodeKind {
    Var(usize),
    Twist(usize),
    Mul(Label, usize, usize),
    Act(Action, usize, usize),
}

#[derive(Clone, Debug)]
pub(crate) struct Node {
    pub kind: NodeKind,
    pub sort: Sort,
    /// Sorted slots this node depends on.
    pub vars: Vec<usize>,
}

/// Hash-consed DAG shared by every identity of a suite, so common subterms
/// are evaluated once per tuple.
#[derive(Clone, Debug, Default)]
pub(crate) struct Dag {
    pub nodes: Vec<Node>,
    index: HashMap<NodeKind, usize>,
}

/// Sides of one identity as node ids.
#[derive(Clone, Debug)]
pub(crate) struct CompiledIdentity {
    pub lhs: Vec<usize>,
    pub rhs: Vec<usize>,
}

impl Dag {
    pub fn compile(&mut self, identity: &Identity) -> Result<CompiledIdentity> {
        let mut side = |terms: &[Term]| -> Result<Vec<usize>> {
            terms
                .iter()
                .map(|t| self.insert(t, &identity.slots))
                .collect()
        };
        let lhs = side(&identity.lhs)?;
        let rhs = side(&identity.rhs)?;
        let sorts: Vec<Sort> = lhs
            .iter()
            .chain(&rhs)
            .map(|&n| self.nodes[n].sort)
            .collect();
        if sorts.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Invalid(format!(
                "identity {} mixes algebra and module terms",
                identity.name
            )));
        }
        Ok(CompiledIdentity { lhs, rhs })
    }

    fn insert(&mut self, term: &Term, slots: &[Sort]) -> Result<usize> {
        let (kind, sort, vars) = match term {
            Term::Var(s) => {
                let sort = *slots
                    .get(*s)
                    .ok_or_else(|| Error::Invalid(format!("slot {s} out of range")))?;
                (NodeKind::Var(*s), sort, vec![*s])
            }
            Term::Twist(t) => {
                let c = self.insert(t, slots)?;
                (
                    NodeKind::Twist(c),
                    self.nodes[c].sort,
                    self.nodes[c].vars.clone(),
                )
            }
            Term::Mul(l, a, b) => {
                let a = self.insert(a, slots)?;
                let b = self.insert(b, slots)?;
                if self.nodes[a].sort != Sort::Algebra || self.nodes[b].sort != Sort::Algebra {
                    return Err(Error::Invalid("product of module terms".into()));
                }
                (
                    NodeKind::Mul(*l, a, b),
                    Sort::Algebra,
                    self.merge_vars(a, b),
                )
            }
            Term::Act(act, a, m) => {
                let a = self.insert(a, slots)?;
                let m = self.insert(m, slots)?;
                if self.nodes[a].sort != Sort::Algebra || self.nodes[m].sort != Sort::Module {
                    return Err(Error::Invalid(
                        "action needs an algebra and a module term".into(),
                    ));
                }
                (
                    NodeKind::Act(*act, a, m),
                    Sort::Module,
                    self.merge_vars(a, m),
                )
            }
        };
        if let Some(&id) = self.index.get(&kind) {
            return Ok(id);
        }
        let id = self.nodes.len();
        self.nodes.push(Node { kind, sort, vars });
        self.index.insert(kind, id);
        Ok(id)
    }

    fn merge_vars(&self, a: usize, b: usize) -> Vec<usize> {
        let mut v = self.nodes[a].vars.clone();
        v.extend(&self.nodes[b].vars);
        v.sort_unstable();
        v.dedup();
        v
    }
}
