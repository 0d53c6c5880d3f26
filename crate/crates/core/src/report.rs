//! Verdicts and witnesses shared by every checker.

use std::fmt;

use serde::Serialize;

use crate::linalg::Vector;

/// A failing basis tuple and the two unequal sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Algebra basis indices, one per algebra argument of the identity.
    pub tuple: Vec<usize>,
    /// Module basis index, for identities with a module argument.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module_index: Option<usize>,
    #[serde(serialize_with = "ser_vector")]
    pub lhs: Vector,
    #[serde(serialize_with = "ser_vector")]
    pub rhs: Vector,
}

impl Witness {
    pub fn new(tuple: Vec<usize>, lhs: Vector, rhs: Vector) -> Witness {
        Witness {
            tuple,
            module_index: None,
            lhs,
            rhs,
        }
    }
}

pub(crate) fn ser_vector<S: serde::Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.coords())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Verdict {
        Verdict {
            passed: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Verdict {
        Verdict {
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn label(&self) -> &'static str {
        if self.passed {
            "PASS"
        } else {
            "FAIL"
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityVerdict {
    pub identity: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// Structural predicates reported alongside a suite; they never change the
/// suite verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Structural {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub commutative: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twist_multiplicative: Option<Verdict>,
}

/// Result of running one suite: PASS iff every identity holds on every
/// basis tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub identities: Vec<IdentityVerdict>,
    /// Identities evaluated and reported but not part of the verdict.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub supplementary: Vec<IdentityVerdict>,
    pub structural: Structural,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.identities.iter().all(|i| i.verdict.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityVerdict> {
        self.identities.iter().find(|i| !i.verdict.passed)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityVerdict> {
        self.identities
            .iter()
            .chain(&self.supplementary)
            .find(|i| i.identity == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        let rows = self
            .identities
            .iter()
            .map(|i| (i, ""))
            .chain(self.supplementary.iter().map(|i| (i, " (supplementary)")));
        for (iv, note) in rows {
            write!(f, "  {:<28} {}{}", iv.identity, iv.verdict.label(), note)?;
            if let Some(w) = &iv.verdict.witness {
                write_witness(f, w)?;
            }
            writeln!(f)?;
        }
        if let Some(c) = &self.structural.commutative {
            write!(f, "  [structural] commutative      {}", c.label())?;
            if let Some(w) = &c.witness {
                write_witness(f, w)?;
            }
            writeln!(f)?;
        }
        if let Some(m) = &self.structural.twist_multiplicative {
            write!(f, "  [structural] multiplicative   {}", m.label())?;
            if let Some(w) = &m.witness {
                write_witness(f, w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub(crate) fn write_witness(f: &mut fmt::Formatter<'_>, w: &Witness) -> fmt::Result {
    let names: Vec<String> = w.tuple.iter().map(|i| format!("e{}", i + 1)).collect();
    write!(f, " at ({})", names.join(", "))?;
    if let Some(m) = w.module_index {
        write!(f, " on v{}", m + 1)?;
    }
    write!(f, ": lhs = {}, rhs = {}", w.lhs, w.rhs)
}
