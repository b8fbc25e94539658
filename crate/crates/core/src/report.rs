//! Pass/fail records shared by all verification stages.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, Matrix};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of scalar identities or basis tuples evaluated.
    pub evaluated: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, evaluated: u64) -> Self {
        Check {
            name: name.into(),
            passed: true,
            evaluated,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, evaluated: u64, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            evaluated,
            witness: Some(witness.into()),
        }
    }

    /// Passes when `witness` is `None`.
    pub fn from_witness(name: impl Into<String>, evaluated: u64, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(name, evaluated),
            Some(w) => Check::fail(name, evaluated, w),
        }
    }

    /// Compares two matrices entrywise; the witness names the first
    /// differing entry with both exact values.
    pub fn matrices(
        name: impl Into<String>,
        lhs: &Matrix,
        rhs: &Matrix,
        labels: &[String],
    ) -> Self {
        let evaluated = (lhs.rows() * lhs.cols()) as u64;
        let witness = lhs.sub(rhs).first_nonzero().map(|(i, j, _)| {
            format!(
                "entry ({}, {}): {} vs {}",
                label(labels, i),
                label(labels, j),
                fmt_q(&lhs[(i, j)]),
                fmt_q(&rhs[(i, j)])
            )
        });
        Check::from_witness(name, evaluated, witness)
    }

    pub fn into_result(self) -> Result<()> {
        match self.witness {
            Some(w) if !self.passed => Err(Error::Verification {
                check: self.name,
                witness: w,
            }),
            _ => Ok(()),
        }
    }
}

fn label(labels: &[String], i: usize) -> String {
    labels.get(i).cloned().unwrap_or_else(|| i.to_string())
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Section {
    pub fn new(name: impl Into<String>, checks: Vec<Check>) -> Self {
        Section {
            name: name.into(),
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Turns the first failing check of any section into an error.
pub fn ensure(sections: &[Section]) -> Result<()> {
    for s in sections {
        if let Some(c) = s.first_failure() {
            return c.clone().into_result();
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn matrix_witness_names_entry() {
        let a = Matrix::identity(2);
        let mut b = Matrix::identity(2);
        b[(1, 0)] = q(3);
        let c = Check::matrices("eq", &a, &b, &["x".into(), "y".into()]);
        assert!(!c.passed);
        assert_eq!(c.witness.as_deref(), Some("entry (y, x): 0 vs 3"));
        assert!(Check::matrices("eq", &a, &a, &[]).passed);
        let s = Section::new("s", vec![Check::pass("p", 1), c]);
        assert!(!s.passed());
        assert!(ensure(&[s]).is_err());
    }
}
