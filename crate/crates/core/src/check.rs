//! Verdicts shared by the finite-model and subspace checkers.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
        })
    }
}

/// How assignments are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { trials: u64, seed: u64 },
}

/// Variable bindings, in the order the checked terms mention them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment<E>(pub Vec<(String, E)>);

impl<E> Assignment<E> {
    pub fn get(&self, name: &str) -> Option<&E> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    pub fn values(&self) -> impl Iterator<Item = &E> {
        self.0.iter().map(|(_, e)| e)
    }

    pub fn map<F, T>(&self, f: F) -> Assignment<T>
    where
        F: Fn(&E) -> T,
    {
        Assignment(self.0.iter().map(|(n, e)| (n.clone(), f(e))).collect())
    }
}

impl<E: fmt::Display> fmt::Display for Assignment<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{n}={e}")?;
        }
        Ok(())
    }
}

/// Outcome of a check; `witness` is present exactly when the status is `Fails`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult<E> {
    pub status: Status,
    pub witness: Option<Assignment<E>>,
    pub assignments_checked: u64,
}

impl<E> CheckResult<E> {
    pub fn holds(checked: u64) -> Self {
        CheckResult {
            status: Status::Holds,
            witness: None,
            assignments_checked: checked,
        }
    }

    pub fn fails(witness: Assignment<E>, checked: u64) -> Self {
        CheckResult {
            status: Status::Fails,
            witness: Some(witness),
            assignments_checked: checked,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }
}
