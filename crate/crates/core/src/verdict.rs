use crate::lattice::Elem;

/// Counterexample attached to a failed check.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub elements: Vec<Elem>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
}

impl Witness {
    pub fn elements(elements: Vec<Elem>) -> Self {
        Witness {
            elements,
            lhs: None,
            rhs: None,
        }
    }

    pub fn with_values(elements: Vec<Elem>, lhs: f64, rhs: f64) -> Self {
        Witness {
            elements,
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }
}

/// Outcome of a property check.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub(crate) fn fail(elements: Vec<Elem>) -> Self {
        Verdict::Fails(Witness::elements(elements))
    }

    pub(crate) fn fail_with(elements: Vec<Elem>, lhs: f64, rhs: f64) -> Self {
        Verdict::Fails(Witness::with_values(elements, lhs, rhs))
    }

    /// Keeps the first failure.
    pub(crate) fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            failed => failed,
        }
    }
}
