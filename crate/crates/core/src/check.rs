//! Outcome of an exact identity check.

use std::fmt;

use crate::exact::{Poly, Rat, USeries};

/// First point at which the two sides of an identity disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Coefficient index (or 0 for scalar identities).
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "index {}: lhs {} != rhs {}", self.index, self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    mismatch: Option<Mismatch>,
}

impl Check {
    pub fn pass() -> Self {
        Check { mismatch: None }
    }

    pub fn fail(index: usize, lhs: impl ToString, rhs: impl ToString) -> Self {
        Check {
            mismatch: Some(Mismatch {
                index,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn mismatch(&self) -> Option<&Mismatch> {
        self.mismatch.as_ref()
    }

    pub fn scalars(lhs: &Rat, rhs: &Rat) -> Self {
        if lhs == rhs {
            Check::pass()
        } else {
            Check::fail(0, lhs, rhs)
        }
    }

    pub fn polys(lhs: &Poly, rhs: &Poly) -> Self {
        match lhs.first_difference(rhs) {
            None => Check::pass(),
            Some(i) => Check::fail(i, lhs.coeff(i), rhs.coeff(i)),
        }
    }

    /// Compare only the coefficients of `x^0 .. x^(len-1)`.
    pub fn poly_window(lhs: &Poly, rhs: &Poly, len: usize) -> Self {
        Check::polys(&lhs.truncate(len), &rhs.truncate(len))
    }

    /// Sequences compared entrywise, including their lengths.
    pub fn sequences<T: PartialEq + fmt::Display>(lhs: &[T], rhs: &[T]) -> Self {
        let len = lhs.len().max(rhs.len());
        let show = |v: Option<&T>| v.map_or_else(|| "<missing>".to_string(), T::to_string);
        match (0..len).find(|&i| lhs.get(i) != rhs.get(i)) {
            None => Check::pass(),
            Some(i) => Check::fail(i, show(lhs.get(i)), show(rhs.get(i))),
        }
    }

    /// Index reported is the power of `u`.
    pub fn series(lhs: &USeries, rhs: &USeries) -> Self {
        match lhs.first_difference(rhs) {
            None => Check::pass(),
            Some(i) => {
                let show = |s: &USeries| s.coeffs().get(i).map_or("<missing>".into(), |p| p.to_string());
                Check::fail(i, show(lhs), show(rhs))
            }
        }
    }

    /// Combine several checks, keeping the first failure.
    pub fn all(checks: impl IntoIterator<Item = Check>) -> Self {
        checks
            .into_iter()
            .find(|c| !c.passed())
            .unwrap_or_else(Check::pass)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => f.write_str("ok"),
            Some(m) => write!(f, "mismatch at {m}"),
        }
    }
}
