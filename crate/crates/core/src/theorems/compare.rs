use std::cmp::Ordering;

use super::REFINEMENT_LIMIT;
use crate::exactcore::{cmp, Poly, RootInterval};

/// Result of refining two root enclosures until they are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    /// The intervals are disjoint and ordered as given by the `Ordering`
    /// of the first root against the second.
    Separated { first: RootInterval, second: RootInterval, order: Ordering },
    /// Equal exact roots, or the refinement limit was reached.
    Undecided { first: RootInterval, second: RootInterval, reason: String },
}

impl Separation {
    /// `Some(true)` when the first root is certified strictly below the
    /// second, `Some(false)` when strictly above, `None` when undecided.
    pub fn first_below(&self) -> Option<bool> {
        match self {
            Separation::Separated { order, .. } => Some(*order == Ordering::Less),
            Separation::Undecided { .. } => None,
        }
    }

    pub fn intervals(&self) -> (&RootInterval, &RootInterval) {
        match self {
            Separation::Separated { first, second, .. } | Separation::Undecided { first, second, .. } => {
                (first, second)
            }
        }
    }

    pub fn describe(&self) -> String {
        let (a, b) = self.intervals();
        match self {
            Separation::Separated { order: Ordering::Less, .. } => format!("{a} < {b}"),
            Separation::Separated { .. } => format!("{a} > {b}"),
            Separation::Undecided { reason, .. } => format!("{a} ? {b} ({reason})"),
        }
    }
}

/// Bisects the wider of two enclosures (roots of `p` and `q`) until they
/// no longer overlap. Never concludes from overlapping intervals.
pub fn separate(p: &Poly, first: &RootInterval, q: &Poly, second: &RootInterval) -> Separation {
    let (mut a, mut b) = (first.clone(), second.clone());
    let (mut rounds_a, mut rounds_b) = (0usize, 0usize);
    loop {
        if a.strictly_below(&b) {
            return Separation::Separated { first: a, second: b, order: Ordering::Less };
        }
        if b.strictly_below(&a) {
            return Separation::Separated { first: a, second: b, order: Ordering::Greater };
        }
        if a.is_exact() && b.is_exact() {
            return Separation::Undecided { first: a, second: b, reason: "shared root".into() };
        }
        let refine_a = !a.is_exact() && (b.is_exact() || cmp(&a.width(), &b.width()) != Ordering::Less);
        if refine_a {
            if rounds_a == REFINEMENT_LIMIT {
                break;
            }
            a = a.bisect(p);
            rounds_a += 1;
        } else {
            if rounds_b == REFINEMENT_LIMIT {
                break;
            }
            b = b.bisect(q);
            rounds_b += 1;
        }
    }
    Separation::Undecided { first: a, second: b, reason: format!("refinement limit {REFINEMENT_LIMIT} reached") }
}
