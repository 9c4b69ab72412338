use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::RootVec;
use crate::error::{Error, Result};

/// Lexicographic order on ambient coordinates, most significant first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOrder {
    significance: Vec<usize>,
}

impl LexOrder {
    /// First coordinate most significant.
    pub fn standard(dim: usize) -> Self {
        LexOrder {
            significance: (0..dim).collect(),
        }
    }

    /// `significance` must be a permutation of `0..dim`.
    pub fn with_significance(significance: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; significance.len()];
        for &i in &significance {
            if i >= seen.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::malformed(
                    format!("{significance:?}"),
                    "significance order is not a permutation",
                ));
            }
        }
        Ok(LexOrder { significance })
    }

    pub fn dim(&self) -> usize {
        self.significance.len()
    }

    pub fn significance(&self) -> &[usize] {
        &self.significance
    }

    pub fn compare(&self, a: &RootVec, b: &RootVec) -> Ordering {
        debug_assert_eq!(a.dim(), self.dim());
        debug_assert_eq!(b.dim(), self.dim());
        self.significance
            .iter()
            .map(|&i| a.coords()[i].cmp(&b.coords()[i]))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    }

    pub fn is_positive(&self, v: &RootVec) -> bool {
        self.significance
            .iter()
            .map(|&i| v.coords()[i])
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_positive())
    }
}

/// Minimum of `roots` under `order`.
pub fn lowest_root(roots: &[RootVec], order: &LexOrder) -> Result<RootVec> {
    let first = roots
        .first()
        .ok_or(Error::Empty("lowest_root of an empty set"))?;
    for r in roots {
        if r.dim() != order.dim() {
            return Err(Error::DimensionMismatch {
                expected: order.dim(),
                found: r.dim(),
            });
        }
    }
    Ok(roots
        .iter()
        .fold(
            first,
            |lo, r| if order.compare(r, lo).is_lt() { r } else { lo },
        )
        .clone())
}
