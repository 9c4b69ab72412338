//! Small dense exact linear algebra over the rationals.

use num_traits::Zero;

use crate::rational::{q, Q};
use crate::rootsys::RootVec;

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix is not square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1) } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Greedy maximal linearly independent subfamily, in input order.
pub fn independent_subset(vectors: &[RootVec]) -> Vec<RootVec> {
    let mut echelon: Vec<(usize, RootVec)> = Vec::new();
    let mut chosen = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for (pc, row) in &echelon {
            let c = w.coords()[*pc];
            if !c.is_zero() {
                w = w.add_scaled(-c / row.coords()[*pc], row);
            }
        }
        if let Some(pc) = w.coords().iter().position(|x| !x.is_zero()) {
            echelon.push((pc, w));
            chosen.push(v.clone());
        }
    }
    chosen
}

pub fn rank(vectors: &[RootVec]) -> usize {
    independent_subset(vectors).len()
}
