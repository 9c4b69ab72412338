//! Bourbaki realizations: ambient spaces, simple roots and root shapes.
//!
//! Simple roots are numbered as in Bourbaki's plates, so `alpha_2` of E6
//! is the branch node `e1 + e2`.

use num_traits::Zero;

use super::{Family, RootSystemType, RootVec};
use crate::rational::{qr, Q};

pub(crate) fn ambient_dim(t: RootSystemType) -> usize {
    match t.family() {
        Family::A => t.rank() + 1,
        Family::B | Family::C | Family::D | Family::BC => t.rank(),
        Family::G2 => 3,
        Family::F4 => 4,
        Family::E6 | Family::E7 | Family::E8 => 8,
    }
}

/// Significance order of ambient coordinates for the lexicographic order.
/// Chosen per type so that every Bourbaki positive root is lex-positive.
pub(crate) fn significance(t: RootSystemType) -> Vec<usize> {
    let n = ambient_dim(t);
    match t.family() {
        Family::E6 | Family::E7 | Family::E8 => (0..n).rev().collect(),
        Family::G2 => vec![2, 0, 1],
        _ => (0..n).collect(),
    }
}

fn e(n: usize, i: usize) -> RootVec {
    RootVec::unit(n, i)
}

fn diff(n: usize, i: usize, j: usize) -> RootVec {
    &e(n, i) - &e(n, j)
}

pub(crate) fn simple_roots(t: RootSystemType) -> Vec<RootVec> {
    let n = ambient_dim(t);
    let p = t.rank();
    let chain = |k: usize| (0..k).map(|i| diff(n, i, i + 1)).collect::<Vec<_>>();
    match t.family() {
        Family::A => chain(p),
        Family::B | Family::BC => {
            let mut s = chain(p - 1);
            s.push(e(n, p - 1));
            s
        }
        Family::C => {
            let mut s = chain(p - 1);
            s.push(e(n, p - 1).scale(qr(2, 1)));
            s
        }
        Family::D => {
            let mut s = chain(p - 1);
            s.push(&e(n, p - 2) + &e(n, p - 1));
            s
        }
        Family::G2 => vec![
            RootVec::from_ints(&[1, -1, 0]),
            RootVec::from_ints(&[-2, 1, 1]),
        ],
        Family::F4 => vec![
            RootVec::from_ints(&[0, 1, -1, 0]),
            RootVec::from_ints(&[0, 0, 1, -1]),
            RootVec::from_ints(&[0, 0, 0, 1]),
            RootVec::from_halves(&[1, -1, -1, -1]),
        ],
        Family::E6 | Family::E7 | Family::E8 => {
            let mut s = vec![
                RootVec::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                &e(8, 0) + &e(8, 1),
            ];
            s.extend((0..6).map(|i| diff(8, i + 1, i)));
            s.truncate(p);
            s
        }
    }
}

/// Extra generators needed besides the simple roots when closing under
/// reflections: the doubled short roots of BC are not reflection images.
pub(crate) fn reflection_seeds(t: RootSystemType) -> Vec<RootVec> {
    let mut seeds = simple_roots(t);
    if t.family() == Family::BC {
        let last = seeds[t.rank() - 1].scale(qr(2, 1));
        seeds.push(last);
    }
    seeds
}

/// Nonzero coordinates if they are all integers.
fn integer_support(v: &RootVec) -> Option<Vec<i64>> {
    let mut out = Vec::new();
    for c in v.coords() {
        if c.is_zero() {
            continue;
        }
        if !c.is_integer() {
            return None;
        }
        out.push(*c.numer());
    }
    Some(out)
}

fn is_pm_ei(v: &RootVec, scale: i64) -> bool {
    matches!(integer_support(v).as_deref(), Some([x]) if x.abs() == scale)
}

fn is_pm_ei_pm_ej(v: &RootVec) -> bool {
    matches!(integer_support(v).as_deref(), Some([x, y]) if x.abs() == 1 && y.abs() == 1)
}

fn is_a_root(v: &RootVec) -> bool {
    let mut s = integer_support(v).unwrap_or_default();
    s.sort_unstable();
    s == [-1, 1]
}

/// Number of negative entries when every coordinate is +-1/2.
fn half_spinor_negatives(v: &RootVec) -> Option<usize> {
    let half = qr(1, 2);
    v.coords()
        .iter()
        .all(|c| *c == half || *c == -half)
        .then(|| v.coords().iter().filter(|c| **c < Q::zero()).count())
}

fn is_e8_root(v: &RootVec) -> bool {
    is_pm_ei_pm_ej(v) || half_spinor_negatives(v).is_some_and(|k| k % 2 == 0)
}

/// Membership in the full root system (positive and negative roots),
/// decided from the closed-form Bourbaki description.
pub(crate) fn is_root_shape(t: RootSystemType, v: &RootVec) -> bool {
    if v.dim() != ambient_dim(t) {
        return false;
    }
    let c = v.coords();
    match t.family() {
        Family::A => is_a_root(v),
        Family::B => is_pm_ei(v, 1) || is_pm_ei_pm_ej(v),
        Family::C => is_pm_ei(v, 2) || is_pm_ei_pm_ej(v),
        Family::D => is_pm_ei_pm_ej(v),
        Family::BC => is_pm_ei(v, 1) || is_pm_ei(v, 2) || is_pm_ei_pm_ej(v),
        Family::F4 => is_pm_ei(v, 1) || is_pm_ei_pm_ej(v) || half_spinor_negatives(v).is_some(),
        Family::G2 => {
            if !(c[0] + c[1] + c[2]).is_zero() {
                return false;
            }
            let mut s = integer_support(v).unwrap_or_default();
            s.sort_unstable();
            s == [-1, 1] || s == [-1, -1, 2] || s == [-2, 1, 1]
        }
        Family::E8 => is_e8_root(v),
        Family::E7 => is_e8_root(v) && (c[6] + c[7]).is_zero(),
        Family::E6 => is_e8_root(v) && c[5] == c[6] && (c[6] + c[7]).is_zero(),
    }
}
