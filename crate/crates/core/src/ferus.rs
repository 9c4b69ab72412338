//! Adams numbers, Ferus numbers and the scan for orbits attaining
//! `F(l) = r`.
//!
//! `A(k) = 2^c + 8d - 1` where `k = (2s+1) 2^t` and `t = c + 4d` with
//! `0 <= c <= 3`; `F(l)` is the least `k` with `A(k) + k >= l`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::{self, OrbitSpec};
use crate::pairdb::{PairDb, Params};
use crate::rootsys::RootClass;

/// Adams number of `k`: the maximal number of independent vector fields
/// on `S^(k-1)`.
pub fn adams(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::malformed("0", "the Adams number needs k >= 1"));
    }
    let t = u64::from(k.trailing_zeros());
    let (c, d) = (t % 4, t / 4);
    Ok((1 << c) + 8 * d - 1)
}

fn adams_unchecked(k: u64) -> u64 {
    adams(k).expect("k >= 1")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FerusCertificate {
    pub l: u64,
    #[serde(rename = "F")]
    pub f: u64,
    pub witness_k: u64,
    /// Every `k` below this value was checked to have `A(k) + k < l`.
    pub minimality_checked_up_to: u64,
}

/// `F(l)` by ascending scan.
pub fn ferus(l: u64) -> Result<FerusCertificate> {
    if l == 0 {
        return Err(Error::malformed("0", "the Ferus number needs l >= 1"));
    }
    let f = (1..=l)
        .find(|&k| adams_unchecked(k) + k >= l)
        .expect("A(l) + l >= l");
    Ok(FerusCertificate {
        l,
        f,
        witness_k: f,
        minimality_checked_up_to: f,
    })
}

pub fn ferus_number(l: u64) -> u64 {
    ferus(l.max(1)).expect("l >= 1").f
}

/// Upper end of the range `0 <= a <= 2^c + 8d - 1` (with `q = c + 4d`)
/// over which `F(2^q + a) = 2^q`.
pub fn identity_range(q: u32) -> u64 {
    adams_unchecked(1 << q)
}

/// Checks `F(2^q + a) = 2^q` for every `a` in [`identity_range`].
pub fn ferus_identity_check(q: u32) -> Result<bool> {
    if q == 0 || q > 40 {
        return Err(Error::malformed(q.to_string(), "q must lie in 1..=40"));
    }
    let base = 1u64 << q;
    Ok((0..=identity_range(q)).all(|a| ferus_number(base + a) == base))
}

/// Summary of the numeric identities up to `2^qmax`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub qmax: u32,
    /// `F(l) <= F(l + 1)` for `1 <= l < 2^qmax`.
    pub monotone: bool,
    /// `F(l) <= l`.
    pub bounded_by_l: bool,
    /// `F(2^q) = 2^q`, via `A(k) + k < 2^q` for all `k < 2^q`.
    pub powers_of_two: bool,
    /// `F(2^q + a) = 2^q` on the stated range, per `q`.
    pub ranges: Vec<(u32, u64, bool)>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.monotone && self.bounded_by_l && self.powers_of_two && self.ranges.iter().all(|r| r.2)
    }
}

pub fn verify_identities(qmax: u32) -> Result<IdentityReport> {
    if qmax == 0 || qmax > 24 {
        return Err(Error::malformed(
            qmax.to_string(),
            "qmax must lie in 1..=24",
        ));
    }
    let top = 1u64 << qmax;
    let table: Vec<u64> = (1..=top).map(ferus_number).collect();
    let monotone = table.windows(2).all(|w| w[0] <= w[1]);
    let bounded_by_l = table.iter().zip(1..).all(|(f, l)| *f <= l);
    let powers_of_two = (1..=qmax).all(|q| {
        let p = 1u64 << q;
        (1..p).all(|k| adams_unchecked(k) + k < p) && ferus_number(p) == p
    });
    let ranges = (1..=qmax)
        .map(|q| Ok((q, identity_range(q), ferus_identity_check(q)?)))
        .collect::<Result<_>>()?;
    Ok(IdentityReport {
        qmax,
        monotone,
        bounded_by_l,
        powers_of_two,
        ranges,
    })
}

/// Parameter grid for [`equality_scan`]; rows only use the parameters
/// they declare, starting at their own lower bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanGrid {
    pub p_max: i64,
    pub n_max: i64,
}

impl Default for ScanGrid {
    fn default() -> Self {
        ScanGrid {
            p_max: 16,
            n_max: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub pair: String,
    pub key: String,
    pub params: Params,
    pub root_class: RootClass,
    pub degenerate: bool,
    pub l: u64,
    pub r: u64,
    #[serde(rename = "F")]
    pub f: u64,
    pub equality: bool,
}

/// Orbits through a root of each length class of every pair on the grid.
/// Equality is only flagged for degenerate orbits.
pub fn equality_scan(db: &PairDb, grid: ScanGrid) -> Result<Vec<ScanRow>> {
    let mut out = Vec::new();
    for d in db.pairs() {
        for params in d.param_grid(grid.p_max, grid.n_max) {
            let pair = d.instantiate(params)?;
            let sys = pair.system();
            for (class, spec) in [
                (RootClass::Long, OrbitSpec::Long),
                (RootClass::Middle, OrbitSpec::Middle),
                (RootClass::Short, OrbitSpec::Short),
            ] {
                if !sys.has_class(class) {
                    continue;
                }
                let rep = orbits::classify_spec(&pair, &spec)?;
                // In BC the orbit through e_i is the orbit through 2e_i.
                if class != RootClass::Long && rep.root_class == Some(RootClass::Long) {
                    continue;
                }
                let f = ferus_number(rep.l);
                out.push(ScanRow {
                    pair: pair.name().to_string(),
                    key: d.key().to_string(),
                    params,
                    root_class: class,
                    degenerate: rep.degenerate,
                    l: rep.l,
                    r: rep.r,
                    f,
                    equality: rep.degenerate && f == rep.r,
                });
            }
        }
    }
    Ok(out)
}
