//! Orbits `Ad(K)H` of the isotropy representation: tangential degeneracy,
//! orbit dimension, Gauss rank and principal curvatures.
//!
//! An orbit is degenerate exactly when it passes through a long restricted
//! root, or through a short root when the restricted system is G2. The
//! nullity is then the multiplicity of that root.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::pairdb::SymmetricPair;
use crate::rational::Q;
use crate::rootsys::{Family, RootClass, RootSystem, RootVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    LongRoot,
    G2ShortRoot,
    NotParallelToRoot,
    ShortRootNonG2,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::LongRoot => "LongRoot",
            Rule::G2ShortRoot => "G2ShortRoot",
            Rule::NotParallelToRoot => "NotParallelToRoot",
            Rule::ShortRootNonG2 => "ShortRootNonG2",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How an orbit is specified: a vector, or a root class resolved to its
/// dominant representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitSpec {
    Vector(RootVec),
    Highest,
    Long,
    Short,
    Middle,
}

impl FromStr for OrbitSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "highest" => OrbitSpec::Highest,
            "long" => OrbitSpec::Long,
            "short" => OrbitSpec::Short,
            "middle" => OrbitSpec::Middle,
            _ => OrbitSpec::Vector(RootVec::parse(s)?),
        })
    }
}

impl OrbitSpec {
    pub fn resolve(&self, sys: &RootSystem) -> Result<RootVec> {
        let class = match self {
            OrbitSpec::Vector(v) => return Ok(v.clone()),
            OrbitSpec::Highest | OrbitSpec::Long => return Ok(sys.highest_root().clone()),
            OrbitSpec::Short => RootClass::Short,
            OrbitSpec::Middle => RootClass::Middle,
        };
        let any = sys
            .roots_of_class(class)
            .into_iter()
            .next()
            .ok_or_else(|| {
                Error::malformed(
                    class.to_string(),
                    format!("{} has no {class} roots", sys.rstype()),
                )
            })?;
        Ok(sys.to_dominant(&any))
    }
}

/// Classification of one orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub pair: String,
    /// Chamber representative.
    pub h: RootVec,
    pub degenerate: bool,
    pub l: u64,
    pub r: u64,
    pub nullity: u64,
    pub rule: Rule,
    pub root_class: Option<RootClass>,
    pub parallel_root: Option<RootVec>,
    /// Whether the parallel root satisfies both sufficient conditions.
    pub conditions_ab: Option<bool>,
    pub nullity_bound: u64,
}

/// Eigenvalues of a shape operator with multiplicities, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurvatureSpectrum {
    pub entries: Vec<Eigen>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigen {
    #[serde(with = "crate::rational::as_string")]
    pub value: Q,
    pub multiplicity: u64,
}

impl CurvatureSpectrum {
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn kernel_dimension(&self) -> u64 {
        self.entries
            .iter()
            .find(|e| e.value.is_zero())
            .map_or(0, |e| e.multiplicity)
    }
}

fn nonzero(pair: &SymmetricPair, h: &RootVec) -> Result<()> {
    pair.system().check_dim(h)?;
    if h.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Representative of the Weyl orbit of `h` in the closed chamber.
pub fn weyl_fold(pair: &SymmetricPair, h: &RootVec) -> Result<RootVec> {
    nonzero(pair, h)?;
    Ok(pair.system().to_dominant(h))
}

/// The longest positive root proportional to `h`, if any.
pub fn parallel_root(pair: &SymmetricPair, h: &RootVec) -> Option<RootVec> {
    parallel_roots(pair.system(), h)
        .into_iter()
        .max_by_key(|r| r.norm_sq())
}

fn parallel_roots(sys: &RootSystem, h: &RootVec) -> Vec<RootVec> {
    sys.positive_roots()
        .iter()
        .filter(|r| !h.is_zero() && r.is_parallel_to(h))
        .cloned()
        .collect()
}

fn positive_root(sys: &RootSystem, lam: &RootVec) -> Result<()> {
    sys.check_dim(lam)?;
    match sys.position(lam) {
        Some(_) => Ok(()),
        None => Err(Error::NotARoot(lam.clone())),
    }
}

/// `2 lambda` is not a root.
pub fn cond_a(sys: &RootSystem, lam: &RootVec) -> Result<bool> {
    positive_root(sys, lam)?;
    Ok(!sys.contains(&lam.scale(Q::from(2))))
}

/// No positive root `nu` orthogonal to `lambda` has `lambda +- nu` a root.
pub fn cond_b(sys: &RootSystem, lam: &RootVec) -> Result<bool> {
    Ok(cond_b_witness(sys, lam)?.is_none())
}

/// A root violating [`cond_b`], if there is one.
pub fn cond_b_witness(sys: &RootSystem, lam: &RootVec) -> Result<Option<RootVec>> {
    positive_root(sys, lam)?;
    Ok(sys
        .positive_roots()
        .iter()
        .filter(|nu| nu.dot(lam).is_zero())
        .find(|nu| sys.contains(&(lam + *nu)) || sys.contains(&(lam - *nu)))
        .cloned())
}

/// The part of `h` inside the span of the roots, with the zero check.
fn in_span(pair: &SymmetricPair, h: &RootVec) -> Result<RootVec> {
    nonzero(pair, h)?;
    let h = pair.system().project_to_span(h);
    if h.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(h)
}

pub fn classify(pair: &SymmetricPair, h: &RootVec) -> Result<OrbitReport> {
    let sys = pair.system();
    let h = sys.to_dominant(&in_span(pair, h)?);
    let l = pair.orbit_dimension(&h)?;
    let nullity_bound = nullity_upper_bound(pair, &h)?;
    let lam = parallel_root(pair, &h);
    let (rule, nullity, class, conditions_ab) = match &lam {
        None => (Rule::NotParallelToRoot, 0, None, None),
        Some(lam) => {
            let class = sys.root_class(lam).expect("parallel root is a root");
            let ab = cond_a(sys, lam)? && cond_b(sys, lam)?;
            let (rule, nullity) = match class {
                RootClass::Long => (Rule::LongRoot, pair.multiplicity(lam)?),
                _ if sys.rstype().family() == Family::G2 => {
                    (Rule::G2ShortRoot, pair.multiplicity(lam)?)
                }
                _ => (Rule::ShortRootNonG2, 0),
            };
            (rule, u64::from(nullity), Some(class), Some(ab))
        }
    };
    let degenerate = nullity > 0;
    if conditions_ab == Some(true) && !degenerate {
        return Err(Error::invariant(format!(
            "{}: root {} satisfies both sufficient conditions but the orbit is not degenerate",
            pair.name(),
            lam.as_ref().expect("set with conditions"),
        )));
    }
    if nullity > nullity_bound || nullity > l {
        return Err(Error::invariant(format!(
            "{}: nullity {nullity} exceeds its bound",
            pair.name()
        )));
    }
    Ok(OrbitReport {
        pair: pair.name().to_string(),
        h,
        degenerate,
        l,
        r: l - nullity,
        nullity,
        rule,
        root_class: class,
        parallel_root: lam,
        conditions_ab,
        nullity_bound,
    })
}

/// Resolves a spec against the pair's restricted system and classifies.
pub fn classify_spec(pair: &SymmetricPair, spec: &OrbitSpec) -> Result<OrbitReport> {
    classify(pair, &spec.resolve(pair.system())?)
}

/// Sum of the multiplicities of positive roots proportional to `h`.
pub fn nullity_upper_bound(pair: &SymmetricPair, h: &RootVec) -> Result<u64> {
    nonzero(pair, h)?;
    Ok(pair
        .weighted_roots()
        .filter(|(r, _)| r.is_parallel_to(h))
        .map(|(_, m)| u64::from(m))
        .sum())
}

/// Spectrum of the shape operator in the normal direction `xi`:
/// eigenvalue `-<lambda, xi> / <lambda, h>` with multiplicity `m(lambda)`
/// for every positive root not orthogonal to `h`.
pub fn principal_curvatures(
    pair: &SymmetricPair,
    h: &RootVec,
    xi: &RootVec,
) -> Result<CurvatureSpectrum> {
    nonzero(pair, h)?;
    pair.system().check_dim(xi)?;
    if !xi.dot(h).is_zero() {
        return Err(Error::NotNormal {
            xi: xi.clone(),
            h: h.clone(),
        });
    }
    let mut merged: BTreeMap<Q, u64> = BTreeMap::new();
    for (lam, m) in pair.weighted_roots() {
        let lh = lam.dot(h);
        if !lh.is_zero() {
            *merged.entry(-lam.dot(xi) / lh).or_default() += u64::from(m);
        }
    }
    Ok(CurvatureSpectrum {
        entries: merged
            .into_iter()
            .map(|(value, multiplicity)| Eigen {
                value,
                multiplicity,
            })
            .collect(),
    })
}

/// Positive roots spanning the kernel of the shape operator for `xi`:
/// those with `<mu, h> != 0` and `<mu, xi> = 0`.
pub fn kernel_roots(pair: &SymmetricPair, h: &RootVec, xi: &RootVec) -> Result<Vec<RootVec>> {
    principal_curvatures(pair, h, xi)?;
    Ok(pair
        .system()
        .positive_roots()
        .iter()
        .filter(|mu| !mu.dot(h).is_zero() && mu.dot(xi).is_zero())
        .cloned()
        .collect())
}

/// A basis of the normal directions `xi` inside the root span with
/// `<xi, h> = 0`.
pub fn normal_basis(pair: &SymmetricPair, h: &RootVec) -> Result<Vec<RootVec>> {
    let h = in_span(pair, h)?;
    let hh = h.norm_sq();
    let candidates: Vec<RootVec> = pair
        .system()
        .simple_roots()
        .iter()
        .map(|a| a.add_scaled(-a.dot(&h) / hh, &h))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(linalg::independent_subset(&candidates))
}

/// Roots lying in every shape-operator kernel over [`normal_basis`].
pub fn common_kernel_roots(pair: &SymmetricPair, h: &RootVec) -> Result<Vec<RootVec>> {
    let h = in_span(pair, h)?;
    let basis = normal_basis(pair, &h)?;
    let mut common: Vec<RootVec> = pair
        .system()
        .positive_roots()
        .iter()
        .filter(|mu| !mu.dot(&h).is_zero())
        .cloned()
        .collect();
    for xi in &basis {
        let ker = kernel_roots(pair, &h, xi)?;
        common.retain(|mu| ker.contains(mu));
    }
    Ok(common)
}
