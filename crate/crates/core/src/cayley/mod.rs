//! Strongly orthogonal roots and the projection of a root system onto
//! their span.
//!
//! For a simple algebra with root system `R~` and highest root `delta`, the
//! roots with `<alpha, delta> / |delta|^2 = 1/2` span the quaternionic part
//! of the isotropy representation. A greedy choice of strongly orthogonal
//! roots `gamma_1 .. gamma_s` among them, and the projection
//! `alpha -> sum_i <alpha, gamma_i> / |gamma_i|^2 lambda_i`, recovers the
//! restricted root system with multiplicities given by preimage sizes.

mod identities;

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Q};
use crate::rootsys::{
    lowest_root, Family, RootClass, RootSystem, RootSystemType, RootVec, WolfClass,
};

/// Coefficients of a projected vector against `lambda_1 .. lambda_s`.
pub type Coeffs = Vec<Q>;

/// Positive roots with Wolf ratio 1/2, in ascending order.
pub fn m_roots(sys: &RootSystem) -> Vec<RootVec> {
    sys.positive_roots()
        .iter()
        .filter(|r| matches!(sys.wolf_class(r), Ok(WolfClass::Half)))
        .cloned()
        .collect()
}

/// Greedy extraction: take the lowest root of `q`, discard it and every
/// root that is not strongly orthogonal to it, repeat.
pub fn strongly_orthogonal(q: &[RootVec], sys: &RootSystem) -> Result<Vec<RootVec>> {
    let mut rest: Vec<RootVec> = q.to_vec();
    let mut gammas = Vec::new();
    while !rest.is_empty() {
        let g = lowest_root(&rest, sys.order())?;
        rest.retain(|b| *b != g && !sys.contains(&(b + &g)) && !sys.contains(&(b - &g)));
        gammas.push(g);
    }
    Ok(gammas)
}

/// `<alpha, gamma_i> / |gamma_i|^2` for each `i`.
pub fn project(alpha: &RootVec, gammas: &[RootVec]) -> Coeffs {
    gammas.iter().map(|g| alpha.dot(g) / g.norm_sq()).collect()
}

fn inner(x: &[Q], y: &[Q], norms: &[Q]) -> Q {
    x.iter()
        .zip(y)
        .zip(norms)
        .fold(Q::zero(), |s, ((a, b), n)| s + a * b * n)
}

/// One nonzero projected root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectedRoot {
    #[serde(with = "rational::vec_as_strings")]
    pub coeffs: Coeffs,
    pub class: RootClass,
    pub multiplicity: u32,
    pub preimage: Vec<RootVec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionDatum {
    pub algebra: RootSystemType,
    pub delta: RootVec,
    pub m_plus: Vec<RootVec>,
    pub gammas: Vec<RootVec>,
    #[serde(with = "rational::vec_as_strings")]
    pub gamma_norms: Vec<Q>,
    pub restricted_type: RootSystemType,
    /// Nonzero projected roots of both signs, sorted by coefficients.
    pub projected: Vec<ProjectedRoot>,
}

impl ProjectionDatum {
    pub fn rank(&self) -> usize {
        self.gammas.len()
    }

    pub fn find(&self, coeffs: &[Q]) -> Option<&ProjectedRoot> {
        self.projected
            .binary_search_by(|p| p.coeffs.as_slice().cmp(coeffs))
            .ok()
            .map(|i| &self.projected[i])
    }

    pub fn preimage(&self, coeffs: &[Q]) -> Result<&[RootVec]> {
        self.find(coeffs)
            .map(|p| p.preimage.as_slice())
            .ok_or_else(|| Error::malformed(format_coeffs(coeffs), "not a projected root"))
    }

    pub fn inner(&self, x: &[Q], y: &[Q]) -> Q {
        inner(x, y, &self.gamma_norms)
    }

    /// Multiplicity per length class.
    pub fn class_multiplicities(&self) -> BTreeMap<RootClass, u32> {
        self.projected
            .iter()
            .map(|p| (p.class, p.multiplicity))
            .collect()
    }

    /// Dimension of the orbit through a long projected root: half the
    /// total multiplicity of projected roots not orthogonal to it.
    pub fn long_orbit_dimension(&self) -> u64 {
        let long = self
            .projected
            .iter()
            .find(|p| p.class == RootClass::Long)
            .expect("projected systems have long roots");
        self.projected
            .iter()
            .filter(|p| !self.inner(&p.coeffs, &long.coeffs).is_zero())
            .map(|p| u64::from(p.multiplicity))
            .sum::<u64>()
            / 2
    }
}

pub fn format_coeffs(c: &[Q]) -> String {
    let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Builds the full projection datum and checks that the projected vectors
/// form a crystallographic root system whose multiplicities are constant
/// on Weyl orbits.
pub fn restricted_from_projection(sys: &RootSystem) -> Result<ProjectionDatum> {
    let m_plus = m_roots(sys);
    let gammas = strongly_orthogonal(&m_plus, sys)?;
    if gammas.is_empty() {
        return Err(Error::Empty("roots with Wolf ratio 1/2"));
    }
    let norms: Vec<Q> = gammas.iter().map(RootVec::norm_sq).collect();
    let mut fibres: BTreeMap<Coeffs, Vec<RootVec>> = BTreeMap::new();
    for alpha in sys.all_roots() {
        let c = project(&alpha, &gammas);
        if c.iter().any(|x| !x.is_zero()) {
            fibres.entry(c).or_default().push(alpha);
        }
    }
    check_root_system(&fibres, &norms)?;
    let restricted_type = identify(&fibres, &norms)?;

    let lengths: Vec<Q> = fibres.keys().map(|c| inner(c, c, &norms)).collect();
    let max = *lengths.iter().max().expect("nonempty");
    let min = *lengths.iter().min().expect("nonempty");
    let projected = fibres
        .into_iter()
        .zip(lengths)
        .map(|((coeffs, mut preimage), len)| {
            preimage.sort_by(|a, b| sys.order().compare(a, b));
            ProjectedRoot {
                class: if len == max {
                    RootClass::Long
                } else if len == min {
                    RootClass::Short
                } else {
                    RootClass::Middle
                },
                multiplicity: preimage.len() as u32,
                coeffs,
                preimage,
            }
        })
        .collect();
    Ok(ProjectionDatum {
        algebra: sys.rstype(),
        delta: sys.highest_root().clone(),
        m_plus,
        gammas,
        gamma_norms: norms,
        restricted_type,
        projected,
    })
}

/// Reflection closure, integrality of Cartan numbers and Weyl invariance
/// of the fibre sizes.
fn check_root_system(fibres: &BTreeMap<Coeffs, Vec<RootVec>>, norms: &[Q]) -> Result<()> {
    for x in fibres.keys() {
        let xx = inner(x, x, norms);
        for (y, fy) in fibres {
            let cartan = Q::from(2) * inner(x, y, norms) / xx;
            if !cartan.is_integer() {
                return Err(Error::invariant(format!(
                    "projected roots {} and {} have Cartan number {cartan}",
                    format_coeffs(x),
                    format_coeffs(y)
                )));
            }
            let image: Coeffs = y.iter().zip(x).map(|(b, a)| b - cartan * a).collect();
            match fibres.get(&image) {
                Some(fi) if fi.len() == fy.len() => {}
                Some(_) => {
                    return Err(Error::invariant(format!(
                        "multiplicity of {} differs from its reflection {}",
                        format_coeffs(y),
                        format_coeffs(&image)
                    )))
                }
                None => {
                    return Err(Error::invariant(format!(
                        "projected set is not closed: {} reflects to {}",
                        format_coeffs(y),
                        format_coeffs(&image)
                    )))
                }
            }
        }
    }
    Ok(())
}

/// Sorted counts of roots per squared length, normalized by the minimum.
fn length_profile(lengths: impl Iterator<Item = Q>) -> Vec<(Q, usize)> {
    let lengths: Vec<Q> = lengths.collect();
    let min = *lengths.iter().min().expect("nonempty");
    let mut counts: BTreeMap<Q, usize> = BTreeMap::new();
    for l in lengths {
        *counts.entry(l / min).or_default() += 1;
    }
    counts.into_iter().collect()
}

fn identify(fibres: &BTreeMap<Coeffs, Vec<RootVec>>, norms: &[Q]) -> Result<RootSystemType> {
    let rank = norms.len();
    let profile = length_profile(fibres.keys().map(|c| inner(c, c, norms)));
    for family in Family::ALL {
        if family.fixed_rank().is_some_and(|r| r != rank) {
            continue;
        }
        let Ok(t) = RootSystemType::new(family, rank) else {
            continue;
        };
        if 2 * t.positive_root_count() != fibres.len() {
            continue;
        }
        let candidate = RootSystem::shared(t)?;
        if length_profile(candidate.all_roots().map(|r| r.norm_sq())) == profile {
            return Ok(t);
        }
    }
    Err(Error::invariant(format!(
        "projected system of rank {rank} with {} roots matches no known type",
        fibres.len()
    )))
}

/// Every sum of two roots with Wolf ratio 1/2 that is a root equals the
/// highest root. Returns the first counterexample.
pub fn half_sums_are_highest(sys: &RootSystem) -> Option<(RootVec, RootVec)> {
    let m = m_roots(sys);
    let delta = sys.highest_root();
    for (i, a) in m.iter().enumerate() {
        for b in &m[i..] {
            let s = a + b;
            if sys.contains(&s) && s != *delta {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Structural checks on a projection datum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub pairwise_strongly_orthogonal: bool,
    pub gammas_in_m_plus: bool,
    pub equal_gamma_lengths: bool,
    pub half_sums_are_highest: bool,
    /// `|pi(alpha)|^2 <= |alpha|^2`, with equality exactly on the span of
    /// the gammas.
    pub norm_inequality: bool,
    /// No root of `m_plus` outside the gammas is strongly orthogonal to all
    /// of them.
    pub maximal: bool,
    /// `2 |m_plus|` is divisible by 4.
    pub quaternionic_dimension: bool,
    pub multiplicity_total: bool,
}

impl PropertyReport {
    pub fn all_hold(&self, expect_equal_lengths: bool) -> bool {
        self.pairwise_strongly_orthogonal
            && self.gammas_in_m_plus
            && (self.equal_gamma_lengths || !expect_equal_lengths)
            && self.half_sums_are_highest
            && self.norm_inequality
            && self.maximal
            && self.quaternionic_dimension
            && self.multiplicity_total
    }
}

pub fn check_properties(sys: &RootSystem, datum: &ProjectionDatum) -> PropertyReport {
    let g = &datum.gammas;
    let pairwise = g
        .iter()
        .enumerate()
        .all(|(i, a)| g[i + 1..].iter().all(|b| sys.strongly_orthogonal(a, b)));
    let in_m_plus = g.iter().all(|x| datum.m_plus.contains(x));
    let equal = g.iter().all(|x| x.norm_sq() == g[0].norm_sq());
    let span_of_gammas = |a: &RootVec| {
        let c = project(a, g);
        let back = g
            .iter()
            .zip(&c)
            .fold(RootVec::zero(a.dim()), |acc, (x, ci)| {
                acc.add_scaled(*ci, x)
            });
        back == *a
    };
    let norm_inequality = sys.all_roots().all(|a| {
        let c = project(&a, g);
        let pn = datum.inner(&c, &c);
        let an = a.norm_sq();
        pn <= an && ((pn == an) == span_of_gammas(&a))
    });
    let maximal = datum
        .m_plus
        .iter()
        .filter(|b| !g.contains(b))
        .all(|b| !g.iter().all(|x| sys.strongly_orthogonal(b, x)));
    let nonzero = sys
        .all_roots()
        .filter(|a| project(a, g).iter().any(|x| !x.is_zero()))
        .count();
    let total: usize = datum
        .projected
        .iter()
        .map(|p| p.multiplicity as usize)
        .sum();
    PropertyReport {
        pairwise_strongly_orthogonal: pairwise,
        gammas_in_m_plus: in_m_plus,
        equal_gamma_lengths: equal,
        half_sums_are_highest: half_sums_are_highest(sys).is_none(),
        norm_inequality,
        maximal,
        quaternionic_dimension: (2 * datum.m_plus.len()) % 4 == 0,
        multiplicity_total: total == nonzero,
    }
}

/// One `beta +- alpha` step of a root-set identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub beta: RootVec,
    pub excluded: Vec<RootVec>,
    /// Elements `alpha` of the preimage with `beta - alpha` a root.
    pub minus: Vec<RootVec>,
    /// Elements `alpha` of the preimage with `beta + alpha` a root.
    pub plus: Vec<RootVec>,
    pub expected_minus: RootVec,
    pub expected_plus: RootVec,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub algebra: RootSystemType,
    pub lambda: RootVec,
    #[serde(with = "rational::vec_as_strings")]
    pub lambda_projection: Coeffs,
    pub lambda_preimage: Vec<RootVec>,
    pub lambda_preimage_matches: bool,
    pub nu: RootVec,
    #[serde(with = "rational::vec_as_strings")]
    pub nu_projection: Coeffs,
    pub nu_preimage: Vec<RootVec>,
    pub nu_preimage_matches: bool,
    /// Both projections are short and mutually orthogonal.
    pub short_and_orthogonal: bool,
    pub steps: Vec<StepReport>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.lambda_preimage_matches
            && self.nu_preimage_matches
            && self.short_and_orthogonal
            && self.steps.iter().all(|s| s.holds)
    }
}

/// `{alpha in preimage \ exclude : beta - alpha in R~}` and the same for
/// `beta + alpha`.
pub fn rootset_step(
    sys: &RootSystem,
    beta: &RootVec,
    preimage: &[RootVec],
    exclude: &[RootVec],
) -> (Vec<RootVec>, Vec<RootVec>) {
    let pool: Vec<&RootVec> = preimage.iter().filter(|a| !exclude.contains(a)).collect();
    let minus = pool
        .iter()
        .filter(|a| sys.contains(&(beta - **a)))
        .map(|a| (*a).clone())
        .collect();
    let plus = pool
        .iter()
        .filter(|a| sys.contains(&(beta + **a)))
        .map(|a| (*a).clone())
        .collect();
    (minus, plus)
}

/// Checks the preimage sets and `beta +- alpha` identities for the
/// quaternionic E-type algebra `sys` (E6, E7 or E8).
pub fn rootset_identities(sys: &RootSystem, datum: &ProjectionDatum) -> Result<IdentityReport> {
    let label = sys.rstype().to_string();
    let case = identities::CASES
        .iter()
        .find(|c| c.algebra == label)
        .ok_or_else(|| Error::malformed(&label, "no root-set identities for this algebra"))?;
    let v = |c: &[i64]| sys.from_simple_coords(c);
    let set = |cs: &[&[i64]]| -> Result<HashSet<RootVec>> { cs.iter().map(|c| v(c)).collect() };

    let lambda = v(case.lambda)?;
    let nu = v(case.nu)?;
    let lp = project(&lambda, &datum.gammas);
    let np = project(&nu, &datum.gammas);
    let lambda_pre = datum.preimage(&lp)?.to_vec();
    let nu_pre = datum.preimage(&np)?.to_vec();
    let short = |c: &Coeffs| datum.find(c).is_some_and(|p| p.class == RootClass::Short);
    let short_and_orthogonal = short(&lp) && short(&np) && datum.inner(&lp, &np).is_zero();

    let mut steps = Vec::new();
    for step in case.steps {
        let beta = v(step.beta)?;
        let excluded: Vec<RootVec> = step.exclude.iter().map(|c| v(c)).collect::<Result<_>>()?;
        let (minus, plus) = rootset_step(sys, &beta, &lambda_pre, &excluded);
        let expected_minus = v(step.minus)?;
        let expected_plus = v(step.plus)?;
        let holds = minus == [expected_minus.clone()] && plus == [expected_plus.clone()];
        steps.push(StepReport {
            beta,
            excluded,
            minus,
            plus,
            expected_minus,
            expected_plus,
            holds,
        });
    }
    Ok(IdentityReport {
        algebra: sys.rstype(),
        lambda_preimage_matches: lambda_pre.iter().cloned().collect::<HashSet<_>>()
            == set(case.lambda_preimage)?,
        nu_preimage_matches: nu_pre.iter().cloned().collect::<HashSet<_>>()
            == set(case.nu_preimage)?,
        lambda,
        lambda_projection: lp,
        lambda_preimage: lambda_pre,
        nu,
        nu_projection: np,
        nu_preimage: nu_pre,
        short_and_orthogonal,
        steps,
    })
}

/// Everything the appendix computation produces for one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub datum: ProjectionDatum,
    pub class_multiplicities: BTreeMap<RootClass, u32>,
    pub long_orbit_dimension: u64,
    pub properties: PropertyReport,
    pub identities: Option<IdentityReport>,
    pub verified: bool,
}

/// Algebras the appendix computation applies to.
pub const APPENDIX_ALGEBRAS: [Family; 5] =
    [Family::F4, Family::E6, Family::E7, Family::E8, Family::G2];

pub fn appendix(family: Family) -> Result<AppendixReport> {
    if !APPENDIX_ALGEBRAS.contains(&family) {
        return Err(Error::malformed(
            family.to_string(),
            "expected one of f4, e6, e7, e8, g2",
        ));
    }
    let sys = RootSystem::shared(RootSystemType::exceptional(family)?)?;
    let datum = restricted_from_projection(&sys)?;
    let properties = check_properties(&sys, &datum);
    let identities = match family {
        Family::E6 | Family::E7 | Family::E8 => Some(rootset_identities(&sys, &datum)?),
        _ => None,
    };
    let expected_type = if family == Family::G2 {
        Family::G2
    } else {
        Family::F4
    };
    let verified = properties.all_hold(family != Family::G2)
        && datum.restricted_type.family() == expected_type
        && identities.as_ref().is_none_or(IdentityReport::holds);
    Ok(AppendixReport {
        class_multiplicities: datum.class_multiplicities(),
        long_orbit_dimension: datum.long_orbit_dimension(),
        datum,
        properties,
        identities,
        verified,
    })
}
