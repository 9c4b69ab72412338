use std::collections::HashMap;
use std::sync::Arc;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Flag, PairDatum, Params};
use crate::error::{Error, Result};
use crate::rootsys::{RootClass, RootSystem, RootSystemType, RootVec};

/// A pair with parameters bound: its restricted root system and the
/// multiplicity of every positive restricted root.
#[derive(Clone, Debug)]
pub struct SymmetricPair {
    datum: Arc<PairDatum>,
    params: Params,
    name: String,
    system: Arc<RootSystem>,
    class_mult: HashMap<RootClass, u32>,
    dim_g: i64,
    dim_k: i64,
}

/// Face of the closed chamber containing a point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChamberFace {
    /// Indices of simple roots pairing positively with the point.
    pub delta: Vec<usize>,
    /// Positive roots orthogonal to the point.
    pub orthogonal: Vec<RootVec>,
}

impl SymmetricPair {
    pub(super) fn new(datum: Arc<PairDatum>, params: Params) -> Result<Self> {
        let (p, n) = datum.check_params(params)?;
        let rank = usize::try_from(datum.rank.eval(p, n)?)
            .map_err(|_| Error::malformed(datum.rank.text(), "negative rank"))?;
        let rstype = RootSystemType::new(datum.family, rank)?;
        let system = RootSystem::shared(rstype)?;
        let mut present: Vec<RootClass> = [RootClass::Long, RootClass::Middle, RootClass::Short]
            .into_iter()
            .filter(|c| system.has_class(*c))
            .collect();
        present.dedup();
        let class_mult =
            datum
                .mult
                .bind(datum.family, &present, p, n)
                .map_err(|e| Error::Params {
                    pair: datum.key.clone(),
                    message: e.to_string(),
                })?;
        let name = datum.instance_key(params)?;
        Ok(SymmetricPair {
            dim_g: datum.dim_g.eval(p, n)?,
            dim_k: datum.dim_k.eval(p, n)?,
            datum,
            params,
            name,
            system,
            class_mult,
        })
    }

    /// Flag consistency and `sum m + rank = dim g - dim k`.
    pub(super) fn check_bookkeeping(&self) -> Result<()> {
        let total = self.total_multiplicity() + self.rank() as u64;
        let dim_m = self.dim_g - self.dim_k;
        let fail = |message: String| {
            Err(Error::Params {
                pair: self.name.clone(),
                message,
            })
        };
        if i64::try_from(total).ok() != Some(dim_m) {
            return fail(format!(
                "multiplicities plus rank give {total}, dim g - dim k = {dim_m}"
            ));
        }
        let all = |v: u32| self.class_mult.values().all(|m| *m == v);
        if self.datum.has_flag(Flag::GroupManifold) && (!all(2) || self.dim_g != 2 * self.dim_k) {
            return fail("group manifold needs every multiplicity 2 and dim g = 2 dim k".into());
        }
        if self.datum.has_flag(Flag::NormalRealForm) && !all(1) {
            return fail("normal real form needs every multiplicity 1".into());
        }
        if self.datum.has_flag(Flag::QuaternionicF4Exceptional)
            && self.datum.family != crate::rootsys::Family::F4
        {
            return fail("quaternionic exceptional pairs restrict to F4".into());
        }
        Ok(())
    }

    pub fn datum(&self) -> &Arc<PairDatum> {
        &self.datum
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Instantiated `g|k` name.
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn dim_g(&self) -> i64 {
        self.dim_g
    }

    pub fn dim_k(&self) -> i64 {
        self.dim_k
    }

    pub fn class_multiplicity(&self, class: RootClass) -> Option<u32> {
        self.class_mult.get(&class).copied()
    }

    /// Multiplicity of the `i`-th positive root.
    pub fn mult_of_positive(&self, i: usize) -> u32 {
        self.class_mult[&self.system.class_of_positive(i)]
    }

    /// Multiplicity of a root of either sign.
    pub fn multiplicity(&self, root: &RootVec) -> Result<u32> {
        self.system.check_dim(root)?;
        self.system
            .root_class(root)
            .map(|c| self.class_mult[&c])
            .ok_or_else(|| Error::NotARoot(root.clone()))
    }

    /// Positive roots with their multiplicities.
    pub fn weighted_roots(&self) -> impl Iterator<Item = (&RootVec, u32)> + '_ {
        self.system
            .positive_roots()
            .iter()
            .enumerate()
            .map(|(i, r)| (r, self.mult_of_positive(i)))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.weighted_roots().map(|(_, m)| u64::from(m)).sum()
    }

    /// Dimension of the orbit through `h`: the multiplicities of positive
    /// roots not orthogonal to `h`.
    pub fn orbit_dimension(&self, h: &RootVec) -> Result<u64> {
        self.system.check_dim(h)?;
        if h.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(self
            .weighted_roots()
            .filter(|(r, _)| !r.inner(h).unwrap_or_default().is_zero())
            .map(|(_, m)| u64::from(m))
            .sum())
    }

    pub fn chamber_face(&self, h: &RootVec) -> Result<ChamberFace> {
        self.system.check_dim(h)?;
        let pairings: Vec<_> = self
            .system
            .simple_roots()
            .iter()
            .map(|a| a.inner(h))
            .collect::<Result<_>>()?;
        if pairings.iter().any(|x| x.is_negative()) {
            return Err(Error::OutsideChamber(h.clone()));
        }
        let delta = pairings
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_positive())
            .map(|(i, _)| i)
            .collect();
        let orthogonal = self
            .system
            .positive_roots()
            .iter()
            .filter(|r| r.inner(h).is_ok_and(|x| x.is_zero()))
            .cloned()
            .collect();
        Ok(ChamberFace { delta, orthogonal })
    }
}
