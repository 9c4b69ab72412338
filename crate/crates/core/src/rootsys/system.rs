use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{Signed, Zero};

use super::bourbaki;
use super::{LexOrder, RootClass, RootSystemType, RootVec, WolfClass};
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{q, qr, Q};

/// A finite (possibly non-reduced) root system in its Bourbaki realization.
///
/// Immutable after [`RootSystem::build`]; positive roots are stored in
/// ascending lexicographic order, so the highest root is the last one.
#[derive(Clone, Debug)]
pub struct RootSystem {
    rstype: RootSystemType,
    order: LexOrder,
    simple: Vec<RootVec>,
    positive: Vec<RootVec>,
    classes: Vec<RootClass>,
    index: HashMap<RootVec, usize>,
    gram_inv: Vec<Vec<Q>>,
}

impl RootSystem {
    /// Builds the positive roots by adding simple roots one at a time, with
    /// membership decided by the closed-form Bourbaki description, then
    /// cross-checks the result against the closure of the simple roots under
    /// simple reflections.
    pub fn build(rstype: RootSystemType) -> Result<Self> {
        let simple = bourbaki::simple_roots(rstype);
        let gram: Vec<Vec<Q>> = simple
            .iter()
            .map(|a| simple.iter().map(|b| a.dot(b)).collect())
            .collect();
        let gram_inv = linalg::invert(&gram)
            .ok_or_else(|| Error::invariant(format!("simple roots of {rstype} are dependent")))?;

        let mut positive = addition_closure(rstype, &simple);
        let order = LexOrder::with_significance(bourbaki::significance(rstype))?;
        positive.sort_by(|a, b| order.compare(a, b));

        let mut sys = RootSystem {
            rstype,
            order,
            simple,
            index: HashMap::new(),
            classes: Vec::new(),
            positive,
            gram_inv,
        };
        sys.index = sys
            .positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        sys.classes = length_classes(&sys.positive);
        sys.validate()?;
        Ok(sys)
    }

    /// A process-wide cached instance; building is deterministic, so every
    /// caller sees the same system.
    pub fn shared(rstype: RootSystemType) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<RootSystemType, Arc<RootSystem>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(sys) = cache.lock().expect("cache poisoned").get(&rstype) {
            return Ok(Arc::clone(sys));
        }
        let sys = Arc::new(RootSystem::build(rstype)?);
        cache
            .lock()
            .expect("cache poisoned")
            .insert(rstype, Arc::clone(&sys));
        Ok(sys)
    }

    fn validate(&self) -> Result<()> {
        let t = self.rstype;
        let expected = t.positive_root_count();
        if self.positive.len() != expected {
            return Err(Error::invariant(format!(
                "{t} has {} positive roots, expected {expected}",
                self.positive.len()
            )));
        }
        let reflected = self.reflection_closure(&bourbaki::reflection_seeds(t));
        let by_reflection: HashSet<&RootVec> = reflected
            .iter()
            .filter(|r| self.is_nonnegative_combination(r))
            .collect();
        let by_addition: HashSet<&RootVec> = self.positive.iter().collect();
        if by_reflection != by_addition || reflected.len() != 2 * expected {
            return Err(Error::invariant(format!(
                "{t}: addition closure and reflection closure disagree"
            )));
        }
        if let Some(r) = self.positive.iter().find(|r| !self.order.is_positive(r)) {
            return Err(Error::invariant(format!(
                "{t}: positive root {r} is not lexicographically positive"
            )));
        }
        let delta = self.highest_root();
        if let Some(mu) = self
            .positive
            .iter()
            .find(|mu| !self.is_nonnegative_combination(&(delta - *mu)))
        {
            return Err(Error::invariant(format!(
                "{t}: {delta} does not dominate {mu}"
            )));
        }
        Ok(())
    }

    /// All roots (both signs) reachable from `seeds` under simple reflections.
    pub fn reflection_closure(&self, seeds: &[RootVec]) -> HashSet<RootVec> {
        let mut seen: HashSet<RootVec> = HashSet::new();
        let mut queue: VecDeque<RootVec> = VecDeque::new();
        for s in seeds {
            if seen.insert(s.clone()) {
                queue.push_back(s.clone());
            }
        }
        while let Some(r) = queue.pop_front() {
            for a in &self.simple {
                let img = r.reflect(a);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        seen
    }

    pub fn rstype(&self) -> RootSystemType {
        self.rstype
    }

    pub fn rank(&self) -> usize {
        self.rstype.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.simple[0].dim()
    }

    pub fn order(&self) -> &LexOrder {
        &self.order
    }

    pub fn simple_roots(&self) -> &[RootVec] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.positive
    }

    /// Positive and negative roots.
    pub fn all_roots(&self) -> impl Iterator<Item = RootVec> + '_ {
        self.positive.iter().flat_map(|r| [r.clone(), -r])
    }

    pub fn highest_root(&self) -> &RootVec {
        self.positive.last().expect("root systems are nonempty")
    }

    /// Index of a positive root in [`RootSystem::positive_roots`].
    pub fn position(&self, v: &RootVec) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Membership without a dimension check.
    pub fn contains(&self, v: &RootVec) -> bool {
        self.index.contains_key(v) || self.index.contains_key(&-v)
    }

    pub fn is_root(&self, v: &RootVec) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.contains(v))
    }

    pub(crate) fn check_dim(&self, v: &RootVec) -> Result<()> {
        if v.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub fn class_of_positive(&self, i: usize) -> RootClass {
        self.classes[i]
    }

    pub fn root_class(&self, v: &RootVec) -> Option<RootClass> {
        self.position(v)
            .or_else(|| self.position(&-v))
            .map(|i| self.classes[i])
    }

    pub fn roots_of_class(&self, class: RootClass) -> Vec<RootVec> {
        self.positive
            .iter()
            .zip(&self.classes)
            .filter(|(_, c)| **c == class)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Positive roots of maximal length (all of them when simply laced).
    pub fn long_roots(&self) -> Vec<RootVec> {
        self.roots_of_class(RootClass::Long)
    }

    /// Positive roots that are not long; for BC this includes the middle
    /// class `e_i +- e_j`.
    pub fn short_roots(&self) -> Vec<RootVec> {
        self.positive
            .iter()
            .zip(&self.classes)
            .filter(|(_, c)| **c != RootClass::Long)
            .map(|(r, _)| r.clone())
            .collect()
    }

    pub fn has_class(&self, class: RootClass) -> bool {
        self.classes.contains(&class)
    }

    /// `<lambda, delta> / |delta|^2`.
    pub fn wolf_ratio(&self, lam: &RootVec) -> Q {
        let d = self.highest_root();
        lam.dot(d) / d.norm_sq()
    }

    pub fn wolf_class(&self, lam: &RootVec) -> Result<WolfClass> {
        self.check_dim(lam)?;
        if self.position(lam).is_none() {
            return Err(Error::NotARoot(lam.clone()));
        }
        let ratio = self.wolf_ratio(lam);
        if ratio.is_zero() {
            Ok(WolfClass::Orthogonal)
        } else if ratio == qr(1, 2) {
            Ok(WolfClass::Half)
        } else if ratio == q(1) {
            Ok(WolfClass::Highest)
        } else {
            Err(Error::invariant(format!(
                "{}: <{lam}, delta>/|delta|^2 = {ratio} is outside {{0, 1/2, 1}}",
                self.rstype
            )))
        }
    }

    /// Depth `p <= 0` of the delta-string `lam + k delta (p <= k <= 0)`
    /// through a positive root; zero counts as a string member when `lam`
    /// is parallel to delta.
    pub fn delta_string_depth(&self, lam: &RootVec) -> i64 {
        let d = self.highest_root();
        let mut k = 0;
        loop {
            let next = lam.add_scaled(q(-(k + 1)), d);
            if next.is_zero() || self.contains(&next) {
                k += 1;
            } else {
                return -k;
            }
        }
    }

    /// Coordinates in the basis of simple roots, or `None` outside their span.
    pub fn simple_coords(&self, v: &RootVec) -> Option<Vec<Q>> {
        let c = self.span_coords(v);
        let back = self
            .simple
            .iter()
            .zip(&c)
            .fold(RootVec::zero(v.dim()), |acc, (a, ci)| {
                acc.add_scaled(*ci, a)
            });
        (back == *v).then_some(c)
    }

    fn span_coords(&self, v: &RootVec) -> Vec<Q> {
        let b: Vec<Q> = self.simple.iter().map(|a| v.dot(a)).collect();
        self.gram_inv
            .iter()
            .map(|row| row.iter().zip(&b).fold(Q::zero(), |s, (g, x)| s + g * x))
            .collect()
    }

    /// Orthogonal projection onto the span of the roots.
    pub fn project_to_span(&self, v: &RootVec) -> RootVec {
        self.simple
            .iter()
            .zip(self.span_coords(v))
            .fold(RootVec::zero(v.dim()), |acc, (a, c)| acc.add_scaled(c, a))
    }

    /// Vector with simple-root coordinates `coeffs`.
    pub fn from_simple_coords(&self, coeffs: &[i64]) -> Result<RootVec> {
        if coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: coeffs.len(),
            });
        }
        Ok(self
            .simple
            .iter()
            .zip(coeffs)
            .fold(RootVec::zero(self.ambient_dim()), |acc, (a, &c)| {
                acc.add_scaled(q(c), a)
            }))
    }

    fn is_nonnegative_combination(&self, v: &RootVec) -> bool {
        self.simple_coords(v)
            .is_some_and(|c| c.iter().all(|x| !x.is_negative()))
    }

    /// Dual basis `H_lambda` of the simple roots inside the root span:
    /// `<H_lambda, mu> = 1` if `mu = lambda`, else 0, for simple `mu`.
    pub fn dual_basis(&self) -> Vec<RootVec> {
        self.gram_inv
            .iter()
            .map(|row| {
                self.simple
                    .iter()
                    .zip(row)
                    .fold(RootVec::zero(self.ambient_dim()), |acc, (a, c)| {
                        acc.add_scaled(*c, a)
                    })
            })
            .collect()
    }

    pub fn is_dominant(&self, v: &RootVec) -> bool {
        self.simple.iter().all(|a| !v.dot(a).is_negative())
    }

    /// The representative of the Weyl orbit of `v` in the closed chamber,
    /// reached by reflecting in simple roots that pair negatively.
    pub fn to_dominant(&self, v: &RootVec) -> RootVec {
        let mut h = v.clone();
        while let Some(a) = self.simple.iter().find(|a| h.dot(a).is_negative()) {
            h = h.reflect(a);
        }
        h
    }

    /// Neither `a + b` nor `a - b` is a root (nor zero).
    pub fn strongly_orthogonal(&self, a: &RootVec, b: &RootVec) -> bool {
        let s = a + b;
        let d = a - b;
        !s.is_zero() && !d.is_zero() && !self.contains(&s) && !self.contains(&d)
    }
}

fn addition_closure(t: RootSystemType, simple: &[RootVec]) -> Vec<RootVec> {
    let mut seen: HashSet<RootVec> = simple.iter().cloned().collect();
    let mut out: Vec<RootVec> = simple.to_vec();
    let mut queue: VecDeque<RootVec> = simple.iter().cloned().collect();
    while let Some(r) = queue.pop_front() {
        for a in simple {
            let next = &r + a;
            if bourbaki::is_root_shape(t, &next) && seen.insert(next.clone()) {
                out.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    out
}

fn length_classes(positive: &[RootVec]) -> Vec<RootClass> {
    let lengths: Vec<Q> = positive.iter().map(RootVec::norm_sq).collect();
    let max = lengths.iter().max().copied().unwrap_or_default();
    let min = lengths.iter().min().copied().unwrap_or_default();
    lengths
        .iter()
        .map(|l| {
            if *l == max {
                RootClass::Long
            } else if *l == min {
                RootClass::Short
            } else {
                RootClass::Middle
            }
        })
        .collect()
}
