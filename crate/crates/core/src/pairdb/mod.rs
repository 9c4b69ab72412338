//! Database of irreducible compact symmetric pairs of rank at least two.
//!
//! The embedded `pairs.dat` stores each pair symbolically in the family
//! parameters `p` and `n`; [`PairDatum::instantiate`] binds parameters,
//! builds the restricted root system and attaches multiplicities.

mod expr;
mod format;
mod pair;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, RootClass};

pub use expr::Expr;
pub use pair::{ChamberFace, SymmetricPair};

const EMBEDDED: &str = include_str!("pairs.dat");

/// Structural flags carried by a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flag {
    Hermitian,
    NormalRealForm,
    QuaternionicF4Exceptional,
    GroupManifold,
}

impl Flag {
    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Hermitian => "hermitian",
            Flag::NormalRealForm => "normal_real_form",
            Flag::QuaternionicF4Exceptional => "quaternionic_f4_exceptional",
            Flag::GroupManifold => "group_manifold",
        }
    }
}

impl FromStr for Flag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hermitian" => Flag::Hermitian,
            "normal_real_form" => Flag::NormalRealForm,
            "quaternionic_f4_exceptional" => Flag::QuaternionicF4Exceptional,
            "group_manifold" => Flag::GroupManifold,
            _ => return Err(Error::malformed(s, "unknown flag")),
        })
    }
}

/// Symbolic Weyl-orbit class of restricted roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MultTag {
    All,
    Long,
    Short,
    /// `e_i`
    Ei,
    /// `e_i +- e_j`
    EiPmEj,
    /// `2e_i`
    TwoEi,
}

impl MultTag {
    pub fn as_str(self) -> &'static str {
        match self {
            MultTag::All => "all",
            MultTag::Long => "long",
            MultTag::Short => "short",
            MultTag::Ei => "e_i",
            MultTag::EiPmEj => "e_i+-e_j",
            MultTag::TwoEi => "2e_i",
        }
    }

    /// The length class this tag names inside a system of the given family.
    fn resolve(self, family: Family) -> Option<RootClass> {
        use Family::*;
        Some(match (self, family) {
            (MultTag::Long, _) => RootClass::Long,
            (MultTag::Short, _) => RootClass::Short,
            (MultTag::Ei, B | BC) => RootClass::Short,
            (MultTag::EiPmEj, B | D) => RootClass::Long,
            (MultTag::EiPmEj, C) => RootClass::Short,
            (MultTag::EiPmEj, BC) => RootClass::Middle,
            (MultTag::TwoEi, C | BC) => RootClass::Long,
            _ => return None,
        })
    }
}

impl FromStr for MultTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => MultTag::All,
            "long" => MultTag::Long,
            "short" => MultTag::Short,
            "e_i" => MultTag::Ei,
            "e_i+-e_j" | "e_i±e_j" => MultTag::EiPmEj,
            "2e_i" => MultTag::TwoEi,
            _ => return Err(Error::malformed(s, "unknown multiplicity tag")),
        })
    }
}

/// Multiplicities per root class, as expressions in `p` and `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityFn {
    entries: Vec<(MultTag, Expr)>,
}

impl MultiplicityFn {
    pub fn new(entries: Vec<(MultTag, Expr)>) -> Self {
        MultiplicityFn { entries }
    }

    pub fn entries(&self) -> &[(MultTag, Expr)] {
        &self.entries
    }

    /// Evaluates every entry and maps it onto the length classes of a
    /// system of `family` that has exactly the classes in `present`.
    pub(crate) fn bind(
        &self,
        family: Family,
        present: &[RootClass],
        p: i64,
        n: i64,
    ) -> Result<HashMap<RootClass, u32>> {
        let mut out = HashMap::new();
        for (tag, e) in &self.entries {
            let v = e.eval(p, n)?;
            let v = u32::try_from(v)
                .ok()
                .filter(|v| *v >= 1)
                .ok_or_else(|| Error::malformed(e.text(), "multiplicity must be positive"))?;
            let classes: Vec<RootClass> = match tag {
                MultTag::All => present.to_vec(),
                t => {
                    let c = t
                        .resolve(family)
                        .filter(|c| present.contains(c))
                        .ok_or_else(|| {
                            Error::malformed(
                                tag.as_str(),
                                format!("no such root class in type {family}"),
                            )
                        })?;
                    vec![c]
                }
            };
            for c in classes {
                if out.insert(c, v).is_some() {
                    return Err(Error::malformed(
                        tag.as_str(),
                        format!("class {c} assigned twice"),
                    ));
                }
            }
        }
        if let Some(c) = present.iter().find(|c| !out.contains_key(c)) {
            return Err(Error::malformed(
                self.to_string(),
                format!("class {c} has no multiplicity"),
            ));
        }
        Ok(out)
    }
}

impl fmt::Display for MultiplicityFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (tag, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}: {e}", tag.as_str())?;
        }
        Ok(())
    }
}

/// A name like `so({2p+n})` with embedded parameter expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NameTemplate {
    raw: String,
    parts: Vec<NamePart>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum NamePart {
    Text(String),
    Expr(Expr),
}

impl NameTemplate {
    pub fn parse(raw: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut rest = raw;
        while let Some(open) = rest.find('{') {
            let close = rest[open..]
                .find('}')
                .map(|c| open + c)
                .ok_or_else(|| Error::malformed(raw, "unclosed `{`"))?;
            if open > 0 {
                parts.push(NamePart::Text(rest[..open].to_string()));
            }
            parts.push(NamePart::Expr(Expr::parse(&rest[open + 1..close])?));
            rest = &rest[close + 1..];
        }
        if rest.contains('}') {
            return Err(Error::malformed(raw, "unmatched `}`"));
        }
        if !rest.is_empty() {
            parts.push(NamePart::Text(rest.to_string()));
        }
        Ok(NameTemplate {
            raw: raw.to_string(),
            parts,
        })
    }

    pub fn raw(&self) -> &str {
        &self.raw
    }

    /// The name with parameters left symbolic: `so(2p+n)`.
    pub fn symbolic(&self) -> String {
        self.parts
            .iter()
            .map(|part| match part {
                NamePart::Text(t) => t.clone(),
                NamePart::Expr(e) => e.text().to_string(),
            })
            .collect()
    }

    pub fn instantiate(&self, p: i64, n: i64) -> Result<String> {
        let mut out = String::new();
        for part in &self.parts {
            match part {
                NamePart::Text(t) => out.push_str(t),
                NamePart::Expr(e) => out.push_str(&e.eval(p, n)?.to_string()),
            }
        }
        Ok(out)
    }
}

/// Lower bounds on the family parameters; `None` means the parameter is
/// not used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSpec {
    pub p_min: Option<i64>,
    pub n_min: Option<i64>,
}

impl ParamSpec {
    pub fn is_fixed(&self) -> bool {
        self.p_min.is_none() && self.n_min.is_none()
    }
}

impl fmt::Display for ParamSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p_min, self.n_min) {
            (None, None) => f.write_str("none"),
            (Some(p), None) => write!(f, "p >= {p}"),
            (None, Some(n)) => write!(f, "n >= {n}"),
            (Some(p), Some(n)) => write!(f, "p >= {p}; n >= {n}"),
        }
    }
}

/// Parameter values for one instantiation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
}

impl Params {
    pub const NONE: Params = Params { p: None, n: None };

    pub fn p(p: i64) -> Self {
        Params {
            p: Some(p),
            n: None,
        }
    }

    pub fn pn(p: i64, n: i64) -> Self {
        Params {
            p: Some(p),
            n: Some(n),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.n) {
            (None, None) => Ok(()),
            (Some(p), None) => write!(f, "p={p}"),
            (None, Some(n)) => write!(f, "n={n}"),
            (Some(p), Some(n)) => write!(f, "p={p}, n={n}"),
        }
    }
}

/// One symmetric pair, possibly a parameterized family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDatum {
    key: String,
    g: NameTemplate,
    k: NameTemplate,
    aliases: Vec<String>,
    family: Family,
    rank: Expr,
    params: ParamSpec,
    mult: MultiplicityFn,
    flags: BTreeSet<Flag>,
    dim_g: Expr,
    dim_k: Expr,
}

impl PairDatum {
    pub fn key(&self) -> &str {
        &self.key
    }

    pub fn g(&self) -> &NameTemplate {
        &self.g
    }

    pub fn k(&self) -> &NameTemplate {
        &self.k
    }

    pub fn aliases(&self) -> &[String] {
        &self.aliases
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> &Expr {
        &self.rank
    }

    pub fn param_spec(&self) -> ParamSpec {
        self.params
    }

    pub fn mult(&self) -> &MultiplicityFn {
        &self.mult
    }

    pub fn flags(&self) -> &BTreeSet<Flag> {
        &self.flags
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }

    pub fn dim_g(&self) -> &Expr {
        &self.dim_g
    }

    pub fn dim_k(&self) -> &Expr {
        &self.dim_k
    }

    /// Checks `params` against the parameter constraints and returns
    /// `(p, n)` with unused parameters set to zero.
    pub fn check_params(&self, params: Params) -> Result<(i64, i64)> {
        let err = |message: String| Error::Params {
            pair: self.key.clone(),
            message,
        };
        let pick = |name: &str, min: Option<i64>, given: Option<i64>| match (min, given) {
            (None, None) => Ok(0),
            (None, Some(_)) => Err(err(format!("takes no parameter {name}"))),
            (Some(_), None) => Err(err(format!("parameter {name} is required"))),
            (Some(m), Some(v)) if v < m => Err(err(format!("needs {name} >= {m}, got {v}"))),
            (Some(_), Some(v)) => Ok(v),
        };
        Ok((
            pick("p", self.params.p_min, params.p)?,
            pick("n", self.params.n_min, params.n)?,
        ))
    }

    /// All admissible instantiations with `p <= p_max` and `n <= n_max`.
    pub fn param_grid(&self, p_max: i64, n_max: i64) -> Vec<Params> {
        let ps: Vec<Option<i64>> = match self.params.p_min {
            None => vec![None],
            Some(m) => (m..=p_max).map(Some).collect(),
        };
        let ns: Vec<Option<i64>> = match self.params.n_min {
            None => vec![None],
            Some(m) => (m..=n_max).map(Some).collect(),
        };
        ps.iter()
            .flat_map(|p| ns.iter().map(move |n| Params { p: *p, n: *n }))
            .collect()
    }

    /// `g|k` with parameters bound.
    pub fn instance_key(&self, params: Params) -> Result<String> {
        let (p, n) = self.check_params(params)?;
        Ok(format!(
            "{}|{}",
            self.g.instantiate(p, n)?,
            self.k.instantiate(p, n)?
        ))
    }

    pub fn instantiate(self: &Arc<Self>, params: Params) -> Result<SymmetricPair> {
        SymmetricPair::new(Arc::clone(self), params)
    }
}

/// Normalizes a user-supplied pair key: lowercase, no whitespace, `⊕` as
/// `+`, and `x+x` on the `g` side written `x^2`.
pub fn normalize_key(s: &str) -> String {
    let flat: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_lowercase()
        .replace('⊕', "+")
        .replace(',', "|");
    match flat.split_once('|') {
        Some((g, k)) => {
            let g = match g.split_once('+') {
                Some((a, b)) if a == b => format!("{a}^2"),
                _ => g.to_string(),
            };
            format!("{g}|{k}")
        }
        None => flat,
    }
}

/// The loaded database; immutable once built.
#[derive(Clone, Debug)]
pub struct PairDb {
    pairs: Vec<Arc<PairDatum>>,
    index: HashMap<String, usize>,
}

impl PairDb {
    /// The database compiled into the library.
    pub fn embedded() -> Result<Self> {
        EMBEDDED.parse()
    }

    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        std::fs::read_to_string(path)?.parse()
    }

    fn from_pairs(pairs: Vec<PairDatum>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, d) in pairs.iter().enumerate() {
            for key in std::iter::once(&d.key).chain(&d.aliases) {
                let key = normalize_key(key);
                if index.insert(key.clone(), i).is_some() {
                    return Err(Error::malformed(key, "duplicate pair key"));
                }
            }
        }
        let db = PairDb {
            pairs: pairs.into_iter().map(Arc::new).collect(),
            index,
        };
        db.validate()?;
        Ok(db)
    }

    /// Checks flags and dimension bookkeeping at a few instantiations of
    /// every pair.
    fn validate(&self) -> Result<()> {
        for d in &self.pairs {
            let p0 = d.params.p_min.unwrap_or(0);
            let n0 = d.params.n_min.unwrap_or(0);
            for params in d.param_grid(p0 + 2, n0 + 2) {
                d.instantiate(params)?.check_bookkeeping()?;
            }
        }
        Ok(())
    }

    pub fn pairs(&self) -> &[Arc<PairDatum>] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Looks up a pair by symbolic key or alias.
    pub fn lookup(&self, key: &str) -> Result<&Arc<PairDatum>> {
        self.index
            .get(&normalize_key(key))
            .map(|&i| &self.pairs[i])
            .ok_or_else(|| Error::UnknownPair(key.to_string()))
    }

    /// Looks up a pair by `g` and `k` separately.
    pub fn lookup_gk(&self, g: &str, k: &str) -> Result<&Arc<PairDatum>> {
        self.lookup(&format!("{g}|{k}"))
    }

    /// Resolves a symbolic key, or an instantiated one such as
    /// `so(7)|so(2)+so(5)`, to a datum and the parameters it implies.
    pub fn resolve(&self, key: &str) -> Result<(&Arc<PairDatum>, Params)> {
        if let Ok(d) = self.lookup(key) {
            return Ok((d, Params::NONE));
        }
        let want = normalize_key(key);
        const SEARCH: i64 = 64;
        for d in self.pairs.iter().filter(|d| !d.params.is_fixed()) {
            for params in d.param_grid(SEARCH, SEARCH) {
                if d.instance_key(params)
                    .is_ok_and(|k| normalize_key(&k) == want)
                {
                    return Ok((d, params));
                }
            }
        }
        Err(Error::UnknownPair(key.to_string()))
    }

    /// Canonical text form; parsing it back yields an equal database.
    pub fn to_text(&self) -> String {
        format::write(self.pairs.iter().map(|d| d.as_ref()))
    }
}

impl FromStr for PairDb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PairDb::from_pairs(format::parse(s)?)
    }
}
