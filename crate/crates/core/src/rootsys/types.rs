use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::BC,
    ];

    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(
            self,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
        )
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::BC => "BC",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.label() == up)
            .ok_or_else(|| Error::malformed(s, "unknown root system family"))
    }
}

/// Family plus rank, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |constraint| Error::InvalidRank {
            family: family.to_string(),
            rank,
            constraint,
        };
        if let Some(r) = family.fixed_rank() {
            if rank != r {
                return Err(invalid("exceptional types have a fixed rank"));
            }
        }
        match family {
            _ if rank == 0 => Err(invalid("rank must be at least 1")),
            // D2 = A1 x A1 is reducible and has no unique highest root.
            Family::D if rank < 3 => Err(invalid("type D requires rank >= 3")),
            _ => Ok(RootSystemType { family, rank }),
        }
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        let rank = family.fixed_rank().ok_or(Error::InvalidRank {
            family: family.to_string(),
            rank: 0,
            constraint: "classical types need an explicit rank",
        })?;
        RootSystemType::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Classical number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let p = self.rank;
        match self.family {
            Family::A => p * (p + 1) / 2,
            Family::B | Family::C => p * p,
            Family::D => p * (p - 1),
            Family::BC => p * p + p,
            Family::G2 => 6,
            Family::F4 => 24,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
        }
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.fixed_rank().is_some() {
            write!(f, "{}", self.family)
        } else {
            write!(f, "{}{}", self.family, self.rank)
        }
    }
}

impl FromStr for RootSystemType {
    type Err = Error;

    /// Accepts `A3`, `BC2`, `E6`, `g2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        if let Ok(f) = t.parse::<Family>() {
            if f.fixed_rank().is_some() {
                return RootSystemType::exceptional(f);
            }
        }
        let split = t
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| Error::malformed(s, "missing rank"))?;
        let family: Family = t[..split].parse()?;
        let rank: usize = t[split..]
            .parse()
            .map_err(|_| Error::malformed(s, "rank is not an integer"))?;
        RootSystemType::new(family, rank)
    }
}

/// Length class of a root. `Middle` only occurs in the non-reduced type BC.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootClass {
    Long,
    Middle,
    Short,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootClass::Long => "long",
            RootClass::Middle => "middle",
            RootClass::Short => "short",
        })
    }
}

/// Value of `<lambda, delta> / |delta|^2` against the highest root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WolfClass {
    Orthogonal,
    Half,
    Highest,
}
