use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which constant equations a theory may contain.
///
/// `H` admits neither `m = 1` nor `m = 0`; `H0` admits `m = 0`; `H1` admits
/// `m = 1`; `H01` admits both. On the family side this is whether the
/// all-zeros and all-ones vectors are required members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    H,
    H0,
    H1,
    H01,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::H, Variant::H0, Variant::H1, Variant::H01];

    /// Families must contain the all-ones vector.
    pub fn requires_top(self) -> bool {
        matches!(self, Variant::H | Variant::H1)
    }

    /// No variable may be 1 in every member. For `n >= 1` this means the
    /// all-zeros vector is a member; for `n = 0` it is vacuous.
    pub fn requires_bottom(self) -> bool {
        matches!(self, Variant::H | Variant::H0)
    }

    pub fn name(self) -> &'static str {
        match self {
            Variant::H => "h",
            Variant::H0 => "h0",
            Variant::H1 => "h1",
            Variant::H01 => "h01",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "h" => Ok(Variant::H),
            "h0" => Ok(Variant::H0),
            "h1" => Ok(Variant::H1),
            "h01" => Ok(Variant::H01),
            other => Err(format!("unknown variant `{other}` (expected h, h0, h1 or h01)")),
        }
    }
}
