use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::CatalogError;

/// Kodaira fiber type. `I(b)` needs `b >= 1`; `IStar(0)` is I0*.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiberKind {
    Regular,
    I(u32),
    IStar(u32),
    II,
    IIStar,
    III,
    IIIStar,
    IV,
    IVStar,
}

impl FiberKind {
    pub fn i(b: u32) -> Result<FiberKind, CatalogError> {
        if b == 0 {
            return Err(CatalogError::UnknownKind("I_0".into()));
        }
        Ok(FiberKind::I(b))
    }

    /// Build a kind from the surface-file pair `("I", Some(3))`, `("IV*", None)`, ...
    pub fn from_parts(name: &str, b: Option<u32>) -> Result<FiberKind, CatalogError> {
        match (name, b) {
            ("I", Some(b)) => FiberKind::i(b),
            ("I*", Some(b)) => Ok(FiberKind::IStar(b)),
            ("I", None) | ("I*", None) => {
                Err(CatalogError::UnknownKind(format!("{name} requires b")))
            }
            (_, Some(_)) => Err(CatalogError::UnknownKind(format!("{name} takes no b"))),
            (other, None) => other.parse(),
        }
    }

    /// Name and `b` for the surface-file form.
    pub fn to_parts(&self) -> (&'static str, Option<u32>) {
        match *self {
            FiberKind::I(b) => ("I", Some(b)),
            FiberKind::IStar(b) => ("I*", Some(b)),
            FiberKind::Regular => ("regular", None),
            FiberKind::II => ("II", None),
            FiberKind::IIStar => ("II*", None),
            FiberKind::III => ("III", None),
            FiberKind::IIIStar => ("III*", None),
            FiberKind::IV => ("IV", None),
            FiberKind::IVStar => ("IV*", None),
        }
    }

    pub fn is_multiplicative(&self) -> bool {
        matches!(self, FiberKind::I(_)) || matches!(self, FiberKind::IStar(b) if *b >= 1)
    }

    /// All kinds with `b` running over `bs` for the two infinite families.
    pub fn all(bs: impl Iterator<Item = u32> + Clone) -> Vec<FiberKind> {
        let mut out = vec![
            FiberKind::Regular,
            FiberKind::II,
            FiberKind::IIStar,
            FiberKind::III,
            FiberKind::IIIStar,
            FiberKind::IV,
            FiberKind::IVStar,
            FiberKind::IStar(0),
        ];
        out.extend(bs.clone().filter(|&b| b >= 1).map(FiberKind::I));
        out.extend(bs.filter(|&b| b >= 1).map(FiberKind::IStar));
        out
    }
}

impl fmt::Display for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberKind::I(b) => write!(f, "I_{b}"),
            FiberKind::IStar(b) => write!(f, "I*_{b}"),
            other => f.write_str(other.to_parts().0),
        }
    }
}

impl fmt::Debug for FiberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FiberKind {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<FiberKind, CatalogError> {
        let bad = || CatalogError::UnknownKind(s.to_string());
        if let Some(b) = s.strip_prefix("I*_") {
            return Ok(FiberKind::IStar(b.parse().map_err(|_| bad())?));
        }
        if let Some(b) = s.strip_prefix("I_") {
            return FiberKind::i(b.parse().map_err(|_| bad())?);
        }
        Ok(match s {
            "regular" | "Regular" => FiberKind::Regular,
            "I0*" | "I*0" => FiberKind::IStar(0),
            "II" => FiberKind::II,
            "II*" => FiberKind::IIStar,
            "III" => FiberKind::III,
            "III*" => FiberKind::IIIStar,
            "IV" => FiberKind::IV,
            "IV*" => FiberKind::IVStar,
            _ => return Err(bad()),
        })
    }
}

impl Serialize for FiberKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FiberKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<FiberKind, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
