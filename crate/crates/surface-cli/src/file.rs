use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use fiber_catalog::{validate_order, FiberKind, LocalModel};
use lattice_classes::{SectionData, SingularFiber, SurfaceData};
use serde::{Deserialize, Serialize};

use crate::InputError;

/// On-disk form of a surface description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub genus: i64,
    pub chi: i64,
    pub jacobian_degree: i64,
    pub fibers: Vec<FiberEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mw_sections: Option<Vec<SectionEntry>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberEntry {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<i64>,
    pub d_p: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionEntry {
    pub name: String,
    pub dot_zero: i64,
    #[serde(default)]
    pub dot_sections: BTreeMap<String, i64>,
    pub in_mw0: bool,
}

fn to_u32(x: i64) -> Option<u32> {
    u32::try_from(x).ok()
}

impl SurfaceFile {
    /// Check every field and collect all violations before giving up.
    pub fn validate(&self) -> Result<SurfaceData, InputError> {
        let mut errs = Vec::new();
        let genus = to_u32(self.genus).unwrap_or_else(|| {
            errs.push(format!("genus = {} must be a nonnegative integer", self.genus));
            0
        });
        let degree = to_u32(self.jacobian_degree).unwrap_or_else(|| {
            errs.push(format!("jacobian_degree = {} must be a nonnegative integer", self.jacobian_degree));
            0
        });
        let mut fibers = Vec::new();
        for (i, f) in self.fibers.iter().enumerate() {
            let b = match f.b.map(to_u32) {
                Some(None) => {
                    errs.push(format!("fibers[{i}]: b = {} must be nonnegative", f.b.unwrap_or_default()));
                    continue;
                }
                Some(Some(b)) => Some(b),
                None => None,
            };
            match (f.kind.as_str(), b) {
                ("I" | "I*", None) => {
                    errs.push(format!("fibers[{i}]: kind {} requires b", f.kind));
                    continue;
                }
                ("I" | "I*", Some(_)) | (_, None) => {}
                (_, Some(_)) => {
                    errs.push(format!("fibers[{i}]: kind {} takes no b", f.kind));
                    continue;
                }
            }
            let kind = match FiberKind::from_parts(&f.kind, b) {
                Ok(k) => k,
                Err(e) => {
                    errs.push(format!("fibers[{i}]: {e}"));
                    continue;
                }
            };
            let Some(d_p) = to_u32(f.d_p).filter(|&d| d >= 1) else {
                errs.push(format!("fibers[{i}]: d_p = {} must be >= 1", f.d_p));
                continue;
            };
            let check = validate_order(&LocalModel::new(kind, d_p));
            if let Some(msg) = check.diagnostic {
                errs.push(format!("fibers[{i}]: {msg}"));
                continue;
            }
            fibers.push(SingularFiber { kind, d_p });
        }
        let secs = self.mw_sections.as_deref().unwrap_or_default();
        let names: BTreeSet<&str> = secs.iter().map(|s| s.name.as_str()).collect();
        if names.len() != secs.len() {
            errs.push("mw_sections: duplicate section names".to_string());
        }
        for (i, s) in secs.iter().enumerate() {
            for (other, v) in &s.dot_sections {
                if other == &s.name {
                    errs.push(format!("mw_sections[{i}]: dot_sections lists the section itself"));
                } else if !names.contains(other.as_str()) {
                    errs.push(format!("mw_sections[{i}]: dot_sections refers to unknown section {other:?}"));
                } else if let Some(w) = secs.iter().find(|t| &t.name == other).and_then(|t| t.dot_sections.get(&s.name)) {
                    if w != v {
                        errs.push(format!("mw_sections[{i}]: {}·{other} = {v} but {other}·{} = {w}", s.name, s.name));
                    }
                }
            }
        }
        if !errs.is_empty() {
            return Err(InputError::Validation(errs));
        }
        let mut out = SurfaceData::new(genus, self.chi, degree);
        out.fibers = fibers;
        out.sections = secs
            .iter()
            .map(|s| SectionData {
                name: s.name.clone(),
                dot_zero: s.dot_zero,
                dot_sections: s.dot_sections.clone(),
                in_mw0: s.in_mw0,
            })
            .collect();
        Ok(out)
    }
}

impl From<&SurfaceData> for SurfaceFile {
    fn from(s: &SurfaceData) -> SurfaceFile {
        SurfaceFile {
            genus: s.genus.into(),
            chi: s.chi,
            jacobian_degree: s.jacobian_degree.into(),
            fibers: s
                .fibers
                .iter()
                .map(|f| {
                    let (kind, b) = f.kind.to_parts();
                    FiberEntry { kind: kind.to_string(), b: b.map(i64::from), d_p: f.d_p.into() }
                })
                .collect(),
            mw_sections: (!s.sections.is_empty()).then(|| {
                s.sections
                    .iter()
                    .map(|x| SectionEntry {
                        name: x.name.clone(),
                        dot_zero: x.dot_zero,
                        dot_sections: x.dot_sections.clone(),
                        in_mw0: x.in_mw0,
                    })
                    .collect()
            }),
        }
    }
}

pub fn parse_surface(bytes: &[u8]) -> Result<SurfaceData, InputError> {
    let file: SurfaceFile = serde_json::from_slice(bytes).map_err(|e| InputError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()
}

pub fn read_surface(path: &Path) -> Result<SurfaceData, InputError> {
    let bytes = std::fs::read(path)
        .map_err(|e| InputError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_surface(&bytes)
}

/// Pretty JSON for a surface; `parse_surface` reads it back unchanged.
pub fn surface_to_json(s: &SurfaceData) -> String {
    serde_json::to_string_pretty(&SurfaceFile::from(s)).expect("plain data serializes")
}
