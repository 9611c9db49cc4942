use std::collections::BTreeMap;

use fiber_catalog::FiberKind;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularFiber {
    pub kind: FiberKind,
    pub d_p: u32,
}

/// Intersection data of a Mordell–Weil section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionData {
    pub name: String,
    /// `s_i · s` with the zero section.
    pub dot_zero: i64,
    /// `s_i · s_j` for the other sections.
    pub dot_sections: BTreeMap<String, i64>,
    pub in_mw0: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub genus: u32,
    pub chi: i64,
    pub jacobian_degree: u32,
    pub fibers: Vec<SingularFiber>,
    pub sections: Vec<SectionData>,
}

impl SurfaceData {
    pub fn new(genus: u32, chi: i64, jacobian_degree: u32) -> SurfaceData {
        SurfaceData { genus, chi, jacobian_degree, fibers: Vec::new(), sections: Vec::new() }
    }

    pub fn with_fiber(mut self, kind: FiberKind, d_p: u32) -> SurfaceData {
        self.fibers.push(SingularFiber { kind, d_p });
        self
    }

    pub fn with_section(mut self, section: SectionData) -> SurfaceData {
        self.sections.push(section);
        self
    }

    /// `2g − 2 + χ`, the fiber coefficient of the canonical class.
    pub fn canonical_degree(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.chi
    }
}
