use fiber_catalog::fiber_constants;
use lattice_classes::SurfaceData;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    /// Imported from standard theory rather than the construction itself.
    Advisory,
}

/// A non-fatal finding about a surface. `code` names the rule that fired.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: &'static str,
    pub severity: Severity,
    pub message: String,
}

pub fn validate_surface(s: &SurfaceData) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let euler: i64 = s.fibers.iter().map(|f| fiber_constants(f.kind).euler_e as i64).sum();
    if euler != 12 * s.chi {
        out.push(Diagnostic {
            code: "euler.sum-12chi",
            severity: Severity::Advisory,
            message: format!("fiber Euler numbers sum to {euler}, expected 12·chi = {}", 12 * s.chi),
        });
    }
    if s.genus == 0 {
        out.push(Diagnostic {
            code: "series.genus",
            severity: Severity::Warning,
            message: "series-parameter interval unavailable (requires genus >= 1)".into(),
        });
    }
    if s.chi <= 0 {
        out.push(Diagnostic {
            code: "series.chi",
            severity: Severity::Warning,
            message: format!("chi = {} <= 0: curvature and t0 formulas need chi > 0", s.chi),
        });
    }
    for sec in s.sections.iter().filter(|x| !x.in_mw0) {
        out.push(Diagnostic {
            code: "mw.not-mw0",
            severity: Severity::Warning,
            message: format!("section {} is not in MW0 and is left out of the essential part", sec.name),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fiber_catalog::FiberKind;

    fn codes(s: &SurfaceData) -> Vec<&'static str> {
        validate_surface(s).into_iter().map(|d| d.code).collect()
    }

    #[test]
    fn euler_sum() {
        let ok = SurfaceData::new(1, 1, 12).with_fiber(FiberKind::IVStar, 1).with_fiber(FiberKind::IV, 2);
        assert!(codes(&ok).is_empty());
        let off = SurfaceData::new(1, 1, 12).with_fiber(FiberKind::IVStar, 1).with_fiber(FiberKind::III, 1);
        let d = validate_surface(&off);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].severity, Severity::Advisory);
        assert!(d[0].message.contains("sum to 11"));
    }

    #[test]
    fn genus_zero() {
        let d = validate_surface(&SurfaceData::new(0, 0, 0));
        assert!(d.iter().any(|x| x.message.contains("interval unavailable")));
        assert_eq!(d.iter().filter(|x| x.severity == Severity::Warning).count(), 2);
    }
}
