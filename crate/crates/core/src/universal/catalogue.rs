//! Universal extensions of dimension at least 3, with invariants derived
//! from the governing corank and checked against the stated values.

use serde::{Deserialize, Serialize};
use std::fmt;

use super::weighted::{self, WeightedHypersurface};
use crate::cohomology::{self, BundleExpr, CurveClass, CurveKind};
use crate::gaussian;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UniversalCase {
    /// `(C, L)` on a plane quartic.
    Genus3 { polarization: BundleExpr },
    /// A hyperelliptic curve of genus `g` with a polarization of degree `d`.
    Hyperelliptic { g: i64, d: i64 },
    /// `(C, mK)`.
    Pluricanonical { curve: CurveClass, m: i64 },
}

impl fmt::Display for UniversalCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniversalCase::Genus3 { polarization } => write!(f, "genus 3, L = {polarization}"),
            UniversalCase::Hyperelliptic { g, d } => write!(f, "hyperelliptic g={g}, d={d}"),
            UniversalCase::Pluricanonical { curve, m } => write!(f, "{curve}, L = {m}K"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalExtensionRecord {
    pub tag: String,
    pub genus: i64,
    pub dim: i64,
    pub deg: i64,
    pub ambient: i64,
    pub cork: i64,
    /// Weighted-hypersurface model, where one is known.
    pub model: Option<WeightedHypersurface>,
}

impl UniversalExtensionRecord {
    fn from_cork(tag: String, genus: i64, deg: i64, cork: i64) -> Self {
        UniversalExtensionRecord { tag, genus, dim: 1 + cork, deg, ambient: deg - genus + cork, cork, model: None }
    }

    pub fn triple(&self) -> (i64, i64, i64) {
        (self.dim, self.deg, self.ambient)
    }
}

/// `(dim, deg, ambient)` as stated for the known universal extensions.
pub fn stated_invariants(case: &UniversalCase) -> Option<(i64, i64, i64)> {
    match *case {
        UniversalCase::Genus3 { polarization } => match polarization {
            BundleExpr::G3Bundle { c: 4, r: 3, aligned: true } => Some((3, 13, 12)),
            BundleExpr::G3Bundle { c: 4, r: 4, aligned: false } => Some((3, 12, 11)),
            BundleExpr::G3Bundle { c: 4, r: 4, aligned: true } | BundleExpr::G3Bundle { c: 3, r: 0, .. } => {
                Some((4, 12, 12))
            }
            BundleExpr::G3Bundle { c: 4, r, .. } if (5..=7).contains(&r) => {
                let d = 16 - r;
                Some((15 - d, d, 11))
            }
            BundleExpr::G3General { d } if (9..=11).contains(&d) => Some((15 - d, d, 11)),
            _ => None,
        },
        UniversalCase::Hyperelliptic { g, d } if d == 2 * g + 3 => Some((2 * g + 3, 2 * g + 3, 3 * g + 5)),
        UniversalCase::Hyperelliptic { .. } => None,
        UniversalCase::Pluricanonical { curve, m } => match (curve.kind(), curve.genus(), m) {
            (CurveKind::Genus3Quartic, 3, 3) => Some((4, 12, 12)),
            (_, 4, 2) => Some((6, 12, 13)),
            (CurveKind::Trigonal { .. }, 5, 2) => Some((4, 16, 14)),
            (_, 5, 2) => Some((4, 16, 14)),
            (CurveKind::PlaneQuintic, 6, 2) => Some((4, 20, 17)),
            (CurveKind::Trigonal { .. }, 6, 2) => Some((3, 20, 16)),
            (CurveKind::Trigonal { maroni_a: 3, maroni_b: 6 }, 7, 2) => Some((3, 24, 19)),
            _ => None,
        },
    }
}

fn weighted_model(case: &UniversalCase) -> Option<WeightedHypersurface> {
    match *case {
        UniversalCase::Pluricanonical { curve, m } => match (curve.kind(), curve.genus(), m) {
            (CurveKind::Genus3Quartic, 3, 3) => Some(weighted::genus3_tricanonical_model()),
            (CurveKind::Trigonal { .. }, 4, 2) | (CurveKind::GeneralClifford(_), 4, 2) => {
                Some(weighted::genus4_bicanonical_model())
            }
            (CurveKind::PlaneQuintic, 6, 2) => Some(weighted::plane_quintic_bicanonical_model()),
            _ => None,
        },
        _ => None,
    }
}

fn too_small(case: &UniversalCase, cork: i64) -> Error {
    Error::NoUniversal(format!(
        "{case}: cork = {cork}, so extensions are at most surfaces"
    ))
}

/// The universal extension of a case, from its corank:
/// `dim = 1 + cork`, `deg = deg L`, `ambient = deg L - g + cork`.
pub fn universal_catalogue(case: &UniversalCase) -> Result<UniversalExtensionRecord> {
    let record = match *case {
        UniversalCase::Genus3 { polarization } => {
            let curve = CurveClass::genus3_quartic();
            let d = cohomology::degree(&curve, &polarization)?;
            if !(9..=16).contains(&d) {
                return Err(Error::domain(format!("genus-3 polarization of degree {d} outside 9..=16")));
            }
            let cork = gaussian::gaussian_corank(&curve, &polarization)?.cork;
            if cork <= 1 {
                return Err(too_small(case, cork));
            }
            UniversalExtensionRecord::from_cork(format!("genus3-d{d}"), 3, d, cork)
        }
        UniversalCase::Hyperelliptic { g, d } => {
            if d < 2 * g + 3 {
                return Err(Error::domain(format!("degree {d} < 2g + 3")));
            }
            if d > 4 * g + 4 {
                return Err(Error::NoUniversal(format!("{case}: only cones above 4g + 4")));
            }
            if d > 2 * g + 3 {
                return Err(Error::NoUniversal(format!(
                    "{case}: some ribbons are not integrable for general (C, L)"
                )));
            }
            let curve = CurveClass::hyperelliptic(g)?;
            let cork = gaussian::gaussian_corank(&curve, &BundleExpr::HypGeneral { d })?.cork;
            UniversalExtensionRecord::from_cork(format!("hyperelliptic-g{g}"), g, d, cork)
        }
        UniversalCase::Pluricanonical { curve, m } => {
            if gaussian::n2_fails(&curve, m) {
                return Err(Error::NoUniversal(format!(
                    "{case}: property N_2 fails, ribbons need not determine extensions"
                )));
            }
            let cork = gaussian::pluricanonical_corank(&curve, m)?;
            if cork <= 1 {
                return Err(too_small(case, cork));
            }
            let g = curve.genus();
            let mut r = UniversalExtensionRecord::from_cork(
                format!("pluricanonical-g{g}-m{m}"),
                g,
                m * (2 * g - 2),
                cork,
            );
            r.model = weighted_model(case);
            r
        }
    };
    if let Some(stated) = stated_invariants(case) {
        if stated != record.triple() {
            return Err(Error::CatalogueMismatch(format!(
                "{case}: computed {:?}, stated {:?}",
                record.triple(),
                stated
            )));
        }
    }
    if let Some(model) = &record.model {
        let inv = weighted::wh_invariants(model)?;
        if inv.as_i64() != Some((record.dim, record.ambient, record.deg)) {
            return Err(Error::CatalogueMismatch(format!(
                "{case}: weighted model {model} gives {inv:?}"
            )));
        }
    }
    Ok(record)
}

/// Every case with a universal extension of dimension at least 3 that has
/// stated invariants, for `g` up to `max_hyperelliptic_genus` in the
/// hyperelliptic family.
pub fn known_cases(max_hyperelliptic_genus: i64) -> Vec<UniversalCase> {
    let g3 = |c, r, aligned| UniversalCase::Genus3 { polarization: BundleExpr::G3Bundle { c, r, aligned } };
    let mut cases = vec![g3(4, 3, true), g3(4, 4, false), g3(3, 0, false), g3(4, 5, false), g3(4, 6, false), g3(4, 7, false)];
    cases.extend((2..=max_hyperelliptic_genus).map(|g| UniversalCase::Hyperelliptic { g, d: 2 * g + 3 }));
    let pluri = |g, kind, m| UniversalCase::Pluricanonical {
        curve: CurveClass::new(g, kind).expect("valid catalogue curve"),
        m,
    };
    cases.extend([
        pluri(3, CurveKind::Genus3Quartic, 3),
        pluri(4, CurveKind::GeneralClifford(1), 2),
        pluri(5, CurveKind::GeneralClifford(2), 2),
        pluri(6, CurveKind::PlaneQuintic, 2),
        pluri(5, CurveKind::Trigonal { maroni_a: 3, maroni_b: 4 }, 2),
        pluri(6, CurveKind::Trigonal { maroni_a: 4, maroni_b: 4 }, 2),
        pluri(6, CurveKind::Trigonal { maroni_a: 3, maroni_b: 5 }, 2),
        pluri(7, CurveKind::Trigonal { maroni_a: 3, maroni_b: 6 }, 2),
    ]);
    cases
}
