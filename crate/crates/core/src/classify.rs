//! Extendability verdicts, classification of surface extensions in high
//! degree, and dimension counts for families of extensions of hyperelliptic
//! curves.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::cohomology::{self, BundleExpr, CurveClass};
use crate::gaussian;
use crate::surface::{self, PlaneSystem};
use crate::{Error, Result};

/// Bi-anticanonical Del Pezzo model: `P^2` blown up in `h` points, or the
/// quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DelPezzoModel {
    BlownUp(i64),
    Quadric,
}

/// A class of surface extensions. Genus is carried wherever the numeric
/// invariants depend on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceClass {
    Cone { g: i64, d: i64 },
    BiellipticCone2Veronese { g: i64 },
    /// Plane `δ`-ics through `b` simple base points.
    PlanarSystem { delta: i64, b: i64 },
    DelPezzoBicanonical { model: DelPezzoModel },
    /// Subsystem of `|2H + (g+1-e)F|` on `F_e` with `b` simple base points;
    /// `e = None` when any admissible `e` may occur.
    HyperellipticRuled { g: i64, e: Option<i64>, b: i64 },
    /// Subsystem of `|3H + (g-3e+2)/2·F|` on `F_e` with `b` base points.
    TrigonalScroll { g: i64, e: Option<i64>, b: i64 },
    /// A plane model of a hyperelliptic extension, projected from `b` points.
    HyperellipticPlanar { system: PlaneSystem, b: i64 },
}

impl SurfaceClass {
    /// `(degree, sectional genus)`, recomputed through the surface formulas.
    pub fn invariants(&self) -> Result<(i64, i64)> {
        match self {
            SurfaceClass::Cone { g, d } => Ok((*d, *g)),
            SurfaceClass::BiellipticCone2Veronese { g } => {
                Ok((surface::bielliptic_cone(*g)?.degree, *g))
            }
            SurfaceClass::PlanarSystem { delta, b } => {
                let p = PlaneSystem::new(*delta, vec![1; *b as usize])?;
                let inv = surface::plane_system_invariants(&p);
                Ok((inv.degree, inv.sectional_genus))
            }
            SurfaceClass::DelPezzoBicanonical { model } => {
                let s = match model {
                    DelPezzoModel::BlownUp(h) => surface::del_pezzo_bicanonical(*h)?,
                    DelPezzoModel::Quadric => surface::del_pezzo_quadric(),
                };
                Ok((s.degree, s.genus))
            }
            SurfaceClass::HyperellipticRuled { g, e, b } => {
                let e = e.unwrap_or(0);
                let c = surface::hyperelliptic_ruled_class(e, g + 1 - e);
                Ok((surface::intersect(e, &c, &c)? - b, surface::adjunction_genus(e, &c)?))
            }
            SurfaceClass::TrigonalScroll { g, e, b } => {
                let e = e.unwrap_or(g % 2);
                let c = surface::trigonal_surface_class(*g, e)?;
                Ok((surface::intersect(e, &c, &c)? - b, surface::adjunction_genus(e, &c)?))
            }
            SurfaceClass::HyperellipticPlanar { system, b } => {
                let inv = surface::plane_system_invariants(system);
                Ok((inv.degree - b, inv.sectional_genus))
            }
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SurfaceClass::Cone { .. } => "cone",
            SurfaceClass::BiellipticCone2Veronese { .. } => "bielliptic-cone-veronese",
            SurfaceClass::PlanarSystem { .. } => "planar-system",
            SurfaceClass::DelPezzoBicanonical { .. } => "del-pezzo-bicanonical",
            SurfaceClass::HyperellipticRuled { .. } => "hyperelliptic-ruled",
            SurfaceClass::TrigonalScroll { .. } => "trigonal-scroll",
            SurfaceClass::HyperellipticPlanar { .. } => "hyperelliptic-planar",
        }
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e_str = |e: &Option<i64>| e.map_or("e".to_string(), |e| e.to_string());
        match self {
            SurfaceClass::Cone { g, d } => write!(f, "cone over a curve of genus {g}, degree {d}"),
            SurfaceClass::BiellipticCone2Veronese { g } => {
                write!(f, "v_2 of a cone over an elliptic normal curve of degree {}", g - 1)
            }
            SurfaceClass::PlanarSystem { delta, b } => {
                write!(f, "plane {delta}-ics through {b} points")
            }
            SurfaceClass::DelPezzoBicanonical { model: DelPezzoModel::BlownUp(h) } => {
                write!(f, "v_2 of a Del Pezzo surface of degree {}", 9 - h)
            }
            SurfaceClass::DelPezzoBicanonical { model: DelPezzoModel::Quadric } => {
                write!(f, "v_2 of the quadric P^1 x P^1")
            }
            SurfaceClass::HyperellipticRuled { g, e, b } => write!(
                f,
                "|2H+({}-{})F| on F_{} through {b} points",
                g + 1,
                e_str(e),
                e_str(e)
            ),
            SurfaceClass::TrigonalScroll { g, e, b } => write!(
                f,
                "|3H+({}-3{})/2 F| on F_{} through {b} points",
                g + 2,
                e_str(e),
                e_str(e)
            ),
            SurfaceClass::HyperellipticPlanar { system, b } => {
                write!(f, "{system} through {b} further points")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extendable {
    Yes,
    No,
    /// Depends on whether `L` has a special form that the caller must supply.
    Conditional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Obstruction {
    Obstructed,
    Unobstructed,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalInvariants {
    pub dim: i64,
    pub deg: i64,
    pub ambient: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionVerdict {
    pub extendable: Extendable,
    pub classes: Vec<SurfaceClass>,
    pub universal: Option<UniversalInvariants>,
    pub obstructed: Obstruction,
    pub cork: Option<i64>,
    pub notes: Vec<String>,
}

impl ExtensionVerdict {
    fn no(notes: Vec<String>) -> Self {
        ExtensionVerdict {
            extendable: Extendable::No,
            classes: vec![],
            universal: None,
            obstructed: Obstruction::Unknown,
            cork: None,
            notes,
        }
    }
}

/// Green's sufficient condition for property `N_k`: `d ≥ 2g + 1 + k`.
pub fn green_nk(g: i64, d: i64, k: i64) -> bool {
    d >= 2 * g + 1 + k
}

/// Above `4g + 4` every extension is a cone.
pub fn hartshorne_only_cones(g: i64, d: i64) -> bool {
    d > 4 * g + 4
}

/// The exception to the cone bound in genus 1: `v_3(P^2)` in degree 9.
pub fn hartshorne_notes(g: i64, d: i64) -> Vec<String> {
    if g == 1 && d == 9 {
        vec!["genus 1, degree 9: the Veronese surface v_3(P^2) is a non-cone extension".into()]
    } else {
        vec![]
    }
}

/// `(δ - 1)(δ - 2)/2`.
fn plane_genus(delta: i64) -> i64 {
    (delta - 1) * (delta - 2) / 2
}

/// Admissible classes of non-cone surfaces of degree `d ≥ 4g - 4` with
/// smooth linearly normal hyperplane sections of genus `g`. Empty above
/// `4g + 4`.
pub fn classify_high_degree(g: i64, d: i64) -> Result<Vec<SurfaceClass>> {
    if g < 2 {
        return Err(Error::domain(format!("genus {g} < 2")));
    }
    if d < 4 * g - 4 {
        return Err(Error::domain(format!("degree {d} < 4g - 4 = {}", 4 * g - 4)));
    }
    if hartshorne_only_cones(g, d) {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    if d == 4 * g - 4 && g >= 4 {
        out.push(SurfaceClass::BiellipticCone2Veronese { g });
    }
    for delta in 4..=6 {
        if plane_genus(delta) == g && d <= delta * delta {
            out.push(SurfaceClass::PlanarSystem { delta, b: delta * delta - d });
        }
    }
    if d == 4 * g - 4 && (3..=10).contains(&g) {
        out.push(SurfaceClass::DelPezzoBicanonical { model: DelPezzoModel::BlownUp(10 - g) });
        if g == 9 {
            out.push(SurfaceClass::DelPezzoBicanonical { model: DelPezzoModel::Quadric });
        }
    }
    out.push(SurfaceClass::HyperellipticRuled { g, e: None, b: 4 * g + 4 - d });
    if g <= 10 && d <= 3 * g + 6 {
        out.push(SurfaceClass::TrigonalScroll { g, e: None, b: 3 * g + 6 - d });
    }
    Ok(out)
}

/// The two plane models of a degree-`(4g+4)` hyperelliptic extension:
/// `L_{g+3}(g+1, 2)` and `L_{2g+2-μ}([2g-μ, 2^{g-μ}])` for `0 ≤ μ ≤ g`.
pub fn hyperelliptic_plane_models(g: i64) -> Result<Vec<PlaneSystem>> {
    let mut models = vec![PlaneSystem::hyperelliptic_first(g)?];
    for mu in 0..=g {
        models.push(PlaneSystem::hyperelliptic_second(g, mu)?);
    }
    for m in &models {
        let inv = surface::plane_system_invariants(m);
        if inv.degree != 4 * g + 4 || inv.sectional_genus != g {
            return Err(Error::domain(format!(
                "{m} has degree {} and genus {}, expected {} and {g}",
                inv.degree,
                inv.sectional_genus,
                4 * g + 4
            )));
        }
    }
    Ok(models)
}

/// Non-cone extensions of a linearly normal hyperelliptic curve: conic
/// bundles over `P^1` on every `F_e` and their plane models.
pub fn classify_hyperelliptic_surfaces(g: i64, d: i64) -> Result<Vec<SurfaceClass>> {
    if g < 2 {
        return Err(Error::domain(format!("genus {g} < 2")));
    }
    let low_ok = d >= 10 || ((2..=3).contains(&g) && d >= 2 * g + 3);
    if !low_ok || d < 2 * g + 3 {
        return Err(Error::domain(format!(
            "genus {g}, degree {d}: below the degree bound other possibilities exist"
        )));
    }
    if d > 4 * g + 4 {
        return Err(Error::domain(format!(
            "degree {d} > 4g + 4 = {}: only cones",
            4 * g + 4
        )));
    }
    let b = 4 * g + 4 - d;
    let mut out: Vec<SurfaceClass> =
        (0..=g + 1).map(|e| SurfaceClass::HyperellipticRuled { g, e: Some(e), b }).collect();
    out.extend(
        hyperelliptic_plane_models(g)?
            .into_iter()
            .map(|system| SurfaceClass::HyperellipticPlanar { system, b }),
    );
    Ok(out)
}

/// `(C, L)` on a plane quartic, either `L = cK - D` explicitly or a general
/// bundle of given degree.
pub fn genus3_extendable(l: &BundleExpr) -> Result<ExtensionVerdict> {
    let curve = CurveClass::genus3_quartic();
    let d = cohomology::degree(&curve, l)?;
    if d < 9 {
        return Err(Error::domain(format!(
            "degree {d} < 9: property N_2 is not guaranteed; see the low-degree report"
        )));
    }
    let planar = |d: i64| -> Result<Vec<SurfaceClass>> {
        Ok(classify_high_degree(3, d)?
            .into_iter()
            .filter(|c| matches!(c, SurfaceClass::PlanarSystem { .. }))
            .collect())
    };
    let yes = |cork: i64, notes: Vec<String>| -> Result<ExtensionVerdict> {
        Ok(ExtensionVerdict {
        extendable: Extendable::Yes,
        classes: planar(d)?,
        universal: Some(UniversalInvariants { dim: 1 + cork, deg: d, ambient: d - 3 + cork }),
        obstructed: Obstruction::Unobstructed,
        cork: Some(cork),
        notes,
        })
    };
    match l {
        BundleExpr::G3Bundle { .. } => {
            let cork = gaussian::gaussian_corank(&curve, l)?.cork;
            if cork > 0 {
                yes(cork, vec!["L = 4K - points; every ribbon integrates".into()])
            } else {
                Ok(ExtensionVerdict { cork: Some(0), ..ExtensionVerdict::no(vec![
                    "4K - L is not effective".into(),
                ]) })
            }
        }
        BundleExpr::G3General { .. } if d > 16 => {
            Ok(ExtensionVerdict { cork: Some(0), ..ExtensionVerdict::no(vec!["d > 16".into()]) })
        }
        BundleExpr::G3General { .. } if d >= 14 => Ok(ExtensionVerdict {
            extendable: Extendable::Conditional,
            classes: planar(d)?,
            universal: None,
            obstructed: Obstruction::Unknown,
            cork: None,
            notes: vec![format!("extendable iff L = 4K - {} points", 16 - d)],
        }),
        BundleExpr::G3General { .. } => {
            // Every L of degree ≤ 13 is 4K minus 16 - d ≥ 3 points.
            let cork = 14 - d;
            yes(cork, vec!["L = 4K - points by Jacobi inversion".into()])
        }
        _ => Err(Error::KindMismatch {
            bundle: l.to_string(),
            curve: cohomology::CurveKind::Genus3Quartic.to_string(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDimension {
    pub dim: i64,
    pub tag: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowDegreeReport {
    pub families: Vec<FamilyDimension>,
    pub notes: Vec<String>,
}

/// Families of extensions of `(C, L)` in degree 8 on a plane quartic.
pub fn genus3_low_degree_report(d: i64, l_is_2k: bool) -> Result<LowDegreeReport> {
    match d {
        8 => {
            let mut families = vec![FamilyDimension { dim: 5, tag: "expected".into() }];
            if l_is_2k {
                families.push(FamilyDimension { dim: 6, tag: "superabundant".into() });
            }
            Ok(LowDegreeReport { families, notes: vec![] })
        }
        7 => Ok(LowDegreeReport {
            families: vec![],
            notes: vec!["degree 7: a superabundant family occurs for L = 2K - p".into()],
        }),
        d if d < 7 => Ok(LowDegreeReport {
            families: vec![],
            notes: vec![format!("degree {d}: no explicit family analysis")],
        }),
        d => Err(Error::domain(format!("degree {d} > 8: use the extendability verdict"))),
    }
}

/// Extensions of a hyperelliptic `(C, L)` with `d ≥ 2g + 3`.
pub fn hyperelliptic_extension_report(g: i64, d: i64) -> Result<ExtensionVerdict> {
    if g < 2 {
        return Err(Error::domain(format!("genus {g} < 2")));
    }
    if d < 2 * g + 3 {
        return Err(Error::domain(format!(
            "degree {d} < 2g + 3; the extensions form a superabundant family of dimension {}",
            4 * g + 4 - d
        )));
    }
    if d > 4 * g + 4 {
        return Ok(ExtensionVerdict::no(vec![format!("d > 4g + 4 = {}: only cones", 4 * g + 4)]));
    }
    let cork = 2 * g + 2;
    // d ≥ 2g + 3 ≥ 11 once g ≥ 4, so the classification always applies.
    let classes = classify_hyperelliptic_surfaces(g, d)?;
    let mut v = ExtensionVerdict {
        extendable: Extendable::Yes,
        classes,
        universal: None,
        obstructed: Obstruction::Obstructed,
        cork: Some(cork),
        notes: vec![],
    };
    if d == 2 * g + 3 {
        v.universal = Some(UniversalInvariants { dim: 2 * g + 3, deg: 2 * g + 3, ambient: 3 * g + 5 });
        v.obstructed = Obstruction::Unobstructed;
    } else {
        v.notes.push("some ribbons are not integrable for general (C, L)".into());
    }
    if d == 4 * g + 4 {
        v.notes.push("finitely many extensions but more than one; no universal extension".into());
    }
    Ok(v)
}

fn check_mu(g: i64, mu: i64) -> Result<()> {
    if (0..=g + 1).contains(&mu) {
        Ok(())
    } else {
        Err(Error::domain(format!("μ = {mu} outside 0..={}", g + 1)))
    }
}

/// Dimension of the family of extensions obtained from `(F_{g+1-μ}, 2H+μF)`
/// by projection from `b` points, beyond those forced by the Jacobian:
/// `b + min(g, μ) - min(g, μ + b)`.
pub fn delta_family_dim(g: i64, mu: i64, b: i64) -> Result<i64> {
    check_mu(g, mu)?;
    if b < 0 {
        return Err(Error::domain(format!("negative point count {b}")));
    }
    Ok(b + g.min(mu) - g.min(mu + b))
}

/// Dimension of the locus of normal bundles in `J^{4g+4-b}(C)`.
pub fn jacobian_locus_dim(g: i64, mu: i64, b: i64) -> i64 {
    g.min(mu + b)
}

/// Dimension of the family of pairs (surface, curve section) for fixed `C`.
pub fn moduli_dim(g: i64, mu: i64, b: i64) -> i64 {
    2 * g + b - 1 + g.min(mu)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub count: usize,
    /// Pairs `(i, j)` of points conjugate under the hyperelliptic involution.
    pub conjugate_pairs: Vec<(usize, usize)>,
}

/// Whether `C` embeds in `F_{g+1-μ}` with `E|_C` the given `μ` points:
/// exactly when no two of them are conjugate.
pub fn embeddable_in_ruled(g: i64, points: &PointConfig) -> Result<bool> {
    if points.count as i64 > g + 1 {
        return Err(Error::domain(format!("{} points > g + 1 = {}", points.count, g + 1)));
    }
    let bad = |&&(i, j): &&(usize, usize)| i == j || i >= points.count || j >= points.count;
    if let Some((i, j)) = points.conjugate_pairs.iter().find(bad) {
        return Err(Error::domain(format!("pair ({i}, {j}) is not a pair of listed points")));
    }
    Ok(points.conjugate_pairs.is_empty())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenOddPlan {
    pub mu: i64,
    pub e: i64,
    /// Coefficient of the pencil in `M = 𝔢 + n·g`.
    pub pencil_multiple: i64,
    /// `deg M`: `2g + 2` (even way) or `2g + 1` (odd way).
    pub half_degree: i64,
    /// Degree of the normal bundle `2𝔢 + (2g + 2 - μ)g`.
    pub normal_degree: i64,
    pub mu_parity_ok: bool,
}

/// Writing `L` of degree `4g + 4` as `2M` (even) or `2M + g` (odd) with
/// `M = 𝔢 + n·g`, `𝔢` a sum of `μ` non-conjugate points. Here
/// `g = 2γ + ε`.
pub fn even_odd_plan(g: i64, parity: Parity, k: i64) -> Result<EvenOddPlan> {
    if g < 2 {
        return Err(Error::domain(format!("genus {g} < 2")));
    }
    let (gamma, eps) = (g / 2, g % 2);
    let (k_max, mu, n) = match parity {
        Parity::Even => (gamma + eps, g + eps - 2 * k, gamma + 1 + k),
        Parity::Odd => (gamma, g + 1 - eps - 2 * k, gamma + eps + k),
    };
    if !(0..=k_max).contains(&k) {
        return Err(Error::Range(format!("k = {k} outside 0..={k_max}")));
    }
    let half_degree = mu + 2 * n;
    let normal_degree = 2 * mu + 2 * (2 * g + 2 - mu);
    let expected_half = match parity {
        Parity::Even => 2 * g + 2,
        Parity::Odd => 2 * g + 1,
    };
    debug_assert_eq!(half_degree, expected_half);
    debug_assert_eq!(normal_degree, 4 * g + 4);
    let mu_parity_ok = (mu % 2 == 0) == (parity == Parity::Even);
    Ok(EvenOddPlan { mu, e: g + 1 - mu, pencil_multiple: n, half_degree, normal_degree, mu_parity_ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predicates() {
        assert!(green_nk(3, 9, 2));
        assert!(!green_nk(4, 10, 2));
        assert!(green_nk(2, 7, 2));
        assert!(hartshorne_only_cones(2, 13));
        assert!(!hartshorne_only_cones(2, 12));
        assert!(hartshorne_only_cones(5, 25));
        assert_eq!(hartshorne_notes(1, 9).len(), 1);
        assert!(hartshorne_notes(2, 9).is_empty());
    }

    #[test]
    fn high_degree_genus_10() {
        let classes = classify_high_degree(10, 36).unwrap();
        let labels: Vec<&str> = classes.iter().map(SurfaceClass::label).collect();
        assert_eq!(classes.len(), 5);
        for l in [
            "bielliptic-cone-veronese",
            "planar-system",
            "del-pezzo-bicanonical",
            "hyperelliptic-ruled",
            "trigonal-scroll",
        ] {
            assert!(labels.contains(&l), "{l} missing");
        }
        for c in &classes {
            assert_eq!(c.invariants().unwrap(), (36, 10), "{c}");
        }
    }

    #[test]
    fn high_degree_other() {
        assert_eq!(
            classify_high_degree(12, 48).unwrap(),
            vec![SurfaceClass::HyperellipticRuled { g: 12, e: None, b: 4 }]
        );
        assert!(classify_high_degree(2, 13).unwrap().is_empty());
        assert!(classify_high_degree(5, 15).is_err());
        let q = classify_high_degree(9, 32).unwrap();
        assert!(q.contains(&SurfaceClass::DelPezzoBicanonical { model: DelPezzoModel::Quadric }));
    }

    #[test]
    fn hyperelliptic_surfaces() {
        let c = classify_hyperelliptic_surfaces(2, 11).unwrap();
        let ruled: Vec<_> = c
            .iter()
            .filter(|c| matches!(c, SurfaceClass::HyperellipticRuled { b: 1, .. }))
            .collect();
        assert_eq!(ruled.len(), 4);
        for class in &c {
            assert_eq!(class.invariants().unwrap(), (11, 2));
        }
        let c = classify_hyperelliptic_surfaces(4, 20).unwrap();
        assert_eq!(c.iter().filter(|c| c.label() == "hyperelliptic-ruled").count(), 6);
        let err = classify_hyperelliptic_surfaces(3, 8).unwrap_err();
        assert!(err.to_string().contains("other possibilities exist"));
        assert!(classify_hyperelliptic_surfaces(4, 9).is_err());
    }

    #[test]
    fn genus3_verdicts() {
        let l = BundleExpr::G3Bundle { c: 4, r: 4, aligned: false };
        let v = genus3_extendable(&l).unwrap();
        assert_eq!(v.extendable, Extendable::Yes);
        assert_eq!(v.cork, Some(2));
        assert_eq!(v.universal.unwrap().dim - 2, 1);
        let v = genus3_extendable(&BundleExpr::G3General { d: 17 }).unwrap();
        assert_eq!(v.extendable, Extendable::No);
        assert!(v.classes.is_empty() && v.universal.is_none());
        let v = genus3_extendable(&BundleExpr::G3General { d: 13 }).unwrap();
        assert_eq!(v.extendable, Extendable::Yes);
        let v = genus3_extendable(&BundleExpr::G3General { d: 15 }).unwrap();
        assert_eq!(v.extendable, Extendable::Conditional);
        assert!(genus3_extendable(&BundleExpr::G3General { d: 8 }).is_err());
        // 5K - 4 points has degree 16 but 4K - L = -K + points is not effective
        let l = BundleExpr::G3Bundle { c: 5, r: 4, aligned: false };
        assert_eq!(genus3_extendable(&l).unwrap().extendable, Extendable::No);
    }

    #[test]
    fn low_degree() {
        let r = genus3_low_degree_report(8, false).unwrap();
        assert_eq!(r.families.iter().map(|f| f.dim).collect::<Vec<_>>(), vec![5]);
        let r = genus3_low_degree_report(8, true).unwrap();
        assert_eq!(r.families.iter().map(|f| f.dim).collect::<Vec<_>>(), vec![5, 6]);
        assert_eq!(r.families[1].tag, "superabundant");
        let r = genus3_low_degree_report(7, false).unwrap();
        assert!(r.families.is_empty() && !r.notes.is_empty());
        assert!(genus3_low_degree_report(9, false).is_err());
    }

    #[test]
    fn hyperelliptic_reports() {
        let v = hyperelliptic_extension_report(4, 11).unwrap();
        assert_eq!(v.universal, Some(UniversalInvariants { dim: 11, deg: 11, ambient: 17 }));
        assert_eq!(v.obstructed, Obstruction::Unobstructed);
        let v = hyperelliptic_extension_report(5, 20).unwrap();
        assert_eq!(v.extendable, Extendable::Yes);
        assert_eq!(v.obstructed, Obstruction::Obstructed);
        let v = hyperelliptic_extension_report(5, 24).unwrap();
        assert!(v.notes.iter().any(|n| n.contains("no universal")));
        let v = hyperelliptic_extension_report(3, 17).unwrap();
        assert_eq!(v.extendable, Extendable::No);
        let err = hyperelliptic_extension_report(4, 10).unwrap_err();
        assert!(err.to_string().contains("dimension 10"));
    }

    #[test]
    fn family_dims() {
        assert_eq!(delta_family_dim(5, 6, 3).unwrap(), 3);
        assert_eq!(delta_family_dim(5, 2, 1).unwrap(), 0);
        assert_eq!(delta_family_dim(5, 4, 3).unwrap(), 2);
        assert!(delta_family_dim(5, 7, 0).is_err());
        assert_eq!(jacobian_locus_dim(6, 7, 0), 6);
        assert_eq!(jacobian_locus_dim(6, 2, 1), 3);
        assert_eq!(jacobian_locus_dim(4, 0, 0), 0);
        assert_eq!(moduli_dim(5, 6, 3), 17);
        assert_eq!(moduli_dim(3, 0, 0), 5);
        assert_eq!(moduli_dim(5, 4, 3) - (2 * 5 - 1 + jacobian_locus_dim(5, 4, 3)), 2);
    }

    #[test]
    fn embeddability() {
        let general = PointConfig { count: 4, conjugate_pairs: vec![] };
        assert!(embeddable_in_ruled(5, &general).unwrap());
        let paired = PointConfig { count: 4, conjugate_pairs: vec![(0, 2)] };
        assert!(!embeddable_in_ruled(5, &paired).unwrap());
        assert!(embeddable_in_ruled(5, &PointConfig { count: 0, conjugate_pairs: vec![] }).unwrap());
        assert!(embeddable_in_ruled(2, &PointConfig { count: 4, conjugate_pairs: vec![] }).is_err());
    }

    #[test]
    fn even_odd() {
        let p = even_odd_plan(5, Parity::Even, 0).unwrap();
        assert_eq!((p.mu, p.e), (6, 0));
        let p = even_odd_plan(5, Parity::Odd, 2).unwrap();
        assert_eq!((p.mu, p.e), (1, 5));
        let p = even_odd_plan(4, Parity::Even, 2).unwrap();
        assert_eq!((p.mu, p.e), (0, 5));
        assert!(p.mu_parity_ok);
        assert!(matches!(even_odd_plan(4, Parity::Odd, 3), Err(Error::Range(_))));
    }
}
