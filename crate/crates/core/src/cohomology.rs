//! Cohomology of line bundles on hyperelliptic, trigonal and genus-3 curves.
//!
//! Bundles are described formally ([`BundleExpr`]): multiples of the
//! canonical class `K` and of the low-degree pencil `g` (the `g^1_2` on a
//! hyperelliptic curve, the `g^1_3` on a trigonal one), plus a count of
//! general points. Genericity of the points is a precondition, never
//! checked. The only non-generic configuration modelled is the genus-3
//! "aligned" flag: all points lie on one line of the plane-quartic model.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{Error, Result};

/// Kind of a curve, together with the discrete data the invariants depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    Hyperelliptic,
    /// Trigonal curve with Maroni invariants `(a, b)`: `f_* O_C = O ⊕ O(-a) ⊕ O(-b)`.
    Trigonal { maroni_a: i64, maroni_b: i64 },
    Genus3Quartic,
    PlaneQuintic,
    PlaneSextic,
    Bielliptic,
    DelPezzoBianticanonical,
    /// A curve whose only relevant datum is its Clifford index.
    GeneralClifford(i64),
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveKind::Hyperelliptic => write!(f, "hyperelliptic"),
            CurveKind::Trigonal { maroni_a, maroni_b } => {
                write!(f, "trigonal({maroni_a},{maroni_b})")
            }
            CurveKind::Genus3Quartic => write!(f, "genus-3 plane quartic"),
            CurveKind::PlaneQuintic => write!(f, "plane quintic"),
            CurveKind::PlaneSextic => write!(f, "plane sextic"),
            CurveKind::Bielliptic => write!(f, "bielliptic"),
            CurveKind::DelPezzoBianticanonical => write!(f, "Del Pezzo bi-anticanonical"),
            CurveKind::GeneralClifford(c) => write!(f, "Clifford index {c}"),
        }
    }
}

/// A smooth curve of genus at least 2 with its kind. Construction validates
/// the kind-specific genus constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    genus: i64,
    kind: CurveKind,
}

/// Maroni pairs satisfy `a + b = g + 2` and `0 < a ≤ b ≤ 2a`.
pub fn is_valid_maroni(g: i64, a: i64, b: i64) -> bool {
    a + b == g + 2 && 0 < a && a <= b && b <= 2 * a
}

impl CurveClass {
    pub fn new(genus: i64, kind: CurveKind) -> Result<Self> {
        if genus < 2 {
            return Err(Error::domain(format!("genus {genus} < 2")));
        }
        let fixed = |expected: i64| {
            if genus == expected {
                Ok(())
            } else {
                Err(Error::domain(format!(
                    "a {kind} curve has genus {expected}, not {genus}"
                )))
            }
        };
        match kind {
            CurveKind::Hyperelliptic | CurveKind::Bielliptic => {}
            CurveKind::Trigonal { maroni_a, maroni_b } => {
                if !is_valid_maroni(genus, maroni_a, maroni_b) {
                    return Err(Error::Maroni { genus, a: maroni_a, b: maroni_b });
                }
            }
            CurveKind::Genus3Quartic => fixed(3)?,
            CurveKind::PlaneQuintic => fixed(6)?,
            CurveKind::PlaneSextic => fixed(10)?,
            CurveKind::DelPezzoBianticanonical => {
                // g = 10 - h with 0 ≤ h ≤ 7 (the quadric case has g = 9).
                if !(3..=10).contains(&genus) {
                    return Err(Error::domain(format!(
                        "bi-anticanonical Del Pezzo curves have 3 ≤ g ≤ 10, got {genus}"
                    )));
                }
            }
            CurveKind::GeneralClifford(c) => {
                if c < 1 || 2 * c > genus - 1 {
                    return Err(Error::domain(format!(
                        "Clifford index {c} impossible in genus {genus}"
                    )));
                }
            }
        }
        Ok(CurveClass { genus, kind })
    }

    pub fn hyperelliptic(genus: i64) -> Result<Self> {
        Self::new(genus, CurveKind::Hyperelliptic)
    }

    pub fn trigonal(genus: i64, maroni_a: i64, maroni_b: i64) -> Result<Self> {
        Self::new(genus, CurveKind::Trigonal { maroni_a, maroni_b })
    }

    pub fn genus3_quartic() -> Self {
        CurveClass { genus: 3, kind: CurveKind::Genus3Quartic }
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} curve of genus {}", self.kind, self.genus)
    }
}

/// Formal line-bundle expression, one family per curve kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BundleExpr {
    /// `a·g + p_1 + ... + p_k` on a hyperelliptic curve, the `p_i` general
    /// (pairwise non-conjugate, not Weierstrass).
    HypBundle { a: i64, k: i64 },
    /// A general point of `Pic^d` of a hyperelliptic curve.
    HypGeneral { d: i64 },
    /// `c_k·K + n·g` on a trigonal curve, `c_k ∈ {0, 1}`.
    TrigBundle { c_k: i64, n: i64 },
    /// `c·K - (p_1 + ... + p_r)` on a plane quartic.
    G3Bundle { c: i64, r: i64, aligned: bool },
    /// A general point of `Pic^d` of a plane quartic.
    G3General { d: i64 },
}

impl BundleExpr {
    /// The canonical class on a curve that has a bundle family for it.
    pub fn canonical(curve: &CurveClass) -> Result<Self> {
        match curve.kind {
            CurveKind::Hyperelliptic => Ok(BundleExpr::HypBundle { a: curve.genus - 1, k: 0 }),
            CurveKind::Trigonal { .. } => Ok(BundleExpr::TrigBundle { c_k: 1, n: 0 }),
            CurveKind::Genus3Quartic => Ok(BundleExpr::G3Bundle { c: 1, r: 0, aligned: false }),
            other => Err(Error::kind(format!("no bundle family on a {other} curve"))),
        }
    }

    fn family(&self) -> &'static str {
        match self {
            BundleExpr::HypBundle { .. } | BundleExpr::HypGeneral { .. } => "hyperelliptic",
            BundleExpr::TrigBundle { .. } => "trigonal",
            BundleExpr::G3Bundle { .. } | BundleExpr::G3General { .. } => "genus-3",
        }
    }

    fn check_curve(&self, curve: &CurveClass) -> Result<()> {
        let ok = matches!(
            (self, curve.kind),
            (
                BundleExpr::HypBundle { .. } | BundleExpr::HypGeneral { .. },
                CurveKind::Hyperelliptic
            ) | (BundleExpr::TrigBundle { .. }, CurveKind::Trigonal { .. })
                | (
                    BundleExpr::G3Bundle { .. } | BundleExpr::G3General { .. },
                    CurveKind::Genus3Quartic
                )
        );
        if ok {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                bundle: format!("{} ({})", self, self.family()),
                curve: curve.kind.to_string(),
            })
        }
    }

    fn check_shape(&self) -> Result<()> {
        match *self {
            BundleExpr::HypBundle { k, .. } if k < 0 => {
                Err(Error::domain(format!("negative point count {k}")))
            }
            BundleExpr::TrigBundle { c_k, .. } if !(0..=1).contains(&c_k) => {
                Err(Error::domain(format!("canonical multiple {c_k} is not 0 or 1")))
            }
            BundleExpr::G3Bundle { r, .. } if r < 0 => {
                Err(Error::domain(format!("negative point count {r}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BundleExpr::HypBundle { a, k } => write!(f, "{a}*g+{k}pts"),
            BundleExpr::HypGeneral { d } => write!(f, "general(deg {d})"),
            BundleExpr::TrigBundle { c_k, n } => write!(f, "{c_k}*K+{n}*g"),
            BundleExpr::G3Bundle { c, r, aligned } => {
                write!(f, "{c}*K-{r}pts{}", if aligned { ":aligned" } else { "" })
            }
            BundleExpr::G3General { d } => write!(f, "general(deg {d})"),
        }
    }
}

pub fn degree(curve: &CurveClass, bundle: &BundleExpr) -> Result<i64> {
    bundle.check_curve(curve)?;
    bundle.check_shape()?;
    let g = curve.genus;
    Ok(match *bundle {
        BundleExpr::HypBundle { a, k } => 2 * a + k,
        BundleExpr::HypGeneral { d } | BundleExpr::G3General { d } => d,
        BundleExpr::TrigBundle { c_k, n } => c_k * (2 * g - 2) + 3 * n,
        BundleExpr::G3Bundle { c, r, .. } => 4 * c - r,
    })
}

/// `h^0(a·g + k general points)` on a hyperelliptic curve of genus `g`.
///
/// For `0 ≤ m ≤ g-1` the complete series `|m·g|` is composed with the
/// involution, so `h^0(m·g) = m + 1`. General points impose independent
/// conditions on every multiple of `g`, which gives
/// `h^1 = max(0, g - a - k)` by Serre duality, and Riemann–Roch closes the
/// case split: `h^0 = max(min(a, g-1) + 1, 2a + k - g + 1)`.
///
/// A negative pencil coefficient is accepted only when the answer is forced:
/// without points (`h^0 = 0`), or when the degree is negative or exceeds
/// `2g - 2`.
pub fn h0_hyperelliptic(g: i64, a: i64, k: i64) -> Result<i64> {
    check_hyp_args(g, k)?;
    let d = 2 * a + k;
    if a >= 0 {
        return Ok((a.min(g - 1) + 1).max(d - g + 1));
    }
    if k == 0 || d < 0 {
        Ok(0)
    } else if d > 2 * g - 2 {
        Ok(d - g + 1)
    } else {
        Err(negative_pencil(a, k))
    }
}

/// `h^1(a·g + k general points)`, equal to `h^0((g-1-a)·g - points)`.
pub fn h1_hyperelliptic(g: i64, a: i64, k: i64) -> Result<i64> {
    check_hyp_args(g, k)?;
    let d = 2 * a + k;
    if a >= g || d > 2 * g - 2 {
        return Ok(0);
    }
    if a >= 0 {
        return Ok((g - a - k).max(0));
    }
    if k == 0 || d < 0 {
        // h^0 vanishes, so h^1 = g - 1 - d.
        Ok(g - 1 - d)
    } else {
        Err(negative_pencil(a, k))
    }
}

fn check_hyp_args(g: i64, k: i64) -> Result<()> {
    if g < 2 {
        return Err(Error::domain(format!("genus {g} < 2")));
    }
    if k < 0 {
        return Err(Error::domain(format!("negative point count {k}")));
    }
    Ok(())
}

fn negative_pencil(a: i64, k: i64) -> Error {
    Error::domain(format!(
        "pencil coefficient {a} < 0 combined with {k} general points"
    ))
}

fn check_maroni(g: i64, a: i64, b: i64) -> Result<()> {
    if is_valid_maroni(g, a, b) {
        Ok(())
    } else {
        Err(Error::Maroni { genus: g, a, b })
    }
}

/// `h^0(n·g)` on a trigonal curve, computed on `P^1` through
/// `f_*(f^* O(n)) = O(n) ⊕ O(n-a) ⊕ O(n-b)`.
pub fn h0_trigonal(g: i64, a: i64, b: i64, n: i64) -> Result<i64> {
    check_maroni(g, a, b)?;
    if n < 0 {
        return Err(Error::domain(format!("negative pencil multiple {n}")));
    }
    Ok([n, n - a, n - b].iter().map(|&t| (t + 1).max(0)).sum())
}

/// `h^0(K - n·g) = h^0(n·g) - 3n + g - 1` on a trigonal curve.
pub fn h0_k_minus_trigonal(g: i64, a: i64, b: i64, n: i64) -> Result<i64> {
    let value = h0_trigonal(g, a, b, n)? - 3 * n + g - 1;
    debug_assert!(value >= 0, "h^1(n g) < 0 for g={g} (a,b)=({a},{b}) n={n}");
    Ok(value.max(0))
}

/// `h^0(p_1 + ... + p_r)` on a plane quartic, where `aligned` means all the
/// points lie on one line of the canonical model.
pub fn h0_points_on_quartic(r: i64, aligned: bool) -> Result<i64> {
    Ok(match r {
        r if r < 0 => return Err(Error::domain(format!("negative point count {r}"))),
        0..=2 => 1,
        3 => {
            if aligned {
                2
            } else {
                1
            }
        }
        4 => {
            if aligned {
                3
            } else {
                2
            }
        }
        r => r - 2,
    })
}

/// `h^0(k·K)` on a genus-3 curve.
pub fn h0_genus3_pluri(k: i64) -> i64 {
    match k {
        k if k < 0 => 0,
        0 => 1,
        1 => 3,
        k => 4 * k - 2,
    }
}

/// `h^0(k·K)` on a non-hyperelliptic curve of genus `g`.
pub(crate) fn h0_pluricanonical(g: i64, k: i64) -> i64 {
    match k {
        k if k < 0 => 0,
        0 => 1,
        1 => g,
        k => (2 * k - 1) * (g - 1),
    }
}

/// `h^0(c·K + points)` on a plane quartic, where `points > 0` adds and
/// `points < 0` subtracts `|points|` general points.
///
/// Only degrees in `[0, 4]` need care. There, subtraction is reduced to
/// addition by Serre duality; an added divisor of `r ≥ 3` general points
/// moves a fixed bundle to a general point of its Picard component, whose
/// `h^0` is `max(0, deg - 2)`, except for four aligned points, which form a
/// canonical divisor.
pub(crate) fn g3_h0(c: i64, points: i64, aligned: bool) -> i64 {
    let deg = 4 * c + points;
    if deg < 0 {
        return 0;
    }
    if deg > 4 {
        return deg - 2;
    }
    if points == 0 {
        return h0_genus3_pluri(c);
    }
    let r = points.abs();
    if points > 0 {
        match c {
            0 => h0_points_on_quartic(r, aligned).expect("r > 0"),
            -1 if aligned && r == 4 => 1,
            _ => (deg - 2).max(0),
        }
    } else {
        // h^0(L) = deg - 2 + h^0(K - L), and K - L = (1 - c)K + D.
        deg - 2 + g3_h0(1 - c, r, aligned)
    }
}

fn trig_h0(g: i64, a: i64, b: i64, c_k: i64, n: i64) -> Result<i64> {
    Ok(match (c_k, n) {
        (0, n) if n >= 0 => h0_trigonal(g, a, b, n)?,
        (0, _) => 0,
        (_, n) if n > 0 => g - 1 + 3 * n,
        (_, 0) => g,
        (_, n) => h0_k_minus_trigonal(g, a, b, -n)?,
    })
}

/// `h^0` of any supported bundle expression.
pub fn h0(curve: &CurveClass, bundle: &BundleExpr) -> Result<i64> {
    bundle.check_curve(curve)?;
    bundle.check_shape()?;
    let g = curve.genus;
    match (*bundle, curve.kind) {
        (BundleExpr::HypBundle { a, k }, _) => h0_hyperelliptic(g, a, k),
        (BundleExpr::HypGeneral { d }, _) => Ok((d - g + 1).max(0)),
        (BundleExpr::TrigBundle { c_k, n }, CurveKind::Trigonal { maroni_a, maroni_b }) => {
            trig_h0(g, maroni_a, maroni_b, c_k, n)
        }
        (BundleExpr::G3Bundle { c, r, aligned }, _) => Ok(g3_h0(c, -r, aligned)),
        (BundleExpr::G3General { d }, _) => Ok((d - 2).max(0)),
        _ => unreachable!("checked by check_curve"),
    }
}

/// `h^1` of any supported bundle expression, via Serre duality.
pub fn h1(curve: &CurveClass, bundle: &BundleExpr) -> Result<i64> {
    bundle.check_curve(curve)?;
    bundle.check_shape()?;
    let g = curve.genus;
    match (*bundle, curve.kind) {
        (BundleExpr::HypBundle { a, k }, _) => h1_hyperelliptic(g, a, k),
        (BundleExpr::HypGeneral { d }, _) => Ok((g - 1 - d).max(0)),
        (BundleExpr::TrigBundle { c_k, n }, CurveKind::Trigonal { maroni_a, maroni_b }) => {
            // K - (c_k K + n g) = (1 - c_k) K - n g.
            trig_h0(g, maroni_a, maroni_b, 1 - c_k, -n)
        }
        (BundleExpr::G3Bundle { c, r, aligned }, _) => Ok(g3_h0(1 - c, r, aligned)),
        (BundleExpr::G3General { d }, _) => Ok((2 - d).max(0)),
        _ => unreachable!("checked by check_curve"),
    }
}

/// `L - 2g` for hyperelliptic bundles.
pub(crate) fn minus_two_pencils(bundle: &BundleExpr) -> BundleExpr {
    match *bundle {
        BundleExpr::HypBundle { a, k } => BundleExpr::HypBundle { a: a - 2, k },
        BundleExpr::HypGeneral { d } => BundleExpr::HypGeneral { d: d - 4 },
        other => other,
    }
}

/// `L + j·K` for any bundle family; `None` when the result leaves the family
/// (a trigonal `c_k` outside `{0, 1}`).
pub(crate) fn plus_canonical(curve: &CurveClass, bundle: &BundleExpr, j: i64) -> Option<BundleExpr> {
    let g = curve.genus;
    Some(match *bundle {
        BundleExpr::HypBundle { a, k } => BundleExpr::HypBundle { a: a + j * (g - 1), k },
        BundleExpr::HypGeneral { d } => BundleExpr::HypGeneral { d: d + j * (2 * g - 2) },
        BundleExpr::TrigBundle { c_k, n } if (0..=1).contains(&(c_k + j)) => {
            BundleExpr::TrigBundle { c_k: c_k + j, n }
        }
        BundleExpr::TrigBundle { .. } => return None,
        BundleExpr::G3Bundle { c, r, aligned } => BundleExpr::G3Bundle { c: c + j, r, aligned },
        BundleExpr::G3General { d } => BundleExpr::G3General { d: d + 4 * j },
    })
}

pub fn clifford_index_of(curve: &CurveClass) -> Result<i64> {
    let g = curve.genus;
    match curve.kind {
        CurveKind::Hyperelliptic => Ok(0),
        CurveKind::Trigonal { .. } | CurveKind::PlaneQuintic | CurveKind::Genus3Quartic => Ok(1),
        CurveKind::PlaneSextic => Ok(2),
        CurveKind::Bielliptic if g >= 6 => Ok(2),
        CurveKind::Bielliptic => Err(Error::domain(format!(
            "Clifford index of a bielliptic curve of genus {g} < 6 is not pinned down"
        ))),
        // Non-hyperelliptic curves of genus 3 and 4 have Clifford index 1.
        CurveKind::DelPezzoBianticanonical if g >= 5 => Ok(2),
        CurveKind::DelPezzoBianticanonical => Ok(1),
        CurveKind::GeneralClifford(c) => Ok(c),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        let hyp = CurveClass::hyperelliptic(5).unwrap();
        assert_eq!(degree(&hyp, &BundleExpr::HypBundle { a: 6, k: 1 }).unwrap(), 13);
        let q = CurveClass::genus3_quartic();
        assert_eq!(degree(&q, &BundleExpr::G3Bundle { c: 4, r: 3, aligned: false }).unwrap(), 13);
        let t = CurveClass::trigonal(7, 3, 6).unwrap();
        assert_eq!(degree(&t, &BundleExpr::TrigBundle { c_k: 0, n: 4 }).unwrap(), 12);
        assert_eq!(degree(&t, &BundleExpr::canonical(&t).unwrap()).unwrap(), 12);
    }

    #[test]
    fn kind_mismatch() {
        let hyp = CurveClass::hyperelliptic(5).unwrap();
        let err = degree(&hyp, &BundleExpr::TrigBundle { c_k: 0, n: 1 }).unwrap_err();
        assert!(matches!(err, Error::KindMismatch { .. }));
        let q = CurveClass::genus3_quartic();
        assert!(matches!(h0(&q, &BundleExpr::HypGeneral { d: 4 }), Err(Error::KindMismatch { .. })));
    }

    #[test]
    fn hyperelliptic_values() {
        for g in 3..12 {
            assert_eq!(h0_hyperelliptic(g, g - 3, 0).unwrap(), g - 2);
        }
        assert_eq!(h0_hyperelliptic(5, 0, 0).unwrap(), 1);
        assert_eq!(h0_hyperelliptic(4, 3, 1).unwrap(), 4);
        assert_eq!(h1_hyperelliptic(3, 3, 3).unwrap(), 0);
        assert_eq!(h1_hyperelliptic(5, 0, 0).unwrap(), 5);
        assert_eq!(h1_hyperelliptic(6, 2, 1).unwrap(), 3);
    }

    #[test]
    fn negative_pencil_with_points_is_rejected() {
        assert!(matches!(h0_hyperelliptic(6, -1, 3), Err(Error::Domain(_))));
        assert!(matches!(h1_hyperelliptic(6, -1, 3), Err(Error::Domain(_))));
        // forced values
        assert_eq!(h0_hyperelliptic(3, -1, 0).unwrap(), 0);
        assert_eq!(h1_hyperelliptic(3, -1, 0).unwrap(), 4);
        assert_eq!(h0_hyperelliptic(3, -1, 9).unwrap(), 5);
        assert_eq!(h1_hyperelliptic(3, -1, 9).unwrap(), 0);
        assert!(matches!(h0_hyperelliptic(4, 1, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn trigonal_values() {
        assert_eq!(h0_trigonal(7, 3, 6, 4).unwrap(), 7);
        assert_eq!(h0_trigonal(7, 4, 5, 4).unwrap(), 6);
        assert_eq!(h0_trigonal(9, 4, 7, 0).unwrap(), 1);
        assert_eq!(h0_trigonal(10, 4, 8, 6).unwrap(), 10);
        assert_eq!(h0_k_minus_trigonal(5, 3, 4, 1).unwrap(), 3);
        assert_eq!(h0_k_minus_trigonal(8, 5, 5, 4).unwrap(), 0);
        assert_eq!(h0_k_minus_trigonal(6, 4, 4, 2).unwrap(), 2);
        assert!(matches!(h0_trigonal(7, 3, 6, -1), Err(Error::Domain(_))));
        assert!(matches!(h0_trigonal(7, 2, 7, 1), Err(Error::Maroni { .. })));
    }

    #[test]
    fn quartic_points() {
        assert_eq!(h0_points_on_quartic(3, true).unwrap(), 2);
        assert_eq!(h0_points_on_quartic(0, false).unwrap(), 1);
        assert_eq!(h0_points_on_quartic(7, false).unwrap(), 5);
        assert_eq!(h0_points_on_quartic(4, true).unwrap(), 3);
        assert!(h0_points_on_quartic(-1, false).is_err());
    }

    #[test]
    fn genus3_pluri() {
        assert_eq!(h0_genus3_pluri(1), 3);
        assert_eq!(h0_genus3_pluri(2), 6);
        assert_eq!(h0_genus3_pluri(-1), 0);
        assert_eq!(h0_genus3_pluri(0), 1);
    }

    #[test]
    fn genus3_bundles() {
        let q = CurveClass::genus3_quartic();
        // 4K - L = three aligned points
        let l = BundleExpr::G3Bundle { c: 1, r: 3, aligned: true };
        assert_eq!(h0(&q, &l).unwrap(), 1);
        assert_eq!(h1(&q, &l).unwrap(), 2);
        // K - 4 aligned points is trivial
        let trivial = BundleExpr::G3Bundle { c: 1, r: 4, aligned: true };
        assert_eq!(h0(&q, &trivial).unwrap(), 1);
        assert_eq!(h1(&q, &trivial).unwrap(), 3);
        let l = BundleExpr::G3Bundle { c: 2, r: 4, aligned: true };
        assert_eq!(h0(&q, &l).unwrap(), 3);
    }

    #[test]
    fn clifford_indices() {
        assert_eq!(clifford_index_of(&CurveClass::hyperelliptic(7).unwrap()).unwrap(), 0);
        let quintic = CurveClass::new(6, CurveKind::PlaneQuintic).unwrap();
        assert_eq!(clifford_index_of(&quintic).unwrap(), 1);
        let dp = CurveClass::new(7, CurveKind::DelPezzoBianticanonical).unwrap();
        assert_eq!(clifford_index_of(&dp).unwrap(), 2);
        let be = CurveClass::new(5, CurveKind::Bielliptic).unwrap();
        assert!(clifford_index_of(&be).is_err());
        let gc = CurveClass::new(9, CurveKind::GeneralClifford(3)).unwrap();
        assert_eq!(clifford_index_of(&gc).unwrap(), 3);
    }

    #[test]
    fn construction_checks() {
        assert!(CurveClass::new(4, CurveKind::PlaneQuintic).is_err());
        assert!(CurveClass::new(3, CurveKind::Genus3Quartic).is_ok());
        assert!(CurveClass::trigonal(7, 3, 6).is_ok());
        assert!(matches!(CurveClass::trigonal(7, 4, 4), Err(Error::Maroni { .. })));
        assert!(CurveClass::new(9, CurveKind::GeneralClifford(5)).is_err());
        assert!(CurveClass::hyperelliptic(1).is_err());
    }
}
