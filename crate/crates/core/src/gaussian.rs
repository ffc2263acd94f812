//! Kernel dimensions and coranks of Gaussian maps `γ_{C,L}`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::cohomology::{
    self, h0, h0_genus3_pluri, h0_hyperelliptic, h0_k_minus_trigonal, h1, minus_two_pencils,
    plus_canonical, BundleExpr, CurveClass, CurveKind,
};
use crate::{Error, Result};

/// Which evaluation produced a corank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorankRule {
    HyperellipticFormula,
    Genus3Formula,
    NonEffective,
    /// The multiplication map is not known to be surjective, so the value
    /// is an upper bound.
    UpperBound,
}

impl CorankRule {
    pub fn tag(&self) -> &'static str {
        match self {
            CorankRule::HyperellipticFormula => "hyperelliptic-formula",
            CorankRule::Genus3Formula => "genus3-formula",
            CorankRule::NonEffective => "non-effective",
            CorankRule::UpperBound => "upper-bound",
        }
    }
}

impl fmt::Display for CorankRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorankResult {
    pub cork: i64,
    pub ker_dim: Option<i64>,
    pub mult_cork: Option<i64>,
    pub rule: CorankRule,
}

impl CorankResult {
    pub fn is_exact(&self) -> bool {
        self.rule != CorankRule::UpperBound
    }
}

/// Corank of `μ_{C,L}: H^0(K) ⊗ H^0(L) → H^0(K+L)`, known only where
/// surjectivity is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MultCorank {
    Zero,
    Undetermined,
}

fn check_gaussian_kind(curve: &CurveClass) -> Result<()> {
    match curve.kind() {
        CurveKind::Hyperelliptic | CurveKind::Genus3Quartic => Ok(()),
        other => Err(Error::kind(format!(
            "Gaussian corank of a polarization is only available on hyperelliptic \
             and genus-3 quartic curves, not on a {other} curve"
        ))),
    }
}

pub fn mult_map_corank(curve: &CurveClass, l: &BundleExpr) -> Result<MultCorank> {
    let g = curve.genus();
    let d = cohomology::degree(curve, l)?;
    let certified = match l {
        BundleExpr::HypBundle { .. } => d >= 2 * g + 3,
        BundleExpr::HypGeneral { .. } => d >= g + 4,
        BundleExpr::G3Bundle { .. } => d >= 6,
        BundleExpr::G3General { .. } => d >= 4,
        BundleExpr::TrigBundle { .. } => false,
    };
    Ok(if certified { MultCorank::Zero } else { MultCorank::Undetermined })
}

fn is_effective_positive(curve: &CurveClass, l: &BundleExpr) -> Result<bool> {
    Ok(cohomology::degree(curve, l)? > 0 && h0(curve, l)? > 0)
}

fn twist(curve: &CurveClass, l: &BundleExpr, j: i64) -> BundleExpr {
    plus_canonical(curve, l, j).expect("hyperelliptic and genus-3 families are closed under K")
}

/// `dim ker γ_{C,L}`: `h^0((g-3)g) · h^0(L - 2g)` on hyperelliptic curves,
/// `h^0(L - 3K)` on plane quartics. Zero when `L` is not effective.
pub fn gaussian_kernel_dim(curve: &CurveClass, l: &BundleExpr) -> Result<i64> {
    check_gaussian_kind(curve)?;
    if !is_effective_positive(curve, l)? {
        return Ok(0);
    }
    let g = curve.genus();
    match curve.kind() {
        CurveKind::Hyperelliptic => {
            let first = h0_hyperelliptic(g, g - 3, 0)?;
            if first == 0 {
                return Ok(0);
            }
            Ok(first * h0(curve, &minus_two_pencils(l))?)
        }
        _ => h0(curve, &twist(curve, l, -3)),
    }
}

/// Corank of `γ_{C,L}` on a hyperelliptic or genus-3 quartic curve.
///
/// For `L` effective of positive degree:
/// hyperelliptic, `2g + 2 - g·h^1(L) + (g-2)·h^1(L - 2g) - cork μ`;
/// genus 3, `h^0(4K - L) - 3·h^1(L) - cork μ`.
/// Otherwise `h^0(2K + L)`.
pub fn gaussian_corank(curve: &CurveClass, l: &BundleExpr) -> Result<CorankResult> {
    check_gaussian_kind(curve)?;
    let g = curve.genus();
    if !is_effective_positive(curve, l)? {
        // R_{C,L} = 0, so μ has corank h^0(K + L).
        return Ok(CorankResult {
            cork: h0(curve, &twist(curve, l, 2))?,
            ker_dim: Some(0),
            mult_cork: Some(h0(curve, &twist(curve, l, 1))?),
            rule: CorankRule::NonEffective,
        });
    }
    let (formula, exact_rule) = match curve.kind() {
        CurveKind::Hyperelliptic => (
            2 * g + 2 - g * h1(curve, l)? + (g - 2) * h1(curve, &minus_two_pencils(l))?,
            CorankRule::HyperellipticFormula,
        ),
        _ => {
            let four_k_minus_l = match *l {
                // 4K - (cK - D) = (4 - c)K + D
                BundleExpr::G3Bundle { c, r, aligned } => cohomology::g3_h0(4 - c, r, aligned),
                BundleExpr::G3General { d } => (14 - d).max(0),
                _ => unreachable!("kind checked"),
            };
            (four_k_minus_l - 3 * h1(curve, l)?, CorankRule::Genus3Formula)
        }
    };
    let ker_dim = Some(gaussian_kernel_dim(curve, l)?);
    Ok(match mult_map_corank(curve, l)? {
        MultCorank::Zero => {
            CorankResult { cork: formula, ker_dim, mult_cork: Some(0), rule: exact_rule }
        }
        MultCorank::Undetermined => {
            CorankResult { cork: formula, ker_dim, mult_cork: None, rule: CorankRule::UpperBound }
        }
    })
}

/// Dimension of the space of ribbons `P(ker ᵗγ)`, i.e. `cork - 1`; `-1`
/// means only the split ribbon exists.
pub fn ribbon_space_dim(curve: &CurveClass, l: &BundleExpr) -> Result<i64> {
    let r = gaussian_corank(curve, l)?;
    if !r.is_exact() {
        return Err(Error::Undetermined(format!("{l} (cork ≤ {})", r.cork)));
    }
    Ok(r.cork - 1)
}

/// `h^0(kK)` on a non-hyperelliptic genus-4 curve.
fn h0_genus4_pluri(k: i64) -> i64 {
    cohomology::h0_pluricanonical(4, k)
}

/// Corank of `γ_{C,mK}` for a non-hyperelliptic curve.
pub fn pluricanonical_corank(curve: &CurveClass, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::domain(format!("pluricanonical multiple m = {m} < 2")));
    }
    let g = curve.genus();
    let kind = curve.kind();
    match kind {
        CurveKind::Hyperelliptic => {
            return Err(Error::kind(
                "hyperelliptic curves: use the polarized corank with L = mK",
            ))
        }
        CurveKind::Bielliptic if g < 6 => {
            return Err(Error::kind(format!(
                "bielliptic curve of genus {g} < 6 has no certified Clifford index 2"
            )))
        }
        _ => {}
    }
    // Low genus: N_C(-m) on a complete intersection.
    match g {
        3 => return Ok(h0_genus3_pluri(4 - m)),
        4 => return Ok(h0_genus4_pluri(3 - m) + h0_genus4_pluri(2 - m)),
        5 if !matches!(kind, CurveKind::Trigonal { .. }) => {
            return Ok(3 * cohomology::h0_pluricanonical(5, 2 - m))
        }
        _ => {}
    }
    if m > 2 {
        return Ok(0);
    }
    match kind {
        CurveKind::Trigonal { maroni_a, maroni_b } => {
            h0_k_minus_trigonal(g, maroni_a, maroni_b, g - 4)
        }
        CurveKind::PlaneQuintic => Ok(3),
        CurveKind::DelPezzoBianticanonical | CurveKind::PlaneSextic | CurveKind::Bielliptic => {
            Ok(1)
        }
        CurveKind::GeneralClifford(c) if c >= 2 => Ok(0),
        CurveKind::GeneralClifford(_) => Err(Error::kind(format!(
            "Clifford index 1 in genus {g}: specify trigonal or plane quintic"
        ))),
        CurveKind::Hyperelliptic | CurveKind::Genus3Quartic => unreachable!("handled above"),
    }
}

/// True when the bicanonical genus-3 curve is in play, whose ideal lacks
/// property `N_2`.
pub fn n2_fails(curve: &CurveClass, m: i64) -> bool {
    curve.genus() == 3 && m == 2 && curve.kind() != CurveKind::Hyperelliptic
}
