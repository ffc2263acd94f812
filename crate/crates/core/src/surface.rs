//! Intersection theory on Hirzebruch surfaces `F_e`, plane linear systems,
//! and the numeric data of the classical surface examples.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{Error, Result};

/// The divisor class `a·E + b·F` on `F_e`, where `E` is the negative section
/// (`E² = -e`) and `F` a ruling. For `e = 0`, `E` is one of the two rulings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuledDivisor {
    pub e: i64,
    pub a: i64,
    pub b: i64,
}

impl RuledDivisor {
    pub fn new(e: i64, a: i64, b: i64) -> Self {
        RuledDivisor { e, a, b }
    }

    /// `a·H + c·F` with `H = E + e·F`.
    pub fn from_h_basis(e: i64, a: i64, c: i64) -> Self {
        RuledDivisor { e, a, b: a * e + c }
    }

    /// Coefficients `(a, c)` in the `(H, F)` basis.
    pub fn to_h_basis(&self) -> (i64, i64) {
        (self.a, self.b - self.a * self.e)
    }

    pub fn section(e: i64) -> Self {
        RuledDivisor { e, a: 1, b: 0 }
    }

    pub fn fibre(e: i64) -> Self {
        RuledDivisor { e, a: 0, b: 1 }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_surface(self, other)?;
        Ok(RuledDivisor { e: self.e, a: self.a + other.a, b: self.b + other.b })
    }

    pub fn scale(&self, k: i64) -> Self {
        RuledDivisor { e: self.e, a: k * self.a, b: k * self.b }
    }

    /// Class string such as `3E+5F on F_1`.
    pub fn class_string(&self) -> String {
        format!("{self} on F_{}", self.e)
    }
}

impl fmt::Display for RuledDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}E"),
            (0, b) => write!(f, "{b}F"),
            (a, b) if b < 0 => write!(f, "{a}E{b}F"),
            (a, b) => write!(f, "{a}E+{b}F"),
        }
    }
}

fn same_surface(d1: &RuledDivisor, d2: &RuledDivisor) -> Result<()> {
    if d1.e == d2.e {
        Ok(())
    } else {
        Err(Error::MixedSurface { left: d1.e, right: d2.e })
    }
}

fn check_e(e: i64) -> Result<()> {
    if e < 0 {
        Err(Error::domain(format!("Hirzebruch index e = {e} < 0")))
    } else {
        Ok(())
    }
}

pub fn intersect(e: i64, d1: &RuledDivisor, d2: &RuledDivisor) -> Result<i64> {
    same_surface(d1, d2)?;
    if d1.e != e {
        return Err(Error::MixedSurface { left: e, right: d1.e });
    }
    Ok(-e * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b)
}

pub fn canonical_class(e: i64) -> Result<RuledDivisor> {
    check_e(e)?;
    Ok(RuledDivisor { e, a: -2, b: -(e + 2) })
}

/// Arithmetic genus `1 + (D² + K·D)/2`.
pub fn adjunction_genus(e: i64, d: &RuledDivisor) -> Result<i64> {
    let k = canonical_class(e)?;
    let twice = intersect(e, d, d)? + intersect(e, &k, d)?;
    if twice % 2 != 0 {
        return Err(Error::Parity(format!("D² + K·D = {twice} is odd for {d} on F_{e}")));
    }
    Ok(1 + twice / 2)
}

/// `h^0(F_e, aE + bF) = Σ_{i=0}^{a} h^0(P^1, O(b - i·e))`, from
/// `π_* O(aE) = ⊕ O(-i·e)`.
pub fn h0_ruled(e: i64, d: &RuledDivisor) -> Result<i64> {
    check_e(e)?;
    if d.e != e {
        return Err(Error::MixedSurface { left: e, right: d.e });
    }
    if d.a < 0 {
        return Ok(0);
    }
    Ok((0..=d.a).map(|i| (d.b - i * e + 1).max(0)).sum())
}

/// The system of plane curves of degree `delta` with base points of the
/// given multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlaneSystem {
    pub delta: i64,
    pub mults: Vec<i64>,
}

impl PlaneSystem {
    pub fn new(delta: i64, mults: Vec<i64>) -> Result<Self> {
        if delta < 1 {
            return Err(Error::domain(format!("plane degree {delta} < 1")));
        }
        if let Some(m) = mults.iter().find(|&&m| m < 1) {
            return Err(Error::domain(format!("base-point multiplicity {m} < 1")));
        }
        Ok(PlaneSystem { delta, mults })
    }

    /// `L_{g+3}(g+1, 2)`: degree `g+3`, one point of multiplicity `g+1`
    /// and one double point.
    pub fn hyperelliptic_first(g: i64) -> Result<Self> {
        Self::new(g + 3, vec![g + 1, 2])
    }

    /// `L_{2g+2-μ}([2g-μ, 2^{g-μ}])`: one point of multiplicity `2g-μ`
    /// and `g-μ` double points infinitely near to it.
    pub fn hyperelliptic_second(g: i64, mu: i64) -> Result<Self> {
        if !(0..=g).contains(&mu) {
            return Err(Error::domain(format!("μ = {mu} outside 0..={g}")));
        }
        let mut mults = vec![2 * g - mu];
        mults.extend(std::iter::repeat_n(2, (g - mu) as usize));
        Self::new(2 * g + 2 - mu, mults)
    }
}

impl fmt::Display for PlaneSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mults: Vec<String> = self.mults.iter().map(i64::to_string).collect();
        write!(f, "L_{}({})", self.delta, mults.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneInvariants {
    pub degree: i64,
    pub sectional_genus: i64,
    pub expected_dim: i64,
}

pub fn plane_system_invariants(p: &PlaneSystem) -> PlaneInvariants {
    let d = p.delta;
    let sq: i64 = p.mults.iter().map(|m| m * m).sum();
    let pairs: i64 = p.mults.iter().map(|m| m * (m - 1) / 2).sum();
    let conds: i64 = p.mults.iter().map(|m| m * (m + 1) / 2).sum();
    PlaneInvariants {
        degree: d * d - sq,
        sectional_genus: (d - 1) * (d - 2) / 2 - pairs,
        expected_dim: d * (d + 3) / 2 - conds,
    }
}

/// Numeric data of a surface together with its embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub genus: i64,
    pub degree: i64,
    pub ambient: i64,
}

/// Del Pezzo surface of degree `9-h` in its bi-anticanonical embedding:
/// `(g, degree, ambient) = (10-h, 4(9-h), 27-3h)`.
pub fn del_pezzo_bicanonical(h: i64) -> Result<SurfaceData> {
    if !(0..=7).contains(&h) {
        return Err(Error::domain(format!("blown-up point count {h} outside 0..=7")));
    }
    Ok(SurfaceData { genus: 10 - h, degree: 4 * (9 - h), ambient: 27 - 3 * h })
}

/// The smooth quadric `P^1 × P^1` embedded by `-2K = O(4,4)`.
pub fn del_pezzo_quadric() -> SurfaceData {
    SurfaceData { genus: 9, degree: 32, ambient: 24 }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiellipticCone {
    pub ambient: i64,
    pub degree: i64,
    pub section_count: i64,
}

/// Cone over an elliptic normal curve of degree `g-1`, re-embedded by
/// `O(2)`: sections of `O ⊕ M ⊕ M²` with `deg M = g-1`.
pub fn bielliptic_cone(g: i64) -> Result<BiellipticCone> {
    if g < 4 {
        return Err(Error::domain(format!("bielliptic cone needs g ≥ 4, got {g}")));
    }
    let section_count = 1 + (g - 1) + (2 * g - 2);
    Ok(BiellipticCone { ambient: section_count - 1, degree: 4 * g - 4, section_count })
}

/// `3H + ((g - 3e + 2)/2)·F` on `F_e`, the class of a trigonal curve of
/// genus `g`.
pub fn trigonal_surface_class(g: i64, e: i64) -> Result<RuledDivisor> {
    check_e(e)?;
    let twice = g - 3 * e + 2;
    if twice % 2 != 0 {
        return Err(Error::Parity(format!("g - 3e + 2 = {twice} is odd (g={g}, e={e})")));
    }
    if twice < 0 {
        return Err(Error::Negativity(format!("g - 3e + 2 = {twice} < 0 (g={g}, e={e})")));
    }
    let c = RuledDivisor::from_h_basis(e, 3, twice / 2);
    if intersect(e, &c, &RuledDivisor::section(e))? < 0 {
        return Err(Error::Negativity(format!("C·E < 0 for {c} on F_{e}")));
    }
    let genus = adjunction_genus(e, &c)?;
    debug_assert_eq!(genus, g);
    Ok(c)
}

/// Maroni pair `(a, b)` to `(e, 3E + (2b-a)F)` with `e = b - a`.
pub fn maroni_to_class(g: i64, a: i64, b: i64) -> Result<(i64, RuledDivisor)> {
    if !crate::cohomology::is_valid_maroni(g, a, b) {
        return Err(Error::Maroni { genus: g, a, b });
    }
    let e = b - a;
    let class = RuledDivisor::new(e, 3, 2 * b - a);
    debug_assert_eq!(Ok(class), trigonal_surface_class(g, e));
    Ok((e, class))
}

/// `2H + k·F` on `F_e`, the hyperelliptic conic-bundle class of genus
/// `k + e - 1`.
pub fn hyperelliptic_ruled_class(e: i64, k: i64) -> RuledDivisor {
    RuledDivisor::from_h_basis(e, 2, k)
}

/// Linear spans attached to a trigonal curve `C` on `F_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigonalSpan {
    /// `C²`, always `3g + 6`.
    pub self_intersection: i64,
    /// `h^0(F_e, C)`: the surface spans `P^{surface_sections - 1}`.
    pub surface_sections: i64,
    /// `h^0(C, O_C(C))`: a hyperplane section spans `P^{curve_sections - 1}`.
    pub curve_sections: i64,
}

/// Spans of the image of `F_e` under the trigonal class. The surface
/// always spans one dimension more than its curve sections.
pub fn trigonal_span(g: i64, e: i64) -> Result<TrigonalSpan> {
    let c = trigonal_surface_class(g, e)?;
    let self_intersection = intersect(e, &c, &c)?;
    // O_C(C) has degree 3g + 6 > 2g - 2, hence is non-special.
    let curve_sections = self_intersection - g + 1;
    Ok(TrigonalSpan { self_intersection, surface_sections: h0_ruled(e, &c)?, curve_sections })
}
