//! Exact checks of the polynomial identities behind the weighted
//! universal extensions of genus-3 tricanonical and genus-4 bicanonical
//! curves.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::poly::SparsePoly;
use crate::{Error, Result};

/// Which identities held.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    /// The target equation splits as claimed.
    pub decomposition: bool,
    /// The substituted quadric equals the claimed surface equation.
    pub identity: bool,
    /// Specializing the extra coordinates recovers the curve equation.
    pub specialization: bool,
}

impl ConstructionReport {
    pub fn holds(&self) -> bool {
        self.decomposition && self.identity && self.specialization
    }
}

fn require_arity(p: &SparsePoly, n: usize) -> Result<()> {
    if p.nvars() == n {
        Ok(())
    } else {
        Err(Error::Arity { expected: n, found: p.nvars() })
    }
}

/// `Σ x_i y_i` in `2n` variables `(x_0..x_{n-1}, y_0..y_{n-1})`.
fn pairing(n: usize) -> SparsePoly {
    let mut q = SparsePoly::zero(2 * n);
    for i in 0..n {
        q = &q + &(&SparsePoly::var(2 * n, i) * &SparsePoly::var(2 * n, n + i));
    }
    q
}

/// A plane quartic `f = x_1 f_1 + x_2 f_2` together with the line
/// `x_0 + a_1 x_1 + a_2 x_2`.
#[derive(Debug, Clone)]
pub struct Genus3Construction {
    pub f: SparsePoly,
    pub f1: SparsePoly,
    pub f2: SparsePoly,
    pub a1: BigRational,
    pub a2: BigRational,
}

impl Genus3Construction {
    /// Takes `f = x_1 f_1 + x_2 f_2` from the split.
    pub fn from_split(f1: SparsePoly, f2: SparsePoly, a1: BigRational, a2: BigRational) -> Result<Self> {
        require_arity(&f1, 3)?;
        require_arity(&f2, 3)?;
        let f = &(&SparsePoly::var(3, 1) * &f1) + &(&SparsePoly::var(3, 2) * &f2);
        Ok(Genus3Construction { f, f1, f2, a1, a2 })
    }

    /// In `P(1^3, 3^3)` with coordinates `(x, y)`: substituting
    /// `y_1 = f_1 + a_1 y_0`, `y_2 = f_2 + a_2 y_0` into `Σ x_i y_i` gives
    /// `f + y_0 (x_0 + a_1 x_1 + a_2 x_2)`, and `y = (0, f_1, f_2)` gives `f`.
    pub fn check(&self) -> Result<ConstructionReport> {
        for (p, name) in [(&self.f, "f"), (&self.f1, "f1"), (&self.f2, "f2")] {
            require_arity(p, 3)?;
            p.require_homogeneous(if name == "f" { 4 } else { 3 }, name)?;
        }
        let n = 6;
        let x = |i| SparsePoly::var(n, i);
        let y0 = SparsePoly::var(n, 3);
        let f = self.f.embed(n, 0)?;
        let f1 = self.f1.embed(n, 0)?;
        let f2 = self.f2.embed(n, 0)?;

        let split = &(&x(1) * &f1) + &(&x(2) * &f2);
        let decomposition = split == f;

        let y1 = &f1 + &y0.scale(&self.a1);
        let y2 = &f2 + &y0.scale(&self.a2);
        let lhs = pairing(3).substitute(&[x(0), x(1), x(2), y0.clone(), y1, y2])?;
        let line = &(&x(0) + &x(1).scale(&self.a1)) + &x(2).scale(&self.a2);
        let identity = lhs == &f + &(&y0 * &line);

        let curve = pairing(3).substitute(&[x(0), x(1), x(2), SparsePoly::zero(n), f1, f2])?;
        let specialization = curve == f;

        Ok(ConstructionReport { decomposition, identity, specialization })
    }
}

pub fn check_construction_genus3(
    f: &SparsePoly,
    f1: &SparsePoly,
    f2: &SparsePoly,
    a1: &BigRational,
    a2: &BigRational,
) -> Result<bool> {
    let c = Genus3Construction {
        f: f.clone(),
        f1: f1.clone(),
        f2: f2.clone(),
        a1: a1.clone(),
        a2: a2.clone(),
    };
    Ok(c.check()?.holds())
}

/// A canonical genus-4 curve `f = g = 0` in `P^3`, `f` a quadric and
/// `g = Σ x_i g_i` a cubic, with a cubic `g + (Σ a_i x_i) f` through it.
#[derive(Debug, Clone)]
pub struct Genus4Construction {
    pub f: SparsePoly,
    pub g: SparsePoly,
    pub gs: [SparsePoly; 4],
    pub a: [BigRational; 4],
}

impl Genus4Construction {
    /// Takes `g = Σ x_i g_i` from the split.
    pub fn from_split(f: SparsePoly, gs: [SparsePoly; 4], a: [BigRational; 4]) -> Result<Self> {
        let mut g = SparsePoly::zero(4);
        for (i, gi) in gs.iter().enumerate() {
            require_arity(gi, 4)?;
            g = &g + &(&SparsePoly::var(4, i) * gi);
        }
        Ok(Genus4Construction { f, g, gs, a })
    }

    /// In `P(1^4, 2^4)`: substituting `y_i = g_i + a_i f` into `Σ x_i y_i`
    /// gives `g + (Σ a_i x_i) f`, and `y_i = g_i` gives `g`.
    pub fn check(&self) -> Result<ConstructionReport> {
        require_arity(&self.f, 4)?;
        require_arity(&self.g, 4)?;
        self.f.require_homogeneous(2, "f")?;
        self.g.require_homogeneous(3, "g")?;
        for (i, gi) in self.gs.iter().enumerate() {
            require_arity(gi, 4)?;
            gi.require_homogeneous(2, &format!("g{i}"))?;
        }
        let n = 8;
        let x = |i| SparsePoly::var(n, i);
        let f = self.f.embed(n, 0)?;
        let g = self.g.embed(n, 0)?;
        let gs: Vec<SparsePoly> = self.gs.iter().map(|p| p.embed(n, 0)).collect::<Result<_>>()?;

        let mut split = SparsePoly::zero(n);
        for (i, gi) in gs.iter().enumerate() {
            split = &split + &(&x(i) * gi);
        }
        let decomposition = split == g;

        let mut images: Vec<SparsePoly> = (0..4).map(x).collect();
        images.extend(gs.iter().zip(&self.a).map(|(gi, ai)| gi + &f.scale(ai)));
        let lhs = pairing(4).substitute(&images)?;
        let mut linear = SparsePoly::zero(n);
        for (i, ai) in self.a.iter().enumerate() {
            linear = &linear + &x(i).scale(ai);
        }
        let identity = lhs == &g + &(&linear * &f);

        let mut images: Vec<SparsePoly> = (0..4).map(x).collect();
        images.extend(gs.iter().cloned());
        let specialization = pairing(4).substitute(&images)? == g;

        Ok(ConstructionReport { decomposition, identity, specialization })
    }
}

pub fn check_construction_genus4(
    f: &SparsePoly,
    g: &SparsePoly,
    gs: &[SparsePoly; 4],
    a: &[BigRational; 4],
) -> Result<bool> {
    let c = Genus4Construction { f: f.clone(), g: g.clone(), gs: gs.clone(), a: a.clone() };
    Ok(c.check()?.holds())
}

/// The Klein quartic `x_0^3 x_1 + x_1^3 x_2 + x_2^3 x_0` split as
/// `f_1 = x_0^3`, `f_2 = x_1^3 + x_2^2 x_0`.
pub fn klein_quartic_split() -> (SparsePoly, SparsePoly, SparsePoly) {
    let names = ["x0", "x1", "x2"];
    let parse = |s: &str| SparsePoly::parse(s, &names).expect("valid literal");
    (parse("x0^3*x1 + x1^3*x2 + x2^3*x0"), parse("x0^3"), parse("x1^3 + x2^2*x0"))
}
