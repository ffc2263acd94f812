//! Hypersurfaces in weighted projective space and their embeddings by
//! weighted forms of a fixed degree.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::{Error, Result};

/// Number of monomials of weighted degree `m`, i.e. solutions of
/// `Σ e_i·w_i = m` in non-negative integers. Zero for `m < 0`.
pub fn weighted_monomial_count(weights: &[u64], m: i64) -> BigUint {
    if m < 0 {
        return BigUint::zero();
    }
    let m = m as usize;
    let mut counts = vec![BigUint::zero(); m + 1];
    counts[0] = BigUint::one();
    for &w in weights {
        let w = w as usize;
        if w == 0 {
            continue;
        }
        for s in w..=m {
            let prev = counts[s - w].clone();
            counts[s] += prev;
        }
    }
    counts.swap_remove(m)
}

/// A hypersurface of weighted degree `w` in `P(weights)`, embedded by the
/// forms of weighted degree `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedHypersurface {
    pub weights: Vec<u64>,
    pub w: u64,
    pub m: u64,
}

impl WeightedHypersurface {
    pub fn new(weights: Vec<u64>, w: u64, m: u64) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::domain("a weighted hypersurface needs at least two coordinates"));
        }
        if weights.contains(&0) || w == 0 || m == 0 {
            return Err(Error::domain("weights, equation degree and embedding degree must be positive"));
        }
        Ok(WeightedHypersurface { weights, w, m })
    }

    /// Weights written as `1^3,3^3`.
    pub fn weight_string(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.weights.len() {
            let w = self.weights[i];
            let run = self.weights[i..].iter().take_while(|&&x| x == w).count();
            parts.push(if run == 1 { w.to_string() } else { format!("{w}^{run}") });
            i += run;
        }
        parts.join(",")
    }
}

impl fmt::Display for WeightedHypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X_{} in P({}) by forms of degree {}", self.w, self.weight_string(), self.m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhInvariants {
    pub dim: i64,
    pub ambient: BigInt,
    pub degree: BigUint,
}

impl WhInvariants {
    /// `(dim, ambient, degree)` when the numbers fit in `i64`.
    pub fn as_i64(&self) -> Option<(i64, i64, i64)> {
        Some((self.dim, self.ambient.to_i64()?, self.degree.to_i64()?))
    }
}

/// Dimension, embedding dimension and degree: `ambient + 1` counts forms
/// of degree `m` modulo the equation, and `degree = w·m^dim / Π weights`.
pub fn wh_invariants(x: &WeightedHypersurface) -> Result<WhInvariants> {
    let dim = x.weights.len() as i64 - 2;
    let forms = BigInt::from(weighted_monomial_count(&x.weights, x.m as i64));
    let multiples = BigInt::from(weighted_monomial_count(&x.weights, x.m as i64 - x.w as i64));
    let ambient = forms - multiples - BigInt::one();
    let numerator = BigUint::from(x.w) * num_traits::pow(BigUint::from(x.m), dim as usize);
    let denominator: BigUint = x.weights.iter().map(|&w| BigUint::from(w)).product();
    if !(&numerator % &denominator).is_zero() {
        return Err(Error::Integrality {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(WhInvariants { dim, ambient, degree: numerator / denominator })
}

/// `x_0y_0 + x_1y_1 + x_2y_2 = 0` in `P(1^3, 3^3)`, embedded by cubics.
pub fn genus3_tricanonical_model() -> WeightedHypersurface {
    WeightedHypersurface { weights: vec![1, 1, 1, 3, 3, 3], w: 4, m: 3 }
}

/// `Σ x_i y_i = 0` in `P(1^4, 2^4)`, embedded by quadrics.
pub fn genus4_bicanonical_model() -> WeightedHypersurface {
    WeightedHypersurface { weights: vec![1, 1, 1, 1, 2, 2, 2, 2], w: 3, m: 2 }
}

/// `x_0y_0 + x_1y_1 + x_2y_2 = 0` in `P(1^3, 4^3)`, embedded by quartics.
pub fn plane_quintic_bicanonical_model() -> WeightedHypersurface {
    WeightedHypersurface { weights: vec![1, 1, 1, 4, 4, 4], w: 5, m: 4 }
}

/// The genus-3 bicanonical analogue in `P(1^3, 2^6)`, embedded by quadrics.
pub fn genus3_bicanonical_model() -> WeightedHypersurface {
    WeightedHypersurface { weights: vec![1, 1, 1, 2, 2, 2, 2, 2, 2], w: 4, m: 2 }
}
