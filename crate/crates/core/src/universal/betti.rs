//! Reference graded Betti numbers of a bicanonical genus-3 curve in `P^5`.

use serde::{Deserialize, Serialize};

/// One free module `⊕ O(-twist)^rank` in a resolution step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub twist: i64,
    pub rank: i64,
}

/// Minimal free resolution of an ideal sheaf: `steps[0]` are the
/// generators, `steps[i]` the `i`-th syzygies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub ambient_dim: i64,
    pub steps: Vec<Vec<Summand>>,
}

const fn s(twist: i64, rank: i64) -> Summand {
    Summand { twist, rank }
}

/// Stored data, not recomputed.
pub fn reference_betti_genus3_bicanonical() -> BettiTable {
    BettiTable {
        ambient_dim: 5,
        steps: vec![
            vec![s(2, 7)],
            vec![s(3, 8), s(4, 6)],
            vec![s(4, 3), s(5, 8)],
            vec![s(6, 3)],
        ],
    }
}

impl BettiTable {
    /// Rank of `O(-twist)` in step `i`.
    pub fn rank(&self, step: usize, twist: i64) -> i64 {
        self.steps
            .get(step)
            .map_or(0, |st| st.iter().filter(|x| x.twist == twist).map(|x| x.rank).sum())
    }

    /// Property `N_p`: quadric generators and linear syzygies up to step
    /// `p - 1`. `N_0` always holds here.
    pub fn satisfies_np(&self, p: usize) -> bool {
        self.steps
            .iter()
            .take(p)
            .enumerate()
            .all(|(i, st)| st.iter().all(|x| x.twist == i as i64 + 2))
    }

    /// `χ(I(n))` from the resolution.
    pub fn euler_characteristic(&self, n: i64) -> i128 {
        let mut total: i128 = 0;
        for (i, st) in self.steps.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for x in st {
                total += sign * x.rank as i128 * binomial_poly(n - x.twist + self.ambient_dim, self.ambient_dim);
            }
        }
        total
    }
}

/// `h^0(P^r, O(k))` as the polynomial `C(k + r, r)`, valid for `k ≥ -r`.
fn binomial_poly(top: i64, r: i64) -> i128 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for j in 0..r {
        num *= (top - j) as i128;
        den *= (j + 1) as i128;
    }
    num / den
}
