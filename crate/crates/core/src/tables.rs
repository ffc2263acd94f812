//! Regenerated classification tables: trigonal curves by Maroni
//! invariants, pluricanonical coranks, and `h^0(4K - L)` on plane quartics.

use serde::{Deserialize, Serialize};

use crate::cohomology::{self, CurveClass, CurveKind};
use crate::gaussian;
use crate::surface;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigonalRow {
    pub genus: i64,
    pub maroni_a: i64,
    pub maroni_b: i64,
    /// `h^0((g-4)·g^1_3)`.
    pub h0_pencil: i64,
    /// `h^0(K - (g-4)·g^1_3)`.
    pub h0_k_minus: i64,
    pub class: String,
}

pub const TRIGONAL_GENERA: std::ops::RangeInclusive<i64> = 5..=10;

/// Rows for every valid Maroni pair, genus ascending and `a` descending.
/// With `genus = None` all of `5..=10` are listed.
pub fn trigonal_table(genus: Option<i64>) -> Result<Vec<TrigonalRow>> {
    let genera = match genus {
        Some(g) if TRIGONAL_GENERA.contains(&g) => g..=g,
        Some(g) => return Err(Error::domain(format!("trigonal table covers genus 5..=10, not {g}"))),
        None => TRIGONAL_GENERA,
    };
    let mut rows = Vec::new();
    for g in genera {
        for a in (1..=(g + 2) / 2).rev() {
            let b = g + 2 - a;
            if !cohomology::is_valid_maroni(g, a, b) {
                continue;
            }
            let (_, class) = surface::maroni_to_class(g, a, b)?;
            rows.push(TrigonalRow {
                genus: g,
                maroni_a: a,
                maroni_b: b,
                h0_pencil: cohomology::h0_trigonal(g, a, b, g - 4)?,
                h0_k_minus: cohomology::h0_k_minus_trigonal(g, a, b, g - 4)?,
                class: class.class_string(),
            });
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PluricanRow {
    pub case: String,
    pub genus: i64,
    pub m: i64,
    pub cliff: i64,
    pub cork: i64,
}

fn plurican_cases() -> Vec<(String, CurveClass, i64)> {
    let curve = |g, kind| CurveClass::new(g, kind).expect("valid table curve");
    let mut cases = vec![];
    for m in 2..=4 {
        cases.push(("plane quartic".to_string(), CurveClass::genus3_quartic(), m));
    }
    for m in 2..=3 {
        cases.push(("genus 4".to_string(), curve(4, CurveKind::GeneralClifford(1)), m));
    }
    for g in 5..=10 {
        for row in trigonal_table(Some(g)).expect("genus in range") {
            let kind = CurveKind::Trigonal { maroni_a: row.maroni_a, maroni_b: row.maroni_b };
            cases.push((format!("trigonal ({},{})", row.maroni_a, row.maroni_b), curve(g, kind), 2));
        }
    }
    cases.push(("plane quintic".to_string(), curve(6, CurveKind::PlaneQuintic), 2));
    cases.push(("genus 5, Clifford index 2".to_string(), curve(5, CurveKind::GeneralClifford(2)), 2));
    // Genus 5 is already covered by the complete-intersection row.
    for g in 6..=9 {
        cases.push(("Del Pezzo bi-anticanonical".to_string(), curve(g, CurveKind::DelPezzoBianticanonical), 2));
    }
    cases.push(("plane sextic".to_string(), curve(10, CurveKind::PlaneSextic), 2));
    for g in [6, 8, 10] {
        cases.push(("bielliptic".to_string(), curve(g, CurveKind::Bielliptic), 2));
    }
    for (g, c) in [(7, 3), (8, 3), (9, 4)] {
        cases.push((format!("Clifford index {c}"), curve(g, CurveKind::GeneralClifford(c)), 2));
    }
    cases.push(("Clifford index 2".to_string(), curve(8, CurveKind::GeneralClifford(2)), 3));
    cases
}

/// Pluricanonical coranks over the covered cases, optionally restricted
/// to one Clifford index.
pub fn plurican_corank_table(cliff: Option<i64>) -> Result<Vec<PluricanRow>> {
    let mut rows = Vec::new();
    for (case, curve, m) in plurican_cases() {
        let c = cohomology::clifford_index_of(&curve)?;
        if cliff.is_some_and(|wanted| wanted != c) {
            continue;
        }
        rows.push(PluricanRow {
            case,
            genus: curve.genus(),
            m,
            cliff: c,
            cork: gaussian::pluricanonical_corank(&curve, m)?,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genus3LemmaRow {
    pub case: String,
    pub d: i64,
    /// Value when `L = 4K - D` with `D` effective (collinear for `d = 12, 13`).
    pub special: Option<i64>,
    pub special_condition: Option<String>,
    /// Value otherwise.
    pub general: i64,
}

fn lemma_row(d: i64) -> Result<Genus3LemmaRow> {
    if d < 0 {
        return Err(Error::domain(format!("negative degree {d}")));
    }
    let r = 16 - d;
    let (case, special, condition, general) = match d {
        d if d > 16 => ("d > 16".to_string(), None, None, 0),
        14..=16 => (
            format!("d = {d}"),
            Some(cohomology::h0_points_on_quartic(r, false)?),
            Some(format!("L = 4K - D, deg D = {r}")),
            0,
        ),
        12 | 13 => (
            format!("d = {d}"),
            Some(cohomology::h0_points_on_quartic(r, true)?),
            Some(format!("{r} points collinear")),
            cohomology::h0_points_on_quartic(r, false)?,
        ),
        _ => ("d < 12".to_string(), None, None, cohomology::h0_points_on_quartic(r, false)?),
    };
    Ok(Genus3LemmaRow { case, d, special, special_condition: condition, general })
}

/// `h^0(4K - L)` on a plane quartic for `deg L = d`; without `d`, one
/// representative per case (`17, 16, 15, 14, 13, 12, 11`).
pub fn genus3_lemma_table(d: Option<i64>) -> Result<Vec<Genus3LemmaRow>> {
    match d {
        Some(d) => Ok(vec![lemma_row(d)?]),
        None => (11..=17).rev().map(lemma_row).collect(),
    }
}
