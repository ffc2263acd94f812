//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Expected values are written out here rather than taken from the
//! `report-all` implementation.

use std::process::{Command, ExitCode};

use curvext::classify::{classify_high_degree, delta_family_dim, green_nk, hartshorne_only_cones, jacobian_locus_dim, moduli_dim};
use curvext::cohomology::{h0, h0_hyperelliptic, h0_points_on_quartic, h1, h1_hyperelliptic, BundleExpr, CurveClass, CurveKind};
use curvext::gaussian::{gaussian_corank, pluricanonical_corank, ribbon_space_dim};
use curvext::surface::{h0_ruled, intersect, plane_system_invariants, PlaneSystem, RuledDivisor};
use curvext::tables::{genus3_lemma_table, trigonal_table};
use curvext::universal::construction::{
    check_construction_genus3, check_construction_genus4, klein_quartic_split, Genus3Construction,
    Genus4Construction,
};
use curvext::universal::weighted::{genus3_tricanonical_model, genus4_bicanonical_model, plane_quintic_bicanonical_model};
use curvext::universal::{universal_catalogue, wh_invariants, SparsePoly, UniversalCase};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn e2s(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const TRIGONAL: [(i64, i64, i64, i64, i64, &str); 12] = [
    (5, 3, 4, 2, 3, "3E+5F on F_1"),
    (6, 4, 4, 3, 2, "3E+4F on F_0"),
    (6, 3, 5, 3, 2, "3E+7F on F_2"),
    (7, 4, 5, 4, 1, "3E+6F on F_1"),
    (7, 3, 6, 5, 2, "3E+9F on F_3"),
    (8, 5, 5, 5, 0, "3E+5F on F_0"),
    (8, 4, 6, 6, 1, "3E+8F on F_2"),
    (9, 5, 6, 7, 0, "3E+7F on F_1"),
    (9, 4, 7, 8, 1, "3E+10F on F_3"),
    (10, 6, 6, 9, 0, "3E+6F on F_0"),
    (10, 5, 7, 9, 0, "3E+9F on F_2"),
    (10, 4, 8, 10, 1, "3E+12F on F_4"),
];

fn trigonal_table_rows() -> Outcome {
    let rows = trigonal_table(None).map_err(e2s)?;
    check!(rows.len() == TRIGONAL.len(), "{} rows", rows.len());
    for (row, want) in rows.iter().zip(TRIGONAL) {
        let got = (row.genus, row.maroni_a, row.maroni_b, row.h0_pencil, row.h0_k_minus, row.class.as_str());
        check!(got == want, "{got:?} != {want:?}");
        // The pencil column is an honest h^0 on the curve.
        let curve = CurveClass::trigonal(want.0, want.1, want.2).map_err(e2s)?;
        let pencils = BundleExpr::TrigBundle { c_k: 0, n: want.0 - 4 };
        check!(h0(&curve, &pencils).map_err(e2s)? == want.3, "h0 at {want:?}");
        check!(h1(&curve, &pencils).map_err(e2s)? == want.4, "h1 at {want:?}");
    }
    // Same rows through the binary.
    let out = Command::new(env!("CARGO_BIN_EXE_curvext"))
        .args(["table", "trigonal", "--format", "json"])
        .output()
        .map_err(e2s)?;
    check!(out.status.success(), "binary exited with {:?}", out.status.code());
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(e2s)?;
    let printed = doc["outputs"]["rows"].as_array().ok_or("no rows in output")?;
    check!(printed.len() == TRIGONAL.len(), "binary printed {} rows", printed.len());
    for (row, want) in printed.iter().zip(TRIGONAL) {
        let got = (
            row["genus"].as_i64(),
            row["maroni_a"].as_i64(),
            row["maroni_b"].as_i64(),
            row["h0_pencil"].as_i64(),
            row["h0_k_minus"].as_i64(),
            row["class"].as_str(),
        );
        let want_opt = (Some(want.0), Some(want.1), Some(want.2), Some(want.3), Some(want.4), Some(want.5));
        check!(got == want_opt, "binary row {got:?}");
    }
    Ok("12 rows, library and binary".into())
}

fn hyperelliptic_corank() -> Outcome {
    let mut pairs = 0;
    for g in 2..=15i64 {
        let curve = CurveClass::hyperelliptic(g).map_err(e2s)?;
        for d in 2 * g + 3..=4 * g + 8 {
            let l = BundleExpr::HypGeneral { d };
            let cork = gaussian_corank(&curve, &l).map_err(e2s)?.cork;
            let b_max = ribbon_space_dim(&curve, &l).map_err(e2s)?;
            check!(cork == 2 * g + 2, "g={g} d={d}: cork {cork}");
            check!(b_max == 2 * g + 1, "g={g} d={d}: ribbon space {b_max}");
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn genus3_lemma() -> Outcome {
    // deg L = 16 - r; value of h^0(4K - L).
    let general = [(0, 1), (1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 4), (9, 7), (16, 14)];
    for (r, want) in general {
        let got = h0_points_on_quartic(r, false).map_err(e2s)?;
        check!(got == want, "r={r}: {got} != {want}");
    }
    check!(h0_points_on_quartic(3, true).map_err(e2s)? == 2, "three collinear points");
    check!(h0_points_on_quartic(4, true).map_err(e2s)? == 3, "four collinear points");
    let rows = genus3_lemma_table(None).map_err(e2s)?;
    let got: Vec<(i64, Option<i64>, i64)> = rows.iter().map(|r| (r.d, r.special, r.general)).collect();
    let want = vec![(17, None, 0), (16, Some(1), 0), (15, Some(1), 0), (14, Some(1), 0), (13, Some(2), 1), (12, Some(3), 2), (11, None, 3)];
    check!(got == want, "table {got:?}");
    Ok("seven cases".into())
}

fn pluricanonical() -> Outcome {
    let curve = |g, kind| CurveClass::new(g, kind).map_err(e2s);
    let quartic = CurveClass::genus3_quartic();
    let genus4 = curve(4, CurveKind::GeneralClifford(1))?;
    let mut expected = vec![
        (quartic, 2, 6),
        (quartic, 3, 3),
        (quartic, 4, 1),
        (genus4, 2, 5),
        (genus4, 3, 1),
        (curve(5, CurveKind::GeneralClifford(2))?, 2, 3),
        (curve(6, CurveKind::PlaneQuintic)?, 2, 3),
        (curve(10, CurveKind::PlaneSextic)?, 2, 1),
    ];
    for g in 6..=9 {
        expected.push((curve(g, CurveKind::DelPezzoBianticanonical)?, 2, 1));
    }
    for g in [6, 9, 12] {
        expected.push((curve(g, CurveKind::Bielliptic)?, 2, 1));
    }
    for (g, c) in [(7, 3), (9, 4), (12, 3), (15, 5)] {
        expected.push((curve(g, CurveKind::GeneralClifford(c))?, 2, 0));
    }
    for (g, a, b, _, k_minus, _) in TRIGONAL {
        expected.push((curve(g, CurveKind::Trigonal { maroni_a: a, maroni_b: b })?, 2, k_minus));
    }
    for (c, m, want) in &expected {
        let got = pluricanonical_corank(c, *m).map_err(e2s)?;
        check!(got == *want, "{c} m={m}: {got} != {want}");
    }
    Ok(format!("{} values", expected.len()))
}

fn delta_grid() -> Outcome {
    let mut maximal = 0;
    for g in 2..=12i64 {
        for mu in 0..=g + 1 {
            for b in 0..=2 * g + 1 {
                let delta = delta_family_dim(g, mu, b).map_err(e2s)?;
                check!(delta <= b, "g={g} mu={mu} b={b}: delta {delta} > b");
                let rhs = moduli_dim(g, mu, b) - (2 * g - 1 + jacobian_locus_dim(g, mu, b));
                check!(delta == rhs, "g={g} mu={mu} b={b}: {delta} != {rhs}");
                let on_locus = b == 2 * g + 1 && mu >= g;
                check!((delta == 2 * g + 1) == on_locus, "g={g} mu={mu} b={b}: delta {delta}");
                maximal += usize::from(on_locus);
            }
        }
    }
    check!(maximal == 22, "{maximal} maximal points");
    Ok("grid g = 2..12".into())
}

fn weighted_models() -> Outcome {
    let cases = [
        (genus3_tricanonical_model(), CurveClass::genus3_quartic(), 3, (4, 12, 12)),
        (genus4_bicanonical_model(), CurveClass::new(4, CurveKind::GeneralClifford(1)).map_err(e2s)?, 2, (6, 13, 12)),
        (plane_quintic_bicanonical_model(), CurveClass::new(6, CurveKind::PlaneQuintic).map_err(e2s)?, 2, (4, 17, 20)),
    ];
    for (model, curve, m, want) in cases {
        let inv = wh_invariants(&model).map_err(e2s)?;
        check!(inv.as_i64() == Some(want), "{model}: {inv:?}");
        let rec = universal_catalogue(&UniversalCase::Pluricanonical { curve, m }).map_err(e2s)?;
        let g = curve.genus();
        check!(rec.dim == 1 + rec.cork, "dim");
        check!(rec.deg == m * (2 * g - 2), "deg");
        check!(rec.ambient == rec.deg - g + rec.cork, "ambient");
        check!((rec.dim, rec.ambient, rec.deg) == want, "{model}: record {:?}", rec.triple());
    }
    Ok("three models".into())
}

fn genus3_catalogue() -> Outcome {
    let pts = |c, r, aligned| BundleExpr::G3Bundle { c, r, aligned };
    // (polarization, (dim, ambient, deg)); ambient = d - 3 + cork.
    let cases = [
        (pts(4, 3, true), (3, 12, 13)),
        (pts(4, 4, false), (3, 11, 12)),
        (pts(3, 0, false), (4, 12, 12)),
        (BundleExpr::G3General { d: 11 }, (4, 11, 11)),
        (BundleExpr::G3General { d: 10 }, (5, 11, 10)),
        (BundleExpr::G3General { d: 9 }, (6, 11, 9)),
    ];
    for (l, want) in cases {
        let rec = universal_catalogue(&UniversalCase::Genus3 { polarization: l }).map_err(e2s)?;
        check!((rec.dim, rec.ambient, rec.deg) == want, "{l}: {:?}", (rec.dim, rec.ambient, rec.deg));
        if rec.deg <= 11 {
            check!(rec.dim == 15 - rec.deg && rec.ambient == 11, "{l}: not (15-d)-dimensional in P^11");
        }
    }
    Ok("six entries".into())
}

fn surface_identities() -> Outcome {
    for e in 0..=6i64 {
        for k in (3 - e).max(0)..=10 {
            let g = k + e - 1;
            let class = RuledDivisor::from_h_basis(e, 2, k);
            check!(h0_ruled(e, &class).map_err(e2s)? == 3 * g + 6, "h0 at e={e} k={k}");
            check!(intersect(e, &class, &class).map_err(e2s)? == 4 * g + 4, "square at e={e} k={k}");
        }
    }
    for g in 2..=20i64 {
        let mut systems = vec![(g + 3, vec![g + 1, 2])];
        for mu in 0..=g {
            let mut mults = vec![2 * g - mu];
            mults.extend(std::iter::repeat_n(2, (g - mu) as usize));
            systems.push((2 * g + 2 - mu, mults));
        }
        for (delta, mults) in systems {
            let inv = plane_system_invariants(&PlaneSystem::new(delta, mults.clone()).map_err(e2s)?);
            check!(inv.degree == 4 * g + 4 && inv.sectional_genus == g, "g={g} L_{delta}{mults:?}: {inv:?}");
        }
    }
    Ok("ruled and plane families".into())
}

fn rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-20i64..=20)), BigInt::from(rng.gen_range(1i64..=7)))
}

/// A homogeneous form with every monomial of the degree present.
fn dense_form(rng: &mut ChaCha8Rng, nvars: usize, degree: u32) -> SparsePoly {
    fn monomials(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
        if nvars == 1 {
            return vec![vec![degree]];
        }
        (0..=degree)
            .flat_map(|first| {
                monomials(nvars - 1, degree - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let terms: Vec<_> = monomials(nvars, degree).into_iter().map(|m| (rational(rng), m)).collect();
    SparsePoly::from_terms(nvars, terms).expect("arity")
}

fn constructions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_917);
    let zero = BigRational::from_integer(BigInt::from(0));

    let (f, f1, f2) = klein_quartic_split();
    check!(check_construction_genus3(&f, &f1, &f2, &zero, &zero).map_err(e2s)?, "Klein split");
    for i in 0..5 {
        let c = Genus3Construction::from_split(dense_form(&mut rng, 3, 3), dense_form(&mut rng, 3, 3), rational(&mut rng), rational(&mut rng))
            .map_err(e2s)?;
        check!(check_construction_genus3(&c.f, &c.f1, &c.f2, &c.a1, &c.a2).map_err(e2s)?, "genus-3 instance {i}");
    }
    // Negative control: a quartic that is not x1*f1 + x2*f2.
    let x0_fourth = &(&SparsePoly::var(3, 0) * &SparsePoly::var(3, 0)) * &(&SparsePoly::var(3, 0) * &SparsePoly::var(3, 0));
    let broken = &f + &x0_fourth;
    check!(!check_construction_genus3(&broken, &f1, &f2, &zero, &zero).map_err(e2s)?, "corrupted genus-3 passed");

    let mut last = None;
    for i in 0..6 {
        let gs: [SparsePoly; 4] = std::array::from_fn(|_| dense_form(&mut rng, 4, 2));
        let a: [BigRational; 4] = std::array::from_fn(|_| rational(&mut rng));
        let c = Genus4Construction::from_split(dense_form(&mut rng, 4, 2), gs, a).map_err(e2s)?;
        check!(check_construction_genus4(&c.f, &c.g, &c.gs, &c.a).map_err(e2s)?, "genus-4 instance {i}");
        last = Some(c);
    }
    let c = last.expect("instances ran");
    let mut gs = c.gs.clone();
    gs[0] = &gs[0] + &SparsePoly::monomial(vec![0, 2, 0, 0], BigRational::from_integer(BigInt::from(1)));
    check!(!check_construction_genus4(&c.f, &c.g, &gs, &c.a).map_err(e2s)?, "corrupted genus-4 passed");
    Ok("1 + 5 genus-3 and 6 genus-4 identities; both controls rejected".into())
}

fn predicates() -> Outcome {
    for g in 2..=12i64 {
        check!(green_nk(g, 2 * g + 3, 2), "Green true at g={g}");
        check!(!green_nk(g, 2 * g + 2, 2), "Green false at g={g}");
        check!(!hartshorne_only_cones(g, 4 * g + 4), "cones at 4g+4, g={g}");
        check!(hartshorne_only_cones(g, 4 * g + 5), "not cones at 4g+5, g={g}");
        check!(!classify_high_degree(g, 4 * g + 4).map_err(e2s)?.is_empty(), "empty at 4g+4, g={g}");
        for d in 4 * g + 5..=4 * g + 20 {
            check!(classify_high_degree(g, d).map_err(e2s)?.is_empty(), "classes above the bound at g={g} d={d}");
        }
    }
    Ok("g = 2..12".into())
}

fn riemann_roch() -> Outcome {
    let mut count = 0;
    for g in 2..=15i64 {
        let curve = CurveClass::hyperelliptic(g).map_err(e2s)?;
        for a in 0..=2 * g {
            for k in 0..=10 {
                let d = 2 * a + k;
                let chi = h0_hyperelliptic(g, a, k).map_err(e2s)? - h1_hyperelliptic(g, a, k).map_err(e2s)?;
                check!(chi == d - g + 1, "g={g} a={a} k={k}: chi {chi}");
                let l = BundleExpr::HypBundle { a, k };
                check!(h0(&curve, &l).map_err(e2s)? - h1(&curve, &l).map_err(e2s)? == chi, "dispatch at g={g} a={a} k={k}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} bundles"))
}

fn report_all_binary() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_curvext"))
        .args(["report-all", "--format", "json"])
        .output()
        .map_err(e2s)?;
    let doc: Value = serde_json::from_slice(&out.stdout).map_err(e2s)?;
    check!(out.status.code() == Some(0), "report-all exit {:?}", out.status.code());
    check!(doc["outputs"]["passed"] == 11, "report-all: {}", doc["outputs"]["passed"]);
    Ok("report-all agrees".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("trigonal table", trigonal_table_rows),
        ("hyperelliptic corank 2g+2", hyperelliptic_corank),
        ("genus-3 h0(4K-L) cases", genus3_lemma),
        ("pluricanonical coranks", pluricanonical),
        ("delta grid", delta_grid),
        ("weighted models", weighted_models),
        ("genus-3 universal catalogue", genus3_catalogue),
        ("surface identities", surface_identities),
        ("construction identities", constructions),
        ("predicate boundaries", predicates),
        ("Riemann-Roch sweep", riemann_roch),
    ];
    let mut passed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => {
                passed += 1;
                println!("PASS criterion {:>2} {name}: {detail}", i + 1);
            }
            Err(why) => println!("FAIL criterion {:>2} {name}: {why}", i + 1),
        }
    }
    let cross = report_all_binary();
    match &cross {
        Ok(detail) => println!("PASS cross-check: {detail}"),
        Err(why) => println!("FAIL cross-check: {why}"),
    }
    println!("{passed} of {} criteria passed", criteria.len());
    if passed == criteria.len() && cross.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
