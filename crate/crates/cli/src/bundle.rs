//! The bundle mini-language.
//!
//! ```text
//! bundle  := term (sign term)* [":aligned"]
//! term    := [int "*"] ("g" | "K") | int "pts"
//! sign    := "+" | "-"
//! ```
//!
//! `g` is the distinguished pencil (`g^1_2` or `g^1_3`), `K` the canonical
//! class, `pts` a number of general points. `4K-3pts:aligned` is `4K`
//! minus three collinear points on a plane quartic.

use curvext::cohomology::{BundleExpr, CurveClass, CurveKind};

use crate::CliError;

/// Coefficients of a parsed bundle expression before it is tied to a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParsedBundle {
    pub pencil: i64,
    pub canonical: i64,
    pub points: i64,
    pub aligned: bool,
}

fn parse_error(token: &str, message: &str) -> CliError {
    CliError::Parse(format!("`{token}`: {message}"))
}

fn parse_int(token: &str, digits: &str) -> Result<i64, CliError> {
    if digits.is_empty() {
        return Ok(1);
    }
    digits.parse().map_err(|_| parse_error(token, "expected an integer coefficient"))
}

pub fn parse_bundle(text: &str) -> Result<ParsedBundle, CliError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (body, aligned) = match compact.split_once(':') {
        Some((body, "aligned")) => (body, true),
        Some((_, suffix)) => return Err(parse_error(suffix, "the only suffix is `:aligned`")),
        None => (compact.as_str(), false),
    };
    if body.is_empty() {
        return Err(parse_error(text, "empty bundle expression"));
    }
    let mut parsed = ParsedBundle { aligned, ..Default::default() };
    let mut rest = body;
    let mut first = true;
    while !rest.is_empty() {
        let (sign, after) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if first => (1, rest),
            _ => return Err(parse_error(rest, "expected `+` or `-` between terms")),
        };
        first = false;
        let end = after.find(['+', '-']).unwrap_or(after.len());
        let token = &after[..end];
        rest = &after[end..];
        if token.is_empty() {
            return Err(parse_error(after, "missing term after sign"));
        }
        let (slot, coeff) = if let Some(count) = token.strip_suffix("pts") {
            (&mut parsed.points, parse_int(token, count)?)
        } else if let Some(c) = token.strip_suffix('g') {
            (&mut parsed.pencil, parse_int(token, c.strip_suffix('*').unwrap_or(c))?)
        } else if let Some(c) = token.strip_suffix('K') {
            (&mut parsed.canonical, parse_int(token, c.strip_suffix('*').unwrap_or(c))?)
        } else {
            return Err(parse_error(token, "expected `<int>*g`, `<int>*K` or `<int>pts`"));
        };
        *slot += sign * coeff;
    }
    Ok(parsed)
}

fn unsupported(curve: &CurveClass, what: &str) -> CliError {
    CliError::Domain(format!("{what} is not available on a {} curve", curve.kind()))
}

impl ParsedBundle {
    /// The expression on a given curve. Canonical multiples on hyperelliptic
    /// curves are rewritten as multiples of the pencil.
    pub fn on_curve(&self, curve: &CurveClass) -> Result<BundleExpr, CliError> {
        let g = curve.genus();
        match curve.kind() {
            CurveKind::Hyperelliptic => {
                if self.points < 0 {
                    return Err(CliError::Domain("subtracting points on a hyperelliptic curve".into()));
                }
                Ok(BundleExpr::HypBundle { a: self.pencil + self.canonical * (g - 1), k: self.points })
            }
            CurveKind::Trigonal { .. } => {
                if self.points != 0 {
                    return Err(unsupported(curve, "adding points"));
                }
                Ok(BundleExpr::TrigBundle { c_k: self.canonical, n: self.pencil })
            }
            CurveKind::Genus3Quartic => {
                if self.pencil != 0 {
                    return Err(unsupported(curve, "a pencil term"));
                }
                if self.points > 0 {
                    return Err(CliError::Domain("only subtracted points `-<r>pts` on a plane quartic".into()));
                }
                Ok(BundleExpr::G3Bundle { c: self.canonical, r: -self.points, aligned: self.aligned })
            }
            _ => Err(unsupported(curve, "a bundle expression")),
        }
    }
}
