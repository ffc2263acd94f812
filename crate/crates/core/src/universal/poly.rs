//! Sparse multivariate polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// A polynomial in a fixed number of variables. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, BigRational::one())
    }

    pub fn monomial(exps: Vec<u32>, c: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Build from `(coefficient, exponents)` pairs; like terms are combined.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BigRational, Vec<u32>)>,
    {
        let mut p = Self::zero(nvars);
        for (c, exps) in terms {
            if exps.len() != nvars {
                return Err(Error::Arity { expected: nvars, found: exps.len() });
            }
            p.add_term(exps, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::Arity { expected: self.nvars, found: other.nvars })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k * c);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.nvars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Replace `x_i` by `images[i]`. All images share one arity, which
    /// becomes the arity of the result.
    pub fn substitute(&self, images: &[SparsePoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::Arity { expected: target, found: bad.nvars });
        }
        // powers[i][k] = images[i]^k, filled on demand.
        let mut powers: Vec<Vec<SparsePoly>> = vec![vec![Self::one(target)]; images.len()];
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            for (e, c) in term.terms {
                out.add_term(e, c);
            }
        }
        Ok(out)
    }

    /// Re-embed in `nvars` variables, sending `x_i` to `x_{offset + i}`.
    pub fn embed(&self, nvars: usize, offset: usize) -> Result<Self> {
        if offset + self.nvars > nvars {
            return Err(Error::Arity { expected: nvars, found: offset + self.nvars });
        }
        let images: Vec<SparsePoly> = (0..self.nvars).map(|i| Self::var(nvars, offset + i)).collect();
        self.substitute(&images)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` when every term has degree `d`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Fails unless homogeneous of the given degree (zero passes).
    pub fn require_homogeneous(&self, degree: u32, what: &str) -> Result<()> {
        if self.is_zero() || self.homogeneous_degree() == Some(degree) {
            Ok(())
        } else {
            Err(Error::Homogeneity(format!("{what} must be homogeneous of degree {degree}: {self}")))
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.nvars {
            return Err(Error::Arity { expected: self.nvars, found: point.len() });
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow(x.clone(), k as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Text form using the given variable names, in descending lexicographic
    /// order of exponents.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.iter().all(|&k| k == 0) {
                factors.push(format_rational(&abs));
            }
            for (j, &k) in e.iter().enumerate() {
                let name = names.get(j).map_or_else(|| format!("x{j}"), |s| s.to_string());
                match k {
                    0 => {}
                    1 => factors.push(name),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse `c*x0^a*x1^b + ...` with rational coefficients `p/q`.
    /// Whitespace is ignored; variable names come from `names`.
    pub fn parse(text: &str, names: &[&str]) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let nvars = names.len();
        if compact.is_empty() {
            return Err(parse_error("", "empty polynomial"));
        }
        let mut poly = Self::zero(nvars);
        for (negative, body) in split_terms(&compact)? {
            let mut coeff = BigRational::one();
            let mut exps = vec![0u32; nvars];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(parse_error(body, "empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= parse_rational(factor)?;
                    continue;
                }
                let (name, power) = match factor.split_once('^') {
                    Some((n, p)) => {
                        let p: u32 = p
                            .parse()
                            .map_err(|_| parse_error(factor, "exponent is not a non-negative integer"))?;
                        (n, p)
                    }
                    None => (factor, 1),
                };
                let idx = names
                    .iter()
                    .position(|&n| n == name)
                    .ok_or_else(|| parse_error(name, "unknown variable"))?;
                exps[idx] += power;
            }
            if negative {
                coeff = -coeff;
            }
            poly.add_term(exps, coeff);
        }
        Ok(poly)
    }
}

fn parse_error(token: &str, message: &str) -> Error {
    Error::Parse { token: token.to_string(), message: message.to_string() }
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        negative = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i <= bytes.len() {
        if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
            let body = &s[start..i];
            if body.is_empty() {
                let tok = if i < bytes.len() { &s[i..i + 1] } else { s };
                return Err(parse_error(tok, "missing term"));
            }
            out.push((negative, body));
            if i < bytes.len() {
                negative = bytes[i] == b'-';
            }
            start = i + 1;
        }
        i += 1;
    }
    Ok(out)
}

fn parse_rational(token: &str) -> Result<BigRational> {
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| parse_error(token, "malformed number"))?;
    let den: BigInt = den.parse().map_err(|_| parse_error(token, "malformed denominator"))?;
    if den.is_zero() {
        return Err(parse_error(token, "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_add(rhs).expect("arity mismatch in +")
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_sub(rhs).expect("arity mismatch in -")
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.try_mul(rhs).expect("arity mismatch in *")
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-BigRational::one())
    }
}

/// Integer shorthand for coefficients.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
