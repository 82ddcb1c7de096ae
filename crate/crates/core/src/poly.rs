//! Polynomials over GF(2) and over GF(2^m).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// A polynomial over GF(2) of degree below 64; bit `i` is the coefficient of `x^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BinPoly(pub u64);

impl BinPoly {
    pub const ZERO: BinPoly = BinPoly(0);
    pub const ONE: BinPoly = BinPoly(1);

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// `None` for the zero polynomial.
    pub const fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros())
        }
    }

    pub fn coeff(self, i: u32) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    /// Carry-less product. Panics in debug builds if the degree would exceed 63.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, rhs: BinPoly) -> BinPoly {
        debug_assert!(self.degree().unwrap_or(0) + rhs.degree().unwrap_or(0) < 64, "product degree overflow");
        let mut acc = 0u64;
        let mut b = rhs.0;
        while b != 0 {
            let i = b.trailing_zeros();
            acc ^= self.0 << i;
            b &= b - 1;
        }
        BinPoly(acc)
    }

    pub fn divmod(self, den: BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = den.degree().ok_or(Error::DivisionByZeroPoly)?;
        let mut q = 0u64;
        let mut r = self.0;
        while let Some(rd) = BinPoly(r).degree() {
            if rd < dd {
                break;
            }
            q |= 1 << (rd - dd);
            r ^= den.0 << (rd - dd);
        }
        Ok((BinPoly(q), BinPoly(r)))
    }

    /// Value at a field element.
    pub fn eval(self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        let Some(d) = self.degree() else {
            return FieldElement::ZERO;
        };
        (0..=d).rev().fold(FieldElement::ZERO, |acc, i| {
            let acc = ctx.mul(acc, x);
            if self.coeff(i) {
                acc + FieldElement::ONE
            } else {
                acc
            }
        })
    }

    /// Embeds the coefficients into GF(2^m).
    pub fn to_field_poly(self) -> FieldPoly {
        let len = self.degree().map_or(0, |d| d as usize + 1);
        FieldPoly::new((0..len).map(|i| FieldElement(self.coeff(i as u32) as u16)).collect())
    }
}

fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (usize, Option<String>)>,
{
    let mut first = true;
    for (deg, coef) in terms {
        if !first {
            f.write_str("+")?;
        }
        first = false;
        match (coef, deg) {
            (None, 0) => f.write_str("1")?,
            (Some(c), 0) => f.write_str(&c)?,
            (c, d) => {
                if let Some(c) = c {
                    write!(f, "{c}*")?;
                }
                if d == 1 {
                    f.write_str("x")?;
                } else {
                    write!(f, "x^{d}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree().map_or(0, |d| d as usize + 1);
        write_terms(f, (0..d).rev().filter(|&i| self.coeff(i as u32)).map(|i| (i, None)))
    }
}

/// Splits `c*x^k` style text into `(coefficient text, degree)` terms.
fn parse_terms(s: &str) -> Option<Vec<(Option<&str>, usize)>> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    s.split('+')
        .map(|term| {
            let term = term.trim();
            let (coef, mono) = match term.rsplit_once('*') {
                Some((c, x)) => (Some(c.trim()), x.trim()),
                None if term.starts_with('x') => (None, term),
                None => return Some((Some(term), 0)),
            };
            let deg = match mono {
                "x" => 1,
                _ => {
                    let d = mono.strip_prefix("x^")?;
                    if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                        return None;
                    }
                    d.parse().ok()?
                }
            };
            Some((coef, deg))
        })
        .collect()
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Parses text such as `x^4+x+1` (repeated terms cancel).
    fn from_str(s: &str) -> Result<BinPoly> {
        let err = || Error::ParsePolynomial(String::from(s));
        let mut bits = 0u64;
        for (coef, deg) in parse_terms(s).ok_or_else(err)? {
            match coef {
                None | Some("1") => {}
                Some("0") => continue,
                Some(_) => return Err(err()),
            }
            if deg >= 64 {
                return Err(err());
            }
            bits ^= 1 << deg;
        }
        Ok(BinPoly(bits))
    }
}

/// A polynomial over GF(2^m), coefficients stored lowest degree first, trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FieldPoly {
    coeffs: Vec<FieldElement>,
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> FieldPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    pub fn zero() -> FieldPoly {
        FieldPoly { coeffs: Vec::new() }
    }

    pub fn one() -> FieldPoly {
        FieldPoly { coeffs: vec![FieldElement::ONE] }
    }

    /// `x - a` (equal to `x + a` in characteristic 2).
    pub fn linear(a: FieldElement) -> FieldPoly {
        FieldPoly::new(vec![a, FieldElement::ONE])
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, rhs: &FieldPoly) -> FieldPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        FieldPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, rhs: &FieldPoly) -> FieldPoly {
        if self.is_zero() || rhs.is_zero() {
            return FieldPoly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += ctx.mul(a, b);
            }
        }
        FieldPoly::new(out)
    }

    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| ctx.mul(acc, x) + c)
    }

    /// The GF(2) polynomial with the same coefficients, if they are all 0 or 1.
    pub fn to_binary(&self) -> Option<BinPoly> {
        if self.coeffs.len() > 64 {
            return None;
        }
        let mut bits = 0u64;
        for (i, c) in self.coeffs.iter().enumerate() {
            match c.bits() {
                0 => {}
                1 => bits |= 1 << i,
                _ => return None,
            }
        }
        Some(BinPoly(bits))
    }

    /// Text form with coefficients in element notation, e.g. `x^2+x+a^5`.
    pub fn format(&self, ctx: &FieldCtx) -> String {
        format!("{}", FieldPolyDisplay { ctx, p: self })
    }

    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<FieldPoly> {
        let err = || Error::ParsePolynomial(String::from(s));
        let mut coeffs: Vec<FieldElement> = Vec::new();
        for (coef, deg) in parse_terms(s).ok_or_else(err)? {
            let c = match coef {
                None => FieldElement::ONE,
                Some(t) => ctx.parse_element(t).map_err(|_| err())?,
            };
            if deg >= 1 << 16 {
                return Err(err());
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, FieldElement::ZERO);
            }
            coeffs[deg] += c;
        }
        Ok(FieldPoly::new(coeffs))
    }
}

struct FieldPolyDisplay<'a> {
    ctx: &'a FieldCtx,
    p: &'a FieldPoly,
}

impl fmt::Display for FieldPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = (0..self.p.coeffs.len()).rev().filter_map(|i| {
            let c = self.p.coeffs[i];
            if c.is_zero() {
                None
            } else if c == FieldElement::ONE {
                Some((i, None))
            } else {
                Some((i, Some(self.ctx.format_element(c))))
            }
        });
        write_terms(f, terms)
    }
}

/// Long division: `num = den·q + r` with `deg r < deg den`.
pub fn divmod(ctx: &FieldCtx, num: &FieldPoly, den: &FieldPoly) -> Result<(FieldPoly, FieldPoly)> {
    let dd = den.degree().ok_or(Error::DivisionByZeroPoly)?;
    let lead_inv = ctx.inv(den.coeffs[dd])?;
    let mut r = num.coeffs.clone();
    if r.len() <= dd {
        return Ok((FieldPoly::zero(), num.clone()));
    }
    let mut q = vec![FieldElement::ZERO; r.len() - dd];
    for i in (dd..r.len()).rev() {
        let c = ctx.mul(r[i], lead_inv);
        if c.is_zero() {
            continue;
        }
        q[i - dd] = c;
        for (j, &d) in den.coeffs.iter().enumerate() {
            r[i - dd + j] += ctx.mul(c, d);
        }
    }
    r.truncate(dd);
    Ok((FieldPoly::new(q), FieldPoly::new(r)))
}

/// Minimal polynomial of `e` over GF(2): the product of `x - e^(2^i)` over its conjugates.
pub fn minimal_poly_gf2(ctx: &FieldCtx, e: FieldElement) -> Result<BinPoly> {
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let d = ctx.conjugate_count(e);
    let p = (0..d).fold(FieldPoly::one(), |acc, i| acc.mul(ctx, &FieldPoly::linear(ctx.frobenius(e, i))));
    Ok(p.to_binary().expect("minimal polynomial has binary coefficients"))
}

/// Minimal polynomial of `e` over GF(2^(m/2)): `(x - e)(x - e^(2^(m/2)))`.
///
/// `e` must have full degree `m` over GF(2).
pub fn minimal_poly_subfield(ctx: &FieldCtx, e: FieldElement) -> Result<FieldPoly> {
    let m = ctx.m();
    if !m.is_multiple_of(2) {
        return Err(Error::OddExtensionDegree { m });
    }
    if e.is_zero() {
        return Err(Error::ZeroElement);
    }
    let d = ctx.conjugate_count(e);
    if d != m {
        return Err(Error::WrongCardinality { expected: m as usize, found: d as usize });
    }
    let e2 = ctx.frobenius(e, m / 2);
    Ok(FieldPoly::new(vec![ctx.mul(e, e2), e + e2, FieldElement::ONE]))
}
