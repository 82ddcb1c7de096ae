//! Arithmetic in GF(2^m), 1 ≤ m ≤ 16, backed by exp/log tables.
//!
//! Elements are stored in polynomial-basis coordinates: bit `i` of
//! [`FieldElement::bits`] is the coefficient of `α^i`, where `α` is a root of
//! the field modulus. The modulus must be primitive, so `α` generates the
//! multiplicative group and every nonzero element is `α^k` for a unique
//! `k < n = 2^m - 1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Sub};

use crate::error::{Error, Result};

/// Default primitive polynomials, indexed by `m - 1`. Bit `i` is the coefficient of `x^i`.
pub const DEFAULT_MODULI: [u32; 16] = [
    0b11,    // x + 1
    0b111,   // x^2 + x + 1
    0b1011,  // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11d,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201b,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100b, // x^16 + x^12 + x^3 + x + 1
];

pub const MAX_DEGREE: u32 = 16;

/// An element of GF(2^m) in polynomial-basis coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(pub u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub const fn bits(self) -> u16 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for the prime-field elements 0 and 1.
    #[inline]
    pub const fn is_binary(self) -> bool {
        self.0 <= 1
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

// Characteristic two: subtraction is addition.
impl Sub for FieldElement {
    type Output = FieldElement;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

/// The field GF(2^m) together with its exp/log tables.
///
/// Immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldCtx {
    m: u32,
    modulus: u32,
    n: u32,
    /// `exp[i] = α^i` for `i < 2n`, doubled so products of logs need no reduction.
    exp: Vec<u16>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u16>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl FieldCtx {
    /// Builds GF(2^m). Without an explicit modulus the entry of [`DEFAULT_MODULI`] is used.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<FieldCtx> {
        if m == 0 || m > MAX_DEGREE {
            return Err(Error::DegreeOutOfRange { m });
        }
        let modulus = modulus.unwrap_or(DEFAULT_MODULI[(m - 1) as usize]);
        if modulus >> m != 1 {
            return Err(Error::ModulusDegree { m, modulus });
        }
        let n = (1u32 << m) - 1;
        let mut exp = vec![0u16; 2 * n as usize];
        let mut log = vec![0u16; 1 << m];
        let mut seen = vec![false; 1 << m];
        let mut v: u32 = 1;
        for i in 0..n {
            if v == 0 || seen[v as usize] {
                return Err(Error::NonPrimitiveModulus { modulus });
            }
            seen[v as usize] = true;
            exp[i as usize] = v as u16;
            log[v as usize] = i as u16;
            v <<= 1;
            if v >> m & 1 == 1 {
                v ^= modulus;
            }
        }
        if v != 1 {
            return Err(Error::NonPrimitiveModulus { modulus });
        }
        for i in 0..n as usize {
            exp[n as usize + i] = exp[i];
        }
        Ok(FieldCtx { m, modulus, n, exp, log })
    }

    /// Extension degree.
    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Transform length `2^m - 1`, the order of `α`.
    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^m`.
    #[inline]
    pub fn size(&self) -> usize {
        1 << self.m
    }

    /// The primitive element `α`.
    pub fn alpha(&self) -> FieldElement {
        self.exp(1)
    }

    /// `α^k`, with `k` reduced modulo `n`.
    #[inline]
    pub fn exp(&self, k: u64) -> FieldElement {
        FieldElement(self.exp[(k % self.n as u64) as usize])
    }

    /// Discrete logarithm to base `α`; `None` for zero.
    #[inline]
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize] as u32)
        }
    }

    /// Wraps raw coordinates, rejecting values with bits at or above `m`.
    pub fn element(&self, bits: u32) -> Option<FieldElement> {
        if bits >> self.m == 0 {
            Some(FieldElement(bits as u16))
        } else {
            None
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let i = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        FieldElement(self.exp[i])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let k = self.log(a).ok_or(Error::ZeroElement)?;
        Ok(self.exp((self.n - k) as u64))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` (with `0^0 = 1`).
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        match self.log(a) {
            None if e == 0 => FieldElement::ONE,
            None => FieldElement::ZERO,
            Some(k) => self.exp(k as u64 * (e % self.n as u64)),
        }
    }

    /// The `i`-fold Frobenius map `a ↦ a^(2^i)`.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        match self.log(a) {
            None => FieldElement::ZERO,
            Some(k) => {
                let shift = (1u64 << (i % self.m)) % self.n as u64;
                self.exp(k as u64 * shift)
            }
        }
    }

    /// True iff `a` lies in the subfield GF(2^d), i.e. `a^(2^d) = a`.
    pub fn in_subfield(&self, a: FieldElement, d: u32) -> Result<bool> {
        if d == 0 || !self.m.is_multiple_of(d) {
            return Err(Error::DegreeNotDivisor { d, m: self.m });
        }
        Ok(self.frobenius(a, d) == a)
    }

    /// Cardinality of the binary conjugacy class of `a` (the degree of its minimal polynomial).
    pub fn conjugate_count(&self, a: FieldElement) -> u32 {
        let mut x = self.frobenius(a, 1);
        let mut d = 1;
        while x != a {
            x = self.frobenius(x, 1);
            d += 1;
        }
        d
    }

    /// Renders `a` as `0`, `1` or `a^k`.
    pub fn format_element(&self, a: FieldElement) -> String {
        match self.log(a) {
            None => String::from("0"),
            Some(0) => String::from("1"),
            Some(k) => format!("a^{k}"),
        }
    }

    /// Parses the element grammar `0 | 1 | a^<k>` with `0 ≤ k < n`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let t = s.trim();
        match t {
            "0" => return Ok(FieldElement::ZERO),
            "1" => return Ok(FieldElement::ONE),
            _ => {}
        }
        let k = t
            .strip_prefix("a^")
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|d| d.parse::<u32>().ok())
            .filter(|&k| k < self.n)
            .ok_or_else(|| Error::ParseElement(String::from(t)))?;
        Ok(self.exp(k as u64))
    }

    /// Adapter for `{}` formatting in exponent notation.
    pub fn display(&self, a: FieldElement) -> ElementDisplay<'_> {
        ElementDisplay { ctx: self, a }
    }
}

pub struct ElementDisplay<'a> {
    ctx: &'a FieldCtx,
    a: FieldElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.format_element(self.a))
    }
}

/// Elements of `GF(2^m)` lying in the subfield of degree `d`, in exponent order (zero excluded).
pub fn subfield_elements(ctx: &FieldCtx, d: u32) -> Result<Vec<FieldElement>> {
    if d == 0 || !ctx.m().is_multiple_of(d) {
        return Err(Error::DegreeNotDivisor { d, m: ctx.m() });
    }
    let step = ctx.n() / ((1u32 << d) - 1);
    Ok((0..(1u32 << d) - 1).map(|j| ctx.exp((j * step) as u64)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> FieldCtx {
        FieldCtx::new(4, Some(0x13)).unwrap()
    }

    #[test]
    fn gf16_relation() {
        let ctx = gf16();
        assert_eq!(ctx.n(), 15);
        let a = ctx.alpha();
        assert_eq!(ctx.exp(4), ctx.exp(1) + FieldElement::ONE);
        assert_eq!(ctx.exp(4) + a, FieldElement::ONE);
    }

    #[test]
    fn gf4_default() {
        let ctx = FieldCtx::new(2, None).unwrap();
        assert_eq!(ctx.n(), 3);
        assert_eq!(ctx.modulus(), 0b111);
    }

    #[test]
    fn irreducible_but_not_primitive() {
        assert_eq!(FieldCtx::new(4, Some(0b11111)), Err(Error::NonPrimitiveModulus { modulus: 0b11111 }));
    }

    #[test]
    fn bad_degrees() {
        assert_eq!(FieldCtx::new(0, None), Err(Error::DegreeOutOfRange { m: 0 }));
        assert_eq!(FieldCtx::new(17, None), Err(Error::DegreeOutOfRange { m: 17 }));
        assert_eq!(FieldCtx::new(4, Some(0b1011)), Err(Error::ModulusDegree { m: 4, modulus: 0b1011 }));
        // x^4 reduces to zero immediately.
        assert!(FieldCtx::new(4, Some(0x10)).is_err());
    }

    #[test]
    fn all_defaults_are_primitive() {
        for m in 1..=16 {
            let ctx = FieldCtx::new(m, None).unwrap();
            assert_eq!(ctx.n(), (1 << m) - 1);
        }
    }

    #[test]
    fn mul_examples() {
        let ctx = gf16();
        assert_eq!(ctx.mul(ctx.exp(7), ctx.exp(8)), FieldElement::ONE);
        assert_eq!(ctx.mul(FieldElement::ZERO, ctx.exp(3)), FieldElement::ZERO);
        assert_eq!(ctx.mul(ctx.exp(5), ctx.exp(5)), ctx.exp(10));
        // α^10 = α^2 + α + 1 for x^4 + x + 1
        assert_eq!(ctx.exp(10), FieldElement(0b0111));
    }

    #[test]
    fn add_examples() {
        let ctx = gf16();
        let a = ctx.exp(9);
        assert_eq!(a + a, FieldElement::ZERO);
        assert_eq!(a + FieldElement::ZERO, a);
    }

    #[test]
    fn frobenius_examples() {
        let ctx = gf16();
        assert_eq!(ctx.frobenius(ctx.alpha(), 2), ctx.exp(4));
        assert_eq!(ctx.frobenius(ctx.exp(5), 1), ctx.exp(10));
        for b in 0..16u16 {
            assert_eq!(ctx.frobenius(FieldElement(b), 4), FieldElement(b));
        }
    }

    #[test]
    fn subfield_membership() {
        let ctx = gf16();
        assert_eq!(ctx.in_subfield(ctx.exp(5), 2), Ok(true));
        assert_eq!(ctx.in_subfield(FieldElement::ZERO, 1), Ok(true));
        assert_eq!(ctx.in_subfield(ctx.alpha(), 2), Ok(false));
        assert_eq!(ctx.in_subfield(ctx.alpha(), 3), Err(Error::DegreeNotDivisor { d: 3, m: 4 }));
    }

    #[test]
    fn inverse_and_pow() {
        let ctx = FieldCtx::new(8, None).unwrap();
        for b in 1..256u16 {
            let a = FieldElement(b);
            assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElement::ONE);
            assert_eq!(ctx.pow(a, 255), FieldElement::ONE);
        }
        assert_eq!(ctx.inv(FieldElement::ZERO), Err(Error::ZeroElement));
        assert_eq!(ctx.pow(FieldElement::ZERO, 0), FieldElement::ONE);
    }

    #[test]
    fn element_text() {
        let ctx = gf16();
        assert_eq!(ctx.format_element(FieldElement::ZERO), "0");
        assert_eq!(ctx.format_element(FieldElement::ONE), "1");
        assert_eq!(ctx.format_element(ctx.exp(14)), "a^14");
        assert_eq!(ctx.parse_element("a^0"), Ok(FieldElement::ONE));
        assert_eq!(ctx.parse_element(" a^5 "), Ok(ctx.exp(5)));
        for bad in ["a^15", "a^", "x", "2", "a^-1", ""] {
            assert!(ctx.parse_element(bad).is_err(), "{bad}");
        }
        for b in 0..16u16 {
            let a = FieldElement(b);
            assert_eq!(ctx.parse_element(&ctx.format_element(a)), Ok(a));
        }
    }

    #[test]
    fn subfield_listing() {
        let ctx = gf16();
        let gf4 = subfield_elements(&ctx, 2).unwrap();
        assert_eq!(gf4, vec![FieldElement::ONE, ctx.exp(5), ctx.exp(10)]);
        assert_eq!(ctx.conjugate_count(ctx.exp(5)), 2);
        assert_eq!(ctx.conjugate_count(ctx.exp(3)), 4);
        assert_eq!(ctx.conjugate_count(FieldElement::ONE), 1);
    }
}
