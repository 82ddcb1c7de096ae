//! Parsing of moduli, degree lists and input vectors, plus the seeded vector source.
//!
//! Input vectors are whitespace-, comma- or newline-separated elements in the
//! `0 | 1 | a^k` grammar. Lines starting with `#` are ignored. Two keywords
//! stand alone: `delta0` (a one followed by zeros) and `zero`.
//!
//! `random_vector(ctx, seed)` draws from `ChaCha8Rng::seed_from_u64(seed)`; element
//! `i` is the `i`-th `next_u32()` masked to the low `m` bits, read as a polynomial
//! basis vector. Ports that reproduce this rule get byte-identical runs.

use gfdft_core::{BinPoly, FieldCtx, FieldElement};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parses a modulus given as `0x13`, `0b10011`, `19` or `x^4+x+1`.
pub fn parse_modulus(s: &str) -> Result<u32, String> {
    let s = s.trim();
    let bad = || format!("invalid modulus '{s}'");
    let v = if let Some(h) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        u32::from_str_radix(h, 16).map_err(|_| bad())?
    } else if let Some(b) = s.strip_prefix("0b") {
        u32::from_str_radix(b, 2).map_err(|_| bad())?
    } else if s.contains('x') {
        let p: BinPoly = s.parse().map_err(|_| bad())?;
        u32::try_from(p.bits()).map_err(|_| bad())?
    } else {
        s.parse().map_err(|_| bad())?
    };
    Ok(v)
}

/// Parses `2,4,6` into a list of extension degrees.
pub fn parse_m_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("invalid extension degree '{t}'")))
        .collect::<Result<Vec<u32>, String>>()
        .and_then(|v| if v.is_empty() { Err("empty degree list".into()) } else { Ok(v) })
}

/// Parses an input vector of length `n = 2^m - 1`.
pub fn parse_vector(ctx: &FieldCtx, text: &str) -> Result<Vec<FieldElement>, String> {
    let n = ctx.n() as usize;
    let tokens: Vec<&str> = text
        .lines()
        .filter(|l| !l.trim_start().starts_with('#'))
        .flat_map(|l| l.split(|c: char| c == ',' || c.is_whitespace()))
        .filter(|t| !t.is_empty())
        .collect();
    match tokens.as_slice() {
        ["zero"] => return Ok(vec![FieldElement::ZERO; n]),
        ["delta0"] => {
            let mut v = vec![FieldElement::ZERO; n];
            v[0] = FieldElement::ONE;
            return Ok(v);
        }
        _ => {}
    }
    let v = tokens
        .iter()
        .map(|t| ctx.parse_element(t).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} elements, found {}", v.len()));
    }
    Ok(v)
}

pub fn random_vector(ctx: &FieldCtx, seed: u64) -> Vec<FieldElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_vector_from(ctx, &mut rng)
}

pub fn random_vector_from(ctx: &FieldCtx, rng: &mut ChaCha8Rng) -> Vec<FieldElement> {
    let mask = (1u32 << ctx.m()) - 1;
    (0..ctx.n()).map(|_| FieldElement((rng.next_u32() & mask) as u16)).collect()
}

/// Space-separated element text.
pub fn format_vector(ctx: &FieldCtx, v: &[FieldElement]) -> String {
    v.iter().map(|&a| ctx.format_element(a)).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli() {
        for s in ["0x13", "0b10011", "19", "x^4+x+1", " x^4 + x + 1 "] {
            assert_eq!(parse_modulus(s), Ok(19), "{s}");
        }
        assert!(parse_modulus("0xzz").is_err());
        assert!(parse_modulus("y^2").is_err());
    }

    #[test]
    fn degree_lists() {
        assert_eq!(parse_m_list("2,4, 6"), Ok(vec![2, 4, 6]));
        assert!(parse_m_list("").is_err());
        assert!(parse_m_list("4,x").is_err());
    }

    #[test]
    fn vectors() {
        let ctx = FieldCtx::new(2, None).unwrap();
        assert_eq!(
            parse_vector(&ctx, "delta0").unwrap(),
            [FieldElement(1), FieldElement(0), FieldElement(0)]
        );
        assert_eq!(parse_vector(&ctx, " zero\n").unwrap(), [FieldElement(0); 3]);
        let v = parse_vector(&ctx, "# header\n1\na^1\n\n0\n").unwrap();
        assert_eq!(format_vector(&ctx, &v), "1 a^1 0");
        assert_eq!(parse_vector(&ctx, "1,a^2,0").unwrap(), parse_vector(&ctx, "1 a^2 0").unwrap());
        assert!(parse_vector(&ctx, "1 1").is_err());
        assert!(parse_vector(&ctx, "1 1 b").is_err());
        assert!(parse_vector(&ctx, "1 1 a^3").is_err());
    }

    #[test]
    fn seeded_vectors_repeat() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let a = random_vector(&ctx, 7);
        assert_eq!(a, random_vector(&ctx, 7));
        assert_ne!(a, random_vector(&ctx, 8));
        assert!(a.iter().all(|x| x.0 < 16));
    }
}
