use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{ConjectureError, Result};

/// Dense integer polynomial in `x`, lowest degree first.
pub type Poly = Vec<BigInt>;

pub fn poly(c: &[i64]) -> Poly {
    trim(c.iter().map(|&k| BigInt::from(k)).collect())
}

pub fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigInt::zero());
    }
    p
}

pub fn is_zero(p: &[BigInt]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(p: &[BigInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, p) in a.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.iter().enumerate() {
            out[i + j] += p * q;
        }
    }
    trim(out)
}

pub fn pow(a: &[BigInt], k: u32) -> Poly {
    (0..k).fold(vec![BigInt::one()], |acc, _| mul(&acc, a))
}

/// Parses an integer polynomial in `x` such as `1-3x+x^2` or `2*x - 1`.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let bad = |m: &str| ConjectureError::BadAnsatz(format!("{m} in polynomial `{text}`"));
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let mut out: Vec<BigInt> = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let mut sign = 1;
        if b[i] == b'+' || b[i] == b'-' {
            sign = if b[i] == b'-' { -1 } else { 1 };
            i += 1;
        } else if i > 0 {
            return Err(bad("expected `+` or `-`"));
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff = if i > start { s[start..i].parse::<BigInt>().unwrap() } else { BigInt::one() };
        let mut deg = 0usize;
        if i < b.len() && b[i] == b'*' {
            i += 1;
            if i >= b.len() || b[i] != b'x' {
                return Err(bad("expected `x` after `*`"));
            }
        }
        if i < b.len() && b[i] == b'x' {
            i += 1;
            deg = 1;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                deg = s[st..i].parse().map_err(|_| bad("expected an exponent"))?;
            }
        } else if i == start {
            return Err(bad("expected a term"));
        }
        coeff *= sign;
        if out.len() <= deg {
            out.resize(deg + 1, BigInt::zero());
        }
        out[deg] += coeff;
    }
    Ok(trim(out))
}

pub fn format_poly(p: &[BigInt]) -> String {
    let mut s = String::new();
    for (k, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let unit = mag.is_one() && k > 0;
        if !unit {
            s.push_str(&mag.to_string());
        }
        match k {
            0 => {}
            1 => s.push_str(if unit { "x" } else { "*x" }),
            _ => s.push_str(&format!("{}x^{k}", if unit { "" } else { "*" })),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}
