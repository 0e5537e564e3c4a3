use std::fmt;

use num_bigint::BigInt;

use crate::error::{ConjectureError, Result};
use crate::poly::{self, Poly};

/// The denominator factors the search draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    X,
    OneMinusX,
    OneMinus2X,
    /// `1 − 3x + x²`
    Golden,
    OneMinus4X,
}

impl Factor {
    pub const BASIS: [Factor; 5] = [Factor::X, Factor::OneMinusX, Factor::OneMinus2X, Factor::Golden, Factor::OneMinus4X];

    pub fn poly(self) -> Poly {
        poly::poly(match self {
            Factor::X => &[0, 1],
            Factor::OneMinusX => &[1, -1],
            Factor::OneMinus2X => &[1, -2],
            Factor::Golden => &[1, -3, 1],
            Factor::OneMinus4X => &[1, -4],
        })
    }

    fn from_poly(p: &[BigInt]) -> Option<Factor> {
        Factor::BASIS.into_iter().find(|f| f.poly() == p)
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str(match self {
            Factor::X => "x",
            Factor::OneMinusX => "(1-x)",
            Factor::OneMinus2X => "(1-2x)",
            Factor::Golden => "(1-3x+x^2)",
            Factor::OneMinus4X => "(1-4x)",
        })
    }
}

/// `[A + B√(1−4x)]/D` with `D` a product of basis factors and degree bounds on
/// `A` and `B`. `deg_b = None` leaves out the square-root part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ansatz {
    pub denominator: Vec<(Factor, u32)>,
    pub deg_a: u32,
    pub deg_b: Option<u32>,
    /// A polynomial that must divide `B`; counts towards `deg_b`.
    pub forced_b: Option<Poly>,
}

impl Ansatz {
    pub fn new(denominator: Vec<(Factor, u32)>, deg_a: u32, deg_b: Option<u32>) -> Self {
        Ansatz { denominator, deg_a, deg_b, forced_b: None }
    }

    pub fn parse(denominator: &str, deg_a: u32, deg_b: Option<u32>) -> Result<Self> {
        Ok(Ansatz::new(parse_denominator(denominator)?, deg_a, deg_b))
    }

    pub fn with_forced_b(mut self, f: Poly) -> Self {
        self.forced_b = Some(f);
        self
    }

    pub fn denominator_poly(&self) -> Poly {
        self.denominator.iter().fold(vec![BigInt::from(1)], |acc, (f, k)| poly::mul(&acc, &poly::pow(&f.poly(), *k)))
    }

    pub fn denominator_string(&self) -> String {
        format_denominator(&self.denominator)
    }

    /// Exponent of a basis factor in the denominator.
    pub fn exponent(&self, f: Factor) -> u32 {
        self.denominator.iter().filter(|(g, _)| *g == f).map(|(_, k)| k).sum()
    }
}

pub fn format_denominator(d: &[(Factor, u32)]) -> String {
    let parts: Vec<String> = d.iter().filter(|(_, k)| *k > 0).map(|(f, k)| if *k == 1 { f.to_string() } else { format!("{f}^{k}") }).collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Parses a product such as `(1-x)^5*(1-3x+x^2)^3*(1-4x)^3` or `x*(1-2x)`.
pub fn parse_denominator(text: &str) -> Result<Vec<(Factor, u32)>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "1" {
        return Ok(Vec::new());
    }
    let mut out: Vec<(Factor, u32)> = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                pieces.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(ConjectureError::BadAnsatz(format!("unbalanced `)` in `{text}`")));
        }
    }
    if depth != 0 {
        return Err(ConjectureError::BadAnsatz(format!("unbalanced `(` in `{text}`")));
    }
    pieces.push(&s[start..]);
    for piece in pieces {
        let (base, exp) = match piece.rfind('^') {
            Some(k) if piece[..k].ends_with(')') || &piece[..k] == "x" => {
                let e = piece[k + 1..].parse::<u32>().map_err(|_| ConjectureError::BadAnsatz(format!("bad exponent in `{piece}`")))?;
                (&piece[..k], e)
            }
            _ => (piece, 1),
        };
        let inner = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(base);
        let p = poly::parse_poly(inner)?;
        let f = Factor::from_poly(&p).ok_or_else(|| ConjectureError::BadAnsatz(format!("`{base}` is not a basis factor")))?;
        match out.iter_mut().find(|(g, _)| *g == f) {
            Some(slot) => slot.1 += exp,
            None => out.push((f, exp)),
        }
    }
    out.sort();
    Ok(out)
}
