use std::fmt;

use num_bigint::BigUint;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigUint),
    /// A declared variable or a catalogue name with its default arguments.
    Ident(String),
    /// Catalogue name applied to variables, e.g. `u(x_star, y_star)`.
    Call(String, Vec<String>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Sqrt(Box<Expr>),
    Diff(String, Box<Expr>),
    E(String, Box<Expr>),
    /// Restricted join: `Σ_n [vⁿ]lhs · [vⁿ]rhs`, eliminating `v`.
    Join(String, Box<Expr>, Box<Expr>),
    /// Coefficientwise product in `v`, keeping `v`.
    Hadamard(String, Box<Expr>, Box<Expr>),
    /// `body` with `v` replaced by `value` after evaluation.
    Subst(String, Box<Expr>, Box<Expr>),
    /// `Σ_{k=lo}^{hi} ratio^k`.
    GeomSum(Box<Expr>, i64, i64),
}

impl Expr {
    pub fn num(n: u64) -> Expr {
        Expr::Num(BigUint::from(n))
    }

    pub fn ident(s: &str) -> Expr {
        Expr::Ident(s.to_string())
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    /// Calls `f` on every node, parents first.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Expr)) {
        f(self);
        match self {
            Expr::Num(_) | Expr::Ident(_) | Expr::Call(..) => {}
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) | Expr::Diff(_, a) | Expr::E(_, a) | Expr::GeomSum(a, ..) => a.walk(f),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Join(_, a, b)
            | Expr::Hadamard(_, a, b)
            | Expr::Subst(_, a, b) => {
                a.walk(f);
                b.walk(f);
            }
        }
    }
}

fn wrap(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if e.prec() < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Ident(s) => write!(f, "{s}"),
            Expr::Call(s, args) => write!(f, "{s}({})", args.join(", ")),
            Expr::Neg(a) => {
                write!(f, "-")?;
                wrap(f, a, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { "+" } else { "-" })?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, k) => {
                wrap(f, a, 5)?;
                if *k < 0 {
                    write!(f, "^({k})")
                } else {
                    write!(f, "^{k}")
                }
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Diff(v, a) => write!(f, "diff_{v}({a})"),
            Expr::E(v, a) => write!(f, "E_{v}[{a}]"),
            Expr::Join(v, a, b) => write!(f, "odot_{v}{{{a}; {b}}}"),
            Expr::Hadamard(v, a, b) => write!(f, "had_{v}{{{a}; {b}}}"),
            Expr::Subst(v, a, b) => write!(f, "subst_{v}{{{a}; {b}}}"),
            Expr::GeomSum(a, lo, hi) => write!(f, "geomsum({a}, {lo}, {hi})"),
        }
    }
}
