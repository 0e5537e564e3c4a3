use std::collections::BTreeMap;

use polygf_gflib::{catalogue, NamedGf};
use polygf_series::{int, Bound, Rat, TruncatedSeries, Truncation, VarSet};

use crate::ast::Expr;
use crate::error::{DslError, Result};
use crate::program::Program;

/// Names an expression may use besides its declared variables.
#[derive(Clone)]
pub struct Bindings {
    map: BTreeMap<String, NamedGf>,
}

const ALIASES: &[(&str, &str)] = &[("Delta", "delta"), ("Z", "festoon_z"), ("S", "staircase_s"), ("I", "indent1"), ("Sbar", "sbar")];

impl Bindings {
    pub fn empty() -> Self {
        Bindings { map: BTreeMap::new() }
    }

    /// The whole catalogue, plus the short names Delta, Z, S, I and Sbar.
    pub fn standard() -> Self {
        let mut b = Bindings::empty();
        let cat = catalogue();
        for g in &cat {
            b.insert(g.name, *g);
        }
        for (alias, name) in ALIASES {
            if let Some(g) = cat.iter().find(|g| g.name == *name) {
                b.insert(alias, *g);
            }
        }
        b
    }

    pub fn insert(&mut self, name: &str, g: NamedGf) {
        self.map.insert(name.to_string(), g);
    }

    pub fn get(&self, name: &str) -> Result<&NamedGf> {
        self.map.get(name).ok_or_else(|| DslError::Unbound(name.to_string()))
    }

    /// A bare name: `u` is `u(x, y)` and `u_star` is `u(x_star, y_star)`.
    pub fn resolve(&self, name: &str) -> Result<(&NamedGf, Vec<String>)> {
        if let Some(g) = self.map.get(name) {
            return Ok((g, g.vars.iter().map(|v| v.to_string()).collect()));
        }
        if let Some(base) = name.strip_suffix("_star") {
            if let Some(g) = self.map.get(base) {
                return Ok((g, g.vars.iter().map(|v| format!("{v}_star")).collect()));
            }
        }
        Err(DslError::Unbound(name.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub series: TruncatedSeries,
    /// Joins whose result may be missing terms beyond the join caps.
    pub warnings: Vec<String>,
}

struct Ev<'a> {
    vars: VarSet,
    bindings: &'a Bindings,
    warnings: Vec<String>,
}

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

impl Ev<'_> {
    fn index(&self, v: &str) -> Result<usize> {
        self.vars.index(v).ok_or_else(|| DslError::Undeclared(v.to_string()))
    }

    fn grow(&self, r: &Truncation, v: &str, k: i64) -> Result<Truncation> {
        let mut s = vec![0; self.vars.len()];
        s[self.index(v)?] = -k;
        Ok(r.shifted(&s))
    }

    /// Re-expresses a series that lost variables over the program's variables.
    fn restore(&self, s: TruncatedSeries, r: &Truncation) -> Result<TruncatedSeries> {
        let caps = |name: &str| self.vars.index(name).map_or(0, |i| r.cap(i));
        Ok(s.embed(&self.vars, &caps)?.truncate(r))
    }

    fn named(&self, g: &NamedGf, args: &[String], r: &Truncation) -> Result<TruncatedSeries> {
        let idx: Vec<usize> = args.iter().map(|a| self.index(a)).collect::<Result<_>>()?;
        let cons = r
            .constraints()
            .into_iter()
            .map(|b| Bound { weights: idx.iter().map(|&i| b.weights[i]).collect(), max: b.max })
            .filter(|b| b.weights.iter().any(|&w| w > 0) || b.max < 0)
            .collect();
        let own = Truncation::from_constraints(idx.len(), cons);
        let s = g.expand(&own)?;
        let n = self.vars.len();
        let terms = s.terms().map(|(e, c)| {
            let mut f = vec![0u32; n];
            for (k, &i) in idx.iter().enumerate() {
                f[i] += e[k];
            }
            (f, c.clone())
        });
        let terms: Vec<_> = terms.filter(|(f, _)| r.contains(f)).collect();
        Ok(TruncatedSeries::from_terms(&self.vars, r, terms)?)
    }

    fn eval(&mut self, e: &Expr, r: &Truncation) -> Result<TruncatedSeries> {
        Ok(match e {
            Expr::Num(n) => TruncatedSeries::constant(&self.vars, r, Rat::from_integer(n.clone().into())),
            Expr::Ident(name) if self.vars.index(name).is_some() => TruncatedSeries::var(&self.vars, r, name)?,
            Expr::Ident(name) => {
                let (g, args) = self.bindings.resolve(name)?;
                self.named(g, &args, r)?
            }
            Expr::Call(name, args) => {
                let g = self.bindings.get(name)?;
                if g.vars.len() != args.len() {
                    return Err(DslError::Arity { name: name.clone(), want: g.vars.len(), got: args.len() });
                }
                self.named(g, args, r)?
            }
            Expr::Neg(a) => self.eval(a, r)?.neg_series(),
            Expr::Add(a, b) => self.eval(a, r)? + self.eval(b, r)?,
            Expr::Sub(a, b) => self.eval(a, r)? - self.eval(b, r)?,
            Expr::Mul(a, b) => match (&**a, &**b) {
                // keep quotients whole so a non-invertible divisor can be cancelled
                (_, Expr::Div(n, d)) => self.eval(&Expr::Div(bx(Expr::Mul(a.clone(), n.clone())), d.clone()), r)?,
                (Expr::Div(n, d), _) => self.eval(&Expr::Div(bx(Expr::Mul(n.clone(), b.clone())), d.clone()), r)?,
                (_, Expr::Pow(base, k)) | (Expr::Pow(base, k), _) if *k < 0 => {
                    let other = if matches!(&**b, Expr::Pow(_, k) if *k < 0) { a } else { b };
                    self.eval(&Expr::Div(other.clone(), bx(Expr::Pow(base.clone(), -k))), r)?
                }
                _ => self.eval(a, r)?.checked_mul(&self.eval(b, r)?)?,
            },
            Expr::Div(a, b) => self.divide(a, b, r)?,
            Expr::Pow(a, k) if *k < 0 => self.divide(&Expr::num(1), &Expr::Pow(a.clone(), -k), r)?,
            Expr::Pow(a, k) => self.eval(a, r)?.pow(*k)?,
            Expr::Sqrt(a) => self.eval(a, r)?.sqrt()?,
            Expr::Diff(v, a) => {
                let g = self.grow(r, v, 1)?;
                self.eval(a, &g)?.diff(v)?.truncate(r)
            }
            Expr::E(v, a) => {
                let inner = r.doubled(self.index(v)?);
                self.eval(a, &inner)?.half_perimeter(v)?.truncate(r)
            }
            Expr::Join(v, a, b) => {
                let (l, rr) = (self.eval(a, r)?, self.eval(b, r)?);
                let j = l.hadamard_join(&rr, v)?;
                if j.truncated {
                    self.warnings.push(format!("join over `{v}` reached its cap; raise it with `cap: {v} <n>`"));
                }
                self.restore(j.series, r)?
            }
            Expr::Hadamard(v, a, b) => self.eval(a, r)?.hadamard(&self.eval(b, r)?, v)?,
            Expr::Subst(v, a, b) if self.rescaling(v, b)?.is_some() => {
                let (c, m) = self.rescaling(v, b)?.unwrap();
                let i = self.index(v)?;
                let shift: Vec<i64> = m.iter().map(|&k| if k < 0 { k * r.reach(i) } else { 0 }).collect();
                let body = self.eval(a, &r.shifted(&shift))?;
                body.rescale(v, &c, &m)?.truncate(r)
            }
            Expr::Subst(v, a, b) => {
                let body = self.eval(a, r)?;
                let val = self.eval(b, r)?;
                self.restore(body.substitute(v, &val)?, r)?
            }
            Expr::GeomSum(a, lo, hi) => {
                if *lo < 0 || hi < lo {
                    return Err(DslError::Invalid(format!("geomsum bounds {lo}..{hi}")));
                }
                let q = self.eval(a, r)?;
                let mut term = q.pow(*lo)?;
                let mut acc = term.clone();
                for _ in *lo..*hi {
                    term = term.checked_mul(&q)?;
                    acc = acc + &term;
                }
                acc
            }
        })
    }

    /// `Some((c, m))` when `value` is `c·v·x^m` with some negative entry in `m`.
    fn rescaling(&self, v: &str, value: &Expr) -> Result<Option<(Rat, Vec<i64>)>> {
        let Some((c, mut m)) = self.monomial(value)? else { return Ok(None) };
        let i = self.index(v)?;
        if m[i] != 1 || m.iter().all(|&k| k >= 0) {
            return Ok(None);
        }
        m[i] = 0;
        Ok(Some((c, m)))
    }

    fn monomial(&self, e: &Expr) -> Result<Option<(Rat, Vec<i64>)>> {
        let n = self.vars.len();
        Ok(match e {
            Expr::Num(k) => Some((Rat::from_integer(k.clone().into()), vec![0; n])),
            Expr::Ident(name) => self.vars.index(name).map(|i| {
                let mut m = vec![0; n];
                m[i] = 1;
                (int(1), m)
            }),
            Expr::Neg(a) => self.monomial(a)?.map(|(c, m)| (-c, m)),
            Expr::Mul(a, b) | Expr::Div(a, b) => match (self.monomial(a)?, self.monomial(b)?) {
                (Some((ca, ma)), Some((cb, mb))) => {
                    let div = matches!(e, Expr::Div(..));
                    if div && cb == int(0) {
                        return Ok(None);
                    }
                    let m = ma.iter().zip(&mb).map(|(x, y)| if div { x - y } else { x + y }).collect();
                    Some((if div { ca / cb } else { ca * cb }, m))
                }
                _ => None,
            },
            Expr::Pow(a, k) => self.monomial(a)?.and_then(|(c, m)| {
                if c == int(0) && *k < 0 {
                    return None;
                }
                let c = if *k >= 0 { num_traits::pow(c, *k as usize) } else { num_traits::pow(c.recip(), (-k) as usize) };
                Some((c, m.iter().map(|x| x * k).collect()))
            }),
            _ => None,
        })
    }

    /// `a/b`; a monomial factor of `b` is cancelled against `a` first.
    fn divide(&mut self, a: &Expr, b: &Expr, r: &Truncation) -> Result<TruncatedSeries> {
        let den = self.eval(b, r)?;
        if den.constant_term() != int(0) || den.is_zero() {
            return Ok(self.eval(a, r)?.checked_div(&den)?);
        }
        let n = self.vars.len();
        let m: Vec<u32> = (0..n).map(|i| den.terms().map(|(e, _)| e[i]).min().unwrap()).collect();
        let neg: Vec<i64> = m.iter().map(|&k| -(k as i64)).collect();
        let wide = r.shifted(&neg);
        let den = self.eval(b, &wide)?.mul_monomial(&neg)?;
        let num = self.eval(a, &wide)?.mul_monomial(&neg)?;
        Ok(num.checked_div(&den)?.truncate(r))
    }
}

/// Evaluates on `region`, which must be over the program's variables.
pub fn evaluate(program: &Program, region: &Truncation, bindings: &Bindings) -> Result<Evaluation> {
    program.validate(bindings)?;
    let mut ev = Ev { vars: program.varset(), bindings, warnings: Vec::new() };
    if region.nvars() != ev.vars.len() {
        return Err(DslError::Invalid(format!("region has {} variables, program declares {}", region.nvars(), ev.vars.len())));
    }
    let series = ev.eval(&program.expr, region)?;
    Ok(Evaluation { series, warnings: ev.warnings })
}

/// Evaluates on the program's default region up to total degree `order`.
pub fn evaluate_order(program: &Program, order: u32, bindings: &Bindings) -> Result<Evaluation> {
    evaluate(program, &program.region(order), bindings)
}
