use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use polygf_series::{Truncation, VarSet};

use crate::ast::Expr;
use crate::error::{DslError, Result};
use crate::eval::Bindings;
use crate::parse::{error_at, ParseError, Parser};

/// A preamble (`vars:` line, optional `cap:` lines) and one expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub vars: Vec<String>,
    pub caps: BTreeMap<String, u32>,
    pub expr: Expr,
}

impl Program {
    pub fn parse(text: &str) -> std::result::Result<Program, ParseError> {
        let mut vars = None;
        let mut caps = BTreeMap::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap().trim();
            if body.is_empty() {
                offset += line.len();
                continue;
            }
            if let Some(rest) = body.strip_prefix("vars:") {
                if vars.is_some() {
                    return Err(error_at(text, offset, &[], "second `vars:` line".into()));
                }
                let names: Vec<String> = rest.split_whitespace().map(String::from).collect();
                if names.is_empty() || VarSet::new(&names).is_err() {
                    return Err(error_at(text, offset, &["distinct variable names"], "bad `vars:` line".into()));
                }
                vars = Some(names);
            } else if let Some(rest) = body.strip_prefix("cap:") {
                let f: Vec<&str> = rest.split_whitespace().collect();
                match (f.as_slice(), vars.is_some()) {
                    ([name, n], true) if n.parse::<u32>().is_ok() => {
                        caps.insert(name.to_string(), n.parse().unwrap());
                    }
                    _ => return Err(error_at(text, offset, &["`cap: <var> <n>` after `vars:`"], "bad `cap:` line".into())),
                }
            } else {
                break;
            }
            offset += line.len();
        }
        let Some(vars) = vars else {
            return Err(error_at(text, offset, &["`vars:`"], "missing preamble".into()));
        };
        for name in caps.keys() {
            if !vars.contains(name) {
                return Err(error_at(text, 0, &[], format!("cap for undeclared variable `{name}`")));
            }
        }
        let mut p = Parser::new(text, offset)?;
        let expr = p.expr()?;
        p.finish()?;
        Ok(Program { vars, caps, expr })
    }

    pub fn varset(&self) -> VarSet {
        VarSet::new(&self.vars).expect("checked at parse time")
    }

    /// Variables summed out by a restricted join.
    pub fn join_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.expr.walk(&mut |e| {
            if let Expr::Join(v, ..) = e {
                out.insert(v.clone());
            }
        });
        out
    }

    /// Region for results up to total degree `order`: join variables get
    /// `order + 2` terms unless a `cap:` line says otherwise.
    pub fn region(&self, order: u32) -> Truncation {
        let joins = self.join_vars();
        let caps: Vec<u32> =
            self.vars.iter().map(|v| self.caps.get(v).copied().unwrap_or(if joins.contains(v) { order + 2 } else { order })).collect();
        let weights = self.vars.iter().map(|v| u32::from(!joins.contains(v))).collect();
        Truncation::caps(&caps).with_bound(weights, order as i64)
    }

    /// Checks names, arities and that no variable is eliminated twice on one path.
    pub fn validate(&self, bindings: &Bindings) -> Result<()> {
        check(&self.expr, &self.vars, bindings, &mut Vec::new())
    }
}

fn declared(v: &str, vars: &[String]) -> Result<()> {
    if vars.iter().any(|x| x == v) {
        Ok(())
    } else {
        Err(DslError::Undeclared(v.to_string()))
    }
}

fn mentions(e: &Expr, v: &str) -> bool {
    let mut hit = false;
    e.walk(&mut |x| hit |= matches!(x, Expr::Ident(n) if n == v));
    hit
}

fn check(e: &Expr, vars: &[String], b: &Bindings, gone: &mut Vec<String>) -> Result<()> {
    match e {
        Expr::Num(_) => Ok(()),
        Expr::Ident(name) => {
            if vars.contains(name) {
                return Ok(());
            }
            let (g, args) = b.resolve(name)?;
            for a in &args {
                declared(a, vars)?;
            }
            debug_assert_eq!(g.vars.len(), args.len());
            Ok(())
        }
        Expr::Call(name, args) => {
            let g = b.get(name)?;
            if g.vars.len() != args.len() {
                return Err(DslError::Arity { name: name.clone(), want: g.vars.len(), got: args.len() });
            }
            args.iter().try_for_each(|a| declared(a, vars))
        }
        Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sqrt(a) | Expr::GeomSum(a, ..) => check(a, vars, b, gone),
        Expr::Diff(v, a) | Expr::E(v, a) => {
            declared(v, vars)?;
            check(a, vars, b, gone)
        }
        Expr::Add(l, r) | Expr::Sub(l, r) | Expr::Mul(l, r) | Expr::Div(l, r) => {
            check(l, vars, b, gone)?;
            check(r, vars, b, gone)
        }
        Expr::Hadamard(v, l, r) => {
            declared(v, vars)?;
            check(l, vars, b, gone)?;
            check(r, vars, b, gone)
        }
        Expr::Subst(v, l, r) if mentions(r, v) => {
            declared(v, vars)?;
            check(l, vars, b, gone)?;
            check(r, vars, b, gone)
        }
        Expr::Join(v, l, r) | Expr::Subst(v, l, r) => {
            declared(v, vars)?;
            if gone.contains(v) {
                return Err(DslError::DoubleElimination(v.clone()));
            }
            gone.push(v.clone());
            let res = check(l, vars, b, gone).and_then(|_| {
                if matches!(e, Expr::Join(..)) {
                    check(r, vars, b, gone)
                } else {
                    Ok(())
                }
            });
            gone.pop();
            res?;
            if let Expr::Subst(..) = e {
                check(r, vars, b, gone)?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vars: {}", self.vars.join(" "))?;
        for (v, c) in &self.caps {
            writeln!(f, "cap: {v} {c}")?;
        }
        writeln!(f, "{}", self.expr)
    }
}
