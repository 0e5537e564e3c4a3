//! The verification suites behind `polygf verify`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use polygf_census::CensusTable;
use polygf_conjecture::{coefficients, fit_coeffs, validate, Ansatz};
use polygf_dsl::{evaluate_order, shipped_program, Bindings, Program};
use polygf_gflib::{
    c1_iso, c2_aniso, c2_iso, c2_numerators, f2_b, f2_forced_b_factor, f2_iso, indent_gf, indent_gf_alt, staircase_s, uv_series, xy, F2_A,
};
use polygf_series::{int, laws, Rat, TruncatedSeries, Truncation, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), pass, detail: detail.into() }
    }

    fn from_result(name: &str, r: Result<(bool, String), String>) -> Self {
        match r {
            Ok((pass, detail)) => Check::new(name, pass, detail),
            Err(e) => Check::new(name, false, e),
        }
    }

    pub fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag} {}", self.name)
        } else {
            format!("{tag} {}: {}", self.name, self.detail)
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn same(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<(bool, String), String> {
    match a.first_difference(b).map_err(err)? {
        None => Ok((true, String::new())),
        Some(e) => Ok((false, format!("first difference at exponent {e:?}"))),
    }
}

/// `u`, `v` change of variables and the festoon and staircase identities.
pub fn uv_identities(cap: u32) -> Vec<Check> {
    let t = Truncation::uniform(2, cap);
    let run = || -> Result<Vec<Check>, String> {
        let vs = xy();
        let (u, v) = uv_series(&t).map_err(err)?;
        let (x, y) = (TruncatedSeries::var(&vs, &t, "x").map_err(err)?, TruncatedSeries::var(&vs, &t, "y").map_err(err)?);
        let one = TruncatedSeries::one(&vs, &t);
        let w = &(&one - &u) - &v;
        Ok(vec![
            Check::from_result("uv: x = u(1-v)", same(&x, &(&u * &(&one - &v)))),
            Check::from_result("uv: y = v(1-u)", same(&y, &(&v * &(&one - &u)))),
            Check::from_result("uv: delta = (1-u-v)^2", same(&polygf_gflib::delta(&t).map_err(err)?, &(&w * &w))),
            Check::from_result("uv: Z = 1/(1-u-v)", same(&polygf_gflib::festoon_z(&t).map_err(err)?, &w.inv().map_err(err)?)),
            Check::from_result("uv: S = uv", same(&staircase_s(&t).map_err(err)?, &(&u * &v))),
        ])
    };
    run().unwrap_or_else(|e| vec![Check::new("uv identities", false, e)])
}

/// `Iₘ = v² S^{2m−2} / y^{2m}`.
pub fn indent_identity(m: u32, cap: u32) -> Check {
    let t = Truncation::uniform(2, cap);
    let name = format!("indent: I{m} = v^2 S^{} / y^{}", 2 * m - 2, 2 * m);
    let r = (|| same(&indent_gf(m, &t).map_err(err)?, &indent_gf_alt(m, &t).map_err(err)?))();
    Check::from_result(&name, r)
}

fn st_poly(rng: &mut ChaCha8Rng, cap: u32) -> TruncatedSeries {
    let vs = VarSet::new(&["s", "t"]).unwrap();
    let tr = Truncation::uniform(2, cap);
    let w = cap + 1;
    let terms: Vec<_> = (0..w * w).map(|k| (vec![k % w, k / w], int(rng.gen_range(-4..=4)))).collect();
    TruncatedSeries::from_terms(&vs, &tr, terms).unwrap()
}

/// The three Hadamard laws on `instances` seeded random inputs each, with
/// polynomials of degree up to `cap` in each variable.
pub fn hadamard_laws(instances: usize, cap: u32, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dist = (0, None);
    let mut prod = (0, None);
    let mut pole = (0, None);
    for i in 0..instances {
        let (f, g, h) = (st_poly(&mut rng, cap), st_poly(&mut rng, cap), st_poly(&mut rng, cap));
        match laws::distributive(&f, &g, &h, "t") {
            Ok(true) => dist.0 += 1,
            other => dist.1 = dist.1.or(Some(format!("instance {i}: {other:?}"))),
        }
        match laws::product_rule(&f, &g, "s", "t") {
            Ok(true) => prod.0 += 1,
            other => prod.1 = prod.1.or(Some(format!("instance {i}: {other:?}"))),
        }
        let len = rng.gen_range(1..=cap as usize + 1);
        let coeffs: Vec<Rat> = (0..len).map(|_| int(rng.gen_range(-6..=6))).collect();
        let alpha = Rat::new(BigInt::from(rng.gen_range(-7..=7)), BigInt::from(rng.gen_range(1..=5)));
        let k = rng.gen_range(0..4);
        match laws::pole_law(&coeffs, &alpha, k) {
            Ok(true) => pole.0 += 1,
            other => pole.1 = pole.1.or(Some(format!("instance {i}: {other:?}"))),
        }
    }
    [("hadamard: distributive", dist), ("hadamard: product rule", prod), ("hadamard: poles", pole)]
        .into_iter()
        .map(|(name, (ok, fail))| Check::new(name, fail.is_none(), fail.unwrap_or_else(|| format!("{ok}/{instances} instances"))))
        .collect()
}

/// `E_x[1/(1−x−x*)] = (1−x)/(1−3x+x²)` through order `n`.
pub fn half_perimeter_example(n: u32) -> Check {
    let name = "E_x[1/(1-x-x*)] = (1-x)/(1-3x+x^2)";
    let r = (|| {
        let p = Program::parse("vars: x x_star\nsubst_x_star{ E_x[ 1/(1 - x - x_star) ]; x }").map_err(err)?;
        let got = evaluate_order(&p, n, &Bindings::standard()).map_err(err)?.series;
        let want = TruncatedSeries::univariate("x", n, &[int(1), int(-1)])
            .checked_div(&TruncatedSeries::univariate("x", n, &[int(1), int(-3), int(1)]))
            .map_err(err)?;
        for k in 0..=n {
            if got.coefficient(&[k, 0]).map_err(err)? != want.coeff1(k).map_err(err)? {
                return Ok((false, format!("differs at x^{k}")));
            }
        }
        Ok((true, format!("exact through x^{n}")))
    })();
    Check::from_result(name, r)
}

pub fn identities(cap: u32) -> Vec<Check> {
    let mut out = uv_identities(cap);
    out.push(indent_identity(2, cap));
    out.extend(hadamard_laws(100, cap, 2024));
    out.push(half_perimeter_example(2 * cap));
    out
}

fn compare_iso(name: &str, table: &CensusTable, n: u32, m: u32, tag: &str, series: Result<TruncatedSeries, String>) -> Check {
    let r = (|| {
        let s = series?;
        for k in 0..=n {
            let want = int(table.isotropic(k, Some(m), tag) as i64);
            let got = s.coeff1(k).map_err(err)?;
            if got != want {
                return Ok((false, format!("n={k}: census {want}, closed form {got}")));
            }
        }
        Ok((true, format!("n <= {n}")))
    })();
    Check::from_result(name, r)
}

/// Census counts against the closed forms, through half-perimeter `n`.
pub fn census_vs_closed(table: &CensusTable, n: u32) -> Vec<Check> {
    let mut out = vec![
        compare_iso("census m=1 = 1-convex closed form", table, n, 1, "all", c1_iso(n).map_err(err)),
        compare_iso("census m=2 = 2-convex closed form", table, n, 2, "all", c2_iso(n).map_err(err)),
        compare_iso("census F2 = two-deep indent closed form", table, n, 2, "F2_top", f2_iso(n).map_err(err)),
    ];
    out.push(partition(table, n));
    out.push(match c2_numerators() {
        Ok(_) => Check::new("data files: checksum", true, ""),
        Err(e) => Check::new("data files: checksum", false, e.to_string()),
    });
    out.extend(anisotropic(table, n));
    let k = n.min(10);
    out.push(program_vs_census("program one_convex_top_arc = census", "one_convex_top_arc", table, k, 1, "arc_top"));
    out.push(program_vs_census("program case2_same_side = census", "case2_same_side", table, k, 2, "same_side_top_left_vertical_diff"));
    out
}

pub fn partition(table: &CensusTable, n: u32) -> Check {
    let r = (|| {
        for k in 0..=n {
            let g = |tag: &str| table.isotropic(k, Some(2), tag);
            let rhs = 4 * g("F2_top") + 4 * g("FS_top") + 2 * g("FO_vertical") + g("FR");
            if g("all") != rhs {
                return Ok((false, format!("n={k}: C2 {} vs {rhs}", g("all"))));
            }
            let turns = ["top", "right", "bottom", "left"];
            if turns.iter().any(|a| g(&format!("F2_{a}")) != g("F2_top") || g(&format!("FS_{a}")) != g("FS_top")) || g("FO_horizontal") != g("FO_vertical") {
                return Ok((false, format!("n={k}: orientations disagree")));
            }
        }
        Ok((true, format!("n <= {n}")))
    })();
    Check::from_result("partition C2 = 4F2 + 4FS + 2FO + FR", r)
}

/// Census cells at m=2 against the anisotropic form, and its isotropic
/// specialisation against the 2-convex closed form to order 40.
pub fn anisotropic(table: &CensusTable, n: u32) -> Vec<Check> {
    let cells = (|| {
        let (a, b) = c2_numerators().map_err(err)?;
        let s = c2_aniso(&Truncation::total(2, n), &a, &b).map_err(err)?;
        let census = table.anisotropic(2, "all");
        let mut bad = Vec::new();
        for h in 0..=n {
            for v in 0..=n - h {
                let want = int(*census.get(&(h, v)).unwrap_or(&0) as i64);
                let got = s.coefficient(&[h, v]).map_err(err)?;
                if got != want {
                    bad.push(format!("({h},{v}) census {want} vs {got}"));
                }
            }
        }
        Ok(if bad.is_empty() {
            (true, format!("h+v <= {n}"))
        } else {
            (false, format!("{} cells differ, first {}", bad.len(), bad[0]))
        })
    })();
    let iso = (|| {
        let (a, b) = c2_numerators().map_err(err)?;
        let s = c2_aniso(&Truncation::total(2, 40), &a, &b).map_err(err)?.isotropic("x").map_err(err)?;
        let c = c2_iso(40).map_err(err)?;
        for k in 0..=40 {
            if s.coeff1(k).map_err(err)? != c.coeff1(k).map_err(err)? {
                return Ok((false, format!("differs at x^{k}")));
            }
        }
        Ok((true, "through x^40".to_string()))
    })();
    vec![Check::from_result("anisotropic cells = census", cells), Check::from_result("anisotropic at y=x = 2-convex closed form", iso)]
}

pub fn program_vs_census(name: &str, program: &str, table: &CensusTable, n: u32, m: u32, tag: &str) -> Check {
    let r = (|| {
        let p = shipped_program(program).map_err(err)?;
        let ev = evaluate_order(&p, n, &Bindings::standard()).map_err(err)?;
        let mut got: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for (e, c) in ev.series.terms() {
            if e[2..].iter().all(|&k| k == 0) && e[0] + e[1] <= n {
                got.insert((e[0], e[1]), c.clone());
            }
        }
        let want: BTreeMap<(u32, u32), Rat> =
            table.anisotropic(m, tag).into_iter().filter(|((h, v), c)| *c > 0 && h + v <= n).map(|(k, c)| (k, int(c as i64))).collect();
        if got == want {
            return Ok((true, format!("{} cells, h+v <= {n}", want.len())));
        }
        let first = got.keys().chain(want.keys()).find(|k| got.get(k) != want.get(k)).unwrap();
        Ok((false, format!("cell {first:?}: program {:?}, census {:?}", got.get(first), want.get(first))))
    })();
    Check::from_result(name, r)
}

fn nonzero_through(s: &TruncatedSeries, n: u32) -> Result<usize, String> {
    let mut k = 0;
    for i in 0..=n {
        if s.coeff1(i).map_err(err)? != int(0) {
            k += 1;
        }
    }
    Ok(k)
}

pub fn nonzero_count(name: &str, s: Result<TruncatedSeries, String>, n: u32, want: usize) -> Check {
    let r = s.and_then(|s| nonzero_through(&s, n)).map(|k| (k == want, format!("{k} nonzero through x^{n}, expected {want}")));
    Check::from_result(name, r)
}

/// Fits the leading `train` coefficients of the two-deep indent series and
/// validates on the next `held` ones.
pub fn two_deep_fit(train: usize, held: usize) -> Vec<Check> {
    let r = (|| -> Result<_, String> {
        let c = coefficients(&f2_iso((train + held) as u32 - 1).map_err(err)?).map_err(err)?;
        let forced: Vec<BigInt> = f2_forced_b_factor().into_iter().map(BigInt::from).collect();
        let ansatz = Ansatz::parse("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3", 18, Some(17)).map_err(err)?.with_forced_b(forced);
        let f = fit_coeffs(&c[..train], &ansatz).map_err(err)?;
        let a: Vec<BigInt> = F2_A.iter().map(|&k| BigInt::from(k)).collect();
        let b: Vec<BigInt> = f2_b().into_iter().map(BigInt::from).collect();
        let exact = f.is_unique() && f.scale == BigInt::from(1) && f.a == a && f.b == b;
        let extra: Vec<(usize, Rat)> = (train..train + held).map(|k| (k, c[k].clone())).collect();
        let v = validate(&f, &extra).map_err(err)?;
        Ok((exact, f.pinned_at, v))
    })();
    match r {
        Ok((exact, pinned, v)) => vec![
            Check::new("fit: two-deep indent numerators recovered", exact, match pinned {
                Some(k) => format!("pinned by the first {k} coefficients"),
                None => "not pinned".to_string(),
            }),
            Check::new("fit: held-out validation", v.ok, match v.first_mismatch {
                Some(k) => format!("{} coefficients, first mismatch at x^{k}", v.checked),
                None => format!("{} coefficients agree", v.checked),
            }),
        ],
        Err(e) => vec![Check::new("fit: two-deep indent numerators recovered", false, e)],
    }
}

pub fn paper_constants() -> Vec<Check> {
    let mut out = vec![
        nonzero_count("2-convex: 48 nonzero terms through n=55", c2_iso(55).map_err(err), 55, 48),
        nonzero_count("two-deep indent: 100 nonzero terms through n=108", f2_iso(108).map_err(err), 108, 100),
    ];
    out.extend(two_deep_fit(60, 40));
    out.push(indent_identity(2, 16));
    out.push(indent_identity(3, 16));
    out
}
