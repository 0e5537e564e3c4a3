use std::io::Write;

use num_bigint::BigInt;
use polygf_census::{enumerate_with, CensusConfig, CensusError, CensusTable, Row};
use polygf_conjecture::{
    coefficients, fit_coeffs, parse_denominator, poly, read_coefficients, search_denominator, validate, Ansatz, Candidate, ConjectureError, Factor,
    FitResult, Validation,
};
use polygf_dsl::{evaluate_order, shipped_program, shipped_programs, Bindings, Program};
use polygf_gflib::{catalogue, lookup};
use polygf_series::{format_rat, Rat, TruncatedSeries, Truncation};
use serde_json::{json, Value};

use crate::checks::{self, Check};
use crate::{Budget, Cli, Command, Failure, FitArgs, Format, OutputArgs, Suite};

type Outcome = Result<(), Failure>;

pub(crate) fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Census { max_half, classify, limit, snapshot, out: o } => census(cli.threads, *max_half, *classify, *limit, snapshot.clone(), o, out, err),
        Command::Expand { name, order, out: o } => expand(name, *order, o, out),
        Command::Eval { program, expr_file, expr, order, isotropic, out: o } => {
            eval(program.as_deref(), expr_file.as_deref(), expr.as_deref(), *order, *isotropic, o, out, err)
        }
        Command::Fit(args) => fit(cli.threads, args, out),
        Command::Verify { suite, budget } => verify(cli.threads, *suite, *budget, out),
    }
}

fn emit(o: &OutputArgs, text: &str, out: &mut dyn Write) -> Outcome {
    match &o.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::resource(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::resource(e.to_string())),
    }
}

fn csv_text(header: &[String], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn series_text(s: &TruncatedSeries, f: Format) -> String {
    match f {
        Format::Json => s.to_json() + "\n",
        Format::Csv => {
            let mut header: Vec<String> = s.vars().names().to_vec();
            header.push("coefficient".into());
            let rows = s.terms().map(|(e, c)| e.iter().map(|k| k.to_string()).chain([format_rat(c)]).collect()).collect();
            csv_text(&header, rows)
        }
    }
}

fn census_failure(e: CensusError) -> Failure {
    match e {
        CensusError::CapTooSmall(_) => Failure::usage(e.to_string()),
        _ => Failure::resource(e.to_string()),
    }
}

pub(crate) fn run_census(threads: Option<usize>, max_half: u32, limit: Option<u32>) -> Result<CensusTable, Failure> {
    let mut cfg = CensusConfig::new(max_half);
    cfg.threads = threads;
    if let Some(l) = limit {
        cfg.limit = l;
    }
    enumerate_with(&cfg).map_err(census_failure)
}

#[allow(clippy::too_many_arguments)]
fn census(
    threads: Option<usize>,
    max_half: u32,
    classify: bool,
    limit: Option<u32>,
    snapshot: Option<std::path::PathBuf>,
    o: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let mut cfg = CensusConfig::new(max_half);
    cfg.threads = threads;
    cfg.snapshot = snapshot;
    if let Some(l) = limit {
        cfg.limit = l;
    }
    let full = enumerate_with(&cfg).map_err(census_failure)?;
    let _ = writeln!(err, "census to half-perimeter {max_half}: {} ms", full.runtime_ms);
    let mut table = CensusTable::new(max_half);
    let rows: std::collections::BTreeMap<Row, u64> = full.rows().filter(|(r, _)| classify || r.subclass == "all").map(|(r, c)| (r.clone(), c)).collect();
    table.add_rows(&rows);
    let text = match o.format {
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv(),
    };
    emit(o, &text, out)
}

fn expand(name: &str, order: u32, o: &OutputArgs, out: &mut dyn Write) -> Outcome {
    let g = lookup(name).map_err(|_| {
        let names: Vec<&str> = catalogue().iter().map(|g| g.name).collect();
        Failure::usage(format!("unknown name `{name}`; valid names: {}", names.join(", ")))
    })?;
    let s = g.expand(&Truncation::total(g.vars.len(), order)).map_err(|e| Failure::resource(e.to_string()))?;
    emit(o, &series_text(&s, o.format), out)
}

/// Sums the x and y exponents of the terms free of every other variable.
fn isotropic(s: &TruncatedSeries, order: u32) -> Result<TruncatedSeries, Failure> {
    let names = s.vars().names();
    if names.len() < 2 || names[0] != "x" || names[1] != "y" {
        return Err(Failure::usage("--isotropic needs a program whose first variables are x and y"));
    }
    let mut c = vec![Rat::default(); order as usize + 1];
    for (e, v) in s.terms() {
        let n = e[0] + e[1];
        if e[2..].iter().all(|&k| k == 0) && n <= order {
            c[n as usize] += v;
        }
    }
    Ok(TruncatedSeries::univariate("x", order, &c))
}

#[allow(clippy::too_many_arguments)]
fn eval(
    program: Option<&str>,
    expr_file: Option<&std::path::Path>,
    expr: Option<&str>,
    order: u32,
    iso: bool,
    o: &OutputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let p = match (program, expr_file, expr) {
        (Some(name), None, None) => shipped_program(name).map_err(|_| {
            let names: Vec<&str> = shipped_programs().iter().map(|(n, _)| *n).collect();
            Failure::usage(format!("unknown program `{name}`; bundled programs: {}", names.join(", ")))
        })?,
        (None, Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Program::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
        }
        (None, None, Some(text)) => Program::parse(text).map_err(|e| Failure::usage(e.to_string()))?,
        _ => return Err(Failure::usage("give exactly one of --program, --expr-file, --expr")),
    };
    let ev = evaluate_order(&p, order, &Bindings::standard()).map_err(|e| Failure::usage(e.to_string()))?;
    for w in &ev.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    let s = if iso { isotropic(&ev.series, order)? } else { ev.series };
    emit(o, &series_text(&s, o.format), out)
}

fn fit_failure(e: ConjectureError) -> Failure {
    match e {
        ConjectureError::Inconsistent { .. } => Failure::verify(e.to_string()),
        _ => Failure::usage(e.to_string()),
    }
}

fn strings(p: &[BigInt]) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

fn fit_json(f: &FitResult, v: Option<&Validation>) -> Value {
    json!({
        "denominator": f.ansatz.denominator_string(),
        "deg_a": f.ansatz.deg_a,
        "deg_b": f.ansatz.deg_b,
        "a": strings(&f.a),
        "b": strings(&f.b),
        "scale": f.scale.to_string(),
        "dimension": f.dimension,
        "pinned_at": f.pinned_at,
        "used": f.used,
        "validation": v.map(|v| json!({"ok": v.ok, "checked": v.checked, "first_mismatch": v.first_mismatch})),
    })
}

fn fit_csv(f: &FitResult) -> Vec<Vec<String>> {
    let part = |tag: &str, p: &[BigInt]| -> Vec<Vec<String>> { p.iter().enumerate().map(|(k, c)| vec![tag.to_string(), k.to_string(), c.to_string()]).collect() };
    let mut rows = part("a", &f.a);
    rows.extend(part("b", &f.b));
    rows.push(vec!["scale".into(), "0".into(), f.scale.to_string()]);
    rows
}

fn fit(threads: Option<usize>, args: &FitArgs, out: &mut dyn Write) -> Outcome {
    let coeffs: Vec<Rat> = match (&args.series, &args.name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            read_coefficients(&text).map_err(fit_failure)?
        }
        (None, Some(name)) => {
            let g = lookup(name).map_err(|e| Failure::usage(e.to_string()))?;
            if g.vars.len() != 1 {
                return Err(Failure::usage(format!("`{name}` is not univariate")));
            }
            let s = g.expand(&Truncation::caps(&[args.order])).map_err(|e| Failure::resource(e.to_string()))?;
            coefficients(&s).map_err(fit_failure)?
        }
        _ => return Err(Failure::usage("give exactly one of --series, --name")),
    };
    if args.search {
        if args.max_exp.len() != Factor::BASIS.len() {
            return Err(Failure::usage(format!("--max-exp takes {} values", Factor::BASIS.len())));
        }
        let mut pool = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            pool = pool.num_threads(n);
        }
        let pool = pool.build().map_err(|e| Failure::resource(e.to_string()))?;
        let budget = (args.deg_a, args.deg_b.unwrap_or(args.deg_a));
        let found = pool.install(|| search_denominator(&coeffs, &Factor::BASIS, &args.max_exp, budget)).map_err(fit_failure)?;
        let text = match args.out.format {
            Format::Json => {
                let list: Vec<Value> = found.iter().map(|c: &Candidate| json!({"total_degree": c.total_degree, "fit": fit_json(&c.fit, None)})).collect();
                serde_json::to_string_pretty(&list).expect("json") + "\n"
            }
            Format::Csv => csv_text(
                &["rank".into(), "total_degree".into(), "denominator".into()],
                found.iter().enumerate().map(|(i, c)| vec![(i + 1).to_string(), c.total_degree.to_string(), c.denominator()]).collect(),
            ),
        };
        emit(&args.out, &text, out)?;
        if found.is_empty() {
            return Err(Failure::verify("no denominator within the search budget fits and validates"));
        }
        return Ok(());
    }
    let den = parse_denominator(args.ansatz.as_deref().unwrap_or("1")).map_err(fit_failure)?;
    let mut ansatz = Ansatz::new(den, args.deg_a, args.deg_b);
    if let Some(f) = &args.forced_b {
        let forced = match poly::parse_poly(f) {
            Ok(p) => p,
            Err(_) => Ansatz::new(parse_denominator(f).map_err(fit_failure)?, 0, None).denominator_poly(),
        };
        ansatz = ansatz.with_forced_b(forced);
    }
    let held = args.holdout.unwrap_or(coeffs.len() / 4).min(coeffs.len());
    let keep = coeffs.len() - held;
    let f = fit_coeffs(&coeffs[..keep], &ansatz).map_err(fit_failure)?;
    let extra: Vec<(usize, Rat)> = (keep..coeffs.len()).map(|k| (k, coeffs[k].clone())).collect();
    let v = validate(&f, &extra).map_err(fit_failure)?;
    let text = match args.out.format {
        Format::Json => serde_json::to_string_pretty(&fit_json(&f, Some(&v))).expect("json") + "\n",
        Format::Csv => csv_text(&["part".into(), "degree".into(), "coefficient".into()], fit_csv(&f)),
    };
    emit(&args.out, &text, out)?;
    if !v.ok {
        return Err(Failure::verify(format!("held-out coefficient at order {} does not match", v.first_mismatch.unwrap_or_default())));
    }
    Ok(())
}

fn verify(threads: Option<usize>, suite: Suite, budget: Budget, out: &mut dyn Write) -> Outcome {
    let results: Vec<Check> = match suite {
        Suite::Identities => checks::identities(if budget == Budget::Full { 16 } else { 10 }),
        Suite::CensusVsClosed => {
            let n = if budget == Budget::Full { 12 } else { 10 };
            let table = run_census(threads, n, None)?;
            checks::census_vs_closed(&table, n)
        }
        Suite::PaperConstants => checks::paper_constants(),
    };
    for c in &results {
        writeln!(out, "{}", c.line()).map_err(|e| Failure::resource(e.to_string()))?;
    }
    let passed = results.iter().filter(|c| c.pass).count();
    writeln!(out, "{passed}/{} checks passed", results.len()).map_err(|e| Failure::resource(e.to_string()))?;
    match results.iter().find(|c| !c.pass) {
        Some(c) => Err(Failure::verify(format!("first failing check: {}", c.name))),
        None => Ok(()),
    }
}
