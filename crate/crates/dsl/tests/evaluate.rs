use polygf_dsl::*;
use polygf_gflib::staircase_s;
use polygf_series::{int, Rat, TruncatedSeries, Truncation};
use proptest::prelude::*;

fn run(src: &str, order: u32) -> Result<Evaluation> {
    evaluate_order(&Program::parse(src)?, order, &Bindings::standard())
}

fn terms(s: &TruncatedSeries) -> Vec<(Vec<u32>, Rat)> {
    s.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
}

#[test]
fn catalogue_pass_through() {
    let p = Program::parse("vars: x y\nS").unwrap();
    let r = Truncation::uniform(2, 6);
    let got = evaluate(&p, &r, &Bindings::standard()).unwrap().series;
    assert_eq!(got, staircase_s(&r).unwrap());
}

#[test]
fn half_perimeter_worked_example() {
    let got = run("vars: x x_star\nsubst_x_star{ E_x[ 1/(1 - x - x_star) ]; x }", 20).unwrap().series;
    // odd-indexed Fibonacci numbers
    let mut fib = vec![1i64, 1];
    while fib.len() < 45 {
        fib.push(fib[fib.len() - 1] + fib[fib.len() - 2]);
    }
    for n in 0..=20u32 {
        assert_eq!(got.coefficient(&[n, 0]).unwrap(), int(fib[2 * n as usize]), "n={n}");
    }
}

#[test]
fn starred_factor_leaves_e() {
    let a = run("vars: x y x_star\nsubst_x_star{ E_x[ y/(1-x) * x_star^2/(1-x_star) ]; x }", 12).unwrap().series;
    let b = run("vars: x y x_star\nx^2/(1-x) * E_x[ y/(1-x) ]", 12).unwrap().series;
    assert_eq!(terms(&a), terms(&b));
}

#[test]
fn monomial_denominator_cancels() {
    let a = run("vars: x y\n(x*y - x^2*y)/(x - x^2)", 8).unwrap().series;
    assert_eq!(terms(&a), vec![(vec![0, 1], int(1))]);
    assert!(run("vars: x y\n1/x", 8).is_err());
}

#[test]
fn rescaling_substitution() {
    // s^k x^a with a >= k becomes s^k x^(a-k)
    let a = run("vars: x s\nsubst_s{ 1/(1 - s*x); s/x }", 10).unwrap().series;
    let b = run("vars: x s\n1/(1 - s)", 10).unwrap().series;
    assert_eq!(terms(&a), terms(&b));
    assert!(run("vars: x s\nsubst_s{ s; s/x }", 6).is_err());
}

#[test]
fn join_counts_matching_lengths() {
    let got = run("vars: x s\nodot_s{ 1/(1 - s*x); 1/(1 - s) }", 10).unwrap().series;
    for n in 0..=10 {
        assert_eq!(got.coefficient(&[n, 0]).unwrap(), int(1));
    }
}

#[test]
fn validation_errors() {
    assert!(matches!(run("vars: x\nx + u", 4), Err(DslError::Undeclared(v)) if v == "y"));
    assert!(matches!(run("vars: x\nE_y[x]", 4), Err(DslError::Undeclared(v)) if v == "y"));
    assert!(matches!(run("vars: x\nx + y", 4), Err(DslError::Unbound(v)) if v == "y"));
    assert!(matches!(run("vars: x y\nfoo", 4), Err(DslError::Unbound(v)) if v == "foo"));
    assert!(matches!(run("vars: x y s t\nSbar(x, y, s)", 4), Err(DslError::Arity { want: 4, got: 3, .. })));
    assert!(matches!(run("vars: x s\nodot_s{ odot_s{ s; s }; s }", 4), Err(DslError::DoubleElimination(v)) if v == "s"));
    assert!(matches!(run("vars: x\n1 $", 4), Err(DslError::Parse(_))));
    assert!(matches!(run("vars: x\ngeomsum(x, 3, 1)", 4), Err(DslError::Invalid(_))));
}

#[test]
fn wrong_region_arity() {
    let p = Program::parse("vars: x y\nx").unwrap();
    assert!(evaluate(&p, &Truncation::uniform(3, 4), &Bindings::standard()).is_err());
}

#[test]
fn geometric_sum() {
    let got = run("vars: x\ngeomsum(x, 2, 4)", 6).unwrap().series;
    assert_eq!(terms(&got), vec![(vec![2], int(1)), (vec![3], int(1)), (vec![4], int(1))]);
}

const PIECES: &[&str] = &["x", "y", "1/(1-x-y)", "S", "Z", "u*v", "sqrt(1-4*x)", "E_x[1/(1-x)^2]", "diff_y(y^2/(1-x))", "odot_s{ s/(1-s*x); 1/(1-s*y) }"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compositional(i in 0..PIECES.len(), j in 0..PIECES.len(), op in 0..3usize) {
        let sym = ["+", "-", "*"][op];
        let order = 7;
        let whole = run(&format!("vars: x y s\n({}) {sym} ({})", PIECES[i], PIECES[j]), order).unwrap().series;
        let a = run(&format!("vars: x y s\n{}", PIECES[i]), order).unwrap().series;
        let b = run(&format!("vars: x y s\n{}", PIECES[j]), order).unwrap().series;
        let spliced = match op { 0 => a + b, 1 => a - b, _ => a.checked_mul(&b).unwrap() };
        prop_assert_eq!(terms(&whole), terms(&spliced));
    }
}
