use num_bigint::BigInt;
use polygf_conjecture::poly::poly;
use polygf_conjecture::*;
use polygf_gflib::{f2_b, f2_denominator, f2_forced_b_factor, f2_iso, F2_A};
use polygf_series::{int, ratio, Rat, TruncatedSeries};

fn big(c: &[i64]) -> Vec<BigInt> {
    poly(c)
}

fn ints(c: &[i64]) -> Vec<Rat> {
    c.iter().map(|&k| int(k)).collect()
}

#[test]
fn geometric_series() {
    let s = TruncatedSeries::univariate("x", 9, &ints(&[1; 10]));
    let ansatz = Ansatz::parse("1-x", 0, Some(0)).unwrap().with_forced_b(poly(&[0]));
    let f = fit(&s, &ansatz).unwrap();
    assert_eq!(f.a, big(&[1]));
    assert_eq!(f.b, big(&[0]));
    assert_eq!(f.scale, BigInt::from(1));
    assert!(f.is_unique());
    assert_eq!(f.pinned_at, Some(1));
}

#[test]
fn catalan_numbers() {
    let mut c = vec![1i64];
    for n in 1..20i64 {
        c.push(c[n as usize - 1] * 2 * (2 * n - 1) / (n + 1));
    }
    let f = fit_coeffs(&ints(&c), &Ansatz::parse("x", 0, Some(0)).unwrap()).unwrap();
    assert_eq!((f.a.clone(), f.b.clone(), f.scale.clone()), (big(&[1]), big(&[-1]), BigInt::from(2)));
    assert_eq!(f.denominator, big(&[0, 1]));
    assert_eq!(expand(&f, 19).unwrap(), ints(&c));
}

#[test]
fn square_root_alone() {
    let r: Vec<Rat> = sqrt_one_minus_4x(15).into_iter().map(Rat::from_integer).collect();
    let f = fit_coeffs(&r, &Ansatz::parse("1", 0, Some(0)).unwrap()).unwrap();
    assert_eq!((f.a, f.b), (big(&[0]), big(&[1])));
}

#[test]
fn sqrt_coefficients_are_catalan() {
    assert_eq!(sqrt_one_minus_4x(6), big(&[1, -2, -2, -4, -10, -28, -84]));
}

#[test]
fn underdetermined_reports_dimension_and_lowest_degree() {
    // 1/(1-x) with room for (1-x)·extra in both A and D
    let s = ints(&[1; 12]);
    let f = fit_coeffs(&s, &Ansatz::parse("1-x", 3, None).unwrap()).unwrap();
    assert_eq!(f.dimension, 0);
    let f = fit_coeffs(&s, &Ansatz::parse("1", 0, None).unwrap());
    assert!(matches!(f, Err(ConjectureError::Inconsistent { order: 1 })));
    let f = fit_coeffs(&ints(&[1, 1, 1]), &Ansatz::parse("1-x", 2, Some(2)).unwrap()).unwrap();
    assert_eq!(f.dimension, 3);
    assert_eq!(f.pinned_at, None);
    assert_eq!((f.a, f.b), (big(&[1]), big(&[0])));
    assert!(matches!(fit_coeffs(&[], &Ansatz::parse("1", 0, None).unwrap()), Err(ConjectureError::InsufficientData { .. })));
    assert!(matches!(fit_coeffs(&ints(&[0]), &Ansatz::parse("x", 0, None).unwrap()), Err(ConjectureError::InsufficientData { .. })));
}

#[test]
fn more_data_confirms_a_unique_fit() {
    let c = ints(&[1, 5, 21, 85, 341, 1365, 5461, 21845, 87381, 349525]);
    let ansatz = Ansatz::parse("(1-x)*(1-4x)", 1, None).unwrap();
    let first = fit_coeffs(&c[..4], &ansatz).unwrap();
    for n in 4..=c.len() {
        assert_eq!(fit_coeffs(&c[..n], &ansatz).unwrap().a, first.a);
    }
    assert_eq!(first.a, big(&[1]));
    let mut bad = c.clone();
    bad[7] = int(0);
    assert!(matches!(fit_coeffs(&bad, &ansatz), Err(ConjectureError::Inconsistent { order: 7 })));
}

#[test]
fn rational_coefficients() {
    let s: Vec<Rat> = (0..10).map(|k| ratio(1, 1 << k)).collect();
    let f = fit_coeffs(&s, &Ansatz::parse("1", 1, None).unwrap());
    assert!(f.is_err());
    // 1/(1 − x/2) = 2/(2 − x) is not over the basis; (1−2x) gives 2^n instead
    let s2: Vec<Rat> = (0..10).map(|k| int(1 << k)).collect();
    let f = fit_coeffs(&s2, &Ansatz::parse("(1-2x)", 0, None).unwrap()).unwrap();
    assert_eq!(f.a, big(&[1]));
}

#[test]
fn validation_finds_corruption() {
    let s = ints(&[1; 20]);
    let f = fit_coeffs(&s[..10], &Ansatz::parse("1-x", 0, None).unwrap()).unwrap();
    let extra: Vec<(usize, Rat)> = (10..20).map(|k| (k, int(1))).collect();
    assert_eq!(validate(&f, &extra).unwrap(), Validation { ok: true, first_mismatch: None, checked: 10 });
    let mut bad = extra.clone();
    bad[4].1 = int(2);
    let v = validate(&f, &bad).unwrap();
    assert!(!v.ok);
    assert_eq!(v.first_mismatch, Some(14));
}

#[test]
fn ansatz_strings() {
    let d = parse_denominator("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3").unwrap();
    assert_eq!(d, vec![(Factor::OneMinusX, 5), (Factor::Golden, 3), (Factor::OneMinus4X, 3)]);
    assert_eq!(format_denominator(&d), "(1-x)^5*(1-3x+x^2)^3*(1-4x)^3");
    assert_eq!(parse_denominator(" x^2 * (1 - 2x) ").unwrap(), vec![(Factor::X, 2), (Factor::OneMinus2X, 1)]);
    assert_eq!(parse_denominator("(1-x)*(1-x)").unwrap(), vec![(Factor::OneMinusX, 2)]);
    assert_eq!(parse_denominator("1").unwrap(), vec![]);
    assert!(parse_denominator("(1-5x)").is_err());
    assert!(parse_denominator("(1-x").is_err());
    assert!(parse_denominator("(1-x)^a").is_err());
    let a = Ansatz::parse("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3", 18, Some(17)).unwrap();
    assert_eq!(a.denominator_poly(), f2_denominator().iter().map(|&k| BigInt::from(k)).collect::<Vec<_>>());
}

#[test]
fn polynomial_text() {
    use polygf_conjecture::poly::{format_poly, parse_poly};
    assert_eq!(parse_poly("1-3x+x^2").unwrap(), big(&[1, -3, 1]));
    assert_eq!(parse_poly("2*x - 1").unwrap(), big(&[-1, 2]));
    assert_eq!(parse_poly("-x^3+x^3").unwrap(), big(&[0]));
    assert!(parse_poly("1 -- x").is_err());
    assert_eq!(format_poly(&big(&[-1, 2, 0, -1])), "-1 + 2*x - x^3");
}

#[test]
fn reads_coefficient_text() {
    let c = read_coefficients("# header\n0 1\n1 -2/3\n\n2 5 # trailing\n").unwrap();
    assert_eq!(c, vec![int(1), ratio(-2, 3), int(5)]);
    assert!(read_coefficients("0 1\n2 3\n").is_err());
    assert!(read_coefficients("0 1 2\n").is_err());
    let s = TruncatedSeries::univariate("x", 3, &ints(&[4, 3, 2, 1]));
    assert_eq!(read_coefficients(&s.to_json()).unwrap(), ints(&[4, 3, 2, 1]));
}

#[test]
fn two_deep_indent_replay() {
    let s = f2_iso(99).unwrap();
    let c = coefficients(&s).unwrap();
    let forced: Vec<BigInt> = f2_forced_b_factor().iter().map(|&k| BigInt::from(k)).collect();
    let ansatz = Ansatz::parse("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3", 18, Some(17)).unwrap().with_forced_b(forced);
    let f = fit_coeffs(&c[..60], &ansatz).unwrap();
    assert!(f.is_unique());
    assert_eq!(f.scale, BigInt::from(1));
    assert_eq!(f.a, big(&F2_A));
    assert_eq!(f.b, big(&f2_b()));
    let held: Vec<(usize, Rat)> = (60..100).map(|k| (k, c[k].clone())).collect();
    assert!(validate(&f, &held).unwrap().ok);
    let pinned = f.pinned_at.unwrap();
    assert!(pinned <= 60);
    println!("pinned by the first {pinned} coefficients");
    // the same data without forcing the factor still lands on it
    let free = Ansatz::parse("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3", 18, Some(17)).unwrap();
    let g = fit_coeffs(&c[..60], &free).unwrap();
    assert_eq!((g.a, g.b), (f.a, f.b));
}
