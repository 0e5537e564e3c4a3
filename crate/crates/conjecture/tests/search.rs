use std::sync::OnceLock;

use num_bigint::BigInt;
use polygf_census::{enumerate, CensusTable};
use polygf_conjecture::poly::poly;
use polygf_conjecture::*;
use polygf_gflib::{c2_iso, f2_forced_b_factor, f2_iso};
use polygf_series::{int, Rat};
use proptest::prelude::*;

fn census() -> &'static CensusTable {
    static T: OnceLock<CensusTable> = OnceLock::new();
    T.get_or_init(|| enumerate(11).unwrap())
}

const SMALL: [u32; 5] = [1, 2, 1, 1, 2];

#[test]
fn rational_series_denominator() {
    // (1+x)/((1−x)(1−4x))
    let mut c = vec![int(1), int(6)];
    for n in 2..24 {
        let next = int(5) * &c[n - 1] - int(4) * &c[n - 2];
        c.push(next);
    }
    let found = search_denominator(&c, &Factor::BASIS, &SMALL, (3, 3)).unwrap();
    let best = &found[0];
    assert_eq!(best.denominator(), "(1-x)*(1-4x)");
    assert_eq!(best.fit.a, poly(&[1, 1]));
    assert_eq!(best.fit.b, poly(&[0]));
    // every success is a multiple of the best denominator
    for cand in &found {
        for f in Factor::BASIS {
            assert!(cand.fit.ansatz.exponent(f) >= best.fit.ansatz.exponent(f));
        }
    }
}

#[test]
fn pure_square_root() {
    let c: Vec<Rat> = sqrt_one_minus_4x(23).into_iter().map(Rat::from_integer).collect();
    let found = search_denominator(&c, &Factor::BASIS, &SMALL, (2, 2)).unwrap();
    assert_eq!(found[0].denominator(), "1");
    assert_eq!((found[0].fit.a.clone(), found[0].fit.b.clone()), (poly(&[0]), poly(&[1])));
    assert_eq!(found[0].total_degree, 0);
}

#[test]
fn exhausted_budget_is_empty() {
    // 1/(1−5x) is outside the basis
    let c: Vec<Rat> = (0..20u32).map(|k| Rat::from_integer(BigInt::from(5).pow(k))).collect();
    assert!(search_denominator(&c, &Factor::BASIS, &SMALL, (2, 2)).unwrap().is_empty());
    assert!(search_denominator(&c, &Factor::BASIS, &[1, 1], (2, 2)).is_err());
}

#[test]
fn two_convex_denominator_has_the_extra_factor() {
    let c = coefficients(&c2_iso(79).unwrap()).unwrap();
    let t = std::time::Instant::now();
    let found = search_denominator(&c, &[Factor::OneMinusX, Factor::OneMinus2X, Factor::Golden, Factor::OneMinus4X], &[7, 1, 3, 4], (24, 23)).unwrap();
    println!("{} candidates in {:?}", found.len(), t.elapsed());
    let best = &found[0];
    println!("{} total {}", best.denominator(), best.total_degree);
    assert_eq!(best.fit.ansatz.exponent(Factor::OneMinus2X), 1);
}

#[test]
fn two_deep_fit_agrees_with_census() {
    let c = coefficients(&f2_iso(59).unwrap()).unwrap();
    let forced: Vec<BigInt> = f2_forced_b_factor().iter().map(|&k| BigInt::from(k)).collect();
    let ansatz = Ansatz::parse("(1-x)^5*(1-3x+x^2)^3*(1-4x)^3", 18, Some(17)).unwrap().with_forced_b(forced);
    let f = fit_coeffs(&c, &ansatz).unwrap();
    let counts = census().isotropic_series(Some(2), "F2_top");
    let extra: Vec<(usize, Rat)> = counts.iter().enumerate().map(|(n, &k)| (n, int(k as i64))).collect();
    assert!(validate(&f, &extra).unwrap().ok);
    let mut bad = extra.clone();
    bad[10].1 += int(1);
    assert_eq!(validate(&f, &bad).unwrap().first_mismatch, Some(10));
}

fn arb_fit_input() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<u32>)> {
    (prop::collection::vec(-9i64..=9, 1..4), prop::collection::vec(-9i64..=9, 1..3), prop::collection::vec(0u32..=2, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn sound_and_monotone((a, b, e) in arb_fit_input()) {
        let den: Vec<(Factor, u32)> = Factor::BASIS.into_iter().zip(e).filter(|(_, k)| *k > 0).collect();
        // a series of the ansatz shape, with the x-part of D absorbed by A
        let ansatz = Ansatz::new(den, 6, Some(4));
        let dpoly = ansatz.denominator_poly();
        let low = dpoly.iter().position(|c| c != &BigInt::from(0)).unwrap();
        let shift = |p: &[i64]| [vec![0; low], p.to_vec()].concat();
        let truth = FitResult {
            ansatz: ansatz.clone(),
            a: poly(&shift(&a)),
            b: poly(&shift(&b)),
            scale: BigInt::from(1),
            denominator: dpoly,
            dimension: 0,
            pinned_at: None,
            used: 0,
            residual: None,
        };
        let c = expand(&truth, 30).unwrap();
        let mut prev: Option<FitResult> = None;
        for n in [14usize, 20, 31] {
            let f = fit_coeffs(&c[..n], &ansatz).unwrap();
            prop_assert_eq!(f.residual, None);
            prop_assert_eq!(&expand(&f, n - 1).unwrap()[..], &c[..n]);
            if let Some(p) = &prev {
                if p.is_unique() {
                    prop_assert_eq!((&p.a, &p.b, &p.scale), (&f.a, &f.b, &f.scale));
                }
            }
            prev = Some(f);
        }
        let f = prev.unwrap();
        prop_assert!(f.is_unique());
        prop_assert_eq!(expand(&f, 30).unwrap(), c);
    }
}
