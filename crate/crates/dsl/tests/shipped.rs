use std::collections::BTreeMap;
use std::sync::OnceLock;

use polygf_census::{enumerate, CensusTable};
use polygf_dsl::*;
use polygf_series::{int, Rat, TruncatedSeries};

const N: u32 = 10;

fn census() -> &'static CensusTable {
    static T: OnceLock<CensusTable> = OnceLock::new();
    T.get_or_init(|| enumerate(N).unwrap())
}

fn run(name: &str) -> Evaluation {
    evaluate_order(&shipped_program(name).unwrap(), N, &Bindings::standard()).unwrap()
}

/// Coefficients of x^h y^v with every other variable at exponent zero.
fn cells(s: &TruncatedSeries) -> BTreeMap<(u32, u32), Rat> {
    s.terms()
        .filter(|(e, c)| e[2..].iter().all(|&k| k == 0) && e[0] + e[1] <= N && **c != int(0))
        .map(|(e, c)| ((e[0], e[1]), c.clone()))
        .collect()
}

fn as_rat(m: BTreeMap<(u32, u32), u64>) -> BTreeMap<(u32, u32), Rat> {
    m.into_iter().filter(|(_, c)| *c > 0).map(|(k, c)| (k, int(c as i64))).collect()
}

fn isotropic(m: &BTreeMap<(u32, u32), Rat>) -> Vec<Rat> {
    let mut out = vec![int(0); N as usize + 1];
    for ((h, v), c) in m {
        out[(h + v) as usize] += c;
    }
    out
}

#[test]
fn one_convex_top_arc_matches_census() {
    let ev = run("one_convex_top_arc");
    let got = cells(&ev.series);
    let want = as_rat(census().anisotropic(1, "arc_top"));
    assert_eq!(isotropic(&got), isotropic(&want));
    assert_eq!(got, want);
    let iso = isotropic(&got);
    assert_eq!(iso[6..].to_vec(), [1, 15, 147, 1159, 7983].map(int).to_vec());
}

#[test]
fn one_convex_program_is_a_counting_series() {
    let ev = run("one_convex_top_arc");
    assert!(ev.series.all_integer());
    assert!(ev.series.terms().all(|(_, c)| *c >= int(0)));
}

#[test]
fn display_is_short_by_y() {
    let plain = cells(&run("one_convex_top_arc_display").series);
    let want = as_rat(census().anisotropic(1, "arc_top"));
    let shifted: BTreeMap<(u32, u32), Rat> = plain.into_iter().filter(|((h, v), _)| h + v < N).map(|((h, v), c)| ((h, v + 1), c)).collect();
    assert_eq!(shifted, want);
}

#[test]
fn case2_matches_census() {
    let ev = run("case2_same_side");
    let got = cells(&ev.series);
    let want = as_rat(census().anisotropic(2, "same_side_top_left_vertical_diff"));
    assert!(!want.is_empty());
    assert_eq!(got, want);
    assert!(ev.series.all_integer());
}
