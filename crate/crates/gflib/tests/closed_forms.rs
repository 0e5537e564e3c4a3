use std::sync::OnceLock;

use polygf_census::{enumerate, CensusTable};
use polygf_gflib::*;
use polygf_series::*;

const N: u32 = 10;

fn table() -> &'static CensusTable {
    static T: OnceLock<CensusTable> = OnceLock::new();
    T.get_or_init(|| enumerate(N).unwrap())
}

fn coeffs(s: &TruncatedSeries, n: u32) -> Vec<Rat> {
    (0..=n).map(|k| s.coeff1(k).unwrap()).collect()
}

fn ints(v: &[u64]) -> Vec<Rat> {
    v.iter().map(|&c| int(c as i64)).collect()
}

fn nonzero(s: &TruncatedSeries, n: u32) -> usize {
    (0..=n).filter(|&k| s.coeff1(k).unwrap() != int(0)).count()
}


#[test]
fn one_convex_against_census() {
    let t = table();
    assert_eq!(coeffs(&c1_iso(N).unwrap(), N), ints(&t.isotropic_series(Some(1), "all")));
    assert_eq!(coeffs(&c1_top_arc(N).unwrap(), N), ints(&t.isotropic_series(Some(1), "arc_top")));
    assert_eq!(coeffs(&c1_top_arc(10).unwrap(), 10)[6..], [1, 15, 147, 1159, 7983].map(int));
}

#[test]
fn two_convex_against_census() {
    let t = table();
    assert_eq!(coeffs(&c2_iso(N).unwrap(), N), ints(&t.isotropic_series(Some(2), "all")));
    assert_eq!(coeffs(&f2_iso(N).unwrap(), N), ints(&t.isotropic_series(Some(2), "F2_top")));
    let printed = c2_iso_printed(N).unwrap();
    assert_eq!(printed.coeff1(2).unwrap(), int(-48));
}

#[test]
fn numerator_shapes() {
    assert_eq!(&F2_A[..3], &[0, 0, -8]);
    assert_eq!(F2_A.len() - 1, 18);
    assert_eq!(f2_b().len() - 1, 17);
    assert_eq!(f2_b(), poly_mul(&poly_mul(&poly_pow(&[1, -1], 2), &poly_pow(&[1, -3, 1], 2)), &F2_B_COFACTOR));
    assert_eq!(&C2_A[..3], &[0, 0, -24]);
    assert_eq!(&C2_B[..3], &[0, 0, -24]);
}

#[test]
fn nonzero_counts() {
    let c2 = c2_iso(55).unwrap();
    assert_eq!((0..=55).find(|&k| c2.coeff1(k).unwrap() != int(0)), Some(8));
    assert_eq!(nonzero(&c2, 55), 48);
    assert!(c2.all_integer());
    // the first nonzero term is at 8, so every order 8..=108 is occupied
    let f2 = f2_iso(108).unwrap();
    assert_eq!(nonzero(&f2, 108), 101);
    assert_eq!(nonzero(&f2, 107), 100);
}

#[test]
fn anisotropic_specialises_to_isotropic() {
    let (a, b) = c2_numerators().unwrap();
    let aniso = c2_aniso(&Truncation::total(2, 40), &a, &b).unwrap();
    assert!(aniso.all_integer());
    assert_eq!(aniso.isotropic("x").unwrap(), c2_iso(40).unwrap());
}

#[test]
fn anisotropic_cells_disagree_with_census() {
    let (a, b) = c2_numerators().unwrap();
    let aniso = c2_aniso(&Truncation::total(2, N), &a, &b).unwrap();
    let census = table().anisotropic(2, "all");
    let row = |k: u32| -> (Vec<Rat>, Vec<Rat>) {
        let f = (1..k).map(|h| aniso.coefficient(&[h, k - h]).unwrap()).collect();
        let c = (1..k).map(|h| int(census.get(&(h, k - h)).copied().unwrap_or(0) as i64)).collect();
        (f, c)
    };
    let (f8, c8) = row(8);
    assert_eq!(f8, [0, 0, 0, 6, 0, 0, 0].map(int));
    assert_eq!(c8, [0, 0, 3, 0, 3, 0, 0].map(int));
    let (f9, c9) = row(9);
    assert_eq!(f9, [0, 0, 4, 104, 104, 4, 0, 0].map(int));
    assert_eq!(c9, [0, 0, 21, 87, 87, 21, 0, 0].map(int));
    // row sums still agree
    for k in 8..=N {
        let (f, c) = row(k);
        assert_eq!(f.iter().sum::<Rat>(), c.iter().sum::<Rat>(), "k={k}");
    }
}

#[test]
fn ansatz_helper() {
    // a denominator without constant term is not invertible
    let s = ansatz_series(&[1], &[-1], &[0, 2], 8);
    assert!(s.is_err());
    let s = ansatz_series(&[0, 1], &[], &[1, -1], 6).unwrap();
    assert_eq!(coeffs(&s, 6), [0, 1, 1, 1, 1, 1, 1].map(int));
}
