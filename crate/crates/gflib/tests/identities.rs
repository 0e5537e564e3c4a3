use polygf_gflib::*;
use polygf_series::*;

const CAP: u32 = 16;

fn t() -> Truncation {
    Truncation::uniform(2, CAP)
}

fn var(name: &str) -> TruncatedSeries {
    TruncatedSeries::var(&xy(), &t(), name).unwrap()
}

fn one() -> TruncatedSeries {
    TruncatedSeries::one(&xy(), &t())
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[test]
fn delta_is_the_printed_polynomial() {
    let d = delta(&t()).unwrap();
    assert_eq!(d.coefficient(&[1, 1]).unwrap(), int(-2));
    assert_eq!(d.coefficient(&[0, 0]).unwrap(), int(1));
    assert_eq!(d.nnz(), 6);
    let (x, y) = (var("x"), var("y"));
    let l = one() - &x - &y;
    assert_eq!(d, &l * &l - (&x * &y).scale(&int(4)));
}

#[test]
fn festoons_are_squared_binomials() {
    let z = festoon_z(&t()).unwrap();
    for n in 0..=CAP {
        for m in 0..=CAP {
            let b = binom(n + m, n);
            assert_eq!(z.coefficient(&[n, m]).unwrap(), int(b * b), "({n},{m})");
        }
    }
    assert_eq!(&z * &delta(&t()).unwrap().sqrt().unwrap(), one());
}

#[test]
fn staircase_isotropic_is_catalan() {
    let s = staircase_s(&Truncation::total(2, CAP)).unwrap().isotropic("x").unwrap();
    let catalan: Vec<i64> = (0..CAP).map(|k| binom(2 * k, k) / (k as i64 + 1)).collect();
    for n in 2..=CAP {
        assert_eq!(s.coeff1(n).unwrap(), int(catalan[n as usize - 1]));
    }
    assert_eq!(s.coeff1(1).unwrap(), int(0));
    assert_eq!(staircase_s(&t()).unwrap().coefficient(&[1, 1]).unwrap(), int(1));
}

#[test]
fn uv_change_of_variables() {
    let (u, v) = uv_series(&t()).unwrap();
    let (x, y) = (var("x"), var("y"));
    assert_eq!(u.coefficient(&[1, 0]).unwrap(), int(1));
    assert_eq!(&u * (one() - &v), x);
    assert_eq!(&v * (one() - &u), y);
    let w = one() - &u - &v;
    assert_eq!(delta(&t()).unwrap(), &w * &w);
    assert_eq!(festoon_z(&t()).unwrap(), w.inv().unwrap());
    assert_eq!(staircase_s(&t()).unwrap(), &u * &v);
}

#[test]
fn indent_factors() {
    let i1 = indent_gf(1, &t()).unwrap();
    let low: Vec<_> = i1.terms().filter(|(e, _)| e[0] + e[1] <= 2).map(|(e, c)| (e.clone(), c.clone())).collect();
    assert_eq!(low, vec![(vec![2, 0], int(1))]);
    assert!(indent_gf(0, &t()).is_err());

    let m = indent_gf_mirror(1, &t()).unwrap();
    for (e, c) in i1.terms() {
        assert_eq!(&m.coefficient(&[e[1], e[0]]).unwrap(), c);
    }
}

#[test]
fn indent_alternative_form_agrees_only_for_two_deep() {
    assert_eq!(indent_gf(2, &t()).unwrap(), indent_gf_alt(2, &t()).unwrap());
    // v²S⁴/y⁶ is u⁴/(1−u)⁶, not u²/(1−u)⁶
    let three = indent_gf(3, &t()).unwrap();
    let alt = indent_gf_alt(3, &t()).unwrap();
    assert_eq!(three.first_difference(&alt).unwrap(), Some(vec![2, 0]));
    let (u, _) = uv_series(&t()).unwrap();
    let ou = one() - &u;
    assert_eq!(alt, u.pow(4).unwrap().checked_div(&ou.pow(6).unwrap()).unwrap());
}

#[test]
fn directed_walks_are_binomials() {
    let dw = folded_walk_gfs("dw", &t()).unwrap();
    for n in 0..=CAP {
        for m in 0..=CAP {
            assert_eq!(dw.coefficient(&[n, m]).unwrap(), int(binom(n + m, n)));
        }
    }
    assert!(folded_walk_gfs("spiral", &t()).is_err());
}

#[test]
fn folding_once() {
    // even-x part of 1/(1−x−y), exponent halved
    let (x, y) = (var("x"), var("y"));
    let oy = one() - &y;
    let want = oy.checked_div(&(&oy * &oy - &x)).unwrap();
    assert_eq!(folded_walk_gfs("folded_dw", &t()).unwrap(), want);
    let want_saw = one() + &y * &want;
    assert_eq!(folded_walk_gfs("saw_fold", &t()).unwrap(), want_saw);
}

#[test]
fn unimodal_fold_closed_form() {
    let (x, y) = (var("x"), var("y"));
    let d = delta(&t()).unwrap();
    let fold = folded_walk_gfs("unimodal_fold", &t()).unwrap();
    assert_eq!(fold, (&x * &y * (one() - &x - &y)).checked_div(&d).unwrap());
    let rest = fold - unimodal_fold_correction(&t()).unwrap();
    assert_eq!(rest, &x * &y * festoon_z(&t()).unwrap());
}
