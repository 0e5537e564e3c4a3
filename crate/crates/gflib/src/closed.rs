use polygf_series::{int, TruncatedSeries, Truncation};

use crate::basic::grow;
use crate::ctx::{xy, Ctx};
use crate::data::PolyData;
use crate::error::Result;

pub const C1_A: [i64; 11] = [0, 0, 0, -4, 56, -300, 773, -973, 535, -90, 24];
pub const C1_B: [i64; 8] = [0, 0, 0, 4, -36, 100, -92, 12];

pub const F2_A: [i64; 19] = [
    0, 0, -8, 208, -2428, 16856, -77742, 252114, -593563, 1032521, -1336471, 1284072, -904540, 456064, -158327, 36093, -4955, 126, 88,
];
/// Cofactor of `(1−x)²(1−3x+x²)²` in the B polynomial.
pub const F2_B_COFACTOR: [i64; 12] = [0, 0, 8, -128, 844, -2992, 6262, -8014, 6188, -2602, 470, -12];

pub const C2_A: [i64; 25] = [
    0, 0, -24, 864, -14368, 146672, -1030216, 5289512, -20587766, 62176564, -147946110, 280112802, -424512212, 516373058, -504068274, 393649476,
    -244279626, 119050550, -44773540, 12722814, -2660520, 378184, -22560, -3200, 512,
];
pub const C2_B: [i64; 13] = [0, 0, -24, 456, -3592, 15264, -38200, 57792, -52832, 28872, -8968, 1248, 128];

pub fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &p) in a.iter().enumerate() {
        for (j, &q) in b.iter().enumerate() {
            out[i + j] += p * q;
        }
    }
    out
}

pub fn poly_pow(a: &[i64], k: u32) -> Vec<i64> {
    (0..k).fold(vec![1], |acc, _| poly_mul(&acc, a))
}

const ONE_X: [i64; 2] = [1, -1];
const GOLD: [i64; 3] = [1, -3, 1];
const FOUR: [i64; 2] = [1, -4];
const TWO: [i64; 2] = [1, -2];

/// Denominator `(1−x)⁵(1−3x+x²)³(1−4x)³` of the two-deep indent series.
pub fn f2_denominator() -> Vec<i64> {
    poly_mul(&poly_mul(&poly_pow(&ONE_X, 5), &poly_pow(&GOLD, 3)), &poly_pow(&FOUR, 3))
}

/// Factor `(1−x)²(1−3x+x²)²` forced on the B polynomial.
pub fn f2_forced_b_factor() -> Vec<i64> {
    poly_mul(&poly_pow(&ONE_X, 2), &poly_pow(&GOLD, 2))
}

pub fn f2_b() -> Vec<i64> {
    poly_mul(&f2_forced_b_factor(), &F2_B_COFACTOR)
}

struct Uni {
    c: Ctx,
}

impl Uni {
    fn new(n: u32) -> Self {
        let vars = polygf_series::VarSet::new(&["x"]).unwrap();
        Uni { c: Ctx::new(&vars, &Truncation::caps(&[n])) }
    }

    fn p(&self, coeffs: &[i64]) -> Result<TruncatedSeries> {
        self.c.poly("x", coeffs)
    }

    fn root(&self) -> Result<TruncatedSeries> {
        Ok(self.p(&FOUR)?.sqrt()?)
    }
}

/// `[A + B√(1−4x)]/D` to order `n`.
pub fn ansatz_series(a: &[i64], b: &[i64], d: &[i64], n: u32) -> Result<TruncatedSeries> {
    let u = Uni::new(n);
    let num = u.p(a)? + u.p(b)? * u.root()?;
    Ok(num.checked_div(&u.p(d)?)?)
}

/// The printed 1-convex expression; counts polygons whose indent is on the top arc.
pub fn c1_top_arc(n: u32) -> Result<TruncatedSeries> {
    let u = Uni::new(n);
    let d1 = poly_mul(&poly_mul(&ONE_X, &GOLD), &poly_pow(&FOUR, 3));
    let first = u.p(&C1_A)?.checked_div(&u.p(&d1)?)?;
    // (1−4x)^{−5/2} = √(1−4x)/(1−4x)³
    let d2 = poly_mul(&ONE_X, &poly_pow(&FOUR, 3));
    let second = (u.p(&C1_B)? * u.root()?).checked_div(&u.p(&d2)?)?;
    Ok(first + second)
}

/// All 1-convex polygons: four arcs for the indent.
pub fn c1_iso(n: u32) -> Result<TruncatedSeries> {
    Ok(c1_top_arc(n)?.scale(&int(4)))
}

/// Polygons with a single two-deep indent on the top arc.
pub fn f2_iso(n: u32) -> Result<TruncatedSeries> {
    ansatz_series(&F2_A, &f2_b(), &f2_denominator(), n)
}

fn c2_parts(n: u32) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let u = Uni::new(n);
    let da = poly_mul(&poly_mul(&poly_pow(&ONE_X, 7), &TWO), &poly_mul(&poly_pow(&GOLD, 3), &poly_pow(&FOUR, 4)));
    let a = u.p(&C2_A)?.checked_div(&u.p(&da)?)?;
    // (1−4x)^{−7/2} = √(1−4x)/(1−4x)⁴
    let db = poly_mul(&poly_pow(&ONE_X, 3), &poly_pow(&FOUR, 4));
    let b = (u.p(&C2_B)? * u.root()?).checked_div(&u.p(&db)?)?;
    Ok((a, b))
}

/// 2-convex polygons, `B₂/((1−x)³(1−4x)^{7/2}) − A₂/(…(1−4x)⁴)`.
pub fn c2_iso(n: u32) -> Result<TruncatedSeries> {
    let (a, b) = c2_parts(n)?;
    Ok(b - a)
}

/// The two-term sum exactly as printed alongside the A₂, B₂ polynomials.
pub fn c2_iso_printed(n: u32) -> Result<TruncatedSeries> {
    let (a, b) = c2_parts(n)?;
    Ok(a + b)
}

/// Anisotropic 2-convex series on the region `t` over (x, y), from the
/// shipped numerator data:
/// `(B − 4A(1−x)⁴(1−y)⁴ p³ q³ (1−x−y)√Δ) / (xy (1−x)⁷(1−y)⁷ p³ q³ (1−x−y) Δ⁴)`
/// with `p = (1−x)²−y`, `q = (1−y)²−x`.
pub fn c2_aniso(t: &Truncation, a: &PolyData, b: &PolyData) -> Result<TruncatedSeries> {
    let big = grow(t, 1, 1);
    let c = Ctx::xy(&big);
    let (x, y) = (c.v("x")?, c.v("y")?);
    let one = c.c(1);
    let ox = &one - &x;
    let oy = &one - &y;
    let delta = crate::basic::delta(&big)?;
    let p = &ox * &ox - &y;
    let q = &oy * &oy - &x;
    let l = &one - &x - &y;
    let an = a.series(&xy(), &big)?;
    let bn = b.series(&xy(), &big)?;
    let lift = ox.pow(4)? * oy.pow(4)? * p.pow(3)? * q.pow(3)? * &l * delta.sqrt()?;
    let num = bn - (an * lift).scale(&int(4));
    let num = num.mul_monomial(&[-1, -1])?;
    let den = ox.pow(7)? * oy.pow(7)? * p.pow(3)? * q.pow(3)? * l * delta.pow(4)?;
    Ok(num.checked_div(&den.truncate(num.truncation()))?.truncate(t))
}
