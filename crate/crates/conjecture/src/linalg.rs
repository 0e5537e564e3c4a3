//! Exact linear algebra over the integers, fraction-free.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// `row ← p·row − row[j]·pivot`, cancelling column `j`.
fn cancel(row: &mut [BigInt], pivot: &[BigInt], j: usize) {
    if row[j].is_zero() {
        return;
    }
    let p = pivot[j].clone();
    let r = row[j].clone();
    for (a, b) in row.iter_mut().zip(pivot) {
        *a = &*a * &p - &r * b;
    }
    primitive(row);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    Independent,
    Dependent,
    Inconsistent,
}

/// Augmented rows `[coefficients | rhs]` kept in echelon form as they arrive.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, mut row: Vec<BigInt>) -> RowOutcome {
        assert_eq!(row.len(), self.cols + 1);
        primitive(&mut row);
        for (j, p) in &self.rows {
            cancel(&mut row, p, *j);
        }
        match row[..self.cols].iter().position(|c| !c.is_zero()) {
            Some(j) => {
                self.rows.push((j, row));
                RowOutcome::Independent
            }
            None if row[self.cols].is_zero() => RowOutcome::Dependent,
            None => RowOutcome::Inconsistent,
        }
    }

    /// The solution with every non-pivot column of the reduced form set to
    /// zero, as numerators over a common positive denominator. Pivots are
    /// chosen leftmost-first, so the free unknowns are the rightmost ones.
    pub fn solve(&self) -> (Vec<BigInt>, BigInt, usize) {
        let n = self.cols;
        // full reduction, pivots leftmost-first
        let mut rows: Vec<Vec<BigInt>> = self.rows.iter().map(|(_, r)| r.clone()).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut top = 0;
        for col in 0..n {
            let Some(k) = (top..rows.len()).find(|&k| !rows[k][col].is_zero()) else { continue };
            rows.swap(top, k);
            let p = rows[top].clone();
            for (i, r) in rows.iter_mut().enumerate() {
                if i != top {
                    cancel(r, &p, col);
                }
            }
            pivots.push(col);
            top += 1;
        }
        let den = pivots.iter().zip(&rows).fold(BigInt::one(), |acc, (&j, r)| acc.lcm(&r[j].abs()));
        let mut x = vec![BigInt::zero(); n];
        for (&j, r) in pivots.iter().zip(&rows) {
            x[j] = &r[n] * &den / &r[j];
        }
        (x, den, n - pivots.len())
    }
}
