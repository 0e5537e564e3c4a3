use serde::{Deserialize, Serialize};

/// A linear constraint `Σ weights[i]·e[i] ≤ max` on exponent tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bound {
    pub weights: Vec<u32>,
    pub max: i64,
}

impl Bound {
    pub fn eval(&self, e: &[u32]) -> i64 {
        self.weights.iter().zip(e).map(|(&w, &x)| w as i64 * x as i64).sum()
    }
}

/// The set of exponent tuples whose coefficients a series knows.
///
/// It is always a down-set: per-variable caps intersected with optional
/// weighted-degree bounds. A negative cap or bound means the region is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    caps: Vec<i64>,
    bounds: Vec<Bound>,
}

impl Truncation {
    pub fn caps(caps: &[u32]) -> Self {
        Truncation { caps: caps.iter().map(|&c| c as i64).collect(), bounds: Vec::new() }
    }

    pub fn uniform(nvars: usize, cap: u32) -> Self {
        Self::caps(&vec![cap; nvars])
    }

    /// Caps every variable at `d` and bounds the total degree by `d`.
    pub fn total(nvars: usize, d: u32) -> Self {
        Self::uniform(nvars, d).with_bound(vec![1; nvars], d as i64)
    }

    pub fn from_parts(caps: Vec<i64>, bounds: Vec<Bound>) -> Self {
        let mut t = Truncation { caps, bounds: Vec::new() };
        for b in bounds {
            t.push_bound(b);
        }
        t
    }

    pub fn with_bound(mut self, weights: Vec<u32>, max: i64) -> Self {
        self.push_bound(Bound { weights, max });
        self
    }

    fn push_bound(&mut self, b: Bound) {
        assert_eq!(b.weights.len(), self.caps.len(), "bound arity");
        let nz: Vec<usize> = (0..b.weights.len()).filter(|&i| b.weights[i] > 0).collect();
        if nz.is_empty() {
            if b.max < 0 {
                self.caps.iter_mut().for_each(|c| *c = -1);
            }
            return;
        }
        if nz.len() == 1 {
            let i = nz[0];
            let c = b.max.div_euclid(b.weights[i] as i64);
            self.caps[i] = self.caps[i].min(c);
            return;
        }
        if self.bounds.contains(&b) {
            return;
        }
        let worst: i64 = b.weights.iter().zip(&self.caps).map(|(&w, &c)| w as i64 * c.max(0)).sum();
        if worst <= b.max {
            return;
        }
        self.bounds.push(b);
        self.bounds.sort();
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    pub fn cap(&self, i: usize) -> i64 {
        self.caps[i]
    }

    pub fn cap_list(&self) -> &[i64] {
        &self.caps
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    pub fn is_empty(&self) -> bool {
        self.caps.iter().any(|&c| c < 0) || self.bounds.iter().any(|b| b.max < 0)
    }

    pub fn contains(&self, e: &[u32]) -> bool {
        e.len() == self.caps.len()
            && e.iter().zip(&self.caps).all(|(&x, &c)| (x as i64) <= c)
            && self.bounds.iter().all(|b| b.eval(e) <= b.max)
    }

    /// Largest exponent of variable `i` allowed anywhere in the region.
    pub fn reach(&self, i: usize) -> i64 {
        let mut r = self.caps[i];
        for b in &self.bounds {
            if b.weights[i] > 0 {
                r = r.min(b.max.div_euclid(b.weights[i] as i64));
            }
        }
        r
    }

    pub fn intersect(&self, other: &Truncation) -> Truncation {
        assert_eq!(self.nvars(), other.nvars(), "truncation arity");
        let caps = self.caps.iter().zip(&other.caps).map(|(&a, &b)| a.min(b)).collect();
        let mut bounds = self.bounds.clone();
        bounds.extend(other.bounds.iter().cloned());
        Truncation::from_parts(caps, bounds)
    }

    /// Region with variable `i` set to exponent zero, i.e. the slice other factors see.
    pub fn without_var(&self, i: usize) -> Truncation {
        let mut caps = self.caps.clone();
        caps.remove(i);
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                let mut w = b.weights.clone();
                w.remove(i);
                Bound { weights: w, max: b.max }
            })
            .collect();
        Truncation::from_parts(caps, bounds)
    }

    /// Adds a fresh variable at position `i` with the given cap and zero weight in all bounds.
    pub fn insert_var(&self, i: usize, cap: i64) -> Truncation {
        let mut caps = self.caps.clone();
        caps.insert(i, cap);
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                let mut w = b.weights.clone();
                w.insert(i, 0);
                Bound { weights: w, max: b.max }
            })
            .collect();
        Truncation::from_parts(caps, bounds)
    }

    /// Region `{e : e + shift ∈ self}`.
    pub fn shifted(&self, shift: &[i64]) -> Truncation {
        let caps = self.caps.iter().zip(shift).map(|(&c, &s)| c - s).collect();
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                let d: i64 = b.weights.iter().zip(shift).map(|(&w, &s)| w as i64 * s).sum();
                Bound { weights: b.weights.clone(), max: b.max - d }
            })
            .collect();
        Truncation::from_parts(caps, bounds)
    }

    /// Region after `v^{2k} ↦ v^k` on variable `i`.
    pub fn halved(&self, i: usize) -> Truncation {
        let mut caps = self.caps.clone();
        caps[i] = caps[i].div_euclid(2);
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                let mut w = b.weights.clone();
                w[i] *= 2;
                Bound { weights: w, max: b.max }
            })
            .collect();
        Truncation::from_parts(caps, bounds)
    }

    /// Smallest region which, once halved in variable `i`, covers `self`.
    pub fn doubled(&self, i: usize) -> Truncation {
        let mut caps = self.caps.clone();
        caps[i] *= 2;
        let bounds = self
            .bounds
            .iter()
            .map(|b| {
                if b.weights[i] == 0 {
                    return b.clone();
                }
                if b.weights[i] % 2 == 0 {
                    let mut w = b.weights.clone();
                    w[i] /= 2;
                    return Bound { weights: w, max: b.max };
                }
                let w = b.weights.iter().enumerate().map(|(j, &x)| if j == i { x } else { 2 * x }).collect();
                Bound { weights: w, max: 2 * b.max + 1 }
            })
            .collect();
        Truncation::from_parts(caps, bounds)
    }

    /// All exponent tuples of the region that vanish outside `active`, in lexicographic order.
    pub fn points(&self, active: &[bool]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        if self.is_empty() {
            return out;
        }
        let n = self.nvars();
        let mut cur = vec![0u32; n];
        let mut slack: Vec<i64> = self.bounds.iter().map(|b| b.max).collect();
        self.walk(0, active, &mut cur, &mut slack, &mut out);
        out
    }

    fn walk(&self, i: usize, active: &[bool], cur: &mut Vec<u32>, slack: &mut Vec<i64>, out: &mut Vec<Vec<u32>>) {
        if i == self.nvars() {
            out.push(cur.clone());
            return;
        }
        let top = if active[i] { self.caps[i] } else { 0 };
        let mut k = 0i64;
        while k <= top {
            if self.bounds.iter().zip(slack.iter()).any(|(b, &s)| b.weights[i] as i64 * k > s) {
                break;
            }
            for (b, s) in self.bounds.iter().zip(slack.iter_mut()) {
                *s -= b.weights[i] as i64 * k;
            }
            cur[i] = k as u32;
            self.walk(i + 1, active, cur, slack, out);
            for (b, s) in self.bounds.iter().zip(slack.iter_mut()) {
                *s += b.weights[i] as i64 * k;
            }
            k += 1;
        }
        cur[i] = 0;
    }

    /// Every constraint of the region, caps included as unit-weight bounds.
    pub fn constraints(&self) -> Vec<Bound> {
        let n = self.nvars();
        let mut out: Vec<Bound> = (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = 1;
                Bound { weights: w, max: self.caps[i] }
            })
            .collect();
        out.extend(self.bounds.iter().cloned());
        out
    }

    /// Region cut out by the given constraints. Each variable must be bounded
    /// by at least one of them.
    pub fn from_constraints(nvars: usize, cons: Vec<Bound>) -> Truncation {
        let mut caps = vec![i64::MAX; nvars];
        for b in &cons {
            for i in 0..nvars {
                if b.weights[i] > 0 {
                    caps[i] = caps[i].min(b.max.div_euclid(b.weights[i] as i64));
                }
            }
        }
        assert!(caps.iter().all(|&c| c != i64::MAX), "unbounded variable in truncation");
        Truncation::from_parts(caps, cons)
    }
}
