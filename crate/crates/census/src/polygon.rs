use std::collections::HashSet;
use std::fmt;

use crate::error::CensusError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
    W,
    S,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::E, Step::N, Step::W, Step::S];

    pub fn delta(self) -> (i32, i32) {
        match self {
            Step::E => (1, 0),
            Step::N => (0, 1),
            Step::W => (-1, 0),
            Step::S => (0, -1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
            Step::W => 'W',
            Step::S => 'S',
        }
    }

    fn from_letter(c: char) -> Option<Step> {
        match c {
            'E' => Some(Step::E),
            'N' => Some(Step::N),
            'W' => Some(Step::W),
            'S' => Some(Step::S),
            _ => None,
        }
    }

    fn reverse(self) -> Step {
        match self {
            Step::E => Step::W,
            Step::N => Step::S,
            Step::W => Step::E,
            Step::S => Step::N,
        }
    }
}

/// Closed self-avoiding boundary walk, rooted at its lowest-then-leftmost
/// vertex with first step E, traversed counterclockwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polygon {
    steps: Vec<Step>,
}

impl Polygon {
    /// Trusted constructor for walks produced by the enumerator.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        Polygon { steps }
    }

    /// Parses a step word such as `"ENWS"`, validates it and puts it in canonical form.
    pub fn from_word(word: &str) -> Result<Self, CensusError> {
        let steps: Vec<Step> = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Step::from_letter(c.to_ascii_uppercase()).ok_or_else(|| CensusError::BadPolygon(format!("bad step `{c}`"))))
            .collect::<Result<_, _>>()?;
        Self::from_steps(steps)
    }

    pub fn from_steps(steps: Vec<Step>) -> Result<Self, CensusError> {
        if steps.len() < 4 {
            return Err(CensusError::BadPolygon("fewer than four steps".into()));
        }
        let mut pos = (0i32, 0i32);
        let mut seen = HashSet::new();
        let mut verts = Vec::with_capacity(steps.len());
        for s in &steps {
            if !seen.insert(pos) {
                return Err(CensusError::BadPolygon("walk revisits a vertex".into()));
            }
            verts.push(pos);
            let (dx, dy) = s.delta();
            pos = (pos.0 + dx, pos.1 + dy);
        }
        if pos != (0, 0) {
            return Err(CensusError::BadPolygon("walk is not closed".into()));
        }
        // twice the signed area decides the orientation
        let n = verts.len();
        let area2: i64 = (0..n)
            .map(|i| {
                let (x0, y0) = verts[i];
                let (x1, y1) = verts[(i + 1) % n];
                x0 as i64 * y1 as i64 - x1 as i64 * y0 as i64
            })
            .sum();
        let (steps, verts) = if area2 < 0 {
            let rs: Vec<Step> = steps.iter().rev().map(|s| s.reverse()).collect();
            let mut rv = vec![(0, 0)];
            let mut p = (0, 0);
            for s in &rs[..rs.len() - 1] {
                let (dx, dy) = s.delta();
                p = (p.0 + dx, p.1 + dy);
                rv.push(p);
            }
            (rs, rv)
        } else {
            (steps, verts)
        };
        let root = (0..n).min_by_key(|&i| (verts[i].1, verts[i].0)).unwrap();
        let mut out = steps[root..].to_vec();
        out.extend_from_slice(&steps[..root]);
        Ok(Polygon { steps: out })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn perimeter(&self) -> usize {
        self.steps.len()
    }

    /// Number of E steps (= W steps).
    pub fn horizontal_half(&self) -> u32 {
        self.steps.iter().filter(|&&s| s == Step::E).count() as u32
    }

    /// Number of N steps (= S steps).
    pub fn vertical_half(&self) -> u32 {
        self.steps.iter().filter(|&&s| s == Step::N).count() as u32
    }

    /// Vertices in traversal order, starting at the root `(0, 0)`.
    pub fn vertices(&self) -> Vec<(i32, i32)> {
        let mut v = Vec::with_capacity(self.steps.len());
        let mut p = (0, 0);
        for s in &self.steps {
            v.push(p);
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
        }
        v
    }

    /// Width and height of the minimum bounding rectangle.
    pub fn mbr(&self) -> (u32, u32) {
        let v = self.vertices();
        let w = v.iter().map(|p| p.0).max().unwrap() - v.iter().map(|p| p.0).min().unwrap();
        let h = v.iter().map(|p| p.1).max().unwrap() - v.iter().map(|p| p.1).min().unwrap();
        (w as u32, h as u32)
    }

    /// (perimeter − MBR perimeter)/2.
    pub fn concavity_index(&self) -> u32 {
        let (w, h) = self.mbr();
        self.horizontal_half() + self.vertical_half() - w - h
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polygon({self})")
    }
}
