use serde::{Deserialize, Serialize};

use crate::polygon::Polygon;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Arc {
    Top,
    Right,
    Bottom,
    Left,
}

impl Arc {
    pub fn name(self) -> &'static str {
        match self {
            Arc::Top => "top",
            Arc::Right => "right",
            Arc::Bottom => "bottom",
            Arc::Left => "left",
        }
    }
}

/// The eight sides between MBR contact points, counterclockwise from the top edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    TopLeft,
    Left,
    BottomLeft,
    Bottom,
    BottomRight,
    Right,
    TopRight,
}

impl Side {
    const RING: [Side; 8] = [
        Side::Top,
        Side::TopLeft,
        Side::Left,
        Side::BottomLeft,
        Side::Bottom,
        Side::BottomRight,
        Side::Right,
        Side::TopRight,
    ];

    fn pos(self) -> usize {
        Side::RING.iter().position(|&s| s == self).unwrap()
    }

    /// Top, left, bottom and right lie along an MBR edge rather than between two edges.
    pub fn is_edge(self) -> bool {
        self.pos().is_multiple_of(2)
    }

    fn distance(self, other: Side) -> usize {
        let d = (self.pos() + 8 - other.pos()) % 8;
        d.min(8 - d)
    }

    fn neighbours(self) -> [Side; 2] {
        let p = self.pos();
        [Side::RING[(p + 1) % 8], Side::RING[(p + 7) % 8]]
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Top => "top",
            Side::TopLeft => "top_left",
            Side::Left => "left",
            Side::BottomLeft => "bottom_left",
            Side::Bottom => "bottom",
            Side::BottomRight => "bottom_right",
            Side::Right => "right",
            Side::TopRight => "top_right",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    Horizontal,
    Vertical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Indent {
    pub arc: Arc,
    pub side: Side,
    pub direction: Direction,
    pub depth: u32,
    /// Coordinate of the indent's base, measured inward from the arc's MBR edge
    /// in the rotated frame.
    pub base: i32,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corners {
    pub bl: bool,
    pub br: bool,
    pub tr: bool,
    pub tl: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub h: u32,
    pub v: u32,
    pub m: u32,
    /// Vertical and horizontal parts of the concavity index.
    pub a: u32,
    pub b: u32,
    /// Excess of each arc in arc order top, right, bottom, left.
    pub arc_excess: [u32; 4],
    pub indents: Vec<Indent>,
    pub corners: Corners,
}

impl Classification {
    pub fn convex(&self) -> bool {
        self.m == 0
    }

    pub fn staircase(&self) -> bool {
        self.m == 0 && self.corners.bl && self.corners.tr
    }

    pub fn unimodal(&self) -> bool {
        self.m == 0 && self.corners.bl
    }

    pub fn pyramid(&self) -> bool {
        self.m == 0 && self.corners.bl && self.corners.br
    }

    pub fn stack(&self) -> bool {
        self.m == 0 && self.corners.bl && self.corners.tl
    }

    /// Whether the indent decomposition accounts for the whole concavity index.
    pub fn consistent(&self) -> bool {
        let d = self.arc_excess;
        d[0] + d[2] == self.a && d[1] + d[3] == self.b && self.indents.iter().map(|i| i.depth).sum::<u32>() == self.m
    }

    /// Sides of the indents with edge indents reassigned to the neighbouring
    /// side nearest the other indent; an edge indent with no other corner
    /// indent to lean towards keeps its edge label.
    pub fn resolved_sides(&self) -> Vec<Side> {
        let raw: Vec<Side> = self.indents.iter().map(|i| i.side).collect();
        if raw.len() != 2 {
            return raw;
        }
        let pick = |me: Side, other: Side| -> Side {
            if !me.is_edge() || other.is_edge() {
                return me;
            }
            let [a, b] = me.neighbours();
            match a.distance(other).cmp(&b.distance(other)) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Greater => b,
                std::cmp::Ordering::Equal => me,
            }
        };
        vec![pick(raw[0], raw[1]), pick(raw[1], raw[0])]
    }

    /// Subclass tags under which the polygon is counted (besides `all`).
    pub fn tags(&self) -> Vec<String> {
        let mut t = Vec::new();
        match self.m {
            0 => {
                t.push("convex".to_string());
                for (flag, name) in [
                    (self.staircase(), "staircase"),
                    (self.unimodal(), "unimodal"),
                    (self.pyramid(), "pyramid"),
                    (self.stack(), "stack"),
                ] {
                    if flag {
                        t.push(name.to_string());
                    }
                }
            }
            1 => {
                if let [ind] = self.indents.as_slice() {
                    t.push(format!("arc_{}", ind.arc.name()));
                    t.push(format!("side_{}", ind.side.name()));
                    if ind.arc == Arc::Top && ind.side != Side::TopRight && self.corners.bl {
                        t.push("rooted_unimodal_top_arc".into());
                        if self.corners.tr {
                            t.push("rooted_staircase_top_arc".into());
                        }
                    }
                } else {
                    t.push("unclassified".into());
                }
            }
            2 => t.extend(self.m2_tags()),
            _ => {}
        }
        t
    }

    fn m2_tags(&self) -> Vec<String> {
        let mut t = Vec::new();
        let ind = &self.indents;
        if self.a == 1 && self.b == 1 {
            t.push("FR".to_string());
        } else {
            match ind.as_slice() {
                [i] if i.depth == 2 => t.push(format!("F2_{}", i.arc.name())),
                [i, j] if i.arc == j.arc => t.push(format!("FS_{}", i.arc.name())),
                [i, _] => t.push(format!("FO_{}", if i.direction == Direction::Vertical { "vertical" } else { "horizontal" })),
                _ => t.push("unclassified".into()),
            }
        }
        if let [i, j] = ind.as_slice() {
            let sides = self.resolved_sides();
            if sides[0] == sides[1] && i.direction == j.direction {
                let h = if i.base == j.base { "same" } else { "diff" };
                let d = if i.direction == Direction::Vertical { "vertical" } else { "horizontal" };
                t.push(format!("same_side_{}_{}_{}", sides[0].name(), d, h));
            }
            let top = |x: &Indent| x.arc == Arc::Top && x.side != Side::TopRight && x.depth == 1;
            if top(i) && top(j) && self.corners.bl {
                t.push("rooted_unimodal_top_arc_pair".into());
                if self.corners.tr {
                    t.push("rooted_staircase_top_arc_pair".into());
                }
            }
        }
        if let [i] = ind.as_slice() {
            if i.arc == Arc::Top && i.side != Side::TopRight && self.corners.bl {
                t.push("rooted_unimodal_top_arc".into());
                if self.corners.tr {
                    t.push("rooted_staircase_top_arc".into());
                }
            }
        }
        t
    }
}

const SIDES: [[Side; 3]; 4] = [
    // [right-of-arc, edge, left-of-arc] for the arc brought to the top by k quarter turns
    [Side::TopRight, Side::Top, Side::TopLeft],
    [Side::BottomRight, Side::Right, Side::TopRight],
    [Side::BottomLeft, Side::Bottom, Side::BottomRight],
    [Side::TopLeft, Side::Left, Side::BottomLeft],
];
const ARCS: [Arc; 4] = [Arc::Top, Arc::Right, Arc::Bottom, Arc::Left];

fn rotate(vs: &[(i32, i32)], k: usize) -> Vec<(i32, i32)> {
    vs.iter()
        .map(|&(mut x, mut y)| {
            for _ in 0..k {
                (x, y) = (-y, x);
            }
            (x, y)
        })
        .collect()
}

#[derive(Clone, Copy)]
struct Run {
    y: i32,
    start: usize,
    end: usize,
}

/// Vertical excess of the top arc and its valleys as (side slot, depth, base).
fn top_arc(vs: &[(i32, i32)]) -> (u32, Vec<(usize, u32, i32)>) {
    let n = vs.len();
    let maxy = vs.iter().map(|p| p.1).max().unwrap();
    let maxx = vs.iter().map(|p| p.0).max().unwrap();
    let minx = vs.iter().map(|p| p.0).min().unwrap();
    let highest_on = |x0: i32| (0..n).filter(|&i| vs[i].0 == x0).max_by_key(|&i| vs[i].1).unwrap();
    let rt = highest_on(maxx);
    let lt = highest_on(minx);
    let mut seq = vec![rt];
    let mut i = rt;
    while i != lt {
        i = (i + 1) % n;
        seq.push(i);
    }
    let ys: Vec<i32> = seq.iter().map(|&i| vs[i].1).collect();

    let mut runs: Vec<Run> = Vec::new();
    for (p, &y) in ys.iter().enumerate() {
        match runs.last_mut() {
            Some(r) if r.y == y => r.end = p,
            _ => runs.push(Run { y, start: p, end: p }),
        }
    }
    let mut tp = vec![runs[0]];
    for k in 1..runs.len().saturating_sub(1) {
        if (runs[k - 1].y - runs[k].y) * (runs[k + 1].y - runs[k].y) > 0 {
            tp.push(runs[k]);
        }
    }
    if runs.len() > 1 {
        tp.push(*runs.last().unwrap());
    }

    let fmax = ys.iter().position(|&y| y == maxy).unwrap();
    let lmax = ys.iter().rposition(|&y| y == maxy).unwrap();
    let vsteps: i32 = ys.windows(2).map(|w| (w[0] - w[1]).abs()).sum();
    let d = (vsteps - (maxy - ys[0]) - (maxy - ys[ys.len() - 1])) / 2;

    let mut out = Vec::new();
    for k in 1..tp.len().saturating_sub(1) {
        let r = tp[k];
        if !(tp[k - 1].y > r.y && r.y < tp[k + 1].y) {
            continue;
        }
        let down = tp[k - 1].y - r.y;
        let up = tp[k + 1].y - r.y;
        let (slot, depth) = if r.end < fmax {
            (0, down.min(up))
        } else if r.start > lmax {
            // the matching descent may run past the end of the arc
            let j = seq[tp[k + 1].end];
            let top = vs[j].1;
            let mut low = top;
            let mut jj = j;
            loop {
                jj = (jj + 1) % n;
                let y2 = vs[jj].1;
                if y2 > low {
                    break;
                }
                low = y2;
                if jj == seq[0] {
                    break;
                }
            }
            (2, up.min(top - low))
        } else {
            (1, down.min(up))
        };
        out.push((slot, depth as u32, maxy - r.y));
    }
    (d as u32, out)
}

fn corner_flags(vs: &[(i32, i32)]) -> Corners {
    let minx = vs.iter().map(|p| p.0).min().unwrap();
    let maxx = vs.iter().map(|p| p.0).max().unwrap();
    let miny = vs.iter().map(|p| p.1).min().unwrap();
    let maxy = vs.iter().map(|p| p.1).max().unwrap();
    let has = |p: (i32, i32)| vs.contains(&p);
    Corners { bl: has((minx, miny)), br: has((maxx, miny)), tr: has((maxx, maxy)), tl: has((minx, maxy)) }
}

pub fn classify(p: &Polygon) -> Classification {
    let vs = p.vertices();
    let (w, hgt) = p.mbr();
    let h = p.horizontal_half();
    let v = p.vertical_half();
    let a = v - hgt;
    let b = h - w;
    let mut arc_excess = [0u32; 4];
    let mut indents = Vec::new();
    for k in 0..4 {
        if a + b == 0 {
            break;
        }
        let (d, valleys) = top_arc(&rotate(&vs, k));
        arc_excess[k] = d;
        for (slot, depth, base) in valleys {
            indents.push(Indent {
                arc: ARCS[k],
                side: SIDES[k][slot],
                direction: if k % 2 == 0 { Direction::Vertical } else { Direction::Horizontal },
                depth,
                base,
            });
        }
    }
    Classification { h, v, m: a + b, a, b, arc_excess, indents, corners: corner_flags(&vs) }
}

/// Concavity index straight from a step word.
pub fn concavity_index(p: &Polygon) -> u32 {
    p.concavity_index()
}
