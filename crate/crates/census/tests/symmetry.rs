use std::sync::OnceLock;

use polygf_census::*;
use proptest::prelude::*;

fn all() -> &'static Vec<Polygon> {
    static P: OnceLock<Vec<Polygon>> = OnceLock::new();
    P.get_or_init(|| polygons(8))
}

fn turn(s: Step) -> Step {
    match s {
        Step::E => Step::N,
        Step::N => Step::W,
        Step::W => Step::S,
        Step::S => Step::E,
    }
}

fn mirror(s: Step) -> Step {
    match s {
        Step::E => Step::W,
        Step::W => Step::E,
        x => x,
    }
}

fn arcs(c: &Classification) -> Vec<Arc> {
    let mut a: Vec<Arc> = c.indents.iter().map(|i| i.arc).collect();
    a.sort();
    a
}

proptest! {
    #[test]
    fn quarter_turn(k in 0usize..10_000) {
        let p = &all()[k % all().len()];
        let q = Polygon::from_steps(p.steps().iter().map(|&s| turn(s)).collect()).unwrap();
        let (c, d) = (classify(p), classify(&q));
        prop_assert_eq!((d.h, d.v, d.m, d.a, d.b), (c.v, c.h, c.m, c.b, c.a));
        let rot = |a: Arc| match a { Arc::Top => Arc::Left, Arc::Left => Arc::Bottom, Arc::Bottom => Arc::Right, Arc::Right => Arc::Top };
        let mut want: Vec<Arc> = arcs(&c).into_iter().map(rot).collect();
        want.sort();
        prop_assert_eq!(arcs(&d), want);
        prop_assert_eq!(c.convex(), d.convex());
        prop_assert_eq!(c.stack(), d.pyramid());
    }

    #[test]
    fn reflection(k in 0usize..10_000) {
        let p = &all()[k % all().len()];
        let q = Polygon::from_steps(p.steps().iter().map(|&s| mirror(s)).collect()).unwrap();
        let (c, d) = (classify(p), classify(&q));
        prop_assert_eq!((d.h, d.v, d.m), (c.h, c.v, c.m));
        prop_assert_eq!(c.arc_excess, [d.arc_excess[0], d.arc_excess[3], d.arc_excess[2], d.arc_excess[1]]);
        prop_assert_eq!(c.pyramid(), d.pyramid());
        prop_assert_eq!(c.staircase() || c.corners.br && c.corners.tl && c.convex(), d.staircase() || d.corners.br && d.corners.tl && d.convex());
    }
}
