use schub_core::neighbor::{
    check_prop_main, check_prop_main1, critical_set as crit, next_down, next_up, prop_down,
    prop_down_by_diff, prop_up, prop_up_by_diff, q_cond, q_down, q_failures, q_up, s_set,
    s_star_set, shift_frame, staged_influence_failure, strong_prop_left, strong_prop_left_by_rank,
    strong_prop_right, strong_prop_right_by_rank, NeighborFrame,
};
use schub_core::rank::restricted_square;
use schub_core::{PermPair, Point, PointSet};

use crate::enumerate::Universe;
use crate::report::Violation;
use crate::sweep::Sink;

fn down(pair: &PermPair, p: Point) -> NeighborFrame {
    next_down(pair, p).expect("p in the restricted square")
}

fn up(pair: &PermPair, p: Point) -> NeighborFrame {
    next_up(pair, p).expect("p in the restricted square")
}

fn dw(pair: &PermPair, p: Point, q: Point) -> i32 {
    pair.rk_w().diff(p, q).expect("in square")
}

fn dx(pair: &PermPair, p: Point, q: Point) -> i32 {
    pair.rk_x().diff(p, q).expect("in square")
}

pub(super) fn neighbor_totality(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    for p in restricted_square(n) {
        for (name, frame) in [("down", next_down(pair, p)), ("up", next_up(pair, p))] {
            let Ok(f) = frame else {
                sink.push(Violation::on(pair, format!("{name} operator undefined")).at(p));
                continue;
            };
            let toward = if name == "down" {
                f.side.j > p.j && f.corner.i >= p.i
            } else {
                f.side.j < p.j && f.corner.i <= p.i
            };
            let ok = toward
                && f.side.i == p.i
                && f.corner == Point::new(f.target.i, f.side.j)
                && f.target.j == p.j
                && pair.in_level_set(f.side)
                && pair.in_level_set(f.corner)
                && dw(pair, p, f.corner) == 0;
            sink.check(ok, || {
                Violation::on(
                    pair,
                    format!(
                        "{name} frame malformed: side {} corner {}",
                        f.side, f.corner
                    ),
                )
                .at(p)
            });
        }
    }
    for p in pair.complement().iter() {
        let Ok(s) = shift_frame(pair, p) else {
            sink.push(Violation::on(pair, "shift frame undefined").at(p));
            continue;
        };
        let corners = p
            .corners(s.rd)
            .into_iter()
            .chain(p.corners(s.lu))
            .all(|c| pair.in_level_set(c));
        sink.check(p.lt(s.rd) && s.lu.lt(p) && corners, || {
            Violation::on(
                pair,
                format!("shift frame malformed: rd {} lu {}", s.rd, s.lu),
            )
            .at(p)
        });
    }
}

pub(super) fn prop_down_equivalence(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for p in pair.complement().iter() {
        let (a, b) = (
            prop_down(pair, p).unwrap(),
            prop_down_by_diff(pair, p).unwrap(),
        );
        sink.check(a == b, || {
            Violation::on(pair, format!("P-down {a} but d_x criterion {b}")).at(p)
        });
        let (a, b) = (prop_up(pair, p).unwrap(), prop_up_by_diff(pair, p).unwrap());
        sink.check(a == b, || {
            Violation::on(pair, format!("P-up {a} but d_x criterion {b}")).at(p)
        });
    }
}

pub(super) fn strong_prop_equivalence(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for p in pair.complement().iter() {
        let (a, b) = (
            strong_prop_right(pair, p).unwrap(),
            strong_prop_right_by_rank(pair, p).unwrap(),
        );
        sink.check(a == b, || {
            Violation::on(pair, format!("right: d_x = 1 is {a}, rank form {b}")).at(p)
        });
        let (a, b) = (
            strong_prop_left(pair, p).unwrap(),
            strong_prop_left_by_rank(pair, p).unwrap(),
        );
        sink.check(a == b, || {
            Violation::on(pair, format!("left: d_x = 1 is {a}, rank form {b}")).at(p)
        });
    }
}

pub(super) fn q_upend_symmetry(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    let star = pair.upend();
    for p in pair.complement().iter() {
        let ps = p.upend(n);
        sink.check(
            q_cond(pair, p).unwrap() == q_cond(&star, ps).unwrap(),
            || Violation::on(pair, "Q(pi, p) != Q(pi*, p*)").at(p),
        );
        sink.check(q_down(pair, p).unwrap() == q_up(&star, ps).unwrap(), || {
            Violation::on(pair, "Q-down(pi, p) != Q-up(pi*, p*)").at(p)
        });
        sink.check(
            prop_down(pair, p).unwrap() == prop_up(&star, ps).unwrap(),
            || Violation::on(pair, "P-down(pi, p) != P-up(pi*, p*)").at(p),
        );
    }
}

pub(super) fn strong_prop_symmetry(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    let (star, inv) = (pair.upend(), pair.invert());
    for p in pair.complement().iter() {
        let a = strong_prop_right(pair, p).unwrap();
        let b = strong_prop_left(&star, p.upend(n)).unwrap();
        let c = strong_prop_right(&inv, p.transpose()).unwrap();
        sink.check(a == b && b == c, || {
            Violation::on(
                pair,
                format!("right(pi,p) {a}, left(pi*,p*) {b}, right(pi^-1,p^-1) {c}"),
            )
            .at(p)
        });
    }
}

pub(super) fn critical_set(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    let c = crit(pair);
    for p in c.iter() {
        sink.check(pair.rank(p) == 1, || {
            Violation::on(pair, "critical point of rank != 1").at(p)
        });
    }
    let mut oracle = PointSet::empty(n);
    let level = pair.level_set();
    for t in pair.r_set().iter() {
        let m = pair.mutate(t).expect("t in R");
        oracle = oracle.union(&m.level_set().difference(&level));
    }
    sink.check(c == oracle, || {
        Violation::on(
            pair,
            format!("crit {c} != union of new level points {oracle}"),
        )
    });
    sink.check(crit(&pair.upend()) == c.upend(), || {
        Violation::on(pair, "crit(pi*) != crit(pi)*")
    });
    sink.check(crit(&pair.invert()) == c.transpose(), || {
        Violation::on(pair, "crit(pi^-1) != crit(pi)^-1")
    });
}

pub(super) fn lemma_prpdp(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    for p in pair.complement().iter() {
        let witness = |rows: &mut dyn Iterator<Item = usize>, col: usize| {
            rows.map(|l| Point::new(l, col))
                .any(|q| pair.in_level_set(q) && dw(pair, p, q) == 0 && dx(pair, p, q) > 0)
        };
        let d = prop_down(pair, p).unwrap();
        let exists = witness(&mut (p.i + 1..=n), down(pair, p).side.j);
        sink.check(d == exists, || {
            Violation::on(pair, format!("P-down {d}, lower witness {exists}")).at(p)
        });
        let u = prop_up(pair, p).unwrap();
        let exists = witness(&mut (0..p.i), up(pair, p).side.j);
        sink.check(u == exists, || {
            Violation::on(pair, format!("P-up {u}, upper witness {exists}")).at(p)
        });
        sink.check(!strong_prop_right(pair, p).unwrap() || d, || {
            Violation::on(pair, "right strong condition without P-down").at(p)
        });
        sink.check(!strong_prop_left(pair, p).unwrap() || u, || {
            Violation::on(pair, "left strong condition without P-up").at(p)
        });
    }
}

pub(super) fn remark_strong_prop(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for p in pair.complement().iter() {
        let one = pair.rank(p) == 1;
        let right = strong_prop_right(pair, p).unwrap();
        sink.check(right == (one && prop_down(pair, p).unwrap()), || {
            Violation::on(pair, "right strong condition != (rk = 1 and P-down)").at(p)
        });
        let left = strong_prop_left(pair, p).unwrap();
        sink.check(left == (one && prop_up(pair, p).unwrap()), || {
            Violation::on(pair, "left strong condition != (rk = 1 and P-up)").at(p)
        });
    }
}

type Step = fn(&PermPair, Point) -> NeighborFrame;

/// Structure around `p` when `P↓` (or `P↑`, if not `downward`) fails.
fn nitm(pair: &PermPair, sink: &mut Sink, downward: bool) {
    let n = pair.degree();
    let (fwd, back): (Step, Step) = if downward { (down, up) } else { (up, down) };
    let prop = |q: Point| {
        if downward {
            prop_down(pair, q)
        } else {
            prop_up(pair, q)
        }
    };
    for p in pair.complement().iter() {
        if prop(p).unwrap() {
            continue;
        }
        let f = fwd(pair, p);
        let target = f.target;
        if !target.in_restricted(n) {
            sink.push(
                Violation::on(
                    pair,
                    format!("target {target} leaves the restricted square"),
                )
                .at(p),
            );
            continue;
        }
        sink.check(fwd(pair, target).target == target, || {
            Violation::on(pair, format!("part 1: target {target} is not maximal")).at(p)
        });
        let rows: Vec<usize> = if downward {
            (p.i..=target.i).collect()
        } else {
            (target.i..=p.i).collect()
        };
        for l in rows {
            let q = Point::new(l, p.j);
            let rq = pair.rank(q);
            sink.check(rq >= pair.rank(p), || {
                Violation::on(pair, format!("part 2: rank at {q} below rank at p")).at(p)
            });
            if rq == pair.rank(p) {
                let g = fwd(pair, q);
                let ok =
                    g.target == target && g.side == Point::new(l, f.side.j) && !prop(q).unwrap();
                sink.check(ok, || {
                    Violation::on(
                        pair,
                        format!("part 2: equality at {q} without shared frame"),
                    )
                    .at(p)
                });
            }
        }
        sink.check(fwd(pair, target).side == f.corner, || {
            Violation::on(pair, "part 3: side of the target is not the corner").at(p)
        });
        let q = if downward {
            q_down(pair, p)
        } else {
            q_up(pair, p)
        }
        .unwrap();
        if q {
            let i2 = back(pair, target).target.i;
            let beyond = if downward { i2 < p.i } else { i2 > p.i };
            sink.check(beyond, || {
                Violation::on(
                    pair,
                    format!("part 4: opposite target row {i2} not beyond p"),
                )
                .at(p)
            });
        }
    }
}

pub(super) fn lemma_nitm(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    nitm(pair, sink, true);
}

pub(super) fn lemma_nitm2(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    nitm(pair, sink, false);
}

pub(super) fn lemma_maxsmlr_prime(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for t in pair.r_set().iter() {
        let m = pair.mutate(t).expect("t in R");
        for p in m.complement().iter() {
            let (before, after) = (down(pair, p).target.i, down(&m, p).target.i);
            sink.check(after >= before, || {
                Violation::on(
                    pair,
                    format!("down target row {after} after mutation < {before}"),
                )
                .at(p)
                .with(t)
            });
        }
    }
}

pub(super) fn lemma_maxsmlr(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for t in pair.r_set().iter() {
        let m = pair.mutate(t).expect("t in R");
        for p in m.complement().iter() {
            let (before, after) = (up(pair, p).target.i, up(&m, p).target.i);
            sink.check(after <= before, || {
                Violation::on(
                    pair,
                    format!("up target row {after} after mutation > {before}"),
                )
                .at(p)
                .with(t)
            });
        }
    }
}

pub(super) fn simptau(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for p in pair.complement().iter() {
        sink.check(!s_set(pair, p).is_empty(), || {
            Violation::on(pair, "S(p) is empty").at(p)
        });
        sink.check(!s_star_set(pair, p).is_empty(), || {
            Violation::on(pair, "S*(p) is empty").at(p)
        });
    }
}

pub(super) fn prop_main(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        if !q_failures(pair).is_empty() {
            sink.bump("non_smooth_pairs_failing_q");
        }
        return;
    }
    sink.bump("smooth");
    for v in check_prop_main(pair).expect("smooth") {
        sink.push(Violation::on(pair, v.clause).at(v.point));
    }
}

pub(super) fn prop_main1(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        return;
    }
    sink.bump("smooth");
    sink.add("critical_points", crit(pair).len() as u64);
    for v in check_prop_main1(pair).expect("smooth") {
        sink.push(Violation::on(pair, v.clause).at(v.point));
    }
}

pub(super) fn main_implies_influential(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        return;
    }
    sink.bump("smooth");
    if let Some(level) = staged_influence_failure(pair) {
        sink.push(Violation::on(
            pair,
            format!("rank level {level} not reached by two closure steps"),
        ));
    }
}
