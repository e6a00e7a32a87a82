use schub_core::neighbor::{critical_set, s_set, shift_frame, strong_prop_left, strong_prop_right};
use schub_core::rank::framed_square;
use schub_core::reduction::{
    basic_case_mismatches, gasharov_map, is_reduced, is_t_minimal, minimal_shape_pair, try_reduce,
    MinimalShape, Projected, Reduction,
};
use schub_core::{PermPair, Permutation, Point, ReflectionSet};

use crate::enumerate::Universe;
use crate::report::Violation;
use crate::sweep::Sink;

fn reduction_of(pair: &PermPair, sink: &mut Sink) -> Option<Reduction> {
    match try_reduce(pair) {
        Ok(r) => Some(r),
        Err(e) => {
            sink.push(Violation::on(pair, format!("reduction failed: {e}")));
            None
        }
    }
}

pub(super) fn elem_1(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    sink.check(red.target().degree() == red.rows().len(), || {
        Violation::on(
            pair,
            format!(
                "reduced degree {} != #I = {}",
                red.target().degree(),
                red.rows().len()
            ),
        )
    });
    let mut w_cols: Vec<usize> = red.rows().iter().map(|&i| pair.w().at(i)).collect();
    w_cols.sort_unstable();
    sink.check(w_cols == red.cols(), || Violation::on(pair, "w(I) != x(I)"));
    for i in (1..=pair.degree()).filter(|i| !red.rows().contains(i)) {
        let p = pair.point_x(i);
        sink.check(p == pair.point_w(i) && pair.in_level_set(p), || {
            Violation::on(
                pair,
                format!("inactive row {i} is not a common level-set graph point"),
            )
            .at(p)
        });
    }
}

pub(super) fn elem_2(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let (a, b) = (pair.length(), red.target().length());
    sink.check(a == b, || {
        Violation::on(pair, format!("length {a} but reduced length {b}"))
    });
}

pub(super) fn elem_3(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    for p in framed_square(pair.degree()) {
        let (a, b) = (pair.rank(p), red.target().rank(red.project_point(p)));
        sink.check(a == b, || {
            Violation::on(pair, format!("rk {a} but reduced rk {b}")).at(p)
        });
    }
}

pub(super) fn elem_4(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let target = red.target();
    let points: Vec<Point> = framed_square(pair.degree()).collect();
    for &p in &points {
        let pp = red.project_point(p);
        for &q in points.iter().filter(|&&q| p.le(q)) {
            let qq = red.project_point(q);
            let dw = pair.rk_w().diff(p, q).expect("in square");
            let dw_red = target.rk_w().diff(pp, qq).expect("in square");
            sink.check(dw >= dw_red, || {
                Violation::on(pair, format!("d_w(p, {q}) = {dw} < reduced {dw_red}")).at(p)
            });
            let dpi = pair.rk_pair().diff(p, q).expect("in square");
            let dpi_red = target.rk_pair().diff(pp, qq).expect("in square");
            sink.check(dpi == dpi_red, || {
                Violation::on(pair, format!("d_pi(p, {q}) = {dpi} but reduced {dpi_red}")).at(p)
            });
        }
    }
}

pub(super) fn elem_5(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let mut image = Vec::new();
    for t in pair.r_set().iter() {
        match red.project_transposition(t) {
            Projected::Reflection(s) => image.push(s),
            Projected::Identity => {
                sink.push(Violation::on(pair, "reflection projects to the identity").with(t))
            }
        }
    }
    let set: ReflectionSet = image.iter().copied().collect();
    sink.check(set.len() == image.len(), || {
        Violation::on(pair, "projection of R is not injective")
    });
    sink.check(set == *red.target().r_set(), || {
        Violation::on(pair, "projection of R is not R of the reduction")
    });
}

pub(super) fn elem_6(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    for t in pair.r_set().iter() {
        let Projected::Reflection(s) = red.project_transposition(t) else {
            sink.push(Violation::on(pair, "reflection projects to the identity").with(t));
            continue;
        };
        let (m, mr) = (pair.mutate(t).expect("t in R"), red.target().mutate(s));
        let Ok(mr) = mr else {
            sink.push(Violation::on(pair, format!("{s} not in reduced R")).with(t));
            continue;
        };
        for p in framed_square(pair.degree()) {
            let (a, b) = (m.in_level_set(p), mr.in_level_set(red.project_point(p)));
            sink.check(a == b, || {
                Violation::on(pair, format!("in X after mutation {a}, reduced {b}"))
                    .at(p)
                    .with(t)
            });
        }
    }
}

pub(super) fn elem_7(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let (a, b) = (pair.is_smooth(), red.target().is_smooth());
    sink.check(a == b, || {
        Violation::on(pair, format!("smooth {a}, reduction smooth {b}"))
    });
}

pub(super) fn elem_8(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    sink.check(is_reduced(red.target()), || {
        Violation::on(
            pair,
            format!(
                "reduction ({}, {}) is not reduced",
                red.target().w(),
                red.target().x()
            ),
        )
    });
}

pub(super) fn elem_9(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let (c, cr) = (critical_set(pair), critical_set(red.target()));
    for p in framed_square(pair.degree()) {
        let (a, b) = (c.contains(p), cr.contains(red.project_point(p)));
        sink.check(a == b, || {
            Violation::on(pair, format!("critical {a}, reduced critical {b}")).at(p)
        });
    }
}

pub(super) fn elem_10(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    for p in pair.complement().iter() {
        let f = shift_frame(pair, p).expect("p in the complement");
        let Ok(g) = shift_frame(red.target(), red.project_point(p)) else {
            sink.push(Violation::on(pair, "projected point not in the reduced complement").at(p));
            continue;
        };
        let (rd, lu) = (red.project_point(f.rd), red.project_point(f.lu));
        sink.check(g.rd == rd && g.lu == lu, || {
            Violation::on(
                pair,
                format!(
                    "reduced frame ({}, {}) != projected ({rd}, {lu})",
                    g.rd, g.lu
                ),
            )
            .at(p)
        });
    }
}

pub(super) fn lemma_redred(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let Some(red) = reduction_of(pair, sink) else {
        return;
    };
    let target = red.target();
    for p in pair.complement().iter().filter(|&p| pair.rank(p) == 1) {
        let pp = red.project_point(p);
        let (f, g) = (
            shift_frame(pair, p).unwrap(),
            shift_frame(target, pp).unwrap(),
        );
        let zero =
            |pr: &PermPair, a: Point, b: Point| pr.rk_w().diff(a, b).expect("in square") == 0;
        let pairs = [
            (
                "right",
                strong_prop_right(pair, p).unwrap(),
                strong_prop_right(target, pp).unwrap(),
            ),
            (
                "left",
                strong_prop_left(pair, p).unwrap(),
                strong_prop_left(target, pp).unwrap(),
            ),
            (
                "d_w(p, rd) = 0",
                zero(pair, p, f.rd),
                zero(target, pp, g.rd),
            ),
            (
                "d_w(p, lu) = 0",
                zero(pair, p, f.lu),
                zero(target, pp, g.lu),
            ),
        ];
        for (what, a, b) in pairs {
            sink.check(a == b, || {
                Violation::on(pair, format!("{what}: {a}, reduced {b}")).at(p)
            });
        }
    }
}

pub(super) fn fact_betii(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let r = pair.r_set();
    for i in 1..=pair.degree() {
        let p = pair.point_x(i);
        if pair.in_level_set(p) {
            continue;
        }
        let forward = r.iter().any(|t| t.first() == i);
        let either = forward || r.iter().any(|t| t.second() == i);
        if !forward {
            sink.bump("only_backward_reflection");
        }
        sink.check(either, || {
            Violation::on(pair, format!("row {i} has no reflection")).at(p)
        });
    }
}

pub(super) fn fact_redec(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if pair.degree() == 0 || !is_reduced(pair) {
        return;
    }
    sink.bump("reduced");
    let x = pair.x();
    let prefix = 1
        + (1..x.degree())
            .take_while(|&i| x.at(i) > x.at(i + 1))
            .count();
    for i in 1..=prefix {
        sink.check(pair.w().at(i) > x.at(i), || {
            Violation::on(
                pair,
                format!("w({i}) <= x({i}) inside the decreasing prefix of length {prefix}"),
            )
        });
    }
}

pub(super) fn gasharov_injective(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for tp in pair.r_set().iter() {
        let phi = gasharov_map(pair, tp).expect("t' in R");
        let rest = pair.r_set().without(tp);
        sink.check(phi.image().is_subset(&rest), || {
            Violation::on(pair, "image leaves R minus t'").with(tp)
        });
        sink.check(phi.is_injective(), || {
            Violation::on(pair, "map is not injective").with(tp)
        });
    }
}

pub(super) fn gasharov_smoothness(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let smooth = pair.is_smooth();
    for tp in pair.rs_set().iter() {
        let phi = gasharov_map(pair, tp).expect("t' in R");
        let onto = phi.image() == pair.r_set().without(tp);
        let next = pair.mutate(tp).expect("t' in R").is_smooth();
        sink.check(smooth == (onto && next), || {
            Violation::on(
                pair,
                format!("smooth {smooth}, onto {onto}, mutation smooth {next}"),
            )
            .with(tp)
        });
    }
}

pub(super) fn gasharov_s_transport(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    for tp in pair.rs_set().iter() {
        let m = pair.mutate(tp).expect("t' in R");
        let phi = gasharov_map(pair, tp).expect("t' in R");
        for p in pair.complement().iter() {
            let s = s_set(pair, p);
            if s.contains(tp) {
                continue;
            }
            if m.in_level_set(p) {
                sink.push(
                    Violation::on(pair, "t' not in S(p) but p is in X of the mutation")
                        .at(p)
                        .with(tp),
                );
                continue;
            }
            for t in s_set(&m, p).iter() {
                let image = phi.apply(t).expect("t in the domain");
                sink.check(s.contains(image), || {
                    Violation::on(pair, format!("{t} maps to {image} outside S(p)"))
                        .at(p)
                        .with(tp)
                });
            }
        }
    }
}

pub(super) fn corollary_smth(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        return;
    }
    for tp in pair.rs_set().iter() {
        let m = pair.mutate(tp).expect("t' in R");
        for t in pair.r_set().iter().filter(|&t| t != tp) {
            let ok = m.r_set().contains(t) || m.r_set().contains(t.conjugate_by(tp));
            sink.check(ok, || {
                Violation::on(
                    pair,
                    format!("neither {t} nor its conjugate lies in R after {tp}"),
                )
                .with(tp)
            });
        }
    }
}

pub(super) fn classification_pairs(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if pair.degree() == 0 || !is_reduced(pair) {
        return;
    }
    for t in pair.r_set().iter() {
        if !is_t_minimal(pair, t).expect("t in R") {
            continue;
        }
        sink.bump("reduced_t_minimal");
        match MinimalShape::of(pair, t) {
            Err(e) => {
                sink.push(Violation::on(pair, format!("shape constraint fails: {e}")).with(t))
            }
            Ok(shape) => {
                let built = minimal_shape_pair(&shape);
                sink.check(built.as_ref().is_ok_and(|b| b == pair), || {
                    Violation::on(pair, format!("differs from the shape pair of {shape}")).with(t)
                });
            }
        }
    }
}

fn shape_pair(shape: &MinimalShape, sink: &mut Sink) -> Option<PermPair> {
    match minimal_shape_pair(shape) {
        Ok(p) => Some(p),
        Err(e) => {
            let e0 = Permutation::identity(shape.n);
            sink.push(Violation::new(e0, e0, format!("{shape}: {e}")));
            None
        }
    }
}

pub(super) fn classification_shapes(shape: &MinimalShape, sink: &mut Sink) {
    let Some(pair) = shape_pair(shape, sink) else {
        return;
    };
    let t = shape.reflection();
    let minimal = is_t_minimal(&pair, t).unwrap_or(false);
    sink.check(is_reduced(&pair) && minimal, || {
        Violation::on(&pair, format!("{shape}: not reduced and t-minimal"))
    });
}

pub(super) fn shape_footnote(shape: &MinimalShape, sink: &mut Sink) {
    let Some(pair) = shape_pair(shape, sink) else {
        return;
    };
    let t = shape.reflection();
    let minimal = is_t_minimal(&pair, t).unwrap_or(false);
    let (smooth, reduced) = (pair.is_smooth(), is_reduced(&pair));
    sink.check(smooth && reduced && minimal, || {
        Violation::on(
            &pair,
            format!("{shape}: smooth {smooth}, reduced {reduced}, t-minimal {minimal}"),
        )
    });
}

pub(super) fn lemma_basicbasic(shape: &MinimalShape, sink: &mut Sink) {
    let Some(pair) = shape_pair(shape, sink) else {
        return;
    };
    match basic_case_mismatches(shape) {
        Err(e) => sink.push(Violation::on(&pair, format!("{shape}: {e}"))),
        Ok(failures) => {
            for f in failures {
                sink.push(Violation::on(&pair, format!("{shape}: {f}")));
            }
        }
    }
}
