use schub_core::rank::framed_square;
use schub_core::{PermPair, ReflectionSet, Transposition};

use crate::enumerate::Universe;
use crate::report::Violation;
use crate::sweep::Sink;

fn t(a: usize, b: usize) -> Transposition {
    Transposition::new(a, b).expect("distinct indices")
}

pub(super) fn basicne(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let (r, l) = (pair.r_set().len(), pair.length());
    sink.check(r >= l, || {
        Violation::on(pair, format!("#R = {r} < length {l}"))
    });
    let below = Transposition::all(pair.degree())
        .filter(|&t| {
            let xt = pair.x().right_multiply(t).expect("in range");
            xt.bruhat_leq(pair.w()).expect("same degree")
        })
        .count();
    sink.check(pair.tangent_dim() == below, || {
        Violation::on(
            pair,
            format!(
                "#R + l(x) = {} but #{{t : xt <= w}} = {below}",
                pair.tangent_dim()
            ),
        )
    });
}

pub(super) fn tijr(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let slow = pair.r_set_by_bruhat();
    for t in Transposition::all(pair.degree()) {
        let by_box = pair.has_reflection(t);
        sink.check(by_box == slow.contains(t), || {
            Violation::on(
                pair,
                format!("box criterion says {by_box}, Bruhat test disagrees"),
            )
            .with(t)
        });
    }
    sink.check(*pair.r_set() == slow, || {
        Violation::on(pair, "r_set differs from Bruhat oracle")
    });

    // Depends on x only: checked once per x, at w = w0.
    if *pair.w() != schub_core::Permutation::longest(pair.degree()) {
        return;
    }
    let x = *pair.x();
    for t in Transposition::all(pair.degree()) {
        if x.at(t.first()) > x.at(t.second()) {
            continue;
        }
        let up = PermPair::new(x.right_multiply(t).expect("in range"), x).expect("x < xt");
        for p in framed_square(pair.degree()) {
            let in_box = pair.in_mutation_box(t, p);
            sink.check(in_box == !up.in_level_set(p), || {
                Violation::on(pair, "complement of (xt, x) is not the box")
                    .at(p)
                    .with(t)
            });
        }
    }
}

pub(super) fn eq_1234(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    let x = pair.x();
    let r = pair.r_set();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    let shape = x.at(j) < x.at(i) && x.at(i) < x.at(l) && x.at(l) < x.at(k);
                    if shape && r.contains(t(i, k)) && r.contains(t(j, l)) {
                        sink.check(r.contains(t(i, l)), || {
                            Violation::on(
                                pair,
                                format!("t({i},{k}), t({j},{l}) in R but not t({i},{l})"),
                            )
                        });
                    }
                }
            }
        }
    }
}

pub(super) fn fact_sf(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let level = pair.level_set();
    for p in level.iter() {
        for q in level.iter().filter(|&q| p.lt(q)) {
            if pair.rk_w().diff(p, q).expect("in square") != 0 {
                continue;
            }
            let dx = pair.rk_x().diff(p, q).expect("in square");
            let corners = p.corners(q).iter().all(|&c| level.contains(c));
            sink.check(dx == 0 && corners, || {
                Violation::on(
                    pair,
                    format!("d_w(p, {q}) = 0 but d_x = {dx}, corners in X = {corners}"),
                )
                .at(p)
            });
        }
    }
}

pub(super) fn cover_characterization(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let r = pair.r_set();
    let lx = pair.x().length();
    for s in r.iter() {
        let (a, b) = (s.first(), s.second());
        let cover = pair.is_cover_move(s);
        let by_length = pair.x().right_multiply(s).expect("in range").length() == lx + 1;
        let no_middle = !(a + 1..b).any(|m| r.contains(t(a, m)) && r.contains(t(m, b)));
        sink.check(cover == by_length && cover == no_middle, || {
            Violation::on(
                pair,
                format!("cover move {cover}, length test {by_length}, no intermediate {no_middle}"),
            )
            .with(s)
        });
    }
    let empty = pair.rs_set().is_empty();
    sink.check(empty == (pair.w() == pair.x()), || {
        Violation::on(pair, "R* empty does not match w = x")
    });
}

pub(super) fn smooth_hereditary(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    // Checked along cover steps x ⋖ xt ≤ w.
    if !pair.is_smooth() {
        return;
    }
    for s in pair.rs_set().iter() {
        let up = pair.mutate(s).expect("s in R");
        sink.check(up.is_smooth(), || {
            Violation::on(pair, format!("smooth but (w, {}) is not", up.x())).with(s)
        });
    }
}

pub(super) fn pair_symmetry(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let n = pair.degree();
    let (up, inv) = (pair.upend(), pair.invert());
    sink.check(up.upend() == *pair && inv.invert() == *pair, || {
        Violation::on(pair, "upend or invert is not an involution")
    });
    sink.check(up.level_set() == pair.level_set().upend(), || {
        Violation::on(pair, "X_{pi*} != X_pi*")
    });
    sink.check(inv.level_set() == pair.level_set().transpose(), || {
        Violation::on(pair, "X_{pi^-1} != X_pi^-1")
    });
    sink.check(
        up.length() == pair.length() && inv.length() == pair.length(),
        || Violation::on(pair, "length not preserved"),
    );
    let conj: ReflectionSet = pair
        .r_set()
        .iter()
        .map(|s| s.conjugate_by_perm(pair.x()))
        .collect();
    sink.check(*inv.r_set() == conj, || {
        Violation::on(pair, "R_{pi^-1} != R_pi^x")
    });
    let upended: ReflectionSet = pair.r_set().iter().map(|s| s.upend(n)).collect();
    sink.check(*up.r_set() == upended, || {
        Violation::on(pair, "R_{pi*} != R_pi*")
    });
    let upended_rs: ReflectionSet = pair.rs_set().iter().map(|s| s.upend(n)).collect();
    sink.check(up.rs_set() == upended_rs, || {
        Violation::on(pair, "R*_{pi*} != R*_pi*")
    });
    sink.check(
        up.is_smooth() == pair.is_smooth() && inv.is_smooth() == pair.is_smooth(),
        || Violation::on(pair, "smoothness not symmetric"),
    );
}
