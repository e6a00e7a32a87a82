use schub_core::influence::{
    closure_step, essential_set, influence_set_with, is_influential, is_tight, rank_dominates_on,
    tight_witness,
};
use schub_core::rank::framed_square;
use schub_core::{PermPair, Permutation, PointSet};

use crate::enumerate::Universe;
use crate::report::Violation;
use crate::sweep::Sink;

pub(super) fn essential_bruhat(u: &Universe, w: &Permutation, sink: &mut Sink) {
    let ess = essential_set(w);
    let rkw = w.rank_table();
    for (y, rky) in u.iter() {
        let via_ess = rank_dominates_on(rky, &rkw, &ess);
        let leq = rkw.le_on_restricted(rky);
        sink.check(via_ess == leq, || {
            Violation::new(
                *w,
                *y,
                format!("essential criterion {via_ess}, Bruhat order {leq}"),
            )
        });
    }
}

pub(super) fn essential_minimal(u: &Universe, w: &Permutation, sink: &mut Sink) {
    let ess = essential_set(w);
    let rkw = w.rank_table();
    for q in ess.iter() {
        let mut fewer = ess;
        fewer.remove(q);
        let witness = u
            .iter()
            .any(|(_, rky)| rank_dominates_on(rky, &rkw, &fewer) && !rkw.le_on_restricted(rky));
        sink.check(witness, || {
            Violation::on_perm(w, "criterion still holds without this essential point").at(q)
        });
    }
}

pub(super) fn essential_sufficiency(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !essential_set(pair.w()).is_subset(&pair.level_set()) {
        return;
    }
    sink.bump("essential_in_level_set");
    if let Some(y) = tight_witness(pair) {
        sink.push(Violation::on(
            pair,
            format!("ess(w) in X but not tight, witness y = {y}"),
        ));
    }
}

pub(super) fn influence_fixed_point(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let w = pair.w();
    let level = pair.level_set();
    let infl = influence_set_with(pair.rk_w(), &level);
    sink.check(closure_step(w, &level, &infl) == infl, || {
        Violation::on(pair, "closure step moves the influence set")
    });
    let mut chain = level;
    loop {
        let next = closure_step(w, &level, &chain);
        if next == chain {
            break;
        }
        chain = next;
    }
    sink.check(chain == infl, || {
        Violation::on(pair, "worklist differs from iterated closure")
    });
    let full = infl == PointSet::framed(pair.degree());
    sink.check(full == is_influential(pair), || {
        Violation::on(pair, "is_influential disagrees")
    });
}

pub(super) fn corollary_scor(u: &Universe, w: &Permutation, sink: &mut Sink) {
    let n = w.degree();
    let rkw = w.rank_table();
    for (y, rky) in u.iter() {
        let mut agree = PointSet::empty(n);
        for p in framed_square(n) {
            if rky.at(p) == rkw.at(p) {
                agree.insert(p);
            }
        }
        let infl = influence_set_with(&rkw, &agree);
        let low = infl.iter().find(|&p| rky.at(p) < rkw.at(p));
        if let Some(p) = low {
            sink.push(Violation::new(*w, *y, "rk_y < rk_w inside the influence set").at(p));
        }
    }
}

pub(super) fn influential_implies_tight(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    let influential = is_influential(pair);
    let tight = is_tight(pair);
    sink.bump(match (influential, tight) {
        (true, _) => "influential",
        (false, true) => "tight_not_influential",
        (false, false) => "not_tight",
    });
    sink.check(!influential || tight, || {
        Violation::on(pair, "influential but not tight")
    });
}

pub(super) fn theorem_main(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        return;
    }
    sink.bump("smooth");
    if let Some(y) = tight_witness(pair) {
        sink.push(Violation::on(
            pair,
            format!("smooth but not tight, witness y = {y}"),
        ));
    }
}

pub(super) fn theorem_main_prime(_: &Universe, pair: &PermPair, sink: &mut Sink) {
    if !pair.is_smooth() {
        return;
    }
    sink.bump("smooth");
    sink.check(is_influential(pair), || {
        Violation::on(pair, "smooth but not influential")
    });
}
