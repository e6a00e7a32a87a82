use std::collections::HashSet;

use schub_core::influence::is_tight;
use schub_core::{smooth_patterns, tight_patterns, PermPair, Permutation, Point, Transposition};

use crate::enumerate::Universe;
use crate::report::Violation;
use crate::sweep::Sink;

pub(super) fn length_inversions(_: &Universe, w: &Permutation, sink: &mut Sink) {
    let n = w.degree();
    let line = w.to_vec();
    let inversions = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| line[a] > line[b])
        .count();
    sink.check(w.length() == inversions, || {
        Violation::on_perm(
            w,
            format!("length {} != {inversions} inversions", w.length()),
        )
    });
    let descents = Transposition::all(n)
        .filter(|&t| {
            let wt = w.right_multiply(t).expect("in range");
            wt != *w && wt.bruhat_leq(w).expect("same degree")
        })
        .count();
    sink.check(w.length() == descents, || {
        Violation::on_perm(
            w,
            format!("length {} != {descents} = #{{t : wt < w}}", w.length()),
        )
    });
    sink.check(w.inverse().inverse() == *w, || {
        Violation::on_perm(w, "inverse is not an involution")
    });
}

pub(super) fn rank_table(_: &Universe, w: &Permutation, sink: &mut Sink) {
    let n = w.degree();
    let rk = w.rank_table();
    for i in 0..=n {
        let ok = rk.get(0, i) == 0
            && rk.get(i, 0) == 0
            && rk.get(n, i) as usize == i
            && rk.get(i, n) as usize == i;
        sink.check(ok, || {
            Violation::on_perm(w, format!("boundary values wrong at index {i}"))
        });
    }
    for i in 1..=n {
        for j in 1..=n {
            let row_step = rk.get(i, j) as i32 - rk.get(i - 1, j) as i32;
            let col_step = rk.get(i, j) as i32 - rk.get(i, j - 1) as i32;
            let second = row_step - (rk.get(i, j - 1) as i32 - rk.get(i - 1, j - 1) as i32);
            let p = Point::new(i, j);
            sink.check(
                (0..=1).contains(&row_step) && (0..=1).contains(&col_step),
                || Violation::on_perm(w, "step outside {0,1}").at(p),
            );
            sink.check(
                (second == 1) == (w.at(i) == j) && (0..=1).contains(&second),
                || {
                    Violation::on_perm(
                        w,
                        format!("second difference {second} disagrees with graph"),
                    )
                    .at(p)
                },
            );
        }
    }
}

pub(super) fn rank_symmetry(_: &Universe, w: &Permutation, sink: &mut Sink) {
    let n = w.degree();
    let (rk, up, inv) = (
        w.rank_table(),
        w.upend().rank_table(),
        w.inverse().rank_table(),
    );
    for p in schub_core::rank::framed_square(n) {
        let expected = n as i64 - p.i as i64 - p.j as i64 + rk.at(p) as i64;
        sink.check(up.at(p.upend(n)) as i64 == expected, || {
            Violation::on_perm(w, "rk_{w*}(p*) != n - i - j + rk_w(p)").at(p)
        });
        sink.check(inv.at(p.transpose()) == rk.at(p), || {
            Violation::on_perm(w, "rk_{w^-1}(p^-1) != rk_w(p)").at(p)
        });
    }
}

pub(super) fn bruhat_cover_closure(u: &Universe, y: &Permutation, sink: &mut Sink) {
    let n = y.degree();
    let mut above: HashSet<Permutation> = HashSet::from([*y]);
    let mut stack = vec![*y];
    while let Some(v) = stack.pop() {
        let lv = v.length();
        for t in Transposition::all(n) {
            let vt = v.right_multiply(t).expect("in range");
            if vt.length() > lv && above.insert(vt) {
                stack.push(vt);
            }
        }
    }
    for (w, _) in u.iter() {
        let leq = y.bruhat_leq(w).expect("same degree");
        sink.check(leq == above.contains(w), || {
            Violation::new(
                *w,
                *y,
                format!("bruhat_leq = {leq} but cover closure disagrees"),
            )
        });
    }
}

fn contains_by_subsets(w: &Permutation, pattern: &Permutation) -> bool {
    let (n, k) = (w.degree(), pattern.degree());
    let line = w.to_vec();
    let pat = pattern.to_vec();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .any(|mask| {
            let sub: Vec<usize> = (0..n)
                .filter(|&b| mask >> b & 1 == 1)
                .map(|b| line[b])
                .collect();
            (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pat[a] < pat[b])))
        })
}

pub(super) fn pattern_oracle(_: &Universe, w: &Permutation, sink: &mut Sink) {
    for k in 1..=w.degree().min(6) {
        for pattern in Permutation::all(k) {
            let fast = w.contains_pattern(&pattern);
            sink.check(fast == contains_by_subsets(w, &pattern), || {
                Violation::on_perm(
                    w,
                    format!("contains_pattern({pattern}) = {fast} disagrees with subsets"),
                )
            });
        }
    }
}

pub(super) fn smooth_pattern(_: &Universe, w: &Permutation, sink: &mut Sink) {
    let pair = PermPair::new(*w, Permutation::identity(w.degree())).expect("e is below everything");
    let smooth = pair.is_smooth();
    let avoids = w.avoids_all(&smooth_patterns());
    sink.bump(if smooth { "smooth" } else { "non_smooth" });
    sink.check(smooth == avoids, || {
        Violation::on(
            &pair,
            format!("smooth = {smooth} but avoids 3412/4231 = {avoids}"),
        )
    });
}

pub(super) fn tight_pattern(_: &Universe, w: &Permutation, sink: &mut Sink) {
    let pair = PermPair::new(*w, Permutation::identity(w.degree())).expect("e is below everything");
    let tight = is_tight(&pair);
    let avoids = w.avoids_all(&tight_patterns());
    sink.bump(if tight { "tight" } else { "not_tight" });
    sink.check(tight == avoids, || {
        Violation::on(
            &pair,
            format!("tight = {tight} but pattern criterion = {avoids}"),
        )
    });
}
