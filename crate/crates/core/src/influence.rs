//! Essential sets, the closure operator `C_A^w`, influence sets and the
//! tight / influential predicates.

use crate::error::{Error, Result};
use crate::pair::PermPair;
use crate::perm::{Permutation, MAX_DEGREE};
use crate::rank::{restricted_square, CollectPoints, Point, PointSet, RankTable};

/// Fulton's essential set
/// `{(i,j) ∈ ▫ : w(i) ≤ j < w(i+1), w⁻¹(j) ≤ i < w⁻¹(j+1)}`.
pub fn essential_set(w: &Permutation) -> PointSet {
    let n = w.degree();
    let inv = w.inverse();
    restricted_square(n)
        .filter(|&Point { i, j }| {
            w.at(i) <= j && j < w.at(i + 1) && inv.at(j) <= i && i < inv.at(j + 1)
        })
        .collect_in(n)
}

/// `y ≤ w` decided by the rank conditions on `ess(w)` only.
pub fn leq_via_essential(y: &Permutation, w: &Permutation) -> Result<bool> {
    if y.degree() != w.degree() {
        return Err(Error::DegreeMismatch {
            left: y.degree(),
            right: w.degree(),
        });
    }
    Ok(rank_dominates_on(
        &y.rank_table(),
        &w.rank_table(),
        &essential_set(w),
    ))
}

/// `rk_y ≥ rk_w` on every point of `set`.
pub fn rank_dominates_on(rky: &RankTable, rkw: &RankTable, set: &PointSet) -> bool {
    set.iter().all(|p| rky.at(p) >= rkw.at(p))
}

#[inline]
fn qualifies(rkw: &RankTable, witnesses: &PointSet, current: &PointSet, p: Point) -> bool {
    witnesses.iter().any(|q| {
        p.comparable(q)
            && rkw.diff_unchecked(p, q) == 0
            && p.corners(q).iter().all(|&c| current.contains(c))
    })
}

/// One application of `C_A^w`:
/// `B ∪ {p : ∃ p' ∈ A, p ≍ p', d_w(p,p') = 0, corners(p,p') ⊂ B}`.
pub fn closure_step(w: &Permutation, a: &PointSet, b: &PointSet) -> PointSet {
    let rkw = w.rank_table();
    let n = w.degree();
    let mut out = *b;
    for p in crate::rank::framed_square(n) {
        if !b.contains(p) && qualifies(&rkw, a, b, p) {
            out.insert(p);
        }
    }
    out
}

/// The influence set `infl^w(A)`: the union of `A = A_0 ⊆ A_1 ⊆ …` with
/// `A_k = C_A^w(A_{k-1})`.
pub fn influence_set(w: &Permutation, a: &PointSet) -> PointSet {
    influence_set_with(&w.rank_table(), a)
}

/// [`influence_set`] with a precomputed rank table for `w`.
///
/// Worklist over newly added points: a point can only become eligible when
/// one of its corners joins the set, and both corners of `(p, p')` share a
/// row or a column with `p`.
pub fn influence_set_with(rkw: &RankTable, a: &PointSet) -> PointSet {
    let n = rkw.degree();
    let mut current = *a;
    let mut queue: Vec<Point> = Vec::new();
    for p in crate::rank::framed_square(n) {
        if !current.contains(p) && qualifies(rkw, a, &current, p) {
            current.insert(p);
            queue.push(p);
        }
    }
    while let Some(q) = queue.pop() {
        let row = (0..=n).map(|j| Point::new(q.i, j));
        let col = (0..=n).map(|i| Point::new(i, q.j));
        for p in row.chain(col) {
            if !current.contains(p) && qualifies(rkw, a, &current, p) {
                current.insert(p);
                queue.push(p);
            }
        }
    }
    current
}

/// `infl^w(X_π) = ◻`.
pub fn is_influential(pair: &PermPair) -> bool {
    let level = pair.level_set();
    influence_set_with(pair.rk_w(), &level).len() == (pair.degree() + 1).pow(2)
}

/// A witness `y` with `rk_y = rk_w` on `a` but `y ≰ w`, if one exists.
///
/// Depth-first over one-line prefixes of `y`: row `i` of `rk_y` is fixed by
/// `y(1..=i)`, so agreement on row `i` is checked as soon as `y(i)` is
/// placed. Agreement is only checked on `a ∩ ▫`; the frame always agrees.
pub fn tightness_witness(w: &Permutation, a: &PointSet) -> Option<Permutation> {
    let n = w.degree();
    let rkw = w.rank_table();
    let mut search = TightSearch {
        n,
        rkw: &rkw,
        a,
        prefix: [0; MAX_DEGREE],
        used: [false; MAX_DEGREE + 1],
        row: [0; MAX_DEGREE + 1],
    };
    search.descend(1, false)
}

struct TightSearch<'a> {
    n: usize,
    rkw: &'a RankTable,
    a: &'a PointSet,
    prefix: [usize; MAX_DEGREE],
    used: [bool; MAX_DEGREE + 1],
    row: [u8; MAX_DEGREE + 1],
}

impl TightSearch<'_> {
    fn descend(&mut self, i: usize, violated: bool) -> Option<Permutation> {
        let n = self.n;
        if i > n {
            if !violated {
                return None;
            }
            return Some(
                Permutation::from_oneline(&self.prefix[..n]).expect("prefix is a bijection"),
            );
        }
        for v in 1..=n {
            if self.used[v] {
                continue;
            }
            let saved = self.row;
            for j in v..=n {
                self.row[j] += 1;
            }
            let mut ok = true;
            let mut now_violated = violated;
            if i < n {
                for j in 1..n {
                    let ry = self.row[j];
                    let rw = self.rkw.get(i, j);
                    if ry < rw {
                        now_violated = true;
                    }
                    if ry != rw && self.a.contains(Point::new(i, j)) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.used[v] = true;
                self.prefix[i - 1] = v;
                let found = self.descend(i + 1, now_violated);
                self.used[v] = false;
                if found.is_some() {
                    self.row = saved;
                    return found;
                }
            }
            self.row = saved;
        }
        None
    }
}

/// `A` is tight with respect to `w`: every `y` agreeing with `w` on `A`
/// satisfies `y ≤ w`.
pub fn is_tight_set(w: &Permutation, a: &PointSet) -> bool {
    tightness_witness(w, a).is_none()
}

/// `X_π` is tight with respect to `w`.
pub fn is_tight(pair: &PermPair) -> bool {
    is_tight_set(pair.w(), &pair.level_set())
}

/// Like [`is_tight`] but returns the offending `y`.
pub fn tight_witness(pair: &PermPair) -> Option<Permutation> {
    tightness_witness(pair.w(), &pair.level_set())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn brute_witness(w: &Permutation, a: &PointSet) -> Option<Permutation> {
        let rkw = w.rank_table();
        Permutation::all(w.degree()).find(|y| {
            let rky = y.rank_table();
            a.iter().all(|p| rky.at(p) == rkw.at(p)) && !y.bruhat_leq(w).unwrap()
        })
    }

    #[test]
    fn essential_examples() {
        // y ≤ e forces y({1..i}) = {1..i} for every i
        assert_eq!(
            essential_set(&Permutation::identity(5)).to_string(),
            "{(1,1),(2,2),(3,3),(4,4)}"
        );
        assert_eq!(
            essential_set(&perm("35142")).to_string(),
            "{(1,3),(3,1),(3,3)}"
        );
        // w0: w(i) ≤ j < w(i+1) never holds since w0 decreases
        assert!(essential_set(&Permutation::longest(5)).is_empty());
        assert_eq!(essential_set(&perm("4231")).to_string(), "{(2,2)}");
    }

    #[test]
    fn closure_step_examples() {
        let w = perm("35142");
        let full = PointSet::framed(5);
        let some: PointSet = [Point::new(1, 1), Point::new(2, 3)]
            .into_iter()
            .collect_in(5);
        assert_eq!(closure_step(&w, &some, &full), full);
        assert_eq!(closure_step(&w, &PointSet::empty(5), &some), some);
        assert!(some.is_subset(&closure_step(&w, &some, &some)));
    }

    #[test]
    fn influence_examples() {
        let w = perm("35142");
        assert_eq!(influence_set(&w, &PointSet::framed(5)), PointSet::framed(5));
        assert!(influence_set(&w, &PointSet::empty(5)).is_empty());
        let p = PermPair::new(w, perm("21345")).unwrap();
        assert_eq!(influence_set(&w, &p.level_set()), PointSet::framed(5));
        assert!(is_influential(&p));
        assert!(is_tight(&p));
    }

    #[test]
    fn worklist_matches_iterated_steps() {
        for w in Permutation::all(4) {
            for x in Permutation::all(4) {
                let Ok(p) = PermPair::new(w, x) else { continue };
                let a = p.level_set();
                let mut b = a;
                loop {
                    let next = closure_step(&w, &a, &b);
                    if next == b {
                        break;
                    }
                    b = next;
                }
                assert_eq!(influence_set(&w, &a), b, "{p}");
            }
        }
    }

    #[test]
    fn dfs_witness_matches_brute_force() {
        for n in 1..=4 {
            for w in Permutation::all(n) {
                for x in Permutation::all(n) {
                    let Ok(p) = PermPair::new(w, x) else { continue };
                    let a = p.level_set();
                    let fast = tightness_witness(&w, &a);
                    let slow = brute_witness(&w, &a);
                    assert_eq!(fast.is_some(), slow.is_some(), "{p}");
                    if let Some(y) = fast {
                        let rky = y.rank_table();
                        assert!(a.iter().all(|q| rky.at(q) == p.rk_w().at(q)));
                        assert!(!y.bruhat_leq(&w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn diagonal_pair_is_tight_and_influential() {
        for w in Permutation::all(4) {
            let d = PermPair::diagonal(w);
            assert!(is_tight(&d));
            assert!(is_influential(&d));
        }
    }

    #[test]
    fn non_influential_pair_exists_in_s4() {
        let found = Permutation::all(4).any(|w| {
            Permutation::all(4).any(|x| PermPair::new(w, x).is_ok_and(|p| !is_influential(&p)))
        });
        assert!(found);
        let bad = PermPair::new(perm("4231"), Permutation::identity(4)).unwrap();
        assert!(!is_tight(&bad));
        assert!(!is_influential(&bad));
    }
}
