//! Directional neighbour operators on the level set of a pair and the
//! conditions built from them.
//!
//! Two families of operators live here:
//!
//! * [`next_down`] / [`next_up`] walk along the row of `p` to the nearest
//!   level-set column and then as far down (up) that column as the
//!   difference function of `w` stays zero. They drive the `P↓`, `P↑`, `Q`
//!   conditions.
//! * [`shift_frame`] takes, independently in each coordinate, the nearest
//!   level-set row and column strictly beyond `p`. It drives the stronger
//!   `→P` / `←P` conditions on the critical set.
//!
//! The operators are total on the restricted square; the conditions keep the
//! precondition `p ∈ Xᶜ_π`.

use crate::error::{Error, Result};
use crate::influence::closure_step;
use crate::pair::{PermPair, ReflectionSet};
use crate::rank::{framed_square, CollectPoints, Point, PointSet};

/// The result of [`next_down`] or [`next_up`] at `p = (i, j)`.
///
/// `side = (i, j')` is the nearest level-set point in the row of `p`,
/// `corner = (i', j')` and `target = (i', j)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NeighborFrame {
    pub p: Point,
    pub side: Point,
    pub target: Point,
    pub corner: Point,
}

/// `p⇁` and `p↽` of a point in `Xᶜ_π`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShiftFrame {
    pub p: Point,
    pub rd: Point,
    pub lu: Point,
}

fn require_restricted(pair: &PermPair, p: Point) -> Result<()> {
    if !p.in_restricted(pair.degree()) {
        return Err(Error::PointOutOfSquare {
            point: p,
            n: pair.degree(),
        });
    }
    Ok(())
}

fn require_complement(pair: &PermPair, p: Point) -> Result<()> {
    if !p.in_framed(pair.degree()) || pair.in_level_set(p) {
        return Err(Error::PointNotInComplement(p));
    }
    Ok(())
}

pub(crate) fn down_frame(pair: &PermPair, p: Point) -> NeighborFrame {
    let n = pair.degree();
    let col = (p.j + 1..=n)
        .find(|&k| pair.in_level_set(Point::new(p.i, k)))
        .expect("column n is in the level set");
    let rkw = pair.rk_w();
    let row = (p.i..=n)
        .rev()
        .find(|&l| {
            let q = Point::new(l, col);
            pair.in_level_set(q) && rkw.diff_unchecked(p, q) == 0
        })
        .expect("row i itself qualifies");
    NeighborFrame {
        p,
        side: Point::new(p.i, col),
        target: Point::new(row, p.j),
        corner: Point::new(row, col),
    }
}

pub(crate) fn up_frame(pair: &PermPair, p: Point) -> NeighborFrame {
    let col = (0..p.j)
        .rev()
        .find(|&k| pair.in_level_set(Point::new(p.i, k)))
        .expect("column 0 is in the level set");
    let rkw = pair.rk_w();
    let row = (0..=p.i)
        .find(|&l| {
            let q = Point::new(l, col);
            pair.in_level_set(q) && rkw.diff_unchecked(p, q) == 0
        })
        .expect("row i itself qualifies");
    NeighborFrame {
        p,
        side: Point::new(p.i, col),
        target: Point::new(row, p.j),
        corner: Point::new(row, col),
    }
}

/// `⇁p` together with `p→` and the combined corner.
pub fn next_down(pair: &PermPair, p: Point) -> Result<NeighborFrame> {
    require_restricted(pair, p)?;
    Ok(down_frame(pair, p))
}

/// `↽p` together with `p←` and the combined corner.
pub fn next_up(pair: &PermPair, p: Point) -> Result<NeighborFrame> {
    require_restricted(pair, p)?;
    Ok(up_frame(pair, p))
}

// Conditions evaluated leniently: a level-set point can never have a strict
// rank drop, so they are simply false there.
pub(crate) fn prop_down_raw(pair: &PermPair, p: Point) -> bool {
    let r = pair.rank(p);
    r > 0 && pair.rank(down_frame(pair, p).target) < r
}

pub(crate) fn prop_up_raw(pair: &PermPair, p: Point) -> bool {
    let r = pair.rank(p);
    r > 0 && pair.rank(up_frame(pair, p).target) < r
}

/// `P↓_π(p)`: `rk_π(⇁p) < rk_π(p)`.
pub fn prop_down(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    Ok(prop_down_raw(pair, p))
}

/// `P↑_π(p)`: `rk_π(↽p) < rk_π(p)`.
pub fn prop_up(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    Ok(prop_up_raw(pair, p))
}

/// `P↓_π(p)` via `d_x(p, corner) > 0`.
pub fn prop_down_by_diff(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    let frame = down_frame(pair, p);
    Ok(pair.rk_x().diff_unchecked(p, frame.corner) > 0)
}

/// `P↑_π(p)` via `d_x(p, corner) > 0`.
pub fn prop_up_by_diff(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    let frame = up_frame(pair, p);
    Ok(pair.rk_x().diff_unchecked(p, frame.corner) > 0)
}

pub(crate) fn q_down_raw(pair: &PermPair, p: Point) -> bool {
    prop_down_raw(pair, p) || prop_up_raw(pair, down_frame(pair, p).target)
}

pub(crate) fn q_up_raw(pair: &PermPair, p: Point) -> bool {
    prop_up_raw(pair, p) || prop_down_raw(pair, up_frame(pair, p).target)
}

/// `Q↓_π(p) = P↓_π(p) ∨ P↑_π(⇁p)`.
pub fn q_down(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    Ok(q_down_raw(pair, p))
}

/// `Q↑_π(p) = P↑_π(p) ∨ P↓_π(↽p)`.
pub fn q_up(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    Ok(q_up_raw(pair, p))
}

/// `Q_π(p) = Q↓_π(p) ∨ Q↑_π(p)`.
pub fn q_cond(pair: &PermPair, p: Point) -> Result<bool> {
    require_complement(pair, p)?;
    Ok(q_down_raw(pair, p) || q_up_raw(pair, p))
}

pub(crate) fn shift_frame_raw(pair: &PermPair, p: Point) -> ShiftFrame {
    let n = pair.degree();
    let in_x = |i, j| pair.in_level_set(Point::new(i, j));
    let down = (p.i + 1..=n)
        .find(|&l| in_x(l, p.j))
        .expect("row n is in X");
    let right = (p.j + 1..=n)
        .find(|&l| in_x(p.i, l))
        .expect("column n is in X");
    let up = (0..p.i)
        .rev()
        .find(|&l| in_x(l, p.j))
        .expect("row 0 is in X");
    let left = (0..p.j)
        .rev()
        .find(|&l| in_x(p.i, l))
        .expect("column 0 is in X");
    ShiftFrame {
        p,
        rd: Point::new(down, right),
        lu: Point::new(up, left),
    }
}

/// `p⇁` and `p↽` for `p ∈ Xᶜ_π`.
pub fn shift_frame(pair: &PermPair, p: Point) -> Result<ShiftFrame> {
    require_complement(pair, p)?;
    Ok(shift_frame_raw(pair, p))
}

/// `→P_π(p)`: `d_x(p, p⇁) = 1`.
pub fn strong_prop_right(pair: &PermPair, p: Point) -> Result<bool> {
    let frame = shift_frame(pair, p)?;
    Ok(pair.rk_x().diff_unchecked(p, frame.rd) == 1)
}

/// `←P_π(p)`: `d_x(p, p↽) = 1`.
pub fn strong_prop_left(pair: &PermPair, p: Point) -> Result<bool> {
    let frame = shift_frame(pair, p)?;
    Ok(pair.rk_x().diff_unchecked(p, frame.lu) == 1)
}

/// `→P_π(p)` as `rk_π(p) = 1`, `p⇁ ∈ X_π` and `d_w(p, p⇁) = 0`.
pub fn strong_prop_right_by_rank(pair: &PermPair, p: Point) -> Result<bool> {
    let frame = shift_frame(pair, p)?;
    Ok(pair.rank(p) == 1
        && pair.in_level_set(frame.rd)
        && pair.rk_w().diff_unchecked(p, frame.rd) == 0)
}

/// `←P_π(p)` as `rk_π(p) = 1`, `p↽ ∈ X_π` and `d_w(p, p↽) = 0`.
pub fn strong_prop_left_by_rank(pair: &PermPair, p: Point) -> Result<bool> {
    let frame = shift_frame(pair, p)?;
    Ok(pair.rank(p) == 1
        && pair.in_level_set(frame.lu)
        && pair.rk_w().diff_unchecked(p, frame.lu) == 0)
}

/// `crit_π = ⋃_{t ∈ R_π} X_{π_t} \ X_π`: the points of rank one lying in
/// the mutation box of some reflection.
pub fn critical_set(pair: &PermPair) -> PointSet {
    let r = pair.r_set();
    framed_square(pair.degree())
        .filter(|&p| pair.rank(p) == 1 && r.iter().any(|t| pair.in_mutation_box(t, p)))
        .collect_in(pair.degree())
}

/// `S_π(p) = {t_{a,b} ∈ R_π : ρ_x(a) ≤ p, ρ_x(b) ≰ p}`.
pub fn s_set(pair: &PermPair, p: Point) -> ReflectionSet {
    pair.r_set()
        .iter()
        .filter(|t| pair.point_x(t.first()).le(p) && !pair.point_x(t.second()).le(p))
        .collect()
}

/// `S*_π(p) = S_π(p) ∩ R*_π`.
pub fn s_star_set(pair: &PermPair, p: Point) -> ReflectionSet {
    s_set(pair, p)
        .iter()
        .filter(|&t| pair.is_cover_move(t))
        .collect()
}

/// One failed clause at one point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PointViolation {
    pub point: Point,
    pub clause: &'static str,
}

fn require_smooth(pair: &PermPair) -> Result<()> {
    if !pair.is_smooth() {
        return Err(Error::NotSmooth {
            w: *pair.w(),
            x: *pair.x(),
        });
    }
    Ok(())
}

/// Checks the three clauses of the strong conditions on the critical set of
/// a smooth pair:
///
/// 1. `→P(p) ∨ ←P(p)`;
/// 2. `d_w(p, p⇁) = 0 ⇒ →P(p)`;
/// 3. `d_w(p, p↽) = 0 ⇒ ←P(p)`.
pub fn check_prop_main1(pair: &PermPair) -> Result<Vec<PointViolation>> {
    require_smooth(pair)?;
    let mut out = Vec::new();
    let rkw = pair.rk_w();
    let rkx = pair.rk_x();
    for p in critical_set(pair).iter() {
        let frame = shift_frame_raw(pair, p);
        let right = rkx.diff_unchecked(p, frame.rd) == 1;
        let left = rkx.diff_unchecked(p, frame.lu) == 1;
        if !(right || left) {
            out.push(PointViolation {
                point: p,
                clause: "neither right nor left strong condition",
            });
        }
        if rkw.diff_unchecked(p, frame.rd) == 0 && !right {
            out.push(PointViolation {
                point: p,
                clause: "d_w(p, p_rd) = 0 without right strong condition",
            });
        }
        if rkw.diff_unchecked(p, frame.lu) == 0 && !left {
            out.push(PointViolation {
                point: p,
                clause: "d_w(p, p_lu) = 0 without left strong condition",
            });
        }
    }
    Ok(out)
}

/// Per-pair memo of both neighbour frames over the restricted square.
pub struct NeighborTable {
    n: usize,
    down: Vec<NeighborFrame>,
    up: Vec<NeighborFrame>,
}

impl NeighborTable {
    pub fn new(pair: &PermPair) -> Self {
        let n = pair.degree();
        let mut down = Vec::with_capacity((n + 1) * (n + 1));
        let mut up = Vec::with_capacity((n + 1) * (n + 1));
        for p in framed_square(n) {
            if p.in_restricted(n) {
                down.push(down_frame(pair, p));
                up.push(up_frame(pair, p));
            } else {
                let stay = NeighborFrame {
                    p,
                    side: p,
                    target: p,
                    corner: p,
                };
                down.push(stay);
                up.push(stay);
            }
        }
        NeighborTable { n, down, up }
    }

    #[inline]
    pub fn down(&self, p: Point) -> &NeighborFrame {
        &self.down[p.i * (self.n + 1) + p.j]
    }

    #[inline]
    pub fn up(&self, p: Point) -> &NeighborFrame {
        &self.up[p.i * (self.n + 1) + p.j]
    }

    fn prop_down(&self, pair: &PermPair, p: Point) -> bool {
        let r = pair.rank(p);
        r > 0 && pair.rank(self.down(p).target) < r
    }

    fn prop_up(&self, pair: &PermPair, p: Point) -> bool {
        let r = pair.rank(p);
        r > 0 && pair.rank(self.up(p).target) < r
    }

    pub fn q_cond(&self, pair: &PermPair, p: Point) -> bool {
        self.prop_down(pair, p)
            || self.prop_up(pair, p)
            || self.prop_up(pair, self.down(p).target)
            || self.prop_down(pair, self.up(p).target)
    }
}

/// Checks `Q_π(p)` at every `p ∈ Xᶜ_π` of a smooth pair.
pub fn check_prop_main(pair: &PermPair) -> Result<Vec<PointViolation>> {
    require_smooth(pair)?;
    Ok(q_failures(pair))
}

/// Points of `Xᶜ_π` where `Q_π` fails, for any pair.
pub fn q_failures(pair: &PermPair) -> Vec<PointViolation> {
    let table = NeighborTable::new(pair);
    pair.complement()
        .iter()
        .filter(|&p| !table.q_cond(pair, p))
        .map(|point| PointViolation {
            point,
            clause: "Q fails",
        })
        .collect()
}

/// Replays the induction that turns `Q` on `Xᶜ_π` into influentiality: with
/// `A = X_π` and `X^{≤i} = {p : rk_π(p) ≤ i}`, checks
/// `X^{≤i} ⊆ C_A(C_A(X^{≤i-1}))` for every `i ≥ 1`. Returns the first level
/// where the inclusion fails.
pub fn staged_influence_failure(pair: &PermPair) -> Option<usize> {
    let n = pair.degree();
    let level = pair.level_set();
    let below = |i: usize| {
        framed_square(n)
            .filter(|&p| pair.rank(p) as usize <= i)
            .collect_in(n)
    };
    let mut previous = level;
    for i in 1..=n {
        let next = below(i);
        let twice = closure_step(pair.w(), &level, &closure_step(pair.w(), &level, &previous));
        if !next.is_subset(&twice) {
            return Some(i);
        }
        previous = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn diagonal_pair_neighbors() {
        for n in 2..=4 {
            for w in Permutation::all(n) {
                let d = PermPair::diagonal(w);
                let inv = w.inverse();
                for p in crate::rank::restricted_square(n) {
                    let f = next_down(&d, p).unwrap();
                    assert_eq!(f.side, Point::new(p.i, p.j + 1));
                    // largest l ≥ i with no graph point in rows (i, l] at column j+1
                    let r = inv.at(p.j + 1);
                    let expected = if r > p.i { r - 1 } else { n };
                    assert_eq!(f.target, Point::new(expected, p.j), "{w} {p}");
                    let g = next_up(&d, p).unwrap();
                    assert_eq!(g.side, Point::new(p.i, p.j - 1));
                    // smallest l ≤ i with no graph point in rows (l, i] at column j
                    let r = inv.at(p.j);
                    let expected = if r <= p.i { r } else { 0 };
                    assert_eq!(g.target, Point::new(expected, p.j), "{w} {p}");
                }
            }
        }
    }

    #[test]
    fn same_row_neighbor_when_nothing_below() {
        let d = PermPair::diagonal(perm("1234"));
        // graph point (3,3) blocks the column below (2,2)
        let f = next_down(&d, Point::new(2, 2)).unwrap();
        assert_eq!(f.corner, Point::new(2, 3));
    }

    #[test]
    fn preconditions_enforced() {
        let p = PermPair::new(perm("321"), perm("123")).unwrap();
        assert!(next_down(&p, Point::new(0, 1)).is_err());
        assert!(next_down(&p, Point::new(3, 1)).is_err());
        let d = PermPair::diagonal(perm("321"));
        assert!(matches!(
            prop_down(&d, Point::new(1, 1)),
            Err(Error::PointNotInComplement(_))
        ));
        assert!(shift_frame(&d, Point::new(1, 1)).is_err());
        assert!(check_prop_main(&PermPair::new(perm("4231"), perm("1234")).unwrap()).is_err());
    }

    #[test]
    fn smooth_pair_satisfies_q() {
        let p = PermPair::new(perm("35142"), perm("21345")).unwrap();
        assert!(check_prop_main(&p).unwrap().is_empty());
        assert!(check_prop_main1(&p).unwrap().is_empty());
        for q in p.complement().iter() {
            assert!(q_cond(&p, q).unwrap());
        }
        assert!(staged_influence_failure(&p).is_none());
    }

    #[test]
    fn critical_set_of_diagonal_is_empty() {
        let d = PermPair::diagonal(perm("2413"));
        assert!(critical_set(&d).is_empty());
        assert!(check_prop_main1(&d).unwrap().is_empty());
    }

    #[test]
    fn rank_one_drop_gives_prop_down() {
        let p = PermPair::new(perm("21"), perm("12")).unwrap();
        let q = Point::new(1, 1);
        assert_eq!(p.rank(q), 1);
        assert!(prop_down(&p, q).unwrap());
        assert!(q_cond(&p, q).unwrap());
        let sf = shift_frame(&p, q).unwrap();
        assert_eq!((sf.rd, sf.lu), (Point::new(2, 2), Point::new(0, 0)));
    }
}
