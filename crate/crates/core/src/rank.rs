//! Lattice points of the framed square `{0..n}²`, rank tables and the
//! difference function, plus a bitset of points.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

pub(crate) const STRIDE: usize = MAX_DEGREE + 1;
const CELLS: usize = STRIDE * STRIDE;
const WORDS: usize = CELLS.div_ceil(64);

/// A lattice point `(i, j)`: `i` indexes rows (positions), `j` columns
/// (values).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point {
    pub i: usize,
    pub j: usize,
}

impl Point {
    #[inline]
    pub const fn new(i: usize, j: usize) -> Self {
        Point { i, j }
    }

    /// Componentwise `self ≤ other`.
    #[inline]
    pub fn le(self, other: Point) -> bool {
        self.i <= other.i && self.j <= other.j
    }

    /// Strict in both coordinates: `self.i < other.i` and `self.j < other.j`.
    /// Not the strict order subordinate to [`Point::le`].
    #[inline]
    pub fn lt(self, other: Point) -> bool {
        self.i < other.i && self.j < other.j
    }

    /// `self ≍ other`: one is strictly below-right of the other.
    #[inline]
    pub fn comparable(self, other: Point) -> bool {
        self.lt(other) || other.lt(self)
    }

    /// The two remaining corners `(p.i, q.j)` and `(q.i, p.j)` of the box
    /// spanned by `p` and `q`.
    #[inline]
    pub fn corners(self, other: Point) -> [Point; 2] {
        [Point::new(self.i, other.j), Point::new(other.i, self.j)]
    }

    /// `p* = (n - i, n - j)`.
    #[inline]
    pub fn upend(self, n: usize) -> Point {
        Point::new(n - self.i, n - self.j)
    }

    /// `p⁻¹ = (j, i)`.
    #[inline]
    pub fn transpose(self) -> Point {
        Point::new(self.j, self.i)
    }

    #[inline]
    pub fn in_framed(self, n: usize) -> bool {
        self.i <= n && self.j <= n
    }

    #[inline]
    pub fn in_restricted(self, n: usize) -> bool {
        (1..n).contains(&self.i) && (1..n).contains(&self.j)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Every point of the framed square in row-major order.
pub fn framed_square(n: usize) -> impl Iterator<Item = Point> {
    (0..=n).flat_map(move |i| (0..=n).map(move |j| Point::new(i, j)))
}

/// Every point of the restricted square `{1..n-1}²` in row-major order.
pub fn restricted_square(n: usize) -> impl Iterator<Item = Point> {
    (1..n).flat_map(move |i| (1..n).map(move |j| Point::new(i, j)))
}

/// `rk_w(i, j) = #{u ≤ i : w(u) ≤ j}` on the framed square.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    n: u8,
    values: [u8; CELLS],
}

impl RankTable {
    pub fn of(w: &Permutation) -> Self {
        let n = w.degree();
        let mut values = [0u8; CELLS];
        for i in 1..=n {
            let wi = w.at(i);
            for j in 0..=n {
                values[i * STRIDE + j] = values[(i - 1) * STRIDE + j] + u8::from(wi <= j);
            }
        }
        RankTable { n: n as u8, values }
    }

    /// Pointwise difference `self - other`, which must be nonnegative.
    pub(crate) fn difference(&self, other: &RankTable) -> RankTable {
        let mut values = [0u8; CELLS];
        for (k, slot) in values.iter_mut().enumerate() {
            *slot = self.values[k] - other.values[k];
        }
        RankTable { n: self.n, values }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i <= self.degree() && j <= self.degree());
        self.values[i * STRIDE + j]
    }

    #[inline]
    pub fn at(&self, p: Point) -> u8 {
        self.get(p.i, p.j)
    }

    /// Subtracts one on the half-open box `[lo, hi)`.
    pub(crate) fn decrement_box(&mut self, lo: Point, hi: Point) {
        for i in lo.i..hi.i {
            for j in lo.j..hi.j {
                self.values[i * STRIDE + j] -= 1;
            }
        }
    }

    /// `self ≤ other` at every point of the restricted square.
    pub fn le_on_restricted(&self, other: &RankTable) -> bool {
        let n = self.degree();
        (1..n).all(|i| {
            let row = i * STRIDE;
            (1..n).all(|j| self.values[row + j] <= other.values[row + j])
        })
    }

    /// The difference function
    /// `rk(p) + rk(q) - rk(p.i, q.j) - rk(q.i, p.j)`.
    ///
    /// For `p ≤ q` it counts graph points in the half-open box `(p, q]`.
    pub fn diff(&self, p: Point, q: Point) -> Result<i32> {
        let n = self.degree();
        for point in [p, q] {
            if !point.in_framed(n) {
                return Err(Error::PointOutOfSquare { point, n });
            }
        }
        Ok(self.diff_unchecked(p, q))
    }

    #[inline]
    pub(crate) fn diff_unchecked(&self, p: Point, q: Point) -> i32 {
        self.at(p) as i32 + self.at(q) as i32
            - self.get(p.i, q.j) as i32
            - self.get(q.i, p.j) as i32
    }
}

impl fmt::Debug for RankTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        writeln!(f, "RankTable(n={n})")?;
        for i in 0..=n {
            let row: Vec<String> = (0..=n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A set of points of the framed square of a fixed degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    n: u8,
    bits: [u64; WORDS],
}

impl PointSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        PointSet {
            n: n as u8,
            bits: [0; WORDS],
        }
    }

    /// The whole framed square.
    pub fn framed(n: usize) -> Self {
        framed_square(n).collect_in(n)
    }

    pub fn restricted(n: usize) -> Self {
        restricted_square(n).collect_in(n)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    fn slot(p: Point) -> (usize, u64) {
        let k = p.i * STRIDE + p.j;
        (k / 64, 1u64 << (k % 64))
    }

    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        if !p.in_framed(self.degree()) {
            return false;
        }
        let (word, mask) = Self::slot(p);
        self.bits[word] & mask != 0
    }

    /// Inserts `p`, returning whether it was absent. Panics if `p` is outside
    /// the framed square.
    #[inline]
    pub fn insert(&mut self, p: Point) -> bool {
        assert!(p.in_framed(self.degree()), "{p} outside framed square");
        let (word, mask) = Self::slot(p);
        let fresh = self.bits[word] & mask == 0;
        self.bits[word] |= mask;
        fresh
    }

    pub fn remove(&mut self, p: Point) -> bool {
        if !p.in_framed(self.degree()) {
            return false;
        }
        let (word, mask) = Self::slot(p);
        let present = self.bits[word] & mask != 0;
        self.bits[word] &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.bits
            .iter()
            .zip(other.bits.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut out = *self;
        for (a, b) in out.bits.iter_mut().zip(other.bits.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut out = *self;
        for (a, b) in out.bits.iter_mut().zip(other.bits.iter()) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        let mut out = *self;
        for (a, b) in out.bits.iter_mut().zip(other.bits.iter()) {
            *a &= !b;
        }
        out
    }

    /// Row-major iteration.
    pub fn iter(&self) -> impl Iterator<Item = Point> + '_ {
        framed_square(self.degree()).filter(move |&p| self.contains(p))
    }

    pub fn map(&self, f: impl Fn(Point) -> Point) -> PointSet {
        self.iter().map(f).collect_in(self.degree())
    }

    pub fn upend(&self) -> PointSet {
        let n = self.degree();
        self.map(|p| p.upend(n))
    }

    pub fn transpose(&self) -> PointSet {
        self.map(Point::transpose)
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.iter().collect()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointSet(n={}, {self})", self.n)
    }
}

/// Collects points into a [`PointSet`] of a given degree.
pub trait CollectPoints {
    fn collect_in(self, n: usize) -> PointSet;
}

impl<I: Iterator<Item = Point>> CollectPoints for I {
    fn collect_in(self, n: usize) -> PointSet {
        let mut set = PointSet::empty(n);
        for p in self {
            set.insert(p);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn identity_rank_is_min() {
        let rk = Permutation::identity(5).rank_table();
        for p in framed_square(5) {
            assert_eq!(rk.at(p) as usize, p.i.min(p.j));
        }
    }

    #[test]
    fn rank_examples() {
        let rk = perm("35142").rank_table();
        assert_eq!(rk.get(3, 3), 2);
        assert_eq!(rk.get(5, 5), 5);
    }

    #[test]
    fn rank_table_invariants_exhaustive() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let rk = w.rank_table();
                for k in 0..=n {
                    assert_eq!(rk.get(0, k), 0);
                    assert_eq!(rk.get(k, 0), 0);
                    assert_eq!(rk.get(n, k) as usize, k);
                    assert_eq!(rk.get(k, n) as usize, k);
                }
                for i in 1..=n {
                    for j in 1..=n {
                        let down = rk.get(i, j) - rk.get(i - 1, j);
                        let right = rk.get(i, j) - rk.get(i, j - 1);
                        assert!(down <= 1 && right <= 1);
                        let second =
                            rk.get(i, j) as i32 - rk.get(i - 1, j) as i32 - rk.get(i, j - 1) as i32
                                + rk.get(i - 1, j - 1) as i32;
                        assert_eq!(second == 1, w.at(i) == j, "{w} at ({i},{j})");
                        assert!(second == 0 || second == 1);
                    }
                }
            }
        }
    }

    #[test]
    fn diff_examples() {
        let w = perm("35142");
        let rk = w.rank_table();
        let p = Point::new(0, 2);
        let q = Point::new(3, 5);
        // graph points (u, w(u)) with u ≤ 3 and w(u) > 2: (1,3), (2,5)
        assert_eq!(rk.diff(p, q).unwrap(), 2);
        assert_eq!(rk.diff(q, p).unwrap(), 2);
        assert_eq!(rk.diff(p, p).unwrap(), 0);
        let e = Permutation::identity(4).rank_table();
        assert_eq!(e.diff(Point::new(0, 0), Point::new(4, 4)).unwrap(), 4);
        assert!(rk.diff(Point::new(6, 0), p).is_err());
    }

    #[test]
    fn diff_counts_graph_points_in_box() {
        for w in Permutation::all(5) {
            let rk = w.rank_table();
            for p in framed_square(5) {
                for q in framed_square(5) {
                    assert_eq!(rk.diff_unchecked(p, q), rk.diff_unchecked(q, p));
                    if p.le(q) {
                        let count = (p.i + 1..=q.i)
                            .filter(|&u| p.j < w.at(u) && w.at(u) <= q.j)
                            .count();
                        assert_eq!(rk.diff_unchecked(p, q), count as i32);
                    }
                }
            }
        }
    }

    #[test]
    fn point_set_basics() {
        let mut s = PointSet::empty(4);
        assert!(s.insert(Point::new(1, 3)));
        assert!(!s.insert(Point::new(1, 3)));
        s.insert(Point::new(4, 0));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{(1,3),(4,0)}");
        assert!(s.is_subset(&PointSet::framed(4)));
        assert_eq!(PointSet::framed(4).len(), 25);
        assert_eq!(PointSet::restricted(4).len(), 9);
        assert!(!s.contains(Point::new(5, 0)));
        assert_eq!(s.upend().to_string(), "{(0,4),(3,1)}");
        assert!(s.remove(Point::new(1, 3)));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn comparability_is_strict() {
        let p = Point::new(1, 1);
        assert!(p.comparable(Point::new(2, 3)));
        assert!(p.comparable(Point::new(0, 0)));
        assert!(!p.comparable(Point::new(1, 3)));
        assert!(!p.comparable(Point::new(2, 0)));
        assert!(p.le(Point::new(1, 3)) && !p.lt(Point::new(1, 3)));
    }
}
