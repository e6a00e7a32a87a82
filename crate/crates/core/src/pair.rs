//! Pairs `π = (w, x)` with `x ≤ w`: level sets, reflection sets, smoothness
//! and the two symmetries.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Transposition};
use crate::rank::{framed_square, CollectPoints, Point, PointSet, RankTable};

/// A sorted set of transpositions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ReflectionSet(Vec<Transposition>);

impl ReflectionSet {
    pub fn new() -> Self {
        ReflectionSet(Vec::new())
    }

    pub fn contains(&self, t: Transposition) -> bool {
        self.0.binary_search(&t).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Transposition> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Transposition] {
        &self.0
    }

    pub fn is_subset(&self, other: &ReflectionSet) -> bool {
        self.iter().all(|t| other.contains(t))
    }

    pub fn without(&self, t: Transposition) -> ReflectionSet {
        self.iter().filter(|&s| s != t).collect()
    }
}

impl FromIterator<Transposition> for ReflectionSet {
    fn from_iter<I: IntoIterator<Item = Transposition>>(iter: I) -> Self {
        let mut v: Vec<_> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ReflectionSet(v)
    }
}

impl fmt::Display for ReflectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|t| t.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for ReflectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReflectionSet{self}")
    }
}

/// A pair `(w, x)` with `x ≤ w` together with its rank tables and
/// `rk_π = rk_x - rk_w ≥ 0`.
#[derive(Clone)]
pub struct PermPair {
    w: Permutation,
    x: Permutation,
    rkw: RankTable,
    rkx: RankTable,
    rkpair: RankTable,
    reflections: OnceLock<ReflectionSet>,
}

impl PartialEq for PermPair {
    fn eq(&self, other: &Self) -> bool {
        self.w == other.w && self.x == other.x
    }
}

impl Eq for PermPair {}

impl fmt::Debug for PermPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermPair({}, {})", self.w, self.x)
    }
}

impl fmt::Display for PermPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w, self.x)
    }
}

impl PermPair {
    /// Builds `(w, x)`, rejecting `x ≰ w`.
    pub fn new(w: Permutation, x: Permutation) -> Result<Self> {
        if w.degree() != x.degree() {
            return Err(Error::DegreeMismatch {
                left: w.degree(),
                right: x.degree(),
            });
        }
        let rkw = w.rank_table();
        let rkx = x.rank_table();
        if !rkw.le_on_restricted(&rkx) {
            return Err(Error::NotComparable { w, x });
        }
        Ok(Self::from_tables(w, x, rkw, rkx))
    }

    /// [`PermPair::new`] with the rank tables of `w` and `x` supplied by the
    /// caller, for sweeps that reuse them across many pairs.
    pub fn with_tables(
        w: Permutation,
        x: Permutation,
        rkw: &RankTable,
        rkx: &RankTable,
    ) -> Result<Self> {
        if w.degree() != x.degree() {
            return Err(Error::DegreeMismatch {
                left: w.degree(),
                right: x.degree(),
            });
        }
        debug_assert!(*rkw == w.rank_table() && *rkx == x.rank_table());
        if !rkw.le_on_restricted(rkx) {
            return Err(Error::NotComparable { w, x });
        }
        Ok(Self::from_tables(w, x, rkw.clone(), rkx.clone()))
    }

    /// Builds a pair from tables already known to satisfy `rk_w ≤ rk_x`.
    pub(crate) fn from_tables(
        w: Permutation,
        x: Permutation,
        rkw: RankTable,
        rkx: RankTable,
    ) -> Self {
        let rkpair = rkx.difference(&rkw);
        PermPair {
            w,
            x,
            rkw,
            rkx,
            rkpair,
            reflections: OnceLock::new(),
        }
    }

    /// The equal pair `(w, w)`.
    pub fn diagonal(w: Permutation) -> Self {
        let rk = w.rank_table();
        Self::from_tables(w, w, rk.clone(), rk)
    }

    #[inline]
    pub fn w(&self) -> &Permutation {
        &self.w
    }

    #[inline]
    pub fn x(&self) -> &Permutation {
        &self.x
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.w.degree()
    }

    #[inline]
    pub fn rk_w(&self) -> &RankTable {
        &self.rkw
    }

    #[inline]
    pub fn rk_x(&self) -> &RankTable {
        &self.rkx
    }

    #[inline]
    pub fn rk_pair(&self) -> &RankTable {
        &self.rkpair
    }

    /// `rk_π(p)`.
    #[inline]
    pub fn rank(&self, p: Point) -> u8 {
        self.rkpair.at(p)
    }

    /// Whether `p ∈ X_π`, i.e. `rk_π(p) = 0`.
    #[inline]
    pub fn in_level_set(&self, p: Point) -> bool {
        self.rkpair.at(p) == 0
    }

    /// `ℓ(π) = ℓ(w) - ℓ(x)`.
    pub fn length(&self) -> usize {
        self.w.length() - self.x.length()
    }

    /// `X_π = {p : rk_π(p) = 0}`.
    pub fn level_set(&self) -> PointSet {
        framed_square(self.degree())
            .filter(|&p| self.in_level_set(p))
            .collect_in(self.degree())
    }

    /// `Xᶜ_π`, always inside the restricted square.
    pub fn complement(&self) -> PointSet {
        framed_square(self.degree())
            .filter(|&p| !self.in_level_set(p))
            .collect_in(self.degree())
    }

    /// `ρ_x(i) = (i, x(i))`.
    #[inline]
    pub fn point_x(&self, i: usize) -> Point {
        Point::new(i, self.x.at(i))
    }

    #[inline]
    pub fn point_w(&self, i: usize) -> Point {
        Point::new(i, self.w.at(i))
    }

    /// The box `[ρ_x(a), ρ_x(b))`, i.e. `Xᶜ_{(xt, x)}` when `x(a) < x(b)`.
    #[inline]
    pub fn mutation_box(&self, t: Transposition) -> (Point, Point) {
        (self.point_x(t.first()), self.point_x(t.second()))
    }

    /// Whether `p` lies in `[ρ_x(a), ρ_x(b))`.
    #[inline]
    pub fn in_mutation_box(&self, t: Transposition, p: Point) -> bool {
        let (lo, hi) = self.mutation_box(t);
        lo.le(p) && p.i < hi.i && p.j < hi.j
    }

    /// Whether `t ∈ R_π`, by the box criterion: `x(a) < x(b)` and
    /// `rk_π > 0` on `[ρ_x(a), ρ_x(b))`.
    pub fn has_reflection(&self, t: Transposition) -> bool {
        let (lo, hi) = self.mutation_box(t);
        if lo.j >= hi.j {
            return false;
        }
        (lo.i..hi.i).all(|i| (lo.j..hi.j).all(|j| self.rkpair.get(i, j) > 0))
    }

    /// `R_π = {t : x < xt ≤ w}`.
    pub fn r_set(&self) -> &ReflectionSet {
        self.reflections.get_or_init(|| {
            Transposition::all(self.degree())
                .filter(|&t| self.has_reflection(t))
                .collect()
        })
    }

    /// `R_π` computed from Bruhat comparisons only.
    pub fn r_set_by_bruhat(&self) -> ReflectionSet {
        let lx = self.x.length();
        Transposition::all(self.degree())
            .filter(|&t| {
                let xt = self.x.swap_positions(t);
                xt.length() > lx && xt.bruhat_leq(&self.w).expect("same degree")
            })
            .collect()
    }

    /// Whether `x ⋖ xt`: no position strictly between `a` and `b` carries a
    /// value strictly between `x(a)` and `x(b)`.
    pub fn is_cover_move(&self, t: Transposition) -> bool {
        let (lo, hi) = (self.x.at(t.first()), self.x.at(t.second()));
        lo < hi
            && (t.first() + 1..t.second()).all(|k| {
                let v = self.x.at(k);
                v < lo || v > hi
            })
    }

    /// `R*_π = {t ∈ R_π : x ⋖ xt}`.
    pub fn rs_set(&self) -> ReflectionSet {
        self.r_set()
            .iter()
            .filter(|&t| self.is_cover_move(t))
            .collect()
    }

    /// `#R_π = ℓ(π)`.
    pub fn is_smooth(&self) -> bool {
        self.r_set().len() == self.length()
    }

    /// `#{t : xt ≤ w} = #R_π + ℓ(x)`.
    pub fn tangent_dim(&self) -> usize {
        self.r_set().len() + self.x.length()
    }

    /// `π_t = (w, xt)` for `t ∈ R_π`. The rank tables are updated on the box
    /// `[ρ_x(a), ρ_x(b))` only.
    pub fn mutate(&self, t: Transposition) -> Result<PermPair> {
        if t.second() > self.degree() || !self.has_reflection(t) {
            return Err(Error::NotInReflectionSet(t));
        }
        Ok(self.mutate_unchecked(t))
    }

    pub(crate) fn mutate_unchecked(&self, t: Transposition) -> PermPair {
        let (lo, hi) = self.mutation_box(t);
        let mut rkx = self.rkx.clone();
        let mut rkpair = self.rkpair.clone();
        rkx.decrement_box(lo, hi);
        rkpair.decrement_box(lo, hi);
        PermPair {
            w: self.w,
            x: self.x.swap_positions(t),
            rkw: self.rkw.clone(),
            rkx,
            rkpair,
            reflections: OnceLock::new(),
        }
    }

    /// `(w, x · t)` without requiring `t ∈ R_π`; `None` when `x · t ≰ w`.
    pub fn with_x(&self, x: Permutation) -> Option<PermPair> {
        PermPair::new(self.w, x).ok()
    }

    /// `π* = (w*, x*)`.
    pub fn upend(&self) -> PermPair {
        PermPair::new(self.w.upend(), self.x.upend()).expect("upending preserves Bruhat order")
    }

    /// `π⁻¹ = (w⁻¹, x⁻¹)`.
    pub fn invert(&self) -> PermPair {
        PermPair::new(self.w.inverse(), self.x.inverse()).expect("inversion preserves Bruhat order")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pair(w: &str, x: &str) -> PermPair {
        PermPair::new(perm(w), perm(x)).unwrap()
    }

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn make_pair_examples() {
        let w = perm("35142");
        let d = PermPair::new(w, w).unwrap();
        assert_eq!(d.length(), 0);
        assert!(framed_square(5).all(|p| d.rank(p) == 0));
        let p = pair("35142", "21345");
        assert_eq!(p.length(), 5);
        assert!(matches!(
            PermPair::new(perm("21345"), perm("35142")),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn level_set_examples() {
        let w = perm("4132");
        assert_eq!(PermPair::diagonal(w).level_set(), PointSet::framed(4));
        let p = pair("35142", "21345");
        let inner = p.level_set().intersection(&PointSet::restricted(5));
        assert_eq!(inner.to_string(), "{(1,1),(1,3),(1,4),(3,1),(4,1)}");
        let frame = PointSet::framed(5).difference(&PointSet::restricted(5));
        assert!(frame.is_subset(&p.level_set()));
        assert!(p.complement().is_subset(&PointSet::restricted(5)));
    }

    #[test]
    fn r_set_examples() {
        let d = PermPair::diagonal(perm("231"));
        assert!(d.r_set().is_empty() && d.rs_set().is_empty());

        let p = pair("321", "123");
        assert_eq!(p.r_set().to_string(), "{t(1,2),t(1,3),t(2,3)}");
        assert!(p.is_smooth());
        assert_eq!(p.tangent_dim(), 3);
        assert_eq!(p.rs_set().to_string(), "{t(1,2),t(2,3)}");

        let q = pair("4231", "1234");
        assert_eq!(q.r_set().len(), 6);
        assert_eq!(q.length(), 5);
        assert!(!q.is_smooth());
        assert_eq!(q.tangent_dim(), 6);

        assert_eq!(d.tangent_dim(), perm("231").length());
        assert!(d.is_smooth());
        assert!(pair("35142", "21345").is_smooth());
    }

    #[test]
    fn mutate_examples() {
        let p = pair("321", "123");
        let full = p.mutate(t(1, 3)).unwrap();
        assert_eq!(*full.x(), perm("321"));
        assert_eq!(full.length(), 0);
        let partial = p.mutate(t(1, 2)).unwrap();
        assert_eq!(*partial.x(), perm("213"));
        assert_eq!(partial.length(), 2);
        let q = pair("213", "123");
        assert!(matches!(
            q.mutate(t(2, 3)),
            Err(Error::NotInReflectionSet(_))
        ));
    }

    #[test]
    fn mutate_matches_fresh_tables() {
        for w in Permutation::all(5) {
            for x in Permutation::all(5) {
                let Ok(p) = PermPair::new(w, x) else { continue };
                for s in p.r_set().iter() {
                    let m = p.mutate(s).unwrap();
                    let fresh = PermPair::new(w, x.swap_positions(s)).unwrap();
                    assert_eq!(m.rk_x(), fresh.rk_x());
                    assert_eq!(m.rk_pair(), fresh.rk_pair());
                    assert!(m.length() < p.length());
                }
            }
        }
    }

    #[test]
    fn symmetries_are_involutions() {
        let p = pair("35142", "21345");
        assert_eq!(p.upend().upend(), p);
        assert_eq!(p.invert().invert(), p);
        assert_eq!(p.upend().level_set(), p.level_set().upend());
        assert_eq!(p.invert().level_set(), p.level_set().transpose());
    }
}
