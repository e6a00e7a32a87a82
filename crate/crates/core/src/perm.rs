//! Permutations of `{1..n}` in one-line notation, transpositions, and the
//! Bruhat order.
//!
//! Positions and values are one-based throughout. A permutation is a small
//! `Copy` value so that exhaustive sweeps over `S_n` never allocate per
//! element.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rank::RankTable;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 16;

/// An element of `S_n`, stored as its one-line notation `w(1) … w(n)`.
///
/// Degree 0 is allowed internally: it is what the reduction of an equal pair
/// `(w, w)` produces.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    oneline: [u8; MAX_DEGREE],
}

/// The transposition `t_{a,b}` with `a < b`, acting on positions by right
/// multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Transposition {
    a: u8,
    b: u8,
}

impl Transposition {
    /// Builds `t_{a,b}`; the endpoints are sorted, so `new(3, 1) == new(1, 3)`.
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b || a == 0 || b == 0 || a > MAX_DEGREE || b > MAX_DEGREE {
            return Err(Error::InvalidTransposition { a, b });
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Ok(Transposition {
            a: a as u8,
            b: b as u8,
        })
    }

    pub(crate) fn new_unchecked(a: usize, b: usize) -> Self {
        debug_assert!(a != b);
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Transposition {
            a: a as u8,
            b: b as u8,
        }
    }

    #[inline]
    pub fn first(self) -> usize {
        self.a as usize
    }

    #[inline]
    pub fn second(self) -> usize {
        self.b as usize
    }

    /// Whether the two transpositions have disjoint supports.
    pub fn commutes_with(self, other: Transposition) -> bool {
        self == other
            || (self.a != other.a && self.a != other.b && self.b != other.a && self.b != other.b)
    }

    /// `s · self · s⁻¹` for a transposition `s`, i.e. `self` with its
    /// endpoints relabelled by `s`.
    pub fn conjugate_by(self, s: Transposition) -> Transposition {
        let relabel = |k: u8| {
            if k == s.a {
                s.b
            } else if k == s.b {
                s.a
            } else {
                k
            }
        };
        Transposition::new_unchecked(relabel(self.a) as usize, relabel(self.b) as usize)
    }

    /// `x · self · x⁻¹ = t_{x(a), x(b)}`.
    pub fn conjugate_by_perm(self, x: &Permutation) -> Transposition {
        Transposition::new_unchecked(x.at(self.first()), x.at(self.second()))
    }

    /// Image under the upending involution: `t_{a,b} ↦ t_{n+1-b, n+1-a}`.
    pub fn upend(self, n: usize) -> Transposition {
        Transposition::new_unchecked(n + 1 - self.second(), n + 1 - self.first())
    }

    /// All transpositions of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Transposition> {
        (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| Transposition::new_unchecked(a, b)))
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({},{})", self.a, self.b)
    }
}

impl Permutation {
    /// Parses one-line notation. Rejects anything that is not a bijection of
    /// `{1..n}`.
    pub fn from_oneline(values: &[usize]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        if values.len() > MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                n: values.len(),
                max: MAX_DEGREE,
            });
        }
        let n = values.len();
        let mut seen = [false; MAX_DEGREE + 1];
        let mut oneline = [0u8; MAX_DEGREE];
        for (k, &v) in values.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotBijection(values.to_vec()));
            }
            seen[v] = true;
            oneline[k] = v as u8;
        }
        Ok(Permutation {
            n: n as u8,
            oneline,
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut oneline = [0u8; MAX_DEGREE];
        for (k, slot) in oneline.iter_mut().enumerate().take(n) {
            *slot = (k + 1) as u8;
        }
        Permutation {
            n: n as u8,
            oneline,
        }
    }

    /// The longest element `w0`, `w0(i) = n + 1 - i`.
    pub fn longest(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut oneline = [0u8; MAX_DEGREE];
        for (k, slot) in oneline.iter_mut().enumerate().take(n) {
            *slot = (n - k) as u8;
        }
        Permutation {
            n: n as u8,
            oneline,
        }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `w(i)` for a one-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        debug_assert!(i >= 1 && i <= self.degree());
        self.oneline[i - 1] as usize
    }

    pub fn oneline(&self) -> &[u8] {
        &self.oneline[..self.degree()]
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.oneline().iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.oneline()
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut oneline = [0u8; MAX_DEGREE];
        for (k, &v) in self.oneline().iter().enumerate() {
            oneline[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { n: self.n, oneline }
    }

    /// `w* = w0 · w · w0`, i.e. `w*(i) = n + 1 - w(n + 1 - i)`.
    pub fn upend(&self) -> Self {
        let n = self.degree();
        let mut oneline = [0u8; MAX_DEGREE];
        for (i, slot) in oneline.iter_mut().enumerate().take(n) {
            *slot = (n + 1 - self.oneline[n - 1 - i] as usize) as u8;
        }
        Permutation { n: self.n, oneline }
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        self.check_same_degree(other)?;
        let mut oneline = [0u8; MAX_DEGREE];
        for (k, slot) in oneline.iter_mut().enumerate().take(self.degree()) {
            *slot = self.oneline[other.oneline[k] as usize - 1];
        }
        Ok(Permutation { n: self.n, oneline })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let line = self.oneline();
        let mut count = 0;
        for (k, &a) in line.iter().enumerate() {
            count += line[k + 1..].iter().filter(|&&b| b < a).count();
        }
        count
    }

    pub fn rank_table(&self) -> RankTable {
        RankTable::of(self)
    }

    /// `w · t`: the one-line notation with positions `a` and `b` swapped.
    pub fn right_multiply(&self, t: Transposition) -> Result<Self> {
        if t.second() > self.degree() {
            return Err(Error::TranspositionOutOfRange {
                t,
                n: self.degree(),
            });
        }
        Ok(self.swap_positions(t))
    }

    #[inline]
    pub(crate) fn swap_positions(&self, t: Transposition) -> Self {
        let mut out = *self;
        out.oneline.swap(t.first() - 1, t.second() - 1);
        out
    }

    /// Bruhat order `self ≤ w`, compared on the restricted square.
    pub fn bruhat_leq(&self, w: &Permutation) -> Result<bool> {
        self.check_same_degree(w)?;
        Ok(w.rank_table().le_on_restricted(&self.rank_table()))
    }

    /// Whether `w` covers `self`.
    pub fn is_covered_by(&self, w: &Permutation) -> Result<bool> {
        self.check_same_degree(w)?;
        Ok(w.length() == self.length() + 1 && self.bruhat_leq(w)?)
    }

    /// Classical pattern containment: some subsequence of `self` is
    /// order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.degree();
        if k > self.degree() {
            return false;
        }
        let mut chosen = [0u8; MAX_DEGREE];
        self.extend_pattern(pattern.oneline(), 0, 0, &mut chosen)
    }

    // Backtracking: pattern entries 0..depth are matched by `chosen[..depth]`;
    // the next one must sit strictly right of the previous match and have the
    // same relative order against every earlier match.
    fn extend_pattern(
        &self,
        pattern: &[u8],
        depth: usize,
        start: usize,
        chosen: &mut [u8; MAX_DEGREE],
    ) -> bool {
        if depth == pattern.len() {
            return true;
        }
        let line = self.oneline();
        let remaining = pattern.len() - depth;
        for (pos, &v) in line
            .iter()
            .enumerate()
            .take(line.len() - remaining + 1)
            .skip(start)
        {
            let fits = (0..depth).all(|e| (chosen[e] < v) == (pattern[e] < pattern[depth]));
            if fits {
                chosen[depth] = v;
                if self.extend_pattern(pattern, depth + 1, pos + 1, chosen) {
                    return true;
                }
            }
        }
        false
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }

    /// Lexicographically next permutation of the same degree, if any.
    pub fn next_lex(&self) -> Option<Self> {
        let n = self.degree();
        let mut out = *self;
        let line = &mut out.oneline[..n];
        let pivot = (0..n.saturating_sub(1))
            .rev()
            .find(|&k| line[k] < line[k + 1])?;
        let succ = (pivot + 1..n).rev().find(|&k| line[k] > line[pivot])?;
        line.swap(pivot, succ);
        line[pivot + 1..].reverse();
        Some(out)
    }

    /// Every element of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        std::iter::successors(Some(Permutation::identity(n)), |w| w.next_lex())
    }

    fn check_same_degree(&self, other: &Permutation) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for &v in self.oneline() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline().iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Accepts either a compact digit string (`35142`, degree ≤ 9) or
/// comma-separated values (`10,2,3,4,5,6,7,8,9,1`).
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = || Error::Parse(s.to_string());
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>().map_err(|_| parse_err()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err))
                .collect::<Result<_>>()?
        };
        Permutation::from_oneline(&values)
    }
}
