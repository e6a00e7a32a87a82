//! Reduction of a pair to the rows taking part in its reflections,
//! Gasharov's map, `t`-minimality, and the explicit family of minimal
//! reduced pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::neighbor::{shift_frame_raw, ShiftFrame};
use crate::pair::{PermPair, ReflectionSet};
use crate::perm::{Permutation, Transposition};
use crate::rank::{framed_square, CollectPoints, Point, PointSet};

/// `π_S(i) = #{s ∈ S : s ≤ i}` for `i ∈ 0..=n`, with `S` sorted.
fn monotone_projection(set: &[usize], n: usize) -> Vec<usize> {
    let mut out = vec![0; n + 1];
    let mut count = 0;
    for (i, slot) in out.iter_mut().enumerate() {
        if set.binary_search(&i).is_ok() {
            count += 1;
        }
        *slot = count;
    }
    out
}

/// Image of a transposition under the row projection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Projected {
    Reflection(Transposition),
    Identity,
}

/// A pair together with its reduction.
#[derive(Clone, Debug)]
pub struct Reduction {
    source: PermPair,
    target: PermPair,
    rows: Vec<usize>,
    cols: Vec<usize>,
    pi_rows: Vec<usize>,
    pi_cols: Vec<usize>,
}

/// The rows `I` that are an endpoint of some reflection of `pair`.
pub fn active_rows(pair: &PermPair) -> Vec<usize> {
    let mut active = vec![false; pair.degree() + 1];
    for t in pair.r_set().iter() {
        active[t.first()] = true;
        active[t.second()] = true;
    }
    (1..=pair.degree()).filter(|&i| active[i]).collect()
}

/// Whether every row takes part in some reflection.
pub fn is_reduced(pair: &PermPair) -> bool {
    active_rows(pair).len() == pair.degree()
}

/// Computes `I`, `J = x(I)` and the reduced pair
/// `(π_J ∘ w ∘ σ_I, π_J ∘ x ∘ σ_I)`.
///
/// Fails only if the projected one-line forms are not permutations or do
/// not form a pair, which would contradict `w(I) = x(I)`.
pub fn try_reduce(pair: &PermPair) -> std::result::Result<Reduction, String> {
    let n = pair.degree();
    let rows = active_rows(pair);
    let mut cols: Vec<usize> = rows.iter().map(|&i| pair.x().at(i)).collect();
    cols.sort_unstable();
    let pi_rows = monotone_projection(&rows, n);
    let pi_cols = monotone_projection(&cols, n);
    let m = rows.len();
    let target = if m == 0 {
        PermPair::diagonal(Permutation::identity(0))
    } else {
        let project = |perm: &Permutation| -> Vec<usize> {
            rows.iter().map(|&i| pi_cols[perm.at(i)]).collect()
        };
        let w = Permutation::from_oneline(&project(pair.w()))
            .map_err(|e| format!("projected w is not a permutation: {e}"))?;
        let x = Permutation::from_oneline(&project(pair.x()))
            .map_err(|e| format!("projected x is not a permutation: {e}"))?;
        PermPair::new(w, x).map_err(|e| format!("projected pair invalid: {e}"))?
    };
    Ok(Reduction {
        source: pair.clone(),
        target,
        rows,
        cols,
        pi_rows,
        pi_cols,
    })
}

/// [`try_reduce`], panicking on the (impossible) malformed case.
pub fn reduce(pair: &PermPair) -> Reduction {
    try_reduce(pair).expect("reduction of a pair is a pair")
}

impl Reduction {
    pub fn source(&self) -> &PermPair {
        &self.source
    }

    pub fn target(&self) -> &PermPair {
        &self.target
    }

    /// `I`.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// `J = x(I)`, sorted.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    /// `σ_I(k)`, one-based.
    pub fn sigma(&self, k: usize) -> usize {
        self.rows[k - 1]
    }

    /// `(π_I(i), π_J(j))`.
    pub fn project_point(&self, p: Point) -> Point {
        Point::new(self.pi_rows[p.i], self.pi_cols[p.j])
    }

    pub fn project_transposition(&self, t: Transposition) -> Projected {
        let a = self.pi_rows[t.first()];
        let b = self.pi_rows[t.second()];
        if a == b {
            Projected::Identity
        } else {
            Projected::Reflection(Transposition::new_unchecked(a, b))
        }
    }
}

/// Every reflection of `R_π` shares its first endpoint with `t` or its second
/// endpoint with `t`.
pub fn is_t_minimal(pair: &PermPair, t: Transposition) -> Result<bool> {
    if !pair.r_set().contains(t) {
        return Err(Error::NotInReflectionSet(t));
    }
    Ok(is_t_minimal_unchecked(pair, t))
}

fn is_t_minimal_unchecked(pair: &PermPair, t: Transposition) -> bool {
    pair.r_set()
        .iter()
        .all(|s| s.first() == t.first() || s.second() == t.second())
}

/// Whether the pair is `t`-minimal for some `t ∈ R_π`.
pub fn is_minimal(pair: &PermPair) -> bool {
    pair.r_set().iter().any(|t| is_t_minimal_unchecked(pair, t))
}

/// `R_π(p) = {t ∈ R_π : p ∈ X_{π_t}}`.
pub fn r_set_at(pair: &PermPair, p: Point) -> ReflectionSet {
    let r = pair.rank(p);
    pair.r_set()
        .iter()
        .filter(|&t| r == u8::from(pair.in_mutation_box(t, p)))
        .collect()
}

/// Critical points whose every leveling reflection is minimal:
/// `{p ∈ crit_π : π is t-minimal for every t ∈ R_π(p)}`. Defined for
/// smooth pairs.
pub fn crit_red(pair: &PermPair) -> Result<PointSet> {
    if !pair.is_smooth() {
        return Err(Error::NotSmooth {
            w: *pair.w(),
            x: *pair.x(),
        });
    }
    Ok(crit_red_unchecked(pair))
}

pub(crate) fn crit_red_unchecked(pair: &PermPair) -> PointSet {
    let n = pair.degree();
    framed_square(n)
        .filter(|&p| pair.rank(p) == 1)
        .filter(|&p| {
            let leveling = r_set_at(pair, p);
            !leveling.is_empty() && leveling.iter().all(|t| is_t_minimal_unchecked(pair, t))
        })
        .collect_in(n)
}

/// Gasharov's map `φ: R_{π_t'} → R_π \ {t'}` as a list of
/// `(argument, image)` pairs, sorted by argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GasharovMap {
    pub tprime: Transposition,
    pub entries: Vec<(Transposition, Transposition)>,
}

impl GasharovMap {
    pub fn image(&self) -> ReflectionSet {
        self.entries.iter().map(|&(_, v)| v).collect()
    }

    pub fn apply(&self, t: Transposition) -> Option<Transposition> {
        self.entries
            .binary_search_by_key(&t, |&(k, _)| k)
            .ok()
            .map(|k| self.entries[k].1)
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.entries.len()
    }
}

/// `φ(t) = t^{t'}` if that lies in `R_π`, else `t`, on `R_{π_{t'}}`.
pub fn gasharov_map(pair: &PermPair, tprime: Transposition) -> Result<GasharovMap> {
    let mutated = pair.mutate(tprime)?;
    let r = pair.r_set();
    let entries = mutated
        .r_set()
        .iter()
        .map(|t| {
            let conj = t.conjugate_by(tprime);
            (t, if r.contains(conj) { conj } else { t })
        })
        .collect();
    Ok(GasharovMap { tprime, entries })
}

/// Parameters `(i1, j1, i2, j2)` of a minimal reduced pair of degree `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MinimalShape {
    pub n: usize,
    pub i1: usize,
    pub j1: usize,
    pub i2: usize,
    pub j2: usize,
}

impl fmt::Display for MinimalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} (i1,j1,i2,j2)=({},{},{},{})",
            self.n, self.i1, self.j1, self.i2, self.j2
        )
    }
}

impl MinimalShape {
    /// Validates `1 ≤ i1 < i2 ≤ n`, `1 ≤ j1 < j2 ≤ n` and
    /// `j2 - j1 + i2 - i1 ≥ n`.
    pub fn new(n: usize, i1: usize, j1: usize, i2: usize, j2: usize) -> Result<Self> {
        let shape = MinimalShape { n, i1, j1, i2, j2 };
        if !(2..=crate::perm::MAX_DEGREE).contains(&n) {
            return Err(Error::InvalidShape(format!("{shape}: degree out of range")));
        }
        if !(1 <= i1 && i1 < i2 && i2 <= n && 1 <= j1 && j1 < j2 && j2 <= n) {
            return Err(Error::InvalidShape(format!(
                "{shape}: indices out of order"
            )));
        }
        if j2 - j1 + i2 - i1 < n {
            return Err(Error::InvalidShape(format!(
                "{shape}: j2 - j1 + i2 - i1 < n"
            )));
        }
        // n + i1 - j2 ≤ i2 - j1 is the same inequality rearranged.
        Ok(shape)
    }

    /// All admissible shapes of degree `n`, in lexicographic order of
    /// `(i1, j1, i2, j2)`.
    pub fn all(n: usize) -> Vec<MinimalShape> {
        let mut out = Vec::new();
        for i1 in 1..=n {
            for j1 in 1..=n {
                for i2 in i1 + 1..=n {
                    for j2 in j1 + 1..=n {
                        if let Ok(s) = MinimalShape::new(n, i1, j1, i2, j2) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }

    /// Reads the shape off a `t`-minimal pair: `t = t_{i1,i2}` and
    /// `t^x = t_{j1,j2}`.
    pub fn of(pair: &PermPair, t: Transposition) -> Result<Self> {
        let x = pair.x();
        let (j1, j2) = (x.at(t.first()), x.at(t.second()));
        let (j1, j2) = (j1.min(j2), j1.max(j2));
        MinimalShape::new(pair.degree(), t.first(), j1, t.second(), j2)
    }

    pub fn reflection(&self) -> Transposition {
        Transposition::new_unchecked(self.i1, self.i2)
    }

    fn w_oneline(&self) -> Vec<i64> {
        let (n, i1, j1, i2, j2) = (
            self.n as i64,
            self.i1 as i64,
            self.j1 as i64,
            self.i2 as i64,
            self.j2 as i64,
        );
        (1..=n)
            .map(|i| {
                if i < i1 {
                    j2 + 1 - i
                } else if i < n + i1 - j2 {
                    n + i1 - i
                } else if i <= i2 - j1 + 1 {
                    n + 1 - i
                } else if i <= i2 {
                    i2 + 1 - i
                } else {
                    n + j1 - i
                }
            })
            .collect()
    }

    fn x_oneline(&self) -> Vec<i64> {
        let (n, i1, j1, i2, j2) = (
            self.n as i64,
            self.i1 as i64,
            self.j1 as i64,
            self.i2 as i64,
            self.j2 as i64,
        );
        (1..=n)
            .map(|i| {
                if i < i1 {
                    j2 - i
                } else if i == i1 {
                    j1
                } else if i <= n + i1 - j2 {
                    n + i1 + 1 - i
                } else if i <= i2 - j1 {
                    n + 1 - i
                } else if i < i2 {
                    i2 - i
                } else if i == i2 {
                    j2
                } else {
                    n + j1 + 1 - i
                }
            })
            .collect()
    }
}

fn to_perm(values: Vec<i64>, shape: &MinimalShape, which: &str) -> Result<Permutation> {
    let as_usize: Option<Vec<usize>> = values.iter().map(|&v| usize::try_from(v).ok()).collect();
    as_usize
        .and_then(|v| Permutation::from_oneline(&v).ok())
        .ok_or_else(|| {
            Error::InvalidShape(format!(
                "{shape}: {which} is not a permutation ({values:?})"
            ))
        })
}

/// The minimal reduced pair with the given shape.
pub fn minimal_shape_pair(shape: &MinimalShape) -> Result<PermPair> {
    let w = to_perm(shape.w_oneline(), shape, "w")?;
    let x = to_perm(shape.x_oneline(), shape, "x")?;
    PermPair::new(w, x).map_err(|_| Error::InvalidShape(format!("{shape}: x is not below w")))
}

/// Which of the three explicit descriptions of `crit^red` applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasicCase {
    /// `i1 = j1 = 1`, `i2 + j2 = n + 2`.
    TopLeft,
    /// `i2 = j2 = n`, `i1 + j1 = n`.
    BottomRight,
    /// Neither of the above.
    Generic,
}

impl MinimalShape {
    /// The applicable cases; the first two can hold simultaneously.
    pub fn cases(&self) -> Vec<BasicCase> {
        let mut out = Vec::new();
        if self.i1 == 1 && self.j1 == 1 && self.i2 + self.j2 == self.n + 2 {
            out.push(BasicCase::TopLeft);
        }
        if self.i2 == self.n && self.j2 == self.n && self.i1 + self.j1 == self.n {
            out.push(BasicCase::BottomRight);
        }
        if out.is_empty() {
            out.push(BasicCase::Generic);
        }
        out
    }

    /// The predicted `crit^red` under a given case.
    pub fn predicted_crit_red(&self, case: BasicCase) -> PointSet {
        let n = self.n;
        match case {
            BasicCase::TopLeft => crate::rank::restricted_square(n)
                .filter(|p| p.i + p.j <= n)
                .collect_in(n),
            BasicCase::BottomRight => crate::rank::restricted_square(n)
                .filter(|p| p.i + p.j >= n)
                .collect_in(n),
            BasicCase::Generic => (n + self.i1 - self.j2..=self.i2 - self.j1)
                .filter(|&i| (1..n).contains(&i))
                .map(|i| Point::new(i, n - i))
                .collect_in(n),
        }
    }
}

/// Compares the pair built from `shape` against the explicit descriptions of
/// its `crit^red`, shift frames and strong conditions. Returns the failed
/// predictions of every applicable case, or an empty list if at least one
/// case matches completely.
pub fn basic_case_mismatches(shape: &MinimalShape) -> Result<Vec<String>> {
    let pair = minimal_shape_pair(shape)?;
    let n = shape.n;
    let actual = crit_red(&pair)?;
    let mut all_failures = Vec::new();
    for case in shape.cases() {
        let mut failures = Vec::new();
        let w0 = Permutation::longest(n);
        match case {
            BasicCase::TopLeft => {
                if *pair.w() != w0 || (2..=n).any(|i| pair.x().at(i) != n + 2 - i) {
                    failures.push(format!("{case:?}: pair is not (w0, x) of the stated form"));
                }
            }
            BasicCase::BottomRight => {
                if *pair.w() != w0 || (1..n).any(|i| pair.x().at(i) != n - i) {
                    failures.push(format!("{case:?}: pair is not (w0, x) of the stated form"));
                }
            }
            BasicCase::Generic => {}
        }
        let predicted = shape.predicted_crit_red(case);
        if predicted != actual {
            failures.push(format!(
                "{case:?}: crit_red {actual} != predicted {predicted}"
            ));
        }
        for p in actual.iter() {
            let ShiftFrame { rd, lu, .. } = shift_frame_raw(&pair, p);
            let right = pair.rk_x().diff_unchecked(p, rd) == 1;
            let left = pair.rk_x().diff_unchecked(p, lu) == 1;
            let dw_rd = pair.rk_w().diff_unchecked(p, rd) == 0;
            let dw_lu = pair.rk_w().diff_unchecked(p, lu) == 0;
            let on_anti = p.i + p.j == n;
            let ok = match case {
                BasicCase::TopLeft => {
                    lu == Point::new(0, 0)
                        && left
                        && rd == Point::new(n + 1 - p.j, n + 1 - p.i)
                        && right == dw_rd
                        && dw_rd == on_anti
                }
                BasicCase::BottomRight => {
                    rd == Point::new(n, n)
                        && right
                        && lu == Point::new(n - 1 - p.j, n - 1 - p.i)
                        && left == dw_lu
                        && dw_lu == on_anti
                }
                BasicCase::Generic => {
                    rd == Point::new(shape.i2, shape.j2)
                        && lu == Point::new(shape.i1 - 1, shape.j1 - 1)
                        && right
                        && left
                }
            };
            if !ok {
                failures.push(format!(
                    "{case:?}: at {p}: rd={rd} lu={lu} right={right} left={left}"
                ));
            }
        }
        if failures.is_empty() {
            return Ok(Vec::new());
        }
        all_failures.extend(failures);
    }
    Ok(all_failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let d = PermPair::diagonal(perm("3142"));
        let r = reduce(&d);
        assert!(r.rows().is_empty());
        assert_eq!(r.target().degree(), 0);

        let full = PermPair::new(perm("321"), perm("123")).unwrap();
        let r = reduce(&full);
        assert_eq!(r.rows(), &[1, 2, 3]);
        assert_eq!(*r.target(), full);

        let p = PermPair::new(perm("35142"), perm("21345")).unwrap();
        let r = reduce(&p);
        assert_eq!(r.target().length(), 5);
        assert_eq!(p.length(), 5);
    }

    #[test]
    fn frame_corners_project_to_frame_corners() {
        let p = PermPair::new(perm("35142"), perm("21345")).unwrap();
        let r = reduce(&p);
        let m = r.degree();
        assert_eq!(r.project_point(Point::new(0, 0)), Point::new(0, 0));
        assert_eq!(r.project_point(Point::new(5, 5)), Point::new(m, m));
    }

    #[test]
    fn t_minimal_examples() {
        let p = PermPair::new(perm("321"), perm("123")).unwrap();
        assert!(is_t_minimal(&p, t(1, 3)).unwrap());
        assert!(!is_t_minimal(&p, t(1, 2)).unwrap());
        let single = PermPair::new(perm("213"), perm("123")).unwrap();
        assert_eq!(single.r_set().len(), 1);
        assert!(is_t_minimal(&single, t(1, 2)).unwrap());
        assert!(is_t_minimal(&single, t(2, 3)).is_err());
    }

    #[test]
    fn gasharov_example() {
        let p = PermPair::new(perm("321"), perm("123")).unwrap();
        let phi = gasharov_map(&p, t(1, 2)).unwrap();
        assert_eq!(phi.apply(t(1, 3)), Some(t(2, 3)));
        assert_eq!(phi.apply(t(2, 3)), Some(t(1, 3)));
        assert!(phi.is_injective());
        assert_eq!(phi.image(), p.r_set().without(t(1, 2)));
        assert!(gasharov_map(&PermPair::diagonal(perm("123")), t(1, 2)).is_err());
    }

    #[test]
    fn shape_case_one_is_w0() {
        for n in 3..=7 {
            for i2 in 2..=n {
                let j2 = n + 2 - i2;
                if j2 < 2 || j2 > n {
                    continue;
                }
                let s = MinimalShape::new(n, 1, 1, i2, j2).unwrap();
                let p = minimal_shape_pair(&s).unwrap();
                assert_eq!(*p.w(), Permutation::longest(n));
                assert_eq!(p.x().at(1), 1);
                assert!((2..=n).all(|i| p.x().at(i) == n + 2 - i));
            }
        }
    }

    #[test]
    fn shape_case_two_is_w0() {
        for n in 3..=7 {
            for i1 in 1..n {
                let s = MinimalShape::new(n, i1, n - i1, n, n).unwrap();
                let p = minimal_shape_pair(&s).unwrap();
                assert_eq!(*p.w(), Permutation::longest(n));
                assert!((1..n).all(|i| p.x().at(i) == n - i));
            }
        }
    }

    #[test]
    fn twelve_example_crit_red() {
        let s = MinimalShape::new(12, 4, 3, 10, 11).unwrap();
        let p = minimal_shape_pair(&s).unwrap();
        assert!(p.is_smooth());
        assert_eq!(crit_red(&p).unwrap().to_string(), "{(5,7),(6,6),(7,5)}");
        assert!(basic_case_mismatches(&s).unwrap().is_empty());
    }

    #[test]
    fn shape_validation() {
        assert!(MinimalShape::new(4, 2, 2, 3, 3).is_err());
        assert!(MinimalShape::new(4, 3, 1, 2, 4).is_err());
        assert!(MinimalShape::new(4, 1, 1, 4, 2).is_ok());
    }
}
