use std::sync::Arc;

use schub_core::{PermPair, Permutation, RankTable, MAX_DEGREE};

use crate::VerifyError;

/// Default largest degree for exhaustive enumeration.
pub const DEFAULT_DEGREE_CAP: usize = 7;

/// The enumeration cap: `SCHUB_MAX_N` if set and valid, else
/// [`DEFAULT_DEGREE_CAP`]; never above [`MAX_DEGREE`].
pub fn degree_cap() -> usize {
    std::env::var("SCHUB_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .map_or(DEFAULT_DEGREE_CAP, |n| n.min(MAX_DEGREE))
}

pub(crate) fn check_degree(n: usize, max: usize, what: &str) -> Result<(), VerifyError> {
    if n == 0 || n > max {
        return Err(VerifyError::UnsupportedDegree {
            n,
            max,
            what: what.to_string(),
        });
    }
    Ok(())
}

/// All of `S_n` in lexicographic order with their rank tables.
pub struct Universe {
    n: usize,
    perms: Vec<Permutation>,
    tables: Vec<RankTable>,
}

impl Universe {
    pub fn new(n: usize) -> Self {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let tables = perms.iter().map(Permutation::rank_table).collect();
        Universe { n, perms, tables }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perm(&self, k: usize) -> &Permutation {
        &self.perms[k]
    }

    pub fn table(&self, k: usize) -> &RankTable {
        &self.tables[k]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &RankTable)> {
        self.perms.iter().zip(&self.tables)
    }

    /// `(w_k, x)` for every `x ≤ w_k`, in lexicographic order of `x`.
    pub fn pairs_below(&self, k: usize) -> impl Iterator<Item = PermPair> + '_ {
        let (w, rkw) = (self.perms[k], &self.tables[k]);
        self.iter()
            .filter_map(move |(x, rkx)| PermPair::with_tables(w, *x, rkw, rkx).ok())
    }
}

/// Every pair `(w, x)` with `x ≤ w` in `S_n`, lexicographically on
/// `(w, x)`.
pub fn enumerate_pairs(n: usize) -> Result<impl Iterator<Item = PermPair>, VerifyError> {
    check_degree(n, degree_cap(), "pair enumeration")?;
    let u = Arc::new(Universe::new(n));
    Ok((0..u.len()).flat_map(move |k| {
        let u = Arc::clone(&u);
        (0..u.len()).filter_map(move |b| {
            PermPair::with_tables(*u.perm(k), *u.perm(b), u.table(k), u.table(b)).ok()
        })
    }))
}

/// [`enumerate_pairs`] restricted to smooth pairs.
pub fn enumerate_smooth_pairs(n: usize) -> Result<impl Iterator<Item = PermPair>, VerifyError> {
    Ok(enumerate_pairs(n)?.filter(PermPair::is_smooth))
}
