//! Parallel exhaustive sweeps. Work is split over the outer permutation;
//! each worker fills its own [`Sink`] and the sinks are merged at the end.

use std::collections::BTreeMap;

use rayon::prelude::*;
use schub_core::reduction::MinimalShape;
use schub_core::{PermPair, Permutation};

use crate::enumerate::Universe;
use crate::report::Violation;

#[derive(Default, Debug)]
pub struct Sink {
    pub(crate) checked: u64,
    pub(crate) violations: Vec<Violation>,
    pub(crate) stats: BTreeMap<String, u64>,
}

impl Sink {
    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    /// Pushes `v()` unless `ok`.
    pub fn check(&mut self, ok: bool, v: impl FnOnce() -> Violation) {
        if !ok {
            self.violations.push(v());
        }
    }

    pub fn bump(&mut self, key: &str) {
        self.add(key, 1);
    }

    pub fn add(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_default() += by;
    }

    pub(crate) fn merge(mut self, other: Sink) -> Sink {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        for (k, v) in other.stats {
            *self.stats.entry(k).or_default() += v;
        }
        self
    }
}

pub type PairCheck = fn(&Universe, &PermPair, &mut Sink);
pub type PermCheck = fn(&Universe, &Permutation, &mut Sink);
pub type ShapeCheck = fn(&MinimalShape, &mut Sink);

pub(crate) fn run_pairs(u: &Universe, f: PairCheck) -> Sink {
    (0..u.len())
        .into_par_iter()
        .map(|k| {
            let mut sink = Sink::default();
            for pair in u.pairs_below(k) {
                sink.checked += 1;
                f(u, &pair, &mut sink);
            }
            sink
        })
        .reduce(Sink::default, Sink::merge)
}

pub(crate) fn run_perms(u: &Universe, f: PermCheck) -> Sink {
    (0..u.len())
        .into_par_iter()
        .map(|k| {
            let mut sink = Sink {
                checked: 1,
                ..Sink::default()
            };
            f(u, u.perm(k), &mut sink);
            sink
        })
        .reduce(Sink::default, Sink::merge)
}

pub(crate) fn run_shapes(n: usize, f: ShapeCheck) -> Sink {
    MinimalShape::all(n)
        .into_par_iter()
        .map(|shape| {
            let mut sink = Sink {
                checked: 1,
                ..Sink::default()
            };
            f(&shape, &mut sink);
            sink
        })
        .reduce(Sink::default, Sink::merge)
}
