use std::collections::BTreeMap;
use std::fmt::Write as _;

use schub_core::{PermPair, Permutation, Point, Transposition};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// One counterexample: the pair, optionally a point and a transposition, and
/// the clause that failed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub w: Permutation,
    pub x: Permutation,
    pub point: Option<Point>,
    pub transposition: Option<Transposition>,
    pub clause: String,
}

impl Violation {
    pub fn new(w: Permutation, x: Permutation, clause: impl Into<String>) -> Self {
        Violation {
            w,
            x,
            point: None,
            transposition: None,
            clause: clause.into(),
        }
    }

    pub fn on(pair: &PermPair, clause: impl Into<String>) -> Self {
        Violation::new(*pair.w(), *pair.x(), clause)
    }

    /// For claims about a single permutation; `x` is the identity.
    pub fn on_perm(w: &Permutation, clause: impl Into<String>) -> Self {
        Violation::new(*w, Permutation::identity(w.degree()), clause)
    }

    pub fn at(mut self, p: Point) -> Self {
        self.point = Some(p);
        self
    }

    pub fn with(mut self, t: Transposition) -> Self {
        self.transposition = Some(t);
        self
    }
}

impl Serialize for Violation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Violation", 5)?;
        st.serialize_field("w", &self.w.to_string())?;
        st.serialize_field("x", &self.x.to_string())?;
        match self.point {
            Some(p) => st.serialize_field("point", &[p.i, p.j])?,
            None => st.skip_field("point")?,
        }
        match self.transposition {
            Some(t) => st.serialize_field("transposition", &[t.first(), t.second()])?,
            None => st.skip_field("transposition")?,
        }
        st.serialize_field("clause", &self.clause)?;
        st.end()
    }
}

/// Outcome of one verification campaign.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub n: usize,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub stats: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {} n={} checked={} violations={} elapsed_ms={}",
            self.claim,
            self.n,
            self.checked,
            self.violations.len(),
            self.elapsed_ms
        );
        for (k, v) in &self.stats {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for v in &self.violations {
            let _ = write!(out, "  w={} x={}", v.w, v.x);
            if let Some(p) = v.point {
                let _ = write!(out, " p={p}");
            }
            if let Some(t) = v.transposition {
                let _ = write!(out, " {t}");
            }
            let _ = writeln!(out, ": {}", v.clause);
        }
        out
    }
}
