//! The catalog of verifiable claims and the `verify` entry point.

mod influence;
mod neighbor;
mod pair;
mod perm;
mod reduction;

use std::time::Instant;

use schub_core::MAX_DEGREE;

use crate::enumerate::{check_degree, degree_cap, Universe};
use crate::report::VerificationReport;
use crate::sweep::{run_pairs, run_perms, run_shapes, PairCheck, PermCheck, ShapeCheck, Sink};
use crate::VerifyError;

/// How far a claim may be pushed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Limit {
    /// Up to the enumeration cap.
    Enumerative,
    /// Up to [`SLOW_DEGREE_CAP`] unless slow runs are allowed.
    Slow,
    /// Only builds the explicit shape family; any supported degree.
    Shapes,
}

pub const SLOW_DEGREE_CAP: usize = 6;

/// A registered claim: an id, a one-line statement and the sweeps that
/// check it.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub limit: Limit,
    pairs: Option<PairCheck>,
    perms: Option<PermCheck>,
    shapes: Option<ShapeCheck>,
}

impl Claim {
    const fn new(id: &'static str, statement: &'static str, limit: Limit) -> Self {
        Claim {
            id,
            statement,
            limit,
            pairs: None,
            perms: None,
            shapes: None,
        }
    }

    const fn pairs(mut self, f: PairCheck) -> Self {
        self.pairs = Some(f);
        self
    }

    const fn perms(mut self, f: PermCheck) -> Self {
        self.perms = Some(f);
        self
    }

    const fn shapes(mut self, f: ShapeCheck) -> Self {
        self.shapes = Some(f);
        self
    }

    /// Largest degree this claim accepts.
    pub fn max_degree(&self, allow_slow: bool) -> usize {
        match self.limit {
            Limit::Enumerative => degree_cap(),
            Limit::Slow if allow_slow => degree_cap(),
            Limit::Slow => SLOW_DEGREE_CAP.min(degree_cap()),
            Limit::Shapes => MAX_DEGREE,
        }
    }

    fn run(&self, n: usize, universe: Option<&Universe>) -> Sink {
        let mut sink = Sink::default();
        if let Some(f) = self.pairs {
            sink = sink.merge(run_pairs(universe.expect("universe built"), f));
        }
        if let Some(f) = self.perms {
            sink = sink.merge(run_perms(universe.expect("universe built"), f));
        }
        if let Some(f) = self.shapes {
            sink = sink.merge(run_shapes(n, f));
        }
        sink
    }

    fn needs_universe(&self) -> bool {
        self.pairs.is_some() || self.perms.is_some()
    }
}

use Limit::{Enumerative, Shapes, Slow};

static CATALOG: &[Claim] = &[
    // permutations
    Claim::new(
        "length-inversions",
        "length = #inversions = #{t : wt < w}",
        Enumerative,
    )
    .perms(perm::length_inversions),
    Claim::new(
        "rank-table",
        "boundary values, unit steps, unit second differences exactly at graph points",
        Enumerative,
    )
    .perms(perm::rank_table),
    Claim::new(
        "rank-symmetry",
        "rk_{w*}(p*) = n - i - j + rk_w(p) and rk_{w^-1}(p^-1) = rk_w(p)",
        Enumerative,
    )
    .perms(perm::rank_symmetry),
    Claim::new(
        "bruhat-cover-closure",
        "Bruhat order is the closure of length-increasing right multiplication by transpositions",
        Slow,
    )
    .perms(perm::bruhat_cover_closure),
    Claim::new(
        "pattern-oracle",
        "pattern containment agrees with subsequence enumeration (patterns of size <= 6)",
        Slow,
    )
    .perms(perm::pattern_oracle),
    Claim::new(
        "smooth-pattern",
        "(w, e) is smooth iff w avoids 3412 and 4231",
        Enumerative,
    )
    .perms(perm::smooth_pattern),
    Claim::new(
        "tight-pattern",
        "(w, e) is tight iff w avoids 4231, 35142, 42513, 351624",
        Slow,
    )
    .perms(perm::tight_pattern),
    // pairs
    Claim::new(
        "basicne",
        "#R >= length, and #{t : xt <= w} = #R + l(x)",
        Enumerative,
    )
    .pairs(pair::basicne),
    Claim::new(
        "tijr",
        "t in R iff x(a) < x(b) and the box [rho_x(a), rho_x(b)) lies in the complement",
        Enumerative,
    )
    .pairs(pair::tijr),
    Claim::new(
        "eq-1234",
        "i<j<k<l, x(j)<x(i)<x(l)<x(k), t_ik, t_jl in R imply t_il in R",
        Enumerative,
    )
    .pairs(pair::eq_1234),
    Claim::new(
        "fact-sf",
        "p < q in X with d_w(p,q) = 0 imply d_x(p,q) = 0 and corners in X",
        Enumerative,
    )
    .pairs(pair::fact_sf),
    Claim::new(
        "cover-characterization",
        "t_ij in R is a cover move iff no i' has t_ii', t_i'j in R",
        Enumerative,
    )
    .pairs(pair::cover_characterization),
    Claim::new(
        "smooth-hereditary",
        "(w, x) smooth implies (w, x') smooth for x <= x' <= w",
        Enumerative,
    )
    .pairs(pair::smooth_hereditary),
    Claim::new(
        "pair-symmetry",
        "level sets and reflection sets under upending and inversion",
        Enumerative,
    )
    .pairs(pair::pair_symmetry),
    // essential sets, influence, tightness
    Claim::new(
        "essential-bruhat",
        "y <= w iff rk_y >= rk_w on ess(w)",
        Enumerative,
    )
    .perms(influence::essential_bruhat),
    Claim::new(
        "essential-minimal",
        "dropping any point of ess(w) breaks the criterion",
        Slow,
    )
    .perms(influence::essential_minimal),
    Claim::new(
        "essential-sufficiency",
        "ess(w) inside X implies tight",
        Slow,
    )
    .pairs(influence::essential_sufficiency),
    Claim::new(
        "influence-fixed-point",
        "the influence set is the fixed point of the closure step",
        Enumerative,
    )
    .pairs(influence::influence_fixed_point),
    Claim::new(
        "corollary-scor",
        "rk_y >= rk_w on the influence set of the agreement set of y and w",
        Slow,
    )
    .perms(influence::corollary_scor),
    Claim::new(
        "influential-implies-tight",
        "influential pairs are tight",
        Slow,
    )
    .pairs(influence::influential_implies_tight),
    Claim::new("theorem-main", "smooth pairs are tight", Slow).pairs(influence::theorem_main),
    Claim::new(
        "theorem-main-prime",
        "smooth pairs are influential",
        Enumerative,
    )
    .pairs(influence::theorem_main_prime),
    // neighbour conditions
    Claim::new(
        "neighbor-totality",
        "neighbour and shift operators are total with the stated frames",
        Enumerative,
    )
    .pairs(neighbor::neighbor_totality),
    Claim::new(
        "prop-down-equivalence",
        "P-down/P-up agree with the d_x > 0 characterization",
        Enumerative,
    )
    .pairs(neighbor::prop_down_equivalence),
    Claim::new(
        "strong-prop-equivalence",
        "d_x(p, p_rd) = 1 iff rk = 1, p_rd in X, d_w(p, p_rd) = 0 (and left)",
        Enumerative,
    )
    .pairs(neighbor::strong_prop_equivalence),
    Claim::new(
        "q-upend-symmetry",
        "Q(pi, p) = Q(pi*, p*), Q-down(pi, p) = Q-up(pi*, p*)",
        Enumerative,
    )
    .pairs(neighbor::q_upend_symmetry),
    Claim::new(
        "strong-prop-symmetry",
        "right(pi, p) = left(pi*, p*) = right(pi^-1, p^-1)",
        Enumerative,
    )
    .pairs(neighbor::strong_prop_symmetry),
    Claim::new(
        "critical-set",
        "critical points have rank 1; crit is symmetric and matches mutations",
        Enumerative,
    )
    .pairs(neighbor::critical_set),
    Claim::new(
        "lemma-prpdp",
        "P-down iff some lower level-set point in the side column has d_w = 0 < d_x",
        Enumerative,
    )
    .pairs(neighbor::lemma_prpdp),
    Claim::new(
        "remark-strong-prop",
        "right strong condition iff rk = 1 and P-down (and left)",
        Enumerative,
    )
    .pairs(neighbor::remark_strong_prop),
    Claim::new(
        "lemma-nitm",
        "structure below p when P-down fails",
        Enumerative,
    )
    .pairs(neighbor::lemma_nitm),
    Claim::new(
        "lemma-nitm2",
        "structure above p when P-up fails",
        Enumerative,
    )
    .pairs(neighbor::lemma_nitm2),
    Claim::new(
        "lemma-maxsmlr-prime",
        "mutation does not raise the down target",
        Enumerative,
    )
    .pairs(neighbor::lemma_maxsmlr_prime),
    Claim::new(
        "lemma-maxsmlr",
        "mutation does not lower the up target",
        Enumerative,
    )
    .pairs(neighbor::lemma_maxsmlr),
    Claim::new(
        "simptau",
        "S*(p) is nonempty for every p in the complement",
        Enumerative,
    )
    .pairs(neighbor::simptau),
    Claim::new(
        "prop-main",
        "Q holds on the complement of a smooth pair",
        Enumerative,
    )
    .pairs(neighbor::prop_main),
    Claim::new(
        "prop-main1",
        "strong conditions on the critical set of a smooth pair",
        Enumerative,
    )
    .pairs(neighbor::prop_main1),
    Claim::new(
        "main-implies-influential",
        "staged rank sets of a smooth pair stay inside two closure steps",
        Enumerative,
    )
    .pairs(neighbor::main_implies_influential),
    // reduction and Gasharov's map
    Claim::new(
        "lemma-elem-1",
        "the reduction is a pair of degree #I",
        Enumerative,
    )
    .pairs(reduction::elem_1),
    Claim::new(
        "lemma-elem-2",
        "the reduction preserves length",
        Enumerative,
    )
    .pairs(reduction::elem_2),
    Claim::new(
        "lemma-elem-3",
        "the reduction preserves rk_pi pointwise",
        Enumerative,
    )
    .pairs(reduction::elem_3),
    Claim::new(
        "lemma-elem-4",
        "d_w does not grow and d_pi is preserved under reduction",
        Enumerative,
    )
    .pairs(reduction::elem_4),
    Claim::new(
        "lemma-elem-5",
        "t -> reduced t is a bijection of reflection sets",
        Enumerative,
    )
    .pairs(reduction::elem_5),
    Claim::new(
        "lemma-elem-6",
        "level sets of mutations are transported",
        Enumerative,
    )
    .pairs(reduction::elem_6),
    Claim::new("lemma-elem-7", "smoothness is transported", Enumerative).pairs(reduction::elem_7),
    Claim::new("lemma-elem-8", "the reduction is reduced", Enumerative).pairs(reduction::elem_8),
    Claim::new("lemma-elem-9", "critical sets are transported", Enumerative)
        .pairs(reduction::elem_9),
    Claim::new("lemma-elem-10", "shift frames are transported", Enumerative)
        .pairs(reduction::elem_10),
    Claim::new(
        "lemma-redred",
        "strong conditions at rank-1 points are transported by reduction",
        Enumerative,
    )
    .pairs(reduction::lemma_redred),
    Claim::new(
        "fact-betii",
        "rho_x(i) in the complement implies t_{i,i'} in R for some i' > i",
        Enumerative,
    )
    .pairs(reduction::fact_betii),
    Claim::new(
        "fact-redec",
        "reduced with decreasing prefix of x implies w > x on that prefix",
        Enumerative,
    )
    .pairs(reduction::fact_redec),
    Claim::new(
        "gasharov-injective",
        "Gasharov's map is well defined and injective into R minus t'",
        Enumerative,
    )
    .pairs(reduction::gasharov_injective),
    Claim::new(
        "gasharov-smoothness",
        "smooth iff the map is onto and the mutation is smooth (t' in R*)",
        Enumerative,
    )
    .pairs(reduction::gasharov_smoothness),
    Claim::new(
        "gasharov-s-transport",
        "the map sends S(p) of the mutation into S(p)",
        Enumerative,
    )
    .pairs(reduction::gasharov_s_transport),
    Claim::new(
        "corollary-smth",
        "smooth, t' in R*, t in R minus t' imply t or its conjugate in R of the mutation",
        Enumerative,
    )
    .pairs(reduction::corollary_smth),
    Claim::new(
        "minimal-classification",
        "reduced t-minimal pairs are exactly the explicit shape pairs",
        Enumerative,
    )
    .pairs(reduction::classification_pairs)
    .shapes(reduction::classification_shapes),
    Claim::new(
        "minimal-shape-footnote",
        "every shape pair is smooth, reduced and t_{i1,i2}-minimal",
        Shapes,
    )
    .shapes(reduction::shape_footnote),
    Claim::new(
        "lemma-basicbasic",
        "explicit crit_red, shift frames and strong conditions of shape pairs",
        Shapes,
    )
    .shapes(reduction::lemma_basicbasic),
];

/// Every registered claim, in catalog order.
pub fn catalog() -> &'static [Claim] {
    CATALOG
}

pub fn find_claim(id: &str) -> Option<&'static Claim> {
    CATALOG.iter().find(|c| c.id == id)
}

/// Options for [`verify_with`].
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Worker threads; `None` uses every available core.
    pub parallelism: Option<usize>,
    pub allow_slow: bool,
    /// Report `elapsed_ms = 0` so that reports are byte-identical.
    pub no_timing: bool,
}

/// [`verify_with`] using all cores and the default degree caps.
pub fn verify(claim_id: &str, n: usize) -> Result<VerificationReport, VerifyError> {
    verify_with(claim_id, n, VerifyOptions::default())
}

/// Runs the sweep for `claim_id` at degree `n`. The id `all` runs every
/// claim whose cap admits `n` and prefixes each violation with its claim.
pub fn verify_with(
    claim_id: &str,
    n: usize,
    opts: VerifyOptions,
) -> Result<VerificationReport, VerifyError> {
    let claims: Vec<&Claim> = if claim_id == "all" {
        check_degree(n, degree_cap(), "all")?;
        CATALOG.iter().collect()
    } else {
        let claim =
            find_claim(claim_id).ok_or_else(|| VerifyError::UnknownClaim(claim_id.to_string()))?;
        check_degree(n, claim.max_degree(opts.allow_slow), claim.id)?;
        vec![claim]
    };
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(k) = opts.parallelism {
            b = b.num_threads(k.max(1));
        }
        b.build().map_err(|e| VerifyError::Pool(e.to_string()))?
    };
    let start = Instant::now();
    let total = pool.install(|| {
        let universe = claims
            .iter()
            .any(|c| c.needs_universe() && n <= c.max_degree(opts.allow_slow))
            .then(|| Universe::new(n));
        let mut total = Sink::default();
        for claim in &claims {
            if n > claim.max_degree(opts.allow_slow) {
                total.bump(&format!("skipped:{}", claim.id));
                continue;
            }
            let mut sink = claim.run(n, universe.as_ref());
            if claim_id == "all" {
                for v in &mut sink.violations {
                    v.clause = format!("[{}] {}", claim.id, v.clause);
                }
                sink.stats = sink
                    .stats
                    .into_iter()
                    .map(|(k, v)| (format!("{}:{k}", claim.id), v))
                    .collect();
            }
            total = total.merge(sink);
        }
        total
    });
    let mut violations = total.violations;
    violations.sort();
    Ok(VerificationReport {
        claim: claim_id.to_string(),
        n,
        checked: total.checked,
        violations,
        elapsed_ms: if opts.no_timing {
            0
        } else {
            start.elapsed().as_millis() as u64
        },
        stats: total.stats,
    })
}
