//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exhaustive claims go through the library's `verify`; the counted or
//! listed quantities are recomputed here by naive oracles that share no code
//! with the library beyond parsing permutations.

use std::collections::BTreeSet;
use std::process::ExitCode;

use schub_core::influence::{essential_set, is_influential, is_tight, leq_via_essential};
use schub_core::reduction::{crit_red, is_reduced, is_t_minimal, minimal_shape_pair, MinimalShape};
use schub_core::{PermPair, Permutation, PointSet};
use schub_verify::{enumerate_pairs, render_diagram, verify_with, VerifyOptions};

type Outcome = Result<String, String>;
type Criterion = fn() -> Outcome;

fn claim(id: &str, n: usize, allow_slow: bool) -> Outcome {
    let opts = VerifyOptions {
        allow_slow,
        ..VerifyOptions::default()
    };
    let report = verify_with(id, n, opts).map_err(|e| format!("{id} n={n}: {e}"))?;
    if report.passed() {
        Ok(format!("{id} n={n} checked={}", report.checked))
    } else {
        let first = &report.violations[0];
        Err(format!(
            "{id} n={n}: {} violations, first ({}, {}) {:?} {:?}: {}",
            report.violations.len(),
            first.w,
            first.x,
            first.point,
            first.transposition,
            first.clause
        ))
    }
}

fn claims(
    ids: &[&str],
    degrees: impl IntoIterator<Item = usize> + Clone,
    allow_slow: bool,
) -> Outcome {
    let mut checked = 0;
    for id in ids {
        for n in degrees.clone() {
            claim(id, n, allow_slow)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sweeps clean"))
}

fn stat(id: &str, n: usize, key: &str) -> Result<u64, String> {
    let report = verify_with(id, n, VerifyOptions::default()).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("{id} n={n} has violations"));
    }
    Ok(report.stats.get(key).copied().unwrap_or(0))
}

// ---- naive oracles -------------------------------------------------------

fn perms(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn rank(w: &[usize], i: usize, j: usize) -> usize {
    w[..i].iter().filter(|&&v| v <= j).count()
}

/// `y ≤ w` iff `rk_w ≤ rk_y` everywhere.
fn bruhat_le(y: &[usize], w: &[usize]) -> bool {
    let n = w.len();
    (0..=n).all(|i| (0..=n).all(|j| rank(w, i, j) <= rank(y, i, j)))
}

fn contains(w: &[usize], pattern: &[usize]) -> bool {
    fn go(w: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == pattern.len() {
            let k = pattern.len();
            return (0..k)
                .all(|a| (0..k).all(|b| (chosen[a] < chosen[b]) == (pattern[a] < pattern[b])));
        }
        (start..w.len()).any(|i| {
            chosen.push(w[i]);
            let hit = go(w, pattern, i + 1, chosen);
            chosen.pop();
            hit
        })
    }
    go(w, pattern, 0, &mut Vec::new())
}

fn digits(s: &str) -> Vec<usize> {
    s.chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect()
}

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

// ---- criteria ------------------------------------------------------------

/// Smooth pairs are tight, with a flat-enumeration tightness oracle for n ≤ 5.
fn criterion_1() -> Outcome {
    claims(&["theorem-main"], 2..=5, false)?;
    claim("theorem-main", 6, true)?;
    let mut smooth = 0;
    for n in 2..=5 {
        let all = perms(n);
        for pair in enumerate_pairs(n).unwrap().filter(|p| p.is_smooth()) {
            smooth += 1;
            let (w, x) = (pair.w().to_vec(), pair.x().to_vec());
            let level: Vec<(usize, usize)> = (0..=n)
                .flat_map(|i| (0..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| rank(&w, i, j) == rank(&x, i, j))
                .collect();
            for y in &all {
                let agrees = level.iter().all(|&(i, j)| rank(y, i, j) == rank(&w, i, j));
                if agrees && !bruhat_le(y, &w) {
                    return Err(format!(
                        "oracle: ({}, {}) not tight, y = {y:?}",
                        pair.w(),
                        pair.x()
                    ));
                }
            }
            if !is_tight(&pair) {
                return Err(format!(
                    "is_tight false on smooth ({}, {})",
                    pair.w(),
                    pair.x()
                ));
            }
        }
    }
    Ok(format!(
        "n=2..6 clean; flat oracle agrees on {smooth} smooth pairs n<=5"
    ))
}

fn criterion_2() -> Outcome {
    claims(&["theorem-main-prime"], 2..=6, false)?;
    claims(
        &[
            "influential-implies-tight",
            "corollary-scor",
            "influence-fixed-point",
        ],
        2..=5,
        false,
    )?;
    Ok("smooth => influential n=2..6; influential => tight n<=5".into())
}

fn criterion_3() -> Outcome {
    claims(
        &["prop-main", "prop-main1", "main-implies-influential"],
        2..=6,
        false,
    )?;
    let crit = stat("prop-main1", 6, "critical_points")?;
    if crit == 0 {
        return Err("no critical points examined".into());
    }
    Ok(format!("n=2..6 clean; {crit} critical points at n=6"))
}

fn criterion_4() -> Outcome {
    claims(&["smooth-pattern"], 2..=7, false)?;
    let patterns = [digits("3412"), digits("4231")];
    let mut counts = Vec::new();
    for n in 2..=7 {
        let oracle = perms(n)
            .iter()
            .filter(|w| patterns.iter().any(|p| contains(w, p)))
            .count() as u64;
        let reported = stat("smooth-pattern", n, "non_smooth")?;
        if reported != oracle {
            return Err(format!(
                "n={n}: {reported} non-smooth reported, oracle {oracle}"
            ));
        }
        counts.push(reported);
    }
    let s4: BTreeSet<String> = Permutation::all(4)
        .filter(|w| {
            !PermPair::new(*w, Permutation::identity(4))
                .unwrap()
                .is_smooth()
        })
        .map(|w| w.to_string())
        .collect();
    let expected: BTreeSet<String> = ["3412", "4231"].map(String::from).into();
    if s4 != expected {
        return Err(format!("non-smooth in S_4: {s4:?}"));
    }
    Ok(format!(
        "non-smooth counts n=2..7: {counts:?}; S_4 = {{3412, 4231}}"
    ))
}

fn criterion_5() -> Outcome {
    claims(&["tight-pattern"], 2..=6, false)?;
    let patterns = ["4231", "35142", "42513", "351624"].map(digits);
    let mut counts = Vec::new();
    for n in 2..=6 {
        let oracle = perms(n)
            .iter()
            .filter(|w| patterns.iter().any(|p| contains(w, p)))
            .count() as u64;
        let reported = stat("tight-pattern", n, "not_tight")?;
        if reported != oracle {
            return Err(format!(
                "n={n}: {reported} not tight reported, oracle {oracle}"
            ));
        }
        counts.push(reported);
    }
    Ok(format!("non-tight counts n=2..6: {counts:?}"))
}

fn criterion_6() -> Outcome {
    claims(
        &[
            "gasharov-injective",
            "gasharov-smoothness",
            "gasharov-s-transport",
        ],
        2..=5,
        false,
    )
}

fn criterion_7() -> Outcome {
    claims(&["essential-bruhat", "essential-minimal"], 1..=5, false)?;
    let mut compared = 0;
    for n in 1..=4 {
        for w in Permutation::all(n) {
            for y in Permutation::all(n) {
                let fast = leq_via_essential(&y, &w).unwrap();
                if fast != bruhat_le(&y.to_vec(), &w.to_vec()) {
                    return Err(format!(
                        "leq_via_essential({y}, {w}) = {fast} disagrees with the rank oracle"
                    ));
                }
                compared += 1;
            }
        }
    }
    Ok(format!(
        "n<=5 clean; {compared} comparisons against the rank oracle"
    ))
}

fn criterion_8() -> Outcome {
    let pair = PermPair::new(perm("35142"), perm("21345")).unwrap();
    let ess = essential_set(pair.w());
    let level = pair.level_set().intersection(&PointSet::restricted(5));
    let checks = [
        ("smooth", pair.is_smooth().to_string(), "true"),
        ("ess(w)", ess.to_string(), "{(1,3),(3,1),(3,3)}"),
        (
            "X in restricted square",
            level.to_string(),
            "{(1,1),(1,3),(1,4),(3,1),(4,1)}",
        ),
        (
            "ess(w) inside X",
            ess.is_subset(&pair.level_set()).to_string(),
            "false",
        ),
        ("tight", is_tight(&pair).to_string(), "true"),
        ("influential", is_influential(&pair).to_string(), "true"),
    ];
    for (what, got, want) in checks {
        if got != want {
            return Err(format!("{what}: got {got}, expected {want}"));
        }
    }
    Ok("(35142, 21345) matches all six values".into())
}

fn criterion_9() -> Outcome {
    let ids = [
        "lemma-elem-1",
        "lemma-elem-2",
        "lemma-elem-3",
        "lemma-elem-4",
        "lemma-elem-5",
        "lemma-elem-6",
        "lemma-elem-7",
        "lemma-elem-8",
        "lemma-elem-9",
        "lemma-elem-10",
        "lemma-redred",
        "fact-betii",
        "fact-redec",
        "corollary-smth",
        "basicne",
        "fact-sf",
        "eq-1234",
        "tijr",
        "simptau",
        "lemma-prpdp",
        "lemma-nitm",
        "lemma-nitm2",
        "lemma-maxsmlr",
        "lemma-maxsmlr-prime",
    ];
    claims(&ids, 1..=5, false)
}

fn criterion_10() -> Outcome {
    claims(&["minimal-classification"], 2..=6, false)?;
    claims(
        &["minimal-shape-footnote", "lemma-basicbasic"],
        2..=8,
        false,
    )?;
    let mut total = 0;
    for n in 2..=6 {
        let found: BTreeSet<(Permutation, Permutation)> = enumerate_pairs(n)
            .unwrap()
            .filter(|p| is_reduced(p) && p.r_set().iter().any(|t| is_t_minimal(p, t).unwrap()))
            .map(|p| (*p.w(), *p.x()))
            .collect();
        let built: BTreeSet<(Permutation, Permutation)> = MinimalShape::all(n)
            .iter()
            .map(|s| minimal_shape_pair(s).unwrap())
            .map(|p| (*p.w(), *p.x()))
            .collect();
        if found != built {
            return Err(format!(
                "n={n}: {} reduced minimal pairs, {} shape pairs",
                found.len(),
                built.len()
            ));
        }
        total += found.len();
    }
    Ok(format!(
        "{total} reduced minimal pairs n=2..6 equal the shape family"
    ))
}

const TWELVE: &str = "
 .  .  .  .  .  .  .  .  . X+ O.  .
 .  .  .  .  .  .  .  . X+ O+  .  .
 .  .  .  .  .  .  . X+ O+  +  .  .
 .  . X+  +  +  +  +  #  #  #  + O.
 .  .  +  +  +  + C+ O+  +  +  . X.
 .  .  +  +  + C+ B+  +  +  +  .  .
 .  .  +  + C+ B+  +  +  +  +  .  .
 . X+  #  # O+  +  +  +  +  +  .  .
X+ O+  #  #  +  +  +  +  +  +  .  .
O.  .  +  +  .  .  .  .  .  . X.  .
 .  .  + O. X.  .  .  .  .  .  .  .
 .  . O. X.  .  .  .  .  .  .  .  .";

fn twelve() -> impl Iterator<Item = &'static str> {
    TWELVE.lines().skip(1)
}

fn criterion_11() -> Outcome {
    let shape = MinimalShape::new(12, 4, 3, 10, 11).unwrap();
    let pair = minimal_shape_pair(&shape).unwrap();
    let text = render_diagram(&pair);
    let body: Vec<&str> = text
        .lines()
        .skip(2)
        .map(|l| l.split_once(" | ").map(|(_, cells)| cells).unwrap_or(""))
        .collect();
    for (k, (got, want)) in body.iter().zip(twelve()).enumerate() {
        if got != &want {
            return Err(format!("row {}: got `{got}`, expected `{want}`", k + 1));
        }
    }
    if body.len() != 12 {
        return Err(format!("{} rows rendered", body.len()));
    }
    let marks: Vec<(usize, usize)> = twelve()
        .enumerate()
        .flat_map(|(i, row)| {
            row.as_bytes()
                .chunks(3)
                .enumerate()
                .filter(|(_, c)| c[0] == b'C')
                .map(move |(j, _)| (i + 1, j + 1))
        })
        .collect();
    let by_formula: Vec<(usize, usize)> = (12 + 4 - 11..=10 - 3).map(|i| (i, 12 - i)).collect();
    let red = crit_red(&pair).unwrap().to_string();
    if marks != by_formula || red != "{(5,7),(6,6),(7,5)}" {
        return Err(format!(
            "C marks {marks:?}, formula {by_formula:?}, crit_red {red}"
        ));
    }
    if render_diagram(&pair) != text {
        return Err("rendering is not deterministic".into());
    }
    Ok("12x12 diagram matches cell for cell; C at (5,7),(6,6),(7,5)".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("smooth pairs are tight", criterion_1),
        (
            "smooth pairs are influential; influential pairs are tight",
            criterion_2,
        ),
        ("Q and the strong conditions on smooth pairs", criterion_3),
        ("smoothness of (w, e) by 3412/4231 avoidance", criterion_4),
        ("tightness of (w, e) by pattern avoidance", criterion_5),
        ("Gasharov's map", criterion_6),
        ("essential set criterion and minimality", criterion_7),
        ("worked example (35142, 21345)", criterion_8),
        ("reduction lemmas and elementary facts", criterion_9),
        ("classification of minimal reduced pairs", criterion_10),
        ("diagram of the n = 12 shape pair", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({why})", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
