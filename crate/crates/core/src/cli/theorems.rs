use std::fmt::{self, Write as _};

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::corpus::{CorpusItem, ItemKind};
use crate::classify::{
    check_reflexive_duality, is_semi_reflexive_structural, only_if_witness, origin_outside_witness,
};
use crate::ehrhart::{
    ceil_property, count, drop_points, floor_property, membership_interval, step_function,
    Endpoint, StepFunction,
};
use crate::exact_math::{is_integral, rat, Rational};
use crate::polytope::Polytope;

/// Dilations at which step functions are compared with direct counts.
pub const ORACLE_DILATIONS: [(i64, i64); 9] = [
    (0, 1),
    (1, 3),
    (1, 2),
    (2, 3),
    (1, 1),
    (3, 2),
    (2, 1),
    (5, 2),
    (3, 1),
];

/// Larger windows tried, as multiples of `s_max`, when no drop shows up.
const DROP_WINDOW_FACTORS: [i64; 3] = [2, 4, 8];

/// Candidate boxes above this many points are not attempted.
const MAX_BOX_POINTS: f64 = 4.0e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Oracle,
    Monotone,
    Structural,
    IfPart,
    OriginOutside,
    OnlyIf,
    Interior,
    Certificate,
    Duality,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Oracle,
        Check::Monotone,
        Check::Structural,
        Check::IfPart,
        Check::OriginOutside,
        Check::OnlyIf,
        Check::Interior,
        Check::Certificate,
        Check::Duality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle-counts",
            Check::Monotone => "monotone-with-origin",
            Check::Structural => "structural-vs-floor",
            Check::IfPart => "if-part",
            Check::OriginOutside => "origin-outside-drops",
            Check::OnlyIf => "only-if-witness",
            Check::Interior => "interior-ceil",
            Check::Certificate => "canonical-certificate",
            Check::Duality => "reflexive-duality",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip,
}

#[derive(Debug, Clone)]
pub struct ItemResult {
    pub id: usize,
    pub name: String,
    pub outcomes: Vec<(Check, Outcome)>,
    pub notes: Vec<String>,
}

impl ItemResult {
    pub fn outcome(&self, check: Check) -> &Outcome {
        self.outcomes
            .iter()
            .find(|(c, _)| *c == check)
            .map(|(_, o)| o)
            .unwrap_or(&Outcome::Skip)
    }

    pub fn passed(&self) -> bool {
        self.outcomes
            .iter()
            .all(|(_, o)| !matches!(o, Outcome::Fail(_)))
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

fn box_points(p: &Polytope, s: &Rational) -> f64 {
    p.vertex_bounds()
        .iter()
        .map(|(lo, hi)| {
            let lo = (lo * s)
                .min(Rational::zero())
                .floor()
                .to_f64()
                .unwrap_or(f64::MAX);
            let hi = (hi * s)
                .max(Rational::zero())
                .ceil()
                .to_f64()
                .unwrap_or(f64::MAX);
            hi - lo + 1.0
        })
        .product()
}

/// Windows beyond `s_max` to retry a windowed check on, in increasing
/// order: multiples of `s_max`, plus `floor(hint) + 1` for a dilation
/// where a witness is known. Windows whose lattice box is too large are
/// left out.
pub fn wider_windows(p: &Polytope, s_max: &Rational, hint: Option<&Rational>) -> Vec<Rational> {
    let mut out: Vec<Rational> = DROP_WINDOW_FACTORS
        .iter()
        .map(|&k| s_max * rat(k, 1))
        .chain(hint.map(|h| h.floor() + rat(1, 1)))
        .filter(|w| w > s_max && box_points(p, w) <= MAX_BOX_POINTS)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Smallest window, starting at `s_max`, whose step function has a drop.
/// Returns the window and its drops, or `None` if none within the limits.
pub fn find_drop_window(
    p: &Polytope,
    base: &StepFunction,
    hint: Option<&Rational>,
) -> Result<Option<(Rational, Vec<Rational>)>, String> {
    let drops = drop_points(base);
    if !drops.is_empty() {
        return Ok(Some((base.s_max().clone(), drops)));
    }
    for window in wider_windows(p, base.s_max(), hint) {
        let f = step_function(p, &window, false).map_err(|e| e.to_string())?;
        let drops = drop_points(&f);
        if !drops.is_empty() {
            return Ok(Some((window, drops)));
        }
    }
    Ok(None)
}

/// The floor and interior-ceil answers on the first window, from `s_max`
/// upward, where they agree; violations found on a window persist on every
/// larger one.
fn agreeing_window(
    p: &Polytope,
    s_max: &Rational,
    floor_holds: bool,
    ceil_holds: bool,
    hint: Option<&Rational>,
) -> Result<(Rational, bool, bool), String> {
    let mut last = (s_max.clone(), floor_holds, ceil_holds);
    if floor_holds == ceil_holds {
        return Ok(last);
    }
    for window in wider_windows(p, s_max, hint) {
        let f = step_function(p, &window, false).map_err(|e| e.to_string())?;
        let g = step_function(p, &window, true).map_err(|e| e.to_string())?;
        last = (window, floor_property(&f).holds, ceil_property(&g).holds);
        if last.1 == last.2 {
            break;
        }
    }
    Ok(last)
}

/// Runs every applicable check on one polytope.
pub fn check_item(item: &CorpusItem, s_max: &Rational) -> ItemResult {
    let mut result = ItemResult {
        id: item.id,
        name: item.name.clone(),
        outcomes: Vec::new(),
        notes: Vec::new(),
    };
    if let Err(e) = run_checks(item, s_max, &mut result) {
        // checks run in `Check::ALL` order, so the first missing one failed
        let check = Check::ALL[result.outcomes.len().min(Check::ALL.len() - 1)];
        result
            .outcomes
            .push((check, Outcome::Fail(format!("evaluation error: {e}"))));
    }
    result
}

fn run_checks(item: &CorpusItem, s_max: &Rational, out: &mut ItemResult) -> Result<(), String> {
    let p = &item.polytope;
    let err = |e: &dyn fmt::Display| e.to_string();
    let f = step_function(p, s_max, false).map_err(|e| err(&e))?;
    let f_int = step_function(p, s_max, true).map_err(|e| err(&e))?;
    let push = |out: &mut ItemResult, c: Check, o: Outcome| out.outcomes.push((c, o));

    // step function against direct counts
    let mut mismatch = None;
    for (n, d) in ORACLE_DILATIONS {
        let s = rat(n, d);
        if &s > s_max {
            continue;
        }
        for (g, strict) in [(&f, false), (&f_int, true)] {
            let direct = count(p, &s, strict).map_err(|e| err(&e))?;
            if g.value_at(&s) != Some(direct) {
                mismatch.get_or_insert(format!(
                    "s={s} strict={strict}: step function {:?}, direct count {direct}",
                    g.value_at(&s)
                ));
            }
        }
    }
    push(
        out,
        Check::Oracle,
        verdict(mismatch.is_none(), || mismatch.clone().unwrap_or_default()),
    );

    let origin_in = p.contains_origin();
    push(
        out,
        Check::Monotone,
        if origin_in {
            verdict(f.is_nondecreasing(), || {
                "count decreases although 0 is in P".into()
            })
        } else {
            Outcome::Skip
        },
    );

    let structural = is_semi_reflexive_structural(p).map_err(|e| err(&e))?;
    let floor = floor_property(&f);
    // a dilation where a witness predicts the floor check to fail
    let hint = if !p.is_full_dimensional() {
        None
    } else if !origin_in {
        origin_outside_witness(p)
            .map_err(|e| err(&e))?
            .map(|w| w.dilation)
    } else if !structural.semi_reflexive {
        only_if_witness(p).map_err(|e| err(&e))?.map(|w| w.dilation)
    } else {
        None
    };
    let mut numeric = floor.holds;
    if !structural.semi_reflexive && numeric {
        for window in wider_windows(p, s_max, hint.as_ref()) {
            let g = step_function(p, &window, false).map_err(|e| err(&e))?;
            if !floor_property(&g).holds {
                out.notes
                    .push(format!("floor check first fails on window [0, {window}]"));
                numeric = false;
                break;
            }
        }
    }
    push(
        out,
        Check::Structural,
        verdict(structural.semi_reflexive == numeric, || {
            format!(
                "structural={} floor={} witness={}",
                structural.semi_reflexive,
                floor.holds,
                floor
                    .witness
                    .as_ref()
                    .map_or("none".into(), ToString::to_string)
            )
        }),
    );

    push(
        out,
        Check::IfPart,
        match item.kind {
            ItemKind::Constructed | ItemKind::Family => {
                verdict(structural.semi_reflexive && floor.holds, || {
                    format!(
                        "offsets in {{0,1}} but structural={} floor={}",
                        structural.semi_reflexive, floor.holds
                    )
                })
            }
            _ => Outcome::Skip,
        },
    );

    let origin_outside = if origin_in || p.is_empty() {
        Outcome::Skip
    } else {
        origin_outside_check(p, &f, floor.holds, hint.as_ref(), out)?
    };
    push(out, Check::OriginOutside, origin_outside);

    push(
        out,
        Check::OnlyIf,
        if origin_in && p.is_full_dimensional() && !structural.semi_reflexive {
            only_if_check(p)?
        } else {
            Outcome::Skip
        },
    );

    let ceil = ceil_property(&f_int);
    let (window, floor_w, ceil_w) =
        agreeing_window(p, s_max, floor.holds, ceil.holds, hint.as_ref())?;
    if &window != s_max && floor_w == ceil_w {
        out.notes.push(format!(
            "floor and interior-ceil checks agree on window [0, {window}]"
        ));
    }
    push(
        out,
        Check::Interior,
        verdict(floor_w == ceil_w, || {
            format!("floor={floor_w} ceil(interior)={ceil_w} on [0, {window}]")
        }),
    );

    push(
        out,
        Check::Certificate,
        match &structural.canonical {
            Some(rep) => {
                let q = Polytope::new(rep.clone()).map_err(|e| err(&e))?;
                let g = step_function(&q, s_max, false).map_err(|e| err(&e))?;
                verdict(
                    g.pieces() == f.pieces() && q.vertices() == p.vertices(),
                    || "canonical representation changes the step function".into(),
                )
            }
            None => Outcome::Skip,
        },
    );

    push(
        out,
        Check::Duality,
        if !p.is_empty() {
            let report = check_reflexive_duality(p).map_err(|e| err(&e))?;
            verdict(report.agree, || {
                report.counterexample.clone().unwrap_or_default()
            })
        } else {
            Outcome::Skip
        },
    );
    Ok(())
}

fn origin_outside_check(
    p: &Polytope,
    f: &StepFunction,
    floor_holds: bool,
    hint: Option<&Rational>,
    out: &mut ItemResult,
) -> Result<Outcome, String> {
    if floor_holds {
        return Ok(Outcome::Fail(
            "origin outside P but the floor check passes".into(),
        ));
    }
    if let Some(w) = origin_outside_witness(p).map_err(|e| e.to_string())? {
        let iv = membership_interval(p, &w.point, false);
        let leaves =
            iv.contains(&w.dilation) && iv.hi == Endpoint::finite(w.dilation.clone(), true);
        if !leaves {
            return Ok(Outcome::Fail(format!(
                "facet-cone point {:?} does not leave the dilates after s={}",
                w.point, w.dilation
            )));
        }
    }
    match find_drop_window(p, f, hint)? {
        Some((window, drops)) => {
            if &window != f.s_max() {
                out.notes
                    .push(format!("first drop at {} (window [0, {window}])", drops[0]));
            }
            Ok(Outcome::Pass)
        }
        None => Ok(Outcome::Fail("no drop found in any window".into())),
    }
}

fn only_if_check(p: &Polytope) -> Result<Outcome, String> {
    let Some(w) = only_if_witness(p).map_err(|e| e.to_string())? else {
        return Ok(Outcome::Fail(
            "no facet with non-integral normalized normal".into(),
        ));
    };
    let iv = membership_interval(p, &w.point, false);
    let floor = w.dilation.floor();
    let in_floor = if floor.is_zero() {
        w.point.iter().all(Zero::is_zero)
    } else {
        iv.contains(&floor)
    };
    Ok(verdict(
        !is_integral(&w.dilation) && iv.contains(&w.dilation) && !in_floor,
        || {
            format!(
                "point {:?} at s={} is not a valid jump witness",
                w.point, w.dilation
            )
        },
    ))
}

/// Checks every item in parallel; results come back in item order.
pub fn check_all(items: &[CorpusItem], s_max: &Rational) -> Vec<ItemResult> {
    items
        .par_iter()
        .map(|item| check_item(item, s_max))
        .collect()
}

/// Plain-text report: per-check counts, notes, failures, verdict.
pub fn render_report(header: &[String], results: &[ItemResult]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "{line}");
    }
    let _ = writeln!(out, "items: {}", results.len());
    let _ = writeln!(
        out,
        "{:<24} {:>6} {:>6} {:>6}",
        "check", "pass", "fail", "skip"
    );
    for check in Check::ALL {
        let (mut pass, mut fail, mut skip) = (0, 0, 0);
        for r in results {
            match r.outcome(check) {
                Outcome::Pass => pass += 1,
                Outcome::Fail(_) => fail += 1,
                Outcome::Skip => skip += 1,
            }
        }
        let _ = writeln!(out, "{:<24} {pass:>6} {fail:>6} {skip:>6}", check.name());
    }
    let mut sorted: Vec<&ItemResult> = results.iter().collect();
    sorted.sort_by_key(|r| r.id);
    let noted: Vec<String> = sorted
        .iter()
        .flat_map(|r| {
            r.notes
                .iter()
                .map(move |n| format!("  #{} {}: {n}", r.id, r.name))
        })
        .collect();
    if !noted.is_empty() {
        let _ = writeln!(out, "notes:");
        for n in noted {
            let _ = writeln!(out, "{n}");
        }
    }
    let failures: Vec<String> = sorted
        .iter()
        .flat_map(|r| {
            r.outcomes.iter().filter_map(move |(c, o)| match o {
                Outcome::Fail(msg) => Some(format!("  #{} {} [{c}]: {msg}", r.id, r.name)),
                _ => None,
            })
        })
        .collect();
    if failures.is_empty() {
        let _ = writeln!(out, "failures: none");
        let _ = writeln!(out, "result: PASS");
    } else {
        let _ = writeln!(out, "failures: {}", failures.len());
        for f in &failures {
            let _ = writeln!(out, "{f}");
        }
        let _ = writeln!(out, "result: FAIL");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::fixtures::*;

    fn item(id: usize, kind: ItemKind, polytope: Polytope) -> CorpusItem {
        CorpusItem {
            id,
            name: format!("t{id}"),
            kind,
            polytope,
        }
    }

    #[test]
    fn segment_away_from_origin() {
        let r = check_item(
            &item(0, ItemKind::File, interval(rat(1, 1), rat(2, 1))),
            &rat(6, 1),
        );
        assert!(r.passed(), "{:?}", r.outcomes);
        assert_eq!(r.outcome(Check::OriginOutside), &Outcome::Pass);
        assert_eq!(r.outcome(Check::Monotone), &Outcome::Skip);
    }

    #[test]
    fn small_fixtures_pass() {
        let items = vec![
            item(0, ItemKind::Family, unit_square()),
            item(1, ItemKind::Family, cross2()),
            item(2, ItemKind::File, interval(rat(0, 1), rat(3, 2))),
            item(3, ItemKind::File, centered_square()),
        ];
        let results = check_all(&items, &rat(6, 1));
        for r in &results {
            assert!(r.passed(), "{}: {:?}", r.name, r.outcomes);
        }
        assert_eq!(results[2].outcome(Check::OnlyIf), &Outcome::Pass);
        assert_eq!(results[3].outcome(Check::Duality), &Outcome::Pass);
        let text = render_report(&["header".into()], &results);
        assert!(text.ends_with("result: PASS\n"));
        assert!(text.contains("failures: none"));
    }

    #[test]
    fn far_polytope_needs_a_larger_window() {
        // for [20, 21] the lattice point 1 lives on [1/21, 1/20]; the window
        // [0, 1/30] sees nothing, so the search must widen
        let p = interval(rat(20, 1), rat(21, 1));
        let f = step_function(&p, &rat(1, 30), false).unwrap();
        let (window, drops) = find_drop_window(&p, &f, None).unwrap().unwrap();
        assert_eq!(window, rat(1, 15));
        assert_eq!(drops[0], rat(1, 20));
    }

    #[test]
    fn broken_claim_is_reported() {
        let r = check_item(
            &item(0, ItemKind::Constructed, interval(rat(0, 1), rat(3, 2))),
            &rat(6, 1),
        );
        assert!(matches!(r.outcome(Check::IfPart), Outcome::Fail(_)));
        let text = render_report(&[], &[r]);
        assert!(text.contains("[if-part]"));
        assert!(text.ends_with("result: FAIL\n"));
    }
}
