mod common;

use common::*;
use tres_core::engine::{MergedStepClause, Rule};
use tres_core::snf::{tau0, StepClause};
use tres_core::temporal::{augment, find_loops, LoopConfig};
use tres_core::{prove, prove_clause_set, Config, Mode, Status};

fn rendered(v: &tres_core::Verdict) -> Vec<String> {
    v.trace.steps().iter().map(|s| s.to_string()).collect()
}

#[test]
fn step_resolution_refutation() {
    let v = prove_clause_set(&clauses(STEP_EXAMPLE), &Config::default()).unwrap();
    assert_eq!(v.status, Status::Unsatisfiable);
    let lines = rendered(&v);
    let want = [
        "7. f => X (~a | b) [2,4 Step Resolution]",
        "8. f => X (b | ~x) [4,5 Step Resolution]",
        "9. f => X (~a | ~x) [4,6 Step Resolution]",
    ];
    for w in want {
        assert!(lines.contains(&w.to_string()), "missing {w}");
    }
    let clauses: Vec<String> = v.trace.steps().iter().map(|s| s.clause.to_string()).collect();
    let order = ["f => X (~a | ~x)", "f => X ~x", "f => X false", "start => ~f", "true => X ~f", "start => false"];
    let mut at = 0;
    for w in order {
        at += clauses[at..].iter().position(|c| c == w).expect(w) + 1;
    }
    assert!(v.trace.last().unwrap().clause.is_contradiction());
}

#[test]
fn step_resolution_from_formula() {
    let v = prove(&formula("X (a -> b) -> (X a -> X b)"), Mode::Validity).unwrap();
    assert_eq!(v.status, Status::Valid);
}

#[test]
fn temporal_resolution_from_clauses() {
    let cs = clauses(LOOP_EXAMPLE);
    assert_eq!(augment(&cs).added.len(), 3);
    let v = prove_clause_set(&cs, &Config::default()).unwrap();
    assert_eq!(v.status, Status::Unsatisfiable);
    let temporal: Vec<String> = v
        .trace
        .steps()
        .iter()
        .filter(|s| s.rule == Rule::TemporalRes)
        .map(|s| s.to_string())
        .collect();
    let want = [
        "start => ~a | ~f | ~p",
        "true => X (~a | ~f | ~p)",
        "start => ~b | ~f | ~p",
        "true => X (~b | ~f | ~p)",
        "_w0 => X (~a | ~p)",
        "_w0 => X (~b | ~p)",
    ];
    assert_eq!(temporal.len(), 6);
    for (got, w) in temporal.iter().zip(want) {
        assert!(
            got.contains(&format!(". {w} [4,7,8,9,14 Temporal Resolution] loop: a | b")),
            "{got}"
        );
    }
}

#[test]
fn naive_loop_search_on_clause_example() {
    let cs = clauses(&format!("{LOOP_EXAMPLE}a => X b\n"));
    let steps: Vec<(usize, StepClause)> = cs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.as_step().map(|s| (i + 1, s.clone())))
        .collect();
    let lp = find_loops(&steps, &lit("~p"), &LoopConfig::default()).unwrap().unwrap();
    let formula: Vec<String> = lp.loop_formula.iter().map(|c| c.to_string()).collect();
    assert_eq!(formula, ["a", "b"]);
}

#[test]
fn always_and_eventually_not() {
    let v = prove(&formula("G a & F ~a"), Mode::Satisfiability).unwrap();
    assert_eq!(v.status, Status::Unsatisfiable);
    let step = v
        .trace
        .steps()
        .iter()
        .find(|s| s.rule == Rule::TemporalRes)
        .expect("a temporal resolution step");
    // The loop members merge step clauses y => X y and y => X a.
    let members: Vec<&StepClause> = step
        .parents
        .iter()
        .filter_map(|&p| v.trace.get(p).clause.as_step())
        .collect();
    let merged = members
        .iter()
        .map(|s| MergedStepClause::from_step(s, 0))
        .reduce(|a, b| tres_core::engine::merge(&a, &b))
        .unwrap();
    let y = merged.lhs.to_string();
    let rhs: std::collections::BTreeSet<String> = merged.rhs.iter().map(|d| d.to_string()).collect();
    assert!(!y.contains('&'), "{merged}");
    assert_eq!(rhs, [y.clone(), "a".to_string()].into(), "{merged}");
}

#[test]
fn larger_example_validity() {
    let v = prove(&formula("(F p & G (p -> X p)) -> F G p"), Mode::Validity).unwrap();
    assert_eq!(v.status, Status::Valid);
    let loops: std::collections::BTreeSet<String> = v
        .trace
        .steps()
        .iter()
        .filter(|s| s.rule == Rule::TemporalRes)
        .map(|s| {
            let sometime = s
                .parents
                .iter()
                .find_map(|&p| v.trace.get(p).clause.as_sometime())
                .unwrap();
            sometime.eventuality.to_string()
        })
        .collect();
    // One loop for F p, one for the renamed F ~p.
    assert_eq!(loops.len(), 2, "{loops:?}");
    assert!(loops.contains("p"));
}

#[test]
fn larger_example_translation() {
    let (cs, _) = tau0(&formula("(F p & G (p -> X p)) & G F ~p")).unwrap();
    assert!(equal_up_to_renaming(&cs, &clauses(LARGER_EXAMPLE), &["p"]));
}

#[test]
fn larger_example_clauses_augment() {
    let aug = augment(&clauses(LARGER_EXAMPLE));
    let added: Vec<String> = aug.added.iter().map(|(c, _)| c.to_string()).collect();
    assert_eq!(
        added,
        [
            "start => _w0 | ~f | p",
            "true => X (_w0 | ~f | p)",
            "_w0 => X (_w0 | p)",
            "start => _w1 | ~p | ~t",
            "true => X (_w1 | ~p | ~t)",
            "_w1 => X (_w1 | ~p)",
        ]
    );
    let v = prove_clause_set(&clauses(LARGER_EXAMPLE), &Config::default()).unwrap();
    assert_eq!(v.status, Status::Unsatisfiable);
}
