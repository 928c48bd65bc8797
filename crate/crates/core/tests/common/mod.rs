//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tres_core::formula::{parse, Formula, Literal, PropSymbol};
use tres_core::snf::text::parse_clause_set;
use tres_core::snf::{ClauseSet, Conjunction, Disjunction, SnfClause, StepClause};

pub fn clauses(src: &str) -> ClauseSet {
    parse_clause_set(src).unwrap()
}

pub fn formula(src: &str) -> Formula {
    parse(src).unwrap()
}

pub fn lit(s: &str) -> Literal {
    match s.strip_prefix('~') {
        Some(n) => PropSymbol::infer(n).neg(),
        None => PropSymbol::infer(s).pos(),
    }
}

pub const STEP_EXAMPLE: &str = "\
start => f
f => X x
start => ~x | ~a | b
true => X (~x | ~a | b)
f => X a
f => X ~b
";

pub const LOOP_EXAMPLE: &str = "\
start => f
start => a
start => p
f => F ~p
f => X a
a => X (b | x)
b => X a
b => X p
a => X p
a => X ~x
";

/// Clause form of `(F p & G (p -> X p)) & G F ~p`, with the renaming
/// symbols called f, q, r, s, t and u.
pub const LARGER_EXAMPLE: &str = "\
start => f
f => F p
r => X q
r => X r
start => ~f | q
true => X (~f | q)
start => ~f | r
true => X (~f | r)
s => X p
start => ~q | ~p | s
true => X (~q | ~p | s)
t => F ~p
u => X t
u => X u
start => ~f | t
true => X (~f | t)
start => ~f | u
true => X (~f | u)
";

/// Axioms 2 to 10 with `A = p`, `B = q`.
pub const AXIOMS: [&str; 9] = [
    "G (p -> q) -> (G p -> G q)",
    "X ~p -> ~X p",
    "~X p -> X ~p",
    "X (p -> q) -> (X p -> X q)",
    "G p -> p & X G p",
    "G (p -> X p) -> (p -> G p)",
    "(p U q) -> F q",
    "(p U q) -> (q | (p & X (p U q)))",
    "(q | (p & X (p U q))) -> (p U q)",
];

pub const EQUIVALENCES: [(&str, &str); 10] = [
    ("X (p & q)", "X p & X q"),
    ("~X p", "X ~p"),
    ("G p", "p & X G p"),
    ("F p", "p | X F p"),
    ("~G p", "F ~p"),
    ("p U q", "q | (p & X (p U q))"),
    ("p U q", "(p W q) & F q"),
    ("~(p U q)", "~q W (~p & ~q)"),
    ("p W q", "q | (p & X (p W q))"),
    ("~(p W q)", "~q U (~p & ~q)"),
];

/// Every formula over `p`, `q` with exactly `size` AST nodes.
pub fn formulas_of_size(size: usize) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); size + 1];
    for n in 1..=size {
        let mut out = Vec::new();
        if n == 1 {
            out.push(Formula::prop("p"));
            out.push(Formula::prop("q"));
        } else {
            for a in &by_size[n - 1] {
                out.push(Formula::not(a.clone()));
                out.push(Formula::next(a.clone()));
                out.push(Formula::sometime(a.clone()));
                out.push(Formula::always(a.clone()));
            }
            for k in 1..n - 1 {
                for a in &by_size[k] {
                    for b in &by_size[n - 1 - k] {
                        out.push(Formula::and(a.clone(), b.clone()));
                        out.push(Formula::or(a.clone(), b.clone()));
                        out.push(Formula::implies(a.clone(), b.clone()));
                        out.push(Formula::until(a.clone(), b.clone()));
                        out.push(Formula::unless(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size[n] = out;
    }
    by_size.swap_remove(size)
}

/// A random formula with about `nodes` AST nodes.
pub fn random_formula(rng: &mut ChaCha8Rng, nodes: usize, props: &[&str]) -> Formula {
    if nodes <= 1 {
        return match rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            _ => Formula::prop(props.choose(rng).unwrap()),
        };
    }
    if nodes == 2 || rng.gen_bool(0.4) {
        let a = random_formula(rng, nodes - 1, props);
        return match rng.gen_range(0..4) {
            0 => Formula::not(a),
            1 => Formula::next(a),
            2 => Formula::sometime(a),
            _ => Formula::always(a),
        };
    }
    let left = rng.gen_range(1..nodes - 1);
    let a = random_formula(rng, left, props);
    let b = random_formula(rng, nodes - 1 - left, props);
    match rng.gen_range(0..6) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        2 => Formula::implies(a, b),
        3 => Formula::until(a, b),
        4 => Formula::unless(a, b),
        _ => Formula::iff(a, b),
    }
}

/// A random propositional formula over `props` with about `nodes` nodes.
pub fn random_propositional(rng: &mut ChaCha8Rng, nodes: usize, props: &[&str]) -> Formula {
    if nodes <= 1 {
        return Formula::prop(props.choose(rng).unwrap());
    }
    if rng.gen_bool(0.3) {
        return Formula::not(random_propositional(rng, nodes - 1, props));
    }
    let left = rng.gen_range(1..nodes.max(3) - 1);
    let a = random_propositional(rng, left, props);
    let b = random_propositional(rng, nodes.saturating_sub(1 + left).max(1), props);
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::implies(a, b),
    }
}

fn random_literal(rng: &mut ChaCha8Rng, syms: &[PropSymbol]) -> Literal {
    Literal::new(syms.choose(rng).unwrap().clone(), rng.gen_bool(0.5))
}

fn random_conj(rng: &mut ChaCha8Rng, syms: &[PropSymbol], max: usize) -> Conjunction {
    let n = rng.gen_range(0..=max);
    Conjunction::new((0..n).map(|_| random_literal(rng, syms)))
}

fn random_disj(rng: &mut ChaCha8Rng, syms: &[PropSymbol], min: usize, max: usize) -> Disjunction {
    let n = rng.gen_range(min..=max);
    Disjunction::new((0..n).map(|_| random_literal(rng, syms)))
}

pub fn symbols(n: usize) -> Vec<PropSymbol> {
    ["a", "b", "c", "d", "e", "g"][..n]
        .iter()
        .map(PropSymbol::user)
        .collect()
}

pub fn random_step(rng: &mut ChaCha8Rng, syms: &[PropSymbol]) -> StepClause {
    StepClause {
        lhs: random_conj(rng, syms, 2),
        rhs: random_disj(rng, syms, 1, 2),
    }
}

/// A random clause set mixing all three clause kinds.
pub fn random_clause_set(rng: &mut ChaCha8Rng, nsyms: usize, nclauses: usize) -> ClauseSet {
    let syms = symbols(nsyms);
    let mut cs = ClauseSet::new();
    for s in &syms {
        cs.add_symbol(s.clone());
    }
    for _ in 0..nclauses {
        let c = match rng.gen_range(0..6) {
            0 => SnfClause::initial(random_disj(rng, &syms, 1, 2)),
            1 => SnfClause::sometime(random_conj(rng, &syms, 1), random_literal(rng, &syms)),
            _ => SnfClause::Step(random_step(rng, &syms)),
        };
        cs.insert(c);
    }
    cs
}

/// Truth tables over at most four symbols: bit `v` is the value under
/// valuation `v`, where symbol `i` is true iff bit `i` of `v` is set.
pub struct Tables {
    syms: Vec<PropSymbol>,
}

impl Tables {
    pub fn new(syms: Vec<PropSymbol>) -> Self {
        assert!(syms.len() <= 4);
        Tables { syms }
    }

    fn lit(&self, l: &Literal) -> u16 {
        let i = self.syms.iter().position(|s| s == l.symbol()).unwrap();
        let mut t = 0u16;
        for v in 0..16u16 {
            if (v >> i & 1 == 1) == l.is_positive() {
                t |= 1 << v;
            }
        }
        t
    }

    pub fn conj(&self, c: &Conjunction) -> u16 {
        if c.is_absurd() {
            return 0;
        }
        c.lits().iter().fold(u16::MAX, |t, l| t & self.lit(l))
    }

    pub fn disj(&self, d: &Disjunction) -> u16 {
        if d.is_valid() {
            return u16::MAX;
        }
        d.lits().iter().fold(0, |t, l| t | self.lit(l))
    }
}

/// The maximal loop in `¬l` by brute force: merge every subset of `steps`,
/// then try every subset of the merged clauses against both side
/// conditions and take the union of those that pass. Members are reported
/// as `(lhs, rhs)` truth-table pairs.
pub fn brute_force_loop(steps: &[StepClause], l: &Literal, t: &Tables) -> BTreeSet<(u16, u16)> {
    let n = steps.len();
    let not_l = !t.disj(&Disjunction::new([l.clone()]));
    let mut pool: BTreeSet<(u16, u16)> = BTreeSet::new();
    for mask in 1u32..(1 << n) {
        let (mut a, mut b) = (u16::MAX, u16::MAX);
        for (i, s) in steps.iter().enumerate() {
            if mask >> i & 1 == 1 {
                a &= t.conj(&s.lhs);
                b &= t.disj(&s.rhs);
            }
        }
        if b & !not_l == 0 {
            pool.insert((a, b));
        }
    }
    let pool: Vec<(u16, u16)> = pool.into_iter().collect();
    assert!(pool.len() <= 22, "pool too large for brute force: {}", pool.len());
    let mut union = BTreeSet::new();
    for mask in 1u32..(1 << pool.len()) {
        let members: Vec<(u16, u16)> = (0..pool.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pool[i])
            .collect();
        let cover = members.iter().fold(0, |c, (a, _)| c | a);
        if members.iter().all(|(_, b)| b & !cover == 0) {
            union.extend(members);
        }
    }
    union
}

/// Cover of the maximal loop in `¬l`, by enumerating every set `K` of
/// valuations instead of every set of merged clauses. The merged clauses
/// with `lhs ⊆ K` and `rhs ⊆ K ∩ ¬l` form a loop exactly when their left
/// sides cover `K`, and every loop with cover `K` lies inside that set, so
/// the maximal loop covers the union of all such `K`.
pub fn loop_cover_by_valuation_sets(steps: &[StepClause], l: &Literal, t: &Tables) -> u16 {
    let n = steps.len();
    let not_l = !t.disj(&Disjunction::new([l.clone()]));
    let pool: BTreeSet<(u16, u16)> = (1u32..(1 << n))
        .map(|mask| {
            steps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold((u16::MAX, u16::MAX), |(a, b), (_, s)| {
                    (a & t.conj(&s.lhs), b & t.disj(&s.rhs))
                })
        })
        .collect();
    let mut union = 0u16;
    for k in 1..=u16::MAX {
        let cover = pool
            .iter()
            .filter(|&&(a, b)| a & !k == 0 && b & !(k & not_l) == 0)
            .fold(0u16, |c, (a, _)| c | a);
        if cover == k {
            union |= k;
        }
    }
    union
}

/// Whether `a` becomes `b` under some bijection between their symbols
/// outside `fixed`.
pub fn equal_up_to_renaming(a: &ClauseSet, b: &ClauseSet, fixed: &[&str]) -> bool {
    let fresh = |cs: &ClauseSet| -> Vec<PropSymbol> {
        cs.universe()
            .iter()
            .filter(|p| !fixed.contains(&p.name()))
            .cloned()
            .collect()
    };
    let (fa, fb) = (fresh(a), fresh(b));
    if fa.len() != fb.len() || a.len() != b.len() {
        return false;
    }
    let target: BTreeSet<SnfClause> = b.iter().cloned().collect();
    let mut perm: Vec<usize> = (0..fb.len()).collect();
    loop {
        let map: BTreeMap<&PropSymbol, &PropSymbol> =
            fa.iter().zip(perm.iter().map(|&i| &fb[i])).collect();
        let renamed: BTreeSet<SnfClause> = a.iter().map(|c| rename(c, &map)).collect();
        if renamed == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn rename(c: &SnfClause, map: &BTreeMap<&PropSymbol, &PropSymbol>) -> SnfClause {
    let r = |l: &Literal| match map.get(l.symbol()) {
        Some(s) => Literal::new((*s).clone(), l.is_positive()),
        None => l.clone(),
    };
    let conj = |c: &Conjunction| {
        if c.is_absurd() {
            Conjunction::falsity()
        } else {
            Conjunction::new(c.lits().iter().map(r))
        }
    };
    let disj = |d: &Disjunction| {
        if d.is_valid() {
            Disjunction::valid()
        } else {
            Disjunction::new(d.lits().iter().map(r))
        }
    };
    match c {
        SnfClause::Initial(i) => SnfClause::initial(disj(&i.rhs)),
        SnfClause::Step(s) => SnfClause::step(conj(&s.lhs), disj(&s.rhs)),
        SnfClause::Sometime(s) => SnfClause::sometime(conj(&s.lhs), r(&s.eventuality)),
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
