//! Behaviour graph construction and reduction.
//!
//! A valuation is a bitmask over the sorted symbol universe; the set of
//! outstanding eventualities is a bitmask over the sorted eventuality
//! literals. Nodes are kept sorted by `(v, e)`.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::formula::{Literal, PropSymbol, Valuation};
use crate::par::Exec;
use crate::snf::{ClauseSet, Conjunction, Disjunction, SnfClause};

pub const DEFAULT_ORACLE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_symbols: usize,
    pub exec: Exec,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_symbols: DEFAULT_ORACLE_CAP,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub v: u32,
    pub e: u32,
}

/// A literal set as positive and negative bitmasks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Lits {
    pos: u32,
    neg: u32,
}

impl Lits {
    fn conj_holds(self, v: u32) -> bool {
        v & self.pos == self.pos && v & self.neg == 0
    }

    fn disj_holds(self, v: u32) -> bool {
        v & self.pos != 0 || !v & self.neg != 0
    }
}

/// A clause set over a fixed universe, compiled to bitmasks. Valid
/// disjunctions and unsatisfiable conjunctions are dropped on compilation.
#[derive(Debug, Clone)]
pub(crate) struct Compiled {
    pub(crate) symbols: Vec<PropSymbol>,
    pub(crate) eventualities: Vec<Literal>,
    initial: Vec<Lits>,
    steps: Vec<(Lits, Lits)>,
    sometimes: Vec<(Lits, usize)>,
}

impl Compiled {
    pub(crate) fn new(cs: &ClauseSet, universe: &BTreeSet<PropSymbol>, cap: usize) -> Result<Self> {
        let mut symbols: BTreeSet<PropSymbol> = universe.clone();
        symbols.extend(cs.universe().iter().cloned());
        if symbols.len() > cap {
            return Err(Error::OracleCapExceeded {
                symbols: symbols.len(),
                cap,
            });
        }
        let symbols: Vec<PropSymbol> = symbols.into_iter().collect();
        let eventualities: Vec<Literal> = cs
            .eventualities()
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let bit = |l: &Literal| 1u32 << symbols.binary_search(l.symbol()).expect("symbol in universe");
        let lits = |ls: &[Literal]| {
            let mut m = Lits { pos: 0, neg: 0 };
            for l in ls {
                if l.is_positive() {
                    m.pos |= bit(l);
                } else {
                    m.neg |= bit(l);
                }
            }
            m
        };
        let conj = |c: &Conjunction| (!c.is_absurd() && !c.has_complementary_pair()).then(|| lits(c.lits()));
        let disj = |d: &Disjunction| (!d.is_tautology()).then(|| lits(d.lits()));
        let mut out = Compiled {
            eventualities: eventualities.clone(),
            symbols: symbols.clone(),
            initial: Vec::new(),
            steps: Vec::new(),
            sometimes: Vec::new(),
        };
        for c in cs {
            match c {
                SnfClause::Initial(i) => out.initial.extend(disj(&i.rhs)),
                SnfClause::Step(s) => {
                    if let (Some(a), Some(b)) = (conj(&s.lhs), disj(&s.rhs)) {
                        out.steps.push((a, b));
                    }
                }
                SnfClause::Sometime(s) => {
                    if let Some(a) = conj(&s.lhs) {
                        let k = eventualities
                            .binary_search(&s.eventuality)
                            .expect("eventuality listed");
                        out.sometimes.push((a, k));
                    }
                }
            }
        }
        Ok(out)
    }

    fn valuations(&self) -> u32 {
        1u32 << self.symbols.len()
    }

    fn initial_ok(&self, v: u32) -> bool {
        self.initial.iter().all(|d| d.disj_holds(v))
    }

    fn fired(&self, v: u32) -> u32 {
        self.sometimes
            .iter()
            .filter(|(a, _)| a.conj_holds(v))
            .fold(0, |m, (_, k)| m | 1 << k)
    }

    fn satisfied(&self, v: u32) -> u32 {
        let mut m = 0;
        for (k, l) in self.eventualities.iter().enumerate() {
            let b = 1u32 << self.symbols.binary_search(l.symbol()).expect("symbol in universe");
            if (v & b != 0) == l.is_positive() {
                m |= 1 << k;
            }
        }
        m
    }

    /// Valuations satisfying the ○-sides of the step clauses fired by `v`.
    fn next_valuations(&self, v: u32) -> Vec<u32> {
        let required: Vec<Lits> = self
            .steps
            .iter()
            .filter(|(a, _)| a.conj_holds(v))
            .map(|(_, b)| *b)
            .collect();
        (0..self.valuations())
            .filter(|&w| required.iter().all(|b| b.disj_holds(w)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BehaviourGraph {
    symbols: Vec<PropSymbol>,
    eventualities: Vec<Literal>,
    nodes: Vec<Node>,
    succ: Vec<Vec<usize>>,
    initial: Vec<usize>,
    /// Per node, the eventualities its valuation satisfies.
    satisfies: Vec<u32>,
}

impl BehaviourGraph {
    pub fn symbols(&self) -> &[PropSymbol] {
        &self.symbols
    }

    /// Eventuality literals in sorted order; bit `k` of `Node::e` is the
    /// `k`-th of these.
    pub fn eventualities(&self) -> &[Literal] {
        &self.eventualities
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn index_of(&self, n: Node) -> Option<usize> {
        self.nodes.binary_search(&n).ok()
    }

    pub fn edges(&self) -> BTreeSet<(Node, Node)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&j| (self.nodes[i], self.nodes[j])))
            .collect()
    }

    pub fn initial_nodes(&self) -> BTreeSet<Node> {
        self.initial.iter().map(|&i| self.nodes[i]).collect()
    }

    pub fn valuation(&self, n: Node) -> Valuation {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(i, _)| n.v >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect()
    }

    pub fn outstanding(&self, n: Node) -> Vec<Literal> {
        self.eventualities
            .iter()
            .enumerate()
            .filter(|(k, _)| n.e >> k & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect()
    }

    /// Whether node `i`'s valuation satisfies eventuality `k`.
    pub(crate) fn satisfies(&self, i: usize, k: usize) -> bool {
        self.satisfies[i] >> k & 1 == 1
    }

    /// The subgraph on the nodes marked alive.
    fn restrict(&self, alive: &[bool]) -> BehaviourGraph {
        let mut remap = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        let mut satisfies = Vec::new();
        for (i, &a) in alive.iter().enumerate() {
            if a {
                remap[i] = nodes.len();
                nodes.push(self.nodes[i]);
                satisfies.push(self.satisfies[i]);
            }
        }
        let succ = (0..self.nodes.len())
            .filter(|&i| alive[i])
            .map(|i| {
                self.succ[i]
                    .iter()
                    .filter(|&&j| alive[j])
                    .map(|&j| remap[j])
                    .collect()
            })
            .collect();
        let initial = self
            .initial
            .iter()
            .filter(|&&i| alive[i])
            .map(|&i| remap[i])
            .collect();
        BehaviourGraph {
            symbols: self.symbols.clone(),
            eventualities: self.eventualities.clone(),
            nodes,
            succ,
            initial,
            satisfies,
        }
    }

    fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.nodes.len()];
        for (i, s) in self.succ.iter().enumerate() {
            for &j in s {
                pred[j].push(i);
            }
        }
        pred
    }

    /// Alive nodes from which an alive node satisfying eventuality `k` is
    /// reachable through alive nodes.
    fn can_reach(&self, k: usize, alive: &[bool], pred: &[Vec<usize>]) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let mut queue: VecDeque<usize> = (0..self.nodes.len())
            .filter(|&i| alive[i] && self.satisfies(i, k))
            .collect();
        for &i in &queue {
            seen[i] = true;
        }
        while let Some(j) = queue.pop_front() {
            for &i in &pred[j] {
                if alive[i] && !seen[i] {
                    seen[i] = true;
                    queue.push_back(i);
                }
            }
        }
        seen
    }

    fn unfulfillable(&self, i: usize, reach: &[Vec<bool>]) -> bool {
        (0..self.eventualities.len())
            .any(|k| self.nodes[i].e >> k & 1 == 1 && !self.satisfies(i, k) && !reach[k][i])
    }
}

/// Builds the behaviour graph over the clause set's own universe with the
/// default configuration.
pub fn build_graph(cs: &ClauseSet) -> Result<BehaviourGraph> {
    build_graph_with(cs, &BTreeSet::new(), &OracleConfig::default())
}

/// Builds the behaviour graph over `cs.universe() ∪ extra`.
pub fn build_graph_with(
    cs: &ClauseSet,
    extra: &BTreeSet<PropSymbol>,
    cfg: &OracleConfig,
) -> Result<BehaviourGraph> {
    let c = Compiled::new(cs, extra, cfg.max_symbols)?;
    let all: Vec<u32> = (0..c.valuations()).collect();
    let fired = cfg.exec.map(&all, |&v| c.fired(v));
    let sat = cfg.exec.map(&all, |&v| c.satisfied(v));

    let mut initial: Vec<Node> = cfg
        .exec
        .filter_indices(&all, |&v| c.initial_ok(v))
        .into_iter()
        .map(|v| Node {
            v: v as u32,
            e: fired[v],
        })
        .collect();
    initial.sort();

    let mut next_vals: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut edges: HashMap<Node, Vec<Node>> = HashMap::new();
    let mut frontier = initial.clone();
    for n in &frontier {
        edges.insert(*n, Vec::new());
    }
    while !frontier.is_empty() {
        let mut missing: Vec<u32> = frontier
            .iter()
            .map(|n| n.v)
            .filter(|v| !next_vals.contains_key(v))
            .collect();
        missing.sort_unstable();
        missing.dedup();
        let computed = cfg.exec.map(&missing, |&v| c.next_valuations(v));
        next_vals.extend(missing.into_iter().zip(computed));
        let succs: Vec<Vec<Node>> = cfg.exec.map(&frontier, |n| {
            let carried = n.e & !sat[n.v as usize];
            next_vals[&n.v]
                .iter()
                .map(|&w| Node {
                    v: w,
                    e: carried | fired[w as usize],
                })
                .collect()
        });
        let mut next = Vec::new();
        for (n, s) in frontier.iter().zip(succs) {
            for m in &s {
                if !edges.contains_key(m) {
                    edges.insert(*m, Vec::new());
                    next.push(*m);
                }
            }
            edges.insert(*n, s);
        }
        next.sort();
        frontier = next;
    }

    let mut nodes: Vec<Node> = edges.keys().copied().collect();
    nodes.sort();
    let index = |n: &Node| nodes.binary_search(n).expect("node recorded");
    let succ = nodes
        .iter()
        .map(|n| {
            let mut s: Vec<usize> = edges[n].iter().map(index).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    let initial = initial.iter().map(index).collect();
    let satisfies = nodes.iter().map(|n| sat[n.v as usize]).collect();
    Ok(BehaviourGraph {
        symbols: c.symbols,
        eventualities: c.eventualities,
        nodes,
        succ,
        initial,
        satisfies,
    })
}

/// Applies both deletion rules to a fixpoint, in rounds: terminal nodes
/// first, then nodes with an unfulfillable eventuality.
pub fn reduce_graph(g: &BehaviourGraph) -> BehaviourGraph {
    let n = g.nodes.len();
    let pred = g.predecessors();
    let mut alive = vec![true; n];
    let mut out_degree: Vec<usize> = g.succ.iter().map(Vec::len).collect();
    let mut changed = true;
    while changed {
        changed = false;
        let mut queue: VecDeque<usize> = (0..n).filter(|&i| alive[i] && out_degree[i] == 0).collect();
        while let Some(i) = queue.pop_front() {
            if !alive[i] {
                continue;
            }
            alive[i] = false;
            changed = true;
            for &p in &pred[i] {
                out_degree[p] -= 1;
                if alive[p] && out_degree[p] == 0 {
                    queue.push_back(p);
                }
            }
        }
        let reach: Vec<Vec<bool>> = (0..g.eventualities.len())
            .map(|k| g.can_reach(k, &alive, &pred))
            .collect();
        for i in 0..n {
            if alive[i] && g.unfulfillable(i, &reach) {
                alive[i] = false;
                changed = true;
                for &p in &pred[i] {
                    out_degree[p] -= 1;
                }
            }
        }
    }
    g.restrict(&alive)
}

/// Deletes one node at a time, always the first deletable node in `order`
/// (a permutation of node indices). Slow; used to check that the result
/// does not depend on the deletion order.
pub fn reduce_graph_in_order(g: &BehaviourGraph, order: &[usize]) -> BehaviourGraph {
    let pred = g.predecessors();
    let mut alive = vec![true; g.nodes.len()];
    loop {
        let reach: Vec<Vec<bool>> = (0..g.eventualities.len())
            .map(|k| g.can_reach(k, &alive, &pred))
            .collect();
        let victim = order.iter().copied().find(|&i| {
            alive[i] && (!g.succ[i].iter().any(|&j| alive[j]) || g.unfulfillable(i, &reach))
        });
        match victim {
            Some(i) => alive[i] = false,
            None => return g.restrict(&alive),
        }
    }
}

/// Whether the clause set has a model, decided by emptiness of the reduced
/// behaviour graph.
pub fn is_satisfiable(cs: &ClauseSet) -> Result<bool> {
    is_satisfiable_with(cs, &OracleConfig::default())
}

pub fn is_satisfiable_with(cs: &ClauseSet, cfg: &OracleConfig) -> Result<bool> {
    let g = build_graph_with(cs, &BTreeSet::new(), cfg)?;
    Ok(!reduce_graph(&g).initial.is_empty())
}
