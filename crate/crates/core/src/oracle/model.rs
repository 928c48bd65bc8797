//! Ultimately periodic models from a non-empty reduced behaviour graph.
//!
//! Starting from the least initial node, each segment begins at a node
//! `n_r` and extends a path until every eventuality outstanding at `n_r`
//! has been satisfied somewhere along it, discharging eventualities in
//! literal order by shortest paths. The next segment starts at the least
//! successor of the segment's last node. Segments are a function of their
//! start node, so once a start node repeats the segments between the two
//! occurrences form the loop.

use std::collections::{HashMap, VecDeque};

use super::graph::BehaviourGraph;
use crate::error::{Error, Result};
use crate::formula::LassoModel;

/// Shortest path from `from` (exclusive) to the first node, in
/// breadth-first order, whose valuation satisfies eventuality `k`.
fn path_to(g: &BehaviourGraph, from: usize, k: usize) -> Option<Vec<usize>> {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for &j in g.successors(i) {
            if j == from || parent.contains_key(&j) {
                continue;
            }
            parent.insert(j, i);
            if g.satisfies(j, k) {
                let mut path = vec![j];
                let mut cur = j;
                while parent[&cur] != from {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(j);
        }
    }
    None
}

fn segment(g: &BehaviourGraph, start: usize) -> Result<Vec<usize>> {
    let mut path = vec![start];
    let e = g.nodes()[start].e;
    for k in 0..g.eventualities().len() {
        if e >> k & 1 == 0 || path.iter().any(|&i| g.satisfies(i, k)) {
            continue;
        }
        let last = *path.last().expect("nonempty path");
        let ext = path_to(g, last, k).ok_or_else(|| {
            Error::Internal("an outstanding eventuality cannot be satisfied; graph not reduced".into())
        })?;
        path.extend(ext);
    }
    Ok(path)
}

/// Reads a lasso model off a non-empty reduced behaviour graph.
pub fn extract_model(g: &BehaviourGraph) -> Result<LassoModel> {
    let mut start = *g.initial().first().ok_or(Error::EmptyGraph)?;
    let mut segments: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashMap<usize, usize> = HashMap::new();
    let loop_from = loop {
        if let Some(&j) = seen.get(&start) {
            break j;
        }
        seen.insert(start, segments.len());
        let seg = segment(g, start)?;
        let last = *seg.last().expect("nonempty segment");
        segments.push(seg);
        start = *g
            .successors(last)
            .first()
            .ok_or_else(|| Error::Internal("terminal node in a reduced graph".into()))?;
    };
    let states = |segs: &[Vec<usize>]| {
        segs.iter()
            .flatten()
            .map(|&i| g.valuation(g.nodes()[i]))
            .collect::<Vec<_>>()
    };
    Ok(LassoModel::new(
        states(&segments[..loop_from]),
        states(&segments[loop_from..]),
    ))
}
