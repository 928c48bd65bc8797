//! Graphviz rendering of behaviour graphs.

use std::fmt::Write;

use super::graph::{BehaviourGraph, Node};

fn label(g: &BehaviourGraph, n: Node) -> String {
    let v: Vec<String> = g
        .symbols()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            if n.v >> i & 1 == 1 {
                p.to_string()
            } else {
                format!("~{p}")
            }
        })
        .collect();
    let e: Vec<String> = g.outstanding(n).iter().map(|l| l.to_string()).collect();
    format!("{}|{}", v.join(" "), e.join(" "))
}

/// Renders `g` in DOT. Initial nodes are double circles; when `reduced` is
/// given, nodes absent from it are dashed.
pub fn to_dot(g: &BehaviourGraph, reduced: Option<&BehaviourGraph>) -> String {
    let mut out = String::from("digraph behaviour {\n");
    for (i, &n) in g.nodes().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", label(g, n))];
        if g.initial().contains(&i) {
            attrs.push("shape=doublecircle".into());
        }
        if reduced.is_some_and(|r| r.index_of(n).is_none()) {
            attrs.push("style=dashed".into());
        }
        writeln!(out, "  n{i} [{}];", attrs.join(", ")).expect("write to string");
    }
    for i in 0..g.len() {
        for &j in g.successors(i) {
            writeln!(out, "  n{i} -> n{j};").expect("write to string");
        }
    }
    out.push_str("}\n");
    out
}
