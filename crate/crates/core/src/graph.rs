//! Finite crystal graphs: breadth-first exploration, connectivity witnesses
//! and DOT/JSON export.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::an::AnComponent;
use crate::crystal::{Crystal, Op, OpKind, OperatorWord};
use crate::error::{Error, Result};
use crate::g22::Component2x2;

/// How a crystal element appears as a graph node.
pub trait NodeLabel {
    fn node_id(&self) -> String;
    fn node_dims(&self) -> Vec<u32>;
    fn node_ranks(&self) -> Option<[u32; 2]>;
    fn node_size(&self) -> u32 {
        self.node_dims().iter().sum()
    }
}

impl NodeLabel for Component2x2 {
    fn node_id(&self) -> String {
        self.to_string()
    }
    fn node_dims(&self) -> Vec<u32> {
        self.dims().to_vec()
    }
    fn node_ranks(&self) -> Option<[u32; 2]> {
        Some(self.ranks())
    }
}

impl NodeLabel for AnComponent {
    fn node_id(&self) -> String {
        self.to_string()
    }
    fn node_dims(&self) -> Vec<u32> {
        self.dims().to_vec()
    }
    fn node_ranks(&self) -> Option<[u32; 2]> {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNode {
    pub id: String,
    pub dims: Vec<u32>,
    pub ranks: Option<[u32; 2]>,
    pub wt: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphEdge {
    pub src: String,
    pub color: usize,
    pub dst: String,
}

/// Nodes are sorted by `(total dimension, dims, ranks)`; edges by the
/// position of their source, then color.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

fn order_key(n: &GraphNode) -> (u32, Vec<u32>, Option<[u32; 2]>) {
    (n.dims.iter().sum(), n.dims.clone(), n.ranks)
}

/// Closes `seeds` under every `f_i` whose image has size at most `bound`.
pub fn build_crystal_graph<C>(crystal: &C, seeds: &[C::Element], bound: u32) -> Result<CrystalGraph>
where
    C: Crystal,
    C::Element: NodeLabel,
{
    if let Some(big) = seeds.iter().find(|s| s.node_size() > bound) {
        return Err(Error::BoundBelowSeed { bound, size: big.node_size() });
    }
    let mut seen: BTreeSet<C::Element> = seeds.iter().cloned().collect();
    let mut queue: VecDeque<C::Element> = seen.iter().cloned().collect();
    let mut raw_edges = Vec::new();
    while let Some(b) = queue.pop_front() {
        for i in crystal.colors() {
            let Some(next) = crystal.f(&b, i) else { continue };
            if next.node_size() > bound {
                continue;
            }
            raw_edges.push((b.clone(), i, next.clone()));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut nodes: Vec<GraphNode> = seen
        .iter()
        .map(|b| GraphNode {
            id: b.node_id(),
            dims: b.node_dims(),
            ranks: b.node_ranks(),
            wt: crystal.weight(b).coeffs,
        })
        .collect();
    nodes.sort_by_key(order_key);
    let position: BTreeMap<&str, usize> = nodes.iter().enumerate().map(|(k, n)| (n.id.as_str(), k)).collect();
    raw_edges.sort_by_key(|(s, i, _)| (position[s.node_id().as_str()], *i));
    let edges =
        raw_edges.into_iter().map(|(s, color, d)| GraphEdge { src: s.node_id(), color, dst: d.node_id() }).collect();
    Ok(CrystalGraph { nodes, edges })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    /// For each reached node, a word taking it to the root along graph
    /// edges: `e_i` steps back along an `i` edge, `f_i` forward.
    pub witnesses: BTreeMap<String, OperatorWord>,
    /// Expected ids that are missing from the graph or unreachable.
    pub unreachable: Vec<String>,
}

/// Checks that every id in `expected` is reachable from `root` in the
/// underlying undirected graph.
pub fn is_connected_within(graph: &CrystalGraph, root: &str, expected: &[String]) -> ConnectivityReport {
    let mut adjacency: BTreeMap<&str, Vec<(&str, Op)>> = BTreeMap::new();
    for e in &graph.edges {
        // stepping from dst back to src is e_i; from src to dst is f_i
        adjacency.entry(e.dst.as_str()).or_default().push((e.src.as_str(), Op::new(OpKind::E, e.color)));
        adjacency.entry(e.src.as_str()).or_default().push((e.dst.as_str(), Op::new(OpKind::F, e.color)));
    }
    let mut witnesses: BTreeMap<String, OperatorWord> = BTreeMap::new();
    if graph.nodes.iter().any(|n| n.id == root) {
        // BFS from the root; a node's word is its step toward the parent
        // followed by the parent's word.
        let mut queue = VecDeque::from([root]);
        witnesses.insert(root.to_string(), OperatorWord::default());
        while let Some(v) = queue.pop_front() {
            for &(w, op) in adjacency.get(v).into_iter().flatten() {
                if witnesses.contains_key(w) {
                    continue;
                }
                let back = match op.kind {
                    OpKind::E => Op::new(OpKind::F, op.color),
                    _ => Op::new(OpKind::E, op.color),
                };
                let mut ops = witnesses[v].ops().to_vec();
                ops.push(back);
                witnesses.insert(w.to_string(), OperatorWord::new(ops));
                queue.push_back(w);
            }
        }
    }
    let unreachable: Vec<String> = expected.iter().filter(|id| !witnesses.contains_key(*id)).cloned().collect();
    ConnectivityReport { connected: unreachable.is_empty(), witnesses, unreachable }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    for n in &graph.nodes {
        writeln!(out, "  \"{}\";", dot_escape(&n.id)).expect("write to string");
    }
    for e in &graph.edges {
        writeln!(out, "  \"{}\" -> \"{}\" [label=\"{}\"];", dot_escape(&e.src), dot_escape(&e.dst), e.color)
            .expect("write to string");
    }
    out.push_str("}\n");
    out
}

pub fn export_json(graph: &CrystalGraph) -> String {
    let mut s = serde_json::to_string(graph).expect("graph serializes");
    s.push('\n');
    s
}

pub fn import_json(text: &str) -> Result<CrystalGraph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))
}

/// One line per node with its outgoing edges.
pub fn export_text(graph: &CrystalGraph) -> String {
    let mut out = String::new();
    for n in &graph.nodes {
        let targets: Vec<String> =
            graph.edges.iter().filter(|e| e.src == n.id).map(|e| format!("f{} -> {}", e.color, e.dst)).collect();
        writeln!(out, "{}\t{}", n.id, targets.join("; ")).expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::an::{an_components_up_to, AnCrystal};
    use crate::g22::{components_up_to, Component2x2, G22Crystal};

    #[test]
    fn f4_chain_from_highest() {
        let g = build_crystal_graph(&G22Crystal::new(), &[Component2x2::highest()], 2).unwrap();
        let has = |s: &str, c: usize, d: &str| g.edges.contains(&GraphEdge { src: s.into(), color: c, dst: d.into() });
        assert!(has("0,0,0,0:0,0", 4, "0,0,0,1:0,0"));
        assert!(has("0,0,0,1:0,0", 4, "0,0,0,2:0,0"));
        for e in &g.edges {
            let s = g.nodes.iter().find(|n| n.id == e.src).unwrap();
            let d = g.nodes.iter().find(|n| n.id == e.dst).unwrap();
            let mut w = s.wt.clone();
            w[e.color - 1] -= 1;
            assert_eq!(w, d.wt);
        }
    }

    #[test]
    fn bound_zero_is_single_node() {
        let g = build_crystal_graph(&G22Crystal::new(), &[Component2x2::highest()], 0).unwrap();
        assert_eq!(g.nodes.len(), 1);
        assert!(g.edges.is_empty());
        let report = is_connected_within(&g, "0,0,0,0:0,0", &["0,0,0,0:0,0".to_string()]);
        assert!(report.connected);
    }

    #[test]
    fn edge_colored_one() {
        let seed: Component2x2 = "1,1,1,1:1,1".parse().unwrap();
        let g = build_crystal_graph(&G22Crystal::new(), &[seed], 5).unwrap();
        assert!(g.edges.contains(&GraphEdge { src: "1,1,1,1:1,1".into(), color: 1, dst: "2,1,1,1:1,1".into() }));
    }

    #[test]
    fn seed_above_bound_is_rejected() {
        let seed: Component2x2 = "1,1,1,1:1,1".parse().unwrap();
        assert_eq!(
            build_crystal_graph(&G22Crystal::new(), &[seed], 3),
            Err(Error::BoundBelowSeed { bound: 3, size: 4 })
        );
    }

    #[test]
    fn square_graph_connected_with_witnesses() {
        let g = build_crystal_graph(&G22Crystal::new(), &[Component2x2::highest()], 5).unwrap();
        let expected: Vec<String> = components_up_to(5).iter().map(|c| c.to_string()).collect();
        assert_eq!(g.nodes.len(), expected.len());
        let report = is_connected_within(&g, "0,0,0,0:0,0", &expected);
        assert!(report.connected);
        for c in components_up_to(5) {
            let w = &report.witnesses[&c.to_string()];
            let trace = crate::g22::apply_word(w, c).unwrap();
            assert_eq!(trace.result, Some(Component2x2::highest()));
        }
    }

    #[test]
    fn chain_graph_connected() {
        let n = 4;
        let g = build_crystal_graph(&AnCrystal::new(n), &[AnComponent::zero(n)], 6).unwrap();
        let expected: Vec<String> = an_components_up_to(n, 6).iter().map(|c| c.to_string()).collect();
        assert!(is_connected_within(&g, "0,0,0,0", &expected).connected);
    }

    #[test]
    fn dot_and_json() {
        let empty = CrystalGraph::default();
        assert_eq!(export_dot(&empty), "digraph crystal {\n}\n");
        let g = build_crystal_graph(&G22Crystal::new(), &[Component2x2::highest()], 1).unwrap();
        let dot = export_dot(&g);
        assert!(dot.contains("\"0,0,0,0:0,0\" -> \"0,0,0,1:0,0\" [label=\"4\"];"));
        let json = export_json(&g);
        assert!(json
            .starts_with("{\"nodes\":[{\"id\":\"0,0,0,0:0,0\",\"dims\":[0,0,0,0],\"ranks\":[0,0],\"wt\":[0,0,0,0]}"));
        assert_eq!(import_json(&json).unwrap(), g);
        let again = build_crystal_graph(&G22Crystal::new(), &[Component2x2::highest()], 1).unwrap();
        assert_eq!(export_json(&again), json);
    }
}
