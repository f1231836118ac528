//! Standard tree-decompositions: every adhesion has two vertices and every
//! torso is 3-connected or a cycle.
//!
//! The decomposition is built by splitting torsos along their least
//! separation pair until none is left, then merging adjacent cycle torsos.
//! When a pair leaves more than two pieces the pieces are chained, so the
//! result is always a tree decomposition; the validator reports the
//! repeated adhesions that this produces.

use crate::bounds::torso_path_bound_met;
use crate::coloring::{is_k_critical_with, split_two_cut_with, CriticalityReport, TwoCutSplit, DEFAULT_COLOR_BUDGET};
use crate::connectivity::{connectivity, is_three_connected, is_two_connected, separation_pair};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::oracle::{longest_path_with, OracleConfig};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Additive,
    Contractive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VirtualEdge {
    pub node: usize,
    pub u: Vertex,
    pub v: Vertex,
    pub neighbor: usize,
    pub classification: Option<Classification>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub id: usize,
    pub bag: BTreeSet<Vertex>,
    pub torso: Graph,
    pub virtual_edges: Vec<VirtualEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub adhesion: Edge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardDecomposition {
    /// Sorted by bag.
    pub nodes: Vec<Node>,
    pub edges: Vec<TreeEdge>,
}

impl StandardDecomposition {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn neighbors(&self, t: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| match (e.a == t, e.b == t) {
                (true, _) => Some(e.b),
                (_, true) => Some(e.a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, t: usize) -> usize {
        self.neighbors(t).len()
    }

    pub fn adhesion(&self, a: usize, b: usize) -> Option<Edge> {
        self.edges.iter().find(|e| (e.a, e.b) == (a, b) || (e.a, e.b) == (b, a)).map(|e| e.adhesion)
    }

    pub fn bag(&self, t: usize) -> &BTreeSet<Vertex> {
        &self.nodes[t].bag
    }

    pub fn torso(&self, t: usize) -> &Graph {
        &self.nodes[t].torso
    }

    pub fn is_cycle_torso(&self, t: usize) -> bool {
        is_cycle_graph(&self.nodes[t].torso)
    }

    /// Node whose bag equals `bag`, if any.
    pub fn find_bag(&self, bag: &BTreeSet<Vertex>) -> Option<usize> {
        self.nodes.iter().position(|n| &n.bag == bag)
    }

    /// Nodes on the far side of `a` when the tree edge `a`–`b` is cut, `b`
    /// included.
    pub fn side(&self, a: usize, b: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([a, b]);
        let mut stack = vec![b];
        let mut out = BTreeSet::from([b]);
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if seen.insert(y) {
                    out.insert(y);
                    stack.push(y);
                }
            }
        }
        out
    }

    pub fn is_classified(&self) -> bool {
        self.nodes.iter().all(|n| n.virtual_edges.iter().all(|e| e.classification.is_some()))
    }
}

/// Connected, 2-regular, at least three vertices.
pub fn is_cycle_graph(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2)
}

/// The torso at `t`: `G[W_t]` plus every adhesion pair of an incident tree
/// edge.
pub fn torso(g: &Graph, dec: &StandardDecomposition, t: usize) -> Graph {
    let mut h = g.induced(dec.bag(t));
    for s in dec.neighbors(t) {
        let (u, v) = dec.adhesion(t, s).expect("tree edge");
        h.add_edge(u, v).expect("adhesion has two vertices");
    }
    h
}

struct Piece {
    bag: BTreeSet<Vertex>,
    // (pair, neighbouring piece)
    links: Vec<(Edge, usize)>,
    alive: bool,
}

fn piece_torso(g: &Graph, p: &Piece) -> Graph {
    let mut h = g.induced(&p.bag);
    for &((u, v), _) in &p.links {
        h.add_edge(u, v).expect("distinct");
    }
    h
}

pub fn standard_tree_decomposition(g: &Graph) -> Result<StandardDecomposition> {
    if g.n() < 3 || !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut pieces = vec![Piece { bag: g.vertex_set(), links: Vec::new(), alive: true }];
    // Split until every torso is 3-connected or a cycle.
    let mut i = 0;
    while i < pieces.len() {
        let h = piece_torso(g, &pieces[i]);
        if h.n() < 4 || is_cycle_graph(&h) {
            i += 1;
            continue;
        }
        let Some((u, v)) = separation_pair(&h) else {
            i += 1;
            continue;
        };
        let comps = h.without_vertices(&BTreeSet::from([u, v])).components();
        let first = i;
        let ids: Vec<usize> = (0..comps.len()).map(|j| if j == 0 { first } else { pieces.len() + j - 1 }).collect();
        let old_links = std::mem::take(&mut pieces[i].links);
        let mut new: Vec<Piece> = comps
            .iter()
            .map(|c| {
                let mut bag = c.clone();
                bag.insert(u);
                bag.insert(v);
                Piece { bag, links: Vec::new(), alive: true }
            })
            .collect();
        for (pair, nb) in old_links {
            let j = new.iter().position(|p| p.bag.contains(&pair.0) && p.bag.contains(&pair.1)).expect("pair inside a piece");
            new[j].links.push((pair, nb));
            for link in pieces[nb].links.iter_mut() {
                if link.1 == first && link.0 == pair {
                    link.1 = ids[j];
                }
            }
        }
        for j in 1..new.len() {
            new[j - 1].links.push((edge(u, v), ids[j]));
            new[j].links.push((edge(u, v), ids[j - 1]));
        }
        let mut new = new.into_iter();
        pieces[first] = new.next().expect("at least two components");
        pieces.extend(new);
    }
    // Merge neighbouring cycle torsos across pairs that are neither edges of
    // G nor shared with a third piece.
    loop {
        let mut merged = false;
        'search: for p in 0..pieces.len() {
            if !pieces[p].alive || !is_cycle_graph(&piece_torso(g, &pieces[p])) {
                continue;
            }
            for li in 0..pieces[p].links.len() {
                let (pair, q) = pieces[p].links[li];
                if g.has_edge(pair.0, pair.1) || !is_cycle_graph(&piece_torso(g, &pieces[q])) {
                    continue;
                }
                let shared = |x: usize| pieces[x].links.iter().filter(|l| l.0 == pair).count() > 1;
                if shared(p) || shared(q) {
                    continue;
                }
                let q_links: Vec<(Edge, usize)> = pieces[q].links.iter().copied().filter(|l| l.1 != p).collect();
                let q_bag = pieces[q].bag.clone();
                for &(qpair, nb) in &q_links {
                    for link in pieces[nb].links.iter_mut() {
                        if link.1 == q && link.0 == qpair {
                            link.1 = p;
                        }
                    }
                }
                pieces[p].links.retain(|l| l.1 != q);
                pieces[p].links.extend(q_links);
                pieces[p].bag.extend(q_bag);
                pieces[q].alive = false;
                pieces[q].links.clear();
                merged = true;
                break 'search;
            }
        }
        if !merged {
            break;
        }
    }
    // Renumber by bag.
    let mut order: Vec<usize> = (0..pieces.len()).filter(|&p| pieces[p].alive).collect();
    order.sort_by(|&a, &b| pieces[a].bag.iter().cmp(pieces[b].bag.iter()));
    let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(r, &p)| (p, r)).collect();
    let mut edges = Vec::new();
    let mut nodes = Vec::new();
    for (r, &p) in order.iter().enumerate() {
        let mut virtual_edges: Vec<VirtualEdge> = pieces[p]
            .links
            .iter()
            .map(|&((u, v), nb)| VirtualEdge { node: r, u, v, neighbor: rank[&nb], classification: None })
            .collect();
        virtual_edges.sort_by_key(|e| (e.neighbor, e.u, e.v));
        for e in &virtual_edges {
            if r < e.neighbor {
                edges.push(TreeEdge { a: r, b: e.neighbor, adhesion: edge(e.u, e.v) });
            }
        }
        nodes.push(Node { id: r, bag: pieces[p].bag.clone(), torso: piece_torso(g, &pieces[p]), virtual_edges });
    }
    edges.sort_by_key(|e| (e.a, e.b));
    Ok(StandardDecomposition { nodes, edges })
}

/// Classifies every virtual edge by splitting `g` at its pair: additive
/// when the bag lies in the type-one side.
pub fn classify_virtual_edges(g: &Graph, dec: &StandardDecomposition, k: usize) -> Result<StandardDecomposition> {
    classify_virtual_edges_with(g, dec, k, DEFAULT_COLOR_BUDGET)
}

pub fn classify_virtual_edges_with(
    g: &Graph,
    dec: &StandardDecomposition,
    k: usize,
    budget: u64,
) -> Result<StandardDecomposition> {
    let mut splits: BTreeMap<Edge, TwoCutSplit> = BTreeMap::new();
    let mut out = dec.clone();
    for node in out.nodes.iter_mut() {
        for ve in node.virtual_edges.iter_mut() {
            let pair = edge(ve.u, ve.v);
            if !splits.contains_key(&pair) {
                splits.insert(pair, split_two_cut_with(g, pair.0, pair.1, k, budget)?);
            }
            let split = &splits[&pair];
            let in1 = node.bag.is_subset(&split.g1.vertex_set());
            let in2 = node.bag.is_subset(&split.g2.vertex_set());
            ve.classification = match (in1, in2) {
                (true, false) => Some(Classification::Additive),
                (false, true) => Some(Classification::Contractive),
                _ => {
                    return Err(Error::Decomposition(format!(
                        "bag of node {} is not inside exactly one side of {{{}, {}}}",
                        node.id, pair.0, pair.1
                    )))
                }
            };
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NucleusResult {
    pub graph: Graph,
    /// Torso vertex to the class representative (least vertex) it became.
    pub contraction_map: BTreeMap<Vertex, Vertex>,
    pub degenerate: bool,
    /// Contractive virtual edges induce a forest, and no outside vertex sees
    /// two vertices of one tree.
    pub forest: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CriticalityReport>,
}

impl NucleusResult {
    pub fn is_critical(&self) -> bool {
        !self.degenerate && self.certificate.as_ref().is_some_and(|c| c.is_critical)
    }
}

fn find(parent: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
    let p = parent[&v];
    if p == v {
        return v;
    }
    let r = find(parent, p);
    parent.insert(v, r);
    r
}

/// The nucleus at `t`: the torso with contractive virtual edges contracted.
/// Loops, parallel edges or a collapse below four vertices make the result
/// degenerate; it is returned as data, not as an error.
pub fn nucleus(g: &Graph, dec: &StandardDecomposition, t: usize, k: usize) -> Result<NucleusResult> {
    nucleus_with(g, dec, t, k, DEFAULT_COLOR_BUDGET)
}

pub fn nucleus_with(g: &Graph, dec: &StandardDecomposition, t: usize, k: usize, budget: u64) -> Result<NucleusResult> {
    let node = &dec.nodes[t];
    if node.virtual_edges.iter().any(|e| e.classification.is_none()) {
        return Err(Error::Precondition("virtual edges are not classified".into()));
    }
    let h = &node.torso;
    let contractive: BTreeSet<Edge> = node
        .virtual_edges
        .iter()
        .filter(|e| e.classification == Some(Classification::Contractive))
        .map(|e| edge(e.u, e.v))
        .collect();
    let mut parent: BTreeMap<Vertex, Vertex> = h.vertices().map(|v| (v, v)).collect();
    let mut forest = true;
    let mut notes = Vec::new();
    for &(u, v) in &contractive {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            forest = false;
            notes.push(format!("contractive edges close a cycle at {u}-{v}"));
        } else {
            let (lo, hi) = (a.min(b), a.max(b));
            parent.insert(hi, lo);
        }
    }
    let map: BTreeMap<Vertex, Vertex> = h.vertices().map(|v| (v, find(&mut parent, v))).collect();
    for x in h.vertices() {
        let mut seen: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        for y in h.neighbors(x) {
            if map[&y] == map[&x] {
                continue;
            }
            if let Some(prev) = seen.insert(map[&y], y) {
                forest = false;
                notes.push(format!("{x} sees both {prev} and {y}, which are identified"));
            }
        }
    }
    let mut n = Graph::with_vertices(map.values().copied());
    let mut degenerate = false;
    for (a, b) in h.edges() {
        if contractive.contains(&(a, b)) {
            continue;
        }
        let (x, y) = (map[&a], map[&b]);
        if x == y {
            degenerate = true;
            notes.push(format!("edge {a}-{b} becomes a loop"));
        } else if n.has_edge(x, y) {
            degenerate = true;
            notes.push(format!("edge {a}-{b} becomes parallel"));
        } else {
            n.add_edge(x, y)?;
        }
    }
    if n.n() < 4 {
        degenerate = true;
        notes.push(format!("nucleus has {} vertices", n.n()));
    }
    for v in n.vertices().collect::<Vec<_>>() {
        if let Some(l) = g.label(v) {
            n.set_label(v, l);
        }
    }
    let certificate = if degenerate { None } else { Some(is_k_critical_with(&n, k, budget)?) };
    let note = if notes.is_empty() { None } else { Some(notes.join("; ")) };
    Ok(NucleusResult { graph: n, contraction_map: map, degenerate, forest, note, certificate })
}

pub fn nuclei(g: &Graph, dec: &StandardDecomposition, k: usize) -> Result<Vec<NucleusResult>> {
    (0..dec.len()).map(|t| nucleus(g, dec, t, k)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl FnOnce() -> String) -> Self {
        Self { name: name.to_string(), pass, detail: if pass { None } else { Some(detail()) } }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub node: usize,
    pub bag: Vec<Vertex>,
    pub bag_names: Vec<String>,
    pub checks: Vec<Check>,
}

impl NodeReport {
    pub fn passed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| c.name == name && c.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub axioms: Vec<Check>,
    pub nodes: Vec<NodeReport>,
}

pub const ADHESIONS_NONADJACENT: &str = "adhesions_nonadjacent";
pub const ADHESIONS_DISTINCT: &str = "adhesions_distinct";
pub const TORSO_3_CONNECTED: &str = "torso_3_connected";
pub const NUCLEUS_CRITICAL: &str = "nucleus_critical";
pub const CONTRACTIVE_FOREST: &str = "contractive_forest";
pub const TORSO_EDGES_BOUNDED: &str = "torso_edges_at_most_3_nucleus_edges";
pub const DEGREE_BOUNDED: &str = "tree_degree_at_most_3_nucleus_edges";
pub const NUCLEUS_KEEPS_EDGES: &str = "nucleus_edges_at_least_bag_edges";
pub const TORSO_PATH: &str = "torso_path_long";

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.axioms.iter().all(|c| c.pass) && self.nodes.iter().all(NodeReport::all_pass)
    }

    /// Nodes failing the named check.
    pub fn failing(&self, name: &str) -> Vec<&NodeReport> {
        self.nodes.iter().filter(|n| n.checks.iter().any(|c| c.name == name && !c.pass)).collect()
    }
}

fn axioms(g: &Graph, dec: &StandardDecomposition) -> Vec<Check> {
    let covered: BTreeSet<Vertex> = dec.nodes.iter().flat_map(|n| n.bag.iter().copied()).collect();
    let missing_edge = g.edges().into_iter().find(|&(u, v)| !dec.nodes.iter().any(|n| n.bag.contains(&u) && n.bag.contains(&v)));
    let mut tree = Graph::with_vertices(0..dec.len());
    for e in &dec.edges {
        tree.add_edge(e.a, e.b).expect("distinct nodes");
    }
    let is_tree = tree.is_connected() && tree.m() + 1 == tree.n();
    let mut bad_trace = None;
    for v in g.vertices() {
        let holders: BTreeSet<usize> = (0..dec.len()).filter(|&t| dec.bag(t).contains(&v)).collect();
        if !tree.induced(&holders).is_connected() {
            bad_trace = Some(v);
            break;
        }
    }
    let bad_adhesion = dec.edges.iter().find(|e| {
        let inter: BTreeSet<Vertex> = dec.bag(e.a).intersection(dec.bag(e.b)).copied().collect();
        inter != BTreeSet::from([e.adhesion.0, e.adhesion.1])
    });
    let bad_torso = (0..dec.len()).find(|&t| torso(g, dec, t) != *dec.torso(t));
    vec![
        Check::new("tree", is_tree, || "decomposition graph is not a tree".into()),
        Check::new("vertex_coverage", covered == g.vertex_set(), || "some vertex is in no bag".into()),
        Check::new("edge_coverage", missing_edge.is_none(), || format!("edge {:?} is in no bag", missing_edge)),
        Check::new("connected_traces", bad_trace.is_none(), || {
            format!("bags containing {} are not connected in the tree", bad_trace.unwrap_or(0))
        }),
        Check::new("adhesions_have_two_vertices", bad_adhesion.is_none(), || {
            format!("adhesion of edge {:?} is wrong", bad_adhesion.map(|e| (e.a, e.b)))
        }),
        Check::new("torso_edges_match", bad_torso.is_none(), || format!("stored torso of node {:?} is stale", bad_torso)),
    ]
}

/// Checks the decomposition axioms and, per node, the structural facts a
/// standard decomposition of a k-critical graph is expected to have.
/// Failures are reported, never raised.
pub fn validate_decomposition(g: &Graph, dec: &StandardDecomposition, k: usize) -> Result<ValidationReport> {
    let classified;
    let dec = if dec.is_classified() {
        dec
    } else {
        classified = classify_virtual_edges(g, dec, k)?;
        &classified
    };
    let oracle = OracleConfig::default();
    let mut nodes = Vec::new();
    for t in 0..dec.len() {
        let node = &dec.nodes[t];
        let h = &node.torso;
        let nuc = nucleus(g, dec, t, k)?;
        let en = nuc.graph.m();
        let pairs: Vec<Edge> = node.virtual_edges.iter().map(|e| edge(e.u, e.v)).collect();
        let adjacent: Vec<Edge> = pairs.iter().copied().filter(|&(u, v)| g.has_edge(u, v)).collect();
        let distinct: BTreeSet<Edge> = pairs.iter().copied().collect();
        let conn = connectivity(h);
        let path = longest_path_with(h, &oracle)?;
        let bag_edges = g.induced(&node.bag).m();
        let checks = vec![
            Check::new(ADHESIONS_NONADJACENT, adjacent.is_empty(), || format!("adhesion pairs {adjacent:?} are edges")),
            Check::new(ADHESIONS_DISTINCT, distinct.len() == pairs.len(), || format!("adhesion pairs repeat: {pairs:?}")),
            Check::new(TORSO_3_CONNECTED, is_three_connected(h), || {
                let shape = if is_cycle_graph(h) { "a cycle" } else { "not 3-connected" };
                format!("torso is {shape}, separator {:?}", conn.separator)
            }),
            Check::new(NUCLEUS_CRITICAL, nuc.is_critical(), || {
                if nuc.degenerate {
                    format!("nucleus is degenerate: {}", nuc.note.clone().unwrap_or_default())
                } else {
                    format!("nucleus is not {k}-critical")
                }
            }),
            Check::new(CONTRACTIVE_FOREST, nuc.forest, || nuc.note.clone().unwrap_or_default()),
            Check::new(TORSO_EDGES_BOUNDED, h.m() <= 3 * en, || format!("|E(H)| = {}, |E(N)| = {en}", h.m())),
            Check::new(DEGREE_BOUNDED, dec.degree(t) <= 3 * en, || format!("degree {}, |E(N)| = {en}", dec.degree(t))),
            Check::new(NUCLEUS_KEEPS_EDGES, en >= bag_edges, || format!("|E(N)| = {en}, |E(G[W])| = {bag_edges}")),
            Check::new(TORSO_PATH, torso_path_bound_met(path.length(), en, k), || {
                format!("longest torso path {} is shorter than log|E(N)|/(2 log k) with |E(N)| = {en}", path.length())
            }),
        ];
        nodes.push(NodeReport {
            node: t,
            bag: node.bag.iter().copied().collect(),
            bag_names: node.bag.iter().map(|&v| g.display_name(v)).collect(),
            checks,
        });
    }
    Ok(ValidationReport { axioms: axioms(g, dec), nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, complete_bipartite, cycle, hj7, prism, wheel};

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn single_bags() {
        for g in [complete(4), cycle(5), wheel(5)] {
            let d = standard_tree_decomposition(&g).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d.torso(0), &g);
        }
    }

    #[test]
    fn hj7_is_a_path_of_three_bags() {
        let g = hj7();
        let d = standard_tree_decomposition(&g).unwrap();
        let bags: Vec<_> = d.nodes.iter().map(|n| n.bag.clone()).collect();
        assert_eq!(bags, vec![set(&[0, 1, 2, 3]), set(&[0, 1, 4]), set(&[0, 4, 5, 6])]);
        assert_eq!(d.adhesion(0, 1), Some((0, 1)));
        assert_eq!(d.adhesion(1, 2), Some((0, 4)));
        assert_eq!(d.torso(0).edges(), complete(4).edges());
        assert!(d.is_cycle_torso(1));
        assert_eq!(torso(&g, &d, 1).m(), 3);
    }

    #[test]
    fn hj7_classification_and_nuclei() {
        let g = hj7();
        let d = classify_virtual_edges(&g, &standard_tree_decomposition(&g).unwrap(), 4).unwrap();
        assert_eq!(d.nodes[0].virtual_edges[0].classification, Some(Classification::Additive));
        assert!(d.nodes[1].virtual_edges.iter().all(|e| e.classification == Some(Classification::Contractive)));
        let n0 = nucleus(&g, &d, 0, 4).unwrap();
        assert!(n0.is_critical());
        assert_eq!(n0.graph.edges(), complete(4).edges());
        let n1 = nucleus(&g, &d, 1, 4).unwrap();
        assert!(n1.degenerate);
        assert_eq!(n1.graph.n(), 1);
    }

    #[test]
    fn hj7_validation_flags_the_triangle() {
        let g = hj7();
        let d = standard_tree_decomposition(&g).unwrap();
        let r = validate_decomposition(&g, &d, 4).unwrap();
        assert!(r.axioms.iter().all(|c| c.pass));
        let bad = r.failing(TORSO_3_CONNECTED);
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].bag_names, vec!["z", "k2", "l2"]);
        assert_eq!(r.failing(NUCLEUS_CRITICAL).len(), 1);
        assert!(r.nodes[0].all_pass() && r.nodes[2].all_pass());
    }

    #[test]
    fn prism_splits_nowhere() {
        assert_eq!(standard_tree_decomposition(&prism(3)).unwrap().len(), 1);
    }

    #[test]
    fn parallel_classes_are_chained() {
        let g = complete_bipartite(2, 3);
        let d = standard_tree_decomposition(&g).unwrap();
        assert_eq!(d.len(), 3);
        assert!((0..3).all(|t| d.is_cycle_torso(t)));
        let r = axioms(&g, &d);
        assert!(r.iter().all(|c| c.pass));
    }

    #[test]
    fn not_two_connected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(standard_tree_decomposition(&g), Err(Error::NotTwoConnected));
    }
}
