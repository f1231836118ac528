//! Long paths and cycles in critical graphs.
//!
//! A DFS long path, the level counting behind it, the heavy-vertex search,
//! and the recursive long-cycle construction over a rooted standard
//! tree-decomposition.

use crate::bounds::{dfs_path_bound, heavy_vertex_met, level_bound, pow_at_least};
use crate::coloring::{is_k_critical_with, DEFAULT_COLOR_BUDGET};
use crate::decomposition::{
    is_cycle_graph, nucleus_with, standard_tree_decomposition, Classification, NucleusResult, StandardDecomposition,
};
use crate::error::{Error, Result};
use crate::flow::{menger_paths, MengerOutcome};
use crate::graph::{edge, Graph, Vertex};
use crate::linkage::{find_linkage_report, long_cycle_3connected_with};
use crate::oracle::{longest_path_with, OracleConfig};
use crate::tree::{dfs_spanning_tree, RootedTree};
use crate::witness::{CycleWitness, PathWitness};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// Root-to-leaf path of a DFS tree rooted at the least vertex. For a
/// k-critical graph its length is at least `log n / log(k-2)`.
pub fn long_path_via_dfs(g: &Graph, k: usize) -> Result<PathWitness> {
    if k < 4 {
        return Err(Error::Precondition("the DFS path bound needs k >= 4".into()));
    }
    let root = g.vertices().next().ok_or(Error::EmptyGraph)?;
    let tree = dfs_spanning_tree(g, root, None)?;
    let mut p = PathWitness::new(tree.path_from_root(tree.deepest()));
    let bound = dfs_path_bound(g.n(), k);
    if p.length() < bound {
        return Err(Error::BoundNotMet(format!(
            "DFS path of length {} on {} vertices, need {bound} for k = {k}",
            p.length(),
            g.n()
        )));
    }
    p.claimed_length = bound;
    p.validate(g)?;
    Ok(p.with_trace(format!("dfs from {root}, depth {}", tree.depth[&tree.deepest()])))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCheck {
    pub level: usize,
    pub count: usize,
    /// Decimal, since the bound can exceed any machine integer.
    pub bound: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelReport {
    pub k: usize,
    pub removed: usize,
    pub levels: Vec<LevelCheck>,
}

impl LevelReport {
    pub fn pass(&self) -> bool {
        self.levels.iter().all(|l| l.pass)
    }

    /// Levels exceeding their bound. In a k-critical graph there are none.
    pub fn violations(&self) -> Vec<&LevelCheck> {
        self.levels.iter().filter(|l| !l.pass).collect()
    }
}

/// Compares the level sizes of a DFS tree of `g - x` against
/// `(k-1)^s` at depth 1 and `(k-2)^(j-2) (k-1)^s` at depth `j >= 2`.
pub fn level_certificate(g: &Graph, k: usize, x: &BTreeSet<Vertex>, tree: &RootedTree) -> Result<LevelReport> {
    if k < 3 {
        return Err(Error::Precondition("level bounds need k >= 3".into()));
    }
    tree.check_dfs_tree(&g.without_vertices(x))?;
    let s = x.len();
    let levels = tree
        .level_counts()
        .into_iter()
        .enumerate()
        .map(|(level, count)| {
            let bound = level_bound(level, k, s);
            LevelCheck { level, count, pass: BigUint::from(count) <= bound, bound: bound.to_string() }
        })
        .collect();
    Ok(LevelReport { k, removed: s, levels })
}

fn check_levels(tree: &RootedTree, k: usize) -> Result<()> {
    for (level, &count) in tree.level_counts().iter().enumerate() {
        if BigUint::from(count) > BigUint::from(k).pow(level as u32) {
            return Err(Error::LevelBoundViolated {
                level,
                count,
                bound: BigUint::from(k).pow(level as u32).to_string(),
            });
        }
    }
    Ok(())
}

/// A vertex `t` at depth `l` with `k^(2l) phi(t) >= phi(T)`, for a tree with
/// at most `k^l` vertices at depth `l`. The first such vertex in
/// (depth, id) order is returned with its depth.
pub fn heavy_vertex(tree: &RootedTree, phi: &BTreeMap<Vertex, u64>, k: usize) -> Result<(Vertex, usize)> {
    if k < 2 {
        return Err(Error::Precondition("heavy vertex search needs k >= 2".into()));
    }
    let weight = |v: Vertex| phi.get(&v).copied().unwrap_or(0);
    if weight(tree.root) != 0 {
        return Err(Error::Precondition("the root must have weight zero".into()));
    }
    let total: u64 = tree.vertices().map(weight).sum();
    if total == 0 {
        return Err(Error::AllZeroWeights);
    }
    check_levels(tree, k)?;
    let mut order: Vec<(usize, Vertex)> = tree.depth.iter().map(|(&v, &d)| (d, v)).collect();
    order.sort_unstable();
    order
        .into_iter()
        .find(|&(d, v)| weight(v) > 0 && heavy_vertex_met(d, k, weight(v), total))
        .map(|(d, v)| (v, d))
        .ok_or_else(|| Error::BoundNotMet(format!("no vertex is heavy enough for total weight {total}")))
}

/// A standard tree-decomposition rooted at a leaf, with the pairs `X_t`,
/// node weights and the vertex sets of the subgraphs `G_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedDecomposition {
    pub dec: StandardDecomposition,
    pub k: usize,
    pub budget: u64,
    pub nuclei: Vec<NucleusResult>,
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Adhesion to the parent; at the root an edge of the graph inside the
    /// root bag that avoids the adhesion to its child.
    pub x: Vec<(Vertex, Vertex)>,
    /// `|E(N_t)|`, or `|E(H_t)|` when the nucleus is degenerate (this covers
    /// cycle torsos, whose weight is the cycle length).
    pub weight: Vec<u64>,
    pub subtree_weight: Vec<u64>,
    pub subtree_vertices: Vec<BTreeSet<Vertex>>,
}

impl RootedDecomposition {
    pub fn new(g: &Graph, dec: &StandardDecomposition, k: usize) -> Result<Self> {
        Self::new_with(g, dec, k, DEFAULT_COLOR_BUDGET)
    }

    pub fn new_with(g: &Graph, dec: &StandardDecomposition, k: usize, budget: u64) -> Result<Self> {
        let dec = if dec.is_classified() {
            dec.clone()
        } else {
            crate::decomposition::classify_virtual_edges_with(g, dec, k, budget)?
        };
        if dec.is_empty() {
            return Err(Error::Decomposition("empty decomposition".into()));
        }
        let nuclei = (0..dec.len()).map(|t| nucleus_with(g, &dec, t, k, budget)).collect::<Result<Vec<_>>>()?;
        let weight: Vec<u64> = (0..dec.len())
            .map(|t| {
                if nuclei[t].degenerate || dec.is_cycle_torso(t) {
                    dec.torso(t).m() as u64
                } else {
                    nuclei[t].graph.m() as u64
                }
            })
            .collect();
        let (root, x_root) = (0..dec.len())
            .filter(|&t| dec.degree(t) <= 1)
            .find_map(|t| root_pair(g, &dec, t).map(|p| (t, p)))
            .ok_or_else(|| Error::Decomposition("no leaf has an edge avoiding its adhesion".into()))?;

        let n = dec.len();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut x = vec![x_root; n];
        let mut order = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut i = 0;
        while i < order.len() {
            let t = order[i];
            i += 1;
            for c in dec.neighbors(t) {
                if !seen[c] {
                    seen[c] = true;
                    parent[c] = Some(t);
                    children[t].push(c);
                    x[c] = dec.adhesion(t, c).expect("tree edge");
                    order.push(c);
                }
            }
        }
        let mut subtree_weight = weight.clone();
        let mut subtree_vertices: Vec<BTreeSet<Vertex>> = (0..n).map(|t| dec.bag(t).clone()).collect();
        for &t in order.iter().rev() {
            if let Some(p) = parent[t] {
                subtree_weight[p] += subtree_weight[t];
                let vs = subtree_vertices[t].clone();
                subtree_vertices[p].extend(vs);
            }
        }
        Ok(Self { dec, k, budget, nuclei, root, parent, children, x, weight, subtree_weight, subtree_vertices })
    }

    pub fn len(&self) -> usize {
        self.dec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dec.is_empty()
    }

    /// `G_t`: the subgraph induced by the bags below `t`.
    pub fn subgraph(&self, g: &Graph, t: usize) -> Graph {
        g.induced(&self.subtree_vertices[t])
    }

    fn cfg(&self) -> OracleConfig {
        OracleConfig { budget: self.budget }
    }

    /// The heaviest child with adhesion `{u, v}`, ties to the lowest id.
    fn child_on(&self, t: usize, u: Vertex, v: Vertex) -> Option<usize> {
        let pair = edge(u, v);
        let mut best: Option<usize> = None;
        for &c in &self.children[t] {
            if self.x[c] == pair && best.map_or(true, |b| self.subtree_weight[c] > self.subtree_weight[b]) {
                best = Some(c);
            }
        }
        best
    }
}

fn root_pair(g: &Graph, dec: &StandardDecomposition, t: usize) -> Option<(Vertex, Vertex)> {
    let avoid: BTreeSet<Vertex> = match dec.neighbors(t).first() {
        Some(&c) => {
            let (a, b) = dec.adhesion(t, c).expect("tree edge");
            BTreeSet::from([a, b])
        }
        None => BTreeSet::new(),
    };
    g.induced(dec.bag(t)).edges().into_iter().find(|(a, b)| !avoid.contains(a) && !avoid.contains(b))
}

/// A spanning tree of `G_t - x` rooted at the other vertex of `X_t`, with
/// at most `k^l` vertices at depth `l`.
///
/// If `G_t + xx'` is the critical side the tree is a DFS tree of `G_t - x`.
/// Otherwise it is a DFS tree of `G_t / xx'` that leaves the merged vertex
/// along a single edge of `x'`, read back in `G_t - x`.
pub fn bounded_spanning_tree(g: &Graph, rdec: &RootedDecomposition, t: usize, x: Vertex) -> Result<RootedTree> {
    let p = rdec.parent[t].ok_or_else(|| Error::Precondition("the root has no parent pair".into()))?;
    let (a, b) = rdec.x[t];
    let xp = match x {
        _ if x == a => b,
        _ if x == b => a,
        _ => return Err(Error::Precondition(format!("{x} is not in the parent pair of node {t}"))),
    };
    let gt = rdec.subgraph(g, t);
    let class = rdec.dec.nodes[t]
        .virtual_edges
        .iter()
        .find(|ve| ve.neighbor == p)
        .and_then(|ve| ve.classification)
        .ok_or_else(|| Error::Precondition(format!("node {t} is not classified")))?;
    let tree = match class {
        Classification::Additive => dfs_spanning_tree(&gt.without_vertices(&BTreeSet::from([x])), xp, None)?,
        Classification::Contractive => {
            let w = gt
                .neighbors(xp)
                .find(|&w| w != x)
                .ok_or_else(|| Error::Decomposition(format!("{xp} has no neighbour in G_{t} besides {x}")))?;
            let h = gt.contract(xp, x)?;
            let tree = dfs_spanning_tree(&h, xp, Some((xp, w)))?;
            if tree.children(xp) != vec![w] {
                return Err(Error::Decomposition(format!("merged vertex of node {t} has several tree edges")));
            }
            tree
        }
    };
    let host = gt.without_vertices(&BTreeSet::from([x]));
    if tree.len() != host.n() || tree.edges().iter().any(|&(u, v)| !host.has_edge(u, v)) {
        return Err(Error::Decomposition(format!("tree at node {t} does not span G_{t} - {x}")));
    }
    check_levels(&tree, rdec.k)?;
    Ok(tree)
}

fn cat(parts: &[&[Vertex]]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::new();
    for p in parts {
        for &v in p.iter() {
            if out.last() != Some(&v) {
                out.push(v);
            }
        }
    }
    out
}

fn rev(p: &[Vertex]) -> Vec<Vertex> {
    p.iter().rev().copied().collect()
}

/// A `u`–`v` path through `G_c` via a third vertex of the bag of `c`.
fn detour(g: &Graph, rdec: &RootedDecomposition, c: usize, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    let gc = rdec.subgraph(g, c);
    let w = rdec
        .dec
        .bag(c)
        .iter()
        .copied()
        .find(|&w| w != u && w != v)
        .ok_or_else(|| Error::Decomposition(format!("bag of node {c} has only two vertices")))?;
    let rest = gc.without_vertices(&BTreeSet::from([w]));
    let starts: BTreeSet<Vertex> = gc.neighbors(w).collect();
    match menger_paths(&rest, &starts, &BTreeSet::from([u, v]), 2) {
        MengerOutcome::Paths(ps) => {
            let to = |end: Vertex| ps.iter().find(|p| p.last() == Some(&end)).expect("one path per end");
            Ok(cat(&[&rev(to(u)), &[w], to(v)]))
        }
        MengerOutcome::Separator(_) => {
            Err(Error::Decomposition(format!("no two paths from {w} to {{{u}, {v}}} in G_{c}")))
        }
    }
}

/// Replaces every virtual edge on a torso path by a path through the child
/// subgraph behind it.
pub fn expand_virtual_path(g: &Graph, rdec: &RootedDecomposition, t: usize, torso_path: &PathWitness) -> Result<PathWitness> {
    let vs = &torso_path.vertices;
    let mut out = vec![vs[0]];
    for win in vs.windows(2) {
        let (u, v) = (win[0], win[1]);
        if g.has_edge(u, v) {
            out.push(v);
            continue;
        }
        if rdec.parent[t].is_some() && rdec.x[t] == edge(u, v) {
            return Err(Error::VirtualParentEdgeOnPath(u, v));
        }
        let c = rdec
            .child_on(t, u, v)
            .ok_or_else(|| Error::InvalidWitness(format!("{u}-{v} is neither an edge nor a virtual edge at node {t}")))?;
        out.extend_from_slice(&detour(g, rdec, c, u, v)?[1..]);
    }
    let mut p = PathWitness::new(out);
    p.claimed_length = torso_path.length();
    p.trace = torso_path.trace.clone();
    p.validate(g)?;
    Ok(p)
}

/// Vertices of a cycle graph in cyclic order from its least vertex.
fn cycle_order(h: &Graph) -> CycleWitness {
    let start = h.vertices().next().expect("non-empty");
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = h.neighbors(start).next().expect("cycle");
    while cur != start {
        order.push(cur);
        let next = h.neighbors(cur).find(|&w| w != prev).expect("cycle");
        prev = cur;
        cur = next;
    }
    CycleWitness::new(order)
}

fn longer(arcs: (Vec<Vertex>, Vec<Vertex>)) -> Vec<Vertex> {
    if arcs.1.len() > arcs.0.len() {
        arcs.1
    } else {
        arcs.0
    }
}

/// Least `L` with `k^(100 L) >= w`.
fn thm_bound(w: usize, k: usize) -> usize {
    (0..).find(|&l| pow_at_least(k, 100 * l, w)).expect("unbounded search")
}

/// A path in `G_t` joining the two vertices of `X_t`, of length at least
/// `log w(T_t) / (100 log k)`.
pub fn key_path(g: &Graph, rdec: &RootedDecomposition, t: usize) -> Result<PathWitness> {
    let (x0, x1) = rdec.x[t];
    let mut p = key_path_inner(g, rdec, t)?;
    if p.first() != x0 {
        let trace = std::mem::take(&mut p.trace);
        p = p.reversed();
        p.trace = trace;
    }
    p.claimed_length = thm_bound(rdec.subtree_weight[t] as usize, rdec.k);
    p.validate_ends(g, x0, x1)?;
    if !p.vertex_set().is_subset(&rdec.subtree_vertices[t]) {
        return Err(Error::InvalidWitness(format!("path for node {t} leaves G_{t}")));
    }
    Ok(p)
}

fn key_path_inner(g: &Graph, rdec: &RootedDecomposition, t: usize) -> Result<PathWitness> {
    let (x, xp) = rdec.x[t];
    let w_t = rdec.weight[t];
    let rest = rdec.subtree_weight[t] - w_t;
    if rdec.children[t].is_empty() || 5 * w_t >= rdec.subtree_weight[t] {
        return base_case(g, rdec, t);
    }
    let xs = BTreeSet::from([x, xp]);
    let mut n0: Vec<usize> = Vec::new();
    let mut n1: Vec<usize> = Vec::new();
    let mut n2: Vec<usize> = Vec::new();
    for &c in &rdec.children[t] {
        let (a, b) = rdec.x[c];
        match (xs.contains(&a) || xs.contains(&b), a == x || b == x, a == xp || b == xp) {
            (false, _, _) => n0.push(c),
            (true, true, false) => n1.push(c),
            (true, false, true) => n2.push(c),
            // A child on the same pair as the parent; it carries no path.
            _ => {}
        }
    }
    let sum = |cs: &[usize]| cs.iter().map(|&c| rdec.subtree_weight[c]).sum::<u64>();
    if 4 * sum(&n0) >= 3 * rest {
        let c = *n0
            .iter()
            .max_by(|&&a, &&b| rdec.subtree_weight[a].cmp(&rdec.subtree_weight[b]).then(b.cmp(&a)))
            .expect("non-empty");
        return through_child(g, rdec, t, c);
    }
    let (far, near, chosen) = if sum(&n1) >= sum(&n2) { (x, xp, n1) } else { (xp, x, n2) };
    if sum(&chosen) == 0 {
        return base_case(g, rdec, t);
    }
    let mut phi: BTreeMap<Vertex, u64> = BTreeMap::new();
    let mut owner: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &c in &chosen {
        let (a, b) = rdec.x[c];
        let v = if a == far { b } else { a };
        if phi.get(&v).map_or(true, |&w| rdec.subtree_weight[c] > w) {
            phi.insert(v, rdec.subtree_weight[c]);
            owner.insert(v, c);
        }
    }
    let tree = bounded_spanning_tree(g, rdec, t, far)?;
    let (v, depth) = heavy_vertex(&tree, &phi, rdec.k)?;
    let c = owner[&v];
    let q = key_path(g, rdec, c)?;
    let q_from_v = if q.first() == v { q.vertices.clone() } else { rev(&q.vertices) };
    let vs = cat(&[&tree.path_from_root(v), &q_from_v]);
    debug_assert_eq!((vs[0], *vs.last().unwrap()), (near, far));
    let mut p = PathWitness::new(vs);
    p.trace.push(format!("node {t}: heavy vertex {v} at depth {depth}, child {c} on {{{far}, {v}}}"));
    p.trace.extend(q.trace);
    p.validate(g)?;
    Ok(p)
}

/// Splices the key path of child `c` (whose pair avoids `X_t`) into two
/// disjoint torso paths from `X_t` to `X_c`.
fn through_child(g: &Graph, rdec: &RootedDecomposition, t: usize, c: usize) -> Result<PathWitness> {
    let (x, xp) = rdec.x[t];
    let (u, v) = rdec.x[c];
    let h = rdec.dec.torso(t);
    let (to_a, from_b, note) = if is_cycle_graph(h) {
        // The long way round from x' to x meets u and v consecutively.
        let arc = longer(cycle_order(h).arcs_between(xp, x));
        let i = arc.windows(2).position(|w| edge(w[0], w[1]) == edge(u, v)).expect("pair on the cycle");
        (rev(&arc[..=i]), rev(&arc[i + 1..]), format!("node {t}: cycle torso of length {}, heavy child {c}", h.n()))
    } else {
        let lp = longest_path_with(h, &rdec.cfg())?;
        let report = find_linkage_report(h, (x, xp), (u, v), &lp, &rdec.cfg())?;
        let [p, q] = report.linkage.paths;
        let (px, pxp) = if p[0] == x { (p, q) } else { (q, p) };
        let note = format!(
            "node {t}: heavy child {c}, linkage of length {} from torso path {}",
            px.len() + pxp.len() - 2,
            lp.length()
        );
        (px, pxp, note)
    };
    // to_a runs from x to one end of X_c, from_b from x' to the other.
    let a = *to_a.last().expect("non-empty");
    let pa = expand_virtual_path(g, rdec, t, &PathWitness::new(to_a))?;
    let pb = expand_virtual_path(g, rdec, t, &PathWitness::new(from_b))?;
    let q = key_path(g, rdec, c)?;
    let q_from_a = if q.first() == a { q.vertices.clone() } else { rev(&q.vertices) };
    let mut p = PathWitness::new(cat(&[&pa.vertices, &q_from_a, &rev(&pb.vertices)]));
    p.trace.push(note);
    p.trace.extend(q.trace);
    p.validate(g)?;
    Ok(p)
}

/// A long torso path joining `X_t`, from a long torso cycle and two
/// disjoint paths to it, with virtual edges expanded.
fn base_case(g: &Graph, rdec: &RootedDecomposition, t: usize) -> Result<PathWitness> {
    let (x, xp) = rdec.x[t];
    let h = rdec.dec.torso(t);
    let (torso_path, note) = if is_cycle_graph(h) {
        let arc = longer(cycle_order(h).arcs_between(x, xp));
        (arc, format!("node {t}: base case, cycle torso of length {}", h.n()))
    } else {
        let c = long_cycle_3connected_with(h, &rdec.cfg())?;
        let on: BTreeSet<Vertex> = c.vertex_set();
        let path = if on.contains(&x) && on.contains(&xp) {
            longer(c.arcs_between(x, xp))
        } else {
            match menger_paths(h, &BTreeSet::from([x, xp]), &on, 2) {
                MengerOutcome::Paths(ps) => {
                    let from = |s: Vertex| ps.iter().find(|p| p[0] == s).expect("one path per start").clone();
                    let (px, pxp) = (from(x), from(xp));
                    let arc = longer(c.arcs_between(*px.last().unwrap(), *pxp.last().unwrap()));
                    cat(&[&px, &arc, &rev(&pxp)])
                }
                MengerOutcome::Separator(_) => return Err(Error::NotThreeConnected),
            }
        };
        (path, format!("node {t}: base case, torso cycle of length {}", c.length()))
    };
    let mut p = expand_virtual_path(g, rdec, t, &PathWitness::new(torso_path))?;
    p.trace.push(note);
    Ok(p)
}

pub fn long_cycle_critical(g: &Graph, k: usize) -> Result<CycleWitness> {
    long_cycle_critical_with(g, k, DEFAULT_COLOR_BUDGET)
}

/// A cycle of length at least `log n / (100 log k)` in a k-critical graph:
/// the key path at the root closed by the root edge.
pub fn long_cycle_critical_with(g: &Graph, k: usize, budget: u64) -> Result<CycleWitness> {
    if !is_k_critical_with(g, k, budget)?.is_critical {
        return Err(Error::NotCritical(k));
    }
    let dec = standard_tree_decomposition(g)?;
    let rdec = RootedDecomposition::new_with(g, &dec, k, budget)?;
    let total = rdec.subtree_weight[rdec.root];
    if total < g.m() as u64 || g.m() < g.n() {
        return Err(Error::BoundNotMet(format!("total weight {total}, {} edges, {} vertices", g.m(), g.n())));
    }
    let p = key_path(g, &rdec, rdec.root)?;
    let mut c = CycleWitness::new(p.vertices);
    c.claimed_length = thm_bound(g.n(), k);
    c.trace = p.trace;
    c.trace.push(format!("closed by the root edge {:?} at node {}", rdec.x[rdec.root], rdec.root));
    c.validate(g)?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, gallai_regular, hj7, petersen, star, wheel};
    use crate::oracle::longest_cycle_exact;

    #[test]
    fn dfs_paths_meet_the_bound() {
        assert_eq!(long_path_via_dfs(&complete(4), 4).unwrap().length(), 3);
        assert_eq!(long_path_via_dfs(&complete(5), 5).unwrap().length(), 4);
        let p = long_path_via_dfs(&gallai_regular(4, 1), 4).unwrap();
        assert!(p.length() >= 4 && p.claimed_length == 4);
    }

    #[test]
    fn levels_of_a_star_fail() {
        let k4 = complete(4);
        let t = dfs_spanning_tree(&k4, 0, None).unwrap();
        let r = level_certificate(&k4, 4, &BTreeSet::new(), &t).unwrap();
        assert_eq!(r.levels.iter().map(|l| l.count).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        assert!(r.pass());
        let s = star(9);
        let t = dfs_spanning_tree(&s, 0, None).unwrap();
        let r = level_certificate(&s, 4, &BTreeSet::new(), &t).unwrap();
        assert_eq!(r.violations().len(), 1);
        assert_eq!(r.violations()[0].level, 1);
    }

    #[test]
    fn heavy_vertex_examples() {
        let path = RootedTree::from_parents(0, BTreeMap::from([(0, 0), (1, 0), (2, 1)])).unwrap();
        let phi = BTreeMap::from([(1, 1), (2, 8)]);
        assert_eq!(heavy_vertex(&path, &phi, 2).unwrap(), (2, 2));
        assert_eq!(heavy_vertex(&path, &BTreeMap::new(), 2), Err(Error::AllZeroWeights));
        let leaf = RootedTree::from_parents(0, BTreeMap::from([(0, 0), (1, 0)])).unwrap();
        assert_eq!(heavy_vertex(&leaf, &BTreeMap::from([(1, 40)]), 2).unwrap(), (1, 1));
        let wide = RootedTree::from_parents(0, (0..5).map(|v| (v, 0)).collect()).unwrap();
        assert!(matches!(heavy_vertex(&wide, &BTreeMap::from([(1, 1)]), 2), Err(Error::LevelBoundViolated { .. })));
    }

    fn hj7_rooted() -> (Graph, RootedDecomposition) {
        let g = hj7();
        let dec = standard_tree_decomposition(&g).unwrap();
        let r = RootedDecomposition::new(&g, &dec, 4).unwrap();
        (g, r)
    }

    #[test]
    fn hj7_rooting() {
        let (_, r) = hj7_rooted();
        assert_eq!(r.root, 0);
        assert_eq!(r.x[0], (2, 3));
        assert_eq!(r.children[0], vec![1]);
        assert_eq!(r.x[1], (0, 1));
        assert_eq!(r.x[2], (0, 4));
        assert_eq!(r.weight, vec![6, 3, 6]);
        assert_eq!(r.subtree_weight, vec![15, 9, 6]);
    }

    #[test]
    fn hj7_spanning_trees() {
        let (g, r) = hj7_rooted();
        // Leaf K4 side: G_2 + z l2 is K4, so a DFS of K4 - z from l2.
        let t = bounded_spanning_tree(&g, &r, 2, 0).unwrap();
        assert_eq!(t.root, 4);
        assert_eq!(t.level_counts(), vec![1, 1, 1]);
        // Middle node: G_1 / z k2 is K4.
        let t = bounded_spanning_tree(&g, &r, 1, 0).unwrap();
        assert_eq!(t.root, 1);
        assert_eq!(t.children(1), vec![4]);
        assert_eq!(t.len(), 4);
        assert!(bounded_spanning_tree(&g, &r, 0, 2).is_err());
    }

    #[test]
    fn hj7_expansion() {
        let (g, r) = hj7_rooted();
        let p = expand_virtual_path(&g, &r, 1, &PathWitness::new(vec![1, 4, 0])).unwrap();
        assert_eq!(p.first(), 1);
        assert_eq!(p.last(), 0);
        assert_eq!(p.length(), 3);
        assert!(p.vertices[2] == 5 || p.vertices[2] == 6);
        assert_eq!(
            expand_virtual_path(&g, &r, 1, &PathWitness::new(vec![0, 1])),
            Err(Error::VirtualParentEdgeOnPath(0, 1))
        );
        let same = expand_virtual_path(&g, &r, 0, &PathWitness::new(vec![0, 2, 1])).unwrap();
        assert_eq!(same.vertices, vec![0, 2, 1]);
    }

    #[test]
    fn hj7_key_paths() {
        let (g, r) = hj7_rooted();
        let p = key_path(&g, &r, 1).unwrap();
        assert!(p.length() >= 2);
        assert_eq!((p.first(), p.last()), (0, 1));
        let c = long_cycle_critical(&g, 4).unwrap();
        assert!(c.length() >= 6 && c.length() <= longest_cycle_exact(&g).unwrap().length());
    }

    #[test]
    fn small_critical_graphs() {
        let k4 = long_cycle_critical(&complete(4), 4).unwrap();
        assert_eq!(k4.length(), 4);
        let w5 = wheel(5);
        let c = long_cycle_critical(&w5, 4).unwrap();
        assert!(c.length() <= longest_cycle_exact(&w5).unwrap().length());
        let ga13 = gallai_regular(4, 1);
        assert!(long_cycle_critical(&ga13, 4).unwrap().length() >= 6);
        assert_eq!(long_cycle_critical(&petersen(), 4), Err(Error::NotCritical(4)));
    }
}
