//! Simple undirected graphs with stable vertex identifiers.
//!
//! Adjacency is kept in ordered maps so that every traversal visits
//! neighbours in ascending id order. All the deterministic tie-breaking in
//! the crate relies on that.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

pub type Vertex = usize;

/// An edge stored with its smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v);
        }
        g
    }

    /// Builds a graph on `0..n` from an edge list.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut g = Self::with_vertices(0..n);
        for &(u, v) in edges {
            if !g.contains(u) {
                return Err(Error::MissingVertex(u));
            }
            if !g.contains(v) {
                return Err(Error::MissingVertex(v));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds the edge `uv`, inserting missing endpoints. Parallel edges are
    /// silently merged; loops are rejected.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj.entry(u).or_default().insert(v);
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let a = self.adj.get_mut(&u).map_or(false, |s| s.remove(&v));
        let b = self.adj.get_mut(&v).map_or(false, |s| s.remove(&u));
        a && b
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                if let Some(s) = self.adj.get_mut(&u) {
                    s.remove(&v);
                }
            }
        }
        self.labels.remove(&v);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).map_or(false, |s| s.contains(&v))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn neighbor_set(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj.get(&v).map_or(0, BTreeSet::len)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).min().unwrap_or(0)
    }

    /// Edges in lexicographic order, smaller endpoint first.
    pub fn edges(&self) -> Vec<Edge> {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Label if present, otherwise the numeric id.
    pub fn display_name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_string)
    }

    /// Finds the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        self.labels.iter().find(|(_, l)| l.as_str() == label).map(|(&v, _)| v)
    }

    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if let Some(nbrs) = self.adj.get(&v) {
                g.adj.insert(v, nbrs.intersection(keep).copied().collect());
                if let Some(l) = self.labels.get(&v) {
                    g.labels.insert(v, l.clone());
                }
            }
        }
        g
    }

    pub fn without_vertices(&self, drop: &BTreeSet<Vertex>) -> Graph {
        let keep = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// `G + uv`: adds the edge if absent.
    pub fn plus_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// `G / uv`: identifies `v` into `u`, dropping the edge `uv` and any
    /// parallel edges. The merged vertex keeps the id `u`.
    pub fn contract(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.contains(u) {
            return Err(Error::MissingVertex(u));
        }
        if !self.contains(v) {
            return Err(Error::MissingVertex(v));
        }
        if u == v {
            return Ok(self.clone());
        }
        let mut g = self.clone();
        let moved: Vec<Vertex> = g.neighbors(v).collect();
        g.remove_vertex(v);
        for w in moved {
            if w != u {
                g.add_edge(u, w)?;
            }
        }
        let merged = format!("{}={}", self.display_name(u), self.display_name(v));
        if self.label(u).is_some() || self.label(v).is_some() {
            g.set_label(u, merged);
        }
        Ok(g)
    }

    /// Connected components as sorted vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(x) = queue.pop_front() {
                comp.insert(x);
                for y in self.neighbors(x) {
                    if seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Shortest path from `from` to `to` avoiding `blocked` (BFS, ascending
    /// tie-break).
    pub fn shortest_path(
        &self,
        from: Vertex,
        to: Vertex,
        blocked: &BTreeSet<Vertex>,
    ) -> Option<Vec<Vertex>> {
        self.shortest_path_to_set(&BTreeSet::from([from]), &BTreeSet::from([to]), blocked)
    }

    /// Shortest path from any vertex of `sources` to any vertex of
    /// `targets`, whose interior avoids `blocked`, `sources` and `targets`.
    pub fn shortest_path_to_set(
        &self,
        sources: &BTreeSet<Vertex>,
        targets: &BTreeSet<Vertex>,
        blocked: &BTreeSet<Vertex>,
    ) -> Option<Vec<Vertex>> {
        let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &s in sources {
            if blocked.contains(&s) || !self.contains(s) {
                continue;
            }
            if targets.contains(&s) {
                return Some(vec![s]);
            }
            prev.insert(s, s);
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(x) {
                if prev.contains_key(&y) || blocked.contains(&y) || sources.contains(&y) {
                    continue;
                }
                prev.insert(y, x);
                if targets.contains(&y) {
                    let mut path = vec![y];
                    let mut cur = y;
                    while prev[&cur] != cur {
                        cur = prev[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// Whether the vertex sets of `self` and `other` are disjoint.
    pub fn is_disjoint_from(&self, other: &Graph) -> bool {
        self.vertices().all(|v| !other.contains(v))
    }

    /// Copies `other` into `self`, shifting every id by `offset`.
    pub fn absorb_shifted(&mut self, other: &Graph, offset: Vertex) {
        for v in other.vertices() {
            self.add_vertex(v + offset);
            if let Some(l) = other.label(v) {
                self.set_label(v + offset, l);
            }
        }
        for (u, v) in other.edges() {
            self.add_edge(u + offset, v + offset).expect("source graph is loop-free");
        }
    }

    /// Relabels vertices to `0..n` in ascending order; returns the new graph
    /// and the old id of each new vertex.
    pub fn compacted(&self) -> (Graph, Vec<Vertex>) {
        let order: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> =
            order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::with_vertices(0..order.len());
        for (u, v) in self.edges() {
            g.add_edge(index[&u], index[&v]).expect("source graph is loop-free");
        }
        for (v, l) in &self.labels {
            g.set_label(index[v], l.clone());
        }
        (g, order)
    }

    /// Whether the graph admits a proper 2-colouring.
    pub fn is_bipartite(&self) -> bool {
        let mut side: BTreeMap<Vertex, bool> = BTreeMap::new();
        for s in self.vertices() {
            if side.contains_key(&s) {
                continue;
            }
            side.insert(s, false);
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                let sx = side[&x];
                for y in self.neighbors(x) {
                    match side.get(&y) {
                        Some(&sy) if sy == sx => return false,
                        Some(_) => {}
                        None => {
                            side.insert(y, !sx);
                            queue.push_back(y);
                        }
                    }
                }
            }
        }
        true
    }

    /// Checks that `path` is a simple path of this graph.
    pub fn is_path(&self, path: &[Vertex]) -> bool {
        if path.is_empty() {
            return false;
        }
        let distinct: BTreeSet<_> = path.iter().collect();
        distinct.len() == path.len()
            && path.iter().all(|&v| self.contains(v))
            && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Checks that `cycle` is a simple cycle of this graph (cyclic order).
    pub fn is_cycle(&self, cycle: &[Vertex]) -> bool {
        cycle.len() >= 3
            && self.is_path(cycle)
            && self.has_edge(cycle[0], cycle[cycle.len() - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn rejects_loops() {
        let mut g = Graph::new();
        assert_eq!(g.add_edge(2, 2), Err(Error::Loop(2)));
    }

    #[test]
    fn edges_are_sorted_and_deduplicated() {
        let mut g = c4();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.m(), 4);
    }

    #[test]
    fn contraction_merges_parallel_edges() {
        let g = c4();
        let h = g.contract(0, 2).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), vec![(0, 1), (0, 3)]);
    }

    #[test]
    fn components_without_vertices() {
        let g = c4();
        let h = g.without_vertices(&BTreeSet::from([0, 2]));
        assert_eq!(h.components(), vec![BTreeSet::from([1]), BTreeSet::from([3])]);
    }

    #[test]
    fn shortest_path_respects_blocked_vertices() {
        let g = c4();
        assert_eq!(g.shortest_path(0, 2, &BTreeSet::from([1])), Some(vec![0, 3, 2]));
        assert_eq!(g.shortest_path(0, 2, &BTreeSet::from([1, 3])), None);
    }

    #[test]
    fn bipartiteness() {
        assert!(c4().is_bipartite());
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite());
    }

    #[test]
    fn path_and_cycle_checks() {
        let g = c4();
        assert!(g.is_path(&[0, 1, 2]));
        assert!(!g.is_path(&[0, 2]));
        assert!(g.is_cycle(&[0, 1, 2, 3]));
        assert!(!g.is_cycle(&[0, 1, 2]));
    }
}
