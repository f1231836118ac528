//! Rooted spanning trees and depth-first search.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedTree {
    pub root: Vertex,
    /// The root maps to itself.
    pub parent: BTreeMap<Vertex, Vertex>,
    pub depth: BTreeMap<Vertex, usize>,
}

impl RootedTree {
    /// Builds a tree from a parent map; fails on cycles or dangling parents.
    pub fn from_parents(root: Vertex, parent: BTreeMap<Vertex, Vertex>) -> Result<Self> {
        if parent.get(&root) != Some(&root) {
            return Err(Error::NotDfsTree("root must be its own parent".into()));
        }
        let mut depth = BTreeMap::new();
        depth.insert(root, 0);
        for &v in parent.keys() {
            let mut chain = Vec::new();
            let mut cur = v;
            while !depth.contains_key(&cur) {
                chain.push(cur);
                if chain.len() > parent.len() {
                    return Err(Error::NotDfsTree("parent map has a cycle".into()));
                }
                cur = *parent
                    .get(&cur)
                    .ok_or_else(|| Error::NotDfsTree(format!("vertex {cur} has no parent")))?;
            }
            let mut d = depth[&cur];
            for &c in chain.iter().rev() {
                d += 1;
                depth.insert(c, d);
            }
        }
        Ok(Self { root, parent, depth })
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.parent.keys().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.parent.contains_key(&v)
    }

    pub fn children(&self, v: Vertex) -> Vec<Vertex> {
        self.parent
            .iter()
            .filter(|&(&c, &p)| p == v && c != v)
            .map(|(&c, _)| c)
            .collect()
    }

    /// Vertices from the root down to `v`.
    pub fn path_from_root(&self, v: Vertex) -> Vec<Vertex> {
        let mut path = vec![v];
        let mut cur = v;
        while self.parent[&cur] != cur {
            cur = self.parent[&cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    pub fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        let mut cur = b;
        loop {
            if cur == a {
                return true;
            }
            let p = self.parent[&cur];
            if p == cur {
                return false;
            }
            cur = p;
        }
    }

    /// Number of vertices at each depth, starting with the root.
    pub fn level_counts(&self) -> Vec<usize> {
        let max = self.depth.values().copied().max().unwrap_or(0);
        let mut counts = vec![0; max + 1];
        for &d in self.depth.values() {
            counts[d] += 1;
        }
        counts
    }

    /// The deepest vertex, ties broken by least id.
    pub fn deepest(&self) -> Vertex {
        let mut best = self.root;
        for (&v, &d) in &self.depth {
            if d > self.depth[&best] {
                best = v;
            }
        }
        best
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.parent.iter().filter(|(c, p)| c != p).map(|(&c, &p)| (p, c)).collect()
    }

    /// Checks that this is a spanning tree of `g` whose tree edges are
    /// edges of `g` and in which every edge of `g` joins an ancestor and a
    /// descendant.
    pub fn check_dfs_tree(&self, g: &Graph) -> Result<()> {
        if g.vertex_set() != self.parent.keys().copied().collect::<BTreeSet<_>>() {
            return Err(Error::NotDfsTree("tree does not span the graph".into()));
        }
        for (p, c) in self.edges() {
            if !g.has_edge(p, c) {
                return Err(Error::NotDfsTree(format!("tree edge {p}-{c} not in graph")));
            }
        }
        for (x, y) in g.edges() {
            if !self.is_ancestor(x, y) && !self.is_ancestor(y, x) {
                return Err(Error::NotDfsTree(format!("edge {x}-{y} is a cross edge")));
            }
        }
        Ok(())
    }
}

/// Depth-first spanning tree of a connected graph, neighbours taken in
/// ascending order. When `first_edge` is given the search leaves the root
/// along it before anything else.
pub fn dfs_spanning_tree(
    g: &Graph,
    root: Vertex,
    first_edge: Option<(Vertex, Vertex)>,
) -> Result<RootedTree> {
    if !g.contains(root) {
        return Err(Error::MissingVertex(root));
    }
    let first = match first_edge {
        Some((a, b)) if a == root && g.has_edge(a, b) => Some(b),
        Some((a, b)) if b == root && g.has_edge(a, b) => Some(a),
        Some((a, b)) => return Err(Error::BadFirstEdge(a, b)),
        None => None,
    };
    let mut parent = BTreeMap::from([(root, root)]);
    let mut depth = BTreeMap::from([(root, 0usize)]);
    let mut root_order: Vec<Vertex> = g.neighbors(root).collect();
    if let Some(f) = first {
        root_order.retain(|&v| v != f);
        root_order.insert(0, f);
    }
    let mut stack: Vec<(Vertex, Vec<Vertex>, usize)> = vec![(root, root_order, 0)];
    while let Some((v, order, idx)) = stack.last_mut() {
        if *idx == order.len() {
            stack.pop();
            continue;
        }
        let w = order[*idx];
        *idx += 1;
        let v = *v;
        if parent.contains_key(&w) {
            continue;
        }
        parent.insert(w, v);
        depth.insert(w, depth[&v] + 1);
        stack.push((w, g.neighbors(w).collect(), 0));
    }
    if parent.len() != g.n() {
        return Err(Error::DisconnectedInput);
    }
    Ok(RootedTree { root, parent, depth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, path_graph};

    #[test]
    fn dfs_of_k4_is_a_path() {
        let t = dfs_spanning_tree(&complete(4), 0, None).unwrap();
        assert_eq!(t.path_from_root(3), vec![0, 1, 2, 3]);
        assert_eq!(t.depth[&3], 3);
        t.check_dfs_tree(&complete(4)).unwrap();
    }

    #[test]
    fn dfs_of_a_tree_is_the_tree() {
        let g = path_graph(3);
        let t = dfs_spanning_tree(&g, 0, None).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn disconnected_input() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(dfs_spanning_tree(&g, 0, None), Err(Error::DisconnectedInput));
    }

    #[test]
    fn first_edge_is_respected() {
        let g = complete(4);
        let t = dfs_spanning_tree(&g, 0, Some((0, 3))).unwrap();
        assert_eq!(t.children(0), vec![3]);
        t.check_dfs_tree(&g).unwrap();
        assert!(matches!(
            dfs_spanning_tree(&g, 0, Some((1, 2))),
            Err(Error::BadFirstEdge(1, 2))
        ));
    }

    #[test]
    fn cross_edges_are_detected() {
        // Star rooted at its centre is a BFS tree of the triangle-plus-pendant, not DFS.
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let t = RootedTree::from_parents(0, BTreeMap::from([(0, 0), (1, 0), (2, 0)])).unwrap();
        assert!(t.check_dfs_tree(&g).is_err());
    }
}
