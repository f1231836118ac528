//! Vertex connectivity up to three, cut vertices and separation pairs.

use crate::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Connectivity {
    /// Largest `t <= 3` such that the graph is `t`-connected.
    pub level: usize,
    /// A separator of size `level`, when one exists.
    pub separator: Option<BTreeSet<Vertex>>,
}

/// Cut vertices of `g`, ascending. Works per component.
pub fn articulation_points(g: &Graph) -> BTreeSet<Vertex> {
    let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut out = BTreeSet::new();
    let mut time = 0;
    for root in g.vertices() {
        if disc.contains_key(&root) {
            continue;
        }
        disc.insert(root, time);
        low.insert(root, time);
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, neighbour list, next index)
        let mut stack: Vec<(Vertex, Option<Vertex>, Vec<Vertex>, usize)> =
            vec![(root, None, g.neighbors(root).collect(), 0)];
        while let Some(top) = stack.last_mut() {
            let (v, parent) = (top.0, top.1);
            if top.3 < top.2.len() {
                let w = top.2[top.3];
                top.3 += 1;
                if Some(w) == parent {
                    continue;
                }
                if let Some(&dw) = disc.get(&w) {
                    let lv = low[&v].min(dw);
                    low.insert(v, lv);
                } else {
                    disc.insert(w, time);
                    low.insert(w, time);
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, Some(v), g.neighbors(w).collect(), 0));
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    let lv = low[&v];
                    let lp = low[&p].min(lv);
                    low.insert(p, lp);
                    if p != root && lv >= disc[&p] {
                        out.insert(p);
                    }
                }
            }
        }
        if root_children >= 2 {
            out.insert(root);
        }
    }
    out
}

/// Lexicographically least pair whose removal disconnects `g`, if any.
pub fn separation_pair(g: &Graph) -> Option<(Vertex, Vertex)> {
    for u in g.vertices() {
        let h = g.without_vertices(&BTreeSet::from([u]));
        if let Some(&v) = articulation_points(&h).iter().next() {
            return Some((u.min(v), u.max(v)));
        }
    }
    None
}

pub fn connectivity(g: &Graph) -> Connectivity {
    let n = g.n();
    if n < 2 {
        return Connectivity { level: 0, separator: None };
    }
    if !g.is_connected() {
        return Connectivity { level: 0, separator: Some(BTreeSet::new()) };
    }
    if n < 3 {
        return Connectivity { level: 1, separator: None };
    }
    if let Some(&a) = articulation_points(g).iter().next() {
        return Connectivity { level: 1, separator: Some(BTreeSet::from([a])) };
    }
    if n < 4 {
        return Connectivity { level: 2, separator: None };
    }
    match separation_pair(g) {
        Some((u, v)) => Connectivity { level: 2, separator: Some(BTreeSet::from([u, v])) },
        None => Connectivity { level: 3, separator: None },
    }
}

pub fn is_two_connected(g: &Graph) -> bool {
    connectivity(g).level >= 2
}

pub fn is_three_connected(g: &Graph) -> bool {
    connectivity(g).level >= 3
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, path_graph};

    #[test]
    fn cycle_is_two_connected() {
        let c = connectivity(&cycle(5));
        assert_eq!(c.level, 2);
        let sep = c.separator.unwrap();
        let v: Vec<_> = sep.iter().copied().collect();
        assert!(!cycle(5).has_edge(v[0], v[1]));
        assert_eq!(cycle(5).without_vertices(&sep).components().len(), 2);
    }

    #[test]
    fn k4_is_three_connected() {
        assert_eq!(connectivity(&complete(4)), Connectivity { level: 3, separator: None });
    }

    #[test]
    fn path_has_a_cut_vertex() {
        assert_eq!(
            connectivity(&path_graph(3)),
            Connectivity { level: 1, separator: Some(BTreeSet::from([1])) }
        );
    }

    #[test]
    fn small_and_disconnected() {
        assert_eq!(connectivity(&Graph::with_vertices([0])).level, 0);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connectivity(&g).level, 0);
        assert_eq!(connectivity(&complete(3)).level, 2);
    }

    #[test]
    fn articulation_points_of_bowtie() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(articulation_points(&g), BTreeSet::from([2]));
    }
}
