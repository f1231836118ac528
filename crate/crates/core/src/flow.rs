//! Vertex-disjoint paths between vertex sets via unit-capacity max-flow.
//!
//! Every path returned is a minimal S–T path: its first vertex is its only
//! vertex in S and its last vertex is its only vertex in T. A vertex of
//! S ∩ T forms a path of length zero. When S (or T) is a single vertex the
//! paths share that end and are otherwise disjoint, which is the two-vertex
//! form of Menger's theorem.

use crate::connectivity::connectivity;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MengerOutcome {
    Paths(Vec<Vec<Vertex>>),
    Separator(BTreeSet<Vertex>),
}

struct Arc {
    to: usize,
    cap: i64,
    flow: i64,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    ids: Vec<Vertex>,
    index: BTreeMap<Vertex, usize>,
}

impl Network {
    fn source(&self) -> usize {
        2 * self.ids.len()
    }
    fn sink(&self) -> usize {
        2 * self.ids.len() + 1
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, flow: 0 });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, flow: 0 });
    }

    fn build(g: &Graph, s: &BTreeSet<Vertex>, t: &BTreeSet<Vertex>) -> Self {
        let ids: Vec<Vertex> = g.vertices().collect();
        let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = ids.len();
        let big = n as i64 + 5;
        let mut net = Network { arcs: Vec::new(), out: vec![Vec::new(); 2 * n + 2], ids, index };
        let hub = |v: Vertex| {
            let lone_s = s.len() == 1 && s.contains(&v);
            let lone_t = t.len() == 1 && t.contains(&v);
            // A vertex in both sets is a single trivial path, never a fan.
            (lone_s || lone_t) && !(s.contains(&v) && t.contains(&v))
        };
        for (i, &v) in net.ids.clone().iter().enumerate() {
            net.add_arc(2 * i, 2 * i + 1, if hub(v) { big } else { 1 });
        }
        let (src, snk) = (net.source(), net.sink());
        for &v in s {
            if let Some(&i) = net.index.get(&v) {
                net.add_arc(src, 2 * i, big);
            }
        }
        for &v in t {
            if let Some(&i) = net.index.get(&v) {
                net.add_arc(2 * i + 1, snk, big);
            }
        }
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if !s.contains(&b) && !t.contains(&a) {
                    let (ia, ib) = (net.index[&a], net.index[&b]);
                    let cap = if hub(a) && hub(b) { 1 } else { big };
                    net.add_arc(2 * ia + 1, 2 * ib, cap);
                }
            }
        }
        net
    }

    fn push(&mut self, arc: usize, amount: i64) {
        self.arcs[arc].flow += amount;
        self.arcs[arc ^ 1].flow -= amount;
    }

    fn find_arc(&self, from: usize, to: usize) -> Option<usize> {
        self.out[from].iter().copied().find(|&a| a % 2 == 0 && self.arcs[a].to == to)
    }

    /// Routes one unit along an existing path; fails if the path is not
    /// a minimal S–T path or collides with flow already present.
    fn seed(&mut self, path: &[Vertex]) -> Result<()> {
        let bad = || Error::Precondition(format!("given path {path:?} is not a minimal S-T path"));
        let mut nodes = vec![self.source()];
        for &v in path {
            let i = *self.index.get(&v).ok_or(Error::MissingVertex(v))?;
            nodes.push(2 * i);
            nodes.push(2 * i + 1);
        }
        nodes.push(self.sink());
        for w in nodes.windows(2) {
            let a = self.find_arc(w[0], w[1]).ok_or_else(bad)?;
            if self.arcs[a].flow >= self.arcs[a].cap {
                return Err(Error::Precondition("given paths are not disjoint".into()));
            }
            self.push(a, 1);
        }
        Ok(())
    }

    /// Residual BFS from the source; returns the predecessor arcs.
    fn residual_bfs(&self) -> Vec<Option<usize>> {
        let mut pred: Vec<Option<usize>> = vec![None; self.out.len()];
        let src = self.source();
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let arc = &self.arcs[a];
                if arc.cap - arc.flow > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    pred[arc.to] = Some(a);
                    queue.push_back(arc.to);
                }
            }
        }
        pred
    }

    fn augment(&mut self) -> bool {
        let pred = self.residual_bfs();
        let snk = self.sink();
        if pred[snk].is_none() {
            return false;
        }
        let mut cur = snk;
        while cur != self.source() {
            let a = pred[cur].expect("on augmenting path");
            self.push(a, 1);
            cur = self.arcs[a ^ 1].to;
        }
        true
    }

    fn paths(&self) -> Vec<Vec<Vertex>> {
        let mut left: Vec<i64> = self.arcs.iter().map(|a| if a.cap > 0 { a.flow } else { 0 }).collect();
        let mut out = Vec::new();
        for &a in &self.out[self.source()] {
            while a % 2 == 0 && left[a] > 0 {
                left[a] -= 1;
                let mut path = Vec::new();
                let mut node = self.arcs[a].to;
                while node != self.sink() {
                    if node % 2 == 0 {
                        path.push(self.ids[node / 2]);
                    }
                    let next = self.out[node]
                        .iter()
                        .copied()
                        .find(|&b| left[b] > 0)
                        .expect("flow is conserved");
                    left[next] -= 1;
                    node = self.arcs[next].to;
                }
                out.push(path);
            }
        }
        out.sort();
        out
    }

    fn separator(&self) -> BTreeSet<Vertex> {
        let pred = self.residual_bfs();
        let reach = |x: usize| x == self.source() || pred[x].is_some();
        (0..self.ids.len())
            .filter(|&i| reach(2 * i) && !reach(2 * i + 1))
            .map(|i| self.ids[i])
            .collect()
    }
}

/// Either `r` disjoint S–T paths, or a separator of size less than `r`
/// meeting every S–T path.
pub fn menger_paths(
    g: &Graph,
    s: &BTreeSet<Vertex>,
    t: &BTreeSet<Vertex>,
    r: usize,
) -> MengerOutcome {
    let mut net = Network::build(g, s, t);
    let mut found = 0;
    while found < r && net.augment() {
        found += 1;
    }
    if found == r {
        MengerOutcome::Paths(net.paths())
    } else {
        MengerOutcome::Separator(net.separator())
    }
}

/// Extends `given` (r − 1 disjoint S–T paths) to r disjoint S–T paths by a
/// single augmenting path. All starts and ends of the given paths are kept,
/// so all but one output path starts at an old start and all but one ends
/// at an old end.
pub fn augment_paths(
    g: &Graph,
    s: &BTreeSet<Vertex>,
    t: &BTreeSet<Vertex>,
    given: &[Vec<Vertex>],
) -> Result<Vec<Vec<Vertex>>> {
    let r = given.len() + 1;
    if s.len() < r || t.len() < r {
        return Err(Error::Precondition(format!("|S| and |T| must be at least {r}")));
    }
    if connectivity(g).level < r.min(3) {
        return Err(Error::NotSufficientlyConnected);
    }
    let mut net = Network::build(g, s, t);
    for p in given {
        net.seed(p)?;
    }
    if !net.augment() {
        return Err(Error::NotSufficientlyConnected);
    }
    Ok(net.paths())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle};

    fn set(v: &[Vertex]) -> BTreeSet<Vertex> {
        v.iter().copied().collect()
    }

    #[test]
    fn k4_two_paths() {
        match menger_paths(&complete(4), &set(&[0, 1]), &set(&[2, 3]), 2) {
            MengerOutcome::Paths(p) => assert_eq!(p, vec![vec![0, 2], vec![1, 3]]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_separator() {
        assert_eq!(
            menger_paths(&cycle(4), &set(&[0]), &set(&[2]), 3),
            MengerOutcome::Separator(set(&[1, 3]))
        );
    }

    #[test]
    fn c4_internally_disjoint_paths() {
        match menger_paths(&cycle(4), &set(&[0]), &set(&[2]), 2) {
            MengerOutcome::Paths(p) => assert_eq!(p, vec![vec![0, 1, 2], vec![0, 3, 2]]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn c4_two_routes() {
        match menger_paths(&cycle(4), &set(&[0, 1, 3]), &set(&[2]), 1) {
            MengerOutcome::Paths(p) => assert_eq!(p, vec![vec![1, 2]]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn shared_vertex_is_a_trivial_path() {
        match menger_paths(&complete(5), &set(&[0, 1, 2]), &set(&[2, 3, 4]), 3) {
            MengerOutcome::Paths(p) => assert!(p.contains(&vec![2])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn augment_in_k5() {
        let g = complete(5);
        let out =
            augment_paths(&g, &set(&[0, 1, 2]), &set(&[2, 3, 4]), &[vec![0, 3], vec![1, 4]]).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.contains(&vec![2]));
        let starts: BTreeSet<_> = out.iter().map(|p| p[0]).collect();
        assert!(starts.is_superset(&set(&[0, 1])));
    }

    #[test]
    fn augment_needs_connectivity() {
        let g = cycle(4);
        let err = augment_paths(&g, &set(&[0, 1, 2]), &set(&[1, 2, 3]), &[vec![1], vec![2]]);
        assert_eq!(err, Err(Error::NotSufficientlyConnected));
    }
}
