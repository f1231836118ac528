//! Generators: small named graphs, Hajós sums, Gallai's tree construction
//! and the apex-over-comb graph that defeats linkages between overlapping
//! pairs.

use crate::error::{Error, Result};
use crate::graph::{edge, Graph, Vertex};
use std::collections::{BTreeMap, BTreeSet};

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v).expect("distinct");
        }
    }
    g
}

/// Cycle on `0..n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n).expect("n >= 3");
    }
    g
}

/// Path on `n` vertices `0..n`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(0..n);
    for i in 1..n {
        g.add_edge(i - 1, i).expect("distinct");
    }
    g
}

/// Rim `0..rim`, apex `rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut g = cycle(rim);
    for i in 0..rim {
        g.add_edge(rim, i).expect("distinct");
    }
    g
}

/// `C_n x K_2`: outer cycle `0..n`, inner cycle `n..2n`.
pub fn prism(n: usize) -> Graph {
    let mut g = cycle(n);
    for i in 0..n {
        g.add_edge(n + i, n + (i + 1) % n).expect("distinct");
        g.add_edge(i, n + i).expect("distinct");
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::with_vertices(0..a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("distinct");
        }
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

pub fn petersen() -> Graph {
    let mut g = Graph::with_vertices(0..10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).expect("distinct");
        g.add_edge(5 + i, 5 + (i + 2) % 5).expect("distinct");
        g.add_edge(i, 5 + i).expect("distinct");
    }
    g
}

/// Disjoint union of `a` and `b` plus every edge between them. The vertices
/// of `b` are shifted past those of `a`.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let offset = a.max_vertex().map_or(0, |m| m + 1);
    let mut g = a.clone();
    g.absorb_shifted(b, offset);
    for u in a.vertices() {
        for v in b.vertices() {
            g.add_edge(u, v + offset).expect("distinct");
        }
    }
    g
}

/// Hajós sum of `k` and `l` along `k1k2` and `l1l2`. The result is
/// relabelled to `0..n`: the vertices of `k` keep their relative order and
/// come first, followed by those of `l` other than `l1`.
pub fn hajos_sum(k: &Graph, (k1, k2): (Vertex, Vertex), l: &Graph, (l1, l2): (Vertex, Vertex)) -> Result<Graph> {
    if !k.has_edge(k1, k2) {
        return Err(Error::EdgeNotPresent(k1, k2));
    }
    if !l.has_edge(l1, l2) {
        return Err(Error::EdgeNotPresent(l1, l2));
    }
    if !k.is_disjoint_from(l) {
        return Err(Error::OverlappingVertexSets);
    }
    let (kc, korder) = k.compacted();
    let kidx = |v: Vertex| korder.binary_search(&v).expect("vertex of K");
    let mut g = kc.clone();
    g.remove_edge(kidx(k1), kidx(k2));
    let base = kc.n();
    let mut lmap: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    lmap.insert(l1, kidx(k1));
    for (i, v) in l.vertices().filter(|&v| v != l1).enumerate() {
        lmap.insert(v, base + i);
        g.add_vertex(base + i);
        if let Some(lab) = l.label(v) {
            g.set_label(base + i, lab);
        }
    }
    for (a, b) in l.edges() {
        if edge(a, b) != edge(l1, l2) {
            g.add_edge(lmap[&a], lmap[&b])?;
        }
    }
    g.add_edge(kidx(k2), lmap[&l2])?;
    let merged = kidx(k1);
    g.set_label(merged, format!("{}={}", k.display_name(k1), l.display_name(l1)));
    Ok(g)
}

/// The Hajós sum of two copies of `K4`, labelled
/// `z=0, k2=1, p=2, q=3, l2=4, r=5, s=6`.
pub fn hj7() -> Graph {
    let mut g = hajos_sum(&complete(4), (0, 1), &shifted(&complete(4), 4), (4, 5))
        .expect("K4 has these edges");
    for (v, name) in ["z", "k2", "p", "q", "l2", "r", "s"].iter().enumerate() {
        g.set_label(v, *name);
    }
    g
}

fn shifted(g: &Graph, offset: Vertex) -> Graph {
    let mut h = Graph::new();
    h.absorb_shifted(g, offset);
    h
}

/// Input to Gallai's construction. `tree` has nodes `0..`; every member of
/// `family` contains the hub `x0`, and `selection[(t, t')]` is the vertex
/// `v_{tt'}` of `family[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiSpec {
    pub k: usize,
    pub tree: Graph,
    pub family: BTreeMap<usize, Graph>,
    pub x0: Vertex,
    pub selection: BTreeMap<(usize, usize), Vertex>,
}

impl GallaiSpec {
    /// Every node gets `K_k` with hub `0`; selections take the lowest free
    /// neighbour of the hub, tree neighbours processed in ascending order.
    pub fn uniform(k: usize, tree: Graph) -> Result<Self> {
        let h = complete(k);
        let mut family = BTreeMap::new();
        let mut selection = BTreeMap::new();
        for t in tree.vertices() {
            family.insert(t, h.clone());
            let mut free = h.neighbors(0);
            for t2 in tree.neighbors(t) {
                let v = free.next().ok_or(Error::DegreeTooHigh { degree: tree.degree(t), limit: k - 1 })?;
                selection.insert((t, t2), v);
            }
        }
        Ok(Self { k, tree, family, x0: 0, selection })
    }

    fn check(&self) -> Result<()> {
        let tree = &self.tree;
        if tree.n() == 0 || !tree.is_connected() || tree.m() + 1 != tree.n() {
            return Err(Error::BadSelection("index graph is not a tree".into()));
        }
        for t in tree.vertices() {
            if tree.degree(t) > self.k - 1 {
                return Err(Error::DegreeTooHigh { degree: tree.degree(t), limit: self.k - 1 });
            }
            let h = self
                .family
                .get(&t)
                .ok_or_else(|| Error::BadSelection(format!("no graph for node {t}")))?;
            if !h.contains(self.x0) {
                return Err(Error::BadSelection(format!("graph of node {t} lacks the hub")));
            }
            let mut used = BTreeSet::new();
            for t2 in tree.neighbors(t) {
                let v = *self
                    .selection
                    .get(&(t, t2))
                    .ok_or_else(|| Error::BadSelection(format!("no vertex for ({t}, {t2})")))?;
                if v == self.x0 || !h.has_edge(self.x0, v) {
                    return Err(Error::BadSelection(format!("v({t},{t2}) = {v} is not a hub neighbour")));
                }
                if !used.insert(v) {
                    return Err(Error::BadSelection(format!("v({t},{t2}) = {v} reused")));
                }
            }
        }
        Ok(())
    }
}

/// Gallai's construction. The hub becomes vertex `0`; the other vertices of
/// each `H_t` follow in node order.
pub fn gallai_graph(spec: &GallaiSpec) -> Result<Graph> {
    spec.check()?;
    let mut g = Graph::with_vertices([0]);
    g.set_label(0, "x0");
    let mut map: BTreeMap<(usize, Vertex), Vertex> = BTreeMap::new();
    let mut next = 1;
    for t in spec.tree.vertices() {
        let h = &spec.family[&t];
        for v in h.vertices() {
            if v == spec.x0 {
                map.insert((t, v), 0);
            } else {
                map.insert((t, v), next);
                g.add_vertex(next);
                g.set_label(next, format!("t{t}.{v}"));
                next += 1;
            }
        }
        for (a, b) in h.edges() {
            g.add_edge(map[&(t, a)], map[&(t, b)])?;
        }
    }
    for (t, t2) in spec.tree.edges() {
        let a = map[&(t, spec.selection[&(t, t2)])];
        let b = map[&(t2, spec.selection[&(t2, t)])];
        g.remove_edge(0, a);
        g.remove_edge(0, b);
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// The tree in which every node within distance `h - 1` of the root has
/// degree exactly `d`: the root has `d` children, other internal nodes
/// `d - 1`. Nodes are numbered in breadth-first order.
pub fn branching_tree(d: usize, h: usize) -> Graph {
    let mut g = Graph::with_vertices([0]);
    let mut frontier = vec![0];
    let mut next = 1;
    for depth in 0..h {
        let children = if depth == 0 { d } else { d.saturating_sub(1) };
        let mut new = Vec::new();
        for &p in &frontier {
            for _ in 0..children {
                g.add_edge(p, next).expect("fresh vertex");
                new.push(next);
                next += 1;
            }
        }
        frontier = new;
    }
    g
}

pub fn gallai_regular(k: usize, h: usize) -> Graph {
    let spec = GallaiSpec::uniform(k, branching_tree(k - 1, h)).expect("degrees fit");
    gallai_graph(&spec).expect("canonical selection is valid")
}

/// The graph on which linkages between the overlapping pairs `{x, z}` and
/// `{y, z}` stay short. Vertices: `x = 0`, `y = 1`, `z = 2`, then the spine
/// `P_0` and the teeth. Returns the graph with `X = (x, z)`, `Y = (y, z)`.
pub fn hammock_counterexample(t: usize) -> (Graph, (Vertex, Vertex), (Vertex, Vertex)) {
    let mut g = Graph::with_vertices(0..3);
    for (v, name) in ["x", "y", "z"].iter().enumerate() {
        g.set_label(v, *name);
    }
    let spine: Vec<Vertex> = (3..3 + t).collect();
    let mut next = 3 + t;
    for (i, &s) in spine.iter().enumerate() {
        g.add_vertex(s);
        g.set_label(s, format!("p0.{i}"));
        if i > 0 {
            g.add_edge(spine[i - 1], s).expect("distinct");
        }
    }
    for (i, &s) in spine.iter().enumerate() {
        let mut prev = s;
        for j in 1..t {
            g.add_edge(prev, next).expect("distinct");
            g.set_label(next, format!("p{}.{j}", i + 1));
            prev = next;
            next += 1;
        }
    }
    let body: Vec<Vertex> = (3..next).collect();
    for a in 0..3 {
        for b in a + 1..3 {
            g.add_edge(a, b).expect("distinct");
        }
        for &v in &body {
            g.add_edge(a, v).expect("distinct");
        }
    }
    (g, (0, 2), (1, 2))
}

/// A `k`-critical graph on exactly `n` vertices built from `K_k` and
/// `C_{2m+1} + K_{k-3}` by Hajós sums.
pub fn k_critical_of_order(k: usize, n: usize) -> Result<Graph> {
    let unsupported = Error::UnsupportedOrder { k, n };
    if k < 4 || n < k || n == k + 1 {
        return Err(unsupported);
    }
    if n == k {
        return Ok(complete(k));
    }
    let rim = n + 3 - k;
    if rim >= 5 && rim % 2 == 1 {
        return Ok(join(&cycle(rim), &complete(k - 3)));
    }
    // n = k + b - 1 with a smaller supported b.
    let rest = k_critical_of_order(k, n + 1 - k).map_err(|_| unsupported)?;
    let (a, b) = rest.edges()[0];
    hajos_sum(&complete(k), (0, 1), &shifted(&rest, k), (a + k, b + k))
}

/// `len` copies of `K_k` chained by Hajós sums, each new copy attached at
/// the two most recently added vertices.
pub fn hajos_chain(k: usize, len: usize) -> Result<Graph> {
    if len == 0 || k < 3 {
        return Err(Error::Precondition("chain needs k >= 3 and len >= 1".into()));
    }
    let mut g = complete(k);
    for _ in 1..len {
        let top = g.max_vertex().expect("non-empty");
        let off = top + 1;
        g = hajos_sum(&g, (top - 1, top), &shifted(&complete(k), off), (off, off + 1))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graph_sizes() {
        assert_eq!((wheel(5).n(), wheel(5).m()), (6, 10));
        assert_eq!((petersen().n(), petersen().m()), (10, 15));
        assert_eq!((prism(3).n(), prism(3).m()), (6, 9));
        assert_eq!(join(&cycle(5), &complete(2)).m(), 5 + 1 + 10);
    }

    #[test]
    fn hj7_shape() {
        let g = hj7();
        assert_eq!((g.n(), g.m()), (7, 11));
        assert!(g.has_edge(1, 4));
        assert!(!g.has_edge(0, 1) && !g.has_edge(0, 4));
        assert_eq!(g.vertex_by_label("l2"), Some(4));
    }

    #[test]
    fn hajos_sum_counts_and_errors() {
        let g = hajos_sum(&complete(5), (0, 1), &shifted(&wheel(5), 5), (5, 10)).unwrap();
        assert_eq!(g.n(), 5 + 6 - 1);
        assert_eq!(g.m(), 10 + 10 - 1);
        let sparse = Graph::with_vertices(0..2);
        assert_eq!(
            hajos_sum(&sparse, (0, 1), &shifted(&complete(3), 5), (5, 6)),
            Err(Error::EdgeNotPresent(0, 1))
        );
        assert_eq!(
            hajos_sum(&complete(3), (0, 1), &complete(3), (0, 1)),
            Err(Error::OverlappingVertexSets)
        );
    }

    #[test]
    fn gallai_orders() {
        assert_eq!(gallai_regular(4, 0).edges(), complete(4).edges());
        assert_eq!(gallai_regular(4, 1).n(), 13);
        assert_eq!(gallai_regular(4, 1).m(), 21);
        assert_eq!(gallai_regular(5, 1).n(), 21);
        assert_eq!(branching_tree(4, 2).n(), 17);
        assert_eq!(gallai_regular(5, 2).n(), 1 + 17 * 4);
    }

    #[test]
    fn gallai_rejects_wide_trees() {
        let spec = GallaiSpec::uniform(4, star(4));
        assert!(matches!(spec, Err(Error::DegreeTooHigh { .. })));
    }

    #[test]
    fn gallai_rejects_bad_selection() {
        let mut spec = GallaiSpec::uniform(4, path_graph(2)).unwrap();
        spec.selection.insert((0, 1), 0);
        assert!(matches!(gallai_graph(&spec), Err(Error::BadSelection(_))));
    }

    #[test]
    fn hammock_counterexample_shape() {
        for t in 2..5 {
            let (g, x, y) = hammock_counterexample(t);
            assert_eq!(g.n(), t * t + 3);
            assert_eq!((x, y), ((0, 2), (1, 2)));
        }
    }

    #[test]
    fn orders() {
        for n in [4, 6, 7, 8, 9, 10, 11] {
            assert_eq!(k_critical_of_order(4, n).unwrap().n(), n);
        }
        assert!(k_critical_of_order(4, 5).is_err());
        assert!(matches!(k_critical_of_order(5, 8), Err(Error::UnsupportedOrder { k: 5, n: 8 })));
        assert_eq!(k_critical_of_order(5, 9).unwrap().n(), 9);
    }

    #[test]
    fn chain_sizes() {
        let g = hajos_chain(4, 3).unwrap();
        assert_eq!((g.n(), g.m()), (10, 16));
    }
}
