//! Exact vertex colouring, criticality certificates and the two kinds of
//! 2-cut sides in a critical graph.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use serde::{Deserialize, Serialize};
use crate::connectivity::{articulation_points, separation_pair};
use std::collections::{BTreeMap, BTreeSet};

pub const DEFAULT_COLOR_BUDGET: u64 = 100_000_000;

/// Colours are `1..=palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: BTreeMap<Vertex, usize>,
    pub palette_size: usize,
}

impl Coloring {
    pub fn color(&self, v: Vertex) -> Option<usize> {
        self.assignment.get(&v).copied()
    }
}

/// The trusted checker: every vertex coloured from the palette, no edge
/// monochromatic. Deliberately independent of the search.
pub fn check_proper(g: &Graph, col: &Coloring) -> bool {
    g.vertices().all(|v| matches!(col.color(v), Some(c) if (1..=col.palette_size).contains(&c)))
        && g.edges().iter().all(|&(u, v)| col.color(u) != col.color(v))
}

struct Dsatur {
    nbrs: Vec<Vec<usize>>,
    color: Vec<usize>,
    // counts[v][c]: coloured neighbours of v with colour c
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    c: usize,
    uncolored: usize,
    budget: u64,
    nodes: u64,
}

impl Dsatur {
    fn assign(&mut self, v: usize, col: usize) {
        self.color[v] = col;
        self.uncolored -= 1;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            self.counts[w][col] += 1;
            if self.counts[w][col] == 1 {
                self.sat[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let col = self.color[v];
        self.color[v] = 0;
        self.uncolored += 1;
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            self.counts[w][col] -= 1;
            if self.counts[w][col] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        for v in 0..self.color.len() {
            if self.color[v] != 0 {
                continue;
            }
            if best == usize::MAX
                || (self.sat[v], self.nbrs[v].len()) > (self.sat[best], self.nbrs[best].len())
            {
                best = v;
            }
        }
        best
    }

    fn solve(&mut self, max_used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        if self.uncolored == 0 {
            return Ok(true);
        }
        let v = self.pick();
        if self.sat[v] >= self.c {
            return Ok(false);
        }
        // Colours above `max_used` are interchangeable: try only the first.
        for col in 1..=self.c.min(max_used + 1) {
            if self.counts[v][col] != 0 {
                continue;
            }
            self.assign(v, col);
            let dead = self.nbrs[v].iter().any(|&w| self.color[w] == 0 && self.sat[w] >= self.c);
            if !dead && self.solve(max_used.max(col))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Plain DSATUR on one piece; returns colours indexed like `ids`.
fn dsatur(g: &Graph, c: usize, nodes: &mut u64, budget: u64) -> Result<Option<BTreeMap<Vertex, usize>>> {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| ids.binary_search(&v).expect("vertex");
    let n = ids.len();
    let mut s = Dsatur {
        nbrs: ids.iter().map(|&v| g.neighbors(v).map(index).collect()).collect(),
        color: vec![0; n],
        counts: vec![vec![0; c + 1]; n],
        sat: vec![0; n],
        c,
        uncolored: n,
        budget,
        nodes: *nodes,
    };
    let found = s.solve(0);
    *nodes = s.nodes;
    if !found? {
        return Ok(None);
    }
    Ok(Some(ids.into_iter().zip(s.color).collect()))
}

/// Renames the colours of `b` so that it agrees with `a` on `shared`, then
/// merges. The caller guarantees the equal/distinct pattern matches.
fn align(a: &mut BTreeMap<Vertex, usize>, b: BTreeMap<Vertex, usize>, shared: &[Vertex], c: usize) {
    let mut perm: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in shared {
        perm.insert(b[&x], a[&x]);
    }
    let taken: Vec<usize> = perm.values().copied().collect();
    let mut spare = (1..=c).filter(|col| !taken.contains(col));
    for col in 1..=c {
        if !perm.contains_key(&col) {
            perm.insert(col, spare.next().expect("permutation completes"));
        }
    }
    for (v, col) in b {
        a.entry(v).or_insert(perm[&col]);
    }
}

/// Exact colouring that splits along cut vertices and 2-cuts before
/// falling back to DSATUR. Across a 2-cut `{u, v}` the graph is colourable
/// iff for one of "u, v equal" / "u, v distinct" both sides are.
fn solve(g: &Graph, c: usize, nodes: &mut u64, budget: u64) -> Result<Option<BTreeMap<Vertex, usize>>> {
    if g.n() <= 8 || c < 2 {
        return dsatur(g, c, nodes, budget);
    }
    let comps = g.components();
    if comps.len() > 1 {
        let mut out = BTreeMap::new();
        for comp in comps {
            match solve(&g.induced(&comp), c, nodes, budget)? {
                Some(col) => out.extend(col),
                None => return Ok(None),
            }
        }
        return Ok(Some(out));
    }
    let cut: Vec<Vertex> = if let Some(&a) = articulation_points(g).iter().next() {
        vec![a]
    } else if let Some((u, v)) = separation_pair(g) {
        vec![u, v]
    } else {
        return dsatur(g, c, nodes, budget);
    };
    let cut_set: BTreeSet<Vertex> = cut.iter().copied().collect();
    let mut pieces = g.without_vertices(&cut_set).components();
    pieces.sort_by_key(|p| (p.len(), p.iter().next().copied()));
    let mut small = pieces[0].clone();
    small.extend(&cut);
    let rest: BTreeSet<Vertex> = g.vertices().filter(|v| !pieces[0].contains(v)).collect();
    let (a, b) = (g.induced(&small), g.induced(&rest));
    if cut.len() == 1 {
        let Some(mut ca) = solve(&a, c, nodes, budget)? else { return Ok(None) };
        let Some(cb) = solve(&b, c, nodes, budget)? else { return Ok(None) };
        align(&mut ca, cb, &cut, c);
        return Ok(Some(ca));
    }
    let (u, v) = (cut[0], cut[1]);
    let relations: Vec<bool> = if g.has_edge(u, v) { vec![false] } else { vec![true, false] };
    for equal in relations {
        let side = |h: &Graph| if equal { h.contract(u, v) } else { h.plus_edge(u, v) };
        let Some(mut ca) = solve(&side(&a)?, c, nodes, budget)? else { continue };
        let Some(mut cb) = solve(&side(&b)?, c, nodes, budget)? else { continue };
        if equal {
            ca.insert(v, ca[&u]);
            cb.insert(v, cb[&u]);
        }
        align(&mut ca, cb, &cut, c);
        return Ok(Some(ca));
    }
    Ok(None)
}

/// A proper `c`-colouring extending `pins`, or `None` when none exists.
///
/// Pins are encoded by adding a clique of `c` colour vertices and joining
/// each pinned vertex to every colour vertex but its own; colours are then
/// renamed so that colour vertex `i` has colour `i`.
pub fn find_coloring(
    g: &Graph,
    c: usize,
    pins: &BTreeMap<Vertex, usize>,
    budget: u64,
) -> Result<Option<Coloring>> {
    for (&v, &col) in pins {
        if !g.contains(v) {
            return Err(Error::MissingVertex(v));
        }
        if col == 0 || col > c {
            return Err(Error::InfeasiblePin(format!("colour {col} of vertex {v} is outside 1..={c}")));
        }
        if let Some(w) = g.neighbors(v).find(|w| pins.get(w) == Some(&col)) {
            return Err(Error::InfeasiblePin(format!("adjacent vertices {v} and {w} share colour {col}")));
        }
    }
    if g.n() == 0 {
        return Ok(Some(Coloring { assignment: BTreeMap::new(), palette_size: c }));
    }
    if c == 0 {
        return Ok(None);
    }
    let mut h = g.clone();
    let base = g.max_vertex().expect("non-empty") + 1;
    if !pins.is_empty() {
        for i in 0..c {
            for j in i + 1..c {
                h.add_edge(base + i, base + j)?;
            }
            h.add_vertex(base + i);
        }
        for (&v, &col) in pins {
            for j in (1..=c).filter(|&j| j != col) {
                h.add_edge(v, base + j - 1)?;
            }
        }
    }
    let mut nodes = 0;
    let Some(mut raw) = solve(&h, c, &mut nodes, budget)? else { return Ok(None) };
    if !pins.is_empty() {
        let rename: BTreeMap<usize, usize> = (0..c).map(|i| (raw[&(base + i)], i + 1)).collect();
        raw = raw.into_iter().filter(|&(v, _)| v < base).map(|(v, col)| (v, rename[&col])).collect();
    }
    let col = Coloring { assignment: raw, palette_size: c };
    if !check_proper(g, &col) || pins.iter().any(|(v, c)| col.color(*v) != Some(*c)) {
        return Err(Error::InvalidWitness("colouring search returned an improper colouring".into()));
    }
    Ok(Some(col))
}

pub fn is_colorable(g: &Graph, c: usize, budget: u64) -> Result<bool> {
    Ok(find_coloring(g, c, &BTreeMap::new(), budget)?.is_some())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCertificate {
    pub edge: Edge,
    pub coloring: Coloring,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub is_critical: bool,
    /// A `k`-colouring of the whole graph, when one exists.
    pub chromatic_witness: Option<Coloring>,
    /// `(k-1)`-colourings of each `G - e`; complete only when critical.
    pub per_edge: Vec<EdgeCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CriticalityReport {
    fn fail(k: usize, witness: Option<Coloring>, reason: String) -> Self {
        Self { k, is_critical: false, chromatic_witness: witness, per_edge: Vec::new(), reason: Some(reason) }
    }

    /// Re-checks every certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let witness_ok = self.chromatic_witness.as_ref().map_or(true, |c| check_proper(g, c));
        if !self.is_critical {
            return witness_ok;
        }
        witness_ok
            && self.per_edge.len() == g.m()
            && self.per_edge.iter().all(|cert| {
                cert.coloring.palette_size == self.k - 1
                    && check_proper(&g.without_edge(cert.edge.0, cert.edge.1), &cert.coloring)
            })
    }
}

pub fn is_k_critical(g: &Graph, k: usize) -> Result<CriticalityReport> {
    is_k_critical_with(g, k, DEFAULT_COLOR_BUDGET)
}

/// Edge-criticality is checked; with no isolated vertices it implies that
/// every proper subgraph is `(k-1)`-colourable.
pub fn is_k_critical_with(g: &Graph, k: usize, budget: u64) -> Result<CriticalityReport> {
    if k < 2 {
        return Err(Error::Precondition("criticality needs k >= 2".into()));
    }
    let none = BTreeMap::new();
    let witness = find_coloring(g, k, &none, budget)?;
    if g.n() == 0 {
        return Ok(CriticalityReport::fail(k, witness, "empty graph".into()));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Ok(CriticalityReport::fail(k, witness, format!("vertex {v} is isolated")));
    }
    if find_coloring(g, k - 1, &none, budget)?.is_some() {
        return Ok(CriticalityReport::fail(k, witness, format!("graph is {}-colourable", k - 1)));
    }
    let mut per_edge = Vec::new();
    for (u, v) in g.edges() {
        match find_coloring(&g.without_edge(u, v), k - 1, &none, budget)? {
            Some(coloring) => per_edge.push(EdgeCertificate { edge: (u, v), coloring }),
            None => {
                let msg = format!("deleting edge {u}-{v} leaves a graph that is not {}-colourable", k - 1);
                return Ok(CriticalityReport::fail(k, witness, msg));
            }
        }
    }
    Ok(CriticalityReport { k, is_critical: true, chromatic_witness: witness, per_edge, reason: None })
}

/// `(type_one, type_two)`: whether some proper `c`-colouring gives `u` and
/// `v` equal, respectively distinct, colours.
pub fn two_cut_type(gi: &Graph, u: Vertex, v: Vertex, c: usize) -> Result<(bool, bool)> {
    two_cut_type_with(gi, u, v, c, DEFAULT_COLOR_BUDGET)
}

pub fn two_cut_type_with(gi: &Graph, u: Vertex, v: Vertex, c: usize, budget: u64) -> Result<(bool, bool)> {
    if u == v {
        return Err(Error::Precondition("cut vertices must differ".into()));
    }
    let none = BTreeMap::new();
    let one = !gi.has_edge(u, v) && find_coloring(&gi.contract(u, v)?, c, &none, budget)?.is_some();
    let two = c >= 2 && find_coloring(&gi.plus_edge(u, v)?, c, &none, budget)?.is_some();
    Ok((one, two))
}

/// The two sides of a 2-cut `{u, v}` of a k-critical graph. `g1` is the
/// type-one side and `g2` the type-two side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCutSplit {
    pub u: Vertex,
    pub v: Vertex,
    pub g1: Graph,
    pub g2: Graph,
    /// `G1 + uv`.
    pub g1_plus: Graph,
    /// `G2 / uv`, with `v` merged into `u`.
    pub g2_contract: Graph,
    pub merged_vertex: Vertex,
}

impl TwoCutSplit {
    /// Glues the two sides back together on `{u, v}`.
    pub fn glue(&self) -> Graph {
        let mut g = self.g1.clone();
        for v in self.g2.vertices() {
            g.add_vertex(v);
            if let Some(l) = self.g2.label(v) {
                g.set_label(v, l);
            }
        }
        for (a, b) in self.g2.edges() {
            g.add_edge(a, b).expect("loop-free");
        }
        g
    }
}

pub fn split_two_cut(g: &Graph, u: Vertex, v: Vertex, k: usize) -> Result<TwoCutSplit> {
    split_two_cut_with(g, u, v, k, DEFAULT_COLOR_BUDGET)
}

pub fn split_two_cut_with(g: &Graph, u: Vertex, v: Vertex, k: usize, budget: u64) -> Result<TwoCutSplit> {
    for x in [u, v] {
        if !g.contains(x) {
            return Err(Error::MissingVertex(x));
        }
    }
    if u == v {
        return Err(Error::NotACut(u, v));
    }
    let cut = [u, v].into_iter().collect();
    let comps = g.without_vertices(&cut).components();
    match comps.len() {
        0 | 1 => return Err(Error::NotACut(u, v)),
        2 => {}
        c => return Err(Error::NotExactlyTwoComponents(u, v, c)),
    }
    if g.has_edge(u, v) {
        return Err(Error::AdjacentCutPair(u, v));
    }
    let sides: Vec<Graph> = comps
        .iter()
        .map(|c| {
            let mut keep = c.clone();
            keep.insert(u);
            keep.insert(v);
            g.induced(&keep)
        })
        .collect();
    let types = [
        two_cut_type_with(&sides[0], u, v, k - 1, budget)?,
        two_cut_type_with(&sides[1], u, v, k - 1, budget)?,
    ];
    let (g1, g2) = match types {
        [(true, false), (false, true)] => (sides[0].clone(), sides[1].clone()),
        [(false, true), (true, false)] => (sides[1].clone(), sides[0].clone()),
        _ => {
            return Err(Error::TypeClassificationFailed(format!(
                "side types at {{{u}, {v}}} are {:?} and {:?}",
                types[0], types[1]
            )))
        }
    };
    if let Some(w) = g2.neighbors(u).find(|&w| g2.has_edge(v, w)) {
        return Err(Error::TypeClassificationFailed(format!(
            "{u} and {v} have the common neighbour {w} on the type-two side"
        )));
    }
    let g1_plus = g1.plus_edge(u, v)?;
    let g2_contract = g2.contract(u, v)?;
    for h in [&g1_plus, &g2_contract] {
        if !is_k_critical_with(h, k, budget)?.is_critical {
            return Err(Error::NotCritical(k));
        }
    }
    Ok(TwoCutSplit { u, v, g1, g2, g1_plus, g2_contract, merged_vertex: u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, hj7, wheel};

    fn none() -> BTreeMap<Vertex, usize> {
        BTreeMap::new()
    }

    #[test]
    fn small_colourings() {
        assert!(find_coloring(&cycle(5), 2, &none(), 1000).unwrap().is_none());
        let c = find_coloring(&cycle(5), 3, &none(), 1000).unwrap().unwrap();
        assert!(check_proper(&cycle(5), &c));
        assert!(find_coloring(&complete(4), 3, &none(), 1000).unwrap().is_none());
    }

    #[test]
    fn pins() {
        let pins = BTreeMap::from([(0, 2), (2, 3)]);
        let c = find_coloring(&cycle(5), 3, &pins, 1000).unwrap().unwrap();
        assert_eq!((c.color(0), c.color(2)), (Some(2), Some(3)));
        let bad = BTreeMap::from([(0, 1), (1, 1)]);
        assert!(matches!(find_coloring(&cycle(5), 3, &bad, 1000), Err(Error::InfeasiblePin(_))));
    }

    #[test]
    fn criticality() {
        let r = is_k_critical(&complete(4), 4).unwrap();
        assert!(r.is_critical);
        assert_eq!(r.per_edge.len(), 6);
        assert!(r.verify(&complete(4)));
        assert!(is_k_critical(&wheel(5), 4).unwrap().is_critical);
        assert!(!is_k_critical(&cycle(6), 3).unwrap().is_critical);
        assert!(!is_k_critical(&wheel(4), 4).unwrap().is_critical);
    }

    #[test]
    fn cut_types() {
        let k4e = complete(4).without_edge(0, 1);
        assert_eq!(two_cut_type(&k4e, 0, 1, 3).unwrap(), (true, false));
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(two_cut_type(&e, 0, 1, 3).unwrap(), (false, true));
        assert_eq!(two_cut_type(&Graph::with_vertices([0, 1]), 0, 1, 3).unwrap(), (true, true));
    }

    #[test]
    fn hj7_splits() {
        let g = hj7();
        let s = split_two_cut(&g, 0, 1, 4).unwrap();
        assert_eq!(s.g1.vertex_set(), [0, 1, 2, 3].into());
        assert_eq!(s.g2.vertex_set(), [0, 1, 4, 5, 6].into());
        assert_eq!(s.g1_plus.edges(), complete(4).edges());
        assert_eq!((s.g2_contract.n(), s.g2_contract.m()), (4, 6));
        assert_eq!(s.glue(), g);
        let s = split_two_cut(&g, 0, 4, 4).unwrap();
        assert_eq!(s.g1.vertex_set(), [0, 4, 5, 6].into());
        assert_eq!(split_two_cut(&complete(4), 0, 1, 4).unwrap_err(), Error::NotACut(0, 1));
        assert_eq!(split_two_cut(&g, 2, 5, 4).unwrap_err(), Error::NotACut(2, 5));
    }
}
