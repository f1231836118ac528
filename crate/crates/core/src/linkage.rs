//! Long linkages between two disjoint vertex pairs of a 3-connected graph.
//!
//! The pipeline goes path → long cycle → linkage or hammock → non-singular
//! hammock or linkage → linkage. Every stage validates its output and checks
//! its own length guarantee relative to its input, so a bad construction
//! surfaces as an error at the stage that produced it.

use crate::connectivity::is_three_connected;
use crate::error::{Error, Result};
use crate::flow::{augment_paths, menger_paths, MengerOutcome};
use crate::graph::{Graph, Vertex};
use crate::oracle::{longest_cycle_with, longest_path_with, OracleConfig};
use crate::witness::{CycleWitness, PathWitness};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

type Path = Vec<Vertex>;

fn pos(p: &[Vertex], v: Vertex) -> Option<usize> {
    p.iter().position(|&x| x == v)
}

/// The subpath of `p` from `a` to `b`, in that direction.
fn seg(p: &[Vertex], a: Vertex, b: Vertex) -> Path {
    let (i, j) = (pos(p, a).expect("a on path"), pos(p, b).expect("b on path"));
    if i <= j {
        p[i..=j].to_vec()
    } else {
        let mut s = p[j..=i].to_vec();
        s.reverse();
        s
    }
}

fn rev(p: &[Vertex]) -> Path {
    p.iter().rev().copied().collect()
}

/// Concatenates paths that meet end to start.
fn cat(parts: &[&[Vertex]]) -> Path {
    let mut out: Path = Vec::new();
    for part in parts {
        match out.last() {
            Some(&v) => {
                debug_assert_eq!(Some(&v), part.first(), "parts must meet");
                out.extend_from_slice(&part[1..]);
            }
            None => out.extend_from_slice(part),
        }
    }
    out
}

fn len(p: &[Vertex]) -> usize {
    p.len().saturating_sub(1)
}

fn set(p: &[Vertex]) -> BTreeSet<Vertex> {
    p.iter().copied().collect()
}

/// The arc of `c` between `a` and `b` that misses `avoid`, oriented a → b.
fn arc_avoiding(c: &CycleWitness, a: Vertex, b: Vertex, avoid: Vertex) -> Path {
    let (fwd, back) = c.arcs_between(a, b);
    if fwd.contains(&avoid) {
        back
    } else {
        fwd
    }
}

fn pair_set(p: (Vertex, Vertex)) -> BTreeSet<Vertex> {
    BTreeSet::from([p.0, p.1])
}

/// Two disjoint paths, each with one end in `x` and the other in `y`.
/// Paths run from their `x` end to their `y` end and are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linkage {
    pub x: (Vertex, Vertex),
    pub y: (Vertex, Vertex),
    pub paths: [Path; 2],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl Linkage {
    pub fn new(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), a: Path, b: Path) -> Result<Self> {
        let xs = pair_set(x);
        let orient = |p: Path| if xs.contains(&p[0]) { p } else { rev(&p) };
        let mut paths = [orient(a), orient(b)];
        paths.sort();
        let l = Linkage { x, y, paths, trace: Vec::new() };
        l.validate(g)?;
        Ok(l)
    }

    pub fn length(&self) -> usize {
        len(&self.paths[0]) + len(&self.paths[1])
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidWitness(m));
        let (xs, ys) = (pair_set(self.x), pair_set(self.y));
        if xs.len() != 2 || ys.len() != 2 || !xs.is_disjoint(&ys) {
            return bad("linkage needs two disjoint pairs".into());
        }
        for p in &self.paths {
            if p.is_empty() || !g.is_path(p) {
                return bad(format!("{p:?} is not a path"));
            }
            if !xs.contains(&p[0]) || !ys.contains(&p[p.len() - 1]) {
                return bad(format!("{p:?} does not join X to Y"));
            }
        }
        if !set(&self.paths[0]).is_disjoint(&set(&self.paths[1])) {
            return bad("linkage paths intersect".into());
        }
        Ok(())
    }
}

/// A linkage `P1`, `P2` from `{x1, x2}` to `{y1, y2}` with two cross paths:
/// `R_i` runs from `s_i` on `P1` to `t_i` on `P2`. Each `P_i` runs from
/// `x_i` to `y_i`; `R1` and `R2` may share only `s1 = s2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hammock {
    pub p1: Path,
    pub p2: Path,
    pub r1: Path,
    pub r2: Path,
}

impl Hammock {
    pub fn x1(&self) -> Vertex {
        self.p1[0]
    }
    pub fn y1(&self) -> Vertex {
        self.p1[self.p1.len() - 1]
    }
    pub fn x2(&self) -> Vertex {
        self.p2[0]
    }
    pub fn y2(&self) -> Vertex {
        self.p2[self.p2.len() - 1]
    }
    pub fn s1(&self) -> Vertex {
        self.r1[0]
    }
    pub fn t1(&self) -> Vertex {
        self.r1[self.r1.len() - 1]
    }
    pub fn s2(&self) -> Vertex {
        self.r2[0]
    }
    pub fn t2(&self) -> Vertex {
        self.r2[self.r2.len() - 1]
    }
    pub fn x(&self) -> (Vertex, Vertex) {
        (self.x1(), self.x2())
    }
    pub fn y(&self) -> (Vertex, Vertex) {
        (self.y1(), self.y2())
    }

    pub fn is_singular(&self) -> bool {
        self.s1() == self.s2()
    }

    pub fn length(&self) -> usize {
        len(&self.r1)
    }

    /// The same hammock seen from `P2`'s side; only meaningful when
    /// non-singular.
    fn mirrored(&self) -> Self {
        Hammock { p1: self.p2.clone(), p2: self.p1.clone(), r1: rev(&self.r1), r2: rev(&self.r2) }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidHammock(m.to_string()));
        for p in [&self.p1, &self.p2, &self.r1, &self.r2] {
            if p.is_empty() || !g.is_path(p) {
                return bad(&format!("{p:?} is not a path"));
            }
        }
        let (v1, v2) = (set(&self.p1), set(&self.p2));
        if !v1.is_disjoint(&v2) {
            return bad("P1 and P2 intersect");
        }
        let ends: BTreeSet<Vertex> = [self.x1(), self.x2(), self.y1(), self.y2()].into();
        if ends.len() != 4 {
            return bad("X and Y must be disjoint pairs");
        }
        for r in [&self.r1, &self.r2] {
            if !v1.contains(&r[0]) || !v2.contains(&r[r.len() - 1]) {
                return bad("cross path does not run from P1 to P2");
            }
            if r[1..r.len() - 1].iter().any(|v| v1.contains(v) || v2.contains(v)) {
                return bad("cross path touches P1 or P2 inside");
            }
        }
        let shared: BTreeSet<Vertex> = set(&self.r1).intersection(&set(&self.r2)).copied().collect();
        let allowed: BTreeSet<Vertex> = if self.is_singular() { BTreeSet::from([self.s1()]) } else { BTreeSet::new() };
        if shared != allowed {
            return bad("cross paths intersect");
        }
        let (i1, i2) = (pos(&self.p1, self.s1()).unwrap(), pos(&self.p1, self.s2()).unwrap());
        let (j1, j2) = (pos(&self.p2, self.t1()).unwrap(), pos(&self.p2, self.t2()).unwrap());
        if i1 > i2 || j1 >= j2 {
            return bad("cross paths are out of order");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Outcome {
    Linkage(Linkage),
    Hammock(Hammock),
}

impl Outcome {
    pub fn length(&self) -> usize {
        match self {
            Outcome::Linkage(l) => l.length(),
            Outcome::Hammock(h) => h.length(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Outcome::Linkage(_) => "linkage",
            Outcome::Hammock(h) if h.is_singular() => "singular hammock",
            Outcome::Hammock(_) => "hammock",
        }
    }
}

fn hammock(g: &Graph, p1: Path, p2: Path, r1: Path, r2: Path) -> Result<Outcome> {
    let h = Hammock { p1, p2, r1, r2 };
    h.validate(g)?;
    Ok(Outcome::Hammock(h))
}

fn linkage_of(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), a: Path, b: Path) -> Result<Outcome> {
    Ok(Outcome::Linkage(Linkage::new(g, x, y, a, b)?))
}

fn check_pairs(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex)) -> Result<()> {
    for v in [x.0, x.1, y.0, y.1] {
        if !g.contains(v) {
            return Err(Error::MissingVertex(v));
        }
    }
    if x.0 == x.1 || y.0 == y.1 {
        return Err(Error::Precondition("X and Y must each have two vertices".into()));
    }
    if !pair_set(x).is_disjoint(&pair_set(y)) {
        return Err(Error::OverlappingXY);
    }
    Ok(())
}

/// A cycle at least `2/5` as long as a longest path. Uses the exact cycle
/// search, which meets that guarantee a fortiori.
pub fn long_cycle_3connected(g: &Graph) -> Result<CycleWitness> {
    long_cycle_3connected_with(g, &OracleConfig::default())
}

pub fn long_cycle_3connected_with(g: &Graph, cfg: &OracleConfig) -> Result<CycleWitness> {
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let l = longest_path_with(g, cfg)?.length();
    let mut c = longest_cycle_with(g, cfg)?;
    c.claimed_length = (2 * l).div_ceil(5);
    if c.length() < c.claimed_length {
        return Err(Error::BoundNotMet(format!("cycle {} is shorter than 2/5 of path {l}", c.length())));
    }
    c.trace.push(format!("longest cycle {} against longest path {l}", c.length()));
    Ok(c)
}

/// From a cycle of length `l`: a linkage of length at least `l/5`, or a
/// hammock from X to Y or from Y to X of length at least `2l/5`.
pub fn cycle_to_linkage_or_hammock(
    g: &Graph,
    x: (Vertex, Vertex),
    y: (Vertex, Vertex),
    c: &CycleWitness,
) -> Result<Outcome> {
    check_pairs(g, x, y)?;
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    c.validate(g)?;
    let l = c.length();
    let out = match four_paths_case(g, x, y, c) {
        Some(r) => r?,
        None => three_paths_case(g, x, y, c)?,
    };
    let met = match &out {
        Outcome::Linkage(lk) => 5 * lk.length() >= l,
        Outcome::Hammock(h) => 5 * h.length() >= 2 * l,
    };
    if !met {
        return Err(Error::BoundNotMet(format!("{} of length {} from a cycle of length {l}", out.kind(), out.length())));
    }
    Ok(out)
}

/// Four disjoint paths from X ∪ Y to the cycle.
fn four_paths_case(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), c: &CycleWitness) -> Option<Result<Outcome>> {
    let xs = pair_set(x);
    let s: BTreeSet<Vertex> = [x.0, x.1, y.0, y.1].into();
    let MengerOutcome::Paths(mut paths) = menger_paths(g, &s, &c.vertex_set(), 4) else {
        return None;
    };
    // Order the paths by where they land on the cycle.
    paths.sort_by_key(|p| c.position(p[p.len() - 1]).expect("ends on the cycle"));
    let u = |p: &Path| p[p.len() - 1];
    let is_x: Vec<bool> = paths.iter().map(|p| xs.contains(&p[0])).collect();
    let xi: Vec<usize> = (0..4).filter(|&i| is_x[i]).collect();
    let gap = xi[1] - xi[0];
    let result = if gap == 2 {
        // X and Y alternate around the cycle: one of the two pairings of
        // opposite arcs carries half of it.
        let (p, r, q, s) = (xi[0], xi[0] + 1, xi[0] + 2, (xi[0] + 3) % 4);
        let (pp, pr, pq, ps) = (&paths[p], &paths[r], &paths[q], &paths[s]);
        let a1 = cat(&[pp, &c.arc_forward(u(pp), u(pr)), &rev(pr)]);
        let a2 = cat(&[pq, &c.arc_forward(u(pq), u(ps)), &rev(ps)]);
        let b1 = cat(&[pp, &rev(&c.arc_forward(u(ps), u(pp))), &rev(ps)]);
        let b2 = cat(&[pq, &rev(&c.arc_forward(u(pr), u(pq))), &rev(pr)]);
        if len(&a1) + len(&a2) >= len(&b1) + len(&b2) {
            linkage_of(g, x, y, a1, a2)
        } else {
            linkage_of(g, x, y, b1, b2)
        }
    } else {
        let (p, q) = if gap == 1 { (xi[0], xi[1]) } else { (xi[1], xi[0]) };
        let (r, s) = ((q + 1) % 4, (q + 2) % 4);
        let (pp, pq, pr, ps) = (&paths[p], &paths[q], &paths[r], &paths[s]);
        let path1 = cat(&[pp, &rev(&c.arc_forward(u(ps), u(pp))), &rev(ps)]);
        let path2 = cat(&[pq, &c.arc_forward(u(pq), u(pr)), &rev(pr)]);
        let l = c.length();
        if 5 * (len(&path1) + len(&path2)) >= l {
            linkage_of(g, x, y, path1, path2)
        } else {
            let c_pq = c.arc_forward(u(pp), u(pq));
            let c_rs = c.arc_forward(u(pr), u(ps));
            if len(&c_pq) >= len(&c_rs) {
                hammock(g, path1, path2, c_pq, rev(&c_rs))
            } else {
                hammock(g, rev(&path2), rev(&path1), c_rs, rev(&c_pq))
            }
        }
    };
    Some(result)
}

/// Only three disjoint paths reach the cycle; a 3-separator splits the
/// graph with X ∪ Y on one side and the cycle on the other.
fn three_paths_case(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), c: &CycleWitness) -> Result<Outcome> {
    let s: BTreeSet<Vertex> = [x.0, x.1, y.0, y.1].into();
    let cv = c.vertex_set();
    let MengerOutcome::Paths(paths) = menger_paths(g, &s, &cv, 3) else {
        return Err(Error::NotThreeConnected);
    };
    let MengerOutcome::Separator(w) = menger_paths(g, &s, &cv, 4) else {
        unreachable!("four paths were ruled out");
    };
    let xs = pair_set(x);
    let from_x = paths.iter().filter(|p| xs.contains(&p[0])).count();
    // The side contributing two paths plays the role of X.
    let (x, y) = if from_x == 2 { (x, y) } else { (y, x) };
    let xs = pair_set(x);
    let mut ps: Vec<Path> = paths.iter().filter(|p| xs.contains(&p[0])).cloned().collect();
    let p3 = paths.iter().find(|p| !xs.contains(&p[0])).cloned().expect("one path from Y");
    let on = |p: &Path| *p.iter().find(|v| w.contains(v)).expect("each path meets the separator once");
    let w3 = on(&p3);
    let ys = pair_set(y);
    let mut targets: BTreeSet<Vertex> = ps.iter().flat_map(|p| p.iter().copied()).collect();
    targets.insert(w3);
    let head3 = seg(&p3, p3[0], w3);
    let qs = augment_paths(g, &ys, &targets, &[head3])?;
    let q2 = qs.iter().find(|q| q[q.len() - 1] == w3).cloned().expect("old end is kept");
    let q1 = qs.iter().find(|q| q[q.len() - 1] != w3).cloned().expect("second path");
    let b1 = q1[q1.len() - 1];
    if !ps[0].contains(&b1) {
        ps.swap(0, 1);
    }
    let (p1, p2) = (&ps[0], &ps[1]);
    let (u1, u2, u3) = (p1[p1.len() - 1], p2[p2.len() - 1], p3[p3.len() - 1]);
    let tail3 = seg(&p3, w3, u3);
    let c23 = arc_avoiding(c, u2, u3, u1);
    let path_a = cat(&[&seg(p1, p1[0], b1), &rev(&q1)]);
    let back = cat(&[&rev(&tail3), &rev(&q2)]);
    let path_b = cat(&[p2, &c23, &back]);
    let l = c.length();
    if 5 * (len(&path_a) + len(&path_b)) >= l {
        return linkage_of(g, x, y, path_a, path_b);
    }
    if b1 != u1 {
        let (fwd, bwd) = c.arcs_between(u2, u3);
        let around = if fwd.contains(&u1) { fwd } else { bwd };
        let path_b = cat(&[p2, &around, &back]);
        return linkage_of(g, x, y, path_a, path_b);
    }
    let c12 = arc_avoiding(c, u1, u2, u3);
    let c13 = arc_avoiding(c, u1, u3, u2);
    if len(&c12) >= len(&c13) {
        hammock(g, path_a, path_b, c12, c13)
    } else {
        hammock(g, rev(&path_a), rev(&path_b), c13, c12)
    }
}

/// From a hammock of length `l`: a non-singular hammock (either direction)
/// or a linkage, each of length at least `l/2`. Non-singular input comes
/// back unchanged.
pub fn hammock_to_nonsingular(g: &Graph, h: &Hammock) -> Result<Outcome> {
    h.validate(g)?;
    if !h.is_singular() {
        return Ok(Outcome::Hammock(h.clone()));
    }
    let l = h.length();
    let out = if h.s1() != h.x1() { singular_front(g, h)? } else { singular_back(g, h)? };
    match &out {
        Outcome::Hammock(nh) if nh.is_singular() => {
            return Err(Error::InvalidHammock("resolution left the hammock singular".into()))
        }
        _ => {}
    }
    if 2 * out.length() < l {
        return Err(Error::BoundNotMet(format!("{} of length {} from a hammock of length {l}", out.kind(), out.length())));
    }
    Ok(out)
}

/// Singular hammock with part of `P1` before `s`: route a path `Q` from
/// that part around `{s, t1}`.
fn singular_front(g: &Graph, h: &Hammock) -> Result<Outcome> {
    let (p1, p2, r1, r2) = (&h.p1, &h.p2, &h.r1, &h.r2);
    let (s, t1, t2) = (h.s1(), h.t1(), h.t2());
    let (x, y) = (h.x(), h.y());
    let i = pos(p1, s).unwrap();
    let a_side: BTreeSet<Vertex> = p1[..i].iter().copied().collect();
    let mut targets: BTreeSet<Vertex> = set(p2);
    targets.extend(r1.iter().chain(r2).chain(&p1[i..]).copied());
    targets.remove(&s);
    targets.remove(&t1);
    let q = g
        .shortest_path_to_set(&a_side, &targets, &BTreeSet::from([s, t1]))
        .ok_or(Error::NotThreeConnected)?;
    let (a, b) = (q[0], q[q.len() - 1]);
    let front = cat(&[&seg(p1, h.x1(), a), &q]);
    if r1.contains(&b) {
        return if len(&seg(r1, b, t1)) * 2 >= len(r1) {
            hammock(g, p1.clone(), p2.clone(), cat(&[&q, &seg(r1, b, t1)]), r2.clone())
        } else {
            let path = cat(&[&front, &seg(r1, b, s), &seg(p1, s, h.y1())]);
            linkage_of(g, x, y, path, p2.clone())
        };
    }
    if r2.contains(&b) {
        let path = cat(&[&front, &seg(r2, b, t2), &seg(p2, t2, h.y2())]);
        let other = cat(&[&seg(p2, h.x2(), t1), &rev(r1), &seg(p1, s, h.y1())]);
        return linkage_of(g, x, y, path, other);
    }
    if let Some(j) = pos(p2, b) {
        if j > pos(p2, t1).unwrap() {
            let path = cat(&[&front, &seg(p2, b, h.y2())]);
            let other = cat(&[&seg(p2, h.x2(), t1), &rev(r1), &seg(p1, s, h.y1())]);
            return linkage_of(g, x, y, path, other);
        }
        // Q lands before t1: read the hammock from Y to X.
        return hammock(g, rev(p1), rev(p2), r1.clone(), q);
    }
    // b lies on P1 after s.
    let path = cat(&[&front, &seg(p1, b, h.y1())]);
    let other = cat(&[&seg(p2, h.x2(), t1), &rev(r1), r2, &seg(p2, t2, h.y2())]);
    linkage_of(g, x, y, path, other)
}

/// Singular hammock with `x1 = s`: route `Q` from the rest of `P1`.
fn singular_back(g: &Graph, h: &Hammock) -> Result<Outcome> {
    let (p1, p2, r1, r2) = (&h.p1, &h.p2, &h.r1, &h.r2);
    let (s, t1, t2) = (h.s1(), h.t1(), h.t2());
    let (x, y) = (h.x(), h.y());
    let b_side: BTreeSet<Vertex> = p1[1..].iter().copied().collect();
    let mut targets: BTreeSet<Vertex> = set(p2);
    targets.extend(r1.iter().chain(r2).copied());
    targets.remove(&s);
    targets.remove(&t1);
    let q = g
        .shortest_path_to_set(&b_side, &targets, &BTreeSet::from([s, t1]))
        .ok_or(Error::NotThreeConnected)?;
    let (a, b) = (q[0], q[q.len() - 1]);
    // Walks from b back along Q and P1 to y1.
    let home = cat(&[&rev(&q), &seg(p1, a, h.y1())]);
    if r1.contains(&b) {
        return if len(&seg(r1, s, b)) * 2 >= len(r1) {
            linkage_of(g, x, y, cat(&[&seg(r1, s, b), &home]), p2.clone())
        } else {
            let path = cat(&[r2, &seg(p2, t2, h.y2())]);
            let other = cat(&[&seg(p2, h.x2(), t1), &seg(r1, t1, b), &home]);
            linkage_of(g, x, y, path, other)
        };
    }
    if r2.contains(&b) {
        return hammock(g, p1.clone(), p2.clone(), r1.clone(), cat(&[&q, &seg(r2, b, t2)]));
    }
    if pos(p2, b).unwrap() > pos(p2, t1).unwrap() {
        return hammock(g, p1.clone(), p2.clone(), r1.clone(), q);
    }
    let path = cat(&[r1, &seg(p2, t1, h.y2())]);
    let other = cat(&[&seg(p2, h.x2(), b), &home]);
    linkage_of(g, x, y, path, other)
}

/// From a non-singular hammock of length `l`: a linkage of length at least
/// `l/2`.
pub fn nonsingular_to_linkage(g: &Graph, h: &Hammock) -> Result<Linkage> {
    h.validate(g)?;
    if h.is_singular() {
        return Err(Error::SingularInput);
    }
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    let l = h.length();
    let out = nonsingular_inner(g, h)?;
    if 2 * out.length() < l {
        return Err(Error::BoundNotMet(format!("linkage of length {} from a hammock of length {l}", out.length())));
    }
    Ok(out)
}

fn nonsingular_inner(g: &Graph, h: &Hammock) -> Result<Linkage> {
    let (x, y) = (h.x(), h.y());
    // A joins x1 to x2 through R1, B joins y1 to y2 through R2.
    let side_a = cat(&[&seg(&h.p1, h.x1(), h.s1()), &h.r1, &seg(&h.p2, h.t1(), h.x2())]);
    let side_b = cat(&[&seg(&h.p1, h.y1(), h.s2()), &h.r2, &seg(&h.p2, h.t2(), h.y2())]);
    if side_a.len() < 3 || side_b.len() < 3 {
        // Three disjoint A-B paths cannot exist. With A this small, R1 is
        // one edge and the hammock's own linkage suffices; when B collapses
        // to the edge y1y2 there is no construction, so search exactly.
        if side_a.len() < 3 {
            return Linkage::new(g, x, y, h.p1.clone(), h.p2.clone());
        }
        let mut lk = longest_linkage(g, x, y, &OracleConfig::default())?
            .ok_or_else(|| Error::InvalidHammock("no linkage at all".into()))?;
        lk.trace.push("B side is a single edge; exact linkage search".into());
        return Ok(lk);
    }
    let given = [seg(&h.p1, h.s1(), h.s2()), seg(&h.p2, h.t1(), h.t2())];
    let three = augment_paths(g, &set(&side_a), &set(&side_b), &given)?;
    let q1 = three.iter().find(|p| p[0] == h.s1()).cloned().expect("start s1 is kept");
    let q2 = three.iter().find(|p| p[0] == h.t1()).cloned().expect("start t1 is kept");
    let q = three.iter().find(|p| p[0] != h.s1() && p[0] != h.t1()).cloned().expect("third path");
    let (s2n, t2n) = (q1[q1.len() - 1], q2[q2.len() - 1]);
    // Re-route P1 and P2 through Q1 and Q2; the stretch of B between their
    // ends becomes the new R2.
    let (i, j) = (pos(&side_b, s2n).unwrap(), pos(&side_b, t2n).unwrap());
    let (end1, end2) = if i < j { (h.y1(), h.y2()) } else { (h.y2(), h.y1()) };
    let np1 = cat(&[&seg(&h.p1, h.x1(), h.s1()), &q1, &seg(&side_b, s2n, end1)]);
    let np2 = cat(&[&seg(&h.p2, h.x2(), h.t1()), &q2, &seg(&side_b, t2n, end2)]);
    let nh = Hammock { p1: np1, p2: np2, r1: h.r1.clone(), r2: seg(&side_b, s2n, t2n) };
    nh.validate(g)?;
    let (a, l) = (q[0], nh.length());
    let h = if nh.p1.contains(&a) && a != nh.s1() {
        nh
    } else if nh.p2.contains(&a) && a != nh.t1() {
        nh.mirrored()
    } else if 2 * len(&seg(&nh.r1, a, nh.t1())) >= l {
        nh
    } else {
        nh.mirrored()
    };
    free_path_cases(g, x, y, &h, &q)
}

/// The final case split once `Q` joins A to B avoiding `P1` and `P2`, with
/// `Q` starting on `x1P1s1` or on `R1` at least half of `R1` from `t1`.
fn free_path_cases(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), h: &Hammock, q: &[Vertex]) -> Result<Linkage> {
    let (p1, p2, r1, r2) = (&h.p1, &h.p2, &h.r1, &h.r2);
    let (a, b) = (q[0], q[q.len() - 1]);
    let on_p1_after = pos(p1, b).is_some_and(|j| j >= pos(p1, h.s2()).unwrap());
    // Continuation of Q past b towards y2, through R2 if needed.
    let to_y2 = || {
        if r2.contains(&b) {
            cat(&[&seg(r2, b, h.t2()), &seg(p2, h.t2(), h.y2())])
        } else {
            seg(p2, b, h.y2())
        }
    };
    if p1.contains(&a) {
        let front = cat(&[&seg(p1, h.x1(), a), q]);
        if on_p1_after {
            let one = cat(&[&front, &seg(p1, b, h.y1())]);
            let two = cat(&[&seg(p2, h.x2(), h.t1()), &rev(r1), &seg(p1, h.s1(), h.s2()), r2, &seg(p2, h.t2(), h.y2())]);
            Linkage::new(g, x, y, one, two)
        } else {
            let one = cat(&[&seg(p2, h.x2(), h.t1()), &rev(r1), &seg(p1, h.s1(), h.y1())]);
            Linkage::new(g, x, y, cat(&[&front, &to_y2()]), one)
        }
    } else {
        let front = cat(&[&seg(p2, h.x2(), h.t1()), &seg(r1, h.t1(), a), q]);
        if on_p1_after {
            let one = cat(&[&seg(p1, h.x1(), h.s2()), r2, &seg(p2, h.t2(), h.y2())]);
            Linkage::new(g, x, y, one, cat(&[&front, &seg(p1, b, h.y1())]))
        } else {
            Linkage::new(g, x, y, p1.clone(), cat(&[&front, &to_y2()]))
        }
    }
}

/// A longest linkage from `x` to `y` by exhaustive search: every simple
/// path from `x.0` is tried and completed by the longest path from `x.1`
/// in what remains.
pub fn longest_linkage(
    g: &Graph,
    x: (Vertex, Vertex),
    y: (Vertex, Vertex),
    cfg: &OracleConfig,
) -> Result<Option<Linkage>> {
    check_pairs(g, x, y)?;
    let mut best: Option<(usize, Path, Path)> = None;
    let mut steps = 0u64;
    for (ya, yb) in [(y.0, y.1), (y.1, y.0)] {
        let mut stack: Vec<Path> = vec![vec![x.0]];
        while let Some(p) = stack.pop() {
            steps += 1;
            if steps > cfg.budget {
                return Err(Error::BudgetExceeded { budget: cfg.budget });
            }
            let last = p[p.len() - 1];
            if last == ya {
                let room = g.n() - p.len() - 1;
                if best.as_ref().map_or(true, |b| len(&p) + room > b.0) {
                    let rest = g.without_vertices(&set(&p));
                    if let Some(q) = crate::oracle::longest_path_between(&rest, x.1, yb, cfg)? {
                        let total = len(&p) + q.length();
                        if best.as_ref().map_or(true, |b| total > b.0) {
                            best = Some((total, p.clone(), q.vertices));
                        }
                    }
                }
                continue;
            }
            let next: Vec<Vertex> = g
                .neighbors(last)
                .filter(|v| !p.contains(v) && *v != x.1 && *v != yb)
                .collect();
            for v in next.into_iter().rev() {
                let mut np = p.clone();
                np.push(v);
                stack.push(np);
            }
        }
    }
    best.map(|(_, a, b)| Linkage::new(g, x, y, a, b)).transpose()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub step: String,
    pub input_length: usize,
    pub output: String,
    pub output_length: usize,
    /// Output length as a fraction of the input: numerator, denominator.
    pub guarantee: (usize, usize),
}

impl Stage {
    pub fn met(&self) -> bool {
        self.output_length * self.guarantee.1 >= self.input_length * self.guarantee.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageReport {
    pub linkage: Linkage,
    pub path_length: usize,
    pub cycle: CycleWitness,
    pub stages: Vec<Stage>,
}

/// A linkage from `x` to `y` of length at least `l/25` where `l` is the
/// length of `p`.
pub fn find_linkage(g: &Graph, x: (Vertex, Vertex), y: (Vertex, Vertex), p: &PathWitness) -> Result<Linkage> {
    Ok(find_linkage_report(g, x, y, p, &OracleConfig::default())?.linkage)
}

pub fn find_linkage_report(
    g: &Graph,
    x: (Vertex, Vertex),
    y: (Vertex, Vertex),
    p: &PathWitness,
    cfg: &OracleConfig,
) -> Result<LinkageReport> {
    check_pairs(g, x, y)?;
    if !is_three_connected(g) {
        return Err(Error::NotThreeConnected);
    }
    p.validate(g)?;
    let l = p.length();
    let cycle = long_cycle_3connected_with(g, cfg)?;
    let mut stages = vec![Stage {
        step: "cycle".into(),
        input_length: l,
        output: "cycle".into(),
        output_length: cycle.length(),
        guarantee: (2, 5),
    }];
    let first = cycle_to_linkage_or_hammock(g, x, y, &cycle)?;
    let guarantee = if matches!(first, Outcome::Linkage(_)) { (1, 5) } else { (2, 5) };
    stages.push(Stage {
        step: "cycle to linkage or hammock".into(),
        input_length: cycle.length(),
        output: first.kind().into(),
        output_length: first.length(),
        guarantee,
    });
    let linkage = match first {
        Outcome::Linkage(lk) => lk,
        Outcome::Hammock(h) => {
            let second = hammock_to_nonsingular(g, &h)?;
            stages.push(Stage {
                step: "hammock to non-singular".into(),
                input_length: h.length(),
                output: second.kind().into(),
                output_length: second.length(),
                guarantee: (1, 2),
            });
            match second {
                Outcome::Linkage(lk) => lk,
                Outcome::Hammock(nh) => {
                    let lk = nonsingular_to_linkage(g, &nh)?;
                    stages.push(Stage {
                        step: "non-singular hammock to linkage".into(),
                        input_length: nh.length(),
                        output: "linkage".into(),
                        output_length: lk.length(),
                        guarantee: (1, 2),
                    });
                    lk
                }
            }
        }
    };
    // Re-express against the caller's pairs.
    let linkage = Linkage::new(g, x, y, linkage.paths[0].clone(), linkage.paths[1].clone())?;
    if 25 * linkage.length() < l {
        return Err(Error::BoundNotMet(format!("linkage {} from path {l}", linkage.length())));
    }
    Ok(LinkageReport { linkage, path_length: l, cycle, stages })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, hammock_counterexample, prism, wheel};
    use crate::oracle::longest_path_exact;

    fn all_pairs(g: &Graph) -> Vec<((Vertex, Vertex), (Vertex, Vertex))> {
        let vs: Vec<Vertex> = g.vertices().collect();
        let mut out = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                for (j, &c) in vs.iter().enumerate() {
                    for &d in &vs[j + 1..] {
                        if ![a, b].contains(&c) && ![a, b].contains(&d) {
                            out.push(((a, b), (c, d)));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn k5_example() {
        let g = complete(5);
        let c = CycleWitness::new(vec![0, 1, 2, 3, 4]);
        let out = cycle_to_linkage_or_hammock(&g, (0, 1), (2, 3), &c).unwrap();
        assert!(5 * out.length() >= 5);
        let p = PathWitness::new(vec![0, 1, 2, 3, 4]);
        let lk = find_linkage(&g, (0, 1), (2, 3), &p).unwrap();
        assert!(lk.length() >= 1);
    }

    #[test]
    fn overlapping_pairs() {
        let (g, x, y) = hammock_counterexample(3);
        let c = long_cycle_3connected(&g).unwrap();
        assert_eq!(cycle_to_linkage_or_hammock(&g, x, y, &c), Err(Error::OverlappingXY));
        let p = longest_path_exact(&g).unwrap();
        assert_eq!(find_linkage(&g, x, y, &p), Err(Error::OverlappingXY));
    }

    #[test]
    fn three_connected_cycle() {
        assert_eq!(long_cycle_3connected(&complete(4)).unwrap().length(), 4);
        assert_eq!(long_cycle_3connected(&crate::constructors::cycle(5)), Err(Error::NotThreeConnected));
    }

    #[test]
    fn singular_hammock_in_k6() {
        let g = complete(6);
        let h = Hammock { p1: vec![0, 1, 2], p2: vec![3, 4, 5], r1: vec![1, 4], r2: vec![1, 5] };
        h.validate(&g).unwrap();
        let out = hammock_to_nonsingular(&g, &h).unwrap();
        assert!(2 * out.length() >= 1);
        if let Outcome::Hammock(nh) = &out {
            assert!(!nh.is_singular());
        }
        let front = Hammock { p1: vec![1, 2], p2: vec![3, 4, 5], r1: vec![1, 0, 4], r2: vec![1, 5] };
        assert!(hammock_to_nonsingular(&g, &front).is_ok());
    }

    #[test]
    fn out_of_order_hammock() {
        let g = complete(6);
        let h = Hammock { p1: vec![0, 1, 2], p2: vec![3, 4, 5], r1: vec![1, 5], r2: vec![1, 4] };
        assert!(matches!(hammock_to_nonsingular(&g, &h), Err(Error::InvalidHammock(_))));
    }

    #[test]
    fn nonsingular_cases() {
        let g = complete(8);
        // Q from x1P1s1 to s2P1y1.
        let h = Hammock { p1: vec![0, 1, 2, 3], p2: vec![4, 5, 6, 7], r1: vec![1, 5], r2: vec![2, 6] };
        assert_eq!(hammock_to_nonsingular(&g, &h).unwrap(), Outcome::Hammock(h.clone()));
        let lk = nonsingular_to_linkage(&g, &h).unwrap();
        assert!(2 * lk.length() >= h.length());
        let singular = Hammock { p1: vec![0, 1, 2], p2: vec![4, 5, 6], r1: vec![1, 5], r2: vec![1, 6] };
        assert_eq!(nonsingular_to_linkage(&g, &singular), Err(Error::SingularInput));
    }

    #[test]
    fn pipeline_on_small_graphs() {
        for g in [complete(4), complete(5), complete(6), wheel(4), wheel(5), prism(3), prism(4)] {
            let p = longest_path_exact(&g).unwrap();
            for (x, y) in all_pairs(&g) {
                let r = find_linkage_report(&g, x, y, &p, &OracleConfig::default()).unwrap();
                assert!(r.stages.iter().all(Stage::met), "{:?}", r.stages);
                assert!(25 * r.linkage.length() >= p.length());
            }
        }
    }
}
