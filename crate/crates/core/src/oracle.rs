//! Exact longest paths and cycles by branch and bound.
//!
//! Vertices are renumbered to bit positions of a `u128`, so graphs with
//! more than 128 vertices are refused. The search visits start vertices and
//! neighbours in ascending order and only replaces the incumbent by a
//! strictly longer witness, so the returned witness is the
//! lexicographically least optimal one. Cycles are written starting at
//! their least vertex with the smaller neighbour second.
//!
//! The bound at each node is the size of the largest chain of blocks that
//! the rest of the path could still traverse in the block-cut tree of the
//! unvisited graph.

use crate::connectivity::is_two_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::witness::{CycleWitness, PathWitness};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Node-expansion budget for the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET }
    }
}

#[inline]
fn bit(i: usize) -> u128 {
    1u128 << i
}

struct Bits(u128);

impl Iterator for Bits {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

struct Search {
    ids: Vec<Vertex>,
    adj: Vec<u128>,
    all: u128,
    budget: u64,
    expansions: u64,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    best_len: usize,
    odd_only: bool,
}

impl Search {
    fn new(g: &Graph, budget: u64) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if g.n() > 128 {
            return Err(Error::TooLarge(g.n()));
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let index = |v: Vertex| ids.binary_search(&v).expect("vertex");
        let adj = ids
            .iter()
            .map(|&v| g.neighbors(v).fold(0u128, |m, w| m | bit(index(w))))
            .collect();
        let all = if ids.len() == 128 { u128::MAX } else { bit(ids.len()) - 1 };
        Ok(Self {
            ids,
            adj,
            all,
            budget,
            expansions: 0,
            path: Vec::new(),
            best: None,
            best_len: 0,
            odd_only: false,
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// Upper bound on the number of vertices a path starting at `v` can add
    /// inside `avail` (which excludes `v`). With `targets`, the path must
    /// end in a target; `None` means that is impossible.
    fn extension_bound(&self, avail: u128, v: usize, targets: Option<u128>) -> Option<usize> {
        let h = avail | bit(v);
        let mut disc = [0u8; 128];
        let mut low = [0u8; 128];
        // Best extension through blocks hanging below each vertex.
        let mut below: [Option<u8>; 128] = [None; 128];
        let mut time = 1u8;
        disc[v] = time;
        low[v] = time;
        let mut frames: Vec<(usize, u128)> = vec![(v, self.adj[v] & h)];
        let mut vstack: Vec<usize> = Vec::new();
        while let Some(&mut (u, ref mut rem)) = frames.last_mut() {
            if *rem != 0 {
                let w = rem.trailing_zeros() as usize;
                *rem &= *rem - 1;
                if disc[w] == 0 {
                    time += 1;
                    disc[w] = time;
                    low[w] = time;
                    vstack.push(w);
                    frames.push((w, self.adj[w] & h & !bit(u)));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(p, _)) = frames.last() else { break };
            low[p] = low[p].min(low[u]);
            if low[u] < disc[p] {
                continue;
            }
            let mut inner = 0u128;
            loop {
                let x = vstack.pop().expect("block vertices on stack");
                inner |= bit(x);
                if x == u {
                    break;
                }
            }
            let base = inner.count_ones() as u8;
            let mut value = match targets {
                Some(t) if inner & t == 0 => None,
                _ => Some(base),
            };
            for c in Bits(inner) {
                if let Some(b) = below[c] {
                    value = Some(value.map_or(base + b, |x| x.max(base + b)));
                }
            }
            if let Some(val) = value {
                below[p] = Some(below[p].map_or(val, |x| x.max(val)));
            }
        }
        below[v].map(usize::from)
    }

    fn record(&mut self) {
        self.best = Some(self.path.clone());
    }

    fn path_dfs(&mut self, visited: u128, v: usize, end: Option<usize>) -> Result<bool> {
        self.tick()?;
        let len = self.path.len() - 1;
        let closes = end.map_or(true, |e| e == v);
        if closes && (self.best.is_none() || len > self.best_len) {
            self.best_len = len;
            self.record();
            if end.is_none() && len + 1 == self.ids.len() {
                return Ok(true);
            }
        }
        if end == Some(v) {
            return Ok(false);
        }
        let avail = self.all & !visited;
        let bound = match self.extension_bound(avail, v, end.map(bit)) {
            Some(b) => b,
            None => return Ok(false),
        };
        if self.best.is_some() && len + bound <= self.best_len {
            return Ok(false);
        }
        for w in Bits(self.adj[v] & avail) {
            self.path.push(w);
            let done = self.path_dfs(visited | bit(w), w, end)?;
            self.path.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn cycle_dfs(&mut self, allowed: u128, visited: u128, v: usize) -> Result<bool> {
        self.tick()?;
        let s = self.path[0];
        let len = self.path.len();
        if len >= 3
            && self.adj[v] & bit(s) != 0
            && len > self.best_len
            && (!self.odd_only || len % 2 == 1)
        {
            self.best_len = len;
            self.record();
            if len == self.ids.len() {
                return Ok(true);
            }
        }
        let avail = allowed & !visited;
        let Some(bound) = self.extension_bound(avail, v, Some(self.adj[s] & avail)) else {
            return Ok(false);
        };
        let mut top = len + bound;
        if self.odd_only && top % 2 == 0 {
            top -= 1;
        }
        if top <= self.best_len {
            return Ok(false);
        }
        for w in Bits(self.adj[v] & avail) {
            self.path.push(w);
            let done = self.cycle_dfs(allowed, visited | bit(w), w)?;
            self.path.pop();
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn run_cycles(&mut self) -> Result<Option<Vec<Vertex>>> {
        let n = self.ids.len();
        for s in 0..n {
            if n - s <= self.best_len {
                break;
            }
            let allowed = self.all & !(bit(s + 1) - 1);
            self.path = vec![s];
            if self.cycle_dfs(allowed, bit(s), s)? {
                break;
            }
        }
        Ok(self.best.as_ref().map(|p| p.iter().map(|&i| self.ids[i]).collect()))
    }
}

pub fn longest_path_exact(g: &Graph) -> Result<PathWitness> {
    longest_path_with(g, &OracleConfig::default())
}

pub fn longest_path_with(g: &Graph, cfg: &OracleConfig) -> Result<PathWitness> {
    let mut s = Search::new(g, cfg.budget)?;
    for start in 0..s.ids.len() {
        s.path = vec![start];
        if s.path_dfs(bit(start), start, None)? {
            break;
        }
    }
    let best = s.best.expect("a single vertex is a path");
    Ok(PathWitness::new(best.iter().map(|&i| s.ids[i]).collect()))
}

/// Longest path from `a` to `b`, or `None` when they are not connected.
pub fn longest_path_between(g: &Graph, a: Vertex, b: Vertex, cfg: &OracleConfig) -> Result<Option<PathWitness>> {
    let mut s = Search::new(g, cfg.budget)?;
    let ia = s.ids.binary_search(&a).map_err(|_| Error::MissingVertex(a))?;
    let ib = s.ids.binary_search(&b).map_err(|_| Error::MissingVertex(b))?;
    s.path = vec![ia];
    s.path_dfs(bit(ia), ia, Some(ib))?;
    Ok(s.best.map(|p| PathWitness::new(p.iter().map(|&i| s.ids[i]).collect())))
}

pub fn longest_cycle_exact(g: &Graph) -> Result<CycleWitness> {
    longest_cycle_with(g, &OracleConfig::default())
}

pub fn longest_cycle_with(g: &Graph, cfg: &OracleConfig) -> Result<CycleWitness> {
    let mut s = Search::new(g, cfg.budget)?;
    s.run_cycles()?.map(CycleWitness::new).ok_or(Error::Acyclic)
}

/// Longest odd cycle, or `None` for bipartite graphs.
pub fn longest_odd_cycle(g: &Graph, cfg: &OracleConfig) -> Result<Option<CycleWitness>> {
    if g.is_bipartite() {
        return Ok(None);
    }
    let mut s = Search::new(g, cfg.budget)?;
    s.odd_only = true;
    Ok(s.run_cycles()?.map(CycleWitness::new))
}

/// An odd cycle of length at least `ceil(|C| / 2)`. The search is exact: the
/// longest odd cycle is returned, and the bound is then checked.
pub fn find_long_odd_cycle(g: &Graph, c: &CycleWitness) -> Result<CycleWitness> {
    find_long_odd_cycle_with(g, c, &OracleConfig::default())
}

pub fn find_long_odd_cycle_with(g: &Graph, c: &CycleWitness, cfg: &OracleConfig) -> Result<CycleWitness> {
    if g.is_bipartite() {
        return Err(Error::BipartiteInput);
    }
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    c.validate(g)?;
    let mut odd = longest_odd_cycle(g, cfg)?.expect("non-bipartite graphs have odd cycles");
    let need = c.length().div_ceil(2);
    if odd.length() < need {
        return Err(Error::BoundNotMet(format!(
            "longest odd cycle has length {}, need {need}",
            odd.length()
        )));
    }
    odd.claimed_length = need;
    odd.trace.push(format!("longest odd cycle, at least half of a {}-cycle", c.length()));
    Ok(odd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, complete_bipartite, cycle, path_graph, petersen};

    #[test]
    fn k4() {
        assert_eq!(longest_cycle_exact(&complete(4)).unwrap().vertices, vec![0, 1, 2, 3]);
        assert_eq!(longest_path_exact(&complete(4)).unwrap().vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        let c = longest_cycle_exact(&petersen()).unwrap();
        assert_eq!(c.length(), 9);
        c.validate(&petersen()).unwrap();
        assert_eq!(longest_path_exact(&petersen()).unwrap().length(), 9);
    }

    #[test]
    fn trees_are_acyclic() {
        assert_eq!(longest_cycle_exact(&path_graph(5)), Err(Error::Acyclic));
        assert_eq!(longest_path_exact(&path_graph(5)).unwrap().length(), 4);
    }

    #[test]
    fn canonical_orientation() {
        let g = Graph::from_edges(5, &[(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)]).unwrap();
        assert_eq!(longest_cycle_exact(&g).unwrap().vertices, vec![0, 2, 4, 1, 3]);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = OracleConfig { budget: 3 };
        assert_eq!(
            longest_cycle_with(&petersen(), &cfg),
            Err(Error::BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn odd_cycles() {
        let c5 = CycleWitness::new(vec![0, 1, 2, 3, 4]);
        assert_eq!(find_long_odd_cycle(&cycle(5), &c5).unwrap().length(), 5);
        let c4 = CycleWitness::new(vec![0, 1, 2, 3]);
        assert_eq!(find_long_odd_cycle(&complete(4), &c4).unwrap().length(), 3);
        let k33 = complete_bipartite(3, 3);
        let c = CycleWitness::new(vec![0, 3, 1, 4]);
        assert_eq!(find_long_odd_cycle(&k33, &c), Err(Error::BipartiteInput));
    }

    #[test]
    fn path_between_fixed_ends() {
        let p = longest_path_between(&cycle(6), 0, 1, &OracleConfig::default()).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 5, 4, 3, 2, 1]);
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(longest_path_between(&g, 0, 3, &OracleConfig::default()).unwrap(), None);
    }
}
