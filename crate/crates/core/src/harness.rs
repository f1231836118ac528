//! Named graph families and the bound reports run over them.

use crate::bounds::{
    coro3_bound_met, dfs_path_bound_met, gallai_upper_met, gallai_upper_value, log2, path_upper_met,
    path_upper_value, thm1_bound_met, thm1_value,
};
use crate::coloring::is_k_critical_with;
use crate::constructors::{complete, cycle, gallai_regular, hajos_chain, hj7, k_critical_of_order, wheel};
use crate::error::{Error, Result};
use crate::extraction::{long_cycle_critical_with, long_path_via_dfs};
use crate::graph::Graph;
use crate::oracle::{find_long_odd_cycle_with, longest_cycle_with, longest_path_with, OracleConfig};
use crate::witness::CycleWitness;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub family: String,
    pub k: usize,
    pub graph: Graph,
}

fn values(raw: &str) -> Result<Vec<usize>> {
    let bad = || Error::GenerationFailed(format!("bad value `{raw}`"));
    if let Some((a, b)) = raw.split_once("..") {
        let (a, b): (usize, usize) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    raw.split(',').map(|v| v.parse().map_err(|_| bad())).collect()
}

const FAMILIES: &[(&str, &[&str])] = &[
    ("gallai", &["k", "h"]),
    ("hajos-chain", &["k", "len"]),
    ("complete", &["k"]),
    ("odd-wheel", &["rim"]),
    ("odd-cycle", &["n"]),
    ("critical", &["k", "n"]),
    ("hj7", &[]),
];

/// Parses `name key=values ...` where values are `a`, `a..b` (inclusive) or
/// `a,b,c`, and builds every combination. Families:
/// `gallai k h`, `hajos-chain k len`, `complete k`, `odd-wheel rim`,
/// `odd-cycle n`, `critical k n`, `hj7`.
pub fn parse_family(spec: &str) -> Result<Vec<Instance>> {
    let mut tok = spec.split_whitespace();
    let name = tok.next().ok_or_else(|| Error::GenerationFailed("empty family".into()))?;
    let keys = FAMILIES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, k)| *k)
        .ok_or_else(|| Error::GenerationFailed(format!("unknown family `{name}`")))?;
    let mut params: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for t in tok {
        let (key, raw) = t.split_once('=').ok_or_else(|| Error::GenerationFailed(format!("expected key=value, got `{t}`")))?;
        if !keys.contains(&key) {
            return Err(Error::GenerationFailed(format!("`{name}` takes no parameter `{key}`")));
        }
        params.insert(key, values(raw)?);
    }
    if let Some(missing) = keys.iter().find(|k| !params.contains_key(*k)) {
        return Err(Error::GenerationFailed(format!("`{name}` needs `{missing}`")));
    }
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for key in keys {
        combos = combos
            .into_iter()
            .flat_map(|c| params[key].iter().map(move |&v| [c.clone(), vec![v]].concat()))
            .collect();
    }
    combos.into_iter().map(|c| build(name, keys, &c)).collect()
}

fn build(name: &str, keys: &[&str], vals: &[usize]) -> Result<Instance> {
    let fail = |e: Error| Error::GenerationFailed(format!("{name}: {e}"));
    let (k, graph) = match (name, vals) {
        ("gallai", &[k, h]) if k >= 4 => (k, gallai_regular(k, h)),
        ("hajos-chain", &[k, len]) => (k, hajos_chain(k, len).map_err(fail)?),
        ("complete", &[k]) if k >= 2 => (k, complete(k)),
        ("odd-wheel", &[rim]) if rim >= 3 && rim % 2 == 1 => (4, wheel(rim)),
        ("odd-cycle", &[n]) if n >= 3 && n % 2 == 1 => (3, cycle(n)),
        ("critical", &[k, n]) => (k, k_critical_of_order(k, n).map_err(fail)?),
        ("hj7", &[]) => (4, hj7()),
        _ => return Err(Error::GenerationFailed(format!("no `{name}` instance for {vals:?}"))),
    };
    let mut id = name.to_string();
    for (key, v) in keys.iter().zip(vals) {
        id.push_str(&format!("-{key}{v}"));
    }
    Ok(Instance { id, family: name.to_string(), k, graph })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub instance: String,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub circumference: usize,
    pub longest_path: usize,
    pub longest_cycle: Vec<usize>,
    pub extracted_cycle: CycleWitness,
    pub dfs_path: usize,
    pub dfs_path_pass: bool,
    /// `log n / (100 log k)`.
    pub thm1_lower: f64,
    pub thm1_pass: bool,
    /// The extracted cycle is no longer than the longest one.
    pub sound: bool,
    pub dirac_lower: usize,
    /// Only when `n >= 2k - 2`.
    pub dirac_pass: Option<bool>,
    /// `2(k-1)/log(k-2) log n + 2k`; checked only on the Gallai family.
    pub gallai_upper: Option<f64>,
    pub gallai_upper_pass: Option<bool>,
    /// The same bound with `log(k-1)` in the denominator.
    pub gallai_upper_alt: Option<f64>,
    pub gallai_upper_alt_pass: Option<bool>,
    /// `4(k-1)/log(k-2) log n` on longest paths, Gallai family only.
    pub path_upper: Option<f64>,
    pub path_upper_pass: Option<bool>,
    pub status: String,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Verifies criticality, extracts a long cycle, computes the exact
/// circumference and longest path, and evaluates every bound.
pub fn bound_report(inst: &Instance, budget: u64) -> Result<BoundReport> {
    let (g, k) = (&inst.graph, inst.k);
    let cfg = OracleConfig { budget };
    if !is_k_critical_with(g, k, budget)?.is_critical {
        return Err(Error::NotCritical(k));
    }
    let (n, m) = (g.n(), g.m());
    let extracted = long_cycle_critical_with(g, k, budget)?;
    let longest = longest_cycle_with(g, &cfg)?;
    let lp = longest_path_with(g, &cfg)?.length();
    let circ = longest.length();
    let (dfs_path, dfs_path_pass) = if k >= 4 {
        let p = long_path_via_dfs(g, k)?;
        (p.length(), dfs_path_bound_met(p.length(), n, k))
    } else {
        (0, true)
    };
    let thm1_pass = thm1_bound_met(extracted.length(), n, k);
    let sound = extracted.length() <= circ;
    let dirac_lower = 2 * k - 2;
    let dirac_pass = (n >= dirac_lower).then_some(circ >= dirac_lower);
    let gallai = inst.family == "gallai";
    let upper = |denom: usize| (k >= 4 && log2(denom as f64) > 0.0).then(|| gallai_upper_value(n, k, denom));
    let upper_pass = |denom: usize| (gallai && k >= 4).then(|| gallai_upper_met(circ, n, k, denom));
    let (gallai_upper, gallai_upper_alt) = (upper(k - 2), upper(k - 1));
    let (gallai_upper_pass, gallai_upper_alt_pass) = (upper_pass(k - 2), upper_pass(k - 1));
    let path_upper = (gallai && k >= 4 && k - 2 > 1).then(|| path_upper_value(n, k));
    let path_upper_pass = (gallai && k >= 4).then(|| path_upper_met(lp, n, k));
    let ok = dfs_path_pass
        && thm1_pass
        && sound
        && dirac_pass.unwrap_or(true)
        && gallai_upper_pass.unwrap_or(true)
        && gallai_upper_alt_pass.unwrap_or(true)
        && path_upper_pass.unwrap_or(true);
    Ok(BoundReport {
        instance: inst.id.clone(),
        n,
        k,
        m,
        circumference: circ,
        longest_path: lp,
        longest_cycle: longest.canonical(),
        extracted_cycle: extracted,
        dfs_path,
        dfs_path_pass,
        thm1_lower: thm1_value(n, k),
        thm1_pass,
        sound,
        dirac_lower,
        dirac_pass,
        gallai_upper,
        gallai_upper_pass,
        gallai_upper_alt,
        gallai_upper_alt_pass,
        path_upper,
        path_upper_pass,
        status: if ok { "pass" } else { "fail" }.into(),
    })
}

/// Reports for every instance of a family, in instance order; instances
/// are processed in parallel.
pub fn run_bounds_suite(family: &str, budget: u64) -> Result<Vec<BoundReport>> {
    let instances = parse_family(family)?;
    instances.par_iter().map(|i| bound_report(i, budget)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Coro2Report {
    pub n: usize,
    pub k: usize,
    pub cycle: CycleWitness,
    pub odd_cycle: CycleWitness,
    /// `log n / (200 log k)`.
    pub bound: f64,
    pub bound_pass: bool,
    /// The odd cycle has at least half the length of the long cycle.
    pub half_pass: bool,
}

impl Coro2Report {
    pub fn passed(&self) -> bool {
        self.bound_pass && self.half_pass
    }
}

/// A long cycle, then a long odd cycle: a 3-critical subgraph of length at
/// least `log n / (200 log k)`.
pub fn verify_coro2(g: &Graph, k: usize, budget: u64) -> Result<Coro2Report> {
    if g.is_bipartite() {
        return Err(Error::BipartiteInput);
    }
    let cycle = long_cycle_critical_with(g, k, budget)?;
    let odd = find_long_odd_cycle_with(g, &cycle, &OracleConfig { budget })?;
    odd.validate(g)?;
    if odd.length() % 2 == 0 {
        return Err(Error::InvalidWitness(format!("cycle of length {} is even", odd.length())));
    }
    Ok(Coro2Report {
        n: g.n(),
        k,
        bound: thm1_value(g.n(), k) / 2.0,
        bound_pass: coro3_bound_met(odd.length(), g.n(), k),
        half_pass: 2 * odd.length() >= cycle.length(),
        cycle,
        odd_cycle: odd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::complete_bipartite;

    #[test]
    fn family_parsing() {
        let fam = parse_family("gallai k=4 h=0..1").unwrap();
        assert_eq!(fam.iter().map(|i| (i.id.as_str(), i.graph.n())).collect::<Vec<_>>(), vec![("gallai-k4-h0", 4), ("gallai-k4-h1", 13)]);
        assert_eq!(parse_family("hajos-chain k=4 len=3").unwrap()[0].graph.n(), 10);
        assert_eq!(parse_family("odd-wheel rim=3,5,7").unwrap().len(), 3);
        assert_eq!(parse_family("hj7").unwrap()[0].id, "hj7");
        for bad in ["", "petersen", "gallai k=4", "gallai k=4 h=x", "gallai k=4 h=2..1", "odd-wheel rim=4", "complete k=4 h=1"] {
            assert!(matches!(parse_family(bad), Err(Error::GenerationFailed(_))), "{bad}");
        }
    }

    #[test]
    fn small_suite() {
        let r = run_bounds_suite("gallai k=4 h=0..1", 100_000_000).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|b| b.passed()), "{r:?}");
        assert_eq!(r[1].dirac_pass, Some(true));
        assert!(r[1].circumference >= 6);
        assert_eq!(r[0].dirac_pass, None);
        let chain = run_bounds_suite("hajos-chain k=4 len=3", 100_000_000).unwrap();
        assert!(chain[0].passed() && chain[0].gallai_upper_pass.is_none());
    }

    #[test]
    fn coro2() {
        let r = verify_coro2(&wheel(5), 4, 100_000_000).unwrap();
        assert!(r.passed() && r.odd_cycle.length() >= 3);
        let r = verify_coro2(&hj7(), 4, 100_000_000).unwrap();
        assert!(r.odd_cycle.length() == 5 || r.odd_cycle.length() == 7);
        assert_eq!(verify_coro2(&complete_bipartite(3, 3), 4, 1000), Err(Error::BipartiteInput));
    }
}
