use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A simple path together with the length it is claimed to reach and the
/// derivation steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub vertices: Vec<Vertex>,
    pub claimed_length: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl PathWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        let claimed_length = vertices.len().saturating_sub(1);
        Self { vertices, claimed_length, trace: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    pub fn reversed(&self) -> Self {
        let mut p = self.clone();
        p.vertices.reverse();
        p
    }

    pub fn with_trace(mut self, step: impl Into<String>) -> Self {
        self.trace.push(step.into());
        self
    }

    pub fn validate(&self, host: &Graph) -> Result<()> {
        if !host.is_path(&self.vertices) {
            return Err(Error::InvalidWitness(format!("{:?} is not a path", self.vertices)));
        }
        if self.length() < self.claimed_length {
            return Err(Error::InvalidWitness(format!(
                "path of length {} claims {}",
                self.length(),
                self.claimed_length
            )));
        }
        Ok(())
    }

    /// Validates and additionally checks that the ends are exactly `ends`.
    pub fn validate_ends(&self, host: &Graph, a: Vertex, b: Vertex) -> Result<()> {
        self.validate(host)?;
        let (x, y) = (self.first(), self.last());
        if (x, y) != (a, b) && (x, y) != (b, a) {
            return Err(Error::InvalidWitness(format!("path ends {x},{y}, expected {a},{b}")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    /// Cyclic order; the closing edge joins the last and first vertex.
    pub vertices: Vec<Vertex>,
    pub claimed_length: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

impl CycleWitness {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        let claimed_length = vertices.len();
        Self { vertices, claimed_length, trace: Vec::new() }
    }

    pub fn length(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.vertices.iter().copied().collect()
    }

    pub fn validate(&self, host: &Graph) -> Result<()> {
        if !host.is_cycle(&self.vertices) {
            return Err(Error::InvalidWitness(format!("{:?} is not a cycle", self.vertices)));
        }
        if self.length() < self.claimed_length {
            return Err(Error::InvalidWitness(format!(
                "cycle of length {} claims {}",
                self.length(),
                self.claimed_length
            )));
        }
        Ok(())
    }

    /// Position of `v` in the cyclic order.
    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&x| x == v)
    }

    /// The arc from `a` to `b` walking forward (increasing positions).
    pub fn arc_forward(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let n = self.vertices.len();
        let (mut i, j) = (self.position(a).expect("on cycle"), self.position(b).expect("on cycle"));
        let mut out = vec![self.vertices[i]];
        while i != j {
            i = (i + 1) % n;
            out.push(self.vertices[i]);
        }
        out
    }

    /// Both arcs between `a` and `b`, each starting at `a`.
    pub fn arcs_between(&self, a: Vertex, b: Vertex) -> (Vec<Vertex>, Vec<Vertex>) {
        let fwd = self.arc_forward(a, b);
        let mut back = self.arc_forward(b, a);
        back.reverse();
        (fwd, back)
    }

    /// Rotation starting at the least vertex, oriented so that the second
    /// vertex is smaller than the last.
    pub fn canonical(&self) -> Vec<Vertex> {
        canonical_cycle(&self.vertices)
    }
}

pub fn canonical_cycle(c: &[Vertex]) -> Vec<Vertex> {
    if c.is_empty() {
        return Vec::new();
    }
    let n = c.len();
    let start = (0..n).min_by_key(|&i| c[i]).expect("non-empty");
    let fwd: Vec<Vertex> = (0..n).map(|k| c[(start + k) % n]).collect();
    let bwd: Vec<Vertex> = (0..n).map(|k| c[(start + n - k) % n]).collect();
    fwd.min(bwd)
}
