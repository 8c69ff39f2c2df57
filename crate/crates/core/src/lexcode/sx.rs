use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

use super::LexCode;

/// An edge `x -> y` of `S_X`, witnessed by a letter `a` with `x` a prefix of
/// `ay`. Parallel edges with different witnesses are kept apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SxEdge {
    pub source: usize,
    pub target: usize,
    pub letter: Letter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SxDigraph {
    degree: u8,
    vertices: Vec<Word>,
    edges: Vec<SxEdge>,
    // out[v]: indices into `edges`, by (target, letter)
    out: Vec<Vec<usize>>,
}

/// Whether `x` is a prefix of `a` followed by `y`.
fn witnesses(x: &[Letter], a: Letter, y: &[Letter]) -> bool {
    match x.split_first() {
        None => true,
        Some((&first, rest)) => first == a && y.starts_with(rest),
    }
}

impl SxDigraph {
    /// The relation `S_X` on an arbitrary word set (duplicates are merged).
    pub fn new(words: &[Word], degree: u8) -> Self {
        let mut vertices = words.to_vec();
        vertices.sort();
        vertices.dedup();
        let mut edges = Vec::new();
        for (s, x) in vertices.iter().enumerate() {
            for (t, y) in vertices.iter().enumerate() {
                for a in 1..=degree {
                    if witnesses(x.letters(), a, y.letters()) {
                        edges.push(SxEdge {
                            source: s,
                            target: t,
                            letter: a,
                        });
                    }
                }
            }
        }
        let mut out = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out[e.source].push(i);
        }
        SxDigraph {
            degree,
            vertices,
            edges,
            out,
        }
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    /// Every edge, sorted by `(source, target, letter)`.
    pub fn edges(&self) -> &[SxEdge] {
        &self.edges
    }

    pub fn vertex_index(&self, word: &Word) -> Option<usize> {
        self.vertices.binary_search(word).ok()
    }

    /// Witness letters of `x -> y`, empty when there is no such edge.
    pub fn witnesses(&self, x: &Word, y: &Word) -> Vec<Letter> {
        let (Some(s), Some(t)) = (self.vertex_index(x), self.vertex_index(y)) else {
            return Vec::new();
        };
        self.out[s]
            .iter()
            .map(|&e| self.edges[e])
            .filter(|e| e.target == t)
            .map(|e| e.letter)
            .collect()
    }

    /// The first Hamiltonian cycle in search order, if any.
    pub fn find_hamiltonian_cycle(&self) -> Option<HamiltonianCycle> {
        self.hamiltonian_cycles().next()
    }

    /// Every Hamiltonian cycle through the first vertex, as edge sequences
    /// starting there. Cycles differing only in a witness letter are distinct.
    pub fn hamiltonian_cycles(&self) -> HamiltonianCycles<'_> {
        HamiltonianCycles {
            graph: self,
            visited: vec![false; self.vertices.len()],
            path: Vec::new(),
            tried: Vec::new(),
            started: false,
        }
    }

    /// Checks that `cycle` visits every vertex exactly once along edges of
    /// this digraph and closes up.
    pub fn check_hamiltonian(&self, cycle: &HamiltonianCycle) -> Result<()> {
        let k = self.vertices.len();
        if cycle.edges.len() != k || k == 0 {
            return Err(Error::InvalidCycle(format!(
                "a Hamiltonian cycle has {k} edges, got {}",
                cycle.edges.len()
            )));
        }
        let mut seen = vec![false; k];
        for (i, e) in cycle.edges.iter().enumerate() {
            if !self.edges.contains(e) {
                return Err(Error::InvalidCycle(format!("step {i} is not an edge of S_X")));
            }
            if std::mem::replace(&mut seen[e.source], true) {
                return Err(Error::InvalidCycle(format!(
                    "vertex {} is visited twice",
                    self.vertices[e.source]
                )));
            }
            let next = &cycle.edges[(i + 1) % k];
            if e.target != next.source {
                return Err(Error::InvalidCycle(format!(
                    "step {i} ends at {} but the next step leaves {}",
                    self.vertices[e.target], self.vertices[next.source]
                )));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut dot = String::from("digraph S_X {\n");
        for v in &self.vertices {
            let _ = writeln!(dot, "  \"{v}\";");
        }
        for e in &self.edges {
            let _ = writeln!(
                dot,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source], self.vertices[e.target], e.letter
            );
        }
        dot.push_str("}\n");
        dot
    }
}

/// A Hamiltonian cycle of `S_X` as its sequence of witnessed edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HamiltonianCycle {
    pub edges: Vec<SxEdge>,
}

impl HamiltonianCycle {
    /// The witness letters `a_0 a_1 ... a_{k-1}`.
    pub fn letters(&self) -> Vec<Letter> {
        self.edges.iter().map(|e| e.letter).collect()
    }
}

/// Backtracking enumeration of Hamiltonian cycles, successors in sorted order.
#[derive(Debug)]
pub struct HamiltonianCycles<'a> {
    graph: &'a SxDigraph,
    visited: Vec<bool>,
    path: Vec<usize>,
    tried: Vec<usize>,
    started: bool,
}

impl HamiltonianCycles<'_> {
    fn head(&self) -> usize {
        self.path
            .last()
            .map_or(0, |&e| self.graph.edges[e].target)
    }

    fn pop(&mut self) {
        if let Some(e) = self.path.pop() {
            self.visited[self.graph.edges[e].target] = false;
            self.tried.pop();
        }
    }
}

impl Iterator for HamiltonianCycles<'_> {
    type Item = HamiltonianCycle;

    fn next(&mut self) -> Option<HamiltonianCycle> {
        let g = self.graph;
        let k = g.vertices.len();
        if k == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.visited[0] = true;
            self.tried.push(0);
        } else if self.tried.is_empty() {
            return None;
        }
        loop {
            let depth = self.path.len();
            let Some(&start) = self.tried.get(depth) else {
                return None;
            };
            let head = self.head();
            let options = &g.out[head];
            let closing = depth + 1 == k;
            let found = (start..options.len()).find(|&i| {
                let target = g.edges[options[i]].target;
                if closing {
                    target == 0
                } else {
                    !self.visited[target]
                }
            });
            match found {
                Some(i) => {
                    self.tried[depth] = i + 1;
                    let e = options[i];
                    if closing {
                        let mut edges: Vec<SxEdge> = self.path.iter().map(|&p| g.edges[p]).collect();
                        edges.push(g.edges[e]);
                        return Some(HamiltonianCycle { edges });
                    }
                    self.visited[g.edges[e].target] = true;
                    self.path.push(e);
                    self.tried.push(0);
                }
                None => {
                    if self.path.is_empty() {
                        self.tried.clear();
                        return None;
                    }
                    self.pop();
                }
            }
        }
    }
}

/// The word `a_0 a_1 ... a_{k-1}` read off a Hamiltonian cycle of `S_X`.
pub(crate) fn synthesize(code: &LexCode, graph: &SxDigraph, cycle: &HamiltonianCycle) -> Result<Word> {
    graph.check_hamiltonian(cycle)?;
    Word::new(cycle.letters(), code.degree())
}
