//! Jackson graphs and their Eulerian cycles.
//!
//! The vertices of `J(n)` are the words of `n - 2` distinct letters. There is
//! an edge `u -> v`, labeled with the first letter of `u`, when the suffix of
//! length `n - 3` of `u` is the prefix of `v` and the first letter of `u`
//! differs from the last letter of `v`. Every vertex has in- and out-degree
//! two, and the labels along any Eulerian cycle spell a universal Lyndon word.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::word::{bit, check_degree, Letter, Word};

/// Largest degree accepted by [`JacksonGraph::new`] (`n!` edges).
pub const MAX_JACKSON_DEGREE: u8 = 8;

/// Largest degree for which all Eulerian cycles may be enumerated.
pub const MAX_ENUMERATION_DEGREE: u8 = 5;

/// An edge between two vertices, given by index into
/// [`JacksonGraph::vertices`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: Letter,
}

/// A closed walk, as a sequence of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeCycle {
    pub edges: Vec<Edge>,
}

impl EdgeCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct JacksonGraph {
    degree: u8,
    vertices: Vec<Word>,
    index: HashMap<Vec<Letter>, usize>,
    // sorted by (source, target)
    edges: Vec<Edge>,
    // out[v] = edge ids leaving v, by increasing target
    out: Vec<Vec<usize>>,
}

impl JacksonGraph {
    pub fn new(degree: u8) -> Result<Self> {
        check_degree(degree as usize)?;
        if degree <= 2 {
            return Err(Error::DegreeTooSmall {
                what: "a Jackson graph",
                degree,
                min: 3,
            });
        }
        if degree > MAX_JACKSON_DEGREE {
            return Err(Error::Capacity {
                what: "Jackson graph construction",
                degree,
                max: MAX_JACKSON_DEGREE,
            });
        }
        let mut raw = Vec::new();
        arrangements(degree, degree as usize - 2, &mut Vec::new(), &mut raw);
        let index: HashMap<Vec<Letter>, usize> =
            raw.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();

        let mut edges = Vec::with_capacity(raw.len() * 2);
        let mut out = vec![Vec::with_capacity(2); raw.len()];
        for (source, u) in raw.iter().enumerate() {
            let overlap = &u[1..];
            let used = overlap.iter().fold(0u64, |m, &a| m | bit(a));
            for last in 1..=degree {
                if used & bit(last) != 0 || last == u[0] {
                    continue;
                }
                let mut v = overlap.to_vec();
                v.push(last);
                out[source].push(edges.len());
                edges.push(Edge {
                    source,
                    target: index[&v],
                    label: u[0],
                });
            }
            out[source].sort_by_key(|&e| edges[e].target);
        }
        let vertices = raw
            .into_iter()
            .map(|v| Word::from_raw(v, degree))
            .collect();
        Ok(JacksonGraph {
            degree,
            vertices,
            index,
            edges,
            out,
        })
    }

    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// Vertices in increasing lexicographic order.
    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, vertex: &Word) -> Option<usize> {
        self.index.get(vertex.letters()).copied()
    }

    /// The edge `source -> target`, if present.
    pub fn edge(&self, source: &Word, target: &Word) -> Option<Edge> {
        let s = self.vertex_index(source)?;
        let t = self.vertex_index(target)?;
        self.out[s]
            .iter()
            .map(|&e| self.edges[e])
            .find(|e| e.target == t)
    }

    pub fn out_edges(&self, vertex: usize) -> impl Iterator<Item = Edge> + '_ {
        self.out[vertex].iter().map(|&e| self.edges[e])
    }

    pub fn in_degree(&self, vertex: usize) -> usize {
        self.edges.iter().filter(|e| e.target == vertex).count()
    }

    /// Whether every vertex reaches every other one.
    pub fn is_strongly_connected(&self) -> bool {
        let reach = |forward: bool| {
            let mut seen = vec![false; self.vertices.len()];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for e in &self.edges {
                    let (from, to) = if forward {
                        (e.source, e.target)
                    } else {
                        (e.target, e.source)
                    };
                    if from == v && !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// One Eulerian cycle (Hierholzer), starting at the first vertex and
    /// always leaving through the unused edge with the smallest target.
    pub fn find_eulerian_cycle(&self) -> EdgeCycle {
        let mut next = vec![0usize; self.vertices.len()];
        let mut stack: Vec<(usize, Option<usize>)> = vec![(0, None)];
        let mut circuit = Vec::with_capacity(self.edges.len());
        while let Some(&(v, via)) = stack.last() {
            if let Some(&e) = self.out[v].get(next[v]) {
                next[v] += 1;
                stack.push((self.edges[e].target, Some(e)));
            } else {
                stack.pop();
                if let Some(e) = via {
                    circuit.push(self.edges[e]);
                }
            }
        }
        circuit.reverse();
        EdgeCycle { edges: circuit }
    }

    /// Every Eulerian cycle beginning with the least edge, each exactly once.
    pub fn eulerian_cycles(&self) -> Result<EulerianCycles<'_>> {
        if self.degree > MAX_ENUMERATION_DEGREE {
            return Err(Error::Capacity {
                what: "Eulerian cycle enumeration",
                degree: self.degree,
                max: MAX_ENUMERATION_DEGREE,
            });
        }
        Ok(EulerianCycles {
            graph: self,
            used: vec![false; self.edges.len()],
            path: Vec::with_capacity(self.edges.len()),
            tried: Vec::with_capacity(self.edges.len()),
            state: EnumState::Fresh,
        })
    }

    /// The labels along a closed walk of this graph.
    pub fn word_from_cycle(&self, cycle: &EdgeCycle) -> Result<Word> {
        let Some(first) = cycle.edges.first() else {
            return Err(Error::InvalidCycle("the walk is empty".into()));
        };
        for (i, e) in cycle.edges.iter().enumerate() {
            if !self.edges.contains(e) {
                return Err(Error::InvalidCycle(format!(
                    "step {i} is not an edge of J({})",
                    self.degree
                )));
            }
            let next = cycle.edges.get(i + 1).unwrap_or(first);
            if e.target != next.source {
                return Err(Error::InvalidCycle(format!(
                    "step {i} ends at {} but the next step leaves {}",
                    self.vertices[e.target], self.vertices[next.source]
                )));
            }
        }
        Ok(Word::from_raw(
            cycle.edges.iter().map(|e| e.label).collect(),
            self.degree,
        ))
    }

    /// Graphviz rendering; vertices are named by their words, edges carry
    /// their letter labels.
    pub fn to_dot(&self) -> String {
        let mut dot = format!("digraph J{} {{\n", self.degree);
        for v in &self.vertices {
            let _ = writeln!(dot, "  \"{v}\";");
        }
        for e in &self.edges {
            let _ = writeln!(
                dot,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                self.vertices[e.source], self.vertices[e.target], e.label
            );
        }
        dot.push_str("}\n");
        dot
    }
}

/// All words of `len` distinct letters from `1..=degree`, lexicographically.
fn arrangements(degree: u8, len: usize, prefix: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
    if prefix.len() == len {
        out.push(prefix.clone());
        return;
    }
    for a in 1..=degree {
        if !prefix.contains(&a) {
            prefix.push(a);
            arrangements(degree, len, prefix, out);
            prefix.pop();
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EnumState {
    Fresh,
    Yielded,
    Done,
}

/// Depth-first enumeration of Eulerian cycles through the anchor edge.
#[derive(Debug)]
pub struct EulerianCycles<'a> {
    graph: &'a JacksonGraph,
    used: Vec<bool>,
    path: Vec<usize>,
    // tried[d] = how many out-edges of the head of path[..=d] were tried
    tried: Vec<usize>,
    state: EnumState,
}

impl EulerianCycles<'_> {
    fn pop(&mut self) {
        if let Some(e) = self.path.pop() {
            self.used[e] = false;
            self.tried.pop();
        }
    }

    fn push(&mut self, e: usize) {
        self.used[e] = true;
        self.path.push(e);
        self.tried.push(0);
    }
}

impl Iterator for EulerianCycles<'_> {
    type Item = EdgeCycle;

    fn next(&mut self) -> Option<EdgeCycle> {
        let g = self.graph;
        match self.state {
            EnumState::Done => return None,
            EnumState::Fresh => {
                if g.edges.is_empty() {
                    self.state = EnumState::Done;
                    return None;
                }
                self.push(0);
            }
            EnumState::Yielded => self.pop(),
        }
        let anchor = g.edges[0].source;
        loop {
            let Some(&last) = self.path.last() else {
                self.state = EnumState::Done;
                return None;
            };
            let head = g.edges[last].target;
            if self.path.len() == g.edges.len() {
                if head == anchor {
                    self.state = EnumState::Yielded;
                    return Some(EdgeCycle {
                        edges: self.path.iter().map(|&e| g.edges[e]).collect(),
                    });
                }
                self.pop();
                continue;
            }
            let depth = self.path.len() - 1;
            let options = &g.out[head];
            let start = self.tried[depth];
            let found = (start..options.len()).find(|&k| !self.used[options[k]]);
            match found {
                Some(k) => {
                    self.tried[depth] = k + 1;
                    self.push(options[k]);
                }
                None => self.pop(),
            }
        }
    }
}
