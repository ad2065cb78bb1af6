//! Directed multigraphs with identity-bearing edges, their Laplacian, and the
//! lifted multigraph obtained by replicating edges according to a positive
//! multiplier vector.
//!
//! Vertices are opaque names, stored in insertion order and addressed by
//! their dense 0-based position. Edge ids are `0..m` in insertion order.
//! Loops and parallel edges are kept as distinct edges.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, PartialEq, Eq)]
pub struct DirectedMultigraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<Edge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl fmt::Debug for DirectedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|e| format!("{}->{}", self.names[e.tail], self.names[e.head]))
            .collect();
        f.debug_struct("DirectedMultigraph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

impl DirectedMultigraph {
    /// Builds a graph from vertex names and `(tail, head)` name pairs. Edge
    /// ids follow the order of `edge_list`.
    pub fn build<S, T>(vertex_names: &[S], edge_list: &[(T, T)]) -> Result<Self>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        if vertex_names.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut names = Vec::with_capacity(vertex_names.len());
        let mut index = HashMap::with_capacity(vertex_names.len());
        for name in vertex_names {
            let name = name.as_ref().to_owned();
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(name));
            }
            names.push(name);
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
        };
        let mut edges = Vec::with_capacity(edge_list.len());
        for (tail, head) in edge_list {
            edges.push(Edge {
                tail: lookup(tail.as_ref())?,
                head: lookup(head.as_ref())?,
            });
        }
        Ok(Self::assemble(names, index, edges))
    }

    /// Builds a graph on `n` vertices named `v0, v1, ...` from index pairs.
    pub fn from_index_edges(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let index = names.iter().cloned().zip(0..).collect();
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(tail, head) in edge_list {
            for v in [tail, head] {
                if v >= n {
                    return Err(Error::UnknownVertex(format!("#{v}")));
                }
            }
            edges.push(Edge { tail, head });
        }
        Ok(Self::assemble(names, index, edges))
    }

    fn assemble(names: Vec<String>, index: HashMap<String, usize>, edges: Vec<Edge>) -> Self {
        let n = names.len();
        let mut out_edges = vec![Vec::new(); n];
        let mut in_edges = vec![Vec::new(); n];
        for (id, e) in edges.iter().enumerate() {
            out_edges[e.tail].push(id);
            in_edges[e.head].push(id);
        }
        DirectedMultigraph {
            names,
            index,
            edges,
            out_edges,
            in_edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Result<Edge> {
        self.edges.get(id).copied().ok_or(Error::UnknownEdge(id))
    }

    /// Outgoing edge ids of `v`, ascending.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// Incoming edge ids of `v`, ascending.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    /// Number of edges with tail `v`, loops included.
    pub fn out_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.out_edges[v].len())
    }

    pub fn in_degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.in_edges[v].len())
    }

    /// Number of edges directed from `u` to `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.out_edges[u]
            .iter()
            .filter(|&&id| self.edges[id].head == v)
            .count())
    }

    /// Out-degrees of all vertices in vertex order.
    pub fn out_degrees(&self) -> Vec<usize> {
        self.out_edges.iter().map(Vec::len).collect()
    }

    fn sweep(&self, adjacency: &[Vec<usize>], forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &id in &adjacency[v] {
                let e = self.edges[id];
                let next = if forward { e.head } else { e.tail };
                if !seen[next] {
                    seen[next] = true;
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// A witness `(from, to)` with no directed path from `from` to `to`, or
    /// `None` when the graph is strongly connected.
    pub fn unreachable_pair(&self) -> Option<(usize, usize)> {
        let forward = self.sweep(&self.out_edges, true);
        if let Some(v) = forward.iter().position(|&seen| !seen) {
            return Some((0, v));
        }
        let backward = self.sweep(&self.in_edges, false);
        backward.iter().position(|&seen| !seen).map(|v| (v, 0))
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.unreachable_pair().is_none()
    }

    pub fn ensure_strongly_connected(&self) -> Result<()> {
        match self.unreachable_pair() {
            None => Ok(()),
            Some((from, to)) => Err(Error::NotStronglyConnected {
                from: self.names[from].clone(),
                to: self.names[to].clone(),
            }),
        }
    }

    pub fn laplacian(&self) -> Laplacian {
        let n = self.vertex_count();
        let mut entries = vec![vec![0i64; n]; n];
        for e in &self.edges {
            // Column `tail`: +1 on the diagonal, -1 in row `head`. A loop cancels.
            entries[e.tail][e.tail] += 1;
            entries[e.head][e.tail] -= 1;
        }
        Laplacian {
            entries: entries
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    /// In-degree equals out-degree at every vertex.
    pub fn is_eulerian(&self) -> bool {
        self.first_unbalanced_vertex().is_none()
    }

    pub(crate) fn first_unbalanced_vertex(&self) -> Option<usize> {
        (0..self.vertex_count()).find(|&v| self.in_edges[v].len() != self.out_edges[v].len())
    }

    /// Replaces every edge with tail `u` by `pi[u]` parallel copies. Copies of
    /// one original edge receive consecutive ids, in original edge order.
    pub fn lift(&self, pi: &[BigUint]) -> Result<(DirectedMultigraph, EdgeLiftMap)> {
        let copies = positive_multipliers(self, pi)?;
        let mut edges = Vec::new();
        let mut forward = Vec::new();
        let mut backward = Vec::with_capacity(self.edge_count());
        for (id, e) in self.edges.iter().enumerate() {
            let mut lifted = Vec::with_capacity(copies[e.tail]);
            for copy in 1..=copies[e.tail] {
                lifted.push(edges.len());
                forward.push((id, copy));
                edges.push(*e);
            }
            backward.push(lifted);
        }
        let lifted = Self::assemble(self.names.clone(), self.index.clone(), edges);
        Ok((lifted, EdgeLiftMap { forward, backward }))
    }
}

/// Converts a strictly positive multiplier vector to machine integers.
pub(crate) fn positive_multipliers(g: &DirectedMultigraph, pi: &[BigUint]) -> Result<Vec<usize>> {
    if pi.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch {
            expected: g.vertex_count(),
            found: pi.len(),
        });
    }
    pi.iter()
        .enumerate()
        .map(|(index, p)| {
            if p.is_zero() {
                return Err(Error::NonPositiveEntry { index });
            }
            p.to_usize().ok_or_else(|| Error::TooLarge(p.to_string()))
        })
        .collect()
}

/// Correspondence between lifted edges and the original edges they copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLiftMap {
    forward: Vec<(usize, usize)>,
    backward: Vec<Vec<usize>>,
}

impl EdgeLiftMap {
    /// `(original edge id, copy index)` of a lifted edge; copy indices start at 1.
    pub fn original(&self, lifted: usize) -> Option<(usize, usize)> {
        self.forward.get(lifted).copied()
    }

    pub fn copies(&self, original: usize) -> Option<&[usize]> {
        self.backward.get(original).map(Vec::as_slice)
    }

    pub fn lifted_edge_count(&self) -> usize {
        self.forward.len()
    }
}

/// The Laplacian in column convention: entry `(u, v)` is `d_v - d_vv` on the
/// diagonal and `-d_vu` off it, so every column sums to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    entries: Vec<Vec<BigInt>>,
}

impl Laplacian {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, u: usize, v: usize) -> &BigInt {
        &self.entries[u][v]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn column_sums(&self) -> Vec<BigInt> {
        (0..self.size())
            .map(|v| self.entries.iter().map(|row| &row[v]).sum())
            .collect()
    }

    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                found: x.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn apply_unsigned(&self, x: &[BigUint]) -> Result<Vec<BigInt>> {
        let signed: Vec<BigInt> = x.iter().cloned().map(BigInt::from).collect();
        self.apply(&signed)
    }

    /// True when `x` lies in the kernel.
    pub fn annihilates(&self, x: &[BigUint]) -> Result<bool> {
        Ok(self.apply_unsigned(x)?.iter().all(Zero::is_zero))
    }

    /// The matrix with row `w` and column `w` deleted.
    pub fn principal_minor(&self, w: usize) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != w)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|&(v, _)| v != w)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect()
    }
}
