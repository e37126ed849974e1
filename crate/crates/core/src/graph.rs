//! Simple graphs, clique complexes and total domination.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Exhaustive domination search is exponential in the vertex count.
pub const MAX_DOMINATION_VERTICES: usize = 24;

/// Undirected simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::UnknownVertex(a.max(b)));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn complement(&self) -> Self {
        let edges = (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.has_edge(a, b));
        Graph::new(self.n, edges).unwrap()
    }

    /// Same vertices, edges kept only where `keep` holds.
    pub fn filter_edges<P: Fn(usize, usize) -> bool>(&self, keep: P) -> Self {
        Graph { n: self.n, edges: self.edges.iter().copied().filter(|&(a, b)| keep(a, b)).collect() }
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&w| w != v && self.has_edge(v, w)).collect()
    }

    pub fn is_connected(&self) -> bool {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        crate::pseudomanifold::components(self.n, &edges).len() <= 1
    }

    /// Complex of all cliques (every vertex included).
    pub fn clique_complex(&self) -> SimplicialComplex {
        let mut cliques = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        self.extend_cliques(&mut stack, 0, &mut cliques);
        SimplicialComplex::from_closed_family(cliques).expect("cliques are closed under subsets")
    }

    fn extend_cliques(&self, cur: &mut Vec<usize>, from: usize, out: &mut Vec<Simplex>) {
        for v in from..self.n {
            if cur.iter().all(|&u| self.has_edge(u, v)) {
                cur.push(v);
                out.push(Simplex::new(cur.iter().copied()).unwrap());
                self.extend_cliques(cur, v + 1, out);
                cur.pop();
            }
        }
    }

    /// `γ̃`: least size of a set `D` such that every vertex has a neighbour in
    /// `D` (a vertex is not its own neighbour). `None` when some vertex has no
    /// neighbour at all.
    pub fn total_domination_number(&self) -> Result<Option<usize>> {
        if self.n > MAX_DOMINATION_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "total domination is limited to {MAX_DOMINATION_VERTICES} vertices, got {}",
                self.n
            )));
        }
        let nbr: Vec<u32> = (0..self.n)
            .map(|v| self.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        if nbr.iter().any(|&m| m == 0) {
            return Ok(None);
        }
        if self.n == 0 {
            return Ok(Some(0));
        }
        let total = 1u64 << self.n;
        let mut best: Option<usize> = None;
        for d in 1..total {
            let d = d as u32;
            let size = d.count_ones() as usize;
            if best.is_some_and(|b| size >= b) {
                continue;
            }
            if nbr.iter().all(|&m| m & d != 0) {
                best = Some(size);
            }
        }
        Ok(best)
    }
}
