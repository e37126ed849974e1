use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldReport {
    pub pure: bool,
    pub non_branching: bool,
    pub strongly_connected: bool,
    pub dimension: isize,
}

impl PseudomanifoldReport {
    pub fn is_pseudomanifold(&self) -> bool {
        self.pure && self.non_branching && self.strongly_connected
    }
}

/// Pure, every ridge in exactly two facets, facet adjacency graph connected.
/// In dimension 0 the single ridge is the empty face, so exactly two points
/// qualify.
pub fn is_pseudomanifold(m: &SimplicialComplex) -> Result<PseudomanifoldReport> {
    if m.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let d = m.dim() as usize;
    let facets = m.facets();
    let pure = facets.iter().all(|f| f.dim() == d);
    let top = m.simplices(d);

    let non_branching = if d == 0 {
        top.len() == 2
    } else {
        let counts = ridge_incidence(top);
        m.simplices(d - 1)
            .iter()
            .all(|r| counts.get(r).map_or(0, Vec::len) == 2)
    };

    let strongly_connected = facets.len() == 1
        || (pure && (d == 0 || components(top.len(), &adjacency_pairs(top)).len() == 1));

    Ok(PseudomanifoldReport { pure, non_branching, strongly_connected, dimension: d as isize })
}

/// For each codimension-one face, the indices of the simplices containing it.
pub(crate) fn ridge_incidence(simplices: &[Simplex]) -> HashMap<Simplex, Vec<usize>> {
    let mut map: HashMap<Simplex, Vec<usize>> = HashMap::new();
    for (i, s) in simplices.iter().enumerate() {
        for (_, r) in s.facets() {
            map.entry(r).or_default().push(i);
        }
    }
    map
}

/// Pairs of simplices sharing a codimension-one face.
pub(crate) fn adjacency_pairs(simplices: &[Simplex]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for ids in ridge_incidence(simplices).values() {
        for (a, &i) in ids.iter().enumerate() {
            for &j in &ids[a + 1..] {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

/// Connected components of a graph on `0..n`, each sorted, ordered by their
/// smallest node.
pub(crate) fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        let g = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(x);
    }
    groups
}
