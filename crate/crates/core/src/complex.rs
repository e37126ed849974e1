//! Finite abstract simplicial complexes.
//!
//! A complex stores its full downward-closed simplex family, grouped by
//! dimension. Each level is kept sorted lexicographically, so the position of
//! a simplex inside its level is the row/column index used by boundary
//! matrices.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nonempty, strictly ascending set of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    /// Caller guarantees `v` is strictly ascending and nonempty.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(!v.is_empty() && v.windows(2).all(|w| w[0] < w[1]));
        Simplex(v)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// Codimension-one faces paired with the index of the removed vertex,
    /// which is the exponent of the sign in the boundary formula. A vertex has
    /// no faces.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            (i, Simplex(v))
        })
    }

    /// Every nonempty subset, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// `self ∪ {v}` when `v` is not already a vertex.
    pub fn join_vertex(&self, v: usize) -> Option<Simplex> {
        match self.0.binary_search(&v) {
            Ok(_) => None,
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Some(Simplex(out))
            }
        }
    }
}

impl TryFrom<Vec<usize>> for Simplex {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Simplex::new(v)
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A finite abstract simplicial complex stored as its full simplex family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    levels: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Downward closure of the given facets. Duplicate and non-maximal facets
    /// are absorbed.
    pub fn from_facets<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = usize>,
    {
        let simplices = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::closure(simplices))
    }

    /// Downward closure of an arbitrary family of simplices.
    pub fn closure<I: IntoIterator<Item = Simplex>>(simplices: I) -> Self {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        let mut seen_tops = HashSet::new();
        for s in simplices {
            if !seen_tops.insert(s.clone()) {
                continue;
            }
            for face in s.faces() {
                let d = face.dim();
                if sets.len() <= d {
                    sets.resize_with(d + 1, BTreeSet::new);
                }
                sets[d].insert(face);
            }
        }
        Self::from_levels(sets.into_iter().map(|s| s.into_iter().collect()).collect())
    }

    /// Caller guarantees each level is sorted and the family downward closed.
    fn from_levels(mut levels: Vec<Vec<Simplex>>) -> Self {
        while levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        SimplicialComplex { levels }
    }

    /// Builds from a family that is already downward closed, rejecting it
    /// otherwise.
    pub fn from_closed_family<I: IntoIterator<Item = Simplex>>(simplices: I) -> Result<Self> {
        let mut sets: Vec<BTreeSet<Simplex>> = Vec::new();
        for s in simplices {
            let d = s.dim();
            if sets.len() <= d {
                sets.resize_with(d + 1, BTreeSet::new);
            }
            sets[d].insert(s);
        }
        let c = Self::from_levels(sets.into_iter().map(|s| s.into_iter().collect()).collect());
        if let Some(bad) = c.first_unclosed() {
            return Err(Error::InvalidParameter(format!(
                "family is not downward closed at {bad}"
            )));
        }
        Ok(c)
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Dimension, `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.levels.len() as isize - 1
    }

    /// Simplices of dimension `d` in lexicographic order.
    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.levels.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn num_simplices(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// All simplices, by dimension then lexicographically.
    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.levels.iter().flatten()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.levels.get(s.dim())?.binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.contains(&Simplex::vertex(v))
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s.0[0]).collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.count(0)
    }

    /// Inclusion-maximal simplices, ordered by dimension then lexicographically.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for d in 0..self.levels.len() {
            let covered: HashSet<Simplex> = self
                .simplices(d + 1)
                .iter()
                .flat_map(|s| s.facets().map(|(_, f)| f))
                .collect();
            out.extend(
                self.levels[d]
                    .iter()
                    .filter(|s| !covered.contains(*s))
                    .cloned(),
            );
        }
        out
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(d, l)| if d % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Simplices of dimension at most `l`; `l = -1` yields the empty complex.
    pub fn skeleton(&self, l: isize) -> Self {
        if l < 0 {
            return Self::empty();
        }
        let keep = (l as usize + 1).min(self.levels.len());
        Self::from_levels(self.levels[..keep].to_vec())
    }

    /// The induced subcomplex on `vertices`; ids absent from `self` are ignored.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let set: HashSet<usize> = vertices.iter().copied().collect();
        self.filter(|s| s.0.iter().all(|v| set.contains(v)))
    }

    /// Sub-family of simplices satisfying `keep`; `keep` must be closed under
    /// taking faces for the result to be a complex.
    pub(crate) fn filter<P: Fn(&Simplex) -> bool>(&self, keep: P) -> Self {
        Self::from_levels(
            self.levels
                .iter()
                .map(|l| l.iter().filter(|s| keep(s)).cloned().collect())
                .collect(),
        )
    }

    pub fn union(&self, other: &Self) -> Self {
        let n = self.levels.len().max(other.levels.len());
        let levels = (0..n)
            .map(|d| merge_sorted(self.simplices(d), other.simplices(d), true))
            .collect();
        Self::from_levels(levels)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let n = self.levels.len().min(other.levels.len());
        let levels = (0..n)
            .map(|d| merge_sorted(self.simplices(d), other.simplices(d), false))
            .collect();
        Self::from_levels(levels)
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// `lk(v) = {σ : v ∉ σ, σ ∪ {v} ∈ X}`.
    pub fn link(&self, v: usize) -> Result<Self> {
        if !self.has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        Ok(self.filter(|s| s.join_vertex(v).is_some_and(|j| self.contains(&j))))
    }

    /// Cone with a new apex vertex.
    pub fn cone(&self, apex: usize) -> Result<Self> {
        if self.has_vertex(apex) {
            return Err(Error::InvalidParameter(format!(
                "apex {apex} is already a vertex"
            )));
        }
        let tops = self
            .iter()
            .map(|s| s.join_vertex(apex).expect("apex not in complex"))
            .chain(std::iter::once(Simplex::vertex(apex)));
        Ok(Self::closure(tops).union(self))
    }

    /// First simplex having a codimension-one face outside the family.
    pub fn first_unclosed(&self) -> Option<&Simplex> {
        self.iter()
            .find(|s| s.facets().any(|(_, f)| !self.contains(&f)))
    }

    /// Barycentric subdivision. Subdivision vertex `i` corresponds to the
    /// `i`-th simplex of `self` in lexicographic order.
    pub fn barycentric_subdivision(&self) -> Result<Subdivision> {
        if self.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut sources: Vec<Simplex> = self.iter().cloned().collect();
        sources.sort();
        let id_of = |s: &Simplex| sources.binary_search(s).expect("source simplex");

        let mut flags = Vec::new();
        for facet in self.facets() {
            for_each_permutation(facet.vertices(), &mut |perm| {
                let mut ids: Vec<usize> = (1..=perm.len())
                    .map(|k| id_of(&Simplex::new(perm[..k].iter().copied()).unwrap()))
                    .collect();
                ids.sort_unstable();
                flags.push(Simplex::from_sorted(ids));
            });
        }
        let complex = Self::closure(flags);
        Ok(Subdivision { complex, sources })
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.facets().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

fn merge_sorted(a: &[Simplex], b: &[Simplex], union: bool) -> Vec<Simplex> {
    use std::cmp::Ordering::*;
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(if union { a.len() + b.len() } else { a.len().min(b.len()) });
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Less => {
                if union {
                    out.push(a[i].clone());
                }
                i += 1;
            }
            Greater => {
                if union {
                    out.push(b[j].clone());
                }
                j += 1;
            }
            Equal => {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
    }
    if union {
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
    }
    out
}

/// Visits every ordering of `items` (Heap's algorithm).
pub(crate) fn for_each_permutation<F: FnMut(&[usize])>(items: &[usize], f: &mut F) {
    let mut a = items.to_vec();
    let n = a.len();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The barycentric subdivision `sd X` together with its vertex-to-simplex map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    sources: Vec<Simplex>,
}

impl Subdivision {
    /// The simplex of the base complex behind subdivision vertex `id`.
    pub fn source(&self, id: usize) -> &Simplex {
        &self.sources[id]
    }

    pub fn sources(&self) -> &[Simplex] {
        &self.sources
    }

    /// The subdivision vertex (barycentre) of a base simplex.
    pub fn barycentre(&self, s: &Simplex) -> Option<usize> {
        self.sources.binary_search(s).ok()
    }

    /// Subcomplex of `sd X` induced by the barycentres of simplices that
    /// satisfy `keep`.
    pub fn induced_by_sources<P: Fn(&Simplex) -> bool>(&self, keep: P) -> SimplicialComplex {
        let ids: Vec<usize> = self
            .sources
            .iter()
            .enumerate()
            .filter(|(_, s)| keep(s))
            .map(|(i, _)| i)
            .collect();
        self.complex.induced(&ids)
    }
}
