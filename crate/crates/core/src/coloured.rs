//! Complexes with a vertex partition into colour classes `V_0, …, V_m`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// Colour sets are stored as bit masks.
pub const MAX_COLOURS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColouredComplex {
    #[serde(skip)]
    complex: SimplicialComplex,
    classes: Vec<Vec<usize>>,
    #[serde(skip)]
    colour_of: BTreeMap<usize, usize>,
}

impl ColouredComplex {
    /// `classes[i]` is `V_i`. Every vertex of the complex must appear in
    /// exactly one class and classes may not name foreign vertices. Empty
    /// classes are allowed here and rejected by the operations that need them.
    pub fn new(complex: SimplicialComplex, classes: Vec<Vec<usize>>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::Colouring("at least one colour class is required".into()));
        }
        if classes.len() > MAX_COLOURS {
            return Err(Error::InvalidParameter(format!(
                "{} colours, at most {MAX_COLOURS} supported",
                classes.len()
            )));
        }
        let mut colour_of = BTreeMap::new();
        let mut sorted = Vec::with_capacity(classes.len());
        for (i, class) in classes.into_iter().enumerate() {
            let mut class = class;
            class.sort_unstable();
            class.dedup();
            for &v in &class {
                if !complex.has_vertex(v) {
                    return Err(Error::Colouring(format!("colour {i} names unknown vertex {v}")));
                }
                if let Some(j) = colour_of.insert(v, i) {
                    return Err(Error::Colouring(format!("vertex {v} has colours {j} and {i}")));
                }
            }
            sorted.push(class);
        }
        if let Some(v) = complex.vertices().into_iter().find(|v| !colour_of.contains_key(v)) {
            return Err(Error::Colouring(format!("vertex {v} has no colour")));
        }
        Ok(ColouredComplex { complex, classes: sorted, colour_of })
    }

    /// Colours `0..=m` given by a function on vertices.
    pub fn from_fn<F: Fn(usize) -> usize>(complex: SimplicialComplex, m: usize, colour: F) -> Result<Self> {
        let mut classes = vec![Vec::new(); m + 1];
        for v in complex.vertices() {
            let c = colour(v);
            if c > m {
                return Err(Error::Colouring(format!("vertex {v} has colour {c} > {m}")));
            }
            classes[c].push(v);
        }
        Self::new(complex, classes)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Largest colour index.
    pub fn m(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn num_colours(&self) -> usize {
        self.classes.len()
    }

    pub fn colour(&self, v: usize) -> Option<usize> {
        self.colour_of.get(&v).copied()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn first_empty_class(&self) -> Option<usize> {
        self.classes.iter().position(Vec::is_empty)
    }

    pub fn require_nonempty_classes(&self) -> Result<()> {
        match self.first_empty_class() {
            Some(i) => Err(Error::EmptyColour(i)),
            None => Ok(()),
        }
    }

    /// Mask of all colours `0..=m`.
    pub fn full_mask(&self) -> u64 {
        mask_below(self.num_colours())
    }

    pub fn colour_mask(&self, s: &Simplex) -> u64 {
        s.vertices().iter().fold(0u64, |acc, v| acc | 1 << self.colour_of[v])
    }

    pub fn colours_of(&self, s: &Simplex) -> Vec<usize> {
        members(self.colour_mask(s))
    }

    /// At most one vertex of each colour.
    pub fn is_colourful(&self, s: &Simplex) -> bool {
        self.colour_mask(s).count_ones() as usize == s.len()
    }

    /// Exactly one vertex of each colour.
    pub fn is_rainbow(&self, s: &Simplex) -> bool {
        s.len() == self.num_colours() && self.is_colourful(s)
    }

    /// `K_S`: induced by the vertices with a colour in `S`.
    pub fn sub_by_colours(&self, colours: &[usize]) -> SimplicialComplex {
        self.sub_by_mask(to_mask(colours))
    }

    pub fn sub_by_mask(&self, mask: u64) -> SimplicialComplex {
        let verts: Vec<usize> = (0..self.num_colours())
            .filter(|i| mask >> i & 1 == 1)
            .flat_map(|i| self.classes[i].iter().copied())
            .collect();
        self.complex.induced(&verts)
    }

    /// `K̃_S`: simplices whose colour set does not contain `S`.
    pub fn tilde_k(&self, colours: &[usize]) -> Result<SimplicialComplex> {
        if colours.is_empty() {
            return Err(Error::InvalidParameter("colour set must be nonempty".into()));
        }
        if let Some(&c) = colours.iter().find(|&&c| c >= self.num_colours()) {
            return Err(Error::InvalidParameter(format!("colour {c} > m = {}", self.m())));
        }
        Ok(self.tilde_by_mask(to_mask(colours)))
    }

    pub(crate) fn tilde_by_mask(&self, mask: u64) -> SimplicialComplex {
        self.complex.filter(|s| self.colour_mask(s) & mask != mask)
    }

    /// `m`-simplices using every colour once, in lexicographic order.
    pub fn rainbow_simplices(&self) -> Vec<Simplex> {
        self.complex
            .simplices(self.m())
            .iter()
            .filter(|s| self.is_colourful(s))
            .cloned()
            .collect()
    }

    pub fn colourful_simplices(&self, dim: usize) -> Vec<Simplex> {
        self.complex
            .simplices(dim)
            .iter()
            .filter(|s| self.is_colourful(s))
            .cloned()
            .collect()
    }

    /// Same colour classes on a subcomplex; classes may become empty.
    pub fn restricted(&self, sub: SimplicialComplex) -> Result<Self> {
        let classes = self
            .classes
            .iter()
            .map(|c| c.iter().copied().filter(|&v| sub.has_vertex(v)).collect())
            .collect();
        Self::new(sub, classes)
    }
}

pub(crate) fn to_mask(colours: &[usize]) -> u64 {
    colours.iter().fold(0u64, |acc, &c| acc | 1 << c)
}

pub(crate) fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
