//! Simplicial chains with field coefficients and boundary operators.
//!
//! Simplices are oriented by ascending vertex order and
//! `∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk]`.

use std::collections::BTreeMap;
use std::fmt;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar, SparseMatrix};

/// A homogeneous chain. Dimension `-1` chains only arise as boundaries of
/// 0-chains and are always zero; the augmentation is tracked separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    field: FieldSpec,
    dim: isize,
    terms: BTreeMap<Simplex, Scalar>,
}

impl Chain {
    pub fn zero(field: FieldSpec, dim: isize) -> Self {
        Chain { field, dim, terms: BTreeMap::new() }
    }

    /// The elementary chain `1·σ`.
    pub fn simplex(field: FieldSpec, s: Simplex) -> Self {
        let mut c = Self::zero(field, s.dim() as isize);
        c.terms.insert(s, field.one());
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Simplex, Scalar)>>(
        field: FieldSpec,
        dim: isize,
        terms: I,
    ) -> Result<Self> {
        let mut c = Self::zero(field, dim);
        for (s, x) in terms {
            if s.dim() as isize != dim {
                return Err(Error::DimensionMismatch(format!(
                    "simplex {s} in a chain of dimension {dim}"
                )));
            }
            if !field.owns(&x) {
                return Err(Error::DimensionMismatch(format!("{x} is not an element of {field}")));
            }
            c.add_term(s, &x);
        }
        Ok(c)
    }

    /// Integer coefficients mapped into the field.
    pub fn from_int_terms<I: IntoIterator<Item = (Simplex, i64)>>(
        field: FieldSpec,
        dim: isize,
        terms: I,
    ) -> Result<Self> {
        Self::from_terms(field, dim, terms.into_iter().map(|(s, x)| (s, field.from_i64(x))))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Simplex> {
        self.terms.keys()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, s: &Simplex) -> Scalar {
        self.terms.get(s).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `x·s` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, s: Simplex, x: &Scalar) {
        let f = self.field;
        if f.is_zero(x) {
            return;
        }
        let updated = match self.terms.get(&s) {
            Some(y) => f.add(y, x),
            None => x.clone(),
        };
        if f.is_zero(&updated) {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, updated);
        }
    }

    /// `self + k·other`.
    pub fn add_scaled(&mut self, other: &Chain, k: &Scalar) {
        assert_eq!(self.field, other.field, "chains over different fields");
        assert_eq!(self.dim, other.dim, "chains of different dimension");
        for (s, x) in &other.terms {
            self.add_term(s.clone(), &self.field.mul(k, x));
        }
    }

    pub fn plus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, &self.field.one());
        c
    }

    pub fn minus(&self, other: &Chain) -> Chain {
        let mut c = self.clone();
        c.add_scaled(other, &self.field.from_i64(-1));
        c
    }

    pub fn scaled(&self, k: &Scalar) -> Chain {
        let mut c = Chain::zero(self.field, self.dim);
        c.add_scaled(self, k);
        c
    }

    /// Boundary; a 0-chain maps to the zero chain of dimension `-1`.
    pub fn boundary(&self) -> Chain {
        let f = self.field;
        let mut out = Chain::zero(f, self.dim - 1);
        if self.dim <= 0 {
            return out;
        }
        for (s, x) in &self.terms {
            for (i, face) in s.facets() {
                let coeff = if i % 2 == 0 { x.clone() } else { f.neg(x) };
                out.add_term(face, &coeff);
            }
        }
        out
    }

    /// Sum of coefficients of a 0-chain (zero for other dimensions).
    pub fn augmentation(&self) -> Scalar {
        if self.dim != 0 {
            return self.field.zero();
        }
        self.terms
            .values()
            .fold(self.field.zero(), |acc, x| self.field.add(&acc, x))
    }

    /// Cycle in the augmented complex: `∂c = 0`, and `ε(c) = 0` in dimension 0.
    pub fn is_cycle(&self) -> bool {
        if self.dim == 0 {
            self.field.is_zero(&self.augmentation())
        } else {
            self.boundary().is_zero()
        }
    }

    /// Smallest complex containing the support.
    pub fn supporting_complex(&self) -> SimplicialComplex {
        SimplicialComplex::closure(self.terms.keys().cloned())
    }

    pub fn is_supported_in(&self, x: &SimplicialComplex) -> bool {
        self.terms.keys().all(|s| x.contains(s))
    }

    /// Coordinates with respect to the lexicographic basis of `x` in this
    /// dimension.
    pub fn to_vector(&self, x: &SimplicialComplex) -> Result<Vec<Scalar>> {
        let d = usize::try_from(self.dim)
            .map_err(|_| Error::DimensionMismatch("chain of negative dimension".into()))?;
        let mut v = vec![self.field.zero(); x.count(d)];
        for (s, c) in &self.terms {
            let i = x.index_of(s).ok_or_else(|| Error::SimplexNotInComplex(s.clone()))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(
        field: FieldSpec,
        x: &SimplicialComplex,
        dim: usize,
        v: &[Scalar],
    ) -> Result<Self> {
        if v.len() != x.count(dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} simplices",
                v.len(),
                x.count(dim)
            )));
        }
        Self::from_terms(
            field,
            dim as isize,
            x.simplices(dim).iter().cloned().zip(v.iter().cloned()),
        )
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, x)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{x}{s}")?;
        }
        Ok(())
    }
}

/// Matrix of `∂_i : C_i → C_{i-1}` in lexicographic bases. For `i = 0` the
/// augmented variant is the `1 × n` all-ones row; the plain one is `0 × n`.
pub fn boundary_matrix(
    x: &SimplicialComplex,
    i: usize,
    field: FieldSpec,
    augmented: bool,
) -> Result<SparseMatrix> {
    if i as isize > x.dim() {
        return Err(Error::DegreeOutOfRange { degree: i as isize, max: x.dim() });
    }
    let cols = x.simplices(i);
    if i == 0 {
        let mut m = SparseMatrix::zeros(usize::from(augmented), cols.len());
        if augmented {
            for j in 0..cols.len() {
                m.set(0, j, field.one(), field);
            }
        }
        return Ok(m);
    }
    let mut m = SparseMatrix::zeros(x.count(i - 1), cols.len());
    let minus_one = field.from_i64(-1);
    for (j, s) in cols.iter().enumerate() {
        for (k, face) in s.facets() {
            let row = x.index_of(&face).expect("complex is downward closed");
            let v = if k % 2 == 0 { field.one() } else { minus_one.clone() };
            m.set(row, j, v, field);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_boundary() {
        let f = FieldSpec::Q;
        let c = Chain::simplex(f, s(&[0, 1, 2]));
        let expected =
            Chain::from_int_terms(f, 1, [(s(&[1, 2]), 1), (s(&[0, 2]), -1), (s(&[0, 1]), 1)])
                .unwrap();
        assert_eq!(c.boundary(), expected);
        assert!(c.boundary().boundary().is_zero());
    }

    #[test]
    fn square_interior_edge_cancels_over_f2() {
        let f = FieldSpec::F2;
        let c = Chain::from_int_terms(f, 2, [(s(&[0, 1, 2]), 1), (s(&[0, 2, 3]), 1)]).unwrap();
        let b = c.boundary();
        let support: Vec<String> = b.support().map(|x| x.to_string()).collect();
        assert_eq!(support, ["[0,1]", "[0,3]", "[1,2]", "[2,3]"]);
    }

    #[test]
    fn augmentation_and_cycles() {
        let f = FieldSpec::Fp(3);
        let c = Chain::from_int_terms(f, 0, [(s(&[0]), 1), (s(&[4]), -1)]).unwrap();
        assert!(c.is_cycle());
        assert!(!Chain::simplex(f, s(&[0])).is_cycle());
        assert!(c.boundary().is_zero());
        assert_eq!(c.boundary().dim(), -1);
    }

    #[test]
    fn mismatched_dimension_rejected() {
        let r = Chain::from_int_terms(FieldSpec::F2, 1, [(s(&[0, 1, 2]), 1)]);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn boundary_matrix_shapes() {
        let f = FieldSpec::Q;
        let circle = SimplicialComplex::from_facets([[0, 1], [1, 2], [0, 2]]).unwrap();
        let d1 = boundary_matrix(&circle, 1, f, true).unwrap();
        assert_eq!((d1.rows(), d1.cols(), d1.nnz()), (3, 3, 6));
        let pts = SimplicialComplex::from_facets([[0], [1], [2], [3]]).unwrap();
        let d0 = boundary_matrix(&pts, 0, f, true).unwrap();
        assert_eq!((d0.rows(), d0.cols(), d0.nnz()), (1, 4, 4));
        assert_eq!(boundary_matrix(&pts, 0, f, false).unwrap().rows(), 0);
        let tri = SimplicialComplex::from_facets([[0, 1, 2]]).unwrap();
        let d2 = boundary_matrix(&tri, 2, f, true).unwrap();
        assert_eq!((d2.rows(), d2.cols()), (3, 1));
        assert!(matches!(
            boundary_matrix(&tri, 3, f, true),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn vector_round_trip() {
        let f = FieldSpec::Fp(5);
        let tri = SimplicialComplex::from_facets([[0, 1, 2]]).unwrap();
        let c = Chain::simplex(f, s(&[0, 1, 2])).boundary();
        let v = c.to_vector(&tri).unwrap();
        assert_eq!(Chain::from_vector(f, &tri, 1, &v).unwrap(), c);
    }
}
