//! Reduced homology over a field, cycle filling and fundamental classes.

use std::collections::VecDeque;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::chain::{boundary_matrix, Chain};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{rank, solve, FieldSpec};
use crate::pseudomanifold::{is_pseudomanifold, ridge_incidence};

/// Reduced Betti numbers `β̃_i` for `i = -1, 0, …, dim X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector {
    values: Vec<usize>,
}

impl BettiVector {
    pub fn from_values(values: Vec<usize>) -> Self {
        assert!(!values.is_empty(), "degree -1 is always present");
        BettiVector { values }
    }

    /// `β̃_i`; zero outside the stored range (below `-1` or above the
    /// dimension).
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.values.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn vanishes(&self, i: isize) -> bool {
        self.get(i) == 0
    }

    /// `(degree, β̃)` pairs starting at degree `-1`.
    pub fn iter(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, b)| (i as isize - 1, *b))
    }

    pub fn top_degree(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// Equal in every degree. `==` also compares the stored range, which
    /// follows the dimension of the complex.
    pub fn same_numbers(&self, other: &BettiVector) -> bool {
        let top = self.top_degree().max(other.top_degree());
        (-1..=top).all(|i| self.get(i) == other.get(i))
    }

    /// `Σ (-1)^i β̃_i` over the stored degrees.
    pub fn alternating_sum(&self) -> i64 {
        self.iter()
            .map(|(i, b)| if i.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, b)) in self.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "b{i}={b}")?;
        }
        Ok(())
    }
}

impl Serialize for BettiVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (i, b) in self.iter() {
            map.serialize_entry(&i.to_string(), &b)?;
        }
        map.end()
    }
}

/// Reduced Betti numbers over `field`, computed from the augmented chain
/// complex. The empty complex has `β̃_{-1} = 1` and nothing else.
pub fn reduced_betti(x: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    if x.is_empty() {
        return BettiVector { values: vec![1] };
    }
    let top = x.dim() as usize;
    // ranks[i] = rank ∂_i, with the augmentation as ∂_0
    let mut ranks = vec![1usize; top + 2];
    ranks[top + 1] = 0;
    for (i, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *r = rank(&boundary_matrix(x, i, field, true).expect("degree in range"), field);
    }
    let mut values = vec![0usize];
    for i in 0..=top {
        values.push(x.count(i) - ranks[i] - ranks[i + 1]);
    }
    BettiVector { values }
}

/// Some chain `c` in `x` with `∂c = z`, or `None` when `z` is not a boundary.
/// `z` must be a cycle of `x` (augmented in dimension 0).
pub fn fill(x: &SimplicialComplex, z: &Chain, field: FieldSpec) -> Result<Option<Chain>> {
    if z.field() != field {
        return Err(Error::DimensionMismatch(format!(
            "chain over {} filled over {field}",
            z.field()
        )));
    }
    if z.dim() < 0 {
        return Err(Error::DimensionMismatch("cannot fill a chain of dimension -1".into()));
    }
    if let Some(s) = z.support().find(|s| !x.contains(s)) {
        return Err(Error::SimplexNotInComplex(s.clone()));
    }
    if !z.is_cycle() {
        return Err(Error::NotACycle);
    }
    let d = z.dim() as usize;
    if z.is_zero() {
        return Ok(Some(Chain::zero(field, d as isize + 1)));
    }
    if d as isize + 1 > x.dim() {
        return Ok(None);
    }
    let m = boundary_matrix(x, d + 1, field, true)?;
    let b = z.to_vector(x)?;
    match solve(&m, &b, field)? {
        None => Ok(None),
        Some(v) => Ok(Some(Chain::from_vector(field, x, d + 1, &v)?)),
    }
}

/// A cycle carrying a unit coefficient on every facet of the pseudomanifold
/// `m`, or `None` when the facets admit no coherent orientation over `field`.
pub fn fundamental_class(m: &SimplicialComplex, field: FieldSpec) -> Result<Option<Chain>> {
    let report = is_pseudomanifold(m)?;
    if !report.is_pseudomanifold() {
        return Err(Error::NotPseudomanifold(format!("{report:?}")));
    }
    let d = report.dimension as usize;
    let facets = m.simplices(d);

    let signs: Vec<i64> = if field == FieldSpec::F2 {
        vec![1; facets.len()]
    } else if d == 0 {
        vec![1, -1]
    } else {
        match propagate_orientation(facets) {
            Some(s) => s,
            None => return Ok(None),
        }
    };
    let z = Chain::from_int_terms(field, d as isize, facets.iter().cloned().zip(signs))?;
    Ok(z.is_cycle().then_some(z))
}

/// Breadth-first sign assignment over the dual graph: two facets sharing a
/// ridge must induce opposite coefficients on it.
fn propagate_orientation(facets: &[crate::complex::Simplex]) -> Option<Vec<i64>> {
    let incidence = ridge_incidence(facets);
    let position = |f: usize, r: &crate::complex::Simplex| -> usize {
        facets[f]
            .vertices()
            .iter()
            .position(|v| !r.contains(*v))
            .expect("ridge is a proper face")
    };
    let mut sign: Vec<Option<i64>> = vec![None; facets.len()];
    sign[0] = Some(1);
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        let sf = sign[f].unwrap();
        for (i, r) in facets[f].facets() {
            for &g in &incidence[&r] {
                if g == f {
                    continue;
                }
                let j = position(g, &r);
                let parity = if (i + j) % 2 == 0 { 1 } else { -1 };
                let want = -sf * parity;
                match sign[g] {
                    None => {
                        sign[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(s) if s != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    sign.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Simplex;

    fn cx(f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn circle() -> SimplicialComplex {
        cx(&[&[0, 1], &[1, 2], &[0, 2]])
    }

    #[test]
    fn circle_betti() {
        let b = reduced_betti(&circle(), FieldSpec::Q);
        assert_eq!((b.get(-1), b.get(0), b.get(1)), (0, 0, 1));
        assert_eq!(b.get(5), 0);
        assert_eq!(b.get(-4), 0);
    }

    #[test]
    fn empty_complex_convention() {
        let b = reduced_betti(&SimplicialComplex::empty(), FieldSpec::F2);
        assert_eq!(b.get(-1), 1);
        assert_eq!(b.get(0), 0);
        assert_eq!(reduced_betti(&cx(&[&[3]]), FieldSpec::F2).get(-1), 0);
    }

    #[test]
    fn disconnected_points() {
        let b = reduced_betti(&cx(&[&[0], &[1], &[2]]), FieldSpec::Fp(3));
        assert_eq!(b.get(0), 2);
    }

    #[test]
    fn fill_examples() {
        let f = FieldSpec::Q;
        let tri = cx(&[&[0, 1, 2]]);
        let s = Simplex::new([0, 1, 2]).unwrap();
        let z = Chain::simplex(f, s.clone()).boundary();
        assert_eq!(fill(&tri, &z, f).unwrap(), Some(Chain::simplex(f, s)));
        assert_eq!(fill(&circle(), &z, f).unwrap(), None);
        let zero = Chain::zero(f, 1);
        assert_eq!(fill(&circle(), &zero, f).unwrap(), Some(Chain::zero(f, 2)));
    }

    #[test]
    fn fill_rejects_non_cycles() {
        let f = FieldSpec::F2;
        let e = Chain::simplex(f, Simplex::new([0, 1]).unwrap());
        assert_eq!(fill(&circle(), &e, f), Err(Error::NotACycle));
        let v = Chain::simplex(f, Simplex::vertex(0));
        assert_eq!(fill(&circle(), &v, f), Err(Error::NotACycle));
    }

    #[test]
    fn fill_in_dimension_zero() {
        let f = FieldSpec::Q;
        let path = cx(&[&[0, 1], &[1, 2]]);
        let z = Chain::from_int_terms(f, 0, [(Simplex::vertex(2), 1), (Simplex::vertex(0), -1)])
            .unwrap();
        let c = fill(&path, &z, f).unwrap().unwrap();
        assert_eq!(c.boundary(), z);
        assert_eq!(fill(&cx(&[&[0], &[2]]), &z, f).unwrap(), None);
    }

    #[test]
    fn tetrahedron_boundary_class() {
        let m = cx(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let z = fundamental_class(&m, FieldSpec::Q).unwrap().unwrap();
        assert_eq!(z.support_len(), 4);
        assert!(z.is_cycle());
        // same orientation as ∂[0,1,2,3] up to a global sign
        let bd = Chain::simplex(FieldSpec::Q, Simplex::new([0, 1, 2, 3]).unwrap()).boundary();
        assert!(z == bd || z == bd.scaled(&FieldSpec::Q.from_i64(-1)));
    }

    #[test]
    fn two_point_class() {
        let z = fundamental_class(&cx(&[&[0], &[1]]), FieldSpec::Fp(5)).unwrap().unwrap();
        assert!(z.is_cycle());
        assert_eq!(z.support_len(), 2);
    }

    #[test]
    fn non_pseudomanifold_rejected() {
        let r = fundamental_class(&cx(&[&[0, 1, 2]]), FieldSpec::Q);
        assert!(matches!(r, Err(Error::NotPseudomanifold(_))));
    }
}
