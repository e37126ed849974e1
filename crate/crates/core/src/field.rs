//! Exact linear algebra over F2, prime fields and the rationals.
//!
//! Scalars are tagged values; the heavy lifting happens in elimination
//! routines that are generic over a small arithmetic trait so the modular
//! path runs on plain machine words.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    F2,
    /// Odd prime field.
    Fp(u64),
    Q,
}

impl FieldSpec {
    /// The prime field of order `p`; `p = 2` gives [`FieldSpec::F2`].
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p >= 1 << 32 {
            return Err(Error::InvalidParameter(format!("prime {p} exceeds 32 bits")));
        }
        Ok(if p == 2 { FieldSpec::F2 } else { FieldSpec::Fp(p) })
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::F2 => 2,
            FieldSpec::Fp(p) => *p,
            FieldSpec::Q => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::zero()),
            _ => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, x: i64) -> Scalar {
        match self {
            FieldSpec::Q => Scalar::Rat(BigRational::from_integer(BigInt::from(x))),
            _ => {
                let p = self.characteristic() as i128;
                Scalar::Mod((x as i128).rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        match self {
            FieldSpec::Q => Ok(Scalar::Rat(BigRational::new(num.into(), den.into()))),
            _ => {
                let d = self.from_i64(den);
                let inv = self.inv(&d).ok_or_else(|| {
                    Error::InvalidParameter(format!("{den} is not invertible in {self}"))
                })?;
                Ok(self.mul(&self.from_i64(num), &inv))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Mod(x) => *x == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Mod(x), Scalar::Mod(y)) => Scalar::Mod((x + y) % self.characteristic()),
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Mod(0) => Scalar::Mod(0),
            Scalar::Mod(x) => Scalar::Mod(self.characteristic() - x),
            Scalar::Rat(r) => Scalar::Rat(-r),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % self.characteristic() as u128) as u64)
            }
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalars from different fields"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        Some(match a {
            Scalar::Mod(x) => Scalar::Mod(ModArith(self.characteristic()).inv_word(*x)),
            Scalar::Rat(r) => Scalar::Rat(r.recip()),
        })
    }

    /// Whether `a` is a value of this field.
    pub fn owns(&self, a: &Scalar) -> bool {
        match (self, a) {
            (FieldSpec::Q, Scalar::Rat(_)) => true,
            (FieldSpec::Q, Scalar::Mod(_)) | (_, Scalar::Rat(_)) => false,
            (_, Scalar::Mod(x)) => *x < self.characteristic(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::F2 => write!(f, "f2"),
            FieldSpec::Fp(p) => write!(f, "f{p}"),
            FieldSpec::Q => write!(f, "q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "q" || lower == "qq" || lower == "rational" {
            return Ok(FieldSpec::Q);
        }
        let digits = lower
            .strip_prefix("fp")
            .or_else(|| lower.strip_prefix('f'))
            .or_else(|| lower.strip_prefix('z'))
            .ok_or_else(|| Error::UnknownField(s.to_string()))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::UnknownField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. `Mod` values are reduced residues; `Rat` values are kept
/// in lowest terms with positive denominator by `BigRational`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Mod(u64),
    Rat(BigRational),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod(x) => write!(f, "{x}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sparse matrix with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, field.one(), field);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>], field: FieldSpec) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(nrows, ncols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged rows");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, field.from_i64(*x), field);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Stores `value`, dropping the entry when it is zero.
    pub fn set(&mut self, row: usize, col: usize, value: Scalar, field: FieldSpec) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if field.is_zero(&value) {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Scalar> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|((r, c), v)| (*r, *c, v))
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|((r, c), v)| ((*c, *r), v.clone())).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[Scalar], field: FieldSpec) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = vec![field.zero(); self.rows];
        for ((r, c), v) in &self.entries {
            out[*r] = field.add(&out[*r], &field.mul(v, &x[*c]));
        }
        Ok(out)
    }

    fn dense_rows<A: Arith>(&self, arith: &A) -> Vec<Vec<A::E>> {
        let mut d = vec![vec![arith.zero(); self.cols]; self.rows];
        for ((r, c), v) in &self.entries {
            d[*r][*c] = arith.lift(v);
        }
        d
    }

    fn sparse_rows<A: Arith>(&self, arith: &A) -> Vec<Vec<(usize, A::E)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for ((r, c), v) in &self.entries {
            rows[*r].push((*c, arith.lift(v)));
        }
        rows
    }
}

/// Entry threshold below which elimination runs on dense rows.
pub const DENSE_LIMIT: usize = 10_000;

/// Rank over `field`, exact.
pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.nnz() == 0 {
        return 0;
    }
    match field {
        FieldSpec::F2 => rank_f2_bitset(m),
        _ => rank_generic(m, field),
    }
}

/// Rank through the generic elimination, bypassing the F2 bitset path.
pub fn rank_generic(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows * m.cols <= DENSE_LIMIT {
        rank_with(m, field, Strategy::Dense)
    } else {
        rank_with(m, field, Strategy::Sparse)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Dense,
    Sparse,
}

pub fn rank_with(m: &SparseMatrix, field: FieldSpec, strategy: Strategy) -> usize {
    match field {
        FieldSpec::Q => rank_arith(m, &RatArith, strategy),
        _ => rank_arith(m, &ModArith(field.characteristic()), strategy),
    }
}

fn rank_arith<A: Arith>(m: &SparseMatrix, arith: &A, strategy: Strategy) -> usize {
    match strategy {
        Strategy::Dense => {
            let mut rows = m.dense_rows(arith);
            row_reduce(&mut rows, arith, m.cols).len()
        }
        Strategy::Sparse => sparse_rank(m.sparse_rows(arith), arith),
    }
}

/// `cols - rank`.
pub fn nullspace_dim(m: &SparseMatrix, field: FieldSpec) -> usize {
    m.cols - rank(m, field)
}

/// Some `x` with `Mx = b`, or `None`. Free variables are set to zero, so the
/// answer depends only on the inputs.
pub fn solve(m: &SparseMatrix, b: &[Scalar], field: FieldSpec) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            m.rows
        )));
    }
    if let Some(bad) = b.iter().find(|x| !field.owns(x)) {
        return Err(Error::DimensionMismatch(format!("{bad} is not an element of {field}")));
    }
    Ok(match field {
        FieldSpec::Q => solve_arith(m, b, &RatArith),
        _ => solve_arith(m, b, &ModArith(field.characteristic())),
    })
}

fn solve_arith<A: Arith>(m: &SparseMatrix, b: &[Scalar], arith: &A) -> Option<Vec<Scalar>> {
    let n = m.cols;
    if b.iter().all(|x| arith.is_zero(&arith.lift(x))) {
        return Some(vec![arith.lower(&arith.zero()); n]);
    }
    let mut rows = m.dense_rows(arith);
    for (row, rhs) in rows.iter_mut().zip(b) {
        row.push(arith.lift(rhs));
    }
    let pivots = row_reduce(&mut rows, arith, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![arith.zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x.iter().map(|e| arith.lower(e)).collect())
}

/// Reduced row echelon form in place over the first `ncols` columns; returns
/// the pivot column of each nonzero row. Pivot rows are the first rows found
/// with a nonzero entry, scanning top to bottom.
fn row_reduce<A: Arith>(rows: &mut [Vec<A::E>], arith: &A, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !arith.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = arith.inv(&rows[r][c]);
        for x in rows[r][c..].iter_mut() {
            *x = arith.mul(x, &inv);
        }
        let (before, rest) = rows.split_at_mut(r);
        let (pivot, after) = rest.split_first_mut().unwrap();
        for other in before.iter_mut().chain(after.iter_mut()) {
            if arith.is_zero(&other[c]) {
                continue;
            }
            let f = other[c].clone();
            for (x, y) in other[c..].iter_mut().zip(&pivot[c..]) {
                if !arith.is_zero(y) {
                    *x = arith.sub(x, &arith.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Sparse elimination: repeatedly pick the shortest remaining row, use its
/// leading entry as pivot and clear that column from the other rows.
fn sparse_rank<A: Arith>(mut rows: Vec<Vec<(usize, A::E)>>, arith: &A) -> usize {
    rows.retain(|r| !r.is_empty());
    let mut rank = 0;
    while !rows.is_empty() {
        let (best, _) = rows
            .iter()
            .enumerate()
            .min_by_key(|(i, r)| (r.len(), *i))
            .unwrap();
        let pivot = rows.swap_remove(best);
        let (pc, pv) = pivot[0].clone();
        let inv = arith.inv(&pv);
        rank += 1;
        for row in rows.iter_mut() {
            let Ok(pos) = row.binary_search_by_key(&pc, |(c, _)| *c) else {
                continue;
            };
            let f = arith.mul(&row[pos].1, &inv);
            *row = axpy_sparse(row, &pivot, &f, arith);
        }
        rows.retain(|r| !r.is_empty());
    }
    rank
}

/// `row - f * pivot` on sorted sparse rows.
fn axpy_sparse<A: Arith>(
    row: &[(usize, A::E)],
    pivot: &[(usize, A::E)],
    f: &A::E,
    arith: &A,
) -> Vec<(usize, A::E)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, arith.neg(&arith.mul(f, &pivot[j].1))));
            j += 1;
        } else {
            let v = arith.sub(&row[i].1, &arith.mul(f, &pivot[j].1));
            if !arith.is_zero(&v) {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over F2 on bit-packed rows.
pub fn rank_f2_bitset(m: &SparseMatrix) -> usize {
    let words = m.cols.div_ceil(64);
    let mut rows = vec![vec![0u64; words]; m.rows];
    for ((r, c), v) in &m.entries {
        if let Scalar::Mod(1) = v {
            rows[*r][c / 64] |= 1 << (c % 64);
        }
    }
    let mut rank = 0;
    for c in 0..m.cols {
        let (w, bit) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & bit != 0 {
                for (x, y) in row.iter_mut().zip(&pivot).skip(w) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

trait Arith {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn lift(&self, s: &Scalar) -> Self::E;
    fn lower(&self, e: &Self::E) -> Scalar;
}

struct ModArith(u64);

impl ModArith {
    fn inv_word(&self, a: u64) -> u64 {
        // Fermat: a^(p-2)
        let p = self.0;
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % p as u128) as u64;
            }
            base = (base as u128 * base as u128 % p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Arith for ModArith {
    type E = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.0 - b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.0 as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        self.inv_word(*a)
    }
    fn lift(&self, s: &Scalar) -> u64 {
        match s {
            Scalar::Mod(x) => x % self.0,
            Scalar::Rat(_) => panic!("rational scalar in a modular computation"),
        }
    }
    fn lower(&self, e: &u64) -> Scalar {
        Scalar::Mod(*e)
    }
}

struct RatArith;

impl Arith for RatArith {
    type E = BigRational;
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn lift(&self, s: &Scalar) -> BigRational {
        match s {
            Scalar::Rat(r) => r.clone(),
            Scalar::Mod(_) => panic!("modular scalar in a rational computation"),
        }
    }
    fn lower(&self, e: &BigRational) -> Scalar {
        Scalar::Rat(e.clone())
    }
}

/// Sign of a rational scalar, `None` for modular values.
pub fn rational_sign(s: &Scalar) -> Option<i8> {
    match s {
        Scalar::Rat(r) if r.is_positive() => Some(1),
        Scalar::Rat(r) if r.is_negative() => Some(-1),
        Scalar::Rat(_) => Some(0),
        Scalar::Mod(_) => None,
    }
}
