//! Integer Smith normal form and Betti numbers derived from it, written
//! without the library's complex or linear algebra code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// All nonempty faces of the given facets, grouped by size.
pub fn faces(facets: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut by_size: BTreeMap<usize, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for f in facets {
        let mut f = f.clone();
        f.sort_unstable();
        f.dedup();
        for bits in 1u32..(1 << f.len()) {
            let s: Vec<usize> = (0..f.len()).filter(|i| bits >> i & 1 == 1).map(|i| f[i]).collect();
            by_size.entry(s.len()).or_default().insert(s);
        }
    }
    let top = by_size.keys().next_back().copied().unwrap_or(0);
    (1..=top).map(|k| by_size.remove(&k).unwrap_or_default().into_iter().collect()).collect()
}

/// Integer matrix of `∂` from `(k)`-faces to `(k-1)`-faces, rows indexed by
/// the lower faces.
fn boundary(lower: &[Vec<usize>], upper: &[Vec<usize>]) -> Vec<Vec<i128>> {
    let index: BTreeMap<&Vec<usize>, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = vec![vec![0i128; upper.len()]; lower.len()];
    for (j, s) in upper.iter().enumerate() {
        for i in 0..s.len() {
            let mut face = s.clone();
            face.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m[index[&face]][j] = sign;
        }
    }
    m
}

/// Diagonal of the Smith normal form, nonzero entries only, each positive
/// and dividing the next.
pub fn smith_diagonal(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    // (d_i, d_j) -> (gcd, lcm) until each divides the next
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = gcd(diag[i], diag[j]);
            let l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Rank of `∂_k` for `k = 0..=dim`, with `∂_0` the augmentation, over `Q`
/// (`p = 0`) or `F_p`, read off the Smith diagonals.
fn ranks(facets: &[Vec<usize>], p: i128) -> (Vec<usize>, Vec<usize>) {
    let fs = faces(facets);
    let counts: Vec<usize> = fs.iter().map(Vec::len).collect();
    let mut ranks = Vec::with_capacity(fs.len());
    for k in 0..fs.len() {
        let m = if k == 0 {
            vec![vec![1i128; fs[0].len()]]
        } else {
            boundary(&fs[k - 1], &fs[k])
        };
        let d = smith_diagonal(m);
        ranks.push(d.iter().filter(|&&x| p == 0 || x % p != 0).count());
    }
    (counts, ranks)
}

/// Reduced Betti numbers in degrees `-1..=dim`. `p = 0` means `Q`.
pub fn betti(facets: &[Vec<usize>], p: i128) -> Vec<usize> {
    if facets.is_empty() {
        return vec![1];
    }
    let (counts, ranks) = ranks(facets, p);
    let mut out = vec![0];
    for k in 0..counts.len() {
        let next = ranks.get(k + 1).copied().unwrap_or(0);
        out.push(counts[k] - ranks[k] - next);
    }
    out
}

/// Torsion coefficients of integral `H_k`: Smith entries `> 1` of `∂_{k+1}`.
pub fn torsion(facets: &[Vec<usize>], k: usize) -> Vec<i128> {
    let fs = faces(facets);
    if k + 1 >= fs.len() {
        return Vec::new();
    }
    smith_diagonal(boundary(&fs[k], &fs[k + 1])).into_iter().filter(|&x| x > 1).collect()
}

pub fn circle() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![0, 2], vec![1, 2]]
}

pub fn tetra_boundary() -> Vec<Vec<usize>> {
    vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
}

pub fn torus7() -> Vec<Vec<usize>> {
    (0..7).flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]]).collect()
}

pub fn rp2_6() -> Vec<Vec<usize>> {
    [[0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4], [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]]
        .iter()
        .map(|f| f.to_vec())
        .collect()
}

#[cfg(test)]
mod own {
    #[test]
    fn diagonal_of_small_matrices() {
        assert_eq!(super::smith_diagonal(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(super::smith_diagonal(vec![vec![0, 0], vec![0, 0]]), Vec::<i128>::new());
        assert_eq!(super::smith_diagonal(vec![vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }
}
