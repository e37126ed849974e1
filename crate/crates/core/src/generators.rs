//! Fixtures and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloured::ColouredComplex;
use crate::complex::{Simplex, SimplicialComplex};
use crate::constructive::k_subsets;
use crate::error::{Error, Result};
use crate::nerve::Cover;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The full simplex on `0..=n`.
pub fn full_simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::closure([Simplex::new(0..=n).unwrap()])
}

/// `∂Δ_m`: all proper faces of `{0..m}`.
pub fn simplex_boundary(m: usize) -> Result<SimplicialComplex> {
    if m == 0 {
        return Err(Error::InvalidParameter("the boundary of a point is empty".into()));
    }
    Ok(full_simplex(m).skeleton(m as isize - 1))
}

/// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus7() -> SimplicialComplex {
    let tri = (0..7).flat_map(|i| [[i, (i + 1) % 7, (i + 3) % 7], [i, (i + 2) % 7, (i + 3) % 7]]);
    SimplicialComplex::from_facets(tri).unwrap()
}

/// The 6-vertex real projective plane.
pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::from_facets([
        [0, 1, 3],
        [0, 1, 5],
        [0, 2, 4],
        [0, 2, 5],
        [0, 3, 4],
        [1, 2, 3],
        [1, 2, 4],
        [1, 4, 5],
        [2, 3, 5],
        [3, 4, 5],
    ])
    .unwrap()
}

/// Boundary of the octahedron on `0..6`, antipodal pairs `{2i, 2i+1}`
/// forming colour `i`.
pub fn octahedron() -> ColouredComplex {
    let mut facets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                facets.push([a, b, c]);
            }
        }
    }
    let k = SimplicialComplex::from_facets(facets).unwrap();
    ColouredComplex::new(k, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap()
}

/// Grid torus on `rows × cols` vertices, vertex `(r, c)` with id
/// `r * cols + c`, each square split along its main diagonal.
pub fn grid_torus(rows: usize, cols: usize) -> Result<SimplicialComplex> {
    if rows < 3 || cols < 3 {
        return Err(Error::InvalidParameter(format!(
            "grid torus needs at least 3 rows and 3 columns, got {rows}x{cols}"
        )));
    }
    let id = |r: usize, c: usize| (r % rows) * cols + (c % cols);
    let mut facets = Vec::with_capacity(2 * rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            facets.push([id(r, c), id(r, c + 1), id(r + 1, c + 1)]);
            facets.push([id(r, c), id(r + 1, c), id(r + 1, c + 1)]);
        }
    }
    SimplicialComplex::from_facets(facets)
}

/// Grid torus coloured by row bands: `bands[i]` consecutive rows get colour
/// `i`, starting at row 0.
pub fn banded_torus(rows: usize, cols: usize, bands: &[usize]) -> Result<ColouredComplex> {
    if bands.len() < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 bands, got {}", bands.len())));
    }
    if bands.contains(&0) || bands.iter().sum::<usize>() != rows {
        return Err(Error::InvalidParameter(format!(
            "band sizes {bands:?} must be positive and sum to {rows}"
        )));
    }
    let k = grid_torus(rows, cols)?;
    let mut row_colour = Vec::with_capacity(rows);
    for (i, &b) in bands.iter().enumerate() {
        row_colour.extend(std::iter::repeat(i).take(b));
    }
    ColouredComplex::from_fn(k, bands.len() - 1, |v| row_colour[v / cols])
}

/// Full `(d-1)`-skeleton on `0..n` plus each `d`-simplex independently
/// with probability `p`.
pub fn random_complex(n: usize, d: usize, p: f64, seed: u64) -> Result<SimplicialComplex> {
    if d == 0 || d >= n {
        return Err(Error::InvalidParameter(format!("need 1 <= d <= n - 1 (n = {n}, d = {d})")));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let verts: Vec<usize> = (0..n).collect();
    let base = full_simplex(n - 1).skeleton(d as isize - 1);
    let picked: Vec<Simplex> =
        k_subsets(&verts, d + 1).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Ok(base.union(&SimplicialComplex::closure(picked)))
}

/// Random complex on `0..n` whose facets are random subsets of sizes
/// `1..=max_size`, with every vertex used.
pub fn random_facets(n: usize, facets: usize, max_size: usize, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || max_size == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and max_size >= 1".into()));
    }
    let mut rng = rng(seed);
    let verts: Vec<usize> = (0..n).collect();
    let mut out: Vec<Simplex> = (0..facets)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(n));
            Simplex::new(verts.choose_multiple(&mut rng, size).copied()).unwrap()
        })
        .collect();
    out.extend(verts.iter().map(|&v| Simplex::vertex(v)));
    Ok(SimplicialComplex::closure(out))
}

/// Cover by `parts` members, each a union of facet closures. Every facet is
/// given to one random member and, with probability `1/3`, to a second one;
/// members left empty receive a random facet.
pub fn random_cover(x: &SimplicialComplex, parts: usize, seed: u64) -> Result<Cover> {
    if parts == 0 {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    if x.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let mut rng = rng(seed);
    let facets = x.facets();
    let mut chosen: Vec<Vec<Simplex>> = vec![Vec::new(); parts];
    for f in &facets {
        let a = rng.gen_range(0..parts);
        chosen[a].push(f.clone());
        if parts > 1 && rng.gen_bool(1.0 / 3.0) {
            let b = (a + rng.gen_range(1..parts)) % parts;
            chosen[b].push(f.clone());
        }
    }
    for part in chosen.iter_mut().filter(|p| p.is_empty()) {
        part.push(facets.choose(&mut rng).unwrap().clone());
    }
    let members = chosen.into_iter().map(SimplicialComplex::closure).collect();
    Cover::new(x.clone(), members)
}

/// Cover by `parts` members: vertices are dealt into parts at random (each
/// part nonempty) and a member is the union of the closed stars of its
/// vertices. Needs at least `parts` vertices.
pub fn random_star_cover(x: &SimplicialComplex, parts: usize, seed: u64) -> Result<Cover> {
    let verts = x.vertices();
    if parts == 0 || verts.len() < parts {
        return Err(Error::InvalidParameter(format!(
            "cannot deal {} vertices into {parts} nonempty parts",
            verts.len()
        )));
    }
    let mut rng = rng(seed);
    let mut order = verts.clone();
    order.shuffle(&mut rng);
    let mut owner = vec![0usize; order.len()];
    for (i, slot) in owner.iter_mut().enumerate() {
        *slot = if i < parts { i } else { rng.gen_range(0..parts) };
    }
    let facets = x.facets();
    let members = (0..parts)
        .map(|p| {
            let mine: Vec<usize> = order.iter().zip(&owner).filter(|(_, &o)| o == p).map(|(&v, _)| v).collect();
            SimplicialComplex::closure(facets.iter().filter(|f| mine.iter().any(|&v| f.contains(v))).cloned())
        })
        .collect();
    Cover::new(x.clone(), members)
}

/// Uniform colouring by `0..=m`, re-rolled until every class is nonempty.
pub fn random_colouring(x: &SimplicialComplex, m: usize, seed: u64) -> Result<ColouredComplex> {
    let verts = x.vertices();
    if verts.len() < m + 1 {
        return Err(Error::InvalidParameter(format!(
            "{} vertices cannot carry {} nonempty colours",
            verts.len(),
            m + 1
        )));
    }
    let mut rng = rng(seed);
    loop {
        let colours: Vec<usize> = verts.iter().map(|_| rng.gen_range(0..=m)).collect();
        let mut classes = vec![Vec::new(); m + 1];
        for (&v, &c) in verts.iter().zip(&colours) {
            classes[c].push(v);
        }
        if classes.iter().all(|c| !c.is_empty()) {
            return ColouredComplex::new(x.clone(), classes);
        }
    }
}

/// Random `(m+1)`-partite complex: vertices `0..n` get random nonempty
/// colours, each rainbow vertex set becomes a facet with probability `p`,
/// and every vertex is kept. No edge joins two vertices of one colour.
pub fn random_partite(n: usize, m: usize, p: f64, seed: u64) -> Result<ColouredComplex> {
    if n < m + 1 {
        return Err(Error::InvalidParameter(format!("{n} vertices cannot carry {} colours", m + 1)));
    }
    let points = SimplicialComplex::from_facets((0..n).map(|v| [v]))?;
    let colouring = random_colouring(&points, m, seed)?;
    let mut rng = rng(seed.rotate_left(32));
    let mut facets: Vec<Simplex> = (0..n).map(Simplex::vertex).collect();
    let mut pick = vec![0usize; m + 1];
    loop {
        let s = Simplex::new((0..=m).map(|i| colouring.class(i)[pick[i]])).unwrap();
        if rng.gen_bool(p) {
            facets.push(s);
        }
        // odometer over the product of the classes
        let Some(i) = (0..=m).find(|&i| pick[i] + 1 < colouring.class(i).len()) else {
            break;
        };
        pick[i] += 1;
        for slot in pick.iter_mut().take(i) {
            *slot = 0;
        }
    }
    ColouredComplex::new(SimplicialComplex::closure(facets), colouring.classes().to_vec())
}

/// Named generators, as accepted by the command line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    SimplexBoundary { m: usize },
    Torus7,
    Rp2,
    Octahedron,
    BandedTorus { rows: usize, cols: usize, bands: Vec<usize> },
    RandomComplex { n: usize, d: usize, p: f64, seed: u64 },
    RandomColouring { n: usize, d: usize, p: f64, m: usize, seed: u64 },
}

/// Output of a generator: a complex and optional colour classes.
pub struct Generated {
    pub complex: SimplicialComplex,
    pub colours: Option<ColouredComplex>,
}

impl GeneratorSpec {
    pub fn name(&self) -> String {
        match self {
            GeneratorSpec::SimplexBoundary { m } => format!("simplex_boundary_{m}"),
            GeneratorSpec::Torus7 => "torus7".into(),
            GeneratorSpec::Rp2 => "rp2_6".into(),
            GeneratorSpec::Octahedron => "octahedron".into(),
            GeneratorSpec::BandedTorus { rows, cols, .. } => format!("banded_torus_{rows}x{cols}"),
            GeneratorSpec::RandomComplex { n, d, seed, .. } => format!("random_{n}_{d}_{seed}"),
            GeneratorSpec::RandomColouring { n, d, m, seed, .. } => {
                format!("random_coloured_{n}_{d}_{m}_{seed}")
            }
        }
    }

    pub fn generate(&self) -> Result<Generated> {
        let plain = |complex| Ok(Generated { complex, colours: None });
        let coloured = |k: ColouredComplex| Ok(Generated { complex: k.complex().clone(), colours: Some(k) });
        match self {
            GeneratorSpec::SimplexBoundary { m } => plain(simplex_boundary(*m)?),
            GeneratorSpec::Torus7 => plain(torus7()),
            GeneratorSpec::Rp2 => plain(rp2_6()),
            GeneratorSpec::Octahedron => coloured(octahedron()),
            GeneratorSpec::BandedTorus { rows, cols, bands } => coloured(banded_torus(*rows, *cols, bands)?),
            GeneratorSpec::RandomComplex { n, d, p, seed } => plain(random_complex(*n, *d, *p, *seed)?),
            GeneratorSpec::RandomColouring { n, d, p, m, seed } => {
                let x = random_complex(*n, *d, *p, *seed)?;
                coloured(random_colouring(&x, *m, seed.wrapping_add(1))?)
            }
        }
    }
}
