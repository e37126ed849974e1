//! Constructive procedures: killing low homology by attaching simplices,
//! carrier-guided chain maps, the subdivision chain map and the `A_i`
//! subcomplexes of `sd K`.

use std::collections::{BTreeMap, HashMap};

use crate::chain::Chain;
use crate::coloured::ColouredComplex;
use crate::complex::{Simplex, SimplicialComplex, Subdivision};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{fill, reduced_betti, BettiVector};

/// Result of [`kill_homology`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Killed {
    pub complex: SimplicialComplex,
    /// `d`-simplices attached after the `(d-1)`-skeleton, in order.
    pub added: Vec<Simplex>,
    pub before: BettiVector,
    pub after: BettiVector,
}

/// Attaches the full `(d-1)`-skeleton of the simplex on `V(K)`, then every
/// `d`-simplex on `V(K)` (lexicographic order) whose boundary does not
/// already bound. Both postconditions are checked before returning.
pub fn kill_homology(k: &SimplicialComplex, d: usize, field: FieldSpec) -> Result<Killed> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let verts = k.vertices();
    let full = Simplex::new(verts.iter().copied())?;
    let skeleton = SimplicialComplex::closure([full]).skeleton(d as isize - 1);
    let mut cur = k.union(&skeleton);

    let mut added = Vec::new();
    for cand in k_subsets(&verts, d + 1) {
        if cur.contains(&cand) {
            continue;
        }
        let z = Chain::simplex(field, cand.clone()).boundary();
        if fill(&cur, &z, field)?.is_none() {
            cur = cur.union(&SimplicialComplex::closure([cand.clone()]));
            added.push(cand);
        }
    }

    let before = reduced_betti(k, field);
    let after = reduced_betti(&cur, field);
    let top = before.top_degree().max(after.top_degree());
    for i in -1..=top {
        let ok = if i < d as isize {
            after.get(i) == 0
        } else {
            after.get(i) == before.get(i)
        };
        if !ok {
            return Err(Error::TheoremViolation(format!(
                "attaching simplices left b{i} = {} (was {}) for d = {d} over {field}",
                after.get(i),
                before.get(i)
            )));
        }
    }
    Ok(Killed { complex: cur, added, before, after })
}

/// All `k`-element subsets of a sorted vertex list, lexicographically.
pub(crate) fn k_subsets(verts: &[usize], k: usize) -> Vec<Simplex> {
    let n = verts.len();
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Simplex::new(idx.iter().map(|&i| verts[i])).unwrap());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A monotone assignment of nonempty target subcomplexes to the simplices of
/// a domain complex.
#[derive(Clone, Debug)]
pub struct CarrierAssignment {
    domain: SimplicialComplex,
    assign: HashMap<Simplex, SimplicialComplex>,
}

impl CarrierAssignment {
    pub fn new<F>(domain: SimplicialComplex, carrier: F) -> Result<Self>
    where
        F: Fn(&Simplex) -> SimplicialComplex,
    {
        let assign: HashMap<Simplex, SimplicialComplex> =
            domain.iter().map(|s| (s.clone(), carrier(s))).collect();
        for s in domain.iter() {
            let a = &assign[s];
            if a.is_empty() {
                return Err(Error::CarrierNotAcyclic { simplex: s.clone(), degree: -1 });
            }
            if s.facets().any(|(_, f)| !assign[&f].is_subcomplex_of(a)) {
                return Err(Error::CarrierNotMonotone(s.clone()));
            }
        }
        Ok(CarrierAssignment { domain, assign })
    }

    pub fn domain(&self) -> &SimplicialComplex {
        &self.domain
    }

    pub fn carrier(&self, s: &Simplex) -> Option<&SimplicialComplex> {
        self.assign.get(s)
    }
}

/// A degree-0 chain map given by its values on domain simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    field: FieldSpec,
    images: BTreeMap<Simplex, Chain>,
}

impl ChainMap {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn image(&self, s: &Simplex) -> Option<&Chain> {
        self.images.get(s)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Simplex, &Chain)> {
        self.images.iter()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Linear extension; `None` if some simplex of `c` has no image.
    pub fn apply(&self, c: &Chain) -> Option<Chain> {
        let mut out = Chain::zero(self.field, c.dim());
        for (s, x) in c.terms() {
            out.add_scaled(self.images.get(s)?, x);
        }
        Some(out)
    }

    /// `∂f(σ) = f(∂σ)` on every mapped simplex of positive dimension.
    pub fn commutes_with_boundary(&self) -> bool {
        self.images.iter().filter(|(s, _)| s.dim() > 0).all(|(s, img)| {
            let bs = Chain::simplex(self.field, s.clone()).boundary();
            self.apply(&bs).is_some_and(|fb| fb == img.boundary())
        })
    }

    /// Every vertex maps to a 0-chain with coefficient sum 1.
    pub fn preserves_augmentation(&self) -> bool {
        self.images
            .iter()
            .filter(|(s, _)| s.dim() == 0)
            .all(|(_, img)| img.dim() == 0 && self.field.is_one(&img.augmentation()))
    }
}

/// Inductive construction: a vertex goes to the least vertex of its
/// carrier; a simplex `σ` of dimension `s ≥ 1` goes to a filling of
/// `f(∂σ)` inside its carrier, which requires `β̃_{s-1}(carrier) = 0`.
pub fn build_chain_map(
    carrier: &CarrierAssignment,
    field: FieldSpec,
    up_to_dim: usize,
) -> Result<ChainMap> {
    let mut map = ChainMap { field, images: BTreeMap::new() };
    let mut betti_cache: HashMap<&SimplicialComplex, BettiVector> = HashMap::new();
    let top = carrier.domain.dim().min(up_to_dim as isize);
    for s in 0..=top {
        let s = s as usize;
        for sigma in carrier.domain.simplices(s) {
            let target = &carrier.assign[sigma];
            if s == 0 {
                let v = target.vertices()[0];
                map.images.insert(sigma.clone(), Chain::simplex(field, Simplex::vertex(v)));
                continue;
            }
            let b = betti_cache
                .entry(target)
                .or_insert_with(|| reduced_betti(target, field));
            if !b.vanishes(s as isize - 1) {
                return Err(Error::CarrierNotAcyclic { simplex: sigma.clone(), degree: s as isize - 1 });
            }
            let bs = Chain::simplex(field, sigma.clone()).boundary();
            let z = map.apply(&bs).expect("faces are mapped first");
            let c = fill(target, &z, field)?.ok_or_else(|| Error::CarrierNotAcyclic {
                simplex: sigma.clone(),
                degree: s as isize - 1,
            })?;
            map.images.insert(sigma.clone(), c);
        }
    }
    Ok(map)
}

/// The subdivision chain map `X → sd X`: each simplex goes to the signed sum
/// of the top simplices of its subdivision.
pub fn sd_chain_map(x: &SimplicialComplex, field: FieldSpec) -> Result<(Subdivision, ChainMap)> {
    let sd = x.barycentric_subdivision()?;
    let mut images: BTreeMap<Simplex, Chain> = BTreeMap::new();
    for d in 0..=x.dim() as usize {
        for sigma in x.simplices(d) {
            let b = sd.barycentre(sigma).expect("every simplex has a barycentre");
            let img = if d == 0 {
                Chain::simplex(field, Simplex::vertex(b))
            } else {
                let bs = Chain::simplex(field, sigma.clone()).boundary();
                let mut inner = Chain::zero(field, d as isize - 1);
                for (face, coeff) in bs.terms() {
                    inner.add_scaled(&images[face], coeff);
                }
                cone_first(&inner, b)
            };
            images.insert(sigma.clone(), img);
        }
    }
    Ok((sd, ChainMap { field, images }))
}

/// `b * c`: prepends `b` to every simplex, re-sorting with the permutation
/// sign. `b` must not occur in the support.
fn cone_first(c: &Chain, b: usize) -> Chain {
    let f = c.field();
    let mut out = Chain::zero(f, c.dim() + 1);
    for (s, x) in c.terms() {
        let below = s.vertices().iter().filter(|&&v| v < b).count();
        let joined = s.join_vertex(b).expect("apex not in the simplex");
        let coeff = if below % 2 == 0 { x.clone() } else { f.neg(x) };
        out.add_term(joined, &coeff);
    }
    out
}

/// `A_i ⊆ sd K`: induced by the barycentres of simplices meeting `V_i`.
pub fn build_ai(k: &ColouredComplex, i: usize) -> Result<SimplicialComplex> {
    let sd = k.complex().barycentric_subdivision()?;
    build_ai_in(k, &sd, i)
}

/// As [`build_ai`], reusing a subdivision of `k.complex()`.
pub fn build_ai_in(k: &ColouredComplex, sd: &Subdivision, i: usize) -> Result<SimplicialComplex> {
    if i >= k.num_colours() {
        return Err(Error::InvalidParameter(format!("colour {i} > m = {}", k.m())));
    }
    if k.class(i).is_empty() {
        return Err(Error::EmptyColour(i));
    }
    let bit = 1u64 << i;
    Ok(sd.induced_by_sources(|s| k.colour_mask(s) & bit != 0))
}
