//! Sperner and Meshulam type checkers on coloured complexes.
//!
//! Every checker recomputes both the hypotheses and the conclusion. A report
//! whose hypotheses pass while the conclusion fails carries
//! [`Verdict::TheoremViolation`].

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::chain::Chain;
use crate::coloured::{mask_below, members, ColouredComplex};
use crate::complex::{Simplex, SimplicialComplex};
use crate::constructive::{build_chain_map, CarrierAssignment};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{fill, fundamental_class, reduced_betti, BettiVector};
use crate::pseudomanifold::{adjacency_pairs, components, is_pseudomanifold};
use crate::report::Verdict;

/// Subsets `S` of `{0..m}` are enumerated as masks, so `m + 1` is capped.
pub const MAX_SUBSET_COLOURS: usize = 16;

/// Which subcomplex a condition is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColourCondition {
    /// `K_S`.
    Induced,
    /// `K_{I∖S}`.
    Complement,
    /// `K̃_S`.
    Tilde,
    /// The whole complex; `colours` lists all of `I`.
    Global,
}

/// `β̃_degree` of the subcomplex named by `(condition, colours)` must vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourEntry {
    pub colours: Vec<usize>,
    pub condition: ColourCondition,
    pub degree: isize,
    pub observed: usize,
    pub pass: bool,
}

/// Betti numbers of `K_S` and `K̃_S`, memoised per mask.
struct ColourHomology<'a> {
    k: &'a ColouredComplex,
    field: FieldSpec,
    induced: HashMap<u64, BettiVector>,
    tilde: HashMap<u64, BettiVector>,
}

impl<'a> ColourHomology<'a> {
    fn new(k: &'a ColouredComplex, field: FieldSpec) -> Result<Self> {
        if k.num_colours() > MAX_SUBSET_COLOURS {
            return Err(Error::InvalidParameter(format!(
                "{} colours, at most {MAX_SUBSET_COLOURS} supported by the subset checkers",
                k.num_colours()
            )));
        }
        Ok(ColourHomology { k, field, induced: HashMap::new(), tilde: HashMap::new() })
    }

    fn induced(&mut self, mask: u64) -> &BettiVector {
        let (k, f) = (self.k, self.field);
        self.induced.entry(mask).or_insert_with(|| reduced_betti(&k.sub_by_mask(mask), f))
    }

    fn tilde(&mut self, mask: u64) -> &BettiVector {
        let (k, f) = (self.k, self.field);
        self.tilde.entry(mask).or_insert_with(|| reduced_betti(&k.tilde_by_mask(mask), f))
    }

    fn entry(&mut self, colours: u64, condition: ColourCondition, degree: isize) -> ColourEntry {
        let full = self.k.full_mask();
        let observed = match condition {
            ColourCondition::Induced => self.induced(colours).get(degree),
            ColourCondition::Complement => self.induced(full & !colours).get(degree),
            ColourCondition::Tilde => self.tilde(colours).get(degree),
            ColourCondition::Global => self.induced(full).get(degree),
        };
        ColourEntry { colours: members(colours), condition, degree, observed, pass: observed == 0 }
    }

    /// `β̃_{|S|-2}(K_S) = 0` for every nonempty `S`.
    fn meshulam_entries(&mut self) -> Vec<ColourEntry> {
        let full = self.k.full_mask();
        (1..=full)
            .map(|s| self.entry(s, ColourCondition::Induced, s.count_ones() as isize - 2))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshulamReport {
    pub field: FieldSpec,
    pub m: usize,
    pub entries: Vec<ColourEntry>,
    pub rainbow: Vec<Simplex>,
    pub verdict: Verdict,
}

impl MeshulamReport {
    pub fn hypotheses_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// If `β̃_{|S|-2}(K_S) = 0` for every nonempty `S ⊆ {0..m}`, a rainbow
/// simplex exists.
pub fn check_meshulam(k: &ColouredComplex, field: FieldSpec) -> Result<MeshulamReport> {
    let entries = ColourHomology::new(k, field)?.meshulam_entries();
    let rainbow = k.rainbow_simplices();
    let pass = entries.iter().all(|e| e.pass);
    Ok(MeshulamReport {
        field,
        m: k.m(),
        verdict: Verdict::from_parts(pass, !rainbow.is_empty()),
        entries,
        rainbow,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemixedReport {
    pub field: FieldSpec,
    pub m: usize,
    pub k: isize,
    pub entries: Vec<ColourEntry>,
    pub rainbow_count: usize,
    pub verdict: Verdict,
}

impl RemixedReport {
    pub fn hypotheses_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// With `β̃_{m-1}(K) = 0`, `β̃_{k-|S|}(K_{I∖S}) = 0` for `1 ≤ |S| ≤ k+1` and
/// `β̃_{|S|-2}(K̃_S) = 0` for `k+2 ≤ |S| ≤ m`, a rainbow simplex exists.
pub fn check_remixed(kc: &ColouredComplex, k: isize, field: FieldSpec) -> Result<RemixedReport> {
    let m = kc.m() as isize;
    if !(-1 <= k && k <= m - 1) {
        return Err(Error::InvalidParameter(format!("need -1 <= k <= m - 1 (k = {k}, m = {m})")));
    }
    let mut h = ColourHomology::new(kc, field)?;
    let full = kc.full_mask();
    let mut entries = vec![h.entry(full, ColourCondition::Global, m - 1)];
    for s in 1..full {
        let size = s.count_ones() as isize;
        if size <= k + 1 {
            entries.push(h.entry(s, ColourCondition::Complement, k - size));
        } else {
            entries.push(h.entry(s, ColourCondition::Tilde, size - 2));
        }
    }
    let rainbow_count = kc.rainbow_simplices().len();
    let pass = entries.iter().all(|e| e.pass);
    Ok(RemixedReport {
        field,
        m: kc.m(),
        k,
        entries,
        rainbow_count,
        verdict: Verdict::from_parts(pass, rainbow_count > 0),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsolatedReport {
    pub field: FieldSpec,
    pub vertex: usize,
    pub entries: Vec<ColourEntry>,
    pub rainbow_containing: Vec<Simplex>,
    pub verdict: Verdict,
}

/// Whether `v` has no neighbour of its own colour.
pub fn is_isolated_on_colour(k: &ColouredComplex, v: usize) -> Result<bool> {
    let c = k.colour(v).ok_or(Error::UnknownVertex(v))?;
    Ok(k
        .complex()
        .simplices(1)
        .iter()
        .filter(|e| e.contains(v))
        .all(|e| e.vertices().iter().all(|&w| w == v || k.colour(w) != Some(c))))
}

/// For `v` isolated on its colour, the Meshulam hypotheses give a rainbow
/// simplex through `v`.
pub fn check_isolated(k: &ColouredComplex, v: usize, field: FieldSpec) -> Result<IsolatedReport> {
    if !is_isolated_on_colour(k, v)? {
        return Err(Error::Precondition(format!("vertex {v} has a neighbour of its own colour")));
    }
    let entries = ColourHomology::new(k, field)?.meshulam_entries();
    let rainbow_containing: Vec<Simplex> =
        k.rainbow_simplices().into_iter().filter(|s| s.contains(v)).collect();
    let pass = entries.iter().all(|e| e.pass);
    Ok(IsolatedReport {
        field,
        vertex: v,
        verdict: Verdict::from_parts(pass, !rainbow_containing.is_empty()),
        entries,
        rainbow_containing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscreteReport {
    pub field: FieldSpec,
    pub entries: Vec<ColourEntry>,
    pub simplices_checked: usize,
    /// Simplices contained in no rainbow simplex.
    pub not_extending: Vec<Simplex>,
    pub verdict: Verdict,
}

/// Whether every colour class induces a complex of dimension at most 0.
pub fn colour_classes_discrete(k: &ColouredComplex) -> bool {
    k.complex().simplices(1).iter().all(|e| k.is_colourful(e))
}

/// With every `K_{{i}}` 0-dimensional and the Meshulam hypotheses, every
/// simplex lies in a rainbow simplex.
pub fn check_discrete(k: &ColouredComplex, field: FieldSpec) -> Result<DiscreteReport> {
    if !colour_classes_discrete(k) {
        let e = k.complex().simplices(1).iter().find(|e| !k.is_colourful(e)).unwrap();
        return Err(Error::Precondition(format!("edge {e} joins two vertices of one colour")));
    }
    let entries = ColourHomology::new(k, field)?.meshulam_entries();
    let rainbow = k.rainbow_simplices();
    let not_extending: Vec<Simplex> = k
        .complex()
        .iter()
        .filter(|s| !rainbow.iter().any(|r| s.is_face_of(r)))
        .cloned()
        .collect();
    let pass = entries.iter().all(|e| e.pass);
    Ok(DiscreteReport {
        field,
        simplices_checked: k.complex().num_simplices(),
        verdict: Verdict::from_parts(pass, not_extending.is_empty()),
        entries,
        not_extending,
    })
}

/// The colour map as a chain map `C(K) → C(Δ)`: a simplex with repeated
/// colours goes to zero, otherwise to its colour simplex with the sign of
/// the sorting permutation.
pub fn lambda_sharp(k: &ColouredComplex, c: &Chain) -> Result<Chain> {
    let f = c.field();
    let mut out = Chain::zero(f, c.dim());
    for (s, x) in c.terms() {
        let colours: Vec<usize> = s
            .vertices()
            .iter()
            .map(|&v| k.colour(v).ok_or(Error::UnknownVertex(v)))
            .collect::<Result<_>>()?;
        let mut sorted = colours.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != colours.len() {
            continue;
        }
        let inversions = (0..colours.len())
            .flat_map(|i| (i + 1..colours.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| colours[i] > colours[j])
            .count();
        let coeff = if inversions % 2 == 0 { x.clone() } else { f.neg(x) };
        out.add_term(Simplex::new(sorted)?, &coeff);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountLemmaReport {
    /// Vertices of the supporting complex of `∂c`.
    pub n: usize,
    /// Dimension of `c`.
    pub s: usize,
    pub support: usize,
    pub bound_holds: bool,
    /// Connected components of the facet-adjacency graph on the support of
    /// `c`, as indices into the lexicographic support order.
    pub components: Vec<Vec<usize>>,
    /// Components whose restriction has nonzero boundary.
    pub boundary_components: Vec<usize>,
}

/// `|supp c| ≥ n - s` when the supporting complex of `∂c` is a
/// pseudomanifold on `n` vertices and `s = dim c`.
pub fn count_lemma_check(c: &Chain) -> Result<CountLemmaReport> {
    if c.dim() < 1 {
        return Err(Error::Precondition("chain must have dimension at least 1".into()));
    }
    let bd = c.boundary();
    let supp = bd.supporting_complex();
    if supp.is_empty() {
        return Err(Error::Precondition("boundary of the chain is zero".into()));
    }
    let pm = is_pseudomanifold(&supp)?;
    if !pm.is_pseudomanifold() {
        return Err(Error::NotPseudomanifold(format!("supporting complex of the boundary: {pm:?}")));
    }
    let s = c.dim() as usize;
    let n = supp.num_vertices();
    let simplices: Vec<Simplex> = c.support().cloned().collect();
    let comps = components(simplices.len(), &adjacency_pairs(&simplices));
    let boundary_components = comps
        .iter()
        .enumerate()
        .filter(|(_, comp)| {
            let part = Chain::from_terms(
                c.field(),
                c.dim(),
                comp.iter().map(|&i| (simplices[i].clone(), c.coefficient(&simplices[i]))),
            )
            .expect("terms of a valid chain");
            !part.boundary().is_zero()
        })
        .map(|(i, _)| i)
        .collect();
    let support = simplices.len();
    Ok(CountLemmaReport {
        n,
        s,
        support,
        bound_holds: support + s >= n,
        components: comps,
        boundary_components,
    })
}

/// Hypothesis on one simplex `σ` of `M`: `β̃_{|σ|-2}(K[⋃_{i∈σ} V_i]) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopalEntry {
    pub simplex: Simplex,
    pub degree: isize,
    pub observed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub chain_map_commutes: bool,
    pub augmentation_preserved: bool,
    /// `λ♯ ∘ f♯` is the inclusion on every simplex of `M`.
    pub lambda_f_identity: bool,
    /// Support size of `c'` with `∂c' = f♯(z)`.
    pub filling_support: usize,
    /// Colourful simplices in the support of `c'`.
    pub filling_colourful: usize,
    /// `∂λ♯(c') = z`.
    pub boundary_matches: bool,
    pub count: CountLemmaReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolytopalReport {
    pub field: FieldSpec,
    pub m: usize,
    pub d: usize,
    pub entries: Vec<PolytopalEntry>,
    /// `β̃_d(K)`, which must vanish.
    pub top_betti: usize,
    /// Colourful `(d+1)`-simplices of `K`, by enumeration.
    pub colourful_count: usize,
    pub bound: usize,
    /// Absent when the hypotheses fail.
    pub pipeline: Option<PipelineReport>,
    pub verdict: Verdict,
}

impl PolytopalReport {
    pub fn hypotheses_pass(&self) -> bool {
        self.top_betti == 0 && self.entries.iter().all(|e| e.pass)
    }
}

/// Polytopal generalisation: `M` is a `d`-pseudomanifold on the vertex set
/// `{0..m}` with a fundamental class over the field. Under the homological
/// hypotheses `K` has at least `m - d` colourful `(d+1)`-simplices. Both the
/// enumeration count and the chain-level construction are reported.
pub fn polytopal_meshulam(
    k: &ColouredComplex,
    mc: &SimplicialComplex,
    field: FieldSpec,
) -> Result<PolytopalReport> {
    let m = k.m();
    let expected: Vec<usize> = (0..=m).collect();
    if mc.vertices() != expected {
        return Err(Error::Precondition(format!(
            "vertex set of M must be {{0..{m}}}, got {:?}",
            mc.vertices()
        )));
    }
    let pm = is_pseudomanifold(mc)?;
    if !pm.is_pseudomanifold() {
        return Err(Error::NotPseudomanifold(format!("{pm:?}")));
    }
    let d = pm.dimension as usize;
    let z = fundamental_class(mc, field)?.ok_or_else(|| {
        Error::Precondition(format!("M has no fundamental class over {field}"))
    })?;

    let carrier_of = |sigma: &Simplex| -> SimplicialComplex {
        let verts: Vec<usize> =
            sigma.vertices().iter().flat_map(|&i| k.class(i).iter().copied()).collect();
        k.complex().induced(&verts)
    };
    let mut cache: HashMap<Vec<usize>, BettiVector> = HashMap::new();
    let entries: Vec<PolytopalEntry> = mc
        .iter()
        .map(|sigma| {
            let degree = sigma.len() as isize - 2;
            let b = cache
                .entry(sigma.vertices().to_vec())
                .or_insert_with(|| reduced_betti(&carrier_of(sigma), field));
            let observed = b.get(degree);
            PolytopalEntry { simplex: sigma.clone(), degree, observed, pass: observed == 0 }
        })
        .collect();
    let top_betti = reduced_betti(k.complex(), field).get(d as isize);
    let colourful_count = k.colourful_simplices(d + 1).len();
    let bound = m - d;
    let hyp = top_betti == 0 && entries.iter().all(|e| e.pass);

    let pipeline = if hyp { Some(pipeline(k, mc, &z, d, field, &carrier_of)?) } else { None };
    let concl = colourful_count >= bound
        && pipeline.as_ref().map_or(true, |p| {
            p.chain_map_commutes
                && p.augmentation_preserved
                && p.lambda_f_identity
                && p.boundary_matches
                && p.count.bound_holds
                && p.count.support >= bound
                && p.filling_colourful >= p.count.support
        });
    Ok(PolytopalReport {
        field,
        m,
        d,
        entries,
        top_betti,
        colourful_count,
        bound,
        pipeline,
        verdict: Verdict::from_parts(hyp, concl),
    })
}

fn pipeline(
    k: &ColouredComplex,
    mc: &SimplicialComplex,
    z: &Chain,
    d: usize,
    field: FieldSpec,
    carrier_of: &dyn Fn(&Simplex) -> SimplicialComplex,
) -> Result<PipelineReport> {
    let carrier = CarrierAssignment::new(mc.clone(), carrier_of)?;
    let f = build_chain_map(&carrier, field, d)?;
    let lambda_f_identity = f.images().all(|(sigma, img)| {
        lambda_sharp(k, img).is_ok_and(|l| l == Chain::simplex(field, sigma.clone()))
    });
    let fz = f.apply(z).expect("every facet of M is mapped");
    let c_prime = fill(k.complex(), &fz, field)?.ok_or_else(|| {
        Error::TheoremViolation("f(z) does not bound although the top homology vanishes".into())
    })?;
    let c = lambda_sharp(k, &c_prime)?;
    let colour_types: BTreeSet<Vec<usize>> = c_prime
        .support()
        .filter(|s| k.is_colourful(s))
        .map(|s| k.colours_of(s))
        .collect();
    let filling_colourful = c_prime.support().filter(|s| k.is_colourful(s)).count();
    let boundary_matches = c.boundary() == *z;
    let count = count_lemma_check(&c)?;
    debug_assert!(c.support().all(|s| colour_types.contains(s.vertices())));
    Ok(PipelineReport {
        chain_map_commutes: f.commutes_with_boundary(),
        augmentation_preserved: f.preserves_augmentation(),
        lambda_f_identity,
        filling_support: c_prime.support_len(),
        filling_colourful,
        boundary_matches,
        count,
    })
}

/// Colour masks as index lists, for callers that enumerate colour subsets.
pub fn colour_subsets(k: &ColouredComplex) -> impl Iterator<Item = Vec<usize>> {
    (1..=mask_below(k.num_colours())).map(members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{octahedron, simplex_boundary};

    fn cx(f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.iter().copied()).unwrap()
    }

    fn path() -> ColouredComplex {
        ColouredComplex::new(cx(&[&[0, 1], &[1, 2]]), vec![vec![0, 2], vec![1]]).unwrap()
    }

    fn rainbow_triangle() -> ColouredComplex {
        ColouredComplex::new(cx(&[&[0, 1, 2]]), vec![vec![0], vec![1], vec![2]]).unwrap()
    }

    #[test]
    fn meshulam_examples() {
        let r = check_meshulam(&path(), FieldSpec::F2).unwrap();
        assert!(r.hypotheses_pass());
        assert_eq!(r.rainbow.len(), 2);
        assert_eq!(r.verdict, Verdict::Holds);

        let pts = ColouredComplex::new(cx(&[&[0], &[1]]), vec![vec![0], vec![1]]).unwrap();
        let r = check_meshulam(&pts, FieldSpec::F2).unwrap();
        let fails: Vec<_> = r.entries.iter().filter(|e| !e.pass).collect();
        assert_eq!(fails.len(), 1);
        assert_eq!((fails[0].colours.clone(), fails[0].degree, fails[0].observed), (vec![0, 1], 0, 1));
        assert!(r.rainbow.is_empty());
        assert_eq!(r.verdict, Verdict::HypothesesFailed);

        let r = check_meshulam(&rainbow_triangle(), FieldSpec::Q).unwrap();
        assert_eq!((r.verdict, r.rainbow.len()), (Verdict::Holds, 1));
    }

    /// Normalises a condition to `(subcomplex kind, colour mask, degree)`.
    fn normalise(e: &ColourEntry, m: usize) -> (bool, Vec<usize>, isize) {
        let all: Vec<usize> = (0..=m).collect();
        match e.condition {
            ColourCondition::Induced => (true, e.colours.clone(), e.degree),
            ColourCondition::Global => (true, all, e.degree),
            ColourCondition::Complement => {
                (true, all.into_iter().filter(|c| !e.colours.contains(c)).collect(), e.degree)
            }
            ColourCondition::Tilde => (false, e.colours.clone(), e.degree),
        }
    }

    #[test]
    fn remixed_top_k_matches_meshulam() {
        for k in [path(), rainbow_triangle(), octahedron()] {
            let m = k.m();
            let a: BTreeSet<_> = check_meshulam(&k, FieldSpec::F2)
                .unwrap()
                .entries
                .iter()
                .map(|e| normalise(e, m))
                .collect();
            let b: BTreeSet<_> = check_remixed(&k, m as isize - 1, FieldSpec::F2)
                .unwrap()
                .entries
                .iter()
                .map(|e| normalise(e, m))
                .collect();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn remixed_bottom_k_is_tilde_conditions() {
        let k = octahedron();
        let r = check_remixed(&k, -1, FieldSpec::F2).unwrap();
        assert_eq!(r.entries[0].condition, ColourCondition::Global);
        assert!(r.entries[1..].iter().all(|e| e.condition == ColourCondition::Tilde));
        let sizes: BTreeSet<usize> = r.entries[1..].iter().map(|e| e.colours.len()).collect();
        assert_eq!(sizes, BTreeSet::from([1, 2]));
        assert!(check_remixed(&k, 2, FieldSpec::F2).is_err());
        assert!(check_remixed(&k, -2, FieldSpec::F2).is_err());
    }

    #[test]
    fn isolated_examples() {
        let r = check_isolated(&path(), 1, FieldSpec::F2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.rainbow_containing.len(), 2);
        for v in 0..3 {
            let r = check_isolated(&rainbow_triangle(), v, FieldSpec::Q).unwrap();
            assert_eq!(r.rainbow_containing, vec![s(&[0, 1, 2])]);
        }
        let same = ColouredComplex::new(cx(&[&[0, 1], &[1, 2]]), vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(check_isolated(&same, 0, FieldSpec::F2), Err(Error::Precondition(_))));
        assert_eq!(check_isolated(&same, 9, FieldSpec::F2).unwrap_err(), Error::UnknownVertex(9));
    }

    #[test]
    fn discrete_examples() {
        let r = check_discrete(&rainbow_triangle(), FieldSpec::F2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.simplices_checked, 7);
        let r = check_discrete(&octahedron(), FieldSpec::Q).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        let square = ColouredComplex::new(
            cx(&[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]),
            vec![vec![0, 2], vec![1, 3]],
        )
        .unwrap();
        let r = check_discrete(&square, FieldSpec::F2).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert!(r.not_extending.is_empty());
        let bad = ColouredComplex::new(cx(&[&[0, 1]]), vec![vec![0, 1]]).unwrap();
        assert!(matches!(check_discrete(&bad, FieldSpec::F2), Err(Error::Precondition(_))));
    }

    #[test]
    fn lambda_sharp_signs() {
        let k = ColouredComplex::new(cx(&[&[0, 1, 2]]), vec![vec![2], vec![0, 1], vec![]]).unwrap();
        let f = FieldSpec::Q;
        // [0,2] has colours (1,0): one inversion
        let c = lambda_sharp(&k, &Chain::simplex(f, s(&[0, 2]))).unwrap();
        assert_eq!(c, Chain::from_int_terms(f, 1, [(s(&[0, 1]), -1)]).unwrap());
        assert!(lambda_sharp(&k, &Chain::simplex(f, s(&[0, 1]))).unwrap().is_zero());
    }

    #[test]
    fn count_lemma_examples() {
        let f = FieldSpec::Q;
        let r = count_lemma_check(&Chain::simplex(f, s(&[0, 1, 2]))).unwrap();
        assert_eq!((r.n, r.s, r.support, r.bound_holds), (3, 2, 1, true));
        assert_eq!(r.boundary_components, vec![0]);

        // cone over the square 1-2-3-4 with apex 0
        let cone = Chain::from_int_terms(
            f,
            2,
            [(s(&[0, 1, 2]), 1), (s(&[0, 2, 3]), 1), (s(&[0, 3, 4]), 1), (s(&[0, 1, 4]), -1)],
        )
        .unwrap();
        let r = count_lemma_check(&cone).unwrap();
        assert_eq!((r.n, r.s, r.support, r.bound_holds), (4, 2, 4, true));
        assert_eq!(r.components.len(), 1);

        let closed = Chain::simplex(f, s(&[0, 1, 2, 3])).boundary();
        assert!(count_lemma_check(&closed).is_err());
    }

    #[test]
    fn polytopal_octahedron() {
        let k = octahedron();
        let m = simplex_boundary(2).unwrap();
        let r = polytopal_meshulam(&k, &m, FieldSpec::F2).unwrap();
        assert!(r.hypotheses_pass());
        assert_eq!((r.d, r.bound, r.colourful_count), (1, 1, 8));
        let p = r.pipeline.as_ref().unwrap();
        assert!(p.lambda_f_identity && p.chain_map_commutes && p.boundary_matches);
        assert!(p.count.support >= 1);
        assert_eq!(r.verdict, Verdict::Holds);
        let rq = polytopal_meshulam(&k, &m, FieldSpec::Q).unwrap();
        assert_eq!(rq.verdict, Verdict::Holds);
    }

    #[test]
    fn polytopal_preconditions() {
        let k = octahedron();
        let wrong_vertices = cx(&[&[0, 1], &[1, 5], &[0, 5]]);
        assert!(matches!(polytopal_meshulam(&k, &wrong_vertices, FieldSpec::F2), Err(Error::Precondition(_))));
        let not_pm = cx(&[&[0, 1], &[1, 2]]);
        assert!(matches!(polytopal_meshulam(&k, &not_pm, FieldSpec::F2), Err(Error::NotPseudomanifold(_))));
        // a circle coloured so that its top homology survives
        let circle = ColouredComplex::new(
            cx(&[&[0, 1], &[1, 2], &[0, 2]]),
            vec![vec![0], vec![1], vec![2]],
        )
        .unwrap();
        let r = polytopal_meshulam(&circle, &simplex_boundary(2).unwrap(), FieldSpec::F2).unwrap();
        assert_eq!(r.top_betti, 1);
        assert!(r.pipeline.is_none());
        assert_eq!(r.verdict, Verdict::HypothesesFailed);
    }

    #[test]
    fn polytopal_on_simplex_boundary_reduces_to_rainbow_count() {
        for m in 1..=3 {
            let k = ColouredComplex::new(
                SimplicialComplex::from_facets([0..=m]).unwrap(),
                (0..=m).map(|i| vec![i]).collect(),
            )
            .unwrap();
            let r = polytopal_meshulam(&k, &simplex_boundary(m).unwrap(), FieldSpec::Q).unwrap();
            assert_eq!((r.d, r.bound), (m - 1, 1));
            assert_eq!(r.colourful_count, k.rainbow_simplices().len());
            assert_eq!(r.verdict, Verdict::Holds);
        }
    }
}
