//! Seeded counterexample search: random instances for every checked
//! statement, with a tally of hypothesis-passing runs and any violation.
//!
//! Trial `t` of a run with base seed `s` uses seed `s + t`, so a single
//! failing instance can be replayed from the reported seed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::chain::Chain;
use crate::coloured::ColouredComplex;
use crate::complex::{Simplex, SimplicialComplex};
use crate::constructive::{build_ai_in, kill_homology};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::generators::{
    octahedron, random_colouring, random_complex, random_cover, random_facets, random_partite,
    random_star_cover,
    rng, rp2_6, simplex_boundary, torus7,
};
use crate::homology::{fundamental_class, reduced_betti};
use crate::nerve::{check_union_acyclicity, helly_check, Cover, CoverAnalysis};
use crate::report::Verdict;
use crate::sperner::{
    check_discrete, check_isolated, check_meshulam, check_remixed, colour_classes_discrete,
    count_lemma_check, is_isolated_on_colour, polytopal_meshulam,
};

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    Mixed,
    Helly,
    UnionAcyclicity,
    Killing,
    ColourUnions,
    Meshulam,
    Polytopal,
    Counting,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::Mixed,
        Theorem::Helly,
        Theorem::UnionAcyclicity,
        Theorem::Killing,
        Theorem::ColourUnions,
        Theorem::Meshulam,
        Theorem::Polytopal,
        Theorem::Counting,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::Mixed => "mixed",
            Theorem::Helly => "helly",
            Theorem::UnionAcyclicity => "union-acyclicity",
            Theorem::Killing => "killing",
            Theorem::ColourUnions => "colour-unions",
            Theorem::Meshulam => "meshulam",
            Theorem::Polytopal => "polytopal",
            Theorem::Counting => "counting",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub seed: u64,
    pub detail: String,
}

/// Outcome counts for one statement.
///
/// `checks` counts checker invocations, `passed` those whose hypotheses all
/// held, and `non_vacuous` the passing ones where the conclusion says
/// something: a nonzero Betti number of the nerve, or an asserted rainbow
/// simplex. Statements without hypotheses count every passing check. `strata` splits these counts by parameter regime or checker.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub trials: u64,
    pub checks: u64,
    pub passed: u64,
    pub non_vacuous: u64,
    pub strata: BTreeMap<String, u64>,
    pub violations: Vec<Violation>,
}

impl Tally {
    fn bump(&mut self, key: impl Into<String>) {
        *self.strata.entry(key.into()).or_default() += 1;
    }

    pub fn stratum(&self, key: &str) -> u64 {
        self.strata.get(key).copied().unwrap_or(0)
    }

    fn record(&mut self, seed: u64, verdict: Verdict, what: impl FnOnce() -> String) {
        self.checks += 1;
        match verdict {
            Verdict::Holds => self.passed += 1,
            Verdict::HypothesesFailed => {}
            Verdict::TheoremViolation => self.violations.push(Violation { seed, detail: what() }),
        }
    }

    fn violation(&mut self, seed: u64, detail: String) {
        self.violations.push(Violation { seed, detail });
    }

    pub fn merge(&mut self, other: Tally) {
        self.trials += other.trials;
        self.checks += other.checks;
        self.passed += other.passed;
        self.non_vacuous += other.non_vacuous;
        for (k, v) in other.strata {
            *self.strata.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
    }
}

fn field_of(seed: u64) -> FieldSpec {
    [FieldSpec::F2, FieldSpec::Fp(3), FieldSpec::Q][(seed % 3) as usize]
}

/// Host on at most 9 vertices with a cover of 2 to 5 members. Hosts are
/// random facet families or sparse random complexes; members are unions of
/// facet closures or of closed vertex stars.
pub fn sample_cover(seed: u64) -> Result<Cover> {
    let mut r = rng(seed);
    let n = r.gen_range(4..=9);
    let x = if r.gen_bool(0.5) {
        random_facets(n, r.gen_range(2..=8), r.gen_range(2..=4), seed)?
    } else {
        random_complex(n, r.gen_range(1..=2), r.gen_range(0.0..0.5), seed)?
    };
    let parts = r.gen_range(2..=5);
    if r.gen_bool(0.5) && parts <= n {
        random_star_cover(&x, parts, seed.rotate_left(21))
    } else {
        random_cover(&x, parts, seed.rotate_left(21))
    }
}

/// Coloured complex with `1 ≤ m ≤ 3` on at most `max_vertices` vertices,
/// either partite or a random complex with a random colouring.
pub fn sample_coloured(seed: u64, max_vertices: usize) -> Result<ColouredComplex> {
    let mut r = rng(seed);
    let m = r.gen_range(1..=3usize.min(max_vertices - 1));
    let n = r.gen_range(m + 1..=max_vertices);
    let p = r.gen_range(0.2..=1.0);
    if r.gen_bool(0.5) || n < 3 {
        random_partite(n, m, p, seed)
    } else {
        let d = r.gen_range(1..=m.min(n - 1));
        random_complex(n, d, p, seed).and_then(|x| random_colouring(&x, m, seed.rotate_left(9)))
    }
}

/// Runs every nerve-theorem instance `-1 ≤ k ≤ l < |Γ|` on one cover. Strata:
/// `k=-1` and `k=l`, counting non-vacuous passes.
pub fn mixed_trial(cover: &Cover, seed: u64, field: FieldSpec, tally: &mut Tally) -> Result<()> {
    let a = CoverAnalysis::new(cover, field)?;
    let n = cover.len() as isize;
    for l in -1..n {
        for k in -1..=l {
            let r = a.mixed_report(k, l)?;
            tally.record(seed, r.verdict, || format!("mixed k={k} l={l} over {field}: {:?}", r.conclusion));
            if r.verdict == Verdict::Holds && r.conclusion.nerve_betti > 0 {
                tally.non_vacuous += 1;
                if k == -1 {
                    tally.bump("k=-1");
                }
                if k == l {
                    tally.bump("k=l");
                }
                if l >= 1 {
                    tally.bump(format!("k={k},l={l}"));
                }
            }
        }
    }
    Ok(())
}

pub fn helly_trial(cover: &Cover, seed: u64, field: FieldSpec, tally: &mut Tally) -> Result<()> {
    for k in -1..=cover.len() as isize - 2 {
        let r = helly_check(cover, k, field)?;
        tally.record(seed, r.verdict, || format!("helly k={k} over {field}: empty intersection"));
        if r.hypotheses_pass() {
            tally.non_vacuous += 1;
            tally.bump(format!("k={k}"));
        }
    }
    Ok(())
}

pub fn union_acyclicity_trial(seed: u64, tally: &mut Tally) -> Result<()> {
    let mut r = rng(seed);
    let n = r.gen_range(3..=8);
    let x = random_facets(n, r.gen_range(2..=7), r.gen_range(2..=4), seed)?;
    let cover = random_cover(&x, r.gen_range(1..=4), seed.rotate_left(13))?;
    let field = field_of(seed);
    let c = check_union_acyclicity(cover.members(), field)?;
    tally.record(seed, c.verdict, || format!("union acyclicity over {field}: {:?}", c.union_betti));
    if c.hypotheses_pass {
        tally.non_vacuous += 1;
        tally.bump(format!("|σ|={}", cover.len()));
    }
    Ok(())
}

/// Kills homology below `d ∈ {1, 2}` and re-checks the outcome with fresh
/// Betti computations, then checks that a second pass adds nothing.
pub fn killing_trial(seed: u64, tally: &mut Tally) -> Result<()> {
    let mut r = rng(seed);
    let n = r.gen_range(3..=8);
    let x = if r.gen_bool(0.5) {
        random_facets(n, r.gen_range(1..=6), r.gen_range(1..=4), seed)?
    } else {
        random_complex(n, r.gen_range(1..=2.min(n - 1)), r.gen_range(0.0..0.6), seed)?
    };
    let d = r.gen_range(1..=2usize);
    let field = field_of(seed.rotate_left(7));
    tally.checks += 1;
    let killed = match kill_homology(&x, d, field) {
        Ok(k) => k,
        Err(Error::TheoremViolation(msg)) => {
            tally.violation(seed, format!("killing d={d} over {field}: {msg}"));
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    let before = reduced_betti(&x, field);
    let after = reduced_betti(&killed.complex, field);
    let top = before.top_degree().max(after.top_degree()).max(d as isize);
    let low_ok = (-1..d as isize).all(|i| after.vanishes(i));
    let high_ok = (d as isize..=top).all(|i| after.get(i) == before.get(i));
    let sub_ok = x.is_subcomplex_of(&killed.complex);
    let again = kill_homology(&killed.complex, d, field)?;
    let idem = again.added.is_empty() && again.complex == killed.complex;
    if low_ok && high_ok && sub_ok && idem {
        tally.passed += 1;
        tally.non_vacuous += 1;
        tally.bump(format!("d={d}"));
    } else {
        tally.violation(
            seed,
            format!("killing d={d} over {field}: low {low_ok} high {high_ok} sub {sub_ok} idempotent {idem}"),
        );
    }
    Ok(())
}

/// `⋃_{i∈S} A_i` and `K_S` have the same reduced Betti numbers for every
/// nonempty colour set `S`, over `F2` and `Q`.
pub fn colour_unions_trial(seed: u64, tally: &mut Tally) -> Result<()> {
    let k = sample_coloured(seed, 7)?;
    let sd = k.complex().barycentric_subdivision()?;
    let ai: Vec<SimplicialComplex> =
        (0..=k.m()).map(|i| build_ai_in(&k, &sd, i)).collect::<Result<_>>()?;
    for field in [FieldSpec::F2, FieldSpec::Q] {
        for mask in 1u64..(1u64 << k.num_colours()) {
            let s: Vec<usize> = (0..k.num_colours()).filter(|i| mask >> i & 1 == 1).collect();
            let union = s.iter().fold(SimplicialComplex::empty(), |acc, &i| acc.union(&ai[i]));
            let lhs = reduced_betti(&union, field);
            let rhs = reduced_betti(&k.sub_by_colours(&s), field);
            tally.checks += 1;
            if lhs.same_numbers(&rhs) {
                tally.passed += 1;
                tally.non_vacuous += 1;
            } else {
                tally.violation(seed, format!("colour set {s:?} over {field}: {lhs:?} vs {rhs:?}"));
            }
        }
    }
    Ok(())
}

/// All four colouring checkers on one instance; strata are the checker
/// names and count non-vacuous passes.
pub fn meshulam_trial(k: &ColouredComplex, seed: u64, field: FieldSpec, tally: &mut Tally) -> Result<()> {
    let pass = |tally: &mut Tally, name: &str, v: Verdict| {
        if v == Verdict::Holds {
            tally.non_vacuous += 1;
            tally.bump(name);
        }
    };
    let r = check_meshulam(k, field)?;
    tally.record(seed, r.verdict, || format!("meshulam over {field}"));
    pass(tally, "meshulam", r.verdict);
    for kk in -1..k.m() as isize {
        let r = check_remixed(k, kk, field)?;
        tally.record(seed, r.verdict, || format!("remixed k={kk} over {field}"));
        pass(tally, "remixed", r.verdict);
    }
    for v in k.complex().vertices() {
        if is_isolated_on_colour(k, v)? {
            let r = check_isolated(k, v, field)?;
            tally.record(seed, r.verdict, || format!("isolated vertex {v} over {field}"));
            pass(tally, "isolated", r.verdict);
        }
    }
    if colour_classes_discrete(k) {
        let r = check_discrete(k, field)?;
        tally.record(seed, r.verdict, || format!("discrete over {field}: {:?}", r.not_extending));
        pass(tally, "discrete", r.verdict);
    }
    Ok(())
}

/// A pseudomanifold `M` on `{0..m}` and a partite complex coloured by `M`'s
/// vertices. `M` is `∂Δ_m`, a cycle, or the octahedral sphere.
pub fn sample_polytopal(seed: u64) -> Result<(ColouredComplex, SimplicialComplex)> {
    let mut r = rng(seed);
    let mc = match r.gen_range(0..3) {
        0 => simplex_boundary(r.gen_range(1..=3))?,
        1 => {
            let len = r.gen_range(3..=5);
            SimplicialComplex::from_facets((0..len).map(|i| [i, (i + 1) % len]))?
        }
        _ => octahedron().complex().clone(),
    };
    let m = mc.num_vertices() - 1;
    let n = r.gen_range(m + 1..=(m + 3).min(9));
    Ok((random_partite(n, m, r.gen_range(0.3..=1.0), seed)?, mc))
}

pub fn polytopal_trial(seed: u64, tally: &mut Tally) -> Result<()> {
    let (k, mc) = sample_polytopal(seed)?;
    for field in [FieldSpec::F2, FieldSpec::Q] {
        let r = polytopal_meshulam(&k, &mc, field)?;
        tally.record(seed, r.verdict, || format!("polytopal over {field}: {} < {}", r.colourful_count, r.bound));
        if let Some(p) = &r.pipeline {
            tally.non_vacuous += 1;
            tally.bump(format!("d={}", r.d));
            if !p.lambda_f_identity {
                tally.violation(seed, format!("polytopal over {field}: λ♯∘f♯ is not the inclusion"));
            }
        }
    }
    Ok(())
}

/// A random pseudomanifold with a fundamental class over `F2`, relabelled
/// into a sparse vertex range.
pub fn sample_pseudomanifold(seed: u64) -> Result<SimplicialComplex> {
    let mut r = rng(seed);
    let base = match r.gen_range(0..5) {
        0 => simplex_boundary(r.gen_range(1..=4))?,
        1 => {
            let len = r.gen_range(3..=9);
            SimplicialComplex::from_facets((0..len).map(|i| [i, (i + 1) % len]))?
        }
        2 => cross_polytope_boundary(r.gen_range(1..=3)),
        3 => torus7(),
        _ => rp2_6(),
    };
    let verts = base.vertices();
    let mut labels: Vec<usize> = (0..verts.len() * 3).collect();
    labels.shuffle(&mut r);
    labels.truncate(verts.len());
    let relabel = |s: &Simplex| Simplex::new(s.vertices().iter().map(|v| labels[verts.binary_search(v).unwrap()]));
    Ok(SimplicialComplex::closure(base.facets().iter().map(|s| relabel(s).unwrap())))
}

/// Boundary of the `(d+1)`-dimensional cross-polytope, a `d`-sphere on
/// `2(d+1)` vertices.
pub fn cross_polytope_boundary(d: usize) -> SimplicialComplex {
    let facets = (0..1u32 << (d + 1)).map(|bits| {
        Simplex::new((0..=d).map(|i| 2 * i + (bits >> i & 1) as usize)).unwrap()
    });
    SimplicialComplex::closure(facets)
}

/// Cone `a * z` over the fundamental class of a random pseudomanifold, with
/// the apex above every vertex; its boundary is `z` up to sign.
pub fn sample_cone_chain(seed: u64) -> Result<Chain> {
    let p = sample_pseudomanifold(seed)?;
    let field = FieldSpec::F2;
    let z = fundamental_class(&p, field)?
        .ok_or_else(|| Error::Precondition("sampled pseudomanifold has no F2 class".into()))?;
    let apex = p.vertices().last().copied().unwrap_or(0) + 1;
    let terms = z.terms().map(|(s, x)| (s.join_vertex(apex).expect("apex is new"), x.clone()));
    Chain::from_terms(field, z.dim() + 1, terms)
}

pub fn counting_trial(seed: u64, tally: &mut Tally) -> Result<()> {
    let c = sample_cone_chain(seed)?;
    let r = count_lemma_check(&c)?;
    tally.checks += 1;
    if r.bound_holds {
        tally.passed += 1;
        tally.non_vacuous += 1;
        tally.bump(format!("s={}", r.s));
    } else {
        tally.violation(seed, format!("count lemma: support {} < n - s = {} - {}", r.support, r.n, r.s));
    }
    Ok(())
}

/// One trial of `theorem` at `seed`.
pub fn run_trial(theorem: Theorem, seed: u64, tally: &mut Tally) -> Result<()> {
    tally.trials += 1;
    match theorem {
        Theorem::Mixed => {
            let cover = sample_cover(seed)?;
            for f in [FieldSpec::F2, FieldSpec::Q] {
                mixed_trial(&cover, seed, f, tally)?;
            }
            Ok(())
        }
        Theorem::Helly => {
            let cover = sample_cover(seed)?;
            helly_trial(&cover, seed, field_of(seed), tally)
        }
        Theorem::UnionAcyclicity => union_acyclicity_trial(seed, tally),
        Theorem::Killing => killing_trial(seed, tally),
        Theorem::ColourUnions => colour_unions_trial(seed, tally),
        Theorem::Meshulam => {
            let k = sample_coloured(seed, 8)?;
            meshulam_trial(&k, seed, field_of(seed), tally)
        }
        Theorem::Polytopal => polytopal_trial(seed, tally),
        Theorem::Counting => counting_trial(seed, tally),
    }
}

/// `trials` consecutive seeds starting at `seed`.
pub fn run(theorem: Theorem, seed: u64, trials: u64) -> Result<Tally> {
    let mut tally = Tally::default();
    for t in 0..trials {
        run_trial(theorem, seed.wrapping_add(t), &mut tally)?;
    }
    Ok(tally)
}
