//! Instances showing that individual hypotheses cannot be dropped, and the
//! graph colouring example for the remixed theorem.

use rand::Rng;
use serde::Serialize;

use crate::coloured::ColouredComplex;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::generators::{banded_torus, random_cover, random_facets, rng};
use crate::graph::Graph;
use crate::nerve::{Cover, CoverAnalysis, MixedReport};
use crate::sperner::{check_remixed, ColourCondition, RemixedReport};

/// Three arcs of a hexagon cut open at vertex 0, whose copy is vertex 6:
/// `A = 0-1-2 ∪ {6}`, `B = 2-3-4`, `C = 4-5-6`. The host is a path but the
/// nerve is a circle. The only failing conditions of the union theorem
/// (`k = -1`, `l = 1`) are the connectivity of `A ∪ B` and `A ∪ C`.
pub fn cut_circle_cover() -> Cover {
    let cx = |f: &[&[usize]]| SimplicialComplex::from_facets(f.iter().map(|s| s.iter().copied())).unwrap();
    Cover::from_members(vec![
        cx(&[&[0, 1], &[1, 2], &[6]]),
        cx(&[&[2, 3], &[3, 4]]),
        cx(&[&[4, 5], &[5, 6]]),
    ])
}

#[derive(Clone, Debug, Serialize)]
pub struct UnionWitness {
    pub seed: u64,
    pub failing: usize,
    pub report: MixedReport,
}

/// Seeded search over random 3-member covers for a broken conclusion of the
/// union theorem at `l = 1`, keeping the instance with the fewest failing
/// conditions (first found on ties).
pub fn search_union_witness(seed: u64, trials: u64, field: FieldSpec) -> Result<Option<(Cover, UnionWitness)>> {
    let mut best: Option<(Cover, UnionWitness)> = None;
    for t in 0..trials {
        let s = seed.wrapping_add(t);
        let mut r = rng(s);
        let n = r.gen_range(4..=7);
        let x = random_facets(n, r.gen_range(2..=6), 3, s)?;
        let cover = random_cover(&x, 3, s.rotate_left(17))?;
        let a = CoverAnalysis::new(&cover, field)?;
        let report = a.mixed_report(-1, 1)?;
        if report.conclusion.holds {
            continue;
        }
        let failing = report.union.failures().count();
        if best.as_ref().map_or(true, |(_, w)| failing < w.failing) {
            best = Some((cover, UnionWitness { seed: s, failing, report }));
        }
    }
    Ok(best)
}

/// Row-banded 3×3 torus: every condition of the `k = -1` remixed theorem
/// holds except `β̃_1(K) = 0`, and there is no rainbow triangle.
pub fn banded_torus_witness() -> ColouredComplex {
    banded_torus(3, 3, &[1, 1, 1]).expect("valid torus parameters")
}

/// Checks the three properties claimed for [`banded_torus_witness`]-like
/// instances: only the global condition fails and no rainbow simplex exists.
pub fn is_remixed_sharpness_witness(report: &RemixedReport) -> bool {
    let global_fails = report
        .entries
        .iter()
        .any(|e| e.condition == ColourCondition::Global && !e.pass);
    let others_pass = report
        .entries
        .iter()
        .filter(|e| e.condition != ColourCondition::Global)
        .all(|e| e.pass);
    global_fails && others_pass && report.rainbow_count == 0
}

/// A graph with three vertex colours for the clique-complex example.
#[derive(Clone, Debug, Serialize)]
pub struct GraphExample {
    pub seed: u64,
    pub graph: Graph,
    pub classes: Vec<Vec<usize>>,
    pub complement_total_domination: usize,
}

impl GraphExample {
    pub fn coloured_clique_complex(&self) -> ColouredComplex {
        ColouredComplex::new(self.graph.clique_complex(), self.classes.clone()).expect("partition of the vertices")
    }
}

/// For each pair of colours, removing the edges joining those two colours
/// leaves the graph connected.
pub fn pair_removals_connected(g: &Graph, colour: &[usize]) -> bool {
    (0..3).all(|i| {
        (i + 1..3).all(|j| {
            g.filter_edges(|a, b| {
                let (ca, cb) = (colour[a], colour[b]);
                !((ca == i && cb == j) || (ca == j && cb == i))
            })
            .is_connected()
        })
    })
}

/// Seeded search for a 3-colouring of the complement of `C_n` meeting the
/// pair-connectivity condition. `γ̃(C_n) ≥ 5` needs `n ≥ 9`.
pub fn search_graph_example(n: usize, seed: u64, max_tries: u64) -> Result<GraphExample> {
    let cycle = Graph::cycle(n)?;
    let tdn = cycle.total_domination_number()?.expect("cycles have no isolated vertices");
    let g = cycle.complement();
    let mut r = rng(seed);
    for _ in 0..max_tries {
        let colour: Vec<usize> = (0..n).map(|_| r.gen_range(0..3)).collect();
        if (0..3).any(|c| !colour.contains(&c)) || !pair_removals_connected(&g, &colour) {
            continue;
        }
        let mut classes = vec![Vec::new(); 3];
        for (v, &c) in colour.iter().enumerate() {
            classes[c].push(v);
        }
        return Ok(GraphExample { seed, graph: g, classes, complement_total_domination: tdn });
    }
    Err(Error::InvalidParameter(format!("no admissible colouring in {max_tries} tries")))
}

/// Runs the `k = -1` remixed checker on the clique complex of the example.
pub fn check_graph_example(ex: &GraphExample, field: FieldSpec) -> Result<RemixedReport> {
    check_remixed(&ex.coloured_clique_complex(), -1, field)
}

/// Everything `search` reports besides the tallies.
#[derive(Clone, Debug, Serialize)]
pub struct Catalogue {
    pub cut_circle: MixedReport,
    /// Best instance of the seeded union-theorem search, if any.
    pub union_search: Option<UnionWitness>,
    pub banded_torus: RemixedReport,
    pub banded_torus_sharp: bool,
    pub graph: GraphExample,
    pub graph_report: RemixedReport,
}

/// Union-theorem search samples at most this many covers.
pub const UNION_SEARCH_TRIALS: u64 = 2000;

/// Fixed per seed: the union search always samples
/// [`UNION_SEARCH_TRIALS`] covers.
pub fn catalogue(seed: u64) -> Result<Catalogue> {
    let cut = cut_circle_cover();
    let cut_circle = CoverAnalysis::new(&cut, FieldSpec::Q)?.mixed_report(-1, 1)?;
    let union_search =
        search_union_witness(seed, UNION_SEARCH_TRIALS, FieldSpec::Q)?.map(|(_, w)| w);
    let banded_torus = check_remixed(&banded_torus_witness(), -1, FieldSpec::F2)?;
    let banded_torus_sharp = is_remixed_sharpness_witness(&banded_torus);
    let graph = search_graph_example(9, seed, 10_000)?;
    let graph_report = check_graph_example(&graph, FieldSpec::F2)?;
    Ok(Catalogue { cut_circle, union_search, banded_torus, banded_torus_sharp, graph, graph_report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn cut_circle_breaks_union_conclusion() {
        let c = cut_circle_cover();
        let r = CoverAnalysis::new(&c, FieldSpec::Q).unwrap().mixed_report(-1, 1).unwrap();
        assert!(!r.conclusion.holds);
        assert_eq!((r.conclusion.nerve_betti, r.conclusion.host_betti), (1, 0));
        let fails: Vec<Vec<usize>> = r.union.failures().map(|e| e.members.clone()).collect();
        assert_eq!(fails, vec![vec![0, 1], vec![0, 2]]);
        assert_eq!(r.verdict, Verdict::HypothesesFailed);
    }

    #[test]
    fn banded_torus_is_sharpness_witness() {
        let k = banded_torus_witness();
        for f in [FieldSpec::F2, FieldSpec::Q] {
            let r = check_remixed(&k, -1, f).unwrap();
            assert!(is_remixed_sharpness_witness(&r));
        }
    }

    #[test]
    fn catalogue_is_deterministic() {
        let a = catalogue(1729).unwrap();
        let b = catalogue(1729).unwrap();
        assert!(a.banded_torus_sharp);
        assert!(!a.cut_circle.conclusion.holds);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn graph_example_has_rainbow_triangle() {
        let ex = search_graph_example(9, 7, 10_000).unwrap();
        assert!(ex.complement_total_domination >= 5);
        let r = check_graph_example(&ex, FieldSpec::F2).unwrap();
        assert!(r.hypotheses_pass());
        assert!(r.rainbow_count > 0);
        assert_eq!(r.verdict, Verdict::Holds);
    }
}
