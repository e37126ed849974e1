//! Covers, nerves, and checkers for the mixed nerve theorem and the
//! Helly-type statements derived from it.
//!
//! Subcollections of a cover are bit masks over member indices and are
//! visited in binary-counter order. Betti numbers of intersections and
//! unions are cached per mask, so sweeping many `(k, l)` pairs over one cover
//! costs one homology computation per subcollection and field.

use std::cell::OnceCell;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::homology::{reduced_betti, BettiVector};
use crate::report::{mask_members, Verdict};

/// Default limit on the number of cover members.
pub const DEFAULT_MAX_MEMBERS: usize = 12;
const HARD_MAX_MEMBERS: usize = 24;

/// An ordered collection of subcomplexes of a host. Repeated members count
/// separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    host: SimplicialComplex,
    members: Vec<SimplicialComplex>,
}

impl Cover {
    pub fn new(host: SimplicialComplex, members: Vec<SimplicialComplex>) -> Result<Self> {
        if let Some(i) = members.iter().position(|m| !m.is_subcomplex_of(&host)) {
            return Err(Error::MemberNotInHost(i));
        }
        Ok(Cover { host, members })
    }

    /// Cover whose host is the union of the members.
    pub fn from_members(members: Vec<SimplicialComplex>) -> Self {
        let host = members
            .iter()
            .fold(SimplicialComplex::empty(), |acc, m| acc.union(m));
        Cover { host, members }
    }

    pub fn host(&self) -> &SimplicialComplex {
        &self.host
    }

    pub fn members(&self) -> &[SimplicialComplex] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn covers_host(&self) -> bool {
        let u = self
            .members
            .iter()
            .fold(SimplicialComplex::empty(), |acc, m| acc.union(m));
        u == self.host
    }

    pub fn intersection_of(&self, idx: &[usize]) -> SimplicialComplex {
        let mut it = idx.iter();
        let Some(&first) = it.next() else {
            return self.host.clone();
        };
        it.fold(self.members[first].clone(), |acc, &i| acc.intersection(&self.members[i]))
    }

    pub fn union_of(&self, idx: &[usize]) -> SimplicialComplex {
        idx.iter()
            .fold(SimplicialComplex::empty(), |acc, &i| acc.union(&self.members[i]))
    }
}

/// Which family of conditions a report covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `β̃(⋂σ) = 0` conditions.
    Inter,
    /// `β̃(⋃σ) = 0` conditions.
    Union,
}

/// One tested subcollection: `β̃_degree` of its intersection or union must
/// vanish.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisEntry {
    pub members: Vec<usize>,
    pub condition: Condition,
    pub degree: isize,
    pub observed: usize,
    pub pass: bool,
    /// Not checked by the caller's preset but implied by its standing
    /// assumption (e.g. an embedding in `R^d`).
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub assumed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub condition: Condition,
    pub entries: Vec<HypothesisEntry>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HypothesisEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    /// Whether at least one condition was actually tested.
    pub fn is_vacuous(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MixedConclusion {
    pub nerve_betti: usize,
    pub host_betti: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedReport {
    pub k: isize,
    pub l: isize,
    pub field: FieldSpec,
    pub inter: HypothesisReport,
    pub union: HypothesisReport,
    pub conclusion: MixedConclusion,
    pub verdict: Verdict,
}

/// Lazily computed homology of every subcollection of a cover.
pub struct CoverAnalysis<'a> {
    cover: &'a Cover,
    field: FieldSpec,
    nonempty: Vec<bool>,
    inter: Vec<OnceCell<BettiVector>>,
    union: Vec<OnceCell<BettiVector>>,
    nerve: OnceCell<SimplicialComplex>,
}

impl<'a> CoverAnalysis<'a> {
    pub fn new(cover: &'a Cover, field: FieldSpec) -> Result<Self> {
        Self::with_limit(cover, field, DEFAULT_MAX_MEMBERS)
    }

    pub fn with_limit(cover: &'a Cover, field: FieldSpec, max_members: usize) -> Result<Self> {
        let n = cover.len();
        let limit = max_members.min(HARD_MAX_MEMBERS);
        if n > limit {
            return Err(Error::CoverTooLarge { len: n, limit });
        }
        let masks = 1usize << n;
        Ok(CoverAnalysis {
            cover,
            field,
            nonempty: intersection_nonempty_table(cover),
            inter: (0..masks).map(|_| OnceCell::new()).collect(),
            union: (0..masks).map(|_| OnceCell::new()).collect(),
            nerve: OnceCell::new(),
        })
    }

    pub fn cover(&self) -> &Cover {
        self.cover
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Whether the members in `mask` share a vertex.
    pub fn meets(&self, mask: u32) -> bool {
        self.nonempty[mask as usize]
    }

    pub fn inter_betti(&self, mask: u32) -> &BettiVector {
        self.inter[mask as usize].get_or_init(|| {
            if !self.meets(mask) {
                return reduced_betti(&SimplicialComplex::empty(), self.field);
            }
            reduced_betti(&self.cover.intersection_of(&mask_members(mask)), self.field)
        })
    }

    pub fn union_betti(&self, mask: u32) -> &BettiVector {
        self.union[mask as usize]
            .get_or_init(|| reduced_betti(&self.cover.union_of(&mask_members(mask)), self.field))
    }

    /// Nerve: vertex `i` per member, a subset is a simplex iff the members
    /// share a vertex. Empty members are rejected.
    pub fn nerve(&self) -> Result<&SimplicialComplex> {
        if let Some(i) = self.cover.members.iter().position(SimplicialComplex::is_empty) {
            return Err(Error::EmptyMember(i));
        }
        Ok(self.nerve.get_or_init(|| {
            let n = self.cover.len();
            let simplices = (1u32..(1u32 << n))
                .filter(|&m| self.meets(m))
                .map(|m| crate::complex::Simplex::new(mask_members(m)).unwrap());
            SimplicialComplex::from_closed_family(simplices).expect("nerve is downward closed")
        }))
    }

    fn entry(&self, mask: u32, condition: Condition, degree: isize) -> HypothesisEntry {
        let observed = match condition {
            Condition::Inter => self.inter_betti(mask).get(degree),
            Condition::Union => self.union_betti(mask).get(degree),
        };
        HypothesisEntry {
            members: mask_members(mask),
            condition,
            degree,
            observed,
            pass: observed == 0,
            assumed: false,
        }
    }

    /// Conditions (1) and (2) of the mixed nerve theorem over the simplices
    /// of the nerve.
    pub fn mixed_hypotheses(
        &self,
        k: isize,
        l: isize,
    ) -> Result<(HypothesisReport, HypothesisReport)> {
        let n = self.cover.len() as isize;
        if !(-1 <= k && k <= l && l < n) {
            return Err(Error::InvalidParameter(format!(
                "need -1 <= k <= l < |cover| (k = {k}, l = {l}, |cover| = {n})"
            )));
        }
        if !self.cover.covers_host() {
            return Err(Error::NotCovering);
        }
        let mut inter = HypothesisReport { condition: Condition::Inter, entries: Vec::new() };
        let mut union = HypothesisReport { condition: Condition::Union, entries: Vec::new() };
        for mask in 1u32..(1u32 << n) {
            if !self.meets(mask) {
                continue;
            }
            let size = mask.count_ones() as isize;
            let dim = size - 1;
            if dim <= k {
                inter.entries.push(self.entry(mask, Condition::Inter, k - size));
            } else if dim <= l {
                union.entries.push(self.entry(mask, Condition::Union, size - 2));
            }
        }
        Ok((inter, union))
    }

    /// `β̃_l(N(Γ)) ≤ β̃_l(X)`.
    pub fn mixed_conclusion(&self, l: isize) -> Result<MixedConclusion> {
        if !self.cover.covers_host() {
            return Err(Error::NotCovering);
        }
        let nerve_betti = reduced_betti(self.nerve()?, self.field).get(l);
        let host_betti = reduced_betti(&self.cover.host, self.field).get(l);
        Ok(MixedConclusion { nerve_betti, host_betti, holds: nerve_betti <= host_betti })
    }

    pub fn mixed_report(&self, k: isize, l: isize) -> Result<MixedReport> {
        let (inter, union) = self.mixed_hypotheses(k, l)?;
        let conclusion = self.mixed_conclusion(l)?;
        let verdict = Verdict::from_parts(inter.passed() && union.passed(), conclusion.holds);
        Ok(MixedReport { k, l, field: self.field, inter, union, conclusion, verdict })
    }

    /// Helly-type check with conditions `(1h)` for `1 ≤ |Γ'| ≤ k+1` and
    /// `(2h)` for `|Γ'| ≥ k+2`. Entries with `|Γ'| > tested_up_to` are
    /// marked as assumed.
    fn helly(&self, k: isize, tested_up_to: usize, preset: HellyPreset) -> Result<HellyReport> {
        let n = self.cover.len() as isize;
        if !(-1 <= k && k <= n - 2) {
            return Err(Error::InvalidParameter(format!(
                "need -1 <= k <= |cover| - 2 (k = {k}, |cover| = {n})"
            )));
        }
        let mut entries = Vec::new();
        for mask in 1u32..(1u32 << n) {
            let size = mask.count_ones() as isize;
            let mut e = if size <= k + 1 {
                self.entry(mask, Condition::Inter, k - size)
            } else {
                self.entry(mask, Condition::Union, size - 2)
            };
            e.assumed = size as usize > tested_up_to;
            entries.push(e);
        }
        let full = (1u32 << n) - 1;
        let intersection_nonempty = self.meets(full);
        let hypotheses_pass = entries.iter().all(|e| e.pass);
        Ok(HellyReport {
            k,
            preset,
            field: self.field,
            entries,
            intersection_nonempty,
            verdict: Verdict::from_parts(hypotheses_pass, intersection_nonempty),
        })
    }
}

/// `table[mask]` is true when the members in `mask` share a vertex; entry 0
/// (the empty subcollection) is true.
fn intersection_nonempty_table(cover: &Cover) -> Vec<bool> {
    let verts = cover.host.vertices();
    let words = verts.len().div_ceil(64).max(1);
    let bits: Vec<Vec<u64>> = cover
        .members
        .iter()
        .map(|m| {
            let mut b = vec![0u64; words];
            for v in m.vertices() {
                if let Ok(i) = verts.binary_search(&v) {
                    b[i / 64] |= 1 << (i % 64);
                }
            }
            b
        })
        .collect();
    let n = cover.len();
    let mut common: Vec<Vec<u64>> = vec![vec![u64::MAX; words]; 1 << n];
    let mut table = vec![true; 1 << n];
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let row: Vec<u64> = common[rest].iter().zip(&bits[low]).map(|(a, b)| a & b).collect();
        table[mask] = row.iter().any(|w| *w != 0);
        common[mask] = row;
    }
    table
}

pub fn nerve(cover: &Cover) -> Result<SimplicialComplex> {
    nerve_with_limit(cover, DEFAULT_MAX_MEMBERS)
}

pub fn nerve_with_limit(cover: &Cover, max_members: usize) -> Result<SimplicialComplex> {
    let a = CoverAnalysis::with_limit(cover, FieldSpec::F2, max_members)?;
    a.nerve().cloned()
}

pub fn check_mixed_hypotheses(
    cover: &Cover,
    k: isize,
    l: isize,
    field: FieldSpec,
) -> Result<(HypothesisReport, HypothesisReport)> {
    CoverAnalysis::new(cover, field)?.mixed_hypotheses(k, l)
}

pub fn verify_mixed_conclusion(cover: &Cover, l: isize, field: FieldSpec) -> Result<MixedConclusion> {
    CoverAnalysis::new(cover, field)?.mixed_conclusion(l)
}

/// Which Helly-type statement a report instantiates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HellyPreset {
    General,
    /// Union conditions up to `d + 1` members; larger ones follow from an
    /// embedding in `R^d`.
    EmbeddedUnion { d: usize },
    /// Intersection conditions up to `d + 1` members; union conditions follow
    /// from an embedding in `R^d`.
    EmbeddedInter { d: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HellyReport {
    pub k: isize,
    pub preset: HellyPreset,
    pub field: FieldSpec,
    pub entries: Vec<HypothesisEntry>,
    pub intersection_nonempty: bool,
    pub verdict: Verdict,
}

impl HellyReport {
    pub fn hypotheses_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    /// Failures among the conditions the preset actually checks.
    pub fn checked_failures(&self) -> impl Iterator<Item = &HypothesisEntry> {
        self.entries.iter().filter(|e| !e.pass && !e.assumed)
    }
}

pub fn helly_check(cover: &Cover, k: isize, field: FieldSpec) -> Result<HellyReport> {
    CoverAnalysis::new(cover, field)?.helly(k, cover.len(), HellyPreset::General)
}

/// Union variant for complexes in `R^d`: `β̃_{|Γ'|-2}(⋃Γ') = 0` for
/// `|Γ'| ≤ d + 1`.
pub fn helly_embedded_union(cover: &Cover, d: usize, field: FieldSpec) -> Result<HellyReport> {
    CoverAnalysis::new(cover, field)?.helly(-1, d + 1, HellyPreset::EmbeddedUnion { d })
}

/// Topological Helly in `R^d`: `β̃_{d-|Γ'|}(⋂Γ') = 0` for `|Γ'| ≤ d + 1`,
/// with at least `d + 2` members.
pub fn helly_embedded_inter(cover: &Cover, d: usize, field: FieldSpec) -> Result<HellyReport> {
    if cover.len() < d + 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least d + 2 = {} members, got {}",
            d + 2,
            cover.len()
        )));
    }
    CoverAnalysis::new(cover, field)?.helly(d as isize, d + 1, HellyPreset::EmbeddedInter { d })
}

/// Union acyclicity from intersection conditions: if
/// `β̃_{|σ|-|τ|-1}(⋂τ) = 0` for every nonempty `τ ⊆ σ`, then
/// `β̃_{|σ|-2}(⋃σ) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnionAcyclicityCheck {
    pub hypotheses_pass: bool,
    pub union_betti: usize,
    pub verdict: Verdict,
}

pub fn check_union_acyclicity(
    members: &[SimplicialComplex],
    field: FieldSpec,
) -> Result<UnionAcyclicityCheck> {
    if members.is_empty() {
        return Err(Error::InvalidParameter("collection must be nonempty".into()));
    }
    let cover = Cover::from_members(members.to_vec());
    let a = CoverAnalysis::new(&cover, field)?;
    let n = members.len() as isize;
    let hypotheses_pass = (1u32..(1u32 << n)).all(|mask| {
        let t = mask.count_ones() as isize;
        a.inter_betti(mask).vanishes(n - t - 1)
    });
    let union_betti = a.union_betti((1u32 << n) - 1).get(n - 2);
    Ok(UnionAcyclicityCheck {
        hypotheses_pass,
        union_betti,
        verdict: Verdict::from_parts(hypotheses_pass, union_betti == 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(f: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(f.iter().map(|s| s.iter().copied())).unwrap()
    }

    /// Hexagon 0..5 covered by three arcs meeting pairwise in an edge.
    fn arcs() -> Cover {
        Cover::from_members(vec![
            cx(&[&[0, 1], &[1, 2], &[2, 3]]),
            cx(&[&[2, 3], &[3, 4], &[4, 5]]),
            cx(&[&[4, 5], &[0, 5], &[0, 1]]),
        ])
    }

    #[test]
    fn nerve_of_two_edges() {
        let c = Cover::from_members(vec![cx(&[&[0, 1]]), cx(&[&[1, 2]])]);
        assert_eq!(nerve(&c).unwrap(), cx(&[&[0, 1]]));
    }

    #[test]
    fn nerve_of_arcs_is_circle() {
        assert_eq!(nerve(&arcs()).unwrap(), cx(&[&[0, 1], &[1, 2], &[0, 2]]));
    }

    #[test]
    fn repeated_members_are_distinct_vertices() {
        let a = cx(&[&[0, 1]]);
        let c = Cover::from_members(vec![a.clone(), a]);
        assert_eq!(nerve(&c).unwrap(), cx(&[&[0, 1]]));
    }

    #[test]
    fn empty_member_rejected() {
        let c = Cover::from_members(vec![cx(&[&[0]]), SimplicialComplex::empty()]);
        assert_eq!(nerve(&c), Err(Error::EmptyMember(1)));
    }

    #[test]
    fn member_outside_host_rejected() {
        let r = Cover::new(cx(&[&[0, 1]]), vec![cx(&[&[1, 2]])]);
        assert_eq!(r, Err(Error::MemberNotInHost(0)));
    }

    #[test]
    fn arcs_pass_mixed_hypotheses() {
        let c = arcs();
        for field in [FieldSpec::F2, FieldSpec::Q] {
            let (i, u) = check_mixed_hypotheses(&c, 1, 1, field).unwrap();
            assert!(i.passed() && u.passed());
            assert!(u.is_vacuous());
            assert_eq!(i.entries.len(), 6);
            let (i, u) = check_mixed_hypotheses(&c, -1, 1, field).unwrap();
            assert!(i.is_vacuous());
            assert_eq!(u.entries.len(), 6);
            assert!(u.passed());
            let concl = verify_mixed_conclusion(&c, 1, field).unwrap();
            assert_eq!(concl, MixedConclusion { nerve_betti: 1, host_betti: 1, holds: true });
        }
    }

    #[test]
    fn disjoint_edges_singleton_union_condition_passes() {
        let c = Cover::from_members(vec![cx(&[&[0, 1]]), cx(&[&[2, 3]])]);
        let (_, u) = check_mixed_hypotheses(&c, -1, 0, FieldSpec::F2).unwrap();
        assert!(u.passed());
        assert!(u.entries.iter().all(|e| e.degree == -1));
    }

    #[test]
    fn single_member_equal_to_host() {
        let host = cx(&[&[0, 1, 2]]);
        let c = Cover::new(host.clone(), vec![host]).unwrap();
        let concl = verify_mixed_conclusion(&c, 0, FieldSpec::Q).unwrap();
        assert_eq!(concl, MixedConclusion { nerve_betti: 0, host_betti: 0, holds: true });
    }

    #[test]
    fn mixed_parameter_and_cover_errors() {
        let c = arcs();
        assert!(check_mixed_hypotheses(&c, 2, 1, FieldSpec::F2).is_err());
        assert!(check_mixed_hypotheses(&c, -1, 3, FieldSpec::F2).is_err());
        let not_covering = Cover::new(cx(&[&[0, 1, 2]]), vec![cx(&[&[0, 1]])]).unwrap();
        assert_eq!(
            check_mixed_hypotheses(&not_covering, 0, 0, FieldSpec::F2),
            Err(Error::NotCovering)
        );
        assert_eq!(verify_mixed_conclusion(&not_covering, 0, FieldSpec::F2), Err(Error::NotCovering));
    }

    #[test]
    fn helly_on_subtrees_of_a_path() {
        let path = cx(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]);
        let members = vec![
            cx(&[&[0, 1], &[1, 2]]),
            cx(&[&[1, 2], &[2, 3]]),
            cx(&[&[2, 3], &[3, 4]]),
        ];
        let c = Cover::new(path, members).unwrap();
        let r = helly_check(&c, 0, FieldSpec::F2).unwrap();
        assert!(r.hypotheses_pass());
        assert!(r.intersection_nonempty);
        assert_eq!(r.verdict, Verdict::Holds);
    }

    #[test]
    fn helly_on_circle_edges() {
        let c = Cover::from_members(vec![cx(&[&[0, 1]]), cx(&[&[1, 2]]), cx(&[&[0, 2]])]);
        let r = helly_check(&c, -1, FieldSpec::Q).unwrap();
        let fails: Vec<_> = r.checked_failures().collect();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].members, vec![0, 1, 2]);
        assert_eq!((fails[0].degree, fails[0].observed), (1, 1));
        assert!(!r.intersection_nonempty);
        assert_eq!(r.verdict, Verdict::HypothesesFailed);
    }

    #[test]
    fn helly_on_two_points() {
        let c = Cover::from_members(vec![cx(&[&[0]]), cx(&[&[1]])]);
        let r = helly_check(&c, -1, FieldSpec::F2).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesesFailed);
        let fails: Vec<_> = r.checked_failures().map(|e| (e.members.clone(), e.degree)).collect();
        assert_eq!(fails, vec![(vec![0, 1], 0)]);
        assert!(helly_check(&c, 1, FieldSpec::F2).is_err());
    }

    #[test]
    fn embedded_presets() {
        let c = Cover::from_members(vec![cx(&[&[0, 1]]), cx(&[&[1, 2]]), cx(&[&[0, 2]])]);
        // in the plane, pairs are checked and the triple union is assumed
        let r = helly_embedded_union(&c, 1, FieldSpec::F2).unwrap();
        assert_eq!(r.checked_failures().count(), 0);
        assert!(r.entries.iter().any(|e| e.assumed && !e.pass));
        assert_eq!(r.verdict, Verdict::HypothesesFailed);
        assert!(helly_embedded_inter(&c, 2, FieldSpec::F2).is_err());
    }

    #[test]
    fn union_acyclicity_on_a_path_pair() {
        let r = check_union_acyclicity(&[cx(&[&[0, 1]]), cx(&[&[1, 2]])], FieldSpec::F2).unwrap();
        assert!(r.hypotheses_pass);
        assert_eq!(r.verdict, Verdict::Holds);
        let r = check_union_acyclicity(&[cx(&[&[0]]), cx(&[&[1]])], FieldSpec::F2).unwrap();
        assert!(!r.hypotheses_pass);
    }
}
