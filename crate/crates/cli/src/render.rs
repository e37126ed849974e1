//! Plain-text tables. Everything here is a pure function of the report, so
//! two runs print the same bytes.

use std::fmt::Write;

use nervekit::coloured::ColouredComplex;
use nervekit::nerve::{HellyReport, HypothesisEntry, MixedReport};
use nervekit::search::{Tally, Theorem};
use nervekit::sperner::{ColourEntry, DiscreteReport, IsolatedReport, MeshulamReport, PolytopalReport, RemixedReport};
use nervekit::witnesses::Catalogue;
use nervekit::{BettiVector, Simplex, SimplicialComplex};

/// Left-aligned first column, right-aligned others.
pub struct Table {
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(header: &[S]) -> Self {
        Table { rows: vec![header.iter().map(ToString::to_string).collect()] }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }

    pub fn render(&self, indent: usize, out: &mut String) {
        let cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let width: Vec<usize> = (0..cols)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
            .collect();
        for r in &self.rows {
            let mut line = " ".repeat(indent);
            for (c, cell) in r.iter().enumerate() {
                if c == 0 {
                    let _ = write!(line, "{cell:<w$}", w = width[0]);
                } else {
                    let _ = write!(line, "  {cell:>w$}", w = width[c]);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
    }
}

pub fn set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn simplex_list(xs: &[Simplex]) -> String {
    if xs.is_empty() {
        return "none".into();
    }
    xs.iter().map(|s| set(s.vertices())).collect::<Vec<_>>().join(" ")
}

fn status(pass: bool) -> String {
    if pass { "pass" } else { "FAIL" }.into()
}

fn f_vector(x: &SimplicialComplex) -> String {
    let f = x.f_vector();
    if f.is_empty() {
        return "(empty)".into();
    }
    f.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "NO" }
}

pub fn betti(name: &str, x: &SimplicialComplex, field: &str, b: &BettiVector) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "complex   {name}");
    let _ = writeln!(out, "field     {field}");
    let _ = writeln!(out, "f-vector  {}", f_vector(x));
    let mut t = Table::new(&["degree", "betti"]);
    for (i, v) in b.iter() {
        t.row(vec![format!("{i:>6}"), v.to_string()]);
    }
    t.render(0, &mut out);
    out
}

fn hypothesis_table(title: &str, entries: &[HypothesisEntry], out: &mut String) {
    let _ = writeln!(out, "{title}");
    if entries.is_empty() {
        out.push_str("  (none)\n");
        return;
    }
    let mut t = Table::new(&["members", "degree", "betti", "status"]);
    for e in entries {
        let st = if e.assumed { "assumed".to_string() } else { status(e.pass) };
        t.row(vec![set(&e.members), e.degree.to_string(), e.observed.to_string(), st]);
    }
    t.render(2, out);
}

pub fn mixed(r: &MixedReport, cover_len: usize, host: &SimplicialComplex, nerve: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "nerve theorem  k = {}, l = {}, field {}", r.k, r.l, r.field);
    let _ = writeln!(out, "cover          {cover_len} members, host f-vector {}", f_vector(host));
    let _ = writeln!(out, "nerve          f-vector {}", f_vector(nerve));
    hypothesis_table("intersection conditions", &r.inter.entries, &mut out);
    hypothesis_table("union conditions", &r.union.entries, &mut out);
    let c = &r.conclusion;
    let rel = if c.holds { "<=" } else { ">" };
    let _ = writeln!(
        out,
        "conclusion     b{l}(nerve) = {} {rel} b{l}(host) = {}",
        c.nerve_betti,
        c.host_betti,
        l = r.l
    );
    let _ = writeln!(out, "verdict        {}", r.verdict.label());
    out
}

pub fn helly(r: &HellyReport, cover_len: usize) -> String {
    let mut out = String::new();
    let preset = match r.preset {
        nervekit::nerve::HellyPreset::General => "general".to_string(),
        nervekit::nerve::HellyPreset::EmbeddedUnion { d } => format!("embedded-union, d = {d}"),
        nervekit::nerve::HellyPreset::EmbeddedInter { d } => format!("embedded-inter, d = {d}"),
    };
    let _ = writeln!(out, "helly          k = {}, field {}, preset {preset}", r.k, r.field);
    let _ = writeln!(out, "cover          {cover_len} members");
    let (inter, union): (Vec<HypothesisEntry>, Vec<HypothesisEntry>) = r
        .entries
        .iter()
        .cloned()
        .partition(|e| e.condition == nervekit::nerve::Condition::Inter);
    hypothesis_table("intersection conditions", &inter, &mut out);
    hypothesis_table("union conditions", &union, &mut out);
    let _ = writeln!(out, "conclusion     common intersection nonempty: {}", yes(r.intersection_nonempty));
    let _ = writeln!(out, "verdict        {}", r.verdict.label());
    out
}

fn colour_table(entries: &[ColourEntry], out: &mut String) {
    let mut t = Table::new(&["colours", "complex", "degree", "betti", "status"]);
    for e in entries {
        let name = match e.condition {
            nervekit::sperner::ColourCondition::Induced => "K_S",
            nervekit::sperner::ColourCondition::Complement => "K_(I-S)",
            nervekit::sperner::ColourCondition::Tilde => "K~_S",
            nervekit::sperner::ColourCondition::Global => "K",
        };
        t.row(vec![set(&e.colours), name.into(), e.degree.to_string(), e.observed.to_string(), status(e.pass)]);
    }
    t.render(2, out);
}

fn colour_header(k: &ColouredComplex, title: &str, field: &str, out: &mut String) {
    let _ = writeln!(out, "{title}  m = {}, field {field}", k.m());
    let _ = writeln!(out, "complex   f-vector {}", f_vector(k.complex()));
    let classes: Vec<String> = k.classes().iter().enumerate().map(|(i, c)| format!("{i}:{}", set(c))).collect();
    let _ = writeln!(out, "colours   {}", classes.join(" "));
    out.push_str("conditions\n");
}

pub fn meshulam(k: &ColouredComplex, r: &MeshulamReport) -> String {
    let mut out = String::new();
    colour_header(k, "meshulam", &r.field.to_string(), &mut out);
    colour_table(&r.entries, &mut out);
    let _ = writeln!(out, "rainbow   {}: {}", r.rainbow.len(), simplex_list(&r.rainbow));
    let _ = writeln!(out, "verdict   {}", r.verdict.label());
    out
}

pub fn remixed(k: &ColouredComplex, r: &RemixedReport) -> String {
    let mut out = String::new();
    colour_header(k, &format!("remixed k = {}", r.k), &r.field.to_string(), &mut out);
    colour_table(&r.entries, &mut out);
    let _ = writeln!(out, "rainbow   {}", r.rainbow_count);
    let _ = writeln!(out, "verdict   {}", r.verdict.label());
    out
}

pub fn isolated(k: &ColouredComplex, r: &IsolatedReport) -> String {
    let mut out = String::new();
    colour_header(k, &format!("isolated vertex {}", r.vertex), &r.field.to_string(), &mut out);
    colour_table(&r.entries, &mut out);
    let _ = writeln!(out, "rainbow through {}  {}: {}", r.vertex, r.rainbow_containing.len(), simplex_list(&r.rainbow_containing));
    let _ = writeln!(out, "verdict   {}", r.verdict.label());
    out
}

pub fn discrete(k: &ColouredComplex, r: &DiscreteReport) -> String {
    let mut out = String::new();
    colour_header(k, "discrete", &r.field.to_string(), &mut out);
    colour_table(&r.entries, &mut out);
    let _ = writeln!(out, "simplices checked  {}", r.simplices_checked);
    let _ = writeln!(out, "outside rainbows   {}: {}", r.not_extending.len(), simplex_list(&r.not_extending));
    let _ = writeln!(out, "verdict   {}", r.verdict.label());
    out
}

pub fn polytopal(k: &ColouredComplex, r: &PolytopalReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "polytopal  m = {}, d = {}, field {}", r.m, r.d, r.field);
    let _ = writeln!(out, "complex    f-vector {}", f_vector(k.complex()));
    out.push_str("conditions on simplices of M\n");
    let mut t = Table::new(&["simplex", "degree", "betti", "status"]);
    for e in &r.entries {
        t.row(vec![set(e.simplex.vertices()), e.degree.to_string(), e.observed.to_string(), status(e.pass)]);
    }
    t.render(2, &mut out);
    let _ = writeln!(out, "top homology     b{}(K) = {}", r.d, r.top_betti);
    let _ = writeln!(
        out,
        "colourful count  {} simplices of dimension {} (bound m - d = {})",
        r.colourful_count,
        r.d + 1,
        r.bound
    );
    match &r.pipeline {
        None => out.push_str("pipeline         skipped (hypotheses fail)\n"),
        Some(p) => {
            out.push_str("pipeline\n");
            let _ = writeln!(out, "  f commutes with boundary   {}", yes(p.chain_map_commutes));
            let _ = writeln!(out, "  f preserves augmentation   {}", yes(p.augmentation_preserved));
            let _ = writeln!(out, "  lambda o f = id            {}", yes(p.lambda_f_identity));
            let _ = writeln!(out, "  boundary of lambda(c') = z {}", yes(p.boundary_matches));
            let _ = writeln!(out, "  filling support            {}", p.filling_support);
            let _ = writeln!(out, "  colourful in filling       {}", p.filling_colourful);
            let _ = writeln!(
                out,
                "  count lemma                support {} >= n - s = {} - {}: {}",
                p.count.support,
                p.count.n,
                p.count.s,
                yes(p.count.bound_holds)
            );
        }
    }
    let _ = writeln!(out, "verdict          {}", r.verdict.label());
    out
}

pub fn killing(d: usize, field: &str, added: usize, before: &BettiVector, after: &BettiVector) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "killing below degree {d}, field {field}");
    let _ = writeln!(out, "attached {added} simplices of dimension {d} after the {}-skeleton", d as isize - 1);
    let top = before.top_degree().max(after.top_degree());
    let mut t = Table::new(&["degree", "before", "after"]);
    for i in -1..=top {
        t.row(vec![format!("{i:>6}"), before.get(i).to_string(), after.get(i).to_string()]);
    }
    t.render(0, &mut out);
    out
}

pub fn search(seed: u64, trials: u64, tallies: &[(Theorem, Tally)], cat: &Catalogue) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "search  seed {seed}, {trials} trials per theorem");
    let mut t = Table::new(&["theorem", "trials", "checks", "passed", "non-vacuous", "violations"]);
    for (th, ta) in tallies {
        t.row(vec![
            th.name().into(),
            ta.trials.to_string(),
            ta.checks.to_string(),
            ta.passed.to_string(),
            ta.non_vacuous.to_string(),
            ta.violations.len().to_string(),
        ]);
    }
    t.render(0, &mut out);
    out.push_str("strata\n");
    let mut s = Table::new(&["theorem", "stratum", "count"]);
    for (th, ta) in tallies {
        for (k, v) in &ta.strata {
            s.row(vec![th.name().into(), k.clone(), v.to_string()]);
        }
    }
    s.render(2, &mut out);
    let violations: Vec<String> = tallies
        .iter()
        .flat_map(|(th, ta)| ta.violations.iter().map(move |v| format!("  {th} seed {}: {}", v.seed, v.detail)))
        .collect();
    if violations.is_empty() {
        out.push_str("violations  none\n");
    } else {
        out.push_str("violations\n");
        for v in violations {
            out.push_str(&v);
            out.push('\n');
        }
    }
    out.push_str("witnesses\n");
    let c = &cat.cut_circle;
    let failing: Vec<String> = c.union.failures().map(|e| set(&e.members)).collect();
    let _ = writeln!(
        out,
        "  cut circle cover   k = -1, l = 1, field {}: failing {}; b1(nerve) = {} > b1(host) = {}",
        c.field,
        failing.join(" "),
        c.conclusion.nerve_betti,
        c.conclusion.host_betti
    );
    match &cat.union_search {
        Some(w) => {
            let _ = writeln!(
                out,
                "  union search       broken conclusion at seed {} with {} failing conditions",
                w.seed, w.failing
            );
        }
        None => out.push_str("  union search       no broken conclusion found\n"),
    }
    let bt = &cat.banded_torus;
    let global = bt.entries.iter().find(|e| e.condition == nervekit::sperner::ColourCondition::Global);
    let _ = writeln!(
        out,
        "  banded torus 3x3   k = -1, field {}: b{}(K) = {}, other conditions {}, rainbow {}; sharp {}",
        bt.field,
        bt.m as isize - 1,
        global.map_or(0, |e| e.observed),
        if bt.entries.iter().filter(|e| e.condition != nervekit::sperner::ColourCondition::Global).all(|e| e.pass) {
            "pass"
        } else {
            "FAIL"
        },
        bt.rainbow_count,
        yes(cat.banded_torus_sharp)
    );
    let g = &cat.graph;
    let classes: Vec<String> = g.classes.iter().map(|c| set(c)).collect();
    let _ = writeln!(
        out,
        "  graph example      complement of C{} (total domination {}), colours {}: {}, rainbow triangles {}",
        g.graph.n(),
        g.complement_total_domination,
        classes.join(" "),
        cat.graph_report.verdict.label(),
        cat.graph_report.rainbow_count
    );
    out
}
