mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nervekit::coloured::ColouredComplex;
use nervekit::constructive::kill_homology;
use nervekit::document::{ComplexDocument, CoverDocument};
use nervekit::generators::GeneratorSpec;
use nervekit::nerve::{
    helly_check, helly_embedded_inter, helly_embedded_union, Cover, CoverAnalysis, DEFAULT_MAX_MEMBERS,
};
use nervekit::search::{self, Theorem, DEFAULT_SEED};
use nervekit::sperner::{check_discrete, check_isolated, check_meshulam, check_remixed, polytopal_meshulam};
use nervekit::witnesses::{catalogue, cut_circle_cover, search_graph_example};
use nervekit::{reduced_betti, Error, FieldSpec, SimplicialComplex, Verdict};
use serde_json::{json, Value};

/// Simplicial complexes, exact homology over fields, and checkers for nerve
/// and Sperner-type theorems.
///
/// Exit status: 0 when hypotheses pass and the conclusion holds, 1 when a
/// hypothesis fails, 2 on bad input, 3 if a conclusion fails although every
/// hypothesis passed.
#[derive(Parser, Debug)]
#[command(name = "nervekit", version, term_width = 80)]
struct Cli {
    /// Print a JSON report instead of the text table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Betti numbers of a complex.
    Homology {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        file: PathBuf,
    },
    /// Mixed nerve theorem for a cover; `--k -1` is the union version.
    Nerve {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        k: isize,
        /// Defaults to the number of members minus one.
        #[arg(long, allow_negative_numbers = true)]
        l: Option<isize>,
        #[arg(long, default_value_t = DEFAULT_MAX_MEMBERS)]
        max_members: usize,
        file: PathBuf,
        cover: PathBuf,
    },
    /// Helly-type theorem: acyclicity conditions force a common point.
    Helly {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        k: isize,
        /// Union conditions up to d + 1 members, for complexes in R^d.
        #[arg(long, conflicts_with = "embedded_inter", requires = "d")]
        embedded_union: bool,
        /// Topological Helly in R^d: intersection conditions up to d + 1 members.
        #[arg(long, requires = "d")]
        embedded_inter: bool,
        #[arg(short = 'd')]
        d: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MAX_MEMBERS)]
        max_members: usize,
        file: PathBuf,
        cover: PathBuf,
    },
    /// Rainbow simplices in a coloured complex.
    Meshulam {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        /// Remixed conditions with this k.
        #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["isolated", "discrete"])]
        k: Option<isize>,
        /// Rainbow simplex through a vertex with no neighbour of its colour.
        #[arg(long, conflicts_with = "discrete")]
        isolated: Option<usize>,
        /// Every simplex extends to a rainbow simplex.
        #[arg(long)]
        discrete: bool,
        file: PathBuf,
    },
    /// Colourful simplices counted against a pseudomanifold M on {0..m}.
    Polytopal {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        file: PathBuf,
        mfile: PathBuf,
    },
    /// Attach simplices until homology below degree d vanishes.
    Kill {
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(short = 'd')]
        d: usize,
        /// Write the new complex here instead of after the table.
        #[arg(short, long)]
        output: Option<PathBuf>,
        file: PathBuf,
    },
    /// Emit a fixture or random instance as a document.
    Generate {
        kind: Kind,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        rows: usize,
        #[arg(long, default_value_t = 3)]
        cols: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,1,1")]
        bands: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        n: usize,
        #[arg(short = 'd', default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded counterexample search plus the catalogue of sharpness witnesses.
    Search {
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Defaults to NERVEKIT_SEED, then 1729.
        #[arg(long)]
        seed: Option<u64>,
        /// One of mixed, helly, union-acyclicity, killing, colour-unions,
        /// meshulam, polytopal, counting; all when absent.
        #[arg(long)]
        theorem: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    SimplexBoundary,
    Torus7,
    Rp2,
    Octahedron,
    BandedTorus,
    Random,
    RandomColoured,
    CutCircleHost,
    CutCircleCover,
    GraphExample,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::TheoremViolation(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn input(message: String) -> Failure {
    Failure { code: 2, message }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn verdict(text: String, json: Value, v: Verdict) -> Self {
        Output { text, json, code: v.exit_code() as u8 }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| input(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<ComplexDocument, Failure> {
    ComplexDocument::parse(&read(path)?).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> Result<(ComplexDocument, SimplicialComplex), Failure> {
    let doc = load(path)?;
    let x = doc.to_complex().map_err(|e| input(format!("{}: {e}", path.display())))?;
    Ok((doc, x))
}

fn load_coloured(path: &Path) -> Result<ColouredComplex, Failure> {
    let doc = load(path)?;
    doc.to_coloured()
        .map_err(|e| input(format!("{}: {e}", path.display())))?
        .ok_or_else(|| input(format!("{}: document has no colours", path.display())))
}

fn load_cover(file: &Path, cover: &Path) -> Result<(SimplicialComplex, Cover), Failure> {
    let (_, host) = load_complex(file)?;
    let doc = CoverDocument::parse(&read(cover)?).map_err(|e| input(format!("{}: {e}", cover.display())))?;
    let c = doc.to_cover(Some(&host)).map_err(|e| input(format!("{}: {e}", cover.display())))?;
    if !c.covers_host() {
        return Err(Error::NotCovering.into());
    }
    Ok((host, c))
}

fn run(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Homology { field, file } => {
            let (doc, x) = load_complex(&file)?;
            let b = reduced_betti(&x, field);
            let text = render::betti(&doc.name, &x, &field.to_string(), &b);
            let json = json!({"command": "homology", "name": doc.name, "field": field,
                              "f_vector": x.f_vector(), "betti": b});
            Ok(Output { text, json, code: 0 })
        }
        Command::Nerve { field, k, l, max_members, file, cover } => {
            let (host, c) = load_cover(&file, &cover)?;
            let a = CoverAnalysis::with_limit(&c, field, max_members)?;
            let l = l.unwrap_or(c.len() as isize - 1);
            let r = a.mixed_report(k, l)?;
            let text = render::mixed(&r, c.len(), &host, a.nerve()?);
            let json = json!({"command": "nerve", "report": r});
            Ok(Output::verdict(text, json, r.verdict))
        }
        Command::Helly { field, k, embedded_union, embedded_inter, d, max_members, file, cover } => {
            let (_, c) = load_cover(&file, &cover)?;
            if c.len() > max_members {
                return Err(Error::CoverTooLarge { len: c.len(), limit: max_members }.into());
            }
            let r = match (embedded_union, embedded_inter, d) {
                (true, _, Some(d)) => helly_embedded_union(&c, d, field)?,
                (_, true, Some(d)) => helly_embedded_inter(&c, d, field)?,
                _ => helly_check(&c, k, field)?,
            };
            let text = render::helly(&r, c.len());
            let json = json!({"command": "helly", "report": r});
            Ok(Output::verdict(text, json, r.verdict))
        }
        Command::Meshulam { field, k, isolated, discrete, file } => {
            let kc = load_coloured(&file)?;
            if let Some(kk) = k {
                let r = check_remixed(&kc, kk, field)?;
                let json = json!({"command": "meshulam", "mode": "remixed", "report": r});
                return Ok(Output::verdict(render::remixed(&kc, &r), json, r.verdict));
            }
            if let Some(v) = isolated {
                let r = check_isolated(&kc, v, field)?;
                let json = json!({"command": "meshulam", "mode": "isolated", "report": r});
                return Ok(Output::verdict(render::isolated(&kc, &r), json, r.verdict));
            }
            if discrete {
                let r = check_discrete(&kc, field)?;
                let json = json!({"command": "meshulam", "mode": "discrete", "report": r});
                return Ok(Output::verdict(render::discrete(&kc, &r), json, r.verdict));
            }
            let r = check_meshulam(&kc, field)?;
            let json = json!({"command": "meshulam", "mode": "meshulam", "report": r});
            Ok(Output::verdict(render::meshulam(&kc, &r), json, r.verdict))
        }
        Command::Polytopal { field, file, mfile } => {
            let kc = load_coloured(&file)?;
            let (_, mc) = load_complex(&mfile)?;
            let r = polytopal_meshulam(&kc, &mc, field)?;
            let json = json!({"command": "polytopal", "report": r});
            Ok(Output::verdict(render::polytopal(&kc, &r), json, r.verdict))
        }
        Command::Kill { field, d, output, file } => {
            let (doc, x) = load_complex(&file)?;
            let killed = kill_homology(&x, d, field)?;
            let mut out_doc = ComplexDocument::from_complex(format!("{}_killed_{d}", doc.name), &killed.complex);
            out_doc.metadata.insert("killed_below".into(), d.to_string());
            out_doc.metadata.insert("field".into(), field.to_string());
            let mut text =
                render::killing(d, &field.to_string(), killed.added.len(), &killed.before, &killed.after);
            match &output {
                Some(p) => std::fs::write(p, out_doc.emit())
                    .map_err(|e| input(format!("cannot write {}: {e}", p.display())))?,
                None => {
                    text.push('\n');
                    text.push_str(&out_doc.emit());
                }
            }
            let json = json!({"command": "kill", "field": field, "d": d, "added": killed.added.len(),
                              "before": killed.before, "after": killed.after, "document": out_doc});
            Ok(Output { text, json, code: 0 })
        }
        Command::Generate { kind, m, rows, cols, bands, n, d, p, seed } => {
            let (text, json) = generate(kind, m, rows, cols, bands, n, d, p, seed)?;
            Ok(Output { text, json, code: 0 })
        }
        Command::Search { trials, seed, theorem } => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var("NERVEKIT_SEED") {
                    Ok(v) => v.trim().parse().map_err(|_| input(format!("NERVEKIT_SEED is not an integer: {v:?}")))?,
                    Err(_) => DEFAULT_SEED,
                },
            };
            let theorems: Vec<Theorem> = match theorem {
                Some(t) => vec![t.parse()?],
                None => Theorem::ALL.to_vec(),
            };
            let mut tallies = Vec::new();
            for t in theorems {
                tallies.push((t, search::run(t, seed, trials)?));
            }
            let cat = catalogue(seed)?;
            let violated = tallies.iter().any(|(_, t)| !t.violations.is_empty());
            let text = render::search(seed, trials, &tallies, &cat);
            let by_name: serde_json::Map<String, Value> =
                tallies.iter().map(|(t, ta)| (t.name().to_string(), json!(ta))).collect();
            let json = json!({"command": "search", "seed": seed, "trials": trials,
                              "tallies": by_name, "witnesses": cat});
            Ok(Output { text, json, code: if violated { 3 } else { 0 } })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    kind: Kind,
    m: usize,
    rows: usize,
    cols: usize,
    bands: Vec<usize>,
    n: usize,
    d: usize,
    p: f64,
    seed: u64,
) -> Result<(String, Value), Failure> {
    let spec = match kind {
        Kind::SimplexBoundary => Some(GeneratorSpec::SimplexBoundary { m }),
        Kind::Torus7 => Some(GeneratorSpec::Torus7),
        Kind::Rp2 => Some(GeneratorSpec::Rp2),
        Kind::Octahedron => Some(GeneratorSpec::Octahedron),
        Kind::BandedTorus => Some(GeneratorSpec::BandedTorus { rows, cols, bands }),
        Kind::Random => Some(GeneratorSpec::RandomComplex { n, d, p, seed }),
        Kind::RandomColoured => Some(GeneratorSpec::RandomColouring { n, d, p, m, seed }),
        _ => None,
    };
    let doc = match (kind, spec) {
        (_, Some(spec)) => {
            let g = spec.generate()?;
            match &g.colours {
                Some(k) => ComplexDocument::from_coloured(spec.name(), k),
                None => ComplexDocument::from_complex(spec.name(), &g.complex),
            }
        }
        (Kind::CutCircleHost, _) => ComplexDocument::from_complex("cut_circle", cut_circle_cover().host()),
        (Kind::CutCircleCover, _) => {
            let c = CoverDocument::from_cover("cut_circle_arcs", &cut_circle_cover());
            let json = serde_json::to_value(&c).expect("documents serialise");
            return Ok((c.emit(), json));
        }
        (Kind::GraphExample, _) => {
            let ex = search_graph_example(9, seed, 10_000)?;
            let mut doc = ComplexDocument::from_coloured("graph_example_c9_complement", &ex.coloured_clique_complex());
            doc.metadata.insert("seed".into(), seed.to_string());
            doc.metadata.insert("complement_total_domination".into(), ex.complement_total_domination.to_string());
            doc
        }
        _ => unreachable!("every kind is handled above"),
    };
    let json = serde_json::to_value(&doc).expect("documents serialise");
    Ok((doc.emit(), json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialise"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
