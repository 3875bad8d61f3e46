//! Command line front end: build the complexes, run verification suites,
//! and merge reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use homcollapse::graph::Graph;
use homcollapse::hom::{hom_cells, hom_i_cells};
use homcollapse::mkls::{build_mkls, ArrayPoset, Family};
use homcollapse::report::{merge_reports, VerificationReport};
use homcollapse::set::LabelSet;
use homcollapse::subdivision::derived_subdivision_near;
use homcollapse::suites::{self, SuiteParams};
use homcollapse::{default_cap, disk, Error};

#[derive(Parser)]
#[command(
    name = "homcollapse",
    about = "Homomorphism complexes of the pentagon: build them, collapse them, verify them",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a deterministic dump of one of the complexes.
    Build {
        #[command(subcommand)]
        target: Build,
    },
    /// Run a named verification suite and emit a JSON report.
    Verify {
        /// links | collapse | homology | fixedset | boundary | nonmanifold | all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        caps: Caps,
        /// Worker threads for parallel suites (0 = automatic).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Merge report files into a summary table.
    Report {
        /// JSON report files produced by verify.
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Caps {
    /// Largest poset allowed (default from HOMCOLLAPSE_CAP or 10^6).
    #[arg(long)]
    max_cells: Option<u64>,
    /// Largest order complex allowed (same default).
    #[arg(long)]
    max_chains: Option<u64>,
}

impl Caps {
    fn cells(&self) -> u64 {
        self.max_cells.unwrap_or_else(default_cap)
    }
    fn chains(&self) -> u64 {
        self.max_chains.unwrap_or_else(default_cap)
    }
}

#[derive(Subcommand)]
enum Build {
    /// Cells of Hom(graph, K_colors), one line per cell.
    Hom {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        colors: u32,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cells of the quotient model Hom_{{3}}(graph, K_colors).
    #[command(name = "homI")]
    HomI {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        colors: u32,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The four nested array posets M, K, L, S.
    Mkls {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The disk F(k, l), one simplex per line.
    #[command(name = "F")]
    F {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derived subdivision of the chain complex of M near the diagonal.
    Derived {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        caps: Caps,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> homcollapse::Result<ExitCode> {
    match cli.cmd {
        Cmd::Build { target } => build(target).map(|()| ExitCode::SUCCESS),
        Cmd::Verify { suite, n, caps, jobs, out } => verify(&suite, n, &caps, jobs, out),
        Cmd::Report { files, out } => report(&files, out),
    }
}

fn emit(out: Option<PathBuf>, text: String) -> homcollapse::Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(Error::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A graph argument is a built-in name first, and otherwise a path to a
/// file in the plain text format.
fn resolve_graph(arg: &str) -> homcollapse::Result<Graph> {
    match Graph::named(arg) {
        Ok(g) => Ok(g),
        Err(e) => match fs::read_to_string(arg) {
            Ok(text) => Graph::from_text(&text),
            Err(_) => Err(e),
        },
    }
}

fn build(target: Build) -> homcollapse::Result<()> {
    match target {
        Build::Hom { graph, colors, caps, out } => {
            let g = resolve_graph(&graph)?;
            let hom = hom_cells(&g, colors, caps.cells())?;
            eprintln!("{} cells, {} of them vertices", hom.len(), hom.zero_cell_count());
            emit(out, to_text(hom.dump_lines()))
        }
        Build::HomI { graph, colors, caps, out } => {
            let g = resolve_graph(&graph)?;
            let hom = hom_i_cells(&g, LabelSet::singleton(3), colors, caps.cells())?;
            eprintln!("{} cells, {} of them vertices", hom.len(), hom.zero_cell_count());
            emit(out, to_text(hom.dump_lines()))
        }
        Build::Mkls { n, caps, out } => {
            let fam = build_mkls(n, caps.cells())?;
            let mut lines = Vec::new();
            for (letter, p) in [('m', &fam.m), ('k', &fam.k), ('l', &fam.l), ('s', &fam.s)] {
                lines.push(format!("# {letter} {} cells", p.len()));
                lines.extend(p.dump_lines());
            }
            emit(out, to_text(lines))
        }
        Build::F { k, l, out } => {
            if k == 0 && l == 0 {
                return Err(Error::InvalidParameter(
                    "F(0, 0) is the void complex; pick k + l > 0".into(),
                ));
            }
            let f = disk::build_f(k, l);
            eprintln!("{} nonempty simplices, dimension {}", f.simplex_count(), f.dim());
            let lines: Vec<String> = f.iter().map(|s| join_ids(s)).collect();
            emit(out, to_text(lines))
        }
        Build::Derived { n, caps, out } => {
            let mp = ArrayPoset::build(n, Family::M, caps.cells())?;
            let dm = mp.poset.order_complex(caps.chains())?;
            let ds = dm.vertex_induced(|v| mp.cells[v as usize].is_diagonal());
            let sd = derived_subdivision_near(&dm, &ds)?;
            eprintln!(
                "{} simplices after starring {} chains",
                sd.complex.simplex_count(),
                sd.centers.len()
            );
            let mut lines = vec![format!("# base {}", sd.base)];
            for (i, c) in sd.centers.iter().enumerate() {
                lines.push(format!("# center {}: {}", sd.base + i as u32, join_ids(c)));
            }
            lines.extend(sd.complex.iter().map(|s| join_ids(s)));
            emit(out, to_text(lines))
        }
    }
}

fn join_ids(s: &[u32]) -> String {
    s.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn to_text(lines: Vec<String>) -> String {
    let mut text = lines.join("\n");
    text.push('\n');
    text
}

fn verify(
    suite: &str,
    n: u32,
    caps: &Caps,
    jobs: usize,
    out: Option<PathBuf>,
) -> homcollapse::Result<ExitCode> {
    let params = SuiteParams { n, max_cells: caps.cells(), max_chains: caps.chains(), jobs };
    let started = Instant::now();
    let mut reports = match suite {
        "links" => vec![suites::links_suite(params)?],
        "collapse" => vec![suites::collapse_suite(params)?],
        "homology" => vec![suites::homology_suite(params)?],
        "fixedset" => vec![suites::fixedset_suite(params)?],
        "boundary" => vec![suites::boundary_suite(params)?],
        "nonmanifold" => vec![suites::nonmanifold_suite(params)?],
        "all" => suites::all_suites(params)?,
        other => {
            return Err(Error::InvalidParameter(format!("unknown suite {other:?}")));
        }
    };
    let each = started.elapsed().as_millis() as u64 / reports.len() as u64;
    for r in &mut reports {
        r.wall_ms = each;
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let text = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    };
    emit(out, text + "\n")?;
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn report(files: &[PathBuf], out: Option<PathBuf>) -> homcollapse::Result<ExitCode> {
    let mut reports = Vec::new();
    for path in files {
        let text = fs::read_to_string(path)?;
        let trimmed = text.trim_start();
        if trimmed.starts_with('[') {
            let many: Vec<VerificationReport> = serde_json::from_str(trimmed)
                .map_err(|e| Error::Parse(format!("bad report list {}: {e}", path.display())))?;
            reports.extend(many);
        } else {
            reports.push(VerificationReport::from_json(&text)?);
        }
    }
    let merged = merge_reports(&reports)?;
    let mut table = String::new();
    table.push_str("suite        n  checked     pass fail skip failures verdict\n");
    for s in &merged.suites {
        table.push_str(&format!(
            "{:<12} {:<2} {:<11} {:<4} {:<4} {:<4} {:<8} {}\n",
            s.suite,
            s.n,
            s.cells_checked,
            s.passes,
            s.fails,
            s.skips,
            s.failures,
            if s.passed { "pass" } else { "FAIL" }
        ));
    }
    table.push_str(&format!("overall: {}\n", if merged.passed { "pass" } else { "FAIL" }));
    emit(out, table)?;
    Ok(if merged.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
