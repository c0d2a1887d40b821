//! `sqen`: command-line front end for the square-energy workbench.

mod output;

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use sqen_core::checks::{run_suite, summarize, CheckId, Suite, Verdict, DEFAULT_REL_TOL};
use sqen_core::exact::{
    blowup_spectrum, exact_square_energies, gq_spectrum, kneser_inertia, kneser_spectrum,
    taylor_spectrum, RationalSpectrum,
};
use sqen_core::experiments::{
    average_from_graph6, average_square_energies, emit_svg_plot, parse_p_grid, random_sweep,
    ratio_growth_study, GrowthStudy, PlotKind,
};
use sqen_core::graph::{encode_graph6, parse_graph6, read_graph6, Graph, GraphFamilyParams};
use sqen_core::spectral::{eigenvalues_symmetric, inertia, spectral_resolution, square_energies};

use output::{sink, write_rows, Format};

#[derive(Parser, Debug)]
#[command(
    name = "sqen",
    version,
    about = "Positive and negative square energies of graphs"
)]
struct Cli {
    /// Base seed for random constructions and sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Relative tolerance for check verdicts.
    #[arg(long, global = true, env = "SQEN_TOL", default_value_t = DEFAULT_REL_TOL)]
    tol: f64,
    /// Worker threads (default: all available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output file (default: standard output).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print it as graph6.
    Construct(ConstructArgs),
    /// Print n, m, μ₁, inertia, s⁺, s⁻, ratio and spread for graph6 input.
    Energy {
        /// A graph6 string, or `-` to read graph6 lines from standard input.
        graph6: String,
        /// Emit a CSV header before the row.
        #[arg(long)]
        header: bool,
    },
    /// Run a check suite over graph6 input.
    Check(SuiteArgs),
    /// Exact spectrum and square energies of the Kneser graph K(n, k).
    Kneser {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Exact spectra of generalised quadrangles and Taylor graphs, or growth studies.
    Families(FamiliesArgs),
    /// G(n, p) sweep of mean square energies.
    Sweep {
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// `start:stop:step` or a comma separated list.
        #[arg(long, default_value = "0:1:0.1")]
        p_grid: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        /// Also write an SVG chart.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Chart drawn by `--svg`.
        #[arg(long, value_enum, default_value_t = Plot::Energy)]
        plot: Plot,
    },
    /// Average s⁺ and s⁻ per edge count over all graphs on n ≤ 7 vertices or a graph6 corpus.
    Average {
        #[arg(long, conflicts_with = "graph6", required_unless_present = "graph6")]
        n: Option<usize>,
        #[arg(long)]
        graph6: Option<PathBuf>,
    },
    /// Run a check suite over a corpus in parallel and summarise on standard error.
    Corpus(SuiteArgs),
    /// Positive/negative resolution A = B − C with an irreducibility report.
    Resolve {
        /// A graph6 string.
        graph6: String,
    },
}

#[derive(Args, Debug)]
struct SuiteArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    /// graph6 file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Plot {
    /// Mean s⁺ and s⁻ against p.
    Energy,
    /// Mean s⁻ against m with its upper bounds.
    Bounds,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Kneser,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Star,
    Gnp,
    Planar,
    Blowup,
    Copies,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Order (kneser, complete, cycle, path, star, gnp, planar).
    #[arg(long)]
    n: Option<usize>,
    /// Subset size for Kneser graphs.
    #[arg(long)]
    k: Option<usize>,
    /// First part size for complete bipartite graphs.
    #[arg(long)]
    a: Option<usize>,
    /// Second part size for complete bipartite graphs.
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability for gnp.
    #[arg(long)]
    p: Option<f64>,
    /// Blowup factor.
    #[arg(long)]
    t: Option<usize>,
    /// Number of copies.
    #[arg(long)]
    count: Option<usize>,
    /// Diagonal flip attempts for planar.
    #[arg(long, default_value_t = 0)]
    flips: usize,
    /// Base graph (graph6) for blowup and copies.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SrgName {
    Gq,
    Taylor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StudyName {
    GqRatio,
    GqSquareCube,
    TaylorSpread,
}

#[derive(Args, Debug)]
struct FamiliesArgs {
    #[arg(
        long,
        value_enum,
        conflicts_with = "study",
        required_unless_present = "study"
    )]
    family: Option<SrgName>,
    /// `q`: GQ(q, q²) (or GQ(q, t) with `--t`), or Taylor T_q.
    #[arg(long, requires = "family")]
    param: Option<u64>,
    /// Second GQ order parameter.
    #[arg(long, requires = "family")]
    t: Option<u64>,
    /// Blowup factor applied to the spectrum.
    #[arg(long, default_value_t = 1)]
    blowup: u64,
    #[arg(long, value_enum)]
    study: Option<StudyName>,
    /// Comma separated q values (default depends on the study).
    #[arg(long, value_delimiter = ',')]
    grid: Vec<u64>,
    /// Comma separated blowup exponents a (t = q^a) for taylor-spread.
    #[arg(long, value_delimiter = ',', default_values_t = [0u32, 1, 2])]
    exponents: Vec<u32>,
}

#[derive(Serialize)]
struct EnergyRow {
    graph6: String,
    n: usize,
    m: usize,
    mu1: f64,
    n_plus: usize,
    n_zero: usize,
    n_minus: usize,
    s_plus: f64,
    s_minus: f64,
    ratio: f64,
    spread: f64,
}

#[derive(Serialize)]
struct SpectrumRow {
    family: String,
    n: String,
    mu1: String,
    spectrum: String,
    s_plus: String,
    s_minus: String,
    spread: String,
    n_plus: usize,
    n_zero: usize,
    n_minus: usize,
}

#[derive(Serialize)]
struct ResolveRow {
    graph6: String,
    part: &'static str,
    irreducible: bool,
    components: usize,
    tau: f64,
    row: usize,
    values: String,
}

type CliResult<T> = Result<T, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<u8> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    if !(cli.tol.is_finite() && cli.tol >= 0.0) {
        return Err(format!(
            "--tol must be a finite non-negative number, got {}",
            cli.tol
        ));
    }
    let out = cli.out.as_deref();
    let fmt = cli.format;
    match &cli.command {
        Command::Construct(args) => {
            let g = construct(args, cli.seed)?;
            let mut w = sink(out).map_err(|e| e.to_string())?;
            writeln!(w, "{}", encode_graph6(&g)).map_err(|e| e.to_string())?;
            w.flush().map_err(|e| e.to_string())?;
            Ok(0)
        }
        Command::Energy { graph6, header } => {
            let graphs = if graph6 == "-" {
                read_all(&mut io::stdin().lock())?
            } else {
                vec![parse_graph6(graph6).map_err(|e| e.to_string())?]
            };
            let rows = graphs
                .iter()
                .map(energy_row)
                .collect::<CliResult<Vec<_>>>()?;
            emit(&rows, fmt, *header, out)?;
            Ok(0)
        }
        Command::Check(args) => check(args, cli.tol, fmt, out, false),
        Command::Corpus(args) => check(args, cli.tol, fmt, out, true),
        Command::Kneser { n, k } => {
            let spec = kneser_spectrum(*n, *k).map_err(|e| e.to_string())?;
            let mut row = spectrum_row(format!("K({n},{k})"), &spec);
            let inr = kneser_inertia(*n, *k).map_err(|e| e.to_string())?;
            (row.n_plus, row.n_zero, row.n_minus) = (inr.n_plus, inr.n_zero, inr.n_minus);
            emit(&[row], fmt, true, out)?;
            Ok(0)
        }
        Command::Families(args) => families(args, fmt, out),
        Command::Sweep {
            n,
            p_grid,
            samples,
            svg,
            plot,
        } => {
            let grid = parse_p_grid(p_grid).map_err(|e| e.to_string())?;
            let rows = random_sweep(*n, &grid, *samples, cli.seed).map_err(|e| e.to_string())?;
            emit(&rows, fmt, true, out)?;
            if let Some(path) = svg {
                let kind = match plot {
                    Plot::Energy => PlotKind::EnergyByP,
                    Plot::Bounds => PlotKind::SMinusBounds,
                };
                emit_svg_plot(&rows, kind, path).map_err(|e| e.to_string())?;
            }
            Ok(0)
        }
        Command::Average { n, graph6 } => {
            let table = match (n, graph6) {
                (Some(n), _) => average_square_energies(*n),
                (None, Some(path)) => average_from_graph6(open(path)?),
                (None, None) => unreachable!("clap requires one source"),
            }
            .map_err(|e| e.to_string())?;
            emit(&table.rows, fmt, true, out)?;
            let peak = table
                .argmax_s_minus()
                .map(|m| m.to_string())
                .unwrap_or_default();
            eprintln!(
                "n = {}, graphs = {}, argmax_m avg s- = {}, s+ monotone: {}, s- unimodal: {}",
                table.n,
                table.total_graphs(),
                peak,
                table.s_plus_monotone(1e-9),
                table.s_minus_unimodal(1e-9)
            );
            Ok(0)
        }
        Command::Resolve { graph6 } => {
            let g = parse_graph6(graph6).map_err(|e| e.to_string())?;
            let res = spectral_resolution::<f64>(&g, None).map_err(|e| e.to_string())?;
            let report =
                sqen_core::checks::check_irreducibility_question(&g).map_err(|e| e.to_string())?;
            let id = encode_graph6(&g);
            let mut rows = Vec::new();
            for (part, m) in [("B", &res.b), ("C", &res.c)] {
                let (irreducible, components) = match (&report, part) {
                    (Some(r), "B") => (r.b_irreducible, r.b_components),
                    (Some(r), _) => (r.c_irreducible, r.c_components),
                    (None, _) => (false, 0),
                };
                for i in 0..g.n() {
                    rows.push(ResolveRow {
                        graph6: id.clone(),
                        part,
                        irreducible,
                        components,
                        tau: res.support_tau(),
                        row: i,
                        values: m
                            .row(i)
                            .iter()
                            .map(|x| format!("{x:.12}"))
                            .collect::<Vec<_>>()
                            .join(" "),
                    });
                }
            }
            if report.is_none() {
                eprintln!(
                    "note: irreducibility is reported only for connected graphs with an edge"
                );
            }
            emit(&rows, fmt, true, out)?;
            Ok(0)
        }
    }
}

fn emit<T: Serialize>(rows: &[T], fmt: Format, header: bool, out: Option<&Path>) -> CliResult<()> {
    let mut w = sink(out).map_err(|e| e.to_string())?;
    write_rows(rows, fmt, header, &mut *w)
}

fn open(path: &Path) -> CliResult<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn read_all(reader: &mut dyn BufRead) -> CliResult<Vec<Graph>> {
    read_graph6(reader)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())
}

fn read_input(input: &str) -> CliResult<Vec<Graph>> {
    if input == "-" {
        read_all(&mut io::stdin().lock())
    } else {
        read_all(&mut open(Path::new(input))?)
    }
}

fn need<T>(v: Option<T>, flag: &str, family: FamilyName) -> CliResult<T> {
    v.ok_or_else(|| format!("--{flag} is required for --family {family:?}").to_lowercase())
}

fn construct(a: &ConstructArgs, seed: u64) -> CliResult<Graph> {
    use FamilyName as F;
    let f = a.family;
    let base = || -> CliResult<Graph> {
        parse_graph6(&need(a.base.clone(), "base", f)?).map_err(|e| e.to_string())
    };
    let params = match f {
        F::Kneser => GraphFamilyParams::Kneser {
            n: need(a.n, "n", f)?,
            k: need(a.k, "k", f)?,
        },
        F::Complete => GraphFamilyParams::Complete {
            n: need(a.n, "n", f)?,
        },
        F::CompleteBipartite => GraphFamilyParams::CompleteBipartite {
            a: need(a.a, "a", f)?,
            b: need(a.b, "b", f)?,
        },
        F::Cycle => GraphFamilyParams::Cycle {
            n: need(a.n, "n", f)?,
        },
        F::Path => GraphFamilyParams::Path {
            n: need(a.n, "n", f)?,
        },
        F::Star => GraphFamilyParams::Star {
            n: need(a.n, "n", f)?,
        },
        F::Gnp => GraphFamilyParams::Gnp {
            n: need(a.n, "n", f)?,
            p: need(a.p, "p", f)?,
            seed,
        },
        F::Planar => GraphFamilyParams::MaxPlanar {
            n: need(a.n, "n", f)?,
            seed,
            flips: a.flips,
        },
        F::Blowup => GraphFamilyParams::Blowup {
            base: base()?,
            t: need(a.t, "t", f)?,
        },
        F::Copies => GraphFamilyParams::DisjointCopies {
            base: base()?,
            count: need(a.count, "count", f)?,
        },
    };
    params.realize().map_err(|e| e.to_string())
}

fn energy_row(g: &Graph) -> CliResult<EnergyRow> {
    let spec = eigenvalues_symmetric::<f64>(g).map_err(|e| e.to_string())?;
    let e = square_energies(&spec, None);
    let inr = inertia(&spec, None);
    Ok(EnergyRow {
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.m(),
        mu1: spec.largest(),
        n_plus: inr.n_plus,
        n_zero: inr.n_zero,
        n_minus: inr.n_minus,
        s_plus: e.s_plus,
        s_minus: e.s_minus,
        ratio: e.ratio_max,
        spread: e.spread,
    })
}

fn spectrum_row(family: String, spec: &RationalSpectrum) -> SpectrumRow {
    let e = exact_square_energies(spec);
    let inr = spec.inertia();
    SpectrumRow {
        family,
        n: spec.n().to_string(),
        mu1: spec.largest().map(ToString::to_string).unwrap_or_default(),
        spectrum: spec.render(),
        s_plus: e.s_plus.to_string(),
        s_minus: e.s_minus.to_string(),
        spread: e.spread.to_string(),
        n_plus: inr.n_plus,
        n_zero: inr.n_zero,
        n_minus: inr.n_minus,
    }
}

fn families(a: &FamiliesArgs, fmt: Format, out: Option<&Path>) -> CliResult<u8> {
    if let Some(study) = a.study {
        let study = match study {
            StudyName::GqRatio => GrowthStudy::GqRatio,
            StudyName::GqSquareCube => GrowthStudy::GqSquareCube,
            StudyName::TaylorSpread => GrowthStudy::TaylorSpread,
        };
        let grid = if a.grid.is_empty() {
            study.default_grid()
        } else {
            a.grid.clone()
        };
        let rows = ratio_growth_study(study, &grid, &a.exponents).map_err(|e| e.to_string())?;
        emit(&rows, fmt, true, out)?;
        return Ok(0);
    }
    let family = a.family.expect("clap requires --family or --study");
    let q = a.param.ok_or("--param is required with --family")?;
    let (label, params) = match family {
        SrgName::Gq => {
            let t = match a.t {
                Some(t) => t,
                None => q.checked_mul(q).ok_or("--param too large")?,
            };
            (format!("GQ({q},{t})"), gq_spectrum(q, t))
        }
        SrgName::Taylor => (format!("T_{q}"), taylor_spectrum(q)),
    };
    let spec = params.map_err(|e| e.to_string())?.spectrum();
    let (label, spec) = if a.blowup == 1 {
        (label, spec)
    } else {
        let b = blowup_spectrum(&spec, a.blowup).map_err(|e| e.to_string())?;
        (format!("{label}[{}]", a.blowup), b)
    };
    emit(&[spectrum_row(label, &spec)], fmt, true, out)?;
    Ok(0)
}

fn check(
    args: &SuiteArgs,
    tol: f64,
    fmt: Format,
    out: Option<&Path>,
    summary: bool,
) -> CliResult<u8> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: sqen_core::Error| e.to_string())?;
    let graphs = read_input(&args.input)?;
    let checks: &[CheckId] = suite.checks();
    let verdicts: Vec<Verdict> = graphs
        .par_iter()
        .map(|g| run_suite(g, checks, tol))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    emit(&verdicts, fmt, true, out)?;
    let s = summarize(&verdicts);
    for v in verdicts.iter().filter(|v| v.is_proven_failure()) {
        eprintln!(
            "theorem violated: {} on {} (lhs {:?}, rhs {:?}, margin {:?})",
            v.check_name, v.graph_id, v.lhs, v.rhs, v.margin
        );
    }
    for v in verdicts.iter().filter(|v| v.note.starts_with("error:")) {
        eprintln!("{} on {}: {}", v.check_name, v.graph_id, v.note);
    }
    if summary {
        eprintln!(
            "graphs: {}, verdicts: {}, applicable: {}, proven failures: {}, findings: {}, errors: {}",
            graphs.len(),
            s.verdicts,
            s.applicable,
            s.proven_failures,
            s.findings,
            s.errors
        );
    } else if s.findings > 0 {
        eprintln!(
            "findings: {} conjecture or report verdicts do not hold",
            s.findings
        );
    }
    Ok(if s.proven_failures > 0 {
        2
    } else if s.errors > 0 {
        1
    } else {
        0
    })
}
