use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use realtoric::cover::{moment_angle_euler, validate, CharMatrix, SmallCover};
use realtoric::error::Error;
use realtoric::families::{graph_associahedron_cover, permutahedron_cover, secant_numbers};
use realtoric::gf2::is_nonsingular_gf2;
use realtoric::io::{GraphFile, ProblemFile};
use realtoric::report::{FaceCheck, MaEulerReport, Report, ValidationReport};
use realtoric::SimplicialComplex;

const EXIT_MALFORMED: u8 = 2;
const EXIT_VALIDATION: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser)]
#[command(
    name = "realtoric",
    version,
    about = "Betti numbers of real toric manifolds from characteristic matrices over GF(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the nonsingular-minor condition at every maximal face
    Validate {
        /// Problem JSON file bundling a complex and a characteristic matrix
        file: PathBuf,
        /// Emit the validation report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Betti numbers, orientability and Euler characteristic of a problem file
    Betti {
        /// Problem JSON file bundling a complex and a characteristic matrix
        file: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Built-in permutahedral cover of order n, checked against the closed form
    Permutahedron {
        /// Order of the permutahedron (at least 2)
        n: usize,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Cover over the graph associahedron of a connected graph file
    GraphAssoc {
        /// Graph JSON file ({"n": ..., "edges": [[a,b],...]}, 1-based)
        file: PathBuf,
        #[command(flatten)]
        flags: RunFlags,
    },
    /// Compare the moment-angle Euler characteristic with the scaled cover value
    MaEuler {
        /// Problem JSON file bundling a complex and a characteristic matrix
        file: PathBuf,
        /// Emit the comparison as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the secant numbers A_0 … A_{2k}
    Secant {
        k: usize,
        /// Emit the table as JSON
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct RunFlags {
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Include per-subset contributions in the report
    #[arg(long)]
    breakdown: bool,
    /// Cap the number of worker threads
    #[arg(long)]
    jobs: Option<usize>,
    /// Write the (generated) problem JSON to this path for reuse
    #[arg(long)]
    emit: Option<PathBuf>,
}

type CliResult<T> = Result<T, (u8, String)>;

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err((code, message)) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Validate { file, json } => cmd_validate(&file, json),
        Command::Betti { file, flags } => {
            let (k, chi) = read_problem(&file)?;
            let cover = validate(k, chi).map_err(classify)?;
            run_cover(&file.display().to_string(), cover, None, &flags)
        }
        Command::Permutahedron { n, flags } => {
            let cover = permutahedron_cover(n).map_err(classify)?;
            run_cover(&format!("permutahedron order {n}"), cover, Some(n), &flags)
        }
        Command::GraphAssoc { file, flags } => {
            let graph = read_graph(&file)?;
            let cover = graph_associahedron_cover(&graph).map_err(classify)?;
            run_cover(&file.display().to_string(), cover, None, &flags)
        }
        Command::MaEuler { file, json } => cmd_ma_euler(&file, json),
        Command::Secant { k, json } => cmd_secant(k, json),
    }
}

/// Maps library errors to the exit code classes: malformed input (2),
/// failed validation (3), internal cross-check failure (4).
fn classify(e: Error) -> (u8, String) {
    let code = match e {
        Error::VertexOutOfRange { .. }
        | Error::RepeatedVertex { .. }
        | Error::LabelCountMismatch { .. }
        | Error::DuplicateLabel { .. }
        | Error::BadParameter(_)
        | Error::EdgeOutOfRange { .. }
        | Error::LoopEdge(_)
        | Error::DisconnectedGraph => EXIT_MALFORMED,
        Error::NotPure { .. }
        | Error::EmptyComplex
        | Error::NotSquare { .. }
        | Error::BadCharMatrixShape { .. }
        | Error::ZeroColumn { .. }
        | Error::ColumnLengthMismatch { .. }
        | Error::FacetCountMismatch { .. }
        | Error::SingularMinor { .. } => EXIT_VALIDATION,
        Error::Inconsistency(_) => EXIT_MISMATCH,
    };
    (code, e.to_string())
}

fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| (EXIT_MALFORMED, format!("cannot read {}: {e}", path.display())))
}

fn read_problem(path: &Path) -> CliResult<(SimplicialComplex, CharMatrix)> {
    let text = read_text(path)?;
    let problem: ProblemFile = serde_json::from_str(&text)
        .map_err(|e| (EXIT_MALFORMED, format!("malformed problem file: {e}")))?;
    let k = problem.complex.to_complex().map_err(classify)?;
    let chi = problem.chi.to_char_matrix().map_err(classify)?;
    Ok((k, chi))
}

fn read_graph(path: &Path) -> CliResult<realtoric::Graph> {
    let text = read_text(path)?;
    let file: GraphFile = serde_json::from_str(&text)
        .map_err(|e| (EXIT_MALFORMED, format!("malformed graph file: {e}")))?;
    file.to_graph().map_err(classify)
}

fn in_pool<T: Send>(jobs: Option<usize>, task: impl FnOnce() -> T + Send) -> CliResult<T> {
    match jobs {
        None => Ok(task()),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| (EXIT_MALFORMED, format!("cannot build worker pool: {e}")))
            .map(|pool| pool.install(task)),
    }
}

/// Shared tail of the three computing subcommands: report, closed-form
/// verdict for the permutahedral generator, optional problem emission.
fn run_cover(
    input: &str,
    cover: SmallCover,
    closed_form_order: Option<usize>,
    flags: &RunFlags,
) -> CliResult<ExitCode> {
    if let Some(warning) = cover.connectivity_warning() {
        eprintln!("warning: {warning}");
    }
    if let Some(path) = &flags.emit {
        let json = serde_json::to_string_pretty(&ProblemFile::from_cover(&cover))
            .expect("problem serialization cannot fail");
        std::fs::write(path, json + "\n")
            .map_err(|e| (EXIT_MALFORMED, format!("cannot write {}: {e}", path.display())))?;
        eprintln!("wrote problem file {}", path.display());
    }
    let started = Instant::now();
    let mut report =
        in_pool(flags.jobs, || Report::for_cover(input, &cover, flags.breakdown))?
            .map_err(classify)?;
    let elapsed = started.elapsed();
    let matched = match closed_form_order {
        Some(order) => report.attach_closed_form(order),
        None => true,
    };
    if flags.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_human());
        println!("elapsed: {:.1} ms", elapsed.as_secs_f64() * 1e3);
    }
    Ok(if matched {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn cmd_validate(path: &Path, json: bool) -> CliResult<ExitCode> {
    let (k, chi) = read_problem(path)?;
    // the shape preconditions of validation, surfaced one by one
    if chi.m() != k.vertex_count() {
        return Err(classify(Error::FacetCountMismatch {
            cols: chi.m(),
            m: k.vertex_count(),
        }));
    }
    if k.is_void() {
        return Err(classify(Error::EmptyComplex));
    }
    let n = chi.n();
    if !k.is_pure(n as i32 - 1) {
        return Err(classify(Error::NotPure {
            expected: n as i32 - 1,
        }));
    }
    let faces: Vec<FaceCheck> = k
        .maximal_faces()
        .map(|face| {
            let ok = is_nonsingular_gf2(&chi.minor(face)).expect("purity makes minors square");
            FaceCheck {
                face: face.clone(),
                labels: face.iter().map(|&v| k.label(v).to_string()).collect(),
                ok,
            }
        })
        .collect();
    let valid = faces.iter().all(|f| f.ok);
    let report = ValidationReport {
        input: path.display().to_string(),
        n,
        m: k.vertex_count(),
        faces,
        valid,
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_human());
    }
    if valid {
        let cover = validate(k, chi).map_err(classify)?;
        if let Some(warning) = cover.connectivity_warning() {
            eprintln!("warning: {warning}");
        }
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(EXIT_VALIDATION))
    }
}

fn cmd_ma_euler(path: &Path, json: bool) -> CliResult<ExitCode> {
    let (k, chi) = read_problem(path)?;
    let cover = validate(k, chi).map_err(classify)?;
    let moment = moment_angle_euler(cover.complex(), cover.m()).map_err(classify)?;
    let cover_euler = cover.euler_characteristic().map_err(classify)?;
    let scaled = (cover_euler as i128)
        .checked_mul(1i128 << (cover.m() - cover.n()))
        .ok_or_else(|| (EXIT_MALFORMED, "scaled Euler characteristic overflows".to_string()))?;
    let report = MaEulerReport {
        input: path.display().to_string(),
        n: cover.n(),
        m: cover.m(),
        moment_angle_euler: moment.to_string(),
        cover_euler,
        scaled_cover_euler: scaled.to_string(),
        verdict: if moment == scaled { "MATCH" } else { "MISMATCH" }.to_string(),
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_human());
    }
    Ok(if moment == scaled {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn cmd_secant(k: usize, json: bool) -> CliResult<ExitCode> {
    if k > 2000 {
        return Err((
            EXIT_MALFORMED,
            format!("secant table of {k} entries is beyond reasonable use"),
        ));
    }
    let table = secant_numbers(k);
    if json {
        let values: Vec<String> = table.entries().iter().map(|a| a.to_string()).collect();
        let out = serde_json::json!({ "k": k, "values": values });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        for (i, a) in table.entries().iter().enumerate() {
            println!("A_{} = {}", 2 * i, a);
        }
    }
    Ok(ExitCode::SUCCESS)
}
