use std::fmt;
use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cauchon_core::diagram::{enumerate, DiagramError};
use cauchon_core::minors::{cross_validate_with, generators_with, qdet, MinorError};
use cauchon_core::pathmatrix::{path_matrix_with, restore};
use cauchon_core::qtorus::json::element_to_json;
use cauchon_core::{BMatrix, CapExceeded, CauchonDiagram, CauchonGraph, Exec, MinorIndex};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Cauchon diagrams, their path matrices, and the quantum minors that vanish.
#[derive(Parser, Debug)]
#[command(name = "cauchon", version)]
struct Cli {
    /// Run every computation on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the Cauchon condition. Exit 0 if valid, 1 if not, 2 on a parse error.
    Validate { file: PathBuf },
    /// List every m x n Cauchon diagram.
    Enumerate {
        m: usize,
        n: usize,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
        /// Refuse shapes with more than this many squares.
        #[arg(long, default_value_t = 20)]
        max_cells: usize,
    },
    /// Print the Cauchon graph.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Print the path matrix.
    PathMatrix {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Paths)]
        method: Method,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        /// Text output (the default).
        #[arg(long)]
        text: bool,
        /// Largest number of paths summed into one entry.
        #[arg(long, default_value_t = 1_000_000)]
        max_paths: usize,
    },
    /// Quantum determinant of the submatrix on rows I and columns J.
    Qdet {
        file: PathBuf,
        #[arg(short = 'I', value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(short = 'J', value_delimiter = ',', required = true)]
        cols: Vec<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1_000_000)]
        max_paths: usize,
    },
    /// List every vanishing quantum minor.
    Generators {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the determinant and path criteria on every minor.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_paths: usize,
    },
    /// Write generators of every m x n diagram to <out>/census_<m>x<n>.jsonl.
    Census {
        m: usize,
        n: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_cells: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Paths,
    Restore,
    Both,
}

enum Failure {
    /// A well-formed input with a negative answer.
    Negative(String),
    Usage(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Negative(s) | Failure::Usage(s) | Failure::Cap(s) => f.write_str(s),
        }
    }
}

impl From<CapExceeded> for Failure {
    fn from(e: CapExceeded) -> Self {
        Failure::Cap(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        if e.is_violation() {
            Failure::Negative(format!("not a Cauchon diagram: {e}"))
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<MinorError> for Failure {
    fn from(e: MinorError) -> Self {
        match e {
            MinorError::Cap(c) => c.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_diagram(path: &PathBuf) -> Result<CauchonDiagram, Failure> {
    Ok(CauchonDiagram::parse(&read_input(path)?)?)
}

fn check_cells(m: usize, n: usize, max_cells: usize) -> Result<(), Failure> {
    if m == 0 || n == 0 {
        return Err(Failure::Usage(format!("shape {m}x{n} must be positive")));
    }
    if m * n > max_cells {
        return Err(Failure::Cap(format!(
            "{m}x{n} has more than {max_cells} squares; raise --max-cells to continue"
        )));
    }
    Ok(())
}

fn index_json(idx: &MinorIndex) -> Value {
    json!({ "I": idx.rows(), "J": idx.cols(), "k": idx.k() })
}

fn diagram_json(d: &CauchonDiagram) -> Value {
    let rows: Vec<String> = d.to_string().lines().map(str::to_owned).collect();
    json!({ "m": d.m(), "n": d.n(), "rows": rows })
}

fn matrix_by(
    method: Method,
    d: &CauchonDiagram,
    max_paths: usize,
    exec: Exec,
) -> Result<BMatrix, Failure> {
    match method {
        Method::Restore => Ok(restore(d)),
        _ => Ok(path_matrix_with(&CauchonGraph::build(d), max_paths, exec)?),
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.command {
        Command::Validate { file } => {
            let d = read_diagram(&file)?;
            writeln!(out, "valid {}x{} Cauchon diagram", d.m(), d.n())?;
        }
        Command::Enumerate {
            m,
            n,
            json,
            max_cells,
        } => {
            check_cells(m, n, max_cells)?;
            for d in enumerate(m, n) {
                if json {
                    writeln!(out, "{}", diagram_json(&d))?;
                } else {
                    writeln!(out, "{d}")?;
                }
            }
        }
        Command::Graph { file, format } => {
            let g = CauchonGraph::build(&read_diagram(&file)?);
            match format {
                GraphFormat::Dot => write!(out, "{}", g.to_dot())?,
                GraphFormat::Text => write!(out, "{}", g.to_text())?,
            }
        }
        Command::PathMatrix {
            file,
            method,
            json,
            text: _,
            max_paths,
        } => {
            let d = read_diagram(&file)?;
            let matrix = matrix_by(method, &d, max_paths, exec)?;
            if method == Method::Both && restore(&d) != matrix {
                return Err(Failure::Negative(
                    "path matrix and restoration disagree".into(),
                ));
            }
            if json {
                writeln!(out, "{}", matrix.to_json())?;
            } else {
                write!(out, "{matrix}")?;
            }
        }
        Command::Qdet {
            file,
            rows,
            cols,
            json,
            max_paths,
        } => {
            let d = read_diagram(&file)?;
            let idx = MinorIndex::new(rows, cols)?;
            if !idx.fits(d.m(), d.n()) {
                return Err(Failure::Usage(format!(
                    "minor {idx} does not fit a {}x{} diagram",
                    d.m(),
                    d.n()
                )));
            }
            let matrix = path_matrix_with(&CauchonGraph::build(&d), max_paths, exec)?;
            let det = qdet(&matrix, &idx)?;
            if json {
                let v = json!({
                    "I": idx.rows(),
                    "J": idx.cols(),
                    "qdet": element_to_json(&det),
                    "vanishes": det.is_zero(),
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{det}")?;
            }
        }
        Command::Generators { file, json } => {
            let d = read_diagram(&file)?;
            let gens = generators_with(&d, exec);
            if json {
                let list: Vec<Value> = gens.iter().map(index_json).collect();
                writeln!(out, "{}", Value::Array(list))?;
            } else {
                for idx in &gens {
                    writeln!(out, "{idx}")?;
                }
            }
        }
        Command::Verify { file, max_paths } => {
            let d = read_diagram(&file)?;
            let report = cross_validate_with(&d, max_paths, exec)?;
            for (k, tally) in &report.per_size {
                writeln!(
                    out,
                    "size {k}: {} minors, {} vanishing",
                    tally.minors, tally.vanishing
                )?;
            }
            let paths = path_matrix_with(&CauchonGraph::build(&d), max_paths, exec)?;
            let agrees = paths == restore(&d);
            writeln!(
                out,
                "restoration {}",
                if agrees {
                    "matches path matrix"
                } else {
                    "DIFFERS from path matrix"
                }
            )?;
            for v in &report.violations {
                writeln!(
                    out,
                    "violation: {} qdet vanishes = {}, disjoint system exists = {}",
                    v.index, v.qdet_vanishes, v.system_exists
                )?;
            }
            if !report.is_clean() || !agrees {
                return Err(Failure::Negative(format!(
                    "{} violations out of {} minors",
                    report.violations.len(),
                    report.checked
                )));
            }
            writeln!(out, "ok: {} minors checked", report.checked)?;
        }
        Command::Census {
            m,
            n,
            out: dir,
            max_cells,
        } => {
            check_cells(m, n, max_cells)?;
            fs::create_dir_all(&dir)?;
            let path = dir.join(format!("census_{m}x{n}.jsonl"));
            let mut file = BufWriter::new(File::create(&path)?);
            let mut records = 0;
            for d in enumerate(m, n) {
                let gens = generators_with(&d, exec);
                let mut counts = serde_json::Map::new();
                for idx in &gens {
                    let entry = counts.entry(idx.k().to_string()).or_insert(json!(0));
                    *entry = json!(entry.as_u64().unwrap() + 1);
                }
                let record = json!({
                    "diagram": d.to_string().trim_end(),
                    "generators": gens.iter().map(index_json).collect::<Vec<_>>(),
                    "counts": counts,
                });
                writeln!(file, "{record}")?;
                records += 1;
            }
            file.flush()?;
            writeln!(out, "wrote {records} records to {}", path.display())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cauchon: {e}");
            ExitCode::from(e.code())
        }
    }
}
