use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ehrgraph::arrangements::{self, Layout};
use ehrgraph::checks::{self, Grid, SUITES};
use ehrgraph::ehrhart::{ehrhart_of, ratio_string};
use ehrgraph::lattice::{self, enumerate_p_points, enumerate_q_points};
use ehrgraph::multigraph::{enumerate_internally_eulerian, eulerian_count_formula};
use ehrgraph::nni::{apply_nni, canonicalize, NniTrail};
use ehrgraph::tree_geometry::{leaf_path_collections, skeleton_edges, tree_vertices_p};
use ehrgraph::{Error, MultiGraph, Polytope};

#[derive(Parser)]
#[command(name = "ehrgraph", version, about = "Lattice points and Ehrhart quasi-polynomials of {1,3}-graph polytopes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Q", alias = "q")]
    Q,
}

impl From<Which> for Polytope {
    fn from(w: Which) -> Self {
        match w {
            Which::P => Polytope::P,
            Which::Q => Polytope::Q,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print h, k, n, m and the number of internally Eulerian subgraphs.
    Stats { file: PathBuf },
    /// Count lattice points of the t-th dilation.
    Count {
        file: PathBuf,
        #[arg(long, value_enum)]
        polytope: Which,
        #[arg(long)]
        t: u64,
    },
    /// List lattice points of the t-th dilation.
    Points {
        file: PathBuf,
        #[arg(long, value_enum)]
        polytope: Which,
        #[arg(long)]
        t: u64,
        /// Also write the points as CSV: w-coordinates then z-coordinates.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Ehrhart quasi-polynomial and its period.
    Ehrhart {
        file: PathBuf,
        #[arg(long, value_enum)]
        polytope: Which,
        #[arg(long)]
        json: bool,
    },
    /// Period of the Ehrhart quasi-polynomial.
    Period {
        file: PathBuf,
        #[arg(long, value_enum)]
        polytope: Which,
    },
    /// Lattice points of tQ per internally Eulerian subgraph H.
    Cosets {
        file: PathBuf,
        #[arg(long)]
        t: u64,
    },
    /// Apply one NNI move and print the result as .g13.
    Nni {
        file: PathBuf,
        /// "a e b side"
        #[arg(long)]
        trail: String,
    },
    /// NNI moves to the caterpillar with the same h and k.
    Canonicalize { file: PathBuf },
    /// Vertices of P_T for a {1,3}-tree.
    TreeVertices { file: PathBuf },
    /// Edges of the 1-skeleton of P_T for a {1,3}-tree.
    Skeleton { file: PathBuf },
    /// Run the identity checks.
    Verify {
        /// Suite name; repeat for several. Default: all.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: Vec<String>,
        #[arg(long, default_value = "small", value_parser = ["small", "full"])]
        grid: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count curve arrangements on a triangulated sphere.
    Arrangements {
        file: PathBuf,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Also print the observed period of the count in t.
        #[arg(long)]
        period: bool,
        /// Comma-separated w (optionally followed by z) to draw.
        #[arg(long, requires = "svg")]
        point: Option<String>,
        /// Vertex coordinates, one "id x y" per line.
        #[arg(long, requires = "svg")]
        layout: Option<PathBuf>,
    },
}

enum Fail {
    Input(String),
    Budget(String),
    Verify,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::TooLarge { .. } | Error::Overflow => Fail::Budget(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<MultiGraph, Fail> {
    let g = MultiGraph::parse_g13(&read(path)?)?;
    g.require_one_three()?;
    Ok(g)
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn run(cmd: Cmd) -> Result<(), Fail> {
    match cmd {
        Cmd::Stats { file } => {
            let s = load(&file)?.stats();
            println!("h {}\nk {}\nn {}\nm {}\nN_G {}", s.h, s.k, s.n, s.m, eulerian_count_formula(&s));
        }
        Cmd::Count { file, polytope, t } => {
            println!("{}", lattice::count(&load(&file)?, polytope.into(), t)?);
        }
        Cmd::Points { file, polytope, t, csv } => {
            let g = load(&file)?;
            let rows: Vec<String> = match polytope {
                Which::P => enumerate_p_points(&g, t)?.iter().map(|p| join(&p.w)).collect(),
                Which::Q => enumerate_q_points(&g, t)?.iter().map(|p| join(&p.coords())).collect(),
            };
            for r in &rows {
                println!("{r}");
            }
            if let Some(path) = csv {
                let mut text = rows.join("\n");
                text.push('\n');
                write(&path, &text)?;
            }
        }
        Cmd::Ehrhart { file, polytope, json } => {
            let qp = ehrhart_of(&load(&file)?, polytope.into())?;
            let period = qp.period();
            if json {
                let mut v = qp.reduced().to_json();
                v["period"] = period.into();
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                println!("period {period}; {qp}");
            }
        }
        Cmd::Period { file, polytope } => {
            println!("{}", ehrhart_of(&load(&file)?, polytope.into())?.period());
        }
        Cmd::Cosets { file, t } => {
            let g = load(&file)?;
            for h in enumerate_internally_eulerian(&g)? {
                let edges: Vec<String> = h.iter().map(|e| e.to_string()).collect();
                println!("{{{}}}\t{}", edges.join(","), lattice::vol_coset(&g, h, t)?);
            }
        }
        Cmd::Nni { file, trail } => {
            let trail: NniTrail = trail.parse()?;
            print!("{}", apply_nni(&load(&file)?, trail)?.to_g13());
        }
        Cmd::Canonicalize { file } => {
            let (g, moves) = canonicalize(&load(&file)?)?;
            print!("{}", g.to_g13());
            for m in moves {
                println!("# {m}");
            }
        }
        Cmd::TreeVertices { file } => {
            let g = load(&file)?;
            let sets = leaf_path_collections(&g)?;
            for (h, v) in sets.iter().zip(tree_vertices_p(&g)?) {
                let edges: Vec<String> = h.iter().map(|e| e.to_string()).collect();
                let coords: Vec<String> = v.iter().map(ratio_string).collect();
                println!("{{{}}}\t{}", edges.join(","), coords.join(","));
            }
        }
        Cmd::Skeleton { file } => {
            for (a, b) in skeleton_edges(&load(&file)?)? {
                println!("{a} {b}");
            }
        }
        Cmd::Verify { suite, grid, jobs, json } => {
            let grid: Grid = grid.parse()?;
            let names: Vec<&str> = if suite.is_empty() { SUITES.to_vec() } else { suite.iter().map(String::as_str).collect() };
            let reports = checks::run_suites(&names, grid, jobs)?;
            if json {
                let v: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
                println!("{}", serde_json::to_string_pretty(&v).unwrap());
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            if reports.iter().any(|r| !r.passed()) {
                return Err(Fail::Verify);
            }
        }
        Cmd::Arrangements { file, t, svg, period, point, layout } => {
            let tri = arrangements::load_triangulation(&read(&file)?)?;
            println!("{}", arrangements::count_arrangements(&tri, t)?);
            if period {
                println!("period {}", arrangements::arrangement_period(&tri)?);
            }
            if let Some(path) = svg {
                let realization = match point {
                    Some(p) => Some(arrangements::realize_arrangement(&tri, &arrangements::parse_point(&tri, &p)?)?),
                    None => None,
                };
                let layout = match layout {
                    Some(l) => Some(Layout::parse(&tri, &read(&l)?)?),
                    None => None,
                };
                write(&path, &arrangements::emit_svg(&tri, realization.as_ref(), layout.as_ref())?)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Verify) => ExitCode::from(1),
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Fail::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
    }
}
