//! Command line front end for the exact polyhedral toolkit.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 precondition violation,
//! 4 budget exceeded without an answer.

mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use format::{format_point, format_polyhedron, parse_polyhedron, ParseError, Sections};
use revsplit::cuts::{cg_closure, closure_rank, split_closure, ClosureBudget, ClosureKind};
use revsplit::instances;
use revsplit::lattice::{integer_hull, is_relatively_lattice_free, lattice_width};
use revsplit::polyhedron::QPolyhedron;
use revsplit::rat::{parse_rat, QVec, Rat};
use revsplit::revrank::{
    find_certificate_with, find_cg_certificate, inflate_full_dim, mixed_infinite_rank_check,
    mixed_instance_from_certificate, spike_hull, SearchOptions,
};

#[derive(Parser)]
#[command(
    name = "revsplit",
    about = "Exact split/CG closures, budgeted ranks, and reverse split rank certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Polyhedron file in the H/V text format.
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    /// Built-in instance name (see `revsplit examples`).
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
}

impl Input {
    fn load(&self) -> Result<QPolyhedron> {
        match (&self.input, &self.builtin) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("cannot read {}", path.display()))?;
                parse_polyhedron(&text)
            }
            (None, Some(name)) => instances::builtin(name)
                .ok_or_else(|| anyhow!(Usage(format!("unknown builtin `{name}`")))),
            _ => Err(anyhow!(Usage(
                "exactly one of --input/--builtin required".into()
            ))),
        }
    }
}

/// Marker for usage-level failures (exit 1).
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for Usage {}

/// Marker for budget-exhausted-without-answer outcomes (exit 4).
#[derive(Debug)]
struct BudgetExceeded(String);

impl std::fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for BudgetExceeded {}

#[derive(Clone, Copy, ValueEnum)]
enum To {
    H,
    V,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Split,
    Cg,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between representations; output is canonical in both.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "both")]
        to: To,
    },
    /// Integer hull of a bounded polyhedron.
    Hull {
        #[command(flatten)]
        input: Input,
    },
    /// One round of a budgeted closure.
    Closure {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "split")]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        norm_bound: u32,
        /// Restrict split normals to the first K coordinates (mixed case).
        #[arg(long)]
        mixed_k: Option<usize>,
    },
    /// Budgeted closure rank: iterate until the integer hull is reached.
    Rank {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "split")]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        norm_bound: u32,
        #[arg(long, default_value_t = 32)]
        max_rounds: u32,
        /// Also print every intermediate polyhedron.
        #[arg(long)]
        trajectory: bool,
    },
    /// Budgeted lattice width.
    Width {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        budget: u32,
    },
    /// Relative lattice-freeness with witness.
    LatticeFree {
        #[command(flatten)]
        input: Input,
    },
    /// Search for an infinite-reverse-split-rank certificate.
    Certify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        entry_budget: u32,
        #[arg(long, default_value_t = 2)]
        dir_budget: u32,
        /// Cap on the candidate subspace dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        /// Minimum candidate face dimension (2 is always sound).
        #[arg(long, default_value_t = 2)]
        min_face_dim: usize,
    },
    /// Search for an infinite-reverse-CG-rank certificate direction.
    CgCertify {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        entry_budget: u32,
    },
    /// Mixed-integer infinite split rank test for one valid inequality.
    MiCheck {
        #[command(flatten)]
        input: Input,
        /// Number of leading integer coordinates.
        #[arg(long)]
        k: usize,
        /// The inequality, e.g. "0 0 1 <= 0".
        #[arg(long, value_name = "INEQ")]
        ineq: String,
        #[arg(long, default_value_t = 2)]
        dir_budget: u32,
    },
    /// Build one of the named relaxation constructions.
    Construct {
        #[command(subcommand)]
        what: Construct,
    },
    /// Run one of the built-in experiments.
    Experiment {
        #[command(subcommand)]
        what: Experiment,
    },
    /// List the built-in instances.
    Examples,
}

#[derive(Subcommand)]
enum Construct {
    /// Pyramid conv(triangle3d, (1/2, 1/2, t)).
    Qt {
        #[arg(long)]
        t: String,
    },
    /// Symmetric spike hull clconv(F, xbar +- lambda v).
    Spike {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lambda: String,
        /// Relative interior point, e.g. "1/2 1/2 0".
        #[arg(long)]
        xbar: String,
        /// Integer spike direction; repeat for several.
        #[arg(long = "dir", required = true)]
        dirs: Vec<String>,
    },
    /// Full-dimensional inflation conv(P, xbar + eps b_j).
    Inflate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        xbar: String,
        /// Basis vector of the affine-hull complement; repeat as needed.
        #[arg(long = "basis")]
        basis: Vec<String>,
    },
    /// Mixed-integer relaxation built from a certificate of the input.
    Prop72 {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        entry_budget: u32,
        #[arg(long, default_value_t = 2)]
        dir_budget: u32,
        /// Relative interior point of the certificate face (defaults to the
        /// canonical one).
        #[arg(long)]
        xbar: Option<String>,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// Budgeted rank of the qt pyramid over a t grid; CSV output.
    Growth {
        /// Comma-separated list of t values, e.g. "1,2,4,8,16".
        #[arg(long, default_value = "1,2,4,8,16")]
        t: String,
        #[arg(long, default_value_t = 2)]
        norm_bound: u32,
        #[arg(long, default_value_t = 64)]
        max_rounds: u32,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads over the t grid (output order is fixed).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn parse_rat_arg(s: &str, what: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| anyhow!(Usage(format!("invalid {what} `{s}`"))))
}

fn parse_point_arg(s: &str, what: &str) -> Result<QVec> {
    s.split_whitespace()
        .map(|tok| parse_rat_arg(tok, what))
        .collect()
}

fn parse_int_vec_arg(s: &str, what: &str) -> Result<Vec<revsplit::rat::Int>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<revsplit::rat::Int>()
                .map_err(|_| anyhow!(Usage(format!("invalid {what} `{s}`"))))
        })
        .collect()
}

/// Parses "c_1 .. c_n <= d".
fn parse_ineq_arg(s: &str) -> Result<(QVec, Rat)> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    let pos = tokens
        .iter()
        .position(|&t| t == "<=")
        .ok_or_else(|| anyhow!(Usage(format!("inequality `{s}` needs `<=`"))))?;
    if pos + 2 != tokens.len() {
        bail!(Usage(format!("inequality `{s}` needs a single bound")));
    }
    let normal: QVec = tokens[..pos]
        .iter()
        .map(|tok| parse_rat_arg(tok, "coefficient"))
        .collect::<Result<_>>()?;
    let rhs = parse_rat_arg(tokens[pos + 1], "bound")?;
    Ok((normal, rhs))
}

fn kind_of(kind: Kind) -> ClosureKind {
    match kind {
        Kind::Split => ClosureKind::Split,
        Kind::Cg => ClosureKind::Cg,
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Split => "split",
        Kind::Cg => "cg",
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Convert { input, to } => {
            let p = input.load()?.dd_convert();
            let sections = match to {
                To::H => Sections::H,
                To::V => Sections::V,
                To::Both => Sections::Both,
            };
            print!("{}", format_polyhedron(&p, sections));
        }
        Command::Hull { input } => {
            let p = input.load()?;
            let hull = integer_hull(&p)?;
            print!("{}", format_polyhedron(&hull, Sections::Both));
        }
        Command::Closure {
            input,
            kind,
            norm_bound,
            mixed_k,
        } => {
            let p = input.load()?;
            let mut budget = ClosureBudget::new(norm_bound, 1);
            if let Some(k) = mixed_k {
                if matches!(kind, Kind::Cg) {
                    bail!(Usage("--mixed-k applies to the split closure only".into()));
                }
                budget = budget.with_mixed_k(k);
            }
            let closed = match kind {
                Kind::Split => split_closure(&p, &budget),
                Kind::Cg => cg_closure(&p, &budget),
            };
            println!("# {} closure, norm bound {}", kind_name(kind), norm_bound);
            print!("{}", format_polyhedron(&closed, Sections::Both));
        }
        Command::Rank {
            input,
            kind,
            norm_bound,
            max_rounds,
            trajectory,
        } => {
            let p = input.load()?;
            let budget = ClosureBudget::new(norm_bound, max_rounds);
            let report = closure_rank(&p, &budget, kind_of(kind))?;
            println!("kind: {}", kind_name(kind));
            println!("norm_bound: {norm_bound}");
            println!("max_rounds: {max_rounds}");
            println!("rank: {}", report.rank);
            println!("reached_hull: {}", report.reached_hull);
            println!("rounds: {}", report.trajectory.len() - 1);
            if trajectory {
                for (i, step) in report.trajectory.iter().enumerate() {
                    println!("# round {i}");
                    print!("{}", format_polyhedron(step, Sections::V));
                }
            }
            if !report.reached_hull {
                bail!(BudgetExceeded(format!(
                    "hull not reached after {} rounds at norm bound {norm_bound}",
                    report.trajectory.len() - 1
                )));
            }
        }
        Command::Width { input, budget } => {
            let p = input.load()?;
            let w = lattice_width(&p, budget)?;
            println!("budget: {}", w.budget);
            match (w.width, w.direction) {
                (Some(width), Some(dir)) => {
                    println!("width: {}", revsplit::rat::format_rat(&width));
                    let coords: Vec<String> = dir.iter().map(|x| x.to_string()).collect();
                    println!("direction: {}", coords.join(" "));
                }
                _ => println!("width: +inf"),
            }
        }
        Command::LatticeFree { input } => {
            let p = input.load()?;
            let (free, witness) = is_relatively_lattice_free(&p)?;
            println!("relatively_lattice_free: {free}");
            if let Some(w) = witness {
                let coords: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                println!("witness: {}", coords.join(" "));
            }
        }
        Command::Certify {
            input,
            entry_budget,
            dir_budget,
            max_dim,
            min_face_dim,
        } => {
            let p = input.load()?;
            let opts = SearchOptions {
                min_face_dim,
                max_subspace_dim: max_dim,
            };
            match find_certificate_with(&p, entry_budget, dir_budget, &opts)? {
                Some(cert) => print!("{cert}"),
                None => bail!(BudgetExceeded(format!(
                    "no certificate within budgets (entry {entry_budget}, direction {dir_budget})"
                ))),
            }
        }
        Command::CgCertify {
            input,
            entry_budget,
        } => {
            let p = input.load()?;
            match find_cg_certificate(&p, entry_budget)? {
                Some(l) => {
                    println!("subspace: {l}");
                    println!("entry_budget: {entry_budget}");
                }
                None => bail!(BudgetExceeded(format!(
                    "no CG certificate within entry budget {entry_budget}"
                ))),
            }
        }
        Command::MiCheck {
            input,
            k,
            ineq,
            dir_budget,
        } => {
            let p = input.load()?;
            let (normal, rhs) = parse_ineq_arg(&ineq)?;
            if normal.len() != p.ambient() {
                bail!(Usage(format!(
                    "inequality has {} coefficients but the polyhedron lives in dimension {}",
                    normal.len(),
                    p.ambient()
                )));
            }
            let res = mixed_infinite_rank_check(&p, k, &normal, &rhs, dir_budget)?;
            println!("dir_budget: {}", res.dir_budget);
            println!("faces_checked: {}", res.faces_checked);
            println!("infinite_split_rank: {}", res.infinite);
            if let Some(m) = res.qualifying_face {
                println!("qualifying_face_tight_set: {:?}", m.descriptor.tight);
                print!("{}", format_polyhedron(&m.polyhedron, Sections::V));
            }
        }
        Command::Construct { what } => construct(what)?,
        Command::Experiment { what } => experiment(what)?,
        Command::Examples => {
            for name in instances::BUILTIN_NAMES {
                let p = instances::builtin(name).expect("listed builtin");
                println!(
                    "{name}: dimension {}, {} generator point(s)",
                    p.ambient(),
                    p.vrep().points.len()
                );
            }
        }
    }
    Ok(())
}

fn construct(what: Construct) -> Result<()> {
    match what {
        Construct::Qt { t } => {
            let t = parse_rat_arg(&t, "t")?;
            let q = instances::qt_pyramid(&t)?;
            print!("{}", format_polyhedron(&q, Sections::Both));
        }
        Construct::Spike {
            input,
            lambda,
            xbar,
            dirs,
        } => {
            let f = input.load()?;
            let lambda = parse_rat_arg(&lambda, "lambda")?;
            let xbar = parse_point_arg(&xbar, "xbar coordinate")?;
            let dirs: Vec<Vec<revsplit::rat::Int>> = dirs
                .iter()
                .map(|d| parse_int_vec_arg(d, "direction entry"))
                .collect::<Result<_>>()?;
            let q = spike_hull(&f, &xbar, &dirs, &lambda)?;
            print!("{}", format_polyhedron(&q, Sections::Both));
        }
        Construct::Inflate {
            input,
            eps,
            xbar,
            basis,
        } => {
            let p = input.load()?;
            let eps = parse_rat_arg(&eps, "eps")?;
            let xbar = parse_point_arg(&xbar, "xbar coordinate")?;
            let basis: Vec<QVec> = basis
                .iter()
                .map(|b| parse_point_arg(b, "basis entry"))
                .collect::<Result<_>>()?;
            let out = inflate_full_dim(&p, &xbar, &basis, &eps)?;
            if let Some(preserved) = out.integer_points_preserved {
                println!("# integer points preserved: {preserved}");
            }
            print!("{}", format_polyhedron(&out.polyhedron, Sections::Both));
        }
        Construct::Prop72 {
            input,
            entry_budget,
            dir_budget,
            xbar,
        } => {
            let p = input.load()?;
            let opts = SearchOptions::default();
            let cert = find_certificate_with(&p, entry_budget, dir_budget, &opts)?
                .ok_or_else(|| {
                    anyhow!(BudgetExceeded(format!(
                        "no certificate within budgets (entry {entry_budget}, direction {dir_budget})"
                    )))
                })?;
            let xbar = match &xbar {
                Some(s) => Some(parse_point_arg(s, "xbar coordinate")?),
                None => None,
            };
            let inst = mixed_instance_from_certificate(
                &p,
                &cert.face_polyhedron,
                &cert.subspace,
                xbar.as_deref(),
            )?;
            println!("# integer coordinates: {}", inst.k);
            println!("# projected base point: {}", format_point(&inst.apex_base));
            print!("{}", format_polyhedron(&inst.q, Sections::Both));
        }
    }
    Ok(())
}

fn experiment(what: Experiment) -> Result<()> {
    match what {
        Experiment::Growth {
            t,
            norm_bound,
            max_rounds,
            out,
            threads,
        } => {
            if threads == 0 {
                bail!(Usage("--threads must be at least 1".into()));
            }
            let ts: Vec<Rat> = t
                .split(',')
                .map(|tok| parse_rat_arg(tok.trim(), "t value"))
                .collect::<Result<_>>()?;
            if ts.is_empty() {
                bail!(Usage("empty t grid".into()));
            }
            let budget = ClosureBudget::new(norm_bound, max_rounds);
            let mut rows: Vec<Option<String>> = vec![None; ts.len()];
            let indexed: Vec<(usize, Rat)> = ts.into_iter().enumerate().collect();
            std::thread::scope(|scope| -> Result<()> {
                let mut handles = Vec::new();
                for chunk in indexed.chunks(indexed.len().div_ceil(threads)) {
                    let budget = budget.clone();
                    handles.push(scope.spawn(move || -> Result<Vec<(usize, String)>> {
                        let mut done = Vec::new();
                        for (i, t) in chunk {
                            let q = instances::qt_pyramid(t)?;
                            let report = closure_rank(&q, &budget, ClosureKind::Split)?;
                            done.push((
                                *i,
                                format!(
                                    "{},{},{},{},{}",
                                    revsplit::rat::format_rat(t),
                                    report.rank,
                                    report.reached_hull,
                                    report.trajectory.len() - 1,
                                    budget.norm_bound
                                ),
                            ));
                        }
                        Ok(done)
                    }));
                }
                for h in handles {
                    for (i, row) in h.join().expect("worker panicked")? {
                        rows[i] = Some(row);
                    }
                }
                Ok(())
            })?;
            let mut csv = String::from("t,rank,reached_hull,rounds,budget\n");
            for row in rows {
                csv.push_str(&row.expect("all rows computed"));
                csv.push('\n');
            }
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{csv}"),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(u) = e.downcast_ref::<Usage>() {
                eprintln!("usage error: {u}");
                ExitCode::from(1)
            } else if let Some(p) = e.downcast_ref::<ParseError>() {
                eprintln!("parse error: {p}");
                ExitCode::from(2)
            } else if let Some(b) = e.downcast_ref::<BudgetExceeded>() {
                eprintln!("{b}");
                ExitCode::from(4)
            } else if let Some(core) = e.downcast_ref::<revsplit::Error>() {
                eprintln!("error: {core}");
                ExitCode::from(3)
            } else {
                // IO and other environment failures count as input problems.
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        }
    }
}
