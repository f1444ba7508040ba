//! `flatspan`: generate configurations, analyse them, and check claims.
//!
//! Exit status: 0 when every check passes or is not applicable, 1 when a
//! check fails, 2 on input errors. `FLATSPAN_THREADS` sets the worker count;
//! results do not depend on it.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use flatspan::constructions::{self, generic_origin};
use flatspan::io::{self, Document};
use flatspan::report::{analyze, render_text, AnalyzeOptions};
use flatspan::verify::{run_claim, ClaimOptions, ClaimReport, Facts, Status, CLAIMS};
use flatspan::weighted::WeightFn;
use flatspan::{Config, Flat, Origin};

#[derive(Parser)]
#[command(
    name = "flatspan",
    version,
    about = "Exact spanned-flat analysis of rational point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a named construction to a file.
    ///
    /// skew-lines <per-line> <lines> <ambient> | hypercube <k> |
    /// hypercube-raised <k> <m> | cross-polytope <d> |
    /// cross-polytope-raised <j> <m> | near-pencil <n> | collinear <n> <d>
    Gen {
        name: String,
        params: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Full report: f-vector, multiplicities, g-vector, witnesses, claims.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Enumerate flats only up to this dimension.
        #[arg(long)]
        kmax: Option<usize>,
        /// Designate point `i` as the origin.
        #[arg(long)]
        origin: Option<usize>,
        /// Skip the claim checks.
        #[arg(long)]
        no_claims: bool,
        /// Print per-claim runtimes to stderr.
        #[arg(long)]
        timings: bool,
    },
    /// Run one claim check.
    Check {
        claim: String,
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        /// Weight function: one, reciprocal, or step:<t>.
        #[arg(long = "F", value_name = "NAME")]
        function: Option<String>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        timings: bool,
    },
    /// Project from the span of the given points.
    Project {
        file: PathBuf,
        /// Comma-separated point indices spanning the center.
        #[arg(long, value_delimiter = ',', required = true)]
        center: Vec<usize>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Add `m` axis points through the origin in a new dimension.
    Raise {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        /// Use a computed generic origin instead of the file's origin.
        #[arg(long)]
        generic_origin: bool,
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn load(path: &Path) -> Result<Document> {
    io::load_document(path).with_context(|| format!("reading {}", path.display()))
}

fn save(config: &Config, path: &Path) -> Result<()> {
    io::save_config(config, path).with_context(|| format!("writing {}", path.display()))
}

fn params<const N: usize>(name: &str, p: &[usize]) -> Result<[usize; N]> {
    p.try_into()
        .map_err(|_| anyhow::anyhow!("`{name}` takes {N} parameter(s), got {}", p.len()))
}

fn generate(name: &str, p: &[usize]) -> Result<Config> {
    Ok(match name {
        "skew-lines" => {
            let [a, b, c] = params(name, p)?;
            constructions::skew_lines(a, b, c)?
        }
        "hypercube" => {
            let [k] = params(name, p)?;
            constructions::hypercube(k)?
        }
        "hypercube-raised" => {
            let [k, m] = params(name, p)?;
            constructions::hypercube_construction(k, m)?
        }
        "cross-polytope" => {
            let [d] = params(name, p)?;
            constructions::cross_polytope(d)?
        }
        "cross-polytope-raised" => {
            let [j, m] = params(name, p)?;
            constructions::crosspolytope_construction(j, m)?
        }
        "near-pencil" => {
            let [n] = params(name, p)?;
            constructions::near_pencil(n)?
        }
        "collinear" => {
            let [n, d] = params(name, p)?;
            constructions::collinear(n, d)?
        }
        _ => bail!(
            "unknown construction `{name}` (skew-lines, hypercube, hypercube-raised, \
             cross-polytope, cross-polytope-raised, near-pencil, collinear)"
        ),
    })
}

fn print_timings(claims: &[ClaimReport]) {
    for c in claims {
        eprintln!("{:>8} ms  {}", c.runtime_ms, c.claim_id);
    }
}

fn to_json_line(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialise")
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen {
            name,
            params,
            output,
        } => {
            save(&generate(&name, &params)?, &output)?;
            Ok(true)
        }
        Command::Analyze {
            file,
            json,
            kmax,
            origin,
            no_claims,
            timings,
        } => {
            let doc = load(&file)?;
            let mut config = doc.config;
            if let Some(i) = origin {
                config = config.with_origin(Origin::Index(i))?;
            }
            let facts = Facts::new(config, kmax)?;
            let opts = AnalyzeOptions {
                skip_claims: no_claims,
                expectations: doc.expectations,
            };
            let a = analyze(&facts, &opts)?;
            if json {
                println!("{}", to_json_line(&a.json));
            } else {
                print!("{}", render_text(&a));
            }
            if timings {
                print_timings(&a.claims);
            }
            Ok(a.passed())
        }
        Command::Check {
            claim,
            file,
            k,
            function,
            json,
            timings,
        } => {
            if !CLAIMS.contains(&claim.as_str()) {
                bail!("unknown claim `{claim}`; known: {}", CLAIMS.join(", "));
            }
            let function = function.map(|f| f.parse::<WeightFn>()).transpose()?;
            let doc = load(&file)?;
            let facts = Facts::new(doc.config, None)?;
            let opts = ClaimOptions {
                k,
                function,
                expectations: doc.expectations,
            };
            let r = run_claim(&claim, &facts, &opts)?;
            if json {
                println!("{}", to_json_line(&r));
            } else {
                println!("[{}] {}", r.status.as_str(), r.claim_id);
                for (key, v) in &r.details {
                    println!("  {key}: {v}");
                }
            }
            if timings {
                print_timings(std::slice::from_ref(&r));
            }
            Ok(r.status != Status::Fail)
        }
        Command::Project {
            file,
            center,
            output,
        } => {
            let config = load(&file)?.config;
            if let Some(&bad) = center.iter().find(|&&i| i >= config.len()) {
                bail!(
                    "center index {bad} out of range for {} points",
                    config.len()
                );
            }
            let pts: Vec<_> = center.iter().map(|&i| config.point(i)).collect();
            let c: Flat = flatspan::span(config.ambient_dim(), pts)?;
            let projected = config.project(&c)?;
            save(&projected.config, &output)?;
            eprintln!(
                "{} points on the center dropped, {} images",
                projected.on_center.len(),
                projected.config.len()
            );
            Ok(true)
        }
        Command::Raise {
            file,
            m,
            generic_origin: generic,
            output,
        } => {
            let mut base = load(&file)?.config;
            if generic {
                let o = generic_origin(&base)?;
                base = base.without_origin().with_origin(Origin::Point(o))?;
            }
            let raised = constructions::raise(&base, m)?;
            save(&raised.config, &output)?;
            for t in &raised.terms {
                let note = if t.literal_is_exact() {
                    ""
                } else {
                    "  (literal form undercounts)"
                };
                eprintln!(
                    "f_{} = {} (literal {}){note}",
                    t.k,
                    raised.exact(t.k),
                    raised.literal(t.k)
                );
            }
            Ok(true)
        }
    }
}

fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("FLATSPAN_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .with_context(|| format!("FLATSPAN_THREADS must be a positive integer, got `{v}`"))?;
        if n == 0 {
            bail!("FLATSPAN_THREADS must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring the worker pool")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match init_threads().and_then(|()| run(cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
