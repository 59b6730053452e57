use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use qsym::morphisms;
use qsym::rigidity::{self, SuiteConfig, VerificationReport, MANIFEST};
use qsym::schur::{enumerate_ssrct, set_cache_dir, set_weight_cap};
use qsym::*;

/// Exact computations in the Hopf algebra of quasisymmetric functions.
///
/// Compositions are written with commas, e.g. `1,3,2`; the empty
/// composition is the empty string `""`.
#[derive(Parser, Debug)]
#[command(name = "qsym", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Shorthand for `--format dot`.
    #[arg(long, global = true)]
    dot: bool,

    /// Weight cap for S-basis computations; for `verify`, the largest weight
    /// used by the S-basis checks.
    #[arg(long, global = true)]
    bound: Option<usize>,

    /// Directory for cached change-of-basis matrices.
    #[arg(long, env = "QSYM_CACHE_DIR", global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two basis elements.
    Product {
        #[arg(short, long, default_value = "M")]
        basis: BasisTag,
        alpha: Composition,
        beta: Composition,
    },
    /// Coproduct of a basis element.
    Coproduct {
        #[arg(short, long, default_value = "M")]
        basis: BasisTag,
        alpha: Composition,
    },
    /// Change of basis. EXPR is a composition or an expression such as
    /// `2 F[2,1] - F[3]`.
    Convert {
        from: BasisTag,
        to: BasisTag,
        expr: String,
    },
    /// Cover relations of the four composition posets.
    Poset {
        order: OrderTag,
        #[command(subcommand)]
        query: PosetQuery,
    },
    /// Enumerate semistandard reverse composition tableaux.
    Ssrct {
        outer: Composition,
        #[arg(long, default_value = "")]
        inner: Composition,
        /// Largest entry; defaults to the number of skew cells.
        #[arg(long)]
        max_entry: Option<u32>,
    },
    /// The coefficient of `S_alpha ⊗ S_beta` in the coproduct of `S_gamma`.
    Lr {
        alpha: Composition,
        beta: Composition,
        gamma: Composition,
    },
    /// Apply rho, psi, omega or the identity to a basis element.
    Map {
        name: NamedMap,
        #[arg(short, long, default_value = "F")]
        basis: BasisTag,
        alpha: Composition,
    },
    /// Run the verification suite. Exit status 2 if any check fails.
    Verify {
        /// JSON file with every bound; defaults are used otherwise.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Run only these checks.
        #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(MANIFEST))]
        checks: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum PosetQuery {
    /// Compositions covering ALPHA.
    Covers { alpha: Composition },
    /// Compositions covered by ALPHA.
    Downset { alpha: Composition },
    /// Hasse diagram of weights 1..=N.
    Hasse { n: usize },
    /// Pairs of compositions of N with equal down-sets.
    Pairs { n: usize },
}

enum Outcome {
    Done,
    VerificationFailed,
}

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
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn paren(c: &Composition) -> String {
    format!("({c})")
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(cli: Cli) -> Result<Outcome> {
    let format = if cli.dot { Format::Dot } else { cli.format };
    if let Some(dir) = &cli.cache {
        set_cache_dir(Some(dir.clone()));
    }
    let is_verify = matches!(cli.command, Command::Verify { .. });
    if let (Some(n), false) = (cli.bound, is_verify) {
        if n == 0 {
            bail!("--bound must be positive");
        }
        set_weight_cap(n);
    }
    let dot_ok = matches!(
        cli.command,
        Command::Poset {
            query: PosetQuery::Hasse { .. },
            ..
        }
    );
    if format == Format::Dot && !dot_ok {
        bail!("--format dot is only available for `poset ORDER hasse`");
    }

    match cli.command {
        Command::Product { basis, alpha, beta } => {
            let u = QSymVector::basis_element(basis, alpha);
            let v = QSymVector::basis_element(basis, beta);
            print_vector(&product(&u, &v)?, format)?;
        }
        Command::Coproduct { basis, alpha } => {
            let t = coproduct(&QSymVector::basis_element(basis, alpha))?;
            match format {
                Format::Json => println!("{}", json(&t)?),
                _ => println!("{t}"),
            }
        }
        Command::Convert { from, to, expr } => {
            let u = match expr.parse::<Composition>() {
                Ok(alpha) => QSymVector::basis_element(from, alpha),
                Err(_) => QSymVector::parse(&expr, from).with_context(|| {
                    format!("cannot read {expr:?} as a composition or an expression")
                })?,
            };
            print_vector(&convert(&u, to)?, format)?;
        }
        Command::Poset { order, query } => poset(order, query, format)?,
        Command::Ssrct {
            outer,
            inner,
            max_entry,
        } => {
            let shape = SkewReverseShape::new(outer, inner)?;
            let tableaux = enumerate_ssrct(&shape, max_entry.unwrap_or(shape.size() as u32));
            match format {
                Format::Json => println!("{}", json(&tableaux)?),
                _ => {
                    for t in &tableaux {
                        println!("{}", render_tableau(t));
                    }
                    println!("{} tableaux", tableaux.len());
                }
            }
        }
        Command::Lr { alpha, beta, gamma } => {
            let x = lr_coefficient(&alpha, &beta, &gamma)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "alpha": alpha, "beta": beta, "gamma": gamma,
                        "num": x.numer().to_string(), "den": x.denom().to_string(),
                    })
                ),
                _ => println!("{x}"),
            }
        }
        Command::Map { name, basis, alpha } => {
            let image = morphisms::apply(&name, &QSymVector::basis_element(basis, alpha))?;
            print_vector(&image, format)?;
        }
        Command::Verify { config, checks } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    SuiteConfig::from_json(&text)?
                }
                None => SuiteConfig::default(),
            };
            if let Some(n) = cli.bound {
                cfg = cfg.with_s_bound(n);
            }
            let report = if checks.is_empty() {
                rigidity::run_all(&cfg)?
            } else {
                let ids: Vec<&str> = checks.iter().map(String::as_str).collect();
                rigidity::run_selected(&cfg, &ids)?
            };
            match format {
                Format::Json => println!("{}", json(&report)?),
                _ => print_report(&report),
            }
            if !report.all_passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
    }
    Ok(Outcome::Done)
}

fn print_vector(u: &QSymVector, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", json(u)?),
        _ => println!("{u}"),
    }
    Ok(())
}

fn poset(order: OrderTag, query: PosetQuery, format: Format) -> Result<()> {
    let list = |set: Vec<Composition>| -> Result<()> {
        match format {
            Format::Json => println!("{}", json(&set)?),
            _ => {
                for c in &set {
                    println!("{}", paren(c));
                }
            }
        }
        Ok(())
    };
    match query {
        PosetQuery::Covers { alpha } => list(up_covers(order, &alpha).into_iter().collect())?,
        PosetQuery::Downset { alpha } => list(down_covers(order, &alpha).into_iter().collect())?,
        PosetQuery::Hasse { n } => {
            let h = hasse(order, n)?;
            match format {
                Format::Dot => print!("{}", h.to_dot()),
                Format::Json => println!("{}", json(&h)?),
                Format::Text => {
                    for (a, b) in &h.edges {
                        println!("{} -> {}", paren(a), paren(b));
                    }
                }
            }
        }
        PosetQuery::Pairs { n } => {
            let pairs = equal_down_set_pairs(order, n);
            match format {
                Format::Json => println!("{}", json(&pairs)?),
                _ => {
                    for (a, b) in &pairs {
                        println!("{{{}, {}}}", paren(a), paren(b));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Rows top to bottom separated by ` / `, inner cells as `*`.
fn render_tableau(t: &Ssrct) -> String {
    let shape = t.shape();
    (1..=shape.rows())
        .map(|i| {
            let inner = std::iter::repeat_n("*".to_string(), shape.inner_len(i));
            let cells = t.rows()[i - 1].iter().map(u32::to_string);
            inner.chain(cells).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn print_report(report: &VerificationReport) {
    for r in &report.results {
        let status = if r.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} {:<22} bound {:>2}  {} ms",
            r.check_id, r.bound, r.elapsed_ms
        );
        for d in r.details.iter().take(5) {
            println!("     {d}");
        }
        if r.details.len() > 5 {
            println!("     ... {} more", r.details.len() - 5);
        }
    }
    let passed = report.results.iter().filter(|r| r.pass).count();
    println!(
        "{passed}/{} checks passed (verified up to the listed bounds)",
        report.results.len()
    );
}
