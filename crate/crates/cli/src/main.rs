use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use kirillov::construct::types::is_admissible;
use kirillov::construct::{sl2_complete, Partition};
use kirillov::index::index_of_with_trace_rep;
use kirillov::nilanalysis::grading;
use kirillov::rng::{DEFAULT_COEFF_BOUND, DEFAULT_SEED, DEFAULT_TRIALS};
use kirillov::{par, RandomCfg};
use kirillov_cli::cache::Cache;
use kirillov_cli::output::{line, render, Format};
use kirillov_cli::select::{parse_type, spec_for, AlgebraSpec, Realization};
use kirillov_cli::suites::{self, OrbitTarget, Suite, SuiteConfig, Unit};
use kirillov_cli::{CliError, CliResult};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "kirillov",
    version,
    about = "Exact index computations and verification suites for Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Seed for every randomized rank estimate.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random evaluations per generic-rank estimate.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    /// Sample coordinates are drawn from [-bound, bound].
    #[arg(long, global = true, default_value_t = DEFAULT_COEFF_BOUND)]
    coeff_bound: u64,
    /// Certify generic ranks exactly where the pencil is small enough.
    #[arg(long, global = true)]
    certify: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for cached per-unit results.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Clone)]
struct Selector {
    /// Lie type, e.g. D4, or a family letter together with --rank.
    #[arg(long = "type")]
    ty: String,
    #[arg(long)]
    rank: Option<usize>,
    /// Realization; defaults to matrices for classical types.
    #[arg(long, value_enum)]
    basis: Option<Realization>,
}

impl Selector {
    fn spec(&self) -> CliResult<AlgebraSpec> {
        spec_for(parse_type(&self.ty, self.rank)?, self.basis)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, rank, exponents and index of a simple algebra.
    Info(Selector),
    /// Full report for one nilpotent orbit.
    Orbit {
        #[command(flatten)]
        sel: Selector,
        /// Jordan type, e.g. 5,3.
        #[arg(long, conflicts_with_all = ["search", "regular"])]
        partition: Option<String>,
        /// Search the positive part for an element with this centraliser dimension.
        #[arg(long, conflicts_with = "regular")]
        search: Option<usize>,
        #[arg(long)]
        regular: bool,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum)]
        basis: Option<Realization>,
        /// Skip algebras of larger rank.
        #[arg(long)]
        max_rank: Option<usize>,
    },
    /// Algebra utilities.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Print the structure constants as JSON.
    Export(Selector),
}

fn random_cfg(o: &Opts) -> RandomCfg {
    RandomCfg {
        seed: o.seed,
        trials: o.trials,
        coeff_bound: o.coeff_bound,
        certify: o.certify,
    }
}

fn configure_jobs(jobs: Option<usize>) -> CliResult<()> {
    match jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(1) => {
            par::set_mode(par::Mode::Sequential);
            Ok(())
        }
        Some(_n) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new()
                .num_threads(_n)
                .build_global()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(())
        }
        None => Ok(()),
    }
}

fn cache_for(o: &Opts) -> CliResult<Cache> {
    match &o.cache_dir {
        Some(d) => Cache::on_disk(d),
        None => Ok(Cache::in_memory()),
    }
}

fn internal(key: &str) -> impl Fn(kirillov::Error) -> CliError + '_ {
    move |e| CliError::internal(key, e)
}

fn info(sel: &Selector, o: &Opts) -> CliResult<i32> {
    let spec = sel.spec()?;
    let key = spec.to_string();
    let alg = spec.build().map_err(internal(&key))?;
    let l = alg.algebra();
    let e = alg.regular_nilpotent().map_err(internal(&key))?;
    let t = sl2_complete(l, &e).map_err(internal(&key))?;
    let g = grading(l, &t.h).map_err(internal(&key))?;
    let z = l.centralizer(&[e]).map_err(internal(&key))?;
    let mut exponents: Vec<i64> = g
        .degrees_of(&z)
        .map_err(internal(&key))?
        .iter()
        .map(|d| d / 2)
        .collect();
    exponents.sort();
    let ind = index_of_with_trace_rep(l, &alg.faithful_rep(), &random_cfg(o)).map_err(internal(&key))?;
    let killing = l.killing().is_nondegenerate();
    let ok = killing && ind.index == alg.rank();
    let v = json!({
        "type": alg.type_label(),
        "realization": alg.realization(),
        "dim": l.dim(),
        "rank": alg.rank(),
        "exponents": exponents,
        "killing_nondegenerate": killing,
        "index": ind,
        "index_equals_rank": ind.index == alg.rank(),
    });
    match o.format {
        Format::Json => println!("{}", line(&v)),
        Format::Table => println!(
            "{} ({})  dim {}  rank {}  exponents {:?}  Killing nondegenerate {}  index {} ({})",
            alg.type_label(),
            alg.realization(),
            l.dim(),
            alg.rank(),
            exponents,
            killing,
            ind.index,
            if ind.index == alg.rank() { "= rank" } else { "!= rank" }
        ),
    }
    Ok(if ok { 0 } else { 1 })
}

fn orbit(sel: &Selector, partition: Option<&str>, search: Option<usize>, regular: bool, o: &Opts) -> CliResult<i32> {
    let spec = sel.spec()?;
    let target = match (partition, search, regular) {
        (Some(p), _, _) => {
            let p: Partition = p.parse().map_err(|e: kirillov::Error| CliError::Usage(e.to_string()))?;
            let Some(t) = spec.ty.classical().filter(|_| spec.realization == Realization::Matrix) else {
                return Err(CliError::Usage("--partition needs a matrix realization".into()));
            };
            if !is_admissible(t, &p) {
                return Err(CliError::Usage(format!("partition {p} is not admissible for {t}")));
            }
            OrbitTarget::Partition(p)
        }
        (None, Some(dim), _) => OrbitTarget::Search(dim),
        (None, None, true) => OrbitTarget::Regular,
        (None, None, false) => return Err(CliError::Usage("give --partition, --search or --regular".into())),
    };
    let unit = Unit::Orbit(spec, target);
    let key = unit.key();
    let alg = spec.build().map_err(internal(&key))?;
    let cfg = random_cfg(o).normalized();
    let v = cache_for(o)?.get_or_compute(&key, &cfg, || suites::compute(&unit, &alg, &cfg))?;
    let failures: Vec<&str> = v["checks"]
        .as_object()
        .map(|m| {
            m.iter()
                .filter(|(_, c)| c["status"] == "fail")
                .map(|(k, _)| k.as_str())
                .collect()
        })
        .unwrap_or_default();
    match o.format {
        Format::Json => println!("{}", line(&v)),
        Format::Table => print!("{}", orbit_table(&v)),
    }
    if !failures.is_empty() {
        eprintln!("{key}: failed checks {}", failures.join(", "));
    }
    Ok(i32::from(!failures.is_empty()))
}

fn orbit_table(v: &Value) -> String {
    let mut out = String::new();
    for k in [
        "type",
        "realization",
        "label",
        "dynkin_labels",
        "dim_z",
        "dim_d",
        "dim_n",
        "height",
        "is_even",
        "is_distinguished",
        "grading",
        "m",
        "ind_z",
        "ind_n",
        "ind_n_on_z",
        "ind_n_on_d",
        "heart1",
        "heart2",
        "elashvili_ok",
        "conj61_ok",
        "conj62_ok",
        "parity_ok",
    ] {
        if !v[k].is_null() {
            out.push_str(&format!("{k:<17} {}\n", v[k]));
        }
    }
    if let Some(checks) = v["checks"].as_object() {
        for (k, c) in checks {
            out.push_str(&format!("check {k:<11} {}\n", c["status"].as_str().unwrap_or("")));
        }
    }
    out
}

fn verify(
    suite: Suite,
    ty: Option<&str>,
    rank: Option<usize>,
    basis: Option<Realization>,
    max_rank: Option<usize>,
    o: &Opts,
) -> CliResult<i32> {
    let selector = match ty {
        Some(t) => Some(spec_for(parse_type(t, rank)?, basis)?),
        None if rank.is_some() || basis.is_some() => {
            return Err(CliError::Usage("--rank and --basis need --type".into()))
        }
        None => None,
    };
    let cfg = SuiteConfig {
        suite,
        selector,
        max_rank,
        random: random_cfg(o),
    };
    let start = Instant::now();
    let result = suites::run(&cfg, &cache_for(o)?)?;
    print!("{}", render(&result, o.format));
    for item in result.failing() {
        eprintln!("FAIL {}: {}", item.key, item.failures.join("; "));
    }
    eprintln!("{} finished in {:.1?}", suite.name(), start.elapsed());
    Ok(result.exit_code())
}

fn export(sel: &Selector) -> CliResult<i32> {
    let spec = sel.spec()?;
    let alg = spec.build().map_err(internal(&spec.to_string()))?;
    println!("{}", alg.algebra().to_json());
    Ok(0)
}

fn run(cli: &Cli) -> CliResult<i32> {
    configure_jobs(cli.opts.jobs)?;
    let o = &cli.opts;
    match &cli.command {
        Command::Info(sel) => info(sel, o),
        Command::Orbit {
            sel,
            partition,
            search,
            regular,
        } => orbit(sel, partition.as_deref(), *search, *regular, o),
        Command::Verify {
            suite,
            ty,
            rank,
            basis,
            max_rank,
        } => verify(*suite, ty.as_deref(), *rank, *basis, *max_rank, o),
        Command::Algebra {
            cmd: AlgebraCmd::Export(sel),
        } => export(sel),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
