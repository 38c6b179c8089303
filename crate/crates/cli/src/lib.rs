//! Command-line front end for `spechtkit`: one subcommand per verification,
//! JSON reports on stdout, module caching on disk.
//!
//! Exit codes: 0 when every assertion holds, 1 when one fails, 2 for usage
//! errors, `p`-singular input and guard violations.

pub mod cache;
pub mod report;
pub mod suite;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use spechtkit::condition1::{
    alcove_threshold, certificate_alcove, certificate_two_part, degenerate_alcove_sweep, invariant_preserved,
    splitting_bound, Counterexample, Route,
};
use spechtkit::schurweyl::kernel_ideal_check;
use spechtkit::updown::{down, up, verify_radical_identities, verify_updown_laws};
use spechtkit::{Error, GModule, Guard, ModuleKind, Partition, PrimeField, WordSpace};

use crate::cache::ModuleCache;
use crate::report::{Format, Params, Report, Table};
use crate::suite::{suite_report, Profile, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "spechtkit", version, about = "Exact modular Specht module computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format; JSON is authoritative.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached modules (default: $SPECHTKIT_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Lift the word-space size guard.
    #[arg(long, global = true)]
    pub override_guard: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_field)]
    pub p: PrimeField,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Source {
    Specht,
    Radical,
    Zero,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RouteArg {
    Alcove,
    TwoPart,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// dim S^λ in F_n^r against the standard tableau count.
    DimSpecht(ModuleArgs),
    /// dim D^λ = dim S^λ − dim P^λ.
    DimIrreducible(ModuleArgs),
    /// The Gram radical P^λ.
    Radical {
        #[command(flatten)]
        module: ModuleArgs,
        /// Also write the module in text form to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// U↑ for a named module U.
    Up {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value_t = Source::Specht)]
        source: Source,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// U↓ for a named module U.
    Down {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value_t = Source::Specht)]
        source: Source,
    },
    /// U↓↑ ⊆ U ⊆ U↑↓ and U↓↑↓ = U↓.
    VerifyUpdown {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum, default_value_t = Source::Specht)]
        source: Source,
    },
    /// P^{λ−(1ⁿ)}↑ = P^λ.
    VerifyEq3(ModuleArgs),
    /// P^λ↓ = P^{λ−(1ⁿ)}.
    VerifyDownRadical(ModuleArgs),
    /// Ker σ_r against the ideal generated by the alternating sum of G(n+1).
    SchurWeylKernel {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_field)]
        p: PrimeField,
    },
    /// A threshold a for λ, through C₀ or the two-part route.
    Condition1 {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
    },
    /// Degenerate partitions of R inside C₀(R).
    Lemma1Sweep {
        #[arg(long, value_parser = parse_field)]
        p: PrimeField,
        #[arg(long)]
        n: usize,
        /// Smallest R (default (n−1)(p−n)+1).
        #[arg(long)]
        r: Option<usize>,
        /// Largest R (default 19 above the smallest).
        #[arg(long)]
        r_max: Option<usize>,
    },
    /// Successor candidates of λ_1 − λ_2 dropping below p^k − 1.
    DeltaSweep {
        #[arg(long, value_parser = parse_field)]
        p: PrimeField,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 10_000)]
        m_max: u64,
    },
    /// Smallest k with k ≥ r²/n + (2r+1)a + a²n.
    Bound {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        a: u64,
    },
    /// Run the regression battery.
    Suite {
        #[arg(long, value_enum, default_value_t = Profile::Quick)]
        profile: Profile,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_field(s: &str) -> Result<PrimeField, String> {
    let p: u64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    PrimeField::new(p).map_err(|e| e.to_string())
}

/// Everything `run` needs besides the command itself.
pub struct Context {
    pub cache: ModuleCache,
    pub guard: Guard,
    pub suite: Option<SuiteConfig>,
}

impl Context {
    pub fn from_global(g: &Global) -> Self {
        Self {
            cache: ModuleCache::resolve(g.cache_dir.clone()),
            guard: if g.override_guard { Guard::overridden() } else { Guard::default() },
            suite: None,
        }
    }
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let ctx = Context::from_global(&cli.global);
    let start = Instant::now();
    match run(&cli.command, &ctx) {
        Ok(mut report) => {
            if cli.global.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            print!("{}", report.render(cli.global.format));
            if report.passed {
                0
            } else {
                eprintln!("failed: {}", report.failures.join(", "));
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn params(n: usize, r: usize, p: PrimeField) -> Params {
    Params { n: Some(n), r: Some(r), p: Some(p.modulus()) }
}

fn module_report(command: &str, m: &ModuleArgs) -> Report {
    Report::new(command, params(m.n, m.lambda.size(), m.p))
        .input("lambda", m.lambda.to_string())
        .input("n", m.n)
        .input("p", m.p.modulus())
}

fn source_module(m: &ModuleArgs, source: Source, ctx: &Context) -> spechtkit::Result<GModule> {
    match source {
        Source::Specht => ctx.cache.specht(&m.lambda, m.n, m.p, ctx.guard),
        Source::Radical => ctx.cache.radical(&m.lambda, m.n, m.p, ctx.guard),
        Source::Zero | Source::Full => {
            if m.lambda.len() > m.n {
                return Err(Error::TooManyParts { parts: m.lambda.len(), n: m.n });
            }
            let space = WordSpace::new(m.n, m.lambda.size(), ctx.guard)?;
            Ok(if source == Source::Zero { GModule::zero(space, m.p) } else { GModule::full(space, m.p) })
        }
    }
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Specht => ModuleKind::Specht.as_str(),
        Source::Radical => ModuleKind::Radical.as_str(),
        Source::Zero => ModuleKind::Zero.as_str(),
        Source::Full => ModuleKind::Full.as_str(),
    }
}

pub fn run(command: &Command, ctx: &Context) -> spechtkit::Result<Report> {
    match command {
        Command::DimSpecht(m) => {
            let s = ctx.cache.specht(&m.lambda, m.n, m.p, ctx.guard)?;
            let tableaux = m.lambda.count_standard_tableaux();
            let mut rep = module_report("dim-specht", m);
            rep.output("dim", s.dim());
            rep.output("standard_tableaux", tableaux);
            rep.check("dim", s.dim() as u64 == tableaux);
            Ok(rep)
        }
        Command::DimIrreducible(m) => {
            if !m.lambda.is_p_regular(m.p.modulus()) {
                return Err(Error::Singular(m.lambda.to_string(), m.p.modulus()));
            }
            let s = ctx.cache.specht(&m.lambda, m.n, m.p, ctx.guard)?;
            let rad = ctx.cache.radical(&m.lambda, m.n, m.p, ctx.guard)?;
            let mut rep = module_report("dim-irreducible", m);
            rep.output("dim_specht", s.dim());
            rep.output("dim_radical", rad.dim());
            rep.output("dim", s.dim() - rad.dim());
            rep.check("proper", rad.dim() < s.dim() || s.is_zero());
            Ok(rep)
        }
        Command::Radical { module: m, out } => {
            let rad = ctx.cache.radical(&m.lambda, m.n, m.p, ctx.guard)?;
            if let Some(path) = out {
                std::fs::write(path, rad.to_text())
                    .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))?;
            }
            let mut rep = module_report("radical", m);
            rep.output("dim", rad.dim());
            rep.output("ambient", rad.space().dim());
            rep.output("g_closed", rad.is_g_closed());
            rep.check("g_closed", rad.is_g_closed());
            Ok(rep)
        }
        Command::Up { module: m, source, steps } => {
            let u = source_module(m, *source, ctx)?;
            let lifted = up(&u, *steps, ctx.guard)?;
            let mut rep = module_report("up", m).input("source", source_name(*source)).input("steps", steps);
            rep.output("dim_source", u.dim());
            rep.output("dim", lifted.dim());
            rep.output("ambient", lifted.space().dim());
            rep.output("lambda_shifted", lifted.partition().map(|l| l.to_string()));
            Ok(rep)
        }
        Command::Down { module: m, source } => {
            let v = source_module(m, *source, ctx)?;
            let lowered = down(&v)?;
            let mut rep = module_report("down", m).input("source", source_name(*source));
            rep.output("dim_source", v.dim());
            rep.output("dim", lowered.dim());
            rep.output("ambient", lowered.space().dim());
            rep.output("lambda_shifted", lowered.partition().map(|l| l.to_string()));
            Ok(rep)
        }
        Command::VerifyUpdown { module: m, source } => {
            let u = source_module(m, *source, ctx)?;
            let laws = verify_updown_laws(&u, ctx.guard)?;
            let mut rep = module_report("verify-updown", m).input("source", source_name(*source));
            rep.check("down_up_within", laws.down_up_within);
            rep.check("within_up_down", laws.within_up_down);
            rep.check("down_up_down_is_down", laws.down_up_down_is_down);
            rep.outputs_from(&laws);
            Ok(rep)
        }
        Command::VerifyEq3(m) => {
            let ids = verify_radical_identities(&m.lambda, m.n, m.p, true, ctx.guard)?;
            let mut rep = module_report("verify-eq3", m);
            // λ_n ≥ (n−1)(p−n)+2, which only makes sense for n < p
            let hypotheses =
                (m.n as u64) < m.p.modulus() as u64 && m.lambda.part(m.n - 1) as u64 > alcove_threshold(m.n, m.p);
            rep.output("hypotheses_hold", hypotheses);
            rep.check("up_equal", ids.up_equal == Some(true));
            rep.outputs_from(&ids);
            Ok(rep)
        }
        Command::VerifyDownRadical(m) => {
            let ids = verify_radical_identities(&m.lambda, m.n, m.p, false, ctx.guard)?;
            let mut rep = module_report("verify-down-radical", m);
            rep.check("down_equal", ids.down_equal);
            rep.outputs_from(&ids);
            Ok(rep)
        }
        Command::SchurWeylKernel { r, n, p } => {
            let k = kernel_ideal_check(*r, *n, *p, ctx.guard)?;
            let mut rep = Report::new("schur-weyl-kernel", params(*n, *r, *p))
                .input("r", r)
                .input("n", n)
                .input("p", p.modulus());
            rep.check("equal", k.equal);
            rep.outputs_from(&k);
            Ok(rep)
        }
        Command::Condition1 { module: m, route } => {
            let route = match route {
                Some(RouteArg::Alcove) => Route::Alcove,
                Some(RouteArg::TwoPart) => Route::TwoPart,
                None if (m.n as u64) < m.p.modulus() as u64 && m.lambda.in_c0(m.p.modulus(), m.n)? => Route::Alcove,
                None if m.n == 2 => Route::TwoPart,
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "no certificate route for ({}) with n = {}, p = {}",
                        m.lambda,
                        m.n,
                        m.p.modulus()
                    )))
                }
            };
            let cert = match route {
                Route::Alcove => certificate_alcove(&m.lambda, m.n, m.p)?,
                Route::TwoPart if m.n != 2 => {
                    return Err(Error::InvalidArgument("the two-part route needs n = 2".into()))
                }
                Route::TwoPart => certificate_two_part(&m.lambda, m.p)?,
            };
            let mut rep = module_report("condition1", m);
            rep.outputs_from(cert.report());
            Ok(rep)
        }
        Command::Lemma1Sweep { p, n, r, r_max } => {
            if *n < 2 || *n as u64 >= p.modulus() as u64 {
                return Err(Error::RegionUndefined { n: *n, p: p.modulus() });
            }
            let lo = r.unwrap_or(alcove_threshold(*n, *p) as usize);
            let hi = r_max.unwrap_or(lo + 19);
            if hi < lo {
                return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
            }
            let sweep = degenerate_alcove_sweep(*p, *n, lo..=hi)?;
            let mut rep = Report::new("lemma1-sweep", Params { n: Some(*n), r: None, p: Some(p.modulus()) })
                .input("p", p.modulus())
                .input("n", n)
                .input("r", lo)
                .input("r_max", hi);
            let mut table = Table::new(&["r", "mu"]);
            for c in &sweep.counterexamples {
                if let Counterexample::Partition(mu) = c {
                    table.push(vec![mu.size().to_string(), mu.to_string()]);
                }
            }
            rep.check("no_counterexamples", sweep.passed());
            rep.outputs_from(&sweep);
            rep.table = Some(table);
            Ok(rep)
        }
        Command::DeltaSweep { p, k, m_max } => {
            let sweep = invariant_preserved(*p, *k, *m_max)?;
            let mut rep = Report::new("delta-sweep", Params { n: Some(2), r: None, p: Some(p.modulus()) })
                .input("p", p.modulus())
                .input("k", k)
                .input("m_max", m_max);
            let mut table = Table::new(&["m", "candidate"]);
            for c in &sweep.counterexamples {
                if let Counterexample::Delta { m, candidate } = c {
                    table.push(vec![m.to_string(), candidate.to_string()]);
                }
            }
            rep.check("no_counterexamples", sweep.passed());
            rep.outputs_from(&sweep);
            rep.table = Some(table);
            Ok(rep)
        }
        Command::Bound { r, n, a } => {
            let k = splitting_bound(*r, *n, *a)?;
            let mut rep = Report::new("bound", Params { n: Some(*n as usize), r: Some(*r as usize), p: None })
                .input("r", r)
                .input("n", n)
                .input("a", a);
            rep.output("k", k);
            Ok(rep)
        }
        Command::Suite { profile } => {
            let config = ctx.suite.unwrap_or_else(|| SuiteConfig::new(*profile));
            Ok(suite_report(&SuiteConfig { profile: *profile, ..config }))
        }
    }
}
