use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcheck::ff::Subspace;
use hopfcheck::harness::{battery, enumerate, Body, Catalog, Instance};
use hopfcheck::hopf::HopfSC;
use hopfcheck::rlie::RestrictedLie;
use hopfcheck::{CheckReport, Status};

#[derive(Parser)]
#[command(name = "hopfcheck", version, about = "Exact checks for finite-dimensional Hopf algebras over finite fields")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Treat inconclusive and rejected-hypothesis reports as failures.
    #[arg(long, global = true)]
    strict: bool,
    /// Record wall-clock time in each report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a Hopf algebra instance file.
    CheckHopf { file: PathBuf },
    /// Validate a restricted Lie algebra instance file.
    CheckLie { file: PathBuf },
    /// List restricted Lie algebras over GF(p), exhaustively or by seeded sampling.
    Enumerate {
        #[arg(long)]
        p: u64,
        #[arg(long = "dim")]
        dim: usize,
        /// Draw COUNT algebras from the stream seeded with SEED.
        #[arg(long, num_args = 2, value_names = ["SEED", "COUNT"])]
        sample: Option<Vec<u64>>,
        /// Run the prop13 battery on each algebra instead of printing it.
        #[arg(long)]
        prop13: bool,
    },
    /// Run one battery on instance files.
    Battery {
        #[arg(value_enum)]
        name: BatteryName,
        /// theorem01, prop11: Hopf files; prop13: Lie files; relprim: H K;
        /// section3: H K X.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// The built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BatteryName {
    Theorem01,
    Prop13,
    Prop11,
    Relprim,
    Section3,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Run every battery over the catalog.
    Run,
    /// Write every catalog instance to DIR/<label>.inst.
    Export { dir: PathBuf },
}

struct Output {
    format: Format,
    timing: bool,
    strict: bool,
    failed: bool,
}

impl Output {
    fn report(&mut self, mut rep: CheckReport, started: Instant) {
        if self.timing {
            rep.timing_ms = Some(started.elapsed().as_millis() as u64);
        }
        self.failed |= match rep.status {
            Status::Pass => false,
            Status::Fail => true,
            Status::Inconclusive | Status::RejectedHypothesis => self.strict,
        };
        match self.format {
            Format::Text => emit(&rep.to_text()),
            Format::Json => emit(&(rep.to_json() + "\n")),
        }
    }
}

/// Writes to stdout; a closed pipe ends the process quietly.
fn emit(s: &str) {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(s.as_bytes()).and_then(|()| stdout.flush()).is_err() {
        std::process::exit(2);
    }
}

fn load(path: &Path) -> Result<Instance, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Instance::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_hopf(path: &Path) -> Result<(String, HopfSC), String> {
    let inst = load(path)?;
    match inst.body {
        Body::Hopf(h) => Ok((inst.label, h)),
        other => Err(format!("{}: expected kind=hopf, found kind={}", path.display(), other.kind())),
    }
}

fn load_lie(path: &Path) -> Result<(String, RestrictedLie), String> {
    let inst = load(path)?;
    match inst.body {
        Body::Rlie(l) => Ok((inst.label, l)),
        other => Err(format!("{}: expected kind=rlie, found kind={}", path.display(), other.kind())),
    }
}

fn load_subspace(path: &Path, h: &HopfSC) -> Result<Subspace, String> {
    let inst = load(path)?;
    if inst.ctx != *h.ctx() {
        return Err(format!("{}: field differs from the ambient Hopf algebra", path.display()));
    }
    inst.subspace(h.dim()).map_err(|e| format!("{}: {e}", path.display()))
}

fn err(e: hopfcheck::Error) -> String {
    e.to_string()
}

fn check_hopf(out: &mut Output, file: &Path) -> Result<(), String> {
    let t = Instant::now();
    let (label, h) = load_hopf(file)?;
    let mut rep = h.validate();
    rep.label = label;
    if rep.is_valid() {
        rep.fact("dim", h.dim());
        rep.fact("irreducible", h.is_irreducible());
        rep.fact("commutative", h.alg().is_commutative());
        rep.fact("cocommutative", h.is_cocommutative());
        rep.fact("semisimple", h.alg().is_semisimple());
        rep.fact("dim P(H)", h.primitives().dim());
    }
    out.report(rep, t);
    Ok(())
}

fn check_lie(out: &mut Output, file: &Path) -> Result<(), String> {
    let t = Instant::now();
    let (label, l) = load_lie(file)?;
    let mut rep = l.validate();
    rep.label = label;
    if rep.is_valid() {
        rep.fact("dim", l.dim());
        rep.fact("abelian", l.is_abelian());
        if l.ctx().is_prime_field() {
            rep.fact("torus", l.is_torus().map_err(err)?.torus);
        }
    }
    out.report(rep, t);
    Ok(())
}

fn run_battery(out: &mut Output, name: BatteryName, files: &[PathBuf]) -> Result<(), String> {
    let arity = |n: usize| {
        if files.len() == n {
            Ok(())
        } else {
            Err(format!("this battery takes {n} files, got {}", files.len()))
        }
    };
    match name {
        BatteryName::Theorem01 | BatteryName::Prop11 => {
            for f in files {
                let t = Instant::now();
                let (label, h) = load_hopf(f)?;
                let rep = match name {
                    BatteryName::Theorem01 => battery::theorem01(&label, &h),
                    _ => battery::prop11(&label, &h),
                };
                out.report(rep.map_err(err)?, t);
            }
        }
        BatteryName::Prop13 => {
            for f in files {
                let t = Instant::now();
                let (label, l) = load_lie(f)?;
                out.report(battery::prop13(&label, &l).map_err(err)?, t);
            }
        }
        BatteryName::Relprim => {
            arity(2)?;
            let t = Instant::now();
            let (label, h) = load_hopf(&files[0])?;
            let k = load_subspace(&files[1], &h)?;
            out.report(battery::relprim(&label, &h, &k).map_err(err)?, t);
        }
        BatteryName::Section3 => {
            arity(3)?;
            let t = Instant::now();
            let (label, h) = load_hopf(&files[0])?;
            let k = load_subspace(&files[1], &h)?;
            let x = load_subspace(&files[2], &h)?;
            let [x] = x.basis() else {
                return Err(format!("{}: expected a single nonzero vector", files[2].display()));
            };
            out.report(battery::section3(&label, &h, &k, x).map_err(err)?, t);
        }
    }
    Ok(())
}

fn run_enumerate(
    out: &mut Output,
    p: u64,
    dim: usize,
    sample: Option<&[u64]>,
    prop13: bool,
) -> Result<(), String> {
    let algebras = match sample {
        Some([seed, count]) => enumerate::sample_rlie(p, dim, *seed, *count as usize),
        _ => enumerate::enumerate_rlie(p, dim),
    }
    .map_err(err)?;
    for (i, l) in algebras.iter().enumerate() {
        let label = format!("rlie-p{p}-n{dim}-{i}");
        if prop13 {
            let t = Instant::now();
            out.report(battery::prop13(&label, l).map_err(err)?, t);
            continue;
        }
        let text = Instance::new(&label, l.ctx(), Body::Rlie(l.clone())).serialize();
        match out.format {
            Format::Text => emit(&format!("{text}\n")),
            Format::Json => emit(&format!("{}\n", serde_json::json!({ "label": label, "instance": text }))),
        }
    }
    eprintln!("{} algebras", algebras.len());
    Ok(())
}

fn run(cli: &Cli, out: &mut Output) -> Result<(), String> {
    match &cli.command {
        Command::CheckHopf { file } => check_hopf(out, file),
        Command::CheckLie { file } => check_lie(out, file),
        Command::Enumerate { p, dim, sample, prop13 } => {
            run_enumerate(out, *p, *dim, sample.as_deref(), *prop13)
        }
        Command::Battery { name, files } => run_battery(out, *name, files),
        Command::Catalog { action } => {
            let cat = Catalog::build().map_err(err)?;
            match action {
                CatalogAction::Run => {
                    let mut t = Instant::now();
                    cat.run_each(|rep| {
                        out.report(rep, t);
                        t = Instant::now();
                    })
                    .map_err(err)?;
                }
                CatalogAction::Export { dir } => {
                    let paths = cat.export(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
                    eprintln!("wrote {} files to {}", paths.len(), dir.display());
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Output {
        format: cli.format,
        timing: cli.timing,
        strict: cli.strict,
        failed: false,
    };
    match run(&cli, &mut out) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(()) if out.failed => ExitCode::from(1),
        Ok(()) => ExitCode::SUCCESS,
    }
}
