//! Command dispatch and deterministic text reports.
//!
//! Exit codes: `0` when every check passes, `1` when a check fails, `2` on
//! unreadable or malformed input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use crate::algebra::{Algebra, Element};
use crate::analysis::{ad_orbit, classify_locfin, x_alpha};
use crate::classical::compare_with_normalized;
use crate::error::Error;
use crate::format::{element_to_json, parse_certificate, parse_config, parse_element, Certificate, ConfigFile};
use crate::isomorphism::{
    build_theta, image_config, invariant_summary, validate_automorphism, varsigma, verify_homomorphism, ThetaMap,
};
use crate::lattice::{validate_config, AlgebraConfig};
use crate::properties::jacobi_skew;
use crate::rational::show;
use crate::report::ValidationReport;

#[derive(Debug, Parser)]
#[command(name = "contact-lie", version, about = "Exact checks for normalized contact Lie algebras")]
pub struct Cli {
    /// Print wall-clock time to standard error.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a configuration file.
    Validate {
        #[arg(long)]
        config: PathBuf,
    },
    /// Bracket two element literals (JSON, or `@path`).
    Bracket {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Seeded Jacobi and skew-symmetry run.
    Jacobi {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Defaults to the configuration's seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Isomorphism invariants, optionally compared against a second configuration.
    Invariants {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        other: Option<PathBuf>,
    },
    /// Bounded ad-orbits of an element against the generators.
    Locfin {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(long, default_value_t = 8)]
        cap: usize,
    },
    /// Build the map of a certificate and print generator images.
    BuildIso {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        /// Defaults to the image configuration of the certificate.
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Verify that a certificate's map is a homomorphism.
    VerifyIso {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Compare the normalized bracket with the classical one.
    OracleCompare {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        cap: u32,
    },
}

/// Exit code plus the report printed to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

/// Input problems map to exit code `2`.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(format!("{}: {e}", e.code()))
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))
}

fn digest(src: &str) -> String {
    hex::encode(Sha256::digest(src.as_bytes()))
}

fn literal(arg: &str) -> Result<Element, InputError> {
    let src = match arg.strip_prefix('@') {
        Some(path) => read(Path::new(path))?,
        None => arg.to_string(),
    };
    parse_element(&src).map_err(|e| InputError(format!("element literal: {e}")))
}

/// A loaded configuration with its digest line.
struct Loaded {
    file: ConfigFile,
    digest: String,
}

fn load(path: &Path) -> Result<Loaded, InputError> {
    let src = read(path)?;
    let file = parse_config(&src).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(Loaded { file, digest: digest(&src) })
}

fn load_cert(path: &Path, cfg: &AlgebraConfig) -> Result<(Certificate, String), InputError> {
    let src = read(path)?;
    let c = parse_certificate(&src, &cfg.layout).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((c, digest(&src)))
}

/// Report body under construction.
struct Body {
    head: String,
    checks: ValidationReport,
    extra: Vec<String>,
}

impl Body {
    fn new() -> Self {
        Body { head: String::new(), checks: ValidationReport::new(), extra: Vec::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.head.push_str(s.as_ref());
        self.head.push('\n');
    }

    fn fail(&mut self, name: &str, e: &Error) {
        self.checks.push(name, false, format!("{}: {e}", e.code()));
    }
}

fn theta_for(
    loaded: &Loaded,
    cert: &Path,
    target: Option<&Path>,
    b: &mut Body,
) -> Result<Option<ThetaMap>, InputError> {
    let cfg = &loaded.file.config;
    let (c, cdig) = load_cert(cert, cfg)?;
    b.line(format!("certificate: sha256:{cdig}"));
    let tgt = match target {
        Some(p) => {
            let t = load(p)?;
            b.line(format!("target: sha256:{}", t.digest));
            t.file.config
        }
        None => match image_config(&c.g, cfg) {
            Ok(t) => t,
            Err(e) => {
                b.fail("image-config", &e);
                return Ok(None);
            }
        },
    };
    let report = validate_automorphism(&c.g, cfg, &tgt);
    let ok = report.passed();
    b.checks.extend(report);
    if !ok {
        return Ok(None);
    }
    match build_theta(&c.g, cfg, &tgt) {
        Ok(mut theta) => {
            if let Some((alpha, factor)) = &c.chi_corruption {
                let hit = theta.corrupt_character(alpha, factor);
                b.checks.note("chi-corruption", hit, format!("chi({alpha}) scaled by {}", show(factor)));
            }
            Ok(Some(theta))
        }
        Err(e) => {
            b.fail("build-theta", &e);
            Ok(None)
        }
    }
}

fn dispatch(cmd: &Command, b: &mut Body) -> Result<(), InputError> {
    match cmd {
        Command::Validate { config } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            b.checks.extend(validate_config(&c.file.config));
        }
        Command::Bracket { config, u, v } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            let (u, v) = (literal(u)?, literal(v)?);
            let alg = Algebra::new(c.file.config);
            match alg.bracket(&u, &v) {
                Ok(w) => {
                    b.checks.push("bracket", true, w.to_string());
                    b.extra.push(format!("literal: {}", element_to_json(&w)));
                }
                Err(e) => b.fail("bracket", &e),
            }
        }
        Command::Jacobi { config, samples, seed } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            let seed = seed.unwrap_or(c.file.seed);
            b.checks.extend(jacobi_skew(&Algebra::new(c.file.config), *samples, seed));
        }
        Command::Invariants { config, other } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            let s = invariant_summary(&c.file.config);
            b.checks.note("invariants", true, s.to_string());
            if let Some(o) = other {
                let o = load(o)?;
                b.line(format!("other: sha256:{}", o.digest));
                let t = invariant_summary(&o.file.config);
                b.checks.note("other-invariants", true, t.to_string());
                let diff = s.differences(&t);
                let detail = if diff.is_empty() {
                    "no invariant separates the two algebras".to_string()
                } else {
                    format!("non-isomorphic: differ in {}", diff.join(", "))
                };
                b.checks.note("distinguished", !diff.is_empty(), detail);
            }
        }
        Command::Locfin { config, element, cap } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            let u = literal(element)?;
            let alg = Algebra::new(c.file.config);
            if let Err(e) = alg.check_element(&u) {
                b.fail("element", &e);
                return Ok(());
            }
            for k in u.keys() {
                b.checks.note(format!("class {k}"), true, classify_locfin(&alg, k).to_string());
            }
            let mut targets = varsigma(&alg);
            for g in alg.config().gamma.generators() {
                targets.push(x_alpha(g));
                targets.push(x_alpha(&-g));
            }
            for v in targets {
                let r = ad_orbit(&alg, &u, &v, *cap);
                let dims: Vec<String> = r.dims.iter().map(usize::to_string).collect();
                b.checks.note(format!("orbit {v}"), true, format!("{} dims [{}]", r.verdict, dims.join(",")));
            }
        }
        Command::BuildIso { config, cert, target } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            if let Some(theta) = theta_for(&c, cert, target.as_deref(), b)? {
                b.checks.push("build-theta", true, "map constructed");
                let src = theta.source();
                let mut inputs = varsigma(src);
                inputs.extend(src.config().gamma.generators().iter().map(x_alpha));
                for s in inputs {
                    match theta.apply(&s) {
                        Ok(img) => b.extra.push(format!("theta({s}) = {img}")),
                        Err(e) => b.fail("image", &e),
                    }
                }
            }
        }
        Command::VerifyIso { config, cert, target, samples, seed } => {
            let c = load(config)?;
            b.line(format!("config: sha256:{}", c.digest));
            let seed = seed.unwrap_or(c.file.seed);
            if let Some(theta) = theta_for(&c, cert, target.as_deref(), b)? {
                match verify_homomorphism(&theta, *samples, seed) {
                    Ok(r) => {
                        let detail = r.to_string().replace('\n', "; ");
                        b.checks.push("homomorphism", r.passed(), detail);
                    }
                    Err(e) => b.fail("homomorphism", &e),
                }
            }
        }
        Command::OracleCompare { k, cap } => match compare_with_normalized(*k, *cap) {
            Ok(r) => b.checks.extend(r),
            Err(Error::EmptyLayout) => return Err(InputError("k must be positive".into())),
            Err(e) => b.fail("classical-vs-normalized", &e),
        },
    }
    Ok(())
}

/// Runs a parsed command line; `echo` is the command as typed.
pub fn run(cli: &Cli, echo: &str) -> Outcome {
    let start = Instant::now();
    let mut b = Body::new();
    let result = dispatch(&cli.command, &mut b);
    if cli.timing {
        eprintln!("timing: {:.3} s", start.elapsed().as_secs_f64());
    }
    let mut out = String::new();
    let _ = writeln!(out, "command: {echo}");
    out.push_str(&b.head);
    if let Err(InputError(msg)) = result {
        let _ = writeln!(out, "error: {msg}");
        let _ = writeln!(out, "result: ERROR");
        return Outcome { code: 2, report: out };
    }
    out.push_str(&b.checks.to_string());
    for e in &b.extra {
        let _ = writeln!(out, "{e}");
    }
    let passed = b.checks.passed();
    let _ = writeln!(out, "result: {}", if passed { "PASS" } else { "FAIL" });
    Outcome { code: if passed { 0 } else { 1 }, report: out }
}

/// Parses `args` (program name first) and runs; usage errors exit with `2`.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let echo = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect::<Vec<_>>().join(" ");
    match Cli::try_parse_from(&args) {
        Ok(cli) => run(&cli, &echo),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, report: e.to_string() }
        }
    }
}
