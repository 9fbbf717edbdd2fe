//! The `squarenet` command line.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 input parse error,
//! 3 domain error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::dynamics::integrate;
use crate::parser::parse_network;
use crate::rational::{format_float, format_rational, parse_rational};
use crate::square::{
    classify, classify_form, enumerate_reversible_multistationary, figure1_sweep, format_params,
    horn_jackson_params, parse_params, roots_to_concentrations, signed_coefficients,
    symbolic_discriminant, witness_parameters, write_sweep_csv, Classification, Family, GridRange,
    HornJacksonVariant, SquareParams,
};
use crate::toric::toric_check;
use crate::Rational;

#[derive(Debug, Parser)]
#[command(name = "squarenet", version, about = "Steady states of mass-action networks on the cubic complexes c1^3, c1c2^2, c2^3, c1^2c2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Structural invariants of a network file.
    Info { file: PathBuf },
    /// Number and stability of positive steady states.
    Classify {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Steady states as concentrations on the line c1 + c2 = T.
    Roots {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        total: String,
    },
    /// Integrate the mass-action ODE with fixed-step RK4.
    Simulate {
        #[arg(long)]
        params: PathBuf,
        /// Initial state `c1,c2`.
        #[arg(long)]
        init: String,
        #[arg(long)]
        t_end: f64,
        #[arg(long, default_value_t = 1e-3)]
        dt: f64,
        /// CSV destination; standard output if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the toric condition that applies to the rate support.
    Toric {
        #[arg(long)]
        params: PathBuf,
    },
    /// Reversible networks capable of multistationarity.
    Enumerate {
        /// Also print a three-steady-state rate vector for each network.
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify a grid over (k14, k23, k32) with k41 = 1.
    Sweep {
        /// `k14=a:b:step`, `k23=...`, `k32=...`, each exactly once.
        #[arg(long = "range", required = true)]
        ranges: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Discriminant of p as a polynomial in the rate constants.
    Discriminant {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        terms_only: bool,
    },
    /// Classification at the Horn-Jackson rates.
    Hornjackson {
        #[arg(long, value_enum, default_value_t = VariantArg::Printed)]
        variant: VariantArg,
        #[arg(long, default_value = "1/100")]
        eps: String,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    General,
    Square,
    Vertical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Cycle,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Parse(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Domain(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> Failure {
    Failure::Domain(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_params(path: &Path) -> Result<SquareParams<Rational>, Failure> {
    let text = read(path)?;
    parse_params(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| Failure::Usage(format!("--{name}: '{text}' is not a number")))
}

fn write_to(path: Option<&Path>, out: &mut dyn Write, body: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, body).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => out.write_all(body).map_err(|e| Failure::Usage(e.to_string())),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Run the CLI on `args` (including the program name). Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let mut text = String::new();
    match execute(cli.command, &mut text, out) {
        Ok(()) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(f) => {
            let _ = out.write_all(text.as_bytes());
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cmd: Command, o: &mut String, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Info { file } => {
            let src = read(&file)?;
            let l = parse_network(&src).map_err(|e| Failure::Parse(format!("{}: {e}", file.display())))?;
            let n = &l.network;
            writeln!(
                o,
                "n={} l={} s={} deficiency={} reversible={} mass-preserving={}",
                n.num_complexes(),
                n.linkage_classes().len(),
                n.num_species(),
                n.deficiency(),
                yes_no(n.is_reversible()),
                yes_no(n.is_mass_preserving())
            )
            .unwrap();
        }
        Command::Classify { params, json } => {
            let k = load_params(&params)?;
            let c = classify(&k).map_err(domain)?;
            if json {
                let s = serde_json::to_string_pretty(&c).map_err(domain)?;
                writeln!(o, "{s}").unwrap();
            } else {
                write_classification(o, &c);
            }
        }
        Command::Roots { params, total } => {
            let k = load_params(&params)?;
            let t = rational_arg("total", &total)?;
            let c = classify(&k).map_err(domain)?;
            if c.degenerate_continuum {
                return Err(Failure::Domain("p is identically zero: every point of the line is a steady state".into()));
            }
            let xs: Vec<f64> = c.roots.iter().map(|r| r.x).collect();
            let conc = roots_to_concentrations(&xs, crate::scalar::Scalar::to_f64_lossy(&t)).map_err(domain)?;
            writeln!(o, "{:<20} {:<20} {:<20} stability", "x", "c1", "c2").unwrap();
            for (r, c) in c.roots.iter().zip(conc) {
                writeln!(
                    o,
                    "{:<20} {:<20} {:<20} {}",
                    format_float(r.x),
                    format_float(c[0]),
                    format_float(c[1]),
                    r.stability
                )
                .unwrap();
            }
        }
        Command::Simulate { params, init, t_end, dt, out: dest } => {
            let k = load_params(&params)?;
            let c0: Vec<f64> = init
                .split(',')
                .map(|s| s.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::Usage(format!("--init: expected 'c1,c2', got '{init}'")))?;
            if c0.len() != 2 {
                return Err(Failure::Usage(format!("--init: expected two values, got {}", c0.len())));
            }
            let net = SquareParams::network();
            let traj = integrate(&net, &k.rate_assignment(), &c0, t_end, dt).map_err(domain)?;
            let mut buf = Vec::new();
            traj.write_csv(net.species(), &mut buf).map_err(domain)?;
            write_to(dest.as_deref(), out, &buf)?;
        }
        Command::Toric { params } => {
            let k = load_params(&params)?;
            let (cond, holds) = toric_check(&k).map_err(domain)?;
            writeln!(o, "condition: {cond}\ntoric: {}", yes_no(holds)).unwrap();
        }
        Command::Enumerate { witness, seed } => {
            let e = enumerate_reversible_multistationary();
            for pairs in &e.networks {
                let names: Vec<String> = pairs.iter().map(|(i, j)| format!("{i}<->{j}")).collect();
                writeln!(o, "{}", names.join(" ")).unwrap();
                if witness {
                    let support = crate::square::directed(pairs);
                    let k = witness_parameters(&support, seed)
                        .ok_or_else(|| Failure::Domain(format!("no witness found for {}", names.join(" "))))?;
                    for line in format_params(&k).lines() {
                        writeln!(o, "  {line}").unwrap();
                    }
                }
            }
            writeln!(o, "total {}", e.networks.len()).unwrap();
            for (edges, count) in &e.histogram {
                writeln!(o, "{edges} edges: {count}").unwrap();
            }
        }
        Command::Sweep { ranges, out: dest } => {
            let [a, b, c] = sweep_ranges(&ranges)?;
            let records = figure1_sweep(&a, &b, &c);
            let mut buf = Vec::new();
            write_sweep_csv(&records, &mut buf).map_err(domain)?;
            write_to(dest.as_deref(), out, &buf)?;
        }
        Command::Discriminant { family, terms_only } => {
            let d = symbolic_discriminant(match family {
                FamilyArg::General => Family::General12,
                FamilyArg::Square => Family::Square8,
                FamilyArg::Vertical => Family::Vertical4,
            });
            if terms_only {
                writeln!(o, "{}", d.num_terms()).unwrap();
            } else {
                writeln!(o, "{d}").unwrap();
            }
        }
        Command::Hornjackson { variant, eps } => {
            let eps = rational_arg("eps", &eps)?;
            let v = match variant {
                VariantArg::Printed => HornJacksonVariant::Printed,
                VariantArg::Cycle => HornJacksonVariant::Cycle,
            };
            let k = horn_jackson_params(v, &eps).map_err(domain)?;
            write!(o, "{}", format_params(&k)).unwrap();
            write_classification(o, &classify_form(&signed_coefficients(&k)));
        }
    }
    Ok(())
}

fn sweep_ranges(ranges: &[String]) -> Result<[GridRange; 3], Failure> {
    let names = ["k14", "k23", "k32"];
    let mut found: [Option<GridRange>; 3] = [None, None, None];
    for r in ranges {
        let (key, spec) = r
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--range: expected 'kIJ=a:b:step', got '{r}'")))?;
        let idx = names
            .iter()
            .position(|n| *n == key.trim())
            .ok_or_else(|| Failure::Usage(format!("--range: unknown rate '{key}', expected k14, k23 or k32")))?;
        if found[idx].is_some() {
            return Err(Failure::Usage(format!("--range: {key} given twice")));
        }
        found[idx] = Some(GridRange::parse(spec.trim()).map_err(|e| Failure::Usage(format!("--range: {e}")))?);
    }
    let [a, b, c] = found;
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Ok([a, b, c]),
        _ => Err(Failure::Usage("--range must be given for k14, k23 and k32".into())),
    }
}

fn write_classification(o: &mut String, c: &Classification) {
    let f = &c.form;
    writeln!(
        o,
        "S0 = {}  S1 = {}  S2 = {}  S3 = {}",
        format_rational(&f.s0),
        format_rational(&f.s1),
        format_rational(&f.s2),
        format_rational(&f.s3)
    )
    .unwrap();
    if c.degenerate_continuum {
        writeln!(o, "p = 0: every point of the invariant line is a steady state").unwrap();
        return;
    }
    writeln!(
        o,
        "discriminant = {}  (degree {})",
        format_rational(&c.discriminant),
        c.effective_degree.unwrap_or(0)
    )
    .unwrap();
    writeln!(o, "steady states: {}  stable: {}", c.steady_state_count, c.stable_count).unwrap();
    if c.roots.is_empty() {
        return;
    }
    writeln!(o, "{:<20} {:<12} {:<12} interval", "x", "multiplicity", "stability").unwrap();
    for r in &c.roots {
        writeln!(
            o,
            "{:<20} {:<12} {:<12} [{}, {}]",
            format_float(r.x),
            r.multiplicity,
            r.stability.to_string(),
            format_rational(&r.lo),
            format_rational(&r.hi)
        )
        .unwrap();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["squarenet"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&[]).0, 1);
        assert_eq!(call(&["bogus"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        assert_eq!(call(&["discriminant", "--family", "cubic"]).0, 1);
        assert_eq!(call(&["info", "/nonexistent/x.crn"]).0, 1);
    }

    #[test]
    fn discriminant_terms() {
        let (code, out, _) = call(&["discriminant", "--family", "general", "--terms-only"]);
        assert_eq!(code, 0);
        assert_eq!(out, "213\n");
        let (_, out, _) = call(&["discriminant", "--family", "vertical", "--terms-only"]);
        assert_eq!(out, "5\n");
    }

    #[test]
    fn range_parsing() {
        let r: Vec<String> = ["k32=1:2:1", "k14=1:1:1", "k23=1:3:1"].iter().map(|s| s.to_string()).collect();
        let [a, b, c] = sweep_ranges(&r).unwrap();
        assert_eq!((a.values().len(), b.values().len(), c.values().len()), (1, 3, 2));
        assert!(sweep_ranges(&r[..2]).is_err());
        assert!(sweep_ranges(&["k12=1:2:1".to_string()]).is_err());
    }
}
