use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::{debug, info};
use rayon::prelude::*;
use serde_json::{json, Value};

use hopf_scaffold::action::GaloisAction;
use hopf_scaffold::arith::LaurentPoly;
use hopf_scaffold::dual::DualElement;
use hopf_scaffold::field::{l_valuation, ExtensionParams, LElement};
use hopf_scaffold::hopf::HopfParams;
use hopf_scaffold::module_structure::{assoc_order_basis, freeness_b1, is_free, IdealIndex};
use hopf_scaffold::scaffold::{
    integer_certificate_check, min_f_valuation_for, verify_scaffold, ScaffoldContext,
};
use hopf_scaffold::Error;

#[derive(Parser)]
#[command(
    name = "hopf-scaffold",
    version,
    about = "Hopf Galois scaffolds and associated orders over F_p((T))"
)]
struct Cli {
    #[command(flatten)]
    config: Config,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Config {
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,
    #[arg(long, global = true, default_value_t = 2)]
    n: u32,
    #[arg(long, global = true, default_value_t = 1)]
    r: u32,
    #[arg(long, global = true, default_value_t = 1, allow_hyphen_values = true)]
    b: i64,
    /// f = T^{f_val}; defaults to the least value giving tolerance 2p^n - 1.
    #[arg(long = "f-val", global = true, allow_hyphen_values = true)]
    f_val: Option<i64>,
    /// Arbitrary f as a Laurent polynomial, overriding --f-val.
    #[arg(long, global = true, allow_hyphen_values = true)]
    f: Option<String>,
    /// β as a Laurent polynomial; defaults to T^-b.
    #[arg(long, global = true, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Worker threads for sweeps (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Precompute every Δ(t^i) before running.
    #[arg(long, global = true)]
    eager: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Freeness of P_L^h over its associated order, for each h in a range.
    Freeness {
        /// A single h or an inclusive range `a..b`.
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },
    /// Check every scaffold congruence.
    ScaffoldVerify,
    /// Apply z to y.
    Act {
        #[arg(long)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Basis of the associated order of P_L^h.
    AssocOrder {
        #[arg(long, allow_hyphen_values = true)]
        h: i64,
        /// Emit the basis even below the required tolerance.
        #[arg(long)]
        force: bool,
        /// Also print each basis element in the z_j basis.
        #[arg(long)]
        materialize: bool,
    },
    /// Valuations of every z-monomial applied to ρ (default λ_b).
    Certificate {
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<String>,
    },
    /// Freeness table over one period of h.
    Atlas,
}

enum Failure {
    Verification(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<String, Failure>;

struct Setup {
    ext: ExtensionParams,
    hopf: HopfParams,
    f_val: i64,
}

fn setup(c: &Config) -> Result<Setup, Error> {
    let beta = match &c.beta {
        Some(text) => LaurentPoly::parse(text, c.p)?,
        None => LaurentPoly::monomial(1, -c.b, c.p),
    };
    let ext = ExtensionParams::new(c.p, c.n, c.b, beta)?;
    let f = match (&c.f, c.f_val) {
        (Some(text), _) => LaurentPoly::parse(text, c.p)?,
        (None, Some(v)) => LaurentPoly::monomial(1, v, c.p),
        (None, None) => {
            let target = 2 * ext.degree() as i64 - 1;
            LaurentPoly::monomial(1, min_f_valuation_for(target, &ext, c.r), c.p)
        }
    };
    let hopf = HopfParams::new(c.p, c.n, c.r, f)?;
    let f_val = hopf.f_valuation();
    Ok(Setup { ext, hopf, f_val })
}

fn parse_range(text: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Parse(format!("bad h range `{text}`"));
    match text.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().map_err(|_| bad())?;
            let hi = b.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        None => {
            let h = text.trim().parse().map_err(|_| bad())?;
            Ok((h, h))
        }
    }
}

fn to_json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialise")
}

fn params_json(s: &Setup) -> Value {
    json!({
        "p": s.ext.p(),
        "n": s.ext.n(),
        "r": s.hopf.r(),
        "b": s.ext.b(),
        "f_val": s.f_val,
        "f": s.hopf.f().to_string(),
        "beta": s.ext.beta().to_string(),
    })
}

fn freeness_json(s: &Setup, h: i64) -> Value {
    let report = is_free(&IdealIndex::new(h, &s.ext), &s.ext);
    let mut v = serde_json::to_value(&report).expect("report serialises");
    let obj = v.as_object_mut().expect("report is an object");
    if let Value::Object(params) = params_json(s) {
        obj.extend(params);
    }
    obj.insert(
        "generator_count_basis".into(),
        json!("per interpreted formula"),
    );
    v
}

fn cmd_freeness(s: &Setup, out: Output, range: &str) -> CmdResult {
    let (lo, hi) = parse_range(range)?;
    let reports: Vec<Value> = (lo..=hi)
        .into_par_iter()
        .map(|h| freeness_json(s, h))
        .collect();
    Ok(match out {
        Output::Json => to_json(&Value::Array(reports)),
        Output::Tsv => {
            let mut text = String::from("h\th_norm\tm\tfree\twitness_j\tgenerator_count\n");
            for r in &reports {
                writeln!(
                    text,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r["h_raw"],
                    r["h_norm"],
                    r["m"],
                    r["free"],
                    r["witness_j"],
                    r["generator_count"]
                )
                .unwrap();
            }
            text
        }
        Output::Pretty => {
            let mut text = String::new();
            for r in &reports {
                writeln!(
                    text,
                    "h = {} (normalised {}, m = {}): {}",
                    r["h_raw"],
                    r["h_norm"],
                    r["m"],
                    if r["free"] == true {
                        "free"
                    } else {
                        "not free"
                    }
                )
                .unwrap();
                writeln!(text, "  d = {}", r["d"]).unwrap();
                writeln!(text, "  w = {}", r["w"]).unwrap();
                writeln!(
                    text,
                    "  generators (per interpreted formula): {}",
                    r["generator_count"]
                )
                .unwrap();
            }
            text
        }
    })
}

fn cmd_scaffold_verify(s: &Setup, out: Output) -> CmdResult {
    let action = GaloisAction::new(s.ext.clone(), s.hopf.clone())?;
    let ctx = ScaffoldContext::new(&action)?;
    info!("tolerance {} with a = {}", ctx.tolerance(), ctx.a());
    let report = verify_scaffold(&ctx);
    let text = match out {
        Output::Json => to_json(&serde_json::to_value(&report).expect("report serialises")),
        Output::Tsv => {
            let mut text = String::from("s\tj\tdigit\tdepth\tpassed\n");
            for c in &report.checks {
                writeln!(
                    text,
                    "{}\t{}\t{}\t{}\t{}",
                    c.s, c.j, c.digit, c.depth, c.passed
                )
                .unwrap();
            }
            text
        }
        Output::Pretty => {
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            format!(
                "tolerance {}: {} of {} checks passed\n",
                report.tolerance,
                report.checks.len() - failed,
                report.checks.len()
            )
        }
    };
    if report.all_passed {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Verification("scaffold congruence failed".into()))
    }
}

fn cmd_act(s: &Setup, out: Output, z: &str, y: &str) -> CmdResult {
    let action = GaloisAction::new(s.ext.clone(), s.hopf.clone())?;
    let z = DualElement::parse(z, &s.hopf)?;
    let y = LElement::parse(y, &s.ext)?;
    let result = action.act(&z, &y);
    let v = l_valuation(&result, &s.ext);
    Ok(match out {
        Output::Json => to_json(&json!({
            "z": z.to_string(),
            "y": y.to_string(),
            "result": result.to_string(),
            "valuation": v,
        })),
        Output::Tsv => format!("result\tvaluation\n{result}\t{v}\n"),
        Output::Pretty => format!("{result}\nv_L = {v}\n"),
    })
}

fn cmd_assoc_order(s: &Setup, out: Output, h: i64, force: bool, materialize: bool) -> CmdResult {
    let action = GaloisAction::new(s.ext.clone(), s.hopf.clone())?;
    let basis = assoc_order_basis(&IdealIndex::new(h, &s.ext), &action, force)?;
    let elements = if materialize {
        Some(basis.materialize(&action)?)
    } else {
        None
    };
    Ok(match out {
        Output::Json => {
            let mut v = serde_json::to_value(&basis).expect("basis serialises");
            let obj = v.as_object_mut().expect("basis is an object");
            obj.insert("params".into(), params_json(s));
            if let Some(elems) = &elements {
                let texts: Vec<String> = elems.iter().map(ToString::to_string).collect();
                obj.insert("elements".into(), json!(texts));
            }
            to_json(&v)
        }
        Output::Tsv | Output::Pretty => {
            let mut text = String::new();
            if !basis.trusted {
                text.push_str("# untrusted: tolerance below 2p^n - 1\n");
            }
            text.push_str("digits\tshift\n");
            for rec in &basis.basis {
                let digits: Vec<String> = rec.digits.iter().map(u32::to_string).collect();
                writeln!(text, "{}\t{}", digits.join(","), rec.shift).unwrap();
            }
            if let Some(elems) = &elements {
                for e in elems {
                    writeln!(text, "{e}").unwrap();
                }
            }
            text
        }
    })
}

fn cmd_certificate(s: &Setup, out: Output, rho: Option<&str>) -> CmdResult {
    let action = GaloisAction::new(s.ext.clone(), s.hopf.clone())?;
    let ctx = ScaffoldContext::new(&action)?;
    let rho = match rho {
        Some(text) => LElement::parse(text, &s.ext)?,
        None => ctx.lambda(s.ext.b()),
    };
    let report = integer_certificate_check(&rho, &ctx)?;
    let text = match out {
        Output::Json => {
            let mut v = serde_json::to_value(&report).expect("report serialises");
            let obj = v.as_object_mut().expect("report is an object");
            obj.insert("rho".into(), json!(rho.to_string()));
            obj.insert("params".into(), params_json(s));
            to_json(&v)
        }
        Output::Tsv | Output::Pretty => {
            let mut text = String::from("j\tvaluation\texpected\n");
            for e in &report.entries {
                writeln!(text, "{}\t{}\t{}", e.j, e.valuation, e.expected).unwrap();
            }
            text
        }
    };
    if report.passed() {
        Ok(text)
    } else {
        print!("{text}");
        Err(Failure::Verification(
            "certificate valuations do not match".into(),
        ))
    }
}

fn cmd_atlas(s: &Setup, out: Output) -> CmdResult {
    let pn = s.ext.degree() as i64;
    let lo = s.ext.b() - pn + 1;
    let rows: Vec<Value> = (lo..=s.ext.b())
        .into_par_iter()
        .map(|h| {
            let mut v = freeness_json(s, h);
            let closed = freeness_b1(h, &s.ext).ok();
            v.as_object_mut()
                .expect("report is an object")
                .insert("freeness_b1".into(), json!(closed));
            v
        })
        .collect();
    if out == Output::Json {
        return Ok(to_json(&Value::Array(rows)));
    }
    let mut text = String::from("h\tfree\tfreeness_b1\tgenerator_count\twitness_j\n");
    for r in &rows {
        writeln!(
            text,
            "{}\t{}\t{}\t{}\t{}",
            r["h_norm"], r["free"], r["freeness_b1"], r["generator_count"], r["witness_j"]
        )
        .unwrap();
    }
    Ok(text)
}

fn run(cli: &Cli) -> CmdResult {
    let s = setup(&cli.config)?;
    debug!("extension {:?}, hopf {:?}", s.ext, s.hopf);
    if cli.config.eager {
        GaloisAction::new(s.ext.clone(), s.hopf.clone())?
            .dual()
            .primal()
            .precompute();
    }
    let out = cli.config.output;
    match &cli.command {
        Command::Freeness { h } => cmd_freeness(&s, out, h),
        Command::ScaffoldVerify => cmd_scaffold_verify(&s, out),
        Command::Act { z, y } => cmd_act(&s, out, z, y),
        Command::AssocOrder {
            h,
            force,
            materialize,
        } => cmd_assoc_order(&s, out, *h, *force, *materialize),
        Command::Certificate { rho } => cmd_certificate(&s, out, rho.as_deref()),
        Command::Atlas => cmd_atlas(&s, out),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("SCAFFOLD_LOG", "warn")).init();
    let cli = Cli::parse();
    if cli.config.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.config.jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(text) => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::HypothesisUnmet(_) | Error::ToleranceInsufficient { .. } => {
                    ExitCode::from(3)
                }
                _ => ExitCode::from(2),
            }
        }
    }
}
