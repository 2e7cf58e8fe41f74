use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use satake::decorations::heck::heck_report_standalone;
use satake::decorations::table1::table1;
use satake::decorations::{enumerate_cd, parse_gamma, parse_nodes, parse_tau, Analysis, Decoration};
use satake::ksub::structure::{center_report, reductivity_report};
use satake::ksub::{dimension_formula, lie_closure, standard_basis, KGenerators};
use satake::linalg::{q, Q};
use satake::verify::{verify, VerifyConfig};
use satake::{CartanMatrix, Error, LieAlgebra, RootSystem};

#[derive(Parser)]
#[command(name = "satake", version, about = "Generalized Satake diagrams and the subalgebras k_gamma")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (0: all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(clap::Args, Clone)]
struct Target {
    /// Type string such as A3, G2 or A1xA1.
    #[arg(long = "type")]
    type_: String,
    /// Nodes of X, 1-based and comma-separated; empty for no nodes.
    #[arg(long = "X")]
    x: Option<String>,
    /// "id", "w0" or pairs "1:3,3:1".
    #[arg(long)]
    tau: Option<String>,
    /// Rationals indexed by the nodes outside X, e.g. "1,-2/3".
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long)]
    allow_zero_gamma: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List all compatible decorations with their labels.
    Enumerate(Target),
    /// Label one decoration and report its index sets.
    Classify(Target),
    /// The set GSat \ Sat against the printed families. Types ending in "n"
    /// (e.g. "Bn") run ranks up to --max-rank.
    Table1 {
        #[arg(long = "type")]
        type_: String,
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Restricted Weyl group conditions.
    Heck(Target),
    /// Build k and its standard basis.
    BuildK(Target),
    /// Full verification battery.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 6)]
        max_rank: usize,
    },
    /// Centre and reductivity of k.
    Center(Target),
}

enum Failure {
    Input(String),
    Verification(Value),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_) => Failure::Input(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

type Out = Result<Value, Failure>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn root_system(t: &str) -> Result<RootSystem, Failure> {
    Ok(RootSystem::generate(&CartanMatrix::from_type_string(t)?)?)
}

fn decoration(rs: &RootSystem, t: &Target) -> Result<Decoration, Failure> {
    let x = parse_nodes(t.x.as_deref().unwrap_or(""), rs.rank())?;
    let tau = parse_tau(t.tau.as_deref().unwrap_or("id"), rs)?;
    Ok(Decoration::new(rs, &x, tau)?)
}

fn gamma(dec: &Decoration, t: &Target) -> Result<Vec<Q>, Failure> {
    let g = match &t.gamma {
        Some(s) => parse_gamma(s)?,
        None => vec![q(1); dec.white().len()],
    };
    if g.len() != dec.white().len() {
        return Err(Failure::Input(format!(
            "gamma needs {} entries, one per node outside X",
            dec.white().len()
        )));
    }
    if !t.allow_zero_gamma && g.iter().any(|c| *c == q(0)) {
        return Err(Failure::Input("zero gamma entry; pass --allow-zero-gamma".into()));
    }
    Ok(g)
}

fn enumerate(t: &Target) -> Out {
    let rs = root_system(&t.type_)?;
    let a = rs.cartan();
    let mut counts = std::collections::BTreeMap::<String, usize>::new();
    let rows: Vec<Value> = enumerate_cd(&rs)
        .iter()
        .map(|d| {
            let label = Analysis::new(&rs, d).classify().to_string();
            *counts.entry(label.clone()).or_default() += 1;
            json!({"decoration": d.to_json(a), "label": label})
        })
        .collect();
    Ok(json!({"type": a.type_string(), "count": rows.len(), "counts": counts, "decorations": rows}))
}

fn classify(t: &Target) -> Out {
    let rs = root_system(&t.type_)?;
    let dec = decoration(&rs, t)?;
    let an = Analysis::new(&rs, &dec);
    let one = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
    let ix = an.index_sets();
    Ok(json!({
        "decoration": dec.to_json(rs.cartan()),
        "label": an.classify().to_string(),
        "violation": an.gsat_violation(),
        "reformulations": an.gsat_reformulations(),
        "non_integral_nodes": one(&an.non_integral_nodes()),
        "I_star": one(&ix.i_star),
        "I_diff": one(&ix.i_diff),
        "I_ns": one(&ix.i_ns),
        "I_nsf": one(&ix.i_nsf),
    }))
}

fn table1_cmd(type_: &str, max_rank: usize) -> Out {
    let types: Vec<String> = match type_.strip_suffix(['n', 'N']) {
        Some(letter) if letter.len() == 1 => {
            let lo = match letter.to_ascii_uppercase().as_str() {
                "A" => 1,
                "B" | "C" => 2,
                "D" => 4,
                _ => return Err(Failure::Input(format!("no rank family '{type_}'"))),
            };
            (lo..=max_rank).map(|n| format!("{letter}{n}")).collect()
        }
        _ => vec![type_.to_string()],
    };
    let mut out = Vec::new();
    for t in types {
        let rs = root_system(&t)?;
        let r = table1(&rs)?;
        let a = rs.cartan();
        let entry = |e: &satake::decorations::table1::Table1Entry| {
            json!({
                "X": e.x.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "tau": e.tau.pairs(),
                "node": e.node + 1,
                "label": e.label.to_string(),
                "family": e.family,
            })
        };
        out.push(json!({
            "type": a.type_string(),
            "entries": r.entries.iter().map(entry).collect::<Vec<_>>(),
            "borderline": r.borderline.iter().map(entry).collect::<Vec<_>>(),
            "unmatched": r.entries.iter().filter(|e| e.family.is_none()).count(),
        }));
    }
    Ok(Value::Array(out))
}

fn heck(t: &Target) -> Out {
    let rs = root_system(&t.type_)?;
    let decs = if t.x.is_none() && t.tau.is_none() {
        enumerate_cd(&rs)
    } else {
        vec![decoration(&rs, t)?]
    };
    let rows = decs
        .iter()
        .map(|d| {
            let r = heck_report_standalone(&rs, d)?;
            let gsat = Analysis::new(&rs, d).is_gsat();
            Ok(json!({"decoration": d.to_json(rs.cartan()), "gsat": gsat, "report": r}))
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(Value::Array(rows))
}

fn build_k(t: &Target) -> Out {
    let rs = root_system(&t.type_)?;
    let dec = decoration(&rs, t)?;
    let gm = gamma(&dec, t)?;
    let g = LieAlgebra::build(&rs)?;
    let gens = KGenerators::new(&g, &dec, &gm, t.allow_zero_gamma)?;
    let k = lie_closure(&g, &gens.all());
    let sb = standard_basis(&g, &dec, &gens, &k);
    Ok(json!({
        "decoration": dec.to_json(rs.cartan()),
        "gamma": gm.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "dim_g": g.dim(),
        "dim_k": k.dim(),
        "dim_formula": dimension_formula(&g, &dec),
        "closure_certified": k.is_subalgebra,
        "standard_basis": sb,
    }))
}

fn center(t: &Target) -> Out {
    let rs = root_system(&t.type_)?;
    let dec = decoration(&rs, t)?;
    let gm = gamma(&dec, t)?;
    let g = LieAlgebra::build(&rs)?;
    let gens = KGenerators::new(&g, &dec, &gm, t.allow_zero_gamma)?;
    let k = lie_closure(&g, &gens.all());
    let sb = standard_basis(&g, &dec, &gens, &k);
    Ok(json!({
        "decoration": dec.to_json(rs.cartan()),
        "label": Analysis::new(&rs, &dec).classify().to_string(),
        "center": center_report(&g, &dec, &sb),
        "reductivity": reductivity_report(&g, &k.space),
    }))
}

fn verify_cmd(t: &Target, max_rank: usize, seed: u64) -> Out {
    let a = CartanMatrix::from_type_string(&t.type_)?;
    if a.rank() > max_rank {
        return Err(Failure::Input(format!("rank {} exceeds --max-rank {max_rank}", a.rank())));
    }
    let rs = RootSystem::generate(&a)?;
    let single = t.x.is_some() || t.tau.is_some();
    let mut cfg = VerifyConfig { seed, ..VerifyConfig::default() };
    if single {
        let dec = decoration(&rs, t)?;
        cfg.x = Some(dec.x.clone());
        cfg.tau = Some(dec.tau.clone());
        if t.gamma.is_some() {
            if t.allow_zero_gamma {
                return Err(Failure::Input("verify needs nonzero gamma".into()));
            }
            cfg.gamma = Some(gamma(&dec, t)?);
        }
    } else if t.gamma.is_some() {
        return Err(Failure::Input("--gamma needs --X or --tau".into()));
    }
    let report = verify(&a, &cfg, &|m| eprintln!("{m}"))?;
    let v = to_value(&report);
    if report.passed {
        Ok(v)
    } else {
        Err(Failure::Verification(v))
    }
}

/// Flattens a JSON value into `path = value` lines, so text output carries
/// the same data as JSON.
fn render_text(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                render_text(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                render_text(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => {
            out.push_str(path);
            out.push_str(" = ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
    }
}

fn emit(v: &Value, f: Format) {
    match f {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Text => {
            let mut s = String::new();
            render_text(v, "", &mut s);
            print!("{s}");
        }
    }
}

/// 0 success, 1 verification failure (or an internal error), 2 invalid input.
fn exit_code(res: &Out) -> u8 {
    match res {
        Ok(_) => 0,
        Err(Failure::Verification(_) | Failure::Other(_)) => 1,
        Err(Failure::Input(_)) => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if cli.jobs > 0 {
        pool = pool.num_threads(cli.jobs);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let res = pool.install(|| match &cli.command {
        Command::Enumerate(t) => enumerate(t),
        Command::Classify(t) => classify(t),
        Command::Table1 { type_, max_rank } => table1_cmd(type_, *max_rank),
        Command::Heck(t) => heck(t),
        Command::BuildK(t) => build_k(t),
        Command::Verify { target, max_rank } => verify_cmd(target, *max_rank, cli.seed),
        Command::Center(t) => center(t),
    });
    let code = exit_code(&res);
    match res {
        Ok(v) => emit(&v, cli.format),
        Err(Failure::Verification(v)) => {
            emit(&v, cli.format);
            eprintln!("verification failed");
        }
        Err(Failure::Input(m) | Failure::Other(m)) => eprintln!("error: {m}"),
    }
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(Value::Null)), 0);
        assert_eq!(exit_code(&Err(Failure::Verification(Value::Null))), 1);
        assert_eq!(exit_code(&Err(Failure::Other("x".into()))), 1);
        assert_eq!(exit_code(&Err(Failure::Input("x".into()))), 2);
        let bad = verify_cmd(
            &Target { type_: "A2".into(), x: None, tau: None, gamma: Some("1".into()), allow_zero_gamma: false },
            6,
            0,
        );
        assert_eq!(exit_code(&bad), 2);
    }
}
