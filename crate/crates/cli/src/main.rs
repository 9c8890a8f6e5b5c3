//! byv — batch verification harness for the braided-Yangian suites.
//!
//! Subcommands: `verify <suite>` and `catalog`. Reports are JSON with exact
//! values rendered in the expression grammar; exit code 0 means no check
//! failed, 1 means at least one failure (or, under --strict, an inconclusive
//! ideal-membership verdict), 2 means a configuration or parse error.

use byv_core::braiding::{builtin_braiding, load_braiding, BuiltinName, RIdentity};
use byv_core::freealg::QMode;
use byv_core::gaudin::{
    abstract_commutativity, braided_sites, classical_sites, residue_check,
    verify_hamiltonian_commutativity, verify_talalaev_commutativity, verify_weighted_map,
    weighted_sites, BraidedSites, GaudinSystem,
};
use byv_core::report::{CheckRecord, Report, Status};
use byv_core::scalar::{Rat, SamplePlan};
use byv_core::symfun::{
    hat_multiplier_report, verify_al_chain, verify_bethe_commutativity, verify_newton,
    verify_qdet_central, verify_shift_lemma, verify_tau_orders, TopSymmetrizer, YangianContext,
};
use byv_core::{BraidKind, Braiding};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "byv", version, about = "exact verification of braided-Yangian identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// List the builtin braidings with dimension, kind and bi-rank.
    Catalog,
}

#[derive(Args)]
struct VerifyArgs {
    /// braid | rmatrix | bethe | newton | qdet | shiftlemma | alchain |
    /// gaudin | talalaev | tau
    suite: String,
    /// Builtin braiding name (flip, dj_hecke, conjugated_flip) or a path to
    /// an R-matrix JSON file.
    #[arg(long, default_value = "dj_hecke")]
    braiding: String,
    /// Dimension N of the braiding's factor space.
    #[arg(long, alias = "N", default_value_t = 2)]
    n: u32,
    /// Generator truncation T of the Yangian presentation.
    #[arg(long, alias = "T", default_value_t = 2)]
    t: usize,
    /// Degree cap D for ideal-membership checks.
    #[arg(long, alias = "D", default_value_t = 4)]
    d: usize,
    /// Scalar mode for membership elimination.
    #[arg(long, value_parser = ["symbolic", "sampled"], default_value = "symbolic")]
    q_mode: String,
    /// Seed for the deterministic sample plans.
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Number of sample points in the plan.
    #[arg(long, default_value_t = 12)]
    points: usize,
    /// Pairs like "1,1;1,2;2,2" (bethe, shiftlemma).
    #[arg(long)]
    pairs: Option<String>,
    /// Highest k for newton/alchain/talalaev suites.
    #[arg(long, default_value_t = 2)]
    kmax: u8,
    /// Gaudin: number of sites.
    #[arg(long, default_value_t = 2)]
    sites: usize,
    /// Gaudin: site points, comma separated rationals ("0,1,2" or "1/2,3").
    #[arg(long)]
    site_points: Option<String>,
    /// Gaudin: verify the weighted Hamiltonian family instead.
    #[arg(long, default_value_t = false)]
    weighted: bool,
    /// Gaudin: JSON system descriptor
    /// {"flavor","m","sites","points","braiding"} overriding the flags.
    #[arg(long)]
    system: Option<PathBuf>,
    /// Write the JSON report here (certificates go to <path>.certs/).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Promote inconclusive membership verdicts to failures.
    #[arg(long, default_value_t = false)]
    strict: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Catalog => catalog(),
        Command::Verify(args) => match run(&args) {
            Ok(report) => finish(report, &args.report, args.strict),
            Err(msg) => {
                eprintln!("configuration error: {msg}");
                ExitCode::from(2)
            }
        },
    }
}

fn catalog() -> ExitCode {
    // stable ordering by (name, N)
    let mut entries: Vec<(String, u32, Braiding)> = Vec::new();
    for (name, dims) in [
        (BuiltinName::ConjugatedFlip, vec![2u32]),
        (BuiltinName::DjHecke, vec![2, 3]),
        (BuiltinName::Flip, vec![2, 3]),
    ] {
        for n in dims {
            let b = builtin_braiding(name, n, None).expect("catalog braiding must verify");
            entries.push((name.as_str().to_string(), n, b));
        }
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    for (name, n, b) in entries {
        let kind = match b.kind {
            BraidKind::Hecke => "hecke",
            BraidKind::Involutive => "involutive",
        };
        println!("{name} N={n} {kind} m={}", b.birank());
    }
    ExitCode::SUCCESS
}

fn resolve_braiding(args: &VerifyArgs) -> Result<Braiding, String> {
    if let Some(name) = BuiltinName::parse(&args.braiding) {
        builtin_braiding(name, args.n, None).map_err(|e| e.to_string())
    } else {
        let path = PathBuf::from(&args.braiding);
        if !path.exists() {
            return Err(format!(
                "`{}` is neither a builtin braiding nor an existing file",
                args.braiding
            ));
        }
        load_braiding(&path).map_err(|e| e.to_string())
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|e| e.to_string())?;
        let d = BigInt::from_str(den.trim()).map_err(|e| e.to_string())?;
        if d == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(n, d))
    } else {
        Ok(Rat::from_integer(
            BigInt::from_str(s).map_err(|e| e.to_string())?,
        ))
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(u8, u8)>, String> {
    s.split(';')
        .map(|chunk| {
            let (a, b) = chunk
                .split_once(',')
                .ok_or_else(|| format!("bad pair `{chunk}`"))?;
            Ok((
                a.trim().parse::<u8>().map_err(|e: std::num::ParseIntError| e.to_string())?,
                b.trim().parse::<u8>().map_err(|e: std::num::ParseIntError| e.to_string())?,
            ))
        })
        .collect()
}

fn q_mode(args: &VerifyArgs) -> Result<QMode, String> {
    match args.q_mode.as_str() {
        "symbolic" => Ok(QMode::Symbolic),
        "sampled" => {
            let plan =
                SamplePlan::new(0, args.points, args.seed, &[]).map_err(|e| e.to_string())?;
            Ok(QMode::Sampled(plan))
        }
        other => Err(format!("unknown q-mode `{other}`")),
    }
}

fn config_echo(args: &VerifyArgs) -> String {
    format!(
        "suite={} braiding={} N={} T={} D={} q_mode={} seed={} points={} pairs={:?} kmax={} sites={} weighted={} strict={}",
        args.suite,
        args.braiding,
        args.n,
        args.t,
        args.d,
        args.q_mode,
        args.seed,
        args.points,
        args.pairs,
        args.kmax,
        args.sites,
        args.weighted,
        args.strict
    )
}

/// Gaudin system descriptor:
/// { "flavor": "classical"|"braided"|"weighted", "m": int, "sites": K,
///   "points": ["0", "1/2", ...], "braiding": name-or-path }
fn load_system_descriptor(args: &VerifyArgs) -> Result<Option<VerifyArgs>, String> {
    let Some(path) = &args.system else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let flavor = v["flavor"].as_str().unwrap_or("classical").to_string();
    let m = v["m"].as_u64().ok_or("descriptor needs integer m")? as u32;
    let sites = v["sites"].as_u64().ok_or("descriptor needs integer sites")? as usize;
    let points: Vec<String> = v["points"]
        .as_array()
        .ok_or("descriptor needs a points array")?
        .iter()
        .map(|p| p.as_str().map(str::to_string).ok_or("points must be strings"))
        .collect::<Result<_, _>>()?;
    let braiding = v["braiding"].as_str().unwrap_or("flip").to_string();
    let mut out = VerifyArgs {
        suite: args.suite.clone(),
        braiding,
        n: m,
        t: args.t,
        d: args.d,
        q_mode: args.q_mode.clone(),
        seed: args.seed,
        points: args.points,
        pairs: args.pairs.clone(),
        kmax: args.kmax,
        sites,
        site_points: Some(points.join(",")),
        weighted: flavor == "weighted",
        system: None,
        report: args.report.clone(),
        strict: args.strict,
    };
    if flavor == "classical" {
        out.braiding = "flip".to_string();
    }
    Ok(Some(out))
}

fn gaudin_points(args: &VerifyArgs) -> Result<Vec<Rat>, String> {
    match &args.site_points {
        Some(s) => s.split(',').map(parse_rat).collect(),
        None => Ok((0..args.sites as i64)
            .map(|i| {
                if args.weighted {
                    Rat::from_integer((i + 1).into())
                } else {
                    Rat::from_integer(i.into())
                }
            })
            .collect()),
    }
}

fn sample_pairs(args: &VerifyArgs, system_points: &[Rat]) -> Result<Vec<(Rat, Rat)>, String> {
    let plan =
        SamplePlan::new(0, args.points.max(10), args.seed, &[]).map_err(|e| e.to_string())?;
    let good: Vec<Rat> = plan
        .points
        .into_iter()
        .filter(|p| !system_points.contains(p))
        .collect();
    Ok(good
        .windows(2)
        .take(5)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect())
}

fn run(args: &VerifyArgs) -> Result<Report, String> {
    if args.t < 1 {
        return Err("T must be at least 1".into());
    }
    if args.d < 2 {
        return Err("D must be at least 2".into());
    }
    let mut report = Report::new(config_echo(args));
    let mode = q_mode(args)?;
    match args.suite.as_str() {
        "braid" => {
            // Files that parse but fail verification are reported as check
            // failures with a witness, not configuration errors.
            let candidate = if BuiltinName::parse(&args.braiding).is_some() {
                Ok(resolve_braiding(args)?)
            } else {
                let path = PathBuf::from(&args.braiding);
                let (name, dim, mat, declared) =
                    byv_core::braiding::load_matrix(&path).map_err(|e| e.to_string())?;
                Braiding::verify_and_build(&name, dim, mat, declared)
            };
            match candidate {
                Err(e) => {
                    report.push(CheckRecord::fail("braid", &args.braiding, e.to_string()));
                }
                Ok(b) => {
                    let plan = SamplePlan::new(0, args.points, args.seed, &[])
                        .map_err(|e| e.to_string())?;
                    let ids = [
                        RIdentity::Braid,
                        RIdentity::KindCondition,
                        RIdentity::CProperties,
                        RIdentity::Idempotency,
                    ];
                    report.extend(byv_core::braiding::verify_rmatrix_identities(&b, &ids, &plan));
                    report.push(birank_record(&b));
                }
            }
        }
        "rmatrix" => {
            let b = resolve_braiding(args)?;
            let plan =
                SamplePlan::new(0, args.points, args.seed, &[]).map_err(|e| e.to_string())?;
            let kmax = args.kmax.max(2);
            let ids = [
                RIdentity::YangBaxter,
                RIdentity::RationalInversion,
                RIdentity::TrigInversion,
                RIdentity::Idempotency,
                RIdentity::ClosedForms { kmax: kmax + 1 },
                RIdentity::InverseChain { kmax },
                RIdentity::ChainCommutation { kmax },
                RIdentity::ChainPermutation { kmax },
                RIdentity::CyclicProperty,
                RIdentity::TraceShift,
            ];
            report.extend(byv_core::braiding::verify_rmatrix_identities(&b, &ids, &plan));
        }
        "bethe" => {
            let ctx = yangian_context(args)?;
            let pairs = match &args.pairs {
                Some(s) => parse_pairs(s)?,
                None => vec![(1, 1), (1, 2), (2, 2)],
            };
            let m = ctx.braiding.birank() as u8;
            if pairs.iter().any(|&(k, p)| k < 1 || p < 1 || k > m || p > m) {
                return Err(format!("pairs must lie within the bi-rank {m}"));
            }
            report.extend(verify_bethe_commutativity(&ctx, &pairs, args.d, &mode));
        }
        "newton" => {
            let ctx = yangian_context(args)?;
            let kmax = args.kmax.min(ctx.braiding.birank() as u8);
            report.extend(verify_newton(&ctx, kmax, args.d, &mode));
        }
        "qdet" => {
            let ctx = yangian_context(args)?;
            report.extend(verify_qdet_central(&ctx, args.d, &mode));
        }
        "shiftlemma" => {
            let ctx = yangian_context(args)?;
            let pairs = match &args.pairs {
                Some(s) => parse_pairs(s)?,
                None => vec![(1, 1), (1, 2)],
            };
            for (k, p) in pairs {
                if p as u32 > ctx.braiding.birank() {
                    return Err(format!("p = {p} exceeds the bi-rank"));
                }
                report.push(verify_shift_lemma(&ctx, k, p));
            }
        }
        "alchain" => {
            let ctx = yangian_context(args)?;
            if ctx.braiding.kind != BraidKind::Hecke {
                return Err("the alchain suite needs a Hecke symmetry".into());
            }
            for k in 1..=args.kmax.min(ctx.braiding.birank() as u8) {
                report.extend(verify_al_chain(&ctx, k, args.d, &mode));
            }
        }
        "gaudin" => {
            let resolved = load_system_descriptor(args)?;
            let args = resolved.as_ref().unwrap_or(args);
            let points = gaudin_points(args)?;
            if args.weighted {
                let sys =
                    weighted_sites(args.n, args.sites, &points).map_err(|e| e.to_string())?;
                report.push(
                    CheckRecord::pass(
                        "site_relations",
                        format!("weighted m={} K={}", args.n, args.sites),
                    )
                    .with_note("verified exactly at construction"),
                );
                report.extend(verify_hamiltonian_commutativity(&sys));
                report.push(verify_weighted_map(args.n, args.sites, &points));
            } else {
                let b = resolve_braiding(args)?;
                match gaudin_system(args, &b, &points)? {
                    BraidedSites::Concrete(sys) => {
                        report.push(
                            CheckRecord::pass(
                                "site_relations",
                                format!("{:?} m={} K={}", sys.flavor, sys.m, sys.sites_count),
                            )
                            .with_note("verified exactly at construction (concrete path)"),
                        );
                        let pairs = sample_pairs(args, &points)?;
                        report.push(sys.verify_lax_relation(&pairs));
                        report.extend(verify_hamiltonian_commutativity(&sys));
                    }
                    BraidedSites::Abstract(ag) => {
                        report.push(
                            CheckRecord::pass(
                                "site_relations",
                                format!("abstract m={} K={}", ag.braiding.dim, ag.sites_count),
                            )
                            .with_note("abstract presentation (membership mode)"),
                        );
                        report.extend(abstract_commutativity(&ag, args.d, &mode));
                    }
                }
            }
        }
        "talalaev" => {
            let resolved = load_system_descriptor(args)?;
            let args = resolved.as_ref().unwrap_or(args);
            let points = gaudin_points(args)?;
            let b = resolve_braiding(args)?;
            match gaudin_system(args, &b, &points)? {
                BraidedSites::Concrete(sys) => {
                    let pairs = sample_pairs(args, &points)?;
                    report.push(verify_talalaev_commutativity(
                        &sys,
                        args.kmax.min(sys.braiding.birank() as u8),
                        &pairs,
                    ));
                    report.extend(residue_check(&sys));
                }
                BraidedSites::Abstract(_) => {
                    return Err(
                        "talalaev needs a concrete realization (flip or conjugated flip)".into()
                    );
                }
            }
        }
        "tau" => {
            let b = resolve_braiding(args)?;
            if b.kind != BraidKind::Involutive {
                return Err("the tau suite needs an involutive symmetry".into());
            }
            let ord = (args.t + 1).max(2);
            let ctx = YangianContext::h_family(b.clone(), args.t, ord);
            for top in [TopSymmetrizer::Full, TopSymmetrizer::MatchingK] {
                report.extend(verify_tau_orders(&ctx, 2, top, args.d.max(4), &mode));
            }
            let plain = YangianContext::rational(b, args.t);
            for k in 1..=args.kmax.min(plain.braiding.birank() as u8) {
                report.push(hat_multiplier_report(&ctx, &plain, k, args.d, &mode));
            }
        }
        other => return Err(format!("unknown suite `{other}`")),
    }
    report.sort_records();
    Ok(report)
}

fn yangian_context(args: &VerifyArgs) -> Result<YangianContext, String> {
    let b = resolve_braiding(args)?;
    Ok(match b.kind {
        BraidKind::Hecke => YangianContext::trig(b, args.t),
        BraidKind::Involutive => YangianContext::rational(b, args.t),
    })
}

fn gaudin_system(
    args: &VerifyArgs,
    b: &Braiding,
    points: &[Rat],
) -> Result<BraidedSites, String> {
    if b.kind == BraidKind::Hecke {
        return Err("gaudin systems need an involutive symmetry (or --weighted)".into());
    }
    if b.matrix() == &byv_core::braiding::flip_matrix(b.dim) {
        let sys: GaudinSystem =
            classical_sites(b.dim, args.sites, points).map_err(|e| e.to_string())?;
        Ok(BraidedSites::Concrete(sys))
    } else {
        braided_sites(b, args.sites, points).map_err(|e| e.to_string())
    }
}

fn birank_record(b: &Braiding) -> CheckRecord {
    CheckRecord::pass("birank", &b.name).with_note(format!(
        "m = {}: A^(m+1) = 0 and rank A^(m) = 1 verified at construction",
        b.birank()
    ))
}

fn finish(mut report: Report, path: &Option<PathBuf>, strict: bool) -> ExitCode {
    // externalize certificates so the main report stays small
    let mut cert_payloads = Vec::new();
    for (i, rec) in report.records.iter_mut().enumerate() {
        if let Some(cert) = rec.certificate.take() {
            cert_payloads.push((i, cert));
        }
    }
    if let Some(path) = path {
        if !cert_payloads.is_empty() {
            let certs_dir = path.with_extension("certs");
            if std::fs::create_dir_all(&certs_dir).is_ok() {
                for (i, cert) in &cert_payloads {
                    let cert_path = certs_dir.join(format!("cert_{i}.json"));
                    if std::fs::write(&cert_path, cert).is_ok() {
                        report.records[*i].certificate =
                            Some(cert_path.to_string_lossy().to_string());
                    }
                }
            }
        }
        match serde_json::to_string_pretty(&report) {
            Ok(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("cannot write report: {e}");
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("cannot serialize report: {e}");
                return ExitCode::from(2);
            }
        }
    }
    for rec in &report.records {
        let mark = match rec.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Skipped => "SKIP",
        };
        println!(
            "{mark} {} [{}]{}",
            rec.id,
            rec.params,
            rec.witness
                .as_deref()
                .map(|w| format!(" — {w}"))
                .unwrap_or_default()
        );
    }
    println!(
        "summary: {} pass, {} fail, {} inconclusive, {} skipped",
        report.summary.pass,
        report.summary.fail,
        report.summary.inconclusive,
        report.summary.skipped
    );
    if report.all_passed(strict) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
