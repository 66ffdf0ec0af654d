//! `setpart`: enumerate pattern-avoiding set partitions, compute their
//! statistics and generating functions, verify every implemented formula
//! against its enumeration oracle, and cross-check derived integer
//! sequences against OEIS b-files.
//!
//! Exit codes: 0 success, 1 unexpected verification failure, 2 usage
//! error, 3 external-service (OEIS fetch) error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use setpart::bijections;
use setpart::genfun::{self, Assign, FormulaId, PermStat, RgfStat};
use setpart::patterns::is_noncrossing;
use setpart::poly::Var;
use setpart::rgf::partitions;
use setpart::{MultiPoly, PatternSet, Permutation, Rgf};
use setpart_oeis::{crosscheck, OeisClient, OeisError, OeisId};

#[derive(Parser)]
#[command(name = "setpart", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the members of an avoidance class with their statistics
    Enumerate(EnumerateArgs),
    /// Statistics of one partition, RGF word, or permutation
    Stats(StatsArgs),
    /// Spread/block (and related) generating functions
    Genfun(GenfunArgs),
    /// Compare formulas against their enumeration oracles
    Verify(VerifyArgs),
    /// Emit integer sequences (counts, specializations, coefficient rows)
    Sequence(SequenceArgs),
    /// Cross-check a sequence against an OEIS b-file
    OeisCheck(OeisCheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Formula,
    Oracle,
    Both,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Patterns to avoid, e.g. "13/24" or "13/2;123"; empty avoids nothing
    #[arg(long, default_value = "")]
    patterns: String,
    #[arg(short, long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct StatsInput {
    /// Partition in block notation, e.g. "14/25/378/6"
    #[arg(long)]
    partition: Option<String>,
    /// Restricted growth word, e.g. "12312433"
    #[arg(long)]
    rgf: Option<String>,
    /// Permutation in one-line notation, e.g. "231"
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: StatsInput,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct GenfunArgs {
    /// Formula id such as SB_13/24, SB_13/2_123, I, M
    #[arg(long)]
    id: Option<String>,
    /// Brute-force over this avoidance class instead of a named formula
    #[arg(long)]
    patterns: Option<String>,
    /// Statistics mapped onto q,t,x in order, e.g. "spread,block" or
    /// "inv,lrm,fix" with --over av321
    #[arg(long)]
    stats: Option<String>,
    /// "partitions" (default) or "av321"
    #[arg(long, default_value = "partitions")]
    over: String,
    #[arg(short, long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Route::Formula)]
    route: Route,
    /// Worker threads for brute-force sums; defaults to available cores
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// One formula id; see --all for the whole suite
    #[arg(long)]
    id: Option<String>,
    /// Verify every implemented formula
    #[arg(long)]
    all: bool,
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SequenceArgs {
    /// Class cardinalities by enumeration
    #[arg(long)]
    count: bool,
    /// Coefficient rows of a formula, flattened across the n range
    #[arg(long)]
    coeffs: bool,
    /// Integer specializations of a formula
    #[arg(long)]
    values: bool,
    #[arg(long)]
    patterns: Option<String>,
    /// "partitions" (default) or "av321"
    #[arg(long, default_value = "partitions")]
    over: String,
    /// Formula id for --coeffs/--values
    #[arg(long)]
    id: Option<String>,
    /// Substitutions applied before reading coefficients, e.g. "q=1", "t=q"
    #[arg(long = "set")]
    set: Vec<String>,
    /// Row variable for --coeffs; omit to list all coefficients in
    /// canonical term order
    #[arg(long)]
    by: Option<String>,
    /// Read rows from highest exponent down
    #[arg(long)]
    desc: bool,
    /// Evaluation point for --values as "q,t,x", default "1,1,1"
    #[arg(long)]
    at: Option<String>,
    /// Inclusive range "0..8", or a single size "5"
    #[arg(long)]
    n: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct OeisCheckArgs {
    /// OEIS id to compare against, e.g. A000108
    #[arg(long)]
    id: String,
    #[arg(long)]
    count: bool,
    #[arg(long)]
    coeffs: bool,
    #[arg(long)]
    values: bool,
    #[arg(long)]
    patterns: Option<String>,
    #[arg(long, default_value = "partitions")]
    over: String,
    /// Formula id for --coeffs/--values
    #[arg(long)]
    formula: Option<String>,
    #[arg(long = "set")]
    set: Vec<String>,
    #[arg(long)]
    by: Option<String>,
    #[arg(long)]
    desc: bool,
    #[arg(long)]
    at: Option<String>,
    #[arg(long)]
    n: String,
    /// Alignment window: shifts within ±window are tried
    #[arg(long, default_value_t = 3)]
    window: usize,
    /// Cache directory; SETPART_OEIS_CACHE overrides the default
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    timeout_secs: Option<u64>,
    /// Alternate endpoint, mainly for tests
    #[arg(long)]
    base_url: Option<String>,
    #[arg(long)]
    user_agent: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verification,
    Internal(String),
    External(OeisError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Verification => write!(f, "verification failed"),
            CliError::Internal(m) => write!(f, "{m}"),
            CliError::External(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    fn code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Verification | CliError::Internal(_) => ExitCode::from(1),
            CliError::External(_) => ExitCode::from(3),
        }
    }
}

impl From<setpart::PolyError> for CliError {
    fn from(e: setpart::PolyError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<genfun::GenfunError> for CliError {
    fn from(e: genfun::GenfunError) -> Self {
        match e {
            genfun::GenfunError::UnknownId(_) | genfun::GenfunError::NotUnivariate(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, like other line tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.code()
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Enumerate(args) => cmd_enumerate(args),
        Cmd::Stats(args) => cmd_stats(args),
        Cmd::Genfun(args) => cmd_genfun(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Sequence(args) => {
            let seq = compute_sequence(&resolve_seq_request(
                args.count, args.coeffs, args.values, args.patterns, &args.over, args.id,
                &args.set, args.by, args.desc, args.at, &args.n,
            )?)?;
            match args.format {
                Format::Text => println!("{}", join_ints(&seq)),
                Format::Json => println!("{}", serde_json::to_string(&seq).unwrap()),
            }
            Ok(())
        }
        Cmd::OeisCheck(args) => cmd_oeis_check(args),
    }
}

fn parse_patterns(s: &str) -> Result<PatternSet, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("{e}")))
}

#[derive(Serialize)]
struct EnumerateRow {
    partition: String,
    rgf: String,
    spread: usize,
    block: usize,
    dim: usize,
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let ps = parse_patterns(&args.patterns)?;
    let rows: Vec<EnumerateRow> = partitions(args.n)
        .filter(|p| ps.avoided_by(p))
        .map(|p| {
            let w = p.to_rgf();
            EnumerateRow {
                partition: p.to_string(),
                rgf: w.to_string(),
                spread: w.spread(),
                block: w.block(),
                dim: w.dim(),
            }
        })
        .collect();
    match args.format {
        Format::Text => {
            for r in rows {
                println!("{}\t{}\t{}\t{}\t{}", r.partition, r.rgf, r.spread, r.block, r.dim);
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&rows).unwrap()),
    }
    Ok(())
}

#[derive(Serialize)]
struct RgfStatsOut {
    partition: String,
    rgf: String,
    spread: usize,
    block: usize,
    dim: usize,
    cp: usize,
    ap: usize,
    maj: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    ballot: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    perm: Option<String>,
}

#[derive(Serialize)]
struct PermStatsOut {
    perm: String,
    inv: usize,
    lrm: usize,
    fix: usize,
    des: usize,
    maj: usize,
    pos: String,
    val: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    rgf: Option<String>,
}

fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    if let Some(s) = args.input.perm {
        let p: Permutation = s
            .parse()
            .map_err(|e| CliError::Usage(format!("{e}")))?;
        let profile = p.stats();
        let (pos, val) = p.pos_val();
        let rgf = bijections::perm_to_partition(&p).ok().map(|w| w.to_string());
        let out = PermStatsOut {
            perm: p.to_string(),
            inv: profile.get("inv").unwrap(),
            lrm: profile.get("lrm").unwrap(),
            fix: profile.get("fix").unwrap(),
            des: profile.get("des").unwrap(),
            maj: profile.get("maj").unwrap(),
            pos: bits(&pos),
            val: bits(&val),
            rgf,
        };
        match args.format {
            Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
            Format::Text => {
                println!("perm {}", out.perm);
                println!("inv {}", out.inv);
                println!("lrm {}", out.lrm);
                println!("fix {}", out.fix);
                println!("des {}", out.des);
                println!("maj {}", out.maj);
                println!("pos {}", out.pos);
                println!("val {}", out.val);
                if let Some(w) = &out.rgf {
                    println!("rgf {w}");
                }
            }
        }
        return Ok(());
    }

    let w: Rgf = if let Some(s) = args.input.rgf {
        s.parse().map_err(|e| CliError::Usage(format!("{e}")))?
    } else {
        let p: setpart::SetPartition = args
            .input
            .partition
            .unwrap()
            .parse()
            .map_err(|e| CliError::Usage(format!("{e}")))?;
        p.to_rgf()
    };
    let profile = w.stats();
    let noncrossing = is_noncrossing(w.word());
    let (ballot, perm) = if noncrossing {
        let b = bijections::to_ballot(&w).expect("noncrossing word");
        let p = bijections::ballot_to_perm(&b);
        (Some(b.to_string()), Some(p.to_string()))
    } else {
        (None, None)
    };
    let out = RgfStatsOut {
        partition: w.to_partition().to_string(),
        rgf: w.to_string(),
        spread: profile.get("spread").unwrap(),
        block: profile.get("block").unwrap(),
        dim: profile.get("dim").unwrap(),
        cp: profile.get("cp").unwrap(),
        ap: profile.get("ap").unwrap(),
        maj: profile.get("maj").unwrap(),
        ballot,
        perm,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
        Format::Text => {
            println!("partition {}", out.partition);
            println!("rgf {}", out.rgf);
            println!("spread {}", out.spread);
            println!("block {}", out.block);
            println!("dim {}", out.dim);
            println!("cp {}", out.cp);
            println!("ap {}", out.ap);
            println!("maj {}", out.maj);
            if let Some(b) = &out.ballot {
                println!("ballot {b}");
            }
            if let Some(p) = &out.perm {
                println!("perm {p}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct GenfunOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    id: Option<FormulaId>,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<MultiPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<MultiPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equal: Option<bool>,
}

fn cmd_genfun(args: GenfunArgs) -> Result<(), CliError> {
    let jobs = args.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
    });
    let out = if let Some(id) = &args.id {
        let id: FormulaId = id.parse().map_err(CliError::from)?;
        let formula = if args.route != Route::Oracle {
            Some(genfun::formula(id, args.n)?)
        } else {
            None
        };
        let oracle = if args.route != Route::Formula {
            Some(genfun::oracle(id, args.n)?)
        } else {
            None
        };
        let equal = match (&formula, &oracle) {
            (Some(f), Some(o)) => Some(f == o),
            _ => None,
        };
        GenfunOut {
            id: Some(id),
            n: args.n,
            formula,
            oracle,
            equal,
        }
    } else {
        let stats = args.stats.as_deref().ok_or_else(|| {
            CliError::Usage("pass --id, or --stats with --patterns/--over".into())
        })?;
        let poly = match args.over.as_str() {
            "partitions" => {
                let ps = parse_patterns(args.patterns.as_deref().unwrap_or(""))?;
                let chosen: Vec<RgfStat> = parse_list(stats)?;
                genfun::rgf_class_genfun_threads(args.n, &ps, &chosen, jobs)?
            }
            "av321" => {
                let chosen: Vec<PermStat> = parse_list(stats)?;
                genfun::av321_genfun(args.n, &chosen)?
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown class {other:?}; expected partitions or av321"
                )))
            }
        };
        GenfunOut {
            id: None,
            n: args.n,
            formula: None,
            oracle: Some(poly),
            equal: None,
        }
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&out).unwrap()),
        Format::Text => match (&out.formula, &out.oracle) {
            (Some(f), Some(o)) => {
                println!("formula: {f}");
                println!("oracle: {o}");
                println!("equal: {}", f == o);
            }
            (Some(f), None) => println!("{f}"),
            (None, Some(o)) => println!("{o}"),
            (None, None) => unreachable!("one route is always computed"),
        },
    }
    Ok(())
}

fn parse_list<T: std::str::FromStr<Err = String>>(s: &str) -> Result<Vec<T>, CliError> {
    let list: Result<Vec<T>, String> = s.split(',').map(|tok| tok.parse::<T>()).collect();
    let list = list.map_err(CliError::Usage)?;
    if list.is_empty() || list.len() > 3 {
        return Err(CliError::Usage(
            "choose between one and three statistics".into(),
        ));
    }
    Ok(list)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let ids: Vec<FormulaId> = if args.all {
        FormulaId::ALL.to_vec()
    } else {
        let id = args
            .id
            .as_deref()
            .ok_or_else(|| CliError::Usage("pass --id or --all".into()))?;
        vec![id.parse().map_err(CliError::from)?]
    };
    let mut reports = Vec::new();
    for id in ids {
        reports.push(genfun::verify(id, args.n_max)?);
    }
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&reports).unwrap()),
        Format::Text => {
            for report in &reports {
                for row in &report.rows {
                    if row.equal {
                        println!("{} n={} ok", report.id, row.n);
                    } else {
                        let note = if report.expected_to_match {
                            "MISMATCH"
                        } else {
                            "mismatch (documented)"
                        };
                        println!(
                            "{} n={} {note} difference: {}",
                            report.id, row.n, row.difference
                        );
                    }
                }
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

enum SeqKind {
    CountPatterns(PatternSet),
    CountAv321,
    Values { id: FormulaId, at: (i64, i64, i64) },
    Coeffs {
        id: FormulaId,
        assigns: Vec<(Var, Assign)>,
        by: Option<Var>,
        desc: bool,
    },
}

struct SeqRequest {
    kind: SeqKind,
    from: usize,
    to: usize,
}

#[allow(clippy::too_many_arguments)]
fn resolve_seq_request(
    count: bool,
    coeffs: bool,
    values: bool,
    patterns: Option<String>,
    over: &str,
    id: Option<String>,
    set: &[String],
    by: Option<String>,
    desc: bool,
    at: Option<String>,
    range: &str,
) -> Result<SeqRequest, CliError> {
    let (from, to) = parse_range(range)?;
    let modes = count as u8 + coeffs as u8 + values as u8;
    if modes != 1 {
        return Err(CliError::Usage(
            "choose exactly one of --count, --coeffs, --values".into(),
        ));
    }
    let kind = if count {
        match over {
            "av321" => SeqKind::CountAv321,
            "partitions" => {
                SeqKind::CountPatterns(parse_patterns(patterns.as_deref().unwrap_or(""))?)
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown class {other:?}; expected partitions or av321"
                )))
            }
        }
    } else {
        let id: FormulaId = id
            .as_deref()
            .ok_or_else(|| CliError::Usage("--coeffs/--values needs a formula id".into()))?
            .parse()
            .map_err(CliError::from)?;
        if values {
            let at = match at.as_deref() {
                None => (1, 1, 1),
                Some(s) => {
                    let parts: Vec<i64> = s
                        .split(',')
                        .map(|t| t.trim().parse::<i64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| CliError::Usage(format!("bad evaluation point {s:?}")))?;
                    match parts[..] {
                        [q, t, x] => (q, t, x),
                        _ => {
                            return Err(CliError::Usage(
                                "evaluation point must be q,t,x".into(),
                            ))
                        }
                    }
                }
            };
            SeqKind::Values { id, at }
        } else {
            let assigns = set
                .iter()
                .map(|s| parse_assign(s))
                .collect::<Result<Vec<_>, _>>()?;
            let by = by
                .map(|b| b.parse::<Var>().map_err(CliError::Usage))
                .transpose()?;
            SeqKind::Coeffs {
                id,
                assigns,
                by,
                desc,
            }
        }
    };
    Ok(SeqRequest { kind, from, to })
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let s = s.trim();
    let (from, to) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, s),
    };
    let from: usize = from
        .parse()
        .map_err(|_| CliError::Usage(format!("bad range {s:?}")))?;
    let to: usize = to
        .parse()
        .map_err(|_| CliError::Usage(format!("bad range {s:?}")))?;
    if to < from {
        return Err(CliError::Usage(format!("range {s:?} is reversed")));
    }
    Ok((from, to))
}

fn parse_assign(s: &str) -> Result<(Var, Assign), CliError> {
    let (var, val) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("bad substitution {s:?}; use var=value")))?;
    let var: Var = var.trim().parse().map_err(CliError::Usage)?;
    let val = val.trim();
    let assign = if let Ok(v) = val.parse::<i64>() {
        Assign::Int(v)
    } else {
        Assign::ToVar(val.parse::<Var>().map_err(CliError::Usage)?)
    };
    Ok((var, assign))
}

fn compute_sequence(req: &SeqRequest) -> Result<Vec<i64>, CliError> {
    let out = match &req.kind {
        SeqKind::CountPatterns(ps) => genfun::class_counts(ps, req.from, req.to),
        SeqKind::CountAv321 => genfun::av321_counts(req.from, req.to),
        SeqKind::Values { id, at } => {
            genfun::formula_values(*id, at.0, at.1, at.2, req.from, req.to)?
        }
        SeqKind::Coeffs {
            id,
            assigns,
            by,
            desc,
        } => match by {
            Some(by) => {
                genfun::coefficient_rows_flat(*id, assigns, *by, *desc, req.from, req.to)?
            }
            None => {
                let mut out = Vec::new();
                for n in req.from..=req.to {
                    out.extend(genfun::coefficient_list(*id, assigns, n)?);
                }
                out
            }
        },
    };
    Ok(out)
}

fn join_ints(seq: &[i64]) -> String {
    seq.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_oeis_check(args: OeisCheckArgs) -> Result<(), CliError> {
    let req = resolve_seq_request(
        args.count,
        args.coeffs,
        args.values,
        args.patterns,
        &args.over,
        args.formula,
        &args.set,
        args.by,
        args.desc,
        args.at,
        &args.n,
    )?;
    let computed = compute_sequence(&req)?;
    if computed.is_empty() {
        return Err(CliError::Usage("computed sequence is empty".into()));
    }
    let oeis_id: OeisId = args.id.parse().map_err(CliError::External)?;
    let cache_dir = args
        .cache_dir
        .unwrap_or_else(|| OeisClient::cache_dir_from_env("oeis-cache"));
    let mut client = OeisClient::new(cache_dir);
    if let Some(url) = args.base_url {
        client = client.with_base_url(url);
    }
    if let Some(secs) = args.timeout_secs {
        client = client.with_timeout(Duration::from_secs(secs));
    }
    if let Some(ua) = args.user_agent {
        client = client.with_user_agent(ua);
    }
    let seq = client.fetch(&oeis_id).map_err(CliError::External)?;
    let report = crosscheck(&computed, &seq, args.window);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Text => {
            if report.matched {
                println!(
                    "{}: match at offset {} ({} terms compared)",
                    report.id,
                    report.offset.unwrap(),
                    report.compared_terms
                );
            } else {
                println!("{}: no match within ±{}", report.id, args.window);
            }
        }
    }
    Ok(())
}
