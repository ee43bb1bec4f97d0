//! Command-line front end. `run` parses arguments, executes one command and renders its report.

pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::assumption::{a_closed_form, a_values_direct, l_u_values, limit_probe, probe_target, ProbeThresholds, PROBE_TARGETS};
use crate::curvature::{classify, ingest, CorollaryType, CurvatureError};
use crate::polycore::Rat;
use crate::symfun::{esym, psum};
use crate::verify::clifford::{clifford_check, clifford_rational};
use crate::verify::positivity::{claim_case, CLAIM_IDS};
use crate::verify::sampling::parse_constraints;
use crate::verify::{
    identity_ids, sample_configuration, sample_route_agreement, verify_case_positivity, verify_identities,
    CatalogMode, ClaimStatus, Configuration, IdentityReport, PositivityReport, SampleReport, SampleSpec, VerifyError,
};

pub use report::{ConfigEcho, ErrorKind, Format, ItemKind, Outcome, Record, RunDocument, RunError, RunReport, Timings};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Parser, Debug)]
#[command(name = "isocert", version, about = "Exact certificates for the isoparametric assumption on minimal hypersurfaces in S^6")]
pub struct Cli {
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity pattern, signs, corollary type and symmetric functions of a tuple.
    Classify {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
    },
    /// A(1..5) by either route, plus L(r) and u_i for distinct tuples.
    Avalues {
        #[arg(allow_hyphen_values = true)]
        tuple: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Both)]
        route: RouteArg,
    },
    /// Runs the identity catalog, the positivity chains and the rigidity reductions.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        /// Comma-separated item ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Corrupts one catalog identity; the run must then fail.
        #[arg(long)]
        negative_control: bool,
        /// Samples per configuration in `verify all`.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Seeded exact sampling of a configuration: 1..4, 221, degenerate-top or custom.
    Sample {
        #[arg(long = "type")]
        kind: String,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Constraints for `--type custom`, e.g. `l3>0,l4>0`.
        #[arg(long = "where")]
        constraints: Option<String>,
        #[arg(long, default_value_t = 4096)]
        magnitude: i64,
    },
    /// u_i along a path into a degenerate configuration.
    Probe {
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 24)]
        steps: u32,
    },
    /// Re-renders a structured report and checks its summary.
    Report { path: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Direct,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Identities,
    Positivity,
    Rigidity,
    All,
}

/// What the binary prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn fail(kind: ErrorKind, message: impl ToString) -> RunError {
    RunError { kind, message: message.to_string() }
}

fn snake<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default()
}

fn list(xs: &[Rat]) -> String {
    let parts: Vec<String> = xs.iter().map(Rat::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn signs(xs: &[Rat]) -> String {
    xs.iter()
        .map(|x| match x.signum() {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

struct Run {
    records: Vec<Record>,
    timings: BTreeMap<String, u64>,
}

impl Run {
    fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    fn time(&mut self, id: &str, since: Instant) {
        self.timings.insert(id.to_string(), since.elapsed().as_micros() as u64);
    }
}

fn tuple_error(e: CurvatureError) -> RunError {
    match e {
        CurvatureError::MinimalityViolated(_) => fail(ErrorKind::Minimality, e),
        _ => fail(ErrorKind::Usage, e),
    }
}

fn cmd_classify(run: &mut Run, text: &str) -> Result<(), RunError> {
    let t = ingest(text, true).map_err(tuple_error)?;
    let c = classify(&t);
    let sym = t.sym();
    let show = |v: &[usize]| format!("{v:?}");
    let ctype = c.corollary_type.map_or("none".to_string(), |k| format!("type{} ({})", k.number(), k.pattern()));
    run.push(
        Record::new("classify", ItemKind::Classify, Outcome::Info, "classified")
            .detail("tuple", &t)
            .detail("orientation_flipped", t.was_flipped())
            .detail("distinct", c.distinct)
            .detail("multiplicities", show(&c.multiplicities))
            .detail("partition", show(&c.partition))
            .detail("signs", format!("{:?}", c.signs))
            .detail("corollary_type", ctype)
            .detail("excluded_by_hypothesis", c.excluded_by_hypothesis())
            .detail("paired_top", c.is_paired_top)
            .detail("sigma2", &sym.sigma[1])
            .detail("sigma3", &sym.sigma[2])
            .detail("S", sym.s())
            .detail("f3", sym.f3())
            .detail("f4", sym.f4())
            .detail("h", sym.h())
            .detail("h_opposite", -sym.h().clone()),
    );
    Ok(())
}

fn cmd_avalues(run: &mut Run, text: &str, route: RouteArg) -> Result<(), RunError> {
    let t = ingest(text, true).map_err(tuple_error)?;
    let usage = |e: crate::assumption::AssumptionError| fail(ErrorKind::Usage, e);
    let direct = match route {
        RouteArg::Closed => None,
        _ => Some(a_values_direct(&t).map_err(usage)?.values),
    };
    let closed = match route {
        RouteArg::Direct => None,
        _ => Some(a_closed_form(&t).map_err(usage)?.values),
    };
    let values = direct.clone().or_else(|| closed.clone()).expect("at least one route");
    let mut rec = match (&direct, &closed) {
        (Some(d), Some(c)) if d == c => Record::new("avalues", ItemKind::Avalues, Outcome::Verified, "routes_agree"),
        (Some(_), Some(c)) => Record::new("avalues", ItemKind::Avalues, Outcome::Failed, "routes_disagree").detail("closed", list(c)),
        _ => Record::new("avalues", ItemKind::Avalues, Outcome::Info, "single_route"),
    };
    rec = rec.detail("tuple", &t).detail("route", format!("{route:?}").to_lowercase()).detail("signs", signs(&values));
    for (r, v) in values.iter().enumerate() {
        rec = rec.detail(&format!("A({})", r + 1), v);
    }
    run.push(rec);
    if t.is_distinct() {
        let lu = l_u_values(&t).map_err(usage)?;
        let (outcome, status) = if lu.bridge_holds { (Outcome::Verified, "bridge_holds") } else { (Outcome::Failed, "bridge_fails") };
        let mut rec = Record::new("lu", ItemKind::Avalues, outcome, status);
        for r in 0..5 {
            rec = rec.detail(&format!("L({})", r + 1), &lu.l[r]).detail(&format!("u{}", r + 1), &lu.u[r]);
        }
        run.push(rec);
    } else {
        run.push(Record::new("lu", ItemKind::Avalues, Outcome::Info, "suppressed").detail("reason", "repeated curvature"));
    }
    Ok(())
}

fn identity_record(r: &IdentityReport) -> Record {
    let outcome = if r.is_verified() { Outcome::Verified } else { Outcome::Failed };
    let mut rec = Record::new(&r.identity_id, ItemKind::Identity, outcome, snake(&r.status))
        .detail("parts", r.parts)
        .detail("residual_terms", r.residual_term_count);
    rec.degree = Some(r.max_degree);
    rec.terms = Some(r.max_intermediate_terms);
    if let Some(d) = &r.detail {
        rec = rec.detail("residual", d);
    }
    rec
}

fn positivity_record(p: &PositivityReport) -> Record {
    let outcome = match p.status {
        ClaimStatus::Certified => Outcome::Verified,
        ClaimStatus::SampledConsistent => Outcome::Sampled,
        ClaimStatus::Failed => Outcome::Failed,
    };
    let passed = p.steps.iter().filter(|s| s.passed).count();
    let mut rec = Record::new(&p.claim_id, ItemKind::Positivity, outcome, snake(&p.status))
        .detail("case", p.case)
        .detail("statement", &p.statement)
        .detail("steps", format!("{passed}/{}", p.steps.len()))
        .detail("samples", p.samples);
    rec.method = Some(snake(&p.method));
    let failed: Vec<String> = p.steps.iter().filter(|s| !s.passed).map(|s| s.subject.clone()).collect();
    if !failed.is_empty() {
        rec = rec.detail("failed_steps", failed.join(", "));
    }
    if let Some(t) = &p.counterexample {
        rec = rec.detail("counterexample", list(t));
    }
    rec
}

fn sample_record(id: &str, s: &SampleReport) -> Record {
    let (outcome, status) = if s.passed() { (Outcome::Sampled, "consistent") } else { (Outcome::Failed, "violations") };
    let mut rec = Record::new(id, ItemKind::Sample, outcome, status)
        .detail("configuration", &s.configuration)
        .detail("assertion", &s.assertion)
        .detail("accepted", format!("{}/{}", s.accepted, s.requested))
        .detail("attempts", s.attempts)
        .detail("a_min", list(&s.a_min))
        .detail("a_max", list(&s.a_max))
        .detail("sigma3_range", format!("[{}, {}]", s.sigma3_min, s.sigma3_max))
        .detail("sigma3_negative", s.sigma3_negative)
        .detail("scale_checks", format!("{} checked, {} failed", s.scale_checked, s.scale_failures))
        .detail("violations", s.violation_count);
    rec.seed = Some(s.seed);
    if s.unasserted_sigma3_samples > 0 {
        rec = rec.detail("sigma3_unasserted", s.unasserted_sigma3_samples);
    }
    if let Some(v) = s.violations.first() {
        rec = rec.detail("first_violation", format!("{} {}", list(&v.tuple), v.reason));
    }
    if let Some((t, a)) = &s.fixed_point {
        rec = rec.detail("fixed_point", list(t)).detail("fixed_point_a", list(a));
    }
    rec
}

fn sample_error(e: VerifyError) -> RunError {
    match e {
        VerifyError::InfeasibleSpec(_) => fail(ErrorKind::Infeasible, e),
        _ => fail(ErrorKind::Usage, e),
    }
}

type ConfigFn = fn() -> Configuration;

const SAMPLE_IDS: [(&str, ConfigFn); 6] = [
    ("SAMPLE_221", || Configuration::Pattern221),
    ("SAMPLE_DEGEN_TOP", || Configuration::DegenerateTop),
    ("SAMPLE_TYPE1", || Configuration::Corollary(CorollaryType::Type1)),
    ("SAMPLE_TYPE2", || Configuration::Corollary(CorollaryType::Type2)),
    ("SAMPLE_TYPE3", || Configuration::Corollary(CorollaryType::Type3)),
    ("SAMPLE_TYPE4", || Configuration::Corollary(CorollaryType::Type4)),
];
const ROUTES_ID: &str = "ROUTES_RANDOM";
const CLIFFORD_RATIONAL_ID: &str = "CLIFFORD_RATIONAL";

fn clifford_id(k: usize) -> String {
    format!("CLIFFORD({k},{})", 5 - k)
}

fn scope_ids(scope: Scope) -> Vec<String> {
    let mut ids = Vec::new();
    let clifford = || (1..=4).map(clifford_id).chain([CLIFFORD_RATIONAL_ID.to_string()]);
    match scope {
        Scope::Identities => ids.extend(identity_ids()),
        Scope::Positivity => ids.extend(CLAIM_IDS.iter().map(|s| s.to_string())),
        Scope::Rigidity => {
            ids.extend(identity_ids().into_iter().filter(|id| id.starts_with("RIGIDITY")));
            ids.extend(clifford());
        }
        Scope::All => {
            ids.extend(identity_ids());
            ids.extend(CLAIM_IDS.iter().map(|s| s.to_string()));
            ids.extend(clifford());
            ids.extend(SAMPLE_IDS.iter().map(|(id, _)| id.to_string()));
            ids.push(ROUTES_ID.to_string());
        }
    }
    ids
}

fn cmd_verify(run: &mut Run, scope: Scope, only: &[String], mode: CatalogMode, samples: usize, seed: u64) -> Result<(), RunError> {
    let known = scope_ids(scope);
    if let Some(bad) = only.iter().find(|id| !known.contains(id)) {
        return Err(fail(ErrorKind::Usage, format!("`{bad}` is not an item of this scope")));
    }
    let selected: Vec<String> = if only.is_empty() { known } else { known.into_iter().filter(|id| only.contains(id)).collect() };
    let has = |id: &str| selected.iter().any(|s| s == id);

    let catalog = identity_ids();
    let idents: Vec<String> = selected.iter().filter(|id| catalog.contains(id)).cloned().collect();
    if !idents.is_empty() {
        let start = Instant::now();
        let reports = verify_identities(&idents, mode).map_err(|e| fail(ErrorKind::Usage, e))?;
        for r in &reports {
            run.timings.insert(r.identity_id.clone(), r.elapsed.as_micros() as u64);
            run.push(identity_record(r));
        }
        run.time("identities", start);
    }

    for case in 1..=4u8 {
        if !selected.iter().any(|id| claim_case(id) == Some(case)) {
            continue;
        }
        let start = Instant::now();
        let reports = verify_case_positivity(case).map_err(|e| fail(ErrorKind::Usage, e))?;
        for p in reports.iter().filter(|p| has(&p.claim_id)) {
            run.push(positivity_record(p));
        }
        run.time(&format!("positivity_case{case}"), start);
    }

    for k in 1..=4 {
        let id = clifford_id(k);
        if has(&id) {
            let c = clifford_check(k).expect("k in 1..=4");
            let outcome = if c.holds { Outcome::Verified } else { Outcome::Failed };
            run.push(
                Record::new(&id, ItemKind::Clifford, outcome, if c.holds { "verified_zero" } else { "residual_nonzero" })
                    .detail("curvatures", c.curvatures.join(", "))
                    .detail("x_squared", &c.x_squared)
                    .detail("sigma1", &c.sigma1)
                    .detail("S", &c.s),
            );
        }
    }
    if has(CLIFFORD_RATIONAL_ID) {
        let t = clifford_rational();
        let (s1, s) = (esym(1, &t), psum(2, &t));
        let ok = s1.is_zero() && s == Rat::int(5);
        run.push(
            Record::new(CLIFFORD_RATIONAL_ID, ItemKind::Clifford, if ok { Outcome::Verified } else { Outcome::Failed }, if ok { "verified_zero" } else { "residual_nonzero" })
                .detail("tuple", list(&t))
                .detail("sigma1", s1)
                .detail("S", s),
        );
    }

    for (id, cfg) in SAMPLE_IDS {
        if has(id) {
            let start = Instant::now();
            let rep = sample_configuration(&SampleSpec::new(cfg(), samples, seed)).map_err(sample_error)?;
            run.push(sample_record(id, &rep));
            run.time(id, start);
        }
    }
    if has(ROUTES_ID) {
        let start = Instant::now();
        let rep = sample_route_agreement(samples, seed).map_err(sample_error)?;
        let (outcome, status) = if rep.passed() { (Outcome::Sampled, "consistent") } else { (Outcome::Failed, "routes_disagree") };
        let mut rec = Record::new(ROUTES_ID, ItemKind::Routes, outcome, status)
            .detail("checked", rep.checked)
            .detail("disagreements", rep.disagreements);
        rec.seed = Some(seed);
        if let Some(w) = &rep.witness {
            rec = rec.detail("witness", list(w));
        }
        run.push(rec);
        run.time(ROUTES_ID, start);
    }
    Ok(())
}

fn configuration(kind: &str, constraints: Option<&str>) -> Result<Configuration, RunError> {
    let usage = |m: String| fail(ErrorKind::Usage, m);
    match (kind, constraints) {
        ("custom", Some(text)) => parse_constraints(text).map(Configuration::Custom).map_err(|e| usage(e.to_string())),
        ("custom", None) => Err(usage("--type custom needs --where".into())),
        (_, Some(_)) => Err(usage("--where applies only to --type custom".into())),
        ("221", None) => Ok(Configuration::Pattern221),
        ("degenerate-top", None) => Ok(Configuration::DegenerateTop),
        (n, None) => n
            .parse::<u8>()
            .ok()
            .and_then(CorollaryType::from_number)
            .map(Configuration::Corollary)
            .ok_or_else(|| usage(format!("unknown configuration `{n}`; expected 1..4, 221, degenerate-top or custom"))),
    }
}

fn cmd_sample(run: &mut Run, kind: &str, count: usize, constraints: Option<&str>, magnitude: i64, seed: u64) -> Result<(), RunError> {
    let cfg = configuration(kind, constraints)?;
    let spec = SampleSpec { configuration: cfg, count, seed, magnitude };
    let start = Instant::now();
    let rep = sample_configuration(&spec).map_err(sample_error)?;
    run.push(sample_record("sample", &rep));
    run.time("sample", start);
    Ok(())
}

fn cmd_probe(run: &mut Run, target: &str, steps: u32) -> Result<(), RunError> {
    let (base, dir) = probe_target(target)
        .ok_or_else(|| fail(ErrorKind::Usage, format!("unknown target `{target}`; expected one of {}", PROBE_TARGETS.join(", "))))?;
    let rep = limit_probe(target, &base, &dir, steps, &ProbeThresholds::default()).map_err(|e| fail(ErrorKind::Usage, e))?;
    run.push(
        Record::new("probe", ItemKind::Probe, Outcome::Info, "heuristic")
            .detail("target", target)
            .detail("base", list(&base))
            .detail("direction", list(&dir))
            .detail("steps", steps)
            .detail("last_eps", rep.eps.last().map(Rat::to_string).unwrap_or_default()),
    );
    for i in 0..5 {
        run.push(
            Record::new(format!("u{}", i + 1), ItemKind::Probe, Outcome::Info, snake(&rep.verdicts[i]))
                .detail("sup", &rep.sup[i])
                .detail("inf", &rep.inf[i])
                .detail("last", rep.u.last().map(|row| row[i].to_string()).unwrap_or_default()),
        );
    }
    Ok(())
}

fn echo(cli: &Cli) -> ConfigEcho {
    let mut args = BTreeMap::new();
    let command = match &cli.command {
        Command::Classify { tuple } => {
            args.insert("tuple".into(), tuple.clone());
            "classify"
        }
        Command::Avalues { tuple, route } => {
            args.insert("tuple".into(), tuple.clone());
            args.insert("route".into(), format!("{route:?}").to_lowercase());
            "avalues"
        }
        Command::Verify { scope, only, negative_control, samples } => {
            args.insert("scope".into(), format!("{scope:?}").to_lowercase());
            if !only.is_empty() {
                args.insert("only".into(), only.join(","));
            }
            if *negative_control {
                args.insert("negative_control".into(), "true".into());
            }
            args.insert("samples".into(), samples.to_string());
            "verify"
        }
        Command::Sample { kind, count, constraints, magnitude } => {
            args.insert("type".into(), kind.clone());
            args.insert("count".into(), count.to_string());
            args.insert("magnitude".into(), magnitude.to_string());
            if let Some(c) = constraints {
                args.insert("where".into(), c.clone());
            }
            "sample"
        }
        Command::Probe { target, steps } => {
            args.insert("target".into(), target.clone());
            args.insert("steps".into(), steps.to_string());
            "probe"
        }
        Command::Report { path } => {
            args.insert("path".into(), path.display().to_string());
            "report"
        }
    };
    ConfigEcho { command: command.into(), args, seed: cli.seed, format: cli.format, exactness: "exact-only".into() }
}

/// Executes a parsed command. `report` loads its document instead of computing one.
pub fn execute(cli: &Cli) -> RunDocument {
    let start = Instant::now();
    if let Command::Report { path } = &cli.command {
        let loaded = std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|text| RunDocument::from_json(&text).map_err(|e| e.to_string()))
            .and_then(|doc| if doc.report.is_consistent() { Ok(doc) } else { Err("summary does not match the records".into()) });
        return match loaded {
            Ok(doc) => doc,
            Err(msg) => RunDocument {
                report: RunReport::new(echo(cli), Vec::new(), Some(fail(ErrorKind::Usage, format!("{}: {msg}", path.display())))),
                timings: Timings { total_us: start.elapsed().as_micros() as u64, items: BTreeMap::new() },
            },
        };
    }
    let mut run = Run { records: Vec::new(), timings: BTreeMap::new() };
    let outcome = match &cli.command {
        Command::Classify { tuple } => cmd_classify(&mut run, tuple),
        Command::Avalues { tuple, route } => cmd_avalues(&mut run, tuple, *route),
        Command::Verify { scope, only, negative_control, samples } => {
            cmd_verify(&mut run, *scope, only, CatalogMode { negative_control: *negative_control }, *samples, cli.seed)
        }
        Command::Sample { kind, count, constraints, magnitude } => {
            cmd_sample(&mut run, kind, *count, constraints.as_deref(), *magnitude, cli.seed)
        }
        Command::Probe { target, steps } => cmd_probe(&mut run, target, *steps),
        Command::Report { .. } => unreachable!("handled above"),
    };
    RunDocument {
        report: RunReport::new(echo(cli), run.records, outcome.err()),
        timings: Timings { total_us: start.elapsed().as_micros() as u64, items: run.timings },
    }
}

/// Parses `args` (program name first), runs the command and writes `--out` if given.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Invocation { code, stdout: text, stderr: String::new() }
            } else {
                Invocation { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let doc = execute(&cli);
    let code = doc.report.exit_code();
    let text = doc.render(cli.format);
    match &cli.out {
        None => Invocation { code, stdout: text, stderr: String::new() },
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Invocation { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Invocation { code: 2, stdout: String::new(), stderr: format!("cannot write {}: {e}\n", path.display()) },
        },
    }
}
