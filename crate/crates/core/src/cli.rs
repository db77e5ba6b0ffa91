//! The `palinwidth` command line.
//!
//! Exit codes: 0 when everything verified, 1 when a verification failed,
//! 2 for input errors and unmet hypotheses.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::commutators::{commutator_word, CommutatorData};
use crate::decompose::{
    decompose_commutator_pair, decompose_commutator_abelian_top, decompose_derived_wreath,
    decompose_full_finite_top, decompose_shifted_commutators, find_relation_avoiding, Bound,
    PalindromeFactorization, RelationWitness,
};
use crate::error::{Error, Result};
use crate::groups::spec::GroupSpec;
use crate::oracle::PalindromeOracle;
use crate::report::{extend_generators, Counts, RunReport};
use crate::sampling;
use crate::word::Word;
use crate::wreath::{WreathElement, WreathGroup};

#[derive(Debug, Parser)]
#[command(name = "palinwidth", version, about = "Palindrome factorizations in groups and wreath products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Include wall-clock timings; output is then no longer reproducible.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Free base, finite non-abelian top: abelianized stage plus one palindrome.
    FiniteTop,
    /// Base values in the derived subgroup: top palindromes plus `h·reverse(h)`.
    Derived,
    /// Top `Z^n`: the commutator `[word, t]`, or `[word, t][word2, t^2]`.
    AbelianTop,
    /// Top with an infinite-order generator: seven palindromes per commutator index.
    Shifted,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::FiniteTop => "finite-top",
            Mode::Derived => "derived",
            Mode::AbelianTop => "abelian-top",
            Mode::Shifted => "shifted",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor one wreath product element into palindromes.
    Decompose(DecomposeArgs),
    /// Exact palindromic width of a finite group.
    PwExact(GroupArgs),
    /// Find a relation whose reverse is not a relation.
    FindRelation(GroupArgs),
    /// Run a decomposition mode on random inputs and tabulate counts against bounds.
    Bench(BenchArgs),
    /// Re-check a report written by `decompose`.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Top group: preset name, JSON file, or inline JSON.
    #[arg(long)]
    pub top: String,
    /// Base group: preset name, JSON file, or inline JSON.
    #[arg(long, default_value = "F2")]
    pub base: String,
    /// Word over the top generators followed by the base generators.
    #[arg(long)]
    pub word: String,
    #[arg(long, value_enum, default_value_t = Mode::FiniteTop)]
    pub mode: Mode,
    /// `auto`, or a relation word over the top generators.
    #[arg(long, default_value = "auto")]
    pub relation: String,
    /// Longest relation the search may return.
    #[arg(long, default_value_t = crate::decompose::DEFAULT_RELATION_BUDGET)]
    pub budget: usize,
    /// Top exponents `i1,...,in` (abelian-top mode).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub exps: Vec<i64>,
    /// Second commutator argument (abelian-top mode).
    #[arg(long)]
    pub word2: Option<String>,
    /// Extra top generators, `name=word`.
    #[arg(long)]
    pub extend_gens: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub extend_gens: Vec<String>,
    #[arg(long, default_value_t = crate::decompose::DEFAULT_RELATION_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub top: String,
    #[arg(long, default_value = "F2")]
    pub base: String,
    #[arg(long, value_enum, default_value_t = Mode::FiniteTop)]
    pub mode: Mode,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Longest random word (or commutator argument).
    #[arg(long, default_value_t = 30)]
    pub max_len: usize,
    #[arg(long, default_value_t = crate::decompose::DEFAULT_RELATION_BUDGET)]
    pub budget: usize,
    #[arg(long)]
    pub extend_gens: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Report file, or `-` for standard input.
    #[arg(long)]
    pub report: String,
}

/// What a run prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Self { stdout, stderr: String::new(), code: if passed { 0 } else { 1 } }
    }

    fn input_error(e: &Error) -> Self {
        Self { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Decompose(a) => cmd_decompose(cli, a),
        Command::PwExact(a) => cmd_pw_exact(cli, a),
        Command::FindRelation(a) => cmd_find_relation(cli, a),
        Command::Bench(a) => cmd_bench(cli, a),
        Command::Verify(a) => cmd_verify(cli, a),
    };
    result.unwrap_or_else(|e| Outcome::input_error(&e))
}

/// A group argument: inline JSON, a JSON file, or a preset name.
pub fn load_group_spec(arg: &str) -> Result<GroupSpec> {
    let trimmed = arg.trim();
    let spec = if trimmed.starts_with('{') {
        GroupSpec::from_json(trimmed)?
    } else if Path::new(trimmed).is_file() {
        let text = std::fs::read_to_string(trimmed)
            .map_err(|e| Error::GroupDefinition(format!("cannot read {trimmed}: {e}")))?;
        GroupSpec::from_json(&text)?
    } else {
        GroupSpec::preset(trimmed)
    };
    spec.build()?;
    Ok(spec)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| if c + 1 == r.len() { s.clone() } else { format!("{s:<w$}", w = widths[c]) })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn show_bound(b: &Option<Bound>) -> String {
    b.as_ref().map_or("-".into(), |b| format!("{} ({})", b.value, b.rule))
}

struct Setup {
    top_spec: GroupSpec,
    base_spec: GroupSpec,
    wreath: WreathGroup,
}

fn setup(top: &str, base: &str, extend: &[String]) -> Result<Setup> {
    let top_spec = load_group_spec(top)?;
    let base_spec = load_group_spec(base)?;
    let top = extend_generators(&top_spec.build()?, extend)?;
    let wreath = WreathGroup::new(&base_spec.build()?, &top)?;
    Ok(Setup { top_spec, base_spec, wreath })
}

fn relation_witness(wreath: &WreathGroup, relation: &str, budget: usize) -> Result<RelationWitness> {
    if relation.trim() == "auto" {
        find_relation_avoiding(wreath.top(), budget, &[wreath.base().alphabet()])
    } else {
        RelationWitness::from_word(wreath.top(), Word::parse(wreath.top().alphabet(), relation)?)
    }
}

/// Inputs of one decomposition, shared by `decompose` and `bench`.
struct Request {
    mode: Mode,
    word: Word,
    word2: Option<Word>,
    exps: Vec<i64>,
}

struct Done {
    fact: PalindromeFactorization<WreathElement>,
    work: WreathGroup,
    target_word: Word,
    relation: Option<Word>,
}

fn run_request(wreath: &WreathGroup, req: &Request, witness: Option<&RelationWitness>) -> Result<Done> {
    let with_work = |fact: PalindromeFactorization<WreathElement>, relation: Option<Word>| -> Result<Done> {
        let work = match &fact.extra_generator {
            Some(extra) => wreath.with_top(&extra.extend(wreath.top())?)?,
            None => wreath.clone(),
        };
        let target_word = req.word.translate(work.alphabet())?;
        Ok(Done { fact, work, target_word, relation })
    };
    match req.mode {
        Mode::FiniteTop => {
            let w = witness.ok_or(Error::InvalidWitness("no relation".into()))?;
            let fact = decompose_full_finite_top(wreath, &req.word, Some(w))?;
            with_work(fact, Some(w.relation.clone()))
        }
        Mode::Derived => {
            let w = witness.ok_or(Error::InvalidWitness("no relation".into()))?;
            let (cd, a_top) = CommutatorData::from_element(wreath, &wreath.evaluate(&req.word)?)?;
            let fact = decompose_derived_wreath(wreath, &cd, &a_top, w)?;
            with_work(fact, Some(w.relation.clone()))
        }
        Mode::Shifted => {
            let (cd, a_top) = CommutatorData::from_element(wreath, &wreath.evaluate(&req.word)?)?;
            with_work(decompose_shifted_commutators(wreath, &cd, &a_top, None)?, None)
        }
        Mode::AbelianTop => {
            let blocks: Vec<(usize, i64)> = req.exps.iter().copied().enumerate().collect();
            let t = Word::from_blocks(wreath.alphabet(), &blocks)?;
            let (fact, target_word) = match &req.word2 {
                None => (
                    decompose_commutator_abelian_top(wreath, &req.word, &req.exps)?,
                    commutator_word(&req.word, &t)?,
                ),
                Some(b) => {
                    let doubled: Vec<(usize, i64)> = blocks.iter().map(|&(i, e)| (i, 2 * e)).collect();
                    let t2 = Word::from_blocks(wreath.alphabet(), &doubled)?;
                    let target = commutator_word(&req.word, &t)?.concat(&commutator_word(b, &t2)?)?;
                    (decompose_commutator_pair(wreath, &req.word, b, &req.exps)?, target)
                }
            };
            Ok(Done { fact, work: wreath.clone(), target_word, relation: None })
        }
    }
}

fn needs_witness(mode: Mode) -> bool {
    matches!(mode, Mode::FiniteTop | Mode::Derived)
}

fn cmd_decompose(cli: &Cli, a: &DecomposeArgs) -> Result<Outcome> {
    let s = setup(&a.top, &a.base, &a.extend_gens)?;
    let alphabet = s.wreath.alphabet();
    let req = Request {
        mode: a.mode,
        word: Word::parse(alphabet, &a.word)?,
        word2: a.word2.as_deref().map(|w| Word::parse(alphabet, w)).transpose()?,
        exps: a.exps.clone(),
    };
    let start = Instant::now();
    let witness = if needs_witness(a.mode) { Some(relation_witness(&s.wreath, &a.relation, a.budget)?) } else { None };
    let mut report = RunReport {
        command: "decompose".into(),
        mode: a.mode.name().into(),
        top: s.top_spec.clone(),
        base: s.base_spec.clone(),
        extend_gens: a.extend_gens.clone(),
        word: req.word.to_string(),
        word2: req.word2.as_ref().map(Word::to_string),
        exps: (a.mode == Mode::AbelianTop).then(|| a.exps.clone()),
        relation: None,
        extra_generator: None,
        target: String::new(),
        target_word: req.word.to_string(),
        factors: Vec::new(),
        counts: Counts { factors: 0, letters: 0 },
        bound: None,
        theorem_bound: None,
        verified: false,
        certificate: None,
        failure: None,
        timing_ms: None,
    };
    let passed = match run_request(&s.wreath, &req, witness.as_ref()) {
        Ok(done) => {
            let f = &done.fact;
            report.relation = done.relation.as_ref().map(Word::to_string);
            report.extra_generator = f.extra_generator.as_ref().map(|e| e.view());
            report.target = done.work.format_element(&f.target);
            report.target_word = done.target_word.to_string();
            report.factors = f.factors.iter().map(Word::to_string).collect();
            report.counts = Counts { factors: f.len(), letters: f.factors.iter().map(Word::len).sum() };
            report.bound = f.bound.clone();
            report.theorem_bound = f.theorem_bound.clone();
            report.verified = f.certificate.product_matches;
            report.certificate = Some(f.certificate.clone());
            true
        }
        Err(Error::Verification(failure)) => {
            report.failure = Some(failure);
            false
        }
        Err(e) => return Err(e),
    };
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    let stdout = match cli.format {
        Format::Json => to_json(&report),
        Format::Text => decompose_text(&report),
    };
    Ok(Outcome::ok(stdout, passed))
}

fn decompose_text(r: &RunReport) -> String {
    let mut rows = vec![
        vec!["mode".into(), r.mode.clone()],
        vec!["target".into(), r.target.clone()],
    ];
    if let Some(rel) = &r.relation {
        rows.push(vec!["relation".into(), rel.clone()]);
    }
    if let Some(e) = &r.extra_generator {
        rows.push(vec!["extra generator".into(), format!("{} = {}", e.name, e.word)]);
    }
    rows.push(vec!["factors".into(), r.counts.factors.to_string()]);
    rows.push(vec!["bound".into(), show_bound(&r.bound)]);
    if r.theorem_bound.is_some() {
        rows.push(vec!["published bound".into(), show_bound(&r.theorem_bound)]);
    }
    rows.push(vec!["verified".into(), if r.verified { "yes".into() } else { "NO".into() }]);
    if let Some(f) = &r.failure {
        rows.push(vec!["failure".into(), f.to_string()]);
    }
    if let Some(t) = r.timing_ms {
        rows.push(vec!["time (ms)".into(), format!("{t:.3}")]);
    }
    let mut out = table(&rows);
    let factor_rows: Vec<Vec<String>> =
        r.factors.iter().enumerate().map(|(i, f)| vec![format!("{:>4}", i + 1), f.clone()]).collect();
    out.push_str(&table(&factor_rows));
    out
}

fn cmd_pw_exact(cli: &Cli, a: &GroupArgs) -> Result<Outcome> {
    let spec = load_group_spec(&a.group)?;
    let group = extend_generators(&spec.build()?, &a.extend_gens)?;
    let start = Instant::now();
    let oracle = PalindromeOracle::new(&group)?;
    let report = oracle.report();
    let witness = crate::groups::Element::Finite(report.witness);
    let witness_word = group.represent(&witness)?.to_string();
    let factors: Vec<String> =
        oracle.decompose_top_element(&witness)?.iter().map(Word::to_string).collect();
    let mut out = json!({
        "group": spec,
        "generators": group.alphabet().names(),
        "order": group.order(),
        "palindromic_elements": oracle.palindromes().len(),
        "width": report.width,
        "witness": witness_word,
        "witness_factors": factors,
        "histogram": report.histogram,
    });
    if !a.extend_gens.is_empty() {
        out["extend_gens"] = json!(a.extend_gens);
    }
    if cli.timing {
        out["timing_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    let stdout = match cli.format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut rows = vec![
                vec!["generators".into(), group.alphabet().names().join(", ")],
                vec!["order".into(), group.order().unwrap_or(0).to_string()],
                vec!["palindromic elements".into(), oracle.palindromes().len().to_string()],
                vec!["width".into(), report.width.to_string()],
                vec!["witness".into(), witness_word],
                vec!["witness factors".into(), factors.join(" | ")],
            ];
            rows.push(vec![]);
            let mut s = table(&rows);
            let mut hist = vec![vec!["palindromes".to_string(), "elements".to_string()]];
            hist.extend(report.histogram.iter().enumerate().map(|(k, n)| vec![k.to_string(), n.to_string()]));
            s.push_str(&table(&hist));
            s
        }
    };
    Ok(Outcome::ok(stdout, true))
}

fn cmd_find_relation(cli: &Cli, a: &GroupArgs) -> Result<Outcome> {
    let spec = load_group_spec(&a.group)?;
    let group = extend_generators(&spec.build()?, &a.extend_gens)?;
    let w = find_relation_avoiding(&group, a.budget, &[])?;
    let out = json!({
        "group": spec,
        "generators": w.group.alphabet().names(),
        "relation": w.relation.to_string(),
        "length": w.relation.len(),
        "extra_generator": w.extra_generator.as_ref().map(|e| e.view()),
        "reverse": w.relation.reverse().to_string(),
        "reverse_value": w.group.format_element(&w.reverse_value),
    });
    let stdout = match cli.format {
        Format::Json => to_json(&out),
        Format::Text => {
            let mut rows = vec![vec!["relation".into(), w.relation.to_string()]];
            if let Some(e) = &w.extra_generator {
                rows.push(vec!["extra generator".into(), format!("{} = {}", e.name, e.word)]);
            }
            rows.push(vec!["reverse".into(), w.relation.reverse().to_string()]);
            rows.push(vec!["reverse value".into(), w.group.format_element(&w.reverse_value)]);
            table(&rows)
        }
    };
    Ok(Outcome::ok(stdout, true))
}

#[derive(Debug, Serialize)]
struct BenchRow {
    sample: usize,
    input: String,
    factors: Option<usize>,
    bound: Option<usize>,
    margin: Option<i64>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

fn bench_request(rng: &mut ChaCha8Rng, wreath: &WreathGroup, mode: Mode, max_len: usize) -> Result<Request> {
    let alphabet = wreath.alphabet();
    let top = wreath.top();
    let embed_cd = |cd: &CommutatorData, a_top: &crate::groups::Element| -> Result<Word> {
        let g = wreath.multiply(&wreath.from_top(a_top)?, &cd.target(wreath)?)?;
        wreath.assemble(&wreath.normal_form(&g)?)
    };
    Ok(match mode {
        Mode::FiniteTop => Request { mode, word: sampling::random_word(rng, alphabet, max_len), word2: None, exps: vec![] },
        Mode::Derived | Mode::Shifted => {
            let arg_len = (max_len / 8).max(1);
            let cd = sampling::random_commutator_data(rng, wreath, 3, 2, arg_len);
            let a_top = if rng.gen_bool(0.5) { sampling::random_position(rng, wreath, 3) } else { top.identity() };
            Request { mode, word: embed_cd(&cd, &a_top)?, word2: None, exps: vec![] }
        }
        Mode::AbelianTop => {
            let base_letters: Vec<_> = alphabet.letters().filter(|l| !wreath.is_top_letter(*l)).collect();
            let len = rng.gen_range(0..=max_len);
            let word = sampling::word_from(rng, alphabet, &base_letters, len);
            let exps = (0..top.rank()).map(|_| rng.gen_range(-5..=5)).collect();
            Request { mode, word, word2: None, exps }
        }
    })
}

fn cmd_bench(cli: &Cli, a: &BenchArgs) -> Result<Outcome> {
    let s = setup(&a.top, &a.base, &a.extend_gens)?;
    let witness = if needs_witness(a.mode) {
        Some(find_relation_avoiding(s.wreath.top(), a.budget, &[s.wreath.base().alphabet()])?)
    } else {
        None
    };
    if a.mode == Mode::AbelianTop && s.wreath.base().rank() == 0 {
        return Err(Error::GroupDefinition("base group has no generators".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let requests = (0..a.samples)
        .map(|_| bench_request(&mut rng, &s.wreath, a.mode, a.max_len))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<BenchRow> = requests
        .par_iter()
        .enumerate()
        .map(|(i, req)| {
            let start = Instant::now();
            let result = run_request(&s.wreath, req, witness.as_ref());
            let timing_ms = cli.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
            let input = match a.mode {
                Mode::AbelianTop => format!("a = {}; t = {:?}", req.word, req.exps),
                _ => req.word.to_string(),
            };
            match result {
                Ok(done) => {
                    let n = done.fact.len();
                    let bound = done.fact.bound.as_ref().map(|b| b.value);
                    BenchRow {
                        sample: i,
                        input,
                        factors: Some(n),
                        bound,
                        margin: bound.map(|b| b as i64 - n as i64),
                        verified: done.fact.certificate.product_matches,
                        error: None,
                        timing_ms,
                    }
                }
                Err(e) => BenchRow {
                    sample: i,
                    input,
                    factors: None,
                    bound: None,
                    margin: None,
                    verified: false,
                    error: Some(e.to_string()),
                    timing_ms,
                },
            }
        })
        .collect();
    let failures = rows.iter().filter(|r| !r.verified).count();
    let stdout = match cli.format {
        Format::Json => to_json(&json!({
            "mode": a.mode.name(),
            "top": s.top_spec,
            "base": s.base_spec,
            "seed": cli.seed,
            "samples": rows.len(),
            "failures": failures,
            "max_factors": rows.iter().filter_map(|r| r.factors).max(),
            "rows": rows,
        })),
        Format::Text => {
            let mut t = vec![vec!["sample", "factors", "bound", "margin", "verified"]
                .into_iter()
                .map(String::from)
                .collect::<Vec<_>>()];
            if cli.timing {
                t[0].push("ms".into());
            }
            for r in &rows {
                let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
                let mut row = vec![
                    r.sample.to_string(),
                    opt(r.factors.map(|v| v.to_string())),
                    opt(r.bound.map(|v| v.to_string())),
                    opt(r.margin.map(|v| v.to_string())),
                    if r.verified { "yes".into() } else { r.error.clone().unwrap_or_else(|| "NO".into()) },
                ];
                if let Some(ms) = r.timing_ms {
                    row.push(format!("{ms:.3}"));
                }
                t.push(row);
            }
            let mut s = table(&t);
            let _ = writeln!(s, "{} samples, {} failures", rows.len(), failures);
            s
        }
    };
    Ok(Outcome::ok(stdout, failures == 0))
}

fn cmd_verify(cli: &Cli, a: &VerifyArgs) -> Result<Outcome> {
    let text = if a.report == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| Error::GroupDefinition(format!("cannot read standard input: {e}")))?
    } else {
        std::fs::read_to_string(&a.report)
            .map_err(|e| Error::GroupDefinition(format!("cannot read {}: {e}", a.report)))?
    };
    let report: RunReport = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let (passed, body) = match report.reverify()? {
        Ok(cert) => (true, json!({ "verified": true, "factors": report.factors.len(), "certificate": cert })),
        Err(f) => (false, json!({ "verified": false, "factors": report.factors.len(), "failure": f })),
    };
    let stdout = match cli.format {
        Format::Json => to_json(&body),
        Format::Text => {
            let mut rows = vec![
                vec!["factors".into(), report.factors.len().to_string()],
                vec!["verified".into(), if passed { "yes".into() } else { "NO".into() }],
            ];
            if let Some(f) = body.get("failure") {
                rows.push(vec!["failure".into(), f.to_string()]);
            }
            table(&rows)
        }
    };
    Ok(Outcome::ok(stdout, passed))
}
