use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use facet_core::{
    evaluate, extract_repository, parse_query, Bias, FactBase, Label, NodeKind, Outcome, SeedSelection, Session,
    SessionError, Status, TieBreak,
};
use facet_harness::{bundled_corpus, sweep, Grid, LabelPolicy, Manifest, SimulationConfig};

/// Finds code by example: extract facts from Java sources, query them, and
/// refine queries interactively from labeled results.
#[derive(Parser)]
#[command(name = "facet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract facts from a Java repository.
    Extract {
        #[arg(long)]
        repo: PathBuf,
        /// Output fact file; metadata goes next to it with a `.meta` suffix.
        #[arg(long)]
        facts: PathBuf,
    },
    /// Print the ids of methods matching a query.
    Query {
        #[command(flatten)]
        source: Source,
        /// Query text, or `@path` to read it from a file.
        #[arg(long)]
        query: String,
    },
    /// Interactive text-mode search session.
    Session(SessionArgs),
    /// Re-run a stored session and check it reproduces its results.
    Replay {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        session: PathBuf,
    },
    /// Simulated labeling sessions over ground-truth groups.
    Simulate(SimulateArgs),
    /// Serve the HTTP API and UI.
    Serve {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "127.0.0.1:8080")]
        bind: String,
        /// Directory sessions are stored in.
        #[arg(long)]
        sessions: Option<PathBuf>,
        /// Built UI assets to serve at `/`.
        #[arg(long)]
        assets: Option<PathBuf>,
    },
}

/// Where the factbase comes from.
#[derive(Args, Clone)]
struct Source {
    /// Java repository to extract on the fly.
    #[arg(long, conflicts_with = "facts")]
    repo: Option<PathBuf>,
    /// Fact file written by `facet extract`.
    #[arg(long)]
    facts: Option<PathBuf>,
}

#[derive(Args)]
struct SessionArgs {
    #[command(flatten)]
    source: Source,
    /// Session file; resumed when it exists.
    #[arg(long)]
    session: PathBuf,
    /// Seed method id, for a new session.
    #[arg(long)]
    method: Option<String>,
    /// Selected lines of the seed, `start-end`; the whole method by default.
    #[arg(long, value_parser = parse_lines)]
    lines: Option<(u32, u32)>,
    /// Annotated node id; repeat for several. Prompted for when absent.
    #[arg(long = "annotate")]
    annotate: Vec<String>,
    #[arg(long, default_value = "nested-structure")]
    bias: Bias,
}

#[derive(Args)]
struct SimulateArgs {
    /// Repository to extract; the bundled corpus by default.
    #[arg(long, conflicts_with = "facts")]
    repo: Option<PathBuf>,
    #[arg(long)]
    facts: Option<PathBuf>,
    /// Ground-truth groups; `groups.toml` of the bundled corpus by default.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Annotated features per seed; a comma-separated list sweeps.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    k: Vec<usize>,
    /// Labels per iteration; a comma-separated list sweeps.
    #[arg(long, value_delimiter = ',', default_value = "3")]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "nested-structure")]
    bias: Vec<Bias>,
    #[arg(long, value_delimiter = ',', default_value = "both")]
    label_policy: Vec<LabelPolicy>,
    #[arg(long, default_value_t = 0.0)]
    error_rate: f64,
    #[arg(long, default_value_t = 10)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    max_iterations: usize,
    /// Only these groups (comma-separated names).
    #[arg(long, value_delimiter = ',')]
    groups: Vec<String>,
    /// Write the tab-separated report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Bad input rather than a failure while running: exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn parse_lines(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once('-')
        .ok_or_else(|| format!("expected start-end, got `{s}`"))?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad start line `{a}`"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad end line `{b}`"))?;
    if a > b {
        return Err(format!("start line {a} is after end line {b}"));
    }
    Ok((a, b))
}

fn extract(repo: &Path) -> Result<FactBase> {
    if !repo.is_dir() {
        return Err(usage(format!("{} is not a directory", repo.display())));
    }
    let (fb, report) = extract_repository(repo).with_context(|| format!("reading {}", repo.display()))?;
    log::info!(
        "{} files, {} methods, {} facts ({} files skipped)",
        report.files_parsed,
        report.methods_parsed,
        fb.fact_count(),
        report.files_skipped.len()
    );
    for (file, err) in &report.files_skipped {
        eprintln!("skipped {file}: {err}");
    }
    Ok(fb)
}

fn load_facts(path: &Path) -> Result<FactBase> {
    if !path.is_file() {
        return Err(usage(format!("fact file {} does not exist", path.display())));
    }
    Ok(FactBase::load(path)?)
}

impl Source {
    fn load(&self) -> Result<FactBase> {
        match (&self.repo, &self.facts) {
            (Some(repo), _) => extract(repo),
            (None, Some(facts)) => load_facts(facts),
            (None, None) => Err(usage("one of --repo or --facts is required")),
        }
    }
}

fn cmd_extract(repo: &Path, facts: &Path) -> Result<()> {
    let fb = extract(repo)?;
    fb.save(facts)?;
    println!(
        "{} methods, {} facts written to {}",
        fb.method_nodes().count(),
        fb.fact_count(),
        facts.display()
    );
    Ok(())
}

fn cmd_query(source: &Source, query: &str) -> Result<()> {
    let text = match query.strip_prefix('@') {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read query file {path}: {e}")))?
        }
        None => query.to_string(),
    };
    let h = parse_query(text.trim()).map_err(|e| usage(format!("invalid query: {e}")))?;
    let fb = source.load()?;
    let mut out = io::stdout().lock();
    for id in evaluate(&h, &fb)? {
        writeln!(out, "{id}")?;
    }
    Ok(())
}

fn save_session(s: &Session, path: &Path) -> Result<()> {
    std::fs::write(path, s.to_json()).with_context(|| format!("writing {}", path.display()))
}

fn print_iteration(s: &Session, fb: &FactBase, out: &mut impl Write) -> io::Result<()> {
    let it = s.current();
    writeln!(out, "iteration {}: {}", it.index, it.query)?;
    for (i, id) in it.results.iter().enumerate() {
        let marker = match s.result_status(id) {
            facet_core::ResultStatus::New => " ",
            facet_core::ResultStatus::PreviouslyPositive => "+",
            facet_core::ResultStatus::PreviouslyNegative => "-",
        };
        let span = fb.lookup(id).map(|m| fb.node(m).span).unwrap_or_default();
        writeln!(
            out,
            "{marker}{:>3}  {id}  (lines {}-{})",
            i + 1,
            span.start_line,
            span.end_line
        )?;
    }
    for r in &s.reports {
        writeln!(out, "warning: {r}")?;
    }
    writeln!(out, "status: {}", s.status)
}

fn prompt_annotations(
    fb: &FactBase,
    method: &str,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<Vec<String>> {
    let m = fb
        .lookup(method)
        .ok_or_else(|| usage(format!("method `{method}` is not in the factbase")))?;
    let nodes: Vec<_> = fb.method_range(m).skip(1).collect();
    for (i, &n) in nodes.iter().enumerate() {
        let node = fb.node(n);
        let indent = "  ".repeat((node.depth - fb.node(m).depth) as usize);
        writeln!(
            out,
            "{:>3} {indent}{} {:?} (line {})",
            i + 1,
            node.kind,
            fb.label(n),
            node.span.start_line
        )?;
    }
    loop {
        write!(out, "features to annotate> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            bail!("no features annotated");
        }
        let picked: Result<Vec<String>, String> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&i| (1..=nodes.len()).contains(&i))
                    .map(|i| fb.node(nodes[i - 1]).id.clone())
                    .ok_or_else(|| format!("`{t}` is not a feature number"))
            })
            .collect();
        match picked {
            Ok(p) if !p.is_empty() => return Ok(p),
            Ok(_) => writeln!(out, "annotate at least one feature")?,
            Err(e) => writeln!(out, "{e}")?,
        }
    }
}

fn cmd_session(args: &SessionArgs, input: &mut impl BufRead, out: &mut impl Write) -> Result<()> {
    let fb = args.source.load()?;
    let mut session = if args.session.exists() {
        let text = std::fs::read_to_string(&args.session)?;
        let s = Session::from_json(&text).map_err(|e| usage(format!("{}: {e}", args.session.display())))?;
        s.check_fingerprint(&fb)?;
        s
    } else {
        let method = args
            .method
            .clone()
            .ok_or_else(|| usage("--method is required for a new session"))?;
        let m = fb
            .lookup(&method)
            .filter(|&m| fb.node(m).kind == NodeKind::Method)
            .ok_or_else(|| usage(format!("method `{method}` is not in the factbase")))?;
        let span = fb.node(m).span;
        let annotated = if args.annotate.is_empty() {
            prompt_annotations(&fb, &method, input, out)?
        } else {
            args.annotate.clone()
        };
        let seed = SeedSelection {
            method,
            lines: args.lines.unwrap_or((span.start_line, span.end_line)),
            annotated,
        };
        let id = args
            .session
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("session")
            .to_string();
        let s = Session::start(id, &fb, seed, args.bias, TieBreak::Deterministic).map_err(|e| match e {
            SessionError::Learn(_) => usage(e.to_string()),
            e => e.into(),
        })?;
        save_session(&s, &args.session)?;
        s
    };
    print_iteration(&session, &fb, out)?;
    let mut pending: Vec<Label> = Vec::new();
    loop {
        write!(out, "> ")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            break;
        }
        let mut words = line.split_whitespace().peekable();
        match words.peek().copied() {
            None => continue,
            Some("done") => {
                session.finish();
                break;
            }
            Some("refine") => {
                if pending.is_empty() {
                    writeln!(out, "nothing labeled")?;
                    continue;
                }
                match session.apply_labels(&fb, &pending) {
                    Ok(outcome) => {
                        pending.clear();
                        save_session(&session, &args.session)?;
                        if let Outcome::Infeasible(blocking) = outcome {
                            writeln!(out, "no query separates the labels; blocking: {}", blocking.join(", "))?;
                        }
                        print_iteration(&session, &fb, out)?;
                    }
                    Err(SessionError::Inconsistent(reports)) => {
                        pending.clear();
                        for r in reports {
                            writeln!(out, "inconsistent: {r}")?;
                        }
                        writeln!(out, "labels discarded")?;
                    }
                    Err(e) => writeln!(out, "error: {e}")?,
                }
                if session.status != Status::Active {
                    break;
                }
                continue;
            }
            Some(_) => {}
        }
        let results = &session.current().results;
        for w in words {
            let (positive, num) = match (w.strip_prefix('+'), w.strip_prefix('-')) {
                (Some(n), _) => (true, n),
                (_, Some(n)) => (false, n),
                _ => {
                    writeln!(out, "expected +i, -i, refine or done, got `{w}`")?;
                    continue;
                }
            };
            match num.parse::<usize>().ok().filter(|&i| (1..=results.len()).contains(&i)) {
                Some(i) => {
                    let id = &results[i - 1];
                    pending.retain(|l| &l.method != id);
                    pending.push(Label::new(id.clone(), positive));
                }
                None => writeln!(out, "no result {num}; results are numbered 1-{}", results.len())?,
            }
        }
    }
    save_session(&session, &args.session)?;
    writeln!(
        out,
        "saved {} ({} iterations, {})",
        args.session.display(),
        session.iterations.len(),
        session.status
    )?;
    Ok(())
}

fn cmd_replay(source: &Source, path: &Path) -> Result<()> {
    let fb = source.load()?;
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let stored = Session::from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let replayed = stored.replay(&fb)?;
    for it in &replayed.iterations {
        println!("{}\t{}\t{}", it.index, it.results.len(), it.query);
    }
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    let (fb, manifest_path) = match (&args.repo, &args.facts) {
        (Some(repo), _) => (extract(repo)?, args.manifest.clone()),
        (None, Some(facts)) => (load_facts(facts)?, args.manifest.clone()),
        (None, None) => {
            let dir = bundled_corpus();
            (
                extract(&dir)?,
                Some(args.manifest.clone().unwrap_or_else(|| dir.join("groups.toml"))),
            )
        }
    };
    let manifest_path = manifest_path.ok_or_else(|| usage("--manifest is required with --repo or --facts"))?;
    if !manifest_path.is_file() {
        return Err(usage(format!("manifest {} does not exist", manifest_path.display())));
    }
    let manifest = Manifest::load(&manifest_path).map_err(|e| usage(e.to_string()))?;
    manifest.validate(&fb).map_err(|e| usage(e.to_string()))?;
    let groups = if args.groups.is_empty() {
        manifest.groups.clone()
    } else {
        args.groups
            .iter()
            .map(|name| {
                manifest
                    .group(name)
                    .cloned()
                    .ok_or_else(|| usage(format!("no group `{name}` in the manifest")))
            })
            .collect::<Result<Vec<_>>>()?
    };
    let base = SimulationConfig {
        k: args.k[0],
        n: args.n[0],
        bias: args.bias[0],
        label_policy: args.label_policy[0],
        error_rate: args.error_rate,
        runs: args.runs,
        seed: args.seed,
        max_iterations: args.max_iterations,
    };
    base.validate().map_err(|e| usage(e.to_string()))?;
    for cfg in [&args.k, &args.n] {
        if cfg.contains(&0) {
            return Err(usage("k and n must be at least 1"));
        }
    }
    let grid = Grid {
        base,
        biases: args.bias.clone(),
        policies: args.label_policy.clone(),
        ks: args.k.clone(),
        ns: args.n.clone(),
    };
    let report = sweep(&grid, &fb, &groups)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, report.to_tsv()).with_context(|| format!("writing {}", path.display()))?;
            print!("{}", report.summary());
        }
        None => {
            print!("{}", report.to_tsv());
            eprint!("{}", report.summary());
        }
    }
    Ok(())
}

fn cmd_serve(source: &Source, bind: &str, sessions: Option<PathBuf>, assets: Option<PathBuf>) -> Result<()> {
    let fb = source.load()?;
    let config = facet_api::Config {
        source_root: source.repo.clone(),
        session_dir: sessions,
        assets,
    };
    let state = facet_api::AppState::new(fb, config)?;
    let rt = tokio::runtime::Runtime::new()?;
    rt.block_on(async {
        let listener = tokio::net::TcpListener::bind(bind)
            .await
            .with_context(|| format!("cannot bind {bind}"))?;
        eprintln!("listening on http://{}", listener.local_addr()?);
        facet_api::serve(listener, state).await?;
        Ok(())
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Extract { repo, facts } => cmd_extract(&repo, &facts),
        Command::Query { source, query } => cmd_query(&source, &query),
        Command::Session(args) => cmd_session(&args, &mut io::stdin().lock(), &mut io::stdout()),
        Command::Replay { source, session } => cmd_replay(&source, &session),
        Command::Simulate(args) => cmd_simulate(&args),
        Command::Serve {
            source,
            bind,
            sessions,
            assets,
        } => cmd_serve(&source, &bind, sessions, assets),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("FACET_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
