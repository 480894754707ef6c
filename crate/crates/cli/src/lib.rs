//! The `numtok` command-line tool.
//!
//! Every subcommand works line by line. Lines are independent, so they are
//! processed on a worker pool and written back in input order.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use numtok_core::pipeline::{decode_json_line, decode_line, encode_line};
use numtok_core::stats::StatsCounter;
use numtok_core::{validate_texts, ExportFormat, LocaleRule, MarkerStyle, Mode, Scanner, TstConfig, Vocabulary};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "numtok", version, about = "Magnitude-annotated number tokenization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replace numbers in text with magnitude-annotated tokens
    Encode(LineArgs),
    /// Turn token streams back into numerals
    Decode(LineArgs),
    /// Write the token vocabulary for a configuration
    Vocab(VocabArgs),
    /// Check one token sequence per line
    Validate(ValidateArgs),
    /// Compare sequence lengths against digit-level baselines
    Stats(StatsArgs),
}

#[derive(Args, Debug, Default)]
struct ConfigArgs {
    /// Digits per group
    #[arg(long)]
    group_size: Option<u32>,
    /// compound, marker or digit_marker
    #[arg(long)]
    mode: Option<String>,
    /// triadic_human or systematic
    #[arg(long)]
    marker_style: Option<String>,
    #[arg(long)]
    max_int_levels: Option<u32>,
    #[arg(long)]
    max_frac_depth: Option<u32>,
    /// Zero-pad the leading suffixed group
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pad_leading: Option<bool>,
    /// Emit [Tn] terminators that keep trailing fraction zeros
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    preserve_precision: Option<bool>,
    /// Built-in locale (western, indian, east_asian, plain) or a JSON rule file
    #[arg(long)]
    locale: Option<String>,
    /// JSON file with config fields; flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// Accept decimal digits from any script
    #[arg(long)]
    normalize_digits: bool,
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Read from this file instead of stdin
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Write to this file instead of stdout
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Worker threads; 0 picks one per core
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args, Debug)]
struct LineArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    io: IoArgs,
    /// tokens or jsonl
    #[arg(long, default_value = "tokens")]
    format: String,
}

#[derive(Args, Debug)]
struct VocabArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// lines or json
    #[arg(long, default_value = "lines")]
    format: String,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    io: IoArgs,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(flatten)]
    io: IoArgs,
}

/// A failure that ends the run before any output: bad flags or config.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

struct Settings {
    config: TstConfig,
    locale: LocaleRule,
    normalize_digits: bool,
}

impl Settings {
    fn scanner(&self) -> Scanner {
        Scanner::new(self.locale.clone()).with_digit_normalization(self.normalize_digits)
    }
}

fn load_locale(name: &str) -> Result<LocaleRule, UsageError> {
    if let Some(rule) = LocaleRule::builtin(name) {
        return Ok(rule);
    }
    let text = fs::read_to_string(name).map_err(|e| UsageError(format!("locale {name:?}: {e}")))?;
    Ok(LocaleRule::from_json(&text)?)
}

fn locale_from_json(value: serde_json::Value) -> Result<LocaleRule, UsageError> {
    match value {
        serde_json::Value::String(name) => load_locale(&name),
        other => {
            let rule: LocaleRule = serde_json::from_value(other)?;
            rule.validate()?;
            Ok(rule)
        }
    }
}

fn resolve(args: &ConfigArgs) -> Result<Settings, UsageError> {
    let mut config = TstConfig::default();
    let mut locale = LocaleRule::default();
    let mut normalize_digits = args.normalize_digits;

    if let Some(path) = &args.config {
        let text = fs::read_to_string(path).map_err(|e| UsageError(format!("config {}: {e}", path.display())))?;
        let mut value: serde_json::Value = serde_json::from_str(&text)?;
        let obj = value.as_object_mut().ok_or_else(|| UsageError("config file must hold a JSON object".into()))?;
        if let Some(l) = obj.remove("locale") {
            locale = locale_from_json(l)?;
        }
        if let Some(n) = obj.remove("normalize_digits") {
            normalize_digits |= n.as_bool().ok_or_else(|| UsageError("normalize_digits must be a boolean".into()))?;
        }
        config = serde_json::from_value(value)?;
    }

    if let Some(n) = args.group_size {
        config.group_size = n;
        // the human marker set only exists for triads
        if args.marker_style.is_none() && n != 3 {
            config.marker_style = MarkerStyle::Systematic;
        }
    }
    if let Some(m) = &args.mode {
        config.mode = m.parse::<Mode>()?;
    }
    if let Some(s) = &args.marker_style {
        config.marker_style = s.parse::<MarkerStyle>()?;
    }
    if let Some(l) = args.max_int_levels {
        config.max_int_levels = l;
    }
    if let Some(d) = args.max_frac_depth {
        config.max_frac_depth = d;
    }
    if let Some(p) = args.pad_leading {
        config.pad_leading_group = p;
    }
    if let Some(p) = args.preserve_precision {
        config.preserve_precision = p;
    }
    if let Some(l) = &args.locale {
        locale = load_locale(l)?;
    }
    config.validate()?;
    Ok(Settings { config, locale, normalize_digits })
}

/// Input text split into lines, remembering whether it ended with a newline.
struct Lines {
    lines: Vec<String>,
    trailing_newline: bool,
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Lines, UsageError> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).map_err(|e| UsageError(format!("input {}: {e}", p.display())))?,
        None => {
            stdin.read_to_string(&mut text)?;
        }
    }
    let trailing_newline = text.ends_with('\n');
    let body = text.strip_suffix('\n').unwrap_or(&text);
    let lines = if text.is_empty() { Vec::new() } else { body.split('\n').map(str::to_string).collect() };
    Ok(Lines { lines, trailing_newline })
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, UsageError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(workers).build()?)
}

/// Result of processing one line: its output and any error messages.
type LineResult = (String, Vec<String>);

fn map_lines<F>(lines: &Lines, workers: usize, f: F) -> Result<Vec<LineResult>, UsageError>
where
    F: Fn(&str) -> LineResult + Sync,
{
    let pool = pool(workers)?;
    Ok(pool.install(|| lines.lines.par_iter().map(|l| f(l)).collect()))
}

fn open_output<'a>(path: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, UsageError> {
    match path {
        Some(p) => {
            let file = fs::File::create(p).map_err(|e| UsageError(format!("output {}: {e}", p.display())))?;
            Ok(Box::new(std::io::BufWriter::new(file)))
        }
        None => Ok(Box::new(stdout)),
    }
}

/// Writes per-line results in order and reports errors; returns the exit status.
fn emit(
    results: Vec<LineResult>,
    trailing_newline: bool,
    out: &mut dyn Write,
    stderr: &mut dyn Write,
) -> std::io::Result<i32> {
    let mut status = EXIT_OK;
    let count = results.len();
    for (i, (line, errors)) in results.into_iter().enumerate() {
        out.write_all(line.as_bytes())?;
        if i + 1 < count || trailing_newline {
            out.write_all(b"\n")?;
        }
        for e in errors {
            writeln!(stderr, "line {}: {e}", i + 1)?;
            status = EXIT_DATA;
        }
    }
    out.flush()?;
    Ok(status)
}

enum Direction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum LineFormat {
    Tokens,
    Jsonl,
}

fn line_format(s: &str) -> Result<LineFormat, UsageError> {
    match s {
        "tokens" => Ok(LineFormat::Tokens),
        "jsonl" => Ok(LineFormat::Jsonl),
        _ => Err(UsageError(format!("unknown format {s:?}; expected tokens or jsonl"))),
    }
}

fn run_lines(
    args: &LineArgs,
    direction: Direction,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, UsageError> {
    let settings = resolve(&args.config)?;
    let format = line_format(&args.format)?;
    let input = read_input(args.io.input.as_deref(), stdin)?;
    let config = &settings.config;
    let scanner = settings.scanner();
    let mark = settings.locale.decimal_mark;

    let results = match direction {
        Direction::Encode => map_lines(&input, args.io.workers, |line| match encode_line(line, config, &scanner) {
            Ok(encoded) => {
                let errors = encoded.errors.iter().map(|e| format!("{}: {}", e.code, e.message)).collect();
                let text = match format {
                    LineFormat::Tokens => encoded.to_tokens_line(),
                    LineFormat::Jsonl => encoded.to_json(),
                };
                (text, errors)
            }
            Err(e) => (line.to_string(), vec![format!("{}: {e}", e.code())]),
        })?,
        Direction::Decode => map_lines(&input, args.io.workers, |line| {
            let decoded = match format {
                LineFormat::Tokens => decode_line(line, config, mark),
                LineFormat::Jsonl => decode_json_line(line, config, mark),
            };
            match decoded {
                Ok(text) => (text, Vec::new()),
                Err(e) => (line.to_string(), vec![format!("{}: {e}", e.code())]),
            }
        })?,
    };
    let mut out = open_output(args.io.output.as_deref(), stdout)?;
    Ok(emit(results, input.trailing_newline, &mut out, stderr)?)
}

fn run_vocab(args: &VocabArgs, stdout: &mut dyn Write) -> Result<i32, UsageError> {
    let settings = resolve(&args.config)?;
    let format: ExportFormat = args.format.parse()?;
    let vocab = Vocabulary::build(&settings.config)?;
    let mut out = open_output(args.output.as_deref(), stdout)?;
    vocab.export(format, &mut out)?;
    out.flush()?;
    Ok(EXIT_OK)
}

fn run_validate(
    args: &ValidateArgs,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, UsageError> {
    let settings = resolve(&args.config)?;
    let input = read_input(args.io.input.as_deref(), stdin)?;
    let config = &settings.config;
    let results = map_lines(&input, args.io.workers, |line| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match validate_texts(&tokens, config).violation {
            None => ("ok".to_string(), Vec::new()),
            Some(v) => (format!("fail {} token={} {}", v.rule, v.index, v.message), Vec::new()),
        }
    })?;
    let failed = results.iter().filter(|(l, _)| l.starts_with("fail")).count();
    let mut out = open_output(args.io.output.as_deref(), stdout)?;
    emit(results, true, &mut out, stderr)?;
    if failed > 0 {
        writeln!(stderr, "{failed} of {} sequences failed validation", input.lines.len())?;
        return Ok(EXIT_DATA);
    }
    Ok(EXIT_OK)
}

fn run_stats(args: &StatsArgs, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, UsageError> {
    let settings = resolve(&args.config)?;
    let input = read_input(args.io.input.as_deref(), stdin)?;
    let config = &settings.config;
    let scanner = settings.scanner();
    let counter = pool(args.io.workers)?.install(|| {
        input
            .lines
            .par_iter()
            .map(|line| {
                let mut c = StatsCounter::default();
                c.add_line(line, config, &scanner);
                c
            })
            .reduce(StatsCounter::default, |mut a, b| {
                a += b;
                a
            })
    });
    let mut out = open_output(args.io.output.as_deref(), stdout)?;
    serde_json::to_writer_pretty(&mut out, &counter.report())?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(EXIT_OK)
}

/// Runs the tool with explicit streams and returns the process exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let result = match &cli.command {
        Command::Encode(a) => run_lines(a, Direction::Encode, stdin, stdout, stderr),
        Command::Decode(a) => run_lines(a, Direction::Decode, stdin, stdout, stderr),
        Command::Vocab(a) => run_vocab(a, stdout),
        Command::Validate(a) => run_validate(a, stdin, stdout, stderr),
        Command::Stats(a) => run_stats(a, stdin, stdout),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "numtok: {msg}");
            EXIT_USAGE
        }
    }
}
