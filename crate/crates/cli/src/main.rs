use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use compset::format::{self, SetRecord};
use compset::papr::{papr_rows, DEFAULT_OVERSAMPLE};
use compset::reach::{self, table1};
use compset::search::{SearchOptions, DEFAULT_WORK_BOUND};
use compset::{
    Alphabet, CoefficientTuple4, CoefficientTuple8, ComplementarySet, Error, GcpLookup, SeedDb,
};
use serde_json::{json, Value};

mod report;

#[derive(Parser)]
#[command(
    name = "compset",
    version,
    about = "Complementary sets of q-ary sequences"
)]
struct Cli {
    /// Render rows with + - i î glyphs (q = 2, 4) instead of exponent digits.
    #[arg(long, global = true)]
    pretty: bool,

    /// Output format for sets and reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a file holds a complementary set.
    Verify {
        file: PathBuf,
        /// Report style; `json` is the structured form.
        #[arg(long, value_enum)]
        report: Option<Format>,
    },
    /// Size-4 set from two Golay pairs.
    Theorem1 {
        #[arg(long)]
        pair_a: PathBuf,
        #[arg(long)]
        pair_b: PathBuf,
        /// Exponents x0,x1,y0,y1.
        #[arg(long)]
        coeffs: String,
        /// Read coefficients as 1,-1,i,-i instead of exponents.
        #[arg(long)]
        complex: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Size-8 set from a Golay pair and a size-4 set.
    Theorem2 {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        set: PathBuf,
        /// Exponents x0,x1,x2,x3,y0,y1.
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        complex: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Union of the rows of several sets of equal length.
    Stack {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Golay pair of a given length from the seed database.
    Gcp {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reachable lengths of size-4 or size-8 sets.
    Enumerate {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        max: usize,
        /// Compare against the published table (lengths up to 34).
        #[arg(long)]
        table1: bool,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
    /// Concrete verified set of a reachable length.
    Build {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search up to equivalence.
    Search {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_WORK_BOUND)]
        work_bound: u64,
    },
    /// Peak-to-average power ratio of every row.
    Papr {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_OVERSAMPLE)]
        oversample: usize,
    },
    /// Seed database.
    Seeds {
        #[command(subcommand)]
        command: SeedsCommand,
    },
    /// Verify the packaged example files.
    Selftest,
}

#[derive(Subcommand)]
enum SeedsCommand {
    List {
        #[arg(long)]
        q: Option<u32>,
    },
}

/// Exit status plus the message for stderr.
enum Failure {
    Negative(String),
    Input { kind: &'static str, error: Error },
    Usage(String),
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let kind = match &error {
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
            Error::Inadmissible { .. } => "inadmissible",
            Error::NotComplementary { .. } => "not-complementary",
            Error::WorkBound { .. } => "work-bound",
            Error::Unconstructible(_) => "unconstructible",
            Error::Seed { .. } => "seed",
            _ => "input",
        };
        Failure::Input { kind, error }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Input {
                error: Error::WorkBound { .. },
                ..
            } => 3,
            Failure::Input { .. } | Failure::Usage(_) => 2,
        }
    }

    fn line(&self) -> String {
        let code = self.code();
        match self {
            Failure::Negative(msg) => format!("error: code={code} kind=negative message={msg:?}"),
            Failure::Usage(msg) => format!("error: code={code} kind=usage message={msg:?}"),
            Failure::Input { kind, error } => {
                let mut line = format!("error: code={code} kind={kind}");
                match error {
                    Error::Parse {
                        line: l,
                        column,
                        message,
                    } => line.push_str(&format!(" line={l} column={column} message={message:?}")),
                    Error::NotComplementary { shift } => line.push_str(&format!(
                        " first_defect_shift={shift} message={:?}",
                        error.to_string()
                    )),
                    _ => line.push_str(&format!(" message={:?}", error.to_string())),
                }
                line
            }
        }
    }
}

type Outcome = Result<(), Failure>;

struct Ctx {
    pretty: bool,
    json: bool,
}

impl Ctx {
    /// The set in the requested rendering.
    fn render(&self, set: &ComplementarySet, note: Option<&str>) -> Result<String, Failure> {
        if self.json {
            return Ok(format::to_json(set, note) + "\n");
        }
        if self.pretty {
            let mut out = format!(
                "q={} rows={} len={}",
                set.alphabet().q(),
                set.size(),
                set.length()
            );
            if let Some(note) = note {
                out.push_str(&format!(" note={note}"));
            }
            out.push('\n');
            for row in set.rows() {
                out.push_str(&row.pretty());
                out.push('\n');
            }
            return Ok(out);
        }
        Ok(format::to_text(set, note)?)
    }

    /// Files always get the canonical form; `--pretty` only affects stdout.
    fn emit(&self, set: &ComplementarySet, note: Option<&str>, out: Option<&Path>) -> Outcome {
        match out {
            Some(path) => {
                let text = if self.json {
                    format::to_json(set, note) + "\n"
                } else {
                    format::to_text(set, note)?
                };
                std::fs::write(path, text)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                Ok(())
            }
            None => {
                print(&self.render(set, note)?);
                Ok(())
            }
        }
    }
}

fn print(text: &str) {
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = stdout.write_all(text.as_bytes());
}

fn load(path: &Path) -> Result<ComplementarySet, Failure> {
    Ok(format::read_file(path)?.set)
}

fn load_verified(path: &Path) -> Result<ComplementarySet, Failure> {
    load(path)?.into_verified().map_err(|e| match e {
        Error::NotComplementary { shift } => Failure::Input {
            kind: "not-complementary",
            error: Error::Seed {
                name: path.display().to_string(),
                reason: format!("not a complementary set (first defect at shift {shift})"),
            },
        },
        e => e.into(),
    })
}

fn parse_coeffs(
    text: &str,
    alphabet: Alphabet,
    complex: bool,
    count: usize,
) -> Result<Vec<u32>, Failure> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != count {
        return Err(Failure::Usage(format!(
            "expected {count} comma-separated coefficients, found {}",
            parts.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            let exp = if complex {
                match *p {
                    "1" | "+1" => Some(0),
                    "-1" => alphabet.minus_one(),
                    "i" | "+i" => alphabet.imaginary_unit(),
                    "-i" => alphabet.imaginary_unit().map(|t| alphabet.q() - t),
                    _ => None,
                }
            } else {
                p.parse().ok().filter(|&t: &u32| t < alphabet.q())
            };
            exp.ok_or_else(|| {
                Failure::Usage(format!("'{p}' is not a coefficient for q={}", alphabet.q()))
            })
        })
        .collect()
}

fn alphabet(q: u32) -> Result<Alphabet, Failure> {
    match q {
        2 | 4 => Ok(Alphabet::new(q)?),
        _ => Err(Error::UnsupportedAlphabet(q).into()),
    }
}

fn set_list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        pretty: cli.pretty,
        json: cli.format == Format::Json,
    };
    match cli.command {
        Command::Verify { file, report } => {
            let set = load(&file)?;
            let r = compset::verify(&set);
            if report.unwrap_or(cli.format) == Format::Json {
                print(&(report::verification_json(&r).to_string() + "\n"));
            } else {
                print(&report::verification_text(&r));
            }
            if r.is_cs {
                Ok(())
            } else {
                Err(Failure::Negative(match r.first_defect_shift {
                    Some(s) => format!("not a complementary set: first_defect_shift={s}"),
                    None => "not a complementary set: peak mismatch".into(),
                }))
            }
        }
        Command::Theorem1 {
            pair_a,
            pair_b,
            coeffs,
            complex,
            out,
        } => {
            let a = load_verified(&pair_a)?;
            let b = load_verified(&pair_b)?;
            let c = parse_coeffs(&coeffs, a.alphabet(), complex, 4)?;
            let coeffs = CoefficientTuple4::new(c[0], c[1], c[2], c[3]);
            let cs = compset::theorem1(&a, &b, coeffs)?;
            ctx.emit(&cs, None, out.as_deref())
        }
        Command::Theorem2 {
            pair,
            set,
            coeffs,
            complex,
            out,
        } => {
            let p = load_verified(&pair)?;
            let s = load_verified(&set)?;
            let c = parse_coeffs(&coeffs, p.alphabet(), complex, 6)?;
            let coeffs = CoefficientTuple8::new(c[0], c[1], c[2], c[3], c[4], c[5]);
            let cs = compset::theorem2(&p, &s, coeffs)?;
            ctx.emit(&cs, None, out.as_deref())
        }
        Command::Stack { files, out } => {
            let sets = files
                .iter()
                .map(|f| load_verified(f))
                .collect::<Result<Vec<_>, _>>()?;
            let cs = compset::stack(&sets)?;
            ctx.emit(&cs, None, out.as_deref())
        }
        Command::Gcp { q, len, out } => {
            let db = SeedDb::builtin()?;
            match db.gcp_for_length(alphabet(q)?.q(), len)? {
                GcpLookup::Available(w) => {
                    let note = w.derivation.to_string();
                    if out.is_some() {
                        print(&format!("derivation: {note}\n"));
                    } else {
                        eprintln!("derivation: {note}");
                    }
                    ctx.emit(&w.pair, Some(&note), out.as_deref())
                }
                lookup @ GcpLookup::Unavailable { .. } => {
                    Err(Failure::Negative(lookup.reason().unwrap_or_default()))
                }
            }
        }
        Command::Enumerate {
            q,
            size,
            max,
            table1,
            json,
        } => {
            alphabet(q)?;
            let db = SeedDb::builtin()?;
            let mut set = reach::reachable(q, size, max)?;
            reach::label_constructive(&mut set, &db);
            let diff = if table1 {
                let d = table1::diff(&set).ok_or_else(|| {
                    Failure::Usage(format!("no published row for q={q} size={size}"))
                })?;
                Some(d)
            } else {
                None
            };
            if json || ctx.json {
                let mut v = serde_json::to_value(&set).expect("serializable");
                if let Some(d) = &diff {
                    v["table1"] = serde_json::to_value(d).expect("serializable");
                }
                print(&(v.to_string() + "\n"));
            } else {
                print(&report::reach_text(&set));
                if let Some(d) = &diff {
                    let missing: Vec<usize> = d.missing.iter().copied().collect();
                    let extra: Vec<usize> = d.extra.iter().copied().collect();
                    print(&format!(
                        "table1 (len <= {}): missing={} extra={}\n",
                        table1::MAX,
                        set_list(&missing),
                        set_list(&extra)
                    ));
                }
            }
            Ok(())
        }
        Command::Build { q, size, len, out } => {
            let db = SeedDb::builtin()?;
            let (cs, witness) = reach::build(&db, alphabet(q)?.q(), size, len)?;
            eprintln!("witness: {witness}");
            ctx.emit(&cs, Some(&witness.to_string()), out.as_deref())
        }
        Command::Search {
            q,
            size,
            len,
            limit,
            work_bound,
        } => {
            let outcome =
                compset::search_cs(alphabet(q)?, size, len, SearchOptions { limit, work_bound })?;
            eprintln!(
                "classes={} shown={} incomplete={} nodes={}",
                outcome.total,
                outcome.results.len(),
                outcome.incomplete,
                outcome.nodes
            );
            if ctx.json {
                let records: Vec<SetRecord> = outcome
                    .results
                    .iter()
                    .map(|s| SetRecord::from_set(s, None))
                    .collect();
                print(
                    &(json!({
                        "total": outcome.total,
                        "incomplete": outcome.incomplete,
                        "nodes": outcome.nodes,
                        "results": records,
                    })
                    .to_string()
                        + "\n"),
                );
            } else {
                for s in &outcome.results {
                    print(&ctx.render(s, None)?);
                }
            }
            Ok(())
        }
        Command::Papr { file, oversample } => {
            let set = load(&file)?;
            let rows = papr_rows(&set, oversample);
            if ctx.json {
                let v: Vec<Value> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        json!({
                            "row": i,
                            "papr": r.papr,
                            "papr_db": 10.0 * r.papr.log10(),
                            "peak_time": r.peak_time,
                            "oversample": r.oversample,
                        })
                    })
                    .collect();
                print(&(Value::Array(v).to_string() + "\n"));
            } else {
                let mut out = String::from("row\tpapr\tpapr_db\tpeak_time\n");
                for (i, r) in rows.iter().enumerate() {
                    out.push_str(&format!(
                        "{i}\t{:.6}\t{:.4}\t{:.6}\n",
                        r.papr,
                        10.0 * r.papr.log10(),
                        r.peak_time
                    ));
                }
                print(&out);
            }
            Ok(())
        }
        Command::Seeds {
            command: SeedsCommand::List { q },
        } => {
            let db = SeedDb::builtin()?;
            let seeds: Vec<_> = db
                .all()
                .iter()
                .filter(|s| q.is_none_or(|q| s.alphabet().q() == q))
                .collect();
            if ctx.json {
                let v: Vec<Value> = seeds
                    .iter()
                    .map(|s| {
                        json!({
                            "name": s.name,
                            "q": s.alphabet().q(),
                            "len": s.length(),
                            "provenance": s.provenance,
                            "source": s.source,
                            "rows": SetRecord::from_set(&s.pair, None).rows,
                        })
                    })
                    .collect();
                print(&(Value::Array(v).to_string() + "\n"));
            } else {
                let mut out = String::new();
                for s in seeds {
                    out.push_str(&format!(
                        "{}\tq={}\tlen={}\t{}\t{}\n",
                        s.name,
                        s.alphabet().q(),
                        s.length(),
                        s.provenance,
                        s.source
                    ));
                    if ctx.pretty {
                        for row in s.pair.rows() {
                            out.push_str(&format!("  {}\n", row.pretty()));
                        }
                    }
                }
                print(&out);
            }
            Ok(())
        }
        Command::Selftest => {
            let checks = compset::golden::run();
            let mut out = String::new();
            for c in &checks {
                out.push_str(&format!(
                    "{} {} ({})\n",
                    if c.passed { "ok  " } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            print(&out);
            match checks.iter().filter(|c| !c.passed).count() {
                0 => Ok(()),
                n => Err(Failure::Negative(format!("{n} self-test check(s) failed"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            eprintln!("error: code=2 kind=usage");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.code())
        }
    }
}
