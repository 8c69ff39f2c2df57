//! The `ulw` command line.
//!
//! [`run`] takes the full argument vector and returns the exit code together
//! with everything that would be written to standard output and standard
//! error, so the binary is a thin wrapper and tests can call it in-process.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ulw::enumerate::{enumerate_ulws_with_progress, Classification};
use ulw::jackson::JacksonGraph;
use ulw::lexcode::hamiltonian_census;
use ulw::structure::Ulw;
use ulw::{
    canonicalize, classify_ulws, is_ulw, lyndon_orders, refine_lex_code, CyclicWord, Error,
    RefinementScript, VerifyMode, Word,
};

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for a domain or validation failure.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for a usage error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(name = "ulw", version, about = "Universal Lyndon words toolkit")]
struct Cli {
    /// Worker threads for the parallel searches
    #[arg(long, global = true, env = "ULW_THREADS")]
    threads: Option<usize>,

    /// Report search progress on standard error
    #[arg(long, global = true)]
    progress: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WordArgs {
    /// A word such as 212313, or 1,2,10 for letters above 9
    word: String,

    /// Alphabet size; defaults to the largest letter of the word
    #[arg(long)]
    degree: Option<u8>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test whether a word is a universal Lyndon word
    Verify {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value = "definitional")]
        mode: VerifyMode,
        #[arg(long)]
        json: bool,
    },
    /// List the orders for which a word is Lyndon
    Orders {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Shortest unrepeated prefixes of the conjugates of a ULW
    Mt {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Jackson ULWs from Eulerian cycles of the Jackson graph J(n)
    Jackson {
        #[arg(long)]
        degree: u8,
        /// Every Eulerian cycle, deduplicated up to rotation
        #[arg(long)]
        all: bool,
        /// Stop after this many cycles with --all
        #[arg(long)]
        limit: Option<usize>,
        /// Print the graph in DOT format
        #[arg(long, conflicts_with = "all")]
        dot: bool,
    },
    /// Lex-codes
    Lexcode {
        #[command(subcommand)]
        command: LexcodeCommand,
    },
    /// Census of all ULWs of a degree up to rotation
    Enumerate {
        #[arg(long)]
        degree: u8,
        /// List isomorphism classes instead of words
        #[arg(long)]
        classify: bool,
        /// One JSON record per word, then a summary record
        #[arg(long)]
        jsonl: bool,
    },
    /// Canonical form of a cyclic word
    Canon {
        #[command(flatten)]
        word: WordArgs,
        /// Also minimize over renamings of the alphabet
        #[arg(long)]
        iso: bool,
    },
}

#[derive(Debug, Subcommand)]
enum LexcodeCommand {
    /// Replay a refinement script
    Build {
        #[arg(long)]
        script: PathBuf,
        /// Alphabet size; defaults to the largest letter in the script
        #[arg(long)]
        degree: Option<u8>,
        #[arg(long)]
        check_hamiltonian: bool,
        /// Spell a ULW from the first Hamiltonian cycle
        #[arg(long)]
        synthesize: bool,
        /// Print the S_X digraph in DOT format
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// All Hamiltonian lex-codes of a degree and the ULWs they give
    Search {
        #[arg(long)]
        degree: u8,
        #[arg(long)]
        json: bool,
    },
}

struct Output {
    stdout: String,
    stderr: String,
    progress: bool,
}

type Outcome = Result<i32, Error>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult {
                    exit_code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Output {
        stdout: String::new(),
        stderr: String::new(),
        progress: cli.progress,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(threads) = cli.threads {
        pool = pool.num_threads(threads);
    }
    let outcome = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(cli.command, &mut out)),
        Err(e) => {
            let _ = writeln!(out.stderr, "error: cannot start worker threads: {e}");
            Ok(EXIT_FAILURE)
        }
    };
    let exit_code = match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out.stderr, "error: {e}");
            EXIT_FAILURE
        }
    };
    CommandResult {
        exit_code,
        stdout: out.stdout,
        stderr: out.stderr,
    }
}

fn dispatch(command: Command, out: &mut Output) -> Outcome {
    match command {
        Command::Verify { word, mode, json } => verify(&word, mode, json, out),
        Command::Orders { word, json } => orders(&word, json, out),
        Command::Mt { word, json } => mt(&word, json, out),
        Command::Jackson {
            degree,
            all,
            limit,
            dot,
        } => jackson(degree, all, limit, dot, out),
        Command::Lexcode { command } => match command {
            LexcodeCommand::Build {
                script,
                degree,
                check_hamiltonian,
                synthesize,
                dot,
                json,
            } => lexcode_build(&script, degree, check_hamiltonian, synthesize, dot, json, out),
            LexcodeCommand::Search { degree, json } => lexcode_search(degree, json, out),
        },
        Command::Enumerate {
            degree,
            classify,
            jsonl,
        } => enumerate(degree, classify, jsonl, out),
        Command::Canon { word, iso } => {
            let w = parse_word(&word)?;
            let _ = writeln!(out.stdout, "{}", canonicalize(&w, iso)?);
            Ok(EXIT_OK)
        }
    }
}

fn parse_word(args: &WordArgs) -> Result<Word, Error> {
    Word::parse(&args.word, args.degree)
}

fn line(out: &mut String, value: &Value) {
    let _ = writeln!(out, "{value}");
}

fn verify(args: &WordArgs, mode: VerifyMode, json: bool, out: &mut Output) -> Outcome {
    let w = parse_word(args)?;
    let report = is_ulw(&w, mode)?;
    if json {
        let _ = writeln!(
            out.stdout,
            "{}",
            serde_json::to_string(&report).expect("reports serialize")
        );
    } else if report.is_ulw {
        let _ = writeln!(out.stdout, "ULW: yes (degree {})", report.degree);
    } else {
        let _ = writeln!(out.stdout, "ULW: no (degree {})", report.degree);
        if let Some(witness) = &report.witness {
            let _ = writeln!(out.stdout, "witness: {witness}");
        }
    }
    Ok(if report.is_ulw { EXIT_OK } else { EXIT_FAILURE })
}

fn orders(args: &WordArgs, json: bool, out: &mut Output) -> Outcome {
    let w = parse_word(args)?;
    let orders = lyndon_orders(&w)?;
    if json {
        let list: Vec<String> = orders.iter().map(ToString::to_string).collect();
        line(&mut out.stdout, &json!({ "word": w.to_string(), "orders": list }));
    } else {
        for order in &orders {
            let _ = writeln!(out.stdout, "{order}");
        }
    }
    Ok(EXIT_OK)
}

fn mt(args: &WordArgs, json: bool, out: &mut Output) -> Outcome {
    let ulw = Ulw::new(parse_word(args)?)?;
    let set: BTreeSet<Word> = ulw.mt().into_iter().collect();
    let list: Vec<String> = set.iter().map(ToString::to_string).collect();
    if json {
        line(&mut out.stdout, &json!({ "word": ulw.word().to_string(), "mt": list }));
    } else {
        for w in list {
            let _ = writeln!(out.stdout, "{w}");
        }
    }
    Ok(EXIT_OK)
}

fn jackson(degree: u8, all: bool, limit: Option<usize>, dot: bool, out: &mut Output) -> Outcome {
    let graph = JacksonGraph::new(degree)?;
    if dot {
        out.stdout.push_str(&graph.to_dot());
        return Ok(EXIT_OK);
    }
    if !all {
        let w = graph.word_from_cycle(&graph.find_eulerian_cycle())?;
        let _ = writeln!(out.stdout, "{w}");
        return Ok(EXIT_OK);
    }
    let mut words = BTreeSet::new();
    for (i, cycle) in graph.eulerian_cycles()?.enumerate() {
        if limit.is_some_and(|l| i >= l) {
            break;
        }
        words.insert(CyclicWord::new(&graph.word_from_cycle(&cycle)?));
        if out.progress && (i + 1) % 10_000 == 0 {
            let _ = writeln!(out.stderr, "progress: {} cycles", i + 1);
        }
    }
    for w in &words {
        let _ = writeln!(out.stdout, "{w}");
    }
    Ok(EXIT_OK)
}

/// The largest letter mentioned in a script, ignoring comments.
fn script_degree(text: &str) -> u8 {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| !c.is_ascii_digit()))
        .filter_map(|tok| tok.parse::<u8>().ok())
        .flat_map(|n| {
            // digit strings such as 112 are words, not a single letter
            n.to_string().chars().map(|c| c as u8 - b'0').collect::<Vec<_>>()
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

fn lexcode_build(
    path: &PathBuf,
    degree: Option<u8>,
    check_hamiltonian: bool,
    synthesize: bool,
    dot: bool,
    json: bool,
    out: &mut Output,
) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => {
            let _ = writeln!(out.stderr, "error: cannot read {}: {e}", path.display());
            return Ok(EXIT_FAILURE);
        }
    };
    let degree = degree.unwrap_or_else(|| script_degree(&text));
    let script = RefinementScript::parse(&text, degree)?;
    let code = refine_lex_code(degree, &script)?;
    let graph = code.sx_digraph();
    if dot {
        out.stdout.push_str(&graph.to_dot());
        return Ok(EXIT_OK);
    }
    let cycle = (check_hamiltonian || synthesize)
        .then(|| graph.find_hamiltonian_cycle())
        .flatten();
    let synthesized = match (&cycle, synthesize) {
        (Some(c), true) => Some(code.synthesize_ulw(c)?),
        (None, true) => {
            let _ = writeln!(out.stderr, "error: the lex-code is not Hamiltonian, nothing to synthesize");
            None
        }
        _ => None,
    };
    if json {
        let words: Vec<String> = code.words().iter().map(ToString::to_string).collect();
        let mut record = json!({ "degree": degree, "words": words });
        if check_hamiltonian || synthesize {
            record["hamiltonian"] = json!(cycle.is_some());
        }
        if let Some(w) = &synthesized {
            record["ulw"] = json!(w.to_string());
        }
        line(&mut out.stdout, &record);
    } else {
        out.stdout.push_str(&code.to_string());
        if check_hamiltonian || synthesize {
            let answer = if cycle.is_some() { "yes" } else { "no" };
            let _ = writeln!(out.stdout, "hamiltonian: {answer}");
        }
        if let Some(w) = &synthesized {
            let _ = writeln!(out.stdout, "ulw: {w}");
        }
    }
    Ok(if synthesize && synthesized.is_none() {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn lexcode_search(degree: u8, json: bool, out: &mut Output) -> Outcome {
    let census = hamiltonian_census(degree)?;
    if json {
        let codes: Vec<Vec<String>> = census
            .codes
            .iter()
            .map(|c| c.words().iter().map(ToString::to_string).collect())
            .collect();
        let words: Vec<Value> = census
            .multiplicities
            .iter()
            .map(|(w, m)| json!({ "word": w.to_string(), "multiplicity": m }))
            .collect();
        line(
            &mut out.stdout,
            &json!({
                "degree": degree,
                "codes": codes,
                "cycles": census.cycles,
                "words": words,
            }),
        );
    } else {
        for w in &census.words {
            let _ = writeln!(out.stdout, "{w}");
        }
        let _ = writeln!(
            out.stderr,
            "codes={} cycles={} words={}",
            census.codes.len(),
            census.cycles,
            census.words.len()
        );
    }
    Ok(EXIT_OK)
}

fn enumerate(degree: u8, classify: bool, jsonl: bool, out: &mut Output) -> Outcome {
    let progress = out.progress;
    let reports = std::sync::Mutex::new(String::new());
    let census = enumerate_ulws_with_progress(degree, |done, total| {
        if progress {
            if let Ok(mut r) = reports.lock() {
                let _ = writeln!(r, "progress: {done}/{total} subtrees");
            }
        }
    })?;
    out.stderr
        .push_str(&reports.into_inner().unwrap_or_default());
    let classes = classify_ulws(&census)?;
    let summary = json!({
        "summary": {
            "degree": degree,
            "labeled": census.labeled_count,
            "iso": census.iso_class_count,
            "jackson": census.jackson_count,
            "non_jackson": census.non_jackson_count,
        }
    });
    if jsonl {
        if classify {
            for class in &classes.classes {
                line(&mut out.stdout, &class_record(class));
            }
        } else {
            for record in classes.records() {
                line(
                    &mut out.stdout,
                    &serde_json::to_value(&record).expect("records serialize"),
                );
            }
        }
        line(&mut out.stdout, &summary);
    } else {
        if classify {
            write_classes(&classes, &mut out.stdout);
        } else {
            for w in &census.canonical_words {
                let _ = writeln!(out.stdout, "{w}");
            }
        }
        let _ = writeln!(out.stderr, "{}", census.summary());
    }
    Ok(EXIT_OK)
}

fn class_record(class: &ulw::IsoClass) -> Value {
    json!({
        "iso_class_id": class.id,
        "representative": class.representative.to_string(),
        "jackson": class.jackson,
        "orbit_size": class.orbit_size(),
    })
}

fn write_classes(classes: &Classification, out: &mut String) {
    for class in &classes.classes {
        let kind = if class.jackson { "jackson" } else { "non-jackson" };
        let _ = writeln!(
            out,
            "{} {} {kind} orbit={}",
            class.id,
            class.representative,
            class.orbit_size()
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ulw(args: &str) -> CommandResult {
        run(std::iter::once("ulw").chain(args.split_whitespace()))
    }

    #[test]
    fn verify_text() {
        let r = ulw("verify 212313");
        assert_eq!(r.exit_code, EXIT_OK);
        assert_eq!(r.stdout, "ULW: yes (degree 3)\n");
        let r = ulw("verify 123123");
        assert_eq!(r.exit_code, EXIT_FAILURE);
        assert!(r.stdout.starts_with("ULW: no (degree 3)\nwitness: "));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(ulw("frobnicate").exit_code, EXIT_USAGE);
        assert_eq!(ulw("verify 212313 --bogus").exit_code, EXIT_USAGE);
        assert_eq!(ulw("verify 212313 --mode fast").exit_code, EXIT_USAGE);
        assert_eq!(ulw("--help").exit_code, EXIT_OK);
    }

    #[test]
    fn malformed_words_report_the_column() {
        let r = ulw("verify 21x313");
        assert_eq!(r.exit_code, EXIT_FAILURE);
        assert!(r.stderr.contains("column 3"), "{}", r.stderr);
    }

    #[test]
    fn script_degree_reads_letters() {
        assert_eq!(script_degree("- : 1,2\n11 : 2,3 # 9\n"), 3);
        assert_eq!(script_degree(""), 1);
    }

    #[test]
    fn canon_and_orders() {
        assert_eq!(ulw("canon 212313").stdout, "123132\n");
        assert_eq!(ulw("canon 212313 --iso").stdout, "121323\n");
        let r = ulw("orders 313241342142314321234124");
        assert_eq!(r.stdout, "3<1<2<4\n3<1<4<2\n");
    }
}
