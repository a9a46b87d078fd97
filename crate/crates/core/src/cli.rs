//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad permutation or word,
//! failed characterization, failed verification), 2 on usage errors.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};

use crate::characterize::{
    is_suffix_array, is_suffix_array_parikh, min_alphabet, recover_word_sa, ParikhVector,
};
use crate::enumerate::{
    count_suffix_arrays, count_words, count_words_full_alphabet, gen_one_orbit, gen_parikh,
    gen_suffix_arrays,
};
use crate::error::Error;
use crate::linking::{phi, unphi, LinkingPermutation};
use crate::mid_sentinel::{
    is_ascending_to_max, is_mid_sentinel_sa, is_non_nesting, mid_sentinel_sa, recover_binary_word,
};
use crate::perm::Permutation;
use crate::strings::{
    bw_array, suffix_array, suffix_array_sentinel, SentinelWord, Word, SENTINEL_CHAR,
};
use crate::verify;

#[derive(Debug, Parser)]
#[command(
    name = "sufperm",
    version,
    about = "Suffix arrays, BW-arrays and linking permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A permutation given as one quoted argument or as separate values.
#[derive(Debug, Args)]
struct PermArg {
    /// 1-based values, e.g. "5 2 4 1 3"
    #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
    perm: Vec<String>,
}

impl PermArg {
    fn parse(&self) -> Result<Permutation, Error> {
        self.perm.join(" ").parse()
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Suffix array of a word
    Sa {
        /// Append '#' below every letter
        #[arg(long)]
        sentinel: bool,
        /// Alphabet size, if larger than the word's largest letter
        #[arg(long)]
        alphabet_size: Option<usize>,
        word: String,
    },
    /// BW-array of a primitive word
    Bwa {
        #[arg(long)]
        alphabet_size: Option<usize>,
        word: String,
    },
    /// Linking permutation
    Phi(PermArg),
    /// Rebuild a permutation from its linking permutation and first value
    Unphi {
        #[arg(long)]
        first: usize,
        #[command(flatten)]
        perm: PermArg,
    },
    /// Is the permutation a suffix array over k letters, or for given counts?
    Check {
        #[arg(long, required_unless_present = "parikh", conflicts_with = "parikh")]
        k: Option<usize>,
        /// Comma-separated letter counts, e.g. 2,3
        #[arg(long)]
        parikh: Option<String>,
        #[command(flatten)]
        perm: PermArg,
    },
    /// The unique word with the given counts and suffix array
    Recover {
        #[arg(long)]
        parikh: String,
        #[command(flatten)]
        perm: PermArg,
    },
    /// Exact counts
    #[command(subcommand)]
    Count(CountCommand),
    /// Streaming enumeration, one item per line
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Binary words with the sentinel between a and b
    #[command(subcommand)]
    He(HeCommand),
    /// Cross-check everything against brute force up to the given scale
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// Words over k letters with this suffix array
    Words {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        perm: PermArg,
    },
    /// Words using all k letters with this suffix array
    Surjective {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        perm: PermArg,
    },
    /// Suffix arrays of length n over k letters
    Arrays {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Subcommand)]
enum EnumerateCommand {
    /// One-orbit permutations of [1, n]
    OneOrbit {
        #[arg(long)]
        n: usize,
    },
    /// Suffix arrays of length n over k letters
    SuffixArrays {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Letter counts compatible with a suffix array
    Parikh {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        perm: PermArg,
    },
}

#[derive(Debug, Subcommand)]
enum HeCommand {
    /// Descent, ascending-to-max and non-nesting tests
    Check(PermArg),
    /// Suffix array of w# under a < # < b
    Sa { word: String },
    /// The binary word with this suffix array
    Recover(PermArg),
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Splits an optional trailing '#'.
fn parse_word(s: &str, alphabet_size: Option<usize>) -> Result<(Word, bool), Error> {
    match s.strip_suffix(SENTINEL_CHAR) {
        Some(base) => Ok((Word::parse(base, alphabet_size)?, true)),
        None => Ok((Word::parse(s, alphabet_size)?, false)),
    }
}

fn stream<T: std::fmt::Display>(
    out: &mut impl Write,
    items: impl Iterator<Item = T>,
) -> io::Result<()> {
    for item in items {
        writeln!(out, "{item}")?;
        out.flush()?;
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut impl Write) -> Result<(), Failure> {
    match cmd {
        Command::Sa {
            sentinel,
            alphabet_size,
            word,
        } => {
            let (w, trailing) = parse_word(&word, alphabet_size)?;
            let sa = if sentinel || trailing {
                suffix_array_sentinel(&SentinelWord::smallest(w))
            } else {
                suffix_array(&w)
            };
            writeln!(out, "{sa}")?;
        }
        Command::Bwa {
            alphabet_size,
            word,
        } => {
            let w = Word::parse(&word, alphabet_size)?;
            writeln!(out, "{}", bw_array(&w)?)?;
        }
        Command::Phi(perm) => writeln!(out, "{}", phi(&perm.parse()?))?,
        Command::Unphi { first, perm } => {
            let f = LinkingPermutation::new(perm.parse()?)?;
            writeln!(out, "{}", unphi(&f, first)?)?;
        }
        Command::Check { k, parikh, perm } => {
            let p = perm.parse()?;
            match (k, parikh) {
                (_, Some(r)) => {
                    let r: ParikhVector = r.parse()?;
                    writeln!(out, "{}", yes_no(is_suffix_array_parikh(&p, &r)?))?;
                }
                (Some(k), None) => {
                    writeln!(out, "{}", yes_no(is_suffix_array(&p, k)))?;
                    writeln!(out, "min-alphabet={}", min_alphabet(&p))?;
                }
                (None, None) => unreachable!("clap requires one of --k, --parikh"),
            }
        }
        Command::Recover { parikh, perm } => {
            let r: ParikhVector = parikh.parse()?;
            writeln!(out, "{}", recover_word_sa(&perm.parse()?, &r)?)?;
        }
        Command::Count(c) => {
            let n = match c {
                CountCommand::Words { k, perm } => count_words(&perm.parse()?, k),
                CountCommand::Surjective { k, perm } => {
                    count_words_full_alphabet(&perm.parse()?, k)
                }
                CountCommand::Arrays { n, k } => {
                    if n == 0 {
                        return Err(Error::InvalidLength { got: 0, min: 1 }.into());
                    }
                    count_suffix_arrays(n, k)
                }
            };
            writeln!(out, "{n}")?;
        }
        Command::Enumerate(e) => match e {
            EnumerateCommand::OneOrbit { n } => stream(out, gen_one_orbit(n))?,
            EnumerateCommand::SuffixArrays { n, k } => stream(out, gen_suffix_arrays(n, k))?,
            EnumerateCommand::Parikh { k, perm } => stream(out, gen_parikh(&perm.parse()?, k))?,
        },
        Command::He(h) => match h {
            HeCommand::Check(perm) => {
                let p = perm.parse()?;
                writeln!(out, "descent={}", yes_no(is_mid_sentinel_sa(&p)?))?;
                writeln!(out, "ascending-to-max={}", yes_no(is_ascending_to_max(&p)?))?;
                writeln!(out, "non-nesting={}", yes_no(is_non_nesting(&p)?))?;
            }
            HeCommand::Sa { word } => {
                let base = word.strip_suffix(SENTINEL_CHAR).unwrap_or(&word);
                if let Some(c) = base.chars().find(|c| !matches!(c, 'a' | 'b')) {
                    return Err(Failure::Domain(format!(
                        "binary words use only 'a' and 'b', found {c:?}"
                    )));
                }
                let w = Word::parse(base, Some(2))?;
                writeln!(out, "{}", mid_sentinel_sa(&w)?)?;
            }
            HeCommand::Recover(perm) => {
                writeln!(out, "{}", recover_binary_word(&perm.parse()?)?)?;
            }
        },
        Command::Verify { n, k } => {
            let report = verify::run(n, k)?;
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Err(Failure::Domain("verification failed".into()));
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return e.exit_code();
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        // a closed pipe downstream is not an error for streaming output
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
