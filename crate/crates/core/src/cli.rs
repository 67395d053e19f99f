//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (non-primitive input, invalid
//! transform, failed verification, limit exceeded), 2 usage error, 3 I/O
//! error. Diagnostics go to standard error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::bwt::{bwt_transform, invert_bwt, pi_of, sigma, BwtContainer};
use crate::error::Error;
use crate::gessel_reutenauer::{
    binary_special_case_check, descents, enumerate_lyndon_colyndon, rho, verify_all, DEFAULT_LIMIT,
};
use crate::lyndon::lyndon_factorize;
use crate::permutation::format_images;
use crate::pipeline::{compress, decompress};
use crate::words::parikh;

#[derive(Debug, Parser)]
#[command(
    name = "bwtgr",
    version,
    about = "Cyclic Burrows-Wheeler transform and the Gessel-Reutenauer correspondence"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Input file; standard input when absent or "-"
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,

    /// Output file; standard output when absent or "-"
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Upper bound on enumeration sizes
    #[arg(long, global = true, env = "BWTGR_LIMIT", default_value_t = DEFAULT_LIMIT, value_parser = parse_limit)]
    pub limit: usize,

    /// Letters to enumerate over, e.g. "ab"
    #[arg(long, global = true)]
    pub alphabet: Option<String>,

    /// Drop one trailing newline from the input word
    #[arg(long, global = true)]
    pub strip_newline: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the BWTC1 container of the input word
    Transform,
    /// Recover the word from a BWTC1 container
    Invert,
    /// Print σ and π of the input word, one line each
    Permutation,
    /// Print the nonincreasing Lyndon factorization, one factor per line
    Factorize,
    /// Print the descents of π, the set ρ(v) and whether one contains the other
    Descents,
    /// Check the Lyndon-class/cycle bijection for every positive Parikh vector of length n
    Verify {
        #[arg(long)]
        n: usize,
    },
    /// Check the binary case: Lyndon words of length n against n-cycles with one descent
    BinaryCheck {
        #[arg(long)]
        n: usize,
    },
    /// Print the Lyndon/co-Lyndon table of length n
    Table {
        #[arg(long)]
        n: usize,
    },
    /// Compress with transform, move-to-front and run-length coding
    Compress,
    /// Invert `compress`
    Decompress,
}

fn parse_limit(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("limit must be at least 1".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the CLI against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(
        argv,
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr(),
    )
}

pub fn run_with<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return 2;
            }
            let _ = stdout.write_all(text.as_bytes());
            return 0;
        }
    };
    let result = execute(&config, stdin).and_then(|out| write_output(&config, &out, stdout));
    match result {
        Ok(()) => 0,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "bwtgr: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "bwtgr: {msg}");
            2
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "bwtgr: I/O error: {e}");
            3
        }
    }
}

fn read_input(config: &CliConfig, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let mut bytes = match config.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => fs::read(p)?,
        _ => {
            let mut buf = Vec::new();
            stdin.read_to_end(&mut buf)?;
            buf
        }
    };
    if config.strip_newline && bytes.last() == Some(&b'\n') {
        bytes.pop();
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
    }
    Ok(bytes)
}

fn write_output(config: &CliConfig, out: &[u8], stdout: &mut dyn Write) -> Result<(), Failure> {
    match config.output.as_deref() {
        Some(p) if p.as_os_str() != "-" => fs::write(p, out)?,
        _ => {
            stdout.write_all(out)?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn alphabet(config: &CliConfig) -> Result<Vec<u8>, Failure> {
    match config.alphabet.as_deref() {
        None => Ok(b"ab".to_vec()),
        Some("") => Err(Failure::Usage(
            "--alphabet must name at least one letter".into(),
        )),
        Some(a) => Ok(a.as_bytes().to_vec()),
    }
}

fn numbers(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn execute(config: &CliConfig, stdin: &mut dyn Read) -> Result<Vec<u8>, Failure> {
    let limit = config.limit;
    let out = match &config.command {
        Command::Transform => bwt_transform(&read_input(config, stdin)?)?.to_bytes(),
        Command::Invert => {
            let container = BwtContainer::from_bytes(&read_input(config, stdin)?)?;
            invert_bwt(&container)?.into_bytes()
        }
        Command::Permutation => {
            let w = read_input(config, stdin)?;
            let s = sigma(&w)?;
            let p = pi_of(&w)?;
            format!("{}\n{}\n", format_images(&s), format_images(&p)).into_bytes()
        }
        Command::Factorize => {
            let w = read_input(config, stdin)?;
            let mut out = Vec::new();
            for f in lyndon_factorize(&w)?.factors() {
                out.extend_from_slice(f);
                out.push(b'\n');
            }
            out
        }
        Command::Descents => {
            let w = read_input(config, stdin)?;
            let des = descents(&pi_of(&w)?);
            let rho = rho(&parikh(&w))?;
            format!(
                "des {}\nrho {}\ncontained {}\n",
                numbers(des.positions()),
                numbers(rho.positions()),
                des.is_subset_of(&rho)
            )
            .into_bytes()
        }
        Command::Verify { n } => {
            let reports = verify_all(*n, &alphabet(config)?, limit)?;
            let mut text = String::new();
            let (mut classes, mut perms, mut ok) = (0, 0, true);
            for r in &reports {
                text.push_str(&format!(
                    "{}\t{} classes\t{} permutations\t{}\n",
                    r.parikh_vector,
                    r.class_count,
                    r.perm_count,
                    verdict(r.is_bijective())
                ));
                classes += r.class_count;
                perms += r.perm_count;
                ok &= r.is_bijective() && r.class_count == r.perm_count;
            }
            text.push_str(&format!(
                "{classes} classes, {perms} permutations, {}\n",
                verdict(ok)
            ));
            if !ok {
                return Err(Failure::Domain(Error::Malformed(format!(
                    "verification failed\n{text}"
                ))));
            }
            text.into_bytes()
        }
        Command::BinaryCheck { n } => {
            let r = binary_special_case_check(*n, limit)?;
            let text = format!(
                "n={}: {} Lyndon words, {} one-descent cycles, {}\n",
                r.n,
                r.lyndon_count,
                r.cycle_count,
                verdict(r.bijective)
            );
            if !r.bijective {
                return Err(Failure::Domain(Error::Malformed(format!(
                    "verification failed: {text}"
                ))));
            }
            text.into_bytes()
        }
        Command::Table { n } => {
            let mut text = String::new();
            for row in enumerate_lyndon_colyndon(*n, &alphabet(config)?, limit)? {
                text.push_str(&row.to_line());
                text.push('\n');
            }
            text.into_bytes()
        }
        Command::Compress => compress(&read_input(config, stdin)?)?,
        Command::Decompress => decompress(&read_input(config, stdin)?)?.into_bytes(),
    };
    Ok(out)
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "bijective"
    } else {
        "not bijective"
    }
}
