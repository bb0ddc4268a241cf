//! Command-line front end.
//!
//! Ideals are written as comma-separated monomials (`x^3, x*y, y^3`, with
//! `1` for the unit monomial) or as a JSON array of exponent pairs
//! (`[[3,0],[1,1],[0,3]]`). Every command prints a plain-text result, or a
//! JSON report with the fields `command`, `ideals`, `result` and
//! `warnings` when `--json` is given.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bhattacharya::{
    bhattacharya_polynomial, colength, fiber_function, hilbert_function, min_generators, with_maximal_ideal,
    BhattacharyaPolynomial, HalfInteger,
};
use crate::corpus::random_complete_ideal;
use crate::error::Error;
use crate::factorization::zariski_factor;
use crate::lattice_geom::LatticePoint;
use crate::monomial_ideal::{CompleteIdeal, CompletenessPolicy, MonomialIdeal};
use crate::oracle::brute_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "monoideal", version, about = "Complete monomial ideals in two variables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Replace incomplete inputs by their integral closure instead of failing.
    #[arg(long, global = true)]
    pub autoclose: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integral closure of I.
    Closure(One),
    /// Zariski factorization of I into block ideals.
    Factor(One),
    /// Colength l(R/I).
    Colength(One),
    /// Bhattacharya polynomial l(R/I^m J^n).
    Bhatt(Two),
    /// Bhattacharya polynomial of I and the maximal ideal.
    Maxideal(One),
    /// l(I^m/I^(m+1)) for m = 0..=max-m.
    Hilbert(Sequence),
    /// l(I^m/mI^m) for m = 0..=max-m.
    Fiber(Sequence),
    /// Minimal number of generators of I.
    Gens(One),
    /// Compare the closed form against brute-force lattice counts.
    Verify(Verify),
}

#[derive(Debug, Args)]
pub struct One {
    /// Ideal expression, or `-` to read it from stdin.
    #[arg(short = 'i', value_name = "IDEAL")]
    pub i: String,
}

#[derive(Debug, Args)]
pub struct Two {
    #[arg(short = 'i', value_name = "IDEAL")]
    pub i: String,
    #[arg(short = 'j', value_name = "IDEAL")]
    pub j: String,
}

#[derive(Debug, Args)]
pub struct Sequence {
    #[arg(short = 'i', value_name = "IDEAL")]
    pub i: String,
    #[arg(long, default_value_t = 4)]
    pub max_m: u32,
}

#[derive(Debug, Args)]
pub struct Verify {
    /// First ideal; required unless --random is given.
    #[arg(short = 'i', value_name = "IDEAL", required_unless_present = "random")]
    pub i: Option<String>,
    /// Second ideal; defaults to the maximal ideal.
    #[arg(short = 'j', value_name = "IDEAL")]
    pub j: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub max_m: u32,
    #[arg(long, default_value_t = 4)]
    pub max_n: u32,
    /// Verify this many random complete pairs instead of -i/-j.
    #[arg(long, value_name = "N", conflicts_with = "i")]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Bound on a_I and b_I for random ideals.
    #[arg(long, default_value_t = 20)]
    pub max_exponent: i64,
    /// Add 1 to the m² coefficient before comparing (fault injection).
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

/// Error raised while running a command, with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::NegativeExponent { .. } | Error::EmptyIdeal => EXIT_USAGE,
            Error::Inconsistent(_) => EXIT_INTERNAL,
            _ => EXIT_DOMAIN,
        };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

/// Outcome of one command.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub ideals: BTreeMap<String, MonomialIdeal>,
    pub result: Value,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit_code: i32,
}

impl Report {
    fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            ideals: BTreeMap::new(),
            result: Value::Null,
            warnings: Vec::new(),
            text: String::new(),
            exit_code: EXIT_OK,
        }
    }
}

/// Parses an ideal expression; see the module docs for the grammar.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let pairs: Vec<[i64; 2]> = serde_json::from_str(trimmed).map_err(|e| Error::Parse {
            pos: text.len() - trimmed.len() + e.column().saturating_sub(1),
            msg: format!("invalid JSON ideal: {e}"),
        })?;
        return MonomialIdeal::normalize(pairs.into_iter().map(LatticePoint::from));
    }
    ExprParser::new(text).ideal()
}

struct ExprParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn new(text: &'a str) -> Self {
        ExprParser { src: text.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, Error> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ideal(&mut self) -> Result<MonomialIdeal, Error> {
        if self.peek().is_none() {
            return self.err("empty ideal expression");
        }
        let mut gens = vec![self.monomial()?];
        loop {
            match self.peek() {
                None => break,
                Some(b',') => {
                    self.pos += 1;
                    gens.push(self.monomial()?);
                }
                Some(c) => return self.err(format!("expected ',' or end of input, found '{}'", c as char)),
            }
        }
        MonomialIdeal::normalize(gens)
    }

    fn monomial(&mut self) -> Result<LatticePoint, Error> {
        let mut p = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let q = self.factor()?;
            p = p.checked_add(q).map_err(|_| Error::Parse { pos: self.pos, msg: "exponent too large".into() })?;
        }
        Ok(p)
    }

    fn factor(&mut self) -> Result<LatticePoint, Error> {
        match self.peek() {
            Some(b'x') | Some(b'y') => {
                let var = self.src[self.pos];
                self.pos += 1;
                let e = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.exponent()?
                } else {
                    1
                };
                Ok(if var == b'x' { LatticePoint::new(e, 0) } else { LatticePoint::new(0, e) })
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.integer()?;
                if n != 1 {
                    self.pos = start;
                    return self.err("only the constant 1 may appear (coefficients are not supported)");
                }
                Ok(LatticePoint::ORIGIN)
            }
            Some(c) => self.err(format!("expected 'x', 'y' or '1', found '{}'", c as char)),
            None => self.err("expected a monomial, found end of input"),
        }
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        match self.peek() {
            Some(b'-') => self.err("negative exponent"),
            Some(c) if c.is_ascii_digit() => {
                let e = self.integer()?;
                if self.src.get(self.pos) == Some(&b'.') {
                    return self.err("non-integer exponent");
                }
                Ok(e)
            }
            _ => self.err("expected an exponent after '^'"),
        }
    }

    fn integer(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Parse { pos: start, msg: "integer too large".into() })
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Inputs<'_> {
    fn read(&mut self, expr: &str) -> Result<MonomialIdeal, CliError> {
        if expr != "-" {
            return Ok(parse_ideal(expr)?);
        }
        if self.stdin_used {
            return Err(usage("only one ideal may be read from stdin"));
        }
        self.stdin_used = true;
        let mut buf = String::new();
        self.stdin
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("reading stdin: {e}")))?;
        Ok(parse_ideal(&buf)?)
    }
}

fn policy(cli: &Cli) -> CompletenessPolicy {
    if cli.autoclose {
        CompletenessPolicy::Autoclose
    } else {
        CompletenessPolicy::Strict
    }
}

fn admit(
    report: &mut Report,
    name: &str,
    ideal: MonomialIdeal,
    policy: CompletenessPolicy,
) -> Result<CompleteIdeal, CliError> {
    report.ideals.insert(name.to_string(), ideal.clone());
    let admitted = CompleteIdeal::admit(ideal, policy)?;
    if admitted.closed {
        report.warnings.push(match name {
            "i" => "input not complete; closed".to_string(),
            other => format!("input -{other} not complete; closed"),
        });
    }
    Ok(admitted.ideal)
}

fn polynomial_result(report: &mut Report, p: BhattacharyaPolynomial) {
    report.text = format!("{p}\n");
    report.result = serde_json::to_value(p).expect("serializable");
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let mut inputs = Inputs { stdin, stdin_used: false };
    let policy = policy(cli);
    let report = match &cli.command {
        Command::Closure(a) => {
            let mut r = Report::new("closure");
            let i = inputs.read(&a.i)?;
            r.ideals.insert("i".into(), i.clone());
            let closure = i.integral_closure()?;
            r.text = format!("{closure}\n");
            r.result = json!({ "generators": closure, "rendered": closure.to_string() });
            r
        }
        Command::Factor(a) => {
            let mut r = Report::new("factor");
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            let f = zariski_factor(&i);
            r.text = format!("{f}\n");
            r.result = json!({ "blocks": f, "rendered": f.to_string() });
            r
        }
        Command::Colength(a) => {
            let mut r = Report::new("colength");
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            let len = colength(&i)?;
            r.text = format!("{len}\n");
            r.result = json!({ "colength": len });
            r
        }
        Command::Bhatt(a) => {
            let mut r = Report::new("bhatt");
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            let j = admit(&mut r, "j", inputs.read(&a.j)?, policy)?;
            polynomial_result(&mut r, bhattacharya_polynomial(&i, &j)?);
            r
        }
        Command::Maxideal(a) => {
            let mut r = Report::new("maxideal");
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            polynomial_result(&mut r, with_maximal_ideal(&i)?);
            r
        }
        Command::Hilbert(a) | Command::Fiber(a) => {
            let hilbert = matches!(cli.command, Command::Hilbert(_));
            let mut r = Report::new(if hilbert { "hilbert" } else { "fiber" });
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            let values = (0..=u64::from(a.max_m))
                .map(|m| if hilbert { hilbert_function(&i, m) } else { fiber_function(&i, m) })
                .collect::<Result<Vec<i64>, Error>>()?;
            r.text = values.iter().enumerate().map(|(m, v)| format!("m={m}: {v}\n")).collect();
            r.result = json!({ "values": values });
            r
        }
        Command::Gens(a) => {
            let mut r = Report::new("gens");
            let i = admit(&mut r, "i", inputs.read(&a.i)?, policy)?;
            let v = min_generators(&i)?;
            r.text = format!("{v}\n");
            r.result = json!({ "min_generators": v });
            r
        }
        Command::Verify(a) => verify(a, &mut inputs, policy)?,
    };
    Ok(report)
}

#[derive(Serialize)]
struct Cell {
    m: u32,
    n: u32,
    closed_form: i64,
    brute: u64,
    pass: bool,
}

fn verify(a: &Verify, inputs: &mut Inputs<'_>, policy: CompletenessPolicy) -> Result<Report, CliError> {
    let mut r = Report::new("verify");
    let mut pairs: Vec<(CompleteIdeal, CompleteIdeal)> = Vec::new();
    match (a.random, &a.i) {
        (Some(count), _) => {
            if a.max_exponent < 1 {
                return Err(usage("--max-exponent must be at least 1"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            for _ in 0..count {
                let i = random_complete_ideal(&mut rng, a.max_exponent)?;
                let j = random_complete_ideal(&mut rng, a.max_exponent)?;
                pairs.push((i, j));
            }
        }
        (None, Some(i_expr)) => {
            let i = admit(&mut r, "i", inputs.read(i_expr)?, policy)?;
            let j = match &a.j {
                Some(j_expr) => admit(&mut r, "j", inputs.read(j_expr)?, policy)?,
                None => {
                    r.ideals.insert("j".into(), MonomialIdeal::maximal());
                    CompleteIdeal::maximal()
                }
            };
            pairs.push((i, j));
        }
        (None, None) => return Err(usage("verify needs -i or --random")),
    }

    let mut all_pass = true;
    let mut text = String::new();
    let mut results = Vec::with_capacity(pairs.len());
    for (i, j) in &pairs {
        let mut p = bhattacharya_polynomial(i, j)?;
        if a.inject_fault {
            p.qm = HalfInteger::from_doubled(p.qm.doubled() + 2);
        }
        let table = brute_table(i.ideal(), j.ideal(), a.max_m, a.max_n)?;
        text.push_str(&format!("I = {i}; J = {j}; P = {p}\n"));
        let mut cells = Vec::new();
        for m in 0..=a.max_m {
            for n in 0..=a.max_n {
                let closed_form = p.evaluate(u64::from(m), u64::from(n))?;
                let brute = table.get(m, n);
                let pass = u64::try_from(closed_form) == Ok(brute);
                all_pass &= pass;
                text.push_str(&format!(
                    "{} m={m} n={n} closed={closed_form} brute={brute}\n",
                    if pass { "PASS" } else { "FAIL" }
                ));
                cells.push(Cell { m, n, closed_form, brute, pass });
            }
        }
        results.push(json!({ "i": i, "j": j, "polynomial": p, "cells": cells }));
    }
    let cell_count = pairs.len() * (a.max_m as usize + 1) * (a.max_n as usize + 1);
    text.push_str(&format!(
        "verify: {} pair(s), {cell_count} cell(s): {}\n",
        pairs.len(),
        if all_pass { "PASS" } else { "FAIL" }
    ));
    r.text = text;
    r.result = json!({ "passed": all_pass, "pairs": results });
    if !all_pass {
        r.exit_code = EXIT_VERIFY_FAILED;
    }
    Ok(r)
}

/// Full CLI entry point: parses `args`, runs, writes output, returns the
/// process exit code.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok(report) => {
            for w in &report.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let written = if cli.json {
                serde_json::to_string_pretty(&report)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                out.write_all(report.text.as_bytes())
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: writing output: {e}");
                return EXIT_INTERNAL;
            }
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
