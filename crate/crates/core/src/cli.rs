//! Command-line surface. Exit codes: 0 success, 1 check violation, 2 usage
//! error, 3 parse or validation error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::field::PrimeField;
use crate::filtration::{Grade, MultiFiltration};
use crate::generators::{build_example, random_filtration, ExampleName, RandomSpec};
use crate::io::{self, IoError, TableEntry};
use crate::koszul::{BettiTable, PersistenceModule};
use crate::morse::{critical_counts, full_report};
use crate::spectral::{compute_pages, DoubleComplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "multimorse", version, about = "Morse inequalities for multi-filtered cell complexes")]
pub struct Cli {
    /// Coefficient field characteristic; overrides the file header.
    #[arg(long, global = true)]
    pub field: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Suppress reports; only the exit code is meaningful.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check incidence, boundary-squared and filtration monotonicity.
    Validate { file: String },
    /// Multigraded Betti numbers at every grid grade.
    Betti {
        file: String,
        /// Semicolon-separated grades, e.g. "1,0;1,1".
        #[arg(long)]
        grades: Option<String>,
    },
    /// Critical counts at every grid grade.
    Critical {
        file: String,
        #[arg(long)]
        grades: Option<String>,
    },
    /// Spectral sequence page dimensions and differential ranks at one grade.
    Pages {
        file: String,
        #[arg(long)]
        grade: String,
    },
    /// Every inequality and identity at every grade.
    Check {
        file: String,
        /// Stop at the first violating grade and attach a counterexample.
        #[arg(long)]
        strict: bool,
    },
    /// Emit a named example filtration.
    Example {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a seeded random filtration.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        params: usize,
        #[arg(long)]
        cells: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        grade_max: i64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::new(EXIT_INVALID, e.to_string())
    }
}

impl From<crate::error::Error> for Failure {
    fn from(e: crate::error::Error) -> Self {
        Failure::new(EXIT_VIOLATION, e.to_string())
    }
}

struct Context<'a> {
    field: Option<PrimeField>,
    format: Format,
    quiet: bool,
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Context<'_> {
    fn read(&mut self, file: &str) -> Result<String, Failure> {
        let mut text = String::new();
        if file == "-" {
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::new(EXIT_INVALID, format!("stdin: {e}")))?;
        } else {
            text = std::fs::read_to_string(file).map_err(|e| Failure::new(EXIT_INVALID, format!("{file}: {e}")))?;
        }
        Ok(text)
    }

    fn load(&mut self, file: &str) -> Result<MultiFiltration, Failure> {
        let text = self.read(file)?;
        Ok(io::parse(&text, self.field)?)
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        if self.quiet {
            return Ok(());
        }
        self.write(text)
    }

    fn write(&mut self, text: &str) -> Result<(), Failure> {
        self.stdout
            .write_all(text.as_bytes())
            .and_then(|_| if text.ends_with('\n') { Ok(()) } else { self.stdout.write_all(b"\n") })
            .map_err(|e| Failure::new(EXIT_INVALID, format!("write: {e}")))
    }

    fn save(&mut self, text: &str, output: Option<PathBuf>) -> Result<(), Failure> {
        match output {
            Some(path) => std::fs::write(&path, text)
                .map_err(|e| Failure::new(EXIT_INVALID, format!("{}: {e}", path.display()))),
            None => self.write(text),
        }
    }

    fn table(&mut self, kind: &str, filt: &MultiFiltration, rows: &[TableEntry]) -> Result<(), Failure> {
        let text = match self.format {
            Format::Json => io::table_json(kind, filt.n(), filt.field().characteristic(), rows),
            Format::Csv => io::table_csv(filt.n(), rows),
        };
        self.emit(&text)
    }
}

fn parse_grades(spec: &str, n: usize) -> Result<Vec<Grade>, Failure> {
    spec.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let g: Grade = s.trim().parse().map_err(|_| Failure::new(EXIT_USAGE, format!("invalid grade '{s}'")))?;
            if g.n() != n {
                return Err(Failure::new(EXIT_USAGE, format!("grade '{s}' needs {n} coordinates")));
            }
            Ok(g)
        })
        .collect()
}

fn grades_for(filt: &MultiFiltration, spec: Option<&str>) -> Result<Vec<Grade>, Failure> {
    match spec {
        Some(s) => parse_grades(s, filt.n()),
        None => filt.evaluation_grid().map_err(|e| Failure::new(EXIT_INVALID, e.to_string())),
    }
}

fn execute(command: Command, ctx: &mut Context<'_>) -> Result<i32, Failure> {
    match command {
        Command::Validate { file } => {
            let text = ctx.read(&file)?;
            let doc = io::parse_document(&text)?;
            match io::to_filtration(&doc, ctx.field) {
                Ok((filt, added)) => {
                    let out = json!({
                        "valid": true,
                        "params": filt.n(),
                        "field": filt.field().characteristic(),
                        "cells": filt.complex().len(),
                        "dim": filt.complex().dim(),
                        "added_faces": added,
                    });
                    ctx.emit(&serde_json::to_string_pretty(&out).expect("value serializes"))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    let out = json!({ "valid": false, "message": e.to_string() });
                    ctx.emit(&serde_json::to_string_pretty(&out).expect("value serializes"))?;
                    Ok(EXIT_VIOLATION)
                }
            }
        }
        Command::Betti { file, grades } => {
            let filt = ctx.load(&file)?;
            let grades = grades_for(&filt, grades.as_deref())?;
            let module = PersistenceModule::new(&filt)?;
            let d = filt.complex().dim();
            let mut rows = Vec::new();
            if grades.iter().all(|g| filt.in_grid(g)) {
                let table = BettiTable::compute(&module)?;
                for u in &grades {
                    for q in 0..=d {
                        for p in 0..=filt.n() {
                            let value = table.get(p, q as i64, u);
                            rows.push(TableEntry { grade: u.to_string(), q, p: Some(p), value });
                        }
                    }
                }
            } else {
                for u in &grades {
                    for q in 0..=d {
                        for (p, value) in module.betti_row(u, q)?.into_iter().enumerate() {
                            rows.push(TableEntry { grade: u.to_string(), q, p: Some(p), value });
                        }
                    }
                }
            }
            ctx.table("betti", &filt, &rows)?;
            Ok(EXIT_OK)
        }
        Command::Critical { file, grades } => {
            let filt = ctx.load(&file)?;
            let grades = grades_for(&filt, grades.as_deref())?;
            let mut rows = Vec::new();
            for u in &grades {
                for (q, value) in critical_counts(&filt, u)?.into_iter().enumerate() {
                    rows.push(TableEntry { grade: u.to_string(), q, p: None, value });
                }
            }
            ctx.table("critical", &filt, &rows)?;
            Ok(EXIT_OK)
        }
        Command::Pages { file, grade } => {
            let filt = ctx.load(&file)?;
            let u = parse_grades(&grade, filt.n())?
                .into_iter()
                .next()
                .ok_or_else(|| Failure::new(EXIT_USAGE, "missing grade"))?;
            let pages = compute_pages(&DoubleComplex::build(&filt, &u)?);
            let text = match ctx.format {
                Format::Json => {
                    let out = json!({
                        "grade": u.to_string(),
                        "n": pages.n,
                        "top_q": pages.top_q,
                        "dims": pages.dims,
                        "ranks": pages.ranks,
                        "total_homology": pages.total_homology,
                    });
                    serde_json::to_string_pretty(&out).expect("value serializes")
                }
                Format::Csv => {
                    let mut s = String::from("r,p,q,dim,rank\n");
                    for r in 0..=pages.n {
                        for p in 0..pages.n {
                            for q in 0..=pages.top_q {
                                let (pi, qi) = (p as i64, q as i64);
                                s.push_str(&format!("{r},{p},{q},{},{}\n", pages.dim(r, pi, qi), pages.rank(r, pi, qi)));
                            }
                        }
                    }
                    s
                }
            };
            ctx.emit(&text)?;
            Ok(EXIT_OK)
        }
        Command::Check { file, strict } => {
            let filt = ctx.load(&file)?;
            let report = full_report(&filt, strict)?;
            let text = match ctx.format {
                Format::Json => report.to_json(),
                Format::Csv => {
                    let mut s = String::from("grade,check,q,lhs,rhs\n");
                    for v in &report.verdict.violations {
                        let q = v.q.map(|q| q.to_string()).unwrap_or_default();
                        s.push_str(&format!("\"{}\",{},{q},{},{}\n", v.grade, v.check, v.lhs, v.rhs));
                    }
                    s
                }
            };
            ctx.emit(&text)?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Example { name, output } => {
            let name: ExampleName = name.parse().map_err(|e: crate::error::Error| Failure::new(EXIT_USAGE, e.to_string()))?;
            let field = ctx.field.unwrap_or_else(PrimeField::binary);
            let example = build_example(name, field)?;
            ctx.save(&io::write_portable(&example.filtration), output)?;
            Ok(EXIT_OK)
        }
        Command::Random { seed, params, cells, dim, grade_max, output } => {
            let spec = RandomSpec { seed, n: params, max_cells: cells, max_dim: dim, grade_max };
            let field = ctx.field.unwrap_or_else(PrimeField::binary);
            let filt = random_filtration(&spec, field).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
            ctx.save(&io::write_portable(&filt), output)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = stdout.write_all(rendered.as_bytes());
            } else {
                let _ = stderr.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let field = match cli.field.map(PrimeField::new).transpose() {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(stderr, "error: --field: {e}");
            return EXIT_USAGE;
        }
    };
    let quiet = cli.quiet;
    let mut ctx = Context { field, format: cli.format, quiet, stdin, stdout };
    match execute(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            if !quiet {
                let _ = writeln!(stderr, "error: {}", f.message);
            }
            f.code
        }
    }
}
