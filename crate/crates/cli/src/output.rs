use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use tep_core::record::{CoverageRecord, SolutionRecord, TriadRecord, TriadSearchRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON record per line.
    Json,
    /// Comma-separated rows; list fields are separated by `;`.
    Csv,
    /// Human-readable lines with the power sums beside each solution.
    Pretty,
}

/// Writes records in one format, printing the CSV header before the first
/// row of each record kind.
pub struct Emitter {
    out: Box<dyn Write>,
    format: Format,
    header: Option<&'static str>,
}

fn join(v: &[BigInt], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

impl Emitter {
    pub fn new(format: Format, path: Option<&Path>) -> io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        Ok(Emitter {
            out,
            format,
            header: None,
        })
    }

    fn json<T: Serialize>(&mut self, rec: &T) -> io::Result<()> {
        serde_json::to_writer(&mut self.out, rec)?;
        writeln!(self.out)
    }

    fn csv_row(&mut self, header: &'static str, row: String) -> io::Result<()> {
        if self.header != Some(header) {
            writeln!(self.out, "{header}")?;
            self.header = Some(header);
        }
        writeln!(self.out, "{row}")
    }

    pub fn solution(&mut self, rec: &SolutionRecord) -> io::Result<()> {
        let exponents = rec
            .exponents
            .clone()
            .unwrap_or_else(|| (1..=rec.k).collect())
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>();
        match self.format {
            Format::Json => self.json(rec),
            Format::Csv => self.csv_row(
                "k,exponents,x,y,sigma,valid,trivial",
                format!(
                    "{},{},{},{},{},{},{}",
                    rec.k,
                    exponents.join(";"),
                    join(&rec.x, ";"),
                    join(&rec.y, ";"),
                    join(&rec.sigma, ";"),
                    rec.valid,
                    rec.trivial
                ),
            ),
            Format::Pretty => {
                let status = match (rec.valid, rec.trivial) {
                    (false, _) => "INVALID",
                    (true, true) => "valid (trivial)",
                    (true, false) => "valid",
                };
                let sigma = exponents
                    .iter()
                    .zip(&rec.sigma)
                    .map(|(j, s)| format!("s{j}={s}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(
                    self.out,
                    "({};{})  {sigma}  {status}",
                    join(&rec.x, ","),
                    join(&rec.y, ",")
                )
            }
        }
    }

    pub fn triads(&mut self, rec: &TriadRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(rec),
            Format::Csv => self.csv_row(
                "X,Y,sum_squares,product,valid",
                format!(
                    "{},{},{},{},{}",
                    join(&rec.x, ";"),
                    join(&rec.y, ";"),
                    join(&rec.sum_squares, ";"),
                    join(&rec.product, ";"),
                    rec.valid
                ),
            ),
            Format::Pretty => writeln!(
                self.out,
                "X=({}) Y=({})  squares {}  products {}  {}",
                join(&rec.x, ","),
                join(&rec.y, ","),
                join(&rec.sum_squares, "/"),
                join(&rec.product, "/"),
                if rec.valid { "valid" } else { "INVALID" }
            ),
        }
    }

    pub fn triad_search(&mut self, rec: &TriadSearchRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(rec),
            Format::Csv => self.csv_row(
                "u,v,sum,product",
                format!(
                    "{},{},{},{}",
                    join(&rec.u, ";"),
                    join(&rec.v, ";"),
                    rec.sum,
                    rec.product
                ),
            ),
            Format::Pretty => writeln!(
                self.out,
                "{{{}}} {{{}}}  sum {}  product {}",
                join(&rec.u, ","),
                join(&rec.v, ","),
                rec.sum,
                rec.product
            ),
        }
    }

    pub fn coverage(&mut self, rec: &CoverageRecord) -> io::Result<()> {
        match self.format {
            Format::Json => self.json(rec),
            Format::Csv => self.csv_row(
                "height,param_bound,found,covered,coverage,vacuous",
                format!(
                    "{},{},{},{},{},{}",
                    rec.height,
                    rec.param_bound.map(|b| b.to_string()).unwrap_or_default(),
                    rec.found,
                    rec.covered,
                    rec.coverage,
                    rec.vacuous
                ),
            ),
            Format::Pretty => {
                let bound = rec
                    .param_bound
                    .map(|b| format!(" B={b}"))
                    .unwrap_or_default();
                let vacuous = if rec.vacuous { " (vacuous)" } else { "" };
                writeln!(
                    self.out,
                    "H={}{bound}: {}/{} covered, coverage {}{vacuous}",
                    rec.height, rec.covered, rec.found, rec.coverage
                )?;
                for c in &rec.counterexamples {
                    writeln!(
                        self.out,
                        "  uncovered ({};{})",
                        join(&c.x, ","),
                        join(&c.y, ",")
                    )?;
                }
                Ok(())
            }
        }
    }

    pub fn line(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.out, "{text}")
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
