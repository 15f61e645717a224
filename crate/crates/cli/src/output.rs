use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use clap::ValueEnum;
use serde_json::Value;

use sylowrestrict::restriction::VerificationOutcome;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One command result in all three renderings.
pub struct Record {
    json: Value,
    text: String,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Record {
    pub fn new(json: Value) -> Self {
        Record {
            json,
            text: String::new(),
            header: Vec::new(),
            rows: Vec::new(),
        }
    }

    pub fn text(mut self, text: String) -> Self {
        self.text = text;
        self
    }

    pub fn csv<H: AsRef<str>>(
        mut self,
        header: impl IntoIterator<Item = H>,
        rows: Vec<Vec<String>>,
    ) -> Self {
        self.header = header.into_iter().map(|h| h.as_ref().to_string()).collect();
        self.rows = rows;
        self
    }
}

/// Stdout or a file.
pub struct Sink {
    out: Box<dyn Write>,
}

impl Sink {
    pub fn open(path: Option<&Path>) -> io::Result<Self> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(io::stdout().lock()),
        };
        Ok(Sink { out })
    }

    fn csv_lines(&mut self, rows: impl IntoIterator<Item = Vec<String>>) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(&mut self.out);
        for row in rows {
            w.write_record(&row).map_err(io::Error::other)?;
        }
        w.flush()
    }

    pub fn single(&mut self, record: &Record, format: Format) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut self.out, &record.json)
                    .map_err(io::Error::other)?;
                writeln!(self.out)?;
            }
            Format::Text => writeln!(self.out, "{}", record.text)?,
            Format::Csv => {
                let header = record.header.clone();
                self.csv_lines(std::iter::once(header).chain(record.rows.iter().cloned()))?;
            }
        }
        self.out.flush()
    }

    pub fn begin_outcomes(&mut self, format: Format) -> io::Result<()> {
        if format == Format::Csv {
            let header = [
                "statement",
                "params",
                "pass",
                "vacuous",
                "cases",
                "counterexamples",
                "ms",
            ];
            self.csv_lines([header.iter().map(|s| s.to_string()).collect()])?;
        }
        Ok(())
    }

    /// Writes one outcome as a JSON line, a CSV row or a text block.
    pub fn outcome(&mut self, o: &VerificationOutcome, format: Format) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, o).map_err(io::Error::other)?;
                writeln!(self.out)?;
            }
            Format::Csv => self.csv_lines([vec![
                o.statement.clone(),
                o.params.to_string(),
                o.pass.to_string(),
                o.vacuous.to_string(),
                o.cases.to_string(),
                o.counterexamples.len().to_string(),
                o.ms.to_string(),
            ]])?,
            Format::Text => {
                let verdict = if o.pass { "PASS" } else { "FAIL" };
                let vacuous = if o.vacuous { " (vacuous)" } else { "" };
                writeln!(
                    self.out,
                    "{verdict} {} {}{vacuous}: {} cases, {} ms",
                    o.statement, o.params, o.cases, o.ms
                )?;
                for c in &o.counterexamples {
                    writeln!(self.out, "  counterexample {c}")?;
                }
                for n in &o.notes {
                    writeln!(self.out, "  {n}")?;
                }
            }
        }
        self.out.flush()
    }
}
