//! Interval file ingestion: plain `start end` pairs or BED3 records.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coverage::{Interval, IntervalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Bed3,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Format::Plain),
            "bed3" | "bed" => Ok(Format::Bed3),
            other => Err(format!("unknown format '{other}' (expected plain or bed3)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::Bed3 => "bed3",
        })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub chrom: Option<String>,
    pub interval: Interval,
    /// 1-based line number in the input
    pub line_no: usize,
    /// original line, without trailing whitespace
    pub raw: String,
}

/// One independently solved instance: a chromosome (or the whole file, for
/// plain input) and the records belonging to it in input order.
#[derive(Debug, Clone)]
pub struct Group {
    pub chrom: Option<String>,
    pub records: Vec<usize>,
    pub set: IntervalSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub format: Format,
    pub records: Vec<Record>,
}

fn is_skipped(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#') || t.starts_with("track ") || t.starts_with("browser ")
}

fn detect(text: &str) -> Format {
    let Some(line) = text.lines().find(|l| !is_skipped(l)) else {
        return Format::Plain;
    };
    if line.split_whitespace().count() >= 3 {
        Format::Bed3
    } else {
        Format::Plain
    }
}

fn coord(field: &str, what: &str, line: usize) -> Result<u64, ParseError> {
    field.parse::<u64>().map_err(|_| ParseError {
        line,
        message: format!("{what} '{field}' is not a non-negative integer"),
    })
}

impl InstanceFile {
    /// Parses `text`, detecting the format when `format` is `None`.
    pub fn parse(text: &str, format: Option<Format>) -> Result<Self, ParseError> {
        let format = format.unwrap_or_else(|| detect(text));
        let mut records = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            if is_skipped(line) {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let (chrom, start, end) = match format {
                Format::Plain => {
                    if fields.len() != 2 {
                        return Err(ParseError {
                            line: line_no,
                            message: format!("expected 2 fields (start end), found {}", fields.len()),
                        });
                    }
                    (None, fields[0], fields[1])
                }
                Format::Bed3 => {
                    if fields.len() < 3 {
                        return Err(ParseError {
                            line: line_no,
                            message: format!("expected at least 3 fields (chrom start end), found {}", fields.len()),
                        });
                    }
                    (Some(fields[0].to_string()), fields[1], fields[2])
                }
            };
            let start = coord(start, "start", line_no)?;
            let end = coord(end, "end", line_no)?;
            let interval = Interval::new(start, end).map_err(|_| ParseError {
                line: line_no,
                message: format!("start {start} must be less than end {end}"),
            })?;
            records.push(Record {
                chrom,
                interval,
                line_no,
                raw: line.trim_end().to_string(),
            });
        }
        Ok(Self { format, records })
    }

    /// Splits the records into per-chromosome instances ordered by name.
    pub fn groups(&self) -> Vec<Group> {
        let mut by_chrom: BTreeMap<Option<&str>, Vec<usize>> = BTreeMap::new();
        for (i, r) in self.records.iter().enumerate() {
            by_chrom.entry(r.chrom.as_deref()).or_default().push(i);
        }
        by_chrom
            .into_iter()
            .map(|(chrom, records)| {
                let set = records.iter().map(|&i| self.records[i].interval).collect();
                Group {
                    chrom: chrom.map(str::to_string),
                    records,
                    set,
                }
            })
            .collect()
    }

    /// Writes the given records, one per line, as they appeared in the input.
    pub fn emit<'a, W, I>(&self, out: &mut W, records: I) -> std::io::Result<()>
    where
        W: std::io::Write,
        I: IntoIterator<Item = &'a usize>,
    {
        for &i in records {
            writeln!(out, "{}", self.records[i].raw)?;
        }
        Ok(())
    }
}
