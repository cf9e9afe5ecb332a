//! Plain-text lattice format.
//!
//! ```text
//! # comment
//! lattice 4
//! labels	0	a	b	1
//! cover 0 1
//! cover 0 2
//! cover 1 3
//! cover 2 3
//! ```
//!
//! Labels are tab-separated. Cover lines use 0-based indices and may contain
//! transitively implied pairs; the writer always emits the transitive reduction
//! in sorted order, so `write(read(write(l))) == write(l)`.

use std::fmt::Write as _;

use super::{CoverList, FiniteLattice};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice> {
    let mut size: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut covers = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim_end_matches('\r');
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("labels") {
            if size.is_none() {
                return Err(perr(line_no, "`labels` before `lattice` header"));
            }
            let rest = rest
                .strip_prefix('\t')
                .or_else(|| rest.strip_prefix(' '))
                .unwrap_or(rest);
            labels = Some(if rest.is_empty() {
                Vec::new()
            } else {
                rest.split('\t').map(str::to_string).collect()
            });
            continue;
        }
        let mut tok = trimmed.split_whitespace();
        match tok.next() {
            Some("lattice") => {
                if size.is_some() {
                    return Err(perr(line_no, "duplicate `lattice` header"));
                }
                let n = tok
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| perr(line_no, "expected `lattice <size>`"))?;
                if tok.next().is_some() {
                    return Err(perr(line_no, "trailing tokens after size"));
                }
                size = Some(n);
            }
            Some("cover") => {
                if size.is_none() {
                    return Err(perr(line_no, "`cover` before `lattice` header"));
                }
                let mut num = || {
                    tok.next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| perr(line_no, "expected `cover <lo> <up>`"))
                };
                let lo = num()?;
                let up = num()?;
                covers.push((lo, up));
            }
            Some(other) => return Err(perr(line_no, format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    let size = size.ok_or_else(|| perr(0, "missing `lattice <size>` header"))?;
    let lattice = FiniteLattice::from_cover_relations(&CoverList { size, covers })?;
    match labels {
        Some(l) => lattice.with_labels(l),
        None => Ok(lattice),
    }
}

pub fn write_lattice(l: &FiniteLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lattice {}", l.size());
    if let Some(labels) = l.labels() {
        let _ = writeln!(out, "labels\t{}", labels.join("\t"));
    }
    for (lo, up) in l.cover_pairs() {
        let _ = writeln!(out, "cover {lo} {up}");
    }
    out
}
