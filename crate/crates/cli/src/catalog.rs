//! Batch regularity catalog over a graph6 stream, appended to JSONL.

use std::collections::HashSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use gbei::graph::parse_graph6;
use gbei::homology::{homological_summary, HomologicalSummary, OracleConfig};
use gbei::reg::{classify_reg2, reg, Classification, Mode, RegularityResult};

#[derive(Debug, Clone, Default, Serialize)]
pub struct Timings {
    pub reg_ms: u64,
    pub classify_ms: u64,
    pub summary_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogRecord {
    pub graph6: String,
    pub m: usize,
    pub reg: Option<RegularityResult>,
    pub classification: Option<Classification>,
    pub summary: Option<HomologicalSummary>,
    pub timings: Timings,
    pub errors: Vec<String>,
}

#[derive(Deserialize)]
struct Key {
    graph6: String,
    m: usize,
}

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct CatalogCounts {
    pub written: usize,
    pub skipped: usize,
    pub with_errors: usize,
}

pub struct CatalogOptions {
    pub rows: Vec<usize>,
    pub mode: Mode,
    pub summary: bool,
    pub resume: bool,
    pub cfg: OracleConfig,
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn record(code: &str, m: usize, opts: &CatalogOptions) -> CatalogRecord {
    let mut rec = CatalogRecord {
        graph6: code.to_string(),
        m,
        reg: None,
        classification: None,
        summary: None,
        timings: Timings::default(),
        errors: Vec::new(),
    };
    let g = match parse_graph6(code) {
        Ok(g) => g,
        Err(e) => {
            rec.errors.push(format!("graph6: {e}"));
            return rec;
        }
    };
    let t = Instant::now();
    match reg(&g, m, opts.mode, &opts.cfg) {
        Ok(r) => rec.reg = Some(r),
        Err(e) => rec.errors.push(format!("reg: {e}")),
    }
    rec.timings.reg_ms = millis(t);
    let t = Instant::now();
    // classifiers only apply under their hypotheses; elsewhere the field stays null
    if m >= 3 && g.n() >= 3 && g.isolated_vertices().is_empty() {
        match classify_reg2(&g, m) {
            Ok(c) => rec.classification = Some(c),
            Err(e) => rec.errors.push(format!("classify: {e}")),
        }
    }
    rec.timings.classify_ms = millis(t);
    if opts.summary {
        let t = Instant::now();
        match homological_summary(&g, m, &opts.cfg) {
            Ok(s) => rec.summary = Some(s),
            Err(e) => rec.errors.push(format!("summary: {e}")),
        }
        rec.timings.summary_ms = millis(t);
    }
    rec
}

/// Keys already in `path`; a torn final line is cut off so appends stay valid.
fn persisted_keys(path: &Path) -> Result<HashSet<(String, usize)>> {
    let mut keys = HashSet::new();
    let Ok(mut file) = OpenOptions::new().read(true).write(true).open(path) else {
        return Ok(keys);
    };
    let mut text = String::new();
    file.read_to_string(&mut text)
        .with_context(|| format!("reading {}", path.display()))?;
    let complete = text.rfind('\n').map_or(0, |i| i + 1);
    if complete < text.len() {
        file.set_len(complete as u64)?;
        file.seek(SeekFrom::End(0))?;
    }
    for line in text[..complete].lines().filter(|l| !l.trim().is_empty()) {
        if let Ok(k) = serde_json::from_str::<Key>(line) {
            keys.insert((k.graph6, k.m));
        }
    }
    Ok(keys)
}

fn graph6_lines(input: impl BufRead) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line.context("reading input")?;
        let code = line.trim().trim_start_matches(">>graph6<<").trim();
        if !code.is_empty() {
            out.push(code.to_string());
        }
    }
    Ok(out)
}

/// Processes every `(graph, m)` pair in input order, appending records to
/// `output`.
pub fn run(input: Box<dyn BufRead>, output: &Path, opts: &CatalogOptions) -> Result<CatalogCounts> {
    let done = if opts.resume {
        persisted_keys(output)?
    } else {
        HashSet::new()
    };
    let mut file = if opts.resume {
        OpenOptions::new().create(true).append(true).open(output)
    } else {
        File::create(output)
    }
    .with_context(|| format!("opening {}", output.display()))?;

    let mut counts = CatalogCounts::default();
    let mut todo = Vec::new();
    for code in graph6_lines(input)? {
        for &m in &opts.rows {
            if done.contains(&(code.clone(), m)) {
                counts.skipped += 1;
            } else {
                todo.push((code.clone(), m));
            }
        }
    }
    let chunk = 4 * rayon::current_num_threads().max(1);
    for batch in todo.chunks(chunk) {
        let records: Vec<CatalogRecord> = batch.par_iter().map(|(code, m)| record(code, *m, opts)).collect();
        for rec in records {
            if !rec.errors.is_empty() {
                counts.with_errors += 1;
            }
            serde_json::to_writer(&mut file, &rec)?;
            file.write_all(b"\n")?;
            counts.written += 1;
        }
        file.flush()?;
    }
    Ok(counts)
}

pub fn open_input(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(std::io::stdin())));
    }
    let f = File::open(path).with_context(|| format!("opening {path}"))?;
    Ok(Box::new(BufReader::new(f)))
}
