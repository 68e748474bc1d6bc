//! Text formats used by the `clutter` command.
//!
//! A `.clt` document has one edge per line, vertices as whitespace-separated
//! non-negative integers. `#` starts a comment. The empty document is the
//! empty clutter and a document holding only `!one` is the clutter whose
//! single edge is empty.
//!
//! Semi-matchings are written as `l1 l2 : s1 s2 ...` per pair, with pairs
//! separated by newlines or `;`. A lone `-` stands for the empty family.

use std::io::{Read, Write};
use std::process::{Command, Stdio};

use clutter_core::matching::{SemiMatching, SemiMatchingPair};
use clutter_core::reductions::{parse_rational, MonotoneOracle};
use clutter_core::{Clutter, EdgeSet, Error, Result, VertexId};
use num_rational::BigRational;

const ONE_DIRECTIVE: &str = "!one";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#')
        .map_or(line, |(before, _)| before)
        .trim()
}

fn parse_vertices<'a>(line: usize, tokens: impl Iterator<Item = &'a str>) -> Result<Vec<VertexId>> {
    tokens
        .map(|t| {
            t.parse::<VertexId>()
                .map_err(|_| parse_error(line, format!("invalid vertex `{t}`")))
        })
        .collect()
}

pub fn parse_clutter(text: &str) -> Result<Clutter> {
    let mut edges = Vec::new();
    let mut one_line = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        if line == ONE_DIRECTIVE {
            one_line = Some(line_no);
            continue;
        }
        if line.starts_with('!') {
            return Err(parse_error(line_no, format!("unknown directive `{line}`")));
        }
        let vs = parse_vertices(line_no, line.split_whitespace())?;
        edges.push(EdgeSet::new(vs));
    }
    if let Some(line) = one_line {
        if !edges.is_empty() {
            return Err(parse_error(line, "`!one` cannot be combined with edges"));
        }
        return Ok(Clutter::one());
    }
    let read = edges.len();
    let h = Clutter::minimalize(edges);
    if h.len() < read {
        log::warn!(
            "dropped {} duplicate or subsumed edge(s) while loading",
            read - h.len()
        );
    }
    Ok(h)
}

fn write_vertices(out: &mut String, e: &EdgeSet) {
    let mut first = true;
    for v in e.iter() {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&v.to_string());
    }
}

pub fn serialize_clutter(h: &Clutter) -> String {
    if h.is_one() {
        return format!("{ONE_DIRECTIVE}\n");
    }
    let mut out = String::new();
    for e in h {
        write_vertices(&mut out, e);
        out.push('\n');
    }
    out
}

pub fn parse_semi_matching(text: &str) -> Result<SemiMatching> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        for item in strip_comment(raw).split(';') {
            let item = item.trim();
            if item.is_empty() || item == "-" {
                continue;
            }
            let (l, s) = item
                .split_once(':')
                .ok_or_else(|| parse_error(line_no, "expected `l1 l2 : s1 s2 ...`"))?;
            let l = parse_vertices(line_no, l.split_whitespace())?;
            let s = parse_vertices(line_no, s.split_whitespace())?;
            let pair = SemiMatchingPair::new(EdgeSet::new(l), EdgeSet::new(s))
                .map_err(|e| parse_error(line_no, e.to_string()))?;
            pairs.push(pair);
        }
    }
    SemiMatching::new(pairs)
}

fn pair_text(p: &SemiMatchingPair) -> String {
    let mut out = String::new();
    write_vertices(&mut out, p.pair());
    out.push_str(" : ");
    write_vertices(&mut out, p.edge());
    out
}

/// One pair per line; the empty family is `-`.
pub fn serialize_semi_matching(m: &SemiMatching) -> String {
    if m.is_empty() {
        return "-\n".into();
    }
    m.iter().map(|p| pair_text(p) + "\n").collect()
}

/// The whole family on one line, pairs separated by `; `.
pub fn semi_matching_line(m: &SemiMatching) -> String {
    if m.is_empty() {
        return "-".into();
    }
    m.iter().map(pair_text).collect::<Vec<_>>().join("; ")
}

/// Runs a shell command per query. The set names go to its stdin, one per
/// line; its stdout must hold a single rational cost.
pub struct CommandOracle {
    command: String,
    pub calls: usize,
}

impl CommandOracle {
    pub fn new(command: impl Into<String>) -> Self {
        CommandOracle {
            command: command.into(),
            calls: 0,
        }
    }
}

impl MonotoneOracle for CommandOracle {
    fn evaluate(&mut self, names: &[&str]) -> Result<BigRational> {
        self.calls += 1;
        let oracle_err = |m: String| Error::Oracle(format!("`{}`: {m}", self.command));
        let mut child = Command::new("sh")
            .arg("-c")
            .arg(&self.command)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .map_err(|e| oracle_err(e.to_string()))?;
        {
            let mut stdin = child.stdin.take().expect("piped stdin");
            let mut input = names.join("\n");
            input.push('\n');
            // The command may exit without reading; a broken pipe is fine.
            let _ = stdin.write_all(input.as_bytes());
        }
        let mut stdout = String::new();
        child
            .stdout
            .take()
            .expect("piped stdout")
            .read_to_string(&mut stdout)
            .map_err(|e| oracle_err(e.to_string()))?;
        let status = child.wait().map_err(|e| oracle_err(e.to_string()))?;
        if !status.success() {
            return Err(oracle_err(format!("exited with {status}")));
        }
        parse_rational(stdout.trim()).map_err(oracle_err)
    }
}
