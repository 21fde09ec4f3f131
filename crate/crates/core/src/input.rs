//! Text formats for matroids.
//!
//! * matrix: optional `q <prime>` line (default 2), then one row of
//!   whitespace-separated residues per line;
//! * uniform: `uniform <n> <k>`;
//! * rank table: `n <size> [ranktable]`, then `<subset> <rank>` lines (also
//!   `<subset> -> <rank>`), one for every subset, `-` naming the empty set;
//! * bases: `n <size> [bases]`, then one basis per line.
//!
//! Lines starting with `%` and blank lines are ignored everywhere. The kind
//! is detected from the first token.

use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldMatrix;
use crate::matroid::Matroid;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Matrix,
    Uniform,
    RankTable,
    Bases,
}

impl fmt::Display for InputKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputKind::Matrix => "matrix",
            InputKind::Uniform => "uniform",
            InputKind::RankTable => "ranktable",
            InputKind::Bases => "bases",
        })
    }
}

/// A parsed matroid description.
#[derive(Clone, Debug)]
pub enum Payload {
    Matrix(FieldMatrix),
    Uniform { n: usize, k: usize },
    RankTable { n: usize, ranks: Vec<usize> },
    Bases { n: usize, bases: Vec<ElementSet> },
}

/// A matroid together with the description it was built from.
#[derive(Clone, Debug)]
pub struct InputSpec {
    pub kind: InputKind,
    /// File path, or the inline text.
    pub source: String,
    pub payload: Payload,
}

impl InputSpec {
    pub fn matroid(&self) -> Result<Matroid> {
        match &self.payload {
            Payload::Matrix(g) => Ok(Matroid::linear(g.clone())),
            Payload::Uniform { n, k } => Matroid::uniform(*n, *k),
            Payload::RankTable { n, ranks } => Matroid::from_rank_table(*n, ranks.clone()),
            Payload::Bases { n, bases } => Matroid::from_bases(*n, bases.clone()),
        }
    }

    /// The description in its own text format; parsing it back gives an
    /// equal payload.
    pub fn to_text(&self) -> String {
        match &self.payload {
            Payload::Matrix(g) => g.to_text(),
            Payload::Uniform { n, k } => format!("uniform {n} {k}\n"),
            Payload::RankTable { n, ranks } => {
                let mut out = format!("n {n} ranktable\n");
                for (bits, r) in ranks.iter().enumerate() {
                    out.push_str(&format!("{} {r}\n", set_token(ElementSet::from_bits(bits as u64))));
                }
                out
            }
            Payload::Bases { n, bases } => {
                let mut out = format!("n {n} bases\n");
                for &b in bases {
                    out.push_str(&set_token(b));
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn set_token(s: ElementSet) -> String {
    if s.is_empty() {
        "-".into()
    } else {
        s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Reads a path, or treats the argument as inline text when it names no file
/// and looks like a description (for example `uniform 6 3`).
pub fn load(arg: &str) -> Result<InputSpec> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?;
        return parse(&text, arg);
    }
    if arg.contains(char::is_whitespace) {
        return parse(arg, arg);
    }
    Err(Error::Parse(format!("no such input file: {arg}")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('%'))
}

/// Parses any supported format, detected from the first token.
pub fn parse(text: &str, source: &str) -> Result<InputSpec> {
    let first = content_lines(text)
        .next()
        .and_then(|(_, l)| l.split_whitespace().next())
        .ok_or_else(|| Error::Parse("empty input".into()))?;
    let payload = match first {
        "uniform" => parse_uniform(text)?,
        "n" => parse_explicit(text)?,
        t if t == "q" || t.chars().all(|c| c.is_ascii_digit()) => Payload::Matrix(parse_matrix(text)?),
        t => return Err(Error::Parse(format!("cannot detect the input format from '{t}'"))),
    };
    let kind = match payload {
        Payload::Matrix(_) => InputKind::Matrix,
        Payload::Uniform { .. } => InputKind::Uniform,
        Payload::RankTable { .. } => InputKind::RankTable,
        Payload::Bases { .. } => InputKind::Bases,
    };
    let spec = InputSpec {
        kind,
        source: source.to_string(),
        payload,
    };
    spec.matroid()?;
    Ok(spec)
}

fn number<T: std::str::FromStr>(token: &str, line: usize) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: '{token}' is not a number")))
}

/// The matrix format.
pub fn parse_matrix(text: &str) -> Result<FieldMatrix> {
    let mut q = 2;
    let mut rows = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "q" {
            if !rows.is_empty() || tokens.len() != 2 {
                return Err(Error::Parse(format!("line {line}: 'q <prime>' must come first, alone")));
            }
            q = number(tokens[1], line)?;
            continue;
        }
        rows.push(tokens.iter().map(|t| number(t, line)).collect::<Result<Vec<u32>>>()?);
    }
    FieldMatrix::new(q, rows)
}

fn parse_uniform(text: &str) -> Result<Payload> {
    let mut lines = content_lines(text);
    let (line, content) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let tokens: Vec<&str> = content.split_whitespace().collect();
    if tokens.len() != 3 || lines.next().is_some() {
        return Err(Error::Parse(format!("line {line}: expected 'uniform <n> <k>' alone")));
    }
    Ok(Payload::Uniform {
        n: number(tokens[1], line)?,
        k: number(tokens[2], line)?,
    })
}

fn parse_set(token: &str, line: usize) -> Result<ElementSet> {
    token
        .parse()
        .map_err(|e: Error| Error::Parse(format!("line {line}: {e}")))
}

fn parse_explicit(text: &str) -> Result<Payload> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if !(2..=3).contains(&tokens.len()) {
        return Err(Error::Parse(format!("line {line}: expected 'n <size> [bases|ranktable]'")));
    }
    let n: usize = number(tokens[1], line)?;
    let body: Vec<(usize, Vec<&str>)> = lines
        .map(|(l, c)| (l, c.split_whitespace().filter(|&t| t != "->").collect()))
        .collect();
    let is_table = match tokens.get(2) {
        Some(&"ranktable") => true,
        Some(&"bases") => false,
        Some(other) => return Err(Error::Parse(format!("line {line}: unknown kind '{other}'"))),
        None => body.iter().any(|(_, t)| t.len() == 2),
    };
    let ground = ElementSet::full(n.min(crate::set::MAX_LABEL));
    if is_table {
        if n > crate::matroid::MAX_EXPLICIT_N {
            return Err(Error::Parse(format!("rank tables are limited to n <= {}", crate::matroid::MAX_EXPLICIT_N)));
        }
        let mut ranks = vec![None; 1 << n];
        for (l, t) in &body {
            if t.len() != 2 {
                return Err(Error::Parse(format!("line {l}: expected '<subset> <rank>'")));
            }
            let set = parse_set(t[0], *l)?;
            if !set.is_subset(ground) {
                return Err(Error::Parse(format!("line {l}: {set} leaves the ground set")));
            }
            if ranks[set.bits() as usize].replace(number(t[1], *l)?).is_some() {
                return Err(Error::Parse(format!("line {l}: {set} is listed twice")));
            }
        }
        let ranks = ranks
            .into_iter()
            .enumerate()
            .map(|(bits, r)| {
                r.ok_or_else(|| Error::Parse(format!("no rank given for {}", ElementSet::from_bits(bits as u64))))
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok(Payload::RankTable { n, ranks })
    } else {
        let bases = body
            .iter()
            .map(|(l, t)| match t.as_slice() {
                [token] => parse_set(token, *l),
                _ => Err(Error::Parse(format!("line {l}: expected one basis"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Payload::Bases { n, bases })
    }
}
