//! Text format for polyhedra.
//!
//! A file holds one polyhedron as one or both representation sections:
//!
//! ```text
//! # comment
//! H 2
//! -1 0 <= 0
//! 1 2 = 1
//! V 2
//! v 1/2 0
//! r 1 0
//! l 0 1
//! ```
//!
//! `H n` starts a constraint section in ambient dimension `n`; each line is
//! `a_1 .. a_n <= b` or `a_1 .. a_n = b` with integer or `p/q` rational
//! entries. `V n` starts a generator section with lines prefixed `v` (point),
//! `r` (ray) or `l` (lineality). Tokens are whitespace separated; `#` starts
//! a comment. When both sections are present they must describe the same
//! set.

use anyhow::{anyhow, bail, Result};

use revsplit::polyhedron::QPolyhedron;
use revsplit::rat::{format_rat, parse_rat, QVec, Rat};

/// Parse failure with position information, mapped to exit code 2.
#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn parse_rat_at(token: &str, line_no: usize, col: usize) -> Result<Rat> {
    parse_rat(token).ok_or_else(|| err(line_no, col, format!("invalid rational `{token}`")))
}

/// Parses the text format into a polyhedron.
pub fn parse_polyhedron(text: &str) -> Result<QPolyhedron> {
    enum Section {
        None,
        H,
        V,
    }
    let mut section = Section::None;
    let mut ambient: Option<usize> = None;
    let mut eqs: Vec<(QVec, Rat)> = Vec::new();
    let mut ineqs: Vec<(QVec, Rat)> = Vec::new();
    let mut points: Vec<QVec> = Vec::new();
    let mut rays: Vec<QVec> = Vec::new();
    let mut lins: Vec<QVec> = Vec::new();
    let mut saw_h = false;
    let mut saw_v = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens[0] {
            "H" | "V" => {
                if tokens.len() != 2 {
                    bail!(err(line_no, 1, "section header needs a dimension"));
                }
                let n: usize = tokens[1]
                    .parse()
                    .map_err(|_| err(line_no, 3, "invalid dimension"))?;
                if let Some(prev) = ambient {
                    if prev != n {
                        bail!(err(line_no, 3, "sections disagree on the dimension"));
                    }
                }
                ambient = Some(n);
                section = if tokens[0] == "H" {
                    saw_h = true;
                    Section::H
                } else {
                    saw_v = true;
                    Section::V
                };
            }
            _ => {
                let n = ambient.ok_or_else(|| err(line_no, 1, "data before `H n`/`V n` header"))?;
                match section {
                    Section::None => unreachable!("ambient implies a section"),
                    Section::H => {
                        // a_1 .. a_n (<=|=) b
                        if tokens.len() != n + 2 {
                            bail!(err(
                                line_no,
                                1,
                                format!("expected {} coefficients, a relation and a bound", n)
                            ));
                        }
                        let mut normal: QVec = Vec::with_capacity(n);
                        for (i, tok) in tokens[..n].iter().enumerate() {
                            normal.push(parse_rat_at(tok, line_no, i + 1)?);
                        }
                        let rhs = parse_rat_at(tokens[n + 1], line_no, n + 2)?;
                        match tokens[n] {
                            "<=" => ineqs.push((normal, rhs)),
                            "=" => eqs.push((normal, rhs)),
                            other => bail!(err(
                                line_no,
                                n + 1,
                                format!("expected `<=` or `=`, found `{other}`")
                            )),
                        }
                    }
                    Section::V => {
                        if tokens.len() != n + 1 {
                            bail!(err(
                                line_no,
                                1,
                                format!("expected a generator tag and {} entries", n)
                            ));
                        }
                        let mut entries: QVec = Vec::with_capacity(n);
                        for (i, tok) in tokens[1..].iter().enumerate() {
                            entries.push(parse_rat_at(tok, line_no, i + 2)?);
                        }
                        match tokens[0] {
                            "v" => points.push(entries),
                            "r" => rays.push(entries),
                            "l" => lins.push(entries),
                            other => bail!(err(
                                line_no,
                                1,
                                format!("expected `v`, `r` or `l`, found `{other}`")
                            )),
                        }
                    }
                }
            }
        }
    }

    let n = ambient.ok_or_else(|| err(1, 1, "no `H n` or `V n` section found"))?;
    let from_h = saw_h.then(|| QPolyhedron::from_rational_constraints(n, eqs, ineqs));
    let from_v = saw_v.then(|| QPolyhedron::from_generators(n, points, rays, lins));
    match (from_h, from_v) {
        (Some(h), Some(v)) => {
            if h != v {
                bail!(err(1, 1, "H and V sections describe different sets"));
            }
            Ok(h)
        }
        (Some(h), None) => Ok(h),
        (None, Some(v)) => Ok(v),
        (None, None) => Err(anyhow!("empty input")),
    }
}

/// Which sections to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sections {
    H,
    V,
    Both,
}

/// Prints the canonical text form.
pub fn format_polyhedron(p: &QPolyhedron, sections: Sections) -> String {
    let mut out = String::new();
    let n = p.ambient();
    if matches!(sections, Sections::H | Sections::Both) {
        out.push_str(&format!("H {n}\n"));
        let h = p.hrep();
        if h.infeasible {
            out.push_str("# infeasible\n");
            // The canonical empty polyhedron as an explicit contradiction.
            let zeros = vec!["0"; n].join(" ");
            out.push_str(&format!("{zeros} <= -1\n"));
        } else {
            for c in &h.equalities {
                let coeffs: Vec<String> = c.normal.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("{} = {}\n", coeffs.join(" "), format_rat(&c.rhs)));
            }
            for c in &h.inequalities {
                let coeffs: Vec<String> = c.normal.iter().map(|x| x.to_string()).collect();
                out.push_str(&format!("{} <= {}\n", coeffs.join(" "), format_rat(&c.rhs)));
            }
        }
    }
    if matches!(sections, Sections::V | Sections::Both) {
        out.push_str(&format!("V {n}\n"));
        let v = p.vrep();
        for pt in &v.points {
            let coords: Vec<String> = pt.iter().map(format_rat).collect();
            out.push_str(&format!("v {}\n", coords.join(" ")));
        }
        for r in &v.rays {
            let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("r {}\n", coords.join(" ")));
        }
        for l in &v.lineality {
            let coords: Vec<String> = l.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!("l {}\n", coords.join(" ")));
        }
    }
    out
}

/// Prints a rational point in the CLI's `p/q p/q ..` form.
pub fn format_point(x: &[Rat]) -> String {
    x.iter().map(format_rat).collect::<Vec<_>>().join(" ")
}
