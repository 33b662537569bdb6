//! Plain-text instance formats. Ids in files are 1-based; `#` starts a
//! comment and blank lines are ignored.
//!
//! ```text
//! graph <n> <alpha>          interval <n> <alpha>              chords <n>
//! v <id> <color>             i <id> <color> <left> <right>     c <id> <color> <a> <b>
//! e <id> <id>                                                  pendant <v1-id> <v2-id>
//! ```
//!
//! Interval endpoints may be any distinct reals; they are rank-compressed
//! on load.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::circle::{Chord, ChordDiagram, ReducedInstance};
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, VertexId};
use crate::interval::{normalize, IntervalInstance, RawInterval};

/// Any instance the text formats can hold.
#[derive(Debug, Clone)]
pub enum Instance {
    Graph(ColoredGraph),
    Intervals(IntervalInstance),
    Chords(ChordFile),
}

impl Instance {
    pub fn graph(&self) -> Result<ColoredGraph> {
        match self {
            Instance::Graph(g) => Ok(g.clone()),
            Instance::Intervals(inst) => Ok(inst.graph().clone()),
            Instance::Chords(f) => crate::circle::circle_graph(&f.diagram),
        }
    }
}

/// A chord diagram plus optional pendant pairs (0-based ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordFile {
    pub diagram: ChordDiagram,
    pub pendants: Vec<(VertexId, VertexId)>,
}

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            msg: msg.into(),
        }
    }

    fn arity(&self, k: usize) -> Result<()> {
        if self.words.len() == k {
            Ok(())
        } else {
            Err(self.err(format!(
                "`{}` takes {} fields, found {}",
                self.words[0],
                k - 1,
                self.words.len() - 1
            )))
        }
    }

    fn field<T: FromStr>(&self, i: usize) -> Result<T> {
        self.words[i]
            .parse()
            .map_err(|_| self.err(format!("cannot parse `{}`", self.words[i])))
    }

    /// 1-based id in the file, returned 0-based.
    fn id(&self, i: usize, n: usize) -> Result<VertexId> {
        let id: usize = self.field(i)?;
        if id == 0 || id > n {
            return Err(self.err(format!("id {id} outside 1..={n}")));
        }
        Ok(id - 1)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        (!words.is_empty()).then_some(Line {
            number: i + 1,
            words,
        })
    })
}

fn header<'a>(
    it: &mut impl Iterator<Item = Line<'a>>,
    keyword: &str,
    arity: usize,
) -> Result<Line<'a>> {
    let line = it.next().ok_or_else(|| Error::Parse {
        line: 0,
        msg: format!("missing `{keyword}` header"),
    })?;
    if line.words[0] != keyword {
        return Err(line.err(format!("expected `{keyword}` header")));
    }
    line.arity(arity)?;
    Ok(line)
}

/// Fills `slots` at `id`, rejecting duplicates; returns an error naming the
/// first missing id.
fn place<T>(slots: &mut [Option<T>], id: VertexId, value: T, line: &Line) -> Result<()> {
    if slots[id].replace(value).is_some() {
        return Err(line.err(format!("id {} defined twice", id + 1)));
    }
    Ok(())
}

fn all_present<T>(slots: Vec<Option<T>>, what: &str) -> Result<Vec<T>> {
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| Error::input(format!("{what} {} is missing", i + 1))))
        .collect()
}

fn check_alpha(colors: &[Color], alpha: usize) -> Result<()> {
    let mut distinct = colors.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != alpha {
        return Err(Error::input(format!(
            "header declares {alpha} colors but {} are used",
            distinct.len()
        )));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut it = lines(text);
    let head = header(&mut it, "graph", 3)?;
    let n: usize = head.field(1)?;
    let alpha: usize = head.field(2)?;
    let mut colors = vec![None; n];
    let mut edges = Vec::new();
    for line in it {
        match line.words[0] {
            "v" => {
                line.arity(3)?;
                let id = line.id(1, n)?;
                place(&mut colors, id, line.field::<Color>(2)?, &line)?;
            }
            "e" => {
                line.arity(3)?;
                edges.push((line.id(1, n)?, line.id(2, n)?));
            }
            other => return Err(line.err(format!("unknown record `{other}`"))),
        }
    }
    let colors = all_present(colors, "vertex")?;
    check_alpha(&colors, alpha)?;
    ColoredGraph::new(colors, &edges)
}

pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.alpha());
    for (v, c) in g.colors().iter().enumerate() {
        writeln!(out, "v {} {}", v + 1, c).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Loads an interval layout and rank-compresses it. Disconnected overlap
/// graphs are rejected.
pub fn parse_intervals(text: &str) -> Result<IntervalInstance> {
    let mut it = lines(text);
    let head = header(&mut it, "interval", 3)?;
    let n: usize = head.field(1)?;
    let alpha: usize = head.field(2)?;
    let mut raw = vec![None; n];
    for line in it {
        if line.words[0] != "i" {
            return Err(line.err(format!("unknown record `{}`", line.words[0])));
        }
        line.arity(5)?;
        let id = line.id(1, n)?;
        let (left, right): (f64, f64) = (line.field(3)?, line.field(4)?);
        if !left.is_finite() || !right.is_finite() {
            return Err(line.err("endpoints must be finite"));
        }
        place(
            &mut raw,
            id,
            RawInterval::new(line.field(2)?, left, right),
            &line,
        )?;
    }
    let raw = all_present(raw, "interval")?;
    check_alpha(&raw.iter().map(|r| r.color).collect::<Vec<_>>(), alpha)?;
    let inst = normalize(&raw)?;
    if !inst.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(inst)
}

pub fn write_intervals(inst: &IntervalInstance) -> String {
    let mut out = format!("interval {} {}\n", inst.n(), inst.alpha());
    for (id, iv) in inst.intervals().iter().enumerate() {
        writeln!(out, "i {} {} {} {}", id + 1, iv.color, iv.left, iv.right).unwrap();
    }
    out
}

pub fn parse_chords(text: &str) -> Result<ChordFile> {
    let mut it = lines(text);
    let head = header(&mut it, "chords", 2)?;
    let n: usize = head.field(1)?;
    let mut chords = vec![None; n];
    let mut pendants = Vec::new();
    for line in it {
        match line.words[0] {
            "c" => {
                line.arity(5)?;
                let id = line.id(1, n)?;
                let chord = Chord {
                    color: line.field(2)?,
                    a: line.field(3)?,
                    b: line.field(4)?,
                };
                place(&mut chords, id, chord, &line)?;
            }
            "pendant" => {
                line.arity(3)?;
                pendants.push((line.id(1, n)?, line.id(2, n)?));
            }
            other => return Err(line.err(format!("unknown record `{other}`"))),
        }
    }
    Ok(ChordFile {
        diagram: ChordDiagram::new(all_present(chords, "chord")?)?,
        pendants,
    })
}

pub fn write_chords(d: &ChordDiagram) -> String {
    let mut out = format!("chords {}\n", d.n());
    for (id, c) in d.chords().iter().enumerate() {
        writeln!(out, "c {} {} {} {}", id + 1, c.color, c.a, c.b).unwrap();
    }
    out
}

pub fn write_reduced(red: &ReducedInstance) -> String {
    let mut out = write_chords(&red.diagram);
    for (v, &p) in red.pendant_of.iter().enumerate() {
        writeln!(out, "pendant {} {}", v + 1, p + 1).unwrap();
    }
    out
}

/// Parses whichever format the header names.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let first = lines(text)
        .next()
        .ok_or_else(|| Error::input("empty input"))?;
    match first.words[0] {
        "graph" => parse_graph(text).map(Instance::Graph),
        "interval" => parse_intervals(text).map(Instance::Intervals),
        "chords" => parse_chords(text).map(Instance::Chords),
        other => Err(first.err(format!("unknown header `{other}`"))),
    }
}

/// Parses a comma- or space-separated list of 1-based ids.
pub fn parse_id_list(text: &str, n: usize) -> Result<Vec<VertexId>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|w| !w.is_empty())
        .map(|w| {
            let id: usize = w
                .parse()
                .map_err(|_| Error::input(format!("bad id `{w}`")))?;
            if id == 0 || id > n {
                return Err(Error::input(format!("id {id} outside 1..={n}")));
            }
            Ok(id - 1)
        })
        .collect()
}

/// Formats 0-based ids as a 1-based space-separated list.
pub fn format_ids(ids: impl IntoIterator<Item = VertexId>) -> String {
    ids.into_iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
