//! Line-oriented text formats and Graphviz DOT export.
//!
//! Complex: one facet per line, vertex tokens separated by single spaces.
//! Partition: one block per line, element tokens separated by single spaces;
//! a facet is written as its vertex tokens joined by commas (`2,3,4`).
//! In both, `#` starts a comment line and blank lines are ignored.

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::natline::PrefixPartition;
use crate::partition::{GroundKind, Partition};

/// Non-comment, non-blank lines with their 1-based numbers, split into tokens.
fn records(text: &str) -> Result<Vec<(usize, Vec<&str>)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split(' ').collect();
        if tokens.iter().any(|t| t.is_empty()) {
            return Err(
                Error::Syntax("tokens must be separated by single spaces".into()).at_line(i + 1),
            );
        }
        if let Some(t) = tokens.iter().find(|t| t.chars().any(char::is_whitespace)) {
            return Err(Error::Syntax(format!("token `{t}` contains whitespace")).at_line(i + 1));
        }
        out.push((i + 1, tokens));
    }
    Ok(out)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let recs = records(text)?;
    for (line, tokens) in &recs {
        if let Some(t) = tokens.iter().find(|t| t.contains(',')) {
            return Err(
                Error::Syntax(format!("vertex token `{t}` may not contain ','")).at_line(*line),
            );
        }
    }
    let facets: Vec<Vec<&str>> = recs.iter().map(|(_, t)| t.clone()).collect();
    SimplicialComplex::build(&facets).map_err(|e| match e {
        Error::NotPure { facet, .. }
        | Error::DuplicateFacet { facet, .. }
        | Error::DuplicateVertexInFacet { facet, .. } => {
            let line = recs[facet].0;
            e.at_line(line)
        }
        other => other,
    })
}

pub fn emit_complex(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    for facet in x.facets() {
        let tokens: Vec<&str> = facet.iter().map(|&v| x.label(v)).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Facet blocks when any token contains a comma, otherwise vertex blocks.
pub fn detect_kind(text: &str) -> GroundKind {
    let facets = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .any(|l| l.contains(','));
    if facets {
        GroundKind::Facets
    } else {
        GroundKind::Vertices
    }
}

/// Parses a partition of the vertices or facets of `x`; `kind = None` detects it.
pub fn parse_partition(
    text: &str,
    x: &SimplicialComplex,
    kind: Option<GroundKind>,
) -> Result<Partition> {
    let kind = kind.unwrap_or_else(|| detect_kind(text));
    let size = match kind {
        GroundKind::Vertices => x.vertex_count(),
        GroundKind::Facets => x.facet_count(),
    };
    let mut seen = vec![false; size];
    let mut blocks = Vec::new();
    for (line, tokens) in records(text)? {
        let mut block = Vec::with_capacity(tokens.len());
        for t in tokens {
            let id = match kind {
                GroundKind::Vertices => x.vertex_id(t),
                GroundKind::Facets => x.facet_by_label(t).ok(),
            }
            .ok_or_else(|| Error::UnknownToken(t.to_string()).at_line(line))?;
            if std::mem::replace(&mut seen[id], true) {
                return Err(Error::Overlap(t.to_string()).at_line(line));
            }
            block.push(id);
        }
        blocks.push(block);
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        let label = match kind {
            GroundKind::Vertices => x.label(missing).to_string(),
            GroundKind::Facets => x.facet_label(missing),
        };
        return Err(Error::MissingElement(label));
    }
    Partition::new(kind, blocks)
}

fn element_label(x: &SimplicialComplex, kind: GroundKind, e: usize) -> String {
    match kind {
        GroundKind::Vertices => x.label(e).to_string(),
        GroundKind::Facets => x.facet_label(e),
    }
}

pub fn emit_partition(x: &SimplicialComplex, p: &Partition) -> String {
    let mut out = String::new();
    for block in p.blocks() {
        let tokens: Vec<String> = block
            .iter()
            .map(|&e| element_label(x, p.kind(), e))
            .collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Single-line form, e.g. `{1 3 5} {2 6} {4}`.
pub fn inline_partition(x: &SimplicialComplex, p: &Partition) -> String {
    p.blocks()
        .iter()
        .map(|b| {
            let tokens: Vec<String> = b.iter().map(|&e| element_label(x, p.kind(), e)).collect();
            format!("{{{}}}", tokens.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses integer blocks of a prefix `[1..n]`. With `rest`, unlisted elements
/// form one extra block. `n` defaults to the largest listed element.
pub fn parse_prefix_partition(text: &str, n: Option<usize>, rest: bool) -> Result<PrefixPartition> {
    let mut blocks = Vec::new();
    for (line, tokens) in records(text)? {
        let block = tokens
            .iter()
            .map(|t| {
                t.parse::<usize>().map_err(|_| {
                    Error::Syntax(format!("`{t}` is not a positive integer")).at_line(line)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        blocks.push(block);
    }
    let n = n.unwrap_or_else(|| blocks.iter().flatten().copied().max().unwrap_or(0));
    if rest {
        PrefixPartition::with_rest(n, blocks)
    } else {
        PrefixPartition::new(n, blocks)
    }
}

pub fn emit_prefix_partition(p: &PrefixPartition) -> String {
    let mut out = String::new();
    for b in p.blocks() {
        let tokens: Vec<String> = b.iter().map(usize::to_string).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn color(block: usize) -> usize {
    block % 9 + 1
}

/// Undirected DOT graph: the tree itself for `d = 1`, the dual graph with
/// facet labels for `d >= 2`. Partition blocks become `set19` color indices.
pub fn export_dot(x: &SimplicialComplex, partition: Option<&Partition>) -> String {
    let mut out = String::new();
    let tags = |kind: GroundKind, size: usize| {
        partition
            .filter(|p| p.kind() == kind)
            .map(|p| p.assignment(size))
    };
    if x.dim() == 1 {
        let vertex_tags = tags(GroundKind::Vertices, x.vertex_count());
        let edge_tags = tags(GroundKind::Facets, x.facet_count());
        let _ = writeln!(out, "graph complex {{");
        let _ = writeln!(out, "  node [shape=circle];");
        for v in 0..x.vertex_count() {
            match &vertex_tags {
                Some(t) => {
                    let _ = writeln!(
                        out,
                        "  {} [style=filled, colorscheme=set19, fillcolor={}];",
                        quote(x.label(v)),
                        color(t[v])
                    );
                }
                None => {
                    let _ = writeln!(out, "  {};", quote(x.label(v)));
                }
            }
        }
        for (e, facet) in x.facets().iter().enumerate() {
            let (a, b) = (quote(x.label(facet[0])), quote(x.label(facet[1])));
            match &edge_tags {
                Some(t) => {
                    let _ = writeln!(
                        out,
                        "  {a} -- {b} [colorscheme=set19, color={}, penwidth=2];",
                        color(t[e])
                    );
                }
                None => {
                    let _ = writeln!(out, "  {a} -- {b};");
                }
            }
        }
    } else {
        let facet_tags = tags(GroundKind::Facets, x.facet_count());
        let _ = writeln!(out, "graph dual {{");
        let _ = writeln!(out, "  node [shape=box];");
        if partition.is_some_and(|p| p.kind() == GroundKind::Vertices) {
            let _ = writeln!(out, "  // vertex partition not drawn on the dual graph");
        }
        for f in 0..x.facet_count() {
            let name = quote(&x.facet_label(f));
            match &facet_tags {
                Some(t) => {
                    let _ = writeln!(
                        out,
                        "  {name} [style=filled, colorscheme=set19, fillcolor={}];",
                        color(t[f])
                    );
                }
                None => {
                    let _ = writeln!(out, "  {name};");
                }
            }
        }
        for (a, b) in x.dual_adjacency().edges() {
            let _ = writeln!(
                out,
                "  {} -- {};",
                quote(&x.facet_label(a)),
                quote(&x.facet_label(b))
            );
        }
    }
    out.push_str("}\n");
    out
}
