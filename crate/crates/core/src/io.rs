//! Text formats: SNAP-style edge lists, Matrix Market coordinate files,
//! clustering files, labeling exports and fractional LP solutions.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::FractionalSolution;
use crate::stc::{Flavor, StcLabeling};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    MatrixMarket,
}

impl GraphFormat {
    /// `.mtx` files are Matrix Market; everything else is read as an edge list.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("mtx") => GraphFormat::MatrixMarket,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" | "txt" => Ok(GraphFormat::EdgeList),
            "matrix-market" | "mtx" => Ok(GraphFormat::MatrixMarket),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::io(path, e))
}

/// Loads and standardizes a graph: directions and weights dropped, self-loops
/// removed, parallel edges merged, node labels mapped to `0..n` in order of
/// first appearance.
pub fn load_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph> {
    let path = path.as_ref();
    let reader = open(path)?;
    match format {
        GraphFormat::EdgeList => parse_edge_list(reader),
        GraphFormat::MatrixMarket => parse_matrix_market(reader),
    }
    .map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// [`load_graph`] with the format picked from the file extension.
pub fn load_graph_auto(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    load_graph(path, GraphFormat::from_path(path))
}

#[derive(Default)]
struct LabelMap {
    index: HashMap<String, usize>,
    labels: Vec<String>,
}

impl LabelMap {
    fn id(&mut self, label: &str) -> usize {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.index.insert(label.to_owned(), id);
        self.labels.push(label.to_owned());
        id
    }
}

fn parse_id(token: &str, line: usize) -> Result<()> {
    token
        .parse::<i64>()
        .map(|_| ())
        .map_err(|_| Error::parse(line, format!("node id `{token}` is not an integer")))
}

pub fn parse_edge_list<R: Read>(reader: R) -> Result<Graph> {
    let mut map = LabelMap::default();
    let mut edges = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io("<edge list>", e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::parse(lineno, "expected two node ids")),
        };
        parse_id(a, lineno)?;
        parse_id(b, lineno)?;
        // Anything after the two ids is a weight or timestamp; ignored.
        let u = map.id(a);
        let v = map.id(b);
        edges.push((u, v));
    }
    if map.labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Graph::with_labels(map.labels, edges)
}

pub fn parse_matrix_market<R: Read>(reader: R) -> Result<Graph> {
    let mut lines = BufReader::new(reader).lines().enumerate();
    let header = match lines.next() {
        Some((_, l)) => l.map_err(|e| Error::io("<matrix market>", e))?,
        None => return Err(Error::EmptyGraph),
    };
    let fields: Vec<String> = header
        .split_whitespace()
        .map(|s| s.to_ascii_lowercase())
        .collect();
    if fields.len() < 5 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(Error::parse(1, "missing %%MatrixMarket matrix header"));
    }
    if fields[2] != "coordinate" {
        return Err(Error::parse(1, "only coordinate format is supported"));
    }
    let has_value = match fields[3].as_str() {
        "pattern" => false,
        "real" | "integer" => true,
        other => return Err(Error::parse(1, format!("unsupported field `{other}`"))),
    };
    match fields[4].as_str() {
        "symmetric" | "general" => {}
        other => return Err(Error::parse(1, format!("unsupported symmetry `{other}`"))),
    }

    let mut size: Option<(usize, usize)> = None;
    let mut map = LabelMap::default();
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io("<matrix market>", e))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("`{t}` is not a non-negative integer")))
        };
        match size {
            None => {
                if tokens.len() != 3 {
                    return Err(Error::parse(lineno, "expected `rows cols entries`"));
                }
                size = Some((parse(tokens[0])?, parse(tokens[1])?));
            }
            Some((rows, cols)) => {
                let want = if has_value { 3 } else { 2 };
                if tokens.len() < want {
                    return Err(Error::parse(lineno, format!("expected {want} fields")));
                }
                let i = parse(tokens[0])?;
                let j = parse(tokens[1])?;
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(Error::parse(lineno, "index outside the declared size"));
                }
                let u = map.id(&i.to_string());
                let v = map.id(&j.to_string());
                edges.push((u, v));
            }
        }
    }
    let (rows, cols) = size.ok_or(Error::EmptyGraph)?;
    // Nodes declared by the header but never referenced stay as isolated nodes.
    for idx in 1..=rows.max(cols) {
        map.id(&idx.to_string());
    }
    if map.labels.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Graph::with_labels(map.labels, edges)
}

/// Writes `g` as an edge list using node labels.
///
/// Lines are ordered so that nodes first appear in id order, which makes
/// reading the file back reproduce `g` exactly. A node that cannot be
/// introduced by one of its edges (e.g. an isolated node) is introduced by a
/// self-loop line, which the reader drops.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let io = |e| Error::io("<edge list>", e);
    writeln!(out, "# nodes {} edges {}", g.n(), g.m()).map_err(io)?;
    let mut seen = vec![false; g.n()];
    let mut written = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    for t in 0..g.n() {
        if seen[t] {
            continue;
        }
        seen[t] = true;
        let nbrs = g.neighbors(t);
        let eids = g.neighbor_edge_ids(t);
        let slot = nbrs
            .iter()
            .position(|&v| v < t && seen[v])
            .or_else(|| nbrs.iter().position(|&v| v == t + 1));
        match slot {
            Some(s) => {
                let v = nbrs[s];
                seen[v] = true;
                written[eids[s]] = true;
                order.push(if v < t { (v, t) } else { (t, v) });
            }
            // A self-loop is dropped on reading but still introduces the node.
            None => order.push((t, t)),
        }
    }
    order.extend(
        g.edges()
            .iter()
            .zip(&written)
            .filter(|&(_, &w)| !w)
            .map(|(&e, _)| e),
    );
    for (u, v) in order {
        writeln!(out, "{} {}", g.label(u), g.label(v)).map_err(io)?;
    }
    Ok(())
}

/// One cluster id per line; line `r` belongs to node `r`.
pub fn write_clustering<W: Write>(c: &Clustering, mut out: W) -> Result<()> {
    for &cid in c.assignment() {
        writeln!(out, "{cid}").map_err(|e| Error::io("<clustering>", e))?;
    }
    Ok(())
}

pub fn save_clustering(c: &Clustering, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    write_clustering(c, &mut out)?;
    out.flush().map_err(|e| Error::io(path, e))
}

pub fn parse_clustering<R: Read>(reader: R) -> Result<Clustering> {
    let mut labels = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let line = line.map_err(|e| Error::io("<clustering>", e))?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let cid = t
            .parse::<usize>()
            .map_err(|_| Error::parse(idx + 1, format!("`{t}` is not a cluster id")))?;
        labels.push(cid);
    }
    Ok(Clustering::from_assignment(labels))
}

pub fn load_clustering(path: impl AsRef<Path>) -> Result<Clustering> {
    let path = path.as_ref();
    parse_clustering(open(path)?).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// Header `flavor matching_size`, then `W u v` per weak edge and `A u v` per added pair.
pub fn write_labeling<W: Write>(g: &Graph, lab: &StcLabeling, mut out: W) -> Result<()> {
    let io = |e| Error::io("<labeling>", e);
    writeln!(out, "{} {}", lab.flavor, lab.matching_size).map_err(io)?;
    for &(u, v) in &lab.weak_edges {
        writeln!(out, "W {} {}", g.label(u), g.label(v)).map_err(io)?;
    }
    for &(u, v) in &lab.added_pairs {
        writeln!(out, "A {} {}", g.label(u), g.label(v)).map_err(io)?;
    }
    Ok(())
}

/// Reads a fractional solution: a flavor header (`STC` or `STC+`) followed by
/// `u v value` lines in the graph's original labels.
pub fn parse_fractional<R: Read>(g: &Graph, reader: R) -> Result<FractionalSolution> {
    let mut flavor = None;
    let mut entries = Vec::new();
    for (idx, line) in BufReader::new(reader).lines().enumerate() {
        let lineno = idx + 1;
        let line = line.map_err(|e| Error::io("<fractional solution>", e))?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if flavor.is_none() {
            flavor = Some(
                t.parse::<Flavor>()
                    .map_err(|msg| Error::parse(lineno, msg))?,
            );
            continue;
        }
        let tokens: Vec<&str> = t.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::parse(lineno, "expected `u v value`"));
        }
        let node = |label: &str| {
            g.node_of_label(label)
                .ok_or_else(|| Error::parse(lineno, format!("unknown node label `{label}`")))
        };
        let u = node(tokens[0])?;
        let v = node(tokens[1])?;
        let value = tokens[2]
            .parse::<f64>()
            .map_err(|_| Error::parse(lineno, format!("`{}` is not a number", tokens[2])))?;
        if u == v {
            return Err(Error::parse(lineno, "self pair"));
        }
        entries.push((u, v, value));
    }
    let flavor = flavor.ok_or_else(|| Error::parse(1, "missing flavor header"))?;
    FractionalSolution::new(g, flavor, entries)
}

pub fn load_fractional(g: &Graph, path: impl AsRef<Path>) -> Result<FractionalSolution> {
    let path = path.as_ref();
    parse_fractional(g, open(path)?).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        other => other,
    })
}

/// Writes a fractional solution in the format read by [`parse_fractional`].
pub fn write_fractional<W: Write>(g: &Graph, sol: &FractionalSolution, mut out: W) -> Result<()> {
    let io = |e| Error::io("<fractional solution>", e);
    writeln!(out, "{}", sol.flavor()).map_err(io)?;
    for ((u, v), x) in sol.sorted_entries() {
        writeln!(out, "{} {} {}", g.label(u), g.label(v), x).map_err(io)?;
    }
    Ok(())
}
