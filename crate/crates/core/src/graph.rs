//! Simple undirected graphs used as Cops and Robbers boards.
//!
//! The text format is a plain edge list:
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (exactly m of these, 0 <= u, v < n, u != v)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::parse(0, "graph must have at least one vertex"));
        }
        let mut builder = Builder::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            builder.add(u as usize, v as usize).map_err(|m| Error::parse(i + 1, m))?;
        }
        Ok(builder.finish())
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut data = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = data
            .next()
            .ok_or_else(|| Error::parse(0, "missing \"n m\" header"))?;
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(Error::parse(header_line, "vertex count must be at least 1"));
        }

        let mut builder = Builder::new(n);
        let mut seen = 0;
        let mut last_line = header_line;
        for (line, text) in data {
            last_line = line;
            seen += 1;
            if seen > m {
                return Err(Error::parse(
                    line,
                    format!("edge count mismatch: header declares {m} edges, found more"),
                ));
            }
            let (u, v) = parse_pair(line, text)?;
            builder.add(u, v).map_err(|msg| Error::parse(line, msg))?;
        }
        if seen != m {
            return Err(Error::parse(
                last_line,
                format!("edge count mismatch: header declares {m} edges, found {seen}"),
            ));
        }
        Ok(builder.finish())
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text)
    }

    /// Canonical edge-list text: header, then edges with `u < v` in sorted order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edges.len());
        for &(u, v) in &self.edges {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n() as Vertex
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (v as usize) < self.n()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains_vertex(u) && self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    /// `N[v]`: the neighbours of `v` together with `v` itself, sorted.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>> {
        if !self.contains_vertex(v) {
            return Err(Error::VertexOutOfRange {
                vertex: v as usize,
                n: self.n(),
            });
        }
        let adj = &self.adjacency[v as usize];
        let mut out = Vec::with_capacity(adj.len() + 1);
        let split = adj.partition_point(|&w| w < v);
        out.extend_from_slice(&adj[..split]);
        out.push(v);
        out.extend_from_slice(&adj[split..]);
        Ok(out)
    }

    /// Whether `u` and `v` are equal or adjacent.
    pub fn in_closed_neighborhood(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.has_edge(u, v)
    }

    /// The graph obtained by renaming every vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Self> {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Self::from_edges(self.n(), &edges)
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Builder {
    n: usize,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize) -> std::result::Result<(), String> {
        for x in [u, v] {
            if x >= self.n {
                return Err(format!("vertex {x} out of range (n = {})", self.n));
            }
        }
        if u == v {
            return Err(format!("self-loop at vertex {u}"));
        }
        let key = (u.min(v) as Vertex, u.max(v) as Vertex);
        if !self.edges.insert(key) {
            return Err(format!("duplicate edge {} {}", key.0, key.1));
        }
        Ok(())
    }

    fn finish(self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            adjacency,
            edges: self.edges.into_iter().collect(),
        }
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line, format!("expected two integers, missing {what}")))?;
        field
            .parse()
            .map_err(|_| Error::parse(line, format!("{what} {field:?} is not a non-negative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(Error::parse(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse_err_line(text: &str) -> usize {
        match Graph::parse(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_path_and_cycle() {
        let p3 = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.n(), 3);
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);

        let c4 = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(c4.neighbors(0), &[1, 3]);
    }

    #[test]
    fn single_vertex() {
        let k1 = Graph::parse("1 0\n").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.edge_count(), 0);
        assert_eq!(k1.closed_neighborhood(0).unwrap(), vec![0]);
    }

    #[test]
    fn isolated_vertices_exist() {
        let g = Graph::parse("# two isolated\n5 1\n\n0 4\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(2), 0);
    }

    #[test]
    fn closed_neighborhoods_of_path() {
        let p3 = Graph::parse("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.closed_neighborhood(1).unwrap(), vec![0, 1, 2]);
        assert_eq!(p3.closed_neighborhood(0).unwrap(), vec![0, 1]);
        assert!(matches!(
            p3.closed_neighborhood(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(parse_err_line(""), 0);
        assert_eq!(parse_err_line("# c\nx 2\n"), 2);
        assert_eq!(parse_err_line("0 0\n"), 1);
        assert_eq!(parse_err_line("3 2\n0 1\n1 3\n"), 3);
        assert_eq!(parse_err_line("3 2\n0 1\n2 2\n"), 3);
        assert_eq!(parse_err_line("3 2\n0 1\n1 0\n"), 3);
        assert_eq!(parse_err_line("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(parse_err_line("3 3\n0 1\n1 2\n"), 3);
        assert_eq!(parse_err_line("3 1\n0 1 2\n"), 2);
    }

    #[test]
    fn canonical_form_round_trips() {
        let g = Graph::parse("# c\n4 3\n3 0\n2 1\n1 0\n").unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n0 3\n1 2\n");
        assert_eq!(Graph::parse(&text).unwrap(), g);
    }
}
