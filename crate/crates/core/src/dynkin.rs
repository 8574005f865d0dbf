//! Dynkin diagrams, their skeletons and completeness.
//!
//! The skeleton keeps only the simply-laced edges (`a_ij = a_ji = -1`). Its
//! connected components index the Weyl group orbits on real roots.

use std::fmt::Write as _;

use crate::gcm::{components, GeneralizedCartanMatrix};

/// Direction of the arrow drawn on a plain multiple edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    /// Points toward this vertex.
    Toward(usize),
    /// Both `|a_ij| > 1` and `|a_ji| > 1`, as in A₁⁽¹⁾.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// `a_ij a_ji <= 4`: `max(|a_ij|, |a_ji|)` lines.
    Plain {
        multiplicity: u32,
        arrow: Option<Arrow>,
    },
    /// `a_ij a_ji > 4`: a bold line labeled `(|a_ij|, |a_ji|)` for `i < j`.
    Bold { labels: (u32, u32) },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DynkinEdge {
    pub i: usize,
    pub j: usize,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub order: usize,
    /// Sorted by `(i, j)` with `i < j`.
    pub edges: Vec<DynkinEdge>,
}

impl DynkinDiagram {
    pub fn new(a: &GeneralizedCartanMatrix) -> Self {
        let n = a.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (aij, aji) = (a.entry(i, j), a.entry(j, i));
                if aij == 0 {
                    continue;
                }
                let (x, y) = (aij.unsigned_abs() as u32, aji.unsigned_abs() as u32);
                let kind = if aij * aji <= 4 {
                    let arrow = match (x > 1, y > 1) {
                        (true, true) => Some(Arrow::Both),
                        (true, false) => Some(Arrow::Toward(i)),
                        (false, true) => Some(Arrow::Toward(j)),
                        (false, false) => None,
                    };
                    EdgeKind::Plain {
                        multiplicity: x.max(y),
                        arrow,
                    }
                } else {
                    EdgeKind::Bold { labels: (x, y) }
                };
                edges.push(DynkinEdge { i, j, kind });
            }
        }
        Self { order: n, edges }
    }

    /// Undirected DOT; vertices are labeled 1..ℓ.
    ///
    /// Plain multiple edges carry `label="m"` and a `dir` attribute for the
    /// arrow (`forward` toward the higher index, `back` toward the lower,
    /// `both`). Bold edges carry `style=bold` and `label="(p,q)"`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dynkin {\n");
        for v in 0..self.order {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, v + 1);
        }
        for e in &self.edges {
            let attrs = match e.kind {
                EdgeKind::Plain {
                    multiplicity: 1, ..
                } => String::new(),
                EdgeKind::Plain {
                    multiplicity,
                    arrow,
                } => {
                    let dir = match arrow {
                        Some(Arrow::Toward(t)) if t == e.j => ", dir=forward",
                        Some(Arrow::Toward(_)) => ", dir=back",
                        Some(Arrow::Both) => ", dir=both",
                        None => "",
                    };
                    format!(" [label=\"{multiplicity}\"{dir}]")
                }
                EdgeKind::Bold { labels: (p, q) } => {
                    format!(" [label=\"({p},{q})\", style=bold]")
                }
            };
            let _ = writeln!(out, "  {} -- {}{};", e.i + 1, e.j + 1, attrs);
        }
        out.push_str("}\n");
        out
    }
}

/// The Dynkin diagram with every non-single edge removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub order: usize,
    /// Pairs `(i, j)` with `i < j` and `a_ij = a_ji = -1`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// Sorted by smallest member.
    pub components: Vec<Vec<usize>>,
}

impl Skeleton {
    pub fn new(a: &GeneralizedCartanMatrix) -> Self {
        let n = a.rank();
        let single = |i: usize, j: usize| a.entry(i, j) == -1 && a.entry(j, i) == -1;
        let edges = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| single(i, j))
            .collect();
        Self {
            order: n,
            edges,
            components: components(n, single),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(i, j)| {
            if i == v {
                Some(j)
            } else if j == v {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for v in 0..self.order {
            let _ = writeln!(out, "  {} [label=\"{}\"];", v + 1, v + 1);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  {} -- {};", i + 1, j + 1);
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completeness {
    pub complete: bool,
    /// Pairs `(i, j)`, `i < j`, with `a_ij = 0`.
    pub missing_pairs: Vec<(usize, usize)>,
}

pub fn is_complete(a: &GeneralizedCartanMatrix) -> Completeness {
    let n = a.rank();
    let missing_pairs: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.entry(i, j) == 0)
        .collect();
    Completeness {
        complete: missing_pairs.is_empty(),
        missing_pairs,
    }
}
