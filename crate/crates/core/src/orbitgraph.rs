//! The graph 𝒫 of the Weyl group action on real roots.
//!
//! Vertices are the generated real roots; `u` and `v` are joined by an edge
//! labeled `i` when `w_i u = v`. A root fixed by `w_i` carries a loop labeled
//! `i`. Connected components are the Weyl group orbits (within the bound).
//! When `w_i u` falls outside the box, the incidence is kept as a frontier
//! mark, so every vertex has exactly ℓ labeled incidences.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gcm::GeneralizedCartanMatrix;
use crate::orbits::generate_real_roots;
use crate::roots::{reflect, RootVector};
use crate::SCHEMA;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGraph {
    pub rank: usize,
    /// Sorted lexicographically; indices below refer to this order.
    pub vertices: Vec<RootVector>,
    /// `(u, v, i)` with `u < v` and `w_i u = v`, one per unordered pair and
    /// label, sorted.
    pub edges: Vec<(usize, usize, usize)>,
    /// `(u, i)` with `w_i u = u`, sorted.
    pub loops: Vec<(usize, usize)>,
    /// `(u, i)` with `w_i u` outside the box, sorted.
    pub frontier: Vec<(usize, usize)>,
    /// Vertex index classes, each sorted, ordered by smallest member.
    pub components: Vec<Vec<usize>>,
    pub bound: u64,
    pub frontier_complete: bool,
}

pub fn build_orbit_graph(a: &GeneralizedCartanMatrix, bound: u64) -> Result<OrbitGraph> {
    let set = generate_real_roots(a, bound)?;
    let vertices: Vec<RootVector> = set.roots.into_iter().collect();
    let index: BTreeMap<&RootVector, usize> =
        vertices.iter().enumerate().map(|(k, v)| (v, k)).collect();

    let mut edges = Vec::new();
    let mut loops = Vec::new();
    let mut frontier = Vec::new();
    for (u, root) in vertices.iter().enumerate() {
        for i in 0..a.rank() {
            let image = reflect(a, i, root)?;
            match index.get(&image) {
                Some(&v) if v == u => loops.push((u, i)),
                Some(&v) if u < v => edges.push((u, v, i)),
                Some(_) => {}
                None => frontier.push((u, i)),
            }
        }
    }
    edges.sort_unstable();

    let mut dsu = Dsu::new(vertices.len());
    for &(u, v, _) in &edges {
        dsu.union(u, v);
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..vertices.len() {
        groups.entry(dsu.find(v)).or_default().push(v);
    }
    let mut components: Vec<Vec<usize>> = groups.into_values().collect();
    components.sort_by_key(|c| c[0]);

    Ok(OrbitGraph {
        rank: a.rank(),
        vertices,
        edges,
        loops,
        frontier,
        components,
        bound,
        frontier_complete: set.frontier_complete,
    })
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    schema: String,
    rank: usize,
    vertices: Vec<Vec<i64>>,
    edges: Vec<[usize; 3]>,
    loops: Vec<[usize; 2]>,
    frontier: Vec<[usize; 2]>,
    components: Vec<Vec<usize>>,
    bound: u64,
    frontier_complete: bool,
}

impl OrbitGraph {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn vertex_index(&self, root: &RootVector) -> Option<usize> {
        self.vertices.binary_search(root).ok()
    }

    /// Component index of each vertex.
    pub fn component_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.vertices.len()];
        for (c, members) in self.components.iter().enumerate() {
            for &v in members {
                out[v] = c;
            }
        }
        out
    }

    /// Labeled incidences per vertex: edges at either end, loops and frontier
    /// marks.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for &(u, v, _) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        for &(u, _) in self.loops.iter().chain(&self.frontier) {
            deg[u] += 1;
        }
        deg
    }

    /// Undirected DOT. Vertices are labeled by their coordinates, edges and
    /// loops by `w_i` (1-based).
    pub fn export_dot(&self) -> String {
        let mut out = String::from("graph P {\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
        }
        for &(u, v, i) in &self.edges {
            let _ = writeln!(out, "  v{u} -- v{v} [label=\"w_{}\"];", i + 1);
        }
        for &(u, i) in &self.loops {
            let _ = writeln!(out, "  v{u} -- v{u} [label=\"w_{}\"];", i + 1);
        }
        out.push_str("}\n");
        out
    }

    /// Stable JSON: vertex indices are 0-based positions in `vertices`,
    /// reflection labels are 1-based.
    pub fn export_json(&self) -> String {
        let doc = GraphJson {
            schema: SCHEMA.to_string(),
            rank: self.rank,
            vertices: self.vertices.iter().map(|v| v.coords().to_vec()).collect(),
            edges: self.edges.iter().map(|&(u, v, i)| [u, v, i + 1]).collect(),
            loops: self.loops.iter().map(|&(u, i)| [u, i + 1]).collect(),
            frontier: self.frontier.iter().map(|&(u, i)| [u, i + 1]).collect(),
            components: self.components.clone(),
            bound: self.bound,
            frontier_complete: self.frontier_complete,
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        let doc: GraphJson = serde_json::from_str(text)?;
        let label = |i: usize| {
            i.checked_sub(1)
                .ok_or_else(|| serde::de::Error::custom("labels are 1-based"))
        };
        Ok(Self {
            rank: doc.rank,
            vertices: doc.vertices.into_iter().map(RootVector::new).collect(),
            edges: doc
                .edges
                .into_iter()
                .map(|[u, v, i]| Ok((u, v, label(i)?)))
                .collect::<std::result::Result<_, serde_json::Error>>()?,
            loops: doc
                .loops
                .into_iter()
                .map(|[u, i]| Ok((u, label(i)?)))
                .collect::<std::result::Result<_, serde_json::Error>>()?,
            frontier: doc
                .frontier
                .into_iter()
                .map(|[u, i]| Ok((u, label(i)?)))
                .collect::<std::result::Result<_, serde_json::Error>>()?,
            components: doc.components,
            bound: doc.bound,
            frontier_complete: doc.frontier_complete,
        })
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
