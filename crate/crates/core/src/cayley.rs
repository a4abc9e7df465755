//! Pancake graphs: the Cayley graphs of S_n and B_n with respect to the
//! prefix reversals.
//!
//! Vertex `r` is the element of lexicographic rank `r`, so the identity is
//! vertex 0. A vertex `w` is joined to `w f_i` by an edge labelled `i`.
//! Every generator is an involution, so the graph is undirected and each
//! vertex has exactly one edge per label.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gens::{burnt_flip, min_subscript, pancake_flip};
use crate::limits::{check_cap, Limits};
use crate::perm::{Element, Family, Permutation, SignedPermutation};

/// Graphs with at most this many adjacency entries keep them in memory;
/// larger ones recompute neighbours from the flips.
pub const STORED_ADJACENCY_MAX: usize = 4_000_000;

const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct CayleyGraph {
    family: Family,
    n: usize,
    vertex_count: usize,
    subscripts: Vec<usize>,
    adjacency: Option<Vec<u32>>,
}

/// Rough peak memory in bytes for building and searching the graph.
pub fn memory_estimate(family: Family, n: usize) -> u128 {
    let v = family.group_order(n);
    let deg = generator_subscripts(family, n).len() as u128;
    let adjacency = if v.saturating_mul(deg) <= STORED_ADJACENCY_MAX as u128 {
        v * deg * 4
    } else {
        0
    };
    adjacency.saturating_add(v.saturating_mul(8))
}

fn generator_subscripts(family: Family, n: usize) -> Vec<usize> {
    (min_subscript(family)..n).collect()
}

/// Builds the pancake graph of S_n or the burnt pancake graph of B_n.
pub fn build_graph(family: Family, n: usize, limits: &Limits) -> Result<CayleyGraph> {
    check_cap("graph construction", family, n, limits.graph(family))?;
    if n == 0 {
        return Err(Error::Degree { n, min: 1 });
    }
    let total = family.group_order(n);
    if total > u32::MAX as u128 {
        return Err(Error::CapExceeded {
            what: "graph construction",
            n,
            cap: n - 1,
            estimate: total,
        });
    }
    let mut graph = CayleyGraph {
        family,
        n,
        vertex_count: total as usize,
        subscripts: generator_subscripts(family, n),
        adjacency: None,
    };
    let entries = graph.vertex_count * graph.degree();
    if entries <= STORED_ADJACENCY_MAX {
        let mut adj = Vec::with_capacity(entries);
        for v in 0..graph.vertex_count as u32 {
            for slot in 0..graph.degree() {
                adj.push(graph.compute_neighbour(v, slot));
            }
        }
        graph.adjacency = Some(adj);
    }
    Ok(graph)
}

impl CayleyGraph {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.vertex_count * self.degree() / 2
    }

    /// Number of edges at every vertex.
    pub fn degree(&self) -> usize {
        self.subscripts.len()
    }

    /// Generator subscripts in slot order.
    pub fn subscripts(&self) -> &[usize] {
        &self.subscripts
    }

    pub fn has_stored_adjacency(&self) -> bool {
        self.adjacency.is_some()
    }

    pub fn identity_vertex(&self) -> u32 {
        0
    }

    pub fn vertex(&self, v: u32) -> Result<Element> {
        match self.family {
            Family::Unsigned => Permutation::unrank(self.n, v as u64).map(Element::Unsigned),
            Family::Signed => SignedPermutation::unrank(self.n, v as u64).map(Element::Signed),
        }
    }

    pub fn index_of(&self, e: &Element) -> Result<u32> {
        if e.family() != self.family {
            return Err(Error::FamilyMismatch {
                left: self.family,
                right: e.family(),
            });
        }
        if e.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: self.n,
                right: e.degree(),
            });
        }
        Ok(match e {
            Element::Unsigned(p) => p.rank(),
            Element::Signed(p) => p.rank(),
        } as u32)
    }

    fn slot_of(&self, subscript: usize) -> Result<usize> {
        self.subscripts
            .iter()
            .position(|&s| s == subscript)
            .ok_or(Error::Subscript {
                index: subscript,
                min: min_subscript(self.family),
                max: self.n.saturating_sub(1),
            })
    }

    fn compute_neighbour(&self, v: u32, slot: usize) -> u32 {
        let len = self.subscripts[slot] + 1;
        match self.family {
            Family::Unsigned => {
                let mut p = Permutation::unrank(self.n, v as u64).expect("vertex in range");
                p.reverse_prefix(len);
                p.rank() as u32
            }
            Family::Signed => {
                let mut p = SignedPermutation::unrank(self.n, v as u64).expect("vertex in range");
                p.flip_prefix(len);
                p.rank() as u32
            }
        }
    }

    /// The vertex joined to `v` by the edge in generator slot `slot`.
    pub fn neighbour(&self, v: u32, slot: usize) -> u32 {
        match &self.adjacency {
            Some(adj) => adj[v as usize * self.degree() + slot],
            None => self.compute_neighbour(v, slot),
        }
    }

    /// Neighbours of `v` in slot order.
    pub fn neighbours(&self, v: u32) -> Vec<u32> {
        (0..self.degree()).map(|s| self.neighbour(v, s)).collect()
    }

    pub fn is_edge(&self, u: u32, v: u32) -> bool {
        (0..self.degree()).any(|s| self.neighbour(u, s) == v)
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for s in 0..self.degree() {
                let w = self.neighbour(u, s);
                if dist[w as usize] == UNREACHED {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: u32) -> Option<u32> {
        let dist = self.distances_from(v);
        if dist.contains(&UNREACHED) {
            None
        } else {
            dist.into_iter().max()
        }
    }

    /// All edges as `(u, v, subscript)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count as u32 {
            for (s, &sub) in self.subscripts.iter().enumerate() {
                let v = self.neighbour(u, s);
                if u < v {
                    out.push((u, v, sub));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Published bounds on the diameter, with whether the computed value meets
/// each end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterBounds {
    pub lower: i64,
    pub upper: i64,
    pub meets_lower: bool,
    pub meets_upper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterReport {
    pub family: Family,
    pub n: usize,
    pub diameter: u32,
    /// Text form of the BFS source, always the identity.
    pub source: String,
    /// `histogram[d]` is the number of vertices at distance `d`.
    pub histogram: Vec<u64>,
    pub bounds: DiameterBounds,
}

/// `n+1 <= f(n) <= 2n-6` for S_n; `ceil(3n/2) <= g(n) <= 2n-2` for B_n.
pub fn published_bounds(family: Family, n: usize) -> (i64, i64) {
    let n = n as i64;
    match family {
        Family::Unsigned => (n + 1, 2 * n - 6),
        Family::Signed => ((3 * n + 1) / 2, 2 * n - 2),
    }
}

/// Diameter by breadth-first search from the identity. Cayley graphs are
/// vertex-transitive, so every vertex has the same eccentricity.
pub fn diameter(graph: &CayleyGraph) -> DiameterReport {
    let dist = graph.distances_from(graph.identity_vertex());
    let diameter = dist
        .iter()
        .copied()
        .filter(|&d| d != UNREACHED)
        .max()
        .unwrap_or(0);
    let mut histogram = vec![0u64; diameter as usize + 1];
    for &d in &dist {
        if d != UNREACHED {
            histogram[d as usize] += 1;
        }
    }
    let (lower, upper) = published_bounds(graph.family, graph.n);
    DiameterReport {
        family: graph.family,
        n: graph.n,
        diameter,
        source: graph
            .vertex(graph.identity_vertex())
            .expect("identity exists")
            .to_string(),
        histogram,
        bounds: DiameterBounds {
            lower,
            upper,
            meets_lower: diameter as i64 >= lower,
            meets_upper: diameter as i64 <= upper,
        },
    }
}

/// Length of the shortest cycle through `root`, searching no deeper than a
/// cycle of length `limit`.
fn shortest_cycle_through(
    graph: &CayleyGraph,
    root: u32,
    limit: u32,
    dist: &mut HashMap<u32, (u32, u32)>,
) -> Option<u32> {
    // dist maps vertex -> (distance, parent)
    dist.clear();
    dist.insert(root, (0, UNREACHED));
    let mut queue = VecDeque::from([root]);
    let mut best: Option<u32> = None;
    while let Some(u) = queue.pop_front() {
        let (du, pu) = dist[&u];
        let bound = best.unwrap_or(limit);
        if 2 * du + 1 >= bound {
            break;
        }
        for s in 0..graph.degree() {
            let w = graph.neighbour(u, s);
            if w == pu {
                continue;
            }
            match dist.get(&w) {
                None => {
                    dist.insert(w, (du + 1, u));
                    queue.push_back(w);
                }
                Some(&(dw, _)) => {
                    let len = du + dw + 1;
                    if len < best.unwrap_or(u32::MAX) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// Exact girth by a truncated breadth-first search from every vertex.
pub fn girth(graph: &CayleyGraph) -> Result<u32> {
    let mut best: Option<u32> = None;
    let mut scratch = HashMap::new();
    for root in 0..graph.vertex_count as u32 {
        let limit = best.unwrap_or(u32::MAX);
        if let Some(len) = shortest_cycle_through(graph, root, limit, &mut scratch) {
            if len < limit {
                best = Some(len);
            }
        }
    }
    best.ok_or(Error::NoCycle)
}

/// The cycles traced by alternating the edges labelled `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleFamily {
    pub a: usize,
    pub b: usize,
    /// Order of the product of the two generators.
    pub k: u64,
    /// Cycle length, `2k`.
    pub ell: u64,
    pub cycles: Vec<Vec<u32>>,
}

impl CycleFamily {
    pub fn count(&self) -> usize {
        self.cycles.len()
    }
}

/// Partitions the vertex set into the alternating `a`/`b` cycles, checking
/// that each has length `2k` and that there are `|V| / 2k` of them.
pub fn two_generator_cycles(graph: &CayleyGraph, a: usize, b: usize) -> Result<CycleFamily> {
    if a == b {
        return Err(Error::InvalidArgument(format!(
            "generator subscripts must differ, got {a} twice"
        )));
    }
    let (sa, sb) = (graph.slot_of(a)?, graph.slot_of(b)?);
    let k = match graph.family {
        Family::Unsigned => pancake_flip(a, graph.n)?
            .compose(&pancake_flip(b, graph.n)?)?
            .order(),
        Family::Signed => burnt_flip(a, graph.n)?
            .compose(&burnt_flip(b, graph.n)?)?
            .order(),
    };
    let ell = 2 * k;
    let mut seen = vec![false; graph.vertex_count];
    let mut cycles = Vec::new();
    for start in 0..graph.vertex_count as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize] = true;
        let mut v = start;
        let mut slots = [sa, sb].into_iter().cycle();
        loop {
            v = graph.neighbour(v, slots.next().expect("infinite"));
            if v == start {
                break;
            }
            if seen[v as usize] {
                return Err(Error::CycleStructure(format!(
                    "walk from vertex {start} revisits vertex {v}"
                )));
            }
            seen[v as usize] = true;
            cycle.push(v);
        }
        if cycle.len() as u64 != ell {
            return Err(Error::CycleStructure(format!(
                "cycle through vertex {start} has length {}, expected {ell}",
                cycle.len()
            )));
        }
        cycles.push(cycle);
    }
    if cycles.len() as u64 * ell != graph.vertex_count as u64 {
        return Err(Error::CycleStructure(format!(
            "{} cycles of length {ell} do not cover {} vertices",
            cycles.len(),
            graph.vertex_count
        )));
    }
    Ok(CycleFamily {
        a,
        b,
        k,
        ell,
        cycles,
    })
}

/// True iff no edge of the graph joins two non-consecutive vertices of
/// `cycle`.
pub fn verify_chord_free(graph: &CayleyGraph, cycle: &[u32]) -> Result<bool> {
    let len = cycle.len();
    if len < 3 {
        return Err(Error::NotASimpleCycle(format!("{len} vertices")));
    }
    let mut position = HashMap::with_capacity(len);
    for (i, &v) in cycle.iter().enumerate() {
        if v as usize >= graph.vertex_count {
            return Err(Error::NotASimpleCycle(format!("vertex {v} out of range")));
        }
        if position.insert(v, i).is_some() {
            return Err(Error::NotASimpleCycle(format!("vertex {v} repeated")));
        }
    }
    for i in 0..len {
        let (u, v) = (cycle[i], cycle[(i + 1) % len]);
        if !graph.is_edge(u, v) {
            return Err(Error::NotASimpleCycle(format!(
                "{u} and {v} are not adjacent"
            )));
        }
    }
    for (i, &u) in cycle.iter().enumerate() {
        for w in graph.neighbours(u) {
            if let Some(&j) = position.get(&w) {
                let gap = (i + len - j) % len;
                if gap != 1 && gap != len - 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn has_triangle(graph: &CayleyGraph) -> bool {
    (0..graph.vertex_count as u32).any(|u| {
        let nb = graph.neighbours(u);
        nb.iter()
            .enumerate()
            .any(|(i, &x)| nb[i + 1..].iter().any(|&y| graph.is_edge(x, y)))
    })
}

/// True iff two distinct vertices share at least three neighbours.
pub fn has_k23(graph: &CayleyGraph) -> bool {
    let mut common: HashMap<u32, u32> = HashMap::new();
    for u in 0..graph.vertex_count as u32 {
        common.clear();
        for x in graph.neighbours(u) {
            for v in graph.neighbours(x) {
                if v != u {
                    let c = common.entry(v).or_insert(0);
                    *c += 1;
                    if *c >= 3 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExportFormat {
    EdgeList,
    Dot,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge_list" | "edge-list" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

const PALETTE: [&str; 10] = [
    "red", "blue", "green", "orange", "purple", "brown", "magenta", "cyan", "gold", "gray",
];

/// Serialises the graph. Output depends only on the graph.
pub fn export(graph: &CayleyGraph, format: ExportFormat) -> Result<String> {
    let edges = graph.edges();
    let mut out = String::new();
    match format {
        ExportFormat::EdgeList => {
            for (u, v, g) in edges {
                let _ = writeln!(out, "{u} {v} {g}");
            }
        }
        ExportFormat::Csv => {
            out.push_str("u,v,gen\n");
            for (u, v, g) in edges {
                let _ = writeln!(out, "{u},{v},{g}");
            }
        }
        ExportFormat::Dot => {
            let name = match graph.family {
                Family::Unsigned => "S",
                Family::Signed => "B",
            };
            let _ = writeln!(out, "graph {name}{} {{", graph.n);
            for v in 0..graph.vertex_count as u32 {
                let _ = writeln!(out, "  {v} [label=\"{}\"];", graph.vertex(v)?);
            }
            for (u, v, g) in edges {
                let color = PALETTE[g % PALETTE.len()];
                let _ = writeln!(out, "  {u} -- {v} [gen={g}, color={color}];");
            }
            out.push_str("}\n");
        }
    }
    Ok(out)
}

/// Vertices covered by a cycle family, for disjointness checks.
pub fn covered_vertices(family: &CycleFamily) -> BTreeSet<u32> {
    family.cycles.iter().flatten().copied().collect()
}
