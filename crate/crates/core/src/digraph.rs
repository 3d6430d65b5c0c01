//! Oriented graphs with bit-set adjacency.
//!
//! An oriented graph has no loops and at most one of the arcs `u -> v`,
//! `v -> u`. Vertices are `0..n`. Graphs are frozen after construction:
//! every operation that changes the vertex or arc set returns a new graph.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n: usize,
    m: usize,
    out: Vec<VertexSet>,
    inn: Vec<VertexSet>,
}

/// Per-vertex degrees together with the minimum semi-degree
/// `min_v min(d^+(v), d^-(v))` and the minimum total degree.
/// Both minima are reported as 0 on the empty graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub min_semi_degree: usize,
    pub min_degree: usize,
}

/// The four co-neighbourhood counts of an ordered vertex pair inside a set:
/// `pp = |N^+(u) ∩ N^+(v) ∩ A|`, `pm = |N^+(u) ∩ N^-(v) ∩ A|`,
/// `mp = |N^-(u) ∩ N^+(v) ∩ A|`, `mm = |N^-(u) ∩ N^-(v) ∩ A|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairStats {
    pub pp: usize,
    pub pm: usize,
    pub mp: usize,
    pub mm: usize,
}

impl OrientedGraph {
    /// Builds an oriented graph from an arc list. Duplicate arcs are
    /// collapsed; loops and two-cycles are rejected.
    pub fn build(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut g = OrientedGraph {
            n,
            m: 0,
            out: vec![VertexSet::empty(n); n],
            inn: vec![VertexSet::empty(n); n],
        };
        for &(u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::OutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.out[v].contains(u) {
            return Err(Error::TwoCycle(v, u));
        }
        if !self.out[u].contains(v) {
            self.out[u].insert(v);
            self.inn[v].insert(u);
            self.m += 1;
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.m
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out[u].contains(v)
    }

    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &VertexSet {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let out_degrees: Vec<usize> = (0..self.n).map(|v| self.out[v].len()).collect();
        let in_degrees: Vec<usize> = (0..self.n).map(|v| self.inn[v].len()).collect();
        let min_semi_degree = (0..self.n)
            .map(|v| out_degrees[v].min(in_degrees[v]))
            .min()
            .unwrap_or(0);
        let min_degree = (0..self.n)
            .map(|v| out_degrees[v] + in_degrees[v])
            .min()
            .unwrap_or(0);
        DegreeProfile {
            out_degrees,
            in_degrees,
            min_semi_degree,
            min_degree,
        }
    }

    /// True when every vertex pair is joined by exactly one arc.
    pub fn is_tournament(&self) -> bool {
        self.m == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// A tournament is semi-regular when its minimum semi-degree attains the
    /// maximum possible value `floor((n-1)/2)`. For odd order this is exactly
    /// regularity.
    pub fn is_semiregular_tournament(&self) -> bool {
        if !self.is_tournament() {
            return false;
        }
        if self.n == 0 {
            return true;
        }
        self.degree_profile().min_semi_degree == (self.n - 1) / 2
    }

    /// The graph with every arc reversed.
    pub fn reverse(&self) -> Self {
        OrientedGraph {
            n: self.n,
            m: self.m,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Subgraph induced on `s`. Returns the graph together with the list of
    /// original vertex labels: new vertex `i` is `map[i]`, in ascending order.
    pub fn induced(&self, s: &VertexSet) -> (Self, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let mut arcs = Vec::new();
        for (i, &v) in map.iter().enumerate() {
            for w in self.out[v].intersection(s).iter() {
                arcs.push((i, pos[w]));
            }
        }
        let g = OrientedGraph::build(map.len(), &arcs).expect("induced subgraph is oriented");
        (g, map)
    }

    /// Blow-up: vertex `v` becomes an independent class of `sizes[v]`
    /// vertices, and each arc becomes a complete one-way bipartite bundle.
    /// Classes are laid out in vertex order; the returned sets give the class
    /// of each original vertex.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<(Self, Vec<VertexSet>)> {
        if sizes.len() != self.n {
            return Err(Error::BadParameters(format!(
                "expected {} class sizes, got {}",
                self.n,
                sizes.len()
            )));
        }
        let total: usize = sizes.iter().sum();
        let mut offset = Vec::with_capacity(self.n);
        let mut next = 0;
        for &s in sizes {
            offset.push(next);
            next += s;
        }
        let mut arcs = Vec::with_capacity(self.m * 4);
        for (u, v) in self.arcs() {
            for i in 0..sizes[u] {
                for j in 0..sizes[v] {
                    arcs.push((offset[u] + i, offset[v] + j));
                }
            }
        }
        let g = OrientedGraph::build(total, &arcs)?;
        let classes = (0..self.n)
            .map(|v| {
                let members: Vec<usize> = (offset[v]..offset[v] + sizes[v]).collect();
                VertexSet::from_indices(total, &members)
            })
            .collect();
        Ok((g, classes))
    }

    /// Uniform blow-up with every class of size `t >= 1`.
    pub fn blow_up_uniform(&self, t: usize) -> Result<(Self, Vec<VertexSet>)> {
        if t == 0 {
            return Err(Error::ZeroSize);
        }
        self.blow_up(&vec![t; self.n])
    }

    /// Co-neighbourhood counts of the ordered pair `(u, v)` inside `a`.
    pub fn pair_stats(&self, u: usize, v: usize, a: &VertexSet) -> Result<PairStats> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::OutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let count = |x: &VertexSet, y: &VertexSet| x.intersection(y).count_common(a);
        Ok(PairStats {
            pp: count(&self.out[u], &self.out[v]),
            pm: count(&self.out[u], &self.inn[v]),
            mp: count(&self.inn[u], &self.out[v]),
            mm: count(&self.inn[u], &self.inn[v]),
        })
    }

    /// Number of arcs from `a` to `b`, as ordered pairs. The sets may
    /// overlap; arcs inside the overlap are counted once per direction they
    /// actually have.
    pub fn cross_arcs(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|u| self.out[u].count_common(b)).sum()
    }
}

impl std::fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrientedGraph(n={}, m={})", self.n, self.m)
    }
}

/// An ordered partition of the vertex set into three (possibly empty) parts.
/// Part indices are taken cyclically: part `i + 1` follows part `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tripartition {
    n: usize,
    parts: [VertexSet; 3],
}

impl Tripartition {
    pub fn new(n: usize, parts: [VertexSet; 3]) -> Result<Self> {
        let mut seen = VertexSet::empty(n);
        let mut total = 0;
        for p in &parts {
            if p.universe() != n {
                return Err(Error::NotAPartition);
            }
            total += p.len();
            seen.union_with(p);
        }
        if total != n || seen.len() != n {
            return Err(Error::NotAPartition);
        }
        Ok(Tripartition { n, parts })
    }

    /// Consecutive blocks of the given sizes.
    pub fn blocks(sizes: [usize; 3]) -> Self {
        let n = sizes[0] + sizes[1] + sizes[2];
        let mut parts = [
            VertexSet::empty(n),
            VertexSet::empty(n),
            VertexSet::empty(n),
        ];
        let mut v = 0;
        for (i, &s) in sizes.iter().enumerate() {
            for _ in 0..s {
                parts[i].insert(v);
                v += 1;
            }
        }
        Tripartition { n, parts }
    }

    /// Builds a tripartition from per-vertex part labels in `{0, 1, 2}`.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let mut parts = [
            VertexSet::empty(n),
            VertexSet::empty(n),
            VertexSet::empty(n),
        ];
        for (v, &l) in labels.iter().enumerate() {
            if l > 2 {
                return Err(Error::NotAPartition);
            }
            parts[l].insert(v);
        }
        Ok(Tripartition { n, parts })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn part(&self, i: usize) -> &VertexSet {
        &self.parts[i % 3]
    }

    pub fn parts(&self) -> &[VertexSet; 3] {
        &self.parts
    }

    pub fn sizes(&self) -> [usize; 3] {
        [self.parts[0].len(), self.parts[1].len(), self.parts[2].len()]
    }

    pub fn part_of(&self, v: usize) -> usize {
        (0..3).find(|&i| self.parts[i].contains(v)).expect("partition covers all vertices")
    }

    pub fn labels(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.part_of(v)).collect()
    }
}
