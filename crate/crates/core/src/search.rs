//! Budgeted exact searches on oriented graphs.
//!
//! Every search is deterministic: pattern vertices are processed in index
//! order and host candidates ascending (or in an explicitly supplied order),
//! so identical inputs give identical results. Budgets bound the number of
//! attempted assignments; a search that runs out reports `Exhausted` rather
//! than guessing, and `NotFound` always means an exhaustive refutation.

use crate::bitset::VertexSet;
use crate::digraph::{OrientedGraph, Tripartition};
use crate::error::{Error, Result};
use crate::patterns::{is_transitive_tournament, Pattern};
use std::collections::BTreeMap;
use std::ops::ControlFlow;

/// Caps for exact searches: `node_limit` bounds attempted assignments,
/// `copy_limit` bounds how many distinct copies an enumeration may collect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub copy_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 10_000_000,
            copy_limit: 1_000_000,
        }
    }
}

impl SearchBudget {
    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit,
            ..Default::default()
        }
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: u64::MAX,
            copy_limit: u64::MAX,
        }
    }
}

/// An injective arc-preserving map from a pattern into a host; `map[i]` is
/// the host vertex playing pattern vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// The set of host vertices used.
    pub fn vertex_set(&self, host_order: usize) -> VertexSet {
        VertexSet::from_indices(host_order, &self.map)
    }

    /// Re-checks injectivity and that every pattern arc lands on a host arc.
    pub fn verify(&self, pattern: &OrientedGraph, host: &OrientedGraph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let set = self.vertex_set(host.order());
        if set.len() != self.map.len() {
            return false;
        }
        pattern
            .arcs()
            .all(|(u, v)| host.has_arc(self.map[u], self.map[v]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbedOutcome {
    Found(Embedding),
    NotFound,
    Exhausted,
}

impl EmbedOutcome {
    pub fn found(&self) -> Option<&Embedding> {
        match self {
            EmbedOutcome::Found(e) => Some(e),
            _ => None,
        }
    }
}

struct Dfs<'a> {
    pattern: &'a OrientedGraph,
    host: &'a OrientedGraph,
    base: Vec<VertexSet>,
    order: Option<&'a [usize]>,
    map: Vec<usize>,
    used: VertexSet,
    nodes_left: u64,
    exhausted: bool,
}

impl<'a> Dfs<'a> {
    fn new(
        pattern: &'a OrientedGraph,
        host: &'a OrientedGraph,
        constraints: Option<&[VertexSet]>,
        order: Option<&'a [usize]>,
        node_limit: u64,
    ) -> Result<Self> {
        let n = host.order();
        let p = pattern.order();
        if let Some(cs) = constraints {
            if cs.len() != p {
                return Err(Error::BadParameters(format!(
                    "expected {p} constraint sets, got {}",
                    cs.len()
                )));
            }
        }
        let mut base = Vec::with_capacity(p);
        for i in 0..p {
            let mut cand = VertexSet::empty(n);
            for v in 0..n {
                if host.out_degree(v) >= pattern.out_degree(i)
                    && host.in_degree(v) >= pattern.in_degree(i)
                {
                    cand.insert(v);
                }
            }
            if let Some(cs) = constraints {
                cand.intersect_with(&cs[i]);
            }
            base.push(cand);
        }
        Ok(Dfs {
            pattern,
            host,
            base,
            order,
            map: Vec::with_capacity(p),
            used: VertexSet::empty(n),
            nodes_left: node_limit,
            exhausted: false,
        })
    }

    fn candidates(&self, i: usize) -> VertexSet {
        let mut cand = self.base[i].clone();
        for (j, &w) in self.map.iter().enumerate() {
            if self.pattern.has_arc(j, i) {
                cand.intersect_with(self.host.out_neighbors(w));
            }
            if self.pattern.has_arc(i, j) {
                cand.intersect_with(self.host.in_neighbors(w));
            }
        }
        cand.remove_all(&self.used);
        cand
    }

    fn run(&mut self, on_found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
        let _ = self.place(0, on_found);
    }

    fn try_vertex(
        &mut self,
        i: usize,
        v: usize,
        on_found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if self.nodes_left == 0 {
            self.exhausted = true;
            return ControlFlow::Break(());
        }
        self.nodes_left -= 1;
        self.map.push(v);
        self.used.insert(v);
        let flow = self.place(i + 1, on_found);
        self.used.remove(v);
        self.map.pop();
        flow
    }

    fn place(
        &mut self,
        i: usize,
        on_found: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == self.pattern.order() {
            return on_found(&self.map);
        }
        let cand = self.candidates(i);
        match self.order {
            None => {
                for v in cand.iter().collect::<Vec<_>>() {
                    self.try_vertex(i, v, on_found)?;
                }
            }
            Some(order) => {
                for idx in 0..order.len() {
                    let v = order[idx];
                    if cand.contains(v) {
                        self.try_vertex(i, v, on_found)?;
                    }
                }
            }
        }
        ControlFlow::Continue(())
    }
}

/// Searches for an embedding of `pattern` into `host`. `constraints`, when
/// given, restricts which host vertices each pattern vertex may use.
/// `NotFound` certifies that no embedding exists; `Exhausted` means the
/// budget ran out first.
pub fn embed(
    pattern: &OrientedGraph,
    host: &OrientedGraph,
    constraints: Option<&[VertexSet]>,
    budget: &SearchBudget,
) -> Result<EmbedOutcome> {
    embed_in_order(pattern, host, constraints, None, budget)
}

/// `embed` with an explicit host-candidate iteration order (a permutation of
/// the host vertices). Used for seeded sampling of copies; the search is
/// still exact.
pub fn embed_in_order(
    pattern: &OrientedGraph,
    host: &OrientedGraph,
    constraints: Option<&[VertexSet]>,
    order: Option<&[usize]>,
    budget: &SearchBudget,
) -> Result<EmbedOutcome> {
    if pattern.order() > host.order() {
        return Ok(EmbedOutcome::NotFound);
    }
    let mut found: Option<Embedding> = None;
    let mut dfs = Dfs::new(pattern, host, constraints, order, budget.node_limit)?;
    dfs.run(&mut |map| {
        found = Some(Embedding { map: map.to_vec() });
        ControlFlow::Break(())
    });
    Ok(match found {
        Some(e) => EmbedOutcome::Found(e),
        None if dfs.exhausted => EmbedOutcome::Exhausted,
        None => EmbedOutcome::NotFound,
    })
}

/// How a copy sits relative to a tripartition: wholly inside part `i`,
/// cross with role classes A, B, C wholly in parts `i`, `i+1`, `i+2`, or
/// mixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TileType {
    Within(usize),
    Cross(usize),
    Mixed,
}

impl std::fmt::Display for TileType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TileType::Within(i) => write!(f, "type-({})", i + 1),
            TileType::Cross(i) => write!(
                f,
                "type-({},{},{})",
                i + 1,
                (i + 1) % 3 + 1,
                (i + 2) % 3 + 1
            ),
            TileType::Mixed => write!(f, "mixed"),
        }
    }
}

/// One copy of a pattern: its vertex set, a witness embedding, and (when a
/// tripartition was supplied) its tile type.
#[derive(Clone, Debug)]
pub struct TileRecord {
    pub vertices: VertexSet,
    pub witness: Embedding,
    pub tile_type: Option<TileType>,
}

/// The result of a copy enumeration. `complete` is false when either the
/// node budget or the copy cap was hit, in which case `records` is only a
/// partial list.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub records: Vec<TileRecord>,
    pub complete: bool,
}

/// Classifies the vertex set of a pattern copy against a tripartition.
///
/// A set wholly inside part `i` is `Within(i)`. Otherwise, for role-carrying
/// patterns the set is `Cross(i)` when it splits as `(a, b, c)` over parts
/// `(i, i+1, i+2)` and those chunks genuinely play the roles A, B, C: each
/// induces the right transitive tournament and the chunks are joined
/// completely A -> B -> C -> A. Everything else is `Mixed`.
pub fn classify_set(
    pattern: &Pattern,
    host: &OrientedGraph,
    set: &VertexSet,
    tri: &Tripartition,
) -> TileType {
    for i in 0..3 {
        if set.is_subset(tri.part(i)) {
            return TileType::Within(i);
        }
    }
    let Some((a, b, c)) = pattern.role_sizes() else {
        return TileType::Mixed;
    };
    for i in 0..3 {
        let chunks = [
            set.intersection(tri.part(i)),
            set.intersection(tri.part(i + 1)),
            set.intersection(tri.part(i + 2)),
        ];
        if chunks[0].len() != a || chunks[1].len() != b || chunks[2].len() != c {
            continue;
        }
        let transitive = chunks.iter().all(|chunk| {
            let (sub, _) = host.induced(chunk);
            is_transitive_tournament(&sub)
        });
        if !transitive {
            continue;
        }
        let complete = (0..3).all(|j| {
            let (x, y) = (&chunks[j], &chunks[(j + 1) % 3]);
            host.cross_arcs(x, y) == x.len() * y.len()
        });
        if complete {
            return TileType::Cross(i);
        }
    }
    TileType::Mixed
}

/// Collects all distinct vertex sets carrying an embedding (one witness
/// each), up to the given caps. Returns the sets, whether the enumeration
/// ran to completion, and how many search nodes it spent.
pub(crate) fn collect_embeddings(
    pattern: &OrientedGraph,
    host: &OrientedGraph,
    constraints: Option<&[VertexSet]>,
    node_limit: u64,
    copy_limit: u64,
) -> Result<(BTreeMap<VertexSet, Embedding>, bool, u64)> {
    let mut seen: BTreeMap<VertexSet, Embedding> = BTreeMap::new();
    if pattern.order() > host.order() {
        return Ok((seen, true, 0));
    }
    let mut capped = false;
    let mut dfs = Dfs::new(pattern, host, constraints, None, node_limit)?;
    dfs.run(&mut |map| {
        let set = VertexSet::from_indices(host.order(), map);
        seen.entry(set).or_insert_with(|| Embedding { map: map.to_vec() });
        if seen.len() as u64 >= copy_limit {
            capped = true;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    let complete = !dfs.exhausted && !capped;
    Ok((seen, complete, node_limit - dfs.nodes_left))
}

/// Enumerates the distinct vertex sets carrying a copy of `pattern`,
/// each with one witness embedding, sorted by vertex set. With a
/// tripartition the records are typed.
pub fn enumerate_copies(
    pattern: &Pattern,
    host: &OrientedGraph,
    tri: Option<&Tripartition>,
    budget: &SearchBudget,
) -> Result<Enumeration> {
    let (seen, complete, _) = collect_embeddings(
        &pattern.graph,
        host,
        None,
        budget.node_limit,
        budget.copy_limit,
    )?;
    let records = seen
        .into_iter()
        .map(|(vertices, witness)| {
            let tile_type = tri.map(|t| classify_set(pattern, host, &vertices, t));
            TileRecord {
                vertices,
                witness,
                tile_type,
            }
        })
        .collect();
    Ok(Enumeration { records, complete })
}

/// Finds a transitive tournament on `k` vertices in a tournament on at least
/// `2^(k-1)` vertices by repeatedly taking a vertex of maximum out-degree
/// and recursing into its out-neighbourhood. The returned embedding lists
/// the vertices from source to sink.
pub fn find_tt(host: &OrientedGraph, k: usize) -> Result<Embedding> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    if !host.is_tournament() {
        return Err(Error::NotTournament);
    }
    let required = 1usize
        .checked_shl(k as u32 - 1)
        .ok_or(Error::BadParameters("k too large".into()))?;
    if host.order() < required {
        return Err(Error::TooSmall {
            required,
            actual: host.order(),
        });
    }
    let mut cand = VertexSet::full(host.order());
    let mut map = Vec::with_capacity(k);
    for _ in 0..k {
        let v = cand
            .iter()
            .max_by_key(|&v| {
                (
                    host.out_neighbors(v).count_common(&cand),
                    std::cmp::Reverse(v),
                )
            })
            .expect("candidate set stays large enough");
        map.push(v);
        cand.intersect_with(host.out_neighbors(v));
    }
    let embedding = Embedding { map };
    debug_assert!({
        let (sub, _) = host.induced(&embedding.vertex_set(host.order()));
        is_transitive_tournament(&sub)
    });
    Ok(embedding)
}

/// The longest square of a path found in the host, with its witness
/// sequence. `proven` is true when the search ran to completion, so the
/// value is exact; otherwise it is a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarePath {
    pub order: usize,
    pub witness: Vec<usize>,
    pub proven: bool,
}

/// Computes the largest `s` such that the host contains the square of a
/// path on `s` vertices: a sequence `z1 .. zs` with arcs `zi -> zi+1` and
/// `zi -> zi+2`.
pub fn longest_square_path_order(host: &OrientedGraph, budget: &SearchBudget) -> SquarePath {
    let n = host.order();
    if n == 0 {
        return SquarePath {
            order: 0,
            witness: Vec::new(),
            proven: true,
        };
    }
    let mut best = SquarePath {
        order: 1,
        witness: vec![0],
        proven: true,
    };
    let mut seq: Vec<usize> = Vec::with_capacity(n);
    let mut used = VertexSet::empty(n);
    let mut nodes_left = budget.node_limit;
    let mut exhausted = false;

    fn extend(
        host: &OrientedGraph,
        seq: &mut Vec<usize>,
        used: &mut VertexSet,
        best: &mut SquarePath,
        nodes_left: &mut u64,
        exhausted: &mut bool,
    ) {
        if seq.len() > best.order {
            best.order = seq.len();
            best.witness = seq.clone();
        }
        if best.order == host.order() {
            return;
        }
        let last = seq[seq.len() - 1];
        let mut cand = host.out_neighbors(last).clone();
        if seq.len() >= 2 {
            cand.intersect_with(host.out_neighbors(seq[seq.len() - 2]));
        }
        cand.remove_all(used);
        for v in cand.iter().collect::<Vec<_>>() {
            if *exhausted {
                return;
            }
            if *nodes_left == 0 {
                *exhausted = true;
                return;
            }
            *nodes_left -= 1;
            seq.push(v);
            used.insert(v);
            extend(host, seq, used, best, nodes_left, exhausted);
            used.remove(v);
            seq.pop();
        }
    }

    for start in 0..n {
        if exhausted || best.order == n {
            break;
        }
        seq.push(start);
        used.insert(start);
        extend(host, &mut seq, &mut used, &mut best, &mut nodes_left, &mut exhausted);
        used.remove(start);
        seq.pop();
    }
    best.proven = !exhausted;
    best
}

/// Searches for the `k`-th power of a directed cycle on `l` vertices:
/// a cyclic sequence `v0 .. v(l-1)` with arcs `vi -> vi+j (mod l)` for
/// `1 <= j <= k`. Requires `l >= 2k + 1` so that the pattern is oriented.
///
/// This is a dedicated search over cyclic sequences anchored at their
/// minimum vertex; `embed(power(directed_cycle(l), k), host)` is the
/// generic route and the two must agree.
pub fn contains_cycle_power(
    host: &OrientedGraph,
    l: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<EmbedOutcome> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    if l < 2 * k + 1 {
        return Err(Error::NotOriented { l, k });
    }
    let n = host.order();
    if l > n {
        return Ok(EmbedOutcome::NotFound);
    }

    struct CycleDfs<'a> {
        host: &'a OrientedGraph,
        l: usize,
        k: usize,
        seq: Vec<usize>,
        used: VertexSet,
        nodes_left: u64,
        exhausted: bool,
        found: Option<Vec<usize>>,
    }

    impl CycleDfs<'_> {
        fn place(&mut self, i: usize) -> ControlFlow<()> {
            if i == self.l {
                self.found = Some(self.seq.clone());
                return ControlFlow::Break(());
            }
            // Forward arcs from up to k predecessors, wrap-around arcs into
            // the first vertices once the tail is being placed, and the
            // anchor rule: v0 is the minimum of the copy.
            let mut cand = VertexSet::full(self.host.order());
            for j in i.saturating_sub(self.k)..i {
                cand.intersect_with(self.host.out_neighbors(self.seq[j]));
            }
            for t in 0..self.k.saturating_sub(self.l - 1 - i) {
                cand.intersect_with(self.host.in_neighbors(self.seq[t]));
            }
            cand.remove_all(&self.used);
            for v in cand.iter().collect::<Vec<_>>() {
                if v <= self.seq[0] {
                    continue;
                }
                if self.nodes_left == 0 {
                    self.exhausted = true;
                    return ControlFlow::Break(());
                }
                self.nodes_left -= 1;
                self.seq.push(v);
                self.used.insert(v);
                self.place(i + 1)?;
                self.used.remove(v);
                self.seq.pop();
            }
            ControlFlow::Continue(())
        }
    }

    let mut dfs = CycleDfs {
        host,
        l,
        k,
        seq: Vec::with_capacity(l),
        used: VertexSet::empty(n),
        nodes_left: budget.node_limit,
        exhausted: false,
        found: None,
    };
    for start in 0..n {
        dfs.seq.push(start);
        dfs.used.insert(start);
        let flow = dfs.place(1);
        dfs.used.remove(start);
        dfs.seq.pop();
        if flow.is_break() {
            break;
        }
    }
    Ok(match dfs.found {
        Some(map) => EmbedOutcome::Found(Embedding { map }),
        None if dfs.exhausted => EmbedOutcome::Exhausted,
        None => EmbedOutcome::NotFound,
    })
}

/// Number of ordered triples `(v1, v2, v3)` in `a x b x c` spanning a
/// directed triangle `v1 -> v2 -> v3 -> v1`.
pub fn cyc_count(g: &OrientedGraph, a: &VertexSet, b: &VertexSet, c: &VertexSet) -> u64 {
    let mut count = 0u64;
    for v1 in a.iter() {
        for v2 in g.out_neighbors(v1).intersection(b).iter() {
            count += g
                .out_neighbors(v2)
                .intersection(g.in_neighbors(v1))
                .count_common(c) as u64;
        }
    }
    count
}

/// Number of vertex-distinct quadruples `(v1, v2, v3, v4)` in
/// `a x b x c x d` carrying the labelled `K_4`-minus-an-edge: arcs
/// `v1 -> v2, v2 -> v3, v3 -> v1, v3 -> v4, v4 -> v2` (the pair `v1, v4`
/// is unconstrained).
pub fn k4m_count(
    g: &OrientedGraph,
    a: &VertexSet,
    b: &VertexSet,
    c: &VertexSet,
    d: &VertexSet,
) -> u64 {
    let mut count = 0u64;
    for v2 in b.iter() {
        for v3 in g.out_neighbors(v2).intersection(c).iter() {
            let shared = g.out_neighbors(v3).intersection(g.in_neighbors(v2));
            let n1 = shared.count_common(a) as u64;
            let n4 = shared.count_common(d) as u64;
            let both = shared.intersection(a).count_common(d) as u64;
            count += n1 * n4 - both;
        }
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// The strong neighbourhood of `a`: for `Plus`, the vertices outside `a`
/// with in-degree at least `|a| - slack` from `a` (almost completely
/// dominated by `a`); for `Minus`, the same with out-degree into `a`.
pub fn strong_neighborhood(
    g: &OrientedGraph,
    a: &VertexSet,
    slack: usize,
    sign: Sign,
) -> VertexSet {
    let threshold = a.len().saturating_sub(slack);
    let mut out = VertexSet::empty(g.order());
    for x in a.complement().iter() {
        let degree = match sign {
            Sign::Plus => g.in_neighbors(x).count_common(a),
            Sign::Minus => g.out_neighbors(x).count_common(a),
        };
        if degree >= threshold {
            out.insert(x);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{f_graph, round_tournament};
    use crate::patterns::{self, d_abc, directed_cycle, k4_minus, transitive_tournament};

    fn unlimited() -> SearchBudget {
        SearchBudget::unlimited()
    }

    /// Exhaustive reference: try every injective assignment.
    fn naive_embeds(pattern: &OrientedGraph, host: &OrientedGraph) -> bool {
        fn rec(
            pattern: &OrientedGraph,
            host: &OrientedGraph,
            map: &mut Vec<usize>,
        ) -> bool {
            let i = map.len();
            if i == pattern.order() {
                return true;
            }
            'next: for v in 0..host.order() {
                if map.contains(&v) {
                    continue;
                }
                for (j, &w) in map.iter().enumerate() {
                    if pattern.has_arc(j, i) && !host.has_arc(w, v) {
                        continue 'next;
                    }
                    if pattern.has_arc(i, j) && !host.has_arc(v, w) {
                        continue 'next;
                    }
                }
                map.push(v);
                if rec(pattern, host, map) {
                    return true;
                }
                map.pop();
            }
            false
        }
        rec(pattern, host, &mut Vec::new())
    }

    #[test]
    fn embed_matches_naive_oracle_on_random_instances() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        let pool: Vec<Pattern> = vec![
            transitive_tournament(3).unwrap(),
            transitive_tournament(4).unwrap(),
            directed_cycle(3).unwrap(),
            directed_cycle(4).unwrap(),
            patterns::directed_path(4).unwrap(),
            k4_minus(),
        ];
        for trial in 0..60 {
            let n = rng.random_range(4..=7);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    match rng.random_range(0..3) {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => {}
                    }
                }
            }
            let host = OrientedGraph::build(n, &arcs).unwrap();
            let pattern = &pool[trial % pool.len()];
            let outcome = embed(&pattern.graph, &host, None, &unlimited()).unwrap();
            let expected = naive_embeds(&pattern.graph, &host);
            match outcome {
                EmbedOutcome::Found(e) => {
                    assert!(expected, "trial {trial}");
                    assert!(e.verify(&pattern.graph, &host));
                }
                EmbedOutcome::NotFound => assert!(!expected, "trial {trial}"),
                EmbedOutcome::Exhausted => panic!("unlimited budget exhausted"),
            }
        }
    }

    #[test]
    fn embed_respects_constraints_and_budget() {
        let (host, tri) = f_graph(1).unwrap();
        let c3 = directed_cycle(3).unwrap();
        let cs = [
            tri.part(0).clone(),
            tri.part(1).clone(),
            tri.part(2).clone(),
        ];
        let found = embed(&c3.graph, &host, Some(&cs), &unlimited()).unwrap();
        let e = found.found().expect("cross triangle exists").clone();
        assert!(tri.part(0).contains(e.map[0]) && tri.part(2).contains(e.map[2]));

        // Pinning all three vertices to one class of a transitive-free part:
        // class 0 of f_graph(1) is a triangle, so it does contain one.
        let cs = [
            tri.part(0).clone(),
            tri.part(0).clone(),
            tri.part(0).clone(),
        ];
        assert!(matches!(
            embed(&c3.graph, &host, Some(&cs), &unlimited()).unwrap(),
            EmbedOutcome::Found(_)
        ));

        let tt4 = transitive_tournament(4).unwrap();
        assert_eq!(
            embed(&tt4.graph, &host, None, &SearchBudget::nodes(1)).unwrap(),
            EmbedOutcome::Exhausted
        );
    }

    #[test]
    fn pattern_too_large_is_not_found() {
        let host = round_tournament(3).unwrap();
        let tt4 = transitive_tournament(4).unwrap();
        assert_eq!(
            embed(&tt4.graph, &host, None, &unlimited()).unwrap(),
            EmbedOutcome::NotFound
        );
    }

    #[test]
    fn enumerate_triangles_in_f1() {
        let (host, tri) = f_graph(1).unwrap();
        let c3 = directed_cycle(3).unwrap();
        let en = enumerate_copies(&c3, &host, Some(&tri), &unlimited()).unwrap();
        assert!(en.complete);
        assert_eq!(en.records.len(), 30);
        let mut within = 0;
        let mut cross = 0;
        for r in &en.records {
            match r.tile_type.unwrap() {
                TileType::Within(_) => within += 1,
                TileType::Cross(0) => cross += 1,
                t => panic!("unexpected type {t}"),
            }
            assert!(r.witness.verify(&c3.graph, &host));
        }
        assert_eq!((within, cross), (3, 27));
    }

    #[test]
    fn enumerate_respects_copy_cap() {
        let (host, _) = f_graph(1).unwrap();
        let c3 = directed_cycle(3).unwrap();
        let mut budget = SearchBudget::unlimited();
        budget.copy_limit = 5;
        let en = enumerate_copies(&c3, &host, None, &budget).unwrap();
        assert_eq!(en.records.len(), 5);
        assert!(!en.complete);
    }

    #[test]
    fn tt_extraction_in_small_tournaments() {
        let g = round_tournament(4).unwrap();
        let e = find_tt(&g, 3).unwrap();
        let (sub, _) = g.induced(&e.vertex_set(4));
        assert!(is_transitive_tournament(&sub));
        assert!(g.has_arc(e.map[0], e.map[1]) && g.has_arc(e.map[1], e.map[2]));

        let g = round_tournament(8).unwrap();
        let e = find_tt(&g, 4).unwrap();
        let (sub, _) = g.induced(&e.vertex_set(8));
        assert!(is_transitive_tournament(&sub));

        assert_eq!(
            find_tt(&round_tournament(3).unwrap(), 3),
            Err(Error::TooSmall { required: 4, actual: 3 })
        );
        let path = OrientedGraph::build(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_tt(&path, 2), Err(Error::NotTournament));
    }

    #[test]
    fn square_paths_in_transitive_and_cyclic_hosts() {
        let tt5 = transitive_tournament(5).unwrap().graph;
        let r = longest_square_path_order(&tt5, &unlimited());
        assert_eq!((r.order, r.proven), (5, true));
        assert_eq!(r.witness, vec![0, 1, 2, 3, 4]);

        let c3 = round_tournament(3).unwrap();
        let r = longest_square_path_order(&c3, &unlimited());
        assert_eq!(r.order, 2);

        let r = longest_square_path_order(&tt5, &SearchBudget::nodes(1));
        assert!(!r.proven);
    }

    #[test]
    fn cycle_power_search_agrees_with_generic_embedding() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(11);
        for trial in 0..20 {
            let n = rng.random_range(5..=9);
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    match rng.random_range(0..3) {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => {}
                    }
                }
            }
            let host = OrientedGraph::build(n, &arcs).unwrap();
            let l = rng.random_range(5..=7);
            let direct = contains_cycle_power(&host, l, 2, &unlimited()).unwrap();
            let generic = embed(
                &patterns::power(&directed_cycle(l).unwrap(), 2).unwrap().graph,
                &host,
                None,
                &unlimited(),
            )
            .unwrap();
            assert_eq!(
                matches!(direct, EmbedOutcome::Found(_)),
                matches!(generic, EmbedOutcome::Found(_)),
                "trial {trial}, l={l}"
            );
            if let EmbedOutcome::Found(e) = direct {
                let p = patterns::power(&directed_cycle(l).unwrap(), 2).unwrap();
                assert!(e.verify(&p.graph, &host));
            }
        }
    }

    #[test]
    fn cycle_power_base_cases() {
        let r7 = round_tournament(7).unwrap();
        assert!(matches!(
            contains_cycle_power(&r7, 7, 2, &unlimited()).unwrap(),
            EmbedOutcome::Found(_)
        ));
        let tt5 = transitive_tournament(5).unwrap().graph;
        assert_eq!(
            contains_cycle_power(&tt5, 5, 2, &unlimited()).unwrap(),
            EmbedOutcome::NotFound
        );
        assert_eq!(
            contains_cycle_power(&r7, 4, 2, &unlimited()),
            Err(Error::NotOriented { l: 4, k: 2 })
        );
    }

    #[test]
    fn triangle_and_k4_minus_counts() {
        let (g, tri) = f_graph(1).unwrap();
        let all = VertexSet::full(9);
        let c1 = tri.part(0);
        assert_eq!(cyc_count(&g, c1, c1, c1), 3);
        assert_eq!(cyc_count(&g, c1, tri.part(1), tri.part(2)), 27);
        // No triangle has two vertices in one class and one in another.
        assert_eq!(cyc_count(&g, c1, c1, &c1.complement()), 0);

        let k4m = k4_minus().graph;
        let single = |v: usize| VertexSet::from_indices(4, &[v]);
        assert_eq!(
            k4m_count(&k4m, &single(0), &single(1), &single(2), &single(3)),
            1
        );
        let tt4 = transitive_tournament(4).unwrap().graph;
        let all4 = VertexSet::full(4);
        assert_eq!(k4m_count(&tt4, &all4, &all4, &all4, &all4), 0);
        // Regression fixtures for f_graph(1), frozen from an independent
        // brute-force census: no copy can anchor v1 in a class and v4
        // outside it, while one-per-class placements are unconstrained.
        assert_eq!(k4m_count(&g, c1, &all, &all, &c1.complement()), 0);
        assert_eq!(k4m_count(&g, c1, tri.part(1), tri.part(2), c1), 54);
        assert_eq!(k4m_count(&g, &all, &all, &all, &all), 162);
    }

    #[test]
    fn strong_neighborhoods_in_f1() {
        let (g, tri) = f_graph(1).unwrap();
        let sn_plus = strong_neighborhood(&g, tri.part(0), 0, Sign::Plus);
        assert_eq!(&sn_plus, tri.part(1));
        let sn_minus = strong_neighborhood(&g, tri.part(0), 0, Sign::Minus);
        assert_eq!(&sn_minus, tri.part(2));
        // With slack 3 every outside vertex qualifies.
        let sn_all = strong_neighborhood(&g, tri.part(0), 3, Sign::Plus);
        assert_eq!(sn_all.len(), 6);
    }
}
