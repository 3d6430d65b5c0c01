//! Host-graph constructions: round tournaments, triangle blow-ups of
//! tournaments, and the sharpness examples that defeat tiling or embedding.

use crate::digraph::{OrientedGraph, Tripartition};
use crate::error::{Error, Result};
use crate::patterns::d_abc;

/// The round tournament on `n` vertices: out-neighbourhoods are cyclic
/// windows starting right after each vertex. For odd `n` every window has
/// length `(n-1)/2` (the rotational regular tournament); for even `n` every
/// vertex gets a window of length `n/2 - 1` and the first half additionally
/// beats its antipode, which makes the result semi-regular.
pub fn round_tournament(n: usize) -> Result<OrientedGraph> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    let mut arcs = Vec::new();
    let window = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 - 1 };
    for i in 0..n {
        for j in 1..=window {
            arcs.push((i, (i + j) % n));
        }
        if n % 2 == 0 && i < n / 2 {
            arcs.push((i, i + n / 2));
        }
    }
    OrientedGraph::build(n, &arcs)
}

/// Blow-up of the directed triangle with the three given graphs substituted
/// into its classes: disjoint copies of `g1`, `g2`, `g3` laid out as
/// consecutive blocks, joined completely block 1 -> block 2 -> block 3 ->
/// block 1.
pub fn c3_blowup_of(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    g3: &OrientedGraph,
) -> Result<(OrientedGraph, Tripartition)> {
    let sizes = [g1.order(), g2.order(), g3.order()];
    if sizes.contains(&0) {
        return Err(Error::ZeroPart);
    }
    let n = sizes[0] + sizes[1] + sizes[2];
    let offsets = [0, sizes[0], sizes[0] + sizes[1]];
    let mut arcs = Vec::new();
    for (i, g) in [g1, g2, g3].into_iter().enumerate() {
        for (u, v) in g.arcs() {
            arcs.push((offsets[i] + u, offsets[i] + v));
        }
        let j = (i + 1) % 3;
        for u in 0..sizes[i] {
            for v in 0..sizes[j] {
                arcs.push((offsets[i] + u, offsets[j] + v));
            }
        }
    }
    Ok((OrientedGraph::build(n, &arcs)?, Tripartition::blocks(sizes)))
}

/// The 4t-regular tournament `F(t)` on `9t` vertices: three directed
/// triangles joined completely class 1 -> class 2 -> class 3 -> class 1,
/// then blown up uniformly by `t`.
pub fn f_graph(t: usize) -> Result<(OrientedGraph, Tripartition)> {
    if t == 0 {
        return Err(Error::ZeroSize);
    }
    let triangle = round_tournament(3)?;
    let (base, _) = c3_blowup_of(&triangle, &triangle, &triangle)?;
    let (g, _) = base.blow_up_uniform(t)?;
    // Blocks stay contiguous under the uniform blow-up.
    Ok((g, Tripartition::blocks([3 * t, 3 * t, 3 * t])))
}

const SQUARE_EXCLUDER_OUT: [[usize; 3]; 8] = [
    [1, 2, 3],
    [2, 4, 5],
    [3, 5, 6],
    [1, 4, 6],
    [0, 5, 7],
    [0, 6, 7],
    [0, 4, 7],
    [1, 2, 3],
];

/// The 3t-regular oriented graph on `8t` vertices whose longest square of a
/// path has 6 vertices: a fixed 3-regular 8-vertex base, blown up uniformly
/// by `t`.
pub fn p_square_excluder(t: usize) -> Result<OrientedGraph> {
    if t == 0 {
        return Err(Error::ZeroSize);
    }
    let mut arcs = Vec::new();
    for (u, outs) in SQUARE_EXCLUDER_OUT.iter().enumerate() {
        for &v in outs {
            arcs.push((u, v));
        }
    }
    let base = OrientedGraph::build(8, &arcs)?;
    let (g, _) = base.blow_up_uniform(t)?;
    Ok(g)
}

/// `D_{a,b,c}` with one extra vertex `w` wrapped around the Hamiltonian path
/// of the third class: with `v` the source and `u` the sink of the class-C
/// transitive tournament, adds `u -> w` and `w -> v`. The result has
/// `a + b + c + 1` vertices and contains many transitive tournaments yet
/// embeds in no `D_{s,s,s}`.
pub fn turanable_noncontainment(a: usize, b: usize, c: usize) -> Result<OrientedGraph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::ZeroPart);
    }
    if c < 2 {
        return Err(Error::PartTooSmall);
    }
    let base = d_abc(a, b, c)?.graph;
    let n = a + b + c;
    let w = n;
    let source = a + b;
    let sink = n - 1;
    let mut arcs: Vec<(usize, usize)> = base.arcs().collect();
    arcs.push((sink, w));
    arcs.push((w, source));
    OrientedGraph::build(n + 1, &arcs)
}

/// The semi-regular tournament on `6hk` vertices (`h = a + b + c`) with no
/// `D_{a,b,c}`-factor: a triangle blow-up with round tournaments of orders
/// `2hk + 1`, `2hk - 1`, `2hk` in its parts, with a perfect matching from
/// the high-out-degree half of part 3 back to part 1 reversed.
///
/// Requires `2 <= a <= b <= c`, `c >= 3` and `k >= 1`.
pub fn no_factor_tournament_abc(
    a: usize,
    b: usize,
    c: usize,
    k: usize,
) -> Result<(OrientedGraph, Tripartition)> {
    if !(2 <= a && a <= b && b <= c) {
        return Err(Error::BadParameters(
            "need 2 <= a <= b <= c".into(),
        ));
    }
    if c < 3 {
        return Err(Error::BadParameters("need c >= 3".into()));
    }
    if k == 0 {
        return Err(Error::BadParameters("need k >= 1".into()));
    }
    let h = a + b + c;
    let hk = h * k;
    let t1 = round_tournament(2 * hk + 1)?;
    let t2 = round_tournament(2 * hk - 1)?;
    let t3 = round_tournament(2 * hk)?;
    let (blown, tri) = c3_blowup_of(&t1, &t2, &t3)?;
    let off3 = t1.order() + t2.order();
    // Reverse the matching from the first half of part 3 (the vertices of
    // out-degree hk inside their round tournament) onto the first hk
    // vertices of part 1.
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(blown.arc_count());
    for (u, v) in blown.arcs() {
        if u >= off3 && u - off3 < hk && v == u - off3 {
            arcs.push((v, u));
        } else {
            arcs.push((u, v));
        }
    }
    let g = OrientedGraph::build(blown.order(), &arcs)?;
    debug_assert!(g.is_semiregular_tournament());
    Ok((g, tri))
}

/// The semi-regular tournament on `(3k + 1)h` vertices (`h = 1 + b + c`)
/// with no `D_{1,b,c}`-factor: a triangle blow-up with round tournaments of
/// orders `hk + ceil(h/3)`, `hk + floor(h/3)` and `hk + (h - r1 - r2)` in
/// its parts. Defined only when `h` is not divisible by three.
pub fn no_factor_tournament_1bc(
    b: usize,
    c: usize,
    k: usize,
) -> Result<(OrientedGraph, Tripartition)> {
    if b == 0 || c == 0 || b > c {
        return Err(Error::BadParameters("need 1 <= b <= c".into()));
    }
    if k == 0 {
        return Err(Error::BadParameters("need k >= 1".into()));
    }
    let h = 1 + b + c;
    if h % 3 == 0 {
        return Err(Error::DivisibleByThree(h as i64));
    }
    let hk = h * k;
    let r1 = h.div_ceil(3);
    let r2 = h / 3;
    let r3 = h - r1 - r2;
    let t1 = round_tournament(hk + r1)?;
    let t2 = round_tournament(hk + r2)?;
    let t3 = round_tournament(hk + r3)?;
    let out = c3_blowup_of(&t1, &t2, &t3)?;
    debug_assert!(out.0.is_semiregular_tournament());
    Ok(out)
}

/// The tournament on `9st + 6s - 3` vertices whose maximum
/// `D_{s,s,s}`-tiling must leave at least `2h - 3 = 6s - 3` vertices
/// uncovered: a triangle blow-up with round tournaments of orders
/// `3st + s - 1`, `3st + 2s - 1`, `3st + 3s - 1` in its parts.
pub fn remark_sharpness_graph(s: usize, t: usize) -> Result<(OrientedGraph, Tripartition)> {
    if s == 0 || t == 0 {
        return Err(Error::ZeroSize);
    }
    let t1 = round_tournament(3 * s * t + s - 1)?;
    let t2 = round_tournament(3 * s * t + 2 * s - 1)?;
    let t3 = round_tournament(3 * s * t + 3 * s - 1)?;
    c3_blowup_of(&t1, &t2, &t3)
}
