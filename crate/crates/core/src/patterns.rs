//! Pattern graphs for embedding and tiling searches.
//!
//! A pattern is a small oriented graph, optionally carrying a three-class
//! role assignment. Roles mark the triangle blow-up structure `D_{a,b,c}`:
//! class A induces a transitive tournament on `a` vertices, likewise B and C,
//! and all arcs run A -> B -> C -> A between classes.

use crate::bitset::VertexSet;
use crate::digraph::OrientedGraph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    A,
    B,
    C,
}

impl Role {
    pub fn label(self) -> char {
        match self {
            Role::A => 'A',
            Role::B => 'B',
            Role::C => 'C',
        }
    }

    pub fn from_label(c: char) -> Option<Role> {
        match c {
            'A' => Some(Role::A),
            'B' => Some(Role::B),
            'C' => Some(Role::C),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Role::A => 0,
            Role::B => 1,
            Role::C => 2,
        }
    }
}

/// How a pattern was constructed. Powers are only defined for cycles and
/// paths, so the kind is tracked rather than re-derived from the arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    TransitiveTournament(usize),
    Cycle(usize),
    Path(usize),
    CyclePower(usize, usize),
    PathPower(usize, usize),
    Dabc(usize, usize, usize),
    K4Minus,
    Custom,
}

#[derive(Clone, Debug)]
pub struct Pattern {
    pub graph: OrientedGraph,
    pub roles: Option<Vec<Role>>,
    pub name: String,
    kind: PatternKind,
}

impl Pattern {
    pub fn custom(graph: OrientedGraph, roles: Option<Vec<Role>>, name: &str) -> Result<Self> {
        if let Some(r) = &roles {
            if r.len() != graph.order() {
                return Err(Error::BadPattern(format!(
                    "{} roles for {} vertices",
                    r.len(),
                    graph.order()
                )));
            }
        }
        let p = Pattern {
            graph,
            roles,
            name: name.to_string(),
            kind: PatternKind::Custom,
        };
        if p.roles.is_some() {
            p.validate_roles()?;
        }
        Ok(p)
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Class sizes `(a, b, c)` when the pattern carries roles.
    pub fn role_sizes(&self) -> Option<(usize, usize, usize)> {
        let roles = self.roles.as_ref()?;
        let mut sizes = [0usize; 3];
        for r in roles {
            sizes[r.index()] += 1;
        }
        Some((sizes[0], sizes[1], sizes[2]))
    }

    /// Vertices of the given role, as a set over the pattern's vertices.
    pub fn role_class(&self, role: Role) -> Option<VertexSet> {
        let roles = self.roles.as_ref()?;
        let members: Vec<usize> = roles
            .iter()
            .enumerate()
            .filter(|(_, r)| **r == role)
            .map(|(v, _)| v)
            .collect();
        Some(VertexSet::from_indices(self.order(), &members))
    }

    fn validate_roles(&self) -> Result<()> {
        let (a, b, c) = self.role_sizes().expect("roles present");
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::BadPattern("every role class must be non-empty".into()));
        }
        let classes = [
            self.role_class(Role::A).unwrap(),
            self.role_class(Role::B).unwrap(),
            self.role_class(Role::C).unwrap(),
        ];
        for i in 0..3 {
            let (sub, _) = self.graph.induced(&classes[i]);
            if !is_transitive_tournament(&sub) {
                return Err(Error::BadPattern(format!(
                    "role class {} must induce a transitive tournament",
                    ['A', 'B', 'C'][i]
                )));
            }
            let next = &classes[(i + 1) % 3];
            let forward = self.graph.cross_arcs(&classes[i], next);
            if forward != classes[i].len() * next.len() {
                return Err(Error::BadPattern(
                    "role classes must be joined completely A -> B -> C -> A".into(),
                ));
            }
        }
        Ok(())
    }
}

/// True when the graph is a tournament with no directed cycle, i.e. a
/// transitive tournament.
pub fn is_transitive_tournament(g: &OrientedGraph) -> bool {
    if !g.is_tournament() {
        return false;
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.out_degree(v)));
    let n = order.len();
    (0..n).all(|i| (i + 1..n).all(|j| g.has_arc(order[i], order[j])))
}

/// The transitive tournament on `k >= 1` vertices; vertex `i` beats every
/// vertex `j > i`.
pub fn transitive_tournament(k: usize) -> Result<Pattern> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    let mut arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            arcs.push((i, j));
        }
    }
    Ok(Pattern {
        graph: OrientedGraph::build(k, &arcs)?,
        roles: None,
        name: format!("tt:{k}"),
        kind: PatternKind::TransitiveTournament(k),
    })
}

/// The directed cycle on `l >= 3` vertices. The triangle `l = 3` is
/// `d_abc(1, 1, 1)` and carries roles so that tilings can be typed.
pub fn directed_cycle(l: usize) -> Result<Pattern> {
    if l < 3 {
        return Err(Error::TooSmall { required: 3, actual: l });
    }
    let arcs: Vec<(usize, usize)> = (0..l).map(|i| (i, (i + 1) % l)).collect();
    Ok(Pattern {
        graph: OrientedGraph::build(l, &arcs)?,
        roles: (l == 3).then(|| vec![Role::A, Role::B, Role::C]),
        name: format!("cyc:{l}"),
        kind: PatternKind::Cycle(l),
    })
}

/// The directed path on `l >= 1` vertices (so with `l - 1` arcs).
pub fn directed_path(l: usize) -> Result<Pattern> {
    if l == 0 {
        return Err(Error::ZeroSize);
    }
    let arcs: Vec<(usize, usize)> = (1..l).map(|i| (i - 1, i)).collect();
    Ok(Pattern {
        graph: OrientedGraph::build(l, &arcs)?,
        roles: None,
        name: format!("path:{l}"),
        kind: PatternKind::Path(l),
    })
}

/// The `k`-th power of a directed cycle or path: an arc `x -> y` whenever
/// `y` is 1 to `k` steps after `x`. Cycle powers need `l >= 2k + 1` to stay
/// oriented.
pub fn power(p: &Pattern, k: usize) -> Result<Pattern> {
    if k == 0 {
        return Err(Error::ZeroSize);
    }
    match p.kind {
        PatternKind::Cycle(l) => {
            if l < 2 * k + 1 {
                return Err(Error::NotOriented { l, k });
            }
            let mut arcs = Vec::new();
            for i in 0..l {
                for j in 1..=k {
                    arcs.push((i, (i + j) % l));
                }
            }
            Ok(Pattern {
                graph: OrientedGraph::build(l, &arcs)?,
                roles: None,
                name: format!("cycpow:{l},{k}"),
                kind: PatternKind::CyclePower(l, k),
            })
        }
        PatternKind::Path(l) => {
            let mut arcs = Vec::new();
            for i in 0..l {
                for j in 1..=k {
                    if i + j < l {
                        arcs.push((i, i + j));
                    }
                }
            }
            Ok(Pattern {
                graph: OrientedGraph::build(l, &arcs)?,
                roles: None,
                name: format!("pathpow:{l},{k}"),
                kind: PatternKind::PathPower(l, k),
            })
        }
        _ => Err(Error::BadPattern(
            "powers are defined for directed cycles and paths only".into(),
        )),
    }
}

/// The triangle blow-up `D_{a,b,c}`: transitive tournaments of orders `a`,
/// `b`, `c` on the role classes, joined completely A -> B -> C -> A.
/// Vertices `0..a` are A, `a..a+b` are B, `a+b..a+b+c` are C, each class in
/// its transitive order.
pub fn d_abc(a: usize, b: usize, c: usize) -> Result<Pattern> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::ZeroPart);
    }
    let n = a + b + c;
    let class = |v: usize| -> usize {
        if v < a {
            0
        } else if v < a + b {
            1
        } else {
            2
        }
    };
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (cu, cv) = (class(u), class(v));
            if cu == cv {
                if u < v {
                    arcs.push((u, v));
                }
            } else if (cu + 1) % 3 == cv {
                arcs.push((u, v));
            }
        }
    }
    let mut roles = Vec::with_capacity(n);
    roles.extend(std::iter::repeat_n(Role::A, a));
    roles.extend(std::iter::repeat_n(Role::B, b));
    roles.extend(std::iter::repeat_n(Role::C, c));
    Ok(Pattern {
        graph: OrientedGraph::build(n, &arcs)?,
        roles: Some(roles),
        name: format!("dabc:{a},{b},{c}"),
        kind: PatternKind::Dabc(a, b, c),
    })
}

/// `d_abc` with the class sizes sorted ascending first.
pub fn d_abc_normalized(a: usize, b: usize, c: usize) -> Result<Pattern> {
    let mut s = [a, b, c];
    s.sort_unstable();
    d_abc(s[0], s[1], s[2])
}

/// The oriented `K_4` minus one edge: two directed triangles `v1 v2 v3` and
/// `v2 v3 v4` sharing the arc `v2 -> v3`; `v1` and `v4` are non-adjacent.
pub fn k4_minus() -> Pattern {
    let arcs = [(0, 1), (1, 2), (2, 0), (2, 3), (3, 1)];
    Pattern {
        graph: OrientedGraph::build(4, &arcs).expect("fixed arc list"),
        roles: None,
        name: "k4m".to_string(),
        kind: PatternKind::K4Minus,
    }
}

/// Parses the pattern mini-grammar used by the command line and FFI:
/// `dabc:a,b,c | tt:k | cyc:l | path:l | cycpow:l,k | pathpow:l,k | k4m`.
pub fn parse_pattern(spec: &str) -> Result<Pattern> {
    let spec = spec.trim();
    let (head, tail) = match spec.split_once(':') {
        Some((h, t)) => (h, Some(t)),
        None => (spec, None),
    };
    let nums = |t: Option<&str>, want: usize| -> Result<Vec<usize>> {
        let t = t.ok_or_else(|| Error::Parse(format!("`{head}` needs {want} parameter(s)")))?;
        let parts: Vec<&str> = t.split(',').collect();
        if parts.len() != want {
            return Err(Error::Parse(format!(
                "`{head}` needs {want} parameter(s), got {}",
                parts.len()
            )));
        }
        parts
            .iter()
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad number `{p}` in pattern spec")))
            })
            .collect()
    };
    match head {
        "dabc" => {
            let v = nums(tail, 3)?;
            d_abc(v[0], v[1], v[2])
        }
        "tt" => transitive_tournament(nums(tail, 1)?[0]),
        "cyc" => directed_cycle(nums(tail, 1)?[0]),
        "path" => directed_path(nums(tail, 1)?[0]),
        "cycpow" => {
            let v = nums(tail, 2)?;
            power(&directed_cycle(v[0])?, v[1])
        }
        "pathpow" => {
            let v = nums(tail, 2)?;
            power(&directed_path(v[0])?, v[1])
        }
        "k4m" => {
            if tail.is_some() {
                return Err(Error::Parse("`k4m` takes no parameters".into()));
            }
            Ok(k4_minus())
        }
        other => Err(Error::Parse(format!("unknown pattern `{other}`"))),
    }
}
