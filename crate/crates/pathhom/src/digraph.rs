//! Finite digraphs, digraph maps, and the standard constructions (Cartesian
//! products, cylinders, line/cycle/simplex/cube families) that the rest of the
//! crate computes over.
//!
//! A digraph here is a finite vertex set with directed edges and no self-loops.
//! Vertices carry external string names; internally everything runs on dense
//! indices in declaration order, which fixes the basis ordering used by the
//! chain and homology layers.

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("self-loop on vertex `{0}` is not allowed")]
    SelfLoop(String),
    #[error("edge references undeclared vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),
    #[error("cycle digraph needs length >= 3, got {0}")]
    CycleTooShort(usize),
    #[error("assignment is not a digraph map: edge {0} -> {1} has no image relation")]
    NotADigraphMap(String, String),
    #[error("assignment has wrong length: expected {expected}, got {got}")]
    BadAssignment { expected: usize, got: usize },
    #[error("maps are not composable/comparable: {0}")]
    Mismatch(String),
}

/// A finite directed graph without self-loops. Immutable after construction;
/// all constructions return new values.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({} vertices: ", self.names.len())?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", self.names[*u], self.names[*v])?;
        }
        write!(f, ")")
    }
}

impl Digraph {
    /// Builds a digraph from named vertices and named edges. Duplicate edges
    /// collapse silently (edge-set semantics); self-loops and unknown
    /// endpoints are rejected.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Digraph, DigraphError> {
        let names: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(DigraphError::DuplicateVertex(n.clone()));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let a = a.as_ref();
            let b = b.as_ref();
            let ia = *index
                .get(a)
                .ok_or_else(|| DigraphError::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| DigraphError::UnknownVertex(b.to_string()))?;
            idx_edges.push((ia, ib));
        }
        Self::from_parts(names, index, idx_edges)
    }

    /// Builds a digraph on vertices named `"0".."n-1"` with index edges.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Digraph, DigraphError> {
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Self::from_parts(names, index, edges.to_vec())
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, usize>,
        idx_edges: Vec<(usize, usize)>,
    ) -> Result<Digraph, DigraphError> {
        let n = names.len();
        let mut edges = BTreeSet::new();
        for (a, b) in idx_edges {
            assert!(a < n && b < n, "edge endpoint out of range");
            if a == b {
                return Err(DigraphError::SelfLoop(names[a].clone()));
            }
            edges.insert((a, b));
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            out_adj[a].push(b);
            in_adj[b].push(a);
        }
        for v in in_adj.iter_mut() {
            v.sort_unstable();
        }
        Ok(Digraph {
            names,
            index,
            edges,
            out_adj,
            in_adj,
        })
    }

    /// A single vertex, no edges.
    pub fn point(name: &str) -> Digraph {
        Digraph::new(&[name], &[]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex names in declaration order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges as index pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    /// The step relation of digraph maps: `a == b` or `a -> b`.
    pub fn leads_to(&self, a: usize, b: usize) -> bool {
        a == b || self.has_edge(a, b)
    }

    /// `a` and `b` are joined by an edge in some direction.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b) || self.has_edge(b, a)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    /// Out- and in-neighbors merged, sorted, deduplicated.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.out_adj[v]
            .iter()
            .chain(self.in_adj[v].iter())
            .copied()
            .collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// The sub-digraph induced on `keep` (all edges of `self` between kept
    /// vertices). Vertex names survive; order follows `keep`.
    pub fn induced(&self, keep: &[usize]) -> Digraph {
        let names: Vec<String> = keep.iter().map(|&v| self.names[v].clone()).collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(&ia), Some(&ib)) = (pos.get(&a), pos.get(&b)) {
                edges.push((ia, ib));
            }
        }
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Digraph::from_parts(names, index, edges).expect("induced subgraph is valid")
    }

    /// True when `other` has a subset of this digraph's vertices and exactly
    /// the induced edges (the paper's notion of sub-digraph).
    pub fn is_sub_digraph(&self, other: &Digraph) -> bool {
        let keep: Option<Vec<usize>> = other
            .names
            .iter()
            .map(|n| self.index_of(n))
            .collect();
        let Some(keep) = keep else {
            return false;
        };
        self.induced(&keep) == *other
    }
}

/// The one-edge line digraph `0 -> 1`.
pub fn interval() -> Digraph {
    Digraph::from_indices(2, &[(0, 1)]).unwrap()
}

/// A line digraph on `directions.len() + 1` vertices: entry `i` chooses the
/// orientation of the edge between `i` and `i+1` (`true` means `i -> i+1`).
pub fn line_digraph(directions: &[bool]) -> Digraph {
    let n = directions.len();
    let edges: Vec<(usize, usize)> = directions
        .iter()
        .enumerate()
        .map(|(i, &fwd)| if fwd { (i, i + 1) } else { (i + 1, i) })
        .collect();
    Digraph::from_indices(n + 1, &edges).unwrap()
}

/// A cycle digraph on `directions.len()` vertices (length >= 3): entry `i`
/// orients the edge between `i` and `i+1 mod n`.
pub fn cycle_digraph(directions: &[bool]) -> Result<Digraph, DigraphError> {
    let n = directions.len();
    if n < 3 {
        return Err(DigraphError::CycleTooShort(n));
    }
    let edges: Vec<(usize, usize)> = directions
        .iter()
        .enumerate()
        .map(|(i, &fwd)| {
            let j = (i + 1) % n;
            if fwd {
                (i, j)
            } else {
                (j, i)
            }
        })
        .collect();
    Digraph::from_indices(n, &edges)
}

/// The cyclic n-cycle with all edges oriented forward.
pub fn cyclic_cycle(n: usize) -> Result<Digraph, DigraphError> {
    cycle_digraph(&vec![true; n])
}

/// The digraph-simplex of dimension `n`: vertices `0..=n`, edge `i -> j` iff
/// `i < j`.
pub fn simplex_digraph(n: usize) -> Digraph {
    let mut edges = Vec::new();
    for i in 0..=n {
        for j in (i + 1)..=n {
            edges.push((i, j));
        }
    }
    Digraph::from_indices(n + 1, &edges).unwrap()
}

/// The n-cube as an iterated cylinder over a point, relabeled so vertex names
/// are the decimal indices `0..2^n`. The level-1 copy of vertex `i` after one
/// cylinder step is `i + 2^(n-1)`, matching the lifting convention.
pub fn cube_digraph(n: usize) -> Digraph {
    let mut g = Digraph::point("0");
    for _ in 0..n {
        let c = cylinder(&g);
        let names: Vec<String> = (0..c.vertex_count()).map(|i| i.to_string()).collect();
        let edges: Vec<(usize, usize)> = c.edges().collect();
        g = Digraph::from_indices(names.len(), &edges).unwrap();
    }
    g
}

/// Cartesian product: vertex set `V_G x V_H`, edge `(x,y) -> (x',y')` iff
/// `x = x'` and `y -> y'`, or `x -> x'` and `y = y'`. Vertices are named
/// `"(x,y)"` in x-major order.
pub fn cartesian_product(g: &Digraph, h: &Digraph) -> Digraph {
    let nh = h.vertex_count();
    let mut names = Vec::with_capacity(g.vertex_count() * nh);
    for x in g.names() {
        for y in h.names() {
            names.push(format!("({x},{y})"));
        }
    }
    let mut edges = Vec::new();
    for x in 0..g.vertex_count() {
        for (y, y2) in h.edges() {
            edges.push((x * nh + y, x * nh + y2));
        }
    }
    for (x, x2) in g.edges() {
        for y in 0..nh {
            edges.push((x * nh + y, x2 * nh + y));
        }
    }
    let names_ref: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let named_edges: Vec<(&str, &str)> = edges
        .iter()
        .map(|&(a, b)| (names_ref[a], names_ref[b]))
        .collect();
    Digraph::new(&names_ref, &named_edges).unwrap()
}

/// The cylinder `G x I` with block vertex order: level 0 is `"(x,0)"` for
/// every `x` in declaration order, then level 1 is `"(x,1)"`. The level-1
/// copy of index `i` is index `i + n`; the lifting operator in the chain
/// layer relies on exactly this numbering.
pub fn cylinder(g: &Digraph) -> Digraph {
    let n = g.vertex_count();
    let mut names = Vec::with_capacity(2 * n);
    for x in g.names() {
        names.push(format!("({x},0)"));
    }
    for x in g.names() {
        names.push(format!("({x},1)"));
    }
    let mut edges = Vec::new();
    for (a, b) in g.edges() {
        edges.push((a, b));
        edges.push((a + n, b + n));
    }
    for v in 0..n {
        edges.push((v, v + n));
    }
    let index = names
        .iter()
        .enumerate()
        .map(|(i, nm)| (nm.clone(), i))
        .collect();
    Digraph::from_parts(names, index, edges).unwrap()
}

/// A total map between digraphs that sends every edge `v -> w` to either an
/// edge `f(v) -> f(w)` or a single vertex `f(v) = f(w)`. Validated at
/// construction.
#[derive(Clone, PartialEq, Eq)]
pub struct DigraphMap {
    source: Digraph,
    target: Digraph,
    assignment: Vec<usize>,
}

impl fmt::Debug for DigraphMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigraphMap[")?;
        for (i, &t) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", self.source.name(i), self.target.name(t))?;
        }
        write!(f, "]")
    }
}

impl DigraphMap {
    pub fn new(
        source: Digraph,
        target: Digraph,
        assignment: Vec<usize>,
    ) -> Result<DigraphMap, DigraphError> {
        if assignment.len() != source.vertex_count() {
            return Err(DigraphError::BadAssignment {
                expected: source.vertex_count(),
                got: assignment.len(),
            });
        }
        for &t in &assignment {
            assert!(t < target.vertex_count(), "assignment image out of range");
        }
        for (a, b) in source.edges() {
            if !target.leads_to(assignment[a], assignment[b]) {
                return Err(DigraphError::NotADigraphMap(
                    source.name(a).to_string(),
                    source.name(b).to_string(),
                ));
            }
        }
        Ok(DigraphMap {
            source,
            target,
            assignment,
        })
    }

    /// Builds the map from vertex names of the source to vertex names of the
    /// target, in source declaration order.
    pub fn by_names<S: AsRef<str>>(
        source: Digraph,
        target: Digraph,
        images: &[S],
    ) -> Result<DigraphMap, DigraphError> {
        let assignment: Result<Vec<usize>, DigraphError> = images
            .iter()
            .map(|n| {
                target
                    .index_of(n.as_ref())
                    .ok_or_else(|| DigraphError::UnknownVertex(n.as_ref().to_string()))
            })
            .collect();
        DigraphMap::new(source, target, assignment?)
    }

    pub fn identity(g: &Digraph) -> DigraphMap {
        DigraphMap {
            source: g.clone(),
            target: g.clone(),
            assignment: (0..g.vertex_count()).collect(),
        }
    }

    pub fn constant(source: &Digraph, target: &Digraph, image: usize) -> DigraphMap {
        assert!(image < target.vertex_count());
        DigraphMap {
            source: source.clone(),
            target: target.clone(),
            assignment: vec![image; source.vertex_count()],
        }
    }

    pub fn source(&self) -> &Digraph {
        &self.source
    }

    pub fn target(&self) -> &Digraph {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, v: usize) -> usize {
        self.assignment[v]
    }
}

/// The Def. 2.2 predicate without constructing the map.
pub fn is_digraph_map(source: &Digraph, target: &Digraph, assignment: &[usize]) -> bool {
    assignment.len() == source.vertex_count()
        && assignment.iter().all(|&t| t < target.vertex_count())
        && source
            .edges()
            .all(|(a, b)| target.leads_to(assignment[a], assignment[b]))
}

/// Composite `g . f` (first `f`, then `g`); requires `target(f) = source(g)`.
pub fn compose(f: &DigraphMap, g: &DigraphMap) -> Result<DigraphMap, DigraphError> {
    if f.target != g.source {
        return Err(DigraphError::Mismatch(
            "compose: target of first map differs from source of second".into(),
        ));
    }
    let assignment = f.assignment.iter().map(|&v| g.assignment[v]).collect();
    Ok(DigraphMap {
        source: f.source.clone(),
        target: g.target.clone(),
        assignment,
    })
}

/// Mapping cylinder of `f: G -> H`: disjoint vertices `"(x,0)"` for `x` in G
/// and `"(y,1)"` for `y` in H, all edges of both, plus `x -> f(x)` for every
/// `x` (or `f(x) -> x` when `inverse`).
pub fn map_cylinder(f: &DigraphMap, inverse: bool) -> Digraph {
    let g = &f.source;
    let h = &f.target;
    let ng = g.vertex_count();
    let mut names = Vec::with_capacity(ng + h.vertex_count());
    for x in g.names() {
        names.push(format!("({x},0)"));
    }
    for y in h.names() {
        names.push(format!("({y},1)"));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (a, b) in h.edges() {
        edges.push((a + ng, b + ng));
    }
    for x in 0..ng {
        let fx = f.assignment[x] + ng;
        if inverse {
            edges.push((fx, x));
        } else {
            edges.push((x, fx));
        }
    }
    let index = names
        .iter()
        .enumerate()
        .map(|(i, nm)| (nm.clone(), i))
        .collect();
    Digraph::from_parts(names, index, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_is_smallest_edge() {
        let i = interval();
        assert_eq!(i.vertex_count(), 2);
        assert_eq!(i.edge_count(), 1);
        assert!(i.has_edge(0, 1));
    }

    #[test]
    fn self_loop_rejected() {
        let err = Digraph::new(&["0"], &[("0", "0")]).unwrap_err();
        assert_eq!(err, DigraphError::SelfLoop("0".into()));
    }

    #[test]
    fn unknown_vertex_rejected() {
        let err = Digraph::new(&["a"], &[("a", "b")]).unwrap_err();
        assert_eq!(err, DigraphError::UnknownVertex("b".into()));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Digraph::new(&["a", "b"], &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn s5_cycle() {
        let g = cyclic_cycle(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(4, 0));
    }

    #[test]
    fn cycle_too_short() {
        assert_eq!(
            cycle_digraph(&[true, true]).unwrap_err(),
            DigraphError::CycleTooShort(2)
        );
    }

    #[test]
    fn product_interval_interval_is_square() {
        let sq = cartesian_product(&interval(), &interval());
        assert_eq!(sq.vertex_count(), 4);
        let e = |a: &str, b: &str| {
            sq.has_edge(sq.index_of(a).unwrap(), sq.index_of(b).unwrap())
        };
        assert!(e("(0,0)", "(0,1)"));
        assert!(e("(0,0)", "(1,0)"));
        assert!(e("(0,1)", "(1,1)"));
        assert!(e("(1,0)", "(1,1)"));
        assert_eq!(sq.edge_count(), 4);
    }

    #[test]
    fn product_with_point_is_isomorphic_copy() {
        let g = simplex_digraph(2);
        let p = cartesian_product(&g, &Digraph::point("*"));
        assert_eq!(p.vertex_count(), g.vertex_count());
        assert_eq!(p.edge_count(), g.edge_count());
        let idx = |i: usize| p.index_of(&format!("({},*)", g.name(i))).unwrap();
        for (a, b) in g.edges() {
            assert!(p.has_edge(idx(a), idx(b)));
        }
    }

    #[test]
    fn product_edge_count_formula() {
        // |E(GxH)| = |V_G|*|E_H| + |E_G|*|V_H|
        let fixtures = [
            cyclic_cycle(3).unwrap(),
            interval(),
            simplex_digraph(2),
            line_digraph(&[true, false, true]),
        ];
        for g in &fixtures {
            for h in &fixtures {
                let p = cartesian_product(g, h);
                assert_eq!(
                    p.edge_count(),
                    g.vertex_count() * h.edge_count() + g.edge_count() * h.vertex_count()
                );
            }
        }
        let s3i = cartesian_product(&cyclic_cycle(3).unwrap(), &interval());
        assert_eq!(s3i.vertex_count(), 6);
        assert_eq!(s3i.edge_count(), 9);
    }

    #[test]
    fn product_associative_up_to_repairing() {
        let gs = [interval(), cyclic_cycle(3).unwrap(), Digraph::point("p")];
        for a in &gs {
            for b in &gs {
                for c in &gs {
                    let left = cartesian_product(&cartesian_product(a, b), c);
                    let right = cartesian_product(a, &cartesian_product(b, c));
                    // ((x,y),z) <-> (x,(y,z)) is the canonical re-pairing
                    assert_eq!(left.vertex_count(), right.vertex_count());
                    let relabel = |name: &str| -> String {
                        // "((x,y),z)" -> "(x,(y,z))"
                        let inner = &name[1..name.len() - 1];
                        let close = inner.rfind("),").unwrap();
                        let xy = &inner[1..close];
                        let z = &inner[close + 2..];
                        let comma = {
                            let mut depth = 0;
                            let mut pos = 0;
                            for (i, ch) in xy.char_indices() {
                                match ch {
                                    '(' => depth += 1,
                                    ')' => depth -= 1,
                                    ',' if depth == 0 => {
                                        pos = i;
                                        break;
                                    }
                                    _ => {}
                                }
                            }
                            pos
                        };
                        let x = &xy[..comma];
                        let y = &xy[comma + 1..];
                        format!("({x},({y},{z}))")
                    };
                    for (u, v) in left.edges() {
                        let ru = relabel(left.name(u));
                        let rv = relabel(left.name(v));
                        assert!(right.has_edge(
                            right.index_of(&ru).unwrap(),
                            right.index_of(&rv).unwrap()
                        ));
                    }
                    assert_eq!(left.edge_count(), right.edge_count());
                }
            }
        }
    }

    #[test]
    fn cylinder_of_interval_is_square() {
        let c = cylinder(&interval());
        assert_eq!(c.vertex_count(), 4);
        assert_eq!(c.edge_count(), 4);
        // block order: (0,0) (1,0) (0,1) (1,1)
        assert!(c.has_edge(0, 1));
        assert!(c.has_edge(2, 3));
        assert!(c.has_edge(0, 2));
        assert!(c.has_edge(1, 3));
    }

    #[test]
    fn cylinder_of_point_is_interval() {
        let c = cylinder(&Digraph::point("x"));
        assert_eq!(c.vertex_count(), 2);
        assert!(c.has_edge(0, 1));
    }

    #[test]
    fn cylinder_matches_product_with_interval() {
        let g = simplex_digraph(2);
        let c = cylinder(&g);
        let p = cartesian_product(&g, &interval());
        assert_eq!(c.vertex_count(), p.vertex_count());
        assert_eq!(c.edge_count(), p.edge_count());
        for (a, b) in c.edges() {
            let pa = p.index_of(c.name(a)).unwrap();
            let pb = p.index_of(c.name(b)).unwrap();
            assert!(p.has_edge(pa, pb));
        }
    }

    #[test]
    fn iterated_cylinder_gives_cubes() {
        let mut g = Digraph::point("p");
        for n in 1..=4 {
            g = cylinder(&g);
            assert_eq!(g.vertex_count(), 1 << n);
        }
        let c3 = cube_digraph(3);
        assert_eq!(c3.vertex_count(), 8);
        assert_eq!(c3.edge_count(), 12);
    }

    #[test]
    fn families_satisfy_digraph_invariants() {
        for g in [
            cube_digraph(3),
            simplex_digraph(4),
            line_digraph(&[true, false]),
            cyclic_cycle(6).unwrap(),
        ] {
            for (a, b) in g.edges() {
                assert_ne!(a, b);
                assert!(a < g.vertex_count() && b < g.vertex_count());
            }
        }
    }

    #[test]
    fn simplex_two_is_transitive_triangle() {
        let t = simplex_digraph(2);
        assert!(t.has_edge(0, 1) && t.has_edge(1, 2) && t.has_edge(0, 2));
        assert_eq!(t.edge_count(), 3);
    }

    #[test]
    fn cycle_ttff_is_ts_square() {
        let sq = cycle_digraph(&[true, true, false, false]).unwrap();
        assert!(sq.has_edge(0, 1) && sq.has_edge(1, 2) && sq.has_edge(3, 2) && sq.has_edge(0, 3));
    }

    #[test]
    fn map_validation() {
        let i = interval();
        // collapsing both endpoints is a digraph map
        let g = Digraph::point("a");
        assert!(DigraphMap::new(i.clone(), g, vec![0, 0]).is_ok());
        // two isolated vertices: neither equal nor an edge
        let two = Digraph::new(&["a", "b"], &[]).unwrap();
        assert!(!is_digraph_map(&i, &two, &[0, 1]));
        assert!(DigraphMap::new(i, two, vec![0, 1]).is_err());
    }

    #[test]
    fn compose_and_identity() {
        let t = simplex_digraph(2);
        let f = DigraphMap::new(t.clone(), t.clone(), vec![0, 0, 2]).unwrap();
        let id = DigraphMap::identity(&t);
        assert_eq!(compose(&id, &f).unwrap(), f);
        assert_eq!(compose(&f, &id).unwrap(), f);
        let two = Digraph::new(&["a", "b"], &[]).unwrap();
        let g = DigraphMap::new(two, t.clone(), vec![0, 1]).unwrap();
        assert!(compose(&f, &g).is_err());
    }

    #[test]
    fn map_cylinder_of_identity_is_cylinder() {
        let g = simplex_digraph(2);
        let mc = map_cylinder(&DigraphMap::identity(&g), false);
        let c = cylinder(&g);
        assert_eq!(mc.vertex_count(), c.vertex_count());
        assert_eq!(mc.edge_count(), c.edge_count());
        for (a, b) in mc.edges() {
            let ca = c.index_of(mc.name(a)).unwrap();
            let cb = c.index_of(mc.name(b)).unwrap();
            assert!(c.has_edge(ca, cb));
        }
    }

    #[test]
    fn map_cylinder_of_constant_on_interval() {
        let i = interval();
        let a = Digraph::point("a");
        let f = DigraphMap::constant(&i, &a, 0);
        let mc = map_cylinder(&f, false);
        assert_eq!(mc.vertex_count(), 3);
        let e = |x: &str, y: &str| mc.has_edge(mc.index_of(x).unwrap(), mc.index_of(y).unwrap());
        assert!(e("(0,0)", "(1,0)"));
        assert!(e("(0,0)", "(a,1)"));
        assert!(e("(1,0)", "(a,1)"));
        assert_eq!(mc.edge_count(), 3);
    }

    #[test]
    fn map_cylinder_six_to_three() {
        // two directed chains collapsing onto a path a -> b -> c
        let g = Digraph::from_indices(6, &[(0, 2), (2, 4), (1, 3), (3, 5)]).unwrap();
        let h = Digraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        let f = DigraphMap::new(g, h, vec![0, 0, 1, 1, 2, 2]).unwrap();
        let mc = map_cylinder(&f, false);
        assert_eq!(mc.vertex_count(), 9);
        assert_eq!(mc.edge_count(), 4 + 2 + 6);
        let mci = map_cylinder(&f, true);
        assert_eq!(mci.vertex_count(), 9);
        assert!(mci.has_edge(
            mci.index_of("(a,1)").unwrap(),
            mci.index_of("(0,0)").unwrap()
        ));
    }

    #[test]
    fn induced_subgraph_and_membership() {
        let g = simplex_digraph(3);
        let h = g.induced(&[1, 2, 3]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
        assert!(g.is_sub_digraph(&h));
        let not_induced = Digraph::new(&["1", "2", "3"], &[("1", "2")]).unwrap();
        assert!(!g.is_sub_digraph(&not_induced));
    }
}
