//! Based loops as vertex words and the rewriting calculus on them.
//!
//! A loop is stored as its word: the sequence of vertices it visits, starting
//! and ending at the base, with every consecutive pair equal or joined by an
//! edge in some direction. Equivalence of loops is generated by five local
//! moves (triangle drop, square swap, square drop, backtrack, dedup) and
//! their inverses; the search for an equivalence is bounded and honest about
//! exhaustion versus budget. The signed-edge chain of a loop gives its class
//! in first homology, the computable obstruction to contractibility.

use std::collections::HashMap;
use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::chains::{Chain, ChainZ, VertexPath};
use crate::digraph::Digraph;
use crate::homology::{homology_with, is_boundary_z, HomologyError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopError {
    #[error("letters {0} and {1} of the word are not equal or adjacent")]
    NotTraversable(usize, usize),
    #[error("word must start and end at the base vertex")]
    BadEndpoints,
    #[error("word may not be empty")]
    EmptyWord,
    #[error("loops live on different digraphs or bases")]
    Mismatch,
    #[error("vertex index {0} is out of range")]
    BadVertex(usize),
    #[error("no path connects the base to vertex {0}")]
    BaseUnreachable(usize),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// A based loop, encoded as the word of vertices it visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopWord {
    digraph: Digraph,
    word: Vec<usize>,
    base: usize,
}

impl LoopWord {
    pub fn new(digraph: &Digraph, word: Vec<usize>, base: usize) -> Result<LoopWord, LoopError> {
        if word.is_empty() {
            return Err(LoopError::EmptyWord);
        }
        for &v in &word {
            if v >= digraph.vertex_count() {
                return Err(LoopError::BadVertex(v));
            }
        }
        if word[0] != base || *word.last().unwrap() != base {
            return Err(LoopError::BadEndpoints);
        }
        for (i, pair) in word.windows(2).enumerate() {
            if pair[0] != pair[1] && !digraph.adjacent(pair[0], pair[1]) {
                return Err(LoopError::NotTraversable(i, i + 1));
            }
        }
        Ok(LoopWord {
            digraph: digraph.clone(),
            word,
            base,
        })
    }

    /// The trivial loop at `base`.
    pub fn trivial(digraph: &Digraph, base: usize) -> LoopWord {
        LoopWord {
            digraph: digraph.clone(),
            word: vec![base],
            base,
        }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn base(&self) -> usize {
        self.base
    }

    /// Number of steps (letters minus one).
    pub fn len(&self) -> usize {
        self.word.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.word.len() == 1
    }

    pub fn display_word(&self) -> String {
        self.word
            .iter()
            .map(|&v| self.digraph.name(v).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The five local word moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteRule {
    /// `a b c -> a c` over a (possibly degenerate) triangle.
    TriangleDrop,
    /// `x m y -> x d y` across a square with corners `x m y d`.
    SquareSwap,
    /// `a b c d -> a d` around a square.
    SquareDrop,
    /// `a b a -> a` along an edge.
    Backtrack,
    /// `a a -> a`.
    Dedup,
}

/// One application of a rule (or of its inverse, when `expansion`): replace
/// `replaced` at `position` with `replacement`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteStep {
    pub rule: RewriteRule,
    pub expansion: bool,
    pub position: usize,
    pub replaced: Vec<usize>,
    pub replacement: Vec<usize>,
}

impl RewriteStep {
    pub fn apply(&self, word: &[usize]) -> Option<Vec<usize>> {
        let end = self.position + self.replaced.len();
        if end > word.len() || word[self.position..end] != self.replaced[..] {
            return None;
        }
        let mut out = Vec::with_capacity(word.len() + self.replacement.len() - self.replaced.len());
        out.extend_from_slice(&word[..self.position]);
        out.extend_from_slice(&self.replacement);
        out.extend_from_slice(&word[end..]);
        Some(out)
    }

    pub fn inverted(&self) -> RewriteStep {
        RewriteStep {
            rule: self.rule,
            expansion: !matches!(self.rule, RewriteRule::SquareSwap) && !self.expansion,
            position: self.position,
            replaced: self.replacement.clone(),
            replacement: self.replaced.clone(),
        }
    }
}

/// A triple drops its middle letter when it spans a triangle: three distinct
/// vertices with a transitive orientation, or a degenerate triple with a
/// repeated vertex.
fn triangle_droppable(g: &Digraph, a: usize, b: usize, c: usize) -> bool {
    if a == b || b == c || a == c {
        // degenerate: distinct members must stay adjacent after the drop
        return a == c || g.adjacent(a, c);
    }
    let perms = [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ];
    perms
        .iter()
        .any(|p| g.has_edge(p[0], p[1]) && g.has_edge(p[0], p[2]) && g.has_edge(p[1], p[2]))
}

/// Four distinct vertices in cyclic order form an oriented square when some
/// rotation or reflection matches the pattern with one source, one opposite
/// sink, and two through corners.
fn oriented_square(g: &Digraph, q: [usize; 4]) -> bool {
    if q[0] == q[1] || q[0] == q[2] || q[0] == q[3] || q[1] == q[2] || q[1] == q[3] || q[2] == q[3]
    {
        return false;
    }
    const ARRANGEMENTS: [[usize; 4]; 8] = [
        [0, 1, 2, 3],
        [1, 2, 3, 0],
        [2, 3, 0, 1],
        [3, 0, 1, 2],
        [0, 3, 2, 1],
        [3, 2, 1, 0],
        [2, 1, 0, 3],
        [1, 0, 3, 2],
    ];
    ARRANGEMENTS.iter().any(|s| {
        let (v0, v1, v2, v3) = (q[s[0]], q[s[1]], q[s[2]], q[s[3]]);
        g.has_edge(v0, v1) && g.has_edge(v1, v2) && g.has_edge(v3, v2) && g.has_edge(v0, v3)
    })
}

/// All moves applicable to the word, shortening and length-preserving ones
/// first, then expansions (inverse moves that lengthen the word).
pub fn applicable_moves(w: &LoopWord) -> Vec<RewriteStep> {
    let g = &w.digraph;
    let word = &w.word;
    let n = g.vertex_count();
    let mut out = Vec::new();

    for i in 0..word.len().saturating_sub(1) {
        if word[i] == word[i + 1] {
            out.push(RewriteStep {
                rule: RewriteRule::Dedup,
                expansion: false,
                position: i,
                replaced: vec![word[i], word[i]],
                replacement: vec![word[i]],
            });
        }
    }
    for i in 0..word.len().saturating_sub(2) {
        let (a, b, c) = (word[i], word[i + 1], word[i + 2]);
        if a == c && a != b {
            out.push(RewriteStep {
                rule: RewriteRule::Backtrack,
                expansion: false,
                position: i,
                replaced: vec![a, b, a],
                replacement: vec![a],
            });
        }
        if triangle_droppable(g, a, b, c) {
            out.push(RewriteStep {
                rule: RewriteRule::TriangleDrop,
                expansion: false,
                position: i,
                replaced: vec![a, b, c],
                replacement: vec![a, c],
            });
        }
        for d in 0..n {
            if d != b && oriented_square(g, [a, b, c, d]) {
                out.push(RewriteStep {
                    rule: RewriteRule::SquareSwap,
                    expansion: false,
                    position: i,
                    replaced: vec![a, b, c],
                    replacement: vec![a, d, c],
                });
            }
        }
    }
    for i in 0..word.len().saturating_sub(3) {
        let q = [word[i], word[i + 1], word[i + 2], word[i + 3]];
        if oriented_square(g, q) {
            out.push(RewriteStep {
                rule: RewriteRule::SquareDrop,
                expansion: false,
                position: i,
                replaced: q.to_vec(),
                replacement: vec![q[0], q[3]],
            });
        }
    }

    // expansions
    for i in 0..word.len() {
        out.push(RewriteStep {
            rule: RewriteRule::Dedup,
            expansion: true,
            position: i,
            replaced: vec![word[i]],
            replacement: vec![word[i], word[i]],
        });
        for b in g.neighbors(word[i]) {
            out.push(RewriteStep {
                rule: RewriteRule::Backtrack,
                expansion: true,
                position: i,
                replaced: vec![word[i]],
                replacement: vec![word[i], b, word[i]],
            });
        }
    }
    for i in 0..word.len().saturating_sub(1) {
        let (a, c) = (word[i], word[i + 1]);
        for b in 0..n {
            let slice_ok = (a == b || g.adjacent(a, b)) && (b == c || g.adjacent(b, c));
            if slice_ok && triangle_droppable(g, a, b, c) {
                out.push(RewriteStep {
                    rule: RewriteRule::TriangleDrop,
                    expansion: true,
                    position: i,
                    replaced: vec![a, c],
                    replacement: vec![a, b, c],
                });
            }
        }
        let (a, d) = (word[i], word[i + 1]);
        for b in 0..n {
            for c in 0..n {
                if oriented_square(g, [a, b, c, d]) {
                    out.push(RewriteStep {
                        rule: RewriteRule::SquareDrop,
                        expansion: true,
                        position: i,
                        replaced: vec![a, d],
                        replacement: vec![a, b, c, d],
                    });
                }
            }
        }
    }
    out
}

/// Greedy normal form under the shortening moves, applied leftmost-first
/// (dedup, backtrack, triangle drop, square drop at each position, in that
/// order). Expansions and square swaps are never applied.
pub fn reduce_loop(w: &LoopWord) -> LoopWord {
    let g = &w.digraph;
    let mut word = w.word.clone();
    'outer: loop {
        for i in 0..word.len() {
            if i + 1 < word.len() && word[i] == word[i + 1] {
                word.remove(i + 1);
                continue 'outer;
            }
            if i + 2 < word.len() && word[i] == word[i + 2] && word[i] != word[i + 1] {
                word.drain(i + 1..i + 3);
                continue 'outer;
            }
            if i + 2 < word.len() && triangle_droppable(g, word[i], word[i + 1], word[i + 2]) {
                word.remove(i + 1);
                continue 'outer;
            }
            if i + 3 < word.len()
                && oriented_square(g, [word[i], word[i + 1], word[i + 2], word[i + 3]])
            {
                word.drain(i + 1..i + 3);
                continue 'outer;
            }
        }
        break;
    }
    LoopWord {
        digraph: g.clone(),
        word,
        base: w.base,
    }
}

#[derive(Debug)]
pub enum EquivalenceVerdict {
    /// A rewriting trace from the first word to the second.
    Equivalent(Vec<RewriteStep>),
    /// Both reachable sets within the length bound were exhausted without
    /// meeting; no rewriting path exists inside the bound.
    NotWithinBounds,
    /// The step budget ran out first.
    Inconclusive,
}

pub const DEFAULT_MAX_STEPS: usize = 100_000;

/// Default letter-count bound for the bidirectional word search.
pub fn default_max_len(w1: &LoopWord, w2: &LoopWord) -> usize {
    2 * (w1.word.len().max(w2.word.len())) + 4
}

/// Bidirectional search over words of at most `max_len` letters using all
/// moves, including expansions. A returned trace replays from `w1` to `w2`.
pub fn loops_equivalent(
    w1: &LoopWord,
    w2: &LoopWord,
    max_len: usize,
    max_steps: usize,
) -> Result<EquivalenceVerdict, LoopError> {
    if w1.digraph != w2.digraph || w1.base != w2.base {
        return Err(LoopError::Mismatch);
    }
    if w1.word == w2.word {
        return Ok(EquivalenceVerdict::Equivalent(Vec::new()));
    }
    let g = &w1.digraph;
    // parent maps: word -> (previous word, step applied to previous)
    let mut seen: [HashMap<Vec<usize>, Option<(Vec<usize>, RewriteStep)>>; 2] =
        [HashMap::new(), HashMap::new()];
    let mut frontier = [VecDeque::new(), VecDeque::new()];
    seen[0].insert(w1.word.clone(), None);
    seen[1].insert(w2.word.clone(), None);
    frontier[0].push_back(w1.word.clone());
    frontier[1].push_back(w2.word.clone());
    let mut expanded = 0usize;

    while !frontier[0].is_empty() || !frontier[1].is_empty() {
        let side = match (frontier[0].is_empty(), frontier[1].is_empty()) {
            (false, true) => 0,
            (true, false) => 1,
            _ => usize::from(frontier[0].len() > frontier[1].len()),
        };
        let cur = frontier[side].pop_front().unwrap();
        if expanded >= max_steps {
            return Ok(EquivalenceVerdict::Inconclusive);
        }
        expanded += 1;
        let cur_loop = LoopWord {
            digraph: g.clone(),
            word: cur.clone(),
            base: w1.base,
        };
        for step in applicable_moves(&cur_loop) {
            let Some(next) = step.apply(&cur) else {
                continue;
            };
            if next.len() > max_len || seen[side].contains_key(&next) {
                continue;
            }
            seen[side].insert(next.clone(), Some((cur.clone(), step)));
            if seen[1 - side].contains_key(&next) {
                let trace = stitch_trace(&seen[0], &seen[1], &next);
                return Ok(EquivalenceVerdict::Equivalent(trace));
            }
            frontier[side].push_back(next);
        }
    }
    Ok(EquivalenceVerdict::NotWithinBounds)
}

fn unwind(
    seen: &HashMap<Vec<usize>, Option<(Vec<usize>, RewriteStep)>>,
    from: &[usize],
) -> Vec<RewriteStep> {
    let mut steps = Vec::new();
    let mut cur = from.to_vec();
    while let Some(Some((prev, step))) = seen.get(&cur) {
        steps.push(step.clone());
        cur = prev.clone();
    }
    steps.reverse();
    steps
}

fn stitch_trace(
    seen_a: &HashMap<Vec<usize>, Option<(Vec<usize>, RewriteStep)>>,
    seen_b: &HashMap<Vec<usize>, Option<(Vec<usize>, RewriteStep)>>,
    meet: &[usize],
) -> Vec<RewriteStep> {
    let mut trace = unwind(seen_a, meet);
    let back = unwind(seen_b, meet);
    trace.extend(back.into_iter().rev().map(|s| s.inverted()));
    trace
}

/// Replays a trace from `w`, validating every step; returns the final loop.
pub fn replay_trace(w: &LoopWord, trace: &[RewriteStep]) -> Option<LoopWord> {
    let mut word = w.word.clone();
    for step in trace {
        word = step.apply(&word)?;
    }
    LoopWord::new(&w.digraph, word, w.base).ok()
}

/// Concatenation of loops with a shared base: the duplicated base letter is
/// dropped.
pub fn concat(w1: &LoopWord, w2: &LoopWord) -> Result<LoopWord, LoopError> {
    if w1.digraph != w2.digraph || w1.base != w2.base {
        return Err(LoopError::Mismatch);
    }
    let mut word = w1.word.clone();
    word.extend_from_slice(&w2.word[1..]);
    Ok(LoopWord {
        digraph: w1.digraph.clone(),
        word,
        base: w1.base,
    })
}

/// The loop walked backwards.
pub fn inverse(w: &LoopWord) -> LoopWord {
    LoopWord {
        digraph: w.digraph.clone(),
        word: w.word.iter().rev().copied().collect(),
        base: w.base,
    }
}

/// The signed-edge 1-chain of a loop: each step contributes the edge it
/// walks, positively in the edge direction. Steps over a double edge use the
/// lower-index tail so that inversion negates the chain exactly. Words of at
/// most two steps give zero.
pub fn chi(w: &LoopWord) -> ChainZ {
    let mut out = Chain::zero(1);
    if w.len() <= 2 {
        return out;
    }
    let g = &w.digraph;
    for pair in w.word.windows(2) {
        let (u, v) = (pair[0], pair[1]);
        if u == v {
            continue;
        }
        if g.has_edge(u, v) && (!g.has_edge(v, u) || u < v) {
            out.add_term(VertexPath(vec![u, v]), BigInt::one());
        } else {
            out.add_term(VertexPath(vec![v, u]), -BigInt::one());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HurewiczClass {
    /// The chi-chain bounds; the witness chain has the loop's chain as its
    /// boundary.
    Trivial(ChainZ),
    Nontrivial,
}

/// Computes the homology class of the loop's chain over the integers.
pub fn hurewicz_class(w: &LoopWord) -> Result<HurewiczClass, LoopError> {
    let c = chi(w);
    match is_boundary_z(&w.digraph, &c)? {
        Some(witness) => Ok(HurewiczClass::Trivial(witness)),
        None => Ok(HurewiczClass::Nontrivial),
    }
}

/// Whether two loops have the same Hurewicz class (their chi difference
/// bounds over the integers).
pub fn same_hurewicz_class(w1: &LoopWord, w2: &LoopWord) -> Result<bool, LoopError> {
    if w1.digraph != w2.digraph {
        return Err(LoopError::Mismatch);
    }
    let diff = chi(w1) - chi(w2);
    Ok(is_boundary_z(&w1.digraph, &diff)?.is_some())
}

/// Connected components under the symmetrized edge relation, each sorted,
/// ordered by smallest member.
pub fn connected_components(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Shortest undirected path from `base` to `target`, as a vertex sequence.
fn undirected_path(g: &Digraph, base: usize, target: usize) -> Option<Vec<usize>> {
    if base == target {
        return Some(vec![base]);
    }
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::from([base]);
    prev.insert(base, base);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if !prev.contains_key(&w) {
                prev.insert(w, v);
                if w == target {
                    let mut path = vec![w];
                    let mut cur = w;
                    while cur != base {
                        cur = prev[&cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Based loops whose chi-chains are exactly the integral generators of first
/// homology. Each generator chain decomposes into closed walks (its signed
/// edges balance at every vertex); every walk is carried to the base along
/// an undirected path. Requires the digraph to be connected to the base.
pub fn loops_spanning_h1(g: &Digraph, base: usize) -> Result<Vec<LoopWord>, LoopError> {
    let h = homology_with(
        g,
        1,
        crate::chains::CoefficientRing::Z,
        true,
        crate::chains::DEFAULT_PATH_BUDGET,
    )?;
    let generators = h.generators.expect("generators were requested")[1].clone();
    let mut out = Vec::new();
    for gen in generators {
        let walks = closed_walks(&gen);
        let mut based = LoopWord::trivial(g, base);
        for walk in walks {
            let path = undirected_path(g, base, walk[0])
                .ok_or(LoopError::BaseUnreachable(walk[0]))?;
            let mut word = path.clone();
            word.extend_from_slice(&walk[1..]);
            word.extend(path.iter().rev().skip(1));
            let based_walk = LoopWord::new(g, word, base)?;
            based = concat(&based, &based_walk)?;
        }
        out.push(based);
    }
    Ok(out)
}

/// Splits a closed 1-chain into closed vertex walks: positive terms are
/// walked along the edge, negative terms against it. Hierholzer's circuit
/// extraction per balanced component.
fn closed_walks(c: &ChainZ) -> Vec<Vec<usize>> {
    use num_traits::ToPrimitive;
    // arcs[v] = multiset of walk successors
    let mut arcs: HashMap<usize, Vec<usize>> = HashMap::new();
    for (path, coeff) in c.terms() {
        let (u, v) = (path.0[0], path.0[1]);
        let count = coeff.abs().to_usize().expect("desk-scale multiplicity");
        for _ in 0..count {
            if coeff.is_positive() {
                arcs.entry(u).or_default().push(v);
            } else {
                arcs.entry(v).or_default().push(u);
            }
        }
    }
    for outs in arcs.values_mut() {
        outs.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut walks = Vec::new();
    loop {
        let start = arcs
            .iter()
            .filter(|(_, outs)| !outs.is_empty())
            .map(|(v, _)| *v)
            .min();
        let Some(start) = start else {
            break;
        };
        let mut stack = vec![start];
        let mut walk = Vec::new();
        while let Some(&v) = stack.last() {
            if let Some(next) = arcs.get_mut(&v).and_then(|outs| outs.pop()) {
                stack.push(next);
            } else {
                walk.push(stack.pop().unwrap());
            }
        }
        walk.reverse();
        walks.push(walk);
    }
    walks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{integer, path};
    use crate::digraph::{cyclic_cycle, simplex_digraph, Digraph};
    use crate::homology::standard_cycle_path;

    fn triangle() -> Digraph {
        // a -> b, b -> c, a -> c
        Digraph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap()
    }

    fn square() -> Digraph {
        // a -> b, b -> c, a -> d, d -> c
        Digraph::new(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("a", "d"), ("d", "c")],
        )
        .unwrap()
    }

    /// Pentagon with chords that let its boundary word shrink to a 3-cycle.
    pub(crate) fn pentagon_with_chords() -> Digraph {
        Digraph::from_indices(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (0, 3)],
        )
        .unwrap()
    }

    #[test]
    fn loop_validation() {
        let s5 = cyclic_cycle(5).unwrap();
        assert!(LoopWord::new(&s5, vec![0, 1, 2, 3, 4, 0], 0).is_ok());
        let t = triangle();
        assert!(LoopWord::new(&t, vec![0], 0).is_ok());
        // no edge between 0 and 2 in the plain 5-cycle skipping a vertex
        assert_eq!(
            LoopWord::new(&s5, vec![0, 2, 0], 0).unwrap_err(),
            LoopError::NotTraversable(0, 1)
        );
        assert_eq!(
            LoopWord::new(&s5, vec![0, 1], 0).unwrap_err(),
            LoopError::BadEndpoints
        );
    }

    #[test]
    fn moves_on_triangle_word() {
        let t = triangle();
        let w = LoopWord::new(&t, vec![0, 1, 2, 0], 0).unwrap();
        let moves = applicable_moves(&w);
        assert!(moves.iter().any(|m| m.rule == RewriteRule::TriangleDrop
            && m.position == 0
            && !m.expansion));
    }

    #[test]
    fn dedup_applies_to_stationary_pair() {
        let t = triangle();
        let w = LoopWord::new(&t, vec![0, 0], 0).unwrap();
        let moves = applicable_moves(&w);
        assert!(moves
            .iter()
            .any(|m| m.rule == RewriteRule::Dedup && !m.expansion));
    }

    #[test]
    fn no_shortening_moves_on_plain_cycle() {
        let s5 = cyclic_cycle(5).unwrap();
        let w = LoopWord::new(&s5, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        assert!(applicable_moves(&w).iter().all(|m| m.expansion));
        assert_eq!(reduce_loop(&w), w);
    }

    #[test]
    fn triangle_loop_reduces_to_base() {
        let t = triangle();
        let w = LoopWord::new(&t, vec![0, 1, 2, 0], 0).unwrap();
        assert!(reduce_loop(&w).is_trivial());
    }

    #[test]
    fn square_loop_reduces_to_base() {
        let sq = square();
        let w = LoopWord::new(&sq, vec![0, 1, 2, 3, 0], 0).unwrap();
        assert!(reduce_loop(&w).is_trivial());
    }

    #[test]
    fn pentagon_word_reduces_to_three_cycle() {
        let g = pentagon_with_chords();
        let five = LoopWord::new(&g, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        let reduced = reduce_loop(&five);
        assert_eq!(reduced.word(), &[0, 3, 4, 0]);
    }

    #[test]
    fn pentagon_words_are_equivalent_with_replayable_trace() {
        let g = pentagon_with_chords();
        let five = LoopWord::new(&g, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        let three = LoopWord::new(&g, vec![0, 3, 4, 0], 0).unwrap();
        let verdict =
            loops_equivalent(&five, &three, default_max_len(&five, &three), 50_000).unwrap();
        match verdict {
            EquivalenceVerdict::Equivalent(trace) => {
                let end = replay_trace(&five, &trace).unwrap();
                assert_eq!(end, three);
                assert!(same_hurewicz_class(&five, &three).unwrap());
            }
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn loop_equals_itself_with_empty_trace() {
        let t = triangle();
        let w = LoopWord::new(&t, vec![0, 1, 0], 0).unwrap();
        match loops_equivalent(&w, &w, 10, 10).unwrap() {
            EquivalenceVerdict::Equivalent(trace) => assert!(trace.is_empty()),
            other => panic!("expected equivalence, got {other:?}"),
        }
    }

    #[test]
    fn concat_inverse_identities() {
        let s5 = cyclic_cycle(5).unwrap();
        let w = LoopWord::new(&s5, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        let trivial = LoopWord::trivial(&s5, 0);
        let glued = concat(&w, &trivial).unwrap();
        assert_eq!(reduce_loop(&glued).word(), w.word());
        assert_eq!(inverse(&inverse(&w)), w);
        let cancel = concat(&w, &inverse(&w)).unwrap();
        assert!(reduce_loop(&cancel).is_trivial());
    }

    #[test]
    fn chi_examples() {
        let s5 = cyclic_cycle(5).unwrap();
        let trivial = LoopWord::trivial(&s5, 0);
        assert!(chi(&trivial).is_zero());

        let five = LoopWord::new(&s5, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        assert_eq!(chi(&five), standard_cycle_path(&s5).unwrap());

        let t = triangle();
        let backtrack = LoopWord::new(&t, vec![0, 1, 0], 0).unwrap();
        assert!(chi(&backtrack).is_zero());
    }

    #[test]
    fn chi_is_additive_and_negates() {
        let g = pentagon_with_chords();
        let w1 = LoopWord::new(&g, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        let w2 = LoopWord::new(&g, vec![0, 3, 4, 0], 0).unwrap();
        assert_eq!(
            chi(&concat(&w1, &w2).unwrap()),
            chi(&w1) + chi(&w2)
        );
        assert_eq!(chi(&inverse(&w1)), -chi(&w1));
        // negation stays exact across double edges
        let de = Digraph::from_indices(4, &[(0, 1), (1, 0), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = LoopWord::new(&de, vec![0, 1, 2, 3, 0], 0).unwrap();
        assert_eq!(chi(&inverse(&w)), -chi(&w));
    }

    #[test]
    fn hurewicz_classes() {
        let t = triangle();
        let abca = LoopWord::new(&t, vec![0, 1, 2, 0], 0).unwrap();
        match hurewicz_class(&abca).unwrap() {
            HurewiczClass::Trivial(witness) => {
                assert_eq!(witness, Chain::single(path(&[0, 1, 2]), integer(1)));
            }
            HurewiczClass::Nontrivial => panic!("triangle loop must bound"),
        }

        let s5 = cyclic_cycle(5).unwrap();
        let five = LoopWord::new(&s5, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        assert_eq!(hurewicz_class(&five).unwrap(), HurewiczClass::Nontrivial);

        let cancel = concat(&five, &inverse(&five)).unwrap();
        assert!(matches!(
            hurewicz_class(&cancel).unwrap(),
            HurewiczClass::Trivial(_)
        ));
    }

    #[test]
    fn reduce_preserves_hurewicz_class_and_traversability() {
        let g = pentagon_with_chords();
        let w = LoopWord::new(&g, vec![0, 1, 2, 3, 4, 0], 0).unwrap();
        let r = reduce_loop(&w);
        assert!(LoopWord::new(&g, r.word().to_vec(), 0).is_ok());
        assert!(same_hurewicz_class(&w, &r).unwrap());
    }

    #[test]
    fn components_examples() {
        let s5 = cyclic_cycle(5).unwrap();
        assert_eq!(connected_components(&s5), vec![vec![0, 1, 2, 3, 4]]);
        let two_edges = Digraph::from_indices(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&two_edges), vec![vec![0, 1], vec![2, 3]]);
        let isolated = Digraph::from_indices(3, &[]).unwrap();
        assert_eq!(connected_components(&isolated).len(), 3);
    }

    #[test]
    fn spanning_loops_cover_h1() {
        let s5 = cyclic_cycle(5).unwrap();
        let loops = loops_spanning_h1(&s5, 0).unwrap();
        assert_eq!(loops.len(), 1);
        assert_eq!(
            hurewicz_class(&loops[0]).unwrap(),
            HurewiczClass::Nontrivial
        );
        // the chi-chain reproduces the integral generator exactly
        let h = homology_with(&s5, 1, crate::chains::CoefficientRing::Z, true, 1_000_000).unwrap();
        assert_eq!(chi(&loops[0]), h.generators.unwrap()[1][0]);

        // two circles sharing the base vertex
        let wedge = Digraph::from_indices(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (5, 6),
                (6, 7),
                (7, 8),
                (8, 0),
            ],
        )
        .unwrap();
        let loops = loops_spanning_h1(&wedge, 0).unwrap();
        assert_eq!(loops.len(), 2);
        for w in &loops {
            assert_eq!(hurewicz_class(w).unwrap(), HurewiczClass::Nontrivial);
        }
    }

    #[test]
    fn square_swap_moves_match_both_routes() {
        let sq = square();
        // word through one route of the square
        let w = LoopWord::new(&sq, vec![0, 1, 2, 3, 0], 0).unwrap();
        let swaps: Vec<_> = applicable_moves(&w)
            .into_iter()
            .filter(|m| m.rule == RewriteRule::SquareSwap)
            .collect();
        // 0 1 2 can become 0 3 2 across the square
        assert!(swaps
            .iter()
            .any(|m| m.position == 0 && m.replacement == vec![0, 3, 2]));
        for m in swaps {
            let next = m.apply(w.word()).unwrap();
            assert!(LoopWord::new(&sq, next, 0).is_ok());
        }
    }
}
