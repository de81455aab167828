//! Homotopy of digraph maps and deformation retractions.
//!
//! Two maps are one-step homotopic when one pointwise leads to the other; a
//! homotopy is a finite chain of such steps. The search for a homotopy runs
//! over the space of all digraph maps between the fixed source and target,
//! exhaustively when that space is small enough and under an explicit budget
//! otherwise.

use std::collections::HashMap;
use std::collections::VecDeque;

use thiserror::Error;

use crate::digraph::{cylinder, is_digraph_map, Digraph, DigraphMap};
use crate::homology::{build_omega_q, HomologyError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomotopyError {
    #[error("maps do not share source and target")]
    Mismatch,
    #[error("exhaustive search needs {needed} map nodes, above the cap of {cap}")]
    StateSpaceTooLarge { needed: u128, cap: u128 },
    #[error("map does not restrict to a retraction onto the sub-digraph")]
    NotARetraction,
    #[error("homotopy map does not restrict to the given endpoints on the cylinder")]
    BadRestriction,
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Which orderings of the one-step relation hold between two maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OneStep {
    /// `f(x)` leads to `g(x)` for every vertex.
    Forward,
    /// `g(x)` leads to `f(x)` for every vertex.
    Backward,
    Both,
    No,
}

pub fn one_step_homotopic(f: &DigraphMap, g: &DigraphMap) -> Result<OneStep, HomotopyError> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(HomotopyError::Mismatch);
    }
    let fwd = pointwise_leads(f, g);
    let bwd = pointwise_leads(g, f);
    debug_assert_eq!(fwd, cylinder_map(f, g).is_some());
    Ok(match (fwd, bwd) {
        (true, true) => OneStep::Both,
        (true, false) => OneStep::Forward,
        (false, true) => OneStep::Backward,
        (false, false) => OneStep::No,
    })
}

fn pointwise_leads(f: &DigraphMap, g: &DigraphMap) -> bool {
    let h = f.target();
    (0..f.source().vertex_count()).all(|x| h.leads_to(f.apply(x), g.apply(x)))
}

/// The homotopy map `F: cylinder(G) -> H` with `F` equal to `f` on level 0
/// and `g` on level 1; exists exactly when `f` leads pointwise to `g`.
pub fn cylinder_map(f: &DigraphMap, g: &DigraphMap) -> Option<DigraphMap> {
    let cyl = cylinder(f.source());
    let mut assignment = Vec::with_capacity(cyl.vertex_count());
    assignment.extend(f.assignment().iter().copied());
    assignment.extend(g.assignment().iter().copied());
    if is_digraph_map(&cyl, f.target(), &assignment) {
        Some(DigraphMap::new(cyl, f.target().clone(), assignment).unwrap())
    } else {
        None
    }
}

/// A chain of one-step homotopies connecting two maps.
#[derive(Debug, Clone)]
pub struct HomotopySequence {
    pub maps: Vec<DigraphMap>,
    /// Direction of each consecutive step, `maps[i]` to `maps[i+1]`.
    pub step_directions: Vec<OneStep>,
}

impl HomotopySequence {
    /// Every consecutive pair satisfies its recorded one-step relation.
    pub fn validate(&self) -> bool {
        self.maps.windows(2).zip(&self.step_directions).all(|(w, dir)| {
            match one_step_homotopic(&w[0], &w[1]) {
                Ok(OneStep::Both) => matches!(dir, OneStep::Forward | OneStep::Backward),
                Ok(found) => found == *dir,
                Err(_) => false,
            }
        })
    }
}

#[derive(Debug)]
pub enum HomotopyVerdict {
    Yes(HomotopySequence),
    /// The reachable component was explored completely; the maps are not
    /// homotopic.
    No,
    /// The budget ran out before the component was exhausted.
    Inconclusive,
}

/// Search mode for `homotopic`.
#[derive(Debug, Clone, Copy)]
pub enum SearchMode {
    /// Complete BFS; fails upfront when `|V_H|^|V_G|` exceeds the cap.
    Exhaustive,
    /// BFS that gives up after expanding this many map nodes.
    Budget(usize),
}

/// Cap on the map-space size for exhaustive mode.
pub const EXHAUSTIVE_CAP: u128 = 1_000_000;

/// Decides whether `f` and `g` are homotopic by BFS on the graph whose nodes
/// are digraph maps and whose edges are one-step homotopies.
pub fn homotopic(
    f: &DigraphMap,
    g: &DigraphMap,
    mode: SearchMode,
) -> Result<HomotopyVerdict, HomotopyError> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(HomotopyError::Mismatch);
    }
    let budget = match mode {
        SearchMode::Exhaustive => {
            let needed = (f.target().vertex_count() as u128)
                .checked_pow(f.source().vertex_count() as u32)
                .unwrap_or(u128::MAX);
            if needed > EXHAUSTIVE_CAP {
                return Err(HomotopyError::StateSpaceTooLarge {
                    needed,
                    cap: EXHAUSTIVE_CAP,
                });
            }
            usize::MAX
        }
        SearchMode::Budget(b) => b,
    };

    let start: Vec<usize> = f.assignment().to_vec();
    let goal: Vec<usize> = g.assignment().to_vec();
    if start == goal {
        return Ok(HomotopyVerdict::Yes(HomotopySequence {
            maps: vec![f.clone()],
            step_directions: vec![],
        }));
    }
    let mut parents: HashMap<Vec<usize>, (Vec<usize>, OneStep)> = HashMap::new();
    let mut queue = VecDeque::new();
    parents.insert(start.clone(), (start.clone(), OneStep::Both));
    queue.push_back(start.clone());
    let mut expanded = 0usize;
    while let Some(cur) = queue.pop_front() {
        if expanded >= budget {
            return Ok(HomotopyVerdict::Inconclusive);
        }
        expanded += 1;
        for dir in [OneStep::Forward, OneStep::Backward] {
            let mut found_goal = false;
            for next in one_step_neighbors(f.source(), f.target(), &cur, dir) {
                if parents.contains_key(&next) {
                    continue;
                }
                parents.insert(next.clone(), (cur.clone(), dir));
                if next == goal {
                    found_goal = true;
                    break;
                }
                queue.push_back(next);
            }
            if found_goal {
                let seq = rebuild_sequence(f, &parents, &goal);
                return Ok(HomotopyVerdict::Yes(seq));
            }
        }
    }
    Ok(HomotopyVerdict::No)
}

fn rebuild_sequence(
    f: &DigraphMap,
    parents: &HashMap<Vec<usize>, (Vec<usize>, OneStep)>,
    goal: &Vec<usize>,
) -> HomotopySequence {
    let mut assignments = vec![goal.clone()];
    let mut dirs = Vec::new();
    let mut cur = goal.clone();
    loop {
        let (prev, dir) = &parents[&cur];
        if *prev == cur {
            break;
        }
        dirs.push(*dir);
        assignments.push(prev.clone());
        cur = prev.clone();
    }
    assignments.reverse();
    dirs.reverse();
    HomotopySequence {
        maps: assignments
            .into_iter()
            .map(|a| DigraphMap::new(f.source().clone(), f.target().clone(), a).unwrap())
            .collect(),
        step_directions: dirs,
    }
}

/// All digraph maps one step from `cur` in the given direction: each vertex
/// image stays or moves along an edge of the target, with the digraph map
/// condition re-validated per candidate.
fn one_step_neighbors(
    source: &Digraph,
    target: &Digraph,
    cur: &[usize],
    dir: OneStep,
) -> Vec<Vec<usize>> {
    let mut choices: Vec<Vec<usize>> = Vec::with_capacity(cur.len());
    for &img in cur {
        let mut c = vec![img];
        match dir {
            OneStep::Forward => c.extend(target.out_neighbors(img).iter().copied()),
            OneStep::Backward => c.extend(target.in_neighbors(img).iter().copied()),
            _ => unreachable!(),
        }
        choices.push(c);
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; cur.len()];
    'enumerate: loop {
        let cand: Vec<usize> = pick
            .iter()
            .enumerate()
            .map(|(v, &i)| choices[v][i])
            .collect();
        if cand != cur && is_digraph_map(source, target, &cand) {
            out.push(cand);
        }
        // odometer
        for v in 0..pick.len() {
            pick[v] += 1;
            if pick[v] < choices[v].len() {
                continue 'enumerate;
            }
            pick[v] = 0;
        }
        break;
    }
    out
}

/// One vertex removal: `vertex` left the digraph because `witness` dominates
/// it (every other in/out neighbor of `vertex` is matched by `witness`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalStep {
    pub vertex: String,
    pub witness: String,
    pub rule: RemovalRule,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalRule {
    /// The neighbor-domination condition: `a -> b_i` implies `b0 -> b_i` and
    /// `b_i -> a` implies `b_i -> b0` for every other neighbor `b_i`.
    NeighborDomination,
    /// A one-step retraction certificate supplied by the caller.
    OneStepRetraction,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub removed: Vec<RemovalStep>,
    pub residual: Digraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// Residual is a single vertex, so the input is contractible.
    Contractible,
    /// No vertex satisfies the removal rule; says nothing about
    /// contractibility by other means.
    Irreducible,
}

impl ReductionTrace {
    pub fn outcome(&self) -> ReductionOutcome {
        if self.residual.vertex_count() == 1 {
            ReductionOutcome::Contractible
        } else {
            ReductionOutcome::Irreducible
        }
    }
}

/// Checks the neighbor-domination condition for removing `a` with witness
/// `b0` in `g`.
pub fn domination_holds(g: &Digraph, a: usize, b0: usize) -> bool {
    if a == b0 || !g.adjacent(a, b0) {
        return false;
    }
    g.neighbors(a).into_iter().filter(|&b| b != b0).all(|b| {
        (!g.has_edge(a, b) || g.has_edge(b0, b)) && (!g.has_edge(b, a) || g.has_edge(b, b0))
    })
}

/// Greedily removes vertices while some neighbor dominates them, vertices in
/// declaration order and witnesses in declaration order, first hit wins.
/// The residual of a contractible-by-this-rule digraph is a single vertex.
pub fn find_reduction(g: &Digraph) -> ReductionTrace {
    let mut current = g.clone();
    let mut removed = Vec::new();
    loop {
        let n = current.vertex_count();
        let mut hit = None;
        'scan: for a in 0..n {
            for b0 in current.neighbors(a) {
                if domination_holds(&current, a, b0) {
                    hit = Some((a, b0));
                    break 'scan;
                }
            }
        }
        let Some((a, b0)) = hit else {
            break;
        };
        removed.push(RemovalStep {
            vertex: current.name(a).to_string(),
            witness: current.name(b0).to_string(),
            rule: RemovalRule::NeighborDomination,
        });
        let keep: Vec<usize> = (0..n).filter(|&v| v != a).collect();
        current = current.induced(&keep);
    }
    ReductionTrace {
        removed,
        residual: current,
    }
}

/// Replays a trace against `g`, validating each step's witness at the time
/// of removal; returns the residual on success.
pub fn replay_reduction(g: &Digraph, trace: &ReductionTrace) -> Option<Digraph> {
    let mut current = g.clone();
    for step in &trace.removed {
        let a = current.index_of(&step.vertex)?;
        let b0 = current.index_of(&step.witness)?;
        if !domination_holds(&current, a, b0) {
            return None;
        }
        let keep: Vec<usize> = (0..current.vertex_count()).filter(|&v| v != a).collect();
        current = current.induced(&keep);
    }
    (current == trace.residual).then_some(current)
}

/// How a retraction was certified to be a deformation retraction.
#[derive(Debug, Clone)]
pub enum RetractionCertificate {
    /// The one-step criterion: every vertex leads to its image (or the other
    /// way around, uniformly).
    OneStep(OneStep),
    /// Found by the homotopy search.
    Homotopy(HomotopySequence),
    /// Neither criterion fired within the budget.
    NotEstablished,
}

/// Decides whether the retraction `r: G -> H` (identity on the sub-digraph
/// `H`) is a deformation retraction. Tries the one-step criterion first and
/// falls back to the homotopy search between the composite and the identity.
pub fn is_deformation_retraction(
    r: &DigraphMap,
    mode: SearchMode,
) -> Result<RetractionCertificate, HomotopyError> {
    let g = r.source();
    let h = r.target();
    if !g.is_sub_digraph(h) {
        return Err(HomotopyError::NotARetraction);
    }
    // r must fix H pointwise
    for v in 0..h.vertex_count() {
        let gv = g.index_of(h.name(v)).unwrap();
        if h.name(r.apply(gv)) != h.name(v) {
            return Err(HomotopyError::NotARetraction);
        }
    }
    // i o r as a self-map of G
    let into_g: Vec<usize> = (0..g.vertex_count())
        .map(|v| g.index_of(h.name(r.apply(v))).unwrap())
        .collect();
    if !is_digraph_map(g, g, &into_g) {
        return Err(HomotopyError::NotARetraction);
    }
    let composite = DigraphMap::new(g.clone(), g.clone(), into_g).unwrap();
    let id = DigraphMap::identity(g);
    match one_step_homotopic(&id, &composite)? {
        OneStep::No => {}
        dir => return Ok(RetractionCertificate::OneStep(dir)),
    }
    match homotopic(&id, &composite, mode)? {
        HomotopyVerdict::Yes(seq) => Ok(RetractionCertificate::Homotopy(seq)),
        _ => Ok(RetractionCertificate::NotEstablished),
    }
}

/// Verifies the chain-homotopy identity behind homotopy invariance: with
/// `L_p(v) = F_*(lift v)` for `F: cylinder(G) -> H` restricting to `f` at
/// level 0 and `g` at level 1,
/// `boundary . L_p + L_{p-1} . boundary = g_* - f_*` on the full omega basis
/// of each dimension up to `p_max`.
pub fn verify_chain_homotopy(
    big_f: &DigraphMap,
    f: &DigraphMap,
    g: &DigraphMap,
    p_max: usize,
) -> Result<bool, HomotopyError> {
    let base = f.source();
    let n = base.vertex_count();
    let cyl = cylinder(base);
    if big_f.source() != &cyl || f.target() != big_f.target() || g.target() != big_f.target() {
        return Err(HomotopyError::BadRestriction);
    }
    for x in 0..n {
        if big_f.apply(x) != f.apply(x) || big_f.apply(x + n) != g.apply(x) {
            return Err(HomotopyError::BadRestriction);
        }
    }
    let complex = build_omega_q(base, p_max).map_err(HomologyError::from)?;
    for p in 0..=p_max {
        for omega in complex.omega_basis(p) {
            let l_p = omega.lift(base).mapped(big_f.assignment());
            let l_boundary = omega.boundary().lift(base).mapped(big_f.assignment());
            let lhs = l_p.boundary() + l_boundary;
            let rhs = omega.mapped(g.assignment()) - omega.mapped(f.assignment());
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Betti numbers over the rationals through dimension 2, the comparison data
/// for homotopy-invariance checks.
pub fn betti_through_two(g: &Digraph) -> Result<Vec<usize>, HomologyError> {
    Ok(crate::homology::homology(g, 2, crate::chains::CoefficientRing::Q)?.betti)
}
