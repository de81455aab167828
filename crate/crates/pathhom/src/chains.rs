//! Elementary paths and sparse chains over an exact coefficient ring, with
//! the boundary operator, maps induced on chains, and the cylinder lifting
//! operator.
//!
//! A p-chain is a formal linear combination of regular elementary p-paths
//! (no two consecutive vertices equal); irregular paths are identified with
//! zero throughout. Coefficients are arbitrary-precision rationals or
//! integers, never floats.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

use crate::digraph::Digraph;

/// Exact coefficient arithmetic shared by the rational and integer modes.
pub trait Ring: Clone + Eq + Ord + Signed + fmt::Display + 'static {}
impl<T: Clone + Eq + Ord + Signed + fmt::Display + 'static> Ring for T {}

/// The two coefficient modes the crate computes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CoefficientRing {
    Q,
    Z,
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Q => write!(f, "Q"),
            CoefficientRing::Z => write!(f, "Z"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("allowed-path enumeration exceeded the budget of {budget} paths in dimension {dim}")]
    BudgetExceeded { dim: usize, budget: usize },
}

/// An elementary path: an ordered sequence of vertex indices. A p-path has
/// p+1 vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPath(pub Vec<usize>);

impl VertexPath {
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    /// No two consecutive vertices equal.
    pub fn is_regular(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Every consecutive pair is an edge of `g`.
    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for VertexPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{:?}", self.0)
    }
}

pub fn path(vertices: &[usize]) -> VertexPath {
    VertexPath(vertices.to_vec())
}

/// A sparse formal combination of regular elementary paths of one dimension.
/// The zero chain keeps a nominal dimension; empty chains compare equal to
/// each other regardless of it.
#[derive(Clone)]
pub struct Chain<R: Ring> {
    dim: isize,
    terms: BTreeMap<VertexPath, R>,
}

pub type ChainQ = Chain<BigRational>;
pub type ChainZ = Chain<BigInt>;

impl<R: Ring> PartialEq for Chain<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true;
        }
        self.dim == other.dim && self.terms == other.terms
    }
}

impl<R: Ring> Eq for Chain<R> {}

impl<R: Ring> fmt::Debug for Chain<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<R: Ring> fmt::Display for Chain<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            let verts: Vec<String> = p.0.iter().map(|v| v.to_string()).collect();
            write!(f, "e({})", verts.join(","))?;
        }
        Ok(())
    }
}

impl<R: Ring> Chain<R> {
    pub fn zero(dim: isize) -> Self {
        Chain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Single regular path with unit coefficient. Irregular input collapses
    /// to the zero chain.
    pub fn unit(p: VertexPath) -> Self {
        Self::single(p, R::one())
    }

    pub fn single(p: VertexPath, coeff: R) -> Self {
        let dim = p.dim();
        let mut terms = BTreeMap::new();
        if p.is_regular() && !coeff.is_zero() {
            terms.insert(p, coeff);
        }
        Chain { dim, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (VertexPath, R)>>(dim: isize, iter: I) -> Self {
        let mut c = Chain::zero(dim);
        for (p, coeff) in iter {
            c.add_term(p, coeff);
        }
        c
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VertexPath, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, p: &VertexPath) -> R {
        self.terms.get(p).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * p`, dropping irregular paths and cancelled terms.
    pub fn add_term(&mut self, p: VertexPath, coeff: R) {
        debug_assert_eq!(p.dim(), self.dim, "term dimension mismatch");
        if coeff.is_zero() || !p.is_regular() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scaled(&self, by: &R) -> Self {
        if by.is_zero() {
            return Chain::zero(self.dim);
        }
        Chain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c.clone() * by.clone()))
                .collect(),
        }
    }

    /// Every stored path is allowed in `g`.
    pub fn is_allowed(&self, g: &Digraph) -> bool {
        self.terms.keys().all(|p| p.is_allowed(g))
    }

    /// The boundary: alternating sum of vertex deletions, with irregular
    /// results dropped. Boundaries of 0-chains vanish.
    pub fn boundary(&self) -> Chain<R> {
        let mut out = Chain::zero(self.dim - 1);
        if self.dim <= 0 {
            return out;
        }
        for (p, c) in &self.terms {
            let verts = &p.0;
            for q in 0..verts.len() {
                let mut face = Vec::with_capacity(verts.len() - 1);
                face.extend_from_slice(&verts[..q]);
                face.extend_from_slice(&verts[q + 1..]);
                let coeff = if q % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(VertexPath(face), coeff);
            }
        }
        out
    }

    /// Pushes the chain through a vertex map, sending paths with repeated
    /// consecutive images to zero.
    pub fn mapped(&self, assignment: &[usize]) -> Chain<R> {
        let mut out = Chain::zero(self.dim);
        for (p, c) in &self.terms {
            let image: Vec<usize> = p.0.iter().map(|&v| assignment[v]).collect();
            out.add_term(VertexPath(image), c.clone());
        }
        out
    }

    /// The copy of the chain on level 1 of `cylinder(g)`: every vertex index
    /// shifts by the vertex count of `g`.
    pub fn prime_copy(&self, g: &Digraph) -> Chain<R> {
        let n = g.vertex_count();
        Chain {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    (
                        VertexPath(p.0.iter().map(|&v| v + n).collect()),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Lifts a chain on `g` to a (p+1)-chain on `cylinder(g)`:
    /// each path `i_0..i_p` becomes the alternating sum over k of
    /// `i_0..i_k i_k'..i_p'` with the level-1 copy primed.
    pub fn lift(&self, g: &Digraph) -> Chain<R> {
        let n = g.vertex_count();
        let mut out = Chain::zero(self.dim + 1);
        for (p, c) in &self.terms {
            let verts = &p.0;
            for k in 0..verts.len() {
                let mut lifted = Vec::with_capacity(verts.len() + 1);
                lifted.extend_from_slice(&verts[..=k]);
                lifted.extend(verts[k..].iter().map(|&v| v + n));
                let coeff = if k % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(VertexPath(lifted), coeff);
            }
        }
        out
    }
}

impl<R: Ring> Add for Chain<R> {
    type Output = Chain<R>;
    fn add(self, rhs: Chain<R>) -> Chain<R> {
        debug_assert!(
            self.terms.is_empty() || rhs.terms.is_empty() || self.dim == rhs.dim,
            "chain dimension mismatch in +"
        );
        let dim = if self.terms.is_empty() { rhs.dim } else { self.dim };
        let mut out = Chain { dim, terms: self.terms };
        for (p, c) in rhs.terms {
            out.add_term(p, c);
        }
        out
    }
}

impl<R: Ring> Sub for Chain<R> {
    type Output = Chain<R>;
    fn sub(self, rhs: Chain<R>) -> Chain<R> {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Chain<R> {
    type Output = Chain<R>;
    fn neg(self) -> Chain<R> {
        Chain {
            dim: self.dim,
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

/// Juxtaposition product: `e_{i..} * e_{j..} = e_{i..j..}` extended
/// bilinearly, with irregular results dropped.
pub fn concat_product<R: Ring>(u: &Chain<R>, v: &Chain<R>) -> Chain<R> {
    let mut out = Chain::zero(u.dim + v.dim + 1);
    for (pu, cu) in u.terms() {
        for (pv, cv) in v.terms() {
            let mut verts = pu.0.clone();
            verts.extend_from_slice(&pv.0);
            out.add_term(VertexPath(verts), cu.clone() * cv.clone());
        }
    }
    out
}

/// All allowed elementary p-paths of `g` in lexicographic order of their
/// vertex index sequences. `E_0` is the vertex list, `E_1` the edge list.
/// Fails once more than `budget` paths would be produced.
pub fn enumerate_allowed(
    g: &Digraph,
    p: usize,
    budget: usize,
) -> Result<Vec<VertexPath>, ChainError> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(p + 1);
    for v in 0..g.vertex_count() {
        stack.push(v);
        extend_allowed(g, p, budget, &mut stack, &mut out)?;
        stack.pop();
    }
    Ok(out)
}

fn extend_allowed(
    g: &Digraph,
    p: usize,
    budget: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<VertexPath>,
) -> Result<(), ChainError> {
    if stack.len() == p + 1 {
        if out.len() >= budget {
            return Err(ChainError::BudgetExceeded { dim: p, budget });
        }
        out.push(VertexPath(stack.clone()));
        return Ok(());
    }
    let last = *stack.last().unwrap();
    for &next in g.out_neighbors(last) {
        stack.push(next);
        extend_allowed(g, p, budget, stack, out)?;
        stack.pop();
    }
    Ok(())
}

/// Default ceiling on the number of allowed paths per dimension.
pub const DEFAULT_PATH_BUDGET: usize = 2_000_000;

/// Induced chain map of a digraph map (dimension-preserving, commutes with
/// the boundary).
pub fn induced_map<R: Ring>(f: &crate::digraph::DigraphMap, c: &Chain<R>) -> Chain<R> {
    c.mapped(f.assignment())
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn integer(n: i64) -> BigInt {
    BigInt::from(n)
}
