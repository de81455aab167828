//! The path chain complex of a digraph and its homology.
//!
//! For each dimension p the allowed p-paths span `A_p`; the subspace
//! `Omega_p` of chains whose boundary stays allowed carries the boundary
//! operator, and path homology is the homology of that complex. Betti numbers
//! come from rational ranks, torsion from Smith normal form over the
//! integers. Requesting homology through dimension `p_max` always builds the
//! complex one level higher, because `H_p` needs the image of
//! `Omega_{p+1}`.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::chains::{
    enumerate_allowed, Chain, ChainError, ChainQ, ChainZ, CoefficientRing, Ring, VertexPath,
    DEFAULT_PATH_BUDGET,
};
use crate::digraph::{Digraph, DigraphMap};
use crate::exact::{
    integer_kernel, kernel_basis, primitive_integer_vector, rank, smith_normal_form, solve,
    solve_columns, Mat, QMat, ZMat,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Budget(#[from] ChainError),
    #[error("chain is not a cycle in Omega_{0}")]
    NotACycle(isize),
    #[error("chain is not a member of Omega_2 over Z")]
    NotInOmega2,
    #[error("digraph is not a cycle digraph")]
    NotACycleDigraph,
    #[error("complex was built through dimension {built} but dimension {requested} is needed")]
    DimensionUnavailable { built: usize, requested: usize },
}

/// The ∂-invariant chain complex of a digraph, over one coefficient ring.
/// Levels run from 0 through `max_dim + 1`.
pub struct OmegaComplex<R: Ring> {
    digraph: Digraph,
    max_dim: usize,
    ring: CoefficientRing,
    a_basis: Vec<Vec<VertexPath>>,
    a_pos: Vec<HashMap<VertexPath, usize>>,
    omega_basis: Vec<Vec<Chain<R>>>,
    /// Coordinate columns of the omega basis over the allowed basis.
    omega_cols: Vec<Mat<R>>,
    /// `d_omega[p]`: the boundary `Omega_p -> Omega_{p-1}` in omega bases;
    /// `d_omega[0]` is the zero map out of `Omega_0`.
    d_omega: Vec<Mat<R>>,
}

impl<R: Ring> OmegaComplex<R> {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    /// The highest dimension with trustworthy homology (bases exist one
    /// level beyond it).
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn a_basis(&self, p: usize) -> &[VertexPath] {
        &self.a_basis[p]
    }

    pub fn omega_basis(&self, p: usize) -> &[Chain<R>] {
        &self.omega_basis[p]
    }

    pub fn dim_omega(&self, p: usize) -> usize {
        self.omega_basis.get(p).map_or(0, |b| b.len())
    }

    pub fn d_matrix(&self, p: usize) -> &Mat<R> {
        &self.d_omega[p]
    }

    /// Coordinates of an allowed chain over the allowed basis in its
    /// dimension; `None` if some path is outside the basis.
    fn a_coordinates(&self, c: &Chain<R>) -> Option<Vec<R>> {
        let p = c.dim();
        if p < 0 || p as usize >= self.a_basis.len() {
            return None;
        }
        let p = p as usize;
        let mut v = vec![R::zero(); self.a_basis[p].len()];
        for (path, coeff) in c.terms() {
            let idx = self.a_pos[p].get(path)?;
            v[*idx] = coeff.clone();
        }
        Some(v)
    }

    fn chain_from_omega_coords(&self, p: usize, coords: &[R]) -> Chain<R> {
        let mut out = Chain::zero(p as isize);
        for (j, coeff) in coords.iter().enumerate() {
            if !coeff.is_zero() {
                out = out + self.omega_basis[p][j].scaled(coeff);
            }
        }
        out
    }
}

fn skeleton(
    g: &Digraph,
    p_max: usize,
    budget: usize,
) -> Result<(Vec<Vec<VertexPath>>, Vec<HashMap<VertexPath, usize>>), ChainError> {
    let mut a_basis = Vec::with_capacity(p_max + 2);
    let mut a_pos = Vec::with_capacity(p_max + 2);
    for p in 0..=p_max + 1 {
        let basis = enumerate_allowed(g, p, budget)?;
        let pos: HashMap<VertexPath, usize> = basis
            .iter()
            .enumerate()
            .map(|(i, path)| (path.clone(), i))
            .collect();
        a_basis.push(basis);
        a_pos.push(pos);
    }
    Ok((a_basis, a_pos))
}

/// The constraint matrix whose kernel is `Omega_p`: coordinates of the
/// non-allowed part of each basis path's boundary. Integer entries (all
/// coefficients are signs).
fn constraint_matrix(
    a_basis: &[Vec<VertexPath>],
    a_pos: &[HashMap<VertexPath, usize>],
    p: usize,
) -> ZMat {
    let cols = a_basis[p].len();
    let mut row_index: BTreeMap<VertexPath, usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, BigInt)> = Vec::new();
    for (j, path) in a_basis[p].iter().enumerate() {
        let b: ChainZ = Chain::unit(path.clone()).boundary();
        for (face, coeff) in b.terms() {
            if a_pos[p - 1].contains_key(face) {
                continue;
            }
            let next = row_index.len();
            let row = *row_index.entry(face.clone()).or_insert(next);
            entries.push((row, j, coeff.clone()));
        }
    }
    let mut m = ZMat::zeros(row_index.len(), cols);
    for (r, c, v) in entries {
        m[(r, c)] = v;
    }
    m
}

fn zmat_to_q(m: &ZMat) -> QMat {
    let mut q = QMat::zeros(m.rows, m.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            q[(r, c)] = BigRational::from_integer(m[(r, c)].clone());
        }
    }
    q
}

/// Builds the rational complex through `p_max + 1`, with kernel bases in
/// reduced echelon form.
pub fn build_omega_q(g: &Digraph, p_max: usize) -> Result<OmegaComplex<BigRational>, ChainError> {
    build_omega_q_with_budget(g, p_max, DEFAULT_PATH_BUDGET)
}

pub fn build_omega_q_with_budget(
    g: &Digraph,
    p_max: usize,
    budget: usize,
) -> Result<OmegaComplex<BigRational>, ChainError> {
    let (a_basis, a_pos) = skeleton(g, p_max, budget)?;
    let mut omega_cols: Vec<QMat> = Vec::new();
    for p in 0..=p_max + 1 {
        let n = a_basis[p].len();
        let cols = if p <= 1 {
            QMat::identity(n)
        } else {
            let c = zmat_to_q(&constraint_matrix(&a_basis, &a_pos, p));
            let basis = kernel_basis(&c);
            QMat::from_columns(n, &basis)
        };
        omega_cols.push(cols);
    }
    finish_complex(g, p_max, CoefficientRing::Q, a_basis, a_pos, omega_cols, |m, rhs| {
        solve_columns(m, rhs).expect("omega boundaries stay inside the lower omega level")
    })
}

/// Builds the integer complex through `p_max + 1`; each `Omega_p` basis is a
/// lattice basis of the saturated integer kernel.
pub fn build_omega_z(g: &Digraph, p_max: usize) -> Result<OmegaComplex<BigInt>, ChainError> {
    build_omega_z_with_budget(g, p_max, DEFAULT_PATH_BUDGET)
}

pub fn build_omega_z_with_budget(
    g: &Digraph,
    p_max: usize,
    budget: usize,
) -> Result<OmegaComplex<BigInt>, ChainError> {
    let (a_basis, a_pos) = skeleton(g, p_max, budget)?;
    let mut omega_cols: Vec<ZMat> = Vec::new();
    for p in 0..=p_max + 1 {
        let n = a_basis[p].len();
        let cols = if p <= 1 {
            ZMat::identity(n)
        } else {
            let c = constraint_matrix(&a_basis, &a_pos, p);
            ZMat::from_columns(n, &integer_kernel(&c))
        };
        omega_cols.push(cols);
    }
    finish_complex(g, p_max, CoefficientRing::Z, a_basis, a_pos, omega_cols, |m, rhs| {
        let snf = smith_normal_form(m);
        let mut out = ZMat::zeros(m.cols, rhs.cols);
        for j in 0..rhs.cols {
            let x = snf
                .solve(&rhs.column(j))
                .expect("omega boundaries stay inside the lower omega lattice");
            for (i, v) in x.into_iter().enumerate() {
                out[(i, j)] = v;
            }
        }
        out
    })
}

fn finish_complex<R: Ring>(
    g: &Digraph,
    p_max: usize,
    ring: CoefficientRing,
    a_basis: Vec<Vec<VertexPath>>,
    a_pos: Vec<HashMap<VertexPath, usize>>,
    omega_cols: Vec<Mat<R>>,
    solve_in_lower: impl Fn(&Mat<R>, &Mat<R>) -> Mat<R>,
) -> Result<OmegaComplex<R>, ChainError> {
    let mut omega_basis: Vec<Vec<Chain<R>>> = Vec::with_capacity(p_max + 2);
    for (p, cols) in omega_cols.iter().enumerate() {
        let mut level = Vec::with_capacity(cols.cols);
        for j in 0..cols.cols {
            let chain = Chain::from_terms(
                p as isize,
                a_basis[p]
                    .iter()
                    .enumerate()
                    .map(|(i, path)| (path.clone(), cols[(i, j)].clone())),
            );
            level.push(chain);
        }
        omega_basis.push(level);
    }

    let mut d_omega: Vec<Mat<R>> = Vec::with_capacity(p_max + 2);
    d_omega.push(Mat::zeros(0, omega_basis[0].len()));
    for p in 1..=p_max + 1 {
        let lower_len = a_basis[p - 1].len();
        let mut rhs = Mat::zeros(lower_len, omega_basis[p].len());
        for (j, omega) in omega_basis[p].iter().enumerate() {
            let b = omega.boundary();
            for (path, coeff) in b.terms() {
                let row = a_pos[p - 1][path];
                rhs[(row, j)] = coeff.clone();
            }
        }
        let coords = if p - 1 <= 1 {
            rhs
        } else {
            solve_in_lower(&omega_cols[p - 1], &rhs)
        };
        d_omega.push(coords);
    }

    Ok(OmegaComplex {
        digraph: g.clone(),
        max_dim: p_max,
        ring,
        a_basis,
        a_pos,
        omega_basis,
        omega_cols,
        d_omega,
    })
}

/// Per-dimension Betti numbers, invariant factors (integer mode), and
/// optional generator representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyResult {
    pub ring: CoefficientRing,
    pub betti: Vec<usize>,
    /// Invariant factors greater than 1, per dimension; always empty in Q
    /// mode.
    pub torsion: Vec<Vec<BigInt>>,
    /// Representative cycles per dimension, as primitive integer chains.
    pub generators: Option<Vec<Vec<ChainZ>>>,
}

/// Path homology of `g` through dimension `p_max`.
pub fn homology(
    g: &Digraph,
    p_max: usize,
    ring: CoefficientRing,
) -> Result<HomologyResult, HomologyError> {
    homology_with(g, p_max, ring, false, DEFAULT_PATH_BUDGET)
}

pub fn homology_with(
    g: &Digraph,
    p_max: usize,
    ring: CoefficientRing,
    generators: bool,
    budget: usize,
) -> Result<HomologyResult, HomologyError> {
    match ring {
        CoefficientRing::Q => {
            let complex = build_omega_q_with_budget(g, p_max, budget)?;
            Ok(homology_q(&complex, generators))
        }
        CoefficientRing::Z => {
            let complex = build_omega_z_with_budget(g, p_max, budget)?;
            Ok(homology_z(&complex, generators))
        }
    }
}

fn homology_q(complex: &OmegaComplex<BigRational>, want_generators: bool) -> HomologyResult {
    let p_max = complex.max_dim;
    let ranks: Vec<usize> = (0..=p_max + 1).map(|p| rank(&complex.d_omega[p])).collect();
    let mut betti = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        betti.push(complex.dim_omega(p) - ranks[p] - ranks[p + 1]);
    }
    let generators = want_generators.then(|| {
        (0..=p_max)
            .map(|p| {
                let kernel = kernel_basis(&complex.d_omega[p]);
                let image: Vec<Vec<BigRational>> = (0..complex.d_omega[p + 1].cols)
                    .map(|j| complex.d_omega[p + 1].column(j))
                    .collect();
                let reps = pick_generators_q(complex.dim_omega(p), &image, &kernel);
                reps.into_iter()
                    .map(|coords| primitive_chain_q(&complex.chain_from_omega_coords(p, &coords)))
                    .collect()
            })
            .collect()
    });
    HomologyResult {
        ring: CoefficientRing::Q,
        betti,
        torsion: vec![Vec::new(); p_max + 1],
        generators,
    }
}

fn homology_z(complex: &OmegaComplex<BigInt>, want_generators: bool) -> HomologyResult {
    let p_max = complex.max_dim;
    let mut betti = Vec::with_capacity(p_max + 1);
    let mut torsion = Vec::with_capacity(p_max + 1);
    let mut generators = want_generators.then(Vec::new);
    for p in 0..=p_max {
        // cycles: saturated integer kernel of d_p in Omega_p coordinates
        let kernel: Vec<Vec<BigInt>> = if p == 0 {
            (0..complex.dim_omega(0))
                .map(|i| {
                    let mut v = vec![BigInt::zero(); complex.dim_omega(0)];
                    v[i] = BigInt::one();
                    v
                })
                .collect()
        } else {
            integer_kernel(&complex.d_omega[p])
        };
        let kernel_mat = ZMat::from_columns(complex.dim_omega(p), &kernel);
        // boundaries, rewritten in kernel coordinates
        let snf_kernel = smith_normal_form(&kernel_mat);
        let d_next = &complex.d_omega[p + 1];
        let mut in_kernel_coords = ZMat::zeros(kernel.len(), d_next.cols);
        for j in 0..d_next.cols {
            let x = snf_kernel
                .solve(&d_next.column(j))
                .expect("boundaries lie in the saturated cycle lattice");
            for (i, v) in x.into_iter().enumerate() {
                in_kernel_coords[(i, j)] = v;
            }
        }
        let snf_b = smith_normal_form(&in_kernel_coords);
        betti.push(kernel.len() - snf_b.rank);
        torsion.push(
            (0..snf_b.rank)
                .map(|i| snf_b.s[(i, i)].abs())
                .filter(|d| d > &BigInt::one())
                .collect(),
        );
        if let Some(gens) = generators.as_mut() {
            let image_q: Vec<Vec<BigRational>> = (0..d_next.cols)
                .map(|j| {
                    d_next
                        .column(j)
                        .into_iter()
                        .map(BigRational::from_integer)
                        .collect()
                })
                .collect();
            let kernel_q: Vec<Vec<BigRational>> = kernel
                .iter()
                .map(|v| v.iter().cloned().map(BigRational::from_integer).collect())
                .collect();
            let reps = pick_generators_q(complex.dim_omega(p), &image_q, &kernel_q);
            let level: Vec<ChainZ> = reps
                .into_iter()
                .map(|coords| {
                    let ints: Vec<BigInt> =
                        coords.iter().map(|x| x.to_integer()).collect();
                    primitive_chain_z(&complex.chain_from_omega_coords(p, &ints))
                })
                .collect();
            gens.push(level);
        }
    }
    HomologyResult {
        ring: CoefficientRing::Z,
        betti,
        torsion,
        generators,
    }
}

/// Kernel vectors that extend the image to a spanning set, greedily in
/// echelon order. Returned as coordinate vectors over `Omega_p`.
fn pick_generators_q(
    dim: usize,
    image: &[Vec<BigRational>],
    kernel: &[Vec<BigRational>],
) -> Vec<Vec<BigRational>> {
    let mut selected: Vec<Vec<BigRational>> = image.to_vec();
    let mut current_rank = rank(&QMat::from_columns(dim, &selected));
    let mut out = Vec::new();
    for k in kernel {
        selected.push(k.clone());
        let r = rank(&QMat::from_columns(dim, &selected));
        if r > current_rank {
            current_rank = r;
            out.push(k.clone());
        } else {
            selected.pop();
        }
    }
    out
}

/// Rescales a rational chain to a primitive integer chain with the same span.
fn primitive_chain_q(c: &ChainQ) -> ChainZ {
    let coeffs: Vec<BigRational> = c.terms().map(|(_, v)| v.clone()).collect();
    let prim = primitive_integer_vector(&coeffs);
    Chain::from_terms(
        c.dim(),
        c.terms()
            .zip(prim)
            .map(|((p, _), coeff)| (p.clone(), coeff)),
    )
}

fn primitive_chain_z(c: &ChainZ) -> ChainZ {
    let coeffs: Vec<BigRational> = c
        .terms()
        .map(|(_, v)| BigRational::from_integer(v.clone()))
        .collect();
    let prim = primitive_integer_vector(&coeffs);
    Chain::from_terms(
        c.dim(),
        c.terms()
            .zip(prim)
            .map(|((p, _), coeff)| (p.clone(), coeff)),
    )
}

impl OmegaComplex<BigRational> {
    /// Membership test for `Omega_p`: allowed, with allowed boundary, and in
    /// the span of the computed basis.
    pub fn omega_coordinates(&self, c: &ChainQ) -> Option<Vec<BigRational>> {
        let p = c.dim();
        if p < 0 || p as usize >= self.omega_basis.len() {
            return None;
        }
        let coords = self.a_coordinates(c)?;
        solve(&self.omega_cols[p as usize], &coords)
    }

    /// Decides whether a cycle bounds; returns a witness with
    /// `boundary(witness) = c` when it does.
    pub fn is_boundary(&self, c: &ChainQ) -> Result<Option<ChainQ>, HomologyError> {
        let p = c.dim().max(0) as usize;
        if p + 1 >= self.omega_basis.len() {
            return Err(HomologyError::DimensionUnavailable {
                built: self.max_dim + 1,
                requested: p + 1,
            });
        }
        if c.is_zero() {
            return Ok(Some(Chain::zero(p as isize + 1)));
        }
        let coords = self
            .omega_coordinates(c)
            .ok_or(HomologyError::NotACycle(c.dim()))?;
        if !c.boundary().is_zero() {
            return Err(HomologyError::NotACycle(c.dim()));
        }
        Ok(solve(&self.d_omega[p + 1], &coords)
            .map(|y| self.chain_from_omega_coords(p + 1, &y)))
    }
}

impl OmegaComplex<BigInt> {
    pub fn omega_coordinates(&self, c: &ChainZ) -> Option<Vec<BigInt>> {
        let p = c.dim();
        if p < 0 || p as usize >= self.omega_basis.len() {
            return None;
        }
        let coords = self.a_coordinates(c)?;
        smith_normal_form(&self.omega_cols[p as usize]).solve(&coords)
    }

    /// Integral version of the bounding test: the witness, when it exists,
    /// has integer coefficients.
    pub fn is_boundary(&self, c: &ChainZ) -> Result<Option<ChainZ>, HomologyError> {
        let p = c.dim().max(0) as usize;
        if p + 1 >= self.omega_basis.len() {
            return Err(HomologyError::DimensionUnavailable {
                built: self.max_dim + 1,
                requested: p + 1,
            });
        }
        if c.is_zero() {
            return Ok(Some(Chain::zero(p as isize + 1)));
        }
        let coords = self
            .omega_coordinates(c)
            .ok_or(HomologyError::NotACycle(c.dim()))?;
        if !c.boundary().is_zero() {
            return Err(HomologyError::NotACycle(c.dim()));
        }
        Ok(smith_normal_form(&self.d_omega[p + 1])
            .solve(&coords)
            .map(|y| self.chain_from_omega_coords(p + 1, &y)))
    }
}

/// One-shot bounding test over the chosen ring for a cycle of any dimension.
pub fn is_boundary_z(g: &Digraph, c: &ChainZ) -> Result<Option<ChainZ>, HomologyError> {
    let p = c.dim().max(0) as usize;
    let complex = build_omega_z(g, p)?;
    complex.is_boundary(c)
}

pub fn is_boundary_q(g: &Digraph, c: &ChainQ) -> Result<Option<ChainQ>, HomologyError> {
    let p = c.dim().max(0) as usize;
    let complex = build_omega_q(g, p)?;
    complex.is_boundary(c)
}

/// The standard closed 1-chain of a cycle digraph: forward edges enter with
/// `+`, backward edges with `-`. The input must be a digraph produced by the
/// cycle construction (vertices `0..n` joined consecutively).
pub fn standard_cycle_path(s: &Digraph) -> Result<ChainZ, HomologyError> {
    let n = s.vertex_count();
    if n < 3 || s.edge_count() != n {
        return Err(HomologyError::NotACycleDigraph);
    }
    let mut chain = Chain::zero(1);
    for i in 0..n {
        let j = (i + 1) % n;
        let fwd = s.has_edge(i, j);
        let bwd = s.has_edge(j, i);
        match (fwd, bwd) {
            (true, false) => chain.add_term(VertexPath(vec![i, j]), BigInt::one()),
            (false, true) => chain.add_term(VertexPath(vec![j, i]), -BigInt::one()),
            _ => return Err(HomologyError::NotACycleDigraph),
        }
    }
    Ok(chain)
}

/// A term of the structural decomposition of an `Omega_2` element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Omega2Term {
    /// `e_{iji}` with a double edge `i <-> j`.
    DoubleEdge { path: VertexPath, mult: BigInt },
    /// `e_{ijk}` with `i -> j -> k` and the shortcut `i -> k`.
    Triangle { path: VertexPath, mult: BigInt },
    /// `e_{ijk} - e_{imk}` with both routes present and no shortcut.
    Square {
        plus: VertexPath,
        minus: VertexPath,
        mult: BigInt,
    },
}

impl Omega2Term {
    pub fn chain(&self) -> ChainZ {
        match self {
            Omega2Term::DoubleEdge { path, mult } | Omega2Term::Triangle { path, mult } => {
                Chain::single(path.clone(), mult.clone())
            }
            Omega2Term::Square { plus, minus, mult } => {
                Chain::single(plus.clone(), mult.clone())
                    - Chain::single(minus.clone(), mult.clone())
            }
        }
    }
}

/// Writes an integral `Omega_2` element as a combination of double edges,
/// triangles, and squares, following the constructive peeling: double edges
/// and triangles come off termwise, then opposite-sign routes over each
/// missing shortcut pair up into squares.
pub fn decompose_omega2(g: &Digraph, omega: &ChainZ) -> Result<Vec<Omega2Term>, HomologyError> {
    if omega.dim() != 2 || !omega.is_allowed(g) || !omega.boundary().is_allowed(g) {
        return Err(HomologyError::NotInOmega2);
    }
    let mut out = Vec::new();
    // (i, k) -> signed multiplicities of middles j
    let mut by_endpoints: BTreeMap<(usize, usize), Vec<(usize, BigInt)>> = BTreeMap::new();
    for (path, coeff) in omega.terms() {
        let [i, j, k] = [path.0[0], path.0[1], path.0[2]];
        if i == k {
            out.push(Omega2Term::DoubleEdge {
                path: path.clone(),
                mult: coeff.clone(),
            });
        } else if g.has_edge(i, k) {
            out.push(Omega2Term::Triangle {
                path: path.clone(),
                mult: coeff.clone(),
            });
        } else {
            by_endpoints
                .entry((i, k))
                .or_default()
                .push((j, coeff.clone()));
        }
    }
    for ((i, k), mut middles) in by_endpoints {
        middles.sort_by_key(|(j, _)| *j);
        let mut pos: Vec<(usize, BigInt)> = middles
            .iter()
            .filter(|(_, c)| c.is_positive())
            .cloned()
            .collect();
        let mut neg: Vec<(usize, BigInt)> = middles
            .iter()
            .filter(|(_, c)| c.is_negative())
            .map(|(j, c)| (*j, -c.clone()))
            .collect();
        let (mut a, mut b) = (0, 0);
        while a < pos.len() && b < neg.len() {
            let m = pos[a].1.clone().min(neg[b].1.clone());
            out.push(Omega2Term::Square {
                plus: VertexPath(vec![i, pos[a].0, k]),
                minus: VertexPath(vec![i, neg[b].0, k]),
                mult: m.clone(),
            });
            pos[a].1 -= m.clone();
            neg[b].1 -= m;
            if pos[a].1.is_zero() {
                a += 1;
            }
            if neg[b].1.is_zero() {
                b += 1;
            }
        }
        if a < pos.len() || b < neg.len() {
            // a lone route would leave a non-allowed edge in the boundary
            return Err(HomologyError::NotInOmega2);
        }
    }
    Ok(out)
}

/// The matrix of the map induced on rational homology in dimension `p`,
/// written over the canonical generator representatives of source and
/// target. Rows index target classes, columns source classes.
pub fn induced_homology_matrix(f: &DigraphMap, p: usize) -> Result<QMat, HomologyError> {
    let src = build_omega_q(f.source(), p)?;
    let dst = build_omega_q(f.target(), p)?;
    let src_kernel = kernel_basis(&src.d_omega[p]);
    let src_image: Vec<Vec<BigRational>> = (0..src.d_omega[p + 1].cols)
        .map(|j| src.d_omega[p + 1].column(j))
        .collect();
    let src_gens = pick_generators_q(src.dim_omega(p), &src_image, &src_kernel);

    let dst_kernel = kernel_basis(&dst.d_omega[p]);
    let dst_image: Vec<Vec<BigRational>> = (0..dst.d_omega[p + 1].cols)
        .map(|j| dst.d_omega[p + 1].column(j))
        .collect();
    let dst_gens = pick_generators_q(dst.dim_omega(p), &dst_image, &dst_kernel);

    // express image classes over [boundaries | generators]
    let mut cols = dst_image.clone();
    cols.extend(dst_gens.iter().cloned());
    let basis = QMat::from_columns(dst.dim_omega(p), &cols);

    let mut out = QMat::zeros(dst_gens.len(), src_gens.len());
    for (j, gen) in src_gens.iter().enumerate() {
        let chain = src.chain_from_omega_coords(p, gen);
        let image_chain = chain.mapped(f.assignment());
        let coords = dst
            .omega_coordinates(&image_chain)
            .expect("digraph maps carry omega into omega");
        let x = solve(&basis, &coords).expect("image of a cycle is a cycle");
        for i in 0..dst_gens.len() {
            out[(i, j)] = x[dst_image.len() + i].clone();
        }
    }
    Ok(out)
}
