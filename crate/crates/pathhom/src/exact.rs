//! Exact dense linear algebra: reduced echelon form, kernels and solves over
//! the rationals, and Smith normal form with transforms over the integers.
//! Everything is arbitrary precision; matrices stay desk-scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense column-major-agnostic matrix; `a[r * cols + c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    a: Vec<T>,
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_columns(rows: usize, cols: &[Vec<T>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.a[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.a[r * self.cols + c]
    }
}

pub type QMat = Mat<BigRational>;
pub type ZMat = Mat<BigInt>;

/// Reduces `m` in place to reduced row echelon form; returns the pivot
/// columns in order.
pub fn rref(m: &mut QMat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        for c in 0..m.cols {
            let tmp = m[(pr, c)].clone();
            m[(pr, c)] = m[(row, c)].clone();
            m[(row, c)] = tmp;
        }
        let inv = m[(row, col)].recip();
        for c in col..m.cols {
            let v = m[(row, c)].clone() * inv.clone();
            m[(row, c)] = v;
        }
        for r in 0..m.rows {
            if r != row && !m[(r, col)].is_zero() {
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    let v = m[(r, c)].clone() - factor.clone() * m[(row, c)].clone();
                    m[(r, c)] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &QMat) -> usize {
    let mut c = m.clone();
    rref(&mut c).len()
}

/// Canonical kernel basis from the RREF: one column per free variable, with
/// a 1 in the free slot. Columns ordered by free-column index.
pub fn kernel_basis(m: &QMat) -> Vec<Vec<BigRational>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![BigRational::zero(); m.cols];
        v[free] = BigRational::one();
        for (prow, &pcol) in pivots.iter().enumerate() {
            v[pcol] = -r[(prow, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves `m x = b` over the rationals; `None` when inconsistent. Free
/// variables are set to zero.
pub fn solve(m: &QMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rhs = QMat::from_columns(b.len(), &[b.to_vec()]);
    solve_columns(m, &rhs).map(|x| x.column(0))
}

/// Solves `m X = rhs` column-wise with a single elimination; `None` when any
/// column is inconsistent.
pub fn solve_columns(m: &QMat, rhs: &QMat) -> Option<QMat> {
    assert_eq!(rhs.rows, m.rows);
    let mut aug = Mat::zeros(m.rows, m.cols + rhs.cols);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug[(r, c)] = m[(r, c)].clone();
        }
        for c in 0..rhs.cols {
            aug[(r, m.cols + c)] = rhs[(r, c)].clone();
        }
    }
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&p| p >= m.cols) {
        return None;
    }
    let mut x = QMat::zeros(m.cols, rhs.cols);
    for j in 0..rhs.cols {
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[(pcol, j)] = aug[(prow, m.cols + j)].clone();
        }
    }
    Some(x)
}

/// Smith normal form with transforms: returns `(u, s, v)` with
/// `u * m * v = s`, `u` and `v` unimodular, `s` diagonal with each entry
/// dividing the next. Pivots are chosen by minimal absolute value.
pub struct Snf {
    pub u: ZMat,
    pub s: ZMat,
    pub v: ZMat,
    pub rank: usize,
}

pub fn smith_normal_form(m: &ZMat) -> Snf {
    let mut s = m.clone();
    let mut u = ZMat::identity(s.rows);
    let mut v = ZMat::identity(s.cols);
    let n = s.rows.min(s.cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut pivot: Option<(usize, usize)> = None;
        for r in t..s.rows {
            for c in t..s.cols {
                if !s[(r, c)].is_zero()
                    && pivot
                        .map(|(pr, pc)| s[(r, c)].abs() < s[(pr, pc)].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else {
            break;
        };
        swap_rows(&mut s, &mut u, t, pr);
        swap_cols(&mut s, &mut v, t, pc);
        loop {
            let mut dirty = false;
            for r in (t + 1)..s.rows {
                if !s[(r, t)].is_zero() {
                    let q = div_nearest(&s[(r, t)], &s[(t, t)]);
                    if !q.is_zero() {
                        row_sub(&mut s, &mut u, r, t, &q);
                    }
                    if !s[(r, t)].is_zero() {
                        // remainder smaller than pivot: swap it up and restart
                        swap_rows(&mut s, &mut u, t, r);
                        dirty = true;
                    }
                }
            }
            for c in (t + 1)..s.cols {
                if !s[(t, c)].is_zero() {
                    let q = div_nearest(&s[(t, c)], &s[(t, t)]);
                    if !q.is_zero() {
                        col_sub(&mut s, &mut v, c, t, &q);
                    }
                    if !s[(t, c)].is_zero() {
                        swap_cols(&mut s, &mut v, t, c);
                        dirty = true;
                    }
                }
            }
            if !dirty
                && ((t + 1)..s.rows).all(|r| s[(r, t)].is_zero())
                && ((t + 1)..s.cols).all(|c| s[(t, c)].is_zero())
            {
                break;
            }
        }
        // divisibility: fold any entry the pivot misses into the pivot column
        let mut redo = false;
        'outer: for r in (t + 1)..s.rows {
            for c in (t + 1)..s.cols {
                if !(s[(r, c)].clone() % s[(t, t)].clone()).is_zero() {
                    let one = BigInt::one();
                    row_sub(&mut s, &mut u, t, r, &(-one));
                    redo = true;
                    break 'outer;
                }
            }
        }
        if redo {
            continue;
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, &mut u, t);
        }
        t += 1;
    }
    Snf {
        u,
        v,
        rank: t,
        s,
    }
}

fn swap_rows(s: &mut ZMat, u: &mut ZMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for c in 0..s.cols {
        let tmp = s[(a, c)].clone();
        s[(a, c)] = s[(b, c)].clone();
        s[(b, c)] = tmp;
    }
    for c in 0..u.cols {
        let tmp = u[(a, c)].clone();
        u[(a, c)] = u[(b, c)].clone();
        u[(b, c)] = tmp;
    }
}

fn swap_cols(s: &mut ZMat, v: &mut ZMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for r in 0..s.rows {
        let tmp = s[(r, a)].clone();
        s[(r, a)] = s[(r, b)].clone();
        s[(r, b)] = tmp;
    }
    for r in 0..v.rows {
        let tmp = v[(r, a)].clone();
        v[(r, a)] = v[(r, b)].clone();
        v[(r, b)] = tmp;
    }
}

/// row a -= q * row b, mirrored into u
fn row_sub(s: &mut ZMat, u: &mut ZMat, a: usize, b: usize, q: &BigInt) {
    for c in 0..s.cols {
        let v = s[(a, c)].clone() - q.clone() * s[(b, c)].clone();
        s[(a, c)] = v;
    }
    for c in 0..u.cols {
        let v = u[(a, c)].clone() - q.clone() * u[(b, c)].clone();
        u[(a, c)] = v;
    }
}

/// col a -= q * col b, mirrored into v
fn col_sub(s: &mut ZMat, v: &mut ZMat, a: usize, b: usize, q: &BigInt) {
    for r in 0..s.rows {
        let x = s[(r, a)].clone() - q.clone() * s[(r, b)].clone();
        s[(r, a)] = x;
    }
    for r in 0..v.rows {
        let x = v[(r, a)].clone() - q.clone() * v[(r, b)].clone();
        v[(r, a)] = x;
    }
}

fn negate_row(s: &mut ZMat, u: &mut ZMat, r: usize) {
    for c in 0..s.cols {
        let v = -s[(r, c)].clone();
        s[(r, c)] = v;
    }
    for c in 0..u.cols {
        let v = -u[(r, c)].clone();
        u[(r, c)] = v;
    }
}

/// Rounded division keeping remainders small in absolute value.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Basis of the integer kernel lattice of `m` (the saturated kernel): the
/// trailing columns of the SNF column transform.
pub fn integer_kernel(m: &ZMat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    (snf.rank..m.cols).map(|j| snf.v.column(j)).collect()
}

impl Snf {
    /// Solves `m x = b` for the decomposed matrix; `None` when no integral
    /// solution exists. `m = u^-1 s v^-1`, so `m x = b` iff `s y = u b` with
    /// `x = v y`.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.u.cols);
        let ub: Vec<BigInt> = (0..self.u.rows)
            .map(|r| {
                (0..self.u.cols)
                    .map(|c| self.u[(r, c)].clone() * b[c].clone())
                    .sum()
            })
            .collect();
        let cols = self.v.rows;
        let mut y = vec![BigInt::zero(); cols];
        for i in 0..self.rank {
            let (q, r) = ub[i].div_rem(&self.s[(i, i)]);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
        if ub.iter().skip(self.rank).any(|e| !e.is_zero()) {
            return None;
        }
        let x: Vec<BigInt> = (0..cols)
            .map(|r| {
                (0..self.v.cols)
                    .map(|c| self.v[(r, c)].clone() * y[c].clone())
                    .sum()
            })
            .collect();
        Some(x)
    }
}

/// Solves `m x = b` over the integers via SNF; `None` when no integral
/// solution exists.
pub fn integer_solve(m: &ZMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows);
    smith_normal_form(m).solve(b)
}

/// Invariant factors (diagonal of the SNF) that exceed 1.
pub fn torsion_factors(m: &ZMat) -> Vec<BigInt> {
    let snf = smith_normal_form(m);
    (0..snf.rank)
        .map(|i| snf.s[(i, i)].clone())
        .filter(|d| d.abs() > BigInt::one())
        .map(|d| d.abs())
        .collect()
}

/// Scales a rational vector to a primitive integer vector (clears
/// denominators, divides by the content). Zero stays zero.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        if !x.is_zero() {
            lcm = lcm.lcm(x.denom());
        }
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x.clone() * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut gcd = BigInt::zero();
    for x in &ints {
        gcd = gcd.gcd(x);
    }
    if gcd.is_zero() || gcd.is_one() {
        return ints;
    }
    ints.iter().map(|x| x / gcd.clone()).collect()
}

pub fn mat_mul_z(a: &ZMat, b: &ZMat) -> ZMat {
    assert_eq!(a.cols, b.rows);
    let mut out = ZMat::zeros(a.rows, b.cols);
    for r in 0..a.rows {
        for c in 0..b.cols {
            let mut acc = BigInt::zero();
            for k in 0..a.cols {
                acc += a[(r, k)].clone() * b[(k, c)].clone();
            }
            out[(r, c)] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qmat(rows: usize, cols: usize, data: &[i64]) -> QMat {
        let mut m = QMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = q(data[r * cols + c]);
            }
        }
        m
    }

    fn zmat(rows: usize, cols: usize, data: &[i64]) -> ZMat {
        let mut m = ZMat::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = BigInt::from(data[r * cols + c]);
            }
        }
        m
    }

    #[test]
    fn rref_rank_and_kernel() {
        let m = qmat(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in 0..m.rows {
                let dot: BigRational = (0..3).map(|c| m[(r, c)].clone() * v[c].clone()).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = qmat(2, 2, &[1, 1, 0, 1]);
        let x = solve(&m, &[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(2)]);
        let sing = qmat(2, 2, &[1, 1, 1, 1]);
        assert!(solve(&sing, &[q(1), q(2)]).is_none());
    }

    #[test]
    fn snf_diag_and_transforms() {
        let m = zmat(2, 2, &[2, 4, 6, 8]);
        let snf = smith_normal_form(&m);
        // u m v = s
        let umv = mat_mul_z(&mat_mul_z(&snf.u, &m), &snf.v);
        assert_eq!(umv, snf.s);
        assert_eq!(snf.rank, 2);
        let d0 = snf.s[(0, 0)].clone();
        let d1 = snf.s[(1, 1)].clone();
        assert!((d1.clone() % d0.clone()).is_zero());
        assert_eq!(d0 * d1, BigInt::from(8)); // |det| = 8
    }

    #[test]
    fn snf_known_invariant_factors() {
        // classic example with torsion Z/2
        let m = zmat(3, 3, &[2, 0, 0, 0, 2, 0, 0, 0, 2]);
        assert_eq!(
            torsion_factors(&m),
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(2)]
        );
        let m2 = zmat(2, 3, &[1, 2, 3, 4, 5, 6]);
        let snf = smith_normal_form(&m2);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.s[(0, 0)], BigInt::one());
        assert_eq!(snf.s[(1, 1)], BigInt::from(3));
    }

    #[test]
    fn integer_kernel_is_saturated() {
        // kernel of [2 4] over Q is spanned by (2,-1); the integer kernel
        // must contain it primitively
        let m = zmat(1, 2, &[2, 4]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let dot: BigInt = v[0].clone() * 2 + v[1].clone() * 4;
        assert!(dot.is_zero());
        let g = v[0].gcd(&v[1]);
        assert!(g.is_one());
    }

    #[test]
    fn integer_solve_detects_non_integral() {
        let m = zmat(2, 2, &[2, 0, 0, 3]);
        assert_eq!(
            integer_solve(&m, &[BigInt::from(4), BigInt::from(6)]).unwrap(),
            vec![BigInt::from(2), BigInt::from(2)]
        );
        assert!(integer_solve(&m, &[BigInt::from(1), BigInt::from(6)]).is_none());
        // inconsistent system
        let m2 = zmat(2, 1, &[1, 1]);
        assert!(integer_solve(&m2, &[BigInt::from(1), BigInt::from(2)]).is_none());
    }

    #[test]
    fn primitive_vector_scaling() {
        let v = vec![
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(3), BigInt::from(4)),
        ];
        assert_eq!(
            primitive_integer_vector(&v),
            vec![BigInt::from(2), BigInt::from(3)]
        );
        assert_eq!(
            primitive_integer_vector(&[q(4), q(-6)]),
            vec![BigInt::from(2), BigInt::from(-3)]
        );
    }
}
