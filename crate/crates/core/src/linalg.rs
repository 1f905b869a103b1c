//! Exact integer and rational linear algebra on small dense matrices.
//!
//! Provides just what the lattice computations need: Hermite normal form
//! with unimodular transforms, integer kernels, Smith invariant factors,
//! fraction-free determinants, and rational elimination for semidefinite
//! and rank questions. No floating point anywhere.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::num::{int, Rat, Scalar};

/// Dense row-major matrix over an arbitrary ring element type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<T> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.at(r, c).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }
}

impl<I: Scalar> Matrix<I> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, I::zero())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, I::one());
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.at(r, c).clone() + a.clone() * other.at(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[I]) -> Vec<I> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(I::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Matrix applied to a rational vector.
    pub fn mul_vec_rat(&self, v: &[Rat<I>]) -> Vec<Rat<I>> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec_rat");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rat::<I>::zero(), |acc, (a, b)| {
                        acc + Ratio::from_integer(a.clone()) * b.clone()
                    })
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self.at(r, c) == self.at(c, r)))
    }

    pub fn to_rational(&self) -> Matrix<Rat<I>> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| Ratio::from_integer(v.clone()))
                .collect(),
        }
    }
}

pub fn dot<I: Scalar>(a: &[I], b: &[I]) -> I {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(I::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add_vec<I: Scalar>(a: &[I], b: &[I]) -> Vec<I> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<I: Scalar>(a: &[I], b: &[I]) -> Vec<I> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn neg_vec<I: Scalar>(a: &[I]) -> Vec<I> {
    a.iter().map(|x| -x.clone()).collect()
}

pub fn scale_vec<I: Scalar>(k: &I, a: &[I]) -> Vec<I> {
    a.iter().map(|x| k.clone() * x.clone()).collect()
}

/// Hermite normal form of the rows, with transforms.
///
/// Returns `(h, u, u_inv)` with `u * m = h`, `u` unimodular, `h` in row
/// HNF: pivots positive, left-to-right, entries above a pivot reduced to
/// `[0, pivot)`, zero rows at the bottom.
pub fn hnf_rows<I: Scalar>(m: &Matrix<I>) -> (Matrix<I>, Matrix<I>, Matrix<I>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = Matrix::<I>::identity(rows);
    let mut u_inv = Matrix::<I>::identity(rows);

    // Row op helpers keep u and u_inv in sync: h <- R h, u <- R u, u_inv <- u_inv R^-1.
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // Euclidean reduction of the entries below (and at) pivot_row in this column.
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..rows {
                if !h.at(r, col).is_zero() {
                    best = match best {
                        None => Some(r),
                        Some(b) => {
                            if h.at(r, col).abs() < h.at(b, col).abs() {
                                Some(r)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(best) = best else { break };
            if best != pivot_row {
                h.swap_rows(best, pivot_row);
                u.swap_rows(best, pivot_row);
                u_inv.swap_cols(best, pivot_row);
            }
            if h.at(pivot_row, col).is_negative() {
                for c in 0..cols {
                    let v = -h.at(pivot_row, c).clone();
                    h.set(pivot_row, c, v);
                }
                for c in 0..rows {
                    let v = -u.at(pivot_row, c).clone();
                    u.set(pivot_row, c, v);
                    let w = -u_inv.at(c, pivot_row).clone();
                    u_inv.set(c, pivot_row, w);
                }
            }
            let p = h.at(pivot_row, col).clone();
            let mut done = true;
            for r in pivot_row + 1..rows {
                if h.at(r, col).is_zero() {
                    continue;
                }
                let q = h.at(r, col).clone().div_floor(&p);
                row_add_mul(&mut h, r, pivot_row, &-q.clone());
                row_add_mul(&mut u, r, pivot_row, &-q.clone());
                // u_inv <- u_inv * (I + q E_{r,pivot}) : col pivot += q * col r
                col_add_mul(&mut u_inv, pivot_row, r, &q);
                if !h.at(r, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.at(pivot_row, col).is_zero() {
            continue;
        }
        // Reduce the entries above the pivot into [0, pivot).
        let p = h.at(pivot_row, col).clone();
        for r in 0..pivot_row {
            let q = h.at(r, col).clone().div_floor(&p);
            if !q.is_zero() {
                row_add_mul(&mut h, r, pivot_row, &-q.clone());
                row_add_mul(&mut u, r, pivot_row, &-q.clone());
                col_add_mul(&mut u_inv, pivot_row, r, &q);
            }
        }
        pivot_row += 1;
    }
    (h, u, u_inv)
}

fn row_add_mul<I: Scalar>(m: &mut Matrix<I>, dst: usize, src: usize, k: &I) {
    if k.is_zero() {
        return;
    }
    for c in 0..m.cols() {
        let v = m.at(dst, c).clone() + k.clone() * m.at(src, c).clone();
        m.set(dst, c, v);
    }
}

fn col_add_mul<I: Scalar>(m: &mut Matrix<I>, dst: usize, src: usize, k: &I) {
    if k.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        let v = m.at(r, dst).clone() + k.clone() * m.at(r, src).clone();
        m.set(r, dst, v);
    }
}

fn is_zero_row<I: Scalar>(m: &Matrix<I>, r: usize) -> bool {
    m.row(r).iter().all(Zero::is_zero)
}

/// Z-basis of `{ x : m x = 0 }`.
///
/// The kernel of an integer matrix is saturated, so the rows returned here
/// form an honest basis of the kernel subgroup, not just a finite-index
/// sublattice. The basis is canonicalized by a final HNF pass.
pub fn kernel_basis<I: Scalar>(m: &Matrix<I>) -> Vec<Vec<I>> {
    let (h, u, _) = hnf_rows(&m.transpose());
    let mut raw: Vec<Vec<I>> = Vec::new();
    for r in 0..h.rows() {
        if is_zero_row(&h, r) {
            raw.push(u.row_vec(r));
        }
    }
    if raw.is_empty() {
        return raw;
    }
    let (canon, _, _) = hnf_rows(&Matrix::from_rows(raw));
    (0..canon.rows())
        .filter(|&r| !is_zero_row(&canon, r))
        .map(|r| canon.row_vec(r))
        .collect()
}

/// Invariant factors (Smith normal form diagonal) of an integer matrix.
pub fn smith_invariants<I: Scalar>(m: &Matrix<I>) -> Vec<I> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut k = 0usize;
    let mut out = Vec::new();
    while k < rows.min(cols) {
        // Find the minimal nonzero entry in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..rows {
            for c in k..cols {
                if !a.at(r, c).is_zero() {
                    pivot = match pivot {
                        None => Some((r, c)),
                        Some((pr, pc)) => {
                            if a.at(r, c).abs() < a.at(pr, pc).abs() {
                                Some((r, c))
                            } else {
                                Some((pr, pc))
                            }
                        }
                    };
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap_rows(k, pr);
        a.swap_cols(k, pc);
        // Clear row and column k by euclidean steps; restart if a remainder pops up.
        loop {
            let mut clean = true;
            for r in k + 1..rows {
                if !a.at(r, k).is_zero() {
                    let q = a.at(r, k).clone().div_floor(&a.at(k, k).clone());
                    row_add_mul(&mut a, r, k, &-q);
                    if !a.at(r, k).is_zero() {
                        a.swap_rows(r, k);
                        clean = false;
                    }
                }
            }
            for c in k + 1..cols {
                if !a.at(k, c).is_zero() {
                    let q = a.at(k, c).clone().div_floor(&a.at(k, k).clone());
                    col_add_mul(&mut a, c, k, &-q);
                    if !a.at(k, c).is_zero() {
                        a.swap_cols(c, k);
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        // Ensure divisibility of the remaining block by the pivot.
        let p = a.at(k, k).clone();
        let mut divisible = true;
        'outer: for r in k + 1..rows {
            for c in k + 1..cols {
                if !a.at(r, c).clone().mod_floor(&p).is_zero() {
                    // Fold the offending row into row k and redo this step.
                    row_add_mul(&mut a, k, r, &I::one());
                    divisible = false;
                    break 'outer;
                }
            }
        }
        if !divisible {
            continue;
        }
        out.push(p.abs());
        k += 1;
    }
    out
}

/// Determinant by the Bareiss fraction-free elimination.
pub fn determinant<I: Scalar>(m: &Matrix<I>) -> I {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return I::one();
    }
    let mut a = m.clone();
    let mut sign = I::one();
    let mut prev = I::one();
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a.at(r, k).is_zero()) else {
                return I::zero();
            };
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for r in k + 1..n {
            for c in k + 1..n {
                let v = (a.at(k, k).clone() * a.at(r, c).clone()
                    - a.at(r, k).clone() * a.at(k, c).clone())
                    / prev.clone();
                a.set(r, c, v);
            }
            a.set(r, k, I::zero());
        }
        prev = a.at(k, k).clone();
    }
    sign * a.at(n - 1, n - 1).clone()
}

/// Whether the rows generate a saturated (primitive) sublattice of Z^n,
/// i.e. one that extends to a Z-basis of the ambient lattice.
pub fn rows_saturated<I: Scalar>(rows: &[Vec<I>]) -> bool {
    if rows.is_empty() {
        return true;
    }
    let m = Matrix::from_rows(rows.to_vec());
    let inv = smith_invariants(&m);
    inv.len() == rows.len() && inv.iter().all(One::is_one)
}

/// Rank over the rationals.
pub fn rank<I: Scalar>(m: &Matrix<I>) -> usize {
    let mut a = m.to_rational();
    let (rows, cols) = (a.rows(), a.cols());
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a.at(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(rank, p);
        let pivot = a.at(rank, col).clone();
        for r in rank + 1..rows {
            if a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone() / pivot.clone();
            for c in col..cols {
                let v = a.at(r, c).clone() - f.clone() * a.at(rank, c).clone();
                a.set(r, c, v);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Determinant of a rational matrix (Gaussian elimination).
pub fn determinant_rational<I: Scalar>(m: &Matrix<Rat<I>>) -> Rat<I> {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a = m.clone();
    let mut det = Rat::<I>::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
            return Rat::<I>::zero();
        };
        if p != col {
            a.swap_rows(p, col);
            det = -det;
        }
        let pivot = a.at(col, col).clone();
        det = det * pivot.clone();
        for r in col + 1..n {
            if a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone() / pivot.clone();
            for c in col..n {
                let v = a.at(r, c).clone() - f.clone() * a.at(col, c).clone();
                a.set(r, c, v);
            }
        }
    }
    det
}

/// Inverse of a rational square matrix; `None` when singular.
pub fn inverse_rational<I: Scalar>(m: &Matrix<Rat<I>>) -> Option<Matrix<Rat<I>>> {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    let mut a = m.clone();
    let mut inv = Matrix::<Rat<I>>::filled(n, n, Rat::<I>::zero());
    for i in 0..n {
        inv.set(i, i, Rat::<I>::one());
    }
    for col in 0..n {
        let p = (col..n).find(|&r| !a.at(r, col).is_zero())?;
        a.swap_rows(p, col);
        inv.swap_rows(p, col);
        let pivot = a.at(col, col).clone();
        for c in 0..n {
            a.set(col, c, a.at(col, c).clone() / pivot.clone());
            inv.set(col, c, inv.at(col, c).clone() / pivot.clone());
        }
        for r in 0..n {
            if r == col || a.at(r, col).is_zero() {
                continue;
            }
            let f = a.at(r, col).clone();
            for c in 0..n {
                let v = a.at(r, c).clone() - f.clone() * a.at(col, c).clone();
                a.set(r, c, v);
                let w = inv.at(r, c).clone() - f.clone() * inv.at(col, c).clone();
                inv.set(r, c, w);
            }
        }
    }
    Some(inv)
}

/// Inverse of a unimodular integer matrix, which is again integral.
pub fn inverse_unimodular<I: Scalar>(m: &Matrix<I>) -> Matrix<I> {
    let inv = inverse_rational(&m.to_rational()).expect("unimodular matrix is invertible");
    let mut out = Matrix::<I>::zero(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = inv.at(r, c);
            assert!(v.denom().is_one(), "matrix is not unimodular");
            out.set(r, c, v.numer().clone());
        }
    }
    out
}

/// Exact LDL^T-style criterion for positive semidefiniteness of a
/// symmetric integer matrix: eliminate on the diagonal; a negative pivot
/// disqualifies, and a zero pivot must have an entirely zero residual
/// row/column.
pub fn is_positive_semidefinite<I: Scalar>(m: &Matrix<I>) -> bool {
    semidefinite_check(m, false)
}

/// Positive definiteness: as above but zero pivots disqualify.
pub fn is_positive_definite<I: Scalar>(m: &Matrix<I>) -> bool {
    semidefinite_check(m, true)
}

fn semidefinite_check<I: Scalar>(m: &Matrix<I>, strict: bool) -> bool {
    assert!(m.is_symmetric(), "semidefinite check needs a symmetric matrix");
    let n = m.rows();
    let mut a = m.to_rational();
    for i in 0..n {
        let pivot = a.at(i, i).clone();
        if pivot.is_negative() {
            return false;
        }
        if pivot.is_zero() {
            if strict {
                return false;
            }
            // PSD forces the whole residual row/column to vanish with the pivot.
            if (i + 1..n).any(|c| !a.at(i, c).is_zero()) {
                return false;
            }
            continue;
        }
        for r in i + 1..n {
            if a.at(r, i).is_zero() {
                continue;
            }
            let f = a.at(r, i).clone() / pivot.clone();
            for c in i + 1..n {
                let v = a.at(r, c).clone() - f.clone() * a.at(i, c).clone();
                a.set(r, c, v);
            }
            a.set(r, i, Rat::<I>::zero());
        }
    }
    true
}

/// Count or collect all integer vectors `v != 0` with `v^T G v = target`
/// for a positive definite symmetric integer matrix `G`.
///
/// Exact Fincke–Pohst: an LDL^T factorization over the rationals turns the
/// quadric into a sum of weighted squares, which bounds each coordinate by
/// a rational interval that is scanned outward from its center.
pub fn enumerate_quadric<I: Scalar>(g: &Matrix<I>, target: &I) -> Vec<Vec<I>> {
    assert!(g.is_symmetric());
    let n = g.rows();
    if n == 0 {
        return Vec::new();
    }
    // LDL^T: q(v) = sum_i d_i (v_i + sum_{j>i} u_ij v_j)^2.
    let mut a = g.to_rational();
    let mut d = Vec::with_capacity(n);
    let mut u = Matrix::<Rat<I>>::filled(n, n, Rat::<I>::zero());
    for i in 0..n {
        let pivot = a.at(i, i).clone();
        assert!(
            pivot.is_positive(),
            "enumerate_quadric requires a positive definite matrix"
        );
        d.push(pivot.clone());
        for c in i + 1..n {
            u.set(i, c, a.at(i, c).clone() / pivot.clone());
        }
        for r in i + 1..n {
            let f = a.at(r, i).clone() / pivot.clone();
            for c in i + 1..n {
                let v = a.at(r, c).clone() - f.clone() * a.at(i, c).clone();
                a.set(r, c, v);
            }
        }
    }

    let target_rat = Ratio::from_integer(target.clone());
    let mut out: Vec<Vec<I>> = Vec::new();
    let mut coords = vec![I::zero(); n];
    // Depth-first from the last coordinate; `rem` is the budget left for
    // coordinates 0..=level, `center` the offset of the current square.
    fn descend<I: Scalar>(
        level: usize,
        rem: Rat<I>,
        coords: &mut Vec<I>,
        d: &[Rat<I>],
        u: &Matrix<Rat<I>>,
        out: &mut Vec<Vec<I>>,
    ) {
        let center: Rat<I> = (level + 1..coords.len()).fold(Rat::<I>::zero(), |acc, j| {
            acc + u.at(level, j).clone() * Ratio::from_integer(coords[j].clone())
        });
        // d[level] * (t + center)^2 <= rem  bounds t in a rational interval.
        let bound = rem.clone() / d[level].clone();
        let start = floor_of(&-center.clone());
        for dir in [0i64, 1] {
            let mut t = start.clone() + int::<I>(dir);
            loop {
                let offset = Ratio::from_integer(t.clone()) + center.clone();
                let sq = offset.clone() * offset;
                if sq > bound {
                    break;
                }
                coords[level] = t.clone();
                let used = d[level].clone() * sq;
                if level == 0 {
                    if (rem.clone() - used).is_zero() {
                        out.push(coords.clone());
                    }
                } else {
                    descend(level - 1, rem.clone() - used, coords, d, u, out);
                }
                t = if dir == 0 { t - I::one() } else { t + I::one() };
            }
            coords[level] = I::zero();
        }
    }
    descend(n - 1, target_rat, &mut coords, &d, &u, &mut out);
    out.retain(|v| !v.iter().all(Zero::is_zero));
    out.sort();
    out
}

fn floor_of<I: Scalar>(r: &Rat<I>) -> I {
    r.numer().clone().div_floor(r.denom())
}
