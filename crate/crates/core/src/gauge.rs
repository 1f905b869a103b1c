//! Canonical gauge: the choices the construction of `E(q)` depends on.
//!
//! The bracket rules need a non-symmetric bilinear form `B` with
//! `B(x, x) = q(x)` (equivalently `B + B^T = C`), the sign cocycle
//! `epsilon(a, b) = (-1)^{B(a, b)}`, and a projection `rho` onto the span
//! of the radical. Any admissible choice yields isomorphic algebras, so we
//! fix the reproducible one: `B` upper triangular with unit diagonal, and
//! `rho` the projection along the complement chosen by the radical data.

use std::hash::{Hash, Hasher};

use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::num::{Rat, Scalar};
use crate::unitform::{matrix_json, rows_json, RadicalData, UnitForm};

/// The pair `(B, rho)` together with the radical basis, its complement,
/// and the dual basis labels `xi_1..xi_nu`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gauge<I> {
    b: Matrix<I>,
    radical: RadicalData<I>,
    /// Columns `[radical basis | complement]`; unimodular.
    basis_mat: Matrix<I>,
    basis_inv: Matrix<I>,
    rho: Matrix<I>,
    n: usize,
    key: u64,
}

/// Structural fingerprint used to detect mixed-up forms, gauges and
/// elements; process-local, never serialized.
pub(crate) fn form_key<I: Scalar>(q: &UnitForm<I>) -> u64 {
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    q.n().hash(&mut hasher);
    for (i, j, v) in q.coefficients() {
        (i, j).hash(&mut hasher);
        v.hash(&mut hasher);
    }
    hasher.finish()
}

/// The canonical gauge of a unit form: `B_ii = 1`, `B_ij = q_ij` for
/// `i < j`, zero below the diagonal; `rho` zeroes the complement
/// coordinates of the radical/complement splitting.
pub fn canonical_gauge<I: Scalar>(q: &UnitForm<I>) -> Gauge<I> {
    let n = q.n();
    let mut b = Matrix::<I>::identity(n);
    for (i, j, v) in q.coefficients() {
        b.set(i - 1, j - 1, v.clone());
    }
    let radical = q.radical_data();
    let basis_mat = radical.basis_matrix();
    let basis_inv = linalg::inverse_unimodular(&basis_mat);
    // rho = F . diag(1_nu, 0) . F^{-1}: keep radical coordinates only.
    let nu = radical.corank;
    let mut selector = Matrix::<I>::zero(n, n);
    for k in 0..nu {
        selector.set(k, k, num_traits::One::one());
    }
    let rho = basis_mat.mul(&selector).mul(&basis_inv);
    Gauge {
        b,
        radical,
        basis_mat,
        basis_inv,
        rho,
        n,
        key: form_key(q),
    }
}

impl<I: Scalar> Gauge<I> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn corank(&self) -> usize {
        self.radical.corank
    }

    pub fn b_matrix(&self) -> &Matrix<I> {
        &self.b
    }

    pub fn radical(&self) -> &RadicalData<I> {
        &self.radical
    }

    pub fn rho_matrix(&self) -> &Matrix<I> {
        &self.rho
    }

    pub(crate) fn key(&self) -> u64 {
        self.key
    }

    /// `rho(x)` for an integer vector.
    pub fn rho(&self, x: &[I]) -> Result<Vec<I>> {
        self.check_dim(x.len())?;
        Ok(self.rho.mul_vec(x))
    }

    fn check_dim(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: len,
            });
        }
        Ok(())
    }

    /// Sign cocycle `epsilon(a, b) = (-1)^{B(a, b)}`.
    pub fn epsilon(&self, a: &[I], b: &[I]) -> Result<i8> {
        self.check_dim(a.len())?;
        self.check_dim(b.len())?;
        // Only the parity of the exponent matters.
        let exponent = linalg::dot(a, &self.b.mul_vec(b));
        Ok(if exponent.is_even() { 1 } else { -1 })
    }

    /// `xi_k(rho(x))` for the dual basis `xi_k` of the radical basis and a
    /// rational vector `x`: the k-th radical coordinate of `x` (1-based k).
    pub fn xi_eval(&self, k: usize, x: &[Rat<I>]) -> Result<Rat<I>> {
        if k < 1 || k > self.corank() {
            return Err(Error::IndexOutOfRange {
                i: k,
                j: k,
                n: self.corank(),
            });
        }
        self.check_dim(x.len())?;
        Ok(self.radical_coords_rat(x)[k - 1].clone())
    }

    /// Radical coordinates of an integer vector (first `corank` entries of
    /// the basis-inverse image).
    pub fn radical_coords(&self, x: &[I]) -> Vec<I> {
        self.basis_inv.mul_vec(x)[..self.corank()].to_vec()
    }

    /// Complement (coset) coordinates of an integer vector.
    pub fn complement_coords(&self, x: &[I]) -> Vec<I> {
        self.basis_inv.mul_vec(x)[self.corank()..].to_vec()
    }

    pub fn radical_coords_rat(&self, x: &[Rat<I>]) -> Vec<Rat<I>> {
        self.basis_inv.mul_vec_rat(x)[..self.corank()].to_vec()
    }

    pub fn complement_coords_rat(&self, x: &[Rat<I>]) -> Vec<Rat<I>> {
        self.basis_inv.mul_vec_rat(x)[self.corank()..].to_vec()
    }

    /// Evaluate a dual-space element with coordinates `xi` on `rho` of an
    /// integer vector: `sum_k xi_k . xi_k(rho(x))`.
    pub fn dual_pairing(&self, xi: &[Rat<I>], x: &[I]) -> Rat<I> {
        let coords = self.radical_coords(x);
        xi.iter()
            .zip(&coords)
            .fold(Rat::<I>::zero(), |acc, (c, r)| {
                acc + c.clone() * Ratio::from_integer(r.clone())
            })
    }

    pub fn dual_pairing_rat(&self, xi: &[Rat<I>], x: &[Rat<I>]) -> Rat<I> {
        let coords = self.radical_coords_rat(x);
        xi.iter()
            .zip(&coords)
            .fold(Rat::<I>::zero(), |acc, (c, r)| acc + c.clone() * r.clone())
    }

    /// Gauge data serialized into verification reports.
    pub fn to_json(&self) -> Value {
        json!({
            "b": matrix_json(&self.b),
            "radical_basis": rows_json(&self.radical.basis),
            "complement": rows_json(&self.radical.complement),
        })
    }
}
