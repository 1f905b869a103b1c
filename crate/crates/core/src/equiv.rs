//! Equivalence of connected non-negative unit forms.
//!
//! Two such forms on the same number of variables are equivalent (related
//! by an automorphism of Z^n) exactly when they share corank and Dynkin
//! type, which also characterizes when their Lie algebras are isomorphic
//! as graded algebras. Equivalence is therefore decided on invariants; no
//! transformation search is performed.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::{int, Scalar, SplitMix64};
use crate::unitform::{DynkinType, UnitForm};

/// The complete invariant data of Theorem-level equivalence, plus the
/// graded dimension data tied to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormInvariants {
    pub n: usize,
    pub corank: usize,
    pub dynkin: DynkinType,
    /// `dim E_0 = n + corank`.
    pub dim_h: usize,
    /// `dim E_sigma = n - corank` for nonzero isotropic sigma; absent in
    /// corank 0 where no such sigma exists.
    pub dim_iso_space: Option<usize>,
    /// Number of unit vectors of the positive definite quotient form.
    pub root_count_quotient: usize,
}

impl FormInvariants {
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("n".into(), json!(self.n));
        obj.insert("corank".into(), json!(self.corank));
        obj.insert("dynkin".into(), json!(self.dynkin.to_string()));
        obj.insert("dim_H".into(), json!(self.dim_h));
        if let Some(d) = self.dim_iso_space {
            obj.insert("dim_iso_space".into(), json!(d));
        }
        obj.insert(
            "root_count_quotient".into(),
            json!(self.root_count_quotient),
        );
        Value::Object(obj)
    }
}

/// Invariants of a connected non-negative unit form.
pub fn invariants<I: Scalar>(q: &UnitForm<I>) -> Result<FormInvariants> {
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    if !q.is_nonnegative() {
        return Err(Error::NotNonNegative);
    }
    let rd = q.radical_data();
    let dynkin = q.dynkin_type()?;
    Ok(FormInvariants {
        n: q.n(),
        corank: rd.corank,
        dynkin,
        dim_h: q.n() + rd.corank,
        dim_iso_space: (rd.corank > 0).then(|| q.n() - rd.corank),
        root_count_quotient: dynkin.root_count(),
    })
}

/// Equivalence test: same `n`, same corank, same Dynkin type. Forms on
/// different numbers of variables are inequivalent by convention (an
/// automorphism of Z^n fixes n).
pub fn are_equivalent<I: Scalar>(q1: &UnitForm<I>, q2: &UnitForm<I>) -> Result<bool> {
    let inv1 = invariants(q1)?;
    let inv2 = invariants(q2)?;
    Ok(inv1.n == inv2.n && inv1.corank == inv2.corank && inv1.dynkin == inv2.dynkin)
}

/// Seeded random unimodular matrix: a product of elementary row
/// operations (additions with coefficients up to `magnitude`, swaps, sign
/// flips), so the determinant is ±1 by construction.
pub fn random_unimodular<I: Scalar>(n: usize, magnitude: i64, seed: u64) -> Matrix<I> {
    assert!(magnitude >= 1);
    let mut rng = SplitMix64::new(seed);
    let mut m = Matrix::<I>::identity(n);
    if n == 1 {
        if rng.below(2) == 1 {
            m.set(0, 0, -I::one());
        }
        return m;
    }
    let steps = 3 * n * n;
    for _ in 0..steps {
        match rng.below(3) {
            0 => {
                let i = rng.below(n);
                let j = rng.below(n);
                m.swap_rows(i, j);
            }
            1 => {
                let i = rng.below(n);
                for c in 0..n {
                    let v = -m.at(i, c).clone();
                    m.set(i, c, v);
                }
            }
            _ => {
                let i = rng.below(n);
                let mut j = rng.below(n);
                while j == i {
                    j = rng.below(n);
                }
                let mut k = 0i64;
                while k == 0 {
                    k = rng.range(-magnitude, magnitude);
                }
                for c in 0..n {
                    let v = m.at(i, c).clone() + int::<I>(k) * m.at(j, c).clone();
                    m.set(i, c, v);
                }
            }
        }
    }
    m
}

/// A random unimodular `T` such that `q ∘ T` is again a connected unit
/// form, found by retrying fresh seed paths; `None` after `attempts`
/// failures (composition can leave the class of unit forms).
pub fn random_equivalence<I: Scalar>(
    q: &UnitForm<I>,
    magnitude: i64,
    seed: u64,
    attempts: usize,
) -> Option<(Matrix<I>, UnitForm<I>)> {
    let mut rng = SplitMix64::new(seed);
    for _ in 0..attempts {
        let t = random_unimodular(q.n(), magnitude, rng.next_u64());
        if let Ok(qt) = q.compose(&t) {
            if qt.is_connected() {
                return Some((t, qt));
            }
        }
    }
    None
}
