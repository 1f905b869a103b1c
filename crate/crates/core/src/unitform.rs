//! Integral unit forms and their exact invariants.
//!
//! A unit form is `q(x) = sum x_i^2 + sum_{i<j} q_ij x_i x_j` on Z^n. Its
//! symmetric matrix `C` has `C_ii = 2` and `C_ij = q_ij`, so the bilinear
//! form `q(x, y) = x^T C y` satisfies `2 q(x) = q(x, x)`. This module
//! computes the radical (integer kernel of `C`), a unimodular complement,
//! connectedness, non-negativity, and the ADE Dynkin type of the induced
//! positive definite quotient form.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{
    self, dot, enumerate_quadric, hnf_rows, is_positive_semidefinite, kernel_basis, Matrix,
};
use crate::num::{int, Scalar};

/// Unit quadratic form on Z^n with its cached symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitForm<I> {
    n: usize,
    coeffs: BTreeMap<(usize, usize), I>,
    c: Matrix<I>,
}

/// Radical basis, unimodular complement, and the induced quotient Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalData<I> {
    /// Z-basis of `rad q = { x : q(x, -) = 0 }`.
    pub basis: Vec<Vec<I>>,
    /// `corank q = rank(rad q)`.
    pub corank: usize,
    /// Integer vectors completing `basis` to a Z-basis of Z^n.
    pub complement: Vec<Vec<I>>,
    /// `quotient_gram[a][b] = q(complement_a, complement_b)`; positive
    /// definite with even diagonal whenever the form is non-negative.
    pub quotient_gram: Matrix<I>,
}

/// Simply-laced Dynkin type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    pub family: DynkinFamily,
    pub rank: usize,
}

impl DynkinType {
    fn new(family: DynkinFamily, rank: usize) -> Self {
        let legal = match family {
            DynkinFamily::A => rank >= 1,
            DynkinFamily::D => rank >= 4,
            DynkinFamily::E => (6..=8).contains(&rank),
        };
        assert!(legal, "illegal Dynkin type {family:?}{rank}");
        Self { family, rank }
    }

    /// Number of roots of the corresponding finite root system.
    pub fn root_count(&self) -> usize {
        match self.family {
            DynkinFamily::A => self.rank * (self.rank + 1),
            DynkinFamily::D => 2 * self.rank * (self.rank - 1),
            DynkinFamily::E => match self.rank {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }
}

impl std::fmt::Display for DynkinType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fam = match self.family {
            DynkinFamily::A => "A",
            DynkinFamily::D => "D",
            DynkinFamily::E => "E",
        };
        write!(f, "{}{}", fam, self.rank)
    }
}

impl<I: Scalar> RadicalData<I> {
    /// The unimodular matrix with columns `[radical basis | complement]`.
    pub fn basis_matrix(&self) -> Matrix<I> {
        let n = self.basis.first().map_or(0, Vec::len).max(
            self.complement.first().map_or(0, Vec::len),
        );
        let mut rows: Vec<Vec<I>> = self.basis.clone();
        rows.extend(self.complement.clone());
        if rows.is_empty() {
            return Matrix::identity(n);
        }
        Matrix::from_rows(rows).transpose()
    }

    /// Coordinates of `x` over the basis ∪ complement system: the first
    /// `corank` entries are radical coordinates, the rest complement ones.
    pub fn coordinates(&self, x: &[I]) -> Vec<I> {
        linalg::inverse_unimodular(&self.basis_matrix()).mul_vec(x)
    }
}

impl<I: Scalar> UnitForm<I> {
    /// Build a unit form from its off-diagonal coefficients. Indices are
    /// 1-based with `i < j`, matching the JSON input document.
    pub fn from_coefficients(n: usize, entries: &[(usize, usize, I)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDocument("n must be positive".into()));
        }
        let mut coeffs = BTreeMap::new();
        let mut c = Matrix::<I>::zero(n, n);
        for i in 0..n {
            c.set(i, i, int(2));
        }
        for (i, j, v) in entries {
            let (i, j, v) = (*i, *j, v.clone());
            if i < 1 || j <= i || j > n {
                return Err(Error::IndexOutOfRange { i, j, n });
            }
            if v.is_zero() {
                return Err(Error::ZeroCoefficient { i, j });
            }
            if coeffs.insert((i, j), v.clone()).is_some() {
                return Err(Error::DuplicatePair { i, j });
            }
            c.set(i - 1, j - 1, v.clone());
            c.set(j - 1, i - 1, v);
        }
        Ok(Self { n, coeffs, c })
    }

    /// Rebuild a unit form from a symmetric matrix with diagonal 2.
    pub fn from_symmetric_matrix(c: &Matrix<I>) -> Result<Self> {
        let n = c.rows();
        if !c.is_symmetric() {
            return Err(Error::InvalidDocument("matrix is not symmetric".into()));
        }
        if (0..n).any(|i| *c.at(i, i) != int::<I>(2)) {
            return Err(Error::NotUnitForm);
        }
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !c.at(i, j).is_zero() {
                    entries.push((i + 1, j + 1, c.at(i, j).clone()));
                }
            }
        }
        Self::from_coefficients(n, &entries)
    }

    /// Parse the canonical input document `{"n": .., "coefficients": [[i, j, q_ij], ..]}`.
    pub fn from_json(doc: &Value) -> Result<Self> {
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::InvalidDocument("expected a JSON object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::InvalidDocument("missing positive integer field `n`".into()))?
            as usize;
        let coeff_val = obj.get("coefficients").cloned().unwrap_or_else(|| json!([]));
        let arr = coeff_val
            .as_array()
            .ok_or_else(|| Error::InvalidDocument("`coefficients` must be an array".into()))?;
        let mut entries = Vec::with_capacity(arr.len());
        for item in arr {
            let triple = item.as_array().filter(|t| t.len() == 3).ok_or_else(|| {
                Error::InvalidDocument("each coefficient must be a triple [i, j, q_ij]".into())
            })?;
            let i = triple[0].as_u64().ok_or_else(bad_triple)? as usize;
            let j = triple[1].as_u64().ok_or_else(bad_triple)? as usize;
            let v = triple[2].as_i64().ok_or_else(bad_triple)?;
            entries.push((i, j, int::<I>(v)));
        }
        Self::from_coefficients(n, &entries)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: Value =
            serde_json::from_str(s).map_err(|e| Error::InvalidDocument(e.to_string()))?;
        Self::from_json(&doc)
    }

    /// Canonical JSON document for reports and the CLI.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(i, j), v)| json!([i, j, scalar_json(v)]))
            .collect();
        json!({ "n": self.n, "coefficients": coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The associated symmetric matrix `C` (diagonal 2).
    pub fn symmetric_matrix(&self) -> &Matrix<I> {
        &self.c
    }

    pub fn coefficient(&self, i: usize, j: usize) -> I {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(I::zero)
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (usize, usize, &I)> {
        self.coeffs.iter().map(|(&(i, j), v)| (i, j, v))
    }

    fn check_dim(&self, x: &[I]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// `q(x) = sum x_i^2 + sum_{i<j} q_ij x_i x_j`.
    pub fn evaluate(&self, x: &[I]) -> Result<I> {
        self.check_dim(x)?;
        let mut acc = x
            .iter()
            .fold(I::zero(), |acc, v| acc + v.clone() * v.clone());
        for (&(i, j), v) in &self.coeffs {
            acc = acc + v.clone() * x[i - 1].clone() * x[j - 1].clone();
        }
        Ok(acc)
    }

    /// Symmetric bilinear form `q(x, y) = x^T C y`.
    pub fn bilinear(&self, x: &[I], y: &[I]) -> Result<I> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(dot(x, &self.c.mul_vec(y)))
    }

    /// Whether the bigraph on 1..n (an edge wherever `q_ij != 0`) is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(i, j) in self.coeffs.keys() {
                let (a, b) = (i - 1, j - 1);
                if a == v && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                } else if b == v && !seen[a] {
                    seen[a] = true;
                    stack.push(a);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Whether `q(x) >= 0` on all of Z^n, decided exactly through `C`.
    pub fn is_nonnegative(&self) -> bool {
        is_positive_semidefinite(&self.c)
    }

    /// Radical basis, unimodular complement and quotient Gram matrix.
    ///
    /// The complement is chosen greedily from standard basis vectors,
    /// keeping the partial system primitive so the final square matrix is
    /// unimodular; in the rare case the greedy pass cannot finish, the
    /// HNF transform supplies a completion.
    pub fn radical_data(&self) -> RadicalData<I> {
        let basis = kernel_basis(&self.c);
        let corank = basis.len();
        let complement = self.complete_radical(&basis);
        debug_assert_eq!(complement.len(), self.n - corank);
        let mut gram = Matrix::<I>::zero(complement.len(), complement.len());
        for a in 0..complement.len() {
            for b in 0..complement.len() {
                let v = self
                    .bilinear(&complement[a], &complement[b])
                    .expect("complement vectors have length n");
                gram.set(a, b, v);
            }
        }
        RadicalData {
            basis,
            corank,
            complement,
            quotient_gram: gram,
        }
    }

    fn complete_radical(&self, basis: &[Vec<I>]) -> Vec<Vec<I>> {
        let mut rows: Vec<Vec<I>> = basis.to_vec();
        let mut complement = Vec::new();
        for i in 0..self.n {
            if rows.len() == self.n {
                break;
            }
            let mut e = vec![I::zero(); self.n];
            e[i] = I::one();
            rows.push(e.clone());
            if linalg::rank(&Matrix::from_rows(rows.clone())) == rows.len()
                && linalg::rows_saturated(&rows)
            {
                complement.push(e);
            } else {
                rows.pop();
            }
        }
        if rows.len() == self.n {
            return complement;
        }
        // Fallback: complete through the HNF transform of the basis columns.
        let cols = Matrix::from_rows(basis.to_vec()).transpose();
        let (_, _, u_inv) = hnf_rows(&cols);
        (basis.len()..self.n)
            .map(|k| u_inv.col_vec(k))
            .collect()
    }

    /// Dynkin type of a connected non-negative unit form, classified by
    /// the root count of the positive definite quotient form.
    pub fn dynkin_type(&self) -> Result<DynkinType> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if !self.is_nonnegative() {
            return Err(Error::NotNonNegative);
        }
        let rd = self.radical_data();
        let rank = self.n - rd.corank;
        let count = quotient_root_count_from(&rd);
        classify_root_count(rank, count)
    }

    /// Number of vectors of the quotient lattice with quotient form value 1.
    pub fn quotient_root_count(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        if !self.is_nonnegative() {
            return Err(Error::NotNonNegative);
        }
        Ok(quotient_root_count_from(&self.radical_data()))
    }

    /// The composed form `q ∘ T` for an integer matrix `T`; errors with
    /// `NotUnitForm` when the composition leaves the class of unit forms.
    pub fn compose(&self, t: &Matrix<I>) -> Result<UnitForm<I>> {
        if t.rows() != self.n || t.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: t.rows(),
            });
        }
        let c_new = t.transpose().mul(&self.c).mul(t);
        UnitForm::from_symmetric_matrix(&c_new)
    }
}

fn quotient_root_count_from<I: Scalar>(rd: &RadicalData<I>) -> usize {
    // q̄(v) = 1 is v^T Ḡ v = 2 for the quotient Gram matrix Ḡ.
    enumerate_quadric(&rd.quotient_gram, &int(2)).len()
}

/// Root-count table for the simply-laced families. `A_r` has `r(r+1)`
/// roots, `D_r` has `2r(r-1)`, and `E6/E7/E8` have 72/126/240; for a fixed
/// rank these counts never collide.
fn classify_root_count(rank: usize, count: usize) -> Result<DynkinType> {
    if rank >= 1 && count == rank * (rank + 1) {
        return Ok(DynkinType::new(DynkinFamily::A, rank));
    }
    if rank >= 4 && count == 2 * rank * (rank - 1) {
        return Ok(DynkinType::new(DynkinFamily::D, rank));
    }
    match (rank, count) {
        (6, 72) | (7, 126) | (8, 240) => Ok(DynkinType::new(DynkinFamily::E, rank)),
        _ => Err(Error::UnrecognizedRootCount { rank, count }),
    }
}

fn bad_triple() -> Error {
    Error::InvalidDocument("coefficient triples must be [i, j, q_ij] with integer entries".into())
}

pub fn scalar_json<I: Scalar>(v: &I) -> Value {
    v.to_i64()
        .map(Value::from)
        .unwrap_or_else(|| Value::String(v.to_string()))
}

/// Compact display of an integer vector: "1,0,-2".
pub fn fmt_vec<I: Scalar>(v: &[I]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn vec_json<I: Scalar>(v: &[I]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn rows_json<I: Scalar>(rows: &[Vec<I>]) -> Value {
    Value::Array(rows.iter().map(|r| vec_json(r)).collect())
}

pub fn matrix_json<I: Scalar>(m: &Matrix<I>) -> Value {
    rows_json(&m.to_rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    type Q = UnitForm<i64>;

    #[test]
    fn a2_constructor_and_matrix() {
        let q = Q::from_coefficients(2, &[(1, 2, -1)]).unwrap();
        assert_eq!(q.symmetric_matrix().to_rows(), vec![vec![2, -1], vec![-1, 2]]);
        let single = Q::from_coefficients(1, &[]).unwrap();
        assert_eq!(single.symmetric_matrix().to_rows(), vec![vec![2]]);
    }

    #[test]
    fn constructor_contract_errors() {
        assert_eq!(
            Q::from_coefficients(2, &[(1, 2, -1), (1, 2, -1)]),
            Err(Error::DuplicatePair { i: 1, j: 2 })
        );
        assert_eq!(
            Q::from_coefficients(2, &[(2, 1, -1)]),
            Err(Error::IndexOutOfRange { i: 2, j: 1, n: 2 })
        );
        assert_eq!(
            Q::from_coefficients(2, &[(1, 3, -1)]),
            Err(Error::IndexOutOfRange { i: 1, j: 3, n: 2 })
        );
        assert_eq!(
            Q::from_coefficients(2, &[(1, 2, 0)]),
            Err(Error::ZeroCoefficient { i: 1, j: 2 })
        );
    }

    #[test]
    fn evaluate_and_bilinear_examples() {
        let a2 = fixtures::a_form::<i64>(2);
        assert_eq!(a2.evaluate(&[1, 1]).unwrap(), 1);
        assert_eq!(a2.evaluate(&[0, 0]).unwrap(), 0);
        assert_eq!(a2.bilinear(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(a2.bilinear(&[1, 0], &[1, 0]).unwrap(), 2);

        let k = fixtures::kronecker_form::<i64>();
        assert_eq!(k.evaluate(&[3, 3]).unwrap(), 0);
        assert_eq!(k.bilinear(&[1, 1], &[5, -7]).unwrap(), 0);
        assert_eq!(
            k.evaluate(&[1, 0, 0]).unwrap_err(),
            Error::DimensionMismatch { expected: 2, got: 3 }
        );
    }

    #[test]
    fn evaluation_consistency_on_samples() {
        // 2 q(x) = q(x, x) for every vector; sampled deterministically.
        let mut rng = crate::num::SplitMix64::new(3);
        for q in fixtures::all_standard_forms::<i64>() {
            for _ in 0..100 {
                let x: Vec<i64> = (0..q.n()).map(|_| rng.range(-4, 4)).collect();
                let y: Vec<i64> = (0..q.n()).map(|_| rng.range(-4, 4)).collect();
                assert_eq!(2 * q.evaluate(&x).unwrap(), q.bilinear(&x, &x).unwrap());
                assert_eq!(q.bilinear(&x, &y).unwrap(), q.bilinear(&y, &x).unwrap());
            }
        }
    }

    #[test]
    fn radical_of_kronecker_form() {
        let k = fixtures::kronecker_form::<i64>();
        let rd = k.radical_data();
        assert_eq!(rd.corank, 1);
        assert_eq!(rd.basis, vec![vec![1, 1]]);
        assert_eq!(rd.complement, vec![vec![1, 0]]);
        assert_eq!(rd.quotient_gram.to_rows(), vec![vec![2]]);
    }

    #[test]
    fn radical_of_nonsingular_forms() {
        let a2 = fixtures::a_form::<i64>(2);
        let rd = a2.radical_data();
        assert_eq!(rd.corank, 0);
        assert!(rd.basis.is_empty());
        assert_eq!(rd.quotient_gram, *a2.symmetric_matrix());

        let a3 = fixtures::a_form::<i64>(3);
        assert_eq!(a3.radical_data().corank, 0);
        assert_eq!(linalg::determinant(a3.symmetric_matrix()), 4);
    }

    #[test]
    fn radical_completion_is_unimodular() {
        for q in fixtures::all_standard_forms::<i64>() {
            let rd = q.radical_data();
            for b in &rd.basis {
                assert_eq!(q.evaluate(b).unwrap(), 0);
                for i in 0..q.n() {
                    let mut e = vec![0i64; q.n()];
                    e[i] = 1;
                    assert_eq!(q.bilinear(b, &e).unwrap(), 0);
                }
            }
            let mut rows = rd.basis.clone();
            rows.extend(rd.complement.clone());
            let det = linalg::determinant(&Matrix::from_rows(rows));
            assert_eq!(det.abs(), 1);
        }
    }

    #[test]
    fn connectivity_examples() {
        assert!(fixtures::a_form::<i64>(2).is_connected());
        assert!(!Q::from_coefficients(2, &[]).unwrap().is_connected());
        assert!(Q::from_coefficients(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn nonnegativity_examples() {
        assert!(fixtures::kronecker_form::<i64>().is_nonnegative());
        assert!(!Q::from_coefficients(2, &[(1, 2, -3)]).unwrap().is_nonnegative());
        let q = Q::from_coefficients(2, &[(1, 2, -3)]).unwrap();
        assert_eq!(q.evaluate(&[1, 1]).unwrap(), -1);
        assert!(fixtures::a_form::<i64>(2).is_nonnegative());
    }

    #[test]
    fn dynkin_type_preconditions() {
        let disconnected = Q::from_coefficients(2, &[]).unwrap();
        assert_eq!(disconnected.dynkin_type().unwrap_err(), Error::NotConnected);
        let indefinite = Q::from_coefficients(2, &[(1, 2, -3)]).unwrap();
        assert_eq!(indefinite.dynkin_type().unwrap_err(), Error::NotNonNegative);
    }

    #[test]
    fn dynkin_root_count_table_against_brute_force() {
        // Confirm the classification table by brute-force enumeration of
        // q^{-1}(1) on the standard positive forms before trusting it.
        for r in 1..=4 {
            let q = fixtures::a_form::<i64>(r);
            assert_eq!(brute_force_unit_vectors(&q, r as i64 + 1), r * (r + 1));
        }
        for r in 4..=5 {
            let q = fixtures::d_form::<i64>(r);
            assert_eq!(brute_force_unit_vectors(&q, 3), 2 * r * (r - 1));
        }
        assert_eq!(brute_force_unit_vectors(&fixtures::e_form::<i64>(6), 3), 72);
    }

    #[test]
    fn dynkin_types_of_standard_forms() {
        use DynkinFamily::*;
        let cases: Vec<(Q, DynkinFamily, usize)> = vec![
            (fixtures::a_form(1), A, 1),
            (fixtures::a_form(2), A, 2),
            (fixtures::a_form(4), A, 4),
            (fixtures::d_form(4), D, 4),
            (fixtures::d_form(5), D, 5),
            (fixtures::e_form(6), E, 6),
            (fixtures::e_form(7), E, 7),
            (fixtures::e_form(8), E, 8),
            (fixtures::kronecker_form(), A, 1),
            (fixtures::corank2_form(), A, 1),
            (fixtures::affine_a2_form(), A, 2),
        ];
        for (q, family, rank) in cases {
            let t = q.dynkin_type().unwrap();
            assert_eq!((t.family, t.rank), (family, rank), "form {:?}", q.to_json());
        }
        assert_eq!(fixtures::kronecker_form::<i64>().dynkin_type().unwrap().to_string(), "A1");
        assert_eq!(fixtures::d_form::<i64>(4).quotient_root_count().unwrap(), 24);
    }

    #[test]
    fn affine_extensions_have_corank_one() {
        // Classical extended diagrams: one extra vertex, corank 1, same type.
        let c4 = fixtures::cycle_form::<i64>(4);
        assert_eq!(c4.radical_data().corank, 1);
        assert_eq!(c4.dynkin_type().unwrap().to_string(), "A3");
        assert_eq!(c4.radical_data().basis, vec![vec![1, 1, 1, 1]]);

        let d4x = fixtures::extended_d4_form::<i64>();
        let rd = d4x.radical_data();
        assert_eq!(rd.corank, 1);
        assert_eq!(rd.basis, vec![vec![2, 1, 1, 1, 1]]);
        assert_eq!(d4x.dynkin_type().unwrap().to_string(), "D4");
        assert_eq!(d4x.quotient_root_count().unwrap(), 24);
    }

    #[test]
    fn dynkin_type_is_unimodular_invariant() {
        // dynkin_type(q ∘ T) = dynkin_type(q) for unit-preserving unimodular T.
        let mut rng = crate::num::SplitMix64::new(11);
        for q in [fixtures::a_form::<i64>(3), fixtures::kronecker_form(), fixtures::corank2_form()] {
            let ty = q.dynkin_type().unwrap();
            let corank = q.radical_data().corank;
            let mut found = 0;
            let mut attempt = 0;
            while found < 5 && attempt < 400 {
                attempt += 1;
                let t = crate::equiv::random_unimodular::<i64>(q.n(), 1, rng.next_u64());
                let Ok(qt) = q.compose(&t) else { continue };
                if !qt.is_connected() {
                    continue;
                }
                found += 1;
                assert_eq!(qt.dynkin_type().unwrap(), ty);
                assert_eq!(qt.radical_data().corank, corank);
            }
            assert!(found >= 5, "not enough unit-preserving transforms found");
        }
    }

    #[test]
    fn unrecognized_root_counts_are_rejected() {
        // No simply-laced system of rank 3 has 7 roots; the classifier
        // treats such counts as violated preconditions.
        assert_eq!(
            classify_root_count(3, 7),
            Err(Error::UnrecognizedRootCount { rank: 3, count: 7 })
        );
        assert_eq!(
            classify_root_count(4, 24).unwrap().to_string(),
            "D4"
        );
        // Rank 8 with 72 roots is A8, not E6.
        assert_eq!(classify_root_count(8, 72).unwrap().to_string(), "A8");
    }

    #[test]
    fn compose_rejects_non_unit_results() {
        let a2 = fixtures::a_form::<i64>(2);
        // det = 1, but the first column has q(2, 1) = 3.
        let t = Matrix::from_rows(vec![vec![2, 1], vec![1, 1]]);
        assert_eq!(a2.compose(&t).unwrap_err(), Error::NotUnitForm);
        let eye = Matrix::<i64>::identity(2);
        assert_eq!(a2.compose(&eye).unwrap(), a2);
    }

    #[test]
    fn json_round_trip() {
        let q = fixtures::e_form::<i64>(6);
        let doc = q.to_json();
        let q2 = Q::from_json(&doc).unwrap();
        assert_eq!(q, q2);
        assert!(matches!(
            Q::from_json_str("{\"n\": 0, \"coefficients\": []}"),
            Err(Error::InvalidDocument(_))
        ));
        assert!(matches!(
            Q::from_json_str("{\"coefficients\": []}"),
            Err(Error::InvalidDocument(_))
        ));
    }

    #[test]
    fn works_with_bigint_scalars() {
        use num_bigint::BigInt;
        let q = UnitForm::<BigInt>::from_coefficients(2, &[(1, 2, BigInt::from(-2))]).unwrap();
        let rd = q.radical_data();
        assert_eq!(rd.corank, 1);
        assert_eq!(rd.basis, vec![vec![BigInt::from(1), BigInt::from(1)]]);
        assert_eq!(q.dynkin_type().unwrap().to_string(), "A1");
    }

    fn brute_force_unit_vectors(q: &Q, bound: i64) -> usize {
        let n = q.n();
        let mut count = 0usize;
        let mut x = vec![-bound; n];
        loop {
            if q.evaluate(&x).unwrap() == 1 {
                count += 1;
            }
            let mut k = n;
            loop {
                if k == 0 {
                    return count;
                }
                k -= 1;
                if x[k] < bound {
                    x[k] += 1;
                    for v in &mut x[k + 1..] {
                        *v = -bound;
                    }
                    break;
                }
            }
        }
    }
}
