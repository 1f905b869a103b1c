//! The extended affine root system `R(q) = q^{-1}(0) ∪ q^{-1}(1)`.
//!
//! For a connected non-negative unit form the set `R(q)` satisfies the
//! extended affine root system axioms (R1)-(R8). The system is infinite
//! whenever the corank is positive, so every operation here works on the
//! finite truncation `{ x in R(q) : max_i |x_i| <= height }`.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, neg_vec, scale_vec, Matrix};
use crate::num::{int, Scalar};
use crate::report::{ReportParams, VerificationReport};
use crate::unitform::{vec_json, RadicalData, UnitForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootKind {
    Zero,
    Isotropic,
    NonIsotropic,
}

impl RootKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RootKind::Zero => "zero",
            RootKind::Isotropic => "isotropic",
            RootKind::NonIsotropic => "nonisotropic",
        }
    }
}

/// An element of `R(q)`, tagged with its class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root<I> {
    pub vec: Vec<I>,
    pub kind: RootKind,
}

/// The root string `{beta - d*alpha, ..., beta + u*alpha}` of `beta`
/// through a non-isotropic `alpha`; satisfies `d - u = q(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootString {
    pub d: usize,
    pub u: usize,
}

/// Canonical splitting of a root over the radical basis and complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition<I> {
    /// Coset representative inside the complement lattice (a vector of Z^n).
    pub representative: Vec<I>,
    /// Coordinates over the radical basis.
    pub radical_part: Vec<I>,
}

/// Tag a vector as a root when `q(x)` is 0 or 1; `Ok(None)` otherwise.
pub fn classify<I: Scalar>(q: &UnitForm<I>, x: &[I]) -> Result<Option<Root<I>>> {
    let value = q.evaluate(x)?;
    let kind = if value.is_zero() {
        if x.iter().all(Zero::is_zero) {
            RootKind::Zero
        } else {
            RootKind::Isotropic
        }
    } else if value == int(1) {
        RootKind::NonIsotropic
    } else {
        return Ok(None);
    };
    Ok(Some(Root {
        vec: x.to_vec(),
        kind,
    }))
}

fn require_root<I: Scalar>(q: &UnitForm<I>, x: &[I]) -> Result<Root<I>> {
    classify(q, x)?.ok_or_else(|| Error::NotARoot {
        vec: format!("{x:?}"),
    })
}

fn require_nonisotropic<I: Scalar>(q: &UnitForm<I>, x: &[I]) -> Result<Root<I>> {
    let root = require_root(q, x)?;
    if root.kind != RootKind::NonIsotropic {
        return Err(Error::NotNonIsotropic {
            vec: format!("{x:?}"),
        });
    }
    Ok(root)
}

/// All roots with `max_i |x_i| <= height`, in lexicographic order.
pub fn enumerate_roots<I: Scalar>(q: &UnitForm<I>, height: usize) -> Vec<Root<I>> {
    let n = q.n();
    let h = height as i64;
    let mut out = Vec::new();
    let mut x = vec![-h; n];
    loop {
        let vec: Vec<I> = x.iter().map(|&v| int(v)).collect();
        if let Some(root) = classify(q, &vec).expect("vector has length n") {
            out.push(root);
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if x[k] < h {
                x[k] += 1;
                for v in &mut x[k + 1..] {
                    *v = -h;
                }
                break;
            }
        }
    }
}

/// Closed-form root string, from the case analysis of `q(beta + n*alpha)`:
/// for isotropic or zero `beta` the string is `{-1, 0, 1}`; otherwise the
/// membership set is `{0, -p}` for `p = q(alpha, beta)` in `{-1, 0, 1}`
/// and `{0, -p/2, -p}` for `p = ±2`.
pub fn root_string<I: Scalar>(q: &UnitForm<I>, alpha: &Root<I>, beta: &Root<I>) -> Result<RootString> {
    let alpha = require_nonisotropic(q, &alpha.vec)?;
    let beta = require_root(q, &beta.vec)?;
    if beta.kind != RootKind::NonIsotropic {
        return Ok(RootString { d: 1, u: 1 });
    }
    let p = q.bilinear(&alpha.vec, &beta.vec)?;
    let (d, u) = if p.is_positive() {
        (p.to_usize().expect("pairing of roots is at most 2"), 0)
    } else {
        (0, (-p).to_usize().expect("pairing of roots is at least -2"))
    };
    Ok(RootString { d, u })
}

/// Brute-force root string: scan `beta + t*alpha` for `t` in [-4, 4] and
/// take the unbroken run through `t = 0`. Returns `None` when the
/// membership set inside the window is not a contiguous run, which cannot
/// happen for a non-negative form.
pub fn scan_root_string<I: Scalar>(q: &UnitForm<I>, alpha: &[I], beta: &[I]) -> Option<RootString> {
    let member = |t: i64| -> bool {
        let v = linalg::add_vec(beta, &scale_vec(&int::<I>(t), alpha));
        classify(q, &v).expect("dimensions checked by caller").is_some()
    };
    if !member(0) {
        return None;
    }
    let mut d = 0usize;
    while d < 4 && member(-(d as i64) - 1) {
        d += 1;
    }
    let mut u = 0usize;
    while u < 4 && member(u as i64 + 1) {
        u += 1;
    }
    for t in -4i64..=4 {
        let inside = t >= -(d as i64) && t <= u as i64;
        if member(t) != inside {
            return None;
        }
    }
    Some(RootString { d, u })
}

/// Split a root over the chosen radical basis and complement.
pub fn decompose<I: Scalar>(q: &UnitForm<I>, r: &Root<I>) -> Result<RootDecomposition<I>> {
    let root = require_root(q, &r.vec)?;
    let rd = q.radical_data();
    Ok(decompose_with(&rd, &root))
}

/// As [`decompose`], with precomputed radical data.
pub fn decompose_with<I: Scalar>(rd: &RadicalData<I>, r: &Root<I>) -> RootDecomposition<I> {
    let coords = rd.coordinates(&r.vec);
    let radical_part = coords[..rd.corank].to_vec();
    let mut representative = r.vec.clone();
    for (k, b) in rd.basis.iter().enumerate() {
        let scaled = scale_vec(&radical_part[k], b);
        representative = linalg::sub_vec(&representative, &scaled);
    }
    RootDecomposition {
        representative,
        radical_part,
    }
}

/// Check the EARS axioms (R1)-(R8) on the height truncation of `R(q)`.
///
/// Failures are recorded as report entries, never errors, so deliberately
/// invalid inputs (e.g. disconnected forms) can be probed.
pub fn check_ears<I: Scalar>(q: &UnitForm<I>, height: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "ears",
        q.to_json(),
        Value::Null,
        ReportParams::new(height),
    );
    let roots = enumerate_roots(q, height);
    let set: BTreeSet<Vec<I>> = roots.iter().map(|r| r.vec.clone()).collect();
    let noniso: Vec<&Root<I>> = roots
        .iter()
        .filter(|r| r.kind == RootKind::NonIsotropic)
        .collect();
    let iso: Vec<&Root<I>> = roots
        .iter()
        .filter(|r| r.kind == RootKind::Isotropic)
        .collect();

    // (R1) 0 in R.
    let zero = vec![I::zero(); q.n()];
    report.push("R1", set.contains(&zero), None);

    // (R2) R = -R.
    let r2_witness = roots
        .iter()
        .find(|r| !set.contains(&neg_vec(&r.vec)))
        .map(|r| json!({ "root": vec_json(&r.vec) }));
    report.push_outcome("R2", r2_witness);

    // (R3) R spans: rank of the root matrix equals n.
    let span_rank = if roots.is_empty() {
        0
    } else {
        linalg::rank(&Matrix::from_rows(
            roots.iter().map(|r| r.vec.clone()).collect(),
        ))
    };
    report.push(
        "R3",
        span_rank == q.n(),
        (span_rank != q.n()).then(|| json!({ "rank": span_rank, "n": q.n() })),
    );

    // (R4) 2*alpha is never a root for non-isotropic alpha.
    let r4_witness = noniso
        .iter()
        .find(|r| {
            let doubled = scale_vec(&int::<I>(2), &r.vec);
            classify(q, &doubled).expect("length n").is_some()
        })
        .map(|r| json!({ "alpha": vec_json(&r.vec) }));
    report.push_outcome("R4", r4_witness);

    // (R5) discreteness holds automatically for Z^n in R^n.
    report.push(
        "R5",
        true,
        Some(json!({ "note": "trivially true: Z^n is discrete in R^n" })),
    );

    // (R6) closed-form root strings agree with a direct scan and satisfy
    // d - u = q(alpha, beta).
    let mut r6_witness = None;
    let mut r6_pairs = 0usize;
    'r6: for alpha in &noniso {
        for beta in &roots {
            r6_pairs += 1;
            let closed = root_string(q, alpha, beta).expect("valid root pair");
            let scanned = scan_root_string(q, &alpha.vec, &beta.vec);
            let pairing = q.bilinear(&alpha.vec, &beta.vec).expect("length n");
            let balanced = int::<I>(closed.d as i64) - int::<I>(closed.u as i64) == pairing;
            if scanned != Some(closed) || !balanced {
                r6_witness = Some(json!({
                    "alpha": vec_json(&alpha.vec),
                    "beta": vec_json(&beta.vec),
                    "closed": [closed.d, closed.u],
                    "scanned": scanned.map(|s| vec![s.d, s.u]),
                }));
                break 'r6;
            }
        }
    }
    report.push(
        "R6",
        r6_witness.is_none(),
        r6_witness.or_else(|| Some(json!({ "pairs_checked": r6_pairs }))),
    );

    // (R7) irreducibility: the graph on truncated R^x with edges where
    // q(alpha, beta) != 0 is connected.
    let connected = nonisotropic_graph_connected(q, &noniso);
    report.push(
        "R7",
        connected,
        (!connected).then(|| json!({ "nonisotropic_count": noniso.len() })),
    );

    // (R8) every truncated isotropic sigma has c_1 + sigma in R.
    let mut c1 = vec![I::zero(); q.n()];
    c1[0] = I::one();
    let r8_witness = iso
        .iter()
        .find(|sigma| {
            let shifted = linalg::add_vec(&c1, &sigma.vec);
            !matches!(
                classify(q, &shifted).expect("length n"),
                Some(Root { kind: RootKind::NonIsotropic, .. })
            )
        })
        .map(|sigma| json!({ "sigma": vec_json(&sigma.vec) }));
    report.push_outcome("R8", r8_witness);

    report
}

/// Connectivity of the pairing graph on a set of non-isotropic roots.
pub(crate) fn nonisotropic_graph_connected<I: Scalar>(
    q: &UnitForm<I>,
    noniso: &[&Root<I>],
) -> bool {
    if noniso.is_empty() {
        return true;
    }
    let m = noniso.len();
    let mut seen = vec![false; m];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..m {
            if !seen[w]
                && !q
                    .bilinear(&noniso[v].vec, &noniso[w].vec)
                    .expect("length n")
                    .is_zero()
            {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn classify_examples() {
        let a2 = fixtures::a_form::<i64>(2);
        assert_eq!(
            classify(&a2, &[1, 0]).unwrap().unwrap().kind,
            RootKind::NonIsotropic
        );
        assert_eq!(classify(&a2, &[2, 0]).unwrap(), None);
        let k = fixtures::kronecker_form();
        assert_eq!(
            classify(&k, &[2, 2]).unwrap().unwrap().kind,
            RootKind::Isotropic
        );
        assert_eq!(
            classify(&k, &[0, 0]).unwrap().unwrap().kind,
            RootKind::Zero
        );
        assert!(classify(&k, &[1]).is_err());
    }

    #[test]
    fn enumerate_a2_height_one() {
        let a2 = fixtures::a_form(2);
        let roots = enumerate_roots(&a2, 1);
        assert_eq!(roots.len(), 7);
        let vecs: Vec<Vec<i64>> = roots.iter().map(|r| r.vec.clone()).collect();
        assert_eq!(
            vecs,
            vec![
                vec![-1, -1],
                vec![-1, 0],
                vec![0, -1],
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
            ]
        );
    }

    #[test]
    fn enumerate_kronecker_height_one() {
        let k = fixtures::kronecker_form::<i64>();
        let roots = enumerate_roots(&k, 1);
        // All |x_i| <= 1 with (x1 - x2)^2 in {0, 1}: 9 vectors minus (1,-1), (-1,1).
        assert_eq!(roots.len(), 7);
    }

    #[test]
    fn enumerate_height_zero_is_origin() {
        for q in fixtures::all_standard_forms::<i64>() {
            let roots = enumerate_roots(&q, 0);
            assert_eq!(roots.len(), 1);
            assert_eq!(roots[0].kind, RootKind::Zero);
        }
    }

    #[test]
    fn enumeration_monotone_and_negation_closed() {
        for q in fixtures::suite_forms::<i64>() {
            let small: BTreeSet<Vec<i64>> = enumerate_roots(&q, 2)
                .into_iter()
                .map(|r| r.vec)
                .collect();
            let large: BTreeSet<Vec<i64>> = enumerate_roots(&q, 3)
                .into_iter()
                .map(|r| r.vec)
                .collect();
            assert!(small.is_subset(&large));
            for v in &large {
                assert!(large.contains(&neg_vec(v)));
            }
        }
    }

    #[test]
    fn root_string_examples() {
        let k = fixtures::kronecker_form();
        let alpha = classify(&k, &[1, 0]).unwrap().unwrap();
        let beta = classify(&k, &[1, 1]).unwrap().unwrap();
        assert_eq!(root_string(&k, &alpha, &beta).unwrap(), RootString { d: 1, u: 1 });

        let a2 = fixtures::a_form(2);
        let c1 = classify(&a2, &[1, 0]).unwrap().unwrap();
        let c2 = classify(&a2, &[0, 1]).unwrap().unwrap();
        assert_eq!(root_string(&a2, &c1, &c2).unwrap(), RootString { d: 0, u: 1 });
        assert_eq!(root_string(&a2, &c1, &c1).unwrap(), RootString { d: 2, u: 0 });
    }

    #[test]
    fn root_string_rejects_bad_arguments() {
        let k = fixtures::kronecker_form();
        let iso = classify(&k, &[1, 1]).unwrap().unwrap();
        let noniso = classify(&k, &[1, 0]).unwrap().unwrap();
        assert!(matches!(
            root_string(&k, &iso, &noniso),
            Err(Error::NotNonIsotropic { .. })
        ));
        let fake = Root { vec: vec![2, 0], kind: RootKind::NonIsotropic };
        assert!(matches!(
            root_string(&k, &noniso, &fake),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn closed_form_matches_scan_oracle() {
        // Cross-validate the closed form against the direct scan on every
        // pair within height 3, for all suite forms.
        let mut pairs = 0usize;
        for q in fixtures::suite_forms::<i64>() {
            let roots = enumerate_roots(&q, 3);
            for alpha in roots.iter().filter(|r| r.kind == RootKind::NonIsotropic) {
                for beta in &roots {
                    let closed = root_string(&q, alpha, beta).unwrap();
                    let scanned = scan_root_string(&q, &alpha.vec, &beta.vec).unwrap();
                    assert_eq!(closed, scanned, "alpha {:?}, beta {:?}", alpha.vec, beta.vec);
                    let pairing = q.bilinear(&alpha.vec, &beta.vec).unwrap();
                    assert_eq!(closed.d as i64 - closed.u as i64, pairing);
                    pairs += 1;
                }
            }
        }
        assert!(pairs >= 500, "only {pairs} pairs exercised");
    }

    #[test]
    fn pairings_of_unit_roots_are_bounded() {
        // For non-negative q, |q(alpha, beta)| <= 2 on q^{-1}(1).
        for q in fixtures::all_standard_forms::<i64>() {
            let roots = enumerate_roots(&q, 2);
            for a in roots.iter().filter(|r| r.kind == RootKind::NonIsotropic) {
                for b in roots.iter().filter(|r| r.kind == RootKind::NonIsotropic) {
                    let p = q.bilinear(&a.vec, &b.vec).unwrap();
                    assert!((-2..=2).contains(&p));
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let k = fixtures::kronecker_form();
        let r = classify(&k, &[2, 1]).unwrap().unwrap();
        let d = decompose(&k, &r).unwrap();
        assert_eq!(d.representative, vec![1, 0]);
        assert_eq!(d.radical_part, vec![1]);

        let zero = classify(&k, &[0, 0]).unwrap().unwrap();
        let d0 = decompose(&k, &zero).unwrap();
        assert_eq!(d0.representative, vec![0, 0]);
        assert_eq!(d0.radical_part, vec![0]);

        let a2 = fixtures::a_form(2);
        let r = classify(&a2, &[1, 1]).unwrap().unwrap();
        let d = decompose(&a2, &r).unwrap();
        assert_eq!(d.representative, vec![1, 1]);
        assert!(d.radical_part.is_empty());
    }

    #[test]
    fn decompose_reconstructs() {
        for q in fixtures::suite_forms::<i64>() {
            let rd = q.radical_data();
            for root in enumerate_roots(&q, 2) {
                let dec = decompose_with(&rd, &root);
                let mut rebuilt = dec.representative.clone();
                for (k, b) in rd.basis.iter().enumerate() {
                    rebuilt = linalg::add_vec(&rebuilt, &scale_vec(&dec.radical_part[k], b));
                }
                assert_eq!(rebuilt, root.vec);
            }
        }
    }

    #[test]
    fn coset_classes_match_quotient_root_count() {
        // The non-isotropic roots fall into exactly root_count(Dynkin)
        // classes modulo the radical.
        for q in fixtures::suite_forms::<i64>() {
            let rd = q.radical_data();
            let expected = q.dynkin_type().unwrap().root_count();
            let mut classes: BTreeSet<Vec<i64>> = BTreeSet::new();
            for root in enumerate_roots(&q, 3) {
                if root.kind == RootKind::NonIsotropic {
                    classes.insert(decompose_with(&rd, &root).representative);
                }
            }
            assert_eq!(classes.len(), expected);
            // Every class representative is itself a unit vector of the form.
            for rep in &classes {
                assert_eq!(q.evaluate(rep).unwrap(), 1);
            }
        }
    }

    #[test]
    fn ears_passes_on_suite_forms() {
        for q in fixtures::suite_forms::<i64>() {
            let report = check_ears(&q, 2);
            assert!(report.all_passed(), "failures: {:?}", report.failures().collect::<Vec<_>>());
        }
        let report = check_ears(&fixtures::kronecker_form::<i64>(), 3);
        assert!(report.all_passed());
    }

    #[test]
    fn ears_flags_disconnected_form() {
        // Two orthogonal A1 components: (R7) must fail.
        let q = UnitForm::<i64>::from_coefficients(2, &[]).unwrap();
        let report = check_ears(&q, 1);
        let r7 = report.results.iter().find(|r| r.check == "R7").unwrap();
        assert!(!r7.pass);
    }
}
