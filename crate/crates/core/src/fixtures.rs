//! Standard example forms: the simply-laced Dynkin bigraphs and a few
//! non-negative forms of positive corank.

use crate::num::{int, Scalar};
use crate::unitform::UnitForm;

/// `A_r` path: `q_{i,i+1} = -1`.
pub fn a_form<I: Scalar>(r: usize) -> UnitForm<I> {
    let entries: Vec<_> = (1..r).map(|i| (i, i + 1, int(-1))).collect();
    UnitForm::from_coefficients(r, &entries).expect("valid A_r form")
}

/// `D_r`: path on 1..r-1 with the extra vertex r attached to vertex r-2.
pub fn d_form<I: Scalar>(r: usize) -> UnitForm<I> {
    assert!(r >= 4);
    let mut entries: Vec<_> = (1..r - 1).map(|i| (i, i + 1, int(-1))).collect();
    entries.push((r - 2, r, int(-1)));
    UnitForm::from_coefficients(r, &entries).expect("valid D_r form")
}

/// `E_r` (r = 6, 7, 8): path on 1..r-1 with the extra vertex r attached to
/// vertex 3, giving branch legs of lengths (1, 2, r-4).
pub fn e_form<I: Scalar>(r: usize) -> UnitForm<I> {
    assert!((6..=8).contains(&r));
    let mut entries: Vec<_> = (1..r - 1).map(|i| (i, i + 1, int(-1))).collect();
    entries.push((3, r, int(-1)));
    UnitForm::from_coefficients(r, &entries).expect("valid E_r form")
}

/// `D_4` as a star with center 1, matching the usual presentation.
pub fn d4_star_form<I: Scalar>() -> UnitForm<I> {
    UnitForm::from_coefficients(4, &[(1, 2, int(-1)), (1, 3, int(-1)), (1, 4, int(-1))])
        .expect("valid D4 star form")
}

/// The Kronecker form `(x1 - x2)^2`: corank 1, Dynkin type A1.
pub fn kronecker_form<I: Scalar>() -> UnitForm<I> {
    UnitForm::from_coefficients(2, &[(1, 2, int(-2))]).expect("valid Kronecker form")
}

/// `(x1 - x2 - x3)^2`: corank 2, Dynkin type A1.
pub fn corank2_form<I: Scalar>() -> UnitForm<I> {
    UnitForm::from_coefficients(3, &[(1, 2, int(-2)), (1, 3, int(-2)), (2, 3, int(2))])
        .expect("valid corank-2 form")
}

/// The triangle with all edges solid: corank 1, Dynkin type A2.
pub fn affine_a2_form<I: Scalar>() -> UnitForm<I> {
    UnitForm::from_coefficients(3, &[(1, 2, int(-1)), (1, 3, int(-1)), (2, 3, int(-1))])
        .expect("valid affine A2 form")
}

/// The m-cycle with all edges solid: corank 1, Dynkin type A_{m-1}.
pub fn cycle_form<I: Scalar>(m: usize) -> UnitForm<I> {
    assert!(m >= 3);
    let mut entries: Vec<_> = (1..m).map(|i| (i, i + 1, int(-1))).collect();
    entries.push((1, m, int(-1)));
    UnitForm::from_coefficients(m, &entries).expect("valid cycle form")
}

/// Extended D4: the star with one extra leg; corank 1, Dynkin type D4,
/// radical generated by twice the center plus the four legs.
pub fn extended_d4_form<I: Scalar>() -> UnitForm<I> {
    UnitForm::from_coefficients(
        5,
        &[
            (1, 2, int(-1)),
            (1, 3, int(-1)),
            (1, 4, int(-1)),
            (1, 5, int(-1)),
        ],
    )
    .expect("valid extended D4 form")
}

/// The four forms exercised throughout the verification suites.
pub fn suite_forms<I: Scalar>() -> Vec<UnitForm<I>> {
    vec![a_form(2), a_form(3), kronecker_form(), corank2_form()]
}

/// A broader sample for invariant tests.
pub fn all_standard_forms<I: Scalar>() -> Vec<UnitForm<I>> {
    vec![
        a_form(1),
        a_form(2),
        a_form(3),
        a_form(4),
        d_form(4),
        d4_star_form(),
        e_form(6),
        kronecker_form(),
        corank2_form(),
        affine_a2_form(),
    ]
}
