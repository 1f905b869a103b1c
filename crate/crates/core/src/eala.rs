//! The extended affine Lie algebra `E(q)` of a connected non-negative
//! unit form, with explicit structure constants over the rationals.
//!
//! Root spaces:
//! - `E_alpha = Q e_alpha` for non-isotropic `alpha`,
//! - `E_sigma = Q^n / rad q` for nonzero isotropic `sigma`, stored in
//!   coset coordinates over the complement basis,
//! - `E_0 = Q^n ⊕ (rad q)^*`, the vector part plus the dual directions
//!   `xi_1..xi_nu`.
//!
//! The bracket implements the homogeneous rules driven by the sign
//! cocycle `epsilon` and the radical projection `rho`, with the quotient
//! rule `[pi_sigma(v), pi_tau(w)] = q(v, w) pi_0(sigma)` when
//! `sigma + tau = 0` and zero for other isotropic pairs. The symmetric
//! bilinear form pairs opposite root spaces only.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gauge::{form_key, Gauge};
use crate::linalg::{self, add_vec, determinant_rational, Matrix};
use crate::num::{int, Rat, Scalar, SplitMix64};
use crate::report::{ReportParams, VerificationReport};
use crate::roots::{self, classify, enumerate_roots, Root, RootKind};
use crate::unitform::{fmt_vec, vec_json, UnitForm};

/// Homogeneous content of one root space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Component<I: Scalar> {
    /// Coefficient of `e_alpha`.
    NonIso(Rat<I>),
    /// Coset coordinates (length n - nu) over the complement images.
    Iso(Vec<Rat<I>>),
    /// `pi_0(vec) + sum_k dual_k xi_k` (lengths n and nu).
    Zero { vec: Vec<Rat<I>>, dual: Vec<Rat<I>> },
}

impl<I: Scalar> Component<I> {
    fn is_zero(&self) -> bool {
        match self {
            Component::NonIso(c) => c.is_zero(),
            Component::Iso(v) => v.iter().all(Zero::is_zero),
            Component::Zero { vec, dual } => {
                vec.iter().all(Zero::is_zero) && dual.iter().all(Zero::is_zero)
            }
        }
    }

    fn scale(&self, s: &Rat<I>) -> Self {
        match self {
            Component::NonIso(c) => Component::NonIso(c.clone() * s.clone()),
            Component::Iso(v) => Component::Iso(scale_rats(s, v)),
            Component::Zero { vec, dual } => Component::Zero {
                vec: scale_rats(s, vec),
                dual: scale_rats(s, dual),
            },
        }
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Component::NonIso(a), Component::NonIso(b)) => {
                Component::NonIso(a.clone() + b.clone())
            }
            (Component::Iso(a), Component::Iso(b)) => Component::Iso(add_rats(a, b)),
            (
                Component::Zero { vec: av, dual: ad },
                Component::Zero { vec: bv, dual: bd },
            ) => Component::Zero {
                vec: add_rats(av, bv),
                dual: add_rats(ad, bd),
            },
            _ => panic!("mismatched component kinds at one degree"),
        }
    }

    fn neg(&self) -> Self {
        self.scale(&-Rat::<I>::one())
    }
}

fn scale_rats<I: Scalar>(s: &Rat<I>, v: &[Rat<I>]) -> Vec<Rat<I>> {
    v.iter().map(|x| s.clone() * x.clone()).collect()
}

fn add_rats<I: Scalar>(a: &[Rat<I>], b: &[Rat<I>]) -> Vec<Rat<I>> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn rat_json<I: Scalar>(v: &[Rat<I>]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// An element of `E(q)`: a finite sum of root-space contents keyed by
/// degree. Degrees are genuine roots; zero terms are pruned eagerly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement<I: Scalar> {
    terms: BTreeMap<Vec<I>, Component<I>>,
    key: u64,
}

impl<I: Scalar> GradedElement<I> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
            key: 0,
        }
    }

    /// Basis vector `e_alpha` of a non-isotropic root space.
    pub fn e(q: &UnitForm<I>, g: &Gauge<I>, alpha: &[I]) -> Result<Self> {
        check_gauge(q, g)?;
        let root = classify(q, alpha)?.ok_or_else(|| Error::NotARoot {
            vec: format!("{alpha:?}"),
        })?;
        if root.kind != RootKind::NonIsotropic {
            return Err(Error::NotNonIsotropic {
                vec: format!("{alpha:?}"),
            });
        }
        Ok(Self::from_component(
            alpha.to_vec(),
            Component::NonIso(Rat::<I>::one()),
            form_key(q),
        ))
    }

    /// `pi_sigma(v)` for `sigma` isotropic or zero; reduces `v` to coset
    /// coordinates when `sigma != 0`.
    pub fn pi(q: &UnitForm<I>, g: &Gauge<I>, sigma: &[I], v: &[I]) -> Result<Self> {
        check_gauge(q, g)?;
        let root = classify(q, sigma)?.ok_or_else(|| Error::NotARoot {
            vec: format!("{sigma:?}"),
        })?;
        if v.len() != q.n() {
            return Err(Error::DimensionMismatch {
                expected: q.n(),
                got: v.len(),
            });
        }
        let comp = match root.kind {
            RootKind::NonIsotropic => {
                return Err(Error::MalformedWord(format!(
                    "pi requires an isotropic degree, got {sigma:?} with q = 1"
                )))
            }
            RootKind::Zero => Component::Zero {
                vec: to_rats(v),
                dual: vec![Rat::<I>::zero(); g.corank()],
            },
            RootKind::Isotropic => Component::Iso(to_rats(&g.complement_coords(v))),
        };
        Ok(Self::from_component(sigma.to_vec(), comp, form_key(q)))
    }

    /// `pi_0(v)`: the image of `v` in the vector part of `E_0`.
    pub fn pi0(q: &UnitForm<I>, g: &Gauge<I>, v: &[I]) -> Result<Self> {
        let zero = vec![I::zero(); q.n()];
        Self::pi(q, g, &zero, v)
    }

    /// Dual basis element `xi_k` (1-based) of `(rad q)^*` inside `E_0`.
    pub fn xi(q: &UnitForm<I>, g: &Gauge<I>, k: usize) -> Result<Self> {
        check_gauge(q, g)?;
        if k < 1 || k > g.corank() {
            return Err(Error::IndexOutOfRange {
                i: k,
                j: k,
                n: g.corank(),
            });
        }
        let mut dual = vec![Rat::<I>::zero(); g.corank()];
        dual[k - 1] = Rat::<I>::one();
        Ok(Self::from_component(
            vec![I::zero(); q.n()],
            Component::Zero {
                vec: vec![Rat::<I>::zero(); q.n()],
                dual,
            },
            form_key(q),
        ))
    }

    /// All construction funnels through here: zero elements always carry
    /// key 0, so structural equality is well-defined across forms.
    fn make(terms: BTreeMap<Vec<I>, Component<I>>, key: u64) -> Self {
        let key = if terms.is_empty() { 0 } else { key };
        Self { terms, key }
    }

    fn from_component(degree: Vec<I>, comp: Component<I>, key: u64) -> Self {
        let mut terms = BTreeMap::new();
        if !comp.is_zero() {
            terms.insert(degree, comp);
        }
        Self::make(terms, key)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<I>, &Component<I>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Vec<I>> {
        self.terms.keys().cloned().collect()
    }

    fn compatible(&self, key: u64) -> bool {
        self.terms.is_empty() || self.key == key
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !self.compatible(other.key) && !other.compatible(self.key) {
            return Err(Error::FormMismatch);
        }
        let mut terms = self.terms.clone();
        for (deg, comp) in &other.terms {
            insert_term(&mut terms, deg.clone(), comp.clone());
        }
        let key = if self.terms.is_empty() { other.key } else { self.key };
        Ok(Self::make(terms, key))
    }

    pub fn neg(&self) -> Self {
        Self::make(
            self.terms
                .iter()
                .map(|(d, c)| (d.clone(), c.neg()))
                .collect(),
            self.key,
        )
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rat<I>) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::make(
            self.terms
                .iter()
                .map(|(d, c)| (d.clone(), c.scale(s)))
                .collect(),
            self.key,
        )
    }

    /// JSON rendering: one entry per degree and space, rationals as strings.
    pub fn to_json(&self) -> Value {
        let mut terms = Vec::new();
        for (deg, comp) in &self.terms {
            match comp {
                Component::NonIso(c) => terms.push(json!({
                    "degree": vec_json(deg),
                    "space": "noniso",
                    "coords": rat_json(std::slice::from_ref(c)),
                })),
                Component::Iso(v) => terms.push(json!({
                    "degree": vec_json(deg),
                    "space": "iso",
                    "coords": rat_json(v),
                })),
                Component::Zero { vec, dual } => {
                    if !vec.iter().all(Zero::is_zero) {
                        terms.push(json!({
                            "degree": vec_json(deg),
                            "space": "zerovec",
                            "coords": rat_json(vec),
                        }));
                    }
                    if !dual.iter().all(Zero::is_zero) {
                        terms.push(json!({
                            "degree": vec_json(deg),
                            "space": "zerodual",
                            "coords": rat_json(dual),
                        }));
                    }
                }
            }
        }
        json!({ "terms": terms })
    }
}

fn to_rats<I: Scalar>(v: &[I]) -> Vec<Rat<I>> {
    v.iter().map(|x| Ratio::from_integer(x.clone())).collect()
}

fn insert_term<I: Scalar>(
    terms: &mut BTreeMap<Vec<I>, Component<I>>,
    degree: Vec<I>,
    comp: Component<I>,
) {
    if comp.is_zero() {
        return;
    }
    match terms.remove(&degree) {
        None => {
            terms.insert(degree, comp);
        }
        Some(existing) => {
            let sum = existing.add(&comp);
            if !sum.is_zero() {
                terms.insert(degree, sum);
            }
        }
    }
}

fn check_gauge<I: Scalar>(q: &UnitForm<I>, g: &Gauge<I>) -> Result<()> {
    if g.key() != form_key(q) {
        return Err(Error::GaugeMismatch);
    }
    Ok(())
}

fn apply_sign<I: Scalar>(sign: i8, v: Rat<I>) -> Rat<I> {
    if sign < 0 {
        -v
    } else {
        v
    }
}

/// `q(v, w)` for a rational vector against an integer one.
fn pair_rat_int<I: Scalar>(q: &UnitForm<I>, v: &[Rat<I>], w: &[I]) -> Rat<I> {
    let cw = q.symmetric_matrix().mul_vec(w);
    v.iter().zip(&cw).fold(Rat::<I>::zero(), |acc, (a, b)| {
        acc + a.clone() * Ratio::from_integer(b.clone())
    })
}

fn pair_rat_rat<I: Scalar>(q: &UnitForm<I>, v: &[Rat<I>], w: &[Rat<I>]) -> Rat<I> {
    let cw = q.symmetric_matrix().mul_vec_rat(w);
    v.iter()
        .zip(&cw)
        .fold(Rat::<I>::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// Coset pairing `q(v, w)` through the quotient Gram matrix.
fn coset_pair<I: Scalar>(g: &Gauge<I>, v: &[Rat<I>], w: &[Rat<I>]) -> Rat<I> {
    let gram = &g.radical().quotient_gram;
    let mut acc = Rat::<I>::zero();
    for (a, va) in v.iter().enumerate() {
        if va.is_zero() {
            continue;
        }
        for (b, wb) in w.iter().enumerate() {
            acc = acc + va.clone() * wb.clone() * Ratio::from_integer(gram.at(a, b).clone());
        }
    }
    acc
}

/// `q(v, beta)` where `v` is given in coset coordinates and `beta` is an
/// integer vector; well-defined because the radical pairs to zero.
fn coset_pair_vector<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    v: &[Rat<I>],
    beta: &[I],
) -> Rat<I> {
    let comp = &g.radical().complement;
    v.iter()
        .zip(comp)
        .fold(Rat::<I>::zero(), |acc, (coeff, basis)| {
            let pairing = q.bilinear(basis, beta).expect("complement has length n");
            acc + coeff.clone() * Ratio::from_integer(pairing)
        })
}

/// Bracket of two homogeneous pieces; `None` when the product vanishes
/// identically (target degree outside `R(q)` or a zero structure constant
/// by the grading rules).
fn bracket_homogeneous<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    da: &[I],
    ca: &Component<I>,
    db: &[I],
    cb: &Component<I>,
) -> Option<(Vec<I>, Component<I>)> {
    let target = add_vec(da, db);
    match (ca, cb) {
        (Component::NonIso(a), Component::NonIso(b)) => {
            let kind = classify(q, &target).expect("degrees have length n")?.kind;
            let sign = g.epsilon(da, db).expect("degrees have length n");
            let coeff = apply_sign(sign, a.clone() * b.clone());
            let comp = match kind {
                RootKind::NonIsotropic => Component::NonIso(coeff),
                RootKind::Zero => Component::Zero {
                    vec: scale_rats(&coeff, &to_rats(da)),
                    dual: vec![Rat::<I>::zero(); g.corank()],
                },
                RootKind::Isotropic => {
                    Component::Iso(scale_rats(&coeff, &to_rats(&g.complement_coords(da))))
                }
            };
            Some((target, comp))
        }
        (Component::NonIso(a), Component::Iso(w)) => {
            // [e_alpha, pi_tau(w)] = -epsilon(tau, alpha) q(w, alpha) e_{alpha+tau}
            let sign = g.epsilon(db, da).expect("degrees have length n");
            let coeff = -apply_sign(sign, a.clone() * coset_pair_vector(q, g, w, da));
            Some((target, Component::NonIso(coeff)))
        }
        (Component::Iso(w), Component::NonIso(b)) => {
            // (B2): [pi_sigma(w), e_beta] = epsilon(sigma, beta) q(w, beta) e_{beta+sigma}
            let sign = g.epsilon(da, db).expect("degrees have length n");
            let coeff = apply_sign(sign, b.clone() * coset_pair_vector(q, g, w, db));
            Some((target, Component::NonIso(coeff)))
        }
        (Component::NonIso(a), Component::Zero { vec, dual }) => {
            // -( [pi_0(v), e_alpha] + [xi, e_alpha] )
            let scalar = pair_rat_int(q, vec, da) + g.dual_pairing(dual, da);
            Some((target, Component::NonIso(-(a.clone() * scalar))))
        }
        (Component::Zero { vec, dual }, Component::NonIso(b)) => {
            // (B2) with sigma = 0 plus (B4).
            let scalar = pair_rat_int(q, vec, db) + g.dual_pairing(dual, db);
            Some((target, Component::NonIso(b.clone() * scalar)))
        }
        (Component::Iso(v), Component::Iso(w)) => {
            // Quotient rule: q(v, w) pi_0(sigma) when tau = -sigma, else 0.
            if target.iter().all(Zero::is_zero) {
                let coeff = coset_pair(g, v, w);
                Some((
                    target,
                    Component::Zero {
                        vec: scale_rats(&coeff, &to_rats(da)),
                        dual: vec![Rat::<I>::zero(); g.corank()],
                    },
                ))
            } else {
                None
            }
        }
        (Component::Iso(v), Component::Zero { dual, .. }) => {
            // -[xi, pi_sigma(v)] = -xi(rho(sigma)) pi_sigma(v); the pi_0
            // part of the zero component brackets to zero with pi_sigma.
            let scalar = -g.dual_pairing(dual, da);
            Some((da.to_vec(), Component::Iso(scale_rats(&scalar, v))))
        }
        (Component::Zero { dual, .. }, Component::Iso(v)) => {
            // (B5): [xi, pi_tau(w)] = xi(rho(tau)) pi_tau(w).
            let scalar = g.dual_pairing(dual, db);
            Some((db.to_vec(), Component::Iso(scale_rats(&scalar, v))))
        }
        // E_0 is abelian: (B6), the quotient rule at sigma = tau = 0, and
        // (B5) with rho(0) = 0 all vanish.
        (Component::Zero { .. }, Component::Zero { .. }) => None,
    }
}

/// The Lie bracket of `E(q)`, extended bilinearly from the homogeneous rules.
pub fn bracket<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    x: &GradedElement<I>,
    y: &GradedElement<I>,
) -> Result<GradedElement<I>> {
    check_gauge(q, g)?;
    let key = form_key(q);
    if !x.compatible(key) || !y.compatible(key) {
        return Err(Error::FormMismatch);
    }
    let mut terms = BTreeMap::new();
    for (da, ca) in &x.terms {
        for (db, cb) in &y.terms {
            if let Some((deg, comp)) = bracket_homogeneous(q, g, da, ca, db, cb) {
                insert_term(&mut terms, deg, comp);
            }
        }
    }
    Ok(GradedElement::make(terms, key))
}

fn form_homogeneous<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    da: &[I],
    ca: &Component<I>,
    db: &[I],
    cb: &Component<I>,
) -> Rat<I> {
    if !add_vec(da, db).iter().all(Zero::is_zero) {
        return Rat::<I>::zero();
    }
    match (ca, cb) {
        // (e_alpha, -e_{-alpha}) = 1, i.e. (e_alpha, e_{-alpha}) = -1.
        (Component::NonIso(a), Component::NonIso(b)) => -(a.clone() * b.clone()),
        (Component::Iso(v), Component::Iso(w)) => coset_pair(g, v, w),
        (
            Component::Zero { vec: v, dual: xi },
            Component::Zero { vec: w, dual: zeta },
        ) => {
            pair_rat_rat(q, v, w)
                + g.dual_pairing_rat(xi, w)
                + g.dual_pairing_rat(zeta, v)
        }
        // Opposite degrees always carry the same component kind.
        _ => unreachable!("component kinds disagree at opposite degrees"),
    }
}

/// The invariant symmetric bilinear form of `E(q)`.
pub fn form<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    x: &GradedElement<I>,
    y: &GradedElement<I>,
) -> Result<Rat<I>> {
    check_gauge(q, g)?;
    let key = form_key(q);
    if !x.compatible(key) || !y.compatible(key) {
        return Err(Error::FormMismatch);
    }
    let mut acc = Rat::<I>::zero();
    for (da, ca) in &x.terms {
        for (db, cb) in &y.terms {
            acc = acc + form_homogeneous(q, g, da, ca, db, cb);
        }
    }
    Ok(acc)
}

/// Dimension of the root space `E_degree`.
pub fn dimensions<I: Scalar>(q: &UnitForm<I>, degree: &Root<I>) -> Result<usize> {
    let root = classify(q, &degree.vec)?.ok_or_else(|| Error::NotARoot {
        vec: format!("{:?}", degree.vec),
    })?;
    let nu = q.radical_data().corank;
    Ok(match root.kind {
        RootKind::NonIsotropic => 1,
        RootKind::Isotropic => q.n() - nu,
        RootKind::Zero => q.n() + nu,
    })
}

/// Total dimension of the height truncation of `E(q)`.
pub fn total_dimension<I: Scalar>(q: &UnitForm<I>, height: usize) -> usize {
    let nu = q.radical_data().corank;
    enumerate_roots(q, height)
        .iter()
        .map(|r| match r.kind {
            RootKind::NonIsotropic => 1,
            RootKind::Isotropic => q.n() - nu,
            RootKind::Zero => q.n() + nu,
        })
        .sum()
}

/// Labelled homogeneous basis element of the truncated algebra.
#[derive(Debug, Clone)]
pub struct BasisElement<I: Scalar> {
    pub degree: Vec<I>,
    pub component: Component<I>,
    pub label: String,
}

/// The homogeneous basis of the height truncation: `e_alpha` per
/// non-isotropic root, `pi_sigma(complement_j)` per nonzero isotropic
/// root, and `pi_0(c_i)`, `xi_k` at degree zero.
pub fn basis_elements<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    height: usize,
) -> Vec<BasisElement<I>> {
    let nu = g.corank();
    let dim_iso = q.n() - nu;
    let mut out = Vec::new();
    for root in enumerate_roots(q, height) {
        match root.kind {
            RootKind::NonIsotropic => out.push(BasisElement {
                label: format!("e[{}]", fmt_vec(&root.vec)),
                degree: root.vec,
                component: Component::NonIso(Rat::<I>::one()),
            }),
            RootKind::Isotropic => {
                for j in 0..dim_iso {
                    let mut coords = vec![Rat::<I>::zero(); dim_iso];
                    coords[j] = Rat::<I>::one();
                    out.push(BasisElement {
                        label: format!("pi[{}](comp{})", fmt_vec(&root.vec), j + 1),
                        degree: root.vec.clone(),
                        component: Component::Iso(coords),
                    });
                }
            }
            RootKind::Zero => {
                for i in 0..q.n() {
                    let mut vec = vec![Rat::<I>::zero(); q.n()];
                    vec[i] = Rat::<I>::one();
                    out.push(BasisElement {
                        label: format!("pi0(c{})", i + 1),
                        degree: root.vec.clone(),
                        component: Component::Zero {
                            vec,
                            dual: vec![Rat::<I>::zero(); nu],
                        },
                    });
                }
                for k in 0..nu {
                    let mut dual = vec![Rat::<I>::zero(); nu];
                    dual[k] = Rat::<I>::one();
                    out.push(BasisElement {
                        label: format!("xi[{}]", k + 1),
                        degree: root.vec.clone(),
                        component: Component::Zero {
                            vec: vec![Rat::<I>::zero(); q.n()],
                            dual,
                        },
                    });
                }
            }
        }
    }
    out
}

fn element_of<I: Scalar>(key: u64, b: &BasisElement<I>) -> GradedElement<I> {
    GradedElement::from_component(b.degree.clone(), b.component.clone(), key)
}

/// Exhaustive-mode cap on the truncated basis size.
const EXHAUSTIVE_LIMIT: usize = 200;

/// Jacobi identity and anticommutativity, exhaustively on the height-2
/// basis (when small enough) and on seeded random homogeneous triples.
pub fn check_jacobi<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    height: usize,
    samples: usize,
    seed: u64,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "jacobi",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height).with_samples(samples, seed),
    );
    let key = form_key(q);
    let basis = basis_elements(q, g, height.min(2));

    // Anticommutativity on all basis pairs, including x = y.
    let mut witness = None;
    'anti: for a in &basis {
        for b in &basis {
            let xy = bracket(q, g, &element_of(key, a), &element_of(key, b)).unwrap();
            let yx = bracket(q, g, &element_of(key, b), &element_of(key, a)).unwrap();
            if !xy.add(&yx).unwrap().is_zero() {
                witness = Some(json!({ "x": a.label, "y": b.label }));
                break 'anti;
            }
        }
    }
    report.push_outcome("anticommutativity/basis", witness);

    // The quotient identity behind anticommutativity of (B3):
    // pi_{alpha+beta}(beta) = -pi_{alpha+beta}(alpha) for alpha + beta
    // isotropic nonzero.
    let mut witness = None;
    let roots = enumerate_roots(q, height.min(2));
    let noniso: Vec<&Root<I>> = roots
        .iter()
        .filter(|r| r.kind == RootKind::NonIsotropic)
        .collect();
    'remark: for a in &noniso {
        for b in &noniso {
            let sum = add_vec(&a.vec, &b.vec);
            if matches!(
                classify(q, &sum).unwrap(),
                Some(Root { kind: RootKind::Isotropic, .. })
            ) {
                let lhs = to_rats(&g.complement_coords(&b.vec));
                let rhs: Vec<Rat<I>> = g
                    .complement_coords(&a.vec)
                    .iter()
                    .map(|v| -Ratio::from_integer(v.clone()))
                    .collect();
                if lhs != rhs {
                    witness = Some(json!({
                        "alpha": vec_json(&a.vec),
                        "beta": vec_json(&b.vec),
                    }));
                    break 'remark;
                }
            }
        }
    }
    report.push_outcome("anticommutativity/remark", witness);

    // Exhaustive Jacobi over unordered basis triples (the Jacobiator is
    // alternating, so unordered triples with repetition suffice given the
    // anticommutativity check above).
    if basis.len() <= EXHAUSTIVE_LIMIT {
        let mut witness = None;
        'jacobi: for i in 0..basis.len() {
            for j in i..basis.len() {
                for k in j..basis.len() {
                    if let Some(w) = jacobiator_witness(q, g, key, &basis[i], &basis[j], &basis[k])
                    {
                        witness = Some(w);
                        break 'jacobi;
                    }
                }
            }
        }
        report.push_outcome("jacobi/exhaustive", witness);
    } else {
        report.push(
            "jacobi/exhaustive",
            true,
            Some(json!({ "skipped": "basis larger than exhaustive limit", "basis": basis.len() })),
        );
    }

    // Seeded random homogeneous triples at the full height.
    let full_basis = basis_elements(q, g, height);
    let mut rng = SplitMix64::new(seed);
    let mut witness = None;
    for _ in 0..samples {
        let x = random_homogeneous(&mut rng, &full_basis);
        let y = random_homogeneous(&mut rng, &full_basis);
        let z = random_homogeneous(&mut rng, &full_basis);
        if let Some(w) = jacobiator_witness(q, g, key, &x, &y, &z) {
            witness = Some(w);
            break;
        }
    }
    report.push_outcome("jacobi/random", witness);
    report
}

fn jacobiator_witness<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    key: u64,
    a: &BasisElement<I>,
    b: &BasisElement<I>,
    c: &BasisElement<I>,
) -> Option<Value> {
    let (x, y, z) = (element_of(key, a), element_of(key, b), element_of(key, c));
    let j1 = bracket(q, g, &x, &bracket(q, g, &y, &z).unwrap()).unwrap();
    let j2 = bracket(q, g, &y, &bracket(q, g, &z, &x).unwrap()).unwrap();
    let j3 = bracket(q, g, &z, &bracket(q, g, &x, &y).unwrap()).unwrap();
    let total = j1.add(&j2).unwrap().add(&j3).unwrap();
    (!total.is_zero()).then(|| {
        json!({
            "x": a.label,
            "y": b.label,
            "z": c.label,
            "jacobiator": total.to_json(),
        })
    })
}

fn random_homogeneous<I: Scalar>(
    rng: &mut SplitMix64,
    basis: &[BasisElement<I>],
) -> BasisElement<I> {
    let template = &basis[rng.below(basis.len())];
    let mut coeff = || -> Rat<I> {
        let mut numer = 0i64;
        while numer == 0 {
            numer = rng.range(-3, 3);
        }
        Ratio::new(int(numer), int(rng.range(1, 2)))
    };
    let component = match &template.component {
        Component::NonIso(_) => Component::NonIso(coeff()),
        Component::Iso(v) => Component::Iso((0..v.len()).map(|_| coeff()).collect()),
        Component::Zero { vec, dual } => Component::Zero {
            vec: (0..vec.len()).map(|_| coeff()).collect(),
            dual: (0..dual.len()).map(|_| coeff()).collect(),
        },
    };
    BasisElement {
        degree: template.degree.clone(),
        component,
        label: format!("random@[{}]", fmt_vec(&template.degree)),
    }
}

/// Invariance `([x,y],z) = (x,[y,z])`, symmetry, and non-degeneracy of
/// every pairing block `E_alpha x E_{-alpha}` within the truncation.
pub fn check_form<I: Scalar>(q: &UnitForm<I>, g: &Gauge<I>, height: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        "form",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height),
    );
    let key = form_key(q);
    let basis = basis_elements(q, g, height);
    let mut by_degree: BTreeMap<Vec<I>, Vec<&BasisElement<I>>> = BTreeMap::new();
    for b in &basis {
        by_degree.entry(b.degree.clone()).or_default().push(b);
    }

    // Symmetry on degree-balanced basis pairs.
    let mut witness = None;
    'sym: for (da, elems_a) in &by_degree {
        let neg = linalg::neg_vec(da);
        let Some(elems_b) = by_degree.get(&neg) else { continue };
        for a in elems_a {
            for b in elems_b {
                let ab = form_homogeneous(q, g, &a.degree, &a.component, &b.degree, &b.component);
                let ba = form_homogeneous(q, g, &b.degree, &b.component, &a.degree, &a.component);
                if ab != ba {
                    witness = Some(json!({ "x": a.label, "y": b.label }));
                    break 'sym;
                }
            }
        }
    }
    report.push_outcome("form/symmetric", witness);

    // Invariance on all basis triples whose degrees sum to zero.
    let mut witness = None;
    let mut triples = 0usize;
    'inv: for (da, elems_a) in &by_degree {
        for (db, elems_b) in &by_degree {
            let dc = linalg::neg_vec(&add_vec(da, db));
            let Some(elems_c) = by_degree.get(&dc) else { continue };
            for a in elems_a {
                for b in elems_b {
                    for c in elems_c {
                        triples += 1;
                        let (x, y, z) =
                            (element_of(key, a), element_of(key, b), element_of(key, c));
                        let lhs = form(q, g, &bracket(q, g, &x, &y).unwrap(), &z).unwrap();
                        let rhs = form(q, g, &x, &bracket(q, g, &y, &z).unwrap()).unwrap();
                        if lhs != rhs {
                            witness = Some(json!({
                                "x": a.label, "y": b.label, "z": c.label,
                                "lhs": lhs.to_string(), "rhs": rhs.to_string(),
                            }));
                            break 'inv;
                        }
                    }
                }
            }
        }
    }
    report.push(
        "form/invariance",
        witness.is_none(),
        witness.or_else(|| Some(json!({ "triples_checked": triples }))),
    );

    // Non-degeneracy of each pairing block E_alpha x E_{-alpha}.
    let mut witness = None;
    for (da, elems_a) in &by_degree {
        let neg = linalg::neg_vec(da);
        let Some(elems_b) = by_degree.get(&neg) else { continue };
        let dim = elems_a.len();
        let mut gram = Matrix::<Rat<I>>::filled(dim, dim, Rat::<I>::zero());
        for (r, a) in elems_a.iter().enumerate() {
            for (c, b) in elems_b.iter().enumerate() {
                gram.set(
                    r,
                    c,
                    form_homogeneous(q, g, &a.degree, &a.component, &b.degree, &b.component),
                );
            }
        }
        if determinant_rational(&gram).is_zero() {
            witness = Some(json!({ "degree": vec_json(da), "block_dim": dim }));
            break;
        }
    }
    report.push_outcome("form/nondegenerate", witness);
    report
}

/// `(ad e_alpha)^{u+1}` annihilates every truncated basis element, with
/// `u` read from the root string of the element's degree through `alpha`.
pub fn check_ad_nilpotent<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    alpha: &Root<I>,
    height: usize,
) -> Result<VerificationReport> {
    let alpha_root = classify(q, &alpha.vec)?.ok_or_else(|| Error::NotARoot {
        vec: format!("{:?}", alpha.vec),
    })?;
    if alpha_root.kind != RootKind::NonIsotropic {
        return Err(Error::NotNonIsotropic {
            vec: format!("{:?}", alpha.vec),
        });
    }
    let mut report = VerificationReport::new(
        "nilpotent",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height),
    );
    let key = form_key(q);
    let e_alpha = GradedElement::e(q, g, &alpha.vec)?;
    let mut witness = None;
    for b in basis_elements(q, g, height) {
        let beta = classify(q, &b.degree)?.expect("basis degrees are roots");
        let string = roots::root_string(q, &alpha_root, &beta)?;
        let mut acc = element_of(key, &b);
        for _ in 0..=string.u {
            acc = bracket(q, g, &e_alpha, &acc)?;
        }
        if !acc.is_zero() {
            witness = Some(json!({
                "beta": b.label,
                "u": string.u,
                "residue": acc.to_json(),
            }));
            break;
        }
    }
    report.push_outcome(format!("nilpotent/alpha=[{}]", fmt_vec(&alpha.vec)), witness);
    Ok(report)
}

/// For every nonzero homogeneous basis element of nonzero degree, exhibit
/// a partner `y` with `[x, y]` a nonzero element of `E_0`; these are the
/// witnesses showing `E(q)` has no ideal meeting `E_0` trivially.
pub fn check_ideal_witness<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    height: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "ideal",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height),
    );
    let key = form_key(q);
    for b in basis_elements(q, g, height) {
        if b.degree.iter().all(Zero::is_zero) {
            continue;
        }
        let neg_degree = linalg::neg_vec(&b.degree);
        let (y, y_label): (GradedElement<I>, String) = match &b.component {
            Component::NonIso(_) => (
                GradedElement::e(q, g, &neg_degree).unwrap().neg(),
                format!("-e[{}]", fmt_vec(&neg_degree)),
            ),
            Component::Iso(coords) => {
                // Partner with the same coset coordinates: the quotient
                // Gram matrix is positive definite, so q(v, v) > 0.
                let j = coords
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("basis component is nonzero");
                let w = g.radical().complement[j].clone();
                (
                    GradedElement::pi(q, g, &neg_degree, &w).unwrap(),
                    format!("pi[{}](comp{})", fmt_vec(&neg_degree), j + 1),
                )
            }
            Component::Zero { .. } => unreachable!("degree zero excluded"),
        };
        let x = element_of(key, &b);
        let product = bracket(q, g, &x, &y).unwrap();
        let in_h = product
            .support()
            .iter()
            .all(|d| d.iter().all(Zero::is_zero));
        let pass = !product.is_zero() && in_h;
        report.push(
            format!("ideal/{}", b.label),
            pass,
            Some(json!({
                "x": b.label,
                "y": y_label,
                "bracket": product.to_json(),
            })),
        );
    }
    report
}

/// Irreducibility (EA5): the pairing graph on the truncated `R^x` is
/// connected.
pub fn check_irreducible<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    height: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "irreducible",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height),
    );
    let roots = enumerate_roots(q, height);
    let noniso: Vec<&Root<I>> = roots
        .iter()
        .filter(|r| r.kind == RootKind::NonIsotropic)
        .collect();
    let connected = roots::nonisotropic_graph_connected(q, &noniso);
    report.push(
        "irreducible/pairing-graph",
        connected,
        Some(json!({ "nonisotropic_count": noniso.len() })),
    );
    report
}
