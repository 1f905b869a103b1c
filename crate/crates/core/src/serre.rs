//! Generator images and generalized Serre relations inside `E(q)`.
//!
//! The generators `f_{-i}, h_i, f_i` (1 <= i <= n) map to
//! `-e_{-c_i}, [e_{c_i}, -e_{-c_i}], e_{c_i}`. This module verifies the
//! relations (G1)-(G3) exhaustively and the vanishing relations (G∞) for
//! all left-normed generator words of bounded length whose degree leaves
//! `R(q)`, plus a spanning sweep showing the images generate every
//! truncated root space of nonzero degree together with the vector part
//! of `E_0`.
//!
//! A small expression grammar drives the CLI `bracket` subcommand:
//!
//! ```text
//! expr := atom | "[" expr "," expr "]"
//! atom := "f" SIGN INT | "h" INT | "e[" INTLIST "]"
//!       | "pi[" INTLIST "](" INTLIST ")" | "xi[" INT "]"
//! ```

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::eala::{bracket, Component, GradedElement};
use crate::error::{Error, Result};
use crate::gauge::Gauge;
use crate::linalg::{add_vec, neg_vec};
use crate::num::{int, Rat, Scalar};
use crate::report::{ReportParams, VerificationReport};
use crate::roots::{classify, enumerate_roots, RootKind};
use crate::unitform::UnitForm;

/// Leaf symbol of a bracket word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator<I> {
    /// `f_{+i}` or `f_{-i}`; `sign` is +1 or -1, `index` 1-based.
    F { sign: i8, index: usize },
    /// `h_i`, 1-based.
    H { index: usize },
    /// Primitive `e[vec]`.
    E(Vec<I>),
    /// Primitive `pi[sigma](v)`.
    Pi(Vec<I>, Vec<I>),
    /// Primitive `xi[k]`, 1-based.
    Xi(usize),
}

/// Binary bracketing tree over generator leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketWord<I> {
    Leaf(Generator<I>),
    Bracket(Box<BracketWord<I>>, Box<BracketWord<I>>),
}

impl<I: Scalar> BracketWord<I> {
    /// Formal degree: the sum of leaf degrees (h and xi contribute zero).
    pub fn degree(&self, n: usize) -> Result<Vec<I>> {
        match self {
            BracketWord::Leaf(gen) => gen.degree(n),
            BracketWord::Bracket(a, b) => Ok(add_vec(&a.degree(n)?, &b.degree(n)?)),
        }
    }
}

impl<I: Scalar> Generator<I> {
    pub fn degree(&self, n: usize) -> Result<Vec<I>> {
        let unit = |index: usize, sign: i8| -> Result<Vec<I>> {
            if index < 1 || index > n {
                return Err(Error::IndexOutOfRange { i: index, j: index, n });
            }
            let mut v = vec![I::zero(); n];
            v[index - 1] = if sign < 0 { -I::one() } else { I::one() };
            Ok(v)
        };
        match self {
            Generator::F { sign, index } => unit(*index, *sign),
            Generator::H { index } => {
                unit(*index, 1)?;
                Ok(vec![I::zero(); n])
            }
            Generator::E(v) => Ok(v.clone()),
            Generator::Pi(sigma, _) => Ok(sigma.clone()),
            Generator::Xi(_) => Ok(vec![I::zero(); n]),
        }
    }
}

/// Image of `f_{±i}` or `h_i` under the epimorphism onto `E(q)`:
/// `f_{εi} -> ε e_{ε c_i}` and `h_i -> [e_{c_i}, -e_{-c_i}] = pi_0(c_i)`.
pub fn generator_image<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    symbol: &Generator<I>,
) -> Result<GradedElement<I>> {
    let n = q.n();
    match symbol {
        Generator::F { sign, index } => {
            if *index < 1 || *index > n {
                return Err(Error::IndexOutOfRange { i: *index, j: *index, n });
            }
            let mut c = vec![I::zero(); n];
            c[*index - 1] = if *sign < 0 { -I::one() } else { I::one() };
            let e = GradedElement::e(q, g, &c)?;
            Ok(if *sign < 0 { e.neg() } else { e })
        }
        Generator::H { index } => {
            if *index < 1 || *index > n {
                return Err(Error::IndexOutOfRange { i: *index, j: *index, n });
            }
            let mut c = vec![I::zero(); n];
            c[*index - 1] = I::one();
            let e_pos = GradedElement::e(q, g, &c)?;
            let e_neg = GradedElement::e(q, g, &neg_vec(&c))?.neg();
            bracket(q, g, &e_pos, &e_neg)
        }
        Generator::E(v) => GradedElement::e(q, g, v),
        Generator::Pi(sigma, v) => GradedElement::pi(q, g, sigma, v),
        Generator::Xi(k) => GradedElement::xi(q, g, *k),
    }
}

/// Recursive evaluation of a bracket word through the bracket of `E(q)`.
pub fn eval_word<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    word: &BracketWord<I>,
) -> Result<GradedElement<I>> {
    match word {
        BracketWord::Leaf(gen) => generator_image(q, g, gen),
        BracketWord::Bracket(a, b) => {
            let x = eval_word(q, g, a)?;
            let y = eval_word(q, g, b)?;
            bracket(q, g, &x, &y)
        }
    }
}

/// Parse the expression grammar; see the module docs.
pub fn parse_word<I: Scalar>(input: &str) -> Result<BracketWord<I>> {
    let mut parser = Parser {
        chars: input.as_bytes(),
        pos: 0,
    };
    let word = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.chars.len() {
        return Err(Error::MalformedWord(format!(
            "trailing input at byte {}",
            parser.pos
        )));
    }
    Ok(word)
}

struct Parser<'a> {
    chars: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::MalformedWord(format!(
                "expected '{}' at byte {}",
                c as char, self.pos
            )))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some(b'-') || self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(Error::MalformedWord(format!(
                "expected an integer at byte {start}"
            )));
        }
        std::str::from_utf8(&self.chars[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|e| Error::MalformedWord(format!("bad integer: {e}")))
    }

    fn int_list<I: Scalar>(&mut self) -> Result<Vec<I>> {
        let mut out = vec![int::<I>(self.integer()?)];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(int(self.integer()?));
        }
        Ok(out)
    }

    fn expr<I: Scalar>(&mut self) -> Result<BracketWord<I>> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let left = self.expr()?;
                self.expect(b',')?;
                let right = self.expr()?;
                self.expect(b']')?;
                Ok(BracketWord::Bracket(Box::new(left), Box::new(right)))
            }
            Some(_) => Ok(BracketWord::Leaf(self.atom()?)),
            None => Err(Error::MalformedWord("unexpected end of input".into())),
        }
    }

    fn atom<I: Scalar>(&mut self) -> Result<Generator<I>> {
        self.skip_ws();
        let rest = &self.chars[self.pos..];
        if rest.starts_with(b"pi[") {
            self.pos += 3;
            let sigma = self.int_list()?;
            self.expect(b']')?;
            self.expect(b'(')?;
            let v = self.int_list()?;
            self.expect(b')')?;
            return Ok(Generator::Pi(sigma, v));
        }
        if rest.starts_with(b"xi[") {
            self.pos += 3;
            let k = self.integer()?;
            self.expect(b']')?;
            if k < 1 {
                return Err(Error::MalformedWord("xi index must be >= 1".into()));
            }
            return Ok(Generator::Xi(k as usize));
        }
        if rest.starts_with(b"e[") {
            self.pos += 2;
            let v = self.int_list()?;
            self.expect(b']')?;
            return Ok(Generator::E(v));
        }
        if rest.starts_with(b"f") {
            self.pos += 1;
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(c) if c.is_ascii_digit() => 1,
                _ => {
                    return Err(Error::MalformedWord(format!(
                        "expected sign or index after 'f' at byte {}",
                        self.pos
                    )))
                }
            };
            let index = self.integer()?;
            if index < 1 {
                return Err(Error::MalformedWord("generator index must be >= 1".into()));
            }
            return Ok(Generator::F {
                sign,
                index: index as usize,
            });
        }
        if rest.starts_with(b"h") {
            self.pos += 1;
            let index = self.integer()?;
            if index < 1 {
                return Err(Error::MalformedWord("generator index must be >= 1".into()));
            }
            return Ok(Generator::H {
                index: index as usize,
            });
        }
        Err(Error::MalformedWord(format!(
            "unrecognized atom at byte {}",
            self.pos
        )))
    }
}

/// Verify (G1), (G2), (G3) exhaustively and (G∞) for all left-normed
/// words of length at most `max_len`.
pub fn check_serre<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    max_len: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "serre",
        q.to_json(),
        g.to_json(),
        ReportParams::new(0).with_max_len(max_len),
    );
    let n = q.n();
    let h_images: Vec<GradedElement<I>> = (1..=n)
        .map(|i| generator_image(q, g, &Generator::H { index: i }).unwrap())
        .collect();
    let f_image = |sign: i8, index: usize| -> GradedElement<I> {
        generator_image(q, g, &Generator::F { sign, index }).unwrap()
    };

    // (G1): [h_i, h_j] = 0.
    let mut witness = None;
    'g1: for i in 0..n {
        for j in 0..n {
            let b = bracket(q, g, &h_images[i], &h_images[j]).unwrap();
            if !b.is_zero() {
                witness = Some(json!({ "i": i + 1, "j": j + 1 }));
                break 'g1;
            }
        }
    }
    report.push_outcome("G1", witness);

    // (G2): [h_i, f_{εj}] = ε C_ij f_{εj}.
    let mut witness = None;
    'g2: for (i, h_i) in h_images.iter().enumerate() {
        for j in 0..n {
            for sign in [1i8, -1] {
                let f = f_image(sign, j + 1);
                let lhs = bracket(q, g, h_i, &f).unwrap();
                let c_ij = q.symmetric_matrix().at(i, j).clone();
                let scalar = if sign < 0 {
                    -Ratio::from_integer(c_ij)
                } else {
                    Ratio::from_integer(c_ij)
                };
                let rhs = f.scale(&scalar);
                if lhs != rhs {
                    witness = Some(json!({ "i": i + 1, "j": j + 1, "sign": sign }));
                    break 'g2;
                }
            }
        }
    }
    report.push_outcome("G2", witness);

    // (G3): [f_i, f_{-i}] = h_i.
    let mut witness = None;
    for (i, h_i) in h_images.iter().enumerate() {
        let lhs = bracket(q, g, &f_image(1, i + 1), &f_image(-1, i + 1)).unwrap();
        if lhs != *h_i {
            witness = Some(json!({ "i": i + 1 }));
            break;
        }
    }
    report.push_outcome("G3", witness);

    // (G∞): left-normed words with degree outside R evaluate to zero.
    // Words whose partial value is already zero are pruned: bracketing
    // with zero stays zero, so every extension satisfies the relation.
    let mut witness = None;
    let mut words_checked = 0usize;
    let mut stack: Vec<(GradedElement<I>, Vec<I>, usize)> = Vec::new();
    for index in 1..=n {
        for sign in [1i8, -1] {
            let img = f_image(sign, index);
            let mut degree = vec![I::zero(); n];
            degree[index - 1] = if sign < 0 { -I::one() } else { I::one() };
            stack.push((img, degree, 1));
        }
    }
    'ginf: while let Some((value, degree, len)) = stack.pop() {
        if len >= 2 && classify(q, &degree).expect("degree has length n").is_none() {
            words_checked += 1;
            if !value.is_zero() {
                witness = Some(json!({
                    "degree": crate::unitform::vec_json(&degree),
                    "length": len,
                    "value": value.to_json(),
                }));
                break 'ginf;
            }
        }
        if len == max_len || value.is_zero() {
            continue;
        }
        for index in 1..=n {
            for sign in [1i8, -1] {
                let img = f_image(sign, index);
                let extended = bracket(q, g, &img, &value).unwrap();
                let mut new_degree = degree.clone();
                let step = if sign < 0 { -I::one() } else { I::one() };
                new_degree[index - 1] = new_degree[index - 1].clone() + step;
                stack.push((extended, new_degree, len + 1));
            }
        }
    }
    report.push(
        "Ginf",
        witness.is_none(),
        witness.or_else(|| Some(json!({ "words_checked": words_checked }))),
    );
    report
}

/// Spanning sweep: iterated brackets of the generator images reach every
/// root space `E_alpha`, `alpha != 0`, of the height truncation, together
/// with the vector part `pi_0(c_1)..pi_0(c_n)` of `E_0` — and nothing in
/// the dual directions.
pub fn check_generation<I: Scalar>(
    q: &UnitForm<I>,
    g: &Gauge<I>,
    height: usize,
) -> VerificationReport {
    let mut report = VerificationReport::new(
        "generation",
        q.to_json(),
        g.to_json(),
        ReportParams::new(height),
    );
    let n = q.n();
    let nu = g.corank();

    // Per-degree echelon spans of reached coordinates.
    let mut spans: BTreeMap<Vec<I>, Vec<Vec<Rat<I>>>> = BTreeMap::new();
    let mut frontier: Vec<GradedElement<I>> = Vec::new();
    let mut generators: Vec<GradedElement<I>> = Vec::new();
    for index in 1..=n {
        for sign in [1i8, -1] {
            generators.push(generator_image(q, g, &Generator::F { sign, index }).unwrap());
        }
        generators.push(generator_image(q, g, &Generator::H { index }).unwrap());
    }
    for gen in &generators {
        for (degree, comp) in gen.terms() {
            let coords = component_coords(comp, n, nu);
            if echelon_insert(spans.entry(degree.clone()).or_default(), coords) {
                frontier.push(gen.clone());
            }
        }
    }

    let depth_limit = height * n;
    for _ in 0..depth_limit {
        if frontier.is_empty() {
            break;
        }
        let mut next = Vec::new();
        for x in &frontier {
            for gen in &generators {
                let y = bracket(q, g, gen, x).unwrap();
                if y.is_zero() {
                    continue;
                }
                let mut fresh = false;
                for (degree, comp) in y.terms() {
                    // Only track degrees near the truncation.
                    if degree.iter().any(|c| c.abs() > int((height + 1) as i64)) {
                        continue;
                    }
                    let coords = component_coords(comp, n, nu);
                    if echelon_insert(spans.entry(degree.clone()).or_default(), coords) {
                        fresh = true;
                    }
                }
                if fresh {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }

    let mut missing: Vec<Value> = Vec::new();
    for root in enumerate_roots(q, height) {
        let expected = match root.kind {
            RootKind::Zero => n, // vector part only; dual directions are not generated
            RootKind::Isotropic => n - nu,
            RootKind::NonIsotropic => 1,
        };
        let got = spans.get(&root.vec).map_or(0, Vec::len);
        if got != expected {
            missing.push(json!({
                "degree": crate::unitform::vec_json(&root.vec),
                "generated": got,
                "expected": expected,
            }));
        }
    }
    // The dual directions of E_0 must stay out of reach.
    let zero_degree = vec![I::zero(); n];
    if let Some(rows) = spans.get(&zero_degree) {
        for row in rows {
            if row[n..].iter().any(|c| !c.is_zero()) {
                missing.push(json!({ "degree": "0", "unexpected": "dual direction generated" }));
            }
        }
    }
    report.push(
        "generation/coverage",
        missing.is_empty(),
        (!missing.is_empty()).then(|| json!({ "missing": missing })),
    );
    report
}

fn component_coords<I: Scalar>(comp: &Component<I>, n: usize, nu: usize) -> Vec<Rat<I>> {
    match comp {
        Component::NonIso(c) => vec![c.clone()],
        Component::Iso(v) => v.clone(),
        Component::Zero { vec, dual } => {
            let mut out = Vec::with_capacity(n + nu);
            out.extend(vec.iter().cloned());
            out.extend(dual.iter().cloned());
            out
        }
    }
}

/// Insert a vector into an echelon basis; returns true when independent.
fn echelon_insert<I: Scalar>(rows: &mut Vec<Vec<Rat<I>>>, mut v: Vec<Rat<I>>) -> bool {
    for row in rows.iter() {
        let pivot = row
            .iter()
            .position(|c| !c.is_zero())
            .expect("echelon rows are nonzero");
        if !v[pivot].is_zero() {
            let factor = v[pivot].clone() / row[pivot].clone();
            for (a, b) in v.iter_mut().zip(row) {
                *a = a.clone() - factor.clone() * b.clone();
            }
        }
    }
    if v.iter().all(Zero::is_zero) {
        return false;
    }
    rows.push(v);
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gauge::canonical_gauge;

    fn word(s: &str) -> BracketWord<i64> {
        parse_word(s).unwrap()
    }

    #[test]
    fn parser_accepts_grammar() {
        assert_eq!(
            word("f+1"),
            BracketWord::Leaf(Generator::F { sign: 1, index: 1 })
        );
        assert_eq!(
            word("f-2"),
            BracketWord::Leaf(Generator::F { sign: -1, index: 2 })
        );
        assert_eq!(word("h3"), BracketWord::Leaf(Generator::H { index: 3 }));
        assert_eq!(
            word("e[1,0]"),
            BracketWord::Leaf(Generator::E(vec![1, 0]))
        );
        assert_eq!(
            word("pi[1,1](1,0)"),
            BracketWord::Leaf(Generator::Pi(vec![1, 1], vec![1, 0]))
        );
        assert_eq!(word("xi[1]"), BracketWord::Leaf(Generator::Xi(1)));
        assert_eq!(
            word("[f1, f-1]"),
            BracketWord::Bracket(
                Box::new(BracketWord::Leaf(Generator::F { sign: 1, index: 1 })),
                Box::new(BracketWord::Leaf(Generator::F { sign: -1, index: 1 })),
            )
        );
        // Nested with whitespace.
        let nested = word(" [ f1 , [ f2 , e[-1,0] ] ] ");
        assert!(matches!(nested, BracketWord::Bracket(_, _)));
    }

    #[test]
    fn parser_rejects_malformed_input() {
        for bad in ["", "[f1", "[f1 f2]", "g1", "f0", "h0", "xi[0]", "f1]", "e[]"] {
            assert!(
                matches!(parse_word::<i64>(bad), Err(Error::MalformedWord(_))),
                "{bad} parsed"
            );
        }
    }

    #[test]
    fn generator_images_match_construction() {
        let q = fixtures::a_form::<i64>(2);
        let g = canonical_gauge(&q);
        let h1 = generator_image(&q, &g, &Generator::H { index: 1 }).unwrap();
        assert_eq!(h1, GradedElement::pi0(&q, &g, &[1, 0]).unwrap());
        let f_neg2 = generator_image(&q, &g, &Generator::F { sign: -1, index: 2 }).unwrap();
        assert_eq!(f_neg2, GradedElement::e(&q, &g, &[0, -1]).unwrap().neg());
        let f1 = generator_image(&q, &g, &Generator::F { sign: 1, index: 1 }).unwrap();
        assert_eq!(f1, GradedElement::e(&q, &g, &[1, 0]).unwrap());
        assert!(matches!(
            generator_image(&q, &g, &Generator::H { index: 5 }),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn eval_word_examples() {
        let q = fixtures::a_form::<i64>(2);
        let g = canonical_gauge(&q);
        // [f1, f-1] = h1.
        let lhs = eval_word(&q, &g, &word("[f1, f-1]")).unwrap();
        let h1 = generator_image(&q, &g, &Generator::H { index: 1 }).unwrap();
        assert_eq!(lhs, h1);
        // [f1, [f1, f2]] has degree 2c1 + c2 outside R, so it vanishes.
        assert!(eval_word(&q, &g, &word("[f1, [f1, f2]]")).unwrap().is_zero());
        // [h1, h2] = 0.
        assert!(eval_word(&q, &g, &word("[h1, h2]")).unwrap().is_zero());
    }

    #[test]
    fn eval_word_degree_consistency() {
        // deg(eval_word) is the sum of leaf degrees unless the value is 0.
        let q = fixtures::kronecker_form::<i64>();
        let g = canonical_gauge(&q);
        let words = [
            "[f1, f2]",
            "[f1, [f1, f2]]",
            "[f2, [f1, f2]]",
            "[xi[1], e[0,1]]",
            "[pi[1,1](1,0), pi[-1,-1](0,1)]",
            "[e[1,0], [f1, f-2]]",
        ];
        for s in words {
            let w = word(s);
            let value = eval_word(&q, &g, &w).unwrap();
            let expected_degree = w.degree(2).unwrap();
            for d in value.support() {
                assert_eq!(d, expected_degree, "word {s}");
            }
        }
    }

    #[test]
    fn eval_word_error_paths() {
        let q = fixtures::a_form::<i64>(2);
        let g = canonical_gauge(&q);
        // e[] with a non-unit vector.
        assert!(matches!(
            eval_word(&q, &g, &word("e[2,0]")),
            Err(Error::NotARoot { .. })
        ));
        // pi with a non-isotropic degree.
        assert!(matches!(
            eval_word(&q, &g, &word("pi[1,0](1,0)")),
            Err(Error::MalformedWord(_))
        ));
        // xi out of range for a corank-0 form.
        assert!(matches!(
            eval_word(&q, &g, &word("xi[1]")),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            eval_word(&q, &g, &word("f5")),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn g2_instance_reads_cartan_entry() {
        let q = fixtures::a_form::<i64>(2);
        let g = canonical_gauge(&q);
        // [h1, f2] = C_12 f2-image = -f2-image.
        let lhs = eval_word(&q, &g, &word("[h1, f2]")).unwrap();
        let f2 = generator_image(&q, &g, &Generator::F { sign: 1, index: 2 }).unwrap();
        assert_eq!(lhs, f2.scale(&crate::num::rat(-1)));
    }

    #[test]
    fn serre_suite_passes() {
        for q in fixtures::suite_forms::<i64>() {
            let g = canonical_gauge(&q);
            let report = check_serre(&q, &g, 4);
            assert!(
                report.all_passed(),
                "failures: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn ginf_counts_words_on_kronecker() {
        let q = fixtures::kronecker_form::<i64>();
        let g = canonical_gauge(&q);
        let report = check_serre(&q, &g, 5);
        assert!(report.all_passed());
        let ginf = report.results.iter().find(|r| r.check == "Ginf").unwrap();
        let checked = ginf.witness.as_ref().unwrap()["words_checked"]
            .as_u64()
            .unwrap();
        assert!(checked > 0);
    }

    #[test]
    fn generation_sweep_covers_truncations() {
        for q in fixtures::suite_forms::<i64>() {
            let g = canonical_gauge(&q);
            let report = check_generation(&q, &g, 2);
            assert!(
                report.all_passed(),
                "failures: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
        // Multi-dimensional isotropic spaces (n - nu = 2).
        let q = fixtures::affine_a2_form::<i64>();
        let g = canonical_gauge(&q);
        let report = check_generation(&q, &g, 2);
        assert!(
            report.all_passed(),
            "failures: {:?}",
            report.failures().collect::<Vec<_>>()
        );
    }
}
