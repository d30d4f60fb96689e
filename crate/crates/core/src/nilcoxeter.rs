//! NilCoxeter algebras with polynomial coefficients.
//!
//! Multiplication never rewrites relations symbolically: the product of
//! basis elements is computed through the length criterion
//! `xi_u xi_g = xi_{u s_g}` when the length goes up, and zero otherwise.
//! Schubert polynomials and Stanley functions are coefficients of basis
//! elements in ordered products of series factors `(1 +- t xi_g)`,
//! accumulated left to right in definition order.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::poly::Polynomial;
use crate::weyl::{Generator, GroupTag, SignedPermutation, WeylError};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NilCoxeterError {
    /// Element tagged for a different group than the series.
    TagMismatch,
    /// The element does not fit in the requested rank.
    RankTooSmall,
    /// Generator invalid for the tag.
    InvalidGenerator,
}

impl fmt::Display for NilCoxeterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            NilCoxeterError::TagMismatch => "element belongs to a different group",
            NilCoxeterError::RankTooSmall => "rank n is too small for the element",
            NilCoxeterError::InvalidGenerator => "generator invalid for this group",
        };
        write!(f, "{}", msg)
    }
}

impl From<WeylError> for NilCoxeterError {
    fn from(_: WeylError) -> Self {
        NilCoxeterError::InvalidGenerator
    }
}

/// A finite linear combination of basis elements `xi_w` with polynomial
/// coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NilCoxeterElement {
    tag: GroupTag,
    terms: BTreeMap<SignedPermutation, Polynomial>,
}

impl NilCoxeterElement {
    /// The multiplicative unit `xi_id`.
    pub fn one(tag: GroupTag) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SignedPermutation::identity(tag), Polynomial::one());
        NilCoxeterElement { tag, terms }
    }

    /// Builds an element from explicit terms, dropping zero coefficients.
    pub fn from_terms(
        tag: GroupTag,
        terms: impl IntoIterator<Item = (SignedPermutation, Polynomial)>,
    ) -> Result<Self, NilCoxeterError> {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            if w.tag() != tag {
                return Err(NilCoxeterError::TagMismatch);
            }
            if !c.is_zero() {
                let entry = map.entry(w).or_insert_with(Polynomial::zero);
                *entry = entry.add(&c);
            }
        }
        map.retain(|_, p: &mut Polynomial| !p.is_zero());
        Ok(NilCoxeterElement { tag, terms: map })
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn terms(&self) -> &BTreeMap<SignedPermutation, Polynomial> {
        &self.terms
    }

    /// The coefficient of `xi_w` (zero if absent).
    pub fn extract(&self, w: &SignedPermutation) -> Polynomial {
        self.terms.get(w).cloned().unwrap_or_else(Polynomial::zero)
    }

    /// Right multiplication by `(1 + sign * t * xi_g)`.
    pub fn multiply_factor(
        &self,
        g: Generator,
        t: &Polynomial,
        sign: Sign,
    ) -> Result<Self, NilCoxeterError> {
        self.multiply_factor_filtered(g, t, sign, &|_| true)
    }

    fn multiply_factor_filtered(
        &self,
        g: Generator,
        t: &Polynomial,
        sign: Sign,
        keep: &dyn Fn(&SignedPermutation) -> bool,
    ) -> Result<Self, NilCoxeterError> {
        if !g.valid_for(self.tag) {
            return Err(NilCoxeterError::InvalidGenerator);
        }
        let signed_t = match sign {
            Sign::Plus => t.clone(),
            Sign::Minus => t.neg(),
        };
        let mut out = self.terms.clone();
        for (u, c) in &self.terms {
            if !u.has_right_descent(g) {
                let v = u.right_multiply(g)?;
                if keep(&v) {
                    let add = c.mul(&signed_t);
                    if !add.is_zero() {
                        let entry = out.entry(v).or_insert_with(Polynomial::zero);
                        *entry = entry.add(&add);
                        if entry.is_zero() {
                            // keep the map free of zero coefficients
                        }
                    }
                }
            }
        }
        out.retain(|_, p| !p.is_zero());
        Ok(NilCoxeterElement { tag: self.tag, terms: out })
    }
}

type Factor = (Generator, Polynomial, Sign);

fn apply_factors(
    tag: GroupTag,
    factors: &[Factor],
    keep: &dyn Fn(&SignedPermutation) -> bool,
) -> Result<NilCoxeterElement, NilCoxeterError> {
    let mut acc = NilCoxeterElement::one(tag);
    for (g, t, sign) in factors {
        acc = acc.multiply_factor_filtered(*g, t, *sign, keep)?;
    }
    Ok(acc)
}

/// `A_i(t) = (1 + t xi_{n-1})(1 + t xi_{n-2}) ... (1 + t xi_i)`.
pub fn series_a(
    tag: GroupTag,
    i: u32,
    t: &Polynomial,
    n: usize,
) -> Result<NilCoxeterElement, NilCoxeterError> {
    debug_assert!(i >= 1);
    let factors: Vec<Factor> = (i..n as u32)
        .rev()
        .map(|j| (Generator::S(j), t.clone(), Sign::Plus))
        .collect();
    apply_factors(tag, &factors, &|_| true)
}

/// `A~_i(t) = (1 - t xi_i)(1 - t xi_{i+1}) ... (1 - t xi_{n-1})`.
pub fn series_a_tilde(
    tag: GroupTag,
    i: u32,
    t: &Polynomial,
    n: usize,
) -> Result<NilCoxeterElement, NilCoxeterError> {
    debug_assert!(i >= 1);
    let factors: Vec<Factor> = (i..n as u32)
        .map(|j| (Generator::S(j), t.clone(), Sign::Minus))
        .collect();
    apply_factors(tag, &factors, &|_| true)
}

fn c_factor_block(t: &Polynomial, n: usize) -> Vec<Factor> {
    let mut out = Vec::new();
    for j in (0..n as u32).rev() {
        out.push((Generator::S(j), t.clone(), Sign::Plus));
    }
    for j in 0..n as u32 {
        out.push((Generator::S(j), t.clone(), Sign::Plus));
    }
    out
}

fn d_factor_block(t: &Polynomial, n: usize) -> Vec<Factor> {
    let mut out = Vec::new();
    if n >= 2 {
        for j in (1..n as u32).rev() {
            out.push((Generator::S(j), t.clone(), Sign::Plus));
        }
        out.push((Generator::Box, t.clone(), Sign::Plus));
        for j in 2..n as u32 {
            out.push((Generator::S(j), t.clone(), Sign::Plus));
        }
    }
    out
}

/// `C(t) = (1+t xi_{n-1})...(1+t xi_0)(1+t xi_0)...(1+t xi_{n-1})`.
pub fn series_c(t: &Polynomial, n: usize) -> NilCoxeterElement {
    apply_factors(GroupTag::TypeBC, &c_factor_block(t, n), &|_| true)
        .expect("generators valid for the tag")
}

/// `D(t) = (1+t xi_{n-1})...(1+t xi_1)(1+t xi_box)(1+t xi_2)...(1+t xi_{n-1})`.
pub fn series_d(t: &Polynomial, n: usize) -> NilCoxeterElement {
    apply_factors(GroupTag::TypeD, &d_factor_block(t, n), &|_| true)
        .expect("generators valid for the tag")
}

fn y_factors(n: usize) -> Vec<Factor> {
    let mut out = Vec::new();
    for p in (1..n as u32).rev() {
        for j in p..n as u32 {
            out.push((Generator::S(j), Polynomial::y(p), Sign::Minus));
        }
    }
    out
}

fn x_factors(n: usize) -> Vec<Factor> {
    let mut out = Vec::new();
    for p in 1..n as u32 {
        for j in (p..n as u32).rev() {
            out.push((Generator::S(j), Polynomial::x(p), Sign::Plus));
        }
    }
    out
}

fn z_blocks(n: usize, m: usize, block: fn(&Polynomial, usize) -> Vec<Factor>) -> Vec<Factor> {
    let mut out = Vec::new();
    for j in 1..=m as u32 {
        out.extend(block(&Polynomial::z(j), n));
    }
    out
}

/// Keeps only left factors of the target, which is sound because left
/// factors of left factors are left factors.
fn prefix_filter(target: &SignedPermutation) -> impl Fn(&SignedPermutation) -> bool + '_ {
    let len = target.length();
    let memo: RefCell<BTreeMap<SignedPermutation, bool>> = RefCell::new(BTreeMap::new());
    move |u: &SignedPermutation| {
        if let Some(&hit) = memo.borrow().get(u) {
            return hit;
        }
        let ul = u.length();
        let ok = ul <= len && ul + u.inverse().compose(target).length() == len;
        memo.borrow_mut().insert(u.clone(), ok);
        ok
    }
}

fn check_element(
    w: &SignedPermutation,
    tag: GroupTag,
    n: usize,
) -> Result<(), NilCoxeterError> {
    if w.tag() != tag {
        return Err(NilCoxeterError::TagMismatch);
    }
    if !w.fits_rank(n) {
        return Err(NilCoxeterError::RankTooSmall);
    }
    Ok(())
}

/// The full ordered product defining the type A polynomials at rank n.
pub fn schubert_series_a(n: usize) -> NilCoxeterElement {
    let mut factors = y_factors(n);
    factors.extend(x_factors(n));
    apply_factors(GroupTag::TypeA, &factors, &|_| true).expect("valid factors")
}

/// The type A double Schubert polynomial of a permutation in `S_n`.
pub fn schubert_a(w: &SignedPermutation, n: usize) -> Result<Polynomial, NilCoxeterError> {
    check_element(w, GroupTag::TypeA, n)?;
    let mut factors = y_factors(n);
    factors.extend(x_factors(n));
    let keep = prefix_filter(w);
    Ok(apply_factors(GroupTag::TypeA, &factors, &keep)?.extract(w))
}

/// The type C double Schubert polynomial with z-variables truncated to
/// `z_1, ..., z_m`.
pub fn schubert_c(
    w: &SignedPermutation,
    n: usize,
    m: usize,
) -> Result<Polynomial, NilCoxeterError> {
    check_element(w, GroupTag::TypeBC, n)?;
    let mut factors = y_factors(n);
    factors.extend(z_blocks(n, m, c_factor_block));
    factors.extend(x_factors(n));
    let keep = prefix_filter(w);
    Ok(apply_factors(GroupTag::TypeBC, &factors, &keep)?.extract(w))
}

/// The type B polynomial: the type C one rescaled by `2^{-s(w)}`.
pub fn schubert_b(
    w: &SignedPermutation,
    n: usize,
    m: usize,
) -> Result<Polynomial, NilCoxeterError> {
    let c = schubert_c(w, n, m)?;
    Ok(c.scale_pow2(-(w.neg_count() as i64)))
}

/// The type D double Schubert polynomial with z-variables truncated to
/// `z_1, ..., z_m`.
pub fn schubert_d(
    w: &SignedPermutation,
    n: usize,
    m: usize,
) -> Result<Polynomial, NilCoxeterError> {
    check_element(w, GroupTag::TypeD, n)?;
    let mut factors = y_factors(n);
    factors.extend(z_blocks(n, m, d_factor_block));
    factors.extend(x_factors(n));
    let keep = prefix_filter(w);
    Ok(apply_factors(GroupTag::TypeD, &factors, &keep)?.extract(w))
}

/// The type C Stanley function `<C(z_1)...C(z_m), w>`.
pub fn stanley_f(w: &SignedPermutation, m: usize) -> Result<Polynomial, NilCoxeterError> {
    if w.tag() != GroupTag::TypeBC {
        return Err(NilCoxeterError::TagMismatch);
    }
    let n = w.min_rank().max(1);
    let factors = z_blocks(n, m, c_factor_block);
    let keep = prefix_filter(w);
    Ok(apply_factors(GroupTag::TypeBC, &factors, &keep)?.extract(w))
}

/// The type D Stanley function `<D(z_1)...D(z_m), w>`.
pub fn stanley_e(w: &SignedPermutation, m: usize) -> Result<Polynomial, NilCoxeterError> {
    if w.tag() != GroupTag::TypeD {
        return Err(NilCoxeterError::TagMismatch);
    }
    let n = w.min_rank().max(1);
    let factors = z_blocks(n, m, d_factor_block);
    let keep = prefix_filter(w);
    Ok(apply_factors(GroupTag::TypeD, &factors, &keep)?.extract(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::evaluate_word;
    use alloc::vec;

    fn s(letters: &[u32], tag: GroupTag) -> SignedPermutation {
        let word: Vec<Generator> = letters.iter().map(|&i| Generator::S(i)).collect();
        evaluate_word(&word, tag).unwrap()
    }

    #[test]
    fn factor_expansion_small() {
        // (1 - y_1 xi_1)(1 + x_1 xi_1) = xi_id + (x_1 - y_1) xi_{s_1}
        let one = NilCoxeterElement::one(GroupTag::TypeA);
        let a = one
            .multiply_factor(Generator::S(1), &Polynomial::y(1), Sign::Minus)
            .unwrap()
            .multiply_factor(Generator::S(1), &Polynomial::x(1), Sign::Plus)
            .unwrap();
        let s1 = s(&[1], GroupTag::TypeA);
        assert_eq!(a.extract(&s1), Polynomial::x(1).sub(&Polynomial::y(1)));
        assert_eq!(
            a.extract(&SignedPermutation::identity(GroupTag::TypeA)),
            Polynomial::one()
        );
        // xi_1 (1 + t xi_1) = xi_1 since xi_1^2 = 0
        let xi1 =
            NilCoxeterElement::from_terms(GroupTag::TypeA, [(s1.clone(), Polynomial::one())])
                .unwrap();
        let again = xi1
            .multiply_factor(Generator::S(1), &Polynomial::x(2), Sign::Plus)
            .unwrap();
        assert_eq!(again, xi1);
    }

    #[test]
    fn series_c_rank_one() {
        let c = series_c(&Polynomial::z(1), 1);
        let s0 = SignedPermutation::from_window(vec![-1], GroupTag::TypeBC).unwrap();
        assert_eq!(c.extract(&s0), Polynomial::z(1).scale_pow2(1));
        assert_eq!(
            c.extract(&SignedPermutation::identity(GroupTag::TypeBC)),
            Polynomial::one()
        );
    }

    #[test]
    fn series_d_rank_two() {
        let d = series_d(&Polynomial::z(1), 2);
        let sbox = SignedPermutation::from_window(vec![-2, -1], GroupTag::TypeD).unwrap();
        assert_eq!(d.extract(&sbox), Polynomial::z(1));
    }

    #[test]
    fn schubert_a_simple_reflection() {
        let s1 = s(&[1], GroupTag::TypeA);
        assert_eq!(
            schubert_a(&s1, 2).unwrap(),
            Polynomial::x(1).sub(&Polynomial::y(1))
        );
        let id = SignedPermutation::identity(GroupTag::TypeA);
        assert_eq!(schubert_a(&id, 3).unwrap(), Polynomial::one());
    }

    #[test]
    fn schubert_c_and_b_sign_change() {
        let s0 = SignedPermutation::from_window(vec![-1], GroupTag::TypeBC).unwrap();
        assert_eq!(
            schubert_c(&s0, 1, 1).unwrap(),
            Polynomial::z(1).scale_pow2(1)
        );
        assert_eq!(schubert_b(&s0, 1, 1).unwrap(), Polynomial::z(1));
        let id = SignedPermutation::identity(GroupTag::TypeBC);
        assert_eq!(schubert_c(&id, 1, 2).unwrap(), Polynomial::one());
    }

    #[test]
    fn stanley_f_simple() {
        let id = SignedPermutation::identity(GroupTag::TypeBC);
        assert_eq!(stanley_f(&id, 2).unwrap(), Polynomial::one());
        let s0 = SignedPermutation::from_window(vec![-1], GroupTag::TypeBC).unwrap();
        assert_eq!(stanley_f(&s0, 1).unwrap(), Polynomial::z(1).scale_pow2(1));
    }

    #[test]
    fn rank_too_small_is_an_error() {
        let w = s(&[1, 2], GroupTag::TypeA);
        assert_eq!(schubert_a(&w, 2), Err(NilCoxeterError::RankTooSmall));
    }

    #[test]
    fn observed_relations() {
        // braid and commutation hold through the length-based product:
        // evaluating both orderings of a relation lands on the same basis
        // element with the same length.
        let lhs = evaluate_word(
            &[
                Generator::S(0),
                Generator::S(1),
                Generator::S(0),
                Generator::S(1),
            ],
            GroupTag::TypeBC,
        )
        .unwrap();
        let rhs = evaluate_word(
            &[
                Generator::S(1),
                Generator::S(0),
                Generator::S(1),
                Generator::S(0),
            ],
            GroupTag::TypeBC,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.length(), 4);
        let b2 = evaluate_word(
            &[Generator::Box, Generator::S(2), Generator::Box],
            GroupTag::TypeD,
        )
        .unwrap();
        let b2r = evaluate_word(
            &[Generator::S(2), Generator::Box, Generator::S(2)],
            GroupTag::TypeD,
        )
        .unwrap();
        assert_eq!(b2, b2r);
        assert_eq!(b2.length(), 3);
        let bc = evaluate_word(&[Generator::Box, Generator::S(1)], GroupTag::TypeD).unwrap();
        let cb = evaluate_word(&[Generator::S(1), Generator::Box], GroupTag::TypeD).unwrap();
        assert_eq!(bc, cb);
    }

    #[test]
    fn y_free_part_matches_zero_substitution() {
        // extraction from C(Z) A(x) alone equals setting y = 0 afterwards
        let w = SignedPermutation::from_window(vec![3, -2, 1], GroupTag::TypeBC).unwrap();
        let full = schubert_c(&w, 3, 2).unwrap();
        let n = 3;
        let mut factors = z_blocks(n, 2, c_factor_block);
        factors.extend(x_factors(n));
        let keep = prefix_filter(&w);
        let no_y = apply_factors(GroupTag::TypeBC, &factors, &keep)
            .unwrap()
            .extract(&w);
        assert_eq!(full.zero_family(crate::poly::Family::Y), no_y);
    }
}
