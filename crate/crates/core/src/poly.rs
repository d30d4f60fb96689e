//! Sparse multivariate polynomials in the variable families x, y, z,
//! with exact dyadic-rational coefficients.
//!
//! Every coefficient is an arbitrary-precision integer divided by a
//! power of two. The classical-type computations stay integral; the
//! type B rescaling is the only source of denominators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Variable families. The order `X < Y < Z` fixes the canonical term
/// order used for display and serialization.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    X,
    Y,
    Z,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::X => 'x',
            Family::Y => 'y',
            Family::Z => 'z',
        }
    }
}

/// A single indexed variable such as `x_3`. Indices start at 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct VariableId {
    pub family: Family,
    pub index: u32,
}

impl VariableId {
    pub fn new(family: Family, index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        VariableId { family, index }
    }

    pub fn x(index: u32) -> Self {
        Self::new(Family::X, index)
    }

    pub fn y(index: u32) -> Self {
        Self::new(Family::Y, index)
    }

    pub fn z(index: u32) -> Self {
        Self::new(Family::Z, index)
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.index)
    }
}

/// A monomial, stored as a sorted list of `(variable, exponent)` pairs
/// with all exponents positive.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Monomial {
    factors: Vec<(VariableId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn variable(v: VariableId) -> Self {
        Monomial { factors: alloc::vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary pairs, merging repeats and
    /// dropping zero exponents.
    pub fn from_factors(pairs: impl IntoIterator<Item = (VariableId, u32)>) -> Self {
        let mut map: BTreeMap<VariableId, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial { factors: map.into_iter().collect() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(VariableId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.factors
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(
            self.factors.iter().copied().chain(other.factors.iter().copied()),
        )
    }
}

// Canonical order: total degree first, then the factor lists compared
// lexicographically (variable by family then index, then exponent).
impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.factors {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

/// An exact rational whose denominator is a power of two, normalized so
/// the numerator is odd (or zero with denominator one).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dyadic {
    num: BigInt,
    log_den: u32,
}

impl Dyadic {
    fn normalized(num: BigInt, log_den: u32) -> Self {
        if num.is_zero() {
            return Dyadic { num, log_den: 0 };
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(log_den as u64) as u32;
        Dyadic { num: num >> tz, log_den: log_den - tz }
    }

    pub fn new(num: BigInt, log_den: u32) -> Self {
        Self::normalized(num, log_den)
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), log_den: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), log_den: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic { num: BigInt::from(n), log_den: 0 }
    }

    /// `2^e` for any integer `e`.
    pub fn pow2(e: i64) -> Self {
        if e >= 0 {
            Dyadic { num: BigInt::one() << (e as u64), log_den: 0 }
        } else {
            Dyadic { num: BigInt::one(), log_den: (-e) as u32 }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.log_den == 0 && self.num.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.log_den == 0
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn log_denominator(&self) -> u32 {
        self.log_den
    }

    pub fn denominator(&self) -> BigInt {
        BigInt::one() << (self.log_den as u64)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let ld = self.log_den.max(other.log_den);
        let a = self.num.clone() << ((ld - self.log_den) as u64);
        let b = other.num.clone() << ((ld - other.log_den) as u64);
        Dyadic::normalized(a + b, ld)
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::normalized(&self.num * &other.num, self.log_den + other.log_den)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { num: -self.num.clone(), log_den: self.log_den }
    }

    pub fn scale_pow2(&self, e: i64) -> Dyadic {
        if e >= 0 {
            Dyadic::normalized(self.num.clone() << (e as u64), self.log_den)
        } else {
            Dyadic::normalized(self.num.clone(), self.log_den + (-e) as u32)
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.denominator())
        }
    }
}

/// A sparse polynomial: a map from monomials to nonzero dyadic
/// coefficients, iterated in canonical term order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Dyadic>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(Dyadic::one())
    }

    pub fn constant(c: Dyadic) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(Dyadic::from_int(n))
    }

    pub fn variable(v: VariableId) -> Self {
        Polynomial::from_term(Monomial::variable(v), Dyadic::one())
    }

    pub fn x(index: u32) -> Self {
        Polynomial::variable(VariableId::x(index))
    }

    pub fn y(index: u32) -> Self {
        Polynomial::variable(VariableId::y(index))
    }

    pub fn z(index: u32) -> Self {
        Polynomial::variable(VariableId::z(index))
    }

    pub fn from_term(m: Monomial, c: Dyadic) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Dyadic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Dyadic {
        self.terms.get(m).cloned().unwrap_or_else(Dyadic::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Adds a single term, pruning a zero result.
    pub fn add_term(&mut self, m: Monomial, c: Dyadic) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_coeff(&self, c: &Dyadic) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Multiplies every coefficient by `2^e`.
    pub fn scale_pow2(&self, e: i64) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.scale_pow2(e)))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution. Variables absent from the map are left
    /// untouched.
    pub fn substitute(&self, map: &BTreeMap<VariableId, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(v, e) in m.factors() {
                let base = match map.get(&v) {
                    Some(p) => p.clone(),
                    None => Polynomial::variable(v),
                };
                acc = acc.mul(&base.pow(e));
            }
            out = out.add(&acc);
        }
        out
    }

    /// All variables occurring in the polynomial.
    pub fn variables(&self) -> BTreeSet<VariableId> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn uses_family(&self, family: Family) -> bool {
        self.variables().iter().any(|v| v.family == family)
    }

    /// Sets every variable of the given family to zero.
    pub fn zero_family(&self, family: Family) -> Polynomial {
        let map: BTreeMap<VariableId, Polynomial> = self
            .variables()
            .into_iter()
            .filter(|v| v.family == family)
            .map(|v| (v, Polynomial::zero()))
            .collect();
        self.substitute(&map)
    }

    pub fn all_integer_coefficients(&self) -> bool {
        self.terms.values().all(Dyadic::is_integer)
    }

    /// Internal consistency: no zero coefficients, no zero exponents.
    pub fn check_invariants(&self) -> bool {
        self.terms.iter().all(|(m, c)| {
            !c.is_zero() && m.factors().iter().all(|&(_, e)| e > 0)
        })
    }
}

impl core::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl core::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl core::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl core::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { c.neg() } else { c.clone() };
            let coeff_str: String = abs.to_string();
            if m.is_one() {
                write!(f, "{}", coeff_str)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", coeff_str, m)?;
            }
        }
        Ok(())
    }
}
