//! Signed permutations and word combinatorics for the symmetric group,
//! the hyperoctahedral group, and its even subgroup.
//!
//! Elements live in the direct limits: windows auto-extend with fixed
//! points on multiplication and are stored with trailing fixed points
//! stripped, so equality compares stable representatives.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Which group a window lives in: `S_n` (TypeA), the full signed
/// permutation group `W_n` (TypeBC), or its index-two even subgroup
/// (TypeD).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum GroupTag {
    TypeA,
    TypeBC,
    TypeD,
}

/// A simple reflection. `S(i)` for `i >= 1` is the transposition of
/// positions i, i+1; `S(0)` is the sign change on position 1 (types B/C
/// only); `Box` is the type D generator s_0 s_1 s_0.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Generator {
    Box,
    S(u32),
}

impl Generator {
    /// Rank in the canonical generator order `Box < 0 < 1 < 2 < ...`.
    pub fn rank(self) -> i64 {
        match self {
            Generator::Box => -1,
            Generator::S(i) => i as i64,
        }
    }

    pub fn valid_for(self, tag: GroupTag) -> bool {
        match self {
            Generator::Box => tag == GroupTag::TypeD,
            Generator::S(0) => tag == GroupTag::TypeBC,
            Generator::S(_) => true,
        }
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Box => write!(f, "B"),
            Generator::S(i) => write!(f, "{}", i),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeylError {
    /// Window entries are not a signed arrangement of 1..n.
    InvalidWindow,
    /// Window violates the tag (negatives in type A, odd sign count in
    /// type D).
    NotInGroup,
    /// Generator not defined for the element's tag.
    InvalidGenerator,
    /// Operands carry different tags.
    TagMismatch,
    /// The element does not fit in the requested rank.
    WindowTooLarge,
    /// Malformed text input.
    Parse,
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            WeylError::InvalidWindow => "window is not a signed arrangement of 1..n",
            WeylError::NotInGroup => "window violates the group constraint for its tag",
            WeylError::InvalidGenerator => "generator is not defined for this group",
            WeylError::TagMismatch => "operands belong to different groups",
            WeylError::WindowTooLarge => "element does not fit in the requested rank",
            WeylError::Parse => "malformed element or word",
        };
        write!(f, "{}", msg)
    }
}

fn normalize(mut w: Vec<i32>) -> Vec<i32> {
    while let Some(&last) = w.last() {
        if last == w.len() as i32 {
            w.pop();
        } else {
            break;
        }
    }
    w
}

/// A group element in window notation `(w_1, ..., w_n)`, tagged with the
/// group it belongs to.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
    tag: GroupTag,
}

impl SignedPermutation {
    pub fn identity(tag: GroupTag) -> Self {
        SignedPermutation { window: Vec::new(), tag }
    }

    pub fn from_window(window: Vec<i32>, tag: GroupTag) -> Result<Self, WeylError> {
        let n = window.len();
        let mut seen = alloc::vec![false; n];
        for &v in &window {
            if v == 0 {
                return Err(WeylError::InvalidWindow);
            }
            let a = v.unsigned_abs() as usize;
            if a > n || seen[a - 1] {
                return Err(WeylError::InvalidWindow);
            }
            seen[a - 1] = true;
        }
        let negs = window.iter().filter(|&&v| v < 0).count();
        match tag {
            GroupTag::TypeA if negs > 0 => return Err(WeylError::NotInGroup),
            GroupTag::TypeD if negs % 2 != 0 => return Err(WeylError::NotInGroup),
            _ => {}
        }
        Ok(SignedPermutation { window: normalize(window), tag })
    }

    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    /// Smallest n with the element in the rank-n group.
    pub fn min_rank(&self) -> usize {
        self.window.len()
    }

    pub fn fits_rank(&self, n: usize) -> bool {
        self.window.len() <= n
    }

    /// The image w(i), handling the direct-limit extension (w(i) = i
    /// beyond the window) and w(-i) = -w(i).
    pub fn value(&self, i: i32) -> i32 {
        debug_assert!(i != 0);
        let a = i.unsigned_abs() as usize;
        let v = if a <= self.window.len() { self.window[a - 1] } else { a as i32 };
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn neg_count(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn all_positive(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.window.len();
        let mut inv = alloc::vec![0i32; n];
        for (j, &v) in self.window.iter().enumerate() {
            let pos = (j + 1) as i32;
            if v > 0 {
                inv[(v - 1) as usize] = pos;
            } else {
                inv[(-v - 1) as usize] = -pos;
            }
        }
        SignedPermutation { window: normalize(inv), tag: self.tag }
    }

    /// Composition (self ∘ rhs)(i) = self(rhs(i)); both operands must
    /// share a tag.
    pub fn compose(&self, rhs: &SignedPermutation) -> SignedPermutation {
        debug_assert_eq!(self.tag, rhs.tag);
        let n = self.window.len().max(rhs.window.len());
        let w = (1..=n as i32).map(|i| self.value(rhs.value(i))).collect();
        SignedPermutation { window: normalize(w), tag: self.tag }
    }

    fn check_generator(&self, g: Generator) -> Result<(), WeylError> {
        if g.valid_for(self.tag) {
            Ok(())
        } else {
            Err(WeylError::InvalidGenerator)
        }
    }

    fn extended(&self, need: usize) -> Vec<i32> {
        let mut w = self.window.clone();
        while w.len() < need {
            w.push(w.len() as i32 + 1);
        }
        w
    }

    /// Right multiplication by a simple reflection (acts on positions).
    pub fn right_multiply(&self, g: Generator) -> Result<SignedPermutation, WeylError> {
        self.check_generator(g)?;
        let mut w;
        match g {
            Generator::S(0) => {
                w = self.extended(1);
                w[0] = -w[0];
            }
            Generator::S(i) => {
                let i = i as usize;
                w = self.extended(i + 1);
                w.swap(i - 1, i);
            }
            Generator::Box => {
                w = self.extended(2);
                let (a, b) = (w[0], w[1]);
                w[0] = -b;
                w[1] = -a;
            }
        }
        Ok(SignedPermutation { window: normalize(w), tag: self.tag })
    }

    /// Left multiplication by a simple reflection (acts on values).
    pub fn left_multiply(&self, g: Generator) -> Result<SignedPermutation, WeylError> {
        self.check_generator(g)?;
        let mut w;
        match g {
            Generator::S(0) => {
                w = self.extended(1);
                for v in w.iter_mut() {
                    if v.abs() == 1 {
                        *v = -*v;
                    }
                }
            }
            Generator::S(i) => {
                let i = i as i32;
                w = self.extended(i as usize + 1);
                for v in w.iter_mut() {
                    if v.abs() == i {
                        *v = v.signum() * (i + 1);
                    } else if v.abs() == i + 1 {
                        *v = v.signum() * i;
                    }
                }
            }
            Generator::Box => {
                w = self.extended(2);
                for v in w.iter_mut() {
                    *v = match *v {
                        1 => -2,
                        -1 => 2,
                        2 => -1,
                        -2 => 1,
                        other => other,
                    };
                }
            }
        }
        Ok(SignedPermutation { window: normalize(w), tag: self.tag })
    }

    /// Whether right multiplication by g shortens the element.
    pub fn has_right_descent(&self, g: Generator) -> bool {
        debug_assert!(g.valid_for(self.tag));
        match g {
            Generator::S(0) => self.value(1) < 0,
            Generator::S(i) => self.value(i as i32) > self.value(i as i32 + 1),
            Generator::Box => self.value(1) + self.value(2) < 0,
        }
    }

    pub fn has_left_descent(&self, g: Generator) -> bool {
        self.inverse().has_right_descent(g)
    }

    /// First right descent in the order `Box < 0 < 1 < 2 < ...`, if any.
    pub fn first_right_descent(&self) -> Option<Generator> {
        if self.window.is_empty() {
            return None;
        }
        match self.tag {
            GroupTag::TypeD => {
                if self.has_right_descent(Generator::Box) {
                    return Some(Generator::Box);
                }
            }
            GroupTag::TypeBC => {
                if self.has_right_descent(Generator::S(0)) {
                    return Some(Generator::S(0));
                }
            }
            GroupTag::TypeA => {}
        }
        (1..self.window.len() as u32)
            .map(Generator::S)
            .find(|&g| self.has_right_descent(g))
    }

    /// Coxeter length, computed by descent reduction.
    pub fn length(&self) -> usize {
        let mut cur = self.clone();
        let mut len = 0;
        while let Some(g) = cur.first_right_descent() {
            cur = cur.right_multiply(g).expect("descent generator is valid");
            len += 1;
        }
        debug_assert!(cur.is_identity());
        len
    }

    /// Right descents within the element's window.
    pub fn right_descents(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        if self.window.is_empty() {
            return out;
        }
        match self.tag {
            GroupTag::TypeD => {
                if self.has_right_descent(Generator::Box) {
                    out.push(Generator::Box);
                }
            }
            GroupTag::TypeBC => {
                if self.has_right_descent(Generator::S(0)) {
                    out.push(Generator::S(0));
                }
            }
            GroupTag::TypeA => {}
        }
        for i in 1..self.window.len() as u32 {
            if self.has_right_descent(Generator::S(i)) {
                out.push(Generator::S(i));
            }
        }
        out
    }

    pub fn left_descents(&self) -> Vec<Generator> {
        self.inverse().right_descents()
    }

    /// The deterministic reduced word obtained by repeatedly stripping
    /// the smallest right descent.
    pub fn canonical_reduced_word(&self) -> ReducedWord {
        let mut cur = self.clone();
        let mut letters = Vec::new();
        while let Some(g) = cur.first_right_descent() {
            cur = cur.right_multiply(g).expect("descent generator is valid");
            letters.push(g);
        }
        letters.reverse();
        ReducedWord { letters, tag: self.tag }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in &self.window {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", v)?;
        }
        Ok(())
    }
}

/// Parses comma-separated window notation, e.g. `2,4,7,-5,-1,3,6`.
pub fn parse_window(s: &str, tag: GroupTag) -> Result<SignedPermutation, WeylError> {
    let mut vals = Vec::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        let v: i32 = piece.parse().map_err(|_| WeylError::Parse)?;
        vals.push(v);
    }
    SignedPermutation::from_window(vals, tag)
}

/// A word in the simple reflections; evaluates left-to-right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedWord {
    letters: Vec<Generator>,
    tag: GroupTag,
}

impl ReducedWord {
    pub fn new(letters: Vec<Generator>, tag: GroupTag) -> Self {
        ReducedWord { letters, tag }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> Result<SignedPermutation, WeylError> {
        evaluate_word(&self.letters, self.tag)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            write!(f, "{}", g)?;
        }
        Ok(())
    }
}

/// Parses a comma-separated word such as `3,1,B,2`, rejecting letters
/// that are not defined for the tag.
pub fn parse_word(s: &str, tag: GroupTag) -> Result<Vec<Generator>, WeylError> {
    let mut out = Vec::new();
    if s.trim().is_empty() {
        return Ok(out);
    }
    for piece in s.split(',') {
        let piece = piece.trim();
        let g = if piece.eq_ignore_ascii_case("b") {
            Generator::Box
        } else {
            Generator::S(piece.parse().map_err(|_| WeylError::Parse)?)
        };
        if !g.valid_for(tag) {
            return Err(WeylError::InvalidGenerator);
        }
        out.push(g);
    }
    Ok(out)
}

pub fn evaluate_word(letters: &[Generator], tag: GroupTag) -> Result<SignedPermutation, WeylError> {
    let mut w = SignedPermutation::identity(tag);
    for &g in letters {
        w = w.right_multiply(g)?;
    }
    Ok(w)
}

/// True iff the product of the factors equals w with lengths adding.
pub fn is_reduced_factorization(factors: &[SignedPermutation], w: &SignedPermutation) -> bool {
    if factors.iter().any(|u| u.tag() != w.tag()) {
        return false;
    }
    let mut prod = SignedPermutation::identity(w.tag());
    let mut total = 0;
    for u in factors {
        prod = prod.compose(u);
        total += u.length();
    }
    prod == *w && total == w.length()
}

/// If w (a positive-window element) has a reduced word
/// `a_1 > a_2 > ... > a_r >= p`, returns that word; it is unique.
///
/// The first letter of a decreasing word is the largest left descent, so
/// a greedy strip either finds the word or proves there is none.
pub fn decreasing_word_down_to(w: &SignedPermutation, p: u32) -> Option<Vec<u32>> {
    if !w.all_positive() {
        return None;
    }
    let mut cur = w.clone();
    let mut prev = u64::MAX;
    let mut out = Vec::new();
    while !cur.is_identity() {
        let inv = cur.inverse();
        let n = inv.window().len() as u32;
        let a = (1..n)
            .rev()
            .find(|&i| inv.value(i as i32) > inv.value(i as i32 + 1))?;
        if (a as u64) >= prev || a < p {
            return None;
        }
        out.push(a);
        prev = a as u64;
        cur = cur.left_multiply(Generator::S(a)).ok()?;
    }
    Some(out)
}

/// Mirror of [`decreasing_word_down_to`]: a reduced word
/// `p <= a_1 < a_2 < ... < a_r`, if one exists.
pub fn increasing_word_up_from(w: &SignedPermutation, p: u32) -> Option<Vec<u32>> {
    let mut word = decreasing_word_down_to(&w.inverse(), p)?;
    word.reverse();
    Some(word)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Phase {
    Dec,
    Inc,
}

/// True iff w has a reduced word a_1 > ... > a_q < a_{q+1} < ... < a_r
/// in the generator order `Box < 0 < 1 < ...`.
pub fn is_unimodal(w: &SignedPermutation) -> bool {
    fn go(
        v: &SignedPermutation,
        last: i64,
        phase: Phase,
        memo: &mut BTreeMap<(Vec<i32>, i64, bool), bool>,
    ) -> bool {
        if v.is_identity() {
            return true;
        }
        let key = (v.window().to_vec(), last, phase == Phase::Dec);
        if let Some(&r) = memo.get(&key) {
            return r;
        }
        let mut res = false;
        for g in v.left_descents() {
            let r = g.rank();
            let next = v.left_multiply(g).expect("descent generator is valid");
            let hit = match phase {
                Phase::Dec if r < last => go(&next, r, Phase::Dec, memo),
                Phase::Dec if r > last => go(&next, r, Phase::Inc, memo),
                Phase::Inc if r > last => go(&next, r, Phase::Inc, memo),
                _ => false,
            };
            if hit {
                res = true;
                break;
            }
        }
        memo.insert(key, res);
        res
    }
    go(w, i64::MAX, Phase::Dec, &mut BTreeMap::new())
}

fn generator_set(tag: GroupTag, n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    match tag {
        GroupTag::TypeD => out.push(Generator::Box),
        GroupTag::TypeBC => out.push(Generator::S(0)),
        GroupTag::TypeA => {}
    }
    for i in 1..n as u32 {
        out.push(Generator::S(i));
    }
    out
}

/// True iff w = u·v reduced for some v, i.e. u is a prefix of w in left
/// weak order.
pub fn is_left_factor(u: &SignedPermutation, w: &SignedPermutation) -> bool {
    u.tag() == w.tag() && u.length() + u.inverse().compose(w).length() == w.length()
}

/// All u with w = u·v reduced, found by breadth-first extension.
pub fn left_factors(w: &SignedPermutation) -> Vec<SignedPermutation> {
    let lw = w.length();
    let gens = generator_set(w.tag(), w.min_rank().max(2));
    let mut seen: BTreeSet<SignedPermutation> = BTreeSet::new();
    let id = SignedPermutation::identity(w.tag());
    seen.insert(id.clone());
    let mut frontier = alloc::vec![id];
    for _ in 0..lw {
        let mut next = Vec::new();
        for u in &frontier {
            for &g in &gens {
                if !u.has_right_descent(g) {
                    let v = u.right_multiply(g).expect("valid generator");
                    if !seen.contains(&v) && is_left_factor(&v, w) {
                        seen.insert(v.clone());
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Every reduced word of w. Exponential; intended for small elements and
/// test oracles.
pub fn reduced_words(w: &SignedPermutation) -> Vec<Vec<Generator>> {
    if w.is_identity() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for g in w.left_descents() {
        let rest = w.left_multiply(g).expect("descent generator is valid");
        for mut word in reduced_words(&rest) {
            word.insert(0, g);
            out.push(word);
        }
    }
    out
}

/// All elements of the rank-n group with the given tag.
pub fn all_elements(tag: GroupTag, n: usize) -> Vec<SignedPermutation> {
    fn perms(values: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if values.is_empty() {
            out.push(cur.clone());
            return;
        }
        for idx in 0..values.len() {
            let v = values.remove(idx);
            cur.push(v);
            perms(values, cur, out);
            cur.pop();
            values.insert(idx, v);
        }
    }
    let mut windows = Vec::new();
    perms(&mut (1..=n as i32).collect(), &mut Vec::new(), &mut windows);
    let mut out = Vec::new();
    for w in windows {
        match tag {
            GroupTag::TypeA => {
                out.push(SignedPermutation::from_window(w, tag).expect("valid window"));
            }
            _ => {
                for mask in 0u32..(1 << n) {
                    if tag == GroupTag::TypeD && mask.count_ones() % 2 != 0 {
                        continue;
                    }
                    let signed: Vec<i32> = w
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask & (1 << i) != 0 { -v } else { v })
                        .collect();
                    out.push(SignedPermutation::from_window(signed, tag).expect("valid window"));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Rendering of a word as comma-separated letters with `B` for the type
/// D generator.
pub fn word_to_string(word: &[Generator]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, g) in word.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{}", g).expect("infallible");
    }
    s
}
