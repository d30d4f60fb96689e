//! Partitions, k-strict and typed k-strict partitions, the Grassmannian
//! shape bijections, box geometry, strip predicates and their
//! statistics, and compatible pairs of shapes.
//!
//! A diagram carries a row zero by convention: every box `[0,c]` with
//! `c >= 1` belongs to every partition. The strip predicates are
//! properties of the *pair* (lambda, mu), not of the bare skew diagram.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::weyl::{
    decreasing_word_down_to, increasing_word_up_from, GroupTag, SignedPermutation,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShapeError {
    /// Parts are not weakly decreasing.
    NotAPartition,
    /// A part greater than k repeats.
    NotKStrict,
    /// Type flag inconsistent with the parts (positive iff some part
    /// equals k), or k out of range for the group.
    InvalidType,
    /// Inner shape not contained in the outer shape.
    NotContained,
    /// Too many parts for the requested Grassmannian descent.
    TooLong,
    /// Malformed text input.
    Parse,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ShapeError::NotAPartition => "parts must be weakly decreasing",
            ShapeError::NotKStrict => "a part greater than k repeats",
            ShapeError::InvalidType => "type flag inconsistent with the shape",
            ShapeError::NotContained => "inner shape not contained in outer shape",
            ShapeError::TooLong => "partition has too many parts",
            ShapeError::Parse => "malformed partition",
        };
        write!(f, "{}", msg)
    }
}

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition);
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The r-th part (1-indexed), zero beyond the last row.
    pub fn part(&self, r: usize) -> u32 {
        if r >= 1 && r <= self.parts.len() {
            self.parts[r - 1]
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.len()).all(|r| inner.part(r) <= self.part(r))
    }

    /// Number of rows with at least c boxes.
    pub fn col_len(&self, c: u32) -> usize {
        debug_assert!(c >= 1);
        self.parts.iter().take_while(|&&p| p >= c).count()
    }

    /// No part greater than k repeats.
    pub fn is_k_strict(&self, k: u32) -> bool {
        self.parts
            .windows(2)
            .all(|w| w[0] <= k || w[0] != w[1])
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

/// Parses `3,1` (or `0` / empty for the empty shape).
pub fn parse_partition(s: &str) -> Result<Partition, ShapeError> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in s.split(',') {
        let v: u32 = piece.trim().parse().map_err(|_| ShapeError::Parse)?;
        parts.push(v);
    }
    Partition::new(parts)
}

/// Number of parts strictly greater than k.
pub fn ell_k(lambda: &Partition, k: u32) -> usize {
    lambda.parts.iter().take_while(|&&p| p > k).count()
}

/// The type flag of a typed k-strict partition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum ShapeType {
    Zero,
    One,
    Two,
}

impl ShapeType {
    pub fn as_u8(self) -> u8 {
        match self {
            ShapeType::Zero => 0,
            ShapeType::One => 1,
            ShapeType::Two => 2,
        }
    }

    pub fn from_u8(v: u8) -> Option<Self> {
        match v {
            0 => Some(ShapeType::Zero),
            1 => Some(ShapeType::One),
            2 => Some(ShapeType::Two),
            _ => None,
        }
    }
}

/// A k-strict partition with a type flag, used on the even orthogonal
/// side. The flag is positive exactly when some part equals k.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TypedShape {
    pub shape: Partition,
    pub ty: ShapeType,
}

impl TypedShape {
    pub fn new(shape: Partition, ty: ShapeType, k: u32) -> Result<Self, ShapeError> {
        if !shape.is_k_strict(k) {
            return Err(ShapeError::NotKStrict);
        }
        let has_k = shape.parts().contains(&k) && k > 0;
        if has_k == (ty == ShapeType::Zero) {
            return Err(ShapeError::InvalidType);
        }
        Ok(TypedShape { shape, ty })
    }

    pub fn empty() -> Self {
        TypedShape { shape: Partition::empty(), ty: ShapeType::Zero }
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }
}

impl fmt::Display for TypedShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} type={}", self.shape, self.ty.as_u8())
    }
}

/// ell_k + type, whose parity governs the typed strip conditions.
pub fn epsilon(nu: &TypedShape, k: u32) -> usize {
    ell_k(&nu.shape, k) + nu.ty.as_u8() as usize
}

/// The valid type flags for a shape at a given k.
pub fn allowed_types(shape: &Partition, k: u32) -> Vec<ShapeType> {
    if k > 0 && shape.parts().contains(&k) {
        alloc::vec![ShapeType::One, ShapeType::Two]
    } else {
        alloc::vec![ShapeType::Zero]
    }
}

/// A box in matrix coordinates; row 0 is the conventional top row that
/// belongs to every diagram.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct DiagramBox {
    pub row: u32,
    pub col: u32,
}

impl DiagramBox {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(col >= 1);
        DiagramBox { row, col }
    }
}

// Diagonal distances, doubled on the symplectic side to avoid halves.
fn dd_c(b: DiagramBox, k: u32) -> i64 {
    (2 * b.col as i64 - 2 * k as i64 - 1).abs() + 2 * b.row as i64
}

fn dd_d(b: DiagramBox, k: u32) -> i64 {
    (b.col as i64 - k as i64).abs() + b.row as i64
}

/// |c - k - 1/2| + r = |c' - k - 1/2| + r', the relation used with
/// k-strict shapes.
pub fn is_k_related_c(b1: DiagramBox, b2: DiagramBox, k: u32) -> bool {
    dd_c(b1, k) == dd_c(b2, k)
}

/// |c - k| + r = |c' - k| + r', the relation used with typed shapes.
pub fn is_k_related_d(b1: DiagramBox, b2: DiagramBox, k: u32) -> bool {
    dd_d(b1, k) == dd_d(b2, k)
}

/// Boxes of lambda/mu (rows >= 1).
pub fn skew_boxes(lambda: &Partition, mu: &Partition) -> Vec<DiagramBox> {
    let mut out = Vec::new();
    for r in 1..=lambda.len() {
        for c in (mu.part(r) + 1)..=lambda.part(r) {
            out.push(DiagramBox::new(r as u32, c));
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Relation {
    C,
    D,
}

fn dd(rel: Relation, b: DiagramBox, k: u32) -> i64 {
    match rel {
        Relation::C => dd_c(b, k),
        Relation::D => dd_d(b, k),
    }
}

/// The right boxes of mu (row zero included) that are bottom boxes of
/// lambda in their column, split by whether they are related to a left
/// box of lambda/mu. Materialized out to a column beyond every
/// interruption, where the infinite row-zero tail begins.
struct StripSets {
    related: Vec<DiagramBox>,
    unrelated: Vec<DiagramBox>,
}

fn strip_sets(lambda: &Partition, mu: &Partition, k: u32, rel: Relation) -> StripSets {
    let left_dds: BTreeSet<i64> = skew_boxes(lambda, mu)
        .into_iter()
        .filter(|b| b.col <= k)
        .map(|b| dd(rel, b, k))
        .collect();
    let max_left = left_dds.iter().max().copied().unwrap_or(0).max(0) as u32;
    let cmax = lambda.part(1).max(k) + max_left + 2;
    let mut related = Vec::new();
    let mut unrelated = Vec::new();
    for c in (k + 1)..=cmax {
        let r = lambda.col_len(c) as u32;
        let in_mu = r == 0 || mu.part(r as usize) >= c;
        if !in_mu {
            continue;
        }
        let b = DiagramBox::new(r, c);
        if left_dds.contains(&dd(rel, b, k)) {
            related.push(b);
        } else {
            unrelated.push(b);
        }
    }
    StripSets { related, unrelated }
}

fn rim_and_right_conditions(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    let skew = skew_boxes(lambda, mu);
    // contained in the rim of lambda
    if skew
        .iter()
        .any(|b| lambda.part(b.row as usize + 1) > b.col)
    {
        return false;
    }
    // right boxes form a horizontal strip
    let mut right_cols = BTreeSet::new();
    for b in &skew {
        if b.col > k && !right_cols.insert(b.col) {
            return false;
        }
    }
    true
}

fn strip_conditions(lambda: &Partition, mu: &Partition, k: u32, rel: Relation) -> bool {
    if !lambda.contains(mu) {
        return false;
    }
    if !rim_and_right_conditions(lambda, mu, k) {
        return false;
    }
    let sets = strip_sets(lambda, mu, k, rel);
    // no two related-set boxes on a common diagonal
    let dds: Vec<i64> = sets.related.iter().map(|&b| dd(rel, b, k)).collect();
    for i in 0..dds.len() {
        for j in (i + 1)..dds.len() {
            if dds[i] == dds[j] {
                return false;
            }
        }
    }
    // two skew boxes in one column must be related to exactly two boxes
    // of the related set, lying in one row
    let skew = skew_boxes(lambda, mu);
    for i in 0..skew.len() {
        for j in (i + 1)..skew.len() {
            if skew[i].col != skew[j].col {
                continue;
            }
            let d1 = dd(rel, skew[i], k);
            let d2 = dd(rel, skew[j], k);
            let matches: Vec<&DiagramBox> = sets
                .related
                .iter()
                .filter(|&&b| {
                    let d = dd(rel, b, k);
                    d == d1 || d == d2
                })
                .collect();
            if matches.len() != 2 || matches[0].row != matches[1].row {
                return false;
            }
        }
    }
    true
}

/// The k-horizontal strip predicate for a pair of k-strict partitions.
pub fn is_k_horizontal_strip(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    lambda.is_k_strict(k) && mu.is_k_strict(k) && strip_conditions(lambda, mu, k, Relation::C)
}

/// The typed k'-horizontal strip predicate; the type flags must not sum
/// to three.
pub fn is_typed_k_horizontal_strip(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    lambda.ty.as_u8() + mu.ty.as_u8() != 3
        && strip_conditions(&lambda.shape, &mu.shape, k, Relation::D)
}

fn components(boxes: &[DiagramBox]) -> Vec<Vec<DiagramBox>> {
    let n = boxes.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let dr = boxes[i].row as i64 - boxes[j].row as i64;
            let dc = boxes[i].col as i64 - boxes[j].col as i64;
            if dr.abs() <= 1 && dc.abs() <= 1 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: alloc::collections::BTreeMap<usize, Vec<DiagramBox>> =
        alloc::collections::BTreeMap::new();
    for (i, &b) in boxes.iter().enumerate() {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(b);
    }
    groups.into_values().collect()
}

/// Connected components (vertex or edge adjacency) of the unrelated set
/// that avoid column k+1. Requires the strip predicate.
pub fn n_strip_c(lambda: &Partition, mu: &Partition, k: u32) -> u32 {
    debug_assert!(is_k_horizontal_strip(lambda, mu, k));
    let sets = strip_sets(lambda, mu, k, Relation::C);
    components(&sets.unrelated)
        .iter()
        .filter(|comp| comp.iter().all(|b| b.col != k + 1))
        .count() as u32
}

/// One less than the component count of the unrelated set. Requires the
/// typed strip predicate.
pub fn n_strip_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> u32 {
    debug_assert!(is_typed_k_horizontal_strip(lambda, mu, k));
    let sets = strip_sets(&lambda.shape, &mu.shape, k, Relation::D);
    let comps = components(&sets.unrelated).len();
    debug_assert!(comps >= 1);
    (comps - 1) as u32
}

// ---------------------------------------------------------------------
// Grassmannian shape bijections
// ---------------------------------------------------------------------

/// Column lengths of the first k columns, listed in increasing order.
pub fn a_code(lambda: &Partition, k: u32) -> Vec<u32> {
    (1..=k)
        .rev()
        .map(|c| lambda.col_len(c) as u32)
        .collect()
}

/// The m-Grassmannian permutation with the given shape.
pub fn grassmannian_a(lambda: &Partition, m: usize) -> Result<SignedPermutation, ShapeError> {
    if lambda.len() > m {
        return Err(ShapeError::TooLong);
    }
    let mut vals: Vec<i32> = (1..=m)
        .map(|j| (lambda.part(m + 1 - j) + j as u32) as i32)
        .collect();
    let used: BTreeSet<i32> = vals.iter().copied().collect();
    let n = vals.iter().copied().max().unwrap_or(0).max(m as i32);
    for v in 1..=n {
        if !used.contains(&v) {
            vals.push(v);
        }
    }
    Ok(SignedPermutation::from_window(vals, GroupTag::TypeA).expect("valid window"))
}

/// Recovers (shape, m) from an m-Grassmannian permutation; the identity
/// yields the empty shape with m = 0.
pub fn shape_a(w: &SignedPermutation) -> Option<(Partition, usize)> {
    if w.tag() != GroupTag::TypeA {
        return None;
    }
    if w.is_identity() {
        return Some((Partition::empty(), 0));
    }
    let n = w.min_rank();
    let descents: Vec<usize> = (1..n)
        .filter(|&i| w.value(i as i32) > w.value(i as i32 + 1))
        .collect();
    if descents.len() != 1 {
        return None;
    }
    let m = descents[0];
    let parts: Vec<u32> = (1..=m)
        .map(|i| {
            let j = m + 1 - i;
            (w.value(j as i32) - j as i32) as u32
        })
        .collect();
    let lambda = Partition::new(parts).ok()?;
    Some((lambda, m))
}

/// The k-Grassmannian signed permutation with the given k-strict shape.
pub fn grassmannian_c(lambda: &Partition, k: u32) -> Result<SignedPermutation, ShapeError> {
    if !lambda.is_k_strict(k) {
        return Err(ShapeError::NotKStrict);
    }
    let s = ell_k(lambda, k);
    let gamma = a_code(lambda, k);
    let mut vals: Vec<i32> = Vec::new();
    for j in 1..=k as usize {
        let t = gamma[j - 1] as i64 + j as i64;
        let cnt = (1..=s)
            .filter(|&p| lambda.part(p) as i64 + p as i64 > t + k as i64)
            .count() as i64;
        vals.push((t - cnt) as i32);
    }
    for i in 1..=s {
        vals.push(k as i32 - lambda.part(i) as i32);
    }
    let used: BTreeSet<i32> = vals.iter().map(|v| v.abs()).collect();
    let n = vals
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or(0)
        .max(vals.len() as i32);
    for v in 1..=n {
        if !used.contains(&v) {
            vals.push(v);
        }
    }
    Ok(SignedPermutation::from_window(vals, GroupTag::TypeBC).expect("valid window"))
}

fn is_k_grassmannian_c(w: &SignedPermutation, k: u32) -> bool {
    if w.tag() != GroupTag::TypeBC {
        return false;
    }
    let n = w.min_rank();
    for j in 1..=k as usize {
        let v = w.value(j as i32);
        if v <= 0 {
            return false;
        }
        if j > 1 && w.value(j as i32 - 1) >= v {
            return false;
        }
    }
    for i in (k as usize + 1)..n.max(k as usize + 1) {
        if w.value(i as i32) >= w.value(i as i32 + 1) {
            return false;
        }
    }
    true
}

/// Inverse of [`grassmannian_c`].
pub fn shape_c(w: &SignedPermutation, k: u32) -> Option<Partition> {
    if !is_k_grassmannian_c(w, k) {
        return None;
    }
    let n = w.min_rank();
    let s = (1..=n).filter(|&i| w.value(i as i32) < 0).count();
    let mut parts: Vec<u32> = Vec::new();
    for i in 1..=s {
        let v = w.value((k as usize + i) as i32);
        if v >= 0 {
            return None;
        }
        parts.push((k as i64 - v as i64) as u32);
    }
    // recover the first k column lengths
    let mut gamma: Vec<u32> = Vec::new();
    for j in 1..=k as usize {
        let target = w.value(j as i32) as i64;
        let mut found = None;
        for g in 0..=(target + s as i64).max(0) {
            let cnt = (1..=s)
                .filter(|&p| parts[p - 1] as i64 + p as i64 > g + j as i64 + k as i64)
                .count() as i64;
            if g + j as i64 - cnt == target {
                found = Some(g as u32);
                break;
            }
        }
        gamma.push(found?);
    }
    let mut r = s + 1;
    loop {
        let part = gamma.iter().filter(|&&g| g as usize >= r).count() as u32;
        if part == 0 {
            break;
        }
        parts.push(part);
        r += 1;
    }
    let lambda = Partition::new(parts).ok()?;
    if grassmannian_c(&lambda, k).ok()? == *w {
        Some(lambda)
    } else {
        None
    }
}

fn is_k_grassmannian_d(w: &SignedPermutation, k: u32) -> bool {
    if w.tag() != GroupTag::TypeD || k == 0 {
        return false;
    }
    let n = w.min_rank();
    // |w_1| < w_2 < ... < w_k, vacuous when k = 1
    for j in 2..=k as usize {
        let prev = if j == 2 { w.value(1).abs() } else { w.value(j as i32 - 1) };
        let v = w.value(j as i32);
        if v <= 0 || prev >= v {
            return false;
        }
    }
    for i in (k as usize + 1)..n.max(k as usize + 1) {
        if w.value(i as i32) >= w.value(i as i32 + 1) {
            return false;
        }
    }
    true
}

/// Element type on the even orthogonal side: 0 when |w_1| = 1, 1 when
/// w_1 > 1, 2 when w_1 < -1.
pub fn element_type(w: &SignedPermutation) -> ShapeType {
    let v = w.value(1);
    if v.abs() == 1 {
        ShapeType::Zero
    } else if v > 1 {
        ShapeType::One
    } else {
        ShapeType::Two
    }
}

/// The k-Grassmannian element of the even group with the given typed
/// shape (k >= 1).
pub fn grassmannian_d(lambda: &TypedShape, k: u32) -> Result<SignedPermutation, ShapeError> {
    if k == 0 {
        return Err(ShapeError::InvalidType);
    }
    // validate the type flag against the shape
    TypedShape::new(lambda.shape.clone(), lambda.ty, k)?;
    let shape = &lambda.shape;
    let s = ell_k(shape, k);
    let gamma = a_code(shape, k);
    let mut vals: Vec<i32> = Vec::new();
    for j in 1..=k as usize {
        let t = gamma[j - 1] as i64 + j as i64;
        let cnt = (1..=s)
            .filter(|&p| shape.part(p) as i64 + p as i64 >= t + k as i64)
            .count() as i64;
        vals.push((t - cnt) as i32);
    }
    for i in 1..=s {
        vals.push(k as i32 - 1 - shape.part(i) as i32);
    }
    let used: BTreeSet<i32> = vals.iter().map(|v| v.abs()).collect();
    let n = vals
        .iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or(0)
        .max(vals.len() as i32)
        .max(1);
    for v in 1..=n {
        if !used.contains(&v) {
            vals.push(v);
        }
    }
    // choose the sign of the +-1 entry so the sign changes are even
    let negs = vals.iter().filter(|&&v| v < 0).count();
    if negs % 2 == 1 {
        let pos = vals.iter().position(|&v| v.abs() == 1).expect("value 1 present");
        vals[pos] = -vals[pos];
    }
    if lambda.ty == ShapeType::Two {
        let pos = vals.iter().position(|&v| v.abs() == 1).expect("value 1 present");
        vals[0] = -vals[0];
        vals[pos] = -vals[pos];
    }
    let w = SignedPermutation::from_window(vals, GroupTag::TypeD)
        .expect("even number of sign changes");
    debug_assert_eq!(element_type(&w), lambda.ty);
    Ok(w)
}

/// Inverse of [`grassmannian_d`].
pub fn shape_d(w: &SignedPermutation, k: u32) -> Option<TypedShape> {
    if !is_k_grassmannian_d(w, k) {
        return None;
    }
    let ty = element_type(w);
    let base = if ty == ShapeType::Two {
        let mut vals = w.window().to_vec();
        let pos = vals.iter().position(|&v| v.abs() == 1);
        vals[0] = -vals[0];
        if let Some(p) = pos {
            vals[p] = -vals[p];
        }
        SignedPermutation::from_window(vals, GroupTag::TypeD).ok()?
    } else {
        w.clone()
    };
    let n = base.min_rank();
    let s = (1..=n)
        .filter(|&i| i > k as usize && base.value(i as i32) < -1)
        .count();
    let mut parts: Vec<u32> = Vec::new();
    for i in 1..=s {
        let v = base.value((k as usize + i) as i32);
        if v >= -1 {
            return None;
        }
        parts.push((k as i64 - 1 - v as i64) as u32);
    }
    let mut gamma: Vec<u32> = Vec::new();
    for j in 1..=k as usize {
        let target = base.value(j as i32).abs() as i64;
        let mut found = None;
        for g in 0..=(target + s as i64).max(0) {
            let cnt = (1..=s)
                .filter(|&p| parts[p - 1] as i64 + p as i64 >= g + j as i64 + k as i64)
                .count() as i64;
            if g + j as i64 - cnt == target {
                found = Some(g as u32);
                break;
            }
        }
        gamma.push(found?);
    }
    let mut r = s + 1;
    loop {
        let part = gamma.iter().filter(|&&g| g as usize >= r).count() as u32;
        if part == 0 {
            break;
        }
        parts.push(part);
        r += 1;
    }
    let shape = Partition::new(parts).ok()?;
    let typed = TypedShape::new(shape, ty, k).ok()?;
    if grassmannian_d(&typed, k).ok()? == *w {
        Some(typed)
    } else {
        None
    }
}

// ---------------------------------------------------------------------
// Compatible pairs and skew elements
// ---------------------------------------------------------------------

/// The skew element w_lambda w_mu^{-1}.
pub fn skew_element_a(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
) -> Result<SignedPermutation, ShapeError> {
    let wl = grassmannian_a(lambda, m)?;
    let wm = grassmannian_a(mu, m)?;
    Ok(wl.compose(&wm.inverse()))
}

pub fn skew_element_c(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
) -> Result<SignedPermutation, ShapeError> {
    let wl = grassmannian_c(lambda, k)?;
    let wm = grassmannian_c(mu, k)?;
    Ok(wl.compose(&wm.inverse()))
}

pub fn skew_element_d(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
) -> Result<SignedPermutation, ShapeError> {
    let wl = grassmannian_d(lambda, k)?;
    let wm = grassmannian_d(mu, k)?;
    Ok(wl.compose(&wm.inverse()))
}

/// w_lambda = (w_lambda w_mu^{-1}) w_mu is a reduced factorization.
pub fn is_compatible_pair_a(lambda: &Partition, mu: &Partition, m: usize) -> bool {
    if !lambda.contains(mu) || lambda.len() > m {
        return false;
    }
    match skew_element_a(lambda, mu, m) {
        Ok(w) => w.length() as i64 == lambda.size() as i64 - mu.size() as i64,
        Err(_) => false,
    }
}

pub fn is_compatible_pair_c(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    if !lambda.contains(mu) || !lambda.is_k_strict(k) || !mu.is_k_strict(k) {
        return false;
    }
    match skew_element_c(lambda, mu, k) {
        Ok(w) => w.length() as i64 == lambda.size() as i64 - mu.size() as i64,
        Err(_) => false,
    }
}

pub fn is_compatible_pair_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    if !lambda.shape.contains(&mu.shape) {
        return false;
    }
    match skew_element_d(lambda, mu, k) {
        Ok(w) => w.length() as i64 == lambda.size() as i64 - mu.size() as i64,
        Err(_) => false,
    }
}

// ---------------------------------------------------------------------
// x-strips and y-strips
// ---------------------------------------------------------------------

/// Word definition: the skew element lies in the symmetric group and is
/// decreasing down to 1.
pub fn is_x_strip_c(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    if !is_compatible_pair_c(lambda, mu, k) {
        return false;
    }
    let w = skew_element_c(lambda, mu, k).expect("compatible pair");
    w.all_positive() && decreasing_word_down_to(&w, 1).is_some()
}

/// Word definition: the skew element lies in the symmetric group and is
/// increasing up from 1.
pub fn is_y_strip_c(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    if !is_compatible_pair_c(lambda, mu, k) {
        return false;
    }
    let w = skew_element_c(lambda, mu, k).expect("compatible pair");
    w.all_positive() && increasing_word_up_from(&w, 1).is_some()
}

fn left_vertical_strip(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    let mut rows = BTreeSet::new();
    skew_boxes(lambda, mu)
        .into_iter()
        .filter(|b| b.col <= k)
        .all(|b| rows.insert(b.row))
}

fn left_horizontal_strip(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    let mut cols = BTreeSet::new();
    skew_boxes(lambda, mu)
        .into_iter()
        .filter(|b| b.col <= k)
        .all(|b| cols.insert(b.col))
}

fn no_two_boxes_related(lambda: &Partition, mu: &Partition, k: u32, rel: Relation) -> bool {
    let boxes = skew_boxes(lambda, mu);
    for i in 0..boxes.len() {
        for j in (i + 1)..boxes.len() {
            if dd(rel, boxes[i], k) == dd(rel, boxes[j], k) {
                return false;
            }
        }
    }
    true
}

fn no_two_right_boxes_in_a_row(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    let mut rows = BTreeSet::new();
    skew_boxes(lambda, mu)
        .into_iter()
        .filter(|b| b.col > k)
        .all(|b| rows.insert(b.row))
}

// No right box of lambda/mu may sit on the diagonal one row below a left
// box. Without this clause the pair ((4,1),(3)) at k=1 would pass the
// x-conditions although its skew element s_1 s_2 has the single reduced
// word 1,2; the clause is verified against the word definition
// exhaustively inside (6,5,4,3) for k <= 3.
fn no_right_box_on_subdiagonal_of_left(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    rel: Relation,
) -> bool {
    let row_step = match rel {
        Relation::C => 2,
        Relation::D => 1,
    };
    let boxes = skew_boxes(lambda, mu);
    let lefts: Vec<i64> = boxes
        .iter()
        .filter(|b| b.col <= k)
        .map(|&b| dd(rel, b, k))
        .collect();
    boxes
        .iter()
        .filter(|b| b.col > k)
        .all(|&b| lefts.iter().all(|&l| dd(rel, b, k) != l + row_step))
}

/// Box characterization of x-strips, kept independent of the word
/// definition for cross-checking.
pub fn is_x_strip_c_boxes(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    is_k_horizontal_strip(lambda, mu, k)
        && ell_k(lambda, k) == ell_k(mu, k)
        && left_vertical_strip(lambda, mu, k)
        && no_two_boxes_related(lambda, mu, k, Relation::C)
        && no_right_box_on_subdiagonal_of_left(lambda, mu, k, Relation::C)
}

/// Box characterization of y-strips.
pub fn is_y_strip_c_boxes(lambda: &Partition, mu: &Partition, k: u32) -> bool {
    is_k_horizontal_strip(lambda, mu, k)
        && ell_k(lambda, k) == ell_k(mu, k)
        && left_horizontal_strip(lambda, mu, k)
        && no_two_right_boxes_in_a_row(lambda, mu, k)
}

/// A typed strip is extremal when the (ell_k, type) statistics of the
/// two shapes differ.
pub fn is_extremal(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    (ell_k(&lambda.shape, k), lambda.ty) != (ell_k(&mu.shape, k), mu.ty)
}

pub fn is_typed_x_strip_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    if !is_compatible_pair_d(lambda, mu, k) {
        return false;
    }
    let w = skew_element_d(lambda, mu, k).expect("compatible pair");
    w.all_positive() && decreasing_word_down_to(&w, 1).is_some()
}

pub fn is_typed_y_strip_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    if !is_compatible_pair_d(lambda, mu, k) {
        return false;
    }
    let w = skew_element_d(lambda, mu, k).expect("compatible pair");
    w.all_positive() && increasing_word_up_from(&w, 1).is_some()
}

fn typed_extremal_clause(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    if !is_extremal(lambda, mu, k) {
        return true;
    }
    if lambda.ty == ShapeType::Zero && mu.ty == ShapeType::Zero {
        return false;
    }
    let em = epsilon(mu, k) % 2;
    let el = epsilon(lambda, k) % 2;
    if em == 1 {
        el == 1 && mu.ty == ShapeType::Zero
    } else {
        el == 1 || mu.ty == ShapeType::One
    }
}

/// Box characterization of typed x-strips.
pub fn is_typed_x_strip_d_boxes(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    is_typed_k_horizontal_strip(lambda, mu, k)
        && left_vertical_strip(&lambda.shape, &mu.shape, k)
        && no_two_boxes_related(&lambda.shape, &mu.shape, k, Relation::D)
        && no_right_box_on_subdiagonal_of_left(&lambda.shape, &mu.shape, k, Relation::D)
        && typed_extremal_clause(lambda, mu, k)
}

/// Box characterization of typed y-strips.
pub fn is_typed_y_strip_d_boxes(lambda: &TypedShape, mu: &TypedShape, k: u32) -> bool {
    is_typed_k_horizontal_strip(lambda, mu, k)
        && left_horizontal_strip(&lambda.shape, &mu.shape, k)
        && no_two_right_boxes_in_a_row(&lambda.shape, &mu.shape, k)
        && typed_extremal_clause(lambda, mu, k)
}

// ---------------------------------------------------------------------
// Enumeration helpers
// ---------------------------------------------------------------------

/// All partitions nu with lo inside nu inside hi, optionally k-strict,
/// in lexicographic order.
pub fn partitions_between(
    lo: &Partition,
    hi: &Partition,
    k_strict: Option<u32>,
) -> Vec<Partition> {
    #[allow(clippy::too_many_arguments)]
    fn rec(
        r: usize,
        rows: usize,
        prev: u32,
        lo: &Partition,
        hi: &Partition,
        k: Option<u32>,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if r > rows {
            out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
            return;
        }
        let lo_r = lo.part(r);
        let hi_r = hi.part(r).min(prev);
        for p in lo_r..=hi_r {
            if let Some(k) = k {
                if p > k && p == prev {
                    continue;
                }
            }
            cur.push(p);
            rec(r + 1, rows, p, lo, hi, k, cur, out);
            cur.pop();
        }
    }
    let rows = hi.len();
    let mut out = Vec::new();
    rec(1, rows, u32::MAX, lo, hi, k_strict, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// All partitions inside the bound.
pub fn partitions_in(bound: &Partition) -> Vec<Partition> {
    partitions_between(&Partition::empty(), bound, None)
}

/// All k-strict partitions inside the bound.
pub fn k_strict_in(bound: &Partition, k: u32) -> Vec<Partition> {
    partitions_between(&Partition::empty(), bound, Some(k))
}

/// All typed k-strict partitions inside the bound.
pub fn typed_in(bound: &Partition, k: u32) -> Vec<TypedShape> {
    let mut out = Vec::new();
    for shape in k_strict_in(bound, k) {
        for ty in allowed_types(&shape, k) {
            out.push(TypedShape { shape: shape.clone(), ty });
        }
    }
    out.sort();
    out
}

/// Counts the k-strict nu with mu inside nu inside lambda such that both
/// (lambda, nu) and (nu, mu) are compatible pairs. Requires a compatible
/// outer pair.
pub fn intermediate_count_c(lambda: &Partition, mu: &Partition, k: u32) -> Option<u64> {
    if !is_compatible_pair_c(lambda, mu, k) {
        return None;
    }
    Some(
        partitions_between(mu, lambda, Some(k))
            .into_iter()
            .filter(|nu| {
                is_compatible_pair_c(lambda, nu, k) && is_compatible_pair_c(nu, mu, k)
            })
            .count() as u64,
    )
}

pub fn intermediate_count_a(lambda: &Partition, mu: &Partition, m: usize) -> Option<u64> {
    if !is_compatible_pair_a(lambda, mu, m) {
        return None;
    }
    Some(
        partitions_between(mu, lambda, None)
            .into_iter()
            .filter(|nu| {
                is_compatible_pair_a(lambda, nu, m) && is_compatible_pair_a(nu, mu, m)
            })
            .count() as u64,
    )
}

pub fn intermediate_count_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> Option<u64> {
    if !is_compatible_pair_d(lambda, mu, k) {
        return None;
    }
    let mut count = 0;
    for shape in partitions_between(&mu.shape, &lambda.shape, Some(k)) {
        for ty in allowed_types(&shape, k) {
            let nu = TypedShape { shape: shape.clone(), ty };
            if is_compatible_pair_d(lambda, &nu, k) && is_compatible_pair_d(&nu, mu, k) {
                count += 1;
            }
        }
    }
    Some(count)
}

/// All compatible pairs (lambda, mu) inside the bound whose skew element
/// is w; an empty result means w is not skew within the bound.
pub fn skew_pairs_c(
    w: &SignedPermutation,
    k: u32,
    bound: &Partition,
) -> Vec<(Partition, Partition)> {
    let lw = w.length();
    let mut out = Vec::new();
    for lambda in k_strict_in(bound, k) {
        if (lambda.size() as usize) < lw {
            continue;
        }
        let wl = match grassmannian_c(&lambda, k) {
            Ok(wl) => wl,
            Err(_) => continue,
        };
        let rest = w.inverse().compose(&wl);
        if rest.length() + lw != lambda.size() as usize {
            continue;
        }
        if let Some(mu) = shape_c(&rest, k) {
            if lambda.contains(&mu) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}

pub fn skew_pairs_a(
    w: &SignedPermutation,
    m: usize,
    bound: &Partition,
) -> Vec<(Partition, Partition)> {
    let lw = w.length();
    let mut out = Vec::new();
    for lambda in partitions_in(bound) {
        if lambda.len() > m || (lambda.size() as usize) < lw {
            continue;
        }
        let wl = match grassmannian_a(&lambda, m) {
            Ok(wl) => wl,
            Err(_) => continue,
        };
        let rest = w.inverse().compose(&wl);
        if rest.length() + lw != lambda.size() as usize {
            continue;
        }
        if let Some((mu, descent)) = shape_a(&rest) {
            // the right factor must be m-Grassmannian (identity allowed)
            if (descent == m || rest.is_identity()) && lambda.contains(&mu) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}

pub fn skew_pairs_d(
    w: &SignedPermutation,
    k: u32,
    bound: &Partition,
) -> Vec<(TypedShape, TypedShape)> {
    let lw = w.length();
    let mut out = Vec::new();
    for lambda in typed_in(bound, k) {
        if (lambda.size() as usize) < lw {
            continue;
        }
        let wl = match grassmannian_d(&lambda, k) {
            Ok(wl) => wl,
            Err(_) => continue,
        };
        let rest = w.inverse().compose(&wl);
        if rest.length() + lw != lambda.size() as usize {
            continue;
        }
        if let Some(mu) = shape_d(&rest, k) {
            if lambda.shape.contains(&mu.shape) {
                out.push((lambda.clone(), mu));
            }
        }
    }
    out
}
