//! Enumeration of bitableaux, tritableaux, and their typed variants, and
//! evaluation of the corresponding weighted sums.
//!
//! Tableaux are represented as chains of nested shapes, one step per
//! alphabet letter processed from the lowest letter upward; the filling
//! is derived. A letter may be absent (an empty step). Bound conditions
//! on marked letters are enforced as explicit per-box filters during the
//! search, never assumed to follow from the strip conditions.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::{Dyadic, Monomial, Polynomial, VariableId};
use crate::shapes::{
    allowed_types, ell_k, grassmannian_a, grassmannian_c, grassmannian_d, is_compatible_pair_a,
    is_compatible_pair_c, is_compatible_pair_d, is_extremal, is_k_horizontal_strip,
    is_typed_k_horizontal_strip, is_typed_x_strip_d, is_typed_y_strip_d, is_x_strip_c,
    is_y_strip_c, n_strip_c, n_strip_d, partitions_between, skew_boxes, Partition, ShapeError,
    ShapeType, TypedShape,
};

/// A letter of one of the ordered alphabets. `Circled` appears only in
/// the typed (type D) alphabet, where `Unmarked(i)` and `Circled(i)`
/// occupy the same rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Letter {
    Primed(u32),
    Unmarked(u32),
    Circled(u32),
    DoublePrimed(u32),
}

impl Letter {
    /// Position in the alphabet order. Primed letters descend with their
    /// value; an unmarked letter and its circled twin share a rank.
    pub fn rank(self) -> (u8, i64) {
        match self {
            Letter::Primed(v) => (0, -(v as i64)),
            Letter::Unmarked(v) | Letter::Circled(v) => (1, v as i64),
            Letter::DoublePrimed(v) => (2, v as i64),
        }
    }

    pub fn is_double_primed(self) -> bool {
        matches!(self, Letter::DoublePrimed(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Primed(v) => write!(f, "{}'", v),
            Letter::Unmarked(v) => write!(f, "{}", v),
            Letter::Circled(v) => write!(f, "{}@", v),
            Letter::DoublePrimed(v) => write!(f, "{}''", v),
        }
    }
}

/// One step of a chain: the letter and the shape reached after placing
/// it (with its type flag on the typed side).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankFill {
    pub letter: Letter,
    pub shape: Partition,
    pub ty: ShapeType,
}

/// Which alphabet a tableau is filled from. In the two-part type A
/// alphabet the unmarked letters carry the (negated) y-variables; in the
/// three-part alphabets they carry z and the double-primed letters carry
/// the negated y.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableauKind {
    TypeA,
    TypeC,
    TypeD,
}

/// A tableau as a chain of nested shapes from the inner shape to the
/// outer shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewTableau {
    pub kind: TableauKind,
    pub inner: Partition,
    pub inner_ty: ShapeType,
    pub ranks: Vec<RankFill>,
    /// Sum of the per-step connected-component statistics over the
    /// unmarked steps; the exponent of 2 in the weight.
    pub n_stat: u32,
}

impl SkewTableau {
    pub fn outer(&self) -> &Partition {
        self.ranks.last().map(|r| &r.shape).unwrap_or(&self.inner)
    }

    /// The derived filling, one letter per skew box.
    pub fn filling(&self) -> Vec<(u32, u32, Letter)> {
        let mut out = Vec::new();
        let mut prev = self.inner.clone();
        for rank in &self.ranks {
            for b in skew_boxes(&rank.shape, &prev) {
                out.push((b.row, b.col, rank.letter));
            }
            prev = rank.shape.clone();
        }
        out.sort_by_key(|&(r, c, _)| (r, c));
        out
    }

    pub fn has_double_primed(&self) -> bool {
        let mut prev_size = self.inner.size();
        for rank in &self.ranks {
            let size = rank.shape.size();
            if size > prev_size && rank.letter.is_double_primed() {
                return true;
            }
            prev_size = size;
        }
        false
    }

    /// The signed weight `(+-2^{n}) * monomial`: primed letters carry x,
    /// double primed letters carry -y, and unmarked or circled letters
    /// carry z (or -y in the two-part type A alphabet).
    pub fn weight(&self) -> (Dyadic, Monomial) {
        let mut factors: Vec<(VariableId, u32)> = Vec::new();
        let mut sign_flips: u32 = 0;
        let mut prev_size = self.inner.size();
        for rank in &self.ranks {
            let size = rank.shape.size();
            let cnt = size - prev_size;
            prev_size = size;
            if cnt == 0 {
                continue;
            }
            let var = match (rank.letter, self.kind) {
                (Letter::Primed(v), _) => VariableId::x(v),
                (Letter::Unmarked(v), TableauKind::TypeA) => {
                    sign_flips += cnt;
                    VariableId::y(v)
                }
                (Letter::Unmarked(v) | Letter::Circled(v), _) => VariableId::z(v),
                (Letter::DoublePrimed(v), _) => {
                    sign_flips += cnt;
                    VariableId::y(v)
                }
            };
            factors.push((var, cnt));
        }
        let mut coeff = Dyadic::pow2(self.n_stat as i64);
        if sign_flips % 2 == 1 {
            coeff = coeff.neg();
        }
        (coeff, Monomial::from_factors(factors))
    }

    pub fn weight_polynomial(&self) -> Polynomial {
        let (c, m) = self.weight();
        Polynomial::from_term(m, c)
    }

    /// Text rendering: one row per line, inner boxes as dots.
    pub fn render(&self) -> String {
        use core::fmt::Write;
        let outer = self.outer().clone();
        let mut grid: BTreeMap<(u32, u32), Letter> = BTreeMap::new();
        for (r, c, l) in self.filling() {
            grid.insert((r, c), l);
        }
        let mut s = String::new();
        for r in 1..=outer.len() as u32 {
            if r > 1 {
                s.push('\n');
            }
            for c in 1..=outer.part(r as usize) {
                if c > 1 {
                    s.push(' ');
                }
                if c <= self.inner.part(r as usize) {
                    s.push('.');
                } else {
                    write!(s, "{}", grid[&(r, c)]).expect("box is filled");
                }
            }
        }
        s
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableauError {
    Shape(ShapeError),
    /// (lambda, mu) is not a compatible pair.
    NotCompatible,
    /// The outer element does not fit in the requested rank.
    RankTooSmall,
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauError::Shape(e) => write!(f, "{}", e),
            TableauError::NotCompatible => write!(f, "shapes do not form a compatible pair"),
            TableauError::RankTooSmall => write!(f, "rank n is too small for the outer shape"),
        }
    }
}

impl From<ShapeError> for TableauError {
    fn from(e: ShapeError) -> Self {
        TableauError::Shape(e)
    }
}

// ---------------------------------------------------------------------
// Bound filters on marked letters
// ---------------------------------------------------------------------

struct MarkedBounds {
    k: u32,
    /// per row r <= ell_k(mu): least admissible rank
    row_lo: Vec<(u8, i64)>,
    /// per row r <= ell_k(lambda): greatest admissible rank
    row_hi: Vec<(u8, i64)>,
    /// per column c in 1..=k
    col_lo: Vec<(u8, i64)>,
    col_hi: Vec<(u8, i64)>,
}

impl MarkedBounds {
    fn box_ok(&self, letter: Letter, row: u32, col: u32) -> bool {
        let rank = letter.rank();
        if (row as usize) <= self.row_lo.len() && rank < self.row_lo[row as usize - 1] {
            return false;
        }
        if (row as usize) <= self.row_hi.len() && rank > self.row_hi[row as usize - 1] {
            return false;
        }
        if col <= self.k {
            let idx = col as usize - 1;
            if rank < self.col_lo[idx] || rank > self.col_hi[idx] {
                return false;
            }
        }
        true
    }

    fn for_c(lambda: &Partition, mu: &Partition, k: u32) -> Result<Self, TableauError> {
        let w_mu = grassmannian_c(mu, k)?;
        let w_la = grassmannian_c(lambda, k)?;
        let row_lo = (1..=ell_k(mu, k))
            .map(|i| Letter::Primed(mu.part(i) - k).rank())
            .collect();
        let row_hi = (1..=ell_k(lambda, k))
            .map(|i| Letter::DoublePrimed(lambda.part(i) - k - 1).rank())
            .collect();
        // column c corresponds to j = k + 1 - c
        let col_lo = (1..=k)
            .map(|c| {
                let j = (k + 1 - c) as i32;
                Letter::Primed(w_mu.value(j) as u32).rank()
            })
            .collect();
        let col_hi = (1..=k)
            .map(|c| {
                let j = (k + 1 - c) as i32;
                Letter::DoublePrimed((w_la.value(j) - 1) as u32).rank()
            })
            .collect();
        Ok(MarkedBounds { k, row_lo, row_hi, col_lo, col_hi })
    }

    fn for_d(lambda: &TypedShape, mu: &TypedShape, k: u32) -> Result<Self, TableauError> {
        let w_mu = grassmannian_d(mu, k)?;
        let w_la = grassmannian_d(lambda, k)?;
        let row_lo = (1..=ell_k(&mu.shape, k))
            .map(|i| Letter::Primed(mu.shape.part(i) - k + 1).rank())
            .collect();
        let row_hi = (1..=ell_k(&lambda.shape, k))
            .map(|i| Letter::DoublePrimed(lambda.shape.part(i) - k).rank())
            .collect();
        let col_lo = (1..=k)
            .map(|c| {
                let j = (k + 1 - c) as i32;
                Letter::Primed(w_mu.value(j).unsigned_abs()).rank()
            })
            .collect();
        // the upper bound letter is one less than the absolute value of
        // the window entry: a later y-phase letter p'' can only lower
        // |w(j)| from p+1, never raise it
        let col_hi = (1..=k)
            .map(|c| {
                let j = (k + 1 - c) as i32;
                Letter::DoublePrimed(w_la.value(j).unsigned_abs() - 1).rank()
            })
            .collect();
        Ok(MarkedBounds { k, row_lo, row_hi, col_lo, col_hi })
    }

    /// Type A interval condition: row r entries lie in
    /// `[(mu_r + m + 1 - r)', lambda_r + m - r]`.
    fn for_a(lambda: &Partition, mu: &Partition, m: usize) -> Self {
        let rows = lambda.len();
        let row_lo = (1..=rows)
            .map(|r| Letter::Primed(mu.part(r) + m as u32 + 1 - r as u32).rank())
            .collect();
        let row_hi = (1..=rows)
            .map(|r| Letter::Unmarked(lambda.part(r) + m as u32 - r as u32).rank())
            .collect();
        MarkedBounds { k: 0, row_lo, row_hi, col_lo: Vec::new(), col_hi: Vec::new() }
    }
}

// ---------------------------------------------------------------------
// Type A bitableaux
// ---------------------------------------------------------------------

fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    (1..=lambda.len()).all(|r| lambda.part(r + 1) <= mu.part(r))
}

fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    (1..=lambda.len()).all(|r| lambda.part(r) - mu.part(r) <= 1)
}

/// Visits every m-bitableau of shape lambda/mu with alphabet determined
/// by n: primed letters fill horizontal strips, unmarked letters fill
/// vertical strips, and the per-row interval condition is enforced.
pub fn for_each_bitableau(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    if !lambda.contains(mu) {
        return Err(TableauError::Shape(ShapeError::NotContained));
    }
    if lambda.len() > m {
        return Err(TableauError::Shape(ShapeError::TooLong));
    }
    if !is_compatible_pair_a(lambda, mu, m) {
        return Err(TableauError::NotCompatible);
    }
    if !grassmannian_a(lambda, m)?.fits_rank(n) {
        return Err(TableauError::RankTooSmall);
    }
    let bounds = MarkedBounds::for_a(lambda, mu, m);
    let mut letters: Vec<Letter> = Vec::new();
    for p in (1..n as u32).rev() {
        letters.push(Letter::Primed(p));
    }
    for p in 1..n as u32 {
        letters.push(Letter::Unmarked(p));
    }
    let mut ranks: Vec<RankFill> = Vec::new();
    dfs_a(lambda, &letters, &bounds, 0, mu.clone(), mu, &mut ranks, f);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn dfs_a(
    lambda: &Partition,
    letters: &[Letter],
    bounds: &MarkedBounds,
    idx: usize,
    cur: Partition,
    inner: &Partition,
    ranks: &mut Vec<RankFill>,
    f: &mut dyn FnMut(&SkewTableau),
) {
    if idx == letters.len() {
        if &cur == lambda {
            let t = SkewTableau {
                kind: TableauKind::TypeA,
                inner: inner.clone(),
                inner_ty: ShapeType::Zero,
                ranks: ranks.clone(),
                n_stat: 0,
            };
            f(&t);
        }
        return;
    }
    let letter = letters[idx];
    for cand in partitions_between(&cur, lambda, None) {
        if cand != cur {
            let strip_ok = match letter {
                Letter::Primed(_) => is_horizontal_strip(&cand, &cur),
                _ => is_vertical_strip(&cand, &cur),
            };
            if !strip_ok {
                continue;
            }
            if skew_boxes(&cand, &cur)
                .iter()
                .any(|b| !bounds.box_ok(letter, b.row, b.col))
            {
                continue;
            }
        }
        ranks.push(RankFill { letter, shape: cand.clone(), ty: ShapeType::Zero });
        dfs_a(lambda, letters, bounds, idx + 1, cand, inner, ranks, f);
        ranks.pop();
    }
}

// ---------------------------------------------------------------------
// Type C tritableaux (and mixed variants)
// ---------------------------------------------------------------------

struct TritCParams<'a> {
    lambda: &'a Partition,
    k: u32,
    letters: Vec<Letter>,
    bounds: Option<MarkedBounds>,
}

#[allow(clippy::too_many_arguments)]
fn dfs_c(
    p: &TritCParams,
    idx: usize,
    cur: Partition,
    n_acc: u32,
    inner: &Partition,
    ranks: &mut Vec<RankFill>,
    f: &mut dyn FnMut(&SkewTableau),
) {
    if idx == p.letters.len() {
        if &cur == p.lambda {
            let t = SkewTableau {
                kind: TableauKind::TypeC,
                inner: inner.clone(),
                inner_ty: ShapeType::Zero,
                ranks: ranks.clone(),
                n_stat: n_acc,
            };
            f(&t);
        }
        return;
    }
    let letter = p.letters[idx];
    for cand in partitions_between(&cur, p.lambda, Some(p.k)) {
        let mut n_add = 0;
        if cand != cur {
            let strip_ok = match letter {
                Letter::Primed(_) => is_x_strip_c(&cand, &cur, p.k),
                Letter::Unmarked(_) | Letter::Circled(_) => {
                    is_k_horizontal_strip(&cand, &cur, p.k)
                }
                Letter::DoublePrimed(_) => is_y_strip_c(&cand, &cur, p.k),
            };
            if !strip_ok {
                continue;
            }
            if let Some(bounds) = &p.bounds {
                if skew_boxes(&cand, &cur)
                    .iter()
                    .any(|b| !bounds.box_ok(letter, b.row, b.col))
                {
                    continue;
                }
            }
            if matches!(letter, Letter::Unmarked(_)) {
                n_add = n_strip_c(&cand, &cur, p.k);
            }
        }
        ranks.push(RankFill { letter, shape: cand.clone(), ty: ShapeType::Zero });
        dfs_c(p, idx + 1, cand, n_acc + n_add, inner, ranks, f);
        ranks.pop();
    }
}

fn trit_c_letters(n_x: usize, m: usize, n_y: usize) -> Vec<Letter> {
    let mut letters = Vec::new();
    for p in (1..=n_x as u32).rev() {
        letters.push(Letter::Primed(p));
    }
    for j in 1..=m as u32 {
        letters.push(Letter::Unmarked(j));
    }
    for p in 1..=n_y as u32 {
        letters.push(Letter::DoublePrimed(p));
    }
    letters
}

#[allow(clippy::too_many_arguments)]
fn trit_c_core(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    n_x: usize,
    m: usize,
    n_y: usize,
    bounds: Option<MarkedBounds>,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    if !lambda.is_k_strict(k) || !mu.is_k_strict(k) {
        return Err(TableauError::Shape(ShapeError::NotKStrict));
    }
    if !lambda.contains(mu) {
        return Err(TableauError::Shape(ShapeError::NotContained));
    }
    if !is_compatible_pair_c(lambda, mu, k) {
        return Err(TableauError::NotCompatible);
    }
    let params = TritCParams { lambda, k, letters: trit_c_letters(n_x, m, n_y), bounds };
    let mut ranks = Vec::new();
    dfs_c(&params, 0, mu.clone(), 0, mu, &mut ranks, f);
    Ok(())
}

/// Visits every k-tritableau of shape lambda/mu over the alphabet of
/// rank n with unmarked letters up to m.
pub fn for_each_tritableau_c(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    n: usize,
    m: usize,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    if !grassmannian_c(lambda, k)?.fits_rank(n) {
        return Err(TableauError::RankTooSmall);
    }
    let bounds = MarkedBounds::for_c(lambda, mu, k)?;
    trit_c_core(lambda, mu, k, n - 1, m, n - 1, Some(bounds), f)
}

/// Visits every k-tableau chain with unmarked letters up to m (empty
/// steps allowed).
pub fn for_each_k_tableau(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    m: usize,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    trit_c_core(lambda, mu, k, 0, m, 0, None, f)
}

// ---------------------------------------------------------------------
// Type D typed tritableaux (and mixed variants)
// ---------------------------------------------------------------------

struct TritDParams<'a> {
    lambda: &'a TypedShape,
    k: u32,
    letters: Vec<Letter>,
    bounds: Option<MarkedBounds>,
    /// Whether letters other than 1' and 1'' must fill non-extremal
    /// strips (dropped for the mixed Stanley variant).
    enforce_nonextremal: bool,
}

#[allow(clippy::too_many_arguments)]
fn dfs_d(
    p: &TritDParams,
    idx: usize,
    cur: TypedShape,
    n_acc: u32,
    inner: &TypedShape,
    ranks: &mut Vec<RankFill>,
    f: &mut dyn FnMut(&SkewTableau),
) {
    if idx == p.letters.len() {
        if &cur == p.lambda {
            let t = SkewTableau {
                kind: TableauKind::TypeD,
                inner: inner.shape.clone(),
                inner_ty: inner.ty,
                ranks: ranks.clone(),
                n_stat: n_acc,
            };
            f(&t);
        }
        return;
    }
    let letter = p.letters[idx];
    for shape in partitions_between(&cur.shape, &p.lambda.shape, Some(p.k)) {
        for ty in allowed_types(&shape, p.k) {
            let cand = TypedShape { shape: shape.clone(), ty };
            let mut n_add = 0;
            let mut letter_here = letter;
            if cand != cur {
                let strip_ok = match letter {
                    Letter::Primed(v) => {
                        is_typed_x_strip_d(&cand, &cur, p.k)
                            && (v < 2
                                || !p.enforce_nonextremal
                                || !is_extremal(&cand, &cur, p.k))
                    }
                    Letter::Unmarked(_) | Letter::Circled(_) => {
                        is_typed_k_horizontal_strip(&cand, &cur, p.k)
                    }
                    Letter::DoublePrimed(v) => {
                        is_typed_y_strip_d(&cand, &cur, p.k)
                            && (v < 2
                                || !p.enforce_nonextremal
                                || !is_extremal(&cand, &cur, p.k))
                    }
                };
                if !strip_ok {
                    continue;
                }
                if let Some(bounds) = &p.bounds {
                    if skew_boxes(&cand.shape, &cur.shape)
                        .iter()
                        .any(|b| !bounds.box_ok(letter, b.row, b.col))
                    {
                        continue;
                    }
                }
                if matches!(letter, Letter::Unmarked(_) | Letter::Circled(_)) {
                    n_add = n_strip_d(&cand, &cur, p.k);
                }
            }
            // unmarked symbols circle exactly when the reached shape has
            // type two
            if let Letter::Unmarked(v) = letter {
                if cand.ty == ShapeType::Two {
                    letter_here = Letter::Circled(v);
                }
            }
            ranks.push(RankFill { letter: letter_here, shape: cand.shape.clone(), ty: cand.ty });
            dfs_d(p, idx + 1, cand, n_acc + n_add, inner, ranks, f);
            ranks.pop();
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn trit_d_core(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    n_x: usize,
    m: usize,
    n_y: usize,
    bounds: Option<MarkedBounds>,
    enforce_nonextremal: bool,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    if k == 0 {
        return Err(TableauError::Shape(ShapeError::InvalidType));
    }
    TypedShape::new(lambda.shape.clone(), lambda.ty, k)?;
    TypedShape::new(mu.shape.clone(), mu.ty, k)?;
    if !lambda.shape.contains(&mu.shape) {
        return Err(TableauError::Shape(ShapeError::NotContained));
    }
    if !is_compatible_pair_d(lambda, mu, k) {
        return Err(TableauError::NotCompatible);
    }
    let params = TritDParams {
        lambda,
        k,
        letters: trit_c_letters(n_x, m, n_y),
        bounds,
        enforce_nonextremal,
    };
    let mut ranks = Vec::new();
    dfs_d(&params, 0, mu.clone(), 0, mu, &mut ranks, f);
    Ok(())
}

/// Visits every typed k'-tritableau of shape lambda/mu over the rank-n
/// alphabet with unmarked letters up to m.
pub fn for_each_tritableau_d(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    n: usize,
    m: usize,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    if !grassmannian_d(lambda, k)?.fits_rank(n) {
        return Err(TableauError::RankTooSmall);
    }
    let bounds = MarkedBounds::for_d(lambda, mu, k)?;
    trit_d_core(lambda, mu, k, n - 1, m, n - 1, Some(bounds), true, f)
}

/// Visits every typed k'-tableau chain with letters up to m.
pub fn for_each_typed_k_tableau(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    m: usize,
    f: &mut dyn FnMut(&SkewTableau),
) -> Result<(), TableauError> {
    trit_d_core(lambda, mu, k, 0, m, 0, None, true, f)
}

// ---------------------------------------------------------------------
// Collected enumerations and weighted sums
// ---------------------------------------------------------------------

pub fn bitableaux(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
) -> Result<Vec<SkewTableau>, TableauError> {
    let mut out = Vec::new();
    for_each_bitableau(lambda, mu, m, n, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

pub fn tritableaux_c(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    n: usize,
    m: usize,
) -> Result<Vec<SkewTableau>, TableauError> {
    let mut out = Vec::new();
    for_each_tritableau_c(lambda, mu, k, n, m, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

pub fn tritableaux_d(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    n: usize,
    m: usize,
) -> Result<Vec<SkewTableau>, TableauError> {
    let mut out = Vec::new();
    for_each_tritableau_d(lambda, mu, k, n, m, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// All k-tableau chains with letters up to max_rank.
pub fn k_tableaux(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    max_rank: usize,
) -> Result<Vec<SkewTableau>, TableauError> {
    let mut out = Vec::new();
    for_each_k_tableau(lambda, mu, k, max_rank, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// All typed k'-tableau chains with letters up to max_rank.
pub fn typed_k_tableaux(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    max_rank: usize,
) -> Result<Vec<SkewTableau>, TableauError> {
    let mut out = Vec::new();
    for_each_typed_k_tableau(lambda, mu, k, max_rank, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

fn sum_weights(
    visit: impl FnOnce(&mut dyn FnMut(&SkewTableau)) -> Result<(), TableauError>,
) -> Result<Polynomial, TableauError> {
    let mut acc = Polynomial::zero();
    visit(&mut |t: &SkewTableau| {
        let (c, m) = t.weight();
        acc.add_term(m, c);
    })?;
    Ok(acc)
}

/// The type A sum over m-bitableaux: the double Schubert polynomial of
/// the skew permutation of (lambda, mu).
pub fn tableau_schur(
    lambda: &Partition,
    mu: &Partition,
    m: usize,
    n: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| for_each_bitableau(lambda, mu, m, n, f))
}

/// The type C sum over k-tritableaux: the double Schubert polynomial of
/// the skew element of (lambda, mu), z-truncated to m variables.
pub fn tableau_theta(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    n: usize,
    m: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| for_each_tritableau_c(lambda, mu, k, n, m, f))
}

/// The type D sum over typed k'-tritableaux.
pub fn tableau_eta(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    n: usize,
    m: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| for_each_tritableau_d(lambda, mu, k, n, m, f))
}

/// The type C Stanley function by k-tableau enumeration.
pub fn stanley_f_tableau(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    m: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| for_each_k_tableau(lambda, mu, k, m, f))
}

/// The type D Stanley function by typed k'-tableau enumeration.
pub fn stanley_e_tableau(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    m: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| for_each_typed_k_tableau(lambda, mu, k, m, f))
}

/// The type C double mixed Stanley function: the tritableau sum with the
/// alphabet extended, entry bounds dropped, and the primed/double-primed
/// ranks truncated to m_x and m_y.
pub fn mixed_stanley_c(
    lambda: &Partition,
    mu: &Partition,
    k: u32,
    m_x: usize,
    m_z: usize,
    m_y: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| trit_c_core(lambda, mu, k, m_x, m_z, m_y, None, f))
}

/// The type D double mixed Stanley function: bounds and the non-extremal
/// condition dropped.
pub fn mixed_stanley_d(
    lambda: &TypedShape,
    mu: &TypedShape,
    k: u32,
    m_x: usize,
    m_z: usize,
    m_y: usize,
) -> Result<Polynomial, TableauError> {
    sum_weights(|f| trit_d_core(lambda, mu, k, m_x, m_z, m_y, None, false, f))
}

// ---------------------------------------------------------------------
// Determinant cross-check for double Schur polynomials
// ---------------------------------------------------------------------

/// Single Schur polynomial in x_1..x_m by semistandard tableau
/// enumeration; independent of the bitableau path.
fn schur_single(mu: &Partition, m: usize) -> Polynomial {
    if mu.len() > m {
        return Polynomial::zero();
    }
    fn rec(
        mu: &Partition,
        m: usize,
        r: usize,
        rows: &mut Vec<Vec<u32>>,
        acc: &mut Polynomial,
    ) {
        if r > mu.len() {
            let mut factors = Vec::new();
            for row in rows.iter() {
                for &v in row {
                    factors.push((VariableId::x(v), 1));
                }
            }
            acc.add_term(Monomial::from_factors(factors), Dyadic::one());
            return;
        }
        let width = mu.part(r) as usize;
        fn fill(
            mu: &Partition,
            m: usize,
            r: usize,
            c: usize,
            width: usize,
            rows: &mut Vec<Vec<u32>>,
            acc: &mut Polynomial,
        ) {
            if c == width {
                rec(mu, m, r + 1, rows, acc);
                return;
            }
            let above = if r > 1 && c < mu.part(r - 1) as usize {
                rows[r - 2][c]
            } else {
                0
            };
            let left = if c > 0 { rows[r - 1][c - 1] } else { 1 };
            let lo = left.max(above + 1);
            for v in lo..=m as u32 {
                rows[r - 1].push(v);
                fill(mu, m, r, c + 1, width, rows, acc);
                rows[r - 1].pop();
            }
        }
        rows.push(Vec::new());
        fill(mu, m, r, 0, width, rows, acc);
        rows.pop();
    }
    let mut acc = Polynomial::zero();
    rec(mu, m, 1, &mut Vec::new(), &mut acc);
    acc
}

/// Elementary symmetric polynomial e_p in -y_1, ..., -y_r.
fn elementary_neg_y(p: i64, r: i64) -> Polynomial {
    if p < 0 || p > r.max(0) {
        return Polynomial::zero();
    }
    let p = p as usize;
    let r = r as usize;
    let mut table: Vec<Polynomial> = Vec::new();
    for d in 0..=p {
        table.push(if d == 0 { Polynomial::one() } else { Polynomial::zero() });
    }
    for i in 1..=r as u32 {
        let neg_y = Polynomial::y(i).neg();
        for d in (1..=p).rev() {
            let bump = table[d - 1].mul(&neg_y);
            table[d] = table[d].add(&bump);
        }
    }
    table.swap_remove(p)
}

fn determinant(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    fn rec(matrix: &[Vec<Polynomial>], used: &mut Vec<bool>, row: usize, sign: bool) -> Polynomial {
        let n = matrix.len();
        if row == n {
            return if sign { Polynomial::one().neg() } else { Polynomial::one() };
        }
        let mut acc = Polynomial::zero();
        let mut parity = 0;
        for col in 0..n {
            if used[col] {
                continue;
            }
            if !matrix[row][col].is_zero() {
                used[col] = true;
                let sub = rec(matrix, used, row + 1, sign ^ (parity % 2 == 1));
                acc = acc.add(&matrix[row][col].mul(&sub));
                used[col] = false;
            }
            parity += 1;
        }
        acc
    }
    let _ = n;
    rec(matrix, &mut alloc::vec![false; matrix.len()], 0, false)
}

/// The classical expansion of the double Schur polynomial: a sum over
/// inner shapes of single Schur polynomials times determinants in
/// elementary symmetric polynomials of negated y-variables.
pub fn double_schur_determinant(
    lambda: &Partition,
    m: usize,
) -> Result<Polynomial, TableauError> {
    if lambda.len() > m {
        return Err(TableauError::Shape(ShapeError::TooLong));
    }
    let mut acc = Polynomial::zero();
    for mu in partitions_between(&Partition::empty(), lambda, None) {
        let mut matrix = Vec::new();
        for i in 1..=m {
            let mut row = Vec::new();
            for j in 1..=m {
                let p = lambda.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
                let r = lambda.part(i) as i64 + m as i64 - i as i64;
                row.push(elementary_neg_y(p, r));
            }
            matrix.push(row);
        }
        let det = determinant(&matrix);
        acc = acc.add(&schur_single(&mu, m).mul(&det));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nilcoxeter::{schubert_a, stanley_f};
    use crate::shapes::parse_partition;
    use alloc::vec;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn empty_shape_single_tableau() {
        let lam = p("2,1");
        let ts = tritableaux_c(&lam, &lam, 1, 3, 2).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(
            tableau_theta(&lam, &lam, 1, 3, 2).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn single_box_bitableaux() {
        // lambda=(1), mu=empty, m=1, n=2: fillings {1'} and {1}
        let ts = bitableaux(&p("1"), &Partition::empty(), 1, 2).unwrap();
        assert_eq!(ts.len(), 2);
        let sum = tableau_schur(&p("1"), &Partition::empty(), 1, 2).unwrap();
        assert_eq!(sum, Polynomial::x(1).sub(&Polynomial::y(1)));
    }

    #[test]
    fn row_of_two_double_schur() {
        // s_(2)(x_1, Y) = (x_1 - y_1)(x_1 - y_2)
        let sum = tableau_schur(&p("2"), &Partition::empty(), 1, 3).unwrap();
        let expect = Polynomial::x(1)
            .sub(&Polynomial::y(1))
            .mul(&Polynomial::x(1).sub(&Polynomial::y(2)));
        assert_eq!(sum, expect);
    }

    #[test]
    fn bitableau_matches_nilcoxeter_small() {
        // lambda=(2,1), mu=empty, m=2: equals the type A polynomial of
        // the 2-Grassmannian permutation (2,4,1,3)
        let lam = p("2,1");
        let w = grassmannian_a(&lam, 2).unwrap();
        let n = w.min_rank();
        let lhs = tableau_schur(&lam, &Partition::empty(), 2, n).unwrap();
        let rhs = schubert_a(&w, n).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn k_tableau_stanley_small() {
        // k=0, lambda=(1): F = 2 z_1 at m=1
        let f = stanley_f_tableau(&p("1"), &Partition::empty(), 0, 1).unwrap();
        assert_eq!(f, Polynomial::z(1).scale_pow2(1));
        // trivial chain
        let lam = p("2,1");
        assert_eq!(
            stanley_f_tableau(&lam, &lam, 1, 2).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn stanley_tableau_matches_nilcoxeter() {
        let lam = p("3,1");
        let f = stanley_f_tableau(&lam, &Partition::empty(), 1, 2).unwrap();
        let w = grassmannian_c(&lam, 1).unwrap();
        assert_eq!(f, stanley_f(&w, 2).unwrap());
    }

    #[test]
    fn mixed_with_no_marked_ranks_is_stanley() {
        let lam = p("3,1");
        let j = mixed_stanley_c(&lam, &Partition::empty(), 1, 0, 2, 0).unwrap();
        let f = stanley_f_tableau(&lam, &Partition::empty(), 1, 2).unwrap();
        assert_eq!(j, f);
    }

    #[test]
    fn determinant_formula_base_cases() {
        assert_eq!(
            double_schur_determinant(&Partition::empty(), 1).unwrap(),
            Polynomial::one()
        );
        let d = double_schur_determinant(&p("1"), 1).unwrap();
        assert_eq!(d, Polynomial::x(1).sub(&Polynomial::y(1)));
    }

    #[test]
    fn incompatible_pair_is_an_error() {
        // ((3,1),(3)) is not compatible at k=1
        let err = tableau_theta(&p("3,1"), &p("3"), 1, 3, 2);
        assert_eq!(err, Err(TableauError::NotCompatible));
    }

    #[test]
    fn render_has_dots_for_inner_boxes() {
        let lam = p("2,1");
        let mu = p("1");
        let ts = tritableaux_c(&lam, &mu, 1, 3, 1).unwrap();
        assert!(!ts.is_empty());
        for t in &ts {
            let text = t.render();
            assert!(text.starts_with('.'));
        }
    }

    #[test]
    fn weight_signs_come_from_double_primes() {
        let lam = p("1");
        let ts = bitableaux(&lam, &Partition::empty(), 1, 2).unwrap();
        let mut signs = vec![];
        for t in &ts {
            let (c, _) = t.weight();
            signs.push(c.is_negative());
        }
        signs.sort();
        assert_eq!(signs, vec![false, true]);
    }
}
