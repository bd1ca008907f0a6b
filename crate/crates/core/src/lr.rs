//! Semistandard and Littlewood-Richardson enumeration, the repositioning map
//! `Rp`, the `Opp` map, marked tableaux and pictures.
//!
//! Tableau entries in the odd alphabet are `m+1, …, m+n`. Pictures are
//! offset-free: a picture is a bare cell bijection.

use crate::shapes::{conjugate, contains, Cell, HookSplit, Partition, ShapeError, SkewShape};
use crate::tableaux::{
    canonical_row, is_anti_semistandard, is_lattice, is_semistandard, is_shifted_yamanouchi,
    place_word, reading_cells, row_word, SkewTableau, TableauError,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// Errors raised by the LR engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LrError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("row {row} of the target shape overflows its capacity {capacity}")]
    ShapeOverflow { row: usize, capacity: usize },
    #[error("content mismatch: {0}")]
    ContentMismatch(String),
    #[error("row counts {0:?} do not form a partition")]
    NotAPartition(Vec<usize>),
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("the tableau pair is not marked")]
    NotMarked,
    #[error("claim violated: {0}")]
    ClaimViolation(String),
}

/// A bijection between the cells of two skew diagrams.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellBijection {
    domain: SkewShape,
    image: SkewShape,
    #[serde(with = "pair_list")]
    forward: BTreeMap<Cell, Cell>,
}

mod pair_list {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<Cell, Cell>, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(Cell, Cell)> = m.iter().map(|(a, b)| (*a, *b)).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Cell, Cell>, D::Error> {
        let v: Vec<(Cell, Cell)> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

impl CellBijection {
    /// Validates that `pairs` is a bijection between the cells of the two shapes.
    pub fn new(
        domain: SkewShape,
        image: SkewShape,
        pairs: impl IntoIterator<Item = (Cell, Cell)>,
    ) -> Result<Self, LrError> {
        let forward: BTreeMap<Cell, Cell> = pairs.into_iter().collect();
        let dom: BTreeSet<Cell> = domain.cells().into_iter().collect();
        let img: BTreeSet<Cell> = image.cells().into_iter().collect();
        let keys: BTreeSet<Cell> = forward.keys().copied().collect();
        let vals: BTreeSet<Cell> = forward.values().copied().collect();
        if keys != dom {
            return Err(LrError::NotBijective(format!(
                "domain cells differ from {domain}"
            )));
        }
        if vals != img || vals.len() != forward.len() {
            return Err(LrError::NotBijective(format!(
                "image cells differ from {image}"
            )));
        }
        Ok(CellBijection {
            domain,
            image,
            forward,
        })
    }

    pub fn domain(&self) -> &SkewShape {
        &self.domain
    }

    pub fn image(&self) -> &SkewShape {
        &self.image
    }

    pub fn apply(&self, c: Cell) -> Cell {
        self.forward[&c]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.forward.iter().map(|(a, b)| (*a, *b))
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn inverse(&self) -> CellBijection {
        CellBijection {
            domain: self.image.clone(),
            image: self.domain.clone(),
            forward: self.forward.iter().map(|(a, b)| (*b, *a)).collect(),
        }
    }
}

/// A tableau `T⁺`, its repositioned companion `T⁻` and the map `Rpos` between them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedPair {
    pub t_plus: SkewTableau,
    pub t_minus: SkewTableau,
    pub rpos: CellBijection,
}

#[derive(Serialize, Deserialize)]
struct MarkedPairJson {
    t_plus: SkewTableau,
    t_minus: SkewTableau,
    rpos: Vec<(Cell, Cell)>,
}

impl Serialize for MarkedPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MarkedPairJson {
            t_plus: self.t_plus.clone(),
            t_minus: self.t_minus.clone(),
            rpos: self.rpos.pairs().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkedPair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let js = MarkedPairJson::deserialize(d)?;
        let rpos = CellBijection::new(
            js.t_plus.shape().clone(),
            js.t_minus.shape().clone(),
            js.rpos,
        )
        .map_err(serde::de::Error::custom)?;
        Ok(MarkedPair {
            t_plus: js.t_plus,
            t_minus: js.t_minus,
            rpos,
        })
    }
}

/// All semistandard fillings of `shape` with `content[s-1]` copies of `s`,
/// sorted by reading word.
pub fn enumerate_ssyt(shape: &SkewShape, content: &[usize]) -> Vec<SkewTableau> {
    let cells = shape.cells();
    if content.iter().sum::<usize>() != cells.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t = SkewTableau::from_fn(shape.clone(), |_| 1);
    let mut remaining = content.to_vec();
    fn rec(
        k: usize,
        cells: &[Cell],
        t: &mut SkewTableau,
        remaining: &mut [usize],
        out: &mut Vec<SkewTableau>,
    ) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let c = cells[k];
        let lo_left = if c.col > 1 && t.shape().contains_cell(Cell::new(c.row, c.col - 1)) {
            t.at(Cell::new(c.row, c.col - 1))
        } else {
            1
        };
        let lo_above = if c.row > 1 && t.shape().contains_cell(Cell::new(c.row - 1, c.col)) {
            t.at(Cell::new(c.row - 1, c.col)) + 1
        } else {
            1
        };
        for s in lo_left.max(lo_above)..=remaining.len() {
            if remaining[s - 1] == 0 {
                continue;
            }
            remaining[s - 1] -= 1;
            t.set(c, s);
            rec(k + 1, cells, t, remaining, out);
            remaining[s - 1] += 1;
        }
    }
    rec(0, &cells, &mut t, &mut remaining, &mut out);
    out.sort_by_cached_key(row_word);
    out
}

/// Littlewood-Richardson tableaux of shape `alpha/beta` and content `gamma`,
/// sorted by reading word.
pub fn lr_tableaux(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Vec<SkewTableau> {
    if !contains(alpha, beta) {
        return Vec::new();
    }
    let shape = SkewShape::new(alpha.clone(), beta.clone()).expect("containment checked");
    enumerate_ssyt(&shape, gamma.parts())
        .into_iter()
        .filter(|t| is_lattice(&row_word(t), 0))
        .collect()
}

/// `C^α_{β,γ}`: the number of semistandard fillings of `α/β` with content `γ`
/// whose reading word is a lattice word.
///
/// Cells are filled in reading order so that the lattice condition prunes
/// partial fillings.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if !contains(alpha, beta) || alpha.size() != beta.size() + gamma.size() {
        return 0;
    }
    let shape = SkewShape::new(alpha.clone(), beta.clone()).expect("containment checked");
    let cells = reading_cells(&shape);
    let mut t = SkewTableau::from_fn(shape, |_| 1);
    let mut used = vec![0usize; gamma.len() + 1];
    fn rec(
        k: usize,
        cells: &[Cell],
        t: &mut SkewTableau,
        used: &mut [usize],
        gamma: &Partition,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let c = cells[k];
        let right = Cell::new(c.row, c.col + 1);
        let hi = if t.shape().contains_cell(right) {
            t.at(right)
        } else {
            gamma.len()
        };
        let above = Cell::new(c.row.saturating_sub(1), c.col);
        let lo = if c.row > 1 && t.shape().contains_cell(above) {
            t.at(above) + 1
        } else {
            1
        };
        let mut total = 0;
        for s in lo..=hi {
            if used[s] == gamma.part(s) || (s > 1 && used[s - 1] <= used[s]) {
                continue;
            }
            used[s] += 1;
            t.set(c, s);
            total += rec(k + 1, cells, t, used, gamma);
            used[s] -= 1;
        }
        total
    }
    rec(0, &cells, &mut t, &mut used, gamma)
}

/// Partitions `ν ⊇ ω` with at most `n` parts and `|ν/ω| = size`.
pub fn admissible_nus(omega: &Partition, size: usize, n: usize) -> Vec<Partition> {
    Partition::all_of_size(omega.size() + size, n, usize::MAX)
        .into_iter()
        .filter(|nu| contains(nu, omega))
        .collect()
}

/// The repositioning map: scanning `w(T⁺)` and `z(T⁺)`, the `j`-th
/// occurrence of `m+i` at step `s` places `z_s` at `[i, λ⁻_i + j]` of `T⁻`.
pub fn reposition(
    t_plus: &SkewTableau,
    lambda_minus: &Partition,
    nu: &Partition,
    m: usize,
) -> Result<MarkedPair, LrError> {
    if !contains(nu, lambda_minus) {
        return Err(ShapeError::NotContained {
            outer: nu.clone(),
            inner: lambda_minus.clone(),
        }
        .into());
    }
    let target = SkewShape::new(nu.clone(), lambda_minus.clone())?;
    let cells = reading_cells(t_plus.shape());
    let w = row_word(t_plus);
    let z = place_word(t_plus);
    let mut seen = vec![0usize; nu.len() + 1];
    let mut placed: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut pairs = Vec::with_capacity(cells.len());
    for s in 0..w.len() {
        if w[s] <= m {
            return Err(LrError::ContentMismatch(format!(
                "entry {} is not above m={m}",
                w[s]
            )));
        }
        let i = w[s] - m;
        if i > nu.len() {
            return Err(LrError::ShapeOverflow {
                row: i,
                capacity: 0,
            });
        }
        seen[i] += 1;
        let capacity = nu.part(i) - lambda_minus.part(i);
        if seen[i] > capacity {
            return Err(LrError::ShapeOverflow { row: i, capacity });
        }
        let dest = Cell::new(i, lambda_minus.part(i) + seen[i]);
        placed.insert(dest, z[s]);
        pairs.push((cells[s], dest));
    }
    if placed.len() != target.size() {
        return Err(LrError::ContentMismatch(format!(
            "T⁺ content does not fill {target}: {} of {} cells",
            placed.len(),
            target.size()
        )));
    }
    let t_minus = SkewTableau::from_fn(target.clone(), |c| placed[&c]);
    let rpos = CellBijection::new(t_plus.shape().clone(), target, pairs)?;
    Ok(MarkedPair {
        t_plus: t_plus.clone(),
        t_minus,
        rpos,
    })
}

/// Joins `T⁺` with `L⁻_can` on columns `m+1, …` to form the full tableau `T`.
pub fn assemble(
    t_plus: &SkewTableau,
    lambda_minus: &Partition,
    m: usize,
) -> Result<SkewTableau, LrError> {
    let rows = t_plus.shape().num_rows().max(lambda_minus.len());
    let mut outer = Vec::with_capacity(rows);
    for i in 1..=rows {
        let base = t_plus.shape().outer.part(i);
        if lambda_minus.part(i) > 0 && base != m {
            return Err(LrError::ContentMismatch(format!(
                "row {i} of T⁺ must reach column {m}"
            )));
        }
        outer.push(base + lambda_minus.part(i));
    }
    let shape = SkewShape::new(Partition::new(outer)?, t_plus.shape().inner.clone())?;
    Ok(SkewTableau::from_fn(shape, |c| {
        if c.col > m {
            m + c.row
        } else {
            t_plus.at(c)
        }
    }))
}

/// `T^opp` together with `Oppos`: the `j`-th occurrence of `m+i` in `w(T)` at
/// step `s` places `z_s` at `[i, j]`.
pub fn oppos(t: &SkewTableau, m: usize) -> Result<(SkewTableau, CellBijection), LrError> {
    let cells = reading_cells(t.shape());
    let w = row_word(t);
    let z = place_word(t);
    let mut seen: Vec<usize> = Vec::new();
    let mut placed = BTreeMap::new();
    let mut pairs = Vec::with_capacity(cells.len());
    for s in 0..w.len() {
        if w[s] <= m {
            return Err(LrError::ContentMismatch(format!(
                "entry {} is not above m={m}",
                w[s]
            )));
        }
        let i = w[s] - m;
        if seen.len() < i {
            seen.resize(i, 0);
        }
        seen[i - 1] += 1;
        let dest = Cell::new(i, seen[i - 1]);
        placed.insert(dest, z[s]);
        pairs.push((cells[s], dest));
    }
    let nu = Partition::new(seen.clone()).map_err(|_| LrError::NotAPartition(seen))?;
    let shape = SkewShape::straight(nu);
    let opp = SkewTableau::from_fn(shape.clone(), |c| placed[&c]);
    let map = CellBijection::new(t.shape().clone(), shape, pairs)?;
    Ok((opp, map))
}

/// The tableau `T^opp`.
pub fn opp(t: &SkewTableau, m: usize) -> Result<SkewTableau, LrError> {
    Ok(oppos(t, m)?.0)
}

/// Splits a full tableau `T` into `T⁺` and `λ⁻`, checking that columns past
/// `m` carry the canonical filling.
pub fn split_full(t: &SkewTableau, m: usize) -> Result<(SkewTableau, Partition), LrError> {
    let beyond = t.cells_beyond(m);
    let lambda_minus =
        Partition::new(beyond.clone()).map_err(|_| LrError::NotAPartition(beyond))?;
    for (c, e) in t.iter() {
        if c.col > m && e != m + c.row {
            return Err(LrError::ContentMismatch(format!(
                "cell {c} of the L⁻ part holds {e}"
            )));
        }
    }
    Ok((t.left_part(m), lambda_minus))
}

/// `T` is behaved when `Oppos` restricted to `D⁺` equals `Rpos`.
pub fn is_behaved(t: &SkewTableau, m: usize) -> Result<bool, LrError> {
    let (t_plus, lambda_minus) = split_full(t, m)?;
    let (opp_t, map) = oppos(t, m)?;
    let pair = reposition(&t_plus, &lambda_minus, &opp_t.shape().outer, m)?;
    let behaved = pair.rpos.pairs().all(|(x, y)| map.apply(x) == y);
    Ok(behaved)
}

/// `T⁺` is marked when it is semistandard and `Rp(T⁺)` is anti-semistandard.
/// The equivalent shifted-Yamanouchi route is evaluated as well and a
/// disagreement is reported as a claim violation.
pub fn is_marked(
    t_plus: &SkewTableau,
    lambda_minus: &Partition,
    nu: &Partition,
    m: usize,
) -> Result<bool, LrError> {
    let pair = reposition(t_plus, lambda_minus, nu, m)?;
    marked_pair_check(&pair, lambda_minus, m)
}

fn marked_pair_check(
    pair: &MarkedPair,
    lambda_minus: &Partition,
    m: usize,
) -> Result<bool, LrError> {
    if !is_semistandard(&pair.t_plus) {
        return Ok(false);
    }
    let by_anti = is_anti_semistandard(&pair.t_minus);
    let by_lattice = is_shifted_yamanouchi(&pair.t_plus, lambda_minus, m);
    if by_anti != by_lattice {
        return Err(LrError::ClaimViolation(format!(
            "semistandard {} has anti-semistandard T⁻ = {by_anti} but shifted Yamanouchi = {by_lattice}",
            pair.t_plus
        )));
    }
    Ok(by_anti)
}

/// The shape `(λ⁺)'/μ'` of `T⁺`.
pub fn plus_shape(lambda: &HookSplit, mu: &Partition) -> Result<SkewShape, ShapeError> {
    SkewShape::new(conjugate(&lambda.lambda_plus), conjugate(mu))
}

/// All marked `T⁺` of shape `(λ⁺)'/μ'` and content `(0|ν/ω)`, sorted by reading word.
pub fn enumerate_marked(
    lambda: &HookSplit,
    mu: &Partition,
    nu: &Partition,
) -> Result<Vec<MarkedPair>, LrError> {
    let m = lambda.m;
    let omega = &lambda.lambda_minus;
    if !contains(&lambda.lambda_plus, mu) {
        return Err(ShapeError::NotContained {
            outer: lambda.lambda_plus.clone(),
            inner: mu.clone(),
        }
        .into());
    }
    if !contains(nu, omega) {
        return Err(ShapeError::NotContained {
            outer: nu.clone(),
            inner: omega.clone(),
        }
        .into());
    }
    if nu.len() > lambda.n {
        return Ok(Vec::new());
    }
    let shape = plus_shape(lambda, mu)?;
    let mut content = vec![0usize; m];
    content.extend((1..=lambda.n).map(|j| nu.part(j) - omega.part(j)));
    let mut out = Vec::new();
    for t in enumerate_ssyt(&shape, &content) {
        let pair = reposition(&t, omega, nu, m)?;
        if marked_pair_check(&pair, omega, m)? {
            out.push(pair);
        }
    }
    Ok(out)
}

/// `T` is a Littlewood-Richardson tableau: semistandard with lattice reading word
/// over the odd alphabet.
pub fn is_lr_tableau(t: &SkewTableau, m: usize) -> bool {
    is_semistandard(t) && is_lattice(&row_word(t), m)
}

/// `(i,j) ≤_↖ (i',j')` iff `i ≤ i'` and `j ≤ j'`.
pub fn le_nw(a: Cell, b: Cell) -> bool {
    a.row <= b.row && a.col <= b.col
}

/// `(i,j) ≤_↙ (i',j')` iff `i ≤ i'` and `j ≥ j'`.
pub fn le_sw(a: Cell, b: Cell) -> bool {
    a.row <= b.row && a.col >= b.col
}

/// Both picture conditions: `x ≤_↖ y ⇒ f(x) ≤_↙ f(y)` and `f(x) ≤_↖ f(y) ⇒ x ≤_↙ y`.
pub fn is_picture(f: &CellBijection) -> bool {
    let pairs: Vec<(Cell, Cell)> = f.pairs().collect();
    pairs.iter().all(|&(x, fx)| {
        pairs
            .iter()
            .all(|&(y, fy)| (!le_nw(x, y) || le_sw(fx, fy)) && (!le_nw(fx, fy) || le_sw(x, y)))
    })
}

/// Row reading `E⁺` (row index of `f(x)`) and column reading `E⁻` (column
/// index of `f⁻¹(y)`).
pub fn picture_readings(f: &CellBijection) -> (SkewTableau, SkewTableau) {
    let inv = f.inverse();
    let e_plus = SkewTableau::from_fn(f.domain().clone(), |c| f.apply(c).row);
    let e_minus = SkewTableau::from_fn(f.image().clone(), |c| inv.apply(c).col);
    (e_plus, e_minus)
}

/// All pictures between two skew diagrams, in lexicographic order of images.
pub fn enumerate_pictures(domain: &SkewShape, image: &SkewShape) -> Vec<CellBijection> {
    let dom = domain.cells();
    let img = image.cells();
    if dom.len() != img.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Cell> = Vec::with_capacity(dom.len());
    let mut used = vec![false; img.len()];
    fn rec(
        dom: &[Cell],
        img: &[Cell],
        chosen: &mut Vec<Cell>,
        used: &mut [bool],
        out: &mut Vec<CellBijection>,
        domain: &SkewShape,
        image: &SkewShape,
    ) {
        let k = chosen.len();
        if k == dom.len() {
            let f = CellBijection::new(
                domain.clone(),
                image.clone(),
                dom.iter().copied().zip(chosen.iter().copied()),
            )
            .expect("bijective by construction");
            out.push(f);
            return;
        }
        let x = dom[k];
        for (u, &fx) in img.iter().enumerate() {
            if used[u] {
                continue;
            }
            let ok = (0..k).all(|t| {
                let (y, fy) = (dom[t], chosen[t]);
                (!le_nw(x, y) || le_sw(fx, fy))
                    && (!le_nw(y, x) || le_sw(fy, fx))
                    && (!le_nw(fx, fy) || le_sw(x, y))
                    && (!le_nw(fy, fx) || le_sw(y, x))
            });
            if ok {
                used[u] = true;
                chosen.push(fx);
                rec(dom, img, chosen, used, out, domain, image);
                chosen.pop();
                used[u] = false;
            }
        }
    }
    rec(&dom, &img, &mut chosen, &mut used, &mut out, domain, image);
    out
}

/// The picture attached to a marked pair: its repositioning map.
pub fn marked_to_picture(
    pair: &MarkedPair,
    lambda_minus: &Partition,
    m: usize,
) -> Result<CellBijection, LrError> {
    if !marked_pair_check(pair, lambda_minus, m)? {
        return Err(LrError::NotMarked);
    }
    Ok(pair.rpos.clone())
}

/// The marked pair whose row reading is `f`; fails unless the canonical
/// repositioning map of that reading is `f` itself and the pair is marked.
pub fn picture_to_marked(f: &CellBijection, m: usize) -> Result<MarkedPair, LrError> {
    let (e_plus, _) = picture_readings(f);
    let t_plus = SkewTableau::from_fn(f.domain().clone(), |c| m + e_plus.at(c));
    let lambda_minus = &f.image().inner;
    let pair = reposition(&t_plus, lambda_minus, &f.image().outer, m)?;
    if pair.rpos != *f || !marked_pair_check(&pair, lambda_minus, m)? {
        return Err(LrError::NotMarked);
    }
    Ok(pair)
}

/// Both sides of `C^{λ'}_{μ'ν} = Σ_κ C^{(λ⁺)'}_{μ'κ} C^ν_{ωκ}`.
pub fn lr_sum_identity(lambda: &HookSplit, mu: &Partition, nu: &Partition) -> (u64, u64) {
    let lhs = lr_coefficient(&conjugate(&lambda.lambda()), &conjugate(mu), nu);
    let lp = conjugate(&lambda.lambda_plus);
    let mp = conjugate(mu);
    let size = lambda.lambda_plus.size().saturating_sub(mu.size());
    let rhs = Partition::all_of_size(size, lp.len(), lp.part(1))
        .iter()
        .filter(|kappa| contains(&lp, kappa) && contains(nu, kappa))
        .map(|kappa| {
            lr_coefficient(&lp, &mp, kappa) * lr_coefficient(nu, &lambda.lambda_minus, kappa)
        })
        .sum();
    (lhs, rhs)
}

/// The canonical row tableau `L⁻_can` of shape `[λ⁻]`.
pub fn l_minus_can(lambda_minus: &Partition, m: usize) -> SkewTableau {
    canonical_row(&SkewShape::straight(lambda_minus.clone()), m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_slice(v)
    }

    fn t(s: &str) -> SkewTableau {
        SkewTableau::parse(s).unwrap()
    }

    #[test]
    fn ssyt_examples() {
        let one = SkewShape::straight(p(&[1]));
        assert_eq!(enumerate_ssyt(&one, &[1]).len(), 1);
        let s = SkewShape::straight(p(&[2, 1]));
        assert_eq!(enumerate_ssyt(&s, &[1, 1, 1]).len(), 2);
        assert!(enumerate_ssyt(&s, &[1, 1]).is_empty());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[3, 3]), &p(&[1]), &p(&[2, 2, 1])), 0);
    }

    #[test]
    fn pruned_counter_matches_enumeration() {
        for size in 0..=6 {
            for alpha in Partition::all_of_size(size, usize::MAX, usize::MAX) {
                for beta in alpha.subpartitions() {
                    for gamma in Partition::all_of_size(size - beta.size(), usize::MAX, usize::MAX)
                    {
                        let brute = lr_tableaux(&alpha, &beta, &gamma).len() as u64;
                        assert_eq!(
                            lr_coefficient(&alpha, &beta, &gamma),
                            brute,
                            "{alpha}/{beta} {gamma}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn reposition_first_example() {
        let pair = reposition(&t(". 4 / 3 5"), &p(&[1, 1]), &p(&[2, 2, 1]), 2).unwrap();
        assert_eq!(pair.t_minus, t(". 1 / . 2 / 2"));
    }

    #[test]
    fn reposition_second_example() {
        let tp = t(". . . / . . 4 / 4 5 5 / 5 6 6 / 6");
        let pair = reposition(&tp, &p(&[3, 2, 1]), &p(&[5, 5, 4]), 3).unwrap();
        assert_eq!(pair.t_minus, t(". . . 3 1 / . . 3 2 1 / . 3 2 1"));
        assert!(is_marked(&tp, &p(&[3, 2, 1]), &p(&[5, 5, 4]), 3).unwrap());
    }

    #[test]
    fn reposition_overflow_and_empty() {
        assert!(matches!(
            reposition(&t("3 3"), &p(&[]), &p(&[1, 1]), 2),
            Err(LrError::ShapeOverflow { .. })
        ));
        let empty = reposition(&t(""), &p(&[1]), &p(&[1]), 2).unwrap();
        assert!(empty.t_minus.is_empty());
    }

    #[test]
    fn opp_examples() {
        let ex5 = t(". 4 3 / 3 5 4");
        assert_eq!(opp(&ex5, 2).unwrap(), t("3 1 / 2 3 / 2"));
        assert!(!is_behaved(&ex5, 2).unwrap());
        let ex6 = t(". . . 4 4 4 / . . 4 5 5 / 4 5 5 6 / 5 6 6 / 6");
        assert_eq!(opp(&ex6, 3).unwrap(), t("6 5 4 3 1 / 5 4 3 2 1 / 4 3 2 1"));
        assert!(is_behaved(&ex6, 3).unwrap());
        assert!(opp(&t(""), 2).unwrap().is_empty());
    }

    #[test]
    fn pictures_example() {
        let domain = SkewShape::new(p(&[3, 3, 2, 1]), p(&[2])).unwrap();
        let image = SkewShape::new(p(&[4, 2, 2, 1]), p(&[1, 1])).unwrap();
        let c = Cell::new;
        let f = CellBijection::new(
            domain,
            image,
            [
                (c(1, 3), c(1, 2)),
                (c(2, 1), c(1, 4)),
                (c(2, 2), c(1, 3)),
                (c(2, 3), c(2, 2)),
                (c(3, 1), c(3, 2)),
                (c(3, 2), c(3, 1)),
                (c(4, 1), c(4, 1)),
            ],
        )
        .unwrap();
        assert!(is_picture(&f));
        let (ep, em) = picture_readings(&f);
        assert_eq!(ep, t(". . 1 / 1 1 2 / 3 3 / 4"));
        assert_eq!(em, t(". 3 2 1 / . 3 / 2 1 / 1"));
        let back = picture_to_marked(&f, 0).unwrap();
        assert_eq!(back.rpos, f);
        assert_eq!(marked_to_picture(&back, &p(&[1, 1]), 0).unwrap(), f);
        assert!(enumerate_pictures(f.domain(), f.image()).contains(&f));
    }

    #[test]
    fn small_pictures() {
        let s = SkewShape::straight(p(&[1, 1]));
        let c = Cell::new;
        let id = CellBijection::new(
            s.clone(),
            s.clone(),
            [(c(1, 1), c(1, 1)), (c(2, 1), c(2, 1))],
        )
        .unwrap();
        assert!(is_picture(&id));
        let col = SkewShape::straight(p(&[1, 1]));
        let row = SkewShape::straight(p(&[2]));
        let bad = CellBijection::new(col, row, [(c(1, 1), c(1, 1)), (c(2, 1), c(1, 2))]).unwrap();
        assert!(!is_picture(&bad));
    }

    #[test]
    fn lr_sum_examples() {
        let h = HookSplit::new(2, 3, p(&[2, 2]), p(&[1, 1])).unwrap();
        // Atypical weight: the coefficient vanishes but one marked tableau exists.
        let (l, r) = lr_sum_identity(&h, &p(&[1]), &p(&[2, 2, 1]));
        assert_eq!((l, r), (0, 1));
        let typical = HookSplit::new(2, 2, p(&[3, 2]), p(&[1])).unwrap();
        let (l, r) = lr_sum_identity(&typical, &p(&[2, 1]), &p(&[2, 1]));
        assert_eq!(l, r);
        let (l, r) = lr_sum_identity(&h, &p(&[2, 2]), &p(&[1, 1]));
        assert_eq!((l, r), (1, 1));
    }

    #[test]
    fn marked_pair_json_round_trip() {
        let tp = t(". . . / . . 4 / 4 5 5 / 5 6 6 / 6");
        let pair = reposition(&tp, &p(&[3, 2, 1]), &p(&[5, 5, 4]), 3).unwrap();
        let js = serde_json::to_string(&pair).unwrap();
        assert!(js.contains("\"rpos\":[[[2,3],"));
        assert_eq!(serde_json::from_str::<MarkedPair>(&js).unwrap(), pair);
    }

    #[test]
    fn empty_marked_set_member() {
        let h = HookSplit::new(2, 2, p(&[2, 1]), p(&[1])).unwrap();
        let out = enumerate_marked(&h, &p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!(out.len(), 1);
        assert!(out[0].t_plus.is_empty());
    }
}
