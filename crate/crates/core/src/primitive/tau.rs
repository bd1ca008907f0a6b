//! The operators `τ⁺`, `τ⁻` and `τ = τ⁺τ⁻` on tableaux `T⁺`.
//!
//! `τ⁺` sums over the row permutations of `𝒟⁺`. `τ⁻` sums over the column
//! permutations `σ` of `𝒟⁻`, transported to `𝒟⁺` by `Rpos⁻¹ ∘ σ ∘ Rpos` and
//! weighted by the sign of `σ`.

use super::multiindex::q_plus;
use super::wedge::RhoSum;
use super::PrimitiveError;
use crate::lr::CellBijection;
use crate::shapes::{Cell, SkewShape};
use crate::superring::permutations_with_sign;
use crate::tableaux::{clausen_compare_row, ClausenOrder, SkewTableau};
use std::collections::{BTreeMap, BTreeSet};

/// A formal integer combination of tableaux of a common shape and content.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableauSum {
    terms: BTreeMap<SkewTableau, i64>,
}

impl TableauSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(t: SkewTableau) -> Self {
        let mut s = Self::new();
        s.add(t, 1);
        s
    }

    /// Adds `coeff · t`, dropping the term if it cancels.
    pub fn add(&mut self, t: SkewTableau, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(t.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SkewTableau, i64)> {
        self.terms.iter().map(|(t, c)| (t, *c))
    }

    pub fn coefficient(&self, t: &SkewTableau) -> i64 {
        self.terms.get(t).copied().unwrap_or(0)
    }

    pub fn contains(&self, t: &SkewTableau) -> bool {
        self.terms.contains_key(t)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of absolute coefficients.
    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().map(|c| c.abs()).sum()
    }
}

/// A cell permutation with its sign.
type SignedCellMap = (BTreeMap<Cell, Cell>, i64);

/// All products of permutations of the given cell groups, as cell maps with signs.
fn group_permutations(groups: &[Vec<Cell>]) -> Vec<SignedCellMap> {
    let mut out = vec![(BTreeMap::new(), 1i64)];
    for g in groups {
        let perms = permutations_with_sign(g.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for (map, sign) in &out {
            for (p, s) in &perms {
                let mut m = map.clone();
                for (t, &pt) in p.iter().enumerate() {
                    m.insert(g[t], g[pt]);
                }
                next.push((m, sign * s));
            }
        }
        out = next;
    }
    out
}

fn rows_of(shape: &SkewShape) -> Vec<Vec<Cell>> {
    (1..=shape.num_rows())
        .map(|i| shape.row_range(i).map(|j| Cell::new(i, j)).collect())
        .collect()
}

fn columns_of(shape: &SkewShape) -> Vec<Vec<Cell>> {
    let mut cols: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in shape.cells() {
        cols.entry(c.col).or_default().push(c);
    }
    cols.into_values().collect()
}

/// `τ⁺` applied to every term of `ts`.
pub fn tau_plus(ts: &TableauSum) -> TableauSum {
    let mut out = TableauSum::new();
    let mut cache: BTreeMap<SkewShape, Vec<SignedCellMap>> = BTreeMap::new();
    for (t, coeff) in ts.terms() {
        let perms = cache
            .entry(t.shape().clone())
            .or_insert_with(|| group_permutations(&rows_of(t.shape())));
        for (sigma, _) in perms.iter() {
            out.add(
                SkewTableau::from_fn(t.shape().clone(), |c| t.at(sigma[&c])),
                coeff,
            );
        }
    }
    out
}

/// Checks that `rpos` maps every cell of `T⁺` holding `m+j` into row `j` of `𝒟⁻`.
fn check_rpos(t_plus: &SkewTableau, rpos: &CellBijection, m: usize) -> Result<(), PrimitiveError> {
    if rpos.domain() != t_plus.shape() {
        return Err(PrimitiveError::InconsistentRpos(format!(
            "domain {} differs from the shape {}",
            rpos.domain(),
            t_plus.shape()
        )));
    }
    for (c, v) in t_plus.iter() {
        let target = rpos.apply(c);
        if v <= m || target.row != v - m {
            return Err(PrimitiveError::InconsistentRpos(format!(
                "cell {c} with entry {v} maps to {target}"
            )));
        }
    }
    Ok(())
}

fn tau_minus_with(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
    signed: bool,
) -> Result<TableauSum, PrimitiveError> {
    check_rpos(t_plus, rpos, m)?;
    let inv = rpos.inverse();
    let mut out = TableauSum::new();
    for (sigma, sign) in group_permutations(&columns_of(rpos.image())) {
        let u = SkewTableau::from_fn(t_plus.shape().clone(), |c| {
            t_plus.at(inv.apply(sigma[&rpos.apply(c)]))
        });
        out.add(u, if signed { sign } else { 1 });
    }
    Ok(out)
}

/// `τ⁻T⁺ = Σ_{σ ∈ X⁻} sgn(σ) · T⁺ ∘ Rpos⁻¹ ∘ σ ∘ Rpos`.
pub fn tau_minus(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
) -> Result<TableauSum, PrimitiveError> {
    tau_minus_with(t_plus, rpos, m, true)
}

/// The unsigned variant of [`tau_minus`], kept for comparison.
pub fn tau_minus_unsigned(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
) -> Result<TableauSum, PrimitiveError> {
    tau_minus_with(t_plus, rpos, m, false)
}

/// `τT⁺ = τ⁺τ⁻T⁺`.
pub fn tau(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
) -> Result<TableauSum, PrimitiveError> {
    Ok(tau_plus(&tau_minus(t_plus, rpos, m)?))
}

/// Every tableau `S⁺ = T⁺ ∘ Rpos⁻¹ ∘ σ⁻ ∘ Rpos ∘ σ⁺` produced by `τ`, paired
/// with its own repositioning map `σ⁻ ∘ Rpos ∘ σ⁺`.
pub fn tau_terms_with_rpos(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
) -> Result<Vec<(SkewTableau, CellBijection)>, PrimitiveError> {
    check_rpos(t_plus, rpos, m)?;
    let shape = t_plus.shape().clone();
    let plus = group_permutations(&rows_of(&shape));
    let mut out = Vec::new();
    for (sm, _) in group_permutations(&columns_of(rpos.image())) {
        for (sp, _) in &plus {
            let pairs: Vec<(Cell, Cell)> = shape
                .cells()
                .into_iter()
                .map(|c| (c, sm[&rpos.apply(sp[&c])]))
                .collect();
            let r = CellBijection::new(shape.clone(), rpos.image().clone(), pairs)?;
            let inv = rpos.inverse();
            let s = SkewTableau::from_fn(shape.clone(), |c| t_plus.at(inv.apply(r.apply(c))));
            out.push((s, r));
        }
    }
    Ok(out)
}

/// `T⁺` appears in `τ⁻T⁺` with coefficient one and every other term is
/// strictly smaller than `T⁺` in the row preorder.
pub fn leading_term_holds(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
    n: usize,
) -> Result<bool, PrimitiveError> {
    let sum = tau_minus(t_plus, rpos, m)?;
    if sum.coefficient(t_plus) != 1 {
        return Ok(false);
    }
    let smaller = sum.terms().filter(|(s, _)| *s != t_plus).all(|(s, _)| {
        matches!(
            clausen_compare_row(s, t_plus, m, n),
            Ok(ClausenOrder::LessStrict)
        )
    });
    Ok(smaller)
}

/// Every tableau `S⁺` occurring in `τT⁺`, with its induced repositioning map,
/// satisfies `τS⁺ = ±τT⁺`.
pub fn disjoint_holds(
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    m: usize,
) -> Result<bool, PrimitiveError> {
    let base = tau(t_plus, rpos, m)?;
    let negated = {
        let mut neg = TableauSum::new();
        for (t, c) in base.terms() {
            neg.add(t.clone(), -c);
        }
        neg
    };
    for (s, r) in tau_terms_with_rpos(t_plus, rpos, m)? {
        if !base.contains(&s) {
            continue;
        }
        let other = tau(&s, &r, m)?;
        if other != base && other != negated {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Two cells in one column of `𝒟⁻` come from the same row of `𝒟⁺`.
pub fn is_insignificant(rpos: &CellBijection) -> bool {
    let inv = rpos.inverse();
    columns_of(rpos.image()).iter().any(|col| {
        let rows: BTreeSet<usize> = col.iter().map(|&c| inv.apply(c).row).collect();
        rows.len() < col.len()
    })
}

/// `ρ̄` extended linearly: each tableau contributes `ρ̄(Q⁺(U))`.
pub fn rho_bar_of_sum(ts: &TableauSum, m: usize) -> RhoSum {
    let mut out = RhoSum::new();
    for (t, coeff) in ts.terms() {
        out.add(&q_plus(t, m).pairs, coeff);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    #[test]
    fn tau_plus_worked_example() {
        let t = SkewTableau::parse("3 4 / 5 6 / 7 8").unwrap();
        let s = tau_plus(&TableauSum::single(t));
        assert_eq!(s.len(), 8);
        assert!(s.terms().all(|(_, c)| c == 1));
        assert!(s.contains(&SkewTableau::parse("4 3 / 6 5 / 8 7").unwrap()));
        let rho = rho_bar_of_sum(&s, 0);
        assert_eq!(rho.len(), 8);
        assert!(rho.terms().all(|(_, c)| c == 1));
        assert_eq!(
            rho.coefficient(&[(1, 3), (1, 5), (1, 7), (2, 4), (2, 6), (2, 8)]),
            1
        );
        assert_eq!(
            rho.coefficient(&[(1, 4), (1, 6), (1, 8), (2, 3), (2, 5), (2, 7)]),
            1
        );
    }

    #[test]
    fn single_cell_is_fixed() {
        let t = SkewTableau::parse("3").unwrap();
        let shape = t.shape().clone();
        let image = SkewShape::straight(Partition::from_slice(&[1]));
        let rpos = CellBijection::new(shape, image, [(Cell::new(1, 1), Cell::new(1, 1))]).unwrap();
        assert_eq!(tau(&t, &rpos, 2).unwrap(), TableauSum::single(t));
        assert!(!is_insignificant(&rpos));
    }

    #[test]
    fn inconsistent_rpos_is_rejected() {
        let t = SkewTableau::parse("3 4").unwrap();
        let image = SkewShape::straight(Partition::from_slice(&[1, 1]));
        let rpos = CellBijection::new(
            t.shape().clone(),
            image,
            [
                (Cell::new(1, 1), Cell::new(2, 1)),
                (Cell::new(1, 2), Cell::new(1, 1)),
            ],
        )
        .unwrap();
        assert!(matches!(
            tau(&t, &rpos, 2),
            Err(PrimitiveError::InconsistentRpos(_))
        ));
    }
}
