//! Construction of `v̄(T⁺) = v_{I|J} ρ̄(τT⁺)`, its expansion into the
//! localized superalgebra, the even-primitivity check and the rank
//! certificate for a family of vectors.

use super::multiindex::{
    content_and_weight, q_plus, v_ij_denominator, DenominatorVector, MultiIndex,
};
use super::tau::{rho_bar_of_sum, tau};
use super::wedge::{rho_single, y_symbol, RhoSum, WedgeExpression};
use super::PrimitiveError;
use crate::budget::Budget;
use crate::lr::{enumerate_marked, CellBijection};
use crate::par::{self, Parallelism};
use crate::shapes::{HookSplit, Partition};
use crate::superring::{
    big_d, dminus_abstract, dplus, phi, y, Ctx, LocalizedElement, Monomial, SuperPolynomial, Q,
};
use crate::tableaux::SkewTableau;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

/// Expands a formal sum of `ρ̄_{I|J}` into wedge monomials of `y` symbols.
pub fn expand_wedge(ctx: Ctx, rho: &RhoSum) -> Result<WedgeExpression, PrimitiveError> {
    let mut forms: HashMap<(usize, usize), Vec<(usize, SuperPolynomial)>> = HashMap::new();
    let mut out = WedgeExpression::zero(ctx);
    for (pairs, coeff) in rho.terms() {
        let mut term = WedgeExpression::scalar(SuperPolynomial::integer(ctx, coeff));
        for &(i, j) in pairs {
            if let std::collections::hash_map::Entry::Vacant(e) = forms.entry((i, j)) {
                e.insert(rho_single(ctx, i, j)?);
            }
            term = term.wedge_linear(&forms[&(i, j)]);
            if term.is_zero() {
                break;
            }
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The vector `v̄(T⁺)` with its bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveVector {
    pub t_plus: SkewTableau,
    /// `Q⁺(T⁺)`.
    pub multiindex: MultiIndex,
    /// `λ_{I|J}`.
    pub weight: Vec<i64>,
    /// Net exponents of `v_{I|J}`.
    pub exponents: DenominatorVector,
    pub expression: WedgeExpression,
}

fn plus_factor(ctx: Ctx, a: usize) -> Result<SuperPolynomial, PrimitiveError> {
    Ok(dplus(ctx, &(1..=a).collect::<Vec<_>>())?)
}

fn minus_factor(ctx: Ctx, b: usize) -> Result<SuperPolynomial, PrimitiveError> {
    let m = ctx.m();
    Ok(dminus_abstract(ctx, &(m + 1..=m + b).collect::<Vec<_>>())?)
}

fn divide_by(
    w: WedgeExpression,
    factor: &SuperPolynomial,
    label: &str,
) -> Result<WedgeExpression, PrimitiveError> {
    w.try_map(|c| {
        c.exact_divide(factor)
            .map_err(|_| PrimitiveError::DivisionFailed {
                factor: label.to_string(),
            })
    })
}

/// Builds `v̄(T⁺)`: computes `ρ̄(τT⁺)` in abstract mode, divides every
/// coefficient by the negative part of `v_{I|J}` and multiplies by the
/// positive part.
pub fn build_primitive(
    lambda: &HookSplit,
    t_plus: &SkewTableau,
    rpos: &CellBijection,
) -> Result<PrimitiveVector, PrimitiveError> {
    build_primitive_budgeted(lambda, t_plus, rpos, &Budget::unlimited())
}

/// Total number of polynomial terms across all wedge coefficients.
pub fn term_count(w: &WedgeExpression) -> usize {
    w.terms().map(|(_, c)| c.len()).sum()
}

/// [`build_primitive`] with the term count checked against `budget` after
/// each stage.
pub fn build_primitive_budgeted(
    lambda: &HookSplit,
    t_plus: &SkewTableau,
    rpos: &CellBijection,
    budget: &Budget,
) -> Result<PrimitiveVector, PrimitiveError> {
    let (m, n) = (lambda.m, lambda.n);
    let ctx = Ctx::new(m, n)?;
    let sum = tau(t_plus, rpos, m)?;
    budget.check(sum.len())?;
    let rho = rho_bar_of_sum(&sum, m);
    let mut w = expand_wedge(ctx, &rho)?;
    budget.check(term_count(&w))?;
    let multiindex = q_plus(t_plus, m);
    let (num, den) = v_ij_denominator(lambda, &multiindex);
    let exponents = num.minus_vector(&den);
    let negative = exponents.negative_part();
    let positive = exponents.positive_part();
    for a in 1..=m {
        if negative.plus[a - 1] > 0 {
            let f = plus_factor(ctx, a)?;
            for _ in 0..negative.plus[a - 1] {
                w = divide_by(w, &f, &format!("D+(1..{a})"))?;
            }
        }
    }
    for b in 1..=n {
        if negative.minus[b - 1] > 0 {
            let f = minus_factor(ctx, b)?;
            for _ in 0..negative.minus[b - 1] {
                w = divide_by(w, &f, &format!("D-({}..{})", m + 1, m + b))?;
            }
        }
    }
    let mut scale = SuperPolynomial::one(ctx);
    for a in 1..=m {
        scale = &scale * &plus_factor(ctx, a)?.pow(positive.plus[a - 1] as u32);
    }
    for b in 1..=n {
        scale = &scale * &minus_factor(ctx, b)?.pow(positive.minus[b - 1] as u32);
    }
    let expression = w.scale(&scale);
    budget.check(term_count(&expression))?;
    let weight = content_and_weight(&multiindex, lambda).weight;
    Ok(PrimitiveVector {
        t_plus: t_plus.clone(),
        multiindex,
        weight,
        exponents,
        expression,
    })
}

/// Pairs `(i, j)` with `i > j` inside one parity block.
pub fn even_lowering_pairs(m: usize, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=m + n {
        for j in 1..i {
            if (i <= m) == (j <= m) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Substitution tables for the expanded mode: `φ(c_{m+r,m+s})` and `y_{kl}`
/// as numerators over powers of `D`.
struct Expander {
    ctx: Ctx,
    phi: HashMap<usize, (SuperPolynomial, u32)>,
    phi_pow: HashMap<(usize, u8), SuperPolynomial>,
    y: Vec<(SuperPolynomial, u32)>,
}

impl Expander {
    fn new(ctx: Ctx) -> Result<Self, PrimitiveError> {
        let (m, n) = (ctx.m(), ctx.n());
        let mut phis = HashMap::new();
        for r in m + 1..=m + n {
            for s in m + 1..=m + n {
                let e = phi(ctx, r, s)?;
                phis.insert(ctx.slot(r, s), (e.numerator().clone(), e.d_power()));
            }
        }
        let mut ys = Vec::new();
        for index in 0..m * n {
            let (k, l) = y_symbol(index, m, n);
            let e = y(ctx, k, l)?;
            ys.push((e.numerator().clone(), e.d_power()));
        }
        Ok(Expander {
            ctx,
            phi: phis,
            phi_pow: HashMap::new(),
            y: ys,
        })
    }

    fn phi_power(&mut self, slot: usize, e: u8) -> SuperPolynomial {
        if let Some(p) = self.phi_pow.get(&(slot, e)) {
            return p.clone();
        }
        let p = self.phi[&slot].0.pow(u32::from(e));
        self.phi_pow.insert((slot, e), p.clone());
        p
    }

    /// Adds `coeff · y_mask` with every `C₂₂` generator replaced by its
    /// `φ`-image, accumulating numerators by power of `D`.
    fn accumulate(
        &mut self,
        mask: u64,
        coeff: &SuperPolynomial,
        acc: &mut BTreeMap<u32, SuperPolynomial>,
    ) {
        let ctx = self.ctx;
        let mut ypart = SuperPolynomial::one(ctx);
        let mut ypow = 0;
        for index in (0..64).filter(|b| mask >> b & 1 == 1) {
            ypart = &ypart * &self.y[index].0;
            ypow += self.y[index].1;
        }
        let mut by_power: BTreeMap<u32, SuperPolynomial> = BTreeMap::new();
        for (mono, q) in coeff.terms() {
            let mut kept = mono.even_array();
            let mut factor = SuperPolynomial::constant(ctx, *q);
            let mut pow = 0;
            for (slot, e) in mono.even_slots() {
                if let Some(&(_, d)) = self.phi.get(&slot) {
                    kept[slot] = 0;
                    factor = &factor * &self.phi_power(slot, e);
                    pow += d * u32::from(e);
                }
            }
            let term = factor.mul_monomial(&Monomial::from_parts(kept, mono.odd_mask()), Q::one());
            let slot = by_power
                .entry(pow)
                .or_insert_with(|| SuperPolynomial::zero(ctx));
            *slot = &*slot + &term;
        }
        for (pow, p) in by_power {
            let contribution = &p * &ypart;
            let slot = acc
                .entry(pow + ypow)
                .or_insert_with(|| SuperPolynomial::zero(ctx));
            *slot = &*slot + &contribution;
        }
    }
}

/// Substitutes `y_{kl}` and `φ` into an abstract expression, giving an
/// element of the localized superalgebra.
pub fn expand_localized(w: &WedgeExpression) -> Result<LocalizedElement, PrimitiveError> {
    let ctx = w.ctx();
    let mut ex = Expander::new(ctx)?;
    let mut acc: BTreeMap<u32, SuperPolynomial> = BTreeMap::new();
    for (mask, c) in w.terms() {
        ex.accumulate(mask, c, &mut acc);
    }
    let top = acc.keys().next_back().copied().unwrap_or(0);
    let d = big_d(ctx);
    let mut num = SuperPolynomial::zero(ctx);
    for (pow, p) in acc {
        num = &num + &(&p * &d.pow(top - pow));
    }
    Ok(LocalizedElement::new(num, top))
}

/// Vanishing of `ᵢⱼD` for every even lowering pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivityReport {
    pub pairs: Vec<((usize, usize), bool)>,
}

impl PrimitivityReport {
    pub fn all_zero(&self) -> bool {
        self.pairs.iter().all(|p| p.1)
    }

    /// `"(i,j)" → "zero" | "nonzero"`.
    pub fn to_map(&self) -> BTreeMap<String, String> {
        self.pairs
            .iter()
            .map(|((i, j), z)| {
                (
                    format!("({i},{j})"),
                    if *z { "zero" } else { "nonzero" }.to_string(),
                )
            })
            .collect()
    }
}

/// Expands `w` and applies every even lowering superderivation.
pub fn verify_even_primitive(w: &WedgeExpression) -> Result<PrimitivityReport, PrimitiveError> {
    let ctx = w.ctx();
    let element = expand_localized(w)?;
    let pairs = even_lowering_pairs(ctx.m(), ctx.n())
        .into_iter()
        .map(|(i, j)| Ok(((i, j), element.derive(i, j)?.is_zero())))
        .collect::<Result<Vec<_>, PrimitiveError>>()?;
    Ok(PrimitivityReport { pairs })
}

/// A negative control: adds `g · c` to the first coefficient `c`, where
/// `g` is an even off-diagonal generator.
pub fn perturb(w: &WedgeExpression) -> WedgeExpression {
    let ctx = w.ctx();
    let (m, n) = (ctx.m(), ctx.n());
    let g = if m >= 2 {
        SuperPolynomial::generator(ctx, 1, 2)
    } else if n >= 2 {
        SuperPolynomial::generator(ctx, m + 1, m + 2)
    } else {
        SuperPolynomial::generator(ctx, 1, 1)
    }
    .expect("generator in range");
    let mut out = w.clone();
    if let Some((mask, c)) = w.terms().next() {
        out.add_term(mask, &g * c);
    }
    out
}

fn to_big(q: &Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

/// Exact rank over `ℚ` of the coefficient vectors of `vectors` in the basis
/// of pairs (wedge monomial, polynomial monomial).
pub fn rank(vectors: &[&WedgeExpression]) -> usize {
    let mut columns: HashMap<(u64, Monomial), usize> = HashMap::new();
    let mut rows: Vec<BTreeMap<usize, BigRational>> = Vec::new();
    for w in vectors {
        let mut row = BTreeMap::new();
        for (mask, c) in w.terms() {
            for (mono, q) in c.terms() {
                let next = columns.len();
                let col = *columns.entry((mask, mono.clone())).or_insert(next);
                row.insert(col, to_big(q));
            }
        }
        rows.push(row);
    }
    let mut pivots: Vec<(usize, BTreeMap<usize, BigRational>)> = Vec::new();
    for mut row in rows {
        for (pc, prow) in &pivots {
            if let Some(f) = row.get(pc).cloned() {
                for (c, v) in prow {
                    let e = row.entry(*c).or_insert_with(BigRational::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        row.remove(c);
                    }
                }
            }
        }
        if let Some((&pc, pv)) = row.iter().next() {
            let inv = pv.recip();
            let normalized = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
            pivots.push((pc, normalized));
        }
    }
    pivots.len()
}

/// Summary of one vector for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VectorReport {
    pub t_plus: String,
    pub weight: Vec<i64>,
    pub k: usize,
    pub num_wedge_terms: usize,
    pub primitivity: BTreeMap<String, String>,
    pub membership: String,
}

impl VectorReport {
    pub fn new(v: &PrimitiveVector, primitivity: Option<&PrimitivityReport>) -> Self {
        let polynomial = v.expression.terms().all(|(_, c)| c.is_even());
        VectorReport {
            t_plus: v.t_plus.to_string(),
            weight: v.weight.clone(),
            k: v.multiindex.len(),
            num_wedge_terms: v.expression.len(),
            primitivity: primitivity
                .map(PrimitivityReport::to_map)
                .unwrap_or_default(),
            membership: if polynomial {
                "polynomial"
            } else {
                "non-polynomial"
            }
            .to_string(),
        }
    }
}

/// The vectors `v̄(T⁺)` for all marked `T⁺` of one weight, with their rank.
#[derive(Clone, Debug)]
pub struct BasisReport {
    pub marked: usize,
    pub rank: usize,
    pub vectors: Vec<PrimitiveVector>,
}

/// Builds `v̄(T⁺)` for every marked `T⁺` and certifies linear independence.
pub fn basis_for_weight(
    lambda: &HookSplit,
    mu: &Partition,
    nu: &Partition,
    mode: Parallelism,
) -> Result<BasisReport, PrimitiveError> {
    let marked = enumerate_marked(lambda, mu, nu)?;
    let built = par::map(&marked, mode, |p| {
        build_primitive(lambda, &p.t_plus, &p.rpos)
    });
    let vectors = built.into_iter().collect::<Result<Vec<_>, _>>()?;
    let r = rank(&vectors.iter().map(|v| &v.expression).collect::<Vec<_>>());
    if r < vectors.len() {
        return Err(PrimitiveError::RankDeficient {
            rank: r,
            expected: vectors.len(),
        });
    }
    Ok(BasisReport {
        marked: marked.len(),
        rank: r,
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superring::highest_vector_abstract;

    fn hook(m: usize, n: usize, plus: &[usize], minus: &[usize]) -> HookSplit {
        HookSplit::new(
            m,
            n,
            Partition::from_slice(plus),
            Partition::from_slice(minus),
        )
        .unwrap()
    }

    #[test]
    fn lowering_pairs() {
        assert_eq!(even_lowering_pairs(2, 2), vec![(2, 1), (4, 3)]);
        assert_eq!(even_lowering_pairs(1, 1), vec![]);
    }

    #[test]
    fn empty_tableau_gives_highest_vector() {
        let h = hook(2, 2, &[2, 2], &[1, 1]);
        let b = basis_for_weight(
            &h,
            &Partition::from_slice(&[2, 2]),
            &Partition::from_slice(&[1, 1]),
            Parallelism::Sequential,
        )
        .unwrap();
        assert_eq!(b.vectors.len(), 1);
        let v = &b.vectors[0];
        assert_eq!(
            v.expression,
            WedgeExpression::scalar(highest_vector_abstract(&h).unwrap())
        );
        assert!(verify_even_primitive(&v.expression).unwrap().all_zero());
    }

    #[test]
    fn rank_detects_dependence() {
        let ctx = Ctx::new(2, 1).unwrap();
        let a = WedgeExpression::scalar(SuperPolynomial::generator(ctx, 1, 1).unwrap());
        let b = a.scale_integer(3);
        assert_eq!(rank(&[&a, &b]), 1);
        let c = WedgeExpression::scalar(SuperPolynomial::generator(ctx, 2, 2).unwrap());
        assert_eq!(rank(&[&a, &b, &c]), 2);
    }
}
