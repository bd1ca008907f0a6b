//! The tensor-level operators `σ⁺`, `σ⁻` and `σ = σ⁻σ⁺` on `ρ_{I|J}`,
//! positioning maps, and symbolic checks of the congruences that drive the
//! construction.

use super::multiindex::{content_and_weight, v_ij_denominator, MultiIndex};
use super::wedge::{rho_single, y_index, RhoSum};
use super::PrimitiveError;
use crate::shapes::{conjugate, Cell, HookSplit, Partition, SkewShape};
use crate::superring::{
    dminus_abstract, dplus, permutations_with_sign, Ctx, IdentityCheck, SuperPolynomial, Q,
};
use std::collections::{BTreeMap, HashMap};

/// Positioning maps `P⁺: l ↦ 𝒟⁺` and `P⁻: l ↦ 𝒟⁻` for a multiindex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positioning {
    pub plus_shape: SkewShape,
    pub minus_shape: SkewShape,
    pub p_plus: Vec<Cell>,
    pub p_minus: Vec<Cell>,
}

fn shapes_for(
    lambda: &HookSplit,
    mi: &MultiIndex,
) -> Result<(SkewShape, SkewShape), PrimitiveError> {
    let cw = content_and_weight(mi, lambda);
    if !cw.dominant {
        return Err(PrimitiveError::IncompatiblePositioning(format!(
            "weight {:?} is not dominant",
            cw.weight
        )));
    }
    let m = lambda.m;
    let mu = Partition::new(cw.weight[..m].iter().map(|&x| x as usize).collect())
        .map_err(|e| PrimitiveError::IncompatiblePositioning(e.to_string()))?;
    let nu = Partition::new(cw.weight[m..].iter().map(|&x| x as usize).collect())
        .map_err(|e| PrimitiveError::IncompatiblePositioning(e.to_string()))?;
    let plus = SkewShape::new(conjugate(&lambda.lambda_plus), conjugate(&mu))
        .map_err(|e| PrimitiveError::IncompatiblePositioning(e.to_string()))?;
    let minus = SkewShape::new(nu, lambda.lambda_minus.clone())
        .map_err(|e| PrimitiveError::IncompatiblePositioning(e.to_string()))?;
    Ok((plus, minus))
}

fn positioning(
    lambda: &HookSplit,
    mi: &MultiIndex,
    reversed: bool,
) -> Result<Positioning, PrimitiveError> {
    let (plus_shape, minus_shape) = shapes_for(lambda, mi)?;
    let mut columns: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in plus_shape.cells_column_major() {
        columns.entry(c.col).or_default().push(c);
    }
    let mut rows: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in minus_shape.cells() {
        rows.entry(c.row).or_default().push(c);
    }
    if reversed {
        columns.values_mut().for_each(|v| v.reverse());
        rows.values_mut().for_each(|v| v.reverse());
    }
    let mut used_plus: HashMap<usize, usize> = HashMap::new();
    let mut used_minus: HashMap<usize, usize> = HashMap::new();
    let mut p_plus = Vec::new();
    let mut p_minus = Vec::new();
    for &(i, j) in &mi.pairs {
        let a = used_plus.entry(i).or_insert(0);
        p_plus.push(columns[&i][*a]);
        *a += 1;
        let b = used_minus.entry(j).or_insert(0);
        p_minus.push(rows[&j][*b]);
        *b += 1;
    }
    Ok(Positioning {
        plus_shape,
        minus_shape,
        p_plus,
        p_minus,
    })
}

/// Fills column `i_l` of `𝒟⁺` top to bottom and row `j_l` of `𝒟⁻` left to
/// right, in the order of `l`.
pub fn default_positioning(
    lambda: &HookSplit,
    mi: &MultiIndex,
) -> Result<Positioning, PrimitiveError> {
    positioning(lambda, mi, false)
}

/// Fills columns of `𝒟⁺` bottom to top and rows of `𝒟⁻` right to left.
pub fn reversed_positioning(
    lambda: &HookSplit,
    mi: &MultiIndex,
) -> Result<Positioning, PrimitiveError> {
    positioning(lambda, mi, true)
}

fn validate(mi: &MultiIndex, pos: &Positioning) -> Result<(), PrimitiveError> {
    let bad = |msg: String| Err(PrimitiveError::IncompatiblePositioning(msg));
    let k = mi.len();
    if pos.p_plus.len() != k || pos.p_minus.len() != k {
        return bad(format!(
            "positioning has {} and {} cells for length {k}",
            pos.p_plus.len(),
            pos.p_minus.len()
        ));
    }
    let mut plus: Vec<Cell> = pos.p_plus.clone();
    let mut minus: Vec<Cell> = pos.p_minus.clone();
    plus.sort();
    minus.sort();
    let mut want_plus = pos.plus_shape.cells();
    let mut want_minus = pos.minus_shape.cells();
    want_plus.sort();
    want_minus.sort();
    if plus != want_plus || minus != want_minus {
        return bad("positioning is not a bijection onto the diagrams".into());
    }
    for (l, &(i, j)) in mi.pairs.iter().enumerate() {
        if pos.p_plus[l].col != i || pos.p_minus[l].row != j {
            return bad(format!("position {l} does not match the pair ({i},{j})"));
        }
    }
    Ok(())
}

/// A formal integer combination of ordered tensor products `ρ_{k_1 l_1} ⊗ … ⊗ ρ_{k_k l_k}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorExpression {
    terms: BTreeMap<Vec<(usize, usize)>, i64>,
}

impl TensorExpression {
    pub fn add(&mut self, pairs: Vec<(usize, usize)>, coeff: i64) {
        let e = self.terms.entry(pairs.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&pairs);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[(usize, usize)], i64)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Projection to the exterior algebra.
    pub fn to_wedge(&self) -> RhoSum {
        let mut out = RhoSum::new();
        for (pairs, c) in self.terms() {
            out.add(pairs, c);
        }
        out
    }

    /// Expands every `ρ` into `y` symbols, keeping tensor order.
    pub fn expand(&self, ctx: Ctx) -> Result<TensorPolynomial, PrimitiveError> {
        let mut forms = HashMap::new();
        let mut out = TensorPolynomial::new();
        for (pairs, c) in self.terms() {
            let mut part = TensorPolynomial::scalar(SuperPolynomial::integer(ctx, c));
            for &p in pairs {
                if let std::collections::hash_map::Entry::Vacant(e) = forms.entry(p) {
                    e.insert(rho_single(ctx, p.0, p.1)?);
                }
                part = part.tensor_linear(&forms[&p]);
            }
            out.add_all(&part);
        }
        Ok(out)
    }
}

/// Ordered tuples of `y` symbols with polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPolynomial {
    terms: BTreeMap<Vec<usize>, SuperPolynomial>,
}

impl TensorPolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    fn scalar(p: SuperPolynomial) -> Self {
        let mut t = Self::new();
        t.add(Vec::new(), p);
        t
    }

    pub fn add(&mut self, key: Vec<usize>, p: SuperPolynomial) {
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e = &*e + &p;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, p);
            }
        }
    }

    fn add_all(&mut self, other: &Self) {
        for (k, p) in &other.terms {
            self.add(k.clone(), p.clone());
        }
    }

    fn tensor_linear(&self, form: &[(usize, SuperPolynomial)]) -> Self {
        let mut out = Self::new();
        for (key, c) in &self.terms {
            for (index, f) in form {
                let mut k = key.clone();
                k.push(*index);
                out.add(k, c * f);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, p: &SuperPolynomial) -> Self {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add(k.clone(), c * p);
        }
        out
    }

    /// Exact division of every coefficient; `None` if any fails.
    pub fn divide(&self, d: &SuperPolynomial) -> Option<Self> {
        let mut out = Self::new();
        for (k, c) in &self.terms {
            out.add(k.clone(), c.exact_divide(d).ok()?);
        }
        Some(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, p) in &other.terms {
            out.add(k.clone(), -p);
        }
        out
    }
}

/// All products of permutations of the given groups of positions, as
/// position maps with signs.
fn group_maps(groups: &[Vec<Cell>]) -> Vec<(HashMap<Cell, Cell>, i64)> {
    let mut out = vec![(HashMap::new(), 1i64)];
    for g in groups {
        let perms = permutations_with_sign(g.len());
        let mut next = Vec::new();
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

/// `σ.ρ_{I|J} = Σ_{σ⁺, σ⁻} sgn σ⁺ sgn σ⁻ ⊗_l ρ_{col σ⁺(P⁺(l)), row σ⁻(P⁻(l))}`.
pub fn sigma_tensor(
    mi: &MultiIndex,
    pos: &Positioning,
) -> Result<TensorExpression, PrimitiveError> {
    validate(mi, pos)?;
    let mut rows: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in pos.plus_shape.cells() {
        rows.entry(c.row).or_default().push(c);
    }
    let mut cols: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
    for c in pos.minus_shape.cells() {
        cols.entry(c.col).or_default().push(c);
    }
    let plus_maps = group_maps(&rows.into_values().collect::<Vec<_>>());
    let minus_maps = group_maps(&cols.into_values().collect::<Vec<_>>());
    let mut out = TensorExpression::default();
    for (sp, sgn_p) in &plus_maps {
        for (sm, sgn_m) in &minus_maps {
            let pairs = (0..mi.len())
                .map(|l| (sp[&pos.p_plus[l]].col, sm[&pos.p_minus[l]].row))
                .collect();
            out.add(pairs, sgn_p * sgn_m);
        }
    }
    Ok(out)
}

fn plus_factor(ctx: Ctx, a: usize) -> Result<SuperPolynomial, PrimitiveError> {
    Ok(dplus(ctx, &(1..=a).collect::<Vec<_>>())?)
}

fn minus_factor(ctx: Ctx, b: usize) -> Result<SuperPolynomial, PrimitiveError> {
    let m = ctx.m();
    Ok(dminus_abstract(ctx, &(m + 1..=m + b).collect::<Vec<_>>())?)
}

/// Whether `σ.ρ_{I|J}` is divisible by the negative part of `v_{I|J}`, so that
/// `v_{I|J} σ.ρ_{I|J}` has polynomial coefficients.
pub fn check_p1_division(
    lambda: &HookSplit,
    mi: &MultiIndex,
    pos: &Positioning,
) -> Result<bool, PrimitiveError> {
    let ctx = Ctx::new(lambda.m, lambda.n)?;
    let mut t = sigma_tensor(mi, pos)?.expand(ctx)?;
    let (num, den) = v_ij_denominator(lambda, mi);
    let negative = num.minus_vector(&den).negative_part();
    for a in 1..=lambda.m {
        let f = plus_factor(ctx, a)?;
        for _ in 0..negative.plus[a - 1] {
            match t.divide(&f) {
                Some(q) => t = q,
                None => return Ok(false),
            }
        }
    }
    for b in 1..=lambda.n {
        let f = minus_factor(ctx, b)?;
        for _ in 0..negative.minus[b - 1] {
            match t.divide(&f) {
                Some(q) => t = q,
                None => return Ok(false),
            }
        }
    }
    Ok(true)
}

fn sign(e: usize) -> Q {
    Q::from_integer(if e.is_multiple_of(2) { 1 } else { -1 })
}

fn pair_difference(
    ctx: Ctx,
    a: [(usize, usize); 2],
    b: [(usize, usize); 2],
) -> Result<TensorPolynomial, PrimitiveError> {
    let mut t = TensorExpression::default();
    t.add(a.to_vec(), 1);
    t.add(b.to_vec(), -1);
    t.expand(ctx)
}

fn minus_omit(ctx: Ctx, top: usize, omit: &[usize]) -> Result<SuperPolynomial, PrimitiveError> {
    let m = ctx.m();
    let cols: Vec<usize> = (m + 1..=m + top)
        .filter(|c| !omit.contains(&(c - m)))
        .collect();
    Ok(dminus_abstract(ctx, &cols)?)
}

/// Symbolic check of the two congruences: for `1 ≤ i < m`,
/// `ρ_{i,j₁}⊗ρ_{i+1,j₂} − ρ_{i+1,j₁}⊗ρ_{i,j₂}` is divisible by `D⁺(1..i)`,
/// and for `1 ≤ j < n`, `ρ_{i₁,j}⊗ρ_{i₂,j+1} − ρ_{i₁,j+1}⊗ρ_{i₂,j}` is
/// divisible by `D⁻(m+1..m+j)`. Both are also compared with their closed
/// forms as sums of antisymmetrized `y` tensors.
pub fn check_congruences(m: usize, n: usize) -> Result<Vec<IdentityCheck>, PrimitiveError> {
    let ctx = Ctx::new(m, n)?;
    let y = |k: usize, s: usize| y_index(k, m + s, m, n);
    let mut div_plus = IdentityCheck {
        name: "l3 divisibility".into(),
        checked: 0,
        failures: Vec::new(),
    };
    let mut closed_plus = IdentityCheck {
        name: "l3 closed form".into(),
        checked: 0,
        failures: Vec::new(),
    };
    for i in 1..m {
        let d = plus_factor(ctx, i)?;
        for j1 in 1..=n {
            for j2 in 1..=n {
                let diff = pair_difference(ctx, [(i, j1), (i + 1, j2)], [(i + 1, j1), (i, j2)])?;
                div_plus.checked += 1;
                if diff.divide(&d).is_none() {
                    div_plus.failures.push(format!("i={i} j1={j1} j2={j2}"));
                }
                let mut closed = TensorPolynomial::new();
                for r1 in i..=m {
                    for r2 in r1 + 1..=m {
                        let mut pc: Vec<usize> = (1..i).collect();
                        pc.extend([r1, r2]);
                        let dp = &d * &dplus(ctx, &pc)?;
                        for s1 in 1..=j1 {
                            for s2 in 1..=j2 {
                                let dm =
                                    &minus_omit(ctx, j1, &[s1])? * &minus_omit(ctx, j2, &[s2])?;
                                let c = (&dp * &dm).scale(sign(s1 + s2 + j1 + j2));
                                closed.add(vec![y(r1, s1), y(r2, s2)], c.clone());
                                closed.add(vec![y(r2, s1), y(r1, s2)], -&c);
                            }
                        }
                    }
                }
                closed_plus.checked += 1;
                if !diff.sub(&closed).is_zero() {
                    closed_plus.failures.push(format!("i={i} j1={j1} j2={j2}"));
                }
            }
        }
    }
    let mut div_minus = IdentityCheck {
        name: "l4 divisibility".into(),
        checked: 0,
        failures: Vec::new(),
    };
    let mut closed_minus = IdentityCheck {
        name: "l4 closed form".into(),
        checked: 0,
        failures: Vec::new(),
    };
    for j in 1..n {
        let d = minus_factor(ctx, j)?;
        for i1 in 1..=m {
            for i2 in 1..=m {
                let diff = pair_difference(ctx, [(i1, j), (i2, j + 1)], [(i1, j + 1), (i2, j)])?;
                div_minus.checked += 1;
                if diff.divide(&d).is_none() {
                    div_minus.failures.push(format!("i1={i1} i2={i2} j={j}"));
                }
                let mut closed = TensorPolynomial::new();
                for r1 in i1..=m {
                    for r2 in i2..=m {
                        let mut c1: Vec<usize> = (1..i1).collect();
                        c1.push(r1);
                        let mut c2: Vec<usize> = (1..i2).collect();
                        c2.push(r2);
                        let dp = &dplus(ctx, &c1)? * &dplus(ctx, &c2)?;
                        for s1 in 1..=j + 1 {
                            for s2 in s1 + 1..=j + 1 {
                                let dm = &d * &minus_omit(ctx, j + 1, &[s1, s2])?;
                                let c = (&dp * &dm).scale(sign(s1 + s2 + 1));
                                closed.add(vec![y(r1, s1), y(r2, s2)], c.clone());
                                closed.add(vec![y(r1, s2), y(r2, s1)], -&c);
                            }
                        }
                    }
                }
                closed_minus.checked += 1;
                if !diff.sub(&closed).is_zero() {
                    closed_minus.failures.push(format!("i1={i1} i2={i2} j={j}"));
                }
            }
        }
    }
    Ok(vec![div_plus, closed_plus, div_minus, closed_minus])
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn single_factor_is_fixed() {
        let h = hook(2, 2, &[2, 2], &[1]);
        let mi = MultiIndex::from_parts(&[2], &[1], 2, 2).unwrap();
        let pos = default_positioning(&h, &mi).unwrap();
        let t = sigma_tensor(&mi, &pos).unwrap();
        assert_eq!(t.terms().collect::<Vec<_>>(), vec![(&[(2, 1)][..], 1)]);
    }

    #[test]
    fn bad_positioning_is_rejected() {
        let h = hook(2, 2, &[2, 2], &[1]);
        let mi = MultiIndex::from_parts(&[1, 2], &[1, 1], 2, 2).unwrap();
        let mut pos = default_positioning(&h, &mi).unwrap();
        pos.p_plus.swap(0, 1);
        assert!(matches!(
            sigma_tensor(&mi, &pos),
            Err(PrimitiveError::IncompatiblePositioning(_))
        ));
    }

    #[test]
    fn congruences_small() {
        for c in check_congruences(2, 2).unwrap() {
            assert!(c.holds() && c.checked > 0, "{c:?}");
        }
    }
}
