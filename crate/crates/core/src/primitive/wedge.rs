//! Exterior-algebra expressions over the odd symbols `y_{kl}` and the
//! vectors `ρ_{i|j}` and `ρ̄_{I|J}`.

use super::{MultiIndex, PrimitiveError};
use crate::superring::{dminus_abstract, dplus, Ctx, SuperPolynomial};
use std::collections::BTreeMap;
use std::fmt;

/// Bit position of `y_{kl}` (`1 ≤ k ≤ m < l ≤ m+n`) in a wedge mask.
pub fn y_index(k: usize, l: usize, m: usize, n: usize) -> usize {
    assert!(
        (1..=m).contains(&k) && (m + 1..=m + n).contains(&l),
        "y_{{{k},{l}}} out of range"
    );
    (k - 1) * n + (l - m - 1)
}

/// Inverse of [`y_index`].
pub fn y_symbol(index: usize, m: usize, n: usize) -> (usize, usize) {
    assert!(index < m * n, "wedge index {index} out of range");
    (index / n + 1, m + 1 + index % n)
}

/// Sorts a product of anticommuting symbols, returning the sign of the
/// sorting permutation, or `None` when a symbol repeats.
pub fn wedge_reduce<T: Ord + Clone>(items: &[T]) -> Option<(i64, Vec<T>)> {
    let mut v = items.to_vec();
    let mut sign = 1;
    for a in 1..v.len() {
        let mut b = a;
        while b > 0 && v[b - 1] > v[b] {
            v.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// Sign of appending `y_index` to a sorted wedge monomial `mask`.
fn append_sign(mask: u64, index: usize) -> i64 {
    if ((mask >> index) >> 1).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An element of `A ⊗ ∧Y`: wedge monomials (bit masks of `y_{kl}`) with
/// even polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeExpression {
    ctx: Ctx,
    terms: BTreeMap<u64, SuperPolynomial>,
}

impl WedgeExpression {
    pub fn zero(ctx: Ctx) -> Self {
        WedgeExpression {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    /// The degree-zero expression `p`.
    pub fn scalar(p: SuperPolynomial) -> Self {
        let mut w = Self::zero(p.ctx());
        w.add_term(0, p);
        w
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of wedge monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &SuperPolynomial)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn coefficient(&self, mask: u64) -> SuperPolynomial {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(|| SuperPolynomial::zero(self.ctx))
    }

    /// Adds `coeff · y_mask`, dropping the term if it cancels.
    pub fn add_term(&mut self, mask: u64, coeff: SuperPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mask, c) in other.terms() {
            out.add_term(mask, c.clone());
        }
        out
    }

    /// Multiplies every coefficient by the even polynomial `p`.
    pub fn scale(&self, p: &SuperPolynomial) -> Self {
        let mut out = Self::zero(self.ctx);
        for (mask, c) in self.terms() {
            out.add_term(mask, c * p);
        }
        out
    }

    /// Multiplies every coefficient by an integer.
    pub fn scale_integer(&self, k: i64) -> Self {
        self.scale(&SuperPolynomial::integer(self.ctx, k))
    }

    /// Right wedge product with the linear form `Σ coeff · y_index`.
    pub fn wedge_linear(&self, form: &[(usize, SuperPolynomial)]) -> Self {
        let mut out = Self::zero(self.ctx);
        for (mask, c) in self.terms() {
            for (index, f) in form {
                if mask >> index & 1 == 1 {
                    continue;
                }
                let prod = c * f;
                let prod = if append_sign(mask, *index) < 0 {
                    -&prod
                } else {
                    prod
                };
                out.add_term(mask | 1 << index, prod);
            }
        }
        out
    }

    /// Applies a fallible map to every coefficient.
    pub fn try_map(
        &self,
        mut f: impl FnMut(&SuperPolynomial) -> Result<SuperPolynomial, PrimitiveError>,
    ) -> Result<Self, PrimitiveError> {
        let mut out = Self::zero(self.ctx);
        for (mask, c) in self.terms() {
            out.add_term(mask, f(c)?);
        }
        Ok(out)
    }

    /// Total weight of each term: coefficient weight plus `ε_l − ε_k` per `y_{kl}`.
    pub fn term_weights(&self) -> Result<Vec<Vec<i64>>, PrimitiveError> {
        let (m, n) = (self.ctx.m(), self.ctx.n());
        self.terms()
            .map(|(mask, c)| {
                let mut w = c.weight()?;
                for index in (0..m * n).filter(|&b| mask >> b & 1 == 1) {
                    let (k, l) = y_symbol(index, m, n);
                    w[l - 1] += 1;
                    w[k - 1] -= 1;
                }
                Ok(w)
            })
            .collect()
    }

    /// Number of `y` factors in each term, or `None` when terms disagree.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|k| k.count_ones());
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for WedgeExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let (m, n) = (self.ctx.m(), self.ctx.n());
        for (t, (mask, c)) in self.terms().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for index in (0..m * n).filter(|&b| mask >> b & 1 == 1) {
                let (k, l) = y_symbol(index, m, n);
                write!(f, " y[{k},{l}]")?;
            }
        }
        Ok(())
    }
}

/// `ρ_{i|j} = Σ_{r=i}^m D⁺(1..i−1, r) Σ_{s=1}^j (−1)^{s+j} D⁻(m+1..(m+s)^..m+j) y_{r,m+s}`
/// as a linear form in the `y` symbols, with `D⁻` in abstract mode.
pub fn rho_single(
    ctx: Ctx,
    i: usize,
    j: usize,
) -> Result<Vec<(usize, SuperPolynomial)>, PrimitiveError> {
    let (m, n) = (ctx.m(), ctx.n());
    if i == 0 || i > m || j == 0 || j > n {
        return Err(PrimitiveError::IndexOutOfRange { i, j, m, n });
    }
    let mut form = Vec::new();
    for s in 1..=j {
        let cols: Vec<usize> = (m + 1..=m + j).filter(|&c| c != m + s).collect();
        let minus = dminus_abstract(ctx, &cols)?;
        let minus = if (s + j) % 2 == 1 { -&minus } else { minus };
        for r in i..=m {
            let mut pcols: Vec<usize> = (1..i).collect();
            pcols.push(r);
            let coeff = &dplus(ctx, &pcols)? * &minus;
            if !coeff.is_zero() {
                form.push((y_index(r, m + s, m, n), coeff));
            }
        }
    }
    form.sort_by_key(|p| p.0);
    Ok(form)
}

/// A formal integer combination of wedge products `ρ̄_{I|J}`, each stored
/// under its sorted multiindex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RhoSum {
    terms: BTreeMap<Vec<(usize, usize)>, i64>,
}

impl RhoSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff · ρ_{p_1} ∧ … ∧ ρ_{p_k}` after reordering.
    pub fn add(&mut self, pairs: &[(usize, usize)], coeff: i64) {
        if coeff == 0 {
            return;
        }
        if let Some((sign, key)) = wedge_reduce(pairs) {
            let e = self.terms.entry(key.clone()).or_insert(0);
            *e += sign * coeff;
            if *e == 0 {
                self.terms.remove(&key);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[(usize, usize)], i64)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), *v))
    }

    pub fn coefficient(&self, pairs: &[(usize, usize)]) -> i64 {
        self.terms.get(pairs).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `ρ̄_{I|J}` as a one-term [`RhoSum`].
pub fn rho_bar(mi: &MultiIndex) -> RhoSum {
    let mut s = RhoSum::new();
    s.add(&mi.pairs, 1);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_round_trip() {
        for k in 1..=3 {
            for l in 4..=5 {
                assert_eq!(y_symbol(y_index(k, l, 3, 2), 3, 2), (k, l));
            }
        }
    }

    #[test]
    fn reduce_signs() {
        assert_eq!(wedge_reduce(&[3, 1, 2]), Some((1, vec![1, 2, 3])));
        assert_eq!(wedge_reduce(&[2, 1]), Some((-1, vec![1, 2])));
        assert_eq!(wedge_reduce(&[2, 1, 2]), None);
        assert_eq!(wedge_reduce::<u8>(&[]), Some((1, vec![])));
    }

    #[test]
    fn rho_single_small_cases() {
        let ctx = Ctx::new(1, 2).unwrap();
        let f = rho_single(ctx, 1, 1).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(
            f[0],
            (
                y_index(1, 2, 1, 2),
                SuperPolynomial::generator(ctx, 1, 1).unwrap()
            )
        );
        let ctx = Ctx::new(2, 1).unwrap();
        let f = rho_single(ctx, 2, 1).unwrap();
        assert_eq!(f, vec![(y_index(2, 3, 2, 1), dplus(ctx, &[1, 2]).unwrap())]);
    }

    #[test]
    fn wedge_antisymmetry() {
        let ctx = Ctx::new(2, 2).unwrap();
        let a = rho_single(ctx, 1, 1).unwrap();
        let b = rho_single(ctx, 2, 2).unwrap();
        let one = WedgeExpression::scalar(SuperPolynomial::one(ctx));
        let ab = one.wedge_linear(&a).wedge_linear(&b);
        let ba = one.wedge_linear(&b).wedge_linear(&a);
        assert!(!ab.is_zero());
        assert_eq!(ab, ba.scale_integer(-1));
        assert!(one.wedge_linear(&a).wedge_linear(&a).is_zero());
    }

    #[test]
    fn rho_sum_cancels_duplicates() {
        let mut s = RhoSum::new();
        s.add(&[(1, 1), (1, 1)], 1);
        assert!(s.is_zero());
        s.add(&[(1, 2), (1, 1)], 1);
        s.add(&[(1, 1), (1, 2)], 1);
        assert!(s.is_zero());
    }
}
