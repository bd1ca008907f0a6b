//! Monomials and sparse polynomials in the supercommuting generators `c_{ij}`.

use super::SuperringError;
use crate::budget::Budget;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational coefficient.
pub type Q = Ratio<i128>;

/// Largest supported value of `m + n`.
pub const MAX_DIM: usize = 8;

/// Number of generator slots in a monomial.
pub const MAX_GENS: usize = MAX_DIM * MAX_DIM;

/// The pair `(m, n)` fixing the parity threshold of the indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ctx {
    m: u8,
    n: u8,
}

impl Ctx {
    pub fn new(m: usize, n: usize) -> Result<Self, SuperringError> {
        if m + n == 0 || m + n > MAX_DIM {
            return Err(SuperringError::BadContext { m, n });
        }
        Ok(Ctx {
            m: m as u8,
            n: n as u8,
        })
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// `m + n`.
    pub fn dim(&self) -> usize {
        self.m() + self.n()
    }

    /// Parity `|i|` of a single index: 0 for `i ≤ m`, 1 otherwise.
    pub fn index_parity(&self, i: usize) -> u8 {
        u8::from(i > self.m())
    }

    /// Validates a 1-based index.
    pub fn check_index(&self, i: usize) -> Result<(), SuperringError> {
        if i == 0 || i > self.dim() {
            return Err(SuperringError::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.dim(),
            });
        }
        Ok(())
    }

    /// The generator `c_{ij}`.
    pub fn generator(&self, i: usize, j: usize) -> Result<Generator, SuperringError> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(Generator {
            i,
            j,
            odd: self.index_parity(i) != self.index_parity(j),
        })
    }

    pub(crate) fn slot(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.dim() + (j - 1)
    }

    pub(crate) fn unslot(&self, g: usize) -> (usize, usize) {
        (g / self.dim() + 1, g % self.dim() + 1)
    }

    pub(crate) fn slot_is_odd(&self, g: usize) -> bool {
        let (i, j) = self.unslot(g);
        self.index_parity(i) != self.index_parity(j)
    }
}

/// A generator `c_{ij}` with its parity `|i| + |j|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub i: usize,
    pub j: usize,
    pub odd: bool,
}

/// A product of generators: even exponents plus a set of odd generators.
///
/// The derived order compares total degree first, then the even exponent
/// vector lexicographically, then the odd set. Multiplication by any
/// monomial preserves it, so it serves as the division order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u16,
    even: [u8; MAX_GENS],
    odd: u64,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ev: Vec<(usize, u8)> = self
            .even
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| (g, e))
            .collect();
        write!(f, "Monomial{{even: {ev:?}, odd: {:#x}}}", self.odd)
    }
}

impl Default for Monomial {
    fn default() -> Self {
        Self::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            deg: 0,
            even: [0; MAX_GENS],
            odd: 0,
        }
    }

    pub(crate) fn from_slot(g: usize, odd: bool) -> Self {
        let mut out = Self::one();
        out.deg = 1;
        if odd {
            out.odd = 1 << g;
        } else {
            out.even[g] = 1;
        }
        out
    }

    pub(crate) fn from_parts(even: [u8; MAX_GENS], odd: u64) -> Self {
        let deg = even.iter().map(|&e| u16::from(e)).sum::<u16>() + odd.count_ones() as u16;
        Monomial { deg, even, odd }
    }

    pub(crate) fn even_array(&self) -> [u8; MAX_GENS] {
        self.even
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    /// Bitmask of the odd generator slots present.
    pub fn odd_mask(&self) -> u64 {
        self.odd
    }

    /// Number of odd factors; the parity of the monomial is its residue mod 2.
    pub fn odd_count(&self) -> u32 {
        self.odd.count_ones()
    }

    pub fn is_even(&self) -> bool {
        self.odd_count().is_multiple_of(2)
    }

    pub(crate) fn even_slots(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.even
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(g, &e)| (g, e))
    }

    pub(crate) fn odd_slots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |g| self.odd >> g & 1 == 1)
    }

    /// Product with the sign from sorting odd factors, or `None` when an odd
    /// generator repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(bool, Monomial)> {
        if self.odd & other.odd != 0 {
            return None;
        }
        let mut swaps = 0u32;
        let mut rest = other.odd;
        while rest != 0 {
            let y = rest.trailing_zeros();
            rest &= rest - 1;
            let above = u64::MAX.checked_shl(y + 1).unwrap_or(0);
            swaps += (self.odd & above).count_ones();
        }
        let mut even = self.even;
        for (a, b) in even.iter_mut().zip(other.even.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Some((
            swaps % 2 == 1,
            Monomial {
                deg: self.deg + other.deg,
                even,
                odd: self.odd | other.odd,
            },
        ))
    }

    /// Quotient `self / other` when `other` is even and divides `self`.
    pub(crate) fn div_even(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(other.odd, 0);
        let mut even = self.even;
        for (a, b) in even.iter_mut().zip(other.even.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            even,
            odd: self.odd,
        })
    }

    /// Torus weight: each `c_{ij}` contributes `ε_j`.
    pub fn weight(&self, ctx: Ctx) -> Vec<i64> {
        let mut w = vec![0i64; ctx.dim()];
        for (g, e) in self.even_slots() {
            w[ctx.unslot(g).1 - 1] += i64::from(e);
        }
        for g in self.odd_slots() {
            w[ctx.unslot(g).1 - 1] += 1;
        }
        w
    }

    /// Renders the monomial as `c[i,j]^e * … * c[i,j]`, even factors first.
    pub fn render(&self, ctx: Ctx) -> String {
        let mut parts = Vec::new();
        for (g, e) in self.even_slots() {
            let (i, j) = ctx.unslot(g);
            if e == 1 {
                parts.push(format!("c[{i},{j}]"));
            } else {
                parts.push(format!("c[{i},{j}]^{e}"));
            }
        }
        for g in self.odd_slots() {
            let (i, j) = ctx.unslot(g);
            parts.push(format!("c[{i},{j}]"));
        }
        parts.join(" * ")
    }
}

/// A finite sum of monomials with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPolynomial {
    ctx: Ctx,
    terms: BTreeMap<Monomial, Q>,
}

impl fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperPolynomial({self})")
    }
}

impl SuperPolynomial {
    pub fn zero(ctx: Ctx) -> Self {
        SuperPolynomial {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: Ctx) -> Self {
        Self::constant(ctx, Q::one())
    }

    pub fn constant(ctx: Ctx, q: Q) -> Self {
        Self::from_terms(ctx, [(Monomial::one(), q)])
    }

    pub fn integer(ctx: Ctx, k: i64) -> Self {
        Self::constant(ctx, Q::from_integer(i128::from(k)))
    }

    /// The single generator `c_{ij}`.
    pub fn generator(ctx: Ctx, i: usize, j: usize) -> Result<Self, SuperringError> {
        let g = ctx.generator(i, j)?;
        Ok(Self::from_terms(
            ctx,
            [(Monomial::from_slot(ctx.slot(i, j), g.odd), Q::one())],
        ))
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(ctx: Ctx, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut map: BTreeMap<Monomial, Q> = BTreeMap::new();
        for (mono, q) in terms {
            *map.entry(mono).or_insert_with(Q::zero) += q;
        }
        map.retain(|_, q| !q.is_zero());
        SuperPolynomial { ctx, terms: map }
    }

    pub fn ctx(&self) -> Ctx {
        self.ctx
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

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    /// The largest monomial and its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of a monomial, zero if absent.
    pub fn coefficient(&self, mono: &Monomial) -> Q {
        self.terms.get(mono).copied().unwrap_or_else(Q::zero)
    }

    /// Parity of a homogeneous element; `None` for zero or mixed parity.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| (m.odd_count() % 2) as u8);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Every term has no odd factors.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.odd_mask() == 0)
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|q| q.is_integer())
    }

    pub fn scale(&self, q: Q) -> Self {
        if q.is_zero() {
            return Self::zero(self.ctx);
        }
        SuperPolynomial {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), *c * q))
                .collect(),
        }
    }

    /// Multiplies every term by a monomial on the right.
    pub fn mul_monomial(&self, mono: &Monomial, q: Q) -> Self {
        Self::from_terms(
            self.ctx,
            self.terms.iter().filter_map(|(m, c)| {
                m.mul(mono)
                    .map(|(neg, prod)| (prod, if neg { -(*c * q) } else { *c * q }))
            }),
        )
    }

    fn check_ctx(&self, other: &Self) {
        assert_eq!(
            self.ctx, other.ctx,
            "polynomials from different (m|n) contexts"
        );
    }

    /// Product, failing if cancelled or if the result exceeds the term cap.
    pub fn mul_budgeted(&self, other: &Self, budget: &Budget) -> Result<Self, SuperringError> {
        self.check_ctx(other);
        budget.check(0)?;
        let mut acc: HashMap<Monomial, Q> =
            HashMap::with_capacity(self.len().saturating_mul(other.len()).min(1 << 16));
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((neg, prod)) = a.mul(b) {
                    let c = *ca * *cb;
                    let e = acc.entry(prod).or_insert_with(Q::zero);
                    if neg {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
            budget.check(acc.len())?;
        }
        let terms: BTreeMap<Monomial, Q> = acc.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        Ok(SuperPolynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.ctx);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient by a nonzero polynomial in the even generators only.
    ///
    /// Runs single-divisor division under the monomial order and stops at the
    /// first leading term that the divisor's leading monomial does not divide.
    pub fn exact_divide(&self, q: &SuperPolynomial) -> Result<SuperPolynomial, SuperringError> {
        self.check_ctx(q);
        if q.is_zero() || !q.is_even() {
            return Err(SuperringError::InvalidDivisor);
        }
        let (lq, lc) = q
            .leading_term()
            .map(|(m, c)| (m.clone(), *c))
            .expect("nonzero divisor");
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, Q> = BTreeMap::new();
        while let Some((lm, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), *c)) {
            let t = lm.div_even(&lq).ok_or(SuperringError::NotDivisible)?;
            let coef = c / lc;
            for (m, qc) in &q.terms {
                let prod = m.mul(&t).expect("even divisor").1;
                match rem.entry(prod) {
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= *qc * coef;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(-(*qc * coef));
                    }
                }
            }
            quot.insert(t, coef);
        }
        Ok(SuperPolynomial {
            ctx: self.ctx,
            terms: quot,
        })
    }

    /// Common torus weight of all terms.
    pub fn weight(&self) -> Result<Vec<i64>, SuperringError> {
        let mut it = self.terms.keys().map(|m| m.weight(self.ctx));
        let first = it.next().ok_or(SuperringError::ZeroHasNoWeight)?;
        if it.all(|w| w == first) {
            Ok(first)
        } else {
            Err(SuperringError::Inhomogeneous)
        }
    }

    /// One term per line, leading term first, in the textual dump format.
    pub fn dump(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| render_term(self.ctx, m, c))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn render_term(ctx: Ctx, m: &Monomial, c: &Q) -> String {
    if m.degree() == 0 {
        c.to_string()
    } else {
        format!("{c} * {}", m.render(ctx))
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k == 0 {
                write!(f, "{}", render_term(self.ctx, m, c))?;
            } else if c.is_negative() {
                write!(f, " - {}", render_term(self.ctx, m, &-*c))?;
            } else {
                write!(f, " + {}", render_term(self.ctx, m, c))?;
            }
        }
        Ok(())
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.check_ctx(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let e = terms.entry(m.clone()).or_insert_with(Q::zero);
            *e += *c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        SuperPolynomial {
            ctx: self.ctx,
            terms,
        }
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        SuperPolynomial {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -*c)).collect(),
        }
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        self.mul_budgeted(rhs, &Budget::unlimited())
            .expect("unlimited budget")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for SuperPolynomial {
            type Output = SuperPolynomial;
            fn $f(self, rhs: SuperPolynomial) -> SuperPolynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ctx: Ctx, i: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::generator(ctx, i, j).unwrap()
    }

    #[test]
    fn odd_transposition_sign() {
        let ctx = Ctx::new(2, 1).unwrap();
        let a = &c(ctx, 1, 3) * &c(ctx, 2, 3);
        let b = &c(ctx, 2, 3) * &c(ctx, 1, 3);
        assert_eq!(b, -&a);
        assert_eq!(a.to_string(), "1 * c[1,3] * c[2,3]");
        assert!((&c(ctx, 1, 3) * &c(ctx, 1, 3)).is_zero());
    }

    #[test]
    fn even_products_commute() {
        let ctx = Ctx::new(2, 1).unwrap();
        let p = &(&c(ctx, 1, 1) + &c(ctx, 1, 2)) * &c(ctx, 2, 1);
        assert_eq!(
            p,
            &(&c(ctx, 1, 1) * &c(ctx, 2, 1)) + &(&c(ctx, 1, 2) * &c(ctx, 2, 1))
        );
        assert!(p.is_even());
    }

    #[test]
    fn division_examples() {
        let ctx = Ctx::new(2, 1).unwrap();
        let d = &(&c(ctx, 1, 1) * &c(ctx, 2, 2)) - &(&c(ctx, 1, 2) * &c(ctx, 2, 1));
        let p = &d * &c(ctx, 1, 1);
        assert_eq!(p.exact_divide(&d).unwrap(), c(ctx, 1, 1));
        assert_eq!(p.exact_divide(&SuperPolynomial::one(ctx)).unwrap(), p);
        assert_eq!(
            c(ctx, 1, 1).exact_divide(&d),
            Err(SuperringError::NotDivisible)
        );
        assert_eq!(
            p.exact_divide(&c(ctx, 1, 3)),
            Err(SuperringError::InvalidDivisor)
        );
        let odd = &(&c(ctx, 1, 3) * &c(ctx, 2, 3)) * &d;
        assert_eq!(odd.exact_divide(&d).unwrap(), &c(ctx, 1, 3) * &c(ctx, 2, 3));
    }

    #[test]
    fn weights() {
        let ctx = Ctx::new(2, 1).unwrap();
        let d = &(&c(ctx, 1, 1) * &c(ctx, 2, 2)) - &(&c(ctx, 1, 2) * &c(ctx, 2, 1));
        assert_eq!(d.weight().unwrap(), vec![1, 1, 0]);
        assert_eq!(
            (&c(ctx, 1, 1) + &c(ctx, 1, 2)).weight(),
            Err(SuperringError::Inhomogeneous)
        );
    }

    #[test]
    fn dump_format() {
        let ctx = Ctx::new(1, 1).unwrap();
        let p = &(&c(ctx, 1, 1) * &c(ctx, 1, 1)) - &(&c(ctx, 2, 1) * &c(ctx, 1, 2));
        assert_eq!(p.dump(), "1 * c[1,1]^2\n1 * c[1,2] * c[2,1]");
        assert_eq!(SuperPolynomial::integer(ctx, 3).dump(), "3");
    }
}
