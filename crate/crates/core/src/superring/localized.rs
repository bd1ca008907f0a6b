//! Elements `N / D^k` of the localization at `D = det(C₁₁)`.

use super::det::big_d;
use super::poly::{Ctx, SuperPolynomial};
use super::SuperringError;
use crate::budget::Budget;
use std::fmt;

/// A fraction `numerator / D^d_power`, kept with `d_power` minimal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LocalizedElement {
    num: SuperPolynomial,
    d_power: u32,
}

impl fmt::Debug for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalizedElement({self})")
    }
}

impl fmt::Display for LocalizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d_power == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / D^{}", self.num, self.d_power)
        }
    }
}

impl LocalizedElement {
    /// Builds `num / D^d_power` and cancels common powers of `D`.
    pub fn new(num: SuperPolynomial, d_power: u32) -> Self {
        let mut out = LocalizedElement { num, d_power };
        out.normalize();
        out
    }

    pub fn from_poly(p: SuperPolynomial) -> Self {
        LocalizedElement { num: p, d_power: 0 }
    }

    pub fn zero(ctx: Ctx) -> Self {
        Self::from_poly(SuperPolynomial::zero(ctx))
    }

    pub fn one(ctx: Ctx) -> Self {
        Self::from_poly(SuperPolynomial::one(ctx))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() || self.num.ctx().m() == 0 {
            self.d_power = 0;
            return;
        }
        let d = big_d(self.num.ctx());
        while self.d_power > 0 {
            match self.num.exact_divide(&d) {
                Ok(q) => {
                    self.num = q;
                    self.d_power -= 1;
                }
                Err(_) => break,
            }
        }
    }

    pub fn ctx(&self) -> Ctx {
        self.num.ctx()
    }

    pub fn numerator(&self) -> &SuperPolynomial {
        &self.num
    }

    pub fn d_power(&self) -> u32 {
        self.d_power
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The element as a polynomial when no denominator remains.
    pub fn as_polynomial(&self) -> Option<&SuperPolynomial> {
        (self.d_power == 0).then_some(&self.num)
    }

    fn lifted(&self, k: u32) -> SuperPolynomial {
        if k == self.d_power {
            return self.num.clone();
        }
        &self.num * &big_d(self.ctx()).pow(k - self.d_power)
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.d_power.max(other.d_power);
        Self::new(&self.lifted(k) + &other.lifted(k), k)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LocalizedElement {
            num: -&self.num,
            d_power: self.d_power,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, self.d_power + other.d_power)
    }

    /// Product that honours the budget's cancellation flag and term cap.
    pub fn mul_budgeted(&self, other: &Self, budget: &Budget) -> Result<Self, SuperringError> {
        Ok(Self::new(
            self.num.mul_budgeted(&other.num, budget)?,
            self.d_power + other.d_power,
        ))
    }

    pub fn mul_poly(&self, p: &SuperPolynomial) -> Self {
        Self::new(&self.num * p, self.d_power)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.ctx());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Applies `ᵢⱼD` using the quotient rule with denominator `D^k`.
    pub fn derive(&self, i: usize, j: usize) -> Result<Self, SuperringError> {
        let dn = self.num.derive(i, j)?;
        if self.d_power == 0 {
            return Ok(Self::from_poly(dn));
        }
        let d = big_d(self.ctx());
        let dd = d.derive(i, j)?;
        if dd.is_zero() {
            return Ok(Self::new(dn, self.d_power));
        }
        let k = i64::from(self.d_power);
        let top = &(&dn * &d) - &(&(&self.num * &dd) * &SuperPolynomial::integer(self.ctx(), k));
        Ok(Self::new(top, self.d_power + 1))
    }

    /// Torus weight: numerator weight minus `d_power · (1^m, 0^n)`.
    pub fn weight(&self) -> Result<Vec<i64>, SuperringError> {
        let mut w = self.num.weight()?;
        let m = self.ctx().m();
        for x in w.iter_mut().take(m) {
            *x -= i64::from(self.d_power);
        }
        Ok(w)
    }
}
