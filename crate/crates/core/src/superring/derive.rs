//! Right superderivations `ᵢⱼD` acting on polynomials.

use super::poly::{Monomial, SuperPolynomial, Q};
use super::SuperringError;

impl SuperPolynomial {
    /// Applies `ᵢⱼD`, the right superderivation with `(c_{kl})ᵢⱼD = δ_{li} c_{kj}`.
    ///
    /// Each monomial is read as the ordered product of its even factors
    /// followed by its odd factors in canonical order. Replacing a factor
    /// picks up `(−1)^{(|i|+|j|)·|rest|}` where `rest` is the part to its right.
    pub fn derive(&self, i: usize, j: usize) -> Result<SuperPolynomial, SuperringError> {
        let ctx = self.ctx();
        ctx.check_index(i)?;
        ctx.check_index(j)?;
        let op_odd = ctx.index_parity(i) != ctx.index_parity(j);
        let mut out: Vec<(Monomial, Q)> = Vec::new();
        for (mono, coef) in self.terms() {
            let odd_all = mono.odd_mask();
            let odd_list: Vec<usize> = mono.odd_slots().collect();
            let even_mono = Monomial::from_parts(mono.even_array(), 0);
            let odd_mono = Monomial::from_parts([0; super::MAX_GENS], odd_all);
            for (g, e) in mono.even_slots() {
                let (k, l) = ctx.unslot(g);
                if l != i {
                    continue;
                }
                let mut rest = mono.even_array();
                rest[g] -= 1;
                let prefix = Monomial::from_parts(rest, 0);
                let flip = op_odd && odd_list.len() % 2 == 1;
                let c = *coef * Q::from_integer(i128::from(e));
                push_product(&mut out, ctx, &prefix, k, j, &odd_mono, flip, c);
            }
            for (t, &g) in odd_list.iter().enumerate() {
                let (k, l) = ctx.unslot(g);
                if l != i {
                    continue;
                }
                let before: u64 = odd_list[..t].iter().fold(0, |acc, &h| acc | 1 << h);
                let after: u64 = odd_list[t + 1..].iter().fold(0, |acc, &h| acc | 1 << h);
                let prefix = Monomial::from_parts(even_mono.even_array(), before);
                let suffix = Monomial::from_parts([0; super::MAX_GENS], after);
                let flip = op_odd && (odd_list.len() - t - 1) % 2 == 1;
                push_product(&mut out, ctx, &prefix, k, j, &suffix, flip, *coef);
            }
        }
        Ok(SuperPolynomial::from_terms(ctx, out))
    }
}

#[allow(clippy::too_many_arguments)]
fn push_product(
    out: &mut Vec<(Monomial, Q)>,
    ctx: super::Ctx,
    prefix: &Monomial,
    k: usize,
    j: usize,
    suffix: &Monomial,
    flip: bool,
    coef: Q,
) {
    let gen = Monomial::from_slot(ctx.slot(k, j), ctx.slot_is_odd(ctx.slot(k, j)));
    let Some((s1, left)) = prefix.mul(&gen) else {
        return;
    };
    let Some((s2, full)) = left.mul(suffix) else {
        return;
    };
    let negative = flip ^ s1 ^ s2;
    out.push((full, if negative { -coef } else { coef }));
}

#[cfg(test)]
mod tests {
    use super::super::*;

    fn c(ctx: Ctx, i: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::generator(ctx, i, j).unwrap()
    }

    #[test]
    fn delta_rule() {
        let ctx = Ctx::new(2, 1).unwrap();
        assert_eq!(c(ctx, 1, 2).derive(2, 1).unwrap(), c(ctx, 1, 1));
        assert!(c(ctx, 1, 1).derive(2, 1).unwrap().is_zero());
    }

    #[test]
    fn odd_operator_sign() {
        let ctx = Ctx::new(1, 2).unwrap();
        // c12 c13 with the odd operator ₃₁D: the c13 factor is last, c12 is followed by one odd factor.
        let p = &c(ctx, 1, 2) * &c(ctx, 1, 3);
        let d = p.derive(3, 1).unwrap();
        assert_eq!(d, &c(ctx, 1, 2) * &c(ctx, 1, 1));
        let d = p.derive(2, 1).unwrap();
        assert_eq!(d, -&(&c(ctx, 1, 1) * &c(ctx, 1, 3)));
    }
}
