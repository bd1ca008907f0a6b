//! Determinants `D⁺`, `D⁻`, the adjugate of `C₁₁`, the elements `y_{kl}` and
//! the highest vector.

use super::localized::LocalizedElement;
use super::poly::{Ctx, SuperPolynomial};
use super::SuperringError;
use crate::budget::Budget;
use crate::shapes::HookSplit;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// All permutations of `0..s` with their signs, in lexicographic order.
pub fn permutations_with_sign(s: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i64)>) {
        let s = used.len();
        if prefix.len() == s {
            let inversions = (0..s)
                .flat_map(|a| (a + 1..s).map(move |b| (a, b)))
                .filter(|&(a, b)| prefix[a] > prefix[b])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..s {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(s), &mut vec![false; s], &mut out);
    out
}

/// Leibniz determinant of a square matrix of pairwise commuting polynomials.
pub fn det_poly(ctx: Ctx, matrix: &[Vec<SuperPolynomial>]) -> SuperPolynomial {
    let s = matrix.len();
    let mut total = SuperPolynomial::zero(ctx);
    for (perm, sign) in permutations_with_sign(s) {
        let mut prod = SuperPolynomial::integer(ctx, sign);
        for (r, &c) in perm.iter().enumerate() {
            prod = &prod * &matrix[r][c];
            if prod.is_zero() {
                break;
            }
        }
        total = &total + &prod;
    }
    total
}

/// Leibniz determinant of a square matrix of pairwise commuting localized elements.
pub fn det_localized(ctx: Ctx, matrix: &[Vec<LocalizedElement>]) -> LocalizedElement {
    let s = matrix.len();
    let mut total = LocalizedElement::zero(ctx);
    for (perm, sign) in permutations_with_sign(s) {
        let mut prod = LocalizedElement::from_poly(SuperPolynomial::integer(ctx, sign));
        for (r, &c) in perm.iter().enumerate() {
            prod = prod.mul(&matrix[r][c]);
            if prod.is_zero() {
                break;
            }
        }
        total = total.add(&prod);
    }
    total
}

fn has_repeat(cols: &[usize]) -> bool {
    cols.iter()
        .enumerate()
        .any(|(a, x)| cols[a + 1..].contains(x))
}

fn check_range(cols: &[usize], lo: usize, hi: usize) -> Result<(), SuperringError> {
    match cols.iter().find(|&&c| c < lo || c > hi) {
        Some(&index) => Err(SuperringError::IndexOutOfRange { index, lo, hi }),
        None => Ok(()),
    }
}

fn gen(ctx: Ctx, i: usize, j: usize) -> SuperPolynomial {
    SuperPolynomial::generator(ctx, i, j).expect("index checked by caller")
}

/// `D⁺(cols)`: the determinant with entry `(r, t) = c_{r, cols[t]}`, rows `1..=s`.
pub fn dplus(ctx: Ctx, cols: &[usize]) -> Result<SuperPolynomial, SuperringError> {
    check_range(cols, 1, ctx.m())?;
    if cols.len() > ctx.m() {
        return Err(SuperringError::IndexOutOfRange {
            index: cols.len(),
            lo: 0,
            hi: ctx.m(),
        });
    }
    if has_repeat(cols) {
        return Ok(SuperPolynomial::zero(ctx));
    }
    let matrix: Vec<Vec<SuperPolynomial>> = (1..=cols.len())
        .map(|r| cols.iter().map(|&c| gen(ctx, r, c)).collect())
        .collect();
    Ok(det_poly(ctx, &matrix))
}

/// `D⁺(cols)` by recursive expansion along the first row.
pub fn dplus_laplace(ctx: Ctx, cols: &[usize]) -> Result<SuperPolynomial, SuperringError> {
    check_range(cols, 1, ctx.m())?;
    fn expand(ctx: Ctx, row: usize, cols: &[usize]) -> SuperPolynomial {
        if cols.is_empty() {
            return SuperPolynomial::one(ctx);
        }
        let mut total = SuperPolynomial::zero(ctx);
        for (t, &c) in cols.iter().enumerate() {
            let minor: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(u, _)| u != t)
                .map(|(_, &x)| x)
                .collect();
            let term = &gen(ctx, row, c) * &expand(ctx, row + 1, &minor);
            total = if t % 2 == 0 {
                &total + &term
            } else {
                &total - &term
            };
        }
        total
    }
    Ok(expand(ctx, 1, cols))
}

/// `D = det(C₁₁) = D⁺(1, …, m)`, cached per context.
pub fn big_d(ctx: Ctx) -> SuperPolynomial {
    static CACHE: OnceLock<Mutex<HashMap<Ctx, SuperPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().expect("cache lock").get(&ctx) {
        return d.clone();
    }
    let cols: Vec<usize> = (1..=ctx.m()).collect();
    let d = dplus(ctx, &cols).expect("valid columns");
    cache.lock().expect("cache lock").insert(ctx, d.clone());
    d
}

/// The adjugate `A` of `C₁₁`: `A_{ij} = (−1)^{i+j} M_{ji}` with `M_{ji}` the
/// minor deleting row `j` and column `i`. Indexed from zero.
pub fn adjugate(ctx: Ctx) -> Vec<Vec<SuperPolynomial>> {
    let m = ctx.m();
    (1..=m)
        .map(|i| {
            (1..=m)
                .map(|j| {
                    let rows: Vec<usize> = (1..=m).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (1..=m).filter(|&c| c != i).collect();
                    let minor: Vec<Vec<SuperPolynomial>> = rows
                        .iter()
                        .map(|&r| cols.iter().map(|&c| gen(ctx, r, c)).collect())
                        .collect();
                    let det = det_poly(ctx, &minor);
                    if (i + j) % 2 == 0 {
                        det
                    } else {
                        -&det
                    }
                })
                .collect()
        })
        .collect()
}

/// `y_{kl} = (Σ_a A_{ka} c_{al}) / D` for `k ≤ m < l`.
pub fn y(ctx: Ctx, k: usize, l: usize) -> Result<LocalizedElement, SuperringError> {
    check_range(&[k], 1, ctx.m())?;
    check_range(&[l], ctx.m() + 1, ctx.dim())?;
    let adj = adjugate(ctx);
    let mut num = SuperPolynomial::zero(ctx);
    for a in 1..=ctx.m() {
        num = &num + &(&adj[k - 1][a - 1] * &gen(ctx, a, l));
    }
    Ok(LocalizedElement::new(num, 1))
}

/// `φ(c_{kl})` for `l > m`: equals `y_{kl}` when `k ≤ m` and
/// `c_{kl} − Σ_{a,b} c_{ka} A_{ab} c_{bl} / D` when `k > m`.
pub fn phi(ctx: Ctx, k: usize, l: usize) -> Result<LocalizedElement, SuperringError> {
    ctx.check_index(k)?;
    check_range(&[l], ctx.m() + 1, ctx.dim())?;
    if k <= ctx.m() {
        return y(ctx, k, l);
    }
    let m = ctx.m();
    if m == 0 {
        return Ok(LocalizedElement::from_poly(gen(ctx, k, l)));
    }
    let adj = adjugate(ctx);
    let mut correction = SuperPolynomial::zero(ctx);
    for a in 1..=m {
        for b in 1..=m {
            correction = &correction + &(&(&gen(ctx, k, a) * &adj[a - 1][b - 1]) * &gen(ctx, b, l));
        }
    }
    let num = &(&big_d(ctx) * &gen(ctx, k, l)) - &correction;
    Ok(LocalizedElement::new(num, 1))
}

/// `D⁻(cols)`: determinant of `φ(c_{m+r, cols[u]})`; `D⁻(∅) = 1`.
pub fn dminus(ctx: Ctx, cols: &[usize]) -> Result<LocalizedElement, SuperringError> {
    check_range(cols, ctx.m() + 1, ctx.dim())?;
    if has_repeat(cols) {
        return Ok(LocalizedElement::zero(ctx));
    }
    let m = ctx.m();
    let mut matrix = Vec::with_capacity(cols.len());
    for r in 1..=cols.len() {
        let row: Result<Vec<_>, _> = cols.iter().map(|&c| phi(ctx, m + r, c)).collect();
        matrix.push(row?);
    }
    Ok(det_localized(ctx, &matrix))
}

/// `D⁻(cols)` with the entries `φ(c_{m+r,l})` replaced by the even
/// generators `c_{m+r,l}` themselves.
pub fn dminus_abstract(ctx: Ctx, cols: &[usize]) -> Result<SuperPolynomial, SuperringError> {
    check_range(cols, ctx.m() + 1, ctx.dim())?;
    if has_repeat(cols) {
        return Ok(SuperPolynomial::zero(ctx));
    }
    let m = ctx.m();
    let matrix: Vec<Vec<SuperPolynomial>> = (1..=cols.len())
        .map(|r| cols.iter().map(|&c| gen(ctx, m + r, c)).collect())
        .collect();
    Ok(det_poly(ctx, &matrix))
}

fn hook_ctx(lambda: &HookSplit) -> Result<Ctx, SuperringError> {
    Ctx::new(lambda.m, lambda.n)
}

/// `v = ∏_a D⁺(1..a)^{λ⁺_a − λ⁺_{a+1}} ∏_b D⁻(m+1..m+b)^{λ⁻_b − λ⁻_{b+1}}`.
pub fn highest_vector(lambda: &HookSplit) -> Result<LocalizedElement, SuperringError> {
    highest_vector_budgeted(lambda, &Budget::unlimited())
}

/// [`highest_vector`] with a cancellation check between factors.
pub fn highest_vector_budgeted(
    lambda: &HookSplit,
    budget: &Budget,
) -> Result<LocalizedElement, SuperringError> {
    let ctx = hook_ctx(lambda)?;
    let (m, n) = (ctx.m(), ctx.n());
    let mut v = LocalizedElement::one(ctx);
    for a in 1..=m {
        let e = lambda.plus(a) - lambda.plus(a + 1);
        if e > 0 {
            let f = LocalizedElement::from_poly(dplus(ctx, &(1..=a).collect::<Vec<_>>())?);
            for _ in 0..e {
                v = v.mul_budgeted(&f, budget)?;
            }
        }
    }
    for b in 1..=n {
        let e = lambda.minus(b) - lambda.minus(b + 1);
        if e > 0 {
            let f = dminus(ctx, &(m + 1..=m + b).collect::<Vec<_>>())?;
            for _ in 0..e {
                v = v.mul_budgeted(&f, budget)?;
            }
        }
    }
    Ok(v)
}

/// The highest vector with each `D⁻` in abstract form.
pub fn highest_vector_abstract(lambda: &HookSplit) -> Result<SuperPolynomial, SuperringError> {
    let ctx = hook_ctx(lambda)?;
    let (m, n) = (ctx.m(), ctx.n());
    let mut v = SuperPolynomial::one(ctx);
    for a in 1..=m {
        let f = dplus(ctx, &(1..=a).collect::<Vec<_>>())?;
        v = &v * &f.pow((lambda.plus(a) - lambda.plus(a + 1)) as u32);
    }
    for b in 1..=n {
        let f = dminus_abstract(ctx, &(m + 1..=m + b).collect::<Vec<_>>())?;
        v = &v * &f.pow((lambda.minus(b) - lambda.minus(b + 1)) as u32);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

    fn c(ctx: Ctx, i: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::generator(ctx, i, j).unwrap()
    }

    #[test]
    fn dplus_examples() {
        let ctx = Ctx::new(3, 1).unwrap();
        let d12 = &(&c(ctx, 1, 1) * &c(ctx, 2, 2)) - &(&c(ctx, 1, 2) * &c(ctx, 2, 1));
        assert_eq!(dplus(ctx, &[1, 2]).unwrap(), d12);
        assert_eq!(dplus(ctx, &[3]).unwrap(), c(ctx, 1, 3));
        assert!(dplus(ctx, &[1, 1]).unwrap().is_zero());
        assert!(matches!(
            dplus(ctx, &[4]),
            Err(SuperringError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn y_examples() {
        let ctx = Ctx::new(1, 2).unwrap();
        let y12 = y(ctx, 1, 2).unwrap();
        assert_eq!((y12.numerator().clone(), y12.d_power()), (c(ctx, 1, 2), 1));
        let ctx = Ctx::new(2, 1).unwrap();
        let y13 = y(ctx, 1, 3).unwrap();
        let num = &(&c(ctx, 2, 2) * &c(ctx, 1, 3)) - &(&c(ctx, 1, 2) * &c(ctx, 2, 3));
        assert_eq!((y13.numerator().clone(), y13.d_power()), (num, 1));
    }

    #[test]
    fn dminus_examples() {
        let ctx = Ctx::new(1, 1).unwrap();
        let d = dminus(ctx, &[2]).unwrap();
        let num = &(&c(ctx, 1, 1) * &c(ctx, 2, 2)) - &(&c(ctx, 2, 1) * &c(ctx, 1, 2));
        assert_eq!((d.numerator().clone(), d.d_power()), (num, 1));
        assert_eq!(dminus(ctx, &[]).unwrap(), LocalizedElement::one(ctx));
        let ctx = Ctx::new(1, 2).unwrap();
        assert!(dminus(ctx, &[2, 2]).unwrap().is_zero());
    }

    #[test]
    fn highest_vector_examples() {
        let h = HookSplit::new(1, 1, Partition::from_slice(&[1]), Partition::empty()).unwrap();
        let ctx = Ctx::new(1, 1).unwrap();
        assert_eq!(
            highest_vector(&h).unwrap(),
            LocalizedElement::from_poly(c(ctx, 1, 1))
        );
        let h = HookSplit::new(
            1,
            1,
            Partition::from_slice(&[1]),
            Partition::from_slice(&[1]),
        )
        .unwrap();
        let v = highest_vector(&h).unwrap();
        let expect = &(&c(ctx, 1, 1) * &c(ctx, 2, 2)) - &(&c(ctx, 2, 1) * &c(ctx, 1, 2));
        assert_eq!(v, LocalizedElement::from_poly(expect));
        assert_eq!(v.weight().unwrap(), vec![1, 1]);
    }

    #[test]
    fn derive_on_determinants() {
        let ctx = Ctx::new(3, 1).unwrap();
        assert!(dplus(ctx, &[1, 2]).unwrap().derive(2, 1).unwrap().is_zero());
        assert_eq!(
            dplus(ctx, &[1, 3]).unwrap().derive(3, 2).unwrap(),
            dplus(ctx, &[1, 2]).unwrap()
        );
    }
}
