//! Symbolic verification of the determinantal identities for `D⁺` and `D⁻`.
//!
//! The `D⁻` families run in abstract mode, where the entries of `D⁻` are the
//! free even generators of the `C₂₂` block. [`check_dminus_expanded`] repeats
//! the exchange identity with the fully localized `D⁻` on small contexts.

use super::det::{dminus, dminus_abstract, dplus, permutations_with_sign};
use super::localized::LocalizedElement;
use super::poly::{Ctx, SuperPolynomial};
use super::SuperringError;
use crate::par::{self, Parallelism};
use serde::Serialize;
use std::collections::HashMap;

/// Ranges for the identity sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityParams {
    /// Largest `s` (number of `a` indices).
    pub max_s: usize,
    /// Largest offset `u`.
    pub max_u: usize,
    pub mode: Parallelism,
}

impl Default for IdentityParams {
    fn default() -> Self {
        IdentityParams {
            max_s: 3,
            max_u: 2,
            mode: Parallelism::default(),
        }
    }
}

/// Outcome for one family of identities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of [`check_det_identities`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DetIdentityReport {
    pub m: usize,
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl DetIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn total_checked(&self) -> usize {
        self.checks.iter().map(|c| c.checked).sum()
    }
}

fn tuples(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| (lo..=hi).map(move |x| [t.clone(), vec![x]].concat()))
            .collect();
    }
    out
}

fn increasing(lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
    tuples(lo, hi, k)
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// Memoized determinant lookups for one worker.
struct Dets {
    ctx: Ctx,
    plus: HashMap<Vec<usize>, SuperPolynomial>,
    minus: HashMap<Vec<usize>, SuperPolynomial>,
}

impl Dets {
    fn new(ctx: Ctx) -> Self {
        Dets {
            ctx,
            plus: HashMap::new(),
            minus: HashMap::new(),
        }
    }

    fn plus(&mut self, cols: &[usize]) -> SuperPolynomial {
        let ctx = self.ctx;
        self.plus
            .entry(cols.to_vec())
            .or_insert_with(|| dplus(ctx, cols).expect("columns in range"))
            .clone()
    }

    fn minus(&mut self, cols: &[usize]) -> SuperPolynomial {
        let ctx = self.ctx;
        self.minus
            .entry(cols.to_vec())
            .or_insert_with(|| dminus_abstract(ctx, cols).expect("columns in range"))
            .clone()
    }

    /// `D⁻(m+1, …, â, …, m+j)`, zero when `a > m+j`.
    fn minus_omit(&mut self, j: usize, a: usize) -> SuperPolynomial {
        let m = self.ctx.m();
        if a > m + j {
            return SuperPolynomial::zero(self.ctx);
        }
        let cols: Vec<usize> = (m + 1..=m + j).filter(|&c| c != a).collect();
        self.minus(&cols)
    }
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    [a, b].concat()
}

fn without(a: &[usize], t: usize) -> Vec<usize> {
    a.iter()
        .enumerate()
        .filter(|&(u, _)| u != t)
        .map(|(_, &x)| x)
        .collect()
}

fn signed(sign: i64, p: SuperPolynomial) -> SuperPolynomial {
    if sign < 0 {
        -&p
    } else {
        p
    }
}

/// `Σ_t (−1)^{s−t} F(x, a_t) G(a without a_t)` against `F(x) G(a)`.
fn exchange(
    dets: &mut Dets,
    x: &[usize],
    a: &[usize],
    plus: bool,
) -> (SuperPolynomial, SuperPolynomial) {
    let s = a.len();
    let det = |d: &mut Dets, cols: &[usize]| if plus { d.plus(cols) } else { d.minus(cols) };
    let mut lhs = SuperPolynomial::zero(dets.ctx);
    for t in 0..s {
        let term = &det(dets, &concat(x, &[a[t]])) * &det(dets, &without(a, t));
        lhs = &lhs + &signed(if (s - 1 - t).is_multiple_of(2) { 1 } else { -1 }, term);
    }
    let rhs = &det(dets, x) * &det(dets, a);
    (lhs, rhs)
}

fn alternating_product(
    dets: &mut Dets,
    a: &[usize],
    mut factor: impl FnMut(&mut Dets, usize, usize) -> SuperPolynomial,
) -> SuperPolynomial {
    let mut lhs = SuperPolynomial::zero(dets.ctx);
    for (perm, sign) in permutations_with_sign(a.len()) {
        let mut prod = SuperPolynomial::integer(dets.ctx, sign);
        for (t, &p) in perm.iter().enumerate() {
            if prod.is_zero() {
                break;
            }
            prod = &prod * &factor(dets, t + 1, a[p]);
        }
        lhs = &lhs + &prod;
    }
    lhs
}

fn run_family<T: Sync + std::fmt::Debug>(
    name: &str,
    ctx: Ctx,
    cases: Vec<T>,
    mode: Parallelism,
    f: impl Fn(&mut Dets, &T) -> (SuperPolynomial, SuperPolynomial) + Sync + Send,
) -> IdentityCheck {
    let results = par::map(&cases, mode, |case| {
        let mut dets = Dets::new(ctx);
        let (l, r) = f(&mut dets, case);
        (l == r).then_some(()).ok_or_else(|| format!("{case:?}"))
    });
    let failures: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    IdentityCheck {
        name: name.to_string(),
        checked: cases.len(),
        failures,
    }
}

/// Checks the exchange, alternating-product and staircase identities for
/// `D⁺` (needs `m ≥ 2`) and their `D⁻` counterparts (needs `n ≥ 2`) for every
/// index choice within `params`.
pub fn check_det_identities(
    m: usize,
    n: usize,
    params: IdentityParams,
) -> Result<DetIdentityReport, SuperringError> {
    let ctx = Ctx::new(m, n)?;
    let mut checks = Vec::new();
    let max_s = params.max_s;

    let mut d2 = Vec::new();
    let mut d3 = Vec::new();
    for s in 2..=max_s.min(m) {
        for x in tuples(1, m, s - 1) {
            for a in tuples(1, m, s) {
                d2.push((x.clone(), a.clone()));
                d3.push((x.clone(), a));
            }
        }
    }
    checks.push(run_family("d2", ctx, d2, params.mode, |d, (x, a)| {
        exchange(d, x, a, true)
    }));
    checks.push(run_family("d3", ctx, d3, params.mode, |d, (x, a)| {
        let lhs = alternating_product(d, a, |d, t, at| d.plus(&concat(&x[..t - 1], &[at])));
        let mut rhs = d.plus(a);
        for t in 1..a.len() {
            rhs = &rhs * &d.plus(&x[..t]);
        }
        (lhs, rhs)
    }));

    let mut pr1 = Vec::new();
    for u in 1..=params.max_u {
        for s in 2..=max_s {
            if u + s - 1 <= m {
                for a in tuples(1, m, s) {
                    pr1.push((u, a));
                }
            }
        }
    }
    checks.push(run_family("pr1", ctx, pr1, params.mode, |d, (u, a)| {
        let u = *u;
        let lhs = alternating_product(d, a, |d, t, at| {
            let head: Vec<usize> = (1..=u + t - 2).collect();
            d.plus(&concat(&head, &[at]))
        });
        let head: Vec<usize> = (1..u).collect();
        let mut rhs = d.plus(&concat(&head, a));
        for t in 1..a.len() {
            rhs = &rhs * &d.plus(&(1..=u + t - 1).collect::<Vec<_>>());
        }
        (lhs, rhs)
    }));

    let mut d2m = Vec::new();
    for s in 2..=max_s.min(n) {
        for x in tuples(m + 1, m + n, s - 1) {
            for a in tuples(m + 1, m + n, s) {
                d2m.push((x.clone(), a));
            }
        }
    }
    checks.push(run_family("d2'", ctx, d2m, params.mode, |d, (x, a)| {
        exchange(d, x, a, false)
    }));

    let mut pr2 = Vec::new();
    for u in 1..=params.max_u {
        for s in 2..=max_s {
            if u + s - 1 <= n {
                for a in increasing(m + 1, m + u + s - 1, s) {
                    pr2.push((u, a));
                }
            }
        }
    }
    checks.push(run_family("pr2", ctx, pr2, params.mode, |d, (u, a)| {
        let u = *u;
        let lhs = alternating_product(d, a, |d, t, at| d.minus_omit(u + t - 1, at));
        let rest: Vec<usize> = (m + 1..=m + u + a.len() - 1)
            .filter(|c| !a.contains(c))
            .collect();
        let mut rhs = d.minus(&rest);
        for t in 1..a.len() {
            rhs = &rhs * &d.minus(&(m + 1..=m + u + t - 1).collect::<Vec<_>>());
        }
        (lhs, rhs)
    }));

    Ok(DetIdentityReport { m, n, checks })
}

/// The `D⁻` exchange identity with every `D⁻` fully localized, for `s = 2`.
pub fn check_dminus_expanded(m: usize, n: usize) -> Result<IdentityCheck, SuperringError> {
    let ctx = Ctx::new(m, n)?;
    let mut cache: HashMap<Vec<usize>, LocalizedElement> = HashMap::new();
    let mut get = |cols: &[usize]| -> Result<LocalizedElement, SuperringError> {
        if let Some(v) = cache.get(cols) {
            return Ok(v.clone());
        }
        let v = dminus(ctx, cols)?;
        cache.insert(cols.to_vec(), v.clone());
        Ok(v)
    };
    let mut checked = 0;
    let mut failures = Vec::new();
    if n >= 2 {
        for x in tuples(m + 1, m + n, 1) {
            for a in tuples(m + 1, m + n, 2) {
                let l1 = get(&concat(&x, &[a[1]]))?.mul(&get(&[a[0]])?);
                let l2 = get(&concat(&x, &[a[0]]))?.mul(&get(&[a[1]])?);
                let lhs = l1.sub(&l2);
                let rhs = get(&x)?.mul(&get(&a)?);
                checked += 1;
                if lhs != rhs {
                    failures.push(format!("x={x:?} a={a:?}"));
                }
            }
        }
    }
    Ok(IdentityCheck {
        name: "d2' expanded".to_string(),
        checked,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_holds() {
        let rep = check_det_identities(
            3,
            2,
            IdentityParams {
                mode: Parallelism::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(rep.all_hold(), "{rep:?}");
        assert!(rep.checks.iter().all(|c| c.checked > 0));
    }

    #[test]
    fn d2_example_two_by_two() {
        let ctx = Ctx::new(3, 1).unwrap();
        let mut d = Dets::new(ctx);
        let (l, r) = exchange(&mut d, &[1], &[2, 3], true);
        assert_eq!(l, r);
        let direct = &(&d.plus(&[1, 3]) * &d.plus(&[2])) - &(&d.plus(&[1, 2]) * &d.plus(&[3]));
        assert_eq!(direct, &d.plus(&[1]) * &d.plus(&[2, 3]));
    }

    #[test]
    fn expanded_exchange_small() {
        let c = check_dminus_expanded(1, 2).unwrap();
        assert!(c.holds() && c.checked == 8, "{c:?}");
    }
}
