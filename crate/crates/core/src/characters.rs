//! Schur, skew Schur and hook Schur polynomials as exact integer polynomials
//! in two blocks of commuting variables `x₁..x_m` and `y₁..y_n`.

use crate::lr::lr_coefficient;
use crate::shapes::{conjugate, Cell, HookSplit, Partition, ShapeError, SkewShape};
use serde::Serialize;
use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors raised by character computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("{lambda} is not an ({m}|{n})-hook partition")]
    NotHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A polynomial with integer coefficients in `x₁..x_m, y₁..y_n`, stored as a
/// map from dense exponent vectors to coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SymPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        SymPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize, n: usize) -> Self {
        let mut p = Self::zero(m, n);
        p.add_term(vec![0; m + n], 1);
        p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
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

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Adds `coeff · x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) {
        assert_eq!(exponents.len(), self.m + self.n, "exponent length");
        if coeff == 0 {
            return;
        }
        let e = self.terms.entry(exponents.clone()).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exponents);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_blocks(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (e, c) in self.terms() {
            out.add_term(e.to_vec(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_blocks(other);
        let mut out = Self::zero(self.m, self.n);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        out
    }

    fn check_blocks(&self, other: &Self) {
        assert_eq!(
            (self.m, self.n),
            (other.m, other.n),
            "variable blocks differ"
        );
    }

    /// `x(a) · y(b)` where `a` is read in the variables of its first block and
    /// `b` in the variables of its first block renamed to `y`.
    pub fn concat(a: &Self, b: &Self) -> Self {
        assert!(a.n == 0 && b.n == 0, "concat expects pure x-block inputs");
        let mut out = Self::zero(a.m, b.m);
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                let mut e = ea.to_vec();
                e.extend_from_slice(eb);
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Renames a pure `x` polynomial into the `y` block.
    pub fn into_y(self) -> Self {
        assert_eq!(self.n, 0, "into_y expects a pure x-block input");
        SymPoly {
            m: 0,
            n: self.m,
            terms: self.terms,
        }
    }

    /// Invariance under every adjacent transposition inside each block.
    pub fn is_block_symmetric(&self) -> bool {
        let swaps = (1..self.m).chain((self.m + 1)..(self.m + self.n));
        swaps.into_iter().all(|k| {
            self.terms().all(|(e, c)| {
                let mut f = e.to_vec();
                f.swap(k - 1, k);
                self.coefficient(&f) == c
            })
        })
    }

    /// Decomposes a block-symmetric polynomial as `Σ c_{μν} S_μ(x) S_ν(y)` by
    /// repeatedly peeling off the lexicographically largest monomial.
    pub fn schur_expansion(&self) -> BTreeMap<(Partition, Partition), i64> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while let Some((e, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), *c)) {
            let to_partition = |s: &[u32]| {
                Partition::new(s.iter().map(|&v| v as usize).collect())
                    .expect("leading exponent of a symmetric polynomial is a partition")
            };
            let mu = to_partition(&e[..self.m]);
            let nu = to_partition(&e[self.m..]);
            let basis = SymPoly::concat(&schur(&mu, self.m), &schur(&nu, self.n));
            rest = rest.sub(&basis.scale(c));
            out.insert((mu, nu), c);
        }
        out
    }
}

impl fmt::Display for SymPoly {
    /// Terms in graded lexicographic order, highest first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, i64)> = self.terms.iter().map(|(e, c)| (e, *c)).collect();
        terms.sort_by_key(|(e, _)| Reverse((e.iter().sum::<u32>(), (*e).clone())));
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| {
                    let name = if v < self.m {
                        format!("x{}", v + 1)
                    } else {
                        format!("y{}", v - self.m + 1)
                    };
                    if p == 1 {
                        name
                    } else {
                        format!("{name}^{p}")
                    }
                })
                .collect();
            let body = factors.join("*");
            let mag = c.unsigned_abs();
            let text = match (body.is_empty(), mag) {
                (true, _) => mag.to_string(),
                (false, 1) => body,
                (false, _) => format!("{mag}*{body}"),
            };
            match (k, c < 0) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

/// Generating polynomial of the `(m|n)`-semistandard fillings of `shape`.
///
/// Letters `1..=m` are weakly increasing along rows and strictly down columns.
/// Letters `m+1..=m+n` are strictly increasing along rows and weakly down
/// columns. With `n = 0` this is the ordinary semistandard condition.
pub fn hook_fillings(shape: &SkewShape, m: usize, n: usize) -> SymPoly {
    let cells = shape.cells();
    let mut out = SymPoly::zero(m, n);
    let mut filled: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut exps = vec![0u32; m + n];
    fn rec(
        k: usize,
        cells: &[Cell],
        m: usize,
        n: usize,
        filled: &mut BTreeMap<Cell, usize>,
        exps: &mut Vec<u32>,
        out: &mut SymPoly,
    ) {
        if k == cells.len() {
            out.add_term(exps.clone(), 1);
            return;
        }
        let c = cells[k];
        let left = (c.col > 1)
            .then(|| filled.get(&Cell::new(c.row, c.col - 1)).copied())
            .flatten();
        let above = (c.row > 1)
            .then(|| filled.get(&Cell::new(c.row - 1, c.col)).copied())
            .flatten();
        for v in 1..=m + n {
            let even = v <= m;
            let row_ok = left.is_none_or(|a| a < v || (a == v && even));
            let col_ok = above.is_none_or(|a| a < v || (a == v && !even));
            if !(row_ok && col_ok) {
                continue;
            }
            filled.insert(c, v);
            exps[v - 1] += 1;
            rec(k + 1, cells, m, n, filled, exps, out);
            exps[v - 1] -= 1;
            filled.remove(&c);
        }
    }
    rec(0, &cells, m, n, &mut filled, &mut exps, &mut out);
    out
}

/// `S_μ(x₁..x_k)`, the sum of content monomials over semistandard tableaux.
pub fn schur(mu: &Partition, num_vars: usize) -> SymPoly {
    hook_fillings(&SkewShape::straight(mu.clone()), num_vars, 0)
}

/// `S_{α/β}(x₁..x_k)`.
pub fn skew_schur(shape: &SkewShape, num_vars: usize) -> SymPoly {
    hook_fillings(shape, num_vars, 0)
}

/// `HS_λ` by enumeration of `(m|n)`-semistandard hook tableaux. Either block
/// may be empty.
pub fn hook_schur_tableaux(
    lambda: &Partition,
    m: usize,
    n: usize,
) -> Result<SymPoly, CharacterError> {
    if lambda.part(m + 1) > n {
        return Err(CharacterError::NotHook {
            lambda: lambda.clone(),
            m,
            n,
        });
    }
    Ok(hook_fillings(&SkewShape::straight(lambda.clone()), m, n))
}

/// `HS_λ = Σ_{μ ⊆ λ⁺} S_μ(x) S_{λ'/μ'}(y)`.
pub fn hook_schur(lambda: &HookSplit) -> Result<SymPoly, CharacterError> {
    let full = lambda.lambda();
    let conj = conjugate(&full);
    let mut out = SymPoly::zero(lambda.m, lambda.n);
    for mu in lambda.lambda_plus.subpartitions() {
        let shape = SkewShape::new(conj.clone(), conjugate(&mu))?;
        let term = SymPoly::concat(&schur(&mu, lambda.m), &skew_schur(&shape, lambda.n));
        out = out.add(&term);
    }
    Ok(out)
}

/// `HS_λ = Σ_{μ ⊆ λ⁺} Σ_ν C^{λ'}_{μ'ν} S_μ(x) S_ν(y)`.
pub fn hook_schur_lr(lambda: &HookSplit) -> SymPoly {
    let (m, n) = (lambda.m, lambda.n);
    let mut out = SymPoly::zero(m, n);
    for (mu, nu, c) in hook_schur_coefficients(lambda) {
        out = out.add(&SymPoly::concat(&schur(&mu, m), &schur(&nu, n)).scale(c as i64));
    }
    out
}

/// The nonzero coefficients `C^{λ'}_{μ'ν}` with `μ ⊆ λ⁺` and `ℓ(ν) ≤ n`.
pub fn hook_schur_coefficients(lambda: &HookSplit) -> Vec<(Partition, Partition, u64)> {
    let full = lambda.lambda();
    let mut out = Vec::new();
    for mu in lambda.lambda_plus.subpartitions() {
        let rest = full.size() - mu.size();
        for nu in Partition::all_of_size(rest, lambda.n, usize::MAX) {
            let c = primitive_multiplicity(lambda, &mu, &nu);
            if c > 0 {
                out.push((mu.clone(), nu, c));
            }
        }
    }
    out
}

/// `C^{λ'}_{μ'ν}`, the multiplicity of even-primitive vectors of weight
/// `(μ|ν)` in the induced module of `λ`.
pub fn primitive_multiplicity(lambda: &HookSplit, mu: &Partition, nu: &Partition) -> u64 {
    lr_coefficient(&conjugate(&lambda.lambda()), &conjugate(mu), nu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::hook_split;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_slice(parts)
    }

    #[test]
    fn small_schur_polynomials() {
        assert_eq!(schur(&p(&[1]), 2).to_string(), "x1 + x2");
        let diff = schur(&p(&[2]), 2).sub(&schur(&p(&[1, 1]), 2));
        assert_eq!(diff.to_string(), "x1^2 + x2^2");
        assert!(schur(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(schur(&Partition::empty(), 3), SymPoly::one(3, 0));
    }

    #[test]
    fn skew_examples() {
        let same = SkewShape::new(p(&[2, 1]), p(&[2, 1])).unwrap();
        assert_eq!(skew_schur(&same, 2), SymPoly::one(2, 0));
        let s = skew_schur(&SkewShape::new(p(&[2, 1]), p(&[1])).unwrap(), 2);
        let expected = schur(&p(&[1]), 2).mul(&schur(&p(&[1]), 2));
        assert_eq!(s, expected);
    }

    #[test]
    fn hook_examples() {
        let one = hook_schur_tableaux(&p(&[1]), 1, 1).unwrap();
        assert_eq!(one.to_string(), "x1 + y1");
        let column = hook_schur_tableaux(&p(&[1, 1]), 1, 1).unwrap();
        assert_eq!(column.to_string(), "x1*y1 + y1^2");
        let h = hook_split(&p(&[1, 1]), 1, 1).unwrap();
        assert_eq!(hook_schur(&h).unwrap(), column);
        assert_eq!(hook_schur_lr(&h), column);
    }

    #[test]
    fn not_hook_is_rejected() {
        assert!(matches!(
            hook_schur_tableaux(&p(&[2, 2, 2]), 1, 1),
            Err(CharacterError::NotHook { .. })
        ));
    }

    #[test]
    fn expansion_recovers_coefficients() {
        let h = hook_split(&p(&[2, 1]), 1, 1).unwrap();
        let hs = hook_schur(&h).unwrap();
        let expansion = hs.schur_expansion();
        for (mu, nu, c) in hook_schur_coefficients(&h) {
            assert_eq!(expansion[&(mu, nu)], c as i64);
        }
        assert_eq!(expansion.len(), hook_schur_coefficients(&h).len());
    }
}
