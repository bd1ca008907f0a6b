//! Multiindices `(I|J)`, their contents and weights, and the exponent
//! bookkeeping of `v_{I|J}`.

use super::PrimitiveError;
use crate::shapes::HookSplit;
use crate::tableaux::SkewTableau;
use serde::{Deserialize, Serialize};

/// An ordered list of pairs `(i_s, j_s)` with `1 ≤ i_s ≤ m` and `1 ≤ j_s ≤ n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    pub pairs: Vec<(usize, usize)>,
}

impl MultiIndex {
    /// Validates the bounds.
    pub fn new(pairs: Vec<(usize, usize)>, m: usize, n: usize) -> Result<Self, PrimitiveError> {
        if let Some(&(i, j)) = pairs
            .iter()
            .find(|&&(i, j)| i == 0 || i > m || j == 0 || j > n)
        {
            return Err(PrimitiveError::IndexOutOfRange { i, j, m, n });
        }
        Ok(MultiIndex { pairs })
    }

    /// Builds from the two components `I` and `J`.
    pub fn from_parts(
        i: &[usize],
        j: &[usize],
        m: usize,
        n: usize,
    ) -> Result<Self, PrimitiveError> {
        assert_eq!(i.len(), j.len(), "I and J must have equal length");
        Self::new(i.iter().copied().zip(j.iter().copied()).collect(), m, n)
    }

    /// The length `k`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn i(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn j(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }
}

/// `cont(I|J) = (ι|κ)` together with `λ_{I|J}` and its dominance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContentWeight {
    pub iota: Vec<usize>,
    pub kappa: Vec<usize>,
    /// `λ_{I|J}` as `(μ_1, …, μ_m | ν_1, …, ν_n)`.
    pub weight: Vec<i64>,
    pub dominant: bool,
}

fn is_dominant(w: &[i64], m: usize) -> bool {
    let nonincreasing = |s: &[i64]| s.windows(2).all(|p| p[0] >= p[1]);
    w.iter().all(|&x| x >= 0) && nonincreasing(&w[..m]) && nonincreasing(&w[m..])
}

/// Computes the content and `λ_{I|J} = λ − Σ δ⁺_{i_s} + Σ δ⁻_{j_s}`.
pub fn content_and_weight(mi: &MultiIndex, lambda: &HookSplit) -> ContentWeight {
    let (m, n) = (lambda.m, lambda.n);
    let mut iota = vec![0; m];
    let mut kappa = vec![0; n];
    for &(i, j) in &mi.pairs {
        iota[i - 1] += 1;
        kappa[j - 1] += 1;
    }
    let mut weight: Vec<i64> = (1..=m)
        .map(|a| lambda.plus(a) as i64 - iota[a - 1] as i64)
        .collect();
    weight.extend((1..=n).map(|b| lambda.minus(b) as i64 + kappa[b - 1] as i64));
    let dominant = is_dominant(&weight, m);
    ContentWeight {
        iota,
        kappa,
        weight,
        dominant,
    }
}

/// `I` weakly increasing, ties broken by strictly increasing `J`, and `λ_{I|J}` dominant.
pub fn is_left_admissible(mi: &MultiIndex, lambda: &HookSplit) -> bool {
    content_and_weight(mi, lambda).dominant
        && mi
            .pairs
            .windows(2)
            .all(|w| w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 < w[1].1))
}

/// `J` weakly increasing, ties broken by strictly increasing `I`, and `λ_{I|J}` dominant.
pub fn is_right_admissible(mi: &MultiIndex, lambda: &HookSplit) -> bool {
    content_and_weight(mi, lambda).dominant
        && mi
            .pairs
            .windows(2)
            .all(|w| w[0].1 < w[1].1 || (w[0].1 == w[1].1 && w[0].0 < w[1].0))
}

/// Whether `v_{I|J}` is a polynomial, via the symbol-count conditions.
pub fn is_robust(lambda: &HookSplit, mi: &MultiIndex) -> bool {
    let (m, n) = (lambda.m, lambda.n);
    let count_i = |a: usize| mi.pairs.iter().filter(|p| p.0 == a).count();
    let count_j = |b: usize| mi.pairs.iter().filter(|p| p.1 == b).count();
    (1..m).all(|a| count_i(a) <= lambda.plus(a) - lambda.plus(a + 1))
        && count_i(m) <= lambda.plus(m)
        && (2..=n).all(|b| count_j(b) <= lambda.minus(b - 1) - lambda.minus(b))
}

/// Exponents over the factors `D⁺(1..a)` for `a = 1..=m` and
/// `D⁻(m+1..m+b)` for `b = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DenominatorVector {
    pub plus: Vec<i64>,
    pub minus: Vec<i64>,
}

impl DenominatorVector {
    pub fn zero(m: usize, n: usize) -> Self {
        DenominatorVector {
            plus: vec![0; m],
            minus: vec![0; n],
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.plus.iter().chain(&self.minus).all(|&e| e >= 0)
    }

    /// Componentwise difference `self − other`.
    pub fn minus_vector(&self, other: &Self) -> Self {
        DenominatorVector {
            plus: self
                .plus
                .iter()
                .zip(&other.plus)
                .map(|(a, b)| a - b)
                .collect(),
            minus: self
                .minus
                .iter()
                .zip(&other.minus)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Componentwise `max(e, 0)`.
    pub fn positive_part(&self) -> Self {
        DenominatorVector {
            plus: self.plus.iter().map(|&e| e.max(0)).collect(),
            minus: self.minus.iter().map(|&e| e.max(0)).collect(),
        }
    }

    /// Componentwise `max(−e, 0)`.
    pub fn negative_part(&self) -> Self {
        DenominatorVector {
            plus: self.plus.iter().map(|&e| (-e).max(0)).collect(),
            minus: self.minus.iter().map(|&e| (-e).max(0)).collect(),
        }
    }
}

/// Exponents of `v` and of the divisor `∏ D⁺(1..i_s) ∏ D⁻(m+1..m+j_s−1)`.
///
/// The net exponent vector of `v_{I|J}` is `numerator.minus_vector(&denominator)`.
pub fn v_ij_denominator(
    lambda: &HookSplit,
    mi: &MultiIndex,
) -> (DenominatorVector, DenominatorVector) {
    let (m, n) = (lambda.m, lambda.n);
    let numerator = DenominatorVector {
        plus: (1..=m)
            .map(|a| (lambda.plus(a) - lambda.plus(a + 1)) as i64)
            .collect(),
        minus: (1..=n)
            .map(|b| (lambda.minus(b) - lambda.minus(b + 1)) as i64)
            .collect(),
    };
    let mut denominator = DenominatorVector::zero(m, n);
    for &(i, j) in &mi.pairs {
        denominator.plus[i - 1] += 1;
        if j > 1 {
            denominator.minus[j - 2] += 1;
        }
    }
    (numerator, denominator)
}

/// `Q⁺`: reads `T⁺` by columns from left to right, each column top to
/// bottom, giving `(column, entry − m)`.
pub fn q_plus(t_plus: &SkewTableau, m: usize) -> MultiIndex {
    let pairs = t_plus
        .shape()
        .cells_column_major()
        .into_iter()
        .map(|c| (c.col, t_plus.at(c) - m))
        .collect();
    MultiIndex { pairs }
}

/// `Q⁻`: reads `T⁻` by rows from top to bottom, each row left to right,
/// giving `(entry, row)`.
pub fn q_minus(t_minus: &SkewTableau) -> MultiIndex {
    MultiIndex {
        pairs: t_minus.iter().map(|(c, v)| (v, c.row)).collect(),
    }
}

/// A dominant weight shifted by `a⁺` copies of `(1^m|0)` and `a⁻` copies of `(0|1^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BerezinianShift {
    pub shifted: Vec<i64>,
    pub a_plus: i64,
    pub a_minus: i64,
}

/// Minimal `a⁺, a⁻ ≥ 0` making `μ_m ≥ n` and `μ_{m+n} ≥ 0`; the corresponding
/// tensor factors are `D⁺(1..m)^{a⁺}` and `D⁻(m+1..m+n)^{a⁻}`.
pub fn berezinian_shift(lambda: &[i64], m: usize, n: usize) -> BerezinianShift {
    assert_eq!(lambda.len(), m + n, "weight must have m+n components");
    let a_plus = if m > 0 {
        (n as i64 - lambda[m - 1]).max(0)
    } else {
        0
    };
    let a_minus = if n > 0 {
        (-lambda[m + n - 1]).max(0)
    } else {
        0
    };
    let shifted = lambda
        .iter()
        .enumerate()
        .map(|(p, &x)| x + if p < m { a_plus } else { a_minus })
        .collect();
    BerezinianShift {
        shifted,
        a_plus,
        a_minus,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Partition;

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
    fn q_plus_and_weight_of_worked_tableau() {
        let t = SkewTableau::parse(". 4 / 3 5").unwrap();
        let mi = q_plus(&t, 2);
        assert_eq!(mi.pairs, vec![(1, 1), (2, 2), (2, 3)]);
        let cw = content_and_weight(&mi, &hook(2, 3, &[2, 2], &[1, 1]));
        assert_eq!(cw.weight, vec![1, 0, 2, 2, 1]);
        assert!(cw.dominant);
        assert!(q_plus(&SkewTableau::parse("").unwrap(), 2).is_empty());
    }

    #[test]
    fn admissibility() {
        let h = hook(2, 2, &[3, 1], &[1]);
        let mi = MultiIndex::from_parts(&[1, 1], &[1, 2], 2, 2).unwrap();
        assert!(is_left_admissible(&mi, &h));
        let mi = MultiIndex::from_parts(&[1, 1], &[2, 1], 2, 2).unwrap();
        assert!(!is_left_admissible(&mi, &h));
        let mi = MultiIndex::from_parts(&[1, 2], &[1, 1], 2, 2).unwrap();
        assert!(is_right_admissible(&mi, &h));
    }

    #[test]
    fn robustness_matches_exponents() {
        let h = hook(2, 2, &[2, 1], &[1]);
        let mi = MultiIndex::from_parts(&[1, 1], &[1, 2], 2, 2).unwrap();
        assert!(!is_robust(&h, &mi));
        let (num, den) = v_ij_denominator(&h, &mi);
        assert!(!num.minus_vector(&den).is_nonnegative());
        let empty = MultiIndex::default();
        assert!(is_robust(&h, &empty));
        assert_eq!(v_ij_denominator(&h, &empty).0.plus, vec![1, 1]);
    }

    #[test]
    fn berezinian_examples() {
        let b = berezinian_shift(&[0, 0, 0, 0], 2, 2);
        assert_eq!((b.shifted, b.a_plus, b.a_minus), (vec![2, 2, 0, 0], 2, 0));
        let b = berezinian_shift(&[3, 3, 1, -1], 2, 2);
        assert_eq!((b.a_plus, b.a_minus, b.shifted), (0, 1, vec![3, 3, 2, 0]));
    }
}
