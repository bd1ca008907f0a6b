//! Partitions, skew diagrams, cells and the (m|n)-hook split.
//!
//! All coordinates are 1-based: the cell `[i,j]` lies in row `i` and
//! column `j`. Partitions are stored without trailing zeros so that
//! structural equality coincides with mathematical equality.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Errors raised by shape constructors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("parts {0:?} are not weakly decreasing")]
    NotPartition(Vec<usize>),
    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: Partition, inner: Partition },
    #[error("{lambda} is not an ({m}|{n})-hook partition")]
    NotHook {
        lambda: Partition,
        m: usize,
        n: usize,
    },
    #[error("invalid hook data: {0}")]
    InvalidHook(String),
}

/// An integer partition with trailing zeros removed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from a literal, panicking on invalid input.
    pub fn from_slice(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("literal partition must be weakly decreasing")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts in order.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The 1-based part `λ_i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    /// True when `inner` fits inside `self` componentwise.
    pub fn contains(&self, inner: &Partition) -> bool {
        contains(self, inner)
    }

    /// All partitions of `size` with at most `max_parts` parts, each at most `max_part`,
    /// in reverse lexicographic order.
    pub fn all_of_size(size: usize, max_parts: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            rem: usize,
            cap: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        rec(size, max_part, max_parts, &mut cur, &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            outer: &[usize],
            i: usize,
            cap: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
                return;
            }
            for p in (0..=outer[i].min(cap)).rev() {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, ShapeError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The conjugate partition: `result_j = #{i : p_i ≥ j}`.
pub fn conjugate(p: &Partition) -> Partition {
    let first = p.part(1);
    let parts = (1..=first)
        .map(|j| p.0.iter().filter(|&&x| x >= j).count())
        .collect();
    Partition(parts)
}

/// Componentwise containment `inner ⊆ outer`.
pub fn contains(outer: &Partition, inner: &Partition) -> bool {
    inner.len() <= outer.len() && inner.0.iter().zip(&outer.0).all(|(a, b)| a <= b)
}

/// A diagram cell `[row, col]`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl From<[usize; 2]> for Cell {
    fn from(a: [usize; 2]) -> Self {
        Cell::new(a[0], a[1])
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.row, self.col)
    }
}

/// A skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !contains(&outer, &inner) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `outer / ∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows of the outer shape.
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    /// Columns occupied in row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        (self.inner.part(i) + 1)..=self.outer.part(i)
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col > self.inner.part(c.row) && c.col <= self.outer.part(c.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        skew_cells(self)
    }

    /// Cells in column-major order: columns left to right, each top to bottom.
    pub fn cells_column_major(&self) -> Vec<Cell> {
        let mut cells = self.cells();
        cells.sort_by_key(|c| (c.col, c.row));
        cells
    }

    /// The conjugate skew shape.
    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: conjugate(&self.outer),
            inner: conjugate(&self.inner),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// All cells `[i,j]` with `inner_i < j ≤ outer_i`, in row-major order.
pub fn skew_cells(s: &SkewShape) -> Vec<Cell> {
    (1..=s.num_rows())
        .flat_map(|i| s.row_range(i).map(move |j| Cell::new(i, j)))
        .collect()
}

/// The split `λ = (λ⁺ | λ⁻)` of an (m|n)-hook partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookSplit {
    pub m: usize,
    pub n: usize,
    pub lambda_plus: Partition,
    pub lambda_minus: Partition,
}

impl HookSplit {
    /// Builds a split directly from its two halves.
    pub fn new(
        m: usize,
        n: usize,
        lambda_plus: Partition,
        lambda_minus: Partition,
    ) -> Result<Self, ShapeError> {
        if m == 0 || n == 0 {
            return Err(ShapeError::InvalidHook(format!(
                "m={m} and n={n} must both be positive"
            )));
        }
        if lambda_plus.len() > m {
            return Err(ShapeError::InvalidHook(format!(
                "{lambda_plus} has more than {m} parts"
            )));
        }
        if lambda_minus.len() > n {
            return Err(ShapeError::InvalidHook(format!(
                "{lambda_minus} has more than {n} parts"
            )));
        }
        if !lambda_minus.is_empty() && lambda_plus.part(m) < lambda_minus.len() {
            return Err(ShapeError::InvalidHook(format!(
                "{lambda_plus} followed by the conjugate of {lambda_minus} is not a partition"
            )));
        }
        Ok(HookSplit {
            m,
            n,
            lambda_plus,
            lambda_minus,
        })
    }

    /// The full partition `λ`: `λ⁺` followed by the conjugate of `λ⁻`.
    pub fn lambda(&self) -> Partition {
        let mut parts = self.lambda_plus.parts().to_vec();
        if !self.lambda_minus.is_empty() {
            parts.resize(self.m, 0);
            parts.extend_from_slice(conjugate(&self.lambda_minus).parts());
        }
        Partition::new(parts).expect("validated at construction")
    }

    /// `λ⁺_a`, zero beyond `m`.
    pub fn plus(&self, a: usize) -> usize {
        self.lambda_plus.part(a)
    }

    /// `λ⁻_b`, zero beyond `n`.
    pub fn minus(&self, b: usize) -> usize {
        self.lambda_minus.part(b)
    }

    /// True when `λ⁺_m ≥ n`, the irreducibility condition.
    pub fn is_typical(&self) -> bool {
        self.plus(self.m) >= self.n
    }
}

impl fmt::Display for HookSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plus: Vec<String> = (1..=self.m).map(|a| self.plus(a).to_string()).collect();
        let minus: Vec<String> = (1..=self.n).map(|b| self.minus(b).to_string()).collect();
        write!(f, "({}|{})", plus.join(","), minus.join(","))
    }
}

/// Splits `λ` into `(λ⁺|λ⁻)`; fails when `λ_{m+1} > n`.
pub fn hook_split(lambda: &Partition, m: usize, n: usize) -> Result<HookSplit, ShapeError> {
    if m == 0 || n == 0 {
        return Err(ShapeError::InvalidHook(format!(
            "m={m} and n={n} must both be positive"
        )));
    }
    if lambda.part(m + 1) > n {
        return Err(ShapeError::NotHook {
            lambda: lambda.clone(),
            m,
            n,
        });
    }
    let t = lambda.len();
    let plus = Partition::new(lambda.parts()[..t.min(m)].to_vec()).expect("prefix of a partition");
    let tail = if t > m {
        lambda.parts()[m..].to_vec()
    } else {
        Vec::new()
    };
    let minus = conjugate(&Partition::new(tail).expect("suffix of a partition"));
    HookSplit::new(m, n, plus, minus)
}

/// All (m|n)-hook partitions of `size`.
pub fn hook_partitions(size: usize, m: usize, n: usize) -> Vec<Partition> {
    Partition::all_of_size(size, usize::MAX, usize::MAX)
        .into_iter()
        .filter(|p| p.part(m + 1) <= n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::from_slice(v)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&p(&[5, 4, 4, 3, 1])), p(&[5, 4, 4, 3, 1]));
        assert_eq!(conjugate(&p(&[5, 4, 4, 3, 2, 1])), p(&[6, 5, 4, 3, 1]));
        assert_eq!(conjugate(&p(&[2, 2, 1])), p(&[3, 2]));
        assert_eq!(conjugate(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn containment() {
        assert!(contains(&p(&[2, 2]), &p(&[1, 0])));
        assert!(!contains(&p(&[1]), &p(&[2])));
        assert!(contains(&p(&[3, 1]), &p(&[3, 1])));
    }

    #[test]
    fn hook_split_examples() {
        let h = hook_split(&p(&[6, 4, 4, 3, 1]), 3, 3).unwrap();
        assert_eq!(h.lambda_plus, p(&[6, 4, 4]));
        assert_eq!(h.lambda_minus, p(&[2, 1, 1]));
        assert_eq!(h.lambda(), p(&[6, 4, 4, 3, 1]));
        let h = hook_split(&p(&[3, 1]), 2, 2).unwrap();
        assert!(h.lambda_minus.is_empty());
        assert!(matches!(
            hook_split(&p(&[2, 2, 2]), 2, 1),
            Err(ShapeError::NotHook { .. })
        ));
    }

    #[test]
    fn skew_cells_examples() {
        let s = SkewShape::new(p(&[2, 2]), p(&[1])).unwrap();
        assert_eq!(
            s.cells(),
            vec![Cell::new(1, 2), Cell::new(2, 1), Cell::new(2, 2)]
        );
        assert!(SkewShape::new(p(&[2]), p(&[2])).unwrap().cells().is_empty());
        assert_eq!(
            SkewShape::new(p(&[3, 3, 3, 3, 1]), p(&[3, 2]))
                .unwrap()
                .cells()
                .len(),
            8
        );
    }

    #[test]
    fn conjugation_is_involutive_up_to_twelve_cells() {
        for size in 0..=12 {
            for q in Partition::all_of_size(size, usize::MAX, usize::MAX) {
                assert_eq!(conjugate(&conjugate(&q)), q);
            }
        }
    }

    #[test]
    fn skew_cell_count_matches_size_difference() {
        for size in 0..=7 {
            for outer in Partition::all_of_size(size, usize::MAX, usize::MAX) {
                for inner in outer.subpartitions() {
                    let s = SkewShape::new(outer.clone(), inner.clone()).unwrap();
                    assert_eq!(s.cells().len(), outer.size() - inner.size());
                }
            }
        }
    }

    #[test]
    fn hook_split_round_trip() {
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
            for size in 0..=10 {
                for lam in hook_partitions(size, m, n) {
                    let h = hook_split(&lam, m, n).unwrap();
                    assert_eq!(h.lambda(), lam);
                }
            }
        }
    }

    #[test]
    fn partition_json_is_an_array() {
        let s = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"outer":[2,1],"inner":[1]}"#);
        let back: SkewShape = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
    }
}
