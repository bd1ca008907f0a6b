//! Skew tableaux, reading words, lattice predicates, canonical fillings and
//! Clausen matrices.
//!
//! Words are stored in reading order: rows top to bottom, each read right to
//! left. Symbols `m+1, …, m+n` are the odd alphabet; callers supply `m`.

use crate::shapes::{Cell, Partition, ShapeError, SkewShape};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// A word over positive integer symbols.
pub type Word = Vec<usize>;

/// Errors raised by tableau constructors and comparators.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error(transparent)]
    Shape(#[from] ShapeError),
    #[error("row {row} has {got} entries but the shape needs {want}")]
    RowLength { row: usize, got: usize, want: usize },
    #[error("entries must be positive symbols")]
    ZeroEntry,
    #[error("cannot parse tableau: {0}")]
    Parse(String),
    #[error("tableaux have different shapes: {0} and {1}")]
    ShapeMismatch(SkewShape, SkewShape),
}

/// A filling of a skew diagram by positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Builds a tableau from the entries of each row (inner cells omitted).
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let mut rows = rows;
        while rows.len() > shape.num_rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.num_rows(), Vec::new());
        for (k, r) in rows.iter().enumerate() {
            let want = shape.row_range(k + 1).count();
            if r.len() != want {
                return Err(TableauError::RowLength {
                    row: k + 1,
                    got: r.len(),
                    want,
                });
            }
            if r.contains(&0) {
                return Err(TableauError::ZeroEntry);
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    /// Fills every cell of `shape` with `f(cell)`.
    pub fn from_fn(shape: SkewShape, mut f: impl FnMut(Cell) -> usize) -> Self {
        let rows = (1..=shape.num_rows())
            .map(|i| shape.row_range(i).map(|j| f(Cell::new(i, j))).collect())
            .collect();
        SkewTableau { shape, rows }
    }

    /// Builds a tableau from rows that mark inner cells with `None`.
    pub fn from_optional_rows(rows: &[Vec<Option<usize>>]) -> Result<Self, TableauError> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut filled = Vec::new();
        for r in rows {
            let lead = r.iter().take_while(|e| e.is_none()).count();
            if r[lead..].iter().any(|e| e.is_none()) {
                return Err(TableauError::Parse("empty cell after a filled cell".into()));
            }
            outer.push(r.len());
            inner.push(lead);
            filled.push(r[lead..].iter().map(|e| e.unwrap()).collect::<Vec<_>>());
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::new(shape, filled)
    }

    /// Parses rows separated by `/`, entries separated by whitespace, with `.`
    /// marking inner cells, e.g. `". 4 / 3 5"`.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        let text = text.trim();
        if text.is_empty() {
            return SkewTableau::new(SkewShape::straight(Partition::empty()), Vec::new());
        }
        let rows = text
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|tok| match tok {
                        "." | "_" => Ok(None),
                        t => t
                            .parse::<usize>()
                            .map(Some)
                            .map_err(|_| TableauError::Parse(format!("bad entry {t:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_optional_rows(&rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries of row `i` (1-based), inner cells omitted.
    pub fn row(&self, i: usize) -> &[usize] {
        &self.rows[i - 1]
    }

    /// Number of filled cells.
    pub fn len(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        if !self.shape.contains_cell(c) {
            return None;
        }
        Some(self.rows[c.row - 1][c.col - self.shape.inner.part(c.row) - 1])
    }

    /// Entry at a cell known to be in the shape.
    pub fn at(&self, c: Cell) -> usize {
        self.get(c)
            .unwrap_or_else(|| panic!("cell {c} outside shape {}", self.shape))
    }

    pub fn set(&mut self, c: Cell, v: usize) {
        assert!(
            self.shape.contains_cell(c),
            "cell {c} outside shape {}",
            self.shape
        );
        let off = self.shape.inner.part(c.row);
        self.rows[c.row - 1][c.col - off - 1] = v;
    }

    /// Cells with entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, r)| {
            let off = self.shape.inner.part(k + 1);
            r.iter()
                .enumerate()
                .map(move |(t, &e)| (Cell::new(k + 1, off + t + 1), e))
        })
    }

    /// Optional-entry rows as used by the JSON encoding.
    pub fn optional_rows(&self) -> Vec<Vec<Option<usize>>> {
        (1..=self.shape.num_rows())
            .map(|i| {
                let mut r = vec![None; self.shape.inner.part(i)];
                r.extend(self.row(i).iter().map(|&e| Some(e)));
                r
            })
            .collect()
    }

    /// The subtableau on columns `1..=max_col`.
    pub fn left_part(&self, max_col: usize) -> SkewTableau {
        let clip = |p: &Partition| {
            Partition::new(p.parts().iter().map(|&x| x.min(max_col)).collect()).unwrap()
        };
        let shape = SkewShape::new(clip(&self.shape.outer), clip(&self.shape.inner)).unwrap();
        SkewTableau::from_fn(shape, |c| self.at(c))
    }

    /// Number of cells strictly right of column `col` in each row.
    pub fn cells_beyond(&self, col: usize) -> Vec<usize> {
        (1..=self.shape.num_rows())
            .map(|i| self.shape.row_range(i).filter(|&j| j > col).count())
            .collect()
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .optional_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(".".to_string(), |v| v.to_string()))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<Option<usize>>>,
}

impl Serialize for SkewTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TableauJson {
            outer: self.shape.outer.clone(),
            inner: self.shape.inner.clone(),
            rows: self.optional_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SkewTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let js = TableauJson::deserialize(d)?;
        let shape = SkewShape::new(js.outer, js.inner).map_err(serde::de::Error::custom)?;
        let mut filled = Vec::new();
        for (k, r) in js.rows.iter().enumerate() {
            let lead = shape.inner.part(k + 1);
            if r.len() < lead
                || r[..lead].iter().any(Option::is_some)
                || r[lead..].iter().any(Option::is_none)
            {
                return Err(serde::de::Error::custom(format!(
                    "row {} does not match the shape",
                    k + 1
                )));
            }
            filled.push(r[lead..].iter().map(|e| e.unwrap()).collect());
        }
        SkewTableau::new(shape, filled).map_err(serde::de::Error::custom)
    }
}

/// Counts of each symbol `1..=max_symbol`; index `s-1` holds the count of `s`.
pub fn content(t: &SkewTableau, max_symbol: usize) -> Vec<usize> {
    let mut counts = vec![0; max_symbol];
    for (_, e) in t.iter() {
        assert!(e <= max_symbol, "entry {e} exceeds {max_symbol}");
        counts[e - 1] += 1;
    }
    counts
}

/// Rows weakly increase and columns strictly increase.
pub fn is_semistandard(t: &SkewTableau) -> bool {
    t.iter().all(|(c, e)| {
        let right_ok = t.get(Cell::new(c.row, c.col + 1)).is_none_or(|r| e <= r);
        let below_ok = t.get(Cell::new(c.row + 1, c.col)).is_none_or(|b| e < b);
        right_ok && below_ok
    })
}

/// Rows strictly decrease and columns weakly decrease.
pub fn is_anti_semistandard(t: &SkewTableau) -> bool {
    t.iter().all(|(c, e)| {
        let right_ok = t.get(Cell::new(c.row, c.col + 1)).is_none_or(|r| e > r);
        let below_ok = t.get(Cell::new(c.row + 1, c.col)).is_none_or(|b| e >= b);
        right_ok && below_ok
    })
}

/// Cells in reading order: rows top to bottom, each right to left.
pub fn reading_cells(shape: &SkewShape) -> Vec<Cell> {
    (1..=shape.num_rows())
        .flat_map(|i| shape.row_range(i).rev().map(move |j| Cell::new(i, j)))
        .collect()
}

/// The reading word `w(T)`.
pub fn row_word(t: &SkewTableau) -> Word {
    reading_cells(t.shape())
        .into_iter()
        .map(|c| t.at(c))
        .collect()
}

/// The column indices `z(T)` read in the same order as [`row_word`].
pub fn place_word(t: &SkewTableau) -> Word {
    reading_cells(t.shape())
        .into_iter()
        .map(|c| c.col)
        .collect()
}

/// `w_sh(T) = w(L⁻_can) w(T⁺)`, where `L⁻_can` fills row `i` of `[λ⁻]` with `m+i`.
pub fn shifted_word(t_plus: &SkewTableau, lambda_minus: &Partition, m: usize) -> Word {
    let mut w = row_word(&canonical_row(
        &SkewShape::straight(lambda_minus.clone()),
        m,
    ));
    w.extend(row_word(t_plus));
    w
}

/// Every prefix contains symbol `offset+i` at least as often as `offset+i+1`.
/// Symbols `≤ offset` are ignored.
pub fn is_lattice(w: &[usize], alphabet_offset: usize) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &s in w {
        if s <= alphabet_offset {
            continue;
        }
        let i = s - alphabet_offset;
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
        if i >= 2 && counts[i - 2] < counts[i - 1] {
            return false;
        }
    }
    true
}

/// For every prefix `w'` of `w(T⁺)` and every `i`:
/// `λ⁻_i + a_{w'}(m+i) ≥ λ⁻_{i+1} + a_{w'}(m+i+1)`.
pub fn is_shifted_yamanouchi(t_plus: &SkewTableau, lambda_minus: &Partition, m: usize) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for s in row_word(t_plus) {
        if s <= m {
            continue;
        }
        let i = s - m;
        if counts.len() < i {
            counts.resize(i, 0);
        }
        counts[i - 1] += 1;
        if i >= 2 && lambda_minus.part(i - 1) + counts[i - 2] < lambda_minus.part(i) + counts[i - 1]
        {
            return false;
        }
    }
    true
}

/// `D⁺_can`: column `j` filled with `j`.
pub fn canonical_column(s: &SkewShape) -> SkewTableau {
    SkewTableau::from_fn(s.clone(), |c| c.col)
}

/// `D⁻_can`: row `i` filled with `m+i`.
pub fn canonical_row(s: &SkewShape, m: usize) -> SkewTableau {
    SkewTableau::from_fn(s.clone(), |c| m + c.row)
}

/// Which Clausen matrix a [`ClausenMatrix`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClausenKind {
    /// Rows indexed by the threshold `k`, columns by the tableau column `j`.
    Column,
    /// Rows indexed by the nonempty tableau rows, columns by the threshold `k`.
    Row,
}

/// A Clausen matrix in the displayed layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClausenMatrix {
    pub kind: ClausenKind,
    /// Label of each matrix row: the threshold `k` or the tableau row index.
    pub labels: Vec<usize>,
    pub data: Vec<Vec<usize>>,
}

/// `C(T⁺)`: entry `(k, j)` counts symbols `m+1..=m+k` in columns `≥ j`.
pub fn clausen_column(t_plus: &SkewTableau, m: usize, n: usize) -> ClausenMatrix {
    let ncols = t_plus.shape().outer.part(1);
    let mut per_col = vec![vec![0usize; n + 1]; ncols + 2];
    for (c, e) in t_plus.iter() {
        assert!(e > m && e <= m + n, "entry {e} outside the odd alphabet");
        per_col[c.col][e - m] += 1;
    }
    let data = (1..=n)
        .map(|k| {
            (1..=ncols)
                .map(|j| {
                    (j..=ncols)
                        .map(|jj| per_col[jj][1..=k].iter().sum::<usize>())
                        .sum()
                })
                .collect()
        })
        .collect();
    ClausenMatrix {
        kind: ClausenKind::Column,
        labels: (1..=n).collect(),
        data,
    }
}

/// `R(T⁺)`: entry `(i, k)` counts symbols `m+1..=m+k` in rows `≤ i`; only
/// nonempty rows are listed.
pub fn clausen_row(t_plus: &SkewTableau, m: usize, n: usize) -> ClausenMatrix {
    let nrows = t_plus.shape().num_rows();
    let mut running = vec![0usize; n + 1];
    let mut labels = Vec::new();
    let mut data = Vec::new();
    for i in 1..=nrows {
        let row = t_plus.row(i);
        for &e in row {
            assert!(e > m && e <= m + n, "entry {e} outside the odd alphabet");
            running[e - m] += 1;
        }
        if !row.is_empty() {
            labels.push(i);
            data.push((1..=n).map(|k| running[1..=k].iter().sum()).collect());
        }
    }
    ClausenMatrix {
        kind: ClausenKind::Row,
        labels,
        data,
    }
}

/// Outcome of a Clausen comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClausenOrder {
    LessStrict,
    EqualMatrices,
    GreaterStrict,
    Incomparable,
}

impl From<Ordering> for ClausenOrder {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => ClausenOrder::LessStrict,
            Ordering::Equal => ClausenOrder::EqualMatrices,
            Ordering::Greater => ClausenOrder::GreaterStrict,
        }
    }
}

fn comparable(a: &SkewTableau, b: &SkewTableau, m: usize, n: usize) -> Result<bool, TableauError> {
    if a.shape() != b.shape() {
        return Err(TableauError::ShapeMismatch(
            a.shape().clone(),
            b.shape().clone(),
        ));
    }
    Ok(content(a, m + n) == content(b, m + n))
}

/// The column preorder: columns compared from the last one down, thresholds ascending.
pub fn clausen_compare_col(
    a: &SkewTableau,
    b: &SkewTableau,
    m: usize,
    n: usize,
) -> Result<ClausenOrder, TableauError> {
    if !comparable(a, b, m, n)? {
        return Ok(ClausenOrder::Incomparable);
    }
    let (ca, cb) = (clausen_column(a, m, n), clausen_column(b, m, n));
    let ncols = a.shape().outer.part(1);
    for j in (0..ncols).rev() {
        for k in 0..n {
            let o = ca.data[k][j].cmp(&cb.data[k][j]);
            if o != Ordering::Equal {
                return Ok(o.into());
            }
        }
    }
    Ok(ClausenOrder::EqualMatrices)
}

/// The row preorder: rows compared from the top, thresholds ascending.
pub fn clausen_compare_row(
    a: &SkewTableau,
    b: &SkewTableau,
    m: usize,
    n: usize,
) -> Result<ClausenOrder, TableauError> {
    if !comparable(a, b, m, n)? {
        return Ok(ClausenOrder::Incomparable);
    }
    let (ra, rb) = (clausen_row(a, m, n), clausen_row(b, m, n));
    for (x, y) in ra.data.iter().zip(&rb.data) {
        let o = x.cmp(y);
        if o != Ordering::Equal {
            return Ok(o.into());
        }
    }
    Ok(ClausenOrder::EqualMatrices)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SkewTableau {
        SkewTableau::parse(s).unwrap()
    }

    fn ex3_plus() -> SkewTableau {
        t(". . . / . . 4 / 4 5 5 / 5 6 6 / 6")
    }

    #[test]
    fn parse_and_display_round_trip() {
        let a = t(". 4 / 3 5");
        assert_eq!(a.to_string(), ". 4 / 3 5");
        assert_eq!(a.shape().outer, Partition::from_slice(&[2, 2]));
        assert_eq!(a.shape().inner, Partition::from_slice(&[1]));
        assert_eq!(t(&a.to_string()), a);
    }

    #[test]
    fn json_round_trip() {
        let a = t(". 4 / 3 5");
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"outer":[2,2],"inner":[1],"rows":[[null,4],[3,5]]}"#);
        assert_eq!(serde_json::from_str::<SkewTableau>(&js).unwrap(), a);
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(&t(". 4 / 3 5"), 5), vec![0, 0, 1, 1, 1]);
        assert_eq!(content(&t(""), 3), vec![0, 0, 0]);
        assert_eq!(content(&ex3_plus(), 6), vec![0, 0, 0, 2, 3, 3]);
    }

    #[test]
    fn semistandard_predicates() {
        assert!(is_semistandard(&t(". 4 / 3 5")));
        assert!(!is_semistandard(&t(". . 6 / . 4 4 / 5")));
        assert!(is_semistandard(&t("7")));
        assert!(is_anti_semistandard(&t(". . . 3 1 / . . 3 2 1 / . 3 2 1")));
        assert!(!is_anti_semistandard(&t("1 2")));
        // Column 2 reads 1 then 2 downward, which increases.
        assert!(!is_anti_semistandard(&t(". 1 / . 2 / 2")));
    }

    #[test]
    fn words() {
        let a = t(". 4 / 3 5");
        assert_eq!(row_word(&a), vec![4, 5, 3]);
        assert_eq!(place_word(&a), vec![2, 2, 1]);
        assert_eq!(row_word(&ex3_plus()), vec![4, 5, 5, 4, 6, 6, 5, 6]);
        assert_eq!(place_word(&t(". 4 3 / 3 5 4")), vec![3, 2, 3, 2, 1]);
        assert_eq!(place_word(&t(". . 1 1 1")), vec![5, 4, 3]);
        assert!(row_word(&t("")).is_empty());
    }

    #[test]
    fn shifted_words() {
        let lm = Partition::from_slice(&[1, 1]);
        assert_eq!(shifted_word(&t(". 4 / 3 5"), &lm, 2), vec![3, 4, 4, 5, 3]);
        let lm = Partition::from_slice(&[3, 2, 1]);
        assert_eq!(
            shifted_word(&ex3_plus(), &lm, 3),
            vec![4, 4, 4, 5, 5, 6, 4, 5, 5, 4, 6, 6, 5, 6]
        );
        assert_eq!(shifted_word(&t("3 4"), &Partition::empty(), 2), vec![4, 3]);
    }

    #[test]
    fn lattice_words() {
        assert!(!is_lattice(&[4, 5, 4, 5, 3], 2));
        assert!(!is_lattice(&[3, 4, 4, 5, 3], 2));
        assert!(!is_lattice(&[5, 4], 3));
        assert!(is_lattice(&[], 0));
        assert!(is_lattice(&[4, 4, 4, 5, 5, 6, 4, 5, 5, 4, 6, 6, 5, 6], 3));
    }

    #[test]
    fn shifted_yamanouchi_examples() {
        assert!(is_shifted_yamanouchi(
            &ex3_plus(),
            &Partition::from_slice(&[3, 2, 1]),
            3
        ));
        assert!(!is_shifted_yamanouchi(
            &t(". 4 / 3 5"),
            &Partition::from_slice(&[1, 1]),
            2
        ));
        assert!(!is_shifted_yamanouchi(
            &t("3 5 / 4 6"),
            &Partition::from_slice(&[1]),
            2
        ));
        assert!(is_shifted_yamanouchi(
            &t("4 3"),
            &Partition::from_slice(&[5, 2]),
            2
        ));
    }

    #[test]
    fn canonical_fillings() {
        let s =
            SkewShape::new(Partition::from_slice(&[2, 2]), Partition::from_slice(&[1])).unwrap();
        assert_eq!(canonical_column(&s), t(". 2 / 1 2"));
        let s = SkewShape::straight(Partition::from_slice(&[3, 2]));
        assert_eq!(canonical_row(&s, 2), t("3 3 3 / 4 4"));
        assert!(canonical_column(&SkewShape::straight(Partition::empty())).is_empty());
    }

    #[test]
    fn clausen_golden() {
        let c = clausen_column(&ex3_plus(), 3, 3);
        assert_eq!(c.data, vec![vec![2, 1, 1], vec![5, 3, 2], vec![8, 5, 3]]);
        let r = clausen_row(&ex3_plus(), 3, 3);
        assert_eq!(
            r.data,
            vec![vec![1, 1, 1], vec![2, 4, 4], vec![2, 5, 7], vec![2, 5, 8]]
        );
        assert_eq!(r.labels, vec![2, 3, 4, 5]);
        let e = t("");
        assert!(clausen_row(&e, 2, 2).data.is_empty());
        assert!(clausen_column(&e, 2, 2)
            .data
            .iter()
            .all(|r| r.iter().all(|&x| x == 0)));
    }

    #[test]
    fn clausen_comparisons() {
        let a = ex3_plus();
        assert_eq!(
            clausen_compare_col(&a, &a, 3, 3).unwrap(),
            ClausenOrder::EqualMatrices
        );
        let mut b = a.clone();
        b.set(Cell::new(3, 1), 5);
        b.set(Cell::new(4, 1), 4);
        assert_eq!(
            clausen_compare_col(&a, &b, 3, 3).unwrap(),
            ClausenOrder::EqualMatrices
        );
        assert_ne!(
            clausen_compare_row(&a, &b, 3, 3).unwrap(),
            ClausenOrder::EqualMatrices
        );
        let other = t("4 4");
        assert!(clausen_compare_row(&a, &other, 3, 3).is_err());
    }
}
