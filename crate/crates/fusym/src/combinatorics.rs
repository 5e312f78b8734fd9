//! Partitions, skew shapes, standard tableaux, and dimension oracles.
//!
//! Cells are one-based `(row, column)` pairs; the content of a cell `(i, j)`
//! is `j - i`.  Standard tableaux are bijective fillings increasing along
//! rows and down columns.  The dimension oracles (standard tableau counts,
//! semistandard counts, hook lengths, Weyl dimensions) are independent
//! implementations used to cross-check the operator constructions.

use std::collections::BTreeMap;

use crate::exact_algebra::{rat, ratq, Rat};
use crate::{Error, Result};

/// Largest number of cells for which standard tableaux are enumerated.
pub const MAX_TABLEAU_CELLS: usize = 8;

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from a weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ShapeInvalid(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// One-based row length accessor; zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "rows are one-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Whether `other` fits inside `self` row by row.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }

    /// All partitions fitting in a `rows x cols` box (including the empty
    /// one), ordered by size then descending lexicographically.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows_left: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if rows_left == 0 {
                return;
            }
            for p in (1..=max_part).rev() {
                prefix.push(p);
                rec(rows_left - 1, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| {
            a.size()
                .cmp(&b.size())
                .then_with(|| b.parts.cmp(&a.parts))
        });
        out.dedup();
        out
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::ShapeInvalid(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    /// The non-skew shape of a plain partition.
    pub fn from_partition(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_nonskew(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the shape in lexicographic `(row, column)` order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.outer.len() {
            for j in (self.inner.part(i) + 1)..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn has_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.outer.part(i) && j > self.inner.part(i)
    }

    /// The largest column count among rows, i.e. the width of the shape.
    pub fn width(&self) -> usize {
        self.outer.part(1)
    }
}

impl std::fmt::Display for SkewShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_nonskew() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

/// Standard tableau: a bijective filling of a skew shape by `1..=n`,
/// strictly increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: SkewShape,
    /// `cell_of[k-1]` is the cell containing the entry `k`.
    cell_of: Vec<(usize, usize)>,
    entry_at: BTreeMap<(usize, usize), usize>,
}

impl StandardTableau {
    /// Validating constructor: `cell_of[k-1]` is the cell carrying entry `k`.
    pub fn new(shape: SkewShape, cell_of: Vec<(usize, usize)>) -> Result<Self> {
        let cells = shape.cells();
        if cell_of.len() != cells.len() {
            return Err(Error::ShapeInvalid(format!(
                "filling has {} entries but the shape has {} cells",
                cell_of.len(),
                cells.len()
            )));
        }
        let mut entry_at = BTreeMap::new();
        for (k, &cell) in cell_of.iter().enumerate() {
            if !shape.has_cell(cell.0, cell.1) {
                return Err(Error::ShapeInvalid(format!(
                    "cell {cell:?} is not in the shape {shape}"
                )));
            }
            if entry_at.insert(cell, k + 1).is_some() {
                return Err(Error::ShapeInvalid(format!(
                    "cell {cell:?} is filled twice"
                )));
            }
        }
        let tableau = StandardTableau {
            shape,
            cell_of,
            entry_at,
        };
        for (&(i, j), &e) in &tableau.entry_at {
            if let Some(&right) = tableau.entry_at.get(&(i, j + 1)) {
                if e >= right {
                    return Err(Error::ShapeInvalid(format!(
                        "row violation at ({i},{j}): {e} >= {right}"
                    )));
                }
            }
            if let Some(&below) = tableau.entry_at.get(&(i + 1, j)) {
                if e >= below {
                    return Err(Error::ShapeInvalid(format!(
                        "column violation at ({i},{j}): {e} >= {below}"
                    )));
                }
            }
        }
        Ok(tableau)
    }

    /// The column tableau: fills columns left to right, each column from top
    /// to bottom.
    pub fn column_tableau(shape: &SkewShape) -> StandardTableau {
        let mut cells = shape.cells();
        cells.sort_by_key(|&(i, j)| (j, i));
        StandardTableau::new(shape.clone(), cells)
            .expect("the column filling of a skew shape is standard")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.cell_of.len()
    }

    /// Cell of the entry `k` (one-based).
    pub fn cell_of(&self, k: usize) -> (usize, usize) {
        self.cell_of[k - 1]
    }

    pub fn entry_at(&self, i: usize, j: usize) -> Option<usize> {
        self.entry_at.get(&(i, j)).copied()
    }

    /// Content `j - i` of the cell containing `k`.
    pub fn content_of(&self, k: usize) -> i64 {
        let (i, j) = self.cell_of(k);
        j as i64 - i as i64
    }

    /// Column of the cell containing `k`.
    pub fn column_of(&self, k: usize) -> usize {
        self.cell_of(k).1
    }

    /// Content vector `(c_1, .., c_n)` in entry order.
    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size()).map(|k| self.content_of(k)).collect()
    }

    /// The filling as `(row, column, entry)` triples in cell order.
    pub fn filling(&self) -> Vec<(usize, usize, usize)> {
        self.entry_at.iter().map(|(&(i, j), &e)| (i, j, e)).collect()
    }

    /// Swap the entries `k` and `k+1`; `None` if the result is not standard
    /// (i.e. when they share a row or a column).
    pub fn swap_adjacent(&self, k: usize) -> Option<StandardTableau> {
        assert!(k >= 1 && k < self.size());
        let mut cell_of = self.cell_of.clone();
        cell_of.swap(k - 1, k);
        StandardTableau::new(self.shape.clone(), cell_of).ok()
    }

    /// For a non-skew tableau, the sub-tableau of the entries `1..=m` (a
    /// standard tableau of a partition shape).
    pub fn restrict(&self, m: usize) -> Result<StandardTableau> {
        if !self.shape.is_nonskew() {
            return Err(Error::ShapeInvalid(
                "restriction requires a non-skew tableau".into(),
            ));
        }
        assert!(m <= self.size());
        let cells: Vec<(usize, usize)> = self.cell_of[..m].to_vec();
        let mut row_len = BTreeMap::new();
        for &(i, j) in &cells {
            let e = row_len.entry(i).or_insert(0usize);
            *e = (*e).max(j);
        }
        let rows = row_len.keys().copied().max().unwrap_or(0);
        let parts: Vec<usize> = (1..=rows)
            .map(|i| row_len.get(&i).copied().unwrap_or(0))
            .collect();
        let mu = Partition::new(parts)?;
        StandardTableau::new(SkewShape::from_partition(mu), cells)
    }

    /// The sub-tableau on the entries `1..m` of any (possibly skew)
    /// standard tableau.  Those entries always occupy a skew shape over the
    /// same inner partition.
    pub fn truncate(&self, m: usize) -> Result<StandardTableau> {
        assert!(m <= self.size());
        let cells: Vec<(usize, usize)> = self.cell_of[..m].to_vec();
        let inner = self.shape.inner().clone();
        let mut row_len: BTreeMap<usize, usize> = BTreeMap::new();
        for &(i, j) in &cells {
            let e = row_len.entry(i).or_insert(0usize);
            *e = (*e).max(j);
        }
        let rows = row_len
            .keys()
            .copied()
            .max()
            .unwrap_or(0)
            .max(inner.len());
        let parts: Vec<usize> = (1..=rows)
            .map(|i| row_len.get(&i).copied().unwrap_or(0).max(inner.part(i)))
            .collect();
        let outer = Partition::new(parts)?;
        StandardTableau::new(SkewShape::new(outer, inner)?, cells)
    }

    /// For a non-skew tableau, the skew tableau of the entries
    /// `m+1..=n`, renumbered `1..=n-m`, on the shape `outer/mu` where `mu`
    /// is the shape of the restriction.
    pub fn skew_part(&self, m: usize) -> Result<StandardTableau> {
        let upsilon = self.restrict(m)?;
        let shape = SkewShape::new(self.shape.outer.clone(), upsilon.shape.outer.clone())?;
        StandardTableau::new(shape, self.cell_of[m..].to_vec())
    }

    /// Join a straight tableau on `mu` with a skew tableau on `lambda/mu`,
    /// the skew entries shifted up by `|mu|`.
    pub fn compose(upsilon: &StandardTableau, omega: &StandardTableau) -> Result<StandardTableau> {
        if !upsilon.shape.is_nonskew() {
            return Err(Error::ShapeInvalid("completion must be non-skew".into()));
        }
        if omega.shape.inner != upsilon.shape.outer {
            return Err(Error::ShapeInvalid(format!(
                "inner shape {} does not match completion shape {}",
                omega.shape.inner, upsilon.shape.outer
            )));
        }
        let mut cell_of = upsilon.cell_of.clone();
        cell_of.extend(omega.cell_of.iter().copied());
        StandardTableau::new(SkewShape::from_partition(omega.shape.outer.clone()), cell_of)
    }
}

/// All standard tableaux of a shape, in a fixed deterministic order
/// (entries placed in increasing order, candidate cells scanned
/// lexicographically).
pub fn enumerate_standard_tableaux(shape: &SkewShape) -> Result<Vec<StandardTableau>> {
    let n = shape.size();
    if n > MAX_TABLEAU_CELLS {
        return Err(Error::BoundExceeded(format!(
            "{n} cells exceeds the tableau enumeration bound {MAX_TABLEAU_CELLS}"
        )));
    }
    let cells = shape.cells();
    let mut out = Vec::new();
    let mut filling: Vec<(usize, usize)> = Vec::with_capacity(n);
    let mut used = vec![false; cells.len()];
    fn placeable(shape: &SkewShape, placed: &[(usize, usize)], cell: (usize, usize)) -> bool {
        let (i, j) = cell;
        // All shape cells weakly above/left in the same row or column must
        // already be filled for the filling to stay standard.
        let left_ok = !shape.has_cell(i, j.wrapping_sub(1)) || placed.contains(&(i, j - 1));
        let up_ok = !shape.has_cell(i.wrapping_sub(1), j) || placed.contains(&(i - 1, j));
        left_ok && up_ok
    }
    fn rec(
        shape: &SkewShape,
        cells: &[(usize, usize)],
        used: &mut Vec<bool>,
        filling: &mut Vec<(usize, usize)>,
        out: &mut Vec<StandardTableau>,
    ) {
        if filling.len() == cells.len() {
            out.push(
                StandardTableau::new(shape.clone(), filling.clone())
                    .expect("construction preserves standardness"),
            );
            return;
        }
        for (idx, &cell) in cells.iter().enumerate() {
            if !used[idx] && placeable(shape, filling, cell) {
                used[idx] = true;
                filling.push(cell);
                rec(shape, cells, used, filling, out);
                filling.pop();
                used[idx] = false;
            }
        }
    }
    rec(shape, &cells, &mut used, &mut filling, &mut out);
    Ok(out)
}

/// Number of standard tableaux of a partition shape by the hook length
/// formula, as an independent oracle for [`enumerate_standard_tableaux`].
pub fn hook_length_count(lambda: &Partition) -> u64 {
    let n = lambda.size();
    if n == 0 {
        return 1;
    }
    let conj = lambda.conjugate();
    let mut numer = rat(1);
    for k in 1..=n {
        numer = numer * rat(k as i64);
    }
    let mut denom = rat(1);
    for i in 1..=lambda.len() {
        for j in 1..=lambda.part(i) {
            let hook = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
            denom = denom * rat(hook as i64);
        }
    }
    let q: Rat = numer / denom;
    assert!(q.is_integer(), "hook length count must be integral");
    let s = q.to_integer().to_string();
    s.parse().expect("hook length count fits in u64")
}

/// Number of semistandard fillings of a skew shape with entries `1..=n`:
/// weakly increasing along rows, strictly increasing down columns.
///
/// Brute-force recursion over cells in column-reading order.
pub fn ssyt_count(shape: &SkewShape, n: usize) -> Result<u64> {
    if shape.size() > 12 || n > 6 {
        return Err(Error::BoundExceeded(format!(
            "semistandard enumeration limited to 12 cells and entries <= 6 (got {} cells, {n})",
            shape.size()
        )));
    }
    let cells = shape.cells(); // lexicographic (row, col) order
    fn rec(shape: &SkewShape, cells: &[(usize, usize)], values: &mut BTreeMap<(usize, usize), usize>, n: usize) -> u64 {
        let Some(&(i, j)) = cells.first() else {
            return 1;
        };
        let mut count = 0;
        for v in 1..=n {
            // Row constraint: weakly increasing left to right.
            if let Some(&left) = values.get(&(i, j - 1)) {
                if v < left {
                    continue;
                }
            }
            // Column constraint: strictly increasing top to bottom.
            if let Some(&up) = values.get(&(i - 1, j)) {
                if v <= up {
                    continue;
                }
            }
            values.insert((i, j), v);
            count += rec(shape, &cells[1..], values, n);
            values.remove(&(i, j));
        }
        count
    }
    Ok(rec(shape, &cells, &mut BTreeMap::new(), n))
}

/// Highest weight `(nu_1, .., nu_p, 0, .., 0, -tilde_nu_q, .., -tilde_nu_1)`
/// on `n` coordinates determined by a pair of partitions, or `None` when the
/// two column counts overlap (`nu'_1 + tilde_nu'_1 > n`).
pub fn weight_from_pair(nu: &Partition, nu_tilde: &Partition, n: usize) -> Option<Vec<i64>> {
    let p = nu.len();
    let q = nu_tilde.len();
    if p + q > n {
        return None;
    }
    let mut w = vec![0i64; n];
    for i in 1..=p {
        w[i - 1] = nu.part(i) as i64;
    }
    for i in 1..=q {
        w[n - i] = -(nu_tilde.part(i) as i64);
    }
    Some(w)
}

/// Weyl dimension formula for a dominant weight of the general linear group:
/// the product over `i < j` of `(w_i - w_j + j - i)/(j - i)`.
pub fn weyl_dim(weight: &[i64]) -> u64 {
    let n = weight.len();
    let mut value = rat(1);
    for i in 0..n {
        for j in (i + 1)..n {
            let num = weight[i] - weight[j] + (j as i64 - i as i64);
            let den = j as i64 - i as i64;
            value = value * ratq(num, den);
        }
    }
    assert!(value.is_integer(), "Weyl dimension must be integral");
    value.to_integer().to_string().parse().expect("dimension fits in u64")
}

/// Dimension oracles for a skew shape: the number of standard tableaux, the
/// number of semistandard fillings with entries `1..=n`, and — for non-skew
/// shapes — the Weyl dimension of the corresponding highest weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimOracles {
    pub tableau_count: u64,
    pub ssyt_count: u64,
    pub weyl_dim: Option<u64>,
}

pub fn dim_oracles(shape: &SkewShape, n: usize) -> Result<DimOracles> {
    let tableau_count = enumerate_standard_tableaux(shape)?.len() as u64;
    let ssyt = ssyt_count(shape, n)?;
    let weyl = if shape.is_nonskew() {
        weight_from_pair(shape.outer(), &Partition::empty(), n).map(|w| weyl_dim(&w))
    } else {
        None
    };
    Ok(DimOracles {
        tableau_count,
        ssyt_count: ssyt,
        weyl_dim: weyl,
    })
}

/// The admissibility condition on a quadruple of partitions relative to `n`:
/// `lambda_i >= mu_i` and `lambda'_i - mu'_i <= n` for all `i`, and the same
/// for the pair with tildes.
pub fn nonvanishing_condition(
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
    n: usize,
) -> bool {
    fn half(lambda: &Partition, mu: &Partition, n: usize) -> bool {
        if !lambda.contains(mu) {
            return false;
        }
        let lc = lambda.conjugate();
        let mc = mu.conjugate();
        (1..=lc.len()).all(|i| lc.part(i) - mc.part(i) <= n)
    }
    half(lambda, mu, n) && half(lambda_tilde, mu_tilde, n)
}

/// All distinct skew shapes with `cells` cells whose outer partition fits in
/// a `rows x cols` box, deduplicated by cell set, in a fixed deterministic
/// order.
pub fn skew_shapes_in_box(cells: usize, rows: usize, cols: usize) -> Vec<SkewShape> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for outer in Partition::all_in_box(rows, cols) {
        if outer.size() < cells {
            continue;
        }
        for inner in Partition::all_in_box(rows, cols) {
            if inner.size() + cells != outer.size() || !outer.contains(&inner) {
                continue;
            }
            let shape = SkewShape::new(outer.clone(), inner).expect("containment checked");
            if seen.insert(shape.cells()) {
                out.push(shape);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert!(Partition::new(vec![3, 5]).is_err());
        assert_eq!(p(&[3, 2, 0, 0]).parts(), &[3, 2]);
        assert_eq!(p(&[5, 3, 3, 3, 3]).size(), 17);
        assert_eq!(p(&[3, 2]).conjugate(), p(&[2, 2, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert!(p(&[3, 2]).contains(&p(&[2, 2])));
        assert!(!p(&[3, 2]).contains(&p(&[2, 2, 1])));
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(5).len(), 7);
        // 2x2 box: empty, (1), (1,1), (2), (2,1), (2,2)
        assert_eq!(Partition::all_in_box(2, 2).len(), 6);
    }

    #[test]
    fn skew_cells_order() {
        let s = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        assert_eq!(s.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert!(s.has_cell(1, 2));
        assert!(!s.has_cell(1, 1));
        assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    }

    #[test]
    fn column_tableau_and_contents_example() {
        // Shape (5,3,3,3,3)/(3,3,2): contents of the column tableau are
        // (-3,-4,-2,-3,0,-1,-2,3,4).
        let shape = SkewShape::new(p(&[5, 3, 3, 3, 3]), p(&[3, 3, 2])).unwrap();
        let t = StandardTableau::column_tableau(&shape);
        assert_eq!(t.contents(), vec![-3, -4, -2, -3, 0, -1, -2, 3, 4]);
        assert_eq!(t.cell_of(1), (4, 1));
        assert_eq!(t.cell_of(9), (1, 5));
    }

    #[test]
    fn truncate_keeps_prefix_and_contents() {
        let shape = SkewShape::new(p(&[5, 3, 3, 3, 3]), p(&[3, 3, 2])).unwrap();
        let t = StandardTableau::column_tableau(&shape);
        for m in 0..=t.size() {
            let prefix = t.truncate(m).unwrap();
            assert_eq!(prefix.size(), m);
            assert_eq!(prefix.shape().inner(), shape.inner());
            assert_eq!(prefix.contents(), t.contents()[..m].to_vec());
        }
        let four = t.truncate(4).unwrap();
        assert_eq!(four.shape().outer(), &p(&[3, 3, 2, 2, 2]));
    }

    #[test]
    fn standard_validation() {
        let shape = SkewShape::from_partition(p(&[2, 1]));
        // Row tableau 1 2 / 3 is standard.
        assert!(StandardTableau::new(shape.clone(), vec![(1, 1), (1, 2), (2, 1)]).is_ok());
        // 2 1 / 3 is not.
        assert!(StandardTableau::new(shape.clone(), vec![(1, 2), (1, 1), (2, 1)]).is_err());
        // Wrong cell count.
        assert!(StandardTableau::new(shape, vec![(1, 1)]).is_err());
    }

    #[test]
    fn enumerate_counts_match_hooks() {
        for (parts, expect) in [
            (vec![3usize], 1u64),
            (vec![2, 1], 2),
            (vec![2, 2], 2),
            (vec![3, 2], 5),
            (vec![2, 2, 1], 5),
            (vec![3, 1, 1], 6),
        ] {
            let lambda = Partition::new(parts).unwrap();
            let shape = SkewShape::from_partition(lambda.clone());
            let tableaux = enumerate_standard_tableaux(&shape).unwrap();
            assert_eq!(tableaux.len() as u64, expect, "count for {lambda}");
            assert_eq!(hook_length_count(&lambda), expect, "hooks for {lambda}");
        }
        // Bound is enforced.
        let big = SkewShape::from_partition(p(&[5, 4]));
        assert!(matches!(
            enumerate_standard_tableaux(&big),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn skew_enumeration() {
        // (2,1)/(1) has two cells in different rows and columns: 2 tableaux.
        let s = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(enumerate_standard_tableaux(&s).unwrap().len(), 2);
    }

    #[test]
    fn restrict_and_compose() {
        let shape = SkewShape::from_partition(p(&[3, 2]));
        for t in enumerate_standard_tableaux(&shape).unwrap() {
            let m = 2;
            let upsilon = t.restrict(m).unwrap();
            let omega = t.skew_part(m).unwrap();
            assert_eq!(omega.shape().inner(), upsilon.shape().outer());
            let back = StandardTableau::compose(&upsilon, &omega).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn ssyt_counts() {
        // Two-cell row with entries <= 2: 11, 12, 22.
        let row = SkewShape::from_partition(p(&[2]));
        assert_eq!(ssyt_count(&row, 2).unwrap(), 3);
        // Column with two cells, entries <= 2: only 1 over 2.
        let col = SkewShape::from_partition(p(&[1, 1]));
        assert_eq!(ssyt_count(&col, 2).unwrap(), 1);
        assert_eq!(ssyt_count(&col, 3).unwrap(), 3);
        // Disconnected skew shape (2,1)/(1): two free-ish cells.
        let s = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert_eq!(ssyt_count(&s, 2).unwrap(), 4);
    }

    #[test]
    fn weyl_dimensions() {
        // Vector representation of gl_3.
        assert_eq!(weyl_dim(&[1, 0, 0]), 3);
        // Adjoint-like weight (1,0,-1) of gl_3 has dimension 8.
        assert_eq!(weyl_dim(&[1, 0, -1]), 8);
        // Symmetric square of gl_2.
        assert_eq!(weyl_dim(&[2, 0]), 3);
        // For non-skew shapes Weyl dim equals the semistandard count.
        for parts in [vec![2usize], vec![1, 1], vec![2, 1], vec![2, 2]] {
            let lambda = Partition::new(parts).unwrap();
            for n in [2usize, 3] {
                if lambda.len() > n {
                    continue;
                }
                let w = weight_from_pair(&lambda, &Partition::empty(), n).unwrap();
                let shape = SkewShape::from_partition(lambda.clone());
                assert_eq!(weyl_dim(&w), ssyt_count(&shape, n).unwrap(), "{lambda} at {n}");
            }
        }
    }

    #[test]
    fn weight_from_pair_examples() {
        assert_eq!(
            weight_from_pair(&p(&[2]), &p(&[1, 1]), 3),
            Some(vec![2, -1, -1])
        );
        assert_eq!(weight_from_pair(&p(&[1, 1]), &p(&[1, 1]), 3), None);
        assert_eq!(weight_from_pair(&p(&[1]), &p(&[1]), 2), Some(vec![1, -1]));
    }

    #[test]
    fn nonvanishing_examples() {
        // lambda=(1,1), mu=(1): column difference 1 <= N for N >= 1.
        assert!(nonvanishing_condition(&p(&[1, 1]), &p(&[1]), &p(&[1]), &p(&[]), 2));
        // Column of length 3 minus nothing needs N >= 3.
        assert!(!nonvanishing_condition(&p(&[1, 1, 1]), &p(&[]), &p(&[]), &p(&[]), 2));
        assert!(nonvanishing_condition(&p(&[1, 1, 1]), &p(&[]), &p(&[]), &p(&[]), 3));
        // Row containment failure.
        assert!(!nonvanishing_condition(&p(&[1]), &p(&[]), &p(&[2]), &p(&[]), 3));
    }

    #[test]
    fn skew_shape_family() {
        let singles = skew_shapes_in_box(1, 3, 3);
        assert_eq!(singles.len(), 9);
        let pairs = skew_shapes_in_box(2, 3, 3);
        // 6 horizontal + 6 vertical dominoes + 9 disconnected pairs.
        assert_eq!(pairs.len(), 21);
        for s in pairs {
            assert_eq!(s.size(), 2);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn prop_conjugate_involution(seed in 0u64..100_000) {
            // Pseudorandom partition of size <= 12.
            let mut state = seed;
            let mut next = move |m: usize| {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) as usize) % m
            };
            let mut parts = Vec::new();
            let mut budget = 12usize;
            let mut cap = 6usize;
            while budget > 0 && cap > 0 {
                let v = next(cap.min(budget) + 1);
                if v == 0 { break; }
                parts.push(v);
                budget -= v;
                cap = v;
            }
            let lambda = Partition::new(parts).unwrap();
            prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
            prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        }

        #[test]
        fn prop_contents_range(cells in 1usize..5) {
            for shape in skew_shapes_in_box(cells, 3, 3) {
                let t = StandardTableau::column_tableau(&shape);
                let lo = 1 - shape.outer().conjugate().part(1).max(1) as i64;
                let hi = shape.outer().part(1) as i64 - 1;
                for c in t.contents() {
                    prop_assert!(c >= lo && c <= hi);
                }
            }
        }
    }
}
