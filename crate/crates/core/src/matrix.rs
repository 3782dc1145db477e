//! Dense matrices over `{0} ∪ ⟨ζ_k⟩` and the monomial matrices acting on them.
//!
//! A [`MonomialMatrix`] of size `s` stores a permutation `perm` and unit
//! exponents `diag` and represents the product `P·D`, where `P` is the
//! permutation matrix with `P[perm[i]][i] = 1` and `D = diag(ζ^diag[i])`.
//! Column `i` of `P·D` therefore holds its single nonzero entry
//! `ζ^diag[i]` in row `perm[i]`. Consequences used throughout the crate:
//!
//! * left action: row `perm[i]` of `M·A` is `ζ^diag[i] · (row i of A)`;
//! * right action: column `c` of `A·M` is `ζ^diag[c] · (column perm[c] of A)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Entry, GroupSpec, OrderSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct T0Matrix {
    k: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Entry>,
}

impl T0Matrix {
    pub fn new(k: u32, rows: usize, cols: usize, entries: Vec<Entry>) -> Result<Self> {
        GroupSpec::new(k)?;
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_valid_for(k)) {
            return Err(Error::InvalidExponent {
                exponent: bad.exponent().unwrap_or(0),
                k,
            });
        }
        Ok(T0Matrix { k, rows, cols, entries })
    }

    pub fn zeros(k: u32, rows: usize, cols: usize) -> Result<Self> {
        Self::new(k, rows, cols, vec![Entry::Zero; rows * cols])
    }

    pub fn identity(k: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(k, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = Entry::ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from rows of equal length. The column count of an
    /// empty row list is zero.
    pub fn from_rows(k: u32, rows: Vec<Vec<Entry>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                left: cols,
                right: bad.len(),
            });
        }
        let m = rows.len();
        Self::new(k, m, cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from exponent rows where `None` is zero.
    pub fn from_exponents(k: u32, rows: &[&[Option<u32>]]) -> Result<Self> {
        let g = GroupSpec::new(k)?;
        Self::from_rows(
            k,
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|e| e.map_or(Entry::Zero, |e| g.unit(e as u64)))
                        .collect()
                })
                .collect(),
        )
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn group(&self) -> GroupSpec {
        GroupSpec::new(self.k).expect("validated at construction")
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Entry {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: Entry) {
        debug_assert!(value.is_valid_for(self.k));
        self.entries[r * self.cols + c] = value;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Entry] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Entry]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> impl Iterator<Item = Entry> + '_ {
        (0..self.rows).map(move |r| self.get(r, c))
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, r: usize) -> &mut [Entry] {
        &mut self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// `[self | right]`.
    pub fn hconcat(&self, right: &T0Matrix) -> Result<T0Matrix> {
        if self.k != right.k {
            return Err(Error::MixedModulus {
                left: self.k,
                right: right.k,
            });
        }
        if self.rows != right.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, right.rows
            )));
        }
        let cols = self.cols + right.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(self.row(r));
            entries.extend_from_slice(right.row(r));
        }
        Ok(T0Matrix {
            k: self.k,
            rows: self.rows,
            cols,
            entries,
        })
    }

    /// Columns `range` of every row.
    pub fn columns(&self, range: std::ops::Range<usize>) -> T0Matrix {
        assert!(range.end <= self.cols);
        let cols = range.len();
        let mut entries = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            entries.extend_from_slice(&self.row(r)[range.clone()]);
        }
        T0Matrix {
            k: self.k,
            rows: self.rows,
            cols,
            entries,
        }
    }
}

impl fmt::Display for T0Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(Entry::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Lexicographic comparison of two rows under `order`.
pub fn row_lex_compare(order: &OrderSpec, a: &[Entry], b: &[Entry]) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(lex(order, a, b))
}

#[inline]
pub(crate) fn lex(order: &OrderSpec, a: &[Entry], b: &[Entry]) -> Ordering {
    a.iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(&x, &y)| order.compare(x, y))
}

/// A permutation matrix times a nonsingular diagonal matrix over `⟨ζ_k⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    k: u32,
    perm: Vec<usize>,
    diag: Vec<u32>,
}

impl MonomialMatrix {
    pub fn new(k: u32, perm: Vec<usize>, diag: Vec<u32>) -> Result<Self> {
        GroupSpec::new(k)?;
        if perm.len() != diag.len() {
            return Err(Error::InvalidMonomial(format!(
                "permutation has length {} but diagonal has length {}",
                perm.len(),
                diag.len()
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || seen[p] {
                return Err(Error::InvalidMonomial(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if let Some(&d) = diag.iter().find(|&&d| d >= k) {
            return Err(Error::InvalidMonomial(format!("diagonal exponent {d} out of range for k = {k}")));
        }
        Ok(MonomialMatrix { k, perm, diag })
    }

    pub fn identity(k: u32, size: usize) -> Self {
        assert!(k >= 1);
        MonomialMatrix {
            k,
            perm: (0..size).collect(),
            diag: vec![0; size],
        }
    }

    pub fn permutation(k: u32, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(k, perm, vec![0; n])
    }

    pub fn diagonal(k: u32, diag: Vec<u32>) -> Result<Self> {
        Self::new(k, (0..diag.len()).collect(), diag)
    }

    /// Builds the monomial matrix whose row `r` has its nonzero entry
    /// `ζ^scale[r]` in column `source[r]`, so that row `r` of `M·A` is
    /// `ζ^scale[r] · (row source[r] of A)`.
    pub(crate) fn from_row_sources(k: u32, source: &[usize], scale: &[u32]) -> Self {
        let mut perm = vec![0; source.len()];
        let mut diag = vec![0; source.len()];
        for (r, (&s, &t)) in source.iter().zip(scale).enumerate() {
            perm[s] = r;
            diag[s] = t;
        }
        MonomialMatrix { k, perm, diag }
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn diag(&self) -> &[u32] {
        &self.diag
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.diag.iter().all(|&d| d == 0)
    }

    pub fn is_permutation(&self) -> bool {
        self.diag.iter().all(|&d| d == 0)
    }

    /// The matrix product `self · other`.
    pub fn compose(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        self.check_compatible(other)?;
        let g = GroupSpec::new(self.k)?;
        let perm = other.perm.iter().map(|&p| self.perm[p]).collect();
        let diag = other
            .perm
            .iter()
            .zip(&other.diag)
            .map(|(&p, &d)| g.add_exponents(self.diag[p], d))
            .collect();
        Ok(MonomialMatrix { k: self.k, perm, diag })
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let g = GroupSpec::new(self.k).expect("validated at construction");
        let n = self.size();
        let mut perm = vec![0; n];
        let mut diag = vec![0; n];
        for (i, (&p, &d)) in self.perm.iter().zip(&self.diag).enumerate() {
            perm[p] = i;
            diag[p] = g.neg_exponent(d);
        }
        MonomialMatrix { k: self.k, perm, diag }
    }

    /// `diag(self, other)`.
    pub fn direct_sum(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        if self.k != other.k {
            return Err(Error::MixedModulus {
                left: self.k,
                right: other.k,
            });
        }
        let offset = self.size();
        let perm = self
            .perm
            .iter()
            .copied()
            .chain(other.perm.iter().map(|&p| p + offset))
            .collect();
        let diag = self.diag.iter().chain(&other.diag).copied().collect();
        Ok(MonomialMatrix { k: self.k, perm, diag })
    }

    pub fn to_dense(&self) -> T0Matrix {
        let n = self.size();
        let mut m = T0Matrix::zeros(self.k, n, n).expect("validated at construction");
        for (i, (&p, &d)) in self.perm.iter().zip(&self.diag).enumerate() {
            m.set(p, i, Entry::Unit(d));
        }
        m
    }

    fn check_compatible(&self, other: &MonomialMatrix) -> Result<()> {
        if self.k != other.k {
            return Err(Error::MixedModulus {
                left: self.k,
                right: other.k,
            });
        }
        if self.size() != other.size() {
            return Err(Error::DimensionMismatch(format!(
                "monomial sizes {} and {}",
                self.size(),
                other.size()
            )));
        }
        Ok(())
    }
}

/// `Ma · Mb`.
pub fn monomial_compose(ma: &MonomialMatrix, mb: &MonomialMatrix) -> Result<MonomialMatrix> {
    ma.compose(mb)
}

pub fn monomial_inverse(m: &MonomialMatrix) -> MonomialMatrix {
    m.inverse()
}

/// `M1 · A`.
pub fn apply_row_transform(m1: &MonomialMatrix, a: &T0Matrix) -> Result<T0Matrix> {
    if m1.order() != a.order() {
        return Err(Error::MixedModulus {
            left: m1.order(),
            right: a.order(),
        });
    }
    if m1.size() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "left factor of size {} applied to {} rows",
            m1.size(),
            a.rows()
        )));
    }
    let g = a.group();
    let mut out = a.clone();
    for (i, (&p, &d)) in m1.perm.iter().zip(&m1.diag).enumerate() {
        for c in 0..a.cols() {
            out.set(p, c, g.mul(Entry::Unit(d), a.get(i, c)));
        }
    }
    Ok(out)
}

/// `A · M2`.
pub fn apply_col_transform(a: &T0Matrix, m2: &MonomialMatrix) -> Result<T0Matrix> {
    if m2.order() != a.order() {
        return Err(Error::MixedModulus {
            left: a.order(),
            right: m2.order(),
        });
    }
    if m2.size() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "right factor of size {} applied to {} columns",
            m2.size(),
            a.cols()
        )));
    }
    let g = a.group();
    let mut out = a.clone();
    for (c, (&p, &d)) in m2.perm.iter().zip(&m2.diag).enumerate() {
        for r in 0..a.rows() {
            out.set(r, c, g.mul(Entry::Unit(d), a.get(r, p)));
        }
    }
    Ok(out)
}

/// Checks `M1 · A · M2 = B` entrywise.
pub fn equivalent_by(a: &T0Matrix, b: &T0Matrix, m1: &MonomialMatrix, m2: &MonomialMatrix) -> Result<bool> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.order() != b.order() {
        return Err(Error::MixedModulus {
            left: a.order(),
            right: b.order(),
        });
    }
    let transformed = apply_col_transform(&apply_row_transform(m1, a)?, m2)?;
    Ok(&transformed == b)
}
