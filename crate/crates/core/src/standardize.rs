//! Reduction to standard form under monomial equivalence.
//!
//! Two reductions live here:
//!
//! * [`legacy_standardize`]: normalize rows, normalize columns, move the
//!   first row's nonzeros to the front, sort rows. It always yields an
//!   equivalent matrix but not always a standard one.
//! * [`standardize`]: the block-recursive reduction built from
//!   [`lemma_p1`] (row sorting inside blocks plus a column transform on
//!   the free columns) and [`lemma_p2`] (adds row scaling and splits off
//!   finished row blocks). The output satisfies S1 to S4.
//!
//! Both recursions are tail-recursive in shape: each step finishes a
//! prefix of the rows and a prefix of the free columns and continues on the
//! remaining lower-right region. They are implemented as loops over a
//! [`Workspace`] that holds the current matrix together with the
//! accumulated left and right monomial factors, so recursion depth is not
//! bounded by the stack.
//!
//! Index conventions used below: the working matrix has columns `[0, n)`.
//! Columns `[0, n1)` form the fixed block `A1` (never transformed), and
//! `[n1, n)` the free block `A2`. During a reduction, `r` is the first
//! unfinished row and `c` the first unfinished column; columns `[0, c)`
//! restricted to rows `r..` play the role of the fixed block of the
//! remaining subproblem. Finished rows `< r` are zero in every column
//! `>= c`, so column operations on `[c, n)` never disturb them.

use std::cmp::Ordering;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::group::{Entry, GroupSpec, OrderSpec};
use crate::matrix::{equivalent_by, lex, MonomialMatrix, T0Matrix};

/// The pair `(M1, M2)` witnessing `M1 · input · M2 = output`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub left: MonomialMatrix,
    pub right: MonomialMatrix,
}

impl Certificate {
    pub fn identity(k: u32, rows: usize, cols: usize) -> Self {
        Certificate {
            left: MonomialMatrix::identity(k, rows),
            right: MonomialMatrix::identity(k, cols),
        }
    }

    pub fn verify(&self, input: &T0Matrix, output: &T0Matrix) -> Result<bool> {
        equivalent_by(input, output, &self.left, &self.right)
    }

    /// Certificate for `(Ma · input · Mb) ↦ output`, given that `self`
    /// certifies `input ↦ output`.
    pub fn transported(&self, ma: &MonomialMatrix, mb: &MonomialMatrix) -> Result<Certificate> {
        Ok(Certificate {
            left: self.left.compose(&ma.inverse())?,
            right: mb.inverse().compose(&self.right)?,
        })
    }

    /// Given `a ↦ s` (`self`) and `b ↦ s` (`other`), certifies `a ↦ b`.
    pub fn between(&self, other: &Certificate) -> Result<Certificate> {
        Ok(Certificate {
            left: other.left.inverse().compose(&self.left)?,
            right: self.right.compose(&other.right.inverse())?,
        })
    }

    pub fn inverse(&self) -> Certificate {
        Certificate {
            left: self.left.inverse(),
            right: self.right.inverse(),
        }
    }
}

/// Maximal runs of rows that agree on the columns before `split`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitView {
    pub split: usize,
    pub blocks: Vec<Range<usize>>,
}

impl SplitView {
    pub fn compute(a: &T0Matrix, rows: Range<usize>, split: usize) -> SplitView {
        let mut blocks = Vec::new();
        let mut start = rows.start;
        while start < rows.end {
            let end = block_end(a, start, rows.end, split);
            blocks.push(start..end);
            start = end;
        }
        SplitView { split, blocks }
    }
}

pub fn split_view(a: &T0Matrix, split: usize) -> SplitView {
    SplitView::compute(a, 0..a.rows(), split)
}

fn block_end(a: &T0Matrix, start: usize, limit: usize, split: usize) -> usize {
    let head = &a.row(start)[..split];
    (start + 1..limit)
        .find(|&s| &a.row(s)[..split] != head)
        .unwrap_or(limit)
}

fn nonzeros(row: &[Entry]) -> usize {
    row.iter().filter(|e| !e.is_zero()).count()
}

/// `M` with `b · M = [1, …, 1, 0, …, 0]`: nonzero positions move to the
/// front in their original order, each scaled by the inverse of its entry.
pub fn leading_ones_transform(k: u32, b: &[Entry]) -> Result<MonomialMatrix> {
    let g = GroupSpec::new(k)?;
    let (nz, z): (Vec<usize>, Vec<usize>) = (0..b.len()).partition(|&c| !b[c].is_zero());
    let diag = nz
        .iter()
        .map(|&c| match b[c] {
            Entry::Unit(e) => g.neg_exponent(e),
            Entry::Zero => unreachable!(),
        })
        .chain(z.iter().map(|_| 0))
        .collect();
    let perm = nz.into_iter().chain(z).collect();
    MonomialMatrix::new(k, perm, diag)
}

/// Working matrix plus accumulated transforms; `mat = left · input · right`
/// holds after every operation.
///
/// The left factor is kept in row-source form (row `r` of `mat` comes from
/// input row `row_source[r]` scaled by `ζ^row_scale[r]`) and converted at
/// the end; the right factor is kept directly as `P·D`.
pub struct Workspace<'o> {
    mat: T0Matrix,
    group: GroupSpec,
    order: &'o OrderSpec,
    row_source: Vec<usize>,
    row_scale: Vec<u32>,
    col_perm: Vec<usize>,
    col_diag: Vec<u32>,
}

impl<'o> Workspace<'o> {
    pub fn new(input: &T0Matrix, order: &'o OrderSpec) -> Result<Self> {
        if order.order() != input.order() {
            return Err(Error::MixedModulus {
                left: input.order(),
                right: order.order(),
            });
        }
        Ok(Workspace {
            mat: input.clone(),
            group: input.group(),
            order,
            row_source: (0..input.rows()).collect(),
            row_scale: vec![0; input.rows()],
            col_perm: (0..input.cols()).collect(),
            col_diag: vec![0; input.cols()],
        })
    }

    pub fn matrix(&self) -> &T0Matrix {
        &self.mat
    }

    pub fn certificate(&self) -> Certificate {
        let k = self.group.order();
        Certificate {
            left: MonomialMatrix::from_row_sources(k, &self.row_source, &self.row_scale),
            right: MonomialMatrix::new(k, self.col_perm.clone(), self.col_diag.clone())
                .expect("workspace keeps a valid permutation"),
        }
    }

    pub fn into_parts(self) -> (T0Matrix, Certificate) {
        let cert = self.certificate();
        (self.mat, cert)
    }

    fn unit_inverse(&self, e: Entry) -> u32 {
        match e {
            Entry::Unit(x) => self.group.neg_exponent(x),
            Entry::Zero => unreachable!("only nonzero entries are normalized"),
        }
    }

    fn scale_row(&mut self, r: usize, t: u32) {
        if t == 0 {
            return;
        }
        for c in 0..self.mat.cols() {
            let v = self.group.mul(Entry::Unit(t), self.mat.get(r, c));
            self.mat.set(r, c, v);
        }
        self.row_scale[r] = self.group.add_exponents(self.row_scale[r], t);
    }

    fn scale_col(&mut self, c: usize, t: u32) {
        if t == 0 {
            return;
        }
        for r in 0..self.mat.rows() {
            let v = self.group.mul(Entry::Unit(t), self.mat.get(r, c));
            self.mat.set(r, c, v);
        }
        self.col_diag[c] = self.group.add_exponents(self.col_diag[c], t);
    }

    /// New row `start + i` is old row `order[i]`; `order` permutes
    /// `start..start + order.len()`.
    fn permute_rows(&mut self, start: usize, order: &[usize]) {
        if order.iter().enumerate().all(|(i, &o)| o == start + i) {
            return;
        }
        let moved: Vec<Vec<Entry>> = order.iter().map(|&o| self.mat.row(o).to_vec()).collect();
        let sources: Vec<usize> = order.iter().map(|&o| self.row_source[o]).collect();
        let scales: Vec<u32> = order.iter().map(|&o| self.row_scale[o]).collect();
        for (i, row) in moved.into_iter().enumerate() {
            self.mat.row_mut(start + i).copy_from_slice(&row);
            self.row_source[start + i] = sources[i];
            self.row_scale[start + i] = scales[i];
        }
    }

    /// New column `start + i` is old column `order[i]`.
    fn permute_cols(&mut self, start: usize, order: &[usize]) {
        if order.iter().enumerate().all(|(i, &o)| o == start + i) {
            return;
        }
        for r in 0..self.mat.rows() {
            let moved: Vec<Entry> = order.iter().map(|&o| self.mat.get(r, o)).collect();
            for (i, e) in moved.into_iter().enumerate() {
                self.mat.set(r, start + i, e);
            }
        }
        let perm: Vec<usize> = order.iter().map(|&o| self.col_perm[o]).collect();
        let diag: Vec<u32> = order.iter().map(|&o| self.col_diag[o]).collect();
        self.col_perm[start..start + order.len()].copy_from_slice(&perm);
        self.col_diag[start..start + order.len()].copy_from_slice(&diag);
    }

    /// Stable lexicographic sort of `rows`, comparing columns `cols`.
    fn sort_rows(&mut self, rows: Range<usize>, cols: Range<usize>) {
        let mut order: Vec<usize> = rows.clone().collect();
        let (mat, ord) = (&self.mat, self.order);
        order.sort_by(|&a, &b| lex(ord, &mat.row(a)[cols.clone()], &mat.row(b)[cols.clone()]));
        self.permute_rows(rows.start, &order);
    }

    fn region_is_zero(&self, rows: Range<usize>, cols: Range<usize>) -> bool {
        rows.into_iter()
            .all(|r| self.mat.row(r)[cols.clone()].iter().all(|e| e.is_zero()))
    }

    /// Row in `rows` with the most nonzeros in `cols`; smallest index on ties.
    /// `None` if the region is zero.
    fn densest_row(&self, rows: Range<usize>, cols: Range<usize>) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in rows {
            let count = nonzeros(&self.mat.row(r)[cols.clone()]);
            if count > 0 && best.is_none_or(|(_, b)| count > b) {
                best = Some((r, count));
            }
        }
        best
    }

    /// Applies [`leading_ones_transform`] of row `pivot` to columns `cols`.
    /// Returns the number of ones produced.
    fn leading_ones(&mut self, pivot: usize, cols: Range<usize>) -> usize {
        let (nz, z): (Vec<usize>, Vec<usize>) = cols.clone().partition(|&c| !self.mat.get(pivot, c).is_zero());
        let ones = nz.len();
        let order: Vec<usize> = nz.into_iter().chain(z).collect();
        self.permute_cols(cols.start, &order);
        for c in cols.start..cols.start + ones {
            let t = self.unit_inverse(self.mat.get(pivot, c));
            self.scale_col(c, t);
        }
        ones
    }

    /// Row permutation within prefix blocks and a column transform on
    /// `active`, after which the active block is S2 and S3', and rows
    /// `rows` are lexicographically sorted on `[0, active.end)`.
    ///
    /// Requires rows `rows` to be sorted on `[0, active.start)`.
    fn reduce_free_columns(&mut self, rows: Range<usize>, active: Range<usize>) {
        let end = active.end;
        let (mut r, mut c) = (rows.start, active.start);
        while r < rows.end && c < end {
            let first_block = block_end(&self.mat, r, rows.end, c);
            let Some((pivot, ones)) = self.densest_row(r..first_block, c..end) else {
                // B1 = 0: the first block is finished as is.
                r = first_block;
                continue;
            };
            self.leading_ones(pivot, c..end);
            let view = SplitView::compute(&self.mat, r..rows.end, c);
            for block in view.blocks {
                self.sort_rows(block, c..end);
            }
            if c + ones == end {
                break;
            }
            // Drop the first row; the ones columns join the prefix.
            c += ones;
            r += 1;
        }
    }

    /// Row and column transforms after which `[A1 | A2]` is S1 and S4 and
    /// the free block `[n1, n)` is S2 and S3'.
    fn reduce_blocks(&mut self, n1: usize) {
        let (m, n) = (self.mat.rows(), self.mat.cols());
        let (mut r, mut c) = (0, n1);
        while r < m {
            if self.region_is_zero(r..m, 0..c) {
                // Fixed block is zero: choose a densest row as the new first
                // row and its first nonzero column as the pivot column.
                let Some((pivot, width)) = self.densest_row(r..m, c..n) else {
                    break;
                };
                let pivot_col = (c..n).find(|&j| !self.mat.get(pivot, j).is_zero()).unwrap();
                let (middle, rest): (Vec<usize>, Vec<usize>) = (r..m)
                    .filter(|&i| i != pivot)
                    .partition(|&i| !self.mat.get(i, pivot_col).is_zero());

                // Columns: pivot's nonzeros (pivot column first), then those
                // zero in the pivot row but nonzero in some middle row, then
                // the rest.
                let (ones_cols, zero_cols): (Vec<usize>, Vec<usize>) =
                    (c..n).partition(|&j| !self.mat.get(pivot, j).is_zero());
                let (b2_cols, c2_cols): (Vec<usize>, Vec<usize>) = zero_cols
                    .into_iter()
                    .partition(|&j| middle.iter().any(|&i| !self.mat.get(i, j).is_zero()));
                let b2_width = b2_cols.len();
                debug_assert_eq!(ones_cols[0], pivot_col);
                let col_order: Vec<usize> = ones_cols.into_iter().chain(b2_cols).chain(c2_cols).collect();
                self.permute_cols(c, &col_order);
                for j in c..c + width {
                    let t = self.unit_inverse(self.mat.get(pivot, j));
                    self.scale_col(j, t);
                }

                let m1 = middle.len();
                let row_order: Vec<usize> = std::iter::once(pivot).chain(middle).chain(rest).collect();
                self.permute_rows(r, &row_order);
                for i in r + 1..r + 1 + m1 {
                    let t = self.unit_inverse(self.mat.get(i, c));
                    self.scale_row(i, t);
                }

                let middle_rows = r + 1..r + 1 + m1;
                let split = c + width;
                self.sort_rows(middle_rows.clone(), 0..split);
                self.reduce_free_columns(middle_rows, split..split + b2_width);
                r += 1 + m1;
                c = split + b2_width;
            } else {
                // Normalize the first nonzero column of the fixed block to
                // ones followed by zeros.
                let pivot_col = (0..c)
                    .find(|&j| (r..m).any(|i| !self.mat.get(i, j).is_zero()))
                    .unwrap();
                let (top, rest): (Vec<usize>, Vec<usize>) =
                    (r..m).partition(|&i| !self.mat.get(i, pivot_col).is_zero());
                let m1 = top.len();
                let row_order: Vec<usize> = top.into_iter().chain(rest).collect();
                self.permute_rows(r, &row_order);
                for i in r..r + m1 {
                    let t = self.unit_inverse(self.mat.get(i, pivot_col));
                    self.scale_row(i, t);
                }

                let top_rows = r..r + m1;
                let (b2_cols, c2_cols): (Vec<usize>, Vec<usize>) =
                    (c..n).partition(|&j| top_rows.clone().any(|i| !self.mat.get(i, j).is_zero()));
                let b2_width = b2_cols.len();
                let col_order: Vec<usize> = b2_cols.into_iter().chain(c2_cols).collect();
                self.permute_cols(c, &col_order);

                self.sort_rows(top_rows.clone(), 0..c);
                self.reduce_free_columns(top_rows, c..c + b2_width);
                r += m1;
                c += b2_width;
            }
        }
    }
}

/// Restricts a right factor of the form `diag(I_offset, M)` to `M`.
fn tail_factor(m: &MonomialMatrix, offset: usize) -> MonomialMatrix {
    debug_assert!((0..offset).all(|i| m.perm()[i] == i && m.diag()[i] == 0));
    MonomialMatrix::new(
        m.order(),
        m.perm()[offset..].iter().map(|&p| p - offset).collect(),
        m.diag()[offset..].to_vec(),
    )
    .expect("block-diagonal factor")
}

fn check_split(a1: &T0Matrix, a2: &T0Matrix, order: &OrderSpec) -> Result<T0Matrix> {
    if a1.rows() != a2.rows() {
        return Err(Error::DimensionMismatch(format!(
            "blocks have {} and {} rows",
            a1.rows(),
            a2.rows()
        )));
    }
    if order.order() != a1.order() {
        return Err(Error::MixedModulus {
            left: a1.order(),
            right: order.order(),
        });
    }
    a1.hconcat(a2)
}

/// Finds a row permutation `P` (all diagonal entries 1) and `M` such that
/// `P·A2·M` is S2 and S3' and `[P·A1 | P·A2·M]` is S4.
///
/// `A1` must already be S4; `P` only reorders rows with equal `A1` rows,
/// so `P·A1 = A1`.
pub fn lemma_p1(a1: &T0Matrix, a2: &T0Matrix, order: &OrderSpec) -> Result<(MonomialMatrix, MonomialMatrix)> {
    let joined = check_split(a1, a2, order)?;
    if let Some(row) = (1..a1.rows()).find(|&r| lex(order, a1.row(r - 1), a1.row(r)) == Ordering::Greater) {
        return Err(Error::PreconditionS4 { row: row - 1 });
    }
    let n1 = a1.cols();
    let mut ws = Workspace::new(&joined, order)?;
    ws.reduce_free_columns(0..joined.rows(), n1..joined.cols());
    let cert = ws.certificate();
    debug_assert!(cert.left.is_permutation());
    Ok((cert.left, tail_factor(&cert.right, n1)))
}

/// Finds `M1` and `M2` such that `[M1·A1 | M1·A2·M2]` is S1 and S4 and
/// `M1·A2·M2` is S2 and S3'.
pub fn lemma_p2(a1: &T0Matrix, a2: &T0Matrix, order: &OrderSpec) -> Result<(MonomialMatrix, MonomialMatrix)> {
    let joined = check_split(a1, a2, order)?;
    let n1 = a1.cols();
    let mut ws = Workspace::new(&joined, order)?;
    ws.reduce_blocks(n1);
    let cert = ws.certificate();
    Ok((cert.left, tail_factor(&cert.right, n1)))
}

/// Returns a standard-form matrix `S` and the certificate of `W ↦ S`.
pub fn standardize(w: &T0Matrix, order: &OrderSpec) -> Result<(T0Matrix, Certificate)> {
    let mut ws = Workspace::new(w, order)?;
    ws.reduce_blocks(0);
    let (s, cert) = ws.into_parts();
    debug_assert_eq!(cert.verify(w, &s), Ok(true));
    Ok((s, cert))
}

/// Intermediate matrices of [`legacy_standardize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegacyTrace {
    /// Rows scaled so that each starts with 1.
    pub w1: T0Matrix,
    /// Columns scaled so that each starts with 1.
    pub w2: T0Matrix,
    /// Columns permuted so the first row's nonzeros come first.
    pub w3: T0Matrix,
    /// Rows sorted.
    pub w4: T0Matrix,
}

impl LegacyTrace {
    pub fn steps(&self) -> [&T0Matrix; 4] {
        [&self.w1, &self.w2, &self.w3, &self.w4]
    }
}

/// The four-step reduction. The result is equivalent to `w` but need not
/// be in standard form.
pub fn legacy_standardize(w: &T0Matrix, order: &OrderSpec) -> Result<(T0Matrix, Certificate)> {
    let (out, cert, _) = legacy_standardize_traced(w, order)?;
    Ok((out, cert))
}

pub fn legacy_standardize_traced(w: &T0Matrix, order: &OrderSpec) -> Result<(T0Matrix, Certificate, LegacyTrace)> {
    let mut ws = Workspace::new(w, order)?;
    let (m, n) = w.shape();

    for r in 0..m {
        if let Some(&e) = ws.mat.row(r).iter().find(|e| !e.is_zero()) {
            let t = ws.unit_inverse(e);
            ws.scale_row(r, t);
        }
    }
    let w1 = ws.mat.clone();

    for c in 0..n {
        let first = ws.mat.column(c).find(|e| !e.is_zero());
        if let Some(e) = first {
            let t = ws.unit_inverse(e);
            ws.scale_col(c, t);
        }
    }
    let w2 = ws.mat.clone();

    if m > 0 {
        let (nz, z): (Vec<usize>, Vec<usize>) = (0..n).partition(|&c| !ws.mat.get(0, c).is_zero());
        let order: Vec<usize> = nz.into_iter().chain(z).collect();
        ws.permute_cols(0, &order);
    }
    let w3 = ws.mat.clone();

    ws.sort_rows(0..m, 0..n);
    let w4 = ws.mat.clone();

    let (out, cert) = ws.into_parts();
    Ok((out, cert, LegacyTrace { w1, w2, w3, w4 }))
}
