//! Exhaustive searches for tiny instances: all monomial matrices of a
//! size, equivalence by brute force over monomial pairs, and every
//! standard-form matrix of a shape.

use crate::error::{Error, Result};
use crate::group::{Entry, OrderSpec};
use crate::matrix::{apply_col_transform, apply_row_transform, MonomialMatrix, T0Matrix};
use crate::standard_form::is_standard_form;
use crate::standardize::Certificate;

/// Limits on exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_dim: usize,
    pub max_order: u32,
    /// Ceiling on the number of candidates examined.
    pub max_applications: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_dim: 3,
            max_order: 4,
            max_applications: 100_000_000,
        }
    }
}

impl OracleBudget {
    fn check_shape(&self, dims: &[usize], k: u32) -> Result<()> {
        if let Some(&d) = dims.iter().find(|&&d| d > self.max_dim) {
            return Err(Error::BudgetExceeded(format!("dimension {d} exceeds {}", self.max_dim)));
        }
        if k > self.max_order {
            return Err(Error::BudgetExceeded(format!("group order {k} exceeds {}", self.max_order)));
        }
        Ok(())
    }

    fn check_count(&self, count: Option<u128>) -> Result<()> {
        match count {
            Some(c) if c <= self.max_applications => Ok(()),
            Some(c) => Err(Error::BudgetExceeded(format!(
                "{c} candidates exceed the ceiling of {}",
                self.max_applications
            ))),
            None => Err(Error::BudgetExceeded("candidate count overflows".into())),
        }
    }
}

/// `s! · k^s`, or `None` on overflow.
pub fn monomial_count(s: usize, k: u32) -> Option<u128> {
    let mut count: u128 = 1;
    for i in 1..=s as u128 {
        count = count.checked_mul(i)?.checked_mul(k as u128)?;
    }
    Some(count)
}

/// Every monomial matrix of size `s` over `⟨ζ_k⟩`, permutations in
/// lexicographic order, then diagonal exponents in lexicographic order.
#[derive(Debug, Clone)]
pub struct Monomials {
    k: u32,
    perm: Vec<usize>,
    diag: Vec<u32>,
    done: bool,
}

impl Iterator for Monomials {
    type Item = MonomialMatrix;

    fn next(&mut self) -> Option<MonomialMatrix> {
        if self.done {
            return None;
        }
        let current = MonomialMatrix::new(self.k, self.perm.clone(), self.diag.clone()).expect("valid by construction");
        if !advance_odometer(&mut self.diag, self.k) && !next_permutation(&mut self.perm) {
            self.done = true;
        }
        Some(current)
    }
}

fn advance_odometer(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

pub fn enumerate_monomials(s: usize, k: u32, budget: &OracleBudget) -> Result<Monomials> {
    if k == 0 {
        return Err(Error::InvalidGroupOrder);
    }
    budget.check_shape(&[s], k)?;
    budget.check_count(monomial_count(s, k))?;
    Ok(Monomials {
        k,
        perm: (0..s).collect(),
        diag: vec![0; s],
        done: false,
    })
}

fn sorted_counts(counts: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = counts.collect();
    v.sort_unstable();
    v
}

fn row_counts(a: &T0Matrix) -> Vec<usize> {
    sorted_counts(a.row_iter().map(|r| r.iter().filter(|e| !e.is_zero()).count()))
}

fn col_counts(a: &T0Matrix) -> Vec<usize> {
    sorted_counts((0..a.cols()).map(|c| a.column(c).filter(|e| !e.is_zero()).count()))
}

/// Searches all monomial pairs for `M1 · a · M2 = b`. The first witness
/// in enumeration order (left factor outer, right factor inner) is returned.
pub fn brute_force_equivalent(a: &T0Matrix, b: &T0Matrix, budget: &OracleBudget) -> Result<Option<Certificate>> {
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
    let (m, n, k) = (a.rows(), a.cols(), a.order());
    budget.check_shape(&[m, n], k)?;
    let pairs = monomial_count(m, k).and_then(|l| monomial_count(n, k).and_then(|r| l.checked_mul(r)));
    budget.check_count(pairs)?;

    // Nonzero counts per row and per column are invariants.
    if row_counts(a) != row_counts(b) || col_counts(a) != col_counts(b) {
        return Ok(None);
    }
    let target_rows: Vec<usize> = b.row_iter().map(|r| r.iter().filter(|e| !e.is_zero()).count()).collect();
    let rights: Vec<MonomialMatrix> = enumerate_monomials(n, k, budget)?.collect();
    for left in enumerate_monomials(m, k, budget)? {
        let moved = apply_row_transform(&left, a)?;
        let row_ok = moved
            .row_iter()
            .zip(&target_rows)
            .all(|(r, &t)| r.iter().filter(|e| !e.is_zero()).count() == t);
        if !row_ok {
            continue;
        }
        for right in &rights {
            if apply_col_transform(&moved, right)? == *b {
                return Ok(Some(Certificate {
                    left,
                    right: right.clone(),
                }));
            }
        }
    }
    Ok(None)
}

/// Every matrix of shape `m × n` over `{0} ∪ ⟨ζ_k⟩` in standard form under
/// `order`, in odometer order over row-major entries.
pub fn enumerate_standard_forms(
    m: usize,
    n: usize,
    order: &OrderSpec,
    budget: &OracleBudget,
) -> Result<impl Iterator<Item = T0Matrix>> {
    let k = order.order();
    budget.check_shape(&[m, n], k)?;
    let cells = u32::try_from(m * n).ok();
    let count = cells.and_then(|c| (k as u128 + 1).checked_pow(c));
    budget.check_count(count)?;

    let order = order.clone();
    // digit k stands for zero
    let mut digits = vec![0u32; m * n];
    let mut done = false;
    let all = std::iter::from_fn(move || {
        if done {
            return None;
        }
        let entries = digits
            .iter()
            .map(|&d| if d == k { Entry::Zero } else { Entry::Unit(d) })
            .collect();
        if !advance_odometer(&mut digits, k + 1) {
            done = true;
        }
        Some(T0Matrix::new(k, m, n, entries).expect("valid by construction"))
    });
    Ok(all.filter(move |a| is_standard_form(&order, a).0))
}
