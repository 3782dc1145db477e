//! Exact arithmetic in `ℤ[ζ_k] ≅ ℤ[x]/(Φ_k(x))`.
//!
//! Elements are coefficient vectors of length `φ(k)` (lowest degree first),
//! always reduced modulo the monic polynomial `Φ_k`, so every element has a
//! unique representation and zero tests are exact. All coefficient
//! arithmetic is checked; overflow surfaces as [`Error::Overflow`].

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Entry, GroupSpec};
use crate::matrix::T0Matrix;

/// Integer polynomial, coefficients lowest degree first.
pub type IntPoly = Vec<i64>;

fn trim(p: &mut IntPoly) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Result<IntPoly> {
    if a.is_empty() || b.is_empty() {
        return Ok(vec![0]);
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let term = x.checked_mul(y).ok_or(Error::Overflow)?;
            out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
        }
    }
    trim(&mut out);
    Ok(out)
}

/// Division by a monic polynomial. Returns `(quotient, remainder)`.
pub(crate) fn poly_divmod_monic(num: &[i64], den: &[i64]) -> Result<(IntPoly, IntPoly)> {
    let d = den.len() - 1;
    debug_assert_eq!(den[d], 1, "divisor must be monic");
    let mut rem: IntPoly = num.to_vec();
    if rem.len() <= d {
        rem.resize(d.max(1), 0);
        return Ok((vec![0], rem));
    }
    let mut quot = vec![0i64; rem.len() - d];
    for shift in (0..quot.len()).rev() {
        let lead = rem[shift + d];
        if lead == 0 {
            continue;
        }
        quot[shift] = lead;
        for (j, &c) in den.iter().enumerate() {
            let term = lead.checked_mul(c).ok_or(Error::Overflow)?;
            rem[shift + j] = rem[shift + j].checked_sub(term).ok_or(Error::Overflow)?;
        }
    }
    rem.truncate(d.max(1));
    trim(&mut quot);
    Ok((quot, rem))
}

fn divisors(k: u32) -> Vec<u32> {
    (1..=k).filter(|d| k.is_multiple_of(*d)).collect()
}

pub fn euler_phi(k: u32) -> usize {
    (1..=k).filter(|&j| gcd(j, k) == 1).count()
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The `k`-th cyclotomic polynomial, by exact division of `x^k − 1` by the
/// product of `Φ_d` over the proper divisors `d` of `k`.
pub fn cyclotomic_polynomial(k: u32) -> Result<IntPoly> {
    GroupSpec::new(k)?;
    let mut table: Vec<Option<IntPoly>> = vec![None; k as usize + 1];
    for d in divisors(k) {
        let mut num = vec![0i64; d as usize + 1];
        num[0] = -1;
        num[d as usize] = 1;
        let mut den: IntPoly = vec![1];
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            den = poly_mul(&den, table[e as usize].as_ref().expect("divisors visited in order"))?;
        }
        let (quot, rem) = poly_divmod_monic(&num, &den)?;
        assert!(rem.iter().all(|&c| c == 0), "x^{d} - 1 not divisible by its proper factors");
        table[d as usize] = Some(quot);
    }
    Ok(table[k as usize].take().unwrap())
}

/// The ring `ℤ[x]/(Φ_k)` with `Φ_k` precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicRing {
    k: u32,
    modulus: Arc<IntPoly>,
}

impl CyclotomicRing {
    pub fn new(k: u32) -> Result<Self> {
        Ok(CyclotomicRing {
            k,
            modulus: Arc::new(cyclotomic_polynomial(k)?),
        })
    }

    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero(&self) -> CycPoly {
        self.constant(0)
    }

    pub fn one(&self) -> CycPoly {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> CycPoly {
        let mut coeffs = vec![0; self.degree()];
        coeffs[0] = c;
        CycPoly { k: self.k, coeffs }
    }

    /// Reduces an arbitrary integer polynomial.
    pub fn reduce(&self, p: &[i64]) -> Result<CycPoly> {
        let (_, mut rem) = poly_divmod_monic(p, &self.modulus)?;
        rem.resize(self.degree(), 0);
        Ok(CycPoly { k: self.k, coeffs: rem })
    }

    /// `0 ↦ 0`, `ζ^e ↦ x^e mod Φ_k`.
    pub fn embed(&self, e: Entry) -> Result<CycPoly> {
        match e {
            Entry::Zero => Ok(self.zero()),
            Entry::Unit(e) => {
                let mut p = vec![0i64; e as usize + 1];
                p[e as usize] = 1;
                self.reduce(&p)
            }
        }
    }

    pub fn add(&self, a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
        self.check(a)?;
        cyc_add(a, b)
    }

    pub fn mul(&self, a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
        self.check(a)?;
        self.check(b)?;
        let product = poly_mul(&a.coeffs, &b.coeffs)?;
        self.reduce(&product)
    }

    fn check(&self, a: &CycPoly) -> Result<()> {
        if a.k != self.k {
            return Err(Error::MixedModulus {
                left: self.k,
                right: a.k,
            });
        }
        Ok(())
    }
}

/// An element of `ℤ[ζ_k]`, reduced modulo `Φ_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycPoly {
    k: u32,
    coeffs: Vec<i64>,
}

impl CycPoly {
    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(c)` when the element is the integer `c`.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = match (c < 0, wrote) {
                (true, true) => " - ",
                (true, false) => "-",
                (false, true) => " + ",
                (false, false) => "",
            };
            let mag = c.unsigned_abs();
            match (i, mag) {
                (0, _) => write!(f, "{sign}{mag}")?,
                (_, 1) => write!(f, "{sign}z^{i}")?,
                _ => write!(f, "{sign}{mag}*z^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn embed(spec: GroupSpec, e: Entry) -> Result<CycPoly> {
    CyclotomicRing::new(spec.order())?.embed(e)
}

pub fn cyc_add(a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
    if a.k != b.k {
        return Err(Error::MixedModulus { left: a.k, right: b.k });
    }
    let coeffs = a
        .coeffs
        .iter()
        .zip(&b.coeffs)
        .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycPoly { k: a.k, coeffs })
}

pub fn cyc_mul(a: &CycPoly, b: &CycPoly) -> Result<CycPoly> {
    if a.k != b.k {
        return Err(Error::MixedModulus { left: a.k, right: b.k });
    }
    CyclotomicRing::new(a.k)?.mul(a, b)
}

/// Why a matrix failed the unit-weighing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramWitness {
    NotSquare { rows: usize, cols: usize },
    /// `(W·W*)[row][col] = value`, which is either a nonzero off-diagonal
    /// entry or a diagonal entry that differs from `(W·W*)[0][0]`.
    Entry { row: usize, col: usize, value: CycPoly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GramVerdict {
    UnitWeighing { weight: u64 },
    NotWeighing(GramWitness),
}

impl GramVerdict {
    pub fn weight(&self) -> Option<u64> {
        match self {
            GramVerdict::UnitWeighing { weight } => Some(*weight),
            GramVerdict::NotWeighing(_) => None,
        }
    }
}

/// Computes `W·W*` exactly and decides whether it equals `w·I`.
pub fn gram_weight_check(w: &T0Matrix) -> Result<GramVerdict> {
    if !w.is_square() {
        return Ok(GramVerdict::NotWeighing(GramWitness::NotSquare {
            rows: w.rows(),
            cols: w.cols(),
        }));
    }
    let n = w.rows();
    let g = w.group();
    let ring = CyclotomicRing::new(g.order())?;
    let k = g.order() as usize;
    let powers = (0..g.order())
        .map(|e| ring.embed(Entry::Unit(e)))
        .collect::<Result<Vec<_>>>()?;

    let mut weight = None;
    for i in 0..n {
        for j in i..n {
            // Count exponents of W[i][c] · conj(W[j][c]), then reduce once.
            let mut counts = vec![0i64; k];
            for (&a, &b) in w.row(i).iter().zip(w.row(j)) {
                if let Entry::Unit(e) = g.mul(a, g.conj(b)) {
                    counts[e as usize] += 1;
                }
            }
            let mut value = ring.zero();
            for (e, &count) in counts.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                let scaled = ring.mul(&ring.constant(count), &powers[e])?;
                value = ring.add(&value, &scaled)?;
            }
            if i != j {
                if !value.is_zero() {
                    return Ok(GramVerdict::NotWeighing(GramWitness::Entry { row: i, col: j, value }));
                }
                continue;
            }
            let diag = value.as_integer().expect("diagonal of W W* counts nonzero entries");
            match weight {
                None => weight = Some(diag),
                Some(w0) if w0 != diag => {
                    return Ok(GramVerdict::NotWeighing(GramWitness::Entry { row: i, col: i, value }));
                }
                Some(_) => {}
            }
        }
    }
    Ok(GramVerdict::UnitWeighing {
        weight: weight.unwrap_or(0) as u64,
    })
}
