//! The cyclic unit group of `k`-th roots of unity with zero adjoined, and
//! the total orders on it that drive lexicographic comparisons.
//!
//! An entry is either [`Entry::Zero`] or [`Entry::Unit`]`(e)`, the root of
//! unity `ζ_k^e`. The group order `k` lives in the surrounding context
//! ([`GroupSpec`], [`OrderSpec`], or the matrix), never in the entry.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// An element of `{0} ∪ ⟨ζ_k⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Entry {
    Zero,
    /// `ζ_k^e` with `e` reduced modulo `k`.
    Unit(u32),
}

impl Entry {
    pub const ONE: Entry = Entry::Unit(0);

    #[inline]
    pub fn is_zero(self) -> bool {
        matches!(self, Entry::Zero)
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self == Entry::ONE
    }

    #[inline]
    pub fn exponent(self) -> Option<u32> {
        match self {
            Entry::Zero => None,
            Entry::Unit(e) => Some(e),
        }
    }

    pub fn is_valid_for(self, k: u32) -> bool {
        match self {
            Entry::Zero => true,
            Entry::Unit(e) => e < k,
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Zero => f.write_str("*"),
            Entry::Unit(e) => write!(f, "{e}"),
        }
    }
}

/// The cyclic group `⟨ζ_k⟩` of order `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    k: u32,
}

impl GroupSpec {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGroupOrder);
        }
        Ok(GroupSpec { k })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.k
    }

    /// `ζ_k^e` for an arbitrary (unreduced) exponent.
    pub fn unit(&self, e: u64) -> Entry {
        Entry::Unit((e % self.k as u64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = Entry> {
        (0..self.k).map(Entry::Unit).chain(std::iter::once(Entry::Zero))
    }

    #[inline]
    pub fn mul(&self, a: Entry, b: Entry) -> Entry {
        match (a, b) {
            (Entry::Unit(x), Entry::Unit(y)) => Entry::Unit(((x as u64 + y as u64) % self.k as u64) as u32),
            _ => Entry::Zero,
        }
    }

    #[inline]
    pub fn inv(&self, a: Entry) -> Result<Entry> {
        match a {
            Entry::Zero => Err(Error::ZeroNotInvertible),
            Entry::Unit(e) => Ok(Entry::Unit(self.neg_exponent(e))),
        }
    }

    /// Complex conjugation; on roots of unity this is inversion.
    #[inline]
    pub fn conj(&self, a: Entry) -> Entry {
        match a {
            Entry::Zero => Entry::Zero,
            Entry::Unit(e) => Entry::Unit(self.neg_exponent(e)),
        }
    }

    #[inline]
    pub(crate) fn add_exponents(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.k as u64) as u32
    }

    #[inline]
    pub(crate) fn neg_exponent(&self, e: u32) -> u32 {
        (self.k - e % self.k) % self.k
    }
}

/// A total order `≺` on `{0} ∪ ⟨ζ_k⟩` with `1` minimal and `0` maximal.
///
/// `rank[e]` is the position of `ζ_k^e`; `rank[k]` is the position of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    k: u32,
    rank: Vec<u32>,
}

impl OrderSpec {
    /// `1 ≺ ζ ≺ ζ² ≺ … ≺ 0`.
    pub fn default_for(k: u32) -> Result<Self> {
        GroupSpec::new(k)?;
        Ok(OrderSpec {
            k,
            rank: (0..=k).collect(),
        })
    }

    /// Builds an order from the unit exponents listed in increasing order.
    /// Zero is appended as the maximum.
    pub fn from_sequence(k: u32, sequence: &[u32]) -> Result<Self> {
        GroupSpec::new(k)?;
        if sequence.len() != k as usize {
            return Err(Error::MalformedOrder(format!(
                "expected {k} exponents, found {}",
                sequence.len()
            )));
        }
        let mut rank = vec![u32::MAX; k as usize + 1];
        for (position, &e) in sequence.iter().enumerate() {
            if e >= k {
                return Err(Error::MalformedOrder(format!("exponent {e} out of range for k = {k}")));
            }
            if rank[e as usize] != u32::MAX {
                return Err(Error::MalformedOrder(format!("exponent {e} listed twice")));
            }
            rank[e as usize] = position as u32;
        }
        if sequence[0] != 0 {
            return Err(Error::MalformedOrder("exponent 0 (the identity) must come first".into()));
        }
        rank[k as usize] = k;
        Ok(OrderSpec { k, rank })
    }

    /// Parses a whitespace-separated exponent list such as `"0 2 1 3"`.
    pub fn parse(k: u32, text: &str) -> Result<Self> {
        let sequence = text
            .split_whitespace()
            .map(|token| {
                token
                    .parse::<u32>()
                    .map_err(|_| Error::MalformedOrder(format!("invalid exponent token {token:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_sequence(k, &sequence)
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn rank(&self, a: Entry) -> u32 {
        match a {
            Entry::Zero => self.rank[self.k as usize],
            Entry::Unit(e) => self.rank[e as usize],
        }
    }

    /// Unit exponents in increasing order.
    pub fn sequence(&self) -> Vec<u32> {
        let mut seq: Vec<u32> = (0..self.k).collect();
        seq.sort_by_key(|&e| self.rank[e as usize]);
        seq
    }

    #[inline]
    pub fn compare(&self, a: Entry, b: Entry) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = self.sequence();
        for (i, e) in seq.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
