//! Predicates for the standard-form conditions.
//!
//! * `S1`: the first nonzero entry of every row is 1,
//! * `S2`: the first nonzero entry of every column is 1,
//! * `S3`: the first row is `1 … 1 0 … 0` (zero ones allowed),
//! * `S3'`: the first row containing a nonzero entry is `1 … 1 0 … 0`,
//! * `S4`: rows are non-decreasing under the lexicographic order.
//!
//! Rows and columns in reports are 0-indexed.

use std::cmp::Ordering;
use std::fmt;

use crate::group::{Entry, OrderSpec};
use crate::matrix::{lex, T0Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    S1,
    S2,
    S3,
    S3Prime,
    S4,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::S1 => "S1",
            Condition::S2 => "S2",
            Condition::S3 => "S3",
            Condition::S3Prime => "S3'",
            Condition::S4 => "S4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Location {
    Row(usize),
    Column(usize),
    Cell { row: usize, col: usize },
    /// Rows `row` and `row + 1` are out of order.
    AdjacentRows(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub location: Location,
    /// The entry that breaks the condition, when one is singled out.
    pub found: Option<Entry>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-indexed for people
        match &self.location {
            Location::Row(r) => write!(f, "{} at row {}", self.condition, r + 1)?,
            Location::Column(c) => write!(f, "{} at column {}", self.condition, c + 1)?,
            Location::Cell { row, col } => {
                write!(f, "{} at row {}, column {}", self.condition, row + 1, col + 1)?
            }
            Location::AdjacentRows(r) => write!(f, "{} at rows {} and {}", self.condition, r + 1, r + 2)?,
        }
        if let Some(e) = self.found {
            write!(f, " (found {e})")?;
        }
        Ok(())
    }
}

/// Violations in discovery order; empty iff the checked conditions hold.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self, condition: Condition) -> Option<&Violation> {
        self.violations.iter().find(|v| v.condition == condition)
    }

    pub fn holds(&self, condition: Condition) -> bool {
        self.first(condition).is_none()
    }

    fn extend(&mut self, other: ViolationReport) {
        self.violations.extend(other.violations);
    }
}

fn first_nonzero(entries: impl Iterator<Item = Entry>) -> Option<(usize, Entry)> {
    entries.enumerate().find(|(_, e)| !e.is_zero())
}

/// Position of the first entry that breaks the `1 … 1 0 … 0` shape.
fn ones_then_zeros_break(row: &[Entry]) -> Option<usize> {
    let ones = row.iter().take_while(|e| e.is_one()).count();
    (ones..row.len()).find(|&c| !row[c].is_zero())
}

pub fn check_s1(a: &T0Matrix) -> ViolationReport {
    let violations = (0..a.rows())
        .filter_map(|r| {
            let (col, e) = first_nonzero(a.row(r).iter().copied())?;
            (!e.is_one()).then_some(Violation {
                condition: Condition::S1,
                location: Location::Cell { row: r, col },
                found: Some(e),
            })
        })
        .collect();
    ViolationReport { violations }
}

pub fn check_s2(a: &T0Matrix) -> ViolationReport {
    let violations = (0..a.cols())
        .filter_map(|c| {
            let (row, e) = first_nonzero(a.column(c))?;
            (!e.is_one()).then_some(Violation {
                condition: Condition::S2,
                location: Location::Cell { row, col: c },
                found: Some(e),
            })
        })
        .collect();
    ViolationReport { violations }
}

fn shape_violation(a: &T0Matrix, condition: Condition, row: usize) -> ViolationReport {
    let violations = ones_then_zeros_break(a.row(row))
        .map(|col| Violation {
            condition,
            location: Location::Cell { row, col },
            found: Some(a.get(row, col)),
        })
        .into_iter()
        .collect();
    ViolationReport { violations }
}

pub fn check_s3(a: &T0Matrix) -> ViolationReport {
    if a.rows() == 0 {
        return ViolationReport::default();
    }
    shape_violation(a, Condition::S3, 0)
}

pub fn check_s3prime(a: &T0Matrix) -> ViolationReport {
    match (0..a.rows()).find(|&r| a.row(r).iter().any(|e| !e.is_zero())) {
        Some(r) => shape_violation(a, Condition::S3Prime, r),
        None => ViolationReport::default(),
    }
}

pub fn check_s4(order: &OrderSpec, a: &T0Matrix) -> ViolationReport {
    let violations = (1..a.rows())
        .find(|&r| lex(order, a.row(r - 1), a.row(r)) == Ordering::Greater)
        .map(|r| Violation {
            condition: Condition::S4,
            location: Location::AdjacentRows(r - 1),
            found: None,
        })
        .into_iter()
        .collect();
    ViolationReport { violations }
}

/// Checks S1 through S4. The report lists S1, S2, S3, S4 violations in that order.
pub fn is_standard_form(order: &OrderSpec, a: &T0Matrix) -> (bool, ViolationReport) {
    let mut report = check_s1(a);
    report.extend(check_s2(a));
    report.extend(check_s3(a));
    report.extend(check_s4(order, a));
    (report.is_empty(), report)
}
