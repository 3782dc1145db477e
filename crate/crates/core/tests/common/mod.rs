#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use unitform::format::parse_matrix;
use unitform::{Entry, MonomialMatrix, OrderSpec, T0Matrix};

pub const GROUP_ORDERS: [u32; 6] = [1, 2, 3, 4, 6, 8];
pub const ZERO_DENSITIES: [f64; 4] = [0.0, 0.25, 0.5, 1.0];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture(name: &str) -> T0Matrix {
    parse_matrix(&fixture_text(name)).unwrap()
}

pub fn example_order() -> OrderSpec {
    OrderSpec::parse(4, "0 2 1 3").unwrap()
}

fn rows(k: u32, rows: [[Option<u32>; 6]; 6]) -> T0Matrix {
    let refs: Vec<&[Option<u32>]> = rows.iter().map(|r| &r[..]).collect();
    T0Matrix::from_exponents(k, &refs).unwrap()
}

const O: Option<u32> = Some(0);
const I: Option<u32> = Some(1);
const M: Option<u32> = Some(2);
const N: Option<u32> = Some(3);
const Z: Option<u32> = None;

/// The 6×6 counterexample over the 4th roots of unity, typed in directly
/// (1 ↦ 0, i ↦ 1, −1 ↦ 2, −i ↦ 3).
pub fn example_w() -> T0Matrix {
    rows(
        4,
        [
            [O, N, I, O, Z, Z],
            [Z, O, O, Z, I, I],
            [O, Z, Z, M, N, I],
            [O, Z, Z, M, I, N],
            [Z, O, O, Z, N, N],
            [O, I, N, O, Z, Z],
        ],
    )
}

pub fn example_w2() -> T0Matrix {
    rows(
        4,
        [
            [O, O, O, O, Z, Z],
            [Z, I, N, Z, O, O],
            [O, Z, Z, M, M, O],
            [O, Z, Z, M, O, M],
            [Z, I, N, Z, M, M],
            [O, M, M, O, Z, Z],
        ],
    )
}

pub fn example_w4() -> T0Matrix {
    rows(
        4,
        [
            [O, O, O, O, Z, Z],
            [O, M, M, O, Z, Z],
            [O, Z, Z, M, O, M],
            [O, Z, Z, M, M, O],
            [Z, I, N, Z, O, O],
            [Z, I, N, Z, M, M],
        ],
    )
}

pub fn random_matrix<R: Rng>(rng: &mut R, k: u32, m: usize, n: usize, zero_density: f64) -> T0Matrix {
    let entries = (0..m * n)
        .map(|_| {
            if rng.gen_bool(zero_density) {
                Entry::Zero
            } else {
                Entry::Unit(rng.gen_range(0..k))
            }
        })
        .collect();
    T0Matrix::new(k, m, n, entries).unwrap()
}

pub fn random_order<R: Rng>(rng: &mut R, k: u32) -> OrderSpec {
    let mut rest: Vec<u32> = (1..k).collect();
    rest.shuffle(rng);
    let seq: Vec<u32> = std::iter::once(0).chain(rest).collect();
    OrderSpec::from_sequence(k, &seq).unwrap()
}

pub fn random_monomial<R: Rng>(rng: &mut R, k: u32, size: usize) -> MonomialMatrix {
    let mut perm: Vec<usize> = (0..size).collect();
    perm.shuffle(rng);
    let diag = (0..size).map(|_| rng.gen_range(0..k)).collect();
    MonomialMatrix::new(k, perm, diag).unwrap()
}

/// Every matrix of the given shape over `{0} ∪ ⟨ζ_k⟩`.
pub fn all_matrices(k: u32, m: usize, n: usize) -> Vec<T0Matrix> {
    let cells = m * n;
    let total = (k as usize + 1).pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let entries = (0..cells)
                .map(|_| {
                    let d = (code % (k as usize + 1)) as u32;
                    code /= k as usize + 1;
                    if d == k {
                        Entry::Zero
                    } else {
                        Entry::Unit(d)
                    }
                })
                .collect();
            T0Matrix::new(k, m, n, entries).unwrap()
        })
        .collect()
}
