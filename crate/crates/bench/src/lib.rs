//! Deterministic inputs for the benchmarks.

use spechtkit::{Matrix, Partition, PrimeField};

pub fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("benchmark primes are prime")
}

pub fn partition(s: &str) -> Partition {
    s.parse().expect("benchmark partitions parse")
}

/// A dense `rows × cols` matrix with rank deficiency built in: every third
/// row is the sum of the two before it.
pub fn structured_matrix(f: PrimeField, rows: usize, cols: usize) -> Matrix {
    let p = f.modulus() as u64;
    let mut m = Matrix::zeros(f, rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let x = if i % 3 == 2 {
                (m.get(i - 1, j) as u64 + m.get(i - 2, j) as u64) % p
            } else {
                ((i as u64 + 1) * (j as u64 * j as u64 + 7) + 3 * i as u64) % p
            };
            m.set(i, j, x as u32);
        }
    }
    m
}

/// `(λ, n)` pairs for Specht construction, small to moderate.
pub const SPECHT_CASES: &[(&str, usize)] = &[("3,2", 2), ("4,3", 2), ("3,2,1", 3), ("4,2,2", 3)];
