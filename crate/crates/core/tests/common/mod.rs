//! Oracles shared by the integration tests. Nothing here calls the engine's
//! linear algebra: each oracle recomputes its answer from raw data.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hopf_galois::exactlin::Scalar;
use hopf_galois::hopf::HopfAlgebra;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Fraction-free (Bareiss) rank of an integer matrix, pivoting on the
/// largest-magnitude entry of the last remaining column first.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    let mut cols: Vec<usize> = (0..ncols).rev().collect();
    while rank < nrows {
        let Some((ci, pr)) = cols.iter().enumerate().find_map(|(ci, &c)| {
            (rank..nrows)
                .filter(|&r| !m[r][c].is_zero())
                .max_by_key(|&r| m[r][c].abs())
                .map(|r| (ci, r))
        }) else {
            break;
        };
        let c = cols.remove(ci);
        m.swap(rank, pr);
        for r in rank + 1..nrows {
            for k in 0..ncols {
                if k == c {
                    continue;
                }
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// `Σ S(h₍₁₎) ⊗ h₍₂₎` for every basis element `h`, straight from the entry lists.
pub fn antipode_oracle(h: &HopfAlgebra) -> Vec<Vec<Scalar>> {
    let data = h.to_data();
    let n = data.labels.len();
    let mut s_of: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (i, j, s) in &data.antipode {
        s_of.entry(*i).or_default().push((*j, s.clone()));
    }
    let mut out = vec![vec![Scalar::zero(); n * n]; n];
    for (i, j, k, c) in &data.comult {
        for (l, s) in s_of.get(j).into_iter().flatten() {
            out[*i][l * n + k] += &(c * s);
        }
    }
    out
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, range: i64) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-range..=range)).collect())
        .collect()
}

pub fn int_product(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}
