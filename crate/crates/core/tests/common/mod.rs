#![allow(dead_code)]

use std::sync::OnceLock;

use lines27::linalg::{to_i64, QMatrix};
use lines27::Model;
use num_bigint::BigInt;
use num_traits::Zero;

pub fn model() -> &'static Model {
    static MODEL: OnceLock<Model> = OnceLock::new();
    MODEL.get_or_init(|| Model::build().expect("model builds"))
}

/// Rank by fraction-free (Bareiss) elimination over the integers, scanning
/// columns right to left. Shares nothing with the rational Gauss-Jordan path.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().rev().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..n_rows {
            for j in c + 1..n_cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

pub fn int_rows(m: &QMatrix) -> Vec<Vec<i64>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| to_i64(&m[(i, j)]).expect("integer matrix")).collect())
        .collect()
}

pub fn unit(i: usize) -> Vec<i64> {
    let mut v = vec![0; 27];
    v[i] = 1;
    v
}
