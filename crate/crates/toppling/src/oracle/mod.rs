//! Independent verifiers: Gröbner bases and Schreyer resolutions by the
//! division algorithm, Hochster's formula, and brute-force flag counts.

pub mod brute;
pub mod division;
pub mod hochster;
pub mod schreyer;

use alloc::vec::Vec;

use crate::field::{Field, Scalar};

/// Rank of a dense matrix over `field`, by fraction-free elimination.
pub fn rank(field: Field, mut rows: Vec<Vec<Scalar>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut prev = field.one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv_prev = prev.inv().expect("nonzero pivot");
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                for x in c..ncols {
                    rows[i][x] = &(&rows[i][x] * &rows[r][c]) * &inv_prev;
                }
                continue;
            }
            for x in c + 1..ncols {
                let t = &(&rows[r][c] * &rows[i][x]) - &(&rows[i][c] * &rows[r][x]);
                rows[i][x] = &t * &inv_prev;
            }
            rows[i][c] = field.zero();
        }
        prev = rows[r][c].clone();
        r += 1;
    }
    r
}
