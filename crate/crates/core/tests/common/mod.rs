//! Independent reference computations over plain integer arithmetic. Nothing
//! here calls the crate's linear algebra.

#![allow(dead_code)]

use num::{BigInt, Integer, One, Signed, Zero};
use xmodlie::Rational;

/// Rank by fraction-free elimination after clearing denominators.
pub fn oracle_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for row_r in m.iter_mut().skip(rank + 1) {
            if row_r[c].is_zero() {
                continue;
            }
            let f = row_r[c].clone();
            let row: Vec<BigInt> = row_r
                .iter()
                .zip(&pivot)
                .map(|(a, b)| a * &pivot[c] - b * &f)
                .collect();
            let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            *row_r = if g.is_zero() {
                row
            } else {
                row.into_iter().map(|x| x / &g).collect()
            };
        }
        rank += 1;
    }
    rank
}

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// sl2 in the basis (e, h, f), written out by hand.
pub fn sl2_constants() -> Vec<Rational> {
    let mut c = vec![r(0); 27];
    let mut set = |i: usize, j: usize, k: usize, v: i64| {
        c[(i * 3 + j) * 3 + k] = r(v);
        c[(j * 3 + i) * 3 + k] = r(-v);
    };
    set(1, 0, 0, 2);
    set(1, 2, 2, -2);
    set(0, 2, 1, 1);
    c
}

/// Relation rows of `M ⊗ N` from raw tensors: `cm`, `cn` structure
/// constants, `a1[(i*dn+j)*dn+k]` for `e_i · e_j` (M on N) and
/// `a2[(j*dm+i)*dm+k]` for `e_j ∗ e_i` (N on M). Symbol `(i, j)` is
/// coordinate `i*dn + j`.
pub fn naive_relations(
    dm: usize,
    cm: &[Rational],
    dn: usize,
    cn: &[Rational],
    a1: &[Rational],
    a2: &[Rational],
) -> Vec<Vec<Rational>> {
    let mut rows = Vec::new();
    for i in 0..dm {
        for i2 in 0..dm {
            for j in 0..dn {
                let mut row = vec![r(0); dm * dn];
                for k in 0..dm {
                    row[k * dn + j] += cm[(i * dm + i2) * dm + k].clone();
                }
                for k in 0..dn {
                    row[i * dn + k] -= a1[(i2 * dn + j) * dn + k].clone();
                    row[i2 * dn + k] += a1[(i * dn + j) * dn + k].clone();
                }
                rows.push(row);
            }
        }
    }
    for i in 0..dm {
        for j in 0..dn {
            for j2 in 0..dn {
                let mut row = vec![r(0); dm * dn];
                for k in 0..dn {
                    row[i * dn + k] += cn[(j * dn + j2) * dn + k].clone();
                }
                for k in 0..dm {
                    row[k * dn + j] -= a2[(j2 * dm + i) * dm + k].clone();
                    row[k * dn + j2] += a2[(j * dm + i) * dm + k].clone();
                }
                rows.push(row);
            }
        }
    }
    rows
}

/// `dim(L ⊗ L)` with adjoint actions, from raw structure constants.
pub fn oracle_square_dim(d: usize, c: &[Rational]) -> usize {
    let rows = naive_relations(d, c, d, c, c, c);
    d * d - oracle_rank(&rows)
}

/// Rank of a matrix given as row-major entries.
pub fn oracle_matrix_rank(rows: usize, cols: usize, entries: &[Rational]) -> usize {
    let v: Vec<Vec<Rational>> = (0..rows)
        .map(|i| entries[i * cols..(i + 1) * cols].to_vec())
        .collect();
    oracle_rank(&v)
}

pub fn is_zero_entries(v: &[Rational]) -> bool {
    v.iter().all(|x| !x.is_positive() && !x.is_negative())
}
