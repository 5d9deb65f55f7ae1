//! Small exact linear algebra over Q and Z.

use crate::arith::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// One solution of A x = b, or None if inconsistent. Free variables are set to 0.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let pivots = rref(&mut aug, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Echelon basis of the Z-span of integer rows (Hermite form, pivots positive,
/// entries above each pivot reduced).
pub fn hermite_basis(mut rows: Vec<Vec<BigInt>>, ncols: usize) -> Vec<(usize, Vec<BigInt>)> {
    let mut out: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for col in 0..ncols {
        loop {
            let mut live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by(|&i, &j| rows[i][col].abs().cmp(&rows[j][col].abs()));
            let small = live[0];
            let pivot = rows[small].clone();
            for &i in &live[1..] {
                let q = rows[i][col].div_floor(&pivot[col]);
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &q * y;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            let mut row = rows.swap_remove(i);
            if row[col].is_negative() {
                row.iter_mut().for_each(|x| *x = -x.clone());
            }
            for (_, prev) in out.iter_mut() {
                let q = prev[col].div_floor(&row[col]);
                if !q.is_zero() {
                    for (x, y) in prev.iter_mut().zip(&row) {
                        *x -= &q * y;
                    }
                }
            }
            out.push((col, row));
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    out
}

/// Integer coordinates of `target` in an echelon basis, if it lies in the lattice.
pub fn lattice_coordinates(basis: &[(usize, Vec<BigInt>)], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut t = target.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for (col, row) in basis {
        let (q, r) = t[*col].div_rem(&row[*col]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in t.iter_mut().zip(row) {
            *x -= &q * y;
        }
        coords.push(q);
    }
    t.iter().all(|x| x.is_zero()).then_some(coords)
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}
