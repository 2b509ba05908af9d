//! Dense exact linear algebra on small matrices (row-major `Vec<Vec<_>>`).

use crate::error::{Error, Result};
use crate::field::Field;

pub type Matrix<E> = Vec<Vec<E>>;

/// Reduces `m` to row-echelon form in place, pivoting on the first nonzero
/// entry of each column. Returns the pivot columns and the number of row swaps.
fn echelon<F: Field>(field: &F, m: &mut Matrix<F::Elem>) -> (Vec<usize>, usize) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(&m[i][c])) else {
            continue;
        };
        if pr != r {
            m.swap(pr, r);
            swaps += 1;
        }
        let inv = field.inv(&m[r][c]).expect("pivot is nonzero");
        for i in (r + 1)..rows {
            if field.is_zero(&m[i][c]) {
                continue;
            }
            let factor = field.mul(&m[i][c], &inv);
            for j in c..cols {
                let t = field.mul(&factor, &m[r][j]);
                m[i][j] = field.sub(&m[i][j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    echelon(field, &mut work).0.len()
}

pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut work = m.clone();
    let (pivots, swaps) = echelon(field, &mut work);
    if pivots.len() < n {
        return field.zero();
    }
    let diag = (0..n).fold(field.one(), |acc, i| field.mul(&acc, &work[i][i]));
    if swaps % 2 == 1 {
        field.neg(&diag)
    } else {
        diag
    }
}

pub fn multiply<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            debug_assert_eq!(row.len(), inner);
            (0..cols)
                .map(|j| {
                    (0..inner).fold(field.zero(), |acc, k| {
                        field.add(&acc, &field.mul(&row[k], &b[k][j]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse of a square matrix.
pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let n = m.len();
    let mut aug: Matrix<F::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let pr = (c..n)
            .find(|&i| !field.is_zero(&aug[i][c]))
            .ok_or_else(|| Error::domain("matrix is singular"))?;
        aug.swap(pr, c);
        let inv = field.inv(&aug[c][c])?;
        for j in 0..2 * n {
            aug[c][j] = field.mul(&aug[c][j], &inv);
        }
        for i in 0..n {
            if i == c || field.is_zero(&aug[i][c]) {
                continue;
            }
            let factor = aug[i][c].clone();
            for j in 0..2 * n {
                let t = field.mul(&factor, &aug[c][j]);
                aug[i][j] = field.sub(&aug[i][j], &t);
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution of `m · x = rhs`, or `None` if the system is inconsistent.
/// Free variables are set to zero.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, rhs: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Matrix<F::Elem> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let (pivots, _) = echelon(field, &mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![field.zero(); cols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = aug[r][cols].clone();
        for j in (c + 1)..cols {
            acc = field.sub(&acc, &field.mul(&aug[r][j], &x[j]));
        }
        x[c] = field.div(&acc, &aug[r][c]).expect("pivot is nonzero");
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<num_rational::BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Rationals.from_i64(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_determinant() {
        let m = q(&[&[1, 2], &[2, 4], &[0, 0], &[3, 6]]);
        assert_eq!(rank(&Rationals, &m), 1);
        let sq = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(determinant(&Rationals, &sq), Rationals.from_i64(-1));
        let f = Gf::new(7).unwrap();
        let g = vec![vec![2, 0], vec![0, 1]];
        assert_eq!(determinant(&f, &g), 2);
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse(&Rationals, &m).unwrap();
        assert_eq!(
            multiply(&Rationals, &m, &inv),
            q(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
        );
        assert!(inverse(&Rationals, &q(&[&[1, 2], &[2, 4]])).is_err());
    }

    #[test]
    fn solve_consistency() {
        let f = Gf::new(5).unwrap();
        let m = vec![vec![1, 1], vec![1, 4], vec![2, 2]];
        let x = solve(&f, &m, &[2, 0, 4]).unwrap();
        assert_eq!(
            multiply(&f, &m, &x.iter().map(|v| vec![*v]).collect()),
            vec![vec![2], vec![0], vec![4]]
        );
        assert!(solve(&f, &m, &[2, 0, 1]).is_none());
    }
}
