//! Exact linear algebra over the rationals: Gaussian elimination for solving
//! square systems and for ranks. Matrices are dense `Vec<Vec<BigRational>>`.

use num::{BigRational, Zero};

/// Row-reduces `m` in place, returning the pivot column of each pivot row.
fn eliminate(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = num::BigRational::from_integer(1.into()) / m[row][col].clone();
        for c in col..cols {
            let v = m[row][c].clone() * inv.clone();
            m[row][c] = v;
        }
        for i in 0..rows {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                for c in col..cols {
                    let v = m[i][c].clone() - factor.clone() * m[row][c].clone();
                    m[i][c] = v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Rank of the matrix.
pub fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    eliminate(&mut m).len()
}

/// Solves the square system `a x = b`. Returns `None` if `a` is singular.
pub fn solve_square(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "matrix must be square");
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = eliminate(&mut m);
    if pivots.len() != n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = m[row][n].clone();
    }
    Some(x)
}

/// Whether `v` lies in the row span of `gens`.
#[cfg_attr(not(test), allow(dead_code))]
pub fn in_span(gens: &[Vec<BigRational>], v: &[BigRational]) -> bool {
    let base = rank(gens.to_vec());
    let mut ext = gens.to_vec();
    ext.push(v.to_vec());
    rank(ext) == base
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn solve_2x2() {
        let a = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let b = vec![q(5, 1), q(10, 1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![q(1, 1), q(3, 1)]);
    }

    #[test]
    fn singular_detected() {
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(solve_square(&a, &[q(1, 1), q(2, 1)]), None);
        assert_eq!(rank(a), 1);
    }

    #[test]
    fn span_membership() {
        let gens = vec![vec![q(1, 1), q(0, 1), q(1, 1)], vec![q(0, 1), q(1, 1), q(1, 1)]];
        assert!(in_span(&gens, &[q(2, 1), q(3, 1), q(5, 1)]));
        assert!(!in_span(&gens, &[q(0, 1), q(0, 1), q(1, 1)]));
    }
}
