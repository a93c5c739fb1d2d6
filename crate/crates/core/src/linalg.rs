//! Dense exact linear algebra over the rationals, sized for the small
//! matrices that show up in cone computations (dimension <= a few dozen).

// Elimination kernels index two rows of the same matrix at once (read the
// pivot row, write another); iterator forms would need a row clone per step.
#![allow(clippy::needless_range_loop)]

use num::rational::BigRational;
use num::{One, Zero};

/// Row rank via fraction-exact Gaussian elimination on a copy.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..height).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..height {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for j in c..width {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == height {
            break;
        }
    }
    r
}

/// Basis of { x : A x = 0 } for the matrix with the given rows, as rows.
pub fn nullspace(rows: &[Vec<BigRational>], width: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .inspect(|r| assert_eq!(r.len(), width))
        .cloned()
        .collect();
    let height = m.len();
    // reduced row echelon form, tracking the pivot column of each row
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..height).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in 0..width {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..height {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..width {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == height {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..width {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![BigRational::zero(); width];
        v[free] = BigRational::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix (rows), or None when singular.
pub fn invert(rows: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n);
            r.clone()
        })
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row = vec![BigRational::zero(); n];
            row[i] = BigRational::one();
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        inv.swap(c, p);
        let scale = m[c][c].clone();
        for j in 0..n {
            m[c][j] = &m[c][j] / &scale;
            inv[c][j] = &inv[c][j] / &scale;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let dm = &f * &m[c][j];
                    m[i][j] -= dm;
                    let di = &f * &inv[c][j];
                    inv[i][j] -= di;
                }
            }
        }
    }
    Some(inv)
}

/// Determinant of a square matrix (rows) by exact elimination.
pub fn det(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let mut result = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(c, p);
            result = -result;
        }
        result *= m[c][c].clone();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let delta = &f * &m[c][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    result
}

pub fn mat_vec(rows: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    rows.iter()
        .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Componentwise floor, for locating a point inside a half-open
/// fundamental parallelepiped.
pub fn floor_vec(v: &[BigRational]) -> Vec<BigRational> {
    v.iter().map(BigRational::floor).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
    }

    #[test]
    fn nullspace_annihilates_and_spans() {
        let rows = mat(&[&[1, 1, 1], &[0, 1, 2]]);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(dot(r, &ns[0]).is_zero());
        }
        // the kernel is spanned by (1, -2, 1)
        let v = &ns[0];
        assert_eq!(&v[1] / &v[0], q(-2));
        assert_eq!(&v[2] / &v[0], q(1));
    }

    #[test]
    fn nullspace_of_full_rank_matrix_is_trivial() {
        assert!(nullspace(&mat(&[&[1, 0], &[0, 1]]), 2).is_empty());
    }

    #[test]
    fn invert_round_trips() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let inv = invert(&m).unwrap();
        let prod: Vec<Vec<BigRational>> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| (0..2).map(|k| &inv[i][k] * &m[k][j]).sum())
                    .collect()
            })
            .collect();
        assert_eq!(prod, mat(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn invert_singular_is_none() {
        assert!(invert(&mat(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det(&mat(&[&[1, 2], &[3, 4]])), q(-2));
        assert_eq!(det(&mat(&[&[1, 2], &[2, 4]])), q(0));
        assert_eq!(det(&mat(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])), q(30));
    }

    #[test]
    fn floor_vec_rounds_toward_minus_infinity() {
        let v = vec![
            BigRational::new(BigInt::from(3), BigInt::from(2)),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
        ];
        assert_eq!(floor_vec(&v), vec![q(1), q(-1)]);
    }
}
