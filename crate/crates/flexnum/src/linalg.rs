//! Exact linear algebra over the NSReal field, used for representative
//! matrices. Naive fraction arithmetic makes Gaussian elimination blow up on
//! rational functions, so everything here is fraction-free: determinants are
//! permutation sums, the echelon form is Bareiss-style with exact polynomial
//! divisions, and inverses go through the adjugate. Sizes are desk scale
//! (orders up to the determinant cap), so the factorial terms stay trivial.

use crate::det::permutations;
use crate::error::{Error, Result};
use crate::nsreal::NSReal;
use crate::poly::EpsPoly;

pub type RealMatrix = Vec<Vec<NSReal>>;

pub fn mat_shape(m: &RealMatrix) -> (usize, usize) {
    (m.len(), m.first().map_or(0, |r| r.len()))
}

/// Clear denominators row by row; keeps rank and (up to per-row scaling of
/// coefficients) kernels.
fn cleared(m: &RealMatrix) -> (Vec<Vec<EpsPoly>>, Vec<NSReal>) {
    let mut rows = Vec::with_capacity(m.len());
    let mut scales = Vec::with_capacity(m.len());
    for row in m {
        let mut scale = NSReal::one();
        for x in row {
            if !x.is_polynomial() {
                scale = &scale * &NSReal::from_poly(x.denom().clone());
            }
        }
        let scaled: Vec<EpsPoly> = row
            .iter()
            .map(|x| {
                let v = x * &scale;
                debug_assert!(v.is_polynomial());
                v.numer().clone()
            })
            .collect();
        rows.push(scaled);
        scales.push(scale);
    }
    (rows, scales)
}

fn poly_div_exact(a: &EpsPoly, b: &EpsPoly) -> EpsPoly {
    NSReal::from_parts(a.clone(), b.clone())
        .ok()
        .filter(|q| q.is_polynomial() || q.numer().is_zero())
        .map(|q| q.numer().clone())
        .expect("Bareiss division is exact")
}

/// Fraction-free echelon reduction; returns the pivot columns.
fn bareiss_pivots(mut a: Vec<Vec<EpsPoly>>) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = EpsPoly::one();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = poly_div_exact(&num, &prev);
            }
            a[i][c] = EpsPoly::zero();
        }
        prev = a[r][c].clone();
        pivot_cols.push(c);
        r += 1;
    }
    pivot_cols
}

pub fn rank(m: &RealMatrix) -> usize {
    let (cleared_rows, _) = cleared(m);
    bareiss_pivots(cleared_rows).len()
}

/// Determinant via the signed permutation sum; division-free.
pub fn det(m: &RealMatrix) -> Result<NSReal> {
    let (rows, cols) = mat_shape(m);
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let mut acc = NSReal::zero();
    for (sigma, sign) in permutations(rows) {
        let mut term = NSReal::one();
        for (i, &j) in sigma.iter().enumerate() {
            term = &term * &m[i][j];
        }
        if sign < 0 {
            term = -term;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

fn submatrix(m: &RealMatrix, rows: &[usize], cols: &[usize]) -> RealMatrix {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Inverse through the adjugate; errors on singular input.
pub fn inverse(m: &RealMatrix) -> Result<RealMatrix> {
    let (rows, cols) = mat_shape(m);
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    let n = rows;
    let d = det(m)?;
    if d.is_zero() {
        return Err(Error::Domain("matrix is singular".into()));
    }
    let all: Vec<usize> = (0..n).collect();
    let mut out = vec![vec![NSReal::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let minor = if n == 1 {
                NSReal::one()
            } else {
                let r: Vec<usize> = all.iter().copied().filter(|&x| x != j).collect();
                let c: Vec<usize> = all.iter().copied().filter(|&x| x != i).collect();
                det(&submatrix(m, &r, &c))?
            };
            let cof = if (i + j).is_multiple_of(2) { minor } else { -minor };
            *cell = cof.try_div(&d)?;
        }
    }
    Ok(out)
}

/// Pivot rows and columns of the echelon form, as index sets into `m`.
fn pivot_rows_cols(m: &RealMatrix) -> (Vec<usize>, Vec<usize>) {
    // Work on the transpose-free form but track row swaps: redo the Bareiss
    // sweep remembering which original rows become pivots.
    let (cleared_rows, _) = cleared(m);
    let rows = cleared_rows.len();
    let cols = cleared_rows.first().map_or(0, |r| r.len());
    let mut a = cleared_rows;
    let mut order: Vec<usize> = (0..rows).collect();
    let mut prev = EpsPoly::one();
    let mut pivot_cols = Vec::new();
    let mut pivot_rows = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        order.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = poly_div_exact(&num, &prev);
            }
            a[i][c] = EpsPoly::zero();
        }
        prev = a[r][c].clone();
        pivot_cols.push(c);
        pivot_rows.push(order[r]);
        r += 1;
    }
    (pivot_rows, pivot_cols)
}

/// Basis of { t : t M = 0 }. Free rows get coefficient one; the pivot-row
/// coefficients come from an adjugate solve against the pivot minor.
pub fn left_kernel(m: &RealMatrix) -> Vec<Vec<NSReal>> {
    let (rows, _cols) = mat_shape(m);
    // left kernel of M = kernel of M^T acting on row vectors; work with the
    // transpose so "columns" become the original rows
    let t: RealMatrix = transpose(m);
    let (pivot_rows_t, pivot_cols_t) = pivot_rows_cols(&t);
    // pivot_cols_t are original ROW indices of m that are independent
    let free_rows: Vec<usize> = (0..rows).filter(|r| !pivot_cols_t.contains(r)).collect();
    if free_rows.is_empty() {
        return Vec::new();
    }
    let r = pivot_cols_t.len();
    let mut basis = Vec::with_capacity(free_rows.len());
    let pivot_minor = submatrix(&t, &pivot_rows_t, &pivot_cols_t);
    let inv = inverse(&pivot_minor).expect("pivot minor is nonsingular");
    for &f in &free_rows {
        let mut v = vec![NSReal::zero(); rows];
        v[f] = NSReal::one();
        // solve pivot_minor * x = -t[pivot_rows][f]
        let b: Vec<NSReal> = pivot_rows_t.iter().map(|&i| t[i][f].clone()).collect();
        for (k, &row_index) in pivot_cols_t.iter().enumerate() {
            let mut acc = NSReal::zero();
            for c in 0..r {
                acc = &acc + &(&inv[k][c] * &b[c]);
            }
            v[row_index] = -acc;
        }
        debug_assert!(is_left_kernel_vector(m, &v));
        basis.push(v);
    }
    basis
}

fn is_left_kernel_vector(m: &RealMatrix, t: &[NSReal]) -> bool {
    let (rows, cols) = mat_shape(m);
    (0..cols).all(|j| {
        let mut acc = NSReal::zero();
        for i in 0..rows {
            acc = &acc + &(&t[i] * &m[i][j]);
        }
        acc.is_zero()
    })
}

pub fn transpose(m: &RealMatrix) -> RealMatrix {
    let (rows, cols) = mat_shape(m);
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Solve x A = b for a row vector x given an invertible square A.
pub fn solve_left(a: &RealMatrix, b: &[NSReal]) -> Result<Vec<NSReal>> {
    let inv = inverse(a)?;
    let n = b.len();
    Ok((0..n)
        .map(|j| {
            let mut acc = NSReal::zero();
            for (k, bk) in b.iter().enumerate() {
                acc = &acc + &(bk * &inv[k][j]);
            }
            acc
        })
        .collect())
}

pub fn mat_mul(a: &RealMatrix, b: &RealMatrix) -> RealMatrix {
    let (ar, ac) = mat_shape(a);
    let (_, bc) = mat_shape(b);
    (0..ar)
        .map(|i| {
            (0..bc)
                .map(|j| {
                    let mut acc = NSReal::zero();
                    for k in 0..ac {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Check a k x k minor for nonsingularity without forming fractions.
pub fn minor_nonzero(m: &RealMatrix, rows: &[usize], cols: &[usize]) -> Result<bool> {
    Ok(!det(&submatrix(m, rows, cols))?.is_zero())
}

/// Any selection of independent rows realizing the rank.
pub fn independent_rows(m: &RealMatrix) -> Vec<usize> {
    let t = transpose(m);
    pivot_rows_cols(&t).1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> NSReal {
        NSReal::from_int(n)
    }

    #[test]
    fn rank_and_kernel() {
        let m = vec![vec![r(1), r(2), r(-1)], vec![r(-2), r(-4), r(2)]];
        assert_eq!(rank(&m), 1);
        let k = left_kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(is_left_kernel_vector(&m, &k[0]));
    }

    #[test]
    fn rank_with_eps_perturbation() {
        let m = vec![vec![r(1), r(2)], vec![r(2), r(4) + NSReal::eps()]];
        assert_eq!(rank(&m), 2);
        assert!(left_kernel(&m).is_empty());
    }

    #[test]
    fn kernel_with_fractions() {
        let half = NSReal::from_int(1).try_div(&r(2)).unwrap();
        let m = vec![
            vec![r(1), NSReal::eps(), r(3)],
            vec![&half * &r(2), &half * &NSReal::eps() * r(2), &half * &r(3) * r(2)],
        ];
        assert_eq!(rank(&m), 1);
        let k = left_kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(is_left_kernel_vector(&m, &k[0]));
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![
            vec![r(1), NSReal::eps()],
            vec![r(0), r(1) + NSReal::eps()],
        ];
        let inv = inverse(&m).unwrap();
        let prod = mat_mul(&m, &inv);
        assert_eq!(prod[0][0], r(1));
        assert!(prod[0][1].is_zero());
        assert!(prod[1][0].is_zero());
        assert_eq!(prod[1][1], r(1));
    }

    #[test]
    fn determinant_matches_structure() {
        let m = vec![vec![r(1), r(2)], vec![r(3), r(4)]];
        assert_eq!(det(&m).unwrap(), r(-2));
        let singular = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(det(&singular).unwrap().is_zero());
    }

    #[test]
    fn solve_left_row_system() {
        let a = vec![vec![r(2), r(1)], vec![r(1), r(1)]];
        let b = vec![r(5), r(3)];
        let x = solve_left(&a, &b).unwrap();
        // x A = b
        for j in 0..2 {
            let got = &(&x[0] * &a[0][j]) + &(&x[1] * &a[1][j]);
            assert_eq!(got, b[j]);
        }
    }

    #[test]
    fn rank_of_laurent_matrix() {
        let m = vec![
            vec![NSReal::eps().inv().unwrap(), r(1)],
            vec![r(1), NSReal::eps()],
        ];
        // det = 1 - 1 = 0
        assert_eq!(rank(&m), 1);
        assert_eq!(left_kernel(&m).len(), 1);
    }
}
