//! Exact linear algebra: kernels, solving, determinants, congruence
//! diagonalization and signatures.

use super::{Matrix, Scalar};
use crate::exact::ExactError;

/// Row-reduces `m` in place to reduced row echelon form and returns the
/// pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = m.at(row, col).inv();
        m.scale_row(row, &inv);
        for r in 0..rows {
            if r != row && !m.at(r, col).is_zero() {
                let f = -m.at(r, col);
                m.row_add(r, row, &f);
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut work = m.clone();
    rref(&mut work).len()
}

/// Basis of the right null space `{v : m v = 0}`, one column vector per
/// free column of the reduced form.
pub fn kernel_basis(m: &Matrix) -> Vec<Matrix> {
    let cols = m.cols();
    let mut work = m.clone();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Scalar::zero(); cols];
            v[fc] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -work.at(r, fc);
            }
            Matrix::column(v)
        })
        .collect()
}

/// One exact solution of `a x = b`, or `None` when the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Option<Matrix> {
    assert_eq!(a.rows(), b.rows());
    assert_eq!(b.cols(), 1);
    let cols = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), cols + 1, |r, c| {
        if c < cols { a.at(r, c).clone() } else { b.at(r, 0).clone() }
    });
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(r, cols).clone();
    }
    Some(Matrix::column(x))
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert!(m.is_square());
    let n = m.rows();
    let mut aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m.at(r, c).clone()
        } else if c - n == r {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Matrix::from_fn(n, n, |r, c| aug.at(r, n + c).clone()))
}

pub fn det(m: &Matrix) -> Scalar {
    assert!(m.is_square());
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a.at(r, col).is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            a.swap_rows(col, p);
            d = -d;
        }
        let pivot = a.at(col, col).clone();
        d = &d * &pivot;
        for r in col + 1..n {
            if !a.at(r, col).is_zero() {
                let f = -&(a.at(r, col) / &pivot);
                a.row_add(r, col, &f);
            }
        }
    }
    d
}

/// Congruence diagonalization of a symmetric (or Hermitian) matrix:
/// returns `(e, d)` with `e^T s e = diag(d)` in the bilinear case and
/// `e^* s e = diag(d)` in the sesquilinear case.
///
/// Pivoting: first nonzero diagonal entry, otherwise a symmetric 2x2
/// completion step manufactures one from an off-diagonal entry.
pub fn congruence_diagonalize(s: &Matrix, hermitian: bool) -> Result<(Matrix, Vec<Scalar>), ExactError> {
    let ok = if hermitian { s.is_hermitian() } else { s.is_symmetric() };
    if !ok {
        return Err(if hermitian { ExactError::NotHermitian } else { ExactError::NotSymmetric });
    }
    let n = s.rows();
    let mirror = |v: &Scalar| if hermitian { v.conj() } else { v.clone() };
    let mut a = s.clone();
    let mut e = Matrix::identity(n);
    for k in 0..n {
        if a.at(k, k).is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a.at(i, i).is_zero()) {
                a.swap_rows(k, i);
                a.swap_cols(k, i);
                e.swap_cols(k, i);
            } else {
                // Zero diagonal block: pull a nonzero off-diagonal entry
                // onto the diagonal via col_i += c*col_j (and the mirrored
                // row operation), which sets a[i,i] = 2*Re(conj(c)*a[i,j]).
                let mut found = None;
                'outer: for i in k..n {
                    for j in k..n {
                        if i != j && !a.at(i, j).is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else { break };
                let c = mirror(a.at(i, j));
                a.col_add(i, j, &c);
                a.row_add(i, j, &mirror(&c));
                debug_assert!(!a.at(i, i).is_zero());
                e.col_add(i, j, &c);
                a.swap_rows(k, i);
                a.swap_cols(k, i);
                e.swap_cols(k, i);
            }
        }
        if a.at(k, k).is_zero() {
            break;
        }
        let pivot = a.at(k, k).clone();
        for i in k + 1..n {
            if a.at(k, i).is_zero() && a.at(i, k).is_zero() {
                continue;
            }
            let c = -&(a.at(k, i) / &pivot);
            a.col_add(i, k, &c);
            a.row_add(i, k, &mirror(&c));
            e.col_add(i, k, &c);
        }
    }
    let diag = (0..n).map(|i| a.at(i, i).clone()).collect();
    Ok((e, diag))
}

/// Inertia `(p, q, z)` of a symmetric rational matrix, by Sylvester's law
/// via exact congruence.
pub fn signature_symmetric(s: &Matrix) -> Result<(usize, usize, usize), ExactError> {
    if !s.is_real() {
        return Err(ExactError::NotSymmetric);
    }
    let (_, diag) = congruence_diagonalize(s, false)?;
    inertia(&diag)
}

/// Inertia of a Hermitian matrix over the Gaussian rationals.
pub fn signature_hermitian(s: &Matrix) -> Result<(usize, usize, usize), ExactError> {
    let (_, diag) = congruence_diagonalize(s, true)?;
    inertia(&diag)
}

fn inertia(diag: &Vec<Scalar>) -> Result<(usize, usize, usize), ExactError> {
    let (mut p, mut q, mut z) = (0, 0, 0);
    for d in diag {
        match d.sign()? {
            1 => p += 1,
            -1 => q += 1,
            _ => z += 1,
        }
    }
    Ok((p, q, z))
}

/// Darboux basis of a nondegenerate skew form: returns `e` with
/// `e^T s e = J`, `J` the block diagonal of `[[0,1],[-1,0]]`.
pub fn darboux_basis(s: &Matrix) -> Result<Matrix, ExactError> {
    if !s.is_skew() || !s.is_real() {
        return Err(ExactError::NotSkew);
    }
    let n = s.rows();
    if n % 2 != 0 {
        return Err(ExactError::Degenerate);
    }
    let pairing = |u: &Matrix, v: &Matrix| -> Scalar {
        (&(&u.transpose() * s) * v).at(0, 0).clone()
    };
    let mut remaining: Vec<Matrix> = (0..n).map(|i| Matrix::identity(n).column_vec(i)).collect();
    let mut basis: Vec<Matrix> = Vec::with_capacity(n);
    while !remaining.is_empty() {
        let mut pair = None;
        'search: for i in 0..remaining.len() {
            for j in i + 1..remaining.len() {
                if !pairing(&remaining[i], &remaining[j]).is_zero() {
                    pair = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((i, j)) = pair else { return Err(ExactError::Degenerate) };
        let u = remaining.remove(i);
        let v = remaining.remove(j - 1);
        let v = v.scale(&pairing(&u, &v).inv());
        let rest: Vec<Matrix> = remaining
            .iter()
            .map(|w| {
                let a = pairing(&u, w);
                let b = pairing(&v, w);
                &(w - &v.scale(&a)) + &u.scale(&b)
            })
            .collect();
        basis.push(u);
        basis.push(v);
        remaining = rest;
    }
    let mut e = Matrix::zeros(n, n);
    for (c, v) in basis.iter().enumerate() {
        for r in 0..n {
            e.set(r, c, v.at(r, 0).clone());
        }
    }
    Ok(e)
}

/// The standard symplectic matrix matched by [`darboux_basis`].
pub fn standard_symplectic(n: usize) -> Matrix {
    assert!(n % 2 == 0);
    let block = Matrix::from_i64(&[&[0, 1], &[-1, 0]]);
    let mut j = block.clone();
    for _ in 1..n / 2 {
        j = j.direct_sum(&block);
    }
    j
}
