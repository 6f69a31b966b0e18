//! Standard triples and their completion from a nilpotent element.

use num::rational::BigRational;
use num::Zero;

use crate::engine::ambient::{AmbientSpace, FormKind};
use crate::engine::jordan;
use crate::engine::EngineError;
use crate::exact::{self, Matrix, Scalar};

/// An exact standard triple `(x, y, h)` inside the ambient algebra:
/// `[h,x] = 2x`, `[h,y] = -2y`, `[x,y] = h`, all three form-compatible,
/// `h` diagonalizable with integer eigenvalues.
#[derive(Debug, Clone)]
pub struct StandardTriple {
    pub x: Matrix,
    pub y: Matrix,
    pub h: Matrix,
    pub ambient: AmbientSpace,
}

impl StandardTriple {
    pub fn new(
        x: Matrix,
        y: Matrix,
        h: Matrix,
        ambient: AmbientSpace,
    ) -> Result<Self, EngineError> {
        let t = StandardTriple { x, y, h, ambient };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        let two = Scalar::from_int(2);
        if self.h.commutator(&self.x) != self.x.scale(&two) {
            return Err(EngineError::InvalidTriple("[h,x] != 2x".to_string()));
        }
        if self.h.commutator(&self.y) != self.y.scale(&-&two) {
            return Err(EngineError::InvalidTriple("[h,y] != -2y".to_string()));
        }
        if self.x.commutator(&self.y) != self.h {
            return Err(EngineError::InvalidTriple("[x,y] != h".to_string()));
        }
        for (name, z) in [("x", &self.x), ("y", &self.y), ("h", &self.h)] {
            if !self.ambient.is_member(z)? {
                return Err(EngineError::InvalidTriple(format!("{name} is not in the algebra")));
            }
        }
        // Integer diagonalizability of h: the integer weight spaces must
        // fill the ambient space.
        let n = self.ambient.dimension();
        let mut total = 0;
        for k in -(n as i64)..=(n as i64) {
            let shifted = &self.h - &Matrix::identity(n).scale(&Scalar::from_int(k));
            total += exact::kernel_basis(&shifted).len();
        }
        if total != n {
            return Err(EngineError::InvalidTriple(
                "h is not diagonalizable with integer eigenvalues".to_string(),
            ));
        }
        Ok(())
    }

    /// The triple `(-x, -y, h)`, attached to the opposite nilpotent.
    pub fn negated(&self) -> StandardTriple {
        StandardTriple {
            x: -&self.x,
            y: -&self.y,
            h: self.h.clone(),
            ambient: self.ambient.clone(),
        }
    }
}

/// Real coordinates of a matrix: all entries' real parts, then (for the
/// sesquilinear case) all imaginary parts.
fn real_coords(m: &Matrix, complex: bool) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = m.entries().map(|s| s.re()).collect();
    if complex {
        out.extend(m.entries().map(|s| s.im()));
    }
    out
}

fn from_real_coords(coords: &Matrix, n: usize, complex: bool) -> Matrix {
    Matrix::from_fn(n, n, |r, c| {
        let re = coords.at(r * n + c, 0).re();
        let im = if complex { coords.at(n * n + r * n + c, 0).re() } else { BigRational::zero() };
        Scalar::gaussian(re, im)
    })
}

/// Solves the simultaneous R-linear matrix equations `op_i(y) = rhs_i` for
/// an `n x n` unknown, treating real and imaginary parts as independent
/// rational coordinates.
fn solve_matrix_equations(
    n: usize,
    complex: bool,
    ops: &[&dyn Fn(&Matrix) -> Matrix],
    rhs: &[&Matrix],
) -> Option<Matrix> {
    assert_eq!(ops.len(), rhs.len());
    let unknowns = n * n * if complex { 2 } else { 1 };
    let mut unit_images: Vec<Vec<BigRational>> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let mut unit = Matrix::zeros(n, n);
        let (entry, imag) = (u % (n * n), u >= n * n);
        let v = if imag { Scalar::i() } else { Scalar::one() };
        unit.set(entry / n, entry % n, v);
        let mut col = Vec::new();
        for op in ops {
            col.extend(real_coords(&op(&unit), complex));
        }
        unit_images.push(col);
    }
    let rows = unit_images[0].len();
    let a = Matrix::from_fn(rows, unknowns, |r, c| {
        Scalar::from_rational(unit_images[c][r].clone())
    });
    let mut b = Vec::new();
    for m in rhs {
        b.extend(real_coords(m, complex));
    }
    let b = Matrix::column(b.into_iter().map(Scalar::from_rational).collect());
    let sol = exact::solve_linear(&a, &b)?;
    Some(from_real_coords(&sol, n, complex))
}

/// Jacobson-Morozov completion: extends a nonzero nilpotent `x` of the
/// algebra to a standard triple.
///
/// Route: a gl-level triple from a Jordan chain basis of `x`; the neutral
/// element is projected into the algebra by the form involution, which
/// preserves `[h, x] = 2x`; the opposite nilpotent is then the exact
/// solution of the linear system `y in g`, `[h,y] = -2y`, `[x,y] = h`.
pub fn complete_standard_triple(
    x: &Matrix,
    ambient: &AmbientSpace,
) -> Result<StandardTriple, EngineError> {
    complete_standard_triple_seeded(x, ambient, None)
}

/// Same as [`complete_standard_triple`], with a seed that varies the
/// Jordan-chain choices; any seed yields a valid triple for the same `x`.
pub fn complete_standard_triple_seeded(
    x: &Matrix,
    ambient: &AmbientSpace,
    seed: Option<u64>,
) -> Result<StandardTriple, EngineError> {
    let n = ambient.dimension();
    if x.rows() != n || x.cols() != n {
        return Err(EngineError::SizeMismatch { expected: n, got: (x.rows(), x.cols()) });
    }
    if x.is_zero() {
        return Err(EngineError::ZeroElement);
    }
    if !ambient.is_member(x)? {
        return Err(EngineError::NotInAlgebra);
    }
    let (y0, h0) = jordan::gl_triple(x, seed)?;
    if ambient.kind() == FormKind::NoForm {
        return StandardTriple::new(x.clone(), y0, h0, ambient.clone());
    }
    let h = (&h0 + &ambient.involution(&h0)).scale(&Scalar::ratio(1, 2));
    debug_assert_eq!(h.commutator(x), x.scale(&Scalar::from_int(2)));
    let complex = ambient.is_sesquilinear();
    let zero = Matrix::zeros(n, n);
    let two = Scalar::from_int(2);
    let membership = |y: &Matrix| &ambient.involution(y) - y;
    let weight = |y: &Matrix| &h.commutator(y) + &y.scale(&two);
    let bracket = |y: &Matrix| x.commutator(y);
    let y = solve_matrix_equations(
        n,
        complex,
        &[&membership, &weight, &bracket],
        &[&zero, &zero, &h],
    )
    .ok_or_else(|| {
        EngineError::Internal("the opposite-nilpotent system has no solution".to_string())
    })?;
    StandardTriple::new(x.clone(), y, h, ambient.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor::*;

    #[test]
    fn sl2_canonical_completion() {
        let amb = AmbientSpace::standard(SlR { n: 2 }).unwrap();
        let x = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let t = complete_standard_triple(&x, &amb).unwrap();
        assert_eq!(t.h, Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(t.y, Matrix::from_i64(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn sl3_jordan_block_completion() {
        let amb = AmbientSpace::standard(SlR { n: 3 }).unwrap();
        let x = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let t = complete_standard_triple(&x, &amb).unwrap();
        assert_eq!(t.h, Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert_eq!(t.y, Matrix::from_i64(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0]]));
    }

    #[test]
    fn rejects_zero_and_non_members() {
        let amb = AmbientSpace::standard(SlR { n: 2 }).unwrap();
        assert!(matches!(
            complete_standard_triple(&Matrix::zeros(2, 2), &amb),
            Err(EngineError::ZeroElement)
        ));
        let not_traceless = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        assert!(matches!(
            complete_standard_triple(&not_traceless, &amb),
            Err(EngineError::NotInAlgebra)
        ));
        let not_nilpotent = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        assert!(matches!(
            complete_standard_triple(&not_nilpotent, &amb),
            Err(EngineError::NotNilpotent)
        ));
    }

    #[test]
    fn so21_completion_stays_in_the_algebra() {
        let amb = AmbientSpace::standard(SoR { p: 2, q: 1 }).unwrap();
        // Nilpotent element of so(2,1) w.r.t. diag(1,1,-1).
        let x = Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 1], &[0, 1, 0]]);
        let t = complete_standard_triple(&x, &amb).unwrap();
        t.validate().unwrap();
    }

    #[test]
    fn su11_completion() {
        let amb = AmbientSpace::standard(Su { p: 1, q: 1 }).unwrap();
        // x nilpotent in su(1,1): x = [[i, 1], [1, -i]] satisfies x^2 = 0.
        let i = Scalar::i();
        let one = Scalar::one();
        let x = Matrix::from_rows(vec![vec![i.clone(), one.clone()], vec![one, -&i]]);
        assert!((&x * &x).is_zero());
        let t = complete_standard_triple(&x, &amb).unwrap();
        t.validate().unwrap();
        let neg = t.negated();
        neg.validate().unwrap();
    }

    #[test]
    fn seeded_completions_are_valid() {
        let amb = AmbientSpace::standard(SpR { n: 2 }).unwrap();
        // Two chains of length 2 inside sp(4,R) with the standard form.
        let b = amb.form().unwrap().clone();
        let raw = Matrix::from_i64(&[
            &[0, 0, 1, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ]);
        // Symmetrize into the algebra, then check it is nonzero nilpotent.
        let amb2 = AmbientSpace::new(SpR { n: 2 }, Some(b)).unwrap();
        let x = amb2.project(&raw);
        assert!(!x.is_zero());
        for seed in [None, Some(1), Some(2), Some(42)] {
            let t = complete_standard_triple_seeded(&x, &amb2, seed).unwrap();
            t.validate().unwrap();
            assert_eq!(t.x, x);
        }
    }
}
