//! Ambient spaces: the standard representation of a classical algebra
//! together with its defining form, and algebra membership.

use crate::algebra::AlgebraDescriptor;
use crate::exact::{self, Matrix, Scalar};
use crate::engine::EngineError;

/// Kind of the defining form of the ambient space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormKind {
    NoForm,
    Symmetric,
    Symplectic,
    Hermitian,
}

/// The standard representation of a matrix-level family (`sl(n,R)`,
/// `so(p,q,R)`, `sp(2n,R)`, `su(p,q)`), carrying the defining form when
/// there is one.
#[derive(Debug, Clone)]
pub struct AmbientSpace {
    alg: AlgebraDescriptor,
    kind: FormKind,
    form: Option<Matrix>,
    form_inv: Option<Matrix>,
}

impl AmbientSpace {
    /// Ambient space with the standard diagonal (or standard symplectic)
    /// form of the family.
    pub fn standard(alg: AlgebraDescriptor) -> Result<Self, EngineError> {
        use AlgebraDescriptor::*;
        alg.validate()?;
        let form = match alg {
            SlR { .. } => None,
            SoR { p, q } | Su { p, q } => {
                let entries: Vec<Scalar> = (0..p + q)
                    .map(|i| Scalar::from_int(if i < p { 1 } else { -1 }))
                    .collect();
                Some(Matrix::diag(&entries))
            }
            SpR { n } => Some(exact::standard_symplectic(2 * n as usize)),
            _ => return Err(EngineError::UnsupportedFamily(alg.family_name().to_string())),
        };
        Self::new(alg, form)
    }

    /// Ambient space over a caller-supplied form matrix. The form must be
    /// nondegenerate, of the kind the family demands, and for `so(p,q)` and
    /// `su(p,q)` its signature must be `(p, q)`.
    pub fn new(alg: AlgebraDescriptor, form: Option<Matrix>) -> Result<Self, EngineError> {
        use AlgebraDescriptor::*;
        alg.validate()?;
        let kind = match alg {
            SlR { .. } => FormKind::NoForm,
            SoR { .. } => FormKind::Symmetric,
            SpR { .. } => FormKind::Symplectic,
            Su { .. } => FormKind::Hermitian,
            _ => return Err(EngineError::UnsupportedFamily(alg.family_name().to_string())),
        };
        let dim = Self::expected_dimension(&alg);
        let (form, form_inv) = match (kind, form) {
            (FormKind::NoForm, None) => (None, None),
            (FormKind::NoForm, Some(_)) => {
                return Err(EngineError::BadForm("sl(n,R) carries no form".to_string()))
            }
            (_, None) => return Err(EngineError::BadForm("missing form matrix".to_string())),
            (k, Some(b)) => {
                if b.rows() != dim || b.cols() != dim {
                    return Err(EngineError::SizeMismatch {
                        expected: dim,
                        got: (b.rows(), b.cols()),
                    });
                }
                let shape_ok = match k {
                    FormKind::Symmetric => b.is_real() && b.is_symmetric(),
                    FormKind::Symplectic => b.is_real() && b.is_skew(),
                    FormKind::Hermitian => b.is_hermitian(),
                    FormKind::NoForm => unreachable!(),
                };
                if !shape_ok {
                    return Err(EngineError::BadForm(format!(
                        "form has the wrong symmetry for {alg}"
                    )));
                }
                let inv = exact::inverse(&b)
                    .ok_or_else(|| EngineError::BadForm("form is degenerate".to_string()))?;
                match alg {
                    SoR { p, q } => {
                        let sig = exact::signature_symmetric(&b)?;
                        if sig != (p as usize, q as usize, 0) {
                            return Err(EngineError::BadForm(format!(
                                "form signature {sig:?} does not match ({p},{q})"
                            )));
                        }
                    }
                    Su { p, q } => {
                        let sig = exact::signature_hermitian(&b)?;
                        if sig != (p as usize, q as usize, 0) {
                            return Err(EngineError::BadForm(format!(
                                "form signature {sig:?} does not match ({p},{q})"
                            )));
                        }
                    }
                    _ => {}
                }
                (Some(b), Some(inv))
            }
        };
        Ok(AmbientSpace { alg, kind, form, form_inv })
    }

    fn expected_dimension(alg: &AlgebraDescriptor) -> usize {
        use AlgebraDescriptor::*;
        match *alg {
            SlR { n } => n as usize,
            SoR { p, q } | Su { p, q } => (p + q) as usize,
            SpR { n } => 2 * n as usize,
            _ => 0,
        }
    }

    pub fn alg(&self) -> &AlgebraDescriptor {
        &self.alg
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }

    pub fn dimension(&self) -> usize {
        Self::expected_dimension(&self.alg)
    }

    pub fn is_sesquilinear(&self) -> bool {
        self.kind == FormKind::Hermitian
    }

    /// `B(u, v)`: transpose-based for bilinear forms, conjugate-transpose
    /// on the left for the Hermitian case.
    pub fn form_value(&self, u: &Matrix, v: &Matrix) -> Scalar {
        let b = self.form.as_ref().expect("form_value on sl(n,R)");
        let left = if self.is_sesquilinear() { u.conj_transpose() } else { u.transpose() };
        (&(&left * b) * v).at(0, 0).clone()
    }

    /// The involution `theta(z) = -B^{-1} z^T B` (conjugate-transpose
    /// variant for the Hermitian case) whose fixed points are the algebra.
    pub fn involution(&self, z: &Matrix) -> Matrix {
        let b = self.form.as_ref().expect("involution on sl(n,R)");
        let b_inv = self.form_inv.as_ref().unwrap();
        let zt = if self.is_sesquilinear() { z.conj_transpose() } else { z.transpose() };
        -&(&(b_inv * &zt) * b)
    }

    /// Projection of an arbitrary matrix onto the algebra, `(z + theta z)/2`.
    pub fn project(&self, z: &Matrix) -> Matrix {
        (z + &self.involution(z)).scale(&Scalar::ratio(1, 2))
    }

    /// Form-compatibility plus the trace condition where the family has one.
    pub fn is_member(&self, z: &Matrix) -> Result<bool, EngineError> {
        let n = self.dimension();
        if z.rows() != n || z.cols() != n {
            return Err(EngineError::SizeMismatch { expected: n, got: (z.rows(), z.cols()) });
        }
        use AlgebraDescriptor::*;
        Ok(match self.alg {
            SlR { .. } => z.is_real() && z.trace().is_zero(),
            SoR { .. } | SpR { .. } => {
                let b = self.form.as_ref().unwrap();
                z.is_real() && (&(&z.transpose() * b) + &(b * z)).is_zero()
            }
            Su { .. } => {
                let b = self.form.as_ref().unwrap();
                z.trace().is_zero() && (&(&z.conj_transpose() * b) + &(b * z)).is_zero()
            }
            _ => unreachable!(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraDescriptor::*;

    #[test]
    fn sl2_membership() {
        let amb = AmbientSpace::standard(SlR { n: 2 }).unwrap();
        assert!(amb.is_member(&Matrix::from_i64(&[&[0, 1], &[0, 0]])).unwrap());
        assert!(!amb.is_member(&Matrix::identity(2)).unwrap());
        assert!(amb.is_member(&Matrix::from_i64(&[&[0, 1], &[0, 0], &[0, 0]])).is_err());
    }

    #[test]
    fn so21_identity_is_not_a_member() {
        let amb = AmbientSpace::standard(SoR { p: 2, q: 1 }).unwrap();
        assert!(!amb.is_member(&Matrix::identity(3)).unwrap());
    }

    #[test]
    fn projection_lands_in_the_algebra() {
        let amb = AmbientSpace::standard(SoR { p: 2, q: 2 }).unwrap();
        let z = Matrix::from_i64(&[&[1, 2, 0, -1], &[3, 0, 1, 1], &[0, 5, -2, 0], &[1, 1, 1, 1]]);
        let p = amb.project(&z);
        assert!(amb.is_member(&p).unwrap());
        // Projecting twice changes nothing.
        assert_eq!(amb.project(&p), p);
    }

    #[test]
    fn su_membership_needs_zero_trace() {
        let amb = AmbientSpace::standard(Su { p: 1, q: 1 }).unwrap();
        let z = Matrix::from_rows(vec![
            vec![Scalar::i(), Scalar::zero()],
            vec![Scalar::zero(), -Scalar::i()],
        ]);
        assert!(amb.is_member(&z).unwrap());
        let u_not_su = Matrix::diag(&[Scalar::i(), Scalar::i()]);
        assert!(!amb.is_member(&u_not_su).unwrap());
    }

    #[test]
    fn wrong_signature_form_is_rejected() {
        let bad = Matrix::diag(&[
            Scalar::from_int(1),
            Scalar::from_int(1),
            Scalar::from_int(1),
        ]);
        assert!(AmbientSpace::new(SoR { p: 2, q: 1 }, Some(bad)).is_err());
    }
}
