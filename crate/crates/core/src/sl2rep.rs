//! Concrete models of the irreducible sl(2,R)-modules with their fixed
//! invariant forms, the negation intertwiners, tensor-form calculus and the
//! connected-component homomorphisms sigma/tau of the indefinite orthogonal
//! groups.
//!
//! Basis convention for the irreducible module of highest weight `r`
//! (dimension `r + 1`): `H e_i = (r - 2i) e_i`, `Y e_i = e_{i+1}` with
//! `e_{r+1} = 0`, and `X e_i = i (r - i + 1) e_{i-1}`. The unnormalized
//! lowering action keeps every matrix entry integral.

use crate::exact::{self, Matrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Sl2Error {
    #[error("unimodular intertwiner requested for odd weight r={0}")]
    UnimodularOddWeight(u32),
    #[error("tensor factor must be nonzero")]
    ZeroForm,
    #[error("left tensor factor must be a real bilinear form")]
    LeftFactorNotBilinear,
    #[error("matrix does not preserve the form")]
    NotAnIsometry,
    #[error("form must be nondegenerate symmetric over the rationals")]
    BadForm,
    #[error("empty direct sum")]
    EmptySum,
    #[error("weight parity mismatch: {0}")]
    ParityMismatch(String),
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
}

/// The irreducible module of highest weight `r`, as explicit matrices.
#[derive(Debug, Clone)]
pub struct IrreducibleModel {
    pub r: u32,
    pub mat_x: Matrix,
    pub mat_y: Matrix,
    pub mat_h: Matrix,
}

/// Builds the irreducible model; all triple relations hold exactly.
pub fn build_irreducible(r: u32) -> IrreducibleModel {
    let n = (r + 1) as usize;
    let mut x = Matrix::zeros(n, n);
    let mut y = Matrix::zeros(n, n);
    let mut h = Matrix::zeros(n, n);
    for i in 0..n {
        h.set(i, i, Scalar::from_int(r as i64 - 2 * i as i64));
        if i + 1 < n {
            y.set(i + 1, i, Scalar::one());
        }
        if i > 0 {
            let c = (i as i64) * (r as i64 - i as i64 + 1);
            x.set(i - 1, i, Scalar::from_int(c));
        }
    }
    IrreducibleModel { r, mat_x: x, mat_y: y, mat_h: h }
}

/// The fixed invariant form `B_r` on the irreducible of highest weight `r`:
/// antidiagonal with `B[i, r-i] = (-1)^i b0`, where `b0 = (-1)^m` for
/// `r = 2m` and `b0 = (-1)^(m+1)` for `r = 2m + 1`.
///
/// The sign choices pin the two conventions: for even `r` the weight-zero
/// line is positive and the signature is `(m+1, m)`; for odd `r` the form
/// satisfies `B(v, X v) >= 0` on the weight `-1` line.
#[derive(Debug, Clone)]
pub struct InvariantFormModel {
    pub r: u32,
    pub mat_b: Matrix,
}

pub fn build_invariant_form(r: u32) -> InvariantFormModel {
    let n = (r + 1) as usize;
    let m = r / 2;
    let b0: i64 = if r % 2 == 0 {
        if m % 2 == 0 { 1 } else { -1 }
    } else if (m + 1) % 2 == 0 {
        1
    } else {
        -1
    };
    let mut b = Matrix::zeros(n, n);
    for i in 0..n {
        let v = if i % 2 == 0 { b0 } else { -b0 };
        b.set(i, n - 1 - i, Scalar::from_int(v));
    }
    InvariantFormModel { r, mat_b: b }
}

/// The intertwiner `u_r = diag((-1)^i)` conjugating `(X, Y, H)` to
/// `(-X, -Y, H)`, with `u_r^* B_r = (-1)^r B_r`. With `unimodular` set
/// (even `r` only) returns the determinant-one variant
/// `(-1)^(r/2) u_r`.
pub fn build_negation_intertwiner(r: u32, unimodular: bool) -> Result<Matrix, Sl2Error> {
    if unimodular && r % 2 != 0 {
        return Err(Sl2Error::UnimodularOddWeight(r));
    }
    let n = (r + 1) as usize;
    let global = if unimodular && (r / 2) % 2 == 1 { -1 } else { 1 };
    let entries: Vec<Scalar> = (0..n)
        .map(|i| Scalar::from_int(if i % 2 == 0 { global } else { -global }))
        .collect();
    Ok(Matrix::diag(&entries))
}

/// Symmetry kind of a bilinear or sesquilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    Symmetric,
    Skew,
    Hermitian,
    SkewHermitian,
}

impl SymmetryKind {
    pub fn is_bilinear(&self) -> bool {
        matches!(self, SymmetryKind::Symmetric | SymmetryKind::Skew)
    }

    /// Detects the kind of a matrix, preferring the bilinear reading for
    /// real matrices.
    pub fn of(m: &Matrix) -> Option<SymmetryKind> {
        if m.is_real() {
            if m.is_symmetric() {
                return Some(SymmetryKind::Symmetric);
            }
            if m.is_skew() {
                return Some(SymmetryKind::Skew);
            }
        }
        if m.is_hermitian() {
            return Some(SymmetryKind::Hermitian);
        }
        if m.is_skew_hermitian() {
            return Some(SymmetryKind::SkewHermitian);
        }
        None
    }
}

/// A form matrix together with its declared symmetry kind.
#[derive(Debug, Clone)]
pub struct TypedForm {
    pub kind: SymmetryKind,
    pub mat: Matrix,
}

impl TypedForm {
    pub fn new(kind: SymmetryKind, mat: Matrix) -> Self {
        TypedForm { kind, mat }
    }
}

/// Tensor (Kronecker) product of forms with the induced symmetry kind.
///
/// The left factor must be real bilinear; the right factor may be bilinear
/// or sesquilinear. Kinds combine by the parity of the "skew" flags:
/// skew x skew is symmetric, skew x skew-Hermitian is Hermitian, and so on.
pub fn tensor_form(b1: &TypedForm, b2: &TypedForm) -> Result<TypedForm, Sl2Error> {
    if b1.mat.is_zero() || b2.mat.is_zero() {
        return Err(Sl2Error::ZeroForm);
    }
    if !b1.kind.is_bilinear() || !b1.mat.is_real() {
        return Err(Sl2Error::LeftFactorNotBilinear);
    }
    let left_skew = b1.kind == SymmetryKind::Skew;
    let kind = match b2.kind {
        SymmetryKind::Symmetric => {
            if left_skew {
                SymmetryKind::Skew
            } else {
                SymmetryKind::Symmetric
            }
        }
        SymmetryKind::Skew => {
            if left_skew {
                SymmetryKind::Symmetric
            } else {
                SymmetryKind::Skew
            }
        }
        SymmetryKind::Hermitian => {
            if left_skew {
                SymmetryKind::SkewHermitian
            } else {
                SymmetryKind::Hermitian
            }
        }
        SymmetryKind::SkewHermitian => {
            if left_skew {
                SymmetryKind::Hermitian
            } else {
                SymmetryKind::SkewHermitian
            }
        }
    };
    Ok(TypedForm::new(kind, b1.mat.kron(&b2.mat)))
}

/// Connected-component invariants of an isometry `g` of a nondegenerate
/// symmetric rational form: `sigma = -1` iff `g` reverses the orientation
/// of a maximal positive subspace, `tau` likewise for a maximal negative
/// subspace.
///
/// Computed by congruence-diagonalizing the form into a positive/negative
/// splitting and taking the determinant signs of the two compressions of
/// `g`; for an isometry both compressions are invertible and the signs do
/// not depend on the chosen splitting. Degenerate definite cases follow
/// the convention `sigma = 1, tau = sign det g` when `p = 0` (and the
/// mirror when `q = 0`).
pub fn sigma_tau(g: &Matrix, form: &Matrix) -> Result<(i8, i8), Sl2Error> {
    if !form.is_real() || !form.is_symmetric() {
        return Err(Sl2Error::BadForm);
    }
    if !g.is_real() || &(&g.transpose() * form) * g != *form {
        return Err(Sl2Error::NotAnIsometry);
    }
    let (e, diag) = exact::congruence_diagonalize(form, false)?;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        match d.sign()? {
            1 => pos.push(i),
            -1 => neg.push(i),
            _ => return Err(Sl2Error::BadForm),
        }
    }
    let det_sign = |m: &Matrix| -> Result<i8, Sl2Error> {
        let s = exact::det(m).sign()?;
        if s == 0 {
            Err(Sl2Error::NotAnIsometry)
        } else {
            Ok(s)
        }
    };
    if pos.is_empty() || neg.is_empty() {
        let d = det_sign(g)?;
        return Ok(if pos.is_empty() { (1, d) } else { (d, 1) });
    }
    // In the diagonalizing basis the splitting is coordinate-aligned, so
    // the two compressions of g are plain submatrices of e^{-1} g e.
    let e_inv = exact::inverse(&e).ok_or(Sl2Error::BadForm)?;
    let m = &(&e_inv * g) * &e;
    let sigma = det_sign(&m.submatrix(&pos, &pos))?;
    let tau = det_sign(&m.submatrix(&neg, &neg))?;
    Ok((sigma, tau))
}

/// Componentwise product over a direct sum of isometries.
pub fn sigma_tau_direct_sum(parts: &[(i8, i8)]) -> Result<(i8, i8), Sl2Error> {
    if parts.is_empty() {
        return Err(Sl2Error::EmptySum);
    }
    Ok(parts.iter().fold((1, 1), |(s, t), &(ps, pt)| (s * ps, t * pt)))
}

/// Closed form for the component invariants of the standard negation maps.
///
/// For even `r = 2m` (no second weight): the unimodular intertwiner on
/// `(V_r, B_r)` has `sigma = tau = (-1)^(m/2)` for even `m` and
/// `(-1)^((m+1)/2)` for odd `m`. For an odd pair `(r, r')`: the map
/// `u_r (x) u_{r'}` on the split form `B_r (x) B_{r'}` has
/// `sigma = tau = (-1)^((r+1)(r'+1)/4)`.
pub fn sigma_tau_tensor_negation(r: u32, r_prime: Option<u32>) -> Result<(i8, i8), Sl2Error> {
    match r_prime {
        None => {
            if r % 2 != 0 {
                return Err(Sl2Error::ParityMismatch(format!(
                    "single weight r={r} must be even"
                )));
            }
            let m = r / 2;
            let exp = if m % 2 == 0 { m / 2 } else { (m + 1) / 2 };
            let s = if exp % 2 == 0 { 1 } else { -1 };
            Ok((s, s))
        }
        Some(rp) => {
            if r % 2 == 0 || rp % 2 == 0 {
                return Err(Sl2Error::ParityMismatch(format!(
                    "pair ({r},{rp}) must consist of odd weights"
                )));
            }
            let exp = (r + 1) * (rp + 1) / 4;
            let s = if exp % 2 == 0 { 1 } else { -1 };
            Ok((s, s))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::signature_symmetric;

    fn two() -> Scalar {
        Scalar::from_int(2)
    }

    #[test]
    fn defining_representation() {
        let m = build_irreducible(1);
        assert_eq!(m.mat_x, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(m.mat_y, Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert_eq!(m.mat_h, Matrix::from_i64(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn weight_two_model() {
        let m = build_irreducible(2);
        assert_eq!(m.mat_h, Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert_eq!(m.mat_x, Matrix::from_i64(&[&[0, 2, 0], &[0, 0, 2], &[0, 0, 0]]));
        let trivial = build_irreducible(0);
        assert!(trivial.mat_x.is_zero() && trivial.mat_y.is_zero() && trivial.mat_h.is_zero());
    }

    #[test]
    fn triple_relations_and_nilpotency() {
        for r in 0..=12u32 {
            let m = build_irreducible(r);
            assert_eq!(m.mat_h.commutator(&m.mat_x), m.mat_x.scale(&two()), "r={r}");
            assert_eq!(m.mat_h.commutator(&m.mat_y), m.mat_y.scale(&-two()), "r={r}");
            assert_eq!(m.mat_x.commutator(&m.mat_y), m.mat_h, "r={r}");
            assert!(m.mat_x.pow(r as usize + 1).is_zero());
            assert!(!m.mat_x.pow(r as usize).is_zero() || r == 0);
        }
    }

    #[test]
    fn invariant_form_conventions() {
        // r = 0: the trivial form [1].
        assert_eq!(build_invariant_form(0).mat_b, Matrix::identity(1));
        // r = 2 (m = 1, b0 = -1): antidiagonal (-1, 1, -1), center positive.
        let b2 = build_invariant_form(2).mat_b;
        assert_eq!(b2, Matrix::from_i64(&[&[0, 0, -1], &[0, 1, 0], &[-1, 0, 0]]));
        assert_eq!(signature_symmetric(&b2).unwrap(), (2, 1, 0));
        // r = 1 (b0 = -1): [[0,-1],[1,0]] and B(e1, X e1) = 1 >= 0.
        let b1 = build_invariant_form(1).mat_b;
        assert_eq!(b1, Matrix::from_i64(&[&[0, -1], &[1, 0]]));
        let m = build_irreducible(1);
        let v = Matrix::identity(2).column_vec(1);
        let xv = &m.mat_x * &v;
        let val = (&(&v.transpose() * &b1) * &xv).at(0, 0).clone();
        assert!(val.sign().unwrap() >= 0);
    }

    #[test]
    fn invariance_signature_and_intertwiner_sweep() {
        for r in 0..=12u32 {
            let m = build_irreducible(r);
            let b = build_invariant_form(r).mat_b;
            for z in [&m.mat_x, &m.mat_y, &m.mat_h] {
                assert!(
                    (&(&z.transpose() * &b) + &(&b * z)).is_zero(),
                    "invariance fails at r={r}"
                );
            }
            if r % 2 == 0 {
                let mm = (r / 2) as usize;
                assert_eq!(signature_symmetric(&b).unwrap(), (mm + 1, mm, 0), "r={r}");
            } else {
                assert!(b.is_skew(), "r={r}");
            }
            let u = build_negation_intertwiner(r, false).unwrap();
            let u_inv = u.clone(); // diagonal +-1, an involution
            assert_eq!(&(&u * &m.mat_x) * &u_inv, -&m.mat_x, "r={r}");
            assert_eq!(&(&u * &m.mat_y) * &u_inv, -&m.mat_y, "r={r}");
            assert_eq!(&(&u * &m.mat_h) * &u_inv, m.mat_h, "r={r}");
            let pullback = &(&u.transpose() * &b) * &u;
            let expect = if r % 2 == 0 { b.clone() } else { -&b };
            assert_eq!(pullback, expect, "r={r}");
        }
    }

    #[test]
    fn unimodular_variant() {
        assert_eq!(
            build_negation_intertwiner(2, true).unwrap(),
            Matrix::from_i64(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, -1]])
        );
        for r in [0u32, 2, 4, 6, 8, 10] {
            let u = build_negation_intertwiner(r, true).unwrap();
            assert_eq!(exact::det(&u), Scalar::one(), "r={r}");
        }
        assert!(build_negation_intertwiner(1, true).is_err());
        assert_eq!(build_negation_intertwiner(0, false).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn tensor_form_kinds() {
        let sym = TypedForm::new(SymmetryKind::Symmetric, Matrix::identity(2));
        let skew = TypedForm::new(SymmetryKind::Skew, Matrix::from_i64(&[&[0, 1], &[-1, 0]]));
        assert_eq!(tensor_form(&sym, &sym).unwrap().kind, SymmetryKind::Symmetric);
        let ss = tensor_form(&skew, &skew).unwrap();
        assert_eq!(ss.kind, SymmetryKind::Symmetric);
        assert_eq!(signature_symmetric(&ss.mat).unwrap(), (2, 2, 0));
        let skew_herm = TypedForm::new(
            SymmetryKind::SkewHermitian,
            Matrix::diag(&[Scalar::i(), Scalar::i()]),
        );
        let out = tensor_form(&sym, &skew_herm).unwrap();
        assert_eq!(out.kind, SymmetryKind::SkewHermitian);
        assert!(out.mat.is_skew_hermitian());
        assert!(tensor_form(&sym, &TypedForm::new(SymmetryKind::Symmetric, Matrix::zeros(2, 2)))
            .is_err());
        assert!(tensor_form(&skew_herm, &sym).is_err());
    }

    #[test]
    fn sigma_tau_basic_values() {
        let id = Matrix::identity(3);
        let form = Matrix::diag(&[Scalar::one(), Scalar::one(), Scalar::from_int(-1)]);
        assert_eq!(sigma_tau(&id, &form).unwrap(), (1, 1));
        let refl = Matrix::diag(&[Scalar::one(), Scalar::one(), Scalar::from_int(-1)]);
        assert_eq!(sigma_tau(&refl, &form).unwrap(), (1, -1));
        // A boost of the hyperbolic plane lies in the identity component.
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let boost = Matrix::from_rows(vec![
            vec![Scalar::from_int(2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::ratio(1, 2)],
        ]);
        assert_eq!(sigma_tau(&boost, &h).unwrap(), (1, 1));
        assert!(sigma_tau(&Matrix::from_i64(&[&[2, 0], &[0, 2]]), &h).is_err());
    }

    #[test]
    fn sigma_tau_of_unimodular_negation_on_b2() {
        let u = build_negation_intertwiner(2, true).unwrap();
        let b = build_invariant_form(2).mat_b;
        assert_eq!(sigma_tau(&u, &b).unwrap(), (-1, -1));
    }

    #[test]
    fn direct_sum_rule() {
        assert_eq!(sigma_tau_direct_sum(&[(1, -1), (1, -1)]).unwrap(), (1, 1));
        assert_eq!(sigma_tau_direct_sum(&[(-1, 1)]).unwrap(), (-1, 1));
        assert_eq!(sigma_tau_direct_sum(&[(1, -1), (-1, 1), (-1, -1)]).unwrap(), (1, 1));
        assert!(sigma_tau_direct_sum(&[]).is_err());
    }

    #[test]
    fn closed_forms_match_lemma_values() {
        assert_eq!(sigma_tau_tensor_negation(4, None).unwrap(), (-1, -1));
        assert_eq!(sigma_tau_tensor_negation(1, Some(1)).unwrap(), (-1, -1));
        assert_eq!(sigma_tau_tensor_negation(1, Some(3)).unwrap(), (1, 1));
        assert!(sigma_tau_tensor_negation(3, None).is_err());
        assert!(sigma_tau_tensor_negation(2, Some(3)).is_err());
    }
}
