//! Isotypic decomposition of a standard triple acting on the ambient
//! space: highest-weight spaces, the multiplicity forms, datum extraction
//! and block-diagonal model synthesis.

use crate::algebra::{
    validate_datum, AlgebraDescriptor, MultiplicityDatum, MultiplicityEntry,
};
use crate::engine::ambient::{AmbientSpace, FormKind};
use crate::engine::triple::StandardTriple;
use crate::engine::EngineError;
use crate::exact::{self, Matrix, Scalar};
use crate::sl2rep;

/// One isotypic component: the highest-weight basis of weight `r` and the
/// multiplicity form `phi_r` written in that basis (absent without a form).
pub struct IsotypicBlock {
    pub r: u32,
    pub multiplicity: usize,
    pub hw_basis: Vec<Matrix>,
    pub phi: Option<Matrix>,
}

/// An adapted basis for the decomposition `V = (+)_r V_r (x) W_r`: column
/// `offset_r + i*m_r + j` of `s` is `y^i b_j`, so that `s` intertwines the
/// block model with the triple.
pub struct IsotypicData {
    pub blocks: Vec<IsotypicBlock>,
    pub s: Matrix,
    pub s_inv: Matrix,
}

impl IsotypicData {
    /// Assembles `(+)_r (a_r (x) f_r)` in model coordinates and conjugates
    /// it back to the ambient space; `pick` returns the two factors per
    /// block.
    pub fn assemble(
        &self,
        mut pick: impl FnMut(&IsotypicBlock) -> Result<(Matrix, Matrix), EngineError>,
    ) -> Result<Matrix, EngineError> {
        let mut model: Option<Matrix> = None;
        for block in &self.blocks {
            let (a, f) = pick(block)?;
            let piece = a.kron(&f);
            model = Some(match model {
                None => piece,
                Some(m) => m.direct_sum(&piece),
            });
        }
        let model = model.ok_or_else(|| EngineError::Internal("empty datum".to_string()))?;
        Ok(&(&self.s * &model) * &self.s_inv)
    }
}

/// Normalization constant `B_r(e_0, Y^r e_0)`, computed from the model.
fn form_normalizer(r: u32) -> Scalar {
    let b = sl2rep::build_invariant_form(r).mat_b;
    let y = sl2rep::build_irreducible(r).mat_y;
    (&b * &y.pow(r as usize)).at(0, 0).clone()
}

/// Splits the ambient space along the triple: highest-weight spaces per
/// weight, multiplicity Gram forms, and the adapted change of basis.
pub fn isotypic_decomposition(t: &StandardTriple) -> Result<IsotypicData, EngineError> {
    let n = t.ambient.dimension();
    let mut blocks = Vec::new();
    let mut total = 0usize;
    for r in 0..n as u32 {
        let shifted = &t.h - &Matrix::identity(n).scale(&Scalar::from_int(r as i64));
        let stacked = Matrix::vstack(&[&t.x, &shifted]);
        let hw_basis = exact::kernel_basis(&stacked);
        if hw_basis.is_empty() {
            continue;
        }
        let m = hw_basis.len();
        total += (r as usize + 1) * m;
        let phi = if t.ambient.kind() == FormKind::NoForm {
            None
        } else {
            let y_pow = t.y.pow(r as usize);
            let c_inv = form_normalizer(r).inv();
            let gram = Matrix::from_fn(m, m, |a, b| {
                &t.ambient.form_value(&hw_basis[a], &(&y_pow * &hw_basis[b])) * &c_inv
            });
            Some(gram)
        };
        blocks.push(IsotypicBlock { r, multiplicity: m, hw_basis, phi });
    }
    if total != n {
        return Err(EngineError::Internal(format!(
            "isotypic components span {total} of {n} dimensions"
        )));
    }
    let mut cols: Vec<Matrix> = Vec::with_capacity(n);
    for block in &blocks {
        let mut power = Matrix::identity(n);
        let mut lowered: Vec<Vec<Matrix>> = vec![block.hw_basis.clone()];
        for _ in 0..block.r {
            power = &power * &t.y;
            lowered.push(block.hw_basis.iter().map(|b| &power * b).collect());
        }
        for i in 0..=block.r as usize {
            for j in 0..block.multiplicity {
                cols.push(lowered[i][j].clone());
            }
        }
    }
    let s = Matrix::from_fn(n, n, |r, c| cols[c].at(r, 0).clone());
    let s_inv = exact::inverse(&s)
        .ok_or_else(|| EngineError::Internal("isotypic basis is singular".to_string()))?;
    Ok(IsotypicData { blocks, s, s_inv })
}

/// Reads the multiplicity datum off a triple: dimensions of the
/// highest-weight spaces, and kinds/signatures of the multiplicity forms
/// according to the family and the parity of the weight.
pub fn extract_datum(t: &StandardTriple) -> Result<MultiplicityDatum, EngineError> {
    let iso = isotypic_decomposition(t)?;
    extract_datum_from(&iso, t.ambient.alg())
}

pub(crate) fn extract_datum_from(
    iso: &IsotypicData,
    alg: &AlgebraDescriptor,
) -> Result<MultiplicityDatum, EngineError> {
    use AlgebraDescriptor::*;
    let mut entries = Vec::new();
    for block in &iso.blocks {
        let m = block.multiplicity as u32;
        let even = block.r % 2 == 0;
        let entry = match alg {
            SlR { .. } => MultiplicityEntry::Dim(m),
            SoR { .. } | SpR { .. } => {
                let phi = block.phi.as_ref().unwrap();
                let symmetric_side = matches!(alg, SoR { .. }) == even;
                if symmetric_side {
                    let (p, q, z) = exact::signature_symmetric(phi)?;
                    if z != 0 {
                        return Err(EngineError::Internal(format!(
                            "degenerate multiplicity form at r={}",
                            block.r
                        )));
                    }
                    MultiplicityEntry::Sig(p as u32, q as u32)
                } else {
                    if !phi.is_skew() || exact::det(phi).is_zero() {
                        return Err(EngineError::Internal(format!(
                            "multiplicity form at r={} is not a symplectic product",
                            block.r
                        )));
                    }
                    MultiplicityEntry::Dim(m)
                }
            }
            Su { .. } => {
                // Odd weights carry a skew-Hermitian form; the datum
                // records the signature of -i phi_r.
                let phi = block.phi.as_ref().unwrap();
                let herm = if even { phi.clone() } else { phi.scale(&-&Scalar::i()) };
                let (p, q, z) = exact::signature_hermitian(&herm)?;
                if z != 0 {
                    return Err(EngineError::Internal(format!(
                        "degenerate multiplicity form at r={}",
                        block.r
                    )));
                }
                MultiplicityEntry::Sig(p as u32, q as u32)
            }
            _ => return Err(EngineError::UnsupportedFamily(alg.family_name().to_string())),
        };
        entries.push((block.r, entry));
    }
    let datum = MultiplicityDatum::from_entries(entries);
    validate_datum(alg, &datum).map_err(|e| EngineError::Internal(e.to_string()))?;
    Ok(datum)
}

/// Canonical multiplicity form realizing an entry, per family and parity.
fn model_phi(alg: &AlgebraDescriptor, r: u32, e: MultiplicityEntry) -> Result<Matrix, EngineError> {
    use AlgebraDescriptor::*;
    let even = r % 2 == 0;
    let diag_pm = |p: u32, q: u32| -> Matrix {
        let entries: Vec<Scalar> =
            (0..p + q).map(|i| Scalar::from_int(if i < p { 1 } else { -1 })).collect();
        Matrix::diag(&entries)
    };
    Ok(match (alg, e) {
        (SoR { .. }, MultiplicityEntry::Sig(p, q)) if even => diag_pm(p, q),
        (SoR { .. }, MultiplicityEntry::Dim(m)) if !even => exact::standard_symplectic(m as usize),
        (SpR { .. }, MultiplicityEntry::Dim(m)) if even => exact::standard_symplectic(m as usize),
        (SpR { .. }, MultiplicityEntry::Sig(p, q)) if !even => diag_pm(p, q),
        (Su { .. }, MultiplicityEntry::Sig(p, q)) => {
            if even {
                diag_pm(p, q)
            } else {
                diag_pm(p, q).scale(&Scalar::i())
            }
        }
        _ => {
            return Err(EngineError::Internal(format!(
                "entry {e:?} at r={r} has no model form for {alg}"
            )))
        }
    })
}

/// Synthesizes the block-diagonal standard triple realizing a datum on
/// `(+)_r V_r (x) W_r` with the canonical multiplicity forms. The zero
/// orbit has no triple (the nilpotent element must be nonzero).
pub fn build_model(
    alg: &AlgebraDescriptor,
    d: &MultiplicityDatum,
) -> Result<StandardTriple, EngineError> {
    use AlgebraDescriptor::*;
    if !matches!(alg, SlR { .. } | SoR { .. } | SpR { .. } | Su { .. }) {
        return Err(EngineError::UnsupportedFamily(alg.family_name().to_string()));
    }
    validate_datum(alg, d)?;
    if d.is_zero_orbit() {
        return Err(EngineError::ZeroElement);
    }
    let mut x: Option<Matrix> = None;
    let mut y: Option<Matrix> = None;
    let mut h: Option<Matrix> = None;
    let mut b: Option<Matrix> = None;
    let append = |acc: &mut Option<Matrix>, piece: Matrix| {
        *acc = Some(match acc.take() {
            None => piece,
            Some(m) => m.direct_sum(&piece),
        });
    };
    for (r, e) in d.entries() {
        let model = sl2rep::build_irreducible(r);
        let m = e.size() as usize;
        let id = Matrix::identity(m);
        append(&mut x, model.mat_x.kron(&id));
        append(&mut y, model.mat_y.kron(&id));
        append(&mut h, model.mat_h.kron(&id));
        if !matches!(alg, SlR { .. }) {
            let b_r = sl2rep::build_invariant_form(r).mat_b;
            append(&mut b, b_r.kron(&model_phi(alg, r, e)?));
        }
    }
    let ambient = AmbientSpace::new(*alg, b)?;
    StandardTriple::new(x.unwrap(), y.unwrap(), h.unwrap(), ambient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor::*;
    use crate::engine::triple::complete_standard_triple;

    fn sig(p: u32, q: u32) -> MultiplicityEntry {
        MultiplicityEntry::Sig(p, q)
    }

    fn dim(n: u32) -> MultiplicityEntry {
        MultiplicityEntry::Dim(n)
    }

    fn datum(entries: &[(u32, MultiplicityEntry)]) -> MultiplicityDatum {
        MultiplicityDatum::from_entries(entries.iter().copied())
    }

    #[test]
    fn canonical_sl2_datum() {
        let amb = AmbientSpace::standard(SlR { n: 2 }).unwrap();
        let x = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let t = complete_standard_triple(&x, &amb).unwrap();
        assert_eq!(extract_datum(&t).unwrap(), datum(&[(1, dim(1))]));
    }

    #[test]
    fn so21_model_round_trip_and_weights() {
        let alg = SoR { p: 2, q: 1 };
        let d = datum(&[(2, sig(1, 0))]);
        let t = build_model(&alg, &d).unwrap();
        assert_eq!(t.h, Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        assert_eq!(extract_datum(&t).unwrap(), d);
        // Completing the model's x from scratch recovers the same datum and
        // the same h-eigenvalues.
        let fresh = complete_standard_triple(&t.x, &t.ambient).unwrap();
        assert_eq!(extract_datum(&fresh).unwrap(), d);
    }

    #[test]
    fn sp4_split_signature_datum() {
        let alg = SpR { n: 2 };
        let d = datum(&[(1, sig(1, 1))]);
        let t = build_model(&alg, &d).unwrap();
        assert!(t.ambient.form().unwrap().is_skew());
        assert_eq!(extract_datum(&t).unwrap(), d);
    }

    #[test]
    fn sp4_two_jordan_blocks_with_mixed_phi_values() {
        // x with two size-2 Jordan blocks on a split symplectic form,
        // arranged so phi_1 takes one positive and one negative value.
        let alg = SpR { n: 2 };
        let t = build_model(&alg, &datum(&[(1, sig(1, 1))])).unwrap();
        let iso = isotypic_decomposition(&t).unwrap();
        assert_eq!(iso.blocks.len(), 1);
        let phi = iso.blocks[0].phi.as_ref().unwrap();
        assert_eq!(exact::signature_symmetric(phi).unwrap(), (1, 1, 0));
    }

    #[test]
    fn zero_datum_has_no_model() {
        let alg = SoR { p: 2, q: 1 };
        let d = MultiplicityDatum::zero_orbit(&alg);
        assert!(matches!(build_model(&alg, &d), Err(EngineError::ZeroElement)));
    }

    #[test]
    fn su_round_trip_with_skew_hermitian_odd_form() {
        let alg = Su { p: 2, q: 1 };
        let d = datum(&[(1, sig(1, 0)), (0, sig(1, 0))]);
        let t = build_model(&alg, &d).unwrap();
        assert_eq!(extract_datum(&t).unwrap(), d);
    }

    #[test]
    fn intertwining_property_of_the_adapted_basis() {
        let alg = SoR { p: 3, q: 2 };
        let d = datum(&[(2, sig(1, 0)), (0, sig(1, 1))]);
        let t = build_model(&alg, &d).unwrap();
        let iso = isotypic_decomposition(&t).unwrap();
        // s conjugates the block model of x back to x itself.
        let model_x = iso
            .assemble(|block| {
                Ok((
                    sl2rep::build_irreducible(block.r).mat_x,
                    Matrix::identity(block.multiplicity),
                ))
            })
            .unwrap();
        assert_eq!(model_x, t.x);
    }
}
