//! Explicit negation conjugators, matrix-level centralizer components, and
//! the independent negation decision.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, ToPrimitive};

use crate::algebra::{AlgebraDescriptor, GibbsVerdict, MultiplicityDatum, NegationReason, NegationVerdict};
use crate::engine::isotypic::{extract_datum, extract_datum_from, isotypic_decomposition, IsotypicBlock, IsotypicData};
use crate::engine::triple::StandardTriple;
use crate::engine::EngineError;
use crate::exact::{self, Matrix, Scalar};
use crate::orbits::ComponentSet;
use crate::sl2rep;

/// Everything the matrix engine can say about one nilpotent element:
/// the extracted datum, the independent negation and Gibbs verdicts, and
/// the witnessing evidence (an exact conjugator, or the separating
/// component/determinant data).
#[derive(Debug, Clone)]
pub struct VerdictBundle {
    pub alg: AlgebraDescriptor,
    pub datum: MultiplicityDatum,
    pub verdict: NegationVerdict,
    pub gibbs: GibbsVerdict,
    pub conjugator: Option<Matrix>,
    pub conjugator_det: Option<Scalar>,
    pub sigma_tau: Option<(i8, i8)>,
    pub centralizer: Option<ComponentSet>,
    pub note: Option<String>,
}

fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a nonnegative rational, if one exists.
fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    let num = exact_sqrt_int(r.numer())?;
    let den = exact_sqrt_int(r.denom())?;
    Some(BigRational::new(num, den))
}

/// Writes `n = x^2 + y^2` when feasible; bounded search on small integers.
fn two_squares(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let limit = n.to_u64()?;
    if limit > 1_000_000_000_000 {
        return None;
    }
    let mut x = BigInt::from(0);
    loop {
        let xx = &x * &x;
        if &xx > n {
            return None;
        }
        let rest = n - &xx;
        if let Some(y) = exact_sqrt_int(&rest) {
            return Some((x, y));
        }
        x += 1;
    }
}

/// A scalar `a` with `|a|^2 = ratio`, rational when possible, Gaussian
/// otherwise.
fn norm_sqrt(ratio: &BigRational, allow_gaussian: bool) -> Option<Scalar> {
    if let Some(r) = rational_sqrt(ratio) {
        return Some(Scalar::from_rational(r));
    }
    if !allow_gaussian {
        return None;
    }
    // |(x + i y)/d|^2 = a/b with d = b and x^2 + y^2 = a b.
    let prod = ratio.numer() * ratio.denom();
    let (x, y) = two_squares(&prod)?;
    let d = BigRational::from_integer(ratio.denom().clone());
    Some(Scalar::gaussian(
        BigRational::from_integer(x) / &d,
        BigRational::from_integer(y) / &d,
    ))
}

/// An `f` with `f^* phi f = -phi` for a nondegenerate symmetric (or
/// Hermitian) form: requires split signature, and a rational (Gaussian
/// rational) scaling between matched diagonal entries.
fn anti_isometry(phi: &Matrix, hermitian: bool, r: u32) -> Result<Matrix, EngineError> {
    let (e, diag) = exact::congruence_diagonalize(phi, hermitian)?;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        match d.sign()? {
            1 => pos.push(i),
            -1 => neg.push(i),
            _ => return Err(EngineError::Internal(format!("degenerate form at r={r}"))),
        }
    }
    if pos.len() != neg.len() {
        return Err(EngineError::NotConjugateInFullGroup { r });
    }
    let n = phi.rows();
    let mut f0 = Matrix::zeros(n, n);
    let mut unmatched: Vec<usize> = neg.clone();
    for &i in &pos {
        // Pair i with a negative index j such that -d_i/d_j has an exact
        // square root (of the right norm form).
        let mut picked = None;
        for (slot, &j) in unmatched.iter().enumerate() {
            let ratio = -(&diag[i].re() / &diag[j].re());
            if let Some(alpha) = norm_sqrt(&ratio, hermitian) {
                picked = Some((slot, j, alpha));
                break;
            }
        }
        let Some((slot, j, alpha)) = picked else {
            return Err(EngineError::NoRationalWitness { r });
        };
        unmatched.remove(slot);
        // e_i -> alpha e_j and e_j -> (1/conj(alpha)) e_i... for the
        // bilinear case conj is the identity; the Hermitian case needs
        // |1/alpha|^2 = -d_j/d_i, so the plain inverse works there too.
        f0.set(j, i, alpha.clone());
        f0.set(i, j, alpha.inv());
    }
    let e_inv = exact::inverse(&e)
        .ok_or_else(|| EngineError::Internal("singular congruence basis".to_string()))?;
    let f = &(&e * &f0) * &e_inv;
    let left = if hermitian { f.conj_transpose() } else { f.transpose() };
    if &(&left * phi) * &f != -phi {
        return Err(EngineError::Internal(format!("anti-isometry check failed at r={r}")));
    }
    Ok(f)
}

/// The symplectic anti-isometry of `(W, phi)` modeled on the negation
/// intertwiner of the irreducible of weight `dim W - 1`: both symplectic
/// spaces are brought to Darboux form and the intertwiner is transported.
fn symplectic_model_negation(phi: &Matrix, r_model: u32) -> Result<Matrix, EngineError> {
    let e1 = exact::darboux_basis(phi)?;
    let b_model = sl2rep::build_invariant_form(r_model).mat_b;
    let e0 = exact::darboux_basis(&b_model)?;
    let e0_inv = exact::inverse(&e0)
        .ok_or_else(|| EngineError::Internal("singular Darboux basis".to_string()))?;
    let c = &e1 * &e0_inv;
    let c_inv = exact::inverse(&c)
        .ok_or_else(|| EngineError::Internal("singular Darboux transport".to_string()))?;
    let u = sl2rep::build_negation_intertwiner(r_model, false)?;
    let f = &(&c * &u) * &c_inv;
    if &(&f.transpose() * phi) * &f != -phi {
        return Err(EngineError::Internal("symplectic negation check failed".to_string()));
    }
    Ok(f)
}

fn negation_conjugator_impl(
    t: &StandardTriple,
    iso: &IsotypicData,
) -> Result<Matrix, EngineError> {
    use AlgebraDescriptor::*;
    let alg = *t.ambient.alg();
    let block_factors = |block: &IsotypicBlock| -> Result<(Matrix, Matrix), EngineError> {
        let r = block.r;
        let m = block.multiplicity;
        let even = r % 2 == 0;
        let id = Matrix::identity(m);
        let factors = match alg {
            SlR { .. } => (sl2rep::build_negation_intertwiner(r, false)?, id),
            SoR { .. } => {
                if even {
                    (sl2rep::build_negation_intertwiner(r, true)?, id)
                } else {
                    let phi = block.phi.as_ref().unwrap();
                    let f = symplectic_model_negation(phi, m as u32 - 1)?;
                    (sl2rep::build_negation_intertwiner(r, false)?, f)
                }
            }
            SpR { .. } => {
                if even {
                    (sl2rep::build_negation_intertwiner(r, false)?, id)
                } else {
                    let phi = block.phi.as_ref().unwrap();
                    (sl2rep::build_negation_intertwiner(r, false)?, anti_isometry(phi, false, r)?)
                }
            }
            Su { .. } => {
                if even {
                    (sl2rep::build_negation_intertwiner(r, false)?, id)
                } else {
                    let phi = block.phi.as_ref().unwrap();
                    let herm = phi.scale(&-&Scalar::i());
                    (sl2rep::build_negation_intertwiner(r, false)?, anti_isometry(&herm, true, r)?)
                }
            }
            _ => return Err(EngineError::UnsupportedFamily(alg.family_name().to_string())),
        };
        Ok(factors)
    };
    let a = iso.assemble(block_factors)?;
    if &a * &t.x != -&(&t.x * &a) {
        return Err(EngineError::Internal("conjugator does not negate x".to_string()));
    }
    if let Some(b) = t.ambient.form() {
        let left = if t.ambient.is_sesquilinear() { a.conj_transpose() } else { a.transpose() };
        if &(&left * b) * &a != *b {
            return Err(EngineError::Internal("conjugator is not an isometry".to_string()));
        }
    }
    Ok(a)
}

/// Builds an exact `A` with `A x A^{-1} = -x` preserving the ambient form.
///
/// For `sl(n,R)` any invertible conjugator is returned (its determinant
/// sign carries the orbit information). For `sp(2n,R)` and `su(p,q)` the
/// split-signature condition on odd weights is required, otherwise no
/// isometric conjugator exists and `NotConjugateInFullGroup` is reported.
pub fn build_negation_conjugator(t: &StandardTriple) -> Result<Matrix, EngineError> {
    let iso = isotypic_decomposition(t)?;
    negation_conjugator_impl(t, &iso)
}

/// Reflection of `(W, phi)` in a vector of the requested sign, written in
/// the same basis as `phi`.
fn reflection(phi: &Matrix, want_positive: bool) -> Result<Option<Matrix>, EngineError> {
    let (e, diag) = exact::congruence_diagonalize(phi, false)?;
    for (i, d) in diag.iter().enumerate() {
        let s = d.sign()?;
        if (s > 0) == want_positive && s != 0 {
            let v = e.column_vec(i);
            let vt_phi = &v.transpose() * phi;
            let outer = &v * &vt_phi;
            let scale = &Scalar::from_int(-2) / d;
            return Ok(Some(&Matrix::identity(phi.rows()) + &outer.scale(&scale)));
        }
    }
    Ok(None)
}

/// Matrix-level centralizer components for `so(p,q)`: explicit verified
/// reflections on the even-weight multiplicity spaces generate the image
/// of the centralizer in the component group.
pub fn centralizer_components_matrix(
    t: &StandardTriple,
    iso: &IsotypicData,
) -> Result<ComponentSet, EngineError> {
    let b = t.ambient.form().ok_or_else(|| {
        EngineError::UnsupportedFamily(t.ambient.alg().family_name().to_string())
    })?;
    let mut generators = Vec::new();
    for target in &iso.blocks {
        if target.r % 2 != 0 {
            continue;
        }
        let phi = target.phi.as_ref().unwrap();
        for want_positive in [true, false] {
            let Some(refl) = reflection(phi, want_positive)? else { continue };
            let g = iso.assemble(|block| {
                let factor = if block.r == target.r {
                    refl.clone()
                } else {
                    Matrix::identity(block.multiplicity)
                };
                Ok((Matrix::identity(block.r as usize + 1), factor))
            })?;
            if &g * &t.x != &t.x * &g {
                return Err(EngineError::Internal(
                    "centralizer generator does not commute with x".to_string(),
                ));
            }
            if &(&g.transpose() * b) * &g != *b {
                return Err(EngineError::Internal(
                    "centralizer generator is not an isometry".to_string(),
                ));
            }
            generators.push(sl2rep::sigma_tau(&g, b)?);
        }
    }
    Ok(ComponentSet::generated(generators))
}

/// Independent matrix-level negation decision.
///
/// The datum of `-x` is read off the honestly negated triple `(-x,-y,h)`
/// and compared to the datum of `x`; the disconnected cases add component
/// bookkeeping: determinant sign of the conjugator for `sl(n,R)`, the
/// `(sigma,tau)` component of the conjugator against the centralizer
/// components for `so(p,q)`.
pub fn decide_negation_matrix(t: &StandardTriple) -> Result<VerdictBundle, EngineError> {
    use AlgebraDescriptor::*;
    let alg = *t.ambient.alg();
    t.validate()?;
    let iso = isotypic_decomposition(t)?;
    let datum = extract_datum_from(&iso, &alg)?;
    let datum_minus = extract_datum(&t.negated())?;
    let bundle = match alg {
        SlR { .. } => {
            if datum_minus != datum {
                return Err(EngineError::Internal(
                    "negated element changed its Jordan type".to_string(),
                ));
            }
            let mut a = negation_conjugator_impl(t, &iso)?;
            let det0 = exact::det(&a);
            let has_odd_block = datum.entries().any(|(r, _)| r % 2 == 0);
            let stable = det0.sign()? > 0 || has_odd_block;
            let mut note = None;
            if stable && det0.sign()? < 0 {
                // Fix the determinant with a centralizer element acting as
                // -1 on one odd-size chain.
                let mut done = false;
                let witness = iso.assemble(|block| {
                    let m = block.multiplicity;
                    let mut f = Matrix::identity(m);
                    if block.r % 2 == 0 && !done {
                        f.set(0, 0, Scalar::from_int(-1));
                        done = true;
                    }
                    Ok((Matrix::identity(block.r as usize + 1), f))
                })?;
                if &witness * &t.x != &t.x * &witness || exact::det(&witness).sign()? >= 0 {
                    return Err(EngineError::Internal("bad determinant witness".to_string()));
                }
                a = &a * &witness;
                note = Some("conjugator determinant corrected by a centralizer element".into());
            }
            let det = exact::det(&a);
            let detail = if stable {
                format!("explicit conjugator with determinant {det} lies in GL+(n,R)")
            } else {
                "every conjugator onto -x has negative determinant (the centralizer of an all-even-blocks nilpotent lies in GL+)".to_string()
            };
            VerdictBundle {
                alg,
                datum: datum.clone(),
                verdict: NegationVerdict {
                    stable,
                    reason: NegationReason::JordanBlockCriterion,
                    detail,
                },
                gibbs: gibbs(stable),
                conjugator: Some(a),
                conjugator_det: Some(det),
                sigma_tau: None,
                centralizer: None,
                note,
            }
        }
        SpR { .. } | Su { .. } => {
            let stable = datum_minus == datum;
            let (conjugator, note) = match negation_conjugator_impl(t, &iso) {
                Ok(a) => {
                    if !stable {
                        return Err(EngineError::Internal(
                            "isometric conjugator exists although the data differ".to_string(),
                        ));
                    }
                    (Some(a), None)
                }
                Err(EngineError::NotConjugateInFullGroup { r }) => {
                    if stable {
                        return Err(EngineError::Internal(
                            "split data without isometric conjugator".to_string(),
                        ));
                    }
                    (None, Some(format!("odd weight r={r} separates the orbits of x and -x")))
                }
                Err(EngineError::NoRationalWitness { r }) => (
                    None,
                    Some(format!(
                        "stable over R, but no conjugator with rational entries exists at r={r}"
                    )),
                ),
                Err(e) => return Err(e),
            };
            let det = conjugator.as_ref().map(exact::det);
            let (reason, detail) = if stable {
                (
                    NegationReason::OddSignaturesSplit,
                    "the datum of -x equals the datum of x".to_string(),
                )
            } else {
                (
                    NegationReason::OddSignatureNotSplit,
                    "the datum of -x differs from the datum of x (a non-split odd signature flips)"
                        .to_string(),
                )
            };
            VerdictBundle {
                alg,
                datum: datum.clone(),
                verdict: NegationVerdict { stable, reason, detail },
                gibbs: gibbs(stable),
                conjugator,
                conjugator_det: det,
                sigma_tau: None,
                centralizer: None,
                note,
            }
        }
        SoR { .. } => {
            if datum_minus != datum {
                return Err(EngineError::Internal(
                    "x and -x must be O(p,q)-conjugate".to_string(),
                ));
            }
            let a = negation_conjugator_impl(t, &iso)?;
            let b = t.ambient.form().unwrap();
            let st = sl2rep::sigma_tau(&a, b)?;
            let comps = centralizer_components_matrix(t, &iso)?;
            let stable = comps.contains(st);
            let detail = format!(
                "conjugator component (sigma,tau) = ({:+},{:+}); centralizer meets {}",
                st.0, st.1, comps
            );
            let det = exact::det(&a);
            VerdictBundle {
                alg,
                datum: datum.clone(),
                verdict: NegationVerdict {
                    stable,
                    reason: NegationReason::SOpqComponentCriterion,
                    detail,
                },
                gibbs: gibbs(stable),
                conjugator: Some(a),
                conjugator_det: Some(det),
                sigma_tau: Some(st),
                centralizer: Some(comps),
                note: None,
            }
        }
        _ => return Err(EngineError::UnsupportedFamily(alg.family_name().to_string())),
    };
    Ok(bundle)
}

fn gibbs(stable: bool) -> GibbsVerdict {
    // The element of a standard triple is nonzero by construction.
    crate::orbits::gibbs_from_stability(false, stable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiplicityEntry;
    use crate::engine::isotypic::build_model;
    use crate::engine::triple::complete_standard_triple;
    use crate::engine::AmbientSpace;
    use AlgebraDescriptor::*;

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
    fn sl2_conjugator_is_diag_1_minus_1() {
        let amb = AmbientSpace::standard(SlR { n: 2 }).unwrap();
        let x = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let t = complete_standard_triple(&x, &amb).unwrap();
        let a = build_negation_conjugator(&t).unwrap();
        assert_eq!(a, Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(!bundle.verdict.stable);
        assert_eq!(bundle.conjugator_det.unwrap(), Scalar::from_int(-1));
    }

    #[test]
    fn so21_conjugator_component_separates() {
        let alg = SoR { p: 2, q: 1 };
        let t = build_model(&alg, &datum(&[(2, sig(1, 0))])).unwrap();
        let a = build_negation_conjugator(&t).unwrap();
        assert_eq!(exact::det(&a), Scalar::one());
        let b = t.ambient.form().unwrap();
        assert_eq!(sl2rep::sigma_tau(&a, b).unwrap(), (-1, -1));
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(!bundle.verdict.stable);
        assert_eq!(bundle.sigma_tau, Some((-1, -1)));
        let comps = bundle.centralizer.unwrap();
        assert_eq!(comps, ComponentSet::generated([(1, -1)]));
    }

    #[test]
    fn sp4_split_orbit_has_symplectic_conjugator() {
        let alg = SpR { n: 2 };
        let t = build_model(&alg, &datum(&[(1, sig(1, 1))])).unwrap();
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(bundle.verdict.stable);
        assert_eq!(bundle.gibbs, GibbsVerdict::NoGibbsStates);
        let a = bundle.conjugator.unwrap();
        let b = t.ambient.form().unwrap();
        assert_eq!(&(&a.transpose() * b) * &a, *b);
        assert_eq!(&a * &t.x, -&(&t.x * &a));
    }

    #[test]
    fn sp4_non_split_orbit_has_no_isometric_conjugator() {
        let alg = SpR { n: 2 };
        let t = build_model(&alg, &datum(&[(1, sig(2, 0))])).unwrap();
        assert!(matches!(
            build_negation_conjugator(&t),
            Err(EngineError::NotConjugateInFullGroup { r: 1 })
        ));
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(!bundle.verdict.stable);
        assert_eq!(bundle.gibbs, GibbsVerdict::NotDeterminedByThisCriterion);
    }

    #[test]
    fn sl4_two_even_blocks_are_stable() {
        // Partition [2,2]: diag(1,-1,1,-1) conjugates x to -x with det 1.
        let alg = SlR { n: 4 };
        let t = build_model(&alg, &datum(&[(1, dim(2))])).unwrap();
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(bundle.verdict.stable);
        assert_eq!(bundle.conjugator_det.unwrap().sign().unwrap(), 1);
    }

    #[test]
    fn sl6_blocks_two_and_four_are_not_stable() {
        let alg = SlR { n: 6 };
        let t = build_model(&alg, &datum(&[(1, dim(1)), (3, dim(1))])).unwrap();
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(!bundle.verdict.stable);
    }

    #[test]
    fn sl5_odd_block_fixes_determinant() {
        // Partition [2,3]: the size-2 block alone gives determinant -1 but
        // the odd block supplies a negative-determinant centralizer element.
        let alg = SlR { n: 5 };
        let t = build_model(&alg, &datum(&[(1, dim(1)), (2, dim(1))])).unwrap();
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(bundle.verdict.stable);
        let a = bundle.conjugator.unwrap();
        assert_eq!(exact::det(&a).sign().unwrap(), 1);
        assert_eq!(&a * &t.x, -&(&t.x * &a));
    }

    #[test]
    fn su_negation_flips_non_split_odd_signature() {
        let alg = Su { p: 2, q: 1 };
        let t = build_model(&alg, &datum(&[(1, sig(1, 0)), (0, sig(1, 0))])).unwrap();
        let bundle = decide_negation_matrix(&t).unwrap();
        assert!(!bundle.verdict.stable);
        let t2 = build_model(&Su { p: 2, q: 2 }, &datum(&[(1, sig(1, 1))])).unwrap();
        let bundle2 = decide_negation_matrix(&t2).unwrap();
        assert!(bundle2.verdict.stable);
        let a = bundle2.conjugator.unwrap();
        let b = t2.ambient.form().unwrap();
        assert_eq!(&(&a.conj_transpose() * b) * &a, *b);
    }

    #[test]
    fn rational_sqrt_and_two_squares() {
        let r = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(rational_sqrt(&r).unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(rational_sqrt(&BigRational::new(2.into(), 1.into())).is_none());
        let (x, y) = two_squares(&BigInt::from(25)).unwrap();
        assert_eq!(&x * &x + &y * &y, BigInt::from(25));
        assert!(two_squares(&BigInt::from(3)).is_none());
    }
}
