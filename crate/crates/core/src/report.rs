//! Canonical report shapes shared by the command line tool and the
//! language bindings: classification rows and the matrix-check bundle,
//! with byte-stable JSON encodings (fixed field order, sorted entries,
//! canonical scalar rendering).

use serde::{Deserialize, Serialize};

use crate::algebra::{
    AlgebraDescriptor, DatumError, GibbsVerdict, MultiplicityDatum, NegationReason,
};
use crate::engine::{self, EngineError};
use crate::exact::{Matrix, Scalar};
use crate::orbits;

#[derive(Debug, Clone, thiserror::Error)]
pub enum ReportError {
    /// Malformed or invalid input.
    #[error("{0}")]
    Invalid(String),
    /// A cross-check inside the pipeline failed.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

impl From<DatumError> for ReportError {
    fn from(e: DatumError) -> Self {
        ReportError::Invalid(e.to_string())
    }
}

impl From<EngineError> for ReportError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::Internal(_) => ReportError::Internal(e.to_string()),
            other => ReportError::Invalid(other.to_string()),
        }
    }
}

/// One classified orbit datum.
#[derive(Debug, Serialize)]
pub struct OrbitRow {
    pub alg: AlgebraDescriptor,
    pub datum: MultiplicityDatum,
    pub stable: bool,
    pub reason: NegationReason,
    pub detail: String,
    pub gibbs: GibbsVerdict,
}

impl OrbitRow {
    pub fn new(alg: AlgebraDescriptor, datum: MultiplicityDatum) -> Result<Self, ReportError> {
        let verdict = orbits::negation_stable(&alg, &datum)?;
        let gibbs = orbits::gibbs_verdict(&alg, &datum)?;
        Ok(OrbitRow {
            alg,
            datum,
            stable: verdict.stable,
            reason: verdict.reason,
            detail: verdict.detail,
            gibbs,
        })
    }
}

/// All orbit data of an algebra, classified.
pub fn enumerate_rows(alg: AlgebraDescriptor) -> Result<Vec<OrbitRow>, ReportError> {
    orbits::enumerate_orbit_data(&alg)?
        .into_iter()
        .map(|d| OrbitRow::new(alg, d))
        .collect()
}

/// Input of the matrix pipeline: an algebra and a square matrix of scalar
/// literals, read against the standard ambient form of the family.
#[derive(Deserialize)]
pub struct MatrixCheckInput {
    pub alg: AlgebraDescriptor,
    pub matrix: Vec<Vec<String>>,
}

pub fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix, ReportError> {
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows.len()) {
        return Err(ReportError::Invalid("matrix must be square and nonempty".to_string()));
    }
    let mut parsed: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(
                cell.parse::<Scalar>().map_err(|e| ReportError::Invalid(e.to_string()))?,
            );
        }
        parsed.push(out);
    }
    Ok(Matrix::from_rows(parsed))
}

pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| m.at(r, c).to_string()).collect()).collect()
}

/// The matrix-check verdict bundle in its wire shape.
#[derive(Debug, Serialize)]
pub struct BundleReport {
    pub alg: AlgebraDescriptor,
    pub datum: MultiplicityDatum,
    pub stable: bool,
    pub reason: NegationReason,
    pub detail: String,
    pub gibbs: GibbsVerdict,
    pub combinatorial_agrees: bool,
    pub conjugator: Option<Vec<Vec<String>>>,
    pub conjugator_det: Option<String>,
    pub sigma_tau: Option<(i8, i8)>,
    pub centralizer_components: Option<Vec<(i8, i8)>>,
    pub note: Option<String>,
}

/// Runs the full matrix pipeline on an input document: completion,
/// extraction, the independent negation decision, and the agreement check
/// against the combinatorial criterion.
pub fn matrix_check(input_json: &str) -> Result<BundleReport, ReportError> {
    let input: MatrixCheckInput = serde_json::from_str(input_json)
        .map_err(|e| ReportError::Invalid(format!("bad input json: {e}")))?;
    let x = parse_matrix(&input.matrix)?;
    let ambient = engine::AmbientSpace::standard(input.alg)?;
    let triple = engine::complete_standard_triple(&x, &ambient)?;
    let bundle = engine::decide_negation_matrix(&triple)?;
    let combinatorial = orbits::negation_stable(&input.alg, &bundle.datum)?;
    if combinatorial.stable != bundle.verdict.stable {
        return Err(ReportError::Internal(format!(
            "matrix verdict ({}) disagrees with the combinatorial criterion ({}) on {}",
            bundle.verdict.stable,
            combinatorial.stable,
            bundle.datum.to_json(),
        )));
    }
    Ok(BundleReport {
        alg: input.alg,
        datum: bundle.datum,
        stable: bundle.verdict.stable,
        reason: bundle.verdict.reason,
        detail: bundle.verdict.detail,
        gibbs: bundle.gibbs,
        combinatorial_agrees: true,
        conjugator: bundle.conjugator.as_ref().map(matrix_to_strings),
        conjugator_det: bundle.conjugator_det.as_ref().map(|d| d.to_string()),
        sigma_tau: bundle.sigma_tau,
        centralizer_components: bundle.centralizer.as_ref().map(|c| c.elements().collect()),
        note: bundle.note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_check_pipeline_end_to_end() {
        let out = matrix_check(
            r#"{"alg":{"family":"sl_r","n":2},"matrix":[["0","1"],["0","0"]]}"#,
        )
        .unwrap();
        assert!(!out.stable);
        assert!(out.combinatorial_agrees);
        assert_eq!(out.conjugator_det.as_deref(), Some("-1"));
        let err = matrix_check(
            r#"{"alg":{"family":"sl_r","n":2},"matrix":[["0","0"],["0","0"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, ReportError::Invalid(_)));
    }
}
