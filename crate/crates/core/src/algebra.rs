//! Domain vocabulary shared by all modules: algebra families, orbit data
//! and verdicts.
//!
//! A nilpotent orbit of a classical real Lie algebra is recorded by its
//! [`MultiplicityDatum`]: the finite map sending a highest weight `r` to the
//! dimension or signature of the multiplicity space `W_r` carrying the
//! induced form. Which of the two is stored is forced by the family and the
//! parity of `r`. The datum in canonical form (zero entries stripped, keys
//! sorted) is a complete orbit invariant for the full isometry group.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One of the classical real Lie algebra families, with its parameters.
///
/// `SpR { n }` is `sp(2n, R)` (ambient dimension `2n`); `SoStar { n }` is
/// `so*(2n)` (ambient `H^n`); `Complex` stands for any complex semisimple
/// Lie algebra, for which the verdicts are family-level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlgebraDescriptor {
    SlR { n: u32 },
    SoR { p: u32, q: u32 },
    SpR { n: u32 },
    Su { p: u32, q: u32 },
    SlH { n: u32 },
    SpHq { p: u32, q: u32 },
    SoStar { n: u32 },
    Complex,
}

use AlgebraDescriptor::*;

/// Ambient size of the standard representation over the base division
/// algebra: a plain dimension, or a signature when the family carries a
/// definite/indefinite (skew-)Hermitian or symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ambient {
    Dim(u32),
    Sig(u32, u32),
    Unconstrained,
}

/// Entry kind forced by family and parity of `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryKind {
    /// Dimension, any positive value.
    Dim,
    /// Dimension, even positive value (real symplectic multiplicity space).
    DimEven,
    /// Signature `(p_r, q_r)`.
    Sig,
}

impl AlgebraDescriptor {
    pub fn family_name(&self) -> &'static str {
        match self {
            SlR { .. } => "sl_r",
            SoR { .. } => "so_r",
            SpR { .. } => "sp_r",
            Su { .. } => "su",
            SlH { .. } => "sl_h",
            SpHq { .. } => "sp_hq",
            SoStar { .. } => "so_star",
            Complex => "complex",
        }
    }

    pub fn validate(&self) -> Result<(), DatumError> {
        let ok = match *self {
            SlR { n } | SpR { n } | SlH { n } | SoStar { n } => n >= 1,
            SoR { p, q } | Su { p, q } | SpHq { p, q } => p + q >= 1,
            Complex => true,
        };
        if ok {
            Ok(())
        } else {
            Err(DatumError::BadDescriptor(format!("{self}")))
        }
    }

    pub fn ambient(&self) -> Ambient {
        match *self {
            SlR { n } | SlH { n } | SoStar { n } => Ambient::Dim(n),
            SpR { n } => Ambient::Dim(2 * n),
            SoR { p, q } | Su { p, q } | SpHq { p, q } => Ambient::Sig(p, q),
            Complex => Ambient::Unconstrained,
        }
    }

    /// Entry kind at highest weight `r`; `None` marks a family with no
    /// constraint (complex semisimple data are recorded as dimensions).
    pub fn entry_kind(&self, r: u32) -> EntryKind {
        let even = r % 2 == 0;
        match self {
            SlR { .. } | SlH { .. } => EntryKind::Dim,
            Complex => EntryKind::Dim,
            SoR { .. } => {
                if even {
                    EntryKind::Sig
                } else {
                    EntryKind::DimEven
                }
            }
            SpR { .. } => {
                if even {
                    EntryKind::DimEven
                } else {
                    EntryKind::Sig
                }
            }
            Su { .. } => EntryKind::Sig,
            SpHq { .. } => {
                if even {
                    EntryKind::Sig
                } else {
                    EntryKind::Dim
                }
            }
            SoStar { .. } => {
                if even {
                    EntryKind::Dim
                } else {
                    EntryKind::Sig
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("descriptor serialization")
    }

    pub fn from_json(s: &str) -> Result<Self, DatumError> {
        serde_json::from_str(s).map_err(|e| DatumError::Json(e.to_string()))
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SlR { n } => write!(f, "sl({n},R)"),
            SoR { p, q } => write!(f, "so({p},{q},R)"),
            SpR { n } => write!(f, "sp({},R)", 2 * n),
            Su { p, q } => write!(f, "su({p},{q})"),
            SlH { n } => write!(f, "sl({n},H)"),
            SpHq { p, q } => write!(f, "sp({p},{q})"),
            SoStar { n } => write!(f, "so*({})", 2 * n),
            Complex => write!(f, "complex semisimple"),
        }
    }
}

impl Serialize for AlgebraDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let params: &[(&str, u32)] = match *self {
            SlR { n } | SpR { n } | SlH { n } | SoStar { n } => &[("n", n)],
            SoR { p, q } | Su { p, q } | SpHq { p, q } => &[("p", p), ("q", q)],
            Complex => &[],
        };
        let mut st = serializer.serialize_struct("AlgebraDescriptor", 1 + params.len())?;
        st.serialize_field("family", self.family_name())?;
        for (k, v) in params {
            match *k {
                "n" => st.serialize_field("n", v)?,
                "p" => st.serialize_field("p", v)?,
                _ => st.serialize_field("q", v)?,
            }
        }
        st.end()
    }
}

#[derive(Deserialize)]
struct RawDescriptor {
    family: String,
    n: Option<u32>,
    p: Option<u32>,
    q: Option<u32>,
}

impl<'de> Deserialize<'de> for AlgebraDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawDescriptor::deserialize(deserializer)?;
        let need_n = || raw.n.ok_or_else(|| D::Error::custom("missing parameter `n`"));
        let need_pq = || match (raw.p, raw.q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => Err(D::Error::custom("missing parameter `p` or `q`")),
        };
        let alg = match raw.family.as_str() {
            "sl_r" => SlR { n: need_n()? },
            "so_r" => {
                let (p, q) = need_pq()?;
                SoR { p, q }
            }
            "sp_r" => SpR { n: need_n()? },
            "su" => {
                let (p, q) = need_pq()?;
                Su { p, q }
            }
            "sl_h" => SlH { n: need_n()? },
            "sp_hq" => {
                let (p, q) = need_pq()?;
                SpHq { p, q }
            }
            "so_star" => SoStar { n: need_n()? },
            "complex" => Complex,
            other => return Err(D::Error::custom(format!("unknown family `{other}`"))),
        };
        alg.validate().map_err(D::Error::custom)?;
        Ok(alg)
    }
}

/// Size or signature of one multiplicity space `W_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MultiplicityEntry {
    Dim(u32),
    Sig(u32, u32),
}

impl MultiplicityEntry {
    pub fn size(&self) -> u32 {
        match *self {
            MultiplicityEntry::Dim(n) => n,
            MultiplicityEntry::Sig(p, q) => p + q,
        }
    }

    pub fn is_vacuous(&self) -> bool {
        self.size() == 0
    }
}

impl fmt::Display for MultiplicityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MultiplicityEntry::Dim(n) => write!(f, "dim {n}"),
            MultiplicityEntry::Sig(p, q) => write!(f, "sig ({p},{q})"),
        }
    }
}

/// The complete orbit invariant: highest weight `r` mapped to the size or
/// signature of the multiplicity space `W_r`.
///
/// Canonical form: keys sorted (the map is a `BTreeMap`), no vacuous
/// entries. Equality of canonical data is equality of orbits under the full
/// isometry group of the ambient form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiplicityDatum {
    entries: BTreeMap<u32, MultiplicityEntry>,
}

impl MultiplicityDatum {
    /// Builds a canonical datum; vacuous entries are stripped. Panics on a
    /// repeated weight (use [`MultiplicityDatum::try_from_entries`] for
    /// untrusted input).
    pub fn from_entries(entries: impl IntoIterator<Item = (u32, MultiplicityEntry)>) -> Self {
        Self::try_from_entries(entries).expect("duplicate weight in datum")
    }

    pub fn try_from_entries(
        entries: impl IntoIterator<Item = (u32, MultiplicityEntry)>,
    ) -> Result<Self, DatumError> {
        let mut map = BTreeMap::new();
        for (r, e) in entries {
            if e.is_vacuous() {
                continue;
            }
            if map.insert(r, e).is_some() {
                return Err(DatumError::DuplicateWeight { r });
            }
        }
        Ok(MultiplicityDatum { entries: map })
    }

    /// The zero orbit: a single entry at `r = 0` carrying the full ambient
    /// dimension or signature (empty for the unconstrained complex family).
    pub fn zero_orbit(alg: &AlgebraDescriptor) -> Self {
        let entry = match alg.ambient() {
            Ambient::Dim(n) => Some(MultiplicityEntry::Dim(n)),
            Ambient::Sig(p, q) => Some(MultiplicityEntry::Sig(p, q)),
            Ambient::Unconstrained => None,
        };
        MultiplicityDatum::from_entries(entry.map(|e| (0, e)))
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, MultiplicityEntry)> + '_ {
        self.entries.iter().map(|(&r, &e)| (r, e))
    }

    pub fn get(&self, r: u32) -> Option<MultiplicityEntry> {
        self.entries.get(&r).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// True when the datum describes the zero orbit (only trivial modules).
    pub fn is_zero_orbit(&self) -> bool {
        self.entries.keys().all(|&r| r == 0)
    }

    /// The datum of `-x` in terms of the datum of `x`: odd-weight
    /// signatures flip for the families whose odd multiplicity forms change
    /// isometry class under negation; the datum is unchanged otherwise.
    pub fn negate(&self, alg: &AlgebraDescriptor) -> Self {
        match alg {
            SpR { .. } | Su { .. } | SoStar { .. } => MultiplicityDatum {
                entries: self
                    .entries
                    .iter()
                    .map(|(&r, &e)| match e {
                        MultiplicityEntry::Sig(p, q) if r % 2 == 1 => {
                            (r, MultiplicityEntry::Sig(q, p))
                        }
                        other => (r, other),
                    })
                    .collect(),
            },
            _ => self.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("datum serialization")
    }

    pub fn from_json(s: &str) -> Result<Self, DatumError> {
        serde_json::from_str(s).map_err(|e| DatumError::Json(e.to_string()))
    }

    /// Signed-Young-style rendering: one row of length `r + 1` per
    /// multiplicity, alternating signs starting `+` (resp. `-`) for the
    /// positive (resp. negative) part of a signature entry, `*` boxes for
    /// dimension entries. Rows are sorted by decreasing length.
    pub fn young_string(&self) -> String {
        let mut rows: Vec<String> = Vec::new();
        for (&r, &e) in self.entries.iter().rev() {
            let len = (r + 1) as usize;
            let signed = |first: char| -> String {
                (0..len)
                    .map(|i| {
                        let plus = (i % 2 == 0) == (first == '+');
                        if plus {
                            '+'
                        } else {
                            '-'
                        }
                    })
                    .collect()
            };
            match e {
                MultiplicityEntry::Dim(n) => {
                    rows.extend(std::iter::repeat("*".repeat(len)).take(n as usize))
                }
                MultiplicityEntry::Sig(p, q) => {
                    rows.extend(std::iter::repeat(signed('+')).take(p as usize));
                    rows.extend(std::iter::repeat(signed('-')).take(q as usize));
                }
            }
        }
        if rows.is_empty() {
            "0".to_string()
        } else {
            rows.join(" ")
        }
    }
}

impl Serialize for MultiplicityDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Entry<'a>(u32, &'a MultiplicityEntry);
        impl Serialize for Entry<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("Entry", 2)?;
                st.serialize_field("r", &self.0)?;
                match self.1 {
                    MultiplicityEntry::Dim(n) => st.serialize_field("dim", n)?,
                    MultiplicityEntry::Sig(p, q) => st.serialize_field("sig", &[p, q])?,
                }
                st.end()
            }
        }
        struct Entries<'a>(&'a BTreeMap<u32, MultiplicityEntry>);
        impl Serialize for Entries<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (&r, e) in self.0 {
                    seq.serialize_element(&Entry(r, e))?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("MultiplicityDatum", 1)?;
        st.serialize_field("entries", &Entries(&self.entries))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawEntry {
    r: u32,
    dim: Option<u32>,
    sig: Option<[u32; 2]>,
}

#[derive(Deserialize)]
struct RawDatum {
    entries: Vec<RawEntry>,
}

impl<'de> Deserialize<'de> for MultiplicityDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawDatum::deserialize(deserializer)?;
        let mut entries = Vec::with_capacity(raw.entries.len());
        for e in raw.entries {
            let entry = match (e.dim, e.sig) {
                (Some(n), None) => MultiplicityEntry::Dim(n),
                (None, Some([p, q])) => MultiplicityEntry::Sig(p, q),
                _ => {
                    return Err(D::Error::custom(format!(
                        "entry at r={} needs exactly one of `dim` or `sig`",
                        e.r
                    )))
                }
            };
            entries.push((e.r, entry));
        }
        MultiplicityDatum::try_from_entries(entries).map_err(D::Error::custom)
    }
}

/// Why a datum failed validation; the first violated invariant wins.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatumError {
    #[error("invalid algebra descriptor {0}")]
    BadDescriptor(String),
    #[error("duplicate entry for weight r={r}")]
    DuplicateWeight { r: u32 },
    #[error("vacuous entry at r={r} is forbidden in canonical form")]
    VacuousEntry { r: u32 },
    #[error("entry at r={r} must be a {expected} for this family and parity")]
    WrongKind { r: u32, expected: &'static str },
    #[error("dimension at r={r} must be even (the multiplicity form is symplectic)")]
    OddDimension { r: u32 },
    #[error("ambient mismatch: entries sum to {got}, descriptor demands {expected}")]
    AmbientMismatch { expected: String, got: String },
    #[error("family {0} is not supported by this operation")]
    UnsupportedFamily(String),
    #[error("json: {0}")]
    Json(String),
}

/// Accepts iff all datum invariants hold for `alg`: entry kinds forced by
/// family and parity, evenness of symplectic multiplicities, and the
/// ambient dimension/signature bookkeeping.
pub fn validate_datum(alg: &AlgebraDescriptor, d: &MultiplicityDatum) -> Result<(), DatumError> {
    alg.validate()?;
    for (r, e) in d.entries() {
        if e.is_vacuous() {
            return Err(DatumError::VacuousEntry { r });
        }
        match (alg.entry_kind(r), e) {
            (EntryKind::Sig, MultiplicityEntry::Sig(..)) => {}
            (EntryKind::Dim, MultiplicityEntry::Dim(_)) => {}
            (EntryKind::DimEven, MultiplicityEntry::Dim(n)) => {
                if n % 2 != 0 {
                    return Err(DatumError::OddDimension { r });
                }
            }
            (EntryKind::Sig, _) => return Err(DatumError::WrongKind { r, expected: "signature" }),
            (_, _) => return Err(DatumError::WrongKind { r, expected: "dimension" }),
        }
    }
    match alg.ambient() {
        Ambient::Unconstrained => Ok(()),
        Ambient::Dim(n) => {
            let got: u32 = d.entries().map(|(r, e)| (r + 1) * e.size()).sum();
            if got == n {
                Ok(())
            } else {
                Err(DatumError::AmbientMismatch { expected: n.to_string(), got: got.to_string() })
            }
        }
        Ambient::Sig(p, q) => {
            let (gp, gq) = signature_contribution(d);
            if (gp, gq) == (p, q) {
                Ok(())
            } else {
                Err(DatumError::AmbientMismatch {
                    expected: format!("({p},{q})"),
                    got: format!("({gp},{gq})"),
                })
            }
        }
    }
}

/// Total ambient signature contributed by a datum of a signature family.
///
/// An even weight `r = 2m` tensors the fixed form of signature `(m+1, m)`
/// with `(p_r, q_r)`; an odd weight contributes a split block.
fn signature_contribution(d: &MultiplicityDatum) -> (u32, u32) {
    let (mut pos, mut neg) = (0u32, 0u32);
    for (r, e) in d.entries() {
        match e {
            MultiplicityEntry::Sig(p, q) if r % 2 == 0 => {
                let m = r / 2;
                pos += (m + 1) * p + m * q;
                neg += m * p + (m + 1) * q;
            }
            // Odd weights: both the symplectic (dimension) case and the
            // skew-Hermitian (signature of -i*phi_r) case split evenly.
            _ => {
                let half = (r + 1) * e.size() / 2;
                pos += half;
                neg += half;
            }
        }
    }
    (pos, neg)
}

/// Whether an orbit is stable under negation, with the criterion that
/// decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegationVerdict {
    pub stable: bool,
    pub reason: NegationReason,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NegationReason {
    AlwaysStableFamily,
    OddSignaturesSplit,
    OddSignatureNotSplit,
    JordanBlockCriterion,
    #[serde(rename = "so_pq_component_criterion")]
    SOpqComponentCriterion,
    ZeroOrbit,
}

impl fmt::Display for NegationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NegationReason::AlwaysStableFamily => "always_stable_family",
            NegationReason::OddSignaturesSplit => "odd_signatures_split",
            NegationReason::OddSignatureNotSplit => "odd_signature_not_split",
            NegationReason::JordanBlockCriterion => "jordan_block_criterion",
            NegationReason::SOpqComponentCriterion => "so_pq_component_criterion",
            NegationReason::ZeroOrbit => "zero_orbit",
        };
        f.write_str(s)
    }
}

/// What the negation criterion says about Gibbs states on the orbit.
///
/// A nonzero negation-stable orbit has a divergent partition function for
/// every parameter, hence no Gibbs states. The criterion is one-sided:
/// the other branch never claims existence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GibbsVerdict {
    NoGibbsStates,
    #[serde(rename = "not_determined")]
    NotDeterminedByThisCriterion,
}

impl fmt::Display for GibbsVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GibbsVerdict::NoGibbsStates => f.write_str("no_gibbs_states"),
            GibbsVerdict::NotDeterminedByThisCriterion => f.write_str("not_determined"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: u32, q: u32) -> MultiplicityEntry {
        MultiplicityEntry::Sig(p, q)
    }

    fn dim(n: u32) -> MultiplicityEntry {
        MultiplicityEntry::Dim(n)
    }

    #[test]
    fn so21_vector_datum_is_valid() {
        // (m+1)p_r + m q_r = 2 and m p_r + (m+1) q_r = 1 with m = 1.
        let alg = SoR { p: 2, q: 1 };
        let d = MultiplicityDatum::from_entries([(2, sig(1, 0))]);
        assert!(validate_datum(&alg, &d).is_ok());
    }

    #[test]
    fn so21_odd_dimension_must_be_even() {
        let alg = SoR { p: 2, q: 1 };
        let d = MultiplicityDatum::from_entries([(1, dim(1))]);
        assert_eq!(validate_datum(&alg, &d), Err(DatumError::OddDimension { r: 1 }));
    }

    #[test]
    fn empty_datum_fails_ambient_check() {
        let alg = SlR { n: 2 };
        let d = MultiplicityDatum::from_entries([]);
        assert!(matches!(validate_datum(&alg, &d), Err(DatumError::AmbientMismatch { .. })));
    }

    #[test]
    fn zero_orbit_is_valid_everywhere() {
        let algs = [
            SlR { n: 3 },
            SoR { p: 2, q: 2 },
            SpR { n: 2 },
            Su { p: 1, q: 1 },
            SlH { n: 2 },
            SpHq { p: 1, q: 1 },
            SoStar { n: 2 },
        ];
        for alg in algs {
            let d = MultiplicityDatum::zero_orbit(&alg);
            assert!(validate_datum(&alg, &d).is_ok(), "{alg}");
            assert!(d.is_zero_orbit());
        }
    }

    #[test]
    fn canonical_json_shapes() {
        let alg = SoR { p: 2, q: 1 };
        assert_eq!(alg.to_json(), r#"{"family":"so_r","p":2,"q":1}"#);
        let d = MultiplicityDatum::from_entries([(2, sig(1, 0))]);
        assert_eq!(d.to_json(), r#"{"entries":[{"r":2,"sig":[1,0]}]}"#);
        let d2 = MultiplicityDatum::from_entries([(0, dim(3))]);
        assert_eq!(d2.to_json(), r#"{"entries":[{"r":0,"dim":3}]}"#);
        assert_eq!(MultiplicityDatum::from_json(&d.to_json()).unwrap(), d);
        assert_eq!(AlgebraDescriptor::from_json(&alg.to_json()).unwrap(), alg);
    }

    #[test]
    fn negate_flips_only_odd_signatures_of_split_families() {
        let d = MultiplicityDatum::from_entries([(1, sig(2, 1)), (2, sig(1, 1))]);
        let n = d.negate(&SpR { n: 4 });
        assert_eq!(n.get(1), Some(sig(1, 2)));
        assert_eq!(n.get(2), Some(sig(1, 1)));
        assert_eq!(d.negate(&SoR { p: 4, q: 4 }), d);
    }

    #[test]
    fn young_rendering() {
        let d = MultiplicityDatum::from_entries([(2, sig(1, 1)), (1, dim(2))]);
        assert_eq!(d.young_string(), "+-+ -+- ** **");
    }
}
