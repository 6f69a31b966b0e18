//! Combinatorial layer: enumerate all orbit data of a descriptor and decide
//! negation stability and the Gibbs verdict from the multiplicity datum
//! alone. The matrix engine re-derives the same verdicts independently.

use std::collections::BTreeSet;

use crate::algebra::{
    validate_datum, AlgebraDescriptor, Ambient, DatumError, EntryKind, GibbsVerdict,
    MultiplicityDatum, MultiplicityEntry, NegationReason, NegationVerdict,
};

/// Subset of the four-group `{±1} x {±1}` met by a centralizer inside
/// `O(p,q,R)`; always a subgroup containing `(1,1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentSet(BTreeSet<(i8, i8)>);

impl ComponentSet {
    pub fn trivial() -> Self {
        ComponentSet([(1, 1)].into_iter().collect())
    }

    /// Subgroup generated by the given elements.
    pub fn generated(generators: impl IntoIterator<Item = (i8, i8)>) -> Self {
        let mut set: BTreeSet<(i8, i8)> = [(1, 1)].into_iter().collect();
        for g in generators {
            assert!(g.0.abs() == 1 && g.1.abs() == 1);
            let products: Vec<_> = set.iter().map(|&(s, t)| (s * g.0, t * g.1)).collect();
            set.extend(products);
        }
        ComponentSet(set)
    }

    pub fn contains(&self, st: (i8, i8)) -> bool {
        self.0.contains(&st)
    }

    pub fn elements(&self) -> impl Iterator<Item = (i8, i8)> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl std::fmt::Display for ComponentSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|(s, t)| format!("({s:+},{t:+})")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Enumerates the canonical multiplicity data of all nilpotent orbits of
/// `alg` (the zero orbit included), sorted lexicographically.
pub fn enumerate_orbit_data(
    alg: &AlgebraDescriptor,
) -> Result<Vec<MultiplicityDatum>, DatumError> {
    alg.validate()?;
    let ambient = match alg.ambient() {
        Ambient::Unconstrained => {
            return Err(DatumError::UnsupportedFamily(alg.family_name().to_string()))
        }
        other => other,
    };
    let r_max = match ambient {
        Ambient::Dim(n) => n - 1,
        Ambient::Sig(p, q) => p + q - 1,
        Ambient::Unconstrained => unreachable!(),
    };
    let mut out = Vec::new();
    let mut stack: Vec<(u32, MultiplicityEntry)> = Vec::new();
    search(alg, ambient, r_max as i64, &mut stack, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|d| validate_datum(alg, d).is_ok()));
    Ok(out)
}

fn search(
    alg: &AlgebraDescriptor,
    budget: Ambient,
    r: i64,
    stack: &mut Vec<(u32, MultiplicityEntry)>,
    out: &mut Vec<MultiplicityDatum>,
) {
    let exhausted = match budget {
        Ambient::Dim(n) => n == 0,
        Ambient::Sig(p, q) => p == 0 && q == 0,
        Ambient::Unconstrained => unreachable!(),
    };
    if r < 0 {
        if exhausted {
            out.push(MultiplicityDatum::from_entries(stack.iter().copied()));
        }
        return;
    }
    // Entry absent at this weight.
    search(alg, budget, r - 1, stack, out);
    let r = r as u32;
    match (alg.entry_kind(r), budget) {
        (EntryKind::Dim, Ambient::Dim(n)) => {
            for k in 1..=n / (r + 1) {
                stack.push((r, MultiplicityEntry::Dim(k)));
                search(alg, Ambient::Dim(n - (r + 1) * k), r as i64 - 1, stack, out);
                stack.pop();
            }
        }
        (EntryKind::DimEven, Ambient::Dim(n)) => {
            let mut k = 2;
            while (r + 1) * k <= n {
                stack.push((r, MultiplicityEntry::Dim(k)));
                search(alg, Ambient::Dim(n - (r + 1) * k), r as i64 - 1, stack, out);
                stack.pop();
                k += 2;
            }
        }
        (EntryKind::Sig, Ambient::Dim(n)) => {
            // Quaternionic Hermitian multiplicities inside a skew-Hermitian
            // ambient (so*(2n)): only the total size is constrained.
            for total in 1..=n / (r + 1) {
                for p in 0..=total {
                    stack.push((r, MultiplicityEntry::Sig(p, total - p)));
                    search(alg, Ambient::Dim(n - (r + 1) * total), r as i64 - 1, stack, out);
                    stack.pop();
                }
            }
        }
        (EntryKind::DimEven, Ambient::Sig(p, q)) => {
            // Real symplectic multiplicity space at odd weight: contributes
            // a split block of size (r+1) n_r / 2 on each side.
            let mut k = 2;
            while (r + 1) * k / 2 <= p.min(q) {
                let half = (r + 1) * k / 2;
                stack.push((r, MultiplicityEntry::Dim(k)));
                search(alg, Ambient::Sig(p - half, q - half), r as i64 - 1, stack, out);
                stack.pop();
                k += 2;
            }
        }
        (EntryKind::Dim, Ambient::Sig(p, q)) => {
            // Quaternionic skew-Hermitian multiplicity at odd weight
            // (sp(p,q)): split contribution, any positive size.
            let mut k = 1;
            while (r + 1) * k / 2 <= p.min(q) {
                let half = (r + 1) * k / 2;
                stack.push((r, MultiplicityEntry::Dim(k)));
                search(alg, Ambient::Sig(p - half, q - half), r as i64 - 1, stack, out);
                stack.pop();
                k += 1;
            }
        }
        (_, Ambient::Unconstrained) => unreachable!(),
        (EntryKind::Sig, Ambient::Sig(p, q)) => {
            if r % 2 == 0 {
                let m = r / 2;
                for pr in 0..=p {
                    for qr in 0..=q {
                        if pr + qr == 0 {
                            continue;
                        }
                        let cp = (m + 1) * pr + m * qr;
                        let cq = m * pr + (m + 1) * qr;
                        if cp > p || cq > q {
                            continue;
                        }
                        stack.push((r, MultiplicityEntry::Sig(pr, qr)));
                        search(alg, Ambient::Sig(p - cp, q - cq), r as i64 - 1, stack, out);
                        stack.pop();
                    }
                }
            } else {
                // Odd weight of su(p,q): the skew-Hermitian multiplicity
                // form contributes a split block of size (r+1)(p_r+q_r)/2.
                for total in 1.. {
                    let half = (r + 1) * total / 2;
                    if half > p.min(q) {
                        break;
                    }
                    for pr in 0..=total {
                        stack.push((r, MultiplicityEntry::Sig(pr, total - pr)));
                        search(alg, Ambient::Sig(p - half, q - half), r as i64 - 1, stack, out);
                        stack.pop();
                    }
                }
            }
        }
    }
}

/// Decides `O = -O` from the datum.
///
/// - `sl(n,R)`: stable iff some Jordan block has odd size, or the number of
///   blocks of size `== 2 mod 4` is even (sizes are `r + 1`).
/// - `sp(p,q)`, `sl(n,H)`, complex semisimple: always stable.
/// - `sp(2n,R)`, `su(p,q)`, `so*(2n)`: stable iff every odd-weight
///   signature is split.
/// - `so(p,q,R)`: unstable iff the component parity sum
///   `sum n_{8k+4} + n_{8k+2} + n_{4k+1}/2` is odd while the centralizer
///   misses half the components (all `q_{4k} = p_{4k+2} = 0`, or all
///   `p_{4k} = q_{4k+2} = 0`).
pub fn negation_stable(
    alg: &AlgebraDescriptor,
    d: &MultiplicityDatum,
) -> Result<NegationVerdict, DatumError> {
    validate_datum(alg, d)?;
    if d.is_zero_orbit() {
        return Ok(NegationVerdict {
            stable: true,
            reason: NegationReason::ZeroOrbit,
            detail: "the zero orbit is fixed by negation".to_string(),
        });
    }
    use AlgebraDescriptor::*;
    let verdict = match alg {
        SlH { .. } | SpHq { .. } | Complex => NegationVerdict {
            stable: true,
            reason: NegationReason::AlwaysStableFamily,
            detail: format!("every nilpotent orbit of {alg} is stable under negation"),
        },
        SlR { .. } => sl_r_verdict(d),
        SpR { .. } | Su { .. } | SoStar { .. } => split_family_verdict(d),
        SoR { .. } => so_pq_verdict(d),
    };
    Ok(verdict)
}

fn sl_r_verdict(d: &MultiplicityDatum) -> NegationVerdict {
    let has_odd_block = d.entries().any(|(r, _)| r % 2 == 0);
    let two_mod_four: u32 = d
        .entries()
        .filter(|(r, _)| r % 4 == 1)
        .map(|(_, e)| e.size())
        .sum();
    if has_odd_block {
        NegationVerdict {
            stable: true,
            reason: NegationReason::JordanBlockCriterion,
            detail: "an odd-size Jordan block admits a negative-determinant centralizer element"
                .to_string(),
        }
    } else if two_mod_four % 2 == 0 {
        NegationVerdict {
            stable: true,
            reason: NegationReason::JordanBlockCriterion,
            detail: format!(
                "all blocks even and {two_mod_four} blocks of size == 2 mod 4: the negation map has determinant +1"
            ),
        }
    } else {
        NegationVerdict {
            stable: false,
            reason: NegationReason::JordanBlockCriterion,
            detail: format!(
                "all blocks even and {two_mod_four} blocks of size == 2 mod 4: every conjugator onto -x has determinant -1"
            ),
        }
    }
}

fn split_family_verdict(d: &MultiplicityDatum) -> NegationVerdict {
    let offender = d.entries().find_map(|(r, e)| match e {
        MultiplicityEntry::Sig(p, q) if r % 2 == 1 && p != q => Some((r, p, q)),
        _ => None,
    });
    match offender {
        None => NegationVerdict {
            stable: true,
            reason: NegationReason::OddSignaturesSplit,
            detail: "every odd-weight multiplicity form has split signature".to_string(),
        },
        Some((r, p, q)) => NegationVerdict {
            stable: false,
            reason: NegationReason::OddSignatureNotSplit,
            detail: format!("odd weight r={r} carries signature ({p},{q}) != split"),
        },
    }
}

/// Dimension of `W_r` regardless of how the entry is stored.
fn n_r(e: MultiplicityEntry) -> u32 {
    e.size()
}

fn so_pq_parity(d: &MultiplicityDatum) -> u32 {
    let mut sum = 0u32;
    for (r, e) in d.entries() {
        match r % 8 {
            2 | 4 => sum += n_r(e),
            _ => {}
        }
        if r % 4 == 1 {
            sum += n_r(e) / 2;
        }
    }
    sum % 2
}

fn so_pq_cond_one(d: &MultiplicityDatum) -> bool {
    d.entries().all(|(r, e)| match e {
        MultiplicityEntry::Sig(p, q) => {
            let ok_q = r % 4 != 0 || q == 0;
            let ok_p = r % 4 != 2 || p == 0;
            ok_q && ok_p
        }
        _ => true,
    })
}

fn so_pq_cond_two(d: &MultiplicityDatum) -> bool {
    d.entries().all(|(r, e)| match e {
        MultiplicityEntry::Sig(p, q) => {
            let ok_p = r % 4 != 0 || p == 0;
            let ok_q = r % 4 != 2 || q == 0;
            ok_p && ok_q
        }
        _ => true,
    })
}

fn so_pq_verdict(d: &MultiplicityDatum) -> NegationVerdict {
    let parity = so_pq_parity(d);
    let halved = so_pq_cond_one(d) || so_pq_cond_two(d);
    let stable = !(parity == 1 && halved);
    let detail = format!(
        "component parity sum = {parity} mod 2; centralizer meets {} components",
        if d.entries().all(|(r, _)| r % 2 == 1) {
            "only the identity"
        } else if halved {
            "two"
        } else {
            "all four"
        }
    );
    NegationVerdict { stable, reason: NegationReason::SOpqComponentCriterion, detail }
}

/// One-sided Gibbs criterion: a nonzero negation-stable orbit admits no
/// Gibbs states; nothing is claimed otherwise.
pub fn gibbs_verdict(
    alg: &AlgebraDescriptor,
    d: &MultiplicityDatum,
) -> Result<GibbsVerdict, DatumError> {
    let verdict = negation_stable(alg, d)?;
    Ok(gibbs_from_stability(d.is_zero_orbit(), verdict.stable))
}

/// The Gibbs consequence of a stability decision for a (non)zero orbit.
pub fn gibbs_from_stability(zero_orbit: bool, stable: bool) -> GibbsVerdict {
    if !zero_orbit && stable {
        GibbsVerdict::NoGibbsStates
    } else {
        GibbsVerdict::NotDeterminedByThisCriterion
    }
}

/// Components of `O(p,q,R)` met by the centralizer of a nilpotent element
/// with datum `d`, via the image rules: `sigma` reaches `-1` iff some even
/// weight `2m` has `p_{2m} >= 1` with `m` even or `q_{2m} >= 1` with `m`
/// odd; `tau` is the mirror image.
pub fn centralizer_components(d: &MultiplicityDatum) -> Result<ComponentSet, DatumError> {
    let mut sigma_hit = false;
    let mut tau_hit = false;
    for (r, e) in d.entries() {
        if r % 2 != 0 {
            match e {
                MultiplicityEntry::Dim(_) => continue,
                MultiplicityEntry::Sig(..) => {
                    return Err(DatumError::WrongKind { r, expected: "dimension" })
                }
            }
        }
        let MultiplicityEntry::Sig(p, q) = e else {
            return Err(DatumError::WrongKind { r, expected: "signature" });
        };
        let m_even = (r / 2) % 2 == 0;
        if (m_even && p >= 1) || (!m_even && q >= 1) {
            sigma_hit = true;
        }
        if (m_even && q >= 1) || (!m_even && p >= 1) {
            tau_hit = true;
        }
    }
    let mut generators = Vec::new();
    if sigma_hit {
        generators.push((-1, 1));
    }
    if tau_hit {
        generators.push((1, -1));
    }
    Ok(ComponentSet::generated(generators))
}

/// One row of the summary table: the stability condition of a family as
/// text, together with an evaluator kept deliberately separate from
/// [`negation_stable`] so that the two can be cross-checked.
pub struct Table1Row {
    pub family: &'static str,
    pub condition: &'static str,
    eval: fn(&MultiplicityDatum) -> bool,
}

impl Table1Row {
    /// Evaluates the row's condition: `true` means `O = -O`.
    pub fn stable(&self, d: &MultiplicityDatum) -> bool {
        if d.is_zero_orbit() {
            return true;
        }
        (self.eval)(d)
    }
}

fn table_split(d: &MultiplicityDatum) -> bool {
    d.entries().all(|(r, e)| match e {
        MultiplicityEntry::Sig(p, q) if r % 2 == 1 => p == q,
        _ => true,
    })
}

/// The per-family stability conditions, machine-evaluable.
pub fn table1_rows() -> Vec<Table1Row> {
    vec![
        Table1Row {
            family: "sl_r",
            condition: "exists r even with n_r != 0, or sum of n_r over r == 1 mod 4 is even",
            eval: |d| {
                d.entries().any(|(r, _)| r % 2 == 0)
                    || d.entries()
                        .filter(|(r, _)| r % 4 == 1)
                        .map(|(_, e)| e.size())
                        .sum::<u32>()
                        % 2
                        == 0
            },
        },
        Table1Row {
            family: "so_r",
            condition: "[(exists k: q_{4k} != 0 or p_{4k+2} != 0) and (exists k: p_{4k} != 0 or \
                        q_{4k+2} != 0)] or sum n_{8k+2} + n_{8k+4} + n_{4k+1}/2 == 0 mod 2",
            eval: |d| {
                let sig = |r: u32| match d.get(r) {
                    Some(MultiplicityEntry::Sig(p, q)) => (p, q),
                    _ => (0, 0),
                };
                let max = d.max_weight().unwrap_or(0);
                let first = (0..=max).step_by(4).any(|r| sig(r).1 != 0)
                    || (2..=max).step_by(4).any(|r| sig(r).0 != 0);
                let second = (0..=max).step_by(4).any(|r| sig(r).0 != 0)
                    || (2..=max).step_by(4).any(|r| sig(r).1 != 0);
                (first && second) || so_pq_parity(d) == 0
            },
        },
        Table1Row { family: "sl_h", condition: "always", eval: |_| true },
        Table1Row { family: "sp_hq", condition: "always", eval: |_| true },
        Table1Row {
            family: "sp_r",
            condition: "for every odd r, p_r = q_r",
            eval: table_split,
        },
        Table1Row {
            family: "su",
            condition: "for every odd r, -i phi_r has split signature (p_r = q_r)",
            eval: table_split,
        },
        Table1Row {
            family: "so_star",
            condition: "for every odd r, p_r = q_r",
            eval: table_split,
        },
        Table1Row { family: "complex", condition: "always", eval: |_| true },
    ]
}

pub fn table1_row(alg: &AlgebraDescriptor) -> Table1Row {
    table1_rows()
        .into_iter()
        .find(|row| row.family == alg.family_name())
        .expect("every family has a table row")
}

#[cfg(test)]
mod tests {
    use super::*;
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
    fn enumerate_sp2_r() {
        let data = enumerate_orbit_data(&SpR { n: 1 }).unwrap();
        assert_eq!(
            data,
            vec![
                datum(&[(0, dim(2))]),
                datum(&[(1, sig(0, 1))]),
                datum(&[(1, sig(1, 0))]),
            ]
        );
    }

    #[test]
    fn enumerate_so21() {
        let data = enumerate_orbit_data(&SoR { p: 2, q: 1 }).unwrap();
        assert_eq!(data, vec![datum(&[(0, sig(2, 1))]), datum(&[(2, sig(1, 0))])]);
    }

    #[test]
    fn enumerate_sl2_partitions() {
        let data = enumerate_orbit_data(&SlR { n: 2 }).unwrap();
        assert_eq!(data, vec![datum(&[(0, dim(2))]), datum(&[(1, dim(1))])]);
    }

    /// p(n) by the pentagonal recurrence, used as an independent count.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0u64; n + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i as i64 {
                    break;
                }
                let sign = if k % 2 == 0 { -1i64 } else { 1 };
                let mut term = p[i - g1 as usize] as i64;
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i as i64 {
                    term += p[i - g2 as usize] as i64;
                }
                p[i] = (p[i] as i64 + sign * term) as u64;
                k += 1;
            }
        }
        p[n]
    }

    #[test]
    fn sl_r_enumeration_counts_partitions() {
        for n in 1..=8u32 {
            let data = enumerate_orbit_data(&SlR { n }).unwrap();
            assert_eq!(data.len() as u64, partition_count(n as usize), "n={n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let algs: Vec<AlgebraDescriptor> = vec![
            SlR { n: 5 },
            SoR { p: 3, q: 2 },
            SpR { n: 3 },
            Su { p: 2, q: 2 },
            SlH { n: 3 },
            SpHq { p: 2, q: 1 },
            SoStar { n: 3 },
        ];
        for alg in algs {
            let data = enumerate_orbit_data(&alg).unwrap();
            let mut sorted = data.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(data, sorted, "{alg}");
            for d in &data {
                validate_datum(&alg, d).unwrap();
            }
            assert!(data.iter().any(|d| d.is_zero_orbit()), "{alg}");
        }
    }

    #[test]
    fn perturbed_data_fail_validation() {
        let algs: Vec<AlgebraDescriptor> =
            vec![SlR { n: 4 }, SoR { p: 2, q: 2 }, SpR { n: 2 }, Su { p: 2, q: 1 }];
        for alg in algs {
            for d in enumerate_orbit_data(&alg).unwrap() {
                for (r, e) in d.entries() {
                    let variants: Vec<MultiplicityEntry> = match e {
                        MultiplicityEntry::Dim(n) => {
                            vec![MultiplicityEntry::Dim(n + 1), MultiplicityEntry::Dim(n - 1)]
                        }
                        MultiplicityEntry::Sig(p, q) => vec![
                            MultiplicityEntry::Sig(p + 1, q),
                            MultiplicityEntry::Sig(p.wrapping_sub(1).min(p), q),
                            MultiplicityEntry::Sig(p, q + 1),
                            MultiplicityEntry::Sig(p, q.wrapping_sub(1).min(q)),
                        ],
                    };
                    for v in variants {
                        if v == e {
                            continue;
                        }
                        let perturbed = MultiplicityDatum::from_entries(
                            d.entries().map(|(rr, ee)| if rr == r { (rr, v) } else { (rr, ee) }),
                        );
                        assert!(
                            validate_datum(&alg, &perturbed).is_err(),
                            "{alg} r={r} {v:?} should fail"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn sl_r_criterion_examples() {
        // Single block of size 2: the two-cone picture, not stable.
        let v = negation_stable(&SlR { n: 2 }, &datum(&[(1, dim(1))])).unwrap();
        assert!(!v.stable);
        assert_eq!(v.reason, NegationReason::JordanBlockCriterion);
        // Single block of size 3: stable.
        assert!(negation_stable(&SlR { n: 3 }, &datum(&[(2, dim(1))])).unwrap().stable);
        // Two blocks of size 2: diag(1,-1,1,-1) conjugates x to -x inside SL(4,R).
        assert!(negation_stable(&SlR { n: 4 }, &datum(&[(1, dim(2))])).unwrap().stable);
        // Blocks 2 and 4: all even, one block of size == 2 mod 4.
        assert!(!negation_stable(&SlR { n: 6 }, &datum(&[(1, dim(1)), (3, dim(1))]))
            .unwrap()
            .stable);
        // Single block of size 4: stable.
        assert!(negation_stable(&SlR { n: 4 }, &datum(&[(3, dim(1))])).unwrap().stable);
    }

    #[test]
    fn split_family_examples() {
        let v = negation_stable(&SpR { n: 2 }, &datum(&[(1, sig(1, 1))])).unwrap();
        assert!(v.stable);
        assert_eq!(v.reason, NegationReason::OddSignaturesSplit);
        let v = negation_stable(&Su { p: 1, q: 1 }, &datum(&[(1, sig(1, 0))])).unwrap();
        assert!(!v.stable);
        assert_eq!(v.reason, NegationReason::OddSignatureNotSplit);
        let v = negation_stable(&SpHq { p: 1, q: 1 }, &datum(&[(1, dim(1))])).unwrap();
        assert!(v.stable);
        assert_eq!(v.reason, NegationReason::AlwaysStableFamily);
    }

    #[test]
    fn so21_vector_orbit_is_unstable() {
        let v = negation_stable(&SoR { p: 2, q: 1 }, &datum(&[(2, sig(1, 0))])).unwrap();
        assert!(!v.stable);
        assert_eq!(v.reason, NegationReason::SOpqComponentCriterion);
    }

    #[test]
    fn gibbs_examples() {
        let alg = SpHq { p: 1, q: 1 };
        let d = datum(&[(1, dim(1))]);
        assert_eq!(gibbs_verdict(&alg, &d).unwrap(), GibbsVerdict::NoGibbsStates);
        let alg = SlR { n: 2 };
        let d = datum(&[(1, dim(1))]);
        assert_eq!(gibbs_verdict(&alg, &d).unwrap(), GibbsVerdict::NotDeterminedByThisCriterion);
        let zero = MultiplicityDatum::zero_orbit(&alg);
        assert_eq!(
            gibbs_verdict(&alg, &zero).unwrap(),
            GibbsVerdict::NotDeterminedByThisCriterion
        );
    }

    #[test]
    fn centralizer_component_examples() {
        // Purely odd data centralize inside the identity component.
        let c = centralizer_components(&datum(&[(1, dim(2))])).unwrap();
        assert_eq!(c, ComponentSet::trivial());
        // so(2,1) vector orbit: {1} x {+-1}.
        let c = centralizer_components(&datum(&[(2, sig(1, 0))])).unwrap();
        assert_eq!(c, ComponentSet::generated([(1, -1)]));
        // Mixed weights 0 and 2 reach all four components.
        let c = centralizer_components(&datum(&[(0, sig(1, 0)), (2, sig(1, 0))])).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn involution_consistency() {
        let algs: Vec<AlgebraDescriptor> = vec![
            SlR { n: 5 },
            SoR { p: 3, q: 2 },
            SpR { n: 3 },
            Su { p: 2, q: 2 },
            SlH { n: 3 },
            SpHq { p: 2, q: 2 },
            SoStar { n: 3 },
        ];
        for alg in algs {
            for d in enumerate_orbit_data(&alg).unwrap() {
                let nd = d.negate(&alg);
                validate_datum(&alg, &nd).unwrap();
                let v = negation_stable(&alg, &d).unwrap();
                let nv = negation_stable(&alg, &nd).unwrap();
                assert_eq!(v.stable, nv.stable, "{alg} {d:?}");
                if matches!(alg, SpR { .. } | Su { .. } | SoStar { .. }) {
                    assert_eq!(v.stable, nd == d, "{alg} {d:?}");
                }
            }
        }
    }

    #[test]
    fn table1_agrees_with_criterion_code() {
        let algs: Vec<AlgebraDescriptor> = vec![
            SlR { n: 6 },
            SoR { p: 3, q: 3 },
            SpR { n: 3 },
            Su { p: 2, q: 2 },
            SlH { n: 3 },
            SpHq { p: 2, q: 2 },
            SoStar { n: 3 },
        ];
        for alg in algs {
            let row = table1_row(&alg);
            for d in enumerate_orbit_data(&alg).unwrap() {
                let v = negation_stable(&alg, &d).unwrap();
                assert_eq!(row.stable(&d), v.stable, "{alg} {d:?}");
            }
        }
    }
}
