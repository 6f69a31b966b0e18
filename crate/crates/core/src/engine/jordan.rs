//! Jordan chain bases of nilpotent matrices and the resulting gl-level
//! triples.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{self, Matrix, Scalar};
use crate::engine::EngineError;

/// A Jordan chain basis of a nilpotent matrix: chain `c` is
/// `v, x v, ..., x^(h-1) v` for a top vector `v` of height `h`.
pub struct JordanData {
    /// Chain vectors, ordered top first.
    pub chains: Vec<Vec<Matrix>>,
    /// Change of basis: column `i` is the `i`-th chain vector.
    pub basis: Matrix,
}

impl JordanData {
    pub fn heights(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.len()).collect()
    }
}

fn rank_with(cols: &[Matrix], extra: Option<&Matrix>) -> usize {
    let n = if let Some(e) = extra { e.rows() } else { cols[0].rows() };
    let total = cols.len() + extra.is_some() as usize;
    let m = Matrix::from_fn(n, total, |r, c| {
        if c < cols.len() { cols[c].at(r, 0).clone() } else { extra.unwrap().at(r, 0).clone() }
    });
    exact::rank(&m)
}

/// Computes a Jordan chain basis. A seed shuffles the candidate order so
/// that independent runs can make different (equally valid) choices.
pub fn jordan_chains(x: &Matrix, seed: Option<u64>) -> Result<JordanData, EngineError> {
    let n = x.rows();
    assert!(x.is_square());
    if x.is_zero() {
        return Err(EngineError::ZeroElement);
    }
    let mut powers = vec![Matrix::identity(n)];
    while !powers.last().unwrap().is_zero() {
        powers.push(powers.last().unwrap() * x);
        if powers.len() > n + 1 {
            return Err(EngineError::NotNilpotent);
        }
    }
    let s = powers.len() - 1; // nilpotency index: x^s = 0, x^(s-1) != 0
    let kernel_of = |j: usize| -> Vec<Matrix> {
        if j >= s {
            (0..n).map(|i| Matrix::identity(n).column_vec(i)).collect()
        } else {
            exact::kernel_basis(&powers[j])
        }
    };
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut tops: Vec<(Matrix, usize)> = Vec::new();
    for j in (1..=s).rev() {
        // Vectors the taller chains already contribute at height j.
        let mut spanned: Vec<Matrix> = kernel_of(j - 1);
        for (top, h) in &tops {
            if *h > j {
                spanned.push(&powers[h - j] * top);
            }
        }
        let mut candidates = kernel_of(j);
        if let Some(rng) = rng.as_mut() {
            candidates.shuffle(rng);
            // A few small combinations widen the choice beyond the
            // reduced-echelon basis.
            let extra: Vec<Matrix> = candidates
                .windows(2)
                .map(|w| &w[0] + &w[1])
                .collect();
            candidates.splice(0..0, extra);
        }
        let mut cur = rank_with(&spanned, None);
        for cand in candidates {
            if rank_with(&spanned, Some(&cand)) > cur {
                spanned.push(cand.clone());
                tops.push((cand, j));
                cur += 1;
            }
        }
    }
    let mut chains = Vec::new();
    for (top, h) in tops {
        let mut chain = Vec::with_capacity(h);
        for i in 0..h {
            chain.push(&powers[i] * &top);
        }
        chains.push(chain);
    }
    let total: usize = chains.iter().map(|c| c.len()).sum();
    if total != n {
        return Err(EngineError::Internal(format!(
            "jordan chains span {total} of {n} dimensions"
        )));
    }
    let flat: Vec<&Matrix> = chains.iter().flatten().collect();
    let basis = Matrix::from_fn(n, n, |r, c| flat[c].at(r, 0).clone());
    Ok(JordanData { chains, basis })
}

/// The gl-level triple attached to a chain basis: in chain coordinates
/// `e_i = x^i v` the neutral element acts by `h e_i = (2i - (k-1)) e_i` and
/// the opposite nilpotent by `y e_i = i (k - i) e_{i-1}`.
pub fn gl_triple(x: &Matrix, seed: Option<u64>) -> Result<(Matrix, Matrix), EngineError> {
    let data = jordan_chains(x, seed)?;
    let n = x.rows();
    let mut h_chain = Matrix::zeros(n, n);
    let mut y_chain = Matrix::zeros(n, n);
    let mut offset = 0;
    for chain in &data.chains {
        let k = chain.len() as i64;
        for i in 0..chain.len() {
            let w = 2 * i as i64 - (k - 1);
            h_chain.set(offset + i, offset + i, Scalar::from_int(w));
            if i > 0 {
                let c = i as i64 * (k - i as i64);
                y_chain.set(offset + i - 1, offset + i, Scalar::from_int(c));
            }
        }
        offset += chain.len();
    }
    let p = &data.basis;
    let p_inv = exact::inverse(p)
        .ok_or_else(|| EngineError::Internal("chain basis is singular".to_string()))?;
    let h = &(p * &h_chain) * &p_inv;
    let y = &(p * &y_chain) * &p_inv;
    debug_assert_eq!(h.commutator(x), x.scale(&Scalar::from_int(2)));
    debug_assert_eq!(x.commutator(&y), h);
    debug_assert_eq!(h.commutator(&y), y.scale(&Scalar::from_int(-2)));
    Ok((y, h))
}
