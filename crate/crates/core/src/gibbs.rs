//! Floating-point checks of the geometric statements behind the Gibbs
//! verdicts: the conical flow generated by the neutral triple element, the
//! homogeneity of the orbit symplectic form and of its Liouville density,
//! the unbounded-volume witness on the sl(2,R) cone, and the pointwise
//! convexity bound that makes the divergence argument work.
//!
//! The pairing is `<a, b> = c * trace(a b)` with a caller-chosen constant;
//! every check here is a ratio or residual, so the constant cancels and
//! `c = 1` is a valid default.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::Matrix;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum GibbsError {
    #[error("matrix dimensions do not match")]
    SizeMismatch,
    #[error("generators span a tangent space of rank {got}, expected {expected}")]
    WrongTangentRank { expected: usize, got: usize },
    #[error("degenerate frame: no nonsingular 2d-subframe of generators")]
    DegenerateFrame,
}

/// Small dense float matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl FMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMat { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn from_rows(rows: &[&[f64]]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c));
        FMat { rows: r, cols: c, data: rows.iter().flat_map(|row| row.iter().copied()).collect() }
    }

    /// Lossy conversion from an exact matrix (real entries).
    pub fn from_exact(m: &Matrix) -> Self {
        FMat {
            rows: m.rows(),
            cols: m.cols(),
            data: m.entries().map(|s| s.to_f64()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add(&self, o: &FMat) -> FMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        FMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &FMat) -> FMat {
        self.add(&o.scale(-1.0))
    }

    pub fn scale(&self, s: f64) -> FMat {
        FMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn mul(&self, o: &FMat) -> FMat {
        assert_eq!(self.cols, o.rows);
        let mut out = FMat::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..o.cols {
                    out.set(r, c, out.at(r, c) + a * o.at(k, c));
                }
            }
        }
        out
    }

    pub fn commutator(&self, o: &FMat) -> FMat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self.at(i, i)).sum()
    }

    pub fn inf_norm(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Matrix exponential by scaling and squaring on a Taylor series.
    pub fn expm(&self) -> FMat {
        assert_eq!(self.rows, self.cols);
        let norm = self.inf_norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
        let scaled = self.scale(0.5f64.powi(squarings as i32));
        let mut sum = FMat::identity(self.rows);
        let mut term = FMat::identity(self.rows);
        for k in 1..=24 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

/// The Kirillov-Kostant-Souriau value `omega(X*, Y*)|_x = kappa(x, [X,Y])`
/// with `kappa(a,b) = killing_const * trace(a b)`.
pub fn kks_value(x: &FMat, a: &FMat, b: &FMat, killing_const: f64) -> Result<f64, GibbsError> {
    if x.rows() != a.rows() || a.rows() != b.rows() || x.rows() != x.cols() {
        return Err(GibbsError::SizeMismatch);
    }
    Ok(killing_const * x.mul(&a.commutator(b)).trace())
}

/// Residual of the conical-flow identity `exp(t ad_h)(x) = e^(2t) x`,
/// computed through the dense exponential of `ad_h` on the full matrix
/// space.
pub fn check_conical_flow(x: &FMat, h: &FMat, t: f64) -> f64 {
    let n = x.rows();
    let dim = n * n;
    // ad_h as a dim x dim matrix acting on vectorized matrices.
    let mut ad = FMat::zeros(dim, dim);
    for k in 0..n {
        for l in 0..n {
            let col = k * n + l;
            // ad_h(E_kl) = h E_kl - E_kl h.
            for i in 0..n {
                ad.set(i * n + l, col, ad.at(i * n + l, col) + h.at(i, k));
            }
            for j in 0..n {
                ad.set(k * n + j, col, ad.at(k * n + j, col) - h.at(l, j));
            }
        }
    }
    let flow = ad.scale(t).expm();
    let mut vec_x = FMat::zeros(dim, 1);
    for i in 0..n {
        for j in 0..n {
            vec_x.set(i * n + j, 0, x.at(i, j));
        }
    }
    let moved = flow.mul(&vec_x);
    let expected = vec_x.scale((2.0 * t).exp());
    moved.sub(&expected).inf_norm()
}

/// A coordinate chart on an adjoint orbit at a base point: Lie algebra
/// generators whose fundamental fields span the tangent space.
pub struct OrbitChart {
    pub base: FMat,
    pub generators: Vec<FMat>,
    pub killing_const: f64,
    /// Orbit dimension `2d`.
    pub dim: usize,
}

fn numerical_rank(cols: &[FMat], tol: f64) -> usize {
    if cols.is_empty() {
        return 0;
    }
    let n = cols[0].rows() * cols[0].cols();
    let mut rows: Vec<Vec<f64>> = cols
        .iter()
        .map(|m| (0..m.rows()).flat_map(|r| (0..m.cols()).map(move |c| m.at(r, c))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let pivot = (rank..rows.len())
            .max_by(|&a, &b| rows[a][col].abs().partial_cmp(&rows[b][col].abs()).unwrap());
        let Some(p) = pivot else { break };
        if rows[p][col].abs() <= tol {
            continue;
        }
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][col] / rows[rank][col];
                for c in col..n {
                    rows[r][c] -= f * rows[rank][c];
                }
            }
        }
        rank += 1;
    }
    rank
}

impl OrbitChart {
    /// Validates that the fundamental fields of the generators span a
    /// tangent space of dimension exactly `dim` (tolerance 1e-9).
    pub fn new(
        base: FMat,
        generators: Vec<FMat>,
        killing_const: f64,
        dim: usize,
    ) -> Result<Self, GibbsError> {
        let tangent: Vec<FMat> = generators.iter().map(|g| g.commutator(&base)).collect();
        let rank = numerical_rank(&tangent, 1e-9);
        if rank != dim {
            return Err(GibbsError::WrongTangentRank { expected: dim, got: rank });
        }
        Ok(OrbitChart { base, generators, killing_const, dim })
    }

    fn omega_at(&self, point: &FMat, i: usize, j: usize) -> f64 {
        kks_value(point, &self.generators[i], &self.generators[j], self.killing_const).unwrap()
    }
}

fn det_f(m: &mut Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let p = (col..n).max_by(|&a, &b| m[a][col].abs().partial_cmp(&m[b][col].abs()).unwrap());
        let p = p.unwrap();
        if m[p][col].abs() < 1e-300 {
            return 0.0;
        }
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

/// Checks the homogeneity of the orbit data under `x -> t x`: the
/// symplectic values scale by `t` (sampled generator pairs) and the
/// Liouville density of a 2d-frame scales by `t^d`. Returns the maximum
/// relative error.
pub fn check_homogeneity(
    chart: &OrbitChart,
    t: f64,
    samples: usize,
    seed: u64,
) -> Result<f64, GibbsError> {
    assert!(t != 0.0, "t must be nonzero");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scaled = chart.base.scale(t);
    let k = chart.generators.len();
    let mut max_err = 0.0f64;
    for _ in 0..samples {
        let i = rng.random_range(0..k);
        let j = rng.random_range(0..k);
        let at_base = chart.omega_at(&chart.base, i, j);
        let at_scaled = chart.omega_at(&scaled, i, j);
        let err = (at_scaled - t * at_base).abs() / (t * at_base).abs().max(1e-12);
        max_err = max_err.max(err);
    }
    // Greedy nonsingular 2d-subframe for the Liouville density.
    let two_d = chart.dim;
    let mut frame: Vec<usize> = Vec::new();
    for cand in 0..k {
        if frame.len() == two_d {
            break;
        }
        frame.push(cand);
        let mut gram: Vec<Vec<f64>> = frame
            .iter()
            .map(|&a| frame.iter().map(|&b| chart.omega_at(&chart.base, a, b)).collect())
            .collect();
        if frame.len() == two_d && det_f(&mut gram).abs() < 1e-9 {
            frame.pop();
        } else if frame.len() < two_d {
            // Keep only if it can still lead to a nonsingular frame; a
            // cheap proxy is nonzero pairing with some earlier member.
            continue;
        }
    }
    if frame.len() != two_d {
        // Fall back to exhaustive search over pairs for 2-dimensional
        // orbits, the case exercised by the checks.
        frame.clear();
        'outer: for a in 0..k {
            for b in a + 1..k {
                if two_d == 2 && chart.omega_at(&chart.base, a, b).abs() > 1e-9 {
                    frame = vec![a, b];
                    break 'outer;
                }
            }
        }
        if frame.len() != two_d {
            return Err(GibbsError::DegenerateFrame);
        }
    }
    let gram_at = |point: &FMat| -> f64 {
        let mut g: Vec<Vec<f64>> = frame
            .iter()
            .map(|&a| frame.iter().map(|&b| chart.omega_at(point, a, b)).collect())
            .collect();
        det_f(&mut g)
    };
    let d = two_d / 2;
    let base_det = gram_at(&chart.base);
    let scaled_det = gram_at(&scaled);
    // lambda scales by t^d, so the frame determinant scales by t^(2d).
    let det_ratio = scaled_det / base_det;
    let lambda_ratio = det_ratio.abs().sqrt();
    let expected = t.abs().powi(d as i32);
    max_err = max_err.max((lambda_ratio - expected).abs() / expected);
    Ok(max_err)
}

/// Pointwise convexity bound of the divergence argument:
/// `e^{-<beta,y>} + e^{<beta,y>} >= 2` for every sampled `y`.
pub fn check_divergence_bound(beta: &FMat, points: &[FMat], killing_const: f64) -> bool {
    points.iter().all(|y| {
        let s = killing_const * beta.mul(y).trace();
        (-s).exp() + s.exp() >= 2.0
    })
}

/// A point of the positive nilpotent cone of sl(2,R) at radius `r` and
/// angle `phi`, together with the radial and angular generators whose
/// fundamental fields are the corresponding tangent vectors.
pub fn sl2_cone_point(radius: f64, phi: f64) -> (FMat, FMat, FMat) {
    let theta = phi / 2.0;
    let (s, c) = theta.sin_cos();
    let k = FMat::from_rows(&[&[c, -s], &[s, c]]);
    let k_inv = FMat::from_rows(&[&[c, s], &[-s, c]]);
    let x0 = FMat::from_rows(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let h0 = FMat::from_rows(&[&[1.0, 0.0], &[0.0, -1.0]]);
    let w = FMat::from_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
    let point = k.mul(&x0).mul(&k_inv).scale(radius);
    let radial = k.mul(&h0).mul(&k_inv).scale(1.0 / (2.0 * radius));
    let angular = w.scale(0.5);
    (point, radial, angular)
}

/// Liouville volume of the truncated cone `{ |y|_F <= r_max }` by midpoint
/// quadrature; the cone directions have unit Frobenius norm, so the
/// truncation is exactly `radius <= r_max`.
pub fn truncated_cone_volume(r_max: f64, n_r: usize, n_phi: usize, killing_const: f64) -> f64 {
    let dr = r_max / n_r as f64;
    let dphi = std::f64::consts::TAU / n_phi as f64;
    let mut vol = 0.0;
    for i in 0..n_r {
        let r = (i as f64 + 0.5) * dr;
        for j in 0..n_phi {
            let phi = (j as f64 + 0.5) * dphi;
            let (y, radial, angular) = sl2_cone_point(r, phi);
            let density = kks_value(&y, &radial, &angular, killing_const).unwrap().abs();
            vol += density * dr * dphi;
        }
    }
    vol
}

/// Sampled points of the sl(2,R) cone, for the convexity check.
pub fn sample_sl2_cone(count: usize, seed: u64) -> Vec<FMat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.random_range(0.01..10.0);
            let phi = rng.random_range(0.0..std::f64::consts::TAU);
            sl2_cone_point(r, phi).0
        })
        .collect()
}
