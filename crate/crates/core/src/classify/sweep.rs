use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::geometry::FrameGeometry;
use crate::hypersurface::{frobenius_pairings, ConstantDerivation};
use crate::scalar::{CompiledPoly, Var, NUM_VARS};

use super::{tangent_generators, CurvatureNormalSystem};

/// Outcome of the randomized sweep over unit normals.
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    /// Candidates from the branch analysis, evaluated before the random draws.
    pub injected: Vec<[f64; 4]>,
    /// Injected or drawn normals passing the polynomial system.
    pub system_passes: Vec<[f64; 4]>,
    /// Of those, the ones whose tangent distribution is integrable.
    pub survivors: Vec<[f64; 4]>,
}

/// The polynomial system compiled for fast evaluation, generic triple first.
struct Compiled(Vec<CompiledPoly>);

impl Compiled {
    fn new(system: &CurvatureNormalSystem) -> Self {
        let mut polys: Vec<_> = system.iter().filter(|(_, p)| !p.is_zero()).collect();
        polys.sort_by_key(|(t, _)| *t != [1, 2, 3]);
        Compiled(polys.into_iter().map(|(_, p)| p.compile()).collect())
    }

    fn residual(&self, xi: &[f64; 4], stop_above: f64) -> f64 {
        let mut vals = [0.0; NUM_VARS];
        for (v, x) in Var::NORMAL.iter().zip(xi) {
            vals[v.index()] = *x;
        }
        let mut max = 0.0f64;
        for p in &self.0 {
            max = max.max(p.eval(&vals).abs());
            if max > stop_above {
                break;
            }
        }
        max
    }
}

/// Largest `|g̃(R̃(X_i,X_j)X_k, ξ)|` over all triples.
pub fn system_residual(system: &CurvatureNormalSystem, xi: &[f64; 4]) -> f64 {
    Compiled::new(system).residual(xi, f64::INFINITY)
}

/// Orthonormal basis of `ξ^⊥` by pivoted Gram–Schmidt over the generators.
fn tangent_basis(xi: &[f64; 4]) -> Option<[[f64; 4]; 3]> {
    let mut pool: Vec<[f64; 4]> = tangent_generators(xi).to_vec();
    let mut basis: Vec<[f64; 4]> = Vec::with_capacity(3);
    for _ in 0..3 {
        let (best, norm) = pool
            .iter()
            .enumerate()
            .map(|(n, u)| (n, u.iter().map(|x| x * x).sum::<f64>().sqrt()))
            .max_by(|a, b| a.1.total_cmp(&b.1))?;
        if norm < 1e-9 {
            return None;
        }
        let u = pool.swap_remove(best).map(|x| x / norm);
        for w in &mut pool {
            let dot: f64 = w.iter().zip(&u).map(|(p, q)| p * q).sum();
            for k in 0..4 {
                w[k] -= dot * u[k];
            }
        }
        basis.push(u);
    }
    basis.try_into().ok()
}

/// Norm of the bracket pairing `ω(U,V) = g̃([U,V], ξ)` on `ξ^⊥`, taken in an
/// orthonormal basis so it does not depend on the basis chosen. Zero exactly
/// when the distribution is integrable.
pub fn frobenius_defect(geometry: &FrameGeometry, xi: &[f64; 4]) -> Option<f64> {
    let basis = tangent_basis(xi)?;
    let w = frobenius_pairings(geometry, &ConstantDerivation, &basis, xi);
    Some((w[0][1].powi(2) + w[0][2].powi(2) + w[1][2].powi(2)).sqrt())
}

/// The normals singled out by the case analysis: `±e_i` and `±(e1 ± e3)/√2`.
pub fn injected_candidates() -> Vec<[f64; 4]> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let mut out = Vec::new();
    for k in 0..4 {
        for s in [1.0, -1.0] {
            let mut v = [0.0; 4];
            v[k] = s;
            out.push(v);
        }
    }
    for (p, q) in [(1.0, 1.0), (-1.0, -1.0), (1.0, -1.0), (-1.0, 1.0)] {
        out.push([p * r, 0.0, q * r, 0.0]);
    }
    out
}

/// Uniform point on the unit 3-sphere from stream `index` of `seed`.
pub fn sample_normal(seed: u64, index: u64) -> [f64; 4] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    loop {
        let v: [f64; 4] = std::array::from_fn(|_| StandardNormal.sample(&mut rng));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-6 {
            return v.map(|x| x / n);
        }
    }
}

pub fn sweep_numeric(samples: usize, seed: u64, tol: f64) -> SweepReport {
    let geometry = FrameGeometry::nil4();
    let system = CurvatureNormalSystem::new(&geometry);
    let compiled = Compiled::new(&system);
    let injected = injected_candidates();
    let check = |xi: [f64; 4]| -> Option<([f64; 4], bool)> {
        debug_assert!((xi.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() <= 1e-12);
        if compiled.residual(&xi, tol) > tol {
            return None;
        }
        let integrable = frobenius_defect(&geometry, &xi).is_some_and(|d| d <= tol);
        Some((xi, integrable))
    };
    let passes: Vec<([f64; 4], bool)> = crate::install(|| {
        let from_injected: Vec<_> = injected.par_iter().filter_map(|&xi| check(xi)).collect();
        let drawn: Vec<_> = (0..samples as u64)
            .into_par_iter()
            .filter_map(|i| check(sample_normal(seed, i)))
            .collect();
        from_injected.into_iter().chain(drawn).collect()
    });
    SweepReport {
        samples,
        seed,
        tol,
        injected,
        system_passes: passes.iter().map(|(x, _)| *x).collect(),
        survivors: passes.iter().filter(|(_, ok)| *ok).map(|(x, _)| *x).collect(),
    }
}
