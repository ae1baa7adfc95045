//! Minimality of hypersurfaces whose orthonormal frames depend only on `t`.
//!
//! Derivatives of the frame coefficients come from jet propagation through
//! their closed forms. Since `e_4 = ∂t` is the only frame field that moves
//! `t`, `X_i(f) = d_i f'` for such coefficients.

mod families;
mod graph;

pub use families::{
    ExampleFamily, FrameFamily, MixedFamily, PerturbedFamily, PlaneRotation, RotatedFamily, SliceFamily,
};
pub use graph::{coordinate_to_frame, graph_frame, graph_mean_curvature, GraphSurface};

use rayon::prelude::*;

use crate::geometry::FrameGeometry;
use crate::hypersurface::{Hypersurface, HypersurfaceError, HypersurfaceFrame, TimeDerivation};
use crate::scalar::Jet1;

/// Absolute tolerance on each Gram entry of a numeric frame.
pub const ORTHONORMALITY_TOL: f64 = 1e-10;

#[derive(Debug, thiserror::Error)]
pub enum MinimalError {
    #[error(transparent)]
    Hypersurface(#[from] HypersurfaceError),
    #[error("degenerate tangent frame at t = {0}")]
    DegenerateFrame(f64),
}

/// Mean curvature at one `t` by the closed-form and the generic path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanCurvature {
    pub closed_form: f64,
    pub generic: f64,
}

pub(crate) fn jet_frame<F: FrameFamily>(family: &F, t: f64) -> HypersurfaceFrame<Jet1> {
    family.frame_at(&Jet1::variable(t))
}

/// Largest deviation of the frame's Gram matrix from the identity.
pub fn gram_residual(frame: &HypersurfaceFrame<f64>) -> f64 {
    let vecs = [&frame.xi, &frame.tangents[0], &frame.tangents[1], &frame.tangents[2]];
    let mut max = 0.0f64;
    for (i, u) in vecs.iter().enumerate() {
        for (j, v) in vecs.iter().enumerate().skip(i) {
            let dot: f64 = u.iter().zip(v.iter()).map(|(p, q)| p * q).sum();
            max = max.max((dot - f64::from(u8::from(i == j))).abs());
        }
    }
    max
}

/// `g̃(∇̃_{X_i} X_i, ξ)` for each tangent, from the expanded connection formula.
fn closed_form_diagonal(frame: &HypersurfaceFrame<Jet1>) -> [f64; 3] {
    let [a, b, c, d] = frame.xi.map(|j| j.value());
    std::array::from_fn(|i| {
        let x = &frame.tangents[i];
        let [ai, bi, ci, di] = x.map(|j| j.value());
        let [da, db, dc, dd] = x.map(|j| j.deriv());
        a * da * di + b * di * (db - ai) + c * di * (dc - bi) + d * (di * dd + bi * (ai + ci))
    })
}

pub fn family_mean_curvature<F: FrameFamily>(family: &F, t: f64) -> Result<MeanCurvature, MinimalError> {
    let frame = jet_frame(family, t);
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    let surface = Hypersurface::new(&geometry, &der, frame.clone(), ORTHONORMALITY_TOL)?;
    let generic = surface.mean_curvature().value();
    let closed_form = closed_form_diagonal(&frame).iter().sum::<f64>() / 3.0;
    Ok(MeanCurvature { closed_form, generic })
}

/// The left-hand side of the minimality criterion. On every tested family it
/// equals `3 H`.
pub fn theorem4_functional<F: FrameFamily>(family: &F, t: f64) -> Result<f64, MinimalError> {
    let frame = jet_frame(family, t);
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    Hypersurface::new(&geometry, &der, frame.clone(), ORTHONORMALITY_TOL)?;
    let [a, b, c, d] = frame.xi.map(|j| j.value());
    let sum = frame
        .tangents
        .iter()
        .map(|x| {
            let [ai, bi, ci, di] = x.map(|j| j.value());
            let [da, db, dc, dd] = x.map(|j| j.deriv());
            ai * (bi * d - b * di) + bi * (ci * d - c * di) + di * (a * da + b * db + c * dc + d * dd)
        })
        .sum();
    Ok(sum)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Minimal,
    NotMinimal,
    InvariantViolation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Minimal => "minimal",
            Verdict::NotMinimal => "not-minimal",
            Verdict::InvariantViolation => "invariant-violation",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FamilySample {
    pub t: f64,
    pub gram_residual: f64,
    /// `None` when the frame invariants fail at this `t`.
    pub mean_curvature: Option<MeanCurvature>,
    pub theorem4: Option<f64>,
    /// Distance of the embedding's coordinate tangents from the frame's span;
    /// only for families that come with an embedding.
    pub tangency_residual: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub samples: Vec<FamilySample>,
    pub tol: f64,
}

impl FamilyReport {
    pub fn gram_residual_max(&self) -> f64 {
        self.samples.iter().map(|s| s.gram_residual).fold(0.0, f64::max)
    }

    fn max_of(&self, f: impl Fn(&FamilySample) -> Option<f64>) -> Option<f64> {
        self.samples
            .iter()
            .map(f)
            .try_fold(0.0f64, |acc, v| v.map(|v| acc.max(v.abs())))
    }

    pub fn closed_form_max(&self) -> Option<f64> {
        self.max_of(|s| s.mean_curvature.map(|h| h.closed_form))
    }

    pub fn generic_max(&self) -> Option<f64> {
        self.max_of(|s| s.mean_curvature.map(|h| h.generic))
    }

    /// Largest disagreement between the two mean-curvature paths.
    pub fn path_gap_max(&self) -> Option<f64> {
        self.max_of(|s| s.mean_curvature.map(|h| h.closed_form - h.generic))
    }

    pub fn theorem4_max(&self) -> Option<f64> {
        self.max_of(|s| s.theorem4)
    }

    pub fn tangency_max(&self) -> Option<f64> {
        self.samples.iter().filter_map(|s| s.tangency_residual).reduce(f64::max)
    }

    /// Median of `theorem4 / H` over samples where `|H|` is not negligible.
    pub fn observed_ratio(&self) -> Option<f64> {
        let mut r: Vec<f64> = self
            .samples
            .iter()
            .filter_map(|s| match (s.mean_curvature, s.theorem4) {
                (Some(h), Some(f)) if h.generic.abs() > 1e-6 => Some(f / h.generic),
                _ => None,
            })
            .collect();
        r.sort_by(f64::total_cmp);
        r.get(r.len() / 2).copied()
    }

    pub fn verdict(&self) -> Verdict {
        if self.gram_residual_max() > ORTHONORMALITY_TOL || self.samples.iter().any(|s| s.mean_curvature.is_none()) {
            return Verdict::InvariantViolation;
        }
        let small = |v: Option<f64>| v.is_some_and(|v| v <= self.tol);
        if small(self.closed_form_max()) && small(self.generic_max()) && small(self.theorem4_max()) {
            Verdict::Minimal
        } else {
            Verdict::NotMinimal
        }
    }
}

fn sample_family<F: FrameFamily>(family: &F, t: f64) -> FamilySample {
    let gram_residual = gram_residual(&family.frame_at(&t));
    FamilySample {
        t,
        gram_residual,
        mean_curvature: family_mean_curvature(family, t).ok(),
        theorem4: theorem4_functional(family, t).ok(),
        tangency_residual: None,
    }
}

/// Samples a family; `tol` bounds `|H|` and the functional for the verdict.
pub fn verify_family<F: FrameFamily>(family: &F, ts: &[f64], tol: f64) -> FamilyReport {
    let samples = crate::install(|| ts.par_iter().map(|&t| sample_family(family, t)).collect());
    FamilyReport { samples, tol }
}

/// Component of a frame-basis vector orthogonal to the frame's tangents.
fn off_span(frame: &HypersurfaceFrame<f64>, v: &[f64; 4]) -> f64 {
    let mut r = *v;
    for x in &frame.tangents {
        let dot: f64 = x.iter().zip(v).map(|(p, q)| p * q).sum();
        for k in 0..4 {
            r[k] -= dot * x[k];
        }
    }
    r.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Pushforwards of `∂y`, `∂z`, `∂t` under `(y,z,t) ↦ (2t + t³/3, y, z, t)`,
/// in the frame basis.
pub fn example_embedding_tangents(t: f64) -> [[f64; 4]; 3] {
    let coords = [[0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0], [2.0 + t * t, 0.0, 0.0, 1.0]];
    coords.map(|v| coordinate_to_frame(&v, &t))
}

/// Samples the published example, including tangency to its embedding.
pub fn verify_example(ts: &[f64]) -> FamilyReport {
    let mut report = verify_family(&ExampleFamily, ts, ORTHONORMALITY_TOL);
    for s in &mut report.samples {
        let frame = ExampleFamily.frame_at(&s.t);
        let r = example_embedding_tangents(s.t)
            .iter()
            .map(|v| off_span(&frame, v))
            .fold(0.0, f64::max);
        s.tangency_residual = Some(r);
    }
    report
}

/// `count` evenly spaced points of `[min, max]`, endpoints included.
pub fn linspace(min: f64, max: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![min],
        n => (0..n).map(|i| min + (max - min) * i as f64 / (n - 1) as f64).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_is_minimal_at_sample_points() {
        for t in [-2.0, 0.0, 1.0] {
            let h = family_mean_curvature(&ExampleFamily, t).unwrap();
            assert!(h.closed_form.abs() < 1e-10 && h.generic.abs() < 1e-10, "{h:?}");
            assert!(theorem4_functional(&ExampleFamily, t).unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn example_normal_at_zero() {
        let f = ExampleFamily.frame_at(&0.0);
        let s5 = 5f64.sqrt();
        let expected = [1.0 / s5, 0.0, 0.0, -2.0 / s5];
        assert!(f.xi.iter().zip(&expected).all(|(p, q)| (p - q).abs() < 1e-12));
        assert!(gram_residual(&f) < 1e-12);
    }

    #[test]
    fn slice_family_is_minimal() {
        let h = family_mean_curvature(&SliceFamily, 3.0).unwrap();
        assert_eq!((h.closed_form, h.generic), (0.0, 0.0));
        assert_eq!(theorem4_functional(&SliceFamily, 3.0).unwrap(), 0.0);
    }

    #[test]
    fn perturbed_family_is_rejected() {
        let fam = PerturbedFamily {
            base: ExampleFamily,
            factor: 1.1,
        };
        match family_mean_curvature(&fam, 0.5) {
            Err(MinimalError::Hypersurface(HypersurfaceError::InvariantViolation { entry, .. })) => {
                assert_eq!(entry, "g(xi, xi)")
            }
            other => panic!("unexpected {other:?}"),
        }
        let report = verify_family(&fam, &[0.0, 1.0], 1e-10);
        assert_eq!(report.verdict(), Verdict::InvariantViolation);
    }

    #[test]
    fn rotated_family_has_functional_three_h() {
        let fam = RotatedFamily {
            base: ExampleFamily,
            rotations: vec![
                PlaneRotation {
                    p: 0,
                    q: 3,
                    alpha: 0.4,
                    beta: 0.3,
                },
                PlaneRotation {
                    p: 1,
                    q: 2,
                    alpha: -0.2,
                    beta: 0.7,
                },
            ],
        };
        let report = verify_family(&fam, &linspace(-2.0, 2.0, 21), 1e-9);
        assert_eq!(report.verdict(), Verdict::NotMinimal);
        assert!(report.path_gap_max().unwrap() < 1e-9);
        let ratio = report.observed_ratio().unwrap();
        assert!((ratio - 3.0).abs() < 1e-9, "{ratio}");
    }

    #[test]
    fn embedding_tangency() {
        let r = verify_example(&[1.0]);
        assert!(r.tangency_max().unwrap() < 1e-10);
    }
}
