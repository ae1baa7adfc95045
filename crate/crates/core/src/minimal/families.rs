use crate::hypersurface::HypersurfaceFrame;
use crate::scalar::Real;

/// A hypersurface frame whose frame-basis coefficients depend only on `t`.
pub trait FrameFamily: Sync {
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S>;
}

fn c<S: Real>(x: f64) -> S {
    S::constant(x)
}

/// The published minimal example.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExampleFamily;

impl FrameFamily for ExampleFamily {
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S> {
        let t2 = t.clone() * t.clone();
        let t3 = t2.clone() * t.clone();
        let s5 = c::<S>(5.0).sqrt();
        let q = c::<S>(2.0) + t2.clone();
        let r = (c::<S>(1.0) + t2.clone()).sqrt();
        let w = s5.clone() * q.clone();
        let xi = [
            c::<S>(2.0) / w.clone(),
            c::<S>(2.0) * t.clone() / w.clone(),
            t2.clone() / w.clone(),
            c::<S>(-2.0) / s5.clone(),
        ];
        let x1 = [-(t.clone() / r.clone()), c::<S>(1.0) / r.clone(), S::zero(), S::zero()];
        let qr = q.clone() * r.clone();
        let x2 = [-(t2.clone() / qr.clone()), -(t3 / qr), c::<S>(2.0) * r / q, S::zero()];
        let x3 = [
            c::<S>(4.0) / w.clone(),
            c::<S>(4.0) * t.clone() / w.clone(),
            c::<S>(2.0) * t2 / w,
            c::<S>(1.0) / s5,
        ];
        HypersurfaceFrame {
            xi,
            tangents: [x1, x2, x3],
        }
    }
}

/// The horizontal slice: constant `ξ = e4` with tangents `e1, e2, e3`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SliceFamily;

impl FrameFamily for SliceFamily {
    fn frame_at<S: Real>(&self, _t: &S) -> HypersurfaceFrame<S> {
        HypersurfaceFrame::slice()
    }
}

/// A family with the normal's `e4` coefficient multiplied by `factor` and no
/// renormalization, so the frame invariants fail.
#[derive(Debug, Clone, Copy)]
pub struct PerturbedFamily<F> {
    pub base: F,
    pub factor: f64,
}

impl<F: FrameFamily> FrameFamily for PerturbedFamily<F> {
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S> {
        let mut f = self.base.frame_at(t);
        f.xi[3] = f.xi[3].clone() * S::constant(self.factor);
        f
    }
}

/// Rotation in the `(p, q)` coordinate plane of the frame basis by the angle
/// `alpha + beta * t`.
#[derive(Debug, Clone, Copy)]
pub struct PlaneRotation {
    pub p: usize,
    pub q: usize,
    pub alpha: f64,
    pub beta: f64,
}

/// A base family acted on by a `t`-dependent orthogonal map of the frame
/// basis: a smooth orthonormal family that is generally not minimal.
#[derive(Debug, Clone)]
pub struct RotatedFamily<F> {
    pub base: F,
    pub rotations: Vec<PlaneRotation>,
}

fn rotate<S: Real>(v: &mut [S; 4], r: &PlaneRotation, cos: &S, sin: &S) {
    let (x, y) = (v[r.p].clone(), v[r.q].clone());
    v[r.p] = cos.clone() * x.clone() - sin.clone() * y.clone();
    v[r.q] = sin.clone() * x + cos.clone() * y;
}

impl<F: FrameFamily> FrameFamily for RotatedFamily<F> {
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S> {
        let mut f = self.base.frame_at(t);
        for r in &self.rotations {
            let angle = S::constant(r.alpha) + t.clone() * S::constant(r.beta);
            let (cos, sin) = (angle.cos(), angle.sin());
            rotate(&mut f.xi, r, &cos, &sin);
            for x in &mut f.tangents {
                rotate(x, r, &cos, &sin);
            }
        }
        f
    }
}

/// A base family with its tangents recombined by a constant orthogonal 3×3
/// matrix; the normal and the tangent space are unchanged.
#[derive(Debug, Clone)]
pub struct MixedFamily<F> {
    pub base: F,
    pub mixing: [[f64; 3]; 3],
}

impl<F: FrameFamily> FrameFamily for MixedFamily<F> {
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S> {
        let f = self.base.frame_at(t);
        let tangents = std::array::from_fn(|a| {
            std::array::from_fn(|k| {
                (0..3).fold(S::zero(), |acc, b| {
                    acc + S::constant(self.mixing[a][b]) * f.tangents[b][k].clone()
                })
            })
        });
        HypersurfaceFrame { xi: f.xi, tangents }
    }
}
