use crate::geometry::{det3, standard_coframe, FrameGeometry};
use crate::hypersurface::{Hypersurface, HypersurfaceFrame, TimeDerivation};
use crate::scalar::{Jet1, Poly, RatFunc, Rational, Real, Var};

use super::{FrameFamily, MeanCurvature, MinimalError, ORTHONORMALITY_TOL};

fn eval_poly_t<S: Real>(p: &Poly, t: &S) -> S {
    p.coeffs_in(Var::T).iter().rev().fold(S::zero(), |acc, c| {
        let q = c.as_constant().expect("coefficient depends only on t");
        acc * t.clone() + S::from_rational(&q)
    })
}

fn eval_t<S: Real>(f: &RatFunc, t: &S) -> S {
    eval_poly_t(f.numer(), t) / eval_poly_t(f.denom(), t)
}

/// Frame-basis components `θ_i(v)` of a coordinate vector at height `t`.
pub fn coordinate_to_frame<S: Real>(v: &[S; 4], t: &S) -> [S; 4] {
    let coframe = standard_coframe();
    std::array::from_fn(|i| {
        (0..4).fold(S::zero(), |acc, mu| {
            let c = &coframe.rows[i][mu];
            if c.is_zero() {
                acc
            } else {
                acc + eval_t(c, t) * v[mu].clone()
            }
        })
    })
}

/// The graph hypersurface `x = φ(t)`, parametrized by `(y, z, t)`, with `φ`
/// a polynomial given by its coefficients, constant term first.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphSurface {
    pub coeffs: Vec<Rational>,
}

impl GraphSurface {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        GraphSurface { coeffs }
    }

    /// `φ(t) = 2t + t³/3`, the published minimal graph.
    pub fn example() -> Self {
        use crate::scalar::rat;
        GraphSurface {
            coeffs: vec![rat(0, 1), rat(2, 1), rat(0, 1), rat(1, 3)],
        }
    }

    fn eval<S: Real>(coeffs: &[Rational], t: &S) -> S {
        coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * t.clone() + S::from_rational(c))
    }

    pub fn phi<S: Real>(&self, t: &S) -> S {
        Self::eval(&self.coeffs, t)
    }

    pub fn dphi<S: Real>(&self, t: &S) -> S {
        let d: Vec<Rational> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
            .collect();
        Self::eval(&d, t)
    }
}

fn dot<S: Real>(u: &[S; 4], v: &[S; 4]) -> S {
    u.iter()
        .zip(v)
        .fold(S::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
}

/// Orthonormal frame of the graph: Gram–Schmidt over `∂y`, `∂z`,
/// `φ'∂x + ∂t` in that order, and the unit normal with negative `e4`
/// component.
pub fn graph_frame<S: Real>(surface: &GraphSurface, t: &S) -> Result<HypersurfaceFrame<S>, MinimalError> {
    let (o, l) = (S::zero, S::one);
    let coords = [
        [o(), l(), o(), o()],
        [o(), o(), l(), o()],
        [surface.dphi(t), o(), o(), l()],
    ];
    let mut tangents: Vec<[S; 4]> = Vec::with_capacity(3);
    for v in &coords {
        let mut u = coordinate_to_frame(v, t);
        for w in &tangents {
            let p = dot(&u, w);
            u = std::array::from_fn(|k| u[k].clone() - p.clone() * w[k].clone());
        }
        let n = dot(&u, &u).sqrt();
        if n.value() < 1e-12 {
            return Err(MinimalError::DegenerateFrame(t.value()));
        }
        tangents.push(u.map(|x| x / n.clone()));
    }
    let tangents: [[S; 4]; 3] = tangents.try_into().unwrap_or_else(|_| unreachable!());
    // generalized cross product: cofactors of the 4×3 tangent matrix
    let mut xi: [S; 4] = std::array::from_fn(|k| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != k).collect();
        let m: [[S; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| tangents[j][rows[i]].clone()));
        let d = det3(&m);
        if k % 2 == 0 {
            d
        } else {
            -d
        }
    });
    let n = dot(&xi, &xi).sqrt();
    if n.value() < 1e-12 {
        return Err(MinimalError::DegenerateFrame(t.value()));
    }
    let sign = if xi[3].value() > 0.0 { -1.0 } else { 1.0 };
    xi = xi.map(|x| x * S::constant(sign) / n.clone());
    Ok(HypersurfaceFrame { xi, tangents })
}

/// Mean curvature of the graph at `t`, through the generic hypersurface path.
pub fn graph_mean_curvature(surface: &GraphSurface, t: f64) -> Result<f64, MinimalError> {
    let frame = graph_frame(surface, &Jet1::variable(t))?;
    let geometry = FrameGeometry::nil4();
    let der = TimeDerivation::new(&geometry);
    Ok(Hypersurface::new(&geometry, &der, frame, ORTHONORMALITY_TOL)?
        .mean_curvature()
        .value())
}

impl FrameFamily for GraphSurface {
    /// Panics only if the graph frame degenerates, which cannot happen for a graph.
    fn frame_at<S: Real>(&self, t: &S) -> HypersurfaceFrame<S> {
        graph_frame(self, t).expect("graph frames are never degenerate")
    }
}

impl GraphSurface {
    /// Both mean-curvature paths for the graph's own frame.
    pub fn mean_curvature(&self, t: f64) -> Result<MeanCurvature, MinimalError> {
        graph_frame(self, &t)?;
        super::family_mean_curvature(self, t)
    }
}
