//! Extrinsic geometry of a hypersurface described by a unit normal and an
//! orthonormal tangent frame, all given by their coefficients in an
//! orthonormal left-invariant ambient frame.
//!
//! The computations are generic over the scalar: [`RatFunc`] for exact
//! identities, [`Taylor`](crate::scalar::Taylor) jets for families that depend
//! on `t` only. Directional derivatives of coefficient functions are supplied
//! by a [`Derivation`].
//!
//! Curvature sign convention: `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z` and
//! `h(X,Y) = g̃(∇̃_X Y, ξ)`. With these, the Codazzi equation reads
//! `g̃(R̃(X,Y)Z, ξ) = (∇_X h)(Y,Z) − (∇_Y h)(X,Z)` and the Gauss equation
//! `g(R(X,Y)Z,W) = g̃(R̃(X,Y)Z,W) + h(Y,Z)h(X,W) − h(X,Z)h(Y,W)`.

mod frobenius;
mod principal;

pub use frobenius::{frobenius_check, frobenius_check_fields, frobenius_pairings};
pub use principal::{principal_curvatures, PrincipalCurvatures};

use crate::geometry::{FrameGeometry, GeometryError, VectorFieldExpr};
use crate::scalar::{rat, rational_to_f64, RatFunc, Rational, Ring, Taylor};

/// Frame-basis coefficients of a vector field.
pub type FrameVec<S> = [S; 4];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HypersurfaceError {
    #[error("frame invariant violated: {entry} = {value} (expected {expected})")]
    InvariantViolation {
        entry: String,
        value: String,
        expected: i32,
    },
    #[error("tangent fields are linearly dependent")]
    DependentTangents,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Directional derivative of scalar coefficient functions along the ambient
/// frame vectors: `along(i, f) = e_i(f)`.
pub trait Derivation<S> {
    fn along(&self, basis: usize, f: &S) -> S;
}

/// Exact derivation along a coordinate-expressed frame.
#[derive(Debug, Clone)]
pub struct SymbolicDerivation {
    frame: [VectorFieldExpr; 4],
}

impl SymbolicDerivation {
    pub fn new(frame: [VectorFieldExpr; 4]) -> Self {
        SymbolicDerivation { frame }
    }
}

impl Derivation<RatFunc> for SymbolicDerivation {
    fn along(&self, basis: usize, f: &RatFunc) -> RatFunc {
        if f.as_constant().is_some() {
            return RatFunc::zero();
        }
        self.frame[basis].apply(f)
    }
}

/// Derivation for coefficient functions of `t` alone: `e_i(f) = dt(e_i) f'(t)`.
#[derive(Debug, Clone)]
pub struct TimeDerivation {
    dt: [f64; 4],
}

impl TimeDerivation {
    pub fn new(geometry: &FrameGeometry) -> Self {
        TimeDerivation {
            dt: std::array::from_fn(|i| rational_to_f64(&geometry.dt_components[i])),
        }
    }
}

impl<const K: usize> Derivation<Taylor<K>> for TimeDerivation {
    fn along(&self, basis: usize, f: &Taylor<K>) -> Taylor<K> {
        let c = self.dt[basis];
        if c == 0.0 {
            Taylor::constant(0.0)
        } else {
            Taylor::constant(c) * f.derive()
        }
    }
}

/// For frames whose coefficients are constants.
#[derive(Debug, Clone, Copy, Default)]
pub struct ConstantDerivation;

impl<S: Ring> Derivation<S> for ConstantDerivation {
    fn along(&self, _basis: usize, _f: &S) -> S {
        S::zero()
    }
}

/// Unit normal `ξ = a e_1 + b e_2 + c e_3 + d e_4` and orthonormal tangents
/// `X_1, X_2, X_3`, all in frame-basis coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct HypersurfaceFrame<S> {
    pub xi: FrameVec<S>,
    pub tangents: [FrameVec<S>; 3],
}

impl<S: Ring> HypersurfaceFrame<S> {
    /// Horizontal slice `t = t0`: `ξ = e_4`, tangents `e_1, e_2, e_3`.
    pub fn slice() -> Self {
        let unit = |k: usize| -> FrameVec<S> { std::array::from_fn(|i| if i == k { S::one() } else { S::zero() }) };
        HypersurfaceFrame {
            xi: unit(3),
            tangents: [unit(0), unit(1), unit(2)],
        }
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> HypersurfaceFrame<T> {
        HypersurfaceFrame {
            xi: std::array::from_fn(|i| f(&self.xi[i])),
            tangents: std::array::from_fn(|a| std::array::from_fn(|i| f(&self.tangents[a][i]))),
        }
    }
}

/// `h_ij = h(X_i, X_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondFundamentalForm<S> {
    pub h: [[S; 3]; 3],
}

/// `c[i][j][k] = (∇_{X_i} h)(X_j, X_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicForm<S> {
    pub c: [[[S; 3]; 3]; 3],
}

/// Ambient frame data converted to the working scalar.
#[derive(Debug, Clone)]
struct Ambient<S> {
    // nonzero (i, j, k, value) of ∇_{e_i} e_j = value e_k
    connection: Vec<(usize, usize, usize, S)>,
    // nonzero (i, j, k, l, value) of g(R(e_i,e_j)e_k, e_l)
    curvature: Vec<(usize, usize, usize, usize, S)>,
}

impl<S: Ring> Ambient<S> {
    fn new(geometry: &FrameGeometry) -> Self {
        use num::Zero;
        let conv = |q: &Rational| S::from_rational(q);
        let mut connection = Vec::new();
        let mut curvature = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let q = &geometry.connection[i][j][k];
                    if !q.is_zero() {
                        connection.push((i, j, k, conv(q)));
                    }
                    for l in 0..4 {
                        let q = &geometry.curvature[i][j][k][l];
                        if !q.is_zero() {
                            curvature.push((i, j, k, l, conv(q)));
                        }
                    }
                }
            }
        }
        Ambient { connection, curvature }
    }
}

pub(crate) fn directional<S: Ring, D: Derivation<S>>(der: &D, x: &FrameVec<S>, f: &S) -> S {
    (0..4).fold(S::zero(), |acc, i| {
        if x[i].is_negligible(0.0) {
            acc
        } else {
            acc + x[i].clone() * der.along(i, f)
        }
    })
}

pub(crate) fn inner<S: Ring>(u: &FrameVec<S>, v: &FrameVec<S>) -> S {
    u.iter()
        .zip(v)
        .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

fn render<S: std::fmt::Debug>(s: &S) -> String {
    format!("{s:?}")
}

/// A hypersurface frame bound to its ambient geometry.
pub struct Hypersurface<'a, S, D> {
    ambient: Ambient<S>,
    derivation: &'a D,
    frame: HypersurfaceFrame<S>,
    tol: f64,
}

impl<'a, S: Ring, D: Derivation<S>> Hypersurface<'a, S, D> {
    /// Validates `g̃(ξ,ξ)=1`, `g̃(ξ,X_i)=0`, `g̃(X_i,X_j)=δ_ij`; exact backends
    /// ignore `tol`.
    pub fn new(
        geometry: &FrameGeometry,
        derivation: &'a D,
        frame: HypersurfaceFrame<S>,
        tol: f64,
    ) -> Result<Self, HypersurfaceError> {
        check_frame(&frame, tol)?;
        Ok(Hypersurface {
            ambient: Ambient::new(geometry),
            derivation,
            frame,
            tol,
        })
    }

    pub fn frame(&self) -> &HypersurfaceFrame<S> {
        &self.frame
    }

    /// `X(f)` for a frame-basis vector `X`.
    pub fn directional(&self, x: &FrameVec<S>, f: &S) -> S {
        directional(self.derivation, x, f)
    }

    /// Ambient covariant derivative `∇̃_X Y` in the frame basis.
    pub fn ambient_covariant(&self, x: &FrameVec<S>, y: &FrameVec<S>) -> FrameVec<S> {
        let mut out: FrameVec<S> = std::array::from_fn(|k| self.directional(x, &y[k]));
        for (i, j, k, w) in &self.ambient.connection {
            out[*k] = out[*k].clone() + w.clone() * x[*i].clone() * y[*j].clone();
        }
        out
    }

    /// `g̃(R̃(X,Y)Z, W)` by contraction with the constant frame curvature.
    pub fn ambient_curvature(&self, x: &FrameVec<S>, y: &FrameVec<S>, z: &FrameVec<S>, w: &FrameVec<S>) -> S {
        self.ambient.curvature.iter().fold(S::zero(), |acc, (i, j, k, l, r)| {
            acc + r.clone() * x[*i].clone() * y[*j].clone() * z[*k].clone() * w[*l].clone()
        })
    }

    /// `h(X_i, X_j) = g̃(∇̃_{X_i} X_j, ξ)`.
    pub fn second_fundamental_form(&self) -> SecondFundamentalForm<S> {
        let t = &self.frame.tangents;
        SecondFundamentalForm {
            h: std::array::from_fn(|i| {
                std::array::from_fn(|j| inner(&self.ambient_covariant(&t[i], &t[j]), &self.frame.xi))
            }),
        }
    }

    /// Matrix of `A_ξ X = −∇̃_X ξ` in the tangent frame:
    /// `A[i][j] = g̃(A_ξ X_i, X_j)`.
    pub fn shape_operator(&self) -> [[S; 3]; 3] {
        let t = &self.frame.tangents;
        std::array::from_fn(|i| {
            let nab = self.ambient_covariant(&t[i], &self.frame.xi);
            std::array::from_fn(|j| -inner(&nab, &t[j]))
        })
    }

    /// `H = (1/3) trace h`.
    pub fn mean_curvature(&self) -> S {
        let h = self.second_fundamental_form().h;
        (h[0][0].clone() + h[1][1].clone() + h[2][2].clone()).scale(&rat(1, 3))
    }

    /// `g(∇_{X_i} X_j, X_m)` of the induced connection `∇_X Y = ∇̃_X Y − h(X,Y) ξ`.
    pub fn induced_connection(&self) -> [[[S; 3]; 3]; 3] {
        let t = &self.frame.tangents;
        let h = self.second_fundamental_form().h;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let amb = self.ambient_covariant(&t[i], &t[j]);
                let induced: FrameVec<S> =
                    std::array::from_fn(|k| amb[k].clone() - h[i][j].clone() * self.frame.xi[k].clone());
                std::array::from_fn(|m| inner(&induced, &t[m]))
            })
        })
    }

    /// `(∇_X h)(Y,Z) = X(h(Y,Z)) − h(∇_X Y, Z) − h(Y, ∇_X Z)` on the tangent frame.
    pub fn cubic_form(&self) -> CubicForm<S> {
        let t = &self.frame.tangents;
        let h = self.second_fundamental_form().h;
        let gamma = self.induced_connection();
        CubicForm {
            c: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    std::array::from_fn(|k| {
                        let mut v = self.directional(&t[i], &h[j][k]);
                        for m in 0..3 {
                            v = v - gamma[i][j][m].clone() * h[m][k].clone() - gamma[i][k][m].clone() * h[j][m].clone();
                        }
                        v
                    })
                })
            }),
        }
    }

    pub fn is_parallel(&self) -> bool {
        self.cubic_form()
            .c
            .iter()
            .flatten()
            .flatten()
            .all(|v| v.is_negligible(self.tol))
    }

    /// `(∇_{X_i} h)(X_j, X_k) − (∇_{X_j} h)(X_i, X_k)`, the cubic-form side of
    /// the Codazzi equation.
    pub fn codazzi_residual(&self, i: usize, j: usize, k: usize) -> S {
        let c = self.cubic_form().c;
        c[i][j][k].clone() - c[j][i][k].clone()
    }

    /// All 27 cubic-form-side residuals, from one cubic form evaluation.
    pub fn codazzi_residuals(&self) -> [[[S; 3]; 3]; 3] {
        let c = self.cubic_form().c;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| std::array::from_fn(|k| c[i][j][k].clone() - c[j][i][k].clone()))
        })
    }

    /// `g̃(R̃(X_i, X_j) X_k, ξ)`, the curvature side of the Codazzi equation.
    pub fn codazzi_curvature(&self, i: usize, j: usize, k: usize) -> S {
        let t = &self.frame.tangents;
        self.ambient_curvature(&t[i], &t[j], &t[k], &self.frame.xi)
    }

    /// Induced `g(R(X_i,X_j)X_k, X_l)` from the Gauss equation.
    pub fn gauss_induced_curvature(&self, i: usize, j: usize, k: usize, l: usize) -> S {
        let h = self.second_fundamental_form().h;
        self.gauss_with(&h, i, j, k, l)
    }

    fn gauss_with(&self, h: &[[S; 3]; 3], i: usize, j: usize, k: usize, l: usize) -> S {
        let t = &self.frame.tangents;
        self.ambient_curvature(&t[i], &t[j], &t[k], &t[l]) + h[j][k].clone() * h[i][l].clone()
            - h[i][k].clone() * h[j][l].clone()
    }

    /// Induced curvature table `[i][j][k][l]` over the tangent frame.
    pub fn induced_curvature_table(&self) -> [[[[S; 3]; 3]; 3]; 3] {
        let h = self.second_fundamental_form().h;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| std::array::from_fn(|k| std::array::from_fn(|l| self.gauss_with(&h, i, j, k, l))))
        })
    }

    /// Induced Ricci `S_ij = Σ_a g(R(X_i,X_a)X_a, X_j)` and scalar curvature.
    pub fn induced_ricci(&self) -> ([[S; 3]; 3], S) {
        let r = self.induced_curvature_table();
        let s: [[S; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).fold(S::zero(), |acc, a| acc + r[i][a][a][j].clone()))
        });
        let tau = s[0][0].clone() + s[1][1].clone() + s[2][2].clone();
        (s, tau)
    }
}

fn check_frame<S: Ring>(frame: &HypersurfaceFrame<S>, tol: f64) -> Result<(), HypersurfaceError> {
    let entry = |name: String, value: S, expected: i32| -> Result<(), HypersurfaceError> {
        let diff = value.clone() - S::from_int(expected as i64);
        if diff.is_negligible(tol) {
            Ok(())
        } else {
            Err(HypersurfaceError::InvariantViolation {
                entry: name,
                value: render(&value),
                expected,
            })
        }
    };
    entry("g(xi, xi)".into(), inner(&frame.xi, &frame.xi), 1)?;
    for (a, x) in frame.tangents.iter().enumerate() {
        entry(format!("g(xi, X{})", a + 1), inner(&frame.xi, x), 0)?;
        for (b, y) in frame.tangents.iter().enumerate().skip(a) {
            entry(format!("g(X{}, X{})", a + 1, b + 1), inner(x, y), i32::from(a == b))?;
        }
    }
    Ok(())
}
