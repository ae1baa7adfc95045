use std::ops::{Add, Sub};

use crate::scalar::{rat, RatFunc, Ring, Var};

use super::GeometryError;

/// Vector field in the coordinate basis `∂x, ∂y, ∂z, ∂t`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VectorFieldExpr {
    pub components: [RatFunc; 4],
}

impl VectorFieldExpr {
    pub fn new(components: [RatFunc; 4]) -> Self {
        VectorFieldExpr { components }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Coordinate field `∂/∂x^mu`.
    pub fn coordinate(mu: usize) -> Self {
        VectorFieldExpr {
            components: std::array::from_fn(|i| if i == mu { RatFunc::one() } else { RatFunc::zero() }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RatFunc::is_zero)
    }

    pub fn scale(&self, f: &RatFunc) -> Self {
        VectorFieldExpr {
            components: std::array::from_fn(|i| &self.components[i] * f),
        }
    }

    /// `Σ c_i V_i` for coefficient functions `c_i`.
    pub fn combination(coeffs: &[RatFunc], fields: &[VectorFieldExpr]) -> Self {
        coeffs
            .iter()
            .zip(fields)
            .fold(VectorFieldExpr::zero(), |acc, (c, f)| &acc + &f.scale(c))
    }

    /// Directional derivative `X(f) = Σ X^mu ∂_mu f`.
    pub fn apply(&self, f: &RatFunc) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (c, v) in self.components.iter().zip(Var::COORDS) {
            if c.is_zero() {
                continue;
            }
            let df = f.differentiate(v);
            if !df.is_zero() {
                acc = &acc + &(c * &df);
            }
        }
        acc
    }
}

impl<'a> Add<&'a VectorFieldExpr> for &'a VectorFieldExpr {
    type Output = VectorFieldExpr;
    fn add(self, rhs: &VectorFieldExpr) -> VectorFieldExpr {
        VectorFieldExpr {
            components: std::array::from_fn(|i| &self.components[i] + &rhs.components[i]),
        }
    }
}

impl<'a> Sub<&'a VectorFieldExpr> for &'a VectorFieldExpr {
    type Output = VectorFieldExpr;
    fn sub(self, rhs: &VectorFieldExpr) -> VectorFieldExpr {
        VectorFieldExpr {
            components: std::array::from_fn(|i| &self.components[i] - &rhs.components[i]),
        }
    }
}

/// Four covector fields, row `i` holding the `dx, dy, dz, dt` coefficients of `θ_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoframeExpr {
    pub rows: [[RatFunc; 4]; 4],
}

impl CoframeExpr {
    /// `θ_i(X)`.
    pub fn pair(&self, i: usize, x: &VectorFieldExpr) -> RatFunc {
        self.rows[i]
            .iter()
            .zip(&x.components)
            .fold(RatFunc::zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// Frame-basis coefficients `(θ_1(X), …, θ_4(X))`.
    pub fn components(&self, x: &VectorFieldExpr) -> [RatFunc; 4] {
        std::array::from_fn(|i| self.pair(i, x))
    }

    /// Matrix `θ_i(e_j)`; the identity exactly when the coframe is dual to `frame`.
    pub fn pairing_matrix(&self, frame: &[VectorFieldExpr; 4]) -> [[RatFunc; 4]; 4] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.pair(i, &frame[j])))
    }

    pub fn is_dual_to(&self, frame: &[VectorFieldExpr; 4]) -> bool {
        let m = self.pairing_matrix(frame);
        (0..4).all(|i| {
            (0..4).all(|j| {
                let delta = if i == j { RatFunc::one() } else { RatFunc::zero() };
                (&m[i][j] - &delta).is_zero()
            })
        })
    }
}

/// Metric components `g_{mu nu}` in the coordinate basis.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricField {
    pub entries: [[RatFunc; 4]; 4],
}

impl MetricField {
    pub fn new(entries: [[RatFunc; 4]; 4]) -> Result<Self, GeometryError> {
        let m = MetricField { entries };
        if !m.is_symmetric() {
            return Err(GeometryError::AsymmetricMetric);
        }
        Ok(m)
    }

    pub fn euclidean() -> Self {
        MetricField {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| if i == j { RatFunc::one() } else { RatFunc::zero() })
            }),
        }
    }

    /// `g = Σ θ_i ⊗ θ_i`.
    pub fn from_coframe(coframe: &CoframeExpr) -> Self {
        let entries = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                coframe
                    .rows
                    .iter()
                    .fold(RatFunc::zero(), |acc, row| &acc + &(&row[mu] * &row[nu]))
            })
        });
        MetricField { entries }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..i).all(|j| (&self.entries[i][j] - &self.entries[j][i]).is_zero()))
    }

    pub fn inner(&self, x: &VectorFieldExpr, y: &VectorFieldExpr) -> RatFunc {
        let mut acc = RatFunc::zero();
        for mu in 0..4 {
            if x.components[mu].is_zero() {
                continue;
            }
            for nu in 0..4 {
                if y.components[nu].is_zero() || self.entries[mu][nu].is_zero() {
                    continue;
                }
                acc = &acc + &(&(&x.components[mu] * &self.entries[mu][nu]) * &y.components[nu]);
            }
        }
        acc
    }

    pub fn determinant(&self) -> RatFunc {
        det4(&self.entries)
    }

    /// Inverse by adjugate over the rational-function field.
    pub fn inverse(&self) -> Result<[[RatFunc; 4]; 4], GeometryError> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(GeometryError::SingularMetric);
        }
        let inv_det = det.recip()?;
        let m = &self.entries;
        Ok(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                // (A^-1)_{ij} = C_{ji} / det
                let minor = det3(&minor(m, j, i));
                let sign = if (i + j) % 2 == 0 {
                    RatFunc::one()
                } else {
                    RatFunc::int(-1)
                };
                &(&sign * &minor) * &inv_det
            })
        }))
    }
}

fn minor(m: &[[RatFunc; 4]; 4], row: usize, col: usize) -> [[RatFunc; 3]; 3] {
    let rows: Vec<usize> = (0..4).filter(|&r| r != row).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != col).collect();
    std::array::from_fn(|i| std::array::from_fn(|j| m[rows[i]][cols[j]].clone()))
}

pub fn det3<S: Ring>(m: &[[S; 3]; 3]) -> S {
    let c = |i: usize, j: usize| m[i][j].clone();
    c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1)) - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0))
        + c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0))
}

fn det4(m: &[[RatFunc; 4]; 4]) -> RatFunc {
    let mut acc = RatFunc::zero();
    for j in 0..4 {
        if m[0][j].is_zero() {
            continue;
        }
        let term = &m[0][j] * &det3(&minor(m, 0, j));
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// The left-invariant frame `e_1 … e_4` of Nil⁴ in coordinates.
pub fn standard_frame() -> [VectorFieldExpr; 4] {
    let t = RatFunc::var(Var::T);
    let half_t2 = t.pow(2).scale(&rat(1, 2));
    let o = RatFunc::zero;
    let l = RatFunc::one;
    [
        VectorFieldExpr::new([l(), o(), o(), o()]),
        VectorFieldExpr::new([t.clone(), l(), o(), o()]),
        VectorFieldExpr::new([half_t2, t, l(), o()]),
        VectorFieldExpr::new([o(), o(), o(), l()]),
    ]
}

/// The dual coframe `θ_1 … θ_4`.
pub fn standard_coframe() -> CoframeExpr {
    let t = RatFunc::var(Var::T);
    let half_t2 = t.pow(2).scale(&rat(1, 2));
    let o = RatFunc::zero;
    let l = RatFunc::one;
    CoframeExpr {
        rows: [
            [l(), -t.clone(), half_t2, o()],
            [o(), l(), -t, o()],
            [o(), o(), l(), o()],
            [o(), o(), o(), l()],
        ],
    }
}

/// `g̃ = θ_1² + θ_2² + θ_3² + θ_4²`, assembled from the coframe.
pub fn standard_metric() -> MetricField {
    MetricField::from_coframe(&standard_coframe())
}

/// The coordinate frame `∂x, ∂y, ∂z, ∂t`.
pub fn coordinate_frame() -> [VectorFieldExpr; 4] {
    std::array::from_fn(VectorFieldExpr::coordinate)
}
