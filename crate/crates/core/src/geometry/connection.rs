use rayon::prelude::*;

use crate::scalar::{rat, RatFunc, Var};

use super::fields::{MetricField, VectorFieldExpr};
use super::GeometryError;

/// Christoffel symbols `gamma[k][i][j] = Γ^k_{ij}` of a torsion-free connection.
#[derive(Debug, Clone, PartialEq)]
pub struct Connection {
    pub gamma: [[[RatFunc; 4]; 4]; 4],
}

impl Connection {
    pub fn flat() -> Self {
        Connection {
            gamma: Default::default(),
        }
    }

    pub fn symbol(&self, k: usize, i: usize, j: usize) -> &RatFunc {
        &self.gamma[k][i][j]
    }

    pub fn is_torsion_free(&self) -> bool {
        (0..4).all(|k| (0..4).all(|i| (0..i).all(|j| (&self.gamma[k][i][j] - &self.gamma[k][j][i]).is_zero())))
    }

    /// `∂_k g_ij − Γ^l_{ki} g_lj − Γ^l_{kj} g_il = 0` for all `i, j, k`.
    pub fn is_compatible_with(&self, metric: &MetricField) -> bool {
        let g = &metric.entries;
        (0..4).all(|k| {
            (0..4).all(|i| {
                (0..4).all(|j| {
                    let mut r = g[i][j].differentiate(Var::COORDS[k]);
                    for l in 0..4 {
                        r = &r - &(&self.gamma[l][k][i] * &g[l][j]);
                        r = &r - &(&self.gamma[l][k][j] * &g[i][l]);
                    }
                    r.is_zero()
                })
            })
        })
    }
}

/// Levi-Civita connection of `metric`:
/// `Γ^k_{ij} = ½ g^{kl} (∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})`.
pub fn christoffel(metric: &MetricField) -> Result<Connection, GeometryError> {
    if !metric.is_symmetric() {
        return Err(GeometryError::AsymmetricMetric);
    }
    let inv = metric.inverse()?;
    let g = &metric.entries;
    // dg[l][i][j] = ∂_l g_ij
    let dg: [[[RatFunc; 4]; 4]; 4] = std::array::from_fn(|l| {
        std::array::from_fn(|i| std::array::from_fn(|j| g[i][j].differentiate(Var::COORDS[l])))
    });
    let half = rat(1, 2);
    let mut gamma: [[[RatFunc; 4]; 4]; 4] = Default::default();
    for i in 0..4 {
        for j in i..4 {
            // first kind, lowered index l
            let lowered: [RatFunc; 4] = std::array::from_fn(|l| &(&dg[i][j][l] + &dg[j][i][l]) - &dg[l][i][j]);
            for k in 0..4 {
                let mut acc = RatFunc::zero();
                for (l, low) in lowered.iter().enumerate() {
                    if !low.is_zero() && !inv[k][l].is_zero() {
                        acc = &acc + &(&inv[k][l] * low);
                    }
                }
                let v = acc.scale(&half);
                gamma[k][j][i] = v.clone();
                gamma[k][i][j] = v;
            }
        }
    }
    Ok(Connection { gamma })
}

/// `∇_X Y`, component `k` = `X(Y^k) + Γ^k_{ij} X^i Y^j`.
pub fn covariant_derivative(conn: &Connection, x: &VectorFieldExpr, y: &VectorFieldExpr) -> VectorFieldExpr {
    let components = std::array::from_fn(|k| {
        let mut acc = x.apply(&y.components[k]);
        for i in 0..4 {
            if x.components[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                let g = &conn.gamma[k][i][j];
                if g.is_zero() || y.components[j].is_zero() {
                    continue;
                }
                acc = &acc + &(&(g * &x.components[i]) * &y.components[j]);
            }
        }
        acc
    });
    VectorFieldExpr { components }
}

/// `[X, Y]^k = X(Y^k) − Y(X^k)`.
pub fn lie_bracket(x: &VectorFieldExpr, y: &VectorFieldExpr) -> VectorFieldExpr {
    VectorFieldExpr {
        components: std::array::from_fn(|k| &x.apply(&y.components[k]) - &y.apply(&x.components[k])),
    }
}

/// `R(X,Y)Z = ∇_X ∇_Y Z − ∇_Y ∇_X Z − ∇_{[X,Y]} Z`.
pub fn riemann(conn: &Connection, x: &VectorFieldExpr, y: &VectorFieldExpr, z: &VectorFieldExpr) -> VectorFieldExpr {
    let xyz = covariant_derivative(conn, x, &covariant_derivative(conn, y, z));
    let yxz = covariant_derivative(conn, y, &covariant_derivative(conn, x, z));
    let bz = covariant_derivative(conn, &lie_bracket(x, y), z);
    &(&xyz - &yxz) - &bz
}

/// All 256 values `g(R(e_i,e_j)e_k, e_l)`, indexed `[i][j][k][l]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureTable {
    pub values: [[[[RatFunc; 4]; 4]; 4]; 4],
}

impl CurvatureTable {
    pub fn compute(conn: &Connection, metric: &MetricField, frame: &[VectorFieldExpr; 4]) -> Self {
        let triples: Vec<(usize, usize, usize)> = (0..4)
            .flat_map(|i| (0..4).flat_map(move |j| (0..4).map(move |k| (i, j, k))))
            .collect();
        let rows: Vec<[RatFunc; 4]> = triples
            .par_iter()
            .map(|&(i, j, k)| {
                let r = riemann(conn, &frame[i], &frame[j], &frame[k]);
                std::array::from_fn(|l| metric.inner(&r, &frame[l]))
            })
            .collect();
        let mut values: [[[[RatFunc; 4]; 4]; 4]; 4] = Default::default();
        for (&(i, j, k), row) in triples.iter().zip(rows) {
            values[i][j][k] = row;
        }
        CurvatureTable { values }
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &RatFunc {
        &self.values[i][j][k][l]
    }

    /// Nonzero entries as `((i,j,k,l), value)`, 0-based, lexicographic.
    pub fn nonzero(&self) -> Vec<([usize; 4], RatFunc)> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = &self.values[i][j][k][l];
                        if !v.is_zero() {
                            out.push(([i, j, k, l], v.clone()));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Frame-traced Ricci tensor `S_ij = Σ_a g(R(e_i,e_a)e_a, e_j)` and its trace.
#[derive(Debug, Clone, PartialEq)]
pub struct RicciTensor {
    pub matrix: [[RatFunc; 4]; 4],
    pub scalar: RatFunc,
}

pub fn check_orthonormal(metric: &MetricField, frame: &[VectorFieldExpr; 4]) -> Result<(), GeometryError> {
    for i in 0..4 {
        for j in i..4 {
            let gij = metric.inner(&frame[i], &frame[j]);
            let expect = if i == j { RatFunc::one() } else { RatFunc::zero() };
            if !(&gij - &expect).is_zero() {
                return Err(GeometryError::NonOrthonormalFrame {
                    i: i + 1,
                    j: j + 1,
                    value: gij.render(),
                });
            }
        }
    }
    Ok(())
}

pub fn ricci(
    conn: &Connection,
    metric: &MetricField,
    frame: &[VectorFieldExpr; 4],
) -> Result<RicciTensor, GeometryError> {
    check_orthonormal(metric, frame)?;
    let table = CurvatureTable::compute(conn, metric, frame);
    Ok(ricci_from_table(&table))
}

pub fn ricci_from_table(table: &CurvatureTable) -> RicciTensor {
    let matrix: [[RatFunc; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..4).fold(RatFunc::zero(), |acc, a| &acc + table.get(i, a, a, j)))
    });
    let scalar = (0..4).fold(RatFunc::zero(), |acc, i| &acc + &matrix[i][i]);
    RicciTensor { matrix, scalar }
}

pub fn scalar_curvature(
    conn: &Connection,
    metric: &MetricField,
    frame: &[VectorFieldExpr; 4],
) -> Result<RatFunc, GeometryError> {
    Ok(ricci(conn, metric, frame)?.scalar)
}

/// Coordinate Ricci tensor `Ric_{bd} = R^a_{bad}` from the Christoffel symbols,
/// and its metric trace `g^{bd} Ric_{bd}`. Cross-check for the frame-traced form.
pub fn ricci_contracted(
    conn: &Connection,
    metric: &MetricField,
) -> Result<([[RatFunc; 4]; 4], RatFunc), GeometryError> {
    let gam = &conn.gamma;
    // R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} − Γ^a_{de} Γ^e_{cb}
    let riem = |a: usize, b: usize, c: usize, d: usize| -> RatFunc {
        let mut r = &gam[a][d][b].differentiate(Var::COORDS[c]) - &gam[a][c][b].differentiate(Var::COORDS[d]);
        for e in 0..4 {
            r = &r + &(&gam[a][c][e] * &gam[e][d][b]);
            r = &r - &(&gam[a][d][e] * &gam[e][c][b]);
        }
        r
    };
    let ric: [[RatFunc; 4]; 4] = std::array::from_fn(|b| {
        std::array::from_fn(|d| (0..4).fold(RatFunc::zero(), |acc, a| &acc + &riem(a, b, a, d)))
    });
    let inv = metric.inverse()?;
    let mut scalar = RatFunc::zero();
    for b in 0..4 {
        for d in 0..4 {
            scalar = &scalar + &(&inv[b][d] * &ric[b][d]);
        }
    }
    Ok((ric, scalar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::fields::{coordinate_frame, standard_frame, standard_metric};

    #[test]
    fn euclidean_metric_is_flat() {
        let g = MetricField::euclidean();
        let conn = christoffel(&g).unwrap();
        assert_eq!(conn, Connection::flat());
        let ric = ricci(&conn, &g, &coordinate_frame()).unwrap();
        assert!(ric.scalar.is_zero());
        assert!(ric.matrix.iter().flatten().all(RatFunc::is_zero));
    }

    #[test]
    fn standard_connection_is_levi_civita() {
        let g = standard_metric();
        let conn = christoffel(&g).unwrap();
        assert!(conn.is_torsion_free());
        assert!(conn.is_compatible_with(&g));
        assert!(conn.symbol(0, 0, 0).is_zero());
    }

    #[test]
    fn bracket_equals_torsion_free_difference() {
        let g = standard_metric();
        let conn = christoffel(&g).unwrap();
        let e = standard_frame();
        for i in 0..4 {
            for j in 0..4 {
                let lhs = lie_bracket(&e[i], &e[j]);
                let rhs = &covariant_derivative(&conn, &e[i], &e[j]) - &covariant_derivative(&conn, &e[j], &e[i]);
                assert!((&lhs - &rhs).is_zero());
            }
        }
    }

    #[test]
    fn ricci_rejects_non_orthonormal_frame() {
        let g = standard_metric();
        let conn = christoffel(&g).unwrap();
        let err = ricci(&conn, &g, &coordinate_frame()).unwrap_err();
        assert!(matches!(err, GeometryError::NonOrthonormalFrame { .. }));
    }

    #[test]
    fn contracted_ricci_agrees_with_frame_trace() {
        let g = standard_metric();
        let conn = christoffel(&g).unwrap();
        let (_, scalar) = ricci_contracted(&conn, &g).unwrap();
        let frame_scalar = scalar_curvature(&conn, &g, &standard_frame()).unwrap();
        assert!((&scalar - &frame_scalar).is_zero());
    }
}
