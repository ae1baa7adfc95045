use nalgebra::{Matrix3, SymmetricEigen, Vector3};

/// Eigenvalues of a symmetric shape operator, ascending, with the largest
/// eigen-residual `‖A v − λ v‖`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrincipalCurvatures {
    pub values: [f64; 3],
    pub max_residual: f64,
}

pub fn principal_curvatures(h: &[[f64; 3]; 3]) -> PrincipalCurvatures {
    let a = Matrix3::from_fn(|i, j| 0.5 * (h[i][j] + h[j][i]));
    let eig = SymmetricEigen::new(a);
    let mut pairs: Vec<(f64, Vector3<f64>)> = (0..3)
        .map(|k| (eig.eigenvalues[k], eig.eigenvectors.column(k).into_owned()))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let max_residual = pairs.iter().map(|(l, v)| (a * v - v * *l).norm()).fold(0.0, f64::max);
    PrincipalCurvatures {
        values: [pairs[0].0, pairs[1].0, pairs[2].0],
        max_residual,
    }
}
