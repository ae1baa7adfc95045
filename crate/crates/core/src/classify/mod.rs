//! Classification of Codazzi hypersurfaces of Nil⁴ with left-invariant frames.
//!
//! For a constant unit normal `ξ = a e1 + b e2 + c e3 + d e4`, the six fields
//! `X_1..X_6` span `ξ^⊥`. A Codazzi hypersurface must satisfy
//! `g̃(R̃(X_i,X_j)X_k, ξ) = 0` for every triple; these are quartic forms in
//! `(a, b, c, d)`. Triples are written 1-based throughout this module.

mod identities;
mod sweep;
mod tree;

pub use identities::{check_identities, verify_printed_identities, IdentityCheck, IdentityReport};
pub use sweep::{frobenius_defect, injected_candidates, sample_normal, sweep_numeric, system_residual, SweepReport};
pub use tree::{classify_symbolic, BranchReport, ClassificationReport, LeafReport};

use crate::geometry::FrameGeometry;
use crate::scalar::{Poly, Ring, Var};

/// `X_1..X_6` in the frame basis, built from the normal's coefficients.
pub fn tangent_generators<S: Ring>(xi: &[S; 4]) -> [[S; 4]; 6] {
    let [a, b, c, d] = xi.clone();
    let z = S::zero;
    [
        [b.clone(), -a.clone(), z(), z()],
        [c.clone(), z(), -a.clone(), z()],
        [d.clone(), z(), z(), -a],
        [z(), c.clone(), -b.clone(), z()],
        [z(), d.clone(), z(), -b],
        [z(), z(), d, -c],
    ]
}

/// `g̃(R̃(X_i,X_j)X_k, ξ)` for 0-based generator indices, in any ring.
pub fn curvature_normal<S: Ring>(geometry: &FrameGeometry, xi: &[S; 4], i: usize, j: usize, k: usize) -> S {
    let x = tangent_generators(xi);
    let mut acc = S::zero();
    for p in 0..4 {
        for q in 0..4 {
            for r in 0..4 {
                for l in 0..4 {
                    let c = &geometry.curvature[p][q][r][l];
                    if num::Zero::is_zero(c) {
                        continue;
                    }
                    acc =
                        acc + S::from_rational(c) * x[i][p].clone() * x[j][q].clone() * x[k][r].clone() * xi[l].clone();
                }
            }
        }
    }
    acc
}

/// The symbolic normal `(a, b, c, d)`.
pub fn symbolic_normal() -> [Poly; 4] {
    Var::NORMAL.map(Poly::var)
}

/// All 216 curvature-normal polynomials.
#[derive(Debug, Clone)]
pub struct CurvatureNormalSystem {
    polys: Vec<Poly>,
}

impl CurvatureNormalSystem {
    pub fn new(geometry: &FrameGeometry) -> Self {
        use rayon::prelude::*;
        let xi = symbolic_normal();
        let polys = (0..216)
            .into_par_iter()
            .map(|n| curvature_normal(geometry, &xi, n / 36, (n / 6) % 6, n % 6))
            .collect();
        CurvatureNormalSystem { polys }
    }

    pub fn nil4() -> Self {
        Self::new(&FrameGeometry::nil4())
    }

    /// The polynomial for a 1-based triple.
    pub fn get(&self, triple: [usize; 3]) -> &Poly {
        let [i, j, k] = triple.map(|n| {
            assert!((1..=6).contains(&n), "generator index {n} out of range");
            n - 1
        });
        &self.polys[36 * i + 6 * j + k]
    }

    /// `(triple, polynomial)` over all triples in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ([usize; 3], &Poly)> {
        self.polys
            .iter()
            .enumerate()
            .map(|(n, p)| ([n / 36 + 1, (n / 6) % 6 + 1, n % 6 + 1], p))
    }

    /// True iff every polynomial vanishes at the given exact point.
    pub fn vanishes_at(&self, point: &[crate::scalar::Rational; 4]) -> bool {
        let val = |v: Var| {
            Var::NORMAL
                .iter()
                .position(|&w| w == v)
                .map(|i| Poly::constant(point[i].clone()))
        };
        self.polys.iter().all(|p| p.substitute(&val).is_zero())
    }
}

/// `curvature_normal_polynomial(i, j, k)` for a 1-based triple.
pub fn curvature_normal_polynomial(triple: [usize; 3]) -> Poly {
    let [i, j, k] = triple.map(|n| n - 1);
    curvature_normal(&FrameGeometry::nil4(), &symbolic_normal(), i, j, k)
}

/// Applies `var = expr` substitutions to a polynomial.
pub fn substitute_all(p: &Poly, subs: &[(Var, Poly)]) -> Poly {
    p.substitute(&|v| subs.iter().find(|(w, _)| *w == v).map(|(_, e)| e.clone()))
}
