use crate::scalar::{rat, Ring};

/// Element `(V, t)` of the semidirect product `R^3 ⋊ R` with `U(t) = exp(tL)`.
///
/// Generic over the scalar so the group law can be evaluated on floats, exact
/// rationals, or polynomials with symbolic entries.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement<S> {
    pub v: [S; 3],
    pub t: S,
}

impl<S: Ring> GroupElement<S> {
    pub fn new(x: S, y: S, z: S, t: S) -> Self {
        GroupElement { v: [x, y, z], t }
    }

    pub fn identity() -> Self {
        GroupElement {
            v: [S::zero(), S::zero(), S::zero()],
            t: S::zero(),
        }
    }

    /// Chart coordinates `(x, y, z, t)`.
    pub fn coords(&self) -> [S; 4] {
        [self.v[0].clone(), self.v[1].clone(), self.v[2].clone(), self.t.clone()]
    }

    /// `(V, t)(V', t') = (V + exp(tL) V', t + t')`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let u = exp_tl(&self.t);
        let mut v = self.v.clone();
        for (i, vi) in v.iter_mut().enumerate() {
            let mut acc = vi.clone();
            for (j, w) in rhs.v.iter().enumerate() {
                acc = acc + u[i][j].clone() * w.clone();
            }
            *vi = acc;
        }
        GroupElement {
            v,
            t: self.t.clone() + rhs.t.clone(),
        }
    }

    pub fn inverse(&self) -> Self {
        let neg_t = -self.t.clone();
        let u = exp_tl(&neg_t);
        let v = std::array::from_fn(|i| {
            let mut acc = S::zero();
            for j in 0..3 {
                acc = acc - u[i][j].clone() * self.v[j].clone();
            }
            acc
        });
        GroupElement { v, t: neg_t }
    }
}

/// Nilpotent generator `L` (ones on the superdiagonal).
pub fn generator_l<S: Ring>() -> [[S; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| if j == i + 1 { S::one() } else { S::zero() }))
}

/// `exp(tL) = I + tL + t^2/2 L^2`, exact because `L^3 = 0`.
pub fn exp_tl<S: Ring>(t: &S) -> [[S; 3]; 3] {
    let half_t2 = (t.clone() * t.clone()).scale(&rat(1, 2));
    let o = S::zero;
    [
        [S::one(), t.clone(), half_t2],
        [o(), S::one(), t.clone()],
        [o(), o(), S::one()],
    ]
}

/// Free-function form of [`GroupElement::multiply`].
pub fn nil4_multiply<S: Ring>(p: &GroupElement<S>, q: &GroupElement<S>) -> GroupElement<S> {
    p.multiply(q)
}
