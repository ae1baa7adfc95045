use crate::scalar::{Poly, RatFunc, Var};

use super::fields::VectorFieldExpr;
use super::group::GroupElement;

/// Checks `(dL_p)_q X(q) = X(pq)` for every field, as an exact identity in the
/// chart coordinates of `q` and four extra indeterminates for `p`.
pub fn verify_left_invariance(frame: &[VectorFieldExpr]) -> bool {
    let p = GroupElement::new(
        RatFunc::var(Var::Px),
        RatFunc::var(Var::Py),
        RatFunc::var(Var::Pz),
        RatFunc::var(Var::Pt),
    );
    let q = GroupElement::new(
        RatFunc::var(Var::X),
        RatFunc::var(Var::Y),
        RatFunc::var(Var::Z),
        RatFunc::var(Var::T),
    );
    let pq = p.multiply(&q).coords();
    // the group law is polynomial, so the images are polynomials
    let images: Vec<Poly> = pq
        .iter()
        .map(|c| c.as_poly().cloned().expect("group law is polynomial"))
        .collect();
    let jacobian: [[RatFunc; 4]; 4] =
        std::array::from_fn(|mu| std::array::from_fn(|nu| pq[mu].differentiate(Var::COORDS[nu])));
    let at_pq = |f: &RatFunc| {
        f.substitute(&|v| Var::COORDS.iter().position(|&c| c == v).map(|i| images[i].clone()))
            .expect("substituting polynomials keeps denominators nonzero")
    };
    frame.iter().all(|field| {
        (0..4).all(|mu| {
            let pushed = (0..4).fold(RatFunc::zero(), |acc, nu| {
                &acc + &(&jacobian[mu][nu] * &field.components[nu])
            });
            (&pushed - &at_pq(&field.components[mu])).is_zero()
        })
    })
}
