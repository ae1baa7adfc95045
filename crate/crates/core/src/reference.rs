//! Published reference values for Nil⁴, used as comparison targets for the
//! engine's derivations. Nothing here is an input to a computation.
//!
//! Indices are 1-based, as printed.

use crate::scalar::{rat, Poly, RatFunc, Rational, Var};

/// One printed curvature-normal identity: `g̃(R̃(X_i,X_j)X_k, ξ) = printed`
/// after applying `substitution` to the normal coefficients.
#[derive(Debug, Clone)]
pub struct PrintedIdentity {
    pub branch: &'static str,
    pub triple: [usize; 3],
    pub substitution: Vec<(Var, Poly)>,
    pub printed: Poly,
}

/// Every printed table the engine is checked against.
#[derive(Debug, Clone)]
pub struct ReferenceTables {
    /// `(g̃_ij)` in coordinates.
    pub metric: [[RatFunc; 4]; 4],
    /// Nonzero `Γ^k_ij` with `i <= j`, as `([k, i, j], value)`.
    pub christoffel: Vec<([usize; 3], RatFunc)>,
    /// Nonzero `∇̃_{e_i} e_j` in the frame basis, as `([i, j], coefficients)`.
    pub connection: Vec<([usize; 2], [Rational; 4])>,
    /// Nonzero `[e_i, e_j]` with the first index larger, as `([i, j], coefficients)`.
    pub brackets: Vec<([usize; 2], [Rational; 4])>,
    /// Printed nonzero `g̃(R̃(e_i,e_j)e_k, e_l)`.
    pub curvature: Vec<([usize; 4], Rational)>,
    pub ricci: [[Rational; 4]; 4],
    pub scalar: Rational,
    /// Second fundamental form and shape operator of the slice `t = t0`.
    pub slice_h: [[Rational; 3]; 3],
    pub slice_shape: [[Rational; 3]; 3],
    pub slice_principal: [f64; 3],
    /// Printed induced Ricci matrix of the slice and its scalar curvature.
    pub slice_ricci: [[Rational; 3]; 3],
    pub slice_tau: Rational,
    pub identities: Vec<PrintedIdentity>,
}

fn t() -> RatFunc {
    RatFunc::var(Var::T)
}

fn q(n: i64, d: i64) -> RatFunc {
    RatFunc::constant(rat(n, d))
}

fn v(var: Var) -> Poly {
    Poly::var(var)
}

fn frame_vec(c: [(i64, i64); 4]) -> [Rational; 4] {
    c.map(|(n, d)| rat(n, d))
}

impl ReferenceTables {
    pub fn published() -> Self {
        let one = RatFunc::one;
        let zero = RatFunc::zero;
        let t2 = t().pow(2);
        let metric = [
            [one(), -t(), t2.scale(&rat(1, 2)), zero()],
            [-t(), &one() + &t2, -(&t() * &(&one() + &t2.scale(&rat(1, 2)))), zero()],
            [
                t2.scale(&rat(1, 2)),
                -(&t() * &(&one() + &t2.scale(&rat(1, 2)))),
                &(&one() + &t2) + &t().pow(4).scale(&rat(1, 4)),
                zero(),
            ],
            [zero(), zero(), zero(), one()],
        ];

        let christoffel = vec![
            ([4, 1, 2], q(1, 2)),
            ([4, 1, 3], t().scale(&rat(-1, 2))),
            ([1, 1, 4], t().scale(&rat(-1, 2))),
            ([2, 1, 4], q(-1, 2)),
            ([4, 2, 2], -t()),
            ([4, 2, 3], &q(1, 2) + &t2.scale(&rat(3, 4))),
            ([1, 2, 4], &q(-1, 2) + &t2.scale(&rat(1, 4))),
            ([3, 2, 4], q(-1, 2)),
            ([4, 3, 3], -(&t() * &(&one() + &t2.scale(&rat(1, 2))))),
            ([2, 3, 4], &q(-1, 2) + &t2.scale(&rat(1, 4))),
            ([3, 3, 4], t().scale(&rat(1, 2))),
        ];

        let h = (1, 2);
        let mh = (-1, 2);
        let o = (0, 1);
        let connection = vec![
            ([1, 2], frame_vec([o, o, o, h])),
            ([1, 4], frame_vec([o, mh, o, o])),
            ([2, 1], frame_vec([o, o, o, h])),
            ([2, 3], frame_vec([o, o, o, h])),
            ([2, 4], frame_vec([mh, o, mh, o])),
            ([3, 2], frame_vec([o, o, o, h])),
            ([3, 4], frame_vec([o, mh, o, o])),
            ([4, 1], frame_vec([o, mh, o, o])),
            ([4, 2], frame_vec([h, o, mh, o])),
            ([4, 3], frame_vec([o, h, o, o])),
        ];

        let brackets = vec![
            ([4, 2], frame_vec([(1, 1), o, o, o])),
            ([4, 3], frame_vec([o, (1, 1), o, o])),
        ];

        let curvature = vec![
            ([1, 2, 1, 2], rat(-1, 4)),
            ([1, 2, 2, 3], rat(1, 4)),
            ([1, 4, 1, 4], rat(-1, 4)),
            ([1, 4, 3, 4], rat(1, 4)),
            ([2, 1, 2, 3], rat(-1, 4)),
            ([2, 3, 2, 3], rat(-1, 4)),
            ([2, 4, 2, 4], rat(1, 2)),
            ([3, 4, 3, 4], rat(3, 4)),
        ];

        let z = || rat(0, 1);
        let ricci = [
            [rat(1, 2), z(), z(), z()],
            [z(), z(), z(), z()],
            [z(), z(), rat(-1, 2), z()],
            [z(), z(), z(), rat(-1, 1)],
        ];

        let slice_h = [
            [z(), rat(1, 2), z()],
            [rat(1, 2), z(), rat(1, 2)],
            [z(), rat(1, 2), z()],
        ];
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let slice_ricci = [
            [rat(1, 4), z(), rat(1, 4)],
            [z(), rat(1, 2), z()],
            [z(), z(), rat(1, 4)],
        ];

        ReferenceTables {
            metric,
            christoffel,
            connection,
            brackets,
            curvature,
            ricci,
            scalar: rat(-1, 1),
            slice_shape: slice_h.clone(),
            slice_h,
            slice_principal: [-r, 0.0, r],
            slice_ricci,
            slice_tau: rat(1, 1),
            identities: printed_identities(),
        }
    }
}

/// The displayed identities of the case analysis, transcribed as printed.
pub fn printed_identities() -> Vec<PrintedIdentity> {
    let (a, b, c, d) = (v(Var::A), v(Var::B), v(Var::C), v(Var::D));
    let k = |n: i64, m: i64| Poly::constant(rat(n, m));
    let zero = Poly::zero;
    let id = |branch, triple, substitution, printed| PrintedIdentity {
        branch,
        triple,
        substitution,
        printed,
    };
    vec![
        // (1/4) a b d (a - c)
        id(
            "generic",
            [1, 2, 3],
            vec![],
            &(&(&(&a * &b) * &d) * &(&a - &c)) * &k(1, 4),
        ),
        // -(1/4) b^3 c
        id(
            "a = 0",
            [1, 4, 1],
            vec![(Var::A, zero())],
            &(&b.pow(3) * &c) * &k(-1, 4),
        ),
        // (1/4) c^2 b^2 + (1/4) c^2
        id(
            "a = 0",
            [2, 4, 4],
            vec![(Var::A, zero())],
            &(&(&c.pow(2) * &b.pow(2)) * &k(1, 4)) + &(&c.pow(2) * &k(1, 4)),
        ),
        // (1/2) b^3 d + (1/4) b c^2 d
        id(
            "a = 0",
            [1, 5, 4],
            vec![(Var::A, zero())],
            &(&(&b.pow(3) * &d) * &k(1, 2)) + &(&(&(&b * &c.pow(2)) * &d) * &k(1, 4)),
        ),
        // (1/4) a^2 (a^2 - c^2)
        id(
            "b = 0",
            [1, 2, 1],
            vec![(Var::B, zero())],
            &(&a.pow(2) * &(&a.pow(2) - &c.pow(2))) * &k(1, 4),
        ),
        // -(1/4) a^2 d (3a + c)
        id(
            "b = 0",
            [1, 3, 1],
            vec![(Var::B, zero())],
            &(&(&a.pow(2) * &d) * &(&a.scale(&rat(3, 1)) + &c)) * &k(-1, 4),
        ),
        // -(1/4) a b (a - c)^2
        id(
            "d = 0",
            [1, 2, 2],
            vec![(Var::D, zero())],
            &(&(&a * &b) * &(&a - &c).pow(2)) * &k(-1, 4),
        ),
        // (1/4) b (a - c)(a^2 + b^2 + a c)
        id(
            "d = 0",
            [1, 4, 1],
            vec![(Var::D, zero())],
            &(&(&b * &(&a - &c)) * &(&(&a.pow(2) + &b.pow(2)) + &(&a * &c))) * &k(1, 4),
        ),
        // -(1/4) c (a - c)(b^2 + c^2 + a c)
        id(
            "d = 0",
            [2, 4, 4],
            vec![(Var::D, zero())],
            &(&(&c * &(&a - &c)) * &(&(&b.pow(2) + &c.pow(2)) + &(&a * &c))) * &k(-1, 4),
        ),
        // (1/4) a (a - c)(a^2 + b^2 + a c)
        id(
            "d = 0",
            [1, 2, 1],
            vec![(Var::D, zero())],
            &(&(&a * &(&a - &c)) * &(&(&a.pow(2) + &b.pow(2)) + &(&a * &c))) * &k(1, 4),
        ),
        // -a^2 c^2 - (1/4) a c (a^2 - c^2)
        id(
            "d = 0",
            [6, 2, 3],
            vec![(Var::D, zero())],
            &(-&(&a.pow(2) * &c.pow(2))) - &(&(&(&a * &c) * &(&a.pow(2) - &c.pow(2))) * &k(1, 4)),
        ),
        // -c^2 (c^2 + (1/2) d^2)
        id(
            "a = c",
            [6, 2, 3],
            vec![(Var::A, c.clone())],
            -&(&c.pow(2) * &(&c.pow(2) + &(&d.pow(2) * &k(1, 2)))),
        ),
        // (1/2) b^2 (c^2 - d^2)
        id(
            "a = c",
            [1, 5, 6],
            vec![(Var::A, c.clone())],
            &(&b.pow(2) * &(&c.pow(2) - &d.pow(2))) * &k(1, 2),
        ),
    ]
}
