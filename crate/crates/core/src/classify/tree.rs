//! The case analysis as an explicit branch tree.
//!
//! Every node names a witness triple whose polynomial, under the node's
//! assumptions, factors into the listed linear and definite factors. The
//! factorization is checked exactly, so each node's solutions are covered by
//! its children. Leaves are closed off with the unit-norm constraint.

use crate::geometry::FrameGeometry;
use crate::hypersurface::{frobenius_check, ConstantDerivation};
use crate::scalar::{rat, rational_to_f64, render_rational, Poly, Rational, Var};

use super::{substitute_all, tangent_generators, CurvatureNormalSystem};

#[derive(Debug, Clone)]
enum Factor {
    /// `v = expr`, given as the pair.
    Linear(Var, Poly),
    /// A sum of squares with positive weights; vanishes only when all its variables do.
    Definite(Poly),
}

impl Factor {
    fn poly(&self) -> Poly {
        match self {
            Factor::Linear(v, e) => &Poly::var(*v) - e,
            Factor::Definite(p) => p.clone(),
        }
    }

    fn is_valid(&self) -> bool {
        match self {
            Factor::Linear(v, e) => !e.contains(*v),
            Factor::Definite(p) => {
                !p.is_zero()
                    && p.terms().all(|(m, q)| {
                        let vars: Vec<Var> = Var::ALL.iter().copied().filter(|&v| m.exp(v) > 0).collect();
                        q > &rat(0, 1) && vars.len() == 1 && m.exp(vars[0]) % 2 == 0
                    })
            }
        }
    }

    fn assignments(&self) -> Vec<(Var, Poly)> {
        match self {
            Factor::Linear(v, e) => vec![(*v, e.clone())],
            Factor::Definite(p) => p.variables().into_iter().map(|v| (v, Poly::zero())).collect(),
        }
    }
}

#[derive(Debug, Clone)]
struct Node {
    witness: [usize; 3],
    constant: Rational,
    factors: Vec<(Factor, u32, Option<Node>)>,
}

fn v(var: Var) -> Poly {
    Poly::var(var)
}

fn zero(var: Var) -> Factor {
    Factor::Linear(var, Poly::zero())
}

fn node(witness: [usize; 3], constant: (i64, i64), factors: Vec<(Factor, u32, Option<Node>)>) -> Node {
    Node {
        witness,
        constant: rat(constant.0, constant.1),
        factors,
    }
}

fn leaf(f: Factor, mult: u32) -> (Factor, u32, Option<Node>) {
    (f, mult, None)
}

fn sub(f: Factor, mult: u32, child: Node) -> (Factor, u32, Option<Node>) {
    (f, mult, Some(child))
}

fn square_sum(terms: &[(Var, i64, i64)]) -> Factor {
    Factor::Definite(terms.iter().fold(Poly::zero(), |acc, &(var, n, d)| {
        &acc + &v(var).pow(2).scale(&rat(n, d))
    }))
}

// with b = 0 and d free: a^2 (a - c)(a + c) splits on a
fn b_zero_split(then: fn(Factor) -> Node) -> Node {
    use Var::{A, C};
    node(
        [1, 2, 1],
        (1, 4),
        vec![
            sub(zero(A), 2, then(zero(A))),
            sub(Factor::Linear(A, v(C)), 1, then(Factor::Linear(A, v(C)))),
            sub(Factor::Linear(A, -&v(C)), 1, then(Factor::Linear(A, -&v(C)))),
        ],
    )
}

fn tree() -> Node {
    use Var::{A, B, C, D};
    let branch_a0 = node(
        [2, 4, 4],
        (1, 4),
        vec![
            sub(
                zero(C),
                2,
                node([1, 5, 4], (1, 2), vec![leaf(zero(B), 3), leaf(zero(D), 1)]),
            ),
            leaf(square_sum(&[(B, 1, 1), (C, 1, 1)]), 1),
        ],
    );
    let branch_b0 = b_zero_split(|f| match f {
        Factor::Linear(_, ref e) if e.is_zero() => node([2, 4, 4], (1, 4), vec![leaf(zero(C), 4)]),
        Factor::Linear(_, ref e) if e == &v(C) => node([1, 3, 1], (-1, 1), vec![leaf(zero(C), 3), leaf(zero(D), 1)]),
        _ => node([1, 3, 1], (1, 2), vec![leaf(zero(C), 3), leaf(zero(D), 1)]),
    });
    let branch_d0 = node(
        [1, 2, 2],
        (-1, 4),
        vec![
            sub(
                zero(A),
                1,
                node(
                    [2, 4, 4],
                    (1, 4),
                    vec![leaf(zero(C), 2), leaf(square_sum(&[(B, 1, 1), (C, 1, 1)]), 1)],
                ),
            ),
            sub(
                zero(B),
                1,
                b_zero_split(|f| match f {
                    Factor::Linear(_, ref e) if e.is_zero() => node([2, 4, 4], (1, 4), vec![leaf(zero(C), 4)]),
                    Factor::Linear(_, ref e) if e == &v(C) => node([2, 3, 3], (1, 1), vec![leaf(zero(C), 4)]),
                    _ => node([2, 3, 3], (-1, 1), vec![leaf(zero(C), 4)]),
                }),
            ),
            sub(
                Factor::Linear(A, v(C)),
                2,
                node([6, 2, 3], (-1, 1), vec![leaf(zero(C), 4)]),
            ),
        ],
    );
    let branch_ac = node(
        [6, 2, 3],
        (-1, 1),
        vec![
            sub(
                zero(C),
                2,
                node([1, 5, 6], (-1, 2), vec![leaf(zero(B), 2), leaf(zero(D), 2)]),
            ),
            leaf(square_sum(&[(C, 1, 1), (D, 1, 2)]), 1),
        ],
    );
    node(
        [1, 2, 3],
        (1, 4),
        vec![
            sub(zero(A), 1, branch_a0),
            sub(zero(B), 1, branch_b0),
            sub(zero(D), 1, branch_d0),
            sub(Factor::Linear(A, v(C)), 1, branch_ac),
        ],
    )
}

/// A closed branch: a full set of assumptions with at most one free coefficient.
#[derive(Debug, Clone)]
pub struct LeafReport {
    pub constraints: Vec<String>,
    /// Unnormalized direction with the free coefficient set to 1; `None` when
    /// the assumptions force `ξ = 0`, contradicting the unit norm.
    pub direction: Option<[Rational; 4]>,
    /// At least two coefficients left free: the branch did not close.
    pub unresolved: bool,
    pub solves_system: bool,
    pub integrable: bool,
}

impl LeafReport {
    pub fn unit_normals(&self) -> Vec<[f64; 4]> {
        let Some(dir) = &self.direction else { return vec![] };
        let f = dir.clone().map(|q| rational_to_f64(&q));
        let n = f.iter().map(|x| x * x).sum::<f64>().sqrt();
        vec![f.map(|x| x / n), f.map(|x| -x / n)]
    }
}

#[derive(Debug, Clone)]
pub struct BranchReport {
    pub assumption: String,
    /// One line per witness: the triple, its assumptions and the checked factorization.
    pub steps: Vec<String>,
    pub verified: bool,
    pub leaves: Vec<LeafReport>,
}

impl BranchReport {
    /// Unit normals passing the polynomial system.
    pub fn candidates(&self) -> Vec<[f64; 4]> {
        dedupe(
            self.leaves
                .iter()
                .filter(|l| l.solves_system)
                .flat_map(LeafReport::unit_normals),
        )
    }

    /// Candidates that are also integrable.
    pub fn survivors(&self) -> Vec<[f64; 4]> {
        dedupe(
            self.leaves
                .iter()
                .filter(|l| l.solves_system && l.integrable)
                .flat_map(LeafReport::unit_normals),
        )
    }

    pub fn constraints(&self) -> Vec<String> {
        self.leaves.iter().map(|l| l.constraints.join(", ")).collect()
    }
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub branches: Vec<BranchReport>,
}

impl ClassificationReport {
    /// Every witness factorization held and every leaf closed.
    pub fn complete(&self) -> bool {
        self.branches
            .iter()
            .all(|b| b.verified && b.leaves.iter().all(|l| !l.unresolved))
    }

    pub fn candidates(&self) -> Vec<[f64; 4]> {
        dedupe(self.branches.iter().flat_map(BranchReport::candidates))
    }

    pub fn survivors(&self) -> Vec<[f64; 4]> {
        dedupe(self.branches.iter().flat_map(BranchReport::survivors))
    }
}

fn dedupe(items: impl Iterator<Item = [f64; 4]>) -> Vec<[f64; 4]> {
    let mut out: Vec<[f64; 4]> = Vec::new();
    for x in items {
        if !out.iter().any(|y| y.iter().zip(&x).all(|(p, q)| (p - q).abs() < 1e-12)) {
            out.push(x);
        }
    }
    out
}

struct Walker<'a> {
    system: &'a CurvatureNormalSystem,
    geometry: &'a FrameGeometry,
}

type Subs = Vec<(Var, Poly)>;

fn compose(subs: &Subs, new: &[(Var, Poly)]) -> Subs {
    let mut out: Subs = subs.iter().map(|(w, e)| (*w, substitute_all(e, new))).collect();
    out.extend(new.iter().cloned());
    out
}

fn describe(subs: &Subs) -> Vec<String> {
    subs.iter()
        .map(|(w, e)| format!("{} = {}", w.name(), e.render()))
        .collect()
}

impl Walker<'_> {
    fn visit(&self, n: &Node, subs: &Subs, report: &mut BranchReport) {
        let target = substitute_all(self.system.get(n.witness), subs);
        let product = n
            .factors
            .iter()
            .fold(Poly::constant(n.constant.clone()), |acc, (f, m, _)| {
                &acc * &f.poly().pow(*m)
            });
        let ok = n.factors.iter().all(|(f, _, _)| f.is_valid()) && (&target - &product).is_zero();
        report.verified &= ok;
        let factors: Vec<String> = n
            .factors
            .iter()
            .map(|(f, m, _)| {
                let base = format!("({})", f.poly().render());
                if *m > 1 {
                    format!("{base}^{m}")
                } else {
                    base
                }
            })
            .collect();
        report.steps.push(format!(
            "[{}] P({},{},{}) = {} * {}{}",
            describe(subs).join(", "),
            n.witness[0],
            n.witness[1],
            n.witness[2],
            render_rational(&n.constant),
            factors.join(" * "),
            if ok { "" } else { "  (factorization does not hold)" }
        ));
        for (f, _, child) in &n.factors {
            let next = compose(subs, &f.assignments());
            match child {
                Some(c) => self.visit(c, &next, report),
                None => report.leaves.push(self.close(&next)),
            }
        }
    }

    fn close(&self, subs: &Subs) -> LeafReport {
        let constraints = describe(subs);
        let free: Vec<Var> = Var::NORMAL
            .iter()
            .copied()
            .filter(|v| !subs.iter().any(|(w, _)| w == v))
            .collect();
        let mut leaf = LeafReport {
            constraints,
            direction: None,
            unresolved: false,
            solves_system: false,
            integrable: false,
        };
        match free.len() {
            0 => {}
            1 => {
                let point = compose(subs, &[(free[0], Poly::one())]);
                let dir: [Rational; 4] = Var::NORMAL.map(|v| {
                    point
                        .iter()
                        .find(|(w, _)| *w == v)
                        .and_then(|(_, e)| e.as_constant())
                        .unwrap_or_else(|| rat(0, 1))
                });
                leaf.solves_system = self.system.vanishes_at(&dir);
                leaf.integrable = integrable(self.geometry, &dir);
                if dir.iter().all(num::Zero::is_zero) {
                    return leaf;
                }
                leaf.direction = Some(dir);
            }
            _ => leaf.unresolved = true,
        }
        leaf
    }
}

/// Exact involutivity of `ξ^⊥` for a constant normal direction.
pub(crate) fn integrable(geometry: &FrameGeometry, dir: &[Rational; 4]) -> bool {
    let gens = tangent_generators(dir);
    for i in 0..6 {
        for j in (i + 1)..6 {
            for k in (j + 1)..6 {
                let t = [gens[i].clone(), gens[j].clone(), gens[k].clone()];
                if let Ok(ok) = frobenius_check(geometry, &ConstantDerivation, &t, dir, 0.0) {
                    return ok;
                }
            }
        }
    }
    false
}

pub fn classify_symbolic() -> ClassificationReport {
    let geometry = FrameGeometry::nil4();
    let system = CurvatureNormalSystem::new(&geometry);
    let walker = Walker {
        system: &system,
        geometry: &geometry,
    };
    let root = tree();
    let target = system.get(root.witness);
    let product = root
        .factors
        .iter()
        .fold(Poly::constant(root.constant.clone()), |acc, (f, m, _)| {
            &acc * &f.poly().pow(*m)
        });
    let root_ok = (target - &product).is_zero();
    let names = ["a = 0", "b = 0", "d = 0", "a = c"];
    let branches = root
        .factors
        .iter()
        .zip(names)
        .map(|((f, _, child), name)| {
            let mut report = BranchReport {
                assumption: name.to_string(),
                steps: vec![],
                verified: root_ok,
                leaves: vec![],
            };
            let subs = f.assignments();
            match child {
                Some(c) => walker.visit(c, &subs, &mut report),
                None => report.leaves.push(walker.close(&subs)),
            }
            report
        })
        .collect();
    ClassificationReport { branches }
}
