use std::cmp::Ordering;
use std::fmt;

/// Number of indeterminates in the polynomial ring.
pub const NUM_VARS: usize = 12;

/// Indeterminates of the polynomial ring.
///
/// The chart coordinates come first, then the unit-normal coefficients used
/// by the classifier, then the coordinates of a symbolic group element used by
/// the left-invariance check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    A,
    B,
    C,
    D,
    Px,
    Py,
    Pz,
    Pt,
}

impl Var {
    pub const ALL: [Var; NUM_VARS] = [
        Var::X,
        Var::Y,
        Var::Z,
        Var::T,
        Var::A,
        Var::B,
        Var::C,
        Var::D,
        Var::Px,
        Var::Py,
        Var::Pz,
        Var::Pt,
    ];

    /// The chart coordinates `(x, y, z, t)` in coordinate-basis order.
    pub const COORDS: [Var; 4] = [Var::X, Var::Y, Var::Z, Var::T];

    /// The normal coefficients `(a, b, c, d)`.
    pub const NORMAL: [Var; 4] = [Var::A, Var::B, Var::C, Var::D];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::D => "d",
            Var::Px => "px",
            Var::Py => "py",
            Var::Pz => "pz",
            Var::Pt => "pt",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Var::ALL`].
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared variable by variable in `Var::ALL` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NUM_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NUM_VARS])
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut m = [0; NUM_VARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    /// `self / other` when every exponent of `other` is at most the matching
    /// exponent of `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(m))
    }

    pub fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
