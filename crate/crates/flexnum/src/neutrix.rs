//! The representable neutrix lattice: {0}, scaled copies of the infinitesimals
//! `o` and of the limited numbers `L`, and the whole real line.
//!
//! A neutrix is a convex additive subgroup of the nonstandard reals; here a
//! member test reduces to a valuation comparison, strict for `o`-based
//! neutrices and non-strict for `L`-based ones. Inclusion is a total order on
//! this family, which makes the sum (= max) and the other operations exact.

use crate::nsreal::NSReal;
use crate::poly::Rat;
use num_traits::Zero as _;
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum NeutrixBase {
    /// eps^q * o: members have valuation strictly above q.
    Oslash,
    /// eps^q * L: members have valuation at least q.
    Pound,
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Neutrix {
    /// The trivial group {0}.
    Zero,
    /// eps^exp * o or eps^exp * L.
    Mono { exp: Rat, base: NeutrixBase },
    /// The whole real line.
    Line,
}

impl Neutrix {
    /// The infinitesimals o.
    pub fn oslash() -> Self {
        Neutrix::Mono {
            exp: Rat::zero(),
            base: NeutrixBase::Oslash,
        }
    }

    /// The limited numbers L.
    pub fn pound() -> Self {
        Neutrix::Mono {
            exp: Rat::zero(),
            base: NeutrixBase::Pound,
        }
    }

    pub fn scaled(exp: Rat, base: NeutrixBase) -> Self {
        Neutrix::Mono { exp, base }
    }

    pub fn contains(&self, x: &NSReal) -> bool {
        if x.is_zero() {
            return true;
        }
        match self {
            Neutrix::Zero => false,
            Neutrix::Line => true,
            Neutrix::Mono { exp, base } => {
                let v = x.valuation().expect("nonzero has a valuation");
                match base {
                    NeutrixBase::Oslash => v > *exp,
                    NeutrixBase::Pound => v >= *exp,
                }
            }
        }
    }

    /// Total order by set inclusion: Zero below everything, Line above, and
    /// among the scaled neutrices a lower scale exponent means a larger set,
    /// with eps^q*o contained in eps^q*L at equal scale.
    pub fn cmp_inclusion(&self, other: &Self) -> Ordering {
        use Neutrix::*;
        match (self, other) {
            (Zero, Zero) | (Line, Line) => Ordering::Equal,
            (Zero, _) => Ordering::Less,
            (_, Zero) => Ordering::Greater,
            (Line, _) => Ordering::Greater,
            (_, Line) => Ordering::Less,
            (Mono { exp: p, base: a }, Mono { exp: q, base: b }) => match q.cmp(p) {
                Ordering::Equal => match (a, b) {
                    (NeutrixBase::Oslash, NeutrixBase::Pound) => Ordering::Less,
                    (NeutrixBase::Pound, NeutrixBase::Oslash) => Ordering::Greater,
                    _ => Ordering::Equal,
                },
                ord => ord,
            },
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.cmp_inclusion(other) != Ordering::Greater
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.cmp_inclusion(other) == Ordering::Less
    }

    /// Sum of neutrices: the larger of the two under inclusion.
    pub fn sum(&self, other: &Self) -> Self {
        if self.cmp_inclusion(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn max_of<'a>(items: impl IntoIterator<Item = &'a Neutrix>) -> Self {
        items
            .into_iter()
            .fold(Neutrix::Zero, |acc, n| acc.sum(n))
    }

    /// Minkowski product of two neutrices: the smallest representable neutrix
    /// containing all member products.
    pub fn product(&self, other: &Self) -> Self {
        use Neutrix::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Line, _) | (_, Line) => Line,
            (Mono { exp: p, base: a }, Mono { exp: q, base: b }) => {
                let base = if *a == NeutrixBase::Oslash || *b == NeutrixBase::Oslash {
                    NeutrixBase::Oslash
                } else {
                    NeutrixBase::Pound
                };
                Mono { exp: p + q, base }
            }
        }
    }

    /// Multiply each member by a fixed scalar. Appreciable scalars are
    /// absorbed (`L*A = A`); only the valuation of `x` shifts the scale.
    pub fn scalar_mul(&self, x: &NSReal) -> Self {
        if x.is_zero() {
            return Neutrix::Zero;
        }
        match self {
            Neutrix::Zero => Neutrix::Zero,
            Neutrix::Line => Neutrix::Line,
            Neutrix::Mono { exp, base } => Neutrix::Mono {
                exp: exp + x.valuation().expect("nonzero has a valuation"),
                base: *base,
            },
        }
    }

    /// Group division A : B = { c | cB is contained in A }.
    pub fn div(&self, other: &Self) -> Self {
        use Neutrix::*;
        match (self, other) {
            // c * {0} = {0} is always contained in A.
            (_, Zero) => Line,
            (Line, _) => Line,
            // c * B covers a full scaled line unless c = 0.
            (Zero, _) => Zero,
            (Mono { .. }, Line) => Zero,
            (Mono { exp: p, base: a }, Mono { exp: q, base: b }) => {
                // c*eps^q*b is contained in eps^p*a iff v(c) > p - q, with
                // equality allowed exactly when b fits in a at equal scale.
                let equal_scale_ok = !(*b == NeutrixBase::Pound && *a == NeutrixBase::Oslash);
                Mono {
                    exp: p - q,
                    base: if equal_scale_ok {
                        NeutrixBase::Pound
                    } else {
                        NeutrixBase::Oslash
                    },
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Neutrix::Zero)
    }

    pub fn is_line(&self) -> bool {
        matches!(self, Neutrix::Line)
    }
}

impl fmt::Display for Neutrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neutrix::Zero => write!(f, "0n"),
            Neutrix::Line => write!(f, "R"),
            Neutrix::Mono { exp, base } => {
                let b = match base {
                    NeutrixBase::Oslash => "o",
                    NeutrixBase::Pound => "L",
                };
                if exp.is_zero() {
                    write!(f, "{b}")
                } else if exp == &Rat::from_integer(1.into()) {
                    write!(f, "eps*{b}")
                } else if exp.denom() == &num_bigint::BigInt::from(1)
                    && exp >= &Rat::zero()
                {
                    write!(f, "eps^{exp}*{b}")
                } else {
                    write!(f, "eps^({exp})*{b}")
                }
            }
        }
    }
}
