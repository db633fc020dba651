//! The computable ordered field of nonstandard real representatives: rational
//! functions of one formal positive infinitesimal `eps`, with exact rational
//! coefficients and rational exponents.
//!
//! Canonical form: the denominator has lowest exponent 0 and lowest-order
//! coefficient 1; zero is `0/1`; fractions are reduced by polynomial gcd.
//! Everything about the order type flows from the behaviour as `eps -> 0+`:
//! the valuation (leading exponent) and the sign of the leading coefficient.

use crate::error::{Error, Result};
use crate::poly::{rat_int, EpsPoly, Rat, MAX_EXP_DEN};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NSReal {
    num: EpsPoly,
    den: EpsPoly,
}

/// Order-of-magnitude classes as `eps -> 0+`. In this model every limited
/// number is either infinitesimal or appreciable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    Zero,
    Infinitesimal,
    Appreciable,
    Unlimited,
}

impl NSReal {
    fn canonical(num: EpsPoly, den: EpsPoly) -> Self {
        assert!(!den.is_zero(), "denominator must be nonzero");
        if num.is_zero() {
            return NSReal {
                num,
                den: EpsPoly::one(),
            };
        }
        let (mut num, mut den) = EpsPoly::reduce_fraction(num, den);
        let shift = den.low_exp().unwrap().clone();
        if !shift.is_zero() {
            num = num.shift(&-&shift);
            den = den.shift(&-&shift);
        }
        let c = den.low_coeff().unwrap().clone();
        if !c.is_one() {
            let inv = Rat::one() / c;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        NSReal { num, den }
    }

    pub fn zero() -> Self {
        NSReal {
            num: EpsPoly::zero(),
            den: EpsPoly::one(),
        }
    }

    pub fn one() -> Self {
        NSReal {
            num: EpsPoly::one(),
            den: EpsPoly::one(),
        }
    }

    pub fn from_rat(r: Rat) -> Self {
        NSReal {
            num: EpsPoly::constant(r),
            den: EpsPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The formal infinitesimal itself.
    pub fn eps() -> Self {
        Self::monomial(Rat::one(), Rat::one())
    }

    /// `coeff * eps^exp`.
    pub fn monomial(coeff: Rat, exp: Rat) -> Self {
        if exp.is_negative() {
            NSReal::canonical(
                EpsPoly::constant(coeff),
                EpsPoly::monomial(Rat::one(), -exp),
            )
        } else {
            NSReal {
                num: EpsPoly::monomial(coeff, exp),
                den: EpsPoly::one(),
            }
        }
    }

    pub fn from_parts(num: EpsPoly, den: EpsPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self::canonical(num, den))
    }

    pub(crate) fn from_poly(num: EpsPoly) -> Self {
        NSReal {
            num,
            den: EpsPoly::one(),
        }
    }

    pub fn numer(&self) -> &EpsPoly {
        &self.num
    }

    pub fn denom(&self) -> &EpsPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    /// Is this a plain polynomial in eps (denominator 1)?
    pub fn is_polynomial(&self) -> bool {
        self.den == EpsPoly::one()
    }

    /// `c * eps^q` form, if this value is a single term.
    pub fn as_monomial(&self) -> Option<(Rat, Rat)> {
        if self.num.is_monomial() && self.den.is_monomial() {
            let (en, cn) = &self.num.terms()[0];
            let (ed, cd) = &self.den.terms()[0];
            Some((cn / cd, en - ed))
        } else {
            None
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        match self.as_monomial() {
            Some((c, e)) if e.is_zero() => Some(c),
            None if self.is_zero() => Some(Rat::zero()),
            _ => None,
        }
    }

    /// Leading eps-exponent; `None` for zero. Decides the magnitude class and
    /// neutrix membership.
    pub fn valuation(&self) -> Option<Rat> {
        self.num
            .low_exp()
            .map(|e| e - self.den.low_exp().unwrap())
    }

    /// Sign of the value for small positive eps: the sign of the ratio of
    /// lowest-order coefficients.
    pub fn signum(&self) -> i8 {
        match self.num.low_coeff() {
            None => 0,
            Some(c) => {
                if c.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn classify(&self) -> Classification {
        match self.valuation() {
            None => Classification::Zero,
            Some(v) => match v.cmp(&Rat::zero()) {
                Ordering::Greater => Classification::Infinitesimal,
                Ordering::Equal => Classification::Appreciable,
                Ordering::Less => Classification::Unlimited,
            },
        }
    }

    pub fn is_infinitesimal(&self) -> bool {
        matches!(
            self.classify(),
            Classification::Zero | Classification::Infinitesimal
        )
    }

    pub fn is_limited(&self) -> bool {
        !matches!(self.classify(), Classification::Unlimited)
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(Self::canonical(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn powi(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            if k < 0 {
                return Err(Error::Domain("division by zero".into()));
            }
            return Ok(Self::zero());
        }
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * self;
        }
        if k < 0 {
            acc = acc.inv()?;
        }
        Ok(acc)
    }

    /// Rational power. Non-integer exponents are only defined for monomials
    /// `c*eps^q` whose coefficient has an exact rational root.
    pub fn pow_rat(&self, exp: &Rat) -> Result<Self> {
        if exp.denom().is_one() {
            let k = exp.numer().to_i64().ok_or_else(|| {
                Error::Resource(format!("exponent {exp} out of range"))
            })?;
            return self.powi(k);
        }
        if exp.denom() > &BigInt::from(MAX_EXP_DEN) {
            return Err(Error::Resource(format!(
                "exponent denominator of {exp} exceeds {MAX_EXP_DEN}"
            )));
        }
        let (c, q) = self.as_monomial().ok_or_else(|| {
            Error::Domain(format!(
                "cannot raise non-monomial to non-integer power {exp}"
            ))
        })?;
        let p = exp.denom().to_u32().ok_or_else(|| {
            Error::Resource(format!("exponent denominator of {exp} too large"))
        })?;
        let root = EpsPoly::rat_nth_root(&c, p).ok_or_else(|| {
            Error::Domain(format!(
                "coefficient {c} has no exact rational root of index {p}"
            ))
        })?;
        let root_exp = q / Rat::from(BigInt::from(p));
        let k = exp.numer().to_i64().ok_or_else(|| {
            Error::Resource(format!("exponent {exp} out of range"))
        })?;
        Self::monomial(root, root_exp).powi(k)
    }

    pub fn compare(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self - other).signum() {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    }

    pub fn min(a: Self, b: Self) -> Self {
        if a.compare(&b) == Ordering::Greater {
            b
        } else {
            a
        }
    }
}

impl PartialOrd for NSReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NSReal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait<&NSReal> for &NSReal {
            type Output = NSReal;
            fn $method(self, rhs: &NSReal) -> NSReal {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait<NSReal> for NSReal {
            type Output = NSReal;
            fn $method(self, rhs: NSReal) -> NSReal {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&NSReal> for NSReal {
            type Output = NSReal;
            fn $method(self, rhs: &NSReal) -> NSReal {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<NSReal> for &NSReal {
            type Output = NSReal;
            fn $method(self, rhs: NSReal) -> NSReal {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    if a.den == b.den {
        NSReal::canonical(a.num.add(&b.num), a.den.clone())
    } else {
        NSReal::canonical(
            a.num.mul(&b.den).add(&b.num.mul(&a.den)),
            a.den.mul(&b.den),
        )
    }
});

binop!(Sub, sub, |a, b| {
    if a.den == b.den {
        NSReal::canonical(a.num.sub(&b.num), a.den.clone())
    } else {
        NSReal::canonical(
            a.num.mul(&b.den).sub(&b.num.mul(&a.den)),
            a.den.mul(&b.den),
        )
    }
});

binop!(Mul, mul, |a, b| {
    NSReal::canonical(a.num.mul(&b.num), a.den.mul(&b.den))
});

binop!(Div, div, |a, b| {
    a.try_div(b).expect("division by zero NSReal")
});

impl Neg for &NSReal {
    type Output = NSReal;
    fn neg(self) -> NSReal {
        NSReal {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for NSReal {
    type Output = NSReal;
    fn neg(self) -> NSReal {
        -&self
    }
}

fn fmt_exp(e: &Rat) -> String {
    if e.denom().is_one() && !e.is_negative() {
        format!("{e}")
    } else {
        format!("({e})")
    }
}

fn fmt_poly(p: &EpsPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let ac = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e.is_zero() {
            out.push_str(&format!("{ac}"));
        } else {
            if !ac.is_one() {
                out.push_str(&format!("{ac}*"));
            }
            if e.is_one() {
                out.push_str("eps");
            } else {
                out.push_str(&format!("eps^{}", fmt_exp(e)));
            }
        }
    }
    out
}

impl fmt::Display for NSReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", fmt_poly(&self.num))
        } else {
            write!(f, "({})/({})", fmt_poly(&self.num), fmt_poly(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn eps() -> NSReal {
        NSReal::eps()
    }

    #[test]
    fn cancellation() {
        // (1 + eps) + (-1) = eps
        let x = NSReal::one() + eps() + NSReal::from_int(-1);
        assert_eq!(x, eps());
    }

    #[test]
    fn multiplicative_inverse_of_eps() {
        let inv = eps().inv().unwrap();
        assert_eq!(eps() * &inv, NSReal::one());
        assert_eq!(inv.valuation(), Some(rat_int(-1)));
    }

    #[test]
    fn fraction_one_over_one_plus_eps() {
        let x = NSReal::one().try_div(&(NSReal::one() + eps())).unwrap();
        // cross-multiplication check: x * (1 + eps) = 1
        assert_eq!(&x * (NSReal::one() + eps()), NSReal::one());
        assert_eq!(x.valuation(), Some(rat_int(0)));
        assert!(x.is_positive());
    }

    #[test]
    fn valuation_and_classification() {
        let e2 = eps() * eps();
        assert_eq!(e2.valuation(), Some(rat_int(2)));
        assert_eq!(e2.classify(), Classification::Infinitesimal);

        let x = NSReal::from_rat(rat(3, 2));
        assert_eq!(x.valuation(), Some(rat_int(0)));
        assert_eq!(x.classify(), Classification::Appreciable);

        let y = NSReal::from_int(5) / eps();
        assert_eq!(y.valuation(), Some(rat_int(-1)));
        assert_eq!(y.classify(), Classification::Unlimited);

        assert_eq!(NSReal::zero().classify(), Classification::Zero);
    }

    #[test]
    fn order_as_eps_to_zero() {
        // eps^2 < eps
        assert_eq!(eps().compare(&(eps() * eps())), Ordering::Greater);
        // 1 - eps < 1
        assert_eq!(
            (NSReal::one() - eps()).compare(&NSReal::one()),
            Ordering::Less
        );
        // 2/eps > 1000: valuation dominates any coefficient
        let big = NSReal::from_int(2) / eps();
        assert_eq!(big.compare(&NSReal::from_int(1000)), Ordering::Greater);
    }

    #[test]
    fn division_by_zero_is_domain_error() {
        assert!(matches!(
            NSReal::one().try_div(&NSReal::zero()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sqrt_eps_is_representable() {
        let r = eps().pow_rat(&rat(1, 2)).unwrap();
        assert_eq!(&r * &r, eps());
        assert_eq!(r.valuation(), Some(rat(1, 2)));
    }

    #[test]
    fn non_monomial_fractional_power_rejected() {
        let x = NSReal::one() + eps();
        assert!(x.pow_rat(&rat(1, 2)).is_err());
    }

    #[test]
    fn canonical_form_reduces() {
        // (eps - eps^3) / (1 + eps) = eps(1-eps)(1+eps)/(1+eps) = eps - eps^2
        let num = EpsPoly::from_terms(vec![
            (rat_int(1), Rat::one()),
            (rat_int(3), -Rat::one()),
        ]);
        let den = EpsPoly::from_terms(vec![(rat_int(0), Rat::one()), (rat_int(1), Rat::one())]);
        let x = NSReal::from_parts(num, den).unwrap();
        assert!(x.is_polynomial());
        assert_eq!(x, eps() - eps() * eps());
    }
}
