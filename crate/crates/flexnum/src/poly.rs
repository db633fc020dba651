//! Sparse polynomials in the formal infinitesimal `eps` with exact rational
//! coefficients and rational exponents (possibly negative).
//!
//! Terms are kept sorted by exponent, lowest first, with no zero coefficients.
//! The lowest-order term decides valuation and sign as `eps -> 0+`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Hard budget for a single polynomial; arithmetic fails loudly instead of
/// truncating when a result would exceed it.
pub const MAX_TERMS: usize = 4096;

/// Budget for the denominator of any exponent, enforced where exponents enter
/// (parsing, rational powers).
pub const MAX_EXP_DEN: u64 = 4096;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EpsPoly {
    /// (exponent, coefficient), exponents strictly increasing, coefficients nonzero.
    terms: Vec<(Rat, Rat)>,
}

impl EpsPoly {
    pub fn zero() -> Self {
        EpsPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, Rat::zero())
    }

    pub fn monomial(coeff: Rat, exp: Rat) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            EpsPoly {
                terms: vec![(exp, coeff)],
            }
        }
    }

    pub fn from_terms(mut terms: Vec<(Rat, Rat)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Rat, Rat)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => {
                    *lc += c;
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((e, c)),
            }
        }
        EpsPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Rat, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lowest exponent present; `None` for the zero polynomial.
    pub fn low_exp(&self) -> Option<&Rat> {
        self.terms.first().map(|(e, _)| e)
    }

    pub fn low_coeff(&self) -> Option<&Rat> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn high_exp(&self) -> Option<&Rat> {
        self.terms.last().map(|(e, _)| e)
    }

    fn check_budget(&self) -> Result<()> {
        if self.terms.len() > MAX_TERMS {
            return Err(Error::Resource(format!(
                "polynomial has {} terms (budget {MAX_TERMS})",
                self.terms.len()
            )));
        }
        Ok(())
    }

    pub fn max_exp_den(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, _)| e.denom().clone())
            .max()
            .unwrap_or_else(BigInt::one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend(other.terms[j..].iter().cloned());
        let p = EpsPoly { terms: out };
        p.check_budget().expect("polynomial term budget exceeded");
        p
    }

    pub fn neg(&self) -> Self {
        EpsPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: Vec<(Rat, Rat)> = Vec::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc.push((ea + eb, ca * cb));
            }
        }
        let p = Self::from_terms(acc);
        p.check_budget().expect("polynomial term budget exceeded");
        p
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        EpsPoly {
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the monomial eps^delta.
    pub fn shift(&self, delta: &Rat) -> Self {
        if delta.is_zero() {
            return self.clone();
        }
        EpsPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + delta, c.clone()))
                .collect(),
        }
    }

    /// Drop every term whose exponent exceeds `bound` (or equals it when
    /// `strict` is set). Used to reduce representatives modulo a neutrix.
    pub fn truncate_above(&self, bound: &Rat, strict: bool) -> Self {
        EpsPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| if strict { e < bound } else { e <= bound })
                .cloned()
                .collect(),
        }
    }

    /// Leading-term division step count guard for `div_rem`/`gcd`.
    const MAX_DIV_STEPS: usize = 4096;

    /// Long division by the highest-order term. Returns `None` when the step
    /// budget is exhausted (callers then skip the reduction; values stay exact).
    fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        assert!(!divisor.is_zero());
        let mut rem = self.clone();
        let mut quo = Self::zero();
        let d_high = divisor.high_exp().unwrap().clone();
        let d_coeff = divisor.terms.last().unwrap().1.clone();
        let mut steps = 0;
        while !rem.is_zero() && rem.high_exp().unwrap() >= &d_high {
            steps += 1;
            if steps > Self::MAX_DIV_STEPS {
                return None;
            }
            let (re, rc) = rem.terms.last().unwrap();
            let t = Self::monomial(rc / &d_coeff, re - &d_high);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Some((quo, rem))
    }

    /// Exact quotient; panics if the division is not exact or over budget.
    /// Only called with divisors produced by `gcd`.
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("division budget exceeded");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Scale so the coefficients become coprime integers; controls
    /// coefficient growth in the Euclidean remainder sequence.
    fn make_primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for (_, c) in &self.terms {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        if num_gcd.is_zero() {
            return self.clone();
        }
        self.scale(&Rat::new(den_lcm, num_gcd))
    }

    /// Monic gcd of two polynomials with nonnegative exponents, via the
    /// primitive Euclidean algorithm. Returns `one` when either input is a
    /// unit-like monomial or the computation would be too large to be
    /// worthwhile.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() || a.is_monomial() || b.is_monomial() {
            return Self::one();
        }
        let mut x = a.make_primitive();
        let mut y = b.make_primitive();
        loop {
            if y.is_monomial() {
                return if y.terms[0].0.is_zero() {
                    y.scale(&(Rat::one() / &y.terms[0].1))
                } else {
                    Self::one()
                };
            }
            match x.div_rem(&y) {
                None => return Self::one(),
                Some((_, r)) => {
                    if r.is_zero() {
                        let lead = y.terms.last().unwrap().1.clone();
                        return y.scale(&(Rat::one() / lead));
                    }
                    x = y;
                    y = r.make_primitive();
                }
            }
        }
    }

    /// Reduce the fraction `self / den` by their polynomial gcd, after both
    /// have been shifted so the gcd acts on nonnegative exponents.
    pub fn reduce_fraction(num: Self, den: Self) -> (Self, Self) {
        if num.is_zero() {
            return (num, den);
        }
        let shift_n = num.low_exp().unwrap().clone();
        let shift_d = den.low_exp().unwrap().clone();
        let n0 = num.shift(&-&shift_n);
        let d0 = den.shift(&-&shift_d);
        let g = Self::gcd(&n0, &d0);
        if g.is_monomial() && g.terms[0].0.is_zero() && g.terms[0].1.is_one() {
            return (num, den);
        }
        let n = n0.div_exact(&g).shift(&shift_n);
        let d = d0.div_exact(&g).shift(&shift_d);
        (n, d)
    }

    /// Exact rational `p`-th root of a rational number, if it exists.
    pub fn rat_nth_root(x: &Rat, p: u32) -> Option<Rat> {
        if p == 1 {
            return Some(x.clone());
        }
        if x.is_negative() && p.is_multiple_of(2) {
            return None;
        }
        let (neg, ax) = (x.is_negative(), x.abs());
        let rn = ax.numer().nth_root(p);
        let rd = ax.denom().nth_root(p);
        if &rn.pow(p) == ax.numer() && &rd.pow(p) == ax.denom() {
            let mut r = Rat::new(rn, rd);
            if neg {
                r = -r;
            }
            Some(r)
        } else {
            None
        }
    }
}
