//! External numbers: Minkowski sums `a + A` of a representative and a neutrix,
//! with the error-propagating arithmetic, order, relative uncertainty, and the
//! oppositeness/absorber predicates that govern when distributivity holds.
//!
//! Values are kept canonical: the representative is reduced modulo the neutrix
//! (terms the neutrix absorbs are dropped), so a number whose representative
//! lies inside its neutrix is stored with representative 0 and set equality
//! coincides with structural equality.

use crate::error::{Error, Result};
use crate::neutrix::{Neutrix, NeutrixBase};
use crate::nsreal::NSReal;
use crate::poly::EpsPoly;
use std::fmt;

/// Outcome of comparing two value sets known to be nested.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SetRelation {
    Equal,
    StrictSubset,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExternalNumber {
    rep: NSReal,
    neut: Neutrix,
}

impl ExternalNumber {
    pub fn new(rep: NSReal, neut: Neutrix) -> Self {
        let rep = reduce_rep(rep, &neut);
        ExternalNumber { rep, neut }
    }

    pub fn from_real(rep: NSReal) -> Self {
        ExternalNumber {
            rep,
            neut: Neutrix::Zero,
        }
    }

    pub fn from_neutrix(neut: Neutrix) -> Self {
        ExternalNumber {
            rep: NSReal::zero(),
            neut,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_real(NSReal::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rep(&self) -> &NSReal {
        &self.rep
    }

    pub fn neutrix(&self) -> &Neutrix {
        &self.neut
    }

    /// True when 0 is not a member, i.e. the representative survives
    /// canonicalization.
    pub fn is_zeroless(&self) -> bool {
        !self.rep.is_zero()
    }

    /// True when the value set is a neutrix (contains 0).
    pub fn is_neutricial(&self) -> bool {
        self.rep.is_zero()
    }

    /// True when the value is an exact real: the single point {rep}.
    pub fn is_real(&self) -> bool {
        self.neut.is_zero()
    }

    pub fn contains(&self, x: &NSReal) -> bool {
        self.neut.contains(&(x - &self.rep))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.neut.is_subset(&other.neut) && other.contains(&self.rep)
    }

    pub fn is_strict_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn relation_to(&self, other: &Self) -> Option<SetRelation> {
        if self == other {
            Some(SetRelation::Equal)
        } else if self.is_subset(other) {
            Some(SetRelation::StrictSubset)
        } else {
            None
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.neut
            .sum(&other.neut)
            .contains(&(&self.rep - &other.rep))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.rep + &other.rep, self.neut.sum(&other.neut))
    }

    pub fn neg(&self) -> Self {
        ExternalNumber {
            rep: -&self.rep,
            neut: self.neut.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.rep, &other.rep);
        let neut = Neutrix::max_of([
            &other.neut.scalar_mul(a),
            &self.neut.scalar_mul(b),
            &self.neut.product(&other.neut),
        ]);
        Self::new(a * b, neut)
    }

    /// 1/alpha = 1/a + A/a^2, defined for zeroless alpha.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_zeroless() {
            return Err(Error::NotZeroless(format!("1/({self})")));
        }
        let a_inv = self.rep.inv()?;
        let neut = self.neut.scalar_mul(&(&a_inv * &a_inv));
        Ok(Self::new(a_inv, neut))
    }

    /// alpha/beta = a/b + (1/b^2) max(aB, bA), defined for zeroless beta.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if !other.is_zeroless() {
            return Err(Error::NotZeroless(format!("({self})/({other})")));
        }
        let (a, b) = (&self.rep, &other.rep);
        let neut = other
            .neut
            .scalar_mul(a)
            .sum(&self.neut.scalar_mul(b))
            .scalar_mul(&(b * b).inv()?);
        Ok(Self::new(a.try_div(b)?, neut))
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn abs(&self) -> Self {
        if self.rep.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Order on external numbers: forall a in self exists b in other, a <= b.
    /// For convex operands this reduces to a check on the representative gap
    /// against the joint neutrix.
    pub fn leq(&self, other: &Self) -> bool {
        let d = &other.rep - &self.rep;
        let m = self.neut.sum(&other.neut);
        if m.contains(&d) {
            self.neut.is_subset(&other.neut)
        } else {
            d.is_positive()
        }
    }

    pub fn lt(&self, other: &Self) -> bool {
        self.leq(other) && !other.leq(self)
    }

    pub fn max(&self, other: &Self) -> Self {
        if self.leq(other) {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        if self.leq(other) {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Some member is >= 0. Neutrices are both non-negative and non-positive.
    pub fn is_nonnegative(&self) -> bool {
        !self.rep.is_negative()
    }

    pub fn is_nonpositive(&self) -> bool {
        !self.rep.is_positive()
    }

    /// Every member is > 0.
    pub fn is_positive(&self) -> bool {
        self.is_zeroless() && self.rep.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.is_zeroless() && self.rep.is_negative()
    }

    /// Relative uncertainty R(alpha) = A/a for zeroless alpha, otherwise the
    /// whole line.
    pub fn rel_uncertainty(&self) -> Neutrix {
        if self.is_zeroless() {
            self.neut
                .scalar_mul(&self.rep.inv().expect("zeroless representative"))
        } else {
            Neutrix::Line
        }
    }

    /// Minkowski product of this number with a neutrix, as a neutrix.
    pub fn mul_neutrix(&self, n: &Neutrix) -> Neutrix {
        n.scalar_mul(&self.rep).sum(&self.neut.product(n))
    }

    /// alpha and beta are opposite with respect to C when multiplying their
    /// sum by C strictly shrinks max(alpha C, beta C).
    pub fn opposite_wrt(&self, other: &Self, c: &Neutrix) -> bool {
        let lhs = self.add(other).mul_neutrix(c);
        let rhs = self.mul_neutrix(c).sum(&other.mul_neutrix(c));
        lhs.is_strict_subset(&rhs)
    }

    /// alpha/beta lands inside -1 + o; the regime where distributivity can
    /// fail. Defined for zeroless operands.
    pub fn nearly_opposite(&self, other: &Self) -> Result<bool> {
        if !self.is_zeroless() || !other.is_zeroless() {
            return Err(Error::NotZeroless(
                "nearly-opposite test needs zeroless operands".into(),
            ));
        }
        let q = self.div(other)?;
        let target = ExternalNumber::new(NSReal::from_int(-1), Neutrix::oslash());
        Ok(q.is_subset(&target))
    }

    /// Entry predicate used by the matrix layer: not nearly opposite, with
    /// neutricial operands never counting as nearly opposite.
    pub fn not_nearly_opposite(&self, other: &Self) -> bool {
        if !self.is_zeroless() || !other.is_zeroless() {
            return true;
        }
        !self.nearly_opposite(other).expect("operands zeroless")
    }

    /// alpha N strictly inside N.
    pub fn is_absorber_of(&self, n: &Neutrix) -> bool {
        self.mul_neutrix(n).is_strict_subset(n)
    }

    /// N strictly inside alpha N.
    pub fn is_exploder_of(&self, n: &Neutrix) -> bool {
        n.is_strict_subset(&self.mul_neutrix(n))
    }
}

/// The criterion under which (alpha+beta)gamma = alpha gamma + beta gamma:
/// R(gamma) within max(R(alpha), R(beta)), or alpha, beta not opposite with
/// respect to N(gamma).
pub fn distributivity_holds(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    gamma: &ExternalNumber,
) -> bool {
    let r_cond = gamma
        .rel_uncertainty()
        .is_subset(&alpha.rel_uncertainty().sum(&beta.rel_uncertainty()));
    r_cond || !alpha.opposite_wrt(beta, gamma.neutrix())
}

/// Compares (alpha+beta)gamma against alpha gamma + beta gamma. Subset must
/// always hold; reports whether they are equal.
pub fn distrib_identity(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    gamma: &ExternalNumber,
) -> Result<SetRelation> {
    let lhs = alpha.add(beta).mul(gamma);
    let rhs = alpha.mul(gamma).add(&beta.mul(gamma));
    lhs.relation_to(&rhs).ok_or_else(|| {
        Error::LawViolation(format!(
            "subdistributivity failed: ({alpha} + {beta})({gamma}) not in {rhs}"
        ))
    })
}

/// Distributivity with correction term: alpha gamma + beta gamma equals
/// (alpha+beta)gamma + C alpha + C beta where C = N(gamma).
pub fn correction_term_identity(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    gamma: &ExternalNumber,
) -> Result<()> {
    let c = ExternalNumber::from_neutrix(gamma.neutrix().clone());
    let lhs = alpha.mul(gamma).add(&beta.mul(gamma));
    let rhs = alpha
        .add(beta)
        .mul(gamma)
        .add(&c.mul(alpha))
        .add(&c.mul(beta));
    if lhs == rhs {
        Ok(())
    } else {
        Err(Error::LawViolation(format!(
            "correction-term identity failed: {lhs} vs {rhs}"
        )))
    }
}

/// Reduce a representative modulo the neutrix: expand the rational function
/// far enough and drop every term the neutrix absorbs. The result is a
/// polynomial whenever the neutrix is nontrivial, which makes canonical forms
/// unique.
fn reduce_rep(rep: NSReal, neut: &Neutrix) -> NSReal {
    match neut {
        Neutrix::Zero => rep,
        Neutrix::Line => NSReal::zero(),
        Neutrix::Mono { exp, base } => {
            if rep.is_zero() {
                return rep;
            }
            // Keep exponents e <= exp for an o-based neutrix (eps^exp itself
            // is not a member there), e < exp for an L-based one.
            let strict = *base == NeutrixBase::Pound;
            let num = rep.numer();
            let den = rep.denom();
            let truncated = if rep.is_polynomial() {
                num.truncate_above(exp, strict)
            } else {
                // den = 1 + r with r of positive valuation; multiply out the
                // geometric series, truncating as we go.
                let r = den.sub(&EpsPoly::one());
                let mut acc = num.truncate_above(exp, strict);
                let mut term = num.truncate_above(exp, strict);
                loop {
                    term = term.mul(&r.neg()).truncate_above(exp, strict);
                    if term.is_zero() {
                        break;
                    }
                    acc = acc.add(&term);
                }
                acc.truncate_above(exp, strict)
            };
            NSReal::from_poly(truncated)
        }
    }
}

impl fmt::Display for ExternalNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neut.is_zero() {
            write!(f, "{}", self.rep)
        } else if self.rep.is_zero() {
            write!(f, "{}", self.neut)
        } else {
            write!(f, "{} + {}", self.rep, self.neut)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};

    fn ext(rep: NSReal, neut: Neutrix) -> ExternalNumber {
        ExternalNumber::new(rep, neut)
    }

    fn oslash() -> Neutrix {
        Neutrix::oslash()
    }

    fn eps_l(n: i64) -> Neutrix {
        Neutrix::scaled(rat_int(n), NeutrixBase::Pound)
    }

    fn eps_o(n: i64) -> Neutrix {
        Neutrix::scaled(rat_int(n), NeutrixBase::Oslash)
    }

    #[test]
    fn canonical_form_absorbs_representative() {
        // -eps + o canonicalizes to o
        let x = ext(-NSReal::eps(), oslash());
        assert!(x.is_neutricial());
        assert_eq!(x, ExternalNumber::from_neutrix(oslash()));
        // 1 + eps + o canonicalizes to 1 + o
        let y = ext(NSReal::one() + NSReal::eps(), oslash());
        assert_eq!(y, ext(NSReal::one(), oslash()));
        // but eps + eps^2*L keeps its representative
        let z = ext(NSReal::eps(), eps_l(2));
        assert!(z.is_zeroless());
    }

    #[test]
    fn addition_and_negation() {
        // (1+o) + (-1+eps L) = o
        let a = ext(NSReal::one(), oslash());
        let b = ext(NSReal::from_int(-1), eps_l(1));
        assert_eq!(a.add(&b), ExternalNumber::from_neutrix(oslash()));

        // (2+eps o) + (3+eps L) = 5 + eps L; sampled members land inside
        let c = ext(NSReal::from_int(2), eps_o(1));
        let d = ext(NSReal::from_int(3), eps_l(1));
        let s = c.add(&d);
        assert_eq!(s, ext(NSReal::from_int(5), eps_l(1)));
        let member = NSReal::from_int(2) + NSReal::eps() * NSReal::eps(); // in c
        let member2 = NSReal::from_int(3) + NSReal::eps(); // in d
        assert!(c.contains(&member));
        assert!(d.contains(&member2));
        assert!(s.contains(&(member + member2)));

        // alpha - alpha = N(alpha) for alpha = 7 + o
        let alpha = ext(NSReal::from_int(7), oslash());
        assert_eq!(
            alpha.add(&alpha.neg()),
            ExternalNumber::from_neutrix(oslash())
        );
    }

    #[test]
    fn multiplication() {
        // (2+eps L)(3+eps o) = 6 + eps L
        let a = ext(NSReal::from_int(2), eps_l(1));
        let b = ext(NSReal::from_int(3), eps_o(1));
        assert_eq!(a.mul(&b), ext(NSReal::from_int(6), eps_l(1)));

        // o * (5+o) = o
        let o = ExternalNumber::from_neutrix(oslash());
        let c = ext(NSReal::from_int(5), oslash());
        assert_eq!(o.mul(&c), o);

        // (1+o)^2 = 1+o
        let u = ext(NSReal::one(), oslash());
        assert_eq!(u.mul(&u), u);
    }

    #[test]
    fn inverse_and_division() {
        // 1/(2 + eps o) = 1/2 + eps o
        let a = ext(NSReal::from_int(2), eps_o(1));
        assert_eq!(
            a.inv().unwrap(),
            ext(NSReal::from_rat(rat(1, 2)), eps_o(1))
        );

        // alpha/alpha = 1 + R(alpha) for alpha = 3 + eps L
        let alpha = ext(NSReal::from_int(3), eps_l(1));
        let q = alpha.div(&alpha).unwrap();
        assert_eq!(q, ext(NSReal::one(), alpha.rel_uncertainty()));

        // 1/o is not defined
        assert!(matches!(
            ExternalNumber::from_neutrix(oslash()).inv(),
            Err(Error::NotZeroless(_))
        ));
    }

    #[test]
    fn relative_uncertainty() {
        assert_eq!(
            ext(NSReal::from_int(2), eps_o(1)).rel_uncertainty(),
            eps_o(1)
        );
        assert_eq!(
            ExternalNumber::from_neutrix(oslash()).rel_uncertainty(),
            Neutrix::Line
        );
        // R(eps + eps^3 L) = eps^2 L
        assert_eq!(
            ext(NSReal::eps(), eps_l(3)).rel_uncertainty(),
            eps_l(2)
        );
        // R(zeroless) is always inside o
        let samples = [
            ext(NSReal::from_int(3), eps_l(1)),
            ext(NSReal::eps(), eps_o(2)),
            ext(NSReal::from_int(-2), Neutrix::Zero),
        ];
        for s in samples {
            assert!(s.rel_uncertainty().is_subset(&oslash()), "{s}");
        }
    }

    #[test]
    fn order_and_sign_predicates() {
        let o = ExternalNumber::from_neutrix(oslash());
        let l = ExternalNumber::from_neutrix(Neutrix::pound());
        assert!(o.leq(&l));
        assert!(!l.leq(&o));

        assert!(o.is_nonnegative() && o.is_nonpositive());
        assert!(!o.is_positive() && !o.is_negative());

        let one_o = ext(NSReal::one(), oslash());
        let two_o = ext(NSReal::from_int(2), oslash());
        assert!(one_o.leq(&two_o));
        assert!(!two_o.leq(&one_o));
        assert!(one_o.is_positive());
    }

    #[test]
    fn nearly_opposite_examples() {
        // a real number close to 1 and -1 are nearly opposite
        let a = ExternalNumber::from_real(NSReal::one() + NSReal::eps());
        let b = ExternalNumber::from_int(-1);
        assert!(a.nearly_opposite(&b).unwrap());
        // two different standard reals are not
        assert!(!ExternalNumber::from_int(1)
            .nearly_opposite(&ExternalNumber::from_int(2))
            .unwrap());
        // neutricial operand is an error
        assert!(ExternalNumber::from_neutrix(oslash())
            .nearly_opposite(&b)
            .is_err());
    }

    #[test]
    fn absorbers_and_exploders() {
        let eps = ExternalNumber::from_real(NSReal::eps());
        let two = ExternalNumber::from_int(2);
        let pound = Neutrix::pound();
        assert!(eps.is_absorber_of(&pound));
        assert!(eps.is_absorber_of(&oslash()));
        assert!(!two.is_absorber_of(&pound));
        assert!(!two.is_exploder_of(&pound));
        let omega = ExternalNumber::from_real(NSReal::eps().inv().unwrap());
        assert!(omega.is_exploder_of(&pound));
    }

    #[test]
    fn distributivity_criterion_and_identity() {
        // alpha = 1, beta = -1, gamma = 1+o: strict subset, criterion false
        let alpha = ExternalNumber::from_int(1);
        let beta = ExternalNumber::from_int(-1);
        let gamma = ext(NSReal::one(), oslash());
        assert_eq!(
            distrib_identity(&alpha, &beta, &gamma).unwrap(),
            SetRelation::StrictSubset
        );
        assert!(!distributivity_holds(&alpha, &beta, &gamma));
        assert!(alpha.opposite_wrt(&beta, &oslash()));

        // alpha = beta = 1: equal, criterion true
        assert_eq!(
            distrib_identity(&alpha, &alpha, &gamma).unwrap(),
            SetRelation::Equal
        );
        assert!(distributivity_holds(&alpha, &alpha, &gamma));

        // correction term identity on the strict-subset instance
        correction_term_identity(&alpha, &beta, &gamma).unwrap();
    }

    #[test]
    fn zeroless_disjoint_from_oslash_multiple() {
        // alpha and o*alpha are disjoint for zeroless alpha
        let samples = [
            ext(NSReal::from_int(3), eps_l(1)),
            ext(NSReal::eps(), eps_o(2)),
            ext(NSReal::from_int(-2), oslash()),
        ];
        let o = ExternalNumber::from_neutrix(oslash());
        for alpha in samples {
            let scaled = o.mul(&alpha);
            assert!(!alpha.intersects(&scaled), "{alpha} meets {scaled}");
        }
    }

    #[test]
    fn division_consistency_with_inverse() {
        // alpha/beta agrees with alpha * (1/beta) across the family
        let vals = [
            ext(NSReal::from_int(2), eps_o(1)),
            ext(NSReal::from_int(-3), eps_l(2)),
            ext(NSReal::eps(), eps_o(3)),
            ExternalNumber::from_int(4),
            ExternalNumber::from_neutrix(eps_l(1)),
        ];
        for a in &vals {
            for b in &vals {
                if !b.is_zeroless() {
                    continue;
                }
                assert_eq!(
                    a.div(b).unwrap(),
                    a.mul(&b.inv().unwrap()),
                    "{a} / {b}"
                );
            }
        }
    }

    #[test]
    fn minkowski_membership_under_ops() {
        let a = ext(NSReal::from_int(2), eps_o(1));
        let b = ext(NSReal::from_int(3), eps_l(1));
        let members_a = [
            NSReal::from_int(2),
            NSReal::from_int(2) + NSReal::eps().powi(2).unwrap(),
        ];
        let members_b = [NSReal::from_int(3), NSReal::from_int(3) - NSReal::eps()];
        for x in &members_a {
            for y in &members_b {
                assert!(a.add(&b).contains(&(x + y)));
                assert!(a.sub(&b).contains(&(x - y)));
                assert!(a.mul(&b).contains(&(x * y)));
                assert!(a.div(&b).unwrap().contains(&(x / y)));
            }
        }
    }

    #[test]
    fn leq_matches_member_quantifier_on_samples() {
        // alpha <= beta iff forall a exists b >= a; spot-check with members.
        let o = ExternalNumber::from_neutrix(oslash());
        let pound = ExternalNumber::from_neutrix(Neutrix::pound());
        // every infinitesimal is below some limited number
        assert!(o.leq(&pound));
        // but L has members above all of o
        assert!(!pound.leq(&o));
        let one_o = ext(NSReal::one(), oslash());
        let two_o = ext(NSReal::from_int(2), oslash());
        assert!(one_o.leq(&two_o));
        let m = NSReal::from_int(2) - NSReal::eps();
        assert!(two_o.contains(&m));
        assert!(m.compare(&NSReal::one()) == std::cmp::Ordering::Greater);
    }
}
