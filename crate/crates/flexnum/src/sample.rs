//! Seeded sampling of members of neutrices and external numbers. Every sample
//! is re-verified against the membership predicate before being returned, so
//! downstream code can treat samples as certified members.

use crate::external::ExternalNumber;
use crate::linalg::RealMatrix;
use crate::matrix::FlexMatrix;
use crate::neutrix::{Neutrix, NeutrixBase};
use crate::nsreal::NSReal;
use crate::poly::{rat, Rat};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct MemberSampler {
    rng: ChaCha8Rng,
    coeff_bound: i64,
}

impl MemberSampler {
    pub fn new(seed: u64) -> Self {
        MemberSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            coeff_bound: 4,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn coeff(&mut self) -> Rat {
        let n = self.rng.gen_range(-self.coeff_bound..=self.coeff_bound);
        let d = self.rng.gen_range(1..=self.coeff_bound);
        rat(n, d)
    }

    fn nonzero_coeff(&mut self) -> Rat {
        loop {
            let c = self.coeff();
            if !num_traits::Zero::is_zero(&c) {
                return c;
            }
        }
    }

    /// Exponent offsets that probe the valuation boundary of a scaled
    /// neutrix, including values arbitrarily close to the threshold.
    fn boundary_offset(&mut self) -> Rat {
        let choices = [
            rat(1, 8),
            rat(1, 4),
            rat(1, 2),
            rat(1, 1),
            rat(2, 1),
            rat(3, 1),
        ];
        choices[self.rng.gen_range(0..choices.len())].clone()
    }

    /// A random member of the neutrix, occasionally zero.
    pub fn member(&mut self, n: &Neutrix) -> NSReal {
        let x = match n {
            Neutrix::Zero => NSReal::zero(),
            Neutrix::Line => {
                // any real: limited or unlimited
                let exp = rat(self.rng.gen_range(-2..=2), 1);
                NSReal::monomial(self.coeff(), exp)
            }
            Neutrix::Mono { exp, base } => {
                if self.rng.gen_ratio(1, 8) {
                    NSReal::zero()
                } else {
                    let delta = match base {
                        NeutrixBase::Oslash => self.boundary_offset(),
                        NeutrixBase::Pound => {
                            if self.rng.gen_ratio(1, 2) {
                                Rat::from_integer(0.into())
                            } else {
                                self.boundary_offset()
                            }
                        }
                    };
                    NSReal::monomial(self.nonzero_coeff(), exp + delta)
                }
            }
        };
        debug_assert!(n.contains(&x), "sampled {x} outside {n}");
        x
    }

    /// A random representative of an external number.
    pub fn representative(&mut self, a: &ExternalNumber) -> NSReal {
        let x = a.rep() + &self.member(a.neutrix());
        debug_assert!(a.contains(&x));
        x
    }

    /// A random representative matrix, entrywise.
    pub fn representative_matrix(&mut self, m: &FlexMatrix) -> RealMatrix {
        (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| self.representative(m.get(i, j)))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn samples_are_members() {
        let mut s = MemberSampler::new(7);
        let family = [
            Neutrix::Zero,
            Neutrix::oslash(),
            Neutrix::pound(),
            Neutrix::scaled(rat_int(2), NeutrixBase::Oslash),
            Neutrix::scaled(rat(-1, 2), NeutrixBase::Pound),
            Neutrix::Line,
        ];
        for n in &family {
            for _ in 0..50 {
                let x = s.member(n);
                assert!(n.contains(&x), "{x} not in {n}");
            }
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let n = Neutrix::oslash();
        let run = |seed| {
            let mut s = MemberSampler::new(seed);
            (0..10).map(|_| s.member(&n)).collect::<Vec<_>>()
        };
        assert_eq!(run(42), run(42));
        assert_ne!(run(42), run(43));
    }
}
