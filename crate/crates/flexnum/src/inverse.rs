//! Near inverses: non-singularity, invertibility with respect to a tolerance
//! neutrix, and the adjugate construction with its hypotheses.
//!
//! A product of matrices with genuine neutrices never reaches the identity
//! exactly; "inverse" here means both products land inside the near identity
//! I_n(N), whose diagonal is 1 + N and whose off-diagonal entries are N, for
//! a tolerance N inside o. The adjugate over the determinant works whenever
//! the determinant is not so small that its relative uncertainty absorbs the
//! matrix's largest neutrix.

use crate::det::{cofactor_matrix, det};
use crate::error::{Error, Result};
use crate::external::ExternalNumber;
use crate::matrix::FlexMatrix;
use crate::neutrix::Neutrix;

/// I_n(N): diagonal entries 1 + N, off-diagonal entries N, with N inside o.
#[derive(Clone, Debug)]
pub struct NearIdentity {
    order: usize,
    tolerance: Neutrix,
}

impl NearIdentity {
    pub fn new(order: usize, tolerance: Neutrix) -> Result<Self> {
        if !tolerance.is_subset(&Neutrix::oslash()) {
            return Err(Error::BadTolerance(tolerance.to_string()));
        }
        if order == 0 {
            return Err(Error::ShapeMismatch("order must be at least 1".into()));
        }
        Ok(NearIdentity { order, tolerance })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn tolerance(&self) -> &Neutrix {
        &self.tolerance
    }

    pub fn matrix(&self) -> FlexMatrix {
        let n = self.tolerance.clone();
        FlexMatrix::from_fn(self.order, self.order, |i, j| {
            if i == j {
                ExternalNumber::new(crate::nsreal::NSReal::one(), n.clone())
            } else {
                ExternalNumber::from_neutrix(n.clone())
            }
        })
    }

    pub fn contains(&self, m: &FlexMatrix) -> bool {
        m.is_subset(&self.matrix())
    }
}

/// det(A) is zeroless.
pub fn is_nonsingular(m: &FlexMatrix) -> Result<bool> {
    Ok(det(m)?.is_zeroless())
}

/// R(A) = det(A) / abs_max^n, the matrix analogue of relative uncertainty.
pub fn matrix_rel_uncertainty(m: &FlexMatrix) -> Result<ExternalNumber> {
    let n = m.require_square()?;
    let am = m.abs_max();
    if !am.is_zeroless() {
        return Err(Error::NotZeroless(
            "max |entry| must be zeroless for R(A)".into(),
        ));
    }
    det(m)?.div(&am.powi(n as u32))
}

/// Verdict of checking one candidate inverse against a tolerance.
#[derive(Clone, Debug)]
pub struct InverseReport {
    /// Adjugate-based candidate; absent when the determinant is neutricial.
    pub candidate: Option<FlexMatrix>,
    pub tolerance: Neutrix,
    pub ab_included: bool,
    pub ba_included: bool,
    pub hypotheses: Hypotheses,
}

impl InverseReport {
    pub fn verified(&self) -> bool {
        self.ab_included && self.ba_included
    }
}

/// The hypotheses of the adjugate near-inverse construction, each checked
/// exactly.
#[derive(Clone, Debug)]
pub struct Hypotheses {
    pub nonsingular: bool,
    pub abs_max_zeroless: bool,
    /// R(A) must not absorb the largest entry neutrix.
    pub uncertainty_not_absorber: bool,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.nonsingular && self.abs_max_zeroless && self.uncertainty_not_absorber
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.nonsingular {
            out.push("determinant is not zeroless");
        }
        if !self.abs_max_zeroless {
            out.push("max |entry| is not zeroless");
        }
        if !self.uncertainty_not_absorber {
            out.push("R(A) is an absorber of the largest entry neutrix");
        }
        out
    }
}

/// Check both inclusion conditions for a given candidate and tolerance.
pub fn verify_inverse(
    a: &FlexMatrix,
    b: &FlexMatrix,
    tolerance: &Neutrix,
) -> Result<(bool, bool)> {
    let n = a.require_square()?;
    if b.rows() != n || b.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "candidate is {}x{}, matrix is {n}x{n}",
            b.rows(),
            b.cols()
        )));
    }
    let target = NearIdentity::new(n, tolerance.clone())?;
    Ok((
        target.contains(&a.mul(b)?),
        target.contains(&b.mul(a)?),
    ))
}

/// The adjugate near-inverse: candidate 1/det(A) C^T with tolerance
/// N_max / abs_max, verified when the hypotheses hold. Hypothesis failure is
/// reported, not fatal; the candidate stays available for inspection.
pub fn near_inverse(a: &FlexMatrix) -> Result<InverseReport> {
    a.require_square()?;
    let d = det(a)?;
    let abs_max = a.abs_max();
    let hypotheses = Hypotheses {
        nonsingular: d.is_zeroless(),
        abs_max_zeroless: abs_max.is_zeroless(),
        uncertainty_not_absorber: if d.is_zeroless() && abs_max.is_zeroless() {
            let r = matrix_rel_uncertainty(a)?;
            !r.is_absorber_of(&a.neutrix_max())
        } else {
            false
        },
    };
    let tolerance = if abs_max.is_zeroless() {
        a.neutrix_max()
            .scalar_mul(&abs_max.rep().inv().expect("zeroless representative"))
    } else {
        Neutrix::Zero
    };
    let candidate = if d.is_zeroless() {
        let adjugate = cofactor_matrix(a)?.transpose();
        Some(adjugate.scalar_mul(&d.inv()?))
    } else {
        None
    };
    let (ab_included, ba_included) = match &candidate {
        Some(b) if tolerance.is_subset(&Neutrix::oslash()) => verify_inverse(a, b, &tolerance)?,
        _ => (false, false),
    };
    if hypotheses.all_hold() && !(ab_included && ba_included) {
        return Err(Error::LawViolation(format!(
            "adjugate inverse fails its guarantee for {a} at tolerance {tolerance}"
        )));
    }
    let report = InverseReport {
        candidate,
        tolerance,
        ab_included,
        ba_included,
        hypotheses,
    };
    if report.hypotheses.all_hold() {
        debug_assert!(report.verified());
    }
    Ok(report)
}

/// Invertibility is symmetric: a verified inverse pair stays verified with
/// the roles swapped.
pub fn inverse_symmetry(a: &FlexMatrix, b: &FlexMatrix, tolerance: &Neutrix) -> Result<bool> {
    let (ab, ba) = verify_inverse(a, b, tolerance)?;
    if !(ab && ba) {
        return Err(Error::ConditionUnmet(
            "pair is not an inverse pair at this tolerance".into(),
        ));
    }
    let (ba2, ab2) = verify_inverse(b, a, tolerance)?;
    Ok(ba2 && ab2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg;
    use crate::neutrix::NeutrixBase;
    use crate::nsreal::NSReal;
    use crate::poly::{rat, rat_int};

    fn ext(rep: NSReal, neut: Neutrix) -> ExternalNumber {
        ExternalNumber::new(rep, neut)
    }

    fn int(n: i64) -> ExternalNumber {
        ExternalNumber::from_int(n)
    }

    fn o() -> ExternalNumber {
        ExternalNumber::from_neutrix(Neutrix::oslash())
    }

    fn m(rows: Vec<Vec<ExternalNumber>>) -> FlexMatrix {
        FlexMatrix::from_rows(rows).unwrap()
    }

    fn counterexample_matrix() -> FlexMatrix {
        // [[eps, o], [0, 1]]
        m(vec![
            vec![ExternalNumber::from_real(NSReal::eps()), o()],
            vec![int(0), int(1)],
        ])
    }

    fn sarrus_matrix() -> FlexMatrix {
        m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(0), int(0)],
            vec![
                int(0),
                int(1),
                ExternalNumber::from_real(NSReal::one() + NSReal::eps()),
            ],
            vec![int(0), int(1), int(1)],
        ])
    }

    #[test]
    fn nonsingularity() {
        assert!(is_nonsingular(&counterexample_matrix()).unwrap());
        assert!(!is_nonsingular(&sarrus_matrix()).unwrap());
        assert!(is_nonsingular(&FlexMatrix::identity(3)).unwrap());
    }

    #[test]
    fn relative_uncertainty_of_matrices() {
        assert_eq!(
            matrix_rel_uncertainty(&FlexMatrix::identity(2)).unwrap(),
            int(1)
        );
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(0)],
            vec![int(0), int(1)],
        ]);
        assert_eq!(
            matrix_rel_uncertainty(&a).unwrap(),
            ext(NSReal::one(), Neutrix::oslash())
        );
        let r = matrix_rel_uncertainty(&counterexample_matrix()).unwrap();
        assert_eq!(r.rep(), &NSReal::eps());
    }

    #[test]
    fn real_matrix_has_classical_inverse() {
        let a = m(vec![vec![int(2), int(1)], vec![int(1), int(1)]]);
        let report = near_inverse(&a).unwrap();
        assert!(report.hypotheses.all_hold());
        assert!(report.verified());
        assert_eq!(report.tolerance, Neutrix::Zero);
        let b = report.candidate.unwrap();
        assert_eq!(a.mul(&b).unwrap(), FlexMatrix::identity(2));
    }

    #[test]
    fn absorber_hypothesis_fails_on_counterexample() {
        let a = counterexample_matrix();
        let report = near_inverse(&a).unwrap();
        assert!(report.hypotheses.nonsingular);
        assert!(report.hypotheses.abs_max_zeroless);
        assert!(!report.hypotheses.uncertainty_not_absorber);
        assert!(!report.verified());
        // the candidate is still exposed for inspection
        let b = report.candidate.unwrap();
        // candidate fails for every sampled tolerance inside o
        let tolerances = [
            Neutrix::oslash(),
            Neutrix::scaled(rat(1, 2), NeutrixBase::Oslash),
            Neutrix::scaled(rat_int(1), NeutrixBase::Pound),
            Neutrix::scaled(rat_int(2), NeutrixBase::Oslash),
        ];
        for n in tolerances {
            let (ab, ba) = verify_inverse(&a, &b, &n).unwrap();
            assert!(!(ab && ba), "unexpectedly invertible at {n}");
        }
    }

    #[test]
    fn hypotheses_hold_on_well_conditioned_matrix() {
        // [[1 + eps^2 o, eps], [eps, 1 + eps^2 o]]
        let e2o = Neutrix::scaled(rat_int(2), NeutrixBase::Oslash);
        let eps = ExternalNumber::from_real(NSReal::eps());
        let a = m(vec![
            vec![ext(NSReal::one(), e2o.clone()), eps.clone()],
            vec![eps, ext(NSReal::one(), e2o.clone())],
        ]);
        let report = near_inverse(&a).unwrap();
        assert!(report.hypotheses.all_hold(), "{:?}", report.hypotheses);
        assert!(report.verified());
        assert_eq!(report.tolerance, e2o);
    }

    #[test]
    fn sarrus_is_invertible_wrt_oslash_though_singular() {
        // candidate: exact inverse of the center representative matrix
        let a = sarrus_matrix();
        let center = a.center_representatives();
        let inv = linalg::inverse(&center).unwrap();
        let b = FlexMatrix::from_fn(3, 3, |i, j| ExternalNumber::from_real(inv[i][j].clone()));
        let (ab, ba) = verify_inverse(&a, &b, &Neutrix::oslash()).unwrap();
        assert!(ab && ba);
        assert!(!is_nonsingular(&a).unwrap());
        // and symmetry holds
        assert!(inverse_symmetry(&a, &b, &Neutrix::oslash()).unwrap());
    }

    #[test]
    fn tolerance_monotonicity() {
        let a = m(vec![vec![int(2), int(1)], vec![int(1), int(1)]]);
        let report = near_inverse(&a).unwrap();
        let b = report.candidate.unwrap();
        // verified at Zero, hence at every larger tolerance inside o
        for n in [
            Neutrix::Zero,
            Neutrix::scaled(rat_int(3), NeutrixBase::Pound),
            Neutrix::oslash(),
        ] {
            let (ab, ba) = verify_inverse(&a, &b, &n).unwrap();
            assert!(ab && ba);
        }
    }

    #[test]
    fn bad_tolerance_rejected() {
        assert!(matches!(
            NearIdentity::new(2, Neutrix::pound()),
            Err(Error::BadTolerance(_))
        ));
        let a = FlexMatrix::identity(2);
        assert!(matches!(
            verify_inverse(&a, &a, &Neutrix::Line),
            Err(Error::BadTolerance(_))
        ));
    }
}
