//! End-to-end acceptance suite: the worked counterexamples reproduced
//! exactly, the rank and dependence verdicts with their certificates, and the
//! randomized law suites at full trial counts. One pass/fail line prints per
//! criterion (run with `--nocapture` to see them on success).

use flexnum::det;
use flexnum::external::SetRelation;
use flexnum::harness::{run_suite, GenConfig};
use flexnum::inverse;
use flexnum::linalg;
use flexnum::matrix::{self, MatrixRelation};
use flexnum::neutrix::{Neutrix, NeutrixBase};
use flexnum::nsreal::NSReal;
use flexnum::parse::{parse_matrix, parse_scalar};
use flexnum::poly::rat;
use flexnum::rank::{self, DependenceVerdict, IndependenceCertificate, RankOptions, StrictRank};
use flexnum::sample::MemberSampler;
use flexnum::{ExternalNumber, FlexVector};
use std::time::Instant;

fn criterion(n: u32, name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {n} ({name}): pass"),
        Err(e) => {
            println!("criterion {n} ({name}): FAIL - {e}");
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

fn check(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn sarrus() -> flexnum::FlexMatrix {
    parse_matrix("[[1+o,0,0],[0,1,1+eps],[0,1,1]]").unwrap()
}

#[test]
fn criterion_1_sarrus_determinant_and_laplace() {
    criterion(1, "3x3 neutricial determinant vs Laplace expansion", || {
        let start = Instant::now();
        let m = sarrus();
        let d = det::det(&m).map_err(|e| e.to_string())?;
        check(
            d == ExternalNumber::from_neutrix(Neutrix::oslash()),
            &format!("det should be o, got {d}"),
        )?;
        let report = det::laplace(&m, 0).map_err(|e| e.to_string())?;
        let expected = parse_scalar("-(1+o)*eps").unwrap();
        check(
            report.expansion == expected,
            &format!("expansion should be -(1+o)eps, got {}", report.expansion),
        )?;
        check(
            report.relation == SetRelation::StrictSubset,
            "expansion must be a strict subset of the determinant",
        )?;
        check(
            start.elapsed().as_secs_f64() < 1.0,
            &format!("took {:?}, budget 1s", start.elapsed()),
        )
    });
}

#[test]
fn criterion_2_associativity_counterexample() {
    criterion(2, "matrix multiplication fails associativity", || {
        let a = parse_matrix("[[1,1],[0,0]]").unwrap();
        let b = parse_matrix("[[1,0],[-1,0]]").unwrap();
        let c = parse_matrix("[[o],[o]]").unwrap();
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        check(
            left == parse_matrix("[[0],[0]]").unwrap(),
            &format!("(AB)C should be [[0],[0]], got {left}"),
        )?;
        check(
            right == parse_matrix("[[o],[0]]").unwrap(),
            &format!("A(BC) should be [[o],[0]], got {right}"),
        )?;
        let report = matrix::assoc_check(&a, &b, &c).map_err(|e| e.to_string())?;
        check(
            report.verdict == MatrixRelation::LeftInRight,
            &format!("verdict should be LeftInRight, got {:?}", report.verdict),
        )
    });
}

#[test]
fn criterion_3_determinant_addition_counterexample() {
    criterion(3, "row-sum determinants are only an inclusion", || {
        let b = parse_matrix("[[1,1],[1+o,1+o]]").unwrap();
        let c = parse_matrix("[[-1,-1],[1+o,1+o]]").unwrap();
        let report = det::det_row_sum(&b, &c, 0).map_err(|e| e.to_string())?;
        check(
            report.det_combined == ExternalNumber::zero(),
            &format!("det(A) should be 0, got {}", report.det_combined),
        )?;
        check(
            report.det_sum == ExternalNumber::from_neutrix(Neutrix::oslash()),
            &format!("det(B)+det(C) should be o, got {}", report.det_sum),
        )?;
        check(
            report.relation == SetRelation::StrictSubset,
            "0 must be a strict subset of o",
        )
    });
}

#[test]
fn criterion_4_row_multiple_blowup() {
    criterion(4, "adding an unlimited row multiple blows up the neutrix", || {
        let a = parse_matrix("[[1,1],[o,1]]").unwrap();
        let lambda = parse_scalar("eps^-1").unwrap();
        let report = det::add_multiple_row(&a, 1, 0, &lambda).map_err(|e| e.to_string())?;
        check(
            report.det_before == parse_scalar("1+o").unwrap(),
            &format!("det(A) should be 1+o, got {}", report.det_before),
        )?;
        let blown = ExternalNumber::from_neutrix(Neutrix::scaled(
            rat(-1, 1),
            NeutrixBase::Oslash,
        ));
        check(
            report.det_after == blown,
            &format!("det(A') should be eps^(-1)*o, got {}", report.det_after),
        )?;
        check(
            report.det_after.is_subset(&report.bound),
            "inclusion bound must hold",
        )?;
        check(!report.unchanged, "the determinant must have changed")
    });
}

#[test]
fn criterion_5_near_inverse_counterexample() {
    criterion(5, "adjugate candidate fails every tolerance inside o", || {
        let a = parse_matrix("[[eps,o],[0,1]]").unwrap();
        let report = inverse::near_inverse(&a).map_err(|e| e.to_string())?;
        check(
            report.hypotheses.nonsingular,
            "the matrix is non-singular (det = eps)",
        )?;
        check(
            !report.hypotheses.uncertainty_not_absorber,
            "the absorber hypothesis must be reported violated",
        )?;
        let b = report
            .candidate
            .clone()
            .ok_or("candidate inverse must still be returned")?;
        // o itself plus ten scaled neutrices of each base
        let mut tolerances = vec![Neutrix::oslash()];
        for k in 1..=10i64 {
            tolerances.push(Neutrix::scaled(rat(k, 2), NeutrixBase::Oslash));
            tolerances.push(Neutrix::scaled(rat(k, 2), NeutrixBase::Pound));
        }
        for n in &tolerances {
            let (ab, ba) = inverse::verify_inverse(&a, &b, n).map_err(|e| e.to_string())?;
            check(
                !(ab && ba),
                &format!("candidate unexpectedly verified at tolerance {n}"),
            )?;
        }
        Ok(())
    });
}

#[test]
fn criterion_6_rank_examples() {
    criterion(6, "minor, row and strict rank on the worked examples", || {
        let start = Instant::now();
        let opts = RankOptions::default();

        // 2x3 example: all three ranks are 1
        let a = parse_matrix("[[1+o, 2+o, -1+eps*L],[-2, -4+eps, 2+eps*o]]").unwrap();
        let report = rank::rank_report(&a, &opts).map_err(|e| e.to_string())?;
        check(report.minor_rank == 1, "minor rank of the 2x3 example is 1")?;
        check(
            (report.row_rank.lo, report.row_rank.hi) == (1, 1),
            &format!(
                "row rank should be [1,1], got [{},{}]",
                report.row_rank.lo, report.row_rank.hi
            ),
        )?;
        match &report.strict {
            StrictRank::Defined {
                value,
                representative,
            } => {
                check(*value == 1, "strict rank should be 1")?;
                check(
                    a.contains_representative(representative),
                    "strict witness must be a representative",
                )?;
                check(
                    linalg::rank(representative) == 1,
                    "strict witness must have rank 1",
                )?;
            }
            other => return Err(format!("strict rank should be defined, got {other:?}")),
        }

        // the 3x3 example: minor rank 2, row rank 3, strict rank undefined
        let m = sarrus();
        let report = rank::rank_report(&m, &opts).map_err(|e| e.to_string())?;
        check(report.minor_rank == 2, "minor rank of the 3x3 example is 2")?;
        check(
            (report.row_rank.lo, report.row_rank.hi) == (3, 3),
            &format!(
                "row rank should be [3,3], got [{},{}]",
                report.row_rank.lo, report.row_rank.hi
            ),
        )?;
        match &report.strict {
            StrictRank::UndefinedEvidence { samples } => {
                check(*samples >= 200, "at least 200 samples required")?;
            }
            other => {
                return Err(format!(
                    "strict rank should be undefined-evidence, got {other:?}"
                ))
            }
        }
        // every sampled representative matrix has rank 3
        let mut sampler = MemberSampler::new(opts.seed);
        for i in 0..200 {
            let rep = sampler.representative_matrix(&m);
            check(
                linalg::rank(&rep) == 3,
                &format!("sampled representative {i} does not have rank 3"),
            )?;
        }
        check(
            start.elapsed().as_secs_f64() < 10.0,
            &format!("took {:?}, budget 10s", start.elapsed()),
        )
    });
}

#[test]
fn criterion_7_dependence_examples() {
    criterion(7, "dependence verdicts with certificates", || {
        // dependent with witness proportional to (2, 1)
        let a1 = FlexVector::new(vec![
            parse_scalar("1+o").unwrap(),
            parse_scalar("eps*o").unwrap(),
            parse_scalar("-2+eps*L").unwrap(),
        ])
        .unwrap();
        let a2 = FlexVector::new(vec![
            parse_scalar("-2+o").unwrap(),
            parse_scalar("eps*L").unwrap(),
            parse_scalar("4+eps*L").unwrap(),
        ])
        .unwrap();
        match rank::dependence(&[a1.clone(), a2.clone()]).map_err(|e| e.to_string())? {
            DependenceVerdict::Dependent(w) => {
                check(w.verify(&[a1, a2]), "witness must re-verify")?;
                let ratio = w.coefficients[0]
                    .try_div(&w.coefficients[1])
                    .map_err(|e| e.to_string())?;
                check(
                    ratio == NSReal::from_int(2),
                    &format!("witness should be proportional to (2,1), got ratio {ratio}"),
                )?;
            }
            other => return Err(format!("expected dependent, got {other:?}")),
        }

        // independent through the 2x2 criterion
        let b1 = FlexVector::new(vec![
            parse_scalar("1+o").unwrap(),
            parse_scalar("eps*o").unwrap(),
        ])
        .unwrap();
        let b2 = FlexVector::new(vec![
            parse_scalar("o").unwrap(),
            parse_scalar("1+eps*L").unwrap(),
        ])
        .unwrap();
        match rank::dependence(&[b1, b2]).map_err(|e| e.to_string())? {
            DependenceVerdict::Independent(cert) => check(
                cert == IndependenceCertificate::TwoByTwoIff,
                &format!("expected the 2x2 criterion certificate, got {cert:?}"),
            )?,
            other => return Err(format!("expected independent, got {other:?}")),
        }

        // dependent because a neutrix vector is present
        let c1 = FlexVector::new(vec![
            parse_scalar("o").unwrap(),
            parse_scalar("o").unwrap(),
        ])
        .unwrap();
        let c2 = FlexVector::new(vec![
            parse_scalar("0").unwrap(),
            parse_scalar("eps").unwrap(),
        ])
        .unwrap();
        match rank::dependence(&[c1.clone(), c2.clone()]).map_err(|e| e.to_string())? {
            DependenceVerdict::Dependent(w) => {
                check(w.verify(&[c1, c2]), "witness must re-verify")?;
                check(
                    w.coefficients[1].is_zero() && !w.coefficients[0].is_zero(),
                    "witness should pick out the neutrix vector",
                )?;
            }
            other => return Err(format!("expected dependent, got {other:?}")),
        }
        Ok(())
    });
}

#[test]
fn criterion_8_property_suites() {
    criterion(8, "all law suites at 500 trials", || {
        let start = Instant::now();
        let suites = [
            "subdistributivity",
            "distributivity-criterion-iff",
            "correction-term",
            "r-product",
            "semigroup",
            "matrix-subdistributivity",
            "laplace-inclusion",
            "reduced-bounds",
            "det-properties",
            "nonneg-axioms",
            "near-inverse",
            "rank-laws",
        ];
        let cfg = GenConfig {
            seed: 0xacce97,
            trials: 500,
            ..GenConfig::default()
        };
        for name in suites {
            let report = run_suite(name, &cfg).map_err(|e| e.to_string())?;
            check(
                report.failures == 0,
                &format!(
                    "suite {name}: {} failures, first: {:?}",
                    report.failures, report.first_counterexample
                ),
            )?;
        }
        check(
            start.elapsed().as_secs_f64() < 60.0,
            &format!("took {:?}, budget 60s", start.elapsed()),
        )
    });
}

#[test]
fn criterion_9_containment_oracle() {
    criterion(9, "sampled representatives stay inside external values", || {
        let cfg = GenConfig {
            seed: 0x09ac1e,
            trials: 200,
            ..GenConfig::default()
        };
        let report = run_suite("containment-oracle", &cfg).map_err(|e| e.to_string())?;
        check(
            report.failures == 0,
            &format!(
                "{} violations, first: {:?}",
                report.failures, report.first_counterexample
            ),
        )
    });
}
