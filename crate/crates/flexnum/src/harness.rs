//! Randomized law checking: a seeded generator over the representable family,
//! a membership oracle for sampled representatives, and named suites that
//! exercise the calculus (subdistributivity, the distributivity criterion,
//! determinant inclusions, near inverses, rank relations) on concrete
//! instances. Identical configurations produce identical instance streams.

use crate::det;
use crate::error::{Error, Result};
use crate::external::{
    correction_term_identity, distrib_identity, distributivity_holds, ExternalNumber, SetRelation,
};
use crate::inverse;
use crate::matrix::{self, FlexMatrix};
use crate::neutrix::{Neutrix, NeutrixBase};
use crate::nsreal::NSReal;
use crate::poly::{rat, Rat};
use crate::rank::{self, RankOptions};
use crate::sample::MemberSampler;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct NeutrixWeights {
    pub zero: u32,
    pub oslash: u32,
    pub pound: u32,
    pub line: u32,
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub seed: u64,
    pub trials: u32,
    /// Scale exponents are drawn with numerators in `-max_exp_num..=max_exp_num`.
    pub max_exp_num: i64,
    /// ... over these denominators.
    pub exp_denominators: Vec<i64>,
    /// Rational coefficients use numerators and denominators up to this bound.
    pub coeff_bound: i64,
    pub weights: NeutrixWeights,
    pub max_rows: usize,
    pub max_cols: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 0xf1e5,
            trials: 100,
            max_exp_num: 2,
            exp_denominators: vec![1, 1, 2, 4],
            coeff_bound: 3,
            weights: NeutrixWeights {
                zero: 2,
                oslash: 4,
                pound: 4,
                line: 1,
            },
            max_rows: 3,
            max_cols: 3,
        }
    }
}

/// Instance generator; all draws flow through one seeded stream.
pub struct Gen {
    cfg: GenConfig,
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(cfg: GenConfig) -> Self {
        let rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        Gen { cfg, rng }
    }

    /// Fork a sub-generator for one trial; results do not depend on how
    /// earlier trials consumed randomness.
    pub fn trial(&self, index: u32) -> Gen {
        let mut cfg = self.cfg.clone();
        cfg.seed = self
            .cfg
            .seed
            .wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(index as u64);
        Gen::new(cfg)
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn rat(&mut self) -> Rat {
        let b = self.cfg.coeff_bound;
        rat(self.rng.gen_range(-b..=b), self.rng.gen_range(1..=b))
    }

    pub fn nonzero_rat(&mut self) -> Rat {
        loop {
            let r = self.rat();
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    pub fn exponent(&mut self) -> Rat {
        let num = self.rng.gen_range(-self.cfg.max_exp_num..=self.cfg.max_exp_num);
        let den = self.cfg.exp_denominators
            [self.rng.gen_range(0..self.cfg.exp_denominators.len())];
        rat(num, den)
    }

    pub fn nonneg_exponent(&mut self) -> Rat {
        let num = self.rng.gen_range(0..=self.cfg.max_exp_num);
        let den = self.cfg.exp_denominators
            [self.rng.gen_range(0..self.cfg.exp_denominators.len())];
        rat(num, den)
    }

    /// A small polynomial (or occasional fraction) in eps.
    pub fn nsreal(&mut self) -> NSReal {
        let terms = self.rng.gen_range(1..=2);
        let mut acc = NSReal::zero();
        for _ in 0..terms {
            acc = acc + NSReal::monomial(self.rat(), self.exponent());
        }
        if self.rng.gen_ratio(1, 8) {
            let den = NSReal::one() + NSReal::monomial(self.rat(), self.positive_exponent());
            acc = acc.try_div(&den).expect("denominator is appreciable");
        }
        acc
    }

    fn positive_exponent(&mut self) -> Rat {
        let num = self.rng.gen_range(1..=self.cfg.max_exp_num.max(1));
        let den = self.cfg.exp_denominators
            [self.rng.gen_range(0..self.cfg.exp_denominators.len())];
        rat(num, den)
    }

    pub fn nonzero_nsreal(&mut self) -> NSReal {
        loop {
            let x = self.nsreal();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn neutrix(&mut self) -> Neutrix {
        let w = &self.cfg.weights;
        let total = w.zero + w.oslash + w.pound + w.line;
        let pick = self.rng.gen_range(0..total);
        if pick < w.zero {
            Neutrix::Zero
        } else if pick < w.zero + w.oslash {
            Neutrix::scaled(self.exponent(), NeutrixBase::Oslash)
        } else if pick < w.zero + w.oslash + w.pound {
            Neutrix::scaled(self.exponent(), NeutrixBase::Pound)
        } else {
            Neutrix::Line
        }
    }

    /// A neutrix other than the whole line.
    pub fn bounded_neutrix(&mut self) -> Neutrix {
        loop {
            let n = self.neutrix();
            if !n.is_line() {
                return n;
            }
        }
    }

    pub fn external(&mut self) -> ExternalNumber {
        ExternalNumber::new(self.nsreal(), self.neutrix())
    }

    pub fn zeroless_external(&mut self) -> ExternalNumber {
        loop {
            let x = ExternalNumber::new(self.nonzero_nsreal(), self.bounded_neutrix());
            if x.is_zeroless() {
                return x;
            }
        }
    }

    pub fn nonnegative_external(&mut self) -> ExternalNumber {
        let x = self.external();
        if x.is_nonnegative() {
            x
        } else {
            x.neg()
        }
    }

    pub fn shape(&mut self) -> (usize, usize) {
        (
            self.rng.gen_range(1..=self.cfg.max_rows),
            self.rng.gen_range(1..=self.cfg.max_cols),
        )
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> FlexMatrix {
        FlexMatrix::from_fn(rows, cols, |_, _| self.external())
    }

    pub fn nonnegative_matrix(&mut self, rows: usize, cols: usize) -> FlexMatrix {
        FlexMatrix::from_fn(rows, cols, |_, _| self.nonnegative_external())
    }

    /// Entries bounded by 1 + o in absolute value, with at least one entry of
    /// the form 1 + (neutrix inside o).
    pub fn reduced_matrix(&mut self, n: usize) -> FlexMatrix {
        loop {
            let special = (self.rng.gen_range(0..n), self.rng.gen_range(0..n));
            let m = FlexMatrix::from_fn(n, n, |i, j| {
                let neut = loop {
                    let n = self.bounded_neutrix();
                    if n.is_subset(&Neutrix::oslash()) {
                        break n;
                    }
                };
                if (i, j) == special {
                    let sign = if self.rng.gen_ratio(1, 2) { 1 } else { -1 };
                    ExternalNumber::new(NSReal::from_int(sign), neut)
                } else {
                    let b = self.cfg.coeff_bound;
                    let c = rat(self.rng.gen_range(-b..=b), b);
                    ExternalNumber::new(NSReal::from_rat(c), neut)
                }
            });
            if det::is_reduced(&m) {
                return m;
            }
        }
    }

    /// Appreciable diagonal, small off-diagonal entries, small neutrices; the
    /// regime in which the adjugate near-inverse is guaranteed.
    pub fn well_conditioned_matrix(&mut self, n: usize) -> FlexMatrix {
        FlexMatrix::from_fn(n, n, |i, j| {
            let q = self.positive_exponent();
            let base = if self.rng.gen_ratio(1, 2) {
                NeutrixBase::Oslash
            } else {
                NeutrixBase::Pound
            };
            let neut = Neutrix::scaled(q, base);
            if i == j {
                let c = rat(self.rng.gen_range(1..=3) * 4, 1);
                ExternalNumber::new(NSReal::from_rat(c), neut)
            } else {
                let b = self.cfg.coeff_bound;
                let c = rat(self.rng.gen_range(-b..=b), 4 * b);
                ExternalNumber::new(NSReal::from_rat(c), neut)
            }
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: u32,
    pub failures: u32,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub const SUITES: &[&str] = &[
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
    "containment-oracle",
];

type Trial = fn(&mut Gen) -> std::result::Result<(), String>;

fn trial_for(name: &str) -> Option<Trial> {
    Some(match name {
        "subdistributivity" => trial_subdistributivity,
        "distributivity-criterion-iff" => trial_criterion_iff,
        "correction-term" => trial_correction_term,
        "r-product" => trial_r_product,
        "semigroup" => trial_semigroup,
        "matrix-subdistributivity" => trial_matrix_subdistributivity,
        "laplace-inclusion" => trial_laplace_inclusion,
        "reduced-bounds" => trial_reduced_bounds,
        "det-properties" => trial_det_properties,
        "nonneg-axioms" => trial_nonneg_axioms,
        "near-inverse" => trial_near_inverse,
        "rank-laws" => trial_rank_laws,
        "containment-oracle" => trial_containment_oracle,
        _ => return None,
    })
}

/// Run one named suite. Trials are independently seeded from the master seed.
pub fn run_suite(name: &str, cfg: &GenConfig) -> Result<SuiteReport> {
    let trial = trial_for(name).ok_or_else(|| Error::UnknownSuite(name.to_string()))?;
    let master = Gen::new(cfg.clone());
    let trials = cfg.trials.max(1);
    let mut failures = 0;
    let mut first = None;
    for i in 0..trials {
        let mut g = master.trial(i);
        if let Err(cex) = trial(&mut g) {
            failures += 1;
            if first.is_none() {
                first = Some(format!("trial {i}: {cex}"));
            }
        }
    }
    Ok(SuiteReport {
        suite: name.to_string(),
        trials,
        failures,
        first_counterexample: first,
    })
}

pub fn run_all(cfg: &GenConfig) -> Vec<SuiteReport> {
    SUITES
        .iter()
        .map(|name| run_suite(name, cfg).expect("known suite"))
        .collect()
}

fn law_err<T>(r: Result<T>, context: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{context}: {e}"))
}

fn trial_subdistributivity(g: &mut Gen) -> std::result::Result<(), String> {
    let (a, b, c) = (g.external(), g.external(), g.external());
    law_err(
        distrib_identity(&a, &b, &c),
        &format!("alpha={a}, beta={b}, gamma={c}"),
    )?;
    Ok(())
}

fn trial_criterion_iff(g: &mut Gen) -> std::result::Result<(), String> {
    let (a, b, c) = (g.external(), g.external(), g.external());
    let relation = law_err(
        distrib_identity(&a, &b, &c),
        &format!("alpha={a}, beta={b}, gamma={c}"),
    )?;
    let criterion = distributivity_holds(&a, &b, &c);
    if criterion != (relation == SetRelation::Equal) {
        return Err(format!(
            "criterion {criterion} but relation {relation:?} for alpha={a}, beta={b}, gamma={c}"
        ));
    }
    Ok(())
}

fn trial_correction_term(g: &mut Gen) -> std::result::Result<(), String> {
    let (a, b, c) = (g.external(), g.external(), g.external());
    law_err(
        correction_term_identity(&a, &b, &c),
        &format!("alpha={a}, beta={b}, gamma={c}"),
    )
}

fn trial_r_product(g: &mut Gen) -> std::result::Result<(), String> {
    let k = g.rng().gen_range(1..=5usize);
    let factors: Vec<ExternalNumber> = (0..k).map(|_| g.external()).collect();
    let mut product = factors[0].clone();
    let mut expected = factors[0].rel_uncertainty();
    for f in &factors[1..] {
        product = product.mul(f);
        expected = expected.sum(&f.rel_uncertainty());
    }
    if product.rel_uncertainty() != expected {
        return Err(format!(
            "R(product) = {} but max R = {expected} for {factors:?}",
            product.rel_uncertainty()
        ));
    }
    Ok(())
}

fn trial_semigroup(g: &mut Gen) -> std::result::Result<(), String> {
    let (rows, cols) = g.shape();
    let a = g.matrix(rows, cols);
    let b = g.matrix(rows, cols);
    let c = g.matrix(rows, cols);
    let ctx = || format!("A={a}, B={b}, C={c}");
    let left = law_err(a.add(&b).and_then(|x| x.add(&c)), &ctx())?;
    let right = law_err(b.add(&c).and_then(|x| a.add(&x)), &ctx())?;
    if left != right {
        return Err(format!("associativity failed: {}", ctx()));
    }
    if law_err(a.add(&b), &ctx())? != law_err(b.add(&a), &ctx())? {
        return Err(format!("commutativity failed: {}", ctx()));
    }
    let neg_a_plus_a = law_err(a.neg().add(&a), &ctx())?;
    if law_err(a.add(&neg_a_plus_a), &ctx())? != a {
        return Err(format!("regularity failed: {}", ctx()));
    }
    if law_err(a.add(&a.neutricial_part()), &ctx())? != a {
        return Err(format!("A + N(A) != A: {}", ctx()));
    }
    if law_err(a.add(&a.neg()), &ctx())? != a.neutricial_part() {
        return Err(format!("A + (-A) != N(A): {}", ctx()));
    }
    let zero = FlexMatrix::zero_matrix(rows, cols);
    if law_err(a.add(&zero), &ctx())? != a {
        return Err(format!("A + O != A: {}", ctx()));
    }
    Ok(())
}

fn trial_matrix_subdistributivity(g: &mut Gen) -> std::result::Result<(), String> {
    let (rows, cols) = g.shape();
    let alpha = g.external();
    let beta = g.external();
    let a = g.matrix(rows, cols);
    let b = g.matrix(rows, cols);
    law_err(
        matrix::scalar_left_distrib(&alpha, &a, &b),
        &format!("alpha={alpha}, A={a}, B={b}"),
    )?;
    law_err(
        matrix::scalar_sum_distrib(&alpha, &beta, &a),
        &format!("alpha={alpha}, beta={beta}, A={a}"),
    )?;
    let max_cols = g.cfg.max_cols;
    let inner = g.rng().gen_range(1..=max_cols);
    let m1 = g.matrix(rows, inner);
    let m2 = g.matrix(inner, cols);
    let m3 = g.matrix(inner, cols);
    law_err(
        matrix::matrix_distrib(&m1, &m2, &m3),
        &format!("A={m1}, B={m2}, C={m3}"),
    )?;
    // (A+B)C within AC + BC
    let s1 = g.matrix(rows, inner);
    let s2 = g.matrix(rows, inner);
    let rhs_ctx = format!("A={s1}, B={s2}, C={m2}");
    let lhs = law_err(s1.add(&s2).and_then(|s| s.mul(&m2)), &rhs_ctx)?;
    let rhs = law_err(
        s1.mul(&m2).and_then(|x| s2.mul(&m2).and_then(|y| x.add(&y))),
        &rhs_ctx,
    )?;
    if !lhs.is_subset(&rhs) {
        return Err(format!("(A+B)C not within AC+BC: {rhs_ctx}"));
    }
    Ok(())
}

fn trial_laplace_inclusion(g: &mut Gen) -> std::result::Result<(), String> {
    let n = g.rng().gen_range(1..=4usize);
    let a = g.matrix(n, n);
    let col = g.rng().gen_range(0..n);
    law_err(det::laplace(&a, col), &format!("A={a}, column {col}"))?;
    Ok(())
}

fn trial_reduced_bounds(g: &mut Gen) -> std::result::Result<(), String> {
    let n = g.rng().gen_range(1..=4usize);
    let a = g.reduced_matrix(n);
    law_err(det::reduced_bounds(&a), &format!("A={a}"))?;
    Ok(())
}

fn trial_det_properties(g: &mut Gen) -> std::result::Result<(), String> {
    let n = g.rng().gen_range(1..=3usize);
    let a = g.matrix(n, n);
    let ctx = || format!("A={a}");
    let d = law_err(det::det(&a), &ctx())?;
    if d != law_err(det::det(&a.transpose()), &ctx())? {
        return Err(format!("det(A) != det(A^T): {}", ctx()));
    }
    if n >= 2 {
        let (i, j) = (0, n - 1);
        let mut rows: Vec<Vec<ExternalNumber>> = (0..n)
            .map(|r| a.row(r).entries().to_vec())
            .collect();
        rows.swap(i, j);
        let swapped = FlexMatrix::from_rows(rows).expect("same shape");
        if law_err(det::det(&swapped), &ctx())? != d.neg() {
            return Err(format!("row swap did not negate det: {}", ctx()));
        }
        // a neutricial row forces a neutricial determinant
        let mut rows: Vec<Vec<ExternalNumber>> = (0..n)
            .map(|r| a.row(r).entries().to_vec())
            .collect();
        rows[0] = (0..n)
            .map(|_| ExternalNumber::from_neutrix(g.bounded_neutrix()))
            .collect();
        let with_neutrix = FlexMatrix::from_rows(rows).expect("same shape");
        if !law_err(det::det(&with_neutrix), &ctx())?.is_neutricial() {
            return Err(format!("neutricial row gave a zeroless det: {}", ctx()));
        }
        // identical rows force a neutricial determinant
        let mut rows: Vec<Vec<ExternalNumber>> = (0..n)
            .map(|r| a.row(r).entries().to_vec())
            .collect();
        rows[j] = rows[i].clone();
        let dup = FlexMatrix::from_rows(rows).expect("same shape");
        if !law_err(det::det(&dup), &ctx())?.is_neutricial() {
            return Err(format!("identical rows gave a zeroless det: {}", ctx()));
        }
    }
    Ok(())
}

fn trial_nonneg_axioms(g: &mut Gen) -> std::result::Result<(), String> {
    let (rows, cols) = g.shape();
    let a = g.nonnegative_matrix(rows, cols);
    let b = g.nonnegative_matrix(rows, cols);
    let c = g.nonnegative_matrix(rows, cols);
    let lam = g.nonnegative_external();
    let mu = g.nonnegative_external();
    let ctx = || format!("A={a}, B={b}, C={c}, lambda={lam}, mu={mu}");
    let sum = law_err(a.add(&b), &ctx())?;
    if !sum.is_nonnegative() {
        return Err(format!("A+B not non-negative: {}", ctx()));
    }
    let left = law_err(a.add(&law_err(b.add(&c), &ctx())?), &ctx())?;
    let right = law_err(law_err(a.add(&b), &ctx())?.add(&c), &ctx())?;
    if left != right {
        return Err(format!("additive associativity failed: {}", ctx()));
    }
    let zero = FlexMatrix::zero_matrix(rows, cols);
    if law_err(a.add(&zero), &ctx())? != a {
        return Err(format!("A+O != A: {}", ctx()));
    }
    if law_err(a.add(&b), &ctx())? != law_err(b.add(&a), &ctx())? {
        return Err(format!("additive commutativity failed: {}", ctx()));
    }
    let la = a.scalar_mul(&lam);
    if !la.is_nonnegative() {
        return Err(format!("lambda A not non-negative: {}", ctx()));
    }
    if a.scalar_mul(&lam.mul(&mu)) != a.scalar_mul(&mu).scalar_mul(&lam) {
        return Err(format!("scalar associativity failed: {}", ctx()));
    }
    if a.scalar_mul(&ExternalNumber::one()) != a {
        return Err(format!("1 A != A: {}", ctx()));
    }
    let r = law_err(matrix::scalar_left_distrib(&lam, &a, &b), &ctx())?;
    if r.relation != SetRelation::Equal {
        return Err(format!("lambda(A+B) != lambda A + lambda B: {}", ctx()));
    }
    let r = law_err(matrix::scalar_sum_distrib(&lam, &mu, &a), &ctx())?;
    if r.relation != SetRelation::Equal {
        return Err(format!("(lambda+mu)A != lambda A + mu A: {}", ctx()));
    }
    // products of non-negative matrices associate
    let max_cols = g.cfg.max_cols;
    let inner = g.rng().gen_range(1..=max_cols);
    let outer = g.rng().gen_range(1..=max_cols);
    let p = g.nonnegative_matrix(rows, inner);
    let q = g.nonnegative_matrix(inner, cols);
    let r = g.nonnegative_matrix(cols, outer);
    let report = law_err(matrix::assoc_check(&p, &q, &r), &format!("P={p}, Q={q}, R={r}"))?;
    if report.verdict != matrix::MatrixRelation::Equal {
        return Err(format!(
            "non-negative associativity failed: P={p}, Q={q}, R={r}"
        ));
    }
    Ok(())
}

fn trial_near_inverse(g: &mut Gen) -> std::result::Result<(), String> {
    let n = g.rng().gen_range(1..=3usize);
    let a = g.well_conditioned_matrix(n);
    let report = law_err(inverse::near_inverse(&a), &format!("A={a}"))?;
    if report.hypotheses.all_hold() && !report.verified() {
        return Err(format!("hypotheses hold but inclusions fail for A={a}"));
    }
    Ok(())
}

fn trial_rank_laws(g: &mut Gen) -> std::result::Result<(), String> {
    let rows = g.rng().gen_range(1..=3usize);
    let cols = g.rng().gen_range(1..=3usize);
    let a = g.matrix(rows, cols);
    let opts = RankOptions {
        seed: g.rng().gen(),
        samples: 20,
    };
    // rank_report cross-checks mr(A) = mr(A^T), mr <= row-rank bound, and the
    // strict-rank agreements internally
    law_err(rank::rank_report(&a, &opts), &format!("A={a}"))?;
    Ok(())
}

/// Expression trees for the containment oracle.
#[derive(Clone, Debug)]
pub enum OracleExpr {
    Leaf(ExternalNumber),
    Add(Box<OracleExpr>, Box<OracleExpr>),
    Sub(Box<OracleExpr>, Box<OracleExpr>),
    Mul(Box<OracleExpr>, Box<OracleExpr>),
    Div(Box<OracleExpr>, Box<OracleExpr>),
    Det(FlexMatrix),
}

impl OracleExpr {
    pub fn eval(&self) -> Result<ExternalNumber> {
        match self {
            OracleExpr::Leaf(x) => Ok(x.clone()),
            OracleExpr::Add(a, b) => Ok(a.eval()?.add(&b.eval()?)),
            OracleExpr::Sub(a, b) => Ok(a.eval()?.sub(&b.eval()?)),
            OracleExpr::Mul(a, b) => Ok(a.eval()?.mul(&b.eval()?)),
            OracleExpr::Div(a, b) => a.eval()?.div(&b.eval()?),
            OracleExpr::Det(m) => det::det(m),
        }
    }

    /// Evaluate on one choice of representatives for every leaf.
    fn eval_sampled(&self, s: &mut MemberSampler) -> NSReal {
        match self {
            OracleExpr::Leaf(x) => s.representative(x),
            OracleExpr::Add(a, b) => a.eval_sampled(s) + b.eval_sampled(s),
            OracleExpr::Sub(a, b) => a.eval_sampled(s) - b.eval_sampled(s),
            OracleExpr::Mul(a, b) => a.eval_sampled(s) * b.eval_sampled(s),
            OracleExpr::Div(a, b) => {
                let num = a.eval_sampled(s);
                let den = b.eval_sampled(s);
                num.try_div(&den).expect("divisor sampled from a zeroless set")
            }
            OracleExpr::Det(m) => {
                let rep = s.representative_matrix(m);
                crate::linalg::det(&rep).expect("square")
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            OracleExpr::Leaf(x) => format!("({x})"),
            OracleExpr::Add(a, b) => format!("({} + {})", a.describe(), b.describe()),
            OracleExpr::Sub(a, b) => format!("({} - {})", a.describe(), b.describe()),
            OracleExpr::Mul(a, b) => format!("({} * {})", a.describe(), b.describe()),
            OracleExpr::Div(a, b) => format!("({} / {})", a.describe(), b.describe()),
            OracleExpr::Det(m) => format!("det({m})"),
        }
    }
}

/// A random arithmetic chain or small determinant.
pub fn gen_oracle_expr(g: &mut Gen) -> OracleExpr {
    fn chain(g: &mut Gen, depth: usize) -> OracleExpr {
        if depth == 0 {
            return OracleExpr::Leaf(g.external());
        }
        let left = Box::new(chain(g, depth - 1));
        match g.rng().gen_range(0..4usize) {
            0 => OracleExpr::Add(left, Box::new(OracleExpr::Leaf(g.external()))),
            1 => OracleExpr::Sub(left, Box::new(OracleExpr::Leaf(g.external()))),
            2 => OracleExpr::Mul(left, Box::new(OracleExpr::Leaf(g.external()))),
            _ => OracleExpr::Div(left, Box::new(OracleExpr::Leaf(g.zeroless_external()))),
        }
    }
    if g.rng().gen_ratio(1, 3) {
        let n = g.rng().gen_range(1..=3usize);
        OracleExpr::Det(g.matrix(n, n))
    } else {
        let depth = g.rng().gen_range(1..=4usize);
        chain(g, depth)
    }
}

/// Check that sampled pointwise evaluations land inside the external
/// evaluation. The containment is one-directional: the external value may be
/// strictly larger than the set of pointwise results.
pub fn containment_oracle(
    expr: &OracleExpr,
    samples: u32,
    seed: u64,
) -> std::result::Result<(), String> {
    let value = expr
        .eval()
        .map_err(|e| format!("evaluation failed for {}: {e}", expr.describe()))?;
    let mut sampler = MemberSampler::new(seed);
    for i in 0..samples {
        let point = expr.eval_sampled(&mut sampler);
        if !value.contains(&point) {
            return Err(format!(
                "sample {i}: {point} escapes {value} for {}",
                expr.describe()
            ));
        }
    }
    Ok(())
}

fn trial_containment_oracle(g: &mut Gen) -> std::result::Result<(), String> {
    let expr = gen_oracle_expr(g);
    let seed = g.rng().gen();
    containment_oracle(&expr, 50, seed)
}
