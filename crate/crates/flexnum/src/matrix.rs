//! Matrices and vectors of external numbers.
//!
//! Addition is entrywise and makes the matrices a commutative regular
//! semigroup: a matrix plus its negation is its neutricial part, not zero.
//! Multiplication is inner-product Minkowski arithmetic with the sum taken
//! left to right, which keeps outputs reproducible bit for bit. Distributivity
//! and associativity only hold under conditions; the check functions here
//! evaluate both sides exactly, classify the relation, and verify every
//! relation the calculus guarantees.

use crate::error::{Error, Result};
use crate::external::{ExternalNumber, SetRelation};
use crate::neutrix::Neutrix;
use crate::nsreal::NSReal;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExternalNumber>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FlexVector(Vec<ExternalNumber>);

impl FlexMatrix {
    pub fn from_rows(rows: Vec<Vec<ExternalNumber>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::ShapeMismatch("matrix must be nonempty".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(FlexMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> ExternalNumber,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        FlexMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                ExternalNumber::one()
            } else {
                ExternalNumber::zero()
            }
        })
    }

    pub fn zero_matrix(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| ExternalNumber::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &ExternalNumber {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExternalNumber) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &ExternalNumber> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> FlexVector {
        FlexVector((0..self.cols).map(|j| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<FlexVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    fn require_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.require_same_shape(other)?;
        Ok(FlexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        FlexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// N(A): the matrix of the entry neutrices.
    pub fn neutricial_part(&self) -> Self {
        FlexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|a| ExternalNumber::from_neutrix(a.neutrix().clone()))
                .collect(),
        }
    }

    pub fn scalar_mul(&self, lambda: &ExternalNumber) -> Self {
        FlexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| lambda.mul(a)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = self.get(i, 0).mul(other.get(0, j));
            for k in 1..self.cols {
                acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_neutricial(&self) -> bool {
        self.data.iter().all(|a| a.is_neutricial())
    }

    pub fn is_zeroless(&self) -> bool {
        self.data.iter().all(|a| a.is_zeroless())
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(|a| a.is_real())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|a| a.is_nonnegative())
    }

    /// Largest entry neutrix under inclusion.
    pub fn neutrix_max(&self) -> Neutrix {
        Neutrix::max_of(self.data.iter().map(|a| a.neutrix()))
    }

    /// Smallest entry neutrix under inclusion.
    pub fn neutrix_min(&self) -> Neutrix {
        self.data
            .iter()
            .map(|a| a.neutrix().clone())
            .reduce(|acc, n| {
                if n.cmp_inclusion(&acc) == std::cmp::Ordering::Less {
                    n
                } else {
                    acc
                }
            })
            .expect("matrix is nonempty")
    }

    /// max |entry| under the external order.
    pub fn abs_max(&self) -> ExternalNumber {
        self.data
            .iter()
            .map(|a| a.abs())
            .reduce(|acc, x| acc.max(&x))
            .expect("matrix is nonempty")
    }

    /// min |entry| under the external order.
    pub fn abs_min(&self) -> ExternalNumber {
        self.data
            .iter()
            .map(|a| a.abs())
            .reduce(|acc, x| acc.min(&x))
            .expect("matrix is nonempty")
    }

    /// Largest relative uncertainty among the entries.
    pub fn rel_uncertainty_max(&self) -> Neutrix {
        self.data
            .iter()
            .map(|a| a.rel_uncertainty())
            .reduce(|acc, r| acc.sum(&r))
            .expect("matrix is nonempty")
    }

    /// Smallest relative uncertainty among the entries.
    pub fn rel_uncertainty_min(&self) -> Neutrix {
        self.data
            .iter()
            .map(|a| a.rel_uncertainty())
            .reduce(|acc, r| {
                if r.cmp_inclusion(&acc) == std::cmp::Ordering::Less {
                    r
                } else {
                    acc
                }
            })
            .expect("matrix is nonempty")
    }

    /// Entrywise set inclusion.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self
                .data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| a.is_subset(b))
    }

    pub fn not_nearly_opposite(&self, other: &Self) -> bool {
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| a.not_nearly_opposite(b))
    }

    /// A representative matrix built from the canonical representatives.
    pub fn center_representatives(&self) -> Vec<Vec<NSReal>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).rep().clone()).collect())
            .collect()
    }

    /// Does the given real matrix lie entrywise inside this one?
    pub fn contains_representative(&self, m: &[Vec<NSReal>]) -> bool {
        m.len() == self.rows
            && m.iter().enumerate().all(|(i, row)| {
                row.len() == self.cols
                    && row.iter().enumerate().all(|(j, x)| self.get(i, j).contains(x))
            })
    }
}

impl FlexVector {
    pub fn new(entries: Vec<ExternalNumber>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ShapeMismatch("vector must be nonempty".into()));
        }
        Ok(FlexVector(entries))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> &ExternalNumber {
        &self.0[i]
    }

    pub fn entries(&self) -> &[ExternalNumber] {
        &self.0
    }

    /// Every coordinate is a neutrix.
    pub fn is_neutrix_vector(&self) -> bool {
        self.0.iter().all(|a| a.is_neutricial())
    }

    /// The largest coordinate (not absolute value) is a neutrix.
    pub fn is_upper_neutrix_vector(&self) -> bool {
        self.0
            .iter()
            .cloned()
            .reduce(|acc, x| acc.max(&x))
            .expect("vector is nonempty")
            .is_neutricial()
    }

    /// e^(k)_A: neutricial coordinates except for a 1 + A_k at position k
    /// (0-based).
    pub fn near_unit(k: usize, neutrices: Vec<Neutrix>) -> Result<Self> {
        if k >= neutrices.len() {
            return Err(Error::BadIndex(format!(
                "unit position {k} out of {}",
                neutrices.len()
            )));
        }
        Ok(FlexVector(
            neutrices
                .into_iter()
                .enumerate()
                .map(|(i, n)| {
                    if i == k {
                        ExternalNumber::new(NSReal::one(), n)
                    } else {
                        ExternalNumber::from_neutrix(n)
                    }
                })
                .collect(),
        ))
    }

    pub fn scale_real(&self, t: &NSReal) -> Self {
        let t = ExternalNumber::from_real(t.clone());
        FlexVector(self.0.iter().map(|a| t.mul(a)).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch(format!(
                "vector {} vs {}",
                self.len(),
                other.len()
            )));
        }
        Ok(FlexVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.add(b))
                .collect(),
        ))
    }
}

/// How two matrices' value sets relate, entrywise.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixRelation {
    Equal,
    LeftInRight,
    RightInLeft,
    Incomparable,
}

pub fn classify(lhs: &FlexMatrix, rhs: &FlexMatrix) -> MatrixRelation {
    match (lhs.is_subset(rhs), rhs.is_subset(lhs)) {
        (true, true) => MatrixRelation::Equal,
        (true, false) => MatrixRelation::LeftInRight,
        (false, true) => MatrixRelation::RightInLeft,
        (false, false) => MatrixRelation::Incomparable,
    }
}

/// Report for a distributivity check: which sufficient conditions hold and
/// how the two sides relate. Construction fails if a guaranteed relation is
/// violated.
#[derive(Clone, Debug)]
pub struct DistribReport {
    pub relation: SetRelation,
    /// The entrywise relative-uncertainty condition of the matrix
    /// distributivity theorem.
    pub uncertainty_condition: bool,
    /// The not-nearly-opposite condition.
    pub not_nearly_opposite: bool,
    /// The coarser aggregate condition for zeroless matrices, phrased through
    /// the extreme neutrices and extreme entries; `None` when an operand has
    /// a neutricial entry.
    pub zeroless_aggregate_condition: Option<bool>,
}

impl DistribReport {
    fn build(
        lhs: &FlexMatrix,
        rhs: &FlexMatrix,
        uncertainty_condition: bool,
        not_nearly_opposite: bool,
        zeroless_aggregate_condition: Option<bool>,
        what: &str,
    ) -> Result<Self> {
        let relation = match classify(lhs, rhs) {
            MatrixRelation::Equal => SetRelation::Equal,
            MatrixRelation::LeftInRight => SetRelation::StrictSubset,
            _ => {
                return Err(Error::LawViolation(format!(
                    "{what}: left side not included in right side"
                )))
            }
        };
        if (uncertainty_condition
            || not_nearly_opposite
            || zeroless_aggregate_condition == Some(true))
            && relation != SetRelation::Equal
        {
            return Err(Error::LawViolation(format!(
                "{what}: condition holds but sides differ"
            )));
        }
        Ok(DistribReport {
            relation,
            uncertainty_condition,
            not_nearly_opposite,
            zeroless_aggregate_condition,
        })
    }
}

/// Smallest entry neutrix over the largest entry: a lower bound for every
/// entry's relative uncertainty of a zeroless matrix.
fn uncertainty_floor(m: &FlexMatrix) -> Option<Neutrix> {
    if !m.is_zeroless() {
        return None;
    }
    let am = m.abs_max();
    Some(
        m.neutrix_min()
            .scalar_mul(&am.rep().inv().expect("zeroless representative")),
    )
}

/// Largest entry neutrix over the smallest entry: an upper bound for every
/// entry's relative uncertainty of a zeroless matrix.
fn uncertainty_ceiling(m: &FlexMatrix) -> Option<Neutrix> {
    if !m.is_zeroless() {
        return None;
    }
    let am = m.abs_min();
    Some(
        m.neutrix_max()
            .scalar_mul(&am.rep().inv().expect("zeroless representative")),
    )
}

fn min_of_entry_max_uncertainty(a: &FlexMatrix, b: &FlexMatrix) -> Neutrix {
    let mut min_max: Option<Neutrix> = None;
    for (x, y) in a.entries().zip(b.entries()) {
        let m = x.rel_uncertainty().sum(&y.rel_uncertainty());
        min_max = Some(match min_max {
            None => m,
            Some(acc) => {
                if m.cmp_inclusion(&acc) == std::cmp::Ordering::Less {
                    m
                } else {
                    acc
                }
            }
        });
    }
    min_max.expect("matrix is nonempty")
}

/// alpha(A + B) versus alpha A + alpha B.
pub fn scalar_left_distrib(
    alpha: &ExternalNumber,
    a: &FlexMatrix,
    b: &FlexMatrix,
) -> Result<DistribReport> {
    let lhs = a.add(b)?.scalar_mul(alpha);
    let rhs = a.scalar_mul(alpha).add(&b.scalar_mul(alpha))?;
    let cond = alpha
        .rel_uncertainty()
        .is_subset(&min_of_entry_max_uncertainty(a, b));
    let aggregate = match (uncertainty_floor(a), uncertainty_floor(b)) {
        (Some(fa), Some(fb)) => Some(alpha.rel_uncertainty().is_subset(&fa.sum(&fb))),
        _ => None,
    };
    DistribReport::build(
        &lhs,
        &rhs,
        cond,
        a.not_nearly_opposite(b),
        aggregate,
        "alpha(A+B) = alpha A + alpha B",
    )
}

/// (alpha + beta)A versus alpha A + beta A.
pub fn scalar_sum_distrib(
    alpha: &ExternalNumber,
    beta: &ExternalNumber,
    a: &FlexMatrix,
) -> Result<DistribReport> {
    let lhs = a.scalar_mul(&alpha.add(beta));
    let rhs = a.scalar_mul(alpha).add(&a.scalar_mul(beta))?;
    let cond = a
        .rel_uncertainty_max()
        .is_subset(&alpha.rel_uncertainty().sum(&beta.rel_uncertainty()));
    let aggregate = uncertainty_ceiling(a).map(|ceil| {
        ceil.is_subset(&alpha.rel_uncertainty().sum(&beta.rel_uncertainty()))
    });
    DistribReport::build(
        &lhs,
        &rhs,
        cond,
        alpha.not_nearly_opposite(beta),
        aggregate,
        "(alpha+beta)A = alpha A + beta A",
    )
}

/// A(B + C) versus AB + AC.
pub fn matrix_distrib(a: &FlexMatrix, b: &FlexMatrix, c: &FlexMatrix) -> Result<DistribReport> {
    let lhs = a.mul(&b.add(c)?)?;
    let rhs = a.mul(b)?.add(&a.mul(c)?)?;
    let cond = a
        .rel_uncertainty_max()
        .is_subset(&min_of_entry_max_uncertainty(b, c));
    let aggregate = match (uncertainty_ceiling(a), uncertainty_floor(b), uncertainty_floor(c)) {
        (Some(ceil), Some(fb), Some(fc)) => Some(ceil.is_subset(&fb.sum(&fc))),
        _ => None,
    };
    DistribReport::build(
        &lhs,
        &rhs,
        cond,
        b.not_nearly_opposite(c),
        aggregate,
        "A(B+C) = AB + AC",
    )
}

/// Report for an associativity check of (AB)C against A(BC).
#[derive(Clone, Debug)]
pub struct AssocReport {
    pub verdict: MatrixRelation,
    /// A is a matrix of reals, which forces (AB)C within A(BC).
    pub left_real: bool,
    /// C is a matrix of reals, which forces A(BC) within (AB)C.
    pub right_real: bool,
    /// B is neutricial, which forces equality.
    pub middle_neutricial: bool,
    /// B and C non-negative, which forces (AB)C within A(BC).
    pub bc_nonnegative: bool,
    /// A and B non-negative, which forces A(BC) within (AB)C.
    pub ab_nonnegative: bool,
    /// All three non-negative, which forces equality.
    pub all_nonnegative: bool,
}

pub fn assoc_check(a: &FlexMatrix, b: &FlexMatrix, c: &FlexMatrix) -> Result<AssocReport> {
    let left = a.mul(b)?.mul(c)?;
    let right = a.mul(&b.mul(c)?)?;
    let verdict = classify(&left, &right);
    let report = AssocReport {
        verdict,
        left_real: a.is_real(),
        right_real: c.is_real(),
        middle_neutricial: b.is_neutricial(),
        bc_nonnegative: b.is_nonnegative() && c.is_nonnegative(),
        ab_nonnegative: a.is_nonnegative() && b.is_nonnegative(),
        all_nonnegative: a.is_nonnegative() && b.is_nonnegative() && c.is_nonnegative(),
    };
    use MatrixRelation::*;
    let left_in_right_ok = matches!(verdict, Equal | LeftInRight);
    let right_in_left_ok = matches!(verdict, Equal | RightInLeft);
    if (report.left_real || report.bc_nonnegative) && !left_in_right_ok {
        return Err(Error::LawViolation("(AB)C not within A(BC)".into()));
    }
    if (report.right_real || report.ab_nonnegative) && !right_in_left_ok {
        return Err(Error::LawViolation("A(BC) not within (AB)C".into()));
    }
    if (report.middle_neutricial
        || (report.left_real && report.right_real)
        || report.all_nonnegative)
        && verdict != Equal
    {
        return Err(Error::LawViolation("(AB)C != A(BC) under a guarantee".into()));
    }
    Ok(report)
}

impl std::fmt::Display for FlexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl std::fmt::Display for FlexVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::neutrix::NeutrixBase;
    use crate::poly::rat_int;

    fn ext(rep: NSReal, neut: Neutrix) -> ExternalNumber {
        ExternalNumber::new(rep, neut)
    }

    fn int(n: i64) -> ExternalNumber {
        ExternalNumber::from_int(n)
    }

    fn o() -> ExternalNumber {
        ExternalNumber::from_neutrix(Neutrix::oslash())
    }

    fn eps_l(n: i64) -> Neutrix {
        Neutrix::scaled(rat_int(n), NeutrixBase::Pound)
    }

    fn m(rows: Vec<Vec<ExternalNumber>>) -> FlexMatrix {
        FlexMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn addition_semigroup_basics() {
        let a = m(vec![
            vec![
                ext(NSReal::one(), Neutrix::oslash()),
                ext(NSReal::zero(), eps_l(1)),
            ],
            vec![int(0), int(2)],
        ]);
        // A + N(A) = A
        assert_eq!(a.add(&a.neutricial_part()).unwrap(), a);
        // A + (-A) = N(A)
        let expected = m(vec![
            vec![o(), ExternalNumber::from_neutrix(eps_l(1))],
            vec![int(0), int(0)],
        ]);
        assert_eq!(a.add(&a.neg()).unwrap(), expected);
        // A + O = A
        let zero = FlexMatrix::zero_matrix(2, 2);
        assert_eq!(a.add(&zero).unwrap(), a);
        // A + (-A + A) = A: the semigroup is regular
        assert_eq!(a.add(&a.neg().add(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn shape_errors() {
        let a = FlexMatrix::zero_matrix(2, 2);
        let b = FlexMatrix::zero_matrix(2, 3);
        assert!(matches!(a.add(&b), Err(Error::ShapeMismatch(_))));
        assert!(matches!(b.mul(&b), Err(Error::ShapeMismatch(_))));
        assert!(b.mul(&b.transpose()).is_ok());
    }

    #[test]
    fn identity_and_scalar_laws() {
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(3)],
            vec![int(0), ext(NSReal::eps(), Neutrix::Zero)],
        ]);
        let i2 = FlexMatrix::identity(2);
        assert_eq!(i2.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&i2).unwrap(), a);
        // 0 A = O and 1 A = A
        assert_eq!(a.scalar_mul(&int(0)), FlexMatrix::zero_matrix(2, 2));
        assert_eq!(a.scalar_mul(&int(1)), a);
    }

    #[test]
    fn transpose_of_product() {
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(2)],
            vec![int(-1), ext(NSReal::zero(), eps_l(1))],
        ]);
        let b = m(vec![
            vec![int(1), int(0)],
            vec![ext(NSReal::eps(), Neutrix::Zero), int(3)],
        ]);
        assert_eq!(
            a.mul(&b).unwrap().transpose(),
            b.transpose().mul(&a.transpose()).unwrap()
        );
    }

    #[test]
    fn aggregates() {
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(-2)],
            vec![o(), ext(NSReal::zero(), eps_l(2))],
        ]);
        assert_eq!(a.neutrix_max(), Neutrix::oslash());
        assert_eq!(a.neutrix_min(), Neutrix::Zero);
        assert_eq!(a.abs_max(), int(2));
        assert_eq!(a.abs_min(), ExternalNumber::from_neutrix(eps_l(2)));
    }

    #[test]
    fn associativity_counterexample() {
        let a = m(vec![vec![int(1), int(1)], vec![int(0), int(0)]]);
        let b = m(vec![vec![int(1), int(0)], vec![int(-1), int(0)]]);
        let c = m(vec![vec![o()], vec![o()]]);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left, m(vec![vec![int(0)], vec![int(0)]]));
        assert_eq!(right, m(vec![vec![o()], vec![int(0)]]));
        let report = assoc_check(&a, &b, &c).unwrap();
        assert_eq!(report.verdict, MatrixRelation::LeftInRight);
    }

    #[test]
    fn neutricial_middle_associates() {
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(-2)],
            vec![int(3), ext(NSReal::eps(), Neutrix::Zero)],
        ]);
        let b = m(vec![
            vec![o(), ExternalNumber::from_neutrix(eps_l(1))],
            vec![ExternalNumber::from_neutrix(Neutrix::pound()), o()],
        ]);
        let c = m(vec![
            vec![int(2), ext(NSReal::one(), Neutrix::oslash())],
            vec![int(-1), int(4)],
        ]);
        let report = assoc_check(&a, &b, &c).unwrap();
        assert_eq!(report.verdict, MatrixRelation::Equal);
        assert!(report.middle_neutricial);
    }

    #[test]
    fn nonnegative_triple_associates() {
        let a = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(2)],
            vec![o(), int(1)],
        ]);
        let report = assoc_check(&a, &a, &a).unwrap();
        assert_eq!(report.verdict, MatrixRelation::Equal);
        assert!(report.all_nonnegative);
    }

    #[test]
    fn distributivity_reports() {
        // non-negative operands: always equal
        let a = m(vec![vec![int(1), int(2)], vec![o(), int(3)]]);
        let b = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(0)],
            vec![int(2), o()],
        ]);
        let r = scalar_left_distrib(&int(3), &a, &b).unwrap();
        assert_eq!(r.relation, SetRelation::Equal);
        assert!(r.not_nearly_opposite);

        // opposite scalars on a matrix with a genuine neutrix: strict subset
        let u = m(vec![
            vec![ext(NSReal::one(), Neutrix::oslash()), int(1)],
            vec![int(1), int(1)],
        ]);
        let r = scalar_sum_distrib(&int(1), &int(-1), &u).unwrap();
        assert_eq!(r.relation, SetRelation::StrictSubset);
        assert!(!r.uncertainty_condition && !r.not_nearly_opposite);
    }

    #[test]
    fn vector_predicates() {
        let v = FlexVector::new(vec![o(), ExternalNumber::from_neutrix(eps_l(1))]).unwrap();
        assert!(v.is_neutrix_vector());
        let nu = FlexVector::near_unit(
            1,
            vec![Neutrix::oslash(), Neutrix::oslash(), Neutrix::oslash()],
        )
        .unwrap();
        assert_eq!(nu.get(1), &ext(NSReal::one(), Neutrix::oslash()));
        assert!(!nu.is_neutrix_vector());
        // upper neutrix vector: max entry is a neutrix
        let eps = NSReal::eps;
        let unv = FlexVector::new(vec![
            ext(eps(), Neutrix::scaled(rat_int(2), NeutrixBase::Oslash)),
            o(),
            ext(eps(), Neutrix::scaled(rat_int(2), NeutrixBase::Pound)),
        ])
        .unwrap();
        assert!(unv.is_upper_neutrix_vector());
        assert!(!unv.is_neutrix_vector());
        let not_unv = FlexVector::new(vec![
            ext(
                NSReal::one(),
                Neutrix::scaled(rat_int(2), NeutrixBase::Oslash),
            ),
            o(),
        ])
        .unwrap();
        assert!(!not_unv.is_upper_neutrix_vector());
    }
}
