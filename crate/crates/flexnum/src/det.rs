//! Determinants of external-number matrices: the signed permutation sum,
//! minors and cofactors, Laplace expansion with its inclusion semantics, the
//! effect of row operations, and the bounds available for reduced and
//! triangular matrices.
//!
//! The permutation sum is evaluated exactly, in lexicographic permutation
//! order with the outer sum taken left to right. Laplace expansion and the
//! row-operation formulas only approximate the determinant from inside; every
//! function here that knows a guaranteed inclusion or a condition for equality
//! verifies it and fails loudly when the guarantee breaks.

use crate::error::{Error, Result};
use crate::external::{ExternalNumber, SetRelation};
use crate::matrix::FlexMatrix;
use crate::neutrix::Neutrix;

/// Cap on the order of a permutation-sum determinant; n! growth makes larger
/// orders pointless at desk scale.
pub const DET_SIZE_CAP: usize = 6;

/// A k x k minor: sorted row and column index sets of equal cardinality
/// (0-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinorSelector {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorSelector {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        cols.sort_unstable();
        rows.dedup();
        cols.dedup();
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::BadIndex(
                "minor needs equally many distinct rows and columns".into(),
            ));
        }
        Ok(MinorSelector { rows, cols })
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn check_bounds(&self, m: &FlexMatrix) -> Result<()> {
        if self.rows.iter().any(|&i| i >= m.rows()) || self.cols.iter().any(|&j| j >= m.cols()) {
            return Err(Error::BadIndex(format!(
                "minor {:?}x{:?} out of bounds for {}x{}",
                self.rows,
                self.cols,
                m.rows(),
                m.cols()
            )));
        }
        Ok(())
    }
}

/// All permutations of 0..n in lexicographic order, with their signs.
pub(crate) fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<(Vec<usize>, i8)>,
    ) {
        if current.len() == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if current[i] > current[j] {
                        inversions += 1;
                    }
                }
            }
            out.push((current.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

fn require_cap(n: usize) -> Result<()> {
    if n > DET_SIZE_CAP {
        Err(Error::SizeCap { n, cap: DET_SIZE_CAP })
    } else {
        Ok(())
    }
}

/// The determinant as the exact Minkowski evaluation of the signed
/// permutation sum.
pub fn det(m: &FlexMatrix) -> Result<ExternalNumber> {
    let n = m.require_square()?;
    require_cap(n)?;
    let mut acc: Option<ExternalNumber> = None;
    for (sigma, sign) in permutations(n) {
        let mut term = m.get(0, sigma[0]).clone();
        for (i, &j) in sigma.iter().enumerate().skip(1) {
            term = term.mul(m.get(i, j));
        }
        if sign < 0 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term),
        });
    }
    Ok(acc.expect("n >= 1"))
}

/// Determinant of a real (NSReal-entried) matrix, through the same route.
pub fn submatrix(m: &FlexMatrix, sel: &MinorSelector) -> Result<FlexMatrix> {
    sel.check_bounds(m)?;
    Ok(FlexMatrix::from_fn(sel.order(), sel.order(), |i, j| {
        m.get(sel.rows[i], sel.cols[j]).clone()
    }))
}

/// Determinant of the selected minor.
pub fn minor(m: &FlexMatrix, sel: &MinorSelector) -> Result<ExternalNumber> {
    det(&submatrix(m, sel)?)
}

/// The (i, j) first minor: delete row i and column j (0-based).
pub fn first_minor(m: &FlexMatrix, i: usize, j: usize) -> Result<ExternalNumber> {
    let n = m.require_square()?;
    if i >= n || j >= n {
        return Err(Error::BadIndex(format!("({i},{j}) out of {n}x{n}")));
    }
    if n == 1 {
        return Ok(ExternalNumber::one());
    }
    let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
    minor(m, &MinorSelector::new(rows, cols)?)
}

/// (-1)^(i+j) times the (i, j) first minor.
pub fn cofactor(m: &FlexMatrix, i: usize, j: usize) -> Result<ExternalNumber> {
    let mi = first_minor(m, i, j)?;
    Ok(if (i + j).is_multiple_of(2) { mi } else { mi.neg() })
}

pub fn cofactor_matrix(m: &FlexMatrix) -> Result<FlexMatrix> {
    let n = m.require_square()?;
    require_cap(n)?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            row.push(cofactor(m, i, j)?);
        }
        rows.push(row);
    }
    FlexMatrix::from_rows(rows)
}

/// Laplace expansion along a column, with its relation to the determinant.
#[derive(Clone, Debug)]
pub struct LaplaceReport {
    pub expansion: ExternalNumber,
    pub det: ExternalNumber,
    /// Expansion compared with the determinant; always at least an inclusion.
    pub relation: SetRelation,
    /// Uncertainty condition on the chosen column under which equality is
    /// guaranteed: max R over the column at most min R over the rest.
    pub equality_condition: bool,
}

/// Expand along column `j` (0-based). The expansion is always included in the
/// determinant; equality is guaranteed when the column's relative
/// uncertainties are dominated by everyone else's.
pub fn laplace(m: &FlexMatrix, j: usize) -> Result<LaplaceReport> {
    let n = m.require_square()?;
    require_cap(n)?;
    if j >= n {
        return Err(Error::BadIndex(format!("column {j} out of {n}")));
    }
    let mut acc: Option<ExternalNumber> = None;
    for i in 0..n {
        let term = m.get(i, j).mul(&cofactor(m, i, j)?);
        acc = Some(match acc {
            None => term,
            Some(s) => s.add(&term),
        });
    }
    let expansion = acc.expect("n >= 1");
    let d = det(m)?;
    let relation = expansion.relation_to(&d).ok_or_else(|| {
        Error::LawViolation(format!(
            "laplace expansion {expansion} not included in det {d}"
        ))
    })?;
    let max_col = (0..n)
        .map(|i| m.get(i, j).rel_uncertainty())
        .reduce(|a, b| a.sum(&b))
        .expect("n >= 1");
    let min_rest = (0..n)
        .flat_map(|i| (0..n).filter(move |&c| c != j).map(move |c| (i, c)))
        .map(|(i, c)| m.get(i, c).rel_uncertainty())
        .reduce(|a, b| {
            if b.cmp_inclusion(&a) == std::cmp::Ordering::Less {
                b
            } else {
                a
            }
        });
    let equality_condition = match min_rest {
        Some(min_rest) => max_col.is_subset(&min_rest),
        None => true, // 1x1: expansion is the determinant
    };
    if equality_condition && relation != SetRelation::Equal {
        return Err(Error::LawViolation(
            "laplace equality condition holds but expansion is strict".into(),
        ));
    }
    Ok(LaplaceReport {
        expansion,
        det: d,
        relation,
        equality_condition,
    })
}

/// Splitting one row as a sum: det(A) against det(B) + det(C).
#[derive(Clone, Debug)]
pub struct RowSumReport {
    pub combined: FlexMatrix,
    pub det_combined: ExternalNumber,
    pub det_sum: ExternalNumber,
    pub relation: SetRelation,
    /// Uncertainty condition under which equality is guaranteed.
    pub equality_condition: bool,
    /// Row-k entries of B and C pairwise not nearly opposite.
    pub not_nearly_opposite: bool,
}

/// B and C agree outside row `k`; A is built by adding their k-th rows.
/// det(A) is always included in det(B) + det(C).
pub fn det_row_sum(b: &FlexMatrix, c: &FlexMatrix, k: usize) -> Result<RowSumReport> {
    let n = b.require_square()?;
    require_cap(n)?;
    if c.rows() != n || c.cols() != n {
        return Err(Error::ShapeMismatch("operands differ in shape".into()));
    }
    if k >= n {
        return Err(Error::BadIndex(format!("row {k} out of {n}")));
    }
    for i in 0..n {
        for j in 0..n {
            if i != k && b.get(i, j) != c.get(i, j) {
                return Err(Error::ConditionUnmet(format!(
                    "operands differ outside row {k} at ({i},{j})"
                )));
            }
        }
    }
    let combined = FlexMatrix::from_fn(n, n, |i, j| {
        if i == k {
            b.get(i, j).add(c.get(i, j))
        } else {
            b.get(i, j).clone()
        }
    });
    let det_combined = det(&combined)?;
    let det_sum = det(b)?.add(&det(c)?);
    let relation = det_combined.relation_to(&det_sum).ok_or_else(|| {
        Error::LawViolation(format!(
            "det of combined matrix {det_combined} not included in {det_sum}"
        ))
    })?;
    // max R over the fixed rows at most max(min R over B's row k, min R over
    // C's row k)
    let max_rest = (0..n)
        .filter(|&i| i != k)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| combined.get(i, j).rel_uncertainty())
        .reduce(|a, b| a.sum(&b));
    let min_row = |m: &FlexMatrix| {
        (0..n)
            .map(|j| m.get(k, j).rel_uncertainty())
            .reduce(|a, b| {
                if b.cmp_inclusion(&a) == std::cmp::Ordering::Less {
                    b
                } else {
                    a
                }
            })
            .expect("n >= 1")
    };
    let equality_condition = match max_rest {
        Some(max_rest) => max_rest.is_subset(&min_row(b).sum(&min_row(c))),
        None => true, // 1x1 determinants add exactly
    };
    let not_nearly_opposite =
        (0..n).all(|j| b.get(k, j).not_nearly_opposite(c.get(k, j)));
    if (equality_condition || not_nearly_opposite) && relation != SetRelation::Equal {
        return Err(Error::LawViolation(
            "row-sum equality condition holds but determinants differ".into(),
        ));
    }
    Ok(RowSumReport {
        combined,
        det_combined,
        det_sum,
        relation,
        equality_condition,
        not_nearly_opposite,
    })
}

/// Scaling one row: lambda det(A) against det(B) where B has row k scaled.
#[derive(Clone, Debug)]
pub struct RowScaleReport {
    pub scaled: FlexMatrix,
    pub det_scaled: ExternalNumber,
    pub lambda_det: ExternalNumber,
    pub relation: SetRelation,
    /// R(lambda) at most every entry's R, under which equality is guaranteed.
    pub equality_condition: bool,
}

pub fn det_row_scale(m: &FlexMatrix, k: usize, lambda: &ExternalNumber) -> Result<RowScaleReport> {
    let n = m.require_square()?;
    require_cap(n)?;
    if k >= n {
        return Err(Error::BadIndex(format!("row {k} out of {n}")));
    }
    let scaled = FlexMatrix::from_fn(n, n, |i, j| {
        if i == k {
            lambda.mul(m.get(i, j))
        } else {
            m.get(i, j).clone()
        }
    });
    let det_scaled = det(&scaled)?;
    let lambda_det = lambda.mul(&det(m)?);
    let relation = lambda_det.relation_to(&det_scaled).ok_or_else(|| {
        Error::LawViolation(format!(
            "lambda det {lambda_det} not included in det of scaled matrix {det_scaled}"
        ))
    })?;
    let equality_condition = lambda
        .rel_uncertainty()
        .is_subset(&m.rel_uncertainty_min());
    if equality_condition && relation != SetRelation::Equal {
        return Err(Error::LawViolation(
            "row-scale equality condition holds but determinants differ".into(),
        ));
    }
    Ok(RowScaleReport {
        scaled,
        det_scaled,
        lambda_det,
        relation,
        equality_condition,
    })
}

/// Adding a multiple of one row to another, with the blow-up bound.
#[derive(Clone, Debug)]
pub struct RowAddReport {
    pub result: FlexMatrix,
    pub det_before: ExternalNumber,
    pub det_after: ExternalNumber,
    /// det(A) + lambda abs_max^(n-1) N_max, which always contains det_after.
    pub bound: ExternalNumber,
    /// The perturbation term lands inside N(det(A)), so the determinant is
    /// unchanged.
    pub equality_condition: bool,
    pub unchanged: bool,
}

/// Add `lambda` times row `p` to row `k`. Requires R(lambda) at most every
/// entry's R and a zeroless max-entry, the regime in which the bound
/// det(A') within det(A) + lambda alpha_max^(n-1) A_max is available.
pub fn add_multiple_row(
    m: &FlexMatrix,
    p: usize,
    k: usize,
    lambda: &ExternalNumber,
) -> Result<RowAddReport> {
    let n = m.require_square()?;
    require_cap(n)?;
    if p >= n || k >= n || p == k {
        return Err(Error::BadIndex(format!(
            "source row {p}, target row {k} invalid for {n}x{n}"
        )));
    }
    // Real multipliers always qualify; otherwise R(lambda) must be dominated
    // by every entry's relative uncertainty.
    if !lambda.is_real()
        && !lambda
            .rel_uncertainty()
            .is_subset(&m.rel_uncertainty_min())
    {
        return Err(Error::ConditionUnmet(
            "R(lambda) exceeds the relative uncertainty of some entry".into(),
        ));
    }
    let abs_max = m.abs_max();
    if !abs_max.is_zeroless() {
        return Err(Error::ConditionUnmet("max |entry| is not zeroless".into()));
    }
    let result = FlexMatrix::from_fn(n, n, |i, j| {
        if i == k {
            m.get(i, j).add(&lambda.mul(m.get(p, j)))
        } else {
            m.get(i, j).clone()
        }
    });
    let det_before = det(m)?;
    let det_after = det(&result)?;
    let spill = lambda
        .mul(&abs_max.powi(n as u32 - 1))
        .mul(&ExternalNumber::from_neutrix(m.neutrix_max()));
    let bound = det_before.add(&spill);
    if !det_after.is_subset(&bound) {
        return Err(Error::LawViolation(format!(
            "det after row operation {det_after} escapes bound {bound}"
        )));
    }
    let equality_condition = spill
        .is_subset(&ExternalNumber::from_neutrix(det_before.neutrix().clone()));
    let unchanged = det_after == det_before;
    if equality_condition && !unchanged {
        return Err(Error::LawViolation(
            "row-add equality condition holds but determinant changed".into(),
        ));
    }
    Ok(RowAddReport {
        result,
        det_before,
        det_after,
        bound,
        equality_condition,
        unchanged,
    })
}

/// |max entry| = 1 + A with A inside o.
pub fn is_reduced(m: &FlexMatrix) -> bool {
    let am = m.abs_max();
    am.neutrix().is_subset(&Neutrix::oslash())
        && am
            .neutrix()
            .contains(&(am.rep() - &crate::nsreal::NSReal::one()))
}

/// Bounds available for reduced matrices: every minor strictly below L, every
/// minor's neutrix within the matrix's largest neutrix, and (for zeroless
/// determinants) a dominant first minor in each column.
#[derive(Clone, Debug)]
pub struct ReducedReport {
    pub det: ExternalNumber,
    pub minors_checked: usize,
    /// For each column, some first minor exceeds o det(A). Only meaningful
    /// when the determinant is zeroless.
    pub dominant_minor_per_column: Option<Vec<usize>>,
}

pub fn reduced_bounds(m: &FlexMatrix) -> Result<ReducedReport> {
    let n = m.require_square()?;
    require_cap(n)?;
    if !is_reduced(m) {
        return Err(Error::NotReduced);
    }
    let pound = ExternalNumber::from_neutrix(Neutrix::pound());
    let n_max = m.neutrix_max();
    let mut checked = 0;
    for k in 1..=n {
        for rows in combinations(n, k) {
            for cols in combinations(n, k) {
                let sel = MinorSelector::new(rows.clone(), cols)?;
                let value = minor(m, &sel)?;
                if !value.is_strict_subset(&pound) {
                    return Err(Error::LawViolation(format!(
                        "minor {value} of a reduced matrix is not strictly below L"
                    )));
                }
                if !value.neutrix().is_subset(&n_max) {
                    return Err(Error::LawViolation(format!(
                        "minor neutrix {} exceeds the matrix neutrix {n_max}",
                        value.neutrix()
                    )));
                }
                checked += 1;
            }
        }
    }
    let d = det(m)?;
    let dominant = if d.is_zeroless() {
        let odet = ExternalNumber::from_neutrix(Neutrix::oslash()).mul(&d);
        let mut per_column = Vec::with_capacity(n);
        for j in 0..n {
            let i = (0..n)
                .find(|&i| {
                    let mi = first_minor(m, i, j).expect("bounds checked");
                    odet.lt(&mi.abs())
                })
                .ok_or_else(|| {
                    Error::LawViolation(format!(
                        "no first minor in column {j} exceeds o det(A)"
                    ))
                })?;
            per_column.push(i);
        }
        Some(per_column)
    } else {
        None
    };
    Ok(ReducedReport {
        det: d,
        minors_checked: checked,
        dominant_minor_per_column: dominant,
    })
}

/// Representatives of a 2x2 matrix whose classical determinant equals the
/// given target exactly. For n = 2 the Minkowski determinant is precisely the
/// set of representative determinants, so this succeeds for every target the
/// determinant contains: the search adjusts entries along the dominant
/// neutrix term and verifies all memberships exactly.
pub fn representative_det_2x2(
    m: &FlexMatrix,
    target: &crate::nsreal::NSReal,
) -> Option<[[crate::nsreal::NSReal; 2]; 2]> {
    use crate::neutrix::Neutrix;
    use crate::nsreal::NSReal;
    use crate::poly::{rat_int, Rat};
    assert!(m.rows() == 2 && m.cols() == 2);
    let entry = |i: usize, j: usize| m.get(i, j);
    let center = |i: usize, j: usize| entry(i, j).rep().clone();
    let verify = |c: &[[NSReal; 2]; 2]| -> bool {
        (0..2).all(|i| (0..2).all(|j| entry(i, j).contains(&c[i][j])))
            && (&c[0][0] * &c[1][1] - &c[1][0] * &c[0][1]) == *target
    };
    let base = [
        [center(0, 0), center(0, 1)],
        [center(1, 0), center(1, 1)],
    ];
    if verify(&base) {
        return Some(base);
    }
    // adjust one entry, solving a*d - c*b = target for it through the other
    // three; the required value over each entry's cofactor partner
    let diag_target = target + &(&center(1, 0) * &center(0, 1)); // a*d
    let off_target = &(&center(0, 0) * &center(1, 1)) - target; // c*b
    type Adjustment = (usize, usize, (usize, usize));
    let adjustments: [Adjustment; 4] = [
        (0, 0, (1, 1)),
        (1, 1, (0, 0)),
        (0, 1, (1, 0)),
        (1, 0, (0, 1)),
    ];
    for (i, j, partner) in adjustments {
        let den = center(partner.0, partner.1);
        if den.is_zero() {
            continue;
        }
        let numerator = if i == j {
            diag_target.clone()
        } else {
            off_target.clone()
        };
        let Ok(value) = numerator.try_div(&den) else {
            continue;
        };
        let mut c = base.clone();
        c[i][j] = value;
        if verify(&c) {
            return Some(c);
        }
    }
    // both entries of one diagonal neutricial: split the required product
    // p = x*y across the two neutrices
    let split = |p: &NSReal, na: &Neutrix, nb: &Neutrix| -> Option<(NSReal, NSReal)> {
        if p.is_zero() {
            return Some((NSReal::zero(), NSReal::zero()));
        }
        let vp = p.valuation()?;
        match (na, nb) {
            (Neutrix::Line, Neutrix::Line) => Some((p.clone(), NSReal::one())),
            // the line absorbs whatever the scaled side leaves over
            (Neutrix::Line, Neutrix::Mono { exp, .. }) => {
                let y = NSReal::monomial(Rat::from_integer(1.into()), exp + rat_int(1));
                Some((p.try_div(&y).ok()?, y))
            }
            (Neutrix::Mono { exp, .. }, Neutrix::Line) => {
                let x = NSReal::monomial(Rat::from_integer(1.into()), exp + rat_int(1));
                Some((x.clone(), p.try_div(&x).ok()?))
            }
            (Neutrix::Mono { exp: qa, .. }, Neutrix::Mono { exp: qb, .. }) => {
                // split the valuation at the midpoint between the two scales,
                // falling back to an all-on-one-side split at the boundary
                let t = qb + (&vp - qa - qb) / rat_int(2);
                let x = p * NSReal::monomial(Rat::from_integer(1.into()), -t.clone());
                let y = NSReal::monomial(Rat::from_integer(1.into()), t);
                [(x, y), (p.clone(), NSReal::one()), (NSReal::one(), p.clone())]
                    .into_iter()
                    .find(|(x, y)| na.contains(x) && nb.contains(y))
            }
            // a trivial factor only produces zero
            _ => None,
        }
    };
    if entry(0, 0).is_neutricial() && entry(1, 1).is_neutricial() {
        if let Some((x, y)) = split(&diag_target, entry(0, 0).neutrix(), entry(1, 1).neutrix()) {
            let c = [[x, center(0, 1)], [center(1, 0), y]];
            if verify(&c) {
                return Some(c);
            }
        }
    }
    if entry(0, 1).is_neutricial() && entry(1, 0).is_neutricial() {
        if let Some((x, y)) = split(&off_target, entry(0, 1).neutrix(), entry(1, 0).neutrix()) {
            let c = [[center(0, 0), x], [y, center(1, 1)]];
            if verify(&c) {
                return Some(c);
            }
        }
    }
    None
}

/// k-subsets of 0..n in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Upper or lower triangular in the flexible sense: the entries on one side
/// of the diagonal are neutrices.
pub fn is_triangular(m: &FlexMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.rows();
    let lower_neutricial = (0..n)
        .all(|i| (0..i).all(|j| m.get(i, j).is_neutricial()));
    let upper_neutricial = (0..n)
        .all(|i| (i + 1..n).all(|j| m.get(i, j).is_neutricial()));
    lower_neutricial || upper_neutricial
}

#[derive(Clone, Debug)]
pub struct TriangularReport {
    pub det: ExternalNumber,
    pub diagonal_product: ExternalNumber,
    /// diagonal product + abs_max^(n-1) N_max, always containing det.
    pub bound: ExternalNumber,
    pub equality_condition: bool,
    pub equal: bool,
}

/// Determinant of a triangular matrix against the product of its diagonal,
/// with the neutrix spill bound.
pub fn triangular_det(m: &FlexMatrix) -> Result<TriangularReport> {
    let n = m.require_square()?;
    require_cap(n)?;
    if !is_triangular(m) {
        return Err(Error::NotTriangular);
    }
    let abs_max = m.abs_max();
    if !abs_max.is_zeroless() {
        return Err(Error::ConditionUnmet("max |entry| is not zeroless".into()));
    }
    let d = det(m)?;
    let mut diag = m.get(0, 0).clone();
    for i in 1..n {
        diag = diag.mul(m.get(i, i));
    }
    let spill = abs_max
        .powi(n as u32 - 1)
        .mul(&ExternalNumber::from_neutrix(m.neutrix_max()));
    let bound = diag.add(&spill);
    if !d.is_subset(&bound) {
        return Err(Error::LawViolation(format!(
            "triangular det {d} escapes bound {bound}"
        )));
    }
    let equality_condition =
        spill.is_subset(&ExternalNumber::from_neutrix(diag.neutrix().clone()));
    let equal = d == diag;
    if equality_condition && !equal {
        return Err(Error::LawViolation(
            "triangular equality condition holds but determinant differs".into(),
        ));
    }
    Ok(TriangularReport {
        det: d,
        diagonal_product: diag,
        bound,
        equality_condition,
        equal,
    })
}
