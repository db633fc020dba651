//! Linear dependence of external vectors and the three notions of rank.
//!
//! Dependence asks for real coefficients, not all zero, sending the combined
//! vector into a neutrix vector. Deciding this over all representative choices
//! is a search problem; the verdicts here are tri-state and every claim ships
//! with a re-checkable certificate: a Dependent verdict carries coefficients
//! whose residual verifiably collapses to neutrices, an Independent verdict
//! carries the analysis that rules every representative family out, and
//! Unknown is an honest "the search failed", never a guess.
//!
//! Ranks: the minor rank is the largest order of a zeroless minor; the row
//! rank is the rank of the row-vector set (reported as an interval when some
//! subsets stay undecided); the strict rank is the minor rank realized by an
//! explicit representative matrix, when the search finds one.

use crate::det::{combinations, det, minor, MinorSelector, DET_SIZE_CAP};
use crate::error::{Error, Result};
use crate::external::ExternalNumber;
use crate::linalg::{self, RealMatrix};
use crate::matrix::{FlexMatrix, FlexVector};
use crate::nsreal::NSReal;
use crate::sample::MemberSampler;

#[derive(Clone, Debug)]
pub struct RankOptions {
    pub seed: u64,
    /// Representative matrices sampled before giving up on the strict rank.
    pub samples: u32,
}

impl Default for RankOptions {
    fn default() -> Self {
        RankOptions {
            seed: 0x5eed,
            samples: 200,
        }
    }
}

/// Real coefficients plus the neutrix vector they produce; re-verifiable.
#[derive(Clone, Debug)]
pub struct DependenceWitness {
    pub coefficients: Vec<NSReal>,
    pub residual: FlexVector,
}

impl DependenceWitness {
    /// Recompute the combination and check it is a neutrix vector matching
    /// the stored residual.
    pub fn verify(&self, vectors: &[FlexVector]) -> bool {
        if self.coefficients.len() != vectors.len()
            || self.coefficients.iter().all(|t| t.is_zero())
        {
            return false;
        }
        match combine(vectors, &self.coefficients) {
            Ok(v) => v.is_neutrix_vector() && v == self.residual,
            Err(_) => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceCertificate {
    /// Square coordinate matrix with zeroless determinant.
    NonsingularCoordinateMatrix,
    /// The 2x2 (or 1x1) determinant criterion, which is an equivalence.
    TwoByTwoIff,
    /// A column selection on which every representative submatrix is
    /// non-singular, established by an exact enclosure of the representative
    /// determinants.
    ExhaustiveSmallCase { cols: Vec<usize> },
}

impl IndependenceCertificate {
    pub fn verify(&self, vectors: &[FlexVector]) -> bool {
        let Ok(m) = coordinate_matrix(vectors) else {
            return false;
        };
        match self {
            IndependenceCertificate::NonsingularCoordinateMatrix => {
                m.is_square() && det(&m).map(|d| d.is_zeroless()).unwrap_or(false)
            }
            IndependenceCertificate::TwoByTwoIff => {
                m.is_square()
                    && m.rows() <= 2
                    && det(&m).map(|d| d.is_zeroless()).unwrap_or(false)
            }
            IndependenceCertificate::ExhaustiveSmallCase { cols } => {
                match column_submatrix(&m, cols) {
                    Ok(sub) => rep_det_enclosure(&sub)
                        .map(|e| e.is_zeroless())
                        .unwrap_or(false),
                    Err(_) => false,
                }
            }
        }
    }
}

impl std::fmt::Display for IndependenceCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndependenceCertificate::NonsingularCoordinateMatrix => {
                write!(f, "non-singular coordinate matrix")
            }
            IndependenceCertificate::TwoByTwoIff => {
                write!(f, "2x2 determinant criterion")
            }
            IndependenceCertificate::ExhaustiveSmallCase { cols } => {
                let one_based: Vec<usize> = cols.iter().map(|c| c + 1).collect();
                write!(
                    f,
                    "every representative submatrix on columns {one_based:?} is non-singular"
                )
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct UnknownDiagnostics {
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum DependenceVerdict {
    Dependent(DependenceWitness),
    Independent(IndependenceCertificate),
    Unknown(UnknownDiagnostics),
}

impl DependenceVerdict {
    pub fn is_dependent(&self) -> bool {
        matches!(self, DependenceVerdict::Dependent(_))
    }

    pub fn is_independent(&self) -> bool {
        matches!(self, DependenceVerdict::Independent(_))
    }
}

fn combine(vectors: &[FlexVector], t: &[NSReal]) -> Result<FlexVector> {
    let mut acc = vectors[0].scale_real(&t[0]);
    for (v, c) in vectors.iter().zip(t).skip(1) {
        acc = acc.add(&v.scale_real(c))?;
    }
    Ok(acc)
}

fn coordinate_matrix(vectors: &[FlexVector]) -> Result<FlexMatrix> {
    FlexMatrix::from_rows(
        vectors
            .iter()
            .map(|v| v.entries().to_vec())
            .collect::<Vec<_>>(),
    )
}

fn column_submatrix(m: &FlexMatrix, cols: &[usize]) -> Result<FlexMatrix> {
    if cols.iter().any(|&j| j >= m.cols()) {
        return Err(Error::BadIndex("column selection out of range".into()));
    }
    Ok(FlexMatrix::from_fn(m.rows(), cols.len(), |i, j| {
        m.get(i, cols[j]).clone()
    }))
}

fn check_caps(rows: usize, cols: usize) -> Result<()> {
    let n = rows.max(cols);
    if n > DET_SIZE_CAP {
        return Err(Error::SizeCap { n, cap: DET_SIZE_CAP });
    }
    Ok(())
}

/// An external number that encloses every determinant of a representative
/// matrix: the permutation-sum determinant always does, and when that is
/// neutricial a Laplace expansion with recursively enclosed minors can be
/// sharper. Returns a zeroless enclosure if any candidate finds one.
pub fn rep_det_enclosure(m: &FlexMatrix) -> Result<ExternalNumber> {
    // two refinement levels keep the cost polynomial at the size cap; deeper
    // minors fall back to the permutation sum, which is still an enclosure
    rep_det_enclosure_depth(m, 2)
}

fn rep_det_enclosure_depth(m: &FlexMatrix, depth: usize) -> Result<ExternalNumber> {
    let n = m.require_square()?;
    let d = det(m)?;
    if n == 1 || d.is_zeroless() || depth == 0 {
        return Ok(d);
    }
    let index_minor = |drop_row: usize, drop_col: usize| -> Result<ExternalNumber> {
        let rows: Vec<usize> = (0..n).filter(|&r| r != drop_row).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != drop_col).collect();
        let sel = MinorSelector::new(rows, cols)?;
        rep_det_enclosure_depth(&crate::det::submatrix(m, &sel)?, depth - 1)
    };
    let expansion = |along_col: bool, fixed: usize| -> Result<ExternalNumber> {
        let mut acc: Option<ExternalNumber> = None;
        for k in 0..n {
            let (i, j) = if along_col { (k, fixed) } else { (fixed, k) };
            let mut term = m.get(i, j).mul(&index_minor(i, j)?);
            if (i + j) % 2 == 1 {
                term = term.neg();
            }
            acc = Some(match acc {
                None => term,
                Some(s) => s.add(&term),
            });
        }
        Ok(acc.expect("n >= 1"))
    };
    for fixed in 0..n {
        for along_col in [true, false] {
            let e = expansion(along_col, fixed)?;
            if e.is_zeroless() {
                return Ok(e);
            }
        }
    }
    Ok(d)
}

/// Representatives of a 2x2 external matrix with exactly zero determinant.
/// Exists whenever the Minkowski determinant is neutricial.
pub fn find_zero_det_2x2(m: &FlexMatrix) -> Option<[[NSReal; 2]; 2]> {
    crate::det::representative_det_2x2(m, &NSReal::zero())
}

/// Build a verified witness from candidate coefficients, if they work.
fn witness_from(vectors: &[FlexVector], t: Vec<NSReal>) -> Option<DependenceWitness> {
    if t.iter().all(|c| c.is_zero()) {
        return None;
    }
    let residual = combine(vectors, &t).ok()?;
    if residual.is_neutrix_vector() {
        let w = DependenceWitness {
            coefficients: t,
            residual,
        };
        debug_assert!(w.verify(vectors));
        Some(w)
    } else {
        None
    }
}

/// Kernel of the canonical representative matrix, checked against the
/// external vectors.
fn kernel_witness(vectors: &[FlexVector]) -> Option<DependenceWitness> {
    let centers: RealMatrix = vectors
        .iter()
        .map(|v| v.entries().iter().map(|e| e.rep().clone()).collect())
        .collect();
    for t in linalg::left_kernel(&centers) {
        if let Some(w) = witness_from(vectors, t) {
            return Some(w);
        }
    }
    None
}

/// Try to express one row as an exact combination of the others on a column
/// selection, absorbing the leftover deviations into that row's neutrices.
fn projection_witness(vectors: &[FlexVector]) -> Option<DependenceWitness> {
    let m = vectors.len();
    let n = vectors[0].len();
    if m < 2 || m - 1 > n {
        return None;
    }
    let centers: RealMatrix = vectors
        .iter()
        .map(|v| v.entries().iter().map(|e| e.rep().clone()).collect())
        .collect();
    for r in 0..m {
        let others: Vec<usize> = (0..m).filter(|&i| i != r).collect();
        for cols in combinations(n, m - 1) {
            let a: RealMatrix = others
                .iter()
                .map(|&i| cols.iter().map(|&j| centers[i][j].clone()).collect())
                .collect();
            let b: Vec<NSReal> = cols.iter().map(|&j| centers[r][j].clone()).collect();
            let Ok(s) = linalg::solve_left(&a, &b) else {
                continue;
            };
            let mut t = vec![NSReal::zero(); m];
            t[r] = NSReal::from_int(-1);
            for (k, &i) in others.iter().enumerate() {
                t[i] = s[k].clone();
            }
            if let Some(w) = witness_from(vectors, t) {
                return Some(w);
            }
        }
    }
    None
}

/// The two-row construction: pick a pivot column with a zeroless entry, zero
/// every 2x2 column minor by moving representatives inside their neutrices,
/// and read off proportional rows. Returns the kernel coefficients and the
/// representative rows.
fn pair_witness(u: &FlexVector, w: &FlexVector) -> Option<(Vec<NSReal>, [Vec<NSReal>; 2])> {
    let n = u.len();
    for swap in [false, true] {
        let (top, bot) = if swap { (w, u) } else { (u, w) };
        'pivot: for q in 0..n {
            if !top.get(q).is_zeroless() {
                continue;
            }
            let a_q = top.get(q).rep().clone();
            let b_q = bot.get(q).rep().clone();
            let mut top_row = vec![NSReal::zero(); n];
            let mut bot_row = vec![NSReal::zero(); n];
            top_row[q] = a_q.clone();
            bot_row[q] = b_q.clone();
            for k in 0..n {
                if k == q {
                    continue;
                }
                let pair = FlexMatrix::from_rows(vec![
                    vec![top.get(q).clone(), top.get(k).clone()],
                    vec![bot.get(q).clone(), bot.get(k).clone()],
                ])
                .ok()?;
                let Some(reps) = find_zero_det_2x2(&pair) else {
                    continue 'pivot;
                };
                // patch to the shared pivot-column representatives: keep the
                // top entry and correct the bottom one through the pivot
                let t_det = &a_q * &reps[1][1] - &b_q * &reps[0][1];
                if let Ok(delta) = t_det.try_div(&a_q) {
                    let corrected = &reps[1][1] - &delta;
                    if bot.get(k).contains(&corrected) {
                        top_row[k] = reps[0][1].clone();
                        bot_row[k] = corrected;
                        continue;
                    }
                }
                // or keep the bottom entry and correct the top one
                if !b_q.is_zero() {
                    if let Ok(delta) = t_det.try_div(&b_q) {
                        let corrected_top = &reps[0][1] + &delta;
                        if top.get(k).contains(&corrected_top) {
                            top_row[k] = corrected_top;
                            bot_row[k] = reps[1][1].clone();
                            continue;
                        }
                    }
                }
                continue 'pivot;
            }
            // rows are proportional: b_q * top - a_q * bot = 0
            let coeffs = if swap {
                vec![-a_q.clone(), b_q.clone()]
            } else {
                vec![b_q.clone(), -a_q.clone()]
            };
            let rows = if swap {
                [bot_row, top_row]
            } else {
                [top_row, bot_row]
            };
            return Some((coeffs, rows));
        }
    }
    None
}

/// Decide dependence of a set of external vectors.
pub fn dependence(vectors: &[FlexVector]) -> Result<DependenceVerdict> {
    if vectors.is_empty() {
        return Err(Error::ShapeMismatch("need at least one vector".into()));
    }
    let n = vectors[0].len();
    if vectors.iter().any(|v| v.len() != n) {
        return Err(Error::ShapeMismatch("vectors differ in length".into()));
    }
    let m = vectors.len();
    check_caps(m, n)?;

    // a neutrix vector is dependent on its own
    for (i, v) in vectors.iter().enumerate() {
        if v.is_neutrix_vector() {
            let mut t = vec![NSReal::zero(); m];
            t[i] = NSReal::one();
            if let Some(w) = witness_from(vectors, t) {
                return Ok(DependenceVerdict::Dependent(w));
            }
        }
    }

    if m == 1 {
        // independent iff not a neutrix vector; certified by any zeroless
        // coordinate
        let j = (0..n)
            .find(|&j| vectors[0].get(j).is_zeroless())
            .expect("not a neutrix vector");
        return Ok(DependenceVerdict::Independent(
            IndependenceCertificate::ExhaustiveSmallCase { cols: vec![j] },
        ));
    }

    // square cases up to 2x2 are decided both ways by the determinant
    if m == n && n <= 2 {
        let coord = coordinate_matrix(vectors)?;
        let d = det(&coord)?;
        if d.is_zeroless() {
            return Ok(DependenceVerdict::Independent(
                IndependenceCertificate::TwoByTwoIff,
            ));
        }
        // the 2x2 determinant set is exactly the representative values, so a
        // neutricial determinant yields zero-determinant representatives
        if let Some(reps) = find_zero_det_2x2(&coord) {
            let rm: RealMatrix = reps.iter().map(|r| r.to_vec()).collect();
            for t in linalg::left_kernel(&rm) {
                if let Some(wit) = witness_from(vectors, t) {
                    return Ok(DependenceVerdict::Dependent(wit));
                }
            }
        }
        return Ok(DependenceVerdict::Unknown(UnknownDiagnostics {
            reason: "neutricial 2x2 determinant but no zero representatives found".into(),
        }));
    }

    // representative kernel of the canonical centers; for m > n this always
    // produces a witness
    if let Some(w) = kernel_witness(vectors) {
        return Ok(DependenceVerdict::Dependent(w));
    }

    // independence through representative-determinant enclosures on column
    // selections
    if m <= n {
        let coord = coordinate_matrix(vectors)?;
        for cols in combinations(n, m) {
            let sub = column_submatrix(&coord, &cols)?;
            if det(&sub)?.is_zeroless() {
                return Ok(DependenceVerdict::Independent(if m == n {
                    IndependenceCertificate::NonsingularCoordinateMatrix
                } else {
                    IndependenceCertificate::ExhaustiveSmallCase { cols }
                }));
            }
            if rep_det_enclosure(&sub)?.is_zeroless() {
                return Ok(DependenceVerdict::Independent(
                    IndependenceCertificate::ExhaustiveSmallCase { cols },
                ));
            }
        }
    }

    // perturbation searches: move representatives inside their neutrices
    if let Some(w) = projection_witness(vectors) {
        return Ok(DependenceVerdict::Dependent(w));
    }
    for i in 0..m {
        for j in i + 1..m {
            if let Some((coeffs, _)) = pair_witness(&vectors[i], &vectors[j]) {
                let mut t = vec![NSReal::zero(); m];
                t[i] = coeffs[0].clone();
                t[j] = coeffs[1].clone();
                if let Some(w) = witness_from(vectors, t) {
                    return Ok(DependenceVerdict::Dependent(w));
                }
            }
        }
    }

    Ok(DependenceVerdict::Unknown(UnknownDiagnostics {
        reason: "kernel, enclosure and perturbation searches all inconclusive".into(),
    }))
}

/// Largest order of a zeroless minor, with a witness selector.
pub fn minor_rank(m: &FlexMatrix) -> Result<(usize, Option<MinorSelector>)> {
    check_caps(m.rows(), m.cols())?;
    let max_k = m.rows().min(m.cols());
    for k in (1..=max_k).rev() {
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                let sel = MinorSelector::new(rows.clone(), cols)?;
                if minor(m, &sel)?.is_zeroless() {
                    return Ok((k, Some(sel)));
                }
            }
        }
    }
    Ok((0, None))
}

#[derive(Clone, Debug)]
pub struct RowRankReport {
    pub lo: usize,
    pub hi: usize,
    /// A largest decided-independent subset of row indices, with its
    /// certificate.
    pub independent_witness: Option<(Vec<usize>, IndependenceCertificate)>,
    pub undecided_subsets: usize,
}

impl RowRankReport {
    pub fn exact(&self) -> Option<usize> {
        (self.lo == self.hi).then_some(self.lo)
    }
}

/// Rank of the set of row vectors, as an interval: the lower end is realized
/// by a decided-independent subset, the upper end is forced once every subset
/// of the next size is decided dependent. Undecided subsets widen the
/// interval.
pub fn row_rank(m: &FlexMatrix) -> Result<RowRankReport> {
    check_caps(m.rows(), m.cols())?;
    let rows = m.row_vectors();
    let mcount = rows.len();
    let mut dependent_subsets: Vec<Vec<usize>> = Vec::new();
    let mut lo = 0usize;
    let mut witness = None;
    let mut undecided = 0usize;
    let mut hi = mcount;
    for k in 1..=mcount {
        let mut all_dependent = true;
        for subset in combinations(mcount, k) {
            if dependent_subsets
                .iter()
                .any(|d| d.iter().all(|i| subset.contains(i)))
            {
                continue; // supersets of dependent sets stay dependent
            }
            let vecs: Vec<FlexVector> = subset.iter().map(|&i| rows[i].clone()).collect();
            match dependence(&vecs)? {
                DependenceVerdict::Dependent(_) => dependent_subsets.push(subset),
                DependenceVerdict::Independent(cert) => {
                    all_dependent = false;
                    if k > lo {
                        lo = k;
                        witness = Some((subset, cert));
                    }
                }
                DependenceVerdict::Unknown(_) => {
                    all_dependent = false;
                    undecided += 1;
                }
            }
        }
        if all_dependent {
            hi = k - 1;
            break;
        }
    }
    Ok(RowRankReport {
        lo,
        hi,
        independent_witness: witness,
        undecided_subsets: undecided,
    })
}

#[derive(Clone, Debug)]
pub enum StrictRank {
    /// A representative matrix with classical rank equal to the minor rank.
    Defined {
        value: usize,
        representative: RealMatrix,
    },
    /// Every constructed and sampled representative matrix had larger rank.
    UndefinedEvidence { samples: u32 },
    Unknown,
}

/// Scale one center row across the others through a zeroless pivot, keeping
/// every scaled entry inside its neutrix.
fn try_rank_one_representative(m: &FlexMatrix) -> Option<RealMatrix> {
    let (rows, cols) = (m.rows(), m.cols());
    for p in 0..rows {
        for q in 0..cols {
            if !m.get(p, q).is_zeroless() {
                continue;
            }
            let pivot_row: Vec<NSReal> = (0..cols).map(|j| m.get(p, j).rep().clone()).collect();
            let pivot = pivot_row[q].clone();
            let mut out: RealMatrix = Vec::with_capacity(rows);
            let mut ok = true;
            for i in 0..rows {
                if i == p {
                    out.push(pivot_row.clone());
                    continue;
                }
                let s = match m.get(i, q).rep().try_div(&pivot) {
                    Ok(s) => s,
                    Err(_) => {
                        ok = false;
                        break;
                    }
                };
                let row: Vec<NSReal> = pivot_row.iter().map(|x| &s * x).collect();
                if (0..cols).any(|j| !m.get(i, j).contains(&row[j])) {
                    ok = false;
                    break;
                }
                out.push(row);
            }
            if ok && m.contains_representative(&out) && linalg::rank(&out) == 1 {
                return Some(out);
            }
        }
    }
    // two rows: the pair construction can move both of them
    if rows == 2 {
        if let Some((_, rep_rows)) = pair_witness(&m.row(0), &m.row(1)) {
            let out = vec![rep_rows[0].clone(), rep_rows[1].clone()];
            if m.contains_representative(&out) && linalg::rank(&out) == 1 {
                return Some(out);
            }
        }
    }
    None
}

/// Project the columns (rows) outside a zeroless minor onto exact
/// combinations of the minor's columns (rows), absorbing deviations into the
/// neutrices.
fn try_projection_representative(
    m: &FlexMatrix,
    sel: &MinorSelector,
    target: usize,
) -> Option<RealMatrix> {
    let centers = m.center_representatives();
    let (rows, cols) = (m.rows(), m.cols());
    let combine_cols = |inv: &RealMatrix, b: &[NSReal]| -> Vec<NSReal> {
        (0..target)
            .map(|r| {
                let mut acc = NSReal::zero();
                for (c, bc) in b.iter().enumerate() {
                    acc = &acc + &(&inv[r][c] * bc);
                }
                acc
            })
            .collect()
    };
    // columns version: every column outside the selection becomes an exact
    // combination of the selected ones
    let sub: RealMatrix = sel
        .rows()
        .iter()
        .map(|&i| sel.cols().iter().map(|&j| centers[i][j].clone()).collect())
        .collect();
    if let Ok(inv) = linalg::inverse(&sub) {
        let mut out = centers.clone();
        for k in 0..cols {
            if sel.cols().contains(&k) {
                continue;
            }
            let b: Vec<NSReal> = sel.rows().iter().map(|&i| centers[i][k].clone()).collect();
            let s = combine_cols(&inv, &b);
            for (i, row) in out.iter_mut().enumerate() {
                let mut acc = NSReal::zero();
                for (r, &j) in sel.cols().iter().enumerate() {
                    acc = &acc + &(&centers[i][j] * &s[r]);
                }
                row[k] = acc;
            }
        }
        if m.contains_representative(&out) && linalg::rank(&out) == target {
            return Some(out);
        }
    }
    // rows version, by symmetry
    let sub_t: RealMatrix = sel
        .cols()
        .iter()
        .map(|&j| sel.rows().iter().map(|&i| centers[i][j].clone()).collect())
        .collect();
    let inv = linalg::inverse(&sub_t).ok()?;
    let mut out = centers.clone();
    for k in 0..rows {
        if sel.rows().contains(&k) {
            continue;
        }
        let b: Vec<NSReal> = sel.cols().iter().map(|&j| centers[k][j].clone()).collect();
        let s = combine_cols(&inv, &b);
        for j in 0..cols {
            let mut acc = NSReal::zero();
            for (r, &i) in sel.rows().iter().enumerate() {
                acc = &acc + &(&centers[i][j] * &s[r]);
            }
            out[k][j] = acc;
        }
    }
    if m.contains_representative(&out) && linalg::rank(&out) == target {
        return Some(out);
    }
    None
}

/// Search for a representative matrix realizing the minor rank: the canonical
/// centers, then the rank-one and projection constructions, then seeded
/// sampling. Never claims the strict rank cannot exist.
pub fn strict_rank(m: &FlexMatrix, opts: &RankOptions) -> Result<StrictRank> {
    let (mr, witness) = minor_rank(m)?;
    if mr == 0 {
        // all entries neutricial: the zero representative matrix works
        let zero: RealMatrix = vec![vec![NSReal::zero(); m.cols()]; m.rows()];
        debug_assert!(m.contains_representative(&zero));
        return Ok(StrictRank::Defined {
            value: 0,
            representative: zero,
        });
    }
    let centers = m.center_representatives();
    if linalg::rank(&centers) == mr {
        return Ok(StrictRank::Defined {
            value: mr,
            representative: centers,
        });
    }
    if mr == 1 {
        if let Some(rep) = try_rank_one_representative(m) {
            return Ok(StrictRank::Defined {
                value: 1,
                representative: rep,
            });
        }
    }
    if let Some(sel) = &witness {
        if let Some(rep) = try_projection_representative(m, sel, mr) {
            return Ok(StrictRank::Defined {
                value: mr,
                representative: rep,
            });
        }
    }
    let mut sampler = MemberSampler::new(opts.seed);
    for _ in 0..opts.samples {
        let candidate = sampler.representative_matrix(m);
        if linalg::rank(&candidate) == mr {
            return Ok(StrictRank::Defined {
                value: mr,
                representative: candidate,
            });
        }
    }
    Ok(StrictRank::UndefinedEvidence {
        samples: opts.samples,
    })
}

/// The three ranks bundled, with the relations between them cross-checked.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub minor_rank: usize,
    pub minor_witness: Option<MinorSelector>,
    pub row_rank: RowRankReport,
    pub strict: StrictRank,
}

pub fn rank_report(m: &FlexMatrix, opts: &RankOptions) -> Result<RankReport> {
    let (mr, minor_witness) = minor_rank(m)?;
    let (mr_t, _) = minor_rank(&m.transpose())?;
    if mr != mr_t {
        return Err(Error::LawViolation(format!(
            "minor rank changed under transpose: {mr} vs {mr_t}"
        )));
    }
    let rr = row_rank(m)?;
    if mr > rr.hi {
        return Err(Error::LawViolation(format!(
            "minor rank {mr} exceeds the row-rank upper bound {}",
            rr.hi
        )));
    }
    let strict = strict_rank(m, opts)?;
    if let StrictRank::Defined {
        value,
        representative,
    } = &strict
    {
        if *value != mr {
            return Err(Error::LawViolation(
                "strict rank disagrees with minor rank".into(),
            ));
        }
        if !m.contains_representative(representative) {
            return Err(Error::LawViolation(
                "strict-rank witness is not a representative".into(),
            ));
        }
        // when the strict rank exists, all three notions agree; only enforce
        // it when the row rank is decided
        if let Some(r) = rr.exact() {
            if r != *value {
                return Err(Error::LawViolation(format!(
                    "strict rank {value} disagrees with row rank {r}"
                )));
            }
        }
    }
    Ok(RankReport {
        minor_rank: mr,
        minor_witness,
        row_rank: rr,
        strict,
    })
}
