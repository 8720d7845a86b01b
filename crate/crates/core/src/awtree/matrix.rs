//! The surgery matrix of a weighted forest and its exact invariants.

use super::{AWTree, TreeError};

/// Largest size accepted by the factorial signature enumeration.
pub const SIGNATURE_LIMIT: usize = 9;
/// Largest size accepted by the inclusion-exclusion permanent.
pub const PERMANENT_LIMIT: usize = 30;

/// Square integer matrix attached to a vertex ordering of a forest:
/// diagonal sigma(i)a(i), entry (i,j) equal to b(i) when {i,j} is an edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMatrix {
    pub size: usize,
    /// Row-major entries, each in {-1, 0, 1}.
    pub entries: Vec<i64>,
    /// ordering[k] is the vertex placed at row/column k.
    pub ordering: Vec<usize>,
}

impl SignedMatrix {
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.at(i, j)).collect())
            .collect()
    }
}

/// Builds the matrix for the given vertex ordering (identity when `None`).
pub fn build_matrix(t: &AWTree, ordering: Option<Vec<usize>>) -> SignedMatrix {
    let n = t.n_vertices();
    let ordering = ordering.unwrap_or_else(|| (0..n).collect());
    assert_eq!(ordering.len(), n);
    let mut pos = vec![usize::MAX; n];
    for (k, &v) in ordering.iter().enumerate() {
        pos[v] = k;
    }
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        let (a, _) = t.weight(v).fraction();
        entries[pos[v] * n + pos[v]] = t.sign(v).value() * a;
    }
    for &(u, v) in t.edges() {
        let (_, bu) = t.weight(u).fraction();
        let (_, bv) = t.weight(v).fraction();
        entries[pos[u] * n + pos[v]] = bu;
        entries[pos[v] * n + pos[u]] = bv;
    }
    SignedMatrix {
        size: n,
        entries,
        ordering,
    }
}

/// Exact determinant (empty matrix gives 1).
pub fn determinant(m: &SignedMatrix) -> i64 {
    crate::diagram::int_determinant(&m.rows())
}

/// Permanent of the entrywise absolute value, by Gray-coded
/// inclusion-exclusion over column subsets.
pub fn permanent_abs(m: &SignedMatrix) -> Result<u64, TreeError> {
    let n = m.size;
    if n > PERMANENT_LIMIT {
        return Err(TreeError::SizeLimit(n, PERMANENT_LIMIT));
    }
    if n == 0 {
        return Ok(1);
    }
    let abs: Vec<i128> = m.entries.iter().map(|&x| (x.abs()) as i128).collect();
    // Rows with a nonzero entry in each column; Gray-code steps touch only
    // these.
    let rows_in_col: Vec<Vec<usize>> = (0..n)
        .map(|j| (0..n).filter(|&i| abs[i * n + j] != 0).collect())
        .collect();
    // Ryser: perm = (-1)^n sum_{S subset of columns} (-1)^{|S|} prod_i row_i(S).
    // The product over rows is maintained incrementally as (number of zero
    // row sums, product of the nonzero row sums).
    let mut row_sums = vec![0i128; n];
    let mut zero_rows = n;
    let mut nonzero_product = 1i128;
    let mut total = 0i128;
    let mut gray = 0u64;
    for k in 1u64..(1 << n) {
        let next_gray = k ^ (k >> 1);
        let changed = (gray ^ next_gray).trailing_zeros() as usize;
        let added = next_gray & (1 << changed) != 0;
        for &i in &rows_in_col[changed] {
            let old = row_sums[i];
            let x = abs[i * n + changed];
            let new = if added { old + x } else { old - x };
            row_sums[i] = new;
            if old == 0 {
                zero_rows -= 1;
            } else {
                nonzero_product /= old;
            }
            if new == 0 {
                zero_rows += 1;
            } else {
                nonzero_product = nonzero_product
                    .checked_mul(new)
                    .expect("permanent intermediate exceeds 128 bits");
            }
        }
        gray = next_gray;
        if zero_rows == 0 {
            let bits = next_gray.count_ones() as usize;
            if (n - bits).is_multiple_of(2) {
                total += nonzero_product;
            } else {
                total -= nonzero_product;
            }
        }
    }
    Ok(u64::try_from(total).expect("permanent of a nonnegative matrix"))
}

/// Counts of the determinant expansion terms by signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionSignatures {
    pub positives: u64,
    pub negatives: u64,
    pub zeros: u64,
}

/// Classifies all n! expansion terms sgn(p) * prod_i m[i][p(i)]. The
/// nonzero terms are enumerated by depth-first search over the support;
/// zero terms are counted by difference.
pub fn expansion_signatures(m: &SignedMatrix) -> Result<ExpansionSignatures, TreeError> {
    let n = m.size;
    if n > SIGNATURE_LIMIT {
        return Err(TreeError::SizeLimit(n, SIGNATURE_LIMIT));
    }
    let mut used = vec![false; n];
    let mut positives = 0u64;
    let mut negatives = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        m: &SignedMatrix,
        row: usize,
        used: &mut Vec<bool>,
        product: i64,
        transpositions: u32,
        positives: &mut u64,
        negatives: &mut u64,
    ) {
        let n = m.size;
        if row == n {
            // transpositions tracks inversions parity accumulated below.
            let term = if transpositions.is_multiple_of(2) {
                product
            } else {
                -product
            };
            if term > 0 {
                *positives += 1;
            } else {
                *negatives += 1;
            }
            return;
        }
        for col in 0..n {
            if used[col] || m.at(row, col) == 0 {
                continue;
            }
            // Parity contribution: inversions added by placing `col` now is
            // the number of still-unused columns smaller than `col`.
            let inversions = (0..col).filter(|&c| !used[c]).count() as u32;
            used[col] = true;
            rec(
                m,
                row + 1,
                used,
                product * m.at(row, col),
                transpositions + inversions,
                positives,
                negatives,
            );
            used[col] = false;
        }
    }
    rec(m, 0, &mut used, 1, 0, &mut positives, &mut negatives);
    let factorial: u64 = (1..=n as u64).product();
    Ok(ExpansionSignatures {
        positives,
        negatives,
        zeros: factorial - positives - negatives,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Effectiveness {
    Effective,
    NotEffective,
    /// Contract limit: determinant zero above the signature size limit.
    Indeterminate,
}

/// A matrix is effective when its nonzero expansion terms all share one
/// sign. Decided by signature enumeration up to [`SIGNATURE_LIMIT`], and by
/// the permanent/determinant equality |perm| = |det| above it (the two
/// routes are cross-checked in the test suites).
pub fn is_effective(m: &SignedMatrix) -> Effectiveness {
    if m.size <= SIGNATURE_LIMIT {
        let sig = expansion_signatures(m).expect("within limit");
        if sig.positives == 0 || sig.negatives == 0 {
            Effectiveness::Effective
        } else {
            Effectiveness::NotEffective
        }
    } else {
        let det = determinant(m);
        if det == 0 {
            return Effectiveness::Indeterminate;
        }
        match permanent_abs(m) {
            Ok(p) if p == det.unsigned_abs() => Effectiveness::Effective,
            Ok(_) => Effectiveness::NotEffective,
            Err(_) => Effectiveness::Indeterminate,
        }
    }
}
