//! Exact-arithmetic linear spans of flattened row monomial matrices and the
//! canonical V_{i,j}/K basis attaining the n(k-1)+1 dimension bound.
//!
//! All elimination is fraction-free over integers: every basis row is kept
//! primitive (content divided out) with a positive leading coefficient, which
//! realizes reduced echelon form over the rationals with exact equality tests.

use thiserror::Error;

use crate::dfa::Word;
use crate::matrix::RowMonoMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpanError {
    #[error("column budget must satisfy 2 <= k <= n, got n = {n}, k = {k}")]
    BadColumnBudget { n: usize, k: usize },
    #[error("enumeration of {size} matrices exceeds budget {budget}")]
    EnumerationTooLarge { size: u128, budget: u128 },
    #[error("dimension mismatch: basis is {0}, vector is {1}")]
    DimensionMismatch(usize, usize),
}

/// Row-major 0/1 embedding of a row monomial matrix into a length-n² vector.
pub fn flatten(m: &RowMonoMatrix) -> Vec<i64> {
    let n = m.dim();
    let mut v = vec![0i64; n * n];
    for (i, &j) in m.img().iter().enumerate() {
        v[i * n + j] = 1;
    }
    v
}

/// Echelonized basis of a span of flattened n×n matrices.
#[derive(Debug, Clone, Default)]
pub struct SpanBasis {
    n: usize,
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    provenance: Vec<Option<Word>>,
}

impl SpanBasis {
    pub fn new(n: usize) -> Self {
        SpanBasis { n, rows: Vec::new(), pivots: Vec::new(), provenance: Vec::new() }
    }

    pub fn matrix_dim(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Words of basis rows that were admitted verbatim (unreduced).
    pub fn provenance(&self) -> &[Option<Word>] {
        &self.provenance
    }

    /// Reduce the matrix against the basis; admit the residual as a new basis
    /// row if nonzero. Returns true iff the dimension grew.
    pub fn try_insert(&mut self, m: &RowMonoMatrix, word: &Word) -> bool {
        debug_assert_eq!(m.dim(), self.n, "matrix dimension mismatch");
        self.insert_vector(flatten(m), Some(word.clone()))
    }

    /// Membership test without mutation.
    pub fn contains(&self, m: &RowMonoMatrix) -> bool {
        let mut v = flatten(m);
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    fn reduce(&self, v: &mut [i64]) -> bool {
        let mut changed = false;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p] != 0 {
                let (a, b) = (row[p], v[p]);
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = *vi * a - ri * b;
                }
                changed = true;
            }
        }
        changed
    }

    /// Insert an arbitrary integer vector of length n².
    pub fn insert_vector(&mut self, mut v: Vec<i64>, word: Option<Word>) -> bool {
        assert_eq!(v.len(), self.n * self.n, "vector length mismatch");
        let changed = self.reduce(&mut v);
        let pivot = match v.iter().position(|&x| x != 0) {
            Some(p) => p,
            None => return false,
        };
        normalize(&mut v);
        // back-reduce older rows so the basis stays fully reduced
        for i in 0..self.rows.len() {
            if self.rows[i][pivot] != 0 {
                let (a, b) = (v[pivot], self.rows[i][pivot]);
                for (ri, vi) in self.rows[i].iter_mut().zip(&v) {
                    *ri = *ri * a - vi * b;
                }
                normalize(&mut self.rows[i]);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(at, v);
        self.pivots.insert(at, pivot);
        self.provenance.insert(at, if changed { None } else { word });
        true
    }
}

/// Divide out the content and make the leading coefficient positive.
fn normalize(v: &mut [i64]) {
    let mut g: i64 = 0;
    for &x in v.iter() {
        g = gcd(g, x.abs());
    }
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        if lead < 0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Exact rank of a list of integer vectors (all the same length n²-free; any
/// length is accepted as long as they agree).
pub fn integer_rank(vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    // reuse the elimination core on a square-embedded basis
    let len = vectors[0].len();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for vec in vectors {
        assert_eq!(vec.len(), len);
        let mut v = vec.clone();
        for (row, &p) in rows.iter().zip(&pivots) {
            if v[p] != 0 {
                let (a, b) = (row[p], v[p]);
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = *vi * a - ri * b;
                }
            }
        }
        if let Some(p) = v.iter().position(|&x| x != 0) {
            normalize(&mut v);
            rows.push(v);
            pivots.push(p);
        }
    }
    rows.len()
}

/// The n(k-1)+1 canonical generators of the span of all row monomial n×k
/// matrices, embedded into n columns with column k-1 playing the last column:
/// V_{i,j} has its unit for row i in column j and all other rows in column
/// k-1; K sends every row to column k-1.
pub fn canonical_basis(n: usize, k: usize) -> Result<Vec<RowMonoMatrix>, SpanError> {
    if k < 2 || k > n {
        return Err(SpanError::BadColumnBudget { n, k });
    }
    let last = k - 1;
    let mut out = Vec::with_capacity(n * (k - 1) + 1);
    for i in 0..n {
        for j in 0..last {
            let img = (0..n).map(|m| if m == i { j } else { last }).collect();
            out.push(RowMonoMatrix::from_img(img));
        }
    }
    out.push(RowMonoMatrix::from_img(vec![last; n]));
    Ok(out)
}

/// Dimension of the span of all kⁿ row monomial n×n matrices whose nonzero
/// columns lie in the first k columns. Expected n(k-1)+1 for k >= 2, 1 for k=1.
pub fn span_dimension_of_all(n: usize, k: usize, budget: u128) -> Result<usize, SpanError> {
    if k < 1 || k > n {
        return Err(SpanError::BadColumnBudget { n, k });
    }
    let size = (k as u128).pow(n as u32);
    if size > budget {
        return Err(SpanError::EnumerationTooLarge { size, budget });
    }
    let mut basis = SpanBasis::new(n);
    let mut img = vec![0usize; n];
    loop {
        basis.insert_vector(flatten(&RowMonoMatrix::from_img(img.clone())), None);
        let mut pos = n;
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            if img[pos] + 1 < k {
                img[pos] += 1;
                for cell in img.iter_mut().skip(pos + 1) {
                    *cell = 0;
                }
                done = false;
                break;
            }
        }
        if done {
            break;
        }
    }
    Ok(basis.dimension())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_small_matrices() {
        assert_eq!(flatten(&RowMonoMatrix::identity(2)), vec![1, 0, 0, 1]);
        assert_eq!(flatten(&RowMonoMatrix::from_img(vec![1, 1])), vec![0, 1, 0, 1]);
        assert_eq!(flatten(&RowMonoMatrix::from_img(vec![1, 0])), vec![0, 1, 1, 0]);
    }

    #[test]
    fn insert_identity_once_then_reject_duplicate() {
        let mut basis = SpanBasis::new(2);
        let id = RowMonoMatrix::identity(2);
        assert!(basis.try_insert(&id, &Word::empty()));
        assert_eq!(basis.dimension(), 1);
        assert!(!basis.try_insert(&id, &Word::empty()));
        assert_eq!(basis.dimension(), 1);
        assert_eq!(basis.provenance()[0], Some(Word::empty()));
    }

    #[test]
    fn all_four_2x2_matrices_span_dimension_3() {
        let mut basis = SpanBasis::new(2);
        for img in [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]] {
            basis.insert_vector(flatten(&RowMonoMatrix::from_img(img)), None);
        }
        assert_eq!(basis.dimension(), 3); // n(n-1)+1 for n=2
    }

    #[test]
    fn basis_stays_echelonized() {
        let mut basis = SpanBasis::new(3);
        for img in [vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2], vec![0, 0, 0]] {
            basis.insert_vector(flatten(&RowMonoMatrix::from_img(img)), None);
        }
        let pivots = basis.pivots();
        assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(basis.dimension(), pivots.len());
        for (row, &p) in basis.rows().iter().zip(pivots) {
            assert!(row[p] > 0);
            assert!(row[..p].iter().all(|&x| x == 0));
            // fully reduced: other rows are zero at this pivot
            for (other, &q) in basis.rows().iter().zip(pivots) {
                if q != p {
                    assert_eq!(other[p], 0, "pivot column {} not cleared", p);
                }
            }
        }
    }

    #[test]
    fn canonical_basis_n2_k2() {
        let set = canonical_basis(2, 2).unwrap();
        assert_eq!(set.len(), 3);
        // V_{1,1}, V_{2,1}, K in the paper's 1-based cell naming
        assert_eq!(set[0].img(), &[0, 1]);
        assert_eq!(set[1].img(), &[1, 0]);
        assert_eq!(set[2].img(), &[1, 1]);
        let flats: Vec<Vec<i64>> = set.iter().map(flatten).collect();
        assert_eq!(integer_rank(&flats), 3);
    }

    #[test]
    fn canonical_basis_rejects_bad_budget() {
        assert!(canonical_basis(3, 1).is_err());
        assert!(canonical_basis(3, 4).is_err());
    }

    #[test]
    fn canonical_basis_n3_k2_spans_everything() {
        let set = canonical_basis(3, 2).unwrap();
        assert_eq!(set.len(), 4);
        let mut basis = SpanBasis::new(3);
        for m in &set {
            assert!(basis.insert_vector(flatten(m), None));
        }
        assert_eq!(basis.dimension(), 4);
        // every 3x2 row monomial matrix reduces to zero against it
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let m = RowMonoMatrix::from_img(vec![a, b, c]);
                    assert!(basis.contains(&m));
                }
            }
        }
        assert_eq!(span_dimension_of_all(3, 2, 1 << 20).unwrap(), 4);
    }

    #[test]
    fn span_dimension_values() {
        assert_eq!(span_dimension_of_all(2, 2, 1 << 20).unwrap(), 3);
        assert_eq!(span_dimension_of_all(4, 3, 1 << 20).unwrap(), 9);
        assert_eq!(span_dimension_of_all(3, 1, 1 << 20).unwrap(), 1);
    }

    #[test]
    fn span_dimension_respects_budget() {
        assert_eq!(
            span_dimension_of_all(5, 4, 10),
            Err(SpanError::EnumerationTooLarge { size: 1024, budget: 10 })
        );
    }

    #[test]
    fn constant_maps_are_independent() {
        for n in 2..=5 {
            let mut basis = SpanBasis::new(n);
            for c in 0..n {
                assert!(basis.insert_vector(flatten(&RowMonoMatrix::from_img(vec![c; n])), None));
            }
            assert_eq!(basis.dimension(), n);
        }
    }
}
