//! Row monomial matrices of words: exactly one unit per row, stored as the
//! image vector `img[i] = j` (row i has its unit in column j).

use thiserror::Error;

use crate::dfa::{Dfa, Letter, State, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// The matrix M_u of a word u: `img[i]` is the state that row-state i maps to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowMonoMatrix {
    img: Vec<State>,
}

impl RowMonoMatrix {
    /// Build directly from an image vector; every entry must be < img.len().
    pub fn from_img(img: Vec<State>) -> Self {
        let n = img.len();
        assert!(img.iter().all(|&j| j < n), "image entry out of range");
        RowMonoMatrix { img }
    }

    pub fn identity(n: usize) -> Self {
        RowMonoMatrix { img: (0..n).collect() }
    }

    pub fn dim(&self) -> usize {
        self.img.len()
    }

    pub fn img(&self) -> &[State] {
        &self.img
    }

    /// Matrix product; for matrices of words this realizes concatenation:
    /// M_u * M_v = M_uv.
    pub fn mat_mul(&self, other: &RowMonoMatrix) -> Result<RowMonoMatrix, MatrixError> {
        if self.dim() != other.dim() {
            return Err(MatrixError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(RowMonoMatrix { img: self.img.iter().map(|&j| other.img[j]).collect() })
    }

    /// The set R(u) of nonzero columns.
    pub fn nonzero_columns(&self) -> ColumnSet {
        let mut bits = 0u64;
        assert!(self.dim() <= 64, "column sets support at most 64 columns");
        for &j in &self.img {
            bits |= 1 << j;
        }
        ColumnSet { bits, n: self.dim() }
    }

    /// |R(u)|, also called the rank of the word u. Coincides with the
    /// linear-algebra rank of the 0/1 matrix (audited property).
    pub fn rank(&self) -> usize {
        self.nonzero_columns().len()
    }

    /// True iff the matrix is a permutation (all n columns nonzero).
    pub fn is_permutation(&self) -> bool {
        self.rank() == self.dim()
    }

    /// Dense 0/1 expansion, row-major.
    pub fn dense(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, &j) in self.img.iter().enumerate() {
            rows[i][j] = 1;
        }
        rows
    }

    /// Report rendering: one "row i -> col j" line per row.
    pub fn render_text(&self) -> String {
        self.img
            .iter()
            .enumerate()
            .map(|(i, j)| format!("row {} -> col {}\n", i, j))
            .collect()
    }
}

/// M_u for a word u over a given automaton; the empty word gives the identity.
pub fn matrix_of_word(dfa: &Dfa, w: &Word) -> RowMonoMatrix {
    let img = (0..dfa.state_count()).map(|q| dfa.apply_word(q, w)).collect();
    RowMonoMatrix { img }
}

/// M_a for a single letter.
pub fn matrix_of_letter(dfa: &Dfa, a: Letter) -> RowMonoMatrix {
    let img = (0..dfa.state_count()).map(|q| dfa.step(q, a)).collect();
    RowMonoMatrix { img }
}

/// Set of nonzero column indices of a row monomial matrix; never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnSet {
    bits: u64,
    n: usize,
}

impl ColumnSet {
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, j: usize) -> bool {
        j < self.n && self.bits >> j & 1 == 1
    }

    pub fn is_subset_of(&self, other: &ColumnSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &ColumnSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.bits >> j & 1 == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dfa::cerny_family;

    #[test]
    fn empty_word_is_identity() {
        let c3 = cerny_family(3).unwrap();
        assert_eq!(matrix_of_word(&c3, &Word::empty()), RowMonoMatrix::identity(3));
    }

    #[test]
    fn matrix_of_b_on_cerny_3() {
        let c3 = cerny_family(3).unwrap();
        let m = matrix_of_word(&c3, &Word::new(vec![1]));
        assert_eq!(m.img(), &[1, 1, 2]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn matrix_of_ab_on_cerny_3() {
        let c3 = cerny_family(3).unwrap();
        let m = matrix_of_word(&c3, &Word::new(vec![0, 1]));
        assert_eq!(m.img(), &[1, 2, 1]);
    }

    #[test]
    fn mat_mul_matches_concatenation() {
        let c3 = cerny_family(3).unwrap();
        let ma = matrix_of_word(&c3, &Word::new(vec![0]));
        let mb = matrix_of_word(&c3, &Word::new(vec![1]));
        let mab = ma.mat_mul(&mb).unwrap();
        assert_eq!(mab, matrix_of_word(&c3, &Word::new(vec![0, 1])));
        assert_eq!(mab.img(), &[1, 2, 1]);
    }

    #[test]
    fn identity_is_neutral() {
        let c3 = cerny_family(3).unwrap();
        let id = RowMonoMatrix::identity(3);
        let m = matrix_of_word(&c3, &Word::new(vec![1, 0]));
        assert_eq!(id.mat_mul(&m).unwrap(), m);
        assert_eq!(m.mat_mul(&id).unwrap(), m);
    }

    #[test]
    fn mat_mul_rejects_dimension_mismatch() {
        let a = RowMonoMatrix::identity(2);
        let b = RowMonoMatrix::identity(3);
        assert_eq!(a.mat_mul(&b), Err(MatrixError::DimensionMismatch(2, 3)));
    }

    #[test]
    fn nonzero_columns_of_identity_and_constant() {
        let id = RowMonoMatrix::identity(5);
        assert_eq!(id.nonzero_columns().len(), 5);
        assert_eq!(id.rank(), 5);
        let constant = RowMonoMatrix::from_img(vec![2, 2, 2]);
        let cols: Vec<usize> = constant.nonzero_columns().iter().collect();
        assert_eq!(cols, vec![2]);
        assert_eq!(constant.rank(), 1);
    }

    // The displayed 6-row example matrix: units in columns 3,1,6,1,2,1
    // (1-based), i.e. img = [2,0,5,0,1,0] in 0-based indices.
    #[test]
    fn six_row_example_matrix_columns() {
        let m = RowMonoMatrix::from_img(vec![2, 0, 5, 0, 1, 0]);
        let cols: Vec<usize> = m.nonzero_columns().iter().collect();
        assert_eq!(cols, vec![0, 1, 2, 5]); // {1,2,3,6} in 1-based numbering
        assert_eq!(m.rank(), 4);
    }
}
