//! Dense exact matrices and the operator `theta(A) = (kappa-1)I + J - AAᵀ`.
//!
//! Two representations are used throughout the crate: [`IntMatrix`] holds
//! arbitrary integers (the class here written `Z_{n,kappa}` when all row and
//! column sums equal `kappa`), and [`BinMatrix`] is a bit-packed (0,1)-matrix
//! (the subclass `D_{n,kappa}`). All arithmetic is exact; the magnitudes in
//! scope (`n <= 64`, `|kappa| <= 14`) stay far away from `i64` overflow.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest order supported by the bit-packed [`BinMatrix`].
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixError {
    /// `theta` is defined only for constant row and column sums; without
    /// them `kappa` does not exist.
    NonConstantSums,
    /// An entry outside {0,1} where a (0,1)-matrix was required.
    NotBinary { row: usize, col: usize },
    /// Operand orders disagree.
    OrderMismatch { left: usize, right: usize },
    /// Order zero, or beyond [`MAX_ORDER`] for bit-packed matrices.
    BadOrder { n: usize },
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::NonConstantSums => {
                write!(f, "row and column sums are not all equal")
            }
            MatrixError::NotBinary { row, col } => {
                write!(f, "entry ({row},{col}) is not 0 or 1")
            }
            MatrixError::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            MatrixError::BadOrder { n } => write!(f, "unsupported order {n}"),
        }
    }
}

impl core::error::Error for MatrixError {}

/// Square matrix over the integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        IntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// The all-ones matrix `J_n`.
    pub fn all_ones(n: usize) -> Self {
        assert!(n > 0, "order must be positive");
        IntMatrix {
            n,
            entries: vec![1; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::BadOrder { n: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(MatrixError::OrderMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(IntMatrix { n, entries })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.n + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).sum())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum())
            .collect()
    }

    /// `Some(kappa)` when all `2n` row and column sums equal `kappa`.
    pub fn constant_sum(&self) -> Option<i64> {
        let rows = self.row_sums();
        let kappa = rows[0];
        if rows.iter().any(|&s| s != kappa) {
            return None;
        }
        if self.col_sums().iter().any(|&s| s != kappa) {
            return None;
        }
        Some(kappa)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{n}x{n}]", n = self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Square (0,1)-matrix with each row packed into a `u64` column bitset.
///
/// `Ord` compares the row-major bit string (row by row, columns left to
/// right), so `min` over a set of conjugates is the lexicographically
/// smallest labelling. Orders above [`MAX_ORDER`] are rejected.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BinMatrix {
    pub fn zero(n: usize) -> Result<Self, MatrixError> {
        if n == 0 || n > MAX_ORDER {
            return Err(MatrixError::BadOrder { n });
        }
        Ok(BinMatrix {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds from per-row column bitsets; bits at or above `n` are rejected.
    pub fn from_row_masks(n: usize, rows: Vec<u64>) -> Result<Self, MatrixError> {
        if n == 0 || n > MAX_ORDER {
            return Err(MatrixError::BadOrder { n });
        }
        if rows.len() != n {
            return Err(MatrixError::OrderMismatch {
                left: n,
                right: rows.len(),
            });
        }
        let valid = if n == MAX_ORDER {
            u64::MAX
        } else {
            (1u64 << n) - 1
        };
        for (i, &r) in rows.iter().enumerate() {
            if r & !valid != 0 {
                return Err(MatrixError::NotBinary { row: i, col: n });
            }
        }
        Ok(BinMatrix { n, rows })
    }

    pub fn from_int(m: &IntMatrix) -> Result<Self, MatrixError> {
        let n = m.n();
        if n > MAX_ORDER {
            return Err(MatrixError::BadOrder { n });
        }
        let mut rows = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                match m.get(i, j) {
                    0 => {}
                    1 => rows[i] |= 1 << j,
                    _ => return Err(MatrixError::NotBinary { row: i, col: j }),
                }
            }
        }
        Ok(BinMatrix { n, rows })
    }

    pub fn to_int(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) {
                    m.set(i, j, 1);
                }
            }
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Column bitset of `j` (set of rows with a 1 in column `j`).
    pub fn col_mask(&self, j: usize) -> u64 {
        let mut m = 0u64;
        for i in 0..self.n {
            m |= ((self.rows[i] >> j) & 1) << i;
        }
        m
    }

    #[inline]
    pub fn degree(&self, i: usize) -> u32 {
        self.rows[i].count_ones()
    }

    /// Number of columns where rows `i` and `j` both hold a 1; for an
    /// adjacency matrix this is the common-neighbour count.
    #[inline]
    pub fn common_count(&self, i: usize, j: usize) -> u32 {
        (self.rows[i] & self.rows[j]).count_ones()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.count_ones() as i64).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|j| self.col_mask(j).count_ones() as i64)
            .collect()
    }

    /// `Some(kappa)` when all row and column sums equal `kappa`.
    pub fn constant_sum(&self) -> Option<u32> {
        let kappa = self.rows[0].count_ones();
        if self.rows.iter().any(|r| r.count_ones() != kappa) {
            return None;
        }
        for j in 0..self.n {
            if self.col_mask(j).count_ones() != kappa {
                return None;
            }
        }
        Some(kappa)
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| !self.get(i, i))
    }
}

impl From<&BinMatrix> for IntMatrix {
    fn from(b: &BinMatrix) -> IntMatrix {
        b.to_int()
    }
}

impl TryFrom<&IntMatrix> for BinMatrix {
    type Error = MatrixError;
    fn try_from(m: &IntMatrix) -> Result<BinMatrix, MatrixError> {
        BinMatrix::from_int(m)
    }
}

impl PartialOrd for BinMatrix {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BinMatrix {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        // reverse_bits puts column 0 at the most significant position, so a
        // numeric compare of the reversed masks is a left-to-right column
        // compare, i.e. row-major bit-string order.
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.rows.iter().zip(other.rows.iter()) {
                let ord = a.reverse_bits().cmp(&b.reverse_bits());
                if ord != core::cmp::Ordering::Equal {
                    return ord;
                }
            }
            core::cmp::Ordering::Equal
        })
    }
}

impl fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{n}x{n}]", n = self.n)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for BinMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Outcome of the five class-membership predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassMembership {
    /// `Some(kappa)` when all row and column sums equal `kappa`
    /// (membership in `Z_{n,kappa}`).
    pub constant_sums: Option<i64>,
    /// Constant sums and every entry 0 or 1 (membership in `D_{n,kappa}`).
    pub in_d: bool,
    pub symmetric: bool,
    pub zero_diagonal: bool,
    /// No 2x2 all-ones submatrix.
    pub j2_free: bool,
}

impl ClassMembership {
    /// The three necessary conditions for fixed points: J₂-free, symmetric,
    /// zero diagonal.
    pub fn satisfies_lsz(&self) -> bool {
        self.j2_free && self.symmetric && self.zero_diagonal
    }
}

/// Row sums, column sums, and the constant `kappa` when all `2n` agree.
pub fn row_col_sums(a: &IntMatrix) -> (Vec<i64>, Vec<i64>, Option<i64>) {
    let rows = a.row_sums();
    let cols = a.col_sums();
    let kappa = rows[0];
    let constant =
        if rows.iter().all(|&s| s == kappa) && cols.iter().all(|&s| s == kappa) {
            Some(kappa)
        } else {
            None
        };
    (rows, cols, constant)
}

/// Deficiency `delta(kappa) = n - kappa^2 + kappa - 1` at order `n`.
///
/// For an incidence configuration with `n` points and `kappa` lines per
/// point this counts the points not collinear with a given point.
pub fn delta(n: usize, kappa: i64) -> i64 {
    n as i64 - kappa * kappa + kappa - 1
}

/// True when no two distinct rows share a 1 in two or more common columns.
pub fn is_j2_free(a: &BinMatrix) -> bool {
    for i in 0..a.n() {
        for j in i + 1..a.n() {
            if a.common_count(i, j) >= 2 {
                return false;
            }
        }
    }
    true
}

fn int_j2_free(a: &IntMatrix) -> bool {
    // A J2 submatrix needs the value 1 in all four positions, so only
    // entries equal to 1 participate.
    let n = a.n();
    for i in 0..n {
        for k in i + 1..n {
            let mut shared = 0;
            for j in 0..n {
                if a.get(i, j) == 1 && a.get(k, j) == 1 {
                    shared += 1;
                    if shared >= 2 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `theta(A) = (kappa - 1) I + J - A Aᵀ`.
///
/// Requires constant row and column sums (the value `kappa`); the result
/// then has all row and column sums equal to `delta(kappa)` and is always
/// symmetric.
pub fn theta(a: &IntMatrix) -> Result<IntMatrix, MatrixError> {
    let kappa = a.constant_sum().ok_or(MatrixError::NonConstantSums)?;
    let n = a.n();
    let mut out = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            let mut dot = 0i64;
            for k in 0..n {
                dot += a.get(i, k) * a.get(j, k);
            }
            let mut v = 1 - dot;
            if i == j {
                v += kappa - 1;
            }
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// `m`-fold composition of [`theta`]; `m = 0` returns the input unchanged.
pub fn theta_iterate(a: &IntMatrix, m: u32) -> Result<IntMatrix, MatrixError> {
    let mut cur = a.clone();
    for _ in 0..m {
        cur = theta(&cur)?;
    }
    Ok(cur)
}

/// Evaluates all five membership predicates exactly.
pub fn classify_membership(a: &IntMatrix) -> ClassMembership {
    let constant_sums = a.constant_sum();
    let binary = (0..a.n()).all(|i| (0..a.n()).all(|j| matches!(a.get(i, j), 0 | 1)));
    ClassMembership {
        constant_sums,
        in_d: constant_sums.is_some() && binary,
        symmetric: a.is_symmetric(),
        zero_diagonal: a.has_zero_diagonal(),
        j2_free: int_j2_free(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j2() -> IntMatrix {
        IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap()
    }

    fn c5() -> IntMatrix {
        IntMatrix::from_rows(&[
            vec![0, 1, 0, 0, 1],
            vec![1, 0, 1, 0, 0],
            vec![0, 1, 0, 1, 0],
            vec![0, 0, 1, 0, 1],
            vec![1, 0, 0, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn sums_of_j2() {
        let (rows, cols, kappa) = row_col_sums(&j2());
        assert_eq!(rows, vec![2, 2]);
        assert_eq!(cols, vec![2, 2]);
        assert_eq!(kappa, Some(2));
    }

    #[test]
    fn sums_without_constant() {
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        let (rows, _, kappa) = row_col_sums(&a);
        assert_eq!(rows, vec![1, 0]);
        assert_eq!(kappa, None);
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(10, 3), 3);
        assert_eq!(delta(17, 4), 4);
        // at n = (kappa-1)^2 + 2 the deficiency is 2 - kappa
        assert_eq!(delta(11, 4), -2);
    }

    #[test]
    fn j2_is_not_j2_free() {
        let b = BinMatrix::from_int(&j2()).unwrap();
        assert!(!is_j2_free(&b));
    }

    #[test]
    fn shared_pair_detected() {
        let mut b = BinMatrix::zero(4).unwrap();
        b.set(0, 1, true);
        b.set(0, 2, true);
        b.set(3, 1, true);
        b.set(3, 2, true);
        assert!(!is_j2_free(&b));
    }

    #[test]
    fn theta_fixes_the_swap_matrix() {
        // n = 2, kappa = 1: theta(A) = 0*I + J - I = A
        let a = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(theta(&a).unwrap(), a);
    }

    #[test]
    fn theta_fixes_the_five_cycle() {
        let a = c5();
        assert_eq!(theta(&a).unwrap(), a);
        assert_eq!(theta_iterate(&a, 7).unwrap(), a);
    }

    #[test]
    fn theta_rejects_non_constant_sums() {
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]).unwrap();
        assert_eq!(theta(&a), Err(MatrixError::NonConstantSums));
    }

    #[test]
    fn theta_iterate_zero_is_identity() {
        let a = c5();
        assert_eq!(theta_iterate(&a, 0).unwrap(), a);
    }

    #[test]
    fn membership_of_j2() {
        let m = classify_membership(&j2());
        assert_eq!(m.constant_sums, Some(2));
        assert!(m.in_d);
        assert!(m.symmetric);
        assert!(!m.zero_diagonal);
        assert!(!m.j2_free);
    }

    #[test]
    fn binary_round_trip() {
        let a = c5();
        let b = BinMatrix::from_int(&a).unwrap();
        assert_eq!(b.to_int(), a);
        assert_eq!(b.constant_sum(), Some(2));
        assert!(b.is_symmetric());
        assert!(b.has_zero_diagonal());
    }

    #[test]
    fn from_int_rejects_non_binary() {
        let a = IntMatrix::from_rows(&[vec![0, 2], vec![2, 0]]).unwrap();
        assert_eq!(
            BinMatrix::from_int(&a),
            Err(MatrixError::NotBinary { row: 0, col: 1 })
        );
    }

    #[test]
    fn lex_order_reads_columns_left_to_right() {
        // 01 / 10 is lexicographically smaller than 10 / 01 as a row-major
        // bit string.
        let a = BinMatrix::from_row_masks(2, vec![0b10, 0b01]).unwrap();
        let b = BinMatrix::from_row_masks(2, vec![0b01, 0b10]).unwrap();
        assert!(a < b);
    }
}
