//! Bit-packed linear algebra over F2: matrices, reduced row echelon form,
//! rank, and row-space membership.
//!
//! Rows are stored in 64-bit words; elimination works by whole-row XOR.
//! Reduction always produces the fully reduced echelon form so that
//! membership tests and systematic forms are deterministic.

use crate::algebra::BinaryPolynomial;
use crate::{Error, Result};

const WORD_BITS: usize = 64;

/// A packed bit vector of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(WORD_BITS)] }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parse a `0`/`1` string, most significant position last (index order).
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(words: Vec<u64>, len: usize) -> Self {
        debug_assert_eq!(words.len(), len.div_ceil(WORD_BITS));
        Self { len, words }
    }

    /// Bitstring-lexicographic order: compare position 0 first, `0 < 1`.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let i = diff.trailing_zeros();
                return (a >> i & 1).cmp(&(b >> i & 1));
            }
        }
        std::cmp::Ordering::Equal
    }

    /// The two halves of a length-`2n` vector as polynomials with ambient `n`.
    pub fn split_halves(&self, n: usize) -> Result<(BinaryPolynomial, BinaryPolynomial)> {
        if self.len != 2 * n {
            return Err(Error::LengthMismatch { expected: 2 * n, got: self.len });
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in self.support() {
            if i < n {
                left.push(i);
            } else {
                right.push(i - n);
            }
        }
        Ok((
            BinaryPolynomial::from_support(&left, n)?,
            BinaryPolynomial::from_support(&right, n)?,
        ))
    }
}

impl std::fmt::Debug for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl std::fmt::Display for BitVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// A dense bit matrix, row-major, one padded word stripe per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(WORD_BITS).max(1);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVector]) -> Self {
        let cols = rows.first().map_or(0, BitVector::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_vector(&self, r: usize) -> BitVector {
        BitVector::from_words(self.row(r).to_vec(), self.cols)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (a, b) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(b * self.stride);
        head[a * self.stride..(a + 1) * self.stride].swap_with_slice(&mut tail[..self.stride]);
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            let src_slice = &head[src * s..(src + 1) * s];
            for (d, x) in tail[..s].iter_mut().zip(src_slice) {
                *d ^= x;
            }
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            let dst_slice = &mut head[dst * s..(dst + 1) * s];
            for (d, x) in dst_slice.iter_mut().zip(&tail[..s]) {
                *d ^= x;
            }
        }
    }

    pub fn append_row(&mut self, v: &BitVector) {
        assert_eq!(v.len(), self.cols);
        self.data.extend_from_slice(v.words());
        self.rows += 1;
    }

    /// Rank over F2.
    pub fn rank(&self) -> usize {
        self.clone().reduce_in_place().len()
    }

    /// Reduced row echelon form plus the strictly increasing pivot columns.
    pub fn row_reduce(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.reduce_in_place();
        Rref { matrix: m, pivots }
    }

    fn reduce_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let Some(pivot_row) = (next_row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(pivot_row, next_row);
            for r in 0..self.rows {
                if r != next_row && self.get(r, col) {
                    self.xor_row_into(next_row, r);
                }
            }
            pivots.push(col);
            next_row += 1;
        }
        pivots
    }

    /// True iff `v` is an F2-linear combination of the rows.
    pub fn in_rowspace(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch { expected: self.cols, got: v.len() });
        }
        Ok(self.row_reduce().contains(v))
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.rows, self.cols)?;
        for r in 0..self.rows.min(24) {
            writeln!(f, "  {}", self.row_vector(r))?;
        }
        if self.rows > 24 {
            writeln!(f, "  ...")?;
        }
        Ok(())
    }
}

/// A reduced row echelon form with its pivot columns; supports repeated
/// membership queries without re-reducing.
#[derive(Clone, Debug)]
pub struct Rref {
    matrix: BitMatrix,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the echelon rows, in place. The residue is zero
    /// exactly when `v` lies in the row space.
    pub fn reduce(&self, v: &mut BitVector) {
        for (row, &col) in self.pivots.iter().enumerate() {
            if v.get(col) {
                let row_words = self.matrix.row(row);
                for (a, b) in v.words.iter_mut().zip(row_words) {
                    *a ^= b;
                }
            }
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        let mut r = v.clone();
        self.reduce(&mut r);
        r.is_zero()
    }

    /// The nonzero rows as an independent generating set.
    pub fn basis_rows(&self) -> Vec<BitVector> {
        (0..self.rank()).map(|r| self.matrix.row_vector(r)).collect()
    }
}

/// The first `row_count` rows of the circulant of `a`: row `i` holds the
/// coefficients of `x^i · a(x) mod x^n - 1`.
pub fn circulant_rows(a: &BinaryPolynomial, n: usize, row_count: usize) -> Result<BitMatrix> {
    if a.ambient() != n {
        return Err(Error::AmbientMismatch { left: a.ambient(), right: n });
    }
    if row_count == 0 || row_count > n {
        return Err(Error::RowCountOutOfRange { count: row_count, n });
    }
    let mut m = BitMatrix::zeros(row_count, n);
    let support = a.support();
    for i in 0..row_count {
        for &j in &support {
            m.set(i, (j + i) % n, true);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::naive;

    #[test]
    fn circulant_examples() {
        let one = BinaryPolynomial::one(4);
        assert_eq!(circulant_rows(&one, 4, 4).unwrap(), BitMatrix::identity(4));

        let x = BinaryPolynomial::monomial(1, 3).unwrap();
        let m = circulant_rows(&x, 3, 3).unwrap();
        // cyclic permutation matrix
        assert!(m.get(0, 1) && m.get(1, 2) && m.get(2, 0));
        assert_eq!((0..3).map(|r| m.row_vector(r).weight()).sum::<usize>(), 3);

        let g1 = BinaryPolynomial::parse_compact("1^2 0 1^2 0^7 1^2", 45).unwrap();
        let block = circulant_rows(&g1, 45, 45 - 13).unwrap();
        assert_eq!((block.rows(), block.cols()), (32, 45));

        assert!(circulant_rows(&one, 4, 0).is_err());
        assert!(circulant_rows(&one, 4, 5).is_err());
    }

    #[test]
    fn full_circulant_rank_is_codimension_of_gcd() {
        // rank of the circulant of a equals n - deg(gcd(a, x^n - 1))
        for (s, n) in [("1^2", 7usize), ("1^201", 7), ("1^2 0 1^2 0^7 1^2", 45)] {
            let a = BinaryPolynomial::parse_compact(s, n).unwrap();
            let g = a.as_plain().gcd(&BinaryPolynomial::xn_minus_one(n)).unwrap();
            let m = circulant_rows(&a, n, n).unwrap();
            assert_eq!(m.rank(), n - g.degree().unwrap());
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 7).rank(), 0);
    }

    #[test]
    fn row_reduce_identity_and_duplicates() {
        let id = BitMatrix::identity(4);
        let rref = id.row_reduce();
        assert_eq!(rref.matrix(), &id);
        assert_eq!(rref.pivots(), &[0, 1, 2, 3]);

        let row = BitVector::from_bools(&[true, false, true, true]);
        let dup = BitMatrix::from_rows(&[row.clone(), row.clone(), row.clone()]);
        let rref = dup.row_reduce();
        assert_eq!(rref.rank(), 1);
        assert_eq!(rref.matrix().row_vector(0), row);
        assert!(rref.matrix().row_vector(1).is_zero());
    }

    #[test]
    fn row_reduce_matches_naive_elimination() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let rows = 20;
            let cols = 40;
            let mut m = BitMatrix::zeros(rows, cols);
            let mut grid = vec![vec![false; cols]; rows];
            for (r, row) in grid.iter_mut().enumerate() {
                for (c, cell) in row.iter_mut().enumerate() {
                    if next() & 1 == 1 {
                        *cell = true;
                        m.set(r, c, true);
                    }
                }
            }
            let rref = m.row_reduce();
            let (naive_rref, naive_pivots) = naive::row_reduce(grid);
            assert_eq!(rref.pivots(), naive_pivots.as_slice());
            for (r, row) in naive_rref.iter().enumerate() {
                assert_eq!(
                    rref.matrix().row_vector(r),
                    BitVector::from_bools(row),
                    "row {r} differs"
                );
            }
        }
    }

    #[test]
    fn rank_invariant_under_row_ops() {
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..50 {
            let mut m = BitMatrix::zeros(8, 13);
            for r in 0..8 {
                for c in 0..13 {
                    if next() & 1 == 1 {
                        m.set(r, c, true);
                    }
                }
            }
            let rank = m.rank();
            let mut permuted = m.clone();
            permuted.swap_rows((next() % 8) as usize, (next() % 8) as usize);
            assert_eq!(permuted.rank(), rank);
            let (a, b) = ((next() % 8) as usize, (next() % 8) as usize);
            if a != b {
                let mut added = m.clone();
                added.xor_row_into(a, b);
                assert_eq!(added.rank(), rank);
            }
        }
    }

    #[test]
    fn in_rowspace_examples() {
        let m = BitMatrix::from_rows(&[
            BitVector::from_bit_string("10110").unwrap(),
            BitVector::from_bit_string("01011").unwrap(),
        ]);
        assert!(m.in_rowspace(&m.row_vector(0)).unwrap());
        assert!(m.in_rowspace(&BitVector::zeros(5)).unwrap());
        let sum = {
            let mut s = m.row_vector(0);
            s.xor_assign(&m.row_vector(1));
            s
        };
        assert!(m.in_rowspace(&sum).unwrap());
        assert!(!m.in_rowspace(&BitVector::from_bit_string("00001").unwrap()).unwrap());
        assert!(m.in_rowspace(&BitVector::zeros(4)).is_err());
    }

    #[test]
    fn membership_agrees_with_rank_extension() {
        let mut state = 7u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let mut m = BitMatrix::zeros(5, 9);
            for r in 0..5 {
                for c in 0..9 {
                    if next() & 1 == 1 {
                        m.set(r, c, true);
                    }
                }
            }
            let mut v = BitVector::zeros(9);
            for c in 0..9 {
                if next() & 1 == 1 {
                    v.set(c, true);
                }
            }
            let member = m.in_rowspace(&v).unwrap();
            let mut extended = m.clone();
            extended.append_row(&v);
            assert_eq!(member, extended.rank() == m.rank());
        }
    }

    #[test]
    fn lex_cmp_orders_by_first_difference() {
        let a = BitVector::from_bit_string("0011").unwrap();
        let b = BitVector::from_bit_string("0101").unwrap();
        assert_eq!(a.lex_cmp(&b), std::cmp::Ordering::Less);
        assert_eq!(b.lex_cmp(&a), std::cmp::Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), std::cmp::Ordering::Equal);
    }
}
