//! Bit-packed linear algebra over F2.
//!
//! Rows are packed little-endian into `u64` words: bit `j` of a row lives in
//! word `j / 64` at position `j % 64`. Elimination always pivots on the first
//! nonzero column and the lowest available row, so results are reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::F2Error;

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

#[inline]
fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

/// A fixed-length vector over F2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    words: Vec<u64>,
    len: usize,
}

impl BinaryVector {
    pub fn zeros(len: usize) -> Self {
        Self { words: vec![0; words_for(len)], len }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector with ones exactly at `indices` (repeated indices cancel).
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    /// Builds a vector from its low `len` bits packed in words.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { words, len };
        v.clear_tail();
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    fn clear_tail(&mut self) {
        let r = self.len % WORD;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn xor_assign(&mut self, other: &BinaryVector) {
        assert_eq!(self.len, other.len, "length mismatch");
        xor_into(&mut self.words, &other.words);
    }

    #[must_use]
    pub fn xor(&self, other: &BinaryVector) -> BinaryVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Standard dot product over F2.
    pub fn dot(&self, other: &BinaryVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense row-major F2 matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    data: Vec<u64>,
    n_rows: usize,
    n_cols: usize,
    stride: usize,
}

/// Result of an in-place elimination: pivot column of each leading row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl BinaryMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let stride = words_for(n_cols);
        Self { data: vec![0; n_rows * stride], n_rows, n_cols, stride }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Empty matrix with a column count, to be filled with `push_row`.
    pub fn with_cols(n_cols: usize) -> Self {
        Self::zeros(0, n_cols)
    }

    pub fn from_rows(n_cols: usize, rows: &[BinaryVector]) -> Self {
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n_cols, "row {i} has wrong length");
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Parses rows of `0`/`1` characters; other characters are ignored.
    pub fn from_strs(rows: &[&str]) -> Self {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| r.chars().filter(|c| *c == '0' || *c == '1').map(|c| c == '1').collect())
            .collect();
        let n_cols = parsed.first().map_or(0, Vec::len);
        let vecs: Vec<BinaryVector> = parsed.iter().map(|b| BinaryVector::from_bits(b)).collect();
        Self::from_rows(n_cols, &vecs)
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_vector(&self, i: usize) -> BinaryVector {
        BinaryVector { words: self.row(i).to_vec(), len: self.n_cols }
    }

    pub fn rows(&self) -> impl Iterator<Item = BinaryVector> + '_ {
        (0..self.n_rows).map(|i| self.row_vector(i))
    }

    pub fn push_row(&mut self, row: &BinaryVector) {
        assert_eq!(row.len(), self.n_cols, "row length mismatch");
        self.data.extend_from_slice(row.words());
        self.n_rows += 1;
    }

    /// Appends a row given by the positions of its ones.
    pub fn push_sparse_row(&mut self, ones: impl IntoIterator<Item = usize>) {
        let start = self.data.len();
        self.data.resize(start + self.stride, 0);
        for j in ones {
            assert!(j < self.n_cols, "column {j} out of range");
            self.data[start + j / WORD] ^= 1u64 << (j % WORD);
        }
        self.n_rows += 1;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n_rows && j < self.n_cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    pub fn column(&self, j: usize) -> BinaryVector {
        let mut v = BinaryVector::zeros(self.n_rows);
        for i in 0..self.n_rows {
            if self.get(i, j) {
                v.set(i, true);
            }
        }
        v
    }

    #[must_use]
    pub fn transpose(&self) -> BinaryMatrix {
        let mut t = BinaryMatrix::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for (wi, &w) in self.row(i).iter().enumerate() {
                let mut rest = w;
                while rest != 0 {
                    let j = wi * WORD + rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    #[must_use]
    pub fn mul(&self, rhs: &BinaryMatrix) -> BinaryMatrix {
        assert_eq!(self.n_cols, rhs.n_rows, "dimension mismatch");
        let mut out = BinaryMatrix::zeros(self.n_rows, rhs.n_cols);
        for i in 0..self.n_rows {
            for k in 0..self.n_cols {
                if self.get(i, k) {
                    let src = rhs.row(k).to_vec();
                    xor_into(out.row_mut(i), &src);
                }
            }
        }
        out
    }

    /// `self * v` as a column vector.
    pub fn mul_vec(&self, v: &BinaryVector) -> BinaryVector {
        assert_eq!(self.n_cols, v.len(), "dimension mismatch");
        let mut out = BinaryVector::zeros(self.n_rows);
        for i in 0..self.n_rows {
            let ones: u32 = self.row(i).iter().zip(v.words()).map(|(a, b)| (a & b).count_ones()).sum();
            if ones & 1 == 1 {
                out.set(i, true);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        self.n_rows == self.n_cols && *self == self.transpose()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    fn add_row(&mut self, src: usize, dst: usize, from_word: usize) {
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            xor_into(&mut tail[from_word..s], &head[src * s + from_word..(src + 1) * s]);
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            xor_into(&mut head[dst * s + from_word..(dst + 1) * s], &tail[from_word..s]);
        }
    }

    /// Gaussian elimination in place. With `reduced` the result is in reduced
    /// row echelon form, otherwise only rows below each pivot are cleared.
    pub fn eliminate(&mut self, reduced: bool) -> Echelon {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.n_cols {
            if r == self.n_rows {
                break;
            }
            let w = c / WORD;
            let mask = 1u64 << (c % WORD);
            let Some(p) = (r..self.n_rows).find(|&i| self.data[i * self.stride + w] & mask != 0) else {
                continue;
            };
            self.swap_rows(p, r);
            let start = if reduced { 0 } else { r + 1 };
            for i in start..self.n_rows {
                if i != r && self.data[i * self.stride + w] & mask != 0 {
                    self.add_row(r, i, w);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { pivots }
    }

    /// Row-reduced copy together with its pivots.
    pub fn rref(&self) -> (BinaryMatrix, Echelon) {
        let mut m = self.clone();
        let e = m.eliminate(true);
        (m, e)
    }

    /// Approximate heap footprint in bytes.
    pub fn bytes(&self) -> usize {
        self.data.len() * 8
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.n_rows, self.n_cols)?;
        for i in 0..self.n_rows {
            writeln!(f, "{:?}", self.row_vector(i))?;
        }
        Ok(())
    }
}

/// F2 row rank.
pub fn rank(m: &BinaryMatrix) -> usize {
    m.clone().eliminate(false).rank()
}

/// Basis of the right null space `{x : M x = 0}`.
pub fn kernel(m: &BinaryMatrix) -> Vec<BinaryVector> {
    let (r, e) = m.rref();
    let n = m.n_cols();
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..n).filter(|&j| !is_pivot[j]) {
        let mut x = BinaryVector::zeros(n);
        x.set(f, true);
        for (i, &p) in e.pivots.iter().enumerate() {
            if r.get(i, f) {
                x.set(p, true);
            }
        }
        basis.push(x);
    }
    basis
}

/// Some `x` with `M x = b`, or `None` when `b` is outside the column space.
pub fn solve(m: &BinaryMatrix, b: &BinaryVector) -> Option<BinaryVector> {
    assert_eq!(b.len(), m.n_rows(), "right-hand side length mismatch");
    let n = m.n_cols();
    let mut aug = BinaryMatrix::zeros(m.n_rows(), n + 1);
    for i in 0..m.n_rows() {
        for j in m.row_vector(i).iter_ones() {
            aug.set(i, j, true);
        }
        if b.get(i) {
            aug.set(i, n, true);
        }
    }
    let e = aug.eliminate(true);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = BinaryVector::zeros(n);
    for (i, &p) in e.pivots.iter().enumerate() {
        if aug.get(i, n) {
            x.set(p, true);
        }
    }
    Some(x)
}

/// Incrementally built row space supporting membership queries.
///
/// Each stored row has a distinct pivot and is zero at the pivots of all
/// earlier rows, so a single forward pass reduces any vector.
#[derive(Clone, Debug)]
pub struct RowSpace {
    len: usize,
    rows: Vec<BinaryVector>,
    pivots: Vec<usize>,
    /// For each stored row, which inserted vectors it is a combination of.
    tags: Option<Vec<BinaryVector>>,
    inserted: usize,
}

impl RowSpace {
    pub fn new(len: usize) -> Self {
        Self { len, rows: Vec::new(), pivots: Vec::new(), tags: None, inserted: 0 }
    }

    /// A row space that remembers how each basis row was formed, so that
    /// `express` can return a combination of inserted vectors.
    pub fn with_tracking(len: usize, capacity: usize) -> Self {
        let mut s = Self::new(len);
        s.tags = Some(Vec::with_capacity(capacity));
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    pub fn basis(&self) -> &[BinaryVector] {
        &self.rows
    }

    pub fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns whether it enlarged the space.
    pub fn insert(&mut self, v: &BinaryVector) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let index = self.inserted;
        self.inserted += 1;
        let mut r = v.clone();
        let mut tag = self.tags.as_ref().map(|_| BinaryVector::zeros(index + 1));
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(row);
                if let (Some(t), Some(tags)) = (tag.as_mut(), self.tags.as_ref()) {
                    for i in tags[k].iter_ones() {
                        t.flip(i);
                    }
                }
            }
        }
        match r.first_one() {
            None => false,
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                if let (Some(mut t), Some(tags)) = (tag, self.tags.as_mut()) {
                    t.flip(index);
                    tags.push(t);
                }
                true
            }
        }
    }

    /// Indices of inserted vectors summing to `v`, if `v` lies in the space.
    /// Requires a tracking row space.
    pub fn express(&self, v: &BinaryVector) -> Option<Vec<usize>> {
        let tags = self.tags.as_ref().expect("express needs a tracking RowSpace");
        let mut r = v.clone();
        let mut acc = BinaryVector::zeros(self.inserted);
        for ((row, &p), tag) in self.rows.iter().zip(&self.pivots).zip(tags) {
            if r.get(p) {
                r.xor_assign(row);
                for i in tag.iter_ones() {
                    acc.flip(i);
                }
            }
        }
        r.is_zero().then(|| acc.iter_ones().collect())
    }
}

/// Rank of a small matrix whose rows fit in single words.
pub fn rank_of_words(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::with_capacity(rows.len());
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Nondegenerate symmetric zero-diagonal form on F2^{2m}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    m: usize,
    matrix: BinaryMatrix,
}

impl SymplecticForm {
    /// The form pairing X-part `i` with Z-part `i` in `(x_1..x_m | z_1..z_m)`.
    pub fn standard(m: usize) -> Self {
        let matrix = BinaryMatrix::from_fn(2 * m, 2 * m, |i, j| i + m == j || j + m == i);
        Self { m, matrix }
    }

    pub fn new(matrix: BinaryMatrix) -> Result<Self, F2Error> {
        let n = matrix.n_rows();
        if n != matrix.n_cols() || n % 2 != 0 {
            return Err(F2Error::NotSymplectic);
        }
        if !matrix.is_symmetric() || (0..n).any(|i| matrix.get(i, i)) || rank(&matrix) != n {
            return Err(F2Error::NotSymplectic);
        }
        Ok(Self { m: n / 2, matrix })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    pub fn eval(&self, a: &BinaryVector, b: &BinaryVector) -> bool {
        self.matrix.mul_vec(b).dot(a)
    }

    /// Whether `S^T λ S = λ`.
    pub fn preserved_by(&self, s: &BinaryMatrix) -> bool {
        s.transpose().mul(&self.matrix).mul(s) == self.matrix
    }
}

/// Symplectic Gram–Schmidt on F2^n under the form `omega`.
///
/// Returns hyperbolic pairs `(e_i, f_i)` with `omega(e_i, f_j) = δ_ij` and all
/// other pairings zero; leftover vectors span the radical.
fn hyperbolic_pairs(omega: &BinaryMatrix) -> Result<Vec<(BinaryVector, BinaryVector)>, F2Error> {
    let n = omega.n_rows();
    let form = |a: &BinaryVector, b: &BinaryVector| omega.mul_vec(b).dot(a);
    let mut pool: Vec<BinaryVector> = (0..n).map(|i| BinaryVector::unit(n, i)).collect();
    let mut pairs = Vec::new();
    loop {
        let found = (0..pool.len())
            .find_map(|i| ((i + 1)..pool.len()).find(|&j| form(&pool[i], &pool[j])).map(|j| (i, j)));
        let Some((i, j)) = found else { break };
        let f = pool.remove(j);
        let e = pool.remove(i);
        for v in pool.iter_mut() {
            let with_f = form(v, &f);
            let with_e = form(v, &e);
            if with_f {
                v.xor_assign(&e);
            }
            if with_e {
                v.xor_assign(&f);
            }
        }
        pairs.push((e, f));
    }
    if pool.iter().any(|v| form(v, v)) {
        return Err(F2Error::OddPivotStructure);
    }
    Ok(pairs)
}

/// Constructs `P` (2m × n) with `P^T λ P = ω` on the minimum number of qubits.
///
/// Column `a` of `P` is `Σ_i ω(u_a, f_i) x_i + ω(u_a, e_i) z_i`, where
/// `(e_i, f_i)` are hyperbolic pairs of `ω` and `(x_i, z_i)` those of `λ`.
pub fn realize_commutation_matrix(omega: &BinaryMatrix, lambda: &SymplecticForm) -> Result<BinaryMatrix, F2Error> {
    let n = omega.n_rows();
    if omega.n_cols() != n || !omega.is_symmetric() || (0..n).any(|i| omega.get(i, i)) {
        return Err(F2Error::NotSkew);
    }
    let pairs = hyperbolic_pairs(omega)?;
    if pairs.len() != lambda.m() {
        return Err(F2Error::RankMismatch { rank: 2 * pairs.len(), qubits: lambda.m() });
    }
    let frame = hyperbolic_pairs(lambda.matrix())?;
    let dim = 2 * lambda.m();
    let mut p = BinaryMatrix::zeros(dim, n);
    for a in 0..n {
        let row_a = omega.row_vector(a);
        let mut col = BinaryVector::zeros(dim);
        for ((e, f), (x, z)) in pairs.iter().zip(&frame) {
            if row_a.dot(f) {
                col.xor_assign(x);
            }
            if row_a.dot(e) {
                col.xor_assign(z);
            }
        }
        for i in col.iter_ones() {
            p.set(i, a, true);
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rank(&BinaryMatrix::zeros(8, 8)), 0);
        assert_eq!(rank(&BinaryMatrix::identity(70)), 70);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel(&BinaryMatrix::identity(4)).is_empty());
        assert_eq!(kernel(&BinaryMatrix::zeros(4, 4)).len(), 4);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = BinaryVector::from_bits(&[true, false, true, true]);
        assert_eq!(solve(&BinaryMatrix::identity(4), &b), Some(b.clone()));
        assert_eq!(solve(&BinaryMatrix::zeros(4, 4), &b), None);
    }

    #[test]
    fn single_hyperbolic_pair() {
        let omega = BinaryMatrix::from_strs(&["01", "10"]);
        let lambda = SymplecticForm::standard(1);
        let p = realize_commutation_matrix(&omega, &lambda).unwrap();
        assert!(lambda.eval(&p.column(0), &p.column(1)));
    }

    #[test]
    fn rejects_rank_mismatch_and_diagonal() {
        let omega = BinaryMatrix::from_strs(&["01", "10"]);
        assert!(matches!(
            realize_commutation_matrix(&omega, &SymplecticForm::standard(2)),
            Err(F2Error::RankMismatch { .. })
        ));
        let bad = BinaryMatrix::from_strs(&["11", "10"]);
        assert_eq!(realize_commutation_matrix(&bad, &SymplecticForm::standard(1)), Err(F2Error::NotSkew));
    }

    #[test]
    fn row_space_express_recovers_combination() {
        let vs = [
            BinaryVector::from_bits(&[true, true, false, false]),
            BinaryVector::from_bits(&[false, true, true, false]),
            BinaryVector::from_bits(&[true, false, true, false]),
            BinaryVector::from_bits(&[false, false, false, true]),
        ];
        let mut s = RowSpace::with_tracking(4, 4);
        for v in &vs {
            s.insert(v);
        }
        assert_eq!(s.dim(), 3);
        let target = vs[0].xor(&vs[3]);
        let idx = s.express(&target).unwrap();
        let mut acc = BinaryVector::zeros(4);
        for i in idx {
            acc.xor_assign(&vs[i]);
        }
        assert_eq!(acc, target);
    }

    #[test]
    fn small_word_rank() {
        assert_eq!(rank_of_words(&[0b11, 0b01, 0b10]), 2);
        assert_eq!(rank_of_words(&[0, 0]), 0);
    }
}
