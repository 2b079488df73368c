//! Exact integer and field linear algebra.
//!
//! Everything is dense and arbitrary precision: integer matrices hold
//! `BigInt` entries, field computations run over the rationals or a prime
//! field selected at runtime. There is no floating point anywhere.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows.iter().flatten().map(|&x| BigInt::from(x)).collect();
        IntegerMatrix { rows: r, cols: c, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut out = IntegerMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Matrix product, used by tests to verify identities like d∘d = 0.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let add = a * other.get(k, c);
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + add);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Smith normal form summary: the rank and the full divisor chain
/// `d1 | d2 | ... | d_rank` (units included).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SnfResult {
    pub rank: usize,
    pub divisors: Vec<BigInt>,
}

impl SnfResult {
    /// Divisors greater than one, i.e. the torsion coefficients.
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Smith normal form by minimal-pivot elimination.
///
/// Pivot selection is the minimal nonzero absolute value in the trailing
/// block, ties broken by smallest row then column, which makes the
/// computation reproducible. After clearing a pivot row/column the trailing
/// block is folded back in until the pivot divides everything that remains,
/// so the diagonal comes out as a divisibility chain.
pub fn smith_normal_form(m: &IntegerMatrix) -> SnfResult {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let limit = rows.min(cols);
    let mut k = 0;

    while k < limit {
        let Some((pr, pc)) = min_pivot(&a, k) else { break };
        swap_rows(&mut a, k, pr);
        swap_cols(&mut a, k, pc);

        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if !a.get(i, k).is_zero() {
                    let q = a.get(i, k) / a.get(k, k);
                    if !q.is_zero() {
                        row_sub(&mut a, i, k, &q);
                    }
                    if !a.get(i, k).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                if !a.get(k, j).is_zero() {
                    let q = a.get(k, j) / a.get(k, k);
                    if !q.is_zero() {
                        col_sub(&mut a, j, k, &q);
                    }
                    if !a.get(k, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // Residues smaller than the pivot appeared; re-pivot.
                let (pr, pc) = min_pivot(&a, k).expect("nonzero block");
                swap_rows(&mut a, k, pr);
                swap_cols(&mut a, k, pc);
                continue;
            }
            match non_divisible_entry(&a, k) {
                Some(i) => {
                    row_add(&mut a, k, i);
                }
                None => break,
            }
        }
        k += 1;
    }

    let divisors: Vec<BigInt> = (0..k).map(|i| a.get(i, i).abs()).collect();
    SnfResult { rank: k, divisors }
}

fn min_pivot(a: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in k..a.rows {
        for c in k..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((_, _, m)) if *m <= mag => {}
                _ => best = Some((r, c, mag)),
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn non_divisible_entry(a: &IntegerMatrix, k: usize) -> Option<usize> {
    let pivot = a.get(k, k).clone();
    for r in k + 1..a.rows {
        for c in k + 1..a.cols {
            if !(a.get(r, c) % &pivot).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

fn swap_rows(a: &mut IntegerMatrix, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for c in 0..a.cols {
        let x = a.get(r1, c).clone();
        let y = a.get(r2, c).clone();
        a.set(r1, c, y);
        a.set(r2, c, x);
    }
}

fn swap_cols(a: &mut IntegerMatrix, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for r in 0..a.rows {
        let x = a.get(r, c1).clone();
        let y = a.get(r, c2).clone();
        a.set(r, c1, y);
        a.set(r, c2, x);
    }
}

/// row[i] -= q * row[k]
fn row_sub(a: &mut IntegerMatrix, i: usize, k: usize, q: &BigInt) {
    for c in 0..a.cols {
        let delta = q * a.get(k, c);
        let cur = a.get(i, c).clone();
        a.set(i, c, cur - delta);
    }
}

/// col[j] -= q * col[k]
fn col_sub(a: &mut IntegerMatrix, j: usize, k: usize, q: &BigInt) {
    for r in 0..a.rows {
        let delta = q * a.get(r, k);
        let cur = a.get(r, j).clone();
        a.set(r, j, cur - delta);
    }
}

/// row[k] += row[i]
fn row_add(a: &mut IntegerMatrix, k: usize, i: usize) {
    for c in 0..a.cols {
        let add = a.get(i, c).clone();
        let cur = a.get(k, c).clone();
        a.set(k, c, cur + add);
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A coefficient field with runtime-selected arithmetic.
pub trait FieldOps: Clone + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; callers guarantee `a` is nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn embed_bigint(&self, n: &BigInt) -> Self::Elem;

    fn embed_i64(&self, n: i64) -> Self::Elem {
        self.embed_bigint(&BigInt::from(n))
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl FieldOps for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn embed_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
}

/// The prime field Z/p with elements reduced to `0..p`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(Error::CompositeModulus(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + (self.p - *b) as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Extended Euclid on signed 128-bit words.
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, *a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        debug_assert_eq!(r, 1);
        t.rem_euclid(self.p as i128) as u64
    }
    fn embed_bigint(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let m = n.mod_floor(&p);
        let (_, digits) = m.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }
}

/// Dense matrix over a runtime field.
#[derive(Clone, PartialEq, Debug)]
pub struct FieldMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Clone> FieldMatrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        FieldMatrix { rows, cols, entries: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> Vec<T> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
}

/// Extracts the submatrix on the given row and column indices.
pub fn submatrix<F: FieldOps>(
    m: &FieldMatrix<F::Elem>,
    rows: &[usize],
    cols: &[usize],
    field: &F,
) -> FieldMatrix<F::Elem> {
    let mut out = FieldMatrix::filled(rows.len(), cols.len(), field.zero());
    for (ri, &r) in rows.iter().enumerate() {
        for (ci, &c) in cols.iter().enumerate() {
            out.set(ri, ci, m.get(r, c).clone());
        }
    }
    out
}

pub fn to_field_matrix<F: FieldOps>(m: &IntegerMatrix, field: &F) -> FieldMatrix<F::Elem> {
    let mut out = FieldMatrix::filled(m.rows(), m.cols(), field.zero());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r, c, field.embed_bigint(m.get(r, c)));
        }
    }
    out
}

/// Matrix-vector product over a field.
pub fn apply<F: FieldOps>(m: &FieldMatrix<F::Elem>, v: &[F::Elem], field: &F) -> Vec<F::Elem> {
    assert_eq!(m.cols(), v.len(), "dimension mismatch in apply");
    (0..m.rows())
        .map(|r| {
            let mut acc = field.zero();
            for (c, x) in v.iter().enumerate() {
                if !field.is_zero(m.get(r, c)) && !field.is_zero(x) {
                    acc = field.add(&acc, &field.mul(m.get(r, c), x));
                }
            }
            acc
        })
        .collect()
}

/// In-place reduction to reduced row echelon form; returns (pivot row, pivot
/// column) pairs in elimination order. Pivoting scans columns left to right
/// and takes the first nonzero row, so the result is deterministic.
fn rref<F: FieldOps>(m: &mut FieldMatrix<F::Elem>, field: &F) -> Vec<(usize, usize)> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for col in 0..m.cols() {
        let Some(src) = (next_row..m.rows()).find(|&r| !field.is_zero(m.get(r, col))) else {
            continue;
        };
        if src != next_row {
            for c in 0..m.cols() {
                let a = m.get(src, c).clone();
                let b = m.get(next_row, c).clone();
                m.set(src, c, b);
                m.set(next_row, c, a);
            }
        }
        let inv = field.inv(m.get(next_row, col));
        for c in 0..m.cols() {
            let v = field.mul(m.get(next_row, c), &inv);
            m.set(next_row, c, v);
        }
        for r in 0..m.rows() {
            if r != next_row && !field.is_zero(m.get(r, col)) {
                let factor = m.get(r, col).clone();
                for c in 0..m.cols() {
                    let v = field.sub(m.get(r, c), &field.mul(&factor, m.get(next_row, c)));
                    m.set(r, c, v);
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == m.rows() {
            break;
        }
    }
    pivots
}

pub fn field_rank<F: FieldOps>(m: &FieldMatrix<F::Elem>, field: &F) -> usize {
    let mut work = m.clone();
    rref(&mut work, field).len()
}

/// Rank of an integer matrix over Q (`p = 0`) or over Z/p for a prime `p`.
pub fn rank_mod_p(m: &IntegerMatrix, p: u64) -> Result<usize> {
    if p == 0 {
        let field = Rationals;
        Ok(field_rank(&to_field_matrix(m, &field), &field))
    } else {
        let field = PrimeField::new(p)?;
        Ok(field_rank(&to_field_matrix(m, &field), &field))
    }
}

/// Basis of the kernel of `m` acting on column vectors. One basis vector per
/// free column, produced in ascending column order from the reduced echelon
/// form, so the output is canonical.
pub fn nullspace_basis<F: FieldOps>(
    m: &FieldMatrix<F::Elem>,
    field: &F,
) -> Vec<Vec<F::Elem>> {
    let mut work = m.clone();
    let pivots = rref(&mut work, field);
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); m.cols()];
        v[free] = field.one();
        for &(r, c) in &pivots {
            v[c] = field.neg(work.get(r, free));
        }
        basis.push(v);
    }
    basis
}

/// A maximal independent subset of the columns of `m`, scanning left to
/// right.
pub fn column_space_basis<F: FieldOps>(
    m: &FieldMatrix<F::Elem>,
    field: &F,
) -> Vec<Vec<F::Elem>> {
    let mut echelon = EchelonBasis::new(m.rows(), field.clone());
    let mut basis = Vec::new();
    for c in 0..m.cols() {
        let col = m.column(c);
        if echelon.insert(col.clone()) {
            basis.push(col);
        }
    }
    basis
}

/// Membership of `target` in the span of `vectors`.
pub fn in_span<F: FieldOps>(
    vectors: &[Vec<F::Elem>],
    target: &[F::Elem],
    field: &F,
) -> Result<bool> {
    let dim = target.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != dim) {
        return Err(Error::DimensionMismatch(format!(
            "span vector has length {}, target has length {}",
            bad.len(),
            dim
        )));
    }
    let mut echelon = EchelonBasis::new(dim, field.clone());
    for v in vectors {
        echelon.insert(v.clone());
    }
    Ok(echelon.contains(target))
}

/// Incrementally maintained Gauss-Jordan basis of a subspace.
///
/// Stored vectors have leading coefficient one at distinct pivot positions
/// and zeros at every other pivot, so `reduce` returns a canonical coset
/// representative: two vectors are congruent modulo the subspace iff their
/// reductions are equal.
#[derive(Clone)]
pub struct EchelonBasis<F: FieldOps> {
    field: F,
    dim: usize,
    // (pivot index, normalized vector), kept sorted by pivot.
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: FieldOps> EchelonBasis<F> {
    pub fn new(dim: usize, field: F) -> Self {
        EchelonBasis { field, dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Canonical residue of `v` modulo the current span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.dim, "dimension mismatch in reduce");
        let mut out = v.to_vec();
        for (pivot, base) in &self.rows {
            let coef = out[*pivot].clone();
            if self.field.is_zero(&coef) {
                continue;
            }
            for i in 0..self.dim {
                let delta = self.field.mul(&coef, &base[i]);
                out[i] = self.field.sub(&out[i], &delta);
            }
        }
        out
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns false when `v` was already in it.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        let mut reduced = self.reduce(&v);
        let Some(pivot) = reduced.iter().position(|x| !self.field.is_zero(x)) else {
            return false;
        };
        let inv = self.field.inv(&reduced[pivot]);
        for x in reduced.iter_mut() {
            *x = self.field.mul(x, &inv);
        }
        // Keep earlier rows reduced against the new pivot.
        for (_, base) in self.rows.iter_mut() {
            let coef = base[pivot].clone();
            if self.field.is_zero(&coef) {
                continue;
            }
            for i in 0..self.dim {
                let delta = self.field.mul(&coef, &reduced[i]);
                base[i] = self.field.sub(&base[i], &delta);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, reduced));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntegerMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 2);
        assert_eq!(snf.divisors, vec![big(1), big(6)]);
    }

    #[test]
    fn snf_zero_matrix() {
        let m = IntegerMatrix::zeros(3, 3);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 0);
        assert!(snf.divisors.is_empty());
    }

    #[test]
    fn snf_known_4x4() {
        let m = IntegerMatrix::from_rows(&[
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.rank, 3);
        assert_eq!(snf.divisors, vec![big(1), big(3), big(21)]);
    }

    #[test]
    fn rank_mod_p_on_even_entry() {
        let m = IntegerMatrix::from_rows(&[vec![2]]);
        assert_eq!(rank_mod_p(&m, 2).unwrap(), 0);
        assert_eq!(rank_mod_p(&m, 0).unwrap(), 1);
    }

    #[test]
    fn rank_rejects_composite_modulus() {
        let m = IntegerMatrix::from_rows(&[vec![1]]);
        assert!(matches!(rank_mod_p(&m, 6), Err(Error::CompositeModulus(6))));
    }

    #[test]
    fn nullspace_of_identity_and_zero() {
        let q = Rationals;
        let ident = to_field_matrix(&IntegerMatrix::from_rows(&[vec![1, 0], vec![0, 1]]), &q);
        assert!(nullspace_basis(&ident, &q).is_empty());

        let zero = to_field_matrix(&IntegerMatrix::zeros(1, 3), &q);
        assert_eq!(nullspace_basis(&zero, &q).len(), 3);
    }

    #[test]
    fn in_span_examples() {
        let q = Rationals;
        let e1 = vec![q.embed_i64(1), q.embed_i64(0)];
        assert!(in_span(std::slice::from_ref(&e1), &[q.embed_i64(2), q.embed_i64(0)], &q).unwrap());
        assert!(!in_span(&[e1], &[q.embed_i64(0), q.embed_i64(1)], &q).unwrap());

        let f2 = PrimeField::new(2).unwrap();
        let ones = vec![1u64, 1u64];
        assert!(in_span(&[ones], &[1u64, 1u64], &f2).unwrap());
        // (1,-1) == (1,1) mod 2.
        let target = vec![f2.embed_i64(1), f2.embed_i64(-1)];
        assert!(in_span(&[vec![1u64, 1u64]], &target, &f2).unwrap());
    }

    #[test]
    fn in_span_rejects_mismatched_dimensions() {
        let q = Rationals;
        let v = vec![q.embed_i64(1)];
        assert!(in_span(&[v], &[q.embed_i64(1), q.embed_i64(0)], &q).is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f7 = PrimeField::new(7).unwrap();
        for a in 1..7u64 {
            assert_eq!(f7.mul(&a, &f7.inv(&a)), 1);
        }
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(9).is_err());
    }

    #[test]
    fn echelon_reduction_is_canonical() {
        let q = Rationals;
        let mut ech = EchelonBasis::new(3, q);
        assert!(ech.insert(vec![q.embed_i64(1), q.embed_i64(2), q.embed_i64(0)]));
        assert!(ech.insert(vec![q.embed_i64(0), q.embed_i64(1), q.embed_i64(1)]));
        assert!(!ech.insert(vec![q.embed_i64(1), q.embed_i64(3), q.embed_i64(1)]));
        let r1 = ech.reduce(&[q.embed_i64(2), q.embed_i64(7), q.embed_i64(3)]);
        let r2 = ech.reduce(&r1);
        assert_eq!(r1, r2);
    }

    fn random_unimodular(seed: &[i8; 6], size: usize) -> IntegerMatrix {
        // Product of elementary operations keeps the determinant +-1.
        let mut m = IntegerMatrix::zeros(size, size);
        for i in 0..size {
            m.set(i, i, BigInt::from(1));
        }
        for (idx, &s) in seed.iter().enumerate() {
            let i = idx % size;
            let j = (idx + 1) % size;
            if i != j {
                // row_i += s * row_j
                for c in 0..size {
                    let add = BigInt::from(s as i64) * m.get(j, c);
                    let cur = m.get(i, c).clone();
                    m.set(i, c, cur + add);
                }
            }
        }
        m
    }

    proptest! {
        #[test]
        fn snf_invariant_under_unimodular_multiplication(
            entries in proptest::collection::vec(-5i64..=5, 9),
            lseed in proptest::array::uniform6(-2i8..=2),
            rseed in proptest::array::uniform6(-2i8..=2),
        ) {
            let m = IntegerMatrix::from_rows(&[
                entries[0..3].to_vec(),
                entries[3..6].to_vec(),
                entries[6..9].to_vec(),
            ]);
            let u = random_unimodular(&lseed, 3);
            let v = random_unimodular(&rseed, 3);
            let transformed = u.mul(&m).mul(&v);
            prop_assert_eq!(smith_normal_form(&transformed), smith_normal_form(&m));
        }

        #[test]
        fn rank_relations_hold(
            entries in proptest::collection::vec(-6i64..=6, 12),
            p in prop_oneof![Just(2u64), Just(3), Just(5)],
        ) {
            let m = IntegerMatrix::from_rows(&[
                entries[0..4].to_vec(),
                entries[4..8].to_vec(),
                entries[8..12].to_vec(),
            ]);
            let snf = smith_normal_form(&m);
            prop_assert_eq!(rank_mod_p(&m, 0).unwrap(), snf.rank);
            let killed = snf
                .divisors
                .iter()
                .filter(|d| (*d % BigInt::from(p)).is_zero())
                .count();
            prop_assert_eq!(rank_mod_p(&m, p).unwrap(), snf.rank - killed);

            // Nullity + rank = columns, over Q and over Z/p.
            let q = Rationals;
            let nq = nullspace_basis(&to_field_matrix(&m, &q), &q).len();
            prop_assert_eq!(nq + snf.rank, m.cols());
            let fp = PrimeField::new(p).unwrap();
            let np = nullspace_basis(&to_field_matrix(&m, &fp), &fp).len();
            prop_assert_eq!(np + rank_mod_p(&m, p).unwrap(), m.cols());
        }
    }
}
