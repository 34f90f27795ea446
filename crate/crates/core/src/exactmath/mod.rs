//! Exact integer and rational scalars, vectors and matrices.
//!
//! Everything here is arbitrary precision. The lattice algorithms (Hermite and
//! Smith normal forms, integer kernels, determinants) live in [`lattice`].

pub mod lattice;

use std::fmt;
use std::ops::{Deref, Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use lattice::{
    affine_lattice_coordinates, determinant, hermite_column_form, kernel_lattice_basis, lattice_span_is_full, rank,
    smith_normal_form, HermiteForm, SmithForm,
};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Reduced rational with positive denominator.
pub type Rat = num_rational::BigRational;

/// Integer column vector of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec(Vec<Int>);

impl IntVec {
    pub fn new(entries: Vec<Int>) -> Self {
        IntVec(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zeros(d: usize) -> Self {
        IntVec(vec![Int::zero(); d])
    }

    /// The `i`-th standard unit vector (0-based) of length `d`.
    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = Self::zeros(d);
        v.0[i] = Int::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Int> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        IntVec(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, other: &Self) -> Int {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    /// Indices (0-based) of nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn sum(&self) -> Int {
        self.0.iter().sum()
    }

    /// Gcd of the absolute values of the entries (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    /// Divides out the content; the zero vector is returned unchanged.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntVec(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }
}

impl Deref for IntVec {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl Index<usize> for IntVec {
    type Output = Int;
    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl IndexMut<usize> for IntVec {
    fn index_mut(&mut self, i: usize) -> &mut Int {
        &mut self.0[i]
    }
}

impl From<Vec<Int>> for IntVec {
    fn from(v: Vec<Int>) -> Self {
        IntVec(v)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Splits `a` into `(a⁺, a⁻)` with `a = a⁺ - a⁻`, both nonnegative with disjoint supports.
pub fn positive_negative_parts(a: &IntVec) -> (IntVec, IntVec) {
    let plus = a.iter().map(|x| if x.is_positive() { x.clone() } else { Int::zero() });
    let minus = a.iter().map(|x| if x.is_negative() { -x } else { Int::zero() });
    (IntVec(plus.collect()), IntVec(minus.collect()))
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![Int::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                got: bad.len(),
            });
        }
        Ok(IntMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for tests and literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors, each of length `d`.
    pub fn from_columns(d: usize, columns: &[IntVec]) -> Self {
        let mut m = Self::zeros(d, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), d, "column length");
            for i in 0..d {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> IntVec {
        IntVec(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVec {
        IntVec((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "inner dimensions");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &IntVec) -> IntVec {
        assert_eq!(self.cols, v.len(), "vector length");
        IntVec(
            (0..self.rows)
                .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
                .collect(),
        )
    }

    /// Appends a row of ones (the homogenizing coordinate).
    pub fn homogenized(&self) -> IntMat {
        let mut data = self.data.clone();
        data.extend(std::iter::repeat_n(Int::one(), self.cols));
        IntMat {
            rows: self.rows + 1,
            cols: self.cols,
            data,
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    pub(crate) fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.data[source * self.cols + j] * factor;
            self.data[target * self.cols + j] += s;
        }
    }

    /// `col[target] += factor * col[source]`
    pub(crate) fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.data[i * self.cols + source] * factor;
            self.data[i * self.cols + target] += s;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// Parses the text format: a `rows cols` header followed by `rows` lines of integers.
    pub fn parse_text(text: &str) -> Result<IntMat> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `rows cols` header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad header token `{t}`"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::Parse(format!("header must be `rows cols`, got `{header}`")));
        };
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {rows} rows, found {r}")))?;
            let row: Vec<Int> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::Parse(format!(
                    "row {} has {} entries, expected {cols}",
                    r + 1,
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(IntMat { rows, cols, data })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        &mut self.data[i * self.cols + j]
    }
}

/// Formats a rational as `p/q`, always with an explicit denominator.
pub fn rat_to_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: Int = p.trim().parse().map_err(|_| bad())?;
            let q: Int = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_examples() {
        let (p, m) = positive_negative_parts(&IntVec::from_i64(&[1, -2, 0]));
        assert_eq!(p, IntVec::from_i64(&[1, 0, 0]));
        assert_eq!(m, IntVec::from_i64(&[0, 2, 0]));
        let (p, m) = positive_negative_parts(&IntVec::from_i64(&[0, 0]));
        assert!(p.is_zero() && m.is_zero());
        let (p, m) = positive_negative_parts(&IntVec::from_i64(&[3, 5]));
        assert_eq!(p, IntVec::from_i64(&[3, 5]));
        assert!(m.is_zero());
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = IntMat::from_i64(&[&[1, 0, 1], &[0, -1, 12]]);
        let text = m.to_text();
        assert_eq!(text, "2 3\n1 0 1\n0 -1 12\n");
        assert_eq!(IntMat::parse_text(&text).unwrap(), m);
    }

    #[test]
    fn matrix_text_errors() {
        assert!(IntMat::parse_text("").is_err());
        assert!(IntMat::parse_text("2 2\n1 0\n").is_err());
        assert!(IntMat::parse_text("1 2\n1 x\n").is_err());
        assert!(IntMat::parse_text("1 2\n1 2 3\n").is_err());
    }

    #[test]
    fn rationals_print_reduced() {
        let r = Rat::new(Int::from(4), Int::from(-6));
        assert_eq!(rat_to_string(&r), "-2/3");
        assert_eq!(parse_rat("-2/3").unwrap(), r);
        assert_eq!(parse_rat("5").unwrap(), Rat::from_integer(Int::from(5)));
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn primitive_divides_content() {
        let v = IntVec::from_i64(&[4, -6, 0]);
        assert_eq!(v.content(), Int::from(2));
        assert_eq!(v.primitive(), IntVec::from_i64(&[2, -3, 0]));
    }
}
