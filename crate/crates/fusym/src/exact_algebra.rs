//! Exact scalars and dense exact linear algebra.
//!
//! The scalar types are [`Rat`] (arbitrary-precision rationals) and
//! [`RatFunc`] (univariate rational functions over the rationals, kept in
//! lowest terms with a monic denominator).  Both implement the [`Field`]
//! trait, over which the dense [`Matrix`] type and the symmetric-group
//! algebra [`GroupAlgebra`] are generic.  No floating point appears anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use crate::{Error, Result};

/// Arbitrary-precision rational number, the base scalar of the crate.
pub type Rat = BigRational;

/// The integer `n` as a [`Rat`].
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// The fraction `p/q` as a [`Rat`].  Panics if `q == 0`.
pub fn ratq(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A field with exact arithmetic.
///
/// Methods take references so that implementations over heap-allocated
/// scalars avoid needless clones.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// The canonical embedding of the rationals into this field.
    fn from_rat(r: &Rat) -> Self;
}

impl Field for Rat {
    fn zero() -> Self {
        <Rat as num::traits::Zero>::zero()
    }
    fn one() -> Self {
        <Rat as num::traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as num::traits::Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if <Rat as num::traits::Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending order of degree with no trailing
/// zeros; the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![rat(0), rat(1)])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(|| rat(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; panics on the zero polynomial.
    pub fn leading(&self) -> &Rat {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = rat(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![rat(0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics if `divisor` is zero (internal use only).
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead_inv = divisor.leading().recip();
        let mut rem = self.clone();
        let mut quot = vec![rat(0); self.coeffs.len().saturating_sub(dd)];
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let factor = rem.leading() * &lead_inv;
            let shift = dr - dd;
            quot[shift] = factor.clone();
            // rem -= factor * x^shift * divisor
            let mut coeffs = rem.coeffs;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &factor * b;
            }
            rem = Poly::from_coeffs(coeffs);
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Scale so that the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            Poly::zero()
        } else {
            self.scale(&self.leading().recip())
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    ///
    /// Remainders are renormalised to monic at every step, which keeps the
    /// rational coefficients small for the degrees arising here.
    pub fn gcd_monic(a: &Poly, b: &Poly) -> Poly {
        let mut f = a.monic();
        let mut g = b.monic();
        while !g.is_zero() {
            let (_, r) = f.divrem(&g);
            f = g;
            g = r.monic();
        }
        f
    }

    /// Substitute `x := a*x + b`.
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> Poly {
        let inner = Poly::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner).add(&Poly::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rational functions
// ---------------------------------------------------------------------------

/// Univariate rational function over the rationals.
///
/// Invariants: the denominator is nonzero and monic, and numerator and
/// denominator are coprime.  The indeterminate is anonymous; by convention
/// it is called `ε` in fusion limits and `x` in Yangian series.
#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Build `num/den`, normalising to lowest terms with monic denominator.
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalised(num, den))
    }

    fn normalised(num: Poly, den: Poly) -> RatFunc {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd_monic(&num, &den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lead_inv = den.leading().recip();
        RatFunc {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> RatFunc {
        RatFunc::from_poly(Poly::constant(c))
    }

    /// The identity function `x`.
    pub fn x() -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.degree().map_or(true, |d| d == 0) && self.den.degree() == Some(0)
    }

    /// The constant value, if this function is constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Evaluate at a rational point; [`Error::PoleAt`] at a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleAt(x.to_string()));
        }
        Ok(self.num.eval(x) / d)
    }

    /// The value at zero, or [`Error::NotRegular`] if zero is a pole.
    ///
    /// Because the representation is in lowest terms, the denominator
    /// vanishing at zero means a genuine pole, not a removable singularity.
    pub fn regular_limit_at_zero(&self) -> Result<Rat> {
        let d = self.den.eval(&rat(0));
        if d.is_zero() {
            return Err(Error::NotRegular);
        }
        Ok(self.num.eval(&rat(0)) / d)
    }

    /// The value at infinity: `0` if the numerator degree is smaller, the
    /// ratio of leading coefficients if the degrees agree, `None` if the
    /// function diverges.
    pub fn value_at_infinity(&self) -> Option<Rat> {
        if self.num.is_zero() {
            return Some(rat(0));
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => Some(rat(0)),
            std::cmp::Ordering::Equal => Some(self.num.leading() / self.den.leading()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Substitute `x := a*x + b` (requires `a != 0` to stay a function of
    /// the same kind; not checked).
    pub fn compose_linear(&self, a: &Rat, b: &Rat) -> RatFunc {
        Self::normalised(
            self.num.compose_linear(a, b),
            self.den.compose_linear(a, b),
        )
    }

    /// Coefficients of the expansion at infinity in powers of `1/x`:
    /// entry `m` is the coefficient of `x^{-m}`, for `m = 0..=order`.
    ///
    /// Errors with [`Error::NotRegular`] if the function diverges at
    /// infinity.
    pub fn series_at_infinity(&self, order: usize) -> Result<Vec<Rat>> {
        if self.num.is_zero() {
            return Ok(vec![rat(0); order + 1]);
        }
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        if dn > dd {
            return Err(Error::NotRegular);
        }
        let shift = dd - dn;
        // In the variable u = 1/x the function becomes
        //   u^shift * (reversed numerator)(u) / (reversed denominator)(u),
        // and the reversed denominator has nonzero constant term, so an
        // ordinary power-series division applies.
        let a: Vec<Rat> = self.num.coeffs.iter().rev().cloned().collect();
        let b: Vec<Rat> = self.den.coeffs.iter().rev().cloned().collect();
        let b0_inv = b[0].recip();
        let mut c = Vec::with_capacity(order + 1);
        for m in 0..=order {
            let mut acc = a.get(m).cloned().unwrap_or_else(|| rat(0));
            for k in 1..=m.min(b.len() - 1) {
                acc -= &b[k] * &c[m - k];
            }
            c.push(acc * &b0_inv);
        }
        let mut out = vec![rat(0); order + 1];
        for (m, slot) in out.iter_mut().enumerate().take(order + 1).skip(shift) {
            *slot = c[m - shift].clone();
        }
        Ok(out)
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Self::normalised(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        Self::normalised(self.num.mul(&other.num), self.den.mul(&other.den))
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalised(self.den.clone(), self.num.clone()))
        }
    }
    fn from_rat(r: &Rat) -> Self {
        RatFunc::constant(r.clone())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

/// Dense matrix over an exact field, stored row-major.
///
/// Vectors are columns throughout the crate; subspaces are represented by
/// matrices whose columns form a basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    /// Lift a rational matrix into this field entrywise.
    pub fn lift(m: &Matrix<Rat>) -> Self {
        Matrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|v| F::from_rat(v)).collect(),
        }
    }

    pub fn map<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| f(v)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Matrix product.  Zero entries on either side are skipped, so products
    /// with the sparse permutation/contraction operators stay cheap.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out: Matrix<F> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product; the left factor is the most significant index,
    /// matching the row-major tensor basis convention.
    pub fn kron(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zero(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the list of pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot entry is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the kernel, as the columns of the returned matrix (which has
    /// zero columns when the kernel is trivial).
    pub fn kernel_basis(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, F::one());
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, r.get(i, fc).neg());
            }
        }
        out
    }

    /// Inverse, or `None` when singular.  Only for square matrices.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Solve `self * X = rhs`; `None` when inconsistent.  With free columns
    /// the particular solution with vanishing free variables is returned.
    pub fn solve(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        // With free columns present the candidate must be verified.
        if pivots.len() < self.cols && self.mul(&x) != *rhs {
            return None;
        }
        Some(x)
    }

    /// Basis of the column space: the pivot columns of this matrix.
    pub fn column_space_basis(&self) -> Matrix<F> {
        let (_, pivots) = self.rref();
        Matrix::from_fn(self.rows, pivots.len(), |r, k| self.get(r, pivots[k]).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// The column `c` as an `rows x 1` matrix.
    pub fn column(&self, c: usize) -> Matrix<F> {
        Matrix::from_fn(self.rows, 1, |r, _| self.get(r, c).clone())
    }

    /// Submatrix of the given row and column ranges.
    pub fn submatrix(
        &self,
        row_start: usize,
        row_len: usize,
        col_start: usize,
        col_len: usize,
    ) -> Matrix<F> {
        Matrix::from_fn(row_len, col_len, |r, c| {
            self.get(row_start + r, col_start + c).clone()
        })
    }
}

impl Matrix<RatFunc> {
    /// Evaluate every entry at the rational point `x`.
    pub fn eval_at(&self, x: &Rat) -> Result<Matrix<Rat>> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            data.push(v.eval(x)?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Apply [`RatFunc::regular_limit_at_zero`] entrywise.
    pub fn limit_at_zero(&self) -> Result<Matrix<Rat>> {
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            data.push(v.regular_limit_at_zero()?);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }
}

impl<F: Field> fmt::Display for Matrix<F>
where
    F: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Permutations and the symmetric-group algebra
// ---------------------------------------------------------------------------

/// Permutation of `{0, .., n-1}`, stored as the image vector.
///
/// Composition is `(s.compose(t))(k) = s(t(k))`, i.e. `t` acts first.  The
/// `Display` form uses one-based cycle notation, with `id` for the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// The transposition of `i` and `j` (zero-based) in the symmetric group
    /// on `n` letters.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n && i != j, "bad transposition ({i} {j}) in S_{n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Perm { images }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation image vector: {images:?}"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` after `other`: `(self.compose(other))(k) = self(other(k))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Perm { images }
    }

    /// Sign of the permutation: `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Extend to a permutation of `{0, .., m-1}` fixing the new letters.
    pub fn extend(&self, m: usize) -> Perm {
        assert!(m >= self.n());
        let mut images = self.images.clone();
        images.extend(self.n()..m);
        Perm { images }
    }

    /// Shift all letters up by `m`, acting as the identity on `{0, .., m-1}`.
    pub fn shift(&self, m: usize) -> Perm {
        let mut images: Vec<usize> = (0..m).collect();
        images.extend(self.images.iter().map(|&v| v + m));
        Perm { images }
    }

    /// All permutations of `n` letters in lexicographic order of image
    /// vectors (so the identity comes first).
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if current.len() == n {
                out.push(Perm {
                    images: current.clone(),
                });
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
        let mut out = Vec::new();
        rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    /// Nontrivial cycles, each starting from its smallest element, ordered
    /// by smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.images[k];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", v + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Element of the group algebra of the symmetric group on `n` letters over
/// the field `F`, stored as a sorted term map for deterministic iteration.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebra<F: Field> {
    n: usize,
    terms: BTreeMap<Perm, F>,
}

impl<F: Field> GroupAlgebra<F> {
    pub fn zero(n: usize) -> Self {
        GroupAlgebra {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: the identity permutation with coefficient one.
    pub fn one(n: usize) -> Self {
        GroupAlgebra::from_term(Perm::identity(n), F::one())
    }

    pub fn from_term(perm: Perm, coeff: F) -> Self {
        let n = perm.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(perm, coeff);
        }
        GroupAlgebra { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, perm: &Perm) -> F {
        self.terms.get(perm).cloned().unwrap_or_else(F::zero)
    }

    /// Coefficient of the identity permutation.
    pub fn identity_coefficient(&self) -> F {
        self.coeff(&Perm::identity(self.n))
    }

    fn insert_add(&mut self, perm: Perm, coeff: F) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&perm) {
            Some(slot) => {
                let v = slot.add(&coeff);
                if v.is_zero() {
                    self.terms.remove(&perm);
                } else {
                    *slot = v;
                }
            }
            None => {
                self.terms.insert(perm, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert_add(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_by(&F::one().neg()))
    }

    pub fn scale_by(&self, c: &F) -> Self {
        if c.is_zero() {
            return GroupAlgebra::zero(self.n);
        }
        GroupAlgebra {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v.mul(c)))
                .collect(),
        }
    }

    /// Convolution product; the right factor acts first, matching
    /// [`Perm::compose`].
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = GroupAlgebra::zero(self.n);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.insert_add(s.compose(t), a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<G: Field>(&self, mut f: impl FnMut(&F) -> G) -> GroupAlgebra<G> {
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                terms.insert(p.clone(), v);
            }
        }
        GroupAlgebra { n: self.n, terms }
    }

    /// Push every permutation through `f` (an injective group map such as a
    /// shift), keeping coefficients.
    pub fn map_perms(&self, mut f: impl FnMut(&Perm) -> Perm) -> GroupAlgebra<F> {
        let mut out: Option<GroupAlgebra<F>> = None;
        for (p, c) in &self.terms {
            let q = f(p);
            let acc = out.get_or_insert_with(|| GroupAlgebra::zero(q.n()));
            acc.insert_add(q, c.clone());
        }
        out.unwrap_or_else(|| GroupAlgebra::zero(self.n))
    }

    /// Matrix of the action on the `n`-fold tensor power of `C^N`, where a
    /// permutation moves the factor in slot `k` to slot `s(k)`.
    ///
    /// The basis is row-major: the leftmost tensor factor is the most
    /// significant digit.  The same matrices describe the action on the
    /// `n`-fold power of the dual space in its standard basis, so `dual`
    /// only records the caller's intent.
    pub fn act_on_tensor(&self, big_n: usize, dual: bool) -> Matrix<F> {
        let _ = dual;
        let n = self.n;
        let dim = big_n.pow(n as u32);
        let mut out: Matrix<F> = Matrix::zero(dim, dim);
        let mut digits = vec![0usize; n];
        for idx in 0..dim {
            decode_digits(idx, big_n, &mut digits);
            for (s, coeff) in &self.terms {
                let mut target = vec![0usize; n];
                for (k, &d) in digits.iter().enumerate() {
                    target[s.apply(k)] = d;
                }
                let tgt = encode_digits(&target, big_n);
                let v = out.get(tgt, idx).add(coeff);
                out.set(tgt, idx, v);
            }
        }
        out
    }
}

/// Decode `idx` into `digits.len()` base-`base` digits, most significant
/// first (row-major tensor index convention).
pub fn decode_digits(idx: usize, base: usize, digits: &mut [usize]) {
    let mut rem = idx;
    for slot in digits.iter_mut().rev() {
        *slot = rem % base;
        rem /= base;
    }
    debug_assert_eq!(rem, 0);
}

/// Inverse of [`decode_digits`].
pub fn encode_digits(digits: &[usize], base: usize) -> usize {
    let mut idx = 0usize;
    for &d in digits {
        debug_assert!(d < base);
        idx = idx * base + d;
    }
    idx
}

/// A small rational drawn from a seeded stream, used as a "generic" sample
/// point when checking rational identities numerically.  Numerators lie in
/// `[-12, 12]` and denominators in `[1, 4]`; callers reject and redraw any
/// sample that would hit a pole of the identity under test.
pub fn sample_rat(rng: &mut rand_chacha::ChaCha8Rng) -> Rat {
    use rand_chacha::rand_core::RngCore;
    let num = (rng.next_u64() % 25) as i64 - 12;
    let den = (rng.next_u64() % 4) as i64 + 1;
    ratq(num, den)
}

// ---------------------------------------------------------------------------
// Intertwiners and commutants
// ---------------------------------------------------------------------------

/// Basis of the space of matrices `X` with `X * A_i = B_i * X` for all `i`.
///
/// `gens_a` act on the source space, `gens_b` on the target, so each
/// solution maps source to target.  The two lists must have equal length
/// and consist of square matrices of fixed sizes.
pub fn solve_intertwiner<F: Field>(
    gens_a: &[Matrix<F>],
    gens_b: &[Matrix<F>],
) -> Result<Vec<Matrix<F>>> {
    if gens_a.len() != gens_b.len() {
        return Err(Error::SizeMismatch {
            left: gens_a.len(),
            right: gens_b.len(),
        });
    }
    let da = gens_a.first().map_or(0, |m| m.rows());
    let db = gens_b.first().map_or(0, |m| m.rows());
    for m in gens_a {
        if m.rows() != da || m.cols() != da {
            return Err(Error::SizeMismatch {
                left: m.rows(),
                right: da,
            });
        }
    }
    for m in gens_b {
        if m.rows() != db || m.cols() != db {
            return Err(Error::SizeMismatch {
                left: m.rows(),
                right: db,
            });
        }
    }
    // Row-major vectorisation: X*A corresponds to (I ⊗ A^T) vec X and B*X
    // to (B ⊗ I) vec X.
    let mut system: Option<Matrix<F>> = None;
    for (a, b) in gens_a.iter().zip(gens_b) {
        let block = Matrix::identity(db)
            .kron(&a.transpose())
            .sub(&b.kron(&Matrix::identity(da)));
        system = Some(match system {
            None => block,
            Some(s) => s.vstack(&block),
        });
    }
    let system = match system {
        Some(s) => s,
        None => return Ok(Vec::new()),
    };
    let kernel = system.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for k in 0..kernel.cols() {
        out.push(Matrix::from_fn(db, da, |r, c| {
            kernel.get(r * da + c, k).clone()
        }));
    }
    Ok(out)
}

/// Dimension of the algebra of matrices commuting with every generator.
pub fn commutant_dimension<F: Field>(gens: &[Matrix<F>]) -> Result<usize> {
    Ok(solve_intertwiner(gens, gens)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(
            Poly::from_coeffs(num.iter().map(|&c| rat(c)).collect()),
            Poly::from_coeffs(den.iter().map(|&c| rat(c)).collect()),
        )
        .unwrap()
    }

    #[test]
    fn poly_divrem_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = Poly::from_coeffs(vec![rat(-1), rat(0), rat(1)]);
        let d = Poly::from_coeffs(vec![rat(-1), rat(1)]);
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_coeffs(vec![rat(1), rat(1)]));
        let g = Poly::gcd_monic(&p, &d);
        assert_eq!(g, d.monic());
    }

    #[test]
    fn ratfunc_normalisation_cancels() {
        // ε/ε normalises to 1.
        let f = rf(&[0, 1], &[0, 1]);
        assert_eq!(f, RatFunc::one());
        // (2ε + 4)/(2) normalises with monic denominator.
    }

    #[test]
    fn ratfunc_eval_and_poles() {
        let f = rf(&[0, 0, 1], &[-1, 0, 1]); // x^2 / (x^2 - 1)
        assert_eq!(f.eval(&rat(2)).unwrap(), ratq(4, 3));
        assert_eq!(f.eval(&rat(1)), Err(Error::PoleAt("1".into())));
        assert_eq!(f.value_at_infinity(), Some(rat(1)));
        let g = rf(&[1], &[0, 1]); // 1/x
        assert_eq!(g.regular_limit_at_zero(), Err(Error::NotRegular));
        assert_eq!(g.value_at_infinity(), Some(rat(0)));
        // (ε + 2)/(ε + 1) -> 2 at ε = 0.
        let h = rf(&[2, 1], &[1, 1]);
        assert_eq!(h.regular_limit_at_zero().unwrap(), rat(2));
    }

    #[test]
    fn ratfunc_field_ops() {
        let f = rf(&[1], &[0, 1]); // 1/x
        let g = rf(&[0, 1], &[1]); // x
        let sum = f.add(&g); // (x^2 + 1)/x
        assert_eq!(sum, rf(&[1, 0, 1], &[0, 1]));
        let prod = f.mul(&g);
        assert_eq!(prod, RatFunc::one());
        assert_eq!(f.inv().unwrap(), g);
        assert!(RatFunc::zero().inv().is_none());
    }

    #[test]
    fn ratfunc_compose_linear() {
        // f(x) = x^2/(x^2 - 1); f(-x - 1) = (x+1)^2 / (x^2 + 2x)
        let f = rf(&[0, 0, 1], &[-1, 0, 1]);
        let g = f.compose_linear(&rat(-1), &rat(-1));
        assert_eq!(g, rf(&[1, 2, 1], &[0, 2, 1]));
    }

    #[test]
    fn ratfunc_series_at_infinity() {
        // 1/(x - 1) = x^{-1} + x^{-2} + x^{-3} + ...
        let f = rf(&[1], &[-1, 1]);
        let s = f.series_at_infinity(4).unwrap();
        assert_eq!(s, vec![rat(0), rat(1), rat(1), rat(1), rat(1)]);
        // (x - z - 1)/(x - z) with z = 2: 1 - x^{-1} - 2 x^{-2} - 4 x^{-3}
        let g = rf(&[-3, 1], &[-2, 1]);
        let s = g.series_at_infinity(3).unwrap();
        assert_eq!(s, vec![rat(1), rat(-1), rat(-2), rat(-4)]);
        // Divergent functions are rejected.
        assert_eq!(rf(&[0, 0, 1], &[0, 1]).series_at_infinity(2), Err(Error::NotRegular));
    }

    #[test]
    fn matrix_rank_kernel_inverse() {
        let a: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(1), rat(0), rat(1)],
        ]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert!(a.inverse().is_none());

        let b: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(2), rat(1)],
            vec![rat(1), rat(1)],
        ]);
        let binv = b.inverse().unwrap();
        assert_eq!(b.mul(&binv), Matrix::identity(2));
        assert_eq!(binv.mul(&b), Matrix::identity(2));
    }

    #[test]
    fn matrix_solve_and_column_space() {
        let a: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(1), rat(1)],
            vec![rat(0), rat(2)],
        ]);
        let x: Matrix<Rat> = Matrix::from_rows(vec![vec![rat(3)], vec![rat(-1)]]);
        let b = a.mul(&x);
        assert_eq!(a.solve(&b).unwrap(), x);
        // Inconsistent system.
        let bad = Matrix::from_rows(vec![vec![rat(1)], vec![rat(0)], vec![rat(0)]]);
        assert!(a.solve(&bad).is_none());
        let basis = a.column_space_basis();
        assert_eq!(basis.cols(), 2);
    }

    #[test]
    fn matrix_kron_convention() {
        // kron(E11, I2) acts on the most significant digit.
        let e00: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(0)],
        ]);
        let k = e00.kron(&Matrix::identity(2));
        for idx in 0..4 {
            let expect = if idx < 2 { rat(1) } else { rat(0) };
            assert_eq!(*k.get(idx, idx), expect);
        }
    }

    #[test]
    fn perm_basics() {
        let s = Perm::transposition(3, 0, 1);
        let t = Perm::transposition(3, 1, 2);
        // (s∘t)(2) = s(1) = 0
        assert_eq!(s.compose(&t).apply(2), 0);
        assert_eq!(s.sign(), -1);
        assert_eq!(s.compose(&t).sign(), 1);
        assert_eq!(format!("{}", Perm::identity(4)), "id");
        assert_eq!(format!("{}", Perm::transposition(2, 0, 1)), "(1 2)");
        let c = s.compose(&t); // 3-cycle
        assert_eq!(format!("{c}"), "(1 2 3)");
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(3)[0], Perm::identity(3));
        assert_eq!(s.inverse(), s);
    }

    #[test]
    fn perm_shift_and_extend() {
        let s = Perm::transposition(2, 0, 1);
        let shifted = s.shift(2);
        assert_eq!(shifted.apply(0), 0);
        assert_eq!(shifted.apply(2), 3);
        let ext = s.extend(4);
        assert_eq!(ext.apply(1), 0);
        assert_eq!(ext.apply(3), 3);
    }

    #[test]
    fn group_algebra_products() {
        // (1 + (12)) * (1 - (12)) = 0 and (1 + (12))^2 = 2 (1 + (12)).
        let one = GroupAlgebra::<Rat>::one(2);
        let swap = GroupAlgebra::from_term(Perm::transposition(2, 0, 1), rat(1));
        let sym = one.add(&swap).unwrap();
        let alt = one.sub(&swap).unwrap();
        assert!(sym.mul(&alt).unwrap().is_zero());
        assert_eq!(sym.mul(&sym).unwrap(), sym.scale_by(&rat(2)));
        assert_eq!(sym.identity_coefficient(), rat(1));
    }

    #[test]
    fn act_on_tensor_is_homomorphism() {
        let s = Perm::transposition(3, 0, 1);
        let t = Perm::transposition(3, 1, 2);
        let a = GroupAlgebra::<Rat>::from_term(s.clone(), rat(2));
        let b = GroupAlgebra::<Rat>::from_term(t.clone(), rat(3));
        let big_n = 2;
        let lhs = a.mul(&b).unwrap().act_on_tensor(big_n, false);
        let rhs = a
            .act_on_tensor(big_n, false)
            .mul(&b.act_on_tensor(big_n, false));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn act_on_tensor_swap_matrix() {
        // The transposition on two factors of C^2 is the 4x4 swap matrix.
        let swap = GroupAlgebra::<Rat>::from_term(Perm::transposition(2, 0, 1), rat(1))
            .act_on_tensor(2, false);
        let mut expect: Matrix<Rat> = Matrix::zero(4, 4);
        expect.set(0, 0, rat(1));
        expect.set(3, 3, rat(1));
        expect.set(1, 2, rat(1));
        expect.set(2, 1, rat(1));
        assert_eq!(swap, expect);
    }

    #[test]
    fn intertwiner_and_commutant() {
        // diag(1,2) and diag(2,1) are swapped by the flip.
        let a: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(1), rat(0)],
            vec![rat(0), rat(2)],
        ]);
        let b: Matrix<Rat> = Matrix::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), rat(1)],
        ]);
        let sols = solve_intertwiner(&[a.clone()], &[b.clone()]).unwrap();
        assert_eq!(sols.len(), 2);
        for x in &sols {
            assert_eq!(x.mul(&a), b.mul(x));
        }
        // Scalars 2 and 3 admit no nonzero intertwiner.
        let two: Matrix<Rat> = Matrix::identity(1).scale(&rat(2));
        let three: Matrix<Rat> = Matrix::identity(1).scale(&rat(3));
        assert!(solve_intertwiner(&[two], &[three]).unwrap().is_empty());
        // Commutant of the full matrix algebra is the scalars.
        let units: Vec<Matrix<Rat>> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut m = Matrix::zero(2, 2);
                m.set(i, j, rat(1));
                m
            })
            .collect();
        assert_eq!(commutant_dimension(&units).unwrap(), 1);
        assert_eq!(commutant_dimension(&[Matrix::<Rat>::identity(2)]).unwrap(), 4);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn prop_matrix_inverse_roundtrip(seed in 0u64..10_000) {
            // Small pseudorandom 4x4 rational matrices: either singular or
            // the inverse is two-sided.
            let mut state = seed;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                ((state >> 33) % 7) as i64 - 3
            };
            let m: Matrix<Rat> = Matrix::from_fn(4, 4, |_, _| rat(next()));
            match m.inverse() {
                Some(inv) => {
                    prop_assert_eq!(m.mul(&inv), Matrix::identity(4));
                    prop_assert_eq!(inv.mul(&m), Matrix::identity(4));
                }
                None => prop_assert!(m.rank() < 4),
            }
        }

        #[test]
        fn prop_ratfunc_field_axioms(a in -6i64..6, b in 1i64..5, c in -6i64..6) {
            // (p + q) * r == p*r + q*r for simple generated functions.
            let p = RatFunc::new(
                Poly::from_coeffs(vec![rat(a), rat(1)]),
                Poly::from_coeffs(vec![rat(b), rat(0), rat(1)]),
            ).unwrap();
            let q = RatFunc::constant(ratq(c, b));
            let r = RatFunc::x();
            let lhs = p.add(&q).mul(&r);
            let rhs = p.mul(&r).add(&q.mul(&r));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
