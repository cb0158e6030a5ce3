//! Dense complex matrices, row-major.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::{Complex, Error, Result};

#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                let z = self[(r, c)];
                write!(f, "{}{:+}i", z.re, z.im)?;
            }
        }
        write!(f, "]")
    }
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch("entry count differs from rows*cols"));
        }
        Ok(CMatrix { rows, cols, data })
    }

    /// Builds a matrix from equally long rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[Complex]>>(rows: &[R]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * ncols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        CMatrix {
            rows: rows.len(),
            cols: ncols,
            data,
        }
    }

    /// Real matrix from rows of `f64`.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_fn(rows.len(), ncols, |r, c| {
            Complex::new(rows[r].as_ref()[c], 0.0)
        })
    }

    pub fn from_diagonal(diag: &[Complex]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = *d;
        }
        m
    }

    /// Assembles a block matrix; every block in a block row shares its row
    /// count and every block in a block column its column count.
    pub fn from_blocks(blocks: &[Vec<CMatrix>]) -> Result<Self> {
        if blocks.is_empty() {
            return Ok(Self::zeros(0, 0));
        }
        let ncols_blocks = blocks[0].len();
        let row_heights: Vec<usize> = blocks
            .iter()
            .map(|row| row.first().map_or(0, |b| b.rows))
            .collect();
        let col_widths: Vec<usize> = blocks[0].iter().map(|b| b.cols).collect();
        for row in blocks {
            if row.len() != ncols_blocks {
                return Err(Error::DimensionMismatch("ragged block rows"));
            }
        }
        let total_rows: usize = row_heights.iter().sum();
        let total_cols: usize = col_widths.iter().sum();
        let mut out = Self::zeros(total_rows, total_cols);
        let mut r0 = 0;
        for (bi, row) in blocks.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                if b.rows != row_heights[bi] || b.cols != col_widths[bj] {
                    return Err(Error::DimensionMismatch("inconsistent block sizes"));
                }
                out.set_block(r0, c0, b);
                c0 += col_widths[bj];
            }
            r0 += row_heights[bi];
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: Complex) -> Self {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Complex::new(s, 0.0))
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &CMatrix) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self[(r0 + r, c0 + c)] = b[(r, c)];
            }
        }
    }

    /// Largest entry modulus.
    pub fn norm_max(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn norm_fro(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm_max() <= tol
    }

    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `max|a-b| / max(1, max|b|)`.
    pub fn rel_diff(&self, reference: &CMatrix) -> f64 {
        self.max_abs_diff(reference) / reference.norm_max().max(1.0)
    }

    pub fn trace(&self) -> Complex {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn lu(&self) -> Result<Lu> {
        Lu::new(self)
    }

    pub fn determinant(&self) -> Result<Complex> {
        self.ensure_square()?;
        if self.rows == 0 {
            return Ok(Complex::new(1.0, 0.0));
        }
        Ok(Lu::new(self)?.determinant())
    }

    /// Inverse by partial-pivoting LU; `None` when a pivot is exactly zero.
    pub fn inverse(&self) -> Result<Option<Self>> {
        let n = self.ensure_square()?;
        let lu = Lu::new(self)?;
        if lu.is_exactly_singular() {
            return Ok(None);
        }
        Ok(Some(refine(self, &lu, &Self::identity(n))))
    }

    /// `self^{-1} * rhs`, `None` when singular.
    pub fn solve(&self, rhs: &CMatrix) -> Result<Option<Self>> {
        self.ensure_square()?;
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch("right-hand side row count"));
        }
        let lu = Lu::new(self)?;
        if lu.is_exactly_singular() {
            return Ok(None);
        }
        Ok(Some(refine(self, &lu, rhs)))
    }

    /// `lhs * self^{-1}`, `None` when singular.
    pub fn solve_right(&self, lhs: &CMatrix) -> Result<Option<Self>> {
        if lhs.cols != self.rows {
            return Err(Error::DimensionMismatch("left-hand side column count"));
        }
        // X A = B  <=>  A^* X^* = B^*
        Ok(self.adjoint().solve(&lhs.adjoint())?.map(|x| x.adjoint()))
    }

    /// Ratio of smallest to largest singular value (0 for the zero matrix).
    pub fn inverse_condition(&self) -> f64 {
        crate::eigen::singular_value_ratio(self)
    }

    /// Singular by the scale-free test `sigma_min < rel_tol * sigma_max`.
    pub fn is_numerically_singular(&self, rel_tol: f64) -> bool {
        if self.rows == 0 && self.cols == 0 {
            return false;
        }
        self.inverse_condition() < rel_tol
    }

    pub fn powi(&self, k: usize) -> Self {
        let mut out = Self::identity(self.rows);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add: shape");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub: shape");
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.scale_real(-1.0)
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "mul: inner dimension");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CMatrix {
            type Output = CMatrix;
            fn $m(self, rhs: CMatrix) -> CMatrix {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CMatrix> for CMatrix {
            type Output = CMatrix;
            fn $m(self, rhs: &CMatrix) -> CMatrix {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// LU solve followed by one step of iterative refinement.
fn refine(a: &CMatrix, lu: &Lu, rhs: &CMatrix) -> CMatrix {
    let x = lu.solve(rhs);
    let r = rhs - &(a * &x);
    let dx = lu.solve(&r);
    if dx.as_slice().iter().all(|v| v.re.is_finite() && v.im.is_finite()) {
        &x + &dx
    } else {
        x
    }
}

/// LU factorization with partial pivoting, `P A = L U`.
#[derive(Clone, Debug)]
pub struct Lu {
    n: usize,
    lu: CMatrix,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    pub fn new(a: &CMatrix) -> Result<Self> {
        let n = a.ensure_square()?;
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let (mut piv, mut best) = (k, lu[(k, k)].norm());
            for r in k + 1..n {
                let v = lu[(r, k)].norm();
                if v > best {
                    piv = r;
                    best = v;
                }
            }
            if piv != k {
                for c in 0..n {
                    let t = lu[(k, c)];
                    lu[(k, c)] = lu[(piv, c)];
                    lu[(piv, c)] = t;
                }
                perm.swap(k, piv);
                swaps += 1;
            }
            let d = lu[(k, k)];
            if d == Complex::new(0.0, 0.0) {
                continue;
            }
            for r in k + 1..n {
                let f = lu[(r, k)] / d;
                lu[(r, k)] = f;
                if f == Complex::new(0.0, 0.0) {
                    continue;
                }
                for c in k + 1..n {
                    let u = lu[(k, c)];
                    lu[(r, c)] -= f * u;
                }
            }
        }
        Ok(Lu { n, lu, perm, swaps })
    }

    pub fn determinant(&self) -> Complex {
        let mut d = if self.swaps % 2 == 0 {
            Complex::new(1.0, 0.0)
        } else {
            Complex::new(-1.0, 0.0)
        };
        for i in 0..self.n {
            d *= self.lu[(i, i)];
        }
        d
    }

    pub fn is_exactly_singular(&self) -> bool {
        (0..self.n).any(|i| self.lu[(i, i)] == Complex::new(0.0, 0.0))
    }

    /// Solves `A X = B`; the factorization must be nonsingular.
    pub fn solve(&self, b: &CMatrix) -> CMatrix {
        let n = self.n;
        let mut x = CMatrix::from_fn(n, b.cols, |r, c| b[(self.perm[r], c)]);
        for c in 0..b.cols {
            for i in 0..n {
                let mut s = x[(i, c)];
                for k in 0..i {
                    s -= self.lu[(i, k)] * x[(k, c)];
                }
                x[(i, c)] = s;
            }
            for i in (0..n).rev() {
                let mut s = x[(i, c)];
                for k in i + 1..n {
                    s -= self.lu[(i, k)] * x[(k, c)];
                }
                x[(i, c)] = s / self.lu[(i, i)];
            }
        }
        x
    }
}
