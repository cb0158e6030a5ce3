//! Greatest common right and left divisors by unimodular row reduction.

use alloc::vec;
use alloc::vec::Vec;

use crate::{c, CMatrix, Complex, Error, MatrixPolynomial, Result};

/// Rectangular grid of scalar polynomials, coefficients in ascending powers.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Complex>>,
}

fn trim_ascending(mut v: Vec<Complex>) -> Vec<Complex> {
    while v.last().is_some_and(|x| *x == c(0.0, 0.0)) {
        v.pop();
    }
    v
}

fn poly_add(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).copied().unwrap_or_default() + b.get(i).copied().unwrap_or_default())
        .collect();
    trim_ascending(out)
}

fn poly_mul(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![c(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_ascending(out)
}

fn poly_scale(a: &[Complex], s: Complex) -> Vec<Complex> {
    trim_ascending(a.iter().map(|x| x * s).collect())
}

/// Quotient of `a / b` for nonempty `b` with nonzero top coefficient.
fn poly_quotient(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return Vec::new();
    }
    let mut r = a.to_vec();
    let mut q = vec![c(0.0, 0.0); a.len() - db];
    let lead = b[db];
    for k in (0..q.len()).rev() {
        let coef = r[k + db] / lead;
        q[k] = coef;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= coef * bj;
        }
    }
    q
}

impl PolynomialMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolynomialMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = vec![c(1.0, 0.0)];
        }
        m
    }

    pub fn from_polynomial(f: &MatrixPolynomial) -> Self {
        let p = f.p();
        let mut m = Self::zeros(p, p);
        for i in 0..p {
            for j in 0..p {
                let e = (0..=f.degree()).map(|k| f.power_coeff(k)[(i, j)]).collect();
                m.entries[i * p + j] = trim_ascending(e);
            }
        }
        m
    }

    /// `[top; bottom]`.
    pub fn stack(top: &MatrixPolynomial, bottom: &MatrixPolynomial) -> Result<Self> {
        if top.p() != bottom.p() {
            return Err(Error::DimensionMismatch("stacked polynomials must share block size"));
        }
        let (a, b) = (Self::from_polynomial(top), Self::from_polynomial(bottom));
        let mut entries = a.entries;
        entries.extend(b.entries);
        Ok(PolynomialMatrix {
            rows: 2 * top.p(),
            cols: top.p(),
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Ascending coefficients of entry `(i, j)`; empty for zero.
    pub fn entry(&self, i: usize, j: usize) -> &[Complex] {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, coeffs: Vec<Complex>) {
        self.entries[i * self.cols + j] = trim_ascending(coeffs);
    }

    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.len().saturating_sub(1)).max().unwrap_or(0)
    }

    pub fn max_coeff(&self) -> f64 {
        self.entries.iter().flatten().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| {
            self.entry(i, j).iter().rev().fold(c(0.0, 0.0), |acc, a| acc * z + a)
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("polynomial matrix product"));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Vec::new();
                for k in 0..self.cols {
                    acc = poly_add(&acc, &poly_mul(self.entry(i, k), other.entry(k, j)));
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    /// Rows `r0..r0+rows` as a square matrix polynomial.
    pub fn row_block(&self, r0: usize, rows: usize) -> Result<MatrixPolynomial> {
        if rows != self.cols || r0 + rows > self.rows {
            return Err(Error::DimensionMismatch("row block must be square"));
        }
        let d = (r0..r0 + rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j).len().saturating_sub(1))
            .max()
            .unwrap_or(0);
        let blocks = (0..=d)
            .rev()
            .map(|k| {
                CMatrix::from_fn(rows, self.cols, |i, j| {
                    self.entry(r0 + i, j).get(k).copied().unwrap_or_default()
                })
            })
            .collect();
        MatrixPolynomial::from_blocks(blocks)
    }

    /// Square polynomial matrix as a matrix polynomial.
    pub fn to_polynomial(&self) -> Result<MatrixPolynomial> {
        self.row_block(0, self.rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_dst -= q * row_src`.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &[Complex]) {
        for j in 0..self.cols {
            let t = poly_scale(&poly_mul(q, self.entry(src, j)), c(-1.0, 0.0));
            let v = poly_add(self.entry(dst, j), &t);
            self.entries[dst * self.cols + j] = v;
        }
    }

    /// `col_dst += col_src * q`.
    fn col_axpy(&mut self, dst: usize, src: usize, q: &[Complex]) {
        for i in 0..self.rows {
            let t = poly_mul(self.entry(i, src), q);
            let v = poly_add(self.entry(i, dst), &t);
            self.entries[i * self.cols + dst] = v;
        }
    }
}

/// A greatest common right divisor with the reduction that produced it:
/// `transform * [F; Ft] = [divisor; 0]` and `[F; Ft] = inverse * [divisor; 0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GcdResult {
    pub divisor: MatrixPolynomial,
    pub transform: PolynomialMatrix,
    pub inverse: PolynomialMatrix,
}

struct Reducer {
    tol: f64,
    /// Closest ratio `|coefficient| / threshold` seen in `[0.1, 10]`, if any.
    ambiguity: Option<f64>,
}

impl Reducer {
    /// Zeroes coefficients below the threshold from the top down and returns the trimmed entry.
    fn clean(&mut self, e: &[Complex], thr: f64) -> Vec<Complex> {
        let mut v = e.to_vec();
        while let Some(top) = v.last() {
            let ratio = if thr > 0.0 { top.norm() / thr } else { f64::INFINITY };
            if (0.1..=10.0).contains(&ratio) {
                let dist = if ratio >= 1.0 { ratio } else { 1.0 / ratio };
                self.ambiguity = Some(self.ambiguity.map_or(dist, |a: f64| a.min(dist)));
            }
            if ratio <= 1.0 {
                v.pop();
            } else {
                break;
            }
        }
        v
    }

    fn reduce(&mut self, f: &MatrixPolynomial, ft: &MatrixPolynomial) -> Result<GcdResult> {
        let p = f.p();
        let mut a = PolynomialMatrix::stack(f, ft)?;
        let mut u = PolynomialMatrix::identity(2 * p);
        let mut v = PolynomialMatrix::identity(2 * p);
        let base = a.max_coeff();
        if base == 0.0 {
            return Err(Error::DimensionMismatch("both polynomials are zero"));
        }
        for col in 0..p {
            let mut guard = 0;
            loop {
                guard += 1;
                if guard > 64 * (f.degree() + ft.degree() + 2) * (p + 1) {
                    return Err(Error::NotRegular);
                }
                let thr = self.tol * base.max(a.max_coeff());
                for i in col..2 * p {
                    let e = self.clean(a.entry(i, col), thr);
                    a.set_entry(i, col, e);
                }
                let nonzero: Vec<usize> = (col..2 * p).filter(|&i| !a.entry(i, col).is_empty()).collect();
                if nonzero.is_empty() {
                    break;
                }
                let piv = *nonzero
                    .iter()
                    .min_by(|&&x, &&y| {
                        let (ex, ey) = (a.entry(x, col), a.entry(y, col));
                        ex.len().cmp(&ey.len()).then_with(|| {
                            ey.last().unwrap().norm().total_cmp(&ex.last().unwrap().norm())
                        })
                    })
                    .unwrap();
                if piv != col {
                    a.swap_rows(piv, col);
                    u.swap_rows(piv, col);
                    v.swap_cols(piv, col);
                }
                if nonzero.len() == 1 {
                    break;
                }
                let pivot = a.entry(col, col).to_vec();
                for i in col + 1..2 * p {
                    if a.entry(i, col).is_empty() {
                        continue;
                    }
                    let q = poly_quotient(a.entry(i, col), &pivot);
                    let q = if q.is_empty() { Vec::new() } else { q };
                    if q.iter().all(|x| *x == c(0.0, 0.0)) {
                        continue;
                    }
                    a.row_axpy(i, col, &q);
                    u.row_axpy(i, col, &q);
                    v.col_axpy(col, i, &q);
                    // the remainder has degree below the pivot; drop the cancelled top
                    let mut e = a.entry(i, col).to_vec();
                    e.truncate(pivot.len() - 1);
                    a.set_entry(i, col, e);
                }
            }
        }
        let thr = self.tol * base.max(a.max_coeff());
        for i in 0..2 * p {
            for j in 0..p {
                let e = self.clean(a.entry(i, j), thr);
                a.set_entry(i, j, e);
            }
        }
        let divisor = a.row_block(0, p)?;
        Ok(GcdResult {
            divisor,
            transform: u,
            inverse: v,
        })
    }
}

/// A greatest common right divisor of `F` and `Ft`: unimodular row
/// reduction of the stacked `2p x p` matrix `[F; Ft]` until the lower block
/// vanishes. Coefficients below `tol` times the coefficient scale count as
/// zero; when a decision lies within a factor 10 of that threshold the
/// result is reported as ambiguous together with the divisors obtained at
/// `100 tol` and `tol / 100`.
pub fn grcd(f: &MatrixPolynomial, ft: &MatrixPolynomial, tol: f64) -> Result<GcdResult> {
    let mut r = Reducer { tol, ambiguity: None };
    let out = r.reduce(f, ft)?;
    if let Some(ratio) = r.ambiguity {
        let mut candidates = Vec::new();
        for t in [tol * 100.0, tol / 100.0] {
            let mut alt = Reducer { tol: t, ambiguity: None };
            if let Ok(g) = alt.reduce(f, ft) {
                candidates.push(g.divisor);
            }
        }
        return Err(Error::ToleranceAmbiguity { ratio, candidates });
    }
    Ok(out)
}

/// A greatest common left divisor, `grcd(F^v, Ft^v)^v`.
pub fn glcd(f: &MatrixPolynomial, ft: &MatrixPolynomial, tol: f64) -> Result<MatrixPolynomial> {
    Ok(grcd(&f.adjoint_reversal(), &ft.adjoint_reversal(), tol)?.divisor.adjoint_reversal())
}

/// Zeros of `det` of a matrix polynomial, trimmed in the scaled basis.
pub(crate) fn det_zeros(g: &MatrixPolynomial) -> Result<Vec<Complex>> {
    g.det_poly()?.roots()
}

/// Greedy matching of two zero multisets within `tol (1 + |z|)`.
pub(crate) fn same_zero_sets(a: &[Complex], b: &[Complex], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let best = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .min_by(|(_, p), (_, q)| (*p - x).norm().total_cmp(&(*q - x).norm()));
        match best {
            Some((i, y)) if (y - x).norm() <= tol * (1.0 + x.norm()) => used[i] = true,
            _ => return false,
        }
    }
    true
}

/// Applies a unimodular `2p x 2p` transform to `[F; Ft]` and checks that the
/// common right divisors of both pairs have the same zeros.
pub fn unimodular_invariance_check(
    f: &MatrixPolynomial,
    ft: &MatrixPolynomial,
    u: &PolynomialMatrix,
    tol: f64,
) -> Result<bool> {
    let p = f.p();
    if u.rows() != 2 * p || u.cols() != 2 * p {
        return Err(Error::DimensionMismatch("transform must be 2p x 2p"));
    }
    match u.to_polynomial()?.det_poly() {
        Ok(d) if d.trim().degree() == 0 => {}
        _ => return Err(Error::NotUnimodular),
    }
    let moved = u.mul(&PolynomialMatrix::stack(f, ft)?)?;
    let (e, et) = (moved.row_block(0, p)?, moved.row_block(p, p)?);
    let before = det_zeros(&grcd(f, ft, tol)?.divisor)?;
    let after = det_zeros(&grcd(&e, &et, tol)?.divisor)?;
    Ok(same_zero_sets(&before, &after, 1e-6))
}
