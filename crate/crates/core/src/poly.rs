//! Square matrix polynomials `F(z) = A_0 z^n + A_1 z^{n-1} + ... + A_n`.
//!
//! Coefficients are stored leading block first. Degrees are structural: a
//! polynomial built by arithmetic keeps the degree its construction implies
//! even when cancellation zeroes the leading block; [`MatrixPolynomial::trim`]
//! drops such blocks explicitly.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::{c, eigen, CMatrix, Complex, Error, Result};

/// Relative threshold below which a coefficient block counts as zero.
pub const ZERO_TRIM: f64 = 1e-12;
/// Absolute tolerance for `A_0 = I`.
pub const MONIC_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Self {
        if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MatrixPolynomial {
    p: usize,
    coeffs: Vec<CMatrix>,
}

impl MatrixPolynomial {
    /// Validated constructor: square `p x p` blocks and a nonzero leading block.
    pub fn new(coeffs: Vec<CMatrix>) -> Result<Self> {
        let f = Self::from_blocks(coeffs)?;
        let scale = f.coeff_scale();
        if scale == 0.0 || f.coeffs[0].norm_max() <= ZERO_TRIM * scale {
            return Err(Error::LeadingBlockZero);
        }
        Ok(f)
    }

    /// Structural constructor; only shapes are checked.
    pub fn from_blocks(coeffs: Vec<CMatrix>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::EmptyPolynomial)?;
        let p = first.rows();
        for (index, a) in coeffs.iter().enumerate() {
            if a.rows() != p || a.cols() != p {
                return Err(Error::NonSquareBlock { index, p });
            }
        }
        Ok(MatrixPolynomial { p, coeffs })
    }

    /// Scalar polynomial, leading coefficient first.
    pub fn scalar(coeffs: &[Complex]) -> Self {
        assert!(!coeffs.is_empty(), "scalar polynomial needs a coefficient");
        MatrixPolynomial {
            p: 1,
            coeffs: coeffs.iter().map(|&a| CMatrix::from_diagonal(&[a])).collect(),
        }
    }

    /// Real scalar polynomial, leading coefficient first.
    pub fn scalar_real(coeffs: &[f64]) -> Self {
        let cs: Vec<Complex> = coeffs.iter().map(|&a| c(a, 0.0)).collect();
        Self::scalar(&cs)
    }

    pub fn constant(a: CMatrix) -> Result<Self> {
        Self::from_blocks(vec![a])
    }

    pub fn zero(p: usize) -> Self {
        MatrixPolynomial {
            p,
            coeffs: vec![CMatrix::zeros(p, p)],
        }
    }

    /// `z I_p + b`.
    pub fn linear(b: &CMatrix) -> Result<Self> {
        let p = b.ensure_square()?;
        Self::from_blocks(vec![CMatrix::identity(p), b.clone()])
    }

    /// Diagonal matrix polynomial from scalar polynomials.
    pub fn diagonal(entries: &[MatrixPolynomial]) -> Result<Self> {
        if entries.iter().any(|e| e.p != 1) {
            return Err(Error::DimensionMismatch("diagonal entries must be scalar"));
        }
        let p = entries.len();
        let n = entries.iter().map(|e| e.degree()).max().unwrap_or(0);
        let mut coeffs = vec![CMatrix::zeros(p, p); n + 1];
        for (i, e) in entries.iter().enumerate() {
            for j in 0..=e.degree() {
                coeffs[n - j][(i, i)] = e.power_coeff(j)[(0, 0)];
            }
        }
        Self::from_blocks(coeffs)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `A_0, ..., A_n`.
    pub fn coeffs(&self) -> &[CMatrix] {
        &self.coeffs
    }

    /// `A_k` (multiplies `z^{n-k}`).
    pub fn coeff(&self, k: usize) -> &CMatrix {
        &self.coeffs[k]
    }

    /// Coefficient of `z^j`, zero outside `0..=n`.
    pub fn power_coeff(&self, j: usize) -> CMatrix {
        let n = self.degree();
        if j > n {
            CMatrix::zeros(self.p, self.p)
        } else {
            self.coeffs[n - j].clone()
        }
    }

    pub fn leading(&self) -> &CMatrix {
        &self.coeffs[0]
    }

    /// Largest entry modulus over all coefficients.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().map(CMatrix::norm_max).fold(0.0, f64::max)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs[0].max_abs_diff(&CMatrix::identity(self.p)) <= MONIC_TOL
    }

    pub fn ensure_monic(&self) -> Result<()> {
        if self.is_monic() {
            Ok(())
        } else {
            Err(Error::NotMonic)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff_scale() == 0.0
    }

    /// Drops leading blocks below `ZERO_TRIM` times the coefficient scale.
    pub fn trim(&self) -> Self {
        self.trim_with(ZERO_TRIM)
    }

    pub fn trim_with(&self, rel: f64) -> Self {
        let thr = rel * self.coeff_scale();
        let skip = self
            .coeffs
            .iter()
            .take(self.degree())
            .take_while(|a| a.norm_max() <= thr)
            .count();
        MatrixPolynomial {
            p: self.p,
            coeffs: self.coeffs[skip..].to_vec(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex) -> CMatrix {
        let mut acc = self.coeffs[0].clone();
        for a in &self.coeffs[1..] {
            acc = &acc.scale(z) + a;
        }
        acc
    }

    /// `F^v(z) = sum A_k^* z^{n-k}`.
    pub fn adjoint_reversal(&self) -> Self {
        MatrixPolynomial {
            p: self.p,
            coeffs: self.coeffs.iter().map(CMatrix::adjoint).collect(),
        }
    }

    fn check_p(&self, other: &Self) {
        assert_eq!(self.p, other.p, "block sizes differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_p(other);
        let n = self.degree().max(other.degree());
        let coeffs = (0..=n)
            .rev()
            .map(|j| &self.power_coeff(j) + &other.power_coeff(j))
            .collect();
        MatrixPolynomial { p: self.p, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(c(-1.0, 0.0))
    }

    pub fn scale(&self, s: Complex) -> Self {
        MatrixPolynomial {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_p(other);
        let (n, m) = (self.degree(), other.degree());
        let mut coeffs = vec![CMatrix::zeros(self.p, self.p); n + m + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        MatrixPolynomial { p: self.p, coeffs }
    }

    /// `M F(z)`.
    pub fn left_mul(&self, m: &CMatrix) -> Self {
        MatrixPolynomial {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| m * a).collect(),
        }
    }

    /// `F(z) M`.
    pub fn right_mul(&self, m: &CMatrix) -> Self {
        MatrixPolynomial {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a * m).collect(),
        }
    }

    /// `z^k F(z)`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend((0..k).map(|_| CMatrix::zeros(self.p, self.p)));
        MatrixPolynomial { p: self.p, coeffs }
    }

    /// `F(a z^k)`, of structural degree `k n`.
    pub fn substitute(&self, a: Complex, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.degree();
        let mut coeffs = vec![CMatrix::zeros(self.p, self.p); k * n + 1];
        for (i, blk) in self.coeffs.iter().enumerate() {
            coeffs[k * i] = blk.scale(a.powu((n - i) as u32));
        }
        MatrixPolynomial { p: self.p, coeffs }
    }

    /// Splits `F(z) = F_e(z^2) + z F_o(z^2)`.
    pub fn even_odd_split(&self) -> EvenOddPair {
        let n = self.degree();
        let pick = |start: usize| -> Vec<CMatrix> {
            self.coeffs.iter().skip(start).step_by(2).cloned().collect()
        };
        let zero = || vec![CMatrix::zeros(self.p, self.p)];
        let (even, odd) = if n % 2 == 0 {
            let odd = pick(1);
            (pick(0), if odd.is_empty() { zero() } else { odd })
        } else {
            (pick(1), pick(0))
        };
        EvenOddPair {
            even: MatrixPolynomial { p: self.p, coeffs: even },
            odd: MatrixPolynomial { p: self.p, coeffs: odd },
            parity: Parity::of(n),
        }
    }

    /// Typical modulus of the zeros, used to place sample points.
    pub fn root_scale(&self) -> f64 {
        let lead = self.coeffs[0].norm_fro();
        let mut rho: f64 = 0.0;
        if lead > 0.0 {
            for (k, a) in self.coeffs.iter().enumerate().skip(1) {
                let r = a.norm_fro() / lead;
                if r > 0.0 {
                    rho = rho.max(libm::pow(r, 1.0 / k as f64));
                }
            }
        }
        if rho > 0.0 && rho.is_finite() {
            rho
        } else {
            1.0
        }
    }

    fn sample_nodes(&self, count: usize) -> Vec<Complex> {
        let rho = self.root_scale();
        (0..count)
            .map(|k| Complex::from_polar(rho, 2.0 * PI * k as f64 / count as f64))
            .collect()
    }

    /// `true` iff `det F` is not identically zero, decided at `n p + 1`
    /// distinct points against the Hadamard bound of each evaluation.
    pub fn is_regular(&self, tol: f64) -> bool {
        let count = self.degree() * self.p + 1;
        self.sample_nodes(count).into_iter().any(|z| {
            let m = self.eval(z);
            let det = m.determinant().expect("square");
            det.norm() > tol * hadamard_bound(&m)
        })
    }

    /// Geometric mean of the moduli of the zeros of `det F` when both end
    /// blocks are nonsingular, else [`Self::root_scale`].
    fn det_radius(&self) -> f64 {
        let n = self.degree();
        if n > 0 {
            let lead = self.coeffs[0].determinant().map(|d| d.norm()).unwrap_or(0.0);
            let tail = self.coeffs[n].determinant().map(|d| d.norm()).unwrap_or(0.0);
            if lead > 0.0 && tail > 0.0 {
                let r = libm::pow(tail / lead, 1.0 / (n * self.p) as f64);
                if r.is_finite() && r > 0.0 {
                    return r;
                }
            }
        }
        self.root_scale()
    }

    /// `det F(z)` as a scalar polynomial, by evaluation on a circle of
    /// roots of unity and an inverse discrete Fourier transform.
    pub fn det_poly(&self) -> Result<MatrixPolynomial> {
        let bound = self.degree() * self.p;
        if self.p == 0 {
            return Ok(Self::scalar_real(&[1.0]));
        }
        let count = bound + 1;
        let rho = self.det_radius();
        let nodes: Vec<Complex> = (0..count)
            .map(|k| Complex::from_polar(rho, 2.0 * PI * k as f64 / count as f64))
            .collect();
        let mut values = Vec::with_capacity(count);
        let mut scale: f64 = 0.0;
        for &z in &nodes {
            let m = self.eval(z);
            scale = scale.max(hadamard_bound(&m));
            values.push(m.determinant()?);
        }
        let vmax = values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if vmax <= ZERO_TRIM * scale || vmax == 0.0 {
            return Err(Error::DegenerateDeterminant);
        }
        // scaled[j] = c_j rho^j
        let scaled: Vec<Complex> = (0..count)
            .map(|j| {
                let s: Complex = values
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let ang = -2.0 * PI * ((j * k) % count) as f64 / count as f64;
                        v * Complex::from_polar(1.0, ang)
                    })
                    .sum();
                s / count as f64
            })
            .collect();
        let smax = scaled.iter().map(|s| s.norm()).fold(0.0, f64::max);
        let mut top = bound;
        while top > 0 && scaled[top].norm() <= ZERO_TRIM * smax {
            top -= 1;
        }
        let coeffs: Vec<Complex> = (0..=top)
            .rev()
            .map(|j| scaled[j] / libm::pow(rho, j as f64))
            .collect();
        Ok(Self::scalar(&coeffs))
    }

    /// Zeros of a scalar polynomial (companion eigenvalues after trimming).
    pub fn roots(&self) -> Result<Vec<Complex>> {
        if self.p != 1 {
            return Err(Error::DimensionMismatch("roots() needs a scalar polynomial"));
        }
        let f = self.trim();
        let d = f.degree();
        if d == 0 {
            return Ok(Vec::new());
        }
        let rho = f.det_radius();
        let lead = f.coeffs[0][(0, 0)];
        // w = z / rho, monic in w
        let mut comp = CMatrix::zeros(d, d);
        for i in 1..d {
            comp[(i, i - 1)] = c(1.0, 0.0);
        }
        for k in 1..=d {
            let ak = f.coeffs[k][(0, 0)] / (lead * libm::pow(rho, k as f64));
            comp[(d - k, d - 1)] = -ak;
        }
        let roots = eigen::eigenvalues(&comp.transpose())?;
        Ok(roots.into_iter().map(|w| f.newton_polish(w * rho)).collect())
    }

    fn newton_polish(&self, mut z: Complex) -> Complex {
        for _ in 0..3 {
            let (mut v, mut dv) = (self.coeffs[0][(0, 0)], c(0.0, 0.0));
            for a in &self.coeffs[1..] {
                dv = dv * z + v;
                v = v * z + a[(0, 0)];
            }
            if dv.norm() == 0.0 {
                break;
            }
            let step = v / dv;
            if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 1e-3 * (1.0 + z.norm()) {
                break;
            }
            z -= step;
        }
        z
    }

    /// Block companion matrix of `F_e(-z)` for monic `F` of degree `2m`:
    /// identity blocks on the subdiagonal and last block column
    /// `(-1)^{m-i+1} A_{2m-2i}` in block row `i`. It satisfies
    /// `H_{j+1,m-1} = H_{j,m-1} C` for right Markov parameters.
    pub fn companion_of_reflected_even(&self) -> Result<CMatrix> {
        self.ensure_monic()?;
        let n = self.degree();
        if n % 2 == 1 {
            return Err(Error::OddDegree(n));
        }
        let (m, p) = (n / 2, self.p);
        let mut cm = CMatrix::zeros(m * p, m * p);
        for i in 0..m {
            if i + 1 < m {
                cm.set_block((i + 1) * p, i * p, &CMatrix::identity(p));
            }
            let sign = if (m - i + 1) % 2 == 0 { 1.0 } else { -1.0 };
            cm.set_block(i * p, (m - 1) * p, &self.coeffs[2 * m - 2 * i].scale_real(sign));
        }
        Ok(cm)
    }

    /// `F = Q D + R` with `deg R < deg D`; needs an invertible leading block of `D`.
    pub fn div_rem_right(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.div_rem(divisor, true)
    }

    /// `F = D Q + R` with `deg R < deg D`.
    pub fn div_rem_left(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.div_rem(divisor, false)
    }

    fn div_rem(&self, divisor: &Self, right: bool) -> Result<(Self, Self)> {
        self.check_p(divisor);
        let d = divisor.degree();
        let lead = divisor.leading();
        if lead.is_numerically_singular(1e-12) {
            return Err(Error::SingularLeadingBlock);
        }
        let n = self.degree();
        let p = self.p;
        if n < d {
            return Ok((Self::zero(p), self.clone()));
        }
        let mut rem = self.clone();
        let mut quot = vec![CMatrix::zeros(p, p); n - d + 1];
        for k in (d..=n).rev() {
            let top = rem.power_coeff(k);
            let q = if right {
                lead.solve_right(&top)?.ok_or(Error::SingularLeadingBlock)?
            } else {
                lead.solve(&top)?.ok_or(Error::SingularLeadingBlock)?
            };
            let term = if right {
                divisor.left_mul(&q)
            } else {
                divisor.right_mul(&q)
            }
            .shift(k - d);
            rem = rem.sub(&term);
            // the z^k block is now zero up to rounding; drop it structurally
            let rn = rem.degree();
            rem.coeffs[rn - k] = CMatrix::zeros(p, p);
            quot[n - k] = q;
        }
        let keep = d.max(1);
        let rn = rem.degree();
        let rem = MatrixPolynomial {
            p,
            coeffs: rem.coeffs[rn + 1 - keep..].to_vec(),
        };
        Ok((MatrixPolynomial { p, coeffs: quot }, rem))
    }
}

/// Product of column norms, an upper bound on `|det m|`.
pub(crate) fn hadamard_bound(m: &CMatrix) -> f64 {
    (0..m.cols())
        .map(|j| libm::sqrt((0..m.rows()).map(|i| m[(i, j)].norm_sqr()).sum::<f64>()))
        .product()
}

/// Even and odd parts of a matrix polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct EvenOddPair {
    pub even: MatrixPolynomial,
    pub odd: MatrixPolynomial,
    /// Parity of the source degree.
    pub parity: Parity,
}

impl EvenOddPair {
    /// `F_e(z^2) + z F_o(z^2)`.
    pub fn recombine(&self) -> MatrixPolynomial {
        let e = self.even.substitute(c(1.0, 0.0), 2);
        let o = self.odd.substitute(c(1.0, 0.0), 2).shift(1);
        let f = e.add(&o);
        let n = match self.parity {
            Parity::Even => 2 * self.even.degree(),
            Parity::Odd => 2 * self.odd.degree() + 1,
        };
        let d = f.degree();
        MatrixPolynomial {
            p: f.p,
            coeffs: f.coeffs[d - n..].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::testing::{random_points, rel_err};

    fn r(rows: &[&[f64]]) -> CMatrix {
        CMatrix::from_real_rows(rows)
    }

    fn first_counterexample() -> MatrixPolynomial {
        MatrixPolynomial::new(vec![
            CMatrix::identity(2),
            r(&[&[2.0, 2.0], &[1.0, 1.0]]),
            r(&[&[2.0, 1.0], &[0.5, 0.5]]),
        ])
        .unwrap()
    }

    fn second_counterexample() -> MatrixPolynomial {
        MatrixPolynomial::new(vec![
            CMatrix::identity(2),
            r(&[&[1.0, 1.0 / 3.0], &[5.0, 2.0]]),
            r(&[&[1.0, 0.5], &[1.0, 1.0]]),
        ])
        .unwrap()
    }

    #[test]
    fn even_odd_split_scalar_cases() {
        let f = MatrixPolynomial::scalar_real(&[1.0, 2.0, 1.0]);
        let pair = f.even_odd_split();
        assert_eq!(pair.even, MatrixPolynomial::scalar_real(&[1.0, 1.0]));
        assert_eq!(pair.odd, MatrixPolynomial::scalar_real(&[2.0]));
        assert_eq!(pair.parity, Parity::Even);

        let f = MatrixPolynomial::scalar_real(&[1.0, 3.0, 3.0, 1.0]);
        let pair = f.even_odd_split();
        assert_eq!(pair.even, MatrixPolynomial::scalar_real(&[3.0, 1.0]));
        assert_eq!(pair.odd, MatrixPolynomial::scalar_real(&[1.0, 3.0]));
        assert_eq!(pair.recombine(), f);
    }

    #[test]
    fn even_odd_split_of_first_counterexample() {
        let pair = first_counterexample().even_odd_split();
        let fe = MatrixPolynomial::from_blocks(vec![CMatrix::identity(2), r(&[&[2.0, 1.0], &[0.5, 0.5]])]).unwrap();
        assert_eq!(pair.even, fe);
        assert_eq!(pair.odd, MatrixPolynomial::constant(r(&[&[2.0, 2.0], &[1.0, 1.0]])).unwrap());
        assert!(pair.even.is_regular(1e-9));
    }

    #[test]
    fn adjoint_reversal_conjugates_coefficients() {
        let f = MatrixPolynomial::scalar(&[c(1.0, 0.0), c(0.0, 1.0)]);
        assert_eq!(f.adjoint_reversal(), MatrixPolynomial::scalar(&[c(1.0, 0.0), c(0.0, -1.0)]));
        let herm = MatrixPolynomial::from_blocks(vec![
            CMatrix::identity(2),
            CMatrix::from_rows(&[[c(1.0, 0.0), c(2.0, 1.0)], [c(2.0, -1.0), c(0.0, 0.0)]]),
        ])
        .unwrap();
        assert_eq!(herm.adjoint_reversal(), herm);
    }

    #[test]
    fn eval_basics() {
        let b = CMatrix::from_rows(&[[c(1.0, 2.0), c(0.0, 0.0)], [c(3.0, 0.0), c(-1.0, 0.0)]]);
        let f = MatrixPolynomial::linear(&b).unwrap();
        assert_eq!(f.eval(c(0.0, 0.0)), b);
        let g = first_counterexample();
        let sum = g.coeffs().iter().fold(CMatrix::zeros(2, 2), |acc, a| &acc + a);
        assert_eq!(g.eval(c(1.0, 0.0)), sum);
        // -1 is a zero of the first counterexample
        assert!(g.eval(c(-1.0, 0.0)).determinant().unwrap().norm() < 1e-14);
    }

    #[test]
    fn regularity() {
        assert!(second_counterexample().is_regular(1e-9));
        let degenerate = MatrixPolynomial::from_blocks(vec![r(&[&[1.0, 1.0], &[1.0, 1.0]]), CMatrix::zeros(2, 2)]).unwrap();
        assert!(!degenerate.is_regular(1e-9));
        assert_eq!(degenerate.det_poly(), Err(Error::DegenerateDeterminant));
    }

    #[test]
    fn det_poly_small_cases() {
        let f = MatrixPolynomial::linear(&CMatrix::identity(2)).unwrap();
        let d = f.det_poly().unwrap();
        let expect = [1.0, 2.0, 1.0];
        assert_eq!(d.degree(), 2);
        for (k, e) in expect.iter().enumerate() {
            assert!((d.coeff(k)[(0, 0)] - c(*e, 0.0)).norm() < 1e-13);
        }
        let diag = MatrixPolynomial::diagonal(&[
            MatrixPolynomial::scalar_real(&[1.0, -3.0]),
            MatrixPolynomial::scalar_real(&[2.0, 0.0, 5.0]),
        ])
        .unwrap();
        let prod = MatrixPolynomial::scalar_real(&[1.0, -3.0]).mul(&MatrixPolynomial::scalar_real(&[2.0, 0.0, 5.0]));
        let d = diag.det_poly().unwrap();
        assert_eq!(d.degree(), 3);
        for k in 0..=3 {
            assert!((d.coeff(k)[(0, 0)] - prod.coeff(k)[(0, 0)]).norm() < 1e-12);
        }
    }

    #[test]
    fn det_poly_roots_of_second_counterexample() {
        let roots = second_counterexample().det_poly().unwrap().roots().unwrap();
        assert_eq!(roots.len(), 4);
        let expect = [c(-1.581, -0.396), c(-1.581, 0.396), c(0.081, -0.426), c(0.081, 0.426)];
        for e in expect {
            assert!(roots.iter().any(|z| (z - e).norm() < 1e-3), "{e} missing from {roots:?}");
        }
    }

    #[test]
    fn companion_of_scalar_square() {
        let f = MatrixPolynomial::scalar_real(&[1.0, 2.0, 1.0]);
        let cm = f.companion_of_reflected_even().unwrap();
        assert_eq!(cm, CMatrix::from_real_rows(&[[1.0]]));
        assert_eq!(
            MatrixPolynomial::scalar_real(&[1.0, 1.0]).companion_of_reflected_even(),
            Err(Error::OddDegree(1))
        );
        assert_eq!(
            MatrixPolynomial::scalar_real(&[2.0, 1.0, 1.0]).companion_of_reflected_even(),
            Err(Error::NotMonic)
        );
    }

    #[test]
    fn division_reconstructs() {
        let f = MatrixPolynomial::from_blocks(vec![
            CMatrix::identity(2),
            r(&[&[1.0, 2.0], &[0.0, 1.0]]),
            r(&[&[3.0, -1.0], &[4.0, 2.0]]),
            r(&[&[0.5, 0.0], &[1.0, 1.0]]),
        ])
        .unwrap();
        let d = MatrixPolynomial::from_blocks(vec![r(&[&[2.0, 1.0], &[1.0, 1.0]]), r(&[&[0.0, 1.0], &[1.0, 0.0]])]).unwrap();
        let (q, rem) = f.div_rem_right(&d).unwrap();
        assert_eq!(rem.degree(), 0);
        let (ql, reml) = f.div_rem_left(&d).unwrap();
        for z in random_points(5, 2.0, 11) {
            assert!(rel_err(&(&(&q.eval(z) * &d.eval(z)) + &rem.eval(z)), &f.eval(z)) < 1e-12);
            assert!(rel_err(&(&(&d.eval(z) * &ql.eval(z)) + &reml.eval(z)), &f.eval(z)) < 1e-12);
        }
    }

    #[test]
    fn validated_constructor_rejects_bad_input() {
        assert_eq!(MatrixPolynomial::new(vec![]), Err(Error::EmptyPolynomial));
        assert_eq!(
            MatrixPolynomial::new(vec![CMatrix::zeros(2, 2), CMatrix::identity(2)]),
            Err(Error::LeadingBlockZero)
        );
        assert_eq!(
            MatrixPolynomial::new(vec![CMatrix::identity(2), CMatrix::zeros(2, 3)]),
            Err(Error::NonSquareBlock { index: 1, p: 2 })
        );
    }
}
