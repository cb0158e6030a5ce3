//! Zero localization by block-companion linearization, and seeded instance
//! generators for differential testing.
//!
//! Generators use `ChaCha8Rng::seed_from_u64(seed)` and draw every quantity
//! from uniform distributions, so the same seed gives the same polynomial on
//! every platform:
//!
//! * [`generate_stable`] multiplies `n` factors `z I + T (H + S) T^{-1}` with
//!   `H` Hermitian with eigenvalues in `[0.5, 2]`, `S` skew-Hermitian with
//!   entries of modulus at most 1 and `T = U D`, `U` unitary, `D` diagonal in
//!   `[0.5, 2]`. The eigenvalues of `H + S` have real parts in `[0.5, 2]`.
//! * [`generate_from_cf`] draws `c_k = U diag(lambda) U^*` with `lambda` in
//!   `[0.5, 2]` and folds the continued fraction.
//! * [`generate_indefinite_cf`] does the same with at least one negative
//!   eigenvalue among all `c_k`.
//! * [`generate_shifted`] moves a stable instance right by just enough to put
//!   a zero in the open right half plane.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::Parity;
use crate::stieltjes::{cf_synthesize, CfPattern, StieltjesCF};
use crate::{c, eigen, CMatrix, Complex, Error, MatrixPolynomial, Result};

/// Zero counts with respect to the imaginary axis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GammaPrimeTriple {
    /// Zeros with positive real part.
    pub plus: usize,
    /// Zeros with negative real part.
    pub minus: usize,
    /// Zeros on the imaginary axis.
    pub zero: usize,
}

impl GammaPrimeTriple {
    pub fn total(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

/// Zero counts with respect to the real line.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct GammaTriple {
    /// Zeros in the open upper half plane.
    pub plus: usize,
    /// Zeros in the open lower half plane.
    pub minus: usize,
    /// Real zeros.
    pub zero: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub triple: GammaPrimeTriple,
    pub eigenvalues: Vec<Complex>,
    /// Some eigenvalue has `|Re| <= band`.
    pub marginal: bool,
    /// `axis_tol * (1 + max |lambda|)`.
    pub band: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HurwitzOracle {
    pub stable: bool,
    pub marginal: bool,
}

/// Block companion matrix of a monic `F` of degree `n >= 1`: first block row
/// `-A_1, ..., -A_n`, identity blocks on the subdiagonal.
pub fn linearize(f: &MatrixPolynomial) -> Result<CMatrix> {
    f.ensure_monic()?;
    let (n, p) = (f.degree(), f.p());
    if n == 0 {
        return Err(Error::DimensionMismatch("linearization needs degree at least 1"));
    }
    let mut m = CMatrix::zeros(n * p, n * p);
    for k in 1..=n {
        m.set_block(0, (k - 1) * p, &f.coeff(k).scale_real(-1.0));
    }
    let eye = CMatrix::identity(p);
    for i in 1..n {
        m.set_block(i * p, (i - 1) * p, &eye);
    }
    Ok(m)
}

/// Zeros of a monic `F` with multiplicity.
pub fn zeros(f: &MatrixPolynomial) -> Result<Vec<Complex>> {
    eigen::eigenvalues(&linearize(f)?)
}

fn band_of(values: &[Complex], axis_tol: f64) -> f64 {
    axis_tol * (1.0 + values.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

pub fn gamma_prime_oracle(f: &MatrixPolynomial, axis_tol: f64) -> Result<OracleReport> {
    let eigenvalues = zeros(f)?;
    let band = band_of(&eigenvalues, axis_tol);
    let mut triple = GammaPrimeTriple::default();
    for z in &eigenvalues {
        if z.re > band {
            triple.plus += 1;
        } else if z.re < -band {
            triple.minus += 1;
        } else {
            triple.zero += 1;
        }
    }
    Ok(OracleReport {
        triple,
        eigenvalues,
        marginal: triple.zero > 0,
        band,
    })
}

pub fn is_hurwitz_oracle(f: &MatrixPolynomial, axis_tol: f64) -> Result<HurwitzOracle> {
    let r = gamma_prime_oracle(f, axis_tol)?;
    Ok(HurwitzOracle {
        stable: r.triple.minus == f.degree() * f.p(),
        marginal: r.marginal,
    })
}

/// Zero counts of a regular, not necessarily monic, `G` with respect to the
/// real line, from the roots of `det G`.
pub fn gamma_oracle(g: &MatrixPolynomial, axis_tol: f64) -> Result<GammaTriple> {
    let det = match g.det_poly() {
        Ok(d) => d,
        Err(Error::DegenerateDeterminant) => return Err(Error::NotRegular),
        Err(e) => return Err(e),
    };
    let roots = det.roots()?;
    let band = band_of(&roots, axis_tol);
    let mut t = GammaTriple::default();
    for z in roots {
        if z.im > band {
            t.plus += 1;
        } else if z.im < -band {
            t.minus += 1;
        } else {
            t.zero += 1;
        }
    }
    Ok(t)
}

/// `F(z - a)`.
pub fn translate(f: &MatrixPolynomial, a: Complex) -> MatrixPolynomial {
    let p = f.p();
    let mut g = MatrixPolynomial::constant(f.coeff(0).clone()).expect("square");
    for blk in &f.coeffs()[1..] {
        g = g.shift(1).sub(&g.scale(a)).add(&MatrixPolynomial::constant(blk.clone()).expect("square"));
    }
    debug_assert_eq!(g.p(), p);
    g
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex {
    c(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0))
}

fn random_square(rng: &mut ChaCha8Rng, p: usize) -> CMatrix {
    CMatrix::from_fn(p, p, |_, _| random_complex(rng))
}

/// Gram-Schmidt orthonormalization of the columns of a random matrix.
pub(crate) fn random_unitary(rng: &mut ChaCha8Rng, p: usize) -> CMatrix {
    loop {
        let a = random_square(rng, p);
        let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(p);
        let mut ok = true;
        for j in 0..p {
            let mut v: Vec<Complex> = (0..p).map(|i| a[(i, j)]).collect();
            for q in &cols {
                let dot: Complex = q.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= dot * qi;
                }
            }
            let norm = libm::sqrt(v.iter().map(|x| x.norm_sqr()).sum::<f64>());
            if norm < 1e-3 {
                ok = false;
                break;
            }
            cols.push(v.into_iter().map(|x| x / norm).collect());
        }
        if ok {
            return CMatrix::from_fn(p, p, |i, j| cols[j][i]);
        }
    }
}

fn hermitian_with_spectrum(rng: &mut ChaCha8Rng, spectrum: &[f64]) -> CMatrix {
    let u = random_unitary(rng, spectrum.len());
    let d = CMatrix::from_diagonal(&spectrum.iter().map(|&x| c(x, 0.0)).collect::<Vec<_>>());
    let h = &(&u * &d) * &u.adjoint();
    (&h + &h.adjoint()).scale_real(0.5)
}

fn skew_hermitian(rng: &mut ChaCha8Rng, p: usize) -> CMatrix {
    let a = random_square(rng, p).scale_real(0.5);
    &a - &a.adjoint()
}

fn with_identity_lead(f: MatrixPolynomial) -> MatrixPolynomial {
    let mut coeffs = f.coeffs().to_vec();
    coeffs[0] = CMatrix::identity(f.p());
    MatrixPolynomial::new(coeffs).expect("identity leading block")
}

/// A factor `z I + P` whose zeros have real parts in `[-2, -0.5]` up to the
/// similarity `T`.
fn stable_factor(rng: &mut ChaCha8Rng, p: usize) -> MatrixPolynomial {
    let spectrum: Vec<f64> = (0..p).map(|_| uniform(rng, 0.5, 2.0)).collect();
    let h = hermitian_with_spectrum(rng, &spectrum);
    let s = skew_hermitian(rng, p);
    let u = random_unitary(rng, p);
    let d: Vec<Complex> = (0..p).map(|_| c(uniform(rng, 0.5, 2.0), 0.0)).collect();
    let t = &u * &CMatrix::from_diagonal(&d);
    let t_inv = CMatrix::from_diagonal(&d.iter().map(|x| x.inv()).collect::<Vec<_>>()) * &u.adjoint();
    let pm = &(&t * &(&h + &s)) * &t_inv;
    MatrixPolynomial::linear(&pm).expect("square")
}

/// Monic stable polynomial of size `p` and degree `n >= 1`.
pub fn generate_stable(p: usize, n: usize, seed: u64) -> MatrixPolynomial {
    assert!(p >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = stable_factor(&mut rng, p);
    for _ in 1..n {
        f = f.mul(&stable_factor(&mut rng, p));
    }
    with_identity_lead(f)
}

fn synthesize(p: usize, params: Vec<CMatrix>) -> MatrixPolynomial {
    let n = params.len();
    let pattern = match Parity::of(n) {
        Parity::Even => CfPattern::Even,
        Parity::Odd => CfPattern::Odd,
    };
    let cf = StieltjesCF { p, pattern, params };
    with_identity_lead(cf_synthesize(&cf).expect("nonsingular parameters").recombine())
}

/// Monic stable polynomial with Hermitian positive definite continued
/// fraction parameters.
pub fn generate_from_cf(p: usize, n: usize, seed: u64) -> MatrixPolynomial {
    assert!(p >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let params = (0..n)
        .map(|_| {
            let spectrum: Vec<f64> = (0..p).map(|_| uniform(&mut rng, 0.5, 2.0)).collect();
            hermitian_with_spectrum(&mut rng, &spectrum)
        })
        .collect();
    synthesize(p, params)
}

/// Monic polynomial with Hermitian nonsingular continued fraction
/// parameters of which at least one is indefinite or negative definite.
pub fn generate_indefinite_cf(p: usize, n: usize, seed: u64) -> MatrixPolynomial {
    assert!(p >= 1 && n >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spectra: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            (0..p)
                .map(|_| {
                    let x = uniform(&mut rng, 0.5, 2.0);
                    if rng.random_bool(0.3) {
                        -x
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    if spectra.iter().flatten().all(|&x| x > 0.0) {
        let k = rng.random_range(0..n);
        let i = rng.random_range(0..p);
        spectra[k][i] = -spectra[k][i];
    }
    let params = spectra.iter().map(|s| hermitian_with_spectrum(&mut rng, s)).collect();
    synthesize(p, params)
}

/// `F(z - a)` for a stable `F` from [`generate_stable`], with the real shift
/// `a` chosen so that the rightmost zero lands in `[0.05, 1]` times the
/// spectral radius to the right of the axis.
pub fn generate_shifted(p: usize, n: usize, seed: u64) -> MatrixPolynomial {
    let f = generate_stable(p, n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a_5a5a);
    let z = zeros(&f).expect("monic");
    let right = z.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    let radius = z.iter().map(|z| z.norm()).fold(0.0, f64::max);
    loop {
        let a = -right + uniform(&mut rng, 0.05, 1.0) * radius;
        let clear = z.iter().all(|w| (w.re + a).abs() > 1e-3 * (1.0 + radius));
        if clear {
            return with_identity_lead(translate(&f, c(a, 0.0)));
        }
    }
}

/// Alternates between [`generate_indefinite_cf`] and [`generate_shifted`]
/// on the lowest bit of the seed.
pub fn generate_unstable(p: usize, n: usize, seed: u64) -> MatrixPolynomial {
    if seed & 1 == 0 {
        generate_indefinite_cf(p, n, seed)
    } else {
        generate_shifted(p, n, seed)
    }
}
