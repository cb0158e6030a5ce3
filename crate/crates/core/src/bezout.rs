//! Anderson–Jury Bezoutians, their factorization through block Hankel
//! matrices, and Hermite–Fujiwara zero counts with respect to the real line.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gcd::grcd;
use crate::hermitian::{inertia, InertiaTriple};
use crate::markov::MarkovSequence;
use crate::oracle::{gamma_oracle, GammaTriple};
use crate::{c, CMatrix, Complex, Error, MatrixPolynomial, Result, Tolerances};

/// Relative residual allowed in the identities checked here.
pub const IDENTITY_TOL: f64 = 1e-8;

/// `Mt Lt = M L`; the Bezoutian expands `(Mt(z) Lt(u) - M(z) L(u)) / (z - u)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutQuadruple {
    pub mt: MatrixPolynomial,
    pub lt: MatrixPolynomial,
    pub m: MatrixPolynomial,
    pub l: MatrixPolynomial,
}

fn sample_points(count: usize, radius: f64, seed: u64) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = radius * rng.random_range(0.3..1.5);
            Complex::from_polar(r, rng.random_range(0.0..core::f64::consts::TAU))
        })
        .collect()
}

fn rel(a: &CMatrix, b: &CMatrix) -> f64 {
    let scale = a.norm_max().max(b.norm_max());
    if scale == 0.0 {
        0.0
    } else {
        a.max_abs_diff(b) / scale
    }
}

impl BezoutQuadruple {
    pub fn new(mt: MatrixPolynomial, lt: MatrixPolynomial, m: MatrixPolynomial, l: MatrixPolynomial) -> Result<Self> {
        let q = BezoutQuadruple { mt, lt, m, l };
        let p = q.mt.p();
        if [q.lt.p(), q.m.p(), q.l.p()].iter().any(|&x| x != p) {
            return Err(Error::DimensionMismatch("quadruple block sizes differ"));
        }
        let residual = q.common_multiple_residual();
        if residual > IDENTITY_TOL {
            return Err(Error::CommonMultipleViolated { residual });
        }
        Ok(q)
    }

    fn radius(&self) -> f64 {
        [&self.mt, &self.lt, &self.m, &self.l]
            .iter()
            .map(|f| f.root_scale())
            .fold(1.0, f64::max)
    }

    /// Largest relative mismatch of `Mt Lt` and `M L` at sample points.
    pub fn common_multiple_residual(&self) -> f64 {
        sample_points(10, self.radius(), 7)
            .into_iter()
            .map(|z| rel(&(&self.mt.eval(z) * &self.lt.eval(z)), &(&self.m.eval(z) * &self.l.eval(z))))
            .fold(0.0, f64::max)
    }

    /// The quadruple with both products swapped; its Bezoutian is the negative.
    pub fn swapped(&self) -> Self {
        BezoutQuadruple {
            mt: self.m.clone(),
            lt: self.l.clone(),
            m: self.mt.clone(),
            l: self.lt.clone(),
        }
    }

    fn dims(&self) -> (usize, usize) {
        (self.mt.degree().max(self.m.degree()), self.lt.degree().max(self.l.degree()))
    }
}

/// The `n1 p x n2 p` Bezoutian with `n1 = max(deg M, deg Mt)` and
/// `n2 = max(deg L, deg Lt)`, built by `B_{i,j} = P_{i+1,j} + B_{i+1,j-1}`
/// from the coefficient grid `P` of the numerator, then checked against the
/// defining identity.
pub fn bezoutian(q: &BezoutQuadruple) -> Result<CMatrix> {
    let b = bezoutian_unchecked(q);
    let residual = bezoutian_residual(q, &b);
    if residual > IDENTITY_TOL {
        return Err(Error::CommonMultipleViolated { residual });
    }
    Ok(b)
}

fn bezoutian_unchecked(q: &BezoutQuadruple) -> CMatrix {
    let p = q.mt.p();
    let (n1, n2) = q.dims();
    let grid = |a: usize, bb: usize| -> CMatrix {
        &(&q.mt.power_coeff(a) * &q.lt.power_coeff(bb)) - &(&q.m.power_coeff(a) * &q.l.power_coeff(bb))
    };
    let mut blocks = alloc::vec![alloc::vec![CMatrix::zeros(p, p); n2]; n1];
    for i in (0..n1).rev() {
        for j in 0..n2 {
            let mut v = grid(i + 1, j);
            if i + 1 < n1 && j >= 1 {
                v = &v + &blocks[i + 1][j - 1];
            }
            blocks[i][j] = v;
        }
    }
    let mut out = CMatrix::zeros(n1 * p, n2 * p);
    for (i, row) in blocks.iter().enumerate() {
        for (j, blk) in row.iter().enumerate() {
            out.set_block(i * p, j * p, blk);
        }
    }
    out
}

/// Largest relative residual of `(z - u) Z(z) B U(u) = Mt(z) Lt(u) - M(z) L(u)`
/// over ten sample pairs.
pub fn bezoutian_residual(q: &BezoutQuadruple, b: &CMatrix) -> f64 {
    let p = q.mt.p();
    let (n1, n2) = q.dims();
    let r = q.radius();
    let zs = sample_points(10, r, 11);
    let us = sample_points(10, r, 13);
    let mut worst: f64 = 0.0;
    for (z, u) in zs.into_iter().zip(us) {
        let left = CMatrix::from_fn(p, n1 * p, |i, col| if col % p == i { z.powu((col / p) as u32) } else { c(0.0, 0.0) });
        let right = CMatrix::from_fn(n2 * p, p, |row, j| if row % p == j { u.powu((row / p) as u32) } else { c(0.0, 0.0) });
        let lhs = (&(&left * b) * &right).scale(z - u);
        let a1 = &q.mt.eval(z) * &q.lt.eval(u);
        let a2 = &q.m.eval(z) * &q.l.eval(u);
        let scale = a1.norm_max().max(a2.norm_max()).max(lhs.norm_max());
        if scale > 0.0 {
            worst = worst.max(lhs.max_abs_diff(&(&a1 - &a2)) / scale);
        }
    }
    worst
}

/// The quadruple realizing the Markov quotient as a two-sided fraction in
/// `w`, for monic `F` whose natural Markov parameters are Hermitian:
/// even degree `D_R(w) = F_e(-w)`, `N_R(w) = -F_o(-w)`; odd degree
/// `D_R(w) = w F_o(-w)`, `N_R(w) = F_e(-w)`; `D_L = D_R^v`, `N_L = N_R^v`.
/// Then `N_R D_R^{-1} = sum s_k w^{-k-1}` and the quadruple is
/// `(Mt, Lt, M, L) = (D_L, N_R, N_L, D_R)`.
pub fn markov_quadruple(f: &MatrixPolynomial) -> Result<BezoutQuadruple> {
    f.ensure_monic()?;
    let pair = f.even_odd_split();
    let minus = c(-1.0, 0.0);
    let (dr, nr) = if f.degree() % 2 == 0 {
        (pair.even.substitute(minus, 1), pair.odd.substitute(minus, 1).neg())
    } else {
        (pair.odd.substitute(minus, 1).shift(1), pair.even.substitute(minus, 1))
    };
    BezoutQuadruple::new(dr.adjoint_reversal(), nr.clone(), nr.adjoint_reversal(), dr)
}

/// Relative residual of `B = W_L H W_R`, with `W_L[r][a] = D_{L, r+a+1}`,
/// `W_R[b][c] = D_{R, b+c+1}` (ascending coefficients, zero past the degree)
/// and `H[a][b] = s_{a+b}`, where `D_L = Mt` and `D_R = L`.
pub fn bezout_hankel_congruence_check(q: &BezoutQuadruple, s: &MarkovSequence) -> Result<f64> {
    let p = q.mt.p();
    if s.p != p {
        return Err(Error::DimensionMismatch("sequence block size"));
    }
    let (ml, mr) = (q.mt.degree(), q.l.degree());
    if s.len() + 1 < ml + mr {
        return Err(Error::DimensionMismatch("too few Markov parameters for the Hankel factor"));
    }
    let anti = |d: &MatrixPolynomial, n: usize| {
        let mut w = CMatrix::zeros(n * p, n * p);
        for r in 0..n {
            for a in 0..n - r {
                w.set_block(r * p, a * p, &d.power_coeff(r + a + 1));
            }
        }
        w
    };
    let mut h = CMatrix::zeros(ml * p, mr * p);
    for a in 0..ml {
        for b in 0..mr {
            h.set_block(a * p, b * p, &s.blocks[a + b]);
        }
    }
    let rhs = &(&anti(&q.mt, ml) * &h) * &anti(&q.l, mr);
    let b = bezoutian(q)?;
    if b.rows() != rhs.rows() || b.cols() != rhs.cols() {
        return Err(Error::DimensionMismatch("Bezoutian and Hankel factor shapes differ"));
    }
    Ok(rel(&b, &rhs))
}

/// Zero counts of `L` with respect to the real line (upper half plane,
/// lower half plane, real line) from the inertia of
/// `-i B_{L1^v, L^v}(L, L1)` and the zeros of a common right divisor of `L`
/// and `L1`, which is only computed when that Bezoutian is singular.
/// Requires `L^v L = L1^v L1`.
pub fn hermite_fujiwara_inertia(l: &MatrixPolynomial, l1: &MatrixPolynomial, tols: Tolerances) -> Result<GammaTriple> {
    let q = BezoutQuadruple {
        mt: l1.adjoint_reversal(),
        lt: l1.clone(),
        m: l.adjoint_reversal(),
        l: l.clone(),
    };
    let residual = q.common_multiple_residual();
    if residual > IDENTITY_TOL {
        return Err(Error::QuadrupleIdentityViolated { residual });
    }
    let b = bezoutian(&q)?;
    let h = b.scale(c(0.0, -1.0));
    let inr: InertiaTriple = inertia(&h, tols.linalg)?;
    if inr.delta == 0 {
        return Ok(GammaTriple {
            plus: inr.pi,
            minus: inr.nu,
            zero: 0,
        });
    }
    let g = grcd(l, l1, tols.linalg)?.divisor;
    let gd = gamma_oracle(&g, tols.axis)?;
    let zero = inr
        .delta
        .checked_sub(gd.plus + gd.minus)
        .ok_or(Error::DimensionMismatch("common divisor has more off-line zeros than the Bezoutian deficit"))?;
    Ok(GammaTriple {
        plus: inr.pi + gd.plus,
        minus: inr.nu + gd.minus,
        zero,
    })
}

/// [`hermite_fujiwara_inertia`] with `L1 = L^v`, valid when `L` commutes with `L^v`.
pub fn hermite_fujiwara_inertia_default(l: &MatrixPolynomial, tols: Tolerances) -> Result<GammaTriple> {
    hermite_fujiwara_inertia(l, &l.adjoint_reversal(), tols)
}
