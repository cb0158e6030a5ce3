//! Hermitian tests, inertia, positive definiteness and block Schur complements.

use crate::{eigen, CMatrix, Error, Result};

/// Counts of positive, negative and zero eigenvalues of a Hermitian matrix.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InertiaTriple {
    pub pi: usize,
    pub nu: usize,
    pub delta: usize,
}

impl InertiaTriple {
    pub fn new(pi: usize, nu: usize, delta: usize) -> Self {
        InertiaTriple { pi, nu, delta }
    }

    pub fn dimension(&self) -> usize {
        self.pi + self.nu + self.delta
    }
}

impl core::ops::Add for InertiaTriple {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        InertiaTriple::new(self.pi + o.pi, self.nu + o.nu, self.delta + o.delta)
    }
}

/// `||M - M^*||_max <= tol (1 + ||M||_max)`.
pub fn is_hermitian(m: &CMatrix, tol: f64) -> Result<bool> {
    m.ensure_square()?;
    Ok(m.max_abs_diff(&m.adjoint()) <= tol * (1.0 + m.norm_max()))
}

/// Eigenvalue signs with zero band `tol * ||M||_2`.
pub fn inertia(m: &CMatrix, tol: f64) -> Result<InertiaTriple> {
    if !is_hermitian(m, tol)? {
        return Err(Error::NotHermitian);
    }
    let vals = eigen::hermitian_eigenvalues(m)?;
    Ok(inertia_of_values(&vals, tol))
}

pub(crate) fn inertia_of_values(vals: &[f64], tol: f64) -> InertiaTriple {
    let norm = vals.iter().map(|v| v.abs()).fold(0.0, f64::max);
    let tau = tol * norm;
    let mut t = InertiaTriple::default();
    for &v in vals {
        if v > tau {
            t.pi += 1;
        } else if v < -tau {
            t.nu += 1;
        } else {
            t.delta += 1;
        }
    }
    t
}

/// Hermitian and every pivot of a diagonally pivoted Cholesky factorization
/// exceeds `tol * ||M||_F`. The empty matrix counts as positive definite.
pub fn is_positive_definite(m: &CMatrix, tol: f64) -> Result<bool> {
    if !is_hermitian(m, tol)? {
        return Ok(false);
    }
    let tau = tol * m.norm_fro();
    let verdict = pivoted_cholesky_ok(m, tau);
    #[cfg(debug_assertions)]
    if m.rows() > 0 {
        if let Ok(vals) = eigen::hermitian_eigenvalues(m) {
            let lo = vals[0];
            if lo > 2.0 * tau || lo < -tau {
                debug_assert_eq!(verdict, lo > 0.0, "factorization and spectrum disagree");
            }
        }
    }
    Ok(verdict)
}

fn pivoted_cholesky_ok(m: &CMatrix, tau: f64) -> bool {
    let n = m.rows();
    let mut a = (m + &m.adjoint()).scale_real(0.5);
    let mut perm: alloc::vec::Vec<usize> = (0..n).collect();
    for k in 0..n {
        let (piv, best) = (k..n)
            .map(|i| (i, a[(perm[i], perm[i])].re))
            .fold((k, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        if !(best > tau) {
            return false;
        }
        perm.swap(k, piv);
        let pk = perm[k];
        let d = libm::sqrt(best);
        for &pi in &perm[k + 1..] {
            a[(pi, pk)] /= d;
        }
        for i in k + 1..n {
            for j in k + 1..=i {
                let (pi, pj) = (perm[i], perm[j]);
                let upd = a[(pi, pk)] * a[(pj, pk)].conj();
                a[(pi, pj)] -= upd;
                if i != j {
                    a[(pj, pi)] = a[(pi, pj)].conj();
                }
            }
        }
    }
    true
}

/// Quasideterminant with index `(l, l)` of an `l x l` block matrix with
/// `p x p` blocks: `M_ll - row * M_(l;l)^{-1} * col`. For `l = 1` this is `M`.
pub fn quasideterminant(m: &CMatrix, p: usize, l: usize) -> Result<CMatrix> {
    let dim = m.ensure_square()?;
    if l == 0 || dim != l * p {
        return Err(Error::DimensionMismatch("quasideterminant expects an lp x lp matrix"));
    }
    let k = (l - 1) * p;
    let corner = m.block(k, k, p, p);
    if l == 1 {
        return Ok(corner);
    }
    let lead = m.block(0, 0, k, k);
    if lead.is_numerically_singular(1e-12) {
        return Err(Error::SingularLeadingBlock);
    }
    let row = m.block(k, 0, p, k);
    let col = m.block(0, k, k, p);
    let x = lead.solve(&col)?.ok_or(Error::SingularLeadingBlock)?;
    Ok(&corner - &(&row * &x))
}


#[cfg(test)]
mod properties {
    use super::*;
    use crate::oracle::testing::{arb_matrix, arb_unitary};
    use crate::{c, CMatrix, Complex};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn sylvester_law(u in arb_unitary(4), signs in proptest::collection::vec(-1i8..=1, 4), mags in proptest::collection::vec(0.1f64..10.0, 4)) {
            let diag: alloc::vec::Vec<Complex> = signs.iter().zip(&mags).map(|(&s, &m)| c(s as f64 * m, 0.0)).collect();
            let d = CMatrix::from_diagonal(&diag);
            let expect = InertiaTriple::new(
                signs.iter().filter(|&&s| s > 0).count(),
                signs.iter().filter(|&&s| s < 0).count(),
                signs.iter().filter(|&&s| s == 0).count(),
            );
            let m = &(&u.adjoint() * &d) * &u;
            prop_assert_eq!(inertia(&m, 1e-9).unwrap(), expect);
        }

        #[test]
        fn pd_iff_leading_quasideterminants_pd(g in arb_matrix(6, 6), shift in -3.0f64..6.0) {
            let m = &(&g.adjoint() * &g).scale_real(0.25) + &CMatrix::identity(6).scale_real(shift);
            let pd = is_positive_definite(&m, 1e-9).unwrap();
            let mut all = true;
            for l in 1..=3 {
                let lead = m.block(0, 0, 2 * l, 2 * l);
                match quasideterminant(&lead, 2, l) {
                    Ok(q) => all &= is_positive_definite(&q, 1e-9).unwrap(),
                    Err(_) => all = false,
                }
            }
            let lo = crate::eigen::hermitian_eigenvalues(&m).unwrap()[0];
            prop_assume!(lo.abs() > 1e-6);
            prop_assert_eq!(pd, all);
        }

        #[test]
        fn determinant_factorizes(g in arb_matrix(6, 6)) {
            let m = &g + &CMatrix::identity(6).scale_real(4.0);
            let q = quasideterminant(&m, 2, 3).unwrap();
            let lhs = m.determinant().unwrap();
            let rhs = m.block(0, 0, 4, 4).determinant().unwrap() * q.determinant().unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0));
        }
    }
}
