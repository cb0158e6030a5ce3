//! Matricial Stieltjes continued fractions.
//!
//! With `(P_0, P_1) = (F_e, F_o)` for even degree and `(F_o, F_e)` for odd
//! degree, the expansion runs `P_{k+1} = P_{k-1} - [z] c_k P_k` where the
//! factor `z` is present on alternating levels, starting with a `z`-level for
//! even degree and a constant level for odd degree. Unfolded, this is
//! `P_0 P_1^{-1} = [z] c_1 + 1 / ([z] c_2 + 1 / (... + 1 / ([z] c_n)))`
//! with right quotients `A / B = A B^{-1}`.

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::criteria::{decide, Certificate, CriterionVerdict, InapplicableCause, Verdict, NEAR_SINGULAR_REASON};
use crate::hermitian::{inertia, is_positive_definite};
use crate::markov::{default_count, hermitian_truncation_check, markov, MarkovKind, Side};
use crate::poly::{EvenOddPair, Parity};
use crate::{CMatrix, Error, MatrixPolynomial, Result};

/// Relative singular-value threshold for leading blocks during expansion.
pub const BREAKDOWN_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfPattern {
    /// Even degree, first level `z c_1`.
    Even,
    /// Odd degree, first level the constant `c_1`.
    Odd,
    /// Odd degree written as `F_e / F_o`: first level `z`-weighted with the
    /// same parameters, the constant `c_1` attached to the reciprocal.
    OddC,
}

#[derive(Clone, Debug, PartialEq)]
pub struct StieltjesCF {
    pub p: usize,
    pub pattern: CfPattern,
    /// `c_1, ..., c_n`.
    pub params: Vec<CMatrix>,
}

impl StieltjesCF {
    pub fn degree(&self) -> usize {
        self.params.len()
    }
}

/// Whether level `k` (1-based) carries the factor `z`.
fn z_level(parity: Parity, k: usize) -> bool {
    match parity {
        Parity::Even => k % 2 == 1,
        Parity::Odd => k % 2 == 0,
    }
}

/// Restricts `q` to the structural degree `d` (drops higher blocks).
fn at_degree(q: &MatrixPolynomial, d: usize) -> MatrixPolynomial {
    let blocks: Vec<CMatrix> = (0..=d).rev().map(|j| q.power_coeff(j)).collect();
    MatrixPolynomial::from_blocks(blocks).expect("square blocks")
}

/// Continued-fraction parameters of a monic `F`.
pub fn cf_expand(f: &MatrixPolynomial) -> Result<StieltjesCF> {
    f.ensure_monic()?;
    let n = f.degree();
    if n == 0 {
        return Err(Error::DimensionMismatch("continued fractions need degree at least 1"));
    }
    let parity = Parity::of(n);
    let pair = f.even_odd_split();
    let m = n / 2;
    let (p0, p1, d0, d1) = match parity {
        Parity::Even => (pair.even, pair.odd, m, m - 1),
        Parity::Odd => (pair.odd, pair.even, m, m),
    };
    let mut prev = (p0, d0);
    let mut cur = (p1, d1);
    let mut params = Vec::with_capacity(n);
    for k in 1..=n {
        let lead_prev = prev.0.power_coeff(prev.1);
        let lead_cur = cur.0.power_coeff(cur.1);
        if lead_cur.is_numerically_singular(BREAKDOWN_TOL) {
            return Err(Error::ExpansionBreakdown { level: k });
        }
        let ck = lead_cur.solve_right(&lead_prev)?.ok_or(Error::ExpansionBreakdown { level: k })?;
        if k < n {
            let zl = z_level(parity, k);
            let step = cur.0.left_mul(&ck);
            let step = if zl { step.shift(1) } else { step };
            let next_deg = if zl { prev.1 - 1 } else { cur.1 - 1 };
            let next = at_degree(&prev.0.sub(&step), next_deg);
            prev = core::mem::replace(&mut cur, (next, next_deg));
        }
        params.push(ck);
    }
    Ok(StieltjesCF {
        p: f.p(),
        pattern: match parity {
            Parity::Even => CfPattern::Even,
            Parity::Odd => CfPattern::Odd,
        },
        params,
    })
}

/// Folds the fraction back into the even and odd parts of a monic polynomial.
pub fn cf_synthesize(cf: &StieltjesCF) -> Result<EvenOddPair> {
    let n = cf.params.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("empty continued fraction"));
    }
    let p = cf.p;
    for (i, ck) in cf.params.iter().enumerate() {
        if ck.rows() != p || ck.cols() != p {
            return Err(Error::NonSquareBlock { index: i, p });
        }
        if ck.is_numerically_singular(BREAKDOWN_TOL) {
            return Err(if i + 1 == n {
                Error::SingularTailParameter
            } else {
                Error::SingularParameter { index: i + 1 }
            });
        }
    }
    let parity = match cf.pattern {
        CfPattern::Even => Parity::Even,
        CfPattern::Odd | CfPattern::OddC => Parity::Odd,
    };
    if Parity::of(n) != parity {
        return Err(Error::WrongParity { degree: n });
    }
    // P_n = I, P_{n+1} = 0, P_{k-1} = [z] c_k P_k + P_{k+1}
    let mut next = MatrixPolynomial::zero(p);
    let mut cur = MatrixPolynomial::constant(CMatrix::identity(p))?;
    for k in (1..=n).rev() {
        let step = cur.left_mul(&cf.params[k - 1]);
        let step = if z_level(parity, k) { step.shift(1) } else { step };
        let prev = step.add(&next).trim_with(0.0);
        next = cur;
        cur = prev;
    }
    let (p0, p1) = (cur, next);
    let norm = p0.leading().inverse()?.ok_or(Error::SingularParameter { index: 1 })?;
    let (p0, p1) = (p0.right_mul(&norm), p1.right_mul(&norm));
    let m = n / 2;
    let (even, odd) = match parity {
        Parity::Even => (at_degree(&p0, m), at_degree(&p1, m.saturating_sub(1))),
        Parity::Odd => (at_degree(&p1, m), at_degree(&p0, m)),
    };
    Ok(EvenOddPair { even, odd, parity })
}

/// Stable iff the fraction exists and every `c_k` is Hermitian positive
/// definite, under the Hermitian hypothesis on the Markov parameters.
pub fn hurwitz_via_cf(f: &MatrixPolynomial, tol: f64) -> Result<CriterionVerdict> {
    f.ensure_monic()?;
    let n = f.degree();
    if n == 0 {
        return Err(Error::DimensionMismatch("criteria need degree at least 1"));
    }
    let id = "continued-fraction";
    let s = markov(f, default_count(n), MarkovKind::natural(n), Side::Right)?;
    if let Some(index) = hermitian_truncation_check(&s, tol)?.first_offending {
        return Ok(CriterionVerdict::inapplicable(
            id,
            InapplicableCause::NonHermitianTruncation { index },
            alloc::format!("hypothesis (skH) fails: s_{index} is not Hermitian"),
            Vec::new(),
        ));
    }
    let cf = match cf_expand(f) {
        Ok(cf) => cf,
        Err(Error::ExpansionBreakdown { level }) => {
            return Ok(CriterionVerdict {
                id: id.to_string(),
                verdict: Verdict::Unstable,
                certificates: Vec::new(),
                cause: None,
                reason: alloc::format!("no continued fraction: singular leading block at level {level}"),
                cross_check: None,
            })
        }
        Err(e) => return Err(e),
    };
    let mut certificates = Vec::with_capacity(n);
    for (i, ck) in cf.params.iter().enumerate() {
        certificates.push(Certificate {
            name: alloc::format!("c_{}", i + 1),
            matrix: ck.clone(),
            positive_definite: Some(is_positive_definite(ck, tol)?),
            inertia: inertia(ck, tol).ok(),
        });
    }
    let Some(verdict) = decide(&certificates) else {
        return Ok(CriterionVerdict::inapplicable(
            id,
            InapplicableCause::NearSingular,
            NEAR_SINGULAR_REASON.to_string(),
            certificates,
        ));
    };
    let stable = verdict == Verdict::Stable;
    Ok(CriterionVerdict {
        id: id.to_string(),
        verdict,
        certificates,
        cause: None,
        reason: (if stable {
            "all continued-fraction parameters are positive definite"
        } else {
            "a continued-fraction parameter is not positive definite"
        })
        .to_string(),
        cross_check: None,
    })
}
