//! Stability verdicts from Markov parameters and zero counts from block-Hankel inertia.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::gcd::{glcd, grcd};
use crate::hermitian::{inertia, is_positive_definite, InertiaTriple};
use crate::markov::{
    block_hankel, default_count, hermitian_truncation_check, markov, MarkovKind, MarkovSequence, Side,
};
use crate::oracle::{gamma_oracle, GammaPrimeTriple, GammaTriple};
use crate::{c, Error, MatrixPolynomial, Result, Tolerances};
use crate::CMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Unstable,
    Inapplicable,
}

/// Why a criterion could not decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InapplicableCause {
    NonHermitianTruncation { index: isize },
    SingularLeadingBlock,
    ExpansionBreakdown { level: usize },
    /// A certificate is not positive definite only because an eigenvalue
    /// sits inside the tolerance band around zero.
    NearSingular,
}

/// A named matrix together with what was decided about it.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub name: String,
    pub matrix: CMatrix,
    pub positive_definite: Option<bool>,
    pub inertia: Option<InertiaTriple>,
}

impl Certificate {
    fn pd(name: &str, matrix: CMatrix, tol: f64) -> Result<Self> {
        let positive_definite = Some(is_positive_definite(&matrix, tol)?);
        let inertia = inertia(&matrix, tol).ok();
        Ok(Certificate {
            name: name.to_string(),
            matrix,
            positive_definite,
            inertia,
        })
    }

    fn plain(name: &str, matrix: CMatrix) -> Self {
        Certificate {
            name: name.to_string(),
            matrix,
            positive_definite: None,
            inertia: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CriterionVerdict {
    pub id: String,
    pub verdict: Verdict,
    pub certificates: Vec<Certificate>,
    pub cause: Option<InapplicableCause>,
    pub reason: String,
    /// Odd degree only: whether the first-type form reached the same verdict
    /// (`None` when it was not applicable).
    pub cross_check: Option<bool>,
}

impl CriterionVerdict {
    pub(crate) fn inapplicable(id: &str, cause: InapplicableCause, reason: String, certificates: Vec<Certificate>) -> Self {
        CriterionVerdict {
            id: id.to_string(),
            verdict: Verdict::Inapplicable,
            certificates,
            cause: Some(cause),
            reason,
            cross_check: None,
        }
    }
}

/// Outcome of the Stieltjes positive-definiteness test.
#[derive(Clone, Debug, PartialEq)]
pub struct StieltjesCheck {
    pub positive_definite: bool,
    pub certificates: Vec<Certificate>,
}

/// `H_{0, l/2}` and `H_{1, (l-1)/2}` (floors) both positive definite; blocks
/// `s_0..s_l` must be present and Hermitian. The second matrix is empty for `l = 0`.
pub fn stieltjes_positive_definite(s: &MarkovSequence, l: usize, tol: f64) -> Result<StieltjesCheck> {
    if s.len() < l + 1 {
        return Err(Error::InsufficientBlocks {
            needed: l + 1,
            available: s.len(),
        });
    }
    for (i, b) in s.blocks[..=l].iter().enumerate() {
        if !crate::hermitian::is_hermitian(b, tol)? {
            return Err(Error::NonHermitianSequence { index: i as isize });
        }
    }
    let mut certificates = Vec::new();
    let h0 = block_hankel(s, 0, l / 2)?;
    certificates.push(Certificate::pd(&hankel_name(0, l / 2), h0.matrix, tol)?);
    if l >= 1 {
        let k = (l - 1) / 2;
        let h1 = block_hankel(s, 1, k)?;
        certificates.push(Certificate::pd(&hankel_name(1, k), h1.matrix, tol)?);
    }
    let positive_definite = certificates.iter().all(|c| c.positive_definite == Some(true));
    Ok(StieltjesCheck {
        positive_definite,
        certificates,
    })
}

/// Verdict from positive-definiteness certificates: stable when all are PD,
/// unstable when one has a negative eigenvalue outside the tolerance band,
/// `None` when the only failures are eigenvalues inside the band.
pub(crate) fn decide(certs: &[Certificate]) -> Option<Verdict> {
    if certs.iter().all(|c| c.positive_definite == Some(true)) {
        Some(Verdict::Stable)
    } else if certs.iter().any(|c| c.positive_definite == Some(false) && c.inertia.is_some_and(|t| t.nu > 0)) {
        Some(Verdict::Unstable)
    } else {
        None
    }
}

pub(crate) const NEAR_SINGULAR_REASON: &str =
    "a certificate is singular within tolerance: no eigenvalue is negative beyond the band, stability undecided";

fn hankel_name(j: usize, k: usize) -> String {
    alloc::format!("H[{j},{k}]")
}

fn side_tag(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn ensure_criterion_input(f: &MatrixPolynomial) -> Result<()> {
    f.ensure_monic()?;
    if f.degree() == 0 {
        return Err(Error::DimensionMismatch("criteria need degree at least 1"));
    }
    Ok(())
}

/// Hurwitz verdict from Markov parameters of one side.
///
/// Even degree uses `H_{m-1}` and `H_{1,m-1}`. Odd degree uses second-type
/// parameters with `H_m` and `H_{1,m-1}`; when the leading even block is
/// invertible the first-type form (`H_{m-1}`, `H_{1,m-1}`, `s_{-1}`) is
/// evaluated as well and its agreement stored in `cross_check`.
pub fn hurwitz_via_markov(f: &MatrixPolynomial, side: Side, tol: f64) -> Result<CriterionVerdict> {
    ensure_criterion_input(f)?;
    let n = f.degree();
    let id = alloc::format!("markov-{}", side_tag(side));
    let kind = MarkovKind::natural(n);
    let s = markov(f, default_count(n), kind, side)?;
    let check = hermitian_truncation_check(&s, tol)?;
    if let Some(index) = check.first_offending {
        return Ok(CriterionVerdict::inapplicable(
            &id,
            InapplicableCause::NonHermitianTruncation { index },
            alloc::format!("hypothesis (skH) fails: s_{index} is not Hermitian"),
            alloc::vec![Certificate::plain(&alloc::format!("s_{index}"), s.get(index).cloned().unwrap_or_else(|| CMatrix::zeros(0, 0)))],
        ));
    }
    let spd = stieltjes_positive_definite(&s, n - 1, tol)?;
    let Some(verdict) = decide(&spd.certificates) else {
        return Ok(CriterionVerdict::inapplicable(
            &id,
            InapplicableCause::NearSingular,
            NEAR_SINGULAR_REASON.to_string(),
            spd.certificates,
        ));
    };
    let mut out = CriterionVerdict {
        id,
        verdict,
        certificates: spd.certificates,
        cause: None,
        reason: String::from(if spd.positive_definite {
            "both block Hankel matrices are positive definite"
        } else {
            "a block Hankel matrix is not positive definite"
        }),
        cross_check: None,
    };
    if n % 2 == 1 {
        if let Some((first_verdict, certs)) = first_type_form(f, side, tol)? {
            out.cross_check = first_verdict.map(|v| v == verdict);
            out.certificates.extend(certs);
        }
    }
    Ok(out)
}

/// `None` when the form does not apply; an inner `None` when it is undecided.
fn first_type_form(f: &MatrixPolynomial, side: Side, tol: f64) -> Result<Option<(Option<Verdict>, Vec<Certificate>)>> {
    let n = f.degree();
    let s = match markov(f, default_count(n), MarkovKind::OddFirst, side) {
        Ok(s) => s,
        Err(Error::SingularLeadingEvenBlock) => return Ok(None),
        Err(e) => return Err(e),
    };
    if !hermitian_truncation_check(&s, tol)?.hermitian {
        return Ok(None);
    }
    let m = n / 2;
    let s_m1 = s.s_minus1.clone().expect("first-type parameters carry s_-1");
    let mut certs = alloc::vec![Certificate::pd("first-type s_-1", s_m1, tol)?];
    if m >= 1 {
        let spd = stieltjes_positive_definite(&s, 2 * m - 1, tol)?;
        certs.extend(spd.certificates.into_iter().map(|mut c| {
            c.name = alloc::format!("first-type {}", c.name);
            c
        }));
    }
    Ok(Some((decide(&certs), certs)))
}

/// Ingredients of the Hankel zero count.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaPrimeBreakdown {
    /// `H_{m-1}` (even degree) or `H_m` (odd degree).
    pub first: InertiaTriple,
    /// `H_{1,m-1}`.
    pub second: InertiaTriple,
    /// Zero counts of the common divisor with respect to the real line;
    /// `None` when both Hankel matrices are nonsingular.
    pub divisor: Option<GammaTriple>,
    pub divisor_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GammaPrimeReport {
    pub triple: GammaPrimeTriple,
    pub breakdown: GammaPrimeBreakdown,
}

/// Zero counts of `F` in the right half plane, left half plane and on the
/// imaginary axis from the inertia of the two block Hankel matrices, plus the
/// zeros of a greatest common divisor of `F_e(-z^2)` and `z F_o(-z^2)`
/// (right divisor for right parameters, left divisor for left parameters).
/// The divisor is only computed when a Hankel matrix is singular.
pub fn gamma_prime_via_hankel(f: &MatrixPolynomial, side: Side, tols: Tolerances) -> Result<GammaPrimeReport> {
    ensure_criterion_input(f)?;
    let n = f.degree();
    let m = n / 2;
    let kind = MarkovKind::natural(n);
    let s = markov(f, default_count(n), kind, side)?;
    let check = hermitian_truncation_check(&s, tols.linalg)?;
    if let Some(index) = check.first_offending {
        return Err(Error::NonHermitianSequence { index });
    }
    let first_order = if n % 2 == 0 { m - 1 } else { m };
    let first = inertia(&block_hankel(&s, 0, first_order)?.matrix, tols.linalg)?;
    let second = if m >= 1 {
        inertia(&block_hankel(&s, 1, m - 1)?.matrix, tols.linalg)?
    } else {
        InertiaTriple::default()
    };
    let deficit = first.delta + second.delta;
    let (divisor, divisor_degree) = if deficit == 0 {
        (None, None)
    } else {
        let pair = f.even_odd_split();
        let a = pair.even.substitute(c(-1.0, 0.0), 2);
        let b = pair.odd.substitute(c(-1.0, 0.0), 2).shift(1);
        let g = match side {
            Side::Right => grcd(&a, &b, tols.linalg)?.divisor,
            Side::Left => glcd(&a, &b, tols.linalg)?,
        };
        let gamma = gamma_oracle(&g, tols.axis)?;
        (Some(gamma), Some(gamma.plus + gamma.minus + gamma.zero))
    };
    let (gp, gm) = divisor.map_or((0, 0), |g| (g.plus, g.minus));
    let zero = deficit
        .checked_sub(gp + gm)
        .ok_or(Error::DimensionMismatch("common divisor has more off-line zeros than the Hankel deficit"))?;
    let triple = GammaPrimeTriple {
        plus: first.nu + second.nu + gm,
        minus: first.pi + second.pi + gp,
        zero,
    };
    Ok(GammaPrimeReport {
        triple,
        breakdown: GammaPrimeBreakdown {
            first,
            second,
            divisor,
            divisor_degree,
        },
    })
}
