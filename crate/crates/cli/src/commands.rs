//! Command implementations. Each returns a [`Report`] whose outcome fixes the exit code.

use std::time::Instant;

use hurwitz_core::criteria::{gamma_prime_via_hankel, hurwitz_via_markov, CriterionVerdict};
use hurwitz_core::markov::{default_count, hermitian_truncation_check, markov, MarkovKind, Side};
use hurwitz_core::minors::{contiguous_quasiminor_suite, scan_noncontiguous, vanishing_check, MinorClass};
use hurwitz_core::oracle::gamma_prime_oracle;
use hurwitz_core::stieltjes::{cf_expand, hurwitz_via_cf, CfPattern};
use hurwitz_core::{Error, MatrixPolynomial, Tolerances};

use crate::input::InputError;
use crate::report::*;

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CommandError {
    /// 2 for numerically undecidable situations, 3 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Core(
                Error::ToleranceAmbiguity { .. }
                | Error::NonHermitianSequence { .. }
                | Error::ExpansionBreakdown { .. }
                | Error::SingularLeadingEvenBlock
                | Error::SingularLeadingBlock
                | Error::EigenFailure,
            ) => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scan {
    Contiguous,
    Noncontiguous,
    Vanishing,
}

#[derive(Clone, Copy, Debug)]
pub struct MinorsOptions {
    pub side: Side,
    pub max_order: Option<usize>,
    pub window: Option<usize>,
    pub scan: Scan,
    pub budget: usize,
    pub seed: u64,
}

fn side_name(side: Side) -> String {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
    .into()
}

fn kind_name(kind: MarkovKind) -> String {
    match kind {
        MarkovKind::Even => "even",
        MarkovKind::OddFirst => "odd-first",
        MarkovKind::OddSecond => "odd-second",
    }
    .into()
}

/// Monic version of `f` (left multiplication by the inverse leading block),
/// plus a note when a change was made.
pub fn normalize(f: &MatrixPolynomial) -> Result<(MatrixPolynomial, Option<String>), CommandError> {
    if f.is_monic() {
        return Ok((f.clone(), None));
    }
    let inv = f.leading().inverse()?.ok_or(Error::SingularLeadingBlock)?;
    let g = f.left_mul(&inv);
    Ok((g, Some("input multiplied on the left by the inverse of its leading coefficient".into())))
}

fn echo(f: &MatrixPolynomial) -> InputEcho {
    InputEcho {
        p: f.p(),
        degree: f.degree(),
        coefficients: f.coeffs().iter().map(matrix).collect(),
        monic: f.is_monic(),
    }
}

fn base(command: &str, f: &MatrixPolynomial, outcome: Outcome) -> Report {
    Report {
        command: command.into(),
        input: echo(f),
        outcome,
        criteria: Vec::new(),
        oracle: None,
        agreement: None,
        notes: Vec::new(),
        markov: None,
        cf: None,
        inertia: None,
        minors: None,
    }
}

fn prepared(command: &str, f: &MatrixPolynomial) -> Result<(MatrixPolynomial, Report), CommandError> {
    let (g, note) = normalize(f)?;
    let mut report = base(command, f, Outcome::Info);
    report.notes.extend(note);
    Ok((g, report))
}

fn timed<T>(run: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = run();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

fn entry_or_error(id: &str, r: Result<CriterionVerdict, Error>, ms: f64) -> CriterionEntry {
    match r {
        Ok(v) => CriterionEntry::from_verdict(&v, ms),
        Err(e) => CriterionEntry {
            id: id.into(),
            verdict: VerdictTag::Inapplicable,
            reason: e.to_string(),
            certificates: Vec::new(),
            timings: Timings { elapsed_ms: ms },
            cross_check: None,
        },
    }
}

fn hankel_entry(f: &MatrixPolynomial, tols: Tolerances) -> CriterionEntry {
    let np = f.degree() * f.p();
    let (r, ms) = timed(|| gamma_prime_via_hankel(f, Side::Right, tols));
    let (verdict, reason) = match r {
        Ok(r) => {
            let t = r.triple;
            let v = if t.minus == np { VerdictTag::Stable } else { VerdictTag::Unstable };
            (v, format!("{} zeros right, {} left, {} on the imaginary axis", t.plus, t.minus, t.zero))
        }
        Err(Error::NonHermitianSequence { index }) => {
            (VerdictTag::Inapplicable, format!("hypothesis (skH) fails: s_{index} is not Hermitian"))
        }
        Err(e) => (VerdictTag::Inapplicable, e.to_string()),
    };
    CriterionEntry {
        id: "hankel-inertia".into(),
        verdict,
        reason,
        certificates: Vec::new(),
        timings: Timings { elapsed_ms: ms },
        cross_check: None,
    }
}

/// Every criterion (Markov form on the given sides), the oracle, and whether they agree.
pub fn analyze(f: &MatrixPolynomial, sides: &[Side], tols: Tolerances) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("analyze", f)?;
    let mut criteria = Vec::new();
    for &side in sides {
        let id = format!("markov-{}", side_name(side));
        let (r, ms) = timed(|| hurwitz_via_markov(&g, side, tols.linalg));
        criteria.push(entry_or_error(&id, r, ms));
    }
    let (r, ms) = timed(|| hurwitz_via_cf(&g, tols.linalg));
    criteria.push(entry_or_error("continued-fraction", r, ms));
    criteria.push(hankel_entry(&g, tols));

    let oracle = OracleSection::new(&gamma_prime_oracle(&g, tols.axis)?, g.degree() * g.p());
    let hurwitz = oracle.stable && !oracle.marginal;
    let applicable: Vec<&CriterionEntry> = criteria.iter().filter(|c| c.verdict != VerdictTag::Inapplicable).collect();
    let expected = if hurwitz { VerdictTag::Stable } else { VerdictTag::Unstable };
    report.agreement = Some(applicable.iter().all(|c| c.verdict == expected));
    report.outcome = match applicable.first() {
        None => Outcome::Inapplicable,
        Some(first) if applicable.iter().any(|c| c.verdict != first.verdict) => Outcome::Inapplicable,
        Some(first) if first.verdict == VerdictTag::Stable => Outcome::Stable,
        Some(_) => Outcome::Unstable,
    };
    for c in criteria.iter().filter(|c| c.verdict == VerdictTag::Inapplicable) {
        report.notes.push(format!(
            "{} does not decide; the oracle finds the polynomial {}: {}",
            c.id,
            if hurwitz { "Hurwitz stable" } else { "not Hurwitz stable" },
            c.reason
        ));
    }
    if report.agreement == Some(false) {
        report.notes.push("an applicable criterion disagrees with the oracle".into());
    }
    report.criteria = criteria;
    report.oracle = Some(oracle);
    Ok(report)
}

pub fn markov_command(
    f: &MatrixPolynomial,
    kind: Option<MarkovKind>,
    side: Side,
    count: Option<usize>,
    tols: Tolerances,
) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("markov", f)?;
    let n = g.degree();
    let kind = kind.unwrap_or(MarkovKind::natural(n));
    let s = markov(&g, count.unwrap_or(default_count(n)), kind, side)?;
    let check = hermitian_truncation_check(&s, tols.linalg);
    let (hermitian, first_non_hermitian) = match check {
        Ok(c) => (c.hermitian, c.first_offending),
        Err(_) => (false, None),
    };
    report.markov = Some(MarkovSection {
        kind: kind_name(kind),
        side: side_name(side),
        s_minus1: s.s_minus1.as_ref().map(matrix),
        blocks: s.blocks.iter().map(matrix).collect(),
        hermitian,
        first_non_hermitian,
    });
    Ok(report)
}

pub fn cf_command(f: &MatrixPolynomial, tols: Tolerances) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("cf", f)?;
    let section = match cf_expand(&g) {
        Ok(cf) => CfSection {
            pattern: Some(
                match cf.pattern {
                    CfPattern::Even => "even",
                    CfPattern::Odd => "odd",
                    CfPattern::OddC => "odd-c",
                }
                .into(),
            ),
            params: cf.params.iter().map(matrix).collect(),
            failure: None,
        },
        Err(e) => CfSection {
            pattern: None,
            params: Vec::new(),
            failure: Some(e.to_string()),
        },
    };
    let (r, ms) = timed(|| hurwitz_via_cf(&g, tols.linalg));
    let entry = entry_or_error("continued-fraction", r, ms);
    report.outcome = match entry.verdict {
        VerdictTag::Stable => Outcome::Stable,
        VerdictTag::Unstable => Outcome::Unstable,
        VerdictTag::Inapplicable => Outcome::Inapplicable,
    };
    report.criteria.push(entry);
    report.cf = Some(section);
    Ok(report)
}

pub fn inertia_command(f: &MatrixPolynomial, side: Side, tols: Tolerances) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("inertia", f)?;
    let np = g.degree() * g.p();
    let oracle = gamma_prime_oracle(&g, tols.axis)?;
    let mut section = InertiaSection {
        side: side_name(side),
        hankel: None,
        failure: None,
        oracle: oracle.triple.into(),
        agree: None,
    };
    match gamma_prime_via_hankel(&g, side, tols) {
        Ok(r) => {
            let b = &r.breakdown;
            section.hankel = Some(HankelCount {
                counts: r.triple.into(),
                first_inertia: [b.first.pi, b.first.nu, b.first.delta],
                second_inertia: [b.second.pi, b.second.nu, b.second.delta],
                divisor_counts: b.divisor.map(|d| [d.plus, d.minus, d.zero]),
                divisor_degree: b.divisor_degree,
            });
            section.agree = Some(r.triple == oracle.triple);
            report.outcome = if r.triple.minus == np { Outcome::Stable } else { Outcome::Unstable };
        }
        Err(e) => {
            let code = CommandError::Core(e.clone()).exit_code();
            if code == 3 {
                return Err(e.into());
            }
            section.failure = Some(match e {
                Error::NonHermitianSequence { index } => format!("hypothesis (skH) fails: s_{index} is not Hermitian"),
                e => e.to_string(),
            });
            report.outcome = Outcome::Inapplicable;
        }
    }
    report.inertia = Some(section);
    report.oracle = Some(OracleSection::new(&oracle, np));
    Ok(report)
}

fn class_name(c: MinorClass) -> String {
    match c {
        MinorClass::PositiveReal => "positive",
        MinorClass::NegativeReal => "negative",
        MinorClass::NearZero => "near-zero",
        MinorClass::NonReal => "non-real",
    }
    .into()
}

pub fn minors_command(f: &MatrixPolynomial, opts: MinorsOptions, tols: Tolerances) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("minors", f)?;
    let n = g.degree();
    let m = n / 2;
    let window = opts.window.unwrap_or(2 * m);
    let max_order = opts.max_order.unwrap_or(m);
    let mut section = MinorsSection {
        scan: String::new(),
        side: side_name(opts.side),
        max_order,
        window,
        quasiminors: Vec::new(),
        first_failure: None,
        findings: Vec::new(),
        vanishing: None,
    };
    match opts.scan {
        Scan::Contiguous => {
            section.scan = "contiguous".into();
            let r = contiguous_quasiminor_suite(&g, opts.side, Some(window), tols.linalg)?;
            section.quasiminors = r
                .entries
                .iter()
                .filter(|e| e.order <= max_order.max(1) || (n % 2 == 1 && e.order == m + 1))
                .map(|e| QuasiminorItem {
                    order: e.order,
                    row_offset: e.row_offset,
                    col_offset: e.col_offset,
                    positive_definite: e.positive_definite,
                    quasiminor: e.quasiminor.as_ref().map(matrix),
                })
                .collect();
            section.first_failure = r.first_failure.map(|(l, j, k)| [l, j, k]);
        }
        Scan::Noncontiguous => {
            section.scan = "noncontiguous".into();
            let s = markov(&g, (2 * window + 1).max(default_count(n)), MarkovKind::natural(n), opts.side)?;
            section.findings = scan_noncontiguous(&s, max_order, window)?
                .into_iter()
                .map(|x| MinorItem {
                    rows: x.rows,
                    cols: x.cols,
                    value: [x.value.re, x.value.im],
                    class: class_name(x.class),
                })
                .collect();
        }
        Scan::Vanishing => {
            section.scan = "vanishing".into();
            let window = opts.window.unwrap_or((2 * m).max(max_order + 2));
            section.window = window;
            let kind = if n % 2 == 0 { MarkovKind::Even } else { MarkovKind::OddFirst };
            let s = markov(&g, 2 * (window + max_order + 2) + 1, kind, opts.side)?;
            let v = vanishing_check(&s, max_order, opts.budget, window, opts.seed)?;
            section.vanishing = Some(VanishingItem {
                orders: [max_order + 1, max_order + 2],
                max_abs: v.max_abs,
                max_relative: v.max_relative,
                sampled: v.sampled,
            });
        }
    }
    report.minors = Some(section);
    Ok(report)
}

pub fn oracle_command(f: &MatrixPolynomial, tols: Tolerances) -> Result<Report, CommandError> {
    let (g, mut report) = prepared("oracle", f)?;
    let o = OracleSection::new(&gamma_prime_oracle(&g, tols.axis)?, g.degree() * g.p());
    report.outcome = if o.marginal {
        Outcome::Inapplicable
    } else if o.stable {
        Outcome::Stable
    } else {
        Outcome::Unstable
    };
    report.oracle = Some(o);
    Ok(report)
}
