//! Report model shared by every command. JSON is the canonical form; the
//! text rendering only projects it.

use std::fmt::Write as _;

use hurwitz_core::criteria::{Certificate, CriterionVerdict, Verdict};
use hurwitz_core::oracle::{GammaPrimeTriple, OracleReport};
use hurwitz_core::CMatrix;
use serde::{Deserialize, Serialize};

use crate::input::matrix_to_json;

pub type Matrix = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Stable,
    Unstable,
    Inapplicable,
    /// The command only reports data and decides nothing.
    Info,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Stable | Outcome::Info => 0,
            Outcome::Unstable => 1,
            Outcome::Inapplicable => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictTag {
    Stable,
    Unstable,
    Inapplicable,
}

impl From<Verdict> for VerdictTag {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Stable => VerdictTag::Stable,
            Verdict::Unstable => VerdictTag::Unstable,
            Verdict::Inapplicable => VerdictTag::Inapplicable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub p: usize,
    pub degree: usize,
    pub coefficients: Vec<Matrix>,
    pub monic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub name: String,
    pub matrix: Matrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positive_definite: Option<bool>,
    /// Positive, negative and zero eigenvalue counts.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inertia: Option<[usize; 3]>,
}

impl From<&Certificate> for CertificateEntry {
    fn from(c: &Certificate) -> Self {
        CertificateEntry {
            name: c.name.clone(),
            matrix: matrix_to_json(&c.matrix),
            positive_definite: c.positive_definite,
            inertia: c.inertia.map(|t| [t.pi, t.nu, t.delta]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionEntry {
    pub id: String,
    pub verdict: VerdictTag,
    pub reason: String,
    pub certificates: Vec<CertificateEntry>,
    pub timings: Timings,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
}

impl CriterionEntry {
    pub fn from_verdict(v: &CriterionVerdict, elapsed_ms: f64) -> Self {
        CriterionEntry {
            id: v.id.clone(),
            verdict: v.verdict.into(),
            reason: v.reason.clone(),
            certificates: v.certificates.iter().map(CertificateEntry::from).collect(),
            timings: Timings { elapsed_ms },
            cross_check: v.cross_check,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl From<GammaPrimeTriple> for Triple {
    fn from(t: GammaPrimeTriple) -> Self {
        Triple {
            plus: t.plus,
            minus: t.minus,
            zero: t.zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    /// Zeros right of, left of and on the imaginary axis.
    pub counts: Triple,
    pub stable: bool,
    pub marginal: bool,
    pub band: f64,
    pub zeros: Vec<[f64; 2]>,
}

impl OracleSection {
    pub fn new(r: &OracleReport, np: usize) -> Self {
        OracleSection {
            counts: r.triple.into(),
            stable: r.triple.minus == np,
            marginal: r.marginal,
            band: r.band,
            zeros: r.eigenvalues.iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarkovSection {
    pub kind: String,
    pub side: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s_minus1: Option<Matrix>,
    pub blocks: Vec<Matrix>,
    pub hermitian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_non_hermitian: Option<isize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CfSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pattern: Option<String>,
    pub params: Vec<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HankelCount {
    pub counts: Triple,
    pub first_inertia: [usize; 3],
    pub second_inertia: [usize; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor_counts: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor_degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InertiaSection {
    pub side: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hankel: Option<HankelCount>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub oracle: Triple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiminorItem {
    pub order: usize,
    pub row_offset: usize,
    pub col_offset: usize,
    pub positive_definite: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quasiminor: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorItem {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: [f64; 2],
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VanishingItem {
    pub orders: [usize; 2],
    pub max_abs: f64,
    pub max_relative: f64,
    pub sampled: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinorsSection {
    pub scan: String,
    pub side: String,
    pub max_order: usize,
    pub window: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quasiminors: Vec<QuasiminorItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<MinorItem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vanishing: Option<VanishingItem>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub criteria: Vec<CriterionEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub markov: Option<MarkovSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cf: Option<CfSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inertia: Option<InertiaSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minors: Option<MinorsSection>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.outcome.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{}: p = {}, degree = {}{}",
            self.command,
            self.input.p,
            self.input.degree,
            if self.input.monic { "" } else { " (not monic)" }
        );
        for c in &self.criteria {
            let _ = writeln!(out, "  {:<20} {:<13} {} ({:.2} ms)", c.id, tag(c.verdict), c.reason, c.timings.elapsed_ms);
            for cert in &c.certificates {
                if let Some(pd) = cert.positive_definite {
                    let _ = writeln!(out, "      {:<28} {}", cert.name, if pd { "PD" } else { "not PD" });
                }
            }
        }
        if let Some(m) = &self.markov {
            let _ = writeln!(out, "  {} Markov parameters ({} side), Hermitian: {}", m.kind, m.side, m.hermitian);
            if let Some(s) = &m.s_minus1 {
                let _ = writeln!(out, "    s_-1 = {}", render(s));
            }
            for (i, b) in m.blocks.iter().enumerate() {
                let _ = writeln!(out, "    s_{i} = {}", render(b));
            }
        }
        if let Some(cf) = &self.cf {
            if let Some(pat) = &cf.pattern {
                let _ = writeln!(out, "  continued fraction ({pat} pattern)");
            }
            for (i, c) in cf.params.iter().enumerate() {
                let _ = writeln!(out, "    c_{} = {}", i + 1, render(c));
            }
            if let Some(f) = &cf.failure {
                let _ = writeln!(out, "    {f}");
            }
        }
        if let Some(s) = &self.inertia {
            match (&s.hankel, &s.failure) {
                (Some(h), _) => {
                    let _ = writeln!(out, "  Hankel count ({} side): {}", s.side, triple(h.counts));
                }
                (None, Some(f)) => {
                    let _ = writeln!(out, "  Hankel count ({} side): {f}", s.side);
                }
                _ => {}
            }
            let _ = writeln!(out, "  oracle count: {}", triple(s.oracle));
        }
        if let Some(m) = &self.minors {
            let _ = writeln!(out, "  {} scan, {} side, window {}", m.scan, m.side, m.window);
            for q in &m.quasiminors {
                let _ = writeln!(
                    out,
                    "    order {} at ({}, {}): {}",
                    q.order,
                    q.row_offset,
                    q.col_offset,
                    if q.positive_definite { "PD" } else { "not PD" }
                );
            }
            for f in &m.findings {
                let _ = writeln!(out, "    rows {:?} cols {:?}: {} ({})", f.rows, f.cols, complex(f.value), f.class);
            }
            if let Some(v) = &m.vanishing {
                let _ = writeln!(
                    out,
                    "    orders {}..={}: {} minors, max |minor| {:.3e}, max ratio to Hadamard bound {:.3e}",
                    v.orders[0], v.orders[1], v.sampled, v.max_abs, v.max_relative
                );
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(
                out,
                "  oracle: {} ({}){}",
                if o.stable { "stable" } else { "not stable" },
                triple(o.counts),
                if o.marginal { ", zeros near the imaginary axis" } else { "" }
            );
        }
        if let Some(a) = self.agreement {
            let _ = writeln!(out, "  agreement: {a}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        let _ = writeln!(out, "  outcome: {}", outcome(self.outcome));
        out
    }
}

fn tag(v: VerdictTag) -> &'static str {
    match v {
        VerdictTag::Stable => "stable",
        VerdictTag::Unstable => "unstable",
        VerdictTag::Inapplicable => "inapplicable",
    }
}

fn outcome(o: Outcome) -> &'static str {
    match o {
        Outcome::Stable => "stable",
        Outcome::Unstable => "unstable",
        Outcome::Inapplicable => "inapplicable",
        Outcome::Info => "info",
    }
}

fn triple(t: Triple) -> String {
    format!("{} right, {} left, {} on the axis", t.plus, t.minus, t.zero)
}

fn complex(z: [f64; 2]) -> String {
    let [re, im] = z;
    if im == 0.0 {
        format!("{re}")
    } else {
        format!("{re}{}{}i", if im < 0.0 { '-' } else { '+' }, im.abs())
    }
}

fn render(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| r.iter().map(|&z| complex(z)).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[[{}]]", rows.join("], ["))
}

pub fn matrix(m: &CMatrix) -> Matrix {
    matrix_to_json(m)
}
