//! Block-Hankel minors and quasiminors of Markov parameter sequences.

use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hermitian::{is_positive_definite, quasideterminant};
use crate::markov::{default_count, markov, MarkovKind, MarkovSequence, Side};
use crate::poly::hadamard_bound;
use crate::{CMatrix, Complex, Error, MatrixPolynomial, Result};

/// Relative uncertainty attributed to computed Markov parameters when
/// classifying minors.
pub const MINOR_TOL: f64 = 1e-10;

fn check_indices(rows: &[usize], cols: &[usize]) -> Result<()> {
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    if rows.is_empty() || rows.len() != cols.len() || !increasing(rows) || !increasing(cols) {
        return Err(Error::DimensionMismatch("index sets must be strictly increasing and of equal size"));
    }
    Ok(())
}

/// The `l p x l p` matrix with block `(a, b)` equal to `s_{rows[a] + cols[b]}`.
pub fn hankel_submatrix(s: &MarkovSequence, rows: &[usize], cols: &[usize]) -> Result<CMatrix> {
    check_indices(rows, cols)?;
    let (l, p) = (rows.len(), s.p);
    let top = rows[l - 1] + cols[l - 1];
    if top >= s.len() {
        return Err(Error::InsufficientBlocks {
            needed: top + 1,
            available: s.len(),
        });
    }
    let mut m = CMatrix::zeros(l * p, l * p);
    for (a, &r) in rows.iter().enumerate() {
        for (b, &c) in cols.iter().enumerate() {
            m.set_block(a * p, b * p, &s.blocks[r + c]);
        }
    }
    Ok(m)
}

pub fn hankel_minor(s: &MarkovSequence, rows: &[usize], cols: &[usize]) -> Result<Complex> {
    hankel_submatrix(s, rows, cols)?.determinant()
}

pub fn hankel_quasiminor(s: &MarkovSequence, rows: &[usize], cols: &[usize]) -> Result<CMatrix> {
    let m = hankel_submatrix(s, rows, cols)?;
    quasideterminant(&m, s.p, rows.len())
}

/// Largest order at which minors of `s` can be nonzero: `m` for even-kind
/// and first-type parameters, `m + 1` for second-type ones.
pub fn minor_rank_bound(s: &MarkovSequence) -> usize {
    let m = s.source_degree / 2;
    match s.kind {
        MarkovKind::OddSecond => m + 1,
        _ => m,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuasiminorEntry {
    pub order: usize,
    pub row_offset: usize,
    pub col_offset: usize,
    /// `None` when the leading block is singular.
    pub quasiminor: Option<CMatrix>,
    pub positive_definite: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuasiminorReport {
    pub entries: Vec<QuasiminorEntry>,
    /// `(order, row offset, column offset)` of the first failure.
    pub first_failure: Option<(usize, usize, usize)>,
}

impl QuasiminorReport {
    pub fn all_positive_definite(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Contiguous quasiminors (rows `j..j+l`, columns `k..k+l`) of the natural
/// Markov parameters for offsets `j, k <= window` (default `2m`) and orders
/// `l <= m`; for odd degree also order `m + 1` at offset `(0, 0)`.
pub fn contiguous_quasiminor_suite(
    f: &MatrixPolynomial,
    side: Side,
    window: Option<usize>,
    tol: f64,
) -> Result<QuasiminorReport> {
    f.ensure_monic()?;
    let n = f.degree();
    let m = n / 2;
    let window = window.unwrap_or(2 * m);
    let top = 2 * window + 2 * (m + 1);
    let s = markov(f, top.max(default_count(n)), MarkovKind::natural(n), side)?;
    let mut entries = Vec::new();
    let mut orders: Vec<(usize, usize, usize)> = Vec::new();
    for l in 1..=m {
        for j in 0..=window {
            for k in 0..=window {
                orders.push((l, j, k));
            }
        }
    }
    if n % 2 == 1 {
        orders.insert(0, (m + 1, 0, 0));
    }
    orders.sort();
    let mut first_failure = None;
    for (l, j, k) in orders {
        let rows: Vec<usize> = (j..j + l).collect();
        let cols: Vec<usize> = (k..k + l).collect();
        let q = match hankel_quasiminor(&s, &rows, &cols) {
            Ok(q) => Some(q),
            Err(Error::SingularLeadingBlock) => None,
            Err(e) => return Err(e),
        };
        let positive_definite = match &q {
            Some(q) => is_positive_definite(q, tol)?,
            None => false,
        };
        if !positive_definite && first_failure.is_none() {
            first_failure = Some((l, j, k));
        }
        entries.push(QuasiminorEntry {
            order: l,
            row_offset: j,
            col_offset: k,
            quasiminor: q,
            positive_definite,
        });
    }
    Ok(QuasiminorReport { entries, first_failure })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VanishingReport {
    pub max_abs: f64,
    /// Largest `|minor|` divided by the Hadamard bound of its submatrix.
    pub max_relative: f64,
    pub sampled: usize,
}

/// Minors of orders `m + 1` and `m + 2`: every contiguous one with offsets
/// below `window` plus `budget` random index sets drawn from `0..window`.
pub fn vanishing_check(s: &MarkovSequence, m: usize, budget: usize, window: usize, seed: u64) -> Result<VanishingReport> {
    let mut sets: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for l in [m + 1, m + 2] {
        for j in 0..window {
            for k in 0..window {
                sets.push(((j..j + l).collect(), (k..k + l).collect()));
            }
        }
        if l <= window {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ l as u64);
            for _ in 0..budget {
                let mut r = sample(&mut rng, window, l).into_vec();
                let mut c = sample(&mut rng, window, l).into_vec();
                r.sort_unstable();
                c.sort_unstable();
                sets.push((r, c));
            }
        }
    }
    let mut out = VanishingReport {
        max_abs: 0.0,
        max_relative: 0.0,
        sampled: 0,
    };
    for (r, c) in sets {
        let top = r[r.len() - 1] + c[c.len() - 1];
        if top >= s.len() {
            continue;
        }
        let sub = hankel_submatrix(s, &r, &c)?;
        let d = sub.determinant()?.norm();
        let bound = hadamard_bound(&sub);
        out.max_abs = out.max_abs.max(d);
        if bound > 0.0 {
            out.max_relative = out.max_relative.max(d / bound);
        }
        out.sampled += 1;
    }
    if out.sampled == 0 {
        return Err(Error::InsufficientBlocks {
            needed: 2 * (m + 1),
            available: s.len(),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorClass {
    PositiveReal,
    NegativeReal,
    NearZero,
    NonReal,
}

/// First-order uncertainty of `det m` when every entry carries relative
/// error `rel`: `rel |det m| sum_ij |m_ij| |(m^{-1})_ji|`, or `rel` times
/// the Hadamard bound when `m` is singular.
pub fn minor_noise(m: &CMatrix, rel: f64) -> Result<f64> {
    let det = m.determinant()?;
    let Some(inv) = m.inverse()? else {
        return Ok(rel * hadamard_bound(m));
    };
    let n = m.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            sum += m[(i, j)].norm() * inv[(j, i)].norm();
        }
    }
    let noise = rel * det.norm() * sum;
    Ok(if noise.is_finite() { noise } else { rel * hadamard_bound(m) })
}

/// Classifies a minor against its absolute uncertainty `noise`.
pub fn classify_minor(value: Complex, noise: f64) -> MinorClass {
    if value.norm() <= noise {
        MinorClass::NearZero
    } else if value.im.abs() > noise {
        MinorClass::NonReal
    } else if value.re > 0.0 {
        MinorClass::PositiveReal
    } else {
        MinorClass::NegativeReal
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinorFinding {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Complex,
    pub class: MinorClass,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn contiguous(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Non-contiguous minors of orders `2..=m` with indices in `0..=window`
/// that are not positive real.
pub fn scan_noncontiguous(s: &MarkovSequence, m: usize, window: usize) -> Result<Vec<MinorFinding>> {
    let mut found = Vec::new();
    for l in 2..=m {
        let sets = combinations(window + 1, l);
        for r in &sets {
            for c in &sets {
                if contiguous(r) && contiguous(c) {
                    continue;
                }
                if r[l - 1] + c[l - 1] >= s.len() {
                    continue;
                }
                let sub = hankel_submatrix(s, r, c)?;
                let value = sub.determinant()?;
                let class = classify_minor(value, minor_noise(&sub, MINOR_TOL)?);
                if class != MinorClass::PositiveReal {
                    found.push(MinorFinding {
                        rows: r.clone(),
                        cols: c.clone(),
                        value,
                        class,
                    });
                }
            }
        }
    }
    Ok(found)
}
