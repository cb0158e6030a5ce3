//! Matricial Markov parameters, their block-Hankel matrices, and the inverse
//! map from parameters back to odd coefficients.
//!
//! With `t_k = (-1)^k s_k`:
//! * even degree: `F_o F_e^{-1} = sum t_k z^{-(k+1)}`;
//! * odd degree, first type: `F_o F_e^{-1} = s_{-1} + sum t_k z^{-(k+1)}`;
//! * odd degree, second type: `F_e F_o^{-1} = sum t_k z^{-k}`.
//!
//! Left parameters expand the left quotients `F_e^{-1} F_o` and so on; they
//! are the adjoints of the right parameters of `F^v`.

use alloc::vec::Vec;

use crate::hermitian::is_hermitian;
use crate::{CMatrix, Error, MatrixPolynomial, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkovKind {
    Even,
    OddFirst,
    OddSecond,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl MarkovKind {
    /// The kind the criteria use for a given degree.
    pub fn natural(degree: usize) -> Self {
        if degree % 2 == 0 {
            MarkovKind::Even
        } else {
            MarkovKind::OddSecond
        }
    }

    fn fits(self, degree: usize) -> bool {
        (degree % 2 == 0) == (self == MarkovKind::Even)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MarkovSequence {
    pub p: usize,
    pub kind: MarkovKind,
    pub side: Side,
    /// Present exactly for first-type parameters.
    pub s_minus1: Option<CMatrix>,
    /// `s_0, s_1, ...`.
    pub blocks: Vec<CMatrix>,
    pub source_degree: usize,
}

impl MarkovSequence {
    /// Wraps raw blocks, checking uniform shape and kind/parity consistency.
    pub fn new(
        kind: MarkovKind,
        side: Side,
        s_minus1: Option<CMatrix>,
        blocks: Vec<CMatrix>,
        source_degree: usize,
    ) -> Result<Self> {
        let p = blocks.first().ok_or(Error::InsufficientBlocks { needed: 1, available: 0 })?.rows();
        for (index, b) in blocks.iter().chain(s_minus1.iter()).enumerate() {
            if b.rows() != p || b.cols() != p {
                return Err(Error::NonSquareBlock { index, p });
            }
        }
        if !kind.fits(source_degree) || (kind == MarkovKind::OddFirst) != s_minus1.is_some() {
            return Err(Error::WrongParity { degree: source_degree });
        }
        Ok(MarkovSequence {
            p,
            kind,
            side,
            s_minus1,
            blocks,
            source_degree,
        })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `s_i` for `i >= -1`.
    pub fn get(&self, i: isize) -> Option<&CMatrix> {
        if i == -1 {
            self.s_minus1.as_ref()
        } else if i >= 0 {
            self.blocks.get(i as usize)
        } else {
            None
        }
    }

    fn require(&self, i: isize) -> Result<&CMatrix> {
        self.get(i).ok_or(Error::InsufficientBlocks {
            needed: (i + 1).max(0) as usize,
            available: self.blocks.len(),
        })
    }

    /// Index range that must be Hermitian for the criteria to apply.
    pub fn truncation(&self) -> core::ops::RangeInclusive<isize> {
        let n = self.source_degree as isize;
        let m = n / 2;
        match self.kind {
            MarkovKind::Even => 0..=n - 1,
            MarkovKind::OddSecond => 0..=2 * m,
            MarkovKind::OddFirst => -1..=2 * m - 1,
        }
    }
}

/// Default number of blocks: `2 n + 2`.
pub fn default_count(degree: usize) -> usize {
    2 * degree + 2
}

fn sign(k: usize) -> f64 {
    if k % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn check(f: &MatrixPolynomial, kind: MarkovKind, count: usize) -> Result<()> {
    f.ensure_monic()?;
    if !kind.fits(f.degree()) {
        return Err(Error::WrongParity { degree: f.degree() });
    }
    if count == 0 {
        return Err(Error::InsufficientBlocks { needed: 1, available: 0 });
    }
    Ok(())
}

/// Descending coefficient `i` of `q`, zero beyond its degree.
fn desc(q: &MatrixPolynomial, i: usize) -> CMatrix {
    if i <= q.degree() {
        q.coeff(i).clone()
    } else {
        CMatrix::zeros(q.p(), q.p())
    }
}

/// Forced recurrence `t_i = num_i - sum_{k<i} t_k den_{i-k}`, `den_0 = I`.
fn expand(num: &MatrixPolynomial, den: &MatrixPolynomial, count: usize) -> Vec<CMatrix> {
    let mut t: Vec<CMatrix> = Vec::with_capacity(count);
    for i in 0..count {
        let mut acc = desc(num, i);
        for (k, tk) in t.iter().enumerate() {
            if i - k <= den.degree() {
                acc = &acc - &(tk * den.coeff(i - k));
            }
        }
        t.push(acc);
    }
    t.into_iter().enumerate().map(|(k, tk)| tk.scale_real(sign(k))).collect()
}

/// Right Markov parameters of a monic even-degree `F`.
pub fn markov_right(f: &MatrixPolynomial, count: usize) -> Result<MarkovSequence> {
    check(f, MarkovKind::Even, count)?;
    let pair = f.even_odd_split();
    let blocks = expand(&pair.odd, &pair.even, count);
    MarkovSequence::new(MarkovKind::Even, Side::Right, None, blocks, f.degree())
}

/// Right first-type parameters of a monic odd-degree `F`.
pub fn markov_right_first_type(f: &MatrixPolynomial, count: usize) -> Result<MarkovSequence> {
    check(f, MarkovKind::OddFirst, count)?;
    let pair = f.even_odd_split();
    let (fe, fo) = (&pair.even, &pair.odd);
    let lead = fe.leading();
    if lead.is_numerically_singular(1e-12) {
        return Err(Error::SingularLeadingEvenBlock);
    }
    let lead_inv = lead.inverse()?.ok_or(Error::SingularLeadingEvenBlock)?;
    let s_m1 = lead_inv.clone();
    let mut t: Vec<CMatrix> = Vec::with_capacity(count);
    for i in 1..=count {
        let mut acc = &desc(fo, i) - &(&s_m1 * &desc(fe, i));
        for (k, tk) in t.iter().enumerate() {
            if i - 1 - k <= fe.degree() {
                acc = &acc - &(tk * fe.coeff(i - 1 - k));
            }
        }
        t.push(&acc * &lead_inv);
    }
    let blocks = t.into_iter().enumerate().map(|(k, tk)| tk.scale_real(sign(k))).collect();
    MarkovSequence::new(MarkovKind::OddFirst, Side::Right, Some(s_m1), blocks, f.degree())
}

/// Right second-type parameters of a monic odd-degree `F`.
pub fn markov_right_second_type(f: &MatrixPolynomial, count: usize) -> Result<MarkovSequence> {
    check(f, MarkovKind::OddSecond, count)?;
    let pair = f.even_odd_split();
    let blocks = expand(&pair.even, &pair.odd, count);
    MarkovSequence::new(MarkovKind::OddSecond, Side::Right, None, blocks, f.degree())
}

/// Left parameters: adjoints of the right parameters of `F^v`.
pub fn markov_left(f: &MatrixPolynomial, count: usize, kind: MarkovKind) -> Result<MarkovSequence> {
    let right = markov_right_of_kind(&f.adjoint_reversal(), count, kind)?;
    Ok(MarkovSequence {
        side: Side::Left,
        s_minus1: right.s_minus1.as_ref().map(CMatrix::adjoint),
        blocks: right.blocks.iter().map(CMatrix::adjoint).collect(),
        ..right
    })
}

fn markov_right_of_kind(f: &MatrixPolynomial, count: usize, kind: MarkovKind) -> Result<MarkovSequence> {
    match kind {
        MarkovKind::Even => markov_right(f, count),
        MarkovKind::OddFirst => markov_right_first_type(f, count),
        MarkovKind::OddSecond => markov_right_second_type(f, count),
    }
}

/// Dispatches on kind and side.
pub fn markov(f: &MatrixPolynomial, count: usize, kind: MarkovKind, side: Side) -> Result<MarkovSequence> {
    match side {
        Side::Right => markov_right_of_kind(f, count, kind),
        Side::Left => markov_left(f, count, kind),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockHankelView {
    pub j: isize,
    pub k: usize,
    /// `(k+1) p x (k+1) p`, block `(a, b)` equal to `s_{j+a+b}`.
    pub matrix: CMatrix,
}

/// `H_{j,k} = [s_{j+a+b}]_{a,b=0..=k}`.
pub fn block_hankel(s: &MarkovSequence, j: isize, k: usize) -> Result<BlockHankelView> {
    let p = s.p;
    s.require(j + 2 * k as isize)?;
    s.require(j)?;
    let mut matrix = CMatrix::zeros((k + 1) * p, (k + 1) * p);
    for a in 0..=k {
        for b in 0..=k {
            matrix.set_block(a * p, b * p, s.require(j + (a + b) as isize)?);
        }
    }
    Ok(BlockHankelView { j, k, matrix })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationCheck {
    pub hermitian: bool,
    pub first_offending: Option<isize>,
}

/// Whether every block in [`MarkovSequence::truncation`] is Hermitian.
pub fn hermitian_truncation_check(s: &MarkovSequence, tol: f64) -> Result<TruncationCheck> {
    for i in s.truncation() {
        if !is_hermitian(s.require(i)?, tol)? {
            return Ok(TruncationCheck {
                hermitian: false,
                first_offending: Some(i),
            });
        }
    }
    Ok(TruncationCheck {
        hermitian: true,
        first_offending: None,
    })
}

/// Rebuilds `(A_{2m-1}, ..., A_1)` from even-kind parameters `s_0..s_{m-1}`
/// and the even coefficients `(A_0, A_2, ..., A_{2m})`.
pub fn odd_coeffs_from_markov(s: &MarkovSequence, even_coeffs: &[CMatrix]) -> Result<Vec<CMatrix>> {
    if s.kind != MarkovKind::Even {
        return Err(Error::DimensionMismatch("odd coefficients need even-kind parameters"));
    }
    let m = even_coeffs.len().checked_sub(1).ok_or(Error::DimensionMismatch("no even coefficients"))?;
    if s.blocks.len() < m {
        return Err(Error::DimensionMismatch("too few Markov parameters"));
    }
    if even_coeffs.iter().any(|e| e.rows() != s.p || e.cols() != s.p) {
        return Err(Error::DimensionMismatch("coefficient block size"));
    }
    // A_{2i+1} = sum_{k<=i} t_k E_{i-k} (right) or E_{i-k} t_k (left)
    let mut odd: Vec<CMatrix> = (0..m)
        .map(|i| {
            (0..=i).fold(CMatrix::zeros(s.p, s.p), |acc, k| {
                let t = s.blocks[k].scale_real(sign(k));
                let e = &even_coeffs[i - k];
                let term = match s.side {
                    Side::Right => &t * e,
                    Side::Left => e * &t,
                };
                &acc + &term
            })
        })
        .collect();
    odd.reverse();
    Ok(odd)
}
