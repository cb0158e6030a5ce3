// Worked example polynomials shared by unit, integration and acceptance tests.

use hurwitz_core::{CMatrix, Complex, MatrixPolynomial};

pub fn cx(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn real(rows: &[&[f64]]) -> CMatrix {
    CMatrix::from_real_rows(rows)
}

pub fn cplx(rows: &[&[(f64, f64)]]) -> CMatrix {
    let rows: Vec<Vec<Complex>> = rows.iter().map(|r| r.iter().map(|&(a, b)| cx(a, b)).collect()).collect();
    CMatrix::from_rows(&rows)
}

fn monic(rest: Vec<CMatrix>) -> MatrixPolynomial {
    let p = rest[0].rows();
    let mut coeffs = vec![CMatrix::identity(p)];
    coeffs.extend(rest);
    MatrixPolynomial::new(coeffs).expect("fixture")
}

/// Degree 3, `p = 2`: Hermitian second-type parameters, quasiminor indefinite.
pub fn unstable_cubic_2x2() -> MatrixPolynomial {
    monic(vec![
        real(&[&[3.0, 4.0], &[4.0, 8.0]]),
        cplx(&[&[(23.0, -15.0), (33.0, 35.0)], &[(12.0, -10.0), (17.0, 15.0)]]),
        cplx(&[&[(115.0, -85.0), (170.0, 165.0)], &[(191.0, -140.0), (261.0, 260.0)]]),
    ])
}

/// Second-type right parameters `s_0..s_3` of [`unstable_cubic_2x2`].
pub fn unstable_cubic_markov() -> Vec<CMatrix> {
    vec![
        real(&[&[3.0, 4.0], &[4.0, 8.0]]),
        real(&[&[2.0, -3.0], &[-3.0, 7.0]]),
        cplx(&[&[(10.0, 0.0), (15.0, 25.0)], &[(15.0, -25.0), (20.0, 0.0)]]),
        cplx(&[&[(660.0, 0.0), (210.0, 1000.0)], &[(210.0, -1000.0), (1710.0, 0.0)]]),
    ]
}

/// `s_2 - s_1 s_0^{-1} s_1` for [`unstable_cubic_2x2`]; indefinite.
pub fn unstable_cubic_complement() -> CMatrix {
    cplx(&[&[(-27.0 / 8.0, 0.0), (323.0 / 8.0, 25.0)], &[(323.0 / 8.0, -25.0), (-227.0 / 8.0, 0.0)]])
}

/// Degree 3, `p = 3`, Hurwitz stable with Hermitian second-type parameters.
pub fn stable_cubic_3x3() -> MatrixPolynomial {
    monic(vec![
        cplx(&[
            &[(2.0, 0.0), (-1.0, -1.0), (0.0, 1.0)],
            &[(-1.0, 1.0), (2.0, 0.0), (-1.0, 0.0)],
            &[(0.0, -1.0), (-1.0, 0.0), (2.0, 0.0)],
        ]),
        cplx(&[
            &[(65.0, 3.0), (-6.0, 0.0), (0.0, 70.0)],
            &[(-1.0, 30.0), (5.0, -3.0), (-35.0, -3.0)],
            &[(2.0, -20.0), (0.0, 4.0), (40.0, 0.0)],
        ]),
        cplx(&[
            &[(180.0, -21.0), (-24.0, -3.0), (32.0, 219.0)],
            &[(-72.0, 143.0), (14.0, -16.0), (-180.0, -76.0)],
            &[(8.0, -136.0), (-5.0, 17.0), (182.0, 3.0)],
        ]),
    ])
}

/// Second-type right parameters `s_0..s_2` of [`stable_cubic_3x3`].
pub fn stable_cubic_markov() -> Vec<CMatrix> {
    vec![
        stable_cubic_3x3().coeff(1).clone(),
        cplx(&[
            &[(1.0, 0.0), (0.0, 1.0), (0.0, -1.0)],
            &[(0.0, -1.0), (2.0, 0.0), (0.0, 0.0)],
            &[(0.0, 1.0), (0.0, 0.0), (3.0, 0.0)],
        ]),
        cplx(&[
            &[(15.0, 0.0), (1.0, 5.0), (3.0, -5.0)],
            &[(1.0, -5.0), (10.0, 0.0), (0.0, -6.0)],
            &[(3.0, 5.0), (0.0, 6.0), (50.0, 0.0)],
        ]),
    ]
}

/// `s_2 - s_1 s_0^{-1} s_1` for [`stable_cubic_3x3`]; positive definite.
pub fn stable_cubic_complement() -> CMatrix {
    cplx(&[
        &[(10.0, 0.0), (-1.5, -0.5), (-0.5, 0.5)],
        &[(-1.5, 0.5), (0.5, 0.0), (1.0, 0.5)],
        &[(-0.5, -0.5), (1.0, -0.5), (36.5, 0.0)],
    ])
}

/// Degree 4, `p = 2`: Hermitian left parameters, `H_{1,1}` of the left side indefinite.
pub fn unstable_quartic_left() -> MatrixPolynomial {
    monic(vec![
        cplx(&[&[(2.0, 0.0), (2.0, -1.0)], &[(2.0, 1.0), (3.0, 0.0)]]),
        cplx(&[&[(-58.0, 0.0), (5.0, 39.0)], &[(9.0, -71.0), (-67.0, 0.0)]]),
        cplx(&[&[(-143.0, 83.0), (-100.0, 176.0)], &[(-115.0, -210.0), (-251.0, -151.0)]]),
        cplx(&[&[(23.0, 1.0), (-2.0, -17.0)], &[(1.0, 39.0), (20.0, -5.0)]]),
    ])
}

/// Left parameters `s_0..s_3` of [`unstable_quartic_left`].
pub fn unstable_quartic_left_markov() -> Vec<CMatrix> {
    vec![
        cplx(&[&[(2.0, 0.0), (2.0, -1.0)], &[(2.0, 1.0), (3.0, 0.0)]]),
        cplx(&[&[(-2.0, 0.0), (-1.0, -1.0)], &[(-1.0, 1.0), (-3.0, 0.0)]]),
        cplx(&[&[(13.0, 0.0), (2.0, 13.0)], &[(2.0, -13.0), (20.0, 0.0)]]),
        cplx(&[&[(-210.0, 0.0), (0.0, -1.0)], &[(0.0, 1.0), (-377.0, 0.0)]]),
    ]
}

/// Degree 2, `p = 2`, stable, with a singular odd part: no continued fraction.
pub fn cf_breakdown_quadratic() -> MatrixPolynomial {
    monic(vec![real(&[&[2.0, 2.0], &[1.0, 1.0]]), real(&[&[2.0, 1.0], &[0.5, 0.5]])])
}

/// Degree 2, `p = 2`, unstable, with a continued fraction whose parameters
/// have eigenvalues in the right half plane but are not Hermitian.
pub fn unstable_quadratic_with_cf() -> MatrixPolynomial {
    monic(vec![real(&[&[1.0, 1.0 / 3.0], &[5.0, 2.0]]), real(&[&[1.0, 0.5], &[1.0, 1.0]])])
}

/// Continued fraction parameters `c_1, c_2` of [`unstable_quadratic_with_cf`].
pub fn unstable_quadratic_cf_params() -> Vec<CMatrix> {
    vec![real(&[&[6.0, -1.0], &[-15.0, 3.0]]), real(&[&[4.0 / 3.0, -1.0 / 3.0], &[6.0, -1.0]])]
}

/// Degree 2, `p = 2`, Hermitian coefficients, stable, non-Hermitian parameters.
pub fn stable_quadratic_non_hermitian() -> MatrixPolynomial {
    monic(vec![real(&[&[2.0, 2.5], &[2.5, 2.0]]), real(&[&[16.0, 1.0], &[1.0, 3.0]])])
}

/// Degree 4, `p = 2`, stable, with a negative non-contiguous Hankel minor.
pub fn stable_quartic_2x2() -> MatrixPolynomial {
    monic(vec![
        real(&[&[3.0, -2.5], &[-2.5, 57.0 / 4.0]]),
        real(&[&[19.0, -14.0], &[12.0, -9.0]]),
        real(&[&[19.0, -19.0], &[124.0, -221.0 / 2.0]]),
        real(&[&[60.0, -56.0], &[24.0, -22.0]]),
    ])
}

/// Right Markov parameters `s_0..s_6` of [`stable_quartic_2x2`].
pub fn stable_quartic_markov() -> Vec<CMatrix> {
    [
        [3.0, -2.5, 57.0 / 4.0],
        [8.0, -0.5, 69.0 / 4.0],
        [26.0, 5.5, 101.0 / 4.0],
        [92.0, 23.5, 189.0 / 4.0],
        [338.0, 77.5, 437.0 / 4.0],
        [1268.0, 239.5, 1149.0 / 4.0],
        [4826.0, 725.5, 3221.0 / 4.0],
    ]
    .iter()
    .map(|&[a, b, d]| real(&[&[a, b], &[b, d]]))
    .collect()
}

/// `(rows, cols, value)` of non-contiguous order-2 minors of [`stable_quartic_markov`].
pub fn stable_quartic_minors() -> Vec<(Vec<usize>, Vec<usize>, f64)> {
    vec![
        (vec![0, 1], vec![0, 2], -0.75),
        (vec![0, 1], vec![0, 3], -581.0 / 4.0),
        (vec![0, 1], vec![1, 3], -18.0),
    ]
}

/// Degree 6, `p = 2`, stable, complex non-contiguous minors.
pub fn stable_sextic_2x2() -> MatrixPolynomial {
    let k = cx(17.0, -32.0) / 1313.0;
    let scaled = |rows: &[&[(f64, f64)]]| cplx(rows).scale(k);
    monic(vec![
        cplx(&[&[(8.0, 0.0), (0.0, 3.0)], &[(0.0, -3.0), (9.0, 0.0)]]),
        scaled(&[&[(150.0, 300.0), (0.0, 12.0)], &[(64.0, 40.0), (190.0, 340.0)]]),
        scaled(&[&[(587.0, 1664.0), (-1071.0, 570.0)], &[(1425.0, -186.0), (1372.0, 2356.0)]]),
        scaled(&[&[(331.0, 676.0), (0.0, 36.0)], &[(412.0, 220.0), (551.0, 956.0)]]),
        scaled(&[&[(-89.0, 2464.0), (-2313.0, 837.0)], &[(3467.0, 287.0), (2587.0, 4288.0)]]),
        scaled(&[&[(198.0, 408.0), (0.0, 24.0)], &[(348.0, 180.0), (378.0, 648.0)]]),
    ])
}

/// Right Markov parameters `s_0..s_7` of [`stable_sextic_2x2`].
pub fn stable_sextic_markov() -> Vec<CMatrix> {
    [
        (8.0, (0.0, 3.0), 9.0),
        (29.0, (3.0, 0.0), 22.0),
        (145.0, (21.0, -24.0), 100.0),
        (839.0, (153.0, -186.0), 592.0),
        (5173.0, (1185.0, -1212.0), 3784.0),
        (32879.0, (9273.0, -7530.0), 24832.0),
        (212485.0, (71721.0, -45924.0), 165040.0),
        (1387919.0, (545793.0, -277746.0), 1105672.0),
    ]
    .iter()
    .map(|&(a, (br, bi), d)| cplx(&[&[(a, 0.0), (br, bi)], &[(br, -bi), (d, 0.0)]]))
    .collect()
}

/// Non-contiguous minors of [`stable_sextic_markov`] with nonzero imaginary part.
pub fn stable_sextic_minors() -> Vec<Complex> {
    vec![
        cx(3323095.0, -24840.0),
        cx(152111099.0, -2414520.0),
        cx(327769380.0, -2969280.0),
        cx(5859396000.0, -3456000.0),
    ]
}

/// Real scalar polynomial, leading coefficient first.
pub fn scalar(coeffs: &[f64]) -> MatrixPolynomial {
    MatrixPolynomial::scalar_real(coeffs)
}
