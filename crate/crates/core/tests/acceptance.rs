//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#[path = "common/fixtures.rs"]
#[allow(dead_code)]
mod fixtures;

use std::process::ExitCode;
use std::time::Instant;

use fixtures::*;
use hurwitz_core::bezout::{
    bezout_hankel_congruence_check, bezoutian, bezoutian_residual, hermite_fujiwara_inertia, markov_quadruple,
    BezoutQuadruple,
};
use hurwitz_core::criteria::{gamma_prime_via_hankel, hurwitz_via_markov, Verdict};
use hurwitz_core::hermitian::is_positive_definite;
use hurwitz_core::markov::{
    block_hankel, default_count, hermitian_truncation_check, markov, markov_left, markov_right,
    markov_right_second_type, odd_coeffs_from_markov, MarkovKind, Side,
};
use hurwitz_core::minors::{hankel_minor, hankel_quasiminor, scan_noncontiguous, vanishing_check};
use hurwitz_core::oracle::{
    gamma_oracle, gamma_prime_oracle, generate_from_cf, generate_indefinite_cf, generate_stable, generate_unstable,
    is_hurwitz_oracle, zeros, GammaPrimeTriple,
};
use hurwitz_core::stieltjes::{cf_expand, cf_synthesize, hurwitz_via_cf};
use hurwitz_core::{CMatrix, Complex, Error, MatrixPolynomial, Tolerances, DEFAULT_AXIS_TOL, DEFAULT_TOL};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T>(r: Result<T, Error>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn blocks_match(got: &[CMatrix], want: &[CMatrix], tol: f64, what: &str) -> Result<(), String> {
    ensure(got.len() >= want.len(), || format!("{what}: only {} blocks", got.len()))?;
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        let d = g.rel_diff(w);
        ensure(d <= tol, || format!("{what} block {i} differs by {d:e}"))?;
    }
    Ok(())
}

fn oracle_stable(f: &MatrixPolynomial) -> Result<bool, String> {
    let h = ok(is_hurwitz_oracle(f, DEFAULT_AXIS_TOL), "oracle")?;
    ensure(!h.marginal, || "oracle reports a zero on the imaginary axis".into())?;
    Ok(h.stable)
}

fn verdict(f: &MatrixPolynomial, side: Side) -> Result<Verdict, String> {
    Ok(ok(hurwitz_via_markov(f, side, DEFAULT_TOL), "markov criterion")?.verdict)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let f = unstable_cubic_2x2();
    let s = ok(markov_right_second_type(&f, default_count(3)), "markov")?;
    blocks_match(&s.blocks, &unstable_cubic_markov()[..3], 0.0, "s")?;
    let q = ok(hankel_quasiminor(&s, &[0, 1], &[0, 1]), "quasiminor")?;
    let d = q.max_abs_diff(&unstable_cubic_complement());
    ensure(d == 0.0, || format!("Schur complement differs by {d:e}"))?;
    ensure(!ok(is_positive_definite(&q, DEFAULT_TOL), "pd")?, || "complement is PD".into())?;
    let v = verdict(&f, Side::Right)?;
    ensure(v == Verdict::Unstable, || format!("verdict {v:?}"))?;
    ensure(!oracle_stable(&f)?, || "oracle says stable".into())?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 0.1, || format!("took {elapsed:.3} s"))?;
    Ok(format!("blocks and complement exact, unstable, oracle agrees, {:.1} ms", elapsed * 1e3))
}

fn criterion_2() -> Check {
    let f = stable_cubic_3x3();
    let s = ok(markov_right_second_type(&f, default_count(3)), "markov")?;
    blocks_match(&s.blocks, &stable_cubic_markov(), 1e-9, "s")?;
    let q = ok(hankel_quasiminor(&s, &[0, 1], &[0, 1]), "quasiminor")?;
    let d = q.rel_diff(&stable_cubic_complement());
    ensure(d <= 1e-9, || format!("complement differs by {d:e}"))?;
    ensure(ok(is_positive_definite(&q, DEFAULT_TOL), "pd")?, || "complement not PD".into())?;
    let v = verdict(&f, Side::Right)?;
    ensure(v == Verdict::Stable, || format!("verdict {v:?}"))?;
    let r = ok(gamma_prime_oracle(&f, DEFAULT_AXIS_TOL), "oracle")?;
    let max_re = r.eigenvalues.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max);
    ensure(r.triple == GammaPrimeTriple { plus: 0, minus: 9, zero: 0 }, || format!("oracle {:?}", r.triple))?;
    Ok(format!("s_0..s_2 and complement match, stable, max Re of zeros {max_re:.4}"))
}

fn criterion_3() -> Check {
    let f = unstable_quartic_left();
    let s = ok(markov_left(&f, default_count(4), MarkovKind::Even), "markov")?;
    blocks_match(&s.blocks, &unstable_quartic_left_markov(), 1e-12, "s")?;
    let h1 = ok(block_hankel(&s, 0, 1), "H_1")?.matrix;
    let h11 = ok(block_hankel(&s, 1, 1), "H_{1,1}")?.matrix;
    ensure(ok(is_positive_definite(&h1, DEFAULT_TOL), "pd")?, || "H_1 not PD".into())?;
    ensure(!ok(is_positive_definite(&h11, DEFAULT_TOL), "pd")?, || "H_{1,1} PD".into())?;
    let v = verdict(&f, Side::Left)?;
    ensure(v == Verdict::Unstable, || format!("verdict {v:?}"))?;
    ensure(!oracle_stable(&f)?, || "oracle says stable".into())?;
    Ok("left blocks match, H_1 PD, H_{1,1} not PD, unstable, oracle agrees".into())
}

fn all_inapplicable(f: &MatrixPolynomial) -> Result<(), String> {
    for side in [Side::Left, Side::Right] {
        let v = verdict(f, side)?;
        ensure(v == Verdict::Inapplicable, || format!("markov {side:?}: {v:?}"))?;
    }
    let v = ok(hurwitz_via_cf(f, DEFAULT_TOL), "cf criterion")?.verdict;
    ensure(v == Verdict::Inapplicable, || format!("continued fraction: {v:?}"))
}

fn criterion_4() -> Check {
    let first = cf_breakdown_quadratic();
    all_inapplicable(&first)?;
    let z = ok(zeros(&first), "zeros")?;
    let want = [
        Complex::new(-1.0, 0.0),
        Complex::new(-1.876, 0.0),
        Complex::new(-0.062, 0.513),
        Complex::new(-0.062, -0.513),
    ];
    for w in want {
        ensure(z.iter().any(|x| (x.re - w.re).abs() < 5e-4 && (x.im - w.im).abs() < 5e-4), || {
            format!("zero {w} not found in {z:?}")
        })?;
    }

    let second = unstable_quadratic_with_cf();
    let cf = ok(cf_expand(&second), "cf_expand")?;
    blocks_match(&cf.params, &unstable_quadratic_cf_params(), 1e-12, "c")?;
    let t = ok(gamma_prime_oracle(&second, DEFAULT_AXIS_TOL), "oracle")?.triple;
    ensure(t == GammaPrimeTriple { plus: 2, minus: 2, zero: 0 }, || format!("oracle {t:?}"))?;

    let third = stable_quadratic_non_hermitian();
    all_inapplicable(&third)?;
    ensure(oracle_stable(&third)?, || "oracle says unstable".into())?;
    Ok("first: inapplicable, zeros match; second: c_1, c_2 match, (2,2,0); non-Hermitian quadratic: inapplicable, oracle stable".into())
}

fn criterion_5() -> Check {
    let f = stable_quartic_2x2();
    let s = ok(markov_right(&f, 14), "markov")?;
    blocks_match(&s.blocks, &stable_quartic_markov(), 1e-12, "s")?;
    for j in [0, 1] {
        let h = ok(block_hankel(&s, j, 1), "hankel")?.matrix;
        ensure(ok(is_positive_definite(&h, DEFAULT_TOL), "pd")?, || format!("H_{{{j},1}} not PD"))?;
    }
    let v = verdict(&f, Side::Right)?;
    ensure(v == Verdict::Stable, || format!("verdict {v:?}"))?;
    for (rows, cols, want) in stable_quartic_minors() {
        let got = ok(hankel_minor(&s, &rows, &cols), "minor")?;
        let d = (got - Complex::new(want, 0.0)).norm() / want.abs();
        ensure(d <= 1e-9, || format!("minor {rows:?}x{cols:?} = {got}, want {want}"))?;
    }
    let van = ok(vanishing_check(&s, 2, 300, 6, 7), "vanishing")?;
    ensure(van.max_relative < 1e-6, || format!("order-3 minor ratio {:e}", van.max_relative))?;
    Ok(format!(
        "stable, minors -3/4, -581/4, -18 reproduced, {} higher-order minors below {:.1e} x scale",
        van.sampled, van.max_relative
    ))
}

fn criterion_6() -> Check {
    let f = stable_sextic_2x2();
    let s = ok(markov_right(&f, 14), "markov")?;
    blocks_match(&s.blocks, &stable_sextic_markov(), 1e-10, "s")?;
    ensure(ok(hermitian_truncation_check(&s, DEFAULT_TOL), "hermitian")?.hermitian, || "truncation not Hermitian".into())?;
    for k in [1, 2] {
        for j in [0, 1] {
            let h = ok(block_hankel(&s, j, k), "hankel")?.matrix;
            ensure(ok(is_positive_definite(&h, DEFAULT_TOL), "pd")?, || format!("H_{{{j},{k}}} not PD"))?;
        }
    }
    let v = verdict(&f, Side::Right)?;
    ensure(v == Verdict::Stable, || format!("verdict {v:?}"))?;
    let found = ok(scan_noncontiguous(&s, 3, 6), "scan")?;
    for want in stable_sextic_minors() {
        ensure(found.iter().any(|m| (m.value - want).norm() <= 1e-9 * want.norm()), || format!("minor {want} not found"))?;
    }
    Ok(format!("Hermitian, H_{{j,1}} and H_{{j,2}} PD, stable, 4 displayed minors among {} flagged", found.len()))
}

#[derive(Default)]
struct Tally {
    applicable: usize,
    inapplicable: usize,
    ambiguous: usize,
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let tols = Tolerances::default();
    let mut instances = Vec::with_capacity(400);
    for i in 0..200u64 {
        let (p, n) = (1 + (i % 3) as usize, 1 + ((i / 3) % 6) as usize);
        let f = if i % 2 == 0 { generate_from_cf(p, n, i) } else { generate_stable(p, n, i) };
        instances.push((format!("stable #{i}"), f));
    }
    for i in 0..200u64 {
        let (p, n) = (1 + (i % 3) as usize, 1 + ((i / 3) % 6) as usize);
        instances.push((format!("unstable #{i}"), generate_unstable(p, n, 1000 + i)));
    }
    let (mut markov_t, mut cf_t, mut gamma_t) = (Tally::default(), Tally::default(), Tally::default());
    let mut oracle_unstable = 0;
    for (name, f) in &instances {
        let oracle = ok(gamma_prime_oracle(f, tols.axis), name)?;
        ensure(!oracle.marginal, || format!("{name}: zero on the imaginary axis"))?;
        let stable = oracle.triple.minus == f.degree() * f.p();
        oracle_unstable += usize::from(!stable);
        for (tally, v) in [
            (&mut markov_t, ok(hurwitz_via_markov(f, Side::Right, tols.linalg), name)?.verdict),
            (&mut cf_t, ok(hurwitz_via_cf(f, tols.linalg), name)?.verdict),
        ] {
            match v {
                Verdict::Inapplicable => tally.inapplicable += 1,
                v => {
                    tally.applicable += 1;
                    ensure((v == Verdict::Stable) == stable, || format!("{name}: criterion {v:?}, oracle stable = {stable}"))?;
                }
            }
        }
        match gamma_prime_via_hankel(f, Side::Right, tols) {
            Ok(r) => {
                gamma_t.applicable += 1;
                ensure(r.triple == oracle.triple, || format!("{name}: Hankel count {:?}, oracle {:?}", r.triple, oracle.triple))?;
            }
            Err(Error::NonHermitianSequence { .. }) => gamma_t.inapplicable += 1,
            Err(Error::ToleranceAmbiguity { .. }) => gamma_t.ambiguous += 1,
            Err(e) => return Err(format!("{name}: Hankel count failed: {e}")),
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(oracle_unstable >= 200, || format!("only {oracle_unstable} unstable instances"))?;
    ensure(elapsed < 60.0, || format!("took {elapsed:.1} s"))?;
    Ok(format!(
        "400 instances ({oracle_unstable} unstable), applicable/agreeing: markov {}, cf {}, hankel count {} (ambiguous {}), {elapsed:.1} s",
        markov_t.applicable, cf_t.applicable, gamma_t.applicable, gamma_t.ambiguous
    ))
}

fn random_poly(rng: &mut ChaCha8Rng, p: usize, degree: usize) -> MatrixPolynomial {
    let blocks = (0..=degree)
        .map(|_| CMatrix::from_fn(p, p, |_, _| Complex::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0))))
        .collect();
    MatrixPolynomial::new(blocks).expect("random leading block")
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_identity: f64 = 0.0;
    for _ in 0..50 {
        let p = rng.random_range(1..=2);
        let da = rng.random_range(0..=3);
        let a = random_poly(&mut rng, p, da);
        let db = rng.random_range(0..=3);
        let b = random_poly(&mut rng, p, db);
        let de = rng.random_range(0..=2);
        let e = random_poly(&mut rng, p, de);
        let q = ok(BezoutQuadruple::new(a.mul(&e), b.clone(), a, e.mul(&b)), "quadruple")?;
        let bz = ok(bezoutian(&q), "bezoutian")?;
        worst_identity = worst_identity.max(bezoutian_residual(&q, &bz));
    }
    ensure(worst_identity < 1e-10, || format!("identity residual {worst_identity:e}"))?;

    let mut worst_congruence: f64 = 0.0;
    let mut hermitian_polys = vec![stable_cubic_3x3(), stable_quartic_2x2(), stable_sextic_2x2(), unstable_cubic_2x2()];
    for i in 0..30u64 {
        let (p, n) = (1 + (i % 3) as usize, 1 + ((i / 3) % 6) as usize);
        hermitian_polys.push(if i % 2 == 0 { generate_from_cf(p, n, i) } else { generate_indefinite_cf(p, n, i) });
    }
    for f in &hermitian_polys {
        let q = ok(markov_quadruple(f), "markov quadruple")?;
        let s = ok(markov(f, default_count(f.degree()) + 2, MarkovKind::natural(f.degree()), Side::Right), "markov")?;
        worst_congruence = worst_congruence.max(ok(bezout_hankel_congruence_check(&q, &s), "congruence")?);
    }
    ensure(worst_congruence < 1e-9, || format!("congruence residual {worst_congruence:e}"))?;

    let tols = Tolerances::default();
    let i_unit = Complex::new(0.0, 1.0);
    for k in 0..50u64 {
        let (l, l1) = if k < 25 {
            let l = random_poly(&mut rng, 1, 1 + (k % 4) as usize);
            let l1 = l.adjoint_reversal();
            (l, l1)
        } else {
            let n = 1 + (k % 4) as usize;
            let f = if k % 2 == 0 { generate_from_cf(2, n, k) } else { generate_indefinite_cf(2, n, k) };
            (f.substitute(i_unit, 1), f.substitute(-i_unit, 1))
        };
        let got = ok(hermite_fujiwara_inertia(&l, &l1, tols), "inertia count")?;
        let want = ok(gamma_oracle(&l, tols.axis), "oracle")?;
        ensure(got == want, || format!("instance {k}: Bezoutian count {got:?}, oracle {want:?}"))?;
    }
    Ok(format!(
        "identity residual {worst_identity:.1e}, congruence residual {worst_congruence:.1e}, 50 inertia counts match"
    ))
}

fn coeff_diff(a: &MatrixPolynomial, b: &MatrixPolynomial) -> f64 {
    if a.degree() != b.degree() {
        return f64::INFINITY;
    }
    let scale = b.coeff_scale().max(1.0);
    a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| x.max_abs_diff(y) / scale).fold(0.0, f64::max)
}

fn criterion_9() -> Check {
    let mut polys = vec![
        unstable_cubic_2x2(),
        stable_cubic_3x3(),
        unstable_quartic_left(),
        cf_breakdown_quadratic(),
        unstable_quadratic_with_cf(),
        stable_quadratic_non_hermitian(),
        stable_quartic_2x2(),
        stable_sextic_2x2(),
        scalar(&[1.0, 3.0, 3.0, 1.0]),
        scalar(&[1.0, 2.0, 1.0]),
    ];
    for i in 0..60u64 {
        let (p, n) = (1 + (i % 3) as usize, 1 + ((i / 3) % 6) as usize);
        polys.push(match i % 3 {
            0 => generate_from_cf(p, n, i),
            1 => generate_stable(p, n, i),
            _ => generate_unstable(p, n, i),
        });
    }
    let (mut cf_worst, mut cf_count): (f64, usize) = (0.0, 0);
    let (mut asa_worst, mut asa_count): (f64, usize) = (0.0, 0);
    for f in &polys {
        match cf_expand(f) {
            Ok(cf) => {
                let back = ok(cf_synthesize(&cf), "cf_synthesize")?.recombine();
                cf_worst = cf_worst.max(coeff_diff(&back, f));
                cf_count += 1;
            }
            Err(Error::ExpansionBreakdown { .. }) => {}
            Err(e) => return Err(format!("cf_expand: {e}")),
        }
        if f.degree() % 2 == 0 {
            let evens = f.even_odd_split().even.coeffs().to_vec();
            let m = f.degree() / 2;
            for side in [Side::Left, Side::Right] {
                let s = ok(markov(f, default_count(f.degree()), MarkovKind::Even, side), "markov")?;
                let odd = ok(odd_coeffs_from_markov(&s, &evens), "reconstruction")?;
                let scale = f.coeff_scale().max(1.0);
                for (i, blk) in odd.iter().enumerate() {
                    let want = f.coeff(2 * (m - 1 - i) + 1);
                    asa_worst = asa_worst.max(blk.max_abs_diff(want) / scale);
                }
                asa_count += 1;
            }
        }
    }
    ensure(cf_worst < 1e-9, || format!("continued fraction round trip {cf_worst:e}"))?;
    ensure(asa_worst < 1e-9, || format!("coefficient reconstruction {asa_worst:e}"))?;
    Ok(format!(
        "{cf_count} continued-fraction round trips (worst {cf_worst:.1e}), {asa_count} coefficient reconstructions (worst {asa_worst:.1e})"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("worked example, 2x2 cubic", criterion_1),
        ("worked example, 3x3 cubic", criterion_2),
        ("worked example, 2x2 quartic, left side", criterion_3),
        ("counterexamples", criterion_4),
        ("degree-4 minors", criterion_5),
        ("degree-6 minors", criterion_6),
        ("oracle agreement on 400 instances", criterion_7),
        ("Bezoutian suite", criterion_8),
        ("round trips", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
