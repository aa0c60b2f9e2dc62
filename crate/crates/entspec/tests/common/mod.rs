//! Helpers shared by the integration suites.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

/// Haar-distributed 2×2 unitary (up to the invariant measure details that
/// matter here: a dense cover of U(2)).
pub fn random_unitary(rng: &mut impl Rng) -> [[Complex64; 2]; 2] {
    let theta: f64 = rng.gen::<f64>() * std::f64::consts::FRAC_PI_2;
    let (alpha, beta, phi) = (
        rng.gen::<f64>() * std::f64::consts::TAU,
        rng.gen::<f64>() * std::f64::consts::TAU,
        rng.gen::<f64>() * std::f64::consts::TAU,
    );
    let global = Complex64::from_polar(1.0, phi);
    let (c, s) = (theta.cos(), theta.sin());
    [
        [
            global * Complex64::from_polar(c, alpha),
            global * Complex64::from_polar(s, beta),
        ],
        [
            global * -Complex64::from_polar(s, -beta),
            global * Complex64::from_polar(c, -alpha),
        ],
    ]
}

fn simpson(f: &impl Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
    let m = 0.5 * (a + b);
    let fm = f(m);
    ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    fa: f64,
    b: f64,
    fb: f64,
    whole: f64,
    m: f64,
    fm: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let (left, lm, flm) = simpson(f, a, fa, m, fm);
    let (right, rm, frm) = simpson(f, m, fm, b, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive_step(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
            + adaptive_step(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
}

/// Adaptive Simpson quadrature of `f` over `[a, b]`, starting from
/// `panels` equal panels so that narrow peaks are not stepped over.
pub fn adaptive_simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, panels: usize) -> f64 {
    let width = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let (lo, hi) = (a + width * i as f64, a + width * (i + 1) as f64);
        let (flo, fhi) = (f(lo), f(hi));
        let (whole, m, fm) = simpson(&f, lo, flo, hi, fhi);
        total += adaptive_step(&f, lo, flo, hi, fhi, whole, m, fm, tol / panels as f64, 40);
    }
    total
}

/// Sanity check used by the quadrature-based criteria: the rule itself must
/// integrate a narrow Gaussian inside a wide window correctly.
pub fn quadrature_self_check() {
    let val = adaptive_simpson(|x| x * x, 0.0, 3.0, 1e-10, 4);
    assert!((val - 9.0).abs() < 1e-9);
    let s = 1e-3;
    let val = adaptive_simpson(
        |x| (-((x - 5.0) / s).powi(2) / 2.0).exp() / (s * (2.0 * std::f64::consts::PI).sqrt()),
        0.0,
        100.0,
        1e-8,
        2048,
    );
    assert!((val - 1.0).abs() < 1e-6, "{val}");
}
