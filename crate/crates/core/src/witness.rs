//! Lower-bound witness functions.
//!
//! Each witness is a concrete class member whose summation deviation at
//! zero bounds the worst-case error from below. Normalizers are computed
//! (not taken from existential constants), so every witness sits exactly
//! on the unit sphere of L_p and the resulting lower bounds are as tight
//! as the construction allows. Deviations are evaluated by coefficient
//! arithmetic; no pointwise convolution is involved.

use serde::Serialize;

use crate::error::{CoreError, Result};
use crate::growth::GrowthFunction;
use crate::norms::{poly_lp_norm, QuadratureConfig};
use crate::poly::{convolve_class, TrigPolynomial};
use crate::weights::ClassSpec;

/// Which witness construction produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    /// Flat spectrum of phased cosines, scaled by n^(-1/p').
    F1,
    /// Spectrum shaped by g^(p'-1)(k)/k^(1/p'), the dual-norm profile.
    F2,
    /// Logarithmic spectrum k^(-1/p') scaled by ln^(-1/p) n.
    F3,
    /// The single first harmonic, exhibiting the saturation floor.
    F4,
}

impl WitnessKind {
    pub fn index(&self) -> usize {
        match self {
            WitnessKind::F1 => 0,
            WitnessKind::F2 => 1,
            WitnessKind::F3 => 2,
            WitnessKind::F4 => 3,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            WitnessKind::F1 => "f1",
            WitnessKind::F2 => "f2",
            WitnessKind::F3 => "f3",
            WitnessKind::F4 => "f4",
        }
    }
}

/// Outcome of a witness evaluation.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessResult {
    pub which: WitnessKind,
    /// Computed normalizer a_i applied to the raw construction.
    pub normalizer: f64,
    /// ||φ||_p after scaling (1 for f1..f3 up to quadrature error).
    pub phi_norm: f64,
    /// |f(0) - (summed f)(0)| for the witness.
    pub deviation_at_zero: f64,
    /// Whether the scaled derivative stayed inside the unit ball.
    pub valid: bool,
}

const NORM_SLACK: f64 = 1e-9;

fn empty_witness(which: WitnessKind) -> WitnessResult {
    WitnessResult {
        which,
        normalizer: 1.0,
        phi_norm: 0.0,
        deviation_at_zero: 0.0,
        valid: true,
    }
}

/// Shared layout: normalize `raw` in L_p, convolve into the class, and
/// take the coefficient-space deviation at zero.
fn finish_witness(
    spec: &ClassSpec,
    which: WitnessKind,
    raw: TrigPolynomial,
    n: u64,
    cfg: &QuadratureConfig,
) -> Result<WitnessResult> {
    let raw_norm = poly_lp_norm(&raw, spec.p, cfg)?;
    if raw_norm == 0.0 {
        return Ok(empty_witness(which));
    }
    let normalizer = 1.0 / raw_norm;
    let f = convolve_class(spec, &raw)?;
    let deviation = normalizer * f.deviation_at_zero(n, spec.s);
    Ok(WitnessResult {
        which,
        normalizer,
        phi_norm: 1.0,
        deviation_at_zero: deviation.abs(),
        valid: true,
    })
}

/// Flat-spectrum witness: φ = a1·n^(-1/p') Σ_{k<n} cos(kt + βπ/2).
pub fn witness_f1(spec: &ClassSpec, n: u64, cfg: &QuadratureConfig) -> Result<WitnessResult> {
    if n <= 1 {
        return Ok(empty_witness(WitnessKind::F1));
    }
    let scale = (n as f64).powf(-1.0 / spec.p_prime);
    let amps = vec![scale; (n - 1) as usize];
    let raw = TrigPolynomial::from_phased_cosines(&amps, spec.phase());
    finish_witness(spec, WitnessKind::F1, raw, n, cfg)
}

/// Dual-profile witness: amplitudes g^(p'-1)(k)/k^(1/p') over the partial
/// logarithmic energy (Σ_{k<n} g^{p'}(k)/k)^(1/p).
pub fn witness_f2(spec: &ClassSpec, n: u64, cfg: &QuadratureConfig) -> Result<WitnessResult> {
    if n <= 1 {
        return Ok(empty_witness(WitnessKind::F2));
    }
    let g = GrowthFunction::new(spec.psi.clone(), spec.s, spec.p)?;
    let mut energy = 0.0f64;
    let mut amps = Vec::with_capacity((n - 1) as usize);
    for k in 1..n {
        let kf = k as f64;
        let gk = g.eval(kf)?;
        energy += gk.powf(spec.p_prime) / kf;
        amps.push(gk.powf(spec.p_prime - 1.0) / kf.powf(1.0 / spec.p_prime));
    }
    let denom = energy.powf(1.0 / spec.p);
    for a in &mut amps {
        *a /= denom;
    }
    let raw = TrigPolynomial::from_phased_cosines(&amps, spec.phase());
    finish_witness(spec, WitnessKind::F2, raw, n, cfg)
}

/// Logarithmic-spectrum witness: φ = a3·ln^(-1/p) n · Σ k^(-1/p') cos(kt + βπ/2).
///
/// Needs n ≥ 2 (the normalization divides by ln n).
pub fn witness_f3(spec: &ClassSpec, n: u64, cfg: &QuadratureConfig) -> Result<WitnessResult> {
    if n < 2 {
        return Err(CoreError::Domain(
            "logarithmic witness needs n >= 2 (ln n > 0)".into(),
        ));
    }
    let ln_scale = (n as f64).ln().powf(1.0 / spec.p);
    let amps: Vec<f64> = (1..n)
        .map(|k| (k as f64).powf(-1.0 / spec.p_prime) / ln_scale)
        .collect();
    let raw = TrigPolynomial::from_phased_cosines(&amps, spec.phase());
    finish_witness(spec, WitnessKind::F3, raw, n, cfg)
}

/// Single-harmonic witness f = ψ(1)(2π)^(-1/p) cos t.
///
/// Fully closed form: deviation = ψ(1)/((2π)^(1/p) n^s); the derivative
/// norm check uses quadrature only to assert ||φ||_p <= 1.
pub fn witness_f4(spec: &ClassSpec, n: u64, cfg: &QuadratureConfig) -> Result<WitnessResult> {
    let psi1 = spec.psi.eval(1.0)?;
    let two_pi = 2.0 * std::f64::consts::PI;
    let amp = two_pi.powf(-1.0 / spec.p);
    let deviation = psi1 * amp / (n as f64).powf(spec.s);
    let phi = TrigPolynomial::from_phased_cosines(&[amp], spec.phase());
    let phi_norm = poly_lp_norm(&phi, spec.p, cfg)?;
    Ok(WitnessResult {
        which: WitnessKind::F4,
        normalizer: amp,
        phi_norm,
        deviation_at_zero: deviation,
        valid: phi_norm <= 1.0 + NORM_SLACK,
    })
}

/// All four witnesses; per-witness failures are carried as errors in the
/// corresponding slot.
pub fn all_witnesses(
    spec: &ClassSpec,
    n: u64,
    cfg: &QuadratureConfig,
) -> [Result<WitnessResult>; 4] {
    [
        witness_f1(spec, n, cfg),
        witness_f2(spec, n, cfg),
        witness_f3(spec, n, cfg),
        witness_f4(spec, n, cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::exact_class_error;
    use crate::weights::WeightFunction;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn spec(r: f64, beta: f64, p: f64, s: f64) -> ClassSpec {
        ClassSpec::new(WeightFunction::power(r).unwrap(), beta, p, s).unwrap()
    }

    #[test]
    fn f1_empty_at_n_one() {
        let cfg = QuadratureConfig::default();
        let w = witness_f1(&spec(1.0, 0.0, 2.0, 1.0), 1, &cfg).unwrap();
        assert_eq!(w.deviation_at_zero, 0.0);
        assert!(w.valid);
    }

    #[test]
    fn f1_single_term_closed_form() {
        // n = 2, beta = 0, p = 2: a1 = sqrt(2/pi),
        // deviation = a1 psi(1)/2^(s + 1/2).
        let cfg = QuadratureConfig::default();
        let s = spec(1.0, 0.0, 2.0, 1.0);
        let w = witness_f1(&s, 2, &cfg).unwrap();
        let a1 = (2.0 / PI).sqrt();
        assert_relative_eq!(w.normalizer, a1, max_relative = 1e-7);
        let expected = a1 / 2f64.powf(1.5);
        assert_relative_eq!(w.deviation_at_zero, expected, max_relative = 1e-7);
    }

    #[test]
    fn f1_matches_closed_form_formula() {
        // deviation = (a1 / n^(s+1/p')) sum psi(k) k^s with
        // a1 = normalizer · n^(-1/p') folded into the raw polynomial.
        let cfg = QuadratureConfig::default();
        let s = spec(0.75, 0.6, 2.0, 1.0);
        let n = 8u64;
        let w = witness_f1(&s, n, &cfg).unwrap();
        let nf = n as f64;
        let sum: f64 = (1..n)
            .map(|k| s.psi.eval(k as f64).unwrap() * (k as f64).powf(s.s))
            .sum();
        let expected = w.normalizer * nf.powf(-1.0 / s.p_prime) * sum / nf.powf(s.s);
        assert_relative_eq!(w.deviation_at_zero, expected, max_relative = 1e-10);
    }

    #[test]
    fn f2_single_term_reduces_to_cosine() {
        // n = 2: the raw polynomial is exactly cos(t + beta pi/2) whatever
        // psi is, so deviation = a2 psi(1)/2^s.
        let cfg = QuadratureConfig::default();
        for p in [2.0, 4.0] {
            let s = spec(1.0, 0.0, p, 1.3);
            let w = witness_f2(&s, 2, &cfg).unwrap();
            let cos_norm = poly_lp_norm(
                &TrigPolynomial::from_phased_cosines(&[1.0], s.phase()),
                p,
                &cfg,
            )
            .unwrap();
            assert_relative_eq!(w.normalizer, 1.0 / cos_norm, max_relative = 1e-7);
            let expected = w.normalizer * 1.0 / 2f64.powf(1.3);
            assert_relative_eq!(w.deviation_at_zero, expected, max_relative = 1e-8);
        }
    }

    #[test]
    fn f2_matches_closed_form_deviation() {
        let cfg = QuadratureConfig::default();
        let s = spec(1.5, 0.4, 2.0, 1.0);
        let n = 16u64;
        let w = witness_f2(&s, n, &cfg).unwrap();
        let g = GrowthFunction::new(s.psi.clone(), s.s, s.p).unwrap();
        let energy: f64 = (1..n)
            .map(|k| g.eval(k as f64).unwrap().powf(s.p_prime) / k as f64)
            .sum();
        let expected =
            w.normalizer / (n as f64).powf(s.s) * energy.powf(1.0 / s.p_prime);
        assert_relative_eq!(w.deviation_at_zero, expected, max_relative = 1e-9);
    }

    #[test]
    fn f3_rejects_n_one_and_matches_formula() {
        let cfg = QuadratureConfig::default();
        let s = spec(1.5, 0.0, 2.0, 1.0);
        assert!(witness_f3(&s, 1, &cfg).is_err());
        let n = 16u64;
        let w = witness_f3(&s, n, &cfg).unwrap();
        let g = GrowthFunction::new(s.psi.clone(), s.s, s.p).unwrap();
        let nf = n as f64;
        let sum: f64 = (1..n).map(|k| g.eval(k as f64).unwrap() / k as f64).sum();
        let expected = w.normalizer / (nf.powf(s.s) * nf.ln().powf(1.0 / s.p)) * sum;
        assert_relative_eq!(w.deviation_at_zero, expected, max_relative = 1e-9);
        assert!(w.deviation_at_zero >= 0.0);
    }

    #[test]
    fn f4_closed_form_and_saturation() {
        let cfg = QuadratureConfig::default();
        let s = spec(1.0, 0.0, 2.0, 1.0);
        let w = witness_f4(&s, 2, &cfg).unwrap();
        assert_relative_eq!(
            w.deviation_at_zero,
            1.0 / ((2.0 * PI).sqrt() * 2.0),
            max_relative = 1e-12
        );
        assert!(w.valid);
        let w1 = witness_f4(&s, 1, &cfg).unwrap();
        assert_relative_eq!(
            w1.deviation_at_zero,
            (2.0 * PI).powf(-0.5),
            max_relative = 1e-12
        );
        // Saturation: deviation * n^s is n-independent to machine precision.
        let base = w1.deviation_at_zero;
        for n in [2u64, 8, 64, 512] {
            let wn = witness_f4(&s, n, &cfg).unwrap();
            let product = wn.deviation_at_zero * (n as f64).powf(s.s);
            assert_abs_diff_eq!(product / base, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn witness_phi_norms_are_unit() {
        let cfg = QuadratureConfig::default();
        let s = spec(0.75, 1.0, 2.0, 1.0);
        for w in all_witnesses(&s, 12, &cfg) {
            let w = w.unwrap();
            if w.which != WitnessKind::F4 {
                assert_abs_diff_eq!(w.phi_norm, 1.0, epsilon = 1e-9);
            } else {
                assert!(w.phi_norm <= 1.0 + 1e-9);
            }
        }
    }

    #[test]
    fn witness_deviations_stay_below_exact_error() {
        let cfg = QuadratureConfig::default();
        for &(r, beta, p) in &[(0.75f64, 0.0f64, 2.0f64), (1.5, 1.0, 2.0), (3.0, 0.5, 2.0)] {
            let s = spec(r, beta, p, 1.0);
            for n in [2u64, 8, 32] {
                let exact = exact_class_error(&s, n, &cfg).unwrap();
                for w in all_witnesses(&s, n, &cfg) {
                    let w = w.unwrap();
                    assert!(
                        w.deviation_at_zero <= exact + 1e-6,
                        "witness {:?} at n={n}: {} > {}",
                        w.which,
                        w.deviation_at_zero,
                        exact
                    );
                }
            }
        }
    }
}
