//! Periodic Lp norms and the exact worst-case class error as a dual norm.

use serde::Serialize;

use crate::classify::RegimeLabel;
use crate::error::{CoreError, Result};
use crate::kernel::DeviationKernel;
use crate::quadrature::{adaptive_integral, AdaptiveOpts};
use crate::weights::{ClassSpec, WeightKind};

/// Panel layout and tolerance knobs for the norm quadratures.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuadratureConfig {
    /// Initial panel count over the period.
    pub panels: usize,
    /// Cascade panels dyadically toward the kernel singularity at t = 0.
    pub refine_near_zero: bool,
    /// Width below which the 0-adjacent panel is extrapolated, not split.
    pub t_min: f64,
    /// Relative tolerance for the norm integral.
    pub rel_tol: f64,
    /// Maximum bisection depth per panel.
    pub max_depth: u32,
}

impl QuadratureConfig {
    pub fn new(
        panels: usize,
        refine_near_zero: bool,
        t_min: f64,
        rel_tol: f64,
        max_depth: u32,
    ) -> Result<Self> {
        if !(t_min > 0.0) {
            return Err(CoreError::Parameter(format!("t_min must be positive, got {t_min}")));
        }
        if !(rel_tol > 0.0 && rel_tol <= 1e-4) {
            return Err(CoreError::Parameter(format!(
                "rel_tol must lie in (0, 1e-4], got {rel_tol}"
            )));
        }
        if panels < 2 {
            return Err(CoreError::Parameter("need at least 2 initial panels".into()));
        }
        Ok(QuadratureConfig {
            panels,
            refine_near_zero,
            t_min,
            rel_tol,
            max_depth,
        })
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panels: 64,
            refine_near_zero: true,
            t_min: 1e-20,
            rel_tol: 1e-8,
            max_depth: 90,
        }
    }
}

impl From<&QuadratureConfig> for AdaptiveOpts {
    fn from(cfg: &QuadratureConfig) -> Self {
        AdaptiveOpts {
            rel_tol: cfg.rel_tol,
            max_depth: cfg.max_depth,
            max_panels: 400_000,
            singular_left: cfg.refine_near_zero,
            singular_floor: cfg.t_min,
        }
    }
}

fn uniform_breaks(a: f64, b: f64, panels: usize) -> Vec<f64> {
    (0..=panels)
        .map(|i| a + (b - a) * i as f64 / panels as f64)
        .collect()
}

/// (∫_-π^π |f|^q dt)^(1/q) with relative error rel_tol/q.
///
/// With `refine_near_zero` set the integral is folded to [0, π] so the
/// origin becomes a left endpoint handled by the singular cascade.
pub fn lp_norm_periodic<F: Fn(f64) -> f64>(f: F, q: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(q > 1.0 && q.is_finite()) {
        return Err(CoreError::Parameter(format!("norm exponent must satisfy 1 < q < inf, got {q}")));
    }
    let pi = std::f64::consts::PI;
    let opts = AdaptiveOpts::from(cfg);
    let integral = if cfg.refine_near_zero {
        let g = |u: f64| f(u).abs().powf(q) + f(-u).abs().powf(q);
        let mut breaks = uniform_breaks(0.0, pi, cfg.panels.max(2));
        // Pre-split a dyadic cascade toward 0 so the adaptive loop starts
        // with panels already matched to the singular scale.
        let mut h = breaks[1].min(0.5);
        while h > 1e-6 {
            h *= 0.5;
            breaks.push(h);
        }
        breaks.sort_by(f64::total_cmp);
        breaks.dedup();
        adaptive_integral(&g, &breaks, &opts)?
    } else {
        let g = |u: f64| f(u).abs().powf(q);
        let breaks = uniform_breaks(-pi, pi, cfg.panels.max(2));
        adaptive_integral(&g, &breaks, &opts)?
    };
    Ok(integral.value.max(0.0).powf(1.0 / q))
}

/// Norm of a trigonometric polynomial, seeding enough panels to resolve
/// its top frequency.
pub fn poly_lp_norm(p: &crate::poly::TrigPolynomial, q: f64, cfg: &QuadratureConfig) -> Result<f64> {
    let mut cfg = *cfg;
    cfg.panels = cfg.panels.max(p.degree() + 4);
    cfg.refine_near_zero = false;
    lp_norm_periodic(|t| p.eval(t), q, &cfg)
}

/// The exact worst-case uniform error of the order-s summation method on
/// the class: (1/π)·(dual norm of the deviation kernel in L_{p'}).
pub fn exact_class_error(spec: &ClassSpec, n: u64, cfg: &QuadratureConfig) -> Result<f64> {
    exact_class_error_with_method(spec, n, cfg, false)
}

/// Same, with the Fejér multiplier code path selectable.
pub fn exact_class_error_with_method(
    spec: &ClassSpec,
    n: u64,
    cfg: &QuadratureConfig,
    fejer: bool,
) -> Result<f64> {
    let tail_tol = (cfg.rel_tol * 1e-2).min(1e-10);
    let kernel = DeviationKernel::with_exponent_rule(spec.clone(), n, tail_tol, fejer)?;
    let q = spec.p_prime;
    let pi = std::f64::consts::PI;

    let mut cfg_local = *cfg;
    cfg_local.panels = cfg.panels.max(n as usize + 8);
    cfg_local.refine_near_zero = true;

    let even = spec.beta == 0.0;
    let norm = lp_norm_periodic(
        move |t| {
            if even && t < 0.0 {
                kernel.eval(-t).unwrap_or(f64::NAN)
            } else {
                kernel.eval(t).unwrap_or(f64::NAN)
            }
        },
        q,
        &cfg_local,
    )?;
    Ok(norm / pi)
}

/// Closed-form worst-case error at p = 2 by coefficient energy:
/// ((1/π)(n^{-2s} sum_{k<n} ψ²(k)k^{2s} + sum_{k>=n} ψ²(k)))^{1/2}.
///
/// The tail beyond `tail_terms` is bracketed by integral comparison; the
/// certified half-width must stay below 1e-9 relative or an error is
/// returned.
pub fn parseval_error(spec: &ClassSpec, n: u64, tail_terms: u64) -> Result<f64> {
    if (spec.p - 2.0).abs() > 1e-12 {
        return Err(CoreError::Parameter(format!(
            "closed-form error requires p = 2, got p = {}",
            spec.p
        )));
    }
    let nf = n as f64;
    let mut head = 0.0f64;
    for k in 1..n {
        let kf = k as f64;
        let c = spec.psi.eval(kf)? * (kf / nf).powf(spec.s);
        head += c * c;
    }
    let cutoff = tail_terms.max(n);
    let mut tail = 0.0f64;
    for k in n..=cutoff {
        let w = spec.psi.eval(k as f64)?;
        tail += w * w;
    }
    let (rem_lo, rem_hi) = squared_weight_tail_bracket(spec, cutoff + 1)?;
    let total = (head + tail + 0.5 * (rem_lo + rem_hi)) / std::f64::consts::PI;
    let value = total.sqrt();
    let half_width = 0.5 * (rem_hi - rem_lo) / std::f64::consts::PI;
    // d sqrt / d total halves the relative error.
    if value > 0.0 && half_width / (2.0 * value * value) > 1e-9 {
        return Err(CoreError::Precision {
            bracket: half_width,
            value,
            limit: 1e-9,
        });
    }
    Ok(value)
}

/// Bracket for sum_{k>=m} ψ²(k) by integral comparison (ψ non-increasing):
/// the sum lies in [∫_m^inf ψ², ψ²(m) + ∫_m^inf ψ²].
fn squared_weight_tail_bracket(spec: &ClassSpec, m: u64) -> Result<(f64, f64)> {
    let mf = m as f64;
    let integral = match spec.psi.kind() {
        WeightKind::Power { r } => mf.powf(1.0 - 2.0 * r) / (2.0 * r - 1.0),
        _ => {
            // ∫_m^inf ψ²(t) dt = m ∫_0^inf ψ²(m e^v) e^v dv, truncated where
            // the decaying integrand is negligible.
            let w = &spec.psi;
            let f = |v: f64| {
                let t = mf * v.exp();
                let lw = w.ln_eval(t).unwrap_or(f64::NEG_INFINITY);
                (2.0 * lw + v).exp()
            };
            let breaks: Vec<f64> = (0..=240).map(|i| i as f64 * 0.5).collect();
            let opts = AdaptiveOpts {
                rel_tol: 1e-11,
                ..Default::default()
            };
            mf * adaptive_integral(&f, &breaks, &opts)?.value
        }
    };
    let first = spec.psi.eval(mf)?;
    Ok((integral, integral + first * first))
}

/// Per-degree record of an error-table experiment.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub n: u64,
    pub exact_error: f64,
    /// Lower-bound witness deviations, indexed by witness kind f1..f4.
    pub lower_bounds: [Option<f64>; 4],
    pub predicted_order: f64,
    pub regime: RegimeLabel,
    /// exact_error / predicted_order.
    pub ratio: f64,
}
