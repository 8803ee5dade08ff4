//! Numeric membership tests for the weight and growth classes that select
//! the order-estimate regime.
//!
//! All sweeps work on ln-scale samples over geometric grids, so they reach
//! very large arguments without overflow. Membership in the asymptotic
//! classes can only be certified on a finite grid; the declared decision
//! rules (grids, epsilon sets, stability thresholds) are fixed here so the
//! classification is deterministic and reproducible.

use serde::Serialize;

use crate::error::Result;
use crate::growth::GrowthFunction;
use crate::weights::WeightFunction;

/// Relative tolerance for pairwise monotonicity checks (applied on ln scale).
const MONOTONE_TOL: f64 = 1e-12;

/// Allowed growth of the almost-decreasing constant when the grid horizon
/// is quadrupled.
const STABILITY_FACTOR: f64 = 1.01;

/// A geometric sample grid on [1, t_max].
#[derive(Debug, Clone)]
pub struct GeometricGrid {
    points: Vec<f64>,
}

impl GeometricGrid {
    pub fn new(t_max: f64, points_per_octave: usize) -> Self {
        assert!(t_max > 1.0 && points_per_octave >= 1);
        let octaves = t_max.log2();
        let n = (octaves * points_per_octave as f64).ceil() as usize;
        let mut points: Vec<f64> = (0..=n)
            .map(|i| 2f64.powf(octaves * i as f64 / n as f64))
            .collect();
        points[0] = 1.0;
        let last = points.len() - 1;
        points[last] = t_max;
        GeometricGrid { points }
    }

    /// Grid for almost-decreasing and monotone-class sweeps.
    pub fn classification_default() -> Self {
        GeometricGrid::new(1048576.0, 8) // 2^20
    }

    /// Far-reaching grid for asymptotic (slow-oscillation) checks.
    pub fn asymptotic_default() -> Self {
        GeometricGrid::new(1e40, 8)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn t_max(&self) -> f64 {
        *self.points.last().unwrap()
    }
}

/// Result of the almost-decreasing membership search.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaReport {
    pub member: bool,
    /// Witness exponent: t^alpha ψ(t) is almost decreasing with `constant`.
    pub alpha: f64,
    /// Smallest constant valid on the grid (clamped below at 1).
    pub constant: f64,
    /// Whether the constant stayed stable when the horizon quadrupled.
    pub stable: bool,
}

/// Searches for an exponent alpha > base such that t^alpha ψ(t) is almost
/// decreasing on the grid: the reported constant is the largest ratio
/// h(t1)/h(t2) over sampled pairs t1 > t2, and a candidate is accepted when
/// that constant does not grow by more than 1% as the horizon quadruples.
///
/// Candidates are alpha = base + eps for eps in {2^-k : k = 2..20}, scanned
/// from the largest; almost-decrease propagates to smaller exponents, so
/// the first stable candidate is reported.
pub fn almost_decreasing_search(
    w: &WeightFunction,
    base: f64,
    grid: &GeometricGrid,
) -> Result<ThetaReport> {
    let pts = grid.points();
    let ln_psi: Vec<f64> = pts
        .iter()
        .map(|&t| w.ln_eval(t))
        .collect::<Result<_>>()?;
    let ln_t: Vec<f64> = pts.iter().map(|&t| t.ln()).collect();
    let quarter_edge = grid.t_max() / 4.0;

    let mut best: Option<ThetaReport> = None;
    for k in 2..=20u32 {
        let eps = 2f64.powi(-(k as i32));
        let alpha = base + eps;
        let mut running_min = f64::INFINITY;
        let mut max_diff_quarter = 0.0f64;
        let mut max_diff_full = 0.0f64;
        for i in 0..pts.len() {
            let h = ln_psi[i] + alpha * ln_t[i];
            if running_min.is_finite() {
                let diff = h - running_min;
                if pts[i] <= quarter_edge && diff > max_diff_quarter {
                    max_diff_quarter = diff;
                }
                if diff > max_diff_full {
                    max_diff_full = diff;
                }
            }
            if h < running_min {
                running_min = h;
            }
        }
        let k_quarter = max_diff_quarter.exp().max(1.0);
        let k_full = max_diff_full.exp().max(1.0);
        let stable = k_full.is_finite() && k_full <= k_quarter * STABILITY_FACTOR;
        let report = ThetaReport {
            member: stable,
            alpha,
            constant: k_full,
            stable,
        };
        if stable {
            return Ok(report);
        }
        match &best {
            Some(b) if b.constant <= report.constant => {}
            _ => best = Some(report),
        }
    }
    Ok(best.expect("candidate list is non-empty"))
}

/// Membership test for the admissible weight class at exponent p:
/// non-increasing ψ with t^alpha ψ(t) almost decreasing for some
/// alpha > 1/p.
pub fn classify_theta_p(w: &WeightFunction, p: f64, grid: &GeometricGrid) -> Result<ThetaReport> {
    almost_decreasing_search(w, 1.0 / p, grid)
}

/// Power-monotonicity classes found by the epsilon search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum MonotoneClass {
    /// g(t)·t^(-eps) is non-decreasing over the whole grid.
    APlus { epsilon: f64 },
    /// g(t)·t^(+eps) is non-increasing over the whole grid.
    AMinus { epsilon: f64 },
    Neither,
}

/// Searches eps in {2^-k : k = 0..20} (largest first) for a power tilt
/// that makes g globally monotone on the grid; pairwise comparisons use a
/// 1e-12 relative tolerance.
pub fn classify_monotone_class(g: &GrowthFunction, grid: &GeometricGrid) -> Result<MonotoneClass> {
    let pts = grid.points();
    let ln_g: Vec<f64> = pts.iter().map(|&t| g.ln_eval(t)).collect::<Result<_>>()?;
    let ln_t: Vec<f64> = pts.iter().map(|&t| t.ln()).collect();

    let monotone = |sign_eps: f64, eps: f64, non_decreasing: bool| -> bool {
        for i in 1..pts.len() {
            let prev = ln_g[i - 1] + sign_eps * eps * ln_t[i - 1];
            let cur = ln_g[i] + sign_eps * eps * ln_t[i];
            let ok = if non_decreasing {
                cur >= prev - MONOTONE_TOL
            } else {
                cur <= prev + MONOTONE_TOL
            };
            if !ok {
                return false;
            }
        }
        true
    };

    for k in 0..=20i32 {
        let eps = 2f64.powi(-k);
        if monotone(-1.0, eps, true) {
            return Ok(MonotoneClass::APlus { epsilon: eps });
        }
    }
    for k in 0..=20i32 {
        let eps = 2f64.powi(-k);
        if monotone(1.0, eps, false) {
            return Ok(MonotoneClass::AMinus { epsilon: eps });
        }
    }
    Ok(MonotoneClass::Neither)
}

/// Diagnostics from the slow-oscillation test.
#[derive(Debug, Clone, Serialize)]
pub struct SlowOscillationReport {
    pub member: bool,
    /// Per delta: the largest sampled t at which a tilted monotonicity
    /// check still failed (None when the check was clean from t0 on).
    pub stabilization: Vec<(f64, Option<f64>)>,
}

/// Deltas probed by the slow-oscillation test, fixed by design.
pub const SLOW_OSCILLATION_DELTAS: [f64; 3] = [0.5, 0.1, 0.02];

/// Tests slow oscillation: for every delta in the fixed set, g(t)·t^delta
/// must become non-decreasing and g(t)·t^(-delta) non-increasing from some
/// threshold on. The threshold may exceed `t0`; membership requires the
/// clean tail to span at least a quarter of the grid's log-range above t0,
/// so the asymptotic grid must reach far beyond the stabilization point.
pub fn classify_zygmund(
    g: &GrowthFunction,
    grid: &GeometricGrid,
    t0: f64,
) -> Result<SlowOscillationReport> {
    let pts = grid.points();
    let ln_g: Vec<f64> = pts.iter().map(|&t| g.ln_eval(t)).collect::<Result<_>>()?;
    let ln_t: Vec<f64> = pts.iter().map(|&t| t.ln()).collect();
    let start = pts.partition_point(|&t| t < t0).max(1);
    let span = ln_t[pts.len() - 1] - t0.max(1.0).ln();
    let required_tail = 0.25 * span;

    let mut stabilization = Vec::new();
    let mut member = true;
    for &delta in SLOW_OSCILLATION_DELTAS.iter() {
        for (sign, non_decreasing) in [(1.0f64, true), (-1.0f64, false)] {
            let mut last_violation: Option<usize> = None;
            for i in start..pts.len() {
                let prev = ln_g[i - 1] + sign * delta * ln_t[i - 1];
                let cur = ln_g[i] + sign * delta * ln_t[i];
                let ok = if non_decreasing {
                    cur >= prev - MONOTONE_TOL
                } else {
                    cur <= prev + MONOTONE_TOL
                };
                if !ok {
                    last_violation = Some(i);
                }
            }
            let (fail_t, clean_tail) = match last_violation {
                Some(i) => (Some(pts[i]), ln_t[pts.len() - 1] - ln_t[i]),
                None => (None, span),
            };
            if sign > 0.0 {
                stabilization.push((delta, fail_t));
            } else {
                stabilization.push((-delta, fail_t));
            }
            if clean_tail < required_tail {
                member = false;
            }
        }
    }
    Ok(SlowOscillationReport {
        member,
        stabilization,
    })
}

/// Which side of the logarithmic-integral comparison a slowly oscillating
/// monotone function satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ZRhoClass {
    ZPlus,
    ZMinus,
    Neither,
}

#[derive(Debug, Clone, Serialize)]
pub struct ZRhoReport {
    pub class: ZRhoClass,
    /// (n, g^rho(n)·ln n / integral) samples.
    pub ratios: Vec<(u64, f64)>,
    /// Whether the logarithmic integral looks bounded (converged) at the
    /// grid horizon: its last quadrupling added less than 1%.
    pub integral_bounded: bool,
}

/// Classifies a slowly oscillating g against the two-sided logarithmic
/// integral comparison at exponent rho.
///
/// Boundedness of a ratio sequence is declared when, over the upper half
/// of `n_set`, max and min stay within a factor 4 of the median. Constant
/// g (direction undecidable) is reported on the non-increasing side.
pub fn classify_z_rho(g: &GrowthFunction, rho: f64, n_set: &[u64]) -> Result<ZRhoReport> {
    assert!(n_set.len() >= 4, "need at least 4 sample sizes");
    let mut ratios = Vec::with_capacity(n_set.len());
    for &n in n_set {
        let nf = n as f64;
        let integral = g.power_log_integral(rho, nf)?;
        let ln_gn = g.ln_eval(nf)?;
        let numer = (rho * ln_gn).exp() * nf.ln();
        let ratio = if integral > 0.0 { numer / integral } else { f64::INFINITY };
        ratios.push((n, ratio));
    }

    // Direction of g on the sampled range, with a deadband for constants.
    let first = g.ln_eval(n_set[0] as f64)?;
    let last = g.ln_eval(*n_set.last().unwrap() as f64)?;
    let non_decreasing = last > first + 1e-9;
    let non_increasing = last < first - 1e-9;

    let upper_half = &ratios[ratios.len() / 2..];
    let bounded = |values: &[f64]| -> bool {
        let mut sorted: Vec<f64> = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let median = sorted[sorted.len() / 2];
        if !(median.is_finite() && median > 0.0) {
            return false;
        }
        values
            .iter()
            .all(|&v| v.is_finite() && v <= 4.0 * median && v >= median / 4.0)
    };

    let plus_ratios: Vec<f64> = upper_half.iter().map(|&(_, r)| r).collect();
    let minus_ratios: Vec<f64> = upper_half.iter().map(|&(_, r)| 1.0 / r).collect();

    let class = if non_decreasing {
        if bounded(&plus_ratios) {
            ZRhoClass::ZPlus
        } else {
            ZRhoClass::Neither
        }
    } else if non_increasing || bounded(&minus_ratios) {
        // Constant g ties break to the non-increasing side.
        if bounded(&minus_ratios) {
            ZRhoClass::ZMinus
        } else {
            ZRhoClass::Neither
        }
    } else {
        ZRhoClass::Neither
    };

    let horizon = *n_set.last().unwrap() as f64;
    let i_full = g.power_log_integral(rho, horizon)?;
    let i_quarter = g.power_log_integral(rho, horizon / 4.0)?;
    let integral_bounded = i_full > 0.0 && (i_full - i_quarter) <= 0.01 * i_full;

    Ok(ZRhoReport {
        class,
        ratios,
        integral_bounded,
    })
}

/// The regime a configuration falls into, naming the order formula that
/// the two-sided estimates predict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RegimeLabel {
    /// Growing g: error of order ψ(n)·n^(1/p).
    APlus,
    /// Slowly oscillating g with divergent logarithmic integral: error of
    /// order n^(-s) times the integral to power 1/p'.
    ZygmundUnboundedIntegral,
    /// Slowly oscillating, non-increasing g with convergent integral:
    /// saturation order n^(-s).
    ZygmundBoundedIntegral,
    /// Decaying g: saturation order n^(-s).
    AMinus,
    /// The numeric tests conflict or no branch applies.
    Undetermined,
}

impl RegimeLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            RegimeLabel::APlus => "a_plus",
            RegimeLabel::ZygmundUnboundedIntegral => "zygmund_unbounded_integral",
            RegimeLabel::ZygmundBoundedIntegral => "zygmund_bounded_integral",
            RegimeLabel::AMinus => "a_minus",
            RegimeLabel::Undetermined => "undetermined",
        }
    }
}

/// Full classification of a (ψ, p, s) configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub theta: ThetaReport,
    pub monotone: MonotoneClass,
    pub slow_oscillation: Option<SlowOscillationReport>,
    pub z_rho: Option<ZRhoReport>,
    pub regime: RegimeLabel,
    pub diagnostics: Vec<String>,
}

impl ClassificationReport {
    /// Predicted order of the worst-case error at degree parameter n.
    ///
    /// For the integral regime the degenerate endpoint n = 1 (empty
    /// integral) falls back to ψ(1).
    pub fn predicted_order(&self, g: &GrowthFunction, n: u64) -> Result<f64> {
        let nf = n as f64;
        Ok(match self.regime {
            RegimeLabel::APlus => g.weight().eval(nf)? * nf.powf(1.0 / g.p()),
            RegimeLabel::ZygmundUnboundedIntegral => {
                if n <= 1 {
                    g.weight().eval(1.0)?
                } else {
                    let p_prime = g.p() / (g.p() - 1.0);
                    let integral = g.power_log_integral(p_prime, nf)?;
                    nf.powf(-g.s()) * integral.powf(1.0 / p_prime)
                }
            }
            RegimeLabel::ZygmundBoundedIntegral | RegimeLabel::AMinus => nf.powf(-g.s()),
            RegimeLabel::Undetermined => f64::NAN,
        })
    }

    /// Human-readable formula for the predicted order.
    pub fn predicted_formula(&self, p: f64, s: f64) -> String {
        let p_prime = p / (p - 1.0);
        match self.regime {
            RegimeLabel::APlus => format!("psi(n) * n^(1/p) with p = {p}"),
            RegimeLabel::ZygmundUnboundedIntegral => format!(
                "n^(-{s}) * (int_1^n g^{p_prime:.6}(t)/t dt)^(1/{p_prime:.6})"
            ),
            RegimeLabel::ZygmundBoundedIntegral | RegimeLabel::AMinus => format!("n^(-{s})"),
            RegimeLabel::Undetermined => "undetermined".to_string(),
        }
    }
}

/// Runs the full classification pipeline for (ψ, p, s).
///
/// Slow oscillation is screened before the power-monotonicity classes: on
/// any finite grid a slowly varying increasing function also passes the
/// A-plus search with a tiny epsilon, while the two classes are disjoint
/// over [1, inf). Checking the asymptotic class first removes that false
/// positive.
pub fn classify_regime(w: &WeightFunction, p: f64, s: f64) -> Result<ClassificationReport> {
    let grid = GeometricGrid::classification_default();
    let far_grid = GeometricGrid::asymptotic_default();
    let g = GrowthFunction::new(w.clone(), s, p)?;
    let p_prime = p / (p - 1.0);

    let theta = classify_theta_p(w, p, &grid)?;
    let monotone = classify_monotone_class(&g, &grid)?;
    let slow = classify_zygmund(&g, &far_grid, 64.0)?;

    let mut diagnostics = Vec::new();
    let mut z_rho = None;

    let regime = if slow.member {
        let n_set: Vec<u64> = (4..=20).map(|k| 1u64 << k).collect();
        let zr = classify_z_rho(&g, p_prime, &n_set)?;
        let label = match zr.class {
            ZRhoClass::ZPlus => RegimeLabel::ZygmundUnboundedIntegral,
            ZRhoClass::ZMinus if zr.integral_bounded => RegimeLabel::ZygmundBoundedIntegral,
            ZRhoClass::ZMinus => RegimeLabel::ZygmundUnboundedIntegral,
            ZRhoClass::Neither => {
                diagnostics.push(
                    "slow oscillation holds but the integral comparison ratios are unstable"
                        .to_string(),
                );
                RegimeLabel::Undetermined
            }
        };
        z_rho = Some(zr);
        label
    } else {
        match monotone {
            MonotoneClass::APlus { .. } => {
                if theta.member {
                    RegimeLabel::APlus
                } else {
                    diagnostics.push(
                        "growth class is increasing but the weight fails the admissibility test"
                            .to_string(),
                    );
                    RegimeLabel::Undetermined
                }
            }
            MonotoneClass::AMinus { .. } => RegimeLabel::AMinus,
            MonotoneClass::Neither => {
                diagnostics.push(
                    "growth function is neither power-monotone nor slowly oscillating".to_string(),
                );
                RegimeLabel::Undetermined
            }
        }
    };

    Ok(ClassificationReport {
        theta,
        monotone,
        slow_oscillation: Some(slow),
        z_rho,
        regime,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightKind;

    fn weight(kind: WeightKind) -> WeightFunction {
        WeightFunction::new(kind).unwrap()
    }

    fn growth(kind: WeightKind, s: f64, p: f64) -> GrowthFunction {
        GrowthFunction::new(weight(kind), s, p).unwrap()
    }

    #[test]
    fn theta_membership_of_pure_powers() {
        let grid = GeometricGrid::classification_default();
        let rep = classify_theta_p(&weight(WeightKind::Power { r: 1.0 }), 2.0, &grid).unwrap();
        assert!(rep.member);
        assert!((rep.alpha - 0.75).abs() < 1e-12);
        assert!((rep.constant - 1.0).abs() < 1e-9);

        let rep = classify_theta_p(&weight(WeightKind::Power { r: 0.25 }), 2.0, &grid).unwrap();
        assert!(!rep.member);

        // Slow decay just above the threshold still belongs.
        let rep = classify_theta_p(&weight(WeightKind::Power { r: 0.6 }), 2.0, &grid).unwrap();
        assert!(rep.member);
    }

    #[test]
    fn theta_membership_of_inverse_log() {
        let grid = GeometricGrid::classification_default();
        let w = weight(WeightKind::PowerInvLog {
            r: 1.0,
            alpha: 1.0,
            c: 1.0,
        });
        let rep = classify_theta_p(&w, 2.0, &grid).unwrap();
        assert!(rep.member);
    }

    #[test]
    fn monotone_class_of_pure_powers() {
        let grid = GeometricGrid::classification_default();
        // psi = t^(-0.75), s = 1, p = 2: g = t^(0.75).
        let g = growth(WeightKind::Power { r: 0.75 }, 1.0, 2.0);
        match classify_monotone_class(&g, &grid).unwrap() {
            MonotoneClass::APlus { epsilon } => assert!(epsilon <= 0.75),
            other => panic!("expected APlus, got {other:?}"),
        }
        // psi = t^(-2), s = 1, p = 2: g = t^(-0.5).
        let g = growth(WeightKind::Power { r: 2.0 }, 1.0, 2.0);
        match classify_monotone_class(&g, &grid).unwrap() {
            MonotoneClass::AMinus { epsilon } => assert!(epsilon <= 0.5),
            other => panic!("expected AMinus, got {other:?}"),
        }
        // psi = t^(-1.5), s = 1, p = 2: g == 1.
        let g = growth(WeightKind::Power { r: 1.5 }, 1.0, 2.0);
        assert_eq!(classify_monotone_class(&g, &grid).unwrap(), MonotoneClass::Neither);
    }

    #[test]
    fn slow_oscillation_members() {
        let far = GeometricGrid::asymptotic_default();
        // g == 1.
        let g = growth(WeightKind::Power { r: 1.5 }, 1.0, 2.0);
        assert!(classify_zygmund(&g, &far, 64.0).unwrap().member);
        // g = ln(t+1).
        let g = growth(
            WeightKind::PowerLog {
                r: 1.5,
                alpha: 1.0,
                c: 1.0,
            },
            1.0,
            2.0,
        );
        assert!(classify_zygmund(&g, &far, 64.0).unwrap().member);
        // g = t^(0.3) is not slowly oscillating (fails the delta = 0.1 tilt).
        let g = growth(WeightKind::Power { r: 1.2 }, 1.0, 2.0);
        assert!(!classify_zygmund(&g, &far, 64.0).unwrap().member);
    }

    #[test]
    fn z_rho_of_constant_log_and_inverse_log() {
        let n_set: Vec<u64> = (4..=20).map(|k| 1u64 << k).collect();
        // g == 1: ratio identically 1, reported on the non-increasing side.
        let g = growth(WeightKind::Power { r: 1.5 }, 1.0, 2.0);
        let rep = classify_z_rho(&g, 2.0, &n_set).unwrap();
        assert_eq!(rep.class, ZRhoClass::ZMinus);
        assert!(!rep.integral_bounded);
        for &(_, ratio) in &rep.ratios {
            assert!((ratio - 1.0).abs() < 1e-6);
        }
        // g = ln(t+1): increasing, ratio tends to 3 at rho = 2.
        let g = growth(
            WeightKind::PowerLog {
                r: 1.5,
                alpha: 1.0,
                c: 1.0,
            },
            1.0,
            2.0,
        );
        let rep = classify_z_rho(&g, 2.0, &n_set).unwrap();
        assert_eq!(rep.class, ZRhoClass::ZPlus);
        // g = 1/ln(t+1): decreasing with a convergent integral.
        let g = growth(
            WeightKind::PowerInvLog {
                r: 1.5,
                alpha: 1.0,
                c: 1.0,
            },
            1.0,
            2.0,
        );
        let rep = classify_z_rho(&g, 2.0, &n_set).unwrap();
        assert_eq!(rep.class, ZRhoClass::ZMinus);
        assert!(rep.integral_bounded);
    }

    #[test]
    fn regimes_of_corollary_configurations() {
        let w = weight(WeightKind::Power { r: 0.75 });
        assert_eq!(classify_regime(&w, 2.0, 1.0).unwrap().regime, RegimeLabel::APlus);
        let w = weight(WeightKind::Power { r: 1.5 });
        assert_eq!(
            classify_regime(&w, 2.0, 1.0).unwrap().regime,
            RegimeLabel::ZygmundUnboundedIntegral
        );
        let w = weight(WeightKind::Power { r: 3.0 });
        assert_eq!(classify_regime(&w, 2.0, 1.0).unwrap().regime, RegimeLabel::AMinus);
    }

    #[test]
    fn catalog_members_pass_theta_when_decay_beats_one_over_p() {
        let grid = GeometricGrid::classification_default();
        let members: Vec<WeightFunction> = vec![
            weight(WeightKind::Power { r: 0.75 }),
            weight(WeightKind::PowerLog {
                r: 1.0,
                alpha: 1.0,
                c: 60.0,
            }),
            weight(WeightKind::PowerInvLog {
                r: 1.0,
                alpha: 1.0,
                c: 1.0,
            }),
            weight(WeightKind::PowerLogLog {
                r: 1.0,
                alpha: 1.0,
                c: 60.0,
            }),
        ];
        for w in &members {
            let rep = classify_theta_p(w, 2.0, &grid).unwrap();
            assert!(rep.member, "expected membership for {:?}", w.kind());
        }
    }

    #[test]
    fn classification_is_scale_invariant() {
        let grid = GeometricGrid::classification_default();
        for r in [0.75, 1.5, 3.0] {
            let base = weight(WeightKind::Power { r });
            let scaled = WeightFunction::custom("scaled", move |t: f64| 10.0 * t.powf(-r)).unwrap();
            let a = classify_theta_p(&base, 2.0, &grid).unwrap();
            let b = classify_theta_p(&scaled, 2.0, &grid).unwrap();
            assert_eq!(a.member, b.member);
            let ga = GrowthFunction::new(base, 1.0, 2.0).unwrap();
            let gb = GrowthFunction::new(scaled, 1.0, 2.0).unwrap();
            assert_eq!(
                classify_monotone_class(&ga, &grid).unwrap(),
                classify_monotone_class(&gb, &grid).unwrap()
            );
        }
    }
}
