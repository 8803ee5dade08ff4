//! Weight functions ψ(t) on [1, ∞) that define convolution classes.
//!
//! Four closed-form families are provided (pure power, power with a log
//! factor, with an inverse log factor, with an iterated log factor) plus an
//! escape hatch for arbitrary pointwise rules. The closed-form kinds also
//! evaluate at complex arguments in the right half-plane, which the kernel
//! tail summation relies on.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{CoreError, Result};

/// Pointwise rule for a custom weight.
pub type PointwiseRule = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// The analytic form of a weight function.
#[derive(Clone)]
pub enum WeightKind {
    /// ψ(t) = t^(-r)
    Power { r: f64 },
    /// ψ(t) = ln^alpha(t + c) / t^r
    PowerLog { r: f64, alpha: f64, c: f64 },
    /// ψ(t) = 1 / (t^r ln^alpha(t + c))
    PowerInvLog { r: f64, alpha: f64, c: f64 },
    /// ψ(t) = ln(ln^alpha(t + c)) / t^r  (equivalently alpha·lnln(t+c)/t^r)
    PowerLogLog { r: f64, alpha: f64, c: f64 },
    /// Arbitrary pointwise rule; excluded from the analytic fast paths.
    Custom { rule: PointwiseRule, label: String },
}

impl fmt::Debug for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Power { r } => write!(f, "Power {{ r: {r} }}"),
            WeightKind::PowerLog { r, alpha, c } => {
                write!(f, "PowerLog {{ r: {r}, alpha: {alpha}, c: {c} }}")
            }
            WeightKind::PowerInvLog { r, alpha, c } => {
                write!(f, "PowerInvLog {{ r: {r}, alpha: {alpha}, c: {c} }}")
            }
            WeightKind::PowerLogLog { r, alpha, c } => {
                write!(f, "PowerLogLog {{ r: {r}, alpha: {alpha}, c: {c} }}")
            }
            WeightKind::Custom { label, .. } => write!(f, "Custom {{ label: {label:?} }}"),
        }
    }
}

/// A positive weight function on t ≥ 1.
#[derive(Debug, Clone)]
pub struct WeightFunction {
    kind: WeightKind,
}

impl WeightFunction {
    /// Builds a weight and validates its kind-level constraints:
    /// positive parameters, positivity of ψ on a geometric grid, and for
    /// the closed-form kinds monotone non-increase on that grid.
    pub fn new(kind: WeightKind) -> Result<Self> {
        match &kind {
            WeightKind::Power { r } => {
                if !(*r > 0.0) {
                    return Err(CoreError::Parameter(format!("power weight needs r > 0, got {r}")));
                }
            }
            WeightKind::PowerLog { r, alpha, c } | WeightKind::PowerInvLog { r, alpha, c } => {
                if !(*r > 0.0 && *alpha > 0.0 && *c > 0.0) {
                    return Err(CoreError::Parameter(format!(
                        "log-type weight needs r > 0, alpha > 0, c > 0; got r={r}, alpha={alpha}, c={c}"
                    )));
                }
            }
            WeightKind::PowerLogLog { r, alpha, c } => {
                if !(*r > 0.0 && *alpha > 0.0) {
                    return Err(CoreError::Parameter(format!(
                        "iterated-log weight needs r > 0, alpha > 0; got r={r}, alpha={alpha}"
                    )));
                }
                // Positivity of lnln(t+c) at t = 1 requires ln(1+c) > 1.
                if !(*c > std::f64::consts::E - 1.0) {
                    return Err(CoreError::Parameter(format!(
                        "iterated-log weight needs c > e - 1 for positivity at t = 1, got c={c}"
                    )));
                }
            }
            WeightKind::Custom { .. } => {}
        }
        let w = WeightFunction { kind };
        w.validate_on_grid()?;
        Ok(w)
    }

    /// Convenience constructor for ψ(t) = t^(-r).
    pub fn power(r: f64) -> Result<Self> {
        Self::new(WeightKind::Power { r })
    }

    /// Convenience constructor for a custom pointwise rule.
    pub fn custom<F>(label: &str, rule: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self::new(WeightKind::Custom {
            rule: Arc::new(rule),
            label: label.to_string(),
        })
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    /// True for the closed-form kinds that extend analytically to the
    /// right half-plane.
    pub fn is_analytic(&self) -> bool {
        !matches!(self.kind, WeightKind::Custom { .. })
    }

    fn validate_on_grid(&self) -> Result<()> {
        let mut prev: Option<f64> = None;
        let mut t = 1.0f64;
        while t <= 1048576.0 {
            let v = self.eval(t)?;
            if !v.is_finite() {
                return Err(CoreError::Parameter(format!(
                    "weight evaluates to {v} at t = {t}"
                )));
            }
            match self.kind {
                WeightKind::Custom { .. } => {
                    if v < 0.0 {
                        return Err(CoreError::Parameter(format!(
                            "custom weight is negative at t = {t}"
                        )));
                    }
                }
                _ => {
                    if v <= 0.0 {
                        return Err(CoreError::Parameter(format!(
                            "weight is not positive at t = {t}"
                        )));
                    }
                    if let Some(p) = prev {
                        if v > p * (1.0 + 1e-12) {
                            return Err(CoreError::Parameter(format!(
                                "weight is not non-increasing near t = {t}"
                            )));
                        }
                    }
                }
            }
            prev = Some(v);
            t *= 2.0f64.powf(0.25);
        }
        Ok(())
    }

    /// ψ(t) for t ≥ 1.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(t >= 1.0) {
            return Err(CoreError::Domain(format!("weight argument must satisfy t >= 1, got {t}")));
        }
        Ok(self.eval_unchecked(t))
    }

    /// ψ(t) without the domain check; used internally on trusted grids.
    pub(crate) fn eval_unchecked(&self, t: f64) -> f64 {
        match &self.kind {
            WeightKind::Power { r } => t.powf(-r),
            WeightKind::PowerLog { r, alpha, c } => (t + c).ln().powf(*alpha) * t.powf(-r),
            WeightKind::PowerInvLog { r, alpha, c } => t.powf(-r) / (t + c).ln().powf(*alpha),
            WeightKind::PowerLogLog { r, alpha, c } => alpha * (t + c).ln().ln() * t.powf(-r),
            WeightKind::Custom { rule, .. } => rule(t),
        }
    }

    /// ln ψ(t), evaluated in closed form for the catalog kinds so that
    /// classification sweeps can reach astronomically large t without
    /// overflow or underflow.
    pub fn ln_eval(&self, t: f64) -> Result<f64> {
        if !(t >= 1.0) {
            return Err(CoreError::Domain(format!("weight argument must satisfy t >= 1, got {t}")));
        }
        Ok(match &self.kind {
            WeightKind::Power { r } => -r * t.ln(),
            WeightKind::PowerLog { r, alpha, c } => alpha * (t + c).ln().ln() - r * t.ln(),
            WeightKind::PowerInvLog { r, alpha, c } => -alpha * (t + c).ln().ln() - r * t.ln(),
            WeightKind::PowerLogLog { r, alpha, c } => {
                (alpha * (t + c).ln().ln()).ln() - r * t.ln()
            }
            WeightKind::Custom { rule, .. } => rule(t).ln(),
        })
    }

    /// Analytic continuation ψ(z) for Re z ≥ 1 (principal branches).
    ///
    /// Errors for custom rules, which have no analytic extension.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        if z.re < 1.0 {
            return Err(CoreError::Domain(format!(
                "complex weight argument must satisfy Re z >= 1, got {z}"
            )));
        }
        let pow = |base: Complex64, e: f64| (base.ln() * e).exp();
        Ok(match &self.kind {
            WeightKind::Power { r } => pow(z, -r),
            WeightKind::PowerLog { r, alpha, c } => pow((z + c).ln(), *alpha) * pow(z, -r),
            WeightKind::PowerInvLog { r, alpha, c } => pow(z, -r) / pow((z + c).ln(), *alpha),
            WeightKind::PowerLogLog { r, alpha, c } => {
                (z + c).ln().ln() * *alpha * pow(z, -r)
            }
            WeightKind::Custom { label, .. } => {
                return Err(CoreError::Unsupported(format!(
                    "custom weight {label:?} has no analytic continuation"
                )))
            }
        })
    }

    /// Parses a plain `key=value` configuration line, e.g.
    /// `kind=power r=0.75` or `kind=powerlog r=1 alpha=1 c=9`.
    pub fn parse_config(line: &str) -> Result<Self> {
        let mut kind: Option<String> = None;
        let mut r: Option<f64> = None;
        let mut alpha: Option<f64> = None;
        let mut c: Option<f64> = None;
        for token in line.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| CoreError::Parse(format!("expected key=value, got {token:?}")))?;
            match key {
                "kind" => kind = Some(value.to_ascii_lowercase()),
                "r" => r = Some(parse_f64(key, value)?),
                "alpha" => alpha = Some(parse_f64(key, value)?),
                "c" => c = Some(parse_f64(key, value)?),
                other => {
                    return Err(CoreError::Parse(format!("unknown weight key {other:?}")));
                }
            }
        }
        let kind = kind.ok_or_else(|| CoreError::Parse("missing kind=...".into()))?;
        let need = |v: Option<f64>, name: &str| {
            v.ok_or_else(|| CoreError::Parse(format!("weight kind {kind:?} needs {name}=...")))
        };
        let built = match kind.as_str() {
            "power" => WeightKind::Power { r: need(r, "r")? },
            "powerlog" => WeightKind::PowerLog {
                r: need(r, "r")?,
                alpha: need(alpha, "alpha")?,
                c: need(c, "c")?,
            },
            "powerinvlog" => WeightKind::PowerInvLog {
                r: need(r, "r")?,
                alpha: need(alpha, "alpha")?,
                c: need(c, "c")?,
            },
            "powerloglog" => WeightKind::PowerLogLog {
                r: need(r, "r")?,
                alpha: need(alpha, "alpha")?,
                c: need(c, "c")?,
            },
            other => {
                return Err(CoreError::Parse(format!(
                    "unknown weight kind {other:?} (expected power, powerlog, powerinvlog, powerloglog)"
                )))
            }
        };
        WeightFunction::new(built)
    }

    /// Canonical `key=value` form of the weight (catalog kinds only).
    pub fn config_string(&self) -> String {
        match &self.kind {
            WeightKind::Power { r } => format!("kind=power r={r}"),
            WeightKind::PowerLog { r, alpha, c } => {
                format!("kind=powerlog r={r} alpha={alpha} c={c}")
            }
            WeightKind::PowerInvLog { r, alpha, c } => {
                format!("kind=powerinvlog r={r} alpha={alpha} c={c}")
            }
            WeightKind::PowerLogLog { r, alpha, c } => {
                format!("kind=powerloglog r={r} alpha={alpha} c={c}")
            }
            WeightKind::Custom { label, .. } => format!("kind=custom label={label}"),
        }
    }

    /// The power decay exponent r for catalog kinds.
    pub(crate) fn decay_exponent(&self) -> Option<f64> {
        match self.kind {
            WeightKind::Power { r }
            | WeightKind::PowerLog { r, .. }
            | WeightKind::PowerInvLog { r, .. }
            | WeightKind::PowerLogLog { r, .. } => Some(r),
            WeightKind::Custom { .. } => None,
        }
    }
}

fn parse_f64(key: &str, value: &str) -> Result<f64> {
    value
        .parse::<f64>()
        .map_err(|_| CoreError::Parse(format!("value for {key:?} is not a number: {value:?}")))
}

/// The tuple (ψ, β, p, s) defining a convolution class and a summation
/// exponent, together with the conjugate exponent p' = p/(p-1).
#[derive(Debug, Clone)]
pub struct ClassSpec {
    pub psi: WeightFunction,
    pub beta: f64,
    pub p: f64,
    pub p_prime: f64,
    pub s: f64,
}

impl ClassSpec {
    /// Validates p ∈ (1, ∞), s > 0, and the catalog parameter constraints
    /// that guarantee the weight belongs to the admissible class for this
    /// p (decay r > 1/p; for the log and iterated-log numerator kinds
    /// additionally c > e^(2·alpha/(r - 1/p)) - 1).
    pub fn new(psi: WeightFunction, beta: f64, p: f64, s: f64) -> Result<Self> {
        if !(p > 1.0 && p.is_finite()) {
            return Err(CoreError::Parameter(format!(
                "class exponent must satisfy 1 < p < inf, got {p}"
            )));
        }
        if !(s > 0.0 && s.is_finite()) {
            return Err(CoreError::Parameter(format!(
                "summation exponent must satisfy s > 0, got {s}"
            )));
        }
        match psi.kind() {
            WeightKind::Power { r }
            | WeightKind::PowerInvLog { r, .. } => {
                if !(*r > 1.0 / p) {
                    return Err(CoreError::Parameter(format!(
                        "weight decay r={r} must exceed 1/p={} for this class",
                        1.0 / p
                    )));
                }
            }
            WeightKind::PowerLog { r, alpha, c } | WeightKind::PowerLogLog { r, alpha, c } => {
                if !(*r > 1.0 / p) {
                    return Err(CoreError::Parameter(format!(
                        "weight decay r={r} must exceed 1/p={} for this class",
                        1.0 / p
                    )));
                }
                let c_min = (2.0 * alpha / (r - 1.0 / p)).exp() - 1.0;
                if !(*c > c_min) {
                    return Err(CoreError::Parameter(format!(
                        "log-factor weight needs c > {c_min:.6} for p={p}, got c={c}"
                    )));
                }
            }
            WeightKind::Custom { .. } => {}
        }
        let p_prime = p / (p - 1.0);
        Ok(ClassSpec {
            psi,
            beta,
            p,
            p_prime,
            s,
        })
    }

    /// Phase βπ/2 used throughout the kernel formulas.
    pub fn phase(&self) -> f64 {
        self.beta * std::f64::consts::FRAC_PI_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn power_closed_forms() {
        let w = WeightFunction::power(1.0).unwrap();
        assert_relative_eq!(w.eval(2.0).unwrap(), 0.5);
        let w = WeightFunction::power(0.75).unwrap();
        assert_relative_eq!(w.eval(16.0).unwrap(), 0.125, max_relative = 1e-15);
    }

    #[test]
    fn powerlog_at_one() {
        let w = WeightFunction::new(WeightKind::PowerLog {
            r: 1.0,
            alpha: 1.0,
            c: 9.0,
        })
        .unwrap();
        assert_relative_eq!(w.eval(1.0).unwrap(), 10f64.ln(), max_relative = 1e-15);
    }

    #[test]
    fn domain_error_below_one() {
        let w = WeightFunction::power(1.0).unwrap();
        assert!(w.eval(0.5).is_err());
    }

    #[test]
    fn rejects_nonpositive_iterated_log() {
        // c too small makes lnln(1+c) <= 0.
        assert!(WeightFunction::new(WeightKind::PowerLogLog {
            r: 1.0,
            alpha: 1.0,
            c: 1.0,
        })
        .is_err());
    }

    #[test]
    fn rejects_increasing_powerlog() {
        // ln^3(t+1)/sqrt(t) increases near t = 1.
        assert!(WeightFunction::new(WeightKind::PowerLog {
            r: 0.5,
            alpha: 3.0,
            c: 1.0,
        })
        .is_err());
    }

    #[test]
    fn complex_eval_matches_real_axis() {
        let kinds = [
            WeightKind::Power { r: 0.75 },
            WeightKind::PowerLog {
                r: 1.0,
                alpha: 1.0,
                c: 9.0,
            },
            WeightKind::PowerInvLog {
                r: 1.0,
                alpha: 1.0,
                c: 1.0,
            },
            WeightKind::PowerLogLog {
                r: 1.5,
                alpha: 1.0,
                c: 9.0,
            },
        ];
        for kind in kinds {
            let w = WeightFunction::new(kind).unwrap();
            for t in [1.0, 2.5, 100.0, 1e8] {
                let real = w.eval(t).unwrap();
                let z = w.eval_complex(Complex64::new(t, 0.0)).unwrap();
                assert_relative_eq!(z.re, real, max_relative = 1e-13);
                assert!(z.im.abs() < 1e-13 * real.abs());
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let w = WeightFunction::parse_config("kind=powerlog r=1 alpha=1 c=9").unwrap();
        assert_relative_eq!(w.eval(1.0).unwrap(), 10f64.ln(), max_relative = 1e-15);
        let again = WeightFunction::parse_config(&w.config_string()).unwrap();
        assert_relative_eq!(again.eval(7.0).unwrap(), w.eval(7.0).unwrap());
        assert!(WeightFunction::parse_config("kind=bogus r=1").is_err());
        assert!(WeightFunction::parse_config("r=1").is_err());
        assert!(WeightFunction::parse_config("kind=powerlog r=1").is_err());
    }

    #[test]
    fn class_spec_validates_p_and_catalog() {
        let psi = WeightFunction::power(0.75).unwrap();
        assert!(ClassSpec::new(psi.clone(), 0.0, 1.0, 1.0).is_err());
        assert!(ClassSpec::new(psi.clone(), 0.0, f64::INFINITY, 1.0).is_err());
        let spec = ClassSpec::new(psi.clone(), 0.0, 2.0, 1.0).unwrap();
        assert_relative_eq!(1.0 / spec.p + 1.0 / spec.p_prime, 1.0, epsilon = 1e-15);
        // r = 0.75 is too slow for p = 1.2 (1/p = 0.833...).
        assert!(ClassSpec::new(psi, 0.0, 1.2, 1.0).is_err());
        // Catalog constraint on c for the log-factor family at p = 2:
        // needs c > e^(2/(1 - 0.5)) - 1 = e^4 - 1 when r = 1, alpha = 1.
        let w = WeightFunction::new(WeightKind::PowerLog {
            r: 1.0,
            alpha: 1.0,
            c: 9.0,
        })
        .unwrap();
        assert!(ClassSpec::new(w, 0.0, 2.0, 1.0).is_err());
        let w = WeightFunction::new(WeightKind::PowerLog {
            r: 1.0,
            alpha: 1.0,
            c: 60.0,
        })
        .unwrap();
        assert!(ClassSpec::new(w, 0.0, 2.0, 1.0).is_ok());
    }
}
