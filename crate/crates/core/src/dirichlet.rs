//! Phase-shifted Dirichlet kernels.

/// D_{k,beta}(t) = cos(beta*pi/2)/2 + sum_{v=1..k} cos(v t + beta*pi/2).
///
/// Uses the closed form with sin(t/2) denominators; falls back to direct
/// summation when |sin(t/2)| < 1e-8 where the closed form cancels.
pub fn dirichlet_beta(k: u64, beta: f64, t: f64) -> f64 {
    let phase = beta * std::f64::consts::FRAC_PI_2;
    let half = 0.5 * t;
    let s_half = half.sin();
    if s_half.abs() < 1e-8 {
        return dirichlet_beta_direct(k, beta, t);
    }
    let (sin_p, cos_p) = phase.sin_cos();
    let arg = (2.0 * k as f64 + 1.0) * half;
    cos_p * (arg.sin() / (2.0 * s_half)) - sin_p * ((half.cos() - arg.cos()) / (2.0 * s_half))
}

/// Term-by-term reference evaluation.
pub fn dirichlet_beta_direct(k: u64, beta: f64, t: f64) -> f64 {
    let phase = beta * std::f64::consts::FRAC_PI_2;
    let mut acc = 0.5 * phase.cos();
    let (sin_t, cos_t) = t.sin_cos();
    let (sin_p, cos_p) = phase.sin_cos();
    // cos(vt + phase) advanced by rotation.
    let (mut c, mut s) = (cos_p, sin_p); // cos(0t + phase), sin(0t + phase)
    for _ in 0..k {
        let next_c = c * cos_t - s * sin_t;
        let next_s = s * cos_t + c * sin_t;
        c = next_c;
        s = next_s;
        acc += c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn values_at_zero() {
        assert_abs_diff_eq!(dirichlet_beta(3, 0.0, 0.0), 3.5);
        assert_abs_diff_eq!(dirichlet_beta(5, 1.0, 0.0), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn closed_form_matches_direct_sum() {
        for &(k, beta, t) in &[
            (7u64, 0.37, 1.1),
            (1, 1.0, 0.2),
            (25, -0.6, 2.9),
            (100, 2.3, -1.4),
            (13, 0.0, 3.14159),
        ] {
            assert_abs_diff_eq!(
                dirichlet_beta(k, beta, t),
                dirichlet_beta_direct(k, beta, t),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn fallback_region_is_continuous() {
        // Just either side of the fallback threshold.
        let k = 40u64;
        let beta = 0.8;
        let a = dirichlet_beta(k, beta, 1.9e-8);
        let b = dirichlet_beta(k, beta, 2.1e-8);
        assert_abs_diff_eq!(a, b, epsilon = 1e-6);
    }
}
