//! Panel-adaptive Gauss–Legendre quadrature.
//!
//! The integrators here are deliberately plain: composite 16-node
//! Gauss–Legendre panels, a worst-panel-first refinement loop, and an
//! optional dyadic cascade toward an integrable endpoint singularity.
//! Panel sums are accumulated in a fixed (sorted) order so results do not
//! depend on evaluation order.

use crate::error::{CoreError, Result};

/// Number of nodes per panel.
pub const GAUSS_NODES: usize = 16;

/// Nodes and weights of the 16-point Gauss–Legendre rule on [-1, 1].
///
/// Computed once by Newton iteration on Legendre polynomials; accurate to
/// machine precision (verified against polynomial exactness up to degree 31).
fn gauss_legendre_16() -> &'static [(f64, f64); GAUSS_NODES] {
    use std::sync::OnceLock;
    static RULE: OnceLock<[(f64, f64); GAUSS_NODES]> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GAUSS_NODES;
        let mut rule = [(0.0f64, 0.0f64); GAUSS_NODES];
        for i in 0..n {
            // Chebyshev-type initial guess for the i-th root.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Evaluate P_n(x) and P_n'(x) via the three-term recurrence.
                let (mut p0, mut p1) = (1.0f64, x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // Roots come out in descending order; store ascending.
            rule[n - 1 - i] = (x, w);
        }
        rule
    })
}

/// The 16-point rule, exposed for integrators with non-scalar integrands.
pub fn gauss_legendre_rule() -> &'static [(f64, f64); GAUSS_NODES] {
    gauss_legendre_16()
}

/// One Gauss–Legendre pass over [a, b].
pub fn gauss_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for &(x, w) in gauss_legendre_16().iter() {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    /// Best estimate of the integral.
    pub value: f64,
    /// Estimated absolute error (includes any frozen endpoint bracket).
    pub error_bound: f64,
    /// Number of leaf panels in the final partition.
    pub panels: usize,
}

struct Leaf {
    a: f64,
    b: f64,
    /// GL16 over [a, b].
    coarse: f64,
    /// GL16 over the two halves, summed.
    fine: f64,
    depth: u32,
}

impl Leaf {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Self {
        let coarse = gauss_panel(f, a, b);
        let mid = 0.5 * (a + b);
        let fine = gauss_panel(f, a, mid) + gauss_panel(f, mid, b);
        Leaf {
            a,
            b,
            coarse,
            fine,
            depth,
        }
    }

    fn err(&self) -> f64 {
        (self.coarse - self.fine).abs()
    }
}

/// Options for [`adaptive_integral`].
#[derive(Debug, Clone, Copy)]
pub struct AdaptiveOpts {
    /// Relative tolerance on the integral value.
    pub rel_tol: f64,
    /// Hard cap on bisection depth per panel.
    pub max_depth: u32,
    /// Cap on the number of leaf panels.
    pub max_panels: usize,
    /// Treat the left endpoint of the domain as an integrable algebraic
    /// singularity: panels touching it are refined dyadically and, once
    /// narrower than `singular_floor`, replaced by a power-law
    /// extrapolation with an explicit bracket.
    pub singular_left: bool,
    /// Width below which the leftmost panel is extrapolated instead of split.
    pub singular_floor: f64,
}

impl Default for AdaptiveOpts {
    fn default() -> Self {
        AdaptiveOpts {
            rel_tol: 1e-10,
            max_depth: 80,
            max_panels: 400_000,
            singular_left: false,
            singular_floor: 1e-18,
        }
    }
}

/// Adaptive composite Gauss–Legendre integration of `f` over the panels
/// delimited by `breaks` (sorted, at least two entries).
///
/// Refines the worst panel first until the summed panel error estimates
/// drop below `rel_tol` times the integral, panels touching a declared
/// left-endpoint singularity are handled by dyadic cascade plus power-law
/// extrapolation below `singular_floor`.
pub fn adaptive_integral<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    opts: &AdaptiveOpts,
) -> Result<QuadResult> {
    assert!(breaks.len() >= 2, "need at least one panel");
    let left_edge = breaks[0];
    let mut leaves: Vec<Leaf> = Vec::with_capacity(breaks.len().max(16));
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            leaves.push(Leaf::new(f, w[0], w[1], 0));
        }
    }
    // Contribution of panels that will not be refined further.
    let mut frozen_value = 0.0f64;
    let mut frozen_err = 0.0f64;

    loop {
        let mut total: f64 = frozen_value;
        let mut err: f64 = frozen_err;
        for l in &leaves {
            total += l.fine;
            err += l.err();
        }
        if !total.is_finite() {
            return Err(CoreError::Quadrature {
                estimate: total,
                error_bound: err,
                requested: opts.rel_tol,
            });
        }
        let target = opts.rel_tol * total.abs();
        if err <= target || err == 0.0 {
            leaves.sort_by(|p, q| p.a.total_cmp(&q.a));
            let mut value = frozen_value;
            for l in &leaves {
                value += l.fine;
            }
            return Ok(QuadResult {
                value,
                error_bound: err,
                panels: leaves.len(),
            });
        }

        // Split the worst refinable leaf.
        let mut worst: Option<usize> = None;
        let mut worst_err = 0.0;
        for (i, l) in leaves.iter().enumerate() {
            if l.err() > worst_err {
                worst_err = l.err();
                worst = Some(i);
            }
        }
        let Some(i) = worst else {
            return Err(CoreError::Quadrature {
                estimate: total,
                error_bound: err,
                requested: opts.rel_tol,
            });
        };
        let leaf = leaves.swap_remove(i);
        let touches_singularity = opts.singular_left && leaf.a == left_edge;
        let exhausted = if touches_singularity {
            (leaf.b - leaf.a) <= opts.singular_floor
        } else {
            leaf.depth >= opts.max_depth
        };
        if exhausted || leaves.len() + 1 >= opts.max_panels {
            if touches_singularity {
                // Extrapolate the leftover mass assuming |f| ~ C (x-a)^(-g),
                // g < 1, fitted from the two half-panel estimates.
                let (lo, hi) = singular_extrapolation(&leaf);
                frozen_value += 0.5 * (lo + hi);
                frozen_err += 0.5 * (hi - lo).abs();
            } else {
                frozen_value += leaf.fine;
                frozen_err += leaf.err();
            }
            if leaves.is_empty() {
                return Err(CoreError::Quadrature {
                    estimate: frozen_value,
                    error_bound: frozen_err,
                    requested: opts.rel_tol,
                });
            }
            continue;
        }
        let mid = 0.5 * (leaf.a + leaf.b);
        leaves.push(Leaf::new(f, leaf.a, mid, leaf.depth + 1));
        leaves.push(Leaf::new(f, mid, leaf.b, leaf.depth + 1));
    }
}

/// Bracket for the mass of a panel touching an algebraic singularity.
///
/// With m(h) the mass of [a, a+h], a power integrand gives
/// m(h/2)/m(h) = 2^(g-1) for exponent -g; solving for g extrapolates the
/// full mass as m(h) / (1 - m(h/2)/m(h)) via the geometric tail. The
/// returned interval pads the estimate by the fit's own uncertainty.
fn singular_extrapolation(leaf: &Leaf) -> (f64, f64) {
    let m_full = leaf.fine;
    let m_coarse = leaf.coarse;
    if m_full == 0.0 {
        return (0.0, 0.0);
    }
    // Ratio of successive dyadic shells is estimated from the coarse/fine
    // discrepancy; for a convergent (g < 1) singularity the shell ratio
    // rho = 2^(g-1) lies in (1/2, 1).
    let rho = ((m_coarse / m_full).abs()).clamp(0.05, 0.95);
    let tail = m_full * rho / (1.0 - rho);
    let est = m_full + tail;
    let pad = tail.abs();
    (est - pad, est + pad)
}
