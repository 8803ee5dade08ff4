//! Trigonometric polynomials, the Zygmund/Fejér coefficient multipliers,
//! and convolution against a class kernel in coefficient space.

use std::io::{BufRead, Write};

use crate::error::{CoreError, Result};
use crate::weights::ClassSpec;

/// A finite trigonometric polynomial
/// a0/2 + sum_k (a_k cos kt + b_k sin kt).
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPolynomial {
    pub a0: f64,
    cos_coeffs: Vec<f64>,
    sin_coeffs: Vec<f64>,
}

impl TrigPolynomial {
    /// Builds a polynomial from matching coefficient sequences.
    pub fn new(a0: f64, cos_coeffs: Vec<f64>, sin_coeffs: Vec<f64>) -> Result<Self> {
        if cos_coeffs.len() != sin_coeffs.len() {
            return Err(CoreError::Parameter(format!(
                "coefficient sequences must have equal length, got {} and {}",
                cos_coeffs.len(),
                sin_coeffs.len()
            )));
        }
        Ok(TrigPolynomial {
            a0,
            cos_coeffs,
            sin_coeffs,
        })
    }

    pub fn zero() -> Self {
        TrigPolynomial {
            a0: 0.0,
            cos_coeffs: Vec::new(),
            sin_coeffs: Vec::new(),
        }
    }

    /// Polynomial with phase-shifted cosine terms:
    /// sum_k c_k cos(kt + phase), entered as a_k = c_k cos(phase),
    /// b_k = -c_k sin(phase).
    pub fn from_phased_cosines(amplitudes: &[f64], phase: f64) -> Self {
        let (sin_p, cos_p) = phase.sin_cos();
        let cos_coeffs = amplitudes.iter().map(|c| c * cos_p).collect();
        let sin_coeffs = amplitudes.iter().map(|c| -c * sin_p).collect();
        TrigPolynomial {
            a0: 0.0,
            cos_coeffs,
            sin_coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.cos_coeffs.len()
    }

    pub fn cos_coeffs(&self) -> &[f64] {
        &self.cos_coeffs
    }

    pub fn sin_coeffs(&self) -> &[f64] {
        &self.sin_coeffs
    }

    /// Evaluates the polynomial with a single angle rotation per term: the
    /// pair (cos kt, sin kt) is advanced by one multiplication step, so no
    /// transcendental calls happen beyond the seed angle.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.5 * self.a0;
        let (sin_t, cos_t) = t.sin_cos();
        let (mut c, mut s) = (1.0f64, 0.0f64); // cos(0t), sin(0t)
        for k in 0..self.degree() {
            let next_c = c * cos_t - s * sin_t;
            let next_s = s * cos_t + c * sin_t;
            c = next_c;
            s = next_s;
            acc += self.cos_coeffs[k] * c + self.sin_coeffs[k] * s;
        }
        acc
    }

    /// Naive term-by-term evaluation; kept as the reference oracle.
    pub fn eval_naive(&self, t: f64) -> f64 {
        let mut acc = 0.5 * self.a0;
        for k in 0..self.degree() {
            let kt = (k + 1) as f64 * t;
            acc += self.cos_coeffs[k] * kt.cos() + self.sin_coeffs[k] * kt.sin();
        }
        acc
    }

    /// f(0) - (n-th summation value at 0) computed directly in coefficient
    /// space: sum_{k<n} (k/n)^s a_k + sum_{k>=n} a_k. Avoids the
    /// cancellation of forming the summed polynomial first.
    pub fn deviation_at_zero(&self, n: u64, s: f64) -> f64 {
        let nf = n as f64;
        let mut acc = 0.0;
        for k in 1..=self.degree() as u64 {
            let a = self.cos_coeffs[(k - 1) as usize];
            if k < n {
                acc += (k as f64 / nf).powf(s) * a;
            } else {
                acc += a;
            }
        }
        acc
    }

    /// Writes `a0,<value>`, a column header, then one `k,a_k,b_k` row per
    /// coefficient.
    pub fn to_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "a0,{:.17e}", self.a0)?;
        writeln!(out, "k,a_k,b_k")?;
        for k in 0..self.degree() {
            writeln!(
                out,
                "{},{:.17e},{:.17e}",
                k + 1,
                self.cos_coeffs[k],
                self.sin_coeffs[k]
            )?;
        }
        Ok(())
    }

    /// Parses the format written by [`TrigPolynomial::to_csv`].
    pub fn from_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut lines = reader.lines();
        let header = lines
            .next()
            .transpose()
            .map_err(|e| CoreError::Parse(e.to_string()))?
            .ok_or_else(|| CoreError::Parse("empty polynomial file".into()))?;
        let a0 = header
            .strip_prefix("a0,")
            .ok_or_else(|| CoreError::Parse("expected leading a0 line".into()))?
            .trim()
            .parse::<f64>()
            .map_err(|e| CoreError::Parse(e.to_string()))?;
        let mut cos_coeffs = Vec::new();
        let mut sin_coeffs = Vec::new();
        for line in lines {
            let line = line.map_err(|e| CoreError::Parse(e.to_string()))?;
            if line.starts_with("k,") || line.trim().is_empty() {
                continue;
            }
            let mut parts = line.split(',');
            let k: usize = parts
                .next()
                .ok_or_else(|| CoreError::Parse("missing k".into()))?
                .trim()
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad row: {line}")))?;
            let a: f64 = parts
                .next()
                .ok_or_else(|| CoreError::Parse("missing a_k".into()))?
                .trim()
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad row: {line}")))?;
            let b: f64 = parts
                .next()
                .ok_or_else(|| CoreError::Parse("missing b_k".into()))?
                .trim()
                .parse()
                .map_err(|_| CoreError::Parse(format!("bad row: {line}")))?;
            if k != cos_coeffs.len() + 1 {
                return Err(CoreError::Parse(format!("rows out of order at k = {k}")));
            }
            cos_coeffs.push(a);
            sin_coeffs.push(b);
        }
        TrigPolynomial::new(a0, cos_coeffs, sin_coeffs)
    }
}

/// Coefficient multipliers of the linear summation methods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SummationMethod {
    /// Multiplier 1 - (k/n)^s for k < n.
    Zygmund { s: f64 },
    /// Multiplier 1 - k/n for k < n (the s = 1 case, kept as its own code
    /// path so the coincidence is verifiable bit-for-bit).
    Fejer,
}

impl SummationMethod {
    pub fn multiplier(&self, k: u64, n: u64) -> f64 {
        let q = k as f64 / n as f64;
        match self {
            SummationMethod::Zygmund { s } => 1.0 - q.powf(*s),
            SummationMethod::Fejer => 1.0 - q,
        }
    }

    pub fn exponent(&self) -> f64 {
        match self {
            SummationMethod::Zygmund { s } => *s,
            SummationMethod::Fejer => 1.0,
        }
    }
}

/// Applies a summation method: output has degree n-1, coefficient k scaled
/// by the method multiplier, a0 preserved.
pub fn apply_summation(f: &TrigPolynomial, n: u64, method: SummationMethod) -> TrigPolynomial {
    let keep = ((n.saturating_sub(1)) as usize).min(f.degree());
    let mut cos_coeffs = Vec::with_capacity(keep);
    let mut sin_coeffs = Vec::with_capacity(keep);
    for k in 1..=keep as u64 {
        let m = method.multiplier(k, n);
        cos_coeffs.push(m * f.cos_coeffs[(k - 1) as usize]);
        sin_coeffs.push(m * f.sin_coeffs[(k - 1) as usize]);
    }
    TrigPolynomial {
        a0: f.a0,
        cos_coeffs,
        sin_coeffs,
    }
}

/// The Zygmund sum of order s at degree parameter n.
pub fn zygmund_sum(f: &TrigPolynomial, n: u64, s: f64) -> TrigPolynomial {
    apply_summation(f, n, SummationMethod::Zygmund { s })
}

/// The Fejér sum at degree parameter n.
pub fn fejer_sum(f: &TrigPolynomial, n: u64) -> TrigPolynomial {
    apply_summation(f, n, SummationMethod::Fejer)
}

/// Convolves a zero-mean polynomial against the class kernel in
/// coefficient space: the k-th coefficient pair is scaled by ψ(k) and
/// rotated by the class phase, so cos(kt + βπ/2) maps to ψ(k)·cos(kt).
pub fn convolve_class(spec: &ClassSpec, phi: &TrigPolynomial) -> Result<TrigPolynomial> {
    if phi.a0 != 0.0 {
        return Err(CoreError::Parameter(format!(
            "convolution source must have zero mean, got a0 = {}",
            phi.a0
        )));
    }
    let (sin_p, cos_p) = spec.phase().sin_cos();
    let mut cos_coeffs = Vec::with_capacity(phi.degree());
    let mut sin_coeffs = Vec::with_capacity(phi.degree());
    for k in 1..=phi.degree() as u64 {
        let a = phi.cos_coeffs[(k - 1) as usize];
        let b = phi.sin_coeffs[(k - 1) as usize];
        let w = spec.psi.eval(k as f64)?;
        cos_coeffs.push(w * (a * cos_p - b * sin_p));
        sin_coeffs.push(w * (a * sin_p + b * cos_p));
    }
    Ok(TrigPolynomial {
        a0: 0.0,
        cos_coeffs,
        sin_coeffs,
    })
}
