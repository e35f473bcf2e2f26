//! Generalized Dynnikov coordinates `ρ = (a; b; t; c)` and the maps between
//! them and triangle coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::surface::Signature;
use crate::triangle::{check_len, write_blocks, CoreEncoding, TriangleCoords};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynnikovCoords {
    sig: Signature,
    a: Vec<i64>,
    b: Vec<i64>,
    t: Vec<i64>,
    core: Vec<i64>,
}

impl DynnikovCoords {
    pub fn new(
        sig: Signature,
        a: Vec<i64>,
        b: Vec<i64>,
        t: Vec<i64>,
        core: Vec<i64>,
    ) -> Result<Self> {
        check_len("a", sig.s_region_count(), &a)?;
        check_len("b", sig.b_count(), &b)?;
        check_len("t", sig.sprime_region_count(), &t)?;
        check_len("c", sig.core_count(), &core)?;
        Ok(DynnikovCoords { sig, a, b, t, core })
    }

    /// Splits a flat vector of length `2n + 3k − 4` in `(a, b, t, c)` order.
    pub fn from_flat(sig: Signature, flat: &[i64]) -> Result<Self> {
        check_len("ρ", sig.dynnikov_len(), flat)?;
        let (a, rest) = flat.split_at(sig.s_region_count());
        let (b, rest) = rest.split_at(sig.b_count());
        let (t, c) = rest.split_at(sig.sprime_region_count());
        Self::new(sig, a.to_vec(), b.to_vec(), t.to_vec(), c.to_vec())
    }

    pub fn flat(&self) -> Vec<i64> {
        [&self.a[..], &self.b, &self.t, &self.core].concat()
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn t(&self) -> &[i64] {
        &self.t
    }

    pub fn core(&self) -> &[i64] {
        &self.core
    }

    pub fn is_zero(&self) -> bool {
        self.a
            .iter()
            .chain(&self.b)
            .chain(&self.t)
            .chain(&self.core)
            .all(|&v| v == 0)
    }

    /// `ψ_s = max(c_s⁺ − |b_{n+s−1}|, 0)`, `s` 1-based.
    pub fn psi(&self, s: usize) -> i64 {
        let n = self.sig.punctures();
        let c_plus = CoreEncoding::decode(self.core[s - 1]).c_plus;
        (c_plus - self.b[n + s - 2].abs()).max(0)
    }

    /// Whether every `t_s ≡ ψ_s (mod 2)`; exactly the tuples with a preimage.
    pub fn in_parity_lattice(&self) -> bool {
        (1..=self.sig.sprime_region_count()).all(|s| (self.t[s - 1] - self.psi(s)) % 2 == 0)
    }
}

impl fmt::Display for DynnikovCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &[&self.a, &self.b, &self.t, &self.core])
    }
}

/// Values computed on the way from `ρ` back to `τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseIntermediates {
    pub psi: Vec<i64>,
    /// Absent when `n = 1`.
    pub x: Option<i64>,
    /// Absent when `k = 1`.
    pub y: Option<i64>,
    pub beta_star: Vec<i64>,
    pub r: i64,
    pub a_sprime: Vec<i64>,
    pub b_sprime: Vec<i64>,
}

/// Validates `τ`, then encodes it.
pub fn encode(tau: &TriangleCoords) -> Result<DynnikovCoords> {
    let report = tau.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    Ok(encode_raw(tau))
}

/// The encoding formulas without validation. Only meaningful when the
/// parity conditions hold.
pub fn encode_raw(tau: &TriangleCoords) -> DynnikovCoords {
    let sig = tau.signature();
    let n = sig.punctures();
    let (alpha, beta, gamma) = (tau.alpha(), tau.beta(), tau.gamma());
    let a = (0..sig.s_region_count())
        .map(|i| (alpha[2 * i + 1] - alpha[2 * i]) / 2)
        .collect();
    let b = tau.b();
    let t = (0..sig.sprime_region_count())
        .map(|s| {
            let (left, right) = (beta[n + s - 1], beta[n + s]);
            let bb = ((left - right) / 2).abs();
            let c_plus = CoreEncoding::decode(tau.core()[s]).c_plus;
            let psi = (c_plus - bb).max(0);
            let above = gamma[s] / 2 - bb - psi;
            let below = left.max(right) - bb - gamma[s] / 2;
            above - below
        })
        .collect();
    DynnikovCoords {
        sig,
        a,
        b,
        t,
        core: tau.core().to_vec(),
    }
}

/// `(X, Y)`: the smallest common `β*` offset that keeps every S and S'
/// region census non-negative.
pub fn compute_xy(rho: &DynnikovCoords) -> (Option<i64>, Option<i64>) {
    let sig = rho.sig;
    let n = sig.punctures();
    let prefix = prefix_sums(&rho.b);
    let x = (1..n)
        .map(|r| 2 * (rho.a[r - 1].abs() + rho.b[r - 1].max(0) + prefix[r - 1]))
        .max();
    let y = (1..sig.genus())
        .map(|s| {
            let bi = n + s - 1;
            rho.t[s - 1].abs() + 2 * rho.b[bi - 1].max(0) + rho.psi(s) + 2 * prefix[bi - 1]
        })
        .max();
    (x, y)
}

/// Components that exist only because `β*` is too small to carry the core
/// crossings of the last crosscap: `max(0, 2c_k − β*_{n+k−1}) / 2`.
///
/// Panics if `beta_star_last` is odd.
pub fn r_count(beta_star_last: i64, c_k: i64) -> i64 {
    assert!(beta_star_last % 2 == 0, "β*_last = {beta_star_last} is odd");
    (2 * c_k - beta_star_last).max(0) / 2
}

/// Inverts [`encode`]. Tuples with `t_s ≢ ψ_s (mod 2)` have no preimage and
/// are rejected with [`Error::OutsideImage`].
pub fn decode(rho: &DynnikovCoords) -> Result<(TriangleCoords, InverseIntermediates)> {
    if rho.is_zero() {
        return Err(Error::ZeroTuple);
    }
    let sig = rho.sig;
    let n = sig.punctures();
    let psi: Vec<i64> = (1..sig.genus()).map(|s| rho.psi(s)).collect();
    for (s, (&t, &p)) in rho.t.iter().zip(&psi).enumerate() {
        if (t - p) % 2 != 0 {
            return Err(Error::OutsideImage {
                index: s + 1,
                t,
                psi: p,
            });
        }
    }
    let (x, y) = compute_xy(rho);
    let top = x.into_iter().chain(y).max().unwrap_or(0);
    let prefix = prefix_sums(&rho.b);
    let beta_star: Vec<i64> = prefix.iter().map(|p| top - 2 * p).collect();
    let last = *beta_star.last().unwrap();
    let c_k = CoreEncoding::decode(*rho.core.last().unwrap()).c_plus;
    let r = r_count(last, c_k);
    let beta: Vec<i64> = beta_star.iter().map(|v| v + 2 * r).collect();

    let mut alpha = Vec::with_capacity(sig.alpha_count());
    for i in 1..=sig.alpha_count() {
        let j = i.div_ceil(2);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let base = if rho.b[j - 1] >= 0 {
            beta[j - 1]
        } else {
            beta[j]
        };
        alpha.push(sign * rho.a[j - 1] + base / 2);
    }

    let mut a_sprime = Vec::with_capacity(psi.len());
    let mut b_sprime = Vec::with_capacity(psi.len());
    let mut gamma = Vec::with_capacity(psi.len());
    for s in 1..sig.genus() {
        let bb = rho.b[n + s - 2].abs();
        let max_beta = beta[n + s - 2].max(beta[n + s - 1]);
        let twice = rho.t[s - 1] - psi[s - 1] + max_beta - 2 * bb;
        let above = twice / 2;
        a_sprime.push(above);
        b_sprime.push(above - rho.t[s - 1]);
        gamma.push(2 * (above + bb + psi[s - 1]));
    }

    let tau = TriangleCoords::new(sig, alpha, beta, gamma, rho.core.clone())?;
    Ok((
        tau,
        InverseIntermediates {
            psi,
            x,
            y,
            beta_star,
            r,
            a_sprime,
            b_sprime,
        },
    ))
}

/// `prefix[i] = Σ_{j<i} b_j` for `i = 0..=len(b)`.
fn prefix_sums(b: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(b.len() + 1);
    let mut acc = 0;
    out.push(0);
    for v in b {
        acc += v;
        out.push(acc);
    }
    out
}
