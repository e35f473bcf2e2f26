//! Surface signature `N_{k,n}` and the region decomposition cut out by the
//! β-arcs.
//!
//! Features sit on a horizontal axis: punctures `1..=n`, then crosscaps
//! `1..=k`. β-arc `i` separates feature `i` from feature `i + 1`, so the
//! regions read left to right as `Δ_0, S_1, …, S_{n-1}, S'_1, …, S'_{k-1}, Δ'_k`.

use std::fmt;

use crate::error::{Error, Result};

/// The pair `(k, n)`: `k` crosscaps, `n` punctures, one boundary component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    k: usize,
    n: usize,
}

impl Signature {
    /// Validates `k ≥ 1`, `n ≥ 1` and `n + k ≥ 3`.
    pub fn new(k: i64, n: i64) -> Result<Self> {
        let reason = if k < 1 {
            Some("genus k must be at least 1")
        } else if n < 1 {
            Some("puncture count n must be at least 1")
        } else if n + k < 3 {
            Some("n + k must be at least 3 (N_{1,1} has no coordinate system)")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::Signature { k, n, reason }),
            None => Ok(Signature {
                k: k as usize,
                n: n as usize,
            }),
        }
    }

    pub fn genus(&self) -> usize {
        self.k
    }

    pub fn punctures(&self) -> usize {
        self.n
    }

    pub fn alpha_count(&self) -> usize {
        2 * self.n - 2
    }

    pub fn beta_count(&self) -> usize {
        self.n + self.k - 1
    }

    pub fn gamma_count(&self) -> usize {
        self.k - 1
    }

    pub fn core_count(&self) -> usize {
        self.k
    }

    /// Length of the `b` block of Dynnikov coordinates, `n + k - 2`.
    pub fn b_count(&self) -> usize {
        self.n + self.k - 2
    }

    pub fn s_region_count(&self) -> usize {
        self.n - 1
    }

    pub fn sprime_region_count(&self) -> usize {
        self.k - 1
    }

    /// Number of entries of a Dynnikov tuple, `2(n + k - 2) + k`.
    pub fn dynnikov_len(&self) -> usize {
        (self.n - 1) + self.b_count() + (self.k - 1) + self.k
    }

    /// Regions in left-to-right order; always `n + k` of them.
    pub fn regions(&self) -> Vec<RegionId> {
        let mut out = Vec::with_capacity(self.n + self.k);
        out.push(RegionId::DeltaZero);
        out.extend((1..self.n).map(RegionId::S));
        out.extend((1..self.k).map(RegionId::SPrime));
        out.push(RegionId::DeltaPrimeK);
        out
    }

    /// 0-based indices of the β-arcs on the left and right of `region`.
    pub fn bounding_betas(&self, region: RegionId) -> (Option<usize>, Option<usize>) {
        match region {
            RegionId::DeltaZero => (None, Some(0)),
            RegionId::S(i) => (Some(i - 1), Some(i)),
            RegionId::SPrime(i) => (Some(self.n + i - 2), Some(self.n + i - 1)),
            RegionId::DeltaPrimeK => (Some(self.n + self.k - 2), None),
        }
    }

    /// Position of `region` in [`Signature::regions`].
    pub fn region_position(&self, region: RegionId) -> usize {
        match region {
            RegionId::DeltaZero => 0,
            RegionId::S(i) => i,
            RegionId::SPrime(i) => self.n - 1 + i,
            RegionId::DeltaPrimeK => self.n + self.k - 1,
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N_{{{},{}}}", self.k, self.n)
    }
}

/// A region of the decomposition. Indices are 1-based, as in `S_i` and `S'_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegionId {
    /// Once-punctured disk around puncture 1, bounded by β_1.
    DeltaZero,
    /// Region around puncture `i + 1`, between β_i and β_{i+1}.
    S(usize),
    /// Region around crosscap `i`, between β_{n+i-1} and β_{n+i}.
    SPrime(usize),
    /// Region around the last crosscap, bounded by β_{n+k-1}.
    DeltaPrimeK,
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionId::DeltaZero => write!(f, "Δ_0"),
            RegionId::S(i) => write!(f, "S_{i}"),
            RegionId::SPrime(i) => write!(f, "S'_{i}"),
            RegionId::DeltaPrimeK => write!(f, "Δ'_k"),
        }
    }
}
