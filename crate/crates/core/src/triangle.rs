//! Triangle coordinates: intersection numbers of a lamination with the arc
//! system `α, β, γ` and the signed core counts `c`, together with the
//! per-region path-component census they determine.

use std::fmt;

use thiserror::Error;

use crate::dynnikov;
use crate::error::{Error, Result};
use crate::surface::{RegionId, Signature};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleCoords {
    sig: Signature,
    alpha: Vec<i64>,
    beta: Vec<i64>,
    gamma: Vec<i64>,
    core: Vec<i64>,
}

impl TriangleCoords {
    /// Checks block lengths only; see [`TriangleCoords::validate`] for the
    /// lamination conditions.
    pub fn new(
        sig: Signature,
        alpha: Vec<i64>,
        beta: Vec<i64>,
        gamma: Vec<i64>,
        core: Vec<i64>,
    ) -> Result<Self> {
        check_len("alpha", sig.alpha_count(), &alpha)?;
        check_len("beta", sig.beta_count(), &beta)?;
        check_len("gamma", sig.gamma_count(), &gamma)?;
        check_len("c", sig.core_count(), &core)?;
        Ok(TriangleCoords {
            sig,
            alpha,
            beta,
            gamma,
            core,
        })
    }

    pub fn zero(sig: Signature) -> Self {
        TriangleCoords {
            sig,
            alpha: vec![0; sig.alpha_count()],
            beta: vec![0; sig.beta_count()],
            gamma: vec![0; sig.gamma_count()],
            core: vec![0; sig.core_count()],
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[i64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[i64] {
        &self.gamma
    }

    pub fn core(&self) -> &[i64] {
        &self.core
    }

    pub fn is_zero(&self) -> bool {
        self.alpha
            .iter()
            .chain(&self.beta)
            .chain(&self.gamma)
            .chain(&self.core)
            .all(|&v| v == 0)
    }

    /// `b_i = (β_i − β_{i+1}) / 2`. Negative entries count left loops, positive
    /// entries right loops. Assumes every β is even.
    pub fn b(&self) -> Vec<i64> {
        self.beta.windows(2).map(|w| (w[0] - w[1]) / 2).collect()
    }

    /// Census of `S_i`, `1 ≤ i ≤ n − 1`.
    pub fn census_s(&self, i: usize) -> Result<SCensus, Infeasibility> {
        assert!(
            (1..=self.sig.s_region_count()).contains(&i),
            "S region index {i} out of range"
        );
        let region = RegionId::S(i);
        let b = (self.beta[i - 1] - self.beta[i]) / 2;
        let loops = b.abs();
        let above = self.alpha[2 * i - 2] - loops;
        let below = self.alpha[2 * i - 1] - loops;
        nonneg(region, "above components a_S", above)?;
        nonneg(region, "below components b_S", below)?;
        Ok(SCensus {
            above,
            below,
            loops,
            side: LoopSide::of(b),
        })
    }

    /// Census of `S'_i`, `1 ≤ i ≤ k − 1`.
    pub fn census_sprime(&self, i: usize) -> Result<SPrimeCensus, Infeasibility> {
        assert!(
            (1..=self.sig.sprime_region_count()).contains(&i),
            "S' region index {i} out of range"
        );
        let region = RegionId::SPrime(i);
        let n = self.sig.punctures();
        let (left, right) = (self.beta[n + i - 2], self.beta[n + i - 1]);
        let b = (left - right) / 2;
        let enc = CoreEncoding::decode(self.core[i - 1]);
        let c_plus = enc.c_plus;
        let noncore_loops = (b.abs() - c_plus).max(0);
        let core_loops = b.abs().min(c_plus);
        let straight_cores = (c_plus - b.abs()).max(0);
        let gamma = self.gamma[i - 1];
        let above = gamma / 2 - b.abs() - straight_cores;
        let below = left.max(right) - b.abs() - gamma / 2;
        nonneg(region, "above components a_S'", above)?;
        nonneg(region, "below components b_S'", below)?;
        Ok(SPrimeCensus {
            above,
            below,
            noncore_loops,
            core_loops,
            straight_cores,
            side: LoopSide::of(b),
            nonprimitive: enc,
        })
    }

    /// Loops in the two end regions. Never fails; an excess of core crossings
    /// over `β_{n+k−1}/2` is reported in [`EndCensus::excess_core`].
    pub fn census_ends(&self) -> EndCensus {
        let last_beta = *self.beta.last().expect("at least one β-arc");
        let enc = CoreEncoding::decode(*self.core.last().expect("k ≥ 1"));
        let half = last_beta / 2;
        EndCensus {
            delta_zero_loops: self.beta[0] / 2,
            core_loops: enc.c_plus.min(half),
            noncore_loops: (half - enc.c_plus).max(0),
            excess_core: (enc.c_plus - half).max(0),
            nonprimitive: enc,
        }
    }

    /// Full census of every region.
    pub fn census(&self) -> Result<RegionCensus, Infeasibility> {
        let s = (1..=self.sig.s_region_count())
            .map(|i| self.census_s(i))
            .collect::<Result<Vec<_>, _>>()?;
        let s_prime = (1..=self.sig.sprime_region_count())
            .map(|i| self.census_sprime(i))
            .collect::<Result<Vec<_>, _>>()?;
        let ends = self.census_ends();
        Ok(RegionCensus::assemble(s, s_prime, ends))
    }

    /// Every violated lamination condition; the coordinates belong to a
    /// lamination iff the report is empty.
    pub fn validate(&self) -> ValidityReport {
        let mut v = Vec::new();
        if self.is_zero() {
            v.push(Violation::AllZero);
            return ValidityReport { violations: v };
        }
        let blocks = [
            (ArcKind::Alpha, &self.alpha),
            (ArcKind::Beta, &self.beta),
            (ArcKind::Gamma, &self.gamma),
        ];
        for (kind, values) in blocks {
            for (idx, &value) in values.iter().enumerate() {
                if value < 0 {
                    v.push(Violation::Negative {
                        arc: Arc {
                            kind,
                            index: idx + 1,
                        },
                        value,
                    });
                }
            }
        }
        for (idx, &value) in self.beta.iter().enumerate() {
            if value % 2 != 0 {
                v.push(Violation::OddBeta {
                    index: idx + 1,
                    value,
                });
            }
        }
        for (idx, &value) in self.gamma.iter().enumerate() {
            if value % 2 != 0 {
                v.push(Violation::OddGamma {
                    index: idx + 1,
                    value,
                });
            }
        }
        for i in 1..=self.sig.s_region_count() {
            let sum = self.alpha[2 * i - 2] + self.alpha[2 * i - 1];
            if sum % 2 != 0 {
                v.push(Violation::OddAlphaPair { region: i, sum });
            }
        }
        if !v.is_empty() {
            return ValidityReport { violations: v };
        }

        for i in 1..=self.sig.s_region_count() {
            let sum = self.alpha[2 * i - 2] + self.alpha[2 * i - 1];
            let max = self.beta[i - 1].max(self.beta[i]);
            if sum != max {
                v.push(Violation::SEquality {
                    region: i,
                    alpha_sum: sum,
                    beta_max: max,
                });
            }
            if let Err(e) = self.census_s(i) {
                v.push(Violation::Infeasible(e));
            }
        }
        for i in 1..=self.sig.sprime_region_count() {
            if let Err(e) = self.census_sprime(i) {
                v.push(Violation::Infeasible(e));
            }
        }
        let ends = self.census_ends();
        if ends.excess_core > 0 {
            v.push(Violation::EndRegion {
                core: ends.nonprimitive.c_plus,
                beta: *self.beta.last().unwrap(),
            });
        }
        if !v.is_empty() {
            return ValidityReport { violations: v };
        }

        let rho = dynnikov::encode_raw(self);
        match dynnikov::decode(&rho) {
            Ok((back, _)) if &back == self => {}
            Ok((back, _)) => v.push(Violation::NotFixpoint {
                decoded: Some(Box::new(back)),
            }),
            Err(_) => v.push(Violation::NotFixpoint { decoded: None }),
        }
        ValidityReport { violations: v }
    }
}

impl fmt::Display for TriangleCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &[&self.alpha, &self.beta, &self.gamma, &self.core])
    }
}

pub(crate) fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[&[i64]]) -> fmt::Result {
    write!(f, "(")?;
    for (bi, block) in blocks.iter().enumerate() {
        if bi > 0 {
            write!(f, ";")?;
            if !block.is_empty() {
                write!(f, " ")?;
            }
        }
        for (i, v) in block.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
    }
    write!(f, ")")
}

pub(crate) fn check_len(field: &'static str, expected: usize, v: &[i64]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::Length {
            field,
            expected,
            found: v.len(),
        })
    }
}

fn nonneg(region: RegionId, what: &'static str, value: i64) -> Result<(), Infeasibility> {
    if value < 0 {
        Err(Infeasibility {
            region,
            what,
            value,
        })
    } else {
        Ok(())
    }
}

/// Decoded content of a signed core coordinate `c_i`.
///
/// `c = −1` is a lone core curve, `c = −2m` is `m` two-sided curves bounding
/// Möbius bands around the crosscap, `c = −2m − 1` is both, and `c ≥ 0` counts
/// strands crossing the core.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoreEncoding {
    pub nonprimitive_two_sided: i64,
    pub includes_core: bool,
    pub c_plus: i64,
}

impl CoreEncoding {
    pub fn decode(c: i64) -> Self {
        if c >= 0 {
            CoreEncoding {
                nonprimitive_two_sided: 0,
                includes_core: false,
                c_plus: c,
            }
        } else {
            CoreEncoding {
                nonprimitive_two_sided: -c / 2,
                includes_core: -c % 2 == 1,
                c_plus: 0,
            }
        }
    }

    pub fn encode(&self) -> i64 {
        if self.nonprimitive_two_sided == 0 && !self.includes_core {
            self.c_plus
        } else {
            -(2 * self.nonprimitive_two_sided + self.includes_core as i64)
        }
    }

    /// Closed components carried by the encoding alone.
    pub fn closed_components(&self) -> i64 {
        self.nonprimitive_two_sided + self.includes_core as i64
    }
}

/// Which β-arc the loop components of a region have their end points on.
/// `Left` loops end on the right-hand arc (`b < 0`), `Right` loops on the
/// left-hand arc (`b > 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LoopSide {
    None,
    Left,
    Right,
}

impl LoopSide {
    pub fn of(b: i64) -> Self {
        match b.signum() {
            -1 => LoopSide::Left,
            1 => LoopSide::Right,
            _ => LoopSide::None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SCensus {
    pub above: i64,
    pub below: i64,
    pub loops: i64,
    pub side: LoopSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SPrimeCensus {
    pub above: i64,
    pub below: i64,
    /// `λ_i`
    pub noncore_loops: i64,
    /// `λ_{c_i}`
    pub core_loops: i64,
    /// `ψ_i`
    pub straight_cores: i64,
    pub side: LoopSide,
    pub nonprimitive: CoreEncoding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EndCensus {
    /// Left loops around the first puncture, `β_1 / 2`.
    pub delta_zero_loops: i64,
    /// Core loops through the last crosscap.
    pub core_loops: i64,
    /// `λ_k`
    pub noncore_loops: i64,
    /// `max(c_k⁺ − β_{n+k−1}/2, 0)`; zero for every lamination.
    pub excess_core: i64,
    pub nonprimitive: CoreEncoding,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegionCensus {
    pub s: Vec<SCensus>,
    pub s_prime: Vec<SPrimeCensus>,
    pub ends: EndCensus,
    /// Strand layers that run through every region and turn around through
    /// the last crosscap instead of a non-core loop in `Δ'_k`.
    pub r_components: i64,
}

impl RegionCensus {
    /// With no non-core loop in `Δ'_k`, the outermost above/below layers that
    /// span every region turn around through the last crosscap.
    pub(crate) fn assemble(s: Vec<SCensus>, s_prime: Vec<SPrimeCensus>, ends: EndCensus) -> Self {
        let layers = s
            .iter()
            .map(|c| c.above.min(c.below))
            .chain(s_prime.iter().map(|c| c.above.min(c.below)))
            .min()
            .unwrap_or(0);
        let r_components = if ends.noncore_loops == 0 && ends.core_loops > 0 {
            layers
        } else {
            0
        };
        RegionCensus {
            s,
            s_prime,
            ends,
            r_components,
        }
    }
}

/// A census count that came out negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Error)]
#[error("{region}: {what} would be {value}")]
pub struct Infeasibility {
    pub region: RegionId,
    pub what: &'static str,
    pub value: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Alpha,
    Beta,
    Gamma,
}

/// An arc of the system, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    pub kind: ArcKind,
    pub index: usize,
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            ArcKind::Alpha => "α",
            ArcKind::Beta => "β",
            ArcKind::Gamma => "γ",
        };
        write!(f, "{name}_{}", self.index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    AllZero,
    Negative {
        arc: Arc,
        value: i64,
    },
    /// P1: every β is even.
    OddBeta {
        index: usize,
        value: i64,
    },
    OddGamma {
        index: usize,
        value: i64,
    },
    /// P2: `α_{2i−1} + α_{2i}` is even.
    OddAlphaPair {
        region: usize,
        sum: i64,
    },
    SEquality {
        region: usize,
        alpha_sum: i64,
        beta_max: i64,
    },
    Infeasible(Infeasibility),
    EndRegion {
        core: i64,
        beta: i64,
    },
    /// The coordinates are locally consistent but contain a curve parallel to
    /// the boundary, which the round trip through Dynnikov coordinates strips.
    NotFixpoint {
        decoded: Option<Box<TriangleCoords>>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::AllZero => write!(f, "all coordinates are zero"),
            Violation::Negative { arc, value } => write!(f, "{arc} = {value} is negative"),
            Violation::OddBeta { index, value } => {
                write!(f, "P1: β_{index} = {value} is odd")
            }
            Violation::OddGamma { index, value } => write!(f, "γ_{index} = {value} is odd"),
            Violation::OddAlphaPair { region, sum } => write!(
                f,
                "P2: α_{} + α_{} = {sum} is odd",
                2 * region - 1,
                2 * region
            ),
            Violation::SEquality {
                region,
                alpha_sum,
                beta_max,
            } => write!(
                f,
                "S_{region}: α_{} + α_{} = {alpha_sum} but max(β_{region}, β_{}) = {beta_max}",
                2 * region - 1,
                2 * region,
                region + 1
            ),
            Violation::Infeasible(e) => write!(f, "{e}"),
            Violation::EndRegion { core, beta } => {
                write!(f, "Δ'_k: 2c_k⁺ = {} exceeds β_{{n+k−1}} = {beta}", 2 * core)
            }
            Violation::NotFixpoint { decoded: Some(t) } => write!(
                f,
                "fixpoint: decode(encode(τ)) = {t}; τ contains a boundary-parallel curve"
            ),
            Violation::NotFixpoint { decoded: None } => write!(
                f,
                "fixpoint: τ encodes to the zero tuple; τ consists of boundary-parallel curves"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
