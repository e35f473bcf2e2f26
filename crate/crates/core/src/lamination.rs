//! Explicit strand diagrams: the path components in each region, glued along
//! the β-arcs, and the closed curves obtained by following them.

use crate::error::{Error, Result};
use crate::surface::{RegionId, Signature};
use crate::triangle::{
    CoreEncoding, EndCensus, LoopSide, RegionCensus, SCensus, SPrimeCensus, TriangleCoords,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A strand end on one of the two β-arcs bounding a region. Slots count from
/// the top of the arc, starting at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub side: Side,
    pub slot: usize,
}

impl Endpoint {
    pub fn left(slot: usize) -> Self {
        Endpoint {
            side: Side::Left,
            slot,
        }
    }

    pub fn right(slot: usize) -> Self {
        Endpoint {
            side: Side::Right,
            slot,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PieceKind {
    Above,
    Below,
    /// A loop around the region's puncture or crosscap that avoids the core.
    Loop,
    /// A loop through the crosscap, both ends on the same β-arc.
    CoreLoop,
    /// A strand through the crosscap joining the two β-arcs.
    Straight,
}

/// One path component inside one region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Piece {
    pub ends: [Endpoint; 2],
    pub kind: PieceKind,
    /// Position, among all strands through this crosscap, at which the piece
    /// crosses the core curve.
    pub transit: Option<usize>,
}

/// Closed components carried only by a negative core coordinate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtraComponent {
    /// The core curve of crosscap `i` (1-based).
    CoreCurve(usize),
    /// A two-sided curve bounding a Möbius band around crosscap `i`.
    MobiusBoundary(usize),
}

impl ExtraComponent {
    pub fn crosscap(&self) -> usize {
        match *self {
            ExtraComponent::CoreCurve(i) | ExtraComponent::MobiusBoundary(i) => i,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandDiagram {
    tau: TriangleCoords,
    regions: Vec<Vec<Piece>>,
    extras: Vec<ExtraComponent>,
}

impl StrandDiagram {
    /// Assembles a diagram from explicit pieces, one list per region in
    /// [`Signature::regions`] order. Consistency is checked by [`trace`].
    pub fn from_parts(
        tau: TriangleCoords,
        regions: Vec<Vec<Piece>>,
        extras: Vec<ExtraComponent>,
    ) -> Self {
        StrandDiagram {
            tau,
            regions,
            extras,
        }
    }

    pub fn coords(&self) -> &TriangleCoords {
        &self.tau
    }

    pub fn signature(&self) -> Signature {
        self.tau.signature()
    }

    /// Pieces of the region at `position` in [`Signature::regions`] order.
    pub fn pieces(&self, position: usize) -> &[Piece] {
        &self.regions[position]
    }

    pub fn regions(&self) -> impl Iterator<Item = (RegionId, &[Piece])> {
        self.signature()
            .regions()
            .into_iter()
            .zip(self.regions.iter().map(|v| v.as_slice()))
    }

    pub fn extras(&self) -> &[ExtraComponent] {
        &self.extras
    }

    /// Counts the pieces of each kind, for comparison with the census the
    /// diagram was built from.
    pub fn recount(&self) -> RegionCensus {
        let sig = self.signature();
        let n = sig.punctures();
        let count = |pos: usize, kind: PieceKind| {
            self.regions[pos].iter().filter(|p| p.kind == kind).count() as i64
        };
        let side = |pos: usize| {
            self.regions[pos]
                .iter()
                .find(|p| matches!(p.kind, PieceKind::Loop | PieceKind::CoreLoop))
                .map_or(LoopSide::None, |p| match p.ends[0].side {
                    Side::Left => LoopSide::Right,
                    Side::Right => LoopSide::Left,
                })
        };
        let encoding = |crosscap: usize, c_plus: i64| {
            let mut enc = CoreEncoding {
                c_plus,
                ..CoreEncoding::default()
            };
            for e in self.extras.iter().filter(|e| e.crosscap() == crosscap) {
                match e {
                    ExtraComponent::CoreCurve(_) => enc.includes_core = true,
                    ExtraComponent::MobiusBoundary(_) => enc.nonprimitive_two_sided += 1,
                }
            }
            enc
        };
        let s = (1..n)
            .map(|pos| SCensus {
                above: count(pos, PieceKind::Above),
                below: count(pos, PieceKind::Below),
                loops: count(pos, PieceKind::Loop),
                side: side(pos),
            })
            .collect();
        let s_prime = (1..sig.genus())
            .map(|i| {
                let pos = n - 1 + i;
                let core_loops = count(pos, PieceKind::CoreLoop);
                let straight_cores = count(pos, PieceKind::Straight);
                SPrimeCensus {
                    above: count(pos, PieceKind::Above),
                    below: count(pos, PieceKind::Below),
                    noncore_loops: count(pos, PieceKind::Loop),
                    core_loops,
                    straight_cores,
                    side: side(pos),
                    nonprimitive: encoding(i, core_loops + straight_cores),
                }
            })
            .collect();
        let last = self.regions.len() - 1;
        let core_loops = count(last, PieceKind::CoreLoop);
        let ends = EndCensus {
            delta_zero_loops: count(0, PieceKind::Loop),
            core_loops,
            noncore_loops: count(last, PieceKind::Loop),
            excess_core: 0,
            nonprimitive: encoding(sig.genus(), core_loops),
        };
        RegionCensus::assemble(s, s_prime, ends)
    }
}

/// Lays out the canonical strand diagram of a valid `τ`.
pub fn build_diagram(tau: &TriangleCoords) -> Result<StrandDiagram> {
    let report = tau.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let census = tau.census()?;
    let sig = tau.signature();
    let beta = tau.beta();
    let mut regions = Vec::with_capacity(sig.punctures() + sig.genus());

    let b0 = beta[0] as usize;
    regions.push(
        (0..b0 / 2)
            .map(|j| {
                piece(
                    Endpoint::right(j),
                    Endpoint::right(b0 - 1 - j),
                    PieceKind::Loop,
                )
            })
            .collect(),
    );
    for c in &census.s {
        regions.push(s_pieces(c));
    }
    for c in &census.s_prime {
        regions.push(sprime_pieces(c));
    }
    let e = &census.ends;
    let last = *beta.last().unwrap() as usize;
    let lambda = e.noncore_loops as usize;
    let core = e.core_loops as usize;
    let mut end = Vec::with_capacity(last / 2);
    for j in 0..lambda {
        end.push(piece(
            Endpoint::left(j),
            Endpoint::left(last - 1 - j),
            PieceKind::Loop,
        ));
    }
    for p in 0..core {
        end.push(Piece {
            ends: [
                Endpoint::left(lambda + p),
                Endpoint::left(lambda + p + core),
            ],
            kind: PieceKind::CoreLoop,
            transit: Some(p),
        });
    }
    regions.push(end);

    let mut extras = Vec::new();
    for (i, &c) in tau.core().iter().enumerate() {
        let enc = CoreEncoding::decode(c);
        for _ in 0..enc.nonprimitive_two_sided {
            extras.push(ExtraComponent::MobiusBoundary(i + 1));
        }
        if enc.includes_core {
            extras.push(ExtraComponent::CoreCurve(i + 1));
        }
    }
    Ok(StrandDiagram {
        tau: tau.clone(),
        regions,
        extras,
    })
}

fn piece(a: Endpoint, b: Endpoint, kind: PieceKind) -> Piece {
    Piece {
        ends: [a, b],
        kind,
        transit: None,
    }
}

fn s_pieces(c: &SCensus) -> Vec<Piece> {
    let (a, below, l) = (c.above as usize, c.below as usize, c.loops as usize);
    let mut out = Vec::with_capacity(a + below + l);
    for j in 0..a {
        out.push(piece(
            Endpoint::left(j),
            Endpoint::right(j),
            PieceKind::Above,
        ));
    }
    match c.side {
        LoopSide::Right => {
            for j in 0..l {
                out.push(piece(
                    Endpoint::left(a + j),
                    Endpoint::left(a + 2 * l - 1 - j),
                    PieceKind::Loop,
                ));
            }
            for j in 0..below {
                out.push(piece(
                    Endpoint::left(a + 2 * l + j),
                    Endpoint::right(a + j),
                    PieceKind::Below,
                ));
            }
        }
        LoopSide::Left => {
            for j in 0..l {
                out.push(piece(
                    Endpoint::right(a + j),
                    Endpoint::right(a + 2 * l - 1 - j),
                    PieceKind::Loop,
                ));
            }
            for j in 0..below {
                out.push(piece(
                    Endpoint::left(a + j),
                    Endpoint::right(a + 2 * l + j),
                    PieceKind::Below,
                ));
            }
        }
        LoopSide::None => {
            for j in 0..below {
                out.push(piece(
                    Endpoint::left(a + j),
                    Endpoint::right(a + j),
                    PieceKind::Below,
                ));
            }
        }
    }
    out
}

type Toward = fn(usize) -> Endpoint;

/// The side carrying the loops reads, top to bottom: above ends, upper ends
/// of the non-core loops, a window of core-loop and straight spokes, lower
/// ends of the non-core loops, below ends. The crosscap identifies antipodal
/// points, so the `T = λ_c + ψ` strands through it pair window positions
/// `p ↔ p + T` and reverse the order of the straight strands.
fn sprime_pieces(c: &SPrimeCensus) -> Vec<Piece> {
    let a = c.above as usize;
    let below = c.below as usize;
    let lambda = c.noncore_loops as usize;
    let lc = c.core_loops as usize;
    let psi = c.straight_cores as usize;
    let window = 2 * lc + psi;
    let through = lc + psi;
    let w0 = a + lambda;

    // `near` is the side carrying the loops, `far` the other one.
    let (near, far): (Toward, Toward) = match c.side {
        LoopSide::Left => (Endpoint::right, Endpoint::left),
        _ => (Endpoint::left, Endpoint::right),
    };
    let mut out = Vec::with_capacity(a + below + lambda + lc + psi);
    for j in 0..a {
        out.push(piece(
            Endpoint::left(j),
            Endpoint::right(j),
            PieceKind::Above,
        ));
    }
    for j in 0..lambda {
        out.push(piece(
            near(a + j),
            near(a + 2 * lambda + window - 1 - j),
            PieceKind::Loop,
        ));
    }
    for p in 0..lc {
        out.push(Piece {
            ends: [near(w0 + p), near(w0 + p + through)],
            kind: PieceKind::CoreLoop,
            transit: Some(through - 1 - p),
        });
    }
    for q in 0..psi {
        out.push(Piece {
            ends: [near(w0 + lc + q), far(a + psi - 1 - q)],
            kind: PieceKind::Straight,
            transit: Some(psi - 1 - q),
        });
    }
    for j in 0..below {
        out.push(piece(
            near(a + 2 * lambda + window + j),
            far(a + psi + j),
            PieceKind::Below,
        ));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sidedness {
    TwoSided,
    OneSided,
}

impl Sidedness {
    pub fn from_crossings(crossings: u64) -> Self {
        if crossings % 2 == 1 {
            Sidedness::OneSided
        } else {
            Sidedness::TwoSided
        }
    }
}

/// A piece traversed while following a component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PieceRef {
    /// Region position in [`Signature::regions`] order.
    pub region: usize,
    pub index: usize,
    /// Traversed from `ends[0]` to `ends[1]`.
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracedComponent {
    /// Empty for components carried by a negative core coordinate.
    pub pieces: Vec<PieceRef>,
    /// Core crossings per crosscap.
    pub crossings: Vec<u64>,
    pub sidedness: Sidedness,
    pub extra: Option<ExtraComponent>,
}

impl TracedComponent {
    pub fn total_crossings(&self) -> u64 {
        self.crossings.iter().sum()
    }
}

/// Follows every strand of the diagram and returns its closed components.
pub fn trace(diagram: &StrandDiagram) -> Result<Vec<TracedComponent>> {
    let sig = diagram.signature();
    let beta = diagram.tau.beta();
    let nregions = sig.punctures() + sig.genus();
    if diagram.regions.len() != nregions {
        return Err(Error::MalformedDiagram(format!(
            "{} regions, expected {nregions}",
            diagram.regions.len()
        )));
    }
    let region_ids = sig.regions();

    // users[β][slot][0] is the piece using the slot from the region to the
    // left of β, users[β][slot][1] the one from the right.
    type Use = Option<(usize, usize, usize)>;
    let mut users: Vec<Vec<[Use; 2]>> = beta
        .iter()
        .map(|&b| vec![[None, None]; b as usize])
        .collect();
    for (pos, pieces) in diagram.regions.iter().enumerate() {
        let (left, right) = sig.bounding_betas(region_ids[pos]);
        for (idx, p) in pieces.iter().enumerate() {
            if p.ends[0] == p.ends[1] {
                return Err(Error::MalformedDiagram(format!(
                    "{} piece {idx} has both ends at the same slot",
                    region_ids[pos]
                )));
            }
            for (e, end) in p.ends.iter().enumerate() {
                let (arc, from) = match end.side {
                    Side::Left => (left, 1),
                    Side::Right => (right, 0),
                };
                let arc = arc.ok_or_else(|| {
                    Error::MalformedDiagram(format!(
                        "{} piece {idx} ends on a boundary side",
                        region_ids[pos]
                    ))
                })?;
                let slot = users[arc].get_mut(end.slot).ok_or_else(|| {
                    Error::MalformedDiagram(format!(
                        "{} piece {idx} uses slot {} of β_{} which has {} slots",
                        region_ids[pos],
                        end.slot,
                        arc + 1,
                        beta[arc]
                    ))
                })?;
                if slot[from].replace((pos, idx, e)).is_some() {
                    return Err(Error::MalformedDiagram(format!(
                        "slot {} of β_{} is used twice from {}",
                        end.slot,
                        arc + 1,
                        region_ids[pos]
                    )));
                }
            }
        }
    }
    for (arc, slots) in users.iter().enumerate() {
        for (s, u) in slots.iter().enumerate() {
            if u[0].is_none() || u[1].is_none() {
                return Err(Error::MalformedDiagram(format!(
                    "slot {s} of β_{} is not used from both sides",
                    arc + 1
                )));
            }
        }
    }

    let crosscap_of = |pos: usize| match region_ids[pos] {
        RegionId::SPrime(i) => Some(i),
        RegionId::DeltaPrimeK => Some(sig.genus()),
        _ => None,
    };
    let mut visited: Vec<Vec<bool>> = diagram
        .regions
        .iter()
        .map(|r| vec![false; r.len()])
        .collect();
    let mut out = Vec::new();
    for start_pos in 0..nregions {
        for start_idx in 0..diagram.regions[start_pos].len() {
            if visited[start_pos][start_idx] {
                continue;
            }
            let mut crossings = vec![0u64; sig.genus()];
            let mut pieces = Vec::new();
            let (mut pos, mut idx, mut entry) = (start_pos, start_idx, 0usize);
            loop {
                visited[pos][idx] = true;
                pieces.push(PieceRef {
                    region: pos,
                    index: idx,
                    forward: entry == 0,
                });
                let p = &diagram.regions[pos][idx];
                if p.transit.is_some() {
                    let cc = crosscap_of(pos).ok_or_else(|| {
                        Error::MalformedDiagram(format!(
                            "{} has a core transit but no crosscap",
                            region_ids[pos]
                        ))
                    })?;
                    crossings[cc - 1] += 1;
                }
                let exit = p.ends[1 - entry];
                let (arc, from) = match exit.side {
                    Side::Right => (pos, 1),
                    Side::Left => (pos - 1, 0),
                };
                let (np, ni, ne) = users[arc][exit.slot][from].expect("checked above");
                if (np, ni) == (start_pos, start_idx) {
                    break;
                }
                (pos, idx, entry) = (np, ni, ne);
            }
            let total = crossings.iter().sum();
            out.push(TracedComponent {
                pieces,
                crossings,
                sidedness: Sidedness::from_crossings(total),
                extra: None,
            });
        }
    }
    for &e in &diagram.extras {
        let mut crossings = vec![0u64; sig.genus()];
        let sidedness = match e {
            ExtraComponent::CoreCurve(i) => {
                crossings[i - 1] = 1;
                Sidedness::OneSided
            }
            ExtraComponent::MobiusBoundary(_) => Sidedness::TwoSided,
        };
        out.push(TracedComponent {
            pieces: Vec::new(),
            crossings,
            sidedness,
            extra: Some(e),
        });
    }
    Ok(out)
}

/// Number of connected components of the lamination with coordinates `τ`.
pub fn component_count(tau: &TriangleCoords) -> Result<usize> {
    Ok(trace(&build_diagram(tau)?)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau(k: i64, n: i64, a: &[i64], b: &[i64], g: &[i64], c: &[i64]) -> TriangleCoords {
        TriangleCoords::new(
            Signature::new(k, n).unwrap(),
            a.to_vec(),
            b.to_vec(),
            g.to_vec(),
            c.to_vec(),
        )
        .unwrap()
    }

    fn summary(tau: &TriangleCoords) -> Vec<(u64, Sidedness)> {
        let mut v: Vec<_> = trace(&build_diagram(tau).unwrap())
            .unwrap()
            .iter()
            .map(|c| (c.total_crossings(), c.sidedness))
            .collect();
        v.sort();
        v
    }

    #[test]
    fn curve_around_punctures_one_and_two() {
        let t = tau(2, 2, &[1, 1], &[0, 2, 0], &[2], &[0, 0]);
        assert_eq!(summary(&t), vec![(0, Sidedness::TwoSided)]);
    }

    #[test]
    fn curve_around_punctures_and_first_crosscap() {
        let t = tau(2, 2, &[1, 1], &[2, 2, 0], &[2], &[0, 0]);
        assert_eq!(summary(&t), vec![(0, Sidedness::TwoSided)]);
    }

    #[test]
    fn example2_components() {
        let t = tau(2, 2, &[4, 2], &[6, 2, 2], &[4], &[1, 0]);
        let d = build_diagram(&t).unwrap();
        let comps = trace(&d).unwrap();
        let crossings: u64 = comps.iter().map(|c| c.total_crossings()).sum();
        assert_eq!(crossings, 1);
        assert_eq!(
            comps
                .iter()
                .filter(|c| c.sidedness == Sidedness::OneSided)
                .count(),
            1
        );
    }

    #[test]
    fn example1_is_connected_pieces_cover_everything() {
        let t = tau(2, 3, &[4, 2, 2, 6], &[2, 6, 8, 4], &[8], &[1, 1]);
        let d = build_diagram(&t).unwrap();
        let comps = trace(&d).unwrap();
        let used: usize = comps.iter().map(|c| c.pieces.len()).sum();
        let total: usize = (0..5).map(|p| d.pieces(p).len()).sum();
        assert_eq!(used, total);
        let crossings: Vec<u64> = (0..2)
            .map(|i| comps.iter().map(|c| c.crossings[i]).sum())
            .collect();
        assert_eq!(crossings, vec![1, 1]);
    }

    #[test]
    fn core_curve_alone() {
        let t = tau(1, 3, &[0, 0, 0, 0], &[0, 0, 0], &[], &[-1]);
        let comps = trace(&build_diagram(&t).unwrap()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].sidedness, Sidedness::OneSided);
        assert_eq!(comps[0].extra, Some(ExtraComponent::CoreCurve(1)));
    }

    #[test]
    fn mobius_boundaries_and_core() {
        let t = tau(2, 2, &[0, 0], &[0, 0, 0], &[0], &[-5, 0]);
        assert_eq!(
            summary(&t),
            vec![
                (0, Sidedness::TwoSided),
                (0, Sidedness::TwoSided),
                (1, Sidedness::OneSided)
            ]
        );
    }

    #[test]
    fn recount_matches_census() {
        for t in [
            tau(2, 3, &[4, 2, 2, 6], &[2, 6, 8, 4], &[8], &[1, 1]),
            tau(2, 2, &[4, 2], &[6, 2, 2], &[4], &[1, 0]),
            tau(2, 2, &[2, 2], &[4, 4, 4], &[4], &[0, 2]),
        ] {
            let d = build_diagram(&t).unwrap();
            assert_eq!(d.recount(), t.census().unwrap(), "{t}");
        }
    }

    #[test]
    fn invalid_coords_rejected() {
        let t = tau(2, 2, &[1, 1], &[3, 2, 0], &[2], &[0, 0]);
        assert!(matches!(build_diagram(&t), Err(Error::Invalid(_))));
    }

    #[test]
    fn malformed_diagrams_are_reported() {
        let t = tau(2, 2, &[1, 1], &[0, 2, 0], &[2], &[0, 0]);
        let d = build_diagram(&t).unwrap();
        let mut regions: Vec<Vec<Piece>> = (0..4).map(|p| d.pieces(p).to_vec()).collect();
        regions[1].pop();
        let broken = StrandDiagram::from_parts(t.clone(), regions, vec![]);
        assert!(matches!(trace(&broken), Err(Error::MalformedDiagram(_))));
    }

    #[test]
    fn toggling_one_transit_flips_sidedness() {
        let t = tau(2, 2, &[4, 2], &[6, 2, 2], &[4], &[1, 0]);
        let d = build_diagram(&t).unwrap();
        let mut regions: Vec<Vec<Piece>> = (0..4).map(|p| d.pieces(p).to_vec()).collect();
        let straight = regions[2]
            .iter_mut()
            .find(|p| p.kind == PieceKind::Straight)
            .unwrap();
        straight.transit = None;
        let toggled = StrandDiagram::from_parts(t, regions, vec![]);
        let before = trace(&d).unwrap();
        let after = trace(&toggled).unwrap();
        assert_eq!(before.len(), after.len());
        let one = |v: &[TracedComponent]| {
            v.iter()
                .filter(|c| c.sidedness == Sidedness::OneSided)
                .count()
        };
        assert_eq!(one(&before), 1);
        assert_eq!(one(&after), 0);
    }
}
