//! Exhaustive cross-checks at desk scale.
//!
//! Nothing here relies on the closed-form census formulas: configurations are
//! built region by region from slot conservation, and the brute-force tracer
//! finds each region's strands by searching all planar matchings of its
//! boundary points.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::dynnikov::{self, DynnikovCoords};
use crate::error::{Error, Result};
use crate::lamination::{Endpoint, Side, Sidedness, TracedComponent};
use crate::surface::{RegionId, Signature};
use crate::triangle::{
    CoreEncoding, EndCensus, LoopSide, RegionCensus, SCensus, SPrimeCensus, TriangleCoords,
};

pub const DEFAULT_WORK_CEILING: u128 = 10_000_000;

/// Regions with more strand ends than this are not brute-forced.
pub const MAX_LOCAL_SLOTS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub sig: Signature,
    /// Largest absolute value of a Dynnikov coordinate in the box.
    pub box_radius: i64,
    /// Largest β and `|c|` in the configuration enumeration.
    pub max_strands: i64,
    pub work_ceiling: u128,
    /// Skip box tuples with `t_s ≢ ψ_s (mod 2)`, which have no preimage.
    pub parity_lattice_only: bool,
}

impl EnumerationBudget {
    pub fn new(sig: Signature, box_radius: i64, max_strands: i64) -> Self {
        EnumerationBudget {
            sig,
            box_radius,
            max_strands,
            work_ceiling: DEFAULT_WORK_CEILING,
            parity_lattice_only: false,
        }
    }

    pub fn with_work_ceiling(mut self, ceiling: u128) -> Self {
        self.work_ceiling = ceiling;
        self
    }

    pub fn parity_lattice_only(mut self, yes: bool) -> Self {
        self.parity_lattice_only = yes;
        self
    }

    /// Whether `τ` lies within the strand bound.
    pub fn within_strands(&self, tau: &TriangleCoords) -> bool {
        tau.beta().iter().all(|&b| b <= self.max_strands)
            && tau.core().iter().all(|c| c.abs() <= self.max_strands)
    }
}

/// Every nonzero integer tuple in a product of ranges, in lexicographic order.
#[derive(Clone, Debug)]
pub struct DynnikovBox {
    sig: Signature,
    lo: Vec<i64>,
    hi: Vec<i64>,
    cur: Option<Vec<i64>>,
}

impl DynnikovBox {
    pub fn cube(sig: Signature, radius: i64) -> Self {
        let len = sig.dynnikov_len();
        Self::with_ranges(sig, vec![-radius; len], vec![radius; len])
    }

    /// The smallest box containing `encode(τ)` for every `τ` within the strand
    /// bound: `|a|, |b| ≤ B/2` and `|t|, |c| ≤ B`.
    pub fn induced(sig: Signature, max_strands: i64) -> Self {
        let half = max_strands / 2;
        let mut hi = Vec::with_capacity(sig.dynnikov_len());
        hi.extend(std::iter::repeat_n(
            half,
            sig.s_region_count() + sig.b_count(),
        ));
        hi.extend(std::iter::repeat_n(
            max_strands,
            sig.sprime_region_count() + sig.core_count(),
        ));
        let lo = hi.iter().map(|v| -v).collect();
        Self::with_ranges(sig, lo, hi)
    }

    pub fn with_ranges(sig: Signature, lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), sig.dynnikov_len());
        assert_eq!(hi.len(), sig.dynnikov_len());
        let cur = lo.iter().zip(&hi).all(|(l, h)| l <= h).then(|| lo.clone());
        DynnikovBox { sig, lo, hi, cur }
    }

    /// Number of nonzero tuples in the box.
    pub fn tuple_count(&self) -> u128 {
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return 0;
        }
        let total: u128 = self
            .lo
            .iter()
            .zip(&self.hi)
            .map(|(l, h)| (h - l + 1) as u128)
            .product();
        let has_zero = self
            .lo
            .iter()
            .zip(&self.hi)
            .all(|(l, h)| *l <= 0 && 0 <= *h);
        total - has_zero as u128
    }
}

impl Iterator for DynnikovBox {
    type Item = DynnikovCoords;

    fn next(&mut self) -> Option<DynnikovCoords> {
        loop {
            let cur = self.cur.as_mut()?;
            let item = cur.clone();
            let mut i = cur.len();
            loop {
                if i == 0 {
                    self.cur = None;
                    break;
                }
                i -= 1;
                if cur[i] < self.hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.lo[i];
            }
            if item.iter().any(|&v| v != 0) {
                return Some(
                    DynnikovCoords::from_flat(self.sig, &item).expect("box has the right length"),
                );
            }
        }
    }
}

/// Every nonzero tuple with entries in `[−radius, radius]`.
pub fn enumerate_dynnikov_box(sig: Signature, radius: i64) -> DynnikovBox {
    DynnikovBox::cube(sig, radius)
}

/// A census assignment together with the coordinates it determines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub census: RegionCensus,
    pub tau: TriangleCoords,
}

/// All configurations with every β at most `max_strands` and every `|c|` at
/// most `max_strands`, excluding the empty one and those containing a curve
/// parallel to the boundary.
pub fn enumerate_census_configurations(budget: &EnumerationBudget) -> Result<Vec<Configuration>> {
    let max = budget.max_strands.max(0);
    let mut e = Enumerator {
        sig: budget.sig,
        max,
        ceiling: budget.work_ceiling,
        work: 0,
        out: Vec::new(),
        negatives: (1..=max).map(|m| CoreEncoding::decode(-m)).collect(),
        state: State::default(),
    };
    for loops in 0..=max / 2 {
        e.state.delta_zero = loops;
        e.state.beta.push(2 * loops);
        e.s_region(1)?;
        e.state.beta.pop();
    }
    Ok(e.out)
}

#[derive(Default)]
struct State {
    beta: Vec<i64>,
    delta_zero: i64,
    s: Vec<SCensus>,
    s_prime: Vec<SPrimeCensus>,
}

struct Enumerator {
    sig: Signature,
    max: i64,
    ceiling: u128,
    work: u128,
    out: Vec<Configuration>,
    negatives: Vec<CoreEncoding>,
    state: State,
}

impl Enumerator {
    fn tick(&mut self) -> Result<()> {
        self.work += 1;
        if self.work > self.ceiling {
            return Err(Error::BudgetExceeded {
                needed: self.work,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    fn encodings(&self, c_plus: i64) -> Vec<CoreEncoding> {
        let plain = CoreEncoding::decode(c_plus);
        if c_plus == 0 {
            std::iter::once(plain)
                .chain(self.negatives.iter().copied())
                .collect()
        } else {
            vec![plain]
        }
    }

    fn s_region(&mut self, i: usize) -> Result<()> {
        if i == self.sig.punctures() {
            return self.sprime_region(1);
        }
        let left = *self.state.beta.last().unwrap();
        let mut choices = Vec::new();
        for a in 0..=left {
            choices.push((a, left - a, 0, LoopSide::None, left));
        }
        for l in 1..=left / 2 {
            for a in 0..=left - 2 * l {
                choices.push((a, left - 2 * l - a, l, LoopSide::Right, left - 2 * l));
            }
        }
        for l in 1..=(self.max - left) / 2 {
            for a in 0..=left {
                choices.push((a, left - a, l, LoopSide::Left, left + 2 * l));
            }
        }
        for (above, below, loops, side, right) in choices {
            self.tick()?;
            self.state.s.push(SCensus {
                above,
                below,
                loops,
                side,
            });
            self.state.beta.push(right);
            self.s_region(i + 1)?;
            self.state.beta.pop();
            self.state.s.pop();
        }
        Ok(())
    }

    fn sprime_region(&mut self, i: usize) -> Result<()> {
        if i == self.sig.genus() {
            return self.end_region();
        }
        let left = *self.state.beta.last().unwrap();
        // (noncore, core, straight, side, right, above + below)
        let mut shapes = Vec::new();
        for psi in 0..=left {
            shapes.push((0, 0, psi, LoopSide::None, left, left - psi));
        }
        for pair in 1..=left / 2 {
            for lam in 0..=pair {
                let lc = pair - lam;
                let max_psi = if lam > 0 { 0 } else { left - 2 * pair };
                for psi in 0..=max_psi {
                    shapes.push((
                        lam,
                        lc,
                        psi,
                        LoopSide::Right,
                        left - 2 * pair,
                        left - 2 * pair - psi,
                    ));
                }
            }
        }
        for pair in 1..=(self.max - left) / 2 {
            for lam in 0..=pair {
                let lc = pair - lam;
                let max_psi = if lam > 0 { 0 } else { left };
                for psi in 0..=max_psi {
                    shapes.push((lam, lc, psi, LoopSide::Left, left + 2 * pair, left - psi));
                }
            }
        }
        for (lam, lc, psi, side, right, free) in shapes {
            for enc in self.encodings(lc + psi) {
                for above in 0..=free {
                    self.tick()?;
                    self.state.s_prime.push(SPrimeCensus {
                        above,
                        below: free - above,
                        noncore_loops: lam,
                        core_loops: lc,
                        straight_cores: psi,
                        side,
                        nonprimitive: enc,
                    });
                    self.state.beta.push(right);
                    self.sprime_region(i + 1)?;
                    self.state.beta.pop();
                    self.state.s_prime.pop();
                }
            }
        }
        Ok(())
    }

    fn end_region(&mut self) -> Result<()> {
        let half = *self.state.beta.last().unwrap() / 2;
        for lc in 0..=half {
            for enc in self.encodings(lc) {
                self.tick()?;
                let ends = EndCensus {
                    delta_zero_loops: self.state.delta_zero,
                    core_loops: lc,
                    noncore_loops: half - lc,
                    excess_core: 0,
                    nonprimitive: enc,
                };
                self.emit(ends);
            }
        }
        Ok(())
    }

    fn emit(&mut self, ends: EndCensus) {
        let st = &self.state;
        let layered = |above: i64, below: i64| above >= 1 && below >= 1;
        let boundary_parallel = st.s.iter().all(|c| layered(c.above, c.below))
            && st.s_prime.iter().all(|c| layered(c.above, c.below))
            && ends.noncore_loops >= 1;
        if boundary_parallel {
            return;
        }
        let tau = configuration_coords(self.sig, &st.beta, &st.s, &st.s_prime, &ends);
        if tau.is_zero() {
            return;
        }
        let census = RegionCensus::assemble(st.s.clone(), st.s_prime.clone(), ends);
        self.out.push(Configuration { census, tau });
    }
}

/// Intersection numbers read off piece by piece: above pieces and loops cross
/// `α_{2i−1}`, below pieces and loops cross `α_{2i}`, and every piece of `S'_i`
/// except the below pieces crosses `γ_i` twice.
fn configuration_coords(
    sig: Signature,
    beta: &[i64],
    s: &[SCensus],
    s_prime: &[SPrimeCensus],
    ends: &EndCensus,
) -> TriangleCoords {
    let alpha = s
        .iter()
        .flat_map(|c| [c.above + c.loops, c.below + c.loops])
        .collect();
    let gamma = s_prime
        .iter()
        .map(|c| 2 * (c.above + c.noncore_loops + c.core_loops + c.straight_cores))
        .collect();
    let core = s_prime
        .iter()
        .map(|c| c.nonprimitive.encode())
        .chain(std::iter::once(ends.nonprimitive.encode()))
        .collect();
    TriangleCoords::new(sig, alpha, beta.to_vec(), gamma, core)
        .expect("lengths follow the signature")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum LocalKind {
    Above,
    Below,
    Loop,
    CoreLoop,
    Straight,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
struct LocalCounts {
    above: i64,
    below: i64,
    loops_left: i64,
    loops_right: i64,
    core_left: i64,
    core_right: i64,
    straight: i64,
}

#[derive(Clone, Debug)]
struct LocalMatching {
    pieces: Vec<(Endpoint, Endpoint, bool)>,
    counts: LocalCounts,
}

#[derive(Clone, Copy, Debug)]
enum Item {
    Spoke(usize),
    Chord(usize, usize),
}

/// Perfect non-crossing matchings of the points in `from..to`, keyed by that range.
type Matchings = Rc<Vec<Vec<(usize, usize)>>>;
type MatchingCache = HashMap<(usize, usize), Matchings>;

/// Brute-force tracer. Caches the planar matchings of each region shape.
#[derive(Default)]
pub struct OracleTracer {
    cache: HashMap<(usize, usize, usize), Rc<Vec<LocalMatching>>>,
}

/// Components found by [`OracleTracer::trace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleTrace {
    /// Sorted `(core crossings, sidedness)` pairs.
    pub components: Vec<(u64, Sidedness)>,
    /// Planar matchings realizing each region's census, in region order.
    pub local_solutions: Vec<usize>,
}

impl OracleTracer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Realizes `census` on the β slot counts of `tau` by searching all planar
    /// matchings of each region, picks one realization per region at random,
    /// and joins them with a union-find over slots visited in random order.
    pub fn trace<R: Rng>(
        &mut self,
        tau: &TriangleCoords,
        census: &RegionCensus,
        rng: &mut R,
    ) -> Result<OracleTrace> {
        let sig = tau.signature();
        let beta: Vec<usize> = tau.beta().iter().map(|&b| b as usize).collect();
        let mut offsets = Vec::with_capacity(beta.len());
        let mut total = 0;
        for &b in &beta {
            offsets.push(total);
            total += b;
        }
        let mut relabel: Vec<usize> = (0..total).collect();
        relabel.shuffle(rng);

        let mut edges: Vec<(usize, usize, Option<usize>)> = Vec::new();
        let mut local_solutions = Vec::new();
        for (pos, region) in sig.regions().into_iter().enumerate() {
            let (lb, rb) = sig.bounding_betas(region);
            let left = lb.map_or(0, |b| beta[b]);
            let right = rb.map_or(0, |b| beta[b]);
            let (expected, crosscap) = expected_counts(sig, census, pos, region);
            let through = (expected.core_left + expected.core_right + expected.straight) as usize;
            if left + right > MAX_LOCAL_SLOTS {
                return Err(Error::RegionTooLarge {
                    region,
                    slots: left + right,
                    limit: MAX_LOCAL_SLOTS,
                });
            }
            let all = self
                .cache
                .entry((left, right, through))
                .or_insert_with(|| Rc::new(local_matchings(left, right, through)))
                .clone();
            let hits: Vec<&LocalMatching> = all.iter().filter(|m| m.counts == expected).collect();
            local_solutions.push(hits.len());
            let Some(chosen) = hits.choose(rng) else {
                return Err(Error::MalformedDiagram(format!(
                    "no planar matching of {region} realizes its census"
                )));
            };
            let node = |e: &Endpoint| {
                let arc = match e.side {
                    Side::Left => lb,
                    Side::Right => rb,
                }
                .expect("ends lie on bounding arcs");
                relabel[offsets[arc] + e.slot]
            };
            for (a, b, transit) in &chosen.pieces {
                edges.push((node(a), node(b), transit.then_some(crosscap.unwrap_or(0))));
            }
        }
        edges.shuffle(rng);

        let mut parent: Vec<usize> = (0..total).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b, _) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut crossings: HashMap<usize, u64> = HashMap::new();
        for x in 0..total {
            let r = find(&mut parent, x);
            crossings.entry(r).or_insert(0);
        }
        for &(a, _, t) in &edges {
            if t.is_some() {
                let r = find(&mut parent, a);
                *crossings.get_mut(&r).unwrap() += 1;
            }
        }
        let mut components: Vec<(u64, Sidedness)> = crossings
            .values()
            .map(|&c| (c, Sidedness::from_crossings(c)))
            .collect();
        let encodings = census
            .s_prime
            .iter()
            .map(|c| c.nonprimitive)
            .chain(std::iter::once(census.ends.nonprimitive));
        for enc in encodings {
            for _ in 0..enc.nonprimitive_two_sided {
                components.push((0, Sidedness::TwoSided));
            }
            if enc.includes_core {
                components.push((1, Sidedness::OneSided));
            }
        }
        components.sort();
        Ok(OracleTrace {
            components,
            local_solutions,
        })
    }
}

fn expected_counts(
    sig: Signature,
    census: &RegionCensus,
    pos: usize,
    region: RegionId,
) -> (LocalCounts, Option<usize>) {
    let mut c = LocalCounts::default();
    let put_loops = |side: LoopSide, noncore: i64, core: i64, c: &mut LocalCounts| match side {
        LoopSide::Right => {
            c.loops_left = noncore;
            c.core_left = core;
        }
        LoopSide::Left => {
            c.loops_right = noncore;
            c.core_right = core;
        }
        LoopSide::None => {}
    };
    let crosscap = match region {
        RegionId::DeltaZero => {
            c.loops_right = census.ends.delta_zero_loops;
            None
        }
        RegionId::S(i) => {
            let s = &census.s[i - 1];
            c.above = s.above;
            c.below = s.below;
            put_loops(s.side, s.loops, 0, &mut c);
            None
        }
        RegionId::SPrime(i) => {
            let s = &census.s_prime[i - 1];
            c.above = s.above;
            c.below = s.below;
            c.straight = s.straight_cores;
            put_loops(s.side, s.noncore_loops, s.core_loops, &mut c);
            Some(i)
        }
        RegionId::DeltaPrimeK => {
            c.loops_left = census.ends.noncore_loops;
            c.core_left = census.ends.core_loops;
            Some(sig.genus())
        }
    };
    debug_assert_eq!(sig.region_position(region), pos);
    (c, crosscap)
}

/// Every planar way to join `left + right` boundary points of a region, with
/// `2 · through` of them running into the crosscap, up to isotopy fixing the
/// boundary. Points are numbered clockwise from the top-left corner: the
/// right arc top to bottom, then the left arc bottom to top.
fn local_matchings(left: usize, right: usize, through: usize) -> Vec<LocalMatching> {
    let total = left + right;
    if total == 0 {
        return if through == 0 {
            vec![LocalMatching {
                pieces: Vec::new(),
                counts: LocalCounts::default(),
            }]
        } else {
            Vec::new()
        };
    }
    let endpoint = |p: usize| {
        if p < right {
            Endpoint::right(p)
        } else {
            Endpoint::left(left - 1 - (p - right))
        }
    };
    // Gap `g` lies between points `g` and `g + 1`.
    let top = total - 1;
    let bottom = (right + total - 1) % total;

    let mut seen: BTreeSet<Vec<(usize, usize, LocalKind)>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut perfect_cache: MatchingCache = HashMap::new();
    for cut in 0..total {
        let lin: Vec<usize> = (0..total).map(|x| (cut + 1 + x) % total).collect();
        for items in top_level(0, total, 2 * through, &mut perfect_cache) {
            let mut key = Vec::with_capacity(total);
            let mut spokes = Vec::new();
            let mut ok = true;
            for item in &items {
                match *item {
                    Item::Spoke(x) => spokes.push(lin[x]),
                    Item::Chord(i, j) => {
                        let inside = |g: usize| (i..j).any(|x| lin[x] == g);
                        let (p, q) = (lin[i], lin[j]);
                        let same = endpoint(p).side == endpoint(q).side;
                        let kind = match (same, inside(top), inside(bottom)) {
                            (true, true, true) => LocalKind::Loop,
                            (false, true, false) => LocalKind::Above,
                            (false, false, true) => LocalKind::Below,
                            _ => {
                                ok = false;
                                break;
                            }
                        };
                        key.push((p.min(q), p.max(q), kind));
                    }
                }
            }
            if !ok {
                continue;
            }
            for s in 0..through {
                let (p, q) = (spokes[s], spokes[s + through]);
                let kind = if endpoint(p).side == endpoint(q).side {
                    LocalKind::CoreLoop
                } else {
                    LocalKind::Straight
                };
                key.push((p.min(q), p.max(q), kind));
            }
            key.sort();
            if seen.insert(key.clone()) {
                out.push(classify(&key, endpoint));
            }
        }
    }
    out
}

fn classify(
    key: &[(usize, usize, LocalKind)],
    endpoint: impl Fn(usize) -> Endpoint,
) -> LocalMatching {
    let mut counts = LocalCounts::default();
    let mut pieces = Vec::with_capacity(key.len());
    for &(p, q, kind) in key {
        let (a, b) = (endpoint(p), endpoint(q));
        let on_left = a.side == Side::Left;
        match kind {
            LocalKind::Above => counts.above += 1,
            LocalKind::Below => counts.below += 1,
            LocalKind::Loop if on_left => counts.loops_left += 1,
            LocalKind::Loop => counts.loops_right += 1,
            LocalKind::CoreLoop if on_left => counts.core_left += 1,
            LocalKind::CoreLoop => counts.core_right += 1,
            LocalKind::Straight => counts.straight += 1,
        }
        let transit = matches!(kind, LocalKind::CoreLoop | LocalKind::Straight);
        pieces.push((a, b, transit));
    }
    LocalMatching { pieces, counts }
}

/// Sequences of spokes and chords covering `[from, to)`, where the interior of
/// each chord is perfectly matched and exactly `spokes` points are spokes.
fn top_level(from: usize, to: usize, spokes: usize, perfect: &mut MatchingCache) -> Vec<Vec<Item>> {
    if from == to {
        return if spokes == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    if to - from < spokes {
        return Vec::new();
    }
    let mut out = Vec::new();
    if spokes > 0 {
        for mut rest in top_level(from + 1, to, spokes - 1, perfect) {
            rest.insert(0, Item::Spoke(from));
            out.push(rest);
        }
    }
    let mut j = from + 1;
    while j < to {
        let inner = perfect_matchings(from + 1, j, perfect);
        if !inner.is_empty() {
            let rest = top_level(j + 1, to, spokes, perfect);
            for m in inner.iter() {
                for r in &rest {
                    let mut v = Vec::with_capacity(1 + m.len() + r.len());
                    v.push(Item::Chord(from, j));
                    v.extend(m.iter().map(|&(a, b)| Item::Chord(a, b)));
                    v.extend_from_slice(r);
                    out.push(v);
                }
            }
        }
        j += 2;
    }
    out
}

fn perfect_matchings(from: usize, to: usize, cache: &mut MatchingCache) -> Matchings {
    if let Some(v) = cache.get(&(from, to)) {
        return v.clone();
    }
    let mut out = Vec::new();
    if from == to {
        out.push(Vec::new());
    } else if (to - from).is_multiple_of(2) {
        let mut j = from + 1;
        while j < to {
            let inner = perfect_matchings(from + 1, j, cache);
            let rest = perfect_matchings(j + 1, to, cache);
            for m in inner.iter() {
                for r in rest.iter() {
                    let mut v = Vec::with_capacity(1 + m.len() + r.len());
                    v.push((from, j));
                    v.extend_from_slice(m);
                    v.extend_from_slice(r);
                    out.push(v);
                }
            }
            j += 2;
        }
    }
    let out = Rc::new(out);
    cache.insert((from, to), out.clone());
    out
}

/// Sorted `(core crossings, sidedness)` pairs of traced components.
pub fn component_multiset(components: &[TracedComponent]) -> Vec<(u64, Sidedness)> {
    let mut v: Vec<_> = components
        .iter()
        .map(|c| (c.total_crossings(), c.sidedness))
        .collect();
    v.sort();
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name,
            checked: 0,
            skipped: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub sig: Signature,
    pub box_tuples: u64,
    pub configurations: u64,
    pub checks: Vec<CheckResult>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {} box tuples, {} configurations",
            self.sig, self.box_tuples, self.configurations
        )?;
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAIL" };
            write!(
                f,
                "  {:<22} {status:<4} checked {} skipped {} failures {}",
                c.name, c.checked, c.skipped, c.failures
            )?;
            if let Some(first) = &c.first_failure {
                write!(f, "\n    first: {first}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub const CHECK_BOX_ROUNDTRIP: &str = "encode∘decode on box";
pub const CHECK_CENSUS_ROUNDTRIP: &str = "decode∘encode on census";
pub const CHECK_INJECTIVE: &str = "encode injective";
pub const CHECK_DECODED_VALID: &str = "decoded τ valid";
pub const CHECK_EXACTNESS: &str = "exactness";

/// Runs every check with the real decoder.
pub fn check_bijection(budget: &EnumerationBudget) -> Result<OracleReport> {
    check_bijection_with(budget, |rho| dynnikov::decode(rho).map(|(t, _)| t))
}

/// Runs every check with `decoder` standing in for decode, so that a broken
/// decoder can be shown to be caught.
pub fn check_bijection_with<D>(budget: &EnumerationBudget, decoder: D) -> Result<OracleReport>
where
    D: Fn(&DynnikovCoords) -> Result<TriangleCoords>,
{
    let sig = budget.sig;
    let cube = DynnikovBox::cube(sig, budget.box_radius);
    let induced = DynnikovBox::induced(sig, budget.max_strands);
    let needed = cube.tuple_count() + induced.tuple_count();
    if needed > budget.work_ceiling {
        return Err(Error::BudgetExceeded {
            needed,
            ceiling: budget.work_ceiling,
        });
    }
    let configs = enumerate_census_configurations(budget)?;
    let census_set: HashSet<&TriangleCoords> = configs.iter().map(|c| &c.tau).collect();

    let mut box_rt = CheckResult::new(CHECK_BOX_ROUNDTRIP);
    let mut valid = CheckResult::new(CHECK_DECODED_VALID);
    let mut box_tuples = 0u64;
    for rho in cube {
        box_tuples += 1;
        if budget.parity_lattice_only && !rho.in_parity_lattice() {
            box_rt.skipped += 1;
            valid.skipped += 1;
            continue;
        }
        let tau = match decoder(&rho) {
            Ok(t) => t,
            Err(e) => {
                box_rt.record(false, || format!("ρ = {rho}: decode failed: {e}"));
                valid.skipped += 1;
                continue;
            }
        };
        match dynnikov::encode(&tau) {
            Ok(back) => box_rt.record(back == rho, || {
                format!("ρ = {rho} decodes to τ = {tau}, which encodes to {back}")
            }),
            Err(e) => box_rt.record(false, || format!("ρ = {rho} decodes to τ = {tau}: {e}")),
        }
        let report = tau.validate();
        let listed = !budget.within_strands(&tau) || census_set.contains(&tau);
        valid.record(report.is_valid() && listed, || {
            if report.is_valid() {
                format!("τ = {tau} (from ρ = {rho}) is missing from the census enumeration")
            } else {
                format!("τ = {tau} (from ρ = {rho}): {report}")
            }
        });
    }

    let mut census_rt = CheckResult::new(CHECK_CENSUS_ROUNDTRIP);
    let mut injective = CheckResult::new(CHECK_INJECTIVE);
    let mut images: HashMap<DynnikovCoords, &TriangleCoords> = HashMap::new();
    for conf in &configs {
        let tau = &conf.tau;
        let rho = match dynnikov::encode(tau) {
            Ok(r) => r,
            Err(e) => {
                census_rt.record(false, || format!("τ = {tau}: {e}"));
                continue;
            }
        };
        match decoder(&rho) {
            Ok(back) => census_rt.record(&back == tau, || {
                format!("τ = {tau} encodes to {rho}, which decodes to {back}")
            }),
            Err(e) => census_rt.record(false, || format!("τ = {tau} encodes to {rho}: {e}")),
        }
        let previous = images.insert(rho.clone(), tau);
        injective.record(previous.is_none(), || {
            format!("{} and {tau} both encode to {rho}", previous.unwrap())
        });
    }

    let mut exact = CheckResult::new(CHECK_EXACTNESS);
    let mut decoded_set: HashSet<TriangleCoords> = HashSet::new();
    for rho in induced {
        if let Ok(tau) = decoder(&rho) {
            if budget.within_strands(&tau) {
                exact.record(census_set.contains(&tau), || {
                    format!("decode({rho}) = {tau} is missing from the census enumeration")
                });
                decoded_set.insert(tau);
            }
        }
    }
    for conf in &configs {
        exact.record(decoded_set.contains(&conf.tau), || {
            format!(
                "census τ = {} is not decode(ρ) for any ρ in the induced box",
                conf.tau
            )
        });
    }

    Ok(OracleReport {
        sig,
        box_tuples,
        configurations: configs.len() as u64,
        checks: vec![box_rt, census_rt, injective, valid, exact],
    })
}
