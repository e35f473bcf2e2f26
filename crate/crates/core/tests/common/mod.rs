//! Helpers shared by the integration tests: fixtures and an SVG reader that
//! recovers intersection counts from the emitted geometry.

#![allow(dead_code)]

use std::collections::BTreeMap;

use lamcoord::{Signature, TriangleCoords};
use regex::Regex;

pub fn sig(k: i64, n: i64) -> Signature {
    Signature::new(k, n).unwrap()
}

pub fn tau(k: i64, n: i64, a: &[i64], b: &[i64], g: &[i64], c: &[i64]) -> TriangleCoords {
    TriangleCoords::new(sig(k, n), a.to_vec(), b.to_vec(), g.to_vec(), c.to_vec()).unwrap()
}

pub fn example1() -> TriangleCoords {
    tau(2, 3, &[4, 2, 2, 6], &[2, 6, 8, 4], &[8], &[1, 1])
}

pub fn example2() -> TriangleCoords {
    tau(2, 2, &[4, 2], &[6, 2, 2], &[4], &[1, 0])
}

pub type Pt = (f64, f64);

#[derive(Debug)]
pub struct Svg {
    pub strands: Vec<Vec<Pt>>,
    pub arcs: BTreeMap<String, Vec<Pt>>,
    pub labels: BTreeMap<String, i64>,
    pub crosscaps: Vec<(Pt, f64)>,
    pub punctures: usize,
}

fn points(d: &str) -> (Vec<Pt>, bool) {
    let mut pts = Vec::new();
    let mut closed = false;
    let mut nums = Vec::new();
    for tok in d.split_whitespace() {
        match tok {
            "Z" => closed = true,
            t => {
                let t = t.trim_start_matches(['M', 'L']);
                nums.push(t.parse::<f64>().unwrap());
            }
        }
    }
    for pair in nums.chunks(2) {
        pts.push((pair[0], pair[1]));
    }
    (pts, closed)
}

pub fn parse(svg: &str) -> Svg {
    let path = Regex::new(r#"<path class="([^"]+)"([^>]*?) d="([^"]+)"/>"#).unwrap();
    let arc_attr = Regex::new(r#"data-arc="([^"]+)""#).unwrap();
    let label =
        Regex::new(r#"<text class="label" data-arc="([^"]+)"[^>]*>(-?\d+)</text>"#).unwrap();
    let circle = Regex::new(
        r#"<circle class="(crosscap|puncture)" cx="([^"]+)" cy="([^"]+)" r="([^"]+)"/>"#,
    )
    .unwrap();
    let mut out = Svg {
        strands: Vec::new(),
        arcs: BTreeMap::new(),
        labels: BTreeMap::new(),
        crosscaps: Vec::new(),
        punctures: 0,
    };
    for cap in path.captures_iter(svg) {
        let class = &cap[1];
        let (mut pts, closed) = points(&cap[3]);
        if class.split(' ').any(|c| c == "strand") {
            assert!(closed, "strand paths are closed");
            pts.push(pts[0]);
            out.strands.push(pts);
        } else if class == "arc" {
            let name = arc_attr.captures(&cap[2]).unwrap()[1].to_string();
            out.arcs.insert(name, pts);
        }
    }
    for cap in label.captures_iter(svg) {
        out.labels
            .insert(cap[1].to_string(), cap[2].parse().unwrap());
    }
    for cap in circle.captures_iter(svg) {
        if &cap[1] == "crosscap" {
            let c = (cap[2].parse().unwrap(), cap[3].parse().unwrap());
            out.crosscaps.push((c, cap[4].parse().unwrap()));
        } else {
            out.punctures += 1;
        }
    }
    out
}

fn cross(o: Pt, a: Pt, b: Pt) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Intersection point of two closed segments, if they meet in one point.
pub fn intersection(p1: Pt, p2: Pt, q1: Pt, q2: Pt) -> Option<Pt> {
    let r = (p2.0 - p1.0, p2.1 - p1.1);
    let s = (q2.0 - q1.0, q2.1 - q1.1);
    let denom = r.0 * s.1 - r.1 * s.0;
    if denom.abs() < 1e-12 {
        return None;
    }
    let qp = (q1.0 - p1.0, q1.1 - p1.1);
    let t = (qp.0 * s.1 - qp.1 * s.0) / denom;
    let u = (qp.0 * r.1 - qp.1 * r.0) / denom;
    let eps = 1e-9;
    ((-eps..=1.0 + eps).contains(&t) && (-eps..=1.0 + eps).contains(&u))
        .then_some((p1.0 + t * r.0, p1.1 + t * r.1))
}

/// Distinct points where the strands meet a polyline.
pub fn crossings_with(strands: &[Vec<Pt>], arc: &[Pt]) -> usize {
    let mut found: Vec<Pt> = Vec::new();
    for s in strands {
        for w in s.windows(2) {
            for a in arc.windows(2) {
                if let Some(p) = intersection(w[0], w[1], a[0], a[1]) {
                    if !found
                        .iter()
                        .any(|q| (q.0 - p.0).abs() < 1e-3 && (q.1 - p.1).abs() < 1e-3)
                    {
                        found.push(p);
                    }
                }
            }
        }
    }
    found.len()
}

fn inside(p: Pt, caps: &[(Pt, f64)]) -> Option<usize> {
    caps.iter()
        .position(|(c, r)| ((p.0 - c.0).powi(2) + (p.1 - c.1).powi(2)).sqrt() < *r)
}

/// Strand segments lying inside each crosscap: one per transit.
pub fn transits(svg: &Svg) -> Vec<usize> {
    let mut count = vec![0; svg.crosscaps.len()];
    for s in &svg.strands {
        for w in s.windows(2) {
            let mid = ((w[0].0 + w[1].0) / 2.0, (w[0].1 + w[1].1) / 2.0);
            if let Some(i) = inside(mid, &svg.crosscaps) {
                count[i] += 1;
            }
        }
    }
    count
}

/// Pairs of strand segments that cross away from shared vertices, ignoring
/// segments inside crosscaps where antipodal points are identified.
pub fn strand_crossings(svg: &Svg) -> usize {
    let mut segs: Vec<(Pt, Pt)> = Vec::new();
    for s in &svg.strands {
        for w in s.windows(2) {
            let mid = ((w[0].0 + w[1].0) / 2.0, (w[0].1 + w[1].1) / 2.0);
            if inside(mid, &svg.crosscaps).is_none() {
                segs.push((w[0], w[1]));
            }
        }
    }
    let near = |a: Pt, b: Pt| (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6;
    let mut bad = 0;
    for i in 0..segs.len() {
        for j in i + 1..segs.len() {
            let (p1, p2) = segs[i];
            let (q1, q2) = segs[j];
            if near(p1, q1) || near(p1, q2) || near(p2, q1) || near(p2, q2) {
                continue;
            }
            let d1 = cross(q1, q2, p1);
            let d2 = cross(q1, q2, p2);
            let d3 = cross(p1, p2, q1);
            let d4 = cross(p1, p2, q2);
            if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
                bad += 1;
            }
        }
    }
    bad
}

/// Checks every arc against its coordinate, both geometrically and by label.
/// Returns a description of the first mismatch.
pub fn check_fidelity(tau: &TriangleCoords, svg: &Svg) -> Result<(), String> {
    let named = |prefix: &str, values: &[i64]| {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| (format!("{prefix}-{}", i + 1), v))
            .collect::<Vec<_>>()
    };
    let mut expected = named("alpha", tau.alpha());
    expected.extend(named("beta", tau.beta()));
    expected.extend(named("gamma", tau.gamma()));
    for (name, want) in &expected {
        let arc = svg.arcs.get(name).ok_or_else(|| format!("no arc {name}"))?;
        let got = crossings_with(&svg.strands, arc);
        if got as i64 != *want {
            return Err(format!("{name}: {got} geometric crossings, τ says {want}"));
        }
        if svg.labels.get(name) != Some(want) {
            return Err(format!(
                "{name}: label {:?}, τ says {want}",
                svg.labels.get(name)
            ));
        }
    }
    let t = transits(svg);
    for (i, &c) in tau.core().iter().enumerate() {
        if c >= 0 && t[i] as i64 != c {
            return Err(format!("c-{}: {} transits, τ says {c}", i + 1, t[i]));
        }
        if svg.labels.get(&format!("c-{}", i + 1)) != Some(&c) {
            return Err(format!("c-{}: wrong label", i + 1));
        }
    }
    let bad = strand_crossings(svg);
    if bad > 0 {
        return Err(format!("{bad} strand self-crossings"));
    }
    Ok(())
}
