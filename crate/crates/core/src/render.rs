//! SVG drawing of a strand diagram.
//!
//! Punctures sit at `x = 1..n` and crosscaps at `x = n+1..n+k` on a
//! unit-spaced axis. Each feature owns the unit rectangle around it, and the
//! β-arcs are the vertical lines between neighbouring rectangles. Inside a
//! rectangle a point is addressed by a scale `s ∈ [0, 1]` towards the boundary
//! and a perimeter parameter `u ∈ [0, 4)` running clockwise from the top-left
//! corner. Strands run radially in from their slots, along a level `s = r`
//! chosen from how deeply they are nested, and radially out again, which keeps
//! every region planar without any search.

use std::fmt::Write as _;

use crate::error::Result;
use crate::lamination::{trace, Endpoint, ExtraComponent, Piece, PieceKind, Side, StrandDiagram};
use crate::surface::RegionId;

const H: f64 = 0.5;
const MARGIN: f64 = 0.3;
/// Scale of the square the spokes run into.
const S_CROSSCAP: f64 = 0.12;
/// Scale at which `γ_i` circles the crosscap; every strand level in `S'_i`
/// lies outside it.
const S_GAMMA: f64 = 0.35;
const GAMMA_START: f64 = 0.7;
const GAMMA_END: f64 = 4.3;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    /// Pixels per unit of the layout.
    pub scale: f64,
    pub stroke_width: f64,
    /// Draw the arcs `α, β, γ`.
    pub arcs: bool,
    /// Label arcs and crosscaps with their coordinates.
    pub labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            scale: 160.0,
            stroke_width: 1.2,
            arcs: true,
            labels: true,
        }
    }
}

type Pt = (f64, f64);

struct Frame {
    cx: f64,
}

impl Frame {
    fn boundary(&self, u: f64) -> Pt {
        let u = u.rem_euclid(4.0);
        let cx = self.cx;
        if u < 1.0 {
            (cx - 0.5 + u, -H)
        } else if u < 2.0 {
            (cx + 0.5, -H + 2.0 * H * (u - 1.0))
        } else if u < 3.0 {
            (cx + 0.5 - (u - 2.0), H)
        } else {
            (cx - 0.5, H - 2.0 * H * (u - 3.0))
        }
    }

    fn at(&self, s: f64, u: f64) -> Pt {
        let (bx, by) = self.boundary(u);
        if s == 1.0 {
            return (bx, by);
        }
        (self.cx + s * (bx - self.cx), s * by)
    }

    /// Along level `s` from `from` to `to` (with `to > from`), through every
    /// corner in between.
    fn level(&self, s: f64, from: f64, to: f64, out: &mut Vec<Pt>) {
        out.push(self.at(s, from));
        let mut corner = from.floor() + 1.0;
        while corner < to {
            out.push(self.at(s, corner));
            corner += 1.0;
        }
        out.push(self.at(s, to));
    }
}

fn slot_y(slot: usize, slots: usize) -> f64 {
    -H + 2.0 * H * (slot + 1) as f64 / (slots + 1) as f64
}

fn slot_u(e: &Endpoint, slots: usize) -> f64 {
    let y = slot_y(e.slot, slots);
    match e.side {
        Side::Left => 3.0 + (H - y) / (2.0 * H),
        Side::Right => 1.0 + (y + H) / (2.0 * H),
    }
}

/// The stretch of perimeter a piece runs alongside, as `[start, end]` with
/// `end > start`, and whether `ends[0]` sits at `start`.
fn interval(p: &Piece, u: [f64; 2]) -> (f64, f64, bool) {
    match p.kind {
        PieceKind::Above => {
            let first_left = p.ends[0].side == Side::Left;
            let (l, r) = if first_left {
                (u[0], u[1])
            } else {
                (u[1], u[0])
            };
            (l, r + 4.0, first_left)
        }
        PieceKind::Below => {
            let first_right = p.ends[0].side == Side::Right;
            let (r, l) = if first_right {
                (u[0], u[1])
            } else {
                (u[1], u[0])
            };
            (r, l, first_right)
        }
        _ => {
            let first_high = u[0] > u[1];
            let (hi, lo) = if first_high {
                (u[0], u[1])
            } else {
                (u[1], u[0])
            };
            (hi, lo + 4.0, first_high)
        }
    }
}

fn contains(outer: (f64, f64), inner: (f64, f64)) -> bool {
    [-4.0, 0.0, 4.0]
        .iter()
        .any(|shift| inner.0 + shift >= outer.0 && inner.1 + shift <= outer.1)
}

/// Polylines of every piece of one region, oriented from `ends[0]` to `ends[1]`.
fn region_polylines(frame: &Frame, pieces: &[Piece], left: usize, right: usize) -> Vec<Vec<Pt>> {
    let slots = |e: &Endpoint| match e.side {
        Side::Left => left,
        Side::Right => right,
    };
    let us: Vec<[f64; 2]> = pieces
        .iter()
        .map(|p| {
            [
                slot_u(&p.ends[0], slots(&p.ends[0])),
                slot_u(&p.ends[1], slots(&p.ends[1])),
            ]
        })
        .collect();
    let intervals: Vec<Option<(f64, f64, bool)>> = pieces
        .iter()
        .zip(&us)
        .map(|(p, u)| p.transit.is_none().then(|| interval(p, *u)))
        .collect();
    let depth: Vec<usize> = intervals
        .iter()
        .enumerate()
        .map(|(i, iv)| match iv {
            None => 0,
            Some((a, b, _)) => intervals
                .iter()
                .enumerate()
                .filter(|(j, o)| *j != i && o.is_some_and(|(c, d, _)| contains((c, d), (*a, *b))))
                .count(),
        })
        .collect();
    let levels = depth.iter().max().map_or(1, |d| d + 1);
    let s_lo = S_GAMMA;

    pieces
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let u = us[i];
            match intervals[i] {
                None => vec![
                    frame.at(1.0, u[0]),
                    frame.at(S_CROSSCAP, u[0]),
                    frame.at(S_CROSSCAP, u[1]),
                    frame.at(1.0, u[1]),
                ],
                Some((start, end, forward)) => {
                    let r = s_lo + (1.0 - s_lo) * (depth[i] + 1) as f64 / (levels + 1) as f64;
                    let mut pts = vec![frame.at(1.0, start)];
                    frame.level(r, start, end, &mut pts);
                    pts.push(frame.at(1.0, end));
                    if !forward {
                        pts.reverse();
                    }
                    pts
                }
            }
        })
        .collect()
}

struct Canvas {
    scale: f64,
    out: String,
}

impl Canvas {
    fn px(&self, (x, y): Pt) -> (String, String) {
        (
            num((x - 0.5 + MARGIN) * self.scale),
            num((y + H + MARGIN) * self.scale),
        )
    }

    fn path_data(&self, pts: &[Pt], closed: bool) -> String {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = self.px(*p);
            let _ = write!(d, "{}{x} {y}", if i == 0 { "M" } else { " L" });
        }
        if closed {
            d.push_str(" Z");
        }
        d
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn ring(cx: f64, radius: f64, from: f64, to: f64, steps: usize) -> Vec<Pt> {
    (0..=steps)
        .map(|i| {
            let a = from + (to - from) * i as f64 / steps as f64;
            (cx + radius * a.cos(), radius * a.sin())
        })
        .collect()
}

/// Renders the diagram, one closed `<path class="strand">` per component.
pub fn render_svg(diagram: &StrandDiagram, options: &RenderOptions) -> Result<String> {
    let components = trace(diagram)?;
    let tau = diagram.coords();
    let sig = diagram.signature();
    let n = sig.punctures();
    let k = sig.genus();
    let beta = tau.beta();
    let regions = sig.regions();

    let frames: Vec<Frame> = (0..regions.len())
        .map(|p| Frame { cx: (p + 1) as f64 })
        .collect();
    let polylines: Vec<Vec<Vec<Pt>>> = regions
        .iter()
        .enumerate()
        .map(|(pos, &region)| {
            let (lb, rb) = sig.bounding_betas(region);
            let left = lb.map_or(0, |b| beta[b] as usize);
            let right = rb.map_or(0, |b| beta[b] as usize);
            region_polylines(&frames[pos], diagram.pieces(pos), left, right)
        })
        .collect();

    let width = (n + k) as f64 + 2.0 * MARGIN;
    let height = 2.0 * H + 2.0 * MARGIN;
    let mut c = Canvas {
        scale: options.scale,
        out: String::new(),
    };
    let sw = options.stroke_width;
    let font = 0.075 * options.scale;
    let _ = writeln!(c.out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        c.out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width * options.scale),
        h = num(height * options.scale)
    );
    let _ = writeln!(
        c.out,
        "<style>\n.boundary {{ fill: #fafafa; stroke: #222; stroke-width: {b}; }}\n\
         .strand {{ fill: none; stroke: #c0392b; stroke-width: {sw}; stroke-linejoin: round; }}\n\
         .nonprimitive {{ stroke-dasharray: {d1} {d2}; }}\n\
         .arc {{ fill: none; stroke: #2471a3; stroke-width: {a}; stroke-dasharray: {d2} {d2}; }}\n\
         .puncture {{ fill: #222; }}\n\
         .crosscap {{ fill: #fff; stroke: #222; stroke-width: {a}; }}\n\
         .crosscap-mark {{ stroke: #222; stroke-width: {a}; }}\n\
         .label {{ font-family: sans-serif; font-size: {font}px; fill: #2471a3; }}\n</style>",
        b = num(sw * 1.5),
        sw = num(sw),
        a = num(sw * 0.6),
        d1 = num(sw * 4.0),
        d2 = num(sw * 2.0),
        font = num(font),
    );
    let (x0, y0) = c.px((0.5, -H));
    let _ = writeln!(
        c.out,
        r#"<rect class="boundary" x="{x0}" y="{y0}" width="{}" height="{}" rx="{}"/>"#,
        num((n + k) as f64 * options.scale),
        num(2.0 * H * options.scale),
        num(0.08 * options.scale)
    );

    if options.arcs {
        for (j, _) in beta.iter().enumerate() {
            let x = j as f64 + 1.5;
            let d = c.path_data(&[(x, -H), (x, H)], false);
            let _ = writeln!(
                c.out,
                r#"<path class="arc" data-arc="beta-{}" d="{d}"/>"#,
                j + 1
            );
        }
        for (i, f) in frames.iter().enumerate().take(n).skip(1) {
            let cx = f.cx;
            for (idx, end) in [(2 * i - 1, -H), (2 * i, H)] {
                let d = c.path_data(&[(cx, 0.0), (cx, end)], false);
                let _ = writeln!(
                    c.out,
                    r#"<path class="arc" data-arc="alpha-{idx}" d="{d}"/>"#
                );
            }
        }
        for i in 1..k {
            let f = &frames[n - 1 + i];
            let mut pts = vec![f.at(1.0, GAMMA_START)];
            f.level(S_GAMMA, GAMMA_START, GAMMA_END, &mut pts);
            pts.push(f.at(1.0, GAMMA_END));
            let d = c.path_data(&pts, false);
            let _ = writeln!(c.out, r#"<path class="arc" data-arc="gamma-{i}" d="{d}"/>"#);
        }
    }

    let crosscap_radius = S_CROSSCAP * (0.25 + H * H).sqrt() + 0.005;
    for (pos, region) in regions.iter().enumerate() {
        let (x, y) = c.px((frames[pos].cx, 0.0));
        match region {
            RegionId::DeltaZero | RegionId::S(_) => {
                let _ = writeln!(
                    c.out,
                    r#"<circle class="puncture" cx="{x}" cy="{y}" r="{}"/>"#,
                    num(0.025 * options.scale)
                );
            }
            _ => {
                let r = crosscap_radius * options.scale;
                let _ = writeln!(
                    c.out,
                    r#"<circle class="crosscap" cx="{x}" cy="{y}" r="{}"/>"#,
                    num(r)
                );
                let h = crosscap_radius * std::f64::consts::FRAC_1_SQRT_2;
                let cx = frames[pos].cx;
                for (a, b) in [((cx - h, -h), (cx + h, h)), ((cx - h, h), (cx + h, -h))] {
                    let d = c.path_data(&[a, b], false);
                    let _ = writeln!(c.out, r#"<path class="crosscap-mark" d="{d}"/>"#);
                }
            }
        }
    }

    let mut rings_at = vec![0usize; k];
    let twosided_at: Vec<usize> = (1..=k)
        .map(|i| {
            diagram
                .extras()
                .iter()
                .filter(|e| matches!(e, ExtraComponent::MobiusBoundary(j) if *j == i))
                .count()
        })
        .collect();
    for comp in &components {
        let (pts, class) = match comp.extra {
            None => {
                let mut pts: Vec<Pt> = Vec::new();
                for pr in &comp.pieces {
                    let mut line = polylines[pr.region][pr.index].clone();
                    if !pr.forward {
                        line.reverse();
                    }
                    for p in line {
                        let dup = pts.last().is_some_and(|q: &Pt| {
                            (q.0 - p.0).abs() < 1e-9 && (q.1 - p.1).abs() < 1e-9
                        });
                        if !dup {
                            pts.push(p);
                        }
                    }
                }
                if pts.len() > 1 {
                    let (a, b) = (pts[0], pts[pts.len() - 1]);
                    if (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9 {
                        pts.pop();
                    }
                }
                (pts, "strand")
            }
            Some(ExtraComponent::CoreCurve(i)) => {
                let cx = frames[n - 1 + i].cx;
                let radius = 0.11;
                let mut pts = vec![(cx, -crosscap_radius)];
                pts.extend(ring(
                    cx,
                    radius,
                    -std::f64::consts::FRAC_PI_2,
                    -3.0 * std::f64::consts::FRAC_PI_2,
                    24,
                ));
                pts.push((cx, crosscap_radius));
                (pts, "strand nonprimitive core")
            }
            Some(ExtraComponent::MobiusBoundary(i)) => {
                let cx = frames[n - 1 + i].cx;
                let m = twosided_at[i - 1];
                let j = rings_at[i - 1];
                rings_at[i - 1] += 1;
                let radius = 0.125 + 0.04 * (j + 1) as f64 / (m + 1) as f64;
                let mut pts = ring(cx, radius, 0.0, 2.0 * std::f64::consts::PI, 48);
                pts.pop();
                (pts, "strand nonprimitive")
            }
        };
        let d = c.path_data(&pts, true);
        let side = match comp.sidedness {
            crate::lamination::Sidedness::OneSided => "one",
            crate::lamination::Sidedness::TwoSided => "two",
        };
        let _ = writeln!(
            c.out,
            r#"<path class="{class}" data-sided="{side}" data-crossings="{}" d="{d}"/>"#,
            comp.total_crossings()
        );
    }

    if options.labels {
        let label = |c: &mut Canvas, arc: String, at: Pt, value: i64| {
            let (x, y) = c.px(at);
            let _ = writeln!(
                c.out,
                r#"<text class="label" data-arc="{arc}" x="{x}" y="{y}">{value}</text>"#
            );
        };
        for (j, &b) in beta.iter().enumerate() {
            label(
                &mut c,
                format!("beta-{}", j + 1),
                (j as f64 + 1.52, -H - 0.06),
                b,
            );
        }
        for (i, f) in frames.iter().enumerate().take(n).skip(1) {
            let cx = f.cx;
            label(
                &mut c,
                format!("alpha-{}", 2 * i - 1),
                (cx + 0.02, -H - 0.06),
                tau.alpha()[2 * i - 2],
            );
            label(
                &mut c,
                format!("alpha-{}", 2 * i),
                (cx + 0.02, H + 0.16),
                tau.alpha()[2 * i - 1],
            );
        }
        for i in 1..k {
            let f = &frames[n - 1 + i];
            let (x, _) = f.at(1.0, GAMMA_END);
            label(
                &mut c,
                format!("gamma-{i}"),
                (x - 0.02, -H - 0.06),
                tau.gamma()[i - 1],
            );
        }
        for i in 1..=k {
            let cx = frames[n - 1 + i].cx;
            label(
                &mut c,
                format!("c-{i}"),
                (cx - 0.03, H + 0.16),
                tau.core()[i - 1],
            );
        }
    }
    c.out.push_str("</svg>\n");
    Ok(c.out)
}
