//! Deterministic SVG figures: a map's graph, the diagonal, its fixed points
//! marked by branch direction, and arrows following their orbits.

use std::fmt::Write as _;

use crate::arith::checked_pow;
use crate::chebyshev::{cheb_eval, cheb_fixed_points};
use crate::dynamics::{fixed_points, increasing_set, successor_table, UpSet};
use crate::error::{Error, Result};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;
const MAX_MARKERS: usize = 4096;

/// One polyline of the graph.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve(pub Vec<(f64, f64)>);

#[derive(Clone, Debug, PartialEq)]
pub struct FixedMarker {
    pub x: f64,
    pub increasing: bool,
}

/// Everything needed to draw a figure over the square `[lo, hi]^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct PlotSpec {
    pub title: String,
    pub lo: f64,
    pub hi: f64,
    pub curves: Vec<Curve>,
    pub markers: Vec<FixedMarker>,
    /// Orbit steps as pairs of positions on the diagonal.
    pub arrows: Vec<(f64, f64)>,
}

fn too_large(p: u64, n: u32) -> Error {
    Error::InvalidArgument(format!("{p}^{n} is too large to plot"))
}

impl PlotSpec {
    /// The graph of `g_{p,I}^n` on `[0, 1]`.
    pub fn for_map(up: &UpSet, n: u32) -> Result<Self> {
        let size = checked_pow(up.p(), n)
            .filter(|&s| s as usize <= MAX_MARKERS)
            .ok_or_else(|| too_large(up.p(), n))?;
        let inc = increasing_set(up, n)?;
        let s = size as f64;
        // Consecutive branches that meet at a breakpoint share one polyline.
        let mut curves: Vec<Curve> = Vec::new();
        for k in 0..size {
            let (x0, x1) = (k as f64 / s, (k + 1) as f64 / s);
            let (y0, y1) = if inc.contains(k) { (0.0, 1.0) } else { (1.0, 0.0) };
            match curves.last_mut() {
                Some(Curve(pts)) if pts.last() == Some(&(x0, y0)) => pts.push((x1, y1)),
                _ => curves.push(Curve(vec![(x0, y0), (x1, y1)])),
            }
        }
        let points = fixed_points(up, n)?;
        let xs: Vec<f64> = points.iter().map(|x| x.to_f64()).collect();
        let markers = xs
            .iter()
            .enumerate()
            .map(|(k, &x)| FixedMarker {
                x,
                increasing: inc.contains(k as u64),
            })
            .collect();
        let next = successor_table(up, n)?;
        let arrows = orbit_arrows(&xs, &next);
        Ok(Self {
            title: format!("g^{n} for p={}, I={:?}", up.p(), up.members()),
            lo: 0.0,
            hi: 1.0,
            curves,
            markers,
            arrows,
        })
    }

    /// The graph of `T_{p^n}` on `[-1, 1]` with its transported fixed points.
    pub fn for_chebyshev(p: u64, n: u32) -> Result<Self> {
        let degree = checked_pow(p, n)
            .filter(|&s| s as usize <= MAX_MARKERS)
            .ok_or_else(|| too_large(p, n))?;
        let up = UpSet::evens(p)?;
        let inc = increasing_set(&up, n)?;
        let samples = (degree as usize * 16).clamp(400, 20_000);
        let curve = (0..=samples)
            .map(|i| {
                let y = -1.0 + 2.0 * i as f64 / samples as f64;
                (y, cheb_eval(degree, y))
            })
            .collect();
        let fps = cheb_fixed_points(p, n)?;
        let ys: Vec<f64> = fps.iter().map(|f| f.y).collect();
        let markers = ys
            .iter()
            .enumerate()
            .map(|(k, &y)| FixedMarker {
                x: y,
                increasing: inc.contains(k as u64),
            })
            .collect();
        let next = successor_table(&up, n)?;
        Ok(Self {
            title: format!("T_{degree}"),
            lo: -1.0,
            hi: 1.0,
            curves: vec![Curve(curve)],
            markers,
            arrows: orbit_arrows(&ys, &next),
        })
    }
}

fn orbit_arrows(pos: &[f64], next: &[u64]) -> Vec<(f64, f64)> {
    next.iter()
        .enumerate()
        .filter(|&(k, &j)| k as u64 != j)
        .map(|(k, &j)| (pos[k], pos[j as usize]))
        .collect()
}

fn num(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

/// Renders a figure. The output depends only on `spec`.
pub fn emit_plot(spec: &PlotSpec) -> String {
    let span = spec.hi - spec.lo;
    let sx = |x: f64| MARGIN + (x - spec.lo) / span * SIZE;
    let sy = |y: f64| MARGIN + (spec.hi - y) / span * SIZE;
    let total = SIZE + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = num(total)
    );
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" ",
        "markerWidth=\"5\" markerHeight=\"5\" orient=\"auto-start-reverse\">",
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n",
        "<style>.curve{fill:none;stroke:#1f4e9c;stroke-width:1.2}",
        ".diagonal{stroke:#999;stroke-dasharray:4 3}",
        ".frame{fill:none;stroke:#000}",
        ".orbit{fill:none;stroke:#555;stroke-width:0.8}",
        ".fp.inc{fill:#2a9d3a}.fp.dec{fill:#c0392b}</style>\n",
    ));
    let _ = writeln!(s, "<title>{}</title>", escape(&spec.title));
    let _ = writeln!(
        s,
        r#"<rect class="frame" x="{m}" y="{m}" width="{w}" height="{w}"/>"#,
        m = num(MARGIN),
        w = num(SIZE)
    );
    let _ = writeln!(
        s,
        r#"<line class="diagonal" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        num(sx(spec.lo)),
        num(sy(spec.lo)),
        num(sx(spec.hi)),
        num(sy(spec.hi))
    );
    for Curve(pts) in &spec.curves {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{},{}", num(sx(x)), num(sy(y))))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="curve" points="{}"/>"#,
            coords.join(" ")
        );
    }
    for &(a, b) in &spec.arrows {
        let (ax, ay, bx, by) = (sx(a), sy(a), sx(b), sy(b));
        // Bow the arc off the diagonal; direction decides the side.
        let bow = 0.25 * (bx - ax);
        let (cx, cy) = ((ax + bx) / 2.0 - bow, (ay + by) / 2.0 - bow);
        let _ = writeln!(
            s,
            r#"<path class="orbit" d="M{},{} Q{},{} {},{}" marker-end="url(#arrow)"/>"#,
            num(ax),
            num(ay),
            num(cx),
            num(cy),
            num(bx),
            num(by)
        );
    }
    let r = (SIZE / (4.0 * spec.markers.len().max(1) as f64)).clamp(1.0, 4.0);
    for m in &spec.markers {
        let _ = writeln!(
            s,
            r#"<circle class="fp {}" cx="{}" cy="{}" r="{}"/>"#,
            if m.increasing { "inc" } else { "dec" },
            num(sx(m.x)),
            num(sy(m.x)),
            num(r)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
