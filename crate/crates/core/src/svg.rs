//! SVG rendering of rank-2 alcove walks: the affine hyperplane arrangement
//! clipped to a bounding box, with the walk drawn as a polyline through the
//! h-scaled central points of its alcoves.

use crate::alcove::{central_points, LambdaChain};
use crate::error::{invalid, Result};
use crate::root_system::{RootSystem, Weight};

const MARGIN: f64 = 1.2;
const PIXELS_PER_UNIT: f64 = 60.0;

struct Embedding {
    /// Real coordinates of the fundamental weights.
    omega: [[f64; 2]; 2],
    /// Real coordinates of the positive coroots.
    coroots: Vec<[f64; 2]>,
}

/// Inner-product-faithful planar coordinates from the symmetrized Cartan
/// matrix; only used for drawing.
fn embed(rs: &RootSystem) -> Embedding {
    let d = rs.symmetrizers();
    let g11 = (d[0] * rs.cartan_entry(0, 0)) as f64;
    let g12 = (d[0] * rs.cartan_entry(0, 1)) as f64;
    let g22 = (d[1] * rs.cartan_entry(1, 1)) as f64;
    // α_1 along the x-axis, α_2 in the upper half plane
    let a1 = [g11.sqrt(), 0.0];
    let a2x = g12 / g11.sqrt();
    let a2 = [a2x, (g22 - a2x * a2x).sqrt()];
    let simple = [a1, a2];
    let norm2 = [g11, g22];
    let simple_coroot: Vec<[f64; 2]> = (0..2)
        .map(|i| [2.0 * simple[i][0] / norm2[i], 2.0 * simple[i][1] / norm2[i]])
        .collect();
    // fundamental weights: solve (ω_i, α_j∨) = δ_ij
    let det = simple_coroot[0][0] * simple_coroot[1][1] - simple_coroot[0][1] * simple_coroot[1][0];
    let omega = [
        [simple_coroot[1][1] / det, -simple_coroot[1][0] / det],
        [-simple_coroot[0][1] / det, simple_coroot[0][0] / det],
    ];
    let coroots = rs
        .positive_roots()
        .iter()
        .map(|r| {
            let c = &r.coroot_coords;
            [
                c[0] as f64 * simple_coroot[0][0] + c[1] as f64 * simple_coroot[1][0],
                c[0] as f64 * simple_coroot[0][1] + c[1] as f64 * simple_coroot[1][1],
            ]
        })
        .collect();
    Embedding { omega, coroots }
}

fn to_plane(emb: &Embedding, w: &Weight) -> [f64; 2] {
    [
        w.0[0] as f64 * emb.omega[0][0] + w.0[1] as f64 * emb.omega[1][0],
        w.0[0] as f64 * emb.omega[0][1] + w.0[1] as f64 * emb.omega[1][1],
    ]
}

fn fmt(x: f64) -> String {
    format!("{x:.4}")
}

/// Draw a chain's alcove walk. Rank-2 systems only.
pub fn render_chain(rs: &RootSystem, chain: &LambdaChain) -> Result<String> {
    if rs.rank() != 2 {
        return Err(invalid("alcove pictures are drawn for rank-2 systems only"));
    }
    let emb = embed(rs);
    let h = rs.coxeter_number() as f64;
    let points: Vec<[f64; 2]> = central_points(rs, chain)
        .iter()
        .map(|z| {
            let p = to_plane(&emb, z);
            [p[0] / h, p[1] / h]
        })
        .collect();

    let (mut min_x, mut min_y, mut max_x, mut max_y) = (-1.0f64, -1.0f64, 1.0f64, 1.0f64);
    for p in &points {
        min_x = min_x.min(p[0]);
        min_y = min_y.min(p[1]);
        max_x = max_x.max(p[0]);
        max_y = max_y.max(p[1]);
    }
    min_x -= MARGIN;
    min_y -= MARGIN;
    max_x += MARGIN;
    max_y += MARGIN;

    let width = (max_x - min_x) * PIXELS_PER_UNIT;
    let height = (max_y - min_y) * PIXELS_PER_UNIT;
    let px = |p: [f64; 2]| -> (f64, f64) {
        (
            (p[0] - min_x) * PIXELS_PER_UNIT,
            (max_y - p[1]) * PIXELS_PER_UNIT,
        )
    };

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" \
         viewBox=\"0 0 {} {}\">\n",
        fmt(width),
        fmt(height),
        fmt(width),
        fmt(height)
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // hyperplanes (x, α∨) = k clipped to the box
    let corners = [
        [min_x, min_y],
        [min_x, max_y],
        [max_x, min_y],
        [max_x, max_y],
    ];
    for idx in 0..rs.num_positive_roots() {
        let n = emb.coroots[idx];
        let n2 = n[0] * n[0] + n[1] * n[1];
        let dir = [-n[1] / n2.sqrt(), n[0] / n2.sqrt()];
        let dots: Vec<f64> = corners.iter().map(|c| c[0] * n[0] + c[1] * n[1]).collect();
        let k_min = dots.iter().cloned().fold(f64::INFINITY, f64::min).ceil() as i64;
        let k_max = dots
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
            .floor() as i64;
        for k in k_min..=k_max {
            let base = [k as f64 * n[0] / n2, k as f64 * n[1] / n2];
            // intersect base + t·dir with the box
            let mut t_min = f64::NEG_INFINITY;
            let mut t_max = f64::INFINITY;
            for (axis, (lo, hi)) in [(0usize, (min_x, max_x)), (1usize, (min_y, max_y))] {
                if dir[axis].abs() < 1e-12 {
                    if base[axis] < lo || base[axis] > hi {
                        t_min = f64::INFINITY;
                    }
                } else {
                    let t1 = (lo - base[axis]) / dir[axis];
                    let t2 = (hi - base[axis]) / dir[axis];
                    t_min = t_min.max(t1.min(t2));
                    t_max = t_max.min(t1.max(t2));
                }
            }
            if t_min >= t_max {
                continue;
            }
            let p1 = px([base[0] + t_min * dir[0], base[1] + t_min * dir[1]]);
            let p2 = px([base[0] + t_max * dir[0], base[1] + t_max * dir[1]]);
            let stroke = if k == 0 { "#888888" } else { "#cccccc" };
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"1\"/>\n",
                fmt(p1.0),
                fmt(p1.1),
                fmt(p2.0),
                fmt(p2.1),
                stroke
            ));
        }
    }

    // the walk through central points
    let pts: Vec<String> = points
        .iter()
        .map(|p| {
            let (x, y) = px(*p);
            format!("{},{}", fmt(x), fmt(y))
        })
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#c02040\" stroke-width=\"2\"/>\n",
        pts.join(" ")
    ));
    if let (Some(first), Some(last)) = (points.first(), points.last()) {
        let (x0, y0) = px(*first);
        let (x1, y1) = px(*last);
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#2040c0\"/>\n",
            fmt(x0),
            fmt(y0)
        ));
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#c02040\"/>\n",
            fmt(x1),
            fmt(y1)
        ));
    }
    out.push_str("</svg>\n");
    Ok(out)
}
