//! SVG rendering of the polygon figure: the rotated n-gon on its
//! circumcircle, the diagonal-tangent circles, the vertical lines through
//! the critical points, and optionally the graph of the projection
//! polynomial in the lower third of the viewport.

use std::f64::consts::TAU;
use std::fmt::Write;

use ngon_roots::ngon::RegularNgon;
use ngon_roots::roots::critical_points;
use ngon_roots::verify::tangent_circle_radii;

#[derive(Debug, Clone)]
pub struct FigureSpec {
    pub n: u32,
    pub theta: f64,
    pub show_polynomial_curve: bool,
    pub show_circles: bool,
    pub show_lines: bool,
    pub width_px: u32,
    pub height_px: u32,
}

const CURVE_SAMPLES: usize = 257;

/// Render the figure. Elements carry stable ids (`polygon`,
/// `circle-d<k>`, `line-l<k>`, `curve-f`) so structure is machine-checkable.
pub fn render_figure(spec: &FigureSpec) -> anyhow::Result<String> {
    anyhow::ensure!(
        spec.width_px >= 100 && spec.height_px >= 100,
        "dimensions must be >= 100 px"
    );
    let g = RegularNgon::unit(spec.n, spec.theta)?;

    let w = spec.width_px as f64;
    let h = spec.height_px as f64;
    // Circumcircle spans 40% of the smaller dimension; the polygon sits in
    // the upper part, the curve in the lower third. Vertical lines run the
    // full height so both tangency and the curve's extrema are visible.
    let r_px = 0.2 * w.min(h);
    let (cx, cy) = (w / 2.0, 0.38 * h);
    let map_x = |x: f64| cx + r_px * x;

    let mut out = String::new();
    writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width_px, spec.height_px, spec.width_px, spec.height_px
    )?;
    writeln!(
        out,
        r#"  <rect width="{}" height="{}" fill="white"/>"#,
        spec.width_px, spec.height_px
    )?;
    writeln!(
        out,
        r#"  <circle cx="{cx:.2}" cy="{cy:.2}" r="{r_px:.2}" fill="none" stroke="lightgray" stroke-dasharray="4 3"/>"#
    )?;

    if spec.show_circles {
        for (i, radius) in tangent_circle_radii(&g).radii.iter().enumerate() {
            writeln!(
                out,
                r#"  <circle id="circle-d{}" cx="{cx:.2}" cy="{cy:.2}" r="{:.2}" fill="none" stroke="gray"/>"#,
                i + 1,
                r_px * radius
            )?;
        }
    }

    if spec.show_lines {
        for (i, c) in critical_points(&g.projections())?.iter().enumerate() {
            let x = map_x(*c);
            writeln!(
                out,
                r#"  <line id="line-l{}" x1="{x:.2}" y1="0" x2="{x:.2}" y2="{h:.2}" stroke="crimson" stroke-width="0.8"/>"#,
                i + 1
            )?;
        }
    }

    let points: Vec<String> = (0..g.n())
        .map(|k| {
            let phi = g.theta() + TAU * k as f64 / g.n() as f64;
            format!("{:.2},{:.2}", map_x(phi.cos()), cy - r_px * phi.sin())
        })
        .collect();
    writeln!(
        out,
        r#"  <polygon id="polygon" points="{}" fill="none" stroke="steelblue" stroke-width="1.5"/>"#,
        points.join(" ")
    )?;

    if spec.show_polynomial_curve {
        let f = g.projection_polynomial();
        let x_lo = -1.15;
        let x_hi = 1.15;
        let values: Vec<(f64, f64)> = (0..CURVE_SAMPLES)
            .map(|i| {
                let x = x_lo + (x_hi - x_lo) * i as f64 / (CURVE_SAMPLES - 1) as f64;
                (x, f.evaluate(&x))
            })
            .collect();
        let v_min = values.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min);
        let v_max = values
            .iter()
            .map(|(_, v)| *v)
            .fold(f64::NEG_INFINITY, f64::max);
        let span = (v_max - v_min).max(f64::MIN_POSITIVE);
        let band_top = 0.70 * h;
        let band_bottom = 0.98 * h;
        let map_y = |v: f64| band_top + (v_max - v) / span * (band_bottom - band_top);
        let mut path = String::new();
        for (i, (x, v)) in values.iter().enumerate() {
            let cmd = if i == 0 { 'M' } else { 'L' };
            write!(path, "{cmd}{:.2} {:.2} ", map_x(*x), map_y(*v))?;
        }
        writeln!(
            out,
            r#"  <path id="curve-f" d="{}" fill="none" stroke="seagreen" stroke-width="1.2"/>"#,
            path.trim_end()
        )?;
        // Axis through the roots, inside the curve band.
        let y0 = map_y(0.0);
        if (band_top..=band_bottom).contains(&y0) {
            writeln!(
                out,
                r#"  <line x1="{:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="lightgray" stroke-width="0.6"/>"#,
                map_x(x_lo),
                map_x(x_hi)
            )?;
        }
    }

    writeln!(out, "</svg>")?;
    Ok(out)
}
