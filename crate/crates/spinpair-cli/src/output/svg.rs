//! Deterministic SVG plots on a fixed 800x600 viewport: line plots for 1D
//! sweeps, heatmaps for 2D sweeps, categorical cell grids for ground-state
//! rasters. All coordinates are formatted with fixed precision and all
//! iteration orders are fixed, so identical inputs give identical bytes.

use spinpair::{PhaseRaster, SweepResult};
use std::fmt::Write as _;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;

/// Concurrence color map: eight anchor colors interpolated linearly over
/// [0, 1], dark violet through yellow.
const COLOR_STOPS: [(u8, u8, u8); 8] = [
    (68, 1, 84),
    (70, 50, 126),
    (54, 92, 141),
    (39, 127, 142),
    (31, 161, 135),
    (74, 193, 109),
    (160, 218, 57),
    (253, 231, 37),
];

fn concurrence_color(c: f64) -> String {
    let t = c.clamp(0.0, 1.0) * (COLOR_STOPS.len() - 1) as f64;
    let i = (t.floor() as usize).min(COLOR_STOPS.len() - 2);
    let f = t - i as f64;
    let lerp = |a: u8, b: u8| (f64::from(a) + (f64::from(b) - f64::from(a)) * f).round() as u8;
    let (r0, g0, b0) = COLOR_STOPS[i];
    let (r1, g1, b1) = COLOR_STOPS[i + 1];
    format!("#{:02x}{:02x}{:02x}", lerp(r0, r1), lerp(g0, g1), lerp(b0, b1))
}

/// Fixed palette for ground-state labels.
fn label_color(name: &str) -> &'static str {
    match name {
        "Phi1" => "#4daf4a",
        "Phi2" => "#ffdf00",
        "Phi4" => "#377eb8",
        _ => "#000000",
    }
}

/// Plot area in canvas coordinates; `ty` = 0 is the bottom edge.
struct Frame {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
}

impl Frame {
    fn x(&self, tx: f64) -> f64 {
        self.x0 + self.w * tx
    }

    fn y(&self, ty: f64) -> f64 {
        self.y0 + self.h * (1.0 - ty)
    }
}

fn open() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         fill=\"#ffffff\"/>\n"
    )
}

fn text(out: &mut String, x: f64, y: f64, anchor: &str, size: u32, extra: &str, content: &str) {
    let _ = writeln!(
        out,
        "<text x=\"{x:.2}\" y=\"{y:.2}\" font-family=\"sans-serif\" font-size=\"{size}\" \
         text-anchor=\"{anchor}\"{extra}>{content}</text>"
    );
}

fn border(out: &mut String, f: &Frame) {
    let _ = writeln!(
        out,
        "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" \
         stroke=\"#000000\" stroke-width=\"1\"/>",
        f.x0, f.y0, f.w, f.h
    );
}

/// Short axis tick label: three decimals with trailing zeros trimmed.
fn tick_label(v: f64) -> String {
    let mut s = format!("{v:.3}");
    while s.ends_with('0') {
        s.pop();
    }
    if s.ends_with('.') {
        s.pop();
    }
    if s == "-0" {
        s.clear();
        s.push('0');
    }
    s
}

/// Parameters held fixed by the sweep, for the subtitle line.
fn held_params(r: &SweepResult) -> String {
    let varies = |name: &str| {
        r.axes.iter().any(|a| {
            a.param.name() == name || (name == "temp" && a.param.name() == "log_temp")
        })
    };
    let mut parts = Vec::new();
    if !varies("j") {
        parts.push(format!("j={}", r.base.j));
    }
    if !varies("dx") {
        parts.push(format!("dx={}", r.base.dx));
    }
    if !varies("gx") {
        parts.push(format!("gx={}", r.base.gx));
    }
    if !varies("temp") {
        parts.push(format!("temp={}", r.base_temp.get()));
    }
    parts.join("  ")
}

fn x_ticks(out: &mut String, f: &Frame, lo: f64, hi: f64) {
    for (t, v) in [(0.0, lo), (0.5, 0.5 * (lo + hi)), (1.0, hi)] {
        let x = f.x(t);
        let _ = writeln!(
            out,
            "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#000000\" \
             stroke-width=\"1\"/>",
            f.y0 + f.h,
            f.y0 + f.h + 5.0
        );
        text(out, x, f.y0 + f.h + 20.0, "middle", 13, "", &tick_label(v));
    }
}

fn y_ticks(out: &mut String, f: &Frame, lo: f64, hi: f64) {
    for (t, v) in [(0.0, lo), (0.5, 0.5 * (lo + hi)), (1.0, hi)] {
        let y = f.y(t);
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#000000\" \
             stroke-width=\"1\"/>",
            f.x0 - 5.0,
            f.x0
        );
        text(out, f.x0 - 9.0, y + 4.0, "end", 13, "", &tick_label(v));
    }
}

/// 1D sweep as a polyline. The concurrence axis is fixed to [0, 1].
fn render_line(r: &SweepResult) -> String {
    let axis = &r.axes[0];
    let f = Frame { x0: 80.0, y0: 50.0, w: 660.0, h: 470.0 };
    let mut out = open();

    text(
        &mut out,
        WIDTH / 2.0,
        28.0,
        "middle",
        16,
        "",
        &format!("concurrence vs {}", axis.param.name()),
    );

    let mut points = String::new();
    let span = axis.hi - axis.lo;
    for i in 0..axis.steps {
        let tx = (axis.value_at(i) - axis.lo) / span;
        let ty = r.values[i].clamp(0.0, 1.0);
        let _ = write!(points, "{:.2},{:.2} ", f.x(tx), f.y(ty));
    }
    let _ = writeln!(
        out,
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#377eb8\" stroke-width=\"1.5\"/>",
        points.trim_end()
    );

    border(&mut out, &f);
    x_ticks(&mut out, &f, axis.lo, axis.hi);
    y_ticks(&mut out, &f, 0.0, 1.0);
    text(&mut out, f.x0 + f.w / 2.0, 558.0, "middle", 14, "", axis.param.name());
    let y_label_extra = format!(" transform=\"rotate(-90 24 {:.2})\"", f.y0 + f.h / 2.0);
    text(&mut out, 24.0, f.y0 + f.h / 2.0, "middle", 14, &y_label_extra, "concurrence");
    text(&mut out, WIDTH / 2.0, 584.0, "middle", 12, "", &held_params(r));

    out.push_str("</svg>\n");
    out
}

/// 2D sweep as a colored cell grid with a vertical color legend.
fn render_heatmap(r: &SweepResult) -> String {
    let (ax, ay) = (&r.axes[0], &r.axes[1]);
    let f = Frame { x0: 80.0, y0: 50.0, w: 620.0, h: 470.0 };
    let mut out = open();

    text(
        &mut out,
        f.x0 + f.w / 2.0,
        28.0,
        "middle",
        16,
        "",
        &format!("concurrence over {} and {}", ax.param.name(), ay.param.name()),
    );

    let (nx, ny) = (ax.steps, ay.steps);
    let cw = f.w / nx as f64;
    let ch = f.h / ny as f64;
    for iy in 0..ny {
        for ix in 0..nx {
            let color = concurrence_color(r.values[iy * nx + ix]);
            let _ = writeln!(
                out,
                "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{}\"/>",
                f.x0 + cw * ix as f64,
                f.y0 + f.h - ch * (iy + 1) as f64,
                cw + 0.3,
                ch + 0.3,
                color
            );
        }
    }

    border(&mut out, &f);
    x_ticks(&mut out, &f, ax.lo, ax.hi);
    y_ticks(&mut out, &f, ay.lo, ay.hi);
    text(&mut out, f.x0 + f.w / 2.0, 558.0, "middle", 14, "", ax.param.name());
    let y_label_extra = format!(" transform=\"rotate(-90 24 {:.2})\"", f.y0 + f.h / 2.0);
    text(&mut out, 24.0, f.y0 + f.h / 2.0, "middle", 14, &y_label_extra, ay.param.name());
    text(&mut out, f.x0 + f.w / 2.0, 584.0, "middle", 12, "", &held_params(r));

    // Color legend: concurrence 0 at the bottom, 1 at the top.
    let legend = Frame { x0: 730.0, y0: f.y0, w: 22.0, h: f.h };
    let strips = 32;
    let sh = legend.h / strips as f64;
    for i in 0..strips {
        let c = 1.0 - (i as f64 + 0.5) / strips as f64;
        let _ = writeln!(
            out,
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{}\"/>",
            legend.x0,
            legend.y0 + sh * i as f64,
            legend.w,
            sh + 0.3,
            concurrence_color(c)
        );
    }
    border(&mut out, &legend);
    text(&mut out, legend.x0 + legend.w / 2.0, legend.y0 - 8.0, "middle", 12, "", "1");
    text(
        &mut out,
        legend.x0 + legend.w / 2.0,
        legend.y0 + legend.h + 16.0,
        "middle",
        12,
        "",
        "0",
    );
    let legend_extra = format!(
        " transform=\"rotate(-90 {:.2} {:.2})\"",
        legend.x0 + legend.w + 16.0,
        legend.y0 + legend.h / 2.0
    );
    text(
        &mut out,
        legend.x0 + legend.w + 16.0,
        legend.y0 + legend.h / 2.0,
        "middle",
        12,
        &legend_extra,
        "concurrence",
    );

    out.push_str("</svg>\n");
    out
}

/// Dispatch on dimensionality.
pub fn render_sweep(r: &SweepResult) -> String {
    match r.axes.len() {
        1 => render_line(r),
        2 => render_heatmap(r),
        _ => unreachable!("sweep results carry one or two axes"),
    }
}

/// Ground-state raster: one colored cell per grid point plus a label legend.
pub fn render_phase(raster: &PhaseRaster) -> String {
    let f = Frame { x0: 80.0, y0: 50.0, w: 580.0, h: 470.0 };
    let mut out = open();

    text(&mut out, f.x0 + f.w / 2.0, 28.0, "middle", 16, "", "ground-state phase diagram");

    let (nx, ny) = (raster.nx, raster.ny);
    let cw = f.w / nx as f64;
    let ch = f.h / ny as f64;
    for iy in 0..ny {
        for ix in 0..nx {
            let color = label_color(raster.cells[iy * nx + ix].label.name());
            let _ = writeln!(
                out,
                "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"{}\"/>",
                f.x0 + cw * ix as f64,
                f.y0 + f.h - ch * (iy + 1) as f64,
                cw + 0.3,
                ch + 0.3,
                color
            );
        }
    }

    border(&mut out, &f);
    x_ticks(&mut out, &f, raster.x_axis.lo, raster.x_axis.hi);
    y_ticks(&mut out, &f, raster.y_axis.lo, raster.y_axis.hi);
    text(&mut out, f.x0 + f.w / 2.0, 558.0, "middle", 14, "", raster.x_axis.param.name());
    let y_label_extra = format!(" transform=\"rotate(-90 24 {:.2})\"", f.y0 + f.h / 2.0);
    text(&mut out, 24.0, f.y0 + f.h / 2.0, "middle", 14, &y_label_extra, raster.y_axis.param.name());

    let fixed = match (raster.x_axis.param.name(), raster.y_axis.param.name()) {
        (x, y) if x != "j" && y != "j" => format!("j={}", raster.base.j),
        (x, y) if x != "dx" && y != "dx" => format!("dx={}", raster.base.dx),
        _ => format!("gx={}", raster.base.gx),
    };
    text(&mut out, f.x0 + f.w / 2.0, 584.0, "middle", 12, "", &fixed);

    // Legend: fixed label order.
    let entries = [("Phi1", "Phi1"), ("Phi2", "Phi2"), ("Phi4", "Phi4"), ("DegenerateBoundary", "boundary")];
    for (row, (key, shown)) in entries.iter().enumerate() {
        let y = f.y0 + 24.0 * row as f64;
        let _ = writeln!(
            out,
            "<rect x=\"676.00\" y=\"{:.2}\" width=\"16.00\" height=\"16.00\" fill=\"{}\" \
             stroke=\"#000000\" stroke-width=\"0.5\"/>",
            y,
            label_color(key)
        );
        text(&mut out, 698.0, y + 13.0, "start", 13, "", shown);
    }

    out.push_str("</svg>\n");
    out
}
