//! Static SVG scatter plots of zero sets.

use std::fmt::Write;

use polarzeros::Complex64;

use crate::config::Window;

/// Canvas edge in pixels.
pub const CANVAS: f64 = 800.0;
const MARGIN: f64 = 50.0;
const MARKER_RADIUS: f64 = 3.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Circle drawn behind the markers, e.g. the unit circle or a bounding disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Guide {
    pub label: String,
    pub center: Complex64,
    pub radius: f64,
}

impl Guide {
    pub fn new(label: impl Into<String>, center: Complex64, radius: f64) -> Self {
        Guide {
            label: label.into(),
            center,
            radius,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Window-to-canvas map with equal scales on both axes, centered in the
/// plot area.
struct Frame {
    scale: f64,
    x0: f64,
    y0: f64,
    window: Window,
}

impl Frame {
    fn new(window: Window) -> Self {
        let w = window.x_max - window.x_min;
        let h = window.y_max - window.y_min;
        let side = CANVAS - 2.0 * MARGIN;
        let scale = side / w.max(h);
        Frame {
            scale,
            x0: MARGIN + 0.5 * (side - w * scale),
            y0: MARGIN + 0.5 * (side - h * scale),
            window,
        }
    }

    fn x(&self, re: f64) -> f64 {
        self.x0 + (re - self.window.x_min) * self.scale
    }

    fn y(&self, im: f64) -> f64 {
        self.y0 + (self.window.y_max - im) * self.scale
    }

    fn width(&self) -> f64 {
        (self.window.x_max - self.window.x_min) * self.scale
    }

    fn height(&self) -> f64 {
        (self.window.y_max - self.window.y_min) * self.scale
    }
}

/// Renders labelled points as an 800×800 SVG 1.1 document.
///
/// Points sharing a label form one series (one `<g class="series">`, one
/// colour, one legend entry) in order of first appearance. Every point is a
/// `<circle class="marker">`; guides are `<circle class="guide">`. Drawing is
/// clipped to `window`. Identical input yields identical bytes.
///
/// # Panics
///
/// If `window` is empty or not finite.
pub fn render_svg_scatter(points: &[(String, Complex64)], window: Window, guides: &[Guide]) -> String {
    assert!(window.is_valid(), "render_svg_scatter needs a nonempty finite window");
    let f = Frame::new(window);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{c}" height="{c}" viewBox="0 0 {c} {c}">"#,
        c = CANVAS
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<clipPath id="plot"><rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/></clipPath>"#,
        f.x0,
        f.y0,
        f.width(),
        f.height()
    );

    // axes: frame, zero lines, extent labels
    let _ = writeln!(s, r#"<g class="axes" stroke="black" stroke-width="1" fill="none">"#);
    let _ = writeln!(
        s,
        r#"<rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
        f.x0,
        f.y0,
        f.width(),
        f.height()
    );
    if window.y_min <= 0.0 && 0.0 <= window.y_max {
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{y:.3}" x2="{:.3}" y2="{y:.3}"/>"#,
            f.x0,
            f.x0 + f.width(),
            y = f.y(0.0)
        );
    }
    if window.x_min <= 0.0 && 0.0 <= window.x_max {
        let _ = writeln!(
            s,
            r#"<line x1="{x:.3}" y1="{:.3}" x2="{x:.3}" y2="{:.3}"/>"#,
            f.y0,
            f.y0 + f.height(),
            x = f.x(0.0)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="ticks" font-family="sans-serif" font-size="12" fill="black">"#);
    let bottom = f.y0 + f.height() + 16.0;
    let _ = writeln!(s, r#"<text x="{:.3}" y="{bottom:.3}" text-anchor="start">{}</text>"#, f.x0, window.x_min);
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{bottom:.3}" text-anchor="end">{}</text>"#,
        f.x0 + f.width(),
        window.x_max
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{}</text>"#,
        f.x0 - 4.0,
        f.y0 + f.height(),
        window.y_min
    );
    let _ = writeln!(s, r#"<text x="{:.3}" y="{:.3}" text-anchor="end">{}</text>"#, f.x0 - 4.0, f.y0 + 12.0, window.y_max);
    let _ = writeln!(s, "</g>");

    if !guides.is_empty() {
        let _ = writeln!(
            s,
            r##"<g class="guides" clip-path="url(#plot)" fill="none" stroke="#888888" stroke-dasharray="4 3">"##
        );
        for g in guides {
            let _ = writeln!(
                s,
                r#"<circle class="guide" data-label="{}" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
                escape(&g.label),
                f.x(g.center.re),
                f.y(g.center.im),
                g.radius * f.scale
            );
        }
        let _ = writeln!(s, "</g>");
    }

    let mut labels: Vec<&str> = Vec::new();
    for (label, _) in points {
        if !labels.contains(&label.as_str()) {
            labels.push(label);
        }
    }
    for (i, label) in labels.iter().enumerate() {
        let colour = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<g class="series" data-label="{}" clip-path="url(#plot)" fill="{colour}" stroke="black" stroke-width="0.5">"#,
            escape(label)
        );
        for (_, z) in points.iter().filter(|(l, _)| l == label) {
            let _ = writeln!(
                s,
                r#"<circle class="marker" cx="{:.3}" cy="{:.3}" r="{MARKER_RADIUS}"/>"#,
                f.x(z.re),
                f.y(z.im)
            );
        }
        let _ = writeln!(s, "</g>");
    }

    if !labels.is_empty() {
        let _ = writeln!(s, r#"<g class="legend" font-family="sans-serif" font-size="13">"#);
        for (i, label) in labels.iter().enumerate() {
            let y = MARGIN + 14.0 + 18.0 * i as f64;
            let x = CANVAS - MARGIN - 120.0;
            let _ = writeln!(
                s,
                r#"<rect x="{x:.3}" y="{:.3}" width="10" height="10" fill="{}" stroke="black" stroke-width="0.5"/><text x="{:.3}" y="{:.3}">{}</text>"#,
                y - 9.0,
                PALETTE[i % PALETTE.len()],
                x + 16.0,
                y,
                escape(label)
            );
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    s
}
