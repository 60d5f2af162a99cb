//! Minimal deterministic SVG charts: polyline CDFs and scatter-plus-fit
//! panels. Text-based output keeps reports diffable and dependency-free.

const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];
const PLOT_W: f64 = 420.0;
const PLOT_H: f64 = 260.0;
const MARGIN_L: f64 = 60.0;
const MARGIN_R: f64 = 20.0;
const MARGIN_T: f64 = 34.0;
const MARGIN_B: f64 = 46.0;

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

pub struct ScatterPanel {
    pub subtitle: String,
    pub points: Vec<(f64, f64)>,
    pub lines: Vec<Series>,
}

struct Range {
    lo: f64,
    hi: f64,
}

impl Range {
    fn of(values: impl Iterator<Item = f64>) -> Range {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() || !hi.is_finite() {
            return Range { lo: 0.0, hi: 1.0 };
        }
        if lo == hi {
            lo -= 0.5;
            hi += 0.5;
        }
        Range { lo, hi }
    }

    fn map(&self, v: f64, a: f64, b: f64) -> f64 {
        a + (v - self.lo) / (self.hi - self.lo) * (b - a)
    }
}

fn axes(out: &mut String, x: &Range, y: &Range, x_label: &str, y_label: &str, log_x: bool) {
    let x0 = MARGIN_L;
    let x1 = MARGIN_L + PLOT_W;
    let y0 = MARGIN_T + PLOT_H;
    let y1 = MARGIN_T;
    out.push_str(&format!(
        "<rect x=\"{x0:.2}\" y=\"{y1:.2}\" width=\"{PLOT_W:.2}\" height=\"{PLOT_H:.2}\" fill=\"none\" stroke=\"#333\"/>\n"
    ));
    for i in 0..5 {
        let f = i as f64 / 4.0;
        let xv = x.lo + f * (x.hi - x.lo);
        let xp = x.map(xv, x0, x1);
        let label = if log_x { format!("{:.0}", 10f64.powf(xv)) } else { format!("{xv:.1}") };
        out.push_str(&format!(
            "<line x1=\"{xp:.2}\" y1=\"{y0:.2}\" x2=\"{xp:.2}\" y2=\"{:.2}\" stroke=\"#333\"/>\n",
            y0 + 4.0
        ));
        out.push_str(&format!(
            "<text x=\"{xp:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"middle\">{label}</text>\n",
            y0 + 18.0
        ));
        let yv = y.lo + f * (y.hi - y.lo);
        let yp = y.map(yv, y0, y1);
        out.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{yp:.2}\" x2=\"{x0:.2}\" y2=\"{yp:.2}\" stroke=\"#333\"/>\n",
            x0 - 4.0
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\" text-anchor=\"end\">{yv:.1}</text>\n",
            x0 - 8.0,
            yp + 4.0
        ));
    }
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\">{x_label}</text>\n",
        x0 + PLOT_W / 2.0,
        y0 + 36.0
    ));
    out.push_str(&format!(
        "<text x=\"14\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 {:.2})\">{y_label}</text>\n",
        y1 + PLOT_H / 2.0,
        y1 + PLOT_H / 2.0
    ));
}

fn polyline(out: &mut String, pts: &[(f64, f64)], x: &Range, y: &Range, color: &str) {
    if pts.is_empty() {
        return;
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|&(px, py)| {
            format!(
                "{:.2},{:.2}",
                x.map(px, MARGIN_L, MARGIN_L + PLOT_W),
                y.map(py, MARGIN_T + PLOT_H, MARGIN_T)
            )
        })
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
        coords.join(" ")
    ));
}

fn legend(out: &mut String, labels: &[(String, &str)]) {
    for (i, (label, color)) in labels.iter().enumerate() {
        let y = MARGIN_T + 14.0 + 16.0 * i as f64;
        let x = MARGIN_L + PLOT_W - 130.0;
        out.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            x + 18.0
        ));
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"11\">{label}</text>\n",
            x + 24.0,
            y + 4.0
        ));
    }
}

/// Step-style chart of one or more empirical CDFs.
pub fn cdf_chart(title: &str, x_label: &str, series: &[Series]) -> String {
    let width = MARGIN_L + PLOT_W + MARGIN_R;
    let height = MARGIN_T + PLOT_H + MARGIN_B;
    let x = Range::of(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let y = Range { lo: 0.0, hi: 1.0 };
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    );
    out.push_str(&format!(
        "<text x=\"{:.2}\" y=\"20\" font-size=\"13\" text-anchor=\"middle\">{title}</text>\n",
        MARGIN_L + PLOT_W / 2.0
    ));
    axes(&mut out, &x, &y, x_label, "probability", false);
    let mut labels = Vec::new();
    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        polyline(&mut out, &s.points, &x, &y, color);
        labels.push((s.label.clone(), color));
    }
    legend(&mut out, &labels);
    out.push_str("</svg>\n");
    out
}

/// Stacked panels of path-loss scatter with fitted model lines over
/// log-distance.
pub fn pathloss_chart(title: &str, panels: &[ScatterPanel]) -> String {
    let width = MARGIN_L + PLOT_W + MARGIN_R;
    let panel_h = MARGIN_T + PLOT_H + MARGIN_B;
    let height = panel_h * panels.len() as f64;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    );
    for (p, panel) in panels.iter().enumerate() {
        out.push_str(&format!("<g transform=\"translate(0,{:.2})\">\n", p as f64 * panel_h));
        let x = Range::of(
            panel
                .points
                .iter()
                .map(|pt| pt.0)
                .chain(panel.lines.iter().flat_map(|l| l.points.iter().map(|pt| pt.0)))
                .map(|d| d.log10()),
        );
        let y = Range::of(
            panel
                .points
                .iter()
                .map(|pt| pt.1)
                .chain(panel.lines.iter().flat_map(|l| l.points.iter().map(|pt| pt.1))),
        );
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"20\" font-size=\"13\" text-anchor=\"middle\">{title} - {}</text>\n",
            MARGIN_L + PLOT_W / 2.0,
            panel.subtitle
        ));
        axes(&mut out, &x, &y, "distance (m)", "path loss (dB)", true);
        for &(d, pl) in &panel.points {
            out.push_str(&format!(
                "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#555\"/>\n",
                x.map(d.log10(), MARGIN_L, MARGIN_L + PLOT_W),
                y.map(pl, MARGIN_T + PLOT_H, MARGIN_T)
            ));
        }
        let mut labels = Vec::new();
        for (i, line) in panel.lines.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let pts: Vec<(f64, f64)> = line.points.iter().map(|&(d, pl)| (d.log10(), pl)).collect();
            polyline(&mut out, &pts, &x, &y, color);
            labels.push((line.label.clone(), color));
        }
        legend(&mut out, &labels);
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}
