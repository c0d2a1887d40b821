use std::fmt::Write as _;

use super::SweepRow;
use crate::error::{Error, Result};

/// A polyline in data coordinates.
#[derive(Clone, Debug)]
pub struct Series {
    pub label: String,
    pub color: &'static str,
    pub points: Vec<(f64, f64)>,
}

/// Minimal line chart rendered to standalone SVG.
#[derive(Clone, Debug)]
pub struct LineChart {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub series: Vec<Series>,
}

const W: f64 = 640.0;
const H: f64 = 420.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn tick_label(v: f64) -> String {
    if v == v.round() && v.abs() < 1e9 {
        format!("{}", v as i64)
    } else {
        format!("{v:.2}")
    }
}

impl LineChart {
    pub fn to_svg(&self) -> String {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        let pw = W - LEFT - RIGHT;
        let ph = H - TOP - BOTTOM;
        let sx = |x: f64| LEFT + (x - x0) / (x1 - x0).max(f64::MIN_POSITIVE) * pw;
        let sy = |y: f64| TOP + ph - (y - y0) / (y1 - y0).max(f64::MIN_POSITIVE) * ph;

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
        );
        let _ = writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
        let _ = writeln!(
            out,
            r#"<text x="{}" y="22" text-anchor="middle" font-size="14">{}</text>"#,
            LEFT + pw / 2.0,
            escape(&self.title)
        );
        let _ = writeln!(
            out,
            r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
        );
        for i in 0..=5 {
            let f = i as f64 / 5.0;
            let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
            let (px, py) = (sx(xv), sy(yv));
            let _ = writeln!(
                out,
                r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
                TOP + ph,
                TOP + ph + 5.0,
                TOP + ph + 18.0,
                tick_label(xv)
            );
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
                LEFT - 5.0,
                LEFT - 8.0,
                py + 4.0,
                tick_label(yv)
            );
        }
        let _ = writeln!(
            out,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + pw / 2.0,
            H - 12.0,
            escape(&self.x_label)
        );
        let _ = writeln!(
            out,
            r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
            TOP + ph / 2.0,
            TOP + ph / 2.0,
            escape(&self.y_label)
        );
        for (k, s) in self.series.iter().enumerate() {
            let pts: Vec<String> = s
                .points
                .iter()
                .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let _ = writeln!(
                out,
                r#"<polyline fill="none" stroke="{}" stroke-width="1.5" points="{}"/>"#,
                s.color,
                pts.join(" ")
            );
            for p in &pts {
                let (cx, cy) = p.split_once(',').expect("formatted pair");
                let _ = writeln!(
                    out,
                    r#"<circle cx="{cx}" cy="{cy}" r="2" fill="{}"/>"#,
                    s.color
                );
            }
            let ly = TOP + 10.0 + 18.0 * k as f64;
            let lx = W - RIGHT + 12.0;
            let _ = writeln!(
                out,
                r#"<line x1="{lx}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="2"/><text x="{}" y="{}">{}</text>"#,
                lx + 20.0,
                s.color,
                lx + 26.0,
                ly + 4.0,
                escape(&s.label)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

fn y_max(series: &[Series]) -> f64 {
    series
        .iter()
        .flat_map(|s| s.points.iter().map(|p| p.1))
        .fold(1.0, f64::max)
}

/// Mean `s⁺` (blue) and `s⁻` (red) against `p`.
pub fn energy_by_p_chart(rows: &[SweepRow]) -> Result<LineChart> {
    let first = rows.first().ok_or(Error::Empty("no sweep rows to plot"))?;
    let series = vec![
        Series {
            label: "s+".into(),
            color: "blue",
            points: rows.iter().map(|r| (r.p, r.mean_s_plus)).collect(),
        },
        Series {
            label: "s-".into(),
            color: "red",
            points: rows.iter().map(|r| (r.p, r.mean_s_minus)).collect(),
        },
    ];
    Ok(LineChart {
        title: format!("Average square energies of G({}, p)", first.n),
        x_label: "p".into(),
        y_label: "average square energies".into(),
        x_range: (0.0, 1.0),
        y_range: (0.0, y_max(&series)),
        series,
    })
}

/// Mean `s⁻` against mean `m`, with the upper bounds `2m − n + 1`, `n²/4` and
/// `2m − 4m²/n²`.
pub fn s_minus_bounds_chart(rows: &[SweepRow]) -> Result<LineChart> {
    let first = rows.first().ok_or(Error::Empty("no sweep rows to plot"))?;
    let n = first.n as f64;
    let m_max = n * (n - 1.0) / 2.0;
    let grid: Vec<f64> = (0..=100).map(|i| m_max * i as f64 / 100.0).collect();
    let series = vec![
        Series {
            label: "mean s-".into(),
            color: "blue",
            points: rows.iter().map(|r| (r.mean_m, r.mean_s_minus)).collect(),
        },
        Series {
            label: "2m - n + 1".into(),
            color: "green",
            points: vec![(n - 1.0, n - 1.0), (m_max, 2.0 * m_max - n + 1.0)],
        },
        Series {
            label: "n^2/4".into(),
            color: "red",
            points: vec![(0.0, n * n / 4.0), (m_max, n * n / 4.0)],
        },
        Series {
            label: "2m - 4m^2/n^2".into(),
            color: "brown",
            points: grid
                .iter()
                .map(|&m| (m, 2.0 * m - 4.0 * m * m / (n * n)))
                .collect(),
        },
    ];
    Ok(LineChart {
        title: format!("Upper bounds for s- and sampled s-, n = {}", first.n),
        x_label: "m".into(),
        y_label: "negative square energy".into(),
        x_range: (0.0, m_max.max(1.0)),
        y_range: (0.0, y_max(&series)),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::random_sweep;

    #[test]
    fn charts_render() {
        let rows = random_sweep(20, &[0.0, 0.5, 1.0], 2, 3).unwrap();
        let a = energy_by_p_chart(&rows).unwrap().to_svg();
        assert!(a.starts_with("<svg") && a.ends_with("</svg>\n"));
        assert!(a.contains(r#"stroke="blue""#) && a.contains(r#"stroke="red""#));
        let b = s_minus_bounds_chart(&rows).unwrap();
        assert_eq!(b.series.len(), 4);
        assert!(b.to_svg().contains("brown"));
        assert!(energy_by_p_chart(&[]).is_err());
    }
}
