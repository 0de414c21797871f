//! Tabulation of a curve on a rational grid, as CSV or an SVG sketch.

use std::fmt::Write as _;

use serde::Serialize;

use phcurves::algebra::{format_rational, rational_to_f64, Rational};
use phcurves::{CurveKind, CurveSolution};

use crate::error::Failure;

/// Grid sizes beyond this are rejected rather than evaluated.
pub const MAX_SAMPLES: usize = 1_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct SampleRow {
    #[serde(with = "phcurves::serde_util::rational")]
    pub t: Rational,
    #[serde(with = "phcurves::serde_util::rational_vec")]
    pub point: Vec<Rational>,
    #[serde(
        with = "phcurves::serde_util::rational_opt",
        skip_serializing_if = "Option::is_none"
    )]
    pub s: Option<Rational>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Samples {
    pub kind: CurveKind,
    pub rows: Vec<SampleRow>,
}

pub fn sample_curve(
    c: &CurveSolution,
    from: &Rational,
    to: &Rational,
    step: &Rational,
) -> Result<Samples, Failure> {
    if step <= &Rational::from_integer(0.into()) {
        return Err(Failure::invalid("step must be positive"));
    }
    if to < from {
        return Err(Failure::invalid("empty sampling interval"));
    }
    let n = (to - from) / step;
    if !n.is_integer() {
        return Err(Failure::invalid(
            "step does not divide the sampling interval",
        ));
    }
    let n: usize = n
        .to_integer()
        .to_string()
        .parse()
        .ok()
        .filter(|&n: &usize| n < MAX_SAMPLES)
        .ok_or_else(|| Failure::invalid("too many samples"))?;
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let t = from + step * Rational::from_integer(i.into());
        let q = c
            .eval(&t)
            .ok_or_else(|| Failure::invalid(format!("pole at t = {}", format_rational(&t))))?;
        let s = match c.kind {
            CurveKind::ArcLength => Some(q.w.clone()),
            CurveKind::PhOnly => None,
        };
        rows.push(SampleRow {
            t,
            point: vec![q.x, q.y, q.z],
            s,
        });
    }
    Ok(Samples { kind: c.kind, rows })
}

fn decimal(r: &Rational) -> String {
    format!("{:.12e}", rational_to_f64(r))
}

pub fn samples_csv(samples: &Samples) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = [
        "t",
        "t_decimal",
        "x",
        "x_decimal",
        "y",
        "y_decimal",
        "z",
        "z_decimal",
        "s",
        "s_decimal",
    ];
    w.write_record(header).map_err(Failure::invalid)?;
    for row in &samples.rows {
        let mut rec = vec![format_rational(&row.t), decimal(&row.t)];
        for v in &row.point {
            rec.push(format_rational(v));
            rec.push(decimal(v));
        }
        match &row.s {
            Some(s) => {
                rec.push(format_rational(s));
                rec.push(decimal(s));
            }
            None => rec.extend([String::new(), String::new()]),
        }
        w.write_record(&rec).map_err(Failure::invalid)?;
    }
    w.into_inner().map_err(|e| Failure::invalid(e.to_string()))
}

const PANEL: f64 = 300.0;
const MARGIN: f64 = 20.0;

/// Three orthographic projections (xy, xz, yz) side by side.
pub fn samples_svg(samples: &Samples) -> String {
    let pts: Vec<[f64; 3]> = samples
        .rows
        .iter()
        .map(|r| [0, 1, 2].map(|i| rational_to_f64(&r.point[i])))
        .collect();
    let width = 3.0 * PANEL + 4.0 * MARGIN;
    let height = PANEL + 2.0 * MARGIN + 16.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    for (panel, (i, j, name)) in [(0, 1, "xy"), (0, 2, "xz"), (1, 2, "yz")]
        .into_iter()
        .enumerate()
    {
        let x0 = MARGIN + panel as f64 * (PANEL + MARGIN);
        let y0 = MARGIN + 16.0;
        let _ = writeln!(
            out,
            r##"  <rect x="{x0:.2}" y="{y0:.2}" width="{PANEL:.2}" height="{PANEL:.2}" fill="none" stroke="#999"/>"##
        );
        let _ = writeln!(
            out,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{name}</text>"#,
            x0,
            y0 - 4.0
        );
        let us: Vec<f64> = pts.iter().map(|p| p[i]).collect();
        let vs: Vec<f64> = pts.iter().map(|p| p[j]).collect();
        let (umin, umax) = bounds(&us);
        let (vmin, vmax) = bounds(&vs);
        let span = (umax - umin).max(vmax - vmin);
        let scale = if span > 0.0 {
            (PANEL - 10.0) / span
        } else {
            1.0
        };
        let (uc, vc) = ((umin + umax) / 2.0, (vmin + vmax) / 2.0);
        let mut path = String::new();
        for (k, (u, v)) in us.iter().zip(&vs).enumerate() {
            let px = x0 + PANEL / 2.0 + (u - uc) * scale;
            let py = y0 + PANEL / 2.0 - (v - vc) * scale;
            let _ = write!(path, "{}{px:.3},{py:.3}", if k == 0 { "M" } else { " L" });
        }
        let _ = writeln!(
            out,
            r##"  <path d="{path}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>"##
        );
    }
    out.push_str("</svg>\n");
    out
}

fn bounds(v: &[f64]) -> (f64, f64) {
    let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if lo.is_finite() {
        (lo, hi)
    } else {
        (0.0, 0.0)
    }
}
