//! SVG 1.1 rendering of `F_n`: a staircase over nested translucent bands,
//! one band per `U_p` reaching up to height `Φ(p)`.
//!
//! Styling is fixed and coordinates are rounded to six decimals, so the
//! output is byte-stable.

use std::fmt::Write as _;

use crate::rational::{approx, Rational};
use crate::region::Region;
use crate::tietze::{Extension, PLFunction};
use crate::urysohn::{Family, FiberTable};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

fn px(x: f64) -> f64 {
    MARGIN + x * (WIDTH - 2.0 * MARGIN)
}

fn py(y: f64) -> f64 {
    HEIGHT - MARGIN - y * (HEIGHT - 2.0 * MARGIN)
}

fn num(v: f64) -> String {
    let s = format!("{:.6}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

struct Canvas {
    out: String,
}

impl Canvas {
    fn new(title: &str) -> Self {
        let mut out = String::new();
        let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
            num(WIDTH),
            num(HEIGHT),
            num(WIDTH),
            num(HEIGHT)
        );
        let _ = writeln!(out, "<title>{}</title>", escape(title));
        let _ = writeln!(
            out,
            r##"<rect x="0" y="0" width="{}" height="{}" fill="#ffffff"/>"##,
            num(WIDTH),
            num(HEIGHT)
        );
        let mut c = Canvas { out };
        c.axes();
        c
    }

    fn axes(&mut self) {
        let (x0, x1, y0, y1) = (px(0.0), px(1.0), py(0.0), py(1.0));
        let _ = writeln!(
            self.out,
            r##"<path d="M {} {} L {} {} M {} {} L {} {}" stroke="#888888" stroke-width="1" fill="none"/>"##,
            num(x0),
            num(y0),
            num(x1),
            num(y0),
            num(x0),
            num(y0),
            num(x0),
            num(y1)
        );
        for (t, label) in [(0.0, "0"), (0.5, "1/2"), (1.0, "1")] {
            let _ = writeln!(
                self.out,
                r##"<text x="{}" y="{}" font-family="monospace" font-size="11" text-anchor="middle" fill="#444444">{label}</text>"##,
                num(px(t)),
                num(py(0.0) + 16.0)
            );
            let _ = writeln!(
                self.out,
                r##"<text x="{}" y="{}" font-family="monospace" font-size="11" text-anchor="end" fill="#444444">{label}</text>"##,
                num(px(0.0) - 6.0),
                num(py(t) + 4.0)
            );
        }
    }

    fn band(&mut self, region: &Region, height: f64) {
        for p in region.parts() {
            let (x0, x1) = (px(approx(p.lo())), px(approx(p.hi())));
            let _ = writeln!(
                self.out,
                r##"<rect x="{}" y="{}" width="{}" height="{}" fill="#3b6fb6" fill-opacity="0.12"/>"##,
                num(x0),
                num(py(height)),
                num(x1 - x0),
                num(py(0.0) - py(height))
            );
        }
    }

    fn marks(&mut self, region: &Region, y: f64, colour: &str) {
        for p in region.parts() {
            let (x0, x1) = (px(approx(p.lo())), px(approx(p.hi())));
            let _ = writeln!(
                self.out,
                r#"<rect x="{}" y="{}" width="{}" height="4" fill="{colour}"/>"#,
                num(x0),
                num(py(y) - 2.0),
                num((x1 - x0).max(1.0))
            );
        }
    }

    fn staircase(&mut self, table: &FiberTable) {
        let mut d = String::new();
        for (i, (p, v)) in table.pieces().iter().enumerate() {
            let y = num(py(v.to_f64()));
            if i == 0 {
                let _ = write!(d, "M {} {y}", num(px(approx(p.lo()))));
            } else {
                let _ = write!(d, " V {y}");
            }
            let _ = write!(d, " H {}", num(px(approx(p.hi()))));
        }
        let _ = writeln!(
            self.out,
            r##"<path d="{d}" stroke="#111111" stroke-width="2" fill="none"/>"##
        );
    }

    fn function(&mut self, f: &PLFunction) {
        for g in f.pieces() {
            let pts: Vec<String> = g
                .iter()
                .map(|(x, y): &(Rational, Rational)| {
                    format!("{},{}", num(px(approx(x))), num(py(approx(y))))
                })
                .collect();
            if pts.len() == 1 {
                let (x, y) = pts[0].split_once(',').expect("pair");
                let _ = writeln!(
                    self.out,
                    r##"<circle cx="{x}" cy="{y}" r="3" fill="#c0392b"/>"##
                );
            } else {
                let _ = writeln!(
                    self.out,
                    r##"<polyline points="{}" stroke="#c0392b" stroke-width="1.5" fill="none"/>"##,
                    pts.join(" ")
                );
            }
        }
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn bands_of(c: &mut Canvas, fam: &Family) {
    // widest first so the smaller sets stack on top
    c.band(fam.top(), 1.0);
    for (i, u) in fam.opens().iter().rev() {
        c.band(u, i.phi().to_f64());
    }
}

/// `F_n` of a family over its bands, with `A` and `B` marked on the axis lines.
pub fn family_svg(fam: &Family) -> String {
    let mut c = Canvas::new(&format!(
        "F_{} for A = {}, B = {}",
        fam.depth(),
        fam.a(),
        fam.b()
    ));
    bands_of(&mut c, fam);
    c.marks(fam.a(), 0.0, "#c0392b");
    c.marks(fam.b(), 1.0, "#27ae60");
    c.staircase(&fam.fibers());
    c.finish()
}

/// The extension's staircase (when it has one) with the input function drawn on top.
pub fn extension_svg(ext: &Extension) -> String {
    let mut c = Canvas::new(&format!(
        "extension ({}) of f on E = {}",
        ext.route(),
        ext.input().domain()
    ));
    if let Some(fam) = ext.family() {
        bands_of(&mut c, fam);
        c.staircase(&fam.fibers());
    }
    c.function(ext.input());
    c.finish()
}

/// A bare staircase for any fiber table.
pub fn staircase_svg(title: &str, table: &FiberTable) -> String {
    let mut c = Canvas::new(title);
    c.staircase(table);
    c.finish()
}
