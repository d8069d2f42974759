//! SVG rendering of polytopes in the coweight plane, for ranks 2 and 3.
//!
//! Rank 3 draws the simple coroots at 120° with unit length 60px and marks
//! the coroot-lattice points inside the hull; rank 2 renders on a
//! horizontal axis. Output is deterministic: coordinates are exact
//! rationals rounded to fixed 3-decimal pixels.

use std::fmt::Write as _;

use num_traits::{Signed, Zero};

use crate::polytope::Polytope;
use crate::weyl::{rat, Coweight, MomentPoint, Rat};
use crate::{Error, Result};

const UNIT: i64 = 60;
// √3 to nine decimals, kept rational for deterministic output
fn sqrt3() -> Rat {
    rat(1_732_050_808, 1_000_000_000)
}

/// Screen coordinates (y downwards) of a sum-zero point.
fn screen(p: &MomentPoint) -> (Rat, Rat) {
    let c = p.coords();
    // coroot coordinates: p = a·α∨ + b·β∨ (rank 3), or a·α∨ (rank 2)
    let a = c[0].clone();
    let b = if c.len() == 2 {
        Rat::zero()
    } else {
        -c[2].clone()
    };
    let x = rat(UNIT, 1) * (&a - &b / rat(2, 1));
    let y = -rat(UNIT, 1) * b * sqrt3() / rat(2, 1);
    (x, y)
}

/// Fixed 3-decimal formatting of an exact rational (round half away from
/// zero), so identical inputs give byte-identical SVG.
fn px(v: &Rat) -> String {
    let scaled = v * rat(1000, 1);
    let rounded = if scaled.is_negative() {
        -(-scaled + rat(1, 2)).floor()
    } else {
        (scaled + rat(1, 2)).floor()
    };
    let n = rounded.to_integer();
    let sign = if n.sign() == num_bigint::Sign::Minus {
        "-"
    } else {
        ""
    };
    let abs = n.magnitude().clone();
    let whole = &abs / 1000u32;
    let frac = &abs % 1000u32;
    format!("{}{}.{:03}", sign, whole, frac)
}

/// Renders the polytope to an SVG 1.1 document.
pub fn render_polytope(p: &Polytope) -> Result<String> {
    if p.rank() > 3 {
        return Err(Error::RankUnsupported {
            rank: p.rank(),
            limit: 3,
        });
    }
    let pts: Vec<(Rat, Rat)> = p.vertices().iter().map(screen).collect();
    let margin = rat(40, 1);
    let min_x = pts.iter().map(|q| q.0.clone()).min().unwrap() - &margin;
    let max_x = pts.iter().map(|q| q.0.clone()).max().unwrap() + &margin;
    let min_y = pts.iter().map(|q| q.1.clone()).min().unwrap() - &margin;
    let max_y = pts.iter().map(|q| q.1.clone()).max().unwrap() + &margin;
    let width = &max_x - &min_x;
    let height = &max_y - &min_y;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}">"#,
        px(&min_x),
        px(&min_y),
        px(&width),
        px(&height)
    )
    .unwrap();

    // hull outline in cyclic order (sorted by angle around the centroid)
    let outline = cyclic_order(&pts);
    if outline.len() >= 2 {
        let path: Vec<String> = outline
            .iter()
            .map(|q| format!("{},{}", px(&q.0), px(&q.1)))
            .collect();
        writeln!(
            svg,
            r##"  <polygon points="{}" fill="#dce6f5" stroke="#2b4a7d" stroke-width="2"/>"##,
            path.join(" ")
        )
        .unwrap();
    }

    // coroot-lattice points inside the hull
    for dot in lattice_dots(p) {
        let (x, y) = screen(&dot.to_moment_point());
        writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="3" fill="#888888"/>"##,
            px(&x),
            px(&y)
        )
        .unwrap();
    }

    // vertices on top
    for q in &pts {
        writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="5" fill="#c03636"/>"##,
            px(&q.0),
            px(&q.1)
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn cyclic_order(pts: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    if pts.len() <= 2 {
        return pts.to_vec();
    }
    let n = rat(pts.len() as i64, 1);
    let cx: Rat = pts.iter().map(|q| q.0.clone()).sum::<Rat>() / &n;
    let cy: Rat = pts.iter().map(|q| q.1.clone()).sum::<Rat>() / &n;
    let mut ordered = pts.to_vec();
    // exact angular sort: half-plane split then cross-product comparison
    ordered.sort_by(|a, b| {
        let (ax, ay) = (&a.0 - &cx, &a.1 - &cy);
        let (bx, by) = (&b.0 - &cx, &b.1 - &cy);
        let half = |x: &Rat, y: &Rat| !(y < &Rat::zero() || (y.is_zero() && x < &Rat::zero()));
        match (half(&ax, &ay), half(&bx, &by)) {
            (true, false) => std::cmp::Ordering::Less,
            (false, true) => std::cmp::Ordering::Greater,
            _ => {
                let cross = &ax * &by - &ay * &bx;
                if cross.is_positive() {
                    std::cmp::Ordering::Less
                } else if cross.is_negative() {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            }
        }
    });
    ordered
}

fn lattice_dots(p: &Polytope) -> Vec<Coweight> {
    // integer sum-zero points inside the hull, whatever the vertex levels
    let rank = p.rank();
    let mut lo = vec![i64::MAX; rank];
    let mut hi = vec![i64::MIN; rank];
    for v in p.vertices() {
        for (k, c) in v.coords().iter().enumerate() {
            lo[k] = lo[k].min(i64::try_from(c.floor().to_integer()).unwrap());
            hi[k] = hi[k].max(i64::try_from(c.ceil().to_integer()).unwrap());
        }
    }
    let mut out = Vec::new();
    let mut coords = vec![0i64; rank];
    fn rec(
        p: &Polytope,
        lo: &[i64],
        hi: &[i64],
        k: usize,
        coords: &mut Vec<i64>,
        out: &mut Vec<Coweight>,
    ) {
        if k == lo.len() - 1 {
            let rest = -coords[..k].iter().sum::<i64>();
            if rest >= lo[k] && rest <= hi[k] {
                coords[k] = rest;
                let cand = Coweight::new(coords.clone()).unwrap();
                if p.contains_coweight(&cand) {
                    out.push(cand);
                }
            }
            return;
        }
        for c in lo[k]..=hi[k] {
            coords[k] = c;
            rec(p, lo, hi, k + 1, coords, out);
        }
    }
    rec(p, &lo, &hi, 0, &mut coords, &mut out);
    out
}
