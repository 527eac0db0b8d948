//! Periodic orbits of the Lorenz template as exact doubling-map orbits, the
//! positive braid they form on the branch line, and a deterministic SVG
//! drawing of the template.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::psl2::{Letter, LrWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LorenzError {
    #[error("{0} is a proper power")]
    NotPrimitive(LrWord),
    #[error("{0} uses a single letter and has no orbit in (0,1)")]
    SingleLetter(LrWord),
    #[error("orbits of {0} and {1} share a point")]
    SharedPoint(LrWord, LrWord),
    #[error("components {0} and {1} are not distinct components of the braid")]
    BadComponents(usize, usize),
}

/// A periodic orbit of `x ↦ 2x mod 1`, one point per rotation of its word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateOrbit {
    word: LrWord,
    /// Numerators over `2^|word| − 1`, in flow order.
    numerators: Vec<BigInt>,
}

fn mersenne(len: usize) -> BigInt {
    (BigInt::one() << len) - 1
}

impl TemplateOrbit {
    pub fn word(&self) -> &LrWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.numerators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numerators.is_empty()
    }

    /// Reduced fractions in flow order; point `i` doubles to point `i + 1`.
    pub fn points(&self) -> Vec<BigRational> {
        let den = mersenne(self.len());
        self.numerators
            .iter()
            .map(|n| BigRational::new(n.clone(), den.clone()))
            .collect()
    }

    /// Flow-order listing `a/b, c/d, ...`.
    pub fn listing(&self) -> String {
        self.points()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Reads each rotation of `w` as a binary fraction with `L ↦ 0`, `R ↦ 1`.
pub fn orbit_points(w: &LrWord) -> Result<TemplateOrbit, LorenzError> {
    if w.is_single_letter() {
        return Err(LorenzError::SingleLetter(w.clone()));
    }
    if !w.is_primitive() {
        return Err(LorenzError::NotPrimitive(w.clone()));
    }
    let letters = w.letters();
    let numerators = (0..letters.len())
        .map(|i| {
            letters[i..]
                .iter()
                .chain(&letters[..i])
                .fold(BigInt::zero(), |acc, l| {
                    (acc << 1usize) + u8::from(*l == Letter::R)
                })
        })
        .collect();
    Ok(TemplateOrbit {
        word: w.clone(),
        numerators,
    })
}

/// The first-return permutation of the branch line restricted to a union of
/// orbits. Strands are indexed by increasing position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LorenzBraid {
    /// Numerators of the strand positions over `2^period − 1`, increasing.
    positions: Vec<BigInt>,
    period: usize,
    permutation: Vec<usize>,
    component_of: Vec<usize>,
    words: Vec<LrWord>,
}

/// Merges orbits onto a common denominator and follows the doubling map.
pub fn lorenz_braid(orbits: &[TemplateOrbit]) -> Result<LorenzBraid, LorenzError> {
    let period = orbits.iter().fold(1usize, |acc, o| acc.lcm(&o.len()));
    let den = mersenne(period);
    let mut strands: Vec<(BigInt, usize)> = orbits
        .iter()
        .enumerate()
        .flat_map(|(c, o)| {
            let scale = &den / mersenne(o.len());
            o.numerators.iter().map(move |n| (n * &scale, c))
        })
        .collect();
    strands.sort();
    if let Some(w) = strands.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(LorenzError::SharedPoint(
            orbits[w[0].1].word.clone(),
            orbits[w[1].1].word.clone(),
        ));
    }
    let positions: Vec<BigInt> = strands.iter().map(|(n, _)| n.clone()).collect();
    let permutation = positions
        .iter()
        .map(|x| {
            let image = (x << 1usize) % &den;
            positions
                .binary_search(&image)
                .expect("orbits are closed under doubling")
        })
        .collect();
    Ok(LorenzBraid {
        positions,
        period,
        permutation,
        component_of: strands.iter().map(|&(_, c)| c).collect(),
        words: orbits.iter().map(|o| o.word.clone()).collect(),
    })
}

impl LorenzBraid {
    pub fn strand_count(&self) -> usize {
        self.permutation.len()
    }

    pub fn component_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[LrWord] {
        &self.words
    }

    /// 0-based image of each strand.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn component_of(&self) -> &[usize] {
        &self.component_of
    }

    /// Strand position as a reduced fraction.
    pub fn position(&self, strand: usize) -> BigRational {
        BigRational::new(self.positions[strand].clone(), mersenne(self.period))
    }

    /// `true` for strands in the left half of the branch line.
    pub fn is_left(&self, strand: usize) -> bool {
        (&self.positions[strand] << 1usize) < mersenne(self.period)
    }

    /// Strand pairs `(i, j)`, `i < j`, that cross once in the braid.
    pub fn crossings(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let p = &self.permutation;
        (0..p.len()).flat_map(move |i| {
            ((i + 1)..p.len())
                .filter(move |&j| p[i] > p[j])
                .map(move |j| (i, j))
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings().count()
    }

    /// Crossings between strands of `a` and `b` (`a == b` counts self-crossings).
    pub fn crossings_between(&self, a: usize, b: usize) -> usize {
        let c = &self.component_of;
        self.crossings()
            .filter(|&(i, j)| (c[i] == a && c[j] == b) || (c[i] == b && c[j] == a))
            .count()
    }

    pub fn linking_number(&self, a: usize, b: usize) -> Result<u64, LorenzError> {
        if a == b || a >= self.component_count() || b >= self.component_count() {
            return Err(LorenzError::BadComponents(a, b));
        }
        let n = self.crossings_between(a, b);
        debug_assert!(n.is_multiple_of(2), "closed positive braids cross in pairs");
        Ok(n as u64 / 2)
    }
}

impl fmt::Display for LorenzBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &j) in self.permutation.iter().enumerate() {
            writeln!(
                f,
                "{:>3} -> {:<3} {:<12} component {}",
                i + 1,
                j + 1,
                self.position(i).to_string(),
                self.component_of[i]
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SvgOptions {
    pub width: u32,
    pub height: u32,
    pub palette: Vec<String>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640,
            height: 420,
            palette: [
                "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
                "#17becf",
            ]
            .map(String::from)
            .to_vec(),
        }
    }
}

/// Template with the orbits drawn as a closed braid. Strands in the left
/// branch are painted last so they pass in front at every crossing.
pub fn render_svg(orbits: &[TemplateOrbit], opts: &SvgOptions) -> Result<String, LorenzError> {
    let braid = lorenz_braid(orbits)?;
    let (w, h) = (opts.width as i64, opts.height as i64);
    let m = braid.strand_count() as i64;
    let gap = 8i64;
    let margin = 40 + gap * m;
    let left = margin;
    let right = (w - margin).max(left + 100);
    let top = margin;
    let bottom = (h - margin).max(top + 100);
    let mid = (left + right) / 2;
    let den = mersenne(braid.period);
    let x_of = |num: &BigInt| -> i64 {
        let span = BigInt::from(right - left);
        left + (num * span / &den).to_i64().unwrap_or(0)
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##
    );
    let ear = (bottom - top) / 3;
    let _ = writeln!(
        s,
        r##"<polygon points="{left},{top} {mid},{top} {mid},{by} {right},{bottom} {left},{bottom}" fill="#eeeeee" stroke="#999999"/>"##,
        by = top + ear
    );
    let _ = writeln!(
        s,
        r##"<polygon points="{mid},{top} {right},{top} {right},{bottom} {left},{bottom} {mid},{by}" fill="#dddddd" stroke="#999999" fill-opacity="0.6"/>"##,
        by = top + ear
    );
    let _ = writeln!(
        s,
        r##"<line x1="{left}" y1="{top}" x2="{right}" y2="{top}" stroke="#000000" stroke-width="2"/>"##
    );

    let color = |c: usize| opts.palette[c % opts.palette.len()].as_str();
    // Closure arcs, nested so they never cross.
    for k in 0..braid.strand_count() {
        let x = x_of(&braid.positions[k]);
        let off = gap * (m - k as i64);
        let _ = writeln!(
            s,
            r#"<path d="M {x} {bottom} L {x} {yb} L {xr} {yb} L {xr} {yt} L {x} {yt} L {x} {top}" fill="none" stroke="{c}" stroke-width="2" stroke-opacity="0.5"/>"#,
            yb = bottom + off,
            xr = right + off,
            yt = top - off,
            c = color(braid.component_of[k])
        );
    }
    let mut order: Vec<usize> = (0..braid.strand_count()).collect();
    order.sort_by_key(|&k| braid.is_left(k));
    for k in order {
        let x0 = x_of(&braid.positions[k]);
        let x1 = x_of(&braid.positions[braid.permutation[k]]);
        let c1 = top + (bottom - top) / 3;
        let c2 = bottom - (bottom - top) / 3;
        let d = format!("M {x0} {top} C {x0} {c1} {x1} {c2} {x1} {bottom}");
        let _ = writeln!(
            s,
            r##"<path d="{d}" fill="none" stroke="#ffffff" stroke-width="6"/>"##
        );
        let _ = writeln!(
            s,
            r#"<path d="{d}" fill="none" stroke="{c}" stroke-width="2"/>"#,
            c = color(braid.component_of[k])
        );
    }
    for (c, word) in braid.words.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{x}" y="{y}" font-family="monospace" font-size="12" fill="{col}">{word}</text>"#,
            x = 8,
            y = 16 + 14 * c as i64,
            col = color(c)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
