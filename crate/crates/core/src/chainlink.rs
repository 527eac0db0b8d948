//! Augmented chainlinks as planar diagrams.
//!
//! The Whitehead link is drawn on a flat annulus (a strip of width `W` whose
//! ends are glued): one component is a ring lying in the annulus, clasped to
//! itself across the seam, and the other is the branch axis, drawn as a small
//! loop that passes over the band on one side and under it on the other. The
//! `n`-fold cyclic cover branched over the axis is then `n` copies of the
//! ring laid side by side on an `n`-times longer annulus, each clasped to the
//! next, with the axis lifting to a single loop.
//!
//! Geometry uses integer strip coordinates; the strip maps to the plane by
//! an annulus with `x` running counter-clockwise and `y` pointing inward,
//! which preserves orientation, so crossing signs computed in the strip are
//! planar signs.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use num_rational::Ratio;
use thiserror::Error;

use crate::par;

/// Width of one sector of the annulus.
pub const SECTOR_WIDTH: i64 = 20;
const BAND_TOP: i64 = 12;
const AXIS_UP: i64 = 17;
const AXIS_DOWN: i64 = 19;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainlinkError {
    #[error("signed crossing sum {sum} between components {a} and {b} is odd")]
    OddLinking { a: usize, b: usize, sum: i64 },
    #[error("no consistent DT labelling exists for this diagram")]
    NoDtLabelling,
    #[error("no deletion set of size {size} leaves pairwise unlinked components of C{n}")]
    NoDeletionSet { n: usize, size: usize },
    #[error("a chainlink needs at least {min} chain components, got {got}")]
    TooSmall { min: usize, got: usize },
}

type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Segment {
    from: (i64, i64),
    to: (i64, i64),
    /// Relative height above the projection plane; decides over/under.
    height: i8,
}

fn seg(from: (i64, i64), to: (i64, i64), height: i8) -> Segment {
    Segment { from, to, height }
}

/// One ring, clasped at its right end around the left end of the ring in
/// the next sector, in unwrapped coordinates starting at `base`.
fn ring(base: i64) -> Vec<Segment> {
    let b = base;
    vec![
        seg((b + 4, 4), (b + 12, 4), 0),
        seg((b + 12, 4), (b + 16, 2), 0),
        seg((b + 16, 2), (b + 28, 2), 0),
        seg((b + 28, 2), (b + 28, 6), 1),
        seg((b + 28, 6), (b + 28, 10), -1),
        seg((b + 28, 10), (b + 16, 10), 0),
        seg((b + 16, 10), (b + 12, 8), 0),
        seg((b + 12, 8), (b + 4, 8), 0),
        seg((b + 4, 8), (b + 4, 4), 0),
    ]
}

fn axis_loop() -> Vec<Segment> {
    vec![
        seg((AXIS_UP, 0), (AXIS_UP, BAND_TOP), 2),
        seg((AXIS_UP, BAND_TOP), (AXIS_DOWN, BAND_TOP), 0),
        seg((AXIS_DOWN, BAND_TOP), (AXIS_DOWN, 0), -2),
        seg((AXIS_DOWN, 0), (AXIS_UP, 0), 0),
    ]
}

/// A straight piece of a component lying inside one period of the strip.
#[derive(Clone, Debug)]
struct Piece {
    a: (Q, Q),
    b: (Q, Q),
    height: i8,
}

fn wrap_segment(s: &Segment, period: i64) -> Vec<Piece> {
    let (x0, y0) = s.from;
    let (x1, y1) = s.to;
    let at = |x: Q| -> (Q, Q) {
        if x1 == x0 {
            (x, Q::from(y0))
        } else {
            let t = (x - Q::from(x0)) / Q::from(x1 - x0);
            (x, Q::from(y0) + t * Q::from(y1 - y0))
        }
    };
    let (lo, hi) = (x0.min(x1), x0.max(x1));
    let mut cuts: Vec<i64> = (lo.div_euclid(period) + 1..=hi.div_euclid(period))
        .map(|k| k * period)
        .filter(|&c| c > lo && c < hi)
        .collect();
    if x1 < x0 {
        cuts.reverse();
    }
    let mut points = vec![(Q::from(x0), Q::from(y0))];
    points.extend(cuts.into_iter().map(|c| at(Q::from(c))));
    points.push((Q::from(x1), Q::from(y1)));
    points
        .windows(2)
        .map(|w| {
            let mid = (w[0].0 + w[1].0) / 2;
            let shift = Q::from(mid.floor().to_integer().div_euclid(period) * period);
            Piece {
                a: (w[0].0 - shift, w[0].1),
                b: (w[1].0 - shift, w[1].1),
                height: s.height,
            }
        })
        .collect()
}

fn cross(u: (Q, Q), v: (Q, Q)) -> Q {
    u.0 * v.1 - u.1 * v.0
}

fn sub(u: (Q, Q), v: (Q, Q)) -> (Q, Q) {
    (u.0 - v.0, u.1 - v.1)
}

/// Parameters `(t, u)` of a transverse interior crossing of two pieces.
fn intersect(p: &Piece, q: &Piece) -> Option<(Q, Q)> {
    let r = sub(p.b, p.a);
    let s = sub(q.b, q.a);
    let den = cross(r, s);
    if den == Q::from(0) {
        return None;
    }
    let d = sub(q.a, p.a);
    let t = cross(d, s) / den;
    let u = cross(d, r) / den;
    let zero = Q::from(0);
    let one = Q::from(1);
    (t > zero && t < one && u > zero && u < one).then_some((t, u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pass {
    crossing: usize,
    over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct GeometricCrossing {
    /// `(component, position along it)` of the over and under strands.
    over: (usize, usize),
    under: (usize, usize),
    sign: i8,
}

/// A closed diagram on the annulus with its crossings resolved.
#[derive(Clone, Debug)]
struct Diagram {
    period: i64,
    components: Vec<Vec<Piece>>,
    crossings: Vec<GeometricCrossing>,
    passes: Vec<Vec<Pass>>,
}

impl Diagram {
    fn new(period: i64, components: &[Vec<Segment>]) -> Diagram {
        let pieces: Vec<Vec<Piece>> = components
            .iter()
            .map(|c| c.iter().flat_map(|s| wrap_segment(s, period)).collect())
            .collect();
        // Global piece list with (component, index).
        let flat: Vec<(usize, usize)> = pieces
            .iter()
            .enumerate()
            .flat_map(|(c, ps)| (0..ps.len()).map(move |i| (c, i)))
            .collect();
        let mut raw = Vec::new();
        for (ai, &(ca, ia)) in flat.iter().enumerate() {
            for &(cb, ib) in &flat[ai + 1..] {
                let (p, q) = (&pieces[ca][ia], &pieces[cb][ib]);
                if let Some((t, u)) = intersect(p, q) {
                    assert_ne!(
                        p.height, q.height,
                        "crossing between strands at equal height"
                    );
                    raw.push(((ca, ia, t), (cb, ib, u), p.height > q.height));
                }
            }
        }
        let mut crossings = Vec::with_capacity(raw.len());
        let mut along: Vec<Vec<((usize, Q), Pass)>> = vec![Vec::new(); pieces.len()];
        for (k, ((ca, ia, t), (cb, ib, u), a_over)) in raw.into_iter().enumerate() {
            let (over, under) = if a_over {
                ((ca, ia), (cb, ib))
            } else {
                ((cb, ib), (ca, ia))
            };
            let dir = |(c, i): (usize, usize)| sub(pieces[c][i].b, pieces[c][i].a);
            let o_cross_u = cross(dir(over), dir(under));
            let sign = if o_cross_u > Q::from(0) { 1 } else { -1 };
            along[ca].push((
                (ia, t),
                Pass {
                    crossing: k,
                    over: a_over,
                },
            ));
            along[cb].push((
                (ib, u),
                Pass {
                    crossing: k,
                    over: !a_over,
                },
            ));
            crossings.push(GeometricCrossing { over, under, sign });
        }
        let passes: Vec<Vec<Pass>> = along
            .into_iter()
            .map(|mut v| {
                v.sort_by_key(|a| a.0);
                v.into_iter().map(|(_, p)| p).collect()
            })
            .collect();
        // Replace piece indices by pass positions.
        for (c, ps) in passes.iter().enumerate() {
            for (pos, p) in ps.iter().enumerate() {
                let g = &mut crossings[p.crossing];
                if p.over {
                    g.over = (c, pos);
                } else {
                    g.under = (c, pos);
                }
            }
        }
        Diagram {
            period,
            components: pieces,
            crossings,
            passes,
        }
    }

    fn pd_code(&self) -> PdCode {
        let mut offset = Vec::with_capacity(self.passes.len());
        let mut total = 0u32;
        for ps in &self.passes {
            offset.push(total);
            total += ps.len() as u32;
        }
        // Edge `k` of component `c` runs from pass `k` to pass `k + 1`.
        let edge = |c: usize, k: isize| -> u32 {
            let m = self.passes[c].len() as isize;
            offset[c] + k.rem_euclid(m) as u32 + 1
        };
        let crossings = self
            .crossings
            .iter()
            .map(|g| {
                let (uc, uk) = g.under;
                let (oc, ok) = g.over;
                let (ui, uo) = (edge(uc, uk as isize - 1), edge(uc, uk as isize));
                let (oi, oo) = (edge(oc, ok as isize - 1), edge(oc, ok as isize));
                let labels = if g.sign > 0 {
                    [ui, oo, uo, oi]
                } else {
                    [ui, oi, uo, oo]
                };
                PdCrossing {
                    labels,
                    sign: g.sign,
                }
            })
            .collect();
        let component_of = self
            .passes
            .iter()
            .enumerate()
            .flat_map(|(c, ps)| std::iter::repeat_n(c, ps.len()))
            .collect();
        PdCode {
            crossings,
            component_of,
            passes: self.passes.clone(),
        }
    }
}

/// One sector pattern of the annulus together with the position of the
/// branch axis. `copies` sectors are laid side by side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnularTangle {
    copies: usize,
}

/// A crossing of the annular pattern: `(ring, pass index along the ring)`
/// of each strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangleCrossing {
    pub over: (usize, usize),
    pub under: (usize, usize),
    pub sign: i8,
}

impl AnnularTangle {
    /// The Whitehead link: one self-clasped ring around the axis.
    pub fn whitehead() -> Self {
        AnnularTangle { copies: 1 }
    }

    /// The `a`-fold cyclic cover of the pattern as a pattern.
    pub fn cover(&self, a: usize) -> Self {
        assert!(a >= 1, "cover degree is positive");
        AnnularTangle {
            copies: self.copies * a,
        }
    }

    pub fn period(&self) -> i64 {
        SECTOR_WIDTH * self.copies as i64
    }

    pub fn ring_count(&self) -> usize {
        self.copies
    }

    fn rings(&self) -> Vec<Vec<Segment>> {
        (0..self.copies as i64)
            .map(|j| ring(j * SECTOR_WIDTH))
            .collect()
    }

    /// Crossings of the rings among themselves, ignoring the axis.
    pub fn crossings(&self) -> Vec<TangleCrossing> {
        let d = Diagram::new(self.period(), &self.rings());
        d.crossings
            .iter()
            .map(|g| TangleCrossing {
                over: g.over,
                under: g.under,
                sign: g.sign,
            })
            .collect()
    }

    /// Heights and directions (`±1` in x) of strands crossing the seam.
    /// The left and right boundaries are the same list, glued.
    pub fn boundary(&self) -> Vec<(i64, i8)> {
        self.crossings_of_line(self.period())
    }

    /// Signed count of ring strands crossing the branch ray.
    pub fn axis_winding(&self) -> i64 {
        self.crossings_of_line(AXIS_UP + 1)
            .iter()
            .map(|&(_, d)| d as i64)
            .sum()
    }

    fn crossings_of_line(&self, x: i64) -> Vec<(i64, i8)> {
        let p = self.period();
        let x = x.rem_euclid(p);
        let mut out: Vec<(i64, i8)> = self
            .rings()
            .iter()
            .flatten()
            .flat_map(|s| wrap_segment(s, p))
            .filter_map(|pc| {
                let xq = Q::from(x);
                let (lo, hi) = if pc.a.0 < pc.b.0 {
                    (pc.a.0, pc.b.0)
                } else {
                    (pc.b.0, pc.a.0)
                };
                let straddles = (lo < xq && xq < hi) || (x == 0 && hi == Q::from(p) && lo < hi);
                (straddles && pc.a.1 == pc.b.1)
                    .then(|| (pc.a.1.to_integer(), if pc.b.0 > pc.a.0 { 1 } else { -1 }))
            })
            .collect();
        out.sort();
        out
    }

    fn closed(&self) -> Diagram {
        let mut comps = vec![axis_loop()];
        comps.extend(self.rings());
        Diagram::new(self.period(), &comps)
    }

    /// The closed diagram of the `n`-fold cover, axis first.
    pub fn unroll(&self, n: usize) -> PdCode {
        self.cover(n).closed().pd_code()
    }

    /// SVG drawing of the `n`-fold cover on a round annulus.
    pub fn render_svg(&self, n: usize) -> String {
        render(&self.cover(n).closed())
    }
}

/// `X[a, b, c, d]`: labels counter-clockwise from the incoming under-strand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PdCrossing {
    pub labels: [u32; 4],
    /// `+1` for a right-handed crossing.
    pub sign: i8,
}

impl PdCrossing {
    pub fn over_labels(&self) -> [u32; 2] {
        [self.labels[1], self.labels[3]]
    }
}

/// Planar diagram code. Edge labels run `1..=2C` and are contiguous along
/// each component, the axis being component 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<PdCrossing>,
    component_of: Vec<usize>,
    passes: Vec<Vec<Pass>>,
}

impl PdCode {
    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.passes.len()
    }

    /// Component of each edge label (index `label − 1`).
    pub fn component_of(&self) -> &[usize] {
        &self.component_of
    }

    /// Every label occurs exactly twice and the labels form closed cycles
    /// matching the component count.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = vec![0u8; self.component_of.len()];
        for c in &self.crossings {
            for &l in &c.labels {
                match seen.get_mut(l as usize - 1) {
                    Some(s) => *s += 1,
                    None => return false,
                }
            }
        }
        if seen.iter().any(|&s| s != 2) {
            return false;
        }
        // Follow each component along its under/over passages.
        let mut next = vec![0u32; self.component_of.len() + 1];
        for c in &self.crossings {
            let [a, b, cc, d] = c.labels;
            next[a as usize] = cc;
            if c.sign > 0 {
                next[d as usize] = b;
            } else {
                next[b as usize] = d;
            }
        }
        let mut visited = vec![false; next.len()];
        let mut cycles = 0;
        for start in 1..next.len() {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut l = start;
            while !visited[l] {
                visited[l] = true;
                if self.component_of[l - 1] != self.component_of[start - 1] {
                    return false;
                }
                l = next[l] as usize;
            }
        }
        cycles == self.component_count()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn linking_matrix(&self) -> Result<LinkingMatrix, ChainlinkError> {
        let k = self.component_count();
        let mut sums = vec![vec![0i64; k]; k];
        for c in &self.crossings {
            let a = self.component_of[c.labels[0] as usize - 1];
            let b = self.component_of[c.labels[1] as usize - 1];
            if a != b {
                sums[a][b] += c.sign as i64;
                sums[b][a] += c.sign as i64;
            }
        }
        for (a, row) in sums.iter().enumerate() {
            if let Some((b, &sum)) = row
                .iter()
                .enumerate()
                .skip(a + 1)
                .find(|(_, s)| *s % 2 != 0)
            {
                return Err(ChainlinkError::OddLinking { a, b, sum });
            }
        }
        Ok(LinkingMatrix(
            sums.into_iter()
                .map(|row| row.into_iter().map(|s| s / 2).collect())
                .collect(),
        ))
    }

    /// Dowker–Thistlethwaite code, one tuple per component. Passes are
    /// numbered `1..=2C` along the components in order, each component
    /// starting at an odd number, and every crossing pairs an odd with an
    /// even number. The even number is negated when it is the over-strand.
    pub fn dt_code(&self) -> Result<Vec<Vec<i64>>, ChainlinkError> {
        let k = self.passes.len();
        let mut pos: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.crossings.len()];
        for (c, ps) in self.passes.iter().enumerate() {
            for (i, p) in ps.iter().enumerate() {
                pos[p.crossing].push((c, i));
            }
        }
        // flip[c] shifts the starting pass of component c by one.
        let mut constraints: Vec<Vec<(usize, bool)>> = vec![Vec::new(); k];
        for pair in &pos {
            let [(c, i), (d, j)] = [pair[0], pair[1]];
            let differ = (i + j) % 2 == 0;
            if c == d {
                if differ {
                    return Err(ChainlinkError::NoDtLabelling);
                }
            } else {
                constraints[c].push((d, differ));
                constraints[d].push((c, differ));
            }
        }
        let mut flip: Vec<Option<bool>> = vec![None; k];
        for root in 0..k {
            if flip[root].is_some() {
                continue;
            }
            flip[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(c) = queue.pop_front() {
                let fc = flip[c].expect("assigned");
                for &(d, differ) in &constraints[c] {
                    let want = fc ^ differ;
                    match flip[d] {
                        None => {
                            flip[d] = Some(want);
                            queue.push_back(d);
                        }
                        Some(f) if f != want => return Err(ChainlinkError::NoDtLabelling),
                        Some(_) => {}
                    }
                }
            }
        }
        let mut label = vec![Vec::new(); k];
        let mut base = 0i64;
        for (c, ps) in self.passes.iter().enumerate() {
            let m = ps.len() as i64;
            let f = i64::from(flip[c] == Some(true));
            label[c] = (0..m).map(|i| base + (i - f).rem_euclid(m) + 1).collect();
            base += m;
        }
        let mut partner: BTreeMap<i64, i64> = BTreeMap::new();
        for pair in &pos {
            let [(c, i), (d, j)] = [pair[0], pair[1]];
            let (li, lj) = (label[c][i], label[d][j]);
            let ((odd, _), (even, (ec, ei))) = if li % 2 == 1 {
                ((li, (c, i)), (lj, (d, j)))
            } else {
                ((lj, (d, j)), (li, (c, i)))
            };
            let over = self.passes[ec][ei].over;
            partner.insert(odd, if over { -even } else { even });
        }
        let mut out = Vec::with_capacity(k);
        let mut base = 0i64;
        for ps in &self.passes {
            let m = ps.len() as i64;
            out.push(
                (base + 1..=base + m)
                    .step_by(2)
                    .map(|o| partner[&o])
                    .collect(),
            );
            base += m;
        }
        Ok(out)
    }

    /// `DT: [(4, -8, ...), (...)]`.
    pub fn dt_text(&self) -> Result<String, ChainlinkError> {
        let tuples: Vec<String> = self
            .dt_code()?
            .iter()
            .map(|t| {
                let inner: Vec<String> = t.iter().map(i64::to_string).collect();
                if inner.len() == 1 {
                    format!("({},)", inner[0])
                } else {
                    format!("({})", inner.join(", "))
                }
            })
            .collect();
        Ok(format!("DT: [{}]", tuples.join(", ")))
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.crossings {
            let [a, b, cc, d] = c.labels;
            writeln!(f, "X[{a}, {b}, {cc}, {d}]")?;
        }
        Ok(())
    }
}

/// Symmetric, zero-diagonal matrix of pairwise linking numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix(Vec<Vec<i64>>);

impl LinkingMatrix {
    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|&x| x == 0)
    }

    /// `true` when the listed components are pairwise unlinked.
    pub fn unlinked(&self, keep: &[usize]) -> bool {
        keep.iter()
            .enumerate()
            .all(|(a, &i)| keep[a + 1..].iter().all(|&j| self.0[i][j] == 0))
    }
}

impl fmt::Display for LinkingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Component indices of `Cₙ` in lexicographic `size`-subsets of `0..total`.
fn subsets(total: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        total: usize,
        size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..total {
            if total - i < size - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, total, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, total, size, &mut Vec::new(), &mut out);
    out
}

/// Largest `n` for which [`deletion_set`] searches exhaustively.
pub const EXHAUSTIVE_DELETION_LIMIT: usize = 10;

/// Components of `Cₙ` (axis = 0, chain components `1..=n`) whose removal
/// leaves pairwise unlinked components: `⌈n/2⌉` of them.
pub fn deletion_set(n: usize) -> Result<Vec<usize>, ChainlinkError> {
    if n < 2 {
        return Err(ChainlinkError::TooSmall { min: 2, got: n });
    }
    let lk = AnnularTangle::whitehead().unroll(n).linking_matrix()?;
    let size = n.div_ceil(2);
    let keeps_unlinked = |s: &Vec<usize>| {
        let keep: Vec<usize> = (0..=n).filter(|i| !s.contains(i)).collect();
        lk.unlinked(&keep)
    };
    if n <= EXHAUSTIVE_DELETION_LIMIT {
        let candidates = subsets(n + 1, size);
        let ok = par::map(&candidates, keeps_unlinked);
        return candidates
            .into_iter()
            .zip(ok)
            .find_map(|(s, ok)| ok.then_some(s))
            .ok_or(ChainlinkError::NoDeletionSet { n, size });
    }
    let mut alternate: Vec<usize> = (1..=n).step_by(2).collect();
    if n % 2 == 1 {
        alternate.push(n);
    }
    alternate.dedup();
    if alternate.len() == size && keeps_unlinked(&alternate) {
        Ok(alternate)
    } else {
        Err(ChainlinkError::NoDeletionSet { n, size })
    }
}

fn fmt_q(v: Q) -> String {
    let hundredths = (v * Q::from(100)).round().to_integer();
    format!(
        "{}.{:02}",
        hundredths.div_euclid(100),
        hundredths.rem_euclid(100)
    )
}

/// Draws the strip on a square annulus: `x` runs counter-clockwise along the
/// perimeter and `y` inward. The map is linear between the corners, so all
/// coordinates stay exact.
fn render(d: &Diagram) -> String {
    const SIZE: i64 = 480;
    const OUTER: i64 = 220;
    const DEPTH: i64 = 8;
    let period = Q::from(d.period);
    let centre = Q::from(SIZE / 2);
    let project = |x: Q, y: Q| -> (Q, Q) {
        let r = Q::from(OUTER) - y * Q::from(DEPTH);
        let t4 = x * Q::from(4) / period;
        let side = t4.floor().to_integer().clamp(0, 3);
        let u = t4 - Q::from(side);
        let w = r * u * Q::from(2);
        let (mx, my) = match side {
            0 => (r, w - r),
            1 => (r - w, r),
            2 => (-r, r - w),
            _ => (w - r, -r),
        };
        (centre + mx, centre - my)
    };
    let corners: Vec<Q> = (1..4).map(|k| period * Q::new(k, 4)).collect();
    let palette = [
        "#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2",
        "#17becf",
    ];
    let mut items: Vec<(i8, usize, String)> = Vec::new();
    for (ci, pieces) in d.components.iter().enumerate() {
        for p in pieces {
            let (lo, hi) = if p.a.0 < p.b.0 {
                (p.a.0, p.b.0)
            } else {
                (p.b.0, p.a.0)
            };
            let mut xs: Vec<Q> = corners
                .iter()
                .copied()
                .filter(|&c| lo < c && c < hi)
                .collect();
            if p.b.0 < p.a.0 {
                xs.reverse();
            }
            let mut pts = vec![p.a];
            for x in xs {
                let t = (x - p.a.0) / (p.b.0 - p.a.0);
                pts.push((x, p.a.1 + t * (p.b.1 - p.a.1)));
            }
            pts.push(p.b);
            let mut path = String::new();
            for (i, &(x, y)) in pts.iter().enumerate() {
                let (px, py) = project(x, y);
                let _ = write!(
                    path,
                    "{}{},{}",
                    if i == 0 { "M " } else { " L " },
                    fmt_q(px),
                    fmt_q(py)
                );
            }
            items.push((p.height, ci, path));
        }
    }
    items.sort_by_key(|(h, _, _)| *h);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        s,
        r##"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>"##
    );
    for (_, ci, path) in items {
        let col = palette[ci % palette.len()];
        let _ = writeln!(
            s,
            r##"<path d="{path}" fill="none" stroke="#ffffff" stroke-width="7" stroke-linecap="round"/>"##
        );
        let _ = writeln!(
            s,
            r#"<path d="{path}" fill="none" stroke="{col}" stroke-width="2.5" stroke-linecap="round"/>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whitehead_pattern() {
        let t = AnnularTangle::whitehead();
        assert_eq!(t.axis_winding(), 0);
        assert_eq!(t.boundary(), vec![(2, 1), (10, -1)]);
        assert_eq!(t.crossings().len(), 2);
        let c1 = t.unroll(1);
        assert_eq!(c1.component_count(), 2);
        assert_eq!(c1.crossing_count(), 6);
        assert!(c1.is_well_formed());
        assert!(c1.linking_matrix().unwrap().is_zero());
    }

    #[test]
    fn component_and_crossing_counts() {
        for n in 1..=16 {
            let pd = AnnularTangle::whitehead().unroll(n);
            assert_eq!(pd.component_count(), n + 1);
            assert_eq!(pd.crossing_count(), 2 * n + 4);
            assert!(pd.is_well_formed(), "C{n}");
        }
    }

    #[test]
    fn neighbouring_rings_link_once() {
        let lk = AnnularTangle::whitehead()
            .unroll(5)
            .linking_matrix()
            .unwrap();
        for j in 1..=5 {
            assert_eq!(lk.get(0, j), 0);
            let next = j % 5 + 1;
            assert_eq!(lk.get(j, next), -1);
        }
        let lk2 = AnnularTangle::whitehead()
            .unroll(2)
            .linking_matrix()
            .unwrap();
        assert_eq!(lk2.get(1, 2), -2);
    }

    #[test]
    fn deletion_sets() {
        assert_eq!(deletion_set(2).unwrap(), vec![1]);
        assert_eq!(deletion_set(3).unwrap(), vec![1, 2]);
        assert_eq!(deletion_set(4).unwrap(), vec![1, 3]);
        assert_eq!(deletion_set(11).unwrap().len(), 6);
        assert!(deletion_set(1).is_err());
    }

    #[test]
    fn dt_codes_pair_odd_with_even() {
        for n in 1..=6 {
            let dt = AnnularTangle::whitehead().unroll(n).dt_code().unwrap();
            let mut evens: Vec<i64> = dt.iter().flatten().map(|e| e.abs()).collect();
            evens.sort();
            assert_eq!(
                evens,
                (1..=(2 * n as i64 + 4)).map(|i| 2 * i).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn covers_compose() {
        let t = AnnularTangle::whitehead();
        assert_eq!(t.cover(2).unroll(3), t.unroll(6));
    }

    #[test]
    fn svg_is_deterministic() {
        let t = AnnularTangle::whitehead();
        assert_eq!(t.render_svg(4), t.render_svg(4));
    }
}
