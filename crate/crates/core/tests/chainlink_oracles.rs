use std::collections::BTreeMap;

use modlink::chainlink::{deletion_set, AnnularTangle, PdCode};

/// Laurent polynomial in `A`, exponent ↦ coefficient.
type Poly = BTreeMap<i64, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Kauffman bracket by state sum: the A-smoothing of `X[a,b,c,d]` joins
/// `a–b` and `c–d`, the B-smoothing `a–d` and `b–c`.
fn bracket(pd: &PdCode) -> Poly {
    let xs = pd.crossings();
    let edges = 2 * xs.len();
    let loop_value: Poly = [(2, -1), (-2, -1)].into_iter().collect();
    let mut total = Poly::new();
    for state in 0u32..(1 << xs.len()) {
        let mut parent: Vec<usize> = (0..=edges).collect();
        let mut a_count = 0i64;
        for (i, x) in xs.iter().enumerate() {
            let [a, b, c, d] = x.labels.map(|l| l as usize);
            let pairs = if state >> i & 1 == 0 {
                a_count += 1;
                [(a, b), (c, d)]
            } else {
                a_count -= 1;
                [(a, d), (b, c)]
            };
            for (p, q) in pairs {
                let (rp, rq) = (find(&mut parent, p), find(&mut parent, q));
                parent[rp] = rq;
            }
        }
        let loops = (1..=edges).filter(|&l| find(&mut parent, l) == l).count();
        let mut term: Poly = [(a_count, 1)].into_iter().collect();
        for _ in 1..loops {
            term = poly_mul(&term, &loop_value);
        }
        for (e, c) in term {
            *total.entry(e).or_default() += c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

/// Jones polynomial in `A = t^{-1/4}`.
fn jones_in_a(pd: &PdCode) -> Poly {
    let w = pd.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let norm: Poly = [(-3 * w, sign)].into_iter().collect();
    poly_mul(&norm, &bracket(pd))
}

#[test]
fn unrolled_once_is_the_whitehead_link() {
    // t^{-7/2} − 2t^{-5/2} + t^{-3/2} − 2t^{-1/2} + t^{1/2} − t^{3/2}
    let whitehead: Poly = [(14, 1), (10, -2), (6, 1), (2, -2), (-2, 1), (-6, -1)]
        .into_iter()
        .collect();
    let mirror: Poly = whitehead.iter().map(|(e, c)| (-e, *c)).collect();
    let v = jones_in_a(&AnnularTangle::whitehead().unroll(1));
    assert!(v == whitehead || v == mirror, "Jones polynomial {v:?}");
}

#[test]
fn jones_at_one_counts_components() {
    // V(1) = (−2)^{c−1} for a c-component link.
    for n in 1..=4 {
        let v = jones_in_a(&AnnularTangle::whitehead().unroll(n));
        let at_one: i64 = v.values().sum();
        assert_eq!(at_one, (-2i64).pow(n as u32));
    }
}

/// Sign of `X[a,b,c,d]` from labels alone: the over-strand runs `d → b`
/// exactly when the crossing is positive.
fn label_sign(pd: &PdCode, labels: [u32; 4]) -> Option<i8> {
    let [_, b, _, d] = labels;
    let comp = pd.component_of();
    let c = comp[b as usize - 1];
    let members: Vec<u32> = (1..=comp.len() as u32)
        .filter(|&l| comp[l as usize - 1] == c)
        .collect();
    if members.len() <= 2 {
        return None;
    }
    let (lo, hi) = (members[0], members[members.len() - 1]);
    let succ = |l: u32| if l == hi { lo } else { l + 1 };
    if succ(d) == b {
        Some(1)
    } else if succ(b) == d {
        Some(-1)
    } else {
        panic!("over labels {b}, {d} are not consecutive")
    }
}

#[test]
fn stored_signs_match_label_orientation() {
    for n in 1..=8 {
        let pd = AnnularTangle::whitehead().unroll(n);
        for x in pd.crossings() {
            if let Some(s) = label_sign(&pd, x.labels) {
                assert_eq!(s, x.sign, "C{n} {:?}", x.labels);
            }
        }
    }
}

#[test]
fn linking_matrix_is_symmetric_and_circulant() {
    for n in 1..=12 {
        let lk = AnnularTangle::whitehead()
            .unroll(n)
            .linking_matrix()
            .unwrap();
        for i in 0..=n {
            assert_eq!(lk.get(i, i), 0);
            assert_eq!(lk.get(0, i), 0);
            for j in 0..=n {
                assert_eq!(lk.get(i, j), lk.get(j, i));
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let (ri, rj) = (i % n + 1, j % n + 1);
                assert_eq!(lk.get(i, j), lk.get(ri, rj), "C{n} rotation");
            }
        }
    }
}

#[test]
fn covers_compose() {
    let t = AnnularTangle::whitehead();
    for a in 1..=3 {
        for b in 1..=3 {
            let direct = t.unroll(a * b);
            let staged = t.cover(a).unroll(b);
            assert_eq!(direct.crossing_count(), staged.crossing_count());
            assert_eq!(direct.component_count(), staged.component_count());
            let mut s1: Vec<i8> = direct.crossings().iter().map(|x| x.sign).collect();
            let mut s2: Vec<i8> = staged.crossings().iter().map(|x| x.sign).collect();
            s1.sort();
            s2.sort();
            assert_eq!(s1, s2);
            assert_eq!(
                direct.linking_matrix().unwrap(),
                staged.linking_matrix().unwrap()
            );
        }
    }
}

#[test]
fn deletion_sets_are_minimal() {
    for n in 2..=8 {
        let lk = AnnularTangle::whitehead()
            .unroll(n)
            .linking_matrix()
            .unwrap();
        let del = deletion_set(n).unwrap();
        assert_eq!(del.len(), n.div_ceil(2));
        // No smaller set works: every subset of size ⌈n/2⌉ − 1 leaves a linked pair.
        let smaller = n.div_ceil(2) - 1;
        for mask in 0u32..(1 << (n + 1)) {
            if mask.count_ones() as usize != smaller {
                continue;
            }
            let keep: Vec<usize> = (0..=n).filter(|i| mask >> i & 1 == 0).collect();
            assert!(!lk.unlinked(&keep), "C{n}: deleting {mask:b} suffices");
        }
    }
}

#[test]
fn dt_code_text_is_stable() {
    let pd = AnnularTangle::whitehead().unroll(1);
    let text = pd.dt_text().unwrap();
    assert!(text.starts_with("DT: [("));
    assert_eq!(
        text,
        AnnularTangle::whitehead().unroll(1).dt_text().unwrap()
    );
}
