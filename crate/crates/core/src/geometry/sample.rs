use std::sync::OnceLock;

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::classify::{classify_config, ConfigClass};
use super::glp::is_general_position;
use super::PointConfiguration;
use crate::error::{Error, Result};

/// Maximum number of random draws before sampling gives up.
pub const SAMPLING_BUDGET: usize = 10_000;

const BOX: i64 = 9;

type P = [i64; 3];

fn primitive(mut p: P) -> Option<P> {
    let g = p.iter().fold(0i64, |g, &c| g.gcd(&c));
    if g == 0 {
        return None;
    }
    let last = *p.iter().rev().find(|&&c| c != 0).expect("nonzero");
    let g = if last < 0 { -g } else { g };
    for c in p.iter_mut() {
        *c /= g;
    }
    Some(p)
}

/// Projectively distinct integer points with coordinates in `[-9, 9]`.
fn box_points() -> &'static [P] {
    static PTS: OnceLock<Vec<P>> = OnceLock::new();
    PTS.get_or_init(|| {
        let mut v = Vec::new();
        for x in -BOX..=BOX {
            for y in -BOX..=BOX {
                for z in -BOX..=BOX {
                    if let Some(p) = primitive([x, y, z]) {
                        if p == [x, y, z] {
                            v.push(p);
                        }
                    }
                }
            }
        }
        v
    })
}

fn cross(a: &P, b: &P) -> P {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: &P, b: &P) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

struct Draw<'r> {
    rng: &'r mut ChaCha8Rng,
}

impl Draw<'_> {
    fn point(&mut self) -> P {
        *box_points().choose(self.rng).expect("nonempty box")
    }

    /// Line through two distinct random box points.
    fn line(&mut self) -> P {
        loop {
            let (a, b) = (self.point(), self.point());
            if let Some(l) = primitive(cross(&a, &b)) {
                return l;
            }
        }
    }

    fn line_through(&mut self, p: &P) -> P {
        loop {
            let q = self.point();
            if let Some(l) = primitive(cross(p, &q)) {
                return l;
            }
        }
    }

    /// `k` distinct box points on `line`, avoiding `taken`.
    fn on_line(&mut self, line: &P, k: usize, taken: &[P]) -> Option<Vec<P>> {
        let cands: Vec<P> = box_points()
            .iter()
            .filter(|p| dot(line, p) == 0 && !taken.contains(p))
            .copied()
            .collect();
        if cands.len() < k {
            return None;
        }
        Some(cands.choose_multiple(self.rng, k).copied().collect())
    }

    fn points(&mut self, k: usize) -> Vec<P> {
        (0..k).map(|_| self.point()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Label {
        s: usize,
        k: u8,
    },
    General(usize),
    Fold {
        s: usize,
        r: usize,
        meets: Option<bool>,
    },
}

fn parse_target(label: &str) -> Result<Target> {
    let bad = || Error::InvalidArgument(format!("unknown configuration class {label:?}"));
    if let Some(rest) = label.strip_prefix('(') {
        let (inside, suffix) = rest.split_once(")-fold").ok_or_else(bad)?;
        let (s, r) = inside.split_once(',').ok_or_else(bad)?;
        let s: usize = s.trim().parse().map_err(|_| bad())?;
        let r: usize = r.trim().parse().map_err(|_| bad())?;
        let meets = match suffix {
            "" => None,
            "-in" => Some(true),
            "-off" => Some(false),
            _ => return Err(bad()),
        };
        if s < r + 3 {
            return Err(Error::InvalidArgument(format!(
                "{label:?}: an (s,r)-fold configuration needs s - r >= 3"
            )));
        }
        if meets.is_some() && r != 2 {
            return Err(Error::InvalidArgument(format!(
                "{label:?}: -in/-off apply to two off-line points"
            )));
        }
        return Ok(Target::Fold { s, r, meets });
    }
    let (s, kind) = label.split_once('-').ok_or_else(bad)?;
    let s: usize = s.parse().map_err(|_| bad())?;
    match kind {
        "general" if s >= 3 => Ok(Target::General(s)),
        "collinear" if s >= 3 => Ok(Target::Fold {
            s,
            r: 0,
            meets: None,
        }),
        _ => {
            let k: u8 = kind.parse().map_err(|_| bad())?;
            let max = match s {
                4 => 3,
                5 => 5,
                6 => 11,
                _ => 0,
            };
            if k == 0 || k > max {
                return Err(bad());
            }
            Ok(Target::Label { s, k })
        }
    }
}

fn matches(t: Target, c: &ConfigClass) -> bool {
    match t {
        Target::Label { s, k } => c.s == s && c.label == Some(k),
        Target::General(s) => c.s == s && c.profile.is_empty() && c.label.map_or(true, |k| k == 1),
        Target::Fold { s, r, meets } => {
            c.s == s
                && c.max_collinear() == s - r
                && meets.map_or(true, |m| c.connecting_line_meets == Some(m))
        }
    }
}

/// Points forming the requested shape in general, before verification.
fn construct(t: Target, d: &mut Draw) -> Option<Vec<P>> {
    use Target::*;
    let fold = |d: &mut Draw, s: usize, r: usize, meets: Option<bool>| -> Option<Vec<P>> {
        let l = d.line();
        let mut pts = d.on_line(&l, s - r, &[])?;
        if meets == Some(true) {
            let anchor = pts[0];
            let l2 = d.line_through(&anchor);
            pts.extend(d.on_line(&l2, 2, &pts)?);
        } else {
            pts.extend(d.points(r));
        }
        Some(pts)
    };
    match t {
        General(_) | Label { k: 1, .. } => None,
        Fold { s, r, meets } => fold(d, s, r, meets),
        Label { s: 4, k } => fold(d, 4, 5 - k as usize, None),
        Label { s: 5, k } => match k {
            2 => fold(d, 5, 0, None),
            3 => fold(d, 5, 1, None),
            4 => fold(d, 5, 2, Some(false)),
            _ => fold(d, 5, 2, Some(true)),
        },
        Label { s: 6, k } => match k {
            2 => fold(d, 6, 0, None),
            3 => fold(d, 6, 1, None),
            4 => fold(d, 6, 2, Some(false)),
            5 => fold(d, 6, 2, Some(true)),
            6 => fold(d, 6, 3, None),
            7 => {
                let (l1, l2) = (d.line(), d.line());
                let mut pts = d.on_line(&l1, 3, &[])?;
                let meet = primitive(cross(&l1, &l2))?;
                pts.extend(d.on_line(&l2, 3, &[pts[0], pts[1], pts[2], meet])?);
                Some(pts)
            }
            8 => {
                let l1 = d.line();
                let mut pts = d.on_line(&l1, 3, &[])?;
                let l2 = d.line_through(&pts[0]);
                pts.extend(d.on_line(&l2, 2, &pts)?);
                pts.push(d.point());
                Some(pts)
            }
            9 => {
                let v = d.points(3);
                let mut pts = v.clone();
                for (a, b) in [(0, 1), (1, 2), (2, 0)] {
                    let side = primitive(cross(&v[a], &v[b]))?;
                    pts.extend(d.on_line(&side, 1, &pts)?);
                }
                Some(pts)
            }
            10 => {
                // the six pairwise meets of four lines
                let ls: Vec<P> = (0..4).map(|_| d.line()).collect();
                let mut pts = Vec::new();
                for i in 0..4 {
                    for j in i + 1..4 {
                        pts.push(primitive(cross(&ls[i], &ls[j]))?);
                    }
                }
                Some(pts)
            }
            _ => conic_points(d),
        },
        Label { .. } => None,
    }
}

/// Five random points and a sixth on the conic through them: the second
/// meet of that conic with a random line through the first point.
fn conic_points(d: &mut Draw) -> Option<Vec<P>> {
    let mut pts = d.points(5);
    let rows: Vec<Vec<crate::poly::Rational>> = pts
        .iter()
        .map(|p| {
            [
                p[0] * p[0],
                p[0] * p[1],
                p[0] * p[2],
                p[1] * p[1],
                p[1] * p[2],
                p[2] * p[2],
            ]
            .iter()
            .map(|&v| crate::poly::Rational::from_int(v))
            .collect()
        })
        .collect();
    let kernel = crate::linalg::Matrix::from_rows(rows).ok()?.nullspace();
    if kernel.len() != 1 {
        return None;
    }
    let den = kernel[0]
        .iter()
        .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(&c.denom()));
    let q: Vec<i64> = kernel[0]
        .iter()
        .map(|c| (c * &crate::poly::Rational::from_bigint(den.clone())).to_i64())
        .collect::<Option<_>>()?;
    // bilinear form of the conic, doubled to stay integral
    let b2 = |u: &P, v: &P| -> i128 {
        let (u, v) = (u.map(i128::from), v.map(i128::from));
        let q: Vec<i128> = q.iter().map(|&c| c as i128).collect();
        2 * q[0] * u[0] * v[0]
            + q[1] * (u[0] * v[1] + u[1] * v[0])
            + q[2] * (u[0] * v[2] + u[2] * v[0])
            + 2 * q[3] * u[1] * v[1]
            + q[4] * (u[1] * v[2] + u[2] * v[1])
            + 2 * q[5] * u[2] * v[2]
    };
    let p = pts[0];
    let dir = d.point();
    // Q(p + t·dir) = t·B(p, dir) + t²·Q(dir) with Q(p) = 0, so the second
    // meet is Q(dir)·p − B(p, dir)·dir
    let qd = b2(&dir, &dir) / 2;
    let bpd = b2(&p, &dir);
    if qd == 0 {
        return None;
    }
    let six: Vec<i128> = (0..3)
        .map(|i| qd * p[i] as i128 - bpd * dir[i] as i128)
        .collect();
    let g = six.iter().fold(0i128, |g, &c| g.gcd(&c));
    if g == 0 {
        return None;
    }
    let six: Vec<i64> = six
        .iter()
        .map(|&c| i64::try_from(c / g).ok())
        .collect::<Option<_>>()?;
    pts.push(primitive([six[0], six[1], six[2]])?);
    Some(pts)
}

/// Greedily adds random box points that keep the set free of collinear
/// triples; each attempt counts against `budget`.
fn general_points(s: usize, d: &mut Draw, budget: &mut usize, start: Vec<P>) -> Option<Vec<P>> {
    let mut pts = start;
    while pts.len() < s {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let c = d.point();
        if pts.contains(&c) {
            continue;
        }
        let ok = (0..pts.len())
            .all(|i| (i + 1..pts.len()).all(|j| dot(&cross(&pts[i], &pts[j]), &c) != 0));
        if ok {
            pts.push(c);
        }
    }
    Some(pts)
}

fn to_config(pts: &[P]) -> Option<PointConfiguration> {
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    PointConfiguration::from_ints(&refs).ok()
}

/// A configuration of the given class, reproducible from `seed`.
///
/// Classes: `"s-k"` for case `k` of `s = 4, 5, 6` points, `"s-general"`,
/// `"s-collinear"`, `"(s,r)-fold"` (exactly `s - r` collinear) and, for two
/// off-line points, `"(s,2)-fold-in"` / `"(s,2)-fold-off"` according to
/// whether the line through them meets the configuration. Coordinates are
/// drawn from `[-9, 9]`, except that constructed conic points may leave the
/// box; every candidate is classified and rejected unless it matches.
pub fn sample_config(class_label: &str, seed: u64) -> Result<PointConfiguration> {
    let target = parse_target(class_label)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut d = Draw { rng: &mut rng };
    let mut budget = SAMPLING_BUDGET;
    while budget > 0 {
        budget -= 1;
        let pts = match target {
            Target::General(s) | Target::Label { s, k: 1 } => {
                match general_points(s, &mut d, &mut budget, Vec::new()) {
                    Some(p) => p,
                    None => break,
                }
            }
            _ => match construct(target, &mut d) {
                Some(p) => p,
                None => continue,
            },
        };
        let Some(cfg) = to_config(&pts) else { continue };
        if classify_config(&cfg).is_ok_and(|c| matches(target, &c)) {
            return Ok(cfg);
        }
    }
    Err(Error::SamplingBudget(SAMPLING_BUDGET))
}

/// `s` points in general linear position whose first four are
/// `[1:0:0], [0:1:0], [0:0:1], [1:1:1]` and the rest `[a:b:1]` with
/// `a, b` in `[-B, B]`, `B = max(9, s)`. The box grows with `s` because the
/// remaining points need pairwise distinct `a` and `b`.
pub fn sample_framed_general(s: usize, seed: u64) -> Result<PointConfiguration> {
    let frame: Vec<P> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .into_iter()
        .take(s)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut budget = SAMPLING_BUDGET;
    let bound = BOX.max(s as i64);
    let mut pts = frame;
    while pts.len() < s {
        if budget == 0 {
            return Err(Error::SamplingBudget(SAMPLING_BUDGET));
        }
        budget -= 1;
        let c = [
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            1,
        ];
        if pts.contains(&c) {
            continue;
        }
        let ok = (0..pts.len())
            .all(|i| (i + 1..pts.len()).all(|j| dot(&cross(&pts[i], &pts[j]), &c) != 0));
        if ok {
            pts.push(c);
        }
    }
    let cfg = to_config(&pts).expect("distinct points");
    debug_assert!(is_general_position(&cfg));
    Ok(cfg)
}
