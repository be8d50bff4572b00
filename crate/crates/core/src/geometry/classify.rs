use serde::Serialize;

use super::{PointConfiguration, ProjectivePoint};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Rational;

/// Collinearity data and taxonomy label of a plane configuration.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConfigClass {
    pub s: usize,
    /// Sizes (at least 3) of the maximal collinear subsets, largest first.
    pub profile: Vec<usize>,
    /// Point indices of those subsets, in the same order.
    pub lines: Vec<Vec<usize>>,
    /// Case number in the list of configurations for `s = 4, 5, 6`.
    pub label: Option<u8>,
    /// `"6-9"` style for `s <= 6`, otherwise `"(s,r)-fold"` when at least
    /// three points are collinear and `"s-general"` when none are.
    pub descriptor: String,
    /// For six points: whether an irreducible conic passes through all.
    pub on_conic: Option<bool>,
    /// When exactly two points lie off a longest line: whether the
    /// line through those two passes through a point of the configuration.
    pub connecting_line_meets: Option<bool>,
}

impl ConfigClass {
    /// Size of the largest collinear subset, or 2 when none has 3 points.
    pub fn max_collinear(&self) -> usize {
        self.profile.first().copied().unwrap_or(2)
    }

    /// Number of points off the longest line.
    pub fn off_line(&self) -> usize {
        self.s - self.max_collinear()
    }
}

pub(crate) fn det3(a: &[Rational], b: &[Rational], c: &[Rational]) -> Rational {
    let m = |i: usize, j: usize, k: usize| &(&a[i] * &b[j]) * &c[k];
    let pos = &(&m(0, 1, 2) + &m(1, 2, 0)) + &m(2, 0, 1);
    let neg = &(&m(2, 1, 0) + &m(0, 2, 1)) + &m(1, 0, 2);
    &pos - &neg
}

fn cross(a: &[Rational], b: &[Rational]) -> [Rational; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn on_line(l: &[Rational; 3], p: &ProjectivePoint) -> bool {
    let c = p.coords();
    (&(&(&l[0] * &c[0]) + &(&l[1] * &c[1])) + &(&l[2] * &c[2])).is_zero()
}

fn require_plane(cfg: &PointConfiguration) -> Result<()> {
    if cfg.dim() != 2 {
        return Err(Error::InvalidArgument(
            "configuration must lie in the projective plane".into(),
        ));
    }
    Ok(())
}

/// Maximal subsets of at least three collinear points, largest first.
pub fn collinear_lines(cfg: &PointConfiguration) -> Result<Vec<Vec<usize>>> {
    require_plane(cfg)?;
    let pts = cfg.points();
    let s = pts.len();
    let mut lines: Vec<Vec<usize>> = Vec::new();
    for i in 0..s {
        for j in i + 1..s {
            let l = cross(pts[i].coords(), pts[j].coords());
            let members: Vec<usize> = (0..s).filter(|&k| on_line(&l, &pts[k])).collect();
            // record each line once, from its two smallest members
            if members.len() >= 3 && members[0] == i && members[1] == j {
                lines.push(members);
            }
        }
    }
    lines.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    Ok(lines)
}

/// An irreducible conic through six points: the conic is the kernel of the
/// 6×6 evaluation matrix; irreducible iff its symmetric matrix has rank 3.
fn irreducible_conic_through(pts: &[ProjectivePoint]) -> bool {
    let rows: Vec<Vec<Rational>> = pts
        .iter()
        .map(|p| {
            let c = p.coords();
            vec![
                &c[0] * &c[0],
                &c[0] * &c[1],
                &c[0] * &c[2],
                &c[1] * &c[1],
                &c[1] * &c[2],
                &c[2] * &c[2],
            ]
        })
        .collect();
    let kernel = Matrix::from_rows(rows).expect("rectangular").nullspace();
    let half = Rational::new(1, 2);
    kernel.iter().any(|q| {
        let sym = Matrix::from_rows(vec![
            vec![q[0].clone(), &q[1] * &half, &q[2] * &half],
            vec![&q[1] * &half, q[3].clone(), &q[4] * &half],
            vec![&q[2] * &half, &q[4] * &half, q[5].clone()],
        ])
        .expect("3x3");
        sym.rank() == 3
    })
}

/// Collinearity profile and configuration label of a plane point set.
///
/// For `s = 6` the labels 7 to 10 follow from how many of the lines through
/// two off-line points meet the configuration, which is one less than the
/// number of 3-point lines, with the case of two disjoint 3-point lines
/// being label 7.
pub fn classify_config(cfg: &PointConfiguration) -> Result<ConfigClass> {
    require_plane(cfg)?;
    let s = cfg.len();
    if s < 3 {
        return Err(Error::InvalidArgument(
            "classification needs at least three points".into(),
        ));
    }
    let lines = collinear_lines(cfg)?;
    let profile: Vec<usize> = lines.iter().map(Vec::len).collect();
    let max = profile.first().copied().unwrap_or(2);

    let connecting_line_meets = (max >= 3 && s - max == 2).then(|| {
        let main = &lines[0];
        let off: Vec<usize> = (0..s).filter(|k| !main.contains(k)).collect();
        lines[1..]
            .iter()
            .any(|l| l.contains(&off[0]) && l.contains(&off[1]))
    });

    let on_conic = (s == 6).then(|| profile.is_empty() && irreducible_conic_through(cfg.points()));

    let label: Option<u8> = match s {
        4 => Some(match max {
            4 => 3,
            3 => 2,
            _ => 1,
        }),
        5 => Some(match max {
            5 => 2,
            4 => 3,
            3 if lines.len() == 1 => 4,
            3 => 5,
            _ => 1,
        }),
        6 => Some(match max {
            6 => 2,
            5 => 3,
            4 if connecting_line_meets == Some(true) => 5,
            4 => 4,
            3 => match lines.len() {
                1 => 6,
                2 if lines[0].iter().all(|k| !lines[1].contains(k)) => 7,
                2 => 8,
                3 => 9,
                _ => 10,
            },
            _ if on_conic == Some(true) => 11,
            _ => 1,
        }),
        _ => None,
    };
    let descriptor = match label {
        Some(k) => format!("{s}-{k}"),
        None if max >= 3 => format!("({s},{})-fold", s - max),
        None => format!("{s}-general"),
    };
    Ok(ConfigClass {
        s,
        profile,
        lines,
        label,
        descriptor,
        on_conic,
        connecting_line_meets,
    })
}
