use super::classify::det3;
use super::{PointConfiguration, ProjectivePoint};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Rational};

/// No three of the points are collinear (every 3×3 determinant is nonzero).
pub fn is_general_position(cfg: &PointConfiguration) -> bool {
    if cfg.dim() != 2 {
        return false;
    }
    let p = cfg.points();
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            for k in j + 1..p.len() {
                if det3(p[i].coords(), p[j].coords(), p[k].coords()).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

fn mon(a: u32, b: u32, c: u32) -> Monomial {
    Monomial::from_exponents(&[a, b, c])
}

/// Leading monomials of the forms, in order `f_1..f_{d+1}`:
/// `x^{d-i} y^i` for `i = 1..d-1`, then `x^{d-1} z` and `x^{d-2} y z`.
fn heads(d: u32) -> Vec<Monomial> {
    let mut h: Vec<Monomial> = (1..d).map(|i| mon(d - i, i, 0)).collect();
    h.push(mon(d - 1, 0, 1));
    h.push(mon(d - 2, 1, 1));
    h
}

/// The degree-`d` monomials other than the heads and `x^d`, `y^d`, `z^d`.
fn tail_monomials(d: u32) -> Vec<Monomial> {
    let mut skip = heads(d);
    skip.extend([mon(d, 0, 0), mon(0, d, 0), mon(0, 0, d)]);
    monomials_of_degree(3, d)
        .into_iter()
        .filter(|m| !skip.contains(m))
        .collect()
}

/// Generators `f_1..f_{d+1}` of the ideal of `binomial(d+1, 2)` points in
/// general linear position, each a head monomial plus a combination of the
/// tail monomials.
///
/// The first points must be `[1:0:0], [0:1:0], [0:0:1], [1:1:1]` (as many of
/// them as there are points). Every tail monomial and head vanishes at the
/// coordinate points, so the tail coefficients solve one square system:
/// vanishing at the fourth point onwards.
pub fn glp_binomial_generators(d: u32, cfg: &PointConfiguration) -> Result<Vec<Polynomial>> {
    if d < 2 {
        return Err(Error::InvalidArgument("degree must be at least 2".into()));
    }
    let s = (d * (d + 1) / 2) as usize;
    if cfg.len() != s {
        return Err(Error::InvalidArgument(format!(
            "degree {d} needs {s} points, got {}",
            cfg.len()
        )));
    }
    if cfg.dim() != 2 {
        return Err(Error::InvalidArgument(
            "points must lie in the plane".into(),
        ));
    }
    let frame = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]];
    for (p, f) in cfg.points().iter().zip(frame) {
        if *p != ProjectivePoint::from_ints(&f)? {
            return Err(Error::Precondition(
                "the first points must be [1:0:0], [0:1:0], [0:0:1], [1:1:1]".into(),
            ));
        }
    }
    if !is_general_position(cfg) {
        return Err(Error::NotGeneralPosition);
    }
    let ring = cfg.ring();
    let tail = tail_monomials(d);
    debug_assert_eq!(tail.len(), s - 3);
    let others = &cfg.points()[3..];
    let a = Matrix::from_rows(
        others
            .iter()
            .map(|p| tail.iter().map(|m| p.eval_monomial(m)).collect())
            .collect(),
    )?;
    if a.rank() < tail.len() {
        return Err(Error::NotGeneralPosition);
    }
    let mut out = Vec::with_capacity(d as usize + 1);
    for h in heads(d) {
        let mut terms = vec![(h.clone(), Rational::one())];
        if !tail.is_empty() {
            let rhs: Vec<Rational> = others.iter().map(|p| -p.eval_monomial(&h)).collect();
            let alpha = a.solve(&rhs)?.ok_or(Error::NotGeneralPosition)?;
            terms.extend(tail.iter().cloned().zip(alpha));
        }
        out.push(Polynomial::from_terms(&ring, terms));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ideal_of_points;
    use crate::ideals::Ideal;

    fn framed(extra: &[[i64; 2]]) -> PointConfiguration {
        let mut pts: Vec<Vec<i64>> =
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]];
        pts.extend(extra.iter().map(|&[a, b]| vec![a, b, 1]));
        let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
        PointConfiguration::from_ints(&refs).unwrap()
    }

    #[test]
    fn monomial_counts() {
        for d in 2..8u32 {
            assert_eq!(tail_monomials(d).len() as u32, d * (d + 1) / 2 - 3);
            assert_eq!(heads(d).len() as u32, d + 1);
        }
    }

    #[test]
    fn six_points_four_cubics() {
        let cfg = framed(&[[2, 3], [5, 7]]);
        let f = glp_binomial_generators(3, &cfg).unwrap();
        assert_eq!(f.len(), 4);
        for g in &f {
            assert_eq!(g.num_terms(), 4, "{g}");
            for p in cfg.points() {
                assert!(g.evaluate(p.coords()).is_zero());
            }
        }
        let i = Ideal::new(&cfg.ring(), f).unwrap();
        assert!(i.equals(&ideal_of_points(&cfg)).unwrap());
    }

    #[test]
    fn collinear_input_is_rejected() {
        // [0:0:1], [2:3:1], [4:6:1] are collinear
        let cfg = framed(&[[2, 3], [4, 6]]);
        assert!(matches!(
            glp_binomial_generators(3, &cfg),
            Err(Error::NotGeneralPosition)
        ));
        let wrong = framed(&[[2, 3]]);
        assert!(glp_binomial_generators(3, &wrong).is_err());
    }

    #[test]
    fn three_coordinate_points() {
        let cfg = PointConfiguration::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let f = glp_binomial_generators(2, &cfg).unwrap();
        let strs: Vec<String> = f.iter().map(|g| g.to_string()).collect();
        assert_eq!(strs, ["x*y", "x*z", "y*z"]);
    }
}
