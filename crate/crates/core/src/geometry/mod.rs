//! Projective point configurations, their defining ideals and Jacobians.

mod classify;
mod glp;
mod jacobian;
mod sample;

pub use classify::{classify_config, collinear_lines, ConfigClass};
pub use glp::{glp_binomial_generators, is_general_position};
pub use jacobian::{jacobian, minors, JacobianData};
pub use sample::{sample_config, sample_framed_general, SAMPLING_BUDGET};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::linalg::{Echelon, Matrix};
use crate::poly::{monomials_of_degree, Monomial, PolyRing, Polynomial, Rational};

/// A point of projective space, scaled so its last nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let Some(last) = coords.iter().rposition(|c| !c.is_zero()) else {
            return Err(Error::InvalidArgument(
                "the zero vector is not a point".into(),
            ));
        };
        if coords.len() < 2 {
            return Err(Error::InvalidArgument(
                "a point needs at least two coordinates".into(),
            ));
        }
        let inv = coords[last].inv();
        Ok(ProjectivePoint {
            coords: coords.iter().map(|c| c * &inv).collect(),
        })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Dimension `n` of the ambient `P^n`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    fn last_nonzero(&self) -> usize {
        self.coords
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero point")
    }

    /// Value of the monomial at these coordinates.
    pub fn eval_monomial(&self, m: &Monomial) -> Rational {
        let mut acc = Rational::one();
        for (c, &e) in self.coords.iter().zip(m.exponents()) {
            if e > 0 {
                acc = &acc * &c.pow(e);
            }
        }
        acc
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

/// Coordinate ring of `P^n`: `x, y, z` in the plane, `x, y, z, w` in
/// 3-space and `x0..xn` beyond.
pub fn ring_for_dim(n: usize) -> PolyRing {
    match n {
        2 => PolyRing::plane(),
        3 => PolyRing::new(&["x", "y", "z", "w"]).expect("distinct names"),
        _ => {
            let names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
            PolyRing::new(&names).expect("distinct names")
        }
    }
}

/// Distinct points of a common projective space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<ProjectivePoint>,
}

impl PointConfiguration {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::InvalidArgument("empty configuration".into()));
        };
        let dim = first.dim();
        if points.iter().any(|p| p.dim() != dim) {
            return Err(Error::ArityMismatch {
                expected: dim + 1,
                got: points
                    .iter()
                    .map(|p| p.dim() + 1)
                    .find(|&k| k != dim + 1)
                    .unwrap_or(0),
            });
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(Error::InvalidArgument(format!("repeated point {p}")));
            }
        }
        Ok(PointConfiguration { dim, points })
    }

    pub fn from_ints(points: &[&[i64]]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|p| ProjectivePoint::from_ints(p))
                .collect::<Result<_>>()?,
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ring(&self) -> PolyRing {
        ring_for_dim(self.dim)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PointsJson {
            dim: self.dim,
            points: self.points.iter().map(|p| p.coords.clone()).collect(),
        })
        .expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: PointsJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let mut pts = Vec::with_capacity(raw.points.len());
        for p in raw.points {
            if p.len() != raw.dim + 1 {
                return Err(Error::ArityMismatch {
                    expected: raw.dim + 1,
                    got: p.len(),
                });
            }
            pts.push(ProjectivePoint::new(p)?);
        }
        Self::new(pts)
    }
}

#[derive(Serialize, Deserialize)]
struct PointsJson {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

/// The prime ideal of a point: `x_i - p_i x_j` for `i != j`, where `j` is
/// the last nonzero coordinate.
pub fn point_ideal(p: &ProjectivePoint) -> Ideal {
    let ring = ring_for_dim(p.dim());
    let n = ring.arity();
    let j = p.last_nonzero();
    let gens = (0..n)
        .filter(|&i| i != j)
        .map(|i| {
            let terms = vec![
                (Monomial::var(n, i), Rational::one()),
                (Monomial::var(n, j), -p.coords[i].clone()),
            ];
            Polynomial::from_terms(&ring, terms)
        })
        .collect();
    Ideal::new(&ring, gens).expect("same ring")
}

/// Kernel of evaluation at the points on degree-`d` forms, as coefficient
/// vectors over `monomials_of_degree(n, d)`.
fn vanishing_forms(cfg: &PointConfiguration, mons: &[Monomial]) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = cfg
        .points
        .iter()
        .map(|p| mons.iter().map(|m| p.eval_monomial(m)).collect())
        .collect();
    Matrix::from_rows(rows).expect("rectangular").nullspace()
}

/// Defining ideal of the configuration, minimally generated.
///
/// Built degree by degree from the forms vanishing on the points: new
/// generators in degree `d` are the vanishing forms not already in
/// `m · I_{d-1}`. Generation stops one degree after the points impose
/// independent conditions, which bounds the generator degrees.
pub fn ideal_of_points(cfg: &PointConfiguration) -> Ideal {
    let ring = cfg.ring();
    let n = ring.arity();
    let s = cfg.len();
    let mut gens = Vec::new();
    let mut prev: Vec<Polynomial> = Vec::new();
    let mut settled_at: Option<u32> = None;
    let mut d = 1u32;
    loop {
        let mons = monomials_of_degree(n, d);
        let kernel = vanishing_forms(cfg, &mons);
        let col: std::collections::HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut ech = Echelon::new();
        for f in &prev {
            for v in 0..n {
                let g = f.mul_term(&Monomial::var(n, v), &Rational::one());
                let mut vec = vec![Rational::zero(); mons.len()];
                for (m, c) in g.terms() {
                    vec[col[m]] = c.clone();
                }
                ech.insert(vec);
            }
        }
        let forms: Vec<Polynomial> = kernel
            .into_iter()
            .map(|v| {
                let terms = mons
                    .iter()
                    .cloned()
                    .zip(v)
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                Polynomial::from_terms(&ring, terms).primitive()
            })
            .collect();
        for f in &forms {
            let mut vec = vec![Rational::zero(); mons.len()];
            for (m, c) in f.terms() {
                vec[col[m]] = c.clone();
            }
            if ech.insert(vec) {
                gens.push(f.clone());
            }
        }
        if settled_at.is_none() && mons.len() - forms.len() == s {
            settled_at = Some(d);
        }
        if settled_at.is_some_and(|d0| d > d0) {
            break;
        }
        prev = forms;
        d += 1;
    }
    Ideal::new(&ring, gens).expect("same ring")
}

/// `I(p_1) ∩ … ∩ I(p_s)` by repeated ideal intersection. Slower than
/// [`ideal_of_points`]; kept as an independent route.
pub fn ideal_of_points_by_intersection(cfg: &PointConfiguration) -> Result<Ideal> {
    let mut acc = point_ideal(&cfg.points[0]);
    for p in &cfg.points[1..] {
        acc = acc.intersect(&point_ideal(p))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_series;

    fn cfg(p: &[&[i64]]) -> PointConfiguration {
        PointConfiguration::from_ints(p).unwrap()
    }

    fn id(g: &[&str]) -> Ideal {
        Ideal::parse(&PolyRing::plane(), g).unwrap()
    }

    #[test]
    fn normalization() {
        let p = ProjectivePoint::from_ints(&[2, 4, 0]).unwrap();
        assert_eq!(p.to_string(), "[1/2:1:0]");
        assert_eq!(p, ProjectivePoint::from_ints(&[-1, -2, 0]).unwrap());
        assert!(ProjectivePoint::from_ints(&[0, 0, 0]).is_err());
        assert!(PointConfiguration::from_ints(&[&[1, 0, 0], &[2, 0, 0]]).is_err());
    }

    #[test]
    fn point_ideals() {
        let p = ProjectivePoint::from_ints(&[0, 0, 1]).unwrap();
        assert!(point_ideal(&p).equals(&id(&["x", "y"])).unwrap());
        let q = ProjectivePoint::from_ints(&[1, 1, 1]).unwrap();
        assert!(point_ideal(&q).equals(&id(&["x - z", "y - z"])).unwrap());
        let r = ProjectivePoint::from_ints(&[3, -2, 0]).unwrap();
        for g in point_ideal(&r).generators() {
            assert!(g.evaluate(r.coords()).is_zero());
        }
    }

    #[test]
    fn coordinate_points() {
        let c = cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let i = ideal_of_points(&c);
        assert!(i.equals(&id(&["x*y", "x*z", "y*z"])).unwrap());
        assert_eq!(i.generators().len(), 3);
    }

    #[test]
    fn collinear_points() {
        let c = cfg(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, -1, 0]]);
        let i = ideal_of_points(&c);
        assert!(i.equals(&id(&["z", "x^3*y - x*y^3"])).unwrap());
        assert_eq!(i.generators().len(), 2);
    }

    #[test]
    fn five_points_match_explicit_generators() {
        let c = cfg(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 3, 1]]);
        let i = ideal_of_points(&c);
        let expected = id(&[
            "x*y + 3*x*z - 4*y*z",
            "x^2*y - 3*x*y*z + 2*y*z^2",
            "x*y^2 - 3*x*y*z - y^2*z + 3*y*z^2",
        ]);
        assert!(i.equals(&expected).unwrap());
        assert_eq!(i.generators().len(), 3);
        assert_eq!(
            hilbert_series(&i).unwrap(),
            crate::hilbert::HilbertSeries::new(vec![1, 2, 2], 1)
        );
    }

    #[test]
    fn interpolation_agrees_with_intersection() {
        let configs = [
            cfg(&[
                &[1, 0, 0],
                &[0, 1, 0],
                &[0, 0, 1],
                &[1, 1, 1],
                &[2, 3, 1],
                &[5, -1, 1],
            ]),
            cfg(&[
                &[1, 0, 0],
                &[0, 1, 0],
                &[1, 1, 0],
                &[1, 1, 1],
                &[2, 0, 1],
                &[3, 0, 1],
            ]),
            cfg(&[&[1, 2, 3], &[-1, 0, 4], &[2, 2, 1], &[0, 1, 0]]),
        ];
        for c in &configs {
            let a = ideal_of_points(c);
            let b = ideal_of_points_by_intersection(c).unwrap();
            assert!(a.equals(&b).unwrap(), "{a} vs {b}");
            for g in a.generators() {
                for p in c.points() {
                    assert!(g.evaluate(p.coords()).is_zero());
                }
            }
        }
    }

    #[test]
    fn points_in_space() {
        let c =
            PointConfiguration::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[1, 1, 1, 1]]).unwrap();
        let a = ideal_of_points(&c);
        let b = ideal_of_points_by_intersection(&c).unwrap();
        assert!(a.equals(&b).unwrap());
        assert_eq!(hilbert_series(&a).unwrap().multiplicity(), 3);
    }

    #[test]
    fn json_round_trip() {
        let c = cfg(&[&[1, 0, 0], &[2, 3, 1]]);
        let v = c.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"dim":2,"points":[["1","0","0"],["2","3","1"]]}"#
        );
        assert_eq!(PointConfiguration::from_json(&v).unwrap(), c);
        let bad = serde_json::json!({"dim": 2, "points": [["1", "0"]]});
        assert!(PointConfiguration::from_json(&bad).is_err());
    }
}
