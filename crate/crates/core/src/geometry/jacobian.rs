use crate::error::{Error, Result};
use crate::ideals::{trim_generators, Ideal};
use crate::poly::{PolyRing, Polynomial};

/// Jacobian matrix of an ideal's generators and the ideal of its minors.
#[derive(Clone, Debug)]
pub struct JacobianData {
    pub base: Ideal,
    /// `theta[i][j] = ∂ gen_i / ∂ var_j`.
    pub theta: Vec<Vec<Polynomial>>,
    pub codim: usize,
    pub minor_ideal: Ideal,
    /// `base + minor_ideal`, minimally generated.
    pub ideal: Ideal,
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Polynomial>], ring: &PolyRing) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        k => {
            let mut acc = Polynomial::zero(ring);
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &det(&sub, ring);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All nonzero `k × k` minors of a polynomial matrix, rows and columns taken
/// in increasing index order.
pub fn minors(matrix: &[Vec<Polynomial>], k: usize) -> Result<Vec<Polynomial>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if k == 0 || k > rows || k > cols {
        return Err(Error::InvalidArgument(format!(
            "cannot take {k}-minors of a {rows}x{cols} matrix"
        )));
    }
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidArgument("ragged matrix".into()));
    }
    let ring = matrix[0][0].ring().clone();
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect())
                .collect();
            let d = det(&sub, &ring);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    Ok(out)
}

/// Jacobian ideal `J + I_c(Θ)` for the given generators of `J` and `c = codim`.
pub fn jacobian(base: &Ideal, codim: usize) -> Result<JacobianData> {
    if !base.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let ring = base.ring().clone();
    let theta: Vec<Vec<Polynomial>> = base
        .generators()
        .iter()
        .map(|g| {
            (0..ring.arity())
                .map(|j| g.differentiate_index(j))
                .collect()
        })
        .collect();
    if theta.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let ms = minors(&theta, codim)?;
    let minor_ideal = Ideal::new(&ring, trim_generators(&ring, ms))?;
    let ideal = Ideal::new(&ring, base.sum(&minor_ideal)?.minimal_generators()?)?;
    Ok(JacobianData {
        base: base.clone(),
        theta,
        codim,
        minor_ideal,
        ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ideal_of_points, PointConfiguration};

    #[test]
    fn two_by_two_determinant() {
        let r = PolyRing::new(&["x", "y", "z", "w"]).unwrap();
        let p = |s: &str| crate::poly::parse_polynomial(s, &r).unwrap();
        let m = vec![vec![p("x"), p("y")], vec![p("z"), p("w")]];
        let ms = minors(&m, 2).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0], p("x*w - y*z"));
        assert_eq!(minors(&m, 1).unwrap().len(), 4);
        assert!(minors(&m, 3).is_err());
    }

    #[test]
    fn three_by_three_determinant() {
        let r = PolyRing::plane();
        let p = |s: &str| crate::poly::parse_polynomial(s, &r).unwrap();
        let m = vec![
            vec![p("x"), p("1"), p("0")],
            vec![p("0"), p("y"), p("1")],
            vec![p("1"), p("0"), p("z")],
        ];
        assert_eq!(minors(&m, 3).unwrap()[0], p("x*y*z + 1"));
    }

    #[test]
    fn collinear_points_jacobian() {
        let j = Ideal::parse(&PolyRing::plane(), &["z", "x^3*y - x*y^3"]).unwrap();
        let data = jacobian(&j, 2).unwrap();
        let expected =
            Ideal::parse(&PolyRing::plane(), &["z", "3*x^2*y - y^3", "x^3 - 3*x*y^2"]).unwrap();
        assert!(data.ideal.equals(&expected).unwrap());
        assert!(data.ideal.contains_ideal(&j).unwrap());
        assert_eq!(data.theta[0][2].to_string(), "1");
    }

    #[test]
    fn six_general_points_minors() {
        let cfg = PointConfiguration::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[2, 3, 1],
            &[5, -1, 1],
        ])
        .unwrap();
        let data = jacobian(&ideal_of_points(&cfg), 2).unwrap();
        let m4 = Ideal::maximal_power(&PolyRing::plane(), 4);
        assert!(data.minor_ideal.equals(&m4).unwrap());
        assert!(data.ideal.contains_maximal_power(4).unwrap());
    }
}
