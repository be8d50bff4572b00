//! Dense exact linear algebra over the rationals.

use crate::error::{Error, Result};
use crate::groebner::int::{primitive_integers, Int};
use crate::poly::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument("matrix shapes do not chain".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * rv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(
                "determinant of a non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inv();
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) * &inv;
                for j in c..n {
                    let v = m.get(i, j) - &(&f * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f);
                }
                v
            })
            .collect()
    }

    /// Solves `M x = b`; `None` when inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if b.len() != self.rows {
            return Err(Error::InvalidArgument(
                "right-hand side length mismatch".into(),
            ));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `Q^n`.
///
/// Rows are stored as primitive integer vectors sorted by pivot and reduced
/// fraction-free, so no rational arithmetic happens during insertion.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Int>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// A nonzero multiple of `v` reduced against the stored rows, or `None`
    /// if `v` lies in the span.
    fn reduced(&self, v: &[Rational]) -> Option<Vec<Int>> {
        if v.iter().all(Rational::is_zero) {
            return None;
        }
        let mut w = primitive_integers(v);
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let (a, b) = Int::cancel(&w[*p], &row[*p]);
            for (x, r) in w.iter_mut().zip(row) {
                let scaled = if a.is_one() { x.clone() } else { x.mul(&a) };
                *x = if r.is_zero() {
                    scaled
                } else {
                    scaled.add(&r.mul(&b).neg())
                };
            }
            if !a.is_one() {
                make_primitive(&mut w);
            }
        }
        if w.iter().all(Int::is_zero) {
            None
        } else {
            make_primitive(&mut w);
            Some(w)
        }
    }

    /// Adds `v` to the span; returns false if it was already dependent.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let Some(w) = self.reduced(&v) else {
            return false;
        };
        let p = w.iter().position(|c| !c.is_zero()).expect("nonzero");
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, w));
        true
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduced(v).is_none()
    }
}

fn make_primitive(w: &mut [Int]) {
    let mut g = Int::zero();
    for x in w.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for x in w.iter_mut() {
            *x = x.div_exact(&g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_rank() {
        let m = Matrix::from_i64(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        assert_eq!(m.det().unwrap(), Rational::from_int(0));
        assert_eq!(m.rank(), 2);
        let n = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(n.det().unwrap(), Rational::from_int(-1));
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 9]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = Matrix::from_rows(v.into_iter().map(|x| vec![x]).collect()).unwrap();
            let prod = m.mul(&col).unwrap();
            assert!((0..2).all(|i| prod.get(i, 0).is_zero()));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_i64(&[&[1, 1], &[1, -1]]);
        let x = m
            .solve(&[Rational::from_int(3), Rational::from_int(1)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![Rational::from_int(2), Rational::from_int(1)]);
        let s = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        assert!(s
            .solve(&[Rational::from_int(1), Rational::from_int(3)])
            .unwrap()
            .is_none());
    }

    #[test]
    fn echelon_tracks_span() {
        let mut e = Echelon::new();
        let v = |a: &[i64]| a.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>();
        assert!(e.insert(v(&[1, 2, 0])));
        assert!(e.insert(v(&[0, 1, 1])));
        assert!(!e.insert(v(&[2, 5, 1])));
        assert!(e.contains(&v(&[1, 3, 1])));
        assert!(!e.contains(&v(&[0, 0, 1])));
        assert_eq!(e.rank(), 2);
    }
}
