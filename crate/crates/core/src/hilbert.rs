//! Hilbert functions and series of graded quotients `R/I`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::ideals::Ideal;
use crate::poly::{monomials_of_degree, Monomial};

/// Node budget of the monomial splitting recursion.
pub const RECURSION_LIMIT: usize = 10_000;

/// `numerator(t) / (1 - t)^pole_order`, with no common `(1 - t)` factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub pole_order: u32,
}

impl HilbertSeries {
    /// Builds and normalizes `num / (1 - t)^pole`.
    pub fn new(numerator: Vec<i64>, pole_order: u32) -> Self {
        let mut hs = HilbertSeries {
            numerator,
            pole_order,
        };
        hs.normalize();
        hs
    }

    fn normalize(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        if self.numerator.is_empty() {
            self.pole_order = 0;
            return;
        }
        while self.pole_order > 0 && self.numerator.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t)
            let mut q = Vec::with_capacity(self.numerator.len() - 1);
            let mut acc = 0i64;
            for &c in &self.numerator[..self.numerator.len() - 1] {
                acc += c;
                q.push(acc);
            }
            self.numerator = q;
            self.pole_order -= 1;
            while self.numerator.last() == Some(&0) {
                self.numerator.pop();
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// The numerator over `(1 - t)^e` for some `e >= pole_order`.
    fn lifted(&self, e: u32) -> Vec<i64> {
        let mut num = self.numerator.clone();
        for _ in self.pole_order..e {
            let mut next = vec![0i64; num.len() + 1];
            for (i, &c) in num.iter().enumerate() {
                next[i] += c;
                next[i + 1] -= c;
            }
            num = next;
        }
        num
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        let e = self.pole_order.max(other.pole_order);
        let (a, b) = (self.lifted(e), other.lifted(e));
        let mut num = vec![0i64; a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            num[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            num[i] += sign * c;
        }
        HilbertSeries::new(num, e)
    }

    /// Coefficient of `t^d` in the power-series expansion.
    pub fn coefficient(&self, d: u32) -> i64 {
        let e = self.pole_order as i64;
        let mut acc = 0i64;
        for (i, &h) in self.numerator.iter().enumerate() {
            let i = i as i64;
            let d = d as i64;
            if i > d {
                break;
            }
            acc += h * if e == 0 {
                (i == d) as i64
            } else {
                binomial(d - i + e - 1, e - 1)
            };
        }
        acc
    }

    /// Value of the numerator at `t = 1` (the multiplicity when `pole_order > 0`).
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// Degree-wise values when the series is a polynomial (`pole_order = 0`).
    pub fn as_polynomial(&self) -> Option<&[i64]> {
        (self.pole_order == 0).then_some(&self.numerator)
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = String::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if parts.is_empty() {
                if c < 0 {
                    parts.push('-');
                }
            } else {
                parts.push_str(if c < 0 { " - " } else { " + " });
            }
            let var = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            if i == 0 || mag != 1 {
                parts.push_str(&mag.to_string());
            }
            parts.push_str(&var);
        }
        if parts.is_empty() {
            parts.push('0');
        }
        match self.pole_order {
            0 => write!(f, "{parts}"),
            1 => write!(f, "({parts})/(1-t)"),
            e => write!(f, "({parts})/(1-t)^{e}"),
        }
    }
}

/// Numerator `N(t)` with `HS(R/M) = N(t)/(1-t)^n`, by pivot splitting
/// `N(M) = N(M + (p)) + t^deg(p) · N(M : p)`.
fn numerator(m: &MonomialIdeal) -> Result<Vec<i64>> {
    let mut memo = HashMap::new();
    let mut nodes = 0usize;
    let gens: Vec<Vec<u32>> = m
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    split(gens, &mut memo, &mut nodes)
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_minus_t_pow(d: u32) -> Vec<i64> {
    let mut v = vec![0i64; d as usize + 1];
    v[0] += 1;
    v[d as usize] -= 1;
    v
}

fn minimalize(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut out: Vec<Vec<u32>> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.iter().zip(&g).all(|(a, b)| a <= b)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn split(
    gens: Vec<Vec<u32>>,
    memo: &mut HashMap<Vec<Vec<u32>>, Vec<i64>>,
    nodes: &mut usize,
) -> Result<Vec<i64>> {
    *nodes += 1;
    if *nodes > RECURSION_LIMIT {
        return Err(Error::RecursionLimit(RECURSION_LIMIT));
    }
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Ok(vec![0]);
    }
    if let Some(v) = memo.get(&gens) {
        return Ok(v.clone());
    }
    let n = gens[0].len();
    let coprime = (0..n).all(|v| gens.iter().filter(|g| g[v] > 0).count() <= 1);
    let result = if coprime {
        gens.iter().fold(vec![1i64], |acc, g| {
            poly_mul(&acc, &one_minus_t_pow(g.iter().sum()))
        })
    } else {
        // variable shared by the most generators
        let var = (0..n)
            .max_by_key(|&v| {
                (
                    gens.iter().filter(|g| g[v] > 0).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("nonempty ring");
        // exponents of `var` in generators that are not pure powers of it;
        // any pure power var^a in the ideal has a larger exponent than these
        let mut exps: Vec<u32> = gens
            .iter()
            .filter(|g| g[var] > 0 && g.iter().enumerate().any(|(i, &e)| i != var && e > 0))
            .map(|g| g[var])
            .collect();
        exps.sort_unstable();
        let e = exps[(exps.len() - 1) / 2];
        let mut plus = gens.clone();
        let mut p = vec![0u32; n];
        p[var] = e;
        plus.push(p);
        let colon: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                h[var] = h[var].saturating_sub(e);
                h
            })
            .collect();
        let a = split(minimalize(plus), memo, nodes)?;
        let b = split(minimalize(colon), memo, nodes)?;
        let mut out = vec![0i64; a.len().max(b.len() + e as usize)];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i + e as usize] += c;
        }
        out
    };
    memo.insert(gens, result.clone());
    Ok(result)
}

/// Hilbert series of `R/M` for a monomial ideal.
pub fn monomial_hilbert_series(m: &MonomialIdeal) -> Result<HilbertSeries> {
    Ok(HilbertSeries::new(numerator(m)?, m.arity() as u32))
}

/// Hilbert series of `R/I`, from the degrevlex initial ideal.
pub fn hilbert_series(i: &Ideal) -> Result<HilbertSeries> {
    if !i.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if i.is_zero() {
        return Ok(HilbertSeries::new(vec![1], i.ring().arity() as u32));
    }
    monomial_hilbert_series(&i.initial_ideal(crate::poly::MonomialOrder::DegRevLex)?)
}

/// `dim (R/I)_d`, counting standard monomials of the degrevlex initial ideal.
pub fn hilbert_function(i: &Ideal, d: u32) -> Result<u64> {
    if !i.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let mons = monomials_of_degree(i.ring().arity(), d);
    if i.is_zero() {
        return Ok(mons.len() as u64);
    }
    let init = i.initial_ideal(crate::poly::MonomialOrder::DegRevLex)?;
    Ok(monomial_hilbert_function(&init, &mons))
}

fn monomial_hilbert_function(init: &MonomialIdeal, mons: &[Monomial]) -> u64 {
    mons.iter().filter(|m| !init.contains(m)).count() as u64
}

/// `HS(R/(A ∩ B)) = HS(R/A) + HS(R/B) - HS(R/(A + B))`.
pub fn intersection_series(a: &Ideal, b: &Ideal) -> Result<HilbertSeries> {
    let sum = a.sum_extending(b)?;
    Ok(hilbert_series(a)?
        .add(&hilbert_series(b)?)
        .sub(&hilbert_series(&sum)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn id(g: &[&str]) -> Ideal {
        Ideal::parse(&PolyRing::plane(), g).unwrap()
    }

    #[test]
    fn complete_intersection_series() {
        let hs = hilbert_series(&id(&["z", "x^3*y - x*y^3"])).unwrap();
        assert_eq!(hs, HilbertSeries::new(vec![1, 1, 1, 1], 1));
        assert_eq!(hs.to_string(), "(1 + t + t^2 + t^3)/(1-t)");
    }

    #[test]
    fn trivial_ideals() {
        let r = PolyRing::plane();
        assert_eq!(hilbert_function(&Ideal::zero(&r), 2).unwrap(), 6);
        assert_eq!(hilbert_function(&id(&["x", "y", "z"]), 3).unwrap(), 0);
        assert_eq!(
            hilbert_series(&Ideal::unit(&r)).unwrap().numerator,
            Vec::<i64>::new()
        );
        assert_eq!(
            hilbert_series(&Ideal::maximal_power(&r, 2)).unwrap(),
            HilbertSeries::new(vec![1, 3], 0)
        );
    }

    #[test]
    fn four_coordinate_like_points() {
        // [1:0:0], [0:1:0], [0:0:1], [1:1:1]
        let i = id(&["x*y - x*z", "x*z - y*z"]);
        assert_eq!(
            hilbert_series(&i).unwrap(),
            HilbertSeries::new(vec![1, 2, 1], 1)
        );
    }

    #[test]
    fn series_arithmetic_normalizes() {
        let a = HilbertSeries::new(vec![1, 2, 2], 1);
        let b = HilbertSeries::new(vec![1, 2, 1], 1);
        let d = a.sub(&b);
        assert_eq!(d, HilbertSeries::new(vec![0, 0, 1], 1));
        assert_eq!(d.coefficient(5), 1);
        assert_eq!(
            HilbertSeries::new(vec![1, -1], 1),
            HilbertSeries::new(vec![1], 0)
        );
    }

    #[test]
    fn series_matches_function() {
        let i = id(&["x^2*y - z^3", "x*y^2 - x^3", "y^4"]);
        let hs = hilbert_series(&i).unwrap();
        for d in 0..12 {
            assert_eq!(
                hs.coefficient(d),
                hilbert_function(&i, d).unwrap() as i64,
                "d={d}"
            );
        }
    }

    #[test]
    fn large_maximal_power_stays_within_budget() {
        let r = PolyRing::plane();
        let hs = hilbert_series(&Ideal::maximal_power(&r, 24)).unwrap();
        assert_eq!(hs.pole_order, 0);
        assert_eq!(
            hs.multiplicity(),
            (0..24).map(|d| (d + 1) * (d + 2) / 2).sum::<i64>()
        );
    }
}
