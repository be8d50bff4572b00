use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::rational::Rational;
use super::ring::PolyRing;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by degrevlex, largest first, with no zero
/// coefficients; this is also the serialization order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: Rational) -> Self {
        Self::from_terms(ring, vec![(Monomial::one(ring.arity()), c)])
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &PolyRing, name: &str) -> Result<Self> {
        let i = ring.var_index(name)?;
        Ok(Self::monomial(
            ring,
            Monomial::var(ring.arity(), i),
            Rational::one(),
        ))
    }

    pub fn monomial(ring: &PolyRing, m: Monomial, c: Rational) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ring.arity());
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self::from_distinct_terms(ring, terms)
    }

    /// Caller guarantees distinct monomials and nonzero coefficients.
    pub(crate) fn from_distinct_terms(
        ring: &PolyRing,
        mut terms: Vec<(Monomial, Rational)>,
    ) -> Self {
        terms.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// Terms in degrevlex-descending order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    /// Maximum total degree of the support; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Minimum total degree of the support; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Leading term under `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<&(Monomial, Rational)> {
        if order == MonomialOrder::DegRevLex {
            return self.terms.first();
        }
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|t| &t.0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponents()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient of `order`, so the result is monic.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Integer coefficients with gcd 1 and a positive leading coefficient
    /// (degrevlex).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rational> = self.terms.iter().map(|(_, c)| c.clone()).collect();
        let mut c = super::rational::content(&coeffs).inv();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        self.scale(&c)
    }

    /// Multiplies by a monomial and a scalar.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        // multiplication by a monomial preserves degrevlex order
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self::from_distinct_terms(&self.ring, terms))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                MonomialOrder::DegRevLex.cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn differentiate(&self, var: &str) -> Result<Self> {
        let i = self.ring.var_index(var)?;
        Ok(self.differentiate_index(i))
    }

    pub fn differentiate_index(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[i];
                let mut m2 = m.clone();
                m2.exps_mut()[i] -= 1;
                (m2, c * &Rational::from_int(e as i64))
            })
            .collect();
        Self::from_terms(&self.ring, terms)
    }

    /// Applies the linear change of coordinates `x_i -> sum_j M[i][j] x_j`.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Self> {
        let n = self.ring.arity();
        if m.rows() != n || m.cols() != n {
            return Err(Error::InvalidArgument(format!(
                "substitution matrix must be {n}x{n}"
            )));
        }
        if m.rank() < n {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                let terms = (0..n)
                    .map(|j| (Monomial::var(n, j), m.get(i, j).clone()))
                    .collect();
                Self::from_terms(&self.ring, terms)
            })
            .collect();
        Ok(self.substitute(&images))
    }

    /// Replaces variable `i` by `images[i]`; images may live in another ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.arity());
        let target = images[0].ring().clone();
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Self::one(p.ring())]).collect();
        let mut out = Self::zero(&target);
        for (mono, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &e) in mono.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e as usize];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `target` variable `map[i]`.
    pub fn embed(&self, target: &PolyRing, map: &[usize]) -> Self {
        let n = target.arity();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.exponents().iter().enumerate() {
                    e.exps_mut()[map[i]] += x;
                }
                (e, c.clone())
            })
            .collect();
        Self::from_terms(target, terms)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, v) in m.exponents().iter().zip(point) {
                if *e > 0 {
                    t = &t * &v.pow(*e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Exact division by `d`; `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let (lm, lc) = d.leading_term(order)?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term(order).cloned() {
            let q = m.div(&lm)?;
            let qc = &c / &lc;
            rem = &rem - &d.mul_term(&q, &qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Canonical text in the crate's polynomial grammar.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display(vars))?;
            } else {
                write!(f, "{a}*{}", m.display(vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator sugar; panics on ring mismatch. Use the `checked_*` methods for
// fallible arithmetic.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }
}
