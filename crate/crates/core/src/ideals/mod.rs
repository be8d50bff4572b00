//! Ideals with cached Gröbner bases and the usual ideal-theoretic operations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, MonomialIdeal};
use crate::linalg::{Echelon, Matrix};
use crate::poly::{
    monomials_of_degree, parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial, Rational,
};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingJson {
    vars: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    ring: RingJson,
    gens: Vec<String>,
}

type Cache = Arc<Mutex<HashMap<MonomialOrder, Arc<OnceLock<GroebnerBasis>>>>>;

/// An ideal of a polynomial ring, given by generators.
///
/// Clones share the Gröbner-basis cache. Equality of ideals is decided by
/// [`Ideal::equals`], never by comparing generator lists.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: Cache,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Cache::default(),
        })
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| parse_polynomial(g, ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    /// `{"ring": {"vars": [...]}, "gens": ["<poly>", ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(IdealJson {
            ring: RingJson {
                vars: self.ring.vars().to_vec(),
            },
            gens: self.gens.iter().map(|g| g.to_string()).collect(),
        })
        .expect("plain data")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: IdealJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))?;
        let ring = PolyRing::new(&raw.ring.vars)?;
        let gens: Vec<&str> = raw.gens.iter().map(String::as_str).collect();
        Self::parse(&ring, &gens)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        Self::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn unit(ring: &PolyRing) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The power `m^e` of the homogeneous maximal ideal, by its monomials.
    pub fn maximal_power(ring: &PolyRing, e: u32) -> Self {
        let gens = monomials_of_degree(ring.arity(), e)
            .into_iter()
            .map(|m| Polynomial::monomial(ring, m, Rational::one()))
            .collect();
        Self::new(ring, gens).expect("same ring")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NonHomogeneous)
        }
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Reduced Gröbner basis under `order`, computed once per order.
    pub fn groebner(&self, order: MonomialOrder) -> Result<GroebnerBasis> {
        order.validate(self.ring.arity())?;
        let slot = {
            let mut map = self.cache.lock().expect("cache poisoned");
            map.entry(order).or_default().clone()
        };
        Ok(slot
            .get_or_init(|| {
                GroebnerBasis::compute(&self.ring, &self.gens, order).expect("validated inputs")
            })
            .clone())
    }

    /// Degrevlex Gröbner basis.
    pub fn gb(&self) -> Result<GroebnerBasis> {
        self.groebner(MonomialOrder::DegRevLex)
    }

    /// An ideal generated by `gb`'s elements with that basis pre-cached.
    pub fn from_groebner(gb: &GroebnerBasis) -> Self {
        let ideal = Self::new(gb.ring(), gb.elements().to_vec()).expect("same ring");
        ideal
            .cache
            .lock()
            .expect("fresh cache")
            .entry(gb.order())
            .or_default()
            .get_or_init(|| gb.clone());
        ideal
    }

    pub fn initial_ideal(&self, order: MonomialOrder) -> Result<MonomialIdeal> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.groebner(order)?.initial_ideal())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        self.gb()?.reduces_to_zero(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() == other.is_zero());
        }
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Sum whose degrevlex basis is computed by extending `self`'s.
    pub fn sum_extending(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        let gb = self.gb()?.extend(&other.gens)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        let ideal = Ideal::new(&self.ring, gens)?;
        ideal
            .cache
            .lock()
            .expect("fresh cache")
            .entry(MonomialOrder::DegRevLex)
            .or_default()
            .get_or_init(|| gb);
        Ok(ideal)
    }

    /// Pairwise products, de-duplicated and trimmed.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                prods.push(f * g);
            }
        }
        Ideal::new(&self.ring, trim_generators(&self.ring, prods))
    }

    pub fn power(&self, t: u32) -> Result<Ideal> {
        if t == 0 {
            return Err(Error::InvalidArgument("ideal power needs t >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self ∩ other` by eliminating `t` from `t·self + (1 − t)·other`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let tname = self.ring.fresh_names("t", 1).remove(0);
        let big = self.ring.with_leading(&[tname.as_str()])?;
        let n = self.ring.arity();
        let shift: Vec<usize> = (1..=n).collect();
        let t = Polynomial::monomial(&big, Monomial::var(n + 1, 0), Rational::one());
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(&t * &f.embed(&big, &shift));
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&big, &shift));
        }
        let elim = Ideal::new(&big, gens)?.eliminate_leading(1, &self.ring)?;
        Ok(elim)
    }

    /// Eliminates the first `k` variables of `self.ring`, returning an ideal
    /// of `target`, whose variables are the remaining ones in order.
    fn eliminate_leading(&self, k: usize, target: &PolyRing) -> Result<Ideal> {
        let gb = self.groebner(MonomialOrder::Elimination(k))?;
        let n = target.arity();
        let keep: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| (0..k).all(|i| p.degree_in(i) == 0))
            .map(|p| {
                let terms = p
                    .terms()
                    .iter()
                    .map(|(m, c)| (Monomial::from_exponents(&m.exponents()[k..]), c.clone()))
                    .collect();
                Polynomial::from_terms(target, terms)
            })
            .collect();
        debug_assert!(keep.iter().all(|p| p.ring().arity() == n));
        Ideal::new(target, keep)
    }

    /// `self ∩ k[remaining variables]`, living in the smaller ring.
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal> {
        let mut idx = Vec::with_capacity(drop.len());
        for d in drop {
            let i = self.ring.var_index(d)?;
            if !idx.contains(&i) {
                idx.push(i);
            }
        }
        if idx.is_empty() {
            return Ok(self.clone());
        }
        if idx.len() >= self.ring.arity() {
            return Err(Error::InvalidArgument(
                "cannot eliminate every variable".into(),
            ));
        }
        idx.sort_unstable();
        let kept: Vec<usize> = (0..self.ring.arity())
            .filter(|i| !idx.contains(i))
            .collect();
        let names: Vec<&str> = idx
            .iter()
            .chain(&kept)
            .map(|&i| self.ring.vars()[i].as_str())
            .collect();
        let perm_ring = PolyRing::new(&names)?;
        // position of each original variable in the permuted ring
        let mut pos = vec![0; self.ring.arity()];
        for (p, &i) in idx.iter().chain(&kept).enumerate() {
            pos[i] = p;
        }
        let target = PolyRing::new(
            &kept
                .iter()
                .map(|&i| self.ring.vars()[i].as_str())
                .collect::<Vec<_>>(),
        )?;
        let moved = self
            .gens
            .iter()
            .map(|g| g.embed(&perm_ring, &pos))
            .collect();
        Ideal::new(&perm_ring, moved)?.eliminate_leading(idx.len(), &target)
    }

    /// The colon ideal `(self : other)`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    fn quotient_by(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .gens
            .iter()
            .map(|h| {
                h.exact_div(g)
                    .ok_or_else(|| Error::Format("intersection element not divisible".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// A minimal homogeneous generating set.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        self.minimal_generators_modulo(&Ideal::zero(&self.ring))
    }

    /// Homogeneous elements of `self` that together with `base` generate
    /// `self`, minimal in number: a basis of `self/(base + m·self)` lifted.
    /// Requires `base ⊆ self`, checked by the caller where it matters.
    pub fn minimal_generators_modulo(&self, base: &Ideal) -> Result<Vec<Polynomial>> {
        self.same_ring(base)?;
        self.require_homogeneous()?;
        base.require_homogeneous()?;
        let mut gens: Vec<&Polynomial> = self.gens.iter().collect();
        gens.sort_by_key(|g| g.degree());
        let mut lower: Option<GroebnerBasis> = if base.is_zero() {
            None
        } else {
            Some(base.gb()?)
        };
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut i = 0;
        while i < gens.len() {
            let d = gens[i].degree().expect("nonzero generator");
            let mut j = i;
            while j < gens.len() && gens[j].degree() == Some(d) {
                j += 1;
            }
            let mons = monomials_of_degree(self.ring.arity(), d);
            let col: HashMap<&Monomial, usize> =
                mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
            let mut ech = Echelon::new();
            let mut fresh = Vec::new();
            for g in &gens[i..j] {
                let r = match &lower {
                    Some(gb) => gb.normal_form(g)?,
                    None => (*g).clone(),
                };
                let mut v = vec![Rational::zero(); mons.len()];
                for (m, c) in r.terms() {
                    v[col[m]] = c.clone();
                }
                if ech.insert(v) {
                    fresh.push((*g).clone());
                }
            }
            if !fresh.is_empty() {
                lower = Some(match lower {
                    Some(gb) => gb.extend(&fresh)?,
                    None => GroebnerBasis::compute(&self.ring, &fresh, MonomialOrder::DegRevLex)?,
                });
                kept.extend(fresh);
            }
            i = j;
        }
        Ok(kept)
    }

    /// Least `n` with `var^n ∈ self`, or `None` if no power of `var` lies in it.
    pub fn min_pure_power(&self, var: &str) -> Result<Option<u32>> {
        let v = self.ring.var_index(var)?;
        if self.is_zero() {
            return Ok(None);
        }
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(Some(0));
        }
        let n = self.ring.arity();
        // var^n ∈ I forces a pure power of var among the lead monomials
        let start = gb
            .leading_monomials()
            .iter()
            .filter(|m| m.degree() == m.exponents()[v])
            .map(Monomial::degree)
            .min();
        let Some(start) = start else {
            return Ok(None);
        };
        let bound = gb
            .elements()
            .iter()
            .filter_map(Polynomial::degree)
            .max()
            .unwrap_or(0)
            + n as u32;
        for e in start..=bound.max(start) {
            let mut m = Monomial::one(n);
            m.exps_mut()[v] = e;
            if gb.reduces_to_zero(&Polynomial::monomial(&self.ring, m, Rational::one()))? {
                return Ok(Some(e));
            }
        }
        Ok(None)
    }

    /// Applies `x_i -> sum_j M[i][j] x_j` to every generator.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.substitute_linear(m))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// True iff every monomial of degree `e` lies in the ideal.
    pub fn contains_maximal_power(&self, e: u32) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let gb = self.gb()?;
        for m in monomials_of_degree(self.ring.arity(), e) {
            if !gb.reduces_to_zero(&Polynomial::monomial(&self.ring, m, Rational::one()))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Drops duplicate generators; for homogeneous input also drops generators
/// that are linear combinations of the kept generators of the same degree.
pub(crate) fn trim_generators(ring: &PolyRing, gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if !gens.iter().all(Polynomial::is_homogeneous) {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gens {
            let m = g.monic(MonomialOrder::DegRevLex);
            if !out.iter().any(|h| h.monic(MonomialOrder::DegRevLex) == m) {
                out.push(g);
            }
        }
        return out;
    }
    let mut by_degree: std::collections::BTreeMap<u32, Vec<Polynomial>> = Default::default();
    for g in gens {
        by_degree
            .entry(g.degree().expect("nonzero"))
            .or_default()
            .push(g);
    }
    let mut out = Vec::new();
    for (d, group) in by_degree {
        let mons = monomials_of_degree(ring.arity(), d);
        let col: HashMap<&Monomial, usize> = mons.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut ech = Echelon::new();
        for g in group {
            let mut v = vec![Rational::zero(); mons.len()];
            for (m, c) in g.terms() {
                v[col[m]] = c.clone();
            }
            if ech.insert(v) {
                out.push(g);
            }
        }
    }
    out
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {:?}", self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> PolyRing {
        PolyRing::plane()
    }

    fn id(g: &[&str]) -> Ideal {
        Ideal::parse(&r(), g).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let i = id(&["x^2 - 1/2*y*z", "z"]);
        let back = Ideal::from_json(&i.to_json()).unwrap();
        assert_eq!(back.generators(), i.generators());
        let bad = serde_json::json!({"ring": {"vars": ["x"]}, "gens": ["y"]});
        assert!(Ideal::from_json(&bad).is_err());
    }

    #[test]
    fn sum_and_product() {
        assert!(id(&["x"])
            .sum(&id(&["y"]))
            .unwrap()
            .equals(&id(&["x", "y"]))
            .unwrap());
        let sq = id(&["x", "y"]).product(&id(&["x", "y"])).unwrap();
        assert_eq!(sq.generators().len(), 3);
        assert!(sq.equals(&id(&["x^2", "x*y", "y^2"])).unwrap());
        assert!(id(&["x"])
            .product(&id(&["y"]))
            .unwrap()
            .equals(&id(&["x*y"]))
            .unwrap());
    }

    #[test]
    fn powers() {
        let m = id(&["x", "y"]);
        assert!(m.power(1).unwrap().equals(&m).unwrap());
        let m4 = m.power(4).unwrap();
        assert!(m.power(2).unwrap().power(2).unwrap().equals(&m4).unwrap());
        assert_eq!(m4.generators().len(), 5);
        assert!(m.power(0).is_err());
    }

    #[test]
    fn intersections() {
        assert!(id(&["x"])
            .intersect(&id(&["y"]))
            .unwrap()
            .equals(&id(&["x*y"]))
            .unwrap());
        let two = id(&["z", "x"]).intersect(&id(&["z", "y"])).unwrap();
        assert!(two.equals(&id(&["z", "x*y"])).unwrap());
    }

    #[test]
    fn quotients() {
        let q = id(&["x*y", "x*z"]).quotient(&id(&["x"])).unwrap();
        assert!(q.equals(&id(&["y", "z"])).unwrap());
        let i = id(&["x^2", "y*z"]);
        assert!(i.quotient(&Ideal::unit(&r())).unwrap().equals(&i).unwrap());
        assert_eq!(i.quotient(&Ideal::zero(&r())).err(), Some(Error::ZeroIdeal));
    }

    #[test]
    fn elimination() {
        let ring = PolyRing::new(&["t", "x", "y", "z"]).unwrap();
        let e = Ideal::parse(&ring, &["t*x - y", "t*y - z"])
            .unwrap()
            .eliminate(&["t"])
            .unwrap();
        assert_eq!(e.ring().vars(), ["x", "y", "z"]);
        assert!(e.equals(&id(&["y^2 - x*z"])).unwrap());
        let z = Ideal::parse(&ring, &["t*x"])
            .unwrap()
            .eliminate(&["t"])
            .unwrap();
        assert!(z.is_zero());
        let x = Ideal::parse(&ring, &["t - 1", "x"])
            .unwrap()
            .eliminate(&["t"])
            .unwrap();
        assert!(x.equals(&id(&["x"])).unwrap());
        assert!(Ideal::parse(&ring, &["t"])
            .unwrap()
            .eliminate(&["t", "x", "y", "z"])
            .is_err());
    }

    #[test]
    fn elimination_of_a_middle_variable() {
        let ring = PolyRing::new(&["x", "t", "y"]).unwrap();
        let e = Ideal::parse(&ring, &["x - t^2", "y - t^3"])
            .unwrap()
            .eliminate(&["t"])
            .unwrap();
        assert_eq!(e.ring().vars(), ["x", "y"]);
        let expect = Ideal::parse(e.ring(), &["x^3 - y^2"]).unwrap();
        assert!(e.equals(&expect).unwrap());
    }

    #[test]
    fn membership_and_equality() {
        assert!(id(&["x^3*y - x*y^3"])
            .contains(&id(&["x^3*y - x*y^3"]).generators()[0])
            .unwrap());
        assert!(!id(&["x^2", "y"])
            .contains(&id(&["x"]).generators()[0])
            .unwrap());
        assert!(id(&["x", "y"]).equals(&id(&["x + y", "y"])).unwrap());
        assert!(!id(&["x"]).equals(&id(&["x^2"])).unwrap());
    }

    #[test]
    fn minimal_generator_counts() {
        let g = id(&["x", "x^2", "y"]).minimal_generators().unwrap();
        let degs: Vec<u32> = g.iter().map(|p| p.degree().unwrap()).collect();
        assert_eq!(degs, [1, 1]);
        let m2 = Ideal::maximal_power(&r(), 2);
        assert_eq!(m2.minimal_generators().unwrap().len(), 6);
        let padded = id(&["x^2", "x*y", "x^3 + x*y^2", "x^2 + x*y"]);
        assert_eq!(padded.minimal_generators().unwrap().len(), 2);
        assert_eq!(
            id(&["x^2 + y"]).minimal_generators().err(),
            Some(Error::NonHomogeneous)
        );
    }

    #[test]
    fn pure_powers() {
        assert_eq!(
            Ideal::maximal_power(&r(), 4).min_pure_power("z").unwrap(),
            Some(4)
        );
        assert_eq!(id(&["x"]).min_pure_power("z").unwrap(), None);
        assert_eq!(
            id(&["x^2 - y*z", "y^2", "z^3"])
                .min_pure_power("x")
                .unwrap(),
            Some(4)
        );
    }

    #[test]
    fn sum_extending_matches_sum() {
        let a = id(&["x^2 - y*z", "y^3"]);
        let b = id(&["x*z^2 - y^2*z"]);
        let s1 = a.sum_extending(&b).unwrap();
        let s2 = a.sum(&b).unwrap();
        assert_eq!(
            s1.gb().unwrap(),
            GroebnerBasis::compute(&r(), s2.generators(), MonomialOrder::DegRevLex).unwrap()
        );
    }
}
