use std::fmt;
use std::sync::Arc;

use super::engine::{self, Ctx, Elem, Terms};
use crate::error::{Error, Result};
use crate::poly::{Fp, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// A reduced Gröbner basis: monic, auto-reduced, sorted by lead ascending.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    inner: Arc<Inner>,
}

struct Inner {
    ctx: Ctx,
    raw: Vec<Terms<Rational>>,
    elems: Vec<Elem<Rational>>,
}

fn check_inputs(ring: &PolyRing, gens: &[Polynomial], order: MonomialOrder) -> Result<()> {
    order.validate(ring.arity())?;
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

impl GroebnerBasis {
    /// Computes the reduced Gröbner basis of the ideal generated by `gens`.
    pub fn compute(ring: &PolyRing, gens: &[Polynomial], order: MonomialOrder) -> Result<Self> {
        check_inputs(ring, gens, order)?;
        let ctx = Ctx::new(ring.arity(), order);
        let input = gens.iter().map(|g| ctx.import_int(g)).collect();
        let raw = engine::groebner(&ctx, input)
            .iter()
            .map(engine::to_monic_terms)
            .collect();
        Ok(Self::from_raw(ring, ctx, raw))
    }

    /// Gröbner basis of `self + (more)`, reusing the work already done.
    pub fn extend(&self, more: &[Polynomial]) -> Result<Self> {
        check_inputs(&self.ring, more, self.order)?;
        let ctx = &self.inner.ctx;
        let input = more.iter().map(|g| ctx.import_int(g)).collect();
        let old = self.inner.raw.iter().map(engine::to_int_terms).collect();
        let raw = engine::groebner_extend(ctx, old, input)
            .iter()
            .map(engine::to_monic_terms)
            .collect();
        Ok(Self::from_raw(&self.ring, ctx.clone(), raw))
    }

    fn from_raw(ring: &PolyRing, ctx: Ctx, raw: Vec<Terms<Rational>>) -> Self {
        let elements = raw.iter().map(|t| ctx.export(ring, t)).collect();
        let elems = engine::elems(&ctx, &raw);
        GroebnerBasis {
            ring: ring.clone(),
            order: ctx.order(),
            elements,
            inner: Arc::new(Inner { ctx, raw, elems }),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let ctx = &self.inner.ctx;
        let t = ctx.import::<Rational>(p).expect("rationals import");
        let red: Vec<&Elem<Rational>> = self.inner.elems.iter().collect();
        let r = engine::normal_form(ctx, &t, &red);
        Ok(ctx.export(&self.ring, &r))
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Lead monomials, in basis order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.inner
            .raw
            .iter()
            .map(|t| self.inner.ctx.to_monomial(&t[0].0))
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.ring.arity(), self.leading_monomials())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order)
            .field("elements", &self.elements)
            .finish()
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` (drops non-minimal and duplicate monomials) and
    /// sorts them by degrevlex ascending.
    pub fn new(arity: usize, gens: Vec<Monomial>) -> Self {
        let mut gens = gens;
        gens.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(a, b));
        gens.dedup();
        let mut min: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !min.iter().any(|m| m.divides(&g)) {
                min.push(g);
            }
        }
        MonomialIdeal { arity, gens: min }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn display(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|m| m.display(vars).to_string())
            .collect();
        format!("({})", parts.join(", "))
    }
}

/// Reduced Gröbner basis of `gens` under `order`.
pub fn reduced_groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = gens.first().ok_or(Error::ZeroIdeal)?.ring().clone();
    GroebnerBasis::compute(&ring, gens, order)
}

/// Normal form of `p` modulo `g`.
pub fn normal_form(p: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    g.normal_form(p)
}

/// Independent Buchberger test: every S-polynomial of `gens` reduces to zero.
/// No pair criteria are used.
pub fn is_groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    check_inputs(first.ring(), gens, order)?;
    let ctx = Ctx::new(first.ring().arity(), order);
    let t: Vec<Terms<Rational>> = gens
        .iter()
        .map(|g| ctx.import(g).expect("rationals import"))
        .collect();
    Ok(engine::is_groebner(&ctx, &t))
}

/// Lead monomials of the reduced Gröbner basis computed modulo the fixed
/// 31-bit prime. `None` if some coefficient has no image mod p.
///
/// The answer agrees with the rational computation except for finitely many
/// unlucky primes, so it is only ever used as a prefilter.
pub fn modular_initial_ideal(
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<Option<MonomialIdeal>> {
    let Some(first) = gens.first() else {
        return Err(Error::ZeroIdeal);
    };
    check_inputs(first.ring(), gens, order)?;
    let n = first.ring().arity();
    let ctx = Ctx::new(n, order);
    let mut input = Vec::with_capacity(gens.len());
    for g in gens {
        match ctx.import::<Fp>(g) {
            Some(t) => input.push(t),
            None => return Ok(None),
        }
    }
    let raw = engine::groebner(&ctx, input);
    let leads = raw.iter().map(|t| ctx.to_monomial(&t[0].0)).collect();
    Ok(Some(MonomialIdeal::new(n, leads)))
}
