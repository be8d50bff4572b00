//! Buchberger kernel over an arbitrary coefficient field.
//!
//! Monomials are stored as `[W·e | e]` where `W` is the integer weight matrix
//! of the active order, so the derived lexicographic `Ord` on the packed
//! vector *is* the monomial order and products are plain vector sums.

use std::collections::{BTreeMap, BTreeSet};

use smallvec::SmallVec;

use super::int::{primitive_integers, Int};
use crate::poly::{Field, Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

type Exp = i16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct Mon(SmallVec<[Exp; 32]>);

pub(crate) type Terms<F> = Vec<(Mon, F)>;

/// Order-specific monomial arithmetic.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    n: usize,
    order: MonomialOrder,
    weights: Vec<Vec<Exp>>,
    bits: usize,
}

impl Ctx {
    pub fn new(n: usize, order: MonomialOrder) -> Self {
        let weights = order
            .weight_rows(n)
            .into_iter()
            .map(|r| r.into_iter().map(|w| w as Exp).collect())
            .collect();
        Ctx {
            n,
            order,
            weights,
            bits: (64 / n.max(1)).clamp(1, 8),
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn mon(&self, exps: &[u32]) -> Mon {
        let mut v: SmallVec<[Exp; 32]> = SmallVec::with_capacity(2 * self.n);
        for row in &self.weights {
            let k: i64 = row
                .iter()
                .zip(exps)
                .map(|(w, e)| *w as i64 * *e as i64)
                .sum();
            v.push(Exp::try_from(k).expect("monomial degree exceeds engine range"));
        }
        v.extend(
            exps.iter()
                .map(|&e| Exp::try_from(e).expect("exponent exceeds engine range")),
        );
        Mon(v)
    }

    #[inline]
    pub fn exps<'a>(&self, m: &'a Mon) -> &'a [Exp] {
        &m.0[self.n..]
    }

    pub fn to_monomial(&self, m: &Mon) -> Monomial {
        let e: Vec<u32> = self.exps(m).iter().map(|&x| x as u32).collect();
        Monomial::from_exponents(&e)
    }

    #[inline]
    pub fn mul(&self, a: &Mon, b: &Mon) -> Mon {
        Mon(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    /// `a / b`; caller guarantees divisibility.
    #[inline]
    pub fn div(&self, a: &Mon, b: &Mon) -> Mon {
        Mon(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect())
    }

    #[inline]
    pub fn divides(&self, a: &Mon, b: &Mon) -> bool {
        self.exps(a).iter().zip(self.exps(b)).all(|(x, y)| x <= y)
    }

    pub fn lcm(&self, a: &Mon, b: &Mon) -> Mon {
        let e: Vec<u32> = self
            .exps(a)
            .iter()
            .zip(self.exps(b))
            .map(|(x, y)| *x.max(y) as u32)
            .collect();
        self.mon(&e)
    }

    pub fn coprime(&self, a: &Mon, b: &Mon) -> bool {
        self.exps(a)
            .iter()
            .zip(self.exps(b))
            .all(|(x, y)| *x == 0 || *y == 0)
    }

    pub fn degree(&self, m: &Mon) -> u32 {
        self.exps(m).iter().map(|&e| e as u32).sum()
    }

    /// Bit `i*bits + k` is set when exponent `i` exceeds `k`.
    pub fn mask(&self, m: &Mon) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps(m).iter().enumerate() {
            for k in 0..(e as usize).min(self.bits) {
                let bit = i * self.bits + k;
                if bit < 64 {
                    mask |= 1 << bit;
                }
            }
        }
        mask
    }

    /// Converts a polynomial, dropping it to `None` when a coefficient has no
    /// image in `F`.
    pub fn import<F: Field>(&self, p: &Polynomial) -> Option<Terms<F>> {
        let mut t = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            t.push((self.mon(m.exponents()), F::from_rational(c)?));
        }
        t.sort_by(|a, b| b.0.cmp(&a.0));
        Some(t)
    }

    /// Primitive integer multiple of a nonzero polynomial.
    pub fn import_int(&self, p: &Polynomial) -> Terms<Int> {
        if p.is_zero() {
            return Vec::new();
        }
        let coeffs: Vec<Rational> = p.terms().iter().map(|(_, c)| c.clone()).collect();
        let ints = primitive_integers(&coeffs);
        let mut t: Terms<Int> = p
            .terms()
            .iter()
            .zip(ints)
            .map(|((m, _), c)| (self.mon(m.exponents()), c))
            .collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        Int::normalize(&mut t);
        t
    }

    pub fn export(&self, ring: &PolyRing, t: &Terms<Rational>) -> Polynomial {
        Polynomial::from_distinct_terms(
            ring,
            t.iter()
                .map(|(m, c)| (self.to_monomial(m), c.clone()))
                .collect(),
        )
    }

    pub fn poly_degree<F>(&self, t: &Terms<F>) -> u32 {
        t.iter().map(|(m, _)| self.degree(m)).max().unwrap_or(0)
    }
}

/// Coefficients the reduction kernel can work with: a field, or the
/// integers with fraction-free cancellation.
pub(crate) trait Scalar: Clone + std::fmt::Debug + Send + Sync + 'static {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `(u, v)` with `u·c = v·lead`, so `u·(c·m) - v·(lead·m)` cancels.
    fn cancel(c: &Self, lead: &Self) -> (Self, Self);
    /// Canonical multiple of a nonzero polynomial.
    fn normalize(t: &mut Terms<Self>);
}

impl<F: Field> Scalar for F {
    fn is_zero(&self) -> bool {
        Field::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Field::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Field::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Field::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Field::neg(self)
    }
    fn cancel(c: &Self, lead: &Self) -> (Self, Self) {
        let v = if Field::is_one(lead) {
            c.clone()
        } else {
            Field::mul(c, &lead.inv())
        };
        (F::one(), v)
    }
    fn normalize(t: &mut Terms<Self>) {
        make_monic(t)
    }
}

impl Scalar for Int {
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Int::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Int::add(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Int::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Int::neg(self)
    }
    fn cancel(c: &Self, lead: &Self) -> (Self, Self) {
        Int::cancel(c, lead)
    }
    /// Divides by the content and makes the leading coefficient positive.
    fn normalize(t: &mut Terms<Self>) {
        let mut g = Int::zero();
        for (_, c) in t.iter() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if t.first().is_some_and(|(_, c)| c.is_negative()) {
            g = g.neg();
        }
        if !g.is_one() && !g.is_zero() {
            for (_, c) in t.iter_mut() {
                *c = c.div_exact(&g);
            }
        }
    }
}

/// Primitive integer multiple of rational terms.
pub(crate) fn to_int_terms(t: &Terms<Rational>) -> Terms<Int> {
    if t.is_empty() {
        return Vec::new();
    }
    let coeffs: Vec<Rational> = t.iter().map(|(_, c)| c.clone()).collect();
    let mut out: Terms<Int> = t
        .iter()
        .map(|(m, _)| m.clone())
        .zip(primitive_integers(&coeffs))
        .collect();
    Int::normalize(&mut out);
    out
}

/// Monic rational multiple of integer terms.
pub(crate) fn to_monic_terms(t: &Terms<Int>) -> Terms<Rational> {
    let Some((_, lead)) = t.first() else {
        return Vec::new();
    };
    let inv = lead.to_rational().inv();
    t.iter()
        .map(|(m, c)| (m.clone(), &c.to_rational() * &inv))
        .collect()
}

pub(crate) fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv();
            for (_, c) in t.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// A normalized polynomial with its cached lead data.
#[derive(Clone, Debug)]
pub(crate) struct Elem<F> {
    pub terms: Terms<F>,
    pub mask: u64,
    pub sugar: u32,
}

impl<F: Scalar> Elem<F> {
    fn new(ctx: &Ctx, terms: Terms<F>, sugar: u32) -> Self {
        let mask = ctx.mask(&terms[0].0);
        Elem { terms, mask, sugar }
    }

    #[inline]
    pub fn lead(&self) -> &Mon {
        &self.terms[0].0
    }
}

/// Finds the first reducer (in slice order) whose lead divides `m`.
#[inline]
fn find_reducer<'a, F: Scalar>(ctx: &Ctx, red: &'a [&'a Elem<F>], m: &Mon) -> Option<&'a Elem<F>> {
    let mm = ctx.mask(m);
    red.iter()
        .find(|g| g.mask & !mm == 0 && ctx.divides(g.lead(), m))
        .copied()
}

fn acc_add<F: Scalar>(acc: &mut BTreeMap<Mon, F>, m: Mon, c: F) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Full reduction of the accumulator contents; returns a nonzero multiple
/// of the remainder (the remainder itself over a field), in descending
/// order and not normalized. When `scale` is given it is multiplied by the
/// factor applied to the input.
fn reduce_acc<F: Scalar>(
    ctx: &Ctx,
    mut acc: BTreeMap<Mon, F>,
    red: &[&Elem<F>],
    scale: &mut Option<F>,
) -> Terms<F> {
    let mut out: Terms<F> = Vec::new();
    while let Some((m, c)) = acc.pop_last() {
        match find_reducer(ctx, red, &m) {
            Some(g) => {
                let q = ctx.div(&m, g.lead());
                let (u, v) = F::cancel(&c, &g.terms[0].1);
                if !u.is_one() {
                    for x in acc.values_mut() {
                        *x = x.mul(&u);
                    }
                    for (_, x) in out.iter_mut() {
                        *x = x.mul(&u);
                    }
                    if let Some(k) = scale.as_mut() {
                        *k = k.mul(&u);
                    }
                }
                for (t, a) in &g.terms[1..] {
                    acc_add(&mut acc, ctx.mul(t, &q), v.mul(a).neg());
                }
            }
            None => out.push((m, c)),
        }
    }
    out
}

pub(crate) fn normal_form<F: Scalar>(ctx: &Ctx, p: &Terms<F>, red: &[&Elem<F>]) -> Terms<F> {
    let acc: BTreeMap<Mon, F> = p.iter().cloned().collect();
    reduce_acc(ctx, acc, red, &mut None)
}

/// S-polynomial of `a` and `b` minus its cancelled leading term.
fn spoly<F: Scalar>(ctx: &Ctx, a: &Elem<F>, b: &Elem<F>, lcm: &Mon) -> BTreeMap<Mon, F> {
    let (ua, ub) = (ctx.div(lcm, a.lead()), ctx.div(lcm, b.lead()));
    let (ka, kb) = F::cancel(&a.terms[0].1, &b.terms[0].1);
    let mut acc = BTreeMap::new();
    for (t, c) in &a.terms[1..] {
        acc_add(&mut acc, ctx.mul(t, &ua), c.mul(&ka));
    }
    for (t, c) in &b.terms[1..] {
        acc_add(&mut acc, ctx.mul(t, &ub), c.mul(&kb).neg());
    }
    acc
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct PairKey {
    sugar: u32,
    lcm: Mon,
    seq: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Work {
    Input(usize),
    Pair(usize, usize),
}

struct State<'c, F> {
    ctx: &'c Ctx,
    basis: Vec<Elem<F>>,
    active: Vec<usize>,
    queue: BTreeSet<(PairKey, Work)>,
    seq: usize,
}

impl<'c, F: Scalar> State<'c, F> {
    fn new(ctx: &'c Ctx) -> Self {
        State {
            ctx,
            basis: Vec::new(),
            active: Vec::new(),
            queue: BTreeSet::new(),
            seq: 0,
        }
    }

    fn next_seq(&mut self) -> usize {
        self.seq += 1;
        self.seq
    }

    fn reducers(&self) -> Vec<&Elem<F>> {
        self.active.iter().map(|&i| &self.basis[i]).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Mon) -> u32 {
        let d = self.ctx.degree(lcm);
        let (a, b) = (&self.basis[i], &self.basis[j]);
        (a.sugar + d - self.ctx.degree(a.lead())).max(b.sugar + d - self.ctx.degree(b.lead()))
    }

    /// Gebauer–Möller update after appending basis element `h`.
    fn update(&mut self, h: usize) {
        let ctx = self.ctx;
        let lh = self.basis[h].lead().clone();
        let cands: Vec<(usize, Mon, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.basis[g].lead();
                (g, ctx.lcm(&lh, lg), ctx.coprime(&lh, lg))
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep = vec![true; cands.len()];
        for (a, (_, la, cop)) in cands.iter().enumerate() {
            if *cop {
                continue;
            }
            for (b, (_, lb, _)) in cands.iter().enumerate() {
                if a == b || !keep[b] {
                    continue;
                }
                if ctx.divides(lb, la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // chain criterion on the old pairs
        let lcm_with_h: std::collections::HashMap<usize, &Mon> =
            cands.iter().map(|(g, l, _)| (*g, l)).collect();
        let lcm_h = |i: usize| -> Mon {
            match lcm_with_h.get(&i) {
                Some(m) => (*m).clone(),
                None => ctx.lcm(&lh, self.basis[i].lead()),
            }
        };
        let stale: Vec<(PairKey, Work)> = self
            .queue
            .iter()
            .filter(|(k, w)| match *w {
                Work::Pair(i, j) => {
                    ctx.divides(&lh, &k.lcm) && lcm_h(i) != k.lcm && lcm_h(j) != k.lcm
                }
                Work::Input(_) => false,
            })
            .cloned()
            .collect();
        for s in stale {
            self.queue.remove(&s);
        }
        // product criterion, then enqueue the survivors
        for (idx, (g, l, cop)) in cands.into_iter().enumerate() {
            if !keep[idx] || cop {
                continue;
            }
            let sugar = self.pair_sugar(g, h, &l);
            let seq = self.next_seq();
            self.queue
                .insert((PairKey { sugar, lcm: l, seq }, Work::Pair(g, h)));
        }
        let basis = &self.basis;
        self.active.retain(|&g| !ctx.divides(&lh, basis[g].lead()));
        self.active.push(h);
    }

    fn spoly_acc(&self, i: usize, j: usize, lcm: &Mon) -> BTreeMap<Mon, F> {
        let ctx = self.ctx;
        let (a, b) = (&self.basis[i], &self.basis[j]);
        spoly(ctx, a, b, lcm)
    }

    fn insert(&mut self, mut r: Terms<F>, sugar: u32) {
        F::normalize(&mut r);
        let e = Elem::new(self.ctx, r, sugar);
        self.basis.push(e);
        let h = self.basis.len() - 1;
        self.update(h);
    }

    fn run(&mut self, inputs: &[Terms<F>]) {
        while let Some((key, work)) = self.queue.pop_first() {
            let acc = match work {
                Work::Input(k) => inputs[k].iter().cloned().collect(),
                Work::Pair(i, j) => self.spoly_acc(i, j, &key.lcm),
            };
            let red = self.reducers();
            let r = reduce_acc(self.ctx, acc, &red, &mut None);
            if !r.is_empty() {
                let sugar = key.sugar.max(self.ctx.poly_degree(&r));
                self.insert(r, sugar);
            }
        }
    }

    fn reduced_basis(&self) -> Vec<Terms<F>> {
        let ctx = self.ctx;
        let red = self.reducers();
        let mut out: Vec<Terms<F>> = red
            .iter()
            .map(|g| {
                let tail: BTreeMap<Mon, F> = g.terms[1..].iter().cloned().collect();
                let (m, c) = g.terms[0].clone();
                let mut scale = Some(c);
                let rest = reduce_acc(ctx, tail, &red, &mut scale);
                let mut t = vec![(m, scale.expect("set"))];
                t.extend(rest);
                F::normalize(&mut t);
                t
            })
            .collect();
        out.sort_by(|a, b| a[0].0.cmp(&b[0].0));
        out
    }
}

/// Reduced Gröbner basis, sorted by lead monomial ascending.
pub(crate) fn groebner<F: Scalar>(ctx: &Ctx, gens: Vec<Terms<F>>) -> Vec<Terms<F>> {
    groebner_extend(ctx, Vec::new(), gens)
}

/// Reduced Gröbner basis of `old + new` where `old` is already a Gröbner
/// basis; pairs among `old` are known to reduce to zero and are skipped.
pub(crate) fn groebner_extend<F: Scalar>(
    ctx: &Ctx,
    old: Vec<Terms<F>>,
    new: Vec<Terms<F>>,
) -> Vec<Terms<F>> {
    let mut st = State::new(ctx);
    for mut g in old.into_iter().filter(|g| !g.is_empty()) {
        F::normalize(&mut g);
        let sugar = ctx.poly_degree(&g);
        st.insert(g, sugar);
    }
    st.queue.clear();
    let mut inputs: Vec<Terms<F>> = new.into_iter().filter(|g| !g.is_empty()).collect();
    inputs.sort_by(|a, b| a[0].0.cmp(&b[0].0));
    for (k, g) in inputs.iter().enumerate() {
        let key = PairKey {
            sugar: ctx.poly_degree(g),
            lcm: g[0].0.clone(),
            seq: k,
        };
        st.queue.insert((key, Work::Input(k)));
    }
    st.seq = inputs.len();
    st.run(&inputs);
    st.reduced_basis()
}

/// Wraps basis polynomials as reducers.
pub(crate) fn elems<F: Scalar>(ctx: &Ctx, basis: &[Terms<F>]) -> Vec<Elem<F>> {
    basis
        .iter()
        .map(|t| Elem::new(ctx, t.clone(), ctx.poly_degree(t)))
        .collect()
}

/// True iff every S-polynomial of `g` reduces to zero; no criteria applied.
pub(crate) fn is_groebner<F: Scalar>(ctx: &Ctx, g: &[Terms<F>]) -> bool {
    let mut basis: Vec<Terms<F>> = g.iter().filter(|t| !t.is_empty()).cloned().collect();
    for t in basis.iter_mut() {
        F::normalize(t);
    }
    let el = elems(ctx, &basis);
    let red: Vec<&Elem<F>> = el.iter().collect();
    for i in 0..el.len() {
        for j in i + 1..el.len() {
            let lcm = ctx.lcm(el[i].lead(), el[j].lead());
            let acc = spoly(ctx, &el[i], &el[j], &lcm);
            if !reduce_acc(ctx, acc, &red, &mut None).is_empty() {
                return false;
            }
        }
    }
    true
}
