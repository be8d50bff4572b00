//! Randomized algebraic checks shared by the property tests and the
//! acceptance run. Each returns `Err` with a description of the first
//! counterexample.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vvkit::geometry::{
    ideal_of_points, jacobian, sample_config, PointConfiguration, ProjectivePoint,
};
use vvkit::hilbert::hilbert_function;
use vvkit::ideals::Ideal;
use vvkit::linalg::Matrix;
use vvkit::poly::{monomials_of_degree, MonomialOrder, PolyRing, Polynomial, Rational};
use vvkit::vava::vv_torsion_free;

pub type Check = Result<(), String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q(c: i64) -> Rational {
    Rational::from_int(c)
}

/// A nonzero form of degree `d` with at most `terms` terms and coefficients in `[-5, 5]`.
pub fn random_form(r: &mut ChaCha8Rng, ring: &PolyRing, d: u32, terms: usize) -> Polynomial {
    let mons = monomials_of_degree(ring.arity(), d);
    loop {
        let picked: Vec<_> = mons
            .choose_multiple(r, terms.min(mons.len()))
            .cloned()
            .collect();
        let p = Polynomial::from_terms(
            ring,
            picked
                .into_iter()
                .map(|m| (m, q(r.gen_range(-5..=5))))
                .collect(),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

/// Two or three forms of degree 1 to 3 in `x, y, z`.
pub fn random_ideal_gens(r: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let ring = PolyRing::plane();
    let n = r.gen_range(2..=3);
    (0..n)
        .map(|_| {
            let d = r.gen_range(1..=3);
            let t = r.gen_range(1..=3);
            random_form(r, &ring, d, t)
        })
        .collect()
}

/// Rank of the span of all `m·g` with `deg m + deg g = d`, by plain linear
/// algebra on coefficient vectors.
pub fn macaulay_rank(gens: &[Polynomial], d: u32, extra: Option<&Polynomial>) -> usize {
    let ring = gens[0].ring().clone();
    let cols = monomials_of_degree(ring.arity(), d);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gens {
        let Some(e) = g.degree() else { continue };
        if e > d {
            continue;
        }
        for m in monomials_of_degree(ring.arity(), d - e) {
            let p = g.mul_term(&m, &q(1));
            rows.push(cols.iter().map(|c| p.coeff(c)).collect());
        }
    }
    if let Some(f) = extra {
        rows.push(cols.iter().map(|c| f.coeff(c)).collect());
    }
    if rows.is_empty() {
        0
    } else {
        Matrix::from_rows(rows).expect("rectangular").rank()
    }
}

fn binom2(n: u32) -> u64 {
    (n as u64) * (n as u64 - 1) / 2
}

/// Reduced Gröbner bases do not depend on the order or scaling of the
/// generators.
pub fn gb_canonicity(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..cases {
        let gens = random_ideal_gens(&mut r);
        let order = if r.gen_bool(0.5) {
            MonomialOrder::DegRevLex
        } else {
            MonomialOrder::Lex
        };
        let a = Ideal::new(&PolyRing::plane(), gens.clone()).map_err(|e| e.to_string())?;
        let mut shuffled: Vec<Polynomial> = gens
            .iter()
            .map(|g| g.scale(&q(*[-3, -1, 2, 7].choose(&mut r).unwrap())))
            .collect();
        shuffled.shuffle(&mut r);
        let b = Ideal::new(&PolyRing::plane(), shuffled).map_err(|e| e.to_string())?;
        let ga = a.groebner(order).map_err(|e| e.to_string())?;
        let gb = b.groebner(order).map_err(|e| e.to_string())?;
        if ga.elements() != gb.elements() {
            return Err(format!(
                "case {case}: bases differ for {:?}",
                strings(&gens)
            ));
        }
    }
    Ok(())
}

/// `HF(R/I, d)` from the Gröbner basis equals the Macaulay-matrix count,
/// for `d <= 8`.
pub fn hilbert_function_oracle(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for case in 0..cases {
        let gens = random_ideal_gens(&mut r);
        let i = Ideal::new(&PolyRing::plane(), gens.clone()).map_err(|e| e.to_string())?;
        for d in 0..=8 {
            let hf = hilbert_function(&i, d).map_err(|e| e.to_string())?;
            let oracle = binom2(d + 2) - macaulay_rank(&gens, d, None) as u64;
            if hf != oracle {
                return Err(format!(
                    "case {case}, degree {d}: {hf} vs {oracle} for {:?}",
                    strings(&gens)
                ));
            }
        }
    }
    Ok(())
}

/// Membership of a random form agrees with the Macaulay-matrix rank test.
pub fn membership_oracle(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let ring = PolyRing::plane();
    for case in 0..cases {
        let gens = random_ideal_gens(&mut r);
        let i = Ideal::new(&ring, gens.clone()).map_err(|e| e.to_string())?;
        let d = r.gen_range(2..=6);
        // half the time build an element of I
        let f = if r.gen_bool(0.5) {
            gens.iter()
                .filter(|g| g.degree().unwrap() <= d)
                .map(|g| {
                    let e = d - g.degree().unwrap();
                    &random_form(&mut r, &ring, e, 2) * g
                })
                .fold(Polynomial::zero(&ring), |acc, p| &acc + &p)
        } else {
            random_form(&mut r, &ring, d, 3)
        };
        if f.is_zero() {
            continue;
        }
        let member = i.contains(&f).map_err(|e| e.to_string())?;
        let oracle = macaulay_rank(&gens, d, Some(&f)) == macaulay_rank(&gens, d, None);
        if member != oracle {
            return Err(format!(
                "case {case}: {f} in {:?}: {member} vs {oracle}",
                strings(&gens)
            ));
        }
    }
    Ok(())
}

/// `I·J ⊆ I ∩ J ⊆ I ⊆ I + J`, `(I : J)·J ⊆ I`, and equality is invariant
/// under generator shuffles.
pub fn ideal_containments(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let ring = PolyRing::plane();
    let err = |e: vvkit::Error| e.to_string();
    for case in 0..cases {
        let i = Ideal::new(&ring, random_ideal_gens(&mut r)).map_err(err)?;
        let j = Ideal::new(&ring, random_ideal_gens(&mut r)).map_err(err)?;
        let prod = i.product(&j).map_err(err)?;
        let meet = i.intersect(&j).map_err(err)?;
        let sum = i.sum(&j).map_err(err)?;
        let quot = i.quotient(&j).map_err(err)?;
        let chain = [
            meet.contains_ideal(&prod).map_err(err)?,
            i.contains_ideal(&meet).map_err(err)?,
            j.contains_ideal(&meet).map_err(err)?,
            sum.contains_ideal(&i).map_err(err)?,
            i.contains_ideal(&quot.product(&j).map_err(err)?)
                .map_err(err)?,
            quot.contains_ideal(&i).map_err(err)?,
        ];
        if let Some(k) = chain.iter().position(|ok| !ok) {
            return Err(format!("case {case}: containment {k} fails"));
        }
        let mut g = i.generators().to_vec();
        g.reverse();
        if !Ideal::new(&ring, g).map_err(err)?.equals(&i).map_err(err)? {
            return Err(format!(
                "case {case}: equality not invariant under reordering"
            ));
        }
    }
    Ok(())
}

/// `x f_x + y f_y + z f_z = d f` for random forms of degree at most 6.
pub fn euler_identity(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let ring = PolyRing::plane();
    for case in 0..cases {
        let d = r.gen_range(0..=6);
        let terms = r.gen_range(1..=6);
        let f = random_form(&mut r, &ring, d, terms);
        let lhs = (0..3).fold(Polynomial::zero(&ring), |acc, k| {
            let v = Polynomial::var(&ring, &ring.vars()[k]).unwrap();
            &acc + &(&v * &f.differentiate_index(k))
        });
        if lhs != f.scale(&q(d as i64)) {
            return Err(format!("case {case}: Euler identity fails for {f}"));
        }
    }
    Ok(())
}

/// An invertible 3×3 integer matrix with entries in `[-3, 3]`.
pub fn random_invertible(r: &mut ChaCha8Rng) -> Matrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..3)
            .map(|_| (0..3).map(|_| q(r.gen_range(-3..=3))).collect())
            .collect();
        let m = Matrix::from_rows(rows).unwrap();
        if m.rank() == 3 {
            return m;
        }
    }
}

pub fn transform(cfg: &PointConfiguration, m: &Matrix) -> PointConfiguration {
    let pts = cfg
        .points()
        .iter()
        .map(|p| {
            let c = p.coords();
            let image = (0..3)
                .map(|i| (0..3).fold(q(0), |acc, j| &acc + &(m.get(i, j) * &c[j])))
                .collect();
            ProjectivePoint::new(image).unwrap()
        })
        .collect();
    PointConfiguration::new(pts).unwrap()
}

fn verdict(cfg: &PointConfiguration) -> Result<bool, String> {
    let j = ideal_of_points(cfg);
    let i = jacobian(&j, 2).map_err(|e| e.to_string())?.ideal;
    Ok(vv_torsion_free(&j, &i, cfg.len())
        .map_err(|e| e.to_string())?
        .torsion_free)
}

/// Torsion verdicts of the five-point cases survive `changes` random
/// changes of coordinates each.
pub fn projective_invariance(changes: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for k in 1..=5 {
        let label = format!("5-{k}");
        let cfg = sample_config(&label, 3).map_err(|e| e.to_string())?;
        let base = verdict(&cfg)?;
        for n in 0..changes {
            let m = random_invertible(&mut r);
            if verdict(&transform(&cfg, &m))? != base {
                return Err(format!(
                    "{label}: verdict changes under coordinate change {n}"
                ));
            }
        }
    }
    Ok(())
}

pub fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}
