use std::collections::HashMap;

use serde_json::json;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::ideals::Ideal;
use crate::linalg::Echelon;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial, Rational};

/// Minimal relations of the Rees algebra of `I/J` over `R/J`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    /// Largest fiber degree of a minimal relation.
    pub relation_type: u32,
    /// `(ring degree, fiber degree)` of each minimal relation, where the ring
    /// degree counts only `x, y, z`.
    pub generator_bidegrees: Vec<(u32, u32)>,
    /// Minimal generators `a_1..a_n` of `I` modulo `J`; `T_i ↦ a_i`.
    pub fiber_generators: Vec<Polynomial>,
    /// The minimal relations, in the ring `T_1..T_n, x, y, z`.
    pub relations: Vec<Polynomial>,
}

impl ReesPresentation {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "relation_type": self.relation_type,
            "generator_bidegrees": self.generator_bidegrees,
            "fiber_generators": self.fiber_generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "relations": self.relations.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn fiber_names(ring: &PolyRing, n: usize) -> Vec<String> {
    let plain: Vec<String> = (1..=n).map(|i| format!("T{i}")).collect();
    if plain.iter().all(|p| ring.var_index(p).is_err()) {
        plain
    } else {
        ring.fresh_names("T", n)
    }
}

/// Relation type of `I/J` in `R/J`, with its minimal relations.
///
/// The relation ideal is `(J + (T_i - a_i·t)) ∩ R[T]`, found by eliminating
/// `t`. It is bigraded by `deg x = (1, 0)`, `deg T_i = (deg a_i, 1)`, so its
/// reduced basis is bihomogeneous; minimal generators modulo `J·R[T]` are
/// then extracted weighted degree by weighted degree. The whole relation
/// ideal is computed, so the reported type is exact; a type above `bound`
/// is an error.
pub fn relation_type(j: &Ideal, i: &Ideal, bound: u32) -> Result<ReesPresentation> {
    if j.ring() != i.ring() {
        return Err(Error::RingMismatch);
    }
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained);
    }
    let ring = j.ring().clone();
    let a = i.minimal_generators_modulo(j)?;
    if a.is_empty() {
        return Err(Error::Precondition(
            "I equals J, there is no Rees algebra to present".into(),
        ));
    }
    let n = a.len();
    let k = ring.arity();
    let tnames = fiber_names(&ring, n);
    let tpar = {
        let mut probe = ring.vars().to_vec();
        probe.extend(tnames.iter().cloned());
        PolyRing::new(&probe)?.fresh_names("t", 1).remove(0)
    };
    let mut names: Vec<String> = vec![tpar];
    names.extend(tnames.iter().cloned());
    names.extend(ring.vars().iter().cloned());
    let big = PolyRing::new(&names)?;
    let to_big: Vec<usize> = (0..k).map(|v| 1 + n + v).collect();
    let mut gens: Vec<Polynomial> = j
        .generators()
        .iter()
        .map(|g| g.embed(&big, &to_big))
        .collect();
    let t = Polynomial::monomial(&big, Monomial::var(1 + n + k, 0), Rational::one());
    for (idx, ai) in a.iter().enumerate() {
        let ti = Polynomial::monomial(&big, Monomial::var(1 + n + k, 1 + idx), Rational::one());
        gens.push(&ti - &(&t * &ai.embed(&big, &to_big)));
    }
    let kernel = Ideal::new(&big, gens)?.eliminate(&[names[0].as_str()])?;
    let fiber_ring = kernel.ring().clone();

    let weights: Vec<u32> = a.iter().map(|g| g.degree().expect("nonzero")).collect();
    let bidegree = |p: &Polynomial| -> (u32, u32, u32) {
        let e = p.terms()[0].0.exponents();
        let fiber: u32 = e[..n].iter().sum();
        let xdeg: u32 = e[n..].iter().sum();
        let w = xdeg + e[..n].iter().zip(&weights).map(|(a, b)| a * b).sum::<u32>();
        (w, fiber, xdeg)
    };
    let mut cands: Vec<(u32, u32, u32, Polynomial)> = kernel
        .generators()
        .iter()
        .map(|p| {
            let (w, f, x) = bidegree(p);
            (w, f, x, p.clone())
        })
        .collect();
    cands.sort_by(|a, b| {
        (a.0, a.1)
            .cmp(&(b.0, b.1))
            .then_with(|| MonomialOrder::DegRevLex.cmp(&a.3.terms()[0].0, &b.3.terms()[0].0))
    });

    let to_fiber: Vec<usize> = (0..k).map(|v| n + v).collect();
    let base: Vec<Polynomial> = j
        .generators()
        .iter()
        .map(|g| g.embed(&fiber_ring, &to_fiber))
        .collect();
    let mut lower = GroebnerBasis::compute(&fiber_ring, &base, MonomialOrder::DegRevLex)?;
    let mut kept: Vec<(u32, u32, Polynomial)> = Vec::new();
    let mut idx = 0;
    while idx < cands.len() {
        let w = cands[idx].0;
        let mut end = idx;
        while end < cands.len() && cands[end].0 == w {
            end += 1;
        }
        let nfs: Vec<Polynomial> = cands[idx..end]
            .iter()
            .map(|c| lower.normal_form(&c.3))
            .collect::<Result<_>>()?;
        let mut cols: HashMap<Monomial, usize> = HashMap::new();
        for p in &nfs {
            for (m, _) in p.terms() {
                let c = cols.len();
                cols.entry(m.clone()).or_insert(c);
            }
        }
        let mut ech = Echelon::new();
        let mut fresh = Vec::new();
        for (c, nf) in cands[idx..end].iter().zip(&nfs) {
            let mut v = vec![Rational::zero(); cols.len()];
            for (m, x) in nf.terms() {
                v[cols[m]] = x.clone();
            }
            if ech.insert(v) {
                fresh.push(c.3.clone());
                kept.push((c.2, c.1, c.3.primitive()));
            }
        }
        if !fresh.is_empty() {
            lower = lower.extend(&fresh)?;
        }
        idx = end;
    }
    let relation_type = kept.iter().map(|k| k.1).max().unwrap_or(0);
    if relation_type > bound {
        return Err(Error::BoundExceeded {
            bound: bound as usize,
            found: relation_type as usize,
        });
    }
    Ok(ReesPresentation {
        relation_type,
        generator_bidegrees: kept.iter().map(|k| (k.0, k.1)).collect(),
        fiber_generators: a,
        relations: kept.into_iter().map(|k| k.2).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ideal_of_points, jacobian, PointConfiguration};

    #[test]
    fn collinear_points_have_maximal_type() {
        for s in [4usize, 5] {
            let pts: Vec<Vec<i64>> = (0..s as i64).map(|k| vec![1, k, 0]).collect();
            let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
            let j = ideal_of_points(&PointConfiguration::from_ints(&refs).unwrap());
            let i = jacobian(&j, 2).unwrap().ideal;
            let rp = relation_type(&j, &i, s as u32).unwrap();
            assert_eq!(rp.relation_type, s as u32);
            assert_eq!(rp.fiber_generators.len(), 2);
            assert!(matches!(
                relation_type(&j, &i, s as u32 - 1),
                Err(Error::BoundExceeded { .. })
            ));
        }
    }

    #[test]
    fn five_general_points_type_two() {
        let cfg = PointConfiguration::from_ints(&[
            &[1, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
            &[1, 1, 1],
            &[2, 3, 1],
        ])
        .unwrap();
        let j = ideal_of_points(&cfg);
        let i = jacobian(&j, 2).unwrap().ideal;
        let rp = relation_type(&j, &i, 5).unwrap();
        assert_eq!(rp.fiber_generators.len(), 4);
        assert!(rp.fiber_generators.iter().all(|g| g.degree() == Some(3)));
        assert_eq!(rp.relation_type, 2);
    }
}
