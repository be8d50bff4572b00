//! Points in general linear position: `binomial(d+1, 2)` of them, framed.

use serde::Serialize;
use serde_json::json;

use super::{config, pair, Checks, ClaimReport, ReproOptions, SAMPLE_SEED};
use crate::error::Result;
use crate::geometry::{
    glp_binomial_generators, ideal_of_points, jacobian, sample_framed_general, PointConfiguration,
};
use crate::groebner::MonomialIdeal;
use crate::hilbert::hilbert_function;
use crate::ideals::Ideal;
use crate::poly::{Monomial, MonomialOrder};

fn points_for(d: u32) -> usize {
    (d * (d + 1) / 2) as usize
}

fn binom2(n: u64) -> u64 {
    n * (n - 1) / 2
}

/// `x^{d-i} y^i` for `0 < i < d`, `x^{d-1} z`, `x^{d-2} y z` and `y^d z`.
fn expected_initial(d: u32) -> MonomialIdeal {
    let m = |a: u32, b: u32, c: u32| Monomial::from_exponents(&[a, b, c]);
    let mut gens: Vec<Monomial> = (1..d).map(|i| m(d - i, i, 0)).collect();
    gens.extend([m(d - 1, 0, 1), m(d - 2, 1, 1), m(0, d, 1)]);
    MonomialIdeal::new(3, gens)
}

fn glp_checks(c: &mut Checks, d: u32, name: &str, cfg: &PointConfiguration) -> Result<()> {
    let s = cfg.len() as u64;
    let j = ideal_of_points(cfg);
    let gens = glp_binomial_generators(d, cfg)?;
    c.check(
        format!("{name}: {} forms of degree {d}", d + 1),
        gens.len() == d as usize + 1 && gens.iter().all(|g| g.degree() == Some(d)),
    );
    c.check(
        format!("{name}: the forms generate I(X)"),
        Ideal::new(&cfg.ring(), gens)?.equals(&j)?,
    );
    c.check(
        format!("{name}: degrevlex initial ideal as listed"),
        j.initial_ideal(MonomialOrder::DegRevLex)? == expected_initial(d),
    );
    let mut hf_ok = true;
    for t in 0..=d + 2 {
        hf_ok &= hilbert_function(&j, t)? == s.min(binom2(t as u64 + 2)) as u64;
    }
    c.check(
        format!("{name}: Hilbert function min(s, binomial(t+2, 2)) for t <= d + 2"),
        hf_ok,
    );
    Ok(())
}

pub(super) fn p42(opts: &ReproOptions) -> Result<ClaimReport> {
    let mut c = Checks::new("P42");
    let fixed = config(&[
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [1, 1, 1],
        [2, 3, 1],
        [5, 7, 1],
    ])?;
    glp_checks(&mut c, 3, "six points with [2:3:1], [5:7:1]", &fixed)?;
    let seeds: &[u64] = if opts.slow {
        &[SAMPLE_SEED, 1, 2]
    } else {
        &[SAMPLE_SEED]
    };
    for &seed in seeds {
        for d in [3, 4] {
            let cfg = sample_framed_general(points_for(d), seed)?;
            glp_checks(&mut c, d, &format!("d = {d}, seed {seed}"), &cfg)?;
        }
    }
    Ok(c.finish())
}

/// The 2-minors of the Jacobian matrix generate `m^{2d-2}`.
fn minors_claim(id: &'static str, d: u32) -> Result<ClaimReport> {
    let mut c = Checks::new(id);
    let cfg = sample_framed_general(points_for(d), SAMPLE_SEED)?;
    let (j, i) = pair(&cfg)?;
    let data = jacobian(&j, cfg.dim())?;
    let e = 2 * d - 2;
    let m = Ideal::maximal_power(&cfg.ring(), e);
    c.check(format!("I_2(Theta) = m^{e}"), data.minor_ideal.equals(&m)?);
    c.note("points", cfg.to_json());
    c.note(
        &format!("m^{} in I", e - 1),
        i.contains_maximal_power(e - 1)?,
    );
    Ok(c.finish())
}

pub(super) fn p43_d3(_: &ReproOptions) -> Result<ClaimReport> {
    minors_claim("P43", 3)
}

pub(super) fn p43_d4(_: &ReproOptions) -> Result<ClaimReport> {
    minors_claim("P43-d4", 4)
}

pub(super) fn p43_d5(_: &ReproOptions) -> Result<ClaimReport> {
    minors_claim("P43-d5", 5)
}

/// One run of the `m^{2d-2} ⊆ I` experiment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureTrial {
    pub seed: u64,
    pub d: u32,
    pub s: usize,
    pub points: serde_json::Value,
    /// `m^{2d-2} ⊆ I`.
    pub contains_m_2d_minus_2: bool,
    /// `m^{2d-3} ⊆ I`.
    pub contains_m_2d_minus_3: bool,
}

/// Samples `trials` framed general configurations of `binomial(d+1, 2)`
/// points (seeds `seed, seed + 1, ...`) and tests which powers of the
/// maximal ideal lie in the Jacobian ideal.
pub fn conjecture_experiment(d: u32, seed: u64, trials: u32) -> Result<Vec<ConjectureTrial>> {
    if d < 2 {
        return Err(crate::error::Error::InvalidArgument(
            "d must be at least 2".into(),
        ));
    }
    let seeds: Vec<u64> = (0..trials as u64).map(|k| seed + k).collect();
    super::ordered_map(&seeds, |&sd| {
        let cfg = sample_framed_general(points_for(d), sd)?;
        let (_, i) = pair(&cfg)?;
        let e = 2 * d - 2;
        Ok(ConjectureTrial {
            seed: sd,
            d,
            s: cfg.len(),
            points: cfg.to_json(),
            contains_m_2d_minus_2: i.contains_maximal_power(e)?,
            contains_m_2d_minus_3: i.contains_maximal_power(e - 1)?,
        })
    })
    .into_iter()
    .collect()
}

pub(super) fn conj_d6(_: &ReproOptions) -> Result<ClaimReport> {
    let mut c = Checks::new("CONJ-d6");
    let trials = conjecture_experiment(6, 1, 3)?;
    c.note("kind", "experimental");
    c.note(
        "all_contain_m_2d_minus_2",
        trials.iter().all(|t| t.contains_m_2d_minus_2),
    );
    c.note("trials", json!(trials));
    Ok(c.finish_indeterminate())
}
