//! The Valabrega–Valla module `⊕_t (J ∩ I^t)/(J·I^{t-1})`: graded pieces,
//! torsion-freeness verdicts and explicit witnesses.

mod rees;

pub use rees::{relation_type, ReesPresentation};

use std::collections::{BTreeMap, HashMap};

use serde_json::json;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_series, HilbertSeries};
use crate::ideals::Ideal;
use crate::linalg::Matrix;
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, Rational};

/// Result of comparing `J ∩ I^t` with `J·I^{t-1}` for one `t`.
#[derive(Clone, Debug)]
pub struct PieceReport {
    pub t: u32,
    pub equal: bool,
    /// Nonzero dimensions of the quotient, by degree.
    pub graded_dims: BTreeMap<u32, u64>,
    pub witness: Option<Polynomial>,
    /// Equality was deduced from the relation type rather than computed.
    pub implied: bool,
}

/// Torsion-freeness check of `J ⊆ I` for `t = 2..=tmax`.
///
/// Checking stops at the first `t` with `J ∩ I^t ≠ J·I^{t-1}`, since that
/// already decides the verdict; `per_t` then ends with the failing entry.
#[derive(Clone, Debug)]
pub struct VVReport {
    pub base: Ideal,
    pub jacobian: Ideal,
    pub tmax: u32,
    /// Relation type of `I/J`, when it was used to shorten the check.
    pub relation_type: Option<u32>,
    pub per_t: Vec<PieceReport>,
    pub torsion_free: bool,
}

impl VVReport {
    pub fn first_failure(&self) -> Option<&PieceReport> {
        self.per_t.iter().find(|p| !p.equal)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let per_t: Vec<serde_json::Value> = self
            .per_t
            .iter()
            .map(|p| {
                let dims: serde_json::Map<String, serde_json::Value> = p
                    .graded_dims
                    .iter()
                    .map(|(d, v)| (d.to_string(), json!(v)))
                    .collect();
                json!({
                    "t": p.t,
                    "equal": p.equal,
                    "implied": p.implied,
                    "graded_dims": dims,
                    "witness": p.witness.as_ref().map(|w| w.to_string()),
                })
            })
            .collect();
        json!({
            "verdict": if self.torsion_free { "torsion-free" } else { "not torsion-free" },
            "tmax": self.tmax,
            "relation_type": self.relation_type,
            "per_t": per_t,
            "base": self.base.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "jacobian": self.jacobian.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn check_pair(j: &Ideal, i: &Ideal, t: u32) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidArgument("t must be at least 2".into()));
    }
    if j.ring() != i.ring() {
        return Err(Error::RingMismatch);
    }
    if !j.is_homogeneous() || !i.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained);
    }
    Ok(())
}

/// `I^1, I^2, …` built on demand.
struct Powers {
    list: Vec<Ideal>,
}

impl Powers {
    fn new(i: &Ideal) -> Self {
        Powers {
            list: vec![i.clone()],
        }
    }

    fn get(&mut self, t: u32) -> Result<Ideal> {
        while self.list.len() < t as usize {
            let next = self.list.last().expect("nonempty").product(&self.list[0])?;
            self.list.push(next);
        }
        Ok(self.list[t as usize - 1].clone())
    }
}

/// The two ideals of the comparison at `t` and the series of their
/// quotients. `J ∩ I^t` is never formed: its series comes from
/// `HS(R/J) + HS(R/I^t) - HS(R/(J + I^t))`.
fn piece_series(j: &Ideal, it: &Ideal, it1: &Ideal) -> Result<(Ideal, BTreeMap<u32, u64>)> {
    let prod = j.product(it1)?;
    let lower = hilbert_series(&prod)?;
    let sum = j.sum_extending(it)?;
    let upper: HilbertSeries = hilbert_series(j)?
        .add(&hilbert_series(it)?)
        .sub(&hilbert_series(&sum)?);
    let diff = lower.sub(&upper);
    let coeffs = diff.as_polynomial().ok_or_else(|| {
        Error::Precondition("the quotient has infinite length; is I m-primary modulo J?".into())
    })?;
    let mut dims = BTreeMap::new();
    for (d, &c) in coeffs.iter().enumerate() {
        if c < 0 {
            return Err(Error::Format(format!(
                "negative quotient dimension {c} in degree {d}"
            )));
        }
        if c > 0 {
            dims.insert(d as u32, c as u64);
        }
    }
    Ok((prod, dims))
}

/// Dimensions of `(J ∩ I^t)/(J·I^{t-1})` by degree (zero degrees omitted).
///
/// Since `J·I^{t-1} ⊆ J ∩ I^t`, the two ideals are equal exactly when the
/// map is empty.
pub fn vv_piece(j: &Ideal, i: &Ideal, t: u32) -> Result<BTreeMap<u32, u64>> {
    check_pair(j, i, t)?;
    Ok(piece_series(j, &i.power(t)?, &i.power(t - 1)?)?.1)
}

/// Coefficient vector of `p` on `cols`.
fn coords(p: &Polynomial, cols: &HashMap<Monomial, usize>, width: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); width];
    for (m, c) in p.terms() {
        v[cols[m]] = c.clone();
    }
    v
}

/// An element of `(J ∩ I^t)_d` outside `J·I^{t-1}`, for the given degree.
///
/// `(J ∩ I^t)_d` is the kernel of `v ↦ (NF_J(v), NF_{I^t}(v))` on degree-`d`
/// forms; its reduced row-echelon basis (columns in descending degrevlex
/// order) is scanned for the first vector not in `J·I^{t-1}`.
fn witness_in_degree(j: &Ideal, it: &Ideal, prod: &Ideal, d: u32) -> Result<Option<Polynomial>> {
    let ring = j.ring().clone();
    let mut mons = monomials_of_degree(ring.arity(), d);
    mons.sort_by(|a, b| MonomialOrder::DegRevLex.cmp(b, a));
    let (gj, gi, gp) = (j.gb()?, it.gb()?, prod.gb()?);
    let mut images: Vec<(Polynomial, Polynomial)> = Vec::with_capacity(mons.len());
    let mut out_cols: HashMap<Monomial, usize> = HashMap::new();
    for m in &mons {
        let p = Polynomial::monomial(&ring, m.clone(), Rational::one());
        let (a, b) = (gj.normal_form(&p)?, gi.normal_form(&p)?);
        for (mm, _) in a.terms().iter().chain(b.terms()) {
            let k = out_cols.len();
            out_cols.entry(mm.clone()).or_insert(k);
        }
        images.push((a, b));
    }
    // rows: J-image coordinates, then I^t-image coordinates
    let w = out_cols.len();
    let mut rows = vec![vec![Rational::zero(); mons.len()]; 2 * w];
    for (c, (a, b)) in images.iter().enumerate() {
        for (k, v) in coords(a, &out_cols, w).into_iter().enumerate() {
            rows[k][c] = v;
        }
        for (k, v) in coords(b, &out_cols, w).into_iter().enumerate() {
            rows[w + k][c] = v;
        }
    }
    let kernel = if rows.is_empty() {
        (0..mons.len())
            .map(|c| {
                let mut v = vec![Rational::zero(); mons.len()];
                v[c] = Rational::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows)?.nullspace()
    };
    if kernel.is_empty() {
        return Ok(None);
    }
    let (basis, pivots) = Matrix::from_rows(kernel)?.rref();
    for r in 0..pivots.len() {
        let terms = mons
            .iter()
            .cloned()
            .zip(basis.row(r).iter().cloned())
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let f = Polynomial::from_terms(&ring, terms);
        if !gp.reduces_to_zero(&f)? {
            return Ok(Some(f.primitive()));
        }
    }
    Ok(None)
}

/// A least-degree element of `J ∩ I^t` not in `J·I^{t-1}`, or `None` when
/// the two ideals agree.
pub fn vv_witness(j: &Ideal, i: &Ideal, t: u32) -> Result<Option<Polynomial>> {
    check_pair(j, i, t)?;
    let it = i.power(t)?;
    let (prod, dims) = piece_series(j, &it, &i.power(t - 1)?)?;
    match dims.keys().next() {
        None => Ok(None),
        Some(&d) => witness_in_degree(j, &it, &prod, d),
    }
}

/// True iff `var^k ∈ I` for every variable, i.e. `I` is primary to the
/// homogeneous maximal ideal.
fn is_maximal_primary(i: &Ideal) -> Result<bool> {
    for v in i.ring().vars() {
        if i.min_pure_power(v)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn piece_report(j: &Ideal, it: &Ideal, it1: &Ideal, t: u32) -> Result<PieceReport> {
    let (prod, dims) = piece_series(j, it, it1)?;
    let witness = match dims.keys().next() {
        None => None,
        Some(&d) => witness_in_degree(j, it, &prod, d)?,
    };
    Ok(PieceReport {
        t,
        equal: dims.is_empty(),
        graded_dims: dims,
        witness,
        implied: false,
    })
}

/// Worker count from `VVKIT_THREADS`, default 1.
pub fn thread_count() -> usize {
    std::env::var("VVKIT_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or(1)
}

/// Computes the pieces for `t = 2..=last` in order, stopping at the first
/// failure.
fn direct_pieces(j: &Ideal, i: &Ideal, last: u32) -> Result<Vec<PieceReport>> {
    let mut per_t = Vec::new();
    if last < 2 {
        return Ok(per_t);
    }
    let mut powers = Powers::new(i);
    let threads = thread_count();
    if threads > 1 {
        let ps: Vec<Ideal> = (1..=last).map(|t| powers.get(t)).collect::<Result<_>>()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        let reports: Vec<Result<PieceReport>> = pool.install(|| {
            use rayon::prelude::*;
            (2..=last)
                .into_par_iter()
                .map(|t| piece_report(j, &ps[t as usize - 1], &ps[t as usize - 2], t))
                .collect()
        });
        for r in reports {
            let r = r?;
            let stop = !r.equal;
            per_t.push(r);
            if stop {
                break;
            }
        }
    } else {
        for t in 2..=last {
            let r = piece_report(j, &powers.get(t)?, &powers.get(t - 1)?, t)?;
            let stop = !r.equal;
            per_t.push(r);
            if stop {
                break;
            }
        }
    }
    Ok(per_t)
}

fn check_preconditions(j: &Ideal, i: &Ideal) -> Result<()> {
    check_pair(j, i, 2)?;
    if !is_maximal_primary(i)? {
        return Err(Error::Precondition(
            "the Jacobian ideal is not primary to the maximal ideal (points not reduced?)".into(),
        ));
    }
    Ok(())
}

fn assemble(j: &Ideal, i: &Ideal, tmax: u32, rt: Option<u32>, per_t: Vec<PieceReport>) -> VVReport {
    let torsion_free = per_t.iter().all(|p| p.equal);
    VVReport {
        base: j.clone(),
        jacobian: i.clone(),
        tmax,
        relation_type: rt,
        per_t,
        torsion_free,
    }
}

/// Checks `J ∩ I^t = J·I^{t-1}` directly for every `t = 2..=tmax`, stopping
/// at the first failure. `I` must be primary to the maximal ideal and
/// contain `J`.
pub fn vv_torsion_free_up_to(j: &Ideal, i: &Ideal, tmax: u32) -> Result<VVReport> {
    check_preconditions(j, i)?;
    let tmax = tmax.max(2);
    let per_t = direct_pieces(j, i, tmax)?;
    Ok(assemble(j, i, tmax, None, per_t))
}

/// Verdict for the defining ideal `J` of `s` reduced points and its Jacobian
/// ideal `I`, covering `t = 2..=s`; equality there implies it for every `t`.
///
/// The relation type `r` of `I/J` is computed first. The Aluffi algebra
/// `⊕ I^t/J·I^{t-1}` sits between the symmetric and Rees algebras of `I/J`,
/// and the kernel of the symmetric-to-Rees map is generated in degrees
/// `≤ r`; so once the pieces vanish for `t ≤ r` they vanish for all `t`.
/// Pieces with `r < t ≤ s` are therefore reported as implied. If the
/// relation type exceeds `s` every `t` is computed directly.
pub fn vv_torsion_free(j: &Ideal, i: &Ideal, s: usize) -> Result<VVReport> {
    check_preconditions(j, i)?;
    let tmax = (s as u32).max(2);
    let rt = match relation_type(j, i, tmax) {
        Ok(p) => Some(p.relation_type),
        Err(Error::BoundExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let last = rt.map_or(tmax, |r| r.clamp(2, tmax));
    let mut per_t = direct_pieces(j, i, last)?;
    if per_t.iter().all(|p| p.equal) {
        for t in last + 1..=tmax {
            per_t.push(PieceReport {
                t,
                equal: true,
                graded_dims: BTreeMap::new(),
                witness: None,
                implied: true,
            });
        }
    }
    Ok(assemble(j, i, tmax, rt, per_t))
}

/// True iff `m^e ⊆ I`.
pub fn mpower_in_ideal(i: &Ideal, e: u32) -> Result<bool> {
    if !i.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    i.contains_maximal_power(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{ideal_of_points, jacobian, PointConfiguration};
    use crate::poly::{parse_polynomial, PolyRing};

    fn plane(g: &[&str]) -> Ideal {
        Ideal::parse(&PolyRing::plane(), g).unwrap()
    }

    fn pair(pts: &[&[i64]]) -> (Ideal, Ideal) {
        let cfg = PointConfiguration::from_ints(pts).unwrap();
        let j = ideal_of_points(&cfg);
        let i = jacobian(&j, 2).unwrap().ideal;
        (j, i)
    }

    #[test]
    fn four_collinear_points_fail_at_two() {
        let j = plane(&["z", "x^3*y - x*y^3"]);
        let i = jacobian(&j, 2).unwrap().ideal;
        let dims = vv_piece(&j, &i, 2).unwrap();
        assert!(!dims.is_empty());
        let w = vv_witness(&j, &i, 2).unwrap().unwrap();
        assert_eq!(w.degree(), dims.keys().next().copied());
        assert!(j.contains(&w).unwrap());
        assert!(i.power(2).unwrap().contains(&w).unwrap());
        assert!(!j.product(&i).unwrap().contains(&w).unwrap());
        // the classical witness y^4 f
        let y4f = &parse_polynomial("y^4", j.ring()).unwrap() * &j.generators()[1];
        assert!(i.power(2).unwrap().contains(&y4f).unwrap());
        assert!(!j.product(&i).unwrap().contains(&y4f).unwrap());
        let report = vv_torsion_free(&j, &i, 4).unwrap();
        assert!(!report.torsion_free);
        assert_eq!(report.first_failure().unwrap().t, 2);
    }

    #[test]
    fn five_general_points_are_torsion_free() {
        let (j, i) = pair(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[2, 3, 1]]);
        assert!(vv_piece(&j, &i, 2).unwrap().is_empty());
        assert!(vv_witness(&j, &i, 2).unwrap().is_none());
        let report = vv_torsion_free(&j, &i, 5).unwrap();
        assert!(report.torsion_free);
        assert_eq!(report.relation_type, Some(2));
        assert_eq!(report.per_t.len(), 4);
        assert!(!report.per_t[0].implied && report.per_t[1].implied);
        let direct = vv_torsion_free_up_to(&j, &i, 5).unwrap();
        assert!(direct.torsion_free);
        assert!(direct.per_t.iter().all(|p| !p.implied));
    }

    #[test]
    fn containment_is_required() {
        let j = plane(&["x"]);
        let i = plane(&["y", "z"]);
        assert!(matches!(vv_piece(&j, &i, 2), Err(Error::NotContained)));
        assert!(vv_piece(&j, &plane(&["x", "y"]), 1).is_err());
    }

    #[test]
    fn non_primary_jacobian_is_rejected() {
        let j = plane(&["x"]);
        let i = plane(&["x", "y"]);
        assert!(matches!(
            vv_torsion_free(&j, &i, 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn maximal_powers() {
        assert!(!mpower_in_ideal(&plane(&["x"]), 5).unwrap());
        assert!(mpower_in_ideal(&plane(&["x^2", "y^2", "z^2"]), 4).unwrap());
        assert!(!mpower_in_ideal(&plane(&["x^2", "y^2", "z^2"]), 3).unwrap());
    }
}
