//! Registry of reproducible claims about Jacobian ideals of plane points.
//!
//! Each claim rebuilds its objects from pinned coordinates or seeds, runs
//! the exact computations and compares against the expected values. A
//! report lists every individual check, so a failing claim says which part
//! failed.

mod collinear;
mod general;
mod small;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::geometry::{ideal_of_points, jacobian, PointConfiguration};
use crate::hilbert::HilbertSeries;
use crate::ideals::Ideal;
use crate::poly::{PolyRing, Polynomial, Rational};

pub use general::{conjecture_experiment, ConjectureTrial};

/// Seed used for every sampled configuration.
pub const SAMPLE_SEED: u64 = 3;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The computation ran but there is no truth value to compare with.
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub claim: String,
    pub status: ClaimStatus,
    pub details: Value,
}

impl ClaimReport {
    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "status": self.status,
            "details": self.details,
        })
    }

    /// 0 for pass or indeterminate, 1 for fail.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            ClaimStatus::Fail => 1,
            _ => 0,
        }
    }

    /// Names of the checks that did not hold.
    pub fn failed_checks(&self) -> Vec<String> {
        self.details["checks"]
            .as_array()
            .map(|a| {
                a.iter()
                    .filter(|c| c["ok"] == Value::Bool(false))
                    .filter_map(|c| c["name"].as_str().map(str::to_string))
                    .collect()
            })
            .unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReproOptions {
    /// Also run the extended variants (more seeds, larger `s`).
    pub slow: bool,
}

pub struct ReproClaim {
    pub id: &'static str,
    pub description: &'static str,
    run: fn(&ReproOptions) -> Result<ClaimReport>,
}

impl ReproClaim {
    pub fn run(&self, opts: &ReproOptions) -> Result<ClaimReport> {
        (self.run)(opts)
    }
}

static REGISTRY: &[ReproClaim] = &[
    ReproClaim {
        id: "R15b",
        description: "s collinear points: relation type s, yet y^(2s-4) f witnesses J ∩ I^2 ≠ J·I (s = 4, 5)",
        run: collinear::r15b,
    },
    ReproClaim {
        id: "FOUR",
        description: "every configuration of four points fails torsion-freeness",
        run: small::four_points,
    },
    ReproClaim {
        id: "T22-claim",
        description: "(s-1)-fold collinear, s = 6: (f) ∩ a^2 ≠ (f)·a with the printed Hilbert series; s = 5 inequality",
        run: collinear::t22,
    },
    ReproClaim {
        id: "T23",
        description: "(s-2)-fold collinear off-variant, s = 8: generators, Hilbert series and the degree-2 witness E",
        run: collinear::t23,
    },
    ReproClaim {
        id: "T23-s7",
        description: "(s-2)-fold collinear, s = 7, both variants: computed verdicts, no expected value",
        run: collinear::t23_s7,
    },
    ReproClaim {
        id: "T24",
        description: "(s-3)-fold collinear plus three general points, s = 9: (a : G) = (z), Hilbert series and witness",
        run: collinear::t24,
    },
    ReproClaim {
        id: "P41",
        description: "five points: torsion-free exactly for cases 1, 4, 5; case 1 series, 4 cubics, relation type 2",
        run: small::p41,
    },
    ReproClaim {
        id: "P42",
        description: "binomial(d+1,2) general points, d = 3, 4: degree-d generators, initial ideal, Hilbert function",
        run: general::p42,
    },
    ReproClaim {
        id: "P43",
        description: "six general points: the 2-minors of the Jacobian matrix generate m^4",
        run: general::p43_d3,
    },
    ReproClaim {
        id: "P43-d4",
        description: "ten general points: the 2-minors generate m^6",
        run: general::p43_d4,
    },
    ReproClaim {
        id: "P43-d5",
        description: "fifteen general points: the 2-minors generate m^8",
        run: general::p43_d5,
    },
    ReproClaim {
        id: "P44",
        description: "six points: not torsion-free exactly for cases 2, 3, 7, 11; normal forms of cases 8, 9, 10",
        run: small::p44,
    },
    ReproClaim {
        id: "P44-w",
        description: "six points, cases 7 and 11: z^(n-1)·(conic) witnesses J ∩ I^2 ≠ J·I, n least with z^n ∈ I",
        run: small::p44_w,
    },
    ReproClaim {
        id: "ATFN",
        description: "relation type of I/J is at most s for every sampled 4-, 5- and 6-point case",
        run: small::atfn,
    },
    ReproClaim {
        id: "CONJ-d6",
        description: "m^(2d-2) ⊆ I for 21 general points (d = 6), three trials; experiment only",
        run: general::conj_d6,
    },
];

/// All claims, in the fixed reporting order.
pub fn registry() -> &'static [ReproClaim] {
    REGISTRY
}

pub fn find_claim(id: &str) -> Result<&'static ReproClaim> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn run_claim(id: &str, opts: &ReproOptions) -> Result<ClaimReport> {
    find_claim(id)?.run(opts)
}

/// Runs every registered claim (in parallel when `VVKIT_THREADS > 1`),
/// returning results in registry order.
pub fn run_all(opts: &ReproOptions) -> Vec<(&'static str, Result<ClaimReport>)> {
    let results = ordered_map(REGISTRY, |c| c.run(opts));
    REGISTRY.iter().map(|c| c.id).zip(results).collect()
}

/// Ordered list of named boolean checks plus free-form observations.
struct Checks {
    id: &'static str,
    items: Vec<(String, bool)>,
    info: Map<String, Value>,
}

impl Checks {
    fn new(id: &'static str) -> Self {
        Checks {
            id,
            items: Vec::new(),
            info: Map::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, ok: bool) -> bool {
        self.items.push((name.into(), ok));
        ok
    }

    fn note(&mut self, key: &str, v: impl Serialize) {
        self.info.insert(
            key.to_string(),
            serde_json::to_value(v).expect("plain data"),
        );
    }

    fn details(self) -> Value {
        let checks: Vec<Value> = self
            .items
            .iter()
            .map(|(n, ok)| json!({"name": n, "ok": ok}))
            .collect();
        let mut m = self.info;
        m.insert("checks".into(), Value::Array(checks));
        Value::Object(m)
    }

    fn finish(self) -> ClaimReport {
        let status = if self.items.iter().all(|(_, ok)| *ok) {
            ClaimStatus::Pass
        } else {
            ClaimStatus::Fail
        };
        ClaimReport {
            claim: self.id.to_string(),
            status,
            details: self.details(),
        }
    }

    fn finish_indeterminate(self) -> ClaimReport {
        ClaimReport {
            claim: self.id.to_string(),
            status: ClaimStatus::Indeterminate,
            details: self.details(),
        }
    }

    /// `w ∈ J`, `w ∈ I^t`, `w ∉ J·I^{t-1}`, each recorded under `label`.
    fn witness(
        &mut self,
        label: &str,
        j: &Ideal,
        i: &Ideal,
        t: u32,
        w: &Polynomial,
    ) -> Result<bool> {
        let in_j = j.contains(w)?;
        let in_it = i.power(t)?.contains(w)?;
        let in_prod = j.product(&i.power(t - 1)?)?.contains(w)?;
        let a = self.check(format!("{label} in J"), in_j);
        let b = self.check(format!("{label} in I^{t}"), in_it);
        let c = self.check(format!("{label} not in J*I^{}", t - 1), !in_prod);
        Ok(a && b && c)
    }
}

fn var(r: &PolyRing, name: &str) -> Polynomial {
    Polynomial::var(r, name).expect("variable of the ring")
}

fn int(r: &PolyRing, c: i64) -> Polynomial {
    Polynomial::constant(r, Rational::from_int(c))
}

/// The line `a·x + b·y + c·z` through two points of the plane.
fn line(p: [i64; 3], q: [i64; 3]) -> Polynomial {
    let r = PolyRing::plane();
    let c = [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ];
    let terms = ["x", "y", "z"]
        .iter()
        .zip(c)
        .map(|(v, k)| &int(&r, k) * &var(&r, v));
    terms.fold(Polynomial::zero(&r), |acc, t| &acc + &t)
}

fn product(ps: impl IntoIterator<Item = Polynomial>, r: &PolyRing) -> Polynomial {
    ps.into_iter().fold(Polynomial::one(r), |acc, p| &acc * &p)
}

fn config(pts: &[[i64; 3]]) -> Result<PointConfiguration> {
    let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
    PointConfiguration::from_ints(&refs)
}

/// Defining ideal of the points and its Jacobian ideal.
fn pair(cfg: &PointConfiguration) -> Result<(Ideal, Ideal)> {
    let j = ideal_of_points(cfg);
    let i = jacobian(&j, cfg.dim())?.ideal;
    Ok((j, i))
}

fn series_text(hs: &HilbertSeries) -> String {
    hs.to_string()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

/// Runs `f` over `items` on the `VVKIT_THREADS` pool, keeping input order.
fn ordered_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    let threads = crate::vava::thread_count();
    if threads <= 1 {
        return items.iter().map(f).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(|| {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }),
        Err(_) => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
        assert!(matches!(
            run_claim("nope", &ReproOptions::default()),
            Err(Error::UnknownClaim(_))
        ));
    }

    #[test]
    fn lines_pass_through_points() {
        let l = line([1, 2, 0], [0, 0, 1]);
        assert_eq!(l.to_string(), "2*x - y");
        let m = line([1, 0, 1], [0, 1, 1]);
        for p in [[1, 0, 1], [0, 1, 1]] {
            let pt: Vec<Rational> = p.iter().map(|&c| Rational::from_int(c)).collect();
            assert!(m.evaluate(&pt).is_zero());
        }
    }

    #[test]
    fn checks_decide_status() {
        let mut c = Checks::new("X");
        c.check("a", true);
        c.note("k", 3);
        let r = c.finish();
        assert_eq!(r.status, ClaimStatus::Pass);
        let mut c = Checks::new("X");
        c.check("a", true);
        c.check("b", false);
        let r = c.finish();
        assert_eq!(r.status, ClaimStatus::Fail);
        assert_eq!(r.failed_checks(), ["b"]);
        assert_eq!(r.exit_code(), 1);
    }
}
