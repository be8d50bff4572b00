use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Global monomial orders. Variable precedence is the ring's declaration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Block order: degrevlex on the first `k` variables, then degrevlex on
    /// the rest. Any monomial touching the first block beats every monomial
    /// that does not.
    Elimination(usize),
}

impl MonomialOrder {
    /// Compares two monomials of equal arity.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => ea.cmp(eb),
            MonomialOrder::DegRevLex => degrevlex(ea, eb),
            MonomialOrder::Elimination(k) => {
                let k = k.min(ea.len());
                degrevlex(&ea[..k], &eb[..k]).then_with(|| degrevlex(&ea[k..], &eb[k..]))
            }
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch {
                expected: a.arity(),
                got: b.arity(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Integer weight matrix `W` with `a > b  <=>  W a >_lex W b`.
    pub fn weight_rows(&self, n: usize) -> Vec<Vec<i32>> {
        fn block(rows: &mut Vec<Vec<i32>>, n: usize, lo: usize, hi: usize) {
            if lo >= hi {
                return;
            }
            let mut r = vec![0; n];
            r[lo..hi].iter_mut().for_each(|w| *w = 1);
            rows.push(r);
            for i in (lo + 1..hi).rev() {
                let mut r = vec![0; n];
                r[i] = -1;
                rows.push(r);
            }
        }
        let mut rows = Vec::with_capacity(n);
        match *self {
            MonomialOrder::Lex => {
                for i in 0..n {
                    let mut r = vec![0; n];
                    r[i] = 1;
                    rows.push(r);
                }
            }
            MonomialOrder::DegRevLex => block(&mut rows, n, 0, n),
            MonomialOrder::Elimination(k) => {
                let k = k.min(n);
                block(&mut rows, n, 0, k);
                block(&mut rows, n, k, n);
            }
        }
        rows
    }

    pub fn validate(&self, arity: usize) -> Result<()> {
        match *self {
            MonomialOrder::Elimination(k) if k == 0 || k >= arity => Err(Error::InvalidArgument(
                format!("elimination block size {k} must lie in 1..{arity}"),
            )),
            _ => Ok(()),
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::DegRevLex => f.write_str("degrevlex"),
            MonomialOrder::Elimination(k) => write!(f, "elim:{k}"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" | "grevlex" | "drl" => Ok(MonomialOrder::DegRevLex),
            _ => s
                .strip_prefix("elim:")
                .and_then(|k| k.parse().ok())
                .map(MonomialOrder::Elimination)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown monomial order `{s}`"))),
        }
    }
}
