use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A polynomial ring over the rationals, identified by its ordered variable list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        let mut seen: Vec<&str> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidArgument(format!("bad variable name `{v}`")));
            }
            if seen.contains(&v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
            seen.push(v);
        }
        if seen.is_empty() {
            return Err(Error::InvalidArgument(
                "ring needs at least one variable".into(),
            ));
        }
        Ok(PolyRing {
            vars: seen.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// The coordinate ring of the projective plane, `Q[x, y, z]`.
    pub fn plane() -> Self {
        Self::new(&["x", "y", "z"]).expect("static ring")
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A new ring with `extra` prepended to this ring's variables.
    pub fn with_leading(&self, extra: &[&str]) -> Result<Self> {
        let mut all: Vec<&str> = extra.to_vec();
        all.extend(self.vars.iter().map(String::as_str));
        Self::new(&all)
    }

    /// Variable names not already used by this ring, built from `stem`.
    pub fn fresh_names(&self, stem: &str, count: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(count);
        let mut k = 0usize;
        while out.len() < count {
            let cand = if k == 0 {
                stem.to_string()
            } else {
                format!("{stem}{k}")
            };
            if !self.vars.contains(&cand) && !out.contains(&cand) {
                out.push(cand);
            }
            k += 1;
        }
        out
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(", "))
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            PolyRing::new(&["x", "x"]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(PolyRing::new(&["1x"]).is_err());
        assert!(PolyRing::new::<&str>(&[]).is_err());
    }

    #[test]
    fn fresh_names_avoid_clashes() {
        let r = PolyRing::new(&["t", "x"]).unwrap();
        assert_eq!(r.fresh_names("t", 1), vec!["t1"]);
        assert_eq!(r.fresh_names("T", 2), vec!["T", "T1"]);
    }
}
