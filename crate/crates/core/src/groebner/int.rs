//! Integer coefficients for fraction-free reduction over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::poly::Rational;

/// An integer with an inline `i64` fast path. Canonical: `Small` whenever
/// the value fits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Int {
    Small(i64),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn one() -> Self {
        Int::Small(1)
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) if v != i64::MIN => Int::Small(v),
            _ => Int::Big(b),
        }
    }

    fn from_i128(v: i128) -> Self {
        match i64::try_from(v) {
            Ok(v) if v != i64::MIN => Int::Small(v),
            _ => Int::Big(BigInt::from(v)),
        }
    }

    fn big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn add(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 + *b as i128),
            _ => Int::from_big(self.big() + o.big()),
        }
    }

    pub fn mul(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::from_i128(*a as i128 * *b as i128),
            (Int::Small(a), Int::Big(b)) | (Int::Big(b), Int::Small(a)) => Int::from_big(b * *a),
            (Int::Big(a), Int::Big(b)) => Int::from_big(a * b),
        }
    }

    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => Int::Small(-v),
            Int::Big(b) => Int::from_big(-b),
        }
    }

    /// Nonnegative gcd.
    pub fn gcd(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::Small(a.gcd(b)),
            _ => Int::from_big(self.big().gcd(&o.big())),
        }
    }

    /// `self / o`; the caller guarantees divisibility.
    pub fn div_exact(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => Int::Small(a / b),
            _ => Int::from_big(self.big() / o.big()),
        }
    }

    /// `(u, v)` with `u·c = v·lead` and `u` positive when `lead` is.
    pub fn cancel(c: &Int, lead: &Int) -> (Int, Int) {
        if lead.is_one() {
            return (Int::one(), c.clone());
        }
        let g = c.gcd(lead);
        (lead.div_exact(&g), c.div_exact(&g))
    }

    pub fn to_rational(&self) -> Rational {
        match self {
            Int::Small(v) => Rational::from_int(*v),
            Int::Big(b) => Rational::from_bigint(b.clone()),
        }
    }

    pub fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
        if a.is_one() {
            return b.clone();
        }
        a.lcm(b)
    }
}

/// Integer multiples of `coeffs` with gcd 1, all sharing the sign that
/// makes the first one positive. `coeffs` must not all be zero.
pub(crate) fn primitive_integers(coeffs: &[Rational]) -> Vec<Int> {
    let mut den = BigInt::one();
    for c in coeffs {
        den = Int::lcm_big(&den, &c.denom());
    }
    let ints: Vec<Int> = coeffs
        .iter()
        .map(|c| Int::from_big(c.numer() * (&den / c.denom())))
        .collect();
    let mut g = Int::zero();
    for v in &ints {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    debug_assert!(!g.is_zero());
    let flip = ints.first().is_some_and(Int::is_negative);
    let g = if flip { g.neg() } else { g };
    ints.iter().map(|v| v.div_exact(&g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_spills_and_returns() {
        let a = Int::Small(i64::MAX);
        let b = a.add(&Int::one());
        assert!(matches!(b, Int::Big(_)));
        assert_eq!(b.add(&Int::Small(-1)), a);
        let sq = a.mul(&a);
        assert_eq!(sq.div_exact(&a), a);
        assert_eq!(sq.gcd(&Int::Small(6)), Int::Small(1));
    }

    #[test]
    fn primitive_parts() {
        let c = [
            Rational::new(-1, 2),
            Rational::new(3, 4),
            Rational::from_int(2),
        ];
        let v = primitive_integers(&c);
        assert_eq!(v, [Int::Small(2), Int::Small(-3), Int::Small(-8)]);
    }
}
