//! Coefficient fields used by the Gröbner engine.

use std::fmt::Debug;

use super::rational::Rational;

/// Minimal field interface the reduction kernels need.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
    /// Image of a rational; `None` if it has no image in this field.
    fn from_rational(r: &Rational) -> Option<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        Rational::inv(self)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
}

/// The 31-bit Mersenne prime 2^31 - 1.
pub const PRIME: u64 = 2_147_483_647;

/// Element of the prime field Z/PRIME. Only ever used for prefiltering; no
/// verdict is decided from modular data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Fp(u32);

impl Fp {
    pub fn new(v: u64) -> Self {
        Fp((v % PRIME) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % PRIME;
            }
            base = base * base % PRIME;
            e >>= 1;
        }
        Fp(acc as u32)
    }

    /// Reduces a rational mod p; `None` when the denominator vanishes mod p.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        if let (Some(n), Some(d)) = (r.small_numer(), r.small_denom()) {
            let n = Fp::new(n.rem_euclid(PRIME as i64) as u64);
            let d = Fp::new(d.rem_euclid(PRIME as i64) as u64);
            if d.is_zero() {
                return None;
            }
            return Some(n.mul(&d.inv()));
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::ToPrimitive;
        let p = BigInt::from(PRIME);
        let n = r.numer().mod_floor(&p).to_u64()?;
        let d = r.denom().mod_floor(&p).to_u64()?;
        if d == 0 {
            return None;
        }
        Some(Fp::new(n).mul(&Fp::new(d).inv()))
    }
}

impl Field for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp::new(self.0 as u64 + rhs.0 as u64)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp::new(self.0 as u64 + PRIME - rhs.0 as u64)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp::new(self.0 as u64 * rhs.0 as u64)
    }
    fn neg(&self) -> Self {
        Fp::new(PRIME - self.0 as u64)
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(PRIME - 2)
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Fp::from_rational(r)
    }
}
