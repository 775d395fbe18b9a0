//! Exact field arithmetic over Q (arbitrary precision) and GF(p) for prime p < 2^31.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::AlgError;

/// The base field: the rationals or a prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<FieldSpec, AlgError> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(AlgError::CompositeModulus(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Prime { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Prime { value: 1, modulus: *p },
        }
    }

    /// Embeds a signed integer into the field.
    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = *p as i128;
                let v = ((n as i128 % m) + m) % m;
                Scalar::Prime { value: v as u64, modulus: *p }
            }
        }
    }

    /// Parses a field element: `a/b` or `a` over Q, a residue over GF(p).
    pub fn parse(&self, s: &str) -> Result<Scalar, AlgError> {
        let bad = || AlgError::Parse(format!("bad scalar literal `{s}`"));
        match self {
            FieldSpec::Rational => {
                if let Some((num, den)) = s.split_once('/') {
                    let n: BigInt = num.trim().parse().map_err(|_| bad())?;
                    let d: BigInt = den.trim().parse().map_err(|_| bad())?;
                    if d.is_zero() {
                        return Err(bad());
                    }
                    Ok(Scalar::Rational(BigRational::new(n, d)))
                } else {
                    let n: BigInt = s.trim().parse().map_err(|_| bad())?;
                    Ok(Scalar::Rational(BigRational::from_integer(n)))
                }
            }
            FieldSpec::Prime(_) => {
                let n: i64 = s.trim().parse().map_err(|_| bad())?;
                Ok(self.from_i64(n))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "prime={p}"),
        }
    }
}

/// An exact field element, always stored canonically: reduced fraction with
/// positive denominator over Q, residue in 0..p over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Prime { value: (a + b) % p, modulus: *p }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => {
                Scalar::Prime { value: (modulus - value) % modulus, modulus: *modulus }
            }
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Prime { value: ((*a as u128 * *b as u128) % *p as u128) as u64, modulus: *p }
            }
            _ => panic!("mixed fields"),
        }
    }

    /// Multiplicative inverse; panics on zero (callers guard with `is_zero`).
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rational(a.recip())
            }
            Scalar::Prime { value, modulus } => {
                assert!(*value != 0, "inverse of zero");
                // Fermat: p is prime, so a^(p-2) inverts a.
                let v = Scalar::Prime { value: *value, modulus: *modulus };
                v.pow(modulus - 2)
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// x^n by square-and-multiply; x^0 = 1.
    pub fn pow(&self, mut n: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Renders a scalar for certificates: "3/7" over Q, "4 mod 7" over GF(7).
pub fn certificate_string(s: &Scalar) -> String {
    match s {
        Scalar::Rational(_) => format!("{s}"),
        Scalar::Prime { value, modulus } => format!("{value} mod {modulus}"),
    }
}

pub fn rational_is_integer(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r.denom().is_one(),
        Scalar::Prime { .. } => true,
    }
}

/// Absolute height used to pick small canonical representatives.
pub fn height(s: &Scalar) -> u64 {
    match s {
        Scalar::Rational(r) => {
            let n = r.numer().abs();
            let d = r.denom().clone();
            let m = if n > d { n } else { d };
            u64::try_from(&m).unwrap_or(u64::MAX)
        }
        Scalar::Prime { value, .. } => *value,
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
