//! Coefficient fields: the rationals, or a prime field `GF(c)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `GF(c)`, rejecting composite or out-of-range characteristics.
    pub fn prime(c: u64) -> Result<Self> {
        if is_prime(c) && c < (1 << 31) {
            Ok(Field::Prime(c))
        } else {
            Err(Error::Invalid(format!(
                "field characteristic {c} is not a prime below 2^31"
            )))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(c) => *c,
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Q(BigRational::zero()),
            Field::Prime(c) => Scalar::Fp {
                value: 0,
                modulus: c,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Q(BigRational::from_integer(v.into())),
            Field::Prime(c) => Scalar::Fp {
                value: v.rem_euclid(c as i64) as u64,
                modulus: c,
            },
        }
    }

    /// Maps an exact rational into the field. Fails when the denominator
    /// vanishes in positive characteristic.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        match *self {
            Field::Rationals => Ok(Scalar::Q(q.clone())),
            Field::Prime(c) => {
                let num = residue(q.numer(), c);
                let den = residue(q.denom(), c);
                if den == 0 {
                    return Err(Error::Invalid(format!(
                        "coefficient {q} is undefined in GF({c})"
                    )));
                }
                let den = Scalar::Fp {
                    value: den,
                    modulus: c,
                };
                Ok(Scalar::Fp {
                    value: num,
                    modulus: c,
                } * den.inv())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(c) => write!(f, "GF {c}"),
        }
    }
}

fn residue(v: &BigInt, c: u64) -> u64 {
    let m = BigInt::from(c);
    let r = ((v % &m) + &m) % &m;
    r.to_u64().expect("residue fits in u64")
}

fn is_prime(c: u64) -> bool {
    if c < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= c {
        if c.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Elements of different fields must never be combined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_negative(),
            Scalar::Fp { .. } => false,
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "mixing elements of different prime fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (
                Scalar::Fp {
                    value: a,
                    modulus: m,
                },
                Scalar::Fp {
                    value: b,
                    modulus: n,
                },
            ) => {
                let m = same_modulus(*m, *n);
                Scalar::Fp {
                    value: (a + b) % m,
                    modulus: m,
                }
            }
            _ => panic!("mixing rational and modular scalars"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (
                Scalar::Fp {
                    value: a,
                    modulus: m,
                },
                Scalar::Fp {
                    value: b,
                    modulus: n,
                },
            ) => {
                let m = same_modulus(*m, *n);
                Scalar::Fp {
                    value: a * b % m,
                    modulus: m,
                }
            }
            _ => panic!("mixing rational and modular scalars"),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Q(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_characteristic_rejected() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert_eq!(Field::prime(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn modular_inverse_and_rational_image() {
        let f = Field::Prime(7);
        let half = f
            .from_rational(&BigRational::new(1.into(), 2.into()))
            .unwrap();
        assert_eq!(
            half,
            Scalar::Fp {
                value: 4,
                modulus: 7
            }
        );
        assert!((&half * &f.from_int(2)).is_one());
        assert!(f
            .from_rational(&BigRational::new(1.into(), 14.into()))
            .is_err());
        assert_eq!(
            f.from_int(-3),
            Scalar::Fp {
                value: 4,
                modulus: 7
            }
        );
    }

    #[test]
    fn rational_arithmetic() {
        let f = Field::Rationals;
        let a = f.from_int(3);
        let b = f
            .from_rational(&BigRational::new(5.into(), 2.into()))
            .unwrap();
        assert_eq!((&a - &b).to_string(), "1/2");
        assert!((&b * &b.inv()).is_one());
    }
}
