//! Exact field scalars: arbitrary-precision rationals and prime-field residues.
//!
//! Every scalar carries its mode (rational or mod p). Arithmetic never rounds;
//! mixing modes is a programming error and panics.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

/// Default accelerator prime, any prime above 10^6 works.
pub const DEFAULT_PRIME: u64 = 1_000_003;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator of entry at ({row}, {col}) is divisible by {prime}")]
    DenominatorDivisibleByPrime { row: usize, col: usize, prime: u64 },
}

/// Field mode shared by all entries of a matrix or coordinates of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Rational,
    Modular(u64),
}

/// An exact field element, either a rational number or a residue mod a prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { residue: u64, modulus: u64 },
}

impl Scalar {
    pub fn from_integer(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rat(r)
    }

    pub fn from_residue(n: u64, p: u64) -> Self {
        Scalar::Mod {
            residue: n % p,
            modulus: p,
        }
    }

    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Rational => Scalar::Rat(BigRational::zero()),
            Mode::Modular(p) => Scalar::Mod {
                residue: 0,
                modulus: p,
            },
        }
    }

    pub fn one(mode: Mode) -> Self {
        match mode {
            Mode::Rational => Scalar::Rat(BigRational::one()),
            Mode::Modular(p) => Scalar::Mod {
                residue: 1,
                modulus: p,
            },
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Rat(_) => Mode::Rational,
            Scalar::Mod { modulus, .. } => Mode::Modular(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Mod { residue, .. } => *residue == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (
                Scalar::Mod {
                    residue: a,
                    modulus: p,
                },
                Scalar::Mod {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Mod {
                    residue: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (
                Scalar::Mod {
                    residue: a,
                    modulus: p,
                },
                Scalar::Mod {
                    residue: b,
                    modulus: q,
                },
            ) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Mod {
                    residue: mulmod(*a, *b, *p),
                    modulus: *p,
                }
            }
            _ => panic!("mixed-mode scalar arithmetic"),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        if other.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod {
                residue,
                modulus: p,
            } => Scalar::Mod {
                residue: if *residue == 0 { 0 } else { p - residue },
                modulus: *p,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Mod {
                residue,
                modulus: p,
            } => {
                if *residue == 0 {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Mod {
                        residue: invmod(*residue, *p),
                        modulus: *p,
                    })
                }
            }
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut acc = Scalar::one(self.mode());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reduce a rational scalar mod p. Fails when p divides the denominator.
    pub fn reduce_mod(&self, p: u64) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                let num = bigint_mod(r.numer(), p);
                let den = bigint_mod(r.denom(), p);
                if den == 0 {
                    return None;
                }
                Some(Scalar::Mod {
                    residue: mulmod(num, invmod(den, p), p),
                    modulus: p,
                })
            }
            Scalar::Mod { .. } => Some(self.clone()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (
                Scalar::Mod { residue: a, .. },
                Scalar::Mod { residue: b, .. },
            ) => a.cmp(b),
            _ => panic!("mixed-mode scalar comparison"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { residue, .. } => write!(f, "{residue}"),
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let p_big = BigInt::from(p);
    let mut r = n % &p_big;
    if r.is_negative() {
        r += &p_big;
    }
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // extended Euclid; p is prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "not invertible mod {p}");
    (t0.rem_euclid(p as i128)) as u64
}
