use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{EgcError, Result};

/// 2^61 - 1.
pub const DEFAULT_PRIME: u64 = 2_305_843_009_213_693_951;

/// Element of Z/pZ carrying its modulus, so arithmetic reads naturally.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn from_i64(v: i64, p: u64) -> Self {
        let r = (v as i128).rem_euclid(p as i128) as u64;
        Fp { v: r, p }
    }

    pub fn zero(p: u64) -> Self {
        Fp { v: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp { v: 1 % p, p }
    }

    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.v == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// Signed power; negative exponents need an invertible base.
    pub fn powi(self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    pub fn inv(self) -> Result<Self> {
        if self.v == 0 {
            return Err(EgcError::Evaluation("inverse of zero".into()));
        }
        Ok(self.pow(self.p - 2))
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u128 + o.v as u128;
        Fp { v: (s % self.p as u128) as u64, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let v = if self.v >= o.v { self.v - o.v } else { self.p - (o.v - self.v) };
        Fp { v, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        debug_assert_eq!(self.p, o.p);
        let m = (self.v as u128 * o.v as u128) % self.p as u128;
        Fp { v: m as u64, p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::zero(self.p) - self
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, o: Fp) {
        *self = *self + o;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, o: Fp) {
        *self = *self - o;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, o: Fp) {
        *self = *self * o;
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}
