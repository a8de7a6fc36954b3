//! Exact scalar fields.
//!
//! Linear algebra is written against the [`Field`] trait, which is a *context*
//! object: elements are plain values and every operation goes through the
//! field, so a prime chosen at runtime costs nothing per element.

use alloc::format;
use alloc::string::String;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    fn sqrt_neg_one(&self) -> Option<Self::Elem>;
    fn name(&self) -> String;
    fn format(&self, a: &Self::Elem) -> String;

    /// `acc += a * b`
    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, &self.mul(a, b));
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// How the ground field is chosen for a computation at characteristic `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldPolicy {
    /// `F_p`, or `F_{p^2}` when the computation needs `sqrt(-1)` and `p = 3 mod 4`.
    Auto,
    Prime,
    Quadratic,
    Rational,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn is_square_mod(a: u64, p: u64) -> bool {
    a.is_multiple_of(p) || pow_mod(a, (p - 1) / 2, p) == 1
}

/// Tonelli-Shanks square root modulo an odd prime.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if !is_square_mod(a, p) {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| !is_square_mod(z, p))?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r.min(p - r))
}

fn check_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p >= 1 << 31 {
        return Err(Error::PrimeTooLarge(p));
    }
    Ok(())
}

/// The prime field `F_p` for an odd prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn sqrt_neg_one(&self) -> Option<u64> {
        sqrt_mod(self.p - 1, self.p)
    }
    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
    fn format(&self, a: &u64) -> String {
        format!("{}", a)
    }
    #[inline]
    fn add_mul(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }
}

/// `F_{p^2} = F_p[s]/(s^2 - q)` with `q` the smallest quadratic non-residue.
/// Elements are `[a, b]` meaning `a + b*s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticField {
    p: u64,
    q: u64,
}

impl QuadraticField {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        let q = (2..p).find(|&q| !is_square_mod(q, p)).ok_or(Error::NotOddPrime(p))?;
        Ok(Self { p, q })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn nonresidue(&self) -> u64 {
        self.q
    }

    /// The embedded copy of `F_p`.
    pub fn base(&self) -> PrimeField {
        PrimeField { p: self.p }
    }
}

impl Field for QuadraticField {
    type Elem = [u64; 2];

    fn zero(&self) -> [u64; 2] {
        [0, 0]
    }
    fn one(&self) -> [u64; 2] {
        [1, 0]
    }
    fn from_i64(&self, v: i64) -> [u64; 2] {
        [v.rem_euclid(self.p as i64) as u64, 0]
    }
    fn add(&self, a: &[u64; 2], b: &[u64; 2]) -> [u64; 2] {
        [(a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p]
    }
    fn sub(&self, a: &[u64; 2], b: &[u64; 2]) -> [u64; 2] {
        [(a[0] + self.p - b[0]) % self.p, (a[1] + self.p - b[1]) % self.p]
    }
    fn mul(&self, a: &[u64; 2], b: &[u64; 2]) -> [u64; 2] {
        let p = self.p;
        let bd = a[1] * b[1] % p;
        [(a[0] * b[0] + bd * self.q) % p, (a[0] * b[1] + a[1] * b[0]) % p]
    }
    fn neg(&self, a: &[u64; 2]) -> [u64; 2] {
        [(self.p - a[0]) % self.p, (self.p - a[1]) % self.p]
    }
    fn inv(&self, a: &[u64; 2]) -> Option<[u64; 2]> {
        let p = self.p;
        // (a + bs)^-1 = (a - bs) / (a^2 - q b^2); the norm vanishes only at 0
        let norm = (a[0] * a[0] % p + p - self.q * (a[1] * a[1] % p) % p) % p;
        if norm == 0 {
            return None;
        }
        let ni = pow_mod(norm, p - 2, p);
        Some([a[0] * ni % p, (p - a[1]) % p * ni % p])
    }
    fn is_zero(&self, a: &[u64; 2]) -> bool {
        a[0] == 0 && a[1] == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn sqrt_neg_one(&self) -> Option<[u64; 2]> {
        let p = self.p;
        if let Some(r) = sqrt_mod(p - 1, p) {
            return Some([r, 0]);
        }
        // -1 and q are both non-residues, so -1/q is a square b^2 and (b s)^2 = -1
        let qi = pow_mod(self.q, p - 2, p);
        let b = sqrt_mod((p - 1) * qi % p, p)?;
        Some([0, b])
    }
    fn name(&self) -> String {
        format!("F_{}^2", self.p)
    }
    fn format(&self, a: &[u64; 2]) -> String {
        if a[1] == 0 {
            format!("{}", a[0])
        } else {
            format!("{}+{}s", a[0], a[1])
        }
    }
}

/// The rationals, as a characteristic-0 cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn sqrt_neg_one(&self) -> Option<BigRational> {
        None
    }
    fn name(&self) -> String {
        String::from("Q")
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            format!("{}", a.numer())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// A self-describing scalar: value plus the field it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldElement {
    Prime { p: u64, value: u64 },
    Quadratic { p: u64, value: [u64; 2] },
    Rational(BigRational),
}

/// Field tag shared by all entries of a [`FieldElement`] matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldTag {
    Prime(u64),
    Quadratic(u64),
    Rational,
}

impl FieldElement {
    pub fn prime(p: u64, v: i64) -> Result<Self> {
        let f = PrimeField::new(p)?;
        Ok(FieldElement::Prime { p, value: f.from_i64(v) })
    }

    pub fn quadratic(p: u64, a: i64, b: i64) -> Result<Self> {
        let f = QuadraticField::new(p)?;
        let (a, b) = (f.from_i64(a)[0], f.from_i64(b)[0]);
        Ok(FieldElement::Quadratic { p, value: [a, b] })
    }

    pub fn rational(num: i64, den: i64) -> Self {
        FieldElement::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            FieldElement::Prime { p, .. } => FieldTag::Prime(*p),
            FieldElement::Quadratic { p, .. } => FieldTag::Quadratic(*p),
            FieldElement::Rational(_) => FieldTag::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Quadratic { value, .. } => value[0] == 0 && value[1] == 0,
            FieldElement::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElement::Rational(r) if r.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_rejects_bad_moduli() {
        assert_eq!(PrimeField::new(2), Err(Error::NotOddPrime(2)));
        assert_eq!(PrimeField::new(9), Err(Error::NotOddPrime(9)));
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn prime_inverse_and_sqrt() {
        let f = PrimeField::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        let i = f.sqrt_neg_one().unwrap();
        assert_eq!(f.mul(&i, &i), 12);
        assert!(PrimeField::new(7).unwrap().sqrt_neg_one().is_none());
    }

    #[test]
    fn tonelli_shanks_on_many_primes() {
        for p in [3u64, 5, 7, 11, 13, 17, 41, 97, 101, 257, 65537, 1_000_003] {
            for a in 1..40u64 {
                if let Some(r) = sqrt_mod(a, p) {
                    assert_eq!(r * r % p, a % p, "p={p} a={a}");
                } else {
                    assert!(!is_square_mod(a, p));
                }
            }
        }
    }

    #[test]
    fn quadratic_field_has_sqrt_minus_one() {
        for p in [3u64, 7, 11, 19, 23, 101, 103] {
            let f = QuadraticField::new(p).unwrap();
            let i = f.sqrt_neg_one().unwrap();
            assert_eq!(f.mul(&i, &i), f.from_i64(-1), "p={p}");
            let x = [3 % p, 1];
            assert_eq!(f.mul(&x, &f.inv(&x).unwrap()), f.one());
        }
    }

    #[test]
    fn rationals_are_exact() {
        let q = Rationals;
        let third = q.div(&q.one(), &q.from_i64(3)).unwrap();
        let sum = q.add(&q.add(&third, &third), &third);
        assert_eq!(sum, q.one());
    }
}
