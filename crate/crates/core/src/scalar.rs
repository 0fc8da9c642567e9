//! Exact scalars: rationals with a machine-word fast path, Gaussian rationals,
//! and a word-size prime field used only to pre-screen linear systems.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::EtapError;

/// Which base field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Real,
    Complex,
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Real => f.write_str("real"),
            FieldKind::Complex => f.write_str("complex"),
        }
    }
}

/// Minimal arithmetic needed by the elimination kernels.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Self;
}

/// An exact field: ℚ or ℚ(i). Generic code is parameterized by this trait so
/// that the field of a computation is fixed by its type and never mixed.
pub trait Field: Scalar + Display + Eq + Hash + FromStr<Err = EtapError> {
    const KIND: FieldKind;

    fn from_i64(v: i64) -> Self;
    fn from_rational(q: Rational) -> Self;
    /// `Some(i)` for ℚ(i), `None` for ℚ.
    fn imaginary_unit() -> Option<Self>;
    /// The value as a rational when it has no imaginary part.
    fn to_rational(&self) -> Option<Rational>;
    /// Image under the ring map into 𝔽_p (with `i ↦ √-1`), when denominators allow it.
    fn to_fp(&self) -> Option<Fp>;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

// ---------------------------------------------------------------------------
// Rational

/// Arbitrary-precision rational in lowest terms with positive denominator.
/// Values that fit in `i64` are kept unboxed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn integer(v: i64) -> Rational {
        Rational(Repr::Small(v, 1))
    }

    fn from_i128(mut n: i128, mut d: i128) -> Rational {
        if d < 0 {
            n = -n;
            d = -d;
        }
        if n == 0 {
            return Rational(Repr::Small(0, 1));
        }
        let g = n.gcd(&d);
        if g != 1 {
            n /= g;
            d /= g;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(BigRational::new_raw(n.into(), d.into()))),
        }
    }

    fn from_big(q: BigRational) -> Rational {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(a), Some(b)) => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(q)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(q) => q.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(q) => q.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(q) => q.denom().clone(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(q) => {
                if q.is_positive() {
                    1
                } else if q.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(q) => q.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::integer(0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_add(*c) {
                        Some(s) => Rational(Repr::Small(s, 1)),
                        None => Rational::from_i128(*a as i128 + *c as i128, 1),
                    }
                } else if b == d {
                    Rational::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, d)),
                None => Rational::from_i128(-(n as i128), d as i128),
            },
            Repr::Big(q) => Rational::from_big(-q),
        }
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    match a.checked_mul(*c) {
                        Some(p) => Rational(Repr::Small(p, 1)),
                        None => Rational::from_i128(*a as i128 * *c as i128, 1),
                    }
                } else {
                    Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
                }
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.inv()
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) - rhs;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) * rhs;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::integer(0)
    }
    fn one() -> Self {
        Rational::integer(1)
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
    fn inv(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "division by zero");
                Rational::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(q) => Rational::from_big(q.recip()),
        }
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Real;

    fn from_i64(v: i64) -> Self {
        Rational::integer(v)
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn imaginary_unit() -> Option<Self> {
        None
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn to_fp(&self) -> Option<Fp> {
        let (n, d) = match &self.0 {
            Repr::Small(n, d) => (Fp::from_i64(*n), Fp::from_i64(*d)),
            Repr::Big(q) => (Fp::from_bigint(q.numer()), Fp::from_bigint(q.denom())),
        };
        if d.is_zero() {
            None
        } else {
            Some(n * d.inv())
        }
    }
}

impl Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Big(q) => write!(f, "{}/{}", q.numer(), q.denom()),
        }
    }
}

impl Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = EtapError;
    fn from_str(s: &str) -> Result<Self, EtapError> {
        let bad = || EtapError::Parse(format!("invalid rational `{s}`"));
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals

/// Element `re + im·i` of ℚ(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Gaussian {
        Gaussian { re, im }
    }

    pub fn i() -> Gaussian {
        Gaussian::new(Rational::zero(), Rational::one())
    }

    pub fn conj(&self) -> Gaussian {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Gaussian::new(self.re * rhs.re, Rational::zero());
        }
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        Gaussian::new(re, im)
    }
}

impl Div for Gaussian {
    type Output = Gaussian;
    fn div(self, rhs: Gaussian) -> Gaussian {
        self * rhs.inv()
    }
}

impl AddAssign for Gaussian {
    fn add_assign(&mut self, rhs: Gaussian) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign for Gaussian {
    fn sub_assign(&mut self, rhs: Gaussian) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign for Gaussian {
    fn mul_assign(&mut self, rhs: Gaussian) {
        *self = std::mem::take(self) * rhs;
    }
}

impl Scalar for Gaussian {
    fn zero() -> Self {
        Gaussian::new(Rational::zero(), Rational::zero())
    }
    fn one() -> Self {
        Gaussian::new(Rational::one(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Self {
        let norm = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let inv = norm.inv();
        Gaussian::new(self.re.clone() * inv.clone(), -(self.im.clone() * inv))
    }
}

impl Field for Gaussian {
    const KIND: FieldKind = FieldKind::Complex;

    fn from_i64(v: i64) -> Self {
        Gaussian::new(Rational::integer(v), Rational::zero())
    }
    fn from_rational(q: Rational) -> Self {
        Gaussian::new(q, Rational::zero())
    }
    fn imaginary_unit() -> Option<Self> {
        Some(Gaussian::i())
    }
    fn to_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }
    fn to_fp(&self) -> Option<Fp> {
        Some(self.re.to_fp()? + self.im.to_fp()? * Fp::sqrt_minus_one())
    }
}

impl Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else if self.im.signum() < 0 {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl FromStr for Gaussian {
    type Err = EtapError;
    fn from_str(s: &str) -> Result<Self, EtapError> {
        let s = s.trim();
        let Some(body) = s.strip_suffix("*i") else {
            return Ok(Gaussian::from_rational(s.parse()?));
        };
        // The split point is the last sign that is not leading.
        let split = body
            .char_indices()
            .filter(|(k, c)| *k > 0 && (*c == '+' || *c == '-'))
            .map(|(k, _)| k)
            .last();
        match split {
            Some(k) => {
                let re: Rational = body[..k].parse()?;
                let im_str = body[k..].strip_prefix('+').unwrap_or(&body[k..]);
                Ok(Gaussian::new(re, im_str.parse()?))
            }
            None => Ok(Gaussian::new(Rational::zero(), body.parse()?)),
        }
    }
}

// ---------------------------------------------------------------------------
// Prime field

/// 𝔽_p for p = 15·2²⁷ + 1. Since p ≡ 1 (mod 4), ℚ(i) maps into it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(u64);

impl Fp {
    pub const P: u64 = 2_013_265_921;

    pub fn new(v: u64) -> Fp {
        Fp(v % Self::P)
    }

    pub fn from_i64(v: i64) -> Fp {
        Fp(v.rem_euclid(Self::P as i64) as u64)
    }

    fn from_bigint(v: &BigInt) -> Fp {
        let p = BigInt::from(Self::P);
        let r = v.mod_floor(&p);
        Fp(r.to_u64().expect("reduced value fits"))
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// A fixed square root of −1 (31 is a primitive root mod p).
    pub fn sqrt_minus_one() -> Fp {
        Fp(31).pow((Self::P - 1) / 4)
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let s = self.0 + rhs.0;
        Fp(if s >= Self::P { s - Self::P } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + Self::P - rhs.0 })
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp(if self.0 == 0 { 0 } else { Self::P - self.0 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(self.0 * rhs.0 % Self::P)
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv()
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "division by zero in F_p");
        self.pow(Self::P - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rationals_stay_canonical() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert_eq!(q(0, 5), Rational::zero());
        assert_eq!(q(7, 3).inv(), q(3, 7));
    }

    #[test]
    fn overflow_promotes_to_big_and_back() {
        let big = Rational::integer(i64::MAX) * Rational::integer(4);
        assert_eq!(big.to_string(), "36893488147419103228");
        let back = big / Rational::integer(4);
        assert_eq!(back, Rational::integer(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let neg = -Rational::integer(i64::MIN);
        assert_eq!(neg.to_string(), "9223372036854775808");
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = Gaussian::i();
        assert_eq!(i.clone() * i.clone(), -Gaussian::one());
        let z = Gaussian::new(q(1, 2), q(-3, 4));
        assert_eq!(z.clone() * z.inv(), Gaussian::one());
        assert_eq!(z.to_string(), "1/2-3/4*i");
    }

    #[test]
    fn parsing_round_trips() {
        for s in ["0", "-5", "7/3", "1/2+3/4*i", "-1/2-1*i", "2*i", "-1*i"] {
            let g: Gaussian = s.parse().unwrap();
            let again: Gaussian = g.to_string().parse().unwrap();
            assert_eq!(g, again, "{s}");
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
    }

    #[test]
    fn prime_field_has_sqrt_minus_one() {
        let r = Fp::sqrt_minus_one();
        assert_eq!(r * r, -Fp::one());
        assert_eq!(Gaussian::i().to_fp().unwrap(), r);
        assert_eq!(q(1, 2).to_fp().unwrap() * Fp::from_i64(2), Fp::one());
    }
}
