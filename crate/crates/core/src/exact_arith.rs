//! Exact scalars: rationals, Gaussian rationals `a + b i`, and prime fields
//! `F_p` with `p = 1 (mod 4)` for fast rank computations.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRational {
            re: Rational::from_integer(n.into()),
            im: Rational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `z * conj(z)`, a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, q: &Rational) -> Self {
        GaussRational {
            re: &self.re * q,
            im: &self.im * q,
        }
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        GaussRational {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(GaussRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Multiply by `(-1)^k`.
    pub fn signed(self, negate: bool) -> Self {
        if negate {
            -self
        } else {
            self
        }
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussRational {
    fn from(q: Rational) -> Self {
        GaussRational {
            re: q,
            im: Rational::zero(),
        }
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, o: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, o: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, o: &GaussRational) -> GaussRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRational {
                re: &self.re * &o.re,
                im: Rational::zero(),
            };
        }
        GaussRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Add for GaussRational {
    type Output = GaussRational;
    fn add(self, o: GaussRational) -> GaussRational {
        GaussRational {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for GaussRational {
    type Output = GaussRational;
    fn sub(self, o: GaussRational) -> GaussRational {
        GaussRational {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for GaussRational {
    type Output = GaussRational;
    fn mul(self, o: GaussRational) -> GaussRational {
        &self * &o
    }
}

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, o: &GaussRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, o: &GaussRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Printed as `(a/b+c/d*i)`; denominators equal to one are omitted.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "({}{}{}*i)", self.re, sign, self.im.abs())
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Accepts `(a/b+c/d*i)`, `(a/b)`, `(c/d*i)`, and bare rationals.
impl FromStr for GaussRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t)
            .replace(' ', "");
        if body.is_empty() {
            return Err(Error::Parse(format!("empty scalar `{s}`")));
        }
        // split at the sign that starts the imaginary part (not at position 0)
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) if body.ends_with("*i") || body.ends_with('i') => {
                (&body[..k], Some(&body[k..]))
            }
            _ => {
                if body.ends_with('i') {
                    ("0", Some(body.as_str()))
                } else {
                    (body.as_str(), None)
                }
            }
        };
        let re = parse_rational(re_part)?;
        let im = match im_part {
            None => Rational::zero(),
            Some(p) => {
                let p = p.strip_suffix('i').unwrap();
                let p = p.strip_suffix('*').unwrap_or(p);
                match p {
                    "" | "+" => Rational::one(),
                    "-" => -Rational::one(),
                    _ => parse_rational(p.strip_prefix('+').unwrap_or(p))?,
                }
            }
        };
        Ok(GaussRational { re, im })
    }
}

impl serde::Serialize for GaussRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A prime `p = 1 (mod 4)` below 2^32 together with its canonical square root of -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
    root_i: u64,
}

pub const DEFAULT_PRIMES: [u64; 2] = [2013265921, 1811939329];

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Largest prime `q < p` with `q ≡ 1 (mod 4)`; used when a run loses a pivot mod `p`.
pub fn prime_below(p: u64) -> Option<u64> {
    let mut q = p.checked_sub(1)?;
    q -= (q + 3) % 4;
    while q >= 5 {
        if is_prime(q) {
            return Some(q);
        }
        q -= 4;
    }
    None
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || p % 4 != 1 || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        let mut f = PrimeField { p, root_i: 0 };
        // any quadratic non-residue g gives g^((p-1)/4) with square -1
        let mut g = 2;
        let r = loop {
            if f.pow(g, (p - 1) / 2) == p - 1 {
                break f.pow(g, (p - 1) / 4);
            }
            g += 1;
        };
        f.root_i = r.min(p - r);
        Ok(f)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn root_i(&self) -> u64 {
        self.root_i
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::NotInvertibleMod(self.p));
        }
        Ok(self.pow(a, self.p - 2))
    }

    pub fn reduce_int(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits in u64")
    }

    pub fn reduce_rational(&self, q: &Rational) -> Result<u64> {
        let d = self.reduce_int(q.denom());
        let d = self.inv(d)?;
        Ok(self.mul(self.reduce_int(q.numer()), d))
    }
}

/// Residue class in `F_p`, carrying its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModScalar {
    pub residue: u64,
    pub field: PrimeField,
}

impl ModScalar {
    pub fn new(residue: u64, field: PrimeField) -> Self {
        ModScalar {
            residue: residue % field.p,
            field,
        }
    }
}

impl Add for ModScalar {
    type Output = ModScalar;
    fn add(self, o: ModScalar) -> ModScalar {
        ModScalar {
            residue: self.field.add(self.residue, o.residue),
            field: self.field,
        }
    }
}

impl Mul for ModScalar {
    type Output = ModScalar;
    fn mul(self, o: ModScalar) -> ModScalar {
        ModScalar {
            residue: self.field.mul(self.residue, o.residue),
            field: self.field,
        }
    }
}

/// Ring map `Z[1/den](i) -> F_p` sending `i` to the field's root of -1.
pub fn mod_project(z: &GaussRational, field: &PrimeField) -> Result<ModScalar> {
    let re = field.reduce_rational(&z.re)?;
    let im = field.reduce_rational(&z.im)?;
    Ok(ModScalar::new(
        field.add(re, field.mul(im, field.root_i)),
        *field,
    ))
}

/// Field operations with an explicit context value, so prime fields can carry
/// their modulus at runtime.
pub trait Field: Sync + Send {
    type Elem: Clone + PartialEq + Send + Sync + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn of_rational(&self, q: &Rational) -> Result<Self::Elem>;
    /// A square root of -1, if the field has a preferred one.
    fn imag_unit(&self) -> Option<Self::Elem>;
    /// Stable byte encoding for hashing.
    fn encode(&self, a: &Self::Elem, out: &mut Vec<u8>);

    /// `acc -= c * x`
    fn sub_mul(&self, acc: &mut Self::Elem, c: &Self::Elem, x: &Self::Elem) {
        *acc = self.sub(acc, &self.mul(c, x));
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct Q;

impl Field for Q {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a.clone()
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn of_rational(&self, q: &Rational) -> Result<Rational> {
        Ok(q.clone())
    }
    fn imag_unit(&self) -> Option<Rational> {
        None
    }
    fn encode(&self, a: &Rational, out: &mut Vec<u8>) {
        out.extend_from_slice(a.to_string().as_bytes());
        out.push(b';');
    }
}

/// Q(i).
#[derive(Clone, Copy, Debug, Default)]
pub struct QI;

impl Field for QI {
    type Elem = GaussRational;
    fn zero(&self) -> GaussRational {
        GaussRational::zero()
    }
    fn one(&self) -> GaussRational {
        GaussRational::one()
    }
    fn add(&self, a: &GaussRational, b: &GaussRational) -> GaussRational {
        a + b
    }
    fn sub(&self, a: &GaussRational, b: &GaussRational) -> GaussRational {
        a - b
    }
    fn mul(&self, a: &GaussRational, b: &GaussRational) -> GaussRational {
        a * b
    }
    fn neg(&self, a: &GaussRational) -> GaussRational {
        -a
    }
    fn inv(&self, a: &GaussRational) -> Result<GaussRational> {
        a.inv()
    }
    fn is_zero(&self, a: &GaussRational) -> bool {
        a.is_zero()
    }
    fn of_rational(&self, q: &Rational) -> Result<GaussRational> {
        Ok(q.clone().into())
    }
    fn imag_unit(&self) -> Option<GaussRational> {
        Some(GaussRational::i())
    }
    fn encode(&self, a: &GaussRational, out: &mut Vec<u8>) {
        out.extend_from_slice(a.to_string().as_bytes());
        out.push(b';');
    }
}

impl Field for PrimeField {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::add(self, *a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::sub(self, *a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        PrimeField::mul(self, *a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        PrimeField::neg(self, *a)
    }
    fn inv(&self, a: &u64) -> Result<u64> {
        PrimeField::inv(self, *a)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn of_rational(&self, q: &Rational) -> Result<u64> {
        self.reduce_rational(q)
    }
    fn imag_unit(&self) -> Option<u64> {
        Some(self.root_i)
    }
    fn encode(&self, a: &u64, out: &mut Vec<u8>) {
        out.extend_from_slice(&a.to_le_bytes());
    }
    #[inline]
    fn sub_mul(&self, acc: &mut u64, c: &u64, x: &u64) {
        *acc = PrimeField::sub(self, *acc, c * x % self.p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&g("(1+1*i)") * &g("(1-1*i)"), GaussRational::from_int(2));
        assert_eq!(g("(3/2-1*i)").conj(), g("(3/2+1*i)"));
        assert_eq!(
            g("(1+1*i)").checked_div(&g("(1+1*i)")).unwrap(),
            GaussRational::one()
        );
        assert_eq!(
            GaussRational::one().checked_div(&GaussRational::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display_round_trip() {
        for s in ["(0+0*i)", "(-1/2+3*i)", "(7-2/3*i)"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("i"), GaussRational::i());
        assert_eq!(g("(-i)"), -GaussRational::i());
        assert_eq!(g("5/10"), GaussRational::from(rat(1, 2)));
        assert!("(1/0)".parse::<GaussRational>().is_err());
    }

    #[test]
    fn projection_examples() {
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.root_i(), 2);
        assert_eq!(mod_project(&GaussRational::i(), &f5).unwrap().residue, 2);
        assert_eq!(mod_project(&rat(1, 2).into(), &f5).unwrap().residue, 3);
        assert_eq!(mod_project(&GaussRational::zero(), &f5).unwrap().residue, 0);
        assert_eq!(
            mod_project(&rat(1, 5).into(), &f5),
            Err(Error::NotInvertibleMod(5))
        );
    }

    #[test]
    fn default_primes_have_roots() {
        for p in DEFAULT_PRIMES {
            let f = PrimeField::new(p).unwrap();
            let r = f.root_i();
            assert_eq!(f.add(f.mul(r, r), 1), 0);
            assert!(r <= p / 2);
        }
        assert!(PrimeField::new(7).is_err());
        assert!(PrimeField::new(21).is_err());
    }
}
