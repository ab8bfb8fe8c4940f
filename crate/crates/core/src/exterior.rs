//! The exterior algebra on the nine coframe vectors `v_ij`
//! (`i` in 1..=3, `j` in 0..=2). A monomial is a 9-bit mask; bit `3j + i - 1`
//! stands for `v_ij` and factors are wedged in ascending bit order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::GaussRational;

pub const DIM: usize = 512;
pub const FULL_MASK: u16 = 511;

/// Position of one coframe vector, `3j + i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos(u8);

impl Pos {
    pub fn new(i: usize, j: usize) -> Result<Pos> {
        if !(1..=3).contains(&i) || j > 2 {
            return Err(Error::OutOfRange(format!("v{i}{j}")));
        }
        Ok(Pos((3 * j + i - 1) as u8))
    }

    pub fn from_index(p: usize) -> Result<Pos> {
        if p >= 9 {
            return Err(Error::OutOfRange(format!("position {p}")));
        }
        Ok(Pos(p as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn bit(self) -> u16 {
        1 << self.0
    }

    pub fn i(self) -> usize {
        self.0 as usize % 3 + 1
    }

    pub fn j(self) -> usize {
        self.0 as usize / 3
    }

    pub fn all() -> impl Iterator<Item = Pos> {
        (0..9u8).map(Pos)
    }
}

/// Wedge monomial, identified with its mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasisIndex(u16);

impl BasisIndex {
    pub fn new(mask: u16) -> Result<BasisIndex> {
        if mask > FULL_MASK {
            return Err(Error::OutOfRange(format!("mask {mask}")));
        }
        Ok(BasisIndex(mask))
    }

    pub(crate) fn raw(mask: usize) -> BasisIndex {
        debug_assert!(mask < DIM);
        BasisIndex(mask as u16)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_odd(self) -> bool {
        self.0.count_ones() % 2 == 1
    }

    pub fn multidegree(self) -> Multidegree {
        Multidegree::of_mask(self.0)
    }

    pub fn complement(self) -> BasisIndex {
        BasisIndex(FULL_MASK ^ self.0)
    }

    pub fn all() -> impl Iterator<Item = BasisIndex> {
        (0..DIM as u16).map(BasisIndex)
    }
}

/// Counts of factors from `W_0`, `W_1`, `W_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Multidegree(pub [u8; 3]);

impl Multidegree {
    pub fn of_mask(mask: u16) -> Multidegree {
        let c = |j: u16| ((mask >> (3 * j)) & 7).count_ones() as u8;
        Multidegree([c(0), c(1), c(2)])
    }

    pub fn degree(self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn shift_to(self, other: Multidegree) -> Shift {
        Shift([
            other.0[0] as i8 - self.0[0] as i8,
            other.0[1] as i8 - self.0[1] as i8,
            other.0[2] as i8 - self.0[2] as i8,
        ])
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Difference of multidegrees, output minus input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Shift(pub [i8; 3]);

impl Shift {
    pub fn is_odd(self) -> bool {
        self.0.iter().map(|&x| x as i32).sum::<i32>().rem_euclid(2) == 1
    }
}

/// Sign of `v_S ^ v_T` relative to the ascending monomial `v_{S|T}`:
/// `None` if the masks overlap, `Some(true)` if the sign is negative.
pub fn wedge_sign(s: u16, t: u16) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut n = 0;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        n += (s >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(n % 2 == 1)
}

/// `*(v_S) = hodge_sign(S) v_{S^c}` with `v_S ^ *(v_S) = Vol`.
pub fn hodge_sign(s: u16) -> bool {
    wedge_sign(s, FULL_MASK ^ s).unwrap()
}

/// Sparse element of the exterior algebra with Gaussian rational coefficients.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Form {
    coeffs: BTreeMap<BasisIndex, GaussRational>,
}

impl Form {
    pub fn zero() -> Form {
        Form::default()
    }

    pub fn one() -> Form {
        Form::monomial(BasisIndex(0), GaussRational::one())
    }

    pub fn monomial(m: BasisIndex, c: GaussRational) -> Form {
        let mut f = Form::zero();
        f.add_term(m, &c);
        f
    }

    /// `v_ij`.
    pub fn v(i: usize, j: usize) -> Result<Form> {
        Ok(Form::monomial(
            BasisIndex(Pos::new(i, j)?.bit()),
            GaussRational::one(),
        ))
    }

    pub fn vol() -> Form {
        Form::monomial(BasisIndex(FULL_MASK), GaussRational::one())
    }

    /// `Vol(W_j) = v_1j ^ v_2j ^ v_3j`.
    pub fn vol_w(j: usize) -> Result<Form> {
        Ok(Form::v(1, j)?.wedge(&Form::v(2, j)?).wedge(&Form::v(3, j)?))
    }

    /// `w_1j = v_1j + i v_2j`.
    pub fn w(j: usize) -> Result<Form> {
        Ok(Form::v(1, j)? + Form::v(2, j)?.scale(&GaussRational::i()))
    }

    /// `sum_i v_ia ^ v_ib`.
    fn sum_pairs(a: usize, b: usize) -> Form {
        let mut f = Form::zero();
        for i in 1..=3 {
            f = f + Form::v(i, a).unwrap().wedge(&Form::v(i, b).unwrap());
        }
        f
    }

    pub fn omega_1() -> Form {
        Form::sum_pairs(0, 1)
    }

    pub fn omega_2() -> Form {
        Form::sum_pairs(0, 2)
    }

    pub fn omega_d() -> Form {
        Form::sum_pairs(1, 2)
    }

    pub fn add_term(&mut self, m: BasisIndex, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn coeff(&self, m: BasisIndex) -> GaussRational {
        self.coeffs.get(&m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisIndex, &GaussRational)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &GaussRational) -> Form {
        if c.is_zero() {
            return Form::zero();
        }
        Form {
            coeffs: self.coeffs.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero();
        for (s, x) in &self.coeffs {
            for (t, y) in &other.coeffs {
                if let Some(neg) = wedge_sign(s.0, t.0) {
                    out.add_term(BasisIndex(s.0 | t.0), &(x * y).signed(neg));
                }
            }
        }
        out
    }

    /// Interior product with the dual of `v_pos`.
    pub fn contract(&self, pos: Pos) -> Form {
        let b = pos.bit();
        let mut out = Form::zero();
        for (m, x) in &self.coeffs {
            if m.0 & b != 0 {
                let neg = (m.0 & (b - 1)).count_ones() % 2 == 1;
                out.add_term(BasisIndex(m.0 ^ b), &x.clone().signed(neg));
            }
        }
        out
    }

    pub fn hodge_star(&self) -> Form {
        let mut out = Form::zero();
        for (m, x) in &self.coeffs {
            out.add_term(m.complement(), &x.clone().signed(hodge_sign(m.0)));
        }
        out
    }

    /// Hermitean inner product, conjugate-linear in the second argument.
    pub fn inner(&self, other: &Form) -> GaussRational {
        let mut acc = GaussRational::zero();
        for (m, x) in &self.coeffs {
            if let Some(y) = other.coeffs.get(m) {
                acc += &(x * &y.conj());
            }
        }
        acc
    }

    /// Odd pairing `<a, b> = (a, *b)`.
    pub fn poincare(&self, other: &Form) -> GaussRational {
        self.inner(&other.hodge_star())
    }

    pub fn multidegree(&self) -> Option<Multidegree> {
        let mut it = self.coeffs.keys().map(|m| m.multidegree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `Some(true)` for odd, `Some(false)` for even, `None` for zero or mixed forms.
    pub fn parity(&self) -> Option<bool> {
        let mut it = self.coeffs.keys().map(|m| m.is_odd());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn masks(&self) -> impl Iterator<Item = BasisIndex> + '_ {
        self.coeffs.keys().copied()
    }
}

impl std::ops::Add for Form {
    type Output = Form;
    fn add(mut self, o: Form) -> Form {
        for (m, c) in o.coeffs {
            self.add_term(m, &c);
        }
        self
    }
}

impl std::ops::Sub for Form {
    type Output = Form;
    fn sub(mut self, o: Form) -> Form {
        for (m, c) in o.coeffs {
            self.add_term(m, &-c);
        }
        self
    }
}

impl FromIterator<(BasisIndex, GaussRational)> for Form {
    fn from_iter<I: IntoIterator<Item = (BasisIndex, GaussRational)>>(it: I) -> Form {
        let mut f = Form::zero();
        for (m, c) in it {
            f.add_term(m, &c);
        }
        f
    }
}

/// Monomial text: `1` or factors like `v10^v21` in ascending order.
pub fn monomial_name(m: BasisIndex) -> String {
    if m.0 == 0 {
        return "1".into();
    }
    Pos::all()
        .filter(|p| m.0 & p.bit() != 0)
        .map(|p| format!("v{}{}", p.i(), p.j()))
        .collect::<Vec<_>>()
        .join("^")
}

/// Grammar:
/// `form := "0" | term (("+" | "-") term)*`,
/// `term := [scalar ["*"]] monomial | scalar`,
/// `monomial := "1" | factor ("^" factor)*`, `factor := "v" [1-3] [0-2]`,
/// `scalar := "(" a/b [("+"|"-") c/d "*i"] ")" | a/b`.
/// Factors may appear in any order; the sign of reordering is applied.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(m, c)| format!("{c}*{}", monomial_name(*m)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_monomial(s: &str) -> Result<Option<(BasisIndex, bool)>> {
    let s = s.trim();
    if s.is_empty() || s == "1" {
        return Ok(Some((BasisIndex(0), false)));
    }
    let mut mask = 0u16;
    let mut neg = false;
    for fac in s.split('^') {
        let b = fac.trim().as_bytes();
        if b.len() != 3 || b[0] != b'v' || !b[1].is_ascii_digit() || !b[2].is_ascii_digit() {
            return Err(Error::Parse(format!("bad factor `{fac}`")));
        }
        let p = Pos::new((b[1] - b'0') as usize, (b[2] - b'0') as usize)?;
        match wedge_sign(mask, p.bit()) {
            None => return Ok(None),
            Some(n) => {
                neg ^= n;
                mask |= p.bit();
            }
        }
    }
    Ok(Some((BasisIndex(mask), neg)))
}

fn parse_term(t: &str) -> Result<(GaussRational, &str)> {
    let t = t.trim();
    if let Some(rest) = t.strip_prefix('(') {
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed `(` in `{t}`")))?;
        let c: GaussRational = t[..close + 2].parse()?;
        let rest = rest[close + 1..].trim_start();
        Ok((c, rest.strip_prefix('*').unwrap_or(rest)))
    } else if t.starts_with(|c: char| c.is_ascii_digit()) && t != "1" && !t.starts_with("1^") {
        let end = t.find('*').unwrap_or(t.len());
        let c: GaussRational = t[..end].parse()?;
        Ok((c, t.get(end + 1..).unwrap_or("")))
    } else {
        Ok((GaussRational::one(), t))
    }
}

impl FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Form> {
        let s = s.trim();
        if s == "0" {
            return Ok(Form::zero());
        }
        // split at top-level signs
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') {
                if !cur.trim().is_empty() {
                    pieces.push((neg, std::mem::take(&mut cur)));
                } else if ch == '-' {
                    neg = !neg;
                    continue;
                } else {
                    continue;
                }
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(format!("dangling sign in `{s}`")));
        }
        pieces.push((neg, cur));
        let mut f = Form::zero();
        for (neg, p) in pieces {
            let (c, mono) = parse_term(&p)?;
            if let Some((m, flip)) = parse_monomial(mono)? {
                f.add_term(m, &c.signed(neg ^ flip));
            }
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Form {
        s.parse().unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(f("v20").wedge(&f("v10")), f("-v10^v20"));
        assert!(f("v10").wedge(&f("v10")).is_zero());
    }

    #[test]
    fn contract_examples() {
        let p10 = Pos::new(1, 0).unwrap();
        let p20 = Pos::new(2, 0).unwrap();
        assert_eq!(f("v10^v20").contract(p10), f("v20"));
        assert!(f("v20").contract(p10).is_zero());
        assert_eq!(f("v10^v20").contract(p20), f("-v10"));
    }

    #[test]
    fn hodge_examples() {
        let vol = f("v10^v20^v30^v11^v21^v31^v12^v22^v32");
        assert_eq!(vol, Form::vol());
        assert_eq!(Form::one().hodge_star(), vol);
        assert_eq!(vol.hodge_star(), Form::one());
    }

    #[test]
    fn inner_examples() {
        assert_eq!(f("v10").inner(&f("v10")), GaussRational::one());
        assert!(f("v10").inner(&f("v20")).is_zero());
        let w = Form::w(0).unwrap();
        assert_eq!(w.inner(&w), GaussRational::from_int(2));
        // conjugate-linear in the second slot
        let a = f("(0+1*i)*v10");
        assert_eq!(f("v10").inner(&a), -GaussRational::i());
        assert_eq!(a.inner(&f("v10")), GaussRational::i());
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(Form::one().poincare(&Form::vol()), GaussRational::one());
        assert!(f("v10").poincare(&f("v10")).is_zero());
        let a = f("v10^v11");
        let p = a.poincare(&a.hodge_star());
        assert_eq!(p, a.inner(&a));
        assert_eq!(p, GaussRational::one());
    }

    #[test]
    fn multidegree_examples() {
        assert_eq!(f("v10^v21").multidegree(), Some(Multidegree([1, 1, 0])));
        assert_eq!(Form::omega_d().multidegree(), Some(Multidegree([0, 1, 1])));
        assert_eq!((Form::omega_1() + Form::omega_d()).multidegree(), None);
    }

    #[test]
    fn text_round_trip() {
        let a = f("(1/2-3*i)*v21^v10 - 2*v32 + (i) + v11");
        assert_eq!(a.coeff(BasisIndex::new(0).unwrap()), GaussRational::i());
        assert_eq!(a.to_string().parse::<Form>().unwrap(), a);
        assert_eq!(f("v21^v10"), f("-v10^v21"));
        assert_eq!(f("0"), Form::zero());
        assert!("v40".parse::<Form>().is_err());
        assert!("v10 +".parse::<Form>().is_err());
    }
}
