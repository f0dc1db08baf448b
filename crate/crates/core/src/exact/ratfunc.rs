//! Rational functions in `q`, `t`, `a` over the rationals.
//!
//! The numerator is an expanded integer polynomial. The denominator is kept
//! factored as `scalar * monomial * ∏ Φ_d(x^e)^k * rest`, which keeps
//! cancellation cheap for the products of `1 - q^i t^j` that dominate here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::factor::{factor, gcd, Cyc};
use super::int::Int;
use super::poly::{exp_add, exp_min, exp_sub, Exp, MPoly, Var, ZERO_EXP};
use crate::error::{MathError, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
struct Den {
    scalar: Int,
    mono: Exp,
    cyc: Vec<(Cyc, u32)>,
    rest: MPoly,
}

impl Den {
    fn one() -> Den {
        Den {
            scalar: Int::ONE,
            mono: ZERO_EXP,
            cyc: Vec::new(),
            rest: MPoly::one(),
        }
    }

    fn is_one(&self) -> bool {
        self.scalar.is_one() && self.mono == ZERO_EXP && self.cyc.is_empty() && self.rest.is_one()
    }

    fn expand(&self) -> MPoly {
        let mut p = MPoly::monomial(self.scalar.clone(), self.mono);
        for (c, k) in &self.cyc {
            for _ in 0..*k {
                p = p.mul(c.poly());
            }
        }
        p.mul(&self.rest)
    }

    fn uses(&self, v: Var) -> bool {
        self.mono[v.index()] > 0
            || self.cyc.iter().any(|(c, _)| c.dir[v.index()] != 0)
            || self.rest.uses(v)
    }

    fn mul(&self, other: &Den) -> Den {
        Den {
            scalar: &self.scalar * &other.scalar,
            mono: exp_add(&self.mono, &other.mono),
            cyc: merge_cyc(&self.cyc, &other.cyc, |a, b| a + b),
            rest: self.rest.mul(&other.rest),
        }
    }

    fn lcm(&self, other: &Den) -> Den {
        let rest = if self.rest == other.rest {
            self.rest.clone()
        } else if self.rest.is_one() {
            other.rest.clone()
        } else if other.rest.is_one() {
            self.rest.clone()
        } else {
            let g = gcd(&self.rest, &other.rest);
            self.rest.div_exact(&g).unwrap().mul(&other.rest)
        };
        Den {
            scalar: self.scalar.lcm(&other.scalar),
            mono: [0, 1, 2].map(|i| self.mono[i].max(other.mono[i])),
            cyc: merge_cyc(&self.cyc, &other.cyc, |a, b| a.max(b)),
            rest,
        }
    }

    /// `self / sub` expanded, where `sub` divides `self`.
    fn cofactor(&self, sub: &Den) -> MPoly {
        let mut p = MPoly::monomial(self.scalar.div_exact(&sub.scalar), exp_sub(&self.mono, &sub.mono));
        let mut j = 0;
        for (c, k) in &self.cyc {
            while j < sub.cyc.len() && sub.cyc[j].0 < *c {
                j += 1;
            }
            let have = if j < sub.cyc.len() && sub.cyc[j].0 == *c { sub.cyc[j].1 } else { 0 };
            for _ in have..*k {
                p = p.mul(c.poly());
            }
        }
        if self.rest != sub.rest {
            p = p.mul(&self.rest.div_exact(&sub.rest).expect("residual divides"));
        }
        p
    }
}

fn merge_cyc(a: &[(Cyc, u32)], b: &[(Cyc, u32)], f: impl Fn(u32, u32) -> u32) -> Vec<(Cyc, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push((a[i].0.clone(), f(a[i].1, 0)));
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0.clone(), f(0, b[j].1)));
            j += 1;
        } else {
            out.push((a[i].0.clone(), f(a[i].1, b[j].1)));
            i += 1;
            j += 1;
        }
    }
    out.retain(|(_, k)| *k > 0);
    out
}

/// Removes from `num` and `den` every common factor.
fn cancel(num: &mut MPoly, den: &mut Den) {
    if num.is_zero() {
        *den = Den::one();
        return;
    }
    if !den.scalar.is_one() {
        let g = num.content().gcd(&den.scalar);
        if !g.is_one() {
            *num = num.div_scalar_exact(&g);
            den.scalar = den.scalar.div_exact(&g);
        }
    }
    if den.mono != ZERO_EXP {
        let m = exp_min(&num.mono_content(), &den.mono);
        if m != ZERO_EXP {
            *num = num.div_mono(&m);
            den.mono = exp_sub(&den.mono, &m);
        }
    }
    for (c, k) in den.cyc.iter_mut() {
        while *k > 0 && c.may_divide(num) {
            match num.div_exact(c.poly()) {
                Some(q) => {
                    *num = q;
                    *k -= 1;
                }
                None => break,
            }
        }
    }
    den.cyc.retain(|(_, k)| *k > 0);
    if !den.rest.is_one() {
        let g = gcd(num, &den.rest);
        if !g.is_one() {
            *num = num.div_exact(&g).unwrap();
            den.rest = den.rest.div_exact(&g).unwrap();
        }
    }
}

/// An element of `Q(q, t, a)` in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: Den,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: MPoly::zero(),
            den: Den::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MPoly::one())
    }

    pub fn from_int<I: Into<Int>>(n: I) -> RatFunc {
        RatFunc::from_poly(MPoly::constant(n.into()))
    }

    pub fn ratio<I: Into<Int>, J: Into<Int>>(n: I, d: J) -> RatFunc {
        RatFunc::from_int(n).div(&RatFunc::from_int(d))
    }

    pub fn from_poly(p: MPoly) -> RatFunc {
        RatFunc {
            num: p,
            den: Den::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(MPoly::var(v))
    }

    pub fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }

    pub fn t() -> RatFunc {
        RatFunc::var(Var::T)
    }

    pub fn a() -> RatFunc {
        RatFunc::var(Var::A)
    }

    /// The monomial `q^i t^j a^k` with possibly negative exponents.
    pub fn monomial(e: [i64; 3]) -> RatFunc {
        let pos = e.map(|x| x.max(0) as u32);
        let neg = e.map(|x| (-x).max(0) as u32);
        let mut den = Den::one();
        den.mono = neg;
        RatFunc {
            num: MPoly::monomial(Int::ONE, pos),
            den,
        }
    }

    /// Canonical representative of `num / den`.
    pub fn normalize(num: MPoly, den: MPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(RatFunc::from_poly(num).mul(&RatFunc::from_poly(den).inv()))
    }

    pub fn numer(&self) -> &MPoly {
        &self.num
    }

    /// The denominator, expanded, with positive lowest term.
    pub fn denom(&self) -> MPoly {
        self.den.expand()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_int(&self) -> Option<Int> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// True when the value lies in `Q` (no variables).
    pub fn is_constant(&self) -> bool {
        self.num.as_constant().is_some() && self.den.mono == ZERO_EXP && self.den.cyc.is_empty() && self.den.rest.is_one()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let mut num = self.num.add(&other.num);
            let mut den = self.den.clone();
            cancel(&mut num, &mut den);
            return RatFunc { num, den };
        }
        let mut den = self.den.lcm(&other.den);
        let mut num = self
            .num
            .mul(&den.cofactor(&self.den))
            .add(&other.num.mul(&den.cofactor(&other.den)));
        cancel(&mut num, &mut den);
        RatFunc { num, den }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    /// Sum over a common denominator, cancelling once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(items: I) -> RatFunc {
        let items: Vec<&RatFunc> = items.into_iter().filter(|x| !x.is_zero()).collect();
        match items.len() {
            0 => return RatFunc::zero(),
            1 => return items[0].clone(),
            2 => return items[0].add(items[1]),
            _ => {}
        }
        let mut den = items[0].den.clone();
        for x in &items[1..] {
            if x.den != den {
                den = den.lcm(&x.den);
            }
        }
        let mut num = MPoly::zero();
        for x in &items {
            if x.den == den {
                num = num.add(&x.num);
            } else {
                num = num.add(&x.num.mul(&den.cofactor(&x.den)));
            }
        }
        cancel(&mut num, &mut den);
        RatFunc { num, den }
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        let mut n1 = self.num.clone();
        let mut d2 = other.den.clone();
        cancel(&mut n1, &mut d2);
        let mut n2 = other.num.clone();
        let mut d1 = self.den.clone();
        cancel(&mut n2, &mut d1);
        RatFunc {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }

    pub fn scale_int(&self, c: &Int) -> RatFunc {
        self.mul(&RatFunc::from_int(c.clone()))
    }

    pub fn checked_inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        let f = factor(&self.num);
        let mut num = self.den.expand();
        if f.unit.is_negative() {
            num = num.neg();
        }
        Ok(RatFunc {
            num,
            den: Den {
                scalar: f.unit.abs(),
                mono: f.mono,
                cyc: f.cyc,
                rest: f.rest,
            },
        })
    }

    pub fn inv(&self) -> RatFunc {
        self.checked_inv().expect("division by zero")
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.checked_inv()?))
    }

    pub fn div(&self, other: &RatFunc) -> RatFunc {
        self.checked_div(other).expect("division by zero")
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        if e < 0 {
            return self.inv().pow(-e);
        }
        let mut acc = RatFunc::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `1 - self`
    pub fn one_minus(&self) -> RatFunc {
        RatFunc::one().sub(self)
    }

    /// Substitutes a polynomial for a variable.
    pub fn substitute(&self, v: Var, value: &MPoly) -> Result<RatFunc> {
        self.substitute_with(v, &RatFunc::from_poly(value.clone()))
    }

    /// Substitutes a rational function for a variable.
    pub fn substitute_with(&self, v: Var, value: &RatFunc) -> Result<RatFunc> {
        if !self.uses(v) {
            return Ok(self.clone());
        }
        let num = eval_poly(&self.num, v, value);
        let mut den = RatFunc::from_int(self.den.scalar.clone());
        let mut pieces: Vec<(MPoly, u32)> = Vec::new();
        if self.den.mono != ZERO_EXP {
            pieces.push((MPoly::monomial(Int::ONE, self.den.mono), 1));
        }
        for (c, k) in &self.den.cyc {
            pieces.push((c.poly().clone(), *k));
        }
        if !self.den.rest.is_one() {
            pieces.push((self.den.rest.clone(), 1));
        }
        for (p, k) in pieces {
            let val = if p.uses(v) { eval_poly(&p, v, value) } else { RatFunc::from_poly(p.clone()) };
            if val.is_zero() {
                return Err(MathError::Pole {
                    point: format!("{} = {}", v.name(), value),
                    what: format!("denominator factor {p} vanishes"),
                });
            }
            den = den.mul(&val.pow(k as i64));
        }
        num.checked_div(&den)
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> RatFunc {
        let swap = |p: &MPoly| {
            MPoly::from_terms(p.terms().iter().map(|(e, c)| {
                let mut ne = *e;
                ne.swap(a.index(), b.index());
                (ne, c.clone())
            }))
        };
        let mut den = RatFunc::from_int(self.den.scalar.clone());
        let mut m = self.den.mono;
        m.swap(a.index(), b.index());
        den = den.mul(&RatFunc::from_poly(MPoly::monomial(Int::ONE, m)));
        for (c, k) in &self.den.cyc {
            den = den.mul(&RatFunc::from_poly(swap(c.poly())).pow(*k as i64));
        }
        den = den.mul(&RatFunc::from_poly(swap(&self.den.rest)));
        RatFunc::from_poly(swap(&self.num)).div(&den)
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> RatFunc {
        let dn = RatFunc::from_poly(self.num.derivative(v));
        if !self.den.uses(v) {
            let mut r = RatFunc {
                num: dn.num,
                den: self.den.clone(),
            };
            cancel(&mut r.num, &mut r.den);
            return r;
        }
        let d = self.den.expand();
        let n = RatFunc::from_poly(self.num.clone());
        let dd = RatFunc::from_poly(d.derivative(v));
        let dr = RatFunc::from_poly(d);
        dn.mul(&dr).sub(&n.mul(&dd)).div(&dr.mul(&dr))
    }

    /// `∂/∂a` evaluated at `a = 1`.
    pub fn derivative_at_a1(&self) -> Result<RatFunc> {
        self.derivative(Var::A).substitute(Var::A, &MPoly::one())
    }

    /// Exact quotient by `a - 1`; the denominator must not involve `a`.
    pub fn exact_divide_a_minus_1(&self) -> Result<RatFunc> {
        if self.den.uses(Var::A) {
            return Err(MathError::Invalid("denominator involves a".into()));
        }
        let am1 = MPoly::var(Var::A).sub(&MPoly::one());
        let q = self.num.div_exact(&am1).ok_or(MathError::NotDivisible)?;
        let mut num = q;
        let mut den = self.den.clone();
        cancel(&mut num, &mut den);
        Ok(RatFunc { num, den })
    }
}

/// Evaluates a polynomial at `v = value` by Horner's rule in `v`.
fn eval_poly(p: &MPoly, v: Var, value: &RatFunc) -> RatFunc {
    if let Some(vp) = value.as_poly() {
        return RatFunc::from_poly(p.substitute(v, vp));
    }
    let idx = v.index();
    let deg = p.degree(v) as usize;
    let mut coeffs: Vec<Vec<(Exp, Int)>> = vec![Vec::new(); deg + 1];
    for (e, c) in p.terms() {
        let mut r = *e;
        r[idx] = 0;
        coeffs[e[idx] as usize].push((r, c.clone()));
    }
    let mut acc = RatFunc::zero();
    for c in coeffs.into_iter().rev() {
        acc = acc.mul(value).add(&RatFunc::from_poly(MPoly::from_terms(c)));
    }
    acc
}

impl From<MPoly> for RatFunc {
    fn from(p: MPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

fn needs_parens_den(p: &MPoly) -> bool {
    match p.terms() {
        [(e, c)] => {
            let vars = e.iter().filter(|&&x| x > 0).count();
            !(vars == 0 || (vars == 1 && c.is_one()))
        }
        _ => true,
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let den = self.den.expand();
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens_den(&den) {
            write!(f, "/({den})")
        } else {
            write!(f, "/{den}")
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Parsing

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> MathError {
        MathError::Parse(format!("{msg} at offset {}", self.pos))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut terms = vec![self.term()?];
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    terms.push(self.term()?.neg());
                }
                _ => break,
            }
        }
        Ok(RatFunc::sum(terms.iter()))
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let n = self.integer()?;
            let e: i64 = n.to_i64().ok_or_else(|| self.err("exponent too large"))?;
            if neg && base.is_zero() {
                return Err(MathError::DivisionByZero);
            }
            return Ok(base.pow(if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<Int>().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::from_int(self.integer()?)),
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::t())
            }
            Some(b'a') => {
                self.pos += 1;
                Ok(RatFunc::a())
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl FromStr for RatFunc {
    type Err = MathError;

    fn from_str(s: &str) -> Result<RatFunc> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let r = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(r)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        let q = MPoly::var(Var::Q);
        let t = MPoly::var(Var::T);
        let x = RatFunc::normalize(q.pow(2).sub(&t.pow(2)), q.sub(&t)).unwrap();
        assert_eq!(x.to_string(), "t + q");
        let one = MPoly::one();
        let z = RatFunc::normalize(MPoly::zero(), one.sub(&t)).unwrap();
        assert!(z.is_zero());
        assert!(z.is_polynomial());
        let a = one.sub(&q).mul(&one.sub(&t));
        assert!(RatFunc::normalize(a.clone(), one.sub(&t).mul(&one.sub(&q))).unwrap().is_one());
        assert_eq!(RatFunc::normalize(one, MPoly::zero()), Err(MathError::DivisionByZero));
    }

    #[test]
    fn printing() {
        assert_eq!(r("(1 - q*t^2)/(1 - t)").to_string(), "(1 - q*t^2)/(1 - t)");
        assert_eq!(r("-1/2").to_string(), "-1/2");
        assert_eq!(r("q/(1-t)").to_string(), "q/(1 - t)");
        assert_eq!(r("(1-t)/(2-2*q)").to_string(), "(1 - t)/(2 - 2*q)");
        assert_eq!(r("1/(t-1)").to_string(), "-1/(1 - t)");
        assert_eq!(r("3/(2*q)").to_string(), "3/(2*q)");
        assert_eq!(r("q^-2").to_string(), "1/q^2");
    }

    #[test]
    fn cancellation_through_sums() {
        let x = r("1/(1-q) - q/(1-q)");
        assert!(x.is_one());
        let y = r("(1-q^2)/(1-q)");
        assert_eq!(y.to_string(), "1 + q");
        let z = r("1/(1-q) + 1/(1+q)");
        assert_eq!(z.to_string(), "2/(1 - q^2)");
    }

    #[test]
    fn substitution_and_poles() {
        let x = r("(1 - t)/(1 - q*t)");
        assert_eq!(x.substitute(Var::Q, &MPoly::zero()).unwrap().to_string(), "1 - t");
        assert!(x.substitute(Var::T, &MPoly::one()).unwrap().is_zero());
        let y = r("1/(1 - t^2)");
        let m1 = MPoly::constant(Int::from(-1));
        assert!(matches!(y.substitute(Var::T, &m1), Err(MathError::Pole { .. })));
        let w = r("(q - t)/(1 - q)");
        assert_eq!(w.swap_vars(Var::Q, Var::T), r("(t - q)/(1 - t)"));
    }

    #[test]
    fn a_minus_one_helpers() {
        assert_eq!(r("a^2").derivative_at_a1().unwrap(), r("2"));
        assert_eq!(r("(a-1)*(1-q)/(1-t)").derivative_at_a1().unwrap(), r("(1-q)/(1-t)"));
        assert!(r("a^3 - 3*a").derivative_at_a1().unwrap().is_zero());
        let f = r("(a^2 - 1)*q/(1 - t)");
        assert_eq!(f.exact_divide_a_minus_1().unwrap(), r("(a + 1)*q/(1 - t)"));
        assert_eq!(r("a").exact_divide_a_minus_1(), Err(MathError::NotDivisible));
    }
}
