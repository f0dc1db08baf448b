//! Sparse polynomials in `q`, `t`, `a` with integer coefficients.
//!
//! Terms are kept sorted ascending in lexicographic order with `q > t > a`,
//! which is also the print order.

use std::collections::BTreeMap;
use std::fmt;

use super::int::Int;

/// Exponent vector `(e_q, e_t, e_a)`.
pub type Exp = [u32; 3];

pub const ZERO_EXP: Exp = [0, 0, 0];

/// The three indeterminates of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    T = 1,
    A = 2,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::T, Var::A];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::A => "a",
        }
    }
}

pub(crate) fn exp_add(a: &Exp, b: &Exp) -> Exp {
    let mut out = [0u32; 3];
    for i in 0..3 {
        out[i] = a[i]
            .checked_add(b[i])
            .expect("exponent overflow in polynomial arithmetic");
    }
    out
}

pub(crate) fn exp_divides(a: &Exp, b: &Exp) -> bool {
    a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
}

pub(crate) fn exp_sub(a: &Exp, b: &Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub(crate) fn exp_min(a: &Exp, b: &Exp) -> Exp {
    [a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])]
}

/// A multivariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Exp, Int)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Int::ONE)
    }

    pub fn constant(c: Int) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly {
                terms: vec![(ZERO_EXP, c)],
            }
        }
    }

    pub fn var(v: Var) -> Self {
        let mut e = ZERO_EXP;
        e[v.index()] = 1;
        Self::monomial(Int::ONE, e)
    }

    pub fn monomial(c: Int, e: Exp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp, Int)>>(terms: I) -> Self {
        let mut v: Vec<(Exp, Int)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly {
            terms: merge_sorted(v),
        }
    }

    pub fn terms(&self) -> &[(Exp, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXP && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(e, c)] if *e == ZERO_EXP => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest term in lex order.
    pub fn leading(&self) -> Option<&(Exp, Int)> {
        self.terms.last()
    }

    /// Smallest term in lex order (the first printed term).
    pub fn lowest(&self) -> Option<&(Exp, Int)> {
        self.terms.first()
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e[v.index()]).max().unwrap_or(0)
    }

    pub fn min_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(e, _)| e[v.index()]).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e[0] + e[1] + e[2])
            .max()
            .unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.iter().any(|(e, _)| e[v.index()] > 0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn mono_content(&self) -> Exp {
        let mut it = self.terms.iter();
        match it.next() {
            None => ZERO_EXP,
            Some((e0, _)) => it.fold(*e0, |acc, (e, _)| exp_min(&acc, e)),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &Int) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn div_scalar_exact(&self, c: &Int) -> MPoly {
        if c.is_one() {
            return self.clone();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x.div_exact(c))).collect(),
        }
    }

    pub fn mul_mono(&self, m: &Exp) -> MPoly {
        if *m == ZERO_EXP {
            return self.clone();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (exp_add(e, m), c.clone())).collect(),
        }
    }

    pub fn div_mono(&self, m: &Exp) -> MPoly {
        if *m == ZERO_EXP {
            return self.clone();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (exp_sub(e, m), c.clone()))
                .collect(),
        }
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &MPoly) -> MPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        self.combine(other, true)
    }

    fn combine(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MPoly { terms: out }
    }

    pub fn mul(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.mul_mono(e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.mul_mono(e).scale(c);
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                prods.push((exp_add(ea, eb), ca * cb));
            }
        }
        prods.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        MPoly {
            terms: merge_sorted(prods),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MPoly) -> Option<MPoly> {
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !exp_divides(de, e) {
                    return None;
                }
                out.push((exp_sub(e, de), c.checked_div_exact(dc)?));
            }
            return Some(MPoly { terms: out });
        }
        // Cheap necessary conditions on degrees.
        for v in Var::ALL {
            if divisor.degree(v) > self.degree(v) {
                return None;
            }
        }
        let (lead_e, lead_c) = divisor.terms.last().unwrap();
        let (low_e, low_c) = &divisor.terms[0];
        // The lowest term of a product is the product of the lowest terms.
        let (self_low_e, self_low_c) = &self.terms[0];
        if !exp_divides(low_e, self_low_e) || self_low_c.checked_div_exact(low_c).is_none() {
            return None;
        }
        let rest = &divisor.terms[..divisor.terms.len() - 1];
        let mut rem: BTreeMap<Exp, Int> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Exp, Int)> = Vec::new();
        while let Some((e, c)) = rem.pop_last() {
            if !exp_divides(lead_e, &e) {
                return None;
            }
            let qc = c.checked_div_exact(lead_c)?;
            let qe = exp_sub(&e, lead_e);
            for (de, dc) in rest {
                let te = exp_add(&qe, de);
                let tc = &qc * dc;
                match rem.entry(te) {
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        *o.get_mut() -= &tc;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-tc);
                    }
                }
            }
            quot.push((qe, qc));
        }
        quot.reverse();
        Some(MPoly { terms: quot })
    }

    /// Substitutes `v := value` and expands.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        if !self.uses(v) {
            return self.clone();
        }
        let idx = v.index();
        let maxd = self.degree(v);
        let mut powers = vec![MPoly::one()];
        for _ in 0..maxd {
            let next = powers.last().unwrap().mul(value);
            powers.push(next);
        }
        // Group terms by the exponent of v.
        let mut groups: BTreeMap<u32, Vec<(Exp, Int)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[idx] = 0;
            groups.entry(e[idx]).or_default().push((rest, c.clone()));
        }
        let mut acc = MPoly::zero();
        for (d, ts) in groups {
            let part = MPoly::from_terms(ts);
            acc = acc.add(&part.mul(&powers[d as usize]));
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> MPoly {
        let idx = v.index();
        MPoly::from_terms(self.terms.iter().filter(|(e, _)| e[idx] > 0).map(|(e, c)| {
            let mut ne = *e;
            ne[idx] -= 1;
            (ne, c * &Int::from(e[idx]))
        }))
    }

    /// Evaluates modulo a prime with the given variable values.
    pub fn eval_mod(&self, vals: &[u64; 3], p: u64) -> u64 {
        let mut acc: u64 = 0;
        for (e, c) in &self.terms {
            let mut term = c.rem_u64(p) as u128;
            for i in 0..3 {
                term = term * pow_mod(vals[i], e[i] as u64, p) as u128 % p as u128;
            }
            acc = ((acc as u128 + term) % p as u128) as u64;
        }
        acc
    }

    /// Primitive part with the lowest term made positive.
    pub fn normalized(&self) -> (Int, MPoly) {
        if self.is_zero() {
            return (Int::ZERO, MPoly::zero());
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r: u128 = 1;
    let mut bb = (b % p) as u128;
    b = 0;
    let _ = b;
    while e > 0 {
        if e & 1 == 1 {
            r = r * bb % p as u128;
        }
        bb = bb * bb % p as u128;
        e >>= 1;
    }
    r as u64
}

fn merge_sorted(v: Vec<(Exp, Int)>) -> Vec<(Exp, Int)> {
    let mut out: Vec<(Exp, Int)> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1 += &c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if let Some(last) = out.last() {
        if last.1.is_zero() {
            out.pop();
        }
    }
    out
}

fn write_mono(f: &mut fmt::Formatter<'_>, e: &Exp) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let k = e[v.index()];
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "{}", v.name())?;
        } else {
            write!(f, "{}^{}", v.name(), k)?;
        }
    }
    Ok(())
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if *e == ZERO_EXP {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write_mono(f, e)?;
            } else {
                write!(f, "{abs}*")?;
                write_mono(f, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
