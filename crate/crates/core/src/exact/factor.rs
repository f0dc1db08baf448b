//! Factor detection for denominators: cyclotomic binomial factors
//! `Φ_d(x^e)` along a primitive exponent direction, plus a general gcd used
//! only for the rare residual factor.

use std::cmp::Ordering;
use std::sync::Arc;

use super::int::Int;
use super::poly::{pow_mod, Exp, MPoly, Var};

/// Prime with `p - 1` divisible by every integer up to 24.
const P: u64 = 2305842555786129361;
const GENERATOR: u64 = 37;
const MAX_FILTER_D: u32 = 24;

/// Coefficients of the univariate cyclotomic polynomial `Φ_d`, constant first.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // Φ_d = (y^d - 1) / ∏_{k | d, k < d} Φ_k
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for k in 1..d {
        if d % k == 0 {
            num = univariate_div(&num, &cyclotomic(k));
        }
    }
    num
}

fn univariate_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    // b is monic
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db];
        q[i] = c;
        for j in 0..=db {
            rem[i + j] -= c * b[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn euler_phi(mut n: u32) -> u32 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Normalizes a nonzero direction: divides by the gcd of its entries and makes
/// the first nonzero entry positive. Returns the direction and the multiple.
pub fn primitive_direction(e: [i64; 3]) -> ([i32; 3], u32) {
    let g = gcd_i64(gcd_i64(e[0], e[1]), e[2]);
    assert!(g > 0, "zero direction");
    let mut d = [(e[0] / g) as i32, (e[1] / g) as i32, (e[2] / g) as i32];
    let first = d.iter().find(|&&x| x != 0).copied().unwrap();
    if first < 0 {
        for x in d.iter_mut() {
            *x = -*x;
        }
    }
    (d, g as u32)
}

/// The irreducible factor `Φ_d(x^dir)`, cleared of negative exponents and
/// signed so that its lowest term is positive.
#[derive(Clone)]
pub struct Cyc {
    pub dir: [i32; 3],
    pub d: u32,
    poly: Arc<MPoly>,
}

impl Cyc {
    pub fn new(dir: [i32; 3], d: u32) -> Cyc {
        let coeffs = cyclotomic(d);
        let deg = coeffs.len() as u32 - 1;
        let pos: [u32; 3] = [0, 1, 2].map(|i| dir[i].max(0) as u32);
        let neg: [u32; 3] = [0, 1, 2].map(|i| (-dir[i]).max(0) as u32);
        let sign: i64 = if d == 1 { -1 } else { 1 };
        let terms = coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| {
            let k = k as u32;
            let e = [0, 1, 2].map(|i| k * pos[i] + (deg - k) * neg[i]);
            (e, Int::from(c * sign))
        });
        Cyc {
            dir,
            d,
            poly: Arc::new(MPoly::from_terms(terms)),
        }
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    /// Necessary condition for `self | p`, checked at one point modulo a prime.
    pub fn may_divide(&self, p: &MPoly) -> bool {
        if self.d > MAX_FILTER_D {
            return true;
        }
        let point = root_point(self.dir, self.d);
        p.eval_mod(&point, P) == 0
    }

    /// Divides out as many copies of `self` as possible.
    pub fn strip(&self, p: &mut MPoly) -> u32 {
        let mut k = 0;
        while !p.is_zero() && self.may_divide(p) {
            match p.div_exact(&self.poly) {
                Some(q) => {
                    *p = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.dir == other.dir && self.d == other.d
    }
}

impl Eq for Cyc {}

impl PartialOrd for Cyc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cyc {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dir, self.d).cmp(&(other.dir, other.d))
    }
}

impl std::hash::Hash for Cyc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dir.hash(state);
        self.d.hash(state);
    }
}

impl std::fmt::Debug for Cyc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Φ{}({:?})", self.d, self.dir)
    }
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2, P)
}

fn pow_mod_signed(b: u64, e: i64) -> u64 {
    if e >= 0 {
        pow_mod(b, e as u64, P)
    } else {
        pow_mod(inv_mod(b), (-e) as u64, P)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// A point `x` (mod P) with `x^dir` a primitive `d`-th root of unity and
/// otherwise arbitrary coordinates along the kernel of `dir`.
fn root_point(dir: [i32; 3], d: u32) -> [u64; 3] {
    let e = dir.map(|x| x as i64);
    // Bezout coefficients k with k·e = 1.
    let (g01, x0, x1) = ext_gcd(e[0], e[1]);
    let (g, y01, y2) = ext_gcd(g01, e[2]);
    debug_assert_eq!(g, 1);
    let k = [x0 * y01, x1 * y01, y2];
    let omega = pow_mod(GENERATOR, (P - 1) / d as u64, P);
    let mut x = [0u64; 3];
    for i in 0..3 {
        x[i] = pow_mod_signed(omega, k[i].rem_euclid(d as i64));
    }
    let kernel = [[e[1], -e[0], 0], [e[2], 0, -e[0]], [0, e[2], -e[1]]];
    let seeds = [1_000_003u64, 7_777_777_777u64, 123_456_791u64];
    for (f, s) in kernel.iter().zip(seeds) {
        if f.iter().all(|&c| c == 0) {
            continue;
        }
        for i in 0..3 {
            let m = pow_mod_signed(s, f[i]);
            x[i] = ((x[i] as u128 * m as u128) % P as u128) as u64;
        }
    }
    x
}

/// Result of splitting a nonzero polynomial into recognized factors.
#[derive(Clone, Debug)]
pub struct Factored {
    /// Signed integer content.
    pub unit: Int,
    pub mono: Exp,
    pub cyc: Vec<(Cyc, u32)>,
    /// Primitive cofactor with positive lowest term; `1` when fully split.
    pub rest: MPoly,
}

/// Splits `p` into content, monomial part, cyclotomic binomial factors and a
/// residual.
pub fn factor(p: &MPoly) -> Factored {
    assert!(!p.is_zero(), "division by zero");
    let (unit, prim) = p.normalized();
    let mono = prim.mono_content();
    let mut rest = prim.div_mono(&mono);
    let mut cyc = Vec::new();
    if rest.len() == 2 {
        if let Some(bin) = binomial_factors(&rest) {
            return Factored {
                unit,
                mono,
                cyc: bin,
                rest: MPoly::one(),
            };
        }
    }
    if rest.len() >= 2 {
        for c in candidates(&rest) {
            let k = c.strip(&mut rest);
            if k > 0 {
                cyc.push((c, k));
            }
            if rest.len() < 2 {
                break;
            }
        }
    }
    cyc.sort();
    Factored {
        unit,
        mono,
        cyc,
        rest,
    }
}

/// Exact factorization of `x^u ± x^v` (unit coefficients, coprime supports).
fn binomial_factors(p: &MPoly) -> Option<Vec<(Cyc, u32)>> {
    let [(u, cu), (v, cv)] = p.terms() else {
        return None;
    };
    if !cu.is_one() || cv.abs() != Int::ONE {
        return None;
    }
    let diff = [0, 1, 2].map(|i| v[i] as i64 - u[i] as i64);
    let (dir, g) = primitive_direction(diff);
    let mut out = Vec::new();
    if cv.is_negative() {
        // 1 - y^g
        for d in 1..=g {
            if g % d == 0 {
                out.push((Cyc::new(dir, d), 1));
            }
        }
    } else {
        // 1 + y^g
        for d in 1..=2 * g {
            if (2 * g) % d == 0 && g % d != 0 {
                out.push((Cyc::new(dir, d), 1));
            }
        }
    }
    out.sort();
    Some(out)
}

fn candidates(p: &MPoly) -> Vec<Cyc> {
    let exps: Vec<Exp> = p.terms().iter().map(|(e, _)| *e).collect();
    let mut best: std::collections::BTreeMap<[i32; 3], u32> = Default::default();
    for i in 0..exps.len() {
        for j in i + 1..exps.len() {
            let diff = [0, 1, 2].map(|k| exps[j][k] as i64 - exps[i][k] as i64);
            let (dir, g) = primitive_direction(diff);
            let entry = best.entry(dir).or_insert(0);
            *entry = (*entry).max(g);
        }
    }
    let mut out = Vec::new();
    for (dir, len) in best {
        // φ(d) ≤ len and φ(d) ≥ sqrt(d/2) bound the search; larger d stay residual.
        let dmax = (2 * len * len).clamp(2, MAX_FILTER_D);
        for d in 1..=dmax {
            if euler_phi(d) <= len {
                out.push(Cyc::new(dir, d));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// General gcd (primitive polynomial remainder sequences, recursive in the
// variables). Only used for residual factors.

fn split_var(p: &MPoly, v: Var) -> Vec<MPoly> {
    let idx = v.index();
    let deg = p.degree(v) as usize;
    let mut buckets: Vec<Vec<(Exp, Int)>> = vec![Vec::new(); deg + 1];
    for (e, c) in p.terms() {
        let mut r = *e;
        r[idx] = 0;
        buckets[e[idx] as usize].push((r, c.clone()));
    }
    buckets.into_iter().map(MPoly::from_terms).collect()
}

fn join_var(coeffs: &[MPoly], v: Var) -> MPoly {
    let idx = v.index();
    let mut terms = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        for (e, x) in c.terms() {
            let mut ne = *e;
            ne[idx] = k as u32;
            terms.push((ne, x.clone()));
        }
    }
    MPoly::from_terms(terms)
}

fn trim(v: &mut Vec<MPoly>) {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
}

fn content_of(coeffs: &[MPoly]) -> MPoly {
    let mut g = MPoly::zero();
    for c in coeffs {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    let mut k = Int::ZERO;
    for c in coeffs {
        k = k.gcd(&c.content());
        if k.is_one() {
            break;
        }
    }
    if g.is_zero() || k.is_zero() {
        return g;
    }
    g.normalized().1.scale(&k)
}

fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x = x.mul(lb);
        }
        for j in 0..=db {
            let idx = dr - db + j;
            r[idx] = r[idx].sub(&lr.mul(&b[j]));
        }
        r.pop();
        trim(&mut r);
        if r.iter().all(|x| x.is_zero()) {
            return vec![MPoly::zero()];
        }
    }
    r
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

/// Degree of `gcd(a, b)` in a univariate image mod `P`, coefficients constant first.
fn univariate_gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let strip = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap());
        let db = b.len() - 1;
        while a.len() > db {
            let c = mulmod(*a.last().unwrap(), inv);
            let shift = a.len() - 1 - db;
            for (j, &x) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + P - mulmod(c, x)) % P;
            }
            a.pop();
            strip(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when `a` and `b` provably share no factor of positive degree.
///
/// For each variable the other two are evaluated at a fixed point mod `P`; if
/// both leading coefficients survive and the images are coprime, the gcd has
/// degree zero in that variable.
fn coprime(a: &MPoly, b: &MPoly) -> bool {
    let point = [1_000_003u64, 7_777_777_777u64, 123_456_791u64];
    Var::ALL.iter().all(|&v| {
        if !a.uses(v) || !b.uses(v) {
            return true;
        }
        let ia: Vec<u64> = split_var(a, v).iter().map(|c| c.eval_mod(&point, P)).collect();
        let ib: Vec<u64> = split_var(b, v).iter().map(|c| c.eval_mod(&point, P)).collect();
        if ia.last() == Some(&0) || ib.last() == Some(&0) {
            return false;
        }
        univariate_gcd_degree_mod(ia, ib) == 0
    })
}

/// Greatest common divisor, normalized to positive lowest term.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.normalized().1;
    }
    if b.is_zero() {
        return a.normalized().1;
    }
    if let Some(x) = a.as_constant() {
        return MPoly::constant(x.gcd(&b.content()));
    }
    if let Some(x) = b.as_constant() {
        return MPoly::constant(x.gcd(&a.content()));
    }
    let Some(v) = Var::ALL.iter().copied().find(|&v| a.uses(v) || b.uses(v)) else {
        return MPoly::constant(a.content().gcd(&b.content()));
    };
    if coprime(a, b) {
        return MPoly::one();
    }
    let mut ca = split_var(a, v);
    let mut cb = split_var(b, v);
    let conta = content_of(&ca);
    let contb = content_of(&cb);
    let cont = gcd(&conta, &contb);
    for x in ca.iter_mut() {
        *x = x.div_exact(&conta).expect("content divides");
    }
    for x in cb.iter_mut() {
        *x = x.div_exact(&contb).expect("content divides");
    }
    if ca.len() < cb.len() {
        std::mem::swap(&mut ca, &mut cb);
    }
    while !(cb.len() == 1 && cb[0].is_zero()) {
        if cb.len() == 1 {
            ca = vec![MPoly::one()];
            break;
        }
        let r = prem(&ca, &cb);
        ca = cb;
        if r.len() == 1 && r[0].is_zero() {
            cb = r;
        } else {
            let c = content_of(&r);
            cb = r.iter().map(|x| x.div_exact(&c).expect("content divides")).collect();
        }
    }
    let pp = join_var(&ca, v);
    pp.mul(&cont).normalized().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MPoly {
        MPoly::var(Var::Q)
    }
    fn t() -> MPoly {
        MPoly::var(Var::T)
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cyc_poly_normalized() {
        let c = Cyc::new([0, 1, 0], 1);
        assert_eq!(c.poly().to_string(), "1 - t");
        let c = Cyc::new([1, -1, 0], 1);
        assert_eq!(c.poly().to_string(), "t - q");
        let c = Cyc::new([1, 2, 0], 2);
        assert_eq!(c.poly().to_string(), "1 + q*t^2");
    }

    #[test]
    fn factor_binomial_product() {
        let one = MPoly::one();
        let p = one.sub(&q().pow(2)).mul(&one.sub(&q().mul(&t())));
        let f = factor(&p);
        assert!(f.rest.is_one());
        assert_eq!(f.cyc.len(), 3);
        let mut back = MPoly::constant(f.unit.clone()).mul_mono(&f.mono);
        for (c, k) in &f.cyc {
            back = back.mul(&c.poly().pow(*k));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn factor_keeps_residual() {
        let one = MPoly::one();
        let r = one.sub(&q().scale(&Int::from(2))).add(&t());
        let p = r.mul(&one.sub(&t().pow(3))).mul_mono(&[0, 2, 0]).scale(&Int::from(-6));
        let f = factor(&p);
        assert_eq!(f.unit, Int::from(-6));
        assert_eq!(f.mono, [0, 2, 0]);
        assert_eq!(f.rest, r);
        assert_eq!(f.cyc.len(), 2);
    }

    #[test]
    fn general_gcd() {
        let one = MPoly::one();
        let a = q().add(&t()).add(&one);
        let b = q().sub(&t().pow(2));
        let c = q().mul(&t()).add(&MPoly::var(Var::A));
        let g = gcd(&a.mul(&c), &b.mul(&c).scale(&Int::from(4)));
        assert_eq!(g, c);
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_integer_content_in_coefficients() {
        let one = MPoly::one();
        let a = MPoly::var(Var::A);
        let x = one.add(&q()).sub(&q().pow(3).mul(&t()).mul(&a.pow(2)).scale(&Int::from(2)));
        let y = one.add(&q()).add(&q().mul(&t()).mul(&a.pow(2)));
        let z = one.add(&q()).add(&q().pow(2).mul(&a).scale(&Int::from(2))).add(&q().pow(2).mul(&t().pow(2)).mul(&a.pow(2)));
        assert_eq!(gcd(&x.mul(&y), &x.mul(&z).scale(&Int::from(6))), x);
        assert!(gcd(&y.mul(&z), &x).is_one());
        assert_eq!(univariate_gcd_degree_mod(vec![P - 1, 0, 1], vec![1, 1]), 1);
    }
}
