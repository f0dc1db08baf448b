//! q-shifted factorials and Gaussian binomial coefficients.

use super::int::Int;
use super::poly::{MPoly, Var};
use super::ratfunc::RatFunc;

/// `(x; base)_k`. For negative `k` this is `1 / ∏_{m=1}^{|k|} (1 - x base^{-m})`.
pub fn shifted_factorial(x: &RatFunc, base: &RatFunc, k: i64) -> RatFunc {
    if k >= 0 {
        let mut acc = RatFunc::one();
        let mut cur = x.clone();
        for _ in 0..k {
            acc = acc.mul(&cur.one_minus());
            cur = cur.mul(base);
        }
        acc
    } else {
        let binv = base.inv();
        let mut acc = RatFunc::one();
        let mut cur = x.mul(&binv);
        for _ in 0..(-k) {
            acc = acc.mul(&cur.one_minus());
            cur = cur.mul(&binv);
        }
        acc.inv()
    }
}

/// `(x; q)_k`
pub fn q_shifted_factorial(x: &RatFunc, k: i64) -> RatFunc {
    shifted_factorial(x, &RatFunc::q(), k)
}

/// Gaussian binomial `[a; b]` in the variable `v`.
pub fn gaussian_binomial(v: Var, a: i64, b: i64) -> RatFunc {
    if b < 0 || (a >= 0 && b > a) {
        return RatFunc::zero();
    }
    if b == 0 {
        return RatFunc::one();
    }
    if a >= 0 {
        return RatFunc::from_poly(gaussian_poly(v, a as usize, b as usize));
    }
    let x = RatFunc::var(v);
    let top = shifted_factorial(&x.pow(a - b + 1), &x, b);
    let bottom = shifted_factorial(&x, &x, b);
    top.div(&bottom)
}

/// `[a; b]_q` for the base variable `q`.
pub fn q_binomial(a: i64, b: i64) -> RatFunc {
    gaussian_binomial(Var::Q, a, b)
}

fn gaussian_poly(v: Var, a: usize, b: usize) -> MPoly {
    // [n; k] = [n-1; k-1] + x^k [n-1; k]
    let b = b.min(a - b);
    let mut row: Vec<MPoly> = vec![MPoly::one(); b + 1];
    for k in 1..=b {
        row[k] = MPoly::zero();
    }
    for n in 1..=a {
        for k in (1..=b.min(n)).rev() {
            let mut e = [0u32; 3];
            e[v.index()] = k as u32;
            row[k] = row[k - 1].add(&row[k].mul_mono(&e));
        }
    }
    row[b].clone()
}

/// `[n]_x = (1 - x^n) / (1 - x)` for `n ≥ 0`.
pub fn q_integer(x: &RatFunc, n: u32) -> RatFunc {
    let mut acc = RatFunc::zero();
    let mut p = RatFunc::one();
    for _ in 0..n {
        acc = acc.add(&p);
        p = p.mul(x);
    }
    acc
}

/// Classical binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = Int::ONE;
    for i in 0..k {
        acc = (&acc * &Int::from((n - i) as i64)).div_exact(&Int::from((i + 1) as i64));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(q_shifted_factorial(&RatFunc::q(), 2), r("(1-q)*(1-q^2)"));
        assert!(q_shifted_factorial(&r("17*a/(1-t)"), 0).is_one());
        assert_eq!(q_shifted_factorial(&RatFunc::t(), 3), r("(1-t)*(1-t*q)*(1-t*q^2)"));
        assert_eq!(q_shifted_factorial(&RatFunc::t(), -1), r("1/(1 - t/q)"));
    }

    #[test]
    fn binomial_examples() {
        assert!(q_binomial(5, 0).is_one());
        assert!(q_binomial(-3, 0).is_one());
        assert_eq!(q_binomial(2, 1).to_string(), "1 + q");
        assert_eq!(q_binomial(4, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert!(q_binomial(3, 4).is_zero());
        assert!(q_binomial(3, -1).is_zero());
        let direct = q_shifted_factorial(&RatFunc::q().pow(3), 2).div(&q_shifted_factorial(&RatFunc::q(), 2));
        assert_eq!(q_binomial(4, 2), direct);
        assert_eq!(q_binomial(-1, 1), r("-1/q"));
    }
}
