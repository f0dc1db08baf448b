use crate::error::Result;
use crate::exact::{gaussian_binomial, q_shifted_factorial, RatFunc, Var};
use crate::partitions::{partitions_between, Partition, SkewShape};
use crate::symfunc::Alphabet;

use super::basis::{c_prime, skew_q};

fn skew(lam: &Partition, mu: &Partition) -> SkewShape {
    SkewShape {
        outer: lam.clone(),
        inner: mu.clone(),
    }
}

/// `f(q^x T)/f(q^y T)` with `f(u) = (tu;q)_∞/(qu;q)_∞` and `T = t^s`.
fn f_ratio(x: i64, y: i64, s: i64) -> RatFunc {
    if x < y {
        return f_ratio(y, x, s).inv();
    }
    let num = q_shifted_factorial(&RatFunc::monomial([y + 1, s, 0]), x - y);
    let den = q_shifted_factorial(&RatFunc::monomial([y, s + 1, 0]), x - y);
    num.div(&den)
}

/// `φ_{λ/μ}(q,t)`, zero unless `λ/μ` is a horizontal strip.
pub fn phi(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) || !skew(lam, mu).is_horizontal_strip() {
        return RatFunc::zero();
    }
    let l = lam.len();
    let (la, m) = (|i: usize| lam.part(i) as i64, |i: usize| mu.part(i) as i64);
    let mut acc = RatFunc::one();
    for i in 0..l {
        for j in i..l {
            let s = (j - i) as i64;
            acc = acc.mul(&f_ratio(la(i) - la(j), la(i) - m(j), s));
            acc = acc.mul(&f_ratio(m(i) - m(j + 1), m(i) - la(j + 1), s));
        }
    }
    acc
}

/// `ψ'_{λ/μ}(q,t)`, zero unless `λ/μ` is a vertical strip.
pub fn psi_prime(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) || !skew(lam, mu).is_vertical_strip() {
        return RatFunc::zero();
    }
    let l = lam.len();
    let (la, m) = (|i: usize| lam.part(i) as i64, |i: usize| mu.part(i) as i64);
    let mut acc = RatFunc::one();
    for i in 0..l {
        if la(i) != m(i) {
            continue;
        }
        for j in i + 1..l {
            if la(j) != m(j) + 1 {
                continue;
            }
            let s = (j - i) as i64;
            let dm = m(i) - m(j);
            let dl = la(i) - la(j);
            let num = RatFunc::monomial([dm, s - 1, 0])
                .one_minus()
                .mul(&RatFunc::monomial([dl, s + 1, 0]).one_minus());
            let den = RatFunc::monomial([dm, s, 0])
                .one_minus()
                .mul(&RatFunc::monomial([dl, s, 0]).one_minus());
            acc = acc.mul(&num).div(&den);
        }
    }
    acc
}

/// `sk_{λ/μ}(q,t) = Q_{λ/μ}((1-q/t)/(1-t))` as a product, with `μ` padded by zeros:
///
/// `t^{n(λ)-n(μ)} ∏_{i,j} (qt^{j-i-1})_{λ_i-μ_j}/(qt^{j-i})_{λ_i-μ_j}
///  · ∏_{i>j} (qt^{j-i})_{μ_i-μ_j}/(qt^{j-i-1})_{μ_i-μ_j}
///  · ∏_{i<j} (qt^{j-i})_{λ_i-λ_j}/(qt^{j-i-1})_{λ_i-λ_j}`
pub fn sk_qt(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) {
        return RatFunc::zero();
    }
    let l = lam.len();
    let (la, m) = (|i: usize| lam.part(i) as i64, |i: usize| mu.part(i) as i64);
    let mut num = vec![RatFunc::t().pow(lam.n() as i64 - mu.n() as i64)];
    let mut den = Vec::new();
    for i in 0..l {
        for j in 0..l {
            let s = j as i64 - i as i64;
            let x1 = RatFunc::monomial([1, s - 1, 0]);
            let x2 = RatFunc::monomial([1, s, 0]);
            num.push(q_shifted_factorial(&x1, la(i) - m(j)));
            den.push(q_shifted_factorial(&x2, la(i) - m(j)));
            if i > j {
                num.push(q_shifted_factorial(&x2, m(i) - m(j)));
                den.push(q_shifted_factorial(&x1, m(i) - m(j)));
            }
            if i < j {
                num.push(q_shifted_factorial(&x2, la(i) - la(j)));
                den.push(q_shifted_factorial(&x1, la(i) - la(j)));
            }
        }
    }
    let prod = |v: Vec<RatFunc>| v.iter().fold(RatFunc::one(), |a, b| a.mul(b));
    prod(num).div(&prod(den))
}

/// `ν` with `μ ⊆ ν ⊆ λ` and `λ/ν` a horizontal strip.
pub fn horizontal_removals(lam: &Partition, mu: &Partition) -> Vec<Partition> {
    partitions_between(mu, lam)
        .into_iter()
        .filter(|nu| skew(lam, nu).is_horizontal_strip())
        .collect()
}

/// `ν` with `μ ⊆ ν ⊆ λ` and `λ/ν` a vertical strip.
pub fn vertical_removals(lam: &Partition, mu: &Partition) -> Vec<Partition> {
    partitions_between(mu, lam)
        .into_iter()
        .filter(|nu| skew(lam, nu).is_vertical_strip())
        .collect()
}

/// `Q_{ν/μ}(-1;q,t) = Σ_η (-1)^{|ν/η|} t^{|η/μ|} ψ'_{ν/η} sk_{η/μ}`.
pub fn q_minus_one(nu: &Partition, mu: &Partition) -> RatFunc {
    let mut items = Vec::new();
    for eta in vertical_removals(nu, mu) {
        let mut x = RatFunc::t()
            .pow((eta.size() - mu.size()) as i64)
            .mul(&psi_prime(nu, &eta))
            .mul(&sk_qt(&eta, mu));
        if (nu.size() - eta.size()) % 2 == 1 {
            x = x.neg();
        }
        items.push(x);
    }
    RatFunc::sum(items.iter())
}

/// Terms `(|λ/ν|, (-1)^{|ν/η|} t^{|η/μ|} ψ'_{ν/η} φ_{λ/ν} sk_{η/μ})` of the
/// closed form for `Q_{λ/μ}(a-1)`.
fn a_minus_one_terms(lam: &Partition, mu: &Partition) -> Vec<(usize, RatFunc)> {
    let mut out = Vec::new();
    if !lam.contains(mu) {
        return out;
    }
    for nu in horizontal_removals(lam, mu) {
        let ph = phi(lam, &nu);
        let inner = q_minus_one(&nu, mu);
        if !inner.is_zero() {
            out.push((lam.size() - nu.size(), ph.mul(&inner)));
        }
    }
    out
}

/// `Q_{λ/μ}(a-1;q,t)` as a polynomial in `a`.
pub fn skew_eval_a_minus_1(lam: &Partition, mu: &Partition) -> RatFunc {
    let items: Vec<RatFunc> = a_minus_one_terms(lam, mu)
        .into_iter()
        .map(|(k, x)| x.mul(&RatFunc::a().pow(k as i64)))
        .collect();
    RatFunc::sum(items.iter())
}

/// `∂_a Q_{λ/ρ}(a-1;q,t)` at `a = 1`, summed term by term.
pub fn skew_eval_a_derivative(lam: &Partition, rho: &Partition) -> RatFunc {
    let items: Vec<RatFunc> = a_minus_one_terms(lam, rho)
        .into_iter()
        .filter(|(k, _)| *k > 0)
        .map(|(k, x)| x.scale_int(&k.into()))
        .collect();
    RatFunc::sum(items.iter())
}

/// Generalized binomial `t^{n(μ)-n(λ)} (c'_λ/c'_μ) Q_{λ/μ}(1/(1-t);q,t)`.
pub fn qt_binomial(lam: &Partition, mu: &Partition) -> Result<RatFunc> {
    if !lam.contains(mu) {
        return Ok(RatFunc::zero());
    }
    let v = skew_q(lam, mu)?.eval(&Alphabet::geometric(Var::T))?;
    Ok(RatFunc::t()
        .pow(mu.n() as i64 - lam.n() as i64)
        .mul(&c_prime(lam))
        .div(&c_prime(mu))
        .mul(&v))
}

/// `ψ'_{λ/μ}(t) = ∏_j [λ'_j - λ'_{j+1}; λ'_j - μ'_j]_t`
pub fn psi_prime_t(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) || !skew(lam, mu).is_vertical_strip() {
        return RatFunc::zero();
    }
    let mut acc = RatFunc::one();
    for j in 0..lam.width() {
        let a = lam.conj_part(j) as i64 - lam.conj_part(j + 1) as i64;
        let b = lam.conj_part(j) as i64 - mu.conj_part(j) as i64;
        acc = acc.mul(&gaussian_binomial(Var::T, a, b));
    }
    acc
}

/// `sk_{λ/μ}(t) = t^{n(λ/μ)} ∏_j [λ'_j - μ'_{j+1}; m_j(μ)]_t`
pub fn sk_t(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) {
        return RatFunc::zero();
    }
    let mut acc = RatFunc::t().pow(skew(lam, mu).n_stat() as i64);
    for j in 0..lam.width() {
        let a = lam.conj_part(j) as i64 - mu.conj_part(j + 1) as i64;
        let b = mu.multiplicity(j + 1) as i64;
        acc = acc.mul(&gaussian_binomial(Var::T, a, b));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{shifted_factorial, MPoly};
    use crate::macdonald::basis::{c, family_skew_q, Family};
    use crate::partitions::{major_indices, partitions};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pairs(max: usize) -> Vec<(Partition, Partition)> {
        let mut v = Vec::new();
        for n in 0..=max {
            for lam in partitions(n) {
                for k in 0..=n {
                    for mu in partitions(k) {
                        if lam.contains(&mu) {
                            v.push((lam.clone(), mu));
                        }
                    }
                }
            }
        }
        v
    }

    #[test]
    fn trivial_values() {
        let l = p("3,1");
        assert!(phi(&l, &l).is_one());
        assert!(psi_prime(&l, &l).is_one());
        assert!(sk_qt(&l, &l).is_one());
        assert!(psi_prime(&p("2"), &Partition::empty()).is_zero());
        assert!(phi(&p("1,1"), &Partition::empty()).is_zero());
        assert!(skew_eval_a_minus_1(&l, &l).is_one());
    }

    #[test]
    fn pieri_at_single_letter() {
        let a = Alphabet::singleton(RatFunc::a());
        for (lam, mu) in pairs(4) {
            let v = skew_q(&lam, &mu).unwrap().eval(&a).unwrap();
            let want = phi(&lam, &mu).mul(&RatFunc::a().pow((lam.size() - mu.size()) as i64));
            assert_eq!(v, want, "{lam}/{mu}");
        }
    }

    #[test]
    fn sk_is_principal_evaluation() {
        let al = Alphabet::principal_qt();
        for (lam, mu) in pairs(5) {
            let v = skew_q(&lam, &mu).unwrap().eval(&al).unwrap();
            assert_eq!(v, sk_qt(&lam, &mu), "{lam}/{mu}");
        }
    }

    #[test]
    fn minus_one_matches_lambda_ring() {
        for (nu, mu) in pairs(4) {
            let v = skew_q(&nu, &mu).unwrap().eval(&Alphabet::minus_one()).unwrap();
            assert_eq!(v, q_minus_one(&nu, &mu), "{nu}/{mu}");
        }
    }

    #[test]
    fn a_minus_one_small() {
        let v = skew_eval_a_minus_1(&p("1"), &Partition::empty());
        assert_eq!(v, "(1-t)*(a-1)/(1-q)".parse().unwrap());
        let d = skew_eval_a_derivative(&p("2,1"), &p("1"));
        assert_eq!(d, skew_eval_a_minus_1(&p("2,1"), &p("1")).derivative_at_a1().unwrap());
    }

    #[test]
    fn binomial_values() {
        let l = p("3,1");
        assert!(qt_binomial(&l, &l).unwrap().is_one());
        assert!(qt_binomial(&p("1"), &Partition::empty()).unwrap().is_one());
        assert!(qt_binomial(&p("2"), &p("1,1")).unwrap().is_zero());
    }

    #[test]
    fn hall_littlewood_principal() {
        let al = Alphabet::geometric(Var::T);
        for (lam, mu) in pairs(4) {
            let v = family_skew_q(Family::HallLittlewood, &lam, &mu).unwrap().eval(&al).unwrap();
            assert_eq!(v, sk_t(&lam, &mu), "{lam}/{mu}");
        }
    }

    #[test]
    fn a_minus_one_matches_lambda_ring() {
        let al = Alphabet::a_minus_one();
        for (lam, mu) in pairs(4) {
            let v = skew_q(&lam, &mu).unwrap().eval(&al).unwrap();
            let closed = skew_eval_a_minus_1(&lam, &mu);
            assert_eq!(v, closed, "{lam}/{mu}");
            let at1 = closed.substitute(Var::A, &MPoly::one()).unwrap();
            assert_eq!(at1.is_one(), lam == mu);
            assert_eq!(at1.is_zero(), lam != mu);
        }
    }

    #[test]
    fn c_prime_is_conjugate_c_with_q_and_t_swapped() {
        for n in 1..=6 {
            for lam in partitions(n) {
                let swapped = c(&lam.conjugate()).swap_vars(Var::Q, Var::T);
                assert_eq!(c_prime(&lam), swapped, "{lam}");
            }
        }
        assert_ne!(c_prime(&p("2")), c(&p("1,1")));
    }

    #[test]
    fn binomial_at_q_equals_t() {
        // at q = t, Q_{λ/μ} = s_{λ/μ} and s_{λ/μ}(1/(1-t)) = Σ_T t^{maj T} / (t;t)_n
        let to_t = |x: &RatFunc| x.substitute(Var::Q, &MPoly::var(Var::T)).unwrap();
        for (lam, mu) in pairs(4) {
            let shape = skew(&lam, &mu);
            let k = shape.size();
            let fake = RatFunc::sum(
                major_indices(&shape)
                    .into_iter()
                    .map(|m| RatFunc::t().pow(m as i64))
                    .collect::<Vec<_>>()
                    .iter(),
            );
            let s_val = fake.div(&shifted_factorial(&RatFunc::t(), &RatFunc::t(), k as i64));
            let want = RatFunc::t()
                .pow(mu.n() as i64 - lam.n() as i64)
                .mul(&to_t(&c_prime(&lam)))
                .div(&to_t(&c_prime(&mu)))
                .mul(&s_val);
            assert_eq!(to_t(&qt_binomial(&lam, &mu).unwrap()), want, "{lam}/{mu}");
        }
    }
}
