use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::error::{MathError, Result};
use crate::exact::{RatFunc, Var};
use crate::partitions::Partition;
use crate::symfunc::{tables, z_qt, Basis, Inner, SymFunc, MAX_DEGREE};

/// Which orthogonal family a table holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// Macdonald `P_λ(X;q,t)`.
    Macdonald,
    /// Hall–Littlewood `P_λ(X;t) = P_λ(X;0,t)`.
    HallLittlewood,
}

impl Family {
    fn inner(self) -> Inner {
        match self {
            Family::Macdonald => Inner::Qt,
            Family::HallLittlewood => Inner::T,
        }
    }

    /// `b_λ = 1/⟨P_λ, P_λ⟩` in this family.
    pub fn b(self, lam: &Partition) -> RatFunc {
        match self {
            Family::Macdonald => b(lam),
            Family::HallLittlewood => b_hl(lam),
        }
    }
}

/// Coefficient substitutions leading from Macdonald to classical families.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    /// `q → 0`
    HallLittlewood,
    /// `q → 0, t → -1`
    SchurQ,
}

pub fn specialize(f: &SymFunc, spec: Specialization) -> Result<SymFunc> {
    let g = f.specialize(Var::Q, &RatFunc::zero())?;
    match spec {
        Specialization::HallLittlewood => Ok(g),
        Specialization::SchurQ => g.specialize(Var::T, &RatFunc::from_int(-1)),
    }
}

/// `c_λ = ∏_s (1 - q^{a(s)} t^{l(s)+1})`
pub fn c(lam: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lam.cells() {
        let (a, l) = (lam.arm(i, j) as i64, lam.leg(i, j) as i64);
        acc = acc.mul(&RatFunc::monomial([a, l + 1, 0]).one_minus());
    }
    acc
}

/// `c'_λ = ∏_s (1 - q^{a(s)+1} t^{l(s)})`
pub fn c_prime(lam: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    for (i, j) in lam.cells() {
        let (a, l) = (lam.arm(i, j) as i64, lam.leg(i, j) as i64);
        acc = acc.mul(&RatFunc::monomial([a + 1, l, 0]).one_minus());
    }
    acc
}

/// `b_λ(q,t) = c_λ / c'_λ`
pub fn b(lam: &Partition) -> RatFunc {
    c(lam).div(&c_prime(lam))
}

/// `b_λ(t) = ∏_i (t;t)_{m_i(λ)}`
pub fn b_hl(lam: &Partition) -> RatFunc {
    let mut acc = RatFunc::one();
    let mut i = 0;
    while i < lam.len() {
        let v = lam.part(i);
        let m = lam.multiplicity(v);
        for k in 1..=m {
            acc = acc.mul(&RatFunc::t().pow(k as i64).one_minus());
        }
        i += m;
    }
    acc
}

/// The scalars attached to a partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalars {
    pub b: RatFunc,
    pub c: RatFunc,
    pub c_prime: RatFunc,
    pub z_qt: RatFunc,
}

pub fn scalars(lam: &Partition) -> Scalars {
    let (c, cp) = (c(lam), c_prime(lam));
    Scalars {
        b: c.div(&cp),
        c,
        c_prime: cp,
        z_qt: z_qt(lam),
    }
}

/// `P_λ` for every `λ ⊢ n`: monomial coefficients and power-sum form.
pub struct BasisTable {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `mono[λ][μ]`: coefficient of `m_μ` in `P_λ`.
    pub mono: Vec<Vec<RatFunc>>,
    pub power: Vec<SymFunc>,
}

static GENERIC: [OnceLock<BasisTable>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];
static HL: [OnceLock<BasisTable>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

pub fn basis_table(family: Family, n: usize) -> Result<&'static BasisTable> {
    tables(n)?;
    let slot = match family {
        Family::Macdonald => &GENERIC[n],
        Family::HallLittlewood => &HL[n],
    };
    Ok(slot.get_or_init(|| BasisTable::build(family, n)))
}

fn inner_diag(a: &SymFunc, b: &SymFunc, z: &HashMap<Partition, RatFunc>) -> RatFunc {
    let mut v = Vec::new();
    for (p, x) in a.terms() {
        if let Some(y) = b.terms().get(p) {
            v.push(x.mul(y).mul(&z[p]));
        }
    }
    RatFunc::sum(v.iter())
}

impl BasisTable {
    /// Gram–Schmidt in increasing lexicographic order, projecting only onto
    /// dominance-lower partitions.
    fn build(family: Family, n: usize) -> BasisTable {
        let tb = tables(n).expect("degree checked");
        let parts = tb.parts.clone();
        let dim = parts.len();
        let zmap: HashMap<Partition, RatFunc> = parts
            .iter()
            .map(|p| (p.clone(), family.inner().z(p)))
            .collect();
        let m_pow: Vec<SymFunc> = (0..dim)
            .map(|i| SymFunc::from_terms(Basis::Power, parts.iter().cloned().zip(tb.m2p[i].iter().cloned())))
            .collect();
        let bs: Vec<RatFunc> = parts.iter().map(|p| family.b(p)).collect();

        let mut mono: Vec<Vec<RatFunc>> = vec![Vec::new(); dim];
        let mut power: Vec<SymFunc> = vec![SymFunc::zero(Basis::Power); dim];
        for i in (0..dim).rev() {
            let lower: Vec<usize> = (i + 1..dim).filter(|&k| parts[i].dominates(&parts[k])).collect();
            let coeffs: Vec<(usize, RatFunc)> = lower
                .par_iter()
                .map(|&k| (k, inner_diag(&m_pow[i], &power[k], &zmap).mul(&bs[k]).neg()))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let row: Vec<RatFunc> = (0..dim)
                .into_par_iter()
                .map(|j| {
                    if j < i {
                        return RatFunc::zero();
                    }
                    if j == i {
                        return RatFunc::one();
                    }
                    let items: Vec<RatFunc> = coeffs
                        .iter()
                        .filter(|(k, _)| !mono[*k][j].is_zero())
                        .map(|(k, c)| c.mul(&mono[*k][j]))
                        .collect();
                    RatFunc::sum(items.iter())
                })
                .collect();
            let pw: Vec<(Partition, RatFunc)> = (0..dim)
                .into_par_iter()
                .map(|r| {
                    let items: Vec<RatFunc> = (i..dim)
                        .filter(|&j| !row[j].is_zero() && !tb.m2p[j][r].is_zero())
                        .map(|j| row[j].mul(&tb.m2p[j][r]))
                        .collect();
                    (parts[r].clone(), RatFunc::sum(items.iter()))
                })
                .collect();
            power[i] = SymFunc::from_terms(Basis::Power, pw);
            mono[i] = row;
        }
        let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        BasisTable {
            parts,
            index,
            mono,
            power,
        }
    }

    pub fn monomial_form(&self, lam: &Partition) -> SymFunc {
        let i = self.index[lam];
        SymFunc::from_terms(Basis::Monomial, self.parts.iter().cloned().zip(self.mono[i].iter().cloned()))
    }
}

fn lookup(family: Family, lam: &Partition) -> Result<(&'static BasisTable, usize)> {
    let t = basis_table(family, lam.size())?;
    Ok((t, t.index[lam]))
}

/// Macdonald `P_λ` in the monomial basis.
pub fn macdonald_p(lam: &Partition) -> Result<SymFunc> {
    let (t, _) = lookup(Family::Macdonald, lam)?;
    Ok(t.monomial_form(lam))
}

/// `P_λ` of the given family in the power-sum basis.
pub fn family_p(family: Family, lam: &Partition) -> Result<SymFunc> {
    let (t, i) = lookup(family, lam)?;
    Ok(t.power[i].clone())
}

/// `Q_λ = b_λ P_λ` of the given family in the power-sum basis.
pub fn family_q(family: Family, lam: &Partition) -> Result<SymFunc> {
    Ok(family_p(family, lam)?.scale(&family.b(lam)))
}

pub fn macdonald_p_power(lam: &Partition) -> Result<SymFunc> {
    family_p(Family::Macdonald, lam)
}

pub fn macdonald_q(lam: &Partition) -> Result<SymFunc> {
    family_q(Family::Macdonald, lam)
}

/// `J_λ = c_λ P_λ`
pub fn macdonald_j(lam: &Partition) -> Result<SymFunc> {
    Ok(macdonald_p_power(lam)?.scale(&c(lam)))
}

pub fn hall_littlewood_p(lam: &Partition) -> Result<SymFunc> {
    family_p(Family::HallLittlewood, lam)
}

pub fn hall_littlewood_q(lam: &Partition) -> Result<SymFunc> {
    family_q(Family::HallLittlewood, lam)
}

/// Schur `Q_λ = Q_λ(X;-1)` for strict `λ`.
pub fn schur_q(lam: &Partition) -> Result<SymFunc> {
    if !lam.is_strict() {
        return Err(MathError::Invalid(format!("Schur Q needs a strict partition, got {lam}")));
    }
    hall_littlewood_q(lam)?.specialize(Var::T, &RatFunc::from_int(-1))
}

/// Schur `P_λ = 2^{-l(λ)} Q_λ` for strict `λ`.
pub fn schur_p(lam: &Partition) -> Result<SymFunc> {
    if !lam.is_strict() {
        return Err(MathError::Invalid(format!("Schur P needs a strict partition, got {lam}")));
    }
    hall_littlewood_p(lam)?.specialize(Var::T, &RatFunc::from_int(-1))
}

/// `f^λ_{μν} = ⟨Q_λ, P_μ P_ν⟩_{q,t}`
pub fn f_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<RatFunc> {
    if mu.size() + nu.size() != lam.size() {
        return Ok(RatFunc::zero());
    }
    let prod = macdonald_p_power(mu)?.mul(&macdonald_p_power(nu)?)?;
    macdonald_q(lam)?.inner_qt(&prod)
}

type SkewCache = Mutex<HashMap<(Family, Partition, Partition), SymFunc>>;
static SKEW: OnceLock<SkewCache> = OnceLock::new();

/// `Q_{λ/μ} = P_μ^⊥ Q_λ` of the given family, in the power-sum basis.
pub fn family_skew_q(family: Family, lam: &Partition, mu: &Partition) -> Result<SymFunc> {
    if !lam.contains(mu) {
        return Ok(SymFunc::zero(Basis::Power));
    }
    let cache = SKEW.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (family, lam.clone(), mu.clone());
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = SymFunc::perp(&family_p(family, mu)?, &family_q(family, lam)?, family.inner())?;
    cache.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

pub fn skew_q(lam: &Partition, mu: &Partition) -> Result<SymFunc> {
    family_skew_q(Family::Macdonald, lam, mu)
}

/// `P_{λ/μ} = (b_μ/b_λ) Q_{λ/μ}`
pub fn skew_p(lam: &Partition, mu: &Partition) -> Result<SymFunc> {
    Ok(skew_q(lam, mu)?.scale(&b(mu).div(&b(lam))))
}

/// `Σ_ν f^λ_{μν} Q_ν`, the defining expansion of `Q_{λ/μ}`.
pub fn skew_q_by_coefficients(lam: &Partition, mu: &Partition) -> Result<SymFunc> {
    if !lam.contains(mu) {
        return Ok(SymFunc::zero(Basis::Power));
    }
    let k = lam.size() - mu.size();
    let mut items = Vec::new();
    for nu in crate::partitions::partitions(k) {
        let f = f_coeff(lam, mu, &nu)?;
        if !f.is_zero() {
            items.push((f, macdonald_q(&nu)?));
        }
    }
    SymFunc::linear_combination(Basis::Power, items.iter().map(|(f, q)| (f.clone(), q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q_shifted_factorial;
    use crate::partitions::partitions;
    use crate::symfunc::Alphabet;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// `b_λ` from the row-pair product over `1 ≤ i ≤ j ≤ l(λ)`.
    fn b_product(lam: &Partition) -> RatFunc {
        let l = lam.len();
        let mut acc = RatFunc::one();
        for i in 0..l {
            for j in i..l {
                let k = (lam.part(j) - lam.part(j + 1)) as i64;
                let d = (lam.part(i) - lam.part(j)) as i64;
                let s = (j - i) as i64;
                let num = q_shifted_factorial(&RatFunc::monomial([d, s + 1, 0]), k);
                let den = q_shifted_factorial(&RatFunc::monomial([d + 1, s, 0]), k);
                acc = acc.mul(&num).div(&den);
            }
        }
        acc
    }

    #[test]
    fn first_cases() {
        assert_eq!(macdonald_p(&p("1")).unwrap(), SymFunc::m(&p("1")));
        assert_eq!(c(&p("1")), "1-t".parse().unwrap());
        assert_eq!(c_prime(&p("1")), "1-q".parse().unwrap());
    }

    #[test]
    fn orthogonal_up_to_4() {
        for n in 1..=4 {
            let ps = partitions(n);
            for a in &ps {
                for bb in &ps {
                    let v = macdonald_p_power(a).unwrap().inner_qt(&macdonald_q(bb).unwrap()).unwrap();
                    assert_eq!(v.is_one(), a == bb, "{a} {bb}");
                    if a != bb {
                        assert!(v.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn norm_and_product_formula() {
        for n in 1..=5 {
            for lam in partitions(n) {
                assert_eq!(b(&lam), b_product(&lam), "{lam}");
                if n <= 4 {
                    let pp = macdonald_p_power(&lam).unwrap();
                    assert_eq!(pp.inner_qt(&pp).unwrap().inv(), b(&lam));
                }
            }
        }
    }

    #[test]
    fn one_row_is_g() {
        for n in 1..=5 {
            let lam = Partition::from_parts(&[n]);
            let g = SymFunc::g_element(n, &Alphabet::unit()).unwrap();
            assert_eq!(macdonald_q(&lam).unwrap(), g);
            let ratio = q_shifted_factorial(&RatFunc::t(), n as i64).div(&q_shifted_factorial(&RatFunc::q(), n as i64));
            assert_eq!(b(&lam), ratio);
        }
    }

    #[test]
    fn hall_littlewood_orthogonal() {
        for n in 1..=5 {
            let ps = partitions(n);
            for a in &ps {
                for bb in &ps {
                    let v = hall_littlewood_p(a).unwrap().inner_t(&hall_littlewood_q(bb).unwrap()).unwrap();
                    assert_eq!(v, if a == bb { RatFunc::one() } else { RatFunc::zero() });
                }
                let spec = specialize(&macdonald_p_power(a).unwrap(), Specialization::HallLittlewood).unwrap();
                assert_eq!(spec, hall_littlewood_p(a).unwrap());
            }
        }
    }

    #[test]
    fn schur_q_small() {
        // Q_(1) = 2 p_1
        let q1 = schur_q(&p("1")).unwrap();
        assert_eq!(q1, SymFunc::from_terms(Basis::Power, [(p("1"), RatFunc::from_int(2))]));
        assert!(schur_q(&p("1,1")).is_err());
    }

    #[test]
    fn skew_by_perp_matches_coefficients() {
        for (l, m) in [("2,1", "1"), ("3,1", "1"), ("2,2", "1"), ("3,1", "2"), ("2,1,1", "1,1")] {
            assert_eq!(skew_q(&p(l), &p(m)).unwrap(), skew_q_by_coefficients(&p(l), &p(m)).unwrap());
        }
        assert!(skew_q(&p("2"), &p("1,1")).unwrap().is_zero());
    }
}
