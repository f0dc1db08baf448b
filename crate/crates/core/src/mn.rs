//! Murnaghan–Nakayama expansions for Macdonald functions and their
//! Hall–Littlewood, Schur and Schur Q specializations.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{MathError, Result};
use crate::exact::{gaussian_binomial, MPoly, RatFunc, Var};
use crate::macdonald::{
    b, f_coeff, macdonald_p_power, macdonald_q, psi_prime_t, sk_t, skew_eval_a_minus_1, skew_q, vertical_removals,
};
use crate::partitions::{partitions, partitions_containing, partitions_inside, Partition, ShiftedSkewShape, SkewShape};
use crate::symfunc::{Alphabet, Basis, Inner, SymFunc};

pub use crate::symfunc::classical_character;

/// `Σ_λ coeff_λ · B_λ` produced by one step of an MN rule applied to `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MnExpansion {
    pub mu: Partition,
    pub k: usize,
    pub alphabet: String,
    pub terms: Vec<(Partition, RatFunc)>,
}

#[derive(Serialize)]
struct TermJson {
    lambda: String,
    coeff: String,
}

#[derive(Serialize)]
struct ExpansionJson {
    mu: String,
    k: usize,
    alphabet: String,
    terms: Vec<TermJson>,
}

impl MnExpansion {
    pub fn to_json(&self) -> serde_json::Value {
        let j = ExpansionJson {
            mu: self.mu.to_string(),
            k: self.k,
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .map(|(l, c)| TermJson {
                    lambda: l.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("plain strings serialize")
    }

    pub fn coeff(&self, lam: &Partition) -> RatFunc {
        self.terms
            .iter()
            .find(|(l, _)| l == lam)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    }

    /// `Σ coeff_λ · basis(λ)` in the power-sum basis.
    pub fn assemble<F>(&self, basis: F) -> Result<SymFunc>
    where
        F: Fn(&Partition) -> Result<SymFunc>,
    {
        let parts: Vec<(RatFunc, SymFunc)> = self
            .terms
            .iter()
            .map(|(l, c)| Ok((c.clone(), basis(l)?)))
            .collect::<Result<_>>()?;
        SymFunc::linear_combination(Basis::Power, parts.iter().map(|(c, f)| (c.clone(), f)))
    }
}

fn collect_terms<F>(candidates: Vec<Partition>, f: F) -> Result<Vec<(Partition, RatFunc)>>
where
    F: Fn(&Partition) -> Result<RatFunc> + Sync,
{
    let vals: Vec<Result<(Partition, RatFunc)>> = candidates.into_par_iter().map(|l| Ok((l.clone(), f(&l)?))).collect();
    let mut out = Vec::new();
    for v in vals {
        let (l, c) = v?;
        if !c.is_zero() {
            out.push((l, c));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

/// `g_k((a-b)X) P_μ = Σ_λ Q_{λ/μ}(a-b) P_λ`, coefficients by λ-ring evaluation.
pub fn mn_expand(mu: &Partition, k: usize, alphabet: &Alphabet) -> Result<MnExpansion> {
    let terms = collect_terms(partitions_containing(mu, mu.size() + k), |l| skew_q(l, mu)?.eval(alphabet))?;
    Ok(MnExpansion {
        mu: mu.clone(),
        k,
        alphabet: alphabet.name().to_string(),
        terms,
    })
}

/// `g_k((a-b)X) Q_{μ/ρ} = Σ_λ (Σ_τ f^μ_{τρ} P_{λ/τ}(a-b)) Q_λ`.
pub fn mn_skew_expand(mu: &Partition, rho: &Partition, k: usize, alphabet: &Alphabet) -> Result<MnExpansion> {
    if !mu.contains(rho) {
        return Err(MathError::Invalid(format!("{rho} is not contained in {mu}")));
    }
    let m = mu.size() - rho.size();
    let mut fs = Vec::new();
    for tau in partitions(m) {
        let f = f_coeff(mu, &tau, rho)?;
        if !f.is_zero() {
            fs.push((tau, f));
        }
    }
    let terms = collect_terms(partitions(m + k), |l| {
        let mut items = Vec::new();
        for (tau, f) in &fs {
            if l.contains(tau) {
                let pv = skew_q(l, tau)?.eval(alphabet)?.mul(&b(tau)).div(&b(l));
                items.push(f.mul(&pv));
            }
        }
        Ok(RatFunc::sum(items.iter()))
    })?;
    Ok(MnExpansion {
        mu: mu.clone(),
        k,
        alphabet: alphabet.name().to_string(),
        terms,
    })
}

/// `g_k^⊥((a-b)X) Q_λ = Σ_μ Q_{λ/μ}(a-b) Q_μ`. The `mu` field holds `λ`.
pub fn mn_dual(lam: &Partition, k: usize, alphabet: &Alphabet) -> Result<MnExpansion> {
    if k > lam.size() {
        return Err(MathError::Invalid(format!("cannot remove {k} cells from {lam}")));
    }
    let terms = collect_terms(partitions_inside(lam, lam.size() - k), |m| skew_q(lam, m)?.eval(alphabet))?;
    Ok(MnExpansion {
        mu: lam.clone(),
        k,
        alphabet: alphabet.name().to_string(),
        terms,
    })
}

fn divide_a_minus_1(x: &RatFunc, k: usize) -> Result<RatFunc> {
    if k == 0 {
        return Ok(x.div(&RatFunc::a().sub(&RatFunc::one())));
    }
    x.exact_divide_a_minus_1()
}

/// `g̃_k((a-1)X) = g_k((a-1)X)/(a-1)`; a polynomial in `a` for `k ≥ 1`.
pub fn g_tilde(k: usize) -> Result<SymFunc> {
    SymFunc::g_element(k, &Alphabet::a_minus_one())?.map_coeffs(|c| divide_a_minus_1(c, k))
}

/// `g̃_k((a-1)X) P_μ = Σ_λ Q_{λ/μ}(a-1)/(a-1) P_λ`, coefficients from the
/// closed form.
pub fn mn_tilde(mu: &Partition, k: usize) -> Result<MnExpansion> {
    let terms = collect_terms(partitions_containing(mu, mu.size() + k), |l| {
        divide_a_minus_1(&skew_eval_a_minus_1(l, mu), k)
    })?;
    Ok(MnExpansion {
        mu: mu.clone(),
        k,
        alphabet: "a-1".to_string(),
        terms,
    })
}

/// Checks `g_k(A) P_μ = Σ coeff P_λ` exactly.
pub fn check_mn_identity(exp: &MnExpansion, alphabet: &Alphabet) -> Result<bool> {
    let lhs = SymFunc::g_element(exp.k, alphabet)?.mul(&macdonald_p_power(&exp.mu)?)?;
    Ok(lhs == exp.assemble(macdonald_p_power)?)
}

/// Checks `g̃_k P_μ = Σ coeff P_λ` exactly.
pub fn check_tilde_identity(exp: &MnExpansion) -> Result<bool> {
    let lhs = g_tilde(exp.k)?.mul(&macdonald_p_power(&exp.mu)?)?;
    Ok(lhs == exp.assemble(macdonald_p_power)?)
}

/// Checks `g_k(A) Q_{μ/ρ} = Σ coeff Q_λ` exactly.
pub fn check_skew_identity(exp: &MnExpansion, rho: &Partition, alphabet: &Alphabet) -> Result<bool> {
    let lhs = SymFunc::g_element(exp.k, alphabet)?.mul(&skew_q(&exp.mu, rho)?)?;
    Ok(lhs == exp.assemble(macdonald_q)?)
}

/// Checks `g_k^⊥(A) Q_λ = Σ coeff Q_μ` exactly.
pub fn check_dual_identity(exp: &MnExpansion, alphabet: &Alphabet) -> Result<bool> {
    let g = SymFunc::g_element(exp.k, alphabet)?;
    let lhs = SymFunc::perp(&g, &macdonald_q(&exp.mu)?, Inner::Qt)?;
    Ok(lhs == exp.assemble(macdonald_q)?)
}

/// Hecke algebra MN rule: `h̃_r(q) s_μ = Σ wt(λ/μ; q) s_λ` over generalized
/// border strips `λ/μ` of size `r`.
pub fn hecke_mn(mu: &Partition, r: usize) -> Result<Vec<(Partition, RatFunc)>> {
    let q = RatFunc::q();
    let mut out = Vec::new();
    for lam in partitions_containing(mu, mu.size() + r) {
        let shape = SkewShape::new(lam.clone(), mu.clone())?;
        if shape.classify().generalized_border {
            out.push((lam, shape.gbs_weight(&q)?));
        }
    }
    Ok(out)
}

/// Hecke–Clifford MN rule: coefficients `(q-1)^{-1} w̃t(λ/μ; q)` over strict
/// `λ` with `λ/μ` a generalized double strip of size `r`.
pub fn hecke_clifford_mn(mu: &Partition, r: usize) -> Result<Vec<(Partition, RatFunc)>> {
    if !mu.is_strict() {
        return Err(MathError::Invalid(format!("{mu} is not strict")));
    }
    let q = RatFunc::q();
    let qm1 = q.sub(&RatFunc::one());
    let mut out = Vec::new();
    for lam in partitions_containing(mu, mu.size() + r) {
        if !lam.is_strict() {
            continue;
        }
        let shape = ShiftedSkewShape::new(lam.clone(), mu.clone())?;
        if shape.double_strip_decompose().is_gds {
            out.push((lam, shape.gds_weight(&q)?.div(&qm1)));
        }
    }
    Ok(out)
}

/// `Q_{λ/μ}(-1; t)` by the factorized column product
/// `t^{|λ/μ|} ∏_j Σ_{k=0}^{a_j} (-t)^{-k} t^{C(λ'_j-μ'_j-k, 2)} [m_j(λ); k]_t [λ'_j-μ'_{j+1}-k; m_j(μ)]_t`.
pub fn hl_q_minus1(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) {
        return RatFunc::zero();
    }
    let shape = SkewShape::new(lam.clone(), mu.clone()).expect("containment checked");
    let bounds: std::collections::HashMap<usize, usize> = shape.column_removal_bounds().into_iter().collect();
    let t = RatFunc::t();
    let mut acc = t.pow(shape.size() as i64);
    for j in 1..=lam.width() {
        let lj = lam.conj_part(j - 1) as i64;
        let mj = mu.conj_part(j - 1) as i64;
        let mu_next = mu.conj_part(j) as i64;
        let a_j = bounds.get(&j).copied().unwrap_or(0) as i64;
        let mut terms = Vec::new();
        for k in 0..=a_j {
            let d = lj - mj - k;
            let x = t
                .neg()
                .pow(-k)
                .mul(&t.pow(d * (d - 1) / 2))
                .mul(&gaussian_binomial(Var::T, lam.multiplicity(j) as i64, k))
                .mul(&gaussian_binomial(Var::T, lj - mu_next - k, mu.multiplicity(j) as i64));
            terms.push(x);
        }
        acc = acc.mul(&RatFunc::sum(terms.iter()));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `Q_{λ/μ}(-1; t) = t^{|λ/μ|} Σ_ν (-t)^{-|λ/ν|} ψ'_{λ/ν}(t) sk_{ν/μ}(t)`.
pub fn hl_q_minus1_sum(lam: &Partition, mu: &Partition) -> RatFunc {
    if !lam.contains(mu) {
        return RatFunc::zero();
    }
    let t = RatFunc::t();
    let items: Vec<RatFunc> = vertical_removals(lam, mu)
        .iter()
        .map(|nu| {
            t.neg()
                .pow(nu.size() as i64 - lam.size() as i64)
                .mul(&psi_prime_t(lam, nu))
                .mul(&sk_t(nu, mu))
        })
        .collect();
    t.pow((lam.size() - mu.size()) as i64).mul(&RatFunc::sum(items.iter()))
}

/// Applies `q → 0`, `t → 0`, `a → q` to an `mn_tilde` coefficient.
pub fn hecke_specialize(x: &RatFunc) -> Result<RatFunc> {
    let zero = MPoly::zero();
    let y = x.substitute(Var::Q, &zero)?.substitute(Var::T, &zero)?;
    Ok(y.swap_vars(Var::A, Var::Q))
}

/// Applies `q → 0`, `t → -1`, `a → q` to an `mn_tilde` coefficient.
pub fn hecke_clifford_specialize(x: &RatFunc) -> Result<RatFunc> {
    let y = x
        .substitute(Var::Q, &MPoly::zero())?
        .substitute(Var::T, &MPoly::constant((-1).into()))?;
    Ok(y.swap_vars(Var::A, Var::Q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::{family_skew_q, schur_p, Family};
    use crate::partitions::strict_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_step_and_zero_alphabet() {
        let mu = p("2,1");
        let e = mn_expand(&mu, 0, &Alphabet::a_minus_one()).unwrap();
        assert_eq!(e.terms, vec![(mu.clone(), RatFunc::one())]);
        let z = Alphabet::difference(RatFunc::a(), RatFunc::a());
        assert!(mn_expand(&mu, 2, &z).unwrap().terms.is_empty());
    }

    #[test]
    fn expansion_identities_small() {
        let al = Alphabet::a_minus_one();
        for n in 0..=3 {
            for mu in partitions(n) {
                for k in 0..=2 {
                    let e = mn_expand(&mu, k, &al).unwrap();
                    assert!(check_mn_identity(&e, &al).unwrap(), "{mu} k={k}");
                    let d = mn_dual(&p_plus(&mu, k), k, &al).unwrap();
                    assert!(check_dual_identity(&d, &al).unwrap(), "dual {mu} k={k}");
                    let t = mn_tilde(&mu, k).unwrap();
                    assert!(check_tilde_identity(&t).unwrap(), "tilde {mu} k={k}");
                }
            }
        }
    }

    fn p_plus(mu: &Partition, k: usize) -> Partition {
        let mut v = mu.parts().to_vec();
        if v.is_empty() {
            v.push(k);
        } else {
            v[0] += k;
        }
        Partition::from_parts(&v)
    }

    #[test]
    fn skew_expansion_identity() {
        let al = Alphabet::a_minus_one();
        let (mu, rho) = (p("2,1"), p("1"));
        let e = mn_skew_expand(&mu, &rho, 1, &al).unwrap();
        assert!(check_skew_identity(&e, &rho, &al).unwrap());
        assert!(mn_skew_expand(&rho, &mu, 1, &al).is_err());
    }

    #[test]
    fn hecke_weights_match_skew_schur() {
        for n in 0..=4 {
            for mu in partitions(n) {
                for r in 1..=3 {
                    let got = hecke_mn(&mu, r).unwrap();
                    for lam in partitions_containing(&mu, n + r) {
                        let s = SymFunc::skew_schur(&lam, &mu).unwrap();
                        let v = s.eval(&Alphabet::a_minus_one()).unwrap();
                        let want = v.exact_divide_a_minus_1().unwrap().swap_vars(Var::A, Var::Q);
                        let have = got.iter().find(|(l, _)| *l == lam).map(|x| x.1.clone()).unwrap_or_else(RatFunc::zero);
                        assert_eq!(have, want, "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_figure_example() {
        let got = hecke_mn(&p("3,2,1"), 5).unwrap();
        let w = got.iter().find(|(l, _)| *l == p("4,3,3,1")).unwrap().1.clone();
        assert_eq!(w, "-(q-1)^2*q".parse().unwrap());
    }

    #[test]
    fn hecke_from_generic_rule() {
        for n in 0..=3 {
            for mu in partitions(n) {
                for r in 1..=2 {
                    let gen = mn_tilde(&mu, r).unwrap();
                    let hk = hecke_mn(&mu, r).unwrap();
                    for lam in partitions_containing(&mu, n + r) {
                        let a = hecke_specialize(&gen.coeff(&lam)).unwrap();
                        let b = hk.iter().find(|(l, _)| *l == lam).map(|x| x.1.clone()).unwrap_or_else(RatFunc::zero);
                        assert_eq!(a, b, "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_clifford_matches_schur_q_oracle() {
        // Q_{λ/μ}(t,-1) from Schur Q functions at the letters t and -1
        let letters = Alphabet::letters(vec![RatFunc::t(), RatFunc::from_int(-1)]);
        for n in 0..=4 {
            for mu in strict_partitions(n) {
                for r in 1..=3 {
                    let got = hecke_clifford_mn(&mu, r).unwrap();
                    for lam in partitions_containing(&mu, n + r) {
                        if !lam.is_strict() {
                            continue;
                        }
                        let sq = family_skew_q(Family::HallLittlewood, &lam, &mu)
                            .unwrap()
                            .specialize(Var::T, &RatFunc::from_int(-1))
                            .unwrap();
                        let v = sq.eval(&letters).unwrap().swap_vars(Var::T, Var::Q);
                        let want = v.div(&RatFunc::q().sub(&RatFunc::one()));
                        let have = got.iter().find(|(l, _)| *l == lam).map(|x| x.1.clone()).unwrap_or_else(RatFunc::zero);
                        assert_eq!(have, want, "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn hecke_clifford_rule_in_schur_p_basis() {
        for n in 0..=3 {
            for mu in strict_partitions(n) {
                for r in 1..=3 {
                    let lhs = g_tilde(r)
                        .unwrap()
                        .specialize(Var::Q, &RatFunc::zero())
                        .unwrap()
                        .specialize(Var::T, &RatFunc::from_int(-1))
                        .unwrap()
                        .map_coeffs(|c| Ok(c.swap_vars(Var::A, Var::Q)))
                        .unwrap()
                        .mul(&schur_p(&mu).unwrap())
                        .unwrap();
                    let terms = hecke_clifford_mn(&mu, r).unwrap();
                    let items: Vec<(RatFunc, SymFunc)> =
                        terms.iter().map(|(l, c)| (c.clone(), schur_p(l).unwrap())).collect();
                    let rhs = SymFunc::linear_combination(Basis::Power, items.iter().map(|(c, f)| (c.clone(), f))).unwrap();
                    assert_eq!(lhs, rhs, "{mu} r={r}");
                }
            }
        }
    }

    #[test]
    fn q_minus_one_forms_agree() {
        for n in 0..=5 {
            for lam in partitions(n) {
                for k in 0..=n {
                    for mu in partitions_inside(&lam, k) {
                        assert_eq!(hl_q_minus1(&lam, &mu), hl_q_minus1_sum(&lam, &mu), "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn q_minus_one_is_hall_littlewood_evaluation() {
        for n in 0..=4 {
            for lam in partitions(n) {
                for k in 0..=n {
                    for mu in partitions_inside(&lam, k) {
                        let v = family_skew_q(Family::HallLittlewood, &lam, &mu)
                            .unwrap()
                            .eval(&Alphabet::minus_one())
                            .unwrap();
                        assert_eq!(hl_q_minus1(&lam, &mu), v, "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn characters() {
        assert_eq!(classical_character(&p("2,1"), &p("1,1,1")), 2.into());
        for rho in partitions(4) {
            assert_eq!(classical_character(&p("4"), &rho), 1.into());
            assert_eq!(classical_character(&p("1,1,1,1"), &rho), rho.sign().into());
        }
    }
}
