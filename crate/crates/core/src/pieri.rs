//! Inversion of the Hall–Littlewood Pieri rule and its Schur and Schur Q
//! specializations.

use serde::Serialize;

use crate::error::{MathError, Result};
use crate::exact::{RatFunc, Var};
use crate::macdonald::{hall_littlewood_q, schur_q};
use crate::mn::hl_q_minus1;
use crate::partitions::{partitions_inside, Partition, SkewShape};
use crate::symfunc::{Alphabet, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    HallLittlewood,
    Schur,
    SchurQ,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::HallLittlewood => "hall-littlewood",
            Variant::Schur => "schur",
            Variant::SchurQ => "schur-q",
        }
    }
}

/// `Q_λ = Σ_{(k, μ)} coeff · q_{λ_1+k} Q_μ`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionExpansion {
    pub lambda: Partition,
    pub variant: Variant,
    pub terms: Vec<(usize, Partition, RatFunc)>,
}

#[derive(Serialize)]
struct TermJson {
    k: usize,
    mu: String,
    coeff: String,
}

#[derive(Serialize)]
struct ExpansionJson {
    lambda: String,
    variant: Variant,
    terms: Vec<TermJson>,
}

impl InversionExpansion {
    pub fn to_json(&self) -> serde_json::Value {
        let j = ExpansionJson {
            lambda: self.lambda.to_string(),
            variant: self.variant,
            terms: self
                .terms
                .iter()
                .map(|(k, mu, c)| TermJson {
                    k: *k,
                    mu: mu.to_string(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("plain strings serialize")
    }

    fn basis(&self, mu: &Partition) -> Result<SymFunc> {
        match self.variant {
            Variant::HallLittlewood => hall_littlewood_q(mu),
            Variant::Schur => Ok(SymFunc::s(mu)),
            Variant::SchurQ => schur_q(mu),
        }
    }

    fn one_row(&self, r: usize) -> Result<SymFunc> {
        let g = SymFunc::g_element(r, &Alphabet::unit())?.specialize(Var::Q, &RatFunc::zero())?;
        match self.variant {
            Variant::HallLittlewood => Ok(g),
            Variant::Schur => g.specialize(Var::T, &RatFunc::zero()),
            Variant::SchurQ => g.specialize(Var::T, &RatFunc::from_int(-1)),
        }
    }

    /// The right side, in the power-sum basis.
    pub fn reconstruct(&self) -> Result<SymFunc> {
        let r1 = self.lambda.part(0);
        let mut items = Vec::with_capacity(self.terms.len());
        for (k, mu, c) in &self.terms {
            items.push((c.clone(), self.one_row(r1 + k)?.mul(&self.basis(mu)?)?));
        }
        SymFunc::linear_combination(Basis::Power, items.iter().map(|(c, f)| (c.clone(), f)))
    }

    pub fn check(&self) -> Result<bool> {
        Ok(self.reconstruct()?.to_power()? == self.basis(&self.lambda)?.to_power()?)
    }
}

fn expansion<F>(lam: &Partition, variant: Variant, coeff: F) -> Result<InversionExpansion>
where
    F: Fn(&Partition, &Partition) -> Result<RatFunc>,
{
    let tail = lam.drop_rows(1);
    let mut terms = Vec::new();
    for k in 0..=tail.size() {
        for mu in partitions_inside(&tail, tail.size() - k) {
            let c = coeff(&tail, &mu)?;
            if !c.is_zero() {
                terms.push((k, mu, c));
            }
        }
    }
    Ok(InversionExpansion {
        lambda: lam.clone(),
        variant,
        terms,
    })
}

/// `Q_λ(X;t) = Σ_k Σ_{μ ⊆ λ^{[1]}} Q_{λ^{[1]}/μ}(-1;t) q_{λ_1+k}(X;t) Q_μ(X;t)`
pub fn hl_inverse_pieri(lam: &Partition) -> Result<InversionExpansion> {
    expansion(lam, Variant::HallLittlewood, |tail, mu| Ok(hl_q_minus1(tail, mu)))
}

/// `s_λ = Σ_μ (-1)^{|λ^{[1]}/μ|} h_{|λ|-|μ|} s_μ` over vertical strips `λ^{[1]}/μ`.
pub fn schur_inverse(lam: &Partition) -> Result<InversionExpansion> {
    expansion(lam, Variant::Schur, |tail, mu| {
        let shape = SkewShape::new(tail.clone(), mu.clone())?;
        if !shape.is_vertical_strip() {
            return Ok(RatFunc::zero());
        }
        let s = if shape.size() % 2 == 0 { 1 } else { -1 };
        Ok(RatFunc::from_int(s))
    })
}

/// Schur Q inversion for strict `λ`, with coefficients `Q_{λ^{[1]}/μ}(-1;t)` at `t = -1`.
pub fn schur_q_inverse(lam: &Partition) -> Result<InversionExpansion> {
    if !lam.is_strict() {
        return Err(MathError::Invalid(format!("Schur Q inversion needs a strict partition, got {lam}")));
    }
    expansion(lam, Variant::SchurQ, |tail, mu| {
        if !mu.is_strict() {
            return Ok(RatFunc::zero());
        }
        hl_q_minus1(tail, mu).substitute_with(Var::T, &RatFunc::from_int(-1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{components, partitions, strict_partitions, ShiftedSkewShape};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_row_is_trivial() {
        let e = hl_inverse_pieri(&p("4")).unwrap();
        assert_eq!(e.terms, vec![(0, Partition::empty(), RatFunc::one())]);
        assert!(e.check().unwrap());
    }

    #[test]
    fn reconstruction_small() {
        for n in 1..=5 {
            for lam in partitions(n) {
                assert!(hl_inverse_pieri(&lam).unwrap().check().unwrap(), "{lam}");
                assert!(schur_inverse(&lam).unwrap().check().unwrap(), "{lam}");
            }
            for lam in strict_partitions(n) {
                assert!(schur_q_inverse(&lam).unwrap().check().unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn schur_case_is_t_zero() {
        for n in 1..=6 {
            for lam in partitions(n) {
                let hl = hl_inverse_pieri(&lam).unwrap();
                let at0: Vec<_> = hl
                    .terms
                    .iter()
                    .map(|(k, mu, c)| (*k, mu.clone(), c.substitute_with(Var::T, &RatFunc::zero()).unwrap()))
                    .filter(|(_, _, c)| !c.is_zero())
                    .collect();
                assert_eq!(at0, schur_inverse(&lam).unwrap().terms, "{lam}");
            }
        }
    }

    #[test]
    fn schur_q_coefficients_are_signed_powers_of_two() {
        for n in 1..=7 {
            for lam in strict_partitions(n) {
                for (_, mu, c) in schur_q_inverse(&lam).unwrap().terms {
                    let tail = lam.drop_rows(1);
                    let shape = ShiftedSkewShape::new(tail.clone(), mu.clone()).unwrap();
                    let comps = components(&shape.cells()).len();
                    let sign = if shape.size() % 2 == 0 { 1 } else { -1 };
                    assert_eq!(c, RatFunc::from_int(sign * (1 << comps)), "{tail}/{mu}");
                }
            }
        }
    }

    #[test]
    fn schur_q_rejects_non_strict() {
        assert!(schur_q_inverse(&p("2,2")).is_err());
    }

    #[test]
    fn json_shape() {
        let j = hl_inverse_pieri(&p("1,1")).unwrap().to_json();
        assert_eq!(j["lambda"], "1,1");
        assert_eq!(j["variant"], "hall-littlewood");
        assert_eq!(j["terms"].as_array().unwrap().len(), 2);
    }
}
