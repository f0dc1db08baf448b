//! Symmetric functions over `Q(q,t,a)` with power sums as the working basis.

mod alphabet;
mod tables;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use alphabet::Alphabet;
pub use tables::{
    check_degree, classical_character, remove_rim_hooks, set_truncation, tables, truncation, DegreeTables,
    DEFAULT_DEGREE, MAX_DEGREE,
};

use crate::error::{MathError, Result};
use crate::exact::{Int, RatFunc, Var};
use crate::partitions::{partitions, Partition};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Power,
    Monomial,
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Basis::Power => "p",
            Basis::Monomial => "m",
            Basis::Schur => "s",
        }
    }
}

/// Which scalar product: Macdonald's `⟨,⟩_{q,t}`, Hall–Littlewood's `⟨,⟩_t`
/// or the classical Hall product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Inner {
    Qt,
    T,
    Hall,
}

/// `z_λ ∏ (1 - q^{λ_i})/(1 - t^{λ_i})`
pub fn z_qt(rho: &Partition) -> RatFunc {
    let mut acc = RatFunc::from_int(rho.z());
    for &r in rho.parts() {
        let r = r as i64;
        acc = acc.mul(&RatFunc::q().pow(r).one_minus().div(&RatFunc::t().pow(r).one_minus()));
    }
    acc
}

/// `z_λ ∏ 1/(1 - t^{λ_i})`
pub fn z_t(rho: &Partition) -> RatFunc {
    let mut acc = RatFunc::from_int(rho.z());
    for &r in rho.parts() {
        acc = acc.div(&RatFunc::t().pow(r as i64).one_minus());
    }
    acc
}

impl Inner {
    /// `⟨p_ρ, p_ρ⟩` under this product.
    pub fn z(self, rho: &Partition) -> RatFunc {
        z_inner(rho, self)
    }
}

fn z_inner(rho: &Partition, which: Inner) -> RatFunc {
    match which {
        Inner::Qt => z_qt(rho),
        Inner::T => z_t(rho),
        Inner::Hall => RatFunc::from_int(rho.z()),
    }
}

/// Sparse expansion in one of the classical bases; several degrees may mix.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, RatFunc>,
}

fn concat(a: &Partition, b: &Partition) -> Partition {
    let mut v = a.parts().to_vec();
    v.extend_from_slice(b.parts());
    Partition::from_unsorted(v)
}

impl SymFunc {
    pub fn zero(basis: Basis) -> SymFunc {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> SymFunc {
        SymFunc::basis_element(Basis::Power, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lam: Partition) -> SymFunc {
        SymFunc::from_terms(basis, [(lam, RatFunc::one())])
    }

    pub fn p(lam: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Power, lam.clone())
    }

    pub fn m(lam: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Monomial, lam.clone())
    }

    pub fn s(lam: &Partition) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, lam.clone())
    }

    /// Collects terms, adding repeated partitions and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(basis: Basis, terms: I) -> SymFunc {
        let mut map: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        for (p, c) in terms {
            match map.get_mut(&p) {
                Some(v) => *v = v.add(&c),
                None => {
                    map.insert(p, c);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        SymFunc { basis, terms: map }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> RatFunc {
        self.terms.get(lam).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree present; zero for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|p| p.size()).max().unwrap_or(0)
    }

    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect(),
        }
    }

    pub fn neg(&self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, x)| (p.clone(), x.mul(c))).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping new zeros.
    pub fn map_coeffs<F: Fn(&RatFunc) -> Result<RatFunc>>(&self, f: F) -> Result<SymFunc> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (p, c) in &self.terms {
            terms.push((p.clone(), f(c)?));
        }
        Ok(SymFunc::from_terms(self.basis, terms))
    }

    /// Substitutes `value` for `v` in every coefficient.
    pub fn specialize(&self, v: Var, value: &RatFunc) -> Result<SymFunc> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (p, c) in &self.terms {
            let x = c.substitute_with(v, value).map_err(|e| match e {
                MathError::Pole { point, .. } => MathError::Pole {
                    point,
                    what: format!("coefficient of {}[{p}]", self.basis.letter()),
                },
                other => other,
            })?;
            terms.push((p.clone(), x));
        }
        Ok(SymFunc::from_terms(self.basis, terms))
    }

    /// Sum of two functions in `self`'s basis.
    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = other.convert(self.basis)?;
        let mut terms = self.terms.clone();
        for (p, c) in other.terms {
            match terms.get_mut(&p) {
                Some(v) => *v = v.add(&c),
                None => {
                    terms.insert(p, c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(SymFunc { basis: self.basis, terms })
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.neg())
    }

    /// `Σ c_i f_i` in `basis`, each coefficient summed once.
    pub fn linear_combination<'a, I>(basis: Basis, items: I) -> Result<SymFunc>
    where
        I: IntoIterator<Item = (RatFunc, &'a SymFunc)>,
    {
        let mut acc: BTreeMap<Partition, Vec<RatFunc>> = BTreeMap::new();
        for (c, f) in items {
            if c.is_zero() {
                continue;
            }
            let f = f.convert(basis)?;
            for (p, x) in f.terms {
                acc.entry(p).or_default().push(x.mul(&c));
            }
        }
        Ok(SymFunc::from_terms(
            basis,
            acc.into_iter().map(|(p, v)| (p, RatFunc::sum(v.iter()))),
        ))
    }

    fn check(&self) -> Result<()> {
        check_degree(self.degree())
    }

    /// Expresses `self` in `target`.
    pub fn convert(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        self.check()?;
        if self.basis != Basis::Power && target != Basis::Power {
            return self.convert(Basis::Power)?.convert(target);
        }
        let mut by_degree: BTreeMap<usize, Vec<(&Partition, &RatFunc)>> = BTreeMap::new();
        for (p, c) in &self.terms {
            by_degree.entry(p.size()).or_default().push((p, c));
        }
        let mut out: Vec<(Partition, RatFunc)> = Vec::new();
        for (n, items) in by_degree {
            let tb = tables(n)?;
            let dim = tb.parts.len();
            let mut acc: Vec<Vec<RatFunc>> = vec![Vec::new(); dim];
            for (p, c) in items {
                let i = tb.index[p];
                for j in 0..dim {
                    let f = match (self.basis, target) {
                        (Basis::Monomial, Basis::Power) => tb.m2p[i][j].clone(),
                        (Basis::Schur, Basis::Power) => {
                            if tb.chars[i][j].is_zero() {
                                continue;
                            }
                            RatFunc::ratio(tb.chars[i][j].clone(), tb.z[j].clone())
                        }
                        (Basis::Power, Basis::Monomial) => RatFunc::from_int(tb.p2m[i][j].clone()),
                        (Basis::Power, Basis::Schur) => RatFunc::from_int(tb.chars[j][i].clone()),
                        _ => unreachable!(),
                    };
                    if !f.is_zero() {
                        acc[j].push(c.mul(&f));
                    }
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                if !v.is_empty() {
                    out.push((tb.parts[j].clone(), RatFunc::sum(v.iter())));
                }
            }
        }
        Ok(SymFunc::from_terms(target, out))
    }

    pub fn to_power(&self) -> Result<SymFunc> {
        self.convert(Basis::Power)
    }

    /// Product, returned in the power-sum basis.
    pub fn mul(&self, other: &SymFunc) -> Result<SymFunc> {
        check_degree(self.degree() + other.degree())?;
        let a = self.to_power()?;
        let b = other.to_power()?;
        let mut acc: BTreeMap<Partition, Vec<RatFunc>> = BTreeMap::new();
        for (p, x) in &a.terms {
            for (r, y) in &b.terms {
                acc.entry(concat(p, r)).or_default().push(x.mul(y));
            }
        }
        Ok(SymFunc::from_terms(
            Basis::Power,
            acc.into_iter().map(|(p, v)| (p, RatFunc::sum(v.iter()))),
        ))
    }

    pub fn inner(&self, other: &SymFunc, which: Inner) -> Result<RatFunc> {
        let a = self.to_power()?;
        let b = other.to_power()?;
        let mut v = Vec::new();
        for (p, x) in &a.terms {
            if let Some(y) = b.terms.get(p) {
                v.push(x.mul(y).mul(&z_inner(p, which)));
            }
        }
        Ok(RatFunc::sum(v.iter()))
    }

    pub fn inner_qt(&self, other: &SymFunc) -> Result<RatFunc> {
        self.inner(other, Inner::Qt)
    }

    pub fn inner_t(&self, other: &SymFunc) -> Result<RatFunc> {
        self.inner(other, Inner::T)
    }

    /// Evaluation at an alphabet: `p_n ↦ p_n(A)`.
    pub fn eval(&self, alphabet: &Alphabet) -> Result<RatFunc> {
        let f = self.to_power()?;
        let mut cache: HashMap<usize, RatFunc> = HashMap::new();
        let mut v = Vec::with_capacity(f.terms.len());
        for (p, c) in &f.terms {
            let mut x = c.clone();
            for &r in p.parts() {
                let pv = cache.entry(r).or_insert_with(|| alphabet.value(r));
                x = x.mul(pv);
                if x.is_zero() {
                    break;
                }
            }
            v.push(x);
        }
        Ok(RatFunc::sum(v.iter()))
    }

    /// `f[XA]`: `p_n ↦ p_n(A) p_n`.
    pub fn plethysm_scale(&self, alphabet: &Alphabet) -> Result<SymFunc> {
        let f = self.to_power()?;
        let mut cache: HashMap<usize, RatFunc> = HashMap::new();
        let mut terms = Vec::with_capacity(f.terms.len());
        for (p, c) in &f.terms {
            let mut x = c.clone();
            for &r in p.parts() {
                x = x.mul(cache.entry(r).or_insert_with(|| alphabet.value(r)));
            }
            terms.push((p.clone(), x));
        }
        Ok(SymFunc::from_terms(Basis::Power, terms))
    }

    /// `f[X/(1 - v)]`: `p_n ↦ p_n/(1 - v^n)`.
    pub fn plethysm_geometric(&self, v: Var) -> Result<SymFunc> {
        self.plethysm_scale(&Alphabet::geometric(v))
    }

    /// `f^⊥ g`, the adjoint of multiplication by `f`.
    pub fn perp(f: &SymFunc, g: &SymFunc, which: Inner) -> Result<SymFunc> {
        let f = f.to_power()?;
        let g = g.to_power()?;
        let eps = |n: usize| {
            let n_int = RatFunc::from_int(n);
            match which {
                Inner::Qt => RatFunc::q()
                    .pow(n as i64)
                    .one_minus()
                    .mul(&n_int)
                    .div(&RatFunc::t().pow(n as i64).one_minus()),
                Inner::T => n_int.div(&RatFunc::t().pow(n as i64).one_minus()),
                Inner::Hall => n_int,
            }
        };
        let mut acc: BTreeMap<Partition, Vec<RatFunc>> = BTreeMap::new();
        for (rho, x) in &f.terms {
            for (sigma, y) in &g.terms {
                let Some((rest, mult)) = remove_parts(sigma, rho) else {
                    continue;
                };
                let mut c = x.mul(y).scale_int(&mult);
                for &r in rho.parts() {
                    c = c.mul(&eps(r));
                }
                acc.entry(rest).or_default().push(c);
            }
        }
        Ok(SymFunc::from_terms(
            Basis::Power,
            acc.into_iter().map(|(p, v)| (p, RatFunc::sum(v.iter()))),
        ))
    }

    /// Degree-`k` component of `exp(Σ_n (1/n) (1-t^n)/(1-q^n) p_n(A) p_n)`.
    pub fn g_element(k: usize, alphabet: &Alphabet) -> Result<SymFunc> {
        check_degree(k)?;
        let vals: Vec<RatFunc> = (0..=k)
            .map(|n| {
                if n == 0 {
                    return RatFunc::one();
                }
                let n64 = n as i64;
                RatFunc::t()
                    .pow(n64)
                    .one_minus()
                    .div(&RatFunc::q().pow(n64).one_minus())
                    .mul(&alphabet.value(n))
            })
            .collect();
        let mut terms = Vec::new();
        for rho in partitions(k) {
            let mut c = RatFunc::from_int(rho.z()).inv();
            for &r in rho.parts() {
                c = c.mul(&vals[r]);
            }
            terms.push((rho, c));
        }
        Ok(SymFunc::from_terms(Basis::Power, terms))
    }

    /// Skew Schur function `s_{λ/μ} = s_μ^⊥ s_λ`, zero unless `μ ⊆ λ`.
    pub fn skew_schur(lam: &Partition, mu: &Partition) -> Result<SymFunc> {
        if !lam.contains(mu) {
            return Ok(SymFunc::zero(Basis::Power));
        }
        SymFunc::perp(&SymFunc::s(mu), &SymFunc::s(lam), Inner::Hall)
    }

    /// Iterates terms in decreasing lexicographic order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.terms.iter().rev()
    }
}

/// Removes the parts of `rho` from `sigma` as multisets, with the count
/// `∏_n m_n(σ)!/(m_n(σ) - m_n(ρ))!` of ways to do so.
fn remove_parts(sigma: &Partition, rho: &Partition) -> Option<(Partition, Int)> {
    let mut rest = sigma.parts().to_vec();
    let mut mult = Int::ONE;
    for &r in rho.parts() {
        let avail = rest.iter().filter(|&&x| x == r).count();
        if avail == 0 {
            return None;
        }
        mult = &mult * &Int::from(avail);
        let pos = rest.iter().position(|&x| x == r).unwrap();
        rest.remove(pos);
    }
    Some((Partition::from_parts(&rest), mult))
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.iter_desc() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*{}[{p}]", self.basis.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: RatFunc,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFuncJson {
            basis: self.basis,
            terms: self
                .iter_desc()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = SymFuncJson::deserialize(d)?;
        Ok(SymFunc::from_terms(j.basis, j.terms.into_iter().map(|t| (t.partition, t.coeff))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn conversions() {
        let m = SymFunc::p(&p("1")).convert(Basis::Monomial).unwrap();
        assert_eq!(m, SymFunc::m(&p("1")));
        let m = SymFunc::p(&p("2")).convert(Basis::Monomial).unwrap();
        assert_eq!(m, SymFunc::m(&p("2")));
        let s11 = SymFunc::s(&p("1,1")).to_power().unwrap();
        let want = SymFunc::from_terms(
            Basis::Power,
            [(p("1,1"), RatFunc::ratio(1, 2)), (p("2"), RatFunc::ratio(-1, 2))],
        );
        assert_eq!(s11, want);
    }

    #[test]
    fn inner_products() {
        let a = SymFunc::p(&p("1"));
        assert_eq!(a.inner_qt(&a).unwrap(), r("(1-q)/(1-t)"));
        let b = SymFunc::p(&p("2,1"));
        assert_eq!(b.inner_qt(&b).unwrap(), r("2*(1-q^2)*(1-q)/((1-t^2)*(1-t))"));
        assert!(SymFunc::p(&p("2")).inner_qt(&SymFunc::p(&p("1,1"))).unwrap().is_zero());
    }

    #[test]
    fn geometric_one_row() {
        for n in 1..=5 {
            let v = SymFunc::s(&Partition::from_parts(&[n])).eval(&Alphabet::geometric(Var::Q)).unwrap();
            let want = crate::exact::q_shifted_factorial(&RatFunc::q(), n as i64).inv();
            assert_eq!(v, want);
        }
    }

    #[test]
    fn g_small() {
        assert_eq!(SymFunc::g_element(0, &Alphabet::unit()).unwrap(), SymFunc::one());
        let g1 = SymFunc::g_element(1, &Alphabet::unit()).unwrap();
        assert_eq!(g1.coeff(&p("1")), r("(1-t)/(1-q)"));
        let z = Alphabet::difference(RatFunc::a(), RatFunc::a());
        assert!(SymFunc::g_element(3, &z).unwrap().is_zero());
    }

    #[test]
    fn perp_basic() {
        let a = SymFunc::p(&p("1"));
        let v = SymFunc::perp(&a, &a, Inner::Qt).unwrap();
        assert_eq!(v.coeff(&Partition::empty()), r("(1-q)/(1-t)"));
        assert!(SymFunc::perp(&SymFunc::p(&p("2,1")), &a, Inner::Qt).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::s(&p("2,1")).to_power().unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.starts_with("{\"basis\":\"power\",\"terms\":[{\"partition\":[3]"));
        let g: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }
}
