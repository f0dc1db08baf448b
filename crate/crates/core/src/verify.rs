//! Identity suites: each check recomputes an identity exactly and reports
//! PASS or FAIL with the first offending cases.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{MathError, Result};
use crate::exact::{determinant, RatFunc, Var};
use crate::kostka::{
    check_schlosser, fake_degree, green_reconstruction_failures, green_table, kostka, kostka_table,
    non_polynomial_cells, skew_schur_geometric, skew_schur_geometric_det, skew_schur_geometric_oracle,
    t_kostka_iter, table_differences, GreenMethod, KostkaMethod,
};
use crate::macdonald::{
    family_skew_q, macdonald_p_power, macdonald_q, skew_eval_a_minus_1, skew_q, Family,
};
use crate::mn::{
    check_dual_identity, check_mn_identity, check_skew_identity, g_tilde, hecke_clifford_mn, hecke_mn,
    hl_q_minus1, hl_q_minus1_sum, mn_dual, mn_expand, mn_skew_expand,
};
use crate::partitions::{
    components, partitions, partitions_between, partitions_containing, partitions_inside, strict_partitions,
    Partition, ShiftedSkewShape,
};
use crate::pieri::{hl_inverse_pieri, schur_inverse, schur_q_inverse};
use crate::symfunc::{z_qt, Alphabet, Basis, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Orthogonality,
    Mn,
    Specializations,
    Green,
    Kostka,
    Inversion,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["orthogonality", "mn", "specializations", "green", "kostka", "inversion", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::Mn => "mn",
            Suite::Specializations => "specializations",
            Suite::Green => "green",
            Suite::Kostka => "kostka",
            Suite::Inversion => "inversion",
            Suite::All => "all",
        }
    }

    /// Criteria covered by the suite.
    pub fn criteria(self) -> Vec<u8> {
        match self {
            Suite::Orthogonality => vec![1],
            Suite::Mn => vec![2, 3, 4],
            Suite::Green => vec![5],
            Suite::Specializations => vec![6],
            Suite::Inversion => vec![7],
            Suite::Kostka => vec![8, 9, 10],
            Suite::All => (1..=10).collect(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self> {
        let all = [
            Suite::Orthogonality,
            Suite::Mn,
            Suite::Specializations,
            Suite::Green,
            Suite::Kostka,
            Suite::Inversion,
            Suite::All,
        ];
        all.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            MathError::Parse(format!("unknown suite '{s}' (expected one of {})", Suite::NAMES.join(", ")))
        })
    }
}

/// Deliberate corruption of one computed value, to exercise the failure path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Adds 1 to the direct Kostka entry at `(λ, μ)`.
    Kostka { lambda: Partition, mu: Partition },
}

#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    pub fault: Option<Fault>,
    /// Seed for the extra randomized spot checks; none are run without it.
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub identity: String,
    pub passed: bool,
    pub failures: Vec<String>,
    pub seconds: f64,
}

impl Check {
    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} [{}] {} ({:.1}s)", self.criterion, self.identity, self.seconds);
        if !self.failures.is_empty() {
            s.push_str(&format!(": {}", self.failures.join("; ")));
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.checks.iter().map(|c| c.line() + "\n").collect();
        let ok = self.checks.iter().filter(|c| c.passed).count();
        out.push_str(&format!("{}: {ok}/{} checks passed\n", self.suite, self.checks.len()));
        out
    }
}

const MAX_LISTED: usize = 5;

/// Collects failure descriptions, keeping the first few.
#[derive(Default)]
struct Failures {
    items: Vec<String>,
    count: usize,
}

impl Failures {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.count += 1;
            if self.items.len() < MAX_LISTED {
                self.items.push(what());
            }
        }
    }

    fn finish(mut self) -> Vec<String> {
        if self.count > self.items.len() {
            self.items.push(format!("… {} failures in total", self.count));
        }
        self.items
    }
}

fn run_check<F>(criterion: u8, identity: &str, body: F) -> Check
where
    F: FnOnce(&mut Failures) -> Result<()>,
{
    let start = Instant::now();
    let mut f = Failures::default();
    if let Err(e) = body(&mut f) {
        f.count += 1;
        f.items.push(format!("error: {e}"));
    }
    Check {
        criterion,
        identity: identity.to_string(),
        passed: f.count == 0,
        failures: f.finish(),
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Report {
    let mut checks: Vec<Check> = suite.criteria().into_iter().map(|c| run_criterion(c, config)).collect();
    if let (Some(seed), true) = (config.seed, matches!(suite, Suite::Kostka | Suite::All)) {
        checks.push(kostka_spot_check(seed, 3));
    }
    Report { suite, checks }
}

pub fn run_criterion(criterion: u8, config: &VerifyConfig) -> Check {
    match criterion {
        1 => orthogonality(),
        2 => mn_identities(),
        3 => a_minus_one_closed_form(),
        4 => one_row_limit(),
        5 => green_iteration(),
        6 => specializations(),
        7 => pieri_inversion(),
        8 => schlosser(),
        9 => kostka_agreement(config.fault.as_ref()),
        10 => fake_degrees(),
        _ => Check {
            criterion,
            identity: "unknown criterion".into(),
            passed: false,
            failures: vec![format!("no criterion {criterion}")],
            seconds: 0.0,
        },
    }
}

fn one_row(n: usize) -> Partition {
    Partition::from_parts(&[n])
}

fn delta(a: &Partition, b: &Partition) -> RatFunc {
    if a == b {
        RatFunc::one()
    } else {
        RatFunc::zero()
    }
}

pub fn orthogonality() -> Check {
    run_check(1, "⟨P_λ,Q_μ⟩_{q,t} = δ for n≤6; g_n = Q_(n) = Σ p_λ/z_λ(q,t) for n≤8", |f| {
        for n in 0..=6 {
            let parts = partitions(n);
            for lam in &parts {
                let pl = macdonald_p_power(lam)?;
                for mu in &parts {
                    let v = pl.inner_qt(&macdonald_q(mu)?)?;
                    f.expect(v == delta(lam, mu), || format!("⟨P_{lam},Q_{mu}⟩ = {v}"));
                }
            }
        }
        for n in 0..=8 {
            let g = SymFunc::g_element(n, &Alphabet::unit())?;
            f.expect(g == macdonald_q(&one_row(n))?, || format!("g_{n} ≠ Q_({n})"));
            let sum = SymFunc::from_terms(Basis::Power, partitions(n).into_iter().map(|l| {
                let c = z_qt(&l).inv();
                (l, c)
            }));
            f.expect(g == sum, || format!("g_{n} ≠ Σ p_λ/z_λ(q,t)"));
        }
        Ok(())
    })
}

pub fn mn_identities() -> Check {
    run_check(2, "g_k((a-1)X) P_μ, g_k((a-1)X) Q_{μ/ρ} and g_k^⊥ Q_λ expansions, μ⊢n≤5, k≤3", |f| {
        let al = Alphabet::a_minus_one();
        for n in 0..=5 {
            for mu in partitions(n) {
                for k in 0..=3 {
                    let e = mn_expand(&mu, k, &al)?;
                    f.expect(check_mn_identity(&e, &al)?, || format!("P-expansion μ={mu} k={k}"));
                    for lam in partitions_containing(&mu, n + k) {
                        let d = mn_dual(&lam, k, &al)?;
                        f.expect(d.coeff(&mu) == e.coeff(&lam), || format!("adjointness λ={lam} μ={mu}"));
                    }
                    for r in 0..n {
                        for rho in partitions_inside(&mu, r) {
                            let s = mn_skew_expand(&mu, &rho, k, &al)?;
                            f.expect(check_skew_identity(&s, &rho, &al)?, || format!("skew μ={mu} ρ={rho} k={k}"));
                        }
                    }
                }
            }
        }
        for m in 0..=8 {
            for lam in partitions(m) {
                for k in 0..=3.min(m) {
                    let d = mn_dual(&lam, k, &al)?;
                    f.expect(check_dual_identity(&d, &al)?, || format!("dual λ={lam} k={k}"));
                }
            }
        }
        Ok(())
    })
}

pub fn a_minus_one_closed_form() -> Check {
    run_check(3, "closed form of Q_{λ/μ}(a-1;q,t) = λ-ring evaluation, |λ|≤5; δ at a=1", |f| {
        let al = Alphabet::a_minus_one();
        for n in 0..=5 {
            for lam in partitions(n) {
                for k in 0..=n {
                    for mu in partitions_inside(&lam, k) {
                        let closed = skew_eval_a_minus_1(&lam, &mu);
                        let oracle = skew_q(&lam, &mu)?.eval(&al)?;
                        f.expect(closed == oracle, || format!("{lam}/{mu}: {closed} vs {oracle}"));
                        let at1 = closed.substitute_with(Var::A, &RatFunc::one())?;
                        f.expect(at1 == delta(&lam, &mu), || format!("{lam}/{mu} at a=1: {at1}"));
                    }
                }
            }
        }
        Ok(())
    })
}

pub fn one_row_limit() -> Check {
    run_check(4, "(a-1)^{-1} g_k((a-1)X) at a=1 = (1-t^k)/(1-q^k) p_k, k≤8", |f| {
        for k in 1..=8 {
            let g = g_tilde(k)?.map_coeffs(|c| c.substitute_with(Var::A, &RatFunc::one()))?;
            let c = RatFunc::t().pow(k as i64).one_minus().div(&RatFunc::q().pow(k as i64).one_minus());
            let want = SymFunc::from_terms(Basis::Power, [(one_row(k), c)]);
            f.expect(g == want, || format!("k={k}"));
        }
        Ok(())
    })
}

pub fn green_iteration() -> Check {
    run_check(5, "iterated Green polynomials = extraction from J_λ, and J_λ = Σ z_μ^{-1} X^λ_μ p_μ(X;t), n≤5", |f| {
        for n in 1..=5 {
            let direct = green_table(n, GreenMethod::Direct)?;
            let iter = green_table(n, GreenMethod::Iterative)?;
            for (l, m) in table_differences(&direct, &iter) {
                f.expect(false, || format!("X^{l}_{m}"));
            }
            for t in [&direct, &iter] {
                for l in green_reconstruction_failures(t)? {
                    f.expect(false, || format!("reconstruction of J_{l} ({})", t.method));
                }
            }
        }
        Ok(())
    })
}

/// `s_{λ/μ}(a-1)` by the Jacobi–Trudi determinant with `h_m(a-1) = a^m - a^{m-1}`.
fn skew_schur_a_minus_one(lam: &Partition, mu: &Partition) -> RatFunc {
    let h = |m: i64| match m {
        m if m < 0 => RatFunc::zero(),
        0 => RatFunc::one(),
        m => RatFunc::a().pow(m).sub(&RatFunc::a().pow(m - 1)),
    };
    let l = lam.len();
    let m = (0..l)
        .map(|i| (0..l).map(|j| h(lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64)).collect())
        .collect();
    determinant(m)
}

fn interlaces(lam: &Partition, mu: &Partition) -> bool {
    (0..lam.len()).all(|i| lam.part(i) >= mu.part(i) && mu.part(i) >= lam.part(i + 1))
}

/// Schur `Q_{λ/μ}(x)` in one letter: `2^{c} x^{|λ/μ|}` when `λ` and `μ` interlace,
/// `c` being the number of connected components of the shifted skew diagram.
pub fn schur_q_single_letter(lam: &Partition, mu: &Partition, x: &RatFunc) -> Result<RatFunc> {
    if !lam.contains(mu) || !interlaces(lam, mu) {
        return Ok(RatFunc::zero());
    }
    let shape = ShiftedSkewShape::new(lam.clone(), mu.clone())?;
    let c = components(&shape.cells()).len();
    Ok(RatFunc::from_int(1i64 << c).mul(&x.pow(shape.size() as i64)))
}

/// Schur `Q_{λ/μ}(x, y) = Σ_ν Q_{λ/ν}(y) Q_{ν/μ}(x)`.
pub fn schur_q_two_letters(lam: &Partition, mu: &Partition, x: &RatFunc, y: &RatFunc) -> Result<RatFunc> {
    let mut items = Vec::new();
    for nu in partitions_between(mu, lam) {
        if !nu.is_strict() {
            continue;
        }
        let a = schur_q_single_letter(&nu, mu, x)?;
        if a.is_zero() {
            continue;
        }
        items.push(a.mul(&schur_q_single_letter(lam, &nu, y)?));
    }
    Ok(RatFunc::sum(items.iter()))
}

fn lookup(terms: &[(Partition, RatFunc)], lam: &Partition) -> RatFunc {
    terms
        .iter()
        .find(|(l, _)| l == lam)
        .map(|x| x.1.clone())
        .unwrap_or_else(RatFunc::zero)
}

pub fn specializations() -> Check {
    run_check(
        6,
        "Q_{λ/μ}(-1;t) product = η-sum (|λ|≤8); Hecke weights = s_{λ/μ}(a-1)/(a-1) (n≤6); Hecke–Clifford weights = Q_{λ/μ}(t,-1)/(q-1) (strict n≤6)",
        |f| {
            for n in 0..=8 {
                for lam in partitions(n) {
                    for k in 0..=n {
                        for mu in partitions_inside(&lam, k) {
                            f.expect(hl_q_minus1(&lam, &mu) == hl_q_minus1_sum(&lam, &mu), || {
                                format!("Q_{lam}/{mu}(-1;t)")
                            });
                        }
                    }
                }
            }

            let al = Alphabet::a_minus_one();
            let hecke_oracle = |v: RatFunc| -> Result<RatFunc> { Ok(v.exact_divide_a_minus_1()?.swap_vars(Var::A, Var::Q)) };
            for n in 0..=6 {
                for lam in partitions(n) {
                    for k in 0..n {
                        for mu in partitions_inside(&lam, k) {
                            let want = hecke_oracle(SymFunc::skew_schur(&lam, &mu)?.eval(&al)?)?;
                            let have = lookup(&hecke_mn(&mu, n - k)?, &lam);
                            f.expect(have == want, || format!("Hecke {lam}/{mu}: {have} vs {want}"));
                        }
                    }
                }
            }
            let (lam, mu) = (Partition::from_parts(&[4, 3, 3, 1]), Partition::from_parts(&[3, 2, 1]));
            let want = hecke_oracle(skew_schur_a_minus_one(&lam, &mu))?;
            let have = lookup(&hecke_mn(&mu, 5)?, &lam);
            f.expect(have == want, || format!("Hecke {lam}/{mu}: {have} vs {want}"));
            let printed: RatFunc = "-(q-1)^2*q".parse()?;
            f.expect(have == printed, || format!("Hecke {lam}/{mu}: {have}"));

            let letters = Alphabet::letters(vec![RatFunc::t(), RatFunc::from_int(-1)]);
            let qm1 = RatFunc::q().sub(&RatFunc::one());
            let minus_one = RatFunc::from_int(-1);
            for n in 0..=6 {
                for lam in strict_partitions(n) {
                    for k in 0..n {
                        for mu in partitions_inside(&lam, k) {
                            if !mu.is_strict() {
                                continue;
                            }
                            let sq = family_skew_q(Family::HallLittlewood, &lam, &mu)?.specialize(Var::T, &minus_one)?;
                            let v = sq.eval(&letters)?;
                            let branched = schur_q_two_letters(&lam, &mu, &RatFunc::t(), &minus_one)?;
                            f.expect(v == branched, || format!("Q_{lam}/{mu}(t,-1) branching"));
                            let want = v.swap_vars(Var::T, Var::Q).div(&qm1);
                            let have = lookup(&hecke_clifford_mn(&mu, n - k)?, &lam);
                            f.expect(have == want, || format!("Hecke–Clifford {lam}/{mu}: {have} vs {want}"));
                        }
                    }
                }
            }
            let lam = Partition::from_parts(&[15, 14, 10, 8, 7, 6, 5, 3, 1]);
            let mu = Partition::from_parts(&[13, 11, 8, 6, 5, 4, 2, 1]);
            let ds = ShiftedSkewShape::new(lam.clone(), mu.clone())?.double_strip_decompose();
            f.expect(ds.is_gds && ds.c == 5 && ds.m() == 5, || {
                format!("{lam}/{mu}: is_gds={} c={} m={}", ds.is_gds, ds.c, ds.m())
            });
            let v = schur_q_two_letters(&lam, &mu, &RatFunc::t(), &minus_one)?;
            let want = v.swap_vars(Var::T, Var::Q).div(&qm1);
            let have = lookup(&hecke_clifford_mn(&mu, lam.size() - mu.size())?, &lam);
            f.expect(have == want, || format!("Hecke–Clifford {lam}/{mu}: {have} vs {want}"));
            Ok(())
        },
    )
}

pub fn pieri_inversion() -> Check {
    run_check(
        7,
        "inverted Pieri rule reconstructs Q_λ(X;t) (n≤7), s_λ (n≤7), Schur Q_λ (strict n≤8); t=0 gives the vertical-strip signs",
        |f| {
            for n in 0..=7 {
                for lam in partitions(n) {
                    let hl = hl_inverse_pieri(&lam)?;
                    f.expect(hl.check()?, || format!("Hall–Littlewood {lam}"));
                    let s = schur_inverse(&lam)?;
                    f.expect(s.check()?, || format!("Schur {lam}"));
                    let at0: Vec<_> = hl
                        .terms
                        .iter()
                        .map(|(k, mu, c)| Ok((*k, mu.clone(), c.substitute_with(Var::T, &RatFunc::zero())?)))
                        .collect::<Result<Vec<_>>>()?
                        .into_iter()
                        .filter(|(_, _, c)| !c.is_zero())
                        .collect();
                    f.expect(at0 == s.terms, || format!("t=0 reduction {lam}"));
                }
            }
            for n in 0..=8 {
                for lam in strict_partitions(n) {
                    f.expect(schur_q_inverse(&lam)?.check()?, || format!("Schur Q {lam}"));
                }
            }
            Ok(())
        },
    )
}

pub fn schlosser() -> Check {
    run_check(8, "Q_λ(X;q,t) = Σ_θ C_θ(u) g_{λ_{l+1}-|θ|} Q_{λ+θ}, l(λ)≤3, |λ|≤6", |f| {
        for n in 0..=6 {
            for lam in partitions(n) {
                if lam.len() <= 3 {
                    f.expect(check_schlosser(&lam)?, || format!("λ={lam}"));
                }
            }
        }
        Ok(())
    })
}

pub fn kostka_agreement(fault: Option<&Fault>) -> Check {
    run_check(
        9,
        "K_{λμ}(q,t): direct = iter1 = binomial = via-green (n≤5), iter2 (l(μ)≤3), K(0,t) = Kostka–Foulkes, integer polynomials",
        |f| {
            for n in 1..=5 {
                let mut direct = kostka_table(n, KostkaMethod::Direct)?;
                if let Some(Fault::Kostka { lambda, mu }) = fault {
                    let i = direct.parts.iter().position(|p| p == lambda);
                    let j = direct.parts.iter().position(|p| p == mu);
                    if let (Some(i), Some(j)) = (i, j) {
                        direct.entries[i][j] = direct.entries[i][j].add(&RatFunc::one());
                    }
                }
                for m in [KostkaMethod::Iter1, KostkaMethod::Binomial, KostkaMethod::ViaGreen] {
                    let other = kostka_table(n, m)?;
                    for (l, u) in table_differences(&direct, &other) {
                        f.expect(false, || format!("({l};{u}) direct vs {m}"));
                    }
                }
                for (i, lam) in direct.parts.iter().enumerate() {
                    for (j, mu) in direct.parts.iter().enumerate() {
                        let d = &direct.entries[i][j];
                        if mu.len() <= 3 {
                            let v = kostka(lam, mu, KostkaMethod::Iter2)?;
                            f.expect(&v == d, || format!("({lam};{mu}) direct vs iter2"));
                        }
                        let at0 = d.substitute_with(Var::Q, &RatFunc::zero())?;
                        f.expect(at0 == t_kostka_iter(lam, mu)?, || format!("({lam};{mu}) at q=0"));
                    }
                }
                for (l, u) in non_polynomial_cells(&direct) {
                    f.expect(false, || format!("({l};{u}) is not a polynomial"));
                }
            }
            Ok(())
        },
    )
}

pub fn fake_degrees() -> Check {
    run_check(10, "Σ_T q^{maj T} / (q;q)_n = s_{λ/ρ}(1/(1-q)) = det(1/(q;q)_{λ_i-ρ_j-i+j}), |λ|≤7", |f| {
        for n in 0..=7 {
            for lam in partitions(n) {
                for k in 0..=n {
                    for rho in partitions_inside(&lam, k) {
                        let a = skew_schur_geometric(&lam, &rho);
                        let b = skew_schur_geometric_oracle(&lam, &rho)?;
                        let c = skew_schur_geometric_det(&lam, &rho);
                        f.expect(a == b && b == c, || format!("{lam}/{rho}"));
                        let fd = fake_degree(&lam, &rho)?;
                        f.expect(fd.is_polynomial(), || format!("{lam}/{rho} fake degree"));
                    }
                }
            }
        }
        Ok(())
    })
}

/// Compares direct, iter1 and binomial Kostka polynomials on `count` random
/// cells of degree 6.
pub fn kostka_spot_check(seed: u64, count: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let parts = partitions(6);
    let cells: Vec<(Partition, Partition)> = (0..count)
        .map(|_| {
            let l = parts.choose(&mut rng).expect("nonempty").clone();
            let m = parts.choose(&mut rng).expect("nonempty").clone();
            (l, m)
        })
        .collect();
    let listed: Vec<String> = cells.iter().map(|(l, m)| format!("({l};{m})")).collect();
    let identity = format!("spot check K_{{λμ}} at n=6, seed {seed}: {}", listed.join(" "));
    run_check(9, &identity, |f| {
        for (l, m) in &cells {
            let d = kostka(l, m, KostkaMethod::Direct)?;
            for method in [KostkaMethod::Iter1, KostkaMethod::Binomial] {
                f.expect(kostka(l, m, method)? == d, || format!("({l};{m}) direct vs {method}"));
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::NAMES {
            assert_eq!(name.parse::<Suite>().unwrap().name(), name);
        }
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!(Suite::All.criteria().len(), 10);
    }

    #[test]
    fn single_letter_schur_q_matches_symbolic() {
        let x = RatFunc::t();
        for n in 0..=6 {
            for lam in strict_partitions(n) {
                for k in 0..=n {
                    for mu in partitions_inside(&lam, k) {
                        if !mu.is_strict() {
                            continue;
                        }
                        let sq = family_skew_q(Family::HallLittlewood, &lam, &mu)
                            .unwrap()
                            .specialize(Var::T, &RatFunc::from_int(-1))
                            .unwrap();
                        let v = sq.eval(&Alphabet::singleton(x.clone())).unwrap();
                        assert_eq!(v, schur_q_single_letter(&lam, &mu, &x).unwrap(), "{lam}/{mu}");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_trudi_at_a_minus_one() {
        let al = Alphabet::a_minus_one();
        for lam in partitions(4) {
            for mu in partitions_inside(&lam, 1) {
                let v = SymFunc::skew_schur(&lam, &mu).unwrap().eval(&al).unwrap();
                assert_eq!(v, skew_schur_a_minus_one(&lam, &mu), "{lam}/{mu}");
            }
        }
    }

    #[test]
    fn fault_is_reported_with_its_cell() {
        let fault = Fault::Kostka {
            lambda: p("2,1"),
            mu: p("1,1,1"),
        };
        let c = kostka_agreement(Some(&fault));
        assert!(!c.passed);
        assert!(c.failures.iter().any(|s| s.contains("(2,1;1,1,1)")), "{:?}", c.failures);
    }

    #[test]
    fn report_format() {
        let c = one_row_limit();
        assert!(c.passed);
        assert!(c.line().starts_with("PASS [4]"));
    }
}
