use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use crate::error::{MathError, Result};
use crate::exact::{Int, RatFunc};
use crate::partitions::{partitions, Partition};

/// Hard ceiling on the truncation degree.
pub const MAX_DEGREE: usize = 16;
pub const DEFAULT_DEGREE: usize = 8;

static TRUNCATION: AtomicUsize = AtomicUsize::new(0);

/// Current truncation degree `N`; `MNQT_DEGREE` overrides the default.
pub fn truncation() -> usize {
    let n = TRUNCATION.load(Ordering::Relaxed);
    if n != 0 {
        return n;
    }
    let n = std::env::var("MNQT_DEGREE")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| (1..=MAX_DEGREE).contains(&n))
        .unwrap_or(DEFAULT_DEGREE);
    TRUNCATION.store(n, Ordering::Relaxed);
    n
}

pub fn set_truncation(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(MathError::Invalid(format!("truncation degree must be in 1..={MAX_DEGREE}")));
    }
    TRUNCATION.store(n, Ordering::Relaxed);
    Ok(())
}

pub fn check_degree(n: usize) -> Result<()> {
    let max = truncation();
    if n > max {
        return Err(MathError::DegreeOverflow { degree: n, max });
    }
    Ok(())
}

/// Transition data between power sums, monomials and Schur functions in one degree.
pub struct DegreeTables {
    /// Partitions of `n`, decreasing lexicographic order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_ρ = Σ_λ p2m[ρ][λ] m_λ`, lower triangular.
    pub p2m: Vec<Vec<Int>>,
    /// `m_λ = Σ_ρ m2p[λ][ρ] p_ρ`.
    pub m2p: Vec<Vec<RatFunc>>,
    /// `chars[λ][ρ] = χ^λ_ρ`.
    pub chars: Vec<Vec<Int>>,
    pub z: Vec<Int>,
}

static TABLES: [OnceLock<DegreeTables>; MAX_DEGREE + 1] = [const { OnceLock::new() }; MAX_DEGREE + 1];

pub fn tables(n: usize) -> Result<&'static DegreeTables> {
    check_degree(n)?;
    Ok(TABLES[n].get_or_init(|| DegreeTables::build(n)))
}

/// `p_k m_μ = Σ_λ m_{μ_i + k}(λ) m_λ` over `λ` obtained by adding `k` to one
/// distinct part value of `μ` (possibly zero).
fn p_times_m(k: usize, mu: &Partition) -> Vec<(Partition, usize)> {
    let mut values: Vec<usize> = mu.parts().to_vec();
    values.dedup();
    values.push(0);
    let mut out = Vec::new();
    for v in values {
        let mut parts = mu.parts().to_vec();
        if v == 0 {
            parts.push(k);
        } else {
            let pos = parts.iter().position(|&p| p == v).unwrap();
            parts[pos] += k;
        }
        let lam = Partition::from_unsorted(parts);
        let c = lam.multiplicity(v + k);
        out.push((lam, c));
    }
    out
}

impl DegreeTables {
    fn build(n: usize) -> DegreeTables {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = parts.len();

        let mut p2m = vec![vec![Int::ZERO; dim]; dim];
        for (r, rho) in parts.iter().enumerate() {
            let mut cur: HashMap<Partition, Int> = HashMap::from([(Partition::empty(), Int::ONE)]);
            for &k in rho.parts() {
                let mut next: HashMap<Partition, Int> = HashMap::new();
                for (mu, c) in &cur {
                    for (lam, m) in p_times_m(k, mu) {
                        *next.entry(lam).or_insert(Int::ZERO) += &(c * &Int::from(m));
                    }
                }
                cur = next;
            }
            for (lam, c) in cur {
                p2m[r][index[&lam]] = c;
            }
        }

        // forward substitution: p2m is lower triangular in this order
        let mut m2p: Vec<Vec<RatFunc>> = vec![vec![RatFunc::zero(); dim]; dim];
        for r in 0..dim {
            let mut row = vec![RatFunc::zero(); dim];
            row[r] = RatFunc::one();
            for c in 0..r {
                if p2m[r][c].is_zero() {
                    continue;
                }
                let f = RatFunc::from_int(p2m[r][c].clone());
                for (k, v) in m2p[c].iter().enumerate() {
                    if !v.is_zero() {
                        row[k] = row[k].sub(&f.mul(v));
                    }
                }
            }
            let d = RatFunc::from_int(p2m[r][r].clone()).inv();
            m2p[r] = row.into_iter().map(|x| x.mul(&d)).collect();
        }

        let mut memo = HashMap::new();
        let chars = parts
            .iter()
            .map(|lam| parts.iter().map(|rho| character(lam, rho, &mut memo)).collect())
            .collect();
        let z = parts.iter().map(|p| p.z()).collect();
        DegreeTables {
            parts,
            index,
            p2m,
            m2p,
            chars,
            z,
        }
    }
}

/// Removes a rim hook of size `r` from every possible place, returning the
/// smaller partitions with the hook sign `(-1)^{height}`.
pub fn remove_rim_hooks(lam: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let l = lam.len();
    let beta: Vec<usize> = (0..l).map(|i| lam.part(i) + (l - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - r;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (l - 1 - j)).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::new(parts).unwrap(), sign));
    }
    out
}

/// Irreducible character `χ^λ_ρ` by rim-hook recursion.
pub fn character(lam: &Partition, rho: &Partition, memo: &mut HashMap<(Partition, Partition), Int>) -> Int {
    if rho.is_empty() {
        return if lam.is_empty() { Int::ONE } else { Int::ZERO };
    }
    let key = (lam.clone(), rho.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let r = rho.part(0);
    let rest = rho.drop_rows(1);
    let mut acc = Int::ZERO;
    for (mu, sign) in remove_rim_hooks(lam, r) {
        let v = character(&mu, &rest, memo);
        if sign > 0 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    memo.insert(key, acc.clone());
    acc
}

static CHAR_MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), Int>>> = OnceLock::new();

/// `χ^λ_ρ` with a shared memo; zero when the sizes differ.
pub fn classical_character(lam: &Partition, rho: &Partition) -> Int {
    if lam.size() != rho.size() {
        return Int::ZERO;
    }
    let memo = CHAR_MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    character(lam, rho, &mut guard)
}
