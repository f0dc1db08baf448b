use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{MathError, Result};
use crate::exact::Int;

/// An integer partition with its conjugate cached.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    conj: Vec<usize>,
}

fn conjugate_parts(parts: &[usize]) -> Vec<usize> {
    let w = parts.first().copied().unwrap_or(0);
    (1..=w).map(|j| parts.iter().take_while(|&&p| p >= j).count()).collect()
}

impl Partition {
    /// Validates and builds a partition; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(MathError::Invalid(format!("parts not weakly decreasing: {parts:?}")));
        }
        if parts.contains(&0) {
            return Err(MathError::Invalid(format!("zero part inside partition: {parts:?}")));
        }
        let conj = conjugate_parts(&parts);
        Ok(Partition { parts, conj })
    }

    /// Builds a partition from parts known to be valid.
    pub fn from_parts(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("invalid partition")
    }

    /// Sorts arbitrary non-negative entries into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_{i+1}` (0-indexed), zero past the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn width(&self) -> usize {
        self.part(0)
    }

    /// Column lengths `λ'_1, λ'_2, ...`.
    pub fn conj(&self) -> &[usize] {
        &self.conj
    }

    /// `λ'_{j+1}` (0-indexed), zero past the width.
    pub fn conj_part(&self, j: usize) -> usize {
        self.conj.get(j).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: self.conj.clone(),
            conj: self.parts.clone(),
        }
    }

    /// `m_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ≥ other` (sizes assumed equal).
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut s = 0usize;
        let mut o = 0usize;
        for i in 0..self.len().max(other.len()) {
            s += self.part(i);
            o += other.part(i);
            if s < o {
                return false;
            }
        }
        true
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// `λ^{[k]} = (λ_{k+1}, λ_{k+2}, ...)`.
    pub fn drop_rows(&self, k: usize) -> Partition {
        Partition::from_parts(&self.parts[k.min(self.len())..])
    }

    /// Arm length of cell `(i, j)` (0-indexed).
    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.parts[i] - j - 1
    }

    /// Leg length of cell `(i, j)` (0-indexed).
    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.conj[j] - i - 1
    }

    /// Cells `(row, column)`, 0-indexed, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    /// `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> Int {
        let mut acc = Int::ONE;
        let mut i = 0;
        while i < self.len() {
            let p = self.parts[i];
            let mut m = 0;
            while i < self.len() && self.parts[i] == p {
                m += 1;
                i += 1;
                acc = &(&acc * &Int::from(p)) * &Int::from(m);
            }
        }
        acc
    }

    /// Sign of a permutation of cycle type `λ`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on parts; restricted to one size it refines dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: usize = tok
                .parse()
                .map_err(|_| MathError::Parse(format!("bad partition part '{tok}'")))?;
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::from_parts(p)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts(cur));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Strict partitions of `n`, in decreasing lexicographic order.
pub fn strict_partitions(n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.is_strict()).collect()
}

/// All partitions `ν` with `inner ⊆ ν ⊆ outer`.
pub fn partitions_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    fn rec(i: usize, inner: &Partition, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::from_parts(cur));
            return;
        }
        let hi = if i == 0 { outer.part(0) } else { outer.part(i).min(cur[i - 1]) };
        let lo = inner.part(i);
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(i + 1, inner, outer, cur, out);
            cur.pop();
        }
    }
    if !outer.contains(inner) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(0, inner, outer, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` containing `inner`, in decreasing lexicographic order.
pub fn partitions_containing(inner: &Partition, n: usize) -> Vec<Partition> {
    partitions(n).into_iter().filter(|p| p.contains(inner)).collect()
}

/// Partitions of `k` contained in `outer`.
pub fn partitions_inside(outer: &Partition, k: usize) -> Vec<Partition> {
    partitions(k).into_iter().filter(|p| outer.contains(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_of_431() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert_eq!(p("4,3,1").n(), 5);
        assert_eq!(p("-").conjugate(), Partition::empty());
    }

    #[test]
    fn text_form() {
        assert_eq!(p("4,3,1").to_string(), "4,3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("3,4".parse::<Partition>().is_err());
        let e = "3,x".parse::<Partition>().unwrap_err();
        assert!(e.to_string().contains("'x'"));
    }

    #[test]
    fn counts_and_order() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let ps = partitions(6);
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                assert!(a > b);
                assert!(!b.dominates(a) || a == b);
            }
        }
    }

    #[test]
    fn z_values() {
        assert_eq!(p("2,1").z(), Int::from(2));
        assert_eq!(p("1,1,1").z(), Int::from(6));
        assert_eq!(p("2,2,1").z(), Int::from(8));
    }

    #[test]
    fn between() {
        let all = partitions_between(&p("1"), &p("2,1"));
        assert_eq!(all, vec![p("2,1"), p("2"), p("1,1"), p("1")]);
    }
}
