use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::partition::Partition;
use crate::error::{MathError, Result};
use crate::exact::RatFunc;

pub type Cell = (usize, usize);

/// A skew diagram `outer / inner`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

/// Strip classes of a skew diagram; several may hold at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct StripClass {
    pub horizontal: bool,
    pub vertical: bool,
    pub border: bool,
    pub generalized_border: bool,
}

impl StripClass {
    pub fn is_none(&self) -> bool {
        !(self.horizontal || self.vertical || self.border || self.generalized_border)
    }
}

/// Cells `(row, column)` of a set that are connected through common sides.
pub fn components(cells: &BTreeSet<Cell>) -> Vec<Vec<Cell>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in cells {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut stack = vec![start];
        seen.insert(start);
        while let Some((i, j)) = stack.pop() {
            comp.push((i, j));
            let mut nbrs = vec![(i + 1, j), (i, j + 1)];
            if i > 0 {
                nbrs.push((i - 1, j));
            }
            if j > 0 {
                nbrs.push((i, j - 1));
            }
            for n in nbrs {
                if cells.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

pub fn has_2x2(cells: &BTreeSet<Cell>) -> bool {
    cells.iter().any(|&(i, j)| {
        cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1))
    })
}

fn distinct_count(it: impl Iterator<Item = usize>) -> usize {
    it.collect::<BTreeSet<_>>().len()
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<SkewShape> {
        if !outer.contains(&inner) {
            return Err(MathError::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        let mut s = BTreeSet::new();
        for i in 0..self.outer.len() {
            for j in self.inner.part(i)..self.outer.part(i) {
                s.insert((i, j));
            }
        }
        s
    }

    /// At most one cell per column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.width()).all(|j| self.outer.conj_part(j) - self.inner.conj_part(j) <= 1)
    }

    /// At most one cell per row.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }

    pub fn components(&self) -> Vec<Vec<Cell>> {
        components(&self.cells())
    }

    pub fn classify(&self) -> StripClass {
        let cells = self.cells();
        let gbs = !has_2x2(&cells);
        StripClass {
            horizontal: self.is_horizontal_strip(),
            vertical: self.is_vertical_strip(),
            border: gbs && !cells.is_empty() && components(&cells).len() == 1,
            generalized_border: gbs,
        }
    }

    /// `Σ_j C(λ'_j - μ'_j, 2)`.
    pub fn n_stat(&self) -> usize {
        (0..self.outer.width())
            .map(|j| {
                let d = self.outer.conj_part(j) - self.inner.conj_part(j);
                d * d.saturating_sub(1) / 2
            })
            .sum()
    }

    /// `(j, a_j)` with `a_j = λ'_j - max(μ'_j, λ'_{j+1})` for the columns
    /// (1-indexed) where it is positive.
    pub fn column_removal_bounds(&self) -> Vec<(usize, usize)> {
        (0..self.outer.width())
            .filter_map(|j| {
                let lo = self.inner.conj_part(j).max(self.outer.conj_part(j + 1));
                let a = self.outer.conj_part(j).saturating_sub(lo);
                (a > 0).then_some((j + 1, a))
            })
            .collect()
    }

    /// Cells with no skew cell directly below or directly to the left.
    pub fn star_cells(&self) -> Vec<Cell> {
        let cells = self.cells();
        cells
            .iter()
            .copied()
            .filter(|&(i, j)| !cells.contains(&(i + 1, j)) && !(j > 0 && cells.contains(&(i, j - 1))))
            .collect()
    }

    /// `(t-1)^{m-1} ∏ (-1)^{r(ξ)-1} t^{c(ξ)-1}` over the components `ξ`.
    pub fn gbs_weight(&self, t: &RatFunc) -> Result<RatFunc> {
        let cells = self.cells();
        if has_2x2(&cells) {
            return Err(MathError::Invalid(format!("{self} is not a generalized border strip")));
        }
        let comps = components(&cells);
        let tm1 = t.sub(&RatFunc::one());
        let mut w = tm1.pow(comps.len() as i64 - 1);
        for c in &comps {
            let r = distinct_count(c.iter().map(|x| x.0));
            let k = distinct_count(c.iter().map(|x| x.1));
            w = w.mul(&t.pow(k as i64 - 1));
            if r % 2 == 0 {
                w = w.neg();
            }
        }
        Ok(w)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = MathError;

    fn from_str(s: &str) -> Result<SkewShape> {
        match s.split_once('/') {
            Some((a, b)) => SkewShape::new(a.parse()?, b.parse()?),
            None => SkewShape::new(s.parse()?, Partition::empty()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sk(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(sk("4,3,1").n_stat(), 5);
        assert_eq!(sk("3,1/3,1").n_stat(), 0);
        assert_eq!(sk("2,2/1,1").n_stat(), 1);
        assert_eq!(sk("2,2/2").n_stat(), 0);
    }

    #[test]
    fn classification() {
        let c = sk("4,3,3,1/3,2,1").classify();
        assert!(c.generalized_border && !c.border);
        assert_eq!(sk("4,3,3,1/3,2,1").components().len(), 3);
        let row = sk("5").classify();
        assert!(row.horizontal && row.border && !row.vertical);
        assert!(sk("2,2").classify().is_none());
    }

    #[test]
    fn gbs_weight_examples() {
        let t = RatFunc::t();
        assert_eq!(sk("4").gbs_weight(&t).unwrap(), t.pow(3));
        assert_eq!(sk("1,1,1").gbs_weight(&t).unwrap(), RatFunc::one());
        assert_eq!(sk("1,1").gbs_weight(&t).unwrap(), RatFunc::from_int(-1));
        let expected: RatFunc = "(t-1)^2*(-t)".parse().unwrap();
        assert_eq!(sk("4,3,3,1/3,2,1").gbs_weight(&t).unwrap(), expected);
        assert!(sk("2,2").gbs_weight(&t).is_err());
    }

    #[test]
    fn removal_bounds() {
        let b = sk("9,9,9,5,4,2,2/5,5,4,3,1,1,1").column_removal_bounds();
        assert_eq!(b, vec![(2, 2), (4, 1), (5, 1), (9, 3)]);
        assert!(sk("3,1/3,1").column_removal_bounds().is_empty());
        assert_eq!(sk("1").column_removal_bounds(), vec![(1, 1)]);
    }
}
