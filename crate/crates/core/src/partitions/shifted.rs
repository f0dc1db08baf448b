use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::composition::Composition;
use super::partition::Partition;
use super::skew::{components, has_2x2, Cell};
use crate::error::{MathError, Result};
use crate::exact::{q_integer, RatFunc};

/// Skew shape `outer* / inner*` of shifted diagrams of strict partitions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShiftedSkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

/// Decomposition of a shifted skew shape into length-2 diagonals (the
/// `α` part) and the remaining cells grouped into connected components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleStrip {
    pub is_gds: bool,
    /// An intermediate `ν` splitting the shape into two strips, when one exists.
    pub witness: Option<Partition>,
    pub c: usize,
    pub t_boxes: Vec<Cell>,
    pub minus_one_boxes: Vec<Cell>,
    pub components: Vec<Vec<Cell>>,
}

impl DoubleStrip {
    pub fn m(&self) -> usize {
        self.components.len()
    }
}

fn shifted_cells(outer: &Partition, inner: &Partition) -> BTreeSet<Cell> {
    let mut s = BTreeSet::new();
    for i in 0..outer.len() {
        for k in inner.part(i)..outer.part(i) {
            s.insert((i, i + k));
        }
    }
    s
}

fn strict_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    fn rec(i: usize, inner: &Partition, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let mut hi = outer.part(i);
        if i > 0 {
            let prev = cur[i - 1];
            if prev == 0 {
                hi = 0;
            } else {
                hi = hi.min(prev - 1);
            }
        }
        let lo = inner.part(i);
        if lo > hi {
            return;
        }
        for v in lo..=hi {
            cur.push(v);
            rec(i + 1, inner, outer, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, inner, outer, &mut Vec::new(), &mut out);
    out
}

impl ShiftedSkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<ShiftedSkewShape> {
        if !outer.is_strict() || !inner.is_strict() {
            return Err(MathError::Invalid(format!("{outer}/{inner}: shifted shapes need strict partitions")));
        }
        if !outer.contains(&inner) {
            return Err(MathError::Invalid(format!("{inner} is not contained in {outer}")));
        }
        Ok(ShiftedSkewShape { outer, inner })
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells `(row, column)` of the shifted skew diagram, 0-indexed.
    pub fn cells(&self) -> BTreeSet<Cell> {
        shifted_cells(&self.outer, &self.inner)
    }

    pub fn is_generalized_strip(&self) -> bool {
        !has_2x2(&self.cells())
    }

    /// Decides the double-strip property by searching all intermediate strict
    /// `ν`, then splits the cells by diagonal length.
    pub fn double_strip_decompose(&self) -> DoubleStrip {
        let witness = strict_between(&self.inner, &self.outer).into_iter().find(|nu| {
            !has_2x2(&shifted_cells(&self.outer, nu)) && !has_2x2(&shifted_cells(nu, &self.inner))
        });
        let cells = self.cells();
        let mut diagonals: BTreeMap<usize, Vec<Cell>> = BTreeMap::new();
        for &(i, j) in &cells {
            diagonals.entry(j - i).or_default().push((i, j));
        }
        let mut t_boxes = Vec::new();
        let mut minus_one_boxes = Vec::new();
        let mut beta = BTreeSet::new();
        let mut long = false;
        for diag in diagonals.values() {
            match diag.len() {
                1 => {
                    beta.insert(diag[0]);
                }
                2 => {
                    t_boxes.push(diag[0].min(diag[1]));
                    minus_one_boxes.push(diag[0].max(diag[1]));
                }
                _ => long = true,
            }
        }
        let is_gds = witness.is_some() && !long;
        DoubleStrip {
            is_gds,
            witness,
            c: t_boxes.len(),
            t_boxes,
            minus_one_boxes,
            components: components(&beta),
        }
    }

    /// The Schur Q weight `w̃t(λ/μ; t)` of a generalized double strip.
    pub fn gds_weight(&self, t: &RatFunc) -> Result<RatFunc> {
        let ds = self.double_strip_decompose();
        if !ds.is_gds {
            return Err(MathError::Invalid(format!("{self} is not a generalized double strip")));
        }
        let mut w = t.neg().pow(ds.c as i64);
        if self.outer.len() == self.inner.len() + 2 {
            w = w.mul(&RatFunc::from_int(2));
        }
        let minus_t = t.neg();
        let two_tm1 = t.sub(&RatFunc::one()).mul(&RatFunc::from_int(2));
        let d = |r: usize| {
            let v = two_tm1.mul(&q_integer(&minus_t, r as u32));
            if r % 2 == 0 {
                v.neg()
            } else {
                v
            }
        };
        for comp in &ds.components {
            let xi = component_rows(comp);
            let mut s = RatFunc::zero();
            for tau in xi.coarsenings() {
                let mut term = RatFunc::one();
                for &r in tau.parts() {
                    term = term.mul(&d(r));
                }
                if (xi.len() - tau.len()) % 2 == 1 {
                    term = term.neg();
                }
                s = s.add(&term);
            }
            w = w.mul(&s);
        }
        Ok(w)
    }
}

/// Row lengths of a component, top row first.
pub fn component_rows(comp: &[Cell]) -> Composition {
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    for &(i, _) in comp {
        *rows.entry(i).or_default() += 1;
    }
    Composition(rows.into_values().collect())
}

impl fmt::Display for ShiftedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(a: &str, b: &str) -> ShiftedSkewShape {
        ShiftedSkewShape::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
    }

    #[test]
    fn large_example() {
        let ds = sh("15,14,10,8,7,6,5,3,1", "13,11,8,6,5,4,2,1").double_strip_decompose();
        assert!(ds.is_gds);
        assert_eq!(ds.c, 5);
        assert_eq!(ds.m(), 5);
    }

    #[test]
    fn double_strip_example() {
        let ds = sh("6,5,4,3,2", "5,4,2").double_strip_decompose();
        assert!(ds.is_gds);
        assert_eq!(ds.m(), 1);
        assert_eq!(ds.c, 3);
    }

    #[test]
    fn empty_and_single() {
        let ds = sh("3,1", "3,1").double_strip_decompose();
        assert!(ds.is_gds);
        assert_eq!(ds.c, 0);
        assert!(ds.components.is_empty());
        let t = RatFunc::t();
        assert!(sh("3,1", "3,1").gds_weight(&t).unwrap().is_one());
        assert_eq!(sh("1", "-").gds_weight(&t).unwrap(), "2*(t-1)".parse().unwrap());
        assert_eq!(sh("2", "-").gds_weight(&t).unwrap(), "2*(t-1)^2".parse().unwrap());
    }

    #[test]
    fn non_strict_rejected() {
        assert!(ShiftedSkewShape::new("2,2".parse().unwrap(), Partition::empty()).is_err());
    }
}
