use std::fmt;

/// A finite sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All compositions obtained by merging runs of adjacent parts,
    /// including `self`; there are `2^{l-1}` of them.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let l = self.0.len();
        if l == 0 {
            return vec![self.clone()];
        }
        let mut out = Vec::with_capacity(1 << (l - 1));
        for mask in 0u64..(1u64 << (l - 1)) {
            // bit i set: merge part i+1 into the block of part i
            let mut parts = vec![self.0[0]];
            for i in 1..l {
                if mask >> (i - 1) & 1 == 1 {
                    *parts.last_mut().unwrap() += self.0[i];
                } else {
                    parts.push(self.0[i]);
                }
            }
            out.push(Composition(parts));
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coarsening_examples() {
        let mut c = Composition(vec![1, 1]).coarsenings();
        c.sort();
        assert_eq!(c, vec![Composition(vec![1, 1]), Composition(vec![2])]);
        assert_eq!(Composition(vec![5]).coarsenings(), vec![Composition(vec![5])]);
        let mut c = Composition(vec![1, 2, 1]).coarsenings();
        c.sort();
        let mut want = vec![
            Composition(vec![1, 2, 1]),
            Composition(vec![3, 1]),
            Composition(vec![1, 3]),
            Composition(vec![4]),
        ];
        want.sort();
        assert_eq!(c, want);
    }
}
