use super::ratfunc::RatFunc;

/// Determinant by Gaussian elimination over the field of rational functions.
pub fn determinant(mut m: Vec<Vec<RatFunc>>) -> RatFunc {
    let n = m.len();
    let mut det = RatFunc::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return RatFunc::zero();
        };
        if p != col {
            m.swap(p, col);
            det = det.neg();
        }
        let pivot = m[col][col].clone();
        det = det.mul(&pivot);
        let inv = pivot.inv();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let x = m[r][c].sub(&f.mul(&m[col][c]));
                m[r][c] = x;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn small_determinants() {
        assert!(determinant(vec![]).is_one());
        let m = vec![vec![r("q"), r("t")], vec![r("1"), r("1")]];
        assert_eq!(determinant(m), r("q - t"));
        let m = vec![vec![r("0"), r("1")], vec![r("1"), r("0")]];
        assert_eq!(determinant(m), r("-1"));
        let v = [r("q"), r("t"), r("a")];
        let m: Vec<Vec<RatFunc>> = v.iter().map(|x| vec![x.pow(2), x.clone(), RatFunc::one()]).collect();
        assert_eq!(determinant(m), r("(q - t)*(q - a)*(t - a)"));
    }
}
