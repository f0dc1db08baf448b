use super::skew::SkewShape;

/// Row of each entry `1..=n` of every standard tableau of a skew shape.
pub fn standard_tableaux_rows(shape: &SkewShape) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, outer: &[usize], rows: &mut Vec<usize>, left: usize, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(rows.clone());
            return;
        }
        for i in 0..outer.len() {
            if cur[i] < outer[i] && (i == 0 || cur[i - 1] > cur[i]) {
                cur[i] += 1;
                rows.push(i);
                rec(cur, outer, rows, left - 1, out);
                rows.pop();
                cur[i] -= 1;
            }
        }
    }
    let outer = shape.outer.parts().to_vec();
    let mut cur: Vec<usize> = (0..outer.len()).map(|i| shape.inner.part(i)).collect();
    let mut out = Vec::new();
    rec(&mut cur, &outer, &mut Vec::new(), shape.size(), &mut out);
    out
}

/// Sum of descents `i` where `i + 1` sits in a strictly lower row.
pub fn major_index(rows: &[usize]) -> usize {
    (1..rows.len()).filter(|&k| rows[k] > rows[k - 1]).sum()
}

/// Major indices of all standard tableaux of the shape.
pub fn major_indices(shape: &SkewShape) -> Vec<usize> {
    standard_tableaux_rows(shape).iter().map(|r| major_index(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let s: SkewShape = "3,2".parse().unwrap();
        assert_eq!(standard_tableaux_rows(&s).len(), 5);
        let s: SkewShape = "4,3,1".parse().unwrap();
        assert_eq!(standard_tableaux_rows(&s).len(), 70);
        let s: SkewShape = "2,1/1".parse().unwrap();
        assert_eq!(standard_tableaux_rows(&s).len(), 2);
    }

    #[test]
    fn maj_of_column() {
        let s: SkewShape = "1,1,1".parse().unwrap();
        assert_eq!(major_indices(&s), vec![3]);
        let s: SkewShape = "3".parse().unwrap();
        assert_eq!(major_indices(&s), vec![0]);
        let mut m = major_indices(&"2,1".parse().unwrap());
        m.sort();
        assert_eq!(m, vec![1, 2]);
    }
}
