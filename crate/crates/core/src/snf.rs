//! Smith normal form over the integers, dense and exact.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: alloc::vec![0; rows * cols] }
    }
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }
    /// row[dst] -= q * row[src], from column `from` on.
    fn row_sub(&mut self, dst: usize, src: usize, q: i128, from: usize) -> Result<()> {
        for c in from..self.cols {
            let s = self.get(src, c);
            if s != 0 {
                let v = s.checked_mul(q).and_then(|t| self.get(dst, c).checked_sub(t)).ok_or(Error::Overflow("smith"))?;
                self.set(dst, c, v);
            }
        }
        Ok(())
    }
    fn col_sub(&mut self, dst: usize, src: usize, q: i128, from: usize) -> Result<()> {
        for r in from..self.rows {
            let s = self.get(r, src);
            if s != 0 {
                let v = s.checked_mul(q).and_then(|t| self.get(r, dst).checked_sub(t)).ok_or(Error::Overflow("smith"))?;
                self.set(r, dst, v);
            }
        }
        Ok(())
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ..`, all positive.
pub fn invariant_factors(mut a: IntMatrix) -> Result<Vec<i128>> {
    let mut out = Vec::new();
    let (m, n) = (a.rows, a.cols);
    let mut t = 0;
    while t < m.min(n) {
        // smallest |entry| in the trailing block becomes the pivot
        let mut best: Option<(usize, usize, i128)> = None;
        for r in t..m {
            for c in t..n {
                let v = a.get(r, c).abs();
                if v != 0 && best.is_none_or(|(_, _, b)| v < b) {
                    best = Some((r, c, v));
                    if v == 1 {
                        break;
                    }
                }
            }
            if best.is_some_and(|b| b.2 == 1) {
                break;
            }
        }
        let Some((r, c, _)) = best else { break };
        a.swap_rows(t, r);
        a.swap_cols(t, c);
        loop {
            let p = a.get(t, t);
            let mut clean = true;
            for r in t + 1..m {
                let v = a.get(r, t);
                if v != 0 {
                    a.row_sub(r, t, v.div_euclid(p), t)?;
                    clean &= a.get(r, t) == 0;
                }
            }
            for c in t + 1..n {
                let v = a.get(t, c);
                if v != 0 {
                    a.col_sub(c, t, v.div_euclid(p), t)?;
                    clean &= a.get(t, c) == 0;
                }
            }
            if !clean {
                // a remainder smaller than the pivot is left in row or column t
                let mut best = (t, t, p.abs());
                for r in t + 1..m {
                    let v = a.get(r, t).abs();
                    if v != 0 && v < best.2 {
                        best = (r, t, v);
                    }
                }
                for c in t + 1..n {
                    let v = a.get(t, c).abs();
                    if v != 0 && v < best.2 {
                        best = (t, c, v);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the trailing block by the pivot
            let bad = (t + 1..m).find(|&r| (t + 1..n).any(|c| a.get(r, c) % p != 0));
            match bad {
                Some(r) => {
                    a.row_sub(t, r, -1, t)?;
                }
                None => break,
            }
        }
        out.push(a.get(t, t).abs());
        t += 1;
    }
    Ok(out)
}

/// Rank over `Q` (`p == 0`) or over `F_p`.
pub fn rank(a: IntMatrix, p: u64) -> Result<usize> {
    let f = invariant_factors(a)?;
    Ok(if p == 0 { f.len() } else { f.iter().filter(|&&d| d % p as i128 != 0).count() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i128]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        IntMatrix { rows: rows.len(), cols, data: rows.iter().flat_map(|r| r.iter().copied()).collect() }
    }

    #[test]
    fn known_forms() {
        assert_eq!(invariant_factors(mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).unwrap(), [2, 6, 12]);
        assert_eq!(invariant_factors(mat(&[&[2, 0], &[0, 3]])).unwrap(), [1, 6]);
        assert!(invariant_factors(IntMatrix::zeros(3, 2)).unwrap().is_empty());
        assert!(invariant_factors(IntMatrix::zeros(0, 4)).unwrap().is_empty());
    }

    #[test]
    fn ranks_by_characteristic() {
        let a = mat(&[&[2, 0], &[0, 3]]);
        assert_eq!(rank(a.clone(), 0).unwrap(), 2);
        assert_eq!(rank(a.clone(), 2).unwrap(), 1);
        assert_eq!(rank(a.clone(), 3).unwrap(), 1);
        assert_eq!(rank(a, 5).unwrap(), 2);
    }
}
