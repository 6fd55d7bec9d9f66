use std::collections::BTreeSet;

use super::{AlgebraError, LaurentPoly};

/// Dense row-major matrix over ℤ[t, t⁻¹].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    /// Like [`from_rows`](Self::from_rows) but with an explicit column count,
    /// so matrices with zero rows keep their width.
    pub fn with_shape(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        Self {
            rows: n,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> LaurentMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        LaurentMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    pub fn without_row(&self, drop: usize) -> LaurentMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != drop).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.submatrix(&rows, &cols)
    }

    pub fn without_col(&self, drop: usize) -> LaurentMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != drop).collect();
        self.submatrix(&rows, &cols)
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.cofactor_det(0, &idx)
    }

    fn cofactor_det(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        match cols.len() {
            0 => return LaurentPoly::one(),
            1 => return self.get(row, cols[0]).clone(),
            _ => {}
        }
        let mut det = LaurentPoly::zero();
        for (pos, &j) in cols.iter().enumerate() {
            let entry = self.get(row, j);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let term = entry * &self.cofactor_det(row + 1, &rest);
            det = if pos % 2 == 0 {
                &det + &term
            } else {
                &det - &term
            };
        }
        det
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The `k × k` minors of `m`, canonicalized, with zeros and repeats removed.
///
/// Order follows the lexicographic order of (row set, column set); the first
/// occurrence of a repeated minor keeps its place.
pub fn minors(m: &LaurentMatrix, k: usize) -> Result<Vec<LaurentPoly>, AlgebraError> {
    if k > m.rows || k > m.cols {
        return Err(AlgebraError::SizeTooLarge {
            k,
            rows: m.rows,
            cols: m.cols,
        });
    }
    let col_sets = combinations(m.cols, k);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for rows in combinations(m.rows, k) {
        for cols in &col_sets {
            let det = m.submatrix(&rows, cols).determinant().canonicalize();
            if !det.is_zero() && seen.insert(det.clone()) {
                out.push(det);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(min, c.iter().copied())
    }

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(
            combinations(4, 2),
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn module_relation_minors() {
        let pp = p(0, &[1, -1, 1]);
        let one_minus_t = p(0, &[1, -1]);
        let m = LaurentMatrix::from_rows(vec![
            vec![pp.clone(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), pp.clone()],
            vec![one_minus_t.clone(), -&one_minus_t],
        ]);
        let got = minors(&m, 2).unwrap();
        let expected = vec![&pp * &pp, (&p(0, &[-1, 1]) * &pp).canonicalize()];
        assert_eq!(got, expected);
    }

    #[test]
    fn identity_and_rank_deficient() {
        let id = LaurentMatrix::from_rows(vec![
            vec![LaurentPoly::one(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), LaurentPoly::one()],
        ]);
        assert_eq!(minors(&id, 2).unwrap(), vec![LaurentPoly::one()]);
        let t = LaurentPoly::t();
        let flat = LaurentMatrix::from_rows(vec![vec![t.clone(), t.clone()], vec![t.clone(), t]]);
        assert!(minors(&flat, 2).unwrap().is_empty());
        assert!(matches!(
            minors(&flat, 3),
            Err(AlgebraError::SizeTooLarge { .. })
        ));
    }

    #[test]
    fn determinant_matches_hand_expansion() {
        let t = LaurentPoly::t();
        let one = LaurentPoly::one();
        // [[t, 1, 0], [1, t, 1], [0, 1, t]] has determinant t^3 - 2t
        let m = LaurentMatrix::from_rows(vec![
            vec![t.clone(), one.clone(), LaurentPoly::zero()],
            vec![one.clone(), t.clone(), one.clone()],
            vec![LaurentPoly::zero(), one, t],
        ]);
        assert_eq!(m.determinant(), p(1, &[-2, 0, 1]));
    }
}
