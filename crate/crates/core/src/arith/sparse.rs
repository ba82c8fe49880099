use std::collections::BTreeMap;

use super::Field;

/// Sparse vector: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseVec<F> = Vec<(usize, <F as Field>::Elem)>;

/// Incrementally built row-echelon basis of a subspace of `F^ncols`.
///
/// Every stored row is monic at its pivot and has no entries left of it.
/// After [`Echelon::interreduce`] every row is also zero in all other pivot
/// columns, so reducing a vector is a single pass.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Echelon { field: field.clone(), ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// The stored row whose pivot is `col`, if any.
    pub fn row_for_pivot(&self, col: usize) -> Option<&SparseVec<F>> {
        self.pivot_row[col].map(|i| &self.rows[i])
    }

    pub fn rows(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduces a dense vector in place so it vanishes on every pivot column.
    pub fn reduce_dense(&self, work: &mut [F::Elem]) {
        let f = &self.field;
        for col in 0..self.ncols {
            if f.is_zero(&work[col]) {
                continue;
            }
            if let Some(i) = self.pivot_row[col] {
                let factor = work[col].clone();
                for (c, v) in &self.rows[i] {
                    f.sub_mul_assign(&mut work[*c], &factor, v);
                }
            }
        }
    }

    /// Adds a vector to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec<F>) -> bool {
        if self.is_full() || v.is_empty() {
            return false;
        }
        let f = self.field.clone();
        let mut work: BTreeMap<usize, F::Elem> = v.iter().cloned().collect();
        // rows have nothing left of their pivot, so one forward sweep suffices
        let mut cursor = 0;
        while let Some((col, i)) =
            work.range(cursor..).find_map(|(c, _)| self.pivot_row[*c].map(|i| (*c, i)))
        {
            let factor = work[&col].clone();
            for (c, x) in &self.rows[i] {
                let entry = work.entry(*c).or_insert_with(|| f.zero());
                f.sub_mul_assign(entry, &factor, x);
                if f.is_zero(entry) {
                    work.remove(c);
                }
            }
            cursor = col + 1;
        }
        let Some((&lead, lv)) = work.iter().next() else {
            return false;
        };
        let inv = f.inv(lv).expect("leading entry is nonzero");
        let row: SparseVec<F> = work.into_iter().map(|(c, x)| (c, f.mul(&x, &inv))).collect();
        self.pivot_row[lead] = Some(self.rows.len());
        self.rows.push(row);
        true
    }

    /// Brings the basis to fully reduced form.
    pub fn interreduce(&mut self) {
        let f = self.field.clone();
        let mut order: Vec<usize> = (0..self.ncols).filter(|&c| self.pivot_row[c].is_some()).collect();
        order.reverse();
        for pivot in order {
            let i = self.pivot_row[pivot].unwrap();
            let needs = self.rows[i].iter().skip(1).any(|(c, _)| self.pivot_row[*c].is_some());
            if !needs {
                continue;
            }
            let mut work = vec![f.zero(); self.ncols];
            for (c, x) in &self.rows[i] {
                work[*c] = x.clone();
            }
            // Rows with pivots right of `pivot` are already fully reduced.
            for col in pivot + 1..self.ncols {
                if f.is_zero(&work[col]) {
                    continue;
                }
                if let Some(j) = self.pivot_row[col] {
                    let factor = work[col].clone();
                    for (c, v) in &self.rows[j] {
                        f.sub_mul_assign(&mut work[*c], &factor, v);
                    }
                }
            }
            self.rows[i] = work
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !f.is_zero(x))
                .collect();
        }
    }
}

/// Rank of the span of sparse rows in `F^ncols`.
///
/// Rows are processed sparsest first, which keeps fill-in low on the
/// structured matrices produced by graded multiplication maps.
pub fn sparse_rank<F: Field>(field: &F, ncols: usize, rows: &[SparseVec<F>]) -> usize {
    let mut order: Vec<&SparseVec<F>> = rows.iter().filter(|r| !r.is_empty()).collect();
    order.sort_by_key(|r| r.len());
    let mut ech = Echelon::new(field, ncols);
    for r in order {
        ech.insert(r);
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}
