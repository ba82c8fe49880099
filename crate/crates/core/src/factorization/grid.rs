//! Matrices over the polynomial ring and their plain-text grid form.

use std::sync::Arc;

use crate::arith::Field;
use crate::poly::{parse_polynomial, PolyError, Polynomial, VariableSet};

/// Row-major matrix of polynomials in one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(field: &F, vars: &Arc<VariableSet>, rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(field, vars); rows * cols] }
    }

    /// `θ·I_n`.
    pub fn scalar(theta: &Polynomial<F>, n: usize) -> Self {
        let mut m = Self::zeros(theta.field(), theta.vars(), n, n);
        for i in 0..n {
            m.set(i, i, theta.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial<F> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Polynomial<F>) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial<F>> {
        self.entries.iter()
    }

    pub fn negate_entry(&mut self, r: usize, c: usize) {
        let v = self.get(r, c).neg();
        self.set(r, c, v);
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Polynomial::zero(self.get(r, 0).field(), self.get(r, 0).vars());
                for k in 0..self.cols {
                    let (a, b) = (self.get(r, k), other.get(k, c));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b).expect("same ring")).expect("same ring");
                    }
                }
                out.push(acc);
            }
        }
        PolyMatrix { rows: self.rows, cols: other.cols, entries: out }
    }

    /// Every entry multiplied by `p`.
    pub fn scale_by(&self, p: &Polynomial<F>) -> Self {
        let entries = self.entries.iter().map(|e| if e.is_zero() { e.clone() } else { e.mul(p).expect("same ring") }).collect();
        PolyMatrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// One row per line, entries separated by `, `.
    pub fn to_grid(&self) -> String {
        let mut s = String::new();
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).render()).collect();
            s.push_str(&row.join(", "));
            s.push('\n');
        }
        s
    }
}

/// Reads the output of [`PolyMatrix::to_grid`].
pub fn parse_grid<F: Field>(text: &str, vars: &Arc<VariableSet>, field: &F) -> Result<PolyMatrix<F>, PolyError> {
    let mut rows: Vec<Vec<Polynomial<F>>> = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        rows.push(line.split(',').map(|e| parse_polynomial(e.trim(), vars, field)).collect::<Result<_, _>>()?);
    }
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(PolyError::Syntax { pos: 0, msg: "ragged grid".into() });
    }
    Ok(PolyMatrix { rows: rows.len(), cols, entries: rows.into_iter().flatten().collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;

    #[test]
    fn grid_round_trip() {
        let vars = VariableSet::new(&["x", "y"]).unwrap();
        let q = Rationals;
        let text = "x, -y^2\n0, 2*x*y\n";
        let m = parse_grid(text, &vars, &q).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(m.to_grid(), text);
        assert_eq!(parse_grid(&m.to_grid(), &vars, &q).unwrap(), m);
        assert_eq!(m.transpose().get(0, 1).render(), "0");
        assert!(parse_grid("x, y\nx\n", &vars, &q).is_err());
    }

    #[test]
    fn products() {
        let vars = VariableSet::new(&["x", "y"]).unwrap();
        let q = Rationals;
        let a = parse_grid("x, y\n", &vars, &q).unwrap();
        let b = parse_grid("y\n-x\n", &vars, &q).unwrap();
        assert_eq!(a.mul(&b).get(0, 0).render(), "0");
        assert_eq!(b.mul(&a).to_grid(), "x*y, y^2\n-x^2, -x*y\n");
    }
}
