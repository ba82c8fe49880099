//! Generators of determinantal and Segre ideals.

use std::sync::Arc;

use crate::algebra::{AlgebraError, AlgebraSpec};
use crate::arith::Field;
use crate::poly::{Polynomial, VariableSet};

/// Variables `x_{i}_{j}` (1-based) of a generic `rows × cols` matrix, row by row.
pub fn generic_matrix(rows: usize, cols: usize) -> Arc<VariableSet> {
    let names: Vec<String> = (1..=rows).flat_map(|i| (1..=cols).map(move |j| format!("x_{i}_{j}"))).collect();
    VariableSet::new(&names).expect("distinct names")
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (perm, even) in permutations(k - 1) {
        // insert k−1 at every slot; moving it left past j entries flips parity j times
        for slot in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(slot, k - 1);
            let flips = perm.len() - slot;
            out.push((p, even == (flips % 2 == 0)));
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(n - 1, k - 1);
    for s in &mut with {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with);
    out.sort();
    out
}

/// The `k × k` minors of a generic `rows × cols` matrix.
pub fn minors_ideal<F: Field>(field: &F, rows: usize, cols: usize, k: usize) -> Result<AlgebraSpec<F>, AlgebraError> {
    let vars = generic_matrix(rows, cols);
    let perms = permutations(k);
    let var = |i: usize, j: usize| Polynomial::var(field, &vars, i * cols + j);
    let mut gens = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let mut det = Polynomial::zero(field, &vars);
            for (perm, even) in &perms {
                let mut term = Polynomial::constant(field, &vars, if *even { field.one() } else { field.neg(&field.one()) });
                for (a, &b) in perm.iter().enumerate() {
                    term = term.mul(&var(rs[a], cs[b])).expect("same ring");
                }
                det = det.add(&term).expect("same ring");
            }
            gens.push(det);
        }
    }
    AlgebraSpec::new(field, &vars, gens)
}

/// The nine quadrics cutting out the Segre embedding of three projective
/// lines, in variables `w000..w111` on the vertices of the unit cube: one
/// `2 × 2` minor per face and one per diagonal plane `x = y`, `x = z`, `y = z`.
pub fn segre_cube_quadrics<F: Field>(field: &F) -> Result<AlgebraSpec<F>, AlgebraError> {
    let names: Vec<String> = (0..8).map(|v| format!("w{}{}{}", v >> 2 & 1, v >> 1 & 1, v & 1)).collect();
    let vars = VariableSet::new(&names)?;
    let w = |s: &str| Polynomial::var(field, &vars, vars.index_of(&format!("w{s}")).expect("vertex"));
    let binom = |a: &str, b: &str, c: &str, d: &str| {
        w(a).mul(&w(b)).expect("same ring").sub(&w(c).mul(&w(d)).expect("same ring")).expect("same ring")
    };
    let gens = vec![
        binom("000", "011", "001", "010"),
        binom("100", "111", "101", "110"),
        binom("000", "101", "001", "100"),
        binom("010", "111", "011", "110"),
        binom("000", "110", "010", "100"),
        binom("001", "111", "011", "101"),
        binom("000", "111", "001", "110"),
        binom("000", "111", "010", "101"),
        binom("000", "111", "100", "011"),
    ];
    AlgebraSpec::new(field, &vars, gens)
}
