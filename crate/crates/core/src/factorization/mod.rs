//! Matrix factorizations of a homogeneous element over the polynomial ring,
//! built from divided-power Koszul data, and the two-periodic complexes they
//! induce from an exact pair.
//!
//! Bases are indexed by subsets of the variables: `F` by even subsets, `G` by
//! odd ones. With `θ = Σ x_i y_i`,
//!
//! ```text
//! M(e_T) = Σ_{t∈T} (−1)^{#{u∈T: u<t}} x_t e_{T∖t} + Σ_{j∉T} (−1)^{#{t∈T: t<j}} y_j e_{T∪j}
//! ```
//!
//! and `M̌` is the same formula on odd subsets. Contraction by `x` and
//! wedging with `y` anticommute up to `θ`, so `M̌M = MM̌ = θ·I` in `P`.

mod complex;
mod grid;

pub use complex::{
    build_periodic_complex, check_strand_exactness, ComplexVariant, ExactnessReport, PeriodicComplex, PositionCheck,
    StrandReport,
};
pub use grid::{parse_grid, PolyMatrix};

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra};
use crate::arith::{binomial_i, Field};
use crate::ezd::EzdError;
use crate::poly::{PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorizationError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ezd(#[from] EzdError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("the factorization needs deg theta >= 2, got {degree}")]
    DegreeTooLow { degree: u32 },
    #[error("theta is zero in S: {0}")]
    ZeroInAlgebra(String),
    #[error("theta is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("({theta1}, {theta2}) is not an exact pair: {reason}")]
    PairNotExact { theta1: String, theta2: String, reason: String },
    #[error("composition identity failed: {0}")]
    IdentityFailed(String),
    #[error("entry ({row}, {col}) of {map} has the wrong degree")]
    DegreeAudit { map: &'static str, row: usize, col: usize },
}

/// `y_1..y_s` with `θ = Σ x_i y_i` in `P`: each monomial `m` of `θ` goes to
/// the smallest-index variable dividing it.
pub fn split_theta<F: Field>(theta: &Polynomial<F>) -> Vec<Polynomial<F>> {
    let (field, vars) = (theta.field(), theta.vars());
    let mut ys = vec![Polynomial::zero(field, vars); vars.len()];
    for (m, c) in theta.terms() {
        let i = m.first_var().expect("positive-degree monomial");
        let q = m.div(&crate::poly::Monomial::var(vars.len(), i)).expect("x_i divides m");
        ys[i].add_term(q, c.clone());
    }
    ys
}

/// Subsets of `{0..s}` of the given parity as bitmasks, by size then lexicographically.
pub fn subsets_of_parity(s: usize, odd: bool) -> Vec<u32> {
    let mut v: Vec<u32> = (0u32..1 << s).filter(|m| (m.count_ones() % 2 == 1) == odd).collect();
    v.sort_by_key(|&m| (m.count_ones(), (0..s).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>()));
    v
}

fn subset_index(subsets: &[u32]) -> HashMap<u32, usize> {
    subsets.iter().enumerate().map(|(i, &m)| (m, i)).collect()
}

/// Renders a subset as `{1,3}` (1-based).
pub fn render_subset(mask: u32) -> String {
    let parts: Vec<String> = (0..32).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Contraction by `x` plus wedge with `y`, from the subsets `source` to `target`.
fn koszul_map<F: Field>(
    theta: &Polynomial<F>,
    ys: &[Polynomial<F>],
    source: &[u32],
    target: &[u32],
) -> PolyMatrix<F> {
    let (f, vars) = (theta.field(), theta.vars());
    let s = vars.len();
    let idx = subset_index(target);
    let mut m = PolyMatrix::zeros(f, vars, target.len(), source.len());
    for (col, &t_mask) in source.iter().enumerate() {
        for i in 0..s {
            let below = (t_mask & ((1u32 << i) - 1)).count_ones();
            let sign = if below % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            if t_mask >> i & 1 == 1 {
                let row = idx[&(t_mask & !(1 << i))];
                m.set(row, col, Polynomial::var(f, vars, i).scale(&sign));
            } else if !ys[i].is_zero() {
                let row = idx[&(t_mask | 1 << i)];
                m.set(row, col, ys[i].scale(&sign));
            }
        }
    }
    m
}

#[derive(Debug, Clone)]
pub struct MatrixFactorization<F: Field> {
    pub s1: usize,
    pub d: u32,
    pub theta: Polynomial<F>,
    pub y: Vec<Polynomial<F>>,
    /// Basis of `F`: even subsets.
    pub even: Vec<u32>,
    /// Basis of `G`: odd subsets.
    pub odd: Vec<u32>,
    /// `F → G`, rows indexed by `odd`.
    pub m: PolyMatrix<F>,
    /// `G → F(d)`, rows indexed by `even`.
    pub mcheck: PolyMatrix<F>,
    pub twists_f: Vec<i64>,
    pub twists_g: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub rank: usize,
    pub ranks_ok: bool,
    pub mcheck_m_is_theta: bool,
    pub m_mcheck_is_theta: bool,
    pub degrees_ok: bool,
    pub minimal: bool,
    pub twist_multiplicities_ok: bool,
}

impl FactorizationCheck {
    pub fn passed(&self) -> bool {
        self.ranks_ok
            && self.mcheck_m_is_theta
            && self.m_mcheck_is_theta
            && self.degrees_ok
            && self.minimal
            && self.twist_multiplicities_ok
    }
}

/// `twist(target) − twist(source)` must be the degree of every nonzero entry.
fn degrees_match<F: Field>(m: &PolyMatrix<F>, source: &[i64], target: &[i64]) -> Option<(usize, usize)> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let e = m.get(r, c);
            if !e.is_zero() && e.degree().map(i64::from) != Some(target[r] - source[c]) {
                return Some((r, c));
            }
        }
    }
    None
}

impl<F: Field> MatrixFactorization<F> {
    pub fn rank(&self) -> usize {
        self.even.len()
    }

    /// Runs every structural check; the composition identities are exact in `P`.
    pub fn verify(&self) -> FactorizationCheck {
        let rank = self.rank();
        let expected = 1usize << self.s1.saturating_sub(1);
        let theta_i = PolyMatrix::scalar(&self.theta, rank);
        let shifted: Vec<i64> = self.twists_f.iter().map(|a| a + self.d as i64).collect();
        let mut multiplicities = true;
        for (twists, parity) in [(&self.twists_f, 0u32), (&self.twists_g, 1)] {
            let mut expected: Vec<i64> = (parity..=self.s1 as u32)
                .step_by(2)
                .flat_map(|k| {
                    let a = if parity == 0 { Self::twist_even(self.d, k) } else { Self::twist_odd(self.d, k) };
                    std::iter::repeat(a).take(binomial_i(self.s1 as i64, k as i64) as usize)
                })
                .collect();
            let mut actual = twists.clone();
            expected.sort_unstable();
            actual.sort_unstable();
            multiplicities &= expected == actual;
        }
        let positive = |m: &PolyMatrix<F>| m.entries().all(|e| e.is_zero() || e.degree().is_some_and(|d| d > 0));
        FactorizationCheck {
            rank,
            ranks_ok: rank == expected && self.odd.len() == expected,
            mcheck_m_is_theta: self.mcheck.mul(&self.m) == theta_i,
            m_mcheck_is_theta: self.m.mul(&self.mcheck) == theta_i,
            degrees_ok: degrees_match(&self.m, &self.twists_f, &self.twists_g).is_none()
                && degrees_match(&self.mcheck, &self.twists_g, &shifted).is_none(),
            minimal: positive(&self.m) && positive(&self.mcheck),
            twist_multiplicities_ok: multiplicities,
        }
    }

    /// Twist of the `F` generator for an even subset of size `2i`: `i(d−2)`.
    pub fn twist_even(d: u32, size: u32) -> i64 {
        (size / 2) as i64 * (d as i64 - 2)
    }

    /// Twist of the `G` generator for an odd subset of size `2i+1`: `i(d−2)+d−1`.
    pub fn twist_odd(d: u32, size: u32) -> i64 {
        (size / 2) as i64 * (d as i64 - 2) + d as i64 - 1
    }
}

/// The factorization of `θ` over the polynomial ring of `alg`.
pub fn build_factorization<F: Field>(
    alg: &GradedAlgebra<F>,
    theta: &Polynomial<F>,
) -> Result<MatrixFactorization<F>, FactorizationError> {
    if theta.vars() != alg.vars() || theta.field() != alg.field() {
        return Err(AlgebraError::RingMismatch.into());
    }
    let d = theta.degree().ok_or_else(|| FactorizationError::NotHomogeneous(theta.render()))?;
    if d < 2 {
        return Err(FactorizationError::DegreeTooLow { degree: d });
    }
    if alg.is_zero(theta)? {
        return Err(FactorizationError::ZeroInAlgebra(theta.render()));
    }
    let s1 = alg.nvars();
    let y = split_theta(theta);
    let even = subsets_of_parity(s1, false);
    let odd = subsets_of_parity(s1, true);
    let m = koszul_map(theta, &y, &even, &odd);
    let mcheck = koszul_map(theta, &y, &odd, &even);
    let twists_f = even.iter().map(|t| MatrixFactorization::<F>::twist_even(d, t.count_ones())).collect();
    let twists_g = odd.iter().map(|t| MatrixFactorization::<F>::twist_odd(d, t.count_ones())).collect();
    let mf = MatrixFactorization { s1, d, theta: theta.clone(), y, even, odd, m, mcheck, twists_f, twists_g };
    let check = mf.verify();
    if !check.passed() {
        return Err(FactorizationError::IdentityFailed(format!("{check:?}")));
    }
    Ok(mf)
}
