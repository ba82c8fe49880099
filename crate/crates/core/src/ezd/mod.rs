//! Exact pairs of homogeneous zero divisors.
//!
//! `(θ1, θ2)` is an exact pair when `0:θ1 = (θ2)` and `0:θ2 = (θ1)`. Once
//! `θ1θ2 = 0`, the image of `θ2` sits inside the kernel of `θ1` degree by
//! degree, so equality of their dimensions in every degree is equivalent to
//! equality of the subspaces.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedAlgebra, GradedMap};
use crate::arith::{Field, FieldSpec};
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EzdError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("`{0}` must have positive degree")]
    NotPositiveDegree(String),
    #[error("`{0}` annihilates nothing")]
    NonZeroDivisor(String),
    #[error("no candidates to test")]
    EmptyCandidates,
    #[error("exhaustive enumeration needs a prime field, got {0}")]
    NeedsPrimeField(FieldSpec),
    #[error("enumeration of {0} candidates exceeds the limit; pass a larger limit to force it")]
    TooManyCandidates(u64),
}

pub const PAIR_JUSTIFICATION: &str = "theta1*theta2 = 0 gives im(theta2) within ker(theta1) and im(theta1) \
within ker(theta2) in every degree, so equal dimensions certify equal subspaces";

/// Kernel and image dimensions at one degree `a` of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub a: u32,
    /// `dim ker(θ1 : [S]_a → [S]_{a+d1})`
    pub dim_ker1: usize,
    /// `dim θ2·[S]_{a−d2}`
    pub dim_im2: usize,
    pub dim_ker2: usize,
    pub dim_im1: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairVerdict {
    ExactPair,
    NotPair { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub theta1: String,
    pub theta2: String,
    pub d1: u32,
    pub d2: u32,
    pub product_zero: bool,
    pub per_degree: Vec<DegreeDims>,
    pub verdict: PairVerdict,
    pub justification: &'static str,
}

impl PairReport {
    pub fn is_exact(&self) -> bool {
        self.verdict == PairVerdict::ExactPair
    }
}

fn positive_degree<F: Field>(theta: &Polynomial<F>) -> Result<u32, EzdError> {
    match theta.degree() {
        None if theta.is_zero() => Err(AlgebraError::ZeroInAlgebra(theta.render()).into()),
        None => Err(AlgebraError::NotHomogeneous(theta.render()).into()),
        Some(0) => Err(EzdError::NotPositiveDegree(theta.render())),
        Some(d) => Ok(d),
    }
}

/// Multiplication map of a positive-degree element that is nonzero in `S`.
fn checked_map<F: Field>(alg: &GradedAlgebra<F>, theta: &Polynomial<F>) -> Result<GradedMap<F>, EzdError> {
    positive_degree(theta)?;
    Ok(alg.multiplication_map(theta)?)
}

fn rank_into<F: Field>(map: &GradedMap<F>, a: u32) -> usize {
    a.checked_sub(map.degree()).map_or(0, |src| map.rank(src))
}

/// Decides whether `(θ1, θ2)` is an exact pair.
pub fn verify_pair<F: Field>(
    alg: &GradedAlgebra<F>,
    theta1: &Polynomial<F>,
    theta2: &Polynomial<F>,
) -> Result<PairReport, EzdError> {
    let m1 = checked_map(alg, theta1)?;
    let m2 = checked_map(alg, theta2)?;
    let (d1, d2) = (m1.degree(), m2.degree());
    let product_zero = alg.is_zero(&theta1.mul(theta2).map_err(AlgebraError::from)?)?;
    let per_degree: Vec<DegreeDims> = (0..=alg.top_degree())
        .map(|a| DegreeDims {
            a,
            dim_ker1: m1.kernel_dim(a),
            dim_im2: rank_into(&m2, a),
            dim_ker2: m2.kernel_dim(a),
            dim_im1: rank_into(&m1, a),
        })
        .collect();
    let verdict = if !product_zero {
        PairVerdict::NotPair { reason: "theta1*theta2 is nonzero in S".into() }
    } else if let Some(bad) = per_degree.iter().find(|r| r.dim_ker1 != r.dim_im2) {
        PairVerdict::NotPair {
            reason: format!(
                "degree {}: dim (0:theta1) = {} but dim theta2*S = {}",
                bad.a, bad.dim_ker1, bad.dim_im2
            ),
        }
    } else if let Some(bad) = per_degree.iter().find(|r| r.dim_ker2 != r.dim_im1) {
        PairVerdict::NotPair {
            reason: format!(
                "degree {}: dim (0:theta2) = {} but dim theta1*S = {}",
                bad.a, bad.dim_ker2, bad.dim_im1
            ),
        }
    } else {
        PairVerdict::ExactPair
    };
    Ok(PairReport {
        theta1: theta1.render(),
        theta2: theta2.render(),
        d1,
        d2,
        product_zero,
        per_degree,
        verdict,
        justification: PAIR_JUSTIFICATION,
    })
}

/// `dim (0 :_S θ)_a` for `a = 0..=e`.
pub fn annihilator_profile<F: Field>(alg: &GradedAlgebra<F>, theta: &Polynomial<F>) -> Result<Vec<usize>, EzdError> {
    let m = checked_map(alg, theta)?;
    Ok((0..=alg.top_degree()).map(|a| m.kernel_dim(a)).collect())
}

#[derive(Debug, Clone)]
pub enum EzdVerdict<F: Field> {
    Yes { partner: Polynomial<F>, report: PairReport },
    No { reason: String },
}

impl<F: Field> EzdVerdict<F> {
    pub fn partner(&self) -> Option<&Polynomial<F>> {
        match self {
            EzdVerdict::Yes { partner, .. } => Some(partner),
            EzdVerdict::No { .. } => None,
        }
    }
}

/// Decides whether `θ` is an exact zero divisor and finds its partner.
///
/// A principal homogeneous ideal `(g)` is one-dimensional in its least degree,
/// spanned by `g`; so `0:θ` either fails that test or forces the partner up
/// to a scalar, and [`verify_pair`] settles the rest.
pub fn is_exact_zero_divisor<F: Field>(alg: &GradedAlgebra<F>, theta: &Polynomial<F>) -> Result<EzdVerdict<F>, EzdError> {
    let m = checked_map(alg, theta)?;
    let Some(d2) = (0..=alg.top_degree()).find(|&a| m.kernel_dim(a) > 0) else {
        return Err(EzdError::NonZeroDivisor(theta.render()));
    };
    let dim = m.kernel_dim(d2);
    if dim != 1 {
        return Ok(EzdVerdict::No {
            reason: format!("0:theta starts in degree {d2} with dimension {dim}, so it is not principal"),
        });
    }
    let k = m.matrix(d2).kernel_basis();
    let partner = alg.from_coords(d2, &k.column(0)).normalized();
    let report = verify_pair(alg, theta, &partner)?;
    Ok(match &report.verdict {
        PairVerdict::ExactPair => EzdVerdict::Yes { partner, report },
        PairVerdict::NotPair { reason } => EzdVerdict::No {
            reason: format!("0:theta = ({}) but the pair is not exact: {reason}", partner.render()),
        },
    })
}

/// A linear exact zero divisor and its partner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub ell: String,
    pub partner: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub field: String,
    pub method: String,
    pub candidates_examined: u64,
    pub hits: Vec<SearchHit>,
}

/// Number of points of `P^{n-1}(F_p)`.
pub fn projective_point_count(p: u64, n: usize) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    let mut total: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..n {
        total = total.checked_add(pow)?;
        pow = pow.checked_mul(p)?;
    }
    Some(total)
}

/// The `index`-th projective point: first nonzero coordinate 1, ordered by
/// that coordinate's position and then lexicographically with the last
/// coordinate varying fastest.
pub fn projective_point(p: u64, n: usize, mut index: u64) -> Vec<u64> {
    for lead in 0..n {
        let block = p.pow((n - 1 - lead) as u32);
        if index < block {
            let mut v = vec![0u64; n];
            v[lead] = 1;
            for slot in (lead + 1..n).rev() {
                v[slot] = index % p;
                index /= p;
            }
            return v;
        }
        index -= block;
    }
    panic!("projective point index out of range")
}

fn linear_form<F: Field>(alg: &GradedAlgebra<F>, coeffs: &[F::Elem]) -> Polynomial<F> {
    let n = alg.nvars();
    Polynomial::from_terms(alg.field(), alg.vars(), (0..n).map(|i| (Monomial::var(n, i), coeffs[i].clone())))
}

fn test_candidates<F: Field>(
    alg: &GradedAlgebra<F>,
    count: u64,
    make: impl Fn(u64) -> Polynomial<F> + Sync,
) -> Result<Vec<SearchHit>, EzdError> {
    let results: Vec<Result<Option<SearchHit>, EzdError>> = (0..count)
        .into_par_iter()
        .map(|i| {
            let ell = make(i);
            if ell.is_zero() || alg.is_zero(&ell)? {
                return Ok(None);
            }
            Ok(is_exact_zero_divisor(alg, &ell)?
                .partner()
                .map(|partner| SearchHit { ell: ell.render(), partner: partner.render() }))
        })
        .collect();
    results.into_iter().filter_map(Result::transpose).collect()
}

/// Every linear exact zero divisor of `S` over a prime field, up to scalars.
///
/// `limit` caps the number of projective points examined.
pub fn search_linear_ezd_exhaustive<F: Field>(alg: &GradedAlgebra<F>, limit: u64) -> Result<SearchReport, EzdError> {
    let spec = alg.field().spec();
    let FieldSpec::PrimeField(p) = spec else {
        return Err(EzdError::NeedsPrimeField(spec));
    };
    let n = alg.nvars();
    let count = projective_point_count(p, n).unwrap_or(u64::MAX);
    if count > limit {
        return Err(EzdError::TooManyCandidates(count));
    }
    let f = alg.field();
    let hits = test_candidates(alg, count, |i| {
        let c: Vec<F::Elem> = projective_point(p, n, i).into_iter().map(|x| f.from_i64(x as i64)).collect();
        linear_form(alg, &c)
    })?;
    Ok(SearchReport {
        field: spec.to_string(),
        method: format!("exhaustive enumeration of all {count} points of P^{}(F_{p})", n.saturating_sub(1)),
        candidates_examined: count,
        hits,
    })
}

/// Tests exactly the given linear forms.
pub fn search_linear_ezd_candidates<F: Field>(
    alg: &GradedAlgebra<F>,
    candidates: &[Polynomial<F>],
) -> Result<SearchReport, EzdError> {
    if candidates.is_empty() {
        return Err(EzdError::EmptyCandidates);
    }
    for c in candidates {
        if !c.is_zero() && c.degree() != Some(1) {
            return Err(AlgebraError::NotLinear(c.render()).into());
        }
    }
    let hits = test_candidates(alg, candidates.len() as u64, |i| candidates[i as usize].clone())?;
    Ok(SearchReport {
        field: alg.field().spec().to_string(),
        method: format!("explicit list of {} candidates", candidates.len()),
        candidates_examined: candidates.len() as u64,
        hits,
    })
}

/// All `2^n − 1` nonzero linear forms with coefficients in `{0, 1}`.
pub fn binary_candidates<F: Field>(alg: &GradedAlgebra<F>) -> Vec<Polynomial<F>> {
    let n = alg.nvars();
    let f = alg.field();
    (1u64..(1 << n))
        .map(|mask| {
            let c: Vec<F::Elem> = (0..n).map(|i| f.from_i64(((mask >> (n - 1 - i)) & 1) as i64)).collect();
            linear_form(alg, &c)
        })
        .collect()
}
