//! The Hilbert-series divisibility criterion for exact pairs.
//!
//! If `S` has an exact pair of homogeneous zero divisors whose degrees add
//! up to `D`, then `1 + t + ... + t^{D-1}` divides `HS_S(t)`. Equivalently
//! the residue-class sums `σ_i = Σ_ℓ HF(i + ℓD)` are all equal.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::GradedAlgebra;
use crate::arith::{binomial, binomial_i, Field, Matrix, Rationals};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("D must be positive, got {0}")]
    NonPositiveD(i64),
    #[error("need 1 <= b < B, got b = {b}, B = {big_b}")]
    BadCirculant { b: usize, big_b: usize },
    #[error("no candidate degree sums given")]
    NoCandidates,
    #[error("malformed Hilbert function: {0}")]
    BadHilbert(String),
}

/// Coefficients of a Hilbert series that is a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub hf: Vec<u64>,
}

impl HilbertData {
    pub fn new(hf: Vec<u64>) -> Result<Self, CriterionError> {
        match hf.last() {
            None => Err(CriterionError::BadHilbert("empty".into())),
            Some(0) => Err(CriterionError::BadHilbert("last entry must be nonzero".into())),
            Some(_) => Ok(HilbertData { hf }),
        }
    }

    pub fn of<F: Field>(alg: &GradedAlgebra<F>) -> Self {
        HilbertData { hf: alg.hilbert_function().iter().map(|&h| h as u64).collect() }
    }

    /// Parses `"1,5,11"` (spaces allowed).
    pub fn parse(text: &str) -> Result<Self, CriterionError> {
        let hf = text
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| CriterionError::BadHilbert(format!("bad entry `{}`", t.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(hf)
    }

    pub fn top_degree(&self) -> usize {
        self.hf.len() - 1
    }

    /// `HF(i)`, zero outside the stored range.
    pub fn at(&self, i: i64) -> u64 {
        usize::try_from(i).ok().and_then(|i| self.hf.get(i)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.hf.iter().sum()
    }

    /// `HS(-1)`.
    pub fn value_at_minus_one(&self) -> i64 {
        self.hf.iter().enumerate().map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) }).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaProfile {
    pub d: u32,
    pub sigma: Vec<u64>,
}

impl SigmaProfile {
    pub fn is_constant(&self) -> bool {
        self.sigma.windows(2).all(|w| w[0] == w[1])
    }

    /// `σ_i` for any integer `i` (periodic).
    pub fn at(&self, i: i64) -> u64 {
        self.sigma[i.rem_euclid(self.d as i64) as usize]
    }
}

fn positive(d: i64) -> Result<u32, CriterionError> {
    if d <= 0 {
        Err(CriterionError::NonPositiveD(d))
    } else {
        Ok(d as u32)
    }
}

pub fn sigma_profile(hf: &HilbertData, d: i64) -> Result<SigmaProfile, CriterionError> {
    let d = positive(d)?;
    let mut sigma = vec![0u64; d as usize];
    for (i, &h) in hf.hf.iter().enumerate() {
        sigma[i % d as usize] += h;
    }
    Ok(SigmaProfile { d, sigma })
}

/// Exact division of `Σ hf_i t^i` by `1 + t + ... + t^{D-1}` in `Z[t]`;
/// returns whether the remainder vanishes.
pub fn divides_by_division(hf: &HilbertData, d: u32) -> bool {
    let d = d as usize;
    let mut rem: Vec<i128> = hf.hf.iter().map(|&h| h as i128).collect();
    // The divisor is monic of degree D-1, so long division stays integral.
    let deg = d - 1;
    while rem.len() > deg {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - deg;
        if lead != 0 {
            for k in 0..d {
                rem[shift + k] -= lead;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

/// Whether `(t^D − 1)/(t − 1)` divides the Hilbert series. The σ route and
/// the long-division route are both evaluated and must agree.
pub fn divides(hf: &HilbertData, d: i64) -> Result<bool, CriterionError> {
    let by_sigma = sigma_profile(hf, d)?.is_constant();
    let by_division = divides_by_division(hf, d as u32);
    assert_eq!(by_sigma, by_division, "sigma and division routes disagree for D = {d} on {:?}", hf.hf);
    Ok(by_sigma)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub d: u32,
    pub passes: bool,
    pub sigma: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Conclusion {
    NoExactPairPossible,
    CandidatesRemain { remaining: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScreeningReport {
    pub hf: Vec<u64>,
    pub candidates: Vec<CandidateVerdict>,
    pub conclusion: Conclusion,
}

impl ScreeningReport {
    pub fn no_pair_possible(&self) -> bool {
        self.conclusion == Conclusion::NoExactPairPossible
    }

    pub fn remaining(&self) -> Vec<u32> {
        match &self.conclusion {
            Conclusion::NoExactPairPossible => Vec::new(),
            Conclusion::CandidatesRemain { remaining } => remaining.clone(),
        }
    }
}

/// Tests each candidate degree sum `D` against the σ criterion.
pub fn possible_d(hf: &HilbertData, candidates: &[u32]) -> Result<ScreeningReport, CriterionError> {
    let mut cands: Vec<u32> = candidates.to_vec();
    cands.sort_unstable();
    cands.dedup();
    if cands.is_empty() {
        return Err(CriterionError::NoCandidates);
    }
    let verdicts = cands
        .iter()
        .map(|&d| {
            let p = sigma_profile(hf, d as i64)?;
            Ok(CandidateVerdict { d, passes: divides(hf, d as i64)?, sigma: p.sigma })
        })
        .collect::<Result<Vec<_>, CriterionError>>()?;
    let remaining: Vec<u32> = verdicts.iter().filter(|v| v.passes).map(|v| v.d).collect();
    let conclusion =
        if remaining.is_empty() { Conclusion::NoExactPairPossible } else { Conclusion::CandidatesRemain { remaining } };
    Ok(ScreeningReport { hf: hf.hf.clone(), candidates: verdicts, conclusion })
}

/// Least `i` with `HF(i) < dim [P]_i`, taking `dim [P]_1 = HF(1)`.
pub fn initial_degree(hf: &HilbertData) -> u32 {
    let c = hf.at(1);
    (0..)
        .find(|&i: &u32| {
            let dim_p = if c == 0 { u128::from(i == 0) } else { binomial(i as u64 + c - 1, c - 1).unwrap_or(u128::MAX) };
            (hf.at(i as i64) as u128) < dim_p
        })
        .expect("Artinian Hilbert functions eventually drop")
}

/// The interval `[n, e + 1]` of possible degree sums.
pub fn interval_candidates(hf: &HilbertData) -> Vec<u32> {
    let n = initial_degree(hf).max(1);
    (n..=hf.top_degree() as u32 + 1).collect()
}

/// `Σ_{ℓ=0}^{s1} (−1)^ℓ C(s1, ℓ) σ_{N−ℓ}`.
pub fn sigma_binomial_residual(hf: &HilbertData, d: i64, s1: u32, n: i64) -> Result<i128, CriterionError> {
    let p = sigma_profile(hf, d)?;
    Ok((0..=s1 as i64).map(|l| {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        sign * binomial_i(s1 as i64, l) * p.at(n - l) as i128
    })
    .sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CirculantReport {
    pub b: usize,
    pub big_b: usize,
    pub rank: usize,
    pub all_ones_in_kernel: bool,
}

/// The `B × B` circulant with first row `c_i = (−1)^i C(b, i)` for `i ≤ b`.
pub fn circulant_matrix(b: usize, big_b: usize) -> Matrix<Rationals> {
    let q = Rationals;
    let c: Vec<i64> = (0..big_b)
        .map(|i| if i <= b { (if i % 2 == 0 { 1 } else { -1 }) * binomial_i(b as i64, i as i64) as i64 } else { 0 })
        .collect();
    Matrix::from_fn(&q, big_b, big_b, |r, col| q.from_i64(c[(col + big_b - r) % big_b]))
}

/// Exact rank of the circulant over Q and whether `(1, ..., 1)` is in its kernel.
pub fn circulant_kernel_check(b: usize, big_b: usize) -> Result<CirculantReport, CriterionError> {
    if b < 1 || b >= big_b {
        return Err(CriterionError::BadCirculant { b, big_b });
    }
    let m = circulant_matrix(b, big_b);
    let ones = vec![BigRational::one(); big_b];
    let all_ones_in_kernel = m.mul_vec(&ones).iter().all(Zero::is_zero);
    Ok(CirculantReport { b, big_b, rank: m.rank(), all_ones_in_kernel })
}

/// One free module `⊕ S(a)` at a homological position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleTwists {
    pub position: i64,
    pub twists: Vec<i64>,
}

/// `Σ_j (−1)^j dim [F_j]_N` where `S(a)` contributes `HF(N + a)`.
pub fn strand_alternating_sum(modules: &[ModuleTwists], hf: &HilbertData, n: i64) -> i64 {
    modules
        .iter()
        .map(|m| {
            let dim: i64 = m.twists.iter().map(|a| hf.at(n + a) as i64).sum();
            if m.position.rem_euclid(2) == 0 { dim } else { -dim }
        })
        .sum()
}

/// Twists of a two-periodic complex: position `2p` carries `even − pD`,
/// position `2p − 1` carries `odd − pD`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicTwists {
    pub d: i64,
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

impl PeriodicTwists {
    /// `F_{2p} = S(−pD)`, `F_{2p−1} = S(−pD + d1)`.
    pub fn pair_complex(d1: i64, d: i64) -> Self {
        PeriodicTwists { d, even: vec![0], odd: vec![d1] }
    }

    /// Twists from the matrix factorization of a degree-`d1` element in
    /// `s1` variables, as displayed for the complex built from an exact pair.
    pub fn from_factorization(s1: u32, d1: i64, d: i64) -> Self {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 0..=s1 as i64 / 2 {
            let mult = binomial_i(s1 as i64, 2 * i) as usize;
            even.extend(std::iter::repeat(i * (d1 - 2)).take(mult));
        }
        for i in 0..=(s1 as i64 - 1) / 2 {
            let mult = binomial_i(s1 as i64, 2 * i + 1) as usize;
            odd.extend(std::iter::repeat(i * (d1 - 2) + d1 - 1).take(mult));
        }
        PeriodicTwists { d, even, odd }
    }

    pub fn twists_at(&self, position: i64) -> Vec<i64> {
        let p = (position + 1).div_euclid(2);
        let base = if position.rem_euclid(2) == 0 { &self.even } else { &self.odd };
        base.iter().map(|a| a - p * self.d).collect()
    }

    /// Positions whose degree-`N` strand can be nonzero when `S` lives in
    /// degrees `0..=e`.
    pub fn support(&self, n: i64, e: i64) -> std::ops::RangeInclusive<i64> {
        let all: Vec<i64> = self.even.iter().chain(&self.odd).copied().collect();
        let (lo, hi) = (*all.iter().min().unwrap(), *all.iter().max().unwrap());
        // need 0 <= N + a - pD <= e for some twist a
        let p_min = (n + lo - e).div_euclid(self.d) - 1;
        let p_max = (n + hi).div_euclid(self.d) + 1;
        (2 * p_min - 1)..=(2 * p_max)
    }

    pub fn modules(&self, n: i64, e: i64) -> Vec<ModuleTwists> {
        self.support(n, e).map(|j| ModuleTwists { position: j, twists: self.twists_at(j) }).collect()
    }

    pub fn alternating_sum(&self, hf: &HilbertData, n: i64) -> i64 {
        strand_alternating_sum(&self.modules(n, hf.top_degree() as i64), hf, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hf(v: &[u64]) -> HilbertData {
        HilbertData::new(v.to_vec()).unwrap()
    }

    fn may4() -> HilbertData {
        hf(&[1, 5, 11, 21, 29, 28, 22, 12, 3])
    }
    fn may5() -> HilbertData {
        hf(&[1, 6, 21, 16, 6])
    }
    fn may6() -> HilbertData {
        hf(&[1, 4, 10, 20, 10, 4, 1])
    }

    #[test]
    fn sigma_profiles() {
        assert_eq!(sigma_profile(&may4(), 4).unwrap().sigma, vec![33, 33, 33, 33]);
        assert_eq!(sigma_profile(&may5(), 3).unwrap().sigma, vec![17, 12, 21]);
        assert_eq!(sigma_profile(&may6(), 4).unwrap().sigma, vec![11, 8, 11, 20]);
        assert_eq!(sigma_profile(&may4(), 0), Err(CriterionError::NonPositiveD(0)));
    }

    #[test]
    fn divisibility() {
        assert!(divides(&may4(), 4).unwrap());
        assert!(!divides(&may5(), 3).unwrap());
        assert!(divides(&may5(), 1).unwrap());
        assert!(!divides(&may6(), 4).unwrap());
    }

    #[test]
    fn screening() {
        assert!(possible_d(&may6(), &[4]).unwrap().no_pair_possible());
        assert!(possible_d(&may5(), &[3]).unwrap().no_pair_possible());
        let cube = possible_d(&hf(&[1, 3, 3, 1]), &[2, 3]).unwrap();
        assert_eq!(cube.remaining(), vec![2]);
        assert_eq!(cube.candidates[0].sigma, vec![4, 4]);
        let r = possible_d(&hf(&[1, 5, 4]), &[2]).unwrap();
        assert_eq!(r.candidates[0].sigma, vec![5, 5]);
        assert_eq!(possible_d(&may4(), &[]), Err(CriterionError::NoCandidates));
    }

    #[test]
    fn candidate_intervals() {
        assert_eq!(initial_degree(&may6()), 4);
        assert_eq!(interval_candidates(&hf(&[1, 3, 3, 1])), vec![2, 3, 4]);
        assert_eq!(interval_candidates(&may5()), vec![3, 4, 5]);
    }

    #[test]
    fn binomial_residuals() {
        for n in -10..10 {
            assert_eq!(sigma_binomial_residual(&may4(), 4, 5, n).unwrap(), 0);
        }
        // constant σ
        assert_eq!(sigma_binomial_residual(&hf(&[2, 2, 2]), 3, 4, 1).unwrap(), 0);
        // 17 − 6·21 + 15·12 − 20·17 + 15·21 − 6·12 + 17, by hand
        assert_eq!(sigma_binomial_residual(&may5(), 3, 6, 0).unwrap(), -9);
    }

    /// `gcd(x^B − 1, (1 − x)^b)` over Q by Euclid, as a degree.
    fn gcd_degree(b: usize, big_b: usize) -> usize {
        fn trim(p: &mut Vec<BigRational>) {
            while p.last().is_some_and(Zero::is_zero) {
                p.pop();
            }
        }
        let q = |n: i64| BigRational::from_integer(n.into());
        let mut a: Vec<BigRational> = (0..=big_b).map(|i| q(if i == 0 { -1 } else if i == big_b { 1 } else { 0 })).collect();
        let mut c: Vec<BigRational> = (0..=b)
            .map(|i| q((if i % 2 == 0 { 1 } else { -1 }) * binomial_i(b as i64, i as i64) as i64))
            .collect();
        trim(&mut a);
        trim(&mut c);
        while !c.is_empty() {
            let mut r = a.clone();
            while r.len() >= c.len() {
                let f = r.last().unwrap() / c.last().unwrap();
                let shift = r.len() - c.len();
                for (k, ck) in c.iter().enumerate() {
                    r[shift + k] = &r[shift + k] - &f * ck;
                }
                trim(&mut r);
                if r.is_empty() {
                    break;
                }
            }
            a = c;
            c = r;
        }
        a.len() - 1
    }

    #[test]
    fn circulants() {
        let r = circulant_kernel_check(2, 4).unwrap();
        assert_eq!((r.rank, r.all_ones_in_kernel), (3, true));
        let r = circulant_kernel_check(1, 2).unwrap();
        assert_eq!((r.rank, r.all_ones_in_kernel), (1, true));
        let r = circulant_kernel_check(5, 12).unwrap();
        assert_eq!(r.rank, 11);
        assert!(circulant_kernel_check(3, 3).is_err());
        assert_eq!(circulant_matrix(2, 4), Matrix::from_i64_rows(&Rationals, &[
            vec![1, -2, 1, 0],
            vec![0, 1, -2, 1],
            vec![1, 0, 1, -2],
            vec![-2, 1, 0, 1],
        ]));
        // rank = B − deg gcd(x^B − 1, (1 − x)^b)
        for big_b in 2..10 {
            for b in 1..big_b {
                assert_eq!(circulant_kernel_check(b, big_b).unwrap().rank, big_b - gcd_degree(b, big_b));
            }
        }
    }

    #[test]
    fn strand_sums() {
        let h = may4();
        let pair = PeriodicTwists::pair_complex(2, 4);
        let big = PeriodicTwists::from_factorization(5, 2, 4);
        assert_eq!(big.even.len(), 16);
        assert_eq!(big.odd.len(), 16);
        assert!(big.even.iter().all(|&a| a == 0) && big.odd.iter().all(|&a| a == 1));
        for n in 0..=10 {
            assert_eq!(pair.alternating_sum(&h, n), 0);
            assert_eq!(big.alternating_sum(&h, n), 0);
        }
        let two_term = [ModuleTwists { position: 0, twists: vec![0] }, ModuleTwists { position: 1, twists: vec![0] }];
        assert_eq!(strand_alternating_sum(&two_term, &h, 3), 0);
        // one shift by pD: position 2 carries twist −D
        assert_eq!(big.twists_at(2), vec![-4; 16]);
        assert_eq!(big.twists_at(-1), vec![1; 16]);
        assert_eq!(big.twists_at(1), vec![-3; 16]);
    }

    #[test]
    fn factorization_twists_track_the_binomial_residual() {
        // For σ with period D and σ_N = σ_{N+d1}, the strand sum of the
        // factorization complex is the binomial σ residual.
        for (h, d1, d) in [(may4(), 2i64, 4i64), (hf(&[1, 3, 3, 1]), 1, 2)] {
            let s1 = h.at(1) as u32;
            let t = PeriodicTwists::from_factorization(s1, d1.max(2), d);
            for n in 0..12 {
                assert_eq!(t.alternating_sum(&h, n) as i128, sigma_binomial_residual(&h, d, s1, n).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn sigma_agrees_with_division(v in proptest::collection::vec(0u64..40, 1..=20), d in 1u32..=12) {
            let mut v = v;
            if *v.last().unwrap() == 0 { *v.last_mut().unwrap() = 1; }
            let h = hf(&v);
            let p = sigma_profile(&h, d as i64).unwrap();
            prop_assert_eq!(p.is_constant(), divides_by_division(&h, d));
            prop_assert_eq!(p.sigma.iter().sum::<u64>(), h.total());
        }

        #[test]
        fn products_with_the_divisor_pass(q in proptest::collection::vec(0u64..20, 1..8), d in 1usize..8) {
            let mut v = vec![0u64; q.len() + d - 1];
            for (i, c) in q.iter().enumerate() {
                for k in 0..d { v[i + k] += c; }
            }
            while v.len() > 1 && *v.last().unwrap() == 0 { v.pop(); }
            prop_assume!(*v.last().unwrap() != 0);
            prop_assert!(divides(&hf(&v), d as i64).unwrap());
        }
    }
}
