//! Closed-form Hilbert data: compressed level algebras, Artinian reductions
//! of determinantal rings, Eulerian polynomials and the Segre products of
//! projective lines.

mod ideals;

pub use ideals::{generic_matrix, minors_ideal, segre_cube_quadrics};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{random_artinian_reduction, AlgebraError, AlgebraSpec};
use crate::arith::{binomial, binomial_i, PrimeField, DEFAULT_PRIME};
use crate::criterion::{initial_degree, possible_d, HilbertData, ScreeningReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("parameters must be positive: c = {c}, e = {e}, r = {r}")]
    NonPositive { c: u64, e: u64, r: u64 },
    #[error("need 2 <= r <= c, got r = {r}, c = {c}")]
    BadDeterminantal { r: u64, c: u64 },
    #[error("need 1 <= a <= b, got a = {a}, b = {b}")]
    BadNab { a: u64, b: u64 },
    #[error("need s >= 1, got {0}")]
    BadSegre(u64),
    #[error("direct Segre construction is only provided for s = 3, got {0}")]
    SegreTooLarge(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CompressedParams {
    pub c: u64,
    pub e: u64,
    pub r: u64,
}

impl CompressedParams {
    pub fn new(c: u64, e: u64, r: u64) -> Result<Self, CatalogError> {
        if c == 0 || e == 0 || r == 0 {
            return Err(CatalogError::NonPositive { c, e, r });
        }
        Ok(CompressedParams { c, e, r })
    }

    /// The hypotheses under which no homogeneous exact zero divisor exists:
    /// `r = 1, 2 <= e != 3, c >= 3`, or `c, e, r >= 2` with `(c, e, r) != (c, 2, c − 1)`.
    pub fn in_no_ezd_family(&self) -> bool {
        let CompressedParams { c, e, r } = *self;
        let first = r == 1 && e >= 2 && e != 3 && c >= 3;
        let second = c >= 2 && e >= 2 && r >= 2 && !(e == 2 && r == c - 1);
        first || second
    }
}

fn dim_p(c: u64, i: u64) -> u128 {
    binomial(i + c - 1, c - 1).expect("binomial overflow")
}

/// `HF(i) = min(dim [P]_i, r · dim [P]_{e−i})` for `0 <= i <= e`.
pub fn compressed_hf(p: CompressedParams) -> HilbertData {
    let hf = (0..=p.e)
        .map(|i| dim_p(p.c, i).min(p.r as u128 * dim_p(p.c, p.e - i)) as u64)
        .collect();
    HilbertData::new(hf).expect("top value is min(dim P_e, r) > 0")
}

/// Screens every `D` in `[n, e + 1]`, `n` the initial degree of the ideal.
pub fn compressed_screen(p: CompressedParams) -> ScreeningReport {
    let hf = compressed_hf(p);
    let n = initial_degree(&hf).max(1);
    let candidates: Vec<u32> = (n..=p.e as u32 + 1).collect();
    possible_d(&hf, &candidates).expect("nonempty candidates")
}

/// `HF(i) = C(r−1, i)·C(c−1, i)` for the Artinian reduction of the ring of
/// `2 × 2` minors of a generic `r × c` matrix.
pub fn determinantal_hs(r: u64, c: u64) -> Result<HilbertData, CatalogError> {
    if r < 2 || r > c {
        return Err(CatalogError::BadDeterminantal { r, c });
    }
    let hf = (0..r).map(|i| (binomial_i(r as i64 - 1, i as i64) * binomial_i(c as i64 - 1, i as i64)) as u64).collect();
    Ok(HilbertData::new(hf).expect("positive top coefficient"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NabReport {
    pub a: u64,
    pub b: u64,
    /// `Σ_i (−1)^i C(a, i) C(b, i)`.
    pub signed_sum: i128,
    pub value: u128,
    /// The closed form when `b − a <= 3`.
    pub closed_form: Option<u128>,
}

/// `C(a, num/2)` for an even `num`; zero when `num < 0`.
fn half_binomial(a: u64, num: i64) -> i128 {
    binomial_i(a as i64, num.div_euclid(2))
}

/// The closed forms of `N_{a, a+k}` for `k <= 3`.
pub fn n_ab_closed_form(a: u64, b: u64) -> Option<u128> {
    let odd = a % 2 == 1;
    let ai = a as i64;
    let v: i128 = match (b.checked_sub(a)?, odd) {
        (0, true) => 0,
        (0, false) => half_binomial(a, ai),
        (1, true) => half_binomial(a, ai - 1),
        (1, false) => half_binomial(a, ai),
        (2, true) => 2 * half_binomial(a, ai - 1),
        (2, false) => half_binomial(a, ai) - half_binomial(a, ai - 2),
        (3, true) => 3 * half_binomial(a, ai - 1) - half_binomial(a, ai - 3),
        (3, false) => (half_binomial(a, ai) - 3 * half_binomial(a, ai - 2)).abs(),
        _ => return None,
    };
    Some(v as u128)
}

/// `N_{a,b} = |Σ_{i=0}^a (−1)^i C(a, i) C(b, i)|`, checked against the closed
/// form whenever `b − a <= 3`.
pub fn n_ab(a: u64, b: u64) -> Result<NabReport, CatalogError> {
    if a < 1 || a > b {
        return Err(CatalogError::BadNab { a, b });
    }
    let signed_sum: i128 = (0..=a as i64)
        .map(|i| (if i % 2 == 0 { 1 } else { -1 }) * binomial_i(a as i64, i) * binomial_i(b as i64, i))
        .sum();
    let value = signed_sum.unsigned_abs();
    let closed_form = n_ab_closed_form(a, b);
    if let Some(cf) = closed_form {
        assert_eq!(cf, value, "closed form disagrees with the alternating sum for N_{{{a},{b}}}");
    }
    Ok(NabReport { a, b, signed_sum, value, closed_form })
}

/// Coefficients of `A_s(t)` in degrees `0..=s`, by the descent recurrence
/// `A(s,k) = k·A(s−1,k) + (s−k+1)·A(s−1,k−1)`.
pub fn eulerian_polynomial(s: u64) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 1..=s {
        let mut next = vec![BigInt::zero(); n as usize + 1];
        for k in 1..=n as usize {
            let keep = row.get(k).map_or(BigInt::zero(), |x| x * k);
            let grow = row.get(k - 1).map_or(BigInt::zero(), |x| x * (n as usize - k + 1));
            next[k] = keep + grow;
        }
        row = next;
    }
    row
}

/// `(1 − t)^{s+1} · Σ_{i<=T} i^s t^i`, truncated to degree `T`.
pub fn eulerian_by_series(s: u64, terms: usize) -> Vec<BigInt> {
    let series: Vec<BigInt> =
        (0..=terms).map(|i| if s == 0 { BigInt::one() } else { BigInt::from(i).pow(s as u32) }).collect();
    let factor: Vec<BigInt> = (0..=s + 1)
        .map(|j| BigInt::from(binomial_i(s as i64 + 1, j as i64)) * if j % 2 == 0 { 1 } else { -1 })
        .collect();
    (0..=terms)
        .map(|n| (0..=n.min(s as usize + 1)).map(|j| &factor[j] * &series[n - j]).sum())
        .collect()
}

/// `E_0..=E_{up_to}` from `2E_{s+1} = Σ_k C(s,k) E_k E_{s−k}`, `E_0 = E_1 = 1`.
pub fn euler_numbers(up_to: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::one(), BigInt::one()];
    for s in 1..up_to {
        let sum: BigInt = (0..=s).map(|k| BigInt::from(binomial_i(s as i64, k as i64)) * &e[k] * &e[s - k]).sum();
        e.push(sum / 2);
    }
    e.truncate(up_to + 1);
    e
}

/// `p(−1)` for a coefficient list.
pub fn value_at_minus_one(coeffs: &[BigInt]) -> BigInt {
    coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c }).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegreData {
    pub s: u64,
    pub hf: Vec<u64>,
    /// `HS(−1) = −A_s(−1)`.
    pub value_at_minus_one: i64,
}

/// Hilbert data of an Artinian reduction of the Segre product of `s` lines:
/// `HS(t) = A_s(t)/t`.
pub fn segre_hs(s: u64) -> Result<SegreData, CatalogError> {
    if s == 0 {
        return Err(CatalogError::BadSegre(s));
    }
    let a = eulerian_polynomial(s);
    let hf: Vec<u64> = a[1..].iter().map(|x| x.to_u64().expect("Eulerian number fits in u64")).collect();
    let value = -value_at_minus_one(&a);
    Ok(SegreData { s, hf, value_at_minus_one: value.to_i64().expect("fits") })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegreCheck {
    pub generators: usize,
    pub quadric_min_gens: usize,
    pub hf: Vec<u64>,
    pub expected: Vec<u64>,
    pub gorenstein: bool,
    pub socle_type: usize,
    pub seed: u64,
    pub value_at_minus_one: i64,
    pub screen: ScreeningReport,
}

impl SegreCheck {
    pub fn passed(&self) -> bool {
        self.quadric_min_gens == 9
            && self.hf == self.expected
            && self.gorenstein
            && self.value_at_minus_one != 0
            && self.screen.no_pair_possible()
    }
}

/// Builds the Segre cube ideal, reduces by four random linear forms over
/// `F_32003`, and compares with [`segre_hs`].
pub fn segre_direct_check(s: u64, seed: u64) -> Result<SegreCheck, CatalogError> {
    if s != 3 {
        return Err(CatalogError::SegreTooLarge(s));
    }
    let f = PrimeField::new(DEFAULT_PRIME).expect("prime");
    let spec: AlgebraSpec<PrimeField> = segre_cube_quadrics(&f)?;
    let quadric_min_gens = crate::algebra::min_gen_degrees_up_to(&spec, 2).iter().filter(|&&d| d == 2).count();
    let red = random_artinian_reduction(&spec, s as usize + 1, seed)?;
    let alg = &red.algebra;
    let hf = HilbertData::of(alg);
    let socle = alg.socle();
    let expected = segre_hs(s)?;
    let degrees: Vec<u32> = alg.min_gen_degrees();
    let screen = possible_d(&hf, &degrees).expect("generators exist");
    Ok(SegreCheck {
        generators: spec.generators().len(),
        quadric_min_gens,
        value_at_minus_one: hf.value_at_minus_one(),
        hf: hf.hf,
        expected: expected.hf,
        gorenstein: socle.gorenstein,
        socle_type: socle.socle_type,
        seed: red.seed,
        screen,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::divides;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn compressed_examples() {
        let hf = |c, e, r| compressed_hf(CompressedParams::new(c, e, r).unwrap()).hf;
        assert_eq!(hf(3, 3, 1), vec![1, 3, 3, 1]);
        assert_eq!(hf(4, 2, 3), vec![1, 4, 3]);
        assert_eq!(hf(3, 5, 1), vec![1, 3, 6, 6, 3, 1]);
        assert_eq!(hf(3, 6, 1), vec![1, 3, 6, 10, 6, 3, 1]);
        assert_eq!(hf(4, 6, 1), vec![1, 4, 10, 20, 10, 4, 1]);
        assert_eq!(hf(3, 4, 1), vec![1, 3, 6, 3, 1]);
        assert!(CompressedParams::new(0, 1, 1).is_err());
    }

    #[test]
    fn compressed_screens() {
        let screen = |c, e, r| compressed_screen(CompressedParams::new(c, e, r).unwrap());
        let r = screen(3, 4, 1);
        assert!(r.no_pair_possible());
        assert_eq!(r.candidates.iter().map(|v| v.d).collect::<Vec<_>>(), vec![3, 4, 5]);
        assert_eq!(screen(3, 3, 1).remaining(), vec![2]);
        assert_eq!(screen(4, 2, 3).remaining(), vec![2]);
        assert!(screen(2, 4, 1).remaining().contains(&3));
        assert!(screen(4, 6, 1).no_pair_possible());
    }

    #[test]
    fn compressed_gorenstein_is_palindromic() {
        for c in 1..=6 {
            for e in 1..=10 {
                let hf = compressed_hf(CompressedParams::new(c, e, 1).unwrap()).hf;
                let mut rev = hf.clone();
                rev.reverse();
                assert_eq!(hf, rev, "c = {c}, e = {e}");
            }
        }
    }

    #[test]
    fn determinantal_series() {
        assert_eq!(determinantal_hs(2, 3).unwrap().hf, vec![1, 2]);
        assert_eq!(determinantal_hs(3, 3).unwrap().hf, vec![1, 4, 1]);
        assert_eq!(determinantal_hs(3, 3).unwrap().value_at_minus_one(), -2);
        assert!(!divides(&determinantal_hs(3, 3).unwrap(), 2).unwrap());
        assert!(determinantal_hs(4, 3).is_err() && determinantal_hs(1, 3).is_err());
        // HS(−1) is the signed sum of N_{r−1, c−1}
        for r in 2..=8 {
            for c in r..=12 {
                let h = determinantal_hs(r, c).unwrap();
                assert_eq!(h.value_at_minus_one() as i128, n_ab(r - 1, c - 1).unwrap().signed_sum);
            }
        }
    }

    #[test]
    fn nab_values() {
        assert_eq!(n_ab(3, 3).unwrap().value, 0);
        assert_eq!(n_ab(4, 4).unwrap().value, 6);
        let r = n_ab(2, 3).unwrap();
        assert_eq!((r.signed_sum, r.value, r.closed_form), (-2, 2, Some(2)));
        assert_eq!(n_ab(1, 4).unwrap().value, 3);
        assert_eq!(n_ab(2, 4).unwrap().value, 1);
        assert_eq!(n_ab(2, 9).unwrap().closed_form, None);
        assert!(n_ab(0, 3).is_err() && n_ab(4, 3).is_err());
    }

    /// Coefficient of `x^a` in `(x − 1)^a (x + 1)^b`, by expanding the product.
    fn coefficient_oracle(a: u64, b: u64) -> i128 {
        let mut poly = vec![1i128];
        let mut times = |root: i128| {
            let mut next = vec![0i128; poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] += root * c;
            }
            poly = next;
        };
        for _ in 0..a {
            times(-1);
        }
        for _ in 0..b {
            times(1);
        }
        poly[a as usize]
    }

    #[test]
    fn nab_matches_the_product_expansion() {
        for a in 1..=12 {
            for b in a..=a + 20 {
                assert_eq!(n_ab(a, b).unwrap().value, coefficient_oracle(a, b).unsigned_abs(), "a = {a}, b = {b}");
            }
        }
    }

    #[test]
    fn nab_zero_implies_divisibility() {
        for a in 1..=10u64 {
            let fact: u128 = (1..=a as u128).product();
            for b in a..=40 {
                if n_ab(a, b).unwrap().value == 0 {
                    assert_eq!(fact % b as u128, 0, "a = {a}, b = {b}");
                }
            }
        }
    }

    #[test]
    fn eulerian_table() {
        assert_eq!(eulerian_polynomial(0), big(&[1]));
        assert_eq!(eulerian_polynomial(1), big(&[0, 1]));
        assert_eq!(eulerian_polynomial(2), big(&[0, 1, 1]));
        assert_eq!(eulerian_polynomial(3), big(&[0, 1, 4, 1]));
        assert_eq!(eulerian_polynomial(4), big(&[0, 1, 11, 11, 1]));
        assert_eq!(eulerian_polynomial(5), big(&[0, 1, 26, 66, 26, 1]));
        for s in 0..=10u64 {
            let a = eulerian_polynomial(s);
            let fact: BigInt = (1..=s).map(BigInt::from).product();
            assert_eq!(a.iter().sum::<BigInt>(), fact);
            let mut series = eulerian_by_series(s, 12);
            let mut padded = a.clone();
            padded.resize(13, BigInt::zero());
            series.resize(13, BigInt::zero());
            assert_eq!(series, padded, "s = {s}");
        }
    }

    #[test]
    fn euler_numbers_and_alternating_values() {
        assert_eq!(euler_numbers(7), big(&[1, 1, 1, 2, 5, 16, 61, 272]));
        assert_eq!(euler_numbers(0), big(&[1]));
        let e = euler_numbers(9);
        for s in 1..=9u64 {
            let v = value_at_minus_one(&eulerian_polynomial(s));
            if s % 2 == 1 {
                let sign = if s.div_ceil(2) % 2 == 0 { 1 } else { -1 };
                assert_eq!(v, &e[s as usize] * sign, "s = {s}");
            } else {
                assert!(v.is_zero());
            }
        }
        assert!(e.iter().all(|x| *x > BigInt::zero()));
    }

    #[test]
    fn segre_series() {
        let s3 = segre_hs(3).unwrap();
        assert_eq!((s3.hf.clone(), s3.value_at_minus_one), (vec![1, 4, 1], -2));
        let s5 = segre_hs(5).unwrap();
        assert_eq!((s5.hf.clone(), s5.value_at_minus_one), (vec![1, 26, 66, 26, 1], 16));
        assert_eq!(segre_hs(2).unwrap().value_at_minus_one, 0);
        assert!(segre_hs(0).is_err());
        for s in (3..=9).step_by(2) {
            let d = segre_hs(s).unwrap();
            assert_eq!(BigInt::from(d.value_at_minus_one.abs()), euler_numbers(s as usize)[s as usize]);
            assert!(!divides(&HilbertData::new(d.hf).unwrap(), 2).unwrap());
        }
    }

    #[test]
    fn segre_from_first_principles() {
        let r = segre_direct_check(3, 1).unwrap();
        assert_eq!(r.generators, 9);
        assert_eq!(r.quadric_min_gens, 9);
        assert_eq!(r.hf, vec![1, 4, 1]);
        assert!(r.gorenstein && r.socle_type == 1);
        assert_eq!(r.value_at_minus_one, -2);
        assert!(r.passed());
        assert!(segre_direct_check(5, 1).is_err());
    }
}
