//! Two-periodic complexes from an exact pair, and their graded strands.
//!
//! Position `2p` carries `⊕ S(a − pD)` over the even twists `a`, position
//! `2p − 1` carries `⊕ S(b − pD)` over the odd twists `b`. The differential
//! out of an even position is `φ`, out of an odd one `ψ`. Shifting `N` by `D`
//! shifts positions by two, so a window of `D` consecutive strands already
//! covers every strand.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::{FactorizationError, MatrixFactorization, PolyMatrix};
use crate::algebra::GradedAlgebra;
use crate::arith::{sparse_rank, Field, SparseVec};
use crate::criterion::PeriodicTwists;
use crate::ezd::{verify_pair, PairVerdict};
use crate::poly::{Monomial, Polynomial};

/// Where `θ2` is attached when assembling the complex from `(M, M̌)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexVariant {
    /// `φ = M`, `ψ = M̌·θ2`; odd twists are those of `G`.
    Display,
    /// `φ = M·θ2`, `ψ = M̌`; odd twists are those of `G` shifted by `d2`.
    ThetaTwoOnM,
}

impl ComplexVariant {
    pub const ALL: [ComplexVariant; 2] = [ComplexVariant::Display, ComplexVariant::ThetaTwoOnM];
}

#[derive(Debug, Clone)]
pub struct PeriodicComplex<F: Field> {
    pub variant: ComplexVariant,
    /// Whether this is `Hom_S(−, S)` of the assembled complex.
    pub dual: bool,
    pub theta1: Polynomial<F>,
    pub theta2: Polynomial<F>,
    pub d1: u32,
    pub d2: u32,
    pub even_twists: Vec<i64>,
    pub odd_twists: Vec<i64>,
    /// Even position to odd position; rows indexed like `odd_twists`.
    pub phi: PolyMatrix<F>,
    /// Odd position to even position; rows indexed like `even_twists`.
    pub psi: PolyMatrix<F>,
}

impl<F: Field> PeriodicComplex<F> {
    pub fn period(&self) -> i64 {
        (self.d1 + self.d2) as i64
    }

    pub fn twists(&self) -> PeriodicTwists {
        PeriodicTwists { d: self.period(), even: self.even_twists.clone(), odd: self.odd_twists.clone() }
    }

    pub fn rank(&self) -> usize {
        self.even_twists.len()
    }

    /// `Hom_S(−, S)`, reindexed so that it is again two-periodic.
    pub fn dual(&self) -> Self {
        let d = self.period();
        PeriodicComplex {
            variant: self.variant,
            dual: !self.dual,
            theta1: self.theta1.clone(),
            theta2: self.theta2.clone(),
            d1: self.d1,
            d2: self.d2,
            even_twists: self.even_twists.iter().map(|a| -a).collect(),
            odd_twists: self.odd_twists.iter().map(|b| d - b).collect(),
            phi: self.psi.transpose(),
            psi: self.phi.transpose(),
        }
    }

    /// Every nonzero entry has the degree forced by the twists.
    pub fn degree_audit(&self) -> Result<(), FactorizationError> {
        let d = self.period();
        for (name, m, src, tgt, shift) in [
            ("phi", &self.phi, &self.even_twists, &self.odd_twists, 0),
            ("psi", &self.psi, &self.odd_twists, &self.even_twists, d),
        ] {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let e = m.get(r, c);
                    if !e.is_zero() && e.degree().map(i64::from) != Some(tgt[r] - src[c] + shift) {
                        return Err(FactorizationError::DegreeAudit { map: name, row: r, col: c });
                    }
                }
            }
        }
        Ok(())
    }

    /// `(φψ, ψφ)` compared with `θ1θ2·I` in `P`.
    pub fn compositions_in_p(&self) -> (bool, bool) {
        let prod = self.theta1.mul(&self.theta2).expect("same ring");
        (
            self.phi.mul(&self.psi) == PolyMatrix::scalar(&prod, self.phi.rows()),
            self.psi.mul(&self.phi) == PolyMatrix::scalar(&prod, self.psi.rows()),
        )
    }

    /// Whether `φψ` and `ψφ` vanish entrywise in `S`.
    pub fn compositions_vanish_in_s(&self, alg: &GradedAlgebra<F>) -> Result<bool, FactorizationError> {
        for m in [self.phi.mul(&self.psi), self.psi.mul(&self.phi)] {
            for e in m.entries() {
                if !alg.is_zero(e)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Assembles the periodic complex of an exact pair `(θ1, θ2)` from the
/// factorization of `θ1`.
pub fn build_periodic_complex<F: Field>(
    alg: &GradedAlgebra<F>,
    mf: &MatrixFactorization<F>,
    theta2: &Polynomial<F>,
    variant: ComplexVariant,
) -> Result<PeriodicComplex<F>, FactorizationError> {
    let report = verify_pair(alg, &mf.theta, theta2)?;
    if let PairVerdict::NotPair { reason } = &report.verdict {
        return Err(FactorizationError::PairNotExact {
            theta1: mf.theta.render(),
            theta2: theta2.render(),
            reason: reason.clone(),
        });
    }
    let d2 = report.d2;
    let (phi, psi, odd_twists) = match variant {
        ComplexVariant::Display => (mf.m.clone(), mf.mcheck.scale_by(theta2), mf.twists_g.clone()),
        ComplexVariant::ThetaTwoOnM => {
            (mf.m.scale_by(theta2), mf.mcheck.clone(), mf.twists_g.iter().map(|b| b + d2 as i64).collect())
        }
    };
    let pc = PeriodicComplex {
        variant,
        dual: false,
        theta1: mf.theta.clone(),
        theta2: theta2.clone(),
        d1: mf.d,
        d2,
        even_twists: mf.twists_f.clone(),
        odd_twists,
        phi,
        psi,
    };
    pc.degree_audit()?;
    if pc.compositions_in_p() != (true, true) {
        return Err(FactorizationError::IdentityFailed("phi*psi or psi*phi differs from theta1*theta2*I".into()));
    }
    Ok(pc)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositionCheck {
    pub position: i64,
    pub dim: usize,
    /// Rank of the differential leaving this position.
    pub rank_out: usize,
    /// Rank of the differential arriving at this position.
    pub rank_in: usize,
    pub composition_zero: bool,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrandReport {
    pub n: i64,
    pub positions: Vec<PositionCheck>,
    pub alternating_sum: i64,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub dual: bool,
    pub n: i64,
    pub position: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub variant: ComplexVariant,
    pub window: (i64, i64),
    pub warning: Option<String>,
    pub strands: Vec<StrandReport>,
    pub dual_strands: Vec<StrandReport>,
    pub all_exact: bool,
    pub alternating_sums_zero: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    /// `φ` from the even twists to the odd twists.
    Phi,
    /// `ψ` from the odd twists shifted by `−D` to the even twists.
    Psi,
    /// `φψ` from the odd twists shifted by `−D` to the odd twists.
    PhiPsi,
    /// `ψφ` from the even twists to the even twists shifted by `+D`.
    PsiPhi,
}

/// `(kind, m)` such that the map leaving position `j` in strand `N` is the
/// position-0 map of that kind in strand `m`.
fn out_key(j: i64, n: i64, d: i64) -> (Kind, i64) {
    if j.rem_euclid(2) == 0 {
        (Kind::Phi, n - (j / 2) * d)
    } else {
        let p = (j + 1).div_euclid(2);
        (Kind::Psi, n - (p - 1) * d)
    }
}

fn composition_key(j: i64, n: i64, d: i64) -> (Kind, i64) {
    if j.rem_euclid(2) == 0 {
        (Kind::PhiPsi, n - (j / 2) * d)
    } else {
        let p = (j + 1).div_euclid(2);
        (Kind::PsiPhi, n - p * d)
    }
}

struct Strands<'a, F: Field> {
    alg: &'a GradedAlgebra<F>,
    std: Vec<Vec<Monomial>>,
    e: i64,
}

struct MapData<F: Field> {
    matrix: PolyMatrix<F>,
    src: Vec<i64>,
    tgt: Vec<i64>,
}

impl<F: Field> Strands<'_, F> {
    fn hf(&self, i: i64) -> usize {
        if (0..=self.e).contains(&i) {
            self.std[i as usize].len()
        } else {
            0
        }
    }

    /// Images of the basis of `⊕[S]_{m+src}` in `⊕[S]_{m+tgt}`, as sparse vectors.
    fn images(&self, map: &MapData<F>, m: i64) -> (Vec<SparseVec<F>>, usize) {
        let mut offsets = Vec::with_capacity(map.tgt.len());
        let mut total = 0;
        for &b in &map.tgt {
            offsets.push(total);
            total += self.hf(m + b);
        }
        let mut out = Vec::new();
        for (k, &a) in map.src.iter().enumerate() {
            let s = m + a;
            if !(0..=self.e).contains(&s) {
                continue;
            }
            for mu in &self.std[s as usize] {
                let mut v: SparseVec<F> = Vec::new();
                for (l, &b) in map.tgt.iter().enumerate() {
                    let t = m + b;
                    let entry = map.matrix.get(l, k);
                    if entry.is_zero() || !(0..=self.e).contains(&t) {
                        continue;
                    }
                    let coords = self.alg.reduce_terms(t as u32, entry.terms().map(|(x, c)| (x.mul(mu), c)));
                    let f = self.alg.field();
                    v.extend(coords.into_iter().enumerate().filter(|(_, c)| !f.is_zero(c)).map(|(i, c)| (offsets[l] + i, c)));
                }
                out.push(v);
            }
        }
        (out, total)
    }
}

enum Value {
    Rank(usize),
    Zero(bool),
}

fn strand_reports<F: Field>(st: &Strands<'_, F>, pc: &PeriodicComplex<F>, window: (i64, i64)) -> Vec<StrandReport> {
    let d = pc.period();
    let twists = pc.twists();
    let dims = |j: i64, n: i64| twists.twists_at(j).iter().map(|a| st.hf(n + a)).sum::<usize>();
    let odd_minus_d: Vec<i64> = pc.odd_twists.iter().map(|b| b - d).collect();
    let even_plus_d: Vec<i64> = pc.even_twists.iter().map(|a| a + d).collect();
    let maps: HashMap<Kind, MapData<F>> = [
        (Kind::Phi, MapData { matrix: pc.phi.clone(), src: pc.even_twists.clone(), tgt: pc.odd_twists.clone() }),
        (Kind::Psi, MapData { matrix: pc.psi.clone(), src: odd_minus_d.clone(), tgt: pc.even_twists.clone() }),
        (Kind::PhiPsi, MapData { matrix: pc.phi.mul(&pc.psi), src: odd_minus_d, tgt: pc.odd_twists.clone() }),
        (Kind::PsiPhi, MapData { matrix: pc.psi.mul(&pc.phi), src: pc.even_twists.clone(), tgt: even_plus_d }),
    ]
    .into_iter()
    .collect();

    let layout: Vec<(i64, Vec<(i64, usize)>)> = (window.0..=window.1)
        .map(|n| (n, twists.support(n, st.e).map(|j| (j, dims(j, n))).filter(|&(_, dim)| dim > 0).collect()))
        .collect();
    let mut keys = BTreeSet::new();
    for (n, positions) in &layout {
        for &(j, _) in positions {
            keys.insert(out_key(j, *n, d));
            keys.insert(out_key(j + 1, *n, d));
            keys.insert(composition_key(j, *n, d));
        }
    }
    let keys: Vec<(Kind, i64)> = keys.into_iter().collect();
    let values: HashMap<(Kind, i64), Value> = keys
        .par_iter()
        .map(|&(kind, m)| {
            let (rows, ncols) = st.images(&maps[&kind], m);
            let v = match kind {
                Kind::Phi | Kind::Psi => Value::Rank(sparse_rank(st.alg.field(), ncols, &rows)),
                Kind::PhiPsi | Kind::PsiPhi => Value::Zero(rows.iter().all(Vec::is_empty)),
            };
            ((kind, m), v)
        })
        .collect();
    let rank = |k| match values[&k] {
        Value::Rank(r) => r,
        Value::Zero(_) => unreachable!(),
    };
    let zero = |k| match values[&k] {
        Value::Zero(z) => z,
        Value::Rank(_) => unreachable!(),
    };

    layout
        .into_iter()
        .map(|(n, positions)| {
            let checks: Vec<PositionCheck> = positions
                .into_iter()
                .map(|(j, dim)| {
                    let rank_out = rank(out_key(j, n, d));
                    let rank_in = rank(out_key(j + 1, n, d));
                    let composition_zero = zero(composition_key(j, n, d));
                    PositionCheck { position: j, dim, rank_out, rank_in, composition_zero, exact: composition_zero && dim - rank_out == rank_in }
                })
                .collect();
            let alternating_sum =
                checks.iter().map(|c| if c.position.rem_euclid(2) == 0 { c.dim as i64 } else { -(c.dim as i64) }).sum();
            let exact = checks.iter().all(|c| c.exact);
            StrandReport { n, positions: checks, alternating_sum, exact }
        })
        .collect()
}

/// Realizes every strand `N` in the window (and every strand of the dual) as
/// exact linear maps and compares kernels with images. The default window is
/// `[0, e + D]`; requested windows are clamped to `[0, e + D + max |twist|]`.
pub fn check_strand_exactness<F: Field>(
    alg: &GradedAlgebra<F>,
    pc: &PeriodicComplex<F>,
    window: Option<(i64, i64)>,
) -> ExactnessReport {
    let e = alg.top_degree() as i64;
    let d = pc.period();
    let max_twist = pc.even_twists.iter().chain(&pc.odd_twists).map(|a| a.abs()).max().unwrap_or(0);
    let limit = e + d + max_twist;
    let (window, warning) = match window {
        None => ((0, e + d), None),
        Some((lo, hi)) => {
            let clamped = (lo.max(0), hi.min(limit));
            let warning = (clamped != (lo, hi)).then(|| {
                format!("window [{lo}, {hi}] clamped to [{}, {}] (Artinian support)", clamped.0, clamped.1)
            });
            (clamped, warning)
        }
    };
    let st = Strands { alg, std: (0..=e as u32).map(|i| alg.standard_monomials(i)).collect(), e };
    let strands = strand_reports(&st, pc, window);
    let dual_strands = strand_reports(&st, &pc.dual(), window);
    let witness = strands
        .iter()
        .map(|s| (false, s))
        .chain(dual_strands.iter().map(|s| (true, s)))
        .find_map(|(dual, s)| s.positions.iter().find(|c| !c.exact).map(|c| Witness { dual, n: s.n, position: c.position }));
    let all_exact = witness.is_none();
    let alternating_sums_zero = strands.iter().chain(&dual_strands).all(|s| s.alternating_sum == 0);
    ExactnessReport { variant: pc.variant, window, warning, strands, dual_strands, all_exact, alternating_sums_zero, witness }
}
