//! Graded quotients `S = P/I` realized degree by degree.
//!
//! `[I]_d` is the span of `x_i · [I]_{d-1}` together with the generators of
//! degree `d`; it is kept as a fully interreduced echelon basis in the
//! grevlex-descending monomial basis of `[P]_d`. Pivot monomials are leading
//! monomials of `[I]_d`, the remaining ones are standard and form a basis of
//! `[S]_d`. Since `I` is homogeneous no Gröbner basis is needed.

mod reduce;
mod specfile;

pub use reduce::{random_artinian_reduction, random_linear_forms, reduce_linear, ArtinianReduction};
pub use specfile::{parse_spec_file, SpecFile};

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::{Echelon, Field, Matrix, SparseVec};
use crate::poly::{monomials_of_degree, Monomial, PolyError, Polynomial, VariableSet};

pub const DEFAULT_MAX_DEGREE: u32 = 60;
pub const DEFAULT_RETRIES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("line {line}: {msg}")]
    Spec { line: usize, msg: String },
    #[error("algebra is not Artinian within degree bound {bound}")]
    NotArtinianWithinBound { bound: u32 },
    #[error("generator `{0}` has degree one; eliminate it with a `reduce` form instead")]
    LinearGeneratorPresent(String),
    #[error("generator is the zero polynomial")]
    ZeroGenerator,
    #[error("`{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("`{0}` is zero in the algebra")]
    ZeroInAlgebra(String),
    #[error("`{0}` must have positive degree")]
    ConstantElement(String),
    #[error("`{0}` is not a linear form")]
    NotLinear(String),
    #[error("linear form {index} is dependent on the earlier forms")]
    DependentForms { index: usize },
    #[error("no Artinian reduction found; seeds tried: {seeds:?}")]
    RetryLimit { seeds: Vec<u64> },
    #[error("polynomial does not belong to the algebra's ring")]
    RingMismatch,
}

/// Presentation of `P/I`: field, variables and homogeneous generators.
#[derive(Debug, Clone)]
pub struct AlgebraSpec<F: Field> {
    field: F,
    vars: Arc<VariableSet>,
    generators: Vec<Polynomial<F>>,
    max_degree: u32,
}

impl<F: Field> AlgebraSpec<F> {
    pub fn new(field: &F, vars: &Arc<VariableSet>, generators: Vec<Polynomial<F>>) -> Result<Self, AlgebraError> {
        for g in &generators {
            if g.vars() != vars || g.field() != field {
                return Err(AlgebraError::RingMismatch);
            }
            if g.is_zero() {
                return Err(AlgebraError::ZeroGenerator);
            }
            if g.degree().is_none() {
                return Err(AlgebraError::NotHomogeneous(g.render()));
            }
            if g.degree() == Some(0) {
                return Err(AlgebraError::ConstantElement(g.render()));
            }
        }
        Ok(AlgebraSpec { field: field.clone(), vars: vars.clone(), generators, max_degree: DEFAULT_MAX_DEGREE })
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse(field: &F, names: &[&str], generators: &[&str]) -> Result<Self, AlgebraError> {
        let vars = VariableSet::new(names)?;
        let gens = generators
            .iter()
            .map(|g| crate::poly::parse_polynomial(g, &vars, field))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, &vars, gens)
    }

    pub fn with_max_degree(mut self, bound: u32) -> Self {
        self.max_degree = bound;
        self
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

/// Linear algebra of one graded piece.
#[derive(Debug, Clone)]
struct Piece<F: Field> {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: Echelon<F>,
    /// For each column: its position among the standard monomials, if standard.
    std_pos: Vec<Option<usize>>,
    standard: Vec<usize>,
    /// Normal forms of pivot monomials, sparse over standard positions.
    reduced: Vec<Option<SparseVec<F>>>,
    min_gens: usize,
}

impl<F: Field> Piece<F> {
    fn hf(&self) -> usize {
        self.standard.len()
    }
}

/// Degree-by-degree builder shared by the Artinian and truncated routes.
struct Builder<F: Field> {
    spec: AlgebraSpec<F>,
    pieces: Vec<Piece<F>>,
}

impl<F: Field> Builder<F> {
    fn new(spec: AlgebraSpec<F>) -> Self {
        Builder { spec, pieces: Vec::new() }
    }

    fn next_degree(&mut self) {
        let d = self.pieces.len() as u32;
        let f = self.spec.field.clone();
        let n = self.spec.nvars();
        let monomials = monomials_of_degree(n, d);
        let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ideal = Echelon::new(&f, monomials.len());
        if let Some(prev) = self.pieces.last() {
            'outer: for row in prev.ideal.rows() {
                for i in 0..n {
                    let mut v: SparseVec<F> = row
                        .iter()
                        .map(|(c, x)| (index[&prev.monomials[*c].mul_var(i)], x.clone()))
                        .collect();
                    v.sort_by_key(|(c, _)| *c);
                    ideal.insert(&v);
                    if ideal.is_full() {
                        break 'outer;
                    }
                }
            }
        }
        let before = ideal.rank();
        for g in self.spec.generators.iter().filter(|g| g.degree() == Some(d)) {
            let mut v: SparseVec<F> = g.terms().map(|(m, c)| (index[m], c.clone())).collect();
            v.sort_by_key(|(c, _)| *c);
            ideal.insert(&v);
        }
        let min_gens = ideal.rank() - before;
        ideal.interreduce();
        let standard = ideal.free_columns();
        let mut std_pos = vec![None; monomials.len()];
        for (k, &c) in standard.iter().enumerate() {
            std_pos[c] = Some(k);
        }
        let mut reduced = vec![None; monomials.len()];
        for c in 0..monomials.len() {
            if let Some(row) = ideal.row_for_pivot(c) {
                let nf: SparseVec<F> =
                    row.iter().skip(1).map(|(cc, x)| (std_pos[*cc].expect("interreduced"), f.neg(x))).collect();
                reduced[c] = Some(nf);
            }
        }
        self.pieces.push(Piece { monomials, index, ideal, std_pos, standard, reduced, min_gens });
    }
}

/// The Artinian algebra `S = P/I` with its graded pieces `0..=e+1`.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<F: Field> {
    spec: AlgebraSpec<F>,
    pieces: Vec<Piece<F>>,
    hilbert: Vec<usize>,
}

/// Build `P/I` up to its top degree.
pub fn build_algebra<F: Field>(spec: &AlgebraSpec<F>) -> Result<GradedAlgebra<F>, AlgebraError> {
    if let Some(g) = spec.generators.iter().find(|g| g.degree() == Some(1)) {
        return Err(AlgebraError::LinearGeneratorPresent(g.render()));
    }
    let mut b = Builder::new(spec.clone());
    loop {
        let d = b.pieces.len() as u32;
        if d > spec.max_degree {
            return Err(AlgebraError::NotArtinianWithinBound { bound: spec.max_degree });
        }
        b.next_degree();
        if b.pieces.last().unwrap().hf() == 0 {
            break;
        }
    }
    let hilbert = b.pieces.iter().map(Piece::hf).take_while(|&h| h > 0).collect();
    Ok(GradedAlgebra { spec: b.spec, pieces: b.pieces, hilbert })
}

/// Degrees of a minimal generating set of `I` among degrees `0..=max_degree`,
/// without requiring `P/I` to be Artinian.
pub fn min_gen_degrees_up_to<F: Field>(spec: &AlgebraSpec<F>, max_degree: u32) -> Vec<u32> {
    let mut b = Builder::new(spec.clone());
    for _ in 0..=max_degree {
        b.next_degree();
    }
    expand_counts(b.pieces.iter().map(|p| p.min_gens))
}

fn expand_counts(counts: impl Iterator<Item = usize>) -> Vec<u32> {
    counts.enumerate().flat_map(|(d, k)| std::iter::repeat(d as u32).take(k)).collect()
}

/// Socle dimensions per degree with the derived type flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleData {
    pub per_degree: Vec<usize>,
    pub socle_type: usize,
    pub level: bool,
    pub gorenstein: bool,
}

/// Normal form of one monomial.
enum MonoNf<'a, F: Field> {
    Standard(usize),
    Reduced(&'a SparseVec<F>),
    Zero,
}

impl<F: Field> GradedAlgebra<F> {
    pub fn spec(&self) -> &AlgebraSpec<F> {
        &self.spec
    }

    pub fn field(&self) -> &F {
        &self.spec.field
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.spec.vars
    }

    pub fn nvars(&self) -> usize {
        self.spec.nvars()
    }

    /// `HF(0..=e)`.
    pub fn hilbert_function(&self) -> &[usize] {
        &self.hilbert
    }

    /// `dim [S]_d`, zero outside `0..=e`.
    pub fn hf(&self, d: i64) -> usize {
        usize::try_from(d).ok().and_then(|d| self.hilbert.get(d)).copied().unwrap_or(0)
    }

    /// Top socle degree.
    pub fn top_degree(&self) -> u32 {
        self.hilbert.len() as u32 - 1
    }

    pub fn dimension(&self) -> usize {
        self.hilbert.iter().sum()
    }

    /// Standard monomials of degree `d`, a basis of `[S]_d`.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        match self.pieces.get(d as usize) {
            Some(p) => p.standard.iter().map(|&c| p.monomials[c].clone()).collect(),
            None => Vec::new(),
        }
    }

    /// `rank [I]_d` inside `[P]_d`, for `d <= e + 1`.
    pub fn ideal_rank(&self, d: u32) -> Option<usize> {
        self.pieces.get(d as usize).map(|p| p.ideal.rank())
    }

    fn monomial_nf(&self, m: &Monomial) -> MonoNf<'_, F> {
        let Some(p) = self.pieces.get(m.degree() as usize) else {
            return MonoNf::Zero;
        };
        let c = p.index[m];
        match (&p.std_pos[c], &p.reduced[c]) {
            (Some(k), _) => MonoNf::Standard(*k),
            (None, Some(nf)) if !nf.is_empty() => MonoNf::Reduced(nf),
            _ => MonoNf::Zero,
        }
    }

    /// Coordinates of `Σ c·m` (all `m` of degree `d`) in the standard basis of `[S]_d`.
    pub(crate) fn reduce_terms<'a>(
        &self,
        d: u32,
        terms: impl IntoIterator<Item = (Monomial, &'a F::Elem)>,
    ) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = vec![f.zero(); self.hf(d as i64)];
        if out.is_empty() {
            return out;
        }
        for (m, c) in terms {
            match self.monomial_nf(&m) {
                MonoNf::Standard(k) => out[k] = f.add(&out[k], c),
                MonoNf::Reduced(nf) => {
                    for (k, v) in nf {
                        out[*k] = f.add(&out[*k], &f.mul(c, v));
                    }
                }
                MonoNf::Zero => {}
            }
        }
        out
    }

    fn check_ring(&self, p: &Polynomial<F>) -> Result<(), AlgebraError> {
        if p.vars() != self.vars() || p.field() != self.field() {
            Err(AlgebraError::RingMismatch)
        } else {
            Ok(())
        }
    }

    /// Coordinates of a homogeneous polynomial in the standard basis of
    /// `[S]_{deg f}`; empty when `deg f > e`.
    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Vec<F::Elem>, AlgebraError> {
        self.check_ring(p)?;
        let d = p.degree().ok_or_else(|| AlgebraError::NotHomogeneous(p.render()))?;
        Ok(self.reduce_terms(d, p.terms().map(|(m, c)| (m.clone(), c))))
    }

    /// As [`normal_form`](Self::normal_form) with an explicit degree, so that
    /// the zero polynomial is accepted.
    pub fn normal_form_in_degree(&self, p: &Polynomial<F>, d: u32) -> Result<Vec<F::Elem>, AlgebraError> {
        self.check_ring(p)?;
        if p.terms().any(|(m, _)| m.degree() != d) {
            return Err(AlgebraError::NotHomogeneous(p.render()));
        }
        Ok(self.reduce_terms(d, p.terms().map(|(m, c)| (m.clone(), c))))
    }

    /// The polynomial `Σ coords_k · m_k` over the standard monomials of degree `d`.
    pub fn from_coords(&self, d: u32, coords: &[F::Elem]) -> Polynomial<F> {
        let basis = self.standard_monomials(d);
        Polynomial::from_terms(self.field(), self.vars(), basis.into_iter().zip(coords.iter().cloned()))
    }

    /// Canonical representative of `p` modulo `I`.
    pub fn reduce(&self, p: &Polynomial<F>) -> Result<Polynomial<F>, AlgebraError> {
        self.check_ring(p)?;
        let mut out = Polynomial::zero(self.field(), self.vars());
        let mut by_degree: std::collections::BTreeMap<u32, Vec<(Monomial, &F::Elem)>> = Default::default();
        for (m, c) in p.terms() {
            by_degree.entry(m.degree()).or_default().push((m.clone(), c));
        }
        for (d, terms) in by_degree {
            let coords = self.reduce_terms(d, terms);
            out = out.add(&self.from_coords(d, &coords)).expect("same ring");
        }
        Ok(out)
    }

    pub fn is_zero(&self, p: &Polynomial<F>) -> Result<bool, AlgebraError> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Multiplication by a homogeneous `θ`, one matrix per source degree `0..=e`.
    pub fn multiplication_map(&self, theta: &Polynomial<F>) -> Result<GradedMap<F>, AlgebraError> {
        self.check_ring(theta)?;
        let dt = theta.degree().ok_or_else(|| AlgebraError::NotHomogeneous(theta.render()))?;
        if dt <= self.top_degree() && self.normal_form(theta)?.iter().all(|c| self.field().is_zero(c)) {
            return Err(AlgebraError::ZeroInAlgebra(theta.render()));
        }
        Ok(self.multiplication_map_unchecked(theta, dt))
    }

    pub(crate) fn multiplication_map_unchecked(&self, theta: &Polynomial<F>, dt: u32) -> GradedMap<F> {
        let f = self.field();
        let matrices = (0..=self.top_degree())
            .map(|a| {
                let basis = self.standard_monomials(a);
                let rows = self.hf((a + dt) as i64);
                let mut m = Matrix::zeros(f, rows, basis.len());
                if rows > 0 {
                    for (j, s) in basis.iter().enumerate() {
                        let col = self.reduce_terms(a + dt, theta.terms().map(|(t, c)| (t.mul(s), c)));
                        for (i, v) in col.into_iter().enumerate() {
                            m.set(i, j, v);
                        }
                    }
                }
                m
            })
            .collect();
        GradedMap { theta: theta.clone(), degree: dt, matrices }
    }

    /// Socle `0 :_S S_+` per degree.
    pub fn socle(&self) -> SocleData {
        let e = self.top_degree();
        let n = self.nvars();
        let maps: Vec<GradedMap<F>> = (0..n)
            .map(|i| self.multiplication_map_unchecked(&Polynomial::var(self.field(), self.vars(), i), 1))
            .collect();
        let per_degree: Vec<usize> = (0..=e)
            .map(|d| {
                let cols = self.hf(d as i64);
                let rows = self.hf(d as i64 + 1);
                if rows == 0 || n == 0 {
                    return cols;
                }
                let mut stacked = Matrix::zeros(self.field(), 0, cols);
                for m in &maps {
                    stacked = stacked.vstack(m.matrix(d));
                }
                cols - stacked.rank()
            })
            .collect();
        let socle_type = per_degree.iter().sum();
        let level = per_degree.iter().take(e as usize).all(|&s| s == 0);
        SocleData { per_degree, socle_type, level, gorenstein: socle_type == 1 }
    }

    /// Degrees of a minimal homogeneous generating set of `I`.
    ///
    /// In degree `d` the count is `dim [I]_d − dim [P]_1·[I]_{d−1}`; generators
    /// above `e + 1` are never minimal.
    pub fn min_gen_degrees(&self) -> Vec<u32> {
        expand_counts(self.pieces.iter().map(|p| p.min_gens))
    }
}

/// Homogeneous multiplication map `[S]_a → [S]_{a+deg θ}` for each `a`.
#[derive(Debug, Clone)]
pub struct GradedMap<F: Field> {
    theta: Polynomial<F>,
    degree: u32,
    matrices: Vec<Matrix<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn theta(&self) -> &Polynomial<F> {
        &self.theta
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Matrix at source degree `a` (columns: basis of `[S]_a`).
    pub fn matrix(&self, a: u32) -> &Matrix<F> {
        &self.matrices[a as usize]
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    pub fn rank(&self, a: u32) -> usize {
        self.matrices.get(a as usize).map_or(0, Matrix::rank)
    }

    pub fn kernel_dim(&self, a: u32) -> usize {
        self.matrices.get(a as usize).map_or(0, |m| m.cols() - m.rank())
    }
}
