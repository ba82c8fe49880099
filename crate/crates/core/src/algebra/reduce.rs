//! Artinian reductions: eliminating linear forms by substitution.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{build_algebra, AlgebraError, AlgebraSpec, GradedAlgebra, DEFAULT_RETRIES};
use crate::arith::Field;
use crate::poly::{Monomial, Polynomial, VariableSet};

/// Quotients `spec` by the linear `forms`.
///
/// Each form is solved for its largest-index variable, which is substituted
/// everywhere; the surviving variables keep their relative order. Generators
/// that become zero are dropped.
pub fn reduce_linear<F: Field>(
    spec: &AlgebraSpec<F>,
    forms: &[Polynomial<F>],
) -> Result<AlgebraSpec<F>, AlgebraError> {
    let f = spec.field();
    let vars = spec.vars();
    let n = vars.len();
    // images[i] is the current substitute for variable i, a linear form
    let mut images: Vec<Polynomial<F>> = (0..n).map(|i| Polynomial::var(f, vars, i)).collect();
    let mut eliminated = vec![false; n];
    for (index, form) in forms.iter().enumerate() {
        if form.vars() != vars || form.field() != f {
            return Err(AlgebraError::RingMismatch);
        }
        if form.is_zero() || form.degree() != Some(1) {
            return Err(AlgebraError::NotLinear(form.render()));
        }
        let reduced = form.evaluate(&images)?;
        // Largest-index variable is the grevlex-smallest term.
        let Some((pm, pc)) = reduced.terms().next() else {
            return Err(AlgebraError::DependentForms { index });
        };
        let pivot = pm.first_var().expect("linear term");
        let pc = pc.clone();
        let inv = f.inv(&pc).expect("nonzero coefficient");
        let x = Polynomial::var(f, vars, pivot);
        // x_pivot = x_pivot − form/c
        let solved = x.sub(&reduced.scale(&inv))?;
        let mut sub: Vec<Polynomial<F>> = (0..n).map(|i| Polynomial::var(f, vars, i)).collect();
        sub[pivot] = solved;
        for img in images.iter_mut() {
            *img = img.evaluate(&sub)?;
        }
        eliminated[pivot] = true;
    }
    let kept: Vec<usize> = (0..n).filter(|&i| !eliminated[i]).collect();
    let new_names: Vec<&str> = kept.iter().map(|&i| vars.names()[i].as_str()).collect();
    let new_vars = VariableSet::new(&new_names)?;
    let mut map = vec![None; n];
    for (j, &i) in kept.iter().enumerate() {
        map[i] = Some(j);
    }
    let moved: Vec<Polynomial<F>> = images
        .iter()
        .map(|p| p.rename_into(&new_vars, &map).expect("eliminated variables were substituted"))
        .collect();
    let mut gens = Vec::new();
    for g in spec.generators() {
        let h = g.evaluate(&moved)?;
        if !h.is_zero() {
            gens.push(h);
        }
    }
    Ok(AlgebraSpec::new(f, &new_vars, gens)?.with_max_degree(spec.max_degree()))
}

/// `count` linear forms with coefficients drawn from a seeded generator.
pub fn random_linear_forms<F: Field>(spec: &AlgebraSpec<F>, count: usize, seed: u64) -> Vec<Polynomial<F>> {
    let f = spec.field();
    let n = spec.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| Polynomial::from_terms(f, spec.vars(), (0..n).map(|i| (Monomial::var(n, i), f.random(&mut rng)))))
        .collect()
}

/// A successful seeded reduction.
#[derive(Debug, Clone)]
pub struct ArtinianReduction<F: Field> {
    pub spec: AlgebraSpec<F>,
    pub algebra: GradedAlgebra<F>,
    pub forms: Vec<Polynomial<F>>,
    /// The seed that produced `forms`.
    pub seed: u64,
    pub seeds_tried: Vec<u64>,
}

/// Reduces by `count` random linear forms and builds the quotient, trying
/// seeds `seed, seed+1, ...` until the result is Artinian.
pub fn random_artinian_reduction<F: Field>(
    spec: &AlgebraSpec<F>,
    count: usize,
    seed: u64,
) -> Result<ArtinianReduction<F>, AlgebraError> {
    let mut seeds_tried = Vec::new();
    for k in 0..DEFAULT_RETRIES as u64 {
        let s = seed.wrapping_add(k);
        seeds_tried.push(s);
        let forms = random_linear_forms(spec, count, s);
        let attempt = reduce_linear(spec, &forms).and_then(|r| build_algebra(&r).map(|a| (r, a)));
        match attempt {
            Ok((reduced, algebra)) => {
                return Ok(ArtinianReduction { spec: reduced, algebra, forms, seed: s, seeds_tried });
            }
            Err(AlgebraError::NotArtinianWithinBound { .. } | AlgebraError::DependentForms { .. }) => continue,
            Err(AlgebraError::LinearGeneratorPresent(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(AlgebraError::RetryLimit { seeds: seeds_tried })
}
