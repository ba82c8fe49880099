//! Monomials and homogeneous polynomials over an exact field.
//!
//! The single monomial order is graded reverse lexicographic with
//! `x_1 > x_2 > ... > x_n`. Polynomials keep their terms in that order, so
//! two polynomials are equal exactly when their term tables are.

mod parse;

pub use parse::parse_polynomial;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("non-integer coefficient literal at position {pos}")]
    NonIntegerCoefficient { pos: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("polynomial `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
}

/// Ordered, distinct variable names. Empty only after eliminating every
/// variable of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(PolyError::InvalidVariables(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(PolyError::InvalidVariables(format!("`{n}` repeated")));
            }
        }
        Ok(Arc::new(VariableSet { names }))
    }

    /// `prefix0, prefix1, ...`
    pub fn numbered(prefix: &str, count: usize) -> Arc<Self> {
        let names: Vec<String> = (0..count).map(|i| format!("{prefix}{i}")).collect();
        VariableSet::new(&names).expect("numbered names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Exponent vector, one entry per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps: exps.into_boxed_slice() }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.exps.to_vec();
        e[i] += 1;
        Monomial::new(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<u32>>>()
            .map(Monomial::new)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Smallest index of a variable with positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e > 0)
    }

    pub fn render(&self, vars: &VariableSet) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars.names[i].clone()
                } else {
                    format!("{}^{}", vars.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree `d` in `nvars` variables, largest first.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    rec(0, d, &mut current, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A polynomial in a fixed variable set with no zero coefficients stored.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    vars: Arc<VariableSet>,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: &F, vars: &Arc<VariableSet>) -> Self {
        Polynomial { field: field.clone(), vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: &F, vars: &Arc<VariableSet>, c: F::Elem) -> Self {
        Self::from_terms(field, vars, [(Monomial::one(vars.len()), c)])
    }

    pub fn var(field: &F, vars: &Arc<VariableSet>, i: usize) -> Self {
        Self::from_terms(field, vars, [(Monomial::var(vars.len(), i), field.one())])
    }

    pub fn monomial(field: &F, vars: &Arc<VariableSet>, m: Monomial, c: F::Elem) -> Self {
        Self::from_terms(field, vars, [(m, c)])
    }

    /// Sums the given terms, dropping zeros.
    pub fn from_terms(
        field: &F,
        vars: &Arc<VariableSet>,
        terms: impl IntoIterator<Item = (Monomial, F::Elem)>,
    ) -> Self {
        let mut p = Self::zero(field, vars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), vars.len(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &Arc<VariableSet> {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term in grevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Degree of a nonzero homogeneous polynomial, or an error naming it.
    pub fn homogeneous_degree(&self) -> Result<u32, PolyError> {
        self.degree().ok_or_else(|| PolyError::NotHomogeneous(self.render()))
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = self.field.add(existing, &c);
                if self.field.is_zero(&sum) {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars && self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, &self.vars);
        }
        Polynomial {
            field: f.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.field;
        if f.is_zero(c) {
            return Self::zero(f, &self.vars);
        }
        Polynomial {
            field: f.clone(),
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), f.mul(a, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.field, &self.vars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), self.field.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.field, &self.vars, self.field.one());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn evaluate(&self, images: &[Polynomial<F>]) -> Result<Self, PolyError> {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        let target = images.first().map(|p| p.vars.clone()).unwrap_or_else(|| self.vars.clone());
        if images.iter().any(|p| p.vars != target || p.field != self.field) {
            return Err(PolyError::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial<F>>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(&self.field, &target, self.field.one()), p.clone()])
            .collect();
        let mut out = Polynomial::zero(&self.field, &target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&self.field, &target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Rescales to the canonical representative of `k^* · self`.
    pub fn normalized(&self) -> Self {
        let coeffs: Vec<F::Elem> = self.terms.values().rev().cloned().collect();
        let m = self.field.canonical_multiplier(&coeffs);
        self.scale(&m)
    }

    /// Text form in the polynomial grammar, leading term first.
    ///
    /// Non-integral rationals are written `a/b*m`, which is an output-only
    /// extension of the grammar.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = &self.field;
        let minus_one = f.neg(&f.one());
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let text = f.render(c);
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit = f.is_one(c) || (*c == minus_one && negative);
            let mono = m.render(&self.vars);
            if m.degree() == 0 {
                out.push_str(&magnitude);
            } else if is_unit {
                out.push_str(&mono);
            } else {
                out.push_str(&magnitude);
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }

    /// Moves the polynomial into another variable set by name.
    pub fn rename_into(&self, target: &Arc<VariableSet>, map: &[Option<usize>]) -> Option<Self> {
        let mut out = Polynomial::zero(&self.field, target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &x) in m.exps().iter().enumerate() {
                if x > 0 {
                    e[map[i]?] += x;
                }
            }
            out.add_term(Monomial::new(e), c.clone());
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn vars(names: &[&str]) -> Arc<VariableSet> {
        VariableSet::new(names).unwrap()
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(5, 0), vec![Monomial::one(5)]);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
    }

    #[test]
    fn grevlex_order_of_quadrics() {
        let v = vars(&["x", "y", "z"]);
        let rendered: Vec<String> = monomials_of_degree(3, 2).iter().map(|m| m.render(&v)).collect();
        assert_eq!(rendered, ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn difference_of_squares() {
        let v = vars(&["x", "y"]);
        let f = Rationals;
        let a = parse_polynomial("x+y", &v, &f).unwrap();
        let b = parse_polynomial("x-y", &v, &f).unwrap();
        assert_eq!(a.mul(&b).unwrap(), parse_polynomial("x^2-y^2", &v, &f).unwrap());
        assert!(a.mul(&Polynomial::zero(&f, &v)).unwrap().is_zero());
    }

    #[test]
    fn product_of_the_degree_two_pair() {
        let v = vars(&["x", "y", "z", "w", "t"]);
        let f = Rationals;
        let t1 = parse_polynomial("x^2+y^2-z^2-w^2", &v, &f).unwrap();
        let t2 = parse_polynomial("x^2+y^2+z^2+w^2", &v, &f).unwrap();
        let expected = parse_polynomial("x^4+y^4-z^4-w^4+2*x^2*y^2-2*z^2*w^2", &v, &f).unwrap();
        let prod = t1.mul(&t2).unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.degree(), Some(4));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let f = Rationals;
        let a = Polynomial::var(&f, &vars(&["x"]), 0);
        let b = Polynomial::var(&f, &vars(&["y"]), 0);
        assert_eq!(a.mul(&b), Err(PolyError::RingMismatch));
    }

    #[test]
    fn rendering() {
        let v = vars(&["x", "y"]);
        let f = Rationals;
        let p = parse_polynomial("-x^2 + 3*x*y - y^2 + 0*x*y", &v, &f).unwrap();
        assert_eq!(p.render(), "-x^2 + 3*x*y - y^2");
        let fp = PrimeField::new(7).unwrap();
        assert_eq!(parse_polynomial("-x", &v, &fp).unwrap().render(), "6*x");
        assert_eq!(Polynomial::zero(&f, &v).render(), "0");
    }

    #[test]
    fn evaluation_substitutes() {
        let v = vars(&["x", "y"]);
        let f = Rationals;
        let p = parse_polynomial("x*y", &v, &f).unwrap();
        let w = vars(&["x"]);
        let x = Polynomial::var(&f, &w, 0);
        let img = p.evaluate(&[x.clone(), x]).unwrap();
        assert_eq!(img, parse_polynomial("x^2", &w, &f).unwrap());
    }

    #[test]
    fn normalization_over_q() {
        let v = vars(&["x", "y"]);
        let f = Rationals;
        let p = parse_polynomial("-2*x + 4*y", &v, &f).unwrap();
        assert_eq!(p.normalized().render(), "x - 2*y");
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn monomial_count_is_binomial() {
        for c in 1..=8usize {
            for d in 0..=12u32 {
                let n = monomials_of_degree(c, d).len() as u64;
                assert_eq!(n, binom(d as u64 + c as u64 - 1, c as u64 - 1), "c={c} d={d}");
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..4), 0..6)
    }

    fn build(terms: &[(Vec<u32>, i64)]) -> Polynomial<Rationals> {
        let v = vars(&["x", "y", "z"]);
        Polynomial::from_terms(
            &Rationals,
            &v,
            terms.iter().map(|(e, c)| (Monomial::new(e.clone()), Rationals.from_i64(*c))),
        )
    }

    proptest! {
        #[test]
        fn multiplication_commutes_and_distributes(a in small_poly(), b in small_poly(), c in small_poly()) {
            let (a, b, c) = (build(&a), build(&b), build(&c));
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
            let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
