//! Line-oriented algebra description files.
//!
//! ```text
//! # comment
//! field Q            (or: field F 32003)
//! vars x y z
//! gen x^2
//! reduce x - y       (optional, applied in order)
//! maxdeg 40          (optional)
//! ```

use super::{reduce_linear, AlgebraError, AlgebraSpec};
use crate::arith::{Field, FieldSpec};
use crate::poly::{parse_polynomial, Polynomial, VariableSet};

/// A parsed but not yet field-specialized description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecFile {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    /// `(line, text)` of each `gen` line.
    pub gens: Vec<(usize, String)>,
    /// `(line, text)` of each `reduce` line.
    pub reduce: Vec<(usize, String)>,
    pub max_degree: Option<u32>,
}

fn spec_err(line: usize, msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Spec { line, msg: msg.into() }
}

pub fn parse_spec_file(text: &str) -> Result<SpecFile, AlgebraError> {
    let mut field = None;
    let mut vars: Option<Vec<String>> = None;
    let mut gens = Vec::new();
    let mut reduce = Vec::new();
    let mut max_degree = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        let rest = rest.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(spec_err(line, "field given twice"));
                }
                let f: FieldSpec = rest.parse().map_err(|e| spec_err(line, format!("{e}")))?;
                field = Some(f);
            }
            "vars" => {
                if vars.is_some() {
                    return Err(spec_err(line, "vars given twice"));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(spec_err(line, "vars needs at least one name"));
                }
                VariableSet::new(&names).map_err(|e| spec_err(line, e.to_string()))?;
                vars = Some(names);
            }
            "gen" | "reduce" => {
                if vars.is_none() {
                    return Err(spec_err(line, format!("`{key}` before `vars`")));
                }
                if rest.is_empty() {
                    return Err(spec_err(line, format!("`{key}` needs a polynomial")));
                }
                let target = if key == "gen" { &mut gens } else { &mut reduce };
                target.push((line, rest.to_string()));
            }
            "maxdeg" => {
                let d: u32 = rest.parse().map_err(|_| spec_err(line, format!("bad degree bound `{rest}`")))?;
                max_degree = Some(d);
            }
            other => return Err(spec_err(line, format!("unknown directive `{other}`"))),
        }
    }
    let vars = vars.ok_or_else(|| spec_err(text.lines().count().max(1), "missing `vars` line"))?;
    Ok(SpecFile { field: field.unwrap_or(FieldSpec::Rationals), vars, gens, reduce, max_degree })
}

impl SpecFile {
    /// Parses every polynomial over `field` and applies the `reduce` forms.
    pub fn to_spec<F: Field>(&self, field: &F) -> Result<AlgebraSpec<F>, AlgebraError> {
        let vars = VariableSet::new(&self.vars)?;
        let parse = |(line, text): &(usize, String)| -> Result<Polynomial<F>, AlgebraError> {
            let p = parse_polynomial(text, &vars, field).map_err(|e| spec_err(*line, e.to_string()))?;
            if p.is_zero() {
                return Err(spec_err(*line, "polynomial is zero"));
            }
            if !p.is_homogeneous() {
                return Err(spec_err(*line, format!("`{}` is not homogeneous", p.render())));
            }
            Ok(p)
        };
        let gens = self.gens.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        let forms = self.reduce.iter().map(parse).collect::<Result<Vec<_>, _>>()?;
        let mut spec = AlgebraSpec::new(field, &vars, gens)?;
        if let Some(d) = self.max_degree {
            spec = spec.with_max_degree(d);
        }
        if forms.is_empty() {
            Ok(spec)
        } else {
            reduce_linear(&spec, &forms)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build_algebra;
    use crate::arith::{PrimeField, Rationals};

    #[test]
    fn reads_a_full_file() {
        let text = "# squares\nfield F 7\nvars x y z\ngen x^2\ngen y^2  # trailing\ngen z^2\nmaxdeg 12\n";
        let s = parse_spec_file(text).unwrap();
        assert_eq!(s.field, FieldSpec::PrimeField(7));
        assert_eq!(s.gens.len(), 3);
        assert_eq!(s.max_degree, Some(12));
        let a = build_algebra(&s.to_spec(&PrimeField::new(7).unwrap()).unwrap()).unwrap();
        assert_eq!(a.hilbert_function(), &[1, 3, 3, 1]);
    }

    #[test]
    fn reduce_lines_apply() {
        let s = parse_spec_file("field Q\nvars x y\ngen x*y\nreduce x - y\n").unwrap();
        let a = build_algebra(&s.to_spec(&Rationals).unwrap()).unwrap();
        assert_eq!(a.hilbert_function(), &[1, 1]);
    }

    #[test]
    fn errors_name_the_line() {
        let bad = |t: &str| match parse_spec_file(t).and_then(|s| s.to_spec(&Rationals)) {
            Err(AlgebraError::Spec { line, .. }) => line,
            other => panic!("expected a spec error, got {other:?}"),
        };
        assert_eq!(bad("field Q\nvars x\ngen x^2 +\n"), 3);
        assert_eq!(bad("field Q\nvars x\n\ngen q^2\n"), 4);
        assert_eq!(bad("field R\n"), 1);
        assert_eq!(bad("gen x\n"), 1);
        assert_eq!(bad("vars x y\nfoo bar\n"), 2);
        assert_eq!(bad("vars x y\ngen x^2 + y\n"), 2);
        assert_eq!(bad("vars x y\nmaxdeg -1\n"), 2);
        assert_eq!(bad("vars x x\n"), 1);
    }

    #[test]
    fn linear_generators_are_reported_at_build() {
        let s = parse_spec_file("vars x y\ngen x\ngen y^2\n").unwrap().to_spec(&Rationals).unwrap();
        assert!(matches!(build_algebra(&s), Err(AlgebraError::LinearGeneratorPresent(_))));
    }
}
