//! One function per subcommand; each returns an [`Outcome`].

use std::path::Path;

use exactpair::algebra::{build_algebra, parse_spec_file, AlgebraSpec, GradedAlgebra, SpecFile};
use exactpair::arith::{Field, FieldSpec, PrimeField, Rationals};
use exactpair::catalog::{
    compressed_hf, compressed_screen, determinantal_hs, euler_numbers, eulerian_polynomial, n_ab, segre_direct_check,
    segre_hs, value_at_minus_one, CompressedParams,
};
use exactpair::criterion::{
    circulant_kernel_check, divides, divides_by_division, interval_candidates, possible_d, sigma_binomial_residual,
    sigma_profile, HilbertData,
};
use exactpair::ezd::{
    binary_candidates, search_linear_ezd_candidates, search_linear_ezd_exhaustive, verify_pair, SearchReport,
};
use exactpair::factorization::{
    build_factorization, build_periodic_complex, check_strand_exactness, render_subset, ComplexVariant,
    ExactnessReport,
};
use exactpair::poly::{parse_polynomial, Polynomial};
use exactpair::suite::{self, EXAMPLES};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::report::{input, CliError, Outcome};

/// Projective points examined by `ezd-search` before giving up.
pub const SEARCH_LIMIT: u64 = 100_000;
pub const DEEP_SEARCH_LIMIT: u64 = 20_000_000;

/// Options shared by every command that reads an algebra file.
pub struct AlgebraArgs<'a> {
    pub file: &'a Path,
    pub field: Option<FieldSpec>,
    pub max_degree: Option<u32>,
}

/// Runs `$body` with `$f` bound to the concrete field.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::PrimeField(p) => {
                let $f = &PrimeField::new(p).map_err(input)?;
                $body
            }
        }
    };
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn big(x: &BigInt) -> Value {
    x.to_i64().map_or_else(|| json!(x.to_string()), |v| json!(v))
}

/// Packaged example a file belongs to, judged by its stem.
fn example_of(path: &Path) -> Option<String> {
    let stem = path.file_stem()?.to_str()?;
    let name = if stem == "e3gor" { "e3" } else { stem };
    EXAMPLES.contains(&name).then(|| name.to_string())
}

fn read_spec(a: &AlgebraArgs) -> Result<(SpecFile, FieldSpec), CliError> {
    let text = std::fs::read_to_string(a.file).map_err(|e| CliError::Input(format!("{}: {e}", a.file.display())))?;
    let sf = parse_spec_file(&text).map_err(|e| CliError::Input(format!("{}: {e}", a.file.display())))?;
    let field = a.field.unwrap_or(sf.field);
    Ok((sf, field))
}

fn load<F: Field>(sf: &SpecFile, field: &F, max_degree: Option<u32>) -> Result<GradedAlgebra<F>, CliError> {
    let mut spec: AlgebraSpec<F> = sf.to_spec(field)?;
    if let Some(d) = max_degree {
        spec = spec.with_max_degree(d);
    }
    Ok(build_algebra(&spec)?)
}

fn poly<F: Field>(alg: &GradedAlgebra<F>, text: &str) -> Result<Polynomial<F>, CliError> {
    let p = parse_polynomial(text, alg.vars(), alg.field()).map_err(|e| CliError::Input(format!("`{text}`: {e}")))?;
    if !p.is_homogeneous() {
        return Err(CliError::Input(format!("`{text}` is not homogeneous")));
    }
    Ok(p)
}

fn algebra_summary<F: Field>(alg: &GradedAlgebra<F>) -> Value {
    let socle = alg.socle();
    json!({
        "field": alg.field().spec().to_string(),
        "vars": alg.vars().names(),
        "hf": alg.hilbert_function(),
        "socle_degree": alg.top_degree(),
        "dimension": alg.dimension(),
        "socle_per_degree": socle.per_degree,
        "socle_type": socle.socle_type,
        "level": socle.level,
        "gorenstein": socle.gorenstein,
        "min_gen_degrees": alg.min_gen_degrees(),
    })
}

pub fn hf(a: &AlgebraArgs) -> Result<Outcome, CliError> {
    let (sf, field) = read_spec(a)?;
    let results = with_field!(field, |f| algebra_summary(&load(&sf, f, a.max_degree)?));
    Ok(Outcome::ok(results).example(example_of(a.file)))
}

/// `exact` or `not-pair`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PairExpectation {
    Exact,
    NotPair,
}

/// Divisibility consequences of an exact pair, re-derived from the HF.
fn divisibility_lines(hf: &HilbertData, d1: u32, d2: u32) -> Result<(Value, bool), CliError> {
    let rec = suite::exact_pair_record(hf, String::new(), String::new(), d1, d2);
    let d = (d1 + d2) as i64;
    let sigma = sigma_profile(hf, d)?;
    let v = json!({
        "d": d,
        "sigma": sigma.sigma,
        "divides": rec.divides,
        "residual_range": [rec.residual_range.0, rec.residual_range.1],
        "residuals_vanish": rec.residuals_vanish,
        "consistent": rec.consistent(),
    });
    Ok((v, rec.consistent()))
}

fn pair_in<F: Field>(
    alg: &GradedAlgebra<F>,
    t1: &str,
    t2: &str,
    expect: Option<PairExpectation>,
) -> Result<Outcome, CliError> {
    let (p1, p2) = (poly(alg, t1)?, poly(alg, t2)?);
    let r = verify_pair(alg, &p1, &p2)?;
    let mut results = json!({ "pair": to_value(&r), "hf": alg.hilbert_function() });
    let mut ok = true;
    if r.is_exact() {
        let (lines, consistent) = divisibility_lines(&HilbertData::of(alg), r.d1, r.d2)?;
        results["divisibility_check"] = lines;
        ok &= consistent;
    }
    if let Some(e) = expect {
        ok &= (e == PairExpectation::Exact) == r.is_exact();
    }
    Ok(Outcome::ok(results).verdict(ok))
}

pub fn pair(a: &AlgebraArgs, t1: &str, t2: &str, expect: Option<PairExpectation>) -> Result<Outcome, CliError> {
    let (sf, field) = read_spec(a)?;
    let out = with_field!(field, |f| pair_in(&load(&sf, f, a.max_degree)?, t1, t2, expect)?);
    Ok(out.example(example_of(a.file)))
}

/// `none` or `found`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchExpectation {
    None,
    Found,
}

pub struct SearchArgs<'a> {
    pub candidates: Option<&'a str>,
    pub binary: bool,
    pub deep: bool,
    pub expect: Option<SearchExpectation>,
}

fn search_in<F: Field>(alg: &GradedAlgebra<F>, s: &SearchArgs) -> Result<SearchReport, CliError> {
    if let Some(list) = s.candidates {
        let cands = list.split(',').map(|t| poly(alg, t.trim())).collect::<Result<Vec<_>, _>>()?;
        return Ok(search_linear_ezd_candidates(alg, &cands)?);
    }
    if s.binary {
        return Ok(search_linear_ezd_candidates(alg, &binary_candidates(alg))?);
    }
    if alg.field().spec() == FieldSpec::Rationals {
        return Err(CliError::Input(
            "exhaustive search needs a prime field (--field \"F <p>\"); over Q pass --candidates or --binary".into(),
        ));
    }
    let limit = if s.deep { DEEP_SEARCH_LIMIT } else { SEARCH_LIMIT };
    search_linear_ezd_exhaustive(alg, limit).map_err(|e| match e {
        exactpair::ezd::EzdError::TooManyCandidates(n) => {
            CliError::Bound(format!("{n} projective points exceed the limit of {limit}; --deep raises it to {DEEP_SEARCH_LIMIT}"))
        }
        other => other.into(),
    })
}

pub fn ezd_search(a: &AlgebraArgs, s: &SearchArgs) -> Result<Outcome, CliError> {
    let (sf, field) = read_spec(a)?;
    let report = with_field!(field, |f| search_in(&load(&sf, f, a.max_degree)?, s)?);
    let ok = match s.expect {
        Some(SearchExpectation::None) => report.hits.is_empty(),
        Some(SearchExpectation::Found) => !report.hits.is_empty(),
        None => true,
    };
    Ok(Outcome::ok(to_value(&report)).verdict(ok).example(example_of(a.file)))
}

fn parse_list(text: &str) -> Result<Vec<u32>, CliError> {
    text.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| CliError::Input(format!("bad integer `{}`", t.trim()))))
        .collect()
}

/// `no-pair` or `candidates`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ScreenExpectation {
    NoPair,
    Candidates,
}

pub fn screen(
    a: Option<&AlgebraArgs>,
    hf_text: Option<&str>,
    candidates: Option<&str>,
    expect: Option<ScreenExpectation>,
) -> Result<Outcome, CliError> {
    let (hf, default_candidates, example) = match (a, hf_text) {
        (Some(_), Some(_)) => return Err(CliError::Input("give either a spec file or --hf, not both".into())),
        (None, None) => return Err(CliError::Input("give a spec file or --hf".into())),
        (None, Some(t)) => {
            let hf = HilbertData::parse(t)?;
            let cands: Vec<u32> = (2..=hf.top_degree() as u32 + 1).collect();
            (hf, cands, None)
        }
        (Some(a), None) => {
            let (sf, field) = read_spec(a)?;
            let (hf, degs) = with_field!(field, |f| {
                let alg = load(&sf, f, a.max_degree)?;
                (HilbertData::of(&alg), alg.min_gen_degrees())
            });
            (hf, degs, example_of(a.file))
        }
    };
    let cands = match candidates {
        Some(t) => parse_list(t)?,
        None => default_candidates,
    };
    let report = possible_d(&hf, &cands)?;
    let ok = match expect {
        Some(ScreenExpectation::NoPair) => report.no_pair_possible(),
        Some(ScreenExpectation::Candidates) => !report.no_pair_possible(),
        None => true,
    };
    Ok(Outcome::ok(to_value(&report)).verdict(ok).example(example))
}

pub fn sigma(hf_text: &str, d: i64, s1: Option<u32>) -> Result<Outcome, CliError> {
    let hf = HilbertData::parse(hf_text)?;
    let p = sigma_profile(&hf, d)?;
    let mut results = json!({
        "hf": hf.hf,
        "d": d,
        "sigma": p.sigma,
        "constant": p.is_constant(),
        "divides_by_division": divides_by_division(&hf, d as u32),
        "divides": divides(&hf, d)?,
        "value_at_minus_one": hf.value_at_minus_one(),
    });
    if let Some(s1) = s1 {
        let e = hf.top_degree() as i64;
        let res: Vec<Value> = (-d..=e + 2 * d)
            .map(|n| sigma_binomial_residual(&hf, d, s1, n).map(|r| json!({"n": n, "residual": r as i64})))
            .collect::<Result<_, _>>()?;
        results["binomial_residuals"] = Value::Array(res);
    }
    Ok(Outcome::ok(results))
}

/// `display`, `theta-two-on-m` or `both`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VariantChoice {
    Display,
    ThetaTwoOnM,
    Both,
}

impl VariantChoice {
    fn variants(self) -> Vec<ComplexVariant> {
        match self {
            VariantChoice::Display => vec![ComplexVariant::Display],
            VariantChoice::ThetaTwoOnM => vec![ComplexVariant::ThetaTwoOnM],
            VariantChoice::Both => ComplexVariant::ALL.to_vec(),
        }
    }
}

pub struct MfArgs<'a> {
    pub theta: &'a str,
    pub theta2: Option<&'a str>,
    pub variant: VariantChoice,
    pub window: Option<(i64, i64)>,
    pub matrices: bool,
    pub deep: bool,
}

fn exactness_summary(r: &ExactnessReport, deep: bool) -> Value {
    let strands = |s: &[exactpair::factorization::StrandReport]| -> Value {
        if deep {
            return to_value(&s);
        }
        s.iter().map(|x| json!({"n": x.n, "exact": x.exact, "alternating_sum": x.alternating_sum})).collect()
    };
    json!({
        "variant": to_value(&r.variant),
        "window": [r.window.0, r.window.1],
        "warning": r.warning,
        "all_exact": r.all_exact,
        "alternating_sums_zero": r.alternating_sums_zero,
        "witness": to_value(&r.witness),
        "strands": strands(&r.strands),
        "dual_strands": strands(&r.dual_strands),
    })
}

fn mf_in<F: Field>(alg: &GradedAlgebra<F>, m: &MfArgs) -> Result<Outcome, CliError> {
    let theta = poly(alg, m.theta)?;
    let mf = build_factorization(alg, &theta)?;
    let check = mf.verify();
    let mut ok = check.passed();
    let mut results = json!({
        "theta": theta.render(),
        "s1": mf.s1,
        "d": mf.d,
        "rank": mf.rank(),
        "y": mf.y.iter().map(Polynomial::render).collect::<Vec<_>>(),
        "basis_f": mf.even.iter().map(|&s| render_subset(s)).collect::<Vec<_>>(),
        "basis_g": mf.odd.iter().map(|&s| render_subset(s)).collect::<Vec<_>>(),
        "twists_f": mf.twists_f,
        "twists_g": mf.twists_g,
        "check": to_value(&check),
    });
    if m.matrices {
        results["m"] = json!(mf.m.to_grid());
        results["mcheck"] = json!(mf.mcheck.to_grid());
    }
    if let Some(t2) = m.theta2 {
        let theta2 = poly(alg, t2)?;
        let mut complexes = Vec::new();
        for variant in m.variant.variants() {
            let pc = build_periodic_complex(alg, &mf, &theta2, variant)?;
            let (phi_psi, psi_phi) = pc.compositions_in_p();
            let vanish = pc.compositions_vanish_in_s(alg)?;
            let ex = check_strand_exactness(alg, &pc, m.window);
            ok &= phi_psi && psi_phi && vanish && ex.all_exact && ex.alternating_sums_zero;
            complexes.push(json!({
                "variant": to_value(&variant),
                "period": pc.period(),
                "even_twists": pc.even_twists,
                "odd_twists": pc.odd_twists,
                "phi_psi_is_theta1_theta2": phi_psi,
                "psi_phi_is_theta1_theta2": psi_phi,
                "compositions_vanish_in_s": vanish,
                "exactness": exactness_summary(&ex, m.deep),
            }));
        }
        results["theta2"] = json!(theta2.render());
        results["complexes"] = Value::Array(complexes);
    }
    Ok(Outcome::ok(results).verdict(ok))
}

pub fn mf(a: &AlgebraArgs, m: &MfArgs) -> Result<Outcome, CliError> {
    let (sf, field) = read_spec(a)?;
    let out = with_field!(field, |f| mf_in(&load(&sf, f, a.max_degree)?, m)?);
    Ok(out.example(example_of(a.file)))
}

pub fn catalog_compressed(c: u64, e: u64, r: u64) -> Result<Outcome, CliError> {
    let p = CompressedParams::new(c, e, r)?;
    let screen = compressed_screen(p);
    Ok(Outcome::ok(json!({
        "params": to_value(&p),
        "hf": compressed_hf(p).hf,
        "in_no_ezd_family": p.in_no_ezd_family(),
        "screen": to_value(&screen),
    })))
}

pub fn catalog_det(r: u64, c: u64) -> Result<Outcome, CliError> {
    let hf = determinantal_hs(r, c)?;
    let nab = n_ab(r - 1, c - 1)?;
    let screen = possible_d(&hf, &interval_candidates(&hf))?;
    Ok(Outcome::ok(json!({
        "r": r,
        "c": c,
        "hf": hf.hf,
        "value_at_minus_one": hf.value_at_minus_one(),
        "n_ab": to_value(&nab),
        "screen": to_value(&screen),
    })))
}

pub fn catalog_euler(s: u64) -> Result<Outcome, CliError> {
    let a = eulerian_polynomial(s);
    let e = euler_numbers(s as usize);
    Ok(Outcome::ok(json!({
        "s": s,
        "eulerian_coefficients": a.iter().map(big).collect::<Vec<_>>(),
        "eulerian_at_minus_one": big(&value_at_minus_one(&a)),
        "euler_numbers": e.iter().map(big).collect::<Vec<_>>(),
        "euler_s": big(&e[s as usize]),
    })))
}

pub fn catalog_segre(s: u64, direct: bool, seed: u64) -> Result<Outcome, CliError> {
    let data = segre_hs(s)?;
    let hf = HilbertData::new(data.hf.clone())?;
    let screen = possible_d(&hf, &[2])?;
    let mut results = json!({
        "s": s,
        "hf": data.hf,
        "value_at_minus_one": data.value_at_minus_one,
        "screen": to_value(&screen),
    });
    let mut out = Outcome::ok(Value::Null);
    if direct {
        let check = segre_direct_check(s, seed)?;
        out = out.verdict(check.passed()).seed(check.seed);
        results["direct"] = to_value(&check);
        results["direct_passed"] = json!(check.passed());
    }
    out.results = results;
    Ok(out.example((s == 3).then(|| "segre3".to_string())))
}

pub fn catalog_nab(a: u64, b: u64) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(to_value(&n_ab(a, b)?)))
}

pub fn catalog_circulant(b: usize, big_b: usize) -> Result<Outcome, CliError> {
    let r = circulant_kernel_check(b, big_b)?;
    let ok = r.rank + 1 == big_b && r.all_ones_in_kernel;
    let mut v = to_value(&r);
    v["rank_is_b_minus_one"] = json!(ok);
    Ok(Outcome::ok(v).verdict(ok))
}

/// `detail` adds every check of every example to the results.
pub fn paper_suite(
    list: bool,
    only: &[String],
    fixtures: Option<&Path>,
    seed: u64,
    detail: bool,
) -> Result<Outcome, CliError> {
    if list {
        return Ok(Outcome::ok(json!({ "examples": EXAMPLES })));
    }
    let dir = fixtures.map_or_else(suite::default_fixture_dir, Path::to_path_buf);
    let mut outcomes = Vec::new();
    let names: Vec<&str> = if only.is_empty() { EXAMPLES.to_vec() } else { only.iter().map(String::as_str).collect() };
    for name in names {
        outcomes.push(suite::run_example(name, &dir, seed)?);
    }
    let passed = outcomes.iter().all(|o| o.passed);
    let summary: Vec<Value> = outcomes
        .iter()
        .map(|o| json!({"name": o.name, "passed": o.passed, "seed": o.seed, "error": o.error}))
        .collect();
    let mut results = json!({
        "fixture_dir": dir.display().to_string(),
        "passed": passed,
        "summary": summary,
    });
    let failed: Vec<Value> = outcomes
        .iter()
        .flat_map(|o| o.checks.iter().filter(|c| !c.passed).map(move |c| json!({"example": o.name, "check": to_value(c)})))
        .collect();
    results["failed_checks"] = Value::Array(failed);
    if detail {
        results["outcomes"] = to_value(&outcomes);
    }
    Ok(Outcome::ok(results).verdict(passed).seed(seed))
}
