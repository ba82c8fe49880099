//! The packaged examples, run end to end and diffed against stored
//! expectations.
//!
//! Each example reads `<name>.expect` (and, where it has one, an algebra
//! file) from a fixture directory. An expectation file holds one
//! `key value` pair per line; `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::{Path, PathBuf};

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{build_algebra, parse_spec_file, random_artinian_reduction, GradedAlgebra};
use crate::arith::{Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME};
use crate::catalog::{
    compressed_hf, compressed_screen, determinantal_hs, euler_numbers, eulerian_polynomial,
    minors_ideal, n_ab, segre_direct_check, CompressedParams,
};
use crate::criterion::{circulant_kernel_check, divides, possible_d, sigma_binomial_residual, sigma_profile, HilbertData, ScreeningReport};
use crate::ezd::{binary_candidates, search_linear_ezd_candidates, verify_pair};
use crate::poly::parse_polynomial;

/// Names of the packaged examples, in run order.
pub const EXAMPLES: [&str; 10] =
    ["may4", "may5", "may6", "e3", "rem7_5", "gl4", "segre3", "det_2x2", "circulant", "euler"];

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown example `{0}`")]
    UnknownExample(String),
    #[error("{path}: {msg}")]
    Fixture { path: String, msg: String },
    #[error("{path}: missing key `{key}`")]
    MissingKey { path: String, key: String },
    #[error("{0}")]
    Computation(String),
}

/// Directory holding the fixtures shipped with this crate.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

/// Parsed `key value` expectation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectations {
    path: String,
    values: BTreeMap<String, String>,
}

impl Expectations {
    pub fn parse(path: &str, text: &str) -> Result<Self, SuiteError> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once(char::is_whitespace).ok_or_else(|| SuiteError::Fixture {
                path: path.into(),
                msg: format!("line {}: expected `key value`", i + 1),
            })?;
            if values.insert(k.to_string(), v.trim().to_string()).is_some() {
                return Err(SuiteError::Fixture { path: path.into(), msg: format!("line {}: duplicate key `{k}`", i + 1) });
            }
        }
        Ok(Expectations { path: path.into(), values })
    }

    pub fn get(&self, key: &str) -> Result<&str, SuiteError> {
        self.values
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| SuiteError::MissingKey { path: self.path.clone(), key: key.into() })
    }
}

fn read_fixture(dir: &Path, file: &str) -> Result<(String, String), SuiteError> {
    let path = dir.join(file);
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(&path).map_err(|e| SuiteError::Fixture { path: shown.clone(), msg: e.to_string() })?;
    Ok((shown, text))
}

pub fn load_expectations(dir: &Path, name: &str) -> Result<Expectations, SuiteError> {
    let (path, text) = read_fixture(dir, &format!("{name}.expect"))?;
    Expectations::parse(&path, &text)
}

/// Builds the algebra described by a fixture file over `field`.
pub fn load_algebra<F: Field>(dir: &Path, file: &str, field: &F) -> Result<GradedAlgebra<F>, SuiteError> {
    let (path, text) = read_fixture(dir, file)?;
    let fixture = |e: &dyn Display| SuiteError::Fixture { path: path.clone(), msg: e.to_string() };
    let sf = parse_spec_file(&text).map_err(|e| fixture(&e))?;
    if sf.field != field.spec() {
        return Err(fixture(&format!("declares field {} but {} was requested", sf.field, field.spec())));
    }
    build_algebra(&sf.to_spec(field).map_err(|e| fixture(&e))?).map_err(|e| fixture(&e))
}

/// One comparison of a computed value with its stored expectation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

/// An exact pair found in an example, with the divisibility consequences
/// re-derived from its Hilbert function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactPairRecord {
    pub theta1: String,
    pub theta2: String,
    pub d1: u32,
    pub d2: u32,
    pub hf: Vec<u64>,
    pub divides: bool,
    /// Range of `N` over which the binomial residual was evaluated.
    pub residual_range: (i64, i64),
    pub residuals_vanish: bool,
}

impl ExactPairRecord {
    pub fn consistent(&self) -> bool {
        self.divides && self.residuals_vanish
    }
}

/// Derives the record for a verified pair; `c` is the embedding dimension.
pub fn exact_pair_record(hf: &HilbertData, theta1: String, theta2: String, d1: u32, d2: u32) -> ExactPairRecord {
    let d = (d1 + d2) as i64;
    let c = hf.at(1) as u32;
    let range = (-d, hf.top_degree() as i64 + 2 * d);
    let residuals_vanish = (range.0..=range.1)
        .all(|n| sigma_binomial_residual(hf, d, c, n).map(|r| r == 0).unwrap_or(false));
    ExactPairRecord {
        theta1,
        theta2,
        d1,
        d2,
        hf: hf.hf.clone(),
        divides: divides(hf, d).unwrap_or(false),
        residual_range: range,
        residuals_vanish,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleOutcome {
    pub name: String,
    pub description: String,
    /// Seed of the random Artinian reduction, when one was used.
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub exact_pairs: Vec<ExactPairRecord>,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub fixture_dir: String,
    pub seed: u64,
    pub outcomes: Vec<ExampleOutcome>,
    pub passed: bool,
}

fn join<T: Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn normalize(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn conclusion(r: &ScreeningReport) -> String {
    if r.no_pair_possible() {
        "no_exact_pair_possible".into()
    } else {
        format!("candidates_remain {}", join(&r.remaining()))
    }
}

/// Accumulates checks for one example.
struct Run<'a> {
    exp: &'a Expectations,
    checks: Vec<Check>,
    pairs: Vec<ExactPairRecord>,
    seed: Option<u64>,
}

impl<'a> Run<'a> {
    fn new(exp: &'a Expectations) -> Self {
        Run { exp, checks: Vec::new(), pairs: Vec::new(), seed: None }
    }

    /// Compares `actual` with the stored value under `key`.
    fn stored(&mut self, key: &str, actual: impl Display) -> Result<(), SuiteError> {
        let expected = normalize(self.exp.get(key)?);
        self.push(key, expected, actual);
        Ok(())
    }

    /// Compares `actual` with a value fixed in code.
    fn push(&mut self, name: &str, expected: impl Display, actual: impl Display) {
        let (expected, actual) = (expected.to_string(), normalize(&actual.to_string()));
        let passed = expected == actual;
        self.checks.push(Check { name: name.into(), expected, actual, passed });
    }

    fn finish(self, name: &str, description: &str, err: Option<SuiteError>) -> ExampleOutcome {
        let error = err.map(|e| e.to_string());
        let passed = error.is_none()
            && !self.checks.is_empty()
            && self.checks.iter().all(|c| c.passed)
            && self.pairs.iter().all(ExactPairRecord::consistent);
        ExampleOutcome {
            name: name.into(),
            description: description.into(),
            seed: self.seed,
            checks: self.checks,
            exact_pairs: self.pairs,
            error,
            passed,
        }
    }
}

fn computation(e: impl Display) -> SuiteError {
    SuiteError::Computation(e.to_string())
}

fn description(name: &str) -> &'static str {
    match name {
        "may4" => "monomial algebra with the quadratic exact pair (x^2+y^2-z^2-w^2, x^2+y^2+z^2+w^2)",
        "may5" => "3x3 minors of a generic 4x5 matrix, Artinian reduction over F_32003",
        "may6" => "4x4 minors of a generic 5x5 matrix, Artinian reduction over F_32003",
        "e3" => "k[x,y,z]/(x^2,y^2,z^2): compressed Gorenstein with socle degree 3 and the pair (x, x)",
        "rem7_5" => "compressed Gorenstein (1,3,6,6,3,1) with a non-linear resolution",
        "gl4" => "maximal minors of a square matrix of linear forms in four variables, via the compressed formula",
        "segre3" => "Artinian reduction of the Segre product of three projective lines",
        "det_2x2" => "2x2 minors of a generic 3x3 matrix, Artinian reduction over F_32003",
        "circulant" => "circulant kernel sweep over 1 <= b <= 8 < B <= 24",
        "euler" => "Eulerian polynomials and Euler numbers",
        _ => "",
    }
}

/// First-principles Hilbert data of a determinantal example: the `k × k`
/// minors of a generic `rows × cols` matrix cut down by `forms` random
/// linear forms over `F_32003`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterminantalRun {
    pub generators: usize,
    pub seed: u64,
    pub hf: Vec<u64>,
    pub min_gen_degrees: Vec<u32>,
    pub gorenstein: bool,
    pub screen: ScreeningReport,
}

pub fn determinantal_run(rows: usize, cols: usize, k: usize, forms: usize, seed: u64) -> Result<DeterminantalRun, SuiteError> {
    let f = PrimeField::new(DEFAULT_PRIME).expect("prime");
    let spec = minors_ideal(&f, rows, cols, k).map_err(computation)?;
    let red = random_artinian_reduction(&spec, forms, seed).map_err(computation)?;
    let hf = HilbertData::of(&red.algebra);
    let mut degrees = red.algebra.min_gen_degrees();
    let screen = possible_d(&hf, &degrees).map_err(computation)?;
    degrees.sort_unstable();
    degrees.dedup();
    Ok(DeterminantalRun {
        generators: spec.generators().len(),
        seed: red.seed,
        hf: hf.hf,
        min_gen_degrees: degrees,
        gorenstein: red.algebra.socle().gorenstein,
        screen,
    })
}

pub fn may5_run(seed: u64) -> Result<DeterminantalRun, SuiteError> {
    determinantal_run(4, 5, 3, 14, seed)
}

pub fn may6_run(seed: u64) -> Result<DeterminantalRun, SuiteError> {
    determinantal_run(5, 5, 4, 21, seed)
}

fn pair_check<F: Field>(run: &mut Run, alg: &GradedAlgebra<F>) -> Result<(), SuiteError> {
    let p = |key: &str| -> Result<_, SuiteError> {
        parse_polynomial(run.exp.get(key)?, alg.vars(), alg.field()).map_err(computation)
    };
    let (t1, t2) = (p("theta1")?, p("theta2")?);
    let report = verify_pair(alg, &t1, &t2).map_err(computation)?;
    let verdict = if report.is_exact() { "exact_pair" } else { "not_pair" };
    run.stored("verdict", verdict)?;
    if report.is_exact() {
        run.pairs.push(exact_pair_record(&HilbertData::of(alg), report.theta1, report.theta2, report.d1, report.d2));
    }
    Ok(())
}

fn run_may4(run: &mut Run, dir: &Path) -> Result<(), SuiteError> {
    let alg = load_algebra(dir, "may4.alg", &Rationals)?;
    let hf = HilbertData::of(&alg);
    run.stored("hf", join(&hf.hf))?;
    pair_check(run, &alg)?;
    run.stored("sigma", join(&sigma_profile(&hf, 4).map_err(computation)?.sigma))?;
    run.stored("divides", divides(&hf, 4).map_err(computation)?)?;
    let search = search_linear_ezd_candidates(&alg, &binary_candidates(&alg)).map_err(computation)?;
    run.push("linear_candidates", 31, search.candidates_examined);
    run.stored("linear_hits", search.hits.len())
}

fn run_e3(run: &mut Run, dir: &Path) -> Result<(), SuiteError> {
    let alg = load_algebra(dir, "e3gor.alg", &Rationals)?;
    let hf = HilbertData::of(&alg);
    run.stored("hf", join(&hf.hf))?;
    run.stored("gorenstein", alg.socle().gorenstein)?;
    pair_check(run, &alg)?;
    let screen = possible_d(&hf, &alg.min_gen_degrees()).map_err(computation)?;
    run.stored("remaining", join(&screen.remaining()))?;
    let compressed = compressed_hf(CompressedParams::new(3, 3, 1).map_err(computation)?);
    run.push("compressed_formula", join(&compressed.hf), join(&hf.hf));
    Ok(())
}

fn run_rem7_5(run: &mut Run, dir: &Path) -> Result<(), SuiteError> {
    let alg = load_algebra(dir, "rem7_5.alg", &Rationals)?;
    let hf = HilbertData::of(&alg);
    run.stored("hf", join(&hf.hf))?;
    run.stored("gorenstein", alg.socle().gorenstein)?;
    let params: Vec<u64> = run
        .exp
        .get("compressed")?
        .split(',')
        .map(|s| s.trim().parse().map_err(computation))
        .collect::<Result<_, _>>()?;
    let [c, e, r] = params[..] else {
        return Err(computation("`compressed` needs c,e,r"));
    };
    let p = CompressedParams::new(c, e, r).map_err(computation)?;
    run.push("compressed_formula", join(&compressed_hf(p).hf), join(&hf.hf));
    let by_generators = possible_d(&hf, &alg.min_gen_degrees()).map_err(computation)?;
    run.stored("conclusion", conclusion(&by_generators))?;
    run.push("interval_screen", "no_exact_pair_possible", conclusion(&compressed_screen(p)));
    Ok(())
}

fn run_determinantal(run: &mut Run, result: DeterminantalRun) -> Result<(), SuiteError> {
    run.seed = Some(result.seed);
    run.stored("hf", join(&result.hf))?;
    run.stored("min_gen_degrees", join(&result.min_gen_degrees))?;
    if run.exp.get("gorenstein").is_ok() {
        run.stored("gorenstein", result.gorenstein)?;
    }
    run.stored("conclusion", conclusion(&result.screen))
}

fn run_gl4(run: &mut Run) -> Result<(), SuiteError> {
    for n in [3u64, 4] {
        let p = CompressedParams::new(4, 2 * n - 2, 1).map_err(computation)?;
        run.stored(&format!("hf_n{n}"), join(&compressed_hf(p).hf))?;
        let screen = compressed_screen(p);
        let expected = normalize(run.exp.get("conclusion")?);
        run.push(&format!("conclusion_n{n}"), expected, conclusion(&screen));
    }
    Ok(())
}

fn run_segre3(run: &mut Run, seed: u64) -> Result<(), SuiteError> {
    let check = segre_direct_check(3, seed).map_err(computation)?;
    run.seed = Some(check.seed);
    run.stored("generators", check.generators)?;
    run.stored("quadric_min_gens", check.quadric_min_gens)?;
    run.stored("hf", join(&check.hf))?;
    run.push("closed_form", join(&check.expected), join(&check.hf));
    run.stored("gorenstein", check.gorenstein)?;
    run.stored("value_at_minus_one", check.value_at_minus_one)?;
    run.stored("conclusion", conclusion(&check.screen))
}

fn run_det_2x2(run: &mut Run, seed: u64) -> Result<(), SuiteError> {
    let result = determinantal_run(3, 3, 2, 5, seed)?;
    run.seed = Some(result.seed);
    run.stored("generators", result.generators)?;
    run.stored("hf", join(&result.hf))?;
    let closed = determinantal_hs(3, 3).map_err(computation)?;
    run.push("closed_form", join(&closed.hf), join(&result.hf));
    let hf = HilbertData::new(result.hf.clone()).map_err(computation)?;
    run.stored("value_at_minus_one", hf.value_at_minus_one())?;
    let nab = n_ab(2, 2).map_err(computation)?;
    run.stored("n_ab", nab.value)?;
    run.push("n_ab_matches_series", nab.value, hf.value_at_minus_one().unsigned_abs());
    run.stored("conclusion", conclusion(&result.screen))
}

fn run_circulant(run: &mut Run) -> Result<(), SuiteError> {
    let parse = |key: &str| -> Result<usize, SuiteError> { run.exp.get(key)?.parse().map_err(computation) };
    let (max_b, max_big_b) = (parse("max_b")?, parse("max_big_b")?);
    let mut instances = 0;
    let mut failures = Vec::new();
    for b in 1..=max_b {
        for big_b in max_b + 1..=max_big_b {
            instances += 1;
            let ok = circulant_kernel_check(b, big_b).is_ok_and(|r| r.rank == big_b - 1 && r.all_ones_in_kernel);
            if !ok {
                failures.push(format!("({b},{big_b})"));
            }
        }
    }
    run.stored("instances", instances)?;
    run.stored("failures", failures.len())?;
    if !failures.is_empty() {
        run.push("failing_pairs", "", failures.join(" "));
    }
    Ok(())
}

fn run_euler(run: &mut Run) -> Result<(), SuiteError> {
    for s in 0..=5u64 {
        let a = eulerian_polynomial(s);
        let shown = if s == 0 { &a[..] } else { &a[1..] };
        run.stored(&format!("A{s}"), join(shown))?;
    }
    let e = euler_numbers(9);
    run.stored("E", join(&e))?;
    for s in (1..=9u64).step_by(2) {
        let v = crate::catalog::value_at_minus_one(&eulerian_polynomial(s));
        run.push(&format!("abs_A{s}(-1)"), &e[s as usize], v.magnitude());
    }
    Ok(())
}

/// Runs one example against the fixtures in `dir`.
pub fn run_example(name: &str, dir: &Path, seed: u64) -> Result<ExampleOutcome, SuiteError> {
    if !EXAMPLES.contains(&name) {
        return Err(SuiteError::UnknownExample(name.into()));
    }
    let exp = match load_expectations(dir, name) {
        Ok(e) => e,
        Err(e) => return Ok(Run::new(&Expectations::parse("", "").expect("empty")).finish(name, description(name), Some(e))),
    };
    let mut run = Run::new(&exp);
    let result = match name {
        "may4" => run_may4(&mut run, dir),
        "may5" => may5_run(seed).and_then(|r| run_determinantal(&mut run, r)),
        "may6" => may6_run(seed).and_then(|r| run_determinantal(&mut run, r)),
        "e3" => run_e3(&mut run, dir),
        "rem7_5" => run_rem7_5(&mut run, dir),
        "gl4" => run_gl4(&mut run),
        "segre3" => run_segre3(&mut run, seed),
        "det_2x2" => run_det_2x2(&mut run, seed),
        "circulant" => run_circulant(&mut run),
        "euler" => run_euler(&mut run),
        _ => unreachable!("checked above"),
    };
    Ok(run.finish(name, description(name), result.err()))
}

/// Runs every packaged example.
pub fn run_suite(dir: &Path, seed: u64) -> SuiteReport {
    let outcomes: Vec<ExampleOutcome> =
        EXAMPLES.iter().map(|n| run_example(n, dir, seed).expect("packaged names are known")).collect();
    SuiteReport {
        fixture_dir: dir.display().to_string(),
        seed,
        passed: outcomes.iter().all(|o| o.passed),
        outcomes,
    }
}

/// Field used by the fixture algebras of the packaged examples.
pub fn fixture_field(name: &str) -> Option<FieldSpec> {
    match name {
        "may4" | "e3" | "rem7_5" => Some(FieldSpec::Rationals),
        "may5" | "may6" | "segre3" | "det_2x2" => Some(FieldSpec::PrimeField(DEFAULT_PRIME)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn copy_fixtures() -> tempdir::Dir {
        tempdir::Dir::copy_of(&default_fixture_dir())
    }

    /// Scratch copy of the fixture directory, removed on drop.
    mod tempdir {
        use std::path::{Path, PathBuf};

        pub struct Dir(PathBuf);

        impl Dir {
            pub fn copy_of(src: &Path) -> Self {
                use std::sync::atomic::{AtomicU32, Ordering};
                static NEXT: AtomicU32 = AtomicU32::new(0);
                let n = NEXT.fetch_add(1, Ordering::Relaxed);
                let dir = std::env::temp_dir().join(format!("exactpair-fixtures-{}-{n}", std::process::id()));
                std::fs::create_dir_all(&dir).unwrap();
                for entry in std::fs::read_dir(src).unwrap() {
                    let entry = entry.unwrap();
                    std::fs::copy(entry.path(), dir.join(entry.file_name())).unwrap();
                }
                Dir(dir)
            }

            pub fn path(&self) -> &Path {
                &self.0
            }
        }

        impl Drop for Dir {
            fn drop(&mut self) {
                let _ = std::fs::remove_dir_all(&self.0);
            }
        }
    }

    #[test]
    fn expectation_files() {
        let e = Expectations::parse("t", "# c\nhf 1, 2\n\nkey  a b # tail\n").unwrap();
        assert_eq!(e.get("hf").unwrap(), "1, 2");
        assert_eq!(e.get("key").unwrap(), "a b");
        assert!(matches!(e.get("nope"), Err(SuiteError::MissingKey { .. })));
        assert!(Expectations::parse("t", "lonely\n").is_err());
        assert!(Expectations::parse("t", "a 1\na 2\n").is_err());
    }

    #[test]
    fn quick_examples_pass() {
        let dir = default_fixture_dir();
        for name in ["may4", "e3", "rem7_5", "gl4", "det_2x2", "euler"] {
            let o = run_example(name, &dir, DEFAULT_SEED).unwrap();
            assert!(o.passed, "{name}: {o:#?}");
        }
    }

    #[test]
    fn exact_pairs_are_recorded() {
        let o = run_example("may4", &default_fixture_dir(), DEFAULT_SEED).unwrap();
        assert_eq!(o.exact_pairs.len(), 1);
        let p = &o.exact_pairs[0];
        assert_eq!((p.d1, p.d2), (2, 2));
        assert!(p.divides && p.residuals_vanish);
        let e3 = run_example("e3", &default_fixture_dir(), DEFAULT_SEED).unwrap();
        assert_eq!(e3.exact_pairs[0].theta1, "x");
    }

    #[test]
    fn record_of_a_non_dividing_series_is_inconsistent() {
        let hf = HilbertData::new(vec![1, 6, 21, 16, 6]).unwrap();
        let r = exact_pair_record(&hf, "a".into(), "b".into(), 1, 2);
        assert!(!r.divides);
        assert!(!r.residuals_vanish);
        assert!(!r.consistent());
    }

    #[test]
    fn corrupted_fixture_fails() {
        let dir = copy_fixtures();
        let path = dir.path().join("may4.expect");
        let text = std::fs::read_to_string(&path).unwrap().replace("hf 1,5,11,21,29", "hf 1,5,11,21,30");
        std::fs::write(&path, text).unwrap();
        let o = run_example("may4", dir.path(), DEFAULT_SEED).unwrap();
        assert!(!o.passed);
        let bad: Vec<&str> = o.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(bad, ["hf"]);
    }

    #[test]
    fn missing_and_mismatched_fixtures_fail() {
        let dir = copy_fixtures();
        std::fs::remove_file(dir.path().join("euler.expect")).unwrap();
        let o = run_example("euler", dir.path(), DEFAULT_SEED).unwrap();
        assert!(!o.passed && o.error.is_some());

        let alg = dir.path().join("e3gor.alg");
        let text = std::fs::read_to_string(&alg).unwrap().replace("field Q", "field F 7");
        std::fs::write(&alg, text).unwrap();
        let o = run_example("e3", dir.path(), DEFAULT_SEED).unwrap();
        assert!(o.error.unwrap().contains("declares field F_7"));
    }

    #[test]
    fn unknown_example() {
        assert_eq!(
            run_example("may7", &default_fixture_dir(), 1).unwrap_err(),
            SuiteError::UnknownExample("may7".into())
        );
    }

    #[test]
    fn determinantal_reduction_is_seeded() {
        let a = determinantal_run(3, 3, 2, 5, 7).unwrap();
        let b = determinantal_run(3, 3, 2, 5, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hf, vec![1, 4, 1]);
        assert_eq!(a.generators, 9);
    }
}
