//! End-to-end runs through the public API: spec text to algebra, pair,
//! screen, factorization and periodic complex.

use exactpair::algebra::{build_algebra, parse_spec_file};
use exactpair::arith::{PrimeField, Rationals};
use exactpair::criterion::{divides, possible_d, sigma_profile, HilbertData};
use exactpair::ezd::{is_exact_zero_divisor, verify_pair};
use exactpair::factorization::{build_factorization, build_periodic_complex, check_strand_exactness, ComplexVariant};
use exactpair::poly::parse_polynomial;

const CUBE: &str = "
# three squares
field Q
vars x y z
gen x^2
gen y^2
gen z^2
";

#[test]
fn spec_text_to_exact_complex() {
    let spec = parse_spec_file(CUBE).unwrap().to_spec(&Rationals).unwrap();
    let a = build_algebra(&spec).unwrap();
    assert_eq!(a.hilbert_function(), [1, 3, 3, 1]);

    let x = parse_polynomial("x", a.vars(), a.field()).unwrap();
    let partner = is_exact_zero_divisor(&a, &x).unwrap().partner().cloned().unwrap();
    assert_eq!(partner, x);
    assert!(verify_pair(&a, &x, &partner).unwrap().is_exact());

    let hf = HilbertData::of(&a);
    assert!(divides(&hf, 2).unwrap());
    assert!(sigma_profile(&hf, 2).unwrap().is_constant());

    let theta = parse_polynomial("x*y + y*z", a.vars(), a.field()).unwrap();
    let mf = build_factorization(&a, &theta).unwrap();
    assert!(mf.verify().passed());
}

#[test]
fn quartic_line_complex_is_exact() {
    let text = "field Q\nvars x\ngen x^4\n";
    let a = build_algebra(&parse_spec_file(text).unwrap().to_spec(&Rationals).unwrap()).unwrap();
    let x2 = parse_polynomial("x^2", a.vars(), a.field()).unwrap();
    assert!(verify_pair(&a, &x2, &x2).unwrap().is_exact());
    let mf = build_factorization(&a, &x2).unwrap();
    for v in ComplexVariant::ALL {
        let pc = build_periodic_complex(&a, &mf, &x2, v).unwrap();
        let r = check_strand_exactness(&a, &pc, None);
        assert!(r.all_exact && r.alternating_sums_zero, "{v:?}");
    }
}

#[test]
fn same_text_over_two_fields() {
    let file = parse_spec_file(CUBE).unwrap();
    let q = build_algebra(&file.to_spec(&Rationals).unwrap()).unwrap();
    let f = build_algebra(&file.to_spec(&PrimeField::new(5).unwrap()).unwrap()).unwrap();
    assert_eq!(q.hilbert_function(), f.hilbert_function());
}

#[test]
fn reduce_lines_eliminate_variables() {
    let text = "field Q\nvars x y z\ngen x^2\ngen y^2\ngen z^2\nreduce z - x\n";
    let a = build_algebra(&parse_spec_file(text).unwrap().to_spec(&Rationals).unwrap()).unwrap();
    assert_eq!(a.nvars(), 2);
    assert_eq!(a.hilbert_function(), [1, 2, 1]);
}

#[test]
fn screen_rejects_an_odd_hilbert_series() {
    // 1 + 3t + t^2 takes the value -1 at t = -1, so no D = 2 pair
    let hf = HilbertData::new(vec![1, 3, 1]).unwrap();
    assert!(!divides(&hf, 2).unwrap());
    assert!(possible_d(&hf, &[2, 3]).unwrap().no_pair_possible());
}
