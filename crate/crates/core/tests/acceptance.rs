//! End-to-end acceptance gate: eight exact checks, one test each, covering
//! the cable collapse identity, closed forms, the witness family, the
//! lattice bounds, and the randomized oracle suites.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cabled_core::invariants::{
    bound_gap_witness, casson, d1_torus_two_strand, fox_milnor_check, FmStatus, ReportValue,
    SurgeryDesc,
};
use cabled_core::knots::KnotExpr;
use cabled_core::lattice::{cable_d1_certificate, IntLattice};
use cabled_core::oracle;
use cabled_core::sympoly::SymPoly;
use cabled_core::verify::{
    rand_knot_expr, rand_normalized_sympoly, rand_sympoly, run_suite, DEFAULT_SEED,
};
use cabled_core::CableSign;

#[test]
fn c1_cable_surgery_value_collapses_to_torus_value() {
    let report = run_suite("prop-prop", DEFAULT_SEED).unwrap();
    assert_eq!(report.checks.len(), 22, "expected exactly 22 collapse checks");
    for check in &report.checks {
        assert!(check.passed(), "{}: {:?}", check.id, check.outcome);
    }
    println!("criterion 1: PASS - all 22 cable collapse identities hold exactly");
}

#[test]
fn c2_torus_d1_closed_form_matches_t0_pipeline() {
    for k in 1..=50i64 {
        for q in [4 * k + 1, 4 * k - 1] {
            let closed = d1_torus_two_strand(q).unwrap();
            assert_eq!(
                closed.value,
                ReportValue::Exact { value: -2 * k },
                "closed form at q = {q}"
            );
            let torus = KnotExpr::torus(2, q).unwrap();
            let from_t0 = BigInt::from(-2) * torus.alexander().t0();
            assert_eq!(from_t0, BigInt::from(-2 * k), "t0 pipeline at q = {q}");
        }
    }
    println!("criterion 2: PASS - d1(T(2,4k+-1)) = -2k on both pipelines for k = 1..50");
}

#[test]
fn c3_basis_multiple_closed_form_matches_brute_force_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 3);
    for case in 0..1000 {
        let f = rand_normalized_sympoly(&mut rng, 30, 9);
        let k = 1 + (case % 40) as u32;
        let closed = f.t0_of_basis_multiple(k).unwrap();
        let brute = f.mul(&SymPoly::basis(k)).t0();
        assert_eq!(closed, brute, "case {case}, k = {k}");
    }
    println!("criterion 3: PASS - 1000 closed-form t0(f*T_k) values match the product route");
}

#[test]
fn c4_t0_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 4);
    for case in 0..1000 {
        let f = rand_sympoly(&mut rng, 20, 9);
        let g = rand_sympoly(&mut rng, 20, 9);
        assert_eq!(f.add(&g).t0(), f.t0() + g.t0(), "case {case}");
    }
    println!("criterion 4: PASS - t0 additive on 1000 random pairs");
}

#[test]
fn c5_casson_family_values_and_separation() {
    let family = |n: i64, k: i64| -> i64 {
        let doubled = KnotExpr::cable2(1, KnotExpr::family_k(n)).unwrap();
        let torus = KnotExpr::torus(2, 4 * k + 1).unwrap();
        let knot = KnotExpr::sum(vec![doubled, torus]).unwrap();
        casson(&SurgeryDesc::new(knot, 1).unwrap()).unwrap()
    };
    let mut values = Vec::new();
    for k in 1..=4i64 {
        for n in -5..=5i64 {
            let lambda = family(n, k);
            assert_eq!(lambda, 4 * n + 2 * k * k + k, "n = {n}, k = {k}");
            values.push((n, k, lambda));
        }
    }
    for &(n, k, ln) in &values {
        for &(m, k2, lm) in &values {
            if k == k2 && n != m {
                assert_eq!(ln - lm, 4 * (n - m), "separation at n = {n}, m = {m}, k = {k}");
                assert_ne!(ln, lm, "collision at n = {n}, m = {m}, k = {k}");
            }
        }
    }
    println!("criterion 5: PASS - 44 surgery values hit 4n + 2k^2 + k and separate by 4(n - m)");
}

#[test]
fn c6_witness_targets_and_fox_milnor_distinguishability() {
    for a in (2..=40i64).step_by(2) {
        for b in (0..a).step_by(2) {
            for n in 1..=5i64 {
                let w = bound_gap_witness(a, b, n).unwrap();
                assert_eq!(
                    w.d1.value,
                    ReportValue::Exact { value: -a },
                    "d1 at (a, b, n) = ({a}, {b}, {n})"
                );
                assert_eq!(
                    w.tau.value,
                    ReportValue::Exact { value: b / 2 },
                    "tau at (a, b, n) = ({a}, {b}, {n})"
                );
            }
        }
    }
    // distinct family indices stay distinguishable after summing: the
    // product polynomial is a square exactly on the diagonal
    for l in 1..=5i64 {
        for m in 1..=5i64 {
            let wl = bound_gap_witness(2, 0, l).unwrap().expr;
            let wm = bound_gap_witness(2, 0, m).unwrap().expr;
            let sum = KnotExpr::sum(vec![wl, wm]).unwrap();
            let status = fox_milnor_check(&sum.alexander()).unwrap();
            let want = if l == m { FmStatus::IsFmForm } else { FmStatus::NotFmForm };
            assert_eq!(status, want, "(l, m) = ({l}, {m})");
        }
    }
    println!(
        "criterion 6: PASS - 1050 witnesses hit |d1| = a, 2|tau| = b; sums are \
         factorization-distinguishable across family indices"
    );
}

#[test]
fn c7_lattice_bounds_and_certificates() {
    for n in 1..=8usize {
        let db = IntLattice::diag(&vec![-1; n]).d_lower_bound(3, 12).unwrap();
        assert_eq!(db.bound, BigRational::zero(), "diagonal rank {n}");
        assert!(db.interior, "diagonal rank {n} search must be complete");
    }
    let e8 = IntLattice::minus_e8();
    let mut form = e8.clone();
    for k in 1..=2i64 {
        let db = form.d_lower_bound(2, 16).unwrap();
        assert_eq!(db.bound, BigRational::from(BigInt::from(2 * k)), "k = {k}");
        form = form.direct_sum(&e8);
    }
    for k in 1..=50i64 {
        for sign in [CableSign::Plus, CableSign::Minus] {
            let cert = cable_d1_certificate(k, sign).unwrap();
            assert_eq!(cert.upper, -2 * k, "upper at k = {k}, {sign:?}");
            assert_eq!(cert.lower, -2 * k, "lower at k = {k}, {sign:?}");
        }
    }
    println!(
        "criterion 7: PASS - diagonal bounds 0, even-form bounds 2k, 100 certificates at -2k"
    );
}

#[test]
fn c8_ring_laws_oracle_equivalence_and_roundtrips() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 8);
    for case in 0..1000 {
        let f = rand_sympoly(&mut rng, 8, 6);
        let g = rand_sympoly(&mut rng, 8, 6);
        let h = rand_sympoly(&mut rng, 8, 6);
        assert_eq!(
            f.add(&g).mul(&h),
            f.mul(&h).add(&g.mul(&h)),
            "distributivity, case {case}"
        );
        assert_eq!(f.mul(&g), g.mul(&f), "commutativity, case {case}");
        assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)), "associativity, case {case}");
        assert_eq!(f.mul(&SymPoly::one()), f, "identity, case {case}");
    }
    for case in 0..1000 {
        let f = rand_sympoly(&mut rng, 10, 9);
        let g = rand_sympoly(&mut rng, 10, 9);
        assert_eq!(f.mul(&g), oracle::mul_by_monomials(&f, &g), "oracle, case {case}");
    }
    for case in 0..400 {
        let e = rand_knot_expr(&mut rng, 4);
        assert_eq!(
            e.alexander().eval_at_one(),
            BigInt::from(1),
            "normalization, case {case} ({e})"
        );
        let back = KnotExpr::parse(&e.to_string()).unwrap();
        assert_eq!(back, e, "round-trip, case {case}");
    }
    println!(
        "criterion 8: PASS - ring laws and oracle equivalence (1000 each), normalization and \
         parser round-trip (400 expressions)"
    );
}
