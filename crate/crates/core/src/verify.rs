//! Named verification suites: seeded randomized checks that cross-examine
//! every computation route in the crate against an independent one. Each
//! check is addressable by a stable id, runs on its own deterministic
//! stream, and reports pass/fail without aborting the suite.

use std::any::Any;
use std::cell::Cell;
use std::collections::BTreeSet;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Once;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::invariants::{
    bound_gap_witness, casson, casson_plus_one, d1_lens, d1_torus_two_strand, fox_milnor_check,
    FmStatus, InvariantError, ReportValue, SurgeryDesc, PROV_D1_LENS,
};
use crate::knots::{torus2_alexander, torus_alexander_by_division, KnotExpr};
use crate::lattice::{cable_d1_certificate, Definiteness, IntLattice, LatticeError};
use crate::oracle;
use crate::sympoly::SymPoly;
use crate::CableSign;

pub const DEFAULT_SEED: u64 = 0xCAB1ED;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub provenance: String,
    pub outcome: Result<(), String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// All checks of one suite run, in registration order.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.outcome {
                Ok(()) => writeln!(f, "ok   {}", check.id)?,
                Err(message) => {
                    writeln!(f, "FAIL {} ({}): {}", check.id, check.provenance, message)?
                }
            }
        }
        write!(
            f,
            "suite {}: {}/{} checks passed (seed {:#x})",
            self.suite,
            self.passed(),
            self.checks.len(),
            self.seed
        )
    }
}

pub fn suite_names() -> &'static [&'static str] {
    &["sympoly", "prop-prop", "casson", "witness", "lattice", "all"]
}

/// Run the named suite with the given seed. Unknown names yield `None`.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let mut suite = Suite { seed, checks: Vec::new() };
    match name {
        "sympoly" => add_sympoly_checks(&mut suite),
        "prop-prop" => add_prop_prop_checks(&mut suite),
        "casson" => add_casson_checks(&mut suite),
        "witness" => add_witness_checks(&mut suite),
        "lattice" => add_lattice_checks(&mut suite),
        "all" => {
            add_sympoly_checks(&mut suite);
            add_prop_prop_checks(&mut suite);
            add_casson_checks(&mut suite);
            add_witness_checks(&mut suite);
            add_lattice_checks(&mut suite);
        }
        _ => return None,
    }
    // Canonical ordering regardless of how the checks were scheduled.
    suite.checks.sort_by(|a, b| a.id.cmp(&b.id));
    Some(SuiteReport { suite: name.to_string(), seed, checks: suite.checks })
}

struct Suite {
    seed: u64,
    checks: Vec<CheckResult>,
}

impl Suite {
    fn check<F>(&mut self, id: impl Into<String>, provenance: &str, body: F)
    where
        F: FnOnce(&mut ChaCha8Rng) -> Result<(), String>,
    {
        let id = id.into();
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(self.seed, &id));
        let outcome = match quiet_catch(AssertUnwindSafe(|| body(&mut rng))) {
            Ok(result) => result,
            Err(payload) => Err(format!("panicked: {}", panic_text(payload.as_ref()))),
        };
        self.checks.push(CheckResult { id, provenance: provenance.to_string(), outcome });
    }
}

/// Derive a per-check stream from the suite seed and the check id, so
/// reordering or adding checks does not perturb the others.
fn mix_seed(seed: u64, id: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed.rotate_left(17);
    for b in id.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

thread_local! {
    static SILENCE_PANICS: Cell<bool> = const { Cell::new(false) };
}
static HOOK: Once = Once::new();

/// catch_unwind without the default hook's stderr noise for this thread.
fn quiet_catch<T>(body: AssertUnwindSafe<impl FnOnce() -> T>) -> Result<T, Box<dyn Any + Send>> {
    HOOK.call_once(|| {
        let default = std::panic::take_hook();
        std::panic::set_hook(Box::new(move |info| {
            if !SILENCE_PANICS.with(Cell::get) {
                default(info);
            }
        }));
    });
    SILENCE_PANICS.with(|c| c.set(true));
    let out = catch_unwind(body);
    SILENCE_PANICS.with(|c| c.set(false));
    out
}

fn panic_text(payload: &(dyn Any + Send)) -> String {
    if let Some(s) = payload.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = payload.downcast_ref::<String>() {
        s.clone()
    } else {
        "opaque panic payload".to_string()
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: &T, want: &T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

// ---------------------------------------------------------------------------
// random generators, reused by the acceptance tests

pub fn rand_sympoly<R: Rng + ?Sized>(rng: &mut R, max_degree: u32, max_abs: i64) -> SymPoly {
    let d = rng.random_range(0..=max_degree);
    let a0 = rng.random_range(-max_abs..=max_abs);
    let pairs: Vec<(u32, i64)> =
        (1..=d).map(|i| (i, rng.random_range(-max_abs..=max_abs))).collect();
    SymPoly::from_coeffs(a0, pairs).expect("basis indices start at 1")
}

/// Random polynomial with f(1) = 1, the normalization Alexander polynomials
/// carry.
pub fn rand_normalized_sympoly<R: Rng + ?Sized>(
    rng: &mut R,
    max_degree: u32,
    max_abs: i64,
) -> SymPoly {
    let d = rng.random_range(0..=max_degree);
    let pairs: Vec<(u32, i64)> =
        (1..=d).map(|i| (i, rng.random_range(-max_abs..=max_abs))).collect();
    let tail: i64 = pairs.iter().map(|&(_, c)| c).sum();
    SymPoly::from_coeffs(1 - 2 * tail, pairs).expect("basis indices start at 1")
}

pub fn rand_knot_expr<R: Rng + ?Sized>(rng: &mut R, depth: u32) -> KnotExpr {
    if depth == 0 || rng.random_range(0..4) == 0 {
        match rng.random_range(0..3) {
            0 => KnotExpr::unknot(),
            1 => KnotExpr::family_k(rng.random_range(-6..=6)),
            _ => {
                let pairs = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (2, 9), (4, 5), (2, -3), (-3, 5)];
                let (p, q) = pairs[rng.random_range(0..pairs.len())];
                KnotExpr::torus(p, q).expect("sample torus parameters are valid")
            }
        }
    } else {
        match rng.random_range(0..3) {
            0 => {
                let qs = [-5i64, -3, -1, 1, 3, 5, 7, 9];
                let q = qs[rng.random_range(0..qs.len())];
                KnotExpr::cable2(q, rand_knot_expr(rng, depth - 1))
                    .expect("odd cable parameters are valid")
            }
            1 => {
                let k = rng.random_range(2..=3);
                let parts = (0..k).map(|_| rand_knot_expr(rng, depth - 1)).collect();
                KnotExpr::sum(parts).expect("sums here are nonempty")
            }
            _ => KnotExpr::mirror(rand_knot_expr(rng, depth - 1)),
        }
    }
}

// ---------------------------------------------------------------------------
// sympoly suite

fn add_sympoly_checks(s: &mut Suite) {
    s.check("sympoly/ring-laws", "ring identities in the symmetric basis", |rng| {
        for case in 0..600 {
            let f = rand_sympoly(rng, 8, 6);
            let g = rand_sympoly(rng, 8, 6);
            let h = rand_sympoly(rng, 8, 6);
            expect_eq(
                &format!("case {case}: distributivity"),
                &f.add(&g).mul(&h),
                &f.mul(&h).add(&g.mul(&h)),
            )?;
            expect_eq(&format!("case {case}: commutativity"), &f.mul(&g), &g.mul(&f))?;
            expect_eq(
                &format!("case {case}: associativity"),
                &f.mul(&g).mul(&h),
                &f.mul(&g.mul(&h)),
            )?;
            expect_eq(&format!("case {case}: identity"), &f.mul(&SymPoly::one()), &f)?;
        }
        Ok(())
    });

    s.check(
        "sympoly/mul-matches-monomial-oracle",
        "reference multiplication in the monomial basis",
        |rng| {
            for case in 0..800 {
                let f = rand_sympoly(rng, 10, 9);
                let g = rand_sympoly(rng, 10, 9);
                expect_eq(
                    &format!("case {case}"),
                    &f.mul(&g),
                    &oracle::mul_by_monomials(&f, &g),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/second-derivative-oracle",
        "reference second derivative in the monomial basis",
        |rng| {
            for case in 0..1000 {
                let f = rand_sympoly(rng, 12, 9);
                expect_eq(
                    &format!("case {case}"),
                    &f.second_derivative_at_one(),
                    &oracle::second_derivative_by_monomials(&f),
                )?;
            }
            Ok(())
        },
    );

    s.check("sympoly/t0-oracle", "reference weighted sum in the monomial basis", |rng| {
        for case in 0..1000 {
            let f = rand_sympoly(rng, 12, 9);
            expect_eq(&format!("case {case}"), &f.t0(), &oracle::t0_by_monomials(&f))?;
        }
        Ok(())
    });

    s.check(
        "sympoly/t0-additive",
        "the weighted sum is a homomorphism of the additive group",
        |rng| {
            for case in 0..1000 {
                let f = rand_sympoly(rng, 12, 9);
                let g = rand_sympoly(rng, 12, 9);
                expect_eq(&format!("case {case}"), &f.add(&g).t0(), &(f.t0() + g.t0()))?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/t0-basis-multiple",
        "closed form for the weighted sum of f*T_k against the full product",
        |rng| {
            for case in 0..1000 {
                let f = rand_normalized_sympoly(rng, 30, 9);
                let k = rng.random_range(1..=40u32);
                let closed = f
                    .t0_of_basis_multiple(k)
                    .map_err(|e| format!("case {case}: rejected: {e}"))?;
                expect_eq(&format!("case {case}, k = {k}"), &closed, &f.mul(&SymPoly::basis(k)).t0())?;
            }
            Ok(())
        },
    );

    s.check("sympoly/eval-multiplicative", "evaluation at 1 is multiplicative", |rng| {
        for case in 0..1000 {
            let f = rand_sympoly(rng, 10, 9);
            let g = rand_sympoly(rng, 10, 9);
            expect_eq(
                &format!("case {case}"),
                &f.mul(&g).eval_at_one(),
                &(f.eval_at_one() * g.eval_at_one()),
            )?;
        }
        Ok(())
    });

    s.check(
        "sympoly/second-derivative-additive",
        "second derivative at 1 adds over products of normalized polynomials",
        |rng| {
            for case in 0..1000 {
                let f = rand_normalized_sympoly(rng, 10, 6);
                let g = rand_normalized_sympoly(rng, 10, 6);
                expect_eq(
                    &format!("case {case}"),
                    &f.mul(&g).second_derivative_at_one(),
                    &(f.second_derivative_at_one() + g.second_derivative_at_one()),
                )?;
            }
            Ok(())
        },
    );

    s.check("sympoly/degree-of-product", "degrees add under multiplication", |rng| {
        for case in 0..800 {
            let f = rand_sympoly(rng, 12, 9);
            let g = rand_sympoly(rng, 12, 9);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            expect_eq(&format!("case {case}"), &f.mul(&g).degree(), &(f.degree() + g.degree()))?;
        }
        Ok(())
    });

    s.check("sympoly/tbasis-roundtrip", "printing then parsing is the identity", |rng| {
        for case in 0..1000 {
            let f = rand_sympoly(rng, 12, 9);
            let back = SymPoly::parse_tbasis(&f.to_tbasis_string())
                .map_err(|e| format!("case {case}: reparse failed: {e}"))?;
            expect_eq(&format!("case {case}"), &back, &f)?;
        }
        Ok(())
    });

    s.check("sympoly/monomial-roundtrip", "printing then parsing is the identity", |rng| {
        for case in 0..1000 {
            let f = rand_sympoly(rng, 12, 9);
            let back = SymPoly::parse_monomial(&f.to_monomial_string())
                .map_err(|e| format!("case {case}: reparse failed: {e}"))?;
            expect_eq(&format!("case {case}"), &back, &f)?;
        }
        Ok(())
    });

    s.check(
        "sympoly/substitute-power-oracle",
        "substitution t -> t^p matches the monomial computation",
        |rng| {
            for case in 0..500 {
                let f = rand_sympoly(rng, 10, 9);
                let p = rng.random_range(2..=4u32);
                let mut scaled = std::collections::BTreeMap::new();
                for (e, c) in oracle::monomial_map(&f) {
                    scaled.insert(e * i64::from(p), c);
                }
                expect_eq(
                    &format!("case {case}, p = {p}"),
                    &f.substitute_power(p),
                    &oracle::from_monomial_map(&scaled),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/alexander-normalized",
        "Alexander polynomials evaluate to 1 at t = 1",
        |rng| {
            for case in 0..300 {
                let e = rand_knot_expr(rng, 3);
                expect_eq(&format!("case {case} ({e})"), &e.alexander().eval_at_one(), &BigInt::one())?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/alexander-mirror-invariant",
        "mirroring preserves the Alexander polynomial",
        |rng| {
            for case in 0..200 {
                let e = rand_knot_expr(rng, 3);
                expect_eq(
                    &format!("case {case} ({e})"),
                    &KnotExpr::mirror(e.clone()).alexander(),
                    &e.alexander(),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/alexander-sum-multiplicative",
        "connected sums multiply Alexander polynomials",
        |rng| {
            for case in 0..200 {
                let a = rand_knot_expr(rng, 2);
                let b = rand_knot_expr(rng, 2);
                let sum = KnotExpr::sum(vec![a.clone(), b.clone()])
                    .map_err(|e| format!("case {case}: {e}"))?;
                expect_eq(
                    &format!("case {case}"),
                    &sum.alexander(),
                    &a.alexander().mul(&b.alexander()),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/torus-division-agrees",
        "closed form against polynomial long division",
        |_| {
            for r in 1..=25i64 {
                let q = (2 * r + 1) as u64;
                expect_eq(
                    &format!("r = {r}"),
                    &torus2_alexander(r),
                    &torus_alexander_by_division(2, q),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/torus-t0-ceiling",
        "closed form ceil(r/2) for two-strand torus knots",
        |_| {
            for r in 1..=50i64 {
                expect_eq(
                    &format!("r = {r}"),
                    &torus2_alexander(r).t0(),
                    &BigInt::from((r + 1) / 2),
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "sympoly/torus-d1-both-paths",
        "closed form against -2*t0 from the polynomial",
        |_| {
            for k in 1..=50i64 {
                for q in [4 * k + 1, 4 * k - 1] {
                    let report =
                        d1_torus_two_strand(q).map_err(|e| format!("q = {q}: {e}"))?;
                    expect_eq(
                        &format!("q = {q}: closed form"),
                        &report.value,
                        &ReportValue::Exact { value: -2 * k },
                    )?;
                    let poly_route = BigInt::from(-2) * torus2_alexander((q - 1) / 2).t0();
                    expect_eq(&format!("q = {q}: polynomial route"), &poly_route, &BigInt::from(-2 * k))?;
                }
            }
            Ok(())
        },
    );

    s.check("sympoly/grammar-roundtrip", "printing then parsing is the identity", |rng| {
        for case in 0..300 {
            let e = rand_knot_expr(rng, 3);
            let back = KnotExpr::parse(&e.to_string())
                .map_err(|err| format!("case {case} ({e}): reparse failed: {err}"))?;
            expect_eq(&format!("case {case}"), &back, &e)?;
        }
        Ok(())
    });
}

// ---------------------------------------------------------------------------
// prop-prop suite: one check per torus companion and cable sign

fn add_prop_prop_checks(s: &mut Suite) {
    const PAIRS: [(i64, i64); 11] = [
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (3, 5),
        (3, 7),
        (4, 5),
        (4, 7),
        (5, 6),
        (5, 7),
        (6, 7),
    ];
    for (p, q) in PAIRS {
        for sign in [CableSign::Plus, CableSign::Minus] {
            let s_off: i64 = match sign {
                CableSign::Plus => 1,
                CableSign::Minus => -1,
            };
            s.check(
                format!("prop-prop/T({p},{q})/{sign}"),
                "the cable's surgery value collapses to the two-strand torus value",
                move |_| {
                    let torus = KnotExpr::torus(p, q).map_err(|e| e.to_string())?;
                    let cable_q = 2 * p * q + s_off;
                    let cable = KnotExpr::cable2(cable_q, torus).map_err(|e| e.to_string())?;
                    let from_product = i64::try_from(
                        &(BigInt::from(-2) * cable.alexander().t0()),
                    )
                    .map_err(|_| "d1 does not fit i64".to_string())?;

                    let closed = d1_torus_two_strand(cable_q).map_err(|e| e.to_string())?;
                    expect_eq(
                        "full cabling product vs closed form for T(2,q)",
                        &closed.value,
                        &ReportValue::Exact { value: from_product },
                    )?;

                    let slope = 4 * p * q + s_off;
                    let surgery = SurgeryDesc::new(cable, slope).map_err(|e| e.to_string())?;
                    let report = d1_lens(&surgery, false).map_err(|e| e.to_string())?;
                    expect_eq(
                        "lens-surgery d1",
                        &report.value,
                        &ReportValue::Exact { value: from_product },
                    )?;
                    expect_eq(
                        "lens route must be recognized, not assumed",
                        &report.provenance.as_str(),
                        &PROV_D1_LENS,
                    )
                },
            );
        }
    }
}

// ---------------------------------------------------------------------------
// casson suite

fn add_casson_checks(s: &mut Suite) {
    s.check("casson/unknot", "surgery on the unknot returns the three-sphere", |_| {
        let surgery = SurgeryDesc::new(KnotExpr::unknot(), 1).map_err(|e| e.to_string())?;
        expect_eq("value", &casson(&surgery).map_err(|e| e.to_string())?, &0)
    });

    s.check(
        "casson/twist-family",
        "the twisting parameter is the invariant of the surgered sphere",
        |_| {
            for n in -10..=10i64 {
                let surgery =
                    SurgeryDesc::new(KnotExpr::family_k(n), 1).map_err(|e| e.to_string())?;
                expect_eq(
                    &format!("n = {n}"),
                    &casson(&surgery).map_err(|e| e.to_string())?,
                    &n,
                )?;
            }
            Ok(())
        },
    );

    s.check(
        "casson/torus-two-strand",
        "closed form r(r+1)/2 for two-strand torus knots",
        |_| {
            for r in 1..=20i64 {
                let torus = KnotExpr::torus(2, 2 * r + 1).map_err(|e| e.to_string())?;
                expect_eq(
                    &format!("r = {r}"),
                    &casson_plus_one(&torus).map_err(|e| e.to_string())?,
                    &(r * (r + 1) / 2),
                )?;
            }
            Ok(())
        },
    );

    s.check("casson/additive-under-sum", "additivity over connected sums", |rng| {
        for case in 0..200 {
            let a = rand_knot_expr(rng, 2);
            let b = rand_knot_expr(rng, 2);
            let sum =
                KnotExpr::sum(vec![a.clone(), b.clone()]).map_err(|e| format!("case {case}: {e}"))?;
            let lhs = casson_plus_one(&sum).map_err(|e| format!("case {case}: {e}"))?;
            let rhs = casson_plus_one(&a).map_err(|e| format!("case {case}: {e}"))?
                + casson_plus_one(&b).map_err(|e| format!("case {case}: {e}"))?;
            expect_eq(&format!("case {case}"), &lhs, &rhs)?;
        }
        Ok(())
    });

    s.check("casson/mirror-invariant", "the second derivative at 1 ignores mirroring", |rng| {
        for case in 0..200 {
            let e = rand_knot_expr(rng, 3);
            let lhs = casson_plus_one(&KnotExpr::mirror(e.clone()))
                .map_err(|err| format!("case {case}: {err}"))?;
            let rhs = casson_plus_one(&e).map_err(|err| format!("case {case}: {err}"))?;
            expect_eq(&format!("case {case} ({e})"), &lhs, &rhs)?;
        }
        Ok(())
    });

    s.check("casson/slope-guard", "only +1-surgery is evaluated", |_| {
        let two = SurgeryDesc::new(KnotExpr::unknot(), 2).map_err(|e| e.to_string())?;
        match casson(&two) {
            Err(InvariantError::UnsupportedSlope { slope: 2 }) => {}
            other => return Err(format!("slope 2 accepted: {other:?}")),
        }
        match SurgeryDesc::new(KnotExpr::unknot(), 0) {
            Err(InvariantError::ZeroSlope) => Ok(()),
            other => Err(format!("slope 0 accepted: {other:?}")),
        }
    });

    let mut values = Vec::new();
    for n in -5..=5i64 {
        for k in 1..=4i64 {
            values.push((n, k, 4 * n + 2 * k * k + k));
            s.check(
                format!("casson/M({n},{k})"),
                "closed form 4n + 2k^2 + k for the two-parameter surgery family",
                move |_| {
                    let expr = family_surgery_knot(n, k).map_err(|e| e.to_string())?;
                    let surgery = SurgeryDesc::new(expr, 1).map_err(|e| e.to_string())?;
                    expect_eq(
                        "value",
                        &casson(&surgery).map_err(|e| e.to_string())?,
                        &(4 * n + 2 * k * k + k),
                    )
                },
            );
        }
    }

    s.check(
        "casson/surgery-family-distinct",
        "the 44 family values are pairwise distinct",
        move |_| {
            let set: BTreeSet<i64> = values.iter().map(|&(_, _, v)| v).collect();
            expect_eq("distinct count", &set.len(), &values.len())
        },
    );
}

/// The knot whose +1-surgery realizes the value 4n + 2k^2 + k: a doubled
/// twist knot summed with a two-strand torus knot.
fn family_surgery_knot(n: i64, k: i64) -> Result<KnotExpr, InvariantError> {
    let doubled = KnotExpr::cable2(1, KnotExpr::family_k(n))?;
    let torus = KnotExpr::torus(2, 4 * k + 1)?;
    Ok(KnotExpr::sum(vec![doubled, torus])?)
}

// ---------------------------------------------------------------------------
// witness suite

fn add_witness_checks(s: &mut Suite) {
    for a in (2..=20i64).step_by(2) {
        for b in (0..a).step_by(2) {
            s.check(
                format!("witness/a{a}-b{b}"),
                "cable construction hitting |d1| = a and 2*tau = b exactly",
                move |_| {
                    for n in 1..=5i64 {
                        let w = bound_gap_witness(a, b, n)
                            .map_err(|e| format!("n = {n}: {e}"))?;
                        expect_eq(
                            &format!("n = {n}: d1"),
                            &w.d1.value,
                            &ReportValue::Exact { value: -a },
                        )?;
                        expect_eq(
                            &format!("n = {n}: tau"),
                            &w.tau.value,
                            &ReportValue::Exact { value: b / 2 },
                        )?;
                        let back = KnotExpr::parse(&w.expr.to_string())
                            .map_err(|e| format!("n = {n}: reparse failed: {e}"))?;
                        expect_eq(&format!("n = {n}: roundtrip"), &back, &w.expr)?;
                    }
                    Ok(())
                },
            );
        }
    }

    for l in 1..=5i64 {
        s.check(
            format!("witness/fm/K{l}-doubled"),
            "doubled summands square every factor of the product",
            move |_| {
                let status = fm_status_of_cable_sum(l, l)?;
                expect_eq("status", &status, &FmStatus::IsFmForm)
            },
        );
    }
    for l in 1..=5i64 {
        for m in (l + 1)..=5i64 {
            s.check(
                format!("witness/fm/K{l}-vs-K{m}"),
                "mismatched summands leave an odd self-reciprocal factor",
                move |_| {
                    let status = fm_status_of_cable_sum(l, m)?;
                    expect_eq("status", &status, &FmStatus::NotFmForm)
                },
            );
        }
    }

    s.check("witness/rejects-bad-parameters", "parameter validation", |_| {
        for (a, b, n) in [(3, 0, 1), (2, 2, 1), (4, 1, 1), (4, 2, 0), (2002, 0, 1), (0, 0, 1)] {
            match bound_gap_witness(a, b, n) {
                Err(InvariantError::WitnessParams { .. }) => {}
                other => return Err(format!("({a}, {b}, {n}) accepted: {other:?}")),
            }
        }
        Ok(())
    });
}

fn fm_status_of_cable_sum(l: i64, m: i64) -> Result<FmStatus, String> {
    let part = |j: i64| KnotExpr::cable2(3, KnotExpr::family_k(j)).map_err(|e| e.to_string());
    let sum = KnotExpr::sum(vec![part(l)?, part(m)?]).map_err(|e| e.to_string())?;
    fox_milnor_check(&sum.alexander()).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// lattice suite

fn add_lattice_checks(s: &mut Suite) {
    s.check(
        "lattice/e8-wellformed",
        "determinant, parity, definiteness and signature of the rank-8 even form",
        |_| {
            let e8 = IntLattice::minus_e8();
            expect_eq("determinant", &e8.determinant(), &BigInt::one())?;
            expect_eq("even", &e8.is_even(), &true)?;
            expect_eq("definiteness", &e8.definiteness(), &Definiteness::NegativeDefinite)?;
            expect_eq("signature", &e8.signature().map_err(|e| e.to_string())?, &(0, 8, -8))?;
            expect_eq(
                "zero characteristic",
                &e8.is_characteristic(&[0; 8]).map_err(|e| e.to_string())?,
                &true,
            )
        },
    );

    s.check("lattice/e8-dbound", "the even form pins its bound at rank/4", |_| {
        let db = IntLattice::minus_e8().d_lower_bound(2, 16).map_err(|e| e.to_string())?;
        expect_eq("bound", &db.bound, &BigRational::from(BigInt::from(2)))?;
        expect_eq("attained", &db.attained, &vec![0; 8])?;
        expect_eq("interior", &db.interior, &true)
    });

    s.check("lattice/e8-sum-dbound", "bounds add over direct sums of even forms", |_| {
        let e8 = IntLattice::minus_e8();
        let db = e8.direct_sum(&e8).d_lower_bound(2, 16).map_err(|e| e.to_string())?;
        expect_eq("bound", &db.bound, &BigRational::from(BigInt::from(4)))?;
        expect_eq("interior", &db.interior, &true)
    });

    s.check(
        "lattice/diagonal-dbound",
        "odd diagonal forms bottom out at the all-ones vector",
        |_| {
            for n in 1..=8usize {
                let db = IntLattice::diag(&vec![-1; n])
                    .d_lower_bound(3, 12)
                    .map_err(|e| format!("n = {n}: {e}"))?;
                expect_eq(&format!("n = {n}: bound"), &db.bound, &BigRational::zero())?;
                expect_eq(&format!("n = {n}: attained"), &db.attained, &vec![1; n])?;
                expect_eq(&format!("n = {n}: interior"), &db.interior, &true)?;
            }
            let db = IntLattice::diag(&[-2]).d_lower_bound(3, 12).map_err(|e| e.to_string())?;
            expect_eq("diag(-2)", &db.bound, &BigRational::new(BigInt::one(), BigInt::from(4)))?;
            let db =
                IntLattice::diag(&[-1, -3]).d_lower_bound(3, 12).map_err(|e| e.to_string())?;
            expect_eq(
                "diag(-1,-3)",
                &db.bound,
                &BigRational::new(BigInt::from(-1), BigInt::from(2)),
            )
        },
    );

    s.check(
        "lattice/dbound-radius-stability",
        "enlarging a saturated search radius cannot move the bound",
        |_| {
            for entries in [vec![-1i64; 4], vec![-2, -2], vec![-1, -3, -1], vec![-2, -1, -4]] {
                let l = IntLattice::diag(&entries);
                let small = l.d_lower_bound(1, 12).map_err(|e| e.to_string())?;
                let large = l.d_lower_bound(3, 12).map_err(|e| e.to_string())?;
                expect_eq(&format!("{entries:?}: bound"), &small.bound, &large.bound)?;
                expect_eq(&format!("{entries:?}: attained"), &small.attained, &large.attained)?;
            }
            Ok(())
        },
    );

    s.check(
        "lattice/certificates",
        "both certificate routes land on -2k for every k up to 50",
        |_| {
            for k in 1..=50i64 {
                for sign in [CableSign::Plus, CableSign::Minus] {
                    let cert = cable_d1_certificate(k, sign)
                        .map_err(|e| format!("k = {k}, {sign}: {e}"))?;
                    expect_eq(&format!("k = {k}, {sign}: upper"), &cert.upper, &(-2 * k))?;
                    expect_eq(&format!("k = {k}, {sign}: lower"), &cert.lower, &(-2 * k))?;
                }
            }
            Ok(())
        },
    );

    s.check(
        "lattice/certificate-matches-torus-formula",
        "the certificate agrees with the closed-form torus value",
        |_| {
            for k in 1..=20i64 {
                for sign in [CableSign::Plus, CableSign::Minus] {
                    let cert = cable_d1_certificate(k, sign)
                        .map_err(|e| format!("k = {k}, {sign}: {e}"))?;
                    let report = d1_torus_two_strand(cert.q)
                        .map_err(|e| format!("k = {k}, {sign}: {e}"))?;
                    expect_eq(
                        &format!("k = {k}, {sign}"),
                        &report.value,
                        &ReportValue::Exact { value: cert.lower },
                    )?;
                }
            }
            Ok(())
        },
    );

    s.check(
        "lattice/random-definiteness-vs-signature",
        "minor signs agree with the diagonalized inertia",
        |rng| {
            for case in 0..500 {
                let n = rng.random_range(1..=6usize);
                let mut rows = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in 0..=i {
                        let v = rng.random_range(-9..=9);
                        rows[i][j] = v;
                        rows[j][i] = v;
                    }
                }
                let l = IntLattice::from_rows(rows).map_err(|e| format!("case {case}: {e}"))?;
                let def = l.definiteness();
                match l.signature() {
                    Err(LatticeError::Degenerate) => {
                        expect_eq(&format!("case {case} ({l})"), &def, &Definiteness::Degenerate)?;
                    }
                    Err(other) => return Err(format!("case {case}: {other}")),
                    Ok((pos, neg, sig)) => {
                        expect_eq(&format!("case {case}: full rank"), &(pos + neg), &n)?;
                        expect_eq(&format!("case {case}: excess"), &sig, &(pos as i64 - neg as i64))?;
                        let want = if pos == n {
                            Definiteness::PositiveDefinite
                        } else if neg == n {
                            Definiteness::NegativeDefinite
                        } else {
                            Definiteness::Indefinite
                        };
                        expect_eq(&format!("case {case} ({l})"), &def, &want)?;
                    }
                }
            }
            Ok(())
        },
    );

    s.check(
        "lattice/characteristic-translation",
        "characteristic vectors form a coset of twice the lattice",
        |rng| {
            for case in 0..300 {
                let n = rng.random_range(1..=8usize);
                let entries: Vec<i64> = (0..n).map(|_| rng.random_range(-9..=9)).collect();
                let l = IntLattice::diag(&entries);
                let v: Vec<i64> = entries
                    .iter()
                    .map(|d| (d % 2).abs() + 2 * rng.random_range(-4..=4i64))
                    .collect();
                expect_eq(
                    &format!("case {case}: base vector"),
                    &l.is_characteristic(&v).map_err(|e| e.to_string())?,
                    &true,
                )?;
                let shifted: Vec<i64> =
                    v.iter().map(|x| x + 2 * rng.random_range(-4..=4i64)).collect();
                expect_eq(
                    &format!("case {case}: shifted vector"),
                    &l.is_characteristic(&shifted).map_err(|e| e.to_string())?,
                    &true,
                )?;
                if let Some(i) = entries.iter().position(|d| d % 2 != 0) {
                    let mut broken = v.clone();
                    broken[i] += 1;
                    expect_eq(
                        &format!("case {case}: parity break at {i}"),
                        &l.is_characteristic(&broken).map_err(|e| e.to_string())?,
                        &false,
                    )?;
                }
            }
            Ok(())
        },
    );

    s.check(
        "lattice/even-forms-zero-characteristic",
        "zero is characteristic exactly when the form is even",
        |rng| {
            let e8 = IntLattice::minus_e8();
            expect_eq("e8", &e8.is_characteristic(&[0; 8]).map_err(|e| e.to_string())?, &true)?;
            for case in 0..200 {
                let n = rng.random_range(1..=6usize);
                let entries: Vec<i64> = (0..n).map(|_| rng.random_range(-9..=9)).collect();
                let l = IntLattice::diag(&entries);
                expect_eq(
                    &format!("case {case} ({entries:?})"),
                    &l.is_characteristic(&vec![0; n]).map_err(|e| e.to_string())?,
                    &l.is_even(),
                )?;
            }
            Ok(())
        },
    );

    s.check("lattice/signature-diagonal", "inertia of mixed diagonal forms", |_| {
        for n in 1..=8usize {
            let mut entries = vec![1i64];
            entries.extend(std::iter::repeat(-1).take(n));
            let l = IntLattice::diag(&entries);
            expect_eq(
                &format!("n = {n}"),
                &l.signature().map_err(|e| e.to_string())?,
                &(1, n, 1 - n as i64),
            )?;
        }
        Ok(())
    });

    s.check("lattice/parse-roundtrip", "printing then parsing is the identity", |rng| {
        for case in 0..200 {
            let n = rng.random_range(1..=5usize);
            let mut rows = vec![vec![0i64; n]; n];
            for i in 0..n {
                for j in 0..=i {
                    let v = rng.random_range(-99..=99);
                    rows[i][j] = v;
                    rows[j][i] = v;
                }
            }
            let l = IntLattice::from_rows(rows.clone()).map_err(|e| format!("case {case}: {e}"))?;
            let back = IntLattice::parse(&l.to_string())
                .map_err(|e| format!("case {case}: reparse failed: {e}"))?;
            expect_eq(&format!("case {case}: inline"), &back, &l)?;
            let mut text = format!("{n}\n");
            for row in &rows {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                text.push_str(&cells.join(" "));
                text.push('\n');
            }
            let back = IntLattice::parse(&text)
                .map_err(|e| format!("case {case}: text reparse failed: {e}"))?;
            expect_eq(&format!("case {case}: text"), &back, &l)?;
        }
        Ok(())
    });
}
