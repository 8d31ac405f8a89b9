//! Concordance invariants and surgery formulas: the Casson invariant of
//! +1-surgery, the correction-term invariant d1, the cabling formula for tau,
//! the stacking invariant ds, gap witnesses, and the Fox-Milnor test.
//!
//! Every computed number is wrapped in an [`InvariantReport`] that records
//! how it was obtained and whether it is exact, a bound, or an interval.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::factor;
use crate::knots::{KnotError, KnotExpr, Node};
use crate::sympoly::SymPoly;
use crate::CableSign;

pub const PROV_T0: &str = "weighted coefficient sum of the symmetrized Alexander polynomial";
pub const PROV_CASSON: &str = "half the second derivative of the Alexander polynomial at 1";
pub const PROV_D1_LENS: &str = "lens-space surgery formula d1 = -2*t0";
pub const PROV_D1_LENS_ASSUMED: &str = "lens-space surgery formula d1 = -2*t0 (lens surgery assumed)";
pub const PROV_D1_TORUS: &str = "alternating torus-knot value d1(T(2,4k+-1)) = -2k";
pub const PROV_D1_CABLE_EQUALITY: &str =
    "two-strand cable equality: the companion bounds a null-homologous disk";
pub const PROV_D1_CABLE_UPPER: &str = "two-strand cable upper bound from the surgery lattice";
pub const PROV_D1_SKEIN_INTERVAL: &str = "skein inequality for two-strand cables (odd q <= 1)";
pub const PROV_ATTRS: &str = "stored knot attributes";
pub const PROV_DS_CABLE: &str =
    "two-strand cable value: the companion bounds a null-homologous disk";

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error("surgery slope cannot be 0")]
    ZeroSlope,
    #[error("the Casson computation applies to +1-surgery only, got slope {slope}")]
    UnsupportedSlope { slope: i64 },
    #[error("the lens-surgery formula needs a positive slope, got {slope}")]
    NonPositiveSlope { slope: i64 },
    #[error("slope-{slope} surgery on {expr} is not a recognized lens-space surgery; pass assume-lens to compute anyway")]
    NotKnownLensSurgery { expr: String, slope: i64 },
    #[error("the closed-form value needs an odd parameter q > 1, got {q}")]
    TorusParamOutOfRange { q: i64 },
    #[error("witness parameters rejected: {reason}")]
    WitnessParams { reason: String },
    #[error("the Fox-Milnor test needs f(1) = 1 or -1, got {value}")]
    NotUnitAtOne { value: BigInt },
    #[error("the zero polynomial is not an Alexander polynomial")]
    ZeroPolynomial,
    #[error("value does not fit in 64 bits")]
    Overflow,
}

/// How a reported number is qualified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReportValue {
    Exact { value: i64 },
    UpperBound { value: i64 },
    Interval { lo: i64, hi: i64 },
    Unknown,
}

/// One named invariant with its value qualifier and a note on the route that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    #[serde(flatten)]
    pub value: ReportValue,
    pub provenance: String,
}

impl InvariantReport {
    pub(crate) fn exact(name: &str, value: i64, provenance: impl Into<String>) -> Self {
        InvariantReport {
            name: name.to_owned(),
            value: ReportValue::Exact { value },
            provenance: provenance.into(),
        }
    }

    pub(crate) fn upper(name: &str, value: i64, provenance: impl Into<String>) -> Self {
        InvariantReport {
            name: name.to_owned(),
            value: ReportValue::UpperBound { value },
            provenance: provenance.into(),
        }
    }

    pub(crate) fn interval(name: &str, lo: i64, hi: i64, provenance: impl Into<String>) -> Self {
        InvariantReport {
            name: name.to_owned(),
            value: ReportValue::Interval { lo, hi },
            provenance: provenance.into(),
        }
    }

    pub(crate) fn unknown(name: &str, provenance: impl Into<String>) -> Self {
        InvariantReport {
            name: name.to_owned(),
            value: ReportValue::Unknown,
            provenance: provenance.into(),
        }
    }

    fn exact_from_big(
        name: &str,
        value: BigInt,
        provenance: impl Into<String>,
    ) -> Result<Self, InvariantError> {
        let value = i64::try_from(&value).map_err(|_| InvariantError::Overflow)?;
        Ok(InvariantReport::exact(name, value, provenance))
    }
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            ReportValue::Exact { value } => {
                write!(f, "{} = {} (exact; {})", self.name, value, self.provenance)
            }
            ReportValue::UpperBound { value } => {
                write!(f, "{} <= {} (upper bound; {})", self.name, value, self.provenance)
            }
            ReportValue::Interval { lo, hi } => {
                write!(f, "{} <= {} <= {} (interval; {})", lo, self.name, hi, self.provenance)
            }
            ReportValue::Unknown => write!(f, "{} unknown ({})", self.name, self.provenance),
        }
    }
}

/// Integral surgery on a knot, with a nonzero slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurgeryDesc {
    pub knot: KnotExpr,
    pub slope: i64,
}

impl SurgeryDesc {
    pub fn new(knot: KnotExpr, slope: i64) -> Result<Self, InvariantError> {
        if slope == 0 {
            return Err(InvariantError::ZeroSlope);
        }
        Ok(SurgeryDesc { knot, slope })
    }
}

/// Casson invariant of the surgered homology sphere. Only +1-surgery is
/// supported; other slopes are rejected rather than silently rescaled.
pub fn casson(surgery: &SurgeryDesc) -> Result<i64, InvariantError> {
    if surgery.slope != 1 {
        return Err(InvariantError::UnsupportedSlope { slope: surgery.slope });
    }
    casson_plus_one(&surgery.knot)
}

/// Casson invariant of +1-surgery: half the second derivative of the
/// Alexander polynomial at 1, an integer.
pub fn casson_plus_one(knot: &KnotExpr) -> Result<i64, InvariantError> {
    let half = knot.alexander().second_derivative_at_one() / 2;
    i64::try_from(&half).map_err(|_| InvariantError::Overflow)
}

fn is_known_lens_surgery(knot: &KnotExpr, slope: i64) -> bool {
    match knot.node() {
        Node::Unknot => slope >= 1,
        Node::Torus { p, q } => {
            let pq = p * q;
            slope == pq + 1 || slope == pq - 1
        }
        Node::Cable2 { q: cq, companion } => match companion.node() {
            Node::Torus { p, q } => {
                let pq = p * q;
                (*cq == 2 * pq + 1 && slope == 4 * pq + 1)
                    || (*cq == 2 * pq - 1 && slope == 4 * pq - 1)
            }
            _ => false,
        },
        _ => false,
    }
}

/// d1 of a knot admitting a lens-space surgery at the given slope: -2*t0 of
/// its Alexander polynomial. The (knot, slope) pair must be one of the
/// recognized lens surgeries (unknots at any positive slope, torus knots at
/// pq +- 1, cables of torus knots with cable parameter 2pq +- 1 at the
/// matching slope 4pq +- 1) unless `assume_lens` asserts the hypothesis.
pub fn d1_lens(surgery: &SurgeryDesc, assume_lens: bool) -> Result<InvariantReport, InvariantError> {
    if surgery.slope < 1 {
        return Err(InvariantError::NonPositiveSlope { slope: surgery.slope });
    }
    let recognized = is_known_lens_surgery(&surgery.knot, surgery.slope);
    if !recognized && !assume_lens {
        return Err(InvariantError::NotKnownLensSurgery {
            expr: surgery.knot.to_string(),
            slope: surgery.slope,
        });
    }
    let value = BigInt::from(-2) * surgery.knot.alexander().t0();
    let provenance = if recognized { PROV_D1_LENS } else { PROV_D1_LENS_ASSUMED };
    InvariantReport::exact_from_big("d1", value, provenance)
}

/// Split an odd q > 1 as 4k+1 or 4k-1 with k >= 1.
fn four_k_split(q: i64) -> (i64, CableSign) {
    debug_assert!(q > 1 && q % 2 == 1);
    if q % 4 == 1 {
        ((q - 1) / 4, CableSign::Plus)
    } else {
        ((q + 1) / 4, CableSign::Minus)
    }
}

/// Closed-form d1 of the two-strand torus knot T(2,q): writing q = 4k +- 1,
/// the value is -2k.
pub fn d1_torus_two_strand(q: i64) -> Result<InvariantReport, InvariantError> {
    if q <= 1 || q % 2 == 0 {
        return Err(InvariantError::TorusParamOutOfRange { q });
    }
    let (k, _) = four_k_split(q);
    Ok(InvariantReport::exact("d1", -2 * k, PROV_D1_TORUS))
}

/// d1 of the two-strand cable with parameter q around the companion.
///
/// For q > 1, writing q = 4k +- 1, the torus-knot value -2k is an upper
/// bound, and it is exact when the companion bounds a null-homologous disk in
/// a rational-ball-like filling. For odd q <= 1 only the skein interval
/// [-2, 0] is reported.
pub fn d1_cable_two_strand(
    companion: &KnotExpr,
    q: i64,
) -> Result<InvariantReport, InvariantError> {
    validate_cable_param(q)?;
    if q <= 1 {
        return Ok(InvariantReport::interval("d1", -2, 0, PROV_D1_SKEIN_INTERVAL));
    }
    let (k, _) = four_k_split(q);
    let value = (-2i64).checked_mul(k).ok_or(InvariantError::Overflow)?;
    Ok(match companion.attributes().bounds_nullhomologous_disk {
        Some(true) => InvariantReport::exact("d1", value, PROV_D1_CABLE_EQUALITY),
        _ => InvariantReport::upper("d1", value, PROV_D1_CABLE_UPPER),
    })
}

fn validate_cable_param(q: i64) -> Result<(), InvariantError> {
    // Same limits as the cable2 constructor.
    KnotExpr::cable2(q, KnotExpr::unknot())?;
    Ok(())
}

/// tau of the two-strand cable with parameter q, by the cabling formula
/// keyed on the companion's epsilon:
/// epsilon = 1 gives 2*tau + (q-1)/2, epsilon = -1 gives 2*tau + (q+1)/2,
/// and epsilon = 0 gives the torus-knot value (q -+ 1)/2 by sign of q.
pub fn tau_cable_two_strand(
    companion: &KnotExpr,
    q: i64,
) -> Result<InvariantReport, InvariantError> {
    validate_cable_param(q)?;
    let attrs = companion.attributes();
    let report = match attrs.epsilon {
        Some(0) => {
            let value = if q >= 1 { (q - 1) / 2 } else { (q + 1) / 2 };
            InvariantReport::exact("tau", value, "two-strand cabling formula (epsilon = 0)")
        }
        Some(e) => match attrs.tau {
            Some(t) => {
                let shift = if e > 0 { (q - 1) / 2 } else { (q + 1) / 2 };
                let value = t
                    .checked_mul(2)
                    .and_then(|x| x.checked_add(shift))
                    .ok_or(InvariantError::Overflow)?;
                InvariantReport::exact(
                    "tau",
                    value,
                    format!("two-strand cabling formula (epsilon = {e})"),
                )
            }
            None => InvariantReport::unknown("tau", "companion tau unknown"),
        },
        None => InvariantReport::unknown("tau", "companion epsilon unknown"),
    };
    Ok(report)
}

/// The stacking invariant ds of the two-strand cable with parameter 4k +- 1:
/// equal to k whenever the companion bounds a null-homologous disk, unknown
/// otherwise.
pub fn ds_cable(
    companion: &KnotExpr,
    k: i64,
    sign: CableSign,
) -> Result<InvariantReport, InvariantError> {
    if k < 1 {
        return Err(InvariantError::WitnessParams {
            reason: format!("need k >= 1, got {k}"),
        });
    }
    let q = sign.cable_q(k).ok_or(InvariantError::Overflow)?;
    validate_cable_param(q)?;
    Ok(match companion.attributes().bounds_nullhomologous_disk {
        Some(true) => InvariantReport::exact("ds", k, PROV_DS_CABLE),
        _ => InvariantReport::unknown("ds", "companion disk condition unknown"),
    })
}

/// A knot whose d1 and tau are both known exactly and sit `a` and `b/2`
/// apart from zero: a two-strand cable around a connected sum of twist
/// knots. Carries the reports proving |d1| = a and 2*tau = b.
#[derive(Clone, Debug)]
pub struct Witness {
    pub expr: KnotExpr,
    pub d1: InvariantReport,
    pub tau: InvariantReport,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "witness: {}", self.expr)?;
        writeln!(f, "{}", self.d1)?;
        write!(f, "{}", self.tau)
    }
}

/// Build a knot with |d1| = a and 2*tau = b, for even 0 <= b < a and a
/// family index n >= 1. The construction cables sum(K(n), ..., K(n+m-1))
/// with parameter 2a+1 or 2a-1 depending on the parity of b/2.
pub fn bound_gap_witness(a: i64, b: i64, n: i64) -> Result<Witness, InvariantError> {
    let reject = |reason: String| Err(InvariantError::WitnessParams { reason });
    if a < 2 || a % 2 != 0 {
        return reject(format!("need even a >= 2, got a = {a}"));
    }
    if a > 2000 {
        return reject(format!("a = {a} exceeds the supported range (2000)"));
    }
    if b < 0 || b % 2 != 0 || b >= a {
        return reject(format!("need even b with 0 <= b < a, got b = {b}"));
    }
    if n < 1 {
        return reject(format!("need a family index n >= 1, got n = {n}"));
    }
    let (m, q) = if (b / 2) % 2 == 1 {
        ((2 * a - b + 2) / 4, 2 * a + 1)
    } else {
        ((2 * a - b) / 4, 2 * a - 1)
    };
    debug_assert!(m >= 1);
    let companion = KnotExpr::sum((n..n + m).map(KnotExpr::family_k).collect())?;
    let d1 = d1_cable_two_strand(&companion, q)?;
    let tau = tau_cable_two_strand(&companion, q)?;
    assert_eq!(d1.value, ReportValue::Exact { value: -a }, "witness d1 off target");
    assert_eq!(tau.value, ReportValue::Exact { value: b / 2 }, "witness tau off target");
    let expr = KnotExpr::cable2(q, companion)?;
    Ok(Witness { expr, d1, tau })
}

/// Outcome of the Fox-Milnor factorization test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FmStatus {
    /// Factors as g(t) * g(1/t) up to units; no obstruction.
    IsFmForm,
    /// Cannot factor that way; the polynomial obstructs sliceness.
    NotFmForm,
    /// Degree or search limits were hit before a decision.
    Undecided,
}

impl fmt::Display for FmStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            FmStatus::IsFmForm => "factors as g(t) * g(1/t) up to units",
            FmStatus::NotFmForm => "does not factor as g(t) * g(1/t); obstruction fires",
            FmStatus::Undecided => "undecided within the degree and search limits",
        };
        f.write_str(text)
    }
}

/// Write the symmetric polynomial as an ordinary integer polynomial with the
/// lowest exponent shifted to 0.
fn monomialized(f: &SymPoly) -> Vec<BigInt> {
    let d = f.degree() as usize;
    let mut p = vec![BigInt::from(0); 2 * d + 1];
    p[d] = f.coeff(0);
    for (i, c) in f.iter() {
        p[d + i as usize] = c.clone();
        p[d - i as usize] = c.clone();
    }
    p
}

/// Fox-Milnor test: a symmetric polynomial with f(1) = +-1 factors as
/// g(t) * g(1/t) up to units exactly when every self-reciprocal irreducible
/// factor occurs with even multiplicity. Returns `Undecided` when the degree
/// exceeds 24 or the factorization search gives up.
pub fn fox_milnor_check(f: &SymPoly) -> Result<FmStatus, InvariantError> {
    if f.is_zero() {
        return Err(InvariantError::ZeroPolynomial);
    }
    let at_one = f.eval_at_one();
    if at_one != BigInt::from(1) && at_one != BigInt::from(-1) {
        return Err(InvariantError::NotUnitAtOne { value: at_one });
    }
    if f.degree() > 24 {
        return Ok(FmStatus::Undecided);
    }
    let p = monomialized(f);
    let Some(factors) = factor::factor(&p) else {
        return Ok(FmStatus::Undecided);
    };
    for (g, m) in &factors {
        if m % 2 == 1 && factor::reciprocal_normalized(g) == *g {
            return Ok(FmStatus::NotFmForm);
        }
    }
    // Non-self-reciprocal factors pair with their reciprocals at equal
    // multiplicity because the input is palindromic.
    debug_assert!(factors.iter().all(|(g, m)| {
        let rec = factor::reciprocal_normalized(g);
        rec == *g || factors.iter().any(|(h, mh)| *h == rec && mh == m)
    }));
    Ok(FmStatus::IsFmForm)
}

/// Everything the calculator can say about one knot expression.
#[derive(Clone, Debug, Serialize)]
pub struct FullReport {
    pub expr: String,
    pub alexander: String,
    pub reports: Vec<InvariantReport>,
}

impl fmt::Display for FullReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot: {}", self.expr)?;
        writeln!(f, "alexander: {}", self.alexander)?;
        for (i, r) in self.reports.iter().enumerate() {
            if i + 1 < self.reports.len() {
                writeln!(f, "{r}")?;
            } else {
                write!(f, "{r}")?;
            }
        }
        Ok(())
    }
}

fn d1_row(knot: &KnotExpr, assume_lens: Option<i64>) -> Result<InvariantReport, InvariantError> {
    if let Some(slope) = assume_lens {
        return d1_lens(&SurgeryDesc::new(knot.clone(), slope)?, true);
    }
    match knot.node() {
        Node::Unknot => d1_lens(&SurgeryDesc::new(knot.clone(), 1)?, false),
        Node::Torus { p: 2, q } => d1_torus_two_strand(*q),
        Node::Torus { p, q } => d1_lens(&SurgeryDesc::new(knot.clone(), p * q + 1)?, false),
        Node::Cable2 { q, companion } => {
            if let Node::Torus { p, q: tq } = companion.node() {
                let pq = p * tq;
                if *q == 2 * pq + 1 || *q == 2 * pq - 1 {
                    let slope = if *q == 2 * pq + 1 { 4 * pq + 1 } else { 4 * pq - 1 };
                    return d1_lens(&SurgeryDesc::new(knot.clone(), slope)?, false);
                }
            }
            d1_cable_two_strand(companion, *q)
        }
        _ => Ok(InvariantReport::unknown("d1", "no applicable surgery formula")),
    }
}

/// Compute every invariant this calculator knows for the expression. Pass a
/// slope in `assume_lens` to force the lens-space d1 formula at that slope.
pub fn report_all(
    knot: &KnotExpr,
    assume_lens: Option<i64>,
) -> Result<FullReport, InvariantError> {
    let delta = knot.alexander();
    let attrs = knot.attributes();
    let mut reports = vec![
        InvariantReport::exact_from_big("t0", delta.t0(), PROV_T0)?,
        InvariantReport::exact(
            "casson_plus_one",
            casson_plus_one(knot)?,
            PROV_CASSON,
        ),
        d1_row(knot, assume_lens)?,
    ];
    reports.push(match attrs.tau {
        Some(t) => InvariantReport::exact("tau", t, PROV_ATTRS),
        None => match knot.node() {
            Node::Cable2 { q, companion } => tau_cable_two_strand(companion, *q)?,
            _ => InvariantReport::unknown("tau", "no applicable formula"),
        },
    });
    reports.push(match attrs.epsilon {
        Some(e) => InvariantReport::exact("epsilon", e as i64, PROV_ATTRS),
        None => InvariantReport::unknown("epsilon", "no applicable formula"),
    });
    reports.push(match attrs.genus {
        Some(g) => {
            let g = i64::try_from(g).map_err(|_| InvariantError::Overflow)?;
            InvariantReport::exact("genus", g, PROV_ATTRS)
        }
        None => InvariantReport::unknown("genus", "no applicable formula"),
    });
    if let Node::Cable2 { q, companion } = knot.node() {
        if *q > 1 {
            let (k, sign) = four_k_split(*q);
            reports.push(ds_cable(companion, k, sign)?);
        }
    }
    Ok(FullReport {
        expr: knot.to_string(),
        alexander: delta.to_tbasis_string(),
        reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: i64) -> KnotExpr {
        KnotExpr::family_k(n)
    }

    fn torus(p: i64, q: i64) -> KnotExpr {
        KnotExpr::torus(p, q).unwrap()
    }

    fn cable(q: i64, c: KnotExpr) -> KnotExpr {
        KnotExpr::cable2(q, c).unwrap()
    }

    fn exact(r: &InvariantReport) -> i64 {
        match r.value {
            ReportValue::Exact { value } => value,
            ref other => panic!("expected exact value, got {other:?}"),
        }
    }

    #[test]
    fn casson_of_twist_surgeries() {
        for n in -6..=6 {
            assert_eq!(casson_plus_one(&k(n)).unwrap(), n);
        }
        assert_eq!(casson_plus_one(&torus(2, 5)).unwrap(), 3);
        let m11 = KnotExpr::sum(vec![cable(1, k(1)), torus(2, 5)]).unwrap();
        assert_eq!(casson_plus_one(&m11).unwrap(), 7);
    }

    #[test]
    fn casson_rejects_other_slopes() {
        let s = SurgeryDesc::new(k(1), 2).unwrap();
        assert_eq!(casson(&s).unwrap_err(), InvariantError::UnsupportedSlope { slope: 2 });
        let s1 = SurgeryDesc::new(k(1), 1).unwrap();
        assert_eq!(casson(&s1).unwrap(), 1);
        assert_eq!(SurgeryDesc::new(k(1), 0).unwrap_err(), InvariantError::ZeroSlope);
    }

    #[test]
    fn d1_torus_closed_form() {
        let vals: Vec<i64> = [3, 5, 7, 9, 11, 13]
            .iter()
            .map(|&q| exact(&d1_torus_two_strand(q).unwrap()))
            .collect();
        assert_eq!(vals, vec![-2, -2, -4, -4, -6, -6]);
        assert!(d1_torus_two_strand(1).is_err());
        assert!(d1_torus_two_strand(4).is_err());
    }

    #[test]
    fn d1_torus_agrees_with_lens_formula() {
        for r in 1..=20 {
            let q = 2 * r + 1;
            let closed = exact(&d1_torus_two_strand(q).unwrap());
            let s = SurgeryDesc::new(torus(2, q), 2 * q + 1).unwrap();
            let lens = exact(&d1_lens(&s, false).unwrap());
            assert_eq!(closed, lens, "q = {q}");
        }
    }

    #[test]
    fn d1_lens_whitelist() {
        let u = SurgeryDesc::new(KnotExpr::unknot(), 7).unwrap();
        assert_eq!(exact(&d1_lens(&u, false).unwrap()), 0);

        let t = SurgeryDesc::new(torus(3, 5), 16).unwrap();
        let r = d1_lens(&t, false).unwrap();
        assert_eq!(r.provenance, PROV_D1_LENS);
        assert_eq!(
            BigInt::from(exact(&r)),
            BigInt::from(-2) * torus(3, 5).alexander().t0()
        );

        let bad = SurgeryDesc::new(torus(3, 5), 15).unwrap();
        assert!(matches!(
            d1_lens(&bad, false),
            Err(InvariantError::NotKnownLensSurgery { slope: 15, .. })
        ));
        let assumed = d1_lens(&bad, true).unwrap();
        assert_eq!(assumed.provenance, PROV_D1_LENS_ASSUMED);

        // the companion drops out: the cable's value is d1 of T(2,13)
        let c = cable(13, torus(2, 3));
        let s = SurgeryDesc::new(c.clone(), 25).unwrap();
        assert_eq!(exact(&d1_lens(&s, false).unwrap()), -6);
        assert!(d1_lens(&SurgeryDesc::new(c, 24).unwrap(), false).is_err());

        let neg = SurgeryDesc::new(KnotExpr::unknot(), -3).unwrap();
        assert_eq!(
            d1_lens(&neg, true).unwrap_err(),
            InvariantError::NonPositiveSlope { slope: -3 }
        );
    }

    #[test]
    fn d1_cable_branches() {
        let r = d1_cable_two_strand(&k(1), 5).unwrap();
        assert_eq!(r.value, ReportValue::Exact { value: -2 });
        assert_eq!(r.provenance, PROV_D1_CABLE_EQUALITY);

        let r = d1_cable_two_strand(&torus(2, 3), 7).unwrap();
        assert_eq!(r.value, ReportValue::UpperBound { value: -4 });

        let r = d1_cable_two_strand(&k(1), 1).unwrap();
        assert_eq!(r.value, ReportValue::Interval { lo: -2, hi: 0 });
        let r = d1_cable_two_strand(&k(1), -9).unwrap();
        assert_eq!(r.value, ReportValue::Interval { lo: -2, hi: 0 });

        assert!(d1_cable_two_strand(&k(1), 4).is_err());
    }

    #[test]
    fn tau_cable_branches() {
        assert_eq!(exact(&tau_cable_two_strand(&k(1), 5).unwrap()), 1);
        assert_eq!(exact(&tau_cable_two_strand(&torus(2, 3), 5).unwrap()), 4);
        assert_eq!(exact(&tau_cable_two_strand(&KnotExpr::unknot(), 5).unwrap()), 2);
        assert_eq!(exact(&tau_cable_two_strand(&KnotExpr::unknot(), -5).unwrap()), -2);
        let nested = tau_cable_two_strand(&cable(3, k(1)), 5).unwrap();
        assert_eq!(nested.value, ReportValue::Unknown);
        // mirrored torus knots have epsilon = -1 and use the other shift
        let m = KnotExpr::mirror(torus(2, 3));
        assert_eq!(exact(&tau_cable_two_strand(&m, 5).unwrap()), 2 * (-1) + 3);
    }

    #[test]
    fn ds_needs_disk_bounding_companion() {
        let r = ds_cable(&k(1), 1, CableSign::Plus).unwrap();
        assert_eq!(r.value, ReportValue::Exact { value: 1 });
        let r = ds_cable(&torus(2, 3), 2, CableSign::Minus).unwrap();
        assert_eq!(r.value, ReportValue::Unknown);
        assert!(ds_cable(&k(1), 0, CableSign::Plus).is_err());
    }

    #[test]
    fn witness_canonical_example() {
        let w = bound_gap_witness(4, 2, 1).unwrap();
        assert_eq!(w.expr.to_string(), "cable2(9; sum(K(1),K(2)))");
        assert_eq!(w.d1.value, ReportValue::Exact { value: -4 });
        assert_eq!(w.tau.value, ReportValue::Exact { value: 1 });
    }

    #[test]
    fn witness_small_cases() {
        let w = bound_gap_witness(2, 0, 3).unwrap();
        assert_eq!(w.expr.to_string(), "cable2(3; K(3))");
        assert_eq!(w.d1.value, ReportValue::Exact { value: -2 });
        assert_eq!(w.tau.value, ReportValue::Exact { value: 0 });

        let w = bound_gap_witness(6, 4, 2).unwrap();
        assert_eq!(w.d1.value, ReportValue::Exact { value: -6 });
        assert_eq!(w.tau.value, ReportValue::Exact { value: 2 });
    }

    #[test]
    fn witness_parameter_validation() {
        assert!(bound_gap_witness(3, 0, 1).is_err());
        assert!(bound_gap_witness(4, 4, 1).is_err());
        assert!(bound_gap_witness(4, 1, 1).is_err());
        assert!(bound_gap_witness(4, -2, 1).is_err());
        assert!(bound_gap_witness(4, 2, 0).is_err());
        assert!(bound_gap_witness(2002, 0, 1).is_err());
    }

    #[test]
    fn fox_milnor_instances() {
        assert_eq!(fox_milnor_check(&SymPoly::one()).unwrap(), FmStatus::IsFmForm);
        assert_eq!(fox_milnor_check(&k(1).alexander()).unwrap(), FmStatus::NotFmForm);
        let square = KnotExpr::sum(vec![k(1), k(1)]).unwrap();
        assert_eq!(fox_milnor_check(&square.alexander()).unwrap(), FmStatus::IsFmForm);

        let mixed = KnotExpr::sum(vec![cable(3, k(1)), cable(3, k(2))]).unwrap();
        assert_eq!(fox_milnor_check(&mixed.alexander()).unwrap(), FmStatus::NotFmForm);
        let same = KnotExpr::sum(vec![cable(3, k(2)), cable(3, k(2))]).unwrap();
        assert_eq!(fox_milnor_check(&same.alexander()).unwrap(), FmStatus::IsFmForm);
    }

    #[test]
    fn fox_milnor_guards() {
        assert!(matches!(
            fox_milnor_check(&SymPoly::zero()),
            Err(InvariantError::ZeroPolynomial)
        ));
        assert!(matches!(
            fox_milnor_check(&SymPoly::constant(3)),
            Err(InvariantError::NotUnitAtOne { .. })
        ));
        let big = torus(2, 51).alexander();
        assert_eq!(fox_milnor_check(&big).unwrap(), FmStatus::Undecided);
    }

    #[test]
    fn full_report_for_the_leading_example() {
        let c = cable(5, k(1));
        let report = report_all(&c, None).unwrap();
        assert_eq!(report.expr, "cable2(5; K(1))");
        assert_eq!(report.alexander, "1 - T3 + T4");
        let by_name = |name: &str| {
            report
                .reports
                .iter()
                .find(|r| r.name == name)
                .unwrap_or_else(|| panic!("missing row {name}"))
                .clone()
        };
        assert_eq!(by_name("t0").value, ReportValue::Exact { value: 1 });
        assert_eq!(by_name("casson_plus_one").value, ReportValue::Exact { value: 7 });
        assert_eq!(by_name("d1").value, ReportValue::Exact { value: -2 });
        assert_eq!(by_name("d1").provenance, PROV_D1_CABLE_EQUALITY);
        assert_eq!(by_name("tau").value, ReportValue::Exact { value: 1 });
        assert_eq!(by_name("epsilon").value, ReportValue::Unknown);
        assert_eq!(by_name("genus").value, ReportValue::Unknown);
        assert_eq!(by_name("ds").value, ReportValue::Exact { value: 1 });
    }

    #[test]
    fn full_report_json_shape() {
        let report = report_all(&torus(2, 3), None).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["expr"], "torus(2,3)");
        let d1 = v["reports"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["name"] == "d1")
            .unwrap();
        assert_eq!(d1["status"], "exact");
        assert_eq!(d1["value"], -2);
        assert!(d1["provenance"].is_string());
    }

    #[test]
    fn report_lines_render() {
        assert_eq!(
            InvariantReport::exact("d1", -2, "x").to_string(),
            "d1 = -2 (exact; x)"
        );
        assert_eq!(
            InvariantReport::upper("d1", -4, "x").to_string(),
            "d1 <= -4 (upper bound; x)"
        );
        assert_eq!(
            InvariantReport::interval("d1", -2, 0, "x").to_string(),
            "-2 <= d1 <= 0 (interval; x)"
        );
        assert_eq!(
            InvariantReport::unknown("tau", "x").to_string(),
            "tau unknown (x)"
        );
    }

    #[test]
    fn report_all_respects_assume_lens() {
        let c = cable(13, torus(2, 3));
        let auto = report_all(&c, None).unwrap();
        let d1 = auto.reports.iter().find(|r| r.name == "d1").unwrap().clone();
        assert_eq!(d1.value, ReportValue::Exact { value: -6 });
        assert_eq!(d1.provenance, PROV_D1_LENS);

        let forced = report_all(&k(2), Some(9)).unwrap();
        let d1 = forced.reports.iter().find(|r| r.name == "d1").unwrap().clone();
        assert_eq!(d1.provenance, PROV_D1_LENS_ASSUMED);
        // t0 of -3 + 2T1 is 2, so the assumed formula says -4
        assert_eq!(d1.value, ReportValue::Exact { value: -4 });
    }
}
