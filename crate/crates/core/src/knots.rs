//! Knot expressions: torus knots, the twist family `K(n)`, two-strand
//! cables, connected sums, and mirrors.
//!
//! Values are built through validating constructors, so a `KnotExpr` always
//! satisfies its shape invariants (coprime torus parameters, odd cable
//! parameter, sums of at least two pieces). Torus parameters are normalized:
//! `torus(p, -q)` becomes `mirror(torus(p, q))` and both-negative parameters
//! are rejected, so each torus knot has one spelling.
//!
//! The textual grammar round-trips exactly:
//!
//! ```text
//! expr := "unknot"
//!       | "torus(" int "," int ")"
//!       | "K(" int ")"
//!       | "cable2(" int ";" expr ")"
//!       | "sum(" expr ("," expr)+ ")"
//!       | "mirror(" expr ")"
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::sympoly::SymPoly;

/// Torus parameters are capped so a hostile expression cannot allocate an
/// Alexander polynomial with more than ~10^6 terms.
const MAX_TORUS_PRODUCT: i64 = 1_000_000;
const MAX_CABLE_PARAM: i64 = 2_000_001;

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum KnotError {
    #[error("syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("torus parameters must have |p| >= 2 and |q| >= 2, got ({p}, {q})")]
    TorusParamTooSmall { p: i64, q: i64 },
    #[error("torus parameters must be coprime: gcd({p}, {q}) = {gcd}")]
    TorusNotCoprime { p: i64, q: i64, gcd: i64 },
    #[error("torus parameters ({p}, {q}) cannot both be negative; write mirror(torus(p, q)) instead")]
    TorusBothNegative { p: i64, q: i64 },
    #[error("torus parameters too large: |{p} * {q}| exceeds {MAX_TORUS_PRODUCT}")]
    TorusTooLarge { p: i64, q: i64 },
    #[error("cable parameter must be odd, got {q}")]
    CableEvenParam { q: i64 },
    #[error("cable parameter too large: |{q}| exceeds {MAX_CABLE_PARAM}")]
    CableTooLarge { q: i64 },
    #[error("a connected sum needs at least one summand")]
    EmptySum,
}

fn parse_err(offset: usize, message: impl Into<String>) -> KnotError {
    KnotError::Parse { offset, message: message.into() }
}

/// A knot expression. Construct through the associated functions; the
/// internal shape is normalized and validated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KnotExpr {
    node: Node,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) enum Node {
    Unknot,
    /// `2 <= p < q`, coprime. Negative-parameter input is normalized to a mirror.
    Torus { p: i64, q: i64 },
    /// The twist family: genus-one negative knots for `n >= 1`.
    FamilyK { n: i64 },
    /// Two-strand cable with odd parameter `q` around a companion.
    Cable2 { q: i64, companion: Box<KnotExpr> },
    /// Connected sum of two or more parts.
    Sum { parts: Vec<KnotExpr> },
    Mirror { inner: Box<KnotExpr> },
}

impl KnotExpr {
    pub fn unknot() -> Self {
        KnotExpr { node: Node::Unknot }
    }

    pub fn torus(p: i64, q: i64) -> Result<Self, KnotError> {
        if p < 0 && q < 0 {
            return Err(KnotError::TorusBothNegative { p, q });
        }
        let mirrored = p < 0 || q < 0;
        let (a, b) = (p.abs(), q.abs());
        if a < 2 || b < 2 {
            return Err(KnotError::TorusParamTooSmall { p, q });
        }
        let g = gcd(a, b);
        if g != 1 {
            return Err(KnotError::TorusNotCoprime { p, q, gcd: g });
        }
        if a.checked_mul(b).is_none_or(|ab| ab > MAX_TORUS_PRODUCT) {
            return Err(KnotError::TorusTooLarge { p, q });
        }
        let node = Node::Torus { p: a.min(b), q: a.max(b) };
        let plain = KnotExpr { node };
        Ok(if mirrored { KnotExpr::mirror(plain) } else { plain })
    }

    pub fn family_k(n: i64) -> Self {
        KnotExpr { node: Node::FamilyK { n } }
    }

    pub fn cable2(q: i64, companion: KnotExpr) -> Result<Self, KnotError> {
        if q % 2 == 0 {
            return Err(KnotError::CableEvenParam { q });
        }
        if q.abs() > MAX_CABLE_PARAM {
            return Err(KnotError::CableTooLarge { q });
        }
        Ok(KnotExpr { node: Node::Cable2 { q, companion: Box::new(companion) } })
    }

    pub fn sum(parts: Vec<KnotExpr>) -> Result<Self, KnotError> {
        match parts.len() {
            0 => Err(KnotError::EmptySum),
            1 => Ok(parts.into_iter().next().unwrap()),
            _ => Ok(KnotExpr { node: Node::Sum { parts } }),
        }
    }

    pub fn mirror(inner: KnotExpr) -> Self {
        KnotExpr { node: Node::Mirror { inner: Box::new(inner) } }
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    /// `Some((q, companion))` when this expression is a two-strand cable.
    pub fn as_cable2(&self) -> Option<(i64, &KnotExpr)> {
        match &self.node {
            Node::Cable2 { q, companion } => Some((*q, companion)),
            _ => None,
        }
    }

    /// `Some((p, q))` when this expression is an (unmirrored) torus knot.
    pub fn as_torus(&self) -> Option<(i64, i64)> {
        match &self.node {
            Node::Torus { p, q } => Some((*p, *q)),
            _ => None,
        }
    }

    pub fn is_unknot(&self) -> bool {
        matches!(self.node, Node::Unknot)
    }

    /// The Alexander polynomial, normalized so `f(1) = 1`.
    pub fn alexander(&self) -> SymPoly {
        match &self.node {
            Node::Unknot => SymPoly::one(),
            Node::Torus { p: 2, q } => torus2_alexander((q - 1) / 2),
            Node::Torus { p, q } => torus_alexander_by_division(*p as u64, *q as u64),
            Node::FamilyK { n } => {
                SymPoly::from_coeffs(1 - 2 * n, [(1u32, *n)]).expect("index 1")
            }
            Node::Cable2 { q, companion } => {
                let qa = q.unsigned_abs();
                let doubled = companion.alexander().substitute_power(2);
                if qa == 1 {
                    doubled
                } else {
                    doubled.mul(&torus2_alexander((qa as i64 - 1) / 2))
                }
            }
            Node::Sum { parts } => parts
                .iter()
                .fold(SymPoly::one(), |acc, k| acc.mul(&k.alexander())),
            Node::Mirror { inner } => inner.alexander(),
        }
    }

    /// What the calculator knows about this knot without computing anything:
    /// genus, positivity/negativity, the slice-disk flag, epsilon, tau.
    /// Fields stay `None` rather than being guessed.
    pub fn attributes(&self) -> KnotAttributes {
        let mut a = match &self.node {
            Node::Unknot => KnotAttributes {
                genus: Some(0),
                is_negative: Some(true),
                is_positive: Some(true),
                bounds_nullhomologous_disk: Some(true),
                epsilon: Some(0),
                tau: Some(0),
            },
            Node::Torus { p, q } => {
                let g = ((p - 1) * (q - 1) / 2) as u64;
                KnotAttributes {
                    genus: Some(g),
                    is_negative: Some(false),
                    is_positive: Some(true),
                    bounds_nullhomologous_disk: None,
                    epsilon: Some(1),
                    tau: Some(g as i64),
                }
            }
            Node::FamilyK { n } if *n >= 1 => KnotAttributes {
                genus: Some(1),
                is_negative: Some(true),
                is_positive: Some(false),
                bounds_nullhomologous_disk: Some(true),
                epsilon: Some(-1),
                tau: Some(-1),
            },
            Node::FamilyK { .. } => KnotAttributes::default(),
            Node::Cable2 { .. } => KnotAttributes::default(),
            Node::Sum { parts } => sum_attributes(parts),
            Node::Mirror { inner } => {
                let a = inner.attributes();
                KnotAttributes {
                    genus: a.genus,
                    is_negative: a.is_positive,
                    is_positive: a.is_negative,
                    bounds_nullhomologous_disk: None,
                    epsilon: a.epsilon.map(|e| -e),
                    tau: a.tau.map(|t| -t),
                }
            }
        };
        // A negative knot bounds the required disk; positive tau obstructs it.
        if a.is_negative == Some(true) {
            a.bounds_nullhomologous_disk = Some(true);
        } else if a.bounds_nullhomologous_disk.is_none() && a.tau.is_some_and(|t| t > 0) {
            a.bounds_nullhomologous_disk = Some(false);
        }
        a
    }

    /// Parse the canonical grammar. Whitespace-insensitive; printing a parsed
    /// expression reproduces the canonical text exactly.
    pub fn parse(text: &str) -> Result<Self, KnotError> {
        let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
        let expr = p.expr()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(parse_err(p.pos, "unexpected trailing input"));
        }
        Ok(expr)
    }
}

/// Everything the calculator tracks about a knot other than its polynomial.
/// `None` means unknown, never "no".
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KnotAttributes {
    pub genus: Option<u64>,
    pub is_negative: Option<bool>,
    pub is_positive: Option<bool>,
    pub bounds_nullhomologous_disk: Option<bool>,
    /// The concordance invariant epsilon, in {-1, 0, 1}.
    pub epsilon: Option<i8>,
    pub tau: Option<i64>,
}

fn sum_attributes(parts: &[KnotExpr]) -> KnotAttributes {
    let attrs: Vec<KnotAttributes> = parts.iter().map(|p| p.attributes()).collect();
    if !attrs.iter().all(|a| a.is_negative == Some(true)) {
        // Only the all-negative combination is understood; nothing is guessed.
        return KnotAttributes::default();
    }
    let genus = attrs
        .iter()
        .try_fold(0u64, |acc, a| a.genus.map(|g| acc + g));
    let all_positive = attrs.iter().all(|a| a.is_positive == Some(true));
    KnotAttributes {
        genus,
        is_negative: Some(true),
        is_positive: if all_positive {
            Some(true)
        } else {
            genus.filter(|&g| g > 0).map(|_| false)
        },
        bounds_nullhomologous_disk: Some(true),
        epsilon: genus.map(|g| if g > 0 { -1 } else { 0 }),
        tau: genus.map(|g| -(g as i64)),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The (2, 2r+1) torus knot polynomial, `(-1)^r (1 + sum_{k=1}^r (-1)^k T_k)`.
/// `r = 0` gives the unknot's constant 1.
pub(crate) fn torus2_alexander(r: i64) -> SymPoly {
    assert!(r >= 0);
    let sign = |x: i64| if x % 2 == 0 { 1 } else { -1 };
    SymPoly::from_coeffs(sign(r), (1..=r).map(|k| (k as u32, sign(r + k)))).expect("indices >= 1")
}

/// General torus knot polynomial by exact division:
/// `(t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, recentred onto the `T` basis.
pub(crate) fn torus_alexander_by_division(p: u64, q: u64) -> SymPoly {
    let pq = p * q;
    // numerator t^{pq+1} - t^{pq} - t + 1, dense, ascending exponents
    let mut num = vec![BigInt::zero(); (pq + 2) as usize];
    num[0] = BigInt::one();
    num[1] = -BigInt::one();
    num[pq as usize] = -BigInt::one();
    num[(pq + 1) as usize] = BigInt::one();
    let step1 = divide_exact_by_xn_minus_1(&num, p as usize);
    let quot = divide_exact_by_xn_minus_1(&step1, q as usize);
    let deg = ((p - 1) * (q - 1)) as usize;
    debug_assert_eq!(quot.len(), deg + 1);
    let half = deg / 2;
    let mut pairs = Vec::with_capacity(half);
    for i in 1..=half {
        debug_assert_eq!(quot[half + i], quot[half - i], "torus polynomial not symmetric");
        pairs.push((i as u32, quot[half + i].clone()));
    }
    let f = SymPoly::from_coeffs(quot[half].clone(), pairs).expect("indices >= 1");
    debug_assert!(f.eval_at_one().is_one(), "torus polynomial not normalized");
    f
}

/// Exact division by `x^n - 1`; panics if the remainder is nonzero, which
/// would mean the torus parameters were not validated.
fn divide_exact_by_xn_minus_1(poly: &[BigInt], n: usize) -> Vec<BigInt> {
    let deg = poly.len() - 1;
    assert!(deg >= n);
    let mut rem = poly.to_vec();
    let mut quot = vec![BigInt::zero(); deg - n + 1];
    for i in (n..=deg).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        rem[i - n] += &c;
        quot[i - n] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division by x^{n} - 1 left a remainder");
    quot
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Unknot => write!(f, "unknot"),
            Node::Torus { p, q } => write!(f, "torus({p},{q})"),
            Node::FamilyK { n } => write!(f, "K({n})"),
            Node::Cable2 { q, companion } => write!(f, "cable2({q}; {companion})"),
            Node::Sum { parts } => {
                write!(f, "sum(")?;
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, ")")
            }
            Node::Mirror { inner } => write!(f, "mirror({inner})"),
        }
    }
}

impl fmt::Debug for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KnotExpr({self})")
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), KnotError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(self.pos, format!("expected '{}'", byte as char)))
        }
    }

    fn word(&mut self) -> (usize, &str) {
        self.skip_ws();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric())
        {
            self.pos += 1;
        }
        (start, std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn int(&mut self) -> Result<i64, KnotError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        if text.is_empty() || text == "-" {
            return Err(parse_err(start, "expected an integer"));
        }
        text.parse()
            .map_err(|_| parse_err(start, "integer out of range"))
    }

    fn expr(&mut self) -> Result<KnotExpr, KnotError> {
        let (start, word) = self.word();
        match word {
            "unknot" => Ok(KnotExpr::unknot()),
            "torus" => {
                self.expect(b'(')?;
                let p = self.int()?;
                self.expect(b',')?;
                let q = self.int()?;
                self.expect(b')')?;
                KnotExpr::torus(p, q)
            }
            "K" => {
                self.expect(b'(')?;
                let n = self.int()?;
                self.expect(b')')?;
                Ok(KnotExpr::family_k(n))
            }
            "cable2" => {
                self.expect(b'(')?;
                let q = self.int()?;
                self.expect(b';')?;
                let companion = self.expr()?;
                self.expect(b')')?;
                KnotExpr::cable2(q, companion)
            }
            "sum" => {
                self.expect(b'(')?;
                let mut parts = vec![self.expr()?];
                self.expect(b',')
                    .map_err(|_| parse_err(self.pos, "a sum needs at least two summands"))?;
                parts.push(self.expr()?);
                loop {
                    self.skip_ws();
                    if self.bytes.get(self.pos) == Some(&b',') {
                        self.pos += 1;
                        parts.push(self.expr()?);
                    } else {
                        break;
                    }
                }
                self.expect(b')')?;
                KnotExpr::sum(parts)
            }
            "mirror" => {
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(KnotExpr::mirror(inner))
            }
            "" => Err(parse_err(start, "expected a knot expression")),
            other => Err(parse_err(start, format!("unknown constructor '{other}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tb(s: &str) -> SymPoly {
        SymPoly::parse_tbasis(s).unwrap()
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(KnotExpr::unknot().alexander(), SymPoly::one());
        assert_eq!(KnotExpr::torus(2, 3).unwrap().alexander(), tb("-1 + T1"));
        assert_eq!(KnotExpr::torus(2, 5).unwrap().alexander(), tb("1 - T1 + T2"));
        assert_eq!(KnotExpr::family_k(1).alexander(), tb("-1 + T1"));
        assert_eq!(KnotExpr::family_k(2).alexander(), tb("-3 + 2T1"));
        assert_eq!(KnotExpr::family_k(0).alexander(), SymPoly::one());
        assert_eq!(KnotExpr::family_k(-2).alexander(), tb("5 - 2T1"));
    }

    #[test]
    fn alexander_structural_rules() {
        let k1 = KnotExpr::family_k(1);
        let k2 = KnotExpr::family_k(2);
        let sum = KnotExpr::sum(vec![k1.clone(), k2.clone()]).unwrap();
        assert_eq!(sum.alexander(), k1.alexander().mul(&k2.alexander()));
        assert_eq!(KnotExpr::mirror(k2.clone()).alexander(), k2.alexander());
        let cable = KnotExpr::cable2(5, k1.clone()).unwrap();
        assert_eq!(
            cable.alexander(),
            k1.alexander().substitute_power(2).mul(&tb("1 - T1 + T2"))
        );
        assert_eq!(cable.alexander(), tb("1 - T3 + T4"));
        // parameter +-1 cables just double the companion polynomial
        let trivial = KnotExpr::cable2(1, k2.clone()).unwrap();
        assert_eq!(trivial.alexander(), k2.alexander().substitute_power(2));
        let neg = KnotExpr::cable2(-3, k2.clone()).unwrap();
        assert_eq!(
            neg.alexander(),
            k2.alexander().substitute_power(2).mul(&tb("-1 + T1"))
        );
    }

    #[test]
    fn torus_code_paths_agree() {
        for r in 1..=25 {
            assert_eq!(
                torus2_alexander(r),
                torus_alexander_by_division(2, (2 * r + 1) as u64),
                "r = {r}"
            );
        }
    }

    #[test]
    fn general_torus_polynomials() {
        let f = KnotExpr::torus(3, 4).unwrap().alexander();
        assert_eq!(f.eval_at_one(), BigInt::one());
        assert_eq!(f.degree(), 3); // genus (3-1)(4-1)/2 = 3
        assert_eq!(f, SymPoly::parse_monomial("t^3 - t^2 + 1 - t^-2 + t^-3").unwrap());
        // order of parameters is irrelevant
        assert_eq!(
            KnotExpr::torus(5, 3).unwrap().alexander(),
            KnotExpr::torus(3, 5).unwrap().alexander()
        );
    }

    #[test]
    fn torus_t0_matches_ceiling() {
        for r in 1..=50i64 {
            let q = 2 * r + 1;
            let t0 = KnotExpr::torus(2, q).unwrap().alexander().t0();
            assert_eq!(t0, BigInt::from((r + 1) / 2), "r = {r}");
        }
    }

    #[test]
    fn construction_constraints() {
        assert_eq!(
            KnotExpr::torus(2, 4).unwrap_err(),
            KnotError::TorusNotCoprime { p: 2, q: 4, gcd: 2 }
        );
        assert!(matches!(KnotExpr::torus(1, 5), Err(KnotError::TorusParamTooSmall { .. })));
        assert!(matches!(KnotExpr::torus(-2, -3), Err(KnotError::TorusBothNegative { .. })));
        assert!(matches!(KnotExpr::cable2(4, KnotExpr::unknot()), Err(KnotError::CableEvenParam { .. })));
        assert!(matches!(KnotExpr::sum(vec![]), Err(KnotError::EmptySum)));
        assert!(matches!(KnotExpr::torus(2, 2_000_001), Err(KnotError::TorusTooLarge { .. })));
    }

    #[test]
    fn torus_sign_normalization() {
        let m = KnotExpr::torus(2, -3).unwrap();
        assert_eq!(m, KnotExpr::mirror(KnotExpr::torus(2, 3).unwrap()));
        assert_eq!(m.to_string(), "mirror(torus(2,3))");
        assert_eq!(KnotExpr::torus(-3, 2).unwrap().to_string(), "mirror(torus(2,3))");
    }

    #[test]
    fn singleton_sum_collapses() {
        let k = KnotExpr::sum(vec![KnotExpr::family_k(3)]).unwrap();
        assert_eq!(k, KnotExpr::family_k(3));
    }

    #[test]
    fn attribute_examples() {
        let k1k2 = KnotExpr::sum(vec![KnotExpr::family_k(1), KnotExpr::family_k(2)]).unwrap();
        let a = k1k2.attributes();
        assert_eq!(a.genus, Some(2));
        assert_eq!(a.tau, Some(-2));
        assert_eq!(a.epsilon, Some(-1));
        assert_eq!(a.is_negative, Some(true));
        assert_eq!(a.bounds_nullhomologous_disk, Some(true));

        let u = KnotExpr::unknot().attributes();
        assert_eq!(u.genus, Some(0));
        assert_eq!(u.epsilon, Some(0));
        assert_eq!(u.tau, Some(0));
        assert_eq!(u.bounds_nullhomologous_disk, Some(true));

        let m = KnotExpr::mirror(KnotExpr::torus(2, 3).unwrap()).attributes();
        assert_eq!(m.tau, Some(-1));
        assert_eq!(m.epsilon, Some(-1));
        assert_eq!(m.is_negative, Some(true));
        assert_eq!(m.bounds_nullhomologous_disk, Some(true));

        let t = KnotExpr::torus(2, 3).unwrap().attributes();
        assert_eq!(t.tau, Some(1));
        assert_eq!(t.epsilon, Some(1));
        assert_eq!(t.bounds_nullhomologous_disk, Some(false));

        assert_eq!(KnotExpr::family_k(0).attributes(), KnotAttributes::default());
        assert_eq!(
            KnotExpr::cable2(5, KnotExpr::family_k(1)).unwrap().attributes(),
            KnotAttributes::default()
        );
    }

    #[test]
    fn sum_with_unknot_changes_nothing() {
        let k = KnotExpr::sum(vec![KnotExpr::family_k(1), KnotExpr::unknot()]).unwrap();
        let a = k.attributes();
        assert_eq!(a.genus, Some(1));
        assert_eq!(a.tau, Some(-1));
        assert_eq!(a.epsilon, Some(-1));
    }

    #[test]
    fn double_mirror_restores_attributes() {
        let k = KnotExpr::mirror(KnotExpr::mirror(KnotExpr::family_k(2)));
        assert_eq!(k.attributes(), KnotExpr::family_k(2).attributes());
    }

    #[test]
    fn grammar_roundtrip_examples() {
        let text = "cable2(9; sum(K(1),K(2)))";
        let e = KnotExpr::parse(text).unwrap();
        assert_eq!(e.to_string(), text);
        let spaced = KnotExpr::parse(" cable2( 9 ;sum( K(1) , K(2) ) ) ").unwrap();
        assert_eq!(spaced, e);
        for text in ["unknot", "torus(2,3)", "K(-4)", "mirror(torus(2,3))", "sum(unknot,K(2),torus(3,5))"] {
            assert_eq!(KnotExpr::parse(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn grammar_errors() {
        match KnotExpr::parse("torus(2,4)") {
            Err(KnotError::TorusNotCoprime { gcd: 2, .. }) => {}
            other => panic!("expected coprimality error, got {other:?}"),
        }
        match KnotExpr::parse("knot(2,3)") {
            Err(KnotError::Parse { offset: 0, message }) => {
                assert!(message.contains("unknown constructor"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(KnotExpr::parse("sum(K(1))"), Err(KnotError::Parse { .. })));
        assert!(matches!(KnotExpr::parse("torus(2,3) junk"), Err(KnotError::Parse { .. })));
        assert!(matches!(KnotExpr::parse(""), Err(KnotError::Parse { .. })));
        assert!(matches!(KnotExpr::parse("cable2(5 K(1))"), Err(KnotError::Parse { .. })));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig { cases: 128, ..Default::default() })]

        #[test]
        fn parse_print_roundtrip(e in arb_expr(3)) {
            let text = e.to_string();
            let back = KnotExpr::parse(&text).unwrap();
            proptest::prop_assert_eq!(&back, &e);
            proptest::prop_assert_eq!(back.to_string(), text);
        }

        #[test]
        fn alexander_is_normalized(e in arb_expr(3)) {
            proptest::prop_assert_eq!(e.alexander().eval_at_one(), BigInt::one());
        }
    }

    fn arb_expr(depth: u32) -> impl proptest::strategy::Strategy<Value = KnotExpr> {
        use proptest::prelude::*;
        let leaf = prop_oneof![
            Just(KnotExpr::unknot()),
            (-6i64..=6).prop_map(KnotExpr::family_k),
            proptest::sample::select(vec![(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5), (2, -3), (-3, 5)])
                .prop_map(|(p, q)| KnotExpr::torus(p, q).unwrap()),
        ];
        leaf.prop_recursive(depth, 16, 3, |inner| {
            prop_oneof![
                (proptest::sample::select(vec![-5i64, -3, -1, 1, 3, 5, 7, 9]), inner.clone())
                    .prop_map(|(q, k)| KnotExpr::cable2(q, k).unwrap()),
                proptest::collection::vec(inner.clone(), 2..=3)
                    .prop_map(|parts| KnotExpr::sum(parts).unwrap()),
                inner.prop_map(KnotExpr::mirror),
            ]
        })
    }
}
