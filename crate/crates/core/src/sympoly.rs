//! Symmetric Laurent polynomials with integer coefficients.
//!
//! A Laurent polynomial `f` with `f(t) = f(t^-1)` is written uniquely as
//!
//! ```text
//! f = a_0 + sum_{i >= 1} a_i * T_i,        T_i = t^i + t^-i.
//! ```
//!
//! The basis is closed under multiplication via
//! `T_i * T_k = T_{i+k} + T_{|i-k|}`, where the `i = k` case contributes
//! `T_0 = 2` to the constant term. All coefficients are arbitrary-precision
//! integers; nothing in this module rounds.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial syntax error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("expected a polynomial with f(1) = 1, got f(1) = {got}")]
    NotNormalized { got: BigInt },
    #[error("basis index must be at least 1")]
    BadBasisIndex,
}

fn parse_err(offset: usize, message: impl Into<String>) -> PolyError {
    PolyError::Parse { offset, message: message.into() }
}

/// A symmetric Laurent polynomial in the `T_i` basis.
///
/// The representation is canonical: zero coefficients are never stored, so
/// `==` is exact equality of polynomials.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SymPoly {
    a0: BigInt,
    // index i >= 1 -> a_i, values nonzero
    coeffs: BTreeMap<u32, BigInt>,
}

impl SymPoly {
    pub fn zero() -> Self {
        SymPoly::default()
    }

    pub fn one() -> Self {
        SymPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        SymPoly { a0: c.into(), coeffs: BTreeMap::new() }
    }

    /// The basis element `T_i = t^i + t^-i`, `i >= 1`.
    pub fn basis(i: u32) -> Self {
        assert!(i >= 1, "T_0 is not a basis element; it equals the constant 2");
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, BigInt::one());
        SymPoly { a0: BigInt::zero(), coeffs }
    }

    /// Build from a constant term and `(index, coefficient)` pairs.
    /// Repeated indices accumulate; zero coefficients are dropped.
    pub fn from_coeffs<I, C>(a0: impl Into<BigInt>, pairs: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (u32, C)>,
        C: Into<BigInt>,
    {
        let mut f = SymPoly { a0: a0.into(), coeffs: BTreeMap::new() };
        for (i, c) in pairs {
            if i == 0 {
                return Err(PolyError::BadBasisIndex);
            }
            f.add_to(i, &c.into());
        }
        Ok(f)
    }

    fn add_to(&mut self, i: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if i == 0 {
            self.a0 += c;
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    /// Coefficient `a_i` (`a_0` for `i = 0`).
    pub fn coeff(&self, i: u32) -> BigInt {
        if i == 0 {
            self.a0.clone()
        } else {
            self.coeffs.get(&i).cloned().unwrap_or_else(BigInt::zero)
        }
    }

    /// Largest index with a nonzero coefficient; 0 for constants.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.coeffs.is_empty()
    }

    /// Iterate over `(i, a_i)` with `i >= 1`, ascending, nonzero only.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        let mut out = self.clone();
        out.a0 += &other.a0;
        for (&i, c) in &other.coeffs {
            out.add_to(i, c);
        }
        out
    }

    pub fn neg(&self) -> SymPoly {
        let mut out = self.clone();
        out.a0 = -out.a0;
        for c in out.coeffs.values_mut() {
            *c = -(c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.add(&other.neg())
    }

    /// Product in the `T` basis: `T_i T_k = T_{i+k} + T_{|i-k|}`, `T_0 = 2`.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let mut out = SymPoly::zero();
        out.a0 = &self.a0 * &other.a0;
        for (&k, b) in &other.coeffs {
            out.add_to(k, &(&self.a0 * b));
        }
        for (&i, a) in &self.coeffs {
            out.add_to(i, &(a * &other.a0));
            for (&k, b) in &other.coeffs {
                let prod = a * b;
                out.add_to(i.checked_add(k).expect("degree overflow"), &prod);
                if i == k {
                    out.a0 += &prod * 2;
                } else {
                    out.add_to(i.abs_diff(k), &prod);
                }
            }
        }
        out
    }

    /// Substitute `t -> t^p`: indices scale by `p`.
    pub fn substitute_power(&self, p: u32) -> SymPoly {
        assert!(p >= 1, "substitution power must be at least 1");
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&i, c)| (i.checked_mul(p).expect("degree overflow"), c.clone()))
            .collect();
        SymPoly { a0: self.a0.clone(), coeffs }
    }

    /// `f(1) = a_0 + 2 * sum a_i`.
    pub fn eval_at_one(&self) -> BigInt {
        let mut v = self.a0.clone();
        for c in self.coeffs.values() {
            v += c * 2;
        }
        v
    }

    /// `f''(1) = sum 2 i^2 a_i` (each `T_i` contributes `2 i^2` at `t = 1`).
    pub fn second_derivative_at_one(&self) -> BigInt {
        let mut v = BigInt::zero();
        for (&i, c) in &self.coeffs {
            v += c * (2 * BigInt::from(i) * BigInt::from(i));
        }
        v
    }

    /// The additive functional `t0(f) = sum i * a_i`.
    pub fn t0(&self) -> BigInt {
        let mut v = BigInt::zero();
        for (&i, c) in &self.coeffs {
            v += c * BigInt::from(i);
        }
        v
    }

    /// `t0(f * T_k)` without forming the product, for `f(1) = 1`:
    ///
    /// ```text
    /// t0(f T_k) = k                                        if k >= deg f,
    ///           = k a_0 + sum_{i<=k} 2k a_i + sum_{i>k} 2i a_i   otherwise.
    /// ```
    pub fn t0_of_basis_multiple(&self, k: u32) -> Result<BigInt, PolyError> {
        if k == 0 {
            return Err(PolyError::BadBasisIndex);
        }
        let one = self.eval_at_one();
        if !one.is_one() {
            return Err(PolyError::NotNormalized { got: one });
        }
        if k >= self.degree() {
            return Ok(BigInt::from(k));
        }
        let mut v = &self.a0 * BigInt::from(k);
        for (&i, a) in &self.coeffs {
            let weight = if i <= k { 2 * u64::from(k) } else { 2 * u64::from(i) };
            v += a * BigInt::from(weight);
        }
        Ok(v)
    }

    /// Rendering in the `T` basis, e.g. `1 - T1 + T2`.
    pub fn to_tbasis_string(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        if !self.a0.is_zero() {
            terms.push((self.a0.is_negative(), self.a0.abs().to_string()));
        }
        for (&i, c) in &self.coeffs {
            let mag = c.abs();
            let body = if mag.is_one() { format!("T{i}") } else { format!("{mag}T{i}") };
            terms.push((c.is_negative(), body));
        }
        render_terms(terms)
    }

    /// Rendering as monomials in `t`, descending, e.g. `t^2 - t + 1 - t^-1 + t^-2`.
    pub fn to_monomial_string(&self) -> String {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let d = self.degree();
        for e in (-(d as i64))..=(d as i64) {
            let c = self.coeff(e.unsigned_abs() as u32);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            let body = if e == 0 {
                mag.to_string()
            } else if mag.is_one() {
                var
            } else {
                format!("{mag}{var}")
            };
            terms.push((c.is_negative(), body));
        }
        terms.reverse(); // descending exponent
        render_terms(terms)
    }

    /// Parse the `T`-basis rendering. Whitespace-insensitive; accepts an
    /// optional `*` between coefficient and basis symbol.
    pub fn parse_tbasis(text: &str) -> Result<SymPoly, PolyError> {
        let mut p = TermParser::new(text);
        let mut f = SymPoly::zero();
        loop {
            let (sign, offset) = p.term_sign()?;
            let term = p.term(offset)?;
            match term {
                Term::Constant(c) => f.a0 += sign * c,
                Term::TBasis { coeff, index } => {
                    if index == 0 {
                        return Err(parse_err(offset, "T0 is not a basis element; write the constant 2"));
                    }
                    f.add_to(index, &(sign * coeff));
                }
                Term::Monomial { .. } => {
                    return Err(parse_err(offset, "monomial term in T-basis text; use parse_monomial"));
                }
            }
            p.skip_ws();
            if p.done() {
                return Ok(f);
            }
        }
    }

    /// Parse the monomial rendering; the exponent map must be symmetric.
    pub fn parse_monomial(text: &str) -> Result<SymPoly, PolyError> {
        let mut p = TermParser::new(text);
        let mut mono: BTreeMap<i64, BigInt> = BTreeMap::new();
        loop {
            let (sign, offset) = p.term_sign()?;
            let term = p.term(offset)?;
            match term {
                Term::Constant(c) => {
                    let e = mono.entry(0).or_insert_with(BigInt::zero);
                    *e += sign * c;
                }
                Term::Monomial { coeff, exp } => {
                    let e = mono.entry(exp).or_insert_with(BigInt::zero);
                    *e += sign * coeff;
                }
                Term::TBasis { .. } => {
                    return Err(parse_err(offset, "T-basis term in monomial text; use parse_tbasis"));
                }
            }
            p.skip_ws();
            if p.done() {
                break;
            }
        }
        mono.retain(|_, c| !c.is_zero());
        let mut f = SymPoly::zero();
        for (&e, c) in &mono {
            if e < 0 {
                let mirror = mono.get(&-e).cloned().unwrap_or_else(BigInt::zero);
                if mirror != *c {
                    return Err(parse_err(
                        0,
                        format!("not symmetric: coefficient of t^{e} is {c} but t^{} is {mirror}", -e),
                    ));
                }
            } else if e == 0 {
                f.a0 = c.clone();
            } else {
                if mono.get(&-e).cloned().unwrap_or_else(BigInt::zero) != *c {
                    return Err(parse_err(
                        0,
                        format!("not symmetric: coefficient of t^{e} has no matching t^-{e} term"),
                    ));
                }
                f.add_to(e as u32, c);
            }
        }
        Ok(f)
    }
}

fn render_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (neg, body)) in terms.into_iter().enumerate() {
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tbasis_string())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymPoly({})", self.to_tbasis_string())
    }
}

enum Term {
    Constant(BigInt),
    TBasis { coeff: BigInt, index: u32 },
    Monomial { coeff: BigInt, exp: i64 },
}

struct TermParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    first: bool,
}

impl<'a> TermParser<'a> {
    fn new(text: &'a str) -> Self {
        TermParser { bytes: text.as_bytes(), pos: 0, first: true }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn done(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Sign before a term: mandatory `+`/`-` between terms, optional in front.
    fn term_sign(&mut self) -> Result<(BigInt, usize), PolyError> {
        self.skip_ws();
        let offset = self.pos;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Ok((BigInt::one(), self.pos))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok((-BigInt::one(), self.pos))
            }
            Some(_) if self.first => Ok((BigInt::one(), offset)),
            Some(_) => Err(parse_err(offset, "expected '+' or '-' between terms")),
            None => Err(parse_err(offset, if self.first { "empty polynomial" } else { "dangling sign" })),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Some(s.parse().unwrap())
    }

    fn term(&mut self, offset: usize) -> Result<Term, PolyError> {
        self.first = false;
        self.skip_ws();
        let coeff = self.digits();
        if coeff.is_some() {
            let save = self.pos;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
            } else if self.pos != save && !matches!(self.peek(), Some(b'T') | Some(b't')) {
                // whitespace after the number but no variable follows
                self.pos = save;
            }
        }
        match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                let idx_off = self.pos;
                let idx = self
                    .digits()
                    .ok_or_else(|| parse_err(idx_off, "expected a basis index after 'T'"))?;
                let index: u32 = idx
                    .try_into()
                    .map_err(|_| parse_err(idx_off, "basis index out of range"))?;
                Ok(Term::TBasis { coeff: coeff.unwrap_or_else(BigInt::one), index })
            }
            Some(b't') => {
                self.pos += 1;
                let exp = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some(b'-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let exp_off = self.pos;
                    let e = self
                        .digits()
                        .ok_or_else(|| parse_err(exp_off, "expected an exponent after '^'"))?;
                    let e: i64 = e.try_into().map_err(|_| parse_err(exp_off, "exponent out of range"))?;
                    if neg {
                        -e
                    } else {
                        e
                    }
                } else {
                    1
                };
                Ok(Term::Monomial { coeff: coeff.unwrap_or_else(BigInt::one), exp })
            }
            _ => match coeff {
                Some(c) => Ok(Term::Constant(c)),
                None => Err(parse_err(offset.max(self.pos), "expected a term")),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn tb(s: &str) -> SymPoly {
        SymPoly::parse_tbasis(s).unwrap()
    }

    #[test]
    fn add_basics() {
        let f = tb("1 - T1 + T2");
        assert_eq!(f.add(&SymPoly::zero()), f);
        assert_eq!(tb("1 - T1").add(&tb("T1")), SymPoly::one());
        // Alexander polynomials of K(1) and K(2): (T1 - 1) + (2T1 - 3)
        let k1 = tb("-1 + T1");
        let k2 = tb("-3 + 2T1");
        assert_eq!(k1.add(&k2), tb("-4 + 3T1"));
    }

    #[test]
    fn mul_basis_rule() {
        let t1 = SymPoly::basis(1);
        assert_eq!(t1.mul(&t1), tb("2 + T2"));
        let f = tb("-1 + T1");
        assert_eq!(f.mul(&SymPoly::basis(3)), tb("T2 - T3 + T4"));
    }

    #[test]
    fn mul_cable_product_t0() {
        // T(2,3)-companion cable with parameter 13: t0 of the full product is 3.
        let torus23_sq = tb("-1 + T2");
        let torus2_13 = tb("1 - T1 + T2 - T3 + T4 - T5 + T6");
        let prod = torus23_sq.mul(&torus2_13);
        assert_eq!(prod.t0(), BigInt::from(3));
        assert_eq!(prod, tb("1 - T1 + T2 - T3 + T4 - T7 + T8"));
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(tb("-1 + T1").substitute_power(2), tb("-1 + T2"));
        assert_eq!(tb("1 - T1 + T2").substitute_power(3), tb("1 - T3 + T6"));
        let f = tb("4 - 2T2 + T5");
        assert_eq!(f.substitute_power(1), f);
    }

    #[test]
    fn eval_at_one_examples() {
        assert_eq!(tb("1 - T1 + T2").eval_at_one(), BigInt::one());
        for n in 1..=10i64 {
            let f = SymPoly::from_coeffs(1 - 2 * n, [(1u32, n)]).unwrap();
            assert_eq!(f.eval_at_one(), BigInt::one());
        }
    }

    #[test]
    fn second_derivative_examples() {
        // K(n): 2 i^2 a_i at i = 1 gives 2n.
        for n in 1..=10i64 {
            let f = SymPoly::from_coeffs(1 - 2 * n, [(1u32, n)]).unwrap();
            assert_eq!(f.second_derivative_at_one(), BigInt::from(2 * n));
        }
        // T(2, 4k+1): 2(2k^2 + k).
        for k in 1..=3u32 {
            let r = 2 * k;
            let f = torus2(r);
            assert_eq!(
                f.second_derivative_at_one(),
                BigInt::from(2 * (2 * i64::from(k) * i64::from(k) + i64::from(k)))
            );
        }
    }

    // (-1)^r (1 + sum (-1)^k T_k), the (2, 2r+1) torus knot polynomial.
    fn torus2(r: u32) -> SymPoly {
        let sign = |x: u32| if x % 2 == 0 { 1 } else { -1 };
        SymPoly::from_coeffs(sign(r), (1..=r).map(|k| (k, sign(r + k)))).unwrap()
    }

    #[test]
    fn t0_examples() {
        assert_eq!(tb("1 - T1 + T2").t0(), BigInt::one());
        assert_eq!(SymPoly::one().t0(), BigInt::zero());
        // additive in the polynomial
        let f = tb("2 - T1 + 3T4");
        let g = tb("-1 + T2 + T3");
        assert_eq!(f.add(&g).t0(), f.t0() + g.t0());
        // not multiplicative-Leibniz: products need the real expansion
        let doubled = tb("-1 + T1").substitute_power(2);
        let long = tb("1 - T1 + T2 - T3 + T4 - T5 + T6");
        assert_eq!(doubled.mul(&long).t0(), BigInt::from(3));
    }

    #[test]
    fn t0_of_basis_multiple_closed_form() {
        // k past the degree
        assert_eq!(tb("-1 + T1").t0_of_basis_multiple(3).unwrap(), BigInt::from(3));
        // k inside the support: 1*1 + 2*(-1) + 4*1 = 3
        assert_eq!(tb("1 - T1 + T2").t0_of_basis_multiple(1).unwrap(), BigInt::from(3));
        // must agree with the product route
        for r in 1..=6 {
            let f = torus2(r);
            for k in 1..=10 {
                assert_eq!(
                    f.t0_of_basis_multiple(k).unwrap(),
                    f.mul(&SymPoly::basis(k)).t0(),
                    "r={r} k={k}"
                );
            }
        }
    }

    #[test]
    fn t0_of_basis_multiple_requires_normalization() {
        let err = tb("1 + T1").t0_of_basis_multiple(2).unwrap_err();
        assert_eq!(err, PolyError::NotNormalized { got: BigInt::from(3) });
    }

    #[test]
    fn monomial_oracle_agrees_on_examples() {
        let f = tb("-1 + T1 + 2T3");
        let g = tb("5 - T2");
        assert_eq!(f.mul(&g), oracle::mul_by_monomials(&f, &g));
    }

    #[test]
    fn rendering_examples() {
        let f = tb("1 - T1 + T2");
        assert_eq!(f.to_tbasis_string(), "1 - T1 + T2");
        assert_eq!(f.to_monomial_string(), "t^2 - t + 1 - t^-1 + t^-2");
        assert_eq!(SymPoly::zero().to_tbasis_string(), "0");
        assert_eq!(SymPoly::zero().to_monomial_string(), "0");
        assert_eq!(tb("-4 + 3T1").to_monomial_string(), "3t - 4 + 3t^-1");
    }

    #[test]
    fn parse_accepts_loose_spacing() {
        assert_eq!(tb("  1-T1   +T2"), tb("1 - T1 + T2"));
        assert_eq!(tb("2*T3 - 1"), tb("-1 + 2T3"));
        assert_eq!(SymPoly::parse_monomial("t^2-t+1-t^-1+t^-2").unwrap(), tb("1 - T1 + T2"));
        assert_eq!(SymPoly::parse_monomial("7").unwrap(), SymPoly::constant(7));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(SymPoly::parse_tbasis(""), Err(PolyError::Parse { .. })));
        assert!(matches!(SymPoly::parse_tbasis("1 + + T1"), Err(PolyError::Parse { .. })));
        assert!(matches!(SymPoly::parse_tbasis("T0"), Err(PolyError::Parse { .. })));
        assert!(matches!(SymPoly::parse_tbasis("1 - t^2"), Err(PolyError::Parse { .. })));
        assert!(matches!(SymPoly::parse_monomial("t + T1"), Err(PolyError::Parse { .. })));
        // asymmetric monomial input
        assert!(matches!(SymPoly::parse_monomial("t^2 + 1"), Err(PolyError::Parse { .. })));
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig { cases: 256, ..Default::default() })]

        #[test]
        fn ring_laws(
            a in arb_poly(12, 30),
            b in arb_poly(12, 30),
            c in arb_poly(12, 30),
        ) {
            proptest::prop_assert_eq!(a.add(&b), b.add(&a));
            proptest::prop_assert_eq!(a.mul(&b), b.mul(&a));
            proptest::prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            proptest::prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            proptest::prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn mul_matches_monomial_oracle(a in arb_poly(14, 40), b in arb_poly(14, 40)) {
            proptest::prop_assert_eq!(a.mul(&b), oracle::mul_by_monomials(&a, &b));
        }

        #[test]
        fn eval_at_one_is_multiplicative(a in arb_poly(10, 25), b in arb_poly(10, 25)) {
            proptest::prop_assert_eq!(a.mul(&b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        }

        #[test]
        fn second_derivative_quadruples_under_square_substitution(a in arb_poly(10, 25)) {
            proptest::prop_assert_eq!(
                a.substitute_power(2).second_derivative_at_one(),
                a.second_derivative_at_one() * 4
            );
        }

        #[test]
        fn substitution_composes(a in arb_poly(8, 20), p in 1u32..5, q in 1u32..5) {
            proptest::prop_assert_eq!(
                a.substitute_power(p).substitute_power(q),
                a.substitute_power(p * q)
            );
        }

        #[test]
        fn render_roundtrips(a in arb_poly(12, 50)) {
            proptest::prop_assert_eq!(SymPoly::parse_tbasis(&a.to_tbasis_string()).unwrap(), a.clone());
            proptest::prop_assert_eq!(SymPoly::parse_monomial(&a.to_monomial_string()).unwrap(), a);
        }
    }

    fn arb_poly(max_deg: u32, max_coeff: i64) -> impl proptest::strategy::Strategy<Value = SymPoly> {
        use proptest::prelude::*;
        (
            -max_coeff..=max_coeff,
            proptest::collection::btree_map(1..=max_deg, -max_coeff..=max_coeff, 0..6),
        )
            .prop_map(|(a0, m)| SymPoly::from_coeffs(a0, m).unwrap())
    }
}
