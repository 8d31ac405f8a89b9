//! Slow reference computations.
//!
//! These expand everything down to raw `t`-monomials and take the obvious
//! route. They exist so the verification suite and the tests can compare an
//! independent code path against the `T`-basis arithmetic; production code
//! never calls them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::sympoly::SymPoly;

/// Expand to the exponent -> coefficient map over `t`-monomials.
pub fn monomial_map(f: &SymPoly) -> BTreeMap<i64, BigInt> {
    let mut m = BTreeMap::new();
    let a0 = f.coeff(0);
    if !a0.is_zero() {
        m.insert(0, a0);
    }
    for (i, c) in f.iter() {
        m.insert(i64::from(i), c.clone());
        m.insert(-i64::from(i), c.clone());
    }
    m
}

/// Fold a symmetric exponent map back into the `T` basis.
///
/// Panics if the map is not symmetric; the inputs here always are.
pub fn from_monomial_map(m: &BTreeMap<i64, BigInt>) -> SymPoly {
    let mut pairs = Vec::new();
    for (&e, c) in m.iter().filter(|(&e, _)| e > 0) {
        assert_eq!(m.get(&-e), Some(c), "asymmetric monomial map at exponent {e}");
        pairs.push((e as u32, c.clone()));
    }
    let a0 = m.get(&0).cloned().unwrap_or_else(BigInt::zero);
    SymPoly::from_coeffs(a0, pairs).expect("positive indices")
}

/// Multiplication by convolution of `t`-monomials.
pub fn mul_by_monomials(f: &SymPoly, g: &SymPoly) -> SymPoly {
    let fm = monomial_map(f);
    let gm = monomial_map(g);
    let mut out: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (&e1, c1) in &fm {
        for (&e2, c2) in &gm {
            let entry = out.entry(e1 + e2).or_insert_with(BigInt::zero);
            *entry += c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    from_monomial_map(&out)
}

/// `f''(1)` computed monomial by monomial: `sum c_e * e * (e - 1)`.
pub fn second_derivative_by_monomials(f: &SymPoly) -> BigInt {
    monomial_map(f)
        .iter()
        .map(|(&e, c)| c * BigInt::from(e) * BigInt::from(e - 1))
        .sum()
}

/// `t0` computed from the monomial expansion: `sum_{e > 0} e * c_e`.
pub fn t0_by_monomials(f: &SymPoly) -> BigInt {
    monomial_map(f)
        .iter()
        .filter(|(&e, _)| e > 0)
        .map(|(&e, c)| c * BigInt::from(e))
        .sum()
}
