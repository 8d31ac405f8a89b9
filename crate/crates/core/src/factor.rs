//! Integer polynomial factorization by Kronecker's interpolation method,
//! sized for the small palindromic polynomials the Fox-Milnor test produces.
//!
//! Polynomials are dense coefficient vectors, ascending exponents, with no
//! trailing zeros. The search is exact but budgeted: a `None` result means a
//! resource limit was hit, never that a wrong factorization was returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;

/// DFS nodes allowed per factorization call.
const DEFAULT_BUDGET: u64 = 500_000;
/// Trial-division ceiling when factoring sample values.
const TRIAL_LIMIT: u128 = 1_000_000;
/// Largest divisor list tolerated for a single sample value.
const MAX_DIVISORS: usize = 4096;

pub(crate) struct Budget {
    steps: u64,
}

impl Budget {
    pub(crate) fn new(steps: u64) -> Self {
        Budget { steps }
    }

    fn spend(&mut self) -> bool {
        if self.steps > 0 {
            self.steps -= 1;
            true
        } else {
            false
        }
    }
}

pub(crate) fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Quotient of `num / den` when the division is exact over the integers.
pub(crate) fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Option<IntPoly> {
    assert!(!den.is_empty() && !den.last().unwrap().is_zero());
    if num.len() < den.len() {
        return None;
    }
    let dn = den.len() - 1;
    let lead = &den[dn];
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    for i in (dn..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (q, r) = rem[i].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dc) in den.iter().enumerate() {
            let t = &q * dc;
            rem[i - dn + j] -= t;
        }
        quot[i - dn] = q;
    }
    if rem.iter().all(Zero::is_zero) {
        Some(quot)
    } else {
        None
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divide out the content and make the leading coefficient positive.
pub(crate) fn primitive_normalized(p: &[BigInt]) -> IntPoly {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let c = content(&p);
    let mut out: Vec<BigInt> = p.iter().map(|x| x / &c).collect();
    if out.last().unwrap().is_negative() {
        for x in &mut out {
            *x = -&*x;
        }
    }
    out
}

/// Coefficients reversed, then normalized the same way as
/// `primitive_normalized`; a polynomial equal to its own image here is
/// self-reciprocal up to sign.
pub(crate) fn reciprocal_normalized(p: &[BigInt]) -> IntPoly {
    let r: Vec<BigInt> = p.iter().rev().cloned().collect();
    primitive_normalized(&r)
}

fn sample_points() -> Vec<BigInt> {
    let mut pts = vec![BigInt::zero()];
    for k in 1i64..=8 {
        pts.push(BigInt::from(k));
        pts.push(BigInt::from(-k));
    }
    pts
}

/// All positive divisors of `n`, ascending, by trial division. `None` when
/// `n` is too large to factor within the limits.
fn positive_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    debug_assert!(!n.is_zero());
    let mut m = u128::try_from(n.abs()).ok()?;
    let mut primes: Vec<(u128, u32)> = Vec::new();
    let mut d: u128 = 2;
    while d <= TRIAL_LIMIT && d * d <= m {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        // No prime factor up to TRIAL_LIMIT remains, so m is prime as long as
        // it is below the square of the limit.
        if m <= TRIAL_LIMIT * TRIAL_LIMIT {
            primes.push((m, 1));
        } else {
            return None;
        }
    }
    let mut divs: Vec<u128> = vec![1];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d0 in &divs {
            let mut pe: u128 = 1;
            for _ in 0..=e {
                next.push(d0 * pe);
                pe = pe.saturating_mul(p);
            }
        }
        divs = next;
        if divs.len() > MAX_DIVISORS {
            return None;
        }
    }
    divs.sort_unstable();
    Some(divs.into_iter().map(BigInt::from).collect())
}

struct BudgetExceeded;

/// Depth-first search for a degree-`d` divisor of `p`, assigning a divisor of
/// `p(x_i)` as the candidate value at each sample point. The value at the
/// first point is kept positive, which fixes the overall sign. A value is
/// extended only when `g(x_i) == g(x_j) mod (x_i - x_j)` holds against every
/// earlier point, then the full tuple is interpolated and the candidate
/// division-tested.
fn search_degree(
    p: &[BigInt],
    d: usize,
    points: &[BigInt],
    tables: &[Vec<BigInt>],
    values: &mut Vec<BigInt>,
    budget: &mut Budget,
) -> Result<Option<IntPoly>, BudgetExceeded> {
    if !budget.spend() {
        return Err(BudgetExceeded);
    }
    let i = values.len();
    if i == d + 1 {
        if let Some(g) = interpolate_integer(&points[..=d], values) {
            let g = primitive_normalized(&g);
            if g.len() == d + 1 && divide_exact(p, &g).is_some() {
                return Ok(Some(g));
            }
        }
        return Ok(None);
    }
    for base in &tables[i] {
        for negate in [false, true] {
            if negate && i == 0 {
                continue;
            }
            let v = if negate { -base } else { base.clone() };
            let congruent = (0..i).all(|j| {
                let diff = &points[i] - &points[j];
                ((&v - &values[j]) % diff).is_zero()
            });
            if !congruent {
                continue;
            }
            values.push(v);
            let hit = search_degree(p, d, points, tables, values, budget)?;
            values.pop();
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

/// Lagrange interpolation through `(points[i], values[i])`; `None` when the
/// result is not an integer polynomial.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> Option<IntPoly> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for i in 0..n {
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, xj) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = mul_linear(basis, xj);
            denom *= BigRational::from(&points[i] - xj);
        }
        let scale = BigRational::from(values[i].clone()) / denom;
        for (k, b) in basis.iter().enumerate() {
            acc[k] += b * &scale;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(trim(out))
}

/// Multiply a rational polynomial by `(x - r)`.
fn mul_linear(p: Vec<BigRational>, r: &BigInt) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); p.len() + 1];
    let r = BigRational::from(r.clone());
    for (k, c) in p.into_iter().enumerate() {
        out[k + 1] += &c;
        out[k] -= c * &r;
    }
    out
}

/// Factor `p` into primitive irreducible polynomials with positive leading
/// coefficients, each with its multiplicity, in deterministic order. The
/// overall sign and integer content are dropped. `None` means a resource
/// limit was hit.
pub(crate) fn factor(p: &[BigInt]) -> Option<Vec<(IntPoly, u32)>> {
    factor_with_budget(p, &mut Budget::new(DEFAULT_BUDGET))
}

pub(crate) fn factor_with_budget(
    p: &[BigInt],
    budget: &mut Budget,
) -> Option<Vec<(IntPoly, u32)>> {
    let mut rest = primitive_normalized(p);
    assert!(!rest.is_empty(), "cannot factor the zero polynomial");
    let mut out: Vec<(IntPoly, u32)> = Vec::new();
    let points = sample_points();

    // Strip linear factors rooted at the sample points first, so every later
    // evaluation is nonzero and has a finite divisor list.
    for r in &points {
        let lin = vec![-r, BigInt::one()];
        let mut m = 0u32;
        while let Some(q) = divide_exact(&rest, &lin) {
            rest = q;
            m += 1;
        }
        if m > 0 {
            out.push((lin, m));
        }
    }

    let mut tables: Vec<Option<Vec<BigInt>>> = vec![None; points.len()];
    let mut d = 1usize;
    while rest.len() >= 2 {
        let deg = rest.len() - 1;
        if d > deg / 2 {
            // No factor of degree <= deg/2 exists, so what remains is irreducible.
            out.push((rest, 1));
            break;
        }
        if d + 1 > points.len() {
            return None;
        }
        for (i, slot) in tables.iter_mut().enumerate().take(d + 1) {
            if slot.is_none() {
                let v = eval(&rest, &points[i]);
                debug_assert!(!v.is_zero(), "sample roots were stripped");
                *slot = Some(positive_divisors(&v)?);
            }
        }
        let filled: Vec<Vec<BigInt>> = tables[..=d]
            .iter()
            .map(|t| t.clone().unwrap())
            .collect();
        let mut values = Vec::with_capacity(d + 1);
        match search_degree(&rest, d, &points, &filled, &mut values, budget) {
            Err(BudgetExceeded) => return None,
            Ok(None) => d += 1,
            Ok(Some(g)) => {
                let mut m = 0u32;
                while let Some(q) = divide_exact(&rest, &g) {
                    rest = q;
                    m += 1;
                }
                debug_assert!(m >= 1);
                out.push((g, m));
                // The quotient has new sample values; minimal factor degree
                // can only have grown, so d stays where it is.
                tables = vec![None; points.len()];
            }
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPoly {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, ca) in a.iter().enumerate() {
            for (j, cb) in b.iter().enumerate() {
                out[i + j] += ca * cb;
            }
        }
        out
    }

    #[test]
    fn eval_and_divide() {
        let p = poly(&[2, -5, 2]); // (x-2)(2x-1)
        assert_eq!(eval(&p, &BigInt::from(3)), BigInt::from(5));
        assert_eq!(divide_exact(&p, &poly(&[-2, 1])), Some(poly(&[-1, 2])));
        assert_eq!(divide_exact(&p, &poly(&[-1, 1])), None);
        assert_eq!(mul(&poly(&[-2, 1]), &poly(&[-1, 2])), p);
    }

    #[test]
    fn splits_into_linear_and_quadratic() {
        let p = poly(&[-1, 0, 0, 0, 1]); // x^4 - 1
        let f = factor(&p).unwrap();
        assert_eq!(
            f,
            vec![
                (poly(&[-1, 1]), 1),
                (poly(&[1, 1]), 1),
                (poly(&[1, 0, 1]), 1),
            ]
        );
    }

    #[test]
    fn finds_non_sample_roots() {
        let p = poly(&[2, -5, 2]); // roots 2 and 1/2
        let f = factor(&p).unwrap();
        assert_eq!(f, vec![(poly(&[-2, 1]), 1), (poly(&[-1, 2]), 1)]);
    }

    #[test]
    fn reports_multiplicity() {
        let g = poly(&[1, -1, 1]);
        let p = mul(&g, &g);
        assert_eq!(factor(&p).unwrap(), vec![(g, 2)]);
    }

    #[test]
    fn content_and_sign_are_dropped() {
        let p = poly(&[6, 0, -6]); // -6(x-1)(x+1)
        assert_eq!(
            factor(&p).unwrap(),
            vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]
        );
    }

    #[test]
    fn quartic_family_is_irreducible() {
        for l in 1i64..=5 {
            let p = poly(&[l, 0, -(2 * l - 1), 0, l]);
            let f = factor(&p).unwrap();
            assert_eq!(f.len(), 1, "l = {l}");
            assert_eq!(f[0].1, 1, "l = {l}");
            assert_eq!(f[0].0, primitive_normalized(&p), "l = {l}");
        }
    }

    #[test]
    fn mixed_product_recovered() {
        // (x^2 + 1)^2 (2x - 1) (x - 3)
        let sq = mul(&poly(&[1, 0, 1]), &poly(&[1, 0, 1]));
        let p = mul(&mul(&sq, &poly(&[-1, 2])), &poly(&[-3, 1]));
        let f = factor(&p).unwrap();
        assert_eq!(
            f,
            vec![
                (poly(&[-3, 1]), 1),
                (poly(&[-1, 2]), 1),
                (poly(&[1, 0, 1]), 2),
            ]
        );
    }

    #[test]
    fn reciprocal_normalization() {
        assert_eq!(reciprocal_normalized(&poly(&[-2, 1])), poly(&[-1, 2]));
        assert_eq!(reciprocal_normalized(&poly(&[1, -1, 1])), poly(&[1, -1, 1]));
        assert_eq!(reciprocal_normalized(&poly(&[-1, 1])), poly(&[-1, 1]));
        assert_eq!(reciprocal_normalized(&poly(&[3, 2, 0, 1])), poly(&[1, 0, 2, 3]));
    }

    #[test]
    fn exhausted_budget_gives_up() {
        let p = poly(&[1, 0, 1]);
        assert_eq!(factor_with_budget(&p, &mut Budget::new(0)), None);
        assert!(factor_with_budget(&p, &mut Budget::new(1_000)).is_some());
    }

    #[test]
    fn constants_have_no_factors() {
        assert_eq!(factor(&poly(&[7])), Some(vec![]));
    }
}
