//! Integral symmetric bilinear forms and the correction-term bound they
//! impose: definiteness and signature by exact arithmetic, characteristic
//! vectors, a bounded search for the best characteristic square, and the
//! two-sided certificate pinning d1 of two-strand cables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::knots::torus2_alexander;
use crate::CableSign;

/// Parsed forms are capped at this rank.
const MAX_PARSE_RANK: usize = 64;
/// Parity classes searched by `d_lower_bound` are capped at 2^this.
const MAX_CLASS_DIM: usize = 16;

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("matrix parse error: {message}")]
    Parse { message: String },
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare { row: usize, got: usize, expected: usize },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("rank {rank} exceeds the supported maximum {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("the form is degenerate")]
    Degenerate,
    #[error("the form is not negative definite")]
    NotNegativeDefinite,
    #[error("search radius must be between 1 and 100, got {radius}")]
    BadRadius { radius: u32 },
    #[error("vector has {got} entries but the form has rank {expected}")]
    BadVectorLength { expected: usize, got: usize },
    #[error("too many parity classes to search: 2^{dim}")]
    TooManyParityClasses { dim: usize },
    #[error("certificate parameters rejected: {reason}")]
    CertificateParams { reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Definiteness {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    Degenerate,
}

impl fmt::Display for Definiteness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Definiteness::PositiveDefinite => "positive definite",
            Definiteness::NegativeDefinite => "negative definite",
            Definiteness::Indefinite => "indefinite",
            Definiteness::Degenerate => "degenerate",
        };
        f.write_str(text)
    }
}

/// A symmetric integer matrix, the Gram matrix of an integral lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    n: usize,
    m: Vec<i64>,
}

impl IntLattice {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = rows.len();
        if n > MAX_PARSE_RANK {
            return Err(LatticeError::RankTooLarge { rank: n, max: MAX_PARSE_RANK });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(LatticeError::NotSquare { row: i, got: row.len(), expected: n });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(LatticeError::NotSymmetric { i, j });
                }
            }
        }
        let m = rows.into_iter().flatten().collect();
        Ok(IntLattice { n, m })
    }

    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = vec![0; n * n];
        for (i, &e) in entries.iter().enumerate() {
            m[i * n + i] = e;
        }
        IntLattice { n, m }
    }

    /// The E8 form with reversed sign: even, unimodular, negative definite.
    pub fn minus_e8() -> Self {
        let rows: [[i64; 8]; 8] = [
            [-2, 0, 1, 0, 0, 0, 0, 0],
            [0, -2, 0, 1, 0, 0, 0, 0],
            [1, 0, -2, 1, 0, 0, 0, 0],
            [0, 1, 1, -2, 1, 0, 0, 0],
            [0, 0, 0, 1, -2, 1, 0, 0],
            [0, 0, 0, 0, 1, -2, 1, 0],
            [0, 0, 0, 0, 0, 1, -2, 1],
            [0, 0, 0, 0, 0, 0, 1, -2],
        ];
        IntLattice::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    pub fn direct_sum(&self, other: &IntLattice) -> Self {
        let n = self.n + other.n;
        let mut m = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                m[i * n + j] = self.entry(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                m[(self.n + i) * n + (self.n + j)] = other.entry(i, j);
            }
        }
        IntLattice { n, m }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.m[i * self.n + j]
    }

    /// Parse either the inline `[[a,b],[b,c]]` form or the text form whose
    /// first integer is the rank followed by the entries row by row.
    pub fn parse(text: &str) -> Result<Self, LatticeError> {
        if text.trim_start().starts_with('[') {
            Self::parse_inline(text)
        } else {
            Self::parse_text(text)
        }
    }

    pub fn parse_text(text: &str) -> Result<Self, LatticeError> {
        let mut tokens = text.split_whitespace();
        let head = tokens.next().ok_or_else(|| LatticeError::Parse {
            message: "empty input; expected the rank followed by the entries".into(),
        })?;
        let n: usize = head.parse().map_err(|_| LatticeError::Parse {
            message: format!("expected the rank as the first token, got '{head}'"),
        })?;
        if n > MAX_PARSE_RANK {
            return Err(LatticeError::RankTooLarge { rank: n, max: MAX_PARSE_RANK });
        }
        let mut entries = Vec::with_capacity(n * n);
        for token in tokens {
            let v: i64 = token.parse().map_err(|_| LatticeError::Parse {
                message: format!("bad matrix entry '{token}'"),
            })?;
            entries.push(v);
        }
        if entries.len() != n * n {
            return Err(LatticeError::Parse {
                message: format!("expected {} entries for rank {n}, got {}", n * n, entries.len()),
            });
        }
        let rows = entries.chunks(n).map(<[i64]>::to_vec).collect();
        Self::from_rows(rows)
    }

    pub fn parse_inline(text: &str) -> Result<Self, LatticeError> {
        let err = |message: String| LatticeError::Parse { message };
        let s = text.trim();
        let inner = s
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| err("expected a matrix like [[a,b],[b,c]]".into()))?;
        let mut rows = Vec::new();
        for row_text in inner.split("],") {
            let row_text = row_text.trim().trim_start_matches('[');
            let mut row = Vec::new();
            for cell in row_text.split(',') {
                let cell = cell.trim();
                row.push(cell.parse().map_err(|_| err(format!("bad matrix entry '{cell}'")))?);
            }
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    /// Determinant by fraction-free elimination with row pivoting.
    pub fn determinant(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, r);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if sign < 0 {
            -a[n - 1][n - 1].clone()
        } else {
            a[n - 1][n - 1].clone()
        }
    }

    /// Leading principal minors by fraction-free elimination without
    /// pivoting, stopping at (and including) the first zero minor.
    fn leading_minors(&self) -> Vec<BigInt> {
        let n = self.n;
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(self.entry(i, j))).collect())
            .collect();
        let mut minors = Vec::with_capacity(n);
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = a[k][k].clone();
            minors.push(pivot.clone());
            if pivot.is_zero() || k + 1 == n {
                break;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = pivot;
        }
        minors
    }

    /// Classify by Sylvester's criterion on the leading principal minors; a
    /// zero minor forces a determinant computation to separate indefinite
    /// from degenerate. The empty form counts as negative definite.
    pub fn definiteness(&self) -> Definiteness {
        if self.n == 0 {
            return Definiteness::NegativeDefinite;
        }
        let minors = self.leading_minors();
        if minors.len() == self.n && !minors.last().unwrap().is_zero() {
            if minors.iter().all(Signed::is_positive) {
                return Definiteness::PositiveDefinite;
            }
            let alternating = minors.iter().enumerate().all(|(k, m)| {
                if k % 2 == 0 {
                    m.is_negative()
                } else {
                    m.is_positive()
                }
            });
            if alternating {
                return Definiteness::NegativeDefinite;
            }
            return Definiteness::Indefinite;
        }
        if self.determinant().is_zero() {
            Definiteness::Degenerate
        } else {
            Definiteness::Indefinite
        }
    }

    /// `(n_plus, n_minus, signature)` by symmetric congruence
    /// diagonalization over the rationals. Degenerate forms are rejected.
    pub fn signature(&self) -> Result<(usize, usize, i64), LatticeError> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from(BigInt::from(self.entry(i, j))))
                    .collect()
            })
            .collect();
        let mut pos = 0usize;
        let mut neg = 0usize;
        for i in 0..n {
            if a[i][i].is_zero() {
                if let Some(j) = (i + 1..n).find(|&j| !a[j][j].is_zero()) {
                    // symmetric swap of coordinates i and j
                    a.swap(i, j);
                    for row in a.iter_mut() {
                        row.swap(i, j);
                    }
                } else if let Some(j) = (i + 1..n).find(|&j| !a[i][j].is_zero()) {
                    // add coordinate j into i; the new diagonal entry is
                    // 2*a[i][j] since a[j][j] is zero here
                    for k in 0..n {
                        let t = a[j][k].clone();
                        a[i][k] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[j].clone();
                        row[i] += t;
                    }
                } else {
                    return Err(LatticeError::Degenerate);
                }
            }
            let pivot = a[i][i].clone();
            debug_assert!(!pivot.is_zero());
            if pivot.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for j in i + 1..n {
                let f = &a[j][i] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let t = &f * &a[i][k];
                    a[j][k] -= t;
                }
                for row in a.iter_mut() {
                    let t = &f * &row[i];
                    row[j] -= t;
                }
            }
        }
        Ok((pos, neg, pos as i64 - neg as i64))
    }

    /// Whether every diagonal entry is even.
    pub fn is_even(&self) -> bool {
        (0..self.n).all(|i| self.entry(i, i) % 2 == 0)
    }

    /// Whether `v` pairs with every lattice vector like the diagonal does:
    /// `(Lv)_i = L_ii mod 2` for all i.
    pub fn is_characteristic(&self, v: &[i64]) -> Result<bool, LatticeError> {
        if v.len() != self.n {
            return Err(LatticeError::BadVectorLength { expected: self.n, got: v.len() });
        }
        Ok((0..self.n).all(|i| {
            let pairing: BigInt = (0..self.n)
                .map(|j| BigInt::from(self.entry(i, j)) * BigInt::from(v[j]))
                .sum();
            let diff = pairing - BigInt::from(self.entry(i, i));
            (diff % BigInt::from(2)).is_zero()
        }))
    }

    fn form_value(&self, v: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                acc += BigInt::from(self.entry(i, j)) * &v[i] * &v[j];
            }
        }
        acc
    }

    /// Particular solution and kernel basis of `Lx = diag(L) mod 2`.
    fn characteristic_classes_mod2(&self) -> (Vec<u8>, Vec<Vec<u8>>) {
        let n = self.n;
        let mut rows: Vec<Vec<u8>> = (0..n)
            .map(|i| {
                let mut r: Vec<u8> = (0..n).map(|j| (self.entry(i, j) & 1) as u8).collect();
                r.push((self.entry(i, i) & 1) as u8);
                r
            })
            .collect();
        let mut pivot_col_of_row = Vec::new();
        let mut rank = 0;
        for col in 0..n {
            let Some(r) = (rank..n).find(|&r| rows[r][col] == 1) else {
                continue;
            };
            rows.swap(rank, r);
            for i in 0..n {
                if i != rank && rows[i][col] == 1 {
                    let (head, tail) = if i < rank {
                        let (a, b) = rows.split_at_mut(rank);
                        (&mut a[i], &b[0])
                    } else {
                        let (a, b) = rows.split_at_mut(i);
                        (&mut b[0], &a[rank])
                    };
                    for k in 0..=n {
                        head[k] ^= tail[k];
                    }
                }
            }
            pivot_col_of_row.push(col);
            rank += 1;
        }
        for r in rank..n {
            debug_assert_eq!(rows[r][n], 0, "characteristic system is always solvable");
        }
        let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
        let is_pivot = |c: usize| pivot_cols.contains(&c);
        let mut particular = vec![0u8; n];
        for (r, &c) in pivot_cols.iter().enumerate() {
            particular[c] = rows[r][n];
        }
        let mut kernel = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot(c)) {
            let mut v = vec![0u8; n];
            v[free] = 1;
            for (r, &c) in pivot_cols.iter().enumerate() {
                v[c] = rows[r][free];
            }
            kernel.push(v);
        }
        (particular, kernel)
    }

    /// Best lower bound on the correction term d coming from this form:
    /// over characteristic vectors xi found within the search radius,
    /// maximize (xi.xi + n)/4, i.e. minimize |xi.xi|. The form must be
    /// negative definite. `interior` reports whether the radius provably did
    /// not truncate the search, making the bound the true optimum.
    pub fn d_lower_bound(&self, radius: u32, max_rank: usize) -> Result<DBound, LatticeError> {
        if !(1..=100).contains(&radius) {
            return Err(LatticeError::BadRadius { radius });
        }
        if self.n > max_rank {
            return Err(LatticeError::RankTooLarge { rank: self.n, max: max_rank });
        }
        if self.definiteness() != Definiteness::NegativeDefinite {
            return Err(LatticeError::NotNegativeDefinite);
        }
        let (particular, kernel) = self.characteristic_classes_mod2();
        if kernel.len() > MAX_CLASS_DIM {
            return Err(LatticeError::TooManyParityClasses { dim: kernel.len() });
        }
        let form = ldlt_of_negated(self);
        let mut best: Option<(BigInt, Vec<i64>)> = None;
        let mut interior = true;
        for mask in 0u32..(1u32 << kernel.len()) {
            let mut class = particular.clone();
            for (b, v) in kernel.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    for (c, &bit) in class.iter_mut().zip(v) {
                        *c ^= bit;
                    }
                }
            }
            let mut search = ClassSearch {
                lattice: self,
                form: &form,
                class: &class,
                radius: i64::from(radius),
                best: best.as_ref().map(|(q, _)| q.clone()),
                attained: None,
                interior: true,
            };
            search.seed_base_point();
            search.run();
            interior &= search.interior;
            if let Some(found) = search.attained {
                let q = search.best.unwrap();
                let better = match &best {
                    None => true,
                    Some((cur, _)) => q < *cur,
                };
                if better {
                    best = Some((q, found));
                }
            }
        }
        let (best_q, attained) = best.expect("every parity class yields its base point");
        let numerator = BigInt::from(self.n as i64) - &best_q;
        let bound = BigRational::new(numerator.clone(), BigInt::from(4));
        Ok(DBound { numerator, bound, attained, interior })
    }
}

impl fmt::Display for IntLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Result of the characteristic-vector search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DBound {
    /// `rank - |xi.xi|` for the best vector found.
    pub numerator: BigInt,
    /// `numerator / 4`, the lower bound on d.
    pub bound: BigRational,
    /// The vector attaining the bound, first in enumeration order.
    pub attained: Vec<i64>,
    /// True when the radius provably did not cut off the search, so the
    /// bound is the exact optimum over all characteristic vectors.
    pub interior: bool,
}

impl fmt::Display for DBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d >= {} (attained by {:?}; {})",
            self.bound,
            self.attained,
            if self.interior { "search complete" } else { "search truncated by radius" }
        )
    }
}

struct QuadForm {
    d: Vec<BigRational>,
    u: Vec<Vec<BigRational>>,
}

/// LDL^T factorization of the negated Gram matrix, which is positive
/// definite; the value of -x^T L x is sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.
fn ldlt_of_negated(l: &IntLattice) -> QuadForm {
    let n = l.rank();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from(BigInt::from(-l.entry(i, j))))
                .collect()
        })
        .collect();
    let mut d = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    for k in 0..n {
        let dk = a[k][k].clone();
        assert!(dk.is_positive(), "negated form must be positive definite");
        let row: Vec<BigRational> = (k + 1..n).map(|j| &a[k][j] / &dk).collect();
        for i in k + 1..n {
            for j in i..n {
                let t = &dk * &row[i - k - 1] * &row[j - k - 1];
                a[i][j] -= &t;
                if i != j {
                    let t2 = a[i][j].clone();
                    a[j][i] = t2;
                }
            }
        }
        d.push(dk);
        u.push(row);
    }
    QuadForm { d, u }
}

struct ClassSearch<'a> {
    lattice: &'a IntLattice,
    form: &'a QuadForm,
    class: &'a [u8],
    radius: i64,
    /// Best |xi.xi| seen so far, shared across classes for pruning.
    best: Option<BigInt>,
    /// Minimizer found in this class, if it beat `best`.
    attained: Option<Vec<i64>>,
    interior: bool,
}

impl ClassSearch<'_> {
    fn seed_base_point(&mut self) {
        let base: Vec<BigInt> = self.class.iter().map(|&c| BigInt::from(c)).collect();
        let q = -self.lattice.form_value(&base);
        debug_assert!(q >= BigInt::zero());
        let better = match &self.best {
            None => true,
            Some(cur) => q < *cur,
        };
        if better {
            self.best = Some(q);
            self.attained = Some(self.class.iter().map(|&c| i64::from(c)).collect());
        }
    }

    fn run(&mut self) {
        let n = self.lattice.rank();
        if n == 0 {
            return;
        }
        let mut x = vec![BigInt::zero(); n];
        self.dfs(n, &mut x, &BigRational::zero());
    }

    /// `level` counts how many coordinates remain unassigned; coordinates
    /// are assigned from the last index down.
    fn dfs(&mut self, level: usize, x: &mut Vec<BigInt>, partial: &BigRational) {
        if level == 0 {
            let q = partial.to_integer();
            debug_assert_eq!(BigRational::from(q.clone()), *partial);
            let better = match &self.best {
                None => true,
                Some(cur) => q < *cur,
            };
            if better {
                self.attained = Some(x.iter().map(|v| i64::try_from(v).unwrap()).collect());
                self.best = Some(q);
            }
            return;
        }
        let i = level - 1;
        let t: BigRational = self.form.u[i]
            .iter()
            .enumerate()
            .map(|(off, u)| u * BigRational::from(x[i + 1 + off].clone()))
            .sum();
        let c = i64::from(self.class[i]);
        let di = &self.form.d[i];
        let mut candidates: Vec<i64> = (-self.radius..=self.radius).map(|y| c + 2 * y).collect();
        candidates.sort_by_key(|&v| (v.abs(), v < 0));
        for v in candidates {
            let shifted = BigRational::from(BigInt::from(v)) + &t;
            let next = partial + di * &shifted * &shifted;
            if let Some(best) = &self.best {
                if next > BigRational::from(best.clone()) {
                    continue;
                }
            }
            x[i] = BigInt::from(v);
            self.dfs(level - 1, x, &next);
        }
        x[i] = BigInt::zero();
        self.check_radius_clip(i, &t, partial);
    }

    /// Mark the search truncated if a coordinate value just outside the
    /// radius could still reach the current best value: then a larger radius
    /// might improve or tie the bound and completeness is not certified.
    fn check_radius_clip(&mut self, i: usize, t: &BigRational, partial: &BigRational) {
        if !self.interior {
            return;
        }
        let Some(best) = &self.best else {
            self.interior = false;
            return;
        };
        let best = BigRational::from(best.clone());
        let c = i64::from(self.class[i]);
        let di = &self.form.d[i];
        for side in [-1i64, 1] {
            // nearest out-of-radius value to the unconstrained minimum -t
            let edge = c + 2 * side * (self.radius + 1);
            let edge_r = BigRational::from(BigInt::from(edge));
            let target = -t.clone();
            let outside = if side > 0 { target > edge_r } else { target < edge_r };
            let best_out = if outside {
                // snap -t to the parity grid, stepping 2, on this side
                let steps = ((target - BigRational::from(BigInt::from(c)))
                    / BigRational::from(BigInt::from(2)))
                .floor()
                .to_integer();
                let Ok(steps) = i64::try_from(&steps) else {
                    // -t is absurdly far outside: the grid point next to it
                    // has a tiny square, so completeness cannot be claimed
                    self.interior = false;
                    return;
                };
                let Some(lo) = steps.checked_mul(2).and_then(|s| s.checked_add(c)) else {
                    self.interior = false;
                    return;
                };
                [lo, lo + 2]
                    .into_iter()
                    .filter(|&v| if side > 0 { v >= edge } else { v <= edge })
                    .min_by(|&a, &b| {
                        let sa = BigRational::from(BigInt::from(a)) + t;
                        let sb = BigRational::from(BigInt::from(b)) + t;
                        (&sa * &sa).cmp(&(&sb * &sb))
                    })
                    .unwrap_or(edge)
            } else {
                edge
            };
            let shifted = BigRational::from(BigInt::from(best_out)) + t;
            let value = partial + di * &shifted * &shifted;
            if value < best {
                self.interior = false;
                return;
            }
        }
    }
}

/// Two independent computations of d1 for the two-strand cable with
/// parameter q = 4k +- 1 around a disk-bounding companion: an upper bound
/// from an even negative-definite form of rank 8k, and the exact value of
/// the torus knot T(2,q) through its Alexander polynomial. The constructor
/// asserts they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D1Certificate {
    pub q: i64,
    pub upper: i64,
    pub lower: i64,
}

impl fmt::Display for D1Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q = {}: lattice upper bound {}, torus-knot value {}",
            self.q, self.upper, self.lower
        )
    }
}

pub fn cable_d1_certificate(k: i64, sign: CableSign) -> Result<D1Certificate, LatticeError> {
    if k < 1 {
        return Err(LatticeError::CertificateParams {
            reason: format!("need k >= 1, got {k}"),
        });
    }
    if k > 125 {
        return Err(LatticeError::CertificateParams {
            reason: format!("k = {k} exceeds the supported range (125)"),
        });
    }
    let q = sign.cable_q(k).expect("k <= 125 cannot overflow");

    // Upper bound route: an even negative-definite unimodular form of rank
    // 8k has 0 as a characteristic vector, so its d bound is rank/4 = 2k on
    // the nose, which caps d1 at -2k.
    let e8 = IntLattice::minus_e8();
    let mut form = e8.clone();
    for _ in 1..k {
        form = form.direct_sum(&e8);
    }
    assert!(form.is_even(), "direct sums of even forms are even");
    assert!(
        form.is_characteristic(&vec![0; form.rank()]).unwrap(),
        "zero must be characteristic in an even form"
    );
    let upper = -2 * k;
    if k <= 2 {
        // Small ranks are cheap enough to certify by full enumeration.
        let db = form.d_lower_bound(2, 16)?;
        assert_eq!(db.bound, BigRational::from(BigInt::from(2 * k)));
        assert!(db.attained.iter().all(|&v| v == 0));
        assert!(db.interior);
    }

    // Lower bound route: the cable's d1 cannot undercut the torus-knot value
    // -2*t0 computed from the Alexander polynomial.
    let t0 = torus2_alexander((q - 1) / 2).t0();
    let lower_big = BigInt::from(-2) * t0;
    let lower = i64::try_from(&lower_big).expect("t0 of T(2,q) is small");

    assert_eq!(upper, lower, "certificate sides disagree at k = {k}");
    Ok(D1Certificate { q, upper, lower })
}
