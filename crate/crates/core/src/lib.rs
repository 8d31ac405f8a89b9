//! Exact-arithmetic invariants of knots built from two-strand cables.
//!
//! Everything here works over the integers (or exact rationals where a
//! quarter shows up); there are no floating-point tolerances anywhere.
//! The crate is organized around four pieces:
//!
//! - [`sympoly`]: symmetric Laurent polynomials in the basis
//!   `T_i = t^i + t^-i`, the shape every Alexander polynomial takes.
//! - [`knots`]: a small expression language for knots (torus knots, a
//!   twist family `K(n)`, two-strand cables, connected sums, mirrors)
//!   with Alexander polynomials and propagated attributes.
//! - [`invariants`]: surgery invariants — the Casson invariant of
//!   +1-surgery, the correction term `d1` (exact value, upper bound, or
//!   interval depending on what is known), `tau` of cables, the count
//!   `ds` of definite Spin fillings, and the Fox-Milnor obstruction.
//! - [`lattice`]: integral symmetric forms, characteristic vectors, and
//!   the correction-term lower bound they certify.
//!
//! [`verify`] replays the identities behind all of the above as a
//! deterministic, seedable check suite; [`oracle`] holds the slow
//! reference implementations those checks compare against.

pub mod invariants;
pub mod knots;
pub mod lattice;
pub mod oracle;
pub mod sympoly;
pub mod verify;

mod factor;

/// Which of the two cable parameters `q = 4k + 1` or `q = 4k - 1` is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CableSign {
    Plus,
    Minus,
}

impl CableSign {
    /// The cable parameter `4k + 1` or `4k - 1`, if it fits in an `i64`.
    pub fn cable_q(self, k: i64) -> Option<i64> {
        let four_k = k.checked_mul(4)?;
        match self {
            CableSign::Plus => four_k.checked_add(1),
            CableSign::Minus => four_k.checked_sub(1),
        }
    }
}

impl std::fmt::Display for CableSign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CableSign::Plus => write!(f, "plus"),
            CableSign::Minus => write!(f, "minus"),
        }
    }
}
