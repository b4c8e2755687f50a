//! Exact scalars: arbitrary-precision integers and rationals.
//!
//! `Rat` is a reduced fraction with positive denominator; all arithmetic is
//! exact. The helpers here are the small pieces of glue the geometric layers
//! need: floor/ceil to integers, integrality tests, and text parsing in the
//! `p/q` form used by the polyhedron file format.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt as Int;
pub use num_rational::BigRational as Rat;

/// Integer vector.
pub type IVec = Vec<Int>;
/// Rational vector.
pub type QVec = Vec<Rat>;

/// Shorthand for small integer constants.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand for small rational constants; `d` must be nonzero.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Embeds an integer into the rationals.
pub fn int_to_rat(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Converts a slice of small integers into an integer vector.
pub fn ivec(entries: &[i64]) -> IVec {
    entries.iter().map(|&n| Int::from(n)).collect()
}

/// Converts a slice of small integers into a rational vector.
pub fn qvec(entries: &[i64]) -> QVec {
    entries.iter().map(|&n| rat(n, 1)).collect()
}

/// Largest integer `<= r`.
pub fn floor_int(r: &Rat) -> Int {
    r.floor().to_integer()
}

/// Smallest integer `>= r`.
pub fn ceil_int(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// True if the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if every entry is an integer.
pub fn is_integer_vec(v: &[Rat]) -> bool {
    v.iter().all(is_integer)
}

/// Converts a rational vector with unit denominators into an integer vector.
///
/// Panics if an entry is not integral; callers check with [`is_integer_vec`].
pub fn to_integer_vec(v: &[Rat]) -> Vec<Int> {
    v.iter()
        .map(|r| {
            debug_assert!(is_integer(r), "non-integral entry");
            r.to_integer()
        })
        .collect()
}

/// Embeds an integer vector into rational space.
pub fn ivec_to_qvec(v: &[Int]) -> QVec {
    v.iter().map(int_to_rat).collect()
}

/// Parses a rational from `p`, `-p`, or `p/q` notation.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let n: Int = num.trim().parse().ok()?;
            let d: Int = den.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Formats a rational as `p/q`, or plain `p` when the denominator is one.
///
/// This is exactly the lexical form accepted by [`parse_rat`]; `Rat`'s own
/// `Display` implementation already agrees with it, so this is a thin alias
/// that documents the contract.
pub fn format_rat(r: &Rat) -> String {
    use alloc::string::ToString;
    r.to_string()
}

/// Exact squared Euclidean norm of a rational vector.
pub fn norm_sq(v: &[Rat]) -> Rat {
    v.iter().map(|x| x * x).fold(Rat::zero(), |a, b| a + b)
}

/// Rational bounds `(lo, hi)` with `lo <= sqrt(x) <= hi`, sharpened to
/// `hi - lo <= 2^-precision_bits * max(1, hi)`.
///
/// `x` must be nonnegative. Used where a construction involves a Euclidean
/// radius that is not itself rational; all downstream comparisons stay exact.
pub fn sqrt_bounds(x: &Rat, precision_bits: u32) -> (Rat, Rat) {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    // sqrt(p/q) = sqrt(p*q)/q; scale by 4^k so the integer sqrt carries
    // k extra bits of precision.
    let scale = Int::one() << precision_bits;
    let scaled = x.numer() * x.denom() * &scale * &scale;
    let root = scaled.sqrt();
    let denom = x.denom() * &scale;
    let lo = Rat::new(root.clone(), denom.clone());
    let hi = Rat::new(root + Int::one(), denom);
    (lo, hi)
}
