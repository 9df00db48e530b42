use std::fmt::Debug;

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// Ring-like scalar the polynomial layers are written over.
///
/// Implemented for every signed numeric type in the `num` ecosystem:
/// `i64`, `i128`, [`BigInt`](num_bigint::BigInt), `Ratio<_>` and the floats.
pub trait Scalar: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {
    /// Converts a small integer literal.
    fn lit(v: i64) -> Self {
        Self::from_i64(v).expect("small literal fits every scalar type")
    }

    /// Converts a decimal literal of any length (optional leading `-`).
    ///
    /// Built by Horner over nine-digit chunks so it works for every scalar,
    /// including rationals whose `from_str_radix` insists on a `/`.
    fn dec(literal: &str) -> Self {
        let (negative, digits) = match literal.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, literal),
        };
        assert!(
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
            "malformed decimal literal {literal:?}"
        );
        let head = digits.len() % 9;
        let chunks = std::iter::once(&digits[..head])
            .filter(|c| !c.is_empty())
            .chain(digits.as_bytes()[head..].chunks(9).map(|c| std::str::from_utf8(c).expect("ascii")));
        let billion = Self::lit(1_000_000_000);
        let value = chunks.fold(Self::zero(), |acc, chunk| {
            let v: i64 = chunk.parse().expect("chunk of at most nine digits");
            acc * billion.clone() + Self::lit(v)
        });
        if negative {
            -value
        } else {
            value
        }
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialOrd + Num + Signed + FromPrimitive {}

/// Scalar with exact (or at least well-defined) division.
///
/// The group law and the birational maps divide; they are only meaningful
/// over a field, so integer types are deliberately excluded.
pub trait Field: Scalar {}

impl<T> Field for Ratio<T>
where
    T: Clone + num_integer::Integer + Signed,
    Ratio<T>: Scalar,
{
}

impl Field for f64 {}
impl Field for f32 {}
