//! Integer square roots and perfect-square detection over exact integers and
//! rationals.

use num_integer::{Integer as _, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::{Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("square root of negative integer {0}")]
    NegativeSquareRoot(Integer),
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

/// Floor square root of a nonnegative integer.
pub fn isqrt(n: &Integer) -> Result<Integer, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeSquareRoot(n.clone()));
    }
    Ok(n.sqrt())
}

/// Returns the nonnegative square root of `n` when `n` is a perfect square.
///
/// Generic over the integer type so the search loop can run it on `i128`
/// without allocation; `BigInt` takes the same path.
pub fn perfect_square_root<T>(n: &T) -> Option<T>
where
    T: Roots + Signed + Clone + FromPrimitive + ToPrimitive,
{
    if n.is_negative() {
        return None;
    }
    // Squares mod 16 are {0, 1, 4, 9}; this only ever rejects.
    let sixteen = T::from_u8(16).expect("16 fits");
    let low = n.mod_floor(&sixteen).to_u8().expect("residue fits");
    if !matches!(low, 0 | 1 | 4 | 9) {
        return None;
    }
    let root = n.sqrt();
    if &(root.clone() * root.clone()) == n {
        Some(root)
    } else {
        None
    }
}

/// Nonnegative rational square root, present iff numerator and denominator
/// are both perfect squares.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    let num = perfect_square_root(q.numer())?;
    let den = perfect_square_root(q.denom())?;
    Some(Rational::new(num, den))
}

/// True when `q` is the square of some integer.
pub fn is_integer_square(q: &Rational) -> bool {
    q.is_integer() && perfect_square_root(q.numer()).is_some()
}

/// Parses `"n"` or `"n/d"` (optional sign, decimal digits).
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let err = || ArithError::Parse(s.to_owned());
    let trimmed = s.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let num: Integer = num.parse().map_err(|_| err())?;
    let den: Integer = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(Integer::from(1), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the absolute values (0 for an empty or all-zero input).
pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Integer>) -> Integer {
    values
        .into_iter()
        .fold(Integer::zero(), |acc, v| acc.gcd(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(int(n), int(d))
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(&int(0)).unwrap(), int(0));
        assert_eq!(isqrt(&int(2)).unwrap(), int(1));
        // 6780^2 = 45968400 is -A*B at (14, -27, -25).
        assert_eq!(int(6780) * int(6780), int(45968400));
        assert_eq!(isqrt(&int(45968400)).unwrap(), int(6780));
        assert!(matches!(isqrt(&int(-1)), Err(ArithError::NegativeSquareRoot(_))));
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square_root(&int(45968400)), Some(int(6780)));
        // 77^2 = 5929 < 6068 < 6084 = 78^2
        assert_eq!(perfect_square_root(&int(6068)), None);
        assert_eq!(perfect_square_root(&int(-4)), None);
        assert_eq!(perfect_square_root(&0i128), Some(0));
        assert_eq!(perfect_square_root(&45968400i128), Some(6780));
    }

    #[test]
    fn perfect_square_beyond_u64() {
        let r: Integer = "31685265497576201600123".parse().unwrap();
        let sq = &r * &r;
        assert_eq!(perfect_square_root(&sq), Some(r.clone()));
        assert_eq!(perfect_square_root(&(&sq + 1)), None);
        assert_eq!(perfect_square_root(&(&sq - 1)), None);
    }

    #[test]
    fn rational_square_root_examples() {
        assert_eq!(rational_square_root(&rat(4, 9)), Some(rat(2, 3)));
        assert_eq!(rational_square_root(&rat(2, 1)), None);
        assert_eq!(rational_square_root(&rat(-4, 9)), None);
        assert_eq!(
            rational_square_root(&rat(45968400, 1)),
            Some(rat(6780, 1))
        );
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("113/5").unwrap(), rat(113, 5));
        assert_eq!(parse_rational("-27").unwrap(), rat(-27, 1));
        assert_eq!(parse_rational("6/-4").unwrap(), rat(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rat(-6, 4).to_string(), "-3/2");
        assert_eq!(rat(10, 5).to_string(), "2");
    }

    #[test]
    fn reduced_storage() {
        let q = rat(-10, -4);
        assert_eq!(q.numer(), &int(5));
        assert_eq!(q.denom(), &int(2));
        assert_eq!(rat(2, 4), rat(1, 2));
    }

    fn naive_isqrt(n: u64) -> u64 {
        let mut r = 0;
        while (r + 1) * (r + 1) <= n {
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn isqrt_matches_increment_oracle(n in 0u64..1_000_000) {
            let r = isqrt(&Integer::from(n)).unwrap();
            prop_assert_eq!(r, Integer::from(naive_isqrt(n)));
        }

        #[test]
        fn isqrt_floor_property(n in any::<u128>()) {
            let n = Integer::from(n);
            let r = isqrt(&n).unwrap();
            prop_assert!(&r * &r <= n);
            let r1 = &r + 1;
            prop_assert!(&r1 * &r1 > n);
        }

        #[test]
        fn square_roots_recovered(r in 0u64..u64::MAX) {
            let r = Integer::from(r);
            let sq = &r * &r;
            prop_assert_eq!(perfect_square_root(&sq), Some(r.clone()));
            if r >= Integer::from(1) {
                prop_assert_eq!(perfect_square_root(&(sq + 1)), None);
            }
        }

        #[test]
        fn i128_and_bigint_agree(n in -1_000_000_000i128..1_000_000_000_000) {
            let big = perfect_square_root(&Integer::from(n));
            let small = perfect_square_root(&n).map(Integer::from);
            prop_assert_eq!(big, small);
        }

        #[test]
        fn addition_is_exact(a in -10_000i64..10_000, b in 1i64..10_000,
                             c in -10_000i64..10_000, d in 1i64..10_000) {
            let sum = rat(a, b) + rat(c, d);
            let scaled = sum * rat(b * d, 1);
            prop_assert!(scaled.is_integer());
            prop_assert_eq!(scaled.to_integer(), int(a * d + c * b));
        }
    }
}
