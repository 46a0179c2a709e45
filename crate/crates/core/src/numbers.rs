//! Small exact-integer helpers.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of degree-`d` monomials in `n` variables, C(n+d-1, d).
pub fn monomial_count(n: usize, d: usize) -> BigUint {
    if n == 0 {
        return if d == 0 { BigUint::one() } else { BigUint::from(0u32) };
    }
    binomial(n + d - 1, d)
}

/// Serde adapter writing big integers as JSON numbers when they fit in a
/// `u64` and as decimal strings otherwise. Both forms are accepted on input.
pub mod biguint_json {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Deserialize, Serialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Str(String),
    }

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(x) => s.serialize_u64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(BigUint::from(x)),
            Repr::Str(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(binomial(7, 3), BigUint::from(35u32));
        assert_eq!(binomial(3, 5), BigUint::from(0u32));
        assert_eq!(monomial_count(3, 2), BigUint::from(6u32));
        assert_eq!(monomial_count(1, 9), BigUint::from(1u32));
    }
}
