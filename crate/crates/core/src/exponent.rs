//! Extended exponents in `[1, ∞]` with exact dual-pair algebra.
//!
//! Norm orders are represented symbolically: `1`, a finite value `> 1`, or
//! `∞`. Infinity never enters a floating-point power function; every
//! consumer branches on the variant instead. The dual of an exponent `p` is
//! the `q` with `1/p + 1/q = 1`, so `dual(1) = ∞`, `dual(∞) = 1`, and
//! `dual(2) = 2` hold without rounding.

use serde::de::{self, Deserializer, Visitor};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// A norm order in `[1, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    /// Exactly 1.
    One,
    /// A finite value strictly greater than 1.
    Finite(f64),
    /// Positive infinity.
    Infinity,
}

impl Exponent {
    /// Validating constructor. Accepts any finite value `>= 1` or
    /// `f64::INFINITY`; values below 1 and NaN are rejected.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 1.0 {
            return Err(Error::InvalidExponent(value));
        }
        if value == 1.0 {
            Ok(Exponent::One)
        } else if value.is_infinite() {
            Ok(Exponent::Infinity)
        } else {
            Ok(Exponent::Finite(value))
        }
    }

    /// The numeric value; `∞` maps to `f64::INFINITY`.
    pub fn value(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Finite(v) => v,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }

    /// The Hölder conjugate `q` with `1/p + 1/q = 1`.
    pub fn dual(self) -> Exponent {
        match self {
            Exponent::One => Exponent::Infinity,
            Exponent::Infinity => Exponent::One,
            // 2/(2-1) evaluates to exactly 2.0, so the self-dual point is
            // preserved without a special case.
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }

    /// The exponent scaled by a positive integer, e.g. `p -> k*p`.
    /// `k*∞ = ∞`; `k*1 = k`.
    pub fn times(self, k: u32) -> Exponent {
        assert!(k >= 1, "scale factor must be positive");
        match self {
            Exponent::Infinity => Exponent::Infinity,
            _ => {
                let v = self.value() * f64::from(k);
                if v == 1.0 {
                    Exponent::One
                } else {
                    Exponent::Finite(v)
                }
            }
        }
    }

    /// True when `1/q + 1/p = 1` within `tol` (the infinite/one pairing is
    /// checked symbolically).
    pub fn is_dual_pair(q: Exponent, p: Exponent, tol: f64) -> bool {
        match (q, p) {
            (Exponent::One, Exponent::Infinity) | (Exponent::Infinity, Exponent::One) => true,
            (Exponent::One, _) | (_, Exponent::One) => false,
            (Exponent::Infinity, _) | (_, Exponent::Infinity) => false,
            (Exponent::Finite(qv), Exponent::Finite(pv)) => {
                (1.0 / qv + 1.0 / pv - 1.0).abs() <= tol
            }
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::One => write!(f, "1"),
            Exponent::Finite(v) => write!(f, "{v}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

// JSON form: a number for finite orders, the string "inf" for infinity
// (JSON has no literal for infinite floats).
impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Infinity => serializer.serialize_str("inf"),
            other => serializer.serialize_f64(other.value()),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExponentVisitor;

        impl Visitor<'_> for ExponentVisitor {
            type Value = Exponent;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number >= 1 or the string \"inf\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Exponent, E> {
                Exponent::new(v).map_err(|e| E::custom(e.to_string()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Exponent, E> {
                self.visit_f64(v as f64)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Exponent, E> {
                self.visit_f64(v as f64)
            }

            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<Exponent, E> {
                match s {
                    "inf" | "infinity" | "Inf" | "Infinity" => Ok(Exponent::Infinity),
                    other => other
                        .parse::<f64>()
                        .map_err(|_| E::custom(format!("invalid exponent string {other:?}")))
                        .and_then(|v| self.visit_f64(v)),
                }
            }
        }

        deserializer.deserialize_any(ExponentVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_of_limit_pair() {
        assert_eq!(Exponent::One.dual(), Exponent::Infinity);
        assert_eq!(Exponent::Infinity.dual(), Exponent::One);
    }

    #[test]
    fn two_is_self_dual_exactly() {
        let two = Exponent::new(2.0).unwrap();
        assert_eq!(two.dual(), two);
        assert_eq!(two.dual().value(), 2.0);
    }

    #[test]
    fn dual_of_four_is_four_thirds() {
        let p = Exponent::new(4.0).unwrap();
        let q = p.dual();
        assert!((q.value() - 4.0 / 3.0).abs() < 1e-15);
        assert!(Exponent::is_dual_pair(q, p, 1e-12));
    }

    #[test]
    fn involution_is_exact_on_special_points() {
        for v in [1.0, 2.0, f64::INFINITY] {
            let e = Exponent::new(v).unwrap();
            assert_eq!(e.dual().dual(), e);
        }
    }

    #[test]
    fn rejects_orders_below_one() {
        assert!(Exponent::new(0.5).is_err());
        assert!(Exponent::new(f64::NAN).is_err());
        assert!(Exponent::new(-1.0).is_err());
    }

    #[test]
    fn times_scales_symbolically() {
        assert_eq!(Exponent::Infinity.times(3), Exponent::Infinity);
        assert_eq!(Exponent::One.times(1), Exponent::One);
        assert_eq!(Exponent::One.times(2), Exponent::Finite(2.0));
        assert_eq!(Exponent::Finite(1.5).times(2), Exponent::Finite(3.0));
    }

    #[test]
    fn serde_round_trip() {
        for e in [Exponent::One, Exponent::Finite(1.5), Exponent::Infinity] {
            let json = serde_json::to_string(&e).unwrap();
            let back: Exponent = serde_json::from_str(&json).unwrap();
            assert_eq!(back, e);
        }
        let from_str: Exponent = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(from_str, Exponent::Infinity);
        let from_int: Exponent = serde_json::from_str("2").unwrap();
        assert_eq!(from_int, Exponent::Finite(2.0));
    }
}
