//! Dyadic rationals with denominator dividing 2.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact value `halves / 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Half(i64);

impl Half {
    pub const ZERO: Half = Half(0);
    pub const ONE: Half = Half(2);

    pub const fn from_halves(halves: i64) -> Half {
        Half(halves)
    }

    pub const fn from_int(value: i64) -> Half {
        Half(2 * value)
    }

    pub const fn halves(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }

    pub fn signum(self) -> i64 {
        self.0.signum()
    }
}

impl From<i64> for Half {
    fn from(value: i64) -> Self {
        Half::from_int(value)
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl AddAssign for Half {
    fn add_assign(&mut self, rhs: Half) {
        self.0 += rhs.0;
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl Mul<i64> for Half {
    type Output = Half;
    fn mul(self, rhs: i64) -> Half {
        Half(self.0 * rhs)
    }
}

impl Sum for Half {
    fn sum<I: Iterator<Item = Half>>(iter: I) -> Half {
        iter.fold(Half::ZERO, Add::add)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Half {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || Error::BadToken(s.to_string());
        match s.split_once('/') {
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(bad());
                }
                let num: i64 = num.trim().parse().map_err(|_| bad())?;
                Ok(Half(num))
            }
            None => s.parse::<i64>().map(Half::from_int).map_err(|_| bad()),
        }
    }
}

// Integers serialize as JSON numbers, odd halves as the string "p/2".
impl Serialize for Half {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&format!("{}/2", self.0)),
        }
    }
}

impl<'de> Deserialize<'de> for Half {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct HalfVisitor;

        impl Visitor<'_> for HalfVisitor {
            type Value = Half;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string \"p/2\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Half, E> {
                Ok(Half::from_int(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Half, E> {
                i64::try_from(v)
                    .map(Half::from_int)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Half, E> {
                let h: Half = v.parse().map_err(E::custom)?;
                if h.is_integer() && v.contains('/') {
                    return Err(E::custom("half-integer string must have an odd numerator"));
                }
                Ok(h)
            }
        }

        deserializer.deserialize_any(HalfVisitor)
    }
}
