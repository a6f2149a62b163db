use std::fmt;

use crate::Rat;

/// A half-integer stored as its double, so that index arithmetic stays integral.
///
/// Used both for the spin parameter (where `twice >= 1`) and for weights
/// under `ad D` (where any integer double is allowed).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn as_rat(self) -> Rat {
        Rat::new(self.twice, 2)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_query() {
        assert!(HalfInt::from_twice(2).is_integer());
        assert!(!HalfInt::from_twice(1).is_integer());
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_int(2).to_string(), "2");
    }

    #[test]
    fn rational_value() {
        assert_eq!(HalfInt::from_twice(3).as_rat(), Rat::new(3, 2));
    }
}
