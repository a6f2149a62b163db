//! Structure-constant coefficient functions for the central extensions.
//!
//! The unchecked kinds exist for half-integer spin (mass extension), the
//! checked kinds for integer spin (exotic extension). All values are signed
//! products of two factorials.

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    /// `I_m = (-1)^{m+l+1/2} (2l-m)! m!`, for `0 <= m <= 2l`, `2l` odd.
    I,
    /// `Icheck_m = (-1)^m (2l-m)! m!`, for `0 <= m <= 2l`, `2l` even.
    ICheck,
    /// `alpha_m = (-1)^{m+l-1/2} (2l-1-m)! m!`, for `0 <= m <= 2l-1`, `2l` odd.
    Alpha,
    /// `alphacheck_m = (-1)^{m+1} (2l-1-m)! m!`, for `0 <= m <= 2l-1`, `2l` even.
    AlphaCheck,
    /// `beta_m = (-1)^{m+l+1/2} (2l-2-m)! m!`, for `0 <= m <= 2l-2`, `2l` odd.
    Beta,
    /// `betacheck_m = (-1)^m m! (2l-2-m)!`, for `0 <= m <= 2l-2`, `2l` even.
    BetaCheck,
}

impl CoefficientKind {
    fn requires_integer_spin(self) -> bool {
        matches!(
            self,
            CoefficientKind::ICheck | CoefficientKind::AlphaCheck | CoefficientKind::BetaCheck
        )
    }

    /// Inclusive upper bound of the legal `m` range, in terms of `2l`.
    fn max_index(self, twice_ell: i64) -> i64 {
        match self {
            CoefficientKind::I | CoefficientKind::ICheck => twice_ell,
            CoefficientKind::Alpha | CoefficientKind::AlphaCheck => twice_ell - 1,
            CoefficientKind::Beta | CoefficientKind::BetaCheck => twice_ell - 2,
        }
    }
}

fn factorial(n: i64) -> i64 {
    (1..=n).product()
}

fn sign(exponent: i64) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Evaluates a coefficient function at index `m`. The result is always an
/// integer.
pub fn coeff(kind: CoefficientKind, ell: HalfInt, m: i64) -> Result<i64> {
    let tl = ell.twice();
    if kind.requires_integer_spin() != ell.is_integer() {
        return Err(Error::CoeffDomain(format!(
            "{kind:?} undefined for 2l = {tl}"
        )));
    }
    let max = kind.max_index(tl);
    if m < 0 || m > max {
        return Err(Error::CoeffDomain(format!(
            "index m = {m} outside 0..={max} for {kind:?} at 2l = {tl}"
        )));
    }
    Ok(match kind {
        // m + l + 1/2 = m + (2l+1)/2, an integer for 2l odd.
        CoefficientKind::I => sign(m + (tl + 1) / 2) * factorial(tl - m) * factorial(m),
        CoefficientKind::ICheck => sign(m) * factorial(tl - m) * factorial(m),
        CoefficientKind::Alpha => sign(m + (tl - 1) / 2) * factorial(tl - 1 - m) * factorial(m),
        CoefficientKind::AlphaCheck => sign(m + 1) * factorial(tl - 1 - m) * factorial(m),
        CoefficientKind::Beta => sign(m + (tl + 1) / 2) * factorial(tl - 2 - m) * factorial(m),
        CoefficientKind::BetaCheck => sign(m) * factorial(m) * factorial(tl - 2 - m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoefficientKind::*;

    fn hi(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    /// Brute-force oracle: evaluate the printed formula literally, with the
    /// sign exponent handled as a doubled integer to accommodate `l +- 1/2`.
    fn oracle(kind: CoefficientKind, tl: i64, m: i64) -> i64 {
        let (twice_exp, a) = match kind {
            I => (2 * m + tl + 1, tl - m),
            ICheck => (2 * m, tl - m),
            Alpha => (2 * m + tl - 1, tl - 1 - m),
            AlphaCheck => (2 * (m + 1), tl - 1 - m),
            Beta => (2 * m + tl + 1, tl - 2 - m),
            BetaCheck => (2 * m, tl - 2 - m),
        };
        assert_eq!(twice_exp % 2, 0, "sign exponent must be integral");
        sign(twice_exp / 2) * factorial(a) * factorial(m)
    }

    #[test]
    fn matches_brute_force_oracle() {
        for tl in 1..=6 {
            for kind in [I, ICheck, Alpha, AlphaCheck, Beta, BetaCheck] {
                if kind.requires_integer_spin() != (tl % 2 == 0) {
                    continue;
                }
                for m in 0..=kind.max_index(tl) {
                    assert_eq!(
                        coeff(kind, hi(tl), m).unwrap(),
                        oracle(kind, tl, m),
                        "{kind:?} at 2l={tl}, m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn frozen_values() {
        // Oracle-computed by hand: I_1 at l=1/2 is (-1)^2 * 0! * 1! = 1.
        assert_eq!(coeff(I, hi(1), 1).unwrap(), 1);
        assert_eq!(coeff(I, hi(1), 0).unwrap(), -1);
        // alphacheck_0 at l=1 is (-1)^1 * 1! * 0! = -1.
        assert_eq!(coeff(AlphaCheck, hi(2), 0).unwrap(), -1);
        // beta_0 at l=3/2 is (-1)^2 * 1! * 0! = +1.
        assert_eq!(coeff(Beta, hi(3), 0).unwrap(), 1);
        // Icheck_0 at l=1 is 2! * 0! = 2.
        assert_eq!(coeff(ICheck, hi(2), 0).unwrap(), 2);
        // alpha_0 at l=1/2 is (-1)^0 * 0! * 0! = +1.
        assert_eq!(coeff(Alpha, hi(1), 0).unwrap(), 1);
    }

    #[test]
    fn reflection_identities() {
        // I_{2l-m} = -I_m, Icheck_{2l-m} = +Icheck_m, and the analogues for
        // the other kinds, exactly what graded antisymmetry requires.
        for tl in (1..=7).step_by(2) {
            for m in 0..=tl {
                assert_eq!(
                    coeff(I, hi(tl), tl - m).unwrap(),
                    -coeff(I, hi(tl), m).unwrap()
                );
            }
            for m in 0..=tl - 1 {
                assert_eq!(
                    coeff(Alpha, hi(tl), tl - 1 - m).unwrap(),
                    coeff(Alpha, hi(tl), m).unwrap()
                );
            }
            for m in 0..=tl - 2 {
                assert_eq!(
                    coeff(Beta, hi(tl), tl - 2 - m).unwrap(),
                    -coeff(Beta, hi(tl), m).unwrap()
                );
            }
        }
        for tl in (2..=8).step_by(2) {
            for m in 0..=tl {
                assert_eq!(
                    coeff(ICheck, hi(tl), tl - m).unwrap(),
                    coeff(ICheck, hi(tl), m).unwrap()
                );
            }
            for m in 0..=tl - 1 {
                assert_eq!(
                    coeff(AlphaCheck, hi(tl), tl - 1 - m).unwrap(),
                    -coeff(AlphaCheck, hi(tl), m).unwrap()
                );
            }
            for m in 0..=tl - 2 {
                assert_eq!(
                    coeff(BetaCheck, hi(tl), tl - 2 - m).unwrap(),
                    coeff(BetaCheck, hi(tl), m).unwrap()
                );
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(coeff(I, hi(2), 0).is_err());
        assert!(coeff(ICheck, hi(1), 0).is_err());
        assert!(coeff(I, hi(1), 2).is_err());
        assert!(coeff(Beta, hi(3), -1).is_err());
    }
}
