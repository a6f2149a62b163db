use std::fmt;

/// Parity of a generator in the superalgebra grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// A named basis symbol. Index conventions:
///
/// * `M(i, j)` rotation generators are stored with `i < j`;
/// * `P(n, i)`, `X(n, i)`, `Xbar(n, i)`, `J(n, i)` carry a level `n` and a
///   spatial index `1 <= i <= d`;
/// * `Aux(k)` is a formal central unknown used by the triviality solver.
///
/// The derived ordering doubles as the canonical total order used for table
/// orientation, report sorting and normal ordering of ideal words
/// (`P < X < Xbar < J`, then level, then spatial index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    D,
    H,
    C,
    M(u32, u32),
    P(u32, u32),
    Q,
    Qbar,
    Qstar,
    S,
    Sbar,
    Sstar,
    R,
    X(u32, u32),
    Xbar(u32, u32),
    J(u32, u32),
    CentralM,
    CentralTheta,
    Aux(u32),
}

impl Generator {
    pub fn parity(&self) -> Parity {
        use Generator::*;
        match self {
            Q | Qbar | Qstar | S | Sbar | Sstar | X(..) | Xbar(..) => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    /// Central generators bracket to zero with everything.
    pub fn is_central(&self) -> bool {
        matches!(
            self,
            Generator::CentralM | Generator::CentralTheta | Generator::Aux(_)
        )
    }

    /// True for members of the (centrally extended) ideal span.
    pub fn is_ideal(&self) -> bool {
        matches!(
            self,
            Generator::P(..) | Generator::X(..) | Generator::Xbar(..) | Generator::J(..)
        )
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Generator::*;
        match self {
            D => write!(f, "D"),
            H => write!(f, "H"),
            C => write!(f, "C"),
            M(i, j) => write!(f, "M({i},{j})"),
            P(n, i) => write!(f, "P({n},{i})"),
            Q => write!(f, "Q"),
            Qbar => write!(f, "Qbar"),
            Qstar => write!(f, "Qstar"),
            S => write!(f, "S"),
            Sbar => write!(f, "Sbar"),
            Sstar => write!(f, "Sstar"),
            R => write!(f, "R"),
            X(n, i) => write!(f, "X({n},{i})"),
            Xbar(n, i) => write!(f, "Xbar({n},{i})"),
            J(n, i) => write!(f, "J({n},{i})"),
            CentralM => write!(f, "CentralM"),
            CentralTheta => write!(f, "CentralTheta"),
            Aux(k) => write!(f, "u{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_assignment() {
        assert!(Generator::Q.is_odd());
        assert!(Generator::X(0, 1).is_odd());
        assert!(Generator::Xbar(2, 1).is_odd());
        assert!(!Generator::J(0, 1).is_odd());
        assert!(!Generator::R.is_odd());
        assert!(!Generator::CentralM.is_odd());
    }

    #[test]
    fn ideal_letter_order() {
        // Normal ordering relies on P < X < Xbar < J, then level, then index.
        assert!(Generator::P(5, 3) < Generator::X(0, 1));
        assert!(Generator::X(1, 2) < Generator::Xbar(0, 1));
        assert!(Generator::Xbar(3, 1) < Generator::J(0, 1));
        assert!(Generator::P(0, 2) < Generator::P(1, 1));
    }
}
