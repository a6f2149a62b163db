use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::generator::Generator;
use crate::Rat;

/// A finite linear combination of generators with exact rational coefficients.
/// Zero coefficients are never stored, so equality of maps is equality of
/// elements.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Generator, Rat>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn generator(g: Generator) -> Self {
        Element::term(g, Rat::from_integer(1))
    }

    pub fn term(g: Generator, coeff: Rat) -> Self {
        let mut e = Element::default();
        e.add_term(g, coeff);
        e
    }

    pub fn int_term(g: Generator, coeff: i64) -> Self {
        Element::term(g, Rat::from_integer(coeff))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: &Generator) -> Rat {
        self.terms.get(g).copied().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Rat)> {
        self.terms.iter()
    }

    pub fn generators(&self) -> impl Iterator<Item = &Generator> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, g: Generator, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(g).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn scaled(&self, c: Rat) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(g, v)| (*g, v * c)).collect(),
        }
    }

    /// Keeps only the terms whose generator fails the predicate's complement;
    /// returns the part of `self` supported outside `keep`.
    pub fn outside(&self, keep: impl Fn(&Generator) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(g, _)| !keep(g))
                .map(|(g, v)| (*g, *v))
                .collect(),
        }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        for (g, c) in rhs.terms {
            self.add_term(g, c);
        }
        self
    }
}

impl Add<&Element> for Element {
    type Output = Element;
    fn add(mut self, rhs: &Element) -> Element {
        for (g, c) in &rhs.terms {
            self.add_term(*g, *c);
        }
        self
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        for (g, c) in rhs.terms {
            self.add_term(g, -c);
        }
        self
    }
}

impl Sub<&Element> for Element {
    type Output = Element;
    fn sub(mut self, rhs: &Element) -> Element {
        for (g, c) in &rhs.terms {
            self.add_term(*g, -*c);
        }
        self
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scaled(Rat::from_integer(-1))
    }
}

impl Mul<Rat> for &Element {
    type Output = Element;
    fn mul(self, c: Rat) -> Element {
        self.scaled(c)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            if first {
                if *c == Rat::from_integer(1) {
                    write!(f, "{g}")?;
                } else if *c == Rat::from_integer(-1) {
                    write!(f, "-{g}")?;
                } else {
                    write!(f, "{c}*{g}")?;
                }
                first = false;
            } else if *c == Rat::from_integer(1) {
                write!(f, " + {g}")?;
            } else if *c == Rat::from_integer(-1) {
                write!(f, " - {g}")?;
            } else if c < &Rat::zero() {
                write!(f, " - {}*{g}", -c)?;
            } else {
                write!(f, " + {c}*{g}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn zero_is_empty_map() {
        let e = Element::int_term(H, 2) - Element::int_term(H, 2);
        assert!(e.is_zero());
        assert_eq!(e, Element::zero());
    }

    #[test]
    fn canonical_accumulation() {
        let mut e = Element::int_term(D, 1);
        e.add_term(H, Rat::new(1, 2));
        e.add_term(H, Rat::new(1, 2));
        assert_eq!(e.coeff(&H), Rat::from_integer(1));
        assert_eq!(e, Element::int_term(D, 1) + Element::int_term(H, 1));
    }

    #[test]
    fn display() {
        let e = Element::int_term(D, 1) - Element::int_term(H, 2);
        assert_eq!(e.to_string(), "D - 2*H");
    }
}
