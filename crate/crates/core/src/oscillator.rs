//! Associative Weyl-Clifford envelope of the centrally extended ideal.
//!
//! Products of ideal generators are rewritten into a unique normal-ordered
//! canonical form; every (anti)commutator of two letters is a scalar multiple
//! of the central parameter, so rewriting terminates and coefficients stay in
//! the Laurent ring of that single parameter.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{CentralKind, Family};
use crate::builders::epsilon;
use crate::coeff::{coeff, CoefficientKind};
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::Rat;

/// A finite Laurent polynomial `sum c_k lambda^{k/2}` in the central
/// parameter. Exponents are stored doubled so the square roots appearing in
/// the oscillator basis maps stay exact; every verified identity ends up with
/// even keys, i.e. integral powers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentScalar {
    pub fn zero() -> Self {
        LaurentScalar::default()
    }

    pub fn one() -> Self {
        LaurentScalar::rat(Rat::from_integer(1))
    }

    pub fn rat(c: Rat) -> Self {
        let mut s = LaurentScalar::default();
        s.add_term(0, c);
        s
    }

    pub fn int(c: i64) -> Self {
        LaurentScalar::rat(Rat::from_integer(c))
    }

    /// `c * lambda^k` for integer `k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        let mut s = LaurentScalar::default();
        s.add_term(2 * k, c);
        s
    }

    /// `c * lambda^{k/2}`; `twice_k` is the doubled exponent.
    pub fn half_monomial(c: Rat, twice_k: i64) -> Self {
        let mut s = LaurentScalar::default();
        s.add_term(twice_k, c);
        s
    }

    pub fn lambda() -> Self {
        LaurentScalar::monomial(Rat::from_integer(1), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, twice_exp: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(twice_exp).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&twice_exp);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    /// True when every exponent is integral (no leftover square roots).
    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    pub fn scaled(&self, c: Rat) -> Self {
        if c.is_zero() {
            return LaurentScalar::zero();
        }
        LaurentScalar {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }
}

impl Add for LaurentScalar {
    type Output = LaurentScalar;
    fn add(mut self, rhs: LaurentScalar) -> LaurentScalar {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl Sub for LaurentScalar {
    type Output = LaurentScalar;
    fn sub(mut self, rhs: LaurentScalar) -> LaurentScalar {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        self.scaled(Rat::from_integer(-1))
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                2 => write!(f, "{c}*L")?,
                k if k % 2 == 0 => write!(f, "{c}*L^{}", k / 2)?,
                k => write!(f, "{c}*L^({k}/2)")?,
            }
        }
        Ok(())
    }
}

/// A normal-ordered product of ideal letters.
pub type Word = Vec<Generator>;

fn word_parity_odd(w: &[Generator]) -> bool {
    w.iter().filter(|g| g.is_odd()).count() % 2 == 1
}

/// The centrally extended ideal of one algebra family, viewed as an
/// associative algebra. Which letter species exist depends on the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealAlgebra {
    pub family: Family,
    pub d: u32,
    pub ell: HalfInt,
    pub kind: CentralKind,
}

impl IdealAlgebra {
    pub fn new(family: Family, d: u32, ell: HalfInt, kind: CentralKind) -> Result<Self> {
        match kind {
            CentralKind::None => {
                return Err(Error::IllegalSpec(
                    "oscillator algebra requires a central extension".into(),
                ))
            }
            CentralKind::Mass => {
                if ell.is_integer() {
                    return Err(Error::IllegalSpec("mass extension requires 2l odd".into()));
                }
            }
            CentralKind::Exotic => {
                if d != 2 || !ell.is_integer() {
                    return Err(Error::IllegalSpec(
                        "exotic extension requires d = 2 and 2l even".into(),
                    ));
                }
            }
        }
        Ok(IdealAlgebra {
            family,
            d,
            ell,
            kind,
        })
    }

    fn letter_ok(&self, g: &Generator) -> bool {
        use Generator::*;
        let tl = self.ell.twice();
        let (n, i, max) = match (self.family, g) {
            (_, P(n, i)) => (*n as i64, *i, tl),
            (Family::StandardSuper, X(n, i) | Xbar(n, i)) => (*n as i64, *i, tl - 1),
            (Family::StandardSuper, J(n, i)) => (*n as i64, *i, tl - 2),
            (Family::ExoticSuper | Family::N1Super, X(n, i)) => (*n as i64, *i, tl - 1),
            _ => return false,
        };
        n <= max && i >= 1 && i <= self.d
    }

    fn check_letters(&self, e: &OscExpr) -> Result<()> {
        for w in e.terms.keys() {
            for g in w {
                if !self.letter_ok(g) {
                    return Err(Error::MixedAlgebras);
                }
            }
        }
        Ok(())
    }

    /// The scalar `c` with graded bracket `[a, b] = c * lambda`, from the
    /// central-extension tables of the source family.
    pub fn central_coeff(&self, a: &Generator, b: &Generator) -> Rat {
        use Generator::*;
        let tl = self.ell.twice();
        let c = match (a, b) {
            (P(m, i), P(n, j)) if *m as i64 + *n as i64 == tl => match self.kind {
                CentralKind::Mass if i == j => {
                    coeff(CoefficientKind::I, self.ell, *m as i64).unwrap()
                }
                CentralKind::Exotic => {
                    epsilon(*i, *j) * coeff(CoefficientKind::ICheck, self.ell, *m as i64).unwrap()
                }
                _ => 0,
            },
            // Anticommutators are symmetric; both orientations carry the
            // coefficient indexed by the X level.
            (X(m, i), Xbar(n, j)) | (Xbar(n, j), X(m, i))
                if self.family == Family::StandardSuper && *m as i64 + *n as i64 == tl - 1 =>
            {
                match self.kind {
                    CentralKind::Mass if i == j => {
                        coeff(CoefficientKind::Alpha, self.ell, *m as i64).unwrap()
                    }
                    CentralKind::Exotic => {
                        epsilon(*i, *j)
                            * coeff(CoefficientKind::AlphaCheck, self.ell, *m as i64).unwrap()
                    }
                    _ => 0,
                }
            }
            (X(m, i), X(n, j))
                if matches!(self.family, Family::ExoticSuper | Family::N1Super)
                    && *m as i64 + *n as i64 == tl - 1 =>
            {
                match self.kind {
                    CentralKind::Mass if i == j => {
                        coeff(CoefficientKind::Alpha, self.ell, *m as i64).unwrap()
                    }
                    CentralKind::Exotic => {
                        epsilon(*i, *j)
                            * coeff(CoefficientKind::AlphaCheck, self.ell, *m as i64).unwrap()
                    }
                    _ => 0,
                }
            }
            (J(m, i), J(n, j))
                if self.family == Family::StandardSuper && *m as i64 + *n as i64 == tl - 2 =>
            {
                match self.kind {
                    CentralKind::Mass if i == j => {
                        coeff(CoefficientKind::Beta, self.ell, *m as i64).unwrap()
                    }
                    CentralKind::Exotic => {
                        epsilon(*i, *j)
                            * coeff(CoefficientKind::BetaCheck, self.ell, *m as i64).unwrap()
                    }
                    _ => 0,
                }
            }
            _ => 0,
        };
        Rat::from_integer(c)
    }

    fn normal_order_into(
        &self,
        word: Word,
        scalar: LaurentScalar,
        out: &mut BTreeMap<Word, LaurentScalar>,
    ) {
        let mut stack = vec![(word, scalar)];
        while let Some((w, s)) = stack.pop() {
            if s.is_zero() {
                continue;
            }
            let bad = w
                .windows(2)
                .position(|p| p[0] > p[1] || (p[0] == p[1] && p[0].is_odd()));
            let Some(pos) = bad else {
                let entry = out.entry(w).or_insert_with(LaurentScalar::zero);
                let sum = std::mem::take(entry) + s;
                *entry = sum;
                continue;
            };
            let (a, b) = (w[pos], w[pos + 1]);
            let mut shorter = w.clone();
            shorter.drain(pos..pos + 2);
            if a == b {
                // Eager fermionic square: f f -> (1/2){f,f}.
                let c = self.central_coeff(&a, &b);
                let half = &s * &LaurentScalar::monomial(c / Rat::from_integer(2), 1);
                stack.push((shorter, half));
            } else {
                // a b = (-1)^{|a||b|} b a + [a,b]
                let sign = if a.is_odd() && b.is_odd() { -1 } else { 1 };
                let mut swapped = w;
                swapped.swap(pos, pos + 1);
                stack.push((swapped, s.scaled(Rat::from_integer(sign))));
                let c = self.central_coeff(&a, &b);
                if !c.is_zero() {
                    stack.push((shorter, &s * &LaurentScalar::monomial(c, 1)));
                }
            }
        }
    }

    /// Associative product with normal ordering.
    pub fn multiply(&self, lhs: &OscExpr, rhs: &OscExpr) -> Result<OscExpr> {
        self.check_letters(lhs)?;
        self.check_letters(rhs)?;
        let mut out = BTreeMap::new();
        for (w1, s1) in &lhs.terms {
            for (w2, s2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                self.normal_order_into(w, s1 * s2, &mut out);
            }
        }
        out.retain(|_, s| !s.is_zero());
        Ok(OscExpr { terms: out })
    }

    /// `A B - (-1)^{|A||B|} B A`, requiring both operands to have definite
    /// parity.
    pub fn graded_commutator(&self, lhs: &OscExpr, rhs: &OscExpr) -> Result<OscExpr> {
        let pa = lhs.parity_odd().ok_or(Error::IndefiniteParity)?;
        let pb = rhs.parity_odd().ok_or(Error::IndefiniteParity)?;
        let sign = if pa && pb { -1 } else { 1 };
        let ab = self.multiply(lhs, rhs)?;
        let ba = self.multiply(rhs, lhs)?;
        Ok(ab - ba.scaled(Rat::from_integer(sign)))
    }
}

/// A canonical normal-ordered noncommutative polynomial over the extended
/// ideal; two expressions are equal iff their maps are equal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OscExpr {
    terms: BTreeMap<Word, LaurentScalar>,
}

impl OscExpr {
    pub fn zero() -> Self {
        OscExpr::default()
    }

    pub fn scalar(s: LaurentScalar) -> Self {
        let mut e = OscExpr::default();
        e.add_word(Vec::new(), s);
        e
    }

    pub fn one() -> Self {
        OscExpr::scalar(LaurentScalar::one())
    }

    pub fn letter(g: Generator) -> Self {
        let mut e = OscExpr::default();
        e.add_word(vec![g], LaurentScalar::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn add_word(&mut self, w: Word, s: LaurentScalar) {
        if s.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&w) {
            Some(prev) => prev + s,
            None => s,
        };
        if !sum.is_zero() {
            self.terms.insert(w, sum);
        }
    }

    fn normalize(mut self) -> Self {
        self.terms.retain(|_, s| !s.is_zero());
        self
    }

    pub fn scaled(&self, c: Rat) -> Self {
        if c.is_zero() {
            return OscExpr::zero();
        }
        OscExpr {
            terms: self
                .terms
                .iter()
                .map(|(w, s)| (w.clone(), s.scaled(c)))
                .collect(),
        }
    }

    pub fn scaled_laurent(&self, c: &LaurentScalar) -> Self {
        let mut out = OscExpr::zero();
        for (w, s) in &self.terms {
            out.add_word(w.clone(), s * c);
        }
        out.normalize()
    }

    /// `Some(parity)` when all words share one parity; zero counts as even.
    pub fn parity_odd(&self) -> Option<bool> {
        let mut it = self.terms.keys().map(|w| word_parity_odd(w));
        let Some(first) = it.next() else {
            return Some(false);
        };
        if it.all(|p| p == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Largest word length present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    /// True when every coefficient has integral lambda-exponents.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|s| s.is_integral())
    }
}

impl Add for OscExpr {
    type Output = OscExpr;
    fn add(mut self, rhs: OscExpr) -> OscExpr {
        for (w, s) in rhs.terms {
            self.add_word(w, s);
        }
        self.normalize()
    }
}

impl Sub for OscExpr {
    type Output = OscExpr;
    fn sub(mut self, rhs: OscExpr) -> OscExpr {
        for (w, s) in rhs.terms {
            self.add_word(w, -s);
        }
        self.normalize()
    }
}

impl Neg for OscExpr {
    type Output = OscExpr;
    fn neg(self) -> OscExpr {
        self.scaled(Rat::from_integer(-1))
    }
}

impl fmt::Display for OscExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, s) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({s})")?;
            for g in w {
                write!(f, " {g}")?;
            }
        }
        Ok(())
    }
}
