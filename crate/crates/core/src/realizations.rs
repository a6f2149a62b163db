//! Realizations of the super families on their centrally extended ideals,
//! plus the boson/fermion basis change and the bose-fermi Hamiltonian.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{CentralKind, Family, Superalgebra};
use crate::builders::{build, epsilon, BuildSpec};
use crate::coeff::{coeff, CoefficientKind};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::oscillator::{IdealAlgebra, LaurentScalar, OscExpr};
use crate::Rat;

/// A map from abstract generators to normal-ordered quadratics over the
/// extended ideal; ideal generators map to themselves and the central
/// generator maps to `lambda * 1`.
#[derive(Debug, Clone)]
pub struct Realization {
    pub source: Superalgebra,
    pub target: IdealAlgebra,
    map: BTreeMap<Generator, OscExpr>,
}

impl Realization {
    pub fn image(&self, g: &Generator) -> Option<&OscExpr> {
        self.map.get(g)
    }

    pub fn apply(&self, e: &Element) -> Result<OscExpr> {
        let mut out = OscExpr::zero();
        for (g, c) in e.iter() {
            let img = self
                .map
                .get(g)
                .ok_or(Error::UnknownGenerator(*g))?
                .scaled(*c);
            out = out + img;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct RealizationViolation {
    pub left: Generator,
    pub right: Generator,
    pub residual: OscExpr,
}

/// Failures of the homomorphism property, canonically sorted.
#[derive(Debug, Clone, Default)]
pub struct RealizationReport {
    pub entries: Vec<RealizationViolation>,
}

impl RealizationReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for RealizationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.entries {
            writeln!(f, "[{}, {}] residual: {}", v.left, v.right, v.residual)?;
        }
        Ok(())
    }
}

fn prod(alg: &IdealAlgebra, a: Generator, b: Generator) -> Result<OscExpr> {
    alg.multiply(&OscExpr::letter(a), &OscExpr::letter(b))
}

/// `sum_i f(i) g(i)` over the spatial index.
fn dot(
    alg: &IdealAlgebra,
    d: u32,
    f: impl Fn(u32) -> Generator,
    g: impl Fn(u32) -> Generator,
) -> Result<OscExpr> {
    let mut out = OscExpr::zero();
    for i in 1..=d {
        out = out + prod(alg, f(i), g(i))?;
    }
    Ok(out)
}

/// `sum_{j,k} eps_jk f(j) g(k)` (d = 2 only).
fn eps_pair(
    alg: &IdealAlgebra,
    f: impl Fn(u32) -> Generator,
    g: impl Fn(u32) -> Generator,
) -> Result<OscExpr> {
    let mut out = OscExpr::zero();
    for j in 1..=2 {
        for k in 1..=2 {
            let e = epsilon(j, k);
            if e != 0 {
                out = out + prod(alg, f(j), g(k))?.scaled(Rat::from_integer(e));
            }
        }
    }
    Ok(out)
}

/// `c / (denom * lambda)`.
fn over_lambda(c: Rat, denom: i64) -> LaurentScalar {
    LaurentScalar::monomial(c / Rat::from_integer(denom), -1)
}

fn std_mass_map(d: u32, ell: HalfInt) -> Result<BTreeMap<Generator, OscExpr>> {
    use Generator::*;
    let alg = IdealAlgebra::new(Family::StandardSuper, d, ell, CentralKind::Mass)?;
    let tl = ell.twice();
    let i_ = |m: i64| coeff(CoefficientKind::I, ell, m).unwrap();
    let a_ = |m: i64| coeff(CoefficientKind::Alpha, ell, m).unwrap();
    let b_ = |m: i64| coeff(CoefficientKind::Beta, ell, m).unwrap();
    let g = |n: i64, i: u32, mk: fn(u32, u32) -> Generator| mk(n as u32, i);

    let mut map = BTreeMap::new();

    let mut h = OscExpr::zero();
    let mut dd = OscExpr::zero();
    let mut cc = OscExpr::zero();
    for m in 1..=tl {
        h = h + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m - 1, i, P))?
            .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * i_(m)));
        cc = cc
            + dot(&alg, d, |i| g(tl + 1 - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * i_(m)));
    }
    for m in 1..=tl - 1 {
        h = h + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m - 1, i, Xbar))?
            .scaled_laurent(&over_lambda(Rat::from_integer(m), a_(m)));
        cc = cc
            + dot(&alg, d, |i| g(tl - m, i, X), |i| g(m, i, Xbar))?
                .scaled_laurent(&over_lambda(Rat::from_integer(m), a_(m)));
    }
    for m in 1..=tl - 2 {
        h = h + dot(&alg, d, |i| g(tl - 2 - m, i, J), |i| g(m - 1, i, J))?
            .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * b_(m)));
        cc = cc
            + dot(&alg, d, |i| g(tl - 1 - m, i, J), |i| g(m, i, J))?
                .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * b_(m)));
    }
    for m in 0..=tl {
        dd = dd
            + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::new(2 * m - tl, 2), i_(m)));
    }
    for m in 0..=tl - 1 {
        dd = dd
            + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m, i, Xbar))?
                .scaled_laurent(&over_lambda(Rat::from_integer(2 * m + 1 - tl), a_(m)));
    }
    for m in 0..=tl - 2 {
        dd = dd
            + dot(&alg, d, |i| g(tl - 2 - m, i, J), |i| g(m, i, J))?
                .scaled_laurent(&over_lambda(Rat::new(2 * m + 2 - tl, 2), b_(m)));
    }
    map.insert(H, h);
    map.insert(D, dd);
    map.insert(C, cc);

    for i in 1..=d {
        for j in i + 1..=d {
            let mut e = OscExpr::zero();
            for m in 0..=tl {
                let t = prod(&alg, P((tl - m) as u32, i), P(m as u32, j))?
                    - prod(&alg, P((tl - m) as u32, j), P(m as u32, i))?;
                e = e + t.scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * i_(m)));
            }
            for m in 0..=tl - 1 {
                let t = prod(&alg, X((tl - 1 - m) as u32, i), Xbar(m as u32, j))?
                    + prod(&alg, Xbar(m as u32, i), X((tl - 1 - m) as u32, j))?;
                e = e + t.scaled_laurent(&over_lambda(Rat::from_integer(1), a_(m)));
            }
            for m in 0..=tl - 2 {
                let t = prod(&alg, J((tl - 2 - m) as u32, i), J(m as u32, j))?
                    - prod(&alg, J((tl - 2 - m) as u32, j), J(m as u32, i))?;
                e = e + t.scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * b_(m)));
            }
            map.insert(M(i, j), e);
        }
    }

    let mut r = OscExpr::scalar(LaurentScalar::rat(Rat::new(tl * d as i64, 2)));
    for m in 0..=tl - 1 {
        r = r + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m, i, Xbar))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-1), a_(m)));
    }
    map.insert(R, r);

    // Supercharges: (P +- c J) X with the level bookkeeping of the family's
    // display; the J term drops exactly when its coefficient vanishes.
    let charged = |p_level: i64,
                   j_level: i64,
                   j_coeff: i64,
                   odd: fn(u32, u32) -> Generator,
                   m: i64|
     -> Result<OscExpr> {
        let mut e = OscExpr::zero();
        for i in 1..=d {
            e = e + prod(&alg, P(p_level as u32, i), odd((m - 1) as u32, i))?;
            if j_coeff != 0 {
                e = e + prod(&alg, J(j_level as u32, i), odd((m - 1) as u32, i))?
                    .scaled(Rat::from_integer(j_coeff));
            }
        }
        Ok(e.scaled_laurent(&over_lambda(Rat::from_integer(-m), i_(m))))
    };
    let mut q = OscExpr::zero();
    let mut qbar = OscExpr::zero();
    let mut s = OscExpr::zero();
    let mut sbar = OscExpr::zero();
    for m in 1..=tl {
        q = q + charged(tl - m, tl - 1 - m, tl - m, X, m)?;
        qbar = qbar + charged(tl - m, tl - 1 - m, -(tl - m), Xbar, m)?;
        s = s + charged(tl + 1 - m, tl - m, -(m - 1), X, m)?;
        sbar = sbar + charged(tl + 1 - m, tl - m, m - 1, Xbar, m)?;
    }
    map.insert(Q, q);
    map.insert(Qbar, qbar);
    map.insert(S, s);
    map.insert(Sbar, sbar);

    Ok(map)
}

fn std_exotic_map(ell: HalfInt) -> Result<BTreeMap<Generator, OscExpr>> {
    use Generator::*;
    let d = 2;
    let alg = IdealAlgebra::new(Family::StandardSuper, d, ell, CentralKind::Exotic)?;
    let tl = ell.twice();
    let i_ = |m: i64| coeff(CoefficientKind::ICheck, ell, m).unwrap();
    let a_ = |m: i64| coeff(CoefficientKind::AlphaCheck, ell, m).unwrap();
    let b_ = |m: i64| coeff(CoefficientKind::BetaCheck, ell, m).unwrap();
    let g = |n: i64, i: u32, mk: fn(u32, u32) -> Generator| mk(n as u32, i);

    let mut map = BTreeMap::new();

    let mut h = OscExpr::zero();
    let mut dd = OscExpr::zero();
    let mut cc = OscExpr::zero();
    for m in 1..=tl {
        h = h + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m - 1, k, P))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * i_(m)));
        cc = cc
            + eps_pair(&alg, |j| g(tl + 1 - m, j, P), |k| g(m, k, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * i_(m)));
    }
    for m in 1..=tl - 1 {
        h = h + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m - 1, k, Xbar))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-m), a_(m)));
        cc = cc
            + eps_pair(&alg, |j| g(tl - m, j, X), |k| g(m, k, Xbar))?
                .scaled_laurent(&over_lambda(Rat::from_integer(-m), a_(m)));
    }
    for m in 1..=tl - 2 {
        h = h + eps_pair(&alg, |j| g(tl - 2 - m, j, J), |k| g(m - 1, k, J))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * b_(m)));
        cc = cc
            + eps_pair(&alg, |j| g(tl - 1 - m, j, J), |k| g(m, k, J))?
                .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * b_(m)));
    }
    for m in 0..=tl {
        dd = dd
            + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m, k, P))?
                .scaled_laurent(&over_lambda(Rat::new(tl - 2 * m, 2), i_(m)));
    }
    for m in 0..=tl - 1 {
        dd = dd
            + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m, k, Xbar))?
                .scaled_laurent(&over_lambda(Rat::from_integer(tl - 2 * m - 1), a_(m)));
    }
    for m in 0..=tl - 2 {
        dd = dd
            + eps_pair(&alg, |j| g(tl - 2 - m, j, J), |k| g(m, k, J))?
                .scaled_laurent(&over_lambda(Rat::new(tl - 2 * m - 2, 2), b_(m)));
    }
    map.insert(H, h);
    map.insert(D, dd);
    map.insert(C, cc);

    let mut m12 = OscExpr::zero();
    for m in 0..=tl {
        m12 = m12
            + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * i_(m)));
    }
    for m in 0..=tl - 1 {
        m12 = m12
            + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m, i, Xbar))?
                .scaled_laurent(&over_lambda(Rat::from_integer(1), a_(m)));
    }
    for m in 0..=tl - 2 {
        m12 = m12
            + dot(&alg, d, |i| g(tl - 2 - m, i, J), |i| g(m, i, J))?
                .scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * b_(m)));
    }
    map.insert(M(1, 2), m12);

    let mut r = OscExpr::scalar(LaurentScalar::int(tl));
    for m in 0..=tl - 1 {
        r = r + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m, k, Xbar))?
            .scaled_laurent(&over_lambda(Rat::from_integer(1), a_(m)));
    }
    map.insert(R, r);

    let charged = |p_level: i64,
                   j_level: i64,
                   j_coeff: i64,
                   odd: fn(u32, u32) -> Generator,
                   m: i64|
     -> Result<OscExpr> {
        let mut e = OscExpr::zero();
        for j in 1..=2 {
            for k in 1..=2 {
                let eps = epsilon(j, k);
                if eps == 0 {
                    continue;
                }
                e = e + prod(&alg, P(p_level as u32, j), odd((m - 1) as u32, k))?
                    .scaled(Rat::from_integer(eps));
                if j_coeff != 0 {
                    e = e + prod(&alg, J(j_level as u32, j), odd((m - 1) as u32, k))?
                        .scaled(Rat::from_integer(eps * j_coeff));
                }
            }
        }
        Ok(e.scaled_laurent(&over_lambda(Rat::from_integer(m), i_(m))))
    };
    let mut q = OscExpr::zero();
    let mut qbar = OscExpr::zero();
    let mut s = OscExpr::zero();
    let mut sbar = OscExpr::zero();
    for m in 1..=tl {
        q = q + charged(tl - m, tl - 1 - m, tl - m, X, m)?;
        qbar = qbar + charged(tl - m, tl - 1 - m, -(tl - m), Xbar, m)?;
        s = s + charged(tl + 1 - m, tl - m, -(m - 1), X, m)?;
        sbar = sbar + charged(tl + 1 - m, tl - m, m - 1, Xbar, m)?;
    }
    map.insert(Q, q);
    map.insert(Qbar, qbar);
    map.insert(S, s);
    map.insert(Sbar, sbar);

    Ok(map)
}

fn exotic_mass_map(ell: HalfInt) -> Result<BTreeMap<Generator, OscExpr>> {
    use Generator::*;
    let d = 2;
    let alg = IdealAlgebra::new(Family::ExoticSuper, d, ell, CentralKind::Mass)?;
    let tl = ell.twice();
    let i_ = |m: i64| coeff(CoefficientKind::I, ell, m).unwrap();
    let a_ = |m: i64| coeff(CoefficientKind::Alpha, ell, m).unwrap();
    let g = |n: i64, i: u32, mk: fn(u32, u32) -> Generator| mk(n as u32, i);

    let mut map = BTreeMap::new();

    let mut h = OscExpr::zero();
    let mut dd = OscExpr::zero();
    let mut cc = OscExpr::zero();
    for m in 1..=tl {
        h = h + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m - 1, i, P))?
            .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * i_(m)));
        cc = cc
            + dot(&alg, d, |i| g(tl + 1 - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * i_(m)));
    }
    for m in 1..=tl - 1 {
        h = h + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m - 1, i, X))?
            .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * a_(m)));
        cc = cc
            + dot(&alg, d, |i| g(tl - m, i, X), |i| g(m, i, X))?
                .scaled_laurent(&over_lambda(Rat::from_integer(m), 2 * a_(m)));
    }
    for m in 0..=tl {
        dd = dd
            + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::new(2 * m - tl, 2), i_(m)));
    }
    for m in 0..=tl - 1 {
        dd = dd
            + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m, i, X))?
                .scaled_laurent(&over_lambda(Rat::from_integer(2 * m + 1 - tl), 2 * a_(m)));
    }
    map.insert(H, h);
    map.insert(D, dd);
    map.insert(C, cc);

    let mut m12 = OscExpr::zero();
    for m in 0..=tl {
        m12 = m12
            + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m, k, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * i_(m)));
    }
    map.insert(M(1, 2), m12.clone());

    let mut r = m12.scaled(Rat::from_integer(-(tl - 1)));
    for m in 0..=tl - 1 {
        r = r + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m, k, X))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-(tl + 1)), 2 * a_(m)));
    }
    map.insert(R, r);

    let mut q = OscExpr::zero();
    let mut qstar = OscExpr::zero();
    let mut s = OscExpr::zero();
    let mut sstar = OscExpr::zero();
    for m in 1..=tl {
        let c = over_lambda(Rat::from_integer(-m), i_(m));
        q = q + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m - 1, i, X))?.scaled_laurent(&c);
        qstar = qstar + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m - 1, k, X))?.scaled_laurent(&c);
        s = s + dot(&alg, d, |i| g(tl + 1 - m, i, P), |i| g(m - 1, i, X))?.scaled_laurent(&c);
        sstar =
            sstar + eps_pair(&alg, |j| g(tl + 1 - m, j, P), |k| g(m - 1, k, X))?.scaled_laurent(&c);
    }
    map.insert(Q, q);
    map.insert(Qstar, qstar);
    map.insert(S, s);
    map.insert(Sstar, sstar);

    Ok(map)
}

fn exotic_exotic_map(ell: HalfInt) -> Result<BTreeMap<Generator, OscExpr>> {
    use Generator::*;
    let d = 2;
    let alg = IdealAlgebra::new(Family::ExoticSuper, d, ell, CentralKind::Exotic)?;
    let tl = ell.twice();
    let i_ = |m: i64| coeff(CoefficientKind::ICheck, ell, m).unwrap();
    let a_ = |m: i64| coeff(CoefficientKind::AlphaCheck, ell, m).unwrap();
    let g = |n: i64, i: u32, mk: fn(u32, u32) -> Generator| mk(n as u32, i);

    let mut map = BTreeMap::new();

    let mut h = OscExpr::zero();
    let mut dd = OscExpr::zero();
    let mut cc = OscExpr::zero();
    for m in 1..=tl {
        h = h + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m - 1, k, P))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * i_(m)));
        cc = cc
            + eps_pair(&alg, |j| g(tl + 1 - m, j, P), |k| g(m, k, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * i_(m)));
    }
    for m in 1..=tl - 1 {
        h = h + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m - 1, k, X))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * a_(m)));
        cc = cc
            + eps_pair(&alg, |j| g(tl - m, j, X), |k| g(m, k, X))?
                .scaled_laurent(&over_lambda(Rat::from_integer(-m), 2 * a_(m)));
    }
    for m in 0..=tl {
        dd = dd
            + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m, k, P))?
                .scaled_laurent(&over_lambda(Rat::new(tl - 2 * m, 2), i_(m)));
    }
    for m in 0..=tl - 1 {
        dd = dd
            + eps_pair(&alg, |j| g(tl - 1 - m, j, X), |k| g(m, k, X))?
                .scaled_laurent(&over_lambda(Rat::from_integer(tl - 2 * m - 1), 2 * a_(m)));
    }
    map.insert(H, h);
    map.insert(D, dd);
    map.insert(C, cc);

    let mut m12 = OscExpr::zero();
    for m in 0..=tl {
        m12 = m12
            + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m, i, P))?
                .scaled_laurent(&over_lambda(Rat::from_integer(1), 2 * i_(m)));
    }
    map.insert(M(1, 2), m12.clone());

    let mut r = m12.scaled(Rat::from_integer(-(tl - 1)));
    for m in 0..=tl - 1 {
        r = r + dot(&alg, d, |i| g(tl - 1 - m, i, X), |i| g(m, i, X))?
            .scaled_laurent(&over_lambda(Rat::from_integer(-(tl + 1)), 2 * a_(m)));
    }
    map.insert(R, r);

    let mut q = OscExpr::zero();
    let mut qstar = OscExpr::zero();
    let mut s = OscExpr::zero();
    let mut sstar = OscExpr::zero();
    for m in 1..=tl {
        let plus = over_lambda(Rat::from_integer(m), i_(m));
        let minus = over_lambda(Rat::from_integer(-m), i_(m));
        q = q + eps_pair(&alg, |j| g(tl - m, j, P), |k| g(m - 1, k, X))?.scaled_laurent(&plus);
        qstar =
            qstar + dot(&alg, d, |i| g(tl - m, i, P), |i| g(m - 1, i, X))?.scaled_laurent(&minus);
        s = s + eps_pair(&alg, |j| g(tl + 1 - m, j, P), |k| g(m - 1, k, X))?.scaled_laurent(&plus);
        sstar = sstar
            + dot(&alg, d, |i| g(tl + 1 - m, i, P), |i| g(m - 1, i, X))?.scaled_laurent(&minus);
    }
    map.insert(Q, q);
    map.insert(Qstar, qstar);
    map.insert(S, s);
    map.insert(Sstar, sstar);

    Ok(map)
}

/// Builds the realization for one of the four supported
/// (family, central extension) cases.
pub fn realize(spec: &BuildSpec) -> Result<Realization> {
    spec.validate()?;
    let mut map = match (spec.family, spec.central) {
        (Family::StandardSuper, CentralKind::Mass) => std_mass_map(spec.d, spec.ell)?,
        (Family::StandardSuper, CentralKind::Exotic) => std_exotic_map(spec.ell)?,
        (Family::ExoticSuper, CentralKind::Mass) => exotic_mass_map(spec.ell)?,
        (Family::ExoticSuper, CentralKind::Exotic) => exotic_exotic_map(spec.ell)?,
        _ => {
            return Err(Error::IllegalSpec(
                "realizations exist for the standard/exotic super families with a central \
                 extension"
                    .into(),
            ))
        }
    };
    let source = build(spec)?;
    let target = IdealAlgebra::new(spec.family, spec.d, spec.ell, spec.central)?;
    for g in source.generators() {
        if g.is_ideal() {
            map.insert(*g, OscExpr::letter(*g));
        } else if g.is_central() {
            map.insert(*g, OscExpr::scalar(LaurentScalar::lambda()));
        }
    }
    Ok(Realization {
        source,
        target,
        map,
    })
}

/// Checks the homomorphism property on every unordered pair of source basis
/// generators, identically in the central parameter.
pub fn verify_realization(r: &Realization) -> Result<RealizationReport> {
    let gens = r.source.generators();
    let n = gens.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let entries: Vec<RealizationViolation> = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<RealizationViolation>> {
            let (a, b) = (gens[i], gens[j]);
            let lhs = r.target.graded_commutator(
                r.image(&a).ok_or(Error::UnknownGenerator(a))?,
                r.image(&b).ok_or(Error::UnknownGenerator(b))?,
            )?;
            let rhs = r.apply(&r.source.bracket_basis(a, b))?;
            let residual = lhs - rhs;
            Ok(if residual.is_zero() {
                None
            } else {
                Some(RealizationViolation {
                    left: a,
                    right: b,
                    residual,
                })
            })
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let mut report = RealizationReport { entries };
    report.entries.sort_by_key(|v| (v.left, v.right));
    Ok(report)
}

/// One oscillator mode: a scalar multiple of a single ideal letter for both
/// the annihilator and the creator.
#[derive(Debug, Clone)]
pub struct OscPair {
    pub level: u32,
    pub i: u32,
    pub annihilator: OscExpr,
    pub creator: OscExpr,
}

/// The boson/fermion basis of the mass-extended standard ideal.
#[derive(Debug, Clone)]
pub struct OscillatorBasis {
    pub algebra: IdealAlgebra,
    pub bosons: Vec<OscPair>,
    pub fermions: Vec<OscPair>,
    /// True when the fermion annihilator sign has been flipped to restore
    /// `{a, a^dag} = +1`.
    pub flipped_fermion_sign: bool,
}

/// Builds the oscillator basis for half-integer spin. `flip_fermion_sign`
/// negates the fermion annihilators relative to the printed convention.
pub fn build_oscillator_basis(
    ell: HalfInt,
    d: u32,
    flip_fermion_sign: bool,
) -> Result<OscillatorBasis> {
    use Generator::*;
    if ell.is_integer() {
        return Err(Error::IllegalSpec(
            "the oscillator basis requires 2l odd (mass extension)".into(),
        ));
    }
    let alg = IdealAlgebra::new(Family::StandardSuper, d, ell, CentralKind::Mass)?;
    let tl = ell.twice();
    let half = (tl + 1) / 2;
    let i_ = |m: i64| coeff(CoefficientKind::I, ell, m).unwrap();
    let a_ = |m: i64| coeff(CoefficientKind::Alpha, ell, m).unwrap();
    let b_ = |m: i64| coeff(CoefficientKind::Beta, ell, m).unwrap();
    // 1/sqrt(lambda) carries the doubled exponent -1.
    let root = |c: Rat| LaurentScalar::half_monomial(c, -1);

    let mut bosons = Vec::new();
    for n in 1..=tl {
        for i in 1..=d {
            let (ann, cre) = if n <= half {
                (
                    OscExpr::letter(P((n - 1) as u32, i))
                        .scaled_laurent(&root(Rat::new(1, i_(n - 1)))),
                    OscExpr::letter(P((tl - n + 1) as u32, i))
                        .scaled_laurent(&root(Rat::from_integer(1))),
                )
            } else {
                let jn = n - half - 1;
                (
                    OscExpr::letter(J(jn as u32, i)).scaled_laurent(&root(Rat::new(1, b_(jn)))),
                    OscExpr::letter(J(((3 * tl - 2 * n - 1) / 2) as u32, i))
                        .scaled_laurent(&root(Rat::from_integer(1))),
                )
            };
            bosons.push(OscPair {
                level: n as u32,
                i,
                annihilator: ann,
                creator: cre,
            });
        }
    }

    let mut fermions = Vec::new();
    let ann_sign = if flip_fermion_sign { 1 } else { -1 };
    for n in 1..=tl {
        for i in 1..=d {
            fermions.push(OscPair {
                level: n as u32,
                i,
                annihilator: OscExpr::letter(Xbar((n - 1) as u32, i))
                    .scaled_laurent(&root(Rat::new(ann_sign, a_(n - 1)))),
                creator: OscExpr::letter(X((tl - n) as u32, i))
                    .scaled_laurent(&root(Rat::from_integer(1))),
            });
        }
    }

    Ok(OscillatorBasis {
        algebra: alg,
        bosons,
        fermions,
        flipped_fermion_sign: flip_fermion_sign,
    })
}

/// The bose-fermi oscillator Hamiltonian, expressed back in ideal
/// generators. Always uses the printed fermion convention.
pub fn build_bf_hamiltonian(ell: HalfInt, d: u32) -> Result<OscExpr> {
    let basis = build_oscillator_basis(ell, d, false)?;
    let alg = basis.algebra;
    let tl = ell.twice();
    let half = (tl + 1) / 2;
    let mut h = OscExpr::zero();
    for p in &basis.bosons {
        let m = p.level as i64;
        let c = if m <= half {
            Rat::new(tl - 2 * m + 2, 2)
        } else {
            Rat::new(2 * tl - 2 * m + 1, 2)
        };
        h = h + alg.multiply(&p.creator, &p.annihilator)?.scaled(c);
    }
    for p in &basis.fermions {
        let m = p.level as i64;
        let c = -Rat::new(tl - 2 * m + 1, 2);
        h = h + alg.multiply(&p.creator, &p.annihilator)?.scaled(c);
    }
    Ok(h)
}

/// Residual of `D + 2H_osc + l(l+1/2)d` for the standard mass realization;
/// empty means the Hamiltonian relation holds identically.
pub fn hamiltonian_residual(ell: HalfInt, d: u32) -> Result<OscExpr> {
    let spec = BuildSpec::new(Family::StandardSuper, d, ell, CentralKind::Mass);
    let r = realize(&spec)?;
    let d_real = r
        .image(&Generator::D)
        .ok_or(Error::UnknownGenerator(Generator::D))?
        .clone();
    let h_osc = build_bf_hamiltonian(ell, d)?;
    let tl = ell.twice();
    let shift = OscExpr::scalar(LaurentScalar::rat(Rat::new(tl * (tl + 1) * d as i64, 4)));
    Ok(d_real + h_osc.scaled(Rat::from_integer(2)) + shift)
}

/// Outcome of checking the canonical (anti)commutation relations of the
/// oscillator basis.
#[derive(Debug, Clone)]
pub struct CanonicalRelations {
    /// Deviations from `[b, b^dag] = dd`, `[b, b] = [b^dag, b^dag] = 0`.
    pub boson_violations: Vec<(u32, u32, u32, u32, OscExpr)>,
    /// The single global sign `s` in `{a, a^dag} = s dd`, if consistent.
    pub fermion_sign: Option<i64>,
    /// Deviations from `{a, a^dag} = s dd`, `{a, a} = {a^dag, a^dag} = 0`.
    pub fermion_violations: Vec<(u32, u32, u32, u32, OscExpr)>,
}

impl CanonicalRelations {
    pub fn is_canonical_up_to_sign(&self) -> bool {
        self.boson_violations.is_empty()
            && self.fermion_violations.is_empty()
            && self.fermion_sign.is_some()
    }
}

/// Evaluates every pairwise (anti)commutator of the basis modes.
pub fn verify_canonical_relations(basis: &OscillatorBasis) -> Result<CanonicalRelations> {
    let alg = &basis.algebra;
    let mut boson_violations = Vec::new();
    for a in &basis.bosons {
        for b in &basis.bosons {
            let expect = if (a.level, a.i) == (b.level, b.i) {
                OscExpr::one()
            } else {
                OscExpr::zero()
            };
            let mixed = alg.graded_commutator(&a.annihilator, &b.creator)? - expect;
            if !mixed.is_zero() {
                boson_violations.push((a.level, a.i, b.level, b.i, mixed));
            }
            let aa = alg.graded_commutator(&a.annihilator, &b.annihilator)?;
            if !aa.is_zero() {
                boson_violations.push((a.level, a.i, b.level, b.i, aa));
            }
            let cc = alg.graded_commutator(&a.creator, &b.creator)?;
            if !cc.is_zero() {
                boson_violations.push((a.level, a.i, b.level, b.i, cc));
            }
        }
    }

    // First determine the global sign from one diagonal pair, then require it
    // everywhere.
    let mut fermion_sign: Option<i64> = None;
    let mut fermion_violations = Vec::new();
    for a in &basis.fermions {
        for b in &basis.fermions {
            let mixed = alg.graded_commutator(&a.annihilator, &b.creator)?;
            if (a.level, a.i) == (b.level, b.i) {
                let sign = if mixed == OscExpr::one() {
                    Some(1)
                } else if mixed == -OscExpr::one() {
                    Some(-1)
                } else {
                    None
                };
                match (fermion_sign, sign) {
                    (None, Some(s)) => fermion_sign = Some(s),
                    (Some(prev), Some(s)) if prev == s => {}
                    _ => fermion_violations.push((a.level, a.i, b.level, b.i, mixed)),
                }
            } else if !mixed.is_zero() {
                fermion_violations.push((a.level, a.i, b.level, b.i, mixed));
            }
            let aa = alg.graded_commutator(&a.annihilator, &b.annihilator)?;
            if !aa.is_zero() {
                fermion_violations.push((a.level, a.i, b.level, b.i, aa));
            }
            let cc = alg.graded_commutator(&a.creator, &b.creator)?;
            if !cc.is_zero() {
                fermion_violations.push((a.level, a.i, b.level, b.i, cc));
            }
        }
    }

    Ok(CanonicalRelations {
        boson_violations,
        fermion_sign,
        fermion_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;

    fn mass_spec(d: u32, tl: i64) -> BuildSpec {
        BuildSpec::new(
            Family::StandardSuper,
            d,
            HalfInt::from_twice(tl),
            CentralKind::Mass,
        )
    }

    #[test]
    fn hamiltonian_image_at_lowest_spin() {
        let r = realize(&mass_spec(1, 1)).unwrap();
        // H -> (1 / 2 lambda) P^(0) P^(0).
        let mut expected = OscExpr::zero();
        expected.add_word(
            vec![P(0, 1), P(0, 1)],
            LaurentScalar::monomial(Rat::new(1, 2), -1),
        );
        assert_eq!(r.image(&H).unwrap(), &expected);
    }

    #[test]
    fn r_charge_image_carries_the_constant_ld() {
        for (d, tl) in [(1u32, 1i64), (2, 3)] {
            let r = realize(&mass_spec(d, tl)).unwrap();
            let constant = r
                .image(&R)
                .unwrap()
                .iter()
                .find(|(w, _)| w.is_empty())
                .map(|(_, s)| s.clone())
                .unwrap_or_else(LaurentScalar::zero);
            let ld = Rat::new(tl * d as i64, 2);
            assert_eq!(constant, LaurentScalar::rat(ld), "d={d} 2l={tl}");
        }
    }

    #[test]
    fn central_charge_maps_to_lambda() {
        let r = realize(&mass_spec(1, 1)).unwrap();
        assert_eq!(
            r.image(&CentralM).unwrap(),
            &OscExpr::scalar(LaurentScalar::lambda())
        );
        assert_eq!(r.image(&P(0, 1)).unwrap(), &OscExpr::letter(P(0, 1)));
    }

    #[test]
    fn lowest_boson_mode_is_minus_p_over_root_lambda() {
        let basis = build_oscillator_basis(HalfInt::from_twice(1), 1, false).unwrap();
        // 1 / I_0 = -1 at 2l = 1, so b = -P^(0) / sqrt(lambda).
        let expected = OscExpr::letter(P(0, 1))
            .scaled_laurent(&LaurentScalar::half_monomial(Rat::from_integer(-1), -1));
        assert_eq!(basis.bosons[0].annihilator, expected);
        let expected = OscExpr::letter(P(1, 1))
            .scaled_laurent(&LaurentScalar::half_monomial(Rat::from_integer(1), -1));
        assert_eq!(basis.bosons[0].creator, expected);
    }

    #[test]
    fn fermion_sign_flip_negates_the_annihilators() {
        let printed = build_oscillator_basis(HalfInt::from_twice(3), 2, false).unwrap();
        let flipped = build_oscillator_basis(HalfInt::from_twice(3), 2, true).unwrap();
        for (a, b) in printed.fermions.iter().zip(&flipped.fermions) {
            assert_eq!(a.annihilator.scaled(Rat::from_integer(-1)), b.annihilator);
            assert_eq!(a.creator, b.creator);
        }
    }

    #[test]
    fn hamiltonian_residual_vanishes_at_lowest_spin() {
        for d in [1u32, 2, 3] {
            let residual = hamiltonian_residual(HalfInt::from_twice(1), d).unwrap();
            assert!(residual.is_zero(), "d = {d}: {residual}");
        }
    }

    #[test]
    fn integer_spin_has_no_oscillator_basis() {
        assert!(build_oscillator_basis(HalfInt::from_twice(2), 1, false).is_err());
        assert!(realize(&BuildSpec::new(
            Family::Gca,
            1,
            HalfInt::from_twice(1),
            CentralKind::None
        ))
        .is_err());
    }
}
