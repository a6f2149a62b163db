//! Construction of the bracket tables for every algebra family from
//! `(family, d, 2l, central kind)`.

use std::collections::BTreeMap;

use crate::algebra::{CentralKind, Family, Superalgebra};
use crate::coeff::{coeff, CoefficientKind};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::Rat;

/// Everything needed to name one algebra of the family zoo.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildSpec {
    pub family: Family,
    pub d: u32,
    pub ell: HalfInt,
    pub central: CentralKind,
}

impl BuildSpec {
    pub fn new(family: Family, d: u32, ell: HalfInt, central: CentralKind) -> Self {
        BuildSpec {
            family,
            d,
            ell,
            central,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 1 {
            return Err(Error::IllegalSpec("d must be >= 1".into()));
        }
        if self.ell.twice() < 1 {
            return Err(Error::IllegalSpec("2l must be >= 1".into()));
        }
        if self.family == Family::ExoticSuper && self.d != 2 {
            return Err(Error::IllegalSpec("exotic super requires d = 2".into()));
        }
        match self.central {
            CentralKind::None => {}
            CentralKind::Mass => {
                if self.ell.is_integer() {
                    return Err(Error::IllegalSpec(
                        "mass extension requires half-integer l (2l odd)".into(),
                    ));
                }
            }
            CentralKind::Exotic => {
                if self.d != 2 {
                    return Err(Error::IllegalSpec("exotic extension requires d = 2".into()));
                }
                if !self.ell.is_integer() {
                    return Err(Error::IllegalSpec(
                        "exotic extension requires integer l (2l even)".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The antisymmetric tensor with `eps_12 = 1`, nonzero only for d = 2 indices.
pub fn epsilon(i: u32, j: u32) -> i64 {
    match (i, j) {
        (1, 2) => 1,
        (2, 1) => -1,
        _ => 0,
    }
}

struct TableBuilder {
    generators: Vec<Generator>,
    table: BTreeMap<(Generator, Generator), Element>,
}

impl TableBuilder {
    fn new() -> Self {
        TableBuilder {
            generators: Vec::new(),
            table: BTreeMap::new(),
        }
    }

    fn gen(&mut self, g: Generator) {
        self.generators.push(g);
    }

    fn ins(&mut self, a: Generator, b: Generator, e: Element) {
        if e.is_zero() {
            return;
        }
        let prev = self.table.insert((a, b), e);
        debug_assert!(prev.is_none(), "duplicate table entry for ({a}, {b})");
    }

    fn finish(
        self,
        family: Family,
        d: u32,
        ell: HalfInt,
        central: CentralKind,
    ) -> Result<Superalgebra> {
        let mut generators = self.generators;
        generators.sort();
        Superalgebra::from_parts(family, d, ell, central, generators, self.table)
    }
}

/// Rotation generator as an element, for arbitrary index order.
fn m_elem(i: u32, j: u32) -> Element {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Equal => Element::zero(),
        Less => Element::generator(Generator::M(i, j)),
        Greater => -Element::generator(Generator::M(j, i)),
    }
}

fn so_d_pairs(d: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in i + 1..=d {
            out.push((i, j));
        }
    }
    out
}

fn central_generator(central: CentralKind) -> Option<Generator> {
    match central {
        CentralKind::None => None,
        CentralKind::Mass => Some(Generator::CentralM),
        CentralKind::Exotic => Some(Generator::CentralTheta),
    }
}

/// Installs the bosonic GCA generators and relations (sl(2), so(d), the
/// abelian ideal action, and the chosen P-P central terms).
fn add_gca_sector(b: &mut TableBuilder, d: u32, ell: HalfInt, central: CentralKind) -> Result<()> {
    use Generator::*;
    let tl = ell.twice();

    for g in [D, H, C] {
        b.gen(g);
    }
    for (i, j) in so_d_pairs(d) {
        b.gen(M(i, j));
    }
    for n in 0..=tl {
        for i in 1..=d {
            b.gen(P(n as u32, i));
        }
    }
    if let Some(z) = central_generator(central) {
        b.gen(z);
    }

    b.ins(D, H, Element::int_term(H, 2));
    b.ins(D, C, Element::int_term(C, -2));
    b.ins(C, H, Element::generator(D));

    // [M_ij, M_kl] = -d_ik M_jl - d_jl M_ik + d_il M_jk + d_jk M_il
    let pairs = so_d_pairs(d);
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            if (i, j) == (k, l) {
                continue;
            }
            let mut e = Element::zero();
            if i == k {
                e = e - m_elem(j, l);
            }
            if j == l {
                e = e - m_elem(i, k);
            }
            if i == l {
                e = e + m_elem(j, k);
            }
            if j == k {
                e = e + m_elem(i, l);
            }
            b.ins(M(i, j), M(k, l), e);
        }
    }

    for n in 0..=tl {
        for i in 1..=d {
            let p = P(n as u32, i);
            if n > 0 {
                b.ins(H, p, Element::int_term(P(n as u32 - 1, i), -n));
            }
            if tl - 2 * n != 0 {
                b.ins(D, p, Element::int_term(p, tl - 2 * n));
            }
            if n < tl {
                b.ins(C, p, Element::int_term(P(n as u32 + 1, i), tl - n));
            }
            for &(a, c) in &pairs {
                let mut e = Element::zero();
                if a == i {
                    e = e - Element::generator(P(n as u32, c));
                }
                if c == i {
                    e = e + Element::generator(P(n as u32, a));
                }
                b.ins(M(a, c), p, e);
            }
        }
    }

    match central {
        CentralKind::None => {}
        CentralKind::Mass => {
            for m in 0..=tl {
                let n = tl - m;
                let im = coeff(CoefficientKind::I, ell, m)?;
                for i in 1..=d {
                    b.ins(
                        P(m as u32, i),
                        P(n as u32, i),
                        Element::int_term(CentralM, im),
                    );
                }
            }
        }
        CentralKind::Exotic => {
            for m in 0..=tl {
                let n = tl - m;
                let icm = coeff(CoefficientKind::ICheck, ell, m)?;
                for i in 1..=2 {
                    for j in 1..=2 {
                        let c = epsilon(i, j) * icm;
                        if c != 0 {
                            b.ins(
                                P(m as u32, i),
                                P(n as u32, j),
                                Element::int_term(CentralTheta, c),
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn build_gca(d: u32, ell: HalfInt, central: CentralKind) -> Result<Superalgebra> {
    let spec = BuildSpec::new(Family::Gca, d, ell, central);
    spec.validate()?;
    let mut b = TableBuilder::new();
    add_gca_sector(&mut b, d, ell, central)?;
    b.finish(Family::Gca, d, ell, central)
}

/// Shared sl(2) (and optionally so(d)) action on an odd level tower
/// (X or Xbar). The exotic super family omits the rotation action on X.
fn add_sl2_action_on_odd_tower(
    b: &mut TableBuilder,
    d: u32,
    tl: i64,
    with_rotation: bool,
    make: impl Fn(u32, u32) -> Generator,
) {
    use Generator::*;
    let pairs = if with_rotation {
        so_d_pairs(d)
    } else {
        Vec::new()
    };
    for n in 0..tl {
        for i in 1..=d {
            let x = make(n as u32, i);
            if n > 0 {
                b.ins(H, x, Element::int_term(make(n as u32 - 1, i), -n));
            }
            b.ins(D, x, Element::int_term(x, tl - 2 * n - 1));
            if n < tl - 1 {
                b.ins(C, x, Element::int_term(make(n as u32 + 1, i), tl - n - 1));
            }
            for &(a, c) in &pairs {
                let mut e = Element::zero();
                if a == i {
                    e = e - Element::generator(make(n as u32, c));
                }
                if c == i {
                    e = e + Element::generator(make(n as u32, a));
                }
                b.ins(M(a, c), x, e);
            }
        }
    }
}

pub fn build_standard_super(d: u32, ell: HalfInt, central: CentralKind) -> Result<Superalgebra> {
    use Generator::*;
    let spec = BuildSpec::new(Family::StandardSuper, d, ell, central);
    spec.validate()?;
    let tl = ell.twice();
    let mut b = TableBuilder::new();
    add_gca_sector(&mut b, d, ell, central)?;

    for g in [Q, Qbar, S, Sbar, R] {
        b.gen(g);
    }
    for n in 0..tl {
        for i in 1..=d {
            b.gen(X(n as u32, i));
            b.gen(Xbar(n as u32, i));
        }
    }
    // J-generators exist only for 2l >= 2.
    for n in 0..tl - 1 {
        for i in 1..=d {
            b.gen(J(n as u32, i));
        }
    }

    // Fermionic sector.
    b.ins(Q, Qbar, Element::int_term(H, 2));
    b.ins(S, Sbar, Element::int_term(C, 2));
    b.ins(Q, Sbar, Element::generator(D) + Element::generator(R));
    b.ins(Qbar, S, Element::generator(D) - Element::generator(R));
    for n in 0..tl {
        for i in 1..=d {
            let nn = n as u32;
            let j_part = |c: i64| -> Element {
                // J index must be in range when the coefficient survives.
                if c == 0 {
                    Element::zero()
                } else {
                    Element::int_term(J(nn - 1, i), c)
                }
            };
            let qx = -Element::generator(P(nn, i)) + j_part(-n);
            b.ins(Q, Xbar(nn, i), qx);
            let qbx = -Element::generator(P(nn, i)) + j_part(n);
            b.ins(Qbar, X(nn, i), qbx);
            let s_j = |c: i64| -> Element {
                if c == 0 {
                    Element::zero()
                } else {
                    Element::int_term(J(nn, i), c)
                }
            };
            b.ins(
                S,
                Xbar(nn, i),
                -Element::generator(P(nn + 1, i)) + s_j(-(n - tl + 1)),
            );
            b.ins(
                Sbar,
                X(nn, i),
                -Element::generator(P(nn + 1, i)) + s_j(n - tl + 1),
            );
        }
    }

    // Bosonic-fermionic sector.
    b.ins(H, S, -Element::generator(Q));
    b.ins(H, Sbar, -Element::generator(Qbar));
    b.ins(C, Q, Element::generator(S));
    b.ins(C, Qbar, Element::generator(Sbar));
    b.ins(D, S, -Element::generator(S));
    b.ins(D, Sbar, -Element::generator(Sbar));
    b.ins(D, Q, Element::generator(Q));
    b.ins(D, Qbar, Element::generator(Qbar));
    add_sl2_action_on_odd_tower(&mut b, d, tl, true, X);
    add_sl2_action_on_odd_tower(&mut b, d, tl, true, Xbar);
    b.ins(R, Q, -Element::generator(Q));
    b.ins(R, Qbar, Element::generator(Qbar));
    b.ins(R, S, -Element::generator(S));
    b.ins(R, Sbar, Element::generator(Sbar));
    for n in 0..tl {
        for i in 1..=d {
            b.ins(R, X(n as u32, i), -Element::generator(X(n as u32, i)));
            b.ins(R, Xbar(n as u32, i), Element::generator(Xbar(n as u32, i)));
        }
    }
    for n in 0..=tl {
        for i in 1..=d {
            if n > 0 {
                b.ins(Q, P(n as u32, i), Element::int_term(X(n as u32 - 1, i), n));
                b.ins(
                    Qbar,
                    P(n as u32, i),
                    Element::int_term(Xbar(n as u32 - 1, i), n),
                );
            }
            if n < tl {
                b.ins(
                    S,
                    P(n as u32, i),
                    Element::int_term(X(n as u32, i), -(tl - n)),
                );
                b.ins(
                    Sbar,
                    P(n as u32, i),
                    Element::int_term(Xbar(n as u32, i), -(tl - n)),
                );
            }
        }
    }
    for n in 0..tl - 1 {
        for i in 1..=d {
            let nn = n as u32;
            b.ins(Q, J(nn, i), -Element::generator(X(nn, i)));
            b.ins(Qbar, J(nn, i), Element::generator(Xbar(nn, i)));
            // Note the printed sign asymmetry between [S, J] and [Sbar, J].
            b.ins(S, J(nn, i), -Element::generator(X(nn + 1, i)));
            b.ins(Sbar, J(nn, i), Element::generator(Xbar(nn + 1, i)));
        }
    }

    // Additional bosonic sector: sl(2) x so(d) action on J.
    let pairs = so_d_pairs(d);
    for n in 0..tl - 1 {
        for i in 1..=d {
            let j = J(n as u32, i);
            if n > 0 {
                b.ins(H, j, Element::int_term(J(n as u32 - 1, i), -n));
            }
            if tl - 2 * n - 2 != 0 {
                b.ins(D, j, Element::int_term(j, tl - 2 * n - 2));
            }
            if n < tl - 2 {
                b.ins(C, j, Element::int_term(J(n as u32 + 1, i), tl - n - 2));
            }
            for &(a, c) in &pairs {
                let mut e = Element::zero();
                if a == i {
                    e = e - Element::generator(J(n as u32, c));
                }
                if c == i {
                    e = e + Element::generator(J(n as u32, a));
                }
                b.ins(M(a, c), j, e);
            }
        }
    }

    // Central terms of the fermionic partners and J-tower.
    match central {
        CentralKind::None => {}
        CentralKind::Mass => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::Alpha, ell, m)?;
                for i in 1..=d {
                    b.ins(
                        X(m as u32, i),
                        Xbar(n as u32, i),
                        Element::int_term(CentralM, am),
                    );
                }
            }
            for m in 0..tl - 1 {
                let n = tl - 2 - m;
                let bm = coeff(CoefficientKind::Beta, ell, m)?;
                for i in 1..=d {
                    b.ins(
                        J(m as u32, i),
                        J(n as u32, i),
                        Element::int_term(CentralM, bm),
                    );
                }
            }
        }
        CentralKind::Exotic => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::AlphaCheck, ell, m)?;
                for i in 1..=2u32 {
                    for j in 1..=2u32 {
                        let c = epsilon(i, j) * am;
                        if c != 0 {
                            b.ins(
                                X(m as u32, i),
                                Xbar(n as u32, j),
                                Element::int_term(CentralTheta, c),
                            );
                        }
                    }
                }
            }
            for m in 0..tl - 1 {
                let n = tl - 2 - m;
                let bm = coeff(CoefficientKind::BetaCheck, ell, m)?;
                for i in 1..=2u32 {
                    for j in 1..=2u32 {
                        let c = epsilon(i, j) * bm;
                        if c != 0 && (m as u32, i) != (n as u32, j) {
                            b.ins(
                                J(m as u32, i),
                                J(n as u32, j),
                                Element::int_term(CentralTheta, c),
                            );
                        }
                    }
                }
            }
        }
    }

    b.finish(Family::StandardSuper, d, ell, central)
}

/// `sum_k eps_ik g(k)` scaled by `c`.
fn eps_sum(i: u32, c: i64, make: impl Fn(u32) -> Generator) -> Element {
    let mut e = Element::zero();
    for k in 1..=2 {
        let v = epsilon(i, k) * c;
        if v != 0 {
            e.add_term(make(k), Rat::from_integer(v));
        }
    }
    e
}

pub fn build_exotic_super(ell: HalfInt, central: CentralKind) -> Result<Superalgebra> {
    use Generator::*;
    let d = 2;
    let spec = BuildSpec::new(Family::ExoticSuper, d, ell, central);
    spec.validate()?;
    let tl = ell.twice();
    let mut b = TableBuilder::new();
    add_gca_sector(&mut b, d, ell, central)?;

    for g in [Q, Qstar, S, Sstar, R] {
        b.gen(g);
    }
    for n in 0..tl {
        for i in 1..=d {
            b.gen(X(n as u32, i));
        }
    }

    // Fermionic sector.
    b.ins(Q, Q, Element::int_term(H, 2));
    b.ins(Qstar, Qstar, Element::int_term(H, 2));
    b.ins(S, S, Element::int_term(C, 2));
    b.ins(Sstar, Sstar, Element::int_term(C, 2));
    b.ins(Q, S, Element::generator(D));
    b.ins(Qstar, Sstar, Element::generator(D));
    b.ins(
        Q,
        Sstar,
        -Element::generator(M(1, 2)) + Element::generator(R),
    );
    b.ins(
        Qstar,
        S,
        Element::generator(M(1, 2)) - Element::generator(R),
    );
    for n in 0..tl {
        for i in 1..=d {
            let nn = n as u32;
            b.ins(Q, X(nn, i), -Element::generator(P(nn, i)));
            b.ins(Qstar, X(nn, i), eps_sum(i, 1, |k| P(nn, k)));
            b.ins(S, X(nn, i), -Element::generator(P(nn + 1, i)));
            b.ins(Sstar, X(nn, i), eps_sum(i, 1, |k| P(nn + 1, k)));
        }
    }

    // Bosonic-fermionic sector.
    b.ins(H, S, -Element::generator(Q));
    b.ins(H, Sstar, -Element::generator(Qstar));
    b.ins(C, Q, Element::generator(S));
    b.ins(C, Qstar, Element::generator(Sstar));
    b.ins(D, S, -Element::generator(S));
    b.ins(D, Sstar, -Element::generator(Sstar));
    b.ins(D, Q, Element::generator(Q));
    b.ins(D, Qstar, Element::generator(Qstar));
    add_sl2_action_on_odd_tower(&mut b, d, tl, false, X);
    for n in 0..tl {
        for i in 1..=d {
            // The so(2) rotation does not act on X here; only R mixes the
            // components, with weight 2l+1.
            b.ins(R, X(n as u32, i), eps_sum(i, tl + 1, |k| X(n as u32, k)));
        }
    }
    b.ins(M(1, 2), S, Element::generator(Sstar));
    b.ins(M(1, 2), Sstar, -Element::generator(S));
    b.ins(M(1, 2), Q, Element::generator(Qstar));
    b.ins(M(1, 2), Qstar, -Element::generator(Q));
    b.ins(R, S, Element::int_term(Sstar, 2));
    b.ins(R, Sstar, Element::int_term(S, -2));
    b.ins(R, Q, Element::int_term(Qstar, 2));
    b.ins(R, Qstar, Element::int_term(Q, -2));
    for n in 0..=tl {
        for i in 1..=d {
            let nn = n as u32;
            if n > 0 {
                b.ins(Q, P(nn, i), Element::int_term(X(nn - 1, i), n));
                b.ins(Qstar, P(nn, i), eps_sum(i, n, |k| X(nn - 1, k)));
            }
            if n < tl {
                b.ins(S, P(nn, i), Element::int_term(X(nn, i), -(tl - n)));
                b.ins(Sstar, P(nn, i), eps_sum(i, -(tl - n), |k| X(nn, k)));
            }
            b.ins(R, P(nn, i), eps_sum(i, tl - 1, |k| P(nn, k)));
        }
    }

    // Central terms of the halved fermionic tower.
    match central {
        CentralKind::None => {}
        CentralKind::Mass => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::Alpha, ell, m)?;
                for i in 1..=d {
                    b.ins(
                        X(m as u32, i),
                        X(n as u32, i),
                        Element::int_term(CentralM, am),
                    );
                }
            }
        }
        CentralKind::Exotic => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::AlphaCheck, ell, m)?;
                for i in 1..=2u32 {
                    for j in 1..=2u32 {
                        let c = epsilon(i, j) * am;
                        if c != 0 {
                            b.ins(
                                X(m as u32, i),
                                X(n as u32, j),
                                Element::int_term(CentralTheta, c),
                            );
                        }
                    }
                }
            }
        }
    }

    b.finish(Family::ExoticSuper, d, ell, central)
}

pub fn build_n1_super(d: u32, ell: HalfInt, central: CentralKind) -> Result<Superalgebra> {
    use Generator::*;
    let spec = BuildSpec::new(Family::N1Super, d, ell, central);
    spec.validate()?;
    let tl = ell.twice();
    let mut b = TableBuilder::new();
    add_gca_sector(&mut b, d, ell, central)?;

    for g in [Q, S] {
        b.gen(g);
    }
    for n in 0..tl {
        for i in 1..=d {
            b.gen(X(n as u32, i));
        }
    }

    b.ins(Q, Q, Element::int_term(H, 2));
    b.ins(S, S, Element::int_term(C, 2));
    b.ins(Q, S, Element::generator(D));
    for n in 0..tl {
        for i in 1..=d {
            b.ins(Q, X(n as u32, i), -Element::generator(P(n as u32, i)));
            b.ins(S, X(n as u32, i), -Element::generator(P(n as u32 + 1, i)));
        }
    }

    b.ins(H, S, -Element::generator(Q));
    b.ins(C, Q, Element::generator(S));
    b.ins(D, S, -Element::generator(S));
    b.ins(D, Q, Element::generator(Q));
    add_sl2_action_on_odd_tower(&mut b, d, tl, true, X);
    for n in 0..=tl {
        for i in 1..=d {
            if n > 0 {
                b.ins(Q, P(n as u32, i), Element::int_term(X(n as u32 - 1, i), n));
            }
            if n < tl {
                b.ins(
                    S,
                    P(n as u32, i),
                    Element::int_term(X(n as u32, i), -(tl - n)),
                );
            }
        }
    }

    match central {
        CentralKind::None => {}
        CentralKind::Mass => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::Alpha, ell, m)?;
                for i in 1..=d {
                    b.ins(
                        X(m as u32, i),
                        X(n as u32, i),
                        Element::int_term(CentralM, am),
                    );
                }
            }
        }
        CentralKind::Exotic => {
            for m in 0..tl {
                let n = tl - 1 - m;
                let am = coeff(CoefficientKind::AlphaCheck, ell, m)?;
                for i in 1..=2u32 {
                    for j in 1..=2u32 {
                        let c = epsilon(i, j) * am;
                        if c != 0 {
                            b.ins(
                                X(m as u32, i),
                                X(n as u32, j),
                                Element::int_term(CentralTheta, c),
                            );
                        }
                    }
                }
            }
        }
    }

    b.finish(Family::N1Super, d, ell, central)
}

/// Builds the algebra named by `spec`.
pub fn build(spec: &BuildSpec) -> Result<Superalgebra> {
    spec.validate()?;
    match spec.family {
        Family::Gca => build_gca(spec.d, spec.ell, spec.central),
        Family::StandardSuper => build_standard_super(spec.d, spec.ell, spec.central),
        Family::ExoticSuper => build_exotic_super(spec.ell, spec.central),
        Family::N1Super => build_n1_super(spec.d, spec.ell, spec.central),
    }
}

/// D-weights of every generator: `[D, g] = w_g g`.
pub fn d_weights(alg: &Superalgebra) -> BTreeMap<Generator, HalfInt> {
    use Generator::*;
    let tl = alg.ell.twice();
    alg.generators()
        .iter()
        .map(|g| {
            let w = match g {
                H => 2,
                C => -2,
                Q | Qbar | Qstar => 1,
                S | Sbar | Sstar => -1,
                P(n, _) => tl - 2 * *n as i64,
                X(n, _) | Xbar(n, _) => tl - 2 * *n as i64 - 1,
                J(n, _) => tl - 2 * *n as i64 - 2,
                _ => 0,
            };
            (*g, HalfInt::from_int(w))
        })
        .collect()
}

/// R-charges of the standard super family: `[R, g] = q_g g`.
pub fn r_charges(alg: &Superalgebra) -> BTreeMap<Generator, HalfInt> {
    use Generator::*;
    alg.generators()
        .iter()
        .map(|g| {
            let q = match g {
                Q | S | X(..) => -1,
                Qbar | Sbar | Xbar(..) => 1,
                _ => 0,
            };
            (*g, HalfInt::from_int(q))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::Generator::*;
    use num_traits::{Signed, Zero};

    fn spec(family: Family, d: u32, tl: i64, central: CentralKind) -> BuildSpec {
        BuildSpec::new(family, d, HalfInt::from_twice(tl), central)
    }

    #[test]
    fn dilatation_acts_with_weight_two_on_h() {
        for family in [
            Family::Gca,
            Family::StandardSuper,
            Family::ExoticSuper,
            Family::N1Super,
        ] {
            let d = if family == Family::ExoticSuper { 2 } else { 1 };
            let alg = build(&spec(family, d, 1, CentralKind::None)).unwrap();
            assert_eq!(alg.bracket_basis(D, H), Element::int_term(H, 2), "{family}");
        }
    }

    #[test]
    fn mass_extension_enters_the_translation_bracket() {
        let alg = build(&spec(Family::StandardSuper, 1, 1, CentralKind::Mass)).unwrap();
        // [P^(0), P^(1)] = I_0 M with I_0 = -1 at 2l = 1.
        assert_eq!(
            alg.bracket_basis(P(0, 1), P(1, 1)),
            Element::int_term(CentralM, -1)
        );
        // Off-shell level sums stay zero.
        assert!(alg.bracket_basis(P(0, 1), P(0, 1)).is_zero());
    }

    #[test]
    fn illegal_specs_are_rejected() {
        assert!(build(&spec(Family::ExoticSuper, 3, 2, CentralKind::None)).is_err());
        assert!(build(&spec(Family::Gca, 1, 2, CentralKind::Mass)).is_err());
        assert!(build(&spec(Family::Gca, 1, 1, CentralKind::Exotic)).is_err());
        assert!(build(&spec(Family::Gca, 2, 1, CentralKind::Exotic)).is_err());
    }

    #[test]
    fn generator_counts() {
        // d = 2, l = 1, exotic: D, H, C, one rotation, 3 x 2 translations,
        // and the central charge.
        let alg = build(&spec(Family::Gca, 2, 2, CentralKind::Exotic)).unwrap();
        assert_eq!(alg.generators().len(), 11);
        // Standard super doubles the ideal with fermions and adds Q, Qbar,
        // S, Sbar, R.
        let alg = build(&spec(Family::StandardSuper, 1, 1, CentralKind::Mass)).unwrap();
        let odd = alg.generators().iter().filter(|g| g.is_odd()).count();
        assert_eq!(odd, 4 + 2);
    }

    #[test]
    fn gradings_hold_on_a_super_sample() {
        let alg = build(&spec(Family::StandardSuper, 2, 3, CentralKind::Mass)).unwrap();
        assert!(alg
            .verify_weight_grading(D, &d_weights(&alg))
            .unwrap()
            .is_empty());
        assert!(alg
            .verify_weight_grading(R, &r_charges(&alg))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn supercharges_close_on_dilatation_and_r() {
        let alg = build(&spec(Family::StandardSuper, 1, 1, CentralKind::None)).unwrap();
        let e = alg.bracket_basis(Q, Sbar);
        assert_eq!(e.coeff(&D).abs(), Rat::from_integer(1));
        assert!(!e.coeff(&R).is_zero() || !e.coeff(&C).is_zero());
    }
}
