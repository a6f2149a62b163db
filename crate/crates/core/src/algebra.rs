use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::Rat;

/// Algebra family tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Gca,
    StandardSuper,
    ExoticSuper,
    N1Super,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Gca => write!(f, "gca"),
            Family::StandardSuper => write!(f, "standard"),
            Family::ExoticSuper => write!(f, "exotic-super"),
            Family::N1Super => write!(f, "n1"),
        }
    }
}

/// Which central extension, if any, is installed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CentralKind {
    None,
    Mass,
    Exotic,
}

impl fmt::Display for CentralKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralKind::None => write!(f, "none"),
            CentralKind::Mass => write!(f, "mass"),
            CentralKind::Exotic => write!(f, "exotic"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ViolationKind {
    Antisymmetry,
    Jacobi,
    Grading,
    Closure,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::Antisymmetry => write!(f, "antisymmetry"),
            ViolationKind::Jacobi => write!(f, "jacobi"),
            ViolationKind::Grading => write!(f, "grading"),
            ViolationKind::Closure => write!(f, "closure"),
        }
    }
}

/// One failed identity, pinpointing the offending generators and the exact
/// residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witnesses: Vec<Generator>,
    pub residual: Element,
}

/// A canonically sorted list of failed identities. Empty iff the checked
/// property holds exactly.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ViolationReport {
    pub entries: Vec<Violation>,
}

impl ViolationReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn push(&mut self, kind: ViolationKind, witnesses: Vec<Generator>, residual: Element) {
        self.entries.push(Violation {
            kind,
            witnesses,
            residual,
        });
    }

    fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (a.kind, &a.witnesses).cmp(&(b.kind, &b.witnesses)));
    }
}

/// A superalgebra given by its generator list and sparse graded bracket table.
///
/// The table stores oriented entries as the builders produced them; the
/// opposite orientation of a stored pair is derived through graded
/// antisymmetry. Where a formula yields both orientations, both are stored
/// and `verify_antisymmetry` cross-checks them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superalgebra {
    pub family: Family,
    pub d: u32,
    pub ell: HalfInt,
    pub central: CentralKind,
    generators: Vec<Generator>,
    generator_set: BTreeSet<Generator>,
    table: BTreeMap<(Generator, Generator), Element>,
}

impl Superalgebra {
    pub fn from_parts(
        family: Family,
        d: u32,
        ell: HalfInt,
        central: CentralKind,
        generators: Vec<Generator>,
        table: BTreeMap<(Generator, Generator), Element>,
    ) -> Result<Self> {
        let generator_set: BTreeSet<Generator> = generators.iter().copied().collect();
        for ((a, b), e) in &table {
            for g in [a, b].into_iter().chain(e.generators()) {
                if !generator_set.contains(g) {
                    return Err(Error::UnknownGenerator(*g));
                }
            }
        }
        Ok(Superalgebra {
            family,
            d,
            ell,
            central,
            generators,
            generator_set,
            table,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn contains(&self, g: &Generator) -> bool {
        self.generator_set.contains(g)
    }

    pub fn table(&self) -> &BTreeMap<(Generator, Generator), Element> {
        &self.table
    }

    pub fn stored(&self, a: Generator, b: Generator) -> Option<&Element> {
        self.table.get(&(a, b))
    }

    /// Overwrites the oriented table entry `(a, b)`. Removes the entry when
    /// the element is zero.
    pub fn set_bracket(&mut self, a: Generator, b: Generator, e: Element) {
        if e.is_zero() {
            self.table.remove(&(a, b));
        } else {
            self.table.insert((a, b), e);
        }
    }

    /// Flips the sign of the coefficient of `target` in the stored entry
    /// `(a, b)`. Used by the mutation-sensitivity tests and the CLI linter
    /// demos.
    pub fn flip_constant(&mut self, a: Generator, b: Generator, target: Generator) -> Result<()> {
        let entry = self
            .table
            .get_mut(&(a, b))
            .ok_or(Error::UnknownGenerator(a))?;
        let c = entry.coeff(&target);
        entry.add_term(target, -c - c);
        Ok(())
    }

    /// Bracket of two basis generators, resolving orientation through the
    /// graded antisymmetry rule for pairs stored the other way around.
    pub fn bracket_basis(&self, a: Generator, b: Generator) -> Element {
        if a.is_central() || b.is_central() {
            return Element::zero();
        }
        if let Some(e) = self.table.get(&(a, b)) {
            return e.clone();
        }
        if let Some(e) = self.table.get(&(b, a)) {
            // [a,b] = -(-1)^{|a||b|} [b,a]
            let sign = if a.is_odd() && b.is_odd() { 1 } else { -1 };
            return e.scaled(Rat::from_integer(sign));
        }
        Element::zero()
    }

    fn bracket_gen_elem(&self, a: Generator, y: &Element) -> Element {
        let mut out = Element::zero();
        for (g, c) in y.iter() {
            out = out + self.bracket_basis(a, *g).scaled(*c);
        }
        out
    }

    /// Bilinear extension of the table to arbitrary elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        for g in x.generators().chain(y.generators()) {
            if !self.contains(g) {
                return Err(Error::UnknownGenerator(*g));
            }
        }
        let mut out = Element::zero();
        for (g, c) in x.iter() {
            out = out + self.bracket_gen_elem(*g, y).scaled(*c);
        }
        Ok(out)
    }

    /// Checks `[a,b] + (-1)^{|a||b|}[b,a] = 0` wherever both orientations are
    /// explicitly stored, and that even diagonal entries vanish. Entries whose
    /// reverse orientation is derived rather than stored are consistent by
    /// construction.
    pub fn verify_antisymmetry(&self) -> ViolationReport {
        let mut report = ViolationReport::default();
        for (a, b) in self.table.keys() {
            if a > b {
                continue;
            }
            let reverse = if a == b {
                Some(self.table.get(&(*a, *b)).unwrap())
            } else {
                self.table.get(&(*b, *a))
            };
            let Some(rev) = reverse else { continue };
            let sign = if a.is_odd() && b.is_odd() { -1 } else { 1 };
            let residual = self.table[&(*a, *b)].clone() + rev.scaled(Rat::from_integer(sign));
            if !residual.is_zero() {
                report.push(ViolationKind::Antisymmetry, vec![*a, *b], residual);
            }
        }
        report.sort();
        report
    }

    fn jacobi_residual(&self, a: Generator, b: Generator, c: Generator) -> Element {
        let sign = |x: Generator, y: Generator| -> Rat {
            Rat::from_integer(if x.is_odd() && y.is_odd() { -1 } else { 1 })
        };
        let t1 = self
            .bracket_gen_elem(a, &self.bracket_basis(b, c))
            .scaled(sign(a, c));
        let t2 = self
            .bracket_gen_elem(b, &self.bracket_basis(c, a))
            .scaled(sign(b, a));
        let t3 = self
            .bracket_gen_elem(c, &self.bracket_basis(a, b))
            .scaled(sign(c, b));
        t1 + t2 + t3
    }

    /// Brute-force super Jacobi check over every unordered triple of basis
    /// generators, repetitions included.
    pub fn verify_super_jacobi(&self) -> ViolationReport {
        let n = self.generators.len();
        let mut entries: Vec<Violation> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut local = Vec::new();
                let a = self.generators[i];
                for j in i..n {
                    let b = self.generators[j];
                    for k in j..n {
                        let c = self.generators[k];
                        let residual = self.jacobi_residual(a, b, c);
                        if !residual.is_zero() {
                            local.push(Violation {
                                kind: ViolationKind::Jacobi,
                                witnesses: vec![a, b, c],
                                residual,
                            });
                        }
                    }
                }
                local
            })
            .collect();
        entries.sort_by(|a, b| a.witnesses.cmp(&b.witnesses));
        ViolationReport { entries }
    }

    /// Checks that every generator is an exact eigenvector of `ad grader`
    /// with the assigned weight.
    pub fn verify_weight_grading(
        &self,
        grader: Generator,
        weights: &BTreeMap<Generator, HalfInt>,
    ) -> Result<ViolationReport> {
        if !self.contains(&grader) {
            return Err(Error::UnknownGenerator(grader));
        }
        let mut report = ViolationReport::default();
        for g in &self.generators {
            let w = weights.get(g).ok_or(Error::MissingWeight(*g))?;
            let residual = self.bracket_basis(grader, *g) - Element::term(*g, w.as_rat());
            if !residual.is_zero() {
                report.push(ViolationKind::Grading, vec![grader, *g], residual);
            }
        }
        report.sort();
        Ok(report)
    }

    /// Checks that the subset closes under the bracket; failures carry the
    /// escaping part of the bracket as residual.
    pub fn verify_subalgebra_closure(&self, subset: &[Generator]) -> Result<ViolationReport> {
        for g in subset {
            if !self.contains(g) {
                return Err(Error::UnknownGenerator(*g));
            }
        }
        let members: BTreeSet<Generator> = subset.iter().copied().collect();
        let mut report = ViolationReport::default();
        let ordered: Vec<Generator> = members.iter().copied().collect();
        for (i, a) in ordered.iter().enumerate() {
            for b in &ordered[i..] {
                let escape = self.bracket_basis(*a, *b).outside(|g| members.contains(g));
                if !escape.is_zero() {
                    report.push(ViolationKind::Closure, vec![*a, *b], escape);
                }
            }
        }
        report.sort();
        Ok(report)
    }
}
