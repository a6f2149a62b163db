//! The interchange documents: a self-describing JSON algebra dump with
//! exact rational-string coefficients, and the verification report.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use gsca::builders::d_weights;
use gsca::{
    CentralKind, Element, Error, Family, Generator, HalfInt, Rat, Superalgebra, ViolationReport,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDoc {
    pub family: String,
    pub d: u32,
    pub twice_ell: i64,
    pub central: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorDoc {
    pub name: String,
    pub indices: Vec<u32>,
    pub parity: String,
    pub d_weight: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub generator: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketDoc {
    pub left: String,
    pub right: String,
    pub result: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub schema_version: u32,
    pub spec: SpecDoc,
    pub generators: Vec<GeneratorDoc>,
    pub brackets: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub kind: String,
    pub witnesses: Vec<String>,
    pub residual: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub check: String,
    pub spec: SpecDoc,
    pub status: String,
    pub violations: Vec<ViolationDoc>,
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Gca => "gca",
        Family::StandardSuper => "standard",
        Family::ExoticSuper => "exotic-super",
        Family::N1Super => "n1",
    }
}

pub fn parse_family(s: &str) -> Result<Family, Error> {
    match s {
        "gca" => Ok(Family::Gca),
        "standard" => Ok(Family::StandardSuper),
        "exotic-super" => Ok(Family::ExoticSuper),
        "n1" => Ok(Family::N1Super),
        _ => Err(Error::IllegalSpec(format!("unknown family '{s}'"))),
    }
}

pub fn central_name(c: CentralKind) -> &'static str {
    match c {
        CentralKind::None => "none",
        CentralKind::Mass => "mass",
        CentralKind::Exotic => "exotic",
    }
}

pub fn parse_central(s: &str) -> Result<CentralKind, Error> {
    match s {
        "none" => Ok(CentralKind::None),
        "mass" => Ok(CentralKind::Mass),
        "exotic" => Ok(CentralKind::Exotic),
        _ => Err(Error::IllegalSpec(format!("unknown central kind '{s}'"))),
    }
}

fn gen_name(g: &Generator) -> (String, Vec<u32>) {
    use Generator::*;
    match g {
        D => ("D".into(), vec![]),
        H => ("H".into(), vec![]),
        C => ("C".into(), vec![]),
        M(i, j) => ("M".into(), vec![*i, *j]),
        P(n, i) => ("P".into(), vec![*n, *i]),
        Q => ("Q".into(), vec![]),
        Qbar => ("Qbar".into(), vec![]),
        Qstar => ("Qstar".into(), vec![]),
        S => ("S".into(), vec![]),
        Sbar => ("Sbar".into(), vec![]),
        Sstar => ("Sstar".into(), vec![]),
        R => ("R".into(), vec![]),
        X(n, i) => ("X".into(), vec![*n, *i]),
        Xbar(n, i) => ("Xbar".into(), vec![*n, *i]),
        J(n, i) => ("J".into(), vec![*n, *i]),
        CentralM => ("CentralM".into(), vec![]),
        CentralTheta => ("CentralTheta".into(), vec![]),
        Aux(u) => ("Aux".into(), vec![*u]),
    }
}

/// Compact one-string form used inside bracket entries: `P[0,1]`, `Qbar`.
fn gen_key(g: &Generator) -> String {
    let (name, idx) = gen_name(g);
    if idx.is_empty() {
        name
    } else {
        let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        format!("{}[{}]", name, parts.join(","))
    }
}

fn parse_gen(s: &str) -> Result<Generator, Error> {
    use Generator::*;
    let bad = || Error::IllegalSpec(format!("unparsable generator '{s}'"));
    let (name, idx) = match s.find('[') {
        Some(p) => {
            let inner = s[p..].strip_prefix('[').and_then(|t| t.strip_suffix(']'));
            let inner = inner.ok_or_else(bad)?;
            let idx: Vec<u32> = inner
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?;
            (&s[..p], idx)
        }
        None => (s, Vec::new()),
    };
    let two = |idx: &[u32]| -> Result<(u32, u32), Error> {
        match idx {
            [a, b] => Ok((*a, *b)),
            _ => Err(bad()),
        }
    };
    Ok(match name {
        "D" => D,
        "H" => H,
        "C" => C,
        "Q" => Q,
        "Qbar" => Qbar,
        "Qstar" => Qstar,
        "S" => S,
        "Sbar" => Sbar,
        "Sstar" => Sstar,
        "R" => R,
        "CentralM" => CentralM,
        "CentralTheta" => CentralTheta,
        "M" => {
            let (i, j) = two(&idx)?;
            M(i, j)
        }
        "P" => {
            let (n, i) = two(&idx)?;
            P(n, i)
        }
        "X" => {
            let (n, i) = two(&idx)?;
            X(n, i)
        }
        "Xbar" => {
            let (n, i) = two(&idx)?;
            Xbar(n, i)
        }
        "J" => {
            let (n, i) = two(&idx)?;
            J(n, i)
        }
        "Aux" => match idx[..] {
            [u] => Aux(u),
            _ => return Err(bad()),
        },
        _ => return Err(bad()),
    })
}

fn rat_string(c: &Rat) -> String {
    c.to_string()
}

fn parse_rat(s: &str) -> Result<Rat, Error> {
    Rat::from_str(s).map_err(|_| Error::IllegalSpec(format!("unparsable rational '{s}'")))
}

fn element_terms(e: &Element) -> Vec<TermDoc> {
    e.iter()
        .map(|(g, c)| TermDoc {
            generator: gen_key(g),
            coefficient: rat_string(c),
        })
        .collect()
}

/// Serializes an algebra into the interchange document. Generator order and
/// bracket order follow the canonical generator order, so the output is a
/// pure function of the algebra.
pub fn export_algebra(alg: &Superalgebra) -> AlgebraDocument {
    let weights = d_weights(alg);
    let generators = alg
        .generators()
        .iter()
        .map(|g| {
            let (name, indices) = gen_name(g);
            GeneratorDoc {
                name,
                indices,
                parity: if g.is_odd() { "odd" } else { "even" }.into(),
                d_weight: weights
                    .get(g)
                    .map(|w| w.to_string())
                    .unwrap_or_else(|| "0".into()),
            }
        })
        .collect();
    let brackets = alg
        .table()
        .iter()
        .map(|((a, b), e)| BracketDoc {
            left: gen_key(a),
            right: gen_key(b),
            result: element_terms(e),
        })
        .collect();
    AlgebraDocument {
        schema_version: SCHEMA_VERSION,
        spec: SpecDoc {
            family: family_name(alg.family).into(),
            d: alg.d,
            twice_ell: alg.ell.twice(),
            central: central_name(alg.central).into(),
        },
        generators,
        brackets,
    }
}

/// Rebuilds the algebra held in a document, verbatim — no structure
/// constants are recomputed, so this doubles as the entry point for
/// user-supplied tables.
pub fn import_algebra(doc: &AlgebraDocument) -> Result<Superalgebra, Error> {
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::IllegalSpec(format!(
            "unsupported schema version {}",
            doc.schema_version
        )));
    }
    let family = parse_family(&doc.spec.family)?;
    let central = parse_central(&doc.spec.central)?;
    let ell = HalfInt::from_twice(doc.spec.twice_ell);
    let generators: Vec<Generator> = doc
        .generators
        .iter()
        .map(|g| parse_gen(&gen_key_from_doc(g)))
        .collect::<Result<_, _>>()?;
    let mut table: BTreeMap<(Generator, Generator), Element> = BTreeMap::new();
    for b in &doc.brackets {
        let left = parse_gen(&b.left)?;
        let right = parse_gen(&b.right)?;
        let mut e = Element::zero();
        for t in &b.result {
            e.add_term(parse_gen(&t.generator)?, parse_rat(&t.coefficient)?);
        }
        table.insert((left, right), e);
    }
    Superalgebra::from_parts(family, doc.spec.d, ell, central, generators, table)
}

fn gen_key_from_doc(g: &GeneratorDoc) -> String {
    if g.indices.is_empty() {
        g.name.clone()
    } else {
        let parts: Vec<String> = g.indices.iter().map(|i| i.to_string()).collect();
        format!("{}[{}]", g.name, parts.join(","))
    }
}

pub fn report_from_violations(
    check: &str,
    spec: SpecDoc,
    report: &ViolationReport,
) -> ReportDocument {
    let violations = report
        .entries
        .iter()
        .map(|v| ViolationDoc {
            kind: v.kind.to_string(),
            witnesses: v.witnesses.iter().map(gen_key).collect(),
            residual: element_terms(&v.residual),
        })
        .collect::<Vec<_>>();
    ReportDocument {
        schema_version: SCHEMA_VERSION,
        check: check.into(),
        spec,
        status: if violations.is_empty() {
            "pass"
        } else {
            "fail"
        }
        .into(),
        violations,
    }
}

pub fn spec_doc(family: Family, d: u32, twice_ell: i64, central: CentralKind) -> SpecDoc {
    SpecDoc {
        family: family_name(family).into(),
        d,
        twice_ell,
        central: central_name(central).into(),
    }
}

/// Canonical textual form of a document: pretty JSON plus a trailing
/// newline. Byte-stable because every collection is ordered.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable document");
    s.push('\n');
    s
}
