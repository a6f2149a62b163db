//! Second-cohomology computation for the standard super family at d = 1:
//! decorate the weight-compatible brackets with formal central unknowns,
//! harvest the linear constraints the super Jacobi identity imposes, and
//! certify that every solution is a coboundary of a `P`-tower shift.

use std::collections::BTreeMap;

use crate::algebra::{CentralKind, Family, Superalgebra};
use crate::builders::{build, BuildSpec};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::generator::Generator;
use crate::halfint::HalfInt;
use crate::Rat;

/// The decorated algebra together with the bracket pair carrying each
/// unknown. `Aux(u)` in a table entry stands for "unknown number u times the
/// would-be central generator".
#[derive(Debug, Clone)]
pub struct CentralAnsatz {
    pub base: Superalgebra,
    pub decorated: Superalgebra,
    pub unknowns: Vec<(Generator, Generator)>,
}

/// Decorates the d = 1 standard super algebra. Unknowns sit on the brackets
/// whose right-hand side can reach the `P` tower: the sl(2) action on `P`
/// and the four odd pairings landing on `P` and `J`.
pub fn build_ansatz(ell: HalfInt) -> Result<CentralAnsatz> {
    use Generator::*;
    let spec = BuildSpec::new(Family::StandardSuper, 1, ell, CentralKind::None);
    let base = build(&spec)?;
    let tl = ell.twice();

    let mut unknowns: Vec<(Generator, Generator)> = Vec::new();
    for n in 0..=tl as u32 {
        unknowns.push((D, P(n, 1)));
        unknowns.push((H, P(n, 1)));
        unknowns.push((C, P(n, 1)));
    }
    for n in 0..tl as u32 {
        unknowns.push((Q, Xbar(n, 1)));
        unknowns.push((Qbar, X(n, 1)));
        unknowns.push((S, Xbar(n, 1)));
        unknowns.push((Sbar, X(n, 1)));
    }

    let mut generators: Vec<Generator> = base.generators().to_vec();
    let mut table: BTreeMap<(Generator, Generator), Element> = base.table().clone();
    for (u, (a, b)) in unknowns.iter().enumerate() {
        let aux = Aux(u as u32);
        generators.push(aux);
        // Collapse to a single stored orientation so the unknown is seen
        // consistently from both sides.
        let entry = base.bracket_basis(*a, *b) + Element::generator(aux);
        table.remove(&(*b, *a));
        table.insert((*a, *b), entry);
    }
    generators.sort();

    let decorated = Superalgebra::from_parts(
        Family::StandardSuper,
        1,
        ell,
        CentralKind::None,
        generators,
        table,
    )?;
    Ok(CentralAnsatz {
        base,
        decorated,
        unknowns,
    })
}

/// Constraint rows over the unknowns, one per failing Jacobi triple of the
/// decorated algebra.
pub fn jacobi_constraint_rows(ansatz: &CentralAnsatz) -> Result<Vec<Vec<Rat>>> {
    let n = ansatz.unknowns.len();
    let mut rows = Vec::new();
    for v in ansatz.decorated.verify_super_jacobi().entries {
        let mut row = vec![Rat::from_integer(0); n];
        for (g, c) in v.residual.iter() {
            match g {
                Generator::Aux(u) => row[*u as usize] = *c,
                other => {
                    return Err(Error::IllegalSpec(format!(
                        "undecorated residual on {other} for triple {:?}",
                        v.witnesses
                    )))
                }
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// In-place reduced row echelon form; returns the pivot columns.
fn rref(rows: &mut Vec<Vec<Rat>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != Rat::from_integer(0)) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::from_integer(1) / rows[r][col];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != Rat::from_integer(0) {
                let f = rows[i][col];
                for c in 0..rows[i].len() {
                    let sub = f * rows[r][c];
                    rows[i][c] -= sub;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Rank and a basis of the nullspace of the row system.
pub fn nullspace(rows: &[Vec<Rat>], width: usize) -> (usize, Vec<Vec<Rat>>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let pivots = rref(&mut m, width);
    let rank = pivots.len();
    let mut basis = Vec::new();
    for free in 0..width {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::from_integer(0); width];
        v[free] = Rat::from_integer(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free];
        }
        basis.push(v);
    }
    (rank, basis)
}

/// Solves `B s = v` by Gaussian elimination on the augmented system; `None`
/// when inconsistent. Free variables are set to zero.
fn solve(b: &[Vec<Rat>], v: &[Rat], width: usize) -> Option<Vec<Rat>> {
    let mut aug: Vec<Vec<Rat>> = b
        .iter()
        .zip(v)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    let pivots = rref(&mut aug, width + 1);
    if pivots.contains(&width) {
        return None;
    }
    let mut s = vec![Rat::from_integer(0); width];
    for (r, &pc) in pivots.iter().enumerate() {
        s[pc] = aug[r][width];
    }
    Some(s)
}

/// Generators eligible for a central shift `g -> g + s_g Z`: the even tower
/// levels. `J` shifts matter because the odd pairings carry `J` terms; at
/// integer spin they absorb the cocycles with opposite signs on the barred
/// and unbarred odd brackets.
fn shift_columns(ansatz: &CentralAnsatz) -> Vec<Generator> {
    let tl = ansatz.base.ell.twice();
    let mut cols: Vec<Generator> = (0..=tl).map(|n| Generator::P(n as u32, 1)).collect();
    for n in 0..tl - 1 {
        cols.push(Generator::J(n as u32, 1));
    }
    cols
}

/// The coboundary system: one row per stored bracket of the base algebra,
/// the decorated brackets first and in unknown order. The entry for column
/// `g` is the coefficient of `g` in that bracket, so a shift assignment `s`
/// changes the central part of row `(a, b)` by `sum_g coeff_g([a,b]) s_g`.
/// Rows for undecorated brackets pin those central parts to zero.
fn coboundary_system(
    ansatz: &CentralAnsatz,
) -> (Vec<(Generator, Generator)>, Vec<Vec<Rat>>, Vec<Generator>) {
    let cols = shift_columns(ansatz);
    let decorated: std::collections::BTreeSet<(Generator, Generator)> =
        ansatz.unknowns.iter().copied().collect();
    let mut keys: Vec<(Generator, Generator)> = ansatz.unknowns.clone();
    for (a, b) in ansatz.base.table().keys() {
        if !decorated.contains(&(*a, *b)) && !decorated.contains(&(*b, *a)) {
            keys.push((*a, *b));
        }
    }
    let matrix = keys
        .iter()
        .map(|(a, b)| {
            let e = ansatz.base.bracket_basis(*a, *b);
            cols.iter().map(|g| e.coeff(g)).collect()
        })
        .collect();
    (keys, matrix, cols)
}

/// Everything the triviality claim rests on, in exportable form.
#[derive(Debug, Clone)]
pub struct TrivialityCertificate {
    pub ell: HalfInt,
    pub n_unknowns: usize,
    pub n_constraints: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Basis of the solution space of the Jacobi constraints.
    pub cocycles: Vec<Vec<Rat>>,
    /// For each basis cocycle, the absorbing `P`-tower shift, indexed by
    /// level.
    pub shifts: Vec<Vec<Rat>>,
    /// Every cocycle was matched exactly by a coboundary.
    pub trivial: bool,
    /// The shifted decorated table is bit-identical to the undecorated one.
    pub shifted_identical: bool,
}

/// Builds the algebra obtained by assigning concrete values to the unknowns
/// and then applying the shift to every bracket, with `Aux(0)` playing the
/// central generator.
fn shifted_algebra(
    ansatz: &CentralAnsatz,
    keys: &[(Generator, Generator)],
    b: &[Vec<Rat>],
    rhs: &[Rat],
    s: &[Rat],
) -> Result<Superalgebra> {
    let mut generators: Vec<Generator> = ansatz.base.generators().to_vec();
    generators.push(Generator::Aux(0));
    generators.sort();
    let mut table = ansatz.base.table().clone();
    for (k, (a, bb)) in keys.iter().enumerate() {
        let absorbed: Rat = b[k].iter().zip(s).map(|(c, sg)| *c * *sg).sum();
        let central = rhs[k] - absorbed;
        let entry = ansatz.base.bracket_basis(*a, *bb) + Element::term(Generator::Aux(0), central);
        table.remove(&(*bb, *a));
        if entry.is_zero() {
            table.remove(&(*a, *bb));
        } else {
            table.insert((*a, *bb), entry);
        }
    }
    Superalgebra::from_parts(
        ansatz.base.family,
        ansatz.base.d,
        ansatz.base.ell,
        ansatz.base.central,
        generators,
        table,
    )
}

/// Runs the whole pipeline for the d = 1 standard super family.
pub fn certify_triviality(ell: HalfInt) -> Result<TrivialityCertificate> {
    let ansatz = build_ansatz(ell)?;
    let rows = jacobi_constraint_rows(&ansatz)?;
    let width = ansatz.unknowns.len();
    let (rank, cocycles) = nullspace(&rows, width);
    let (keys, b, cols) = coboundary_system(&ansatz);

    let mut shifts = Vec::new();
    let mut trivial = true;
    let mut shifted_identical = true;
    for v in &cocycles {
        let mut rhs = vec![Rat::from_integer(0); keys.len()];
        rhs[..width].copy_from_slice(v);
        match solve(&b, &rhs, cols.len()) {
            Some(s) => {
                let shifted = shifted_algebra(&ansatz, &keys, &b, &rhs, &s)?;
                if shifted.table() != ansatz.base.table() {
                    shifted_identical = false;
                }
                shifts.push(s);
            }
            None => {
                trivial = false;
                shifts.push(Vec::new());
            }
        }
    }

    Ok(TrivialityCertificate {
        ell,
        n_unknowns: width,
        n_constraints: rows.len(),
        rank,
        nullity: cocycles.len(),
        cocycles,
        shifts,
        trivial: trivial && shifted_identical,
        shifted_identical,
    })
}

/// Independent row-reduction oracle: rank of the constraint matrix by
/// fraction-free Bareiss elimination over exact integers, a different
/// algorithm and number type than `nullspace` uses. Returns the nullity.
pub fn bareiss_nullity(rows: &[Vec<Rat>], width: usize) -> usize {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs().max(1)
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            let lcm = r
                .iter()
                .fold(1i64, |acc, c| acc / gcd(acc, *c.denom()) * *c.denom());
            r.iter()
                .map(|c| *c.numer() as i128 * (lcm / *c.denom()) as i128)
                .collect()
        })
        .collect();
    let mut rank = 0usize;
    let mut prev: i128 = 1;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col];
        for i in rank + 1..m.len() {
            let head = m[i][col];
            for j in 0..width {
                m[i][j] = (pivot * m[i][j] - head * m[rank][j]) / prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    width - rank
}

/// Closed-form dimension count: the solution space assembled from the
/// recursions among the unknown families
/// `alpha(n), beta(n), gamma(n), c1(n), c1bar(n), c2(n), c2bar(n)` rather
/// than from a Jacobi scan. These recursions force `c = cbar` throughout,
/// which the full constraint set only implies at half-integer spin, so the
/// count is exact there and a lower bound at integer spin:
///
/// ```text
/// n alpha(n-1) + (2l - 2n + 2) beta(n)  = 0
/// (2l - n) alpha(n+1) - (2l - 2n - 2) gamma(n) = 0
/// alpha(n) + (2l - n) beta(n+1) + n gamma(n-1) = 0
/// beta(n) = n c1(n-1) = n c1bar(n-1)
/// gamma(n) = -(2l - n) c2(n) = -(2l - n) c2bar(n)
/// ```
pub fn analytic_nullity(ell: HalfInt) -> usize {
    let tl = ell.twice();
    // Unknown layout: alpha, beta, gamma of length tl+1 each, then the four
    // odd families of length tl.
    let len_even = (tl + 1) as usize;
    let len_odd = tl as usize;
    let width = 3 * len_even + 4 * len_odd;
    let alpha = |n: i64| n as usize;
    let beta = |n: i64| len_even + n as usize;
    let gamma = |n: i64| 2 * len_even + n as usize;
    let c1 = |n: i64| 3 * len_even + n as usize;
    let c1bar = |n: i64| 3 * len_even + len_odd + n as usize;
    let c2 = |n: i64| 3 * len_even + 2 * len_odd + n as usize;
    let c2bar = |n: i64| 3 * len_even + 3 * len_odd + n as usize;

    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut row = |entries: &[(usize, i64)]| {
        let mut r = vec![Rat::from_integer(0); width];
        for &(i, c) in entries {
            r[i] += Rat::from_integer(c);
        }
        rows.push(r);
    };

    for n in 0..=tl {
        let mut e = vec![(beta(n), tl - 2 * n + 2)];
        if n >= 1 {
            e.push((alpha(n - 1), n));
        }
        row(&e);

        let mut e = vec![(gamma(n), -(tl - 2 * n - 2))];
        if n + 1 <= tl {
            e.push((alpha(n + 1), tl - n));
        }
        row(&e);

        let mut e = vec![(alpha(n), 1)];
        if n + 1 <= tl {
            e.push((beta(n + 1), tl - n));
        }
        if n >= 1 {
            e.push((gamma(n - 1), n));
        }
        row(&e);

        let mut e = vec![(beta(n), 1)];
        if n >= 1 {
            e.push((c1(n - 1), -n));
        }
        row(&e);
        let mut e = vec![(beta(n), 1)];
        if n >= 1 {
            e.push((c1bar(n - 1), -n));
        }
        row(&e);

        let mut e = vec![(gamma(n), 1)];
        if n < tl {
            e.push((c2(n), tl - n));
        }
        row(&e);
        let mut e = vec![(gamma(n), 1)];
        if n < tl {
            e.push((c2bar(n), tl - n));
        }
        row(&e);
    }

    let (_, basis) = nullspace(&rows, width);
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_nullspace() {
        // x + y = 0, y + z = 0 over three unknowns: rank 2, nullspace
        // spanned by (1, -1, 1).
        let one = Rat::from_integer(1);
        let zero = Rat::from_integer(0);
        let rows = vec![vec![one, one, zero], vec![zero, one, one]];
        let (rank, basis) = nullspace(&rows, 3);
        assert_eq!(rank, 2);
        assert_eq!(basis.len(), 1);
        let v = &basis[0];
        assert_eq!(v[0] + v[1], zero);
        assert_eq!(v[1] + v[2], zero);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let one = Rat::from_integer(1);
        let zero = Rat::from_integer(0);
        let b = vec![vec![one, zero], vec![zero, one], vec![one, one]];
        let s = solve(&b, &[one, one, one + one], 2).unwrap();
        assert_eq!(s, vec![one, one]);
        assert!(solve(&b, &[one, one, zero], 2).is_none());
    }

    #[test]
    fn spin_half_certificate() {
        let cert = certify_triviality(HalfInt::from_twice(1)).unwrap();
        assert_eq!(cert.n_unknowns, 10);
        assert_eq!(cert.nullity, 2);
        assert!(cert.trivial);
        assert!(cert.shifted_identical);
    }

    #[test]
    fn oracles_agree() {
        // Frozen dimensions: 2l + 1 symmetric solutions at every spin, plus
        // one antisymmetric cocycle at 2l = 2 (absorbed by a J(0) shift, so
        // still trivial).
        let frozen = [2usize, 4, 4, 5];
        for tl in 1..=4i64 {
            let ell = HalfInt::from_twice(tl);
            let ansatz = build_ansatz(ell).unwrap();
            let rows = jacobi_constraint_rows(&ansatz).unwrap();
            let cert = certify_triviality(ell).unwrap();
            assert_eq!(
                bareiss_nullity(&rows, ansatz.unknowns.len()),
                cert.nullity,
                "2l = {tl}"
            );
            assert_eq!(cert.nullity, frozen[(tl - 1) as usize], "2l = {tl}");
            assert!(cert.trivial, "2l = {tl}");
            if tl % 2 == 1 {
                assert_eq!(analytic_nullity(ell), cert.nullity, "2l = {tl}");
            } else {
                assert!(analytic_nullity(ell) <= cert.nullity, "2l = {tl}");
            }
        }
    }
}
