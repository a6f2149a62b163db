//! Randomized structural invariants: normal-ordered multiplication is
//! associative, the graded commutator is graded-antisymmetric, and brackets
//! are bilinear.

use proptest::prelude::*;

use gsca::oscillator::IdealAlgebra;
use gsca::{build, BuildSpec, CentralKind, Element, Family, Generator, HalfInt, OscExpr, Rat};

fn mass_ideal() -> IdealAlgebra {
    IdealAlgebra::new(
        Family::StandardSuper,
        2,
        HalfInt::from_twice(3),
        CentralKind::Mass,
    )
    .unwrap()
}

/// All ideal letters of the 2l = 3, d = 2 mass-extended standard ideal.
fn letters() -> Vec<Generator> {
    use Generator::*;
    let mut out = Vec::new();
    for i in 1..=2u32 {
        for n in 0..=3u32 {
            out.push(P(n, i));
        }
        for n in 0..=2u32 {
            out.push(X(n, i));
            out.push(Xbar(n, i));
        }
        for n in 0..=1u32 {
            out.push(J(n, i));
        }
    }
    out
}

fn letter() -> impl Strategy<Value = Generator> {
    let ls = letters();
    (0..ls.len()).prop_map(move |k| ls[k])
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in letter(), b in letter(), c in letter()) {
        let alg = mass_ideal();
        let (ea, eb, ec) = (OscExpr::letter(a), OscExpr::letter(b), OscExpr::letter(c));
        let left = alg.multiply(&alg.multiply(&ea, &eb).unwrap(), &ec).unwrap();
        let right = alg.multiply(&ea, &alg.multiply(&eb, &ec).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn commutator_is_graded_antisymmetric(a in letter(), b in letter()) {
        let alg = mass_ideal();
        let (ea, eb) = (OscExpr::letter(a), OscExpr::letter(b));
        let ab = alg.graded_commutator(&ea, &eb).unwrap();
        let ba = alg.graded_commutator(&eb, &ea).unwrap();
        let sign = if a.is_odd() && b.is_odd() { 1 } else { -1 };
        prop_assert_eq!(ab, ba.scaled(Rat::from_integer(sign)));
    }

    #[test]
    fn bracket_is_bilinear(
        i in 0usize..8, j in 0usize..8, k in 0usize..8,
        c1 in -4i64..=4, c2 in -4i64..=4,
    ) {
        let spec = BuildSpec::new(
            Family::StandardSuper,
            1,
            HalfInt::from_twice(3),
            CentralKind::Mass,
        );
        let alg = build(&spec).unwrap();
        let gens = alg.generators();
        let (a, b, c) = (gens[i % gens.len()], gens[j % gens.len()], gens[k % gens.len()]);
        let x = Element::int_term(a, c1) + Element::int_term(b, c2);
        let y = Element::generator(c);
        let lhs = alg.bracket(&x, &y).unwrap();
        let rhs = alg.bracket(&Element::int_term(a, c1), &y).unwrap()
            + alg.bracket(&Element::int_term(b, c2), &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
