//! Randomized invariants of the combinatorial and group-algebra layers.

use proptest::prelude::*;
use tenscat_core::symgroup::Ambient;
use tenscat_core::{
    block_label, BiPartition, GroupAlgebraElement, GroupElement, Label, LieType, Partition, Permutation, Rational,
};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 0..5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn bipartition() -> impl Strategy<Value = BiPartition> {
    (partition(), partition()).prop_map(|(a, b)| BiPartition::new(a, b))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(&v).unwrap())
}

/// Small integer combinations of elements of `S_3`.
fn s3_element() -> impl Strategy<Value = GroupAlgebraElement> {
    prop::collection::vec((permutation(3), -3i64..4), 0..5).prop_map(|terms| {
        GroupAlgebraElement::from_terms(
            Ambient::Single(3),
            terms.into_iter().map(|(p, c)| (GroupElement::single(p), Rational::from_integer(c.into()))),
        )
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.size(), p.size());
        prop_assert_eq!(c.len(), p.row(0));
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn partition_text_roundtrip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn up_and_down_sets_are_inverse(p in partition()) {
        for big in p.up_set() {
            prop_assert_eq!(big.size(), p.size() + 1);
            prop_assert!(big.down_set().contains(&p));
        }
        for small in p.down_set() {
            prop_assert!(small.up_set().contains(&p));
        }
    }

    #[test]
    fn pieri_s2_adds_a_horizontal_domino(p in partition()) {
        for big in p.pieri_s2() {
            prop_assert_eq!(big.size(), p.size() + 2);
            // at most one new box per column
            let (bc, pc) = (big.conjugate(), p.conjugate());
            for j in 0..bc.len() {
                prop_assert!(bc.row(j) <= pc.row(j) + 1);
            }
        }
    }

    #[test]
    fn bipartition_text_and_perp(b in bipartition()) {
        prop_assert_eq!(b.to_string().parse::<BiPartition>().unwrap(), b.clone());
        prop_assert_eq!(b.perp().perp(), b.clone());
        prop_assert_eq!(b.perp().size(), b.size());
        prop_assert_eq!(block_label(LieType::Sl, &Label::Bi(b.perp())).unwrap(),
                        block_label(LieType::Sl, &Label::Bi(b)).unwrap());
    }

    #[test]
    fn permutation_group_laws(a in permutation(5), b in permutation(5), c in permutation(5)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).sign(), a.sign() * b.sign());
        prop_assert_eq!(a.compose(&b).cycle_type(), b.compose(&a).cycle_type());
        for i in 0..5 {
            prop_assert_eq!(a.compose(&b).apply(i), a.apply(b.apply(i)));
        }
    }

    #[test]
    fn cycle_notation_roundtrip(a in permutation(6)) {
        prop_assert_eq!(Permutation::parse_cycles(&a.to_string(), 6).unwrap(), a.clone());
        let line: Vec<String> = a.images().map(|i| (i + 1).to_string()).collect();
        prop_assert_eq!(line.join(" ").parse::<Permutation>().unwrap(), a);
    }

    #[test]
    fn group_algebra_is_associative(x in s3_element(), y in s3_element(), z in s3_element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn sign_twist_is_an_algebra_involution(x in s3_element(), y in s3_element()) {
        prop_assert_eq!(x.sign_twist().sign_twist(), x.clone());
        prop_assert_eq!((&x * &y).sign_twist(), &x.sign_twist() * &y.sign_twist());
    }

    #[test]
    fn antipode_reverses_products(x in s3_element(), y in s3_element()) {
        prop_assert_eq!((&x * &y).antipode(), &y.antipode() * &x.antipode());
        prop_assert_eq!(x.antipode().antipode(), x);
    }

    #[test]
    fn vector_roundtrip(x in s3_element()) {
        prop_assert_eq!(GroupAlgebraElement::from_vector(Ambient::Single(3), &x.to_vector()), x);
    }
}
