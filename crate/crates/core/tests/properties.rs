use proptest::prelude::*;

use helly_core::betti::{betti_table_koszul, projective_dimension, regularity};
use helly_core::exactla::{Field, SparseMatrix};
use helly_core::generate::{
    color_preserving_substitution, random_colored_ideal, random_complex, random_monomial_ideal, rng,
};
use helly_core::monomial::{
    codim, complex_from_squarefree_ideal, stanley_reisner_ideal, ColoredRing,
};
use helly_core::multigraded::MultigradedIdeal;
use helly_core::simplicial::{alexander_dual, reduced_homology_dims};
use helly_core::text::{complex_to_text, parse_complex, parse_ideal};

const Q: Field = Field::Rationals;

fn dense(field: Field, rows: &[Vec<i64>]) -> SparseMatrix {
    SparseMatrix::from_dense(field, rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 1..6)) {
        let m = dense(Q, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert!(m.rank() <= rows.len().min(4));
    }

    #[test]
    fn rank_of_product_is_bounded(
        a in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..5),
        b in prop::collection::vec(prop::collection::vec(-2i64..=2, 4), 3..=3),
    ) {
        let (ma, mb) = (dense(Q, &a), dense(Q, &b));
        let p = ma.mul(&mb).unwrap();
        prop_assert!(p.rank() <= ma.rank().min(mb.rank()));
    }

    #[test]
    fn kernel_has_complementary_dimension(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..5)) {
        let m = dense(Field::Prime(7), &rows);
        prop_assert_eq!(m.kernel_basis().len() + m.rank(), 5);
    }

    #[test]
    fn alexander_dual_is_an_involution(seed in any::<u64>(), n in 1usize..7) {
        let c = random_complex(&mut rng(seed), n, n + 2, n);
        prop_assert_eq!(alexander_dual(&alexander_dual(&c)), c);
    }

    #[test]
    fn complex_text_round_trips(seed in any::<u64>(), n in 1usize..7) {
        let c = random_complex(&mut rng(seed), n, n + 2, n);
        prop_assert_eq!(parse_complex(&complex_to_text(&c)).unwrap(), c);
    }

    #[test]
    fn stanley_reisner_round_trips(seed in any::<u64>(), n in 1usize..7) {
        let c = random_complex(&mut rng(seed), n, n + 2, n);
        let i = stanley_reisner_ideal(&c, &ColoredRing::numbered("x", n)).unwrap();
        let back = complex_from_squarefree_ideal(&i).unwrap();
        prop_assert_eq!(back.facets(), c.facets());
    }

    #[test]
    fn euler_characteristic_of_resolution_vanishes(seed in any::<u64>(), n in 1usize..5) {
        let i = random_monomial_ideal(&mut rng(seed), n, 4, 3).unwrap();
        let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&i, Q), None).unwrap();
        let chi: i64 = (0..=n).map(|p| if p % 2 == 0 { 1 } else { -1 } * t.total_betti(p) as i64).sum();
        prop_assert_eq!(chi, 0);
        prop_assert_eq!(t.total_betti(0), 1);
        prop_assert!(projective_dimension(&t).unwrap() <= n);
    }

    #[test]
    fn codim_bounded_by_projective_dimension(seed in any::<u64>(), n in 1usize..5) {
        let i = random_monomial_ideal(&mut rng(seed), n, 4, 3).unwrap();
        let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&i, Q), None).unwrap();
        prop_assert!(codim(&i).unwrap() <= projective_dimension(&t).unwrap());
    }

    #[test]
    fn regularity_at_least_generator_degree(seed in any::<u64>(), n in 1usize..5) {
        let i = random_monomial_ideal(&mut rng(seed), n, 4, 3).unwrap();
        let t = betti_table_koszul(&MultigradedIdeal::from_monomial(&i, Q), None).unwrap();
        let top = i.generators().iter().map(|g| g.degree()).max().unwrap();
        prop_assert!(regularity(&t).unwrap() >= top);
    }

    #[test]
    fn betti_numbers_survive_color_preserving_substitution(seed in any::<u64>()) {
        let i = random_colored_ideal(&mut rng(seed), 4, 2, 1, 2).unwrap();
        let mi = MultigradedIdeal::from_monomial(&i, Q);
        let g = color_preserving_substitution(&mut rng(seed ^ 1), &mi).unwrap();
        let a = betti_table_koszul(&mi, None).unwrap();
        let b = betti_table_koszul(&g, None).unwrap();
        prop_assert_eq!(a.entries().collect::<Vec<_>>(), b.entries().collect::<Vec<_>>());
        prop_assert_eq!(parse_ideal(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn homology_does_not_depend_on_the_prime(seed in any::<u64>(), n in 1usize..6) {
        // Torsion first appears with six vertices.
        let c = random_complex(&mut rng(seed), n, n + 2, n);
        prop_assert_eq!(
            reduced_homology_dims(&c, Q).unwrap(),
            reduced_homology_dims(&c, Field::Prime(2)).unwrap()
        );
    }
}
