//! Fixed inputs shared by the benchmarks.

use helly_core::generate::{m_power, random_complex, random_squarefree_ideal, rng};
use helly_core::monomial::ColoredRing;
use helly_core::{Field, MonomialIdeal, MultigradedIdeal, SimplicialComplex};

pub const Q: Field = Field::Rationals;

/// Complete intersection of pure-color degrees 3, 4 and 5.
pub fn complete_intersection() -> MultigradedIdeal {
    let ring = ColoredRing::new(vec!["x".into(), "y".into(), "z".into()], vec![1, 2, 3])
        .expect("valid ring");
    let i = MonomialIdeal::parse(ring, &["x^3", "y^4", "z^5"]).expect("valid ideal");
    MultigradedIdeal::from_monomial(&i, Q)
}

pub fn maximal_power(r: usize, d: u32) -> MultigradedIdeal {
    MultigradedIdeal::from_monomial(&m_power(r, d), Q)
}

pub fn squarefree(seed: u64, n: usize) -> MonomialIdeal {
    random_squarefree_ideal(&mut rng(seed), n, n + 2).expect("valid ideal")
}

pub fn complex(seed: u64, n: usize) -> SimplicialComplex {
    random_complex(&mut rng(seed), n, n + 2, n)
}
