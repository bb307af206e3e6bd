use contact_lie::indexing::{Layout, J0};
use contact_lie::lattice::{AlgebraConfig, GammaVector, GroupLattice};
use contact_lie::rational::{frac, int, Rational};
use proptest::prelude::*;

fn lattice(gens: &[Vec<(i64, i64)>]) -> GroupLattice {
    let dim = gens.first().map_or(1, Vec::len);
    let v = gens.iter().map(|g| GammaVector::from_coords(g.iter().map(|&(n, d)| frac(n, d)).collect())).collect();
    GroupLattice::new(dim, v).unwrap()
}

fn gens_strategy() -> impl Strategy<Value = Vec<Vec<(i64, i64)>>> {
    (1usize..4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec((-6i64..7, 1i64..4), 3), n))
}

proptest! {
    #[test]
    fn combinations_are_members(gens in gens_strategy(), coeffs in prop::collection::vec(-5i64..6, 3)) {
        let l = lattice(&gens);
        let c = &coeffs[..gens.len()];
        let v = l.combine(c).unwrap();
        prop_assert!(l.contains(&v));
        let back = l.express(&v).unwrap();
        let rebuilt = l.combine(&back.iter().map(|b| i64::try_from(b).unwrap()).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(rebuilt, v);
    }

    #[test]
    fn halves_of_odd_vectors_are_rejected(a in -5i64..6, b in -5i64..6) {
        let l = lattice(&[vec![(1, 1), (0, 1), (0, 1)], vec![(0, 1), (1, 1), (0, 1)]]);
        let v = GammaVector::from_coords(vec![frac(2 * a + 1, 2), int(b), Rational::from_integer(0.into())]);
        prop_assert!(!l.contains(&v));
        prop_assert!(l.in_span(&v));
    }
}

#[test]
fn torsion_order_modulo_lattice() {
    let l = lattice(&[vec![(2, 1), (0, 1), (0, 1)], vec![(0, 1), (1, 3), (0, 1)]]);
    assert_eq!(l.order_modulo(&GammaVector::from_ints(&[1, 0, 0])).unwrap(), 2.into());
    assert_eq!(l.order_modulo(&GammaVector::from_ints(&[0, 1, 0])).unwrap(), 1.into());
    assert!(l.order_modulo(&GammaVector::from_ints(&[0, 0, 1])).is_none());
}

#[test]
fn sigma_vectors_are_independent() {
    let layout = Layout::new([1, 1, 1, 1, 1, 1]).unwrap();
    let cfg = AlgebraConfig::new(layout, false, GroupLattice::new(13, vec![]).unwrap(), J0::Nat).unwrap();
    let sigmas: Vec<GammaVector> = (1..=5).map(|p| cfg.sigma(p).unwrap()).collect();
    let span = GroupLattice::new(13, sigmas.clone()).unwrap();
    assert_eq!(span.rank(), 5);
    for p in 1..=6 {
        assert_eq!(cfg.sigma(p).unwrap(), cfg.sigma(p + 6).unwrap());
    }
    assert!(cfg.sigma(6).unwrap().is_zero());
}
