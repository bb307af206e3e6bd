mod common;

use common::{config_a, config_b, config_c, config_mixed};
use contact_lie::algebra::{Algebra, BasisKey, Element};
use contact_lie::analysis::{a0_list, ad_orbit, classify_locfin, in_center_b, nilpotency_bound, Verdict};
use contact_lie::lattice::{ExpVector, GammaVector};
use contact_lie::rational::int;
use contact_lie::sampling::Sampler;

#[test]
fn orbit_dims_are_nondecreasing() {
    let mut s = Sampler::new(41);
    for cfg in [config_a(), config_b(), config_c(), config_mixed()] {
        let alg = Algebra::new(cfg);
        for _ in 0..10 {
            let u = s.sparse_element(alg.config(), 2);
            let v = s.sparse_element(alg.config(), 2);
            let r = ad_orbit(&alg, &u, &v, 5);
            assert_eq!(r.dims.len(), 6);
            assert!(r.dims.windows(2).all(|w| w[0] <= w[1]));
            if let Verdict::Nilpotent(n) = r.verdict {
                let mut w = v.clone();
                for _ in 0..n {
                    w = alg.bracket(&u, &w).unwrap();
                }
                assert!(w.is_zero());
            }
        }
    }
}

#[test]
fn nilpotency_bound_in_the_mixed_layout() {
    let alg = Algebra::new(config_mixed());
    let cfg = alg.config();
    let l = &cfg.layout;
    let mut s = Sampler::new(42);
    // candidates: α on the I₄/I₅ coordinates, exponents on I₅ and I₆
    let (p4, p5, p6) = (l.pos(4), l.pos(5), l.pos(6));
    let p6b = l.pos(l.bar(6).unwrap());
    let mut checked = 0;
    for a in 0..=2i64 {
        for b in 0..=2i64 {
            for (i5, i6, i6b) in [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)] {
                let mut alpha = GammaVector::zero(alg.dim());
                alpha.set(p4, int(a));
                alpha.set(p5, int(b));
                let mut i = ExpVector::zero(alg.dim());
                i.set(p5, i5);
                i.set(p6, i6);
                i.set(p6b, i6b);
                let k = BasisKey::new(alpha, i);
                if !classify_locfin(&alg, &k).in_a1 {
                    continue;
                }
                checked += 1;
                let u = Element::monomial(k.clone(), int(1));
                for _ in 0..5 {
                    let v = s.sparse_key(cfg, 3, 2);
                    let m = nilpotency_bound(&alg, &k, &v).unwrap();
                    let mut w = Element::monomial(v.clone(), int(1));
                    for _ in 0..m {
                        w = alg.bracket(&u, &w).unwrap();
                    }
                    assert!(w.is_zero(), "u = {k}, v = {v}, m = {m}");
                }
            }
        }
    }
    // t_r² for r ∈ I6 is always an A1 member
    let t6 = l.set(6).next().unwrap();
    let sq = BasisKey::new(GammaVector::zero(alg.dim()), ExpVector::unit(alg.dim(), l.pos(t6), 2));
    assert!(classify_locfin(&alg, &sq).in_a1);
    assert!(checked > 0);
}

#[test]
fn a0_members_are_in_their_own_class() {
    for cfg in [config_a(), config_b(), config_c(), config_mixed()] {
        let alg = Algebra::new(cfg);
        for (_, e) in a0_list(&alg) {
            let k = e.keys().next().unwrap();
            assert!(classify_locfin(&alg, k).in_a0);
        }
    }
}

#[test]
fn center_elements_commute_with_lattice_monomials() {
    let mut s = Sampler::new(43);
    for cfg in [config_a(), config_c(), config_mixed()] {
        let alg = Algebra::new(cfg);
        for _ in 0..30 {
            let alpha = s.alpha(alg.config());
            if !in_center_b(&alg, &alpha).unwrap() {
                continue;
            }
            let x = Element::monomial(BasisKey::new(alpha, ExpVector::zero(alg.dim())), int(1));
            for _ in 0..5 {
                let y = Element::monomial(s.lattice_key(alg.config()), int(1));
                assert!(alg.bracket(&x, &y).unwrap().is_zero());
            }
        }
    }
}
