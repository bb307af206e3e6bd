mod common;

use common::{config_a, config_b, config_c, config_mixed, config_trivial_gamma0};
use contact_lie::algebra::Algebra;
use contact_lie::lattice::AlgebraConfig;
use contact_lie::properties::{derivation_rules, jacobi_skew, pi_additivity, product_rules};

fn configs() -> Vec<(&'static str, AlgebraConfig)> {
    vec![
        ("A", config_a()),
        ("B", config_b()),
        ("C", config_c()),
        ("mixed", config_mixed()),
        ("trivial-gamma0", config_trivial_gamma0()),
    ]
}

#[test]
fn jacobi_and_skew_symmetry() {
    for (name, cfg) in configs() {
        let r = jacobi_skew(&Algebra::new(cfg), 60, 11);
        assert!(r.passed(), "{name}:\n{r}");
    }
}

#[test]
fn product_rules_hold() {
    for (name, cfg) in configs() {
        let r = product_rules(&Algebra::new(cfg), 40, 12);
        assert!(r.passed(), "{name}:\n{r}");
    }
}

#[test]
fn derivation_rules_hold() {
    for (name, cfg) in configs() {
        let r = derivation_rules(&Algebra::new(cfg), 40, 20, 13);
        assert!(r.passed(), "{name}:\n{r}");
    }
}

#[test]
fn pi_is_additive() {
    for (name, cfg) in configs() {
        let r = pi_additivity(&Algebra::new(cfg), 100, 14);
        assert!(r.passed(), "{name}:\n{r}");
    }
}

#[test]
fn reports_are_deterministic() {
    let a = Algebra::new(config_mixed());
    assert_eq!(jacobi_skew(&a, 10, 5), jacobi_skew(&a, 10, 5));
}
