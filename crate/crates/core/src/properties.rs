//! Seeded property runs over random elements.
//!
//! Every run returns a [`ValidationReport`] whose check lines carry the seed,
//! the sample count and, on failure, the first offending inputs.

use crate::algebra::{Algebra, Element};
use crate::analysis::pi_map;
use crate::rational::int;
use crate::report::ValidationReport;
use crate::sampling::Sampler;

const TERMS: usize = 2;

fn record<T>(
    r: &mut ValidationReport,
    name: &str,
    seed: u64,
    n: usize,
    unit: &str,
    mut case: impl FnMut(usize) -> Option<T>,
    show: impl Fn(T) -> String,
) {
    let bad = (0..n).find_map(&mut case);
    match bad {
        None => r.push(name, true, format!("{n} {unit}, seed {seed}")),
        Some(c) => r.push(name, false, format!("counterexample (seed {seed}): {}", show(c))),
    }
}

/// Jacobi identity on `samples` triples and skew-symmetry on `samples` pairs.
pub fn jacobi_skew(alg: &Algebra, samples: usize, seed: u64) -> ValidationReport {
    let cfg = alg.config();
    let mut s = Sampler::new(seed);
    let mut r = ValidationReport::new();
    record(
        &mut r,
        "jacobi",
        seed,
        samples,
        "triples",
        |_| {
            let (u, v, w) = (s.element(cfg, TERMS), s.element(cfg, TERMS), s.element(cfg, TERMS));
            let j = &(&alg.br(&u, &alg.br(&v, &w)) + &alg.br(&v, &alg.br(&w, &u))) + &alg.br(&w, &alg.br(&u, &v));
            (!j.is_zero()).then_some((u, v, w, j))
        },
        |(u, v, w, j)| format!("u = {u}; v = {v}; w = {w}; cyclic sum = {j}"),
    );
    record(
        &mut r,
        "skew-symmetry",
        seed,
        samples,
        "pairs",
        |_| {
            let (u, v) = (s.element(cfg, TERMS), s.element(cfg, TERMS));
            let sum = &alg.br(&u, &v) + &alg.br(&v, &u);
            (!sum.is_zero()).then_some((u, v, sum))
        },
        |(u, v, sum)| format!("u = {u}; v = {v}; [u,v]+[v,u] = {sum}"),
    );
    r
}

/// Poisson Leibniz rule, the contact-bracket product rule
/// `[u,vw] = [u,v]w + v[u,w] + 2x^{σ₀}∂₀(u)vw`, and the Frobenius identity
/// `P_{uv}(w₁,w₂) = u·P_v(w₁,w₂) + v·P_u(w₁,w₂)`.
pub fn product_rules(alg: &Algebra, samples: usize, seed: u64) -> ValidationReport {
    let cfg = alg.config();
    let mut s = Sampler::new(seed);
    let mut r = ValidationReport::new();
    let sig0 = x_sigma0(alg);
    let show3 = |(u, v, w, d): (Element, Element, Element, Element)| format!("u = {u}; v = {v}; w = {w}; defect = {d}");
    record(
        &mut r,
        "poisson-leibniz",
        seed,
        samples,
        "triples",
        |_| {
            let (u, v, w) = (s.element(cfg, TERMS), s.element(cfg, TERMS), s.element(cfg, TERMS));
            let lhs = alg.poisson_bracket(&u, &alg.mul(&v, &w)).ok()?;
            let rhs =
                &alg.mul(&alg.poisson_bracket(&u, &v).ok()?, &w) + &alg.mul(&v, &alg.poisson_bracket(&u, &w).ok()?);
            let d = &lhs - &rhs;
            (!d.is_zero()).then_some((u, v, w, d))
        },
        show3,
    );
    record(
        &mut r,
        "bracket-product-rule",
        seed,
        samples,
        "triples",
        |_| {
            let (u, v, w) = (s.element(cfg, TERMS), s.element(cfg, TERMS), s.element(cfg, TERMS));
            let vw = alg.mul(&v, &w);
            let lhs = alg.br(&u, &vw);
            let extra = alg.mul(&alg.mul(&sig0, &alg.d(0, &u)), &vw).scale(&int(2));
            let rhs = &(&alg.mul(&alg.br(&u, &v), &w) + &alg.mul(&v, &alg.br(&u, &w))) + &extra;
            let d = &lhs - &rhs;
            (!d.is_zero()).then_some((u, v, w, d))
        },
        show3,
    );
    record(
        &mut r,
        "frobenius",
        seed,
        samples,
        "quadruples",
        |_| {
            let (u, v) = (s.element(cfg, TERMS), s.element(cfg, TERMS));
            let (w1, w2) = (s.element(cfg, TERMS), s.element(cfg, TERMS));
            let lhs = alg.frobenius_defect(&alg.mul(&u, &v), &w1, &w2).ok()?;
            let rhs = &alg.mul(&u, &alg.frobenius_defect(&v, &w1, &w2).ok()?)
                + &alg.mul(&v, &alg.frobenius_defect(&u, &w1, &w2).ok()?);
            let d = &lhs - &rhs;
            (!d.is_zero()).then_some((u, v, w1, d))
        },
        show3,
    );
    r
}

/// `∂[u,v]₀ = [∂u,v]₀ + [u,∂v]₀ − 2[u,v]₀`, `∂₀[u,v]₀ = [∂₀u,v]₀ + [u,∂₀v]₀`
/// on `pairs` pairs, and pairwise commutation of all `∂_p` on `elements` elements.
pub fn derivation_rules(alg: &Algebra, pairs: usize, elements: usize, seed: u64) -> ValidationReport {
    let cfg = alg.config();
    let mut s = Sampler::new(seed);
    let mut r = ValidationReport::new();
    let pb = |u: &Element, v: &Element| alg.poisson_bracket(u, v).expect("sampled elements fit the configuration");
    let show2 = |(u, v, d): (Element, Element, Element)| format!("u = {u}; v = {v}; defect = {d}");
    record(
        &mut r,
        "euler-shift",
        seed,
        pairs,
        "pairs",
        |_| {
            let (u, v) = (s.element(cfg, TERMS), s.element(cfg, TERMS));
            let b = pb(&u, &v);
            let rhs = &(&pb(&alg.eu(&u), &v) + &pb(&u, &alg.eu(&v))) - &b.scale(&int(2));
            let d = &alg.eu(&b) - &rhs;
            (!d.is_zero()).then_some((u, v, d))
        },
        show2,
    );
    record(
        &mut r,
        "d0-derivation",
        seed,
        pairs,
        "pairs",
        |_| {
            let (u, v) = (s.element(cfg, TERMS), s.element(cfg, TERMS));
            let rhs = &pb(&alg.d(0, &u), &v) + &pb(&u, &alg.d(0, &v));
            let d = &alg.d(0, &pb(&u, &v)) - &rhs;
            (!d.is_zero()).then_some((u, v, d))
        },
        show2,
    );
    let l = &cfg.layout;
    let idx: Vec<usize> = (0..cfg.dim()).map(|pos| l.index_at(pos)).collect();
    record(
        &mut r,
        "partials-commute",
        seed,
        elements,
        "elements",
        |_| {
            let u = s.element(cfg, TERMS);
            for &p in &idx {
                for &q in &idx {
                    let d = &alg.d(p, &alg.d(q, &u)) - &alg.d(q, &alg.d(p, &u));
                    if !d.is_zero() {
                        return Some((p, q, u, d));
                    }
                }
            }
            None
        },
        |(p, q, u, d)| format!("p = {p}; q = {q}; u = {u}; commutator = {d}"),
    );
    r
}

/// `π(σ_p+α+β) = π(α)+π(β)` for random `α, β ∈ Γ` and `p ∈ Î₁₃`
/// (`σ_p̄ = σ_p`, so unbarred indices suffice).
///
/// When `Γ₀ = {0}` the index `0` is left out: `μ₀` is then the weight minus
/// two, which is not additive under `σ₀ = 0`.
pub fn pi_additivity(alg: &Algebra, samples: usize, seed: u64) -> ValidationReport {
    let cfg = alg.config();
    let mut s = Sampler::new(seed);
    let mut r = ValidationReport::new();
    let l = &cfg.layout;
    let first = usize::from(cfg.gamma0_trivial());
    let mut ps: Vec<usize> = (1..=l.iota()[2]).collect();
    if first == 0 {
        ps.push(0);
    }
    let mut applicable = 0usize;
    record(
        &mut r,
        "pi-additivity",
        seed,
        samples,
        "draws",
        |_| {
            let (a, b) = (s.alpha(cfg), s.alpha(cfg));
            if ps.is_empty() {
                return None;
            }
            let p = ps[s.below(ps.len())];
            let sum = &(alg.sigma(p) + &a) + &b;
            if !cfg.gamma.contains(&sum) {
                return None;
            }
            applicable += 1;
            let lhs = pi_map(alg, &sum).ok()?.0;
            let (pa, pb) = (pi_map(alg, &a).ok()?.0, pi_map(alg, &b).ok()?.0);
            let rhs: Vec<_> = pa.iter().zip(&pb).map(|(x, y)| x + y).collect();
            (lhs != rhs).then_some((p, a, b))
        },
        |(p, a, b)| format!("p = {p}; alpha = {a}; beta = {b}"),
    );
    if let Some(c) = r.checks.last_mut() {
        c.detail.push_str(&format!(" ({applicable} applicable)"));
    }
    r
}

fn x_sigma0(alg: &Algebra) -> Element {
    crate::analysis::x_alpha(alg.sigma(0))
}
