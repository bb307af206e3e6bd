//! Isomorphisms between normalized algebras: the group of block automorphisms,
//! characters, the maps `θ`, homomorphism verification and necessary invariants.

mod automorphism;
mod character;
mod invariants;
mod theta;

use std::fmt;

use num_traits::One;

pub use automorphism::{block_order, image_config, validate_automorphism, AutomorphismG, PairBlock};
pub use character::{extend_character, seed_values, Character};
pub use invariants::{invariant_summary, InvariantSummary};
pub use theta::{build_theta, normalize_sigma0, ThetaMap};

use crate::algebra::{Algebra, BasisKey, Element};
use crate::error::Result;
use crate::lattice::{ExpVector, GammaVector};
use crate::rational::Rational;
use crate::sampling::Sampler;

/// A pair `(u, v)` with `θ([u,v]) ≠ [θu, θv]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub u: Element,
    pub v: Element,
    /// `θ([u,v])`
    pub lhs: Element,
    /// `[θu, θv]`
    pub rhs: Element,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u = {}; v = {}; theta([u,v]) = {}; [theta u, theta v] = {}", self.u, self.v, self.lhs, self.rhs)
    }
}

/// Outcome of [`verify_homomorphism`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub seed: u64,
    pub structured: usize,
    pub random: usize,
    pub failures: usize,
    /// the first failing pair
    pub counterexample: Option<Counterexample>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for HomomorphismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} structured + {} random pairs (seed {}): {} failures",
            self.structured, self.random, self.seed, self.failures
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\ncounterexample: {c}")?;
        }
        Ok(())
    }
}

/// The generators `ς` of the source algebra that are admissible, as elements:
/// `t_p`, except `x^{−σ_q, 1_q̄}` for `q ∈ I_{4,5}`.
pub fn varsigma(alg: &Algebra) -> Vec<Element> {
    let cfg = alg.config();
    let l = &cfg.layout;
    let n = alg.dim();
    let mut out = Vec::new();
    for pos in 0..n {
        let p = l.index_at(pos);
        if !l.t_allowed(p, cfg.j0) {
            continue;
        }
        let is_shift =
            l.is_barred(p) && matches!(l.block(p), Some(crate::indexing::Block::I4 | crate::indexing::Block::I5));
        if is_shift {
            let q = l.bar_unchecked(p);
            let key = BasisKey::new(-alg.sigma(q), ExpVector::unit(n, pos, 1));
            out.push(Element::monomial(key, Rational::one()));
        } else {
            out.push(alg.t(p));
        }
    }
    out
}

/// Structured test pairs: `x^α` vs `x^β`, `ς_p` vs `x^α`, `ς_p` vs `ς_q`.
pub fn structured_pairs(alg: &Algebra) -> Vec<(Element, Element)> {
    let gens = alg.config().gamma.generators();
    let n = alg.dim();
    let mut alphas = vec![GammaVector::zero(n)];
    for g in gens {
        alphas.push(g.clone());
        alphas.push(-g);
    }
    for (a, g) in gens.iter().enumerate() {
        for h in &gens[a + 1..] {
            alphas.push(g + h);
            alphas.push(g - h);
        }
    }
    let xs: Vec<Element> =
        alphas.into_iter().map(|a| Element::monomial(BasisKey::new(a, ExpVector::zero(n)), Rational::one())).collect();
    let vs = varsigma(alg);
    let mut pairs = Vec::new();
    for (a, u) in xs.iter().enumerate() {
        for v in &xs[a..] {
            pairs.push((u.clone(), v.clone()));
        }
    }
    for s in &vs {
        for x in &xs {
            pairs.push((s.clone(), x.clone()));
        }
    }
    for (a, s) in vs.iter().enumerate() {
        for t in &vs[a..] {
            pairs.push((s.clone(), t.clone()));
        }
    }
    pairs
}

/// Checks `θ([u,v]) = [θ(u), θ(v)]` exactly on the structured pairs and on
/// `samples` random pairs drawn from `seed` (random keys carry at most two
/// `t`-exponents of size at most 2, to keep images small).
pub fn verify_homomorphism(theta: &ThetaMap, samples: usize, seed: u64) -> Result<HomomorphismReport> {
    let src = theta.source();
    let tgt = theta.target();
    let structured = structured_pairs(src);
    let mut sampler = Sampler::new(seed);
    let random: Vec<(Element, Element)> = (0..samples)
        .map(|_| (sampler.sparse_element(src.config(), 2), sampler.sparse_element(src.config(), 2)))
        .collect();
    let mut report = HomomorphismReport {
        seed,
        structured: structured.len(),
        random: random.len(),
        failures: 0,
        counterexample: None,
    };
    for (u, v) in structured.iter().chain(&random) {
        let lhs = theta.apply(&src.bracket(u, v)?)?;
        let rhs = tgt.bracket(&theta.apply(u)?, &theta.apply(v)?)?;
        if lhs != rhs {
            report.failures += 1;
            if report.counterexample.is_none() {
                report.counterexample = Some(Counterexample { u: u.clone(), v: v.clone(), lhs, rhs });
            }
        }
    }
    Ok(report)
}
