//! Seeded random elements for property runs.
//!
//! Lattice parts are integer combinations of the generators with
//! coefficients in `[-3, 3]`; admissible exponents are drawn from `[0, 3]`.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BasisKey, Element};
use crate::lattice::{AlgebraConfig, ExpVector, GammaVector};
use crate::rational::{frac, int};

pub struct Sampler {
    seed: u64,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn alpha(&mut self, cfg: &AlgebraConfig) -> GammaVector {
        let mut v = GammaVector::zero(cfg.dim());
        for g in cfg.gamma.generators() {
            let c: i64 = self.rng.gen_range(-3..=3);
            if c != 0 {
                v = &v + &g.scale(&int(c));
            }
        }
        v
    }

    pub fn exp(&mut self, cfg: &AlgebraConfig, max: u32) -> ExpVector {
        let mut i = ExpVector::zero(cfg.dim());
        for pos in 0..cfg.dim() {
            if cfg.layout.t_allowed(cfg.layout.index_at(pos), cfg.j0) {
                i.set(pos, self.rng.gen_range(0..=max));
            }
        }
        i
    }

    pub fn key(&mut self, cfg: &AlgebraConfig) -> BasisKey {
        BasisKey::new(self.alpha(cfg), self.exp(cfg, 3))
    }

    /// A key whose exponent touches at most `vars` admissible positions,
    /// each with exponent in `1..=max`.
    pub fn sparse_key(&mut self, cfg: &AlgebraConfig, vars: usize, max: u32) -> BasisKey {
        let allowed: Vec<usize> =
            (0..cfg.dim()).filter(|&pos| cfg.layout.t_allowed(cfg.layout.index_at(pos), cfg.j0)).collect();
        let mut i = ExpVector::zero(cfg.dim());
        if !allowed.is_empty() {
            for _ in 0..self.rng.gen_range(0..=vars) {
                let pos = allowed[self.below(allowed.len())];
                i.set(pos, self.rng.gen_range(1..=max));
            }
        }
        BasisKey::new(self.alpha(cfg), i)
    }

    /// Like [`Sampler::element`] but built from [`Sampler::sparse_key`].
    pub fn sparse_element(&mut self, cfg: &AlgebraConfig, max_terms: usize) -> Element {
        let n = self.rng.gen_range(1..=max_terms);
        let mut e = Element::zero();
        for _ in 0..n {
            let k = self.sparse_key(cfg, 2, 2);
            e.add_term(k, self.coeff());
        }
        e
    }

    /// A key with `i = 0`.
    pub fn lattice_key(&mut self, cfg: &AlgebraConfig) -> BasisKey {
        BasisKey::new(self.alpha(cfg), ExpVector::zero(cfg.dim()))
    }

    /// One to `max_terms` random terms with coefficients `n/d`,
    /// `n ∈ [-4,4]∖{0}`, `d ∈ {1,2}`.
    pub fn element(&mut self, cfg: &AlgebraConfig, max_terms: usize) -> Element {
        let n = self.rng.gen_range(1..=max_terms);
        let mut e = Element::zero();
        for _ in 0..n {
            let k = self.key(cfg);
            e.add_term(k, self.coeff());
        }
        e
    }

    pub fn coeff(&mut self) -> crate::rational::Rational {
        let mut n: i64 = self.rng.gen_range(-4..=3);
        if n >= 0 {
            n += 1;
        }
        frac(n, self.rng.gen_range(1..=2))
    }
}
