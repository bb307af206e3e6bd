#![allow(dead_code)]

use contact_lie::indexing::J0;
use contact_lie::lattice::AlgebraConfig;

/// Unit vectors at the given interleaved positions.
pub fn units(dim: usize, positions: &[usize]) -> Vec<Vec<i64>> {
    positions
        .iter()
        .map(|&p| {
            let mut e = vec![0; dim];
            e[p] = 1;
            e
        })
        .collect()
}

pub fn config(ell: [usize; 6], sigma0: bool, gens: &[Vec<i64>], j0: J0) -> AlgebraConfig {
    let refs: Vec<&[i64]> = gens.iter().map(Vec::as_slice).collect();
    AlgebraConfig::from_ints(ell, sigma0, &refs, j0).expect("config")
}

/// One `I₁` pair, `Γ = ⟨1_[1], 1_[1̄]⟩`, `𝒥₀ = ℕ`.
pub fn config_a() -> AlgebraConfig {
    config([1, 0, 0, 0, 0, 0], false, &units(3, &[1, 2]), J0::Nat)
}

/// One `I₆` pair, `Γ = {0}`, `𝒥₀ = ℕ`.
pub fn config_b() -> AlgebraConfig {
    config([0, 0, 0, 0, 0, 1], false, &[], J0::Nat)
}

/// One `I₄` pair, `Γ = ⟨1_[0], 1_[1]⟩`, `𝒥₀ = {0}`.
pub fn config_c() -> AlgebraConfig {
    config([0, 0, 0, 1, 0, 0], false, &units(3, &[0, 1]), J0::Zero)
}

/// One pair of every block, `Γ` spanned by `1_[0]`, the `J_{1,3}` units, `1_[4]`, `1_[5]`.
pub fn config_mixed() -> AlgebraConfig {
    config([1, 1, 1, 1, 1, 1], false, &units(13, &[0, 1, 2, 3, 4, 5, 6, 7, 9]), J0::Nat)
}

/// `I₁, I₄, I₅, I₆` with `Γ₀ = {0}`.
pub fn config_trivial_gamma0() -> AlgebraConfig {
    config([1, 0, 0, 1, 1, 1], false, &units(9, &[1, 2, 3, 5]), J0::Nat)
}
