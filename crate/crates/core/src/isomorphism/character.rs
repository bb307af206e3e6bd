//! Characters `χ: Γ → ℚ^×` extended from the `σ`-sublattice.

use num_traits::{One, ToPrimitive, Zero};

use super::automorphism::AutomorphismG;
use crate::error::{Error, Result};
use crate::indexing::Block;
use crate::lattice::{AlgebraConfig, GammaVector, GroupLattice};
use crate::rational::{nth_root, pow, show, Rational};

/// A character on `Δ ⊆ Γ`, stored as values on a generating list of `Δ`.
#[derive(Debug, Clone)]
pub struct Character {
    delta: GroupLattice,
    values: Vec<Rational>,
    /// point overrides that deliberately break multiplicativity
    overrides: Vec<(GammaVector, Rational)>,
}

impl Character {
    /// A character given by values on generators; the values are trusted.
    pub fn from_values(dim: usize, gens: Vec<GammaVector>, values: Vec<Rational>) -> Result<Self> {
        if gens.len() != values.len() {
            return Err(Error::Arity { expected: gens.len(), got: values.len() });
        }
        if let Some(v) = values.iter().find(|v| v.is_zero()) {
            return Err(Error::InvalidAutomorphism(format!("character value {} is not a unit", show(v))));
        }
        Ok(Character { delta: GroupLattice::new(dim, gens)?, values, overrides: Vec::new() })
    }

    pub fn generators(&self) -> &[GammaVector] {
        self.delta.generators()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The domain `Δ`.
    pub fn domain(&self) -> &GroupLattice {
        &self.delta
    }

    /// `χ(α)`, or `None` when `α ∉ Δ`.
    pub fn eval(&self, alpha: &GammaVector) -> Option<Rational> {
        if let Some((_, v)) = self.overrides.iter().find(|(a, _)| a == alpha) {
            return Some(v.clone());
        }
        let c = self.delta.express(alpha)?;
        Some(c.iter().zip(&self.values).fold(Rational::one(), |acc, (e, v)| acc * pow(v, e)))
    }

    /// Multiplies the value at the single point `alpha` by `factor`, leaving
    /// every other value alone; used to build negative controls.
    pub fn corrupt_at(&mut self, alpha: &GammaVector, factor: &Rational) -> bool {
        match self.eval(alpha) {
            Some(v) => {
                self.overrides.retain(|(a, _)| a != alpha);
                self.overrides.push((alpha.clone(), v * factor));
                true
            }
            None => false,
        }
    }

    fn push(&mut self, gamma: GammaVector, value: Rational) -> Result<()> {
        let mut gens = self.delta.generators().to_vec();
        gens.push(gamma);
        self.delta = GroupLattice::new(self.delta.dim(), gens)?;
        self.values.push(value);
        Ok(())
    }
}

/// Prescribed values on `Δ₀ = ⟨σ_p : p ∈ I_{1,5}⟩`: `b₀⁻¹b_p` on `I_{1,3}`, `b₀⁻¹` on `I_{4,5}`.
pub fn seed_values(cfg: &AlgebraConfig, g: &AutomorphismG) -> Result<Vec<(GammaVector, Rational)>> {
    let l = &cfg.layout;
    let inv = Rational::one() / &g.b0;
    let mut out = Vec::new();
    for p in l.range(1, 5) {
        let v = match l.block(p) {
            Some(Block::I4) | Some(Block::I5) => inv.clone(),
            _ => &inv * g.b(p),
        };
        out.push((cfg.sigma(p)?, v));
    }
    Ok(out)
}

/// Extends the seed values to all of `Γ`, walking the generators in order.
///
/// A generator already in `Δ` is skipped; one outside the rational span of
/// `Δ` gets the value 1; otherwise its value is the rational `n`-th root of
/// `χ(nγ)` for the least `n` with `nγ ∈ Δ` (the positive root when `n` is even).
pub fn extend_character(cfg: &AlgebraConfig, g: &AutomorphismG) -> Result<Character> {
    let seeds = seed_values(cfg, g)?;
    let (gens, values) = seeds.into_iter().unzip();
    let mut chi = Character::from_values(cfg.dim(), gens, values)?;
    for gamma in cfg.gamma.generators() {
        if chi.delta.contains(gamma) {
            continue;
        }
        let value = match chi.delta.order_modulo(gamma) {
            None => Rational::one(),
            Some(n) => {
                let multiple = gamma.scale(&Rational::from_integer(n.clone()));
                let target = chi
                    .eval(&multiple)
                    .ok_or_else(|| Error::InvalidAutomorphism(format!("{multiple} is not in the character domain")))?;
                let n = n
                    .to_u64()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| Error::InvalidAutomorphism(format!("order {n} is out of range")))?;
                nth_root(&target, n)?
            }
        };
        chi.push(gamma.clone(), value)?;
    }
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexing::{Layout, J0};
    use crate::isomorphism::PairBlock;
    use crate::rational::{frac, int};

    #[test]
    fn seeds_follow_the_pair_scalars() {
        let cfg = AlgebraConfig::from_ints([1, 0, 0, 0, 0, 0], false, &[&[0, 1, 0], &[0, 0, 1]], J0::Nat).unwrap();
        let mut g = AutomorphismG::identity(&cfg.layout);
        g.pairs[0] = PairBlock { a: int(0), b: int(2) };
        let chi = extend_character(&cfg, &g).unwrap();
        assert_eq!(chi.eval(&GammaVector::from_ints(&[0, -1, -1])), Some(int(2)));
        assert_eq!(chi.eval(&GammaVector::from_ints(&[0, 1, 0])), Some(int(1)));
        assert_eq!(chi.eval(&GammaVector::from_ints(&[0, 0, 1])), Some(frac(1, 2)));
    }

    #[test]
    fn torsion_generators_take_roots() {
        let layout = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
        let half = GammaVector::from_coords(vec![int(0), frac(-1, 2), frac(-1, 2)]);
        let lat = GroupLattice::new(3, vec![half.clone(), GammaVector::from_ints(&[0, 1, 0])]).unwrap();
        let cfg = AlgebraConfig::new(layout.clone(), false, lat, J0::Nat).unwrap();
        let mut g = AutomorphismG::identity(&layout);
        g.pairs[0] = PairBlock { a: int(0), b: int(4) };
        let chi = extend_character(&cfg, &g).unwrap();
        assert_eq!(chi.eval(&half), Some(int(2)));
        g.pairs[0] = PairBlock { a: int(0), b: int(2) };
        assert_eq!(extend_character(&cfg, &g).unwrap_err().code(), "E_ROOT_NOT_RATIONAL");
    }
}
