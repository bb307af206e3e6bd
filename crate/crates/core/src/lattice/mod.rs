//! The exponent group `Γ`, the exponent monoid `𝒥` and algebra configurations.

mod hnf;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) use hnf::Hnf;

use crate::error::{Error, Result};
use crate::indexing::{Layout, J0};
use crate::rational::{int, show, Rational};
use crate::report::ValidationReport;

/// A rational vector in interleaved coordinate order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaVector(Vec<Rational>);

impl GammaVector {
    pub fn zero(dim: usize) -> Self {
        GammaVector(vec![Rational::zero(); dim])
    }

    pub fn from_coords(coords: Vec<Rational>) -> Self {
        GammaVector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        GammaVector(coords.iter().map(|&c| int(c)).collect())
    }

    /// `a` at coordinate position `pos`, zero elsewhere.
    pub fn unit(dim: usize, pos: usize, a: Rational) -> Self {
        let mut v = Self::zero(dim);
        v.0[pos] = a;
        v
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pos: usize) -> &Rational {
        &self.0[pos]
    }

    pub fn set(&mut self, pos: usize, a: Rational) {
        self.0[pos] = a;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, a: &Rational) -> Self {
        GammaVector(self.0.iter().map(|c| c * a).collect())
    }

    /// Keeps only the listed coordinate positions.
    pub fn restrict(&self, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zero(self.len());
        for p in positions {
            v.0[p] = self.0[p].clone();
        }
        v
    }
}

impl Ord for GammaVector {
    /// Lexicographic over `(numerator, denominator)` pairs.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.numer().cmp(b.numer()).then_with(|| a.denom().cmp(b.denom()));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for GammaVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &GammaVector {
    type Output = GammaVector;
    fn add(self, rhs: &GammaVector) -> GammaVector {
        GammaVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GammaVector {
    type Output = GammaVector;
    fn sub(self, rhs: &GammaVector) -> GammaVector {
        GammaVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &GammaVector {
    type Output = GammaVector;
    fn neg(self) -> GammaVector {
        GammaVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for GammaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(show).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Exponents of the `t` variables, interleaved like [`GammaVector`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVector(Vec<u32>);

impl ExpVector {
    pub fn zero(dim: usize) -> Self {
        ExpVector(vec![0; dim])
    }

    pub fn from_vec(v: Vec<u32>) -> Self {
        ExpVector(v)
    }

    pub fn unit(dim: usize, pos: usize, n: u32) -> Self {
        let mut v = Self::zero(dim);
        v.0[pos] = n;
        v
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, pos: usize) -> u32 {
        self.0[pos]
    }

    pub fn set(&mut self, pos: usize, n: u32) {
        self.0[pos] = n;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &ExpVector) -> ExpVector {
        ExpVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self − 1_[pos]`, or `None` when that exponent is already zero.
    pub fn lowered(&self, pos: usize) -> Option<ExpVector> {
        let mut v = self.clone();
        v.0[pos] = v.0[pos].checked_sub(1)?;
        Some(v)
    }

    /// The level `Σ i_p`, including `i₀`.
    pub fn level(&self) -> u64 {
        self.0.iter().map(|&x| u64::from(x)).sum()
    }
}

impl fmt::Display for ExpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A declared vector on the coordinate line of `index`, as an integer
/// combination of the lattice generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineWitness {
    pub index: usize,
    pub combination: Vec<i64>,
}

/// A finitely generated subgroup of `ℚ^{1+2ι₆}`.
#[derive(Debug, Clone)]
pub struct GroupLattice {
    dim: usize,
    gens: Vec<GammaVector>,
    witnesses: Vec<LineWitness>,
    hnf: Hnf,
}

impl PartialEq for GroupLattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.gens == other.gens && self.witnesses == other.witnesses
    }
}

/// Whether the coordinate-0 projection `Γ₀` is trivial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma0 {
    pub trivial: bool,
    /// A lattice vector whose 0-coordinate generates `Γ₀`.
    pub witness: Option<GammaVector>,
}

impl GroupLattice {
    pub fn new(dim: usize, gens: Vec<GammaVector>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != dim) {
            return Err(Error::ConfigMismatch(format!("generator {g} has length {}, expected {dim}", g.len())));
        }
        let hnf = Hnf::new(dim, &gens);
        Ok(GroupLattice { dim, gens, witnesses: Vec::new(), hnf })
    }

    pub fn with_witnesses(mut self, witnesses: Vec<LineWitness>) -> Self {
        self.witnesses = witnesses;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[GammaVector] {
        &self.gens
    }

    pub fn witnesses(&self) -> &[LineWitness] {
        &self.witnesses
    }

    /// Rank of the lattice (number of echelon basis rows).
    pub fn rank(&self) -> usize {
        self.hnf.rank()
    }

    /// A `ℤ`-basis of the lattice in echelon form.
    pub fn basis(&self) -> Vec<GammaVector> {
        (0..self.hnf.rank()).map(|k| self.hnf.basis_vector(k)).collect()
    }

    /// Integer membership test.
    ///
    /// ```
    /// use contact_lie::lattice::{GammaVector, GroupLattice};
    /// use contact_lie::rational::frac;
    /// let g = GroupLattice::new(3, vec![
    ///     GammaVector::from_ints(&[0, 1, 0]),
    ///     GammaVector::from_ints(&[0, 0, 1]),
    /// ]).unwrap();
    /// assert!(g.contains(&GammaVector::from_ints(&[0, -1, -1])));
    /// assert!(!g.contains(&GammaVector::unit(3, 1, frac(1, 2))));
    /// ```
    pub fn contains(&self, alpha: &GammaVector) -> bool {
        alpha.len() == self.dim && self.hnf.basis_coords(alpha).is_some()
    }

    /// Integer coefficients of `alpha` over the generators, if it is a member.
    pub fn express(&self, alpha: &GammaVector) -> Option<Vec<BigInt>> {
        if alpha.len() != self.dim {
            return None;
        }
        self.hnf.generator_coords(alpha)
    }

    /// Whether `alpha` lies in the rational span of the lattice.
    pub fn in_span(&self, alpha: &GammaVector) -> bool {
        alpha.len() == self.dim && self.hnf.span_coords(alpha).is_some()
    }

    /// Smallest positive `n` with `n·alpha` in the lattice, if any.
    pub fn order_modulo(&self, alpha: &GammaVector) -> Option<BigInt> {
        let y = self.hnf.span_coords(alpha)?;
        Some(y.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom())))
    }

    /// Generator of `ℚ1_[pos] ∩ Γ`, or `None` when the intersection is `{0}`.
    pub fn line_generator(&self, pos: usize) -> Option<GammaVector> {
        let e = GammaVector::unit(self.dim, pos, Rational::one());
        let y = self.hnf.span_coords(&e)?;
        let den = y.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = y
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
        Some(GammaVector::unit(self.dim, pos, Rational::new(den, g)))
    }

    /// Reports whether the projection onto coordinate 0 is trivial.
    pub fn gamma0(&self) -> Gamma0 {
        let k = (0..self.hnf.rank()).find(|&k| self.hnf.pivot(k) == 0);
        Gamma0 { trivial: k.is_none(), witness: k.map(|k| self.hnf.basis_vector(k)) }
    }

    /// Evaluates a declared witness combination.
    pub fn combine(&self, combination: &[i64]) -> Option<GammaVector> {
        if combination.len() != self.gens.len() {
            return None;
        }
        let mut v = GammaVector::zero(self.dim);
        for (c, g) in combination.iter().zip(&self.gens) {
            v = &v + &g.scale(&int(*c));
        }
        Some(v)
    }
}

/// Everything that determines one algebra `K(ℓ,σ,Γ,𝒥)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraConfig {
    pub layout: Layout,
    /// `σ₀ = 1_[0]` when set, `σ₀ = 0` otherwise.
    pub sigma0: bool,
    pub gamma: GroupLattice,
    pub j0: J0,
}

impl AlgebraConfig {
    pub fn new(layout: Layout, sigma0: bool, gamma: GroupLattice, j0: J0) -> Result<Self> {
        if gamma.dim() != layout.dim() {
            return Err(Error::ConfigMismatch(format!(
                "lattice dimension {} does not match layout dimension {}",
                gamma.dim(),
                layout.dim()
            )));
        }
        Ok(AlgebraConfig { layout, sigma0, gamma, j0 })
    }

    /// Shorthand: integer generators, no declared witnesses.
    pub fn from_ints(ell: [usize; 6], sigma0: bool, gens: &[&[i64]], j0: J0) -> Result<Self> {
        let layout = Layout::new(ell)?;
        let gens = gens.iter().map(|g| GammaVector::from_ints(g)).collect();
        let gamma = GroupLattice::new(layout.dim(), gens)?;
        Self::new(layout, sigma0, gamma, j0)
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn gamma0_trivial(&self) -> bool {
        self.gamma.gamma0().trivial
    }

    pub fn sigma(&self, p: usize) -> Result<GammaVector> {
        self.layout.sigma(p, self.sigma0)
    }

    /// Whether `i` is an admissible exponent vector.
    pub fn exp_allowed(&self, i: &ExpVector) -> bool {
        i.len() == self.dim()
            && (0..self.dim()).all(|pos| i.get(pos) == 0 || self.layout.t_allowed(self.layout.index_at(pos), self.j0))
    }

    /// Positions `p` with `α_p` forced to zero (`I₆ ∪ Ī_{4,6}`).
    pub fn zero_alpha_positions(&self) -> Vec<usize> {
        (1..self.dim()).filter(|&pos| !self.layout.star_active(self.layout.index_at(pos))).collect()
    }

    /// Checks every admissibility condition on the lattice and the monoid.
    pub fn validate(&self) -> ValidationReport {
        let l = &self.layout;
        let mut r = ValidationReport::new();

        let zero_pos = self.zero_alpha_positions();
        let bad: Vec<String> = self
            .gamma
            .generators()
            .iter()
            .filter(|g| zero_pos.iter().any(|&p| !g.get(p).is_zero()))
            .map(ToString::to_string)
            .collect();
        r.push(
            "support",
            bad.is_empty(),
            if bad.is_empty() {
                "generators vanish on the down-grading coordinates".to_string()
            } else {
                format!("generators nonzero on down-grading coordinates: {}", bad.join(" "))
            },
        );

        let missing: Vec<String> = (0..=l.iota6())
            .filter(|&p| !self.gamma.contains(&self.sigma(p).expect("index in range")))
            .map(|p| format!("sigma_{p}"))
            .collect();
        r.push(
            "sigma-membership",
            missing.is_empty(),
            if missing.is_empty() {
                "every sigma_p lies in the lattice".to_string()
            } else {
                format!("missing: {}", missing.join(" "))
            },
        );

        let g0 = self.gamma.gamma0();
        let mut lines: Vec<usize> = l.range(1, 3).flat_map(|p| [p, l.bar_unchecked(p)]).collect();
        lines.sort_unstable();
        if !g0.trivial {
            lines.insert(0, 0);
        }
        for p in lines {
            let (ok, detail) = self.line_check(p);
            r.push(format!("line-witness[{}]", l.name(p)), ok, detail);
        }

        let ok = self.j0 == J0::Nat || !g0.trivial;
        r.push(
            "monoid",
            ok,
            match (self.j0, g0.trivial) {
                (J0::Nat, _) => "J0 = N".to_string(),
                (J0::Zero, false) => format!(
                    "J0 = {{0}} and Gamma0 is generated through {}",
                    g0.witness.as_ref().expect("nontrivial witness")
                ),
                (J0::Zero, true) => "J0 = {0} and Gamma0 = {0}".to_string(),
            },
        );

        let off: Vec<String> = self
            .gamma
            .generators()
            .iter()
            .filter(|g| {
                let head = GammaVector::unit(self.dim(), 0, g.get(0).clone());
                !self.gamma.contains(&head)
            })
            .map(ToString::to_string)
            .collect();
        r.note(
            "gamma0-projection",
            off.is_empty(),
            if off.is_empty() {
                "(gamma_0,0,...,0) lies in the lattice for every generator".to_string()
            } else {
                format!("projection outside the lattice for {}", off.join(" "))
            },
        );
        r
    }

    fn line_check(&self, p: usize) -> (bool, String) {
        let pos = self.layout.pos(p);
        if let Some(w) = self.gamma.witnesses().iter().find(|w| w.index == p) {
            return match self.gamma.combine(&w.combination) {
                None => (false, "declared combination has the wrong length".to_string()),
                Some(v) => {
                    let on_line = !v.get(pos).is_zero() && (0..self.dim()).all(|q| q == pos || v.get(q).is_zero());
                    if on_line {
                        (true, format!("declared witness {v}"))
                    } else {
                        (false, format!("declared witness {v} is not a nonzero multiple of the unit vector"))
                    }
                }
            };
        }
        match self.gamma.line_generator(pos) {
            Some(v) => (true, format!("derived witness {v}")),
            None => (false, "the coordinate line meets the lattice only in 0".to_string()),
        }
    }
}

/// Free-function form of [`AlgebraConfig::validate`].
pub fn validate_config(cfg: &AlgebraConfig) -> ValidationReport {
    cfg.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn lattice(gens: &[&[i64]]) -> GroupLattice {
        let v: Vec<_> = gens.iter().map(|g| GammaVector::from_ints(g)).collect();
        GroupLattice::new(gens[0].len(), v).unwrap()
    }

    #[test]
    fn membership_examples() {
        let g = lattice(&[&[0, 1, 0], &[0, 0, 1]]);
        assert!(g.contains(&GammaVector::from_ints(&[0, -1, -1])));
        assert!(!g.contains(&GammaVector::unit(3, 1, frac(1, 2))));
        assert!(g.contains(&GammaVector::zero(3)));
        assert_eq!(g.express(&GammaVector::from_ints(&[0, 2, -3])).unwrap(), [BigInt::from(2), BigInt::from(-3)]);
    }

    #[test]
    fn rational_generators() {
        let g = GroupLattice::new(
            3,
            vec![GammaVector::from_coords(vec![int(0), frac(1, 2), frac(1, 3)]), GammaVector::from_ints(&[0, 0, 1])],
        )
        .unwrap();
        assert!(g.contains(&GammaVector::from_coords(vec![int(0), int(1), frac(2, 3)])));
        assert!(!g.contains(&GammaVector::from_coords(vec![int(0), int(1), frac(1, 3)])));
        assert_eq!(g.line_generator(1).unwrap(), GammaVector::unit(3, 1, frac(3, 2)));
    }

    #[test]
    fn gamma0_projection() {
        assert!(lattice(&[&[0, 1, 0], &[0, 0, 1]]).gamma0().trivial);
        let g = lattice(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(g.gamma0().witness, Some(GammaVector::from_ints(&[1, 0, 0])));
        assert!(!lattice(&[&[1, 1, 0]]).gamma0().trivial);
    }

    #[test]
    fn order_modulo_a_sublattice() {
        let g = lattice(&[&[0, 2, 0]]);
        assert_eq!(g.order_modulo(&GammaVector::from_ints(&[0, 1, 0])), Some(BigInt::from(2)));
        assert_eq!(g.order_modulo(&GammaVector::from_ints(&[0, 0, 1])), None);
    }

    #[test]
    fn validation_of_config_a() {
        let cfg = AlgebraConfig::from_ints([1, 0, 0, 0, 0, 0], false, &[&[0, 1, 0], &[0, 0, 1]], J0::Nat).unwrap();
        let r = cfg.validate();
        assert!(r.passed(), "{r}");
        let cfg = AlgebraConfig { j0: J0::Zero, ..cfg };
        let r = cfg.validate();
        assert!(!r.get("monoid").unwrap().passed);
    }

    #[test]
    fn validation_rejects_down_grading_support() {
        let cfg = AlgebraConfig::from_ints([0, 0, 0, 1, 0, 0], false, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], J0::Zero)
            .unwrap();
        assert!(!cfg.validate().get("support").unwrap().passed);
    }

    #[test]
    fn declared_witnesses_are_checked() {
        let layout = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
        let gamma = GroupLattice::new(3, vec![GammaVector::from_ints(&[0, 1, 1]), GammaVector::from_ints(&[0, 0, 1])])
            .unwrap()
            .with_witnesses(vec![
                LineWitness { index: 1, combination: vec![1, -1] },
                LineWitness { index: 2, combination: vec![1, 0] },
            ]);
        let cfg = AlgebraConfig::new(layout, false, gamma, J0::Nat).unwrap();
        let r = cfg.validate();
        assert!(r.get("line-witness[1]").unwrap().passed);
        assert!(!r.get("line-witness[1']").unwrap().passed);
    }
}
