//! Elements of `K(ℓ,σ,Γ,𝒥)`: product, derivations, weight, Poisson part and the
//! full contact bracket.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::indexing::Block;
use crate::lattice::{AlgebraConfig, ExpVector, GammaVector};
use crate::rational::{int, show, Rational};

/// The basis symbol `x^{α,i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisKey {
    pub alpha: GammaVector,
    pub i: ExpVector,
}

impl BasisKey {
    pub fn new(alpha: GammaVector, i: ExpVector) -> Self {
        BasisKey { alpha, i }
    }

    /// `x^{0,0} = 1`.
    pub fn one(dim: usize) -> Self {
        BasisKey { alpha: GammaVector::zero(dim), i: ExpVector::zero(dim) }
    }

    pub fn times(&self, other: &BasisKey) -> BasisKey {
        BasisKey { alpha: &self.alpha + &other.alpha, i: self.i.add(&other.i) }
    }
}

impl fmt::Display for BasisKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{{{},{}}}", self.alpha, self.i)
    }
}

/// A finite linear combination of basis symbols with nonzero rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<BasisKey, Rational>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(key: BasisKey, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(key, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BasisKey, Rational)>) -> Self {
        let mut e = Self::zero();
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    /// Adds `c·key`, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: BasisKey, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisKey, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &BasisKey> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &BasisKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Element {
        let mut e = Element::zero();
        e.add_scaled(self, c);
        e
    }

    /// If `self = c·other` for a scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &Element) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let (k, v) = other.terms.iter().next()?;
        let c = self.coeff(k) / v;
        (self == &other.scale(&c)).then_some(c)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(rhs, &Rational::one());
        e
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(rhs, &int(-1));
        e
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&int(-1))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{}·{k}", show(c))).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// An algebra `K(ℓ,σ,Γ,𝒥)` together with its precomputed shift vectors.
#[derive(Debug, Clone)]
pub struct Algebra {
    cfg: AlgebraConfig,
    sigmas: Vec<GammaVector>,
}

impl Algebra {
    pub fn new(cfg: AlgebraConfig) -> Self {
        let sigmas = (0..=cfg.layout.iota6()).map(|p| cfg.sigma(p).expect("index in range")).collect();
        Algebra { cfg, sigmas }
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.cfg
    }

    pub fn dim(&self) -> usize {
        self.cfg.dim()
    }

    /// `σ_p` for `p ∈ Î`.
    pub fn sigma(&self, p: usize) -> &GammaVector {
        &self.sigmas[p]
    }

    pub fn one(&self) -> Element {
        Element::monomial(BasisKey::one(self.dim()), Rational::one())
    }

    pub fn constant(&self, c: Rational) -> Element {
        Element::monomial(BasisKey::one(self.dim()), c)
    }

    /// Checked basis key.
    pub fn key(&self, alpha: GammaVector, i: ExpVector) -> Result<BasisKey> {
        let k = BasisKey::new(alpha, i);
        self.check_key(&k)?;
        Ok(k)
    }

    /// Checked monomial `x^{α,i}`.
    pub fn monomial(&self, alpha: GammaVector, i: ExpVector) -> Result<Element> {
        Ok(Element::monomial(self.key(alpha, i)?, Rational::one()))
    }

    /// `x^α` (unchecked; membership is the caller's responsibility).
    pub fn x(&self, alpha: &[i64]) -> Element {
        let k = BasisKey::new(GammaVector::from_ints(alpha), ExpVector::zero(self.dim()));
        Element::monomial(k, Rational::one())
    }

    /// `t_p^n` for the index `p` (unchecked).
    pub fn t_pow(&self, p: usize, n: u32) -> Element {
        let pos = self.cfg.layout.pos(p);
        let k = BasisKey::new(GammaVector::zero(self.dim()), ExpVector::unit(self.dim(), pos, n));
        Element::monomial(k, Rational::one())
    }

    /// `t_p`.
    pub fn t(&self, p: usize) -> Element {
        self.t_pow(p, 1)
    }

    /// Full membership check of a key: lengths, admissible exponents, `α ∈ Γ`.
    pub fn check_key(&self, k: &BasisKey) -> Result<()> {
        self.shape_check(k)?;
        if !self.cfg.gamma.contains(&k.alpha) {
            return Err(Error::NotInGamma(k.alpha.to_string()));
        }
        Ok(())
    }

    pub fn check_element(&self, u: &Element) -> Result<()> {
        u.keys().try_for_each(|k| self.check_key(k))
    }

    fn shape_check(&self, k: &BasisKey) -> Result<()> {
        if k.alpha.len() != self.dim() || k.i.len() != self.dim() {
            return Err(Error::ConfigMismatch(format!("{k} has the wrong length")));
        }
        if !self.cfg.exp_allowed(&k.i) {
            return Err(Error::ConfigMismatch(format!("{k} uses a forbidden exponent")));
        }
        Ok(())
    }

    fn compatible(&self, u: &Element) -> Result<()> {
        u.keys().try_for_each(|k| self.shape_check(k))
    }

    /// Commutative product `x^{α,i}·x^{β,j} = x^{α+β,i+j}`.
    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.compatible(u)?;
        self.compatible(v)?;
        Ok(self.mul(u, v))
    }

    pub(crate) fn mul(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                out.add_term(a.times(b), ca * cb);
            }
        }
        out
    }

    pub(crate) fn pow(&self, u: &Element, n: u32) -> Element {
        (0..n).fold(self.one(), |acc, _| self.mul(&acc, u))
    }

    /// The weight `ϑ(α,i)`.
    pub fn theta_weight(&self, k: &BasisKey) -> Rational {
        let l = &self.cfg.layout;
        let mut w = Rational::zero();
        for pos in 1..self.dim() {
            let p = l.index_at(pos);
            if l.weight_alpha(p) {
                w += k.alpha.get(pos);
            } else if l.weight_exp(p) {
                w += int(i64::from(k.i.get(pos)));
            }
        }
        w
    }

    /// `∂*_p`: scales `x^{α,i}` by `α_p`.
    pub fn derive_star(&self, p: usize, u: &Element) -> Result<Element> {
        self.cfg.layout.check(p)?;
        self.compatible(u)?;
        Ok(self.d_star(p, u))
    }

    /// `∂_{t_p}`: lowers `i_p`.
    pub fn derive_t(&self, p: usize, u: &Element) -> Result<Element> {
        self.cfg.layout.check(p)?;
        self.compatible(u)?;
        Ok(self.d_t(p, u))
    }

    /// `∂_p = ∂*_p + ∂_{t_p}`.
    pub fn derive(&self, p: usize, u: &Element) -> Result<Element> {
        self.cfg.layout.check(p)?;
        self.compatible(u)?;
        Ok(self.d(p, u))
    }

    fn d_star(&self, p: usize, u: &Element) -> Element {
        let l = &self.cfg.layout;
        if !l.star_active(p) {
            return Element::zero();
        }
        let pos = l.pos(p);
        Element::from_terms(u.terms().map(|(k, c)| (k.clone(), c * k.alpha.get(pos))))
    }

    fn d_t(&self, p: usize, u: &Element) -> Element {
        let l = &self.cfg.layout;
        if !l.t_allowed(p, self.cfg.j0) {
            return Element::zero();
        }
        let pos = l.pos(p);
        Element::from_terms(u.terms().filter_map(|(k, c)| {
            let n = k.i.get(pos);
            let i = k.i.lowered(pos)?;
            Some((BasisKey::new(k.alpha.clone(), i), c * int(i64::from(n))))
        }))
    }

    pub(crate) fn d(&self, p: usize, u: &Element) -> Element {
        &self.d_star(p, u) + &self.d_t(p, u)
    }

    /// The Euler derivation `∂`, diagonal with eigenvalue `ϑ`.
    pub fn euler(&self, u: &Element) -> Result<Element> {
        self.compatible(u)?;
        Ok(self.eu(u))
    }

    pub(crate) fn eu(&self, u: &Element) -> Element {
        Element::from_terms(u.terms().map(|(k, c)| (k.clone(), c * self.theta_weight(k))))
    }

    fn shift(&self, alpha: &GammaVector, u: &Element) -> Element {
        let s = BasisKey::new(alpha.clone(), ExpVector::zero(self.dim()));
        Element::from_terms(u.terms().map(|(k, c)| (s.times(k), c.clone())))
    }

    /// `Σ_{p∈I} x^{σ_p}(∂_p u ∂_p̄ v − ∂_p̄ u ∂_p v)`.
    pub fn poisson_bracket(&self, u: &Element, v: &Element) -> Result<Element> {
        self.compatible(u)?;
        self.compatible(v)?;
        Ok(self.poisson(u, v))
    }

    fn poisson(&self, u: &Element, v: &Element) -> Element {
        let l = &self.cfg.layout;
        let mut out = Element::zero();
        for p in l.unbarred() {
            let pb = l.bar_unchecked(p);
            let (up, upb, vp, vpb) = (self.d(p, u), self.d(pb, u), self.d(p, v), self.d(pb, v));
            let inner = &self.mul(&up, &vpb) - &self.mul(&upb, &vp);
            out.add_scaled(&self.shift(&self.sigmas[p], &inner), &Rational::one());
        }
        out
    }

    /// The bracket assembled from derivations; used as an independent check
    /// of [`Algebra::bracket`].
    pub fn bracket_generic(&self, u: &Element, v: &Element) -> Result<Element> {
        self.compatible(u)?;
        self.compatible(v)?;
        let two_minus = |w: &Element| &w.scale(&int(2)) - &self.eu(w);
        let tail = &self.mul(&two_minus(u), &self.d(0, v)) - &self.mul(&self.d(0, u), &two_minus(v));
        Ok(&self.poisson(u, v) + &self.shift(&self.sigmas[0], &tail))
    }

    /// The contact bracket, term family by term family.
    ///
    /// ```
    /// use contact_lie::algebra::Algebra;
    /// use contact_lie::indexing::J0;
    /// use contact_lie::lattice::AlgebraConfig;
    /// let cfg = AlgebraConfig::from_ints([1, 0, 0, 0, 0, 0], false, &[&[0, 1, 0], &[0, 0, 1]], J0::Nat).unwrap();
    /// let a = Algebra::new(cfg);
    /// let b = a.bracket(&a.t(0), &a.x(&[0, 1, 0])).unwrap();
    /// assert_eq!(b, a.x(&[0, 1, 0]).scale(&contact_lie::rational::int(-1)));
    /// ```
    pub fn bracket(&self, u: &Element, v: &Element) -> Result<Element> {
        self.compatible(u)?;
        self.compatible(v)?;
        Ok(self.br(u, v))
    }

    pub(crate) fn br(&self, u: &Element, v: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                self.bracket_keys(a, b, &(ca * cb), &mut out);
            }
        }
        out
    }

    fn bracket_keys(&self, a: &BasisKey, b: &BasisKey, c: &Rational, out: &mut Element) {
        let l = &self.cfg.layout;
        let (al, be) = (&a.alpha, &b.alpha);
        let (i, j) = (&a.i, &b.i);
        let ij = i.add(j);
        let base = al + be;
        let ni = |x: &ExpVector, pos: usize| int(i64::from(x.get(pos)));
        let emit = |coef: Rational, shift: &GammaVector, lower: &[usize], out: &mut Element| {
            if coef.is_zero() {
                return;
            }
            let mut e = ij.clone();
            for &pos in lower {
                match e.lowered(pos) {
                    Some(x) => e = x,
                    None => return,
                }
            }
            out.add_term(BasisKey::new(shift + &base, e), coef * c);
        };
        for p in l.unbarred() {
            let block = l.block(p).expect("unbarred index has a block");
            let (pp, pb) = (l.pos(p), l.pos(l.bar_unchecked(p)));
            let sig = &self.sigmas[p];
            if matches!(block, Block::I1 | Block::I2 | Block::I3) {
                let f = al.get(pp) * be.get(pb) - al.get(pb) * be.get(pp);
                emit(f, sig, &[], out);
            }
            if matches!(block, Block::I2 | Block::I3 | Block::I4 | Block::I5) {
                let f = al.get(pp) * ni(j, pb) - ni(i, pb) * be.get(pp);
                emit(f, sig, &[pb], out);
            }
            if block == Block::I3 {
                let f = ni(i, pp) * be.get(pb) - ni(j, pp) * al.get(pb);
                emit(f, sig, &[pp], out);
            }
            if matches!(block, Block::I3 | Block::I5 | Block::I6) {
                let f = ni(i, pp) * ni(j, pb) - ni(i, pb) * ni(j, pp);
                emit(f, sig, &[pp, pb], out);
            }
        }
        let two = int(2);
        let wa = &two - self.theta_weight(a);
        let wb = &two - self.theta_weight(b);
        let sig0 = &self.sigmas[0];
        emit(&wa * be.get(0) - al.get(0) * &wb, sig0, &[], out);
        emit(&wa * ni(j, 0) - ni(i, 0) * &wb, sig0, &[0], out);
    }

    /// `P_u(v,w) = [u, v·w] − [u,v]·w − v·[u,w]`.
    pub fn frobenius_defect(&self, u: &Element, v: &Element, w: &Element) -> Result<Element> {
        for e in [u, v, w] {
            self.compatible(e)?;
        }
        let lhs = self.br(u, &self.mul(v, w));
        let r1 = self.mul(&self.br(u, v), w);
        let r2 = self.mul(v, &self.br(u, w));
        Ok(&(&lhs - &r1) - &r2)
    }

    /// `supp(α,i) = {p : α_p ≠ 0 or i_p ≠ 0}` as indices.
    pub fn support(&self, k: &BasisKey) -> BTreeSet<usize> {
        (0..self.dim())
            .filter(|&pos| !k.alpha.get(pos).is_zero() || k.i.get(pos) != 0)
            .map(|pos| self.cfg.layout.index_at(pos))
            .collect()
    }
}

/// The level `|i| = Σ i_p`.
pub fn level(i: &ExpVector) -> u64 {
    i.level()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexing::J0;
    use crate::rational::frac;

    fn config_a() -> Algebra {
        Algebra::new(AlgebraConfig::from_ints([1, 0, 0, 0, 0, 0], false, &[&[0, 1, 0], &[0, 0, 1]], J0::Nat).unwrap())
    }

    fn config_b() -> Algebra {
        Algebra::new(AlgebraConfig::from_ints([0, 0, 0, 0, 0, 1], false, &[], J0::Nat).unwrap())
    }

    fn config_c() -> Algebra {
        Algebra::new(AlgebraConfig::from_ints([0, 0, 0, 1, 0, 0], false, &[&[1, 0, 0], &[0, 1, 0]], J0::Zero).unwrap())
    }

    #[test]
    fn products() {
        let a = config_a();
        assert_eq!(a.multiply(&a.x(&[0, 1, 0]), &a.x(&[0, 0, 1])).unwrap(), a.x(&[0, 1, 1]));
        let u = a.x(&[0, 2, -1]);
        assert_eq!(a.multiply(&a.one(), &u).unwrap(), u);
        let p = &a.t(0) + &a.one();
        let m = &a.t(0) - &a.one();
        assert_eq!(a.multiply(&p, &m).unwrap(), &a.t_pow(0, 2) - &a.one());
    }

    #[test]
    fn weights() {
        let a = config_a();
        let k = a.x(&[0, 1, 0]).keys().next().unwrap().clone();
        assert_eq!(a.theta_weight(&k), int(1));
        let b = config_b();
        let u = a_key(&b, &[0, 0, 0], &[1, 2, 0]);
        assert_eq!(b.theta_weight(&u), int(2));
        assert_eq!(b.theta_weight(&BasisKey::one(3)), int(0));
    }

    fn a_key(a: &Algebra, alpha: &[i64], i: &[u32]) -> BasisKey {
        a.key(GammaVector::from_ints(alpha), ExpVector::from_vec(i.to_vec())).unwrap()
    }

    #[test]
    fn derivations() {
        let a = config_a();
        assert_eq!(a.derive(0, &a.t_pow(0, 2)).unwrap(), a.t(0).scale(&int(2)));
        assert_eq!(a.derive(1, &a.x(&[0, 2, 0])).unwrap(), a.x(&[0, 2, 0]).scale(&int(2)));
        let b = config_b();
        assert_eq!(b.derive(1, &b.t_pow(1, 3)).unwrap(), b.t_pow(1, 2).scale(&int(3)));
        assert!(b.derive(3, &b.one()).is_err());
    }

    #[test]
    fn euler_eigenvalues() {
        let b = config_b();
        let u = b.mul(&b.mul(&b.t(1), &b.t(2)), &b.t(0));
        assert_eq!(b.euler(&u).unwrap(), u.scale(&int(2)));
        assert!(b.euler(&b.one()).unwrap().is_zero());
    }

    #[test]
    fn poisson_examples() {
        let a = config_a();
        assert_eq!(a.poisson_bracket(&a.x(&[0, 1, 0]), &a.x(&[0, 0, 1])).unwrap(), a.one());
        let b = config_b();
        assert_eq!(b.poisson_bracket(&b.t(1), &b.t(2)).unwrap(), b.one());
        let u = &b.t(1) + &b.t_pow(2, 2);
        assert!(b.poisson_bracket(&u, &u).unwrap().is_zero());
    }

    #[test]
    fn bracket_examples() {
        let a = config_a();
        assert_eq!(a.bracket(&a.t(0), &a.x(&[0, 1, 0])).unwrap(), a.x(&[0, 1, 0]).scale(&int(-1)));
        let b = config_b();
        let s = b.bracket(&b.t_pow(1, 2), &b.t_pow(2, 2)).unwrap();
        assert_eq!(s, b.mul(&b.t(1), &b.t(2)).scale(&int(4)));
        let s = b.bracket(&b.t_pow(1, 2), &s).unwrap();
        assert_eq!(s, b.t_pow(1, 2).scale(&int(8)));
        assert!(b.bracket(&b.t_pow(1, 2), &s).unwrap().is_zero());
        let c = config_c();
        assert_eq!(c.bracket(&c.one(), &c.x(&[1, 0, 0])).unwrap(), c.x(&[1, 0, 0]).scale(&int(2)));
    }

    #[test]
    fn bracket_agrees_with_generic_form() {
        for a in [config_a(), config_b(), config_c()] {
            let d = a.dim();
            let mut keys = vec![BasisKey::one(d)];
            for g in a.config().gamma.generators() {
                keys.push(BasisKey::new(g.clone(), ExpVector::zero(d)));
            }
            for pos in 0..d {
                let i = ExpVector::unit(d, pos, 2);
                if a.config().exp_allowed(&i) {
                    keys.push(BasisKey::new(GammaVector::zero(d), i));
                }
            }
            for x in &keys {
                for y in &keys {
                    let (u, v) = (Element::monomial(x.clone(), frac(3, 2)), Element::monomial(y.clone(), int(1)));
                    assert_eq!(a.bracket(&u, &v).unwrap(), a.bracket_generic(&u, &v).unwrap(), "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn config_mismatch_is_reported() {
        let a = config_a();
        let b = config_b();
        let bad = b.t(1);
        assert!(matches!(a.bracket(&a.one(), &bad), Err(Error::ConfigMismatch(_))));
        assert!(a.check_element(&a.x(&[1, 0, 0])).is_err());
    }

    #[test]
    fn levels_and_supports() {
        assert_eq!(level(&ExpVector::from_vec(vec![1, 2, 0])), 3);
        let a = config_a();
        let k = a_key(&a, &[0, 1, 0], &[0, 0, 0]);
        assert_eq!(a.support(&k), BTreeSet::from([1]));
        let k = a_key(&a, &[0, -1, -1], &[1, 0, 0]);
        assert_eq!(a.support(&k).len(), 3);
    }
}
