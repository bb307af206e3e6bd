//! Structure probes: the grading map `π`, ad-orbits, the classes `A₀/A₁/A₂`,
//! eigenvector checks, the center of `ℬ` and the `ℬ_F/ℬ_N` count.
//!
//! Local finiteness is only semi-decidable, so orbit verdicts are always
//! relative to an iteration cap.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, BasisKey, Element};
use crate::error::{Error, Result};
use crate::indexing::{Block, J0};
use crate::lattice::{ExpVector, GammaVector};
use crate::linalg::SpanTracker;
use crate::rational::{int, show, Rational};

/// `π(α) = (μ₀, μ₁, …, μ_{ι₅})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiVector(pub Vec<Rational>);

impl fmt::Display for PiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(show).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The grading map; `μ₀` depends on whether `Γ₀` is trivial.
pub fn pi_map(alg: &Algebra, alpha: &GammaVector) -> Result<PiVector> {
    let cfg = alg.config();
    if !cfg.gamma.contains(alpha) {
        return Err(Error::NotInGamma(alpha.to_string()));
    }
    Ok(pi_unchecked(alg, alpha))
}

pub(crate) fn pi_unchecked(alg: &Algebra, alpha: &GammaVector) -> PiVector {
    let cfg = alg.config();
    let l = &cfg.layout;
    let mut mu = Vec::with_capacity(1 + l.iota()[4]);
    mu.push(if cfg.gamma0_trivial() {
        alg.theta_weight(&BasisKey::new(alpha.clone(), ExpVector::zero(cfg.dim()))) - int(2)
    } else {
        alpha.get(0) * int(2)
    });
    for p in l.range(1, 5) {
        let (pp, pb) = (l.pos(p), l.pos(l.bar_unchecked(p)));
        mu.push(match l.block(p) {
            Some(Block::I4 | Block::I5) => -alpha.get(pp),
            _ => alpha.get(pb) - alpha.get(pp),
        });
    }
    PiVector(mu)
}

/// Members of the finite list `A₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum A0Member {
    /// the constant `1` (listed when `Γ₀ ≠ {0}`)
    Constant,
    /// `t₀` (listed when `Γ₀ = {0}`)
    T0,
    /// `x^{−σ_p}`, `p ∈ I_{1,3}`
    XSigma(usize),
    /// `x^{−σ_q, 1_[q̄]}`, `q ∈ I_{4,5}`
    XSigmaT(usize),
    /// `t_r t_r̄`, `r ∈ I₆`
    TPair(usize),
}

/// The list `A₀` with its elements.
pub fn a0_list(alg: &Algebra) -> Vec<(A0Member, Element)> {
    let cfg = alg.config();
    let l = &cfg.layout;
    let d = alg.dim();
    let mut out = Vec::new();
    if cfg.gamma0_trivial() {
        if cfg.j0 == J0::Nat {
            out.push((A0Member::T0, alg.t(0)));
        }
    } else {
        out.push((A0Member::Constant, alg.one()));
    }
    for p in l.range(1, 3) {
        let k = BasisKey::new(-alg.sigma(p), ExpVector::zero(d));
        out.push((A0Member::XSigma(p), Element::monomial(k, Rational::one())));
    }
    for q in l.range(4, 5) {
        let i = ExpVector::unit(d, l.pos(l.bar_unchecked(q)), 1);
        let k = BasisKey::new(-alg.sigma(q), i);
        out.push((A0Member::XSigmaT(q), Element::monomial(k, Rational::one())));
    }
    for r in l.set(6) {
        let e = alg.multiply(&alg.t(r), &alg.t(l.bar_unchecked(r))).expect("same config");
        out.push((A0Member::TPair(r), e));
    }
    out
}

/// Closed form of `[a, x^{β,j}]` for `a ∈ A₀`.
pub fn a0_action(alg: &Algebra, member: A0Member, key: &BasisKey) -> Element {
    let l = &alg.config().layout;
    let (beta, j) = (&key.alpha, &key.i);
    let n = |pos: usize| int(i64::from(j.get(pos)));
    let mut out = Element::zero();
    let lowered = |pos: usize| j.lowered(pos).map(|i| BasisKey::new(beta.clone(), i));
    let push_lower = |out: &mut Element, pos: usize, c: Rational| {
        if let Some(k) = lowered(pos) {
            out.add_term(k, c);
        }
    };
    match member {
        A0Member::Constant => {
            out.add_term(key.clone(), beta.get(0) * int(2));
            push_lower(&mut out, 0, n(0) * int(2));
        }
        A0Member::T0 => {
            out.add_term(key.clone(), n(0) * int(2) - (int(2) - alg.theta_weight(key)));
        }
        A0Member::XSigma(p) => {
            let (pp, pb) = (l.pos(p), l.pos(l.bar_unchecked(p)));
            out.add_term(key.clone(), beta.get(pb) - beta.get(pp));
            let block = l.block(p);
            if matches!(block, Some(Block::I2 | Block::I3)) {
                push_lower(&mut out, pb, n(pb));
            }
            if block == Some(Block::I3) {
                push_lower(&mut out, pp, -n(pp));
            }
        }
        A0Member::XSigmaT(q) => {
            let (pp, pb) = (l.pos(q), l.pos(l.bar_unchecked(q)));
            out.add_term(key.clone(), n(pb) - beta.get(pp));
            if l.block(q) == Some(Block::I5) {
                push_lower(&mut out, pp, -n(pp));
            }
        }
        A0Member::TPair(r) => {
            let (pp, pb) = (l.pos(r), l.pos(l.bar_unchecked(r)));
            out.add_term(key.clone(), n(pb) - n(pp));
        }
    }
    out
}

/// Membership of a basis key in the classes `A₀`, `A₁`, `A₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LocFinClass {
    pub in_a0: bool,
    pub in_a1: bool,
    pub in_a2: bool,
}

impl fmt::Display for LocFinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut v = Vec::new();
        for (b, n) in [(self.in_a0, "A0"), (self.in_a1, "A1"), (self.in_a2, "A2")] {
            if b {
                v.push(n);
            }
        }
        if v.is_empty() {
            f.write_str("none")
        } else {
            f.write_str(&v.join(","))
        }
    }
}

/// Evaluates the defining predicates of `A₀`, `A₁` and `A₂` on a key.
pub fn classify_locfin(alg: &Algebra, key: &BasisKey) -> LocFinClass {
    let cfg = alg.config();
    let l = &cfg.layout;
    let trivial = cfg.gamma0_trivial();
    let is_one = key.alpha.is_zero() && key.i.is_zero();

    let in_a0 = a0_list(alg).iter().any(|(_, e)| e.keys().next() == Some(key));

    let j13: Vec<usize> = l.range(1, 3).flat_map(|p| [l.pos(p), l.pos(l.bar_unchecked(p))]).collect();
    let bar45: Vec<usize> = l.range(4, 5).map(|q| l.pos(l.bar_unchecked(q))).collect();
    let alpha_hat_j13_zero = key.alpha.get(0).is_zero() && j13.iter().all(|&p| key.alpha.get(p).is_zero());
    let i_j13_zero = j13.iter().all(|&p| key.i.get(p) == 0);
    let i_bar45_zero = bar45.iter().all(|&p| key.i.get(p) == 0);
    let weight = alg.theta_weight(key);
    let two = int(2);

    let six_exclusive = l.set(6).all(|r| key.i.get(l.pos(r)) * key.i.get(l.pos(l.bar_unchecked(r))) == 0);
    let in_a1 = (trivial && is_one)
        || (weight == two && alpha_hat_j13_zero && i_j13_zero && key.i.get(0) == 0 && i_bar45_zero && six_exclusive);

    let in_a2 = alpha_hat_j13_zero
        && i_j13_zero
        && i_bar45_zero
        && (trivial || weight == two)
        && key.i.get(0) <= u32::from(trivial);
    LocFinClass { in_a0, in_a1, in_a2 }
}

/// Outcome of a bounded ad-orbit computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// the `n`-th iterate is zero
    Nilpotent(usize),
    /// the orbit spans a space of this dimension and no longer grows
    Stabilized(usize),
    /// the span grew at every step up to the cap
    Growing,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Nilpotent(n) => write!(f, "nilpotent({n})"),
            Verdict::Stabilized(d) => write!(f, "stabilized({d})"),
            Verdict::Growing => f.write_str("growing"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// `dims[n]` = dimension of the span of `v, ad_u v, …, ad_u^n v`
    pub dims: Vec<usize>,
    pub verdict: Verdict,
}

/// Iterates `ad_u` on `v` up to `cap` times.
///
/// Once an iterate falls into the span of its predecessors the span is
/// `ad_u`-invariant, so the remaining dimensions are filled in without
/// further brackets.
pub fn ad_orbit(alg: &Algebra, u: &Element, v: &Element, cap: usize) -> OrbitReport {
    let mut span = SpanTracker::new();
    let mut dims = Vec::with_capacity(cap + 1);
    let mut w = v.clone();
    let mut nilpotent = None;
    let mut stabilized = false;
    for n in 0..=cap {
        if w.is_zero() {
            nilpotent.get_or_insert(n);
        }
        if stabilized || nilpotent.is_some() {
            dims.push(span.dim());
            continue;
        }
        if !span.insert(&w) {
            stabilized = true;
        }
        dims.push(span.dim());
        if n < cap && !stabilized {
            w = alg.br(u, &w);
        }
    }
    let verdict = match nilpotent {
        Some(n) => Verdict::Nilpotent(n),
        None if stabilized => Verdict::Stabilized(span.dim()),
        None => Verdict::Growing,
    };
    OrbitReport { dims, verdict }
}

/// The step bound `m` with `ad_u^m(v) = 0` for `u ∈ A₁`.
///
/// For the constant `1` (in `A₁` when `Γ₀ = {0}`) the bound is `1 + j₀`.
pub fn nilpotency_bound(alg: &Algebra, u: &BasisKey, v: &BasisKey) -> Result<u64> {
    if !classify_locfin(alg, u).in_a1 {
        return Err(Error::NotA1);
    }
    if u.alpha.is_zero() && u.i.is_zero() {
        return Ok(1 + u64::from(v.i.get(0)));
    }
    let l = &alg.config().layout;
    let supp = alg.support(u);
    let m: u64 = (1..alg.dim())
        .map(|pos| l.index_at(pos))
        .filter(|&p| l.weight_exp(p) && !supp.contains(&p))
        .map(|p| u64::from(v.i.get(l.pos(p))))
        .sum();
    Ok(1 + m)
}

/// Whether `[s,u] ∈ ℚu` for all `s ∈ S`, with the eigenvalue of each `s`.
pub fn eigen_check(alg: &Algebra, s: &[Element], u: &Element) -> (bool, Vec<Option<Rational>>) {
    let vals: Vec<Option<Rational>> = s.iter().map(|x| alg.br(x, u).ratio_to(u)).collect();
    (vals.iter().all(Option::is_some), vals)
}

/// Whether `x^α` lies in the center of `ℬ = Span{x^α}`.
pub fn in_center_b(alg: &Algebra, alpha: &GammaVector) -> Result<bool> {
    let cfg = alg.config();
    if !cfg.gamma.contains(alpha) {
        return Err(Error::NotInGamma(alpha.to_string()));
    }
    Ok(b_n_predicate(alg, alpha))
}

fn b_n_predicate(alg: &Algebra, alpha: &GammaVector) -> bool {
    let cfg = alg.config();
    let l = &cfg.layout;
    let key = BasisKey::new(alpha.clone(), ExpVector::zero(cfg.dim()));
    let weight_ok = cfg.gamma0_trivial() || alg.theta_weight(&key) == int(2);
    let i45: Vec<usize> = l.range(4, 5).map(|q| l.pos(q)).collect();
    let support_ok = (0..cfg.dim()).all(|pos| i45.contains(&pos) || alpha.get(pos).is_zero());
    weight_ok && support_ok
}

/// Number of `x^{−σ_p}`, `p ∈ Î_{1,3}`, outside `Span(ℬ_N)`, and the `ι₃`
/// inferred from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfBnReport {
    pub count: usize,
    pub iota3: usize,
    pub iota3_layout: usize,
    /// set when `Γ₀ ≠ {0}`: the constant also escapes `ℬ_N`, so the raw
    /// count exceeds `ι₃` by one
    pub discrepancy: bool,
}

impl BfBnReport {
    pub fn consistent(&self) -> bool {
        self.iota3 == self.iota3_layout
    }
}

pub fn bf_bn_report(alg: &Algebra) -> BfBnReport {
    let cfg = alg.config();
    let l = &cfg.layout;
    let count = (0..=l.iota()[2]).filter(|&p| !b_n_predicate(alg, &-alg.sigma(p))).count();
    let trivial = cfg.gamma0_trivial();
    let iota3 = if trivial { count } else { count.saturating_sub(1) };
    BfBnReport { count, iota3, iota3_layout: l.iota()[2], discrepancy: !trivial }
}

/// Convenience: `x^α` with coefficient one.
pub fn x_alpha(alpha: &GammaVector) -> Element {
    Element::monomial(BasisKey::new(alpha.clone(), ExpVector::zero(alpha.len())), Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::AlgebraConfig;

    fn alg(ell: [usize; 6], gens: &[&[i64]], j0: J0) -> Algebra {
        Algebra::new(AlgebraConfig::from_ints(ell, false, gens, j0).unwrap())
    }

    fn config_a() -> Algebra {
        alg([1, 0, 0, 0, 0, 0], &[&[0, 1, 0], &[0, 0, 1]], J0::Nat)
    }

    fn config_b() -> Algebra {
        alg([0, 0, 0, 0, 0, 1], &[], J0::Nat)
    }

    fn config_c() -> Algebra {
        alg([0, 0, 0, 1, 0, 0], &[&[1, 0, 0], &[0, 1, 0]], J0::Zero)
    }

    fn key(a: &Algebra, e: &Element) -> BasisKey {
        let _ = a;
        e.keys().next().unwrap().clone()
    }

    #[test]
    fn pi_examples() {
        let a = config_a();
        assert_eq!(pi_map(&a, &GammaVector::from_ints(&[0, 1, 0])).unwrap().0, [int(-1), int(-1)]);
        assert_eq!(pi_map(&a, &GammaVector::zero(3)).unwrap().0, [int(-2), int(0)]);
        let c = config_c();
        assert_eq!(pi_map(&c, &GammaVector::from_ints(&[1, 1, 0])).unwrap().0, [int(2), int(-1)]);
        assert_eq!(pi_map(&c, &GammaVector::zero(3)).unwrap().0, [int(0), int(0)]);
        assert!(pi_map(&a, &GammaVector::from_ints(&[1, 0, 0])).is_err());
    }

    #[test]
    fn classification_examples() {
        let b = config_b();
        let t1sq = b.t_pow(1, 2);
        let c = classify_locfin(&b, &key(&b, &t1sq));
        assert!(c.in_a1);
        let pair = b.multiply(&b.t(1), &b.t(2)).unwrap();
        let c = classify_locfin(&b, &key(&b, &pair));
        assert!(!c.in_a1 && c.in_a0);
        let a = config_a();
        assert!(classify_locfin(&a, &BasisKey::one(3)).in_a1);
        let c = config_c();
        assert!(!classify_locfin(&c, &BasisKey::one(3)).in_a1);
    }

    #[test]
    fn orbit_examples() {
        let b = config_b();
        let r = ad_orbit(&b, &b.t_pow(1, 2), &b.t_pow(2, 2), 6);
        assert_eq!(r.verdict, Verdict::Nilpotent(3));
        assert_eq!(&r.dims[..4], &[1, 2, 3, 3]);
        let c = config_c();
        let r = ad_orbit(&c, &c.one(), &c.x(&[1, 0, 0]), 4);
        assert_eq!(r.verdict, Verdict::Stabilized(1));
        let a = config_a();
        let r = ad_orbit(&a, &a.x(&[0, 2, 0]), &a.x(&[0, 0, -1]), 5);
        assert_eq!(r.verdict, Verdict::Growing);
        assert_eq!(r.dims, [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn nilpotency_bounds() {
        let b = config_b();
        let u = key(&b, &b.t_pow(1, 2));
        assert_eq!(nilpotency_bound(&b, &u, &key(&b, &b.t_pow(2, 2))).unwrap(), 3);
        assert_eq!(nilpotency_bound(&b, &u, &BasisKey::one(3)).unwrap(), 1);
        let v = key(&b, &b.multiply(&b.t(2), &b.t(0)).unwrap());
        assert_eq!(nilpotency_bound(&b, &u, &v).unwrap(), 2);
        let pair = key(&b, &b.multiply(&b.t(1), &b.t(2)).unwrap());
        assert_eq!(nilpotency_bound(&b, &pair, &u), Err(Error::NotA1));
    }

    #[test]
    fn eigen_examples() {
        let a = config_a();
        let s: Vec<Element> = a0_list(&a).into_iter().map(|(_, e)| e).collect();
        let (ok, vals) = eigen_check(&a, &s, &a.x(&[0, 1, 0]));
        assert!(ok);
        assert_eq!(vals, [Some(int(-1)), Some(int(-1))]);
        let (ok, _) = eigen_check(&a, &[a.one()], &a.t(0));
        assert!(!ok);
        assert!(eigen_check(&a, &[], &a.t(0)).0);
    }

    #[test]
    fn center_examples() {
        let c = config_c();
        assert!(in_center_b(&c, &GammaVector::from_ints(&[0, 2, 0])).unwrap());
        assert!(!in_center_b(&c, &GammaVector::from_ints(&[1, 0, 0])).unwrap());
        let a = config_a();
        assert!(in_center_b(&a, &GammaVector::zero(3)).unwrap());
    }

    #[test]
    fn bf_bn_examples() {
        let r = bf_bn_report(&config_a());
        assert_eq!((r.count, r.iota3, r.discrepancy), (1, 1, false));
        let r = bf_bn_report(&config_c());
        assert_eq!((r.count, r.iota3, r.discrepancy), (1, 0, true));
        assert!(r.consistent());
    }
}
