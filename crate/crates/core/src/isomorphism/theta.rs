//! The isomorphisms `θ`: `σ₀`-normalization, the contact-type construction
//! for `ν(0) = 0`, and the coordinate exchange used first when `ν(0) ≠ 0`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::automorphism::{swap_matrix, AutomorphismG};
use super::character::{extend_character, Character};
use crate::algebra::{Algebra, BasisKey, Element};
use crate::error::{Error, Result};
use crate::indexing::{Block, Layout};
use crate::lattice::{AlgebraConfig, ExpVector, GammaVector, GroupLattice};
use crate::linalg::Matrix;
use crate::rational::{frac, int, Rational};

/// `x^{α,i} ↦ x^{α·M + (ϑ_t(i)/2)·d + c, i}` where `ϑ_t` is the exponent part of the weight.
#[derive(Debug, Clone)]
struct MonomialStage {
    matrix: Matrix,
    exp_dir: GammaVector,
    offset: GammaVector,
}

/// `x^α ς^i ↦ b₀⁻¹χ(α)·x^{τ(α)}·s^i`.
#[derive(Debug, Clone)]
struct ContactStage {
    tau: Matrix,
    chi: Character,
    b0: Rational,
    /// images of `ς`, indexed by interleaved position
    s: Vec<Element>,
    /// `(pos q, pos q̄)` for `q ∈ I_{4,5}`
    shifts: Vec<(usize, usize)>,
}

#[derive(Debug, Clone)]
enum Stage {
    Monomial(MonomialStage),
    Contact(Box<ContactStage>),
}

#[derive(Debug, Clone)]
struct Step {
    stage: Stage,
    source: Algebra,
    target: Algebra,
}

/// A linear map between two algebras, evaluated on basis keys and cached.
#[derive(Debug)]
pub struct ThetaMap {
    source: Algebra,
    target: Algebra,
    tau: Matrix,
    steps: Vec<Step>,
    cache: Mutex<HashMap<BasisKey, Element>>,
}

impl ThetaMap {
    fn new(source: Algebra, target: Algebra, tau: Matrix, steps: Vec<Step>) -> Self {
        ThetaMap { source, target, tau, steps, cache: Mutex::new(HashMap::new()) }
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }

    pub fn target(&self) -> &Algebra {
        &self.target
    }

    /// The linear part of the exponent map.
    pub fn tau(&self) -> &Matrix {
        &self.tau
    }

    /// The character of the contact stage, if there is one.
    pub fn character(&self) -> Option<&Character> {
        self.steps.iter().find_map(|s| match &s.stage {
            Stage::Contact(c) => Some(&c.chi),
            Stage::Monomial(_) => None,
        })
    }

    /// The images `s` of the generators `ς`, by interleaved position.
    pub fn s_images(&self) -> Option<&[Element]> {
        self.steps.iter().find_map(|s| match &s.stage {
            Stage::Contact(c) => Some(c.s.as_slice()),
            Stage::Monomial(_) => None,
        })
    }

    /// Multiplies `χ(alpha)` by `factor` at that single point and clears the
    /// cache. Only useful for building negative controls.
    pub fn corrupt_character(&mut self, alpha: &GammaVector, factor: &Rational) -> bool {
        let hit = self.steps.iter_mut().find_map(|s| match &mut s.stage {
            Stage::Contact(c) => Some(&mut c.chi),
            Stage::Monomial(_) => None,
        });
        let done = hit.is_some_and(|chi| chi.corrupt_at(alpha, factor));
        self.cache.lock().expect("cache lock").clear();
        done
    }

    /// `θ(x^{α,i})`.
    pub fn apply_key(&self, k: &BasisKey) -> Result<Element> {
        self.source.check_key(k)?;
        if let Some(v) = self.cache.lock().expect("cache lock").get(k) {
            return Ok(v.clone());
        }
        let mut cur = Element::monomial(k.clone(), Rational::one());
        for step in &self.steps {
            let mut next = Element::zero();
            for (key, c) in cur.terms() {
                next.add_scaled(&step.apply_key(key)?, c);
            }
            cur = next;
        }
        self.cache.lock().expect("cache lock").insert(k.clone(), cur.clone());
        Ok(cur)
    }

    /// `θ(u)`, extended linearly.
    pub fn apply(&self, u: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (k, c) in u.terms() {
            out.add_scaled(&self.apply_key(k)?, c);
        }
        Ok(out)
    }
}

impl Step {
    fn apply_key(&self, k: &BasisKey) -> Result<Element> {
        match &self.stage {
            Stage::Monomial(m) => {
                let l = &self.source.config().layout;
                let wt: u32 = (1..k.i.len()).filter(|&pos| l.weight_exp(l.index_at(pos))).map(|pos| k.i.get(pos)).sum();
                let half = frac(i64::from(wt), 2);
                let alpha = GammaVector::from_coords(m.matrix.apply_row(k.alpha.coords()));
                let alpha = &(&alpha + &m.exp_dir.scale(&half)) + &m.offset;
                Ok(Element::monomial(BasisKey::new(alpha, k.i.clone()), Rational::one()))
            }
            Stage::Contact(c) => {
                let mut alpha = k.alpha.clone();
                for &(pq, pb) in &c.shifts {
                    let n = k.i.get(pb);
                    if n > 0 {
                        alpha.set(pq, alpha.get(pq) - int(i64::from(n)));
                    }
                }
                let chi = c.chi.eval(&alpha).ok_or_else(|| Error::NotInGamma(alpha.to_string()))?;
                let image = GammaVector::from_coords(c.tau.apply_row(alpha.coords()));
                let dim = image.len();
                let mut out = Element::monomial(BasisKey::new(image, ExpVector::zero(dim)), chi / &c.b0);
                for pos in 0..dim {
                    let n = k.i.get(pos);
                    if n > 0 {
                        out = self.target.mul(&out, &self.target.pow(&c.s[pos], n));
                    }
                }
                Ok(out)
            }
        }
    }
}

/// The `σ₀ = 1_[0]` algebra is isomorphic to one with `σ₀ = 0` via
/// `x^{α,i} ↦ x^{α + (1 − ϑ(α,i)/2)σ₀, i}`.
///
/// The new lattice is generated by the images `γ − (ϑ(γ,0)/2)σ₀` of the
/// generators, plus `σ₀/2` when some exponent carrying weight is admissible.
///
/// ```
/// use contact_lie::indexing::J0;
/// use contact_lie::isomorphism::normalize_sigma0;
/// use contact_lie::lattice::AlgebraConfig;
/// let cfg = AlgebraConfig::from_ints([1, 0, 0, 0, 0, 0], true,
///     &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]], J0::Nat).unwrap();
/// let (normal, theta) = normalize_sigma0(&cfg).unwrap();
/// assert!(!normal.sigma0);
/// let v = theta.apply(&theta.source().x(&[0, 0, 0])).unwrap();
/// assert_eq!(v, theta.target().x(&[1, 0, 0]));
/// ```
pub fn normalize_sigma0(cfg: &AlgebraConfig) -> Result<(AlgebraConfig, ThetaMap)> {
    if !cfg.sigma0 {
        return Err(Error::AlreadyNormalized);
    }
    let l = &cfg.layout;
    let n = cfg.dim();
    let mut m = Matrix::identity(n);
    for pos in 1..n {
        if l.weight_alpha(l.index_at(pos)) {
            m.set(pos, 0, frac(-1, 2));
        }
    }
    let sigma0 = GammaVector::unit(n, 0, Rational::one());
    let mut gens: Vec<GammaVector> =
        cfg.gamma.generators().iter().map(|g| GammaVector::from_coords(m.apply_row(g.coords()))).collect();
    if (1..n).any(|pos| l.weight_exp(l.index_at(pos))) {
        gens.push(sigma0.scale(&frac(1, 2)));
    }
    let target = AlgebraConfig::new(l.clone(), false, GroupLattice::new(n, gens)?, cfg.j0)?;
    let stage = MonomialStage { matrix: m.clone(), exp_dir: -&sigma0, offset: sigma0 };
    let (src, tgt) = (Algebra::new(cfg.clone()), Algebra::new(target.clone()));
    let step = Step { stage: Stage::Monomial(stage), source: src.clone(), target: tgt.clone() };
    Ok((target, ThetaMap::new(src, tgt, m, vec![step])))
}

/// Builds `θ: K(ℓ,0,Γ,𝒥) → K(ℓ,0,Γ′,𝒥)` from `g′_ν` with `Γ′ = τ(Γ)`.
///
/// When `Γ₀ = {0}` the scalar `b₀` only rescales `t₀`, which is not
/// present, so it is taken to be 1.
pub fn build_theta(g: &AutomorphismG, cfg: &AlgebraConfig, target: &AlgebraConfig) -> Result<ThetaMap> {
    if cfg.layout != target.layout || cfg.j0 != target.j0 {
        return Err(Error::LayoutMismatch(format!(
            "({:?}, {:?}) vs ({:?}, {:?})",
            cfg.layout.ell(),
            cfg.j0,
            target.layout.ell(),
            target.j0
        )));
    }
    if cfg.sigma0 || target.sigma0 {
        return Err(Error::ConfigMismatch("both algebras must have sigma0 = 0; normalize first".into()));
    }
    let report = g.validate(cfg, target);
    if !report.passed() {
        let why: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::InvalidAutomorphism(why.join("; ")));
    }
    let g = if cfg.gamma0_trivial() { g.with_unit_b0() } else { g.clone() };
    let l = &cfg.layout;
    let tau = g.tau_matrix(l)?;
    check_gamma(&tau, cfg, target)?;

    let (src, tgt) = (Algebra::new(cfg.clone()), Algebra::new(target.clone()));
    let steps = if g.fixes_zero() {
        vec![contact_step(&g, &src, &tgt)?]
    } else {
        let p = g.nu_inverse_zero();
        let swap = swap_matrix(l, p);
        let gens =
            cfg.gamma.generators().iter().map(|v| GammaVector::from_coords(swap.apply_row(v.coords()))).collect();
        let mid_cfg = AlgebraConfig::new(l.clone(), false, GroupLattice::new(cfg.dim(), gens)?, cfg.j0)?;
        let mid = Algebra::new(mid_cfg);
        let first = MonomialStage { matrix: swap, exp_dir: GammaVector::zero(cfg.dim()), offset: -mid.sigma(p) };
        let second = contact_step(&g.with_nu(g.reduced_nu()), &mid, &tgt)?;
        vec![Step { stage: Stage::Monomial(first), source: src.clone(), target: mid }, second]
    };
    Ok(ThetaMap::new(src, tgt, tau, steps))
}

/// `Γ′ = τ(Γ)`, tested on generators in both directions.
fn check_gamma(tau: &Matrix, cfg: &AlgebraConfig, target: &AlgebraConfig) -> Result<()> {
    for v in cfg.gamma.generators() {
        let w = GammaVector::from_coords(tau.apply_row(v.coords()));
        if !target.gamma.contains(&w) {
            return Err(Error::GammaMismatch(format!("tau{v} = {w} is not in the target lattice")));
        }
    }
    let inv = tau.inverse().ok_or_else(|| Error::InvalidAutomorphism("tau is not invertible".into()))?;
    for w in target.gamma.generators() {
        let v = GammaVector::from_coords(inv.apply_row(w.coords()));
        if !cfg.gamma.contains(&v) {
            return Err(Error::GammaMismatch(format!("tau^-1{w} = {v} is not in the source lattice")));
        }
    }
    Ok(())
}

fn column(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.transpose().apply_row(v)
}

/// The contact stage for `ν(0) = 0`.
fn contact_step(g: &AutomorphismG, src: &Algebra, tgt: &Algebra) -> Result<Step> {
    let cfg = src.config();
    let l: &Layout = &cfg.layout;
    let (i3, i5) = (l.iota()[2], l.iota()[4]);
    let k45 = i5 - i3;
    let off = 1 + 2 * i3;
    let n = cfg.dim();
    let nu = &g.nu;
    let j0 = tgt.config().j0;

    let tau = g.tau_fixing_zero(l, nu);
    let chi = extend_character(cfg, g)?;

    let tp = |s: usize| if l.t_allowed(s, j0) { tgt.t(s) } else { Element::zero() };
    let xs = |r: usize| -> Element {
        if r == 0 {
            return tgt.one();
        }
        let alpha = -tgt.sigma(r);
        let i = match l.block(r) {
            Some(Block::I4 | Block::I5) => ExpVector::unit(n, l.pos(l.bar_unchecked(r)), 1),
            _ => ExpVector::zero(n),
        };
        Element::monomial(BasisKey::new(alpha, i), Rational::one())
    };

    // D = (0, 1−c₁, …, 1−c_{ι₅}) from the row sums of g′
    let full = g.g_prime(l);
    let mut d = vec![Rational::zero()];
    for p in 1..=i5 {
        let row = if p <= i3 { 2 * p - 1 } else { off + (p - i3 - 1) };
        d.push(Rational::one() - full.row_sum(row));
    }

    // g̃′ with [[g,h],[0,f]]·P′ = P′·g̃′
    let m = off + k45;
    let mut pp = Matrix::zeros(m, 1 + i5);
    let mut left = Matrix::zeros(1 + i5, m);
    pp.set(0, 0, int(2));
    left.set(0, 0, frac(1, 2));
    for p in 1..=i3 {
        pp.set(2 * p - 1, p, int(-1));
        pp.set(2 * p, p, int(1));
        left.set(p, 2 * p, int(1));
    }
    for c in 0..k45 {
        pp.set(off + c, 1 + i3 + c, int(-1));
        left.set(1 + i3 + c, off + c, int(-1));
    }
    let top = g.g_top(l).mul(&pp);
    let gt = left.mul(&top);
    if pp.mul(&gt) != top {
        return Err(Error::InvalidAutomorphism("g' does not preserve the pair structure".into()));
    }
    let gt_inv = gt.inverse().ok_or_else(|| Error::InvalidAutomorphism("reduced matrix is singular".into()))?;
    let dt = column(&gt_inv, &d);

    let mut s = vec![Element::zero(); n];

    // s₀ = b₀t′₀ − Σ_r D̃_r·x^{−σ_{ν(r)}}
    let mut s0 = tp(0).scale(&g.b0);
    for (r, c) in dt.iter().enumerate() {
        s0.add_scaled(&xs(nu[r]), &-c);
    }
    s[0] = s0;

    // pairs of I_{1,3}: (−s_p̄, s_p) = (−t′_{ν(p)̄}, t′_{ν(p)})·b_p g_p⁻¹ + E_p
    let any_d = dt.iter().any(|c| !c.is_zero());
    for p in 1..=i3 {
        let gp_inv =
            g.pair_matrix(l, p).inverse().ok_or_else(|| Error::InvalidAutomorphism(format!("pair {p} is singular")))?;
        let gtil: Vec<Vec<Rational>> = (0..2).map(|r| (0..2).map(|c| g.b(p) * gp_inv.get(r, c)).collect()).collect();
        let q = nu[p];
        let nt = [-&tp(l.bar_unchecked(q)), tp(q)];
        let mut out = [Element::zero(), Element::zero()];
        for k in 0..2 {
            for kk in 0..2 {
                out[k].add_scaled(&nt[kk], &gtil[kk][k]);
            }
            if any_d {
                for (r, dr) in dt.iter().enumerate() {
                    if dr.is_zero() {
                        continue;
                    }
                    let xr = xs(nu[r]);
                    for kk in 0..2 {
                        let coeff = frac(1, 2) * dr * &gtil[kk][k];
                        out[k].add_scaled(&tgt.br(&xr, &nt[kk]), &coeff);
                    }
                }
            }
        }
        let [neg_bar, plain] = out;
        s[l.pos(l.bar_unchecked(p))] = -&neg_bar;
        s[l.pos(p)] = plain;
    }

    if k45 > 0 {
        let f_inv = g.f.inverse().ok_or_else(|| Error::InvalidAutomorphism("f is singular".into()))?;
        // h′ with h = P·h′, then h̃ = diag(b₀,b₁,…)⁻¹·h′·f⁻¹
        let mut hp = Matrix::zeros(1 + i3, k45);
        for c in 0..k45 {
            hp.set(0, c, g.h.get(0, c) * frac(1, 2));
            for p in 1..=i3 {
                hp.set(p, c, g.h.get(2 * p, c).clone());
            }
        }
        let mut hd = hp.mul(&f_inv);
        for c in 0..k45 {
            hd.set(0, c, hd.get(0, c) / &g.b0);
            for p in 1..=i3 {
                hd.set(p, c, hd.get(p, c) / g.b(p));
            }
        }
        for c in 0..k45 {
            let q = 1 + i3 + c;
            let mut v = Element::zero();
            for cc in 0..k45 {
                v.add_scaled(&xs(1 + i3 + cc), f_inv.get(cc, c));
            }
            for (r, &target) in nu.iter().enumerate().take(i3 + 1) {
                v.add_scaled(&xs(target), hd.get(r, c));
            }
            s[l.pos(l.bar_unchecked(q))] = v.scale(&g.b0);
            if l.block(q) == Some(Block::I5) {
                let mut w = Element::zero();
                for cc in l.ell()[3]..k45 {
                    w.add_scaled(&tp(1 + i3 + cc), g.f.get(c, cc));
                }
                s[l.pos(q)] = w;
            }
        }
    }
    for r in l.set(6) {
        s[l.pos(r)] = tp(r);
        s[l.pos(l.bar_unchecked(r))] = tp(l.bar_unchecked(r)).scale(&g.b0);
    }

    let shifts = l.range(4, 5).map(|q| (l.pos(q), l.pos(l.bar_unchecked(q)))).collect();
    let stage = ContactStage { tau, chi, b0: g.b0.clone(), s, shifts };
    Ok(Step { stage: Stage::Contact(Box::new(stage)), source: src.clone(), target: tgt.clone() })
}
