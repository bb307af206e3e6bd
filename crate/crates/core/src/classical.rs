//! The classical contact algebra `𝒦(2k+1)`: polynomials, vector fields, the
//! map `D_K`, and a cross-check against the normalized algebra with a single
//! `I₆` block of size `k`.
//!
//! Variables are numbered `t₁ … t_n` (1-based), `n = 2k+1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Algebra, BasisKey, Element};
use crate::error::{Error, Result};
use crate::indexing::{Layout, J0};
use crate::lattice::{AlgebraConfig, ExpVector, GammaVector, GroupLattice};
use crate::rational::{int, show, Rational};
use crate::report::ValidationReport;

/// A polynomial in `n` variables with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Poly::monomial(vec![0; n], c)
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rational::one())
    }

    /// `c·t^e`.
    pub fn monomial(e: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero(e.len());
        p.add_term(e, c);
        p
    }

    /// The variable `t_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Poly::monomial(e, Rational::one())
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// `∂_{t_i}` (1-based).
    pub fn derive(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, c) in &self.terms {
            if e[i - 1] > 0 {
                let mut f = e.clone();
                f[i - 1] -= 1;
                out.add_term(f, c * int(i64::from(e[i - 1])));
            }
        }
        out
    }

    /// Largest total degree, or `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &-o
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    // exponents add under multiplication
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("t{}", i + 1) } else { format!("t{}^{k}", i + 1) })
                    .collect();
                if vars.is_empty() {
                    show(c)
                } else {
                    format!("{}·{}", show(c), vars.join("·"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Σ X_i ∂_{t_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    pub comps: Vec<Poly>,
}

impl VectorField {
    pub fn zero(n: usize) -> Self {
        VectorField { comps: vec![Poly::zero(n); n] }
    }

    /// `∂_{t_i}` (1-based).
    pub fn partial(n: usize, i: usize) -> Self {
        let mut v = VectorField::zero(n);
        v.comps[i - 1] = Poly::one(n);
        v
    }

    /// `f·∂_{t_i}`.
    pub fn times_partial(f: Poly, i: usize) -> Self {
        let mut v = VectorField::zero(f.nvars());
        v.comps[i - 1] = f;
        v
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// `X(f) = Σ X_i ∂_{t_i} f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.nvars());
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &(c * &f.derive(i + 1));
            }
        }
        out
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, o: &VectorField) -> VectorField {
        VectorField { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})·d/dt{}", i + 1))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `Σ ω_i dt_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneForm {
    pub comps: Vec<Poly>,
}

impl OneForm {
    /// The contact form `dt_n + Σ_{i≤k} (t_i dt_{k+i} − t_{k+i} dt_i)`.
    pub fn contact(k: usize) -> Self {
        let n = 2 * k + 1;
        let mut comps = vec![Poly::zero(n); n];
        comps[n - 1] = Poly::one(n);
        for i in 1..=k {
            comps[k + i - 1] = Poly::var(n, i);
            comps[i - 1] = -&Poly::var(n, k + i);
        }
        OneForm { comps }
    }

    /// Action of a vector field: `X(f·dt_j) = X(f)·dt_j + f·d(X_j)`.
    pub fn act(&self, x: &VectorField) -> OneForm {
        let n = self.comps.len();
        let mut out: Vec<Poly> = self.comps.iter().map(|c| x.apply(c)).collect();
        for (j, f) in self.comps.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            for (m, o) in out.iter_mut().enumerate() {
                let d = x.comps[j].derive(m + 1);
                if !d.is_zero() {
                    *o = &*o + &(f * &d);
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        OneForm { comps: out }
    }
}

fn check_arity(n: usize, k: usize) -> Result<()> {
    if n != 2 * k + 1 {
        return Err(Error::Arity { expected: 2 * k + 1, got: n });
    }
    Ok(())
}

/// `ε(i) = 1` and `ī = k+i` for `i ≤ k`; `ε(j) = −1` and `j̄ = j−k` otherwise.
fn eps_bar(k: usize, i: usize) -> (Rational, usize) {
    if i <= k {
        (int(1), k + i)
    } else {
        (int(-1), i - k)
    }
}

/// `D_K(f)`.
///
/// ```
/// use contact_lie::classical::{dk_map, Poly, VectorField};
/// use contact_lie::rational::int;
/// let v = dk_map(&Poly::one(3), 1).unwrap();
/// assert_eq!(v, VectorField::times_partial(Poly::constant(3, int(2)), 3));
/// ```
pub fn dk_map(f: &Poly, k: usize) -> Result<VectorField> {
    let n = f.nvars();
    check_arity(n, k)?;
    let dn = f.derive(n);
    let mut v = VectorField::zero(n);
    let mut last = f.scale(&int(2));
    for i in 1..=2 * k {
        let (_, ib) = eps_bar(k, i);
        let (eb, _) = eps_bar(k, ib);
        let ti = Poly::var(n, i);
        let d_ib = f.derive(ib);
        v.comps[i - 1] = &(&ti * &dn) + &d_ib.scale(&eb);
        let inner = &(&ti * &dn).scale(&eb) + &d_ib;
        last = &last - &(&Poly::var(n, ib) * &inner);
    }
    v.comps[n - 1] = last;
    Ok(v)
}

/// The commutator `[X,Y]_i = X(Y_i) − Y(X_i)`.
pub fn vf_bracket(x: &VectorField, y: &VectorField) -> Result<VectorField> {
    if x.nvars() != y.nvars() {
        return Err(Error::Arity { expected: x.nvars(), got: y.nvars() });
    }
    Ok(VectorField { comps: x.comps.iter().zip(&y.comps).map(|(xi, yi)| &x.apply(yi) - &y.apply(xi)).collect() })
}

/// `∂ = Σ_{i≤2k} t_i ∂_{t_i}` on a polynomial.
fn euler(f: &Poly) -> Poly {
    let n = f.nvars();
    let mut out = Poly::zero(n);
    for (e, c) in f.terms() {
        let d: u32 = e[..n - 1].iter().sum();
        out.add_term(e.clone(), c * int(i64::from(d)));
    }
    out
}

/// `[f,g] = [f,g]₀ + (2−∂)(f)·∂₀(g) − ∂₀(f)·(2−∂)(g)`.
///
/// ```
/// use contact_lie::classical::{classical_bracket, Poly};
/// let (t1, t2) = (Poly::var(3, 1), Poly::var(3, 2));
/// assert_eq!(classical_bracket(&t1, &t2, 1).unwrap(), Poly::one(3));
/// ```
pub fn classical_bracket(f: &Poly, g: &Poly, k: usize) -> Result<Poly> {
    let n = f.nvars();
    check_arity(n, k)?;
    check_arity(g.nvars(), k)?;
    let mut out = Poly::zero(n);
    for i in 1..=2 * k {
        let (e, ib) = eps_bar(k, i);
        out = &out + &(&f.derive(i) * &g.derive(ib)).scale(&e);
    }
    let two_minus = |p: &Poly| &p.scale(&int(2)) - &euler(p);
    out = &out + &(&two_minus(f) * &g.derive(n));
    out = &out - &(&f.derive(n) * &two_minus(g));
    Ok(out)
}

/// `[D_K f, D_K g] = D_K([f,g])`.
pub fn verify_dk_homomorphism(f: &Poly, g: &Poly, k: usize) -> Result<bool> {
    let lhs = vf_bracket(&dk_map(f, k)?, &dk_map(g, k)?)?;
    let rhs = dk_map(&classical_bracket(f, g, k)?, k)?;
    Ok(lhs == rhs)
}

/// The `u` with `X(ω) = u·ω` for the contact form `ω`, if it exists.
pub fn contact_form_multiplier(x: &VectorField, k: usize) -> Result<Option<Poly>> {
    let n = x.nvars();
    check_arity(n, k)?;
    let w = OneForm::contact(k);
    let image = w.act(x);
    let u = image.comps[n - 1].clone();
    let ok = image.comps.iter().zip(&w.comps).all(|(a, b)| *a == &u * b);
    Ok(ok.then_some(u))
}

/// All monomial exponent vectors in `n` variables of total degree `≤ cap`.
pub fn monomials(n: usize, cap: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=cap {
            cur.push(d);
            go(n, cap - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, cap, &mut Vec::with_capacity(n), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), std::cmp::Reverse(e.clone())));
    out
}

/// The normalized configuration `ℓ = (0,0,0,0,0,k)`, `Γ = {0}`, `σ₀ = 0`, `𝒥₀ = ℕ`.
pub fn normalized_config(k: usize) -> Result<AlgebraConfig> {
    let layout = Layout::new([0, 0, 0, 0, 0, k])?;
    let dim = layout.dim();
    AlgebraConfig::new(layout, false, GroupLattice::new(dim, Vec::new())?, J0::Nat)
}

/// Classical exponent vector ↦ normalized basis key (`t₀ ↔ t_n`, `t_p ↔ t_p`, `t_p̄ ↔ t_{k+p}`).
fn to_key(l: &Layout, k: usize, e: &[u32]) -> BasisKey {
    let dim = l.dim();
    let mut i = ExpVector::zero(dim);
    i.set(0, e[2 * k]);
    for p in 1..=k {
        i.set(l.pos(p), e[p - 1]);
        i.set(l.pos(l.bar_unchecked(p)), e[k + p - 1]);
    }
    BasisKey::new(GammaVector::zero(dim), i)
}

fn from_element(l: &Layout, k: usize, u: &Element) -> Poly {
    let n = 2 * k + 1;
    let mut out = Poly::zero(n);
    for (key, c) in u.terms() {
        let mut e = vec![0; n];
        e[2 * k] = key.i.get(0);
        for p in 1..=k {
            e[p - 1] = key.i.get(l.pos(p));
            e[k + p - 1] = key.i.get(l.pos(l.bar_unchecked(p)));
        }
        out.add_term(e, c.clone());
    }
    out
}

/// Compares the normalized bracket with the classical bracket on all ordered
/// pairs of monomials of total degree `≤ cap`.
pub fn compare_with_normalized(k: usize, cap: u32) -> Result<ValidationReport> {
    let alg = Algebra::new(normalized_config(k)?);
    let l = alg.config().layout.clone();
    let n = 2 * k + 1;
    let monos = monomials(n, cap);
    let mut mismatches = Vec::new();
    let mut count = 0usize;
    for a in &monos {
        for b in &monos {
            count += 1;
            let u = Element::monomial(to_key(&l, k, a), Rational::one());
            let v = Element::monomial(to_key(&l, k, b), Rational::one());
            let lhs = from_element(&l, k, &alg.bracket(&u, &v)?);
            let f = Poly::monomial(a.clone(), Rational::one());
            let g = Poly::monomial(b.clone(), Rational::one());
            let rhs = classical_bracket(&f, &g, k)?;
            if lhs != rhs {
                mismatches.push(format!("[{f}, {g}]: normalized {lhs}, classical {rhs}"));
            }
        }
    }
    let mut r = ValidationReport::new();
    let detail = match mismatches.first() {
        None => format!("{count} ordered pairs agree (k = {k}, degree <= {cap})"),
        Some(m) => format!("{} of {count} pairs differ; first: {m}", mismatches.len()),
    };
    r.push("classical-vs-normalized", mismatches.is_empty(), detail);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dk_examples() {
        let n = 3;
        let (t1, t2) = (Poly::var(n, 1), Poly::var(n, 2));
        let d1 = dk_map(&t1, 1).unwrap();
        assert_eq!(d1, &VectorField::partial(n, 2) + &VectorField::times_partial(t1.clone(), 3));
        let d2 = dk_map(&t2, 1).unwrap();
        let minus = VectorField::times_partial(Poly::constant(n, int(-1)), 1);
        assert_eq!(d2, &minus + &VectorField::times_partial(t2.clone(), 3));
        assert_eq!(vf_bracket(&d1, &d2).unwrap(), dk_map(&Poly::one(n), 1).unwrap());
        assert_eq!(dk_map(&Poly::one(4), 1).unwrap_err().code(), "E_ARITY");
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(3, 4).len(), 35);
    }

    #[test]
    fn agrees_with_normalized_k1() {
        let r = compare_with_normalized(1, 4).unwrap();
        assert!(r.passed(), "{r}");
    }
}
