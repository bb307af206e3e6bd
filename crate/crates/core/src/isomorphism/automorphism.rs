//! Elements `g′_ν` of the automorphism group and the induced map `τ` on `Γ`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::indexing::{Block, Layout, J0};
use crate::lattice::{AlgebraConfig, GammaVector, GroupLattice};
use crate::linalg::Matrix;
use crate::rational::{frac, int, show, Rational};
use crate::report::ValidationReport;

/// The `(a_p, b_p)` parameters of one `I₁ ∪ I₂ ∪ I₃` pair block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairBlock {
    pub a: Rational,
    pub b: Rational,
}

impl PairBlock {
    pub fn identity() -> Self {
        PairBlock { a: Rational::zero(), b: Rational::one() }
    }
}

/// Block data `(b₀, g_p, h, f)` of `g′` together with the permutation `ν` of `Î`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismG {
    pub b0: Rational,
    /// one block per `p ∈ I_{1,3}`, in index order
    pub pairs: Vec<PairBlock>,
    /// `(1+2ι₃) × (ℓ₄+ℓ₅)`
    pub h: Matrix,
    /// `(ℓ₄+ℓ₅) × (ℓ₄+ℓ₅)`, block upper triangular
    pub f: Matrix,
    /// `nu[p] = ν(p)` for `p ∈ 0..=ι₆`
    pub nu: Vec<usize>,
}

fn l45(l: &Layout) -> usize {
    l.ell()[3] + l.ell()[4]
}

impl AutomorphismG {
    pub fn identity(l: &Layout) -> Self {
        let i3 = l.iota()[2];
        AutomorphismG {
            b0: Rational::one(),
            pairs: vec![PairBlock::identity(); i3],
            h: Matrix::zeros(1 + 2 * i3, l45(l)),
            f: Matrix::identity(l45(l)),
            nu: (0..=l.iota6()).collect(),
        }
    }

    /// The `2×2` block `g_p` of a pair.
    pub fn pair_matrix(&self, l: &Layout, p: usize) -> Matrix {
        let PairBlock { a, b } = &self.pairs[p - 1];
        let one = Rational::one();
        if l.block(p) == Some(Block::I2) {
            Matrix::from_rows(vec![vec![one.clone(), &one - b], vec![Rational::zero(), b.clone()]])
        } else {
            Matrix::from_rows(vec![vec![&one - a, &one - a - b], vec![a.clone(), a + b]])
        }
    }

    pub fn b(&self, p: usize) -> &Rational {
        &self.pairs[p - 1].b
    }

    /// `ν⁻¹(0)`.
    pub fn nu_inverse_zero(&self) -> usize {
        self.nu.iter().position(|&x| x == 0).unwrap_or(0)
    }

    /// Whether this is the `ν(0) = 0` case.
    pub fn fixes_zero(&self) -> bool {
        self.nu.first() == Some(&0)
    }

    /// Copy with `b₀ = 1`.
    pub fn with_unit_b0(&self) -> Self {
        AutomorphismG { b0: Rational::one(), ..self.clone() }
    }

    /// Copy with `ν` replaced.
    pub fn with_nu(&self, nu: Vec<usize>) -> Self {
        AutomorphismG { nu, ..self.clone() }
    }

    /// Copy with `ν` replaced by `ν′` (`ν′(0) = 0`, `ν′(ν⁻¹(0)) = ν(0)`).
    pub fn reduced_nu(&self) -> Vec<usize> {
        let mut nu = self.nu.clone();
        let p = self.nu_inverse_zero();
        if p != 0 {
            nu[p] = nu[0];
            nu[0] = 0;
        }
        nu
    }

    /// The assembled `g′` in the block coordinate order of [`block_order`].
    pub fn g_prime(&self, l: &Layout) -> Matrix {
        let n = l.dim();
        let i3 = l.iota()[2];
        let k = l45(l);
        let mut g = Matrix::identity(n);
        g.set(0, 0, self.b0.clone());
        for p in 1..=i3 {
            let gp = self.pair_matrix(l, p);
            for r in 0..2 {
                for c in 0..2 {
                    g.set(2 * p - 1 + r, 2 * p - 1 + c, gp.get(r, c).clone());
                }
            }
        }
        let off = 1 + 2 * i3;
        for r in 0..off {
            for c in 0..k {
                g.set(r, off + c, self.h.get(r, c).clone());
            }
        }
        for r in 0..k {
            for c in 0..k {
                g.set(off + r, off + c, self.f.get(r, c).clone());
            }
        }
        g
    }

    /// The top-left block `[[g, h], [0, f]]` of `g′`.
    pub(crate) fn g_top(&self, l: &Layout) -> Matrix {
        let m = 1 + 2 * l.iota()[2] + l45(l);
        let full = self.g_prime(l);
        let mut out = Matrix::zeros(m, m);
        for r in 0..m {
            for c in 0..m {
                out.set(r, c, full.get(r, c).clone());
            }
        }
        out
    }

    /// `τ` as a matrix acting on row vectors in interleaved coordinates.
    pub fn tau_matrix(&self, l: &Layout) -> Result<Matrix> {
        if self.fixes_zero() {
            return Ok(self.tau_fixing_zero(l, &self.nu));
        }
        let p = self.nu_inverse_zero();
        if l.block(p) != Some(Block::I1) {
            return Err(Error::InvalidAutomorphism(format!("nu moves 0 but nu^-1(0) = {p} is not in I1")));
        }
        Ok(swap_matrix(l, p).mul(&self.tau_fixing_zero(l, &self.reduced_nu())))
    }

    pub(crate) fn tau_fixing_zero(&self, l: &Layout, nu: &[usize]) -> Matrix {
        let n = l.dim();
        let order = block_order(l);
        let mut slot = vec![0; n];
        for (s, &pos) in order.iter().enumerate() {
            slot[pos] = s;
        }
        let g = self.g_prime(l);
        let mut t = Matrix::zeros(n, n);
        for i in 0..n {
            let row = slot[i];
            t.set(i, 0, g.get(row, slot[0]).clone());
            for p in 1..=l.iota6() {
                let q = nu[p];
                t.set(i, l.pos(q), g.get(row, slot[l.pos(p)]).clone());
                t.set(i, l.pos(l.bar_unchecked(q)), g.get(row, slot[l.pos(l.bar_unchecked(p))]).clone());
            }
        }
        t
    }

    /// `τ(α)`.
    ///
    /// ```
    /// use contact_lie::indexing::Layout;
    /// use contact_lie::isomorphism::{AutomorphismG, PairBlock};
    /// use contact_lie::lattice::GammaVector;
    /// use contact_lie::rational::int;
    /// let l = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
    /// let mut g = AutomorphismG::identity(&l);
    /// g.pairs[0] = PairBlock { a: int(0), b: int(2) };
    /// let t = g.tau_apply(&l, &GammaVector::from_ints(&[0, 1, 0])).unwrap();
    /// assert_eq!(t, GammaVector::from_ints(&[0, 1, -1]));
    /// ```
    pub fn tau_apply(&self, l: &Layout, alpha: &GammaVector) -> Result<GammaVector> {
        if alpha.len() != l.dim() {
            return Err(Error::ConfigMismatch(format!("{alpha} has the wrong length")));
        }
        let t = self.tau_matrix(l)?;
        Ok(GammaVector::from_coords(t.apply_row(alpha.coords())))
    }

    /// Checks the block shapes and constraints against the two configurations.
    pub fn validate(&self, cfg: &AlgebraConfig, target: &AlgebraConfig) -> ValidationReport {
        let l = &cfg.layout;
        let mut r = ValidationReport::new();
        r.push(
            "layout",
            cfg.layout == target.layout,
            format!("source {:?}, target {:?}", cfg.layout.ell(), target.layout.ell()),
        );
        r.push("monoid", cfg.j0 == target.j0, format!("source {:?}, target {:?}", cfg.j0, target.j0));
        r.push("b0", !self.b0.is_zero(), format!("b0 = {}", show(&self.b0)));

        let i3 = l.iota()[2];
        if self.pairs.len() != i3 {
            r.push("pairs", false, format!("expected {i3} pair blocks, got {}", self.pairs.len()));
        } else {
            for p in 1..=i3 {
                let PairBlock { a, b } = &self.pairs[p - 1];
                let det = self.pair_matrix(l, p).determinant();
                let mut ok = !b.is_zero() && det == *b;
                let mut detail = format!("a = {}, b = {}, det = {}", show(a), show(b), show(&det));
                if l.block(p) == Some(Block::I2) && !a.is_zero() {
                    ok = false;
                    detail.push_str("; a must vanish on I2");
                }
                r.push(format!("pair[{p}]"), ok, detail);
            }
        }

        let k = l45(l);
        let h_shape = self.h.rows() == 1 + 2 * i3 && self.h.cols() == k;
        r.push("h-shape", h_shape, format!("{}x{}, expected {}x{k}", self.h.rows(), self.h.cols(), 1 + 2 * i3));
        if h_shape {
            let mut bad = Vec::new();
            if cfg.j0 == J0::Nat && (0..k).any(|c| !self.h.get(0, c).is_zero()) {
                bad.push("row 0 must vanish when J0 = N".to_string());
            }
            for p in 1..=i3 {
                let (rp, rb) = (2 * p - 1, 2 * p);
                if l.block(p) == Some(Block::I1) {
                    if (0..k).any(|c| *self.h.get(rb, c) != -self.h.get(rp, c)) {
                        bad.push(format!("rows of pair {p} must be negatives of each other"));
                    }
                } else if (0..k).any(|c| !self.h.get(rp, c).is_zero() || !self.h.get(rb, c).is_zero()) {
                    bad.push(format!("rows of pair {p} must vanish outside I1"));
                }
            }
            r.push("h-rows", bad.is_empty(), if bad.is_empty() { "ok".to_string() } else { bad.join("; ") });
        }

        let f_shape = self.f.rows() == k && self.f.cols() == k;
        r.push("f-shape", f_shape, format!("{}x{}, expected {k}x{k}", self.f.rows(), self.f.cols()));
        if f_shape {
            let (l4, l5) = (l.ell()[3], l.ell()[4]);
            let lower_zero = (l4..k).all(|i| (0..l4).all(|j| self.f.get(i, j).is_zero()));
            let sub = |o: usize, n: usize| {
                Matrix::from_rows((0..n).map(|i| (0..n).map(|j| self.f.get(o + i, o + j).clone()).collect()).collect())
            };
            let a_ok = l4 == 0 || !sub(0, l4).determinant().is_zero();
            let b_ok = l5 == 0 || !sub(l4, l5).determinant().is_zero();
            r.push(
                "f-blocks",
                lower_zero && a_ok && b_ok,
                format!("lower-left zero: {lower_zero}, A invertible: {a_ok}, B invertible: {b_ok}"),
            );
        }

        if h_shape && f_shape && self.pairs.len() == i3 && !cfg.gamma0_trivial() {
            let g = self.g_prime(l);
            let head: Rational = (1..g.cols()).map(|c| g.get(0, c).clone()).sum();
            let rows_ok = (1..g.rows()).all(|i| g.row_sum(i).is_one());
            r.push(
                "row-sums",
                head.is_zero() && rows_ok,
                format!("row 0 off-diagonal sum = {}, other rows sum to 1: {rows_ok}", show(&head)),
            );
        }

        r.push("nu", self.nu_ok(l, cfg.j0).is_ok(), self.nu_ok(l, cfg.j0).err().unwrap_or_else(|| "ok".into()));
        if r.passed() {
            let issues = self.scope_issues(cfg);
            r.note(
                "construction-scope",
                issues.is_empty(),
                if issues.is_empty() { "covered".to_string() } else { issues.join("; ") },
            );
        }
        r
    }

    /// Situations where the explicit `θ` is known not to be a homomorphism.
    ///
    /// With `Γ₀ = {0}` the element `t₀` forces the row sums of `g_p` on
    /// `I₂ ∪ I₃` and of `B` to be 1; the exchange used when `ν(0) ≠ 0` only
    /// works when no exponent carries weight (`ℓ₄ = ℓ₅ = ℓ₆ = 0`).
    pub fn scope_issues(&self, cfg: &AlgebraConfig) -> Vec<String> {
        let l = &cfg.layout;
        let mut out = Vec::new();
        if cfg.gamma0_trivial() {
            for p in l.range(2, 3) {
                let c = self.pair_matrix(l, p).row_sum(0);
                if !c.is_one() {
                    out.push(format!("pair {p} has row sum {} with Gamma0 = {{0}}", show(&c)));
                }
            }
            let (l4, k) = (l.ell()[3], l45(l));
            for r in l4..k {
                let c: Rational = (l4..k).map(|c| self.f.get(r, c).clone()).sum();
                if !c.is_one() {
                    out.push(format!("row {} of B sums to {} with Gamma0 = {{0}}", r - l4 + 1, show(&c)));
                }
            }
        }
        if !self.fixes_zero() && l.ell()[3] + l.ell()[4] + l.ell()[5] > 0 {
            out.push("nu moves 0 while weighted exponents exist".into());
        }
        out
    }

    fn nu_ok(&self, l: &Layout, j0: J0) -> std::result::Result<(), String> {
        let n = l.iota6();
        if self.nu.len() != n + 1 {
            return Err(format!("nu has {} entries, expected {}", self.nu.len(), n + 1));
        }
        let mut seen = vec![false; n + 1];
        for &x in &self.nu {
            if x > n || std::mem::replace(&mut seen[x], true) {
                return Err("nu is not a permutation of 0..=iota6".into());
            }
        }
        let class = |p: usize| match l.block(p) {
            None | Some(Block::I1) => 1,
            Some(b) => b.number(),
        };
        for p in 0..=n {
            let q = self.nu[p];
            if class(p) != class(q) {
                return Err(format!("nu({p}) = {q} leaves its block"));
            }
            if class(p) >= 4 && p != q {
                return Err(format!("nu must fix {p} in I4..I6"));
            }
        }
        if j0 == J0::Nat && self.nu[0] != 0 {
            return Err("nu(0) must be 0 when J0 = N".into());
        }
        Ok(())
    }
}

/// Natural coordinate positions listed in the block order of `g′`:
/// `Ĵ_{1,3}` interleaved, then `I_{4,5}`, then `Ī_{4,5}`, then `J₆` interleaved.
pub fn block_order(l: &Layout) -> Vec<usize> {
    let i3 = l.iota()[2];
    let mut v: Vec<usize> = (0..=2 * i3).collect();
    v.extend(l.range(4, 5).map(|q| l.pos(q)));
    v.extend(l.range(4, 5).map(|q| l.pos(l.bar_unchecked(q))));
    for r in l.set(6) {
        v.push(l.pos(r));
        v.push(l.pos(l.bar_unchecked(r)));
    }
    v
}

/// The linear substitution exchanging the roles of `0` and the `I₁` pair `p`.
pub(crate) fn swap_matrix(l: &Layout, p: usize) -> Matrix {
    let n = l.dim();
    let (pp, pb) = (l.pos(p), l.pos(l.bar_unchecked(p)));
    let mut m = Matrix::zeros(n, n);
    for k in 1..n {
        if k != pp && k != pb {
            m.set(k, k, int(1));
        }
    }
    m.set(pb, 0, frac(1, 2));
    m.set(pp, 0, frac(-1, 2));
    for k in 1..n {
        if l.weight_alpha(l.index_at(k)) {
            m.set(k, pp, frac(-1, 2));
            m.set(k, pb, frac(-1, 2));
        }
    }
    m.set(0, pp, int(-1));
    m.set(0, pb, int(1));
    m
}

/// The configuration with lattice `τ(Γ)` (generators mapped one by one).
pub fn image_config(g: &AutomorphismG, cfg: &AlgebraConfig) -> Result<AlgebraConfig> {
    let l = &cfg.layout;
    let g = if cfg.gamma0_trivial() { g.with_unit_b0() } else { g.clone() };
    let t = g.tau_matrix(l)?;
    let gens = cfg.gamma.generators().iter().map(|v| GammaVector::from_coords(t.apply_row(v.coords()))).collect();
    AlgebraConfig::new(l.clone(), cfg.sigma0, GroupLattice::new(cfg.dim(), gens)?, cfg.j0)
}

/// Free-function form of [`AutomorphismG::validate`].
pub fn validate_automorphism(g: &AutomorphismG, cfg: &AlgebraConfig, target: &AlgebraConfig) -> ValidationReport {
    g.validate(cfg, target)
}
