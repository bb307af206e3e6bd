//! Integer row echelon (Hermite) form with a unimodular transform.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::GammaVector;
use crate::rational::Rational;

/// Echelon basis of `L·⟨generators⟩ ⊂ ℤⁿ`, where `L` clears all denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Hnf {
    scale: BigInt,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    /// `rows[k] = Σ_j transform[k][j] · L·generators[j]`
    transform: Vec<Vec<BigInt>>,
    ngens: usize,
}

fn axpy(target: &mut [BigInt], q: &BigInt, source: &[BigInt]) {
    for (t, s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
}

impl Hnf {
    pub(crate) fn new(dim: usize, gens: &[GammaVector]) -> Hnf {
        let scale = gens.iter().flat_map(|g| g.coords().iter()).fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let m = gens.len();
        let mut a: Vec<Vec<BigInt>> =
            gens.iter().map(|g| g.coords().iter().map(|c| (c * &scale).to_integer()).collect()).collect();
        let mut u: Vec<Vec<BigInt>> =
            (0..m).map(|i| (0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
        let mut pivots = Vec::new();
        let mut k = 0;
        for col in 0..dim {
            if k == m {
                break;
            }
            loop {
                let best =
                    (k..m).filter(|&r| !a[r][col].is_zero()).min_by(|&x, &y| a[x][col].abs().cmp(&a[y][col].abs()));
                let Some(best) = best else { break };
                a.swap(k, best);
                u.swap(k, best);
                let mut done = true;
                for r in k + 1..m {
                    if a[r][col].is_zero() {
                        continue;
                    }
                    let q = &a[r][col] / &a[k][col];
                    let (pa, pu) = (a[k].clone(), u[k].clone());
                    axpy(&mut a[r], &q, &pa);
                    axpy(&mut u[r], &q, &pu);
                    if !a[r][col].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if k < m && !a[k][col].is_zero() {
                if a[k][col].is_negative() {
                    a[k].iter_mut().for_each(|x| *x = -&*x);
                    u[k].iter_mut().for_each(|x| *x = -&*x);
                }
                for r in 0..k {
                    let q = a[r][col].div_floor(&a[k][col]);
                    if !q.is_zero() {
                        let (pa, pu) = (a[k].clone(), u[k].clone());
                        axpy(&mut a[r], &q, &pa);
                        axpy(&mut u[r], &q, &pu);
                    }
                }
                pivots.push(col);
                k += 1;
            }
        }
        a.truncate(k);
        u.truncate(k);
        Hnf { scale, rows: a, pivots, transform: u, ngens: m }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Row `k` divided back by the scale, as a lattice vector.
    pub(crate) fn basis_vector(&self, k: usize) -> GammaVector {
        GammaVector::from_coords(self.rows[k].iter().map(|x| Rational::new(x.clone(), self.scale.clone())).collect())
    }

    pub(crate) fn pivot(&self, k: usize) -> usize {
        self.pivots[k]
    }

    /// Integer coordinates over the echelon basis, if `v` is in the lattice.
    pub(crate) fn basis_coords(&self, v: &GammaVector) -> Option<Vec<BigInt>> {
        let mut w = Vec::with_capacity(v.len());
        for c in v.coords() {
            let s = c * &self.scale;
            if !s.is_integer() {
                return None;
            }
            w.push(s.to_integer());
        }
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let (q, r) = w[col].div_rem(&row[col]);
            if !r.is_zero() {
                return None;
            }
            axpy(&mut w, &q, row);
            coords.push(q);
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }

    /// Integer coefficients over the original generator list.
    pub(crate) fn generator_coords(&self, v: &GammaVector) -> Option<Vec<BigInt>> {
        let c = self.basis_coords(v)?;
        let mut out = vec![BigInt::zero(); self.ngens];
        for (ck, uk) in c.iter().zip(&self.transform) {
            for (o, x) in out.iter_mut().zip(uk) {
                *o += ck * x;
            }
        }
        Some(out)
    }

    /// Rational coordinates over the echelon basis, if `v` is in the rational span.
    pub(crate) fn span_coords(&self, v: &GammaVector) -> Option<Vec<Rational>> {
        let mut w: Vec<Rational> = v.coords().iter().map(|c| c * Rational::from_integer(self.scale.clone())).collect();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            let q = &w[col] / Rational::from_integer(row[col].clone());
            for (t, s) in w.iter_mut().zip(row) {
                *t -= &q * Rational::from_integer(s.clone());
            }
            coords.push(q);
        }
        w.iter().all(Zero::is_zero).then_some(coords)
    }
}
