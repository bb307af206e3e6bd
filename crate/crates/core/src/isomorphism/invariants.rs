//! Necessary isomorphism invariants.

use std::fmt;

use crate::algebra::Algebra;
use crate::analysis::bf_bn_report;
use crate::indexing::J0;
use crate::lattice::AlgebraConfig;

/// Data that must agree for two algebras to be isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantSummary {
    pub ell: [usize; 6],
    pub j0: J0,
    pub gamma0_trivial: bool,
    pub gamma_rank: usize,
    /// `dim ℬ_F/ℬ_N`
    pub iota3: usize,
}

impl fmt::Display for InvariantSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ell = {:?}, j0 = {:?}, gamma0 trivial = {}, rank = {}, iota3 = {}",
            self.ell, self.j0, self.gamma0_trivial, self.gamma_rank, self.iota3
        )
    }
}

impl InvariantSummary {
    /// Names of the fields that differ; non-empty means non-isomorphic.
    pub fn differences(&self, other: &InvariantSummary) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.ell != other.ell {
            out.push("layout");
        }
        if self.j0 != other.j0 {
            out.push("j0");
        }
        if self.gamma0_trivial != other.gamma0_trivial {
            out.push("gamma0_trivial");
        }
        if self.gamma_rank != other.gamma_rank {
            out.push("gamma_rank");
        }
        if self.iota3 != other.iota3 {
            out.push("iota3");
        }
        out
    }
}

pub fn invariant_summary(cfg: &AlgebraConfig) -> InvariantSummary {
    let alg = Algebra::new(cfg.clone());
    InvariantSummary {
        ell: cfg.layout.ell(),
        j0: cfg.j0,
        gamma0_trivial: cfg.gamma0_trivial(),
        gamma_rank: cfg.gamma.rank(),
        iota3: bf_bn_report(&alg).iota3,
    }
}
