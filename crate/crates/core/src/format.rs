//! Text formats at the crate boundary: TOML configuration and certificate
//! files, and JSON element literals.
//!
//! Rationals are always written as `"p/q"` (or `"p"`) strings. Parse
//! failures carry the source line of the offending value.

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::algebra::{BasisKey, Element};
use crate::error::{Error, Result};
use crate::indexing::{Layout, J0};
use crate::isomorphism::{AutomorphismG, PairBlock};
use crate::lattice::{AlgebraConfig, ExpVector, GammaVector, GroupLattice, LineWitness};
use crate::linalg::Matrix;
use crate::rational::{self, show, Rational};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    ell: Spanned<Vec<usize>>,
    #[serde(default)]
    sigma0: Option<Spanned<u8>>,
    gamma: RawGamma,
    j0: Spanned<String>,
    #[serde(default)]
    seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGamma {
    generators: Vec<Spanned<Vec<String>>>,
    #[serde(default)]
    line_witnesses: Vec<Spanned<RawWitness>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWitness {
    index: usize,
    combination: Vec<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCertificate {
    #[serde(default)]
    b0: Option<Spanned<String>>,
    #[serde(default)]
    pairs: Vec<Spanned<RawPair>>,
    #[serde(default)]
    h: Option<Spanned<Vec<Vec<String>>>>,
    #[serde(default)]
    f: Option<Spanned<Vec<Vec<String>>>>,
    #[serde(default)]
    nu: Option<Spanned<Vec<usize>>>,
    #[serde(default)]
    chi_corruption: Option<Spanned<RawCorruption>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPair {
    a: String,
    b: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCorruption {
    alpha: Vec<String>,
    factor: String,
}

/// A parsed configuration file.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigFile {
    pub config: AlgebraConfig,
    pub seed: u64,
}

/// A parsed certificate: the automorphism data and an optional deliberate
/// corruption of the character, used as a negative control.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub g: AutomorphismG,
    pub chi_corruption: Option<(GammaVector, Rational)>,
}

/// Maps byte offsets to 1-based line numbers.
struct Lines<'a>(&'a str);

impl Lines<'_> {
    fn line(&self, offset: usize) -> usize {
        1 + self.0[..offset.min(self.0.len())].bytes().filter(|&b| b == b'\n').count()
    }

    fn err<T>(&self, span: std::ops::Range<usize>, msg: impl std::fmt::Display) -> Result<T> {
        Err(Error::Parse(format!("line {}: {msg}", self.line(span.start))))
    }

    fn rationals(&self, span: std::ops::Range<usize>, v: &[String]) -> Result<Vec<Rational>> {
        v.iter().map(|s| rational::parse(s).or_else(|e| self.err(span.clone(), e))).collect()
    }
}

fn toml_error(src: &str, e: toml::de::Error) -> Error {
    let lines = Lines(src);
    let msg = e.message().to_string();
    match e.span() {
        Some(span) => Error::Parse(format!("line {}: {msg}", lines.line(span.start))),
        None => Error::Parse(msg),
    }
}

/// Parses a configuration file.
///
/// ```
/// use contact_lie::format::parse_config;
/// let src = "ell = [1,0,0,0,0,0]\nj0 = \"nat\"\n[gamma]\ngenerators = [[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]\n";
/// let f = parse_config(src).unwrap();
/// assert_eq!(f.config.gamma.rank(), 2);
/// let bad = "ell = [1,0,0,0,0,0]\nj0 = \"nat\"\n[gamma]\ngenerators = [[\"0\",\"x\",\"0\"]]\n";
/// assert!(parse_config(bad).unwrap_err().to_string().starts_with("line 4:"));
/// ```
pub fn parse_config(src: &str) -> Result<ConfigFile> {
    let raw: RawConfig = toml::from_str(src).map_err(|e| toml_error(src, e))?;
    let lines = Lines(src);
    let ell_span = raw.ell.span();
    let ell: [usize; 6] = match raw.ell.into_inner().try_into() {
        Ok(a) => a,
        Err(v) => return lines.err(ell_span, format!("ell needs 6 entries, found {}", Vec::len(&v))),
    };
    let layout = Layout::new(ell).or_else(|e| lines.err(ell_span.clone(), e))?;
    let sigma0 = match raw.sigma0 {
        None => false,
        Some(s) => match *s.get_ref() {
            0 => false,
            1 => true,
            n => return lines.err(s.span(), format!("sigma0 must be 0 or 1, found {n}")),
        },
    };
    let j0 = match raw.j0.get_ref().as_str() {
        "zero" => J0::Zero,
        "nat" => J0::Nat,
        other => return lines.err(raw.j0.span(), format!("j0 must be \"zero\" or \"nat\", found {other:?}")),
    };
    let dim = layout.dim();
    let mut gens = Vec::new();
    for g in &raw.gamma.generators {
        let v = lines.rationals(g.span(), g.get_ref())?;
        if v.len() != dim {
            return lines.err(g.span(), format!("generator has {} coordinates, layout needs {dim}", v.len()));
        }
        gens.push(GammaVector::from_coords(v));
    }
    let mut witnesses = Vec::new();
    for w in &raw.gamma.line_witnesses {
        let RawWitness { index, combination } = w.get_ref();
        if combination.len() != gens.len() {
            return lines.err(
                w.span(),
                format!("witness combination has {} entries, there are {} generators", combination.len(), gens.len()),
            );
        }
        witnesses.push(LineWitness { index: *index, combination: combination.clone() });
    }
    let gamma = GroupLattice::new(dim, gens)?.with_witnesses(witnesses);
    let config = AlgebraConfig::new(layout, sigma0, gamma, j0)?;
    Ok(ConfigFile { config, seed: raw.seed.unwrap_or(0) })
}

fn matrix(lines: &Lines, m: &Spanned<Vec<Vec<String>>>, rows: usize, cols: usize, name: &str) -> Result<Matrix> {
    let span = m.span();
    let raw = m.get_ref();
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return lines.err(span, format!("{name} must be {rows}x{cols}"));
    }
    if rows == 0 || cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    let data = raw.iter().map(|r| lines.rationals(span.clone(), r)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(data))
}

/// Parses a certificate against the layout of its source configuration.
///
/// Omitted fields default to the identity: `b0 = 1`, `a = 0`, `b = 1`,
/// `h = 0`, `f = 1`, `nu = id`.
///
/// ```
/// use contact_lie::format::parse_certificate;
/// use contact_lie::indexing::Layout;
/// let l = Layout::new([1, 0, 0, 0, 0, 0]).unwrap();
/// let c = parse_certificate("pairs = [{ a = \"0\", b = \"2\" }]\n", &l).unwrap();
/// assert_eq!(c.g.pairs[0].b, contact_lie::rational::int(2));
/// ```
pub fn parse_certificate(src: &str, l: &Layout) -> Result<Certificate> {
    let raw: RawCertificate = toml::from_str(src).map_err(|e| toml_error(src, e))?;
    let lines = Lines(src);
    let mut g = AutomorphismG::identity(l);
    if let Some(b0) = &raw.b0 {
        g.b0 = rational::parse(b0.get_ref()).or_else(|e| lines.err(b0.span(), e))?;
    }
    let i3 = l.iota()[2];
    if !raw.pairs.is_empty() {
        if raw.pairs.len() != i3 {
            let span = raw.pairs[0].span();
            return lines.err(span, format!("{} pair blocks given, layout has {i3}", raw.pairs.len()));
        }
        g.pairs = raw
            .pairs
            .iter()
            .map(|p| {
                let q = |s: &str| rational::parse(s).or_else(|e| lines.err(p.span(), e));
                Ok(PairBlock { a: q(&p.get_ref().a)?, b: q(&p.get_ref().b)? })
            })
            .collect::<Result<_>>()?;
    }
    let n45 = l.ell()[3] + l.ell()[4];
    if let Some(h) = &raw.h {
        g.h = matrix(&lines, h, 1 + 2 * i3, n45, "h")?;
    }
    if let Some(f) = &raw.f {
        g.f = matrix(&lines, f, n45, n45, "f")?;
    }
    if let Some(nu) = &raw.nu {
        if nu.get_ref().len() != l.iota6() + 1 {
            return lines.err(nu.span(), format!("nu needs {} entries", l.iota6() + 1));
        }
        g.nu = nu.get_ref().clone();
    }
    let chi_corruption = match &raw.chi_corruption {
        None => None,
        Some(c) => {
            let alpha = lines.rationals(c.span(), &c.get_ref().alpha)?;
            if alpha.len() != l.dim() {
                return lines.err(c.span(), format!("alpha needs {} coordinates", l.dim()));
            }
            let factor = rational::parse(&c.get_ref().factor).or_else(|e| lines.err(c.span(), e))?;
            Some((GammaVector::from_coords(alpha), factor))
        }
    };
    Ok(Certificate { g, chi_corruption })
}

/// One term of an element literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermLiteral {
    pub coeff: String,
    pub alpha: Vec<String>,
    pub i: Vec<u32>,
}

/// Parses a JSON element literal `[{"coeff": "p/q", "alpha": [...], "i": [...]}, ...]`.
///
/// ```
/// use contact_lie::format::{element_to_json, parse_element};
/// let src = r#"[{"coeff":"-1/2","alpha":["0","1","0"],"i":[1,0,0]}]"#;
/// let e = parse_element(src).unwrap();
/// assert_eq!(element_to_json(&e), src);
/// ```
pub fn parse_element(src: &str) -> Result<Element> {
    let terms: Vec<TermLiteral> = serde_json::from_str(src)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let mut out = Element::zero();
    for (n, t) in terms.iter().enumerate() {
        let ctx = |e: Error| Error::Parse(format!("term {n}: {e}"));
        if t.alpha.len() != t.i.len() {
            return Err(Error::Parse(format!(
                "term {n}: alpha has {} coordinates but i has {}",
                t.alpha.len(),
                t.i.len()
            )));
        }
        let c = rational::parse(&t.coeff).map_err(ctx)?;
        let alpha = t.alpha.iter().map(|s| rational::parse(s)).collect::<Result<Vec<_>>>().map_err(ctx)?;
        out.add_term(BasisKey::new(GammaVector::from_coords(alpha), ExpVector::from_vec(t.i.clone())), c);
    }
    Ok(out)
}

/// Canonical literal: terms in key order, no whitespace.
pub fn element_to_json(e: &Element) -> String {
    let terms: Vec<TermLiteral> = e
        .terms()
        .map(|(k, c)| TermLiteral {
            coeff: show(c),
            alpha: k.alpha.coords().iter().map(show).collect(),
            i: k.i.entries().to_vec(),
        })
        .collect();
    serde_json::to_string(&terms).expect("literal terms serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: &str = "ell = [1, 0, 0, 0, 0, 0]\nsigma0 = 0\nj0 = \"nat\"\nseed = 7\n\n[gamma]\ngenerators = [[\"0\", \"1\", \"0\"], [\"0\", \"0\", \"1\"]]\nline_witnesses = [{ index = 1, combination = [1, 0] }]\n";

    #[test]
    fn config_round_values() {
        let f = parse_config(A).unwrap();
        assert_eq!(f.seed, 7);
        assert_eq!(f.config.layout.ell(), [1, 0, 0, 0, 0, 0]);
        assert_eq!(f.config.gamma.witnesses().len(), 1);
    }

    #[test]
    fn diagnostics_carry_lines() {
        let bad = A.replace("\"nat\"", "\"all\"");
        assert_eq!(parse_config(&bad).unwrap_err().to_string().split(':').next(), Some("line 3"));
        let bad = A.replace("[\"0\", \"0\", \"1\"]", "[\"0\", \"1\"]");
        assert!(parse_config(&bad).unwrap_err().to_string().starts_with("line 7:"));
        let bad = A.replace("seed = 7", "seed = ");
        assert!(parse_config(&bad).unwrap_err().to_string().starts_with("line 4"));
        let bad = A.replace("ell = [1, 0, 0, 0, 0, 0]", "ell = [0, 0, 0, 0, 0, 0]");
        assert_eq!(parse_config(&bad).unwrap_err().code(), "E_PARSE");
    }

    #[test]
    fn element_round_trip() {
        let src =
            r#"[{"coeff":"3","alpha":["0","0","1"],"i":[0,0,0]},{"coeff":"1/2","alpha":["0","1","0"],"i":[2,0,0]}]"#;
        let e = parse_element(src).unwrap();
        let again = parse_element(&element_to_json(&e)).unwrap();
        assert_eq!(e, again);
        assert_eq!(element_to_json(&again), element_to_json(&e));
        assert!(parse_element("[{\"coeff\":\"1\"}]").is_err());
    }

    #[test]
    fn certificate_shapes() {
        let l = Layout::new([0, 0, 0, 1, 0, 0]).unwrap();
        let c = parse_certificate("b0 = \"2\"\nh = [[\"1\"]]\nf = [[\"3\"]]\nnu = [0, 1]\n", &l).unwrap();
        assert_eq!(c.g.h.rows(), 1);
        let e = parse_certificate("\nh = [[\"1\", \"2\"]]\n", &l).unwrap_err();
        assert!(e.to_string().starts_with("line 2:"), "{e}");
    }
}
