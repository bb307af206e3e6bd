use contact_lie::classical::{
    classical_bracket, contact_form_multiplier, dk_map, monomials, verify_dk_homomorphism, Poly, VectorField,
};
use contact_lie::rational::{frac, int, Rational};
use contact_lie::sampling::Sampler;

fn random_poly(s: &mut Sampler, n: usize, degree: u32) -> Poly {
    let monos = monomials(n, degree);
    let mut p = Poly::zero(n);
    for _ in 0..3 {
        let e = monos[s.below(monos.len())].clone();
        p.add_term(e, s.coeff());
    }
    p
}

/// Sparse row: `(component, exponent, coefficient)` entries.
type Row = Vec<(usize, Vec<u32>, Rational)>;

fn mono(e: &[u32]) -> Poly {
    Poly::monomial(e.to_vec(), Rational::from_integer(1.into()))
}

#[test]
fn bracket_examples() {
    let n = 3;
    let (t1, t2, t3) = (Poly::var(n, 1), Poly::var(n, 2), Poly::var(n, 3));
    assert_eq!(classical_bracket(&t1, &t2, 1).unwrap(), Poly::one(n));
    assert_eq!(classical_bracket(&t3, &t1, 1).unwrap(), -&t1);
    assert_eq!(classical_bracket(&Poly::one(n), &t3, 1).unwrap(), Poly::constant(n, int(2)));
    assert_eq!(classical_bracket(&t1, &Poly::one(4), 1).unwrap_err().code(), "E_ARITY");
}

#[test]
fn jacobi_and_skew_symmetry() {
    let mut s = Sampler::new(31);
    for k in [1, 2] {
        let n = 2 * k + 1;
        for _ in 0..25 {
            let (f, g, h) = (random_poly(&mut s, n, 3), random_poly(&mut s, n, 3), random_poly(&mut s, n, 3));
            let br = |a: &Poly, b: &Poly| classical_bracket(a, b, k).unwrap();
            let cyc = &(&br(&f, &br(&g, &h)) + &br(&g, &br(&h, &f))) + &br(&h, &br(&f, &g));
            assert!(cyc.is_zero(), "k = {k}: {f} | {g} | {h}");
            assert!((&br(&f, &g) + &br(&g, &f)).is_zero());
        }
    }
}

#[test]
fn dk_is_a_homomorphism_for_k2() {
    let mut s = Sampler::new(32);
    for _ in 0..30 {
        let (f, g) = (random_poly(&mut s, 5, 3), random_poly(&mut s, 5, 3));
        assert!(verify_dk_homomorphism(&f, &g, 2).unwrap());
    }
}

#[test]
fn dk_is_injective_on_monomials() {
    // the images of all monomials of degree <= 4 have full rank
    let monos = monomials(3, 4);
    let images: Vec<VectorField> = monos.iter().map(|e| dk_map(&mono(e), 1).unwrap()).collect();
    let rows: Vec<Row> = images
        .iter()
        .map(|v| {
            v.comps
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.terms().map(move |(e, q)| (i, e.clone(), q.clone())))
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut pivots: Vec<((usize, Vec<u32>), Row)> = Vec::new();
    for row in &rows {
        let mut r = row.clone();
        for (key, prow) in &pivots {
            let c = r.iter().find(|(i, e, _)| (i, e) == (&key.0, &key.1)).map(|t| t.2.clone());
            if let Some(c) = c {
                let pc = prow.iter().find(|(i, e, _)| (i, e) == (&key.0, &key.1)).unwrap().2.clone();
                let f = c / pc;
                for (i, e, q) in prow {
                    match r.iter_mut().find(|(a, b, _)| (a, b) == (i, e)) {
                        Some(t) => t.2 -= &f * q,
                        None => r.push((*i, e.clone(), -(&f * q))),
                    }
                }
                r.retain(|t| t.2 != Rational::from_integer(0.into()));
            }
        }
        if let Some(first) = r.first() {
            pivots.push(((first.0, first.1.clone()), r.clone()));
            rank += 1;
        }
    }
    assert_eq!(rank, monos.len());
}

#[test]
fn bracket_respects_the_grading() {
    // weight 2·e_n + Σ e_i − 2
    let weight = |e: &[u32]| 2 * i64::from(e[2]) + i64::from(e[0]) + i64::from(e[1]) - 2;
    let monos = monomials(3, 3);
    for a in &monos {
        for b in &monos {
            let w = weight(a) + weight(b);
            let br = classical_bracket(&mono(a), &mono(b), 1).unwrap();
            for (e, _) in br.terms() {
                assert_eq!(weight(e), w, "[{a:?}, {b:?}]");
            }
        }
    }
}

#[test]
fn contact_multipliers() {
    let n = 3;
    let u = contact_form_multiplier(&dk_map(&Poly::one(n), 1).unwrap(), 1).unwrap();
    assert_eq!(u, Some(Poly::zero(n)));
    let u = contact_form_multiplier(&dk_map(&Poly::var(n, 3), 1).unwrap(), 1).unwrap();
    assert!(u.is_some());
    assert_eq!(contact_form_multiplier(&VectorField::partial(n, 1), 1).unwrap(), None);
    for e in monomials(3, 3) {
        assert!(contact_form_multiplier(&dk_map(&mono(&e), 1).unwrap(), 1).unwrap().is_some(), "{e:?}");
    }
    let mut s = Sampler::new(33);
    for _ in 0..10 {
        let f = random_poly(&mut s, 5, 3).scale(&frac(1, 3));
        assert!(contact_form_multiplier(&dk_map(&f, 2).unwrap(), 2).unwrap().is_some());
    }
}
