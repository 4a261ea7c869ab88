//! Complete factorization over GF(3) and root counting in extensions.
//!
//! The pipeline is the classical one, specialized to characteristic 3:
//!
//! 1. squarefree decomposition — when the derivative vanishes the input is a
//!    perfect cube `u(x)^3` and the routine recurses on `u` with tripled
//!    multiplicities;
//! 2. distinct-degree splitting by iterating the Frobenius map `h -> h^3`,
//!    since `x^(3^d) - x` is the product of all irreducibles of degree
//!    dividing `d`;
//! 3. equal-degree splitting (Cantor–Zassenhaus for odd characteristic),
//!    where `a^((3^d - 1)/2)` is computed as the product of the Frobenius
//!    iterates `a^(3^i)`, `i = 0..d`, so no wide integer exponent is needed.
//!
//! Equal-degree splitting is randomized; the generator is seeded explicitly
//! and the seed is recorded in the result, so every run is reproducible.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use std::collections::BTreeMap;

use super::TritPoly;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, TABLE_LIMIT_M};

/// A complete factorization `unit * prod_i p_i^(m_i)` with monic irreducible
/// `p_i`, sorted by degree and then by trit string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    unit: u8,
    factors: Vec<(TritPoly, u32)>,
    seed: u64,
}

impl Factorization {
    /// The leading unit, 1 or 2.
    pub fn unit(&self) -> u8 {
        self.unit
    }

    /// Monic irreducible factors with multiplicities, sorted by
    /// `(degree, trit string)`.
    pub fn factors(&self) -> &[(TritPoly, u32)] {
        &self.factors
    }

    /// Seed that drove the equal-degree splitting.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Multiply everything back out.
    pub fn expand(&self) -> TritPoly {
        let mut acc = TritPoly::constant(self.unit as i64);
        for (p, m) in &self.factors {
            acc = acc.mul(&p.pow(*m as u64));
        }
        acc
    }

    /// Map from factor degree to the sum of multiplicities of the factors of
    /// that degree.
    pub fn degree_multiset(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for (p, m) in &self.factors {
            *out.entry(p.degree().expect("irreducible factors are nonzero"))
                .or_insert(0u32) += m;
        }
        out
    }

    /// Total degree counted with multiplicity.
    pub fn total_degree(&self) -> u64 {
        self.factors
            .iter()
            .map(|(p, m)| p.degree().unwrap_or(0) as u64 * *m as u64)
            .sum()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.unit != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
            if !self.factors.is_empty() {
                write!(f, " * ")?;
            }
        }
        for (i, (p, m)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            write!(f, "({p})")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// Factor completely with the default seed 0.
pub fn factor(f: &TritPoly) -> Result<Factorization> {
    factor_seeded(f, 0)
}

/// Factor completely; `seed` drives the equal-degree splitting and is
/// recorded in the result.  The factor list itself does not depend on the
/// seed, only the amount of work done to find it.
pub fn factor_seeded(f: &TritPoly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.leading_coeff();
    let mut factors: Vec<(TritPoly, u32)> = Vec::new();
    if f.degree() != Some(0) {
        let monic = f.monic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (part, mult) in squarefree_parts(&monic)? {
            for (prod, d) in distinct_degree_split(&part)? {
                if prod.degree() == Some(d) {
                    factors.push((prod, mult));
                } else {
                    for irr in equal_degree_split(&prod, d, &mut rng)? {
                        factors.push((irr, mult));
                    }
                }
            }
        }
        factors.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
        });
    }
    let result = Factorization {
        unit,
        factors,
        seed,
    };
    assert_eq!(&result.expand(), f, "factorization failed to re-expand");
    Ok(result)
}

/// Squarefree decomposition of a monic polynomial of degree >= 1: pairwise
/// coprime monic squarefree parts with their multiplicities.
fn squarefree_parts(f: &TritPoly) -> Result<Vec<(TritPoly, u32)>> {
    debug_assert!(f.is_monic());
    let fp = f.derivative();
    if fp.is_zero() {
        // In characteristic 3 a vanishing derivative means f = u(x)^3.
        let inner = squarefree_parts(&f.cube_root())?;
        return Ok(inner.into_iter().map(|(p, m)| (p, 3 * m)).collect());
    }
    let mut out = Vec::new();
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let part = w.div_exact(&y)?;
        if part.degree().unwrap_or(0) > 0 {
            out.push((part, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i += 1;
    }
    if !c.is_one() {
        // What remains collects the factors with multiplicity divisible by 3.
        for (p, m) in squarefree_parts(&c.cube_root())? {
            out.push((p, 3 * m));
        }
    }
    Ok(out)
}

/// Split a monic squarefree polynomial into products of irreducibles of equal
/// degree, returned as `(product, degree)` with degrees strictly increasing.
fn distinct_degree_split(f: &TritPoly) -> Result<Vec<(TritPoly, usize)>> {
    debug_assert!(f.is_monic());
    let mut out = Vec::new();
    let mut rem = f.clone();
    let x = TritPoly::x();
    let mut h = x.rem(&rem)?;
    let mut d = 0usize;
    loop {
        let dr = match rem.degree() {
            None | Some(0) => break,
            Some(dr) => dr,
        };
        if 2 * (d + 1) > dr {
            // Whatever is left is a single irreducible.
            out.push((rem, dr));
            break;
        }
        d += 1;
        h = h.frobenius_mod(&rem)?;
        let g = h.sub(&x).gcd(&rem);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), d));
            rem = rem.div_exact(&g)?;
            h = h.rem(&rem)?;
        }
    }
    Ok(out)
}

/// `a^((3^d - 1)/2) mod f` as the product of the Frobenius iterates
/// `a^(3^i)` for `i = 0..d`, valid because `(3^d - 1)/2 = 1 + 3 + ... +
/// 3^(d-1)`.
fn half_power(a: &TritPoly, d: usize, f: &TritPoly) -> Result<TritPoly> {
    let mut acc = a.rem(f)?;
    let mut cur = acc.clone();
    for _ in 1..d {
        cur = cur.frobenius_mod(f)?;
        acc = acc.mul(&cur).rem(f)?;
    }
    Ok(acc)
}

/// Cantor–Zassenhaus splitting of a monic product of `deg f / d` irreducibles
/// all of degree `d`.
fn equal_degree_split(
    f: &TritPoly,
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<TritPoly>> {
    let mut out = Vec::new();
    let mut stack = vec![f.clone()];
    let one = TritPoly::one();
    while let Some(g) = stack.pop() {
        let dg = g.degree().expect("nonzero by construction");
        if dg == d {
            out.push(g);
            continue;
        }
        loop {
            let a = random_poly_below(dg, rng);
            let b = half_power(&a, d, &g)?;
            let split = b.sub(&one).gcd(&g);
            let ds = split.degree().unwrap_or(0);
            if ds > 0 && ds < dg {
                stack.push(g.div_exact(&split)?);
                stack.push(split);
                break;
            }
        }
    }
    Ok(out)
}

/// Uniform random polynomial of degree below `n`, nonzero.
fn random_poly_below(n: usize, rng: &mut ChaCha8Rng) -> TritPoly {
    loop {
        let coeffs: Vec<i64> = (0..n).map(|_| (rng.next_u32() % 3) as i64).collect();
        let p = TritPoly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Rabin's irreducibility test.  Errors on zero and constant inputs; the
/// answer ignores the leading unit.
pub fn is_irreducible(f: &TritPoly) -> Result<bool> {
    let d = match f.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    let f = f.monic();
    let x = TritPoly::x();
    // Iterate Frobenius d times, keeping the values at exponents d/r for the
    // prime divisors r of d to test the proper-subfield conditions.
    let checkpoints: Vec<usize> = crate::arith::factorize(d as u64)
        .iter()
        .map(|&(r, _)| d / r as usize)
        .collect();
    let mut h = x.rem(&f)?;
    let mut at: BTreeMap<usize, TritPoly> = BTreeMap::new();
    for i in 1..=d {
        h = h.frobenius_mod(&f)?;
        if checkpoints.contains(&i) {
            at.insert(i, h.clone());
        }
    }
    // x^(3^d) must reduce to x mod f.
    if h != x.rem(&f)? {
        return Ok(false);
    }
    for &k in &checkpoints {
        if k == d {
            continue;
        }
        let g = at[&k].sub(&x).gcd(&f);
        if !g.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Root counts of `f` in GF(3^m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Number of distinct roots in the extension.
    pub distinct: u64,
    /// Number of roots counted with multiplicity.
    pub with_multiplicity: u64,
    /// The roots themselves, sorted by packed index — present when the field
    /// is small enough for an exhaustive evaluation sweep (`m <= 13`), which
    /// independently confirms `distinct`.
    pub roots: Option<Vec<FieldElem>>,
}

/// Count the roots of `f` in GF(3^m) from the factorization over GF(3): a
/// factor contributes exactly when its degree divides `m`.  For `m <= 13`
/// the count is cross-checked against an exhaustive evaluation sweep and the
/// explicit roots are returned.
pub fn distinct_roots_in_ext(f: &TritPoly, m: u32) -> Result<RootReport> {
    let fac = factor(f)?;
    let mut distinct = 0u64;
    let mut with_multiplicity = 0u64;
    for (p, mult) in fac.factors() {
        let d = p.degree().expect("irreducible factors are nonzero");
        if m as usize != 0 && (m as usize).is_multiple_of(d) {
            distinct += d as u64;
            with_multiplicity += d as u64 * *mult as u64;
        }
    }
    let roots = if m <= TABLE_LIMIT_M {
        let ctx = FieldCtx::new(m)?;
        let roots = roots_by_evaluation(&ctx, f);
        assert_eq!(
            roots.len() as u64,
            distinct,
            "evaluation sweep disagrees with the factorization root count"
        );
        Some(roots)
    } else {
        // Validate m even when no sweep is run.
        let _ = FieldCtx::check_degree(m)?;
        None
    };
    Ok(RootReport {
        distinct,
        with_multiplicity,
        roots,
    })
}

/// All roots of `f` in the given field, found by evaluating at every element;
/// sorted by packed index.
pub fn roots_by_evaluation(ctx: &FieldCtx, f: &TritPoly) -> Vec<FieldElem> {
    ctx.elements()
        .filter(|&t| ctx.eval_poly(f, t) == FieldElem::ZERO)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> TritPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn factors_known_products() {
        // -x^12 - 1 = 2 * (x^2+x-1)^3 * (x^2-x-1)^3.
        let f = p("-x^12-1");
        let fac = factor(&f).unwrap();
        assert_eq!(fac.unit(), 2);
        assert_eq!(
            fac.factors(),
            &[(p("x^2+x-1"), 3), (p("x^2-x-1"), 3)]
        );
        assert_eq!(fac.to_string(), "2 * (x^2+x-1)^3 * (x^2-x-1)^3");
        assert_eq!(
            fac.degree_multiset().into_iter().collect::<Vec<_>>(),
            vec![(2, 6)]
        );
        assert_eq!(fac.total_degree(), 12);
    }

    #[test]
    fn factors_mixed_multiplicities() {
        // -x^12 - x^9 + x^6 - x^3 - 1 = 2 * (x-1)^6 * (x^2+1)^3.
        let fac = factor(&p("-x^12-x^9+x^6-x^3-1")).unwrap();
        assert_eq!(fac.unit(), 2);
        assert_eq!(fac.factors(), &[(p("x-1"), 6), (p("x^2+1"), 3)]);
    }

    #[test]
    fn factors_with_cube_recursion() {
        let f = p("x+1").pow(9);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors(), &[(p("x+1"), 9)]);
        let g = p("x^2+1").pow(3).mul(&p("x").pow(4));
        let fac = factor(&g).unwrap();
        assert_eq!(fac.factors(), &[(p("x"), 4), (p("x^2+1"), 3)]);
    }

    #[test]
    fn round_trips_a_built_product() {
        let f = p("x^3-x^2+1")
            .pow(2)
            .mul(&p("x^2+x-1"))
            .mul(&p("x-1").pow(5))
            .mul_scalar(2);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.expand(), f);
        assert_eq!(fac.unit(), 2);
        assert_eq!(
            fac.factors(),
            &[
                (p("x-1"), 5),
                (p("x^2+x-1"), 1),
                (p("x^3-x^2+1"), 2),
            ]
        );
    }

    #[test]
    fn seed_changes_work_not_answer() {
        let f = p("x^6+x^5+x^4+x^3+x^2+x+1").mul(&p("x^6-x^5-x^3-x+1"));
        let a = factor_seeded(&f, 0).unwrap();
        let b = factor_seeded(&f, 12345).unwrap();
        assert_eq!(a.factors(), b.factors());
        assert_eq!(a.seed(), 0);
        assert_eq!(b.seed(), 12345);
    }

    #[test]
    fn factor_rejects_zero_and_handles_constants() {
        assert!(matches!(
            factor(&TritPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        let fac = factor(&p("2")).unwrap();
        assert_eq!(fac.unit(), 2);
        assert!(fac.factors().is_empty());
        assert_eq!(fac.expand(), p("2"));
    }

    #[test]
    fn irreducibility_matches_known_cases() {
        for s in ["x", "x+1", "x^2+1", "x^3-x^2+1", "x^5-x^4+1", "x^13-x^12+1"] {
            assert!(is_irreducible(&p(s)).unwrap(), "{s} should be irreducible");
        }
        for s in ["x^2", "x^2-1", "x^2+x+1", "x^4+x^2+1", "x^6+x^3+1"] {
            assert!(!is_irreducible(&p(s)).unwrap(), "{s} should be reducible");
        }
        // A unit does not affect the answer.
        assert!(is_irreducible(&p("2x^2+2")).unwrap());
        assert!(matches!(
            is_irreducible(&TritPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            is_irreducible(&p("2")),
            Err(Error::ConstantPolynomial)
        ));
    }

    #[test]
    fn irreducibility_agrees_with_factor_on_degree_six() {
        // Exhaustive cross-check on a slice of monic degree-6 polynomials.
        for tail in 0..243u32 {
            let mut coeffs = vec![0i64; 7];
            coeffs[6] = 1;
            coeffs[0] = 1 + (tail % 2) as i64; // keep x out of the picture
            let mut t = tail;
            for c in coeffs.iter_mut().take(6).skip(1) {
                *c = (t % 3) as i64;
                t /= 3;
            }
            let f = TritPoly::from_coeffs(coeffs);
            let fac = factor(&f).unwrap();
            let irr = fac.factors().len() == 1 && fac.factors()[0].1 == 1;
            assert_eq!(is_irreducible(&f).unwrap(), irr, "mismatch at {f}");
        }
    }

    #[test]
    fn root_counts_in_extensions() {
        // x^2+1 has no roots in GF(3) or GF(27), two in GF(9).
        let f = p("x^2+1");
        assert_eq!(distinct_roots_in_ext(&f, 1).unwrap().distinct, 0);
        assert_eq!(distinct_roots_in_ext(&f, 3).unwrap().distinct, 0);
        let r = distinct_roots_in_ext(&f, 2).unwrap();
        assert_eq!(r.distinct, 2);
        assert_eq!(r.with_multiplicity, 2);
        assert_eq!(r.roots.as_ref().map(|v| v.len()), Some(2));

        // (x-1)^4 * (x^2+1): multiplicity shows up only in with_multiplicity.
        let g = p("x-1").pow(4).mul(&f);
        let r = distinct_roots_in_ext(&g, 2).unwrap();
        assert_eq!(r.distinct, 3);
        assert_eq!(r.with_multiplicity, 6);

        assert!(distinct_roots_in_ext(&f, 0).is_err());
        assert!(distinct_roots_in_ext(&f, 41).is_err());
    }
}
