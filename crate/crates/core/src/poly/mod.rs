//! Dense univariate polynomials over GF(3).
//!
//! Coefficients are stored lowest degree first as trits in `{0, 1, 2}`, with
//! the invariant that the vector never ends in a zero; the zero polynomial is
//! the empty vector.  Degrees in this crate stay small (a few thousand at
//! most), so schoolbook multiplication and long division are used throughout.
//! Characteristic 3 buys one big shortcut: cubing is coefficient spreading,
//! `f(x)^3 = f(x^3)`, which the factorization and irreducibility routines lean
//! on heavily.

mod factor;
mod parse;

pub use factor::{
    distinct_roots_in_ext, factor, factor_seeded, is_irreducible, roots_by_evaluation,
    Factorization, RootReport,
};
pub use parse::{parse_poly, parse_poly_var};

use crate::error::{Error, Result};

/// A polynomial over GF(3), in canonical dense form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TritPoly {
    /// Trits, lowest degree first; empty for the zero polynomial, and the
    /// last entry is never zero otherwise.
    coeffs: Vec<u8>,
}

#[inline]
fn tadd(a: u8, b: u8) -> u8 {
    (a + b) % 3
}

#[inline]
fn tsub(a: u8, b: u8) -> u8 {
    (a + 3 - b) % 3
}

#[inline]
fn tmul(a: u8, b: u8) -> u8 {
    a * b % 3
}

/// Inverse of a nonzero trit: 1 and 2 are each their own inverse.
#[inline]
fn tinv(a: u8) -> u8 {
    debug_assert!(a == 1 || a == 2);
    a
}

impl TritPoly {
    pub fn zero() -> Self {
        TritPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TritPoly { coeffs: vec![1] }
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        TritPoly { coeffs: vec![0, 1] }
    }

    /// Constant polynomial; the value is reduced mod 3.
    pub fn constant(c: i64) -> Self {
        Self::from_coeffs([c])
    }

    /// `c * x^deg`, with `c` reduced mod 3.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let c = c.rem_euclid(3) as u8;
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0u8; deg + 1];
        coeffs[deg] = c;
        TritPoly { coeffs }
    }

    /// Build from coefficients lowest degree first, reducing each mod 3.
    pub fn from_coeffs<I>(low_first: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let coeffs = low_first
            .into_iter()
            .map(|c| c.rem_euclid(3) as u8)
            .collect();
        let mut p = TritPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Coefficients lowest degree first (canonical: no trailing zero).
    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Leading coefficient; 0 for the zero polynomial.
    pub fn leading_coeff(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            lc => self.mul_scalar(tinv(lc)),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(tadd(self.coeff(i), rhs.coeff(i)));
        }
        let mut p = TritPoly { coeffs };
        p.normalize();
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(tsub(self.coeff(i), rhs.coeff(i)));
        }
        let mut p = TritPoly { coeffs };
        p.normalize();
        p
    }

    pub fn neg(&self) -> Self {
        TritPoly {
            coeffs: self.coeffs.iter().map(|&c| (3 - c) % 3).collect(),
        }
    }

    pub fn mul_scalar(&self, c: u8) -> Self {
        match c % 3 {
            0 => Self::zero(),
            1 => self.clone(),
            _ => TritPoly {
                coeffs: self.coeffs.iter().map(|&a| tmul(a, 2)).collect(),
            },
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0u8; k];
        coeffs.extend_from_slice(&self.coeffs);
        TritPoly { coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut acc = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] += (a * b) as u32;
            }
        }
        let mut p = TritPoly {
            coeffs: acc.into_iter().map(|c| (c % 3) as u8).collect(),
        };
        p.normalize();
        p
    }

    /// `self^k` by binary exponentiation.
    pub fn pow(&self, k: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lcinv = tinv(divisor.leading_coeff());
        let mut rem = self.coeffs.clone();
        let mut quo = vec![0u8; nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let qc = tmul(c, lcinv);
            quo[i - dd] = qc;
            // rem -= qc * x^{i-dd} * divisor
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = tsub(rem[i - dd + j], tmul(qc, dc));
            }
        }
        let mut q = TritPoly { coeffs: quo };
        let mut r = TritPoly { coeffs: rem };
        q.normalize();
        r.normalize();
        Ok((q, r))
    }

    /// Remainder of `self / divisor`.
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient; panics in debug builds if the division leaves a
    /// remainder (callers divide by known factors).
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divmod(divisor)?;
        debug_assert!(r.is_zero(), "div_exact: nonzero remainder");
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| tmul(c, ((i + 1) % 3) as u8))
            .collect();
        let mut p = TritPoly { coeffs };
        p.normalize();
        p
    }

    /// The Frobenius cube: `f^3 = f(x^3)` in characteristic 3, computed by
    /// spreading coefficients to triple indices.
    pub fn frobenius(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0u8; 3 * (self.coeffs.len() - 1) + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[3 * i] = c;
        }
        TritPoly { coeffs }
    }

    /// Inverse of [`frobenius`](Self::frobenius) for cubes: if
    /// `self = u(x)^3` (equivalently `f(x) = g(x^3)`), returns `u`.
    /// Panics in debug builds if a non-multiple-of-3 index carries a nonzero
    /// coefficient.
    pub(crate) fn cube_root(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .step_by(3)
            .copied()
            .collect::<Vec<_>>();
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| i % 3 == 0 || c == 0));
        let mut p = TritPoly { coeffs };
        p.normalize();
        p
    }

    /// `self^k mod modulus` with an exponent wide enough for `3^d` counts.
    pub fn powmod(&self, mut k: u128, modulus: &Self) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let mut result = Self::one().rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).rem(modulus)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).rem(modulus)?;
            }
        }
        Ok(result)
    }

    /// `self^3 mod modulus`, via coefficient spreading.
    pub fn frobenius_mod(&self, modulus: &Self) -> Result<Self> {
        self.frobenius().rem(modulus)
    }

    /// Evaluate at an element of the prime field.
    pub fn eval_gf3(&self, x: u8) -> u8 {
        let x = x % 3;
        let mut acc = 0u8;
        for &c in self.coeffs.iter().rev() {
            acc = tadd(tmul(acc, x), c);
        }
        acc
    }

    /// Little-endian trit string (machine form without the `t:` tag);
    /// `"0"` for the zero polynomial.
    pub fn trit_string(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        self.coeffs.iter().map(|c| (b'0' + c) as char).collect()
    }
}

impl std::fmt::Display for TritPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&parse::render_poly(self))
    }
}

impl std::fmt::Debug for TritPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TritPoly({})", parse::render_poly(self))
    }
}

/// `sum_i p_i * num^i * den^(degree - i)`: the numerator of `p(num/den)`
/// homogenized to total power `degree`.  Requires `degree >= deg p`; using a
/// common `degree` for two polynomials keeps their denominators equal so that
/// ratios of homogenizations compose exactly.
pub fn homogenize(p: &TritPoly, num: &TritPoly, den: &TritPoly, degree: usize) -> TritPoly {
    assert!(
        degree >= p.degree().unwrap_or(0),
        "homogenization degree below deg p"
    );
    // Horner in num with a running power of den:
    // (((p_d num + p_{d-1} den) num + p_{d-2} den^2) num + ...) stops being
    // cheaper than the direct sum at these sizes, so do the direct sum.
    let mut acc = TritPoly::zero();
    let mut num_pow = TritPoly::one();
    let mut den_pows = Vec::with_capacity(degree + 1);
    den_pows.push(TritPoly::one());
    for i in 1..=degree {
        den_pows.push(den_pows[i - 1].mul(den));
    }
    for i in 0..=degree {
        let c = p.coeff(i);
        if c != 0 {
            let term = num_pow.mul(&den_pows[degree - i]).mul_scalar(c);
            acc = acc.add(&term);
        }
        if i < degree {
            num_pow = num_pow.mul(num);
        }
    }
    acc
}

/// A reduced fraction of polynomials over GF(3).
///
/// Canonical form: the denominator is monic and coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMap {
    num: TritPoly,
    den: TritPoly,
}

impl RationalMap {
    /// Build and canonicalize; errors on a zero denominator.
    pub fn new(num: TritPoly, den: TritPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(RationalMap {
                num,
                den: TritPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g)?;
        let mut den = den.div_exact(&g)?;
        let lc = den.leading_coeff();
        if lc != 1 {
            num = num.mul_scalar(tinv(lc));
            den = den.mul_scalar(tinv(lc));
        }
        Ok(RationalMap { num, den })
    }

    /// A polynomial viewed as a fraction with denominator 1.
    pub fn from_poly(p: TritPoly) -> Self {
        RationalMap {
            num: p,
            den: TritPoly::one(),
        }
    }

    pub fn num(&self) -> &TritPoly {
        &self.num
    }

    pub fn den(&self) -> &TritPoly {
        &self.den
    }
}

impl std::fmt::Display for RationalMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Substitute a rational map into a polynomial: `p(num/den)` as the reduced
/// fraction `homogenize(p, num, den, deg p) / den^(deg p)`.
pub fn substitute_rational(p: &TritPoly, map: &RationalMap) -> Result<RationalMap> {
    let d = p.degree().unwrap_or(0);
    let num = homogenize(p, map.num(), map.den(), d);
    let den = map.den().pow(d as u64);
    RationalMap::new(num, den)
}
