//! Minimal bivariate polynomials over GF(3), used only to verify the
//! two-variable identities behind family C.
//!
//! A [`BiPoly`] is a polynomial in a second variable `beta` whose
//! coefficients are [`TritPoly`]s in the first variable `theta`.  Only the
//! ring operations the identity checks need are provided.

use crate::poly::TritPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) struct BiPoly {
    /// `coeffs[i]` is the theta-polynomial coefficient of `beta^i`.
    coeffs: Vec<TritPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly {
            coeffs: vec![TritPoly::one()],
        }
    }

    /// The variable theta.
    pub fn theta() -> Self {
        BiPoly {
            coeffs: vec![TritPoly::x()],
        }
    }

    /// The variable beta.
    pub fn beta() -> Self {
        BiPoly {
            coeffs: vec![TritPoly::zero(), TritPoly::one()],
        }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = TritPoly::zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                a.add(b)
            })
            .collect();
        BiPoly { coeffs }.normalize()
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs =
            vec![TritPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        BiPoly { coeffs }.normalize()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = BiPoly::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Rendering for mismatch reports.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})*beta"),
                _ => format!("({c})*beta^{i}"),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
