//! 3-cyclotomic cosets modulo `3^m - 1` and minimal polynomials of powers of
//! the generator.
//!
//! The coset of `i` is its orbit under multiplication by 3 modulo
//! `n = 3^m - 1`; its size is the degree of the minimal polynomial of
//! `alpha^i`, and the sizes always divide m.  These are the building blocks
//! of the generator polynomial `m_1(x) * m_e(x)` studied by the rest of the
//! crate.

use crate::arith;
use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem, TABLE_LIMIT_M};
use crate::poly::TritPoly;

/// One 3-cyclotomic coset modulo `3^m - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    rep: u64,
    members: Vec<u64>,
}

impl Coset {
    /// Canonical representative: the smallest member.
    pub fn rep(&self) -> u64 {
        self.rep
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// The coset size, i.e. the degree of the corresponding minimal
    /// polynomial.
    pub fn size(&self) -> u32 {
        self.members.len() as u32
    }

    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&j).is_ok()
    }
}

fn check_exponent(i: u64, m: u32) -> Result<u64> {
    FieldCtx::check_degree(m)?;
    let n = 3u64.pow(m) - 1;
    if i >= n {
        return Err(Error::ExponentOutOfRange { e: i, max: n - 1 });
    }
    Ok(n)
}

/// The coset of `i` modulo `3^m - 1`.
pub fn coset(i: u64, m: u32) -> Result<Coset> {
    let n = check_exponent(i, m)?;
    let mut members = vec![i];
    let mut cur = arith::mul_mod(i, 3, n);
    while cur != i {
        members.push(cur);
        cur = arith::mul_mod(cur, 3, n);
    }
    members.sort_unstable();
    Ok(Coset {
        rep: members[0],
        members,
    })
}

/// Is `e` conjugate to 1, i.e. a power of 3 modulo `3^m - 1`?
pub fn in_c1(e: u64, m: u32) -> Result<bool> {
    let n = check_exponent(e, m)?;
    let mut cur = 1u64;
    for _ in 0..m {
        if cur == e {
            return Ok(true);
        }
        cur = arith::mul_mod(cur, 3, n);
    }
    Ok(false)
}

/// Every coset, sorted by representative.  Exhaustive enumeration, so this is
/// limited to the table range `m <= 13`.
pub fn all_cosets(m: u32) -> Result<Vec<Coset>> {
    FieldCtx::check_degree(m)?;
    if m > TABLE_LIMIT_M {
        return Err(Error::ExhaustiveCutoff(m));
    }
    let n = 3u64.pow(m) - 1;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i as usize] {
            continue;
        }
        let c = coset(i, m)?;
        for &j in c.members() {
            seen[j as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Minimal polynomial of `alpha^i` over GF(3): the product of `x - alpha^j`
/// for `j` in the coset of `i`.  The product is computed with coefficients in
/// GF(3^m) and asserted to collapse into the base field — a failure there
/// would signal a field-construction bug, not bad input.
pub fn min_poly(i: u64, ctx: &FieldCtx) -> Result<TritPoly> {
    check_exponent(i, ctx.m())?;
    let orbit = coset(i, ctx.m())?;
    let mut coeffs: Vec<FieldElem> = vec![FieldElem::ONE];
    for &j in orbit.members() {
        let neg_root = ctx.neg(ctx.alpha_pow(j));
        let mut next = vec![FieldElem::ZERO; coeffs.len() + 1];
        for (k, &c) in coeffs.iter().enumerate() {
            next[k + 1] = ctx.add(next[k + 1], c);
            next[k] = ctx.add(next[k], ctx.mul(c, neg_root));
        }
        coeffs = next;
    }
    let base: Vec<i64> = coeffs
        .iter()
        .map(|c| {
            assert!(
                c.index() < 3,
                "minimal polynomial coefficient escaped the base field"
            );
            c.index() as i64
        })
        .collect();
    Ok(TritPoly::from_coeffs(base))
}
