//! Exponent families with provably optimal `C_(1,e)`, and the symbolic
//! verification of the case analyses behind them.
//!
//! Three constructions are covered, each parametrized by the extension
//! degree m:
//!
//! * **Family A**: `e = (3^(m-1)-1)/2 + 3^h + 1` for prime `m >= 5` and one
//!   of three admissible `h` values;
//! * **Family B**: `e = (3^m-1)/2 - 3` for odd m;
//! * **Family C**: `e = 2 * 11^(-1) mod (3^m-1)` for odd `m >= 7` with
//!   `m` divisible by neither 9 nor 5 (11 is invertible exactly when
//!   `5 ∤ m`).
//!
//! [`family`] computes the exponents and validity; [`cases`] re-derives the
//! polynomial identities that prove optimality for *every* admissible m —
//! each case boils down to a univariate polynomial over GF(3) whose
//! irreducible factors all have degrees that cannot divide an admissible m,
//! so the only field solutions of the criterion equations are the base-field
//! ones.

mod bipoly;
mod cases;

pub use cases::{
    verify_case, verify_quadratic_roots, verify_thmc_identities, CaseReport, Certificate,
    QuadraticBranch, ThmCFieldCheck, ThmCReport, CASE_IDS,
};

use serde::Serialize;

use crate::arith;
use crate::cosets;
use crate::error::{Error, Result};
use crate::gf::FieldCtx;

/// Which exponent construction a spec belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    A,
    B,
    C,
}

/// Parameters selecting one instance of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    A { m: u32, h: u32 },
    B { m: u32 },
    C { m: u32 },
}

/// A computed family instance: the exponent plus its validity status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    /// Family A's shift parameter; `None` for B and C.
    pub h: Option<u32>,
    /// The computed exponent (also computed for invalid parameter
    /// combinations, where it is still a well-defined number).
    pub e: u64,
    /// Whether the construction's hypotheses hold for these parameters.
    pub valid: bool,
    /// Human-readable justification for `valid`.
    pub reason: String,
}

fn check_family_degree(m: u32) -> Result<()> {
    FieldCtx::check_degree(m)?;
    if m < 2 {
        return Err(Error::DegreeOutOfRange(m));
    }
    Ok(())
}

/// Family A: `e = (3^(m-1)-1)/2 + 3^h + 1`.
///
/// Valid for prime `m >= 5` when `h` hits one of the three admissible
/// values: `(m+3)/2` (for `m != 5`), `(m-3)/2`, or `(m+1)/3` (the latter
/// only when `m ≡ 2 mod 3`).  `h` must satisfy `h <= 40` so the power fits
/// in u64; the exponent stays below `3^m - 1` whenever `h < m`.
pub fn family_a(m: u32, h: u32) -> Result<FamilySpec> {
    check_family_degree(m)?;
    let pow_h = 3u64
        .checked_pow(h)
        .ok_or(Error::ExponentOutOfRange { e: h as u64, max: 40 })?;
    let e = (3u64.pow(m - 1) - 1) / 2 + pow_h + 1;
    let (valid, reason) = if !arith::is_prime(m as u64) || m < 5 {
        (false, format!("m={m} is not a prime >= 5"))
    } else if m != 5 && h == (m + 3) / 2 {
        (true, format!("case I: h = (m+3)/2 = {h}"))
    } else if h == (m - 3) / 2 {
        (true, format!("case II: h = (m-3)/2 = {h}"))
    } else if m % 3 == 2 && h == (m + 1) / 3 {
        (true, format!("case III: m ≡ 2 mod 3 and h = (m+1)/3 = {h}"))
    } else {
        (false, format!("h={h} matches none of the admissible cases"))
    };
    if valid {
        assert!(
            !cosets::in_c1(e, m)? && cosets::coset(e, m)?.size() == m,
            "family A exponent must lie outside C_1 in a full-size coset"
        );
    }
    Ok(FamilySpec {
        family: Family::A,
        m,
        h: Some(h),
        e,
        valid,
        reason,
    })
}

/// Family B: `e = (3^m-1)/2 - 3`, valid for odd m.
pub fn family_b(m: u32) -> Result<FamilySpec> {
    check_family_degree(m)?;
    let n = 3u64.pow(m) - 1;
    let e = n / 2 - 3;
    let valid = m % 2 == 1;
    if valid {
        assert_eq!(
            arith::gcd(e, n),
            2,
            "family B exponent must satisfy gcd(e, 3^m - 1) = 2"
        );
    }
    Ok(FamilySpec {
        family: Family::B,
        m,
        h: None,
        e,
        valid,
        reason: if valid {
            format!("m={m} is odd")
        } else {
            format!("m={m} is even")
        },
    })
}

/// Family C: `e = 2 * 11^(-1) mod (3^m-1)`.
///
/// When `5 | m`, 11 divides `3^m - 1` and the inverse does not exist; this
/// is an error rather than mere invalidity.  Otherwise the instance is valid
/// for odd `m >= 7` with `m` not divisible by 9.
pub fn family_c(m: u32) -> Result<FamilySpec> {
    check_family_degree(m)?;
    if m.is_multiple_of(5) {
        return Err(Error::NoInverseOfEleven(m));
    }
    let n = 3u64.pow(m) - 1;
    let inv = arith::mod_inverse(11, n).expect("11 is a unit when 5 does not divide m");
    let e = arith::mul_mod(2, inv, n);
    let (valid, reason) = if m.is_multiple_of(2) {
        (false, format!("m={m} is even"))
    } else if m < 7 {
        (false, format!("m={m} is below 7"))
    } else if m.is_multiple_of(9) {
        (false, format!("m={m} is divisible by 9"))
    } else {
        (true, format!("m={m} is odd, >= 7, and divisible by neither 9 nor 5"))
    };
    if valid {
        assert!(
            e.is_multiple_of(2) && arith::gcd(e, n) == 2,
            "family C exponent must be even with gcd(e, 3^m - 1) = 2"
        );
    }
    Ok(FamilySpec {
        family: Family::C,
        m,
        h: None,
        e,
        valid,
        reason,
    })
}

/// Dispatch to the family constructors.
pub fn family(params: FamilyParams) -> Result<FamilySpec> {
    match params {
        FamilyParams::A { m, h } => family_a(m, h),
        FamilyParams::B { m } => family_b(m),
        FamilyParams::C { m } => family_c(m),
    }
}

/// `(gcd(11, 3^m - 1), (3^m - 1) mod 11)` for any `m >= 1`, without
/// materializing `3^m`.
pub fn gcd11(m: u32) -> (u64, u64) {
    assert!(m >= 1, "gcd11 requires m >= 1");
    let residue = (arith::pow_mod(3, m as u64, 11) + 10) % 11;
    (if residue == 0 { 11 } else { 1 }, residue)
}
