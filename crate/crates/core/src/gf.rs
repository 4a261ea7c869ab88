//! The fields GF(3^m) for `1 <= m <= 40`.
//!
//! Elements are residue classes of GF(3)[x] modulo a monic irreducible of
//! degree m, stored as the base-3 packing of their coefficient vector
//! (constant term in the lowest trit).  That keeps an element in a single
//! `u64` for every supported m, and makes the ordering of packed indices the
//! lexicographic ordering of coefficient vectors read from the top.
//!
//! Polynomial-basis arithmetic is always available.  For `m <= 13`
//! (`q <= 1594323`) the context additionally builds discrete-log, antilog,
//! and Zech-logarithm tables at construction, turning multiplication, powers,
//! and the additions used by the exponent-domain solvers into table lookups.
//!
//! The default modulus for each degree is deterministic: the first monic
//! irreducible in the enumeration that compares coefficient vectors
//! `(c_0, c_1, ..., c_{m-1})` lexicographically, constant term most
//! significant.  The generator `alpha` is the element of smallest packed
//! index with multiplicative order `q - 1`, certified against the full
//! factorization of `q - 1`.

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{self, TritPoly};

/// Largest supported extension degree; `3^40` still fits in a `u64`.
pub const MAX_M: u32 = 40;

/// Largest degree for which discrete-log tables are built (`3^13 = 1594323`
/// table entries).
pub const TABLE_LIMIT_M: u32 = 13;

/// Sentinel in log-domain tables for "undefined".
pub(crate) const NOLOG: u32 = u32::MAX;

/// An element of GF(3^m), as the base-3 packing of its coefficient vector.
///
/// Elements carry no back-reference to their field; all arithmetic goes
/// through the [`FieldCtx`] that produced them.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);
    /// The constant -1 of the prime field.
    pub const TWO: FieldElem = FieldElem(2);

    /// The packed base-3 index in `0..q`.
    pub fn index(self) -> u64 {
        self.0
    }

    /// Wrap an index already known to be in range, skipping the range check
    /// that [`FieldCtx::elem`] performs.  For internal hot loops only.
    pub(crate) const fn raw(index: u64) -> FieldElem {
        FieldElem(index)
    }
}

impl std::fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldElem({})", self.0)
    }
}

impl std::fmt::Display for FieldElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    /// log[index] = discrete log base alpha; `NOLOG` at index 0.
    log: Vec<u32>,
    /// antilog[i] = packed index of alpha^i, length q - 1.
    antilog: Vec<u32>,
    /// zech[i] = log(alpha^i + 1), `NOLOG` when alpha^i + 1 = 0.
    zech: Vec<u32>,
}

/// A concrete GF(3^m): modulus, certified generator, and (for small m) the
/// discrete-log tables.
pub struct FieldCtx {
    m: u32,
    q: u64,
    modulus: TritPoly,
    /// Modulus coefficients, low degree first, length m + 1.
    modulus_trits: Vec<u8>,
    alpha: FieldElem,
    qm1_factors: Vec<(u64, u32)>,
    tables: Option<Tables>,
}

impl FieldCtx {
    /// Validate an extension degree.
    pub(crate) fn check_degree(m: u32) -> Result<u32> {
        if (1..=MAX_M).contains(&m) {
            Ok(m)
        } else {
            Err(Error::DegreeOutOfRange(m))
        }
    }

    /// Build GF(3^m) with the deterministic default modulus.
    pub fn new(m: u32) -> Result<FieldCtx> {
        Self::check_degree(m)?;
        Self::with_modulus(m, default_modulus(m))
    }

    /// Build GF(3^m) with a caller-chosen monic irreducible modulus of
    /// degree m.
    pub fn with_modulus(m: u32, modulus: TritPoly) -> Result<FieldCtx> {
        Self::check_degree(m)?;
        if modulus.degree() != Some(m as usize) || !modulus.is_monic() {
            return Err(Error::BadModulus {
                expected: m,
                found: modulus.to_string(),
            });
        }
        if !poly::is_irreducible(&modulus)? {
            return Err(Error::ReducibleModulus(modulus.to_string()));
        }
        let q = 3u64.pow(m);
        let mut modulus_trits = modulus.coeffs().to_vec();
        modulus_trits.resize(m as usize + 1, 0);
        let qm1_factors = arith::factorize(q - 1);
        let mut ctx = FieldCtx {
            m,
            q,
            modulus,
            modulus_trits,
            alpha: FieldElem::ZERO,
            qm1_factors,
            tables: None,
        };
        ctx.alpha = ctx.find_alpha();
        if m <= TABLE_LIMIT_M {
            ctx.build_tables();
        }
        Ok(ctx)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field size `3^m`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// `(q - 1) / 2`, the discrete log of -1.
    pub fn half(&self) -> u64 {
        (self.q - 1) / 2
    }

    pub fn modulus(&self) -> &TritPoly {
        &self.modulus
    }

    /// The certified primitive element.
    pub fn alpha(&self) -> FieldElem {
        self.alpha
    }

    /// Prime factorization of the group order `q - 1`.
    pub fn order_factors(&self) -> &[(u64, u32)] {
        &self.qm1_factors
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// The element with the given packed index; panics if `index >= q`.
    pub fn elem(&self, index: u64) -> FieldElem {
        assert!(index < self.q, "element index {index} out of range");
        FieldElem(index)
    }

    /// Pack a coefficient vector (low degree first, at most m trits).
    pub fn elem_from_trits(&self, trits: &[u8]) -> FieldElem {
        assert!(trits.len() <= self.m as usize, "too many trits");
        let mut idx = 0u64;
        for &t in trits.iter().rev() {
            assert!(t < 3, "trit out of range");
            idx = idx * 3 + t as u64;
        }
        FieldElem(idx)
    }

    /// Coefficient vector of an element, low degree first, length m.
    pub fn trits(&self, a: FieldElem) -> Vec<u8> {
        let mut out = vec![0u8; self.m as usize];
        let mut v = a.0;
        for slot in out.iter_mut() {
            *slot = (v % 3) as u8;
            v /= 3;
        }
        out
    }

    /// All q elements in packed-index order.  Intended for small fields; the
    /// iterator is exact but `q` reaches `3^40` at the top of the range.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        while x != 0 || y != 0 {
            out += (x % 3 + y % 3) % 3 * place;
            place *= 3;
            x /= 3;
            y /= 3;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let mut x = a.0;
        let mut out = 0u64;
        let mut place = 1u64;
        while x != 0 {
            out += (3 - x % 3) % 3 * place;
            place *= 3;
            x /= 3;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a == FieldElem::ZERO || b == FieldElem::ZERO {
            return FieldElem::ZERO;
        }
        if let Some(t) = &self.tables {
            let n = self.q - 1;
            let i = t.log[a.0 as usize] as u64;
            let j = t.log[b.0 as usize] as u64;
            return FieldElem(t.antilog[((i + j) % n) as usize] as u64);
        }
        self.mul_poly(a, b)
    }

    /// Polynomial-basis multiplication (always available).
    fn mul_poly(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let m = self.m as usize;
        let mut av = [0u8; MAX_M as usize];
        let mut bv = [0u8; MAX_M as usize];
        let (mut x, mut y) = (a.0, b.0);
        for i in 0..m {
            av[i] = (x % 3) as u8;
            bv[i] = (y % 3) as u8;
            x /= 3;
            y /= 3;
        }
        let mut prod = [0u8; 2 * MAX_M as usize - 1];
        for i in 0..m {
            if av[i] == 0 {
                continue;
            }
            for j in 0..m {
                if bv[j] != 0 {
                    prod[i + j] = (prod[i + j] + av[i] * bv[j]) % 3;
                }
            }
        }
        // Eliminate x^d for d >= m using x^m = -(lower part of modulus).
        for d in (m..=2 * m - 2).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..m {
                let t = self.modulus_trits[j];
                if t != 0 {
                    // -c*t = 2*c*t mod 3.
                    prod[d - m + j] = (prod[d - m + j] + 2 * c * t) % 3;
                }
            }
        }
        let mut idx = 0u64;
        for i in (0..m).rev() {
            idx = idx * 3 + prod[i] as u64;
        }
        FieldElem(idx)
    }

    /// `a^k` for an unsigned exponent; total (`0^0 = 1`).
    pub fn pow_u(&self, a: FieldElem, k: u64) -> FieldElem {
        if a == FieldElem::ZERO {
            return if k == 0 { FieldElem::ONE } else { FieldElem::ZERO };
        }
        let n = self.q - 1;
        let k = k % n;
        if let Some(t) = &self.tables {
            let i = t.log[a.0 as usize] as u64;
            return FieldElem(t.antilog[arith::mul_mod(i, k, n) as usize] as u64);
        }
        let mut result = FieldElem::ONE;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul_poly(result, base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul_poly(base, base);
            }
        }
        result
    }

    /// `a^k` with a signed exponent; errors only on `0^k` for `k < 0`.
    pub fn pow(&self, a: FieldElem, k: i64) -> Result<FieldElem> {
        if k >= 0 {
            return Ok(self.pow_u(a, k as u64));
        }
        if a == FieldElem::ZERO {
            return Err(Error::NegativePowerOfZero);
        }
        Ok(self.pow_u(self.inv(a)?, k.unsigned_abs()))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a == FieldElem::ZERO {
            return Err(Error::ZeroInverse);
        }
        if let Some(t) = &self.tables {
            let n = self.q - 1;
            let i = t.log[a.0 as usize] as u64;
            return Ok(FieldElem(t.antilog[((n - i) % n) as usize] as u64));
        }
        Ok(self.pow_u(a, self.q - 2))
    }

    /// `a^3`, the Frobenius automorphism.
    pub fn frobenius(&self, a: FieldElem) -> FieldElem {
        self.pow_u(a, 3)
    }

    /// Discrete log base alpha; `None` for the zero element.
    ///
    /// Requires tables (`m <= 13`); panics otherwise.
    pub fn log(&self, a: FieldElem) -> Option<u64> {
        let t = self.require_tables();
        match t.log[a.0 as usize] {
            NOLOG => None,
            i => Some(i as u64),
        }
    }

    /// `alpha^k` (k arbitrary; reduced mod q - 1).
    pub fn alpha_pow(&self, k: u64) -> FieldElem {
        if let Some(t) = &self.tables {
            return FieldElem(t.antilog[(k % (self.q - 1)) as usize] as u64);
        }
        self.pow_u(self.alpha, k)
    }

    /// Zech logarithm: `alpha^zech(i) = alpha^i + 1`, or `None` for the single
    /// argument `i = (q-1)/2` where `alpha^i + 1 = 0`.
    ///
    /// Requires tables (`m <= 13`); panics otherwise.
    pub fn zech(&self, i: u64) -> Option<u64> {
        let t = self.require_tables();
        match t.zech[(i % (self.q - 1)) as usize] {
            NOLOG => None,
            z => Some(z as u64),
        }
    }

    /// `log(alpha^i + alpha^j)`, or `None` when the sum is zero.
    ///
    /// Requires tables (`m <= 13`); panics otherwise.
    pub fn add_logs(&self, i: u64, j: u64) -> Option<u64> {
        let n = self.q - 1;
        let (i, j) = (i % n, j % n);
        // alpha^i + alpha^j = alpha^i (1 + alpha^(j-i)).
        let d = (j + n - i) % n;
        self.zech(d).map(|z| (i + z) % n)
    }

    fn require_tables(&self) -> &Tables {
        self.tables
            .as_ref()
            .expect("discrete-log tables require m <= 13")
    }

    /// Raw (log, antilog, zech) tables for exponent-domain sweeps.
    pub(crate) fn raw_tables(&self) -> Option<(&[u32], &[u32], &[u32])> {
        self.tables
            .as_ref()
            .map(|t| (&t.log[..], &t.antilog[..], &t.zech[..]))
    }

    /// Quadratic character: `true` iff `a` is a nonzero square.
    pub fn is_square(&self, a: FieldElem) -> Result<bool> {
        if a == FieldElem::ZERO {
            return Err(Error::ZeroNotInUnitGroup);
        }
        if let Some(t) = &self.tables {
            return Ok(t.log[a.0 as usize] % 2 == 0);
        }
        Ok(self.pow_u(a, self.half()) == FieldElem::ONE)
    }

    /// The unique n-th root of a nonzero element, defined when
    /// `gcd(n, q - 1) = 1` so that `t -> t^n` is a bijection of the unit
    /// group.
    pub fn nth_root_coprime(&self, a: FieldElem, n: u64) -> Result<FieldElem> {
        if a == FieldElem::ZERO {
            return Err(Error::ZeroNotInUnitGroup);
        }
        let order = self.q - 1;
        let g = arith::gcd(n % order, order);
        match arith::mod_inverse(n % order, order) {
            Some(ninv) => Ok(self.pow_u(a, ninv)),
            None => Err(Error::RootExponentNotCoprime(g)),
        }
    }

    /// Order of `a` in the unit group.
    pub fn multiplicative_order(&self, a: FieldElem) -> Result<u64> {
        if a == FieldElem::ZERO {
            return Err(Error::ZeroNotInUnitGroup);
        }
        let mut o = self.q - 1;
        for &(p, e) in &self.qm1_factors {
            for _ in 0..e {
                if o.is_multiple_of(p) && self.pow_u(a, o / p) == FieldElem::ONE {
                    o /= p;
                } else {
                    break;
                }
            }
        }
        Ok(o)
    }

    /// Evaluate a GF(3)[x] polynomial at a field element (Horner).
    pub fn eval_poly(&self, f: &TritPoly, x: FieldElem) -> FieldElem {
        let mut acc = FieldElem::ZERO;
        for &c in f.coeffs().iter().rev() {
            acc = self.add(self.mul(acc, x), FieldElem(c as u64));
        }
        acc
    }

    /// Smallest packed index with multiplicative order q - 1.
    fn find_alpha(&self) -> FieldElem {
        let n = self.q - 1;
        'cand: for idx in 2..self.q {
            let cand = FieldElem(idx);
            for &(p, _) in &self.qm1_factors {
                if self.pow_u(cand, n / p) == FieldElem::ONE {
                    continue 'cand;
                }
            }
            return cand;
        }
        unreachable!("every finite field has a primitive element")
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut log = vec![NOLOG; self.q as usize];
        let mut antilog = vec![0u32; n];
        let mut cur = FieldElem::ONE;
        for (i, slot) in antilog.iter_mut().enumerate() {
            debug_assert!(log[cur.0 as usize] == NOLOG, "alpha order too small");
            log[cur.0 as usize] = i as u32;
            *slot = cur.0 as u32;
            cur = self.mul_poly(cur, self.alpha);
        }
        // Completing the cycle certifies ord(alpha) = q - 1 a second time.
        assert_eq!(cur, FieldElem::ONE, "generator failed to close its cycle");
        let mut zech = vec![NOLOG; n];
        for (i, slot) in zech.iter_mut().enumerate() {
            let t = antilog[i] as u64;
            // Adding the constant 1 touches only the lowest trit.
            let t1 = t - t % 3 + (t % 3 + 1) % 3;
            *slot = if t1 == 0 { NOLOG } else { log[t1 as usize] };
        }
        self.tables = Some(Tables { log, antilog, zech });
    }
}

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus.to_string())
            .field("alpha", &self.alpha.index())
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

/// The deterministic default modulus: first monic irreducible of degree m in
/// the enumeration ordered by `(c_0, c_1, ..., c_{m-1})`, constant term most
/// significant.  Degree 1 uses `x` itself, giving GF(3) directly.
fn default_modulus(m: u32) -> TritPoly {
    if m == 1 {
        return TritPoly::x();
    }
    let mm = m as usize;
    // Candidates with c_0 = 0 are divisible by x; the enumeration starts past
    // them at k = 3^(m-1).
    for k in 3u64.pow(m - 1)..3u64.pow(m) {
        let mut coeffs = vec![0i64; mm + 1];
        coeffs[mm] = 1;
        let mut t = k;
        for i in (0..mm).rev() {
            coeffs[i] = (t % 3) as i64;
            t /= 3;
        }
        let f = TritPoly::from_coeffs(coeffs);
        if poly::is_irreducible(&f).expect("candidate has degree >= 2") {
            return f;
        }
    }
    unreachable!("irreducibles of every degree exist over GF(3)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn default_moduli_are_the_frozen_ones() {
        let expected = [
            (1, "01"),
            (2, "101"),
            (3, "1021"),
            (4, "10111"),
            (5, "100021"),
            (6, "1000111"),
            (7, "10000121"),
            (8, "100001101"),
            (9, "1000002101"),
            (10, "10000000201"),
            (11, "100000000121"),
            (12, "1000000010011"),
            (13, "10000000000021"),
        ];
        for (m, trits) in expected {
            let ctx = FieldCtx::new(m).unwrap();
            assert_eq!(
                ctx.modulus().trit_string(),
                trits,
                "default modulus mismatch at m={m}"
            );
        }
    }

    #[test]
    fn generator_is_first_primitive_index() {
        let expected = [(1, 2), (2, 4), (3, 3), (4, 10), (5, 3), (6, 4), (7, 3), (8, 4)];
        for (m, idx) in expected {
            let ctx = FieldCtx::new(m).unwrap();
            assert_eq!(ctx.alpha().index(), idx, "alpha mismatch at m={m}");
            assert_eq!(
                ctx.multiplicative_order(ctx.alpha()).unwrap(),
                ctx.q() - 1
            );
        }
    }

    #[test]
    fn class_of_x_is_primitive_only_sometimes() {
        // With the default moduli, x generates the unit group for m = 3, 5, 7
        // but not for m = 2, 4, 6, 8.
        for (m, primitive) in [(2, false), (3, true), (4, false), (5, true), (6, false), (7, true), (8, false)] {
            let ctx = FieldCtx::new(m).unwrap();
            let x = ctx.elem(3);
            assert_eq!(
                ctx.multiplicative_order(x).unwrap() == ctx.q() - 1,
                primitive,
                "m={m}"
            );
        }
    }

    #[test]
    fn gf9_arithmetic_by_hand() {
        // Modulus x^2 + 1: the class of x squares to -1.
        let ctx = FieldCtx::new(2).unwrap();
        let x = ctx.elem(3);
        assert_eq!(ctx.mul(x, x), FieldElem::TWO);
        // alpha = x + 1 (index 4); alpha^2 = 2x (index 6).
        assert_eq!(ctx.alpha().index(), 4);
        assert_eq!(ctx.alpha_pow(2), ctx.elem(6));
        assert_eq!(ctx.pow_u(ctx.alpha(), 8), FieldElem::ONE);
        assert_eq!(ctx.pow_u(ctx.alpha(), 4), FieldElem::TWO);
    }

    #[test]
    fn table_mul_matches_polynomial_mul() {
        for m in [2, 3, 4] {
            let ctx = FieldCtx::new(m).unwrap();
            assert!(ctx.has_tables());
            for a in ctx.elements() {
                for b in ctx.elements() {
                    assert_eq!(ctx.mul(a, b), ctx.mul_poly(a, b));
                }
            }
        }
    }

    #[test]
    fn additive_structure() {
        let ctx = FieldCtx::new(3).unwrap();
        for a in ctx.elements() {
            assert_eq!(ctx.add(a, ctx.neg(a)), FieldElem::ZERO);
            assert_eq!(ctx.sub(a, a), FieldElem::ZERO);
            assert_eq!(ctx.add(a, FieldElem::ZERO), a);
        }
        // Characteristic 3: a + a + a = 0.
        for a in ctx.elements() {
            assert_eq!(ctx.add(ctx.add(a, a), a), FieldElem::ZERO);
        }
    }

    #[test]
    fn inverses_and_powers() {
        let ctx = FieldCtx::new(3).unwrap();
        for a in ctx.elements().skip(1) {
            let ai = ctx.inv(a).unwrap();
            assert_eq!(ctx.mul(a, ai), FieldElem::ONE);
            assert_eq!(ctx.pow(a, -1).unwrap(), ai);
            assert_eq!(ctx.pow_u(a, ctx.q() - 1), FieldElem::ONE);
        }
        assert!(matches!(ctx.inv(FieldElem::ZERO), Err(Error::ZeroInverse)));
        assert_eq!(ctx.pow_u(FieldElem::ZERO, 0), FieldElem::ONE);
        assert_eq!(ctx.pow_u(FieldElem::ZERO, 5), FieldElem::ZERO);
        assert!(matches!(
            ctx.pow(FieldElem::ZERO, -2),
            Err(Error::NegativePowerOfZero)
        ));
        let a = ctx.elem(7);
        assert_eq!(
            ctx.pow(a, -3).unwrap(),
            ctx.inv(ctx.pow_u(a, 3)).unwrap()
        );
    }

    #[test]
    fn zech_logarithm_identity() {
        let ctx = FieldCtx::new(4).unwrap();
        let n = ctx.q() - 1;
        for i in 0..n {
            let lhs = ctx.add(ctx.alpha_pow(i), FieldElem::ONE);
            match ctx.zech(i) {
                Some(z) => assert_eq!(lhs, ctx.alpha_pow(z)),
                None => {
                    assert_eq!(lhs, FieldElem::ZERO);
                    assert_eq!(i, ctx.half());
                }
            }
        }
        // add_logs composes the same identity at a shift.
        for (i, j) in [(0u64, 1u64), (5, 17), (40, 40), (3, 3 + ctx.half())] {
            let sum = ctx.add(ctx.alpha_pow(i), ctx.alpha_pow(j));
            match ctx.add_logs(i, j) {
                Some(l) => assert_eq!(sum, ctx.alpha_pow(l)),
                None => assert_eq!(sum, FieldElem::ZERO),
            }
        }
    }

    #[test]
    fn squares_split_the_unit_group_in_half() {
        let ctx = FieldCtx::new(3).unwrap();
        let squares = ctx
            .elements()
            .skip(1)
            .filter(|&a| ctx.is_square(a).unwrap())
            .count() as u64;
        assert_eq!(squares, ctx.half());
        for a in ctx.elements().skip(1) {
            let bylog = ctx.log(a).unwrap().is_multiple_of(2);
            assert_eq!(ctx.is_square(a).unwrap(), bylog);
        }
        assert!(ctx.is_square(FieldElem::ZERO).is_err());
    }

    #[test]
    fn eleventh_roots_in_gf2187() {
        // gcd(11, 2186) = 1, inverse 795.
        let ctx = FieldCtx::new(7).unwrap();
        for k in [0u64, 1, 2, 57, 1000] {
            let t = ctx.alpha_pow(k);
            let r = ctx.nth_root_coprime(t, 11).unwrap();
            assert_eq!(ctx.pow_u(r, 11), t);
        }
        // In GF(3^5), 11 divides q - 1 = 242, so the map is not a bijection.
        let ctx5 = FieldCtx::new(5).unwrap();
        assert!(matches!(
            ctx5.nth_root_coprime(FieldElem::ONE, 11),
            Err(Error::RootExponentNotCoprime(11))
        ));
        assert!(matches!(
            ctx.nth_root_coprime(FieldElem::ZERO, 11),
            Err(Error::ZeroNotInUnitGroup)
        ));
    }

    #[test]
    fn order_factorizations() {
        assert_eq!(
            FieldCtx::new(5).unwrap().order_factors(),
            &[(2, 1), (11, 2)]
        );
        assert_eq!(
            FieldCtx::new(13).unwrap().order_factors(),
            &[(2, 1), (797161, 1)]
        );
    }

    #[test]
    fn frobenius_is_additive() {
        let ctx = FieldCtx::new(5).unwrap();
        for (i, j) in [(0u64, 7u64), (12, 99), (200, 200), (1, 121)] {
            let a = ctx.elem(i);
            let b = ctx.elem(j);
            assert_eq!(
                ctx.frobenius(ctx.add(a, b)),
                ctx.add(ctx.frobenius(a), ctx.frobenius(b))
            );
        }
    }

    #[test]
    fn trits_round_trip_and_eval() {
        let ctx = FieldCtx::new(4).unwrap();
        for idx in [0u64, 1, 2, 3, 40, 80] {
            let a = ctx.elem(idx);
            assert_eq!(ctx.elem_from_trits(&ctx.trits(a)), a);
        }
        // Evaluating the modulus at the class of x gives zero.
        let x = ctx.elem(3);
        assert_eq!(ctx.eval_poly(ctx.modulus(), x), FieldElem::ZERO);
        let f = parse_poly("x^2+x+1").unwrap();
        let v = ctx.eval_poly(&f, x);
        let expect = ctx.add(ctx.add(ctx.mul(x, x), x), FieldElem::ONE);
        assert_eq!(v, expect);
    }

    #[test]
    fn modulus_validation() {
        assert!(matches!(FieldCtx::new(0), Err(Error::DegreeOutOfRange(0))));
        assert!(matches!(FieldCtx::new(41), Err(Error::DegreeOutOfRange(41))));
        let wrong_degree = parse_poly("x^3+1").unwrap();
        assert!(matches!(
            FieldCtx::with_modulus(2, wrong_degree),
            Err(Error::BadModulus { .. })
        ));
        let not_monic = parse_poly("2x^2+1").unwrap();
        assert!(matches!(
            FieldCtx::with_modulus(2, not_monic),
            Err(Error::BadModulus { .. })
        ));
        let reducible = parse_poly("x^2-1").unwrap();
        assert!(matches!(
            FieldCtx::with_modulus(2, reducible),
            Err(Error::ReducibleModulus(_))
        ));
        // A custom irreducible modulus is accepted and self-consistent.
        let ctx = FieldCtx::with_modulus(2, parse_poly("x^2+x+2").unwrap()).unwrap();
        let x = ctx.elem(3);
        // x^2 = -x - 2 = 2x + 1.
        assert_eq!(ctx.mul(x, x), ctx.elem_from_trits(&[1, 2]));
    }

    #[test]
    fn large_field_without_tables() {
        let ctx = FieldCtx::new(17).unwrap();
        assert!(!ctx.has_tables());
        let a = ctx.alpha();
        let b = ctx.pow_u(a, 123456789);
        assert_eq!(ctx.mul(b, ctx.inv(b).unwrap()), FieldElem::ONE);
        assert_eq!(
            ctx.multiplicative_order(a).unwrap(),
            ctx.q() - 1
        );
    }
}
