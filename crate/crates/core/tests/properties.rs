//! Cross-module property suites: exhaustive checks where the field is
//! small enough to enumerate, randomized (proptest) checks where it is
//! not.  Sample sizes follow the per-module invariants: >= 10^4 random
//! triples per field for the ring axioms, >= 100 random polynomials for
//! the factor round trip, exhaustive sweeps for Frobenius (m <= 5), Zech
//! addition (m <= 9), coset structure (m <= 10), and the two optimality
//! routes (m <= 7).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use proptest::prelude::*;

use terncode::checker::{classify_with_ctx, necessary_eq_residual, ResidualEq, Verdict};
use terncode::codes::{certify_optimal_with_ctx, sphere_packing_max_d};
use terncode::cosets::{all_cosets, coset, in_c1};
use terncode::gf::{FieldCtx, FieldElem};
use terncode::poly::{distinct_roots_in_ext, factor, roots_by_evaluation, TritPoly};
use terncode::{arith, Error};

/// Shared contexts for m in 1..=10, built once for the whole test binary.
fn ctx(m: u32) -> &'static FieldCtx {
    static CTXS: OnceLock<BTreeMap<u32, FieldCtx>> = OnceLock::new();
    let map = CTXS.get_or_init(|| {
        (1..=10)
            .map(|m| (m, FieldCtx::new(m).expect("small context builds")))
            .collect()
    });
    &map[&m]
}

fn poly_from_trits(trits: &[u8]) -> TritPoly {
    TritPoly::from_coeffs(trits.iter().map(|&t| i64::from(t)))
}

/// The fields a [`Verdict`] is judged by, with solution sets reduced to
/// indices so verdicts of conjugate exponents can be compared.
fn essentials(v: &Verdict) -> (bool, bool, Vec<u64>, Vec<u64>, bool) {
    (
        v.applicable,
        v.q1,
        v.q2_solutions.iter().map(|s| s.index).collect(),
        v.q3_solutions.iter().map(|s| s.index).collect(),
        v.optimal,
    )
}

#[test]
fn frobenius_is_additive_exhaustively_to_m5() {
    for m in 1..=5 {
        let ctx = ctx(m);
        let elems: Vec<FieldElem> = ctx.elements().collect();
        for &a in &elems {
            for &b in &elems {
                assert_eq!(
                    ctx.frobenius(ctx.add(a, b)),
                    ctx.add(ctx.frobenius(a), ctx.frobenius(b)),
                    "m={m}"
                );
            }
        }
    }
}

#[test]
fn zech_addition_matches_polynomial_addition_to_m9() {
    for m in 1..=9 {
        let ctx = ctx(m);
        let n = ctx.q() - 1;
        for i in 0..n {
            let direct = ctx.add(ctx.alpha_pow(i), FieldElem::ONE);
            match ctx.zech(i) {
                Some(z) => assert_eq!(ctx.alpha_pow(z), direct, "m={m}, i={i}"),
                None => {
                    assert_eq!(i, ctx.half(), "m={m}: zech undefined only at (q-1)/2");
                    assert_eq!(direct, FieldElem::ZERO, "m={m}");
                }
            }
        }
    }
}

#[test]
fn eleventh_power_is_a_bijection_where_coprime() {
    for m in 1..=7u32 {
        let ctx = ctx(m);
        let n = ctx.q() - 1;
        if arith::gcd(11, n) == 1 {
            let images: BTreeSet<u64> = ctx
                .elements()
                .filter(|e| *e != FieldElem::ZERO)
                .map(|e| ctx.pow_u(e, 11).index())
                .collect();
            assert_eq!(images.len() as u64, n, "m={m}: t -> t^11 must be onto");
        } else {
            // gcd(11, 3^5 - 1) = 11: the root map must refuse.
            assert_eq!(m, 5);
            assert_eq!(
                ctx.nth_root_coprime(FieldElem::TWO, 11),
                Err(Error::RootExponentNotCoprime(11))
            );
        }
    }
}

#[test]
fn cosets_partition_the_residues_to_m10() {
    for m in 1..=10 {
        let cosets = all_cosets(m).unwrap();
        let n = 3u64.pow(m) - 1;
        let mut seen = vec![false; n as usize];
        for c in &cosets {
            assert_eq!(m % c.size(), 0, "m={m}: coset size must divide m");
            for &j in c.members() {
                assert!(!seen[j as usize], "m={m}: residue {j} covered twice");
                seen[j as usize] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "m={m}: residues left uncovered");
    }
}

#[test]
fn gcd_two_exponents_have_full_cosets() {
    for m in [3u32, 5, 7] {
        let n = 3u64.pow(m) - 1;
        for e in (2..n).step_by(2) {
            if arith::gcd(e, n) == 2 {
                assert_eq!(coset(e, m).unwrap().size(), m, "m={m}, e={e}");
            }
        }
    }
}

#[test]
fn classify_is_coset_invariant_to_m5() {
    for m in 2..=5u32 {
        let ctx = ctx(m);
        let n = ctx.q() - 1;
        for e in 0..n {
            let here = classify_with_ctx(ctx, e).unwrap();
            let conj = classify_with_ctx(ctx, e * 3 % n).unwrap();
            assert_eq!(
                essentials(&here),
                essentials(&conj),
                "m={m}: verdicts differ inside the coset of {e}"
            );
        }
    }
}

#[test]
fn optimality_routes_agree_to_m7() {
    for m in 2..=7u32 {
        let ctx = ctx(m);
        let n = ctx.q() - 1;
        for e in (2..n - 1).step_by(2) {
            if in_c1(e, m).unwrap() || coset(e, m).unwrap().size() != m {
                continue;
            }
            let verdict = classify_with_ctx(ctx, e).unwrap();
            let cert = certify_optimal_with_ctx(ctx, e).unwrap();
            assert_eq!(verdict.optimal, cert.optimal, "routes disagree at (m={m}, e={e})");
            assert!(cert.classify_agrees, "(m={m}, e={e})");
        }
    }
}

#[test]
fn sphere_packing_is_monotone_in_k() {
    let n = 242;
    let mut last = u64::MAX;
    for k in 0..=n {
        let (d, _) = sphere_packing_max_d(n, k).unwrap();
        assert!(d <= last, "d must not grow with k (k={k})");
        last = d;
    }
}

#[test]
fn witnesses_reevaluate_to_codewords() {
    let ctx = ctx(5);
    // An odd exponent (weight-2 witness) and a failing even one (weight 3).
    for e in [121u64, 122] {
        let report = certify_optimal_with_ctx(ctx, e).unwrap();
        let witness = report.witness.expect("these exponents are not optimal");
        assert!(witness.weight() <= 3);
        for parity_exp in [1u64, e] {
            let mut sum = FieldElem::ZERO;
            for (&pos, &c) in witness.positions.iter().zip(&witness.coeffs) {
                let term = ctx.pow_u(ctx.alpha_pow(pos), parity_exp);
                let term = if c == 2 { ctx.neg(term) } else { term };
                sum = ctx.add(sum, term);
            }
            assert_eq!(sum, FieldElem::ZERO, "e={e}: parity check {parity_exp} nonzero");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40_000))]

    /// Ring axioms on random triples, >= 10^4 cases per field.
    #[test]
    fn field_axioms_hold((m, a, b, c) in (
        prop::sample::select(vec![2u32, 3, 5, 7]),
        any::<u64>(),
        any::<u64>(),
        any::<u64>(),
    )) {
        let ctx = ctx(m);
        let q = ctx.q();
        let (a, b, c) = (ctx.elem(a % q), ctx.elem(b % q), ctx.elem(c % q));
        prop_assert_eq!(ctx.add(a, b), ctx.add(b, a));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), FieldElem::ZERO);
        if a != FieldElem::ZERO {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), FieldElem::ONE);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    /// Squaring always lands in the quadratic residues (m = 7).
    #[test]
    fn squares_are_squares(index in 1u64..2187) {
        let ctx = ctx(7);
        let a = ctx.elem(index);
        prop_assert!(ctx.is_square(ctx.mul(a, a)).unwrap());
    }

    /// The 11th root inverts the 11th power (gcd(11, 3^7 - 1) = 1).
    #[test]
    fn eleventh_root_round_trips(index in 1u64..2187) {
        let ctx = ctx(7);
        let t = ctx.elem(index);
        let root = ctx.nth_root_coprime(t, 11).unwrap();
        prop_assert_eq!(ctx.pow_u(root, 11), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Factor and re-expand is the identity, up to degree 300.
    #[test]
    fn factor_expand_round_trips(trits in prop::collection::vec(0u8..3, 1..=301)) {
        let p = poly_from_trits(&trits);
        prop_assume!(!p.is_zero());
        let fz = factor(&p).unwrap();
        prop_assert_eq!(fz.expand(), p);
        prop_assert!(fz.factors().iter().all(|(f, _)| f.is_monic()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Root counting by factor degrees agrees with brute-force evaluation
    /// in every field up to m = 9, on polynomials of degree <= 60.
    #[test]
    fn root_counts_match_evaluation(trits in prop::collection::vec(0u8..3, 1..=61)) {
        let p = poly_from_trits(&trits);
        prop_assume!(!p.is_zero());
        for m in 2..=9u32 {
            let report = distinct_roots_in_ext(&p, m).unwrap();
            let brute = roots_by_evaluation(ctx(m), &p);
            prop_assert_eq!(report.distinct, brute.len() as u64, "m={}", m);
            let listed = report.roots.expect("explicit roots for m <= 13");
            prop_assert_eq!(listed, brute, "m={}", m);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Both derived residual equations catch every criterion solution
    /// outside the prime field (m = 5, random even e).
    #[test]
    fn residuals_contain_criterion_solutions(half_e in 1u64..121) {
        let e = 2 * half_e;
        let ctx = ctx(5);
        let verdict = classify_with_ctx(ctx, e).unwrap();
        let outside: BTreeSet<u64> = verdict
            .q2_solutions
            .iter()
            .chain(&verdict.q3_solutions)
            .map(|s| s.index)
            .filter(|&i| i > 2)
            .collect();
        for which in [ResidualEq::Sixth, ResidualEq::Square] {
            let residual: BTreeSet<u64> = necessary_eq_residual(ctx, e, which)
                .unwrap()
                .iter()
                .map(|s| s.index)
                .collect();
            prop_assert!(
                outside.is_subset(&residual),
                "e={} missing solutions in {:?}", e, which
            );
        }
    }
}
