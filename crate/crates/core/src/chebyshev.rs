//! Combinatorial Chebyshev polynomials.
//!
//! Both kinds satisfy `P_k = P_{k-1} - x^2 P_{k-2}`; they differ only in
//! the initial conditions (`T_0 = 2`, `T_1 = 1` versus `U_0 = U_1 = 1`).
//! They are reversed, integer-coefficient variants of the classical
//! Chebyshev polynomials: `T_k(x) = 2 x^k T_k^cl(1/2x)` and
//! `U_k(x) = x^k U_k^cl(1/2x)`; all computation here stays in the
//! combinatorial form. The module builds them two independent ways (the
//! recurrence and explicit alternating binomial sums) and verifies the
//! identity stock the rest of the crate leans on.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bigpoly::Poly;
use crate::report::Report;

/// First or second kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChebKind {
    T,
    U,
}

struct ChebCache {
    t: Vec<Poly>,
    /// `u[i]` holds `U_{i-1}`, so the `U_{-1} = 0` convention sits at
    /// index 0.
    u: Vec<Poly>,
}

static CACHE: LazyLock<Mutex<ChebCache>> = LazyLock::new(|| {
    Mutex::new(ChebCache {
        t: vec![Poly::constant(2), Poly::one()],
        u: vec![Poly::zero(), Poly::one(), Poly::one()],
    })
});

/// `T_k` (k >= 0) or `U_k` (k >= -1, with `U_{-1} = 0`), by the shared
/// three-term recurrence. Construction is memoized.
pub fn cheb(kind: ChebKind, k: i64) -> Poly {
    match kind {
        ChebKind::T => assert!(k >= 0, "T_k requires k >= 0, got {k}"),
        ChebKind::U => assert!(k >= -1, "U_k requires k >= -1, got {k}"),
    }
    let x2 = Poly::from_ints(&[0, 0, 1]);
    // Entries are appended fully constructed, so a poisoned lock still
    // guards a consistent prefix.
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    match kind {
        ChebKind::T => {
            let k = k as usize;
            while cache.t.len() <= k {
                let n = cache.t.len();
                let next = &cache.t[n - 1] - &(&x2 * &cache.t[n - 2]);
                cache.t.push(next);
            }
            cache.t[k].clone()
        }
        ChebKind::U => {
            let idx = (k + 1) as usize;
            while cache.u.len() <= idx {
                let n = cache.u.len();
                let next = &cache.u[n - 1] - &(&x2 * &cache.u[n - 2]);
                cache.u.push(next);
            }
            cache.u[idx].clone()
        }
    }
}

/// Shorthand for `cheb(ChebKind::U, k)`.
pub fn u_poly(k: i64) -> Poly {
    cheb(ChebKind::U, k)
}

/// Shorthand for `cheb(ChebKind::T, k)`.
pub fn t_poly(k: i64) -> Poly {
    cheb(ChebKind::T, k)
}

fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Same polynomials assembled directly from the alternating binomial
/// sums: `U_k = sum_j (-1)^j C(k-j, j) x^{2j}` and
/// `T_k = sum_j (-1)^j (C(k-j, j) + C(k-j-1, j-1)) x^{2j}`.
///
/// The pair sum at `k = 0, j = 0` uses `C(-1, -1) = 1`, which is what
/// makes the constant term of `T_0` come out as 2.
pub fn cheb_explicit(kind: ChebKind, k: i64) -> Poly {
    assert!(k >= 0, "explicit form requires k >= 0, got {k}");
    let k = k as u64;
    let mut coeffs = vec![BigInt::zero(); k as usize + 1];
    for j in 0..=(k / 2) {
        let mut c = binomial(k - j, j);
        if kind == ChebKind::T {
            c += if j == 0 {
                // C(k-1, -1): zero except C(-1, -1) = 1
                if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binomial(k - j - 1, j - 1)
            };
        }
        if j % 2 == 1 {
            c = -c;
        }
        coeffs[2 * j as usize] = c;
    }
    Poly::from_coeffs(coeffs)
}

/// The first eight rows of both kinds, frozen as ascending coefficient
/// lists. This is the reference the verification suite and the golden
/// tests compare against.
pub const REFERENCE_TABLE: [(i64, &[i64], &[i64]); 8] = [
    (0, &[2], &[1]),
    (1, &[1], &[1]),
    (2, &[1, 0, -2], &[1, 0, -1]),
    (3, &[1, 0, -3], &[1, 0, -2]),
    (4, &[1, 0, -4, 0, 2], &[1, 0, -3, 0, 1]),
    (5, &[1, 0, -5, 0, 5], &[1, 0, -4, 0, 3]),
    (6, &[1, 0, -6, 0, 9, 0, -2], &[1, 0, -5, 0, 6, 0, -1]),
    (7, &[1, 0, -7, 0, 14, 0, -7], &[1, 0, -6, 0, 10, 0, -4]),
];

/// Verifies the identity stock for all `0 <= k <= k_max`:
/// the duplication identities `U_{2k} = U_k^2 - x^2 U_{k-1}^2` and
/// `U_{2k+1} = U_k^2 - 2x^2 U_k U_{k-1}`, the two bridges
/// `T_{k+1} = U_k - 2x^2 U_{k-1}` and `T_{k+1} = U_{k+1} - x^2 U_{k-1}`,
/// and coprimality of consecutive `U`s.
pub fn cheb_identity_check(k_max: i64) -> Report {
    assert!(k_max >= 1, "k_max must be >= 1");
    let mut report = Report::new("cheb");
    let x2 = Poly::from_ints(&[0, 0, 1]);
    for k in 0..=k_max {
        let uk = u_poly(k);
        let ukm1 = u_poly(k - 1);
        report.record_eq(
            format!("U duplication even k={k}"),
            &u_poly(2 * k),
            &(&uk.pow(2) - &(&x2 * &ukm1.pow(2))),
        );
        report.record_eq(
            format!("U duplication odd k={k}"),
            &u_poly(2 * k + 1),
            &(&uk.pow(2) - &(&x2.scalar_mul(&BigInt::from(2)) * &(&uk * &ukm1))),
        );
        report.record_eq(
            format!("T bridge two-step k={k}"),
            &t_poly(k + 1),
            &(&uk - &(&x2.scalar_mul(&BigInt::from(2)) * &ukm1)),
        );
        report.record_eq(
            format!("T bridge skip k={k}"),
            &t_poly(k + 1),
            &(&u_poly(k + 1) - &(&x2 * &ukm1)),
        );
        report.record_eq(
            format!("consecutive U coprime k={k}"),
            &Poly::one(),
            &uk.gcd(&ukm1),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn reference_table_both_constructions() {
        for &(k, t_coeffs, u_coeffs) in REFERENCE_TABLE.iter() {
            let t_expected = Poly::from_ints(t_coeffs);
            let u_expected = Poly::from_ints(u_coeffs);
            assert_eq!(cheb(ChebKind::T, k), t_expected, "T_{k} recurrence");
            assert_eq!(cheb(ChebKind::U, k), u_expected, "U_{k} recurrence");
            assert_eq!(cheb_explicit(ChebKind::T, k), t_expected, "T_{k} explicit");
            assert_eq!(cheb_explicit(ChebKind::U, k), u_expected, "U_{k} explicit");
        }
    }

    #[test]
    fn u_minus_one_is_zero() {
        assert_eq!(cheb(ChebKind::U, -1), Poly::zero());
    }

    #[test]
    fn explicit_edge_cases() {
        assert_eq!(cheb_explicit(ChebKind::U, 0), Poly::one());
        assert_eq!(cheb_explicit(ChebKind::U, 5), Poly::from_ints(&[1, 0, -4, 0, 3]));
        assert_eq!(
            cheb_explicit(ChebKind::T, 7),
            Poly::from_ints(&[1, 0, -7, 0, 14, 0, -7])
        );
    }

    #[test]
    fn recurrence_matches_explicit_up_to_64() {
        for k in 0..=64 {
            assert_eq!(cheb(ChebKind::T, k), cheb_explicit(ChebKind::T, k), "T_{k}");
            assert_eq!(cheb(ChebKind::U, k), cheb_explicit(ChebKind::U, k), "U_{k}");
        }
    }

    #[test]
    fn u_coefficients_alternate_with_binomial_magnitudes() {
        for k in 0..=20i64 {
            let u = u_poly(k);
            assert_eq!(u.degree(), Some(2 * (k as usize / 2)));
            for j in 0..=(k as u64 / 2) {
                let c = u.coeff(2 * j as usize);
                assert_eq!(c.abs(), binomial(k as u64 - j, j), "|[x^{}] U_{k}|", 2 * j);
                assert_eq!(c.is_negative(), j % 2 == 1);
            }
        }
    }

    #[test]
    fn even_polynomials_with_unit_constant_term() {
        for k in 1..=24i64 {
            for kind in [ChebKind::T, ChebKind::U] {
                let p = cheb(kind, k);
                assert!(p.constant_term().is_one());
                for (i, c) in p.coeffs().iter().enumerate() {
                    assert!(i % 2 == 0 || c.is_zero(), "odd coefficient in k={k}");
                }
            }
        }
    }

    #[test]
    fn identity_stock_holds() {
        let report = cheb_identity_check(16);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn identity_examples_by_hand() {
        // U_4 = U_2^2 - x^2 U_1^2
        let lhs = u_poly(4);
        let rhs = &u_poly(2).pow(2) - &Poly::from_ints(&[0, 0, 1]);
        assert_eq!(lhs, rhs);
        // T_2 = U_1 - 2x^2 U_0
        assert_eq!(t_poly(2), Poly::from_ints(&[1, 0, -2]));
        // U_1 = U_0^2 - 2x^2 U_0 U_{-1}
        assert_eq!(u_poly(1), u_poly(0).pow(2));
    }

    #[test]
    #[should_panic(expected = "k >= 0")]
    fn t_rejects_negative_index() {
        let _ = cheb(ChebKind::T, -1);
    }

    #[test]
    #[should_panic(expected = "k >= -1")]
    fn u_rejects_below_minus_one() {
        let _ = cheb(ChebKind::U, -2);
    }
}
