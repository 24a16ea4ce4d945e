//! Reconciliation of the two routes to the balanced-string generating
//! function.
//!
//! The transfer-matrix route yields `f_k = S_{k+1} - S_k`; the
//! lattice-path route yields `g_k = R_k R_{k-1}`. The polynomials
//! `A_k`, `B_k` factor the machinery of both: `U_k = A_k B_k`,
//! `W_k = B_k B_{k-1}`, `R_k = B_{k+1}/A_{k+1}`, and the numerators
//! `P_k = (k U_k - 2x W_k)/(1-2x) = B_k C_k` with
//! `C_k = (k A_k - 2x B_{k-1})/(1-2x)`. Chaining these turns the
//! difference into the product:
//! `f_k = C_{k+1}/A_{k+1} - C_k/A_k = W_{k+1}/(A_{k+1} A_k) = g_k`.
//!
//! The telescoping step rests on the cross-term identity
//! `C_k A_{k-1} - C_{k-1} A_k = W_k` (for k >= 1). The index variant
//! with `A_{k+1}` in the first term does NOT hold — it already fails at
//! `k = 2` — and the verification suite demonstrates that failure
//! alongside the identities that do hold.

use num_bigint::BigInt;

use crate::bigpoly::{Poly, RatFunc};
use crate::chebyshev::{t_poly, u_poly};
use crate::lattice::{g_balanced, r_gf};
use crate::report::Report;
use crate::transfer::{f_balanced, w_det};

/// `A_{2m} = U_m - x U_{m-1}`, `A_{2m+1} = T_{m+1}`.
pub fn a_poly(k: i64) -> Poly {
    assert!(k >= 0, "A_k requires k >= 0");
    let (m, odd) = (k.div_euclid(2), k % 2 == 1);
    if odd {
        t_poly(m + 1)
    } else {
        &u_poly(m) - &(&Poly::x() * &u_poly(m - 1))
    }
}

/// `B_{2m} = U_m + x U_{m-1}`, `B_{2m+1} = U_m`, with `B_{-1} = 0`
/// (inherited from `U_{-1} = 0`).
pub fn b_poly(k: i64) -> Poly {
    assert!(k >= -1, "B_k requires k >= -1");
    if k == -1 {
        return Poly::zero();
    }
    let (m, odd) = (k.div_euclid(2), k % 2 == 1);
    if odd {
        u_poly(m)
    } else {
        &u_poly(m) + &(&Poly::x() * &u_poly(m - 1))
    }
}

/// `C_k = (k A_k - 2x B_{k-1}) / (1 - 2x)`. The division is exact; a
/// failure would mean one of the closed forms above was transcribed
/// wrong, so it is asserted loudly.
pub fn c_poly(k: i64) -> Poly {
    assert!(k >= 0, "C_k requires k >= 0");
    let num = &a_poly(k).scalar_mul(&BigInt::from(k)) - &(&Poly::from_ints(&[0, 2]) * &b_poly(k - 1));
    num.div_exact(&Poly::from_ints(&[1, -2]))
        .expect("k*A_k - 2x*B_{k-1} is divisible by 1 - 2x")
}

/// `P_k = (k U_k - 2x W_k) / (1 - 2x)`, the numerator of `S_k` over
/// `U_k`. Exact division asserted, as for `C_k`.
pub fn p_poly(k: i64) -> Poly {
    assert!(k >= 0, "P_k requires k >= 0");
    let num = &u_poly(k).scalar_mul(&BigInt::from(k)) - &(&Poly::from_ints(&[0, 2]) * &w_det(k));
    num.div_exact(&Poly::from_ints(&[1, -2]))
        .expect("k*U_k - 2x*W_k is divisible by 1 - 2x")
}

/// The four polynomials for one index, bundled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconcileSet {
    pub k: i64,
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub p: Poly,
}

pub fn reconcile_set(k: i64) -> ReconcileSet {
    ReconcileSet {
        k,
        a: a_poly(k),
        b: b_poly(k),
        c: c_poly(k),
        p: p_poly(k),
    }
}

/// Verifies the whole identity chain exactly for `0 <= k <= k_max`:
/// `P_k = B_k C_k`, `U_k = A_k B_k`, `W_k = B_k B_{k-1}`,
/// `R_k = B_{k+1}/A_{k+1}`, the cross-term identity
/// `C_k A_{k-1} - C_{k-1} A_k = W_k` (k >= 1; at k = 0 it would need
/// `C_{-1}`, which is not a polynomial), the end-to-end equality
/// `f_k = W_{k+1}/(A_{k+1} A_k) = g_k`, and — as a positive check —
/// that the misindexed variant `C_k A_{k+1} - C_{k-1} A_k = W_k`
/// fails at k = 2.
pub fn verify_reconciliation(k_max: i64) -> Report {
    assert!(k_max >= 1, "k_max must be >= 1");
    let mut report = Report::new("reconcile");
    for k in 0..=k_max {
        let set = reconcile_set(k);
        report.record_eq(format!("P = B*C k={k}"), &set.p, &(&set.b * &set.c));
        report.record_eq(format!("U = A*B k={k}"), &u_poly(k), &(&set.a * &set.b));
        report.record_eq(
            format!("W = B*B' k={k}"),
            &w_det(k),
            &(&set.b * &b_poly(k - 1)),
        );
        report.record_eq(
            format!("R = B/A shifted k={k}"),
            &r_gf(k).unwrap(),
            &RatFunc::new(b_poly(k + 1), a_poly(k + 1)),
        );
        if k >= 1 {
            report.record_eq(
                format!("cross-term k={k}"),
                &w_det(k),
                &(&(&set.c * &a_poly(k - 1)) - &(&c_poly(k - 1) * &set.a)),
            );
        }
        let f = f_balanced(k);
        let quotient = RatFunc::new(w_det(k + 1), &a_poly(k + 1) * &set.a);
        report.record_eq(format!("f = W/(A*A) k={k}"), &f, &quotient);
        report.record_eq(format!("f = g k={k}"), &f, &g_balanced(k).unwrap());
    }
    if k_max >= 2 {
        // the misindexed cross-term must NOT hold
        let k = 2;
        let variant = &(&c_poly(k) * &a_poly(k + 1)) - &(&c_poly(k - 1) * &a_poly(k));
        report.record(
            format!("misindexed cross-term fails k={k}"),
            variant != w_det(k),
        );
    }
    report
}

/// Confirms that `k A_k - 2x B_{k-1}` vanishes at `x = 1/2` for
/// `0 <= k <= k_max` — equivalently that the division defining `C_k` is
/// exact — by exact rational evaluation of `k A_k(1/2) = B_{k-1}(1/2)`.
pub fn c_divisibility_check(k_max: i64) -> Report {
    assert!(k_max >= 1, "k_max must be >= 1");
    let mut report = Report::new("reconcile");
    let half = num_rational::BigRational::new(BigInt::from(1), BigInt::from(2));
    for k in 0..=k_max {
        let lhs = a_poly(k).eval_rational(&half) * num_rational::BigRational::from_integer(k.into());
        let rhs = b_poly(k - 1).eval_rational(&half);
        report.record_eq(format!("divisibility at 1/2 k={k}"), &lhs, &rhs);
    }
    report
}
