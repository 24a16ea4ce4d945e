//! Height-restricted lattice-path generating functions.
//!
//! Closed forms for the six path families of the Chebyshev table —
//! one-sided bounds `0..k` and two-sided bounds `±k`, each with the
//! path ending at ground level, at the top bound, or anywhere — plus
//! the ratio sequence `R_k` and the vertical-extent generating function
//! `g_k` for k-balanced strings. Every closed form is backed by a
//! symbolic check of the recurrence it solves.
//!
//! Size convention: series index is the number of steps, except for
//! paths required to end at the top bound, where it is `steps - k`
//! (such a path necessarily contains `k` net upsteps).

use thiserror::Error;

use crate::bigpoly::{Poly, RatFunc};
use crate::chebyshev::{t_poly, u_poly};
use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("family {family:?} requires k >= {min}, got {k}")]
    KOutOfRange {
        family: PathFamily,
        min: i64,
        k: i64,
    },
}

/// The generating-function families: the six height-restricted path
/// classes, the ratio sequence `R`, and the vertical-extent family for
/// balanced strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathFamily {
    /// Bounds `0..k`, ends at ground: Dyck paths of height <= k.
    F,
    /// Bounds `0..k`, ends at the top bound.
    G,
    /// Bounds `±k`, ends at ground.
    FBar,
    /// Bounds `±k`, ends at the top bound.
    GBar,
    /// Bounds `0..k`, ends anywhere.
    H,
    /// Bounds `±k`, ends anywhere.
    HBar,
    /// Ratio sequence: `R_{2m} = U_m/T_{m+1}`,
    /// `R_{2m+1} = (U_{m+1} + xU_m)/(U_{m+1} - xU_m)`.
    R,
    /// Vertical extent <= k; equivalently k-balanced strings.
    Balanced,
}

/// Terminal-height condition of a path class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Terminal {
    Ground,
    Top,
    Any,
}

/// Height bounds and terminal condition for the path oracle. The size
/// convention is implied by the terminal: `Top` counts `steps - upper`,
/// everything else counts steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSpec {
    pub lower: i64,
    pub upper: i64,
    pub terminal: Terminal,
}

impl PathSpec {
    pub fn new(lower: i64, upper: i64, terminal: Terminal) -> Result<Self, String> {
        if lower > 0 || upper < 0 {
            return Err(format!(
                "bounds must satisfy lower <= 0 <= upper, got [{lower}, {upper}]"
            ));
        }
        Ok(PathSpec {
            lower,
            upper,
            terminal,
        })
    }
}

/// Splits `k` into `(m, odd)` with `k = 2m` or `k = 2m + 1`. All
/// even/odd dispatch below goes through here.
fn split_parity(k: i64) -> (i64, bool) {
    (k.div_euclid(2), k.rem_euclid(2) == 1)
}

fn require(family: PathFamily, k: i64, min: i64) -> Result<(), LatticeError> {
    if k < min {
        Err(LatticeError::KOutOfRange { family, min, k })
    } else {
        Ok(())
    }
}

/// Dyck paths of height <= k ending at ground level: `F_k = U_k / U_{k+1}`.
pub fn f_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::F, k, 0)?;
    Ok(RatFunc::new(u_poly(k), u_poly(k + 1)))
}

/// Paths within `0..k` ending at the top bound: `G_k = 1 / U_{k+1}`.
pub fn g_top_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::G, k, 0)?;
    Ok(RatFunc::new(Poly::one(), u_poly(k + 1)))
}

/// Balanced paths within `±k`: `F̄_k = U_k / T_{k+1}`.
pub fn f_bar_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::FBar, k, 0)?;
    Ok(RatFunc::new(u_poly(k), t_poly(k + 1)))
}

/// Paths within `±k` ending at the top bound: `Ḡ_k = 1 / T_{k+1}`.
pub fn g_bar_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::GBar, k, 0)?;
    Ok(RatFunc::new(Poly::one(), t_poly(k + 1)))
}

/// Paths within `0..k` ending anywhere:
/// `H_{2m} = (U_m + xU_{m-1}) / T_{m+1}`,
/// `H_{2m+1} = U_m / (U_{m+1} - xU_m)`.
///
/// `H_{-1} = 0` by convention, so the `g_0` edge case below degenerates
/// correctly.
pub fn h_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::H, k, -1)?;
    if k == -1 {
        return Ok(RatFunc::zero());
    }
    let x = Poly::x();
    let (m, odd) = split_parity(k);
    Ok(if odd {
        RatFunc::new(u_poly(m), &u_poly(m + 1) - &(&x * &u_poly(m)))
    } else {
        RatFunc::new(&u_poly(m) + &(&x * &u_poly(m - 1)), t_poly(m + 1))
    })
}

/// Paths within `±k` ending anywhere:
/// `H̄_{2m} = (U_m + xU_{m-1})^2 / T_{2m+1}`,
/// `H̄_{2m+1} = (1+2x) U_m^2 / T_{2m+2}`.
pub fn h_bar_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::HBar, k, 0)?;
    let x = Poly::x();
    let (m, odd) = split_parity(k);
    Ok(if odd {
        let num = &Poly::from_ints(&[1, 2]) * &u_poly(m).pow(2);
        RatFunc::new(num, t_poly(2 * m + 2))
    } else {
        let num = (&u_poly(m) + &(&x * &u_poly(m - 1))).pow(2);
        RatFunc::new(num, t_poly(2 * m + 1))
    })
}

/// The ratio sequence, with `R_{-1} = 1` so that `g_0 = R_0 R_{-1}`.
pub fn r_gf(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::R, k, -1)?;
    if k == -1 {
        return Ok(RatFunc::one());
    }
    let x = Poly::x();
    let (m, odd) = split_parity(k);
    Ok(if odd {
        let xu = &x * &u_poly(m);
        RatFunc::new(&u_poly(m + 1) + &xu, &u_poly(m + 1) - &xu)
    } else {
        RatFunc::new(u_poly(m), t_poly(m + 1))
    })
}

/// Generating function for k-balanced binary strings, equivalently for
/// u/d paths of vertical extent <= k, via the decomposition
/// `g_k = H_k (1 + x H_{k-1})`.
pub fn g_balanced(k: i64) -> Result<RatFunc, LatticeError> {
    require(PathFamily::Balanced, k, 0)?;
    let h_k = h_gf(k)?;
    let h_prev = h_gf(k - 1)?;
    let one_plus = &RatFunc::one() + &(&RatFunc::from_poly(Poly::x()) * &h_prev);
    Ok(&h_k * &one_plus)
}

/// The explicit even/odd product form of `g_k` with its numerator and
/// denominator assembled verbatim, before any reduction:
/// `g_{2m} = (U_m / T_{m+1}) · ((U_m + xU_{m-1}) / (U_m - xU_{m-1}))`,
/// `g_{2m+1} = ((U_{m+1} + xU_m) / (U_{m+1} - xU_m)) · (U_m / T_{m+1})`.
/// Returned unreduced so callers can confirm it is already in lowest
/// terms.
pub fn g_balanced_explicit_parts(k: i64) -> (Poly, Poly) {
    assert!(k >= 0, "explicit form requires k >= 0");
    let x = Poly::x();
    let (m, odd) = split_parity(k);
    if odd {
        let xu = &x * &u_poly(m);
        let num = &(&u_poly(m + 1) + &xu) * &u_poly(m);
        let den = &(&u_poly(m + 1) - &xu) * &t_poly(m + 1);
        (num, den)
    } else {
        let xu = &x * &u_poly(m - 1);
        let num = &u_poly(m) * &(&u_poly(m) + &xu);
        let den = &t_poly(m + 1) * &(&u_poly(m) - &xu);
        (num, den)
    }
}

/// Dispatch by family. `R` accepts `k >= -1`; everything else `k >= 0`.
pub fn family_gf(family: PathFamily, k: i64) -> Result<RatFunc, LatticeError> {
    match family {
        PathFamily::F => f_gf(k),
        PathFamily::G => g_top_gf(k),
        PathFamily::FBar => f_bar_gf(k),
        PathFamily::GBar => g_bar_gf(k),
        PathFamily::H => {
            require(PathFamily::H, k, 0)?;
            h_gf(k)
        }
        PathFamily::HBar => h_bar_gf(k),
        PathFamily::R => r_gf(k),
        PathFamily::Balanced => g_balanced(k),
    }
}

/// The enumeration region a table family counts, for oracle
/// comparisons. `None` for `R` (a ratio, not a path class); extent
/// paths for `Balanced`.
pub fn family_path_spec(family: PathFamily, k: i64) -> Option<PathSpec> {
    assert!(k >= 0);
    let spec = |lower, terminal| PathSpec {
        lower,
        upper: k,
        terminal,
    };
    match family {
        PathFamily::F => Some(spec(0, Terminal::Ground)),
        PathFamily::G => Some(spec(0, Terminal::Top)),
        PathFamily::FBar => Some(spec(-k, Terminal::Ground)),
        PathFamily::GBar => Some(spec(-k, Terminal::Top)),
        PathFamily::H => Some(spec(0, Terminal::Any)),
        PathFamily::HBar => Some(spec(-k, Terminal::Any)),
        PathFamily::R | PathFamily::Balanced => None,
    }
}

/// Verifies, as exact rational-function identities for `1 <= k <= k_max`,
/// the recurrences each closed form solves:
/// `F_k = 1 + x^2 F_{k-1} F_k`, `G_k = prod F_i`,
/// `F̄_k = 1 + 2x^2 F_{k-1} F̄_k`, the telescoped `Ḡ_k`,
/// `H_k = 1 + x H_{k-1} + x^2 F_{k-1} H_k`,
/// `H̄_k = 1 + 2x H_{k-1} + 2x^2 F_{k-1} H̄_k`,
/// and the factorization `H_k (1 + x H_{k-1}) = R_k R_{k-1}`.
pub fn verify_table_recurrences(k_max: i64) -> Report {
    assert!(k_max >= 1, "k_max must be >= 1");
    let mut report = Report::new("tables");
    let x = RatFunc::from_poly(Poly::x());
    let x2 = RatFunc::from_poly(Poly::from_ints(&[0, 0, 1]));
    let two_x = RatFunc::from_poly(Poly::from_ints(&[0, 2]));
    let two_x2 = RatFunc::from_poly(Poly::from_ints(&[0, 0, 2]));
    let one = RatFunc::one();
    let mut f_product = f_gf(0).unwrap();
    for k in 1..=k_max {
        let f_prev = f_gf(k - 1).unwrap();
        let f_k = f_gf(k).unwrap();
        report.record_eq(
            format!("F recurrence k={k}"),
            &f_k,
            &(&one + &(&x2 * &(&f_prev * &f_k))),
        );

        f_product = &f_product * &f_k;
        report.record_eq(
            format!("G product k={k}"),
            &g_top_gf(k).unwrap(),
            &f_product,
        );

        let fbar_k = f_bar_gf(k).unwrap();
        report.record_eq(
            format!("Fbar recurrence k={k}"),
            &fbar_k,
            &(&one + &(&two_x2 * &(&f_prev * &fbar_k))),
        );

        // Ḡ_k telescopes as F̄_k · F_{k-1} · ... · F_1
        let mut gbar_product = fbar_k.clone();
        for i in 1..k {
            gbar_product = &gbar_product * &f_gf(i).unwrap();
        }
        report.record_eq(
            format!("Gbar telescoping k={k}"),
            &g_bar_gf(k).unwrap(),
            &gbar_product,
        );

        let h_prev = h_gf(k - 1).unwrap();
        let h_k = h_gf(k).unwrap();
        report.record_eq(
            format!("H recurrence k={k}"),
            &h_k,
            &(&(&one + &(&x * &h_prev)) + &(&x2 * &(&f_prev * &h_k))),
        );

        let hbar_k = h_bar_gf(k).unwrap();
        report.record_eq(
            format!("Hbar recurrence k={k}"),
            &hbar_k,
            &(&(&one + &(&two_x * &h_prev)) + &(&two_x2 * &(&f_prev * &hbar_k))),
        );

        report.record_eq(
            format!("g factorization k={k}"),
            &g_balanced(k).unwrap(),
            &(&r_gf(k).unwrap() * &r_gf(k - 1).unwrap()),
        );
    }
    report
}

/// Verifies the compact expressions `R_{2m} = F̄_m` and
/// `R_{2m+1} = 1 + 2x H_{2m+1}` for `0 <= m <= m_max`.
pub fn verify_r_remark(m_max: i64) -> Report {
    assert!(m_max >= 0);
    let mut report = Report::new("tables");
    let two_x = RatFunc::from_poly(Poly::from_ints(&[0, 2]));
    for m in 0..=m_max {
        report.record_eq(
            format!("R even = Fbar m={m}"),
            &r_gf(2 * m).unwrap(),
            &f_bar_gf(m).unwrap(),
        );
        report.record_eq(
            format!("R odd = 1 + 2xH m={m}"),
            &r_gf(2 * m + 1).unwrap(),
            &(&RatFunc::one() + &(&two_x * &h_gf(2 * m + 1).unwrap())),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den))
    }

    #[test]
    fn family_examples() {
        assert_eq!(f_gf(2).unwrap(), rf(&[1, 0, -1], &[1, 0, -2]));
        assert_eq!(
            f_gf(2).unwrap().series(7).unwrap().to_i64_vec(),
            vec![1, 0, 1, 0, 2, 0, 4]
        );
        assert_eq!(g_bar_gf(1).unwrap(), rf(&[1], &[1, 0, -2]));
        assert_eq!(h_bar_gf(1).unwrap(), rf(&[1, 2], &[1, 0, -2]));
        assert_eq!(
            h_bar_gf(1).unwrap().series(6).unwrap().to_i64_vec(),
            vec![1, 2, 2, 4, 4, 8]
        );
    }

    #[test]
    fn degenerate_families_at_zero() {
        assert_eq!(f_gf(0).unwrap(), RatFunc::one());
        assert_eq!(g_top_gf(0).unwrap(), RatFunc::one());
        assert_eq!(h_gf(0).unwrap(), RatFunc::one());
        assert_eq!(h_bar_gf(0).unwrap(), RatFunc::one());
        assert_eq!(
            f_gf(0).unwrap().series(3).unwrap().to_i64_vec(),
            vec![1, 0, 0]
        );
    }

    #[test]
    fn r_examples_and_conventions() {
        assert_eq!(r_gf(-1).unwrap(), RatFunc::one());
        assert_eq!(r_gf(0).unwrap(), RatFunc::one());
        assert_eq!(r_gf(1).unwrap(), rf(&[1, 1], &[1, -1]));
        assert_eq!(r_gf(2).unwrap(), rf(&[1], &[1, 0, -2]));
        assert_eq!(h_gf(-1).unwrap(), RatFunc::zero());
    }

    #[test]
    fn g_balanced_examples() {
        assert_eq!(g_balanced(0).unwrap(), RatFunc::one());
        assert_eq!(g_balanced(1).unwrap(), rf(&[1, 1], &[1, -1]));
        let den2 = &p(&[1, -1]) * &p(&[1, 0, -2]);
        assert_eq!(g_balanced(2).unwrap(), RatFunc::new(p(&[1, 1]), den2));
        let den3 = &p(&[1, 0, -2]) * &p(&[1, -1, -1]);
        assert_eq!(g_balanced(3).unwrap(), RatFunc::new(p(&[1, 1, -1]), den3));
        assert_eq!(
            g_balanced(3).unwrap().series(6).unwrap().to_i64_vec(),
            vec![1, 2, 4, 8, 14, 26]
        );
    }

    #[test]
    fn explicit_product_equals_decomposition_and_is_reduced() {
        for k in 0..=12 {
            let g = g_balanced(k).unwrap();
            let (num, den) = g_balanced_explicit_parts(k);
            assert_eq!(g, RatFunc::new(num.clone(), den.clone()), "k={k}");
            // lowest terms: the verbatim parts carry no common factor,
            // so canonicalization leaves them untouched
            assert_eq!(num.gcd(&den), Poly::one(), "k={k}");
            assert_eq!(g.num(), &num, "k={k}");
            assert_eq!(g.den(), &den, "k={k}");
        }
    }

    #[test]
    fn table_recurrences_hold() {
        let report = verify_table_recurrences(12);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn recurrence_examples_by_hand() {
        // F_2 = 1 + x^2 F_1 F_2 with F_1 = 1/(1 - x^2)
        assert_eq!(f_gf(1).unwrap(), rf(&[1], &[1, 0, -1]));
        let lhs = f_gf(2).unwrap();
        let rhs = &RatFunc::one()
            + &(&rf(&[0, 0, 1], &[1]) * &(&f_gf(1).unwrap() * &f_gf(2).unwrap()));
        assert_eq!(lhs, rhs);
        // H_1 = 1 + x H_0 + x^2 F_0 H_1 with H_0 = F_0 = 1
        let lhs = h_gf(1).unwrap();
        let rhs = &(&RatFunc::one() + &rf(&[0, 1], &[1]))
            + &(&rf(&[0, 0, 1], &[1]) * &h_gf(1).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_remark_identities() {
        let report = verify_r_remark(6);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn balanced_series_monotone_in_k_and_below_total() {
        let n = 16;
        let mut prev = g_balanced(0).unwrap().series(n).unwrap();
        for k in 1..=8 {
            let cur = g_balanced(k).unwrap().series(n).unwrap();
            for i in 0..n {
                assert!(prev.terms()[i] <= cur.terms()[i], "k={k} i={i}");
                assert!(
                    cur.terms()[i] <= BigInt::from(1u64) << i,
                    "k={k} i={i} exceeds 2^n"
                );
            }
            prev = cur;
        }
    }

    #[test]
    fn family_dispatch_and_errors() {
        assert_eq!(
            family_gf(PathFamily::R, -1).unwrap(),
            RatFunc::one()
        );
        assert!(matches!(
            family_gf(PathFamily::H, -1),
            Err(LatticeError::KOutOfRange { .. })
        ));
        assert!(matches!(
            family_gf(PathFamily::F, -2),
            Err(LatticeError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn path_specs_match_family_semantics() {
        let spec = family_path_spec(PathFamily::GBar, 3).unwrap();
        assert_eq!((spec.lower, spec.upper), (-3, 3));
        assert_eq!(spec.terminal, Terminal::Top);
        assert!(family_path_spec(PathFamily::R, 1).is_none());
        assert!(PathSpec::new(1, 2, Terminal::Any).is_err());
    }
}
