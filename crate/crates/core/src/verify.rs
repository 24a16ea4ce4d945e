//! Cross-module verification suites.
//!
//! Each suite bundles the symbolic identity checks of one pipeline
//! stage, or compares closed-form series against the brute-force
//! counters. They power `kbalance verify` and the acceptance tests.

use crate::bigpoly::Poly;
use crate::chebyshev::{cheb, cheb_explicit, cheb_identity_check, ChebKind, REFERENCE_TABLE};
use crate::lattice::{
    family_gf, family_path_spec, g_balanced, verify_r_remark, verify_table_recurrences, PathFamily,
};
use crate::oracle::{
    count_balanced_strings, count_extent_paths, count_paths, count_paths_raw, count_walks,
    is_k_balanced, is_k_balanced_substrings, Budget, OracleError,
};
use crate::reconcile::{c_divisibility_check, verify_reconciliation};
use crate::report::Report;
use crate::transfer::{bad_walk_gf, det_resolvent, f_balanced, good_walk_gf, resolvent_solution,
    s_closed, s_direct, w_closed, w_det};
use crate::{RatFunc, Series};

/// Suite names accepted by the CLI.
pub const SUITES: [&str; 6] = ["cheb", "tables", "transfer", "reconcile", "oracle", "all"];

/// Golden-table and identity checks for the Chebyshev constructions.
pub fn suite_cheb(k_max: i64) -> Report {
    let mut report = Report::new("cheb");
    for &(k, t_coeffs, u_coeffs) in REFERENCE_TABLE.iter() {
        let t_expected = Poly::from_ints(t_coeffs);
        let u_expected = Poly::from_ints(u_coeffs);
        report.record_eq(format!("table T k={k} recurrence"), &t_expected, &cheb(ChebKind::T, k));
        report.record_eq(format!("table U k={k} recurrence"), &u_expected, &cheb(ChebKind::U, k));
        report.record_eq(format!("table T k={k} explicit"), &t_expected, &cheb_explicit(ChebKind::T, k));
        report.record_eq(format!("table U k={k} explicit"), &u_expected, &cheb_explicit(ChebKind::U, k));
    }
    for k in 0..=k_max {
        report.record_eq(
            format!("recurrence = explicit T k={k}"),
            &cheb(ChebKind::T, k),
            &cheb_explicit(ChebKind::T, k),
        );
        report.record_eq(
            format!("recurrence = explicit U k={k}"),
            &cheb(ChebKind::U, k),
            &cheb_explicit(ChebKind::U, k),
        );
    }
    report.absorb(cheb_identity_check(k_max.max(1)));
    report
}

/// Determinant, entry-sum, and Cramer-numerator checks for the
/// transfer-matrix pipeline.
pub fn suite_transfer(k_max: i64) -> Report {
    let mut report = Report::new("transfer");
    for k in 0..=k_max {
        report.record_eq(
            format!("det resolvent = U k={k}"),
            &cheb(ChebKind::U, k),
            &det_resolvent(k),
        );
        report.record_eq(format!("S direct = closed k={k}"), &s_direct(k), &s_closed(k));
        report.record_eq(format!("W recurrence = closed k={k}"), &w_det(k), &w_closed(k));
        if k >= 1 {
            let xs = resolvent_solution(k as usize);
            report.record_eq(
                format!("solution symmetry k={k}"),
                &xs[0],
                &xs[k as usize - 1],
            );
            // summing the system's equations: (1-x)x_1 + (1-2x)(middle) + (1-x)x_k = k
            let weighted = if k == 1 {
                xs[0].clone()
            } else {
                let end = RatFunc::from_poly(Poly::from_ints(&[1, -1]));
                let mid = RatFunc::from_poly(Poly::from_ints(&[1, -2]));
                let mut acc = &(&end * &xs[0]) + &(&end * &xs[k as usize - 1]);
                for x in &xs[1..k as usize - 1] {
                    acc = &acc + &(&mid * x);
                }
                acc
            };
            report.record_eq(format!("weighted row sum k={k}"), &RatFunc::from_int(k), &weighted);
        }
    }
    report
}

/// Lattice-table recurrences plus the compact R expressions.
pub fn suite_tables(k_max: i64) -> Report {
    let mut report = verify_table_recurrences(k_max.max(1));
    report.absorb(verify_r_remark(k_max / 2));
    report
}

/// Reconciliation identities and exact divisibility.
pub fn suite_reconcile(k_max: i64) -> Report {
    let mut report = verify_reconciliation(k_max.max(1));
    report.absorb(c_divisibility_check(k_max.max(1)));
    report
}

/// Closed-form series against brute-force enumeration: strings, walks,
/// paths (all six table families), vertical-extent paths, plus the
/// oracle's own self-validation (DP vs raw enumeration, prefix-sum vs
/// substring balance definitions).
pub fn suite_oracle(k_max: i64, n_max: u32, budget: Budget) -> Result<Report, OracleError> {
    let mut report = Report::new("oracle");

    for k in 0..=k_max.min(8) {
        let lattice_series = g_balanced(k).unwrap().series(n_max as usize + 1).unwrap();
        let transfer_series = f_balanced(k).series(n_max as usize + 1).unwrap();
        let mut ok = true;
        for n in 0..=n_max {
            let counted = count_balanced_strings(k, n, budget)?;
            ok &= lattice_series.terms()[n as usize] == counted.into();
            ok &= transfer_series.terms()[n as usize] == counted.into();
        }
        report.record(format!("balanced strings k={k} n<={n_max}"), ok);
    }

    for k in 3..=k_max {
        let bad = bad_walk_gf(k).unwrap().series(n_max as usize + 1).unwrap();
        let good = good_walk_gf(k).unwrap().series(n_max as usize + 1).unwrap();
        let mut ok = true;
        for n in 0..=n_max {
            ok &= bad.terms()[n as usize] == count_walks(k, n, false, budget)?.into();
            ok &= good.terms()[n as usize] == count_walks(k, n, true, budget)?.into();
            // missing a node on C_k is the same as being (k-2)-balanced
            ok &= bad.terms()[n as usize] == count_balanced_strings(k - 2, n, budget)?.into();
        }
        report.record(format!("walks on C_{k} n<={n_max}"), ok);
    }

    let families = [
        PathFamily::F,
        PathFamily::G,
        PathFamily::FBar,
        PathFamily::GBar,
        PathFamily::H,
        PathFamily::HBar,
    ];
    for family in families {
        for k in 0..=k_max.min(6) {
            let spec = family_path_spec(family, k).unwrap();
            let series = family_gf(family, k).unwrap().series(n_max as usize + 1).unwrap();
            let mut ok = true;
            for size in 0..=n_max {
                ok &= series.terms()[size as usize] == count_paths(&spec, size, budget)?.into();
            }
            report.record(format!("paths {family:?} k={k} size<={n_max}"), ok);
        }
    }

    for k in 0..=k_max.min(6) {
        let mut ok = true;
        for n in 0..=n_max {
            ok &= count_extent_paths(k, n, budget)? == count_balanced_strings(k, n, budget)?;
        }
        report.record(format!("extent = strings k={k} n<={n_max}"), ok);
    }

    // self-validation: DP path counter against raw enumeration
    let self_specs = [
        family_path_spec(PathFamily::F, 2).unwrap(),
        family_path_spec(PathFamily::GBar, 2).unwrap(),
        family_path_spec(PathFamily::HBar, 3).unwrap(),
    ];
    for spec in &self_specs {
        let mut ok = true;
        for size in 0..=n_max.min(14) {
            ok &= count_paths(spec, size, budget)? == count_paths_raw(spec, size, budget)?;
        }
        report.record(
            format!("dp = raw paths [{},{}] {:?}", spec.lower, spec.upper, spec.terminal),
            ok,
        );
    }

    // self-validation: the two balance definitions agree
    let n_def = n_max.min(12);
    let mut ok = true;
    for n in 0..=n_def {
        for mask in 0u64..(1 << n) {
            let bits: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
            for k in 0..=4 {
                ok &= is_k_balanced(&bits, k) == is_k_balanced_substrings(&bits, k);
            }
        }
    }
    report.record(format!("balance definitions agree n<={n_def}"), ok);

    Ok(report)
}

/// Every suite, in pipeline order.
pub fn suite_all(k_max: i64, n_max: u32, budget: Budget) -> Result<Vec<Report>, OracleError> {
    Ok(vec![
        suite_cheb(k_max),
        suite_transfer(k_max),
        suite_tables(k_max),
        suite_reconcile(k_max),
        suite_oracle(k_max, n_max, budget)?,
    ])
}

/// Convenience view over a series for tests and the CLI.
pub fn series_prefix(f: &RatFunc, n: usize) -> Series {
    f.series(n).expect("series exists for every built-in family")
}
