//! Brute-force ground truth.
//!
//! Exhaustive enumeration of binary strings, walks on `C_k`, and
//! height-restricted lattice paths. Every closed-form series in the
//! crate is checked against these counters, so the counters themselves
//! stay deliberately dumb: strings and walks are enumerated as raw bit
//! masks, and the two dynamic-programming path counters are validated
//! against raw enumeration before anything else trusts them.
//!
//! Enumeration cost is guarded by an explicit state budget; partitioned
//! counting is plain addition over disjoint mask ranges, so results are
//! identical no matter how the work is split.

use rayon::prelude::*;
use thiserror::Error;

use crate::lattice::{PathSpec, Terminal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration of 2^{n} states exceeds the budget of {budget} states")]
    BudgetExceeded { n: u32, budget: u64 },
    #[error("walk enumeration requires k >= 3, got {0}")]
    KTooSmall(i64),
    #[error("inconsistent query: {0}")]
    InvalidQuery(String),
}

/// Cap on the number of enumerated states (`2^n` for raw sweeps).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

/// Environment variable consulted by [`Budget::from_env`].
pub const BUDGET_ENV_VAR: &str = "KBALANCE_ENUM_BUDGET";

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 24)
    }
}

impl Budget {
    /// Default budget, overridable through `KBALANCE_ENUM_BUDGET`.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV_VAR) {
            Ok(v) => match v.trim().parse::<u64>() {
                Ok(n) if n > 0 => Budget(n),
                _ => Budget::default(),
            },
            Err(_) => Budget::default(),
        }
    }

    fn admit(&self, n: u32) -> Result<(), OracleError> {
        if n >= 63 || (1u64 << n) > self.0 {
            return Err(OracleError::BudgetExceeded { n, budget: self.0 });
        }
        Ok(())
    }
}

/// Counts masks in `0..2^n` satisfying `pred`, splitting the range
/// across workers when it is large. Partial counts combine by addition,
/// so the result does not depend on the partitioning.
fn count_masks<F>(n: u32, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync,
{
    let total: u64 = 1 << n;
    if n <= 16 {
        return (0..total).filter(|&m| pred(m)).count() as u64;
    }
    let chunks: u64 = 1 << 8;
    let chunk_len = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk_len;
            (lo..lo + chunk_len).filter(|&m| pred(m)).count() as u64
        })
        .sum()
}

fn bit(mask: u64, i: u32) -> i64 {
    ((mask >> i) & 1) as i64
}

fn mask_is_balanced(mask: u64, n: u32, k: i64) -> bool {
    let mut height = 0i64;
    let mut lo = 0i64;
    let mut hi = 0i64;
    for i in 0..n {
        height += 2 * bit(mask, i) - 1;
        lo = lo.min(height);
        hi = hi.max(height);
        if hi - lo > k {
            return false;
        }
    }
    true
}

/// Whether every substring of `bits` has its 1s-minus-0s difference in
/// `[-k, k]`. Computed through prefix sums: the condition is equivalent
/// to `max prefix sum - min prefix sum <= k`.
pub fn is_k_balanced(bits: &[u8], k: i64) -> bool {
    debug_assert!(bits.iter().all(|&b| b <= 1), "bits must be 0/1");
    let mut height = 0i64;
    let mut lo = 0i64;
    let mut hi = 0i64;
    for &b in bits {
        height += 2 * i64::from(b) - 1;
        lo = lo.min(height);
        hi = hi.max(height);
    }
    hi - lo <= k
}

/// The definitional check: scans all `O(n^2)` substrings directly.
/// Kept as an independent reference for [`is_k_balanced`].
pub fn is_k_balanced_substrings(bits: &[u8], k: i64) -> bool {
    for start in 0..bits.len() {
        let mut delta = 0i64;
        for &b in &bits[start..] {
            delta += 2 * i64::from(b) - 1;
            if delta.abs() > k {
                return false;
            }
        }
    }
    true
}

/// Exact number of k-balanced binary strings of length `n`, over all
/// `2^n` strings.
pub fn count_balanced_strings(k: i64, n: u32, budget: Budget) -> Result<u64, OracleError> {
    if k < 0 {
        return Err(OracleError::InvalidQuery(format!("negative bound k={k}")));
    }
    if k as u32 >= n {
        // no substring of length <= n can exceed a bound >= n
        if n >= 63 {
            return Err(OracleError::BudgetExceeded { n, budget: budget.0 });
        }
        return Ok(1 << n);
    }
    budget.admit(n)?;
    Ok(count_masks(n, |m| mask_is_balanced(m, n, k)))
}

fn walk_covers(mask: u64, n: u32, k: usize) -> bool {
    let mut pos = 0usize;
    let mut visited: u64 = 1;
    for i in 0..n {
        pos = if bit(mask, i) == 1 {
            (pos + 1) % k
        } else {
            (pos + k - 1) % k
        };
        visited |= 1 << pos;
    }
    visited == (1 << k) - 1
}

/// Number of length-`n` walks from `v_0` on `C_k` that visit all `k`
/// nodes (`cover = true`) or miss at least one (`cover = false`).
pub fn count_walks(k: i64, n: u32, cover: bool, budget: Budget) -> Result<u64, OracleError> {
    if k < 3 {
        return Err(OracleError::KTooSmall(k));
    }
    budget.admit(n)?;
    let k = k as usize;
    let covered = count_masks(n, |m| walk_covers(m, n, k));
    if cover {
        Ok(covered)
    } else {
        Ok((1 << n) - covered)
    }
}

fn steps_for(spec: &PathSpec, size: u32) -> u32 {
    match spec.terminal {
        // a path ending at the top bound contains `upper` mandatory
        // upsteps; size counts the steps beyond those
        Terminal::Top => size + spec.upper as u32,
        Terminal::Ground | Terminal::Any => size,
    }
}

fn terminal_matches(spec: &PathSpec, height: i64) -> bool {
    match spec.terminal {
        Terminal::Ground => height == 0,
        Terminal::Top => height == spec.upper,
        Terminal::Any => true,
    }
}

/// Number of u/d lattice paths of the given size staying within
/// `spec.lower ..= spec.upper` and satisfying the terminal condition.
/// Dynamic programming over (step, height); validated against
/// [`count_paths_raw`].
pub fn count_paths(spec: &PathSpec, size: u32, budget: Budget) -> Result<u64, OracleError> {
    let steps = steps_for(spec, size);
    if steps >= 63 {
        return Err(OracleError::BudgetExceeded {
            n: steps,
            budget: budget.0,
        });
    }
    let span = (spec.upper - spec.lower) as usize + 1;
    let offset = -spec.lower as usize; // index of height 0
    let mut counts = vec![0u64; span];
    counts[offset] = 1;
    for _ in 0..steps {
        let mut next = vec![0u64; span];
        for (h, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if h + 1 < span {
                next[h + 1] += c;
            }
            if h > 0 {
                next[h - 1] += c;
            }
        }
        counts = next;
    }
    Ok(counts
        .iter()
        .enumerate()
        .filter(|(h, _)| terminal_matches(spec, *h as i64 - offset as i64))
        .map(|(_, &c)| c)
        .sum())
}

/// Raw-enumeration twin of [`count_paths`]: walks all `2^steps` step
/// sequences. Exists to validate the DP table.
pub fn count_paths_raw(spec: &PathSpec, size: u32, budget: Budget) -> Result<u64, OracleError> {
    let steps = steps_for(spec, size);
    budget.admit(steps)?;
    let (lower, upper) = (spec.lower, spec.upper);
    Ok(count_masks(steps, |mask| {
        let mut height = 0i64;
        for i in 0..steps {
            height += 2 * bit(mask, i) - 1;
            if height < lower || height > upper {
                return false;
            }
        }
        terminal_matches(spec, height)
    }))
}

/// Number of `n`-step u/d paths whose vertical extent (maximum vertex
/// height minus minimum vertex height) is at most `k`. Dynamic
/// programming over (height above running minimum, running extent) —
/// a route independent of the string counter it must agree with.
pub fn count_extent_paths(k: i64, n: u32, budget: Budget) -> Result<u64, OracleError> {
    if k < 0 {
        return Err(OracleError::InvalidQuery(format!("negative extent k={k}")));
    }
    if n >= 63 || (n as u64) > budget.0 {
        return Err(OracleError::BudgetExceeded { n, budget: budget.0 });
    }
    let k = k as usize;
    // state[offset][spread]: offset = height - running min, spread = running max - running min
    let mut state = vec![vec![0u64; k + 1]; k + 1];
    state[0][0] = 1;
    for _ in 0..n {
        let mut next = vec![vec![0u64; k + 1]; k + 1];
        for o in 0..=k {
            for s in o..=k {
                let c = state[o][s];
                if c == 0 {
                    continue;
                }
                // upstep: extent grows when we rise above the running max
                let (no, ns) = (o + 1, s.max(o + 1));
                if ns <= k {
                    next[no][ns] += c;
                }
                // downstep: dropping below the running min shifts the frame
                if o == 0 {
                    if s < k {
                        next[0][s + 1] += c;
                    }
                } else {
                    next[o - 1][s] += c;
                }
            }
        }
        state = next;
    }
    Ok(state.iter().flatten().sum())
}

/// Parameters of one brute-force count, as issued by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CountQuery {
    Strings { k: i64, n: u32 },
    Walks { k: i64, n: u32, cover: bool },
    Paths { spec: PathSpec, size: u32 },
    ExtentPaths { k: i64, n: u32 },
}

impl CountQuery {
    pub fn run(&self, budget: Budget) -> Result<u64, OracleError> {
        match self {
            CountQuery::Strings { k, n } => count_balanced_strings(*k, *n, budget),
            CountQuery::Walks { k, n, cover } => count_walks(*k, *n, *cover, budget),
            CountQuery::Paths { spec, size } => count_paths(spec, *size, budget),
            CountQuery::ExtentPaths { k, n } => count_extent_paths(*k, *n, budget),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> Vec<u8> {
        s.bytes().map(|b| b - b'0').collect()
    }

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn balanced_examples() {
        assert!(!is_k_balanced(&bits("11011"), 2));
        assert!(is_k_balanced(&bits("11011"), 3));
        assert!(is_k_balanced(&[], 0));
    }

    #[test]
    fn prefix_definition_matches_substring_definition() {
        for n in 0..=12u32 {
            for mask in 0u64..(1 << n) {
                let b: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
                for k in 0..=4 {
                    assert_eq!(
                        is_k_balanced(&b, k),
                        is_k_balanced_substrings(&b, k),
                        "mask={mask:b} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn string_count_examples() {
        assert_eq!(count_balanced_strings(2, 4, budget()).unwrap(), 10);
        assert_eq!(count_balanced_strings(1, 5, budget()).unwrap(), 2);
        // bound >= length: every string qualifies
        assert_eq!(count_balanced_strings(7, 7, budget()).unwrap(), 128);
        assert_eq!(count_balanced_strings(9, 6, budget()).unwrap(), 64);
    }

    #[test]
    fn walk_count_examples() {
        assert_eq!(count_walks(4, 3, true, budget()).unwrap(), 2);
        assert_eq!(count_walks(3, 1, false, budget()).unwrap(), 2);
        for k in 3..=6i64 {
            for n in 0..k as u32 - 1 {
                assert_eq!(count_walks(k, n, true, budget()).unwrap(), 0);
            }
        }
        assert_eq!(count_walks(2, 3, true, budget()), Err(OracleError::KTooSmall(2)));
    }

    #[test]
    fn cover_and_miss_partition_all_walks() {
        for k in 3..=6i64 {
            for n in 0..=10u32 {
                let covered = count_walks(k, n, true, budget()).unwrap();
                let missed = count_walks(k, n, false, budget()).unwrap();
                assert_eq!(covered + missed, 1 << n, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn path_count_examples() {
        let dyck2 = PathSpec::new(0, 2, Terminal::Ground).unwrap();
        assert_eq!(count_paths(&dyck2, 4, budget()).unwrap(), 2);
        let top2 = PathSpec::new(0, 2, Terminal::Top).unwrap();
        assert_eq!(count_paths(&top2, 2, budget()).unwrap(), 2);
        let any1 = PathSpec::new(-1, 1, Terminal::Any).unwrap();
        assert_eq!(count_paths(&any1, 3, budget()).unwrap(), 4);
        let zigzag = PathSpec::new(0, 1, Terminal::Ground).unwrap();
        assert_eq!(count_paths(&zigzag, 6, budget()).unwrap(), 1);
    }

    #[test]
    fn dp_matches_raw_enumeration() {
        let specs = [
            PathSpec::new(0, 2, Terminal::Ground).unwrap(),
            PathSpec::new(0, 3, Terminal::Top).unwrap(),
            PathSpec::new(-2, 2, Terminal::Any).unwrap(),
            PathSpec::new(-1, 3, Terminal::Ground).unwrap(),
            PathSpec::new(-3, 1, Terminal::Any).unwrap(),
        ];
        for spec in &specs {
            for size in 0..=14u32 {
                assert_eq!(
                    count_paths(spec, size, budget()).unwrap(),
                    count_paths_raw(spec, size, budget()).unwrap(),
                    "{spec:?} size={size}"
                );
            }
        }
    }

    #[test]
    fn extent_examples() {
        assert_eq!(count_extent_paths(2, 4, budget()).unwrap(), 10);
        assert_eq!(count_extent_paths(0, 0, budget()).unwrap(), 1);
        assert_eq!(count_extent_paths(0, 1, budget()).unwrap(), 0);
    }

    #[test]
    fn extent_equals_balanced_strings() {
        for k in 0..=6i64 {
            for n in 0..=14u32 {
                assert_eq!(
                    count_extent_paths(k, n, budget()).unwrap(),
                    count_balanced_strings(k, n, budget()).unwrap(),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn budget_guard() {
        let tiny = Budget(1 << 10);
        assert_eq!(
            count_balanced_strings(2, 20, tiny),
            Err(OracleError::BudgetExceeded { n: 20, budget: 1 << 10 })
        );
        assert_eq!(
            count_walks(4, 20, true, tiny),
            Err(OracleError::BudgetExceeded { n: 20, budget: 1 << 10 })
        );
        assert!(count_balanced_strings(2, 10, tiny).is_ok());
    }

    #[test]
    fn partitioning_does_not_change_counts() {
        // split the mask range at several granularities and compare
        let n = 14u32;
        let k = 2i64;
        let whole = count_balanced_strings(k, n, budget()).unwrap();
        for chunk_log in [1u32, 3, 7] {
            let chunks = 1u64 << chunk_log;
            let len = (1u64 << n) / chunks;
            let split: u64 = (0..chunks)
                .map(|c| {
                    (c * len..(c + 1) * len)
                        .filter(|&m| mask_is_balanced(m, n, k))
                        .count() as u64
                })
                .sum();
            assert_eq!(split, whole);
        }
    }

    #[test]
    fn parallel_sweep_matches_serial() {
        // n = 18 crosses the parallel threshold inside count_masks
        let parallel = count_balanced_strings(3, 18, budget()).unwrap();
        let serial = (0u64..(1 << 18))
            .filter(|&m| mask_is_balanced(m, 18, 3))
            .count() as u64;
        assert_eq!(parallel, serial);
    }

    #[test]
    fn query_dispatch() {
        let q = CountQuery::Strings { k: 2, n: 4 };
        assert_eq!(q.run(budget()).unwrap(), 10);
        let q = CountQuery::Walks { k: 4, n: 3, cover: true };
        assert_eq!(q.run(budget()).unwrap(), 2);
    }

    #[test]
    fn env_budget_parsing() {
        assert_eq!(Budget::default(), Budget(1 << 24));
    }
}
