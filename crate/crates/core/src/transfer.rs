//! Transfer-matrix pipeline.
//!
//! Counts walks on the circular digraph `C_k` through the resolvent
//! `(I_k - x A_k)^{-1}` of path-graph adjacency matrices. `S_k` — the sum
//! of all resolvent entries — is computed two independent ways: a
//! fraction-free linear solve over integer polynomials, and the closed
//! determinant formula `S_k = (k U_k - 2x W_k) / ((1-2x) U_k)`. The
//! generating function for k-balanced strings falls out as the
//! difference `f_k = S_{k+1} - S_k`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::bigpoly::{Poly, RatFunc};
use crate::chebyshev::u_poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error("circular digraph walks require k >= 3, got {0}")]
    KTooSmall(i64),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("invalid bit value at position {0} (expected 0 or 1)")]
    InvalidBit(usize),
}

/// Tridiagonal adjacency matrix of the path graph on `k` nodes: 1s just
/// above and just below the main diagonal, 0s elsewhere.
pub fn adjacency(k: usize) -> Vec<Vec<i64>> {
    assert!(k >= 1, "adjacency matrix requires k >= 1");
    let mut m = vec![vec![0i64; k]; k];
    for i in 0..k - 1 {
        m[i][i + 1] = 1;
        m[i + 1][i] = 1;
    }
    m
}

/// `I_k - x A_k` over integer polynomials.
fn resolvent_base(k: usize) -> Vec<Vec<Poly>> {
    let a = adjacency(k);
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Poly::one()
                    } else {
                        Poly::from_ints(&[0, -a[i][j]])
                    }
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination. All intermediate
/// divisions are exact over the polynomial ring.
pub fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut negated = false;
    let mut prev = Poly::one();
    for p in 0..n - 1 {
        if m[p][p].is_zero() {
            let Some(r) = (p + 1..n).find(|&r| !m[r][p].is_zero()) else {
                return Poly::zero();
            };
            m.swap(p, r);
            negated = !negated;
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let t = &(&m[p][p] * &m[i][j]) - &(&m[i][p] * &m[p][j]);
                m[i][j] = t.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][p] = Poly::zero();
        }
        prev = m[p][p].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        -&det
    } else {
        det
    }
}

/// `det(I_k - x A_k)`, which equals `U_k` (both satisfy the same
/// three-term recurrence with the same initial values). Computed by
/// Bareiss elimination so the equality stays an independent check.
pub fn det_resolvent(k: i64) -> Poly {
    assert!(k >= 0, "determinant index must be >= 0");
    if k == 0 {
        return Poly::one(); // empty determinant
    }
    bareiss_det(resolvent_base(k as usize))
}

/// Fraction-free Gauss-Jordan solve of `m x = b` over integer
/// polynomials. Returns the solutions as reduced rational functions, or
/// `None` for a singular system. Every division along the way is exact;
/// each variable incurs a single final division `x_i = aug_i / diag_i`.
pub fn solve_fraction_free(mut m: Vec<Vec<Poly>>, b: Vec<Poly>) -> Option<Vec<RatFunc>> {
    let n = m.len();
    assert_eq!(b.len(), n, "dimension mismatch");
    for (row, rhs) in m.iter_mut().zip(b) {
        row.push(rhs);
    }
    let mut prev = Poly::one();
    for p in 0..n {
        if m[p][p].is_zero() {
            let r = (p + 1..n).find(|&r| !m[r][p].is_zero())?;
            m.swap(p, r);
        }
        let pivot_row = m[p].clone();
        let pivot = pivot_row[p].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == p {
                continue;
            }
            let head = row[p].clone();
            for (j, entry) in row.iter_mut().enumerate() {
                if j == p {
                    continue;
                }
                let t = &(&pivot * &*entry) - &(&head * &pivot_row[j]);
                *entry = t.div_exact(&prev).expect("fraction-free division is exact");
            }
            row[p] = Poly::zero();
        }
        prev = pivot;
    }
    Some(
        (0..n)
            .map(|i| RatFunc::new(m[i][n].clone(), m[i][i].clone()))
            .collect(),
    )
}

/// Solution of `(I_k - x A_k) x = 1` over the rational-function field;
/// entry `i` is the generating function for walks ending anywhere,
/// weighted from start node `i`.
pub fn resolvent_solution(k: usize) -> Vec<RatFunc> {
    assert!(k >= 1, "solve requires k >= 1");
    let ones = vec![Poly::one(); k];
    solve_fraction_free(resolvent_base(k), ones)
        .expect("resolvent is nonsingular: det = U_k has constant term 1")
}

/// `S_k`: sum of all entries of `(I_k - x A_k)^{-1}`, by the direct
/// linear solve. `S_0 = 0` by the empty-sum convention.
pub fn s_direct(k: i64) -> RatFunc {
    assert!(k >= 0, "S_k requires k >= 0");
    if k == 0 {
        return RatFunc::zero();
    }
    let mut acc = RatFunc::zero();
    for x in resolvent_solution(k as usize) {
        acc = &acc + &x;
    }
    acc
}

/// `W_k`: determinant of the resolvent with its first column replaced by
/// ones (the Cramer numerator shared by the first and last variables),
/// by its three-term recurrence `W_0 = 0, W_1 = 1, W_k = U_{k-1} + x W_{k-1}`.
pub fn w_det(k: i64) -> Poly {
    assert!(k >= 0, "W_k requires k >= 0");
    let x = Poly::x();
    let mut prev = Poly::zero();
    for i in 1..=k {
        prev = &u_poly(i - 1) + &(&x * &prev);
    }
    prev
}

/// Closed forms `W_{2m} = (U_m + x U_{m-1}) U_{m-1}` and
/// `W_{2m+1} = (U_m + x U_{m-1}) U_m`.
pub fn w_closed(k: i64) -> Poly {
    assert!(k >= 0, "W_k requires k >= 0");
    let m = k / 2;
    let shared = &u_poly(m) + &(&Poly::x() * &u_poly(m - 1));
    if k % 2 == 0 {
        &shared * &u_poly(m - 1)
    } else {
        &shared * &u_poly(m)
    }
}

/// Closed form `S_k = (k U_k - 2x W_k) / ((1 - 2x) U_k)`, reduced.
pub fn s_closed(k: i64) -> RatFunc {
    assert!(k >= 0, "S_k requires k >= 0");
    if k == 0 {
        return RatFunc::zero();
    }
    let uk = u_poly(k);
    let two_x = Poly::from_ints(&[0, 2]);
    let num = &uk.scalar_mul(&BigInt::from(k)) - &(&two_x * &w_det(k));
    let den = &Poly::from_ints(&[1, -2]) * &uk;
    RatFunc::new(num, den)
}

/// Generating function for k-balanced binary strings: `f_k = S_{k+1} - S_k`.
pub fn f_balanced(k: i64) -> RatFunc {
    assert!(k >= 0, "f_k requires k >= 0");
    &s_closed(k + 1) - &s_closed(k)
}

/// Generating function for walks from `v_0` on `C_k` that miss at least
/// one node: `S_{k-1} - S_{k-2}`.
pub fn bad_walk_gf(k: i64) -> Result<RatFunc, TransferError> {
    if k < 3 {
        return Err(TransferError::KTooSmall(k));
    }
    Ok(&s_closed(k - 1) - &s_closed(k - 2))
}

/// Generating function for walks from `v_0` on `C_k` that visit every
/// node. Walks from `v_0` number `2^n` in total (two out-arcs per node),
/// so this is `1/(1-2x)` minus the bad-walk series.
pub fn good_walk_gf(k: i64) -> Result<RatFunc, TransferError> {
    let total = RatFunc::new(Poly::one(), Poly::from_ints(&[1, -2]));
    Ok(&total - &bad_walk_gf(k)?)
}

/// A walk on the circular digraph `C_k`, stored as the visited node
/// sequence. Starts at `v_0`; consecutive nodes differ by `±1 (mod k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    k: usize,
    nodes: Vec<usize>,
}

impl Walk {
    /// Validates the node sequence as a walk from `v_0` on `C_k`.
    pub fn new(k: usize, nodes: Vec<usize>) -> Result<Self, TransferError> {
        if k < 3 {
            return Err(TransferError::KTooSmall(k as i64));
        }
        if nodes.is_empty() {
            return Err(TransferError::InvalidWalk("empty node sequence".into()));
        }
        if nodes[0] != 0 {
            return Err(TransferError::InvalidWalk(format!(
                "walks start at v_0, got v_{}",
                nodes[0]
            )));
        }
        for (i, w) in nodes.iter().enumerate() {
            if *w >= k {
                return Err(TransferError::InvalidWalk(format!(
                    "node v_{w} out of range for C_{k}"
                )));
            }
            if i > 0 {
                let prev = nodes[i - 1];
                if *w != (prev + 1) % k && *w != (prev + k - 1) % k {
                    return Err(TransferError::InvalidWalk(format!(
                        "step v_{prev} -> v_{w} is not an arc of C_{k}"
                    )));
                }
            }
        }
        Ok(Walk { k, nodes })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Encodes a walk as its transition-label string: bit 1 for a clockwise
/// step (`+1 mod k`), bit 0 for a counterclockwise step.
pub fn encode_walk(walk: &Walk) -> Vec<u8> {
    walk.nodes
        .windows(2)
        .map(|w| u8::from(w[1] == (w[0] + 1) % walk.k))
        .collect()
}

/// Decodes a transition-label string into the unique walk from `v_0` it
/// generates on `C_k`.
pub fn decode_walk(k: usize, bits: &[u8]) -> Result<Walk, TransferError> {
    if k < 3 {
        return Err(TransferError::KTooSmall(k as i64));
    }
    let mut nodes = Vec::with_capacity(bits.len() + 1);
    let mut pos = 0usize;
    nodes.push(pos);
    for (i, bit) in bits.iter().enumerate() {
        pos = match bit {
            1 => (pos + 1) % k,
            0 => (pos + k - 1) % k,
            _ => return Err(TransferError::InvalidBit(i)),
        };
        nodes.push(pos);
    }
    Ok(Walk { k, nodes })
}

/// Small dense matrix over the rational-function field; used for the
/// resolvent `I_k - x A_k` and its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<RatFunc>,
}

impl RatMatrix {
    /// The resolvent `I_k - x A_k`.
    pub fn resolvent(k: usize) -> Self {
        let base = resolvent_base(k);
        RatMatrix {
            dim: k,
            entries: base
                .into_iter()
                .flatten()
                .map(RatFunc::from_poly)
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.dim + j]
    }

    /// Matrix inverse by Gauss-Jordan elimination over the field;
    /// `None` for a singular matrix.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.dim;
        let mut work: Vec<Vec<RatFunc>> = (0..n)
            .map(|i| {
                let mut row: Vec<RatFunc> = (0..n).map(|j| self.entry(i, j).clone()).collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    }
                }));
                row
            })
            .collect();
        for p in 0..n {
            let r = (p..n).find(|&r| !work[r][p].is_zero())?;
            work.swap(p, r);
            let inv_pivot = work[p][p].inv();
            for entry in work[p].iter_mut() {
                *entry = &*entry * &inv_pivot;
            }
            let pivot_row = work[p].clone();
            for (i, row) in work.iter_mut().enumerate() {
                if i == p || row[p].is_zero() {
                    continue;
                }
                let factor = row[p].clone();
                for (entry, pivot_entry) in row.iter_mut().zip(&pivot_row) {
                    *entry = &*entry - &(&factor * pivot_entry);
                }
            }
        }
        Some(RatMatrix {
            dim: n,
            entries: work
                .into_iter()
                .flat_map(|row| row.into_iter().skip(n))
                .collect(),
        })
    }

    pub fn entry_sum(&self) -> RatFunc {
        self.entries
            .iter()
            .fold(RatFunc::zero(), |acc, e| &acc + e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::{cheb, ChebKind};

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den))
    }

    /// Cofactor-expansion determinant over polynomials; exponential, but
    /// independent of the Bareiss path.
    fn naive_det(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        if n == 0 {
            return Poly::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Poly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Poly>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[i][c].clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &naive_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    /// Cramer-rule solve via the naive determinant.
    fn cramer_solve(m: &[Vec<Poly>], b: &[Poly]) -> Vec<RatFunc> {
        let det = naive_det(m);
        (0..m.len())
            .map(|col| {
                let mut replaced = m.to_vec();
                for (row, rhs) in replaced.iter_mut().zip(b) {
                    row[col] = rhs.clone();
                }
                RatFunc::new(naive_det(&replaced), det.clone())
            })
            .collect()
    }

    #[test]
    fn adjacency_small_cases() {
        assert_eq!(adjacency(1), vec![vec![0]]);
        assert_eq!(adjacency(2), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            adjacency(3),
            vec![vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]
        );
    }

    #[test]
    #[should_panic(expected = "k >= 1")]
    fn adjacency_rejects_zero() {
        let _ = adjacency(0);
    }

    #[test]
    fn det_resolvent_examples() {
        assert_eq!(det_resolvent(0), Poly::one());
        assert_eq!(det_resolvent(2), p(&[1, 0, -1]));
        assert_eq!(det_resolvent(3), p(&[1, 0, -2]));
    }

    #[test]
    fn det_resolvent_equals_u_up_to_16() {
        for k in 0..=16 {
            assert_eq!(det_resolvent(k), cheb(ChebKind::U, k), "k={k}");
        }
    }

    #[test]
    fn bareiss_matches_naive_det() {
        for k in 1..=6 {
            let m = resolvent_base(k);
            assert_eq!(bareiss_det(m.clone()), naive_det(&m));
        }
        // a dense non-symmetric case with a zero pivot on the way
        let m = vec![
            vec![p(&[0]), p(&[1, 2]), p(&[3])],
            vec![p(&[1]), p(&[0, 1]), p(&[2, -1])],
            vec![p(&[5, 1]), p(&[4]), p(&[1, 1, 1])],
        ];
        assert_eq!(bareiss_det(m.clone()), naive_det(&m));
    }

    #[test]
    fn solve_matches_cramer_oracle() {
        for k in 1..=6 {
            let m = resolvent_base(k);
            let b = vec![Poly::one(); k];
            assert_eq!(resolvent_solution(k), cramer_solve(&m, &b), "k={k}");
        }
    }

    #[test]
    fn s_direct_examples() {
        assert_eq!(s_direct(0), RatFunc::zero());
        assert_eq!(s_direct(1), RatFunc::one());
        assert_eq!(s_direct(2), rf(&[2], &[1, -1]));
        // (3 - 2x - 8x^2)/((1-2x)(1-2x^2)), which reduces by the common
        // factor 1 - 2x
        let den = &p(&[1, -2]) * &p(&[1, 0, -2]);
        assert_eq!(s_direct(3), RatFunc::new(p(&[3, -2, -8]), den));
    }

    #[test]
    fn s_closed_matches_direct_up_to_12() {
        for k in 0..=12 {
            assert_eq!(s_closed(k), s_direct(k), "k={k}");
        }
    }

    #[test]
    fn resolvent_inverse_entry_sum_agrees() {
        for k in 1..=6 {
            let inv = RatMatrix::resolvent(k).inverse().expect("nonsingular");
            assert_eq!(inv.entry_sum(), s_direct(k as i64), "k={k}");
        }
    }

    #[test]
    fn solution_symmetry_first_equals_last() {
        for k in 1..=10 {
            let xs = resolvent_solution(k);
            assert_eq!(xs[0], xs[k - 1], "x_1 = x_k at k={k}");
        }
    }

    #[test]
    fn weighted_row_sum_identity() {
        // (1-x)x_1 + (1-2x)(x_2+...+x_{k-1}) + (1-x)x_k = k
        let end_weight = rf(&[1, -1], &[1]);
        let mid_weight = rf(&[1, -2], &[1]);
        for k in 2..=10usize {
            let xs = resolvent_solution(k);
            let mut acc = &(&end_weight * &xs[0]) + &(&end_weight * &xs[k - 1]);
            for x in &xs[1..k - 1] {
                acc = &acc + &(&mid_weight * x);
            }
            assert_eq!(acc, RatFunc::from_int(k as i64), "k={k}");
        }
        // k = 1 degenerates to the single equation x_1 = 1
        assert_eq!(resolvent_solution(1)[0], RatFunc::one());
    }

    #[test]
    fn w_examples_and_closed_forms() {
        assert_eq!(w_det(0), Poly::zero());
        assert_eq!(w_det(1), Poly::one());
        assert_eq!(w_det(2), p(&[1, 1]));
        assert_eq!(w_det(4), p(&[1, 1, -1]));
        for k in 0..=32 {
            assert_eq!(w_det(k), w_closed(k), "k={k}");
        }
    }

    #[test]
    fn w_equals_cramer_numerator_determinant() {
        // the resolvent with its first column replaced by ones
        for k in 1..=10usize {
            let mut m = resolvent_base(k);
            for row in m.iter_mut() {
                row[0] = Poly::one();
            }
            assert_eq!(bareiss_det(m), w_det(k as i64), "k={k}");
        }
    }

    #[test]
    fn f_balanced_examples() {
        assert_eq!(f_balanced(0), RatFunc::one());
        assert_eq!(f_balanced(1), rf(&[1, 1], &[1, -1]));
        let den = &p(&[1, -1]) * &p(&[1, 0, -2]);
        assert_eq!(f_balanced(2), RatFunc::new(p(&[1, 1]), den.clone()));
        assert_eq!(
            f_balanced(2).series(8).unwrap().to_i64_vec(),
            vec![1, 2, 4, 6, 10, 14, 22, 30]
        );
    }

    #[test]
    fn bad_and_good_walk_gfs() {
        assert_eq!(bad_walk_gf(3).unwrap(), rf(&[1, 1], &[1, -1]));
        assert_eq!(bad_walk_gf(2), Err(TransferError::KTooSmall(2)));
        let good4 = good_walk_gf(4).unwrap().series(4).unwrap();
        assert_eq!(good4.to_i64_vec(), vec![0, 0, 0, 2]);
        // no walk can cover k nodes in fewer than k-1 steps
        for k in 3..=7 {
            let series = good_walk_gf(k).unwrap().series(k as usize - 1).unwrap();
            assert!(series.terms().iter().all(|c| c == &BigInt::ZERO), "k={k}");
        }
    }

    #[test]
    fn good_walk_series_nonnegative() {
        for k in 3..=7 {
            let series = good_walk_gf(k).unwrap().series(24).unwrap();
            assert!(
                series.terms().iter().all(|c| c >= &BigInt::ZERO),
                "k={k}: {series}"
            );
        }
    }

    #[test]
    fn codec_figure_roundtrip() {
        let walk = Walk::new(4, vec![0, 1, 2, 1, 2, 3]).unwrap();
        assert_eq!(encode_walk(&walk), vec![1, 1, 0, 1, 1]);
        assert_eq!(decode_walk(4, &[1, 1, 0, 1, 1]).unwrap(), walk);
    }

    #[test]
    fn codec_empty_walk() {
        let walk = Walk::new(5, vec![0]).unwrap();
        assert_eq!(encode_walk(&walk), Vec::<u8>::new());
        assert_eq!(walk.len(), 0);
    }

    #[test]
    fn codec_roundtrips_exhaustively() {
        // decode . encode = id on valid walks; encode . decode = id on bits
        for k in 3..=5usize {
            for n in 0..=6u32 {
                for mask in 0u32..(1 << n) {
                    let bits: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
                    let walk = decode_walk(k, &bits).unwrap();
                    assert_eq!(encode_walk(&walk), bits);
                    assert_eq!(decode_walk(k, &encode_walk(&walk)).unwrap(), walk);
                }
            }
        }
    }

    #[test]
    fn codec_error_cases() {
        assert_eq!(decode_walk(2, &[1]), Err(TransferError::KTooSmall(2)));
        assert!(matches!(
            Walk::new(4, vec![0, 2]),
            Err(TransferError::InvalidWalk(_))
        ));
        assert!(matches!(
            Walk::new(4, vec![1, 2]),
            Err(TransferError::InvalidWalk(_))
        ));
        assert_eq!(decode_walk(4, &[1, 7]), Err(TransferError::InvalidBit(1)));
    }
}
