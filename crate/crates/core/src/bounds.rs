//! Closed-form bounds on the longest k-modal subsequence guaranteed in any
//! generic sequence of length n, evaluated exactly.
//!
//! Every ceiling or floor of a square root is decided by integer squaring:
//! the guaranteed length is the smallest m >= 1 with (2m+k)^2 >= (2k+1)(4n-1),
//! which is the integer form of ceil(sqrt((2k+1)(n-1/4)) - k/2). No floating
//! point appears anywhere, so results cannot be off by a ULP.

use serde::Serialize;

use crate::error::Error;

/// Floor of the square root of `v`, by Newton iteration on u128.
pub fn isqrt(v: u128) -> u128 {
    if v < 2 {
        return v;
    }
    let mut x = 1u128 << (v.ilog2() / 2 + 1);
    loop {
        let next = (x + v / x) / 2;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// Smallest integer whose square is at least `v`.
pub fn ceil_sqrt(v: u128) -> u128 {
    let r = isqrt(v);
    if r * r == v {
        r
    } else {
        r + 1
    }
}

/// The exact value (sqrt(radicand) + offset) / 2, kept symbolic so that
/// comparisons against integers are decided by squaring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurdBound {
    pub radicand: u128,
    pub offset: u128,
}

impl SurdBound {
    /// The covering-size threshold sqrt((2k+1)(n-1/4)) + k/2.
    pub fn covering_threshold(n: usize, k: usize) -> SurdBound {
        let n = n as u128;
        let k = k as u128;
        SurdBound {
            radicand: (2 * k + 1) * (4 * n - 1),
            offset: k,
        }
    }

    /// Does `c >= self` hold? Exact: 2c-offset must be nonnegative with
    /// square at least the radicand.
    pub fn holds_for(&self, c: usize) -> bool {
        let c = c as u128;
        if 2 * c < self.offset {
            return false;
        }
        let d = 2 * c - self.offset;
        d * d >= self.radicand
    }

    /// Does `c` equal the value exactly?
    pub fn attained_by(&self, c: usize) -> bool {
        let c = c as u128;
        if 2 * c < self.offset {
            return false;
        }
        let d = 2 * c - self.offset;
        d * d == self.radicand
    }

    /// Exact integer value, when there is one.
    pub fn exact_int(&self) -> Option<u128> {
        let r = isqrt(self.radicand);
        if r * r == self.radicand && (r + self.offset) % 2 == 0 {
            Some((r + self.offset) / 2)
        } else {
            None
        }
    }

    /// Decimal approximation for report columns.
    pub fn approx(&self) -> f64 {
        ((self.radicand as f64).sqrt() + self.offset as f64) / 2.0
    }
}

/// Guaranteed k-modal subsequence length in any generic sequence of length n:
/// the smallest m >= 1 with (2m+k)^2 >= (2k+1)(4n-1).
///
/// For n = 1 and k >= 7 the raw surd ceiling dips below 1; a one-term
/// subsequence always exists, so the result is clamped to at least 1.
pub fn lb_rho(n: usize, k: usize) -> Result<usize, Error> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "lb_rho requires n >= 1".to_string(),
        ));
    }
    let nn = n as u128;
    let kk = k as u128;
    let c = (2 * kk + 1) * (4 * nn - 1);
    // Smallest q = 2m+k with q >= k mod 2 ... take q = max(ceil_sqrt(c), k)
    // then round up to the correct parity.
    let mut q = ceil_sqrt(c).max(kk);
    if (q - kk) % 2 != 0 {
        q += 1;
    }
    let m = (q - kk) / 2;
    Ok((m as usize).max(1))
}

/// Best-known upper complement: lb_rho + 1 for k >= 1 (exactly lb_rho when
/// k = 0, where the classical bound is already tight). Valid as an upper
/// bound on the guaranteed length only for n >= 10k^3; use
/// [`ub_rho_applicable`] to test that.
pub fn ub_rho(n: usize, k: usize) -> Result<usize, Error> {
    let lb = lb_rho(n, k)?;
    Ok(if k == 0 { lb } else { lb + 1 })
}

/// Whether (n, k) is in the range where `ub_rho` is actually proven.
pub fn ub_rho_applicable(n: usize, k: usize) -> bool {
    k >= 1 && n >= 10 * k * k * k
}

/// The classical reference values around rho(n; k).
#[derive(Debug, Clone, Serialize)]
pub struct BoundsRecord {
    pub n: usize,
    pub k: usize,
    /// Guaranteed k-modal subsequence length.
    pub lb_rho: usize,
    /// lb_rho + 1 for k >= 1; equals lb_rho for k = 0.
    pub ub_rho: usize,
    /// Whether ub_rho is proven at this (n, k), i.e. n >= 10k^3 and k >= 1.
    pub ub_applicable: bool,
    /// ceil(sqrt((2k+1) n)): the classical upper comparator.
    pub chung_upper: usize,
    /// floor(sqrt(2 k n)): the earlier lower comparator.
    pub gong_lower: usize,
    /// Exact threshold sqrt((2k+1)(n-1/4)) + k/2 every pair of fine covering
    /// sizes must reach.
    pub m_lower: SurdBound,
}

/// Evaluates every reference bound at (n, k).
pub fn reference_bounds(n: usize, k: usize) -> Result<BoundsRecord, Error> {
    let lb = lb_rho(n, k)?;
    let nn = n as u128;
    let kk = k as u128;
    Ok(BoundsRecord {
        n,
        k,
        lb_rho: lb,
        ub_rho: ub_rho(n, k)?,
        ub_applicable: ub_rho_applicable(n, k),
        chung_upper: ceil_sqrt((2 * kk + 1) * nn) as usize,
        gong_lower: isqrt(2 * kk * nn) as usize,
        m_lower: SurdBound::covering_threshold(n, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: smallest m >= 1 with m + k/2 >= sqrt((2k+1)(n-1/4)),
    /// found by a forward scan using only integer squaring.
    fn lb_rho_naive(n: u128, k: u128) -> usize {
        let c = (2 * k + 1) * (4 * n - 1);
        let mut m = 1u128;
        while (2 * m + k) * (2 * m + k) < c {
            m += 1;
        }
        m as usize
    }

    #[test]
    fn isqrt_exact_on_squares_and_neighbours() {
        for v in 0u128..2_000 {
            let r = isqrt(v);
            assert!(r * r <= v && (r + 1) * (r + 1) > v, "isqrt({v}) = {r}");
        }
        let big = u64::MAX as u128;
        let r = isqrt(big * big);
        assert_eq!(r, big);
    }

    #[test]
    fn lb_rho_matches_naive_scan() {
        for n in 1..=2_000usize {
            for k in 0..=10usize {
                assert_eq!(
                    lb_rho(n, k).unwrap(),
                    lb_rho_naive(n as u128, k as u128),
                    "disagreement at n={n}, k={k}"
                );
            }
        }
    }

    #[test]
    fn monotone_case_is_ceil_sqrt_n() {
        for n in 1..=10_000usize {
            assert_eq!(lb_rho(n, 0).unwrap(), ceil_sqrt(n as u128) as usize);
        }
    }

    #[test]
    fn unimodal_case_matches_classical_formula() {
        // ceil(sqrt(3n - 3/4) - 1/2) = smallest c >= 1 with (2c+1)^2 >= 12n-3.
        for n in 1..=10_000usize {
            let target = 12 * n as u128 - 3;
            let mut c = 1u128;
            while (2 * c + 1) * (2 * c + 1) < target {
                c += 1;
            }
            assert_eq!(lb_rho(n, 1).unwrap() as u128, c, "n={n}");
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(lb_rho(9, 0).unwrap(), 3);
        assert_eq!(lb_rho(10, 1).unwrap(), 5);
        assert_eq!(lb_rho(22, 1).unwrap(), 8);
        assert_eq!(lb_rho(80, 2).unwrap(), 19);
        for k in 0..=12 {
            assert_eq!(lb_rho(1, k).unwrap(), 1, "k={k}");
        }
        assert_eq!(ub_rho(10, 1).unwrap(), 6);
        assert_eq!(ub_rho(80, 2).unwrap(), 20);
        assert_eq!(ub_rho(270, 3).unwrap(), lb_rho(270, 3).unwrap() + 1);
        assert!(lb_rho(0, 1).is_err());
    }

    #[test]
    fn monotone_in_n_and_k() {
        for k in 0..=10usize {
            let mut prev = 0;
            for n in 1..=2_000usize {
                let v = lb_rho(n, k).unwrap();
                assert!(v >= prev, "not monotone in n at n={n}, k={k}");
                assert!(v <= n, "exceeds n at n={n}, k={k}");
                prev = v;
            }
        }
        for n in 1..=2_000usize {
            let mut prev = 0;
            for k in 0..=10usize {
                let v = lb_rho(n, k).unwrap();
                assert!(v >= prev, "not monotone in k at n={n}, k={k}");
                prev = v;
            }
        }
    }

    #[test]
    fn surd_threshold_perfect_square_case() {
        // n = 1, k = 1: sqrt(9/4) + 1/2 = 2 exactly.
        let b = SurdBound::covering_threshold(1, 1);
        assert_eq!(b.exact_int(), Some(2));
        assert!(b.holds_for(2));
        assert!(b.attained_by(2));
        assert!(!b.holds_for(1));
    }

    #[test]
    fn reference_record_spot_checks() {
        let r = reference_bounds(9, 0).unwrap();
        assert_eq!(r.chung_upper, 3);
        assert_eq!(r.lb_rho, 3);
        assert_eq!(r.gong_lower, 0);
        let r = reference_bounds(22, 1).unwrap();
        assert_eq!(r.lb_rho, 8);
        assert_eq!(r.ub_rho, 9);
        assert!(r.ub_applicable);
        assert_eq!(r.chung_upper, ceil_sqrt(66) as usize);
        assert_eq!(r.gong_lower, isqrt(44) as usize);
        let r = reference_bounds(5, 1).unwrap();
        assert!(!r.ub_applicable);
    }

    #[test]
    fn lb_le_ub_structure() {
        for n in 1..=300 {
            for k in 0..=6 {
                let r = reference_bounds(n, k).unwrap();
                if k == 0 {
                    assert_eq!(r.ub_rho, r.lb_rho);
                } else {
                    assert_eq!(r.ub_rho, r.lb_rho + 1);
                }
                assert!(r.lb_rho <= n);
            }
        }
    }
}
