//! Closed-form bound functions and thresholds, in exact arithmetic.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binom(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Half-capped binomial `C(m, min{cap, ⌊m/2⌋})`.
pub fn capped_binom(m: usize, cap: usize) -> BigUint {
    binom(m, cap.min(m / 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub a: usize,
}

fn check_f(n: usize, k: usize, r: usize, a: usize) -> Result<()> {
    if r == 0 {
        return Err(domain("r must be positive"));
    }
    if a > k || a + n < k {
        return Err(domain(format!("a = {a} outside [max(0, k-n), k] for n = {n}, k = {k}")));
    }
    Ok(())
}

/// `f(n,k,r,a) = C(k-a, min{r,⌊(k-a)/2⌋}) + (n-k+a)·C(a, min{r-1,⌊a/2⌋})`.
pub fn f(n: usize, k: usize, r: usize, a: usize) -> Result<BigUint> {
    check_f(n, k, r, a)?;
    Ok(capped_binom(k - a, r) + BigUint::from(n + a - k) * capped_binom(a, r - 1))
}

/// `f*(n,k,r,a) = C(k-a, r) + (n-k+a)·C(a, r-1)`.
pub fn fstar(n: usize, k: usize, r: usize, a: usize) -> Result<BigUint> {
    check_f(n, k, r, a)?;
    Ok(binom(k - a, r) + BigUint::from(n + a - k) * binom(a, r - 1))
}

/// Whether `f` and `f*` coincide by the uniformity condition.
pub fn f_equals_fstar_condition(k: usize, r: usize, a: usize) -> bool {
    a <= k && r <= (k - a) / 2 && r - 1 <= a / 2
}

/// `h(n,l,r,d) = C(n-d+l, min{r,⌊(n-d+l)/2⌋}) + (d-l)·C(d, min{r-1,⌊d/2⌋})`.
pub fn hsp(n: usize, l: usize, r: usize, d: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(domain("r must be positive"));
    }
    if d < l || d > n + l {
        return Err(domain(format!("d = {d} outside [l, n+l] for n = {n}, l = {l}")));
    }
    Ok(capped_binom(n + l - d, r) + BigUint::from(d - l) * capped_binom(d, r - 1))
}

fn check_main(n: usize, k: usize, r: usize) -> Result<()> {
    if !(n >= k && k >= r && r >= 3) {
        return Err(domain(format!("need n >= k >= r >= 3, got n = {n}, k = {k}, r = {r}")));
    }
    Ok(())
}

/// Edge bound for 2-connected Sperner hypergraphs with no Berge cycle of length `k` or longer.
pub fn main_cycle_bound(n: usize, k: usize, r: usize) -> Result<BigUint> {
    check_main(n, k, r)?;
    Ok(f(n, k, r, (k - 1) / 2)?.max(f(n, k, r, 2)?))
}

/// Edge bound for connected Sperner hypergraphs with no Berge path of length `k`.
pub fn main_path_bound(n: usize, k: usize, r: usize) -> Result<BigUint> {
    check_main(n, k, r)?;
    Ok(f(n, k, r, (k - 1) / 2)?.max(f(n, k, r, 1)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Threshold {
    At(usize),
    Never,
}

fn threshold(k: usize, r: usize, low: usize) -> Result<Threshold> {
    if !(k >= r && r >= 3) {
        return Err(domain(format!("need k >= r >= 3, got k = {k}, r = {r}")));
    }
    let t = (k - 1) / 2;
    // both sides are affine in n: scan from n = k unless the slopes rule out a crossing
    let lhs0 = f(k, k, r, t)?;
    let rhs0 = f(k, k, r, low)?;
    let ls = capped_binom(t, r - 1);
    let rs = capped_binom(low, r - 1);
    if lhs0 >= rhs0 {
        return Ok(Threshold::At(k));
    }
    if ls <= rs {
        return Ok(Threshold::Never);
    }
    let mut n = k;
    loop {
        if f(n, k, r, t)? >= f(n, k, r, low)? {
            return Ok(Threshold::At(n));
        }
        n += 1;
    }
}

/// Smallest `n` with `f(n,k,r,⌊(k-1)/2⌋) >= f(n,k,r,2)`.
pub fn n_threshold(k: usize, r: usize) -> Result<Threshold> {
    threshold(k, r, 2)
}

/// Smallest `n` with `f(n,k,r,⌊(k-1)/2⌋) >= f(n,k,r,1)`.
pub fn n_threshold_path(k: usize, r: usize) -> Result<Threshold> {
    threshold(k, r, 1)
}

/// Outcome of the discrete convexity checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Interior points `a` where `f(a-1) + f(a+1) < 2 f(a)`.
    pub violations: Vec<usize>,
    pub central_binomial_convex: bool,
    pub fixed_binomial_convex: bool,
}

impl ConvexityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty() && self.central_binomial_convex && self.fixed_binomial_convex
    }
}

fn convex_seq(xs: &[BigUint]) -> bool {
    xs.windows(3).all(|w| &w[0] + &w[2] >= &w[1] + &w[1])
}

const SEQ_LEN: usize = 64;

pub fn convexity_check(n: usize, k: usize, r: usize) -> Result<ConvexityReport> {
    if n == 0 || k == 0 || r == 0 {
        return Err(domain("n, k, r must be positive"));
    }
    let lo = k.saturating_sub(n);
    let vals: Vec<BigUint> = (lo..=k).map(|a| f(n, k, r, a)).collect::<Result<_>>()?;
    let violations = vals
        .windows(3)
        .enumerate()
        .filter(|(_, w)| &w[0] + &w[2] < &w[1] + &w[1])
        .map(|(i, _)| lo + i + 1)
        .collect();
    let central: Vec<BigUint> = (0..=SEQ_LEN).map(|i| binom(i, i / 2)).collect();
    let fixed: Vec<BigUint> = (0..=SEQ_LEN).map(|i| binom(i, r)).collect();
    Ok(ConvexityReport {
        n,
        k,
        r,
        violations,
        central_binomial_convex: convex_seq(&central),
        fixed_binomial_convex: convex_seq(&fixed),
    })
}

/// Maximum of `f(n,k,r,·)` over `lo..=hi`, by full scan.
pub fn f_max_scan(n: usize, k: usize, r: usize, lo: usize, hi: usize) -> Result<BigUint> {
    let mut best = f(n, k, r, lo)?;
    for a in lo + 1..=hi {
        best = best.max(f(n, k, r, a)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), u(10));
        assert_eq!(binom(3, 5), u(0));
        assert_eq!(binom(0, 0), u(1));
        assert_eq!(binom(64, 32), "1832624140942590534".parse::<BigUint>().unwrap());
    }

    #[test]
    fn f_and_fstar_values() {
        assert_eq!(f(4, 4, 3, 2).unwrap(), u(6));
        assert_eq!(f(4, 4, 3, 1).unwrap(), u(4));
        assert_eq!(f(20, 10, 3, 4).unwrap(), u(104));
        assert_eq!(fstar(20, 10, 3, 4).unwrap(), u(104));
        assert_eq!(f(8, 6, 3, 2).unwrap(), u(14));
        assert_eq!(fstar(8, 6, 3, 2).unwrap(), u(8));
        assert!(f(4, 4, 3, 5).is_err());
        assert!(f(4, 8, 3, 3).is_err());
    }

    #[test]
    fn hsp_values() {
        assert_eq!(hsp(6, 1, 3, 2).unwrap(), u(12));
        assert_eq!(hsp(5, 1, 2, 2).unwrap(), u(8));
    }

    #[test]
    fn main_bounds() {
        assert_eq!(main_cycle_bound(20, 10, 3).unwrap(), u(104));
        assert_eq!(main_cycle_bound(4, 4, 3).unwrap(), u(6));
        assert!(main_cycle_bound(4, 5, 3).is_err());
        assert!(main_path_bound(5, 4, 2).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(n_threshold(12, 3).unwrap(), Threshold::At(17));
    }

    #[test]
    fn convexity_examples() {
        assert!(convexity_check(20, 10, 3).unwrap().holds());
        assert!(convexity_check(8, 6, 3).unwrap().holds());
    }
}
