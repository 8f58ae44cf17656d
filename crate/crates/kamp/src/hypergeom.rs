//! Exact hypergeometric expectations in big-rational arithmetic, plus a
//! brute-force expectation engine used as the oracle in tests and the
//! `hyper-check` sweep.
//!
//! Binomial conventions used everywhere: C(0,0) = 1 and C(n,k) = 0 whenever
//! n < 0, k < 0 or k > n. Degenerate populations then fall out of the closed
//! forms without special-casing.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient under the degenerate conventions above.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

/// Population of n0 marked and n1 unmarked items, m draws without
/// replacement; X counts marked draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperParams {
    pub n0: u64,
    pub n1: u64,
    pub m: u64,
}

impl HyperParams {
    pub fn new(n0: u64, n1: u64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("hypergeometric draws m must be positive".into()));
        }
        if m > n0 + n1 {
            return Err(Error::InvalidInput(format!(
                "draws m={m} exceed population n0+n1={}",
                n0 + n1
            )));
        }
        Ok(HyperParams { n0, n1, m })
    }

    /// Support of X: [max(0, m-n1), min(n0, m)].
    pub fn support(&self) -> std::ops::RangeInclusive<i64> {
        let lo = (self.m as i64 - self.n1 as i64).max(0);
        let hi = (self.n0 as i64).min(self.m as i64);
        lo..=hi
    }
}

/// Exact pmf as a rational; zero outside the support.
pub fn hyper_pmf_exact(params: &HyperParams, k: i64) -> BigRational {
    let n0 = params.n0 as i64;
    let n1 = params.n1 as i64;
    let m = params.m as i64;
    let num = binomial(n0, k) * binomial(n1, m - k);
    if num.is_zero() {
        return BigRational::zero();
    }
    ratio(num, binomial(n0 + n1, m))
}

/// pmf converted to float at the boundary.
pub fn hyper_pmf(params: &HyperParams, k: i64) -> f64 {
    hyper_pmf_exact(params, k).to_f64().unwrap_or(0.0)
}

/// Closed form for E[X/(1+m-X)]:
/// (n0/(1+n1)) * (1 - C(n0-1, m)/C(n0+n1, m)).
pub fn expected_ratio_exact(params: &HyperParams) -> BigRational {
    let n0 = params.n0 as i64;
    let n1 = params.n1 as i64;
    let m = params.m as i64;
    let lead = ratio(BigInt::from(n0), BigInt::from(1 + n1));
    let frac = ratio(binomial(n0 - 1, m), binomial(n0 + n1, m));
    lead * (BigRational::one() - frac)
}

pub fn expected_ratio(params: &HyperParams) -> f64 {
    expected_ratio_exact(params).to_f64().unwrap_or(f64::NAN)
}

/// Closed form for E[X/(1+m-X) * (r+X-m)/(1+m0-X)] with X ~ Hyper(m0, r; m):
/// 1 - C(m0, m0^m) C(r, m - m0^m) / C(m0+r, m), where ^ is min.
pub fn expected_product_ratio_exact(m0: u64, r: u64, m: u64) -> Result<BigRational> {
    HyperParams::new(m0, r, m)?;
    let m0 = m0 as i64;
    let r = r as i64;
    let m = m as i64;
    let cap = m0.min(m);
    let frac = ratio(
        binomial(m0, cap) * binomial(r, m - cap),
        binomial(m0 + r, m),
    );
    Ok(BigRational::one() - frac)
}

pub fn expected_product_ratio(m0: u64, r: u64, m: u64) -> Result<f64> {
    Ok(expected_product_ratio_exact(m0, r, m)?.to_f64().unwrap_or(f64::NAN))
}

/// Exact expectation of g(X) over the support.
pub fn brute_force_expectation<G>(params: &HyperParams, g: G) -> BigRational
where
    G: Fn(i64) -> BigRational,
{
    let mut acc = BigRational::zero();
    for k in params.support() {
        let p = hyper_pmf_exact(params, k);
        if !p.is_zero() {
            acc += p * g(k);
        }
    }
    acc
}

/// Exhaustive verification sweep over all configurations with population at
/// most `max_pop`. Returns the number of checked configurations. Backs both
/// the acceptance suite and the `hyper-check` CLI command.
pub fn verify_sweep(max_pop: u64) -> Result<(usize, usize)> {
    let mut checked_ratio = 0usize;
    let mut checked_product = 0usize;
    for n0 in 0..=max_pop {
        for n1 in 0..=(max_pop - n0) {
            for m in 1..=(n0 + n1) {
                let params = HyperParams::new(n0, n1, m)?;
                let closed = expected_ratio_exact(&params);
                let brute = brute_force_expectation(&params, |k| {
                    ratio(BigInt::from(k), BigInt::from(1 + m as i64 - k))
                });
                if closed != brute {
                    return Err(Error::NoRoot(format!(
                        "expected_ratio mismatch at (n0={n0}, n1={n1}, m={m}): {closed} vs {brute}"
                    )));
                }
                let bound = ratio(BigInt::from(n0 as i64), BigInt::from(1 + n1 as i64));
                if closed > bound {
                    return Err(Error::NoRoot(format!(
                        "expected_ratio bound violated at (n0={n0}, n1={n1}, m={m})"
                    )));
                }
                checked_ratio += 1;

                // same loop doubles as the (m0, r, m) sweep for the product form
                let (m0, r) = (n0, n1);
                let closed = expected_product_ratio_exact(m0, r, m)?;
                let brute = brute_force_expectation(&params, |k| {
                    let num1 = BigInt::from(k);
                    let den1 = BigInt::from(1 + m as i64 - k);
                    let num2 = BigInt::from(r as i64 + k - m as i64);
                    let den2 = BigInt::from(1 + m0 as i64 - k);
                    ratio(num1 * num2, den1 * den2)
                });
                if closed != brute {
                    return Err(Error::NoRoot(format!(
                        "product identity mismatch at (m0={m0}, r={r}, m={m}): {closed} vs {brute}"
                    )));
                }
                if closed > BigRational::one() {
                    return Err(Error::NoRoot(format!(
                        "product identity exceeds 1 at (m0={m0}, r={r}, m={m})"
                    )));
                }
                checked_product += 1;
            }
        }
    }
    Ok((checked_ratio, checked_product))
}
