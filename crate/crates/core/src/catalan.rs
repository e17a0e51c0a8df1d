//! Exact Catalan numbers and their leading-order estimate.
//!
//! Terms are produced by the quotient recurrence
//! `C_{n+1} = C_n * 2(2n+1) / (n+2)`, which needs a constant number of
//! big-integer operations per term. The self-convolution
//! `C_n = sum_{i<n} C_i C_{n-1-i}` is kept for tests only.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::scalar::{Exact, Real};

/// Largest table size accepted by [`CatalanTable::new`].
pub const DEFAULT_TABLE_CAP: usize = 100_000;

/// Prefix `C_0 ..= C_N` of the Catalan numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalanTable<T> {
    values: Vec<T>,
}

impl<T: Exact> CatalanTable<T> {
    /// Table of `C_0 ..= C_max_n` with the default cap.
    pub fn new(max_n: usize) -> Result<Self> {
        Self::with_cap(max_n, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(max_n: usize, cap: usize) -> Result<Self> {
        if max_n > cap {
            return Err(Error::ResourceCap {
                what: "catalan table size",
                got: max_n,
                cap,
            });
        }
        let mut values = Vec::with_capacity(max_n + 1);
        values.push(T::one());
        for n in 0..max_n {
            let next = values[n].clone() * T::from_small(2 * (2 * n as u64 + 1));
            values.push(next / T::from_small(n as u64 + 2));
        }
        Ok(CatalanTable { values })
    }

    /// Grow the table in place so that it covers `C_max_n`.
    pub fn extend_to(&mut self, max_n: usize) {
        while self.values.len() <= max_n {
            let n = self.values.len() - 1;
            let next = self.values[n].clone() * T::from_small(2 * (2 * n as u64 + 1));
            self.values.push(next / T::from_small(n as u64 + 2));
        }
    }

    /// `C_n`, or `None` if `n` is past the end of the table.
    pub fn get(&self, n: usize) -> Option<&T> {
        self.values.get(n)
    }

    /// Largest index held by the table.
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }
}

impl<T> Index<usize> for CatalanTable<T> {
    type Output = T;

    fn index(&self, n: usize) -> &T {
        &self.values[n]
    }
}

/// `C_n = binomial(2n, n) / (n + 1)`.
pub fn catalan<T: Exact>(n: usize) -> T {
    let mut c = T::one();
    for k in 0..n {
        c = c * T::from_small(2 * (2 * k as u64 + 1)) / T::from_small(k as u64 + 2);
    }
    c
}

/// Leading-order estimate `4^n / (sqrt(pi) * n^{3/2})`.
///
/// The constant `1/sqrt(pi)` comes from Stirling's formula. The value is
/// assembled in log space and reported as [`Error::Overflow`] once it no
/// longer fits the float type (around `n = 519` for `f64`, `n = 66` for
/// `f32`).
pub fn catalan_asymptotic<F: Real>(n: usize) -> Result<F> {
    if n == 0 {
        return Err(Error::TooSmall {
            what: "n",
            min: 1,
            got: 0,
        });
    }
    let nf = F::from_usize(n).ok_or(Error::Overflow(n))?;
    let half = F::from_f64(0.5).unwrap();
    let three_halves = F::from_f64(1.5).unwrap();
    let ln = nf * F::LN_2() * F::from_u8(2).unwrap() - half * F::PI().ln() - three_halves * nf.ln();
    let value = ln.exp();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn binomial_oracle(n: u64, k: u64) -> BigInt {
        // Pascal's rule, additions only
        let mut row = vec![BigInt::from(0); k as usize + 1];
        row[0] = BigInt::from(1);
        for _ in 0..n {
            for j in (1..=k as usize).rev() {
                row[j] = &row[j] + &row[j - 1];
            }
        }
        row[k as usize].clone()
    }

    fn closed_form(n: u64) -> BigInt {
        binomial_oracle(2 * n, n) / BigInt::from(n + 1)
    }

    fn convolution_oracle(max_n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::from(1)];
        for n in 1..=max_n {
            let s = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
            c.push(s);
        }
        c
    }

    #[test]
    fn small_values() {
        assert_eq!(catalan::<BigInt>(0), BigInt::from(1));
        assert_eq!(catalan::<BigInt>(1), BigInt::from(1));
        assert_eq!(catalan::<BigInt>(7), BigInt::from(429));
        assert_eq!(closed_form(7), BigInt::from(429));
        assert_eq!(convolution_oracle(7)[7], BigInt::from(429));
        assert_eq!(catalan::<BigInt>(20), BigInt::from(6_564_120_420u64));
    }

    #[test]
    fn table_prefixes() {
        let t = CatalanTable::<BigInt>::new(0).unwrap();
        assert_eq!(t.values(), &[BigInt::from(1)]);
        let t = CatalanTable::<BigInt>::new(4).unwrap();
        let want: Vec<BigInt> = (0..=4).map(closed_form).collect();
        assert_eq!(t.values(), want.as_slice());
        assert_eq!(t.values(), [1, 1, 2, 5, 14].map(BigInt::from).as_slice());
        let t = CatalanTable::<BigInt>::new(8).unwrap();
        assert_eq!(t[8], closed_form(8));
        assert_eq!(t[8], BigInt::from(1430));
    }

    #[test]
    fn table_cap() {
        assert!(matches!(
            CatalanTable::<BigInt>::with_cap(11, 10),
            Err(Error::ResourceCap { .. })
        ));
        assert!(CatalanTable::<BigInt>::with_cap(10, 10).is_ok());
        assert!(CatalanTable::<BigInt>::new(DEFAULT_TABLE_CAP + 1).is_err());
    }

    #[test]
    fn table_matches_both_oracles() {
        let t = CatalanTable::<BigInt>::new(64).unwrap();
        let conv = convolution_oracle(64);
        for n in 0..=64 {
            assert_eq!(t[n], conv[n], "convolution at {n}");
            assert_eq!(t[n], closed_form(n as u64), "closed form at {n}");
        }
    }

    #[test]
    fn exact_divisibility() {
        let t = CatalanTable::<BigInt>::new(65).unwrap();
        for n in 0..=64usize {
            let lhs = BigInt::from(2 * (2 * n + 1)) * &t[n];
            let d = BigInt::from(n + 2);
            assert_eq!(&lhs % &d, BigInt::from(0));
            assert_eq!(lhs / d, t[n + 1]);
        }
    }

    #[test]
    fn extend_matches_fresh_table() {
        let mut t = CatalanTable::<BigInt>::new(3).unwrap();
        t.extend_to(30);
        assert_eq!(t, CatalanTable::new(30).unwrap());
        assert_eq!(t.max_n(), 30);
    }

    #[test]
    fn machine_scalars_agree() {
        let big = CatalanTable::<BigInt>::new(35).unwrap();
        let small = CatalanTable::<i64>::new(30).unwrap();
        let wide = CatalanTable::<i128>::new(35).unwrap();
        for n in 0..=35 {
            if n <= 30 {
                assert_eq!(big[n], BigInt::from(small[n]));
            }
            assert_eq!(big[n], BigInt::from(wide[n]));
        }
    }

    #[test]
    fn growth_ratio_near_four() {
        let t = CatalanTable::<BigInt>::new(1001).unwrap();
        // 3.98 * C_1000 < C_1001 < 4 * C_1000, exactly
        assert!(BigInt::from(398) * &t[1000] < BigInt::from(100) * &t[1001]);
        assert!(&t[1001] < &(BigInt::from(4) * &t[1000]));
    }

    #[test]
    fn asymptotic_values() {
        let e1: f64 = catalan_asymptotic(1).unwrap();
        assert!((e1 - 4.0 / std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((e1 - 2.2568).abs() < 1e-4);

        let r20 = catalan_asymptotic::<f64>(20).unwrap() / 6_564_120_420.0;
        assert!((0.9..=1.1).contains(&r20));

        let c100 = catalan::<BigInt>(100);
        let r100 = catalan_asymptotic::<f64>(100).unwrap() / crate::scalar::ratio_f64(&c100, &BigInt::from(1));
        assert!((0.99..=1.02).contains(&r100));
    }

    #[test]
    fn asymptotic_relative_error() {
        let t = CatalanTable::<BigInt>::new(400).unwrap();
        let mut prev = f64::INFINITY;
        for n in 10..=400 {
            let exact = t[n].to_string().parse::<f64>().unwrap();
            let rel = (catalan_asymptotic::<f64>(n).unwrap() - exact).abs() / exact;
            assert!(rel < prev, "not decreasing at {n}");
            if n >= 12 {
                assert!(rel < 0.10, "n = {n}: {rel}");
            }
            prev = rel;
        }
    }

    #[test]
    fn asymptotic_errors() {
        assert!(matches!(catalan_asymptotic::<f64>(0), Err(Error::TooSmall { .. })));
        assert!(catalan_asymptotic::<f64>(510).is_ok());
        assert_eq!(catalan_asymptotic::<f64>(600), Err(Error::Overflow(600)));
        assert!(catalan_asymptotic::<f32>(60).is_ok());
        assert_eq!(catalan_asymptotic::<f32>(100), Err(Error::Overflow(100)));
    }
}
