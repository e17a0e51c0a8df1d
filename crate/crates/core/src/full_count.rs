//! Components containing a fixed full component.
//!
//! Let `K` be a full component with `m` boundary vertices (so `m - 2`
//! interior vertices). Every `n`-vertex component containing `K` hangs a
//! rooted binary subtree of `r_i >= 1` vertices off each boundary vertex,
//! with `r_1 + ... + r_m = n - m + 2`. The count is therefore the
//! coefficient sum
//!
//! ```text
//! F(n, m) = sum_{r_1 + ... + r_m = n - m + 2, r_i >= 1} C_{r_1} ... C_{r_m}
//! ```
//!
//! which also equals the fixed linear combination
//! `a_1 C_{n+1} + a_2 C_n + ... + a_m C_{n-m+2}` for `n >= 2m - 2`. The
//! coefficient vectors satisfy `a^(1) = (1)` and
//! `a^(k+1) = A_{k+1} (a^(k), 0)`, and each is annihilated by `B_{[m-1 x m]}`.

use crate::catalan::{catalan_asymptotic, CatalanTable};
use crate::convolution::convolve_truncated;
use crate::error::{Error, Result};
use crate::scalar::{Exact, Real};
use crate::toeplitz::ToeplitzMatrix;

/// Signed coefficients `(a_1, ..., a_m)` of the closed form, stored
/// zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVectorF<T> {
    m: usize,
    coeffs: Vec<T>,
}

impl<T: Exact> CoefficientVectorF<T> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// `sum_j a_j C_{n+2-j}` (one-based `j`), without any domain check.
    pub fn evaluate(&self, n: usize, catalan: &CatalanTable<T>) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (j, a)| acc + a.clone() * catalan[n + 1 - j].clone())
    }
}

fn require_m(m: usize, min: usize) -> Result<()> {
    if m < min {
        Err(Error::TooSmall { what: "m", min, got: m })
    } else {
        Ok(())
    }
}

/// Smallest `n` for which the count is nonzero: `2m - 2`.
pub fn full_min_n(m: usize) -> usize {
    2 * m - 2
}

/// `F(n, m)` for every `n` in `0..=n_max`, by repeated convolution of the
/// series `(0, C_1, C_2, ...)`.
pub fn full_count_series<T: Exact>(m: usize, n_max: usize) -> Result<Vec<T>> {
    require_m(m, 2)?;
    let mut out = vec![T::zero(); n_max + 1];
    if n_max + 2 < m {
        return Ok(out);
    }
    let len = n_max + 3 - m;
    let catalan = CatalanTable::<T>::new(len)?;
    let mut part: Vec<T> = catalan.values()[..len].to_vec();
    part[0] = T::zero();
    let mut acc = part.clone();
    for _ in 1..m {
        acc = convolve_truncated(&acc, &part, len);
    }
    for (n, slot) in out.iter_mut().enumerate().skip(m - 2) {
        *slot = acc[n + 2 - m].clone();
    }
    Ok(out)
}

/// `F(n, m)` as a sum over compositions. Zero below `n = 2m - 2`.
pub fn full_count_convolution<T: Exact>(n: usize, m: usize) -> Result<T> {
    let mut series = full_count_series(m, n)?;
    Ok(series.swap_remove(n))
}

/// The `m x m` matrix with unit diagonal, `-2 C_0` on the subdiagonal and
/// `-C_{i-j-1}` further down.
pub fn matrix_a<T: Exact>(m: usize) -> Result<ToeplitzMatrix<T>> {
    require_m(m, 2)?;
    let catalan = CatalanTable::<T>::new(m)?;
    Ok(ToeplitzMatrix::from_offsets(m, m, |d| match d {
        d if d < 0 => T::zero(),
        0 => T::one(),
        1 => -(T::from_small(2) * catalan[0].clone()),
        d => -catalan[d as usize - 1].clone(),
    }))
}

/// The `(m-1) x m` matrix with one-based entries `-C_{m+i-j}`.
pub fn matrix_b<T: Exact>(m: usize) -> Result<ToeplitzMatrix<T>> {
    require_m(m, 2)?;
    let catalan = CatalanTable::<T>::new(2 * m)?;
    Ok(ToeplitzMatrix::from_offsets(m - 1, m, |d| {
        -catalan[(m as isize + d) as usize].clone()
    }))
}

/// Generating vector `a^(m)`.
pub fn gen_vector_full<T: Exact>(m: usize) -> Result<CoefficientVectorF<T>> {
    require_m(m, 1)?;
    let mut coeffs = vec![T::one()];
    for k in 2..=m {
        coeffs.push(T::zero());
        coeffs = matrix_a(k)?.mul_vec(&coeffs);
    }
    Ok(CoefficientVectorF { m, coeffs })
}

/// `F(n, m)` from the closed Catalan combination; requires `n >= 2m - 2`.
pub fn full_count_closed<T: Exact>(n: usize, m: usize) -> Result<T> {
    require_m(m, 2)?;
    if n < full_min_n(m) {
        return Err(Error::OutOfDomain {
            n,
            m,
            min: full_min_n(m),
        });
    }
    let catalan = CatalanTable::new(n + 1)?;
    Ok(gen_vector_full(m)?.evaluate(n, &catalan))
}

/// Whether `B_{[m-1 x m]} a^(m)` is the zero vector.
pub fn kernel_check(m: usize) -> Result<bool> {
    kernel_check_with::<num_bigint::BigInt>(m)
}

pub fn kernel_check_with<T: Exact>(m: usize) -> Result<bool> {
    require_m(m, 2)?;
    let a = gen_vector_full::<T>(m)?;
    Ok(matrix_b::<T>(m)?.mul_vec(a.coeffs()).iter().all(|x| x.is_zero()))
}

/// Leading-order size `C_{n-m+2} ~ 4^{n-m+2} / (sqrt(pi) (n-m+2)^{3/2})`.
pub fn full_asymptotic<F: Real>(n: usize, m: usize) -> Result<F> {
    require_m(m, 2)?;
    if n < full_min_n(m) {
        return Err(Error::OutOfDomain {
            n,
            m,
            min: full_min_n(m),
        });
    }
    catalan_asymptotic(n + 2 - m)
}
