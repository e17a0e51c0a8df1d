//! Components containing both endpoints of an `m`-vertex path.
//!
//! The path's endpoints each carry a rooted binary subtree of `r >= 1`
//! vertices; each of the `m - 2` inner path vertices has a single free
//! neighbor, under which a subtree of `r >= 0` vertices may hang:
//!
//! ```text
//! T(n, m) = sum_{r_1 + ... + r_m = n - m + 2; r_1, r_m >= 1; others >= 0} C_{r_1} ... C_{r_m}
//! ```
//!
//! Three evaluators are provided: the convolution above, the recurrence
//! `T(n, m) = T(n, m-1) - T(n-1, m-2)` seeded with `T(n, 1) = C_{n+1} - C_n`
//! and `T(n, 2) = C_{n+1} - 2 C_n`, and the closed form
//! `sum_l (-1)^{l-1} a_l C_{n+2-l}` over a generating vector of length
//! `floor((m-1)/2) + 2`.

use crate::catalan::{catalan_asymptotic, CatalanTable};
use crate::convolution::convolve_truncated;
use crate::error::{Error, Result};
use crate::scalar::{Exact, Real};
use crate::toeplitz::ToeplitzMatrix;

/// Signed generating vector for `T(n, m)`, stored zero-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVectorT<T> {
    m: usize,
    coeffs: Vec<T>,
}

impl<T: Exact> CoefficientVectorT<T> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Unsigned magnitudes `a_l`.
    pub fn magnitudes(&self) -> Vec<T> {
        self.coeffs.iter().map(|c| c.abs()).collect()
    }

    /// True when signs alternate `+ - + ...` and no entry is zero.
    pub fn alternates(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(l, c)| {
            if l % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    }

    pub fn evaluate(&self, n: usize, catalan: &CatalanTable<T>) -> T {
        self.coeffs
            .iter()
            .enumerate()
            .fold(T::zero(), |acc, (l, a)| acc + a.clone() * catalan[n + 1 - l].clone())
    }
}

fn require_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::TooSmall { what: "m", min: 2, got: m })
    } else {
        Ok(())
    }
}

fn require_domain(n: usize, m: usize) -> Result<()> {
    require_m(m)?;
    if n < m {
        Err(Error::OutOfDomain { n, m, min: m })
    } else {
        Ok(())
    }
}

/// Length of the generating vector: `floor((m-1)/2) + 2`.
pub fn floor_m(m: usize) -> usize {
    assert!(m >= 1, "floor_m needs m >= 1");
    (m - 1) / 2 + 2
}

/// `T(n, m)` for every `n` in `0..=n_max`.
pub fn path_count_series<T: Exact>(m: usize, n_max: usize) -> Result<Vec<T>> {
    require_m(m)?;
    let mut out = vec![T::zero(); n_max + 1];
    if n_max + 2 < m {
        return Ok(out);
    }
    let len = n_max + 3 - m;
    let catalan = CatalanTable::<T>::new(len)?;
    let middle: Vec<T> = catalan.values()[..len].to_vec();
    let mut end = middle.clone();
    end[0] = T::zero();
    let mut acc = end.clone();
    for _ in 2..m {
        acc = convolve_truncated(&acc, &middle, len);
    }
    acc = convolve_truncated(&acc, &end, len);
    for (n, slot) in out.iter_mut().enumerate().skip(m - 2) {
        *slot = acc[n + 2 - m].clone();
    }
    Ok(out)
}

/// `T(n, m)` as a sum over compositions; zero below `n = m`.
pub fn path_count_convolution<T: Exact>(n: usize, m: usize) -> Result<T> {
    let mut series = path_count_series(m, n)?;
    Ok(series.swap_remove(n))
}

/// The formal `T(n, 1) = C_{n+1} - C_n`. Only used to seed the recurrence.
pub fn path_base_one<T: Exact>(n: usize, catalan: &CatalanTable<T>) -> T {
    catalan[n + 1].clone() - catalan[n].clone()
}

/// `T(n, m)` from the two-term recurrence, tabulated bottom-up over
/// `(n', m')` with `m' <= m`.
pub fn path_count_recurrence<T: Exact>(n: usize, m: usize) -> Result<T> {
    require_domain(n, m)?;
    let catalan = CatalanTable::<T>::new(n + 1)?;
    // table[k][j] = T(j, k); only j >= k - 1 is ever read
    let mut table: Vec<Vec<T>> = Vec::with_capacity(m + 1);
    table.push(Vec::new());
    table.push((0..=n).map(|j| path_base_one(j, &catalan)).collect());
    table.push(
        (0..=n)
            .map(|j| catalan[j + 1].clone() - T::from_small(2) * catalan[j].clone())
            .collect(),
    );
    for k in 3..=m {
        let mut row = vec![T::zero(); n + 1];
        for j in k..=n {
            row[j] = table[k - 1][j].clone() - table[k - 2][j - 1].clone();
        }
        table.push(row);
    }
    Ok(table[m][n].clone())
}

/// The `size x size` unit lower triangular matrix with `-C_{i-j-1}` below
/// the diagonal.
pub fn matrix_t<T: Exact>(size: usize) -> Result<ToeplitzMatrix<T>> {
    if size == 0 {
        return Err(Error::TooSmall { what: "matrix size", min: 1, got: 0 });
    }
    let catalan = CatalanTable::<T>::new(size)?;
    Ok(ToeplitzMatrix::from_offsets(size, size, |d| match d {
        d if d < 0 => T::zero(),
        0 => T::one(),
        d => -catalan[d as usize - 1].clone(),
    }))
}

/// `(a, 0)` when the vector grows from `m` to `m + 1`, `a` otherwise.
fn shift_extend<T: Exact>(a: &[T], m: usize) -> Vec<T> {
    let mut out = a.to_vec();
    if floor_m(m + 1) > floor_m(m) {
        out.push(T::zero());
    }
    out
}

/// Generating vector via `a^{[m+1]} = T_{[m+1]} a^{[m]}_shift`, starting
/// from `a^{[2]} = (1, -2)`.
pub fn gen_vector_path<T: Exact>(m: usize) -> Result<CoefficientVectorT<T>> {
    require_m(m)?;
    let mut coeffs = vec![T::one(), -T::from_small(2)];
    for k in 2..m {
        let lifted = shift_extend(&coeffs, k);
        coeffs = matrix_t(floor_m(k + 1))?.mul_vec(&lifted);
    }
    Ok(CoefficientVectorT { m, coeffs })
}

/// Magnitudes of the generating vector via the additive recurrence
/// `a_l^{[k+1]} = a_l^{[k]} + a_{l-1}^{[k-1]}`, with the last entry split by
/// the parity of `k`.
pub fn gen_vector_path_additive<T: Exact>(m: usize) -> Result<Vec<T>> {
    require_m(m)?;
    // magnitudes for m = 1 and m = 2
    let mut older = vec![T::one(), T::one()];
    let mut newer = vec![T::one(), T::from_small(2)];
    for k in 2..m {
        let len = floor_m(k + 1);
        let mut next = Vec::with_capacity(len);
        next.push(newer[0].clone());
        for l in 1..newer.len() {
            next.push(newer[l].clone() + older[l - 1].clone());
        }
        if len > newer.len() {
            // k even: the new last entry only comes from two steps back
            next.push(older[older.len() - 1].clone());
        }
        debug_assert_eq!(next.len(), len);
        older = newer;
        newer = next;
    }
    Ok(newer)
}

/// `T(n, m)` from the closed form; requires `n >= m`.
pub fn path_count_closed<T: Exact>(n: usize, m: usize) -> Result<T> {
    require_domain(n, m)?;
    let catalan = CatalanTable::new(n + 1)?;
    Ok(gen_vector_path(m)?.evaluate(n, &catalan))
}

/// Leading-order size `C_{n - floor_m(m) + 2}`.
pub fn path_asymptotic<F: Real>(n: usize, m: usize) -> Result<F> {
    require_domain(n, m)?;
    catalan_asymptotic(n + 2 - floor_m(m))
}
