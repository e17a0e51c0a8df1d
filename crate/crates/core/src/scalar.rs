//! Scalar abstractions.
//!
//! Every count in this crate is an exact integer. The counting code is
//! written against [`Exact`] so the same routines run on `BigInt` (the
//! default, see the aliases at the crate root) or on machine integers such
//! as `i64`/`i128` when the values are known to fit. Fixed-width scalars
//! follow the usual Rust overflow semantics; callers choosing them are
//! responsible for staying in range.
//!
//! Asymptotic estimates are generic over [`Real`], i.e. `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, FloatConst, FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer ring used for counts and coefficients.
pub trait Exact:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + Display + Debug + Send + Sync + 'static
{
    /// Lossless conversion from a small unsigned value.
    fn from_small(v: u64) -> Self {
        Self::from_u64(v).expect("value does not fit the scalar type")
    }
}

impl Exact for BigInt {}
impl Exact for i64 {}
impl Exact for i128 {}

/// Floating point type used for asymptotic estimates.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Send + Sync + 'static {}

impl Real for f32 {}
impl Real for f64 {}

fn finite_f64<T: Exact>(v: &T) -> Option<f64> {
    v.to_f64().filter(|x| x.is_finite())
}

/// Ratio `num / den` of two exact values as an `f64`.
///
/// Operands too large for an `f64` are scaled down together first; at that
/// magnitude the truncation is far below double precision.
pub fn ratio_f64<T: Exact>(num: &T, den: &T) -> f64 {
    let mut a = num.clone();
    let mut b = den.clone();
    let shrink = T::from_small(1 << 32);
    loop {
        match (finite_f64(&a), finite_f64(&b)) {
            (Some(x), Some(y)) => return x / y,
            _ if b.is_zero() => return f64::NAN,
            _ => {
                a = a / shrink.clone();
                b = b / shrink.clone();
            }
        }
    }
}

/// Natural logarithm of a positive exact value.
pub fn ln_exact<T: Exact>(value: &T) -> f64 {
    let mut v = value.clone();
    let shrink = T::from_small(1 << 32);
    let mut shifts = 0u32;
    loop {
        if let Some(x) = finite_f64(&v) {
            return x.ln() + f64::from(shifts) * 32.0 * std::f64::consts::LN_2;
        }
        v = v / shrink.clone();
        shifts += 1;
    }
}
