//! Float math shims that work identically with and without `std`.
//!
//! `f64::sqrt` and friends live in `std`, not `core`, so `no_std` builds
//! route through `libm`. Everything here is a thin wrapper; keeping the
//! call sites uniform also keeps the two build modes numerically aligned
//! (no `hypot`-vs-`sqrt` style divergence).

#[cfg(feature = "std")]
#[inline]
pub fn sqrt(x: f64) -> f64 {
    x.sqrt()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[cfg(feature = "std")]
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    y.atan2(x)
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
pub fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[cfg(feature = "std")]
#[inline]
pub fn acos(x: f64) -> f64 {
    x.acos()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
pub fn acos(x: f64) -> f64 {
    libm::acos(x)
}

#[cfg(feature = "std")]
#[inline]
pub fn sin_cos(x: f64) -> (f64, f64) {
    x.sin_cos()
}

#[cfg(all(not(feature = "std"), feature = "libm"))]
#[inline]
pub fn sin_cos(x: f64) -> (f64, f64) {
    (libm::sin(x), libm::cos(x))
}

/// Branch-free absolute value; avoids the `std`-only `f64::abs`.
#[inline]
pub fn fabs(x: f64) -> f64 {
    f64::from_bits(x.to_bits() & 0x7fff_ffff_ffff_ffff)
}

/// `a.max(b)` without `std` (inputs are never NaN in this crate).
#[inline]
pub fn fmax(a: f64, b: f64) -> f64 {
    if a > b {
        a
    } else {
        b
    }
}

/// `a.min(b)` without `std` (inputs are never NaN in this crate).
#[inline]
pub fn fmin(a: f64, b: f64) -> f64 {
    if a < b {
        a
    } else {
        b
    }
}

/// Square root clamped at zero, for radicands that are non-negative up to
/// rounding (half-chord heights, circumradius terms, and the like).
#[inline]
pub fn sqrt_nn(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        sqrt(x)
    }
}
