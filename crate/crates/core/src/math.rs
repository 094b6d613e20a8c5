//! Scalar float routines that work with and without `std`.
//!
//! With the `std` feature the intrinsic-backed methods are used; without it
//! everything goes through `libm`. Only the functions the crate actually
//! calls are wrapped here.

macro_rules! wrap1 {
    ($($name:ident),* $(,)?) => {$(
        #[cfg(feature = "std")]
        #[inline]
        pub(crate) fn $name(x: f64) -> f64 {
            f64::$name(x)
        }
        #[cfg(not(feature = "std"))]
        #[inline]
        pub(crate) fn $name(x: f64) -> f64 {
            libm::$name(x)
        }
    )*};
}

wrap1!(sin, cos, sqrt, asin, acos, log2);

#[cfg(feature = "std")]
#[inline]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    f64::atan2(y, x)
}

#[cfg(not(feature = "std"))]
#[inline]
pub(crate) fn atan2(y: f64, x: f64) -> f64 {
    libm::atan2(y, x)
}

#[inline]
pub(crate) fn clamp(x: f64, lo: f64, hi: f64) -> f64 {
    if x < lo {
        lo
    } else if x > hi {
        hi
    } else {
        x
    }
}

/// Pairwise (cascade) summation. Fixed association order, so results do not
/// depend on evaluation scheduling, and roundoff grows like O(log n).
pub(crate) fn pairwise_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive_on_small_inputs() {
        let xs = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(pairwise_sum(&xs), 15.0);
        assert_eq!(pairwise_sum(&[]), 0.0);
        assert_eq!(pairwise_sum(&[7.25]), 7.25);
    }

    #[test]
    fn pairwise_is_accurate_on_long_alternating_sums() {
        let xs: alloc::vec::Vec<f64> = (0..100_001)
            .map(|k| if k % 2 == 0 { 1e-3 } else { -1e-3 })
            .collect();
        assert!((pairwise_sum(&xs) - 1e-3).abs() < 1e-15);
    }
}
