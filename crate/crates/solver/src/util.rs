//! Small numeric helpers.

/// Neumaier compensated summation. Deterministic and accurate to a few
/// ulps independent of the number of terms.
pub(crate) fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Ceiling of `v` with a one-part-in-10^12 snap toward the nearest integer,
/// so counts like `T/τ` that are integers up to rounding do not gain a
/// spurious extra step.
pub(crate) fn ceil_snapped(v: f64) -> usize {
    let adjusted = v - v.abs() * 1e-12;
    adjusted.ceil().max(0.0) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_sum_beats_naive() {
        let n = 100_000;
        let vals: Vec<f64> = (0..n).map(|i| 1.0 / (i as f64 + 1.0)).collect();
        let comp = neumaier_sum(vals.iter().copied());
        let mut hi = 0.0f64;
        for &v in vals.iter().rev() {
            hi += v; // ascending order: close to exact
        }
        assert!((comp - hi).abs() < 1e-12);
    }

    #[test]
    fn snapped_ceil() {
        assert_eq!(ceil_snapped(166.5106), 167);
        assert_eq!(ceil_snapped(4000.0000000001), 4000);
        assert_eq!(ceil_snapped(3999.9999999995), 4000);
        assert_eq!(ceil_snapped(0.3), 1);
        assert_eq!(ceil_snapped(0.0), 0);
    }
}
