use std::f64::consts::PI;

use crate::error::{input, Result};

/// Two threat circles: the beetle's (radius `big_r`), the predator's
/// (radius `small_r`) and the distance between their centres.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CirclePair {
    pub big_r: f64,
    pub small_r: f64,
    pub distance: f64,
}

impl CirclePair {
    pub fn new(big_r: f64, small_r: f64, distance: f64) -> Result<Self> {
        for (name, v) in [("R", big_r), ("r", small_r), ("d", distance)] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(input(format!("circle pair {name} must be finite and non-negative, got {v}")));
            }
        }
        Ok(Self { big_r, small_r, distance })
    }
}

/// Area of the region shared by the two disks.
///
/// Disjoint disks give 0, a disk inside the other gives the smaller disk's
/// area, and partial overlap gives the lens area
/// `r² acos((d²+r²−R²)/2dr) + R² acos((d²+R²−r²)/2dR) − ½√((−d+r+R)(d+r−R)(d−r+R)(d+r+R))`.
pub fn circle_intersection_area(pair: CirclePair) -> Result<f64> {
    let CirclePair { big_r, small_r, distance: d } = CirclePair::new(pair.big_r, pair.small_r, pair.distance)?;
    Ok(lens_area(big_r, small_r, d))
}

pub(crate) fn lens_area(big_r: f64, small_r: f64, d: f64) -> f64 {
    let (big_r, small_r) = (big_r.max(small_r), big_r.min(small_r));
    if d >= big_r + small_r {
        return 0.0;
    }
    let inner = big_r.min(small_r);
    if d <= (big_r - small_r).abs() {
        return PI * inner * inner;
    }
    let (r2, br2, d2) = (small_r * small_r, big_r * big_r, d * d);
    let alpha = ((d2 + r2 - br2) / (2.0 * d * small_r)).clamp(-1.0, 1.0).acos();
    let beta = ((d2 + br2 - r2) / (2.0 * d * big_r)).clamp(-1.0, 1.0).acos();
    let kite = (-d + small_r + big_r) * (d + small_r - big_r) * (d - small_r + big_r) * (d + small_r + big_r);
    let area = r2 * alpha + br2 * beta - 0.5 * kite.max(0.0).sqrt();
    area.clamp(0.0, PI * inner * inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn area(big_r: f64, small_r: f64, d: f64) -> f64 {
        circle_intersection_area(CirclePair::new(big_r, small_r, d).unwrap()).unwrap()
    }

    #[test]
    fn disjoint_is_zero() {
        assert_eq!(area(1.0, 1.0, 3.0), 0.0);
        assert_eq!(area(1.0, 1.0, 2.0), 0.0);
    }

    #[test]
    fn containment_is_smaller_disk() {
        assert!((area(1.0, 0.5, 0.0) - PI * 0.25).abs() < 1e-15);
        assert!((area(0.5, 1.0, 0.2) - PI * 0.25).abs() < 1e-15);
        assert!((area(1.0, 1.0, 0.0) - PI).abs() < 1e-15);
    }

    #[test]
    fn unit_lens() {
        // 2π/3 − √3/2, confirmed against Monte-Carlo sampling in the acceptance suite
        assert!((area(1.0, 1.0, 1.0) - 1.228_369_698_608_756_7).abs() < 1e-12);
    }

    #[test]
    fn degenerate_radii() {
        assert_eq!(area(0.0, 0.0, 0.0), 0.0);
        assert_eq!(area(0.7, 0.0, 0.3), 0.0);
        assert_eq!(area(0.0, 0.7, 0.9), 0.0);
    }

    #[test]
    fn rejects_negative_or_nan() {
        assert!(CirclePair::new(-1.0, 1.0, 1.0).is_err());
        assert!(circle_intersection_area(CirclePair { big_r: 1.0, small_r: f64::NAN, distance: 0.5 }).is_err());
    }

    proptest! {
        #[test]
        fn symmetric_and_bounded(big_r in 0.0f64..1.0, small_r in 0.0f64..1.0, d in 0.0f64..2.0) {
            let a = area(big_r, small_r, d);
            let b = area(small_r, big_r, d);
            prop_assert!((a - b).abs() <= 1e-12);
            let cap = PI * big_r.min(small_r).powi(2);
            prop_assert!(a >= 0.0 && a <= cap + 1e-15);
        }

        #[test]
        fn non_increasing_in_distance(big_r in 0.01f64..1.0, small_r in 0.01f64..1.0, d in 0.0f64..2.0, step in 0.0f64..0.1) {
            prop_assert!(area(big_r, small_r, d + step) <= area(big_r, small_r, d) + 1e-12);
        }
    }
}
