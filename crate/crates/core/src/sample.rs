//! Seeded random triangles and points.

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::areal::ArealPoint;
use crate::scalar::int;
use crate::triangle::RefTriangle;

pub const MIN_SIDE: i64 = 2;
pub const MAX_SIDE: i64 = 200;

/// Independent generator for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> StdRng {
    StdRng::seed_from_u64(seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Integer sides in `[2, 200]`: scalene, non-degenerate, never right-angled,
/// and acute unless `include_obtuse`.
pub fn random_triangle<R: Rng>(rng: &mut R, include_obtuse: bool) -> RefTriangle {
    loop {
        let [a, b, c] = [(); 3].map(|_| rng.gen_range(MIN_SIDE..=MAX_SIDE));
        let Ok(t) = RefTriangle::from_ints(a, b, c) else { continue };
        if !t.scalene || t.is_right() || (!include_obtuse && !t.acute) {
            continue;
        }
        return t;
    }
}

/// A finite point with small integer homogeneous coordinates.
pub fn random_point<R: Rng>(rng: &mut R) -> ArealPoint {
    loop {
        let [x, y, z] = [(); 3].map(|_| rng.gen_range(-20i64..=20));
        if (x + y + z) == 0 {
            continue;
        }
        if let Ok(p) = ArealPoint::new(int(x), int(y), int(z)) {
            debug_assert!(!p.sum().is_zero());
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_index() {
        let t1 = random_triangle(&mut rng_for(42, 7), false);
        let t2 = random_triangle(&mut rng_for(42, 7), false);
        assert_eq!(t1, t2);
        assert!(t1.acute && t1.scalene);
    }

    #[test]
    fn obtuse_batch_contains_obtuse() {
        let mut rng = rng_for(1, 0);
        let any_obtuse = (0..200).any(|_| !random_triangle(&mut rng, true).acute);
        assert!(any_obtuse);
    }

    #[test]
    fn points_are_finite() {
        let mut rng = rng_for(3, 3);
        assert!((0..500).all(|_| !random_point(&mut rng).is_at_infinity()));
    }
}
