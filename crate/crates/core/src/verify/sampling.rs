//! Seeded draws of exact-rational parameters, target coefficients and
//! admissible tuples. Denominators are kept small so every comparison the
//! suite makes stays exact.

use crate::operator::ClassParams;
use crate::scalar::{Exact, Scalar, C};
use crate::verify::CaratheodoryTuple;
use num_traits::Zero;
use rand::Rng;

pub fn rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Exact {
    Exact::from_ratio(rng.gen_range(lo..=hi), den)
}

/// A valid parameter bundle; may be degenerate.
pub fn draw_params(rng: &mut impl Rng) -> ClassParams<Exact> {
    let k = rng.gen_range(0..=2u32);
    let alpha = rational(rng, 1, 8, 8);
    let beta = rational(rng, 1, 8, 8);
    let lambda = rational(rng, 1, 8, 4);
    let delta = Exact::from_int(rng.gen_range(0..=2i64));
    let gamma = rational(rng, 0, 5, 2);
    ClassParams::new(k, alpha, beta, lambda, delta, gamma).expect("grid stays in range")
}

/// A parameter bundle with nonzero multipliers.
pub fn draw_nondegenerate_params(rng: &mut impl Rng) -> ClassParams<Exact> {
    loop {
        let p = draw_params(rng);
        if !p.is_degenerate() {
            return p;
        }
    }
}

/// Target coefficients `(B1, B2)` with `B1 > 0`.
pub fn draw_phi_coeffs(rng: &mut impl Rng) -> (Exact, Exact) {
    (rational(rng, 1, 12, 4), rational(rng, -12, 12, 4))
}

/// A complex rational with entries in steps of `1/4`, rejected until its
/// modulus is at most `bound`.
pub fn draw_disc_point(rng: &mut impl Rng, bound: i64) -> C<Exact> {
    let bound_sq = Exact::from_int(bound * bound);
    loop {
        let z = C::new(rational(rng, -4 * bound, 4 * bound, 4), rational(rng, -4 * bound, 4 * bound, 4));
        if z.norm_sqr() <= bound_sq {
            return z;
        }
    }
}

/// An admissible tuple: boxes of radius 2 and `h1 = -p1`.
pub fn draw_tuple(rng: &mut impl Rng) -> CaratheodoryTuple<Exact> {
    let p1 = draw_disc_point(rng, 2);
    let p2 = draw_disc_point(rng, 2);
    let h2 = draw_disc_point(rng, 2);
    CaratheodoryTuple::from_free(p1, p2, h2).expect("drawn inside the boxes")
}

/// A real rational in `[-3, 3]` in steps of `1/4`, as a complex value.
pub fn draw_real_coeff(rng: &mut impl Rng) -> C<Exact> {
    C::new(rational(rng, -12, 12, 4), Exact::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn draws_are_valid_and_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(5);
        let mut b = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let pa = draw_nondegenerate_params(&mut a);
            let pb = draw_nondegenerate_params(&mut b);
            assert_eq!(pa, pb);
            assert!(!pa.is_degenerate());
            let ta = draw_tuple(&mut a);
            let tb = draw_tuple(&mut b);
            assert_eq!(ta, tb);
        }
    }
}
