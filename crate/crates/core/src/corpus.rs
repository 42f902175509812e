//! Seeded random instances for property tests, acceptance runs and the CLI.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polyhedra::closure_generators;
use crate::MultiIndex;

/// Shape limits for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceShape {
    pub max_dim: usize,
    pub max_ideals: usize,
    pub max_gens: usize,
    pub max_exponent: u32,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape {
            max_dim: 3,
            max_ideals: 2,
            max_gens: 4,
            max_exponent: 6,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonzero proper monomial ideal of `k[x_1..x_dim]`.
pub fn random_ideal<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_gens: usize,
    max_exponent: u32,
) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens.max(1));
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let v: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=max_exponent)).collect();
        if v.iter().any(|&c| c > 0) {
            gens.push(ExponentVector::new(v));
        }
    }
    crate::monomial::minimalize(gens, dim).expect("non-empty generator list")
}

/// A random list of ideals sharing one ambient dimension.
pub fn random_instance<R: Rng>(rng: &mut R, shape: InstanceShape) -> Vec<MonomialIdeal> {
    let dim = rng.gen_range(1..=shape.max_dim);
    let r = rng.gen_range(1..=shape.max_ideals);
    (0..r)
        .map(|_| random_ideal(rng, dim, shape.max_gens, shape.max_exponent))
        .collect()
}

/// `count` instances drawn from one seeded stream.
pub fn corpus(seed: u64, count: usize, shape: InstanceShape) -> Vec<Vec<MonomialIdeal>> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| random_instance(&mut rng, shape))
        .collect()
}

/// A random integrally closed ideal: the closure of a random ideal.
pub fn random_closed_ideal<R: Rng>(
    rng: &mut R,
    dim: usize,
    max_gens: usize,
    max_exponent: u32,
) -> MonomialIdeal {
    let ideal = random_ideal(rng, dim, max_gens, max_exponent);
    closure_generators(std::slice::from_ref(&ideal), &MultiIndex::new(vec![1]))
        .expect("closure of a nonzero ideal")
}
