//! Inputs shared by the benches: seeded random codes of a given size.

use parknot::moves::random::{random_gauss, random_surface};
use parknot::{GaussDiagram, SurfaceDiagram};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TORUS: &str = include_str!("../../../data/torus.surf");

pub fn surfaces(count: usize, crossings: usize, genus: u32, seed: u64) -> Vec<SurfaceDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_surface(&mut rng, crossings, genus)).collect()
}

pub fn gauss_codes(count: usize, crossings: usize, seed: u64) -> Vec<GaussDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_gauss(&mut rng, crossings)).collect()
}
