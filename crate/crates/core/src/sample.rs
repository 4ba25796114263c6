//! Seeded random inputs for property checks.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::cochain::{Cochain, GaugeFunction};
use crate::complex::WeightedTriangulation;
use crate::field::MagneticPotential;
use crate::generators::{gen_random, RandomSpec};
use crate::ops::TotalCochain;

pub type SampleRng = SplitMix64;

pub fn rng(seed: u64) -> SampleRng {
    SplitMix64::seed_from_u64(seed)
}

/// A connected random complex with `n` vertices, typically with faces.
pub fn random_complex_small(seed: u64, n: usize) -> WeightedTriangulation {
    random_complex(seed, n, 0.35)
}

/// Random complex with the given edge density and face density 0.6.
pub fn random_complex(seed: u64, n: usize, edge_density: f64) -> WeightedTriangulation {
    gen_random(&RandomSpec {
        seed,
        n_vertices: n,
        edge_density,
        face_density: 0.6,
        ..Default::default()
    })
    .expect("valid random spec")
    .0
}

pub fn random_complex_value(rng: &mut SampleRng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_cochain<const K: usize>(t: &WeightedTriangulation, rng: &mut SampleRng) -> Cochain<K> {
    Cochain::from_fn(t, |_| random_complex_value(rng))
}

pub fn random_total(t: &WeightedTriangulation, rng: &mut SampleRng) -> TotalCochain {
    TotalCochain {
        f: random_cochain(t, rng),
        phi: random_cochain(t, rng),
        psi: random_cochain(t, rng),
    }
}

/// Gauge function with values in [-π, π).
pub fn random_gauge(t: &WeightedTriangulation, rng: &mut SampleRng) -> GaugeFunction {
    let v = (0..t.num_vertices()).map(|_| rng.random_range(-PI..PI)).collect();
    GaugeFunction::from_values(t, v).unwrap()
}

/// Potential with values in [-π, π) on canonical edges.
pub fn random_potential(t: &WeightedTriangulation, rng: &mut SampleRng) -> MagneticPotential {
    MagneticPotential::from_fn(t, |_, _| rng.random_range(-PI..PI))
}
