#![allow(dead_code)]

pub mod oracle;

use gderiv::catalog;
use gderiv::random::RandomAlgebras;
use gderiv::{GaussianRational, MapSpace, OmegaSuperAlgebra};

/// Catalog algebras plus a fixed batch of seeded random ones, all of dimension ≤ 4.
pub fn test_algebras() -> Vec<OmegaSuperAlgebra> {
    let mut out: Vec<_> = catalog::entries().into_iter().map(|e| e.algebra).collect();
    out.extend(RandomAlgebras::new(99, 4).take(24));
    out
}

/// Basis of a solved space as row-major `n²` vectors.
pub fn full_rows(space: &MapSpace) -> Vec<Vec<GaussianRational>> {
    space.elements().iter().map(|m| m.matrix().entries().to_vec()).collect()
}

pub fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::gaussian(re, im)
}
