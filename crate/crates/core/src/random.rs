//! Seeded generation of small ω-Lie superalgebras by rejection sampling.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use crate::superalgebra::{OmegaSuperAlgebra, Parity};

/// Candidate source for [`RandomAlgebras`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Sparse structure constants and ω with entries in `{−2..2} + {−1..1}i`.
    Sparse,
    /// A catalog algebra rewritten in a random homogeneous basis.
    Transported,
}

/// Iterator over valid ω-Lie superalgebras of dimension `1..=max_dim`.
pub struct RandomAlgebras {
    rng: ChaCha8Rng,
    max_dim: usize,
    produced: usize,
    rejected: usize,
}

impl RandomAlgebras {
    pub fn new(seed: u64, max_dim: usize) -> Self {
        assert!(max_dim >= 1);
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_dim,
            produced: 0,
            rejected: 0,
        }
    }

    /// Candidates discarded so far for failing the ω-Jacobi identity.
    pub fn rejected(&self) -> usize {
        self.rejected
    }

    fn candidate(&mut self, family: Family) -> OmegaSuperAlgebra {
        let name = format!("random-{}", self.produced);
        match family {
            Family::Sparse => sparse(&mut self.rng, self.max_dim, name),
            Family::Transported => {
                let bases = [
                    catalog::h(),
                    catalog::heisenberg_like(),
                    catalog::centerless(),
                    catalog::abelian3(),
                ];
                let base = bases.choose(&mut self.rng).expect("nonempty");
                transport(&mut self.rng, base).with_name(name)
            }
        }
    }
}

impl Iterator for RandomAlgebras {
    type Item = OmegaSuperAlgebra;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let family = if self.max_dim >= 3 && self.rng.gen_bool(0.25) {
                Family::Transported
            } else {
                Family::Sparse
            };
            let alg = self.candidate(family);
            if alg.validate().jacobi_ok {
                self.produced += 1;
                return Some(alg);
            }
            self.rejected += 1;
        }
    }
}

fn small_coefficient(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let re = rng.gen_range(-2..=2);
        let im = if rng.gen_bool(0.3) { rng.gen_range(-1..=1) } else { 0 };
        if re != 0 || im != 0 {
            return GaussianRational::gaussian(re, im);
        }
    }
}

fn basis(p: usize, q: usize) -> Vec<(String, Parity)> {
    (0..p)
        .map(|i| (format!("e{}", i + 1), Parity::Even))
        .chain((0..q).map(|i| (format!("o{}", i + 1), Parity::Odd)))
        .collect()
}

fn sparse(rng: &mut impl Rng, max_dim: usize, name: String) -> OmegaSuperAlgebra {
    let weights = [1, 3, 8, 8];
    let n = loop {
        let n = 1 + rand::distributions::WeightedIndex::new(weights)
            .map(|w| rng.sample(w))
            .expect("positive weights");
        if n <= max_dim {
            break n;
        }
    };
    let p = rng.gen_range(0..=n);
    let basis = basis(p, n - p);
    let parity: Vec<Parity> = basis.iter().map(|b| b.1).collect();
    let mut c = vec![GaussianRational::zero(); n * n * n];
    let density = rng.gen_range(0.1..0.5);
    for i in 0..n {
        for j in i..n {
            if i == j && parity[i] == Parity::Even {
                continue;
            }
            if !rng.gen_bool(density) {
                continue;
            }
            let sign = parity[i].sign(parity[j]);
            for k in 0..n {
                if parity[k] != parity[i] + parity[j] || !rng.gen_bool(0.5) {
                    continue;
                }
                let v = small_coefficient(rng);
                c[(j * n + i) * n + k] = -(&sign * &v);
                c[(i * n + j) * n + k] = v;
            }
        }
    }
    let mut omega = Matrix::zeros(n, n);
    if rng.gen_bool(0.7) {
        for i in 0..n {
            for j in 0..n {
                if parity[i] == parity[j] && rng.gen_bool(0.3) {
                    omega[(i, j)] = small_coefficient(rng);
                }
            }
        }
    }
    OmegaSuperAlgebra::from_structure(name, basis, c, omega).expect("graded skew by construction")
}

/// Rewrites `alg` in the basis given by the columns of a random invertible
/// block-diagonal matrix with small Gaussian-integer entries.
pub fn transport(rng: &mut impl Rng, alg: &OmegaSuperAlgebra) -> OmegaSuperAlgebra {
    let n = alg.dim();
    let p = loop {
        let m = Matrix::from_fn(n, n, |i, j| {
            if alg.parity(i) == alg.parity(j) {
                GaussianRational::gaussian(
                    rng.gen_range(-2..=2),
                    if rng.gen_bool(0.2) { rng.gen_range(-1..=1) } else { 0 },
                )
            } else {
                GaussianRational::zero()
            }
        });
        if let Some(inv) = m.inverse() {
            break (m, inv);
        }
    };
    let (m, inv) = p;
    let cols: Vec<Vec<GaussianRational>> = (0..n).map(|a| m.column(a)).collect();
    let mut c = vec![GaussianRational::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let image = inv.apply(&alg.bracket(&cols[a], &cols[b]));
            c[(a * n + b) * n..(a * n + b + 1) * n].clone_from_slice(&image);
        }
    }
    let omega = Matrix::from_fn(n, n, |a, b| alg.omega_eval(&cols[a], &cols[b]));
    let basis = (0..n)
        .map(|i| (format!("{}'", alg.basis_names()[i]), alg.parity(i)))
        .collect();
    OmegaSuperAlgebra::from_structure(alg.name(), basis, c, omega).expect("change of basis preserves the axioms")
}
