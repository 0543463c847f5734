//! Characteristic polynomials, eigenvalues over ℚ(i) and Jordan block
//! structure from rank profiles.

mod classify;
mod poly;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;

pub use classify::{classify_samples, match_pattern, Pattern, PatternSet, SampleReport, Tally};
pub use poly::Poly;

/// `det(λI − M)` via the Faddeev–LeVerrier recurrence.
pub fn char_poly(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::AmbientMismatch {
            left: m.rows(),
            right: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        mk = &(m * &mk) + &Matrix::identity(n).scale(&coeffs[n + 1 - k]);
        let trace = (m * &mk).trace();
        coeffs[n - k] = -(&trace / &GaussianRational::from_integer(k as i64));
    }
    Ok(Poly::new(coeffs))
}

/// Eigenvalues of `m` with algebraic multiplicities.
pub fn eigenvalues(m: &Matrix) -> Result<Vec<(GaussianRational, usize)>> {
    char_poly(m)?.roots()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EigenBlocks {
    pub eigenvalue: GaussianRational,
    /// Jordan block sizes, largest first.
    pub blocks: Vec<usize>,
}

/// Jordan block sizes per eigenvalue, eigenvalues ordered by `(re, im)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct JordanStructure {
    pub spectrum: Vec<EigenBlocks>,
}

impl JordanStructure {
    pub fn of(m: &Matrix) -> Result<Self> {
        let n = m.rows();
        let mut spectrum = Vec::new();
        for (lambda, mult) in eigenvalues(m)? {
            let b = m.shift(&lambda);
            // ranks[k] = rank(B^k)
            let mut ranks = vec![n];
            let mut power = Matrix::identity(n);
            while *ranks.last().expect("nonempty") > n - mult {
                power = &power * &b;
                ranks.push(power.rank());
            }
            ranks.push(n - mult);
            // at_least[k] = number of blocks of size ≥ k
            let at_least: Vec<usize> = (1..ranks.len()).map(|k| ranks[k - 1] - ranks[k]).collect();
            let mut blocks = Vec::new();
            for k in (1..=at_least.len()).rev() {
                let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
                blocks.extend(std::iter::repeat_n(k, exact));
            }
            spectrum.push(EigenBlocks {
                eigenvalue: lambda,
                blocks,
            });
        }
        Ok(Self { spectrum })
    }

    pub fn dim(&self) -> usize {
        self.spectrum.iter().flat_map(|e| &e.blocks).sum()
    }

    /// All block sizes, largest first.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.spectrum.iter().flat_map(|e| e.blocks.iter().copied()).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `(eigenvalue, size)` for every block.
    pub fn blocks(&self) -> Vec<(GaussianRational, usize)> {
        self.spectrum
            .iter()
            .flat_map(|e| e.blocks.iter().map(move |&s| (e.eigenvalue.clone(), s)))
            .collect()
    }

    /// The Jordan matrix, upper bidiagonal, blocks in spectrum order.
    pub fn jordan_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut j = Matrix::zeros(n, n);
        let mut at = 0;
        for (lambda, size) in self.blocks() {
            for k in 0..size {
                j[(at + k, at + k)] = lambda.clone();
                if k + 1 < size {
                    j[(at + k, at + k + 1)] = GaussianRational::one();
                }
            }
            at += size;
        }
        j
    }

    /// Block sizes only, e.g. `[2,1]`.
    pub fn shape(&self) -> String {
        let sizes: Vec<String> = self.block_sizes().iter().map(|s| s.to_string()).collect();
        format!("[{}]", sizes.join(","))
    }
}

impl fmt::Display for JordanStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .spectrum
            .iter()
            .map(|e| {
                let sizes: Vec<String> = e.blocks.iter().map(|s| s.to_string()).collect();
                format!("{}:[{}]", e.eigenvalue, sizes.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}
