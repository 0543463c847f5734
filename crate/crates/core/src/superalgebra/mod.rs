//! Finite-dimensional ℤ₂-graded algebras with a bilinear form ω.
//!
//! An [`OmegaSuperAlgebra`] is stored by structure constants
//! `[bᵢ, bⱼ] = Σₖ c[i][j][k]·bₖ` and the Gram matrix `ω(bᵢ, bⱼ)`. Construction
//! enforces bracket grading, graded skew-symmetry and the vanishing of ω on
//! mixed degrees; the graded ω-Jacobi identity is only reported by
//! [`OmegaSuperAlgebra::validate`], never enforced.

mod document;

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use document::{load_algebra, AlgebraDocument, BracketEntry, OmegaEntry};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// The Koszul sign `(-1)^{|self||other|}`.
    pub fn sign(self, other: Parity) -> GaussianRational {
        if self == Parity::Odd && other == Parity::Odd {
            GaussianRational::from_integer(-1)
        } else {
            GaussianRational::from_integer(1)
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaSuperAlgebra {
    name: String,
    basis_names: Vec<String>,
    parities: Vec<Parity>,
    /// `structure[(i * n + j) * n + k] = c[i][j][k]`.
    structure: Vec<GaussianRational>,
    omega: Matrix,
}

impl OmegaSuperAlgebra {
    /// Builds an algebra from complete structure constants `c[i][j][k]`.
    pub fn from_structure(
        name: impl Into<String>,
        basis: Vec<(String, Parity)>,
        structure: Vec<GaussianRational>,
        omega: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        if structure.len() != n * n * n {
            return Err(Error::Schema(format!(
                "expected {} structure constants, got {}",
                n * n * n,
                structure.len()
            )));
        }
        if omega.rows() != n || omega.cols() != n {
            return Err(Error::Schema(format!("omega must be {n}x{n}")));
        }
        let (basis_names, parities) = basis.into_iter().unzip();
        let alg = Self {
            name: name.into(),
            basis_names,
            parities,
            structure,
            omega,
        };
        alg.check_invariants()?;
        Ok(alg)
    }

    fn check_invariants(&self) -> Result<()> {
        let mut seen = HashMap::new();
        for (i, name) in self.basis_names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(Error::Schema(format!("duplicate basis name {name:?}")));
            }
        }
        if let Some((i, j, k)) = self.first_closure_violation() {
            return Err(Error::Grading(format!(
                "[{}, {}] has a component along {}",
                self.basis_names[i], self.basis_names[j], self.basis_names[k]
            )));
        }
        if let Some((i, j)) = self.first_skew_violation() {
            return Err(Error::Skew(format!(
                "[{}, {}] and [{}, {}] are not graded skew",
                self.basis_names[i], self.basis_names[j], self.basis_names[j], self.basis_names[i]
            )));
        }
        if let Some((i, j)) = self.first_mixed_omega() {
            return Err(Error::Grading(format!(
                "omega({}, {}) pairs an even and an odd element",
                self.basis_names[i], self.basis_names[j]
            )));
        }
        Ok(())
    }

    fn first_closure_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let target = self.parities[i] + self.parities[j];
                for k in 0..n {
                    if self.parities[k] != target && !self.constant(i, j, k).is_zero() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn first_skew_violation(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let sign = self.parities[i].sign(self.parities[j]);
                for k in 0..n {
                    if *self.constant(j, i, k) != -(&sign * self.constant(i, j, k)) {
                        return Some((i, j));
                    }
                }
            }
        }
        None
    }

    fn first_mixed_omega(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.parities[i] != self.parities[j] && !self.omega[(i, j)].is_zero())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|&&p| p == Parity::Even).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|b| b == name)
    }

    /// Indices of basis vectors of parity `p`.
    pub fn indices_of(&self, p: Parity) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parities[i] == p).collect()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &GaussianRational {
        let n = self.dim();
        &self.structure[(i * n + j) * n + k]
    }

    /// `[bᵢ, bⱼ]` in basis coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[GaussianRational] {
        let n = self.dim();
        &self.structure[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    pub fn omega_is_zero(&self) -> bool {
        self.omega.is_zero()
    }

    pub fn unit(&self, i: usize) -> Vec<GaussianRational> {
        let mut v = vec![GaussianRational::zero(); self.dim()];
        v[i] = GaussianRational::from_integer(1);
        v
    }

    pub fn bracket(&self, u: &[GaussianRational], v: &[GaussianRational]) -> Vec<GaussianRational> {
        let n = self.dim();
        assert_eq!(u.len(), n);
        assert_eq!(v.len(), n);
        let mut out = vec![GaussianRational::zero(); n];
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let coeff = ui * vj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    pub fn omega_eval(&self, u: &[GaussianRational], v: &[GaussianRational]) -> GaussianRational {
        let wv = self.omega.apply(v);
        u.iter().zip(&wv).map(|(a, b)| a * b).sum()
    }

    /// Checks all four axioms; the Jacobi residual is recorded per failing
    /// ordered basis triple.
    pub fn validate(&self) -> AxiomReport {
        let n = self.dim();
        let mut failures = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let residual = self.jacobi_residual(x, y, z);
                    if residual.iter().any(|c| !c.is_zero()) {
                        failures.push(JacobiFailure {
                            triple: [x, y, z],
                            names: [x, y, z].map(|i| self.basis_names[i].clone()),
                            residual,
                        });
                    }
                }
            }
        }
        AxiomReport {
            closure_ok: self.first_closure_violation().is_none(),
            skew_ok: self.first_skew_violation().is_none(),
            mixed_omega_ok: self.first_mixed_omega().is_none(),
            jacobi_ok: failures.is_empty(),
            jacobi_failures: failures,
        }
    }

    /// Bracket side minus ω side of the graded ω-Jacobi identity.
    pub fn jacobi_residual(&self, x: usize, y: usize, z: usize) -> Vec<GaussianRational> {
        let (px, py, pz) = (self.parities[x], self.parities[y], self.parities[z]);
        let (sxy, syz, sxz) = (px.sign(py), py.sign(pz), px.sign(pz));
        let e = |i| self.unit(i);
        let term = |a: usize, b: usize, c: usize| self.bracket(self.bracket_basis(a, b), &e(c));
        let lhs = [
            (sxy.clone(), term(y, z, x)),
            (syz.clone(), term(z, x, y)),
            (sxz.clone(), term(x, y, z)),
        ];
        let mut out = vec![GaussianRational::zero(); self.dim()];
        for (s, v) in &lhs {
            for (o, c) in out.iter_mut().zip(v) {
                *o += &(s * c);
            }
        }
        out[x] -= &(&sxy * &self.omega[(y, z)]);
        out[y] -= &(&syz * &self.omega[(z, x)]);
        out[z] -= &(&sxz * &self.omega[(x, y)]);
        out
    }

    /// `Z(g) = {z : [z, y] = 0 ∀y}`, split by degree.
    pub fn center(&self) -> GradedSubspace {
        let n = self.dim();
        // Row (j, k): Σᵢ zᵢ c[i][j][k] = 0.
        let m = Matrix::from_fn(n * n, n, |row, i| self.constant(i, row / n, row % n).clone());
        self.split_graded(&Subspace::kernel(&m))
    }

    pub fn derived_subalgebra(&self) -> GradedSubspace {
        let n = self.dim();
        let mut parts = [Vec::new(), Vec::new()];
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    let p = self.parities[i] + self.parities[j];
                    parts[p.bit() as usize].push(v.to_vec());
                }
            }
        }
        let [even, odd] = parts;
        GradedSubspace {
            even: Subspace::span(n, even).expect("bracket vectors have length n"),
            odd: Subspace::span(n, odd).expect("bracket vectors have length n"),
        }
    }

    /// Complement spanned by the unit vectors at the non-pivot coordinates of
    /// `s`, per degree, so that `s ⊕ U = g`.
    pub fn graded_complement(&self, s: &GradedSubspace) -> Result<GradedSubspace> {
        let total = s.total()?;
        if total.ambient_dim() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: self.dim(),
                right: total.ambient_dim(),
            });
        }
        let free = total.non_pivots();
        let pick = |p: Parity| {
            Subspace::span(
                self.dim(),
                free.iter().filter(|&&i| self.parities[i] == p).map(|&i| self.unit(i)),
            )
        };
        Ok(GradedSubspace {
            even: pick(Parity::Even)?,
            odd: pick(Parity::Odd)?,
        })
    }

    /// Coordinate subspace spanned by the basis vectors of parity `p`.
    pub fn homogeneous_part(&self, p: Parity) -> Subspace {
        Subspace::span(self.dim(), self.indices_of(p).into_iter().map(|i| self.unit(i)))
            .expect("unit vectors have length n")
    }

    /// Splits a graded subspace into its homogeneous components.
    pub fn split_graded(&self, s: &Subspace) -> GradedSubspace {
        GradedSubspace {
            even: s.intersect(&self.homogeneous_part(Parity::Even)).expect("same ambient"),
            odd: s.intersect(&self.homogeneous_part(Parity::Odd)).expect("same ambient"),
        }
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedSubspace {
    pub even: Subspace,
    pub odd: Subspace,
}

impl GradedSubspace {
    pub fn part(&self, p: Parity) -> &Subspace {
        match p {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn total(&self) -> Result<Subspace> {
        self.even.sum(&self.odd)
    }

    pub fn dim(&self) -> usize {
        self.even.dim() + self.odd.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiFailure {
    pub triple: [usize; 3],
    pub names: [String; 3],
    /// Bracket side minus ω side.
    pub residual: Vec<GaussianRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub closure_ok: bool,
    pub skew_ok: bool,
    pub mixed_omega_ok: bool,
    pub jacobi_ok: bool,
    pub jacobi_failures: Vec<JacobiFailure>,
}

impl AxiomReport {
    pub fn all_ok(&self) -> bool {
        self.closure_ok && self.skew_ok && self.mixed_omega_ok && self.jacobi_ok
    }
}

type BracketSpec = (String, String, Vec<(GaussianRational, String)>);

/// Incremental construction by basis names; brackets are completed by graded
/// skew-symmetry.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    basis: Vec<(String, Parity)>,
    brackets: Vec<BracketSpec>,
    omega: Vec<(String, String, GaussianRational)>,
}

impl AlgebraBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            basis: Vec::new(),
            brackets: Vec::new(),
            omega: Vec::new(),
        }
    }

    pub fn even(mut self, name: impl Into<String>) -> Self {
        self.basis.push((name.into(), Parity::Even));
        self
    }

    pub fn odd(mut self, name: impl Into<String>) -> Self {
        self.basis.push((name.into(), Parity::Odd));
        self
    }

    /// `[left, right] = Σ coeff·basis`.
    pub fn bracket(
        mut self,
        left: impl Into<String>,
        right: impl Into<String>,
        value: Vec<(GaussianRational, String)>,
    ) -> Self {
        self.brackets.push((left.into(), right.into(), value));
        self
    }

    pub fn omega(mut self, left: impl Into<String>, right: impl Into<String>, value: GaussianRational) -> Self {
        self.omega.push((left.into(), right.into(), value));
        self
    }

    pub fn build(self) -> Result<OmegaSuperAlgebra> {
        let n = self.basis.len();
        let mut index = HashMap::new();
        for (i, (name, _)) in self.basis.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate basis name {name:?}")));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Schema(format!("unknown basis name {name:?}")))
        };
        let parity = |i: usize| self.basis[i].1;

        let mut structure = vec![GaussianRational::zero(); n * n * n];
        let mut given: HashMap<(usize, usize), Vec<GaussianRational>> = HashMap::new();
        for (left, right, value) in &self.brackets {
            let (i, j) = (lookup(left)?, lookup(right)?);
            let mut v = vec![GaussianRational::zero(); n];
            for (coeff, target) in value {
                let k = lookup(target)?;
                v[k] += coeff;
            }
            let target = parity(i) + parity(j);
            if let Some(k) = (0..n).find(|&k| parity(k) != target && !v[k].is_zero()) {
                return Err(Error::Grading(format!(
                    "[{left}, {right}] has a component along {}",
                    self.basis[k].0
                )));
            }
            let sign = parity(i).sign(parity(j));
            let mirrored: Vec<_> = v.iter().map(|c| -(&sign * c)).collect();
            if i == j && mirrored != v {
                return Err(Error::Skew(format!("[{left}, {left}] must vanish for even {left}")));
            }
            for (key, val) in [((i, j), &v), ((j, i), &mirrored)] {
                if let Some(prev) = given.get(&key) {
                    if prev != val {
                        return Err(Error::Skew(format!(
                            "conflicting entries for [{}, {}]",
                            self.basis[key.0].0, self.basis[key.1].0
                        )));
                    }
                }
            }
            given.insert((i, j), v.clone());
            given.insert((j, i), mirrored.clone());
            structure[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&v);
            structure[(j * n + i) * n..(j * n + i + 1) * n].clone_from_slice(&mirrored);
        }

        let mut omega = Matrix::zeros(n, n);
        let mut seen = HashMap::new();
        for (left, right, value) in &self.omega {
            let (i, j) = (lookup(left)?, lookup(right)?);
            if seen.insert((i, j), ()).is_some() {
                return Err(Error::Schema(format!("duplicate omega entry ({left}, {right})")));
            }
            omega[(i, j)] = value.clone();
        }
        OmegaSuperAlgebra::from_structure(self.name, self.basis, structure, omega)
    }
}
