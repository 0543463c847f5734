//! The extension `ğ = g⊗t ⊕ g⊗t²` and the embedding `φ` of quasiderivations
//! of `g` as derivations of `ğ`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::derivations::{
    gder_witness, is_compatible, satisfies_identity, shifted_witness, GradedMap, GradedMapSpace, MapSpace, MapSpan,
    SolveOptions, SpaceKind,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use crate::superalgebra::{AxiomReport, GradedSubspace, OmegaSuperAlgebra, Parity};
use crate::theorems::{containment, equality, Dims, ReportBuilder, StatementId, TheoremReport};

#[derive(Clone, Debug, Serialize)]
pub struct BreveAlgebra {
    pub base: OmegaSuperAlgebra,
    pub breve: OmegaSuperAlgebra,
    pub derived: GradedSubspace,
    pub complement: GradedSubspace,
    pub axioms: AxiomReport,
    /// Projection of `g` onto `[g, g]` along the complement.
    #[serde(skip)]
    projection: Matrix,
}

impl BreveAlgebra {
    pub fn build(base: &OmegaSuperAlgebra) -> Self {
        let n = base.dim();
        let mut basis = Vec::with_capacity(2 * n);
        for power in ["t", "t²"] {
            for (name, &p) in base.basis_names().iter().zip(base.parities()) {
                basis.push((format!("{name}{power}"), p));
            }
        }
        let mut c = vec![GaussianRational::zero(); 8 * n * n * n];
        let mut omega = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                for (k, v) in base.bracket_basis(i, j).iter().enumerate() {
                    c[(i * 2 * n + j) * 2 * n + n + k] = v.clone();
                }
                omega[(i, j)] = base.omega()[(i, j)].clone();
            }
        }
        let name = format!("{}-breve", base.name());
        let breve =
            OmegaSuperAlgebra::from_structure(name, basis, c, omega).expect("grading and skew symmetry are inherited");

        let derived = base.derived_subalgebra();
        let complement = base.graded_complement(&derived).expect("the derived algebra is graded");
        let total = derived.total().expect("parts share the ambient space");
        let mut projection = Matrix::zeros(n, n);
        for (row, &pivot) in total.basis().iter().zip(total.pivots()) {
            for (i, v) in row.iter().enumerate() {
                projection[(i, pivot)] = v.clone();
            }
        }
        let axioms = breve.validate();
        Self {
            base: base.clone(),
            breve,
            derived,
            complement,
            axioms,
            projection,
        }
    }

    pub fn n(&self) -> usize {
        self.base.dim()
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `φ(d)` for a quasiderivation `d` of the base.
    pub fn phi(&self, d: &GradedMap, qder: &MapSpace) -> Result<PhiMap> {
        if qder.kind != SpaceKind::QDer {
            return Err(Error::NotMember(format!("phi expects a QDer space, got {}", qder.kind)));
        }
        let (_, w) = gder_witness(&self.base, qder, d)?;
        let n = self.n();
        let wp = w.matrix() * &self.projection;
        let matrix = Matrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => d.matrix()[(r, c)].clone(),
            (false, false) => wp[(r - n, c - n)].clone(),
            _ => GaussianRational::zero(),
        });
        let map = GradedMap::with_parities(self.breve.parities(), d.degree(), matrix)?;

        let mut witness_independent = true;
        for k in 0.. {
            match shifted_witness(&self.base, qder, d, k)? {
                Some((_, other)) => witness_independent &= other.matrix() * &self.projection == wp,
                None => break,
            }
        }
        Ok(PhiMap {
            d: d.clone(),
            d_prime: w,
            map,
            witness_independent,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiMap {
    pub d: GradedMap,
    /// Canonical witness `d′`.
    pub d_prime: GradedMap,
    /// `φ(d)` acting on `ğ`.
    pub map: GradedMap,
    /// Every other witness agrees with `d′` on `[g, g]`.
    pub witness_independent: bool,
}

/// All spaces needed for the extension statements.
#[derive(Clone, Debug)]
pub struct ExtensionSpaces {
    pub breve: BreveAlgebra,
    pub base_jacobi_ok: bool,
    pub base_center_trivial: bool,
    pub qder: GradedMapSpace,
    pub qder_omega: GradedMapSpace,
    pub phi_qder: Vec<PhiMap>,
    pub phi_qder_omega: Vec<PhiMap>,
    pub der: MapSpan,
    pub der_omega: MapSpan,
    pub zder: MapSpan,
    pub zder_omega: MapSpan,
}

impl ExtensionSpaces {
    pub fn compute(base: &OmegaSuperAlgebra) -> Result<Self> {
        let breve = BreveAlgebra::build(base);
        let qder = GradedMapSpace::solve(base, SpaceKind::QDer, SolveOptions::plain());
        let qder_omega = GradedMapSpace::solve(base, SpaceKind::QDer, SolveOptions::compatible());
        let phis = |s: &GradedMapSpace| -> Result<Vec<PhiMap>> {
            Parity::BOTH
                .iter()
                .flat_map(|&p| s.part(p).elements().into_iter().map(move |d| (p, d)))
                .map(|(p, d)| breve.phi(&d, s.part(p)))
                .collect()
        };
        let phi_qder = phis(&qder)?;
        let phi_qder_omega = phis(&qder_omega)?;
        let solve = |k, opts| GradedMapSpace::solve(&breve.breve, k, opts).span();
        Ok(Self {
            base_jacobi_ok: base.validate().jacobi_ok,
            base_center_trivial: base.center().is_zero(),
            der: solve(SpaceKind::Der, SolveOptions::plain()),
            der_omega: solve(SpaceKind::Der, SolveOptions::compatible()),
            zder: solve(SpaceKind::ZDer, SolveOptions::plain()),
            zder_omega: solve(SpaceKind::ZDer, SolveOptions::compatible()),
            breve,
            qder,
            qder_omega,
            phi_qder,
            phi_qder_omega,
        })
    }

    fn span_of(&self, phis: &[PhiMap]) -> MapSpan {
        MapSpan::from_maps(self.breve.breve.parities(), phis.iter().map(|p| &p.map))
    }

    /// `φ(QDer(g))` as a subspace of homogeneous maps of `ğ`.
    pub fn phi_qder_span(&self) -> MapSpan {
        self.span_of(&self.phi_qder)
    }

    pub fn phi_qder_omega_span(&self) -> MapSpan {
        self.span_of(&self.phi_qder_omega)
    }

    pub fn check(&self, id: StatementId) -> Result<TheoremReport> {
        let base = &self.breve.base;
        let breve = &self.breve.breve;
        let mut b = ReportBuilder::new(id);
        b.hypothesis("omega-Lie superalgebra", self.base_jacobi_ok);
        Ok(match id {
            StatementId::PhiEmbedding => {
                let image = self.phi_qder_span();
                let qder = self.qder.span();
                b.dim("QDer", &qder).dim("φ(QDer)", &image);
                b.require_bool(
                    "φ preserves degree",
                    self.phi_qder.iter().all(|p| p.map.degree() == p.d.degree()),
                )
                .require_bool("φ is injective", image.dim() == qder.dim())
                .require_bool(
                    "φ(d) is independent of the witness",
                    self.phi_qder.iter().all(|p| p.witness_independent),
                )
                .require_bool(
                    "t-block of φ(d) is d",
                    self.phi_qder.iter().all(|p| self.t_block(&p.map) == *p.d.matrix()),
                )
                .require_bool("φ is linear", self.phi_is_linear()?)
                .finish()
            }
            StatementId::PhiDerivation => {
                let all_der = self
                    .phi_qder
                    .iter()
                    .all(|p| satisfies_identity(breve, SpaceKind::Der, std::slice::from_ref(&p.map)));
                let mut compatible_seen = [false; 2];
                let mut equivalence = true;
                for p in &self.phi_qder {
                    let cd = is_compatible(base, &p.d);
                    compatible_seen[cd as usize] = true;
                    equivalence &= cd == is_compatible(breve, &p.map);
                }
                let combos = self.mixed_combinations();
                for (d, map) in &combos {
                    let cd = is_compatible(base, d);
                    compatible_seen[cd as usize] = true;
                    equivalence &= cd == is_compatible(breve, map);
                }
                b.dim("φ(QDer)", &self.phi_qder_span())
                    .dim("Der(ğ)", &self.der)
                    .fact("compatible d exercised", compatible_seen[1])
                    .fact("incompatible d exercised", compatible_seen[0])
                    .require_bool("φ(d) satisfies the derivation identity", all_der)
                    .require(
                        "φ(QDer) ⊆ Der(ğ)",
                        containment(&self.phi_qder_span(), &self.der, "φ(QDer) ⊆ Der(ğ)"),
                    )
                    .require_bool("φ(d) compatible ⇔ d compatible", equivalence)
                    .finish()
            }
            StatementId::PhiCompatibleImage => {
                let image = self.phi_qder_omega_span();
                b.dim("φ(QDerω)", &image)
                    .dim("Derω(ğ)", &self.der_omega)
                    .require(
                        "φ(QDerω) ⊆ Derω(ğ)",
                        containment(&image, &self.der_omega, "φ(QDerω) ⊆ Derω(ğ)"),
                    )
                    .finish()
            }
            StatementId::BreveDecomposition => {
                let image = self.phi_qder_omega_span();
                let sum = image.sum(&self.zder);
                let meet = image.intersect(&self.zder);
                b.hypothesis("center is zero", self.base_center_trivial)
                    .dim("Derω(ğ)", &self.der_omega)
                    .dim("φ(QDerω)", &image)
                    .dim("ZDer(ğ)", &self.zder)
                    .dim("ZDerω(ğ)", &self.zder_omega)
                    .fact("ZDer(ğ) = ZDerω(ğ)", self.zder == self.zder_omega)
                    .fact("ğ satisfies the ω-Jacobi identity", self.breve.axioms.jacobi_ok)
                    .require(
                        "Derω(ğ) = φ(QDerω) + ZDer(ğ)",
                        equality(&self.der_omega, &sum, "Derω(ğ) = φ(QDerω) + ZDer(ğ)"),
                    )
                    .require_bool("φ(QDerω) ∩ ZDer(ğ) = 0", meet.dim() == 0)
                    .finish()
            }
            other => return Err(Error::UnknownId(format!("{other} is not an extension statement"))),
        })
    }

    pub fn check_all(&self) -> Result<Vec<TheoremReport>> {
        StatementId::EXTENSION.iter().map(|&id| self.check(id)).collect()
    }

    pub fn dims(&self) -> Vec<(String, Dims)> {
        vec![
            ("Der(ğ)".into(), Dims::of(&self.der)),
            ("Derω(ğ)".into(), Dims::of(&self.der_omega)),
            ("ZDer(ğ)".into(), Dims::of(&self.zder)),
            ("ZDerω(ğ)".into(), Dims::of(&self.zder_omega)),
            ("φ(QDer)".into(), Dims::of(&self.phi_qder_span())),
            ("φ(QDerω)".into(), Dims::of(&self.phi_qder_omega_span())),
        ]
    }

    fn t_block(&self, m: &GradedMap) -> Matrix {
        let n = self.breve.n();
        Matrix::from_fn(n, n, |r, c| m.matrix()[(r, c)].clone())
    }

    /// `φ(αd₁ + d₂) = αφ(d₁) + φ(d₂)` on consecutive basis pairs of each degree.
    fn phi_is_linear(&self) -> Result<bool> {
        let alpha = GaussianRational::gaussian(2, 1);
        for p in Parity::BOTH {
            let space = self.qder.part(p);
            let phis: Vec<&PhiMap> = self.phi_qder.iter().filter(|m| m.d.degree() == p).collect();
            for pair in phis.windows(2) {
                let d = pair[0].d.scale(&alpha).plus(&pair[1].d);
                let lhs = self.breve.phi(&d, space)?.map;
                let rhs = pair[0].map.scale(&alpha).plus(&pair[1].map);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Sums of consecutive QDer basis elements of equal degree with their images.
    fn mixed_combinations(&self) -> Vec<(GradedMap, GradedMap)> {
        let one = GaussianRational::one();
        let mut out = Vec::new();
        for p in Parity::BOTH {
            let phis: Vec<&PhiMap> = self.phi_qder.iter().filter(|m| m.d.degree() == p).collect();
            for pair in phis.windows(2) {
                out.push((pair[0].d.scale(&one).plus(&pair[1].d), pair[0].map.plus(&pair[1].map)));
            }
        }
        out
    }
}
