//! Structural statements about derivation-type spaces, each evaluated as a
//! decidable fact on a concrete algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::derivations::{super_commutator, GradedMap, GradedMapSpace, MapSpan, SolveOptions, SpaceKind};
use crate::error::{Error, Result};
use crate::superalgebra::{GradedSubspace, OmegaSuperAlgebra, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementId {
    /// `Derω ⊆ QDerω ⊆ GDerω ⊆ GDer`, with `ZDer ⊆ Der ⊆ QDer ⊆ GDer`.
    Tower,
    /// `Cent ⊆ QCent ⊆ QDer`.
    CentroidTower,
    /// The compatible spaces and their plain counterparts are closed under
    /// the super-commutator.
    CompatibleSubalgebras,
    /// `ZDerω` is an ideal of `Derω`.
    ZderIdeal,
    /// `ZDer = ZDerω`.
    ZderCompatible,
    /// `[Derω, Cω] ⊆ Cω`.
    DerCentBracket,
    /// `[QDerω, QCω] ⊆ QCω`.
    QderQcentBracket,
    /// `[QCω, QCω] ⊆ QDerω`.
    QcentQcentBracket,
    /// `Cω ⊆ QDerω`.
    CentInQder,
    /// `GDerω = QDerω + QCω` when `QDerω = QDer` or `QCω = QC`.
    GderDecomposition,
    /// `QCω + [QCω, QCω]` is an ideal of `GDerω`.
    QcentIdeal,
    /// `[Cω, QCω]` maps into the center.
    CentQcentCenter,
    /// `Cω = QDerω ∩ QCω` when the center is trivial.
    CentIntersection,
    /// With trivial center, `QCω` is closed under the commutator iff
    /// `[QCω, QCω] = 0`.
    QcentClosure,
    /// `φ` is even, injective and independent of the witness.
    PhiEmbedding,
    /// `φ(QDer) ⊆ Der(ğ)`, and `φ(d)` is compatible iff `d` is.
    PhiDerivation,
    /// `φ(QDerω) ⊆ Derω(ğ)`.
    PhiCompatibleImage,
    /// `Derω(ğ) = φ(QDerω) ⊕ ZDer(ğ)` when the center is trivial.
    BreveDecomposition,
}

impl StatementId {
    pub const ALGEBRA: [StatementId; 14] = [
        StatementId::Tower,
        StatementId::CentroidTower,
        StatementId::CompatibleSubalgebras,
        StatementId::ZderIdeal,
        StatementId::ZderCompatible,
        StatementId::DerCentBracket,
        StatementId::QderQcentBracket,
        StatementId::QcentQcentBracket,
        StatementId::CentInQder,
        StatementId::GderDecomposition,
        StatementId::QcentIdeal,
        StatementId::CentQcentCenter,
        StatementId::CentIntersection,
        StatementId::QcentClosure,
    ];

    pub const EXTENSION: [StatementId; 4] = [
        StatementId::PhiEmbedding,
        StatementId::PhiDerivation,
        StatementId::PhiCompatibleImage,
        StatementId::BreveDecomposition,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatementId::Tower => "tower",
            StatementId::CentroidTower => "centroid-tower",
            StatementId::CompatibleSubalgebras => "compatible-subalgebras",
            StatementId::ZderIdeal => "zder-ideal",
            StatementId::ZderCompatible => "zder-compatible",
            StatementId::DerCentBracket => "der-cent-bracket",
            StatementId::QderQcentBracket => "qder-qcent-bracket",
            StatementId::QcentQcentBracket => "qcent-qcent-bracket",
            StatementId::CentInQder => "cent-in-qder",
            StatementId::GderDecomposition => "gder-decomposition",
            StatementId::QcentIdeal => "qcent-ideal",
            StatementId::CentQcentCenter => "cent-qcent-center",
            StatementId::CentIntersection => "cent-intersection",
            StatementId::QcentClosure => "qcent-closure",
            StatementId::PhiEmbedding => "phi-embedding",
            StatementId::PhiDerivation => "phi-derivation",
            StatementId::PhiCompatibleImage => "phi-compatible-image",
            StatementId::BreveDecomposition => "breve-decomposition",
        }
    }

    pub fn all() -> impl Iterator<Item = StatementId> {
        Self::ALGEBRA.into_iter().chain(Self::EXTENSION)
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::all()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dims {
    pub even: usize,
    pub odd: usize,
    pub total: usize,
}

impl Dims {
    pub fn of(span: &MapSpan) -> Self {
        Self {
            even: span.even.dim(),
            odd: span.odd.dim(),
            total: span.dim(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub description: String,
    pub maps: Vec<GradedMap>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<GradedMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub statement: StatementId,
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Verdict,
    /// Truth of the conclusion, evaluated even when a hypothesis fails.
    pub conclusion_value: bool,
    pub dims: BTreeMap<String, Dims>,
    pub facts: BTreeMap<String, bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    /// A failure with every hypothesis satisfied.
    pub fn is_falsified(&self) -> bool {
        self.conclusion == Verdict::Fails
    }
}

/// Incremental construction of a report.
pub(crate) struct ReportBuilder {
    statement: StatementId,
    hypotheses: Vec<Hypothesis>,
    dims: BTreeMap<String, Dims>,
    facts: BTreeMap<String, bool>,
    counterexample: Option<Counterexample>,
    ok: bool,
}

impl ReportBuilder {
    pub(crate) fn new(statement: StatementId) -> Self {
        Self {
            statement,
            hypotheses: Vec::new(),
            dims: BTreeMap::new(),
            facts: BTreeMap::new(),
            counterexample: None,
            ok: true,
        }
    }

    pub(crate) fn hypothesis(&mut self, name: &str, holds: bool) -> &mut Self {
        self.hypotheses.push(Hypothesis {
            name: name.to_string(),
            holds,
        });
        self
    }

    pub(crate) fn dim(&mut self, name: &str, span: &MapSpan) -> &mut Self {
        self.dims.insert(name.to_string(), Dims::of(span));
        self
    }

    pub(crate) fn fact(&mut self, name: &str, value: bool) -> &mut Self {
        self.facts.insert(name.to_string(), value);
        self
    }

    /// Records one part of the conclusion; the first failure supplies the
    /// counterexample.
    pub(crate) fn require(&mut self, name: &str, outcome: Option<Counterexample>) -> &mut Self {
        let holds = outcome.is_none();
        self.facts.insert(name.to_string(), holds);
        if !holds {
            self.ok = false;
            if self.counterexample.is_none() {
                self.counterexample = outcome;
            }
        }
        self
    }

    pub(crate) fn require_bool(&mut self, name: &str, holds: bool) -> &mut Self {
        let ce = (!holds).then(|| Counterexample {
            description: format!("{name} is false"),
            maps: Vec::new(),
            residual: None,
        });
        self.require(name, ce)
    }

    pub(crate) fn finish(&mut self) -> TheoremReport {
        let hyps_ok = self.hypotheses.iter().all(|h| h.holds);
        let conclusion = match (hyps_ok, self.ok) {
            (false, _) => Verdict::NotApplicable,
            (true, true) => Verdict::Holds,
            (true, false) => Verdict::Fails,
        };
        TheoremReport {
            statement: self.statement,
            hypotheses: std::mem::take(&mut self.hypotheses),
            conclusion,
            conclusion_value: self.ok,
            dims: std::mem::take(&mut self.dims),
            facts: std::mem::take(&mut self.facts),
            counterexample: if conclusion == Verdict::Fails {
                self.counterexample.take()
            } else {
                None
            },
        }
    }
}

/// `a ⊆ b`, or the first basis element of `a` outside `b`.
pub fn containment(a: &MapSpan, b: &MapSpan, label: &str) -> Option<Counterexample> {
    a.elements()
        .into_iter()
        .find(|d| !b.contains(d))
        .map(|d| Counterexample {
            description: format!("element outside the larger space in {label}"),
            maps: vec![d],
            residual: None,
        })
}

pub fn equality(a: &MapSpan, b: &MapSpan, label: &str) -> Option<Counterexample> {
    containment(a, b, label).or_else(|| containment(b, a, label))
}

/// `[a, b] ⊆ target`, checked on all pairs of basis elements.
pub fn bracket_inclusion(a: &MapSpan, b: &MapSpan, target: &MapSpan, label: &str) -> Option<Counterexample> {
    let bs = b.elements();
    for d in a.elements() {
        for e in &bs {
            let c = super_commutator(&d, e);
            if !target.contains(&c) {
                return Some(Counterexample {
                    description: format!("super-commutator outside the target in {label}"),
                    maps: vec![d, e.clone()],
                    residual: Some(c),
                });
            }
        }
    }
    None
}

/// Span of all super-commutators of basis pairs.
pub fn commutator_span(parities: &[Parity], a: &MapSpan, b: &MapSpan) -> MapSpan {
    let bs = b.elements();
    let comms: Vec<GradedMap> = a
        .elements()
        .iter()
        .flat_map(|d| bs.iter().map(move |e| super_commutator(d, e)))
        .collect();
    MapSpan::from_maps(parities, &comms)
}

/// Every derivation-type space of one algebra, solved once.
#[derive(Clone, Debug)]
pub struct AlgebraSpaces {
    pub name: String,
    pub parities: Vec<Parity>,
    pub dim: usize,
    pub jacobi_ok: bool,
    pub center: GradedSubspace,
    plain: BTreeMap<SpaceKind, MapSpan>,
    compatible: BTreeMap<SpaceKind, MapSpan>,
}

impl AlgebraSpaces {
    pub fn compute(alg: &OmegaSuperAlgebra) -> Self {
        let solve = |opts| {
            SpaceKind::ALL
                .iter()
                .map(|&k| (k, GradedMapSpace::solve(alg, k, opts).span()))
                .collect()
        };
        Self {
            name: alg.name().to_string(),
            parities: alg.parities().to_vec(),
            dim: alg.dim(),
            jacobi_ok: alg.validate().jacobi_ok,
            center: alg.center(),
            plain: solve(SolveOptions::plain()),
            compatible: solve(SolveOptions::compatible()),
        }
    }

    pub fn get(&self, kind: SpaceKind, compatible: bool) -> &MapSpan {
        let map = if compatible { &self.compatible } else { &self.plain };
        &map[&kind]
    }

    pub fn end(&self) -> MapSpan {
        MapSpan::full(&self.parities)
    }

    pub fn center_trivial(&self) -> bool {
        self.center.is_zero()
    }

    /// `(label, kind, compatible)` for all twelve spaces.
    pub fn labelled(&self) -> Vec<(String, &MapSpan)> {
        SpaceKind::ALL
            .iter()
            .flat_map(|&k| {
                [
                    (k.label().to_string(), self.get(k, false)),
                    (format!("{}ω", k.label()), self.get(k, true)),
                ]
            })
            .collect()
    }
}

const OMEGA_LIE: &str = "omega-Lie superalgebra";

fn base(id: StatementId, s: &AlgebraSpaces) -> ReportBuilder {
    let mut b = ReportBuilder::new(id);
    b.hypothesis(OMEGA_LIE, s.jacobi_ok);
    b
}

pub fn check(s: &AlgebraSpaces, id: StatementId) -> Result<TheoremReport> {
    use SpaceKind::*;
    let sp = |k, c| s.get(k, c);
    Ok(match id {
        StatementId::Tower => {
            let mut b = base(id, s);
            for (k, c) in [
                (Der, true),
                (QDer, true),
                (GDer, true),
                (GDer, false),
                (ZDer, false),
                (Der, false),
                (QDer, false),
            ] {
                b.dim(&label(k, c), sp(k, c));
            }
            b.require(
                "Derω ⊆ QDerω",
                containment(sp(Der, true), sp(QDer, true), "Derω ⊆ QDerω"),
            )
            .require(
                "QDerω ⊆ GDerω",
                containment(sp(QDer, true), sp(GDer, true), "QDerω ⊆ GDerω"),
            )
            .require(
                "GDerω ⊆ GDer",
                containment(sp(GDer, true), sp(GDer, false), "GDerω ⊆ GDer"),
            )
            .require("ZDer ⊆ Der", containment(sp(ZDer, false), sp(Der, false), "ZDer ⊆ Der"))
            .require("Der ⊆ QDer", containment(sp(Der, false), sp(QDer, false), "Der ⊆ QDer"))
            .require(
                "QDer ⊆ GDer",
                containment(sp(QDer, false), sp(GDer, false), "QDer ⊆ GDer"),
            )
            .finish()
        }
        StatementId::CentroidTower => base(id, s)
            .dim("Cent", sp(Cent, false))
            .dim("QCent", sp(QCent, false))
            .dim("QDer", sp(QDer, false))
            .fact("QCent ⊆ GDer", sp(QCent, false).is_subspace_of(sp(GDer, false)))
            .require(
                "Cent ⊆ QCent",
                containment(sp(Cent, false), sp(QCent, false), "Cent ⊆ QCent"),
            )
            .require(
                "QCent ⊆ QDer",
                containment(sp(QCent, false), sp(QDer, false), "QCent ⊆ QDer"),
            )
            .finish(),
        StatementId::CompatibleSubalgebras => {
            let mut b = base(id, s);
            for k in [GDer, QDer, Der, Cent] {
                for c in [true, false] {
                    let l = label(k, c);
                    b.dim(&l, sp(k, c));
                    b.require(
                        &format!("[{l}, {l}] ⊆ {l}"),
                        bracket_inclusion(sp(k, c), sp(k, c), sp(k, c), &l),
                    );
                }
            }
            b.finish()
        }
        StatementId::ZderIdeal => base(id, s)
            .dim("ZDerω", sp(ZDer, true))
            .dim("Derω", sp(Der, true))
            .require(
                "ZDerω ⊆ Derω",
                containment(sp(ZDer, true), sp(Der, true), "ZDerω ⊆ Derω"),
            )
            .require(
                "[ZDerω, Derω] ⊆ ZDerω",
                bracket_inclusion(sp(ZDer, true), sp(Der, true), sp(ZDer, true), "[ZDerω, Derω]"),
            )
            .finish(),
        StatementId::ZderCompatible => base(id, s)
            .hypothesis("dim ≥ 3", s.dim >= 3)
            .dim("ZDer", sp(ZDer, false))
            .dim("ZDerω", sp(ZDer, true))
            .require(
                "ZDer = ZDerω",
                equality(sp(ZDer, false), sp(ZDer, true), "ZDer = ZDerω"),
            )
            .finish(),
        StatementId::DerCentBracket => base(id, s)
            .dim("Derω", sp(Der, true))
            .dim("Centω", sp(Cent, true))
            .require(
                "[Derω, Centω] ⊆ Centω",
                bracket_inclusion(sp(Der, true), sp(Cent, true), sp(Cent, true), "[Derω, Centω]"),
            )
            .finish(),
        StatementId::QderQcentBracket => base(id, s)
            .dim("QDerω", sp(QDer, true))
            .dim("QCentω", sp(QCent, true))
            .require(
                "[QDerω, QCentω] ⊆ QCentω",
                bracket_inclusion(sp(QDer, true), sp(QCent, true), sp(QCent, true), "[QDerω, QCentω]"),
            )
            .finish(),
        StatementId::QcentQcentBracket => base(id, s)
            .dim("QCentω", sp(QCent, true))
            .dim("QDerω", sp(QDer, true))
            .require(
                "[QCentω, QCentω] ⊆ QDerω",
                bracket_inclusion(sp(QCent, true), sp(QCent, true), sp(QDer, true), "[QCentω, QCentω]"),
            )
            .finish(),
        StatementId::CentInQder => base(id, s)
            .dim("Centω", sp(Cent, true))
            .dim("QDerω", sp(QDer, true))
            .require(
                "Centω ⊆ QDerω",
                containment(sp(Cent, true), sp(QDer, true), "Centω ⊆ QDerω"),
            )
            .finish(),
        StatementId::GderDecomposition => {
            let qder_eq = sp(QDer, true) == sp(QDer, false);
            let qc_eq = sp(QCent, true) == sp(QCent, false);
            let sum = sp(QDer, true).sum(sp(QCent, true));
            base(id, s)
                .hypothesis("QDerω = QDer or QCentω = QCent", qder_eq || qc_eq)
                .fact("QDerω = QDer", qder_eq)
                .fact("QCentω = QCent", qc_eq)
                .dim("GDerω", sp(GDer, true))
                .dim("QDerω", sp(QDer, true))
                .dim("QDer", sp(QDer, false))
                .dim("QCentω", sp(QCent, true))
                .dim("QCent", sp(QCent, false))
                .dim("QDerω + QCentω", &sum)
                .require(
                    "GDerω = QDerω + QCentω",
                    equality(sp(GDer, true), &sum, "GDerω = QDerω + QCentω"),
                )
                .finish()
        }
        StatementId::QcentIdeal => {
            let qc = sp(QCent, true);
            let ideal = qc.sum(&commutator_span(&s.parities, qc, qc));
            base(id, s)
                .dim("QCentω", qc)
                .dim("QCentω + [QCentω, QCentω]", &ideal)
                .dim("GDerω", sp(GDer, true))
                .require(
                    "ideal ⊆ GDerω",
                    containment(&ideal, sp(GDer, true), "QCentω + [QCentω, QCentω] ⊆ GDerω"),
                )
                .require(
                    "[GDerω, ideal] ⊆ ideal",
                    bracket_inclusion(sp(GDer, true), &ideal, &ideal, "[GDerω, QCentω + [QCentω, QCentω]]"),
                )
                .finish()
        }
        StatementId::CentQcentCenter => {
            let center = s.center.total()?;
            let mut b = base(id, s);
            b.fact("center is zero", s.center_trivial())
                .dim("Centω", sp(Cent, true))
                .dim("QCentω", sp(QCent, true));
            let mut outside = None;
            'outer: for d in sp(Cent, true).elements() {
                for e in sp(QCent, true).elements() {
                    let c = super_commutator(&d, &e);
                    for j in 0..s.dim {
                        if !center.contains(&c.image(j))? {
                            outside = Some(Counterexample {
                                description: format!("super-commutator maps basis vector {j} outside the center"),
                                maps: vec![d, e],
                                residual: Some(c),
                            });
                            break 'outer;
                        }
                    }
                }
            }
            b.require("[Centω, QCentω] maps into the center", outside);
            if s.center_trivial() {
                let zero = MapSpan::zero(&s.parities);
                let comms = commutator_span(&s.parities, sp(Cent, true), sp(QCent, true));
                b.require("[Centω, QCentω] = 0", equality(&comms, &zero, "[Centω, QCentω] = 0"));
            }
            b.finish()
        }
        StatementId::CentIntersection => {
            let meet = sp(QDer, true).intersect(sp(QCent, true));
            base(id, s)
                .hypothesis("center is zero", s.center_trivial())
                .dim("Centω", sp(Cent, true))
                .dim("QDerω ∩ QCentω", &meet)
                .require(
                    "Centω = QDerω ∩ QCentω",
                    equality(sp(Cent, true), &meet, "Centω = QDerω ∩ QCentω"),
                )
                .finish()
        }
        StatementId::QcentClosure => {
            let qc = sp(QCent, true);
            let comms = commutator_span(&s.parities, qc, qc);
            let closed = comms.is_subspace_of(qc);
            let zero = comms.dim() == 0;
            base(id, s)
                .hypothesis("center is zero", s.center_trivial())
                .dim("QCentω", qc)
                .dim("[QCentω, QCentω]", &comms)
                .fact("QCentω closed under the commutator", closed)
                .fact("[QCentω, QCentω] = 0", zero)
                .require_bool("closed ⇔ commutators vanish", closed == zero)
                .finish()
        }
        _ => return Err(Error::UnknownId(format!("{id} needs the extension algebra"))),
    })
}

/// Reports for every algebra-level statement.
pub fn check_all(s: &AlgebraSpaces) -> Vec<TheoremReport> {
    StatementId::ALGEBRA
        .iter()
        .map(|&id| check(s, id).expect("algebra-level statement"))
        .collect()
}

fn label(kind: SpaceKind, compatible: bool) -> String {
    if compatible {
        format!("{kind}ω")
    } else {
        kind.to_string()
    }
}
