//! Seeded sampling of derivation-space elements and matching of their Jordan
//! structures against the known shape lists for `H`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::JordanStructure;
use crate::catalog;
use crate::derivations::{GradedMapSpace, MapSpan, SolveOptions, SpaceKind};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::GaussianRational;
use crate::superalgebra::OmegaSuperAlgebra;

/// Jordan forms allowed for one family of spaces of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PatternSet {
    /// Elements of `GDer(H)`.
    Generalized,
    /// Elements of `GDerω(H)`.
    CompatibleGeneralized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// `diag(a, b, c)`.
    Diagonal,
    /// A 2-block at `a` and a 1-block at `b`.
    TwoOne,
    /// A single 3-block.
    Three,
    /// `diag(a, −a, b)`.
    DiagonalOpposite,
    /// A 2-block at `a` and a 1-block at `−a`.
    TwoOneOpposite,
    /// A 2-block at 0 and a 1-block at `c ≠ 0`.
    TwoZeroOneNonzero,
    /// A single 3-block at 0.
    ThreeZero,
}

impl Pattern {
    pub fn as_str(self) -> &'static str {
        match self {
            Pattern::Diagonal => "diagonal",
            Pattern::TwoOne => "two-one",
            Pattern::Three => "three",
            Pattern::DiagonalOpposite => "diagonal-opposite",
            Pattern::TwoOneOpposite => "two-one-opposite",
            Pattern::TwoZeroOneNonzero => "two-zero-one-nonzero",
            Pattern::ThreeZero => "three-zero",
        }
    }
}

impl PatternSet {
    pub fn patterns(self) -> &'static [Pattern] {
        match self {
            PatternSet::Generalized => &[Pattern::Diagonal, Pattern::TwoOne, Pattern::Three],
            PatternSet::CompatibleGeneralized => &[
                Pattern::DiagonalOpposite,
                Pattern::TwoOneOpposite,
                Pattern::TwoZeroOneNonzero,
                Pattern::ThreeZero,
            ],
        }
    }

    /// The shape list that applies to `span`, if the algebra is `H` and the
    /// span lies inside `GDer(H)` (or `GDerω(H)` when `compatible`).
    pub fn for_space(alg: &OmegaSuperAlgebra, span: &MapSpan, compatible: bool) -> Option<Self> {
        if alg.clone().with_name("H") != catalog::h() {
            return None;
        }
        let opts = if compatible {
            SolveOptions::compatible()
        } else {
            SolveOptions::plain()
        };
        let gder = GradedMapSpace::solve(alg, SpaceKind::GDer, opts).span();
        span.is_subspace_of(&gder).then_some(if compatible {
            PatternSet::CompatibleGeneralized
        } else {
            PatternSet::Generalized
        })
    }
}

/// First pattern of `set` matching `j`.
pub fn match_pattern(set: PatternSet, j: &JordanStructure) -> Option<Pattern> {
    let blocks = j.blocks();
    let sizes: Vec<usize> = blocks.iter().map(|b| b.1).collect();
    let value = |size: usize| blocks.iter().find(|b| b.1 == size).map(|b| b.0.clone());
    let matches = |p: &Pattern| match p {
        Pattern::Diagonal => sizes.iter().all(|&s| s == 1) && sizes.len() == 3,
        Pattern::TwoOne => {
            let mut s = sizes.clone();
            s.sort_unstable();
            s == [1, 2]
        }
        Pattern::Three => sizes == [3],
        Pattern::DiagonalOpposite => {
            sizes.len() == 3
                && sizes.iter().all(|&s| s == 1)
                && (0..3).any(|a| (0..3).any(|b| a != b && (&blocks[a].0 + &blocks[b].0).is_zero()))
        }
        Pattern::TwoOneOpposite => match (value(2), value(1)) {
            (Some(a), Some(b)) if sizes.len() == 2 => (&a + &b).is_zero(),
            _ => false,
        },
        Pattern::TwoZeroOneNonzero => match (value(2), value(1)) {
            (Some(a), Some(c)) if sizes.len() == 2 => a.is_zero() && !c.is_zero(),
            _ => false,
        },
        Pattern::ThreeZero => sizes == [3] && blocks[0].0.is_zero(),
    };
    set.patterns().iter().copied().find(matches)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleMode {
    Even,
    Odd,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub index: usize,
    pub mode: SampleMode,
    pub matrix: Matrix,
    pub jordan: JordanStructure,
    pub shape: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pattern: Option<Pattern>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub algebra: String,
    pub kind: SpaceKind,
    pub compatible: bool,
    pub seed: u64,
    pub requested: usize,
    pub classified: usize,
    pub pattern_set: Option<PatternSet>,
    pub by_pattern: BTreeMap<&'static str, usize>,
    pub by_shape: BTreeMap<String, usize>,
    /// Draws whose characteristic polynomial does not split over ℚ(i).
    pub not_split: usize,
    pub zero_rejected: usize,
    /// Stopped before `requested` samples because of too many failed draws.
    pub exhausted: bool,
    /// First sample of each pattern or shape.
    pub examples: BTreeMap<String, SampleReport>,
    pub mismatches: Vec<SampleReport>,
}

impl Tally {
    /// Every classified sample matched the applicable shape list.
    pub fn all_match(&self) -> bool {
        self.pattern_set.is_some() && self.mismatches.is_empty() && self.classified == self.requested
    }
}

/// Draws `count` random nonzero elements of the space and classifies their
/// Jordan structures. Coefficients of the basis elements have real and
/// imaginary parts in `{−3..3}`; draws cycle through even-only, odd-only and
/// mixed combinations. Draws that do not split over ℚ(i) are redrawn.
pub fn classify_samples(
    alg: &OmegaSuperAlgebra,
    kind: SpaceKind,
    compatible: bool,
    count: usize,
    seed: u64,
) -> Result<Tally> {
    let opts = if compatible {
        SolveOptions::compatible()
    } else {
        SolveOptions::plain()
    };
    let space = GradedMapSpace::solve(alg, kind, opts);
    let span = space.span();
    let pattern_set = PatternSet::for_space(alg, &span, compatible);
    let mut tally = Tally {
        algebra: alg.name().to_string(),
        kind,
        compatible,
        seed,
        requested: count,
        classified: 0,
        pattern_set,
        by_pattern: BTreeMap::new(),
        by_shape: BTreeMap::new(),
        not_split: 0,
        zero_rejected: 0,
        exhausted: false,
        examples: BTreeMap::new(),
        mismatches: Vec::new(),
    };
    let even = space.even.elements();
    let odd = space.odd.elements();
    let mut modes = Vec::new();
    if !even.is_empty() {
        modes.push(SampleMode::Even);
    }
    if !odd.is_empty() {
        modes.push(SampleMode::Odd);
    }
    if !even.is_empty() && !odd.is_empty() {
        modes.push(SampleMode::Mixed);
    }
    if modes.is_empty() {
        tally.exhausted = count > 0;
        return Ok(tally);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.dim();
    let budget = 100 * count.max(1);
    let mut attempts = 0;
    while tally.classified < count {
        if attempts == budget {
            tally.exhausted = true;
            break;
        }
        attempts += 1;
        let mode = modes[tally.classified % modes.len()];
        let parts: Vec<_> = match mode {
            SampleMode::Even => even.iter().collect(),
            SampleMode::Odd => odd.iter().collect(),
            SampleMode::Mixed => even.iter().chain(odd.iter()).collect(),
        };
        let mut m = Matrix::zeros(n, n);
        for d in parts {
            let c = GaussianRational::gaussian(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
            m = &m + &d.matrix().scale(&c);
        }
        if m.is_zero() {
            tally.zero_rejected += 1;
            continue;
        }
        let jordan = match JordanStructure::of(&m) {
            Ok(j) => j,
            Err(Error::NotSplit { .. }) => {
                tally.not_split += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        let shape = jordan.shape();
        let pattern = pattern_set.and_then(|set| match_pattern(set, &jordan));
        let report = SampleReport {
            index: tally.classified,
            mode,
            matrix: m,
            jordan,
            shape: shape.clone(),
            pattern,
        };
        *tally.by_shape.entry(shape.clone()).or_default() += 1;
        let key = match (pattern_set, pattern) {
            (Some(_), Some(p)) => {
                *tally.by_pattern.entry(p.as_str()).or_default() += 1;
                p.as_str().to_string()
            }
            (Some(_), None) => {
                tally.mismatches.push(report.clone());
                format!("mismatch {shape}")
            }
            (None, _) => shape,
        };
        tally.examples.entry(key).or_insert(report);
        tally.classified += 1;
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(m: &[&[i64]]) -> JordanStructure {
        JordanStructure::of(&Matrix::from_i64(m)).unwrap()
    }

    #[test]
    fn compatible_patterns() {
        use Pattern::*;
        let set = PatternSet::CompatibleGeneralized;
        assert_eq!(
            match_pattern(set, &j(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 5]])),
            Some(DiagonalOpposite)
        );
        assert_eq!(
            match_pattern(set, &j(&[&[2, 0, 0], &[1, 2, 0], &[0, 0, -2]])),
            Some(TwoOneOpposite)
        );
        assert_eq!(
            match_pattern(set, &j(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 3]])),
            Some(TwoZeroOneNonzero)
        );
        assert_eq!(
            match_pattern(set, &j(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])),
            Some(ThreeZero)
        );
        assert_eq!(match_pattern(set, &j(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])), None);
        assert_eq!(match_pattern(set, &j(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]])), None);
        // a = 0 in the second pattern
        assert_eq!(
            match_pattern(set, &j(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]])),
            Some(TwoOneOpposite)
        );
    }

    #[test]
    fn generalized_patterns() {
        use Pattern::*;
        let set = PatternSet::Generalized;
        assert_eq!(
            match_pattern(set, &j(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])),
            Some(Diagonal)
        );
        assert_eq!(
            match_pattern(set, &j(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]])),
            Some(TwoOne)
        );
        assert_eq!(
            match_pattern(set, &j(&[&[1, 0, 0], &[1, 1, 0], &[0, 1, 1]])),
            Some(Three)
        );
    }

    #[test]
    fn pattern_set_selection() {
        let h = catalog::h();
        let g = GradedMapSpace::solve(&h, SpaceKind::GDer, SolveOptions::plain()).span();
        assert_eq!(PatternSet::for_space(&h, &g, false), Some(PatternSet::Generalized));
        assert_eq!(PatternSet::for_space(&h, &g, true), None);
        let ab = catalog::abelian3();
        let e = MapSpan::full(ab.parities());
        assert_eq!(PatternSet::for_space(&ab, &e, false), None);
    }

    #[test]
    fn sampling_is_deterministic() {
        let h = catalog::h();
        let a = classify_samples(&h, SpaceKind::GDer, true, 12, 5).unwrap();
        let b = classify_samples(&h, SpaceKind::GDer, true, 12, 5).unwrap();
        assert_eq!(a, b);
        assert!(a.all_match());
    }

    #[test]
    fn empty_space() {
        let h = catalog::h();
        let t = classify_samples(&h, SpaceKind::ZDer, false, 3, 1).unwrap();
        assert!(t.exhausted);
        assert_eq!(t.classified, 0);
    }

    #[test]
    fn requested_count_reached() {
        let h = catalog::h();
        let t = classify_samples(&h, SpaceKind::GDer, false, 9, 2).unwrap();
        assert_eq!(t.classified, 9);
    }
}
