mod common;

use gderiv::extension::ExtensionSpaces;
use gderiv::jordan::eigenvalues;
use gderiv::random::RandomAlgebras;
use gderiv::theorems::check_all;
use gderiv::{
    char_poly, load_algebra, super_commutator, AlgebraSpaces, Error, GaussianRational as Q, GradedMapSpace,
    JordanStructure, Matrix, OmegaSuperAlgebra, Parity, SolveOptions, SpaceKind, StatementId, Subspace, Verdict,
};
use num_traits::Zero;
use proptest::prelude::*;

fn algebra() -> impl Strategy<Value = OmegaSuperAlgebra> {
    any::<u64>().prop_map(|seed| RandomAlgebras::new(seed, 4).next().unwrap())
}

fn scalar() -> impl Strategy<Value = Q> {
    (-3i64..=3, -3i64..=3).prop_map(|(re, im)| Q::gaussian(re, im))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![2 => Just(Q::zero()), 3 => scalar()], r * c)
            .prop_map(move |v| Matrix::from_fn(r, c, |i, j| v[i * c + j].clone()))
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(scalar(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
    })
}

/// Conjugates a lower-triangular matrix by a unipotent upper-triangular one,
/// giving a matrix that always splits over ℚ(i).
fn split_square(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(scalar(), n * n),
            prop::collection::vec(-1i64..=1, n * n),
        )
            .prop_map(move |(l, u)| {
                let low = Matrix::from_fn(n, n, |i, j| if j <= i { l[i * n + j].clone() } else { Q::zero() });
                let up = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => Q::from_integer(1),
                    std::cmp::Ordering::Less => Q::from_integer(u[i * n + j]),
                    _ => Q::zero(),
                });
                let inv = up.inverse().unwrap();
                &(&up * &low) * &inv
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in matrix(5, 6)) {
        prop_assert_eq!(m.rank() + Subspace::kernel(&m).dim(), m.cols());
    }

    #[test]
    fn rref_idempotent(m in matrix(5, 6)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn modular_law_and_membership(a in matrix(3, 5), b in matrix(3, 5)) {
        prop_assume!(a.cols() == b.cols());
        let (a, b) = (Subspace::row_space(&a), Subspace::row_space(&b));
        let sum = a.sum(&b).unwrap();
        let meet = a.intersect(&b).unwrap();
        prop_assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
        for v in a.basis().iter().chain(b.basis()) {
            prop_assert!(a.contains(v).unwrap() || b.contains(v).unwrap());
            prop_assert!(sum.contains(v).unwrap());
        }
        for v in meet.basis() {
            prop_assert!(a.contains(v).unwrap() && b.contains(v).unwrap());
        }
    }

    #[test]
    fn bracket_is_graded_skew(alg in algebra()) {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                let sign = alg.parity(i).sign(alg.parity(j));
                let lhs = alg.bracket_basis(i, j).to_vec();
                let rhs: Vec<Q> = alg.bracket_basis(j, i).iter().map(|c| -(&sign * c)).collect();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn derived_plus_complement_is_everything(alg in algebra()) {
        let derived = alg.derived_subalgebra();
        let complement = alg.graded_complement(&derived).unwrap();
        for p in Parity::BOTH {
            let (d, c) = (derived.part(p), complement.part(p));
            prop_assert_eq!(d.dim() + c.dim(), alg.homogeneous_part(p).dim());
            prop_assert!(d.intersect(c).unwrap().is_zero());
        }
    }

    #[test]
    fn center_kills_omega(alg in algebra()) {
        prop_assume!(alg.dim() >= 3);
        let center = alg.center();
        for p in Parity::BOTH {
            for z in center.part(p).basis() {
                for v in 0..alg.dim() {
                    prop_assert!(alg.omega_eval(z, &alg.unit(v)).is_zero());
                }
            }
        }
    }

    #[test]
    fn document_round_trip(alg in algebra()) {
        prop_assert_eq!(load_algebra(&alg.to_json()).unwrap(), alg);
    }

    #[test]
    fn tower(alg in algebra()) {
        let s = AlgebraSpaces::compute(&alg);
        let sp = |k, c| s.get(k, c);
        use SpaceKind::*;
        let chains = [
            (sp(ZDer, false), sp(Der, false)),
            (sp(Der, false), sp(QDer, false)),
            (sp(QDer, false), sp(GDer, false)),
            (sp(Cent, false), sp(QCent, false)),
            (sp(Der, true), sp(QDer, true)),
            (sp(QDer, true), sp(GDer, true)),
            (sp(GDer, true), sp(GDer, false)),
        ];
        for (a, b) in chains {
            prop_assert!(a.is_subspace_of(b));
        }
        prop_assert!(sp(GDer, false).is_subspace_of(&s.end()));
    }

    #[test]
    fn closure_under_super_commutator(alg in algebra()) {
        for kind in [SpaceKind::GDer, SpaceKind::QDer, SpaceKind::Der, SpaceKind::Cent] {
            let space = GradedMapSpace::solve(&alg, kind, SolveOptions::plain());
            let elems = space.elements();
            for d in &elems {
                for e in &elems {
                    prop_assert!(space.contains(&super_commutator(d, e)), "{} not closed", kind);
                }
            }
        }
    }

    #[test]
    fn compatibility_is_linear_and_closed(alg in algebra(), a in scalar(), b in scalar()) {
        let space = GradedMapSpace::solve(&alg, SpaceKind::Der, SolveOptions::compatible());
        let gder = GradedMapSpace::solve(&alg, SpaceKind::GDer, SolveOptions::compatible());
        for p in Parity::BOTH {
            let elems = gder.part(p).elements();
            for pair in elems.windows(2) {
                let combo = pair[0].scale(&a).plus(&pair[1].scale(&b));
                prop_assert!(gderiv::derivations::is_compatible(&alg, &combo));
            }
        }
        for d in space.elements() {
            for e in space.elements() {
                prop_assert!(gderiv::derivations::is_compatible(&alg, &super_commutator(&d, &e)));
            }
        }
    }

    #[test]
    fn reports_consistent(alg in algebra()) {
        let s = AlgebraSpaces::compute(&alg);
        for report in check_all(&s) {
            if report.statement == StatementId::CentroidTower {
                prop_assert!(report.facts["QCent ⊆ GDer"]);
                continue;
            }
            prop_assert!(!report.is_falsified(), "{} falsified on {}", report.statement, alg.to_json());
            if report.conclusion == Verdict::NotApplicable {
                prop_assert!(report.counterexample.is_none());
            }
        }
        let gder = GradedMapSpace::solve(&alg, SpaceKind::GDer, SolveOptions::plain());
        prop_assert_eq!(s.get(SpaceKind::GDer, false).dim(), gder.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn extension_invariants(alg in algebra()) {
        let ext = ExtensionSpaces::compute(&alg).unwrap();
        let n = alg.dim();
        for phi in &ext.phi_qder {
            let t_block = Matrix::from_fn(n, n, |r, c| phi.map.matrix()[(r, c)].clone());
            prop_assert_eq!(&t_block, phi.d.matrix());
            prop_assert!(ext.der.contains(&phi.map));
        }
        prop_assert!(ext.phi_qder_omega_span().is_subspace_of(&ext.der_omega));
        let zder = ext.zder.elements();
        for z in &zder {
            prop_assert!(gderiv::derivations::satisfies_identity(&ext.breve.breve, SpaceKind::ZDer, std::slice::from_ref(z)));
        }
        for report in ext.check_all().unwrap() {
            prop_assert!(!report.is_falsified(), "{} falsified", report.statement);
        }
    }

    #[test]
    fn phi_is_linear(alg in algebra(), a in scalar()) {
        let ext = ExtensionSpaces::compute(&alg).unwrap();
        for p in Parity::BOTH {
            let space = ext.qder.part(p);
            let phis: Vec<_> = ext.phi_qder.iter().filter(|m| m.d.degree() == p).collect();
            for pair in phis.windows(2) {
                let d = pair[0].d.scale(&a).plus(&pair[1].d);
                let lhs = ext.breve.phi(&d, space).unwrap().map;
                let rhs = pair[0].map.scale(&a).plus(&pair[1].map);
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(m in square(6)) {
        let p = char_poly(&m).unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), m.rows());
        prop_assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn multiplicities_sum_to_degree(m in square(4)) {
        match eigenvalues(&m) {
            Ok(roots) => prop_assert_eq!(roots.iter().map(|r| r.1).sum::<usize>(), m.rows()),
            Err(Error::NotSplit { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn rank_profile_matches(m in split_square(5)) {
        let j = JordanStructure::of(&m).unwrap();
        let jm = j.jordan_matrix();
        let total: usize = j.block_sizes().iter().sum();
        prop_assert_eq!(total, m.rows());
        for (lambda, _) in j.blocks() {
            for k in 1..=m.rows() as u32 {
                prop_assert_eq!(m.shift(&lambda).pow(k).rank(), jm.shift(&lambda).pow(k).rank());
            }
        }
    }
}
