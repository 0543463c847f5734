//! Built-in algebras.

use crate::error::{Error, Result};
use crate::scalar::GaussianRational;
use crate::superalgebra::{AlgebraBuilder, OmegaSuperAlgebra};

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub algebra: OmegaSuperAlgebra,
    pub notes: &'static str,
    /// Whether the entry satisfies the graded ω-Jacobi identity.
    pub omega_lie: bool,
}

pub const IDS: [&str; 4] = ["H", "abelian3", "heisenberg-like-lie-super", "centerless-lie-super"];

fn one() -> GaussianRational {
    GaussianRational::from_integer(1)
}

/// The 3-dimensional ω-Lie superalgebra `H`: `[x₁,x₂] = x₁`, `[x₁,y] = y`,
/// `ω(x₁,x₂) = 1 = -ω(x₂,x₁)`.
pub fn h() -> OmegaSuperAlgebra {
    AlgebraBuilder::new("H")
        .even("x1")
        .even("x2")
        .odd("y")
        .bracket("x1", "x2", vec![(one(), "x1".into())])
        .bracket("x1", "y", vec![(one(), "y".into())])
        .omega("x1", "x2", one())
        .omega("x2", "x1", -one())
        .build()
        .expect("H is well formed")
}

pub fn abelian3() -> OmegaSuperAlgebra {
    AlgebraBuilder::new("abelian3")
        .even("a1")
        .even("a2")
        .odd("b")
        .build()
        .expect("abelian3 is well formed")
}

/// Lie superalgebra (ω ≡ 0) with `[y₁,y₁] = [y₂,y₂] = z`; its center is `span{z}`.
pub fn heisenberg_like() -> OmegaSuperAlgebra {
    AlgebraBuilder::new("heisenberg-like-lie-super")
        .even("z")
        .odd("y1")
        .odd("y2")
        .bracket("y1", "y1", vec![(one(), "z".into())])
        .bracket("y2", "y2", vec![(one(), "z".into())])
        .build()
        .expect("heisenberg-like is well formed")
}

/// Centerless Lie superalgebra (ω ≡ 0): `[h,y₁] = y₁`, `[h,y₂] = -y₂`.
pub fn centerless() -> OmegaSuperAlgebra {
    AlgebraBuilder::new("centerless-lie-super")
        .even("h")
        .odd("y1")
        .odd("y2")
        .bracket("h", "y1", vec![(one(), "y1".into())])
        .bracket("h", "y2", vec![(-one(), "y2".into())])
        .build()
        .expect("centerless is well formed")
}

pub fn get(id: &str) -> Result<CatalogEntry> {
    let entry = match id {
        "H" => CatalogEntry {
            id: "H",
            algebra: h(),
            notes: "3-dimensional complex omega-Lie superalgebra H; omega(x2,x1) = -1 completes omega skew on the even part",
            omega_lie: true,
        },
        "abelian3" => CatalogEntry {
            id: "abelian3",
            algebra: abelian3(),
            notes: "abelian, omega = 0, two even and one odd generator",
            omega_lie: true,
        },
        "heisenberg-like-lie-super" => CatalogEntry {
            id: "heisenberg-like-lie-super",
            algebra: heisenberg_like(),
            notes: "Lie superalgebra (omega = 0) with nonzero center",
            omega_lie: true,
        },
        "centerless-lie-super" => CatalogEntry {
            id: "centerless-lie-super",
            algebra: centerless(),
            notes: "centerless Lie superalgebra (omega = 0)",
            omega_lie: true,
        },
        _ => return Err(Error::UnknownId(id.to_owned())),
    };
    Ok(entry)
}

pub fn entries() -> Vec<CatalogEntry> {
    IDS.iter().map(|id| get(id).expect("listed id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn all_entries_satisfy_their_flags() {
        for e in entries() {
            let report = e.algebra.validate();
            assert!(report.closure_ok && report.skew_ok && report.mixed_omega_ok, "{}", e.id);
            assert_eq!(report.jacobi_ok, e.omega_lie, "{}", e.id);
            assert_eq!(e.algebra.name(), e.id);
        }
    }

    #[test]
    fn h_relations() {
        let e = get("H").unwrap();
        let a = &e.algebra;
        let (x1, y) = (a.index_of("x1").unwrap(), a.index_of("y").unwrap());
        assert_eq!(a.bracket_basis(x1, y), a.unit(y).as_slice());
    }

    #[test]
    fn abelian_constants_vanish() {
        let a = get("abelian3").unwrap().algebra;
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                assert!(a.bracket_basis(i, j).iter().all(Zero::is_zero));
            }
        }
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(get("L1"), Err(Error::UnknownId(_))));
    }
}
